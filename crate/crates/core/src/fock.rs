//! The graded basis of the degree-n Fock component F[w]_n, the extended
//! Hall inner product, and vector arithmetic in that space.
//!
//! Basis elements are monomials V_mu w^l with |mu| + l = n. Coefficients
//! are `Rational` in specialized mode or `ParamPoly` in symbolic mode;
//! the two never mix (they are distinct vector types).

use crate::exactalg::{format_rational, parse_rational, ParamPoly, Rational, Scalar};
use crate::partitions::{enumerate_partitions, Partition};
use crate::{Error, Result};
use num::Zero;
use serde_json::{json, Value};
use std::collections::BTreeMap;

/// Index of the basis monomial V_mu w^l.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct BasisIndex {
    pub l: u32,
    pub mu: Partition,
}

impl BasisIndex {
    pub fn new(mu: Partition, l: u32) -> Self {
        BasisIndex { l, mu }
    }

    pub fn degree(&self) -> u32 {
        self.mu.size() + self.l
    }
}

/// All basis indices of F[w]_n: l ascending, partitions in their
/// standard order within each l. Length is sum of p(l) for l <= n.
pub fn basis(n: u32) -> Vec<BasisIndex> {
    let mut out = Vec::new();
    for l in 0..=n {
        for mu in enumerate_partitions(n - l) {
            out.push(BasisIndex::new(mu, l));
        }
    }
    out
}

/// dim F[w]_n = sum of p(l), l <= n.
pub fn dimension(n: u32) -> usize {
    crate::partitions::partition_counts(n)
        .iter()
        .map(|&c| c as usize)
        .sum()
}

/// Squared Hall norm of V_mu w^l: product over part sizes k of
/// (hbar*k)^{d_k} * d_k!, independent of l.
pub fn norm_sq<T: Scalar>(idx: &BasisIndex, hbar: &T) -> T {
    let mut acc = T::one();
    for (k, d) in idx.mu.multiplicities() {
        let hk = hbar.mul_ref(&T::from_int(k as i64));
        for _ in 0..d {
            acc = acc.mul_ref(&hk);
        }
        for j in 2..=d {
            acc = acc.mul_ref(&T::from_int(j as i64));
        }
    }
    acc
}

/// An element of F[w]_n; no zero coefficients stored.
#[derive(Clone, PartialEq, Debug)]
pub struct FockVector<T: Scalar> {
    n: u32,
    terms: BTreeMap<BasisIndex, T>,
}

impl<T: Scalar> FockVector<T> {
    pub fn zero_vec(n: u32) -> Self {
        FockVector { n, terms: BTreeMap::new() }
    }

    pub fn basis_vector(n: u32, idx: BasisIndex) -> Self {
        let mut v = Self::zero_vec(n);
        v.add_term(idx, T::one());
        v
    }

    pub fn degree(&self) -> u32 {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BasisIndex, &T)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero_vec(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, idx: &BasisIndex) -> T {
        self.terms.get(idx).cloned().unwrap_or_else(T::zero)
    }

    /// Accumulates `c` onto the coefficient at `idx`, dropping zeros.
    pub fn add_term(&mut self, idx: BasisIndex, c: T) {
        assert_eq!(idx.degree(), self.n, "index degree must match vector degree");
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(idx);
        match entry {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let v = e.get().add_ref(&c);
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(format!(
                "degree {} vs {}",
                self.n, other.n
            )));
        }
        let mut out = self.clone();
        for (idx, c) in &other.terms {
            out.add_term(idx.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale_by(&T::one().neg()))
    }

    pub fn scale_by(&self, c: &T) -> Self {
        if c.is_zero() {
            return Self::zero_vec(self.n);
        }
        let terms = self
            .terms
            .iter()
            .map(|(k, v)| (k.clone(), v.mul_ref(c)))
            .filter(|(_, v)| !v.is_zero())
            .collect();
        FockVector { n: self.n, terms }
    }

    /// Coefficient slice at w-power l, keyed by partition.
    pub fn pi_l(&self, l: u32) -> BTreeMap<Partition, T> {
        self.terms
            .iter()
            .filter(|(idx, _)| idx.l == l)
            .map(|(idx, c)| (idx.mu.clone(), c.clone()))
            .collect()
    }

    /// Coordinates with respect to a basis order.
    pub fn to_coords(&self, order: &[BasisIndex]) -> Vec<T> {
        debug_assert_eq!(order.len(), dimension(self.n));
        order.iter().map(|idx| self.coeff(idx)).collect()
    }

    pub fn from_coords(n: u32, order: &[BasisIndex], coords: &[T]) -> Self {
        assert_eq!(order.len(), coords.len());
        let mut v = Self::zero_vec(n);
        for (idx, c) in order.iter().zip(coords) {
            v.add_term(idx.clone(), c.clone());
        }
        v
    }
}

/// Extended Hall inner product. All coefficients here are real
/// (rational or polynomial with rational coefficients), so the bilinear
/// form without conjugation agrees with the Hermitian one.
pub fn inner<T: Scalar>(x: &FockVector<T>, y: &FockVector<T>, hbar: &T) -> Result<T> {
    if x.degree() != y.degree() {
        return Err(Error::DimensionMismatch(format!(
            "degree {} vs {}",
            x.degree(),
            y.degree()
        )));
    }
    let mut acc = T::zero();
    for (idx, a) in x.terms() {
        let b = y.coeff(idx);
        if b.is_zero() {
            continue;
        }
        acc = acc.add_ref(&a.mul_ref(&b).mul_ref(&norm_sq(idx, hbar)));
    }
    Ok(acc)
}

impl FockVector<Rational> {
    /// Substitutes every V_k := z and w := w_val.
    pub fn principal_specialize(&self, w_val: &Rational, z: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for (idx, c) in self.terms() {
            let mut t = c.clone();
            for _ in 0..idx.mu.len() {
                t *= z;
            }
            for _ in 0..idx.l {
                t *= w_val;
            }
            acc += t;
        }
        acc
    }
}

impl FockVector<ParamPoly> {
    /// Specializes the parameters, then every V_k := z and w := w_val.
    pub fn principal_specialize(
        &self,
        w_val: &Rational,
        z: &Rational,
        e1: &Rational,
        e2: &Rational,
    ) -> Rational {
        self.specialize(e1, e2).principal_specialize(w_val, z)
    }

    /// Evaluates every coefficient at (e1, e2).
    pub fn specialize(&self, e1: &Rational, e2: &Rational) -> FockVector<Rational> {
        let mut v = FockVector::zero_vec(self.n);
        for (idx, c) in self.terms() {
            v.add_term(idx.clone(), c.eval(e1, e2));
        }
        v
    }
}

fn coeff_to_json(c: &Value) -> Value {
    c.clone()
}

impl FockVector<Rational> {
    pub fn to_json(&self, eps: Option<(&Rational, &Rational)>) -> Value {
        let terms: Vec<Value> = self
            .terms()
            .map(|(idx, c)| {
                json!({"mu": idx.mu.to_json(), "l": idx.l, "coeff": format_rational(c)})
            })
            .collect();
        let mut obj = json!({"n": self.n, "mode": "specialized", "terms": terms});
        if let Some((e1, e2)) = eps {
            obj["eps"] = json!([format_rational(e1), format_rational(e2)]);
        }
        coeff_to_json(&obj)
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let n = v["n"]
            .as_u64()
            .ok_or_else(|| Error::InvalidInput("missing n".into()))? as u32;
        let mut out = FockVector::zero_vec(n);
        for t in v["terms"]
            .as_array()
            .ok_or_else(|| Error::InvalidInput("missing terms".into()))?
        {
            let mu = Partition::from_json(&t["mu"])?;
            let l = t["l"]
                .as_u64()
                .ok_or_else(|| Error::InvalidInput("missing l".into()))? as u32;
            let c = parse_rational(
                t["coeff"]
                    .as_str()
                    .ok_or_else(|| Error::InvalidInput("missing coeff".into()))?,
            )?;
            out.add_term(BasisIndex::new(mu, l), c);
        }
        Ok(out)
    }
}

impl FockVector<ParamPoly> {
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms()
            .map(|(idx, c)| json!({"mu": idx.mu.to_json(), "l": idx.l, "coeff": c.to_json()}))
            .collect();
        json!({"n": self.n, "mode": "symbolic", "terms": terms})
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let n = v["n"]
            .as_u64()
            .ok_or_else(|| Error::InvalidInput("missing n".into()))? as u32;
        let mut out = FockVector::zero_vec(n);
        for t in v["terms"]
            .as_array()
            .ok_or_else(|| Error::InvalidInput("missing terms".into()))?
        {
            let mu = Partition::from_json(&t["mu"])?;
            let l = t["l"]
                .as_u64()
                .ok_or_else(|| Error::InvalidInput("missing l".into()))? as u32;
            let c = ParamPoly::from_json(&t["coeff"])?;
            out.add_term(BasisIndex::new(mu, l), c);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{rat, rat_int};

    fn part(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn basis_small_degrees() {
        assert_eq!(basis(0), vec![BasisIndex::new(Partition::empty(), 0)]);
        assert_eq!(
            basis(1),
            vec![
                BasisIndex::new(part(&[1]), 0),
                BasisIndex::new(Partition::empty(), 1)
            ]
        );
        assert_eq!(basis(3).len(), 7);
    }

    #[test]
    fn dimension_formula() {
        for n in 0..=12u32 {
            let expect: usize = crate::partitions::partition_counts(n)
                .iter()
                .map(|&c| c as usize)
                .sum();
            assert_eq!(basis(n).len(), expect);
            assert_eq!(dimension(n), expect);
        }
    }

    #[test]
    fn norm_sq_examples() {
        let h = rat_int(6);
        assert_eq!(norm_sq(&BasisIndex::new(Partition::empty(), 5), &h), rat_int(1));
        assert_eq!(norm_sq(&BasisIndex::new(part(&[2]), 0), &h), rat_int(12));
        // ((1,1), 3): (hbar*1)^2 * 2!
        assert_eq!(norm_sq(&BasisIndex::new(part(&[1, 1]), 3), &h), rat_int(72));
    }

    #[test]
    fn inner_orthogonality_and_norms() {
        let h = rat_int(6);
        let v1 = FockVector::basis_vector(1, BasisIndex::new(part(&[1]), 0));
        let w = FockVector::basis_vector(1, BasisIndex::new(Partition::empty(), 1));
        assert_eq!(inner(&v1, &v1, &h).unwrap(), rat_int(6));
        assert_eq!(inner(&v1, &w, &h).unwrap(), rat_int(0));
        assert!(inner(&v1, &FockVector::zero_vec(2), &h).is_err());
    }

    #[test]
    fn inner_bilinear_symmetric() {
        let h = rat(3, 2);
        let mut x: FockVector<Rational> = FockVector::zero_vec(3);
        x.add_term(BasisIndex::new(part(&[2, 1]), 0), rat_int(2));
        x.add_term(BasisIndex::new(part(&[1]), 2), rat(-1, 3));
        let mut y = FockVector::zero_vec(3);
        y.add_term(BasisIndex::new(part(&[2, 1]), 0), rat(5, 7));
        y.add_term(BasisIndex::new(Partition::empty(), 3), rat_int(4));
        assert_eq!(inner(&x, &y, &h).unwrap(), inner(&y, &x, &h).unwrap());
        let z = x.add(&y).unwrap();
        assert_eq!(
            inner(&z, &y, &h).unwrap(),
            inner(&x, &y, &h).unwrap() + inner(&y, &y, &h).unwrap()
        );
    }

    #[test]
    fn pi_l_slices_and_reassembly() {
        let mut x: FockVector<Rational> = FockVector::zero_vec(2);
        x.add_term(BasisIndex::new(part(&[2]), 0), rat_int(1));
        x.add_term(BasisIndex::new(part(&[1]), 1), rat_int(3));
        x.add_term(BasisIndex::new(Partition::empty(), 2), rat(1, 2));
        let mut rebuilt = FockVector::zero_vec(2);
        for l in 0..=2 {
            for (mu, c) in x.pi_l(l) {
                assert_eq!(mu.size() + l, 2);
                rebuilt.add_term(BasisIndex::new(mu, l), c);
            }
        }
        assert_eq!(rebuilt, x);
    }

    #[test]
    fn principal_specialization_of_j2() {
        // j2 = V1^2 + e1*V2 at V := 1, (e1,e2) = (2,-3) -> 1 + 2 = 3
        let mut j2: FockVector<ParamPoly> = FockVector::zero_vec(2);
        j2.add_term(BasisIndex::new(part(&[1, 1]), 0), num::One::one());
        j2.add_term(BasisIndex::new(part(&[2]), 0), ParamPoly::e1());
        let v = j2.principal_specialize(&rat_int(0), &rat_int(1), &rat_int(2), &rat_int(-3));
        assert_eq!(v, rat_int(3));

        // a pure w^3 term dies at w = 0
        let mut x: FockVector<Rational> = FockVector::zero_vec(3);
        x.add_term(BasisIndex::new(Partition::empty(), 3), rat_int(9));
        assert_eq!(x.principal_specialize(&rat_int(0), &rat_int(5)), rat_int(0));
    }

    #[test]
    fn json_roundtrip() {
        let mut x: FockVector<Rational> = FockVector::zero_vec(2);
        x.add_term(BasisIndex::new(part(&[2]), 0), rat(7, 3));
        x.add_term(BasisIndex::new(Partition::empty(), 2), rat_int(-1));
        let v = x.to_json(Some((&rat_int(2), &rat_int(-3))));
        assert_eq!(FockVector::<Rational>::from_json(&v).unwrap(), x);
    }
}
