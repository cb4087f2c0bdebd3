//! Symbolic reconstruction of the normalized eigenfunctions, the
//! integrality evidence ledger, the transposition symmetry, and the
//! principal specialization identities.

use crate::exactalg::{interpolate_homogeneous, ParamPoly, Rational, rat_int};
use crate::fock::{BasisIndex, FockVector};
use crate::jack::compute_jacks;
use crate::partitions::{corners, enumerate_partitions, Cell, Partition};
use crate::spectral::{build_cyclic_from, eigenfunctions, EigenSystem};
use crate::{Error, Result};
use num::{One, Zero};
use rayon::prelude::*;
use serde_json::{json, Value};
use std::collections::BTreeMap;

/// Symbolic expansion of one normalized eigenfunction: coefficients of
/// V_mu w^l as polynomials in the two parameters.
#[derive(Clone, Debug)]
pub struct PsiExpansion {
    pub lambda: Partition,
    pub s: Cell,
    pub n: u32,
    coeffs: BTreeMap<(Partition, u32), ParamPoly>,
}

impl PsiExpansion {
    pub fn coeff(&self, mu: &Partition, l: u32) -> ParamPoly {
        self.coeffs
            .get(&(mu.clone(), l))
            .cloned()
            .unwrap_or_else(ParamPoly::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(Partition, u32), &ParamPoly)> {
        self.coeffs.iter()
    }

    /// The symbolic vector, evaluated at a specialization.
    pub fn specialize(&self, e1: &Rational, e2: &Rational) -> FockVector<Rational> {
        let mut v = FockVector::zero_vec(self.n);
        for ((mu, l), p) in &self.coeffs {
            v.add_term(BasisIndex::new(mu.clone(), *l), p.eval(e1, e2));
        }
        v
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .coeffs
            .iter()
            .map(|((mu, l), p)| json!({"mu": mu.to_json(), "l": l, "chi": p.to_json()}))
            .collect();
        json!({
            "format_version": 1,
            "n": self.n,
            "lambda": self.lambda.to_json(),
            "s": self.s.to_json(),
            "terms": terms,
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        if v["format_version"].as_i64() != Some(1) {
            return Err(Error::InvalidInput("unsupported format version".into()));
        }
        let n = v["n"]
            .as_u64()
            .ok_or_else(|| Error::InvalidInput("missing n".into()))? as u32;
        let lambda = Partition::from_json(&v["lambda"])?;
        let s = Cell::from_json(&v["s"])?;
        let mut coeffs = BTreeMap::new();
        for t in v["terms"]
            .as_array()
            .ok_or_else(|| Error::InvalidInput("missing terms".into()))?
        {
            let mu = Partition::from_json(&t["mu"])?;
            let l = t["l"]
                .as_u64()
                .ok_or_else(|| Error::InvalidInput("missing l".into()))? as u32;
            coeffs.insert((mu, l), ParamPoly::from_json(&t["chi"])?);
        }
        Ok(PsiExpansion { lambda, s, n, coeffs })
    }
}

/// All symbolic eigenfunction expansions of one degree.
#[derive(Clone, Debug)]
pub struct PsiTable {
    pub n: u32,
    expansions: BTreeMap<(Partition, Cell), PsiExpansion>,
}

impl PsiTable {
    pub fn get(&self, lambda: &Partition, s: &Cell) -> Option<&PsiExpansion> {
        self.expansions.get(&(lambda.clone(), *s))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(Partition, Cell), &PsiExpansion)> {
        self.expansions.iter()
    }

    /// Rebuilds a table (e.g. from a cache) and validates completeness:
    /// one expansion per addable corner of every partition of n.
    pub fn from_expansions(n: u32, list: Vec<PsiExpansion>) -> Result<Self> {
        let mut expansions = BTreeMap::new();
        for p in list {
            if p.n != n {
                return Err(Error::InvalidInput("mixed degrees in table".into()));
            }
            expansions.insert((p.lambda.clone(), p.s), p);
        }
        for lam in enumerate_partitions(n) {
            for s in &corners(&lam).addable {
                if !expansions.contains_key(&(lam.clone(), *s)) {
                    return Err(Error::InvalidInput(format!(
                        "missing expansion for {} at {}",
                        lam, s
                    )));
                }
            }
        }
        Ok(PsiTable { n, expansions })
    }
}

/// One valid sample point: every cyclic space of the degree built and
/// diagonalized at (t, 1).
fn sample_degree(n: u32, t: i64) -> Result<(Rational, Vec<EigenSystem>)> {
    let e1 = rat_int(t);
    let e2 = rat_int(1);
    let table = compute_jacks(n, &e1, &e2)?;
    let mut systems = Vec::new();
    for lam in enumerate_partitions(n) {
        let z = build_cyclic_from(&lam, table.get(&lam).unwrap(), &e1, &e2)?;
        systems.push(eigenfunctions(&z)?);
    }
    Ok((e1, systems))
}

/// Reconstructs every eigenfunction of degree n symbolically from
/// specializations (t, 1), t = 1, 2, ..., skipping values of t at which
/// the spectrum degenerates. Every coefficient of V_mu w^l is a
/// homogeneous polynomial of degree n - len(mu) in the parameters; the
/// interpolation verifies this with at least one spare sample point.
pub fn symbolic_psi_table(n: u32) -> Result<PsiTable> {
    let wanted = n as usize + 2;
    let mut samples: Vec<(Rational, Vec<EigenSystem>)> = Vec::with_capacity(wanted);
    let mut t: i64 = 1;
    let limit = 40 * wanted as i64;
    while samples.len() < wanted && t <= limit {
        let batch_end = t + (wanted - samples.len()) as i64;
        let mut batch: Vec<_> = (t..batch_end)
            .into_par_iter()
            .map(|tt| sample_degree(n, tt))
            .filter_map(|r| r.ok())
            .collect();
        samples.append(&mut batch);
        t = batch_end;
    }
    if samples.len() < wanted {
        return Err(Error::DegenerateParameters(format!(
            "could not find {} valid sample points for degree {}",
            wanted, n
        )));
    }
    samples.truncate(wanted);

    let order = crate::fock::basis(n);
    let mut expansions = BTreeMap::new();
    for (li, lam) in enumerate_partitions(n).iter().enumerate() {
        for s in &corners(lam).addable {
            let mut coeffs = BTreeMap::new();
            for idx in &order {
                let degree = n - idx.mu.len() as u32;
                let vals: Vec<(Rational, Rational)> = samples
                    .iter()
                    .map(|(e1, systems)| {
                        let psi = systems[li].psi(s).expect("corner present");
                        (e1.clone(), psi.coeff(idx))
                    })
                    .collect();
                let chi = interpolate_homogeneous(&vals, degree)?;
                if !chi.is_zero() {
                    coeffs.insert((idx.mu.clone(), idx.l), chi);
                }
            }
            expansions.insert(
                (lam.clone(), *s),
                PsiExpansion {
                    lambda: lam.clone(),
                    s: *s,
                    n,
                    coeffs,
                },
            );
        }
    }
    Ok(PsiTable { n, expansions })
}

/// Symbolic expansion of a single eigenfunction.
pub fn symbolic_psi(lambda: &Partition, s: &Cell) -> Result<PsiExpansion> {
    let table = symbolic_psi_table(lambda.size())?;
    table
        .get(lambda, s)
        .cloned()
        .ok_or_else(|| Error::InvalidInput(format!("{} is not an addable corner of {}", s, lambda)))
}

/// The diagram of lambda with s adjoined and the origin cell removed.
pub fn augmented_diagram(lambda: &Partition, s: &Cell) -> Vec<Cell> {
    lambda
        .with_cell(*s)
        .cells()
        .into_iter()
        .filter(|c| !(c.c == 0 && c.r == 0))
        .collect()
}

/// True iff every coefficient polynomial has integer coefficients.
pub fn check_integrality(p: &PsiExpansion) -> bool {
    integrality_witness(p).is_none()
}

/// The first non-integral coefficient, if any.
pub fn integrality_witness(p: &PsiExpansion) -> Option<((Partition, u32), ParamPoly)> {
    p.iter()
        .find(|(_, chi)| !chi.has_integer_coefficients())
        .map(|(k, chi)| (k.clone(), chi.clone()))
}

/// Checks the transposition symmetry: swapping the parameters in the
/// expansion for (lambda, s) gives the expansion for (lambda', s'),
/// coefficient by coefficient on the same monomials V_mu w^l.
pub fn check_symmetry(p: &PsiExpansion, p_conj: &PsiExpansion) -> bool {
    if p_conj.lambda != p.lambda.conjugate() || p_conj.s != p.s.reflect() {
        return false;
    }
    let keys: std::collections::BTreeSet<_> = p
        .iter()
        .map(|(k, _)| k.clone())
        .chain(p_conj.iter().map(|(k, _)| k.clone()))
        .collect();
    keys.iter().all(|(mu, l)| {
        p.coeff(mu, *l).swap_params() == p_conj.coeff(mu, *l)
    })
}

/// Verifies the principal specialization identities of one expansion at
/// a specialization and a list of evaluation points z: at w = 0 the
/// content product over lambda, at w = 1 the content product over the
/// augmented diagram, and for z != 0 the intermediate factorization
/// through the Jack value.
pub fn check_principal(
    p: &PsiExpansion,
    e1: &Rational,
    e2: &Rational,
    z_samples: &[Rational],
) -> bool {
    let psi = p.specialize(e1, e2);
    let sigma = p.s.content_at(e1, e2);
    for z in z_samples {
        let at_w0 = psi.principal_specialize(&Rational::zero(), z);
        let mut lam_prod = Rational::one();
        for c in p.lambda.cells() {
            lam_prod *= z + c.content_at(e1, e2);
        }
        if at_w0 != lam_prod {
            return false;
        }

        let at_w1 = psi.principal_specialize(&Rational::one(), z);
        let mut aug_prod = Rational::one();
        for c in augmented_diagram(&p.lambda, &p.s) {
            aug_prod *= z + c.content_at(e1, e2);
        }
        if at_w1 != aug_prod {
            return false;
        }

        if !z.is_zero() {
            let factor = Rational::one() + &sigma / z;
            if at_w1 != factor * &lam_prod {
                return false;
            }
        }
    }
    true
}

/// The closed form of the pure w^n coefficient: the content product
/// over the augmented diagram.
pub fn top_coefficient_formula(lambda: &Partition, s: &Cell) -> ParamPoly {
    let mut prod = ParamPoly::one();
    for c in augmented_diagram(lambda, s) {
        prod = prod * c.content();
    }
    prod
}

/// Machine-readable record of the integrality evidence for one degree,
/// including sign tallies of the coefficients (recorded, not asserted).
pub fn integrality_ledger(table: &PsiTable) -> Value {
    let mut entries = Vec::new();
    for ((lam, s), p) in table.iter() {
        let witness = integrality_witness(p);
        let mut pos = 0u64;
        let mut neg = 0u64;
        for (_, chi) in p.iter() {
            let (a, b) = chi.sign_counts();
            pos += a;
            neg += b;
        }
        entries.push(json!({
            "n": table.n,
            "lambda": lam.to_json(),
            "s": s.to_json(),
            "pass": witness.is_none(),
            "witness": witness.map(|((mu, l), chi)| json!({
                "mu": mu.to_json(),
                "l": l,
                "chi": chi.to_json(),
            })),
            "signs": {"positive": pos, "negative": neg},
        }));
    }
    json!({"format_version": 1, "n": table.n, "entries": entries})
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat;

    fn part(p: &[u32]) -> Partition {
        Partition::new(p.to_vec())
    }

    #[test]
    fn single_box_expansion() {
        let p = symbolic_psi(&part(&[1]), &Cell::new(1, 0)).unwrap();
        assert_eq!(p.coeff(&part(&[1]), 0), ParamPoly::one());
        assert_eq!(p.coeff(&Partition::empty(), 1), ParamPoly::e1());
        let q = symbolic_psi(&part(&[1]), &Cell::new(0, 1)).unwrap();
        assert_eq!(q.coeff(&Partition::empty(), 1), ParamPoly::e2());
    }

    #[test]
    fn exemplar_coefficients() {
        // psi for (2,1) at corner (2,0): V1 w^2 coefficient is
        // e1(e2 + 2 e1), w^3 coefficient is 2 e1^2 e2
        let p = symbolic_psi(&part(&[2, 1]), &Cell::new(2, 0)).unwrap();
        let expect = ParamPoly::e1() * (ParamPoly::e2() + ParamPoly::e1().scale(&rat_int(2)));
        assert_eq!(p.coeff(&part(&[1]), 2), expect);
        let top = ParamPoly::e1() * ParamPoly::e1() * ParamPoly::e2();
        assert_eq!(p.coeff(&Partition::empty(), 3), top.scale(&rat_int(2)));
        assert_eq!(
            top_coefficient_formula(&part(&[2, 1]), &Cell::new(2, 0)),
            top.scale(&rat_int(2))
        );
    }

    #[test]
    fn low_degree_integrality() {
        for n in 0..=4u32 {
            let table = symbolic_psi_table(n).unwrap();
            for (_, p) in table.iter() {
                assert!(check_integrality(p));
            }
        }
    }

    #[test]
    fn symmetry_pairs_degree_three() {
        let table = symbolic_psi_table(3).unwrap();
        for ((lam, s), p) in table.iter() {
            let pc = table.get(&lam.conjugate(), &s.reflect()).unwrap();
            assert!(check_symmetry(p, pc), "lambda = {}, s = {}", lam, s);
        }
    }

    #[test]
    fn principal_values_by_hand() {
        // (2,1) at corner (2,0), z = 5, (2,-3): w=0 gives 70, w=1 gives 126
        let p = symbolic_psi(&part(&[2, 1]), &Cell::new(2, 0)).unwrap();
        let psi = p.specialize(&rat_int(2), &rat_int(-3));
        assert_eq!(
            psi.principal_specialize(&rat_int(0), &rat_int(5)),
            rat_int(70)
        );
        assert_eq!(
            psi.principal_specialize(&rat_int(1), &rat_int(5)),
            rat_int(126)
        );
        assert!(check_principal(
            &p,
            &rat_int(2),
            &rat_int(-3),
            &[rat_int(5), rat(-1, 2), rat_int(3)]
        ));
    }

    #[test]
    fn top_slice_matches_jack_characters() {
        let table = symbolic_psi_table(3).unwrap();
        let chars = crate::jack::jack_characters(3).unwrap();
        for ((lam, _), p) in table.iter() {
            for mu in enumerate_partitions(3) {
                assert_eq!(p.coeff(&mu, 0), chars.get(&lam, &mu));
            }
        }
    }

    #[test]
    fn expansion_json_roundtrip() {
        let p = symbolic_psi(&part(&[2]), &Cell::new(2, 0)).unwrap();
        let back = PsiExpansion::from_json(&p.to_json()).unwrap();
        assert_eq!(back.lambda, p.lambda);
        for (k, chi) in p.iter() {
            assert_eq!(&back.coeff(&k.0, k.1), chi);
        }
    }
}
