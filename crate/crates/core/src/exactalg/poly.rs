use super::{format_rational, parse_rational, Rational, Scalar};
use crate::{Error, Result};
use num::{One, Zero};
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Sparse bivariate polynomial in the parameters (e1, e2) with exact
/// rational coefficients. No zero coefficients are stored; equality is
/// term-map equality.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct ParamPoly {
    // (exponent of e1, exponent of e2) -> coefficient
    terms: BTreeMap<(u32, u32), Rational>,
}

impl ParamPoly {
    pub fn zero_poly() -> Self {
        ParamPoly::default()
    }

    pub fn constant(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((0, 0), c);
        }
        ParamPoly { terms }
    }

    pub fn from_int_const(n: i64) -> Self {
        Self::constant(super::rat_int(n))
    }

    /// The parameter e1.
    pub fn e1() -> Self {
        Self::monomial(1, 0, Rational::one())
    }

    /// The parameter e2.
    pub fn e2() -> Self {
        Self::monomial(0, 1, Rational::one())
    }

    /// e1 + e2.
    pub fn ebar() -> Self {
        Self::e1() + Self::e2()
    }

    /// -e1*e2.
    pub fn hbar() -> Self {
        -(Self::e1() * Self::e2())
    }

    pub fn monomial(a: u32, b: u32, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((a, b), c);
        }
        ParamPoly { terms }
    }

    /// The linear form c*e1 + r*e2; coordinates may be negative
    /// (differences of cells).
    pub fn linear(c: i64, r: i64) -> Self {
        Self::monomial(1, 0, super::rat_int(c)) + Self::monomial(0, 1, super::rat_int(r))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, a: u32, b: u32) -> Rational {
        self.terms.get(&(a, b)).cloned().unwrap_or_else(Rational::zero)
    }

    /// Substitutes e1, e2 with rational values.
    pub fn eval(&self, e1: &Rational, e2: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for (&(a, b), c) in &self.terms {
            let mut t = c.clone();
            for _ in 0..a {
                t *= e1;
            }
            for _ in 0..b {
                t *= e2;
            }
            acc += t;
        }
        acc
    }

    /// Total degree if all terms share it, i.e. the polynomial is
    /// homogeneous. Zero polynomial counts as homogeneous of any degree.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut deg = None;
        for &(a, b) in self.terms.keys() {
            match deg {
                None => deg = Some(a + b),
                Some(d) if d == a + b => {}
                Some(_) => return None,
            }
        }
        deg.or(Some(0))
    }

    pub fn is_homogeneous_of_degree(&self, d: u32) -> bool {
        self.terms.keys().all(|&(a, b)| a + b == d)
    }

    /// True iff every coefficient is an integer.
    pub fn has_integer_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.denom().is_one())
    }

    /// Tally of (positive, negative) coefficients.
    pub fn sign_counts(&self) -> (u64, u64) {
        let mut pos = 0;
        let mut neg = 0;
        for c in self.terms.values() {
            if c > &Rational::zero() {
                pos += 1;
            } else {
                neg += 1;
            }
        }
        (pos, neg)
    }

    /// Swaps the roles of e1 and e2.
    pub fn swap_params(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(&(a, b), c)| ((b, a), c.clone()))
            .collect();
        ParamPoly { terms }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero_poly();
        }
        let terms = self
            .terms
            .iter()
            .map(|(k, v)| (*k, v * c))
            .collect();
        ParamPoly { terms }
    }

    /// JSON form: array of `{"a": int, "b": int, "c": "num/den"}` sorted
    /// graded-lex on (a, b).
    pub fn to_json(&self) -> Value {
        let mut keys: Vec<&(u32, u32)> = self.terms.keys().collect();
        keys.sort_by_key(|&&(a, b)| (a + b, a, b));
        Value::Array(
            keys.into_iter()
                .map(|&(a, b)| {
                    json!({"a": a, "b": b, "c": format_rational(&self.terms[&(a, b)])})
                })
                .collect(),
        )
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let arr = v
            .as_array()
            .ok_or_else(|| Error::InvalidInput("ParamPoly JSON must be an array".into()))?;
        let mut p = ParamPoly::zero_poly();
        for t in arr {
            let a = t["a"].as_u64().ok_or_else(|| bad_term())? as u32;
            let b = t["b"].as_u64().ok_or_else(|| bad_term())? as u32;
            let c = parse_rational(t["c"].as_str().ok_or_else(|| bad_term())?)?;
            p = p + ParamPoly::monomial(a, b, c);
        }
        Ok(p)
    }
}

fn bad_term() -> Error {
    Error::InvalidInput("bad ParamPoly term".into())
}

impl fmt::Debug for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut keys: Vec<&(u32, u32)> = self.terms.keys().collect();
        keys.sort_by_key(|&&(a, b)| (a + b, a, b));
        let mut first = true;
        for &(a, b) in keys {
            let c = &self.terms[&(a, b)];
            let mono = match (a, b) {
                (0, 0) => String::new(),
                (a, 0) if a == 1 => "e1".into(),
                (a, 0) => format!("e1^{a}"),
                (0, b) if b == 1 => "e2".into(),
                (0, b) => format!("e2^{b}"),
                (a, b) => {
                    let p1 = if a == 1 { "e1".into() } else { format!("e1^{a}") };
                    let p2 = if b == 1 { "e2".into() } else { format!("e2^{b}") };
                    format!("{p1}*{p2}")
                }
            };
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if mono.is_empty() {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{c}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl Add for ParamPoly {
    type Output = ParamPoly;

    fn add(self, rhs: ParamPoly) -> ParamPoly {
        let mut terms = self.terms;
        for (k, v) in rhs.terms {
            let entry = terms.entry(k).or_insert_with(Rational::zero);
            *entry += v;
            if entry.is_zero() {
                terms.remove(&k);
            }
        }
        ParamPoly { terms }
    }
}

impl Sub for ParamPoly {
    type Output = ParamPoly;

    fn sub(self, rhs: ParamPoly) -> ParamPoly {
        self + (-rhs)
    }
}

impl Neg for ParamPoly {
    type Output = ParamPoly;

    fn neg(self) -> ParamPoly {
        let terms = self.terms.into_iter().map(|(k, v)| (k, -v)).collect();
        ParamPoly { terms }
    }
}

impl Mul for ParamPoly {
    type Output = ParamPoly;

    fn mul(self, rhs: ParamPoly) -> ParamPoly {
        let mut terms: BTreeMap<(u32, u32), Rational> = BTreeMap::new();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &rhs.terms {
                let k = (a1 + a2, b1 + b2);
                let entry = terms.entry(k).or_insert_with(Rational::zero);
                *entry += c1 * c2;
            }
        }
        terms.retain(|_, v| !v.is_zero());
        ParamPoly { terms }
    }
}

impl Zero for ParamPoly {
    fn zero() -> Self {
        ParamPoly::zero_poly()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for ParamPoly {
    fn one() -> Self {
        ParamPoly::constant(Rational::one())
    }
}

impl Scalar for ParamPoly {
    fn from_int(n: i64) -> Self {
        ParamPoly::from_int_const(n)
    }

    fn div_int(&self, n: i64) -> Self {
        assert!(n != 0, "division by zero integer");
        self.scale(&super::rat(1, n))
    }
}

/// Recovers a homogeneous bivariate polynomial of total degree `degree`
/// from samples of its restriction to the line e2 = 1. Lagrange
/// interpolation in e1, then homogenization by b = degree - a.
///
/// Requires at least `degree + 1` samples at pairwise-distinct e1 values;
/// extra samples are used as consistency checks, and any inconsistency
/// (interpolant degree exceeding `degree`, or a mismatched extra sample)
/// signals non-homogeneous data.
pub fn interpolate_homogeneous(
    samples: &[(Rational, Rational)],
    degree: u32,
) -> Result<ParamPoly> {
    let d = degree as usize;
    if samples.len() < d + 1 {
        return Err(Error::InvalidInput(format!(
            "need at least {} samples for degree {}, got {}",
            d + 1,
            degree,
            samples.len()
        )));
    }
    for i in 0..samples.len() {
        for j in (i + 1)..samples.len() {
            if samples[i].0 == samples[j].0 {
                return Err(Error::InvalidInput("repeated sample point".into()));
            }
        }
    }
    let base = &samples[..d + 1];
    // Lagrange: P(x) = sum_i y_i * prod_{j != i} (x - x_j) / (x_i - x_j)
    let mut coeffs = vec![Rational::zero(); d + 1];
    for (i, (xi, yi)) in base.iter().enumerate() {
        // numerator polynomial prod_{j != i} (x - x_j), low-to-high
        let mut num = vec![Rational::one()];
        let mut denom = Rational::one();
        for (j, (xj, _)) in base.iter().enumerate() {
            if j == i {
                continue;
            }
            let mut next = vec![Rational::zero(); num.len() + 1];
            for (k, c) in num.iter().enumerate() {
                next[k] -= c * xj;
                next[k + 1] += c;
            }
            num = next;
            denom *= xi - xj;
        }
        let w = yi / denom;
        for (k, c) in num.iter().enumerate() {
            coeffs[k] += c * &w;
        }
    }
    let mut p = ParamPoly::zero_poly();
    for (a, c) in coeffs.iter().enumerate() {
        p = p + ParamPoly::monomial(a as u32, degree - a as u32, c.clone());
    }
    // verify the remaining samples against the interpolant
    for (x, y) in &samples[d + 1..] {
        if &p.eval(x, &Rational::one()) != y {
            return Err(Error::NonHomogeneousData);
        }
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::super::{rat, rat_int};
    use super::*;

    #[test]
    fn eval_examples() {
        let p = ParamPoly::e1() * ParamPoly::e2();
        assert_eq!(p.eval(&rat_int(2), &rat_int(-3)), rat_int(-6));
        let p = ParamPoly::ebar();
        assert_eq!(p.eval(&rat_int(2), &rat_int(-3)), rat_int(-1));
        // e1^2 - e1*e2 + e2^2 at (2, -3) -> 4 + 6 + 9 = 19
        let e1 = ParamPoly::e1();
        let e2 = ParamPoly::e2();
        let p = e1.clone() * e1.clone() - e1 * e2.clone() + e2.clone() * e2;
        assert_eq!(p.eval(&rat_int(2), &rat_int(-3)), rat_int(19));
    }

    #[test]
    fn eval_commutes_with_ring_ops() {
        let p = ParamPoly::linear(2, 1) * ParamPoly::linear(-1, 3) + ParamPoly::from_int_const(5);
        let q = ParamPoly::hbar() - ParamPoly::linear(0, 7);
        let (a, b) = (rat(3, 2), rat(-5, 7));
        assert_eq!(
            (p.clone() + q.clone()).eval(&a, &b),
            p.eval(&a, &b) + q.eval(&a, &b)
        );
        assert_eq!(
            (p.clone() * q.clone()).eval(&a, &b),
            p.eval(&a, &b) * q.eval(&a, &b)
        );
    }

    #[test]
    fn homogeneity_query() {
        assert_eq!(ParamPoly::hbar().homogeneous_degree(), Some(2));
        assert_eq!(ParamPoly::ebar().homogeneous_degree(), Some(1));
        assert_eq!(
            (ParamPoly::ebar() + ParamPoly::one()).homogeneous_degree(),
            None
        );
        assert_eq!(ParamPoly::zero_poly().homogeneous_degree(), Some(0));
    }

    #[test]
    fn interpolate_linear() {
        // 2*e1 + e2 from samples of 2*e1 + 1
        let samples = vec![(rat_int(2), rat_int(5)), (rat_int(3), rat_int(7))];
        let p = interpolate_homogeneous(&samples, 1).unwrap();
        let expect = ParamPoly::monomial(1, 0, rat_int(2)) + ParamPoly::e2();
        assert_eq!(p, expect);
    }

    #[test]
    fn interpolate_constant() {
        let samples = vec![(rat_int(5), rat_int(3))];
        let p = interpolate_homogeneous(&samples, 0).unwrap();
        assert_eq!(p, ParamPoly::from_int_const(3));
    }

    #[test]
    fn interpolate_quadratic_roundtrip() {
        let e1 = ParamPoly::e1();
        let e2 = ParamPoly::e2();
        let p = e1.clone() * e1.clone() - e1 * e2.clone() + e2.clone() * e2;
        let samples: Vec<_> = (0..3)
            .map(|t| (rat_int(t), p.eval(&rat_int(t), &rat_int(1))))
            .collect();
        assert_eq!(interpolate_homogeneous(&samples, 2).unwrap(), p);
    }

    #[test]
    fn interpolate_detects_inconsistency() {
        // samples from t^3 cannot come from any homogeneous degree-2
        // polynomial evaluated at (t, 1)
        let vals: Vec<_> = (0..4)
            .map(|t| (rat_int(t), rat_int(t * t * t)))
            .collect();
        assert_eq!(
            interpolate_homogeneous(&vals, 2),
            Err(Error::NonHomogeneousData)
        );
    }

    #[test]
    fn json_roundtrip_sorted() {
        let p = ParamPoly::hbar() + ParamPoly::linear(3, -2) + ParamPoly::from_int_const(7);
        let v = p.to_json();
        let arr = v.as_array().unwrap();
        // graded-lex: constant, then degree-1 terms (a asc), then degree-2
        assert_eq!(arr[0]["a"], 0);
        assert_eq!(arr[0]["b"], 0);
        assert_eq!(ParamPoly::from_json(&v).unwrap(), p);
    }
}
