//! Jack polynomials as eigenvectors of the transfer operator, their
//! symbolic character tables, and independent validation oracles.

use crate::exactalg::{interpolate_homogeneous, rat, rat_int, ParamPoly, Rational};
use crate::fock::{inner, BasisIndex, FockVector};
use crate::lax::{cut_and_join, transfer_matrix};
use crate::partitions::{enumerate_partitions, t_lambda_at, t_value, Partition};
use crate::{Error, Result};
use num::{One, Zero};
use serde_json::{json, Value};
use std::collections::BTreeMap;

/// Default spectral sample point, far from any content at desk scale.
pub fn default_u0() -> Rational {
    rat_int(10_000) + rat(1, 7)
}

/// Jack polynomials of one degree at a fixed specialization. Each
/// vector is supported on the w^0 slice and monic in V_1^n.
#[derive(Clone, Debug)]
pub struct JackTable {
    pub n: u32,
    pub e1: Rational,
    pub e2: Rational,
    pub u0: Rational,
    jacks: BTreeMap<Partition, FockVector<Rational>>,
}

impl JackTable {
    pub fn get(&self, lambda: &Partition) -> Option<&FockVector<Rational>> {
        self.jacks.get(lambda)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &FockVector<Rational>)> {
        self.jacks.iter()
    }

    /// Coefficient of V_mu in j_lambda.
    pub fn coefficient(&self, lambda: &Partition, mu: &Partition) -> Rational {
        self.jacks[lambda].coeff(&BasisIndex::new(mu.clone(), 0))
    }
}

/// Symbolic Jack characters chi_{lambda,mu}: j_lambda = sum chi V_mu.
#[derive(Clone, Debug)]
pub struct JackCharacterTable {
    pub n: u32,
    chars: BTreeMap<(Partition, Partition), ParamPoly>,
}

impl JackCharacterTable {
    pub fn get(&self, lambda: &Partition, mu: &Partition) -> ParamPoly {
        self.chars
            .get(&(lambda.clone(), mu.clone()))
            .cloned()
            .unwrap_or_else(ParamPoly::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(Partition, Partition), &ParamPoly)> {
        self.chars.iter()
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = self
            .chars
            .iter()
            .map(|((l, m), p)| {
                json!({"lambda": l.to_json(), "mu": m.to_json(), "chi": p.to_json()})
            })
            .collect();
        json!({"format_version": 1, "n": self.n, "characters": rows})
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        if v["format_version"].as_i64() != Some(1) {
            return Err(Error::InvalidInput("unsupported format version".into()));
        }
        let n = v["n"]
            .as_u64()
            .ok_or_else(|| Error::InvalidInput("missing n".into()))? as u32;
        let mut chars = BTreeMap::new();
        for row in v["characters"]
            .as_array()
            .ok_or_else(|| Error::InvalidInput("missing characters".into()))?
        {
            let l = Partition::from_json(&row["lambda"])?;
            let m = Partition::from_json(&row["mu"])?;
            let p = ParamPoly::from_json(&row["chi"])?;
            chars.insert((l, m), p);
        }
        Ok(JackCharacterTable { n, chars })
    }
}

/// Computes all Jack polynomials of degree n at (e1, e2) from the
/// transfer operator: j_lambda spans the kernel of T(u0) - T_lambda(u0).
/// Retries with shifted u0 on resolvent poles or eigenvalue collisions.
pub fn compute_jacks(n: u32, e1: &Rational, e2: &Rational) -> Result<JackTable> {
    compute_jacks_from_base(n, e1, e2, &default_u0())
}

/// Same as [`compute_jacks`] with an explicit starting u0.
pub fn compute_jacks_from_base(
    n: u32,
    e1: &Rational,
    e2: &Rational,
    base: &Rational,
) -> Result<JackTable> {
    let mut last_err = None;
    for attempt in 0..5 {
        let u0 = base + rat_int(attempt);
        match compute_jacks_at_u0(n, e1, e2, &u0) {
            Ok(t) => return Ok(t),
            Err(e @ (Error::ResolventPole(_) | Error::DegenerateParameters(_))) => {
                last_err = Some(e);
            }
            Err(e) => return Err(e),
        }
    }
    Err(last_err.unwrap_or_else(|| {
        Error::DegenerateParameters(format!("no valid u0 found for degree {}", n))
    }))
}

/// Single attempt at a fixed u0; no retry.
pub fn compute_jacks_at_u0(
    n: u32,
    e1: &Rational,
    e2: &Rational,
    u0: &Rational,
) -> Result<JackTable> {
    let parts = enumerate_partitions(n);
    let mut values = Vec::with_capacity(parts.len());
    for lam in &parts {
        values.push(t_value(lam, u0, e1, e2)?);
    }
    for i in 0..values.len() {
        for j in i + 1..values.len() {
            if values[i] == values[j] {
                return Err(Error::DegenerateParameters(format!(
                    "transfer eigenvalues collide for {} and {} at ({}, {})",
                    parts[i], parts[j], e1, e2
                )));
            }
        }
    }
    let t = transfer_matrix(n, u0, e1, e2)?;
    let dim = parts.len();
    let v1n = Partition::new(vec![1; n as usize]);
    let v1n_pos = parts
        .iter()
        .position(|p| *p == v1n)
        .expect("column partition present");

    let mut jacks = BTreeMap::new();
    for (li, lam) in parts.iter().enumerate() {
        let mut m = t.clone();
        for d in 0..dim {
            let v = m.get(d, d) - &values[li];
            m.set(d, d, v);
        }
        let kernel = m.kernel_basis();
        if kernel.len() != 1 {
            return Err(Error::DegenerateParameters(format!(
                "kernel dimension {} for {} (expected 1)",
                kernel.len(),
                lam
            )));
        }
        let raw = &kernel[0];
        let lead = &raw[v1n_pos];
        if lead.is_zero() {
            return Err(Error::DegenerateParameters(format!(
                "vanishing leading coefficient for {}",
                lam
            )));
        }
        let mut vec = FockVector::zero_vec(n);
        for (mu, c) in parts.iter().zip(raw) {
            vec.add_term(BasisIndex::new(mu.clone(), 0), c / lead);
        }
        jacks.insert(lam.clone(), vec);
    }
    Ok(JackTable {
        n,
        e1: e1.clone(),
        e2: e2.clone(),
        u0: u0.clone(),
        jacks,
    })
}

/// Sample specializations (t, 1), t = 1, 2, ..., keeping the first
/// `count` values of t at which degree-n Jacks are well defined.
fn valid_sample_tables(n: u32, count: usize) -> Result<Vec<(Rational, JackTable)>> {
    let mut out = Vec::with_capacity(count);
    let mut t: i64 = 1;
    while out.len() < count {
        if t > 20 * count as i64 {
            return Err(Error::DegenerateParameters(format!(
                "could not find {} valid sample points for degree {}",
                count, n
            )));
        }
        let e1 = rat_int(t);
        let e2 = rat_int(1);
        if let Ok(table) = compute_jacks(n, &e1, &e2) {
            out.push((e1, table));
        }
        t += 1;
    }
    Ok(out)
}

/// Reconstructs the symbolic character table of degree n by homogeneous
/// interpolation over specializations (e1, e2) = (t, 1). Each
/// chi_{lambda,mu} is homogeneous of degree n - len(mu); integrality of
/// its coefficients is verified.
pub fn jack_characters(n: u32) -> Result<JackCharacterTable> {
    let parts = enumerate_partitions(n);
    let samples = valid_sample_tables(n, n as usize + 1)?;
    let mut chars = BTreeMap::new();
    for lam in &parts {
        for mu in &parts {
            let degree = n - mu.len() as u32;
            let vals: Vec<(Rational, Rational)> = samples
                .iter()
                .map(|(e1, table)| (e1.clone(), table.coefficient(lam, mu)))
                .collect();
            let chi = interpolate_homogeneous(&vals, degree)?;
            if !chi.has_integer_coefficients() {
                return Err(Error::TheoremViolation(format!(
                    "non-integer character for lambda={} mu={}: {}",
                    lam, mu, chi
                )));
            }
            if !chi.is_zero() {
                chars.insert((lam.clone(), mu.clone()), chi);
            }
        }
        // monic normalization must survive interpolation
        let v1n = Partition::new(vec![1; n as usize]);
        if chars.get(&(lam.clone(), v1n)) != Some(&ParamPoly::one()) && n > 0 {
            return Err(Error::TheoremViolation(format!(
                "lambda={} is not monic in V1^n",
                lam
            )));
        }
    }
    Ok(JackCharacterTable { n, chars })
}

/// Deterministic sequence of varied rational test points.
pub fn test_rationals(seed: u64, count: usize) -> Vec<Rational> {
    let mut state = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        state = state
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        let num = ((state >> 33) as i64 % 41) - 20;
        let den = ((state >> 13) as i64 % 7).abs() + 1;
        let z = rat(num, den);
        if !z.is_zero() && !out.contains(&z) {
            out.push(z);
        }
    }
    out
}

/// Independent cross-checks on a computed Jack table; returns a list of
/// failure descriptions (empty means all checks passed).
pub fn validate_jacks(table: &JackTable) -> Vec<String> {
    let mut failures = Vec::new();
    let n = table.n;
    let (e1, e2) = (&table.e1, &table.e2);
    let hbar = -(e1 * e2);
    let ebar = e1 + e2;

    // pairwise Hall orthogonality
    let lams: Vec<&Partition> = table.iter().map(|(l, _)| l).collect();
    for (i, la) in lams.iter().enumerate() {
        for lb in lams.iter().skip(i + 1) {
            let ip = inner(&table.jacks[*la], &table.jacks[*lb], &hbar).unwrap();
            if !ip.is_zero() {
                failures.push(format!("<j_{}, j_{}> = {} (expected 0)", la, lb, ip));
            }
        }
    }

    // cut-and-join eigenvalue equals the u^{-4} series coefficient of
    // the transfer eigenvalue
    let parts = enumerate_partitions(n);
    let cj = cut_and_join(n, &ebar, &hbar);
    for lam in &parts {
        let coords: Vec<Rational> = parts
            .iter()
            .map(|mu| table.coefficient(lam, mu))
            .collect();
        let image = cj.mul_vec(&coords);
        let expected = t_lambda_at(lam, e1, e2).series_at_infinity(4)[3].clone();
        for (c, im) in coords.iter().zip(&image) {
            if *im != c * &expected {
                failures.push(format!(
                    "cut-and-join eigenvalue mismatch for {} (expected {})",
                    lam, expected
                ));
                break;
            }
        }
    }

    // conjugation symmetry: j_lambda(e1,e2) = j_{lambda'}(e2,e1)
    match compute_jacks(n, e2, e1) {
        Ok(swapped) => {
            for lam in &parts {
                if table.jacks[lam] != swapped.jacks[&lam.conjugate()] {
                    failures.push(format!("conjugation symmetry fails for {}", lam));
                }
            }
        }
        Err(e) => failures.push(format!("swapped specialization failed: {}", e)),
    }

    // principal specialization: j_lambda at V_k := z equals the content
    // product over the diagram
    for lam in &parts {
        for z in test_rationals(n as u64 + 17, 5) {
            let got = table.jacks[lam].principal_specialize(&Rational::zero(), &z);
            let mut expect = Rational::one();
            for cell in lam.cells() {
                expect *= &z + cell.content_at(e1, e2);
            }
            if got != expect {
                failures.push(format!(
                    "principal specialization fails for {} at z = {}",
                    lam, z
                ));
            }
        }
    }

    failures
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(p: &[u32]) -> Partition {
        Partition::new(p.to_vec())
    }

    #[test]
    fn degree_one_and_empty() {
        let t = compute_jacks(1, &rat_int(2), &rat_int(-3)).unwrap();
        assert_eq!(t.coefficient(&part(&[1]), &part(&[1])), rat_int(1));
        let t0 = compute_jacks(0, &rat_int(2), &rat_int(-3)).unwrap();
        assert_eq!(
            t0.coefficient(&Partition::empty(), &Partition::empty()),
            rat_int(1)
        );
    }

    #[test]
    fn degree_two_closed_forms() {
        // j_2 = V1^2 + e1 V2, j_{1,1} = V1^2 + e2 V2
        let t = compute_jacks(2, &rat_int(2), &rat_int(-3)).unwrap();
        assert_eq!(t.coefficient(&part(&[2]), &part(&[2])), rat_int(2));
        assert_eq!(t.coefficient(&part(&[2]), &part(&[1, 1])), rat_int(1));
        assert_eq!(t.coefficient(&part(&[1, 1]), &part(&[2])), rat_int(-3));
    }

    #[test]
    fn degree_three_closed_forms() {
        let (e1, e2) = (rat_int(2), rat_int(-3));
        let t = compute_jacks(3, &e1, &e2).unwrap();
        // j_3 = V1^3 + 3 e1 V1V2 + 2 e1^2 V3
        assert_eq!(t.coefficient(&part(&[3]), &part(&[2, 1])), rat_int(6));
        assert_eq!(t.coefficient(&part(&[3]), &part(&[3])), rat_int(8));
        // middle: V1^3 + (e1+e2) V1V2 + e1 e2 V3
        assert_eq!(t.coefficient(&part(&[2, 1]), &part(&[2, 1])), rat_int(-1));
        assert_eq!(t.coefficient(&part(&[2, 1]), &part(&[3])), rat_int(-6));
        // j_{1,1,1} = V1^3 + 3 e2 V1V2 + 2 e2^2 V3
        assert_eq!(t.coefficient(&part(&[1, 1, 1]), &part(&[2, 1])), rat_int(-9));
        assert_eq!(t.coefficient(&part(&[1, 1, 1]), &part(&[3])), rat_int(18));
    }

    #[test]
    fn characters_match_closed_forms() {
        let c2 = jack_characters(2).unwrap();
        assert_eq!(c2.get(&part(&[2]), &part(&[2])), ParamPoly::e1());
        assert_eq!(c2.get(&part(&[1, 1]), &part(&[2])), ParamPoly::e2());
        assert_eq!(c2.get(&part(&[2]), &part(&[1, 1])), ParamPoly::one());

        let c3 = jack_characters(3).unwrap();
        assert_eq!(
            c3.get(&part(&[2, 1]), &part(&[3])),
            ParamPoly::e1() * ParamPoly::e2()
        );
        assert_eq!(c3.get(&part(&[2, 1]), &part(&[2, 1])), ParamPoly::ebar());
        assert_eq!(
            c3.get(&part(&[3]), &part(&[2, 1])),
            ParamPoly::e1().scale(&rat_int(3))
        );
    }

    #[test]
    fn characters_homogeneous_and_integral() {
        for n in 0..=5u32 {
            let c = jack_characters(n).unwrap();
            for ((_, mu), chi) in c.iter() {
                assert!(chi.is_homogeneous_of_degree(n - mu.len() as u32));
                assert!(chi.has_integer_coefficients());
            }
        }
    }

    #[test]
    fn validation_passes_small_degrees() {
        for n in 1..=5u32 {
            let t = compute_jacks(n, &rat_int(2), &rat_int(-3)).unwrap();
            let failures = validate_jacks(&t);
            assert!(failures.is_empty(), "n={}: {:?}", n, failures);
        }
    }

    #[test]
    fn character_json_roundtrip() {
        let c = jack_characters(3).unwrap();
        let v = c.to_json();
        let back = JackCharacterTable::from_json(&v).unwrap();
        assert_eq!(back.n, 3);
        for ((l, m), chi) in c.iter() {
            assert_eq!(&back.get(l, m), chi);
        }
    }
}
