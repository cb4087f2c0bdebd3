//! Partitions, Young diagrams, corner sets, contents, transition-measure
//! weights, and the product-form eigenvalue functions T_lambda(u).

use crate::exactalg::{ParamPoly, Rational, RationalFunction, UniPoly};
use crate::{Error, Result};
use num::Zero;
use serde_json::{json, Value};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

/// A partition: weakly decreasing positive parts. The empty partition is
/// the empty list.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]) && parts.iter().all(|&p| p > 0),
            "parts must be weakly decreasing and positive"
        );
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: vec![] }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part multiplicities: part size -> count.
    pub fn multiplicities(&self) -> BTreeMap<u32, u32> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    /// Cells of the Young diagram as (column, row), zero-based.
    pub fn cells(&self) -> Vec<Cell> {
        let mut out = Vec::new();
        for (r, &p) in self.parts.iter().enumerate() {
            for c in 0..p {
                out.push(Cell { c, r: r as u32 });
            }
        }
        out
    }

    pub fn contains_cell(&self, s: Cell) -> bool {
        (s.r as usize) < self.parts.len() && s.c < self.parts[s.r as usize]
    }

    /// The transposed diagram.
    pub fn conjugate(&self) -> Partition {
        let cols = self.parts.first().copied().unwrap_or(0);
        let parts = (0..cols)
            .map(|c| self.parts.iter().filter(|&&p| p > c).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Adds one part of size `k`.
    pub fn with_part(&self, k: u32) -> Partition {
        assert!(k > 0);
        let mut parts = self.parts.clone();
        let pos = parts.partition_point(|&p| p >= k);
        parts.insert(pos, k);
        Partition { parts }
    }

    /// Removes one part of size `k`; panics if absent.
    pub fn without_part(&self, k: u32) -> Partition {
        let mut parts = self.parts.clone();
        let pos = parts.iter().position(|&p| p == k).expect("part not present");
        parts.remove(pos);
        Partition { parts }
    }

    /// Diagram with the addable cell `s` adjoined.
    pub fn with_cell(&self, s: Cell) -> Partition {
        let mut parts = self.parts.clone();
        if (s.r as usize) < parts.len() {
            assert_eq!(parts[s.r as usize], s.c, "not an addable cell");
            parts[s.r as usize] += 1;
        } else {
            assert_eq!((s.r as usize, s.c), (parts.len(), 0), "not an addable cell");
            parts.push(1);
        }
        Partition { parts }
    }

    /// Diagram with the removable cell `s` deleted.
    pub fn without_cell(&self, s: Cell) -> Partition {
        let mut parts = self.parts.clone();
        assert_eq!(parts[s.r as usize], s.c + 1, "not a removable cell");
        parts[s.r as usize] -= 1;
        if parts[s.r as usize] == 0 {
            parts.pop();
        }
        Partition { parts }
    }

    /// JSON form: descending integer array.
    pub fn to_json(&self) -> Value {
        json!(self.parts)
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let arr = v
            .as_array()
            .ok_or_else(|| Error::InvalidInput("partition JSON must be an array".into()))?;
        let parts = arr
            .iter()
            .map(|x| {
                x.as_u64()
                    .map(|u| u as u32)
                    .ok_or_else(|| Error::InvalidInput("bad partition part".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        if !parts.windows(2).all(|w| w[0] >= w[1]) || parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidInput("parts must be descending positive".into()));
        }
        Ok(Partition { parts })
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "[]");
        }
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", s.join(","))
    }
}

/// Deterministic order: by size, then reverse lexicographic within a
/// size, so partitions of n enumerate as (n), (n-1,1), ..., (1^n).
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A lattice cell (column, row), zero-based.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Cell {
    pub c: u32,
    pub r: u32,
}

impl Cell {
    pub fn new(c: u32, r: u32) -> Self {
        Cell { c, r }
    }

    /// Reflection across the diagonal, matching diagram transposition.
    pub fn reflect(self) -> Cell {
        Cell { c: self.r, r: self.c }
    }

    /// Anisotropic content as a linear polynomial c*e1 + r*e2.
    pub fn content(self) -> ParamPoly {
        ParamPoly::linear(self.c as i64, self.r as i64)
    }

    /// Content specialized at rational parameters.
    pub fn content_at(self, e1: &Rational, e2: &Rational) -> Rational {
        content_diff(self.c as i64, self.r as i64, e1, e2)
    }

    pub fn to_json(self) -> Value {
        json!([self.c, self.r])
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let arr = v
            .as_array()
            .filter(|a| a.len() == 2)
            .ok_or_else(|| Error::InvalidInput("cell must be a [c, r] pair".into()))?;
        let c = arr[0]
            .as_u64()
            .ok_or_else(|| Error::InvalidInput("bad cell column".into()))? as u32;
        let r = arr[1]
            .as_u64()
            .ok_or_else(|| Error::InvalidInput("bad cell row".into()))? as u32;
        Ok(Cell::new(c, r))
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.c, self.r)
    }
}

/// Content of an integer vector, allowing negative coordinates
/// (differences of cells).
pub fn content_diff(c: i64, r: i64, e1: &Rational, e2: &Rational) -> Rational {
    e1 * Rational::from_integer(c.into()) + e2 * Rational::from_integer(r.into())
}

/// Addable, removable, and outer corner sets of a diagram.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CornerData {
    pub addable: Vec<Cell>,
    pub removable: Vec<Cell>,
    pub outer: Vec<Cell>,
}

/// Corner sets, each sorted by (column, row).
pub fn corners(lambda: &Partition) -> CornerData {
    let parts = lambda.parts();
    let k = parts.len();
    let mut addable = Vec::new();
    for r in 0..=k {
        let c = if r < k { parts[r] } else { 0 };
        if r == 0 || parts[r - 1] > c {
            addable.push(Cell::new(c, r as u32));
        }
    }
    let mut removable = Vec::new();
    for r in 0..k {
        if r + 1 == k || parts[r] > parts[r + 1] {
            removable.push(Cell::new(parts[r] - 1, r as u32));
        }
    }
    let outer: Vec<Cell> = removable
        .iter()
        .map(|s| Cell::new(s.c + 1, s.r + 1))
        .collect();
    let mut cd = CornerData { addable, removable, outer };
    cd.addable.sort();
    cd.removable.sort();
    cd.outer.sort();
    cd
}

/// All partitions of `n` in reverse lexicographic order, e.g.
/// 3 -> [(3), (2,1), (1,1,1)].
pub fn enumerate_partitions(n: u32) -> Vec<Partition> {
    fn rec(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        for first in (1..=n.min(max)).rev() {
            prefix.push(first);
            rec(n - first, first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n.max(1), &mut Vec::new(), &mut out);
    out
}

/// Number of partitions of each m <= n, by the standard counting DP.
pub fn partition_counts(n: u32) -> Vec<u64> {
    let n = n as usize;
    let mut p = vec![0u64; n + 1];
    p[0] = 1;
    for part in 1..=n {
        for m in part..=n {
            p[m] += p[m - part];
        }
    }
    p
}

/// Transition-measure weight of an addable corner as an uncancelled
/// ratio of content products: numerator over outer corners, denominator
/// over the other addable corners.
pub type WeightRatio = (ParamPoly, ParamPoly);

pub fn transition_weights(lambda: &Partition) -> BTreeMap<Cell, WeightRatio> {
    let cd = corners(lambda);
    let mut out = BTreeMap::new();
    for &s in &cd.addable {
        let mut num = ParamPoly::from_int_const(1);
        for &r in &cd.outer {
            num = num * ParamPoly::linear(s.c as i64 - r.c as i64, s.r as i64 - r.r as i64);
        }
        let mut den = ParamPoly::from_int_const(1);
        for &t in &cd.addable {
            if t == s {
                continue;
            }
            den = den * ParamPoly::linear(s.c as i64 - t.c as i64, s.r as i64 - t.r as i64);
        }
        out.insert(s, (num, den));
    }
    out
}

/// Transition weights specialized at rational parameters; the ratio is
/// reduced by the rational division itself.
pub fn transition_weights_at(
    lambda: &Partition,
    e1: &Rational,
    e2: &Rational,
) -> Result<BTreeMap<Cell, Rational>> {
    let mut out = BTreeMap::new();
    for (s, (num, den)) in transition_weights(lambda) {
        let d = den.eval(e1, e2);
        if d.is_zero() {
            return Err(Error::DegenerateParameters(format!(
                "coinciding addable-corner contents for {lambda} at corner {s}"
            )));
        }
        out.insert(s, num.eval(e1, e2) / d);
    }
    Ok(out)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TForm {
    /// Product over the cells of the diagram and their shifts.
    Diagram,
    /// Ratio of outer-corner factors over addable-corner factors.
    Corner,
}

/// The eigenvalue function T_lambda(u) as a rational function in u with
/// polynomial parameter coefficients.
pub fn t_lambda(lambda: &Partition, form: TForm) -> RationalFunction<ParamPoly> {
    match form {
        TForm::Diagram => {
            let mut num = UniPoly::linear_root(&ParamPoly::zero_poly()); // u
            let mut den = UniPoly::one_poly();
            let mut rf_num = UniPoly::one_poly();
            for s in lambda.cells() {
                let (c, r) = (s.c as i64, s.r as i64);
                rf_num = rf_num
                    .mul(&UniPoly::linear_root(&ParamPoly::linear(c, r)))
                    .mul(&UniPoly::linear_root(&ParamPoly::linear(c + 1, r + 1)));
                den = den
                    .mul(&UniPoly::linear_root(&ParamPoly::linear(c + 1, r)))
                    .mul(&UniPoly::linear_root(&ParamPoly::linear(c, r + 1)));
            }
            num = num.mul(&den);
            RationalFunction::new(rf_num, num)
        }
        TForm::Corner => {
            let cd = corners(lambda);
            let num = UniPoly::from_roots(cd.outer.iter().map(|r| r.content()));
            let den = UniPoly::from_roots(cd.addable.iter().map(|s| s.content()));
            RationalFunction::new(num, den)
        }
    }
}

/// T_lambda(u) with parameters specialized, in corner form.
pub fn t_lambda_at(lambda: &Partition, e1: &Rational, e2: &Rational) -> RationalFunction<Rational> {
    let cd = corners(lambda);
    let num = UniPoly::from_roots(cd.outer.iter().map(|r| r.content_at(e1, e2)));
    let den = UniPoly::from_roots(cd.addable.iter().map(|s| s.content_at(e1, e2)));
    RationalFunction::new(num, den)
}

/// The scalar T_lambda(u0) at specialized parameters.
pub fn t_value(lambda: &Partition, u0: &Rational, e1: &Rational, e2: &Rational) -> Result<Rational> {
    let cd = corners(lambda);
    let mut num = Rational::from_integer(1.into());
    for r in &cd.outer {
        num *= u0 - r.content_at(e1, e2);
    }
    let mut den = Rational::from_integer(1.into());
    for s in &cd.addable {
        let f = u0 - s.content_at(e1, e2);
        if f.is_zero() {
            return Err(Error::ResolventPole(u0.to_string()));
        }
        den *= f;
    }
    Ok(num / den)
}
