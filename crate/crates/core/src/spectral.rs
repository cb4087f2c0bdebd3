//! Cyclic spaces generated by Jack polynomials under the Lax operator,
//! their eigenfunctions, Titchmarsh-Weyl functions, and the full set of
//! structural verifications at specialized parameters.

use crate::exactalg::{ExactMatrix, Rational, RationalFunction, UniPoly};
use crate::fock::{basis, dimension, inner, BasisIndex, FockVector};
use crate::jack::compute_jacks;
use crate::lax::apply_lax;
use crate::partitions::{corners, enumerate_partitions, transition_weights_at, Cell, Partition};
use crate::{Error, Result};
use num::{One, Zero};
use std::collections::BTreeMap;

/// The cyclic space Z generated by a Jack polynomial under the Lax
/// operator, with a square-root-free orthogonal basis and the
/// compressions of the operator onto Z and onto the orthogonal
/// complement of the generator inside Z.
#[derive(Clone, Debug)]
pub struct CyclicSpace {
    pub lambda: Partition,
    pub n: u32,
    pub e1: Rational,
    pub e2: Rational,
    pub ebar: Rational,
    pub hbar: Rational,
    /// Raw Krylov vectors j, Lj, L^2 j, ... up to saturation.
    pub krylov: Vec<FockVector<Rational>>,
    /// Orthogonal (not normalized) basis of Z; ortho[0] = j.
    pub ortho: Vec<FockVector<Rational>>,
    /// Squared Hall norms of the orthogonal basis vectors.
    pub ortho_norms: Vec<Rational>,
    pub dim: usize,
    /// The generator J = j_lambda, embedded in the w^0 slice.
    pub j: FockVector<Rational>,
    /// Jtilde = L J (the generator has no diagonal J-component).
    pub jtilde: FockVector<Rational>,
    /// Matrix of L restricted to Z in the `ortho` basis.
    pub compressed_l: ExactMatrix<Rational>,
    /// Matrix of the compression of L to (span J)^perp inside Z, in the
    /// basis ortho[1..].
    pub compressed_ltilde: ExactMatrix<Rational>,
}

fn hall_inner(
    x: &FockVector<Rational>,
    y: &FockVector<Rational>,
    hbar: &Rational,
) -> Rational {
    inner(x, y, hbar).expect("degree match within one cyclic space")
}

/// Builds the cyclic space of j_lambda at (e1, e2), computing the Jack
/// polynomial internally.
pub fn build_cyclic(lambda: &Partition, e1: &Rational, e2: &Rational) -> Result<CyclicSpace> {
    let table = compute_jacks(lambda.size(), e1, e2)?;
    let j = table
        .get(lambda)
        .cloned()
        .ok_or_else(|| Error::InvalidInput(format!("unknown partition {}", lambda)))?;
    build_cyclic_from(lambda, &j, e1, e2)
}

/// Builds the cyclic space from an already-computed Jack polynomial.
pub fn build_cyclic_from(
    lambda: &Partition,
    j: &FockVector<Rational>,
    e1: &Rational,
    e2: &Rational,
) -> Result<CyclicSpace> {
    let n = lambda.size();
    let ebar = e1 + e2;
    let hbar = -(e1 * e2);
    let cd = corners(lambda);

    // the expected spectrum must be simple at this specialization
    let addable_contents: Vec<Rational> =
        cd.addable.iter().map(|s| s.content_at(e1, e2)).collect();
    for i in 0..addable_contents.len() {
        for k in i + 1..addable_contents.len() {
            if addable_contents[i] == addable_contents[k] {
                return Err(Error::DegenerateParameters(format!(
                    "contents of addable corners {} and {} coincide at ({}, {})",
                    cd.addable[i], cd.addable[k], e1, e2
                )));
            }
        }
    }

    let mut krylov = vec![j.clone()];
    let mut ortho = vec![j.clone()];
    let mut norms = vec![hall_inner(j, j, &hbar)];
    if norms[0].is_zero() {
        return Err(Error::DegenerateParameters(format!(
            "the generator for {} is isotropic at ({}, {})",
            lambda, e1, e2
        )));
    }
    loop {
        let next = apply_lax(krylov.last().unwrap(), &ebar, &hbar);
        let mut q = next.clone();
        for (b, nb) in ortho.iter().zip(&norms) {
            let c = hall_inner(&next, b, &hbar) / nb;
            q = q.sub(&b.scale_by(&c))?;
        }
        if q.is_zero_vec() {
            break;
        }
        let nq = hall_inner(&q, &q, &hbar);
        if nq.is_zero() {
            return Err(Error::DegenerateParameters(format!(
                "isotropic Krylov vector for {} at ({}, {})",
                lambda, e1, e2
            )));
        }
        krylov.push(next);
        ortho.push(q);
        norms.push(nq);
    }
    let dim = ortho.len();
    if dim != cd.addable.len() {
        return Err(Error::TheoremViolation(format!(
            "cyclic space of {} has dimension {}, expected {} addable corners",
            lambda,
            dim,
            cd.addable.len()
        )));
    }

    // compression of L in the orthogonal basis, with exact residual check
    let mut cl = ExactMatrix::zeros(dim, dim);
    for (col, b) in ortho.iter().enumerate() {
        let lb = apply_lax(b, &ebar, &hbar);
        let mut residual = lb.clone();
        for (row, (q, nq)) in ortho.iter().zip(&norms).enumerate() {
            let c = hall_inner(&lb, q, &hbar) / nq;
            residual = residual.sub(&q.scale_by(&c))?;
            cl.set(row, col, c);
        }
        if !residual.is_zero_vec() {
            return Err(Error::TheoremViolation(format!(
                "L does not preserve the cyclic space of {}",
                lambda
            )));
        }
    }

    // ortho[1..] spans the complement of J inside Z; the compression of
    // L there is the corresponding minor of the Gram coefficients
    let mut clt = ExactMatrix::zeros(dim - 1, dim - 1);
    for col in 1..dim {
        for row in 1..dim {
            clt.set(row - 1, col - 1, cl.get(row, col).clone());
        }
    }

    let jtilde = apply_lax(j, &ebar, &hbar);
    Ok(CyclicSpace {
        lambda: lambda.clone(),
        n,
        e1: e1.clone(),
        e2: e2.clone(),
        ebar,
        hbar,
        krylov,
        ortho,
        ortho_norms: norms,
        dim,
        j: j.clone(),
        jtilde,
        compressed_l: cl,
        compressed_ltilde: clt,
    })
}

impl CyclicSpace {
    /// Coordinates of a vector of Z in the orthogonal basis.
    pub fn coords(&self, x: &FockVector<Rational>) -> Vec<Rational> {
        self.ortho
            .iter()
            .zip(&self.ortho_norms)
            .map(|(q, nq)| hall_inner(x, q, &self.hbar) / nq)
            .collect()
    }

    pub fn from_coords(&self, coords: &[Rational]) -> FockVector<Rational> {
        let mut out = FockVector::zero_vec(self.n);
        for (q, c) in self.ortho.iter().zip(coords) {
            out = out.add(&q.scale_by(c)).unwrap();
        }
        out
    }

    /// The diagonal J-component of L J; zero by the structure of the
    /// operator.
    pub fn a_coefficient(&self) -> Rational {
        hall_inner(&self.jtilde, &self.j, &self.hbar)
            / hall_inner(&self.j, &self.j, &self.hbar)
    }
}

/// Normalized eigenfunctions of L restricted to one cyclic space,
/// keyed by the addable corner.
#[derive(Clone, Debug)]
pub struct EigenSystem {
    pub lambda: Partition,
    pub n: u32,
    pub e1: Rational,
    pub e2: Rational,
    pub eigs: BTreeMap<Cell, (Rational, FockVector<Rational>)>,
}

impl EigenSystem {
    pub fn psi(&self, s: &Cell) -> Option<&FockVector<Rational>> {
        self.eigs.get(s).map(|(_, v)| v)
    }

    pub fn eigenvalue(&self, s: &Cell) -> Option<&Rational> {
        self.eigs.get(s).map(|(v, _)| v)
    }
}

fn scale_to_generator(
    z: &CyclicSpace,
    raw: &FockVector<Rational>,
    what: &str,
) -> Result<FockVector<Rational>> {
    // pi_0 of any member of Z is a multiple of j; the multiple is read
    // off the leading V_1^n coefficient because j is monic there
    let v1n = BasisIndex::new(Partition::new(vec![1; z.n as usize]), 0);
    let alpha = raw.coeff(&v1n);
    if alpha.is_zero() {
        return Err(Error::TheoremViolation(format!(
            "{} for {} has no generator component",
            what, z.lambda
        )));
    }
    let psi = raw.scale_by(&(Rational::one() / alpha));
    // confirm pi_0 psi = j exactly
    let mut pi0 = FockVector::zero_vec(z.n);
    for (mu, c) in psi.pi_l(0) {
        pi0.add_term(BasisIndex::new(mu, 0), c);
    }
    if pi0 != z.j {
        return Err(Error::TheoremViolation(format!(
            "{} for {}: w^0 slice is not the Jack polynomial",
            what, z.lambda
        )));
    }
    Ok(psi)
}

/// Computes the eigenfunctions of L on a cyclic space by two
/// independent routes and checks they agree exactly: (A) kernels of the
/// compressed operator, (B) the resolvent formula
/// psi = J + (sigma - Ltilde)^{-1} Jtilde.
pub fn eigenfunctions(z: &CyclicSpace) -> Result<EigenSystem> {
    let cd = corners(&z.lambda);
    let mut eigs = BTreeMap::new();
    for s in &cd.addable {
        let sigma = s.content_at(&z.e1, &z.e2);

        // route A: kernel of compressed_L - sigma
        let mut m = z.compressed_l.clone();
        for d in 0..z.dim {
            let v = m.get(d, d) - &sigma;
            m.set(d, d, v);
        }
        let kernel = m.kernel_basis();
        if kernel.len() != 1 {
            return Err(Error::TheoremViolation(format!(
                "eigenvalue {} of {} has multiplicity {} inside Z",
                sigma,
                z.lambda,
                kernel.len()
            )));
        }
        let psi_a = scale_to_generator(z, &z.from_coords(&kernel[0]), "kernel eigenvector")?;

        // route B: resolvent formula on the complement of J
        let psi_b = if z.dim == 1 {
            z.j.clone()
        } else {
            let jt_coords = z.coords(&z.jtilde);
            debug_assert!(jt_coords[0].is_zero());
            let mut res = ExactMatrix::zeros(z.dim - 1, z.dim - 1);
            for i in 0..z.dim - 1 {
                for k in 0..z.dim - 1 {
                    let mut v = -z.compressed_ltilde.get(i, k).clone();
                    if i == k {
                        v += &sigma;
                    }
                    res.set(i, k, v);
                }
            }
            let y = res.solve(&jt_coords[1..]).map_err(|_| {
                Error::ResolventPole(format!(
                    "{} is in the spectrum of the compressed complement for {}",
                    sigma, z.lambda
                ))
            })?;
            let mut coords = vec![Rational::one()];
            coords.extend(y);
            scale_to_generator(z, &z.from_coords(&coords), "resolvent eigenvector")?
        };

        if psi_a != psi_b {
            return Err(Error::TheoremViolation(format!(
                "kernel and resolvent routes disagree for {} at corner {}",
                z.lambda, s
            )));
        }

        // the defining relation, exactly
        let image = apply_lax(&psi_a, &z.ebar, &z.hbar);
        if image != psi_a.scale_by(&sigma) {
            return Err(Error::TheoremViolation(format!(
                "L psi != sigma psi for {} at corner {}",
                z.lambda, s
            )));
        }

        eigs.insert(*s, (sigma, psi_a));
    }
    Ok(EigenSystem {
        lambda: z.lambda.clone(),
        n: z.n,
        e1: z.e1.clone(),
        e2: z.e2.clone(),
        eigs,
    })
}

/// Verifies j_lambda = sum_s tau_lambda^s psi_lambda^s with the
/// transition weights evaluated at the specialization.
pub fn superposition_check(z: &CyclicSpace, e: &EigenSystem) -> Result<bool> {
    let weights = transition_weights_at(&z.lambda, &z.e1, &z.e2)?;
    let mut total = FockVector::zero_vec(z.n);
    for (s, tau) in &weights {
        let psi = e
            .psi(s)
            .ok_or_else(|| Error::InvalidInput(format!("missing eigenfunction at {}", s)))?;
        total = total.add(&psi.scale_by(tau))?;
    }
    Ok(total == z.j)
}

/// The Titchmarsh-Weyl function of a cyclic space and its complement,
/// with the residues at their simple poles.
#[derive(Clone, Debug)]
pub struct TitchmarshWeyl {
    /// T = char(Ltilde) / char(L), in lowest terms.
    pub t: RationalFunction<Rational>,
    /// Ttilde = u - 1/T, in lowest terms.
    pub ttilde: RationalFunction<Rational>,
    /// Residues of T at the contents of the addable corners.
    pub residues: BTreeMap<Cell, Rational>,
    /// Residues of Ttilde at the contents of the outer corners.
    pub residues_tilde: BTreeMap<Cell, Rational>,
}

pub fn titchmarsh_weyl(z: &CyclicSpace) -> TitchmarshWeyl {
    let char_l = z.compressed_l.char_poly();
    let char_lt = z.compressed_ltilde.char_poly();
    let t = RationalFunction::new(char_lt.clone(), char_l.clone()).reduce();
    // u - 1/T = (u * num - den) / num
    let ttilde = RationalFunction::new(
        UniPoly::x().mul(t.num()).sub(t.den()),
        t.num().clone(),
    )
    .reduce();
    let cd = corners(&z.lambda);
    let residues = cd
        .addable
        .iter()
        .map(|s| (*s, t.residue_at_simple_pole(&s.content_at(&z.e1, &z.e2))))
        .collect();
    let residues_tilde = cd
        .outer
        .iter()
        .map(|r| {
            (
                *r,
                ttilde.residue_at_simple_pole(&r.content_at(&z.e1, &z.e2)),
            )
        })
        .collect();
    TitchmarshWeyl {
        t,
        ttilde,
        residues,
        residues_tilde,
    }
}

/// The full suite of structural checks on one cyclic space: spectra of
/// both compressions, strict interlacing, norm identities, the
/// complementary eigenvector family, and the Titchmarsh-Weyl relation.
/// Returns failure descriptions; empty means everything holds.
pub fn verify_appendix(z: &CyclicSpace, e: &EigenSystem) -> Vec<String> {
    let mut failures = Vec::new();
    let cd = corners(&z.lambda);

    // (a) the generator has no diagonal component
    if !z.a_coefficient().is_zero() {
        failures.push(format!("<J, LJ> != 0 for {}", z.lambda));
    }

    // (b) spec(Ltilde) = contents of the outer corners, with strict
    // interlacing between the eigenvalues of L on Z
    let char_lt = z.compressed_ltilde.char_poly();
    let outer_contents: Vec<Rational> =
        cd.outer.iter().map(|r| r.content_at(&z.e1, &z.e2)).collect();
    if char_lt != UniPoly::from_roots(outer_contents.clone()) {
        failures.push(format!(
            "char(Ltilde) is not the outer-corner content product for {}",
            z.lambda
        ));
    }
    let mut spec_l: Vec<Rational> = cd
        .addable
        .iter()
        .map(|s| s.content_at(&z.e1, &z.e2))
        .collect();
    let mut spec_lt = outer_contents;
    spec_l.sort();
    spec_lt.sort();
    if spec_lt.len() + 1 != spec_l.len() {
        failures.push(format!("corner count mismatch for {}", z.lambda));
    } else {
        for (i, r) in spec_lt.iter().enumerate() {
            if !(&spec_l[i] < r && r < &spec_l[i + 1]) {
                failures.push(format!(
                    "interlacing fails for {} at position {}",
                    z.lambda, i
                ));
            }
        }
    }

    // (c) tau * |psi|^2 = |J|^2 per eigenfunction, with tau read off as
    // a residue of T
    let tw = titchmarsh_weyl(z);
    let jj = hall_inner(&z.j, &z.j, &z.hbar);
    for s in &cd.addable {
        let tau = &tw.residues[s];
        let psi = e.psi(s).expect("eigenfunction present");
        let pp = hall_inner(psi, psi, &z.hbar);
        if tau * &pp != jj {
            failures.push(format!(
                "tau |psi|^2 != |J|^2 for {} at corner {}",
                z.lambda, s
            ));
        }
    }

    // residues of T agree with the corner-product transition weights
    match transition_weights_at(&z.lambda, &z.e1, &z.e2) {
        Ok(weights) => {
            for s in &cd.addable {
                if weights[s] != tw.residues[s] {
                    failures.push(format!(
                        "residue of T differs from the transition weight at {} for {}",
                        s, z.lambda
                    ));
                }
            }
        }
        Err(err) => failures.push(format!("transition weights unavailable: {}", err)),
    }

    // (d) the complementary family psitilde = (L - sigma~)^{-1} J with
    // normalization <J, L psitilde> = <J, J>, and Jtilde as their
    // residue-weighted superposition
    let mut jt_sum = FockVector::zero_vec(z.n);
    for r in &cd.outer {
        let sigma_t = r.content_at(&z.e1, &z.e2);
        let mut m = z.compressed_l.clone();
        for d in 0..z.dim {
            let v = m.get(d, d) - &sigma_t;
            m.set(d, d, v);
        }
        let j_coords = z.coords(&z.j);
        match m.solve(&j_coords) {
            Ok(x) => {
                let psit = z.from_coords(&x);
                let lpsit = apply_lax(&psit, &z.ebar, &z.hbar);
                let proj = hall_inner(&z.j, &lpsit, &z.hbar);
                if proj != jj {
                    failures.push(format!(
                        "<J, L psitilde> != |J|^2 for {} at outer corner {}",
                        z.lambda, r
                    ));
                }
                jt_sum = jt_sum
                    .add(&psit.scale_by(&tw.residues_tilde[r]))
                    .unwrap();
            }
            Err(_) => failures.push(format!(
                "resolvent at outer corner {} is singular for {}",
                r, z.lambda
            )),
        }
    }
    if !cd.outer.is_empty() && jt_sum != z.jtilde {
        failures.push(format!(
            "Jtilde is not the weighted sum of the complementary family for {}",
            z.lambda
        ));
    }

    // (e) 1/T + Ttilde = u as rational functions
    let lhs_num = tw
        .t
        .den()
        .mul(tw.ttilde.den())
        .add(&tw.ttilde.num().mul(tw.t.num()));
    let lhs_den = tw.t.num().mul(tw.ttilde.den());
    let lhs = RationalFunction::new(lhs_num, lhs_den);
    let u_rf = RationalFunction::new(UniPoly::x(), UniPoly::one_poly());
    if !lhs.equivalent(&u_rf) {
        failures.push(format!("1/T + Ttilde != u for {}", z.lambda));
    }

    // (f) arrival identity: sum_k V_k pi_k psi = sigma * j
    for s in &cd.addable {
        let (sigma, psi) = &e.eigs[s];
        let mut arr = FockVector::zero_vec(z.n);
        for k in 1..=z.n {
            for (mu, c) in psi.pi_l(k) {
                arr.add_term(BasisIndex::new(mu.with_part(k), 0), c);
            }
        }
        if arr != z.j.scale_by(sigma) {
            failures.push(format!(
                "arrival identity fails for {} at corner {}",
                z.lambda, s
            ));
        }
    }

    // (g) pi_0 of low powers of L applied to j stays in span{j}
    let mut v = z.j.clone();
    for _ in 0..(2 * z.dim) {
        v = apply_lax(&v, &z.ebar, &z.hbar);
        let v1n = BasisIndex::new(Partition::new(vec![1; z.n as usize]), 0);
        let alpha = v.coeff(&v1n);
        let mut pi0 = FockVector::zero_vec(z.n);
        for (mu, c) in v.pi_l(0) {
            pi0.add_term(BasisIndex::new(mu, 0), c);
        }
        if pi0 != z.j.scale_by(&alpha) {
            failures.push(format!(
                "projection of a power of L leaves span of j for {}",
                z.lambda
            ));
            break;
        }
    }

    failures
}

/// Per-degree decomposition report.
#[derive(Clone, Debug)]
pub struct DecompositionReport {
    pub n: u32,
    pub dims: BTreeMap<Partition, usize>,
    pub total_dim: usize,
    pub space_dim: usize,
    pub failures: Vec<String>,
}

impl DecompositionReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Builds every cyclic space of degree n and verifies that they are
/// pairwise orthogonal, that their dimensions add up to the dimension
/// of the graded component, and that the union of all eigenfunctions is
/// a basis.
pub fn decompose(n: u32, e1: &Rational, e2: &Rational) -> Result<DecompositionReport> {
    let table = compute_jacks(n, e1, e2)?;
    let hbar = -(e1 * e2);
    let mut spaces = Vec::new();
    for lam in enumerate_partitions(n) {
        let j = table.get(&lam).unwrap();
        spaces.push(build_cyclic_from(&lam, j, e1, e2)?);
    }
    let mut failures = Vec::new();

    for i in 0..spaces.len() {
        for k in i + 1..spaces.len() {
            'outer: for x in &spaces[i].krylov {
                for y in &spaces[k].krylov {
                    if !hall_inner(x, y, &hbar).is_zero() {
                        failures.push(format!(
                            "cyclic spaces of {} and {} are not orthogonal",
                            spaces[i].lambda, spaces[k].lambda
                        ));
                        break 'outer;
                    }
                }
            }
        }
    }

    let space_dim = dimension(n);
    let total_dim: usize = spaces.iter().map(|z| z.dim).sum();
    if total_dim != space_dim {
        failures.push(format!(
            "dimensions add to {} instead of {}",
            total_dim, space_dim
        ));
    }

    // all eigenfunctions together must have full rank
    let order = basis(n);
    let mut cols = Vec::new();
    for z in &spaces {
        let es = eigenfunctions(z)?;
        for (_, (_, psi)) in &es.eigs {
            cols.push(psi.to_coords(&order));
        }
    }
    let m = ExactMatrix::from_columns(cols);
    if m.ncols() != space_dim || m.rank() != space_dim {
        failures.push(format!(
            "eigenfunction family has rank {} in dimension {}",
            m.rank(),
            space_dim
        ));
    }

    let dims = spaces
        .iter()
        .map(|z| (z.lambda.clone(), z.dim))
        .collect();
    Ok(DecompositionReport {
        n,
        dims,
        total_dim,
        space_dim,
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{rat, rat_int};

    fn part(p: &[u32]) -> Partition {
        Partition::new(p.to_vec())
    }

    fn std_eps() -> (Rational, Rational) {
        (rat_int(2), rat_int(-3))
    }

    #[test]
    fn empty_partition_space() {
        let (e1, e2) = std_eps();
        let z = build_cyclic(&Partition::empty(), &e1, &e2).unwrap();
        assert_eq!(z.dim, 1);
        let es = eigenfunctions(&z).unwrap();
        let psi = es.psi(&Cell::new(0, 0)).unwrap();
        assert_eq!(psi.num_terms(), 1);
        assert_eq!(es.eigenvalue(&Cell::new(0, 0)), Some(&rat_int(0)));
    }

    #[test]
    fn single_box_space() {
        let (e1, e2) = std_eps();
        let z = build_cyclic(&part(&[1]), &e1, &e2).unwrap();
        assert_eq!(z.dim, 2);
        // compressed L is similar to [[0,1],[hbar,ebar]]: same char poly
        let cp = z.compressed_l.char_poly();
        assert_eq!(
            cp,
            UniPoly::from_roots(vec![rat_int(2), rat_int(-3)])
        );
        let es = eigenfunctions(&z).unwrap();
        // psi^{(1,0)} = V1 + e1 w, psi^{(0,1)} = V1 + e2 w
        let psi_right = es.psi(&Cell::new(1, 0)).unwrap();
        assert_eq!(
            psi_right.coeff(&BasisIndex::new(Partition::empty(), 1)),
            rat_int(2)
        );
        let psi_up = es.psi(&Cell::new(0, 1)).unwrap();
        assert_eq!(
            psi_up.coeff(&BasisIndex::new(Partition::empty(), 1)),
            rat_int(-3)
        );
    }

    #[test]
    fn single_box_superposition_by_hand() {
        // (3/5)(V1 + 2w) + (2/5)(V1 - 3w) = V1
        let (e1, e2) = std_eps();
        let z = build_cyclic(&part(&[1]), &e1, &e2).unwrap();
        let es = eigenfunctions(&z).unwrap();
        assert!(superposition_check(&z, &es).unwrap());
        let w = transition_weights_at(&part(&[1]), &e1, &e2).unwrap();
        assert_eq!(w[&Cell::new(1, 0)], rat(3, 5));
        assert_eq!(w[&Cell::new(0, 1)], rat(2, 5));
    }

    #[test]
    fn dims_match_addable_corners() {
        let (e1, e2) = std_eps();
        for n in 0..=5u32 {
            let table = compute_jacks(n, &e1, &e2).unwrap();
            for lam in enumerate_partitions(n) {
                let z = build_cyclic_from(&lam, table.get(&lam).unwrap(), &e1, &e2).unwrap();
                assert_eq!(z.dim, corners(&lam).addable.len(), "lambda = {}", lam);
            }
        }
    }

    #[test]
    fn titchmarsh_weyl_single_box() {
        let (e1, e2) = std_eps();
        let z = build_cyclic(&part(&[1]), &e1, &e2).unwrap();
        let tw = titchmarsh_weyl(&z);
        // T = (u - ebar)/((u - e1)(u - e2)) = (u+1)/((u-2)(u+3))
        let expect = RationalFunction::new(
            UniPoly::from_roots(vec![rat_int(-1)]),
            UniPoly::from_roots(vec![rat_int(2), rat_int(-3)]),
        );
        assert!(tw.t.equivalent(&expect));
        assert_eq!(tw.residues[&Cell::new(1, 0)], rat(3, 5));
        assert_eq!(tw.residues[&Cell::new(0, 1)], rat(2, 5));
    }

    #[test]
    fn titchmarsh_weyl_matches_transfer_eigenvalue() {
        let (e1, e2) = std_eps();
        for n in 0..=4u32 {
            let table = compute_jacks(n, &e1, &e2).unwrap();
            for lam in enumerate_partitions(n) {
                let z = build_cyclic_from(&lam, table.get(&lam).unwrap(), &e1, &e2).unwrap();
                let tw = titchmarsh_weyl(&z);
                let corner_form = crate::partitions::t_lambda_at(&lam, &e1, &e2);
                assert!(tw.t.equivalent(&corner_form), "lambda = {}", lam);
            }
        }
    }

    #[test]
    fn appendix_suite_small() {
        let (e1, e2) = std_eps();
        for n in 0..=4u32 {
            let table = compute_jacks(n, &e1, &e2).unwrap();
            for lam in enumerate_partitions(n) {
                let z = build_cyclic_from(&lam, table.get(&lam).unwrap(), &e1, &e2).unwrap();
                let es = eigenfunctions(&z).unwrap();
                assert!(superposition_check(&z, &es).unwrap(), "lambda = {}", lam);
                let failures = verify_appendix(&z, &es);
                assert!(failures.is_empty(), "lambda = {}: {:?}", lam, failures);
            }
        }
    }

    #[test]
    fn decomposition_small_degrees() {
        let (e1, e2) = std_eps();
        for n in 1..=5u32 {
            let rep = decompose(n, &e1, &e2).unwrap();
            assert!(rep.passed(), "n = {}: {:?}", n, rep.failures);
            assert_eq!(rep.total_dim, rep.space_dim);
        }
    }

    #[test]
    fn repeated_eigenvalue_across_spaces_in_degree_four() {
        // the content e1 + e2 appears as an eigenvalue in two distinct
        // cyclic spaces of degree 4, yet the decomposition still holds
        let (e1, e2) = std_eps();
        let target = &e1 + &e2;
        let table = compute_jacks(4, &e1, &e2).unwrap();
        let mut hosts = Vec::new();
        for lam in enumerate_partitions(4) {
            let z = build_cyclic_from(&lam, table.get(&lam).unwrap(), &e1, &e2).unwrap();
            let es = eigenfunctions(&z).unwrap();
            if es.eigs.values().any(|(v, _)| *v == target) {
                hosts.push(lam.clone());
            }
        }
        assert_eq!(hosts, vec![part(&[3, 1]), part(&[2, 1, 1])]);
    }

    #[test]
    fn uber_symmetric_coefficient() {
        // the V2 w coefficient of psi for (2,1) at the middle corner is
        // e1^2 - e1 e2 + e2^2 = 19 at (2,-3)
        let (e1, e2) = std_eps();
        let z = build_cyclic(&part(&[2, 1]), &e1, &e2).unwrap();
        let es = eigenfunctions(&z).unwrap();
        let psi = es.psi(&Cell::new(1, 1)).unwrap();
        assert_eq!(
            psi.coeff(&BasisIndex::new(part(&[2]), 1)),
            rat_int(19)
        );
    }
}
