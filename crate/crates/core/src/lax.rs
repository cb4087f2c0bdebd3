//! The Lax operator on the degree-n component F[w]_n, its matrix and
//! transfer-operator compressions, and the cut-and-join operator.
//!
//! On a monomial V_mu w^l the operator acts by three mechanisms:
//! creation V_k * V_mu w^{l-k} for 1 <= k <= l, annihilation
//! hbar * k * d_k(mu) * V_{mu \ k} w^{l+k} for each part size k, and the
//! diagonal term ebar * l * V_mu w^l.

use crate::exactalg::{ExactMatrix, ParamPoly, Rational, Scalar};
use crate::fock::{basis, norm_sq, BasisIndex, FockVector};
use crate::partitions::enumerate_partitions;
use crate::{Error, Result};
use num::Zero;

/// Applies the Lax operator to a degree-homogeneous vector; the result
/// stays in the same graded component.
pub fn apply_lax<T: Scalar>(x: &FockVector<T>, ebar: &T, hbar: &T) -> FockVector<T> {
    let n = x.degree();
    let mut out = FockVector::zero_vec(n);
    for (idx, c) in x.terms() {
        // creation: w^l -> V_k w^{l-k}
        for k in 1..=idx.l {
            out.add_term(BasisIndex::new(idx.mu.with_part(k), idx.l - k), c.clone());
        }
        // annihilation: V_k -> hbar * k * w^k per available part
        for (k, d) in idx.mu.multiplicities() {
            let coeff = c
                .mul_ref(hbar)
                .mul_ref(&T::from_int(k as i64 * d as i64));
            out.add_term(BasisIndex::new(idx.mu.without_part(k), idx.l + k), coeff);
        }
        // diagonal: ebar * l
        if idx.l > 0 {
            out.add_term(
                idx.clone(),
                c.mul_ref(ebar).mul_ref(&T::from_int(idx.l as i64)),
            );
        }
    }
    out
}

/// Matrix of the Lax operator on F[w]_n in the standard basis order;
/// column j is the image of the j-th basis monomial.
pub fn lax_matrix<T: Scalar>(n: u32, ebar: &T, hbar: &T) -> ExactMatrix<T> {
    let order = basis(n);
    let cols = order
        .iter()
        .map(|idx| {
            let img = apply_lax(
                &FockVector::basis_vector(n, idx.clone()),
                ebar,
                hbar,
            );
            img.to_coords(&order)
        })
        .collect();
    ExactMatrix::from_columns(cols)
}

/// Lax matrix at specialized parameters (e1, e2).
pub fn lax_matrix_at(n: u32, e1: &Rational, e2: &Rational) -> ExactMatrix<Rational> {
    lax_matrix(n, &(e1 + e2), &(-(e1 * e2)))
}

/// Lax matrix with polynomial entries in the parameters.
pub fn lax_matrix_symbolic(n: u32) -> ExactMatrix<ParamPoly> {
    lax_matrix(n, &ParamPoly::ebar(), &ParamPoly::hbar())
}

/// Checks G * M == M^T * G where G is the diagonal Gram matrix of
/// squared basis norms, i.e. self-adjointness for the Hall product.
pub fn check_self_adjoint<T: Scalar>(n: u32, ebar: &T, hbar: &T) -> bool {
    let order = basis(n);
    let m = lax_matrix(n, ebar, hbar);
    let norms: Vec<T> = order.iter().map(|idx| norm_sq(idx, hbar)).collect();
    for i in 0..order.len() {
        for j in 0..order.len() {
            let lhs = norms[i].mul_ref(m.get(i, j));
            let rhs = m.get(j, i).mul_ref(&norms[j]);
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

/// Matrix of the transfer operator u0 |-> pi_0 (u0 - L)^{-1} pi_0 on
/// the degree-n Fock component, in the partition basis of
/// `enumerate_partitions(n)`. Errors with `ResolventPole` when u0 is an
/// eigenvalue of the Lax matrix.
pub fn transfer_matrix(
    n: u32,
    u0: &Rational,
    e1: &Rational,
    e2: &Rational,
) -> Result<ExactMatrix<Rational>> {
    let order = basis(n);
    let dim = order.len();
    let l = lax_matrix_at(n, e1, e2);
    let mut a = ExactMatrix::zeros(dim, dim);
    for i in 0..dim {
        for j in 0..dim {
            let mut v = -l.get(i, j).clone();
            if i == j {
                v += u0;
            }
            a.set(i, j, v);
        }
    }
    // positions of the w^0 monomials V_mu, |mu| = n
    let parts = enumerate_partitions(n);
    let positions: Vec<usize> = order
        .iter()
        .enumerate()
        .filter(|(_, idx)| idx.l == 0)
        .map(|(i, _)| i)
        .collect();
    debug_assert_eq!(positions.len(), parts.len());

    let rhs: Vec<Vec<Rational>> = positions
        .iter()
        .map(|&p| {
            let mut e = vec![Rational::zero(); dim];
            e[p] = num::One::one();
            e
        })
        .collect();
    let sols = a.solve_multi(&rhs).map_err(|err| match err {
        Error::SingularMatrix => Error::ResolventPole(format!(
            "u0 = {} is an eigenvalue of the degree-{} Lax matrix",
            u0, n
        )),
        other => other,
    })?;

    let cols: Vec<Vec<Rational>> = sols
        .iter()
        .map(|x| positions.iter().map(|&p| x[p].clone()).collect())
        .collect();
    Ok(ExactMatrix::from_columns(cols))
}

/// The cut-and-join operator on degree-n partition space: the w^0
/// compression of the cube of the Lax operator. Three normal-ordered
/// sums: a join term hbar^2 * i * j * V_{i+j} d_i d_j, a cut term
/// hbar * (i+j) * V_i V_j d_{i+j}, and an Euler-type term
/// ebar * hbar * k^2 * V_k d_k.
pub fn cut_and_join<T: Scalar>(n: u32, ebar: &T, hbar: &T) -> ExactMatrix<T> {
    let parts = enumerate_partitions(n);
    let index: std::collections::BTreeMap<_, usize> = parts
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, p)| (p, i))
        .collect();
    let dim = parts.len();
    let mut m: ExactMatrix<T> = ExactMatrix::zeros(dim, dim);
    let mut bump = |row: usize, col: usize, c: T| {
        let v = m.get(row, col).add_ref(&c);
        m.set(row, col, v);
    };
    let hbar2 = hbar.mul_ref(hbar);
    for (col, mu) in parts.iter().enumerate() {
        let mults = mu.multiplicities();
        // join: remove parts i then j (ordered pair), add part i + j
        for (&i, &di) in &mults {
            let inner = mu.without_part(i);
            for (&j, &dj) in inner.multiplicities().iter() {
                let target = inner.without_part(j).with_part(i + j);
                let c = hbar2
                    .mul_ref(&T::from_int((i * j) as i64))
                    .mul_ref(&T::from_int(di as i64 * dj as i64));
                bump(index[&target], col, c);
            }
        }
        // cut: remove part k, add parts j and k - j for each split
        for (&k, &dk) in &mults {
            let base = mu.without_part(k);
            for j in 1..k {
                let target = base.with_part(j).with_part(k - j);
                let c = hbar
                    .mul_ref(&T::from_int((k * dk) as i64));
                bump(index[&target], col, c);
            }
        }
        // Euler-type diagonal contribution
        let mut diag = T::zero();
        for (&k, &dk) in &mults {
            diag = diag.add_ref(&T::from_int((k * k * dk) as i64));
        }
        bump(col, col, diag.mul_ref(ebar).mul_ref(hbar));
    }
    m
}

/// The w^0 compression of the k-th power of the Lax matrix on F[w]_n,
/// in the partition basis; the moments of the transfer operator.
pub fn lax_power_compression<T: Scalar>(
    n: u32,
    k: u32,
    ebar: &T,
    hbar: &T,
) -> ExactMatrix<T> {
    let order = basis(n);
    let l = lax_matrix(n, ebar, hbar);
    let mut p = ExactMatrix::identity(order.len());
    for _ in 0..k {
        p = l.matmul(&p);
    }
    let positions: Vec<usize> = order
        .iter()
        .enumerate()
        .filter(|(_, idx)| idx.l == 0)
        .map(|(i, _)| i)
        .collect();
    let mut out = ExactMatrix::zeros(positions.len(), positions.len());
    for (i, &pi) in positions.iter().enumerate() {
        for (j, &pj) in positions.iter().enumerate() {
            out.set(i, j, p.get(pi, pj).clone());
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{rat, rat_int};
    use crate::partitions::{t_value, Partition};
    use num::One;

    #[test]
    fn action_on_small_monomials() {
        let ebar = ParamPoly::ebar();
        let hbar = ParamPoly::hbar();
        // L(w) = V1 + ebar * w
        let w = FockVector::basis_vector(1, BasisIndex::new(Partition::empty(), 1));
        let lw = apply_lax(&w, &ebar, &hbar);
        assert_eq!(
            lw.coeff(&BasisIndex::new(Partition::new(vec![1]), 0)),
            ParamPoly::one()
        );
        assert_eq!(lw.coeff(&BasisIndex::new(Partition::empty(), 1)), ebar);

        // L(V1) = hbar * w
        let v1 = FockVector::basis_vector(1, BasisIndex::new(Partition::new(vec![1]), 0));
        let lv1 = apply_lax(&v1, &ParamPoly::ebar(), &hbar);
        assert_eq!(lv1.num_terms(), 1);
        assert_eq!(lv1.coeff(&BasisIndex::new(Partition::empty(), 1)), hbar);

        // L(V1 w) = V1^2 + ebar * V1 w + hbar * w^2
        let v1w = FockVector::basis_vector(2, BasisIndex::new(Partition::new(vec![1]), 1));
        let out = apply_lax(&v1w, &ParamPoly::ebar(), &ParamPoly::hbar());
        assert_eq!(
            out.coeff(&BasisIndex::new(Partition::new(vec![1, 1]), 0)),
            ParamPoly::one()
        );
        assert_eq!(
            out.coeff(&BasisIndex::new(Partition::new(vec![1]), 1)),
            ParamPoly::ebar()
        );
        assert_eq!(
            out.coeff(&BasisIndex::new(Partition::empty(), 2)),
            ParamPoly::hbar()
        );
        assert_eq!(out.num_terms(), 3);
    }

    #[test]
    fn degree_one_matrix_and_char_poly() {
        let m = lax_matrix_symbolic(1);
        // basis order (V1, w)
        assert_eq!(m.get(0, 0), &ParamPoly::zero());
        assert_eq!(m.get(0, 1), &ParamPoly::one());
        assert_eq!(m.get(1, 0), &ParamPoly::hbar());
        assert_eq!(m.get(1, 1), &ParamPoly::ebar());
        // char poly (u - e1)(u - e2) = u^2 - ebar*u - hbar
        let cp = m.char_poly();
        assert_eq!(cp.coeff(2), ParamPoly::one());
        assert_eq!(cp.coeff(1), -ParamPoly::ebar());
        assert_eq!(cp.coeff(0), -ParamPoly::hbar());
    }

    #[test]
    fn symbolic_matches_specialized() {
        let (e1, e2) = (rat_int(2), rat_int(-3));
        for n in 0..=4u32 {
            let sym = lax_matrix_symbolic(n).map(|p| p.eval(&e1, &e2));
            assert_eq!(sym, lax_matrix_at(n, &e1, &e2));
        }
    }

    #[test]
    fn self_adjoint_small_degrees() {
        assert!(check_self_adjoint(3, &ParamPoly::ebar(), &ParamPoly::hbar()));
        for n in 0..=6u32 {
            assert!(check_self_adjoint(n, &rat(-1, 5), &rat(7, 3)));
        }
    }

    #[test]
    fn transfer_degree_one_value() {
        let t = transfer_matrix(1, &rat_int(10), &rat_int(2), &rat_int(-3)).unwrap();
        assert_eq!(t.nrows(), 1);
        assert_eq!(t.get(0, 0), &rat(11, 104));
        // matches the corner-product form of the eigenvalue
        let tv = t_value(
            &Partition::new(vec![1]),
            &rat_int(10),
            &rat_int(2),
            &rat_int(-3),
        )
        .unwrap();
        assert_eq!(tv, rat(11, 104));
    }

    #[test]
    fn transfer_matrices_commute() {
        let (e1, e2) = (rat_int(2), rat_int(-3));
        for n in 1..=4u32 {
            let t1 = transfer_matrix(n, &rat_int(10), &e1, &e2).unwrap();
            let t2 = transfer_matrix(n, &rat(91, 9), &e1, &e2).unwrap();
            assert_eq!(t1.matmul(&t2), t2.matmul(&t1));
        }
    }

    #[test]
    fn transfer_rejects_eigenvalue_u0() {
        // u0 = e1 is an eigenvalue in degree 1
        let err = transfer_matrix(1, &rat_int(2), &rat_int(2), &rat_int(-3)).unwrap_err();
        assert!(matches!(err, Error::ResolventPole(_)));
    }

    #[test]
    fn cut_and_join_is_cubed_compression() {
        let ebar = ParamPoly::ebar();
        let hbar = ParamPoly::hbar();
        for n in 1..=5u32 {
            assert_eq!(
                cut_and_join(n, &ebar, &hbar),
                lax_power_compression(n, 3, &ebar, &hbar)
            );
        }
    }

    #[test]
    fn moment_traces_match_transfer_series() {
        // trace of the w^0 compression of L^k equals the sum over
        // partitions of the u^{-(k+1)} series coefficient of the
        // transfer eigenvalue
        let (e1, e2) = (rat_int(2), rat_int(-3));
        for n in 1..=5u32 {
            for k in 1..=4u32 {
                let m = lax_power_compression(n, k, &(&e1 + &e2), &-(&e1 * &e2));
                let mut total = Rational::zero();
                for lam in enumerate_partitions(n) {
                    let series =
                        crate::partitions::t_lambda_at(&lam, &e1, &e2).series_at_infinity(
                            k as usize + 1,
                        );
                    total += series[k as usize].clone();
                }
                assert_eq!(m.trace(), total, "n={} k={}", n, k);
            }
        }
    }
}
