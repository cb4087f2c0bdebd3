use super::{Field, Scalar, UniPoly};
use crate::{Error, Result};

/// Dense row-major matrix over an exact scalar.
#[derive(Clone, PartialEq, Debug)]
pub struct ExactMatrix<T: Scalar> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> ExactMatrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, T::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        ExactMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_columns(cols: Vec<Vec<T>>) -> Self {
        let c = cols.len();
        let r = cols.first().map_or(0, |col| col.len());
        assert!(cols.iter().all(|col| col.len() == r), "ragged columns");
        let mut m = Self::zeros(r, c);
        for (j, col) in cols.into_iter().enumerate() {
            for (i, v) in col.into_iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut m = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(j, i, self.get(i, j).clone());
            }
        }
        m
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "inner dimension mismatch");
        let mut m = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = m.get(i, j).add_ref(&a.mul_ref(other.get(k, j)));
                    m.set(i, j, v);
                }
            }
        }
        m
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = T::zero();
                for j in 0..self.cols {
                    acc = acc.add_ref(&self.get(i, j).mul_ref(&v[j]));
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.add_ref(b))
            .collect();
        ExactMatrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.sub_ref(b))
            .collect();
        ExactMatrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: &T) -> Self {
        let data = self.data.iter().map(|a| a.mul_ref(c)).collect();
        ExactMatrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn trace(&self) -> T {
        assert!(self.is_square());
        let mut acc = T::zero();
        for i in 0..self.rows {
            acc = acc.add_ref(self.get(i, i));
        }
        acc
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> ExactMatrix<U> {
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    /// Monic characteristic polynomial det(uI - A) by Faddeev-LeVerrier;
    /// the only divisions are by the step index, exact over any
    /// characteristic-zero scalar.
    pub fn char_poly(&self) -> UniPoly<T> {
        assert!(self.is_square(), "char_poly needs a square matrix");
        let n = self.rows;
        let mut coeffs = vec![T::zero(); n + 1];
        coeffs[n] = T::one();
        let mut m = self.clone();
        for k in 1..=n {
            if k > 1 {
                // M_k = A (M_{k-1} + c_{n-k+1} I)
                let mut shifted = m;
                for i in 0..n {
                    let v = shifted.get(i, i).add_ref(&coeffs[n - k + 1]);
                    shifted.set(i, i, v);
                }
                m = self.matmul(&shifted);
            }
            coeffs[n - k] = m.trace().neg().div_int(k as i64);
        }
        UniPoly::new(coeffs)
    }

    /// Determinant by cofactor expansion; test oracle for small
    /// dimensions.
    pub fn det_cofactor(&self) -> T {
        assert!(self.is_square());
        let n = self.rows;
        match n {
            0 => return T::one(),
            1 => return self.get(0, 0).clone(),
            _ => {}
        }
        let mut acc = T::zero();
        for j in 0..n {
            let a = self.get(0, j);
            if a.is_zero() {
                continue;
            }
            let mut minor = Self::zeros(n - 1, n - 1);
            for i in 1..n {
                let mut cj = 0;
                for k in 0..n {
                    if k == j {
                        continue;
                    }
                    minor.set(i - 1, cj, self.get(i, k).clone());
                    cj += 1;
                }
            }
            let term = a.mul_ref(&minor.det_cofactor());
            acc = if j % 2 == 0 { acc.add_ref(&term) } else { acc.sub_ref(&term) };
        }
        acc
    }
}

impl<T: Field> ExactMatrix<T> {
    /// Fraction-free (Bareiss) forward elimination with back
    /// substitution, solving `A x = b` for each right-hand side at once.
    /// Pivoting takes the first nonzero entry in column order.
    pub fn solve_multi(&self, rhs: &[Vec<T>]) -> Result<Vec<Vec<T>>> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(format!(
                "solve requires a square matrix, got {}x{}",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        for b in rhs {
            if b.len() != n {
                return Err(Error::DimensionMismatch(format!(
                    "rhs length {} != {}",
                    b.len(),
                    n
                )));
            }
        }
        let extra = rhs.len();
        let width = n + extra;
        let mut a: Vec<Vec<T>> = (0..n)
            .map(|i| {
                let mut row: Vec<T> = self.row(i).to_vec();
                row.extend(rhs.iter().map(|b| b[i].clone()));
                row
            })
            .collect();
        let mut prev = T::one();
        for k in 0..n {
            let pivot_row = (k..n)
                .find(|&i| !a[i][k].is_zero())
                .ok_or(Error::SingularMatrix)?;
            a.swap(k, pivot_row);
            for i in (k + 1)..n {
                for j in (k + 1)..width {
                    let num = a[k][k]
                        .mul_ref(&a[i][j])
                        .sub_ref(&a[i][k].mul_ref(&a[k][j]));
                    a[i][j] = num.div_ref(&prev);
                }
                a[i][k] = T::zero();
            }
            prev = a[k][k].clone();
        }
        let mut solutions = vec![vec![T::zero(); n]; extra];
        for s in 0..extra {
            for i in (0..n).rev() {
                let mut acc = a[i][n + s].clone();
                for j in (i + 1)..n {
                    acc = acc.sub_ref(&a[i][j].mul_ref(&solutions[s][j]));
                }
                solutions[s][i] = acc.div_ref(&a[i][i]);
            }
        }
        Ok(solutions)
    }

    /// Exact solution of `A x = b` for square nonsingular `A`.
    pub fn solve(&self, b: &[T]) -> Result<Vec<T>> {
        Ok(self.solve_multi(&[b.to_vec()])?.pop().unwrap())
    }

    /// Determinant via Bareiss elimination (the final pivot).
    pub fn det(&self) -> T {
        assert!(self.is_square());
        let n = self.rows;
        if n == 0 {
            return T::one();
        }
        let mut a: Vec<Vec<T>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut prev = T::one();
        let mut sign_flip = false;
        for k in 0..n {
            let Some(pivot_row) = (k..n).find(|&i| !a[i][k].is_zero()) else {
                return T::zero();
            };
            if pivot_row != k {
                a.swap(k, pivot_row);
                sign_flip = !sign_flip;
            }
            for i in (k + 1)..n {
                for j in (k + 1)..n {
                    let num = a[k][k]
                        .mul_ref(&a[i][j])
                        .sub_ref(&a[i][k].mul_ref(&a[k][j]));
                    a[i][j] = num.div_ref(&prev);
                }
                a[i][k] = T::zero();
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        if sign_flip {
            d.neg()
        } else {
            d
        }
    }

    /// Reduced row echelon form; returns (rref rows, pivot columns).
    fn rref(&self) -> (Vec<Vec<T>>, Vec<usize>) {
        let mut a: Vec<Vec<T>> = (0..self.rows).map(|i| self.row(i).to_vec()).collect();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            let Some(p) = (r..self.rows).find(|&i| !a[i][c].is_zero()) else {
                continue;
            };
            a.swap(r, p);
            let inv = a[r][c].inv();
            for j in 0..self.cols {
                a[r][j] = a[r][j].mul_ref(&inv);
            }
            for i in 0..self.rows {
                if i != r && !a[i][c].is_zero() {
                    let f = a[i][c].clone();
                    for j in 0..self.cols {
                        let v = a[i][j].sub_ref(&f.mul_ref(&a[r][j]));
                        a[i][j] = v;
                    }
                }
            }
            pivots.push(c);
            r += 1;
            if r == self.rows {
                break;
            }
        }
        (a, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Exact basis of the null space; empty iff the matrix has full
    /// column rank.
    pub fn kernel_basis(&self) -> Vec<Vec<T>> {
        let (a, pivots) = self.rref();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivots.contains(&free) {
                continue;
            }
            let mut v = vec![T::zero(); self.cols];
            v[free] = T::one();
            for (ri, &pc) in pivots.iter().enumerate() {
                v[pc] = a[ri][free].clone().neg();
            }
            basis.push(v);
        }
        basis
    }
}
