use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::field::{Scalar, ScalarField};

/// Dense matrix over a [`ScalarField`], row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: ScalarField,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub matrix: Matrix,
    pub pivots: Vec<usize>,
}

/// Outcome of [`Matrix::solve`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solution {
    /// `particular` solves the system; the solution set is `particular + span(kernel)`.
    Consistent {
        particular: Vec<Scalar>,
        kernel: Vec<Vec<Scalar>>,
    },
    /// `certificate · M = 0` while `certificate · b ≠ 0`.
    Inconsistent { certificate: Vec<Scalar> },
}

impl Matrix {
    pub fn zeros(field: ScalarField, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: alloc::vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: ScalarField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: ScalarField, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::ShapeMismatch("ragged rows".into()));
        }
        Ok(Matrix {
            field,
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Convenience constructor from small integers.
    pub fn from_ints(field: ScalarField, rows: &[&[i64]]) -> Self {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&x| field.int(x)).collect())
            .collect();
        Self::from_rows(field, rows).expect("rectangular literal")
    }

    pub fn field(&self) -> ScalarField {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                let v = self.get(r, c);
                if !v.is_zero() {
                    t.set(c, r, v.clone());
                }
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(alloc::format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = r * out.cols + c;
                    out.data[idx] = &out.data[idx] + &(a * b);
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.cols {
            return Err(Error::ShapeMismatch(alloc::format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|r| {
                let mut acc = self.field.zero();
                for (a, b) in self.row(r).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                acc
            })
            .collect())
    }

    /// Kronecker product; row index `i * other.rows + k`, column `j * other.cols + l`.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.field, self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if !b.is_zero() {
                            out.set(i * other.rows + k, j * other.cols + l, a * b);
                        }
                    }
                }
            }
        }
        out
    }

    /// Reduced row echelon form. Pivots are chosen in the leftmost nonzero column,
    /// from the topmost available row, and only among the first `pivot_limit` columns.
    fn eliminate(&self, pivot_limit: usize) -> Echelon {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut prow = 0;
        for col in 0..pivot_limit.min(m.cols) {
            if prow == m.rows {
                break;
            }
            let Some(found) = (prow..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(found, prow);
            let inv = m.get(prow, col).inv().expect("nonzero pivot");
            for c in col..m.cols {
                let v = m.get(prow, c);
                if !v.is_zero() {
                    let scaled = v * &inv;
                    m.set(prow, c, scaled);
                }
            }
            let pivot_row: Vec<(usize, Scalar)> = (col..m.cols)
                .filter_map(|c| {
                    let v = m.get(prow, c);
                    (!v.is_zero()).then(|| (c, v.clone()))
                })
                .collect();
            for r in 0..m.rows {
                if r == prow {
                    continue;
                }
                let factor = m.get(r, col).clone();
                if factor.is_zero() {
                    continue;
                }
                for (c, v) in &pivot_row {
                    let idx = r * m.cols + c;
                    m.data[idx] = &m.data[idx] - &(&factor * v);
                }
            }
            pivots.push(col);
            prow += 1;
        }
        Echelon { matrix: m, pivots }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rref(&self) -> Echelon {
        self.eliminate(self.cols)
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Canonical basis of the null space: the free-variable basis, brought to
    /// reduced row echelon form.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let ech = self.rref();
        let raw = null_space_from_echelon(&ech, self.cols, self.field);
        if raw.is_empty() {
            return raw;
        }
        let k = Matrix::from_rows(self.field, raw).expect("uniform length");
        let e = k.rref();
        (0..e.pivots.len()).map(|r| e.matrix.row(r).to_vec()).collect()
    }

    pub fn solve(&self, b: &[Scalar]) -> Result<Solution> {
        if b.len() != self.rows {
            return Err(Error::ShapeMismatch(alloc::format!(
                "right-hand side of length {} for {} rows",
                b.len(),
                self.rows
            )));
        }
        let aug = self.hstack_column(b);
        let ech = aug.eliminate(self.cols);
        let rank = ech.pivots.len();
        let inconsistent = (rank..self.rows).any(|r| !ech.matrix.get(r, self.cols).is_zero());
        if inconsistent {
            // Redo with an identity block to record the row combination.
            let mut tracked = Matrix::zeros(self.field, self.rows, self.cols + 1 + self.rows);
            for r in 0..self.rows {
                for c in 0..=self.cols {
                    tracked.set(r, c, aug.get(r, c).clone());
                }
                tracked.set(r, self.cols + 1 + r, self.field.one());
            }
            let te = tracked.eliminate(self.cols);
            let r = (te.pivots.len()..self.rows)
                .find(|&r| !te.matrix.get(r, self.cols).is_zero())
                .expect("inconsistency persists");
            let certificate = te.matrix.row(r)[self.cols + 1..].to_vec();
            return Ok(Solution::Inconsistent { certificate });
        }
        let mut particular = alloc::vec![self.field.zero(); self.cols];
        for (r, &c) in ech.pivots.iter().enumerate() {
            particular[c] = ech.matrix.get(r, self.cols).clone();
        }
        Ok(Solution::Consistent {
            particular,
            kernel: self.kernel_basis(),
        })
    }

    pub fn invert(&self) -> Result<Matrix> {
        if self.rows != self.cols {
            return Err(Error::ShapeMismatch("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(self.field, n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, n + r, self.field.one());
        }
        let ech = aug.eliminate(n);
        if ech.pivots.len() < n {
            return Err(Error::SingularMatrix);
        }
        let mut inv = Matrix::zeros(self.field, n, n);
        for r in 0..n {
            for c in 0..n {
                inv.set(r, c, ech.matrix.get(r, n + c).clone());
            }
        }
        Ok(inv)
    }

    fn hstack_column(&self, b: &[Scalar]) -> Matrix {
        let mut aug = Matrix::zeros(self.field, self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, self.cols, b[r].clone());
        }
        aug
    }
}

fn null_space_from_echelon(ech: &Echelon, cols: usize, field: ScalarField) -> Vec<Vec<Scalar>> {
    let mut is_pivot = alloc::vec![false; cols];
    for &p in &ech.pivots {
        is_pivot[p] = true;
    }
    (0..cols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = alloc::vec![field.zero(); cols];
            v[free] = field.one();
            for (r, &p) in ech.pivots.iter().enumerate() {
                v[p] = -ech.matrix.get(r, free);
            }
            v
        })
        .collect()
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            write!(f, "  [")?;
            for (i, v) in self.row(r).iter().enumerate() {
                if i > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{v}")?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    const Q: ScalarField = ScalarField::Rationals;

    fn ints(field: ScalarField, v: &[i64]) -> Vec<Scalar> {
        v.iter().map(|&x| field.int(x)).collect()
    }

    #[test]
    fn solve_identity() {
        let m = Matrix::identity(Q, 3);
        match m.solve(&ints(Q, &[1, 2, 3])).unwrap() {
            Solution::Consistent { particular, kernel } => {
                assert_eq!(particular, ints(Q, &[1, 2, 3]));
                assert!(kernel.is_empty());
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn solve_inconsistent_has_certificate() {
        let m = Matrix::from_ints(Q, &[&[1, 1], &[1, 1]]);
        let b = ints(Q, &[1, 0]);
        match m.solve(&b).unwrap() {
            Solution::Inconsistent { certificate } => {
                let mt = m.transpose();
                assert!(mt.mul_vec(&certificate).unwrap().iter().all(Scalar::is_zero));
                let yb = certificate
                    .iter()
                    .zip(&b)
                    .fold(Q.zero(), |acc, (y, x)| &acc + &(y * x));
                assert!(!yb.is_zero());
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn solve_over_f5() {
        // Frozen from an exhaustive scan of all 25 vectors in F5^2: only (0, 1) works.
        let f5 = ScalarField::prime(5).unwrap();
        let m = Matrix::from_ints(f5, &[&[2, 1], &[1, 1]]);
        match m.solve(&ints(f5, &[1, 1])).unwrap() {
            Solution::Consistent { particular, kernel } => {
                assert_eq!(particular, ints(f5, &[0, 1]));
                assert!(kernel.is_empty());
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn solve_shape_mismatch() {
        let m = Matrix::identity(Q, 2);
        assert!(matches!(m.solve(&ints(Q, &[1])), Err(Error::ShapeMismatch(_))));
    }

    #[test]
    fn kernel_examples() {
        let z = Matrix::zeros(Q, 2, 3);
        assert_eq!(
            z.kernel_basis(),
            vec![ints(Q, &[1, 0, 0]), ints(Q, &[0, 1, 0]), ints(Q, &[0, 0, 1])]
        );
        assert!(Matrix::identity(Q, 4).kernel_basis().is_empty());
        let m = Matrix::from_ints(Q, &[&[1, 1], &[1, 1]]);
        assert_eq!(m.kernel_basis(), vec![ints(Q, &[1, -1])]);
    }

    #[test]
    fn inverse_examples() {
        let id = Matrix::identity(Q, 3);
        assert_eq!(id.invert().unwrap(), id);
        let swap = Matrix::from_ints(Q, &[&[0, 1], &[1, 0]]);
        assert_eq!(swap.invert().unwrap(), swap);
        let sing = Matrix::from_ints(Q, &[&[1, 1], &[1, 1]]);
        assert_eq!(sing.invert(), Err(Error::SingularMatrix));
        assert!(matches!(
            Matrix::zeros(Q, 2, 3).invert(),
            Err(Error::ShapeMismatch(_))
        ));
    }

    #[test]
    fn kron_shape() {
        let a = Matrix::from_ints(Q, &[&[1, 2]]);
        let b = Matrix::from_ints(Q, &[&[0, 1], &[1, 0]]);
        let k = a.kron(&b);
        assert_eq!((k.rows(), k.cols()), (2, 4));
        assert_eq!(k.row(0), &ints(Q, &[0, 1, 0, 2])[..]);
    }
}
