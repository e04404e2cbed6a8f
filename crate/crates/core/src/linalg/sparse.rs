use alloc::collections::btree_map::{self, BTreeMap};
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::field::{Scalar, ScalarField};
use crate::linalg::Matrix;

/// Sparse coordinate vector; absent indices are zero and stored entries are never zero.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SVec(BTreeMap<usize, Scalar>);

impl SVec {
    pub fn new() -> Self {
        SVec(BTreeMap::new())
    }

    pub fn unit(i: usize, field: ScalarField) -> Self {
        Self::term(i, field.one())
    }

    pub fn term(i: usize, c: Scalar) -> Self {
        let mut v = SVec::new();
        v.add_term(i, &c);
        v
    }

    pub fn from_dense(v: &[Scalar]) -> Self {
        let mut out = SVec::new();
        for (i, c) in v.iter().enumerate() {
            if !c.is_zero() {
                out.0.insert(i, c.clone());
            }
        }
        out
    }

    pub fn to_dense(&self, len: usize, field: ScalarField) -> Vec<Scalar> {
        let mut out = alloc::vec![field.zero(); len];
        for (&i, c) in &self.0 {
            out[i] = c.clone();
        }
        out
    }

    pub fn get(&self, i: usize) -> Option<&Scalar> {
        self.0.get(&i)
    }

    pub fn coeff(&self, i: usize, field: ScalarField) -> Scalar {
        self.0.get(&i).cloned().unwrap_or_else(|| field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.0.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Scalar)> + '_ {
        self.0.iter().map(|(&i, c)| (i, c))
    }

    pub fn max_index(&self) -> Option<usize> {
        self.0.keys().next_back().copied()
    }

    pub fn add_term(&mut self, i: usize, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.0.entry(i) {
            btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    /// `self += c * other`.
    pub fn axpy(&mut self, c: &Scalar, other: &SVec) {
        if c.is_zero() {
            return;
        }
        for (&i, x) in &other.0 {
            self.add_term(i, &(c * x));
        }
    }

    pub fn add(&self, other: &SVec) -> SVec {
        let mut out = self.clone();
        for (&i, x) in &other.0 {
            out.add_term(i, x);
        }
        out
    }

    pub fn sub(&self, other: &SVec) -> SVec {
        let mut out = self.clone();
        for (&i, x) in &other.0 {
            out.add_term(i, &(-x));
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> SVec {
        if c.is_zero() {
            return SVec::new();
        }
        SVec(self.0.iter().map(|(&i, x)| (i, x * c)).collect())
    }

    pub fn neg(&self) -> SVec {
        SVec(self.0.iter().map(|(&i, x)| (i, -x)).collect())
    }

    /// Dot product with a dense covector.
    pub fn dot(&self, covector: &[Scalar], field: ScalarField) -> Scalar {
        self.0
            .iter()
            .fold(field.zero(), |acc, (&i, x)| &acc + &(x * &covector[i]))
    }

    /// Tensor product `self ⊗ other` in `V ⊗ W` with `dim W = right_dim`.
    pub fn tensor(&self, other: &SVec, right_dim: usize) -> SVec {
        let mut out = SVec::new();
        for (&i, a) in &self.0 {
            for (&j, b) in &other.0 {
                out.0.insert(i * right_dim + j, a * b);
            }
        }
        out
    }

    /// Restricts to indices satisfying `keep`, relabelled by `relabel`.
    pub fn remap(&self, mut f: impl FnMut(usize) -> Option<usize>) -> SVec {
        let mut out = SVec::new();
        for (&i, x) in &self.0 {
            if let Some(j) = f(i) {
                out.add_term(j, x);
            }
        }
        out
    }
}

impl fmt::Debug for SVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (n, (i, c)) in self.0.iter().enumerate() {
            if n > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{i}: {c}")?;
        }
        f.write_str("}")
    }
}

/// Linear map `k^domain → k^codomain` stored as sparse images of basis vectors.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinearMap {
    field: ScalarField,
    domain: usize,
    codomain: usize,
    cols: Vec<SVec>,
}

impl LinearMap {
    pub fn zero(field: ScalarField, domain: usize, codomain: usize) -> Self {
        LinearMap {
            field,
            domain,
            codomain,
            cols: alloc::vec![SVec::new(); domain],
        }
    }

    pub fn identity(field: ScalarField, n: usize) -> Self {
        LinearMap {
            field,
            domain: n,
            codomain: n,
            cols: (0..n).map(|i| SVec::unit(i, field)).collect(),
        }
    }

    pub fn from_columns(field: ScalarField, codomain: usize, cols: Vec<SVec>) -> Result<Self> {
        if let Some(bad) = cols.iter().position(|c| c.max_index().is_some_and(|m| m >= codomain)) {
            return Err(Error::ShapeMismatch(alloc::format!(
                "column {bad} exceeds codomain dimension {codomain}"
            )));
        }
        Ok(LinearMap {
            field,
            domain: cols.len(),
            codomain,
            cols,
        })
    }

    /// Builds a map from a closure computing the image of each basis vector.
    pub fn from_fn(
        field: ScalarField,
        domain: usize,
        codomain: usize,
        f: impl FnMut(usize) -> SVec,
    ) -> Self {
        let cols: Vec<SVec> = (0..domain).map(f).collect();
        debug_assert!(cols.iter().all(|c| c.max_index().is_none_or(|m| m < codomain)));
        LinearMap {
            field,
            domain,
            codomain,
            cols,
        }
    }

    pub fn from_matrix(m: &Matrix) -> Self {
        let cols = (0..m.cols()).map(|c| SVec::from_dense(&m.column(c))).collect();
        LinearMap {
            field: m.field(),
            domain: m.cols(),
            codomain: m.rows(),
            cols,
        }
    }

    pub fn to_matrix(&self) -> Matrix {
        let mut m = Matrix::zeros(self.field, self.codomain, self.domain);
        for (c, col) in self.cols.iter().enumerate() {
            for (r, x) in col.iter() {
                m.set(r, c, x.clone());
            }
        }
        m
    }

    pub fn field(&self) -> ScalarField {
        self.field
    }

    pub fn domain(&self) -> usize {
        self.domain
    }

    pub fn codomain(&self) -> usize {
        self.codomain
    }

    pub fn column(&self, j: usize) -> &SVec {
        &self.cols[j]
    }

    pub fn columns(&self) -> &[SVec] {
        &self.cols
    }

    pub fn entry(&self, row: usize, col: usize) -> Scalar {
        self.cols[col].coeff(row, self.field)
    }

    pub fn apply(&self, v: &SVec) -> SVec {
        let mut out = SVec::new();
        for (j, c) in v.iter() {
            out.axpy(c, &self.cols[j]);
        }
        out
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &LinearMap) -> Result<LinearMap> {
        if inner.codomain != self.domain {
            return Err(Error::ShapeMismatch(alloc::format!(
                "cannot compose {}→{} after {}→{}",
                self.domain, self.codomain, inner.domain, inner.codomain
            )));
        }
        Ok(LinearMap {
            field: self.field,
            domain: inner.domain,
            codomain: self.codomain,
            cols: inner.cols.iter().map(|c| self.apply(c)).collect(),
        })
    }

    /// `self ⊗ other` on `V ⊗ V'`, index `i * dim V' + j`.
    pub fn tensor(&self, other: &LinearMap) -> LinearMap {
        let mut cols = Vec::with_capacity(self.domain * other.domain);
        for i in 0..self.domain {
            for j in 0..other.domain {
                cols.push(self.cols[i].tensor(&other.cols[j], other.codomain));
            }
        }
        LinearMap {
            field: self.field,
            domain: self.domain * other.domain,
            codomain: self.codomain * other.codomain,
            cols,
        }
    }

    pub fn transpose(&self) -> LinearMap {
        let mut cols = alloc::vec![SVec::new(); self.codomain];
        for (j, col) in self.cols.iter().enumerate() {
            for (i, x) in col.iter() {
                cols[i].add_term(j, x);
            }
        }
        LinearMap {
            field: self.field,
            domain: self.codomain,
            codomain: self.domain,
            cols,
        }
    }

    pub fn add(&self, other: &LinearMap) -> LinearMap {
        debug_assert_eq!((self.domain, self.codomain), (other.domain, other.codomain));
        LinearMap {
            cols: self.cols.iter().zip(&other.cols).map(|(a, b)| a.add(b)).collect(),
            ..self.clone()
        }
    }

    pub fn sub(&self, other: &LinearMap) -> LinearMap {
        debug_assert_eq!((self.domain, self.codomain), (other.domain, other.codomain));
        LinearMap {
            cols: self.cols.iter().zip(&other.cols).map(|(a, b)| a.sub(b)).collect(),
            ..self.clone()
        }
    }

    pub fn scale(&self, c: &Scalar) -> LinearMap {
        LinearMap {
            cols: self.cols.iter().map(|a| a.scale(c)).collect(),
            ..self.clone()
        }
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(SVec::is_zero)
    }

    pub fn rank(&self) -> usize {
        self.to_matrix().rank()
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.domain
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.codomain
    }

    pub fn is_bijective(&self) -> bool {
        self.domain == self.codomain && self.is_injective()
    }

    pub fn inverse(&self) -> Result<LinearMap> {
        Ok(LinearMap::from_matrix(&self.to_matrix().invert()?))
    }

    /// Flattened coordinates, column-major: entry `(row, col)` at `col * codomain + row`.
    pub fn to_coordinates(&self) -> Vec<Scalar> {
        let mut out = alloc::vec![self.field.zero(); self.domain * self.codomain];
        for (c, col) in self.cols.iter().enumerate() {
            for (r, x) in col.iter() {
                out[c * self.codomain + r] = x.clone();
            }
        }
        out
    }

    pub fn from_coordinates(
        field: ScalarField,
        domain: usize,
        codomain: usize,
        coords: &[Scalar],
    ) -> LinearMap {
        debug_assert_eq!(coords.len(), domain * codomain);
        LinearMap {
            field,
            domain,
            codomain,
            cols: (0..domain)
                .map(|c| SVec::from_dense(&coords[c * codomain..(c + 1) * codomain]))
                .collect(),
        }
    }
}

impl fmt::Debug for LinearMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinearMap {}→{} ", self.domain, self.codomain)?;
        f.debug_list().entries(&self.cols).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: ScalarField = ScalarField::Rationals;

    #[test]
    fn cancellation_removes_entries() {
        let mut v = SVec::unit(3, Q);
        v.add_term(3, &Q.int(-1));
        assert!(v.is_zero());
    }

    #[test]
    fn tensor_and_compose() {
        let swap = LinearMap::from_matrix(&Matrix::from_ints(Q, &[&[0, 1], &[1, 0]]));
        let id = LinearMap::identity(Q, 2);
        assert_eq!(swap.compose(&swap).unwrap(), id);
        let t = swap.tensor(&id);
        // e0⊗e1 (index 1) ↦ e1⊗e1 (index 3)
        assert_eq!(t.apply(&SVec::unit(1, Q)), SVec::unit(3, Q));
        assert_eq!(t.transpose(), t);
    }

    #[test]
    fn coordinates_roundtrip() {
        let m = LinearMap::from_matrix(&Matrix::from_ints(Q, &[&[1, 2, 0], &[0, 0, 5]]));
        let c = m.to_coordinates();
        assert_eq!(LinearMap::from_coordinates(Q, 3, 2, &c), m);
    }
}
