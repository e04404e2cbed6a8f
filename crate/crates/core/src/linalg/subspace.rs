use alloc::vec::Vec;

use crate::field::{Scalar, ScalarField};
use crate::linalg::{LinearMap, Matrix, SVec};

/// A subspace of `k^ambient` held as reduced-echelon basis rows.
///
/// Row `r` has a `1` in column `pivots[r]` and every other row vanishes there, so
/// coordinates of a member are read off at the pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    field: ScalarField,
    ambient: usize,
    basis: Vec<SVec>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: ScalarField, ambient: usize) -> Self {
        Subspace {
            field,
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: ScalarField, ambient: usize) -> Self {
        Subspace {
            field,
            ambient,
            basis: (0..ambient).map(|i| SVec::unit(i, field)).collect(),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn span<I>(field: ScalarField, ambient: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = SVec>,
    {
        let rows: Vec<Vec<Scalar>> = vectors
            .into_iter()
            .filter(|v| !v.is_zero())
            .map(|v| v.to_dense(ambient, field))
            .collect();
        if rows.is_empty() {
            return Self::zero(field, ambient);
        }
        let ech = Matrix::from_rows(field, rows).expect("uniform rows").rref();
        let basis = (0..ech.pivots.len())
            .map(|r| SVec::from_dense(ech.matrix.row(r)))
            .collect();
        Subspace {
            field,
            ambient,
            basis,
            pivots: ech.pivots,
        }
    }

    /// Kernel of `map`, canonicalized.
    pub fn kernel(map: &LinearMap) -> Self {
        let basis = map.to_matrix().kernel_basis();
        Self::span(map.field(), map.domain(), basis.iter().map(|v| SVec::from_dense(v)))
    }

    pub fn image(map: &LinearMap) -> Self {
        Self::span(map.field(), map.codomain(), map.columns().iter().cloned())
    }

    pub fn field(&self) -> ScalarField {
        self.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[SVec] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// `v` minus its echelon reduction against the basis; zero iff `v` is a member.
    pub fn reduce(&self, v: &SVec) -> SVec {
        let mut out = v.clone();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if let Some(c) = out.get(p).cloned() {
                out.axpy(&(-&c), row);
            }
        }
        out
    }

    pub fn contains(&self, v: &SVec) -> bool {
        self.reduce(v).is_zero()
    }

    pub fn coordinates(&self, v: &SVec) -> Option<Vec<Scalar>> {
        let coords: Vec<Scalar> = self.pivots.iter().map(|&p| v.coeff(p, self.field)).collect();
        let mut rebuilt = SVec::new();
        for (c, row) in coords.iter().zip(&self.basis) {
            rebuilt.axpy(c, row);
        }
        (rebuilt == *v).then_some(coords)
    }

    pub fn combine(&self, coords: &[Scalar]) -> SVec {
        let mut out = SVec::new();
        for (c, row) in coords.iter().zip(&self.basis) {
            out.axpy(c, row);
        }
        out
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        Self::span(
            self.field,
            self.ambient,
            self.basis.iter().chain(&other.basis).cloned(),
        )
    }

    /// Inclusion map `k^dim → k^ambient` along the echelon basis.
    pub fn inclusion(&self) -> LinearMap {
        LinearMap::from_columns(self.field, self.ambient, self.basis.clone()).expect("in range")
    }
}

/// `k^ambient / relations`, with the standard vectors at non-pivot columns of the
/// relation echelon form as the complement basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quotient {
    relations: Subspace,
    complement: Vec<usize>,
    position: Vec<Option<usize>>,
}

impl Quotient {
    pub fn new(relations: Subspace) -> Self {
        let mut is_pivot = alloc::vec![false; relations.ambient];
        for &p in &relations.pivots {
            is_pivot[p] = true;
        }
        let complement: Vec<usize> = (0..relations.ambient).filter(|&c| !is_pivot[c]).collect();
        let mut position = alloc::vec![None; relations.ambient];
        for (k, &c) in complement.iter().enumerate() {
            position[c] = Some(k);
        }
        Quotient {
            relations,
            complement,
            position,
        }
    }

    pub fn dim(&self) -> usize {
        self.complement.len()
    }

    pub fn ambient(&self) -> usize {
        self.relations.ambient
    }

    pub fn relations(&self) -> &Subspace {
        &self.relations
    }

    /// Ambient indices of the complement basis.
    pub fn complement(&self) -> &[usize] {
        &self.complement
    }

    pub fn project(&self, v: &SVec) -> SVec {
        let r = self.relations.reduce(v);
        r.remap(|i| self.position[i])
    }

    pub fn lift(&self, coords: &SVec) -> SVec {
        coords.remap(|k| Some(self.complement[k]))
    }

    pub fn projection(&self) -> LinearMap {
        let field = self.relations.field;
        LinearMap::from_fn(field, self.ambient(), self.dim(), |i| {
            self.project(&SVec::unit(i, field))
        })
    }

    pub fn section(&self) -> LinearMap {
        let field = self.relations.field;
        LinearMap::from_fn(field, self.dim(), self.ambient(), |k| {
            SVec::unit(self.complement[k], field)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: ScalarField = ScalarField::Rationals;

    fn v(xs: &[i64]) -> SVec {
        SVec::from_dense(&xs.iter().map(|&x| Q.int(x)).collect::<Vec<_>>())
    }

    #[test]
    fn span_is_canonical() {
        let a = Subspace::span(Q, 3, [v(&[1, 1, 0]), v(&[0, 1, 1])]);
        let b = Subspace::span(Q, 3, [v(&[1, 2, 1]), v(&[2, 2, 0])]);
        assert_eq!(a, b);
        assert_eq!(a.dim(), 2);
        assert_eq!(a.coordinates(&v(&[1, 2, 1])), Some(alloc::vec![Q.int(1), Q.int(2)]));
        assert_eq!(a.coordinates(&v(&[1, 0, 0])), None);
    }

    #[test]
    fn quotient_projects_relations_to_zero() {
        let rel = Subspace::span(Q, 3, [v(&[1, -1, 0])]);
        let q = Quotient::new(rel);
        assert_eq!(q.dim(), 2);
        assert!(q.project(&v(&[2, -2, 0])).is_zero());
        assert_eq!(q.project(&v(&[1, 0, 0])), q.project(&v(&[0, 1, 0])));
        let p = q.projection();
        assert_eq!(p.compose(&q.section()).unwrap(), LinearMap::identity(Q, 2));
    }
}
