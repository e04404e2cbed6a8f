use alloc::string::String;
use alloc::vec::Vec;

use super::Algebra;
use crate::error::{Error, Result};
use crate::linalg::{LinearMap, Quotient, SVec, Subspace};

/// `M ⊗_B N` for subspaces `M, N` of an algebra with `M·B ⊆ M` and `B·N ⊆ N`, as the
/// quotient of `M ⊗ N` (coordinates `i * dim N + j`) by the balancing relations.
#[derive(Clone, Debug)]
pub struct RelativeTensor {
    pub left: Subspace,
    pub right: Subspace,
    pub quotient: Quotient,
}

impl RelativeTensor {
    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }

    /// Class of `m ⊗ n` for `m ∈ M`, `n ∈ N` given in ambient coordinates.
    pub fn class_of(&self, m: &SVec, n: &SVec) -> Option<SVec> {
        let cm = SVec::from_dense(&self.left.coordinates(m)?);
        let cn = SVec::from_dense(&self.right.coordinates(n)?);
        Some(self.quotient.project(&cm.tensor(&cn, self.right.dim())))
    }

    /// Basis pair `(m, n)` representing the `k`-th quotient basis vector.
    pub fn representative(&self, k: usize) -> (&SVec, &SVec) {
        let c = self.quotient.complement()[k];
        let r = self.right.dim();
        (&self.left.basis()[c / r], &self.right.basis()[c % r])
    }

    /// Linear map out of `M ⊗_B N` induced by a balanced bilinear map.
    pub fn induced(&self, field: crate::ScalarField, codomain: usize, mut f: impl FnMut(&SVec, &SVec) -> SVec) -> LinearMap {
        LinearMap::from_fn(field, self.dim(), codomain, |k| {
            let (m, n) = self.representative(k);
            f(m, n)
        })
    }
}

impl Algebra {
    /// The subalgebra on `sub`, with `sub`'s echelon basis as its basis.
    pub fn subalgebra(&self, sub: &Subspace, labels: Vec<String>) -> Result<Algebra> {
        if labels.len() != sub.dim() {
            return Err(Error::ShapeMismatch("one label per basis vector".into()));
        }
        let unit = sub
            .coordinates(self.unit())
            .ok_or_else(|| Error::InvalidStructure("subspace does not contain 1".into()))?;
        let basis = sub.basis();
        let mut failure = None;
        let sub_alg = Algebra::from_table(self.field(), labels, SVec::from_dense(&unit), |i, j| {
            match sub.coordinates(&self.mul(&basis[i], &basis[j])) {
                Some(c) => SVec::from_dense(&c),
                None => {
                    failure = Some((i, j));
                    SVec::new()
                }
            }
        })?;
        match failure {
            Some((i, j)) => Err(Error::InvalidStructure(alloc::format!(
                "subspace not closed under products ({i}, {j})"
            ))),
            None => Ok(sub_alg),
        }
    }

    pub fn relative_tensor(&self, left: &Subspace, base: &Subspace, right: &Subspace) -> Result<RelativeTensor> {
        let rd = right.dim();
        let mut relations = Vec::new();
        for (i, m) in left.basis().iter().enumerate() {
            for b in base.basis() {
                let mb = left
                    .coordinates(&self.mul(m, b))
                    .ok_or_else(|| Error::InvalidStructure("left factor is not a right module".into()))?;
                let mb = SVec::from_dense(&mb);
                for (j, n) in right.basis().iter().enumerate() {
                    let bn = right
                        .coordinates(&self.mul(b, n))
                        .ok_or_else(|| Error::InvalidStructure("right factor is not a left module".into()))?;
                    let lhs = mb.tensor(&SVec::unit(j, self.field()), rd);
                    let rhs = SVec::unit(i, self.field()).tensor(&SVec::from_dense(&bn), rd);
                    relations.push(lhs.sub(&rhs));
                }
            }
        }
        let rel = Subspace::span(self.field(), left.dim() * rd, relations);
        Ok(RelativeTensor {
            left: left.clone(),
            right: right.clone(),
            quotient: Quotient::new(rel),
        })
    }
}
