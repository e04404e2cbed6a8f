//! Right `H`-comodule algebras, coinvariants, Galois maps and Hopf crossed products.

use alloc::string::String;
use alloc::vec::Vec;

use crate::algebra::{group_hopf_algebra, tensor_mul, Algebra, Convolution, Hopf, RelativeTensor};
use crate::error::{Error, Result};
use crate::graded::{GradedAlgebra, SystemReport};
use crate::group::GroupTable;
use crate::linalg::{LinearMap, SVec, Subspace};

mod cleft;
mod crossed;

pub use cleft::{
    colinear_maps, find_comodule_algebra_map, find_section, normal_basis_search,
    section_to_crossed_system, AlgebraSectionSearch, CleftPresentation, Section, SectionSearch,
};
pub use crossed::{check_crossed_system, crossed_product, CrossedSystem, HopfCrossedCondition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ComoduleCondition {
    NotAlgebraMap,
    Coassociativity,
    Counit,
}

/// An algebra `A` with a coaction `ρ: A → A⊗H` (index `a * dim H + h`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComoduleAlgebra {
    pub algebra: Algebra,
    pub hopf: Hopf,
    pub coaction: LinearMap,
}

impl ComoduleAlgebra {
    /// Checks shapes and every comodule-algebra axiom.
    pub fn new(algebra: Algebra, hopf: Hopf, coaction: LinearMap) -> Result<Self> {
        let a = Self::unchecked(algebra, hopf, coaction)?;
        if let Some((c, w)) = a.check().violations.first() {
            return Err(Error::InvalidCoaction(alloc::format!("{c:?} at {w:?}")));
        }
        Ok(a)
    }

    /// Checks shapes only.
    pub fn unchecked(algebra: Algebra, hopf: Hopf, coaction: LinearMap) -> Result<Self> {
        if algebra.field() != hopf.field() {
            return Err(Error::ShapeMismatch("algebra and Hopf algebra over different fields".into()));
        }
        if coaction.domain() != algebra.dim() || coaction.codomain() != algebra.dim() * hopf.dim() {
            return Err(Error::ShapeMismatch("coaction must map A → A⊗H".into()));
        }
        Ok(ComoduleAlgebra {
            algebra,
            hopf,
            coaction,
        })
    }

    /// `H` coacting on itself by `Δ`.
    pub fn regular(hopf: &Hopf) -> Self {
        ComoduleAlgebra {
            algebra: hopf.algebra.clone(),
            hopf: hopf.clone(),
            coaction: hopf.coalgebra.coproduct().clone(),
        }
    }

    /// `ρ(a) = a ⊗ 1`.
    pub fn trivial(algebra: Algebra, hopf: &Hopf) -> Self {
        let dh = hopf.dim();
        let one = hopf.one().clone();
        let coaction = LinearMap::from_fn(algebra.field(), algebra.dim(), algebra.dim() * dh, |i| {
            SVec::unit(i, algebra.field()).tensor(&one, dh)
        });
        ComoduleAlgebra {
            algebra,
            hopf: hopf.clone(),
            coaction,
        }
    }

    pub fn field(&self) -> crate::ScalarField {
        self.algebra.field()
    }

    pub fn coact(&self, a: &SVec) -> SVec {
        self.coaction.apply(a)
    }

    pub fn check(&self) -> SystemReport<ComoduleCondition> {
        let mut r = SystemReport::new();
        let field = self.field();
        let (da, dh) = (self.algebra.dim(), self.hopf.dim());
        let h = &self.hopf;
        if self.coact(self.algebra.unit()) != self.algebra.unit().tensor(h.one(), dh) {
            r.record(ComoduleCondition::NotAlgebraMap, &[]);
        }
        for i in 0..da {
            for j in 0..da {
                if r.full() {
                    return r;
                }
                let lhs = self.coact(self.algebra.mul_basis(i, j));
                let rhs = tensor_mul(
                    &self.algebra,
                    &h.algebra,
                    self.coaction.column(i),
                    self.coaction.column(j),
                );
                if lhs != rhs {
                    r.record(ComoduleCondition::NotAlgebraMap, &[i, j]);
                }
            }
        }
        let id_h = LinearMap::identity(field, dh);
        let id_a = LinearMap::identity(field, da);
        let left = self.coaction.tensor(&id_h).compose(&self.coaction);
        let right = id_a.tensor(h.coalgebra.coproduct()).compose(&self.coaction);
        if let (Ok(l), Ok(rt)) = (left, right) {
            for i in 0..da {
                if l.column(i) != rt.column(i) {
                    r.record(ComoduleCondition::Coassociativity, &[i]);
                }
            }
        }
        let counit = id_a.tensor(h.coalgebra.counit());
        for i in 0..da {
            if counit.apply(self.coaction.column(i)) != SVec::unit(i, field) {
                r.record(ComoduleCondition::Counit, &[i]);
            }
        }
        r
    }

    /// `ρφ = (φ⊗id)Δ` for `φ: H → A`.
    pub(crate) fn is_colinear(&self, phi: &LinearMap) -> bool {
        let dh = self.hopf.dim();
        let lifted = phi.tensor(&LinearMap::identity(self.field(), dh));
        (0..dh).all(|h| {
            self.coact(phi.column(h)) == lifted.apply(self.hopf.coalgebra.comul_basis(h))
        })
    }

    pub(crate) fn convolution(&self) -> Convolution<'_> {
        Convolution {
            coalgebra: &self.hopf.coalgebra,
            algebra: &self.algebra,
        }
    }
}

/// The coinvariant subalgebra with its inclusion into `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coinvariants {
    pub subspace: Subspace,
    pub algebra: Algebra,
}

impl Coinvariants {
    pub fn dim(&self) -> usize {
        self.subspace.dim()
    }

    pub fn inclusion(&self) -> LinearMap {
        self.subspace.inclusion()
    }

    /// Coordinates of `a ∈ B` in the echelon basis.
    pub fn coordinates(&self, a: &SVec) -> Option<SVec> {
        self.subspace.coordinates(a).map(|c| SVec::from_dense(&c))
    }
}

/// Labels for the basis of a subspace: ambient labels where the basis is standard.
pub(crate) fn subspace_labels(sub: &Subspace, ambient: &[String], prefix: &str) -> Vec<String> {
    sub.basis()
        .iter()
        .enumerate()
        .map(|(k, v)| match v.iter().next() {
            Some((i, c)) if v.nnz() == 1 && c.is_one() => ambient[i].clone(),
            _ => alloc::format!("{prefix}{k}"),
        })
        .collect()
}

/// `B = {a : ρ(a) = a⊗1}`.
pub fn coinvariants(a: &ComoduleAlgebra) -> Result<Coinvariants> {
    let dh = a.hopf.dim();
    let one = a.hopf.one();
    let defect = LinearMap::from_fn(a.field(), a.algebra.dim(), a.algebra.dim() * dh, |i| {
        a.coaction
            .column(i)
            .sub(&SVec::unit(i, a.field()).tensor(one, dh))
    });
    let subspace = Subspace::kernel(&defect);
    let labels = subspace_labels(&subspace, a.algebra.labels(), "b");
    let algebra = a.algebra.subalgebra(&subspace, labels)?;
    Ok(Coinvariants { subspace, algebra })
}

#[derive(Clone, Debug)]
pub struct GaloisReport {
    pub coinvariants: Coinvariants,
    pub tensor: RelativeTensor,
    /// `A⊗_B A → A⊗H`, `a ⊗ a' ↦ a ρ(a')`.
    pub beta: LinearMap,
    pub bijective: bool,
    pub inverse: Option<LinearMap>,
}

pub fn galois_map(a: &ComoduleAlgebra, section: Option<&Section>) -> Result<GaloisReport> {
    let b = coinvariants(a)?;
    let field = a.field();
    let (da, dh) = (a.algebra.dim(), a.hopf.dim());
    let full = Subspace::full(field, da);
    let tensor = a.algebra.relative_tensor(&full, &b.subspace, &full)?;
    let beta = tensor.induced(field, da * dh, |x, y| {
        tensor_mul(&a.algebra, &a.hopf.algebra, &x.tensor(a.hopf.one(), dh), &a.coact(y))
    });
    let bijective = beta.domain() == beta.codomain() && beta.is_bijective();
    let inverse = match section {
        None => None,
        Some(sec) => {
            let inv = LinearMap::from_fn(field, da * dh, tensor.dim(), |k| {
                let (i, h) = (k / dh, k % dh);
                let ai = SVec::unit(i, field);
                let mut out = SVec::new();
                for (t, c) in a.hopf.coalgebra.comul_basis(h).iter() {
                    let left = a.algebra.mul(&ai, sec.phi_inv.column(t / dh));
                    let class = tensor
                        .class_of(&left, sec.phi.column(t % dh))
                        .expect("full subspaces contain everything");
                    out.axpy(c, &class);
                }
                out
            });
            let one_t = LinearMap::identity(field, tensor.dim());
            let one_ah = LinearMap::identity(field, da * dh);
            if beta.compose(&inv)? != one_ah || inv.compose(&beta)? != one_t {
                return Err(Error::Internal("Galois inverse from the section fails".into()));
            }
            Some(inv)
        }
    };
    Ok(GaloisReport {
        coinvariants: b,
        tensor,
        beta,
        bijective,
        inverse,
    })
}

/// A `Γ`-graded algebra as a `kΓ`-comodule algebra, `ρ(a) = a ⊗ g` for `a ∈ A_g`.
pub fn graded_to_comodule(a: &GradedAlgebra) -> ComoduleAlgebra {
    let field = a.algebra.field();
    let hopf = group_hopf_algebra(&a.group, field);
    let n = a.group.order();
    let coaction = LinearMap::from_fn(field, a.algebra.dim(), a.algebra.dim() * n, |i| {
        SVec::unit(i * n + a.degree[i], field)
    });
    ComoduleAlgebra {
        algebra: a.algebra.clone(),
        hopf,
        coaction,
    }
}

/// The group of a Hopf algebra whose basis vectors are all group-like.
pub fn group_of_basis(h: &Hopf) -> Result<GroupTable> {
    let field = h.field();
    let d = h.dim();
    let not_group = |why: &str| Error::NotGroupLikeCoaction(alloc::format!("H is not a group algebra: {why}"));
    for i in 0..d {
        let e = SVec::unit(i, field);
        if h.coalgebra.comul_basis(i) != &e.tensor(&e, d) || !h.counit_basis(i).is_one() {
            return Err(not_group("a basis vector is not group-like"));
        }
    }
    if h.unit_index() != Some(0) {
        return Err(not_group("the unit is not the first basis vector"));
    }
    let mut mult = alloc::vec![alloc::vec![0; d]; d];
    for (i, row) in mult.iter_mut().enumerate() {
        for (j, slot) in row.iter_mut().enumerate() {
            let p = h.algebra.mul_basis(i, j);
            match p.iter().next() {
                Some((k, c)) if p.nnz() == 1 && c.is_one() => *slot = k,
                _ => return Err(not_group("basis not closed under products")),
            }
        }
    }
    GroupTable::new(h.labels().to_vec(), mult)
}

/// A `kΓ`-comodule algebra as a graded algebra, with the change of basis `P` whose columns
/// are the new homogeneous basis in old coordinates (identity when `A`'s basis is already homogeneous).
pub fn comodule_to_graded(a: &ComoduleAlgebra) -> Result<(GradedAlgebra, LinearMap)> {
    let group = group_of_basis(&a.hopf)?;
    let field = a.field();
    let (da, n) = (a.algebra.dim(), group.order());
    let mut degree_of = alloc::vec![None; da];
    for (i, slot) in degree_of.iter_mut().enumerate() {
        for g in 0..n {
            if a.coaction.column(i) == &SVec::unit(i * n + g, field) {
                *slot = Some(g);
            }
        }
    }
    if let Some(degree) = degree_of.iter().copied().collect::<Option<Vec<usize>>>() {
        let graded = GradedAlgebra::new(a.algebra.clone(), group, degree)?;
        return Ok((graded, LinearMap::identity(field, da)));
    }
    let mut basis = Vec::with_capacity(da);
    let mut degree = Vec::with_capacity(da);
    for g in 0..n {
        let defect = LinearMap::from_fn(field, da, da * n, |i| {
            a.coaction.column(i).sub(&SVec::unit(i * n + g, field))
        });
        let comp = Subspace::kernel(&defect);
        degree.extend(std::iter::repeat_n(g, comp.dim()));
        basis.extend(comp.basis().iter().cloned());
    }
    if basis.len() != da {
        return Err(Error::NotGroupLikeCoaction(
            "homogeneous components do not span A".into(),
        ));
    }
    let change = LinearMap::from_columns(field, da, basis)?;
    let back = change.inverse()?;
    let labels = (0..da).map(|k| alloc::format!("a{k}")).collect();
    let algebra = Algebra::from_table(field, labels, back.apply(a.algebra.unit()), |i, j| {
        back.apply(&a.algebra.mul(change.column(i), change.column(j)))
    })?;
    Ok((GradedAlgebra::new(algebra, group, degree)?, change))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::graded::is_strongly_graded;
    use crate::ScalarField;

    const Q: ScalarField = ScalarField::Rationals;

    #[test]
    fn regular_coaction_has_scalar_coinvariants() {
        let h = corpus::sweedler(Q);
        let a = ComoduleAlgebra::regular(&h);
        assert!(a.check().passed());
        let b = coinvariants(&a).unwrap();
        assert_eq!(b.dim(), 1);
        assert!(b.subspace.contains(h.one()));
    }

    #[test]
    fn trivial_coaction_fixes_everything() {
        let h = group_hopf_algebra(&GroupTable::cyclic(2), Q);
        let a = ComoduleAlgebra::trivial(corpus::matrix_algebra(2, Q), &h);
        assert!(a.check().passed());
        assert_eq!(coinvariants(&a).unwrap().dim(), 4);
    }

    #[test]
    fn graded_coinvariants_are_neutral_component() {
        let g = corpus::m2_graded(Q);
        let a = graded_to_comodule(&g);
        assert!(a.check().passed());
        let b = coinvariants(&a).unwrap();
        assert_eq!(b.subspace, g.component(0));
    }

    #[test]
    fn matrix_galois_map_is_bijective() {
        let a = graded_to_comodule(&corpus::m2_graded(Q));
        let r = galois_map(&a, None).unwrap();
        assert_eq!((r.beta.domain(), r.beta.codomain()), (8, 8));
        assert_eq!(r.beta.rank(), 8);
        assert!(r.bijective);
    }

    #[test]
    fn dual_numbers_galois_map_is_not_bijective() {
        let g = corpus::dual_numbers_graded(Q);
        let r = galois_map(&graded_to_comodule(&g), None).unwrap();
        assert!(!r.bijective);
        assert!(r.beta.rank() < 4);
        assert!(!is_strongly_graded(&g).unwrap().strongly_graded);
    }

    #[test]
    fn regular_galois_inverse_uses_antipode() {
        let h = corpus::sweedler(Q);
        let a = ComoduleAlgebra::regular(&h);
        let sec = Section::new(&a, LinearMap::identity(Q, 4)).unwrap();
        assert_eq!(sec.phi_inv, h.antipode);
        let r = galois_map(&a, Some(&sec)).unwrap();
        assert!(r.bijective);
        let inv = r.inverse.unwrap();
        // a ⊗ h ↦ a S(h₁) ⊗ h₂ evaluated independently on every basis pair
        for i in 0..4 {
            for hh in 0..4 {
                let mut expect = SVec::new();
                for (t, c) in h.coalgebra.comul_basis(hh).iter() {
                    let left = h.mul(&SVec::unit(i, Q), h.antipode.column(t / 4));
                    expect.axpy(c, &r.tensor.class_of(&left, &SVec::unit(t % 4, Q)).unwrap());
                }
                assert_eq!(inv.column(i * 4 + hh), &expect);
            }
        }
    }

    #[test]
    fn bridge_roundtrip() {
        let g = corpus::m2_graded(Q);
        let (back, change) = comodule_to_graded(&graded_to_comodule(&g)).unwrap();
        assert_eq!(back, g);
        assert_eq!(change, LinearMap::identity(Q, 4));
    }

    #[test]
    fn bridge_splits_mixed_basis() {
        // k×k graded by ℤ/2 with s = e₁ − e₂ odd, presented on the idempotents
        let h = group_hopf_algebra(&GroupTable::cyclic(2), Q);
        let alg = corpus::split_pair(Q);
        let half = Q.ratio(&1.into(), &2.into()).unwrap();
        let coaction = LinearMap::from_fn(Q, 2, 4, |i| {
            let sign = if i == 0 { Q.one() } else { -Q.one() };
            let mut v = SVec::new();
            v.add_term(0, &half);
            v.add_term(2, &half);
            v.add_term(1, &(&half * &sign));
            v.add_term(3, &-(&half * &sign));
            v
        });
        let a = ComoduleAlgebra::new(alg, h, coaction).unwrap();
        let (graded, change) = comodule_to_graded(&a).unwrap();
        assert_eq!(graded.degree, alloc::vec![0, 1]);
        assert!(crate::graded::check_grading(&graded).passed());
        assert!(change.is_bijective());
        assert!(is_strongly_graded(&graded).unwrap().strongly_graded);
        assert!(galois_map(&a, None).unwrap().bijective);
    }

    #[test]
    fn sweedler_coaction_is_not_group_like() {
        let h = corpus::sweedler(Q);
        let err = comodule_to_graded(&ComoduleAlgebra::regular(&h)).unwrap_err();
        assert!(matches!(err, Error::NotGroupLikeCoaction(_)));
    }

    #[test]
    fn broken_coaction_is_rejected() {
        let h = group_hopf_algebra(&GroupTable::cyclic(2), Q);
        let alg = corpus::truncated_polynomials(2, Q);
        // 1 ↦ 1⊗g is not unital
        let coaction = LinearMap::from_fn(Q, 2, 4, |i| SVec::unit(i * 2 + 1, Q));
        let err = ComoduleAlgebra::new(alg, h, coaction).unwrap_err();
        assert!(matches!(err, Error::InvalidCoaction(_)));
    }
}
