//! Normalized Hochschild cohomology `HH²(H, M)` for a left `H`-module `M` with trivial
//! right action, augmented cleft extensions over square-zero bases, and the splitting and
//! lifting constructions for surjections with nilpotent kernel.

use alloc::vec::Vec;

use crate::algebra::{Algebra, Hopf};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::{LinearMap, Quotient, SVec, Subspace};

mod extension;
mod lifting;

pub(crate) use lifting::nilpotent_powers;

pub use extension::{
    classify_cleft_extension, crossed_system_from_cocycle, crossed_system_from_data, gauge_iso,
    split_extension, AugmentedCleftExtension, Classification, Splitting,
};
pub use lifting::{
    colinear_splitting_nilpotent, hopf_module_decompose, lift_comodule_algebra_map,
    quotient_comodule_algebra, restrict_coaction, HopfModule, HopfModuleDecomposition, Lift,
};

/// An algebra with an algebra map `ε: B → k` and its augmentation ideal `B⁺`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AugmentedAlgebra {
    pub algebra: Algebra,
    pub augmentation: LinearMap,
    pub ideal: Subspace,
    pub square_zero: bool,
}

impl AugmentedAlgebra {
    pub fn new(algebra: Algebra, augmentation: LinearMap) -> Result<Self> {
        if augmentation.domain() != algebra.dim() || augmentation.codomain() != 1 {
            return Err(Error::ShapeMismatch("augmentation must map B → k".into()));
        }
        let k = crate::corpus::ground_field(algebra.field());
        if let Some(d) = algebra.algebra_map_defect(&k, &augmentation) {
            return Err(Error::NotAlgebraMap(alloc::format!("augmentation: {d:?}")));
        }
        let ideal = Subspace::kernel(&augmentation);
        let square_zero = algebra.span_products(&ideal, &ideal).dim() == 0;
        Ok(AugmentedAlgebra {
            algebra,
            augmentation,
            ideal,
            square_zero,
        })
    }

    pub fn field(&self) -> crate::ScalarField {
        self.algebra.field()
    }

    pub fn epsilon(&self, b: &SVec) -> Scalar {
        self.augmentation.apply(b).coeff(0, self.field())
    }

    /// `b = ε(b)1 + b⁺` with `b⁺` in coordinates of the ideal basis.
    pub fn split(&self, b: &SVec) -> (Scalar, SVec) {
        let c = self.epsilon(b);
        let rest = b.sub(&self.algebra.unit().scale(&c));
        let coords = self.ideal.coordinates(&rest).expect("b − ε(b)1 lies in the kernel");
        (c, SVec::from_dense(&coords))
    }

    /// `B⁺` coordinates back to `B`.
    pub fn include(&self, v: &SVec) -> SVec {
        let mut out = SVec::new();
        for (i, c) in v.iter() {
            out.axpy(c, &self.ideal.basis()[i]);
        }
        out
    }
}

/// A left `H`-module structure `H⊗M → M` (index `h * dim M + v`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeftModule {
    pub hopf: Hopf,
    pub dim: usize,
    pub action: LinearMap,
}

impl LeftModule {
    /// Checks shapes only; see [`LeftModule::is_module`].
    pub fn new(hopf: Hopf, dim: usize, action: LinearMap) -> Result<Self> {
        if action.domain() != hopf.dim() * dim || action.codomain() != dim {
            return Err(Error::ShapeMismatch("action must map H⊗M → M".into()));
        }
        Ok(LeftModule { hopf, dim, action })
    }

    /// `h▷v = ε(h)v`.
    pub fn trivial(hopf: &Hopf, dim: usize) -> Self {
        let action = LinearMap::from_fn(hopf.field(), hopf.dim() * dim, dim, |k| {
            SVec::unit(k % dim, hopf.field()).scale(&hopf.counit_basis(k / dim))
        });
        LeftModule {
            hopf: hopf.clone(),
            dim,
            action,
        }
    }

    pub fn act(&self, h: &SVec, v: &SVec) -> SVec {
        self.action.apply(&h.tensor(v, self.dim))
    }

    /// Unital and associative.
    pub fn is_module(&self) -> bool {
        let field = self.hopf.field();
        let dh = self.hopf.dim();
        for v in 0..self.dim {
            let ev = SVec::unit(v, field);
            if self.act(self.hopf.one(), &ev) != ev {
                return false;
            }
            for g in 0..dh {
                for h in 0..dh {
                    let inner = self.act(&SVec::unit(h, field), &ev);
                    let lhs = self.act(&SVec::unit(g, field), &inner);
                    let rhs = self.act(self.hopf.algebra.mul_basis(g, h), &ev);
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// A Hochschild cochain `H^{⊗degree} → M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain {
    pub degree: usize,
    pub map: LinearMap,
}

impl Cochain {
    /// Requires degree 1 or 2 and the normalization `t(1) = 0`, `s(h,1) = 0 = s(1,h)`.
    pub fn new(hopf: &Hopf, degree: usize, map: LinearMap) -> Result<Self> {
        let dh = hopf.dim();
        let expected = match degree {
            1 => dh,
            2 => dh * dh,
            _ => return Err(Error::ShapeMismatch("cochains have degree 1 or 2".into())),
        };
        if map.domain() != expected {
            return Err(Error::ShapeMismatch("cochain domain must be H^⊗degree".into()));
        }
        if !is_normalized(hopf, degree, &map) {
            return Err(Error::CocycleViolation("cochain is not normalized".into()));
        }
        Ok(Cochain { degree, map })
    }
}

pub fn is_normalized(hopf: &Hopf, degree: usize, map: &LinearMap) -> bool {
    let field = hopf.field();
    let dh = hopf.dim();
    let one = hopf.one();
    match degree {
        1 => map.apply(one).is_zero(),
        _ => (0..dh).all(|h| {
            let e = SVec::unit(h, field);
            map.apply(&e.tensor(one, dh)).is_zero() && map.apply(&one.tensor(&e, dh)).is_zero()
        }),
    }
}

/// `(∂t)(g,h) = g▷t(h) − t(gh) + t(g)ε(h)`.
pub fn coboundary1(m: &LeftModule, t: &LinearMap) -> LinearMap {
    let h = &m.hopf;
    let field = h.field();
    let dh = h.dim();
    LinearMap::from_fn(field, dh * dh, m.dim, |k| {
        let (g, x) = (k / dh, k % dh);
        let mut out = m.act(&SVec::unit(g, field), t.column(x));
        out = out.sub(&t.apply(h.algebra.mul_basis(g, x)));
        out.axpy(&h.counit_basis(x), t.column(g));
        out
    })
}

/// `(∂s)(g,h,ℓ) = g▷s(h,ℓ) − s(gh,ℓ) + s(g,hℓ) − s(g,h)ε(ℓ)`.
pub fn coboundary2(m: &LeftModule, s: &LinearMap) -> LinearMap {
    let h = &m.hopf;
    let field = h.field();
    let dh = h.dim();
    let eval = |x: &SVec, y: &SVec| s.apply(&x.tensor(y, dh));
    LinearMap::from_fn(field, dh * dh * dh, m.dim, |k| {
        let (g, x, l) = (k / (dh * dh), (k / dh) % dh, k % dh);
        let (eg, ex, el) = (SVec::unit(g, field), SVec::unit(x, field), SVec::unit(l, field));
        let mut out = m.act(&eg, s.column(x * dh + l));
        out = out.sub(&eval(h.algebra.mul_basis(g, x), &el));
        out = out.add(&eval(&eg, h.algebra.mul_basis(x, l)));
        out.axpy(&-h.counit_basis(l), &eval(&eg, &ex));
        out
    })
}

pub fn differential(c: &Cochain, m: &LeftModule) -> Result<Cochain> {
    match c.degree {
        1 => Ok(Cochain {
            degree: 2,
            map: coboundary1(m, &c.map),
        }),
        2 => Ok(Cochain {
            degree: 3,
            map: coboundary2(m, &c.map),
        }),
        _ => Err(Error::ShapeMismatch("cochains have degree 1 or 2".into())),
    }
}

/// The operator `f ↦ op(f)` on [`LinearMap::to_coordinates`] of `H^{⊗n} → M`.
fn operator(
    field: crate::ScalarField,
    domain: usize,
    m: usize,
    codomain_dim: usize,
    op: impl Fn(&LinearMap) -> SVec,
) -> LinearMap {
    LinearMap::from_fn(field, domain * m, codomain_dim, |u| {
        let mut coords = alloc::vec![field.zero(); domain * m];
        coords[u] = field.one();
        let f = LinearMap::from_coordinates(field, domain, m, &coords);
        op(&f)
    })
}

fn coords(f: &LinearMap) -> SVec {
    SVec::from_dense(&f.to_coordinates())
}

/// Normalization constraints on `Hom(H^{⊗degree}, M)` coordinates.
fn normalization(h: &Hopf, m: usize, degree: usize) -> LinearMap {
    let field = h.field();
    let dh = h.dim();
    let one = h.one();
    match degree {
        1 => operator(field, dh, m, m, |t| t.apply(one)),
        _ => operator(field, dh * dh, m, 2 * dh * m, |s| {
            let mut out = SVec::new();
            for x in 0..dh {
                let e = SVec::unit(x, field);
                let right = s.apply(&e.tensor(one, dh)).remap(|i| Some(x * m + i));
                let left = s.apply(&one.tensor(&e, dh)).remap(|i| Some((dh + x) * m + i));
                out = out.add(&right).add(&left);
            }
            out
        }),
    }
}

/// `ker ∂² / im ∂¹` on normalized cochains.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HH2Result {
    pub dimension: usize,
    /// Normalized 2-cocycles in coordinates of `Hom(H⊗H, M)`.
    pub cocycles: Subspace,
    pub coboundaries: Subspace,
    /// `im ∂¹` inside cocycle coordinates.
    pub quotient: Quotient,
    pub representatives: Vec<LinearMap>,
    hopf_dim: usize,
    module_dim: usize,
}

impl HH2Result {
    /// Class coordinates against [`HH2Result::representatives`]; `None` for a non-cocycle.
    pub fn decide(&self, s: &LinearMap) -> Option<SVec> {
        if s.domain() != self.hopf_dim * self.hopf_dim || s.codomain() != self.module_dim {
            return None;
        }
        let coords = self.cocycles.coordinates(&SVec::from_dense(&s.to_coordinates()))?;
        Some(self.quotient.project(&SVec::from_dense(&coords)))
    }

    /// A normalized `t` with `∂t = s`, when `s` is a coboundary.
    pub fn primitive(&self, m: &LeftModule, s: &LinearMap) -> Option<LinearMap> {
        let field = m.hopf.field();
        let dh = m.hopf.dim();
        let n1 = Subspace::kernel(&normalization(&m.hopf, m.dim, 1));
        let d1 = operator(field, dh, m.dim, dh * dh * m.dim, |t| coords(&coboundary1(m, t)));
        let images: Vec<SVec> = n1.basis().iter().map(|b| d1.apply(b)).collect();
        let mat = LinearMap::from_columns(field, dh * dh * m.dim, images).ok()?.to_matrix();
        match mat.solve(&s.to_coordinates()).ok()? {
            crate::linalg::Solution::Consistent { particular, .. } => {
                let t = n1.combine(&particular);
                Some(LinearMap::from_coordinates(field, dh, m.dim, &t.to_dense(dh * m.dim, field)))
            }
            crate::linalg::Solution::Inconsistent { .. } => None,
        }
    }
}

pub fn hh2(m: &LeftModule) -> Result<HH2Result> {
    let h = &m.hopf;
    let field = h.field();
    let (dh, md) = (h.dim(), m.dim);
    let d1 = operator(field, dh, md, dh * dh * md, |t| coords(&coboundary1(m, t)));
    let d2 = operator(field, dh * dh, md, dh * dh * dh * md, |s| coords(&coboundary2(m, s)));
    if !d2.compose(&d1)?.is_zero() {
        return Err(Error::Internal("∂²∘∂¹ ≠ 0".into()));
    }
    let n1 = Subspace::kernel(&normalization(h, md, 1));
    let norm2 = normalization(h, md, 2);
    let offset = norm2.codomain();
    let stacked = LinearMap::from_fn(field, dh * dh * md, offset + d2.codomain(), |u| {
        norm2
            .column(u)
            .add(&d2.column(u).remap(|i| Some(offset + i)))
    });
    let cocycles = Subspace::kernel(&stacked);
    let coboundaries = Subspace::span(field, dh * dh * md, n1.basis().iter().map(|b| d1.apply(b)));
    let inside: Vec<SVec> = coboundaries
        .basis()
        .iter()
        .map(|b| {
            cocycles
                .coordinates(b)
                .map(|c| SVec::from_dense(&c))
                .ok_or_else(|| Error::Internal("coboundary is not a normalized cocycle".into()))
        })
        .collect::<Result<_>>()?;
    let quotient = Quotient::new(Subspace::span(field, cocycles.dim(), inside));
    let representatives = quotient
        .complement()
        .iter()
        .map(|&c| {
            let v = &cocycles.basis()[c];
            LinearMap::from_coordinates(field, dh * dh, md, &v.to_dense(dh * dh * md, field))
        })
        .collect();
    let dimension = quotient.dim();
    if dh <= 4 {
        let full = Subspace::kernel(&d2).dim() - d1.rank();
        if full != dimension {
            return Err(Error::Internal(alloc::format!(
                "normalized HH² has dimension {dimension}, full complex {full}"
            )));
        }
    }
    Ok(HH2Result {
        dimension,
        cocycles,
        coboundaries,
        quotient,
        representatives,
        hopf_dim: dh,
        module_dim: md,
    })
}
