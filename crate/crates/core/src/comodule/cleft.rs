use alloc::vec::Vec;

use super::{coinvariants, crossed_product, CrossedSystem, Coinvariants, ComoduleAlgebra};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::{LinearMap, Matrix, SVec, Solution, Subspace};
use crate::search::{search_family, AbsenceProof, SearchConfig, SearchOutcome, Stage};

/// A normalized convolution-invertible colinear map `φ: H → A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Section {
    pub phi: LinearMap,
    pub phi_inv: LinearMap,
}

impl Section {
    /// Verifies colinearity, `φ(1) = 1` and invertibility.
    pub fn new(a: &ComoduleAlgebra, phi: LinearMap) -> Result<Self> {
        if !a.is_colinear(&phi) {
            return Err(Error::InvalidStructure("section is not colinear".into()));
        }
        if phi.apply(a.hopf.one()) != *a.algebra.unit() {
            return Err(Error::InvalidStructure("section does not send 1 to 1".into()));
        }
        let phi_inv = a.convolution().invert(&phi)?;
        Ok(Section { phi, phi_inv })
    }

    /// Replaces an invertible colinear `φ` by `h ↦ φ⁻¹(1)φ(h)`.
    pub fn normalize(a: &ComoduleAlgebra, phi: &LinearMap) -> Result<Self> {
        let inv = a.convolution().invert(phi)?;
        let u = inv.apply(a.hopf.one());
        let dh = a.hopf.dim();
        let normalized = LinearMap::from_fn(a.field(), dh, a.algebra.dim(), |h| {
            a.algebra.mul(&u, phi.column(h))
        });
        Self::new(a, normalized)
    }
}

/// Colinear maps `H → A` as a subspace of `Hom(H, A)` in [`LinearMap::to_coordinates`] order.
pub fn colinear_maps(a: &ComoduleAlgebra) -> Subspace {
    let field = a.field();
    let (da, dh) = (a.algebra.dim(), a.hopf.dim());
    let block = da * dh;
    let constraint = LinearMap::from_fn(field, dh * da, dh * block, |u| {
        let (h, i) = (u / da, u % da);
        let mut col = a.coaction.column(i).remap(|k| Some(h * block + k));
        for hp in 0..dh {
            for (t, c) in a.hopf.coalgebra.comul_basis(hp).iter() {
                if t / dh == h {
                    col.add_term(hp * block + i * dh + t % dh, &-c);
                }
            }
        }
        col
    });
    Subspace::kernel(&constraint)
}

fn map_from(a: &ComoduleAlgebra, coords: &SVec) -> LinearMap {
    let field = a.field();
    LinearMap::from_coordinates(field, a.hopf.dim(), a.algebra.dim(), &coords.to_dense(a.hopf.dim() * a.algebra.dim(), field))
}

#[derive(Clone, Debug)]
pub struct SectionSearch {
    pub colinear_dim: usize,
    pub outcome: SearchOutcome<Section>,
}

/// Searches the colinear maps for a convolution-invertible one and normalizes it.
pub fn find_section(a: &ComoduleAlgebra, config: &SearchConfig) -> Result<SectionSearch> {
    let space = colinear_maps(a);
    let conv = a.convolution();
    let degree = a.hopf.dim() * a.algebra.dim();
    let outcome = search_family(a.field(), space.dim(), config, Some(degree), |t| {
        let phi = map_from(a, &space.combine(t));
        match conv.is_invertible(&phi) {
            Ok(true) => Some(phi),
            _ => None,
        }
    });
    let outcome = match outcome {
        SearchOutcome::Found {
            witness,
            params,
            stage,
            tried,
        } => SearchOutcome::Found {
            witness: Section::normalize(a, &witness)?,
            params,
            stage,
            tried,
        },
        SearchOutcome::ProvedAbsent { proof, tried } => SearchOutcome::ProvedAbsent { proof, tried },
        SearchOutcome::NotFoundWithinBudget { tried } => SearchOutcome::NotFoundWithinBudget { tried },
    };
    Ok(SectionSearch {
        colinear_dim: space.dim(),
        outcome,
    })
}

/// `A` presented as a crossed product through a section.
#[derive(Clone, Debug)]
pub struct CleftPresentation {
    pub section: Section,
    pub coinvariants: Coinvariants,
    pub system: CrossedSystem,
    pub crossed: ComoduleAlgebra,
    /// `B ⋊_σ H → A`, `b⊗h ↦ bφ(h)`.
    pub iso: LinearMap,
    /// `A → B ⋊_σ H`, `a ↦ a₀φ⁻¹(a₁) ⊗ a₂`.
    pub iso_inverse: LinearMap,
}

/// `h⇀b = φ(h₁)bφ⁻¹(h₂)`, `σ(g,h) = φ(g₁)φ(h₁)φ⁻¹(g₂h₂)`, and the isomorphism `b⊗h ↦ bφ(h)`.
pub fn section_to_crossed_system(a: &ComoduleAlgebra, sec: &Section) -> Result<CleftPresentation> {
    let field = a.field();
    let alg = &a.algebra;
    let hopf = &a.hopf;
    let (da, dh) = (alg.dim(), hopf.dim());
    let b = coinvariants(a)?;
    let db = b.dim();
    let into_b = |v: &SVec| -> Result<SVec> {
        b.coordinates(v)
            .ok_or_else(|| Error::Internal("value outside the coinvariants".into()))
    };
    let mut measuring_cols = Vec::with_capacity(dh * db);
    for h in 0..dh {
        for x in 0..db {
            let bx = &b.subspace.basis()[x];
            let mut v = SVec::new();
            for (t, c) in hopf.coalgebra.comul_basis(h).iter() {
                let left = alg.mul(sec.phi.column(t / dh), bx);
                v.axpy(c, &alg.mul(&left, sec.phi_inv.column(t % dh)));
            }
            measuring_cols.push(into_b(&v)?);
        }
    }
    let measuring = LinearMap::from_columns(field, db, measuring_cols)?;
    let mut sigma_cols = Vec::with_capacity(dh * dh);
    for g in 0..dh {
        for h in 0..dh {
            let mut v = SVec::new();
            for (s, c) in hopf.coalgebra.comul_basis(g).iter() {
                for (t, d) in hopf.coalgebra.comul_basis(h).iter() {
                    let prod = alg.mul(sec.phi.column(s / dh), sec.phi.column(t / dh));
                    let tail = sec.phi_inv.apply(hopf.algebra.mul_basis(s % dh, t % dh));
                    v.axpy(&(c * d), &alg.mul(&prod, &tail));
                }
            }
            sigma_cols.push(into_b(&v)?);
        }
    }
    let sigma = LinearMap::from_columns(field, db, sigma_cols)?;
    let system = CrossedSystem::new(hopf.clone(), b.algebra.clone(), measuring, sigma)?;
    let crossed = crossed_product(&system)
        .map_err(|e| Error::Internal(alloc::format!("extracted system: {e}")))?;
    let iso = LinearMap::from_fn(field, db * dh, da, |x| {
        alg.mul(&b.subspace.basis()[x / dh], sec.phi.column(x % dh))
    });
    let iso_inverse_cols = (0..da)
        .map(|i| {
            let mut parts = alloc::vec![SVec::new(); dh];
            for (k, c) in a.coact(&SVec::unit(i, field)).iter() {
                let (a0, a1) = (k / dh, k % dh);
                for (t, d) in hopf.coalgebra.comul_basis(a1).iter() {
                    let term = alg.mul(&SVec::unit(a0, field), sec.phi_inv.column(t / dh));
                    parts[t % dh].axpy(&(c * d), &term);
                }
            }
            let mut out = SVec::new();
            for (h, part) in parts.iter().enumerate() {
                out = out.add(&into_b(part)?.tensor(&SVec::unit(h, field), dh));
            }
            Ok(out)
        })
        .collect::<Result<Vec<_>>>()?;
    let iso_inverse = LinearMap::from_columns(field, db * dh, iso_inverse_cols)?;
    verify_cleft_iso(a, &b, &crossed, &iso, &iso_inverse)?;
    Ok(CleftPresentation {
        section: sec.clone(),
        coinvariants: b,
        system,
        crossed,
        iso,
        iso_inverse,
    })
}

/// Bijective, multiplicative, colinear, identity on `B`.
fn verify_cleft_iso(
    a: &ComoduleAlgebra,
    b: &Coinvariants,
    crossed: &ComoduleAlgebra,
    iso: &LinearMap,
    iso_inverse: &LinearMap,
) -> Result<()> {
    let field = a.field();
    let dh = a.hopf.dim();
    let fail = |what: &str| Err(Error::Internal(alloc::format!("crossed-product iso: {what}")));
    if !iso.is_bijective() {
        return fail("not bijective");
    }
    if iso.compose(iso_inverse)? != LinearMap::identity(field, a.algebra.dim()) {
        return fail("explicit inverse is wrong");
    }
    if let Some(d) = crossed.algebra.algebra_map_defect(&a.algebra, iso) {
        return fail(&alloc::format!("not multiplicative ({d:?})"));
    }
    let lifted = iso.tensor(&LinearMap::identity(field, dh));
    for x in 0..iso.domain() {
        if a.coact(iso.column(x)) != lifted.apply(crossed.coaction.column(x)) {
            return fail("not colinear");
        }
    }
    for x in 0..b.dim() {
        let bx = SVec::unit(x, field).tensor(a.hopf.one(), dh);
        if iso.apply(&bx) != b.subspace.basis()[x] {
            return fail("not the identity on B");
        }
    }
    Ok(())
}

#[derive(Clone, Debug)]
pub struct AlgebraSectionSearch {
    /// Dimension of the affine family of unital colinear maps, if nonempty.
    pub family_dim: Option<usize>,
    pub outcome: SearchOutcome<LinearMap>,
    /// The smash-product presentation when a map was found.
    pub presentation: Option<CleftPresentation>,
}

/// Searches unital colinear maps `H → A` for an algebra map.
pub fn find_comodule_algebra_map(a: &ComoduleAlgebra, config: &SearchConfig) -> Result<AlgebraSectionSearch> {
    let field = a.field();
    let (da, dh) = (a.algebra.dim(), a.hopf.dim());
    let space = colinear_maps(a);
    let m0 = space.dim();
    // φ(1) = 1 on the colinear family
    let values: Vec<SVec> = space.basis().iter().map(|k| map_from(a, k).apply(a.hopf.one())).collect();
    let rows: Vec<Vec<Scalar>> = (0..da)
        .map(|r| values.iter().map(|v| v.coeff(r, field)).collect())
        .collect();
    let rhs = a.algebra.unit().to_dense(da, field);
    let (particular, kernel) = if m0 == 0 {
        if rhs.iter().all(Scalar::is_zero) {
            (Vec::new(), Vec::new())
        } else {
            return Ok(absent(None, 0));
        }
    } else {
        match Matrix::from_rows(field, rows)?.solve(&rhs)? {
            Solution::Consistent { particular, kernel } => (particular, kernel),
            Solution::Inconsistent { .. } => return Ok(absent(None, 0)),
        }
    };
    let m = kernel.len();
    let point = |t: &[Scalar]| -> LinearMap {
        let mut coeffs = particular.clone();
        for (s, k) in t.iter().zip(&kernel) {
            for (c, kv) in coeffs.iter_mut().zip(k) {
                *c = &*c + &(s * kv);
            }
        }
        map_from(a, &space.combine(&coeffs))
    };
    let is_map = |phi: &LinearMap| a.hopf.algebra.is_algebra_map(&a.algebra, phi);
    let outcome = if m == 0 {
        let phi = point(&[]);
        if is_map(&phi) {
            SearchOutcome::Found {
                witness: phi,
                params: Vec::new(),
                stage: Stage::Exhaustive,
                tried: 1,
            }
        } else {
            SearchOutcome::ProvedAbsent {
                proof: AbsenceProof::Exact,
                tried: 1,
            }
        }
    } else if m == 1 && !enumerable(field, config) {
        solve_quadratic(field, dh, &point, &is_map, a)
    } else {
        search_family(field, m, config, None, |t| {
            let phi = point(t);
            is_map(&phi).then_some(phi)
        })
    };
    let presentation = match outcome.found() {
        Some(phi) => {
            let sec = Section::new(a, phi.clone())?;
            Some(section_to_crossed_system(a, &sec)?)
        }
        None => None,
    };
    Ok(AlgebraSectionSearch {
        family_dim: Some(m),
        outcome,
        presentation,
    })
}

fn absent(family_dim: Option<usize>, tried: usize) -> AlgebraSectionSearch {
    AlgebraSectionSearch {
        family_dim,
        outcome: SearchOutcome::ProvedAbsent {
            proof: AbsenceProof::Exact,
            tried,
        },
        presentation: None,
    }
}

fn enumerable(field: crate::ScalarField, config: &SearchConfig) -> bool {
    field.order().is_some_and(|q| q <= config.exhaustive_limit)
}

/// Multiplicativity defects `φ(eᵢ)φ(eⱼ) − φ(eᵢeⱼ)` are quadratic in a single parameter;
/// solve the first nonzero one exactly and test its roots.
fn solve_quadratic(
    field: crate::ScalarField,
    dh: usize,
    point: &dyn Fn(&[Scalar]) -> LinearMap,
    is_map: &dyn Fn(&LinearMap) -> bool,
    a: &ComoduleAlgebra,
) -> SearchOutcome<LinearMap> {
    let da = a.algebra.dim();
    let defect = |t: Scalar| -> Vec<Scalar> {
        let phi = point(&[t]);
        let mut out = Vec::with_capacity(dh * dh * da);
        for i in 0..dh {
            for j in 0..dh {
                let lhs = a.algebra.mul(phi.column(i), phi.column(j));
                let d = lhs.sub(&phi.apply(a.hopf.algebra.mul_basis(i, j)));
                out.extend(d.to_dense(da, field));
            }
        }
        out
    };
    let two_inv = field.int(2).inv().expect("odd characteristic");
    let d0 = defect(field.zero());
    let d1 = defect(field.one());
    let dm = defect(field.int(-1));
    let mut roots: Option<Vec<Scalar>> = None;
    for ((c0, p), q) in d0.iter().zip(&d1).zip(&dm) {
        let c2 = &(&(p + q) * &two_inv) - c0;
        let c1 = &(p - q) * &two_inv;
        if c2.is_zero() && c1.is_zero() {
            if c0.is_zero() {
                continue;
            }
            roots = Some(Vec::new());
            break;
        }
        roots = Some(if c2.is_zero() {
            alloc::vec![-&(c0 * &c1.inv().expect("nonzero"))]
        } else {
            let disc = &(&c1 * &c1) - &(&field.int(4) * &(&c2 * c0));
            match disc.sqrt() {
                None => Vec::new(),
                Some(s) => {
                    let den = (&field.int(2) * &c2).inv().expect("nonzero");
                    alloc::vec![&(&-&c1 + &s) * &den, &(&-&c1 - &s) * &den]
                }
            }
        });
        break;
    }
    let candidates = roots.unwrap_or_else(|| alloc::vec![field.zero()]);
    let mut tried = 3;
    for t in candidates {
        tried += 1;
        let phi = point(std::slice::from_ref(&t));
        if is_map(&phi) {
            return SearchOutcome::Found {
                witness: phi,
                params: alloc::vec![t],
                stage: Stage::Exhaustive,
                tried,
            };
        }
    }
    SearchOutcome::ProvedAbsent {
        proof: AbsenceProof::Exact,
        tried,
    }
}

/// Searches colinear `φ` with `B⊗H → A`, `b⊗h ↦ bφ(h)` bijective: a left-`B`-linear colinear isomorphism.
pub fn normal_basis_search(
    a: &ComoduleAlgebra,
    b: &Coinvariants,
    config: &SearchConfig,
) -> SearchOutcome<LinearMap> {
    let (da, dh) = (a.algebra.dim(), a.hopf.dim());
    if b.dim() * dh != da {
        return SearchOutcome::ProvedAbsent {
            proof: AbsenceProof::Exact,
            tried: 0,
        };
    }
    let space = colinear_maps(a);
    search_family(a.field(), space.dim(), config, Some(da), |t| {
        let phi = map_from(a, &space.combine(t));
        let iso = LinearMap::from_fn(a.field(), da, da, |x| {
            a.algebra.mul(&b.subspace.basis()[x / dh], phi.column(x % dh))
        });
        iso.is_bijective().then_some(iso)
    })
}
