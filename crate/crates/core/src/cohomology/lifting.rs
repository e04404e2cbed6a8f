use alloc::vec::Vec;

use super::extension::{split_extension, AugmentedCleftExtension, Splitting};
use crate::algebra::Hopf;
use crate::comodule::{ComoduleAlgebra, Section};
use crate::error::{Error, Result};
use crate::linalg::{LinearMap, Quotient, SVec, Solution, Subspace};
use crate::search::SearchConfig;

/// A right `H`-module and right `H`-comodule `M` with `ρ(mh) = ρ(m)Δ(h)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfModule {
    pub hopf: Hopf,
    pub dim: usize,
    /// `M⊗H → M`, index `m * dim H + h`.
    pub action: LinearMap,
    /// `M → M⊗H`.
    pub coaction: LinearMap,
}

impl HopfModule {
    pub fn new(hopf: Hopf, dim: usize, action: LinearMap, coaction: LinearMap) -> Result<Self> {
        let dh = hopf.dim();
        if action.domain() != dim * dh || action.codomain() != dim {
            return Err(Error::ShapeMismatch("action must map M⊗H → M".into()));
        }
        if coaction.domain() != dim || coaction.codomain() != dim * dh {
            return Err(Error::ShapeMismatch("coaction must map M → M⊗H".into()));
        }
        let m = HopfModule {
            hopf,
            dim,
            action,
            coaction,
        };
        m.validate()?;
        Ok(m)
    }

    /// `V⊗H` with `id⊗Δ` and `id⊗μ`.
    pub fn free(hopf: &Hopf, v: usize) -> Self {
        let field = hopf.field();
        let dh = hopf.dim();
        let action = LinearMap::from_fn(field, v * dh * dh, v * dh, |k| {
            let (x, h) = (k / dh, k % dh);
            let (i, g) = (x / dh, x % dh);
            hopf.algebra.mul_basis(g, h).remap(|j| Some(i * dh + j))
        });
        let coaction = LinearMap::from_fn(field, v * dh, v * dh * dh, |x| {
            let (i, g) = (x / dh, x % dh);
            hopf.coalgebra.comul_basis(g).remap(|t| Some((i * dh + t / dh) * dh + t % dh))
        });
        HopfModule {
            hopf: hopf.clone(),
            dim: v * dh,
            action,
            coaction,
        }
    }

    /// The same module on the basis given by the columns of `change`.
    pub fn transport(&self, change: &LinearMap) -> Result<Self> {
        let field = self.hopf.field();
        let dh = self.hopf.dim();
        let back = change.inverse()?;
        let id = LinearMap::identity(field, dh);
        let action = back.compose(&self.action)?.compose(&change.tensor(&id))?;
        let coaction = back.tensor(&id).compose(&self.coaction)?.compose(change)?;
        Self::new(self.hopf.clone(), self.dim, action, coaction)
    }

    pub fn act(&self, m: &SVec, h: &SVec) -> SVec {
        self.action.apply(&m.tensor(h, self.hopf.dim()))
    }

    fn validate(&self) -> Result<()> {
        let h = &self.hopf;
        let field = h.field();
        let dh = h.dim();
        let bad = |why: &str| Err(Error::NotHopfModule(why.into()));
        for m in 0..self.dim {
            let em = SVec::unit(m, field);
            if self.act(&em, h.one()) != em {
                return bad("1 does not act as the identity");
            }
            for g in 0..dh {
                for x in 0..dh {
                    let lhs = self.act(&self.act(&em, &SVec::unit(g, field)), &SVec::unit(x, field));
                    if lhs != self.act(&em, h.algebra.mul_basis(g, x)) {
                        return bad("action is not associative");
                    }
                }
            }
        }
        let id_h = LinearMap::identity(field, dh);
        let id_m = LinearMap::identity(field, self.dim);
        let left = self.coaction.tensor(&id_h).compose(&self.coaction)?;
        let right = id_m.tensor(h.coalgebra.coproduct()).compose(&self.coaction)?;
        if left != right {
            return bad("coaction is not coassociative");
        }
        if id_m.tensor(h.coalgebra.counit()).compose(&self.coaction)? != id_m {
            return bad("coaction is not counital");
        }
        for m in 0..self.dim {
            for x in 0..dh {
                let lhs = self.coaction.apply(&self.act(&SVec::unit(m, field), &SVec::unit(x, field)));
                let mut rhs = SVec::new();
                for (k, c) in self.coaction.column(m).iter() {
                    let (m0, m1) = (k / dh, k % dh);
                    for (t, d) in h.coalgebra.comul_basis(x).iter() {
                        let left = self.act(&SVec::unit(m0, field), &SVec::unit(t / dh, field));
                        let right = h.algebra.mul_basis(m1, t % dh);
                        rhs.axpy(&(c * d), &left.tensor(right, dh));
                    }
                }
                if lhs != rhs {
                    return bad("ρ(mh) ≠ ρ(m)Δ(h)");
                }
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfModuleDecomposition {
    pub coinvariants: Subspace,
    /// `M^{coH}⊗H → M`, `m⊗h ↦ mh`.
    pub iso: LinearMap,
    pub inverse: LinearMap,
}

pub fn hopf_module_decompose(m: &HopfModule) -> Result<HopfModuleDecomposition> {
    let h = &m.hopf;
    let field = h.field();
    let dh = h.dim();
    let defect = LinearMap::from_fn(field, m.dim, m.dim * dh, |i| {
        m.coaction.column(i).sub(&SVec::unit(i, field).tensor(h.one(), dh))
    });
    let coinvariants = Subspace::kernel(&defect);
    let iso = LinearMap::from_fn(field, coinvariants.dim() * dh, m.dim, |k| {
        m.act(&coinvariants.basis()[k / dh], &SVec::unit(k % dh, field))
    });
    let inverse = iso
        .inverse()
        .map_err(|_| Error::Internal("Hopf module map M^coH⊗H → M is not bijective".into()))?;
    Ok(HopfModuleDecomposition {
        coinvariants,
        iso,
        inverse,
    })
}

/// The coaction of `V` restricted to a subcomodule `sub`, in `sub`'s echelon basis.
pub fn restrict_coaction(coaction: &LinearMap, hopf_dim: usize, sub: &Subspace) -> Result<LinearMap> {
    let field = sub.field();
    let dh = hopf_dim;
    let cols = sub
        .basis()
        .iter()
        .map(|b| {
            let w = coaction.apply(b);
            let mut out = SVec::new();
            for h in 0..dh {
                let part = w.remap(|k| (k % dh == h).then_some(k / dh));
                let c = sub
                    .coordinates(&part)
                    .ok_or_else(|| Error::InvalidCoaction("subspace is not a subcomodule".into()))?;
                out = out.add(&SVec::from_dense(&c).remap(|j| Some(j * dh + h)));
            }
            Ok(out)
        })
        .collect::<Result<Vec<_>>>()?;
    LinearMap::from_columns(field, sub.dim() * dh, cols)
}

/// `C/I` for a two-sided ideal and subcomodule `I`, on the complement basis of the quotient.
pub fn quotient_comodule_algebra(c: &ComoduleAlgebra, ideal: &Subspace) -> Result<(ComoduleAlgebra, Quotient)> {
    let alg = &c.algebra;
    let field = alg.field();
    let dh = c.hopf.dim();
    for v in ideal.basis() {
        for i in 0..alg.dim() {
            let e = SVec::unit(i, field);
            if !ideal.contains(&alg.mul(v, &e)) || !ideal.contains(&alg.mul(&e, v)) {
                return Err(Error::InvalidStructure("subspace is not a two-sided ideal".into()));
            }
        }
    }
    restrict_coaction(&c.coaction, dh, ideal)?;
    let q = Quotient::new(ideal.clone());
    let labels = q.complement().iter().map(|&i| alg.labels()[i].clone()).collect();
    let lift = |x: usize| q.lift(&SVec::unit(x, field));
    let algebra = crate::algebra::Algebra::from_table(field, labels, q.project(alg.unit()), |x, y| {
        q.project(&alg.mul(&lift(x), &lift(y)))
    })?;
    let coaction = LinearMap::from_fn(field, q.dim(), q.dim() * dh, |x| {
        let mut out = SVec::new();
        for (k, coeff) in c.coact(&lift(x)).iter() {
            let image = q.project(&SVec::unit(k / dh, field));
            out.axpy(coeff, &image.tensor(&SVec::unit(k % dh, field), dh));
        }
        out
    });
    Ok((ComoduleAlgebra::new(algebra, c.hopf.clone(), coaction)?, q))
}

/// `[I, I², …, Iⁿ = 0]`.
pub(crate) fn nilpotent_powers(alg: &crate::algebra::Algebra, ideal: &Subspace) -> Result<Vec<Subspace>> {
    let mut powers = alloc::vec![ideal.clone()];
    while powers.last().expect("nonempty").dim() > 0 {
        let last = powers.last().expect("nonempty");
        let next = alg.span_products(last, ideal);
        if next.dim() == last.dim() {
            return Err(Error::KernelNotNilpotent);
        }
        powers.push(next);
    }
    Ok(powers)
}

fn solve_exact(map: &LinearMap, target: &SVec) -> Option<SVec> {
    let field = map.field();
    match map.to_matrix().solve(&target.to_dense(map.codomain(), field)).ok()? {
        Solution::Consistent { particular, .. } => Some(SVec::from_dense(&particular)),
        Solution::Inconsistent { .. } => None,
    }
}

/// `ρ` pushed to `A/Q`.
fn quotient_coaction(a: &ComoduleAlgebra, q: &Quotient) -> LinearMap {
    let field = a.field();
    let dh = a.hopf.dim();
    LinearMap::from_fn(field, q.dim(), q.dim() * dh, |x| {
        let mut out = SVec::new();
        for (k, c) in a.coact(&q.lift(&SVec::unit(x, field))).iter() {
            out.axpy(c, &q.project(&SVec::unit(k / dh, field)).tensor(&SVec::unit(k % dh, field), dh));
        }
        out
    })
}

fn check_comodule_algebra_map(src: &ComoduleAlgebra, dst_alg: &crate::algebra::Algebra, dst_coaction: &LinearMap, f: &LinearMap) -> Result<()> {
    let field = src.field();
    let dh = src.hopf.dim();
    if let Some(d) = src.algebra.algebra_map_defect(dst_alg, f) {
        return Err(Error::NotAlgebraMap(alloc::format!("{d:?}")));
    }
    let lifted = f.tensor(&LinearMap::identity(field, dh));
    for x in 0..f.domain() {
        if dst_coaction.apply(f.column(x)) != lifted.apply(src.coaction.column(x)) {
            return Err(Error::InvalidCoaction(alloc::format!("map is not colinear at {x}")));
        }
    }
    Ok(())
}

/// A unital, convolution-invertible colinear splitting of `π: A ↠ H`, built through
/// `A/Iⁿ ↠ … ↠ A/I = H` by splitting each step with the Hopf module theorem.
pub fn colinear_splitting_nilpotent(a: &ComoduleAlgebra, pi: &LinearMap) -> Result<Section> {
    let h = &a.hopf;
    let field = a.field();
    let dh = h.dim();
    if pi.domain() != a.algebra.dim() || pi.codomain() != dh {
        return Err(Error::ShapeMismatch("π must map A → H".into()));
    }
    let regular = ComoduleAlgebra::regular(h);
    check_comodule_algebra_map(a, &h.algebra, &regular.coaction, pi)?;
    if !pi.is_surjective() {
        return Err(Error::InvalidStructure("π is not surjective".into()));
    }
    let ideal = Subspace::kernel(pi);
    let mut powers = alloc::vec![Subspace::full(field, a.algebra.dim())];
    powers.extend(nilpotent_powers(&a.algebra, &ideal)?);
    let n = powers.len() - 1;
    let pre: Vec<SVec> = (0..dh)
        .map(|x| solve_exact(pi, &SVec::unit(x, field)).expect("π is surjective"))
        .collect();
    let q1 = Quotient::new(powers[1].clone());
    let mut current = LinearMap::from_fn(field, dh, q1.dim(), |x| q1.project(&pre[x]));
    for i in 2..=n {
        let qi = Quotient::new(powers[i].clone());
        let qprev = Quotient::new(powers[i - 1].clone());
        let rho = quotient_coaction(a, &qi);
        let down = LinearMap::from_fn(field, qi.dim(), qprev.dim(), |x| {
            qprev.project(&qi.lift(&SVec::unit(x, field)))
        });
        let kernel = Subspace::kernel(&down);
        let coords = |v: &SVec| -> Result<SVec> {
            kernel
                .coordinates(v)
                .map(|c| SVec::from_dense(&c))
                .ok_or_else(|| Error::Internal("value outside Iⁱ⁻¹/Iⁱ".into()))
        };
        let action_cols = (0..kernel.dim() * dh)
            .map(|k| {
                let v = qi.lift(&kernel.basis()[k / dh]);
                coords(&qi.project(&a.algebra.mul(&v, &pre[k % dh])))
            })
            .collect::<Result<Vec<_>>>()?;
        let module = HopfModule::new(
            h.clone(),
            kernel.dim(),
            LinearMap::from_columns(field, kernel.dim(), action_cols)?,
            restrict_coaction(&rho, dh, &kernel)?,
        )?;
        let dec = hopf_module_decompose(&module)?;
        let vdim = dec.coinvariants.dim();
        // a linear projection onto the kernel, then θ∘(ℓ⊗id)∘ρ with ℓ = (id⊗ε)θ⁻¹p
        let complement = Quotient::new(kernel.clone());
        let project = LinearMap::from_fn(field, qi.dim(), kernel.dim(), |x| {
            let e = SVec::unit(x, field);
            coords(&e.sub(&complement.lift(&complement.project(&e)))).unwrap_or_default()
        });
        let counit_v = LinearMap::identity(field, vdim).tensor(h.coalgebra.counit());
        let ell = counit_v.compose(&dec.inverse)?.compose(&project)?;
        let retract = dec
            .iso
            .compose(&ell.tensor(&LinearMap::identity(field, dh)))?
            .compose(&rho)?;
        if retract.compose(&kernel.inclusion())? != LinearMap::identity(field, kernel.dim()) {
            return Err(Error::Internal("colinear retraction is not the identity on the kernel".into()));
        }
        let complement_c = Subspace::kernel(&retract);
        let restricted = down.compose(&complement_c.inclusion())?;
        let split = complement_c.inclusion().compose(&restricted.inverse()?)?;
        current = split.compose(&current)?;
    }
    if !a.is_colinear(&current) || pi.compose(&current)? != LinearMap::identity(field, dh) {
        return Err(Error::Internal("filtration splitting is not a colinear section of π".into()));
    }
    let section = Section::normalize(a, &current)?;
    if pi.compose(&section.phi)? != LinearMap::identity(field, dh) {
        return Err(Error::Internal("normalized splitting does not split π".into()));
    }
    Ok(section)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Lift {
    Lifted { map: LinearMap, steps: usize },
    /// Step `i` lifts from `C/J^{2^{i-1}}` to `C/J^{2^i}`.
    ObstructionAtStep { step: usize, class: SVec },
}

/// Lifts a comodule algebra map `ψ: H → D` through `ϖ: C ↠ D` with nilpotent kernel `J`,
/// one square-zero step `C/J^{2^i} → C/J^{2^{i−1}}` at a time.
pub fn lift_comodule_algebra_map(
    c: &ComoduleAlgebra,
    d: &ComoduleAlgebra,
    varpi: &LinearMap,
    psi: &LinearMap,
    config: &SearchConfig,
) -> Result<Lift> {
    let h = &c.hopf;
    let field = c.field();
    let dh = h.dim();
    if d.hopf != *h {
        return Err(Error::ShapeMismatch("C and D must be comodules over the same H".into()));
    }
    check_comodule_algebra_map(c, &d.algebra, &d.coaction, varpi)?;
    if !varpi.is_surjective() {
        return Err(Error::InvalidStructure("ϖ is not surjective".into()));
    }
    check_comodule_algebra_map(&ComoduleAlgebra::regular(h), &d.algebra, &d.coaction, psi)?;
    if !psi.is_injective() {
        return Err(Error::Internal("comodule algebra map H → D is not injective".into()));
    }
    let j = Subspace::kernel(varpi);
    let powers = nilpotent_powers(&c.algebra, &j)?;
    let n = powers.len();
    let power = |e: usize| -> Subspace {
        if e > n {
            Subspace::zero(field, c.algebra.dim())
        } else {
            powers[e - 1].clone()
        }
    };
    let q0 = Quotient::new(j.clone());
    let mut current = LinearMap::from_fn(field, dh, q0.dim(), |x| {
        q0.project(&solve_exact(varpi, psi.column(x)).expect("ϖ is surjective"))
    });
    let mut step = 0;
    let mut exponent = 1;
    while exponent < n {
        step += 1;
        let next = exponent * 2;
        let (x, qx) = quotient_comodule_algebra(c, &power(next))?;
        let qprev = Quotient::new(power(exponent));
        let down = LinearMap::from_fn(field, qx.dim(), qprev.dim(), |v| {
            qprev.project(&qx.lift(&SVec::unit(v, field)))
        });
        let mut gens: Vec<SVec> = Subspace::kernel(&down).basis().to_vec();
        for col in current.columns() {
            gens.push(qx.project(&qprev.lift(col)));
        }
        let pullback = Subspace::span(field, qx.dim(), gens);
        let labels = crate::comodule::subspace_labels(&pullback, x.algebra.labels(), "a");
        let a_alg = x.algebra.subalgebra(&pullback, labels)?;
        let a_coaction = restrict_coaction(&x.coaction, dh, &pullback)?;
        let a = ComoduleAlgebra::new(a_alg, h.clone(), a_coaction)?;
        let incl = pullback.inclusion();
        let pi_cols = (0..pullback.dim())
            .map(|k| {
                solve_exact(&current, &down.apply(incl.column(k)))
                    .ok_or_else(|| Error::Internal("pull-back leaves the image of ψ".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        let pi = LinearMap::from_columns(field, dh, pi_cols)?;
        let section = colinear_splitting_nilpotent(&a, &pi)?;
        let augmentation = h.coalgebra.counit().compose(&pi)?;
        let ext = AugmentedCleftExtension::new(a, augmentation, Some(section), config)?;
        match split_extension(&ext)? {
            Splitting::Split { map, .. } => current = incl.compose(&map)?,
            Splitting::Obstruction { class } => return Ok(Lift::ObstructionAtStep { step, class }),
        }
        exponent = next;
    }
    let top = Quotient::new(power(exponent));
    let lift = LinearMap::from_fn(field, dh, c.algebra.dim(), |x| top.lift(current.column(x)));
    check_comodule_algebra_map(&ComoduleAlgebra::regular(h), &c.algebra, &c.coaction, &lift)?;
    if varpi.compose(&lift)? != *psi {
        return Err(Error::Internal("lift does not cover ψ".into()));
    }
    Ok(Lift::Lifted { map: lift, steps: step })
}
