use alloc::vec::Vec;

use super::{coboundary1, coboundary2, hh2, is_normalized, AugmentedAlgebra, HH2Result, LeftModule};
use crate::comodule::{
    coinvariants, crossed_product, find_section, section_to_crossed_system, ComoduleAlgebra,
    CrossedSystem, Section,
};
use crate::error::{Error, Result};
use crate::linalg::{LinearMap, SVec};
use crate::search::{SearchConfig, SearchOutcome};

/// `h⇀(c + b) = ε(h)c + h▷b`, `σ(g,h) = ε(g)ε(h)1 + s(g,h)`, without checking the cocycle law.
pub fn crossed_system_from_data(m: &LeftModule, s: &LinearMap, base: &AugmentedAlgebra) -> Result<CrossedSystem> {
    let h = &m.hopf;
    let field = h.field();
    let (dh, db) = (h.dim(), base.algebra.dim());
    if m.dim != base.ideal.dim() {
        return Err(Error::ShapeMismatch("module must be the augmentation ideal".into()));
    }
    let measuring = LinearMap::from_fn(field, dh * db, db, |k| {
        let (x, b) = (k / db, k % db);
        let (c, plus) = base.split(&SVec::unit(b, field));
        let mut out = base.algebra.unit().scale(&(&h.counit_basis(x) * &c));
        out = out.add(&base.include(&m.act(&SVec::unit(x, field), &plus)));
        out
    });
    let sigma = LinearMap::from_fn(field, dh * dh, db, |k| {
        let eps = &h.counit_basis(k / dh) * &h.counit_basis(k % dh);
        base.algebra.unit().scale(&eps).add(&base.include(s.column(k)))
    });
    CrossedSystem::new(h.clone(), base.algebra.clone(), measuring, sigma)
}

/// The crossed system of a module structure and a normalized 2-cocycle on a square-zero `B⁺`.
pub fn crossed_system_from_cocycle(m: &LeftModule, s: &LinearMap, base: &AugmentedAlgebra) -> Result<CrossedSystem> {
    if !base.square_zero {
        return Err(Error::NotSquareZero);
    }
    if !is_normalized(&m.hopf, 2, s) {
        return Err(Error::CocycleViolation("s(h,1) or s(1,h) is nonzero".into()));
    }
    if !coboundary2(m, s).is_zero() {
        return Err(Error::CocycleViolation("∂s ≠ 0".into()));
    }
    let system = crossed_system_from_data(m, s, base)?;
    let h = &m.hopf;
    let field = h.field();
    let dh = h.dim();
    let expected_inv = LinearMap::from_fn(field, dh * dh, base.algebra.dim(), |k| {
        let eps = &h.counit_basis(k / dh) * &h.counit_basis(k % dh);
        base.algebra.unit().scale(&eps).sub(&base.include(s.column(k)))
    });
    if system.sigma_inv() != Some(&expected_inv) {
        return Err(Error::Internal("σ⁻¹ differs from ε⊗ε − s".into()));
    }
    Ok(system)
}

/// A cleft comodule algebra with an augmentation restricting to `ε_B` and an augmented section.
#[derive(Clone, Debug)]
pub struct AugmentedCleftExtension {
    pub algebra: ComoduleAlgebra,
    pub augmentation: LinearMap,
    /// Coinvariants with the restricted augmentation, in their echelon basis.
    pub base: AugmentedAlgebra,
    pub section: Section,
}

impl AugmentedCleftExtension {
    /// Finds a section when none is supplied and re-augments it by
    /// `h ↦ ε_A(φ⁻¹(h₁))φ(h₂)`.
    pub fn new(
        algebra: ComoduleAlgebra,
        augmentation: LinearMap,
        section: Option<Section>,
        config: &SearchConfig,
    ) -> Result<Self> {
        let field = algebra.field();
        let k = crate::corpus::ground_field(field);
        if let Some(d) = algebra.algebra.algebra_map_defect(&k, &augmentation) {
            return Err(Error::NotAlgebraMap(alloc::format!("augmentation: {d:?}")));
        }
        let b = coinvariants(&algebra)?;
        let base = AugmentedAlgebra::new(b.algebra.clone(), augmentation.compose(&b.inclusion())?)?;
        let section = match section {
            Some(s) => s,
            None => match find_section(&algebra, config)?.outcome {
                SearchOutcome::Found { witness, .. } => witness,
                SearchOutcome::ProvedAbsent { .. } => {
                    return Err(Error::NoSectionFound("proved absent".into()))
                }
                SearchOutcome::NotFoundWithinBudget { tried } => {
                    return Err(Error::NoSectionFound(alloc::format!("not found in {tried} candidates")))
                }
            },
        };
        let dh = algebra.hopf.dim();
        let eps_a = |v: &SVec| augmentation.apply(v).coeff(0, field);
        let phi = LinearMap::from_fn(field, dh, algebra.algebra.dim(), |h| {
            let mut out = SVec::new();
            for (t, c) in algebra.hopf.coalgebra.comul_basis(h).iter() {
                let w = &eps_a(section.phi_inv.column(t / dh)) * c;
                out.axpy(&w, section.phi.column(t % dh));
            }
            out
        });
        let section = Section::new(&algebra, phi)?;
        for h in 0..dh {
            if eps_a(section.phi.column(h)) != algebra.hopf.counit_basis(h) {
                return Err(Error::Internal("re-augmented section is not augmented".into()));
            }
        }
        Ok(AugmentedCleftExtension {
            algebra,
            augmentation,
            base,
            section,
        })
    }

    /// `B ⋊_σ H` with augmentation `ε_B⊗ε` and section `h ↦ 1⊗h`.
    pub fn from_crossed_product(system: &CrossedSystem, base: &AugmentedAlgebra) -> Result<Self> {
        let a = crossed_product(system)?;
        let field = a.field();
        let dh = system.hopf.dim();
        let augmentation = LinearMap::from_fn(field, a.algebra.dim(), 1, |x| {
            SVec::term(0, &base.epsilon(&SVec::unit(x / dh, field)) * &system.hopf.counit_basis(x % dh))
        });
        let phi = LinearMap::from_fn(field, dh, a.algebra.dim(), |h| {
            base.algebra.unit().tensor(&SVec::unit(h, field), dh)
        });
        let section = Section::new(&a, phi)?;
        Self::new(a, augmentation, Some(section), &SearchConfig::default())
    }
}

#[derive(Clone, Debug)]
pub struct Classification {
    pub module: LeftModule,
    /// `s: H⊗H → B⁺` in coordinates of the ideal basis.
    pub cocycle: LinearMap,
    pub hh2: HH2Result,
    pub class: SVec,
    pub system: CrossedSystem,
}

/// Reads `▷` and `s` off the crossed system of the augmented section.
pub fn classify_cleft_extension(e: &AugmentedCleftExtension) -> Result<Classification> {
    let base = &e.base;
    if !base.square_zero {
        return Err(Error::NotSquareZero);
    }
    let p = section_to_crossed_system(&e.algebra, &e.section)?;
    let system = p.system;
    let h = &e.algebra.hopf;
    let field = h.field();
    let (dh, md) = (h.dim(), base.ideal.dim());
    let to_ideal = |v: &SVec| -> Result<SVec> {
        base.ideal
            .coordinates(v)
            .map(|c| SVec::from_dense(&c))
            .ok_or_else(|| Error::Internal("value outside B⁺".into()))
    };
    let action_cols = (0..dh * md)
        .map(|k| {
            let b = &base.ideal.basis()[k % md];
            to_ideal(&system.act(&SVec::unit(k / md, field), b))
        })
        .collect::<Result<Vec<_>>>()?;
    let module = LeftModule::new(h.clone(), md, LinearMap::from_columns(field, md, action_cols)?)?;
    let sigma_cols = (0..dh * dh)
        .map(|k| {
            let eps = &h.counit_basis(k / dh) * &h.counit_basis(k % dh);
            to_ideal(&system.sigma.column(k).sub(&base.algebra.unit().scale(&eps)))
        })
        .collect::<Result<Vec<_>>>()?;
    let cocycle = LinearMap::from_columns(field, md, sigma_cols)?;
    if !module.is_module() {
        return Err(Error::Internal("extracted action is not a module".into()));
    }
    let hh = hh2(&module)?;
    let class = hh
        .decide(&cocycle)
        .ok_or_else(|| Error::Internal("extracted σ is not a cocycle".into()))?;
    Ok(Classification {
        module,
        cocycle,
        hh2: hh,
        class,
        system,
    })
}

/// `f_t(b⊗h) = Σ b(ε(h₁) + t(h₁)) ⊗ h₂` from `B ⋊_σ H` to `B ⋊_σ' H`, verified to be an
/// algebra isomorphism with inverse `f_{−t}`.
pub fn gauge_iso(
    t: &LinearMap,
    base: &AugmentedAlgebra,
    source: &CrossedSystem,
    target: &CrossedSystem,
) -> Result<LinearMap> {
    if !base.square_zero {
        return Err(Error::NotSquareZero);
    }
    let h = &source.hopf;
    let field = h.field();
    let (dh, db) = (h.dim(), base.algebra.dim());
    let f = |t: &LinearMap| {
        LinearMap::from_fn(field, db * dh, db * dh, |x| {
            let eb = SVec::unit(x / dh, field);
            let mut out = SVec::new();
            for (k, c) in h.coalgebra.comul_basis(x % dh).iter() {
                let factor = base
                    .algebra
                    .unit()
                    .scale(&h.counit_basis(k / dh))
                    .add(&base.include(t.column(k / dh)));
                let coeff = base.algebra.mul(&eb, &factor);
                out.axpy(c, &coeff.tensor(&SVec::unit(k % dh, field), dh));
            }
            out
        })
    };
    let forward = f(t);
    let backward = f(&t.scale(&-field.one()));
    if forward.compose(&backward)? != LinearMap::identity(field, db * dh) {
        return Err(Error::Internal("f_t ∘ f_{−t} ≠ id".into()));
    }
    let a = crossed_product(source)?;
    let a2 = crossed_product(target)?;
    if let Some(d) = a.algebra.algebra_map_defect(&a2.algebra, &forward) {
        let same_action = source.measuring == target.measuring;
        let reason = if !same_action {
            "actions differ"
        } else {
            "s − s′ ≠ ∂t"
        };
        return Err(Error::NotAlgebraMap(alloc::format!("{d:?}: {reason}")));
    }
    Ok(forward)
}

#[derive(Clone, Debug)]
pub enum Splitting {
    /// An augmented comodule algebra map `H → A` and the `t` with `s = ∂t`.
    Split { map: LinearMap, gauge: LinearMap },
    Obstruction { class: SVec },
}

impl Splitting {
    pub fn is_split(&self) -> bool {
        matches!(self, Splitting::Split { .. })
    }
}

/// `h ↦ Σ (ε(h₁) − t(h₁)) φ(h₂)` for `s = ∂t`, or the nonzero class of `s`.
pub fn split_extension(e: &AugmentedCleftExtension) -> Result<Splitting> {
    let c = classify_cleft_extension(e)?;
    if !c.class.is_zero() {
        return Ok(Splitting::Obstruction { class: c.class });
    }
    let t = c
        .hh2
        .primitive(&c.module, &c.cocycle)
        .ok_or_else(|| Error::Internal("zero class without a primitive".into()))?;
    if coboundary1(&c.module, &t) != c.cocycle {
        return Err(Error::Internal("primitive does not bound s".into()));
    }
    let a = &e.algebra;
    let h = &a.hopf;
    let field = a.field();
    let dh = h.dim();
    let b = coinvariants(a)?;
    let map = LinearMap::from_fn(field, dh, a.algebra.dim(), |x| {
        let mut out = SVec::new();
        for (k, coeff) in h.coalgebra.comul_basis(x).iter() {
            let in_b = e.base.algebra.unit().scale(&h.counit_basis(k / dh)).sub(&e.base.include(t.column(k / dh)));
            let in_a = b.inclusion().apply(&in_b);
            out.axpy(coeff, &a.algebra.mul(&in_a, e.section.phi.column(k % dh)));
        }
        out
    });
    if !h.algebra.is_algebra_map(&a.algebra, &map) || !a.is_colinear(&map) {
        return Err(Error::Internal("splitting is not a comodule algebra map".into()));
    }
    Ok(Splitting::Split { map, gauge: t })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::group_hopf_algebra;
    use crate::comodule::{check_crossed_system, HopfCrossedCondition};
    use crate::corpus;
    use crate::group::GroupTable;
    use crate::ScalarField;

    fn f3() -> ScalarField {
        ScalarField::prime(3).unwrap()
    }

    fn dual_numbers(field: ScalarField) -> AugmentedAlgebra {
        let b = corpus::truncated_polynomials(2, field);
        let eps = LinearMap::from_fn(field, 2, 1, |i| if i == 0 { SVec::unit(0, field) } else { SVec::new() });
        AugmentedAlgebra::new(b, eps).unwrap()
    }

    fn scalar_cochain(field: ScalarField, table: &[[i64; 3]; 3]) -> LinearMap {
        LinearMap::from_fn(field, 9, 1, |k| SVec::term(0, field.int(table[k / 3][k % 3])))
    }

    const CARRY: [[i64; 3]; 3] = [[0, 0, 0], [0, 0, 1], [0, 1, 1]];

    #[test]
    fn zero_cocycle_gives_smash_product() {
        let field = f3();
        let h = group_hopf_algebra(&GroupTable::cyclic(3), field);
        let base = dual_numbers(field);
        let m = LeftModule::trivial(&h, 1);
        let s = crossed_system_from_cocycle(&m, &LinearMap::zero(field, 9, 1), &base).unwrap();
        assert_eq!(s.sigma, crate::comodule::CrossedSystem::smash(h.clone(), base.algebra.clone(), s.measuring.clone()).unwrap().sigma);
        let e = AugmentedCleftExtension::from_crossed_product(&s, &base).unwrap();
        let split = split_extension(&e).unwrap();
        match split {
            Splitting::Split { map, .. } => {
                let expect = LinearMap::from_fn(field, 3, 6, |x| SVec::unit(x, field));
                assert_eq!(map, expect);
            }
            Splitting::Obstruction { .. } => panic!("smash product must split"),
        }
    }

    #[test]
    fn carry_cocycle_is_obstructed() {
        let field = f3();
        let h = group_hopf_algebra(&GroupTable::cyclic(3), field);
        let base = dual_numbers(field);
        let m = LeftModule::trivial(&h, 1);
        let s = scalar_cochain(field, &CARRY);
        let system = crossed_system_from_cocycle(&m, &s, &base).unwrap();
        assert!(check_crossed_system(&system).passed());
        let e = AugmentedCleftExtension::from_crossed_product(&system, &base).unwrap();
        let c = classify_cleft_extension(&e).unwrap();
        assert_eq!(c.module.action, m.action);
        assert_eq!(c.cocycle, s);
        assert_eq!(c.class, c.hh2.decide(&s).unwrap());
        assert!(!c.class.is_zero());
        match split_extension(&e).unwrap() {
            Splitting::Obstruction { class } => assert_eq!(class, c.class),
            Splitting::Split { .. } => panic!("nonzero class cannot split"),
        }
    }

    #[test]
    fn non_cocycle_fails_only_at_cocycle_condition() {
        let field = f3();
        let h = group_hopf_algebra(&GroupTable::cyclic(3), field);
        let base = dual_numbers(field);
        let m = LeftModule::trivial(&h, 1);
        let s = scalar_cochain(field, &[[0, 0, 0], [0, 1, 0], [0, 0, 0]]);
        assert!(matches!(crossed_system_from_cocycle(&m, &s, &base), Err(Error::CocycleViolation(_))));
        let system = crossed_system_from_data(&m, &s, &base).unwrap();
        let r = check_crossed_system(&system);
        assert!(!r.passed());
        assert!(r.violations.iter().all(|(c, _)| *c == HopfCrossedCondition::Cocycle));
    }

    #[test]
    fn broken_action_fails_twisted_module_law() {
        let field = f3();
        let h = group_hopf_algebra(&GroupTable::cyclic(3), field);
        let base = dual_numbers(field);
        // g ▷ x = 2x is not an action of ℤ/3 over 𝔽₃ (2³ = 2)
        let action = LinearMap::from_fn(field, 3, 1, |g| SVec::term(0, field.int([1, 2, 1][g])));
        let m = LeftModule::new(h, 1, action).unwrap();
        assert!(!m.is_module());
        let system = crossed_system_from_data(&m, &LinearMap::zero(field, 9, 1), &base).unwrap();
        assert!(check_crossed_system(&system).fails(HopfCrossedCondition::TwistedModule));
    }

    #[test]
    fn coboundary_gives_zero_class_and_splits() {
        let field = f3();
        let h = group_hopf_algebra(&GroupTable::cyclic(3), field);
        let base = dual_numbers(field);
        let m = LeftModule::trivial(&h, 1);
        let t = LinearMap::from_fn(field, 3, 1, |g| SVec::term(0, field.int([0, 1, 0][g])));
        let s = coboundary1(&m, &t);
        assert!(!s.is_zero());
        let system = crossed_system_from_cocycle(&m, &s, &base).unwrap();
        let e = AugmentedCleftExtension::from_crossed_product(&system, &base).unwrap();
        assert!(classify_cleft_extension(&e).unwrap().class.is_zero());
        let split = split_extension(&e).unwrap();
        let Splitting::Split { map, .. } = split else { panic!("coboundary must split") };
        assert!(h.algebra.is_algebra_map(&e.algebra.algebra, &map));
        for x in 0..3 {
            assert_eq!(e.augmentation.apply(map.column(x)), SVec::unit(0, field));
        }
    }

    #[test]
    fn gauge_iso_between_cohomologous_cocycles() {
        let field = f3();
        let h = group_hopf_algebra(&GroupTable::cyclic(3), field);
        let base = dual_numbers(field);
        let m = LeftModule::trivial(&h, 1);
        let s = scalar_cochain(field, &CARRY);
        let t = LinearMap::from_fn(field, 3, 1, |g| SVec::term(0, field.int([0, 1, 0][g])));
        let s2 = s.sub(&coboundary1(&m, &t));
        let src = crossed_system_from_cocycle(&m, &s, &base).unwrap();
        let dst = crossed_system_from_cocycle(&m, &s2, &base).unwrap();
        let f = gauge_iso(&t, &base, &src, &dst).unwrap();
        assert!(f.is_bijective());
        let r = hh2(&m).unwrap();
        assert_eq!(r.decide(&s), r.decide(&s2));
        // the same t between the original pair fails
        assert!(matches!(gauge_iso(&t, &base, &src, &src), Err(Error::NotAlgebraMap(_))));
        let id = gauge_iso(&LinearMap::zero(field, 3, 1), &base, &src, &src).unwrap();
        assert_eq!(id, LinearMap::identity(field, 6));
    }

    #[test]
    fn classes_match_gauge_equivalence_exhaustively() {
        let field = f3();
        let h = group_hopf_algebra(&GroupTable::cyclic(3), field);
        let base = dual_numbers(field);
        let m = LeftModule::trivial(&h, 1);
        let r = hh2(&m).unwrap();
        let mut cocycles = Vec::new();
        for code in 0..81usize {
            let v = [code % 3, (code / 3) % 3, (code / 9) % 3, code / 27];
            let table = [[0, 0, 0], [0, v[0] as i64, v[1] as i64], [0, v[2] as i64, v[3] as i64]];
            let s = scalar_cochain(field, &table);
            if coboundary2(&m, &s).is_zero() {
                cocycles.push(crossed_system_from_cocycle(&m, &s, &base).unwrap());
            }
        }
        assert_eq!(cocycles.len(), 9);
        let gauges: Vec<LinearMap> = (0..9)
            .map(|c| LinearMap::from_fn(field, 3, 1, |g| SVec::term(0, field.int([0, (c % 3) as i64, (c / 3) as i64][g]))))
            .collect();
        let mut classes = alloc::collections::BTreeSet::new();
        for a in &cocycles {
            let sa = cocycle_of(a, &base);
            classes.insert(alloc::format!("{:?}", r.decide(&sa).unwrap()));
            for b in &cocycles {
                let same_class = r.decide(&sa) == r.decide(&cocycle_of(b, &base));
                let gauged = gauges.iter().any(|t| gauge_iso(t, &base, a, b).is_ok());
                assert_eq!(same_class, gauged);
            }
        }
        assert_eq!(classes.len(), 3usize.pow(r.dimension as u32));
    }

    fn cocycle_of(s: &CrossedSystem, base: &AugmentedAlgebra) -> LinearMap {
        let field = base.field();
        LinearMap::from_fn(field, 9, 1, |k| base.split(s.sigma.column(k)).1)
    }

    #[test]
    fn non_square_zero_base_is_rejected() {
        let q = ScalarField::Rationals;
        let b = corpus::truncated_polynomials(3, q);
        let eps = LinearMap::from_fn(q, 3, 1, |i| if i == 0 { SVec::unit(0, q) } else { SVec::new() });
        let base = AugmentedAlgebra::new(b, eps).unwrap();
        assert!(!base.square_zero);
        let h = group_hopf_algebra(&GroupTable::cyclic(2), q);
        let m = LeftModule::trivial(&h, 2);
        assert_eq!(
            crossed_system_from_cocycle(&m, &LinearMap::zero(q, 4, 2), &base).unwrap_err(),
            Error::NotSquareZero
        );
    }
}
