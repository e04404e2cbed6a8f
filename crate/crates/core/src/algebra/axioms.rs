use alloc::vec::Vec;
use core::fmt;

use super::{koszul_sign, swap_map, tensor_square_mul, Algebra, Bialgebra, Coalgebra, Hopf};
use super::{Presentation, StructureKind};
use crate::error::Result;
use crate::linalg::{LinearMap, SVec};

pub const MAX_VIOLATIONS: usize = 10;

/// The identity a violation refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Identity {
    Associativity,
    LeftUnit,
    RightUnit,
    Coassociativity,
    LeftCounit,
    RightCounit,
    CoproductMultiplicative,
    CoproductUnital,
    CounitMultiplicative,
    CounitUnital,
    LeftAntipode,
    RightAntipode,
    ParityProduct,
    ParityUnit,
    ParityCoproduct,
    ParityCounit,
    ParityAntipode,
    AntipodeAntiMultiplicative,
    AntipodeAntiComultiplicative,
}

impl Identity {
    pub fn name(self) -> &'static str {
        match self {
            Identity::Associativity => "associativity",
            Identity::LeftUnit => "left unit law",
            Identity::RightUnit => "right unit law",
            Identity::Coassociativity => "coassociativity",
            Identity::LeftCounit => "left counit law",
            Identity::RightCounit => "right counit law",
            Identity::CoproductMultiplicative => "coproduct multiplicative",
            Identity::CoproductUnital => "coproduct unital",
            Identity::CounitMultiplicative => "counit multiplicative",
            Identity::CounitUnital => "counit unital",
            Identity::LeftAntipode => "left antipode law",
            Identity::RightAntipode => "right antipode law",
            Identity::ParityProduct => "product preserves parity",
            Identity::ParityUnit => "unit is even",
            Identity::ParityCoproduct => "coproduct preserves parity",
            Identity::ParityCounit => "counit vanishes on odd part",
            Identity::ParityAntipode => "antipode preserves parity",
            Identity::AntipodeAntiMultiplicative => "antipode anti-multiplicative",
            Identity::AntipodeAntiComultiplicative => "antipode anti-comultiplicative",
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A failed identity with the basis indices that witness it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Violation {
    pub identity: Identity,
    pub witness: Vec<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub violations: Vec<Violation>,
    /// Checking stopped early after [`MAX_VIOLATIONS`] failures.
    pub truncated: bool,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn first(&self, identity: Identity) -> Option<&Violation> {
        self.violations.iter().find(|v| v.identity == identity)
    }

    fn full(&self) -> bool {
        self.truncated
    }

    fn record(&mut self, identity: Identity, witness: &[usize]) {
        if self.truncated {
            return;
        }
        self.violations.push(Violation {
            identity,
            witness: witness.to_vec(),
        });
        if self.violations.len() >= MAX_VIOLATIONS {
            self.truncated = true;
        }
    }
}

/// Checks the identities of `kind` on the blocks of `p`.
pub fn check_axioms(kind: StructureKind, p: &Presentation) -> Result<AxiomReport> {
    let parity = p.parity.as_deref();
    Ok(match kind {
        StructureKind::Algebra => check_algebra(&p.algebra()?, parity),
        StructureKind::Coalgebra => check_coalgebra(&p.coalgebra()?, parity),
        StructureKind::Bialgebra => check_bialgebra(&p.bialgebra()?, parity),
        StructureKind::Hopf => check_hopf(&p.hopf()?, parity),
    })
}

pub fn check_algebra(a: &Algebra, parity: Option<&[u8]>) -> AxiomReport {
    let mut r = AxiomReport::default();
    algebra_identities(a, parity, &mut r);
    r
}

pub fn check_coalgebra(c: &Coalgebra, parity: Option<&[u8]>) -> AxiomReport {
    let mut r = AxiomReport::default();
    coalgebra_identities(c, parity, &mut r);
    r
}

pub fn check_bialgebra(b: &Bialgebra, parity: Option<&[u8]>) -> AxiomReport {
    let mut r = AxiomReport::default();
    algebra_identities(&b.algebra, parity, &mut r);
    coalgebra_identities(&b.coalgebra, parity, &mut r);
    compatibility(&b.algebra, &b.coalgebra, parity, &mut r);
    r
}

/// Full Hopf check; with a parity vector the super antipode identities are added.
pub fn check_hopf(h: &Hopf, parity: Option<&[u8]>) -> AxiomReport {
    let mut r = AxiomReport::default();
    algebra_identities(&h.algebra, parity, &mut r);
    coalgebra_identities(&h.coalgebra, parity, &mut r);
    compatibility(&h.algebra, &h.coalgebra, parity, &mut r);
    antipode_identities(h, parity, &mut r);
    r
}

/// Short form used by the other modules.
pub fn check_structure(h: &Hopf, parity: Option<&[u8]>) -> AxiomReport {
    check_hopf(h, parity)
}

fn homogeneous(v: &SVec, parity: &[u8], expected: u8) -> bool {
    v.iter().all(|(i, _)| parity[i] == expected)
}

fn algebra_identities(a: &Algebra, parity: Option<&[u8]>, r: &mut AxiomReport) {
    let d = a.dim();
    if let Some(p) = parity {
        if !homogeneous(a.unit(), p, 0) {
            r.record(Identity::ParityUnit, &[]);
        }
        for i in 0..d {
            for j in 0..d {
                if !homogeneous(a.mul_basis(i, j), p, (p[i] + p[j]) % 2) {
                    r.record(Identity::ParityProduct, &[i, j]);
                }
            }
        }
    }
    for i in 0..d {
        let e = a.basis(i);
        if a.mul(a.unit(), &e) != e {
            r.record(Identity::LeftUnit, &[i]);
        }
        if a.mul(&e, a.unit()) != e {
            r.record(Identity::RightUnit, &[i]);
        }
    }
    for i in 0..d {
        for j in 0..d {
            let ij = a.mul_basis(i, j);
            for l in 0..d {
                if r.full() {
                    return;
                }
                let left = a.mul(ij, &a.basis(l));
                let right = a.mul(&a.basis(i), a.mul_basis(j, l));
                if left != right {
                    r.record(Identity::Associativity, &[i, j, l]);
                }
            }
        }
    }
}

fn coalgebra_identities(c: &Coalgebra, parity: Option<&[u8]>, r: &mut AxiomReport) {
    let d = c.dim();
    let field = c.field();
    if let Some(p) = parity {
        for i in 0..d {
            let ok = c
                .comul_basis(i)
                .iter()
                .all(|(k, _)| (p[k / d] + p[k % d]) % 2 == p[i]);
            if !ok {
                r.record(Identity::ParityCoproduct, &[i]);
            }
            if p[i] == 1 && !c.counit_basis(i).is_zero() {
                r.record(Identity::ParityCounit, &[i]);
            }
        }
    }
    let id = LinearMap::identity(field, d);
    let left = c.coproduct().tensor(&id);
    let right = id.tensor(c.coproduct());
    let eps_id = c.counit().tensor(&id);
    let id_eps = id.tensor(c.counit());
    for i in 0..d {
        if r.full() {
            return;
        }
        let delta = c.comul_basis(i);
        if left.apply(delta) != right.apply(delta) {
            r.record(Identity::Coassociativity, &[i]);
        }
        let e = SVec::unit(i, field);
        if eps_id.apply(delta) != e {
            r.record(Identity::LeftCounit, &[i]);
        }
        if id_eps.apply(delta) != e {
            r.record(Identity::RightCounit, &[i]);
        }
    }
}

fn compatibility(a: &Algebra, c: &Coalgebra, parity: Option<&[u8]>, r: &mut AxiomReport) {
    let d = a.dim();
    if c.comul(a.unit()) != a.unit().tensor(a.unit(), d) {
        r.record(Identity::CoproductUnital, &[]);
    }
    if !c.counit_of(a.unit()).is_one() {
        r.record(Identity::CounitUnital, &[]);
    }
    for i in 0..d {
        for j in 0..d {
            if r.full() {
                return;
            }
            let prod = a.mul_basis(i, j);
            let lhs = c.comul(prod);
            let rhs = tensor_square_mul(a, c.comul_basis(i), c.comul_basis(j), parity);
            if lhs != rhs {
                r.record(Identity::CoproductMultiplicative, &[i, j]);
            }
            if c.counit_of(prod) != &c.counit_basis(i) * &c.counit_basis(j) {
                r.record(Identity::CounitMultiplicative, &[i, j]);
            }
        }
    }
}

fn antipode_identities(h: &Hopf, parity: Option<&[u8]>, r: &mut AxiomReport) {
    let d = h.dim();
    let field = h.field();
    let s = &h.antipode;
    if let Some(p) = parity {
        for i in 0..d {
            if !homogeneous(s.column(i), p, p[i]) {
                r.record(Identity::ParityAntipode, &[i]);
            }
        }
    }
    for i in 0..d {
        if r.full() {
            return;
        }
        let target = h.one().scale(&h.counit_basis(i));
        let mut left = SVec::new();
        let mut right = SVec::new();
        for (k, c) in h.coalgebra.comul_basis(i).iter() {
            let (x, y) = (k / d, k % d);
            left.axpy(c, &h.mul(s.column(x), &SVec::unit(y, field)));
            right.axpy(c, &h.mul(&SVec::unit(x, field), s.column(y)));
        }
        if left != target {
            r.record(Identity::LeftAntipode, &[i]);
        }
        if right != target {
            r.record(Identity::RightAntipode, &[i]);
        }
    }
    if let Some(p) = parity {
        let swap = swap_map(field, d, d, Some(p), Some(p));
        let ss = s.tensor(s);
        for i in 0..d {
            for j in 0..d {
                if r.full() {
                    return;
                }
                let lhs = s.apply(h.algebra.mul_basis(i, j));
                let rhs = h
                    .mul(s.column(j), s.column(i))
                    .scale(&koszul_sign(field, p[i], p[j]));
                if lhs != rhs {
                    r.record(Identity::AntipodeAntiMultiplicative, &[i, j]);
                }
            }
            let lhs = h.coalgebra.comul(s.column(i));
            let rhs = swap.apply(&ss.apply(h.coalgebra.comul_basis(i)));
            if lhs != rhs {
                r.record(Identity::AntipodeAntiComultiplicative, &[i]);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::field::ScalarField;
    use crate::group::GroupTable;

    #[test]
    fn group_algebra_passes() {
        let h = crate::algebra::group_hopf_algebra(&GroupTable::cyclic(2), ScalarField::Rationals);
        assert!(check_hopf(&h, None).passed());
    }

    #[test]
    fn broken_counit_is_reported_at_g() {
        let h = crate::algebra::group_hopf_algebra(&GroupTable::cyclic(2), ScalarField::Rationals);
        let mut p = Presentation::from_hopf(&h);
        let field = ScalarField::Rationals;
        p.counit = Some(LinearMap::from_fn(field, 2, 1, |i| {
            if i == 0 {
                SVec::unit(0, field)
            } else {
                SVec::new()
            }
        }));
        let report = check_axioms(StructureKind::Hopf, &p).unwrap();
        assert!(!report.passed());
        let v = report.first(Identity::LeftCounit).unwrap();
        assert_eq!(v.witness, alloc::vec![1]);
    }

    #[test]
    fn sweedler_passes_over_q_and_f5() {
        for field in [ScalarField::Rationals, ScalarField::prime(5).unwrap()] {
            let h = corpus::sweedler(field);
            assert!(check_hopf(&h, None).passed());
        }
    }

    #[test]
    fn garbage_is_truncated() {
        let field = ScalarField::Rationals;
        let d = 4;
        let product = LinearMap::from_fn(field, d * d, d, |k| SVec::unit(k / d, field).add(&SVec::unit(k % d, field)));
        let a = Algebra::new(field, corpus::labels(&["a", "b", "c", "d"]), product, SVec::unit(0, field)).unwrap();
        let r = check_algebra(&a, None);
        assert_eq!(r.violations.len(), MAX_VIOLATIONS);
        assert!(r.truncated);
    }
}
