use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec::Vec;

use super::{require_graded, GradedAlgebra};
use crate::algebra::{Algebra, MAX_VIOLATIONS};
use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::linalg::{LinearMap, SVec};
use crate::search::{search_family, AbsenceProof, SearchConfig, SearchOutcome, Stage};

/// Failed conditions, each with the indices that witness it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SystemReport<C> {
    pub violations: Vec<(C, Vec<usize>)>,
}

impl<C: PartialEq> SystemReport<C> {
    pub fn new() -> Self {
        SystemReport {
            violations: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn fails(&self, c: C) -> bool {
        self.violations.iter().any(|(v, _)| *v == c)
    }

    pub fn full(&self) -> bool {
        self.violations.len() >= MAX_VIOLATIONS
    }

    pub fn record(&mut self, c: C, witness: &[usize]) {
        if !self.full() {
            self.violations.push((c, witness.to_vec()));
        }
    }
}

impl<C: PartialEq> Default for SystemReport<C> {
    fn default() -> Self {
        Self::new()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CrossedCondition {
    ActionNotAlgebraMap,
    /// `1⇀b = b`, `σ(g,1) = 1 = σ(1,g)`.
    Normalization,
    /// `[g⇀(h⇀b)]σ(g,h) = σ(g,h)(gh⇀b)`.
    TwistedModule,
    /// `[g⇀σ(h,ℓ)]σ(g,hℓ) = σ(g,h)σ(gh,ℓ)`.
    Cocycle,
    ActionNotBijective,
}

/// An action of `Γ` on `B` by algebra endomorphisms twisted by `σ: Γ×Γ → B^×`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupCrossedSystem {
    pub base: Algebra,
    pub group: GroupTable,
    pub action: Vec<LinearMap>,
    pub sigma: Vec<Vec<SVec>>,
    sigma_inv: Vec<Vec<SVec>>,
}

impl GroupCrossedSystem {
    /// Checks shapes and that every `σ(g,h)` is a unit of `B`.
    pub fn new(
        base: Algebra,
        group: GroupTable,
        action: Vec<LinearMap>,
        sigma: Vec<Vec<SVec>>,
    ) -> Result<Self> {
        let n = group.order();
        let d = base.dim();
        if action.len() != n || action.iter().any(|a| a.domain() != d || a.codomain() != d) {
            return Err(Error::ShapeMismatch("one B → B map per group element".into()));
        }
        if sigma.len() != n || sigma.iter().any(|r| r.len() != n) {
            return Err(Error::ShapeMismatch("σ must be |Γ| x |Γ|".into()));
        }
        let mut sigma_inv = Vec::with_capacity(n);
        for g in 0..n {
            let mut row = Vec::with_capacity(n);
            for h in 0..n {
                let inv = base.inverse(&sigma[g][h]).ok_or_else(|| {
                    Error::CrossedSystemViolation(alloc::format!("σ({g}, {h}) is not a unit"))
                })?;
                row.push(inv);
            }
            sigma_inv.push(row);
        }
        Ok(GroupCrossedSystem {
            base,
            group,
            action,
            sigma,
            sigma_inv,
        })
    }

    pub fn trivial(base: Algebra, group: GroupTable) -> Self {
        let n = group.order();
        let id = LinearMap::identity(base.field(), base.dim());
        let one = base.unit().clone();
        let sigma = alloc::vec![alloc::vec![one; n]; n];
        Self::new(base, group, alloc::vec![id; n], sigma).expect("trivial system")
    }

    pub fn sigma_inv(&self, g: usize, h: usize) -> &SVec {
        &self.sigma_inv[g][h]
    }

    pub fn act(&self, g: usize, b: &SVec) -> SVec {
        self.action[g].apply(b)
    }
}

pub fn check_group_crossed_system(s: &GroupCrossedSystem) -> SystemReport<CrossedCondition> {
    let mut r = SystemReport::new();
    let n = s.group.order();
    let d = s.base.dim();
    let field = s.base.field();
    let b = &s.base;
    let one = b.unit();
    for g in 0..n {
        if b.algebra_map_defect(b, &s.action[g]).is_some() {
            r.record(CrossedCondition::ActionNotAlgebraMap, &[g]);
        }
        if !s.action[g].is_bijective() {
            r.record(CrossedCondition::ActionNotBijective, &[g]);
        }
        if &s.sigma[g][0] != one || &s.sigma[0][g] != one {
            r.record(CrossedCondition::Normalization, &[g]);
        }
    }
    if s.action[0] != LinearMap::identity(field, d) {
        r.record(CrossedCondition::Normalization, &[0]);
    }
    for g in 0..n {
        for h in 0..n {
            let gh = s.group.mul(g, h);
            let sgh = &s.sigma[g][h];
            for i in 0..d {
                if r.full() {
                    return r;
                }
                let e = SVec::unit(i, field);
                let lhs = b.mul(&s.act(g, &s.act(h, &e)), sgh);
                let rhs = b.mul(sgh, &s.act(gh, &e));
                if lhs != rhs {
                    r.record(CrossedCondition::TwistedModule, &[g, h, i]);
                }
            }
            for l in 0..n {
                if r.full() {
                    return r;
                }
                let lhs = b.mul(&s.act(g, &s.sigma[h][l]), &s.sigma[g][s.group.mul(h, l)]);
                let rhs = b.mul(sgh, &s.sigma[gh][l]);
                if lhs != rhs {
                    r.record(CrossedCondition::Cocycle, &[g, h, l]);
                }
            }
        }
    }
    r
}

/// `B ⋊_σ Γ` on `b_i u_g` (index `i * |Γ| + g`),
/// `(b u_g)(c u_h) = b(g⇀c)σ(g,h) u_{gh}`.
pub fn group_crossed_product(s: &GroupCrossedSystem) -> Result<GradedAlgebra> {
    let report = check_group_crossed_system(s);
    if let Some((c, w)) = report.violations.first() {
        return Err(Error::CrossedSystemViolation(alloc::format!("{c:?} at {w:?}")));
    }
    let n = s.group.order();
    let d = s.base.dim();
    let field = s.base.field();
    let mut labels: Vec<String> = Vec::with_capacity(n * d);
    for bl in s.base.labels() {
        for gl in s.group.labels() {
            labels.push(alloc::format!("{bl}·u[{gl}]"));
        }
    }
    let place = |v: &SVec, g: usize| v.remap(|j| Some(j * n + g));
    let unit = place(s.base.unit(), 0);
    let algebra = Algebra::from_table(field, labels, unit, |x, y| {
        let (i, g) = (x / n, x % n);
        let (j, h) = (y / n, y % n);
        let cj = s.act(g, &SVec::unit(j, field));
        let prod = s.base.mul(&s.base.mul(&SVec::unit(i, field), &cj), &s.sigma[g][h]);
        place(&prod, s.group.mul(g, h))
    })?;
    let degree = (0..n * d).map(|x| x % n).collect();
    GradedAlgebra::new(algebra, s.group.clone(), degree)
}

/// For every component, a search for an element invertible in `A`; `u₁ = 1` is fixed.
pub fn unit_search(a: &GradedAlgebra, config: &SearchConfig) -> Result<Vec<SearchOutcome<SVec>>> {
    require_graded(a)?;
    let field = a.algebra.field();
    let dim = a.algebra.dim();
    let mut out = Vec::with_capacity(a.group.order());
    for g in 0..a.group.order() {
        if g == a.group.identity() {
            out.push(SearchOutcome::Found {
                witness: a.algebra.unit().clone(),
                params: Vec::new(),
                stage: Stage::Ladder,
                tried: 0,
            });
            continue;
        }
        let idx = a.component_indices(g);
        if idx.is_empty() {
            out.push(SearchOutcome::ProvedAbsent {
                proof: AbsenceProof::Exhaustive,
                tried: 0,
            });
            continue;
        }
        out.push(search_family(field, idx.len(), config, Some(dim), |t| {
            let mut u = SVec::new();
            for (c, &i) in t.iter().zip(&idx) {
                u.add_term(i, c);
            }
            a.algebra.left_mul(&u).is_bijective().then_some(u)
        }));
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct RecognizedCrossedProduct {
    pub units: Vec<SVec>,
    pub system: GroupCrossedSystem,
    pub crossed: GradedAlgebra,
    /// Grading-preserving algebra isomorphism `A → B ⋊_σ Γ`, identity on `B`.
    pub iso: LinearMap,
}

#[derive(Clone, Debug)]
pub enum Recognition {
    CrossedProduct(Box<RecognizedCrossedProduct>),
    /// Component `component` has no unit: proved, or not found within budget.
    NoUnit {
        component: usize,
        outcome: SearchOutcome<SVec>,
    },
}

impl Recognition {
    pub fn is_crossed_product(&self) -> bool {
        matches!(self, Recognition::CrossedProduct(_))
    }
}

pub fn recognize_group_crossed_product(
    a: &GradedAlgebra,
    config: &SearchConfig,
) -> Result<Recognition> {
    let outcomes = unit_search(a, config)?;
    let mut units = Vec::with_capacity(outcomes.len());
    for (g, outcome) in outcomes.into_iter().enumerate() {
        match outcome {
            SearchOutcome::Found { witness, .. } => units.push(witness),
            other => {
                return Ok(Recognition::NoUnit {
                    component: g,
                    outcome: other,
                })
            }
        }
    }
    let alg = &a.algebra;
    let field = alg.field();
    let n = a.group.order();
    let inverses: Vec<SVec> = units
        .iter()
        .map(|u| alg.inverse(u).ok_or_else(|| Error::Internal("unit lost its inverse".into())))
        .collect::<Result<_>>()?;
    let base_idx = a.component_indices(a.group.identity());
    let mut position = alloc::vec![None; alg.dim()];
    for (k, &i) in base_idx.iter().enumerate() {
        position[i] = Some(k);
    }
    let to_base = |v: &SVec| -> Result<SVec> {
        if v.iter().any(|(i, _)| position[i].is_none()) {
            return Err(Error::Internal("element left the neutral component".into()));
        }
        Ok(v.remap(|i| position[i]))
    };
    let base = a.base_algebra()?;
    let mut action = Vec::with_capacity(n);
    for g in 0..n {
        let cols = base_idx
            .iter()
            .map(|&i| to_base(&alg.mul(&alg.mul(&units[g], &SVec::unit(i, field)), &inverses[g])))
            .collect::<Result<Vec<_>>>()?;
        action.push(LinearMap::from_columns(field, base_idx.len(), cols)?);
    }
    let mut sigma = Vec::with_capacity(n);
    for g in 0..n {
        let mut row = Vec::with_capacity(n);
        for h in 0..n {
            let gh = a.group.mul(g, h);
            row.push(to_base(&alg.mul(&alg.mul(&units[g], &units[h]), &inverses[gh]))?);
        }
        sigma.push(row);
    }
    let system = GroupCrossedSystem::new(base, a.group.clone(), action, sigma)?;
    let crossed = group_crossed_product(&system)?;
    let iso = LinearMap::from_fn(field, alg.dim(), crossed.algebra.dim(), |i| {
        let g = a.degree[i];
        let coeffs = to_base(&alg.mul(&SVec::unit(i, field), &inverses[g])).unwrap_or_default();
        coeffs.remap(|j| Some(j * n + g))
    });
    verify_iso(a, &crossed, &iso, &base_idx)?;
    Ok(Recognition::CrossedProduct(Box::new(RecognizedCrossedProduct {
        units,
        system,
        crossed,
        iso,
    })))
}

fn verify_iso(a: &GradedAlgebra, crossed: &GradedAlgebra, iso: &LinearMap, base_idx: &[usize]) -> Result<()> {
    let n = a.group.order();
    let field = a.algebra.field();
    if !iso.is_bijective() {
        return Err(Error::Internal("recognized map is not bijective".into()));
    }
    if let Some(defect) = a.algebra.algebra_map_defect(&crossed.algebra, iso) {
        return Err(Error::Internal(alloc::format!("recognized map fails {defect:?}")));
    }
    for (k, &i) in base_idx.iter().enumerate() {
        if iso.column(i) != &SVec::unit(k * n, field) {
            return Err(Error::Internal("recognized map is not the identity on B".into()));
        }
    }
    for i in 0..a.algebra.dim() {
        if iso.column(i).iter().any(|(x, _)| crossed.degree[x] != a.degree[i]) {
            return Err(Error::Internal("recognized map does not preserve degree".into()));
        }
    }
    Ok(())
}
