//! Algebras graded by a finite group: grading checks, strong grading through the
//! Morita context of each pair of components, and group crossed products.

mod crossed;

pub use crossed::{
    check_group_crossed_system, group_crossed_product, recognize_group_crossed_product, unit_search,
    CrossedCondition,
    GroupCrossedSystem, Recognition, RecognizedCrossedProduct, SystemReport,
};

use alloc::string::String;
use alloc::vec::Vec;

use crate::algebra::{Algebra, RelativeTensor};
use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::linalg::{LinearMap, SVec, Subspace};
use crate::search::{search_family, AbsenceProof, SearchConfig, SearchOutcome};

/// An algebra whose basis vectors are homogeneous, `degree[i]` indexing the group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedAlgebra {
    pub algebra: Algebra,
    pub group: GroupTable,
    pub degree: Vec<usize>,
}

impl GradedAlgebra {
    pub fn new(algebra: Algebra, group: GroupTable, degree: Vec<usize>) -> Result<Self> {
        if degree.len() != algebra.dim() {
            return Err(Error::ShapeMismatch("one degree per basis vector".into()));
        }
        if degree.iter().any(|&g| g >= group.order()) {
            return Err(Error::InvalidGrading("degree outside the group".into()));
        }
        Ok(GradedAlgebra {
            algebra,
            group,
            degree,
        })
    }

    /// `kΓ` graded by `deg g = g`.
    pub fn group_algebra(group: &GroupTable, field: crate::ScalarField) -> Self {
        let h = crate::algebra::group_hopf_algebra(group, field);
        GradedAlgebra::new(h.algebra, group.clone(), (0..group.order()).collect()).expect("shapes")
    }

    pub fn component_indices(&self, g: usize) -> Vec<usize> {
        (0..self.degree.len()).filter(|&i| self.degree[i] == g).collect()
    }

    pub fn component(&self, g: usize) -> Subspace {
        let field = self.algebra.field();
        Subspace::span(
            field,
            self.algebra.dim(),
            self.component_indices(g).into_iter().map(|i| SVec::unit(i, field)),
        )
    }

    /// The neutral component `B = A₁` as an algebra on its homogeneous basis vectors.
    pub fn base_algebra(&self) -> Result<Algebra> {
        let idx = self.component_indices(self.group.identity());
        let labels: Vec<String> = idx.iter().map(|&i| self.algebra.labels()[i].clone()).collect();
        self.algebra.subalgebra(&self.component(self.group.identity()), labels)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GradingViolation {
    UnitOutsideNeutral,
    /// `e_left · e_right` leaves the component of degree `deg(left)·deg(right)`.
    Product { left: usize, right: usize },
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GradingReport {
    pub violations: Vec<GradingViolation>,
}

impl GradingReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn check_grading(a: &GradedAlgebra) -> GradingReport {
    let mut report = GradingReport::default();
    let e = a.group.identity();
    if a.algebra.unit().iter().any(|(i, _)| a.degree[i] != e) {
        report.violations.push(GradingViolation::UnitOutsideNeutral);
    }
    let d = a.algebra.dim();
    'outer: for i in 0..d {
        for j in 0..d {
            let gh = a.group.mul(a.degree[i], a.degree[j]);
            if a.algebra.mul_basis(i, j).iter().any(|(k, _)| a.degree[k] != gh) {
                report.violations.push(GradingViolation::Product { left: i, right: j });
                if report.violations.len() >= crate::algebra::MAX_VIOLATIONS {
                    break 'outer;
                }
            }
        }
    }
    report
}

fn require_graded(a: &GradedAlgebra) -> Result<()> {
    let report = check_grading(a);
    match report.violations.first() {
        None => Ok(()),
        Some(v) => Err(Error::InvalidGrading(alloc::format!("{v:?}"))),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrongGrading {
    pub strongly_graded: bool,
    /// `surjective[g][h]` records `A_g A_h = A_{gh}`.
    pub surjective: Vec<Vec<bool>>,
}

pub fn is_strongly_graded(a: &GradedAlgebra) -> Result<StrongGrading> {
    require_graded(a)?;
    let n = a.group.order();
    let comps: Vec<Subspace> = (0..n).map(|g| a.component(g)).collect();
    let surjective: Vec<Vec<bool>> = (0..n)
        .map(|g| {
            (0..n)
                .map(|h| {
                    let span = a.algebra.span_products(&comps[g], &comps[h]);
                    span.dim() == comps[a.group.mul(g, h)].dim()
                })
                .collect()
        })
        .collect();
    let strongly_graded = surjective.iter().flatten().all(|&s| s);
    Ok(StrongGrading {
        strongly_graded,
        surjective,
    })
}

/// `A_g ⊗_B A_h` with `B = A₁`.
pub fn component_tensor(a: &GradedAlgebra, g: usize, h: usize) -> Result<RelativeTensor> {
    let base = a.component(a.group.identity());
    a.algebra.relative_tensor(&a.component(g), &base, &a.component(h))
}

/// `μ_{g,h}: A_g ⊗_B A_h → A_{gh}` in the coordinates of `A_{gh}`.
pub fn product_map(a: &GradedAlgebra, g: usize, h: usize) -> Result<LinearMap> {
    let t = component_tensor(a, g, h)?;
    let target = a.component(a.group.mul(g, h));
    let field = a.algebra.field();
    Ok(t.induced(field, target.dim(), |m, n| {
        SVec::from_dense(&target.coordinates(&a.algebra.mul(m, n)).expect("graded product"))
    }))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MoritaReport {
    pub g: usize,
    pub g_inv: usize,
    /// `μ_{g,g⁻¹}: A_g ⊗_B A_{g⁻¹} → B`.
    pub forward: LinearMap,
    /// `μ_{g⁻¹,g}: A_{g⁻¹} ⊗_B A_g → B`.
    pub backward: LinearMap,
    pub forward_surjective: bool,
    pub backward_surjective: bool,
    pub forward_bijective: bool,
    pub backward_bijective: bool,
}

impl MoritaReport {
    pub fn strict(&self) -> bool {
        self.forward_surjective && self.backward_surjective
    }
}

pub fn morita_context(a: &GradedAlgebra, g: usize) -> Result<MoritaReport> {
    require_graded(a)?;
    let g_inv = a.group.inv(g);
    let forward = product_map(a, g, g_inv)?;
    let backward = product_map(a, g_inv, g)?;
    let (fr, br) = (forward.rank(), backward.rank());
    let report = MoritaReport {
        g,
        g_inv,
        forward_surjective: fr == forward.codomain(),
        backward_surjective: br == backward.codomain(),
        forward_bijective: fr == forward.codomain() && fr == forward.domain(),
        backward_bijective: br == backward.codomain() && br == backward.domain(),
        forward,
        backward,
    };
    if report.strict() && !(report.forward_bijective && report.backward_bijective) {
        return Err(Error::Internal("strict Morita context with non-bijective product".into()));
    }
    Ok(report)
}

/// For each `g`, a search for `v ∈ A_g` with `B → A_g, b ↦ bv` bijective.
pub fn free_rank_one_search(
    a: &GradedAlgebra,
    config: &SearchConfig,
) -> Result<Vec<SearchOutcome<SVec>>> {
    require_graded(a)?;
    let field = a.algebra.field();
    let base = a.component(a.group.identity());
    let mut out = Vec::new();
    for g in 0..a.group.order() {
        let idx = a.component_indices(g);
        if idx.len() != base.dim() {
            out.push(SearchOutcome::ProvedAbsent {
                proof: AbsenceProof::Exhaustive,
                tried: 0,
            });
            continue;
        }
        let comp = a.component(g);
        let outcome = search_family(field, idx.len(), config, Some(base.dim()), |t| {
            let mut v = SVec::new();
            for (c, &i) in t.iter().zip(&idx) {
                v.add_term(i, c);
            }
            let cols = base
                .basis()
                .iter()
                .map(|b| SVec::from_dense(&comp.coordinates(&a.algebra.mul(b, &v)).expect("graded")))
                .collect();
            let map = LinearMap::from_columns(field, comp.dim(), cols).expect("shapes");
            map.is_bijective().then_some(v)
        });
        out.push(outcome);
    }
    Ok(out)
}
