//! One handler per subcommand: load, dispatch to the library, build the report.

use hopfkit_core::algebra::{
    check_axioms, check_coalgebra, check_hopf, compute_antipode, dual_hopf, smash_coproduct, Algebra,
    Coalgebra, Convolution, Hopf, StructureKind,
};
use hopfkit_core::cohomology::{
    classify_cleft_extension, coboundary2, hh2, is_normalized, lift_comodule_algebra_map, split_extension,
    AugmentedCleftExtension, Lift, Splitting,
};
use hopfkit_core::comodule::{
    check_crossed_system, coinvariants, crossed_product, find_section, galois_map, section_to_crossed_system,
    ComoduleAlgebra,
};
use hopfkit_core::graded::{
    check_grading, check_group_crossed_system, group_crossed_product, is_strongly_graded, product_map,
    recognize_group_crossed_product, GradedAlgebra, GradingViolation, Recognition,
};
use hopfkit_core::linalg::{LinearMap, Matrix, SVec};
use hopfkit_core::search::{SearchConfig, SearchOutcome};
use hopfkit_core::superalg::{decompose, duality_pairing, SuperHopf};
use hopfkit_core::{Error as CoreError, Scalar, ScalarField};
use serde_json::{json, Value};

use crate::format::{Document, InputError, InputResult, Kind};
use crate::report::{Report, Verdict};

#[derive(Clone, Copy, Debug, Default)]
pub struct Options {
    pub seed: u64,
    pub budget: Option<usize>,
    pub certify: bool,
}

impl Options {
    pub fn search(&self) -> SearchConfig {
        let config = SearchConfig::default().with_seed(self.seed);
        match self.budget {
            Some(b) => config.with_budget(b),
            None => config,
        }
    }
}

fn computation(command: &str) -> impl Fn(CoreError) -> InputError + '_ {
    move |e| InputError::core(command, e)
}

pub fn scalar_json(c: &Scalar) -> Value {
    match c {
        Scalar::Mod { value, .. } => json!(value),
        Scalar::Rat(_) => {
            let (n, d) = c.to_fraction();
            let num = crate::format::Num::from_big(&n);
            let den = crate::format::Num::from_big(&d);
            json!([num, den])
        }
    }
}

pub fn vector_json(v: &SVec, dim: usize, field: ScalarField) -> Value {
    Value::Array(v.to_dense(dim, field).iter().map(scalar_json).collect())
}

fn search_witnesses<T>(r: Report, o: &SearchOutcome<T>) -> Report {
    match o {
        SearchOutcome::Found { params, stage, tried, .. } => r
            .witness("search_stage", format!("{stage:?}"))
            .witness("search_tried", tried)
            .witness("search_params", params.iter().map(scalar_json).collect::<Vec<_>>()),
        SearchOutcome::ProvedAbsent { proof, tried } => r
            .witness("absence_proof", format!("{proof:?}"))
            .witness("search_tried", tried),
        SearchOutcome::NotFoundWithinBudget { tried } => r.witness("search_tried", tried).exhausted(true),
    }
}

fn ok(name: &str, pass: bool) -> (String, bool) {
    (name.to_string(), pass)
}

/// `ρ_A ∘ f = (f ⊗ id) ∘ Δ` for `f: H → A`.
fn colinear_from_hopf(a: &ComoduleAlgebra, f: &LinearMap) -> bool {
    let id = LinearMap::identity(a.field(), a.hopf.dim());
    let lhs = a.coaction.compose(f);
    let rhs = f.tensor(&id).compose(a.hopf.coalgebra.coproduct());
    matches!((lhs, rhs), (Ok(l), Ok(r)) if l == r)
}

/// `(f ⊗ id) ∘ ρ_S = ρ_T ∘ f` for `f: S → T`.
fn colinear_between(source: &LinearMap, target: &LinearMap, f: &LinearMap, dh: usize) -> bool {
    let id = LinearMap::identity(f.field(), dh);
    let lhs = f.tensor(&id).compose(source);
    let rhs = target.compose(f);
    matches!((lhs, rhs), (Ok(l), Ok(r)) if l == r)
}

fn convolution_inverse_pair(a: &ComoduleAlgebra, f: &LinearMap, g: &LinearMap) -> bool {
    let Ok(conv) = Convolution::new(&a.hopf.coalgebra, &a.algebra) else {
        return false;
    };
    let unit = conv.unit();
    conv.convolve(f, g).is_ok_and(|x| x == unit) && conv.convolve(g, f).is_ok_and(|x| x == unit)
}

fn violations_json(list: &[(String, Vec<usize>)]) -> Value {
    Value::Array(list.iter().map(|(id, w)| json!({"identity": id, "witness": w})).collect())
}

fn require_blocks(doc: &Document, p: &hopfkit_core::algebra::Presentation, kind: StructureKind) -> InputResult<()> {
    let mut need = vec![];
    if kind != StructureKind::Coalgebra {
        need.push(("product", p.product.is_some()));
        need.push(("unit", p.unit.is_some()));
    }
    if kind != StructureKind::Algebra {
        need.push(("coproduct", p.coproduct.is_some()));
        need.push(("counit", p.counit.is_some()));
    }
    if kind == StructureKind::Hopf {
        need.push(("antipode", p.antipode.is_some()));
    }
    match need.iter().find(|(_, present)| !present) {
        Some((name, _)) => Err(InputError::invalid(*name, format!("missing block for {}", doc.name()))),
        None => Ok(()),
    }
}

fn axiom_violations(doc: &Document, kind: StructureKind, parity: bool) -> InputResult<Vec<(String, Vec<usize>)>> {
    let mut p = doc.presentation()?;
    require_blocks(doc, &p, kind)?;
    if !parity {
        p.parity = None;
    }
    let report = check_axioms(kind, &p).map_err(computation("check"))?;
    Ok(report.violations.iter().map(|v| (v.identity.name().to_string(), v.witness.clone())).collect())
}

fn graded_violations(doc: &Document) -> InputResult<Vec<(String, Vec<usize>)>> {
    let mut out = axiom_violations(doc, StructureKind::Algebra, false)?;
    if !out.is_empty() {
        return Ok(out);
    }
    for v in check_grading(&doc.raw_graded()?).violations {
        out.push(match v {
            GradingViolation::UnitOutsideNeutral => ("unit lies in the neutral component".into(), vec![]),
            GradingViolation::Product { left, right } => ("product respects degrees".into(), vec![left, right]),
        });
    }
    Ok(out)
}

pub fn check(doc: &Document, kind: Option<Kind>, input: &str) -> InputResult<Report> {
    let kind = kind.unwrap_or(doc.kind());
    let violations = match kind {
        Kind::Algebra => axiom_violations(doc, StructureKind::Algebra, true)?,
        Kind::Coalgebra => axiom_violations(doc, StructureKind::Coalgebra, true)?,
        Kind::Bialgebra => axiom_violations(doc, StructureKind::Bialgebra, true)?,
        Kind::Hopf => axiom_violations(doc, StructureKind::Hopf, false)?,
        Kind::SuperHopf if doc.kind() == Kind::Exterior => {
            let e = doc.exterior()?;
            let r = check_hopf(&e.hopf.hopf, Some(e.hopf.parity()));
            r.violations.iter().map(|v| (v.identity.name().to_string(), v.witness.clone())).collect()
        }
        Kind::SuperHopf => {
            if doc.file.parity.is_none() {
                return Err(InputError::invalid("parity", "missing"));
            }
            doc.field.require_odd_characteristic().map_err(|e| InputError::core("field", e))?;
            axiom_violations(doc, StructureKind::Hopf, true)?
        }
        Kind::Exterior => {
            let e = doc.exterior()?;
            let r = check_hopf(&e.hopf.hopf, Some(e.hopf.parity()));
            r.violations.iter().map(|v| (v.identity.name().to_string(), v.witness.clone())).collect()
        }
        Kind::Graded => graded_violations(doc)?,
        Kind::ComoduleAlgebra | Kind::AugmentedExtension => {
            let a = doc.raw_comodule_algebra()?;
            let mut out: Vec<(String, Vec<usize>)> =
                a.check().violations.iter().map(|(c, w)| (format!("{c:?}"), w.clone())).collect();
            if kind == Kind::AugmentedExtension {
                let (_, aug, _) = doc.augmented_extension()?;
                let k = hopfkit_core::corpus::ground_field(doc.field);
                if a.algebra.algebra_map_defect(&k, &aug).is_some() {
                    out.push(("augmentation is an algebra map".into(), vec![]));
                }
            }
            out
        }
        Kind::ComoduleCoalgebra => {
            let c = doc.raw_coalgebra()?;
            let mut out: Vec<(String, Vec<usize>)> = check_coalgebra(&c, None)
                .violations
                .iter()
                .map(|v| (v.identity.name().to_string(), v.witness.clone()))
                .collect();
            if out.is_empty() {
                if let Err(e) = doc.comodule_coalgebra() {
                    out.push((e.to_string(), vec![]));
                }
            }
            out
        }
        Kind::GroupCrossedSystem => check_group_crossed_system(&doc.raw_group_crossed_system()?)
            .violations
            .iter()
            .map(|(c, w)| (format!("{c:?}"), w.clone()))
            .collect(),
        Kind::CrossedSystem => check_crossed_system(&doc.raw_crossed_system()?)
            .violations
            .iter()
            .map(|(c, w)| (format!("{c:?}"), w.clone()))
            .collect(),
        Kind::LeftModule => {
            if doc.raw_left_module()?.is_module() {
                vec![]
            } else {
                vec![("unital associative action".into(), vec![])]
            }
        }
        Kind::LiftProblem => {
            let (c, d, varpi, psi) = doc.lift_problem()?;
            let mut out = vec![];
            if !c.algebra.is_algebra_map(&d.algebra, &varpi) {
                out.push(("projection is an algebra map".into(), vec![]));
            }
            if !colinear_between(&c.coaction, &d.coaction, &varpi, c.hopf.dim()) {
                out.push(("projection is colinear".into(), vec![]));
            }
            if !c.hopf.algebra.is_algebra_map(&d.algebra, &psi) {
                out.push(("map is an algebra map".into(), vec![]));
            }
            if !colinear_from_hopf(&d, &psi) {
                out.push(("map is colinear".into(), vec![]));
            }
            out
        }
    };
    let verdict = if violations.is_empty() { Verdict::Pass } else { Verdict::Fail };
    let summary = match violations.first() {
        None => format!("{} satisfies every {} identity", doc.name(), kind.name()),
        Some((id, w)) => format!("{} violation(s); first: {id} at {w:?}", violations.len()),
    };
    Ok(Report::new("check", input, verdict, summary)
        .witness("kind", kind.name())
        .witness("dimension", doc.dim())
        .witness("violations", violations_json(&violations)))
}

pub fn antipode(doc: &Document, opts: &Options, input: &str) -> InputResult<Report> {
    doc.require_kind("antipode", &[Kind::Bialgebra, Kind::Hopf])?;
    let b = doc.bialgebra()?;
    match compute_antipode(&b) {
        Ok(h) => {
            let mut r = Report::new("antipode", input, Verdict::Found, "the identity is convolution-invertible")
                .certificate("antipode", &h.antipode);
            if opts.certify {
                r.certify(|r| {
                    let Some(s) = r.read_certificate("antipode") else { return vec![ok("antipode readable", false)] };
                    let hopf = Hopf::new(b.algebra.clone(), b.coalgebra.clone(), s);
                    vec![ok("Hopf axioms", hopf.is_ok_and(|h| check_hopf(&h, None).passed()))]
                });
            }
            Ok(r)
        }
        Err(CoreError::NoAntipode) => Ok(Report::new("antipode", input, Verdict::NotFound, "the identity has no convolution inverse")
            .error("NoAntipode")),
        Err(e) => Err(InputError::core("antipode", e)),
    }
}

pub fn dual(doc: &Document, opts: &Options, input: &str) -> InputResult<Report> {
    doc.require_kind("dual", &[Kind::Hopf, Kind::SuperHopf, Kind::Exterior])?;
    let (h, parity) = match doc.kind() {
        Kind::Hopf => (doc.hopf()?, None),
        _ => {
            let s = doc.super_hopf()?;
            let p = s.parity().to_vec();
            (s.hopf, Some(p))
        }
    };
    let d = dual_hopf(&h);
    let mut r = Report::new("dual", input, Verdict::Pass, format!("dual of a {}-dimensional Hopf algebra", h.dim()))
        .witness("labels", d.labels())
        .certificate("product", d.algebra.product())
        .certificate("unit", &LinearMap::from_columns(d.field(), d.dim(), vec![d.algebra.unit().clone()]).expect("fits"))
        .certificate("coproduct", d.coalgebra.coproduct())
        .certificate("counit", d.coalgebra.counit())
        .certificate("antipode", &d.antipode);
    if opts.certify {
        r.certify(|r| {
            let get = |k: &str| r.read_certificate(k);
            let (Some(m), Some(u), Some(c), Some(e), Some(s)) =
                (get("product"), get("unit"), get("coproduct"), get("counit"), get("antipode"))
            else {
                return vec![ok("certificates readable", false)];
            };
            let labels = d.labels().to_vec();
            let rebuilt = Algebra::new(h.field(), labels.clone(), m.clone(), u.column(0).clone())
                .and_then(|a| Ok((a, Coalgebra::new(h.field(), labels, c.clone(), e.clone())?)))
                .and_then(|(a, co)| Hopf::new(a, co, s.clone()));
            vec![
                ok("product is the transposed coproduct", m == h.coalgebra.coproduct().transpose()),
                ok("coproduct is the transposed product", c == h.algebra.product().transpose()),
                ok("antipode is the transposed antipode", s == h.antipode.transpose()),
                ok("Hopf axioms", rebuilt.is_ok_and(|d| check_hopf(&d, parity.as_deref()).passed())),
            ]
        });
    }
    Ok(r)
}

fn comodule_input(doc: &Document, command: &str) -> InputResult<ComoduleAlgebra> {
    doc.require_kind(command, &[Kind::ComoduleAlgebra, Kind::Graded, Kind::AugmentedExtension])?;
    doc.comodule_algebra()
}

pub fn coinvariants_cmd(doc: &Document, opts: &Options, input: &str) -> InputResult<Report> {
    let a = comodule_input(doc, "coinvariants")?;
    let b = coinvariants(&a).map_err(computation("coinvariants"))?;
    let inclusion = b.inclusion();
    let mut r = Report::new("coinvariants", input, Verdict::Pass, format!("coinvariant subalgebra of dimension {}", b.dim()))
        .witness("dimension", b.dim())
        .witness("labels", b.algebra.labels())
        .certificate("inclusion", &inclusion);
    if opts.certify {
        r.certify(|r| {
            let Some(inc) = r.read_certificate("inclusion") else { return vec![ok("inclusion readable", false)] };
            let field = a.field();
            let one = a.hopf.one();
            let da = a.algebra.dim();
            let coinvariant = inc.columns().iter().all(|c| a.coact(c) == c.tensor(one, a.hopf.dim()));
            let span = hopfkit_core::linalg::Subspace::span(field, da, inc.columns().iter().cloned());
            let closed = inc
                .columns()
                .iter()
                .all(|x| inc.columns().iter().all(|y| span.contains(&a.algebra.mul(x, y))));
            let all_found = {
                let rho_minus = LinearMap::from_fn(field, da, da * a.hopf.dim(), |i| {
                    a.coact(&SVec::unit(i, field)).sub(&SVec::unit(i, field).tensor(one, a.hopf.dim()))
                });
                hopfkit_core::linalg::Subspace::kernel(&rho_minus).dim() == span.dim()
            };
            vec![
                ok("columns are coinvariant", coinvariant),
                ok("columns are independent", inc.is_injective()),
                ok("closed under products", closed),
                ok("spans all coinvariants", all_found),
            ]
        });
    }
    Ok(r)
}

pub fn galois(doc: &Document, opts: &Options, input: &str) -> InputResult<Report> {
    let a = comodule_input(doc, "galois")?;
    let g = galois_map(&a, None).map_err(computation("galois"))?;
    let verdict = if g.bijective { Verdict::Pass } else { Verdict::Fail };
    let mut r = Report::new(
        "galois",
        input,
        verdict,
        if g.bijective { "the Galois map is bijective" } else { "the Galois map is not bijective" },
    )
    .witness("coinvariants_dimension", g.coinvariants.dim())
    .witness("relative_tensor_dimension", g.tensor.dim())
    .witness("target_dimension", g.beta.codomain())
    .witness("rank", g.beta.rank())
    .certificate("galois_map", &g.beta);
    if g.bijective {
        r = r.certificate("galois_inverse", &g.beta.inverse().map_err(computation("galois"))?);
    }
    if opts.certify {
        r.certify(|r| match (r.read_certificate("galois_map"), r.read_certificate("galois_inverse")) {
            (Some(b), Some(inv)) => vec![ok(
                "inverse is two-sided",
                b.compose(&inv).is_ok_and(|x| x == LinearMap::identity(b.field(), b.codomain()))
                    && inv.compose(&b).is_ok_and(|x| x == LinearMap::identity(b.field(), b.domain())),
            )],
            (Some(b), None) => vec![ok("rank deficit", b.rank() < b.domain().max(b.codomain()))],
            _ => vec![ok("certificates readable", false)],
        });
    }
    Ok(r)
}

pub fn strongly_graded(doc: &Document, input: &str) -> InputResult<Report> {
    doc.require_kind("strongly-graded", &[Kind::Graded])?;
    let g = doc.graded()?;
    let s = is_strongly_graded(&g).map_err(computation("strongly-graded"))?;
    let n = g.group.order();
    let mut maps = Vec::new();
    for x in 0..n {
        for y in 0..n {
            let mu = product_map(&g, x, y).map_err(computation("strongly-graded"))?;
            maps.push(json!({
                "left": g.group.labels()[x],
                "right": g.group.labels()[y],
                "domain": mu.domain(),
                "codomain": mu.codomain(),
                "rank": mu.rank(),
                "bijective": mu.domain() == mu.codomain() && mu.is_bijective(),
                "zero": mu.is_zero(),
            }));
        }
    }
    let verdict = if s.strongly_graded { Verdict::Pass } else { Verdict::Fail };
    let summary = if s.strongly_graded {
        "every A_g A_h equals A_gh".to_string()
    } else {
        let (x, y) = (0..n)
            .flat_map(|x| (0..n).map(move |y| (x, y)))
            .find(|&(x, y)| !s.surjective[x][y])
            .expect("some product is not onto");
        format!("A_{} A_{} is a proper subspace of its component", g.group.labels()[x], g.group.labels()[y])
    };
    Ok(Report::new("strongly-graded", input, verdict, summary)
        .witness("surjective", &s.surjective)
        .witness("product_maps", maps))
}

fn graded_iso_checks(a: &GradedAlgebra, crossed: &GradedAlgebra, iso: &LinearMap) -> Vec<(String, bool)> {
    let graded = (0..a.algebra.dim()).all(|i| iso.column(i).iter().all(|(k, _)| crossed.degree[k] == a.degree[i]));
    let base = a.component_indices(a.group.identity());
    let neutral = crossed.component_indices(crossed.group.identity());
    let identity_on_base = base.iter().enumerate().all(|(k, &i)| {
        let v = iso.column(i);
        v.nnz() == 1 && v.get(neutral[k]).is_some_and(|c| c.is_one())
    });
    vec![
        ok("bijective", iso.is_bijective()),
        ok("multiplicative and unital", a.algebra.is_algebra_map(&crossed.algebra, iso)),
        ok("preserves degrees", graded),
        ok("identity on the neutral component", identity_on_base),
    ]
}

pub fn recognize_crossed(doc: &Document, opts: &Options, input: &str) -> InputResult<Report> {
    doc.require_kind("recognize-crossed", &[Kind::Graded])?;
    let g = doc.graded()?;
    let field = doc.field;
    match recognize_group_crossed_product(&g, &opts.search()).map_err(computation("recognize-crossed"))? {
        Recognition::CrossedProduct(rec) => {
            let d = g.algebra.dim();
            let units: Vec<Value> = rec.units.iter().map(|u| vector_json(u, d, field)).collect();
            let s = &rec.system;
            let (n, b) = (s.group.order(), s.base.dim());
            let sigma = LinearMap::from_fn(field, n * n, b, |k| s.sigma[k / n][k % n].clone());
            let action = LinearMap::from_fn(field, n * b, b, |k| s.action[k / b].column(k % b).clone());
            let mut r = Report::new("recognize-crossed", input, Verdict::Found, "every component contains a unit")
                .witness("units", units)
                .certificate("iso", &rec.iso)
                .certificate("sigma", &sigma)
                .certificate("action", &action);
            if opts.certify {
                r.certify(|r| match r.read_certificate("iso") {
                    Some(iso) => graded_iso_checks(&g, &rec.crossed, &iso),
                    None => vec![ok("iso readable", false)],
                });
            }
            Ok(r)
        }
        Recognition::NoUnit { component, outcome } => {
            let r = Report::new(
                "recognize-crossed",
                input,
                Verdict::NotFound,
                format!("component {} has no unit", g.group.labels()[component]),
            )
            .error("NoUnit")
            .witness("component", &g.group.labels()[component]);
            Ok(search_witnesses(r, &outcome))
        }
    }
}

pub fn crossed_product_cmd(doc: &Document, opts: &Options, input: &str) -> InputResult<Report> {
    doc.require_kind("crossed-product", &[Kind::GroupCrossedSystem, Kind::CrossedSystem])?;
    if doc.kind() == Kind::GroupCrossedSystem {
        let s = doc.group_crossed_system()?;
        let g = group_crossed_product(&s).map_err(computation("crossed-product"))?;
        let a = &g.algebra;
        let mut r = Report::new("crossed-product", input, Verdict::Pass, format!("crossed product of dimension {}", a.dim()))
            .witness("labels", a.labels())
            .witness("degree", &g.degree)
            .certificate("product", a.product())
            .certificate("unit", &LinearMap::from_columns(a.field(), a.dim(), vec![a.unit().clone()]).expect("fits"));
        if opts.certify {
            r.certify(|r| {
                let rebuilt = rebuild_algebra(r, a.field(), a.labels().to_vec());
                let graded = rebuilt
                    .and_then(|alg| GradedAlgebra::new(alg, g.group.clone(), g.degree.clone()).ok())
                    .map(|ga| {
                        hopfkit_core::algebra::check_algebra(&ga.algebra, None).passed() && check_grading(&ga).passed()
                    });
                vec![ok("graded algebra axioms", graded == Some(true))]
            });
        }
        return Ok(r);
    }
    let s = doc.crossed_system()?;
    let c = crossed_product(&s).map_err(computation("crossed-product"))?;
    let a = &c.algebra;
    let mut r = Report::new("crossed-product", input, Verdict::Pass, format!("crossed product of dimension {}", a.dim()))
        .witness("labels", a.labels())
        .certificate("product", a.product())
        .certificate("unit", &LinearMap::from_columns(a.field(), a.dim(), vec![a.unit().clone()]).expect("fits"))
        .certificate("coaction", &c.coaction);
    if opts.certify {
        r.certify(|r| {
            let rebuilt = rebuild_algebra(r, a.field(), a.labels().to_vec())
                .zip(r.read_certificate("coaction"))
                .map(|(alg, rho)| ComoduleAlgebra::new(alg, s.hopf.clone(), rho).is_ok());
            vec![ok("comodule algebra axioms", rebuilt == Some(true))]
        });
    }
    Ok(r)
}

fn rebuild_algebra(r: &Report, field: ScalarField, labels: Vec<String>) -> Option<Algebra> {
    let m = r.read_certificate("product")?;
    let u = r.read_certificate("unit")?;
    let a = Algebra::new(field, labels, m, u.column(0).clone()).ok()?;
    hopfkit_core::algebra::check_algebra(&a, None).passed().then_some(a)
}

fn section_checks(a: &ComoduleAlgebra, r: &Report) -> Vec<(String, bool)> {
    match (r.read_certificate("section"), r.read_certificate("section_inverse")) {
        (Some(phi), Some(inv)) => vec![
            ok("section is colinear", colinear_from_hopf(a, &phi)),
            ok("section is unital", phi.apply(a.hopf.one()) == *a.algebra.unit()),
            ok("convolution inverse is two-sided", convolution_inverse_pair(a, &phi, &inv)),
        ],
        _ => vec![ok("section readable", false)],
    }
}

pub fn find_section_cmd(doc: &Document, opts: &Options, input: &str) -> InputResult<Report> {
    let a = comodule_input(doc, "find-section")?;
    let search = find_section(&a, &opts.search()).map_err(computation("find-section"))?;
    let r = match &search.outcome {
        SearchOutcome::Found { witness, .. } => {
            let mut r = Report::new("find-section", input, Verdict::Found, "a convolution-invertible colinear map exists")
                .certificate("section", &witness.phi)
                .certificate("section_inverse", &witness.phi_inv);
            if opts.certify {
                r.certify(|r| section_checks(&a, r));
            }
            r
        }
        SearchOutcome::ProvedAbsent { .. } => Report::new(
            "find-section",
            input,
            Verdict::NotFound,
            "no colinear map is convolution-invertible",
        )
        .error("NoSectionFound"),
        SearchOutcome::NotFoundWithinBudget { .. } => {
            Report::new("find-section", input, Verdict::NotFound, "no section within the search budget").error("NoSectionFound")
        }
    };
    Ok(search_witnesses(r.witness("colinear_maps_dimension", search.colinear_dim), &search.outcome))
}

pub fn recognize_cleft(doc: &Document, opts: &Options, input: &str) -> InputResult<Report> {
    let a = comodule_input(doc, "recognize-cleft")?;
    let search = find_section(&a, &opts.search()).map_err(computation("recognize-cleft"))?;
    let Some(section) = search.outcome.found() else {
        let r = Report::new("recognize-cleft", input, Verdict::NotFound, "not cleft: no section").error("NoSectionFound");
        return Ok(search_witnesses(r, &search.outcome));
    };
    let p = section_to_crossed_system(&a, section).map_err(computation("recognize-cleft"))?;
    let mut r = Report::new(
        "recognize-cleft",
        input,
        Verdict::Found,
        format!("isomorphic to a crossed product over a {}-dimensional base", p.coinvariants.dim()),
    )
    .witness("coinvariants_dimension", p.coinvariants.dim())
    .certificate("section", &section.phi)
    .certificate("section_inverse", &section.phi_inv)
    .certificate("measuring", &p.system.measuring)
    .certificate("sigma", &p.system.sigma)
    .certificate("iso", &p.iso)
    .certificate("iso_inverse", &p.iso_inverse);
    if opts.certify {
        r.certify(|r| {
            let mut checks = section_checks(&a, r);
            match (r.read_certificate("iso"), r.read_certificate("iso_inverse")) {
                (Some(iso), Some(inv)) => {
                    let n = iso.domain();
                    checks.push(ok("iso is inverted", iso.compose(&inv).is_ok_and(|x| x == LinearMap::identity(a.field(), n))));
                    checks.push(ok("iso is multiplicative", p.crossed.algebra.is_algebra_map(&a.algebra, &iso)));
                    checks.push(ok("iso is colinear", colinear_between(&p.crossed.coaction, &a.coaction, &iso, a.hopf.dim())));
                }
                _ => checks.push(ok("iso readable", false)),
            }
            checks
        });
    }
    Ok(search_witnesses(r, &search.outcome))
}

fn extension(doc: &Document, command: &str, opts: &Options) -> InputResult<Result<AugmentedCleftExtension, String>> {
    doc.require_kind(command, &[Kind::AugmentedExtension])?;
    let (a, aug, section) = doc.augmented_extension()?;
    let section = match section {
        Some(phi) => Some(hopfkit_core::comodule::Section::new(&a, phi).map_err(|e| InputError::core("section", e))?),
        None => None,
    };
    match AugmentedCleftExtension::new(a, aug, section, &opts.search()) {
        Ok(e) => Ok(Ok(e)),
        Err(CoreError::NoSectionFound(why)) => Ok(Err(why)),
        Err(e) => Err(InputError::core(command, e)),
    }
}

pub fn classify_cleft(doc: &Document, opts: &Options, input: &str) -> InputResult<Report> {
    let e = match extension(doc, "classify-cleft", opts)? {
        Ok(e) => e,
        Err(why) => {
            return Ok(Report::new("classify-cleft", input, Verdict::NotFound, format!("not cleft: {why}")).error("NoSectionFound"))
        }
    };
    let c = classify_cleft_extension(&e).map_err(computation("classify-cleft"))?;
    let field = doc.field;
    let zero = c.class.is_zero();
    let mut r = Report::new(
        "classify-cleft",
        input,
        Verdict::Pass,
        format!("class in a {}-dimensional HH²{}", c.hh2.dimension, if zero { ", zero" } else { "" }),
    )
    .witness("hh2_dimension", c.hh2.dimension)
    .witness("class", vector_json(&c.class, c.hh2.dimension, field))
    .witness("zero_class", zero)
    .certificate("cocycle", &c.cocycle)
    .certificate("module_action", &c.module.action)
    .certificate("section", &e.section.phi);
    if opts.certify {
        r.certify(|r| match r.read_certificate("cocycle") {
            Some(s) => vec![
                ok("cocycle is normalized", is_normalized(&c.module.hopf, 2, &s)),
                ok("cocycle is closed", coboundary2(&c.module, &s).is_zero()),
                ok("class recomputes", c.hh2.decide(&s).as_ref() == Some(&c.class)),
            ],
            None => vec![ok("cocycle readable", false)],
        });
    }
    Ok(r)
}

pub fn hh2_cmd(doc: &Document, opts: &Options, input: &str) -> InputResult<Report> {
    doc.require_kind("hh2", &[Kind::LeftModule])?;
    let m = doc.left_module()?;
    let h = hh2(&m).map_err(computation("hh2"))?;
    let mut r = Report::new("hh2", input, Verdict::Pass, format!("HH² has dimension {}", h.dimension))
        .witness("dimension", h.dimension)
        .witness("cocycles_dimension", h.cocycles.dim())
        .witness("coboundaries_dimension", h.coboundaries.dim());
    for (k, rep) in h.representatives.iter().enumerate() {
        r = r.certificate(&format!("representative_{k}"), rep);
    }
    if opts.certify {
        r.certify(|r| {
            let mut checks = vec![ok("dimension is cocycles minus coboundaries", h.dimension + h.coboundaries.dim() == h.cocycles.dim())];
            for k in 0..h.dimension {
                let Some(s) = r.read_certificate(&format!("representative_{k}")) else {
                    checks.push(ok("representative readable", false));
                    continue;
                };
                let expect = SVec::unit(k, m.hopf.field());
                checks.push(ok(
                    &format!("representative {k} is a normalized cocycle in class {k}"),
                    is_normalized(&m.hopf, 2, &s) && coboundary2(&m, &s).is_zero() && h.decide(&s) == Some(expect),
                ));
            }
            checks
        });
    }
    Ok(r)
}

pub fn split(doc: &Document, opts: &Options, input: &str) -> InputResult<Report> {
    let e = match extension(doc, "split", opts)? {
        Ok(e) => e,
        Err(why) => return Ok(Report::new("split", input, Verdict::NotFound, format!("not cleft: {why}")).error("NoSectionFound")),
    };
    let field = doc.field;
    match split_extension(&e).map_err(computation("split"))? {
        Splitting::Split { map, gauge } => {
            let mut r = Report::new("split", input, Verdict::Found, "an augmented comodule algebra map H → A exists")
                .certificate("map", &map)
                .certificate("gauge", &gauge);
            if opts.certify {
                let a = e.algebra.clone();
                let aug = e.augmentation.clone();
                r.certify(|r| match r.read_certificate("map") {
                    Some(f) => vec![
                        ok("multiplicative and unital", a.hopf.algebra.is_algebra_map(&a.algebra, &f)),
                        ok("colinear", colinear_from_hopf(&a, &f)),
                        ok("augmented", aug.compose(&f).is_ok_and(|x| x == *a.hopf.coalgebra.counit())),
                    ],
                    None => vec![ok("map readable", false)],
                });
            }
            Ok(r)
        }
        Splitting::Obstruction { class } => {
            let dim = classify_cleft_extension(&e).map_err(computation("split"))?.hh2.dimension;
            Ok(Report::new("split", input, Verdict::NotFound, "the cocycle class is nonzero")
                .error("Obstruction")
                .witness("class", vector_json(&class, dim, field)))
        }
    }
}

pub fn lift(doc: &Document, opts: &Options, input: &str) -> InputResult<Report> {
    doc.require_kind("lift", &[Kind::LiftProblem])?;
    let (c, d, varpi, psi) = doc.lift_problem()?;
    let field = doc.field;
    match lift_comodule_algebra_map(&c, &d, &varpi, &psi, &opts.search()).map_err(computation("lift"))? {
        Lift::Lifted { map, steps } => {
            let mut r = Report::new("lift", input, Verdict::Found, format!("lifted in {steps} square-zero step(s)"))
                .witness("steps", steps)
                .certificate("map", &map);
            if opts.certify {
                r.certify(|r| match r.read_certificate("map") {
                    Some(f) => vec![
                        ok("multiplicative and unital", c.hopf.algebra.is_algebra_map(&c.algebra, &f)),
                        ok("colinear", colinear_from_hopf(&c, &f)),
                        ok("lifts the given map", varpi.compose(&f).is_ok_and(|x| x == psi)),
                    ],
                    None => vec![ok("map readable", false)],
                });
            }
            Ok(r)
        }
        Lift::ObstructionAtStep { step, class } => {
            let dim = class.max_index().map_or(0, |i| i + 1);
            Ok(Report::new("lift", input, Verdict::NotFound, format!("obstruction at step {step}"))
                .error("ObstructionAtStep")
                .witness("step", step)
                .witness("class", vector_json(&class, dim, field)))
        }
    }
}

pub fn smash_coproduct_cmd(doc: &Document, opts: &Options, input: &str) -> InputResult<Report> {
    doc.require_kind("smash-coproduct", &[Kind::ComoduleCoalgebra])?;
    let data = doc.comodule_coalgebra()?;
    let s = smash_coproduct(&data).map_err(computation("smash-coproduct"))?;
    let c = &s.coalgebra;
    let mut r = Report::new("smash-coproduct", input, Verdict::Pass, format!("coalgebra of dimension {}", c.dim()))
        .witness("labels", c.labels())
        .certificate("coproduct", c.coproduct())
        .certificate("counit", c.counit())
        .certificate("action", &s.action);
    if opts.certify {
        r.certify(|r| {
            let rebuilt = r
                .read_certificate("coproduct")
                .zip(r.read_certificate("counit"))
                .and_then(|(d, e)| Coalgebra::new(doc.field, c.labels().to_vec(), d, e).ok());
            vec![ok("coalgebra axioms", rebuilt.is_some_and(|x| check_coalgebra(&x, None).passed()))]
        });
    }
    Ok(r)
}

/// Bijective, even, multiplicative, colinear for `(id⊗π)Δ`, and augmented.
pub fn alpha_checks(a: &SuperHopf, target: &SuperHopf, pi: &LinearMap, alpha: &LinearMap) -> Vec<(String, bool)> {
    let field = a.field();
    let dh = pi.codomain();
    let words = target.dim() / dh.max(1);
    let h = &a.hopf;
    let even = (0..a.dim()).all(|x| target.space.degree_of(alpha.column(x)) == Some(a.parity()[x]));
    let colinear = match LinearMap::identity(field, a.dim()).tensor(pi).compose(h.coalgebra.coproduct()) {
        Ok(rho) => {
            let target_rho = LinearMap::identity(field, words).tensor(&quotient_coproduct(target, dh));
            colinear_between(&rho, &target_rho, alpha, dh)
        }
        Err(_) => false,
    };
    vec![
        ok("alpha is bijective", alpha.is_bijective()),
        ok("alpha preserves parity", even),
        ok("alpha is multiplicative and unital", h.algebra.is_algebra_map(&target.hopf.algebra, alpha)),
        ok("alpha is colinear", colinear),
        ok(
            "alpha is augmented",
            target.hopf.coalgebra.counit().compose(alpha).is_ok_and(|e| e == *h.coalgebra.counit()),
        ),
    ]
}

/// `Δ_H` read off `Λ(W)⊗̲H` on the elements `1⊗h`, which carry the indices `0..dim H`.
fn quotient_coproduct(target: &SuperHopf, dh: usize) -> LinearMap {
    let d = target.dim();
    LinearMap::from_fn(target.field(), dh, dh * dh, |x| {
        target.hopf.coalgebra.comul_basis(x).remap(|k| {
            let (i, j) = (k / d, k % d);
            (i < dh && j < dh).then_some(i * dh + j)
        })
    })
}

pub fn super_decompose(doc: &Document, opts: &Options, input: &str) -> InputResult<Report> {
    doc.require_kind("super-decompose", &[Kind::SuperHopf, Kind::Exterior])?;
    let a = doc.super_hopf()?;
    let r = decompose(&a).map_err(computation("super-decompose"))?;
    let mut report = Report::new(
        "super-decompose",
        input,
        Verdict::Pass,
        format!(
            "A ≅ Λ(W) ⊗ H with dim W = {} and dim H = {}",
            r.exterior.n,
            r.hopf.dim()
        ),
    )
    .witness("odd_dimension", r.exterior.n)
    .witness("even_quotient_dimension", r.hopf.dim())
    .witness("coinvariants_dimension", r.coinvariants.dim())
    .witness("target_labels", r.target.hopf.labels())
    .certificate("alpha", &r.alpha)
    .certificate("projection", &r.pi)
    .certificate("splitting", &r.phi)
    .certificate("delta", &r.delta)
    .certificate("gamma", &r.gamma);
    if opts.certify {
        let target = r.target.clone();
        report.certify(|rep| match (rep.read_certificate("alpha"), rep.read_certificate("projection")) {
            (Some(alpha), Some(pi)) => alpha_checks(&a, &target, &pi, &alpha),
            _ => vec![ok("certificates readable", false)],
        });
    }
    Ok(report)
}

pub fn pairing(doc: &Document, opts: &Options, input: &str) -> InputResult<Report> {
    doc.require_kind("pairing", &[Kind::Exterior])?;
    let n = doc.exterior()?.n;
    let p = duality_pairing(n, doc.field).map_err(computation("pairing"))?;
    let d = 1usize << n;
    let diagonal: Vec<Value> = (0..d).map(|s| scalar_json(p.matrix.get(s, s))).collect();
    let matrix = LinearMap::from_matrix(&p.matrix);
    let mut r = Report::new("pairing", input, Verdict::Pass, format!("nondegenerate pairing of Λ(V*) with Λ(V), dim V = {n}"))
        .witness("diagonal", diagonal)
        .witness("rank", p.matrix.rank())
        .certificate("pairing", &matrix)
        .certificate("iso", &p.iso);
    if opts.certify {
        r.certify(|r| {
            let (Some(m), Some(iso)) = (r.read_certificate("pairing"), r.read_certificate("iso")) else {
                return vec![ok("certificates readable", false)];
            };
            let m: Matrix = m.to_matrix();
            let diag_pm1 = (0..d).all(|s| {
                (0..d).all(|t| {
                    let v = m.get(s, t);
                    if s == t {
                        v.is_one() || (-v).is_one()
                    } else {
                        v.is_zero()
                    }
                })
            });
            let src = &p.covectors.hopf.hopf;
            let dst = &p.dual.hopf;
            vec![
                ok("diagonal with entries ±1", diag_pm1),
                ok("nondegenerate", m.rank() == d),
                ok("iso is multiplicative", src.algebra.is_algebra_map(&dst.algebra, &iso)),
                ok("iso is comultiplicative", src.coalgebra.coalgebra_map_defect(&dst.coalgebra, &iso).is_none()),
                ok("iso commutes with antipodes", iso.compose(&src.antipode).ok() == dst.antipode.compose(&iso).ok()),
            ]
        });
    }
    Ok(r)
}
