//! The bundled example files, generated from the library's constructions.

use std::path::Path;

use hopfkit_core::algebra::group_hopf_algebra;
use hopfkit_core::cohomology::{crossed_system_from_cocycle, AugmentedAlgebra, AugmentedCleftExtension, LeftModule};
use hopfkit_core::comodule::{crossed_product, ComoduleAlgebra, CrossedSystem};
use hopfkit_core::corpus;
use hopfkit_core::group::GroupTable;
use hopfkit_core::linalg::{LinearMap, SVec};
use hopfkit_core::superalg::{exterior_hopf, SuperHopf};
use hopfkit_core::ScalarField;

use crate::format::{write, Kind, PresentationFile};

const Q: ScalarField = ScalarField::Rationals;

/// Seed of the basis change in `scrambled-LambdaW-H.json`.
pub const SCRAMBLE_SEED: u64 = 7;

fn f3() -> ScalarField {
    ScalarField::prime(3).expect("3 is prime")
}

fn f5() -> ScalarField {
    ScalarField::prime(5).expect("5 is prime")
}

/// `k[x]/(x^n)` augmented at `x = 0`.
pub fn truncated(n: usize, field: ScalarField) -> AugmentedAlgebra {
    let b = corpus::truncated_polynomials(n, field);
    let eps = LinearMap::from_fn(field, n, 1, |i| if i == 0 { SVec::unit(0, field) } else { SVec::new() });
    AugmentedAlgebra::new(b, eps).expect("evaluation at zero is an algebra map")
}

/// `s(g^a, g^b) = 1` when `a + b ≥ 3`: the carry cocycle of `ℤ/3`.
pub fn carry_cocycle(field: ScalarField) -> LinearMap {
    LinearMap::from_fn(field, 9, 1, |k| {
        let (a, b) = (k / 3, k % 3);
        if a + b >= 3 {
            SVec::unit(0, field)
        } else {
            SVec::new()
        }
    })
}

/// `b⊗h ↦ ε(b)h` on `B ⋊_σ H`.
pub fn augmentation_projection(base: &AugmentedAlgebra, dh: usize) -> LinearMap {
    let field = base.field();
    let db = base.algebra.dim();
    LinearMap::from_fn(field, db * dh, dh, |x| SVec::unit(x % dh, field).scale(&base.epsilon(&SVec::unit(x / dh, field))))
}

/// `B ⋊_s F₃[ℤ/3]` for `B = F₃[x]/(x²)` with trivial action and the 2-cocycle `s`.
pub fn dual_number_extension(s: &LinearMap) -> AugmentedCleftExtension {
    let field = f3();
    let h = group_hopf_algebra(&GroupTable::cyclic(3), field);
    let base = truncated(2, field);
    let m = LeftModule::trivial(&h, 1);
    let system = crossed_system_from_cocycle(&m, s, &base).expect("normalized cocycle");
    AugmentedCleftExtension::from_crossed_product(&system, &base).expect("crossed products are cleft")
}

/// `Λ(W) ⊗ kℤ/2` with `dim W = 2`, in a seeded random basis.
pub fn scrambled_lambda_w_h(seed: u64) -> SuperHopf {
    let h = SuperHopf::purely_even(group_hopf_algebra(&GroupTable::cyclic(2), Q)).expect("even");
    let a = exterior_hopf(2, Q).expect("odd characteristic").hopf.tensor(&h).expect("same field");
    a.scrambled(seed).expect("invertible change of basis").0
}

pub fn smash_lift_source(field: ScalarField, n: usize, group: usize) -> (ComoduleAlgebra, ComoduleAlgebra, LinearMap, LinearMap) {
    let h = group_hopf_algebra(&GroupTable::cyclic(group), field);
    let base = truncated(n, field);
    let system =
        CrossedSystem::smash(h.clone(), base.algebra.clone(), CrossedSystem::trivial_measuring(&h, &base.algebra)).expect("smash");
    let c = crossed_product(&system).expect("smash product");
    let d = ComoduleAlgebra::regular(&h);
    let varpi = augmentation_projection(&base, group);
    (c, d, varpi, LinearMap::identity(field, group))
}

fn named(name: &str, f: PresentationFile) -> PresentationFile {
    f.named(name)
}

/// Every bundled file name with its contents.
pub fn files() -> Vec<(&'static str, PresentationFile)> {
    let z2 = GroupTable::cyclic(2);
    let z3 = GroupTable::cyclic(3);
    let s3 = GroupTable::symmetric3();
    let mut out = vec![
        ("kZ2.hopf.json", named("kZ2", write::hopf(&group_hopf_algebra(&z2, Q)))),
        ("kZ3.hopf.json", named("kZ3", write::hopf(&group_hopf_algebra(&z3, Q)))),
        ("kS3.hopf.json", named("kS3", write::hopf(&group_hopf_algebra(&s3, Q)))),
        ("kS3-F5.hopf.json", named("kS3 over F5", write::hopf(&group_hopf_algebra(&s3, f5())))),
        ("sweedler.hopf.json", named("Sweedler", write::hopf(&corpus::sweedler(Q)))),
        ("sweedler-F5.hopf.json", named("Sweedler over F5", write::hopf(&corpus::sweedler(f5())))),
        (
            "monoid.bialgebra.json",
            named("idempotent monoid", write::bialgebra(&corpus::idempotent_monoid_bialgebra(Q))),
        ),
        ("m2-graded.json", named("M2 graded by Z/2", write::graded(&corpus::m2_graded(Q)))),
        ("kx2-graded.json", named("k[x]/(x^2) graded by Z/2", write::graded(&corpus::dual_numbers_graded(f3())))),
        (
            "scalar-z2.group-system.json",
            named("k with sigma(g,g) = -1", write::group_crossed_system(&corpus::scalar_z2_system(Q, Q.int(-1)))),
        ),
        ("swap-z2.group-system.json", named("k x k with swap", write::group_crossed_system(&corpus::swap_system(Q)))),
    ];
    let swap = corpus::swap_system(Q);
    let swap_hopf = CrossedSystem::from_group_system(&swap, group_hopf_algebra(&z2, Q)).expect("group system");
    out.push(("swap-z2.crossed-system.json", named("k x k with swap over kZ2", write::crossed_system(&swap_hopf))));

    let carry = dual_number_extension(&carry_cocycle(f3()));
    out.push((
        "carry.extension.json",
        named(
            "carry cocycle extension of F3[x]/(x^2)",
            write::augmented_extension(&carry.algebra, &carry.augmentation, Some(&carry.section.phi)),
        ),
    ));
    let smash = dual_number_extension(&LinearMap::zero(f3(), 9, 1));
    out.push((
        "smash.extension.json",
        named("smash product F3[x]/(x^2) # F3[Z/3]", write::augmented_extension(&smash.algebra, &smash.augmentation, None)),
    ));
    for (file, field, name) in [
        ("trivial-z3-F3.module.json", f3(), "trivial F3[Z/3]-module"),
        ("trivial-z3.module.json", Q, "trivial QZ/3-module"),
    ] {
        let m = LeftModule::trivial(&group_hopf_algebra(&z3, field), 1);
        out.push((file, named(name, write::left_module(&m, corpus::labels(&["x"])))));
    }

    let h3 = group_hopf_algebra(&z3, f3());
    out.push((
        "carry.lift.json",
        named(
            "lift through the carry extension",
            write::lift_problem(
                &carry.algebra,
                &ComoduleAlgebra::regular(&h3),
                &augmentation_projection(&truncated(2, f3()), 3),
                &LinearMap::identity(f3(), 3),
            ),
        ),
    ));
    let (c, d, varpi, psi) = smash_lift_source(Q, 4, 3);
    out.push(("smash-x4.lift.json", named("lift through k[x]/(x^4) # QZ/3", write::lift_problem(&c, &d, &varpi, &psi))));

    out.push((
        "sweedler-twisted.comodule-algebra.json",
        named("Sweedler comodule algebra with X^2 = 1", write::comodule_algebra(&corpus::sweedler_twisted(Q, Q.one()))),
    ));
    let (coalgebra, coaction) = corpus::z2_function_coalgebra_coaction(Q);
    let cc = hopfkit_core::algebra::ComoduleCoalgebra::new(group_hopf_algebra(&z2, Q), coalgebra, coaction)
        .expect("colinear structure maps");
    out.push(("z2-functions.comodule-coalgebra.json", named("functions on Z/2", write::comodule_coalgebra(&cc))));

    out.push((
        "scrambled-LambdaW-H.json",
        named("Lambda(W) x kZ/2, dim W = 2, scrambled", write::super_hopf(&scrambled_lambda_w_h(SCRAMBLE_SEED))),
    ));
    out.push((
        "exterior-3.super-hopf.json",
        named("Lambda(V), dim V = 3", write::super_hopf(&exterior_hopf(3, Q).expect("odd characteristic").hopf)),
    ));
    let mut ext = write::exterior(3, Q);
    ext.kind = Kind::Exterior;
    out.push(("exterior-3.exterior.json", named("Lambda(V), dim V = 3", ext)));
    out
}

pub fn export(dir: &Path) -> std::io::Result<Vec<String>> {
    std::fs::create_dir_all(dir)?;
    let mut written = Vec::new();
    for (name, file) in files() {
        std::fs::write(dir.join(name), file.to_json())?;
        written.push(name.to_string());
    }
    Ok(written)
}
