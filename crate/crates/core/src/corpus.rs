//! Named example structures shared by the tests, the CLI corpus and the docs.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::algebra::{Algebra, Bialgebra, Coalgebra, Hopf};
use crate::field::ScalarField;
use crate::linalg::{LinearMap, SVec};

pub fn labels(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

/// Sweedler's four-dimensional Hopf algebra on `1, g, x, gx`:
/// `g² = 1`, `x² = 0`, `xg = −gx`, `Δx = x⊗1 + g⊗x`.
pub fn sweedler(field: ScalarField) -> Hopf {
    // g^a x^b sits at index a + 2b
    let algebra = Algebra::from_table(field, labels(&["1", "g", "x", "gx"]), SVec::unit(0, field), |i, j| {
        let (a, b) = (i % 2, i / 2);
        let (c, d) = (j % 2, j / 2);
        if b + d >= 2 {
            return SVec::new();
        }
        let sign = if b * c == 1 { -1 } else { 1 };
        SVec::term((a + c) % 2 + 2 * (b + d), field.int(sign))
    })
    .expect("shapes");
    let t = |x: usize, y: usize| x * 4 + y;
    let coproduct = LinearMap::from_fn(field, 4, 16, |i| match i {
        0 => SVec::unit(t(0, 0), field),
        1 => SVec::unit(t(1, 1), field),
        2 => SVec::unit(t(2, 0), field).add(&SVec::unit(t(1, 2), field)),
        _ => SVec::unit(t(3, 1), field).add(&SVec::unit(t(0, 3), field)),
    });
    let counit = LinearMap::from_fn(field, 4, 1, |i| {
        if i < 2 {
            SVec::unit(0, field)
        } else {
            SVec::new()
        }
    });
    let coalgebra = Coalgebra::new(field, labels(&["1", "g", "x", "gx"]), coproduct, counit).expect("shapes");
    let antipode = LinearMap::from_fn(field, 4, 4, |i| match i {
        2 => SVec::term(3, field.int(-1)),
        3 => SVec::unit(2, field),
        _ => SVec::unit(i, field),
    });
    Hopf::new(algebra, coalgebra, antipode).expect("shapes")
}

/// The monoid bialgebra on `{1, e}` with `e² = e` and `e` group-like; it has no antipode.
pub fn idempotent_monoid_bialgebra(field: ScalarField) -> Bialgebra {
    let algebra = Algebra::from_table(field, labels(&["1", "e"]), SVec::unit(0, field), |i, j| {
        SVec::unit(i.max(j), field)
    })
    .expect("shapes");
    let coproduct = LinearMap::from_fn(field, 2, 4, |i| SVec::unit(i * 2 + i, field));
    let counit = LinearMap::from_fn(field, 2, 1, |_| SVec::unit(0, field));
    let coalgebra = Coalgebra::new(field, labels(&["1", "e"]), coproduct, counit).expect("shapes");
    Bialgebra::new(algebra, coalgebra).expect("shapes")
}

/// The function coalgebra `(kℤ/2)*` on `δ₀, δ₁` with `ρ(δ_a) = δ_a ⊗ g^a`.
pub fn z2_function_coalgebra_coaction(field: ScalarField) -> (Coalgebra, LinearMap) {
    let coproduct = LinearMap::from_fn(field, 2, 4, |a| {
        let mut v = SVec::new();
        for b in 0..2 {
            let c = (a + b) % 2;
            v.add_term(b * 2 + c, &field.one());
        }
        v
    });
    let counit = LinearMap::from_fn(field, 2, 1, |a| {
        if a == 0 {
            SVec::unit(0, field)
        } else {
            SVec::new()
        }
    });
    let d = Coalgebra::new(field, labels(&["d0", "d1"]), coproduct, counit).expect("shapes");
    let rho = LinearMap::from_fn(field, 2, 4, |a| SVec::unit(a * 2 + a, field));
    (d, rho)
}

/// The full matrix algebra `M_n(k)` on matrix units `E_ij` (index `i * n + j`).
pub fn matrix_algebra(n: usize, field: ScalarField) -> Algebra {
    let names = (0..n * n)
        .map(|k| alloc::format!("E{}{}", k / n + 1, k % n + 1))
        .collect();
    let mut unit = SVec::new();
    for i in 0..n {
        unit.add_term(i * n + i, &field.one());
    }
    Algebra::from_table(field, names, unit, |a, b| {
        let (i, j) = (a / n, a % n);
        let (k, l) = (b / n, b % n);
        if j == k {
            SVec::unit(i * n + l, field)
        } else {
            SVec::new()
        }
    })
    .expect("shapes")
}

/// `k[x]/(x^n)` on `1, x, …, x^{n−1}`.
pub fn truncated_polynomials(n: usize, field: ScalarField) -> Algebra {
    let names = (0..n)
        .map(|k| match k {
            0 => "1".to_string(),
            1 => "x".to_string(),
            _ => alloc::format!("x^{k}"),
        })
        .collect();
    Algebra::from_table(field, names, SVec::unit(0, field), |a, b| {
        if a + b < n {
            SVec::unit(a + b, field)
        } else {
            SVec::new()
        }
    })
    .expect("shapes")
}

/// `k × k` on the idempotents `e1, e2`.
pub fn split_pair(field: ScalarField) -> Algebra {
    let unit = SVec::unit(0, field).add(&SVec::unit(1, field));
    Algebra::from_table(field, labels(&["e1", "e2"]), unit, |a, b| {
        if a == b {
            SVec::unit(a, field)
        } else {
            SVec::new()
        }
    })
    .expect("shapes")
}

/// The ground field as a one-dimensional algebra.
pub fn ground_field(field: ScalarField) -> Algebra {
    Algebra::from_table(field, labels(&["1"]), SVec::unit(0, field), |_, _| SVec::unit(0, field))
        .expect("shapes")
}

/// `M₂(k)` graded by `ℤ/2`: diagonal units in degree `1`, off-diagonal in degree `g`.
pub fn m2_graded(field: ScalarField) -> crate::graded::GradedAlgebra {
    crate::graded::GradedAlgebra::new(
        matrix_algebra(2, field),
        crate::group::GroupTable::cyclic(2),
        alloc::vec![0, 1, 1, 0],
    )
    .expect("shapes")
}

/// `k[x]/(x²)` graded by `ℤ/2` with `deg x = g`.
pub fn dual_numbers_graded(field: ScalarField) -> crate::graded::GradedAlgebra {
    crate::graded::GradedAlgebra::new(
        truncated_polynomials(2, field),
        crate::group::GroupTable::cyclic(2),
        alloc::vec![0, 1],
    )
    .expect("shapes")
}

/// `B = k`, `Γ = ℤ/2`, trivial action, `σ(g,g) = c`.
pub fn scalar_z2_system(field: ScalarField, c: crate::field::Scalar) -> crate::graded::GroupCrossedSystem {
    let base = ground_field(field);
    let one = SVec::unit(0, field);
    let sigma = alloc::vec![
        alloc::vec![one.clone(), one.clone()],
        alloc::vec![one.clone(), SVec::term(0, c)],
    ];
    let id = LinearMap::identity(field, 1);
    crate::graded::GroupCrossedSystem::new(base, crate::group::GroupTable::cyclic(2), alloc::vec![id.clone(), id], sigma)
        .expect("c is a unit")
}

/// `B = k × k` with `ℤ/2` swapping the factors and `σ ≡ 1`.
pub fn swap_system(field: ScalarField) -> crate::graded::GroupCrossedSystem {
    let base = split_pair(field);
    let one = base.unit().clone();
    let swap = LinearMap::from_fn(field, 2, 2, |i| SVec::unit(1 - i, field));
    crate::graded::GroupCrossedSystem::new(
        base,
        crate::group::GroupTable::cyclic(2),
        alloc::vec![LinearMap::identity(field, 2), swap],
        alloc::vec![alloc::vec![one.clone(); 2]; 2],
    )
    .expect("trivial cocycle")
}

/// The Sweedler comodule algebra `k⟨G, X⟩/(G² = 1, X² = t, XG = −GX)` with
/// `ρ(G) = G⊗g`, `ρ(X) = X⊗1 + G⊗x`; `t = 0` gives `H` itself.
pub fn sweedler_twisted(field: ScalarField, t: crate::field::Scalar) -> crate::comodule::ComoduleAlgebra {
    let hopf = sweedler(field);
    let algebra = Algebra::from_table(field, labels(&["1", "G", "X", "GX"]), SVec::unit(0, field), |i, j| {
        let (a, b) = (i % 2, i / 2);
        let (c, d) = (j % 2, j / 2);
        let sign = if b * c == 1 { field.int(-1) } else { field.one() };
        if b + d == 2 {
            // G^a X G^c X = ± G^(a+c) X² = ± t G^(a+c)
            return SVec::term((a + c) % 2, &sign * &t);
        }
        SVec::term((a + c) % 2 + 2 * (b + d), sign)
    })
    .expect("shapes");
    let coaction = hopf.coalgebra.coproduct().clone();
    crate::comodule::ComoduleAlgebra::new(algebra, hopf, coaction).expect("valid coaction")
}
