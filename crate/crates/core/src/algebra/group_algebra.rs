use super::{Algebra, Coalgebra, Hopf};
use crate::field::ScalarField;
use crate::group::GroupTable;
use crate::linalg::{LinearMap, SVec};

/// `kΓ` with `Δ(g) = g⊗g`, `ε(g) = 1`, `S(g) = g⁻¹`.
pub fn group_hopf_algebra(group: &GroupTable, field: ScalarField) -> Hopf {
    let n = group.order();
    let labels = group.labels().to_vec();
    let algebra = Algebra::from_table(field, labels.clone(), SVec::unit(0, field), |a, b| {
        SVec::unit(group.mul(a, b), field)
    })
    .expect("group table shapes");
    let coproduct = LinearMap::from_fn(field, n, n * n, |g| SVec::unit(g * n + g, field));
    let counit = LinearMap::from_fn(field, n, 1, |_| SVec::unit(0, field));
    let coalgebra = Coalgebra::new(field, labels, coproduct, counit).expect("shapes");
    let antipode = LinearMap::from_fn(field, n, n, |g| SVec::unit(group.inv(g), field));
    Hopf::new(algebra, coalgebra, antipode).expect("shapes")
}
