use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{Algebra, Coalgebra, Hopf};
use crate::linalg::{LinearMap, SVec};

/// The dual Hopf algebra on `H*`, every structure map transposed; the basis is the dual basis.
pub fn dual_hopf(h: &Hopf) -> Hopf {
    let field = h.field();
    let labels: Vec<String> = h.labels().iter().map(|l| format!("{l}*")).collect();
    let unit = SVec::from_dense(h.coalgebra.counit().to_matrix().row(0));
    let algebra = Algebra::new(field, labels.clone(), h.coalgebra.coproduct().transpose(), unit)
        .expect("transposed shapes");
    let counit = LinearMap::from_columns(field, h.dim(), alloc::vec![h.one().clone()])
        .expect("unit in range")
        .transpose();
    let coalgebra = Coalgebra::new(field, labels, h.algebra.product().transpose(), counit)
        .expect("transposed shapes");
    Hopf::new(algebra, coalgebra, h.antipode.transpose()).expect("transposed shapes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::axioms::check_hopf;
    use crate::algebra::group_hopf_algebra;
    use crate::corpus;
    use crate::field::ScalarField;
    use crate::group::GroupTable;

    #[test]
    fn double_dual_is_identity_on_constants() {
        let h = corpus::sweedler(ScalarField::Rationals);
        let dd = dual_hopf(&dual_hopf(&h));
        assert_eq!(dd.algebra.product(), h.algebra.product());
        assert_eq!(dd.coalgebra.coproduct(), h.coalgebra.coproduct());
        assert_eq!(dd.antipode, h.antipode);
    }

    #[test]
    fn dual_of_z2_is_commutative_and_cocommutative() {
        let h = group_hopf_algebra(&GroupTable::cyclic(2), ScalarField::Rationals);
        let d = dual_hopf(&h);
        assert!(check_hopf(&d, None).passed());
        assert!(d.algebra.is_commutative());
        assert!(d.coalgebra.is_cocommutative(None));
    }

    #[test]
    fn dual_swaps_flags() {
        let s3 = group_hopf_algebra(&GroupTable::symmetric3(), ScalarField::Rationals);
        let d = dual_hopf(&s3);
        assert!(!s3.algebra.is_commutative() && s3.coalgebra.is_cocommutative(None));
        assert!(d.algebra.is_commutative() && !d.coalgebra.is_cocommutative(None));
        assert!(check_hopf(&d, None).passed());
        let sw = dual_hopf(&corpus::sweedler(ScalarField::prime(5).unwrap()));
        assert!(check_hopf(&sw, None).passed());
    }
}
