use alloc::vec::Vec;

use super::axioms::check_coalgebra;
use super::{Coalgebra, Hopf};
use crate::error::{Error, Result};
use crate::linalg::{LinearMap, SVec};

/// A coalgebra `D` with a right `H`-coaction `ρ: D → D⊗H` for which `Δ_D` and `ε_D`
/// are colinear.
#[derive(Clone, Debug)]
pub struct ComoduleCoalgebra {
    pub hopf: Hopf,
    pub coalgebra: Coalgebra,
    pub coaction: LinearMap,
}

impl ComoduleCoalgebra {
    pub fn new(hopf: Hopf, coalgebra: Coalgebra, coaction: LinearMap) -> Result<Self> {
        let (dh, dd) = (hopf.dim(), coalgebra.dim());
        let field = hopf.field();
        if coaction.domain() != dd || coaction.codomain() != dd * dh {
            return Err(Error::ShapeMismatch("coaction must map D → D⊗H".into()));
        }
        let id_d = LinearMap::identity(field, dd);
        let id_h = LinearMap::identity(field, dh);
        if id_d.tensor(hopf.coalgebra.counit()).compose(&coaction)? != id_d {
            return Err(Error::InvalidCoaction("not counital".into()));
        }
        let left = coaction.tensor(&id_h).compose(&coaction)?;
        let right = id_d.tensor(hopf.coalgebra.coproduct()).compose(&coaction)?;
        if left != right {
            return Err(Error::InvalidCoaction("not coassociative".into()));
        }
        for d in 0..dd {
            // (Δ_D⊗id)ρ(d) against d₁₍₀₎⊗d₂₍₀₎⊗d₁₍₁₎d₂₍₁₎
            let lhs = coalgebra.coproduct().tensor(&id_h).apply(coaction.column(d));
            let mut rhs = SVec::new();
            for (k, c) in coalgebra.comul_basis(d).iter() {
                let (d1, d2) = (k / dd, k % dd);
                for (k1, a) in coaction.column(d1).iter() {
                    for (k2, b) in coaction.column(d2).iter() {
                        let prod = hopf.mul(&SVec::unit(k1 % dh, field), &SVec::unit(k2 % dh, field));
                        let base = ((k1 / dh) * dd + k2 / dh) * dh;
                        rhs.axpy(&(&(c * a) * b), &prod.remap(|y| Some(base + y)));
                    }
                }
            }
            if lhs != rhs {
                return Err(Error::InvalidCoaction(alloc::format!(
                    "coproduct of D is not colinear at basis element {d}"
                )));
            }
            let mut eps = SVec::new();
            for (k, a) in coaction.column(d).iter() {
                eps.axpy(&(a * &coalgebra.counit_basis(k / dh)), &SVec::unit(k % dh, field));
            }
            if eps != hopf.one().scale(&coalgebra.counit_basis(d)) {
                return Err(Error::InvalidCoaction(alloc::format!(
                    "counit of D is not colinear at basis element {d}"
                )));
            }
        }
        Ok(ComoduleCoalgebra {
            hopf,
            coalgebra,
            coaction,
        })
    }
}

/// The coalgebra on `H⊗D` together with its left `H`-action `h′·(h⊗d) = h′h⊗d`.
#[derive(Clone, Debug)]
pub struct SmashCoproduct {
    pub coalgebra: Coalgebra,
    pub action: LinearMap,
}

/// `Δ(h⊗d) = [h₁⊗(d₁)₍₀₎]⊗[h₂(d₁)₍₁₎⊗d₂]`, `ε(h⊗d) = ε(h)ε(d)`.
pub fn smash_coproduct(data: &ComoduleCoalgebra) -> Result<SmashCoproduct> {
    let h = &data.hopf;
    let dcoal = &data.coalgebra;
    let (dh, dd) = (h.dim(), dcoal.dim());
    let n = dh * dd;
    let field = h.field();
    let mut labels = Vec::with_capacity(n);
    for a in h.labels() {
        for b in dcoal.labels() {
            labels.push(alloc::format!("{a}⊗{b}"));
        }
    }
    let coproduct = LinearMap::from_fn(field, n, n * n, |x| {
        let (hi, di) = (x / dd, x % dd);
        let mut out = SVec::new();
        for (kh, lambda) in h.coalgebra.comul_basis(hi).iter() {
            let (h1, h2) = (kh / dh, kh % dh);
            for (kd, mu) in dcoal.comul_basis(di).iter() {
                let (d1, d2) = (kd / dd, kd % dd);
                for (kr, nu) in data.coaction.column(d1).iter() {
                    let (d0, t) = (kr / dh, kr % dh);
                    let coeff = &(lambda * mu) * nu;
                    let prod = h.mul(&SVec::unit(h2, field), &SVec::unit(t, field));
                    for (y, c) in prod.iter() {
                        out.add_term((h1 * dd + d0) * n + y * dd + d2, &(&coeff * c));
                    }
                }
            }
        }
        out
    });
    let counit = LinearMap::from_fn(field, n, 1, |x| {
        SVec::term(0, &h.counit_basis(x / dd) * &dcoal.counit_basis(x % dd))
    });
    let coalgebra = Coalgebra::new(field, labels, coproduct, counit)?;
    let report = check_coalgebra(&coalgebra, None);
    if !report.passed() {
        return Err(Error::Internal(alloc::format!(
            "smash coproduct fails {}",
            report.violations[0].identity
        )));
    }
    let action = LinearMap::from_fn(field, dh * n, n, |k| {
        let (hp, x) = (k / n, k % n);
        let (hi, di) = (x / dd, x % dd);
        h.mul(&SVec::unit(hp, field), &SVec::unit(hi, field))
            .remap(|y| Some(y * dd + di))
    });
    Ok(SmashCoproduct { coalgebra, action })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::group_hopf_algebra;
    use crate::corpus;
    use crate::field::ScalarField;
    use crate::group::GroupTable;

    const Q: ScalarField = ScalarField::Rationals;

    #[test]
    fn trivial_coaction_gives_tensor_coalgebra_up_to_middle_swap() {
        let h = group_hopf_algebra(&GroupTable::cyclic(3), Q);
        let d = corpus::sweedler(Q).coalgebra;
        let rho = LinearMap::from_fn(Q, 4, 12, |i| SVec::unit(i * 3, Q));
        let data = ComoduleCoalgebra::new(h.clone(), d.clone(), rho).unwrap();
        let smash = smash_coproduct(&data).unwrap();
        let plain = h.coalgebra.tensor(&d, None);
        assert_eq!(smash.coalgebra.coproduct(), plain.coproduct());
    }

    #[test]
    fn function_coalgebra_over_z2() {
        let h = group_hopf_algebra(&GroupTable::cyclic(2), Q);
        let (d, rho) = corpus::z2_function_coalgebra_coaction(Q);
        let data = ComoduleCoalgebra::new(h.clone(), d.clone(), rho).unwrap();
        let smash = smash_coproduct(&data).unwrap();
        for x in 0..4 {
            let expected = &h.counit_basis(x / 2) * &d.counit_basis(x % 2);
            assert_eq!(smash.coalgebra.counit_basis(x), expected);
        }
    }

    #[test]
    fn group_like_parity_coaction_is_rejected() {
        let h = group_hopf_algebra(&GroupTable::cyclic(2), Q);
        let d = h.coalgebra.clone();
        let rho = LinearMap::from_fn(Q, 2, 4, |i| SVec::unit(i * 2 + i, Q));
        assert!(matches!(
            ComoduleCoalgebra::new(h, d, rho),
            Err(Error::InvalidCoaction(_))
        ));
    }
}
