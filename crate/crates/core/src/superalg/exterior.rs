use alloc::string::String;
use alloc::vec::Vec;

use super::SuperHopf;
use crate::algebra::{dual_hopf, Algebra, Coalgebra, Hopf};
use crate::error::{Error, Result};
use crate::field::{Scalar, ScalarField};
use crate::linalg::{LinearMap, Matrix, SVec};

/// `Λ(V)` for purely odd `V = k^n`; basis vector `m` is the wedge of the generators in the bits
/// of `m`, ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExteriorHopf {
    pub n: usize,
    pub hopf: SuperHopf,
}

/// `(−1)^{#{(s,t) ∈ S×T : s > t}}`, the sign sorting `e_S ∧ e_T`.
pub(crate) fn merge_sign(field: ScalarField, s: usize, t: usize) -> Scalar {
    let mut swaps = 0;
    let mut rest = t;
    while rest != 0 {
        let bit = rest.trailing_zeros();
        swaps += (s >> (bit + 1)).count_ones();
        rest &= rest - 1;
    }
    field.int(if swaps % 2 == 0 { 1 } else { -1 })
}

pub(crate) fn subset_label(prefix: &str, mask: usize) -> String {
    if mask == 0 {
        return "1".into();
    }
    let parts: Vec<String> = (0..usize::BITS as usize)
        .filter(|i| mask >> i & 1 == 1)
        .map(|i| alloc::format!("{prefix}{}", i + 1))
        .collect();
    parts.join("∧")
}

/// `e_S e_T` in an exterior algebra on subset bases.
pub(crate) fn wedge(field: ScalarField, s: usize, t: usize) -> SVec {
    if s & t != 0 {
        SVec::new()
    } else {
        SVec::term(s | t, merge_sign(field, s, t))
    }
}

pub fn exterior_hopf(n: usize, field: ScalarField) -> Result<ExteriorHopf> {
    exterior_named(n, field, "v")
}

pub(crate) fn exterior_named(n: usize, field: ScalarField, prefix: &str) -> Result<ExteriorHopf> {
    field.require_odd_characteristic()?;
    let d = 1usize << n;
    let labels: Vec<String> = (0..d).map(|m| subset_label(prefix, m)).collect();
    let algebra = Algebra::from_table(field, labels.clone(), SVec::unit(0, field), |s, t| wedge(field, s, t))?;
    let coproduct = LinearMap::from_fn(field, d, d * d, |s| {
        let mut out = SVec::new();
        let mut sub = s;
        loop {
            out.add_term(sub * d + (s & !sub), &merge_sign(field, sub, s & !sub));
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & s;
        }
        out
    });
    let counit = LinearMap::from_fn(field, d, 1, |s| if s == 0 { SVec::unit(0, field) } else { SVec::new() });
    let coalgebra = Coalgebra::new(field, labels, coproduct, counit)?;
    let antipode = LinearMap::from_fn(field, d, d, |s| {
        SVec::term(s, field.int(if s.count_ones() % 2 == 0 { 1 } else { -1 }))
    });
    let parity = (0..d).map(|m| (m.count_ones() % 2) as u8).collect();
    let hopf = SuperHopf::new(Hopf::new(algebra, coalgebra, antipode)?, parity)?;
    Ok(ExteriorHopf { n, hopf })
}

/// `Σ_σ sgn σ ∏ f_{s_k}(v_{t_σ(k)})` for the dual bases `f_i(v_j) = δ_ij`.
fn pair_subsets(field: ScalarField, s: usize, t: usize) -> Scalar {
    fn expand(field: ScalarField, rows: &[usize], cols: &[usize], used: &mut Vec<bool>, k: usize, sign: i64) -> Scalar {
        if k == rows.len() {
            return field.int(sign);
        }
        let mut total = field.zero();
        for c in 0..cols.len() {
            if used[c] || rows[k] != cols[c] {
                continue;
            }
            let inversions = (0..c).filter(|&j| !used[j]).count() as i64;
            used[c] = true;
            let term = expand(field, rows, cols, used, k + 1, if inversions % 2 == 0 { sign } else { -sign });
            used[c] = false;
            total = &total + &term;
        }
        total
    }
    if s.count_ones() != t.count_ones() {
        return field.zero();
    }
    let bits = |m: usize| (0..usize::BITS as usize).filter(|i| m >> i & 1 == 1).collect::<Vec<_>>();
    let (rows, cols) = (bits(s), bits(t));
    expand(field, &rows, &cols, &mut alloc::vec![false; cols.len()], 0, 1)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualityPairing {
    /// `Λ(V*)`.
    pub covectors: ExteriorHopf,
    pub vectors: ExteriorHopf,
    /// `Λ(V)*` on the dual subset basis.
    pub dual: SuperHopf,
    /// Rows index `Λ(V*)`, columns `Λ(V)`.
    pub matrix: Matrix,
    /// `Λ(V*) → Λ(V)*`, verified a Hopf superalgebra isomorphism.
    pub iso: LinearMap,
}

pub fn duality_pairing(n: usize, field: ScalarField) -> Result<DualityPairing> {
    let covectors = exterior_named(n, field, "f")?;
    let vectors = exterior_hopf(n, field)?;
    let d = 1usize << n;
    let rows: Vec<Vec<Scalar>> = (0..d).map(|s| (0..d).map(|t| pair_subsets(field, s, t)).collect()).collect();
    let matrix = Matrix::from_rows(field, rows)?;
    if matrix.rank() != d {
        return Err(Error::Internal("exterior pairing is degenerate".into()));
    }
    let dual = SuperHopf::new(dual_hopf(&vectors.hopf.hopf), vectors.hopf.parity().to_vec())?;
    let iso = LinearMap::from_matrix(&matrix.transpose());
    let src = &covectors.hopf.hopf;
    let dst = &dual.hopf;
    let ok = src.algebra.algebra_map_defect(&dst.algebra, &iso).is_none()
        && src.coalgebra.coalgebra_map_defect(&dst.coalgebra, &iso).is_none()
        && iso.compose(&src.antipode)? == dst.antipode.compose(&iso)?
        && (0..d).all(|s| dual.space.degree_of(iso.column(s)) == Some(covectors.hopf.parity()[s]));
    if !ok {
        return Err(Error::Internal("Λ(V*) → Λ(V)* is not a Hopf superalgebra map".into()));
    }
    Ok(DualityPairing {
        covectors,
        vectors,
        dual,
        matrix,
        iso,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: ScalarField = ScalarField::Rationals;

    #[test]
    fn single_generator() {
        let e = exterior_hopf(1, Q).unwrap();
        let h = &e.hopf.hopf;
        assert_eq!(h.dim(), 2);
        assert!(h.algebra.mul_basis(1, 1).is_zero());
        // 1⊗v + v⊗1
        let mut expect = SVec::unit(1, Q);
        expect.add_term(2, &Q.one());
        assert_eq!(h.coalgebra.comul_basis(1), &expect);
        assert_eq!(h.antipode.column(1), &SVec::term(1, Q.int(-1)));
    }

    #[test]
    fn two_generator_coproduct() {
        let h = exterior_hopf(2, Q).unwrap().hopf.hopf;
        // v₁∧v₂⊗1 + v₁⊗v₂ − v₂⊗v₁ + 1⊗v₁∧v₂, index i*4 + j
        let mut expect = SVec::new();
        expect.add_term(3 * 4, &Q.one());
        expect.add_term(4 + 2, &Q.one());
        expect.add_term(2 * 4 + 1, &Q.int(-1));
        expect.add_term(3, &Q.one());
        assert_eq!(h.coalgebra.comul_basis(3), &expect);
    }

    #[test]
    fn dimensions_and_symmetry() {
        for n in 0..=5 {
            let e = exterior_hopf(n, Q).unwrap();
            assert_eq!(e.hopf.dim(), 1 << n);
            assert!(e.hopf.is_super_commutative());
            assert!(e.hopf.is_super_cocommutative());
        }
    }

    #[test]
    fn ordinary_cocommutativity_fails() {
        let e = exterior_hopf(2, Q).unwrap();
        assert!(!e.hopf.hopf.coalgebra.is_cocommutative(None));
    }

    #[test]
    fn finite_field_exterior() {
        let f5 = ScalarField::prime(5).unwrap();
        for n in 0..=4 {
            assert!(exterior_hopf(n, f5).is_ok());
        }
    }

    #[test]
    fn pairing_of_degree_one_is_evaluation() {
        let p = duality_pairing(1, Q).unwrap();
        assert_eq!(p.matrix.get(1, 1), &Q.one());
        assert_eq!(p.matrix.get(0, 0), &Q.one());
    }

    #[test]
    fn pairing_matches_determinant_expansion() {
        // ⟨f₁∧f₂, v₁∧v₂⟩ = f₁(v₁)f₂(v₂) − f₁(v₂)f₂(v₁) = 1
        let p = duality_pairing(2, Q).unwrap();
        assert_eq!(p.matrix.get(3, 3), &Q.one());
        for n in 1..=3 {
            let p = duality_pairing(n, Q).unwrap();
            let d = 1usize << n;
            for s in 0..d {
                for t in 0..d {
                    let v = p.matrix.get(s, t);
                    if s != t {
                        assert!(v.is_zero());
                    } else {
                        assert!(v.is_one() || (-v).is_one());
                    }
                }
            }
            assert_eq!(p.matrix.rank(), d);
        }
    }

    #[test]
    fn merge_sign_counts_inversions() {
        assert_eq!(merge_sign(Q, 0b010, 0b001), Q.int(-1));
        assert_eq!(merge_sign(Q, 0b001, 0b010), Q.one());
        assert_eq!(merge_sign(Q, 0b110, 0b001), Q.one());
        assert_eq!(merge_sign(Q, 0b100, 0b011), Q.one());
        assert_eq!(merge_sign(Q, 0b010, 0b101), Q.int(-1));
    }
}
