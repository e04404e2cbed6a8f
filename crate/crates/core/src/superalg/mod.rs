//! ℤ/2-graded linear algebra and Hopf superalgebras with Koszul signs.

mod decompose;
mod exterior;

pub use decompose::{decompose, even_quotient, odd_cotangent, odd_primitives, Cotangent, DecompositionResult, EvenQuotient};
pub use exterior::{duality_pairing, exterior_hopf, DualityPairing, ExteriorHopf};

use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{check_algebra, check_hopf, swap_map, Algebra, AxiomReport, Coalgebra, Hopf};
use crate::error::{Error, Result};
use crate::field::ScalarField;
use crate::linalg::{LinearMap, Matrix, SVec, Subspace};

/// A vector space with a parity on each basis vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperVectorSpace {
    field: ScalarField,
    parity: Vec<u8>,
}

impl SuperVectorSpace {
    pub fn new(field: ScalarField, parity: Vec<u8>) -> Result<Self> {
        field.require_odd_characteristic()?;
        if parity.iter().any(|&p| p > 1) {
            return Err(Error::InvalidStructure("parity entries must be 0 or 1".into()));
        }
        Ok(SuperVectorSpace { field, parity })
    }

    pub fn purely_odd(field: ScalarField, dim: usize) -> Result<Self> {
        Self::new(field, alloc::vec![1; dim])
    }

    pub fn purely_even(field: ScalarField, dim: usize) -> Result<Self> {
        Self::new(field, alloc::vec![0; dim])
    }

    pub fn field(&self) -> ScalarField {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.parity.len()
    }

    pub fn even_dim(&self) -> usize {
        self.parity.iter().filter(|&&p| p == 0).count()
    }

    pub fn odd_dim(&self) -> usize {
        self.dim() - self.even_dim()
    }

    pub fn parity(&self) -> &[u8] {
        &self.parity
    }

    /// The span of the basis vectors of parity `p`.
    pub fn component(&self, p: u8) -> Subspace {
        let vecs = (0..self.dim())
            .filter(|&i| self.parity[i] == p)
            .map(|i| SVec::unit(i, self.field));
        Subspace::span(self.field, self.dim(), vecs)
    }

    /// `Some(p)` when `v` is homogeneous of parity `p`; zero counts as even.
    pub fn degree_of(&self, v: &SVec) -> Option<u8> {
        let mut seen = None;
        for (i, _) in v.iter() {
            match seen {
                None => seen = Some(self.parity[i]),
                Some(p) if p != self.parity[i] => return None,
                _ => {}
            }
        }
        Some(seen.unwrap_or(0))
    }

    /// The part of `v` of parity `p`.
    pub fn part(&self, v: &SVec, p: u8) -> SVec {
        v.remap(|i| (self.parity[i] == p).then_some(i))
    }
}

/// The supersymmetry `c_{V,W}: v⊗w ↦ (−1)^{|v||w|} w⊗v`.
pub fn koszul_swap(v: &SuperVectorSpace, w: &SuperVectorSpace) -> LinearMap {
    swap_map(v.field, v.dim(), w.dim(), Some(v.parity()), Some(w.parity()))
}

fn report_error(what: &str, report: &AxiomReport) -> Error {
    let first = &report.violations[0];
    Error::InvalidStructure(alloc::format!("{what}: {} at {:?}", first.identity, first.witness))
}

/// A superalgebra on a homogeneous basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperAlgebra {
    pub algebra: Algebra,
    pub space: SuperVectorSpace,
}

impl SuperAlgebra {
    pub fn new(algebra: Algebra, parity: Vec<u8>) -> Result<Self> {
        if parity.len() != algebra.dim() {
            return Err(Error::ShapeMismatch("one parity per basis vector".into()));
        }
        let space = SuperVectorSpace::new(algebra.field(), parity)?;
        let report = check_algebra(&algebra, Some(space.parity()));
        if !report.passed() {
            return Err(report_error("not a superalgebra", &report));
        }
        Ok(SuperAlgebra { algebra, space })
    }

    pub fn parity(&self) -> &[u8] {
        self.space.parity()
    }

    /// `ab = (−1)^{|a||b|}ba` on all basis pairs.
    pub fn is_super_commutative(&self) -> bool {
        let a = &self.algebra;
        let d = a.dim();
        let field = a.field();
        let swap = swap_map(field, d, d, Some(self.parity()), Some(self.parity()));
        a.product().compose(&swap).expect("square shapes") == *a.product()
    }
}

/// `A⊗̲B` with `(a⊗b)(a′⊗b′) = (−1)^{|b||a′|} aa′⊗bb′`.
pub fn super_tensor_product(a: &SuperAlgebra, b: &SuperAlgebra) -> Result<SuperAlgebra> {
    if a.algebra.field() != b.algebra.field() {
        return Err(Error::ShapeMismatch("factors live over different fields".into()));
    }
    let algebra = a.algebra.tensor(&b.algebra, Some((a.parity(), b.parity())));
    SuperAlgebra::new(algebra, tensor_parity(a.parity(), b.parity()))
}

fn tensor_parity(pa: &[u8], pb: &[u8]) -> Vec<u8> {
    pa.iter().flat_map(|&x| pb.iter().map(move |&y| x ^ y)).collect()
}

/// A Hopf superalgebra on a homogeneous basis; construction runs the full super axiom suite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperHopf {
    pub hopf: Hopf,
    pub space: SuperVectorSpace,
}

impl SuperHopf {
    pub fn new(hopf: Hopf, parity: Vec<u8>) -> Result<Self> {
        if parity.len() != hopf.dim() {
            return Err(Error::ShapeMismatch("one parity per basis vector".into()));
        }
        let space = SuperVectorSpace::new(hopf.field(), parity)?;
        let report = check_hopf(&hopf, Some(space.parity()));
        if !report.passed() {
            return Err(report_error("not a Hopf superalgebra", &report));
        }
        Ok(SuperHopf { hopf, space })
    }

    pub fn purely_even(hopf: Hopf) -> Result<Self> {
        let d = hopf.dim();
        Self::new(hopf, alloc::vec![0; d])
    }

    pub fn field(&self) -> ScalarField {
        self.hopf.field()
    }

    pub fn dim(&self) -> usize {
        self.hopf.dim()
    }

    pub fn parity(&self) -> &[u8] {
        self.space.parity()
    }

    pub fn super_algebra(&self) -> SuperAlgebra {
        SuperAlgebra {
            algebra: self.hopf.algebra.clone(),
            space: self.space.clone(),
        }
    }

    pub fn is_super_commutative(&self) -> bool {
        self.super_algebra().is_super_commutative()
    }

    /// `Δ = c∘Δ`.
    pub fn is_super_cocommutative(&self) -> bool {
        self.hopf.coalgebra.is_cocommutative(Some(self.parity()))
    }

    /// `A⊗̲B` as a Hopf superalgebra with antipode `S⊗S`.
    pub fn tensor(&self, other: &SuperHopf) -> Result<SuperHopf> {
        let parities = Some((self.parity(), other.parity()));
        let algebra = self.hopf.algebra.tensor(&other.hopf.algebra, parities);
        let coalgebra = self.hopf.coalgebra.tensor(&other.hopf.coalgebra, parities);
        let antipode = self.hopf.antipode.tensor(&other.hopf.antipode);
        SuperHopf::new(
            Hopf::new(algebra, coalgebra, antipode)?,
            tensor_parity(self.parity(), other.parity()),
        )
    }

    /// The same structure on the basis given by the columns of `change`, which must be
    /// parity-homogeneous; the new parities are read off the columns.
    pub fn transport(&self, change: &LinearMap) -> Result<SuperHopf> {
        let field = self.field();
        let d = self.dim();
        let back = change.inverse()?;
        let parity = change
            .columns()
            .iter()
            .map(|c| {
                self.space
                    .degree_of(c)
                    .ok_or_else(|| Error::InvalidStructure("change of basis mixes parities".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        let h = &self.hopf;
        let labels: Vec<_> = (0..d).map(|i| alloc::format!("b{i}")).collect();
        let product = back.compose(h.algebra.product())?.compose(&change.tensor(change))?;
        let algebra = Algebra::new(field, labels.clone(), product, back.apply(h.algebra.unit()))?;
        let coproduct = back.tensor(&back).compose(h.coalgebra.coproduct())?.compose(change)?;
        let counit = h.coalgebra.counit().compose(change)?;
        let coalgebra = Coalgebra::new(field, labels, coproduct, counit)?;
        let antipode = back.compose(&h.antipode)?.compose(change)?;
        SuperHopf::new(Hopf::new(algebra, coalgebra, antipode)?, parity)
    }

    /// A seeded random parity-preserving change of basis: a random invertible block on each
    /// parity component.
    pub fn scrambled(&self, seed: u64) -> Result<(SuperHopf, LinearMap)> {
        let field = self.field();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut cols = Vec::new();
        for p in [0u8, 1] {
            let idx: Vec<usize> = (0..self.dim()).filter(|&i| self.parity()[i] == p).collect();
            let block = loop {
                let rows: Vec<Vec<_>> = idx
                    .iter()
                    .map(|_| idx.iter().map(|_| field.int(rng.gen_range(-2..=2))).collect())
                    .collect();
                let m = Matrix::from_rows(field, rows)?;
                if m.rank() == idx.len() {
                    break m;
                }
            };
            for c in 0..idx.len() {
                let mut v = SVec::new();
                for (r, &i) in idx.iter().enumerate() {
                    v.add_term(i, block.get(r, c));
                }
                cols.push(v);
            }
        }
        let change = LinearMap::from_columns(field, self.dim(), cols)?;
        Ok((self.transport(&change)?, change))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::group_hopf_algebra;
    use crate::group::GroupTable;

    const Q: ScalarField = ScalarField::Rationals;

    #[test]
    fn even_swap_is_transposition() {
        let v = SuperVectorSpace::purely_even(Q, 2).unwrap();
        let w = SuperVectorSpace::purely_even(Q, 3).unwrap();
        let c = koszul_swap(&v, &w);
        for i in 0..2 {
            for j in 0..3 {
                assert_eq!(c.column(i * 3 + j), &SVec::unit(j * 2 + i, Q));
            }
        }
    }

    #[test]
    fn odd_swap_has_sign() {
        let v = SuperVectorSpace::purely_odd(Q, 1).unwrap();
        let c = koszul_swap(&v, &v);
        assert_eq!(c.column(0), &SVec::term(0, Q.int(-1)));
    }

    #[test]
    fn swap_is_an_involution() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..20 {
            let pv: Vec<u8> = (0..rng.gen_range(1..5)).map(|_| rng.gen_range(0..2)).collect();
            let pw: Vec<u8> = (0..rng.gen_range(1..5)).map(|_| rng.gen_range(0..2)).collect();
            let v = SuperVectorSpace::new(Q, pv).unwrap();
            let w = SuperVectorSpace::new(Q, pw).unwrap();
            let round = koszul_swap(&w, &v).compose(&koszul_swap(&v, &w)).unwrap();
            assert_eq!(round, LinearMap::identity(Q, v.dim() * w.dim()));
        }
    }

    #[test]
    fn characteristic_two_is_rejected() {
        let f2 = ScalarField::prime(2).unwrap();
        assert_eq!(SuperVectorSpace::purely_odd(f2, 1).unwrap_err(), Error::CharacteristicTwo);
        assert!(exterior_hopf(2, f2).is_err());
    }

    #[test]
    fn even_tensor_is_ordinary() {
        let a = crate::corpus::truncated_polynomials(2, Q);
        let b = crate::corpus::matrix_algebra(2, Q);
        let sa = SuperAlgebra::new(a.clone(), alloc::vec![0; 2]).unwrap();
        let sb = SuperAlgebra::new(b.clone(), alloc::vec![0; 4]).unwrap();
        assert_eq!(super_tensor_product(&sa, &sb).unwrap().algebra, a.tensor(&b, None));
    }

    #[test]
    fn exterior_tensor_is_exterior() {
        let l1 = exterior_hopf(1, Q).unwrap().hopf.super_algebra();
        let t = super_tensor_product(&l1, &l1).unwrap();
        let l2 = exterior_hopf(2, Q).unwrap().hopf.super_algebra();
        // (1⊗w)(v⊗1) = −v⊗w
        assert_eq!(t.algebra.mul_basis(1, 2), &SVec::term(3, Q.int(-1)));
        // 1⊗1, v⊗1, 1⊗w, v⊗w ↦ 1, v₁, v₂, v₁∧v₂
        let iso = LinearMap::from_fn(Q, 4, 4, |k| SVec::unit([0, 2, 1, 3][k], Q));
        assert!(t.algebra.is_algebra_map(&l2.algebra, &iso));
        assert!(t.is_super_commutative());
    }

    #[test]
    fn super_commutativity_propagates() {
        let h = group_hopf_algebra(&GroupTable::cyclic(2), Q);
        let even = SuperHopf::purely_even(h).unwrap();
        let l = exterior_hopf(2, Q).unwrap().hopf;
        let t = l.tensor(&even).unwrap();
        assert!(t.is_super_commutative());
        let m2 = SuperAlgebra::new(crate::corpus::matrix_algebra(2, Q), alloc::vec![0, 1, 1, 0]).unwrap();
        assert!(!super_tensor_product(&m2, &l.super_algebra()).unwrap().is_super_commutative());
    }

    #[test]
    fn scrambling_preserves_axioms() {
        let h = SuperHopf::purely_even(group_hopf_algebra(&GroupTable::cyclic(2), Q)).unwrap();
        let a = exterior_hopf(2, Q).unwrap().hopf.tensor(&h).unwrap();
        let (b, change) = a.scrambled(7).unwrap();
        assert!(b.is_super_commutative());
        assert_eq!(b.space.odd_dim(), 4);
        assert!(change.is_bijective());
    }

    #[test]
    fn odd_squares_vanish() {
        let a = exterior_hopf(3, Q).unwrap().hopf;
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let mut v = SVec::new();
            for i in 0..8 {
                if a.parity()[i] == 1 {
                    v.add_term(i, &Q.int(rng.gen_range(-3..=3)));
                }
            }
            assert!(a.hopf.algebra.mul(&v, &v).is_zero());
        }
    }
}
