use alloc::vec::Vec;

use super::exterior::exterior_named;
use super::{ExteriorHopf, SuperHopf, SuperVectorSpace};
use crate::algebra::{dual_hopf, Algebra, Coalgebra, Hopf};
use crate::cohomology::{colinear_splitting_nilpotent, nilpotent_powers, restrict_coaction};
use crate::comodule::{
    coinvariants, section_to_crossed_system, subspace_labels, ComoduleAlgebra, CrossedSystem, Section,
};
use crate::error::{Error, Result};
use crate::linalg::{LinearMap, Matrix, Quotient, SVec, Subspace};

fn bug(what: &str) -> Error {
    Error::Internal(what.into())
}

/// `H = A/A₁A` with the quotient map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvenQuotient {
    pub hopf: Hopf,
    pub pi: LinearMap,
    /// `A₁A = A₁² ⊕ A₁`.
    pub ideal: Subspace,
}

pub fn even_quotient(a: &SuperHopf) -> Result<EvenQuotient> {
    if !a.is_super_commutative() {
        return Err(Error::NotSuperCommutative);
    }
    let h = &a.hopf;
    let field = a.field();
    let d = a.dim();
    let odd = a.space.component(1);
    let ideal = odd.sum(&h.algebra.span_products(&odd, &Subspace::full(field, d)));
    let q = Quotient::new(ideal.clone());
    let lift = |x: usize| q.lift(&SVec::unit(x, field));
    let n = q.dim();
    let labels: Vec<_> = q.complement().iter().map(|&i| h.labels()[i].clone()).collect();
    let algebra = Algebra::from_table(field, labels.clone(), q.project(h.algebra.unit()), |x, y| {
        q.project(&h.algebra.mul(&lift(x), &lift(y)))
    })?;
    let pi = q.projection();
    let pi2 = pi.tensor(&pi);
    for v in ideal.basis() {
        if !pi2.apply(&h.coalgebra.comul(v)).is_zero()
            || !h.coalgebra.counit().apply(v).is_zero()
            || !ideal.contains(&h.antipode.apply(v))
        {
            return Err(bug("A₁A is not a Hopf ideal"));
        }
    }
    let coproduct = LinearMap::from_fn(field, n, n * n, |x| pi2.apply(&h.coalgebra.comul(&lift(x))));
    let counit = h.coalgebra.counit().compose(&q.section())?;
    let coalgebra = Coalgebra::new(field, labels, coproduct, counit)?;
    let antipode = pi.compose(&h.antipode)?.compose(&q.section())?;
    let hopf = Hopf::new(algebra, coalgebra, antipode)?;
    if !crate::algebra::check_hopf(&hopf, None).passed() {
        return Err(bug("A/A₁A fails the Hopf axioms"));
    }
    nilpotent_powers(&h.algebra, &ideal).map_err(|_| bug("A₁A is not nilpotent"))?;
    Ok(EvenQuotient { hopf, pi, ideal })
}

/// `W = A₁/A₀⁺A₁`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cotangent {
    pub space: SuperVectorSpace,
    /// `A₀⁺A₁`.
    pub relations: Subspace,
    /// `A → W`, zero on `A₀`.
    pub projection: LinearMap,
}

fn augmentation_part(a: &SuperHopf, sub: &Subspace) -> Result<Subspace> {
    let eps = a.hopf.coalgebra.counit().compose(&sub.inclusion())?;
    let inc = sub.inclusion();
    let vecs: Vec<SVec> = Subspace::kernel(&eps).basis().iter().map(|v| inc.apply(v)).collect();
    Ok(Subspace::span(a.field(), a.dim(), vecs))
}

pub fn odd_cotangent(a: &SuperHopf) -> Result<Cotangent> {
    let field = a.field();
    let d = a.dim();
    let alg = &a.hopf.algebra;
    let even = a.space.component(0);
    let odd = a.space.component(1);
    let relations = alg.span_products(&augmentation_part(a, &even)?, &odd);
    // the odd part of A⁺/(A⁺)²
    let plus = augmentation_part(a, &Subspace::full(field, d))?;
    let square = alg.span_products(&plus, &plus);
    let square_odd = Subspace::span(field, d, square.basis().iter().map(|v| a.space.part(v, 1)));
    if square_odd != relations {
        return Err(bug("(A⁺)² ∩ A₁ ≠ A₀⁺A₁"));
    }
    let q = Quotient::new(even.sum(&relations));
    let space = SuperVectorSpace::purely_odd(field, q.dim())?;
    Ok(Cotangent {
        space,
        relations,
        projection: q.projection(),
    })
}

/// Odd `u ∈ A*` with `u(ab) = u(a)ε(b) + ε(a)u(b)`, in dual-basis coordinates.
pub fn odd_primitives(a: &SuperHopf) -> Subspace {
    let field = a.field();
    let d = a.dim();
    let alg = &a.hopf.algebra;
    let eps: Vec<_> = (0..d).map(|i| a.hopf.counit_basis(i)).collect();
    let constraints = LinearMap::from_fn(field, d, d + d * d, |k| {
        let mut col = SVec::new();
        if a.parity()[k] == 0 {
            col.add_term(k, &field.one());
        }
        for i in 0..d {
            for j in 0..d {
                let mut c = alg.mul_basis(i, j).coeff(k, field);
                if i == k {
                    c = &c - &eps[j];
                }
                if j == k {
                    c = &c - &eps[i];
                }
                col.add_term(d + i * d + j, &c);
            }
        }
        col
    });
    Subspace::kernel(&constraints)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionResult {
    pub hopf: Hopf,
    pub pi: LinearMap,
    pub cotangent: Cotangent,
    /// Unit-preserving colinear splitting `H → A₀ ⊂ A`.
    pub phi: LinearMap,
    /// Odd primitives of `A*`, echelon basis.
    pub primitives: Subspace,
    /// `B = A^{coH}`.
    pub coinvariants: Subspace,
    pub exterior: ExteriorHopf,
    /// `A → Λ(W)`.
    pub delta: LinearMap,
    /// `B → Λ(W)` on the echelon basis of `B`.
    pub gamma: LinearMap,
    /// `A → Λ(W)⊗̲H`, index `λ * dim H + h`.
    pub alpha: LinearMap,
    pub target: SuperHopf,
}

pub fn decompose(a: &SuperHopf) -> Result<DecompositionResult> {
    let field = a.field();
    field.require_odd_characteristic()?;
    let quotient = even_quotient(a)?;
    let h = quotient.hopf.clone();
    let pi = quotient.pi.clone();
    let (d, dh) = (a.dim(), h.dim());
    let alg = &a.hopf.algebra;
    for i in 0..d {
        if a.parity()[i] == 1 && !alg.mul_basis(i, i).is_zero() {
            return Err(bug("odd basis vector does not square to zero"));
        }
    }
    let coaction = LinearMap::identity(field, d)
        .tensor(&pi)
        .compose(a.hopf.coalgebra.coproduct())?;
    let comod = ComoduleAlgebra::new(alg.clone(), h.clone(), coaction)?;

    // a unit-preserving colinear splitting through the even part
    let even = a.space.component(0);
    let even_labels = subspace_labels(&even, alg.labels(), "a");
    let a0 = ComoduleAlgebra::new(
        alg.subalgebra(&even, even_labels)?,
        h.clone(),
        restrict_coaction(&comod.coaction, dh, &even)?,
    )?;
    let split = colinear_splitting_nilpotent(&a0, &pi.compose(&even.inclusion())?)?;
    let phi = even.inclusion().compose(&split.phi)?;
    let section = Section::new(&comod, phi.clone())?;
    let cleft = section_to_crossed_system(&comod, &section)?;
    let base = &cleft.coinvariants.algebra;
    if cleft.system.measuring != CrossedSystem::trivial_measuring(&h, base) {
        return Err(bug("measuring of a super-commutative A is not trivial"));
    }
    let b = coinvariants(&comod)?.subspace;
    let cotangent = odd_cotangent(a)?;
    coinvariant_claims(a, &b, &cotangent)?;

    // δ through the odd primitives of A*
    let primitives = odd_primitives(a);
    let n = primitives.dim();
    if n != cotangent.space.dim() {
        return Err(bug("dim U ≠ dim W"));
    }
    let dual = dual_hopf(&a.hopf);
    let words = 1usize << n;
    let iota: Vec<SVec> = (0..words)
        .map(|mask| {
            (0..n)
                .filter(|i| mask >> i & 1 == 1)
                .fold(dual.one().clone(), |acc, i| dual.algebra.mul(&acc, &primitives.basis()[i]))
        })
        .collect();
    // W′ is the basis of W dual to the primitives; Λ(g) rewrites it in the echelon basis of W
    let w_reps: Vec<usize> = (0..cotangent.space.dim())
        .map(|j| {
            (0..d)
                .find(|&x| cotangent.projection.column(x) == &SVec::unit(j, field))
                .ok_or_else(|| bug("W basis vector without a basis representative"))
        })
        .collect::<Result<_>>()?;
    let pairing = Matrix::from_rows(
        field,
        (0..n)
            .map(|i| w_reps.iter().map(|&x| primitives.basis()[i].coeff(x, field)).collect())
            .collect(),
    )?;
    let change = pairing.invert().map_err(|_| bug("odd primitives do not separate W"))?;
    let exterior = exterior_named(n, field, "w")?;
    let ext_alg = &exterior.hopf.hopf.algebra;
    let g: Vec<SVec> = (0..n)
        .map(|i| {
            let mut v = SVec::new();
            for j in 0..n {
                v.add_term(1 << j, change.get(j, i));
            }
            v
        })
        .collect();
    let wedge_g = LinearMap::from_fn(field, words, words, |mask| {
        (0..n)
            .filter(|i| mask >> i & 1 == 1)
            .fold(SVec::unit(0, field), |acc, i| ext_alg.mul(&acc, &g[i]))
    });
    let delta_dual = LinearMap::from_fn(field, d, words, |x| {
        let mut v = SVec::new();
        for (mask, f) in iota.iter().enumerate() {
            v.add_term(mask, &f.coeff(x, field));
        }
        v
    });
    let delta = wedge_g.compose(&delta_dual)?;
    let ext_eps = exterior.hopf.hopf.coalgebra.counit();
    if alg.algebra_map_defect(ext_alg, &delta).is_some()
        || ext_eps.compose(&delta)? != *a.hopf.coalgebra.counit()
        || (0..d).any(|x| {
            let v = delta.column(x);
            !v.is_zero() && exterior.hopf.space.degree_of(v) != Some(a.parity()[x])
        })
    {
        return Err(bug("δ is not an augmented superalgebra map"));
    }
    let gamma = delta.compose(&b.inclusion())?;
    if !gamma.is_bijective() {
        return Err(bug("γ: B → Λ(W) is not bijective"));
    }

    let target = exterior.hopf.tensor(&SuperHopf::purely_even(h.clone())?)?;
    let alpha = delta.tensor(&pi).compose(a.hopf.coalgebra.coproduct())?;
    verify_alpha(a, &comod, &target, &h, &alpha, words)?;
    Ok(DecompositionResult {
        hopf: h,
        pi,
        cotangent,
        phi,
        primitives,
        coinvariants: b,
        exterior,
        delta,
        gamma,
        alpha,
        target,
    })
}

/// `B₀⁺ = B₁²`, `B⁺/(B⁺)²` odd, and `W_B ≅ W`.
fn coinvariant_claims(a: &SuperHopf, b: &Subspace, cotangent: &Cotangent) -> Result<()> {
    let field = a.field();
    let d = a.dim();
    let alg = &a.hopf.algebra;
    let b0 = Subspace::span(field, d, b.basis().iter().map(|v| a.space.part(v, 0)));
    let b1 = Subspace::span(field, d, b.basis().iter().map(|v| a.space.part(v, 1)));
    if b0.dim() + b1.dim() != b.dim() {
        return Err(bug("coinvariants are not a super-subspace"));
    }
    let b0_plus = augmentation_part(a, &b0)?;
    let b1_sq = alg.span_products(&b1, &b1);
    if b0_plus != b1_sq {
        return Err(bug("B₀⁺ ≠ B₁²"));
    }
    if !alg.span_products(&b0_plus, &b0_plus).sum(&b1_sq).contains_subspace(&b0_plus) {
        return Err(bug("B⁺/(B⁺)² has an even part"));
    }
    let wb_dim = b1.dim() - alg.span_products(&b0_plus, &b1).dim();
    let induced = cotangent.projection.compose(&b1.inclusion())?;
    if wb_dim != cotangent.space.dim() || induced.rank() != cotangent.space.dim() {
        return Err(bug("W_B → W is not an isomorphism"));
    }
    Ok(())
}

fn verify_alpha(
    a: &SuperHopf,
    comod: &ComoduleAlgebra,
    target: &SuperHopf,
    h: &Hopf,
    alpha: &LinearMap,
    words: usize,
) -> Result<()> {
    let field = a.field();
    let dh = h.dim();
    if !alpha.is_bijective() {
        return Err(bug("α is not bijective"));
    }
    if a.hopf.algebra.algebra_map_defect(&target.hopf.algebra, alpha).is_some()
        || (0..a.dim()).any(|x| target.space.degree_of(alpha.column(x)) != Some(a.parity()[x]))
    {
        return Err(bug("α is not a superalgebra map"));
    }
    let target_coaction = LinearMap::identity(field, words).tensor(h.coalgebra.coproduct());
    let lhs = alpha.tensor(&LinearMap::identity(field, dh)).compose(&comod.coaction)?;
    if lhs != target_coaction.compose(alpha)? {
        return Err(bug("α is not colinear"));
    }
    if target.hopf.coalgebra.counit().compose(alpha)? != *a.hopf.coalgebra.counit() {
        return Err(bug("α is not augmented"));
    }
    Ok(())
}
