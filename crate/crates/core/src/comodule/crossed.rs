use alloc::string::String;
use alloc::vec::Vec;

use super::ComoduleAlgebra;
use crate::algebra::{Algebra, Convolution, Hopf};
use crate::error::{Error, Result};
use crate::graded::{GroupCrossedSystem, SystemReport};
use crate::linalg::{LinearMap, SVec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HopfCrossedCondition {
    /// `h⇀1 = ε(h)1`, `h⇀(bc) = (h₁⇀b)(h₂⇀c)`.
    Measuring,
    SigmaNotInvertible,
    /// `1⇀b = b`, `σ(h,1) = ε(h)1 = σ(1,h)`.
    Normalization,
    /// `[g₁⇀(h₁⇀b)]σ(g₂,h₂) = σ(g₁,h₁)(g₂h₂⇀b)`.
    TwistedModule,
    /// `[g₁⇀σ(h₁,ℓ₁)]σ(g₂,h₂ℓ₂) = σ(g₁,h₁)σ(g₂h₂,ℓ)`.
    Cocycle,
}

/// A measuring `H⊗B → B` (index `h * dim B + b`) and a 2-cochain `σ: H⊗H → B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossedSystem {
    pub hopf: Hopf,
    pub base: Algebra,
    pub measuring: LinearMap,
    pub sigma: LinearMap,
    sigma_inv: Option<LinearMap>,
}

impl CrossedSystem {
    /// Checks shapes and stores the convolution inverse of `σ` when it exists.
    pub fn new(hopf: Hopf, base: Algebra, measuring: LinearMap, sigma: LinearMap) -> Result<Self> {
        let (dh, db) = (hopf.dim(), base.dim());
        if hopf.field() != base.field() {
            return Err(Error::ShapeMismatch("H and B over different fields".into()));
        }
        if measuring.domain() != dh * db || measuring.codomain() != db {
            return Err(Error::ShapeMismatch("measuring must map H⊗B → B".into()));
        }
        if sigma.domain() != dh * dh || sigma.codomain() != db {
            return Err(Error::ShapeMismatch("σ must map H⊗H → B".into()));
        }
        let square = hopf.coalgebra.tensor(&hopf.coalgebra, None);
        let sigma_inv = Convolution::new(&square, &base)?.invert(&sigma).ok();
        Ok(CrossedSystem {
            hopf,
            base,
            measuring,
            sigma,
            sigma_inv,
        })
    }

    /// `σ = ε⊗ε`, the smash-product case.
    pub fn smash(hopf: Hopf, base: Algebra, measuring: LinearMap) -> Result<Self> {
        let sigma = trivial_sigma(&hopf, &base);
        Self::new(hopf, base, measuring, sigma)
    }

    /// `h⇀b = ε(h)b`.
    pub fn trivial_measuring(hopf: &Hopf, base: &Algebra) -> LinearMap {
        let db = base.dim();
        LinearMap::from_fn(base.field(), hopf.dim() * db, db, |k| {
            SVec::unit(k % db, base.field()).scale(&hopf.counit_basis(k / db))
        })
    }

    /// The same data over `H = kΓ`.
    pub fn from_group_system(s: &GroupCrossedSystem, hopf: Hopf) -> Result<Self> {
        let (n, db) = (s.group.order(), s.base.dim());
        if hopf.dim() != n {
            return Err(Error::ShapeMismatch("H must be the group algebra of Γ".into()));
        }
        let field = s.base.field();
        let measuring = LinearMap::from_fn(field, n * db, db, |k| {
            s.act(k / db, &SVec::unit(k % db, field))
        });
        let sigma = LinearMap::from_fn(field, n * n, db, |k| s.sigma[k / n][k % n].clone());
        Self::new(hopf, s.base.clone(), measuring, sigma)
    }

    pub fn sigma_inv(&self) -> Option<&LinearMap> {
        self.sigma_inv.as_ref()
    }

    /// `x⇀b` for `x ∈ H`, `b ∈ B`.
    pub fn act(&self, x: &SVec, b: &SVec) -> SVec {
        self.measuring.apply(&x.tensor(b, self.base.dim()))
    }

    /// `σ(x, y)` for `x, y ∈ H`.
    pub fn sigma_of(&self, x: &SVec, y: &SVec) -> SVec {
        self.sigma.apply(&x.tensor(y, self.hopf.dim()))
    }
}

pub(crate) fn trivial_sigma(hopf: &Hopf, base: &Algebra) -> LinearMap {
    let dh = hopf.dim();
    LinearMap::from_fn(base.field(), dh * dh, base.dim(), |k| {
        base.unit()
            .scale(&(&hopf.counit_basis(k / dh) * &hopf.counit_basis(k % dh)))
    })
}

/// Pairs `(x₁, x₂, λ)` of `Δ(eᵢ) = Σ λ x₁ ⊗ x₂` as basis indices.
fn split(h: &Hopf, i: usize) -> Vec<(usize, usize, crate::Scalar)> {
    let d = h.dim();
    h.coalgebra
        .comul_basis(i)
        .iter()
        .map(|(k, c)| (k / d, k % d, c.clone()))
        .collect()
}

pub fn check_crossed_system(s: &CrossedSystem) -> SystemReport<HopfCrossedCondition> {
    use HopfCrossedCondition as C;
    let mut r = SystemReport::new();
    let field = s.base.field();
    let (dh, db) = (s.hopf.dim(), s.base.dim());
    let b = &s.base;
    let h = &s.hopf;
    let e_h = |i: usize| SVec::unit(i, field);
    let e_b = |i: usize| SVec::unit(i, field);
    if s.sigma_inv.is_none() {
        r.record(C::SigmaNotInvertible, &[]);
    }
    for g in 0..dh {
        let eps = h.counit_basis(g);
        if s.act(&e_h(g), b.unit()) != b.unit().scale(&eps) {
            r.record(C::Measuring, &[g]);
        }
        let one_g = s.sigma_of(&e_h(g), h.one());
        let g_one = s.sigma_of(h.one(), &e_h(g));
        if one_g != b.unit().scale(&eps) || g_one != b.unit().scale(&eps) {
            r.record(C::Normalization, &[g]);
        }
        for x in 0..db {
            for y in 0..db {
                if r.full() {
                    return r;
                }
                let lhs = s.act(&e_h(g), b.mul_basis(x, y));
                let mut rhs = SVec::new();
                for (g1, g2, c) in split(h, g) {
                    rhs.axpy(&c, &b.mul(&s.act(&e_h(g1), &e_b(x)), &s.act(&e_h(g2), &e_b(y))));
                }
                if lhs != rhs {
                    r.record(C::Measuring, &[g, x, y]);
                }
            }
        }
    }
    for x in 0..db {
        if s.act(h.one(), &e_b(x)) != e_b(x) {
            r.record(C::Normalization, &[x]);
        }
    }
    let splits: Vec<_> = (0..dh).map(|i| split(h, i)).collect();
    for g in 0..dh {
        for k in 0..dh {
            for x in 0..db {
                if r.full() {
                    return r;
                }
                let mut lhs = SVec::new();
                let mut rhs = SVec::new();
                for (g1, g2, c) in &splits[g] {
                    for (k1, k2, d) in &splits[k] {
                        let cd = c * d;
                        let inner = s.act(&e_h(*k1), &e_b(x));
                        lhs.axpy(&cd, &b.mul(&s.act(&e_h(*g1), &inner), &s.sigma_of(&e_h(*g2), &e_h(*k2))));
                        let prod = h.algebra.mul_basis(*g2, *k2);
                        rhs.axpy(&cd, &b.mul(&s.sigma_of(&e_h(*g1), &e_h(*k1)), &s.act(prod, &e_b(x))));
                    }
                }
                if lhs != rhs {
                    r.record(C::TwistedModule, &[g, k, x]);
                }
            }
            for l in 0..dh {
                if r.full() {
                    return r;
                }
                let mut lhs = SVec::new();
                for (g1, g2, c) in &splits[g] {
                    for (k1, k2, d) in &splits[k] {
                        for (l1, l2, e) in &splits[l] {
                            let coeff = &(c * d) * e;
                            let left = s.act(&e_h(*g1), &s.sigma_of(&e_h(*k1), &e_h(*l1)));
                            let right = s.sigma_of(&e_h(*g2), h.algebra.mul_basis(*k2, *l2));
                            lhs.axpy(&coeff, &b.mul(&left, &right));
                        }
                    }
                }
                let mut rhs = SVec::new();
                for (g1, g2, c) in &splits[g] {
                    for (k1, k2, d) in &splits[k] {
                        let left = s.sigma_of(&e_h(*g1), &e_h(*k1));
                        let right = s.sigma_of(h.algebra.mul_basis(*g2, *k2), &e_h(l));
                        rhs.axpy(&(c * d), &b.mul(&left, &right));
                    }
                }
                if lhs != rhs {
                    r.record(C::Cocycle, &[g, k, l]);
                }
            }
        }
    }
    r
}

/// `B ⋊_σ H` on `b ⊗ h` (index `b * dim H + h`) with coaction `id⊗Δ`,
/// `(b⊗g)(c⊗h) = b(g₁⇀c)σ(g₂,h₁) ⊗ g₃h₂`.
pub fn crossed_product(s: &CrossedSystem) -> Result<ComoduleAlgebra> {
    if let Some((c, w)) = check_crossed_system(s).violations.first() {
        return Err(Error::CrossedSystemViolation(alloc::format!("{c:?} at {w:?}")));
    }
    let field = s.base.field();
    let (dh, db) = (s.hopf.dim(), s.base.dim());
    let h = &s.hopf;
    let delta2 = h.coalgebra.coproduct2();
    let mut labels: Vec<String> = Vec::with_capacity(db * dh);
    for bl in s.base.labels() {
        for hl in h.labels() {
            labels.push(alloc::format!("{bl}⊗{hl}"));
        }
    }
    let unit = s.base.unit().tensor(h.one(), dh);
    let algebra = Algebra::from_table(field, labels, unit, |x, y| {
        let (bi, g) = (x / dh, x % dh);
        let (ci, k) = (y / dh, y % dh);
        let eb = SVec::unit(bi, field);
        let ec = SVec::unit(ci, field);
        let mut out = SVec::new();
        for (t, lambda) in delta2.column(g).iter() {
            let (g1, g2, g3) = (t / (dh * dh), (t / dh) % dh, t % dh);
            let acted = s.act(&SVec::unit(g1, field), &ec);
            let left = s.base.mul(&eb, &acted);
            for (k1, k2, mu) in split(h, k) {
                let sig = s.sigma_of(&SVec::unit(g2, field), &SVec::unit(k1, field));
                let coeff = s.base.mul(&left, &sig);
                let hpart = h.algebra.mul_basis(g3, k2);
                out.axpy(&(lambda * &mu), &coeff.tensor(hpart, dh));
            }
        }
        out
    })?;
    let coaction = LinearMap::from_fn(field, db * dh, db * dh * dh, |x| {
        let (bi, k) = (x / dh, x % dh);
        h.coalgebra
            .comul_basis(k)
            .remap(|t| Some((bi * dh + t / dh) * dh + t % dh))
    });
    ComoduleAlgebra::new(algebra, h.clone(), coaction)
}
