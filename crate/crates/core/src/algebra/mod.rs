//! Finite-dimensional algebras, coalgebras, bialgebras and Hopf algebras given by
//! structure constants, and the operations built directly on them.

mod axioms;
mod convolution;
mod dual;
mod group_algebra;
mod presentation;
mod relative;
mod smash_coproduct;

pub use axioms::{
    check_algebra, check_axioms, check_bialgebra, check_coalgebra, check_hopf, check_structure, AxiomReport, Identity, Violation, MAX_VIOLATIONS};
pub use convolution::{compute_antipode, Convolution};
pub use dual::dual_hopf;
pub use group_algebra::group_hopf_algebra;
pub use presentation::{Presentation, StructureKind};
pub use relative::RelativeTensor;
pub use smash_coproduct::{smash_coproduct, ComoduleCoalgebra, SmashCoproduct};

use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::{Scalar, ScalarField};
use crate::linalg::{LinearMap, SVec, Subspace};

/// `(-1)^{ab}` for parities `a, b ∈ {0, 1}`.
pub fn koszul_sign(field: ScalarField, a: u8, b: u8) -> Scalar {
    if a & b & 1 == 1 {
        field.int(-1)
    } else {
        field.one()
    }
}

/// Where a structure map first fails to respect products or units.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MapDefect {
    Unit,
    Counit(usize),
    Product(usize, usize),
    Coproduct(usize),
}

/// A finite-dimensional associative unital algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    field: ScalarField,
    labels: Vec<String>,
    product: LinearMap,
    unit: SVec,
}

impl Algebra {
    /// `product` maps `A⊗A → A` (index `i * dim + j`); only shapes are checked here.
    pub fn new(field: ScalarField, labels: Vec<String>, product: LinearMap, unit: SVec) -> Result<Self> {
        let d = labels.len();
        if product.domain() != d * d || product.codomain() != d {
            return Err(Error::ShapeMismatch(alloc::format!(
                "product must map {}→{}, got {}→{}",
                d * d,
                d,
                product.domain(),
                product.codomain()
            )));
        }
        if unit.max_index().is_some_and(|m| m >= d) {
            return Err(Error::ShapeMismatch("unit vector out of range".into()));
        }
        Ok(Algebra {
            field,
            labels,
            product,
            unit,
        })
    }

    pub fn from_table(
        field: ScalarField,
        labels: Vec<String>,
        unit: SVec,
        mut table: impl FnMut(usize, usize) -> SVec,
    ) -> Result<Self> {
        let d = labels.len();
        let product = LinearMap::from_fn(field, d * d, d, |k| table(k / d, k % d));
        Self::new(field, labels, product, unit)
    }

    pub fn field(&self) -> ScalarField {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn product(&self) -> &LinearMap {
        &self.product
    }

    pub fn unit(&self) -> &SVec {
        &self.unit
    }

    pub fn basis(&self, i: usize) -> SVec {
        SVec::unit(i, self.field)
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &SVec {
        self.product.column(i * self.dim() + j)
    }

    pub fn mul(&self, a: &SVec, b: &SVec) -> SVec {
        let mut out = SVec::new();
        for (i, x) in a.iter() {
            for (j, y) in b.iter() {
                out.axpy(&(x * y), self.mul_basis(i, j));
            }
        }
        out
    }

    pub fn left_mul(&self, a: &SVec) -> LinearMap {
        LinearMap::from_fn(self.field, self.dim(), self.dim(), |j| self.mul(a, &self.basis(j)))
    }

    pub fn right_mul(&self, a: &SVec) -> LinearMap {
        LinearMap::from_fn(self.field, self.dim(), self.dim(), |j| self.mul(&self.basis(j), a))
    }

    /// Two-sided inverse of `a`, if any.
    pub fn inverse(&self, a: &SVec) -> Option<SVec> {
        let lm = self.left_mul(a).to_matrix();
        let one = self.unit.to_dense(self.dim(), self.field);
        match lm.solve(&one).ok()? {
            crate::linalg::Solution::Consistent { particular, .. } => {
                let x = SVec::from_dense(&particular);
                (self.mul(&x, a) == self.unit && self.mul(a, &x) == self.unit).then_some(x)
            }
            crate::linalg::Solution::Inconsistent { .. } => None,
        }
    }

    pub fn is_commutative(&self) -> bool {
        let d = self.dim();
        (0..d).all(|i| (i + 1..d).all(|j| self.mul_basis(i, j) == self.mul_basis(j, i)))
    }

    /// `span(left · right)`.
    pub fn span_products(&self, left: &Subspace, right: &Subspace) -> Subspace {
        let mut prods = Vec::new();
        for a in left.basis() {
            for b in right.basis() {
                prods.push(self.mul(a, b));
            }
        }
        Subspace::span(self.field, self.dim(), prods)
    }

    /// Product on `A⊗B`, with Koszul signs when parities are given.
    pub fn tensor(&self, other: &Algebra, parities: Option<(&[u8], &[u8])>) -> Algebra {
        let (da, db) = (self.dim(), other.dim());
        let mut labels = Vec::with_capacity(da * db);
        for a in &self.labels {
            for b in &other.labels {
                labels.push(alloc::format!("{a}⊗{b}"));
            }
        }
        let field = self.field;
        let unit = self.unit.tensor(&other.unit, db);
        Algebra::from_table(field, labels, unit, |x, y| {
            let (a, b) = (x / db, x % db);
            let (a2, b2) = (y / db, y % db);
            let sign = match parities {
                Some((pa, pb)) => koszul_sign(field, pb[b], pa[a2]),
                None => field.one(),
            };
            self.mul_basis(a, a2)
                .tensor(other.mul_basis(b, b2), db)
                .scale(&sign)
        })
        .expect("tensor shapes")
    }

    /// Checks that `f: self → target` preserves unit and products.
    pub fn algebra_map_defect(&self, target: &Algebra, f: &LinearMap) -> Option<MapDefect> {
        if f.apply(&self.unit) != target.unit {
            return Some(MapDefect::Unit);
        }
        let d = self.dim();
        for i in 0..d {
            for j in 0..d {
                let lhs = f.apply(self.mul_basis(i, j));
                let rhs = target.mul(f.column(i), f.column(j));
                if lhs != rhs {
                    return Some(MapDefect::Product(i, j));
                }
            }
        }
        None
    }

    pub fn is_algebra_map(&self, target: &Algebra, f: &LinearMap) -> bool {
        self.algebra_map_defect(target, f).is_none()
    }
}

/// Product of `x, y ∈ A⊗A` (first factor major), with Koszul signs when `parity` is given.
pub fn tensor_square_mul(alg: &Algebra, x: &SVec, y: &SVec, parity: Option<&[u8]>) -> SVec {
    let d = alg.dim();
    let field = alg.field();
    let mut out = SVec::new();
    for (k1, c1) in x.iter() {
        let (a, b) = (k1 / d, k1 % d);
        for (k2, c2) in y.iter() {
            let (a2, b2) = (k2 / d, k2 % d);
            let mut coeff = c1 * c2;
            if let Some(p) = parity {
                coeff = &coeff * &koszul_sign(field, p[b], p[a2]);
            }
            let t = alg.mul_basis(a, a2).tensor(alg.mul_basis(b, b2), d);
            out.axpy(&coeff, &t);
        }
    }
    out
}

/// Product of `x, y ∈ L⊗R` in the (unsigned) tensor product algebra.
pub fn tensor_mul(left: &Algebra, right: &Algebra, x: &SVec, y: &SVec) -> SVec {
    let dr = right.dim();
    let mut out = SVec::new();
    for (k1, c1) in x.iter() {
        for (k2, c2) in y.iter() {
            let t = left
                .mul_basis(k1 / dr, k2 / dr)
                .tensor(right.mul_basis(k1 % dr, k2 % dr), dr);
            out.axpy(&(c1 * c2), &t);
        }
    }
    out
}

/// A finite-dimensional coassociative counital coalgebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coalgebra {
    field: ScalarField,
    labels: Vec<String>,
    coproduct: LinearMap,
    counit: LinearMap,
}

impl Coalgebra {
    /// `coproduct: C → C⊗C`, `counit: C → k` (a `1 × dim` map).
    pub fn new(
        field: ScalarField,
        labels: Vec<String>,
        coproduct: LinearMap,
        counit: LinearMap,
    ) -> Result<Self> {
        let d = labels.len();
        if coproduct.domain() != d || coproduct.codomain() != d * d {
            return Err(Error::ShapeMismatch(alloc::format!(
                "coproduct must map {}→{}, got {}→{}",
                d,
                d * d,
                coproduct.domain(),
                coproduct.codomain()
            )));
        }
        if counit.domain() != d || counit.codomain() != 1 {
            return Err(Error::ShapeMismatch("counit must be a 1 x dim row".into()));
        }
        Ok(Coalgebra {
            field,
            labels,
            coproduct,
            counit,
        })
    }

    pub fn field(&self) -> ScalarField {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn coproduct(&self) -> &LinearMap {
        &self.coproduct
    }

    pub fn counit(&self) -> &LinearMap {
        &self.counit
    }

    pub fn comul_basis(&self, i: usize) -> &SVec {
        self.coproduct.column(i)
    }

    pub fn comul(&self, v: &SVec) -> SVec {
        self.coproduct.apply(v)
    }

    pub fn counit_basis(&self, i: usize) -> Scalar {
        self.counit.entry(0, i)
    }

    pub fn counit_of(&self, v: &SVec) -> Scalar {
        self.counit.apply(v).coeff(0, self.field)
    }

    /// `(Δ⊗id)∘Δ`, the canonical three-fold coproduct `c ↦ c₁⊗c₂⊗c₃`.
    pub fn coproduct2(&self) -> LinearMap {
        self.coproduct
            .tensor(&LinearMap::identity(self.field, self.dim()))
            .compose(&self.coproduct)
            .expect("shapes")
    }

    pub fn is_cocommutative(&self, parity: Option<&[u8]>) -> bool {
        let d = self.dim();
        let swap = swap_map(self.field, d, d, parity, parity);
        swap.compose(&self.coproduct).expect("shapes") == self.coproduct
    }

    /// Coalgebra structure on `C⊗D`, with Koszul signs when parities are given.
    pub fn tensor(&self, other: &Coalgebra, parities: Option<(&[u8], &[u8])>) -> Coalgebra {
        let (dc, dd) = (self.dim(), other.dim());
        let n = dc * dd;
        let field = self.field;
        let mut labels = Vec::with_capacity(n);
        for a in &self.labels {
            for b in &other.labels {
                labels.push(alloc::format!("{a}⊗{b}"));
            }
        }
        let coproduct = LinearMap::from_fn(field, n, n * n, |x| {
            let (c, d) = (x / dd, x % dd);
            let mut out = SVec::new();
            for (k1, a) in self.comul_basis(c).iter() {
                let (c1, c2) = (k1 / dc, k1 % dc);
                for (k2, b) in other.comul_basis(d).iter() {
                    let (d1, d2) = (k2 / dd, k2 % dd);
                    let mut coeff = a * b;
                    if let Some((pc, pd)) = parities {
                        coeff = &coeff * &koszul_sign(field, pc[c2], pd[d1]);
                    }
                    out.add_term((c1 * dd + d1) * n + c2 * dd + d2, &coeff);
                }
            }
            out
        });
        let counit = LinearMap::from_fn(field, n, 1, |x| {
            SVec::term(0, &self.counit_basis(x / dd) * &other.counit_basis(x % dd))
        });
        Coalgebra {
            field,
            labels,
            coproduct,
            counit,
        }
    }

    /// Checks that `f: self → target` preserves coproduct and counit.
    pub fn coalgebra_map_defect(&self, target: &Coalgebra, f: &LinearMap) -> Option<MapDefect> {
        let ff = f.tensor(f);
        for i in 0..self.dim() {
            if target.counit_of(f.column(i)) != self.counit_basis(i) {
                return Some(MapDefect::Counit(i));
            }
            if ff.apply(self.comul_basis(i)) != target.comul(f.column(i)) {
                return Some(MapDefect::Coproduct(i));
            }
        }
        None
    }
}

/// The swap `V⊗W → W⊗V`, `v⊗w ↦ (−1)^{|v||w|} w⊗v` when parities are given.
pub fn swap_map(
    field: ScalarField,
    dv: usize,
    dw: usize,
    pv: Option<&[u8]>,
    pw: Option<&[u8]>,
) -> LinearMap {
    LinearMap::from_fn(field, dv * dw, dv * dw, |k| {
        let (v, w) = (k / dw, k % dw);
        let sign = match (pv, pw) {
            (Some(a), Some(b)) => koszul_sign(field, a[v], b[w]),
            _ => field.one(),
        };
        SVec::term(w * dv + v, sign)
    })
}

/// An algebra and a coalgebra on the same basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bialgebra {
    pub algebra: Algebra,
    pub coalgebra: Coalgebra,
}

impl Bialgebra {
    pub fn new(algebra: Algebra, coalgebra: Coalgebra) -> Result<Self> {
        if algebra.dim() != coalgebra.dim() || algebra.field() != coalgebra.field() {
            return Err(Error::ShapeMismatch("algebra and coalgebra disagree".into()));
        }
        Ok(Bialgebra { algebra, coalgebra })
    }

    pub fn field(&self) -> ScalarField {
        self.algebra.field()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }
}

/// A bialgebra together with its antipode.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hopf {
    pub algebra: Algebra,
    pub coalgebra: Coalgebra,
    pub antipode: LinearMap,
}

impl Hopf {
    pub fn new(algebra: Algebra, coalgebra: Coalgebra, antipode: LinearMap) -> Result<Self> {
        let d = algebra.dim();
        if coalgebra.dim() != d || algebra.field() != coalgebra.field() {
            return Err(Error::ShapeMismatch("algebra and coalgebra disagree".into()));
        }
        if antipode.domain() != d || antipode.codomain() != d {
            return Err(Error::ShapeMismatch("antipode must be dim x dim".into()));
        }
        Ok(Hopf {
            algebra,
            coalgebra,
            antipode,
        })
    }

    pub fn field(&self) -> ScalarField {
        self.algebra.field()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn labels(&self) -> &[String] {
        self.algebra.labels()
    }

    pub fn one(&self) -> &SVec {
        self.algebra.unit()
    }

    pub fn bialgebra(&self) -> Bialgebra {
        Bialgebra {
            algebra: self.algebra.clone(),
            coalgebra: self.coalgebra.clone(),
        }
    }

    pub fn counit_basis(&self, i: usize) -> Scalar {
        self.coalgebra.counit_basis(i)
    }

    pub fn mul(&self, a: &SVec, b: &SVec) -> SVec {
        self.algebra.mul(a, b)
    }

    /// Index of the unit when it is a basis vector.
    pub fn unit_index(&self) -> Option<usize> {
        let u = self.one();
        match (u.nnz(), u.iter().next()) {
            (1, Some((i, c))) if c.is_one() => Some(i),
            _ => None,
        }
    }
}
