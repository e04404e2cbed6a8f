use super::{Algebra, Bialgebra, Coalgebra, Hopf};
use crate::error::{Error, Result};
use crate::linalg::{LinearMap, SVec, Solution};

/// The convolution algebra `Hom(C, A)`, `(f * g)(c) = f(c₁) g(c₂)`.
#[derive(Clone, Copy, Debug)]
pub struct Convolution<'a> {
    pub coalgebra: &'a Coalgebra,
    pub algebra: &'a Algebra,
}

impl<'a> Convolution<'a> {
    pub fn new(coalgebra: &'a Coalgebra, algebra: &'a Algebra) -> Result<Self> {
        if coalgebra.field() != algebra.field() {
            return Err(Error::ShapeMismatch("coalgebra and algebra over different fields".into()));
        }
        Ok(Convolution { coalgebra, algebra })
    }

    /// `Hom(H, H)` for a Hopf algebra.
    pub fn on_hopf(h: &'a Hopf) -> Self {
        Convolution {
            coalgebra: &h.coalgebra,
            algebra: &h.algebra,
        }
    }

    fn dims(&self) -> (usize, usize) {
        (self.coalgebra.dim(), self.algebra.dim())
    }

    fn check(&self, f: &LinearMap) -> Result<()> {
        let (dc, da) = self.dims();
        if f.domain() != dc || f.codomain() != da {
            return Err(Error::ShapeMismatch(alloc::format!(
                "convolution element must map {dc}→{da}, got {}→{}",
                f.domain(),
                f.codomain()
            )));
        }
        Ok(())
    }

    /// `c ↦ ε(c)1`.
    pub fn unit(&self) -> LinearMap {
        let (dc, da) = self.dims();
        LinearMap::from_fn(self.algebra.field(), dc, da, |c| {
            self.algebra.unit().scale(&self.coalgebra.counit_basis(c))
        })
    }

    pub fn convolve(&self, f: &LinearMap, g: &LinearMap) -> Result<LinearMap> {
        self.check(f)?;
        self.check(g)?;
        let (dc, da) = self.dims();
        Ok(LinearMap::from_fn(self.algebra.field(), dc, da, |c| {
            let mut out = SVec::new();
            for (k, lambda) in self.coalgebra.comul_basis(c).iter() {
                let (c1, c2) = (k / dc, k % dc);
                out.axpy(lambda, &self.algebra.mul(f.column(c1), g.column(c2)));
            }
            out
        }))
    }

    /// Left convolution by `f` as an operator on `Hom(C, A)` in
    /// [`LinearMap::to_coordinates`] order.
    pub fn left_operator(&self, f: &LinearMap) -> Result<LinearMap> {
        self.check(f)?;
        let (dc, da) = self.dims();
        let n = dc * da;
        let field = self.algebra.field();
        let mut cols = alloc::vec![SVec::new(); n];
        for c in 0..dc {
            for (k, lambda) in self.coalgebra.comul_basis(c).iter() {
                let (c1, j) = (k / dc, k % dc);
                for a in 0..da {
                    let prod = self.algebra.mul(f.column(c1), &SVec::unit(a, field));
                    let shifted = prod.remap(|r| Some(c * da + r)).scale(lambda);
                    let col = &mut cols[j * da + a];
                    *col = col.add(&shifted);
                }
            }
        }
        LinearMap::from_columns(field, n, cols)
    }

    pub fn is_invertible(&self, f: &LinearMap) -> Result<bool> {
        Ok(self.left_operator(f)?.is_bijective())
    }

    /// Solves `f * g = unit` and verifies `g * f = unit` as well.
    pub fn invert(&self, f: &LinearMap) -> Result<LinearMap> {
        let (dc, da) = self.dims();
        let field = self.algebra.field();
        let op = self.left_operator(f)?.to_matrix();
        let unit = self.unit();
        let solution = op.solve(&unit.to_coordinates())?;
        let g = match solution {
            Solution::Consistent { particular, kernel } if kernel.is_empty() => {
                LinearMap::from_coordinates(field, dc, da, &particular)
            }
            _ => return Err(Error::NotConvolutionInvertible),
        };
        if self.convolve(f, &g)? != unit || self.convolve(&g, f)? != unit {
            return Err(Error::NotConvolutionInvertible);
        }
        Ok(g)
    }
}

/// Upgrades a bialgebra to a Hopf algebra by inverting the identity under convolution.
pub fn compute_antipode(b: &Bialgebra) -> Result<Hopf> {
    let conv = Convolution::new(&b.coalgebra, &b.algebra)?;
    let id = LinearMap::identity(b.field(), b.dim());
    let s = conv.invert(&id).map_err(|e| match e {
        Error::NotConvolutionInvertible => Error::NoAntipode,
        other => other,
    })?;
    Hopf::new(b.algebra.clone(), b.coalgebra.clone(), s)
}
