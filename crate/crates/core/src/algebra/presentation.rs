use alloc::string::String;
use alloc::vec::Vec;

use super::{Algebra, Bialgebra, Coalgebra, Hopf};
use crate::error::{Error, Result};
use crate::field::ScalarField;
use crate::linalg::{LinearMap, SVec};

/// Which level of structure an axiom check targets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StructureKind {
    Algebra,
    Coalgebra,
    Bialgebra,
    Hopf,
}

/// Raw structure constants with every block optional, as read from a file.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Presentation {
    pub field: Option<ScalarField>,
    pub labels: Vec<String>,
    pub parity: Option<Vec<u8>>,
    pub product: Option<LinearMap>,
    pub unit: Option<SVec>,
    pub coproduct: Option<LinearMap>,
    pub counit: Option<LinearMap>,
    pub antipode: Option<LinearMap>,
}

fn missing(block: &str) -> Error {
    Error::InvalidStructure(alloc::format!("missing block `{block}`"))
}

impl Presentation {
    pub fn field(&self) -> Result<ScalarField> {
        self.field.ok_or_else(|| missing("field"))
    }

    pub fn algebra(&self) -> Result<Algebra> {
        Algebra::new(
            self.field()?,
            self.labels.clone(),
            self.product.clone().ok_or_else(|| missing("product"))?,
            self.unit.clone().ok_or_else(|| missing("unit"))?,
        )
    }

    pub fn coalgebra(&self) -> Result<Coalgebra> {
        Coalgebra::new(
            self.field()?,
            self.labels.clone(),
            self.coproduct.clone().ok_or_else(|| missing("coproduct"))?,
            self.counit.clone().ok_or_else(|| missing("counit"))?,
        )
    }

    pub fn bialgebra(&self) -> Result<Bialgebra> {
        Bialgebra::new(self.algebra()?, self.coalgebra()?)
    }

    pub fn hopf(&self) -> Result<Hopf> {
        Hopf::new(
            self.algebra()?,
            self.coalgebra()?,
            self.antipode.clone().ok_or_else(|| missing("antipode"))?,
        )
    }

    pub fn from_algebra(a: &Algebra) -> Self {
        Presentation {
            field: Some(a.field()),
            labels: a.labels().to_vec(),
            product: Some(a.product().clone()),
            unit: Some(a.unit().clone()),
            ..Default::default()
        }
    }

    pub fn from_coalgebra(c: &Coalgebra) -> Self {
        Presentation {
            field: Some(c.field()),
            labels: c.labels().to_vec(),
            coproduct: Some(c.coproduct().clone()),
            counit: Some(c.counit().clone()),
            ..Default::default()
        }
    }

    pub fn from_hopf(h: &Hopf) -> Self {
        Presentation {
            coproduct: Some(h.coalgebra.coproduct().clone()),
            counit: Some(h.coalgebra.counit().clone()),
            antipode: Some(h.antipode.clone()),
            ..Self::from_algebra(&h.algebra)
        }
    }

    pub fn with_parity(mut self, parity: Vec<u8>) -> Self {
        self.parity = Some(parity);
        self
    }
}
