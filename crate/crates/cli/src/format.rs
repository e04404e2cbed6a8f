//! The JSON presentation format: sparse blocks, parts, and eager validation.

use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;

use hopfkit_core::algebra::{
    check_algebra, check_coalgebra, check_hopf, AxiomReport, Algebra, Bialgebra, Coalgebra,
    ComoduleCoalgebra, Hopf, Presentation,
};
use hopfkit_core::cohomology::LeftModule;
use hopfkit_core::comodule::{check_crossed_system, graded_to_comodule, ComoduleAlgebra, CrossedSystem};
use hopfkit_core::graded::{check_grading, GradedAlgebra, GroupCrossedSystem};
use hopfkit_core::group::GroupTable;
use hopfkit_core::linalg::{LinearMap, SVec};
use hopfkit_core::superalg::SuperHopf;
use hopfkit_core::{Error as CoreError, Scalar, ScalarField};
use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};
use serde_json::Value;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, thiserror::Error)]
pub enum InputError {
    #[error("ParseError at {location}: {message}")]
    Parse { location: String, message: String },
    #[error("ValidationError in `{identity}`: {message}{}", witness_suffix(.witness))]
    Validation {
        identity: String,
        witness: Vec<usize>,
        message: String,
    },
}

fn witness_suffix(w: &[usize]) -> String {
    if w.is_empty() {
        String::new()
    } else {
        format!(" (witness {w:?})")
    }
}

impl InputError {
    pub fn parse(location: impl Into<String>, message: impl Into<String>) -> Self {
        InputError::Parse {
            location: location.into(),
            message: message.into(),
        }
    }

    pub fn invalid(identity: impl Into<String>, message: impl Into<String>) -> Self {
        InputError::Validation {
            identity: identity.into(),
            witness: Vec::new(),
            message: message.into(),
        }
    }

    pub fn core(identity: impl Into<String>, err: CoreError) -> Self {
        Self::invalid(identity, err.to_string())
    }
}

pub type InputResult<T> = Result<T, InputError>;

/// An integer written as a JSON number or, when large, as a decimal string.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Num {
    Int(i64),
    Text(String),
}

impl Num {
    pub fn from_big(n: &BigInt) -> Self {
        match n.to_i64() {
            Some(v) => Num::Int(v),
            None => Num::Text(n.to_string()),
        }
    }

    fn to_big(&self) -> Option<BigInt> {
        match self {
            Num::Int(v) => Some(BigInt::from(*v)),
            Num::Text(s) => s.trim().parse().ok(),
        }
    }

    fn to_index(&self) -> Option<usize> {
        match self {
            Num::Int(v) => usize::try_from(*v).ok(),
            Num::Text(_) => None,
        }
    }
}

/// A sparse matrix: entry `[row, col, num, den?]` is the coefficient of basis vector `row` in
/// the image of basis vector `col`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Block {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<Num>>,
}

impl Block {
    pub fn from_map(map: &LinearMap) -> Self {
        let mut entries = Vec::new();
        for (col, v) in map.columns().iter().enumerate() {
            for (row, c) in v.iter() {
                entries.push((row, col, scalar_entry(c)));
            }
        }
        entries.sort_by_key(|e| (e.0, e.1));
        Block {
            rows: map.codomain(),
            cols: map.domain(),
            entries: entries
                .into_iter()
                .map(|(r, c, mut value)| {
                    let mut e = vec![Num::Int(r as i64), Num::Int(c as i64)];
                    e.append(&mut value);
                    e
                })
                .collect(),
        }
    }

    pub fn from_vector(v: &SVec, dim: usize, field: ScalarField) -> Self {
        Self::from_map(&LinearMap::from_columns(field, dim, vec![v.clone()]).expect("vector fits"))
    }

    /// Reads the block as a map `k^cols → k^rows` after checking its declared and actual shape.
    pub fn to_map(&self, name: &str, field: ScalarField, rows: usize, cols: usize) -> InputResult<LinearMap> {
        if self.rows != rows || self.cols != cols {
            return Err(InputError::invalid(
                name,
                format!("block is {}x{}, expected {rows}x{cols}", self.rows, self.cols),
            ));
        }
        let mut columns = vec![SVec::new(); cols];
        let mut seen = BTreeSet::new();
        for (k, e) in self.entries.iter().enumerate() {
            let at = format!("{name}.entries[{k}]");
            if e.len() != 3 && e.len() != 4 {
                return Err(InputError::parse(at, "expected [row, col, numerator, denominator?]"));
            }
            let row = e[0].to_index().ok_or_else(|| InputError::parse(&at, "row is not an index"))?;
            let col = e[1].to_index().ok_or_else(|| InputError::parse(&at, "col is not an index"))?;
            if row >= rows || col >= cols {
                return Err(InputError::invalid(
                    name,
                    format!("entry {k} at ({row}, {col}) is outside {rows}x{cols}"),
                ));
            }
            if !seen.insert((row, col)) {
                return Err(InputError::invalid(name, format!("entry {k} repeats position ({row}, {col})")));
            }
            let num = e[2].to_big().ok_or_else(|| InputError::parse(&at, "numerator is not an integer"))?;
            let den = match e.get(3) {
                Some(d) => d.to_big().ok_or_else(|| InputError::parse(&at, "denominator is not an integer"))?,
                None => BigInt::one(),
            };
            let value = field
                .ratio(&num, &den)
                .map_err(|err| InputError::invalid(name, format!("entry {k}: {err}")))?;
            columns[col].add_term(row, &value);
        }
        Ok(LinearMap::from_columns(field, rows, columns).expect("columns fit"))
    }
}

fn scalar_entry(c: &Scalar) -> Vec<Num> {
    match c {
        Scalar::Mod { value, .. } => vec![Num::Int(*value as i64)],
        Scalar::Rat(_) => {
            let (n, d) = c.to_fraction();
            vec![Num::from_big(&n), Num::from_big(&d)]
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FieldSpec {
    Named(String),
    Prime {
        #[serde(rename = "Fp")]
        p: u64,
    },
}

impl FieldSpec {
    pub fn of(field: ScalarField) -> Self {
        match field {
            ScalarField::Rationals => FieldSpec::Named("Q".into()),
            ScalarField::Prime(p) => FieldSpec::Prime { p: p as u64 },
        }
    }

    pub fn resolve(&self) -> InputResult<ScalarField> {
        match self {
            FieldSpec::Named(s) if s == "Q" => Ok(ScalarField::Rationals),
            FieldSpec::Named(s) => Err(InputError::invalid("field", format!("unknown field `{s}`"))),
            FieldSpec::Prime { p } => ScalarField::prime(*p).map_err(|e| InputError::core("field", e)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupSpec {
    pub labels: Vec<String>,
    pub table: Vec<Vec<usize>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    Algebra,
    Coalgebra,
    Bialgebra,
    Hopf,
    SuperHopf,
    Graded,
    ComoduleAlgebra,
    ComoduleCoalgebra,
    GroupCrossedSystem,
    CrossedSystem,
    AugmentedExtension,
    LeftModule,
    LiftProblem,
    Exterior,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Algebra => "algebra",
            Kind::Coalgebra => "coalgebra",
            Kind::Bialgebra => "bialgebra",
            Kind::Hopf => "hopf",
            Kind::SuperHopf => "super-hopf",
            Kind::Graded => "graded",
            Kind::ComoduleAlgebra => "comodule-algebra",
            Kind::ComoduleCoalgebra => "comodule-coalgebra",
            Kind::GroupCrossedSystem => "group-crossed-system",
            Kind::CrossedSystem => "crossed-system",
            Kind::AugmentedExtension => "augmented-extension",
            Kind::LeftModule => "left-module",
            Kind::LiftProblem => "lift-problem",
            Kind::Exterior => "exterior",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresentationFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub format_version: Option<u32>,
    pub kind: Kind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<FieldSpec>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub labels: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parity: Option<Vec<u8>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<GroupSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generators: Option<usize>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub blocks: BTreeMap<String, Block>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub parts: BTreeMap<String, PresentationFile>,
}

impl PresentationFile {
    pub fn new(kind: Kind, field: ScalarField) -> Self {
        PresentationFile {
            format_version: Some(FORMAT_VERSION),
            kind,
            name: None,
            field: Some(FieldSpec::of(field)),
            labels: Vec::new(),
            parity: None,
            degree: None,
            group: None,
            generators: None,
            blocks: BTreeMap::new(),
            parts: BTreeMap::new(),
        }
    }

    /// A nested part: no version and no field of its own.
    pub fn part(kind: Kind) -> Self {
        PresentationFile {
            format_version: None,
            field: None,
            ..Self::new(kind, ScalarField::Rationals)
        }
    }

    pub fn named(mut self, name: &str) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn block(mut self, name: &str, map: &LinearMap) -> Self {
        self.blocks.insert(name.into(), Block::from_map(map));
        self
    }

    pub fn with_part(mut self, name: &str, part: PresentationFile) -> Self {
        self.parts.insert(name.into(), part);
        self
    }

    pub fn to_json(&self) -> String {
        to_pretty(&serde_json::to_value(self).expect("serializable"))
    }
}

/// A parsed file with its field resolved; `path` locates nested parts in messages.
#[derive(Clone, Debug)]
pub struct Document {
    pub file: PresentationFile,
    pub field: ScalarField,
    path: String,
}

pub fn parse_presentation(path: &Path) -> InputResult<Document> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| InputError::parse(path.display().to_string(), e.to_string()))?;
    parse_str(&text)
}

pub fn parse_str(text: &str) -> InputResult<Document> {
    let file: PresentationFile = serde_json::from_str(text)
        .map_err(|e| InputError::parse(format!("line {} column {}", e.line(), e.column()), e.to_string()))?;
    match file.format_version {
        Some(FORMAT_VERSION) => {}
        Some(v) => return Err(InputError::invalid("format_version", format!("unsupported version {v}"))),
        None => return Err(InputError::invalid("format_version", "missing")),
    }
    let field = file
        .field
        .as_ref()
        .ok_or_else(|| InputError::invalid("field", "missing"))?
        .resolve()?;
    let doc = Document {
        file,
        field,
        path: String::new(),
    };
    doc.check_shapes()?;
    Ok(doc)
}

fn first_axiom_failure(identity_prefix: &str, r: &AxiomReport) -> InputResult<()> {
    match r.violations.first() {
        None => Ok(()),
        Some(v) => Err(InputError::Validation {
            identity: format!("{identity_prefix}{}", v.identity.name()),
            witness: v.witness.clone(),
            message: "identity fails".into(),
        }),
    }
}

impl Document {
    pub fn kind(&self) -> Kind {
        self.file.kind
    }

    pub fn name(&self) -> String {
        self.file.name.clone().unwrap_or_else(|| self.file.kind.name().into())
    }

    pub fn dim(&self) -> usize {
        self.file.labels.len()
    }

    fn at(&self, name: &str) -> String {
        format!("{}{name}", self.path)
    }

    pub fn require_kind(&self, command: &str, allowed: &[Kind]) -> InputResult<()> {
        if allowed.contains(&self.kind()) {
            return Ok(());
        }
        let names: Vec<&str> = allowed.iter().map(|k| k.name()).collect();
        Err(InputError::invalid(
            "kind",
            format!("`{command}` expects {}, found {}", names.join(" or "), self.kind().name()),
        ))
    }

    pub fn part(&self, name: &str) -> InputResult<Document> {
        let file = self
            .file
            .parts
            .get(name)
            .ok_or_else(|| InputError::invalid(self.at(&format!("parts.{name}")), "missing part"))?
            .clone();
        let path = format!("{}parts.{name}.", self.path);
        if let Some(spec) = &file.field {
            if spec.resolve()? != self.field {
                return Err(InputError::invalid(format!("{path}field"), "differs from the enclosing field"));
            }
        }
        Ok(Document {
            file,
            field: self.field,
            path,
        })
    }

    fn has(&self, name: &str) -> bool {
        self.file.blocks.contains_key(name)
    }

    pub fn map(&self, name: &str, rows: usize, cols: usize) -> InputResult<LinearMap> {
        let block = self
            .file
            .blocks
            .get(name)
            .ok_or_else(|| InputError::invalid(self.at(name), "missing block"))?;
        block.to_map(&self.at(name), self.field, rows, cols)
    }

    fn optional_map(&self, name: &str, rows: usize, cols: usize) -> InputResult<Option<LinearMap>> {
        if self.has(name) {
            self.map(name, rows, cols).map(Some)
        } else {
            Ok(None)
        }
    }

    pub fn vector(&self, name: &str, dim: usize) -> InputResult<SVec> {
        Ok(self.map(name, dim, 1)?.column(0).clone())
    }

    /// Blocks every kind needs, checked for presence and shape before any math runs.
    fn check_shapes(&self) -> InputResult<()> {
        let d = self.dim();
        let require = |names: &[&str]| -> InputResult<()> {
            for n in names {
                if !self.has(n) {
                    return Err(InputError::invalid(self.at(n), "missing block"));
                }
            }
            Ok(())
        };
        let known_blocks: &[&str] = &[
            "product", "unit", "coproduct", "counit", "antipode", "coaction", "augmentation", "section",
            "action", "sigma", "measuring", "projection", "map",
        ];
        for name in self.file.blocks.keys() {
            if !known_blocks.contains(&name.as_str()) {
                return Err(InputError::invalid(self.at(name), "unknown block"));
            }
        }
        if let Some(p) = &self.file.parity {
            if p.len() != d {
                return Err(InputError::invalid(self.at("parity"), format!("has {} entries for {d} labels", p.len())));
            }
            if let Some(k) = p.iter().position(|&x| x > 1) {
                return Err(InputError::invalid(self.at("parity"), format!("entry {k} is not 0 or 1")));
            }
        }
        match self.kind() {
            Kind::Algebra => require(&["product", "unit"])?,
            Kind::Coalgebra => require(&["coproduct", "counit"])?,
            Kind::Bialgebra => require(&["product", "unit", "coproduct", "counit"])?,
            Kind::Hopf => require(&["product", "unit", "coproduct", "counit", "antipode"])?,
            Kind::SuperHopf => {
                require(&["product", "unit", "coproduct", "counit", "antipode"])?;
                if self.file.parity.is_none() {
                    return Err(InputError::invalid(self.at("parity"), "missing"));
                }
            }
            Kind::Graded => {
                require(&["product", "unit"])?;
                if self.file.degree.is_none() {
                    return Err(InputError::invalid(self.at("degree"), "missing"));
                }
                if self.file.group.is_none() {
                    return Err(InputError::invalid(self.at("group"), "missing"));
                }
            }
            Kind::ComoduleAlgebra => require(&["product", "unit", "coaction"])?,
            Kind::AugmentedExtension => require(&["product", "unit", "coaction", "augmentation"])?,
            Kind::ComoduleCoalgebra => require(&["coproduct", "counit", "coaction"])?,
            Kind::GroupCrossedSystem => {
                require(&["action", "sigma"])?;
                if self.file.group.is_none() {
                    return Err(InputError::invalid(self.at("group"), "missing"));
                }
            }
            Kind::CrossedSystem => require(&["measuring", "sigma"])?,
            Kind::LeftModule => require(&["action"])?,
            Kind::LiftProblem => require(&["projection", "map"])?,
            Kind::Exterior => {
                if self.file.generators.is_none() {
                    return Err(InputError::invalid(self.at("generators"), "missing"));
                }
            }
        }
        let parts: &[&str] = match self.kind() {
            Kind::ComoduleAlgebra | Kind::AugmentedExtension | Kind::ComoduleCoalgebra | Kind::LeftModule => &["hopf"],
            Kind::GroupCrossedSystem => &["base"],
            Kind::CrossedSystem => &["hopf", "base"],
            Kind::LiftProblem => &["source", "target"],
            _ => &[],
        };
        for p in parts {
            self.part(p)?.check_shapes()?;
        }
        for (name, rows, cols) in self.block_shapes()? {
            if let Some(b) = self.file.blocks.get(name) {
                b.to_map(&self.at(name), self.field, rows, cols)?;
            }
        }
        Ok(())
    }

    /// Expected `(rows, cols)` of each block this kind may carry.
    fn block_shapes(&self) -> InputResult<Vec<(&'static str, usize, usize)>> {
        let d = self.dim();
        let mut shapes = vec![
            ("product", d, d * d),
            ("unit", d, 1),
            ("coproduct", d * d, d),
            ("counit", 1, d),
            ("antipode", d, d),
        ];
        let dh = || -> InputResult<usize> { Ok(self.part("hopf")?.dim()) };
        match self.kind() {
            Kind::ComoduleAlgebra | Kind::AugmentedExtension | Kind::ComoduleCoalgebra => {
                let h = dh()?;
                shapes.push(("coaction", d * h, d));
                shapes.push(("augmentation", 1, d));
                shapes.push(("section", d, h));
            }
            Kind::LeftModule => shapes.push(("action", d, dh()? * d)),
            Kind::GroupCrossedSystem => {
                let n = self.file.group.as_ref().map_or(0, |g| g.labels.len());
                let b = self.part("base")?.dim();
                shapes.push(("action", b, n * b));
                shapes.push(("sigma", b, n * n));
            }
            Kind::CrossedSystem => {
                let (h, b) = (dh()?, self.part("base")?.dim());
                shapes.push(("measuring", b, h * b));
                shapes.push(("sigma", b, h * h));
            }
            Kind::LiftProblem => {
                let (c, t) = (self.part("source")?, self.part("target")?);
                let h = c.part("hopf")?.dim();
                shapes.push(("projection", t.dim(), c.dim()));
                shapes.push(("map", t.dim(), h));
            }
            _ => {}
        }
        Ok(shapes)
    }

    /// The structure blocks that are present, without running any axiom check.
    pub fn presentation(&self) -> InputResult<Presentation> {
        let d = self.dim();
        Ok(Presentation {
            field: Some(self.field),
            labels: self.file.labels.clone(),
            parity: self.file.parity.clone(),
            product: self.optional_map("product", d, d * d)?,
            unit: self.optional_map("unit", d, 1)?.map(|m| m.column(0).clone()),
            coproduct: self.optional_map("coproduct", d * d, d)?,
            counit: self.optional_map("counit", 1, d)?,
            antipode: self.optional_map("antipode", d, d)?,
        })
    }

    pub fn raw_algebra(&self) -> InputResult<Algebra> {
        let d = self.dim();
        Algebra::new(self.field, self.file.labels.clone(), self.map("product", d, d * d)?, self.vector("unit", d)?)
            .map_err(|e| InputError::core(self.at("product"), e))
    }

    pub fn raw_coalgebra(&self) -> InputResult<Coalgebra> {
        let d = self.dim();
        Coalgebra::new(self.field, self.file.labels.clone(), self.map("coproduct", d * d, d)?, self.map("counit", 1, d)?)
            .map_err(|e| InputError::core(self.at("coproduct"), e))
    }

    pub fn raw_hopf(&self) -> InputResult<Hopf> {
        let d = self.dim();
        Hopf::new(self.raw_algebra()?, self.raw_coalgebra()?, self.map("antipode", d, d)?)
            .map_err(|e| InputError::core(self.at("antipode"), e))
    }

    pub fn algebra(&self) -> InputResult<Algebra> {
        let a = self.raw_algebra()?;
        first_axiom_failure(&self.path, &check_algebra(&a, self.file.parity.as_deref()))?;
        Ok(a)
    }

    pub fn coalgebra(&self) -> InputResult<Coalgebra> {
        let c = self.raw_coalgebra()?;
        first_axiom_failure(&self.path, &check_coalgebra(&c, self.file.parity.as_deref()))?;
        Ok(c)
    }

    pub fn bialgebra(&self) -> InputResult<Bialgebra> {
        let b = Bialgebra::new(self.raw_algebra()?, self.raw_coalgebra()?).map_err(|e| InputError::core(self.at("product"), e))?;
        first_axiom_failure(&self.path, &hopfkit_core::algebra::check_bialgebra(&b, self.file.parity.as_deref()))?;
        Ok(b)
    }

    pub fn hopf(&self) -> InputResult<Hopf> {
        let h = self.raw_hopf()?;
        first_axiom_failure(&self.path, &check_hopf(&h, self.file.parity.as_deref()))?;
        Ok(h)
    }

    pub fn super_hopf(&self) -> InputResult<SuperHopf> {
        if self.kind() == Kind::Exterior {
            return Ok(self.exterior()?.hopf);
        }
        let parity = self.file.parity.clone().ok_or_else(|| InputError::invalid(self.at("parity"), "missing"))?;
        self.field.require_odd_characteristic().map_err(|e| InputError::core(self.at("field"), e))?;
        SuperHopf::new(self.hopf()?, parity).map_err(|e| InputError::core(self.at("parity"), e))
    }

    pub fn exterior(&self) -> InputResult<hopfkit_core::superalg::ExteriorHopf> {
        let n = self.file.generators.ok_or_else(|| InputError::invalid(self.at("generators"), "missing"))?;
        if n > 10 {
            return Err(InputError::invalid(self.at("generators"), "at most 10 generators"));
        }
        hopfkit_core::superalg::exterior_hopf(n, self.field).map_err(|e| InputError::core(self.at("field"), e))
    }

    pub fn group(&self) -> InputResult<GroupTable> {
        let g = self.file.group.as_ref().ok_or_else(|| InputError::invalid(self.at("group"), "missing"))?;
        GroupTable::new(g.labels.clone(), g.table.clone()).map_err(|e| InputError::core(self.at("group"), e))
    }

    pub fn raw_graded(&self) -> InputResult<GradedAlgebra> {
        let degree = self.file.degree.clone().ok_or_else(|| InputError::invalid(self.at("degree"), "missing"))?;
        GradedAlgebra::new(self.raw_algebra()?, self.group()?, degree).map_err(|e| InputError::core(self.at("degree"), e))
    }

    pub fn graded(&self) -> InputResult<GradedAlgebra> {
        let g = self.raw_graded()?;
        first_axiom_failure(&self.path, &check_algebra(&g.algebra, None))?;
        if let Some(v) = check_grading(&g).violations.first() {
            return Err(InputError::invalid(self.at("degree"), format!("{v:?}")));
        }
        Ok(g)
    }

    pub fn raw_comodule_algebra(&self) -> InputResult<ComoduleAlgebra> {
        let hopf = self.part("hopf")?.hopf()?;
        let d = self.dim();
        let coaction = self.map("coaction", d * hopf.dim(), d)?;
        ComoduleAlgebra::unchecked(self.algebra()?, hopf, coaction).map_err(|e| InputError::core(self.at("coaction"), e))
    }

    /// A comodule algebra, or a graded algebra read as a `kΓ`-comodule algebra.
    pub fn comodule_algebra(&self) -> InputResult<ComoduleAlgebra> {
        if self.kind() == Kind::Graded {
            return Ok(graded_to_comodule(&self.graded()?));
        }
        let a = self.raw_comodule_algebra()?;
        if let Some((c, w)) = a.check().violations.first() {
            return Err(InputError::Validation {
                identity: self.at("coaction"),
                witness: w.clone(),
                message: format!("{c:?} fails"),
            });
        }
        Ok(a)
    }

    pub fn comodule_coalgebra(&self) -> InputResult<ComoduleCoalgebra> {
        let hopf = self.part("hopf")?.hopf()?;
        let d = self.dim();
        let coaction = self.map("coaction", d * hopf.dim(), d)?;
        ComoduleCoalgebra::new(hopf, self.coalgebra()?, coaction).map_err(|e| InputError::core(self.at("coaction"), e))
    }

    pub fn raw_group_crossed_system(&self) -> InputResult<GroupCrossedSystem> {
        let base = self.part("base")?.algebra()?;
        let group = self.group()?;
        let (n, b) = (group.order(), base.dim());
        let action = self.map("action", b, n * b)?;
        let sigma = self.map("sigma", b, n * n)?;
        let actions = (0..n)
            .map(|g| LinearMap::from_columns(self.field, b, action.columns()[g * b..(g + 1) * b].to_vec()).expect("fits"))
            .collect();
        let sigmas = (0..n).map(|g| (0..n).map(|h| sigma.column(g * n + h).clone()).collect()).collect();
        GroupCrossedSystem::new(base, group, actions, sigmas).map_err(|e| InputError::core(self.at("sigma"), e))
    }

    pub fn group_crossed_system(&self) -> InputResult<GroupCrossedSystem> {
        let s = self.raw_group_crossed_system()?;
        let report = hopfkit_core::graded::check_group_crossed_system(&s);
        if let Some((c, w)) = report.violations.first() {
            return Err(InputError::Validation {
                identity: self.at("sigma"),
                witness: w.clone(),
                message: format!("{c:?} fails"),
            });
        }
        Ok(s)
    }

    pub fn raw_crossed_system(&self) -> InputResult<CrossedSystem> {
        let hopf = self.part("hopf")?.hopf()?;
        let base = self.part("base")?.algebra()?;
        let (h, b) = (hopf.dim(), base.dim());
        let measuring = self.map("measuring", b, h * b)?;
        let sigma = self.map("sigma", b, h * h)?;
        CrossedSystem::new(hopf, base, measuring, sigma).map_err(|e| InputError::core(self.at("sigma"), e))
    }

    pub fn crossed_system(&self) -> InputResult<CrossedSystem> {
        let s = self.raw_crossed_system()?;
        if let Some((c, w)) = check_crossed_system(&s).violations.first() {
            return Err(InputError::Validation {
                identity: self.at("sigma"),
                witness: w.clone(),
                message: format!("{c:?} fails"),
            });
        }
        Ok(s)
    }

    /// The comodule algebra, its augmentation, and the section when one is given.
    pub fn augmented_extension(&self) -> InputResult<(ComoduleAlgebra, LinearMap, Option<LinearMap>)> {
        let a = self.comodule_algebra()?;
        let d = self.dim();
        let augmentation = self.map("augmentation", 1, d)?;
        let section = self.optional_map("section", d, a.hopf.dim())?;
        Ok((a, augmentation, section))
    }

    pub fn raw_left_module(&self) -> InputResult<LeftModule> {
        let hopf = self.part("hopf")?.hopf()?;
        let d = self.dim();
        let action = self.map("action", d, hopf.dim() * d)?;
        LeftModule::new(hopf, d, action).map_err(|e| InputError::core(self.at("action"), e))
    }

    pub fn left_module(&self) -> InputResult<LeftModule> {
        let m = self.raw_left_module()?;
        if !m.is_module() {
            return Err(InputError::invalid(self.at("action"), "not a unital associative action"));
        }
        Ok(m)
    }

    /// `(C, D, ϖ: C → D, ψ: H → D)`.
    pub fn lift_problem(&self) -> InputResult<(ComoduleAlgebra, ComoduleAlgebra, LinearMap, LinearMap)> {
        let c = self.part("source")?.comodule_algebra()?;
        let d = self.part("target")?.comodule_algebra()?;
        let varpi = self.map("projection", d.algebra.dim(), c.algebra.dim())?;
        let psi = self.map("map", d.algebra.dim(), c.hopf.dim())?;
        Ok((c, d, varpi, psi))
    }
}

/// Serializers from in-memory structures back to files.
pub mod write {
    use super::*;

    pub fn algebra(kind: Kind, a: &Algebra) -> PresentationFile {
        let mut f = PresentationFile::new(kind, a.field());
        f.labels = a.labels().to_vec();
        f.block("product", a.product())
            .block("unit", &LinearMap::from_columns(a.field(), a.dim(), vec![a.unit().clone()]).expect("fits"))
    }

    pub fn coalgebra(kind: Kind, c: &Coalgebra) -> PresentationFile {
        let mut f = PresentationFile::new(kind, c.field());
        f.labels = c.labels().to_vec();
        f.block("coproduct", c.coproduct()).block("counit", c.counit())
    }

    fn add_coalgebra(f: PresentationFile, c: &Coalgebra) -> PresentationFile {
        f.block("coproduct", c.coproduct()).block("counit", c.counit())
    }

    pub fn bialgebra(b: &Bialgebra) -> PresentationFile {
        add_coalgebra(algebra(Kind::Bialgebra, &b.algebra), &b.coalgebra)
    }

    pub fn hopf(h: &Hopf) -> PresentationFile {
        add_coalgebra(algebra(Kind::Hopf, &h.algebra), &h.coalgebra).block("antipode", &h.antipode)
    }

    pub fn super_hopf(s: &SuperHopf) -> PresentationFile {
        let mut f = hopf(&s.hopf);
        f.kind = Kind::SuperHopf;
        f.parity = Some(s.parity().to_vec());
        f
    }

    fn group_spec(g: &GroupTable) -> GroupSpec {
        GroupSpec {
            labels: g.labels().to_vec(),
            table: g.table().to_vec(),
        }
    }

    pub fn graded(g: &GradedAlgebra) -> PresentationFile {
        let mut f = algebra(Kind::Graded, &g.algebra);
        f.degree = Some(g.degree.clone());
        f.group = Some(group_spec(&g.group));
        f
    }

    fn as_part(mut f: PresentationFile) -> PresentationFile {
        f.format_version = None;
        f.field = None;
        f
    }

    pub fn comodule_algebra(a: &ComoduleAlgebra) -> PresentationFile {
        algebra(Kind::ComoduleAlgebra, &a.algebra)
            .block("coaction", &a.coaction)
            .with_part("hopf", as_part(hopf(&a.hopf)))
    }

    pub fn augmented_extension(a: &ComoduleAlgebra, augmentation: &LinearMap, section: Option<&LinearMap>) -> PresentationFile {
        let mut f = comodule_algebra(a).block("augmentation", augmentation);
        f.kind = Kind::AugmentedExtension;
        match section {
            Some(s) => f.block("section", s),
            None => f,
        }
    }

    pub fn comodule_coalgebra(c: &ComoduleCoalgebra) -> PresentationFile {
        coalgebra(Kind::ComoduleCoalgebra, &c.coalgebra)
            .block("coaction", &c.coaction)
            .with_part("hopf", as_part(hopf(&c.hopf)))
    }

    pub fn group_crossed_system(s: &GroupCrossedSystem) -> PresentationFile {
        let field = s.base.field();
        let (n, b) = (s.group.order(), s.base.dim());
        let action = LinearMap::from_fn(field, n * b, b, |k| s.action[k / b].column(k % b).clone());
        let sigma = LinearMap::from_fn(field, n * n, b, |k| s.sigma[k / n][k % n].clone());
        let mut f = PresentationFile::new(Kind::GroupCrossedSystem, field)
            .block("action", &action)
            .block("sigma", &sigma)
            .with_part("base", as_part(algebra(Kind::Algebra, &s.base)));
        f.group = Some(group_spec(&s.group));
        f
    }

    pub fn crossed_system(s: &CrossedSystem) -> PresentationFile {
        PresentationFile::new(Kind::CrossedSystem, s.base.field())
            .block("measuring", &s.measuring)
            .block("sigma", &s.sigma)
            .with_part("hopf", as_part(hopf(&s.hopf)))
            .with_part("base", as_part(algebra(Kind::Algebra, &s.base)))
    }

    pub fn left_module(m: &LeftModule, labels: Vec<String>) -> PresentationFile {
        let mut f = PresentationFile::new(Kind::LeftModule, m.hopf.field())
            .block("action", &m.action)
            .with_part("hopf", as_part(hopf(&m.hopf)));
        f.labels = labels;
        f
    }

    pub fn lift_problem(c: &ComoduleAlgebra, d: &ComoduleAlgebra, varpi: &LinearMap, psi: &LinearMap) -> PresentationFile {
        PresentationFile::new(Kind::LiftProblem, c.field())
            .block("projection", varpi)
            .block("map", psi)
            .with_part("source", as_part(comodule_algebra(c)))
            .with_part("target", as_part(comodule_algebra(d)))
    }

    pub fn exterior(n: usize, field: ScalarField) -> PresentationFile {
        let mut f = PresentationFile::new(Kind::Exterior, field);
        f.generators = Some(n);
        f
    }
}

/// Two-space indentation with arrays of scalars kept on one line.
pub fn to_pretty(v: &Value) -> String {
    let mut out = String::new();
    pretty_into(v, 0, &mut out);
    out.push('\n');
    out
}

fn is_scalar_array(xs: &[Value]) -> bool {
    xs.iter().all(|x| !x.is_array() && !x.is_object())
}

fn pretty_into(v: &Value, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth + 1);
    match v {
        Value::Object(map) if !map.is_empty() => {
            out.push_str("{\n");
            for (k, (key, val)) in map.iter().enumerate() {
                out.push_str(&pad);
                out.push_str(&serde_json::to_string(key).expect("string"));
                out.push_str(": ");
                pretty_into(val, depth + 1, out);
                if k + 1 < map.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            out.push_str(&"  ".repeat(depth));
            out.push('}');
        }
        Value::Array(xs) if is_scalar_array(xs) => {
            let items: Vec<String> = xs.iter().map(|x| serde_json::to_string(x).expect("value")).collect();
            out.push('[');
            out.push_str(&items.join(", "));
            out.push(']');
        }
        Value::Array(xs) => {
            out.push_str("[\n");
            for (k, x) in xs.iter().enumerate() {
                out.push_str(&pad);
                pretty_into(x, depth + 1, out);
                if k + 1 < xs.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            out.push_str(&"  ".repeat(depth));
            out.push(']');
        }
        _ => out.push_str(&serde_json::to_string(v).expect("value")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use hopfkit_core::algebra::group_hopf_algebra;

    #[test]
    fn block_round_trip_over_rationals() {
        let q = ScalarField::Rationals;
        let m = LinearMap::from_fn(q, 2, 3, |j| SVec::term(j + 1, q.ratio(&BigInt::from(-3), &BigInt::from(6)).unwrap()));
        let b = Block::from_map(&m);
        assert_eq!(b.entries[0], vec![Num::Int(1), Num::Int(0), Num::Int(-1), Num::Int(2)]);
        assert_eq!(b.to_map("m", q, 3, 2).unwrap(), m);
    }

    #[test]
    fn prime_field_entries_omit_denominators() {
        let f5 = ScalarField::prime(5).unwrap();
        let m = LinearMap::from_fn(f5, 1, 1, |_| SVec::term(0, f5.int(-1)));
        let b = Block::from_map(&m);
        assert_eq!(b.entries, vec![vec![Num::Int(0), Num::Int(0), Num::Int(4)]]);
    }

    #[test]
    fn big_numbers_are_strings() {
        let q = ScalarField::Rationals;
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let m = LinearMap::from_fn(q, 1, 1, |_| SVec::term(0, q.ratio(&big, &BigInt::one()).unwrap()));
        let b = Block::from_map(&m);
        assert_eq!(b.entries[0][2], Num::Text(big.to_string()));
        assert_eq!(b.to_map("m", q, 1, 1).unwrap(), m);
    }

    #[test]
    fn out_of_range_entry_names_block_and_index() {
        let b = Block {
            rows: 2,
            cols: 2,
            entries: vec![vec![Num::Int(0), Num::Int(0), Num::Int(1)], vec![Num::Int(2), Num::Int(0), Num::Int(1)]],
        };
        let err = b.to_map("antipode", ScalarField::Rationals, 2, 2).unwrap_err().to_string();
        assert!(err.contains("antipode") && err.contains("entry 1"), "{err}");
    }

    #[test]
    fn hopf_file_round_trip() {
        let h = group_hopf_algebra(&GroupTable::cyclic(3), ScalarField::Rationals);
        let text = write::hopf(&h).to_json();
        let doc = parse_str(&text).unwrap();
        assert_eq!(doc.hopf().unwrap(), h);
    }

    #[test]
    fn pretty_printer_is_valid_json() {
        let h = group_hopf_algebra(&GroupTable::cyclic(2), ScalarField::Rationals);
        let text = write::comodule_algebra(&hopfkit_core::comodule::ComoduleAlgebra::regular(&h)).to_json();
        let v: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(to_pretty(&v), text);
        assert!(text.contains("[0, 0, 1, 1]"));
    }
}
