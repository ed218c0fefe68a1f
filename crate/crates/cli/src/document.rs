//! The JSON algebra file format.
//!
//! ```json
//! {"field": "Q", "dim": 2, "basis": ["e1", "e2"],
//!  "squares": {"e1": {"e2": "1"}, "e2": {"e1": "-1/2"}}}
//! ```
//!
//! `squares[a][b]` is the coordinate of `b` in the square of `a`. Missing
//! entries are zero and `basis` defaults to `e1..en`.

use std::collections::HashSet;

use evoalg::algebra::default_labels;
use evoalg::{EvolutionAlgebra, Field, FieldDescriptor, PrimeAlgebra, PrimeField, RationalAlgebra, Rationals};
use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDocument {
    pub field: FieldSpec,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    #[serde(default)]
    pub squares: IndexMap<String, IndexMap<String, String>>,
}

/// `"Q"` or `{"prime": p}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FieldSpec {
    Named(String),
    Prime(PrimeSpec),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PrimeSpec {
    pub prime: u64,
}

impl FieldSpec {
    pub fn descriptor(&self) -> CliResult<FieldDescriptor> {
        match self {
            FieldSpec::Named(name) if name == "Q" => Ok(FieldDescriptor::Rationals),
            FieldSpec::Named(name) => Err(CliError::Document(format!(
                "unknown field {name:?}, expected \"Q\" or {{\"prime\": p}}"
            ))),
            FieldSpec::Prime(PrimeSpec { prime }) => Ok(FieldDescriptor::Prime(PrimeField::new(*prime)?.modulus())),
        }
    }

    pub fn of(d: FieldDescriptor) -> Self {
        match d {
            FieldDescriptor::Rationals => FieldSpec::Named("Q".into()),
            FieldDescriptor::Prime(p) => FieldSpec::Prime(PrimeSpec { prime: p as u64 }),
        }
    }
}

/// An algebra over whichever field a document declares.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyAlgebra {
    Rational(RationalAlgebra),
    Prime(PrimeAlgebra),
}

/// Evaluates `$body` with `$a` bound to the concrete algebra.
#[macro_export]
macro_rules! with_algebra {
    ($any:expr, $a:ident => $body:expr) => {
        match $any {
            $crate::document::AnyAlgebra::Rational($a) => $body,
            $crate::document::AnyAlgebra::Prime($a) => $body,
        }
    };
}

impl AlgebraDocument {
    pub fn parse(text: &str) -> CliResult<Self> {
        serde_json::from_str(text).map_err(|e| CliError::Document(e.to_string()))
    }

    pub fn read(path: &str) -> CliResult<Self> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.to_string(),
            source,
        })?;
        Self::parse(&text)
    }

    /// Pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("documents serialize");
        s.push('\n');
        s
    }

    pub fn to_algebra(&self) -> CliResult<AnyAlgebra> {
        Ok(match self.field.descriptor()? {
            FieldDescriptor::Rationals => AnyAlgebra::Rational(self.build(Rationals)?),
            FieldDescriptor::Prime(p) => AnyAlgebra::Prime(self.build(PrimeField::new(p as u64)?)?),
        })
    }

    fn build<F: Field>(&self, field: F) -> CliResult<EvolutionAlgebra<F>> {
        let n = self.dim;
        if n == 0 || n > evoalg::MAX_DIM {
            return Err(evoalg::Error::InvalidDimension(n).into());
        }
        let labels = match &self.basis {
            Some(b) => b.clone(),
            None => default_labels(n),
        };
        if labels.len() != n {
            return Err(CliError::Document(format!(
                "basis has {} labels but dim is {n}",
                labels.len()
            )));
        }
        let mut seen = HashSet::new();
        for l in &labels {
            if l.is_empty() {
                return Err(CliError::Document("empty basis label".into()));
            }
            if !seen.insert(l.as_str()) {
                return Err(CliError::Document(format!("duplicate basis label {l:?}")));
            }
        }
        let index = |l: &str| {
            labels
                .iter()
                .position(|x| x == l)
                .ok_or_else(|| CliError::Document(format!("unknown label {l:?} in squares")))
        };
        let mut squares = vec![vec![field.zero(); n]; n];
        for (outer, column) in &self.squares {
            let i = index(outer)?;
            for (inner, text) in column {
                let j = index(inner)?;
                squares[i][j] = field
                    .parse(text)
                    .map_err(|e| CliError::Document(format!("squares.{outer}.{inner}: {e}")))?;
            }
        }
        Ok(EvolutionAlgebra::with_labels(field, squares, labels)?)
    }

    /// The document of `a`, listing only nonzero coordinates.
    pub fn from_algebra<F: Field>(a: &EvolutionAlgebra<F>) -> Self {
        let f = a.field();
        let mut squares = IndexMap::new();
        for i in 0..a.dim() {
            let column: IndexMap<String, String> = a
                .square(i)
                .iter()
                .enumerate()
                .filter(|(_, x)| !f.is_zero(x))
                .map(|(j, x)| (a.label(j).to_string(), f.format(x)))
                .collect();
            if !column.is_empty() {
                squares.insert(a.label(i).to_string(), column);
            }
        }
        AlgebraDocument {
            field: FieldSpec::of(f.descriptor()),
            dim: a.dim(),
            basis: Some(a.labels().to_vec()),
            squares,
        }
    }
}

impl AnyAlgebra {
    pub fn to_document(&self) -> AlgebraDocument {
        with_algebra!(self, a => AlgebraDocument::from_algebra(a))
    }
}
