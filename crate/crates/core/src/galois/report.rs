use std::fmt;

use crate::algebra::EvolutionAlgebra;
use crate::ideals::Ideal;
use crate::linalg::Subspace;
use crate::scalar::Field;
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Status {
    Pass,
    Fail,
    /// The hypothesis of the statement never held on the inputs.
    NotApplicable,
    /// The inputs needed to evaluate the statement could not be produced.
    Skipped,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::NotApplicable => "not-applicable",
            Status::Skipped => "skipped",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A counterexample: the algebra it lives in and the offending sets or ideals.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Witness {
    pub algebra: String,
    pub detail: String,
}

/// Tallies for one statement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyOutcome {
    pub name: &'static str,
    pub statement: &'static str,
    /// Instances on which the statement was evaluated.
    pub instances: u64,
    pub failures: u64,
    /// Algebras on which the hypothesis failed.
    pub not_applicable: u64,
    /// Algebras on which evaluation was skipped.
    pub skipped: u64,
    pub notice: Option<String>,
    /// Least counterexample seen.
    pub witness: Option<Witness>,
}

impl PropertyOutcome {
    pub fn new(name: &'static str, statement: &'static str) -> Self {
        PropertyOutcome {
            name,
            statement,
            instances: 0,
            failures: 0,
            not_applicable: 0,
            skipped: 0,
            notice: None,
            witness: None,
        }
    }

    pub fn status(&self) -> Status {
        if self.failures > 0 {
            Status::Fail
        } else if self.instances > 0 {
            Status::Pass
        } else if self.skipped > 0 {
            Status::Skipped
        } else {
            Status::NotApplicable
        }
    }

    fn absorb(&mut self, other: &PropertyOutcome) {
        self.instances += other.instances;
        self.failures += other.failures;
        self.not_applicable += other.not_applicable;
        self.skipped += other.skipped;
        self.notice = least(self.notice.take(), other.notice.clone());
        self.witness = least(self.witness.take(), other.witness.clone());
    }
}

fn least<T: Ord>(a: Option<T>, b: Option<T>) -> Option<T> {
    match (a, b) {
        (Some(a), Some(b)) => Some(a.min(b)),
        (a, b) => a.or(b),
    }
}

/// Outcomes of a set of statements over one or more algebras.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PropertyReport {
    pub algebras: u64,
    pub outcomes: Vec<PropertyOutcome>,
}

impl PropertyReport {
    pub fn new(registry: &[(&'static str, &'static str)]) -> Self {
        PropertyReport {
            algebras: 0,
            outcomes: registry.iter().map(|&(n, s)| PropertyOutcome::new(n, s)).collect(),
        }
    }

    pub fn get(&self, name: &str) -> Option<&PropertyOutcome> {
        self.outcomes.iter().find(|o| o.name == name)
    }

    fn slot(&mut self, name: &str) -> &mut PropertyOutcome {
        let k = self
            .outcomes
            .iter()
            .position(|o| o.name == name)
            .unwrap_or_else(|| panic!("property {name:?} is not registered"));
        &mut self.outcomes[k]
    }

    /// Counts one instance, recording `detail` as a witness if it failed.
    pub fn check(&mut self, name: &str, holds: bool, algebra: &str, detail: impl FnOnce() -> String) {
        let o = self.slot(name);
        o.instances += 1;
        if !holds {
            o.failures += 1;
            let w = Witness {
                algebra: algebra.to_string(),
                detail: detail(),
            };
            o.witness = least(o.witness.take(), Some(w));
        }
    }

    pub fn not_applicable(&mut self, name: &str) {
        self.slot(name).not_applicable += 1;
    }

    pub fn skip(&mut self, name: &str, notice: &str) {
        let o = self.slot(name);
        o.skipped += 1;
        o.notice = least(o.notice.take(), Some(notice.to_string()));
    }

    /// Adds the tallies of `other`; statements unknown here are appended.
    pub fn merge(&mut self, other: &PropertyReport) {
        self.algebras += other.algebras;
        for o in &other.outcomes {
            match self.outcomes.iter_mut().find(|m| m.name == o.name) {
                Some(mine) => mine.absorb(o),
                None => self.outcomes.push(o.clone()),
            }
        }
    }

    pub fn failed(&self) -> impl Iterator<Item = &PropertyOutcome> {
        self.outcomes.iter().filter(|o| o.status() == Status::Fail)
    }

    pub fn failed_count(&self) -> usize {
        self.failed().count()
    }

    pub fn all_hold(&self) -> bool {
        self.failed_count() == 0
    }
}

/// Compact, reproducible description of an algebra: field and squares.
pub fn algebra_signature<F: Field>(a: &EvolutionAlgebra<F>) -> String {
    let f = a.field();
    let cols: Vec<String> = a
        .squares()
        .iter()
        .map(|s| {
            let coords: Vec<String> = s.iter().map(|x| f.format(x)).collect();
            format!("({})", coords.join(","))
        })
        .collect();
    format!("{} [{}]", f.descriptor(), cols.join(" "))
}

pub(crate) fn show_set<F: Field>(a: &EvolutionAlgebra<F>, h: VertexSet) -> String {
    h.display(a.labels()).to_string()
}

pub(crate) fn show_subspace<F: Field>(s: &Subspace<F>) -> String {
    let rows: Vec<String> = s.format_basis().iter().map(|r| format!("({})", r.join(","))).collect();
    format!("<{}>", rows.join(","))
}

pub(crate) fn show_ideal<F: Field>(i: &Ideal<F>) -> String {
    show_subspace(i.subspace())
}
