//! Named strict or non-strict comparisons and their reports.

use exactfield::{format_rational, BigRational};
use serde::{Deserialize, Serialize};

/// The comparison performed by a [`Condition`].
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Relation {
    /// `value > bound`.
    Greater,
    /// `value ≥ bound`.
    AtLeast,
    /// `value < bound`.
    Less,
    /// `value ≤ bound`.
    AtMost,
}

impl Relation {
    fn symbol(self) -> &'static str {
        match self {
            Relation::Greater => ">",
            Relation::AtLeast => ">=",
            Relation::Less => "<",
            Relation::AtMost => "<=",
        }
    }

    fn eval(self, value: &BigRational, bound: &BigRational) -> bool {
        match self {
            Relation::Greater => value > bound,
            Relation::AtLeast => value >= bound,
            Relation::Less => value < bound,
            Relation::AtMost => value <= bound,
        }
    }
}

/// One exact comparison `value REL bound`; a missing bound is vacuous.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Condition {
    /// Short name.
    pub name: String,
    /// The compared quantity.
    pub value: BigRational,
    /// The comparison.
    pub relation: Relation,
    /// The bound, or `None` when the condition is vacuous.
    pub bound: Option<BigRational>,
}

impl Condition {
    /// Builds a condition.
    pub fn new(name: impl Into<String>, value: BigRational, relation: Relation, bound: Option<BigRational>) -> Condition {
        Condition { name: name.into(), value, relation, bound }
    }

    /// Whether the comparison holds.
    pub fn holds(&self) -> bool {
        self.bound.as_ref().map_or(true, |b| self.relation.eval(&self.value, b))
    }

    /// A one-line rendering with exact rationals.
    pub fn describe(&self) -> String {
        match &self.bound {
            Some(b) => format!(
                "{}: {} {} {} ({})",
                self.name,
                format_rational(&self.value),
                self.relation.symbol(),
                format_rational(b),
                if self.holds() { "holds" } else { "fails" }
            ),
            None => format!("{}: vacuous", self.name),
        }
    }
}

/// A conjunction of conditions.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ThresholdReport {
    /// Conditions in a fixed order.
    pub conditions: Vec<Condition>,
}

impl ThresholdReport {
    /// Whether every condition holds.
    pub fn ok(&self) -> bool {
        self.conditions.iter().all(Condition::holds)
    }

    /// Name of the first failing condition.
    pub fn first_failure(&self) -> Option<&str> {
        self.conditions.iter().find(|c| !c.holds()).map(|c| c.name.as_str())
    }

    /// Looks a condition up by name.
    pub fn get(&self, name: &str) -> Option<&Condition> {
        self.conditions.iter().find(|c| c.name == name)
    }

    /// Serializable form.
    pub fn to_doc(&self) -> ReportDoc {
        ReportDoc {
            ok: self.ok(),
            conditions: self
                .conditions
                .iter()
                .map(|c| ConditionDoc {
                    name: c.name.clone(),
                    value: format_rational(&c.value),
                    relation: c.relation,
                    bound: c.bound.as_ref().map(format_rational),
                    holds: c.holds(),
                })
                .collect(),
        }
    }
}

/// JSON form of a [`Condition`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionDoc {
    /// Name.
    pub name: String,
    /// Compared value.
    pub value: String,
    /// Relation.
    pub relation: Relation,
    /// Bound, absent when vacuous.
    pub bound: Option<String>,
    /// Whether it holds.
    pub holds: bool,
}

/// JSON form of a [`ThresholdReport`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDoc {
    /// Conjunction value.
    pub ok: bool,
    /// Individual conditions.
    pub conditions: Vec<ConditionDoc>,
}
