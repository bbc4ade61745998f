//! Outcome of every checker: holds, or fails with a falsifying assignment.

use std::fmt;

use rayon::prelude::*;

use crate::poset::Poset;
use crate::subset::Subset;

/// A falsifying assignment.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    /// Element-valued variables, in quantifier order.
    pub assignment: Vec<(String, usize)>,
    /// Set-valued bindings (closed sets standing in for quantified subsets).
    pub sets: Vec<(String, Subset)>,
    /// Short reason tag.
    pub note: String,
}

impl Witness {
    pub fn new(vars: &[(&str, usize)], note: impl Into<String>) -> Self {
        Self {
            assignment: vars.iter().map(|&(v, x)| (v.to_string(), x)).collect(),
            sets: Vec::new(),
            note: note.into(),
        }
    }

    pub fn with_set(mut self, name: &str, set: Subset) -> Self {
        self.sets.push((name.to_string(), set));
        self
    }

    pub fn get(&self, var: &str) -> Option<usize> {
        self.assignment
            .iter()
            .find(|(v, _)| v == var)
            .map(|&(_, x)| x)
    }

    /// `var=label` pairs separated by `, `.
    pub fn render(&self, p: &Poset) -> String {
        let mut parts: Vec<String> = self
            .assignment
            .iter()
            .map(|(v, x)| format!("{v}={}", p.label(*x)))
            .collect();
        for (v, s) in &self.sets {
            parts.push(format!("{v}={}", p.render_set(s)));
        }
        parts.join(", ")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails(Witness),
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Verdict::Holds => None,
            Verdict::Fails(w) => Some(w),
        }
    }

    /// Same outcome and, on failure, the same assignment. Notes are ignored.
    pub fn agrees_with(&self, other: &Verdict) -> bool {
        match (self, other) {
            (Verdict::Holds, Verdict::Holds) => true,
            (Verdict::Fails(a), Verdict::Fails(b)) => {
                a.assignment == b.assignment && a.sets == b.sets
            }
            _ => false,
        }
    }

    /// Runs `next` only if this verdict holds.
    pub fn and_then<F: FnOnce() -> Verdict>(self, next: F) -> Verdict {
        match self {
            Verdict::Holds => next(),
            fails => fails,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Holds => write!(f, "holds"),
            Verdict::Fails(w) => write!(f, "fails ({})", w.note),
        }
    }
}

impl From<Option<Witness>> for Verdict {
    fn from(w: Option<Witness>) -> Self {
        match w {
            None => Verdict::Holds,
            Some(w) => Verdict::Fails(w),
        }
    }
}

/// Scans `0..outer` in parallel and returns the failure of the smallest
/// outer index. Inner scans must themselves be in lexicographic order, so the
/// result is the global lexicographic minimum regardless of thread count.
pub(crate) fn scan<F>(outer: usize, f: F) -> Verdict
where
    F: Fn(usize) -> Option<Witness> + Sync + Send,
{
    (0..outer).into_par_iter().find_map_first(f).into()
}
