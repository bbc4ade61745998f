//! Join and meet tables for posets that happen to be lattices.

use thiserror::Error;

use crate::poset::Poset;
use crate::subset::Subset;
use crate::verdict::{Verdict, Witness};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("not a lattice: {0}")]
pub struct NotALattice(pub String);

/// Least element of `set`, if any.
pub(crate) fn least(p: &Poset, set: &Subset) -> Option<usize> {
    set.iter().find(|&m| set.is_subset(p.principal_upper(m)))
}

/// Greatest element of `set`, if any.
pub(crate) fn greatest(p: &Poset, set: &Subset) -> Option<usize> {
    set.iter().find(|&m| set.is_subset(p.principal_lower(m)))
}

fn minimal(p: &Poset, set: &Subset) -> Vec<usize> {
    set.iter()
        .filter(|&m| set.iter().all(|k| k == m || !p.le(k, m)))
        .collect()
}

fn maximal(p: &Poset, set: &Subset) -> Vec<usize> {
    set.iter()
        .filter(|&m| set.iter().all(|k| k == m || !p.le(m, k)))
        .collect()
}

/// Every pair has a join and a meet. The witness is the first pair `(x, y)`,
/// `x < y` by index, lacking one.
pub fn is_lattice(p: &Poset) -> Verdict {
    let labels = |xs: Vec<usize>| {
        let ls: Vec<&str> = xs.into_iter().map(|x| p.label(x)).collect();
        format!("{{{}}}", ls.join(","))
    };
    for x in 0..p.len() {
        for y in x + 1..p.len() {
            let ub = p.upper2(x, y);
            if least(p, &ub).is_none() {
                return Verdict::Fails(Witness::new(
                    &[("x", x), ("y", y)],
                    format!("no join: minimal upper bounds {}", labels(minimal(p, &ub))),
                ));
            }
            let lb = p.lower2(x, y);
            if greatest(p, &lb).is_none() {
                return Verdict::Fails(Witness::new(
                    &[("x", x), ("y", y)],
                    format!("no meet: maximal lower bounds {}", labels(maximal(p, &lb))),
                ));
            }
        }
    }
    Verdict::Holds
}

/// Materialized join and meet tables.
#[derive(Clone, Debug)]
pub struct Lattice {
    n: usize,
    join: Vec<usize>,
    meet: Vec<usize>,
    bottom: usize,
    top: usize,
}

impl Lattice {
    pub fn new(p: &Poset) -> Result<Lattice, NotALattice> {
        let n = p.len();
        let mut join = vec![0; n * n];
        let mut meet = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                join[x * n + y] = least(p, &p.upper2(x, y)).ok_or_else(|| {
                    NotALattice(format!("{} and {} have no join", p.label(x), p.label(y)))
                })?;
                meet[x * n + y] = greatest(p, &p.lower2(x, y)).ok_or_else(|| {
                    NotALattice(format!("{} and {} have no meet", p.label(x), p.label(y)))
                })?;
            }
        }
        // A finite lattice with at least one element is bounded.
        let bottom = p.bottom().expect("finite lattice has a bottom");
        let top = p.top().expect("finite lattice has a top");
        Ok(Lattice {
            n,
            join,
            meet,
            bottom,
            top,
        })
    }

    pub fn join(&self, x: usize, y: usize) -> usize {
        self.join[x * self.n + y]
    }

    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.meet[x * self.n + y]
    }

    /// Join of all members; the bottom for the empty set.
    pub fn join_all(&self, s: &Subset) -> usize {
        s.iter().fold(self.bottom, |acc, x| self.join(acc, x))
    }

    /// Meet of all members; the top for the empty set.
    pub fn meet_all(&self, s: &Subset) -> usize {
        s.iter().fold(self.top, |acc, x| self.meet(acc, x))
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }
}
