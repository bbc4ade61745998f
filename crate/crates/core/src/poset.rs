//! Finite posets over dense indices `0..n`, built from cover pairs or a full
//! order relation.

use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, Ordering};

use thiserror::Error;

use crate::subset::Subset;

static NEXT_ID: AtomicU64 = AtomicU64::new(1);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PosetError {
    #[error("poset has no elements")]
    Empty,
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("cycle detected through `{0}` and `{1}`")]
    Cycle(String, String),
    #[error("relation is not reflexive at `{0}`")]
    NotReflexive(String),
    #[error("relation is not antisymmetric: `{0}` and `{1}`")]
    NotAntisymmetric(String, String),
    #[error("relation is not transitive: `{0}` <= `{1}` <= `{2}`")]
    NotTransitive(String, String, String),
    #[error("declared {which} `{declared}` does not match detected {detected}")]
    BoundMismatch {
        which: &'static str,
        declared: String,
        detected: String,
    },
}

/// A finite partially ordered set.
///
/// `up[i]` is the principal filter `U(i)` and `down[i]` the principal ideal
/// `L(i)`; both are cached at construction so that every cone is an
/// intersection of rows.
#[derive(Clone, Debug)]
pub struct Poset {
    id: u64,
    names: Vec<String>,
    index: HashMap<String, usize>,
    pub(crate) up: Vec<Subset>,
    pub(crate) down: Vec<Subset>,
    bottom: Option<usize>,
    top: Option<usize>,
}

impl PartialEq for Poset {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names
            && self.bottom == other.bottom
            && self.top == other.top
            && self
                .up
                .iter()
                .zip(&other.up)
                .all(|(a, b)| a.to_vec() == b.to_vec())
    }
}

impl Eq for Poset {}

fn index_labels<S: AsRef<str>>(
    names: &[S],
) -> Result<(Vec<String>, HashMap<String, usize>), PosetError> {
    if names.is_empty() {
        return Err(PosetError::Empty);
    }
    let mut index = HashMap::with_capacity(names.len());
    let mut owned = Vec::with_capacity(names.len());
    for (i, n) in names.iter().enumerate() {
        let n = n.as_ref().to_string();
        if index.insert(n.clone(), i).is_some() {
            return Err(PosetError::DuplicateLabel(n));
        }
        owned.push(n);
    }
    Ok((owned, index))
}

impl Poset {
    /// Builds the reflexive-transitive closure of the given `(lower, upper)`
    /// pairs. The pairs need not be true covers.
    pub fn from_covers<S, T>(names: &[S], covers: &[(T, T)]) -> Result<Poset, PosetError>
    where
        S: AsRef<str>,
        T: AsRef<str>,
    {
        let (names, index) = index_labels(names)?;
        let n = names.len();
        let id = NEXT_ID.fetch_add(1, Ordering::Relaxed);
        let mut up: Vec<Subset> = (0..n).map(|i| Subset::singleton(id, n, i)).collect();
        for (lo, hi) in covers {
            let lo_i = *index
                .get(lo.as_ref())
                .ok_or_else(|| PosetError::UnknownLabel(lo.as_ref().to_string()))?;
            let hi_i = *index
                .get(hi.as_ref())
                .ok_or_else(|| PosetError::UnknownLabel(hi.as_ref().to_string()))?;
            if lo_i == hi_i {
                return Err(PosetError::Cycle(names[lo_i].clone(), names[hi_i].clone()));
            }
            up[lo_i].insert(hi_i);
        }
        // Warshall over bitset rows.
        for k in 0..n {
            let row_k = up[k].clone();
            for row in up.iter_mut() {
                if row.contains(k) {
                    row.union_with(&row_k);
                }
            }
        }
        for i in 0..n {
            for j in up[i].iter() {
                if j != i && up[j].contains(i) {
                    return Err(PosetError::Cycle(names[i].clone(), names[j].clone()));
                }
            }
        }
        Ok(Self::assemble(id, names, index, up))
    }

    /// Builds a poset from a full order relation, validating the partial
    /// order axioms.
    pub fn from_relation<S, F>(names: &[S], le: F) -> Result<Poset, PosetError>
    where
        S: AsRef<str>,
        F: Fn(usize, usize) -> bool,
    {
        let (names, index) = index_labels(names)?;
        let n = names.len();
        let id = NEXT_ID.fetch_add(1, Ordering::Relaxed);
        let mut up: Vec<Subset> = (0..n).map(|_| Subset::empty(id, n)).collect();
        for (i, row) in up.iter_mut().enumerate() {
            for j in 0..n {
                if le(i, j) {
                    row.insert(j);
                }
            }
        }
        for i in 0..n {
            if !up[i].contains(i) {
                return Err(PosetError::NotReflexive(names[i].clone()));
            }
            for j in up[i].iter() {
                if j != i && up[j].contains(i) {
                    return Err(PosetError::NotAntisymmetric(
                        names[i].clone(),
                        names[j].clone(),
                    ));
                }
                if let Some(k) = up[j].iter().find(|&k| !up[i].contains(k)) {
                    return Err(PosetError::NotTransitive(
                        names[i].clone(),
                        names[j].clone(),
                        names[k].clone(),
                    ));
                }
            }
        }
        Ok(Self::assemble(id, names, index, up))
    }

    fn assemble(
        id: u64,
        names: Vec<String>,
        index: HashMap<String, usize>,
        up: Vec<Subset>,
    ) -> Poset {
        let n = names.len();
        let mut down: Vec<Subset> = (0..n).map(|_| Subset::empty(id, n)).collect();
        for (i, row) in up.iter().enumerate() {
            for j in row.iter() {
                down[j].insert(i);
            }
        }
        let bottom = (0..n).find(|&i| up[i].is_full());
        let top = (0..n).find(|&i| down[i].is_full());
        Poset {
            id,
            names,
            index,
            up,
            down,
            bottom,
            top,
        }
    }

    pub(crate) fn id(&self) -> u64 {
        self.id
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn label(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn le(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(y)
    }

    pub fn bottom(&self) -> Option<usize> {
        self.bottom
    }

    pub fn top(&self) -> Option<usize> {
        self.top
    }

    pub fn is_bounded(&self) -> bool {
        self.bottom.is_some() && self.top.is_some()
    }

    /// Checks author-declared bounds against the detected ones.
    pub fn check_declared_bounds(
        &self,
        bottom: Option<&str>,
        top: Option<&str>,
    ) -> Result<(), PosetError> {
        for (which, declared, detected) in [("bottom", bottom, self.bottom), ("top", top, self.top)]
        {
            let Some(declared) = declared else { continue };
            let found = detected.map(|i| self.names[i].clone());
            if found.as_deref() != Some(declared) {
                return Err(PosetError::BoundMismatch {
                    which,
                    declared: declared.to_string(),
                    detected: found.map_or_else(|| "none".to_string(), |f| format!("`{f}`")),
                });
            }
        }
        Ok(())
    }

    pub fn empty_set(&self) -> Subset {
        Subset::empty(self.id, self.len())
    }

    pub fn full_set(&self) -> Subset {
        Subset::full(self.id, self.len())
    }

    pub fn singleton(&self, x: usize) -> Subset {
        Subset::singleton(self.id, self.len(), x)
    }

    pub fn set_of(&self, elements: impl IntoIterator<Item = usize>) -> Subset {
        let mut s = self.empty_set();
        for x in elements {
            s.insert(x);
        }
        s
    }

    /// Subset from labels; `None` if a label is unknown.
    pub fn set_of_labels(&self, labels: &[&str]) -> Option<Subset> {
        let mut s = self.empty_set();
        for l in labels {
            s.insert(self.index_of(l)?);
        }
        Some(s)
    }

    /// `{a,b,c}` with members in index order.
    pub fn render_set(&self, s: &Subset) -> String {
        let labels: Vec<&str> = s.iter().map(|x| self.label(x)).collect();
        format!("{{{}}}", labels.join(","))
    }

    /// Hasse diagram: pairs `(x, y)` with `x < y` and nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.len() {
            for y in self.up[x].iter() {
                if y == x {
                    continue;
                }
                let between = self.up[x].iter().any(|z| z != x && z != y && self.le(z, y));
                if !between {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// Order transposed, bounds swapped, labels kept.
    pub fn dual(&self) -> Poset {
        Poset::from_relation(&self.names, |i, j| self.le(j, i)).expect("dual of a poset is a poset")
    }

    /// Componentwise order on pairs, labelled `(x,y)`.
    pub fn direct_product(&self, other: &Poset) -> Poset {
        let m = other.len();
        let names: Vec<String> = (0..self.len() * m)
            .map(|k| format!("({},{})", self.label(k / m), other.label(k % m)))
            .collect();
        Poset::from_relation(&names, |a, b| {
            self.le(a / m, b / m) && other.le(a % m, b % m)
        })
        .expect("product of posets is a poset")
    }

    /// Same order with elements renamed.
    pub fn relabel<S: AsRef<str>>(&self, names: &[S]) -> Result<Poset, PosetError> {
        Poset::from_relation(names, |i, j| self.le(i, j))
    }

    /// Length of the longest chain ending at `x`.
    pub fn rank(&self, x: usize) -> usize {
        let mut memo = vec![usize::MAX; self.len()];
        self.rank_memo(x, &mut memo)
    }

    fn rank_memo(&self, x: usize, memo: &mut [usize]) -> usize {
        if memo[x] != usize::MAX {
            return memo[x];
        }
        let r = self.down[x]
            .iter()
            .filter(|&y| y != x)
            .map(|y| self.rank_memo(y, memo) + 1)
            .max()
            .unwrap_or(0);
        memo[x] = r;
        r
    }
}
