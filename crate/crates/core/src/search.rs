//! Small posets up to isomorphism, their complementations, and witness
//! hunting over property combinations.

use rayon::prelude::*;
use thiserror::Error;

use crate::complement::{complement_law_violation, ComplementedPoset, Structure};
use crate::completion;
use crate::lattice::{is_lattice, NotALattice};
use crate::poset::Poset;
use crate::props;
use crate::verdict::{Verdict, Witness};

/// Largest `n` accepted by [`enumerate_posets`].
pub const DEFAULT_LIMIT: usize = 7;
/// Hard ceiling: canonical codes are packed in a `u64`.
pub const MAX_LIMIT: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("size {n} exceeds the enumeration limit {limit}")]
    LimitExceeded { n: usize, limit: usize },
    #[error("unknown property `{0}`")]
    UnknownProperty(String),
    #[error("property `{0}` needs a complementation")]
    NeedsComplement(String),
    #[error("complementations need a bounded poset")]
    NotBounded,
}

/// Element `i` is below exactly the members of `down[i]` (bitmask, reflexive).
type Masks = Vec<u8>;

/// Longest chain ending at each element.
fn depths(down: &[u8]) -> Vec<usize> {
    let n = down.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| down[i].count_ones());
    let mut depth = vec![0; n];
    for &i in &order {
        for j in 0..n {
            if j != i && down[i] >> j & 1 == 1 {
                depth[i] = depth[i].max(depth[j] + 1);
            }
        }
    }
    depth
}

/// Canonical code and the element order realising it.
///
/// Elements are pre-partitioned by (depth, |down|, |up|); the code is the
/// lexicographically least relation encoding over all orderings that keep
/// the blocks in place, written shell by shell so partial codes prune.
fn canonical(down: &[u8]) -> (u64, Vec<usize>) {
    let n = down.len();
    let depth = depths(down);
    let up: Vec<u32> = (0..n)
        .map(|i| (0..n).filter(|&j| down[j] >> i & 1 == 1).count() as u32)
        .collect();
    let key = |i: usize| (depth[i], down[i].count_ones(), up[i]);
    let mut sorted: Vec<usize> = (0..n).collect();
    sorted.sort_by_key(|&i| key(i));
    let block_of_pos: Vec<_> = sorted.iter().map(|&i| key(i)).collect();

    struct St<'a> {
        down: &'a [u8],
        n: usize,
        total_bits: u32,
        block_of_pos: Vec<(usize, u32, u32)>,
        keys: Vec<(usize, u32, u32)>,
        best: u64,
        best_perm: Vec<usize>,
        perm: Vec<usize>,
        used: u8,
    }

    fn shell(st: &St, k: usize, e: usize) -> (u64, u32) {
        let mut bits = 0u64;
        for i in 0..k {
            let a = st.perm[i];
            bits = bits << 1 | u64::from(st.down[e] >> a & 1);
            bits = bits << 1 | u64::from(st.down[a] >> e & 1);
        }
        (bits, 2 * k as u32)
    }

    fn go(st: &mut St, k: usize, code: u64, len: u32) {
        if len > 0 && st.best != u64::MAX {
            let best_prefix = st.best >> (st.total_bits - len);
            if code > best_prefix {
                return;
            }
        }
        if k == st.n {
            if st.best == u64::MAX || code < st.best {
                st.best = code;
                st.best_perm = st.perm.clone();
            }
            return;
        }
        for e in 0..st.n {
            if st.used >> e & 1 == 1 || st.keys[e] != st.block_of_pos[k] {
                continue;
            }
            let (bits, w) = shell(st, k, e);
            st.used |= 1 << e;
            st.perm.push(e);
            go(st, k + 1, code << w | bits, len + w);
            st.perm.pop();
            st.used &= !(1 << e);
        }
    }

    let mut st = St {
        down,
        n,
        total_bits: (n * (n - 1)) as u32,
        block_of_pos,
        keys: (0..n).map(key).collect(),
        best: u64::MAX,
        best_perm: Vec::new(),
        perm: Vec::with_capacity(n),
        used: 0,
    };
    go(&mut st, 0, 0, 0);
    // An all-ones code is impossible for n > 1 (antisymmetry), so MAX is a
    // safe sentinel; n = 1 has an empty code.
    if n == 1 {
        return (0, vec![0]);
    }
    (st.best, st.best_perm)
}

fn permute(down: &[u8], perm: &[usize]) -> Masks {
    let n = down.len();
    let mut pos = vec![0; n];
    for (k, &e) in perm.iter().enumerate() {
        pos[e] = k;
    }
    perm.iter()
        .map(|&e| {
            (0..n)
                .filter(|&j| down[e] >> j & 1 == 1)
                .fold(0u8, |m, j| m | 1 << pos[j])
        })
        .collect()
}

/// Canonical relabelling of a poset of at most [`MAX_LIMIT`] elements.
pub fn canonical_form(p: &Poset) -> Result<(u64, Poset), SearchError> {
    if p.len() > MAX_LIMIT {
        return Err(SearchError::LimitExceeded {
            n: p.len(),
            limit: MAX_LIMIT,
        });
    }
    let down = masks_of(p);
    let (code, perm) = canonical(&down);
    Ok((code, to_poset(&permute(&down, &perm))))
}

fn masks_of(p: &Poset) -> Masks {
    (0..p.len())
        .map(|i| {
            (0..p.len())
                .filter(|&j| p.le(j, i))
                .fold(0u8, |m, j| m | 1 << j)
        })
        .collect()
}

const NAMES: [&str; MAX_LIMIT] = ["a", "b", "c", "d", "e", "f", "g", "h"];

fn to_poset(down: &[u8]) -> Poset {
    Poset::from_relation(&NAMES[..down.len()], |i, j| down[j] >> i & 1 == 1)
        .expect("enumerated relation is a partial order")
}

/// Canonical classes of size `n`, as (code, masks), sorted by code.
fn classes(n: usize) -> Vec<(u64, Masks)> {
    let mut level: Vec<(u64, Masks)> = vec![(0, vec![1])];
    for m in 1..n {
        // every poset of size m+1 is one of size m plus a maximal element
        let mut next: Vec<(u64, Masks)> = level
            .par_iter()
            .flat_map_iter(|(_, down)| {
                let mut out = Vec::new();
                for ideal in 0u16..(1 << m) {
                    let ideal = ideal as u8;
                    if (0..m).all(|x| ideal >> x & 1 == 0 || down[x] & !ideal == 0) {
                        let mut ext = down.clone();
                        ext.push(ideal | 1 << m);
                        let (code, perm) = canonical(&ext);
                        out.push((code, permute(&ext, &perm)));
                    }
                }
                out
            })
            .collect();
        next.sort_unstable_by_key(|(c, _)| *c);
        next.dedup_by_key(|(c, _)| *c);
        level = next;
    }
    level
}

/// One representative per isomorphism class of `n`-element posets, in
/// canonical order.
pub fn enumerate_posets(n: usize, require_bounded: bool) -> Result<Vec<Poset>, SearchError> {
    enumerate_posets_with_limit(n, require_bounded, DEFAULT_LIMIT)
}

pub fn enumerate_posets_with_limit(
    n: usize,
    require_bounded: bool,
    limit: usize,
) -> Result<Vec<Poset>, SearchError> {
    let limit = limit.min(MAX_LIMIT);
    if n > limit {
        return Err(SearchError::LimitExceeded { n, limit });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let full = (1u16 << n) - 1;
    Ok(classes(n)
        .into_iter()
        .filter(|(_, down)| {
            !require_bounded
                || (down
                    .iter()
                    .any(|&d| d.count_ones() == 1 && down.iter().all(|&e| e & d != 0))
                    && down.iter().any(|&d| u16::from(d) == full))
        })
        .map(|(_, down)| to_poset(&down))
        .collect())
}

/// Every complementation of a bounded poset, in lexicographic order of the
/// map.
pub fn enumerate_complementations(p: &Poset) -> Result<Vec<ComplementedPoset>, SearchError> {
    let (Some(bottom), Some(top)) = (p.bottom(), p.top()) else {
        return Err(SearchError::NotBounded);
    };
    let n = p.len();
    let candidates: Vec<Vec<usize>> = (0..n)
        .map(|x| {
            (0..n)
                .filter(|&c| complement_law_violation(p, x, c, bottom, top).is_none())
                .collect()
        })
        .collect();
    if candidates.iter().any(Vec::is_empty) {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut idx = vec![0usize; n];
    loop {
        let comp = (0..n).map(|x| candidates[x][idx[x]]).collect();
        out.push(ComplementedPoset::new(p.clone(), comp).expect("candidates satisfy the laws"));
        let mut k = n;
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < candidates[k].len() {
                break;
            }
            idx[k] = 0;
        }
    }
}

/// Property names understood by [`check_property`]. Names marked with a
/// trailing `'` need a complementation.
pub const PROPERTIES: &[&str] = &[
    "bounded",
    "lattice",
    "modular",
    "distributive",
    "strongly-modular",
    "strictly-modular",
    "modular-lattice",
    "d-modular",
    "d0-modular",
    "complementation'",
    "involution'",
    "antitone'",
    "orthoposet'",
    "boolean'",
    "ortholattice'",
    "orthomodular'",
];

fn normalize(name: &str) -> String {
    name.trim().to_ascii_lowercase().replace('_', "-")
}

pub fn is_known_property(name: &str) -> bool {
    let name = normalize(name);
    PROPERTIES.iter().any(|p| p.trim_end_matches('\'') == name)
}

pub fn needs_complement(name: &str) -> bool {
    let name = normalize(name);
    PROPERTIES
        .iter()
        .any(|p| p.ends_with('\'') && p.trim_end_matches('\'') == name)
}

fn lattice_only(v: Result<Verdict, NotALattice>) -> Verdict {
    v.unwrap_or_else(|e| Verdict::Fails(Witness::new(&[], e.to_string())))
}

/// Runs a named property checker. Lattice-only properties fail (with the
/// reason as note) on non-lattices.
pub fn check_property(name: &str, s: &Structure) -> Result<Verdict, SearchError> {
    let key = normalize(name);
    if !is_known_property(&key) {
        return Err(SearchError::UnknownProperty(name.to_string()));
    }
    let p = s.poset();
    let v = match key.as_str() {
        "bounded" => {
            if p.is_bounded() {
                Verdict::Holds
            } else {
                Verdict::Fails(Witness::new(&[], "no least or no greatest element"))
            }
        }
        "lattice" => is_lattice(p),
        "modular" => props::is_modular_poset(p),
        "distributive" => props::is_distributive_poset(p),
        "strongly-modular" => props::is_strongly_modular(p),
        "strictly-modular" => props::is_strictly_modular(p),
        "modular-lattice" => lattice_only(props::is_modular_lattice(p)),
        "d-modular" => completion::completion_modularity_report(p).d_modular,
        "d0-modular" => completion::completion_modularity_report(p).d0_modular,
        _ => {
            let cp = s
                .complemented()
                .ok_or_else(|| SearchError::NeedsComplement(name.to_string()))?;
            match key.as_str() {
                "complementation" => props::complementation(cp),
                "involution" => cp.involution(),
                "antitone" => cp.antitone(),
                "orthoposet" => props::is_orthoposet(cp),
                "boolean" => props::is_boolean_poset(cp),
                "ortholattice" => lattice_only(props::is_ortholattice(cp)),
                "orthomodular" => lattice_only(props::is_orthomodular_lattice(cp)),
                _ => unreachable!("checked above"),
            }
        }
    };
    Ok(v)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    pub max_n: usize,
    pub require_bounded: bool,
    /// Search over (poset, complementation) pairs instead of bare posets.
    pub complemented: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self {
            max_n: DEFAULT_LIMIT,
            require_bounded: false,
            complemented: false,
        }
    }
}

/// First structure (smallest `n`, then canonical order, then complementation
/// order) satisfying every `(property, expected)` constraint.
pub fn find_witness(
    constraints: &[(&str, bool)],
    opts: SearchOptions,
) -> Result<Option<Structure>, SearchError> {
    for (name, _) in constraints {
        if !is_known_property(name) {
            return Err(SearchError::UnknownProperty(name.to_string()));
        }
        if needs_complement(name) && !opts.complemented {
            return Err(SearchError::NeedsComplement(name.to_string()));
        }
    }
    let matches = |s: &Structure| -> bool {
        constraints.iter().all(|(name, want)| {
            check_property(name, s)
                .map(|v| v.holds() == *want)
                .unwrap_or(false)
        })
    };
    for n in 1..=opts.max_n {
        let posets =
            enumerate_posets_with_limit(n, opts.require_bounded || opts.complemented, MAX_LIMIT)?;
        let found = posets.par_iter().find_map_first(|p| {
            if opts.complemented {
                enumerate_complementations(p)
                    .ok()?
                    .into_iter()
                    .map(Structure::from)
                    .find(&matches)
            } else {
                let s = Structure::from(p.clone());
                matches(&s).then_some(s)
            }
        });
        if found.is_some() {
            return Ok(found);
        }
    }
    Ok(None)
}

/// An order isomorphism `p -> q` as an index map, if one exists.
pub fn isomorphism(p: &Poset, q: &Poset) -> Option<Vec<usize>> {
    let n = p.len();
    if n != q.len() {
        return None;
    }
    let sig = |r: &Poset, x: usize| (r.principal_lower(x).count(), r.principal_upper(x).count());
    fn go(
        p: &Poset,
        q: &Poset,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        sig: &dyn Fn(&Poset, usize) -> (usize, usize),
    ) -> bool {
        let k = map.len();
        if k == p.len() {
            return true;
        }
        for y in 0..q.len() {
            if used[y] || sig(p, k) != sig(q, y) {
                continue;
            }
            if (0..k).all(|i| p.le(i, k) == q.le(map[i], y) && p.le(k, i) == q.le(y, map[i])) {
                used[y] = true;
                map.push(y);
                if go(p, q, map, used, sig) {
                    return true;
                }
                map.pop();
                used[y] = false;
            }
        }
        false
    }
    let mut map = Vec::with_capacity(n);
    let mut used = vec![false; n];
    go(p, q, &mut map, &mut used, &sig).then_some(map)
}

/// Classes among all labelled relations on `n` points.
#[cfg(test)]
fn brute_force_classes(n: usize) -> usize {
    let mut seen = std::collections::HashSet::new();
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|(i, j)| i != j)
        .collect();
    for bits in 0u64..(1 << pairs.len()) {
        let le = |i: usize, j: usize| {
            i == j || bits >> pairs.iter().position(|&q| q == (i, j)).unwrap() & 1 == 1
        };
        if let Ok(p) = Poset::from_relation(&NAMES[..n], le) {
            seen.insert(canonical_form(&p).unwrap().0);
        }
    }
    seen.len()
}
