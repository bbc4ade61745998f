//! Dedekind-MacNeille completion `D(P)`, the sublattice `D₀(P)` generated by
//! the principal ideals, and the extension of an orthocomplementation to
//! both.

use std::collections::{HashMap, HashSet};

use thiserror::Error;

use crate::complement::ComplementedPoset;
use crate::poset::Poset;
use crate::props;
use crate::subset::Subset;
use crate::verdict::{Verdict, Witness};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CompletionError {
    #[error("star extension needs an orthoposet: {0}")]
    NotOrthoposet(String),
    #[error("completion was built from a different poset")]
    BaseMismatch,
    #[error("family is not closed under star at {0}")]
    NotClosedUnderStar(String),
}

/// All LU-closed subsets of `p`, ordered by size then member list.
///
/// These are exactly the intersections of principal ideals (with the empty
/// intersection being `P`), generated breadth-first.
pub fn closed_sets(p: &Poset) -> Vec<Subset> {
    let mut seen: HashSet<Subset> = HashSet::new();
    let mut queue = vec![p.full_set()];
    seen.insert(p.full_set());
    while let Some(a) = queue.pop() {
        for x in 0..p.len() {
            let b = a.intersection(p.principal_lower(x));
            if !seen.contains(&b) {
                seen.insert(b.clone());
                queue.push(b);
            }
        }
    }
    let mut out: Vec<Subset> = seen.into_iter().collect();
    out.sort_by(|a, b| a.size_lex_cmp(b));
    out
}

/// A lattice of LU-closed sets of a base poset, ordered by inclusion.
#[derive(Clone, Debug)]
pub struct CompletionLattice {
    base: Poset,
    closed: Vec<Subset>,
    index: HashMap<Subset, usize>,
    order: Poset,
    embedding: Vec<usize>,
    star: Option<Vec<usize>>,
}

impl CompletionLattice {
    fn from_family(base: &Poset, mut closed: Vec<Subset>) -> Self {
        closed.sort_by(|a, b| a.size_lex_cmp(b));
        let index: HashMap<Subset, usize> = closed.iter().cloned().zip(0..).collect();
        let embedding: Vec<usize> = (0..base.len())
            .map(|x| index[base.principal_lower(x)])
            .collect();
        let mut principal = vec![None; closed.len()];
        for (x, &i) in embedding.iter().enumerate() {
            principal[i] = Some(x);
        }
        let taken: HashSet<&str> = base.names().iter().map(String::as_str).collect();
        let names: Vec<String> = closed
            .iter()
            .enumerate()
            .map(|(i, a)| match principal[i] {
                Some(x) => base.label(x).to_string(),
                None => {
                    let r = base.render_set(a);
                    if taken.contains(r.as_str()) {
                        format!("{r}@{i}")
                    } else {
                        r
                    }
                }
            })
            .collect();
        let order = Poset::from_relation(&names, |i, j| closed[i].is_subset(&closed[j]))
            .expect("inclusion is a partial order");
        CompletionLattice {
            base: base.clone(),
            closed,
            index,
            order,
            embedding,
            star: None,
        }
    }

    pub fn base(&self) -> &Poset {
        &self.base
    }

    pub fn len(&self) -> usize {
        self.closed.len()
    }

    pub fn is_empty(&self) -> bool {
        self.closed.is_empty()
    }

    pub fn closed_sets(&self) -> &[Subset] {
        &self.closed
    }

    pub fn set(&self, i: usize) -> &Subset {
        &self.closed[i]
    }

    pub fn position(&self, a: &Subset) -> Option<usize> {
        self.index.get(a).copied()
    }

    /// The family as a poset under inclusion. Principal ideals carry the
    /// label of their generator; other sets are labelled by their members.
    pub fn order(&self) -> &Poset {
        &self.order
    }

    /// `x ↦` index of `L(x)`.
    pub fn embedding(&self) -> &[usize] {
        &self.embedding
    }

    pub fn star(&self) -> Option<&[usize]> {
        self.star.as_deref()
    }

    /// `A ∨ B = LU(A ∪ B)`.
    pub fn join_set(&self, a: &Subset, b: &Subset) -> Subset {
        self.base.lu(&a.union(b))
    }

    /// Index of `LU(A ∪ B)`, if it lies in the family.
    pub fn join(&self, i: usize, j: usize) -> Option<usize> {
        self.position(&self.join_set(&self.closed[i], &self.closed[j]))
    }

    /// Index of `A ∩ B`, if it lies in the family.
    pub fn meet(&self, i: usize, j: usize) -> Option<usize> {
        self.position(&self.closed[i].intersection(&self.closed[j]))
    }

    /// The family with its star table as a complemented poset.
    pub fn as_complemented(&self) -> Option<ComplementedPoset> {
        let star = self.star.clone()?;
        ComplementedPoset::new(self.order.clone(), star).ok()
    }
}

pub fn dm_completion(p: &Poset) -> CompletionLattice {
    CompletionLattice::from_family(p, closed_sets(p))
}

/// Least subfamily containing every `L(x)` and closed under join and meet.
pub fn d0_sublattice(c: &CompletionLattice) -> CompletionLattice {
    let p = &c.base;
    let mut family: Vec<Subset> = Vec::new();
    let mut seen: HashSet<Subset> = HashSet::new();
    for x in 0..p.len() {
        let s = p.principal_lower(x).clone();
        if seen.insert(s.clone()) {
            family.push(s);
        }
    }
    let mut done = 0;
    while done < family.len() {
        let a = family[done].clone();
        for k in 0..=done {
            let b = family[k].clone();
            for s in [c.join_set(&a, &b), a.intersection(&b)] {
                if seen.insert(s.clone()) {
                    family.push(s);
                }
            }
        }
        done += 1;
    }
    let mut d0 = CompletionLattice::from_family(p, family);
    // Stays `None` if the family is not closed under the star.
    if let Some(star) = &c.star {
        d0.star = d0
            .closed
            .iter()
            .map(|a| d0.position(&c.closed[star[c.index[a]]]))
            .collect();
    }
    d0
}

/// `A' = {x' | x ∈ A}`.
pub fn prime_image(cp: &ComplementedPoset, a: &Subset) -> Subset {
    cp.poset().set_of(a.iter().map(|x| cp.comp(x)))
}

/// Extends `'` to `A* = L(A')` on every set of the family.
pub fn star_extension(
    c: &CompletionLattice,
    cp: &ComplementedPoset,
) -> Result<CompletionLattice, CompletionError> {
    if c.base != *cp.poset() {
        return Err(CompletionError::BaseMismatch);
    }
    if let Verdict::Fails(w) = props::is_orthoposet(cp) {
        return Err(CompletionError::NotOrthoposet(w.note));
    }
    let p = &c.base;
    let star = c
        .closed
        .iter()
        .map(|a| {
            let s = p.lower(&prime_image(cp, a));
            c.position(&s)
                .ok_or_else(|| CompletionError::NotClosedUnderStar(p.render_set(a)))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let mut out = c.clone();
    out.star = Some(star);
    Ok(out)
}

/// Exhaustively checks the orthocomplementation facts for the star table:
///
/// 1. `L(A') = (U(A))'` and `U(A') = (L(A))'`,
/// 2. `A ⊆ B` implies `B* ⊆ A*`,
/// 3. `A** = A`,
/// 4. `A ∨ A* = P`,
/// 5. `A ∩ A* = {0}`,
/// 6. `(L(a))* = L(a')` for every base element `a`.
pub fn verify_star(c: &CompletionLattice, cp: &ComplementedPoset) -> Verdict {
    let Some(star) = c.star() else {
        return Verdict::Fails(Witness::new(&[], "no star table"));
    };
    let p = &c.base;
    let fail =
        |tag: &str, a: &Subset| Verdict::Fails(Witness::new(&[], tag).with_set("A", a.clone()));
    for a in &c.closed {
        let a_prime = prime_image(cp, a);
        if p.lower(&a_prime) != prime_image(cp, &p.upper(a))
            || p.upper(&a_prime) != prime_image(cp, &p.lower(a))
        {
            return fail("cones of A' are primes of cones of A", a);
        }
    }
    for (i, a) in c.closed.iter().enumerate() {
        for (j, b) in c.closed.iter().enumerate() {
            if a.is_subset(b) && !c.closed[star[j]].is_subset(&c.closed[star[i]]) {
                return Verdict::Fails(
                    Witness::new(&[], "star is not antitone")
                        .with_set("A", a.clone())
                        .with_set("B", b.clone()),
                );
            }
        }
    }
    let bottom = p
        .bottom()
        .map(|b| p.singleton(b))
        .unwrap_or_else(|| p.empty_set());
    for (i, a) in c.closed.iter().enumerate() {
        let s = &c.closed[star[i]];
        if star[star[i]] != i {
            return fail("A** != A", a);
        }
        if !c.join_set(a, s).is_full() {
            return fail("A v A* != P", a);
        }
        if a.intersection(s) != bottom {
            return fail("A ^ A* != {0}", a);
        }
    }
    for x in 0..p.len() {
        let image = &c.closed[star[c.embedding[x]]];
        if image != p.principal_lower(cp.comp(x)) {
            return Verdict::Fails(Witness::new(&[("a", x)], "(L(a))* != L(a')"));
        }
    }
    Verdict::Holds
}

/// Modularity of `D(P)` and `D₀(P)` next to strong and strict modularity of
/// `P`.
#[derive(Clone, Debug)]
pub struct ModularityReport {
    pub d_modular: Verdict,
    pub d0_modular: Verdict,
    pub p_strongly_modular: Verdict,
    pub p_strictly_modular: Verdict,
}

impl ModularityReport {
    /// `D₀` modular implies strongly modular; `D` modular implies strictly
    /// modular.
    pub fn implications_hold(&self) -> bool {
        (!self.d0_modular.holds() || self.p_strongly_modular.holds())
            && (!self.d_modular.holds() || self.p_strictly_modular.holds())
    }
}

pub fn completion_modularity_report(p: &Poset) -> ModularityReport {
    let d = dm_completion(p);
    let d0 = d0_sublattice(&d);
    let modular = |c: &CompletionLattice| {
        props::is_modular_lattice(c.order()).expect("a completion family is a lattice")
    };
    ModularityReport {
        d_modular: modular(&d),
        d0_modular: modular(&d0),
        p_strongly_modular: props::is_strongly_modular(p),
        p_strictly_modular: props::strictly_modular_over(p, d.closed_sets()),
    }
}

/// `L(x) ↦ x` is onto exactly when `p` is already complete.
pub fn is_isomorphic_to_base(c: &CompletionLattice) -> bool {
    let mut hit = vec![false; c.len()];
    for &i in &c.embedding {
        hit[i] = true;
    }
    hit.iter().all(|&h| h)
        && (0..c.base.len()).all(|x| {
            (0..c.base.len()).all(|y| c.base.le(x, y) == c.order.le(c.embedding[x], c.embedding[y]))
        })
}
