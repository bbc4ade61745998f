//! Decision procedures for the structural properties of posets and
//! complemented posets.
//!
//! Every checker quantifies in lexicographic index order over its variables
//! (`x` outermost) and reports the first failing assignment, so results are
//! identical for any thread count.

use crate::complement::{complement_law_violation, ComplementedPoset};
use crate::completion;
use crate::lattice::{Lattice, NotALattice};
use crate::poset::Poset;
use crate::subset::Subset;
use crate::verdict::{scan, Verdict, Witness};

/// Pair tables `LU(x,y)` and `UL(x,y)`.
struct PairCones {
    n: usize,
    lu: Vec<Subset>,
    ul: Vec<Subset>,
}

impl PairCones {
    fn new(p: &Poset) -> Self {
        let n = p.len();
        let mut lu = Vec::with_capacity(n * n);
        let mut ul = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                lu.push(p.lower(&p.upper2(x, y)));
                ul.push(p.upper(&p.lower2(x, y)));
            }
        }
        Self { n, lu, ul }
    }

    fn lu(&self, x: usize, y: usize) -> &Subset {
        &self.lu[x * self.n + y]
    }

    fn ul(&self, x: usize, y: usize) -> &Subset {
        &self.ul[x * self.n + y]
    }
}

fn mismatch(p: &Poset, tag: &str, vars: &[(&str, usize)], lhs: &Subset, rhs: &Subset) -> Witness {
    Witness::new(
        vars,
        format!("{tag}: {} != {}", p.render_set(lhs), p.render_set(rhs)),
    )
}

/// Scans all triples `(x, y, z)` with an identity `lhs == rhs`.
fn triples<F>(p: &Poset, tag: &str, f: F) -> Verdict
where
    F: Fn(usize, usize, usize) -> Option<(Subset, Subset)> + Sync + Send,
{
    let n = p.len();
    scan(n, |x| {
        for y in 0..n {
            for z in 0..n {
                if let Some((lhs, rhs)) = f(x, y, z) {
                    if lhs != rhs {
                        return Some(mismatch(
                            p,
                            tag,
                            &[("x", x), ("y", y), ("z", z)],
                            &lhs,
                            &rhs,
                        ));
                    }
                }
            }
        }
        None
    })
}

/// `L(U(x,y),z) = LU(x,L(y,z))` whenever `x <= z`.
pub fn is_modular_poset(p: &Poset) -> Verdict {
    let c = PairCones::new(p);
    triples(p, "modular", |x, y, z| {
        if !p.le(x, z) {
            return None;
        }
        let lhs = c.lu(x, y).intersection(p.principal_lower(z));
        let rhs = p.lower(&p.principal_upper(x).intersection(c.ul(y, z)));
        Some((lhs, rhs))
    })
}

/// `L(U(x,y),z) = LU(L(x,z),L(y,z))`.
pub fn distributive_identity_1(p: &Poset) -> Verdict {
    let c = PairCones::new(p);
    triples(p, "distributive-1", |x, y, z| {
        let lhs = c.lu(x, y).intersection(p.principal_lower(z));
        let rhs = p.lower(&c.ul(x, z).intersection(c.ul(y, z)));
        Some((lhs, rhs))
    })
}

/// `LU(L(x,y),z) = L(U(x,z),U(y,z))`.
pub fn distributive_identity_2(p: &Poset) -> Verdict {
    let c = PairCones::new(p);
    triples(p, "distributive-2", |x, y, z| {
        let lhs = p.lower(&c.ul(x, y).intersection(p.principal_upper(z)));
        let rhs = c.lu(x, z).intersection(c.lu(y, z));
        Some((lhs, rhs))
    })
}

/// Distributivity by the first identity. The two identities are equivalent
/// on posets; a disagreement is a bug and panics.
pub fn is_distributive_poset(p: &Poset) -> Verdict {
    let first = distributive_identity_1(p);
    let second = distributive_identity_2(p);
    assert_eq!(
        first.holds(),
        second.holds(),
        "distributive identities disagree: {first} vs {second}"
    );
    first
}

/// `L(U(x,y),U(x,z)) = LU(x,L(y,U(x,z)))`.
pub fn strongly_modular_identity_1(p: &Poset) -> Verdict {
    let c = PairCones::new(p);
    triples(p, "strongly-modular-1", |x, y, z| {
        let lhs = c.lu(x, y).intersection(c.lu(x, z));
        let inner = p.principal_lower(y).intersection(c.lu(x, z));
        let rhs = p.lower(&p.principal_upper(x).intersection(&p.upper(&inner)));
        Some((lhs, rhs))
    })
}

/// `L(U(L(x,z),y),z) = LU(L(x,z),L(y,z))`.
pub fn strongly_modular_identity_2(p: &Poset) -> Verdict {
    let c = PairCones::new(p);
    triples(p, "strongly-modular-2", |x, y, z| {
        let lhs = p
            .lower(&c.ul(x, z).intersection(p.principal_upper(y)))
            .intersection(p.principal_lower(z));
        let rhs = p.lower(&c.ul(x, z).intersection(c.ul(y, z)));
        Some((lhs, rhs))
    })
}

/// Both strong-modularity identities; the witness note names the failing one.
pub fn is_strongly_modular(p: &Poset) -> Verdict {
    strongly_modular_identity_1(p).and_then(|| strongly_modular_identity_2(p))
}

/// Strict modularity, quantifying over LU-closed sets instead of arbitrary
/// subsets.
///
/// Every `L(Z)` is closed and every closed `A` is `L(U(A))`; `x <= Z` iff
/// `x ∈ L(Z)`, and `L(X) <= z` iff `z ∈ U(L(X))`. So the first condition is
/// checked for closed `A ∋ x` in place of `L(Z)`, the second for closed `A`
/// with `z ∈ U(A)` in place of `L(X)`.
pub fn is_strictly_modular(p: &Poset) -> Verdict {
    let closed = completion::closed_sets(p);
    strictly_modular_over(p, &closed)
}

pub(crate) fn strictly_modular_over(p: &Poset, closed: &[Subset]) -> Verdict {
    let n = p.len();
    let c = PairCones::new(p);
    let first = scan(n, |x| {
        for y in 0..n {
            for a in closed.iter().filter(|a| a.contains(x)) {
                let lhs = c.lu(x, y).intersection(a);
                let inner = p.principal_lower(y).intersection(a);
                let rhs = p.lower(&p.principal_upper(x).intersection(&p.upper(&inner)));
                if lhs != rhs {
                    return Some(
                        mismatch(
                            p,
                            "strictly-modular (x <= Z)",
                            &[("x", x), ("y", y)],
                            &lhs,
                            &rhs,
                        )
                        .with_set("L(Z)", a.clone()),
                    );
                }
            }
        }
        None
    });
    if !first.holds() {
        return first;
    }
    scan(closed.len(), |i| {
        let a = &closed[i];
        let ua = p.upper(a);
        for y in 0..n {
            let lhs_base = p.lower(&ua.intersection(p.principal_upper(y)));
            for z in ua.iter() {
                let lhs = lhs_base.intersection(p.principal_lower(z));
                let rhs = p.lower(&ua.intersection(c.ul(y, z)));
                if lhs != rhs {
                    let mut w = mismatch(
                        p,
                        "strictly-modular (L(X) <= z)",
                        &[("y", y), ("z", z)],
                        &lhs,
                        &rhs,
                    );
                    w.sets.push(("L(X)".to_string(), a.clone()));
                    return Some(w);
                }
            }
        }
        None
    })
}

/// `(x∨y)∧(x∨z) = x∨(y∧(x∨z))` on a lattice.
pub fn is_modular_lattice(p: &Poset) -> Result<Verdict, NotALattice> {
    let l = Lattice::new(p)?;
    let n = p.len();
    Ok(scan(n, |x| {
        for y in 0..n {
            for z in 0..n {
                let xz = l.join(x, z);
                let lhs = l.meet(l.join(x, y), xz);
                let rhs = l.join(x, l.meet(y, xz));
                if lhs != rhs {
                    return Some(Witness::new(
                        &[("x", x), ("y", y), ("z", z)],
                        format!(
                            "(x v y) ^ (x v z) = {} but x v (y ^ (x v z)) = {}",
                            p.label(lhs),
                            p.label(rhs)
                        ),
                    ));
                }
            }
        }
        None
    }))
}

/// `x ∨ ((x ∨ y) ∧ x') = x ∨ y` on a lattice.
pub fn orthomodular_identity(cp: &ComplementedPoset) -> Result<Verdict, NotALattice> {
    let p = cp.poset();
    let l = Lattice::new(p)?;
    let n = p.len();
    Ok(scan(n, |x| {
        (0..n).find_map(|y| {
            let xy = l.join(x, y);
            let lhs = l.join(x, l.meet(xy, cp.comp(x)));
            (lhs != xy).then(|| {
                Witness::new(
                    &[("x", x), ("y", y)],
                    format!(
                        "x v ((x v y) ^ x') = {} but x v y = {}",
                        p.label(lhs),
                        p.label(xy)
                    ),
                )
            })
        })
    }))
}

/// Complementation laws, re-checked element by element.
pub fn complementation(cp: &ComplementedPoset) -> Verdict {
    let p = cp.poset();
    (0..p.len())
        .find_map(|x| {
            complement_law_violation(p, x, cp.comp(x), cp.bottom(), cp.top())
                .map(|law| Witness::new(&[("x", x)], law))
        })
        .into()
}

/// Complementation that is an antitone involution.
pub fn is_orthoposet(cp: &ComplementedPoset) -> Verdict {
    complementation(cp)
        .and_then(|| cp.involution())
        .and_then(|| cp.antitone())
}

/// Distributive orthoposet.
pub fn is_boolean_poset(cp: &ComplementedPoset) -> Verdict {
    is_orthoposet(cp).and_then(|| is_distributive_poset(cp.poset()))
}

pub fn is_ortholattice(cp: &ComplementedPoset) -> Result<Verdict, NotALattice> {
    Lattice::new(cp.poset())?;
    Ok(is_orthoposet(cp))
}

pub fn is_orthomodular_lattice(cp: &ComplementedPoset) -> Result<Verdict, NotALattice> {
    let ortho = is_ortholattice(cp)?;
    if !ortho.holds() {
        return Ok(ortho);
    }
    orthomodular_identity(cp)
}
