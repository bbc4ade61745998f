//! Residuation on complemented structures.
//!
//! On a complemented lattice the term operations
//! `x ⊙ y = (x ∨ y') ∧ y` and `x → y = (x ∧ y) ∨ x'` are checked against the
//! left residuated lattice axioms. On a bounded complemented poset the
//! subset-valued operators `M(x,y) = L(U(x,y'),y)` and `R(x,y) = LU(L(x,y),x')`
//! are checked against the operator left residuated poset axioms.
//!
//! The verifiers never assume modularity; on non-modular inputs they return
//! the failing assignment.

use std::fmt::Write as _;

use thiserror::Error;

use crate::complement::ComplementedPoset;
use crate::lattice::{Lattice, NotALattice};
use crate::subset::Subset;
use crate::verdict::{scan, Verdict, Witness};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ResiduationError {
    #[error(transparent)]
    NotALattice(#[from] NotALattice),
}

/// `⊙` and `→` tables of a complemented lattice.
#[derive(Clone, Debug)]
pub struct TermResiduation {
    n: usize,
    lattice: Lattice,
    odot: Vec<usize>,
    arrow: Vec<usize>,
}

impl TermResiduation {
    pub fn new(cp: &ComplementedPoset) -> Result<Self, ResiduationError> {
        let lattice = Lattice::new(cp.poset())?;
        let n = cp.len();
        let mut odot = Vec::with_capacity(n * n);
        let mut arrow = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                odot.push(lattice.meet(lattice.join(x, cp.comp(y)), y));
                arrow.push(lattice.join(lattice.meet(x, y), cp.comp(x)));
            }
        }
        Ok(Self {
            n,
            lattice,
            odot,
            arrow,
        })
    }

    pub fn odot(&self, x: usize, y: usize) -> usize {
        self.odot[x * self.n + y]
    }

    pub fn arrow(&self, x: usize, y: usize) -> usize {
        self.arrow[x * self.n + y]
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }
}

/// `M` and `R` tables of a bounded complemented poset.
#[derive(Clone, Debug)]
pub struct OperatorResiduation {
    n: usize,
    m: Vec<Subset>,
    r: Vec<Subset>,
}

impl OperatorResiduation {
    pub fn new(cp: &ComplementedPoset) -> Self {
        let p = cp.poset();
        let n = p.len();
        let mut m = Vec::with_capacity(n * n);
        let mut r = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                m.push(
                    p.lower(&p.upper2(x, cp.comp(y)))
                        .intersection(p.principal_lower(y)),
                );
                r.push(
                    p.lower(
                        &p.upper(&p.lower2(x, y))
                            .intersection(p.principal_upper(cp.comp(x))),
                    ),
                );
            }
        }
        Self { n, m, r }
    }

    pub fn m(&self, x: usize, y: usize) -> &Subset {
        &self.m[x * self.n + y]
    }

    pub fn r(&self, x: usize, y: usize) -> &Subset {
        &self.r[x * self.n + y]
    }
}

/// `M(A, y) = L(U(A, y'), y)` for a subset first argument.
pub fn operator_m_set(cp: &ComplementedPoset, a: &Subset, y: usize) -> Subset {
    let p = cp.poset();
    p.lower(&p.upper(a).intersection(p.principal_upper(cp.comp(y))))
        .intersection(p.principal_lower(y))
}

fn triple_scan<F>(n: usize, f: F) -> Verdict
where
    F: Fn(usize, usize, usize) -> Option<String> + Sync + Send,
{
    scan(n, |x| {
        for y in 0..n {
            for z in 0..n {
                if let Some(note) = f(x, y, z) {
                    return Some(Witness::new(&[("x", x), ("y", y), ("z", z)], note));
                }
            }
        }
        None
    })
}

fn pair_scan<F>(n: usize, f: F) -> Verdict
where
    F: Fn(usize, usize) -> Option<String> + Sync + Send,
{
    scan(n, |x| {
        (0..n).find_map(|y| f(x, y).map(|note| Witness::new(&[("x", x), ("y", y)], note)))
    })
}

fn single_scan<F>(n: usize, f: F) -> Verdict
where
    F: Fn(usize) -> Option<String>,
{
    (0..n)
        .find_map(|x| f(x).map(|note| Witness::new(&[("x", x)], note)))
        .into()
}

/// `x ⊙ y <= z` implies `x <= y → z`.
pub fn lattice_adjointness_forward(cp: &ComplementedPoset) -> Result<Verdict, ResiduationError> {
    let t = TermResiduation::new(cp)?;
    let p = cp.poset();
    Ok(triple_scan(cp.len(), |x, y, z| {
        (p.le(t.odot(x, y), z) && !p.le(x, t.arrow(y, z)))
            .then(|| "x*y <= z but x !<= y->z".to_string())
    }))
}

/// `x <= y → z` implies `x ⊙ y <= z`.
pub fn lattice_adjointness_backward(cp: &ComplementedPoset) -> Result<Verdict, ResiduationError> {
    let t = TermResiduation::new(cp)?;
    let p = cp.poset();
    Ok(triple_scan(cp.len(), |x, y, z| {
        (p.le(x, t.arrow(y, z)) && !p.le(t.odot(x, y), z))
            .then(|| "x <= y->z but x*y !<= z".to_string())
    }))
}

/// `(x → y) ⊙ x = x ∧ y`.
pub fn lattice_divisibility(cp: &ComplementedPoset) -> Result<Verdict, ResiduationError> {
    let t = TermResiduation::new(cp)?;
    let p = cp.poset();
    Ok(pair_scan(cp.len(), |x, y| {
        let lhs = t.odot(t.arrow(x, y), x);
        let rhs = t.lattice().meet(x, y);
        (lhs != rhs).then(|| format!("(x->y)*x = {} but x ^ y = {}", p.label(lhs), p.label(rhs)))
    }))
}

/// Unit laws, left adjointness for every triple, and divisibility.
pub fn verify_left_residuated_lattice(cp: &ComplementedPoset) -> Result<Verdict, ResiduationError> {
    let t = TermResiduation::new(cp)?;
    let p = cp.poset();
    let one = cp.top();
    let units = single_scan(cp.len(), |x| {
        if t.odot(x, one) != x {
            Some(format!("x*1 = {}", p.label(t.odot(x, one))))
        } else if t.odot(one, x) != x {
            Some(format!("1*x = {}", p.label(t.odot(one, x))))
        } else {
            None
        }
    });
    Ok(units
        .and_then(|| {
            triple_scan(cp.len(), |x, y, z| {
                let left = p.le(t.odot(x, y), z);
                let right = p.le(x, t.arrow(y, z));
                (left != right).then(|| {
                    if left {
                        "left adjointness: x*y <= z but x !<= y->z".to_string()
                    } else {
                        "left adjointness: x <= y->z but x*y !<= z".to_string()
                    }
                })
            })
        })
        .and_then(|| lattice_divisibility(cp).expect("lattice already checked")))
}

/// `M(x,y) ⊆ L(z)` implies `L(x) ⊆ R(y,z)`.
pub fn operator_adjointness_forward(cp: &ComplementedPoset) -> Verdict {
    let t = OperatorResiduation::new(cp);
    let p = cp.poset();
    triple_scan(cp.len(), |x, y, z| {
        (t.m(x, y).is_subset(p.principal_lower(z)) && !p.principal_lower(x).is_subset(t.r(y, z)))
            .then(|| "M(x,y) <= L(z) but L(x) !<= R(y,z)".to_string())
    })
}

/// `L(x) ⊆ R(y,z)` implies `M(x,y) ⊆ L(z)`.
pub fn operator_adjointness_backward(cp: &ComplementedPoset) -> Verdict {
    let t = OperatorResiduation::new(cp);
    let p = cp.poset();
    triple_scan(cp.len(), |x, y, z| {
        (p.principal_lower(x).is_subset(t.r(y, z)) && !t.m(x, y).is_subset(p.principal_lower(z)))
            .then(|| "L(x) <= R(y,z) but M(x,y) !<= L(z)".to_string())
    })
}

/// `M(R(x,y),x) = L(x,y)`.
pub fn operator_divisibility(cp: &ComplementedPoset) -> Verdict {
    let t = OperatorResiduation::new(cp);
    divisibility_with(cp, &t)
}

fn divisibility_with(cp: &ComplementedPoset, t: &OperatorResiduation) -> Verdict {
    let p = cp.poset();
    pair_scan(cp.len(), |x, y| {
        let lhs = operator_m_set(cp, t.r(x, y), x);
        let rhs = p.lower2(x, y);
        (lhs != rhs).then(|| {
            format!(
                "M(R(x,y),x) = {} but L(x,y) = {}",
                p.render_set(&lhs),
                p.render_set(&rhs)
            )
        })
    })
}

/// `M(x,1) = M(1,x) = L(x)`, operator left adjointness for every triple,
/// `R(x,0) = L(x')`, and divisibility.
pub fn verify_operator_left_residuated(cp: &ComplementedPoset) -> Verdict {
    let t = OperatorResiduation::new(cp);
    let p = cp.poset();
    let (zero, one) = (cp.bottom(), cp.top());
    single_scan(cp.len(), |x| {
        let lx = p.principal_lower(x);
        if t.m(x, one) != lx {
            Some(format!("M(x,1) = {} != L(x)", p.render_set(t.m(x, one))))
        } else if t.m(one, x) != lx {
            Some(format!("M(1,x) = {} != L(x)", p.render_set(t.m(one, x))))
        } else {
            None
        }
    })
    .and_then(|| {
        triple_scan(cp.len(), |x, y, z| {
            let left = t.m(x, y).is_subset(p.principal_lower(z));
            let right = p.principal_lower(x).is_subset(t.r(y, z));
            (left != right).then(|| {
                if left {
                    "operator left adjointness: M(x,y) <= L(z) but L(x) !<= R(y,z)".to_string()
                } else {
                    "operator left adjointness: L(x) <= R(y,z) but M(x,y) !<= L(z)".to_string()
                }
            })
        })
    })
    .and_then(|| {
        single_scan(cp.len(), |x| {
            let expected = p.principal_lower(cp.comp(x));
            (t.r(x, zero) != expected)
                .then(|| format!("R(x,0) = {} != L(x')", p.render_set(t.r(x, zero))))
        })
    })
    .and_then(|| divisibility_with(cp, &t))
}

/// `x <= y` iff `R(x,y) = P`.
pub fn residuum_order_test(cp: &ComplementedPoset) -> Verdict {
    let t = OperatorResiduation::new(cp);
    let p = cp.poset();
    pair_scan(cp.len(), |x, y| {
        let full = t.r(x, y).is_full();
        (p.le(x, y) != full).then(|| {
            if full {
                "R(x,y) = P but x !<= y".to_string()
            } else {
                "x <= y but R(x,y) != P".to_string()
            }
        })
    })
}

/// On a complemented lattice: `M(x,y) = L(x ⊙ y)` and `R(x,y) = L(x → y)`.
pub fn lattice_operator_agreement(cp: &ComplementedPoset) -> Result<Verdict, ResiduationError> {
    let term = TermResiduation::new(cp)?;
    let op = OperatorResiduation::new(cp);
    let p = cp.poset();
    Ok(pair_scan(cp.len(), |x, y| {
        if op.m(x, y) != p.principal_lower(term.odot(x, y)) {
            Some("M(x,y) != L(x*y)".to_string())
        } else if op.r(x, y) != p.principal_lower(term.arrow(x, y)) {
            Some("R(x,y) != L(x->y)".to_string())
        } else {
            None
        }
    }))
}

fn table<F: Fn(usize, usize) -> String>(
    out: &mut String,
    title: &str,
    cp: &ComplementedPoset,
    cell: F,
) {
    let p = cp.poset();
    let _ = writeln!(out, "[{title}]");
    let _ = writeln!(out, "x\\y: {}", p.names().join(" "));
    for x in 0..p.len() {
        let row: Vec<String> = (0..p.len()).map(|y| cell(x, y)).collect();
        let _ = writeln!(out, "{}: {}", p.label(x), row.join(" "));
    }
}

/// `⊙` and `→` tables, rows by `x`, columns by `y`.
pub fn render_term_tables(cp: &ComplementedPoset) -> Result<String, ResiduationError> {
    let t = TermResiduation::new(cp)?;
    let p = cp.poset();
    let mut out = String::new();
    table(&mut out, "odot", cp, |x, y| {
        p.label(t.odot(x, y)).to_string()
    });
    table(&mut out, "arrow", cp, |x, y| {
        p.label(t.arrow(x, y)).to_string()
    });
    Ok(out)
}

/// `M` and `R` tables, rows by `x`, columns by `y`, subsets in braces.
pub fn render_operator_tables(cp: &ComplementedPoset) -> String {
    let t = OperatorResiduation::new(cp);
    let p = cp.poset();
    let mut out = String::new();
    table(&mut out, "M", cp, |x, y| p.render_set(t.m(x, y)));
    table(&mut out, "R", cp, |x, y| p.render_set(t.r(x, y)));
    out
}
