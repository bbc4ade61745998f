//! LU-identities and quasi-identities as runnable text.
//!
//! ```text
//! formula := 'forall' var+ ['where' cond {',' cond}] ':' term rel term
//! cond    := term '<=' term            # every lhs member below every rhs member
//! rel     := '=' | '≈'                 # set equality
//!          | '<=' | '⊆'                # set inclusion
//! term    := meet {('v' | '∨') meet}   # join (lattices only)
//! meet    := post {('^' | '∧') post}   # meet (lattices only)
//! post    := atom {'\'' | '′'}         # elementwise complement
//! atom    := '0' | '1' | var
//!          | cones '(' [term {',' term}] ')'   # cones ∈ [LU]+, e.g. L, U, LU, LUL
//!          | ('M' | 'R') '(' term ',' term ')'
//!          | '(' term ')'
//! ```
//!
//! Every term denotes a subset: a variable is a singleton, cones take the
//! union of their arguments, `M(a,b) = L(U(a,b'),b)` and
//! `R(a,b) = LU(L(a,b),a')`.

mod eval;
mod parse;
mod registry;

use std::fmt;

pub use eval::{evaluate, EvalError, Model};
pub use parse::{parse, ParseError};
pub use registry::{builtin, BUILTINS};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cone {
    Lower,
    Upper,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Operator {
    M,
    R,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Term {
    Var(String),
    Zero,
    One,
    Prime(Box<Term>),
    Cone(Cone, Vec<Term>),
    Join(Vec<Term>),
    Meet(Vec<Term>),
    Op(Operator, Box<Term>, Box<Term>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Equal,
    SubsetEq,
}

/// `lhs <= rhs` in the order sense.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Condition {
    pub lhs: Term,
    pub rhs: Term,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Formula {
    pub vars: Vec<String>,
    pub conditions: Vec<Condition>,
    pub relation: Relation,
    pub lhs: Term,
    pub rhs: Term,
}

impl Term {
    fn visit(&self, f: &mut impl FnMut(&Term)) {
        f(self);
        match self {
            Term::Var(_) | Term::Zero | Term::One => {}
            Term::Prime(t) => t.visit(f),
            Term::Cone(_, ts) | Term::Join(ts) | Term::Meet(ts) => {
                ts.iter().for_each(|t| t.visit(f))
            }
            Term::Op(_, a, b) => {
                a.visit(f);
                b.visit(f);
            }
        }
    }
}

impl Formula {
    fn terms(&self) -> impl Iterator<Item = &Term> {
        self.conditions
            .iter()
            .flat_map(|c| [&c.lhs, &c.rhs])
            .chain([&self.lhs, &self.rhs])
    }

    fn any_term(&self, pred: impl Fn(&Term) -> bool) -> bool {
        let mut found = false;
        for t in self.terms() {
            t.visit(&mut |s| found |= pred(s));
        }
        found
    }

    /// Uses `'` directly or through `M`/`R`.
    pub fn needs_complement(&self) -> bool {
        self.any_term(|t| matches!(t, Term::Prime(_) | Term::Op(..)))
    }

    pub fn needs_lattice(&self) -> bool {
        self.any_term(|t| matches!(t, Term::Join(_) | Term::Meet(_)))
    }

    pub fn needs_bounds(&self) -> bool {
        self.any_term(|t| matches!(t, Term::Zero | Term::One))
    }
}

fn write_list(f: &mut fmt::Formatter<'_>, ts: &[Term]) -> fmt::Result {
    for (i, t) in ts.iter().enumerate() {
        if i > 0 {
            write!(f, ", ")?;
        }
        write!(f, "{t}")?;
    }
    Ok(())
}

fn write_operand(f: &mut fmt::Formatter<'_>, t: &Term) -> fmt::Result {
    match t {
        Term::Join(_) | Term::Meet(_) => write!(f, "({t})"),
        _ => write!(f, "{t}"),
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(v) => write!(f, "{v}"),
            Term::Zero => write!(f, "0"),
            Term::One => write!(f, "1"),
            Term::Prime(t) => {
                write_operand(f, t)?;
                write!(f, "'")
            }
            Term::Cone(c, ts) => {
                write!(f, "{}(", if *c == Cone::Lower { "L" } else { "U" })?;
                write_list(f, ts)?;
                write!(f, ")")
            }
            Term::Join(ts) | Term::Meet(ts) => {
                let sep = if matches!(self, Term::Join(_)) {
                    " v "
                } else {
                    " ^ "
                };
                for (i, t) in ts.iter().enumerate() {
                    if i > 0 {
                        write!(f, "{sep}")?;
                    }
                    write_operand(f, t)?;
                }
                Ok(())
            }
            Term::Op(op, a, b) => write!(
                f,
                "{}({a}, {b})",
                if *op == Operator::M { "M" } else { "R" }
            ),
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "forall {}", self.vars.join(" "))?;
        for (i, c) in self.conditions.iter().enumerate() {
            write!(
                f,
                "{} {} <= {}",
                if i == 0 { " where" } else { "," },
                c.lhs,
                c.rhs
            )?;
        }
        let rel = match self.relation {
            Relation::Equal => "=",
            Relation::SubsetEq => "<=",
        };
        write!(f, " : {} {rel} {}", self.lhs, self.rhs)
    }
}
