use thiserror::Error;

use super::{Cone, Formula, Operator, Relation, Term};
use crate::complement::{ComplementedPoset, Structure};
use crate::lattice::{Lattice, NotALattice};
use crate::poset::Poset;
use crate::subset::Subset;
use crate::verdict::{scan, Verdict, Witness};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("formula uses ' (or M/R) but the poset has no complementation")]
    NeedsComplement,
    #[error("formula uses v/^ but {0}")]
    NeedsLattice(NotALattice),
    #[error("formula uses 0/1 but the poset is not bounded")]
    NeedsBounds,
    #[error("unbound variable `{0}`")]
    UnboundVariable(String),
}

/// A poset, with or without complementation.
#[derive(Clone, Copy)]
pub enum Model<'a> {
    Plain(&'a Poset),
    Complemented(&'a ComplementedPoset),
}

impl<'a> From<&'a Poset> for Model<'a> {
    fn from(p: &'a Poset) -> Self {
        Model::Plain(p)
    }
}

impl<'a> From<&'a ComplementedPoset> for Model<'a> {
    fn from(cp: &'a ComplementedPoset) -> Self {
        Model::Complemented(cp)
    }
}

impl<'a> From<&'a Structure> for Model<'a> {
    fn from(s: &'a Structure) -> Self {
        match s {
            Structure::Plain(p) => Model::Plain(p),
            Structure::Complemented(cp) => Model::Complemented(cp),
        }
    }
}

/// Term with variables resolved to quantifier positions.
enum Node {
    Var(usize),
    Zero,
    One,
    Prime(Box<Node>),
    Cone(Cone, Vec<Node>),
    Join(Vec<Node>),
    Meet(Vec<Node>),
    Op(Operator, Box<Node>, Box<Node>),
}

fn resolve(t: &Term, vars: &[String]) -> Result<Node, EvalError> {
    let all = |ts: &[Term]| {
        ts.iter()
            .map(|t| resolve(t, vars))
            .collect::<Result<Vec<_>, _>>()
    };
    Ok(match t {
        Term::Var(v) => Node::Var(
            vars.iter()
                .position(|w| w == v)
                .ok_or_else(|| EvalError::UnboundVariable(v.clone()))?,
        ),
        Term::Zero => Node::Zero,
        Term::One => Node::One,
        Term::Prime(t) => Node::Prime(Box::new(resolve(t, vars)?)),
        Term::Cone(c, ts) => Node::Cone(*c, all(ts)?),
        Term::Join(ts) => Node::Join(all(ts)?),
        Term::Meet(ts) => Node::Meet(all(ts)?),
        Term::Op(op, a, b) => Node::Op(
            *op,
            Box::new(resolve(a, vars)?),
            Box::new(resolve(b, vars)?),
        ),
    })
}

struct Env<'a> {
    p: &'a Poset,
    comp: Option<&'a [usize]>,
    lattice: Option<Lattice>,
}

impl Env<'_> {
    fn union(&self, ts: &[Node], asg: &[usize]) -> Subset {
        let mut acc = self.p.empty_set();
        for t in ts {
            acc.union_with(&self.den(t, asg));
        }
        acc
    }

    fn prime(&self, s: &Subset) -> Subset {
        let comp = self.comp.expect("checked before evaluation");
        let mut out = self.p.empty_set();
        for x in s.iter() {
            out.insert(comp[x]);
        }
        out
    }

    fn den(&self, t: &Node, asg: &[usize]) -> Subset {
        let p = self.p;
        match t {
            Node::Var(i) => p.singleton(asg[*i]),
            Node::Zero => p.singleton(p.bottom().expect("checked before evaluation")),
            Node::One => p.singleton(p.top().expect("checked before evaluation")),
            Node::Prime(t) => self.prime(&self.den(t, asg)),
            Node::Cone(Cone::Lower, ts) => p.lower(&self.union(ts, asg)),
            Node::Cone(Cone::Upper, ts) => p.upper(&self.union(ts, asg)),
            Node::Join(ts) => {
                let l = self.lattice.as_ref().expect("checked before evaluation");
                p.singleton(l.join_all(&self.union(ts, asg)))
            }
            Node::Meet(ts) => {
                let l = self.lattice.as_ref().expect("checked before evaluation");
                p.singleton(l.meet_all(&self.union(ts, asg)))
            }
            Node::Op(Operator::M, a, b) => {
                // L(U(a,b'),b)
                let (a, b) = (self.den(a, asg), self.den(b, asg));
                let mut inner = p.upper(&a.union(&self.prime(&b)));
                inner.union_with(&b);
                p.lower(&inner)
            }
            Node::Op(Operator::R, a, b) => {
                // LU(L(a,b),a')
                let (a, b) = (self.den(a, asg), self.den(b, asg));
                let mut inner = p.lower(&a.union(&b));
                inner.union_with(&self.prime(&a));
                p.lu(&inner)
            }
        }
    }

    /// Every member of `a` lies below every member of `b`.
    fn below(&self, a: &Subset, b: &Subset) -> bool {
        a.iter().all(|x| b.is_subset(self.p.principal_upper(x)))
    }
}

struct Compiled {
    conditions: Vec<(Node, Node)>,
    lhs: Node,
    rhs: Node,
}

/// Evaluates `f` under every assignment, in lexicographic order of the
/// quantified variables, and reports the first violation.
pub fn evaluate<'a>(f: &Formula, model: impl Into<Model<'a>>) -> Result<Verdict, EvalError> {
    let (p, comp) = match model.into() {
        Model::Plain(p) => (p, None),
        Model::Complemented(cp) => (cp.poset(), Some(cp.comp_map())),
    };
    let compiled = Compiled {
        conditions: f
            .conditions
            .iter()
            .map(|c| Ok((resolve(&c.lhs, &f.vars)?, resolve(&c.rhs, &f.vars)?)))
            .collect::<Result<_, EvalError>>()?,
        lhs: resolve(&f.lhs, &f.vars)?,
        rhs: resolve(&f.rhs, &f.vars)?,
    };
    if f.needs_complement() && comp.is_none() {
        return Err(EvalError::NeedsComplement);
    }
    if f.needs_bounds() && !p.is_bounded() {
        return Err(EvalError::NeedsBounds);
    }
    let lattice = if f.needs_lattice() {
        Some(Lattice::new(p).map_err(EvalError::NeedsLattice)?)
    } else {
        None
    };
    let env = Env { p, comp, lattice };
    let k = f.vars.len();
    let n = p.len();
    let check = |asg: &[usize]| -> Option<Witness> {
        for (a, b) in &compiled.conditions {
            if !env.below(&env.den(a, asg), &env.den(b, asg)) {
                return None;
            }
        }
        let lhs = env.den(&compiled.lhs, asg);
        let rhs = env.den(&compiled.rhs, asg);
        let ok = match f.relation {
            Relation::Equal => lhs == rhs,
            Relation::SubsetEq => lhs.is_subset(&rhs),
        };
        if ok {
            return None;
        }
        let vars: Vec<(&str, usize)> = f
            .vars
            .iter()
            .map(String::as_str)
            .zip(asg.iter().copied())
            .collect();
        let rel = if f.relation == Relation::Equal {
            "!="
        } else {
            "!<="
        };
        Some(Witness::new(
            &vars,
            format!("{} {rel} {}", p.render_set(&lhs), p.render_set(&rhs)),
        ))
    };
    if k == 0 {
        return Ok(check(&[]).into());
    }
    Ok(scan(n, |x| {
        let mut asg = vec![0; k];
        asg[0] = x;
        odometer(&mut asg, 1, n, &check)
    }))
}

fn odometer(
    asg: &mut [usize],
    from: usize,
    n: usize,
    check: &impl Fn(&[usize]) -> Option<Witness>,
) -> Option<Witness> {
    if from == asg.len() {
        return check(asg);
    }
    for v in 0..n {
        asg[from] = v;
        if let Some(w) = odometer(asg, from + 1, n, check) {
            return Some(w);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins;
    use crate::dsl::parse;

    #[test]
    fn modularity_on_fig1() {
        let f = parse("forall x y z where x <= z : L(U(x,y),z) = LU(x,L(y,z))").unwrap();
        assert!(evaluate(&f, &builtins::fig1()).unwrap().holds());
    }

    #[test]
    fn boolean_operator_residuation() {
        let b = builtins::boolean8();
        for src in [
            "forall x y : M(x,y) = L(x,y)",
            "forall x y : R(x,y) = LU(x',y)",
        ] {
            assert!(evaluate(&parse(src).unwrap(), &b).unwrap().holds(), "{src}");
        }
    }

    #[test]
    fn complementation_law_restated() {
        let f = builtins::fig1();
        assert!(evaluate(&parse("forall x : L(x,x') = L(0)").unwrap(), &f)
            .unwrap()
            .holds());
        assert!(evaluate(&parse("forall x : U(x,x') = U(1)").unwrap(), &f)
            .unwrap()
            .holds());
    }

    #[test]
    fn requirements() {
        let p6 = builtins::p6();
        assert_eq!(
            evaluate(&parse("forall x : x' = x").unwrap(), &p6),
            Err(EvalError::NeedsComplement)
        );
        assert!(matches!(
            evaluate(&parse("forall x y : x v y = x").unwrap(), &p6),
            Err(EvalError::NeedsLattice(_))
        ));
        let anti = Poset::from_relation(&["a", "b"], |i, j| i == j).unwrap();
        assert_eq!(
            evaluate(&parse("forall x : L(x) = L(0)").unwrap(), &anti),
            Err(EvalError::NeedsBounds)
        );
    }

    #[test]
    fn witness_is_first_failure() {
        let p = builtins::chain2();
        let v = evaluate(&parse("forall x y : L(x) = L(y)").unwrap(), &p).unwrap();
        let w = v.witness().unwrap();
        assert_eq!(
            w.assignment,
            vec![("x".to_string(), 0), ("y".to_string(), 1)]
        );
        assert_eq!(w.note, "{0} != {0,1}");
    }

    #[test]
    fn conditions_use_order_between_sets() {
        let f = builtins::fig1();
        // x below all of L(x) forces x = 0
        let v = evaluate(&parse("forall x where x <= L(x) : x = 0").unwrap(), &f).unwrap();
        assert!(v.holds());
        let v = evaluate(
            &parse("forall x y where x <= y : L(x) <= L(y)").unwrap(),
            &f,
        )
        .unwrap();
        assert!(v.holds());
    }

    #[test]
    fn lu_matches_closure() {
        let p = builtins::p6();
        let f = parse("forall x y : LU(x,y) = LU(x,y)").unwrap();
        let lhs = resolve(&f.lhs, &f.vars).unwrap();
        let env = Env {
            p: &p,
            comp: None,
            lattice: None,
        };
        for x in 0..p.len() {
            for y in 0..p.len() {
                let s = p.set_of([x, y]);
                assert_eq!(env.den(&lhs, &[x, y]), p.lu_closure(&s).unwrap());
            }
        }
    }
}
