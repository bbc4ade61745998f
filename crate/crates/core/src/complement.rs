//! Bounded posets carrying a complementation `x ↦ x'`.

use thiserror::Error;

use crate::poset::Poset;
use crate::verdict::{Verdict, Witness};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplementError {
    #[error("complementation needs a bounded poset")]
    NotBounded,
    #[error("unknown label `{0}` in complement map")]
    UnknownLabel(String),
    #[error("complement of `{0}` given twice")]
    Duplicate(String),
    #[error("complement map is not total: `{0}` has no image")]
    NotTotal(String),
    #[error("complementation law fails at `{element}`: {law}")]
    Law { element: String, law: &'static str },
}

/// A bounded poset with a total unary operation satisfying
/// `U(x, x') = {1}` and `L(x, x') = {0}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplementedPoset {
    poset: Poset,
    comp: Vec<usize>,
}

impl ComplementedPoset {
    /// Validates `comp` (indexed by element) as a complementation on `poset`.
    pub fn new(poset: Poset, comp: Vec<usize>) -> Result<Self, ComplementError> {
        let (Some(bottom), Some(top)) = (poset.bottom(), poset.top()) else {
            return Err(ComplementError::NotBounded);
        };
        if comp.len() != poset.len() {
            let missing = comp.len().min(poset.len().saturating_sub(1));
            return Err(ComplementError::NotTotal(poset.label(missing).to_string()));
        }
        for (x, &c) in comp.iter().enumerate() {
            if c >= poset.len() {
                return Err(ComplementError::UnknownLabel(c.to_string()));
            }
            if let Some(law) = complement_law_violation(&poset, x, c, bottom, top) {
                return Err(ComplementError::Law {
                    element: poset.label(x).to_string(),
                    law,
                });
            }
        }
        Ok(Self { poset, comp })
    }

    /// Attaches a complementation given as label pairs `x -> x'`.
    pub fn attach<S: AsRef<str>>(poset: Poset, pairs: &[(S, S)]) -> Result<Self, ComplementError> {
        if !poset.is_bounded() {
            return Err(ComplementError::NotBounded);
        }
        let mut comp = vec![usize::MAX; poset.len()];
        for (x, y) in pairs {
            let xi = poset
                .index_of(x.as_ref())
                .ok_or_else(|| ComplementError::UnknownLabel(x.as_ref().to_string()))?;
            let yi = poset
                .index_of(y.as_ref())
                .ok_or_else(|| ComplementError::UnknownLabel(y.as_ref().to_string()))?;
            if comp[xi] != usize::MAX {
                return Err(ComplementError::Duplicate(x.as_ref().to_string()));
            }
            comp[xi] = yi;
        }
        if let Some(x) = comp.iter().position(|&c| c == usize::MAX) {
            return Err(ComplementError::NotTotal(poset.label(x).to_string()));
        }
        Self::new(poset, comp)
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn comp(&self, x: usize) -> usize {
        self.comp[x]
    }

    pub fn comp_map(&self) -> &[usize] {
        &self.comp
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }

    pub fn bottom(&self) -> usize {
        self.poset
            .bottom()
            .expect("complemented posets are bounded")
    }

    pub fn top(&self) -> usize {
        self.poset.top().expect("complemented posets are bounded")
    }

    /// Componentwise complement on the product poset.
    pub fn direct_product(&self, other: &ComplementedPoset) -> ComplementedPoset {
        let poset = self.poset.direct_product(&other.poset);
        let m = other.len();
        let comp = (0..poset.len())
            .map(|k| self.comp(k / m) * m + other.comp(k % m))
            .collect();
        ComplementedPoset::new(poset, comp)
            .expect("product of complementations is a complementation")
    }

    /// `x'' = x` for all `x`.
    pub fn involution(&self) -> Verdict {
        (0..self.len())
            .find(|&x| self.comp(self.comp(x)) != x)
            .map(|x| {
                let p = &self.poset;
                Witness::new(
                    &[("x", x)],
                    format!(
                        "{}'' = {} != {}",
                        p.label(x),
                        p.label(self.comp(self.comp(x))),
                        p.label(x)
                    ),
                )
            })
            .into()
    }

    /// `x <= y` implies `y' <= x'`; the witness is the first failing pair.
    pub fn antitone(&self) -> Verdict {
        let p = &self.poset;
        for x in 0..self.len() {
            for y in p.principal_upper(x).iter() {
                let (cx, cy) = (self.comp(x), self.comp(y));
                if !p.le(cy, cx) {
                    return Verdict::Fails(Witness::new(
                        &[("x", x), ("y", y)],
                        format!(
                            "{} <= {} but {} !<= {}",
                            p.label(x),
                            p.label(y),
                            p.label(cy),
                            p.label(cx)
                        ),
                    ));
                }
            }
        }
        Verdict::Holds
    }

    pub fn unary_properties(&self) -> UnaryProperties {
        UnaryProperties {
            involution: self.involution(),
            antitone: self.antitone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnaryProperties {
    pub involution: Verdict,
    pub antitone: Verdict,
}

/// Which of `U(x,c) = {1}` / `L(x,c) = {0}` fails, if any.
pub(crate) fn complement_law_violation(
    p: &Poset,
    x: usize,
    c: usize,
    bottom: usize,
    top: usize,
) -> Option<&'static str> {
    if p.upper2(x, c) != p.singleton(top) {
        Some("U(x,x') != {1}")
    } else if p.lower2(x, c) != p.singleton(bottom) {
        Some("L(x,x') != {0}")
    } else {
        None
    }
}

/// A poset with or without a complementation, as read from a file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Structure {
    Plain(Poset),
    Complemented(ComplementedPoset),
}

impl Structure {
    pub fn poset(&self) -> &Poset {
        match self {
            Structure::Plain(p) => p,
            Structure::Complemented(cp) => cp.poset(),
        }
    }

    pub fn complemented(&self) -> Option<&ComplementedPoset> {
        match self {
            Structure::Plain(_) => None,
            Structure::Complemented(cp) => Some(cp),
        }
    }

    /// Product; complemented only when both factors are.
    pub fn direct_product(&self, other: &Structure) -> Structure {
        match (self, other) {
            (Structure::Complemented(a), Structure::Complemented(b)) => {
                Structure::Complemented(a.direct_product(b))
            }
            _ => Structure::Plain(self.poset().direct_product(other.poset())),
        }
    }
}

impl From<Poset> for Structure {
    fn from(p: Poset) -> Self {
        Structure::Plain(p)
    }
}

impl From<ComplementedPoset> for Structure {
    fn from(cp: ComplementedPoset) -> Self {
        Structure::Complemented(cp)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins;

    fn chain2() -> Poset {
        Poset::from_covers(&["0", "1"], &[("0", "1")]).unwrap()
    }

    #[test]
    fn two_chain_is_complemented() {
        let cp = ComplementedPoset::attach(chain2(), &[("0", "1"), ("1", "0")]).unwrap();
        let u = cp.unary_properties();
        assert!(u.involution.holds());
        assert!(u.antitone.holds());
    }

    #[test]
    fn fig1_is_an_involution_but_not_antitone() {
        let cp = builtins::fig1();
        let u = cp.unary_properties();
        assert!(u.involution.holds());
        let w = u.antitone.witness().unwrap();
        let p = cp.poset();
        assert_eq!(w.get("x"), p.index_of("b"));
        assert_eq!(w.get("y"), p.index_of("c'"));
        assert_eq!(w.note, "b <= c' but c !<= b'");
    }

    #[test]
    fn fig2_is_an_antitone_involution() {
        let u = builtins::fig2().unary_properties();
        assert!(u.involution.holds());
        assert!(u.antitone.holds());
    }

    #[test]
    fn p6_admits_no_complement_for_a() {
        let p = builtins::p6();
        let a = p.index_of("a").unwrap();
        for c in 0..p.len() {
            assert!(complement_law_violation(&p, a, c, 0, 5).is_some());
        }
        let identity: Vec<(String, String)> =
            p.names().iter().map(|n| (n.clone(), n.clone())).collect();
        assert!(matches!(
            ComplementedPoset::attach(p, &identity),
            Err(ComplementError::Law { .. })
        ));
    }

    #[test]
    fn attach_errors() {
        assert!(matches!(
            ComplementedPoset::attach(chain2(), &[("0", "1")]),
            Err(ComplementError::NotTotal(l)) if l == "1"
        ));
        assert!(matches!(
            ComplementedPoset::attach(chain2(), &[("0", "1"), ("0", "1")]),
            Err(ComplementError::Duplicate(_))
        ));
        assert!(matches!(
            ComplementedPoset::attach(chain2(), &[("0", "x"), ("1", "0")]),
            Err(ComplementError::UnknownLabel(_))
        ));
        let anti = Poset::from_covers::<_, &str>(&["a", "b"], &[]).unwrap();
        assert_eq!(
            ComplementedPoset::attach(anti, &[("a", "b"), ("b", "a")]).unwrap_err(),
            ComplementError::NotBounded
        );
    }

    #[test]
    fn zero_and_one_swap() {
        for cp in [
            builtins::fig1(),
            builtins::fig2(),
            builtins::boolean8(),
            builtins::n5(),
        ] {
            assert_eq!(cp.comp(cp.bottom()), cp.top());
            assert_eq!(cp.comp(cp.top()), cp.bottom());
        }
    }
}
