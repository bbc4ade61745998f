//! The lower and upper cone operators `L` and `U`.
//!
//! `L(A)` is the set of common lower bounds of `A`, `U(A)` the set of common
//! upper bounds. Mixed notations such as `L(a, B)` or `L(U(x, y), z)` are the
//! cone of the union of the arguments, so everything reduces to one kernel:
//! the intersection of cached principal rows over the members of a set.
//! The empty set has every element as a (vacuous) bound: `L(∅) = U(∅) = P`.

use thiserror::Error;

use crate::poset::Poset;
use crate::subset::Subset;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConeError {
    #[error("subset belongs to a different poset")]
    ForeignSubset,
}

impl Poset {
    fn owns(&self, a: &Subset) -> Result<(), ConeError> {
        if a.owner() == self.id() && a.universe_len() == self.len() {
            Ok(())
        } else {
            Err(ConeError::ForeignSubset)
        }
    }

    pub fn lower_cone(&self, a: &Subset) -> Result<Subset, ConeError> {
        self.owns(a)?;
        Ok(self.lower(a))
    }

    pub fn upper_cone(&self, a: &Subset) -> Result<Subset, ConeError> {
        self.owns(a)?;
        Ok(self.upper(a))
    }

    /// `L(U(A))`.
    pub fn lu_closure(&self, a: &Subset) -> Result<Subset, ConeError> {
        self.owns(a)?;
        Ok(self.lu(a))
    }

    /// `U(L(A))`.
    pub fn ul_closure(&self, a: &Subset) -> Result<Subset, ConeError> {
        self.owns(a)?;
        Ok(self.ul(a))
    }

    /// Principal ideal `L(x)`.
    pub fn principal_lower(&self, x: usize) -> &Subset {
        &self.down[x]
    }

    /// Principal filter `U(x)`.
    pub fn principal_upper(&self, x: usize) -> &Subset {
        &self.up[x]
    }

    pub(crate) fn lower(&self, a: &Subset) -> Subset {
        let mut out = self.full_set();
        for x in a.iter() {
            out.intersect_with(&self.down[x]);
        }
        out
    }

    pub(crate) fn upper(&self, a: &Subset) -> Subset {
        let mut out = self.full_set();
        for x in a.iter() {
            out.intersect_with(&self.up[x]);
        }
        out
    }

    pub(crate) fn lu(&self, a: &Subset) -> Subset {
        self.lower(&self.upper(a))
    }

    pub(crate) fn ul(&self, a: &Subset) -> Subset {
        self.upper(&self.lower(a))
    }

    /// `L(x, y)`.
    pub(crate) fn lower2(&self, x: usize, y: usize) -> Subset {
        self.down[x].intersection(&self.down[y])
    }

    /// `U(x, y)`.
    pub(crate) fn upper2(&self, x: usize, y: usize) -> Subset {
        self.up[x].intersection(&self.up[y])
    }

    /// `A ≤ B`: every member of `A` lies below every member of `B`.
    pub fn set_le(&self, a: &Subset, b: &Subset) -> bool {
        a.iter().all(|x| b.is_subset(&self.up[x]))
    }
}

#[cfg(test)]
mod tests {
    use crate::builtins;

    #[test]
    fn empty_cones_are_everything() {
        let p = builtins::p6();
        let e = p.empty_set();
        assert!(p.lower_cone(&e).unwrap().is_full());
        assert!(p.upper_cone(&e).unwrap().is_full());
    }

    #[test]
    fn foreign_subsets_are_rejected() {
        let p = builtins::p6();
        let q = builtins::p6();
        let s = q.singleton(0);
        assert!(p.lower_cone(&s).is_err());
        assert!(p.lu_closure(&s).is_err());
    }

    #[test]
    fn worked_cones() {
        let f1 = builtins::fig1().poset().clone();
        let ab = f1.set_of_labels(&["a", "b"]).unwrap();
        assert_eq!(
            f1.lower_cone(&ab).unwrap(),
            f1.set_of_labels(&["0"]).unwrap()
        );
        let bc = f1.set_of_labels(&["b", "c"]).unwrap();
        assert_eq!(
            f1.upper_cone(&bc).unwrap(),
            f1.set_of_labels(&["a'", "1"]).unwrap()
        );

        let p6 = builtins::p6();
        let ab = p6.set_of_labels(&["a", "b"]).unwrap();
        assert_eq!(
            p6.upper_cone(&ab).unwrap(),
            p6.set_of_labels(&["c", "d", "1"]).unwrap()
        );
        assert_eq!(
            p6.lu_closure(&ab).unwrap(),
            p6.set_of_labels(&["0", "a", "b"]).unwrap()
        );
        let la = p6.principal_lower(1).clone();
        assert_eq!(p6.lu_closure(&la).unwrap(), la);

        let f2 = builtins::fig2().poset().clone();
        let bd = f2.set_of_labels(&["b'", "d'"]).unwrap();
        assert_eq!(
            f2.lower_cone(&bd).unwrap(),
            f2.set_of_labels(&["0", "a", "c"]).unwrap()
        );
        let ab = f2.set_of_labels(&["a", "b"]).unwrap();
        assert_eq!(
            f2.upper_cone(&ab).unwrap(),
            f2.set_of_labels(&["e", "d'", "c'", "1"]).unwrap()
        );
        assert_eq!(
            f2.lu_closure(&ab).unwrap(),
            f2.set_of_labels(&["0", "a", "b", "e"]).unwrap()
        );
    }
}
