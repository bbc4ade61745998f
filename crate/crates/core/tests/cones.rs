mod common;

use common::{arb_poset, arb_poset_with_sets, mask, subset, Naive};
use posetres::Poset;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn cones_match_reference((p, a, _b) in arb_poset_with_sets(10)) {
        let r = Naive::new(&p);
        let s = subset(&p, a);
        prop_assert_eq!(mask(&p.lower_cone(&s).unwrap()), r.lower(a));
        prop_assert_eq!(mask(&p.upper_cone(&s).unwrap()), r.upper(a));
        prop_assert_eq!(mask(&p.lu_closure(&s).unwrap()), r.lu(a));
    }

    #[test]
    fn galois_connection((p, a, b) in arb_poset_with_sets(10)) {
        let (sa, sb) = (subset(&p, a), subset(&p, b));
        let a_in_lb = sa.is_subset(&p.lower_cone(&sb).unwrap());
        let b_in_ua = sb.is_subset(&p.upper_cone(&sa).unwrap());
        prop_assert_eq!(a_in_lb, b_in_ua);
    }

    #[test]
    fn lul_is_l_and_ulu_is_u((p, a, _b) in arb_poset_with_sets(10)) {
        let s = subset(&p, a);
        let l = p.lower_cone(&s).unwrap();
        let u = p.upper_cone(&s).unwrap();
        prop_assert_eq!(p.lower_cone(&p.upper_cone(&l).unwrap()).unwrap(), l);
        prop_assert_eq!(p.upper_cone(&p.lower_cone(&u).unwrap()).unwrap(), u);
    }

    #[test]
    fn cones_are_antitone((p, a, b) in arb_poset_with_sets(10)) {
        let small = subset(&p, a & b);
        let big = subset(&p, a);
        prop_assert!(p.lower_cone(&big).unwrap().is_subset(&p.lower_cone(&small).unwrap()));
        prop_assert!(p.upper_cone(&big).unwrap().is_subset(&p.upper_cone(&small).unwrap()));
    }

    #[test]
    fn closures_are_extensive_and_idempotent((p, a, _b) in arb_poset_with_sets(10)) {
        let s = subset(&p, a);
        let lu = p.lu_closure(&s).unwrap();
        let ul = p.ul_closure(&s).unwrap();
        prop_assert!(s.is_subset(&lu));
        prop_assert!(s.is_subset(&ul));
        prop_assert_eq!(p.lu_closure(&lu).unwrap(), lu);
        prop_assert_eq!(p.ul_closure(&ul).unwrap(), ul);
    }

    #[test]
    fn duality((p, a, _b) in arb_poset_with_sets(10)) {
        let d = p.dual();
        let s = subset(&p, a);
        let sd = subset(&d, a);
        prop_assert_eq!(mask(&d.lower_cone(&sd).unwrap()), mask(&p.upper_cone(&s).unwrap()));
        prop_assert_eq!(mask(&d.upper_cone(&sd).unwrap()), mask(&p.lower_cone(&s).unwrap()));
        prop_assert_eq!(d.dual(), p);
    }

    #[test]
    fn product_order(p in arb_poset(5), q in arb_poset(5)) {
        let pq = p.direct_product(&q);
        let m = q.len();
        prop_assert_eq!(pq.len(), p.len() * m);
        for a in 0..pq.len() {
            for b in 0..pq.len() {
                prop_assert_eq!(pq.le(a, b), p.le(a / m, b / m) && q.le(a % m, b % m));
            }
        }
        prop_assert_eq!(pq.is_bounded(), p.is_bounded() && q.is_bounded());
    }

    #[test]
    fn set_order_is_elementwise((p, a, b) in arb_poset_with_sets(8)) {
        let r = Naive::new(&p);
        prop_assert_eq!(p.set_le(&subset(&p, a), &subset(&p, b)), r.below(a, b));
    }
}

#[test]
fn empty_set_cones_are_everything() {
    let p = Poset::from_relation(&["a", "b", "c"], |i, j| i == j || (i == 0 && j == 2)).unwrap();
    let e = p.empty_set();
    assert!(p.lower_cone(&e).unwrap().is_full());
    assert!(p.upper_cone(&e).unwrap().is_full());
}

#[test]
fn foreign_subsets_are_rejected() {
    let p = Poset::from_relation(&["a"], |_, _| true).unwrap();
    let q = Poset::from_relation(&["a"], |_, _| true).unwrap();
    assert!(p.lower_cone(&q.full_set()).is_err());
}
