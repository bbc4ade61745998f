use posetres::builtins;
use posetres::completion::{
    completion_modularity_report, d0_sublattice, dm_completion, star_extension, verify_star,
};
use posetres::props;

#[test]
fn fig2_completion_findings() {
    let cp = builtins::fig2();
    let d = dm_completion(cp.poset());
    assert_eq!(d.len(), 16);
    assert_eq!(d0_sublattice(&d).len(), 16);
    let report = completion_modularity_report(cp.poset());
    assert!(report.d_modular.holds());
    assert!(report.d0_modular.holds());
    assert!(report.implications_hold());
    let starred = star_extension(&d, &cp).unwrap();
    assert!(verify_star(&starred, &cp).holds());
    let lattice = starred.as_complemented().unwrap();
    assert!(props::is_ortholattice(&lattice).unwrap().holds());
    assert!(props::is_orthomodular_lattice(&lattice).unwrap().holds());
}

#[test]
fn product_d0_is_product_of_completions() {
    let p = builtins::fig1_x_fig2();
    let d = dm_completion(p.poset());
    let d0 = d0_sublattice(&d);
    assert_eq!(d0.len(), 160);
    assert!(props::is_modular_lattice(d0.order()).unwrap().holds());
}

#[test]
fn star_needs_an_orthoposet() {
    let fig1 = builtins::fig1();
    let d = dm_completion(fig1.poset());
    assert!(star_extension(&d, &fig1).is_err());
}
