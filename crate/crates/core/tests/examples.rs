// Published values for the two counterexamples.

use vdreg::betti::{betti_table, is_sequentially_cm, regularity, Subject};
use vdreg::decomp::refute::refute_vd_g26;
use vdreg::decomp::shelling::{find_shelling, verify_shelling, ShellingOptions, ShellingSearch};
use vdreg::decomp::vd::{is_vertex_decomposable, VdOptions, VdVerdict};
use vdreg::report::{report_counterexample1, Status};
use vdreg::{fixtures, FieldSpec, Graph, SimplicialComplex, SqFreeIdeal};

fn fields() -> [FieldSpec; 2] {
    [FieldSpec::new(2).unwrap(), FieldSpec::new(32003).unwrap()]
}

#[test]
fn small_example_invariants() {
    let g = fixtures::small_graph();
    assert_eq!(g.vertex_count(), 8);
    assert_eq!(g.edge_count(), 13);
    assert!(g.stats().isolated_vertices.is_empty());
    let ideal = SqFreeIdeal::edge_ideal(&g);
    assert_eq!(ideal.height().unwrap(), 4);
    assert_eq!(ideal.minimal_primes().unwrap().0.len(), 6);
    let dual = ideal.alexander_dual().unwrap();
    for f in fields() {
        assert_eq!(regularity(&ideal, Subject::Quotient, f).unwrap(), 2);
        assert_eq!(regularity(&dual, Subject::Ideal, f).unwrap(), 5);
        assert!(is_sequentially_cm(&g, f).unwrap());
    }
    assert_eq!(g.induced_matching_number(), 1);
}

#[test]
fn small_example_report_passes() {
    let r = report_counterexample1();
    assert_eq!(r.status, Status::Passed, "{:?}", r.failures);
}

#[test]
fn small_example_betti_table_is_field_independent() {
    let ideal = SqFreeIdeal::edge_ideal(&fixtures::small_graph());
    let [a, b] = fields().map(|f| betti_table(&ideal, Subject::Quotient, f).unwrap());
    assert_eq!(a.entries, b.entries);
    assert_eq!(a.get(0, 0), 1);
    assert_eq!(a.get(1, 2), 13);
}

#[test]
fn circulant_facts() {
    let g = fixtures::c16();
    assert_eq!(g, Graph::circulant(16, &[1, 4, 8]).unwrap());
    assert_eq!(g.edge_count(), 40);
    assert!((0..16).all(|v| g.degree(v) == 5));
    let delta = SimplicialComplex::independence_complex(&g);
    assert_eq!(delta.facets().len(), 80);
    assert!(delta.is_pure());
    match find_shelling(&delta, &ShellingOptions::default()).unwrap() {
        ShellingSearch::Found(cert) => assert!(verify_shelling(&delta, &cert).unwrap()),
        other => panic!("{other:?}"),
    }
    assert_eq!(is_vertex_decomposable(&g, &VdOptions::default()).0, VdVerdict::NotDecomposable);
}

#[test]
fn listed_orders_use_exactly_the_facets() {
    let c16 = SimplicialComplex::independence_complex(&fixtures::c16());
    let mut listed = fixtures::c16_shelling_order().0;
    listed.sort();
    assert_eq!(listed, c16.facets());

    let g26 = SimplicialComplex::independence_complex(&fixtures::g26());
    let mut listed = fixtures::listed_g26_order().0;
    listed.sort();
    assert_eq!(listed, g26.facets());
}

#[test]
fn large_example_is_shellable_but_not_vertex_decomposable() {
    let g = fixtures::g26();
    assert_eq!(g.vertex_count(), 26);
    assert_eq!(g.edge_count(), 170);
    let ideal = SqFreeIdeal::edge_ideal(&g);
    assert_eq!(ideal.height().unwrap(), 13);
    assert_eq!(ideal.minimal_primes().unwrap().0.len(), 81);
    let delta = SimplicialComplex::independence_complex(&g);
    assert!(!delta.is_pure());
    assert!(find_shelling(&delta, &ShellingOptions::default()).unwrap().certificate().is_some());
    let r = refute_vd_g26(&g).unwrap();
    assert!(r.not_vertex_decomposable);
    assert_eq!(r.vertices.len(), 26);
    assert!(r.replay(&g).unwrap());
}

#[test]
fn refutation_rejects_other_graphs() {
    assert!(refute_vd_g26(&fixtures::c16()).is_err());
}
