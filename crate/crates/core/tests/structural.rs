use std::collections::BTreeSet;

use signed_corona::gen::{all_labelled_graphs, with_sign_mask};
use signed_corona::structural::{balance_of_product, predict_census, CensusReport, ProductCensus, TableVariant};
use signed_corona::{all_orientations, build_product, OrientedGraph, ProductKind, SignedGraph};

fn signings(n: usize) -> Vec<SignedGraph> {
    all_labelled_graphs(n)
        .flat_map(|g| (0u64..1 << g.m()).map(move |mask| with_sign_mask(&g, mask)))
        .collect()
}

fn markings(n: usize) -> impl Iterator<Item = Vec<i8>> {
    (0u32..1 << n).map(move |mask| (0..n).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect())
}

fn usable(product: ProductKind, g1: &SignedGraph) -> bool {
    g1.m() > 0 || product == ProductKind::SubdivisionVertexNc
}

#[test]
fn corrected_tables_match_counts_exhaustively() {
    let firsts: Vec<SignedGraph> = (1..=3).flat_map(signings).collect();
    let seconds: Vec<SignedGraph> = (1..=2).flat_map(signings).collect();
    let mut printed_rows = BTreeSet::new();
    for g1 in &firsts {
        for theta in all_orientations(g1) {
            let og1 = OrientedGraph::new(g1.clone(), theta).unwrap();
            for g2 in &seconds {
                for mu2 in markings(g2.n()) {
                    for product in ProductKind::ALL {
                        if !usable(product, g1) {
                            continue;
                        }
                        let report = CensusReport::new(product, &og1, g2, &mu2, TableVariant::Corrected).unwrap();
                        assert!(report.agrees(), "{product} {g1:?} {g2:?} {mu2:?}\n{}", report.to_text());
                        let printed = predict_census(product, &og1, g2, &mu2, TableVariant::Printed).unwrap();
                        for row in printed.mismatched_rows(&report.observed) {
                            printed_rows.insert((product.name(), row));
                        }
                    }
                }
            }
        }
    }
    let expected: BTreeSet<_> = [("edge-corona", "T0"), ("senc", "+ edges")].into_iter().collect();
    assert_eq!(printed_rows, expected);
}

#[test]
fn balance_criterion_matches_constructed_products() {
    let balanced = |n| signings(n).into_iter().filter(|g| g.is_balanced()).collect::<Vec<_>>();
    let firsts: Vec<SignedGraph> = (1..=4).flat_map(balanced).collect();
    let seconds: Vec<SignedGraph> = (1..=3).flat_map(balanced).collect();
    for g1 in &firsts {
        let og1 = OrientedGraph::with_default(g1.clone());
        for g2 in &seconds {
            for mu2 in markings(g2.n()) {
                for product in ProductKind::ALL {
                    if !usable(product, g1) {
                        continue;
                    }
                    let verdict = balance_of_product(product, g1, g2, &mu2).unwrap();
                    let built = build_product(product, &og1, g2, &mu2).unwrap();
                    assert_eq!(verdict.balanced, built.graph.is_balanced(), "{product} {g1:?} {g2:?} {mu2:?}");
                }
            }
        }
    }
}

#[test]
fn census_of_graph_splits_signs() {
    let g = SignedGraph::new(3, [(0, 1, 1), (1, 2, -1)]).unwrap();
    let c = ProductCensus::of_graph(&g);
    assert_eq!((c.edges, c.plus, c.minus, c.triads.total()), (2, 1, 1, 0));
}
