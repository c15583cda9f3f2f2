use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use signed_corona::gen::{random_signed_graph, MarkingChoice, RegularCatalogue};
use signed_corona::spectra::{verify_theorem, FormVariant};
use signed_corona::{random_orientation, MatrixKind, OrientedGraph, ProductKind};

#[test]
fn integral_forms_match_direct_charpoly() {
    let cat = RegularCatalogue::new(5, 1);
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for product in ProductKind::ALL {
        for kind in MatrixKind::INTEGRAL {
            for _ in 0..8 {
                let g1 = cat.sample(&mut rng);
                let og1 = OrientedGraph::new(g1.clone(), random_orientation(&g1, rng.gen())).unwrap();
                let n2 = rng.gen_range(1..=3);
                let g2 = random_signed_graph(&mut rng, n2, 0.6);
                let mu2 = MarkingChoice::ALL[rng.gen_range(0..2)].apply(&g2);
                let r = verify_theorem(product, kind, &og1, &g2, &mu2, FormVariant::Derived).unwrap();
                assert!(r.equal, "{product} {kind} g1={:?} g2={:?}", g1.edges(), g2.edges());
            }
        }
    }
}

#[test]
fn random_walk_forms_match_direct_charpoly() {
    let cat = RegularCatalogue::new(4, 1);
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for product in ProductKind::ALL {
        for kind in [MatrixKind::RandomWalk, MatrixKind::NormalizedLaplacian] {
            for _ in 0..6 {
                let g1 = if product == ProductKind::SubdivisionVertexNc {
                    cat.sample(&mut rng)
                } else {
                    loop {
                        let n1 = rng.gen_range(2..=5);
                        let g = random_signed_graph(&mut rng, n1, 0.6);
                        if g.min_degree() > 0 {
                            break g;
                        }
                    }
                };
                let og1 = OrientedGraph::new(g1.clone(), random_orientation(&g1, rng.gen())).unwrap();
                let g2 = cat.sample(&mut rng);
                let mu2 = MarkingChoice::ALL[rng.gen_range(0..2)].apply(&g2);
                let r = verify_theorem(product, kind, &og1, &g2, &mu2, FormVariant::Derived).unwrap();
                assert!(r.equal, "{product} {kind} g1={:?} g2={:?}", g1.edges(), g2.edges());
            }
        }
    }
}
