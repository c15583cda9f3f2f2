use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use signed_corona::exactalg::{
    adjugate_polynomial, charpoly_exact, charpoly_int, eigenvalues_sym, multiset_distance, poly_compose_projective,
    real_roots, ExactMatrix, IntPolynomial, RatPolynomial,
};
use signed_corona::gen::{all_pairs, regular_graphs};
use signed_corona::spectra::{build_matrix, direct_charpoly};
use signed_corona::{build_product, coronal, MatrixKind, OrientedGraph, ProductKind, ROrientation, SignedGraph};

prop_compose! {
    fn signed_graph(max_n: usize)(n in 1..=max_n)
        (n in Just(n), bits in prop::collection::vec((any::<bool>(), any::<bool>()), n * (n - 1) / 2))
        -> SignedGraph {
        let edges = all_pairs(n)
            .into_iter()
            .zip(bits)
            .filter(|(_, (present, _))| *present)
            .map(|((u, v), (_, neg))| (u, v, if neg { -1 } else { 1 }));
        SignedGraph::new(n, edges).unwrap()
    }
}

fn switch_vector(bits: &[bool], n: usize) -> Vec<i8> {
    (0..n).map(|i| if bits.get(i).copied().unwrap_or(false) { -1 } else { 1 }).collect()
}

fn orientation(g: &SignedGraph, flips: &[bool]) -> ROrientation {
    let per_edge = g
        .edges()
        .iter()
        .enumerate()
        .map(|(i, e)| {
            let a: i8 = if flips.get(i).copied().unwrap_or(false) { -1 } else { 1 };
            (a, a * e.s)
        })
        .collect();
    ROrientation::new(g, per_edge).unwrap()
}

fn regular_signed(index: usize, signs: &[bool]) -> SignedGraph {
    let mut pool: Vec<SignedGraph> = (2..=5).flat_map(|n| regular_graphs(n, 1)).collect();
    let g = pool.swap_remove(index % pool.len());
    SignedGraph::new(
        g.n(),
        g.edges().iter().enumerate().map(|(i, e)| (e.u, e.v, if signs.get(i).copied().unwrap_or(false) { -1 } else { 1 })),
    )
    .unwrap()
}

fn rat(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

fn int_entries(max_n: usize) -> impl Strategy<Value = ExactMatrix> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(-4i64..=4, n * n).prop_map(move |v| {
            let mut m = ExactMatrix::zeros(n, n);
            for (k, x) in v.into_iter().enumerate() {
                m.set_i64(k / n, k % n, x);
            }
            m
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn switching_preserves_integral_spectra(g in signed_graph(6), bits in prop::collection::vec(any::<bool>(), 6)) {
        let s = switch_vector(&bits, g.n());
        let h = g.switch(&s).unwrap();
        for kind in MatrixKind::INTEGRAL {
            prop_assert_eq!(direct_charpoly(&g, kind).unwrap(), direct_charpoly(&h, kind).unwrap());
        }
        prop_assert_eq!(g.is_balanced(), h.is_balanced());
    }

    #[test]
    fn canonical_marking_under_switching(g in signed_graph(6), bits in prop::collection::vec(any::<bool>(), 6)) {
        let s = switch_vector(&bits, g.n());
        let mu = g.canonical_marking();
        let switched = g.switch(&s).unwrap().canonical_marking();
        for v in 0..g.n() {
            let mut expect = mu[v];
            for &(u, _) in g.neighbors(v) {
                expect *= s[u] * s[v];
            }
            prop_assert_eq!(switched[v], expect);
        }
    }

    #[test]
    fn balance_matches_exhaustive_switching(g in signed_graph(6)) {
        let n = g.n();
        let all_positive = (0u32..1 << n).any(|mask| {
            let s: Vec<i8> = (0..n).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect();
            g.switch(&s).unwrap().edges().iter().all(|e| e.s > 0)
        });
        prop_assert_eq!(g.is_balanced(), all_positive);
    }

    #[test]
    fn faddeev_agrees_with_bareiss(m in int_entries(6), t in -5i64..=5) {
        let f = charpoly_int(&m).unwrap();
        let n = m.rows();
        let shifted = &ExactMatrix::identity(n).scale(&rat(t)) - &m;
        prop_assert_eq!(BigRational::from_integer(f.eval(&BigInt::from(t))), shifted.determinant().unwrap());
    }

    #[test]
    fn adjugate_inverts_resolvent(m in int_entries(5), t in -4i64..=4) {
        let (f, mats) = adjugate_polynomial(&m).unwrap();
        let n = m.rows();
        let mut adj = ExactMatrix::zeros(n, n);
        for (k, b) in mats.iter().enumerate() {
            adj = &adj + &b.scale(&rat(t.pow((n - 1 - k) as u32)));
        }
        let lhs = &(&ExactMatrix::identity(n).scale(&rat(t)) - &m) * &adj;
        let rhs = ExactMatrix::identity(n).scale(&BigRational::from_integer(f.eval(&BigInt::from(t))));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn jacobi_agrees_with_exact_roots(g in signed_graph(7)) {
        for kind in MatrixKind::INTEGRAL {
            let m = build_matrix(&g, kind).unwrap();
            let numeric = eigenvalues_sym(&m).unwrap();
            let exact = real_roots(&charpoly_exact(&m).unwrap());
            prop_assert!(multiset_distance(&numeric, &exact) < 1e-8);
        }
    }

    #[test]
    fn projective_composition_with_identity(c in prop::collection::vec(-9i64..=9, 1..7)) {
        let f = IntPolynomial::from_i64s(&c);
        let same = poly_compose_projective(&f, &IntPolynomial::x(), &IntPolynomial::one());
        prop_assert_eq!(same, f);
    }

    #[test]
    fn coronal_ignores_global_marking_sign(g in signed_graph(6)) {
        let mu = g.canonical_marking();
        let neg: Vec<i8> = mu.iter().map(|x| -x).collect();
        for kind in MatrixKind::INTEGRAL {
            let a = coronal(&g, &mu, kind).unwrap();
            let b = coronal(&g, &neg, kind).unwrap();
            prop_assert!(a.equivalent(&b));
            prop_assert!(a.is_strictly_proper());
        }
    }

    #[test]
    fn product_adjacency_blocks(
        idx in 0usize..64,
        signs in prop::collection::vec(any::<bool>(), 10),
        flips in prop::collection::vec(any::<bool>(), 10),
        g2 in signed_graph(4),
        mbits in prop::collection::vec(any::<bool>(), 4),
    ) {
        let g1 = regular_signed(idx, &signs);
        let og1 = OrientedGraph::new(g1.clone(), orientation(&g1, &flips)).unwrap();
        let mu: Vec<i8> = switch_vector(&mbits, g2.n());
        let (n1, m1, n2) = (g1.n(), g1.m(), g2.n());
        let r = og1.incidence_matrix();
        let rt = r.transpose();
        let mu_col = ExactMatrix::column(&mu.iter().map(|&x| x as i64).collect::<Vec<_>>());
        let mu_row = mu_col.transpose();
        let a1 = build_matrix(&g1, MatrixKind::Adjacency).unwrap();
        let a2 = build_matrix(&g2, MatrixKind::Adjacency).unwrap();
        for product in ProductKind::ALL {
            let built = build_product(product, &og1, &g2, &mu).unwrap();
            let got = build_matrix(&built.graph, MatrixKind::Adjacency).unwrap();
            let mut want = ExactMatrix::zeros(got.rows(), got.cols());
            match product {
                ProductKind::EdgeCorona => {
                    let join = r.kron(&mu_row);
                    want.set_block(0, 0, &a1);
                    want.set_block(0, n1, &join);
                    want.set_block(n1, 0, &join.transpose());
                    want.set_block(n1, n1, &ExactMatrix::identity(m1).kron(&a2));
                }
                ProductKind::SubdivisionVertexNc => {
                    let join = rt.kron(&mu_row);
                    want.set_block(0, n1, &r);
                    want.set_block(n1, 0, &rt);
                    want.set_block(n1, n1 + m1, &join);
                    want.set_block(n1 + m1, n1, &join.transpose());
                    want.set_block(n1 + m1, n1 + m1, &ExactMatrix::identity(n1).kron(&a2));
                }
                ProductKind::SubdivisionEdgeNc => {
                    let join = r.kron(&mu_row);
                    want.set_block(0, n1, &r);
                    want.set_block(n1, 0, &rt);
                    want.set_block(0, n1 + m1, &join);
                    want.set_block(n1 + m1, 0, &join.transpose());
                    want.set_block(n1 + m1, n1 + m1, &ExactMatrix::identity(m1).kron(&a2));
                }
            }
            prop_assert_eq!(got.rows(), n1 + if product.has_inserted() { m1 } else { 0 } + product.copies(n1, m1) * n2);
            prop_assert_eq!(got, want);
        }
    }

    #[test]
    fn orientation_does_not_change_spectra(
        idx in 0usize..64,
        signs in prop::collection::vec(any::<bool>(), 10),
        f1 in prop::collection::vec(any::<bool>(), 10),
        f2 in prop::collection::vec(any::<bool>(), 10),
        g2 in signed_graph(3),
    ) {
        let g1 = regular_signed(idx, &signs);
        let a = OrientedGraph::new(g1.clone(), orientation(&g1, &f1)).unwrap();
        let b = OrientedGraph::new(g1.clone(), orientation(&g1, &f2)).unwrap();
        let mu = g2.canonical_marking();
        for product in ProductKind::ALL {
            let pa = build_product(product, &a, &g2, &mu).unwrap().graph;
            let pb = build_product(product, &b, &g2, &mu).unwrap().graph;
            for kind in MatrixKind::INTEGRAL {
                prop_assert_eq!(direct_charpoly(&pa, kind).unwrap(), direct_charpoly(&pb, kind).unwrap());
            }
        }
    }
}

/// Unsigned construction written from the definitions, for all-positive
/// inputs with every arrow pointing inwards.
fn unsigned_product(product: ProductKind, g1: &SignedGraph, g2: &SignedGraph) -> SignedGraph {
    let (n1, m1, n2) = (g1.n(), g1.m(), g2.n());
    let mut edges = Vec::new();
    let copy_edges = |off: usize, edges: &mut Vec<(usize, usize)>| {
        edges.extend(g2.edges().iter().map(|e| (off + e.u, off + e.v)));
    };
    match product {
        ProductKind::EdgeCorona => {
            edges.extend(g1.edges().iter().map(|e| (e.u, e.v)));
            for (j, e) in g1.edges().iter().enumerate() {
                let off = n1 + j * n2;
                copy_edges(off, &mut edges);
                for w in 0..n2 {
                    edges.push((e.u, off + w));
                    edges.push((e.v, off + w));
                }
            }
        }
        ProductKind::SubdivisionVertexNc => {
            for (j, e) in g1.edges().iter().enumerate() {
                edges.push((e.u, n1 + j));
                edges.push((e.v, n1 + j));
            }
            for v in 0..n1 {
                let off = n1 + m1 + v * n2;
                copy_edges(off, &mut edges);
                for (j, e) in g1.edges().iter().enumerate() {
                    if e.u == v || e.v == v {
                        edges.extend((0..n2).map(|w| (n1 + j, off + w)));
                    }
                }
            }
        }
        ProductKind::SubdivisionEdgeNc => {
            for (j, e) in g1.edges().iter().enumerate() {
                edges.push((e.u, n1 + j));
                edges.push((e.v, n1 + j));
                let off = n1 + m1 + j * n2;
                copy_edges(off, &mut edges);
                for w in 0..n2 {
                    edges.push((e.u, off + w));
                    edges.push((e.v, off + w));
                }
            }
        }
    }
    let total = n1 + if product.has_inserted() { m1 } else { 0 } + product.copies(n1, m1) * n2;
    SignedGraph::unsigned(total, edges).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn positive_inputs_give_the_unsigned_products(g1 in signed_graph(5), g2 in signed_graph(4)) {
        prop_assume!(g1.m() > 0);
        let g1 = g1.underlying();
        let g2 = g2.underlying();
        let og1 = OrientedGraph::with_default(g1.clone());
        let mu = vec![1i8; g2.n()];
        for product in ProductKind::ALL {
            let built = build_product(product, &og1, &g2, &mu).unwrap().graph;
            prop_assert_eq!(built, unsigned_product(product, &g1, &g2));
        }
    }
}

#[test]
fn rational_charpoly_is_monic() {
    let m = ExactMatrix::from_rows(vec![vec![rat(1) / rat(2), rat(1)], vec![rat(1), rat(0)]]).unwrap();
    let f: RatPolynomial = charpoly_exact(&m).unwrap();
    assert!(f.is_monic());
    assert_eq!(f.coeff(0), rat(-1));
}
