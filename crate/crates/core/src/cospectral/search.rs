//! Coronal-and-charpoly coincidences among small signed graphs, and
//! certification of the product pairs they predict to be cospectral.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use super::canon::canonical_form;
use super::iso::{switching_isomorphic, IsoVerdict};
use crate::coronal::{coronal, MatrixKind};
use crate::error::{Error, Result};
use crate::exactalg::{IntPolynomial, RatPolynomial};
use crate::graph::SignedGraph;
use crate::orientation::{random_orientation, OrientedGraph};
use crate::products::{build_product, ProductKind};
use crate::spectra::direct_charpoly;

pub const DEFAULT_NODE_LIMIT: u64 = 2_000_000;

/// Characteristic polynomial and reduced coronal of a marked graph.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct SpectralKey {
    pub kind: MatrixKind,
    pub charpoly: RatPolynomial,
    pub coronal_num: IntPolynomial,
    pub coronal_den: IntPolynomial,
}

pub fn spectral_key(g: &SignedGraph, kind: MatrixKind) -> Result<SpectralKey> {
    let mu = g.marking_or_canonical();
    let r = coronal(g, &mu, kind)?.reduced();
    Ok(SpectralKey {
        kind,
        charpoly: direct_charpoly(g, kind)?,
        coronal_num: r.num,
        coronal_den: r.den,
    })
}

/// Second factors a search of `kind` considers. The random-walk and
/// normalized forms need a regular second factor of positive degree.
pub fn eligible(g: &SignedGraph, kind: MatrixKind) -> bool {
    match kind {
        MatrixKind::RandomWalk | MatrixKind::NormalizedLaplacian => g.regular_degree().is_some_and(|d| d > 0),
        _ => true,
    }
}

/// Two marked graphs with equal keys lying in different switching classes.
#[derive(Clone, Debug, Serialize)]
pub struct CoronalPair {
    pub kind: MatrixKind,
    pub first: SignedGraph,
    pub second: SignedGraph,
    pub key: SpectralKey,
}

/// Pairs of switching-inequivalent graphs among `graphs` with equal
/// [`SpectralKey`]. Isomorphic duplicates carrying their canonical marking
/// are collapsed first; within a key, one representative per switching
/// class is paired with every later one. Output order follows input order.
pub fn find_coronal_pairs(graphs: &[SignedGraph], kind: MatrixKind) -> Result<Vec<CoronalPair>> {
    let candidates: Vec<&SignedGraph> = graphs.iter().filter(|g| eligible(g, kind)).collect();
    let iso_forms: Vec<_> = candidates
        .par_iter()
        .map(|g| (g.marking_or_canonical() == g.canonical_marking()).then(|| canonical_form(g, false)))
        .collect();
    let mut seen = std::collections::HashSet::new();
    let distinct: Vec<&SignedGraph> = candidates
        .iter()
        .zip(iso_forms)
        .filter(|(_, f)| f.as_ref().is_none_or(|f| seen.insert(f.clone())))
        .map(|(g, _)| *g)
        .collect();
    let keys: Vec<SpectralKey> = distinct.par_iter().map(|g| spectral_key(g, kind)).collect::<Result<_>>()?;

    let mut buckets: HashMap<&SpectralKey, Vec<usize>> = HashMap::new();
    for (i, k) in keys.iter().enumerate() {
        buckets.entry(k).or_default().push(i);
    }
    let mut groups: Vec<Vec<usize>> = buckets.into_values().filter(|b| b.len() > 1).collect();
    groups.sort_unstable_by_key(|b| b[0]);

    let mut pairs = Vec::new();
    for group in groups {
        let forms: Vec<_> = group.par_iter().map(|&i| canonical_form(distinct[i], true)).collect();
        let mut reps: Vec<usize> = Vec::new();
        for pos in 0..group.len() {
            if reps.iter().all(|&r| forms[r] != forms[pos]) {
                reps.push(pos);
            }
        }
        for (x, &a) in reps.iter().enumerate() {
            for &b in &reps[x + 1..] {
                pairs.push(CoronalPair {
                    kind,
                    first: distinct[group[a]].clone(),
                    second: distinct[group[b]].clone(),
                    key: keys[group[a]].clone(),
                });
            }
        }
    }
    Ok(pairs)
}

/// Outcome of recomputing both products of a pair from scratch.
#[derive(Clone, Debug, Serialize)]
pub struct PairCertificate {
    pub product: ProductKind,
    pub kind: MatrixKind,
    pub first_charpoly: RatPolynomial,
    pub second_charpoly: RatPolynomial,
    pub cospectral: bool,
    pub products: IsoVerdict,
    pub certified: bool,
}

/// Builds `g1 * first` under `og1_first` and `g1 * second` under
/// `og1_second`, compares their direct characteristic polynomials and
/// decides whether the products are switching isomorphic.
pub fn certify_pair(
    og1_first: &OrientedGraph,
    og1_second: &OrientedGraph,
    pair: &CoronalPair,
    product: ProductKind,
    kind: MatrixKind,
    node_limit: u64,
) -> Result<PairCertificate> {
    if pair.kind != kind {
        return Err(Error::precondition(format!("pair was found for {} but certified for {kind}", pair.kind)));
    }
    if og1_first.graph != og1_second.graph {
        return Err(Error::precondition("both products need the same first factor"));
    }
    if og1_first.graph.regular_degree().is_none() {
        return Err(Error::precondition("first factor must be regular"));
    }
    if canonical_form(&pair.first, true) == canonical_form(&pair.second, true) {
        return Err(Error::precondition("pair members are switching isomorphic"));
    }
    let a = build_product(product, og1_first, &pair.first, &pair.first.marking_or_canonical())?;
    let b = build_product(product, og1_second, &pair.second, &pair.second.marking_or_canonical())?;
    let first_charpoly = direct_charpoly(&a.graph, kind)?;
    let second_charpoly = direct_charpoly(&b.graph, kind)?;
    let cospectral = first_charpoly == second_charpoly;
    let products = switching_isomorphic(&a.graph, &b.graph, node_limit);
    Ok(PairCertificate {
        product,
        kind,
        certified: cospectral && products == IsoVerdict::NonIsomorphic,
        first_charpoly,
        second_charpoly,
        cospectral,
        products,
    })
}

/// One catalogue line: a certified or rejected product pair.
#[derive(Clone, Debug, Serialize)]
pub struct CatalogueEntry {
    pub first_factor: String,
    pub second: String,
    pub third: String,
    pub product: ProductKind,
    pub kind: MatrixKind,
    pub charpoly: Vec<String>,
    pub certified: bool,
    pub products: IsoVerdict,
}

#[derive(Clone, Debug)]
pub struct SearchConfig {
    pub max_order: usize,
    pub connected_only: bool,
    pub kinds: Vec<MatrixKind>,
    pub products: Vec<ProductKind>,
    pub first_factors: Vec<SignedGraph>,
    pub seed: u64,
    pub node_limit: u64,
}

/// Every pair found among signed graphs of order `2..=max_order`,
/// certified against every first factor and product. Orientations are drawn
/// independently per product from `seed`.
pub fn search_catalogue(cfg: &SearchConfig) -> Result<Vec<CatalogueEntry>> {
    let mut graphs = Vec::new();
    for n in 2..=cfg.max_order {
        graphs.extend(super::enumerate::enumerate_signed_graphs(n, cfg.connected_only)?);
    }
    let mut jobs = Vec::new();
    for &kind in &cfg.kinds {
        for pair in find_coronal_pairs(&graphs, kind)? {
            for (fi, g1) in cfg.first_factors.iter().enumerate() {
                for &product in &cfg.products {
                    jobs.push((pair.clone(), fi, g1, product));
                }
            }
        }
    }
    jobs.par_iter()
        .enumerate()
        .map(|(j, (pair, _, g1, product))| {
            let s = cfg.seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(2 * j as u64);
            let og_a = OrientedGraph::new((*g1).clone(), random_orientation(g1, s))?;
            let og_b = OrientedGraph::new((*g1).clone(), random_orientation(g1, s + 1))?;
            let cert = certify_pair(&og_a, &og_b, pair, *product, pair.kind, cfg.node_limit)?;
            Ok(CatalogueEntry {
                first_factor: g1.to_edge_list(),
                second: pair.first.to_edge_list(),
                third: pair.second.to_edge_list(),
                product: *product,
                kind: pair.kind,
                charpoly: cert.first_charpoly.coeff_strings(),
                certified: cert.certified,
                products: cert.products,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    fn marked(g: SignedGraph) -> SignedGraph {
        let mu = g.canonical_marking();
        g.with_marking(mu).unwrap()
    }

    #[test]
    fn self_and_switched_copies_are_not_paired() {
        let g = marked(cycle(4));
        let h = marked(g.switch(&[1, -1, 1, 1]).unwrap());
        let pairs = find_coronal_pairs(&[g.clone(), g.clone(), h], MatrixKind::Adjacency).unwrap();
        assert!(pairs.is_empty());
    }

    #[test]
    fn certification_rejects_misuse() {
        let g = marked(path(3));
        let h = marked(SignedGraph::new(3, [(0, 1, -1), (1, 2, 1)]).unwrap());
        let pair = CoronalPair {
            kind: MatrixKind::Adjacency,
            key: spectral_key(&g, MatrixKind::Adjacency).unwrap(),
            first: g.clone(),
            second: g,
        };
        let og = OrientedGraph::with_default(cycle(3));
        let same = certify_pair(&og, &og, &pair, ProductKind::EdgeCorona, MatrixKind::Adjacency, 1000);
        assert!(same.unwrap_err().is_precondition());
        let pair = CoronalPair { second: h, ..pair };
        let wrong = certify_pair(&og, &og, &pair, ProductKind::EdgeCorona, MatrixKind::Laplacian, 1000);
        assert!(wrong.unwrap_err().is_precondition());
    }

    #[test]
    fn small_search_certifies_every_pair() {
        let mut graphs = Vec::new();
        for n in 2..=4 {
            graphs.extend(super::super::enumerate::enumerate_signed_graphs(n, true).unwrap());
        }
        let pairs = find_coronal_pairs(&graphs, MatrixKind::Adjacency).unwrap();
        let og = OrientedGraph::with_default(cycle(3));
        for pair in &pairs {
            let c = certify_pair(&og, &og, pair, ProductKind::EdgeCorona, MatrixKind::Adjacency, DEFAULT_NODE_LIMIT)
                .unwrap();
            assert!(c.cospectral, "{pair:?}");
        }
    }
}
