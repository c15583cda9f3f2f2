//! Random and exhaustive generators of small signed graphs.

use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::SignedGraph;

/// Which marking a second factor carries into a product.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub enum MarkingChoice {
    Canonical,
    Plurality,
}

impl MarkingChoice {
    pub const ALL: [MarkingChoice; 2] = [MarkingChoice::Canonical, MarkingChoice::Plurality];

    pub fn apply(self, g: &SignedGraph) -> Vec<i8> {
        match self {
            MarkingChoice::Canonical => g.canonical_marking(),
            MarkingChoice::Plurality => g.plurality_marking(),
        }
    }
}

impl FromStr for MarkingChoice {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "canonical" | "c" => Ok(MarkingChoice::Canonical),
            "plurality" | "p" => Ok(MarkingChoice::Plurality),
            _ => Err(Error::Unsupported(format!("unknown marking `{s}`"))),
        }
    }
}

/// All vertex pairs `(i, j)`, `i < j`, in lexicographic order.
pub fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

/// Every edge present independently with probability `p`, signs uniform.
pub fn random_signed_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> SignedGraph {
    let mut edges = Vec::new();
    for (u, v) in all_pairs(n) {
        if rng.gen_bool(p) {
            edges.push((u, v, random_sign(rng)));
        }
    }
    SignedGraph::new(n, edges).expect("pairs are distinct")
}

pub fn random_sign<R: Rng>(rng: &mut R) -> i8 {
    if rng.gen::<bool>() {
        1
    } else {
        -1
    }
}

/// Same underlying graph with uniformly random signs.
pub fn with_random_signs<R: Rng>(rng: &mut R, g: &SignedGraph) -> SignedGraph {
    SignedGraph::new(g.n(), g.edges().iter().map(|e| (e.u, e.v, random_sign(rng))))
        .expect("same edge set")
}

/// `g` with the signs given by the bits of `mask` (bit set means negative).
pub fn with_sign_mask(g: &SignedGraph, mask: u64) -> SignedGraph {
    SignedGraph::new(
        g.n(),
        g.edges()
            .iter()
            .enumerate()
            .map(|(i, e)| (e.u, e.v, if mask >> i & 1 == 1 { -1 } else { 1 })),
    )
    .expect("same edge set")
}

/// Every labelled unsigned graph on `n` vertices.
pub fn all_labelled_graphs(n: usize) -> impl Iterator<Item = SignedGraph> {
    let pairs = all_pairs(n);
    assert!(pairs.len() < 64, "too many vertex pairs");
    (0u64..1 << pairs.len()).map(move |mask| {
        SignedGraph::unsigned(n, pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &p)| p))
            .expect("pairs are distinct")
    })
}

/// Every labelled regular unsigned graph on `n` vertices of degree at least
/// `min_degree`.
pub fn regular_graphs(n: usize, min_degree: usize) -> Vec<SignedGraph> {
    all_labelled_graphs(n)
        .filter(|g| g.regular_degree().is_some_and(|d| d >= min_degree))
        .collect()
}

/// Catalogue of labelled regular graphs with `1 <= n <= max_n`.
pub struct RegularCatalogue {
    graphs: Vec<SignedGraph>,
}

impl RegularCatalogue {
    pub fn new(max_n: usize, min_degree: usize) -> Self {
        RegularCatalogue {
            graphs: (1..=max_n).flat_map(|n| regular_graphs(n, min_degree)).collect(),
        }
    }

    pub fn graphs(&self) -> &[SignedGraph] {
        &self.graphs
    }

    /// A uniformly chosen catalogue entry with uniformly random signs.
    pub fn sample<R: Rng>(&self, rng: &mut R) -> SignedGraph {
        let g = self.graphs.choose(rng).expect("non-empty catalogue");
        with_random_signs(rng, g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn labelled_counts() {
        assert_eq!(all_labelled_graphs(4).count(), 64);
        // three labelled 4-cycles and K4
        assert_eq!(regular_graphs(4, 2).len(), 4);
        assert_eq!(regular_graphs(4, 3).len(), 1);
    }

    #[test]
    fn sign_masks() {
        let g = crate::graph::families::cycle(3);
        let s = with_sign_mask(&g, 0b101);
        let signs: Vec<i8> = s.edges().iter().map(|e| e.s).collect();
        assert_eq!(signs, vec![-1, 1, -1]);
    }

    #[test]
    fn catalogue_samples_are_regular() {
        let cat = RegularCatalogue::new(5, 1);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..20 {
            assert!(cat.sample(&mut rng).regular_degree().is_some_and(|d| d >= 1));
        }
    }
}
