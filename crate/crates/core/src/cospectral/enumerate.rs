//! Exhaustive generation of small signed graphs.

use std::collections::BTreeSet;

use rayon::prelude::*;

use super::canon::{canonical_form, CanonicalForm};
use crate::error::{Error, Result};
use crate::gen::{all_labelled_graphs, with_sign_mask};
use crate::graph::SignedGraph;

pub const MAX_ORDER: usize = 7;

/// One representative per isomorphism class of unsigned graphs on `n`
/// vertices, in canonical-code order. Classes on `n` vertices are grown from
/// those on `n - 1` by attaching a new vertex to every neighbour subset.
pub fn underlying_graphs(n: usize, connected_only: bool) -> Result<Vec<SignedGraph>> {
    if n == 0 || n > MAX_ORDER {
        return Err(Error::precondition(format!("order must be in 1..={MAX_ORDER}, got {n}")));
    }
    let mut level: BTreeSet<CanonicalForm> = BTreeSet::new();
    level.insert(canonical_form(&SignedGraph::unsigned(1, []).expect("one vertex"), false));
    for k in 2..=n {
        let parents: Vec<SignedGraph> = level.iter().map(CanonicalForm::to_graph).collect();
        level = parents
            .par_iter()
            .flat_map_iter(|p| {
                (0u32..1 << (k - 1)).map(move |mask| {
                    let edges = p
                        .edges()
                        .iter()
                        .map(|e| (e.u, e.v))
                        .chain((0..k - 1).filter(|i| mask >> i & 1 == 1).map(|i| (i, k - 1)));
                    canonical_form(&SignedGraph::unsigned(k, edges).expect("new pairs"), false)
                })
            })
            .collect();
    }
    Ok(level
        .iter()
        .map(CanonicalForm::to_graph)
        .filter(|g| !connected_only || g.is_connected())
        .collect())
}

/// Every underlying graph from [`underlying_graphs`] with each of its `2^m`
/// sign patterns, carrying the canonical marking.
pub fn enumerate_signed_graphs(n: usize, connected_only: bool) -> Result<impl Iterator<Item = SignedGraph>> {
    let base = underlying_graphs(n, connected_only)?;
    Ok(base.into_iter().flat_map(|g| {
        (0u64..1 << g.m()).map(move |mask| {
            let s = with_sign_mask(&g, mask);
            let mu = s.canonical_marking();
            s.with_marking(mu).expect("marking has the right length")
        })
    }))
}

/// Number of unsigned isomorphism classes on `n` vertices, by bucketing
/// every labelled graph by its canonical form. No growth step is shared with
/// [`underlying_graphs`].
pub fn count_classes_by_brute_force(n: usize, connected_only: bool) -> usize {
    all_labelled_graphs(n)
        .filter(|g| !connected_only || g.is_connected())
        .map(|g| canonical_form(&g, false))
        .collect::<BTreeSet<_>>()
        .len()
}
