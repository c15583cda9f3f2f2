//! Canonical forms of small signed graphs under relabelling, optionally
//! combined with switching.
//!
//! The code of a labelled graph lists the entries `(i, j)`, `i < j`, column
//! by column (`(0,1), (0,2), (1,2), (0,3), ...`) with `0` for a non-edge, `1`
//! for a positive and `2` for a negative edge. The canonical form is the
//! smallest code over every relabelling that sorts vertices by a refined
//! degree invariant, and over every switching when requested.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::graph::SignedGraph;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
pub struct CanonicalForm {
    pub n: usize,
    pub code: Vec<u8>,
}

impl CanonicalForm {
    /// The labelled graph whose code this is.
    pub fn to_graph(&self) -> SignedGraph {
        let mut edges = Vec::new();
        let mut idx = 0;
        for j in 1..self.n {
            for i in 0..j {
                match self.code[idx] {
                    1 => edges.push((i, j, 1)),
                    2 => edges.push((i, j, -1)),
                    _ => {}
                }
                idx += 1;
            }
        }
        SignedGraph::new(self.n, edges).expect("code entries are distinct pairs")
    }
}

/// Canonical form up to relabelling (`switching = false`) or up to
/// relabelling and switching (`switching = true`).
pub fn canonical_form(g: &SignedGraph, switching: bool) -> CanonicalForm {
    let n = g.n();
    let mut sign = vec![vec![0i8; n]; n];
    for e in g.edges() {
        sign[e.u][e.v] = e.s;
        sign[e.v][e.u] = e.s;
    }
    let classes = degree_classes(g);
    let mut search = Search {
        sign,
        switching,
        slots: classes.iter().flat_map(|(c, vs)| std::iter::repeat_n(*c, vs.len())).collect(),
        class_of: vec![0; n],
        order: Vec::with_capacity(n),
        used: vec![false; n],
        s: vec![0; n],
        code: Vec::with_capacity(n * n.saturating_sub(1) / 2),
        best: None,
    };
    for (c, vs) in &classes {
        for &v in vs {
            search.class_of[v] = *c;
        }
    }
    search.place();
    CanonicalForm {
        n,
        code: search.best.unwrap_or_default(),
    }
}

/// Vertices grouped by (degree, sorted neighbour degrees), classes numbered
/// in increasing invariant order. The invariant ignores signs, so it is
/// preserved by switching.
fn degree_classes(g: &SignedGraph) -> Vec<(usize, Vec<usize>)> {
    let mut by_inv: BTreeMap<(usize, Vec<usize>), Vec<usize>> = BTreeMap::new();
    for v in 0..g.n() {
        let mut nd: Vec<usize> = g.neighbors(v).iter().map(|&(u, _)| g.degree(u)).collect();
        nd.sort_unstable();
        by_inv.entry((g.degree(v), nd)).or_default().push(v);
    }
    by_inv.into_values().enumerate().collect()
}

struct Search {
    sign: Vec<Vec<i8>>,
    switching: bool,
    /// Class required at each position.
    slots: Vec<usize>,
    class_of: Vec<usize>,
    order: Vec<usize>,
    used: Vec<bool>,
    /// Switching value per vertex, `0` while unassigned.
    s: Vec<i8>,
    code: Vec<u8>,
    best: Option<Vec<u8>>,
}

impl Search {
    /// Extends the current prefix, pruning prefixes above the best code.
    fn place(&mut self) {
        let j = self.order.len();
        if j == self.slots.len() {
            if self.best.as_ref().is_none_or(|b| self.code < *b) {
                self.best = Some(self.code.clone());
            }
            return;
        }
        for v in 0..self.slots.len() {
            if self.used[v] || self.class_of[v] != self.slots[j] {
                continue;
            }
            self.used[v] = true;
            self.order.push(v);
            let choices: &[i8] = if !self.switching {
                &[1]
            } else if self.order[..j].iter().any(|&u| self.sign[u][v] != 0) {
                // the first earlier neighbour fixes the switch of v
                &[0]
            } else if j == 0 {
                &[1]
            } else {
                &[1, -1]
            };
            for &choice in choices {
                self.s[v] = if choice != 0 { choice } else { self.forced_switch(v) };
                let start = self.code.len();
                for i in 0..j {
                    let u = self.order[i];
                    let x = self.sign[u][v] * self.s[u] * self.s[v];
                    self.code.push(match x {
                        0 => 0,
                        1 => 1,
                        _ => 2,
                    });
                }
                let above = self.best.as_ref().is_some_and(|b| self.code[..] > b[..self.code.len()]);
                if !above {
                    self.place();
                }
                self.code.truncate(start);
            }
            self.s[v] = 0;
            self.order.pop();
            self.used[v] = false;
        }
    }

    /// Switch making the edge to the first earlier neighbour positive.
    fn forced_switch(&self, v: usize) -> i8 {
        let u = *self
            .order
            .iter()
            .find(|&&u| u != v && self.sign[u][v] != 0)
            .expect("caller checked an earlier neighbour");
        self.sign[u][v] * self.s[u]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn relabelling_invariance() {
        let g = SignedGraph::new(4, [(0, 1, 1), (1, 2, -1), (2, 3, 1), (0, 2, 1)]).unwrap();
        let h = g.relabel(&[2, 0, 3, 1]);
        assert_eq!(canonical_form(&g, false), canonical_form(&h, false));
        assert_eq!(canonical_form(&g, true), canonical_form(&h, true));
    }

    #[test]
    fn switching_separates_only_when_disabled() {
        let g = cycle(4);
        let h = g.switch(&[1, -1, 1, 1]).unwrap();
        assert_ne!(canonical_form(&g, false), canonical_form(&h, false));
        assert_eq!(canonical_form(&g, true), canonical_form(&h, true));
        let unbalanced = SignedGraph::new(4, [(0, 1, -1), (1, 2, 1), (2, 3, 1), (0, 3, 1)]).unwrap();
        assert_ne!(canonical_form(&g, true), canonical_form(&unbalanced, true));
    }

    #[test]
    fn form_round_trips() {
        let g = SignedGraph::new(5, [(0, 1, -1), (1, 2, 1), (3, 4, -1)]).unwrap();
        let c = canonical_form(&g, false);
        assert_eq!(canonical_form(&c.to_graph(), false), c);
    }

    #[test]
    fn all_positive_forms_are_minimal_under_switching() {
        let k4 = complete(4);
        let c = canonical_form(&k4, true);
        assert!(c.code.iter().all(|&x| x == 1));
    }
}
