//! r-orientations, incidence matrices, line signed graphs and subdivisions.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactalg::ExactMatrix;
use crate::graph::SignedGraph;

/// Per-edge pair `(theta(u, e), theta(v, e))` for each edge `e = uv`, `u < v`,
/// in the graph's edge order. The product of each pair is the edge sign.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct ROrientation {
    pub per_edge: Vec<(i8, i8)>,
}

impl ROrientation {
    /// Validates `per_edge` against the signature of `g`.
    pub fn new(g: &SignedGraph, per_edge: Vec<(i8, i8)>) -> Result<Self> {
        if per_edge.len() != g.m() {
            return Err(Error::DimensionMismatch {
                expected: g.m(),
                found: per_edge.len(),
            });
        }
        for (e, &(a, b)) in g.edges().iter().zip(&per_edge) {
            if a.abs() != 1 || b.abs() != 1 || a * b != e.s {
                return Err(Error::InvalidGraph(format!(
                    "orientation ({a},{b}) inconsistent with edge ({},{}) of sign {}",
                    e.u, e.v, e.s
                )));
            }
        }
        Ok(ROrientation { per_edge })
    }

    /// `theta(x, e)`, zero when `x` is not an endpoint of edge `e`.
    pub fn theta(&self, g: &SignedGraph, x: usize, e: usize) -> i8 {
        let edge = g.edges()[e];
        if x == edge.u {
            self.per_edge[e].0
        } else if x == edge.v {
            self.per_edge[e].1
        } else {
            0
        }
    }
}

/// Positive edges get `(+1, +1)`, negative edges `(+1, -1)`.
pub fn default_orientation(g: &SignedGraph) -> ROrientation {
    ROrientation {
        per_edge: g.edges().iter().map(|e| (1, e.s)).collect(),
    }
}

/// Each edge independently gets one of its two consistent pairs.
pub fn random_orientation(g: &SignedGraph, seed: u64) -> ROrientation {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_orientation_with(g, &mut rng)
}

pub fn random_orientation_with<R: Rng>(g: &SignedGraph, rng: &mut R) -> ROrientation {
    ROrientation {
        per_edge: g
            .edges()
            .iter()
            .map(|e| {
                let a: i8 = if rng.gen::<bool>() { 1 } else { -1 };
                (a, a * e.s)
            })
            .collect(),
    }
}

/// All `2^m` r-orientations of `g`; bit `i` of the index flips edge `i`.
pub fn all_orientations(g: &SignedGraph) -> impl Iterator<Item = ROrientation> + '_ {
    assert!(g.m() < 64, "too many edges to enumerate orientations");
    (0u64..1 << g.m()).map(move |mask| ROrientation {
        per_edge: g
            .edges()
            .iter()
            .enumerate()
            .map(|(i, e)| {
                let a: i8 = if mask >> i & 1 == 1 { -1 } else { 1 };
                (a, a * e.s)
            })
            .collect(),
    })
}

/// A signed graph together with an r-orientation of it.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct OrientedGraph {
    pub graph: SignedGraph,
    pub orientation: ROrientation,
}

impl OrientedGraph {
    pub fn new(graph: SignedGraph, orientation: ROrientation) -> Result<Self> {
        let orientation = ROrientation::new(&graph, orientation.per_edge)?;
        Ok(OrientedGraph { graph, orientation })
    }

    pub fn with_default(graph: SignedGraph) -> Self {
        let orientation = default_orientation(&graph);
        OrientedGraph { graph, orientation }
    }

    pub fn theta(&self, x: usize, e: usize) -> i8 {
        self.orientation.theta(&self.graph, x, e)
    }

    /// `n x m` matrix of `theta(v_i, e_j)`.
    pub fn incidence_matrix(&self) -> ExactMatrix {
        let g = &self.graph;
        let mut r = ExactMatrix::zeros(g.n(), g.m());
        for (j, e) in g.edges().iter().enumerate() {
            let (a, b) = self.orientation.per_edge[j];
            r.set_i64(e.u, j, a as i64);
            r.set_i64(e.v, j, b as i64);
        }
        r
    }

    /// Line signed graph: edges `a`, `b` sharing endpoint `x` are joined with
    /// sign `theta(x, a) * theta(x, b)`.
    pub fn line_graph(&self) -> SignedGraph {
        let g = &self.graph;
        let mut edges = Vec::new();
        for x in 0..g.n() {
            let inc = g.incident_edges(x);
            for (i, &a) in inc.iter().enumerate() {
                for &b in &inc[i + 1..] {
                    edges.push((a, b, self.theta(x, a) * self.theta(x, b)));
                }
            }
        }
        SignedGraph::new(g.m(), edges).expect("simple graph has a simple line graph")
    }

    /// Subdivision: vertex `n + j` is inserted on edge `j` and joined to each
    /// endpoint `x` with sign `theta(x, j)`.
    pub fn subdivision(&self) -> SignedGraph {
        let g = &self.graph;
        let n = g.n();
        let edges = g.edges().iter().enumerate().flat_map(|(j, e)| {
            let (a, b) = self.orientation.per_edge[j];
            [(e.u, n + j, a), (e.v, n + j, b)]
        });
        SignedGraph::new(n + g.m(), edges).expect("subdivision is simple")
    }
}
