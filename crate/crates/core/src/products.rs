//! Edge corona and the two subdivision neighbourhood coronas.
//!
//! Vertex layout of every product: the vertices of the first factor, then the
//! inserted subdivision vertices (in edge order) when present, then the copies
//! of the second factor one after another.

use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::SignedGraph;
use crate::orientation::OrientedGraph;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub enum ProductKind {
    /// A copy of the second factor per edge, joined to both endpoints.
    #[serde(rename = "edge-corona")]
    EdgeCorona,
    /// A copy per original vertex, joined to the inserted vertices around it.
    #[serde(rename = "svnc")]
    SubdivisionVertexNc,
    /// A copy per inserted vertex, joined to that vertex's two neighbours.
    #[serde(rename = "senc")]
    SubdivisionEdgeNc,
}

impl ProductKind {
    pub const ALL: [ProductKind; 3] = [
        ProductKind::EdgeCorona,
        ProductKind::SubdivisionVertexNc,
        ProductKind::SubdivisionEdgeNc,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ProductKind::EdgeCorona => "edge-corona",
            ProductKind::SubdivisionVertexNc => "svnc",
            ProductKind::SubdivisionEdgeNc => "senc",
        }
    }

    /// Number of copies of the second factor for a first factor of order `n1`
    /// and size `m1`.
    pub fn copies(self, n1: usize, m1: usize) -> usize {
        match self {
            ProductKind::SubdivisionVertexNc => n1,
            _ => m1,
        }
    }

    pub fn has_inserted(self) -> bool {
        self != ProductKind::EdgeCorona
    }
}

impl fmt::Display for ProductKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ProductKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edge-corona" | "ec" => Ok(ProductKind::EdgeCorona),
            "svnc" | "subdivision-vertex" => Ok(ProductKind::SubdivisionVertexNc),
            "senc" | "subdivision-edge" => Ok(ProductKind::SubdivisionEdgeNc),
            _ => Err(Error::Unsupported(format!("unknown product `{s}`"))),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Layout {
    pub originals: Range<usize>,
    pub inserted: Option<Range<usize>>,
    pub copies: Vec<Range<usize>>,
}

impl Layout {
    pub fn total(&self) -> usize {
        self.copies
            .last()
            .map(|r| r.end)
            .or(self.inserted.as_ref().map(|r| r.end))
            .unwrap_or(self.originals.end)
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ProductResult {
    pub kind: ProductKind,
    pub graph: SignedGraph,
    pub layout: Layout,
}

/// Builds `kind` from `og1` and `g2` marked by `mu2`.
pub fn build_product(
    kind: ProductKind,
    og1: &OrientedGraph,
    g2: &SignedGraph,
    mu2: &[i8],
) -> Result<ProductResult> {
    let g1 = &og1.graph;
    let (n1, m1, n2) = (g1.n(), g1.m(), g2.n());
    if mu2.len() != n2 {
        return Err(Error::DimensionMismatch {
            expected: n2,
            found: mu2.len(),
        });
    }
    if m1 == 0 && kind != ProductKind::SubdivisionVertexNc {
        return Err(Error::precondition(format!("{kind} needs a first factor with at least one edge")));
    }
    let inserted = kind.has_inserted().then(|| n1..n1 + m1);
    let base = inserted.as_ref().map_or(n1, |r| r.end);
    let copies: Vec<Range<usize>> = (0..kind.copies(n1, m1))
        .map(|t| base + t * n2..base + (t + 1) * n2)
        .collect();
    let mut edges = Vec::new();
    match kind {
        ProductKind::EdgeCorona => {
            edges.extend(g1.edges().iter().map(|e| (e.u, e.v, e.s)));
        }
        _ => {
            for (j, e) in g1.edges().iter().enumerate() {
                edges.push((e.u, n1 + j, og1.theta(e.u, j)));
                edges.push((e.v, n1 + j, og1.theta(e.v, j)));
            }
        }
    }
    for (t, range) in copies.iter().enumerate() {
        let off = range.start;
        edges.extend(g2.edges().iter().map(|e| (off + e.u, off + e.v, e.s)));
        match kind {
            ProductKind::EdgeCorona | ProductKind::SubdivisionEdgeNc => {
                let e = g1.edges()[t];
                for x in [e.u, e.v] {
                    let th = og1.theta(x, t);
                    edges.extend((0..n2).map(|w| (x, off + w, th * mu2[w])));
                }
            }
            ProductKind::SubdivisionVertexNc => {
                for j in g1.incident_edges(t) {
                    let th = og1.theta(t, j);
                    edges.extend((0..n2).map(|w| (n1 + j, off + w, th * mu2[w])));
                }
            }
        }
    }
    let layout = Layout {
        originals: 0..n1,
        inserted,
        copies,
    };
    let graph = SignedGraph::new(layout.total(), edges)?;
    Ok(ProductResult { kind, graph, layout })
}

pub fn edge_corona(og1: &OrientedGraph, g2: &SignedGraph) -> Result<ProductResult> {
    build_product(ProductKind::EdgeCorona, og1, g2, &g2.marking_or_canonical())
}

pub fn subdivision_vertex_nc(og1: &OrientedGraph, g2: &SignedGraph) -> Result<ProductResult> {
    build_product(ProductKind::SubdivisionVertexNc, og1, g2, &g2.marking_or_canonical())
}

pub fn subdivision_edge_nc(og1: &OrientedGraph, g2: &SignedGraph) -> Result<ProductResult> {
    build_product(ProductKind::SubdivisionEdgeNc, og1, g2, &g2.marking_or_canonical())
}

/// Expected `(order, size)` of a product.
pub fn expected_size(kind: ProductKind, n1: usize, m1: usize, n2: usize, m2: usize) -> (usize, usize) {
    match kind {
        ProductKind::EdgeCorona => (n1 + m1 * n2, m1 + 2 * m1 * n2 + m1 * m2),
        ProductKind::SubdivisionVertexNc => (n1 + m1 + n1 * n2, 2 * m1 + n1 * m2 + 2 * m1 * n2),
        ProductKind::SubdivisionEdgeNc => (n1 + m1 + m1 * n2, 2 * m1 + m1 * m2 + 2 * m1 * n2),
    }
}
