//! Edge and triangle census of the products, and the balance criterion.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Edge, SignedGraph};
use crate::orientation::OrientedGraph;
use crate::products::{build_product, ProductKind};

/// Triangle counts by number of negative edges.
#[derive(Clone, Copy, PartialEq, Eq, Default, Debug, Serialize)]
pub struct TriadCensus {
    pub t0: u64,
    pub t1: u64,
    pub t2: u64,
    pub t3: u64,
}

impl TriadCensus {
    pub fn total(&self) -> u64 {
        self.t0 + self.t1 + self.t2 + self.t3
    }

    pub fn as_array(&self) -> [u64; 4] {
        [self.t0, self.t1, self.t2, self.t3]
    }
}

/// Counts of every triangle of `g` by its number of negative edges.
pub fn count_triads(g: &SignedGraph) -> TriadCensus {
    let mut t = [0u64; 4];
    let n = g.n();
    for a in 0..n {
        for b in a + 1..n {
            let Some(sab) = g.edge_sign(a, b) else { continue };
            for c in b + 1..n {
                if let (Some(sac), Some(sbc)) = (g.edge_sign(a, c), g.edge_sign(b, c)) {
                    let neg = [sab, sac, sbc].iter().filter(|&&s| s < 0).count();
                    t[neg] += 1;
                }
            }
        }
    }
    TriadCensus {
        t0: t[0],
        t1: t[1],
        t2: t[2],
        t3: t[3],
    }
}

/// Orientation statistics of the first factor and marking statistics of the
/// second, from which every census formula is evaluated.
#[derive(Clone, Copy, PartialEq, Eq, Default, Debug, Serialize)]
pub struct OrientationCensus {
    /// Incidences with `theta = +1` (arrow toward the vertex).
    pub n_plus: u64,
    /// Incidences with `theta = -1`.
    pub n_minus: u64,
    /// Positive edges with both arrows in.
    pub f_plus_in: u64,
    /// Positive edges with both arrows out.
    pub f_plus_out: u64,
    pub f_minus: u64,
    pub mark_plus: u64,
    pub mark_minus: u64,
    /// `e2[s][p]`: edges of sign `s` (0 = +, 1 = -) whose endpoint markings
    /// form pattern `p` (0 = ++, 1 = +-, 2 = --).
    pub e2: [[u64; 3]; 2],
}

pub fn orientation_census(og1: &OrientedGraph, g2: &SignedGraph, mu2: &[i8]) -> OrientationCensus {
    let mut c = OrientationCensus::default();
    for (e, &(a, b)) in og1.graph.edges().iter().zip(&og1.orientation.per_edge) {
        for t in [a, b] {
            if t > 0 {
                c.n_plus += 1;
            } else {
                c.n_minus += 1;
            }
        }
        match (e.s, a) {
            (1, 1) => c.f_plus_in += 1,
            (1, _) => c.f_plus_out += 1,
            _ => c.f_minus += 1,
        }
    }
    for &m in mu2 {
        if m > 0 {
            c.mark_plus += 1;
        } else {
            c.mark_minus += 1;
        }
    }
    for e in g2.edges() {
        let s = (e.s < 0) as usize;
        let p = (mu2[e.u] < 0) as usize + (mu2[e.v] < 0) as usize;
        c.e2[s][p] += 1;
    }
    c
}

/// Which set of census formulas to evaluate.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub enum TableVariant {
    /// The formulas as printed, including two misprinted terms.
    Printed,
    /// The formulas with those terms corrected.
    Corrected,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct ProductCensus {
    pub edges: u64,
    pub plus: u64,
    pub minus: u64,
    pub triads: TriadCensus,
}

impl ProductCensus {
    /// Direct counts on a constructed graph.
    pub fn of_graph(g: &SignedGraph) -> Self {
        let minus = g.edges().iter().filter(|e| e.s < 0).count() as u64;
        ProductCensus {
            edges: g.m() as u64,
            plus: g.m() as u64 - minus,
            minus,
            triads: count_triads(g),
        }
    }

    /// Named rows whose values differ from `other`.
    pub fn mismatched_rows(&self, other: &ProductCensus) -> Vec<&'static str> {
        let rows = [
            ("edges", self.edges, other.edges),
            ("+ edges", self.plus, other.plus),
            ("- edges", self.minus, other.minus),
            ("T0", self.triads.t0, other.triads.t0),
            ("T1", self.triads.t1, other.triads.t1),
            ("T2", self.triads.t2, other.triads.t2),
            ("T3", self.triads.t3, other.triads.t3),
        ];
        rows.into_iter().filter(|r| r.1 != r.2).map(|r| r.0).collect()
    }
}

/// Edge and triangle counts of the product evaluated from the census
/// formulas alone, without building it.
pub fn predict_census(
    product: ProductKind,
    og1: &OrientedGraph,
    g2: &SignedGraph,
    mu2: &[i8],
    variant: TableVariant,
) -> Result<ProductCensus> {
    let g1 = &og1.graph;
    if mu2.len() != g2.n() {
        return Err(Error::DimensionMismatch {
            expected: g2.n(),
            found: mu2.len(),
        });
    }
    if g1.m() == 0 && product != ProductKind::SubdivisionVertexNc {
        return Err(Error::precondition(format!("{product} needs a first factor with at least one edge")));
    }
    let c = orientation_census(og1, g2, mu2);
    let (v1, e1) = (g1.n() as u64, g1.m() as u64);
    let v2 = g2.n() as u64;
    let e1_minus = g1.edges().iter().filter(|e| e.s < 0).count() as u64;
    let e1_plus = e1 - e1_minus;
    let e2_plus: u64 = c.e2[0].iter().sum();
    let e2_minus: u64 = c.e2[1].iter().sum();
    let (pp, pm, mm) = (0, 1, 2);
    let ep = c.e2[0];
    let en = c.e2[1];
    let t1 = count_triads(g1);
    let t2 = count_triads(g2);
    let printed = variant == TableVariant::Printed;

    // a copy vertex pair joined to a vertex through arrows of either sign
    let joined = TriadCensus {
        t0: c.n_plus * ep[pp] + c.n_minus * ep[mm],
        t1: c.n_plus * en[pp] + c.n_minus * en[mm] + 2 * e1 * ep[pm],
        t2: c.n_plus * ep[mm] + c.n_minus * ep[pp] + 2 * e1 * en[pm],
        t3: c.n_plus * en[mm] + c.n_minus * en[pp],
    };
    let copies = product.copies(g1.n(), g1.m()) as u64;
    let in_copies = TriadCensus {
        t0: copies * t2.t0,
        t1: copies * t2.t1,
        t2: copies * t2.t2,
        t3: copies * t2.t3,
    };
    let joins_plus = c.n_plus * c.mark_plus + c.n_minus * c.mark_minus;
    let joins_minus = c.n_plus * c.mark_minus + c.n_minus * c.mark_plus;

    let census = match product {
        ProductKind::EdgeCorona => {
            let t0_joined = if printed {
                c.n_plus * ep[pp] + c.n_minus * ep[pm]
            } else {
                joined.t0
            };
            ProductCensus {
                edges: e1 + 2 * e1 * v2 + e1 * g2.m() as u64,
                plus: e1_plus + e1 * e2_plus + joins_plus,
                minus: e1_minus + e1 * e2_minus + joins_minus,
                triads: TriadCensus {
                    t0: t1.t0 + in_copies.t0 + t0_joined + c.f_plus_in * c.mark_plus + c.f_plus_out * c.mark_minus,
                    t1: t1.t1 + in_copies.t1 + joined.t1,
                    t2: t1.t2
                        + in_copies.t2
                        + joined.t2
                        + c.mark_minus * c.f_plus_in
                        + c.mark_plus * c.f_plus_out
                        + v2 * c.f_minus,
                    t3: t1.t3 + in_copies.t3 + joined.t3,
                },
            }
        }
        ProductKind::SubdivisionVertexNc => ProductCensus {
            edges: 2 * e1 + v1 * g2.m() as u64 + 2 * e1 * v2,
            plus: c.n_plus + v1 * e2_plus + joins_plus,
            minus: c.n_minus + v1 * e2_minus + joins_minus,
            triads: sum(in_copies, joined),
        },
        ProductKind::SubdivisionEdgeNc => {
            let plus_joins = if printed {
                c.n_plus * c.mark_plus + c.n_minus * c.mark_plus
            } else {
                joins_plus
            };
            ProductCensus {
                edges: 2 * e1 + e1 * g2.m() as u64 + 2 * e1 * v2,
                plus: c.n_plus + e1 * e2_plus + plus_joins,
                minus: c.n_minus + e1 * e2_minus + joins_minus,
                triads: sum(in_copies, joined),
            }
        }
    };
    Ok(census)
}

fn sum(a: TriadCensus, b: TriadCensus) -> TriadCensus {
    TriadCensus {
        t0: a.t0 + b.t0,
        t1: a.t1 + b.t1,
        t2: a.t2 + b.t2,
        t3: a.t3 + b.t3,
    }
}

/// Predicted against observed census of one constructed product.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct CensusReport {
    pub product: ProductKind,
    pub variant: TableVariant,
    pub predicted: ProductCensus,
    pub observed: ProductCensus,
    pub mismatched_rows: Vec<&'static str>,
}

impl CensusReport {
    pub fn new(
        product: ProductKind,
        og1: &OrientedGraph,
        g2: &SignedGraph,
        mu2: &[i8],
        variant: TableVariant,
    ) -> Result<Self> {
        let predicted = predict_census(product, og1, g2, mu2, variant)?;
        let built = build_product(product, og1, g2, mu2)?;
        let observed = ProductCensus::of_graph(&built.graph);
        Ok(CensusReport {
            product,
            variant,
            mismatched_rows: predicted.mismatched_rows(&observed),
            predicted,
            observed,
        })
    }

    pub fn agrees(&self) -> bool {
        self.mismatched_rows.is_empty()
    }

    /// Aligned table with one row per count.
    pub fn to_text(&self) -> String {
        let p = &self.predicted;
        let o = &self.observed;
        let rows = [
            ("edges", p.edges, o.edges),
            ("+ edges", p.plus, o.plus),
            ("- edges", p.minus, o.minus),
            ("T0", p.triads.t0, o.triads.t0),
            ("T1", p.triads.t1, o.triads.t1),
            ("T2", p.triads.t2, o.triads.t2),
            ("T3", p.triads.t3, o.triads.t3),
        ];
        let mut out = format!("{:<8} {:>10} {:>10}\n", self.product.name(), "formula", "counted");
        for (name, a, b) in rows {
            let flag = if a == b { "" } else { "  mismatch" };
            out.push_str(&format!("{name:<8} {a:>10} {b:>10}{flag}\n"));
        }
        out
    }
}

/// Edge type of the second factor that breaks balance of the product.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum UnbalancingEdge {
    /// Positive edge between oppositely marked vertices.
    PositiveMixed,
    /// Negative edge between two `+` vertices.
    NegativePlus,
    /// Negative edge between two `-` vertices.
    NegativeMinus,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct BalanceVerdict {
    pub balanced: bool,
    pub witness: Option<(Edge, UnbalancingEdge)>,
}

/// Balance of the product of two balanced factors, decided from the second
/// factor alone: it is unbalanced exactly when some edge `ww'` of `g2` has
/// `sign != mu(w) mu(w')`. With an edgeless first factor no copy is joined
/// to anything and the product is balanced.
pub fn balance_of_product(
    product: ProductKind,
    g1: &SignedGraph,
    g2: &SignedGraph,
    mu2: &[i8],
) -> Result<BalanceVerdict> {
    if !g1.is_balanced() || !g2.is_balanced() {
        return Err(Error::precondition("both factors must be balanced"));
    }
    if mu2.len() != g2.n() {
        return Err(Error::DimensionMismatch {
            expected: g2.n(),
            found: mu2.len(),
        });
    }
    if g1.m() == 0 && product != ProductKind::SubdivisionVertexNc {
        return Err(Error::precondition(format!("{product} needs a first factor with at least one edge")));
    }
    if g1.m() == 0 {
        return Ok(BalanceVerdict {
            balanced: true,
            witness: None,
        });
    }
    let witness = g2.edges().iter().find_map(|e| {
        let (a, b) = (mu2[e.u], mu2[e.v]);
        match (e.s, a, b) {
            (1, a, b) if a != b => Some((*e, UnbalancingEdge::PositiveMixed)),
            (-1, 1, 1) => Some((*e, UnbalancingEdge::NegativePlus)),
            (-1, -1, -1) => Some((*e, UnbalancingEdge::NegativeMinus)),
            _ => None,
        }
    });
    Ok(BalanceVerdict {
        balanced: witness.is_none(),
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn triangle_counts() {
        assert_eq!(count_triads(&cycle(3)).as_array(), [1, 0, 0, 0]);
        let one_neg = SignedGraph::new(3, [(0, 1, 1), (1, 2, -1), (0, 2, 1)]).unwrap();
        assert_eq!(count_triads(&one_neg).as_array(), [0, 1, 0, 0]);
        let og = OrientedGraph::with_default(path(2));
        let p = build_product(ProductKind::EdgeCorona, &og, &empty(1), &[1]).unwrap();
        assert_eq!(count_triads(&p.graph).as_array(), [1, 0, 0, 0]);
    }

    #[test]
    fn triangle_edge_corona_census() {
        let og = OrientedGraph::with_default(cycle(3));
        let got = predict_census(ProductKind::EdgeCorona, &og, &empty(1), &[1], TableVariant::Corrected).unwrap();
        assert_eq!((got.edges, got.plus, got.minus), (9, 9, 0));
        assert_eq!(got.triads.as_array(), [4, 0, 0, 0]);
        let p = build_product(ProductKind::EdgeCorona, &og, &empty(1), &[1]).unwrap();
        assert_eq!(ProductCensus::of_graph(&p.graph), got);
    }

    #[test]
    fn subdivisions_have_no_triangles() {
        let og = OrientedGraph::with_default(complete(4));
        assert_eq!(count_triads(&og.subdivision()).total(), 0);
    }

    #[test]
    fn balance_criterion_examples() {
        let k2 = path(2);
        let mixed = balance_of_product(ProductKind::EdgeCorona, &k2, &k2, &[1, -1]).unwrap();
        assert!(!mixed.balanced);
        assert_eq!(mixed.witness.unwrap().1, UnbalancingEdge::PositiveMixed);
        let neg = SignedGraph::new(2, [(0, 1, -1)]).unwrap();
        assert!(balance_of_product(ProductKind::EdgeCorona, &k2, &neg, &[1, -1]).unwrap().balanced);
        assert!(balance_of_product(ProductKind::SubdivisionEdgeNc, &k2, &empty(1), &[-1]).unwrap().balanced);
        let unbalanced = SignedGraph::new(3, [(0, 1, 1), (1, 2, -1), (0, 2, 1)]).unwrap();
        assert!(balance_of_product(ProductKind::EdgeCorona, &unbalanced, &k2, &[1, 1]).is_err());
    }
}
