//! Signed graphs, vertex markings, balance and switching.

use std::collections::VecDeque;
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};

/// Edge with `u < v` and sign `s` in `{+1, -1}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub s: i8,
}

impl Edge {
    /// The endpoint other than `x`.
    pub fn other(&self, x: usize) -> usize {
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }

    pub fn has(&self, x: usize) -> bool {
        self.u == x || self.v == x
    }
}

/// Simple signed graph on vertices `0..n` with edges sorted by `(u, v)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct SignedGraph {
    n: usize,
    edges: Vec<Edge>,
    marking: Option<Vec<i8>>,
    #[serde(skip)]
    adj: Vec<Vec<(usize, i8)>>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct DegreeProfile {
    pub d: Vec<usize>,
    pub d_plus: Vec<usize>,
    pub d_minus: Vec<usize>,
    pub sdeg: Vec<i64>,
}

/// Common total degree `gamma` and common signed degree `k`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct CoRegularity {
    pub gamma: usize,
    pub k: i64,
}

fn check_sign(s: i8, what: &str) -> Result<()> {
    if s == 1 || s == -1 {
        Ok(())
    } else {
        Err(Error::InvalidGraph(format!("{what} {s} is not +1 or -1")))
    }
}

impl SignedGraph {
    /// Builds a graph from `(u, v, sign)` triples in any order and orientation.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize, i8)>) -> Result<Self> {
        let mut es = Vec::new();
        for (a, b, s) in edges {
            if a >= n || b >= n {
                return Err(Error::InvalidGraph(format!("edge ({a},{b}) out of range for n = {n}")));
            }
            if a == b {
                return Err(Error::InvalidGraph(format!("loop at vertex {a}")));
            }
            check_sign(s, "edge sign")?;
            es.push(Edge {
                u: a.min(b),
                v: a.max(b),
                s,
            });
        }
        es.sort();
        if let Some(w) = es.windows(2).find(|w| (w[0].u, w[0].v) == (w[1].u, w[1].v)) {
            return Err(Error::InvalidGraph(format!("repeated edge ({},{})", w[0].u, w[0].v)));
        }
        let mut adj = vec![Vec::new(); n];
        for e in &es {
            adj[e.u].push((e.v, e.s));
            adj[e.v].push((e.u, e.s));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(SignedGraph {
            n,
            edges: es,
            marking: None,
            adj,
        })
    }

    /// All-positive graph on the given unsigned edges.
    pub fn unsigned(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        Self::new(n, edges.into_iter().map(|(u, v)| (u, v, 1)))
    }

    pub fn with_marking(mut self, marking: Vec<i8>) -> Result<Self> {
        if marking.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: marking.len(),
            });
        }
        for &m in &marking {
            check_sign(m, "marking entry")?;
        }
        self.marking = Some(marking);
        Ok(self)
    }

    pub fn without_marking(mut self) -> Self {
        self.marking = None;
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn marking(&self) -> Option<&[i8]> {
        self.marking.as_deref()
    }

    /// The explicit marking, or the canonical one when none is attached.
    pub fn marking_or_canonical(&self) -> Vec<i8> {
        self.marking
            .clone()
            .unwrap_or_else(|| self.canonical_marking())
    }

    /// Neighbours of `v` with the sign of the joining edge, sorted by vertex.
    pub fn neighbors(&self, v: usize) -> &[(usize, i8)] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search_by(|e| (e.u, e.v).cmp(&key)).ok()
    }

    pub fn edge_sign(&self, u: usize, v: usize) -> Option<i8> {
        self.edge_index(u, v).map(|i| self.edges[i].s)
    }

    /// Indices of edges incident to `v`, ascending.
    pub fn incident_edges(&self, v: usize) -> Vec<usize> {
        (0..self.edges.len()).filter(|&i| self.edges[i].has(v)).collect()
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let mut p = DegreeProfile {
            d: vec![0; self.n],
            d_plus: vec![0; self.n],
            d_minus: vec![0; self.n],
            sdeg: vec![0; self.n],
        };
        for e in &self.edges {
            for x in [e.u, e.v] {
                p.d[x] += 1;
                if e.s > 0 {
                    p.d_plus[x] += 1;
                } else {
                    p.d_minus[x] += 1;
                }
                p.sdeg[x] += e.s as i64;
            }
        }
        p
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Product of incident edge signs; isolated vertices get `+1`.
    pub fn canonical_marking(&self) -> Vec<i8> {
        let mut mu = vec![1i8; self.n];
        for e in &self.edges {
            mu[e.u] *= e.s;
            mu[e.v] *= e.s;
        }
        mu
    }

    /// `-1` exactly where negative degree exceeds positive degree.
    pub fn plurality_marking(&self) -> Vec<i8> {
        let p = self.degree_profile();
        (0..self.n)
            .map(|v| if p.d_plus[v] < p.d_minus[v] { -1 } else { 1 })
            .collect()
    }

    /// Potentials `pi` with `pi[u] * pi[v] = s` on every edge, if they exist.
    /// Each component's smallest vertex gets `+1`.
    pub fn balancing_potential(&self) -> Option<Vec<i8>> {
        let mut pi = vec![0i8; self.n];
        let mut queue = VecDeque::new();
        for root in 0..self.n {
            if pi[root] != 0 {
                continue;
            }
            pi[root] = 1;
            queue.push_back(root);
            while let Some(x) = queue.pop_front() {
                for &(y, s) in &self.adj[x] {
                    let want = pi[x] * s;
                    if pi[y] == 0 {
                        pi[y] = want;
                        queue.push_back(y);
                    } else if pi[y] != want {
                        return None;
                    }
                }
            }
        }
        Some(pi)
    }

    pub fn is_balanced(&self) -> bool {
        self.balancing_potential().is_some()
    }

    /// Multiplies every edge sign by the switching values of its endpoints.
    pub fn switch(&self, theta: &[i8]) -> Result<SignedGraph> {
        if theta.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: theta.len(),
            });
        }
        for &t in theta {
            check_sign(t, "switching entry")?;
        }
        let g = SignedGraph::new(
            self.n,
            self.edges.iter().map(|e| (e.u, e.v, theta[e.u] * e.s * theta[e.v])),
        )?;
        Ok(SignedGraph {
            marking: self.marking.clone(),
            ..g
        })
    }

    pub fn co_regularity(&self) -> Option<CoRegularity> {
        let p = self.degree_profile();
        let gamma = *p.d.first()?;
        let k = p.sdeg[0];
        (p.d.iter().all(|&d| d == gamma) && p.sdeg.iter().all(|&s| s == k))
            .then_some(CoRegularity { gamma, k })
    }

    /// Common degree when the underlying graph is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        if self.n == 0 {
            return None;
        }
        let d0 = self.degree(0);
        (1..self.n).all(|v| self.degree(v) == d0).then_some(d0)
    }

    /// The same underlying graph with every edge positive.
    pub fn underlying(&self) -> SignedGraph {
        let g = SignedGraph::new(self.n, self.edges.iter().map(|e| (e.u, e.v, 1)))
            .expect("same edge set");
        SignedGraph {
            marking: self.marking.clone(),
            ..g
        }
    }

    /// Applies a vertex relabelling `v -> perm[v]`, carrying signs and marking.
    pub fn relabel(&self, perm: &[usize]) -> SignedGraph {
        let g = SignedGraph::new(self.n, self.edges.iter().map(|e| (perm[e.u], perm[e.v], e.s)))
            .expect("bijective relabelling");
        let marking = self.marking.as_ref().map(|mk| {
            let mut out = vec![1; self.n];
            for (v, &x) in mk.iter().enumerate() {
                out[perm[v]] = x;
            }
            out
        });
        SignedGraph { marking, ..g }
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(x) = stack.pop() {
            for &(y, _) in &self.adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Serializes to the edge-list text format.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.m());
        for e in &self.edges {
            let _ = writeln!(out, "{} {} {}", e.u, e.v, sign_char(e.s));
        }
        if let Some(mk) = &self.marking {
            let tokens: Vec<String> = mk.iter().map(|&s| sign_char(s).to_string()).collect();
            let _ = writeln!(out, "marking {}", tokens.join(" "));
        }
        out
    }

    /// Parses the edge-list text format: a header `n m`, then `m` lines
    /// `u v s` with `s` in `{+, -}`, then an optional `marking` line.
    /// Blank lines and lines starting with `#` are ignored.
    pub fn parse_edge_list(text: &str) -> Result<SignedGraph> {
        let perr = |line: usize, message: String| Error::Parse { line, message };
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (hl, header) = lines.next().ok_or_else(|| perr(1, "missing header".into()))?;
        let head: Vec<&str> = header.split_whitespace().collect();
        if head.len() != 2 {
            return Err(perr(hl, format!("expected `n m`, found `{header}`")));
        }
        let parse_usize = |line: usize, tok: &str| {
            tok.parse::<usize>()
                .map_err(|_| perr(line, format!("`{tok}` is not a non-negative integer")))
        };
        let n = parse_usize(hl, head[0])?;
        let m = parse_usize(hl, head[1])?;
        let mut edges = Vec::with_capacity(m);
        let mut marking = None;
        for (ln, line) in lines {
            let toks: Vec<&str> = line.split_whitespace().collect();
            if toks[0] == "marking" {
                if marking.is_some() {
                    return Err(perr(ln, "second marking line".into()));
                }
                let mk = toks[1..]
                    .iter()
                    .map(|t| parse_sign(t).ok_or_else(|| perr(ln, format!("bad marking token `{t}`"))))
                    .collect::<Result<Vec<i8>>>()?;
                if mk.len() != n {
                    return Err(perr(ln, format!("marking has {} entries, expected {n}", mk.len())));
                }
                marking = Some(mk);
                continue;
            }
            if marking.is_some() {
                return Err(perr(ln, "edge after marking line".into()));
            }
            if toks.len() != 3 {
                return Err(perr(ln, format!("expected `u v s`, found `{line}`")));
            }
            let u = parse_usize(ln, toks[0])?;
            let v = parse_usize(ln, toks[1])?;
            let s = parse_sign(toks[2]).ok_or_else(|| perr(ln, format!("bad sign token `{}`", toks[2])))?;
            if u >= n || v >= n || u == v {
                return Err(perr(ln, format!("invalid edge ({u},{v}) for n = {n}")));
            }
            edges.push((u, v, s));
        }
        if edges.len() != m {
            return Err(perr(hl, format!("header declares {m} edges, found {}", edges.len())));
        }
        let g = SignedGraph::new(n, edges).map_err(|e| perr(hl, e.to_string()))?;
        match marking {
            Some(mk) => g.with_marking(mk),
            None => Ok(g),
        }
    }
}

fn sign_char(s: i8) -> char {
    if s > 0 {
        '+'
    } else {
        '-'
    }
}

fn parse_sign(tok: &str) -> Option<i8> {
    match tok {
        "+" | "+1" => Some(1),
        "-" | "-1" => Some(-1),
        _ => None,
    }
}

/// Small named families used throughout tests and fixtures.
pub mod families {
    use super::SignedGraph;

    pub fn empty(n: usize) -> SignedGraph {
        SignedGraph::new(n, []).expect("no edges")
    }

    pub fn path(n: usize) -> SignedGraph {
        SignedGraph::unsigned(n, (1..n).map(|i| (i - 1, i))).expect("path")
    }

    pub fn cycle(n: usize) -> SignedGraph {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        SignedGraph::unsigned(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle")
    }

    pub fn complete(n: usize) -> SignedGraph {
        SignedGraph::unsigned(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)))).expect("complete")
    }

    /// Star with centre 0 and leaves `1..=leaves`, edge `i` signed `signs[i]`.
    pub fn star(signs: &[i8]) -> SignedGraph {
        SignedGraph::new(signs.len() + 1, signs.iter().enumerate().map(|(i, &s)| (0, i + 1, s)))
            .expect("star")
    }

    pub fn complete_bipartite(a: usize, b: usize) -> SignedGraph {
        SignedGraph::unsigned(a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))))
            .expect("complete bipartite")
    }
}
