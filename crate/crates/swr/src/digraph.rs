//! Simple digraphs (no loops, no multiple edges) and the structural
//! constructions used throughout: reverse, line digraph, blow-ups, girth,
//! strong connectivity.
//!
//! Two text formats are supported:
//!
//! * matrix format: first line `n`, then `n` lines of `n` characters from
//!   {0,1} (row u, column v is 1 iff the edge uv exists);
//! * edge-list format: first line `n`, then one line `u v` per edge.

use num_bigint::BigInt;

use crate::algebra::IntMatrix;
use crate::error::{Error, Result};

/// Immutable simple digraph on vertices 0..n.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    n: usize,
    adj: Vec<bool>, // row-major n*n
}

/// Degree information: `degree` is set iff every in- and outdegree agrees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularityInfo {
    pub is_regular: bool,
    pub degree: Option<usize>,
}

impl Digraph {
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Digraph> {
        let mut adj = vec![false; n * n];
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange(u, n));
            }
            if v >= n {
                return Err(Error::VertexOutOfRange(v, n));
            }
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            if adj[u * n + v] {
                return Err(Error::DuplicateEdge(u, v));
            }
            adj[u * n + v] = true;
        }
        Ok(Digraph { n, adj })
    }

    /// Build from a 0/1 adjacency predicate; the diagonal must be empty.
    pub fn from_adjacency(n: usize, mut f: impl FnMut(usize, usize) -> bool) -> Result<Digraph> {
        let mut adj = vec![false; n * n];
        for u in 0..n {
            for v in 0..n {
                if f(u, v) {
                    if u == v {
                        return Err(Error::LoopEdge(u));
                    }
                    adj[u * n + v] = true;
                }
            }
        }
        Ok(Digraph { n, adj })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.n + v]
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = vec![];
        for u in 0..self.n {
            for v in 0..self.n {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().filter(|&&b| b).count()
    }

    pub fn out_degree(&self, u: usize) -> usize {
        (0..self.n).filter(|&v| self.has_edge(u, v)).count()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        (0..self.n).filter(|&u| self.has_edge(u, v)).count()
    }

    pub fn adjacency_matrix(&self) -> IntMatrix {
        IntMatrix::from_fn(self.n, self.n, |u, v| {
            BigInt::from(self.has_edge(u, v) as i64)
        })
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * self.n.saturating_sub(1)
    }

    pub fn regularity(&self) -> RegularityInfo {
        if self.n == 0 {
            return RegularityInfo { is_regular: true, degree: Some(0) };
        }
        let k = self.out_degree(0);
        for u in 0..self.n {
            if self.out_degree(u) != k || self.in_degree(u) != k {
                return RegularityInfo { is_regular: false, degree: None };
            }
        }
        RegularityInfo { is_regular: true, degree: Some(k) }
    }

    fn reach_from(&self, start: usize, reversed: bool) -> Vec<bool> {
        let mut seen = vec![false; self.n];
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(u) = stack.pop() {
            for v in 0..self.n {
                let e = if reversed { self.has_edge(v, u) } else { self.has_edge(u, v) };
                if e && !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen
    }

    /// True iff every vertex reaches every other (double DFS from vertex 0).
    pub fn is_strongly_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        self.reach_from(0, false).iter().all(|&b| b)
            && self.reach_from(0, true).iter().all(|&b| b)
    }

    /// Length of the shortest directed cycle; `None` if acyclic.
    /// Returns 2 as soon as any bidirected edge exists.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for s in 0..self.n {
            // BFS from s; cycle through s closes at an in-neighbor of s
            let mut dist = vec![usize::MAX; self.n];
            dist[s] = 0;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for v in 0..self.n {
                    if self.has_edge(u, v) && dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        queue.push_back(v);
                    }
                }
            }
            for u in 0..self.n {
                if self.has_edge(u, s) && dist[u] != usize::MAX {
                    let cyc = dist[u] + 1;
                    if cyc >= 2 && best.is_none_or(|b| cyc < b) {
                        best = Some(cyc);
                    }
                }
            }
            if best == Some(2) {
                break;
            }
        }
        best
    }

    /// Digraph with the transposed adjacency matrix.
    pub fn reverse(&self) -> Digraph {
        Digraph::from_adjacency(self.n, |u, v| self.has_edge(v, u)).expect("transpose is simple")
    }

    /// Line digraph: one vertex per edge (lexicographic order); edge uv is
    /// adjacent to edge wz iff v = w.
    pub fn line_digraph(&self) -> Digraph {
        let edges = self.edges();
        let m = edges.len();
        Digraph::from_adjacency(m, |i, j| i != j && edges[i].1 == edges[j].0)
            .expect("line digraph is simple")
    }

    /// Blow-up with adjacency A tensor J_q: every vertex becomes q copies.
    pub fn tensor_allones(&self, q: usize) -> Result<Digraph> {
        if q == 0 {
            return Err(Error::InvalidParameter("blow-up factor q must be >= 1".into()));
        }
        Digraph::from_adjacency(self.n * q, |u, v| self.has_edge(u / q, v / q))
    }

    /// Digraph with adjacency J_{qn} - I - A tensor J_q.
    pub fn complement_blowup(&self, q: usize) -> Result<Digraph> {
        if q == 0 {
            return Err(Error::InvalidParameter("blow-up factor q must be >= 1".into()));
        }
        let nq = self.n * q;
        Digraph::from_adjacency(nq, |u, v| u != v && !self.has_edge(u / q, v / q))
    }

    pub fn to_matrix_string(&self) -> String {
        let mut s = format!("{}\n", self.n);
        for u in 0..self.n {
            for v in 0..self.n {
                s.push(if self.has_edge(u, v) { '1' } else { '0' });
            }
            s.push('\n');
        }
        s
    }

    pub fn to_edge_list_string(&self) -> String {
        let mut s = format!("{}\n", self.n);
        for (u, v) in self.edges() {
            s.push_str(&format!("{} {}\n", u, v));
        }
        s
    }

    pub fn parse_matrix(text: &str) -> Result<Digraph> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let n: usize = lines
            .next()
            .ok_or_else(|| Error::Parse("empty input".into()))?
            .trim()
            .parse()
            .map_err(|e| Error::Parse(format!("bad vertex count: {e}")))?;
        let mut adj = vec![false; n * n];
        for u in 0..n {
            let line = lines
                .next()
                .ok_or_else(|| Error::Parse(format!("missing row {u}")))?
                .trim();
            if line.len() != n {
                return Err(Error::Parse(format!(
                    "row {u} has {} characters, expected {n}",
                    line.len()
                )));
            }
            for (v, ch) in line.chars().enumerate() {
                match ch {
                    '0' => {}
                    '1' => {
                        if u == v {
                            return Err(Error::LoopEdge(u));
                        }
                        adj[u * n + v] = true;
                    }
                    _ => return Err(Error::Parse(format!("bad character {ch:?} in row {u}"))),
                }
            }
        }
        Ok(Digraph { n, adj })
    }

    pub fn parse_edge_list(text: &str) -> Result<Digraph> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let n: usize = lines
            .next()
            .ok_or_else(|| Error::Parse("empty input".into()))?
            .trim()
            .parse()
            .map_err(|e| Error::Parse(format!("bad vertex count: {e}")))?;
        let mut edges = vec![];
        for line in lines {
            let mut it = line.split_whitespace();
            let u: usize = it
                .next()
                .ok_or_else(|| Error::Parse(format!("bad edge line {line:?}")))?
                .parse()
                .map_err(|e| Error::Parse(format!("bad edge line {line:?}: {e}")))?;
            let v: usize = it
                .next()
                .ok_or_else(|| Error::Parse(format!("bad edge line {line:?}")))?
                .parse()
                .map_err(|e| Error::Parse(format!("bad edge line {line:?}: {e}")))?;
            edges.push((u, v));
        }
        Digraph::from_edges(n, &edges)
    }
}

impl std::fmt::Debug for Digraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Digraph(n={}, edges={:?})", self.n, self.edges())
    }
}
