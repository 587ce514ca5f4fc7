//! k-uniform hypergraphs stored as sorted edge lists with derived incidence.
//!
//! Vertices are contiguous integers `0..n`. Every edge is kept as a sorted
//! k-tuple of distinct vertices and the edge list itself is sorted
//! lexicographically, so two hypergraphs over the same labelling are equal
//! iff their canonical forms are equal.

use std::collections::{HashSet, VecDeque};
use thiserror::Error;

mod cycles;
mod format;
mod iso;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HypergraphError {
    #[error("edge {index}: expected {expected} distinct vertices, got {got}")]
    EdgeWrongSize {
        index: usize,
        expected: usize,
        got: usize,
    },
    #[error("edge {index}: vertex {vertex} out of range 0..{n}")]
    VertexOutOfRange { index: usize, vertex: usize, n: usize },
    #[error("edge {index} duplicates an earlier edge")]
    DuplicateEdge { index: usize },
    #[error("invalid hypergraph parameters: {0}")]
    InvalidParams(String),
    #[error("hypergraph is disconnected")]
    Disconnected,
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
}

/// Immutable k-uniform hypergraph in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, serde::Serialize)]
pub struct UniformHypergraph {
    k: usize,
    n: usize,
    edges: Vec<Vec<usize>>,
    #[serde(skip)]
    incidence: Vec<Vec<usize>>,
}

/// An alternating vertex/edge walk certificate for `shortest_path`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathWitness {
    /// v_0, ..., v_s
    pub vertices: Vec<usize>,
    /// e_1, ..., e_s with e_i containing v_{i-1} and v_i
    pub edge_indices: Vec<usize>,
}

impl PathWitness {
    pub fn length(&self) -> usize {
        self.edge_indices.len()
    }
}

/// Output of [`UniformHypergraph::classify`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Classification {
    pub is_hypertree: bool,
    /// Independent cycle count (cycle rank of the bipartite incidence graph).
    pub cycle_count: usize,
    /// Connected and every pair of cycles shares at most one vertex.
    pub is_hypercactus: bool,
}

impl UniformHypergraph {
    /// Validates and canonicalizes `edges` into a hypergraph.
    pub fn build(
        k: usize,
        n: usize,
        edges: Vec<Vec<usize>>,
    ) -> Result<Self, HypergraphError> {
        if k < 2 {
            return Err(HypergraphError::InvalidParams(format!(
                "edge cardinality k must be >= 2, got {k}"
            )));
        }
        if n < k {
            return Err(HypergraphError::InvalidParams(format!(
                "vertex count n must be >= k, got n={n}, k={k}"
            )));
        }
        let mut canonical: Vec<Vec<usize>> = Vec::with_capacity(edges.len());
        let mut seen: HashSet<Vec<usize>> = HashSet::with_capacity(edges.len());
        for (index, edge) in edges.into_iter().enumerate() {
            let mut e = edge;
            e.sort_unstable();
            e.dedup();
            if e.len() != k {
                return Err(HypergraphError::EdgeWrongSize {
                    index,
                    expected: k,
                    got: e.len(),
                });
            }
            if let Some(&vertex) = e.iter().find(|&&v| v >= n) {
                return Err(HypergraphError::VertexOutOfRange { index, vertex, n });
            }
            if !seen.insert(e.clone()) {
                return Err(HypergraphError::DuplicateEdge { index });
            }
            canonical.push(e);
        }
        canonical.sort_unstable();
        let mut incidence = vec![Vec::new(); n];
        for (i, e) in canonical.iter().enumerate() {
            for &v in e {
                incidence[v].push(i);
            }
        }
        Ok(Self {
            k,
            n,
            edges: canonical,
            incidence,
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> &[usize] {
        &self.edges[i]
    }

    /// Indices of the edges containing `v`.
    pub fn incident_edges(&self, v: usize) -> &[usize] {
        &self.incidence[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.incidence[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.incidence.iter().map(Vec::len).collect()
    }

    /// Largest degree.
    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Second-largest degree counted with multiplicity: equals the maximum
    /// degree when at least two vertices attain it.
    pub fn second_max_degree(&self) -> usize {
        let mut degs = self.degrees();
        degs.sort_unstable_by(|a, b| b.cmp(a));
        degs[1]
    }

    pub fn is_regular(&self) -> bool {
        let d = self.degree(0);
        (1..self.n).all(|v| self.degree(v) == d)
    }

    /// True iff `e` (any order) is an edge.
    pub fn has_edge(&self, e: &[usize]) -> bool {
        let mut s = e.to_vec();
        s.sort_unstable();
        self.edges.binary_search(&s).is_ok()
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for &ei in &self.incidence[v] {
                for &u in &self.edges[ei] {
                    if !seen[u] {
                        seen[u] = true;
                        count += 1;
                        queue.push_back(u);
                    }
                }
            }
        }
        count == self.n
    }

    /// Shortest alternating path from `u` to `v`.
    pub fn shortest_path(&self, u: usize, v: usize) -> Result<PathWitness, HypergraphError> {
        assert!(u < self.n && v < self.n, "vertex out of range");
        if u == v {
            return Ok(PathWitness {
                vertices: vec![u],
                edge_indices: vec![],
            });
        }
        let mut prev: Vec<Option<(usize, usize)>> = vec![None; self.n]; // (prev vertex, via edge)
        let mut seen = vec![false; self.n];
        seen[u] = true;
        let mut queue = VecDeque::from([u]);
        while let Some(w) = queue.pop_front() {
            for &ei in &self.incidence[w] {
                for &x in &self.edges[ei] {
                    if !seen[x] {
                        seen[x] = true;
                        prev[x] = Some((w, ei));
                        if x == v {
                            let mut vertices = vec![v];
                            let mut edge_indices = Vec::new();
                            let mut cur = v;
                            while let Some((p, e)) = prev[cur] {
                                edge_indices.push(e);
                                vertices.push(p);
                                cur = p;
                            }
                            vertices.reverse();
                            edge_indices.reverse();
                            return Ok(PathWitness {
                                vertices,
                                edge_indices,
                            });
                        }
                        queue.push_back(x);
                    }
                }
            }
        }
        Err(HypergraphError::Disconnected)
    }

    pub fn distance(&self, u: usize, v: usize) -> Result<usize, HypergraphError> {
        Ok(self.shortest_path(u, v)?.length())
    }

    /// Maximum distance over all vertex pairs.
    pub fn diameter(&self) -> Result<usize, HypergraphError> {
        if !self.is_connected() {
            return Err(HypergraphError::Disconnected);
        }
        let mut best = 0;
        for u in 0..self.n {
            let dist = self.bfs_distances(u);
            for d in dist {
                best = best.max(d.expect("connected"));
            }
        }
        Ok(best)
    }

    fn bfs_distances(&self, u: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[u] = Some(0);
        let mut queue = VecDeque::from([u]);
        while let Some(w) = queue.pop_front() {
            let dw = dist[w].unwrap();
            for &ei in &self.incidence[w] {
                for &x in &self.edges[ei] {
                    if dist[x].is_none() {
                        dist[x] = Some(dw + 1);
                        queue.push_back(x);
                    }
                }
            }
        }
        dist
    }

    /// Connected components as (original vertex ids, relabeled subgraph).
    /// Edgeless components (isolated vertices, only possible in inputs with
    /// n > k and few edges) carry `None`.
    pub fn components(&self) -> Vec<(Vec<usize>, Option<UniformHypergraph>)> {
        let mut comp = vec![usize::MAX; self.n];
        let mut count = 0;
        for start in 0..self.n {
            if comp[start] != usize::MAX {
                continue;
            }
            comp[start] = count;
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &ei in &self.incidence[v] {
                    for &u in &self.edges[ei] {
                        if comp[u] == usize::MAX {
                            comp[u] = count;
                            queue.push_back(u);
                        }
                    }
                }
            }
            count += 1;
        }
        let mut out = Vec::with_capacity(count);
        for c in 0..count {
            let vertices: Vec<usize> = (0..self.n).filter(|&v| comp[v] == c).collect();
            let local: std::collections::HashMap<usize, usize> = vertices
                .iter()
                .enumerate()
                .map(|(i, &v)| (v, i))
                .collect();
            let edges: Vec<Vec<usize>> = self
                .edges
                .iter()
                .filter(|e| comp[e[0]] == c)
                .map(|e| e.iter().map(|v| local[v]).collect())
                .collect();
            let sub = if edges.is_empty() {
                None
            } else {
                Some(
                    UniformHypergraph::build(self.k, vertices.len(), edges)
                        .expect("component of a valid hypergraph"),
                )
            };
            out.push((vertices, sub));
        }
        out
    }

    /// Number of pendant edges: edges with exactly one vertex of degree >= 2.
    pub fn pendant_edge_count(&self) -> usize {
        self.edges
            .iter()
            .filter(|e| e.iter().filter(|&&v| self.degree(v) >= 2).count() == 1)
            .count()
    }

    /// Relabels vertices by `perm` (a permutation of 0..n; `perm[v]` is the
    /// new label of `v`) and re-canonicalizes.
    pub fn relabel(&self, perm: &[usize]) -> Result<UniformHypergraph, HypergraphError> {
        if perm.len() != self.n {
            return Err(HypergraphError::InvalidParams(
                "permutation length mismatch".into(),
            ));
        }
        let edges = self
            .edges
            .iter()
            .map(|e| e.iter().map(|&v| perm[v]).collect())
            .collect();
        UniformHypergraph::build(self.k, self.n, edges)
    }
}
