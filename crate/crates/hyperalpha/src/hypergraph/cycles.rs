//! Cycle structure: independent cycle count, simple cycle enumeration, and
//! hypertree / hypercactus classification.
//!
//! A cycle is an alternating vertex/edge walk of length >= 2 with distinct
//! edges and distinct vertices except for the matching endpoints. The
//! independent cycle count is the cycle rank of the bipartite incidence
//! graph, which for a connected hypergraph is `km - n - m + 1`.

use std::collections::BTreeSet;

use super::{Classification, HypergraphError, UniformHypergraph};

impl UniformHypergraph {
    /// Cycle rank of the bipartite incidence graph for a connected hypergraph.
    fn cycle_rank(&self) -> usize {
        self.k * self.m() + 1 - self.n - self.m()
    }

    /// Enumerates simple cycles as (sorted spine vertices, sorted edge
    /// indices). Intended for desk-scale instances.
    pub(crate) fn simple_cycles(&self) -> Vec<(Vec<usize>, Vec<usize>)> {
        let mut found: BTreeSet<(Vec<usize>, Vec<usize>)> = BTreeSet::new();
        let mut used_edge = vec![false; self.m()];
        let mut on_spine = vec![false; self.n];
        let mut spine = Vec::new();
        let mut edges = Vec::new();
        for start in 0..self.n {
            on_spine[start] = true;
            spine.push(start);
            self.cycle_dfs(
                start,
                start,
                &mut used_edge,
                &mut on_spine,
                &mut spine,
                &mut edges,
                &mut found,
            );
            on_spine[start] = false;
            spine.pop();
        }
        found.into_iter().collect()
    }

    #[allow(clippy::too_many_arguments)]
    fn cycle_dfs(
        &self,
        start: usize,
        current: usize,
        used_edge: &mut Vec<bool>,
        on_spine: &mut Vec<bool>,
        spine: &mut Vec<usize>,
        edges: &mut Vec<usize>,
        found: &mut BTreeSet<(Vec<usize>, Vec<usize>)>,
    ) {
        for &ei in &self.incidence[current] {
            if used_edge[ei] {
                continue;
            }
            used_edge[ei] = true;
            edges.push(ei);
            for &w in &self.edges[ei] {
                if w == current {
                    continue;
                }
                if w == start {
                    if edges.len() >= 2 {
                        let mut s = spine.clone();
                        s.sort_unstable();
                        let mut e = edges.clone();
                        e.sort_unstable();
                        found.insert((s, e));
                    }
                } else if w > start && !on_spine[w] {
                    // Canonicalize by starting every cycle at its smallest
                    // spine vertex.
                    on_spine[w] = true;
                    spine.push(w);
                    self.cycle_dfs(start, w, used_edge, on_spine, spine, edges, found);
                    on_spine[w] = false;
                    spine.pop();
                }
            }
            edges.pop();
            used_edge[ei] = false;
        }
    }

    /// Classifies a connected hypergraph as hypertree / hypercactus and
    /// reports its independent cycle count.
    pub fn classify(&self) -> Result<Classification, HypergraphError> {
        if !self.is_connected() {
            return Err(HypergraphError::Disconnected);
        }
        let rank = self.cycle_rank();
        if rank == 0 {
            return Ok(Classification {
                is_hypertree: true,
                cycle_count: 0,
                is_hypercactus: true,
            });
        }
        let cycles = self.simple_cycles();
        // The vertex set of a cycle viewed as a hypergraph: all vertices of
        // its edges, not only the spine.
        let vertex_sets: Vec<BTreeSet<usize>> = cycles
            .iter()
            .map(|(_, es)| {
                es.iter()
                    .flat_map(|&e| self.edges[e].iter().copied())
                    .collect()
            })
            .collect();
        let mut is_hypercactus = true;
        'outer: for i in 0..vertex_sets.len() {
            for j in i + 1..vertex_sets.len() {
                if vertex_sets[i].intersection(&vertex_sets[j]).count() > 1 {
                    is_hypercactus = false;
                    break 'outer;
                }
            }
        }
        Ok(Classification {
            is_hypertree: false,
            cycle_count: rank,
            is_hypercactus,
        })
    }
}
