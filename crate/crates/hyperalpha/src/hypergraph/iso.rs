//! Hypergraph isomorphism by edge-at-a-time backtracking with degree
//! invariants. Degree-1 vertices inside an edge are interchangeable, so only
//! one representative assignment is tried for them; this keeps the search
//! fast on hypertrees, where most vertices have degree 1. Instances here are
//! desk scale (tens of vertices), so no canonical labeling is attempted.

use super::UniformHypergraph;

impl UniformHypergraph {
    pub fn isomorphic(&self, other: &UniformHypergraph) -> bool {
        if self.k != other.k || self.n != other.n || self.m() != other.m() {
            return false;
        }
        if self.edges == other.edges {
            return true;
        }
        let mut dg = self.degrees();
        let mut dh = other.degrees();
        dg.sort_unstable();
        dh.sort_unstable();
        if dg != dh {
            return false;
        }
        let mut pg = edge_profiles(self);
        let mut ph = edge_profiles(other);
        let mut spg = pg.clone();
        let mut sph = ph.clone();
        spg.sort_unstable();
        sph.sort_unstable();
        if spg != sph {
            return false;
        }
        if self.m() == 0 {
            return true; // equal n, no edges
        }
        let order = edge_search_order(self);
        let mut state = Matcher {
            g: self,
            h: other,
            g_profiles: std::mem::take(&mut pg),
            h_profiles: std::mem::take(&mut ph),
            order,
            vmap: vec![usize::MAX; self.n],
            h_vertex_used: vec![false; self.n],
            h_edge_used: vec![false; self.m()],
        };
        state.match_edge(0)
    }
}

/// Sorted degree multiset of each edge; a cheap per-edge invariant.
fn edge_profiles(g: &UniformHypergraph) -> Vec<Vec<usize>> {
    g.edges()
        .iter()
        .map(|e| {
            let mut p: Vec<usize> = e.iter().map(|&v| g.degree(v)).collect();
            p.sort_unstable();
            p
        })
        .collect()
}

/// Edge processing order: breadth-first over edge adjacency so that each
/// edge (within a component) shares a vertex with an earlier one.
fn edge_search_order(g: &UniformHypergraph) -> Vec<usize> {
    let m = g.m();
    let mut order = Vec::with_capacity(m);
    let mut seen = vec![false; m];
    for start in 0..m {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(e) = queue.pop_front() {
            order.push(e);
            for &v in g.edge(e) {
                for &f in g.incident_edges(v) {
                    if !seen[f] {
                        seen[f] = true;
                        queue.push_back(f);
                    }
                }
            }
        }
    }
    order
}

struct Matcher<'a> {
    g: &'a UniformHypergraph,
    h: &'a UniformHypergraph,
    g_profiles: Vec<Vec<usize>>,
    h_profiles: Vec<Vec<usize>>,
    order: Vec<usize>,
    vmap: Vec<usize>, // g vertex -> h vertex, usize::MAX if unassigned
    h_vertex_used: Vec<bool>,
    h_edge_used: Vec<bool>,
}

impl Matcher<'_> {
    fn match_edge(&mut self, idx: usize) -> bool {
        if idx == self.order.len() {
            return true;
        }
        let ge = self.order[idx];
        for he in 0..self.h.m() {
            if self.h_edge_used[he] || self.g_profiles[ge] != self.h_profiles[he] {
                continue;
            }
            self.h_edge_used[he] = true;
            if self.assign(idx, ge, he, 0, &mut Vec::new()) {
                return true;
            }
            self.h_edge_used[he] = false;
        }
        false
    }

    /// Extends the vertex map over the `pos`-th vertex of g-edge `ge` into
    /// h-edge `he`; `taken` tracks h vertices consumed within this edge.
    fn assign(
        &mut self,
        idx: usize,
        ge: usize,
        he: usize,
        pos: usize,
        taken: &mut Vec<usize>,
    ) -> bool {
        if pos == self.g.k() {
            return self.match_edge(idx + 1);
        }
        let u = self.g.edge(ge)[pos];
        if self.vmap[u] != usize::MAX {
            let w = self.vmap[u];
            if self.h.edge(he).contains(&w) && !taken.contains(&w) {
                taken.push(w);
                let ok = self.assign(idx, ge, he, pos + 1, taken);
                taken.pop();
                return ok;
            }
            return false;
        }
        let du = self.g.degree(u);
        let mut tried_leaf = false;
        for i in 0..self.h.k() {
            let w = self.h.edge(he)[i];
            if self.h_vertex_used[w] || taken.contains(&w) || self.h.degree(w) != du {
                continue;
            }
            if du == 1 {
                // all unused degree-1 vertices of this h-edge are equivalent
                if tried_leaf {
                    continue;
                }
                tried_leaf = true;
            }
            self.vmap[u] = w;
            self.h_vertex_used[w] = true;
            taken.push(w);
            if self.assign(idx, ge, he, pos + 1, taken) {
                return true;
            }
            taken.pop();
            self.h_vertex_used[w] = false;
            self.vmap[u] = usize::MAX;
        }
        false
    }
}
