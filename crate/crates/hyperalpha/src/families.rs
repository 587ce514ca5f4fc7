//! Deterministic generators for the named extremal families: hyperstars,
//! loose paths, the hub hypercacti H_{m,r,k}, the diameter brooms S_{m,d,k},
//! and the balanced spiders T_{m,t,k}.
//!
//! Labeling is reproducible: the hub/center is vertex 0 and fresh vertices
//! are allocated in generation order, so outputs are byte-identical across
//! runs.

use crate::hypergraph::UniformHypergraph;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("invalid family parameters: {0}")]
    InvalidParams(String),
}

/// A named family member; parsed by the CLI and used as the expected
/// extremal witness by the enumeration harness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum FamilySpec {
    Star { m: usize, k: usize },
    LoosePath { m: usize, k: usize },
    CactusH { m: usize, r: usize, k: usize },
    BroomS { m: usize, d: usize, k: usize },
    SpiderT { m: usize, t: usize, k: usize },
}

impl FamilySpec {
    pub fn build(&self) -> Result<UniformHypergraph, FamilyError> {
        match *self {
            FamilySpec::Star { m, k } => hyperstar(m, k),
            FamilySpec::LoosePath { m, k } => loose_path(m, k),
            FamilySpec::CactusH { m, r, k } => cactus_h(m, r, k),
            FamilySpec::BroomS { m, d, k } => broom_s(m, d, k),
            FamilySpec::SpiderT { m, t, k } => spider_t(m, t, k),
        }
    }
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), FamilyError> {
    if cond {
        Ok(())
    } else {
        Err(FamilyError::InvalidParams(msg()))
    }
}

/// S_{m,k}: m edges sharing the center vertex 0.
pub fn hyperstar(m: usize, k: usize) -> Result<UniformHypergraph, FamilyError> {
    check(m >= 1 && k >= 2, || format!("hyperstar needs m >= 1, k >= 2 (got m={m}, k={k})"))?;
    let n = 1 + (k - 1) * m;
    let edges = (0..m)
        .map(|i| {
            let mut e = vec![0];
            e.extend(1 + i * (k - 1)..1 + (i + 1) * (k - 1));
            e
        })
        .collect();
    Ok(UniformHypergraph::build(k, n, edges).expect("star construction"))
}

/// P_{m,k}: consecutive edges share exactly one vertex; the m-1 link
/// vertices have degree 2.
pub fn loose_path(m: usize, k: usize) -> Result<UniformHypergraph, FamilyError> {
    check(m >= 1 && k >= 2, || format!("loose path needs m >= 1, k >= 2 (got m={m}, k={k})"))?;
    let n = 1 + (k - 1) * m;
    let mut edges = Vec::with_capacity(m);
    for i in 0..m {
        // edge i spans vertices i(k-1) ..= (i+1)(k-1)
        edges.push((i * (k - 1)..=(i + 1) * (k - 1)).collect());
    }
    Ok(UniformHypergraph::build(k, n, edges).expect("path construction"))
}

/// H_{m,r,k}: r cycles of length 2 and m-2r pendant edges through the hub
/// vertex 0. Each 2-cycle is a pair of edges sharing exactly the hub and one
/// auxiliary vertex, so the cycle count is exactly r.
pub fn cactus_h(m: usize, r: usize, k: usize) -> Result<UniformHypergraph, FamilyError> {
    check(m >= 1 && k >= 2, || format!("cactus needs m >= 1, k >= 2 (got m={m}, k={k})"))?;
    check(2 * r <= m, || format!("cactus needs r <= m/2 (got m={m}, r={r})"))?;
    check(r == 0 || k >= 3, || {
        format!("2-cycles require k >= 3 in simple hypergraphs (got k={k}, r={r})")
    })?;
    let n = 1 + r * (2 * k - 3) + (m - 2 * r) * (k - 1);
    let mut edges = Vec::with_capacity(m);
    let mut next = 1;
    for _ in 0..r {
        let shared = next;
        next += 1;
        for _ in 0..2 {
            let mut e = vec![0, shared];
            e.extend(next..next + (k - 2));
            next += k - 2;
            edges.push(e);
        }
    }
    for _ in 0..m - 2 * r {
        let mut e = vec![0];
        e.extend(next..next + (k - 1));
        next += k - 1;
        edges.push(e);
    }
    debug_assert_eq!(next, n);
    Ok(UniformHypergraph::build(k, n, edges).expect("cactus construction"))
}

/// S_{m,d,k}: the loose path P_{d,k} with m-d pendant edges attached at
/// v_{floor(d/2)}; a hypertree with diameter exactly d.
pub fn broom_s(m: usize, d: usize, k: usize) -> Result<UniformHypergraph, FamilyError> {
    check(2 <= d && d <= m, || format!("broom needs 2 <= d <= m (got m={m}, d={d})"))?;
    check(k >= 2, || format!("broom needs k >= 2 (got k={k})"))?;
    let path = loose_path(d, k)?;
    let hub = (d / 2) * (k - 1); // v_{floor(d/2)} in the path labeling
    let mut edges: Vec<Vec<usize>> = path.edges().to_vec();
    let mut next = path.n();
    for _ in 0..m - d {
        let mut e = vec![hub];
        e.extend(next..next + (k - 1));
        next += k - 1;
        edges.push(e);
    }
    Ok(UniformHypergraph::build(k, next, edges).expect("broom construction"))
}

/// T_{m,t,k}: t pendant paths of almost equal lengths at the center vertex
/// 0 (the longer legs, of length floor(m/t)+1, come first).
pub fn spider_t(m: usize, t: usize, k: usize) -> Result<UniformHypergraph, FamilyError> {
    check(2 <= t && t <= m, || format!("spider needs 2 <= t <= m (got m={m}, t={t})"))?;
    check(k >= 2, || format!("spider needs k >= 2 (got k={k})"))?;
    let base = m / t;
    let long = m - t * base;
    let mut edges = Vec::with_capacity(m);
    let mut next = 1;
    for leg in 0..t {
        let len = if leg < long { base + 1 } else { base };
        let mut attach = 0;
        for _ in 0..len {
            let mut e = vec![attach];
            e.extend(next..next + (k - 1));
            attach = next + k - 2;
            next += k - 1;
            edges.push(e);
        }
    }
    Ok(UniformHypergraph::build(k, next, edges).expect("spider construction"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_counts() {
        let s = hyperstar(4, 3).unwrap();
        assert_eq!(s.n(), 9);
        assert_eq!(s.degree(0), 4);
        assert_eq!(s.degrees().iter().filter(|&&d| d == 1).count(), 8);
        assert!(hyperstar(1, 3).unwrap().isomorphic(
            &UniformHypergraph::build(3, 3, vec![vec![0, 1, 2]]).unwrap()
        ));
        // k=2 star with 2 edges is the ordinary 3-vertex path
        assert!(hyperstar(2, 2).unwrap().isomorphic(&loose_path(2, 2).unwrap()));
    }

    #[test]
    fn path_counts() {
        let p = loose_path(3, 3).unwrap();
        assert_eq!(p.n(), 7);
        assert_eq!(p.degrees().iter().filter(|&&d| d == 2).count(), 2);
        assert_eq!(p.diameter().unwrap(), 3);
        assert_eq!(loose_path(1, 4).unwrap().m(), 1);
        assert!(loose_path(2, 3).unwrap().isomorphic(&hyperstar(2, 3).unwrap()));
    }

    #[test]
    fn cactus_counts() {
        let h = cactus_h(2, 1, 3).unwrap();
        assert_eq!(h.n(), 4);
        let mut degs = h.degrees();
        degs.sort_unstable();
        assert_eq!(degs, vec![1, 1, 2, 2]);

        let h4 = cactus_h(4, 1, 3).unwrap();
        assert_eq!(h4.n(), 8);
        assert_eq!(h4.degree(0), 4);

        assert!(cactus_h(3, 0, 3).unwrap().isomorphic(&hyperstar(3, 3).unwrap()));
        assert!(cactus_h(2, 1, 2).is_err());
        assert!(cactus_h(3, 2, 3).is_err());
    }

    #[test]
    fn broom_counts() {
        let b = broom_s(4, 3, 3).unwrap();
        assert_eq!(b.n(), 9);
        assert_eq!(b.diameter().unwrap(), 3);
        assert!(b.classify().unwrap().is_hypertree);
        assert!(broom_s(4, 2, 3).unwrap().isomorphic(&hyperstar(4, 3).unwrap()));
        assert!(broom_s(4, 4, 3).unwrap().isomorphic(&loose_path(4, 3).unwrap()));
        assert!(broom_s(3, 4, 3).is_err());
    }

    #[test]
    fn broom_diameter_sweep() {
        for k in [2, 3, 4] {
            for m in 2..=6 {
                for d in 2..=m {
                    let b = broom_s(m, d, k).unwrap();
                    assert_eq!(b.diameter().unwrap(), d, "m={m} d={d} k={k}");
                    assert_eq!(b.n(), 1 + (k - 1) * m);
                }
            }
        }
    }

    #[test]
    fn spider_counts() {
        let s = spider_t(5, 3, 3).unwrap();
        assert_eq!(s.degree(0), 3);
        assert_eq!(s.pendant_edge_count(), 3);
        assert_eq!(s.n(), 11);
        // leg lengths {2,2,1}: diameter 4
        assert_eq!(s.diameter().unwrap(), 4);
        assert!(spider_t(4, 2, 3).unwrap().isomorphic(&loose_path(4, 3).unwrap()));
        assert!(spider_t(3, 3, 3).unwrap().isomorphic(&hyperstar(3, 3).unwrap()));
        assert!(spider_t(3, 4, 3).is_err());
    }

    #[test]
    fn spider_pendant_edges() {
        for (m, t) in [(4, 2), (5, 2), (5, 3), (6, 4), (7, 3)] {
            let s = spider_t(m, t, 3).unwrap();
            assert_eq!(s.pendant_edge_count(), t, "m={m} t={t}");
            assert!(s.classify().unwrap().is_hypertree);
        }
    }
}
