//! Cross-module properties on randomized and exhaustively enumerated inputs.

use hyperalpha::bounds::{bound_thm31, bound_thm31_weak, solve_delta};
use hyperalpha::spectral::{rayleigh, spectral_radius, Alpha, SpectralOptions};
use hyperalpha::transforms::{attach_path, switch_edges, TransformError};
use hyperalpha::verify::{enumerate_hypertrees, random_connected};
use hyperalpha::UniformHypergraph;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn a(v: f64) -> Alpha {
    Alpha::new(v).unwrap()
}

fn opts() -> SpectralOptions {
    SpectralOptions::default()
}

fn rho(g: &UniformHypergraph) -> f64 {
    spectral_radius(g, a(0.25), &opts()).unwrap().rho
}

proptest! {
    #[test]
    fn handshake_on_random_graphs(seed in 0u64..500, m in 1usize..8, ki in 0usize..3) {
        let k = [2, 3, 4][ki];
        let g = random_connected(m, k, seed);
        let total: usize = g.degrees().iter().sum();
        prop_assert_eq!(total, k * g.m());
        prop_assert!(g.is_connected());
    }

    #[test]
    fn round_trip_is_identity(seed in 0u64..500, m in 1usize..8, ki in 0usize..3) {
        let g = random_connected(m, [2, 3, 4][ki], seed);
        let h = UniformHypergraph::parse(&g.serialize()).unwrap();
        prop_assert_eq!(g, h);
    }

    #[test]
    fn delta_is_a_root(d2 in 1usize..6, extra in 0usize..6, ki in 0usize..3, ai in 0usize..4) {
        let k = [2, 3, 4][ki];
        let alpha = [0.0, 0.25, 0.5, 0.75][ai];
        let d1 = d2 + extra;
        let delta = solve_delta(d1, d2, k, a(alpha)).unwrap();
        if d1 == d2 {
            prop_assert_eq!(delta, 1.0);
        } else if alpha == 0.0 {
            let want = (d1 as f64 / d2 as f64).powf(1.0 / k as f64);
            prop_assert!((delta - want).abs() < 1e-12);
        } else {
            let h = (1.0 - alpha) * d2 as f64 * delta.powi(k as i32)
                + alpha * (d2 as f64 - d1 as f64) * delta.powi(k as i32 - 1)
                - (1.0 - alpha) * d1 as f64;
            prop_assert!(h.abs() < 1e-9, "h(delta) = {}", h);
        }
    }
}

#[test]
fn enumerated_hypertrees_are_sound() {
    for k in [2, 3, 4] {
        for m in 1..=4 {
            let classes = enumerate_hypertrees(m, k).unwrap();
            for (i, g) in classes.iter().enumerate() {
                assert_eq!(g.n(), 1 + (k - 1) * m);
                assert!(g.classify().unwrap().is_hypertree);
                for h in &classes[i + 1..] {
                    assert!(!g.isomorphic(h), "duplicate class k={k} m={m}");
                }
            }
        }
    }
}

#[test]
fn rho_is_relabel_invariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for seed in 0..30u64 {
        let k = [2, 3, 4][(seed % 3) as usize];
        let g = random_connected(1 + (seed % 5) as usize, k, seed);
        let mut perm: Vec<usize> = (0..g.n()).collect();
        for i in (1..perm.len()).rev() {
            perm.swap(i, rng.gen_range(0..=i));
        }
        let h = g.relabel(&perm).unwrap();
        assert!(g.isomorphic(&h));
        assert!((rho(&g) - rho(&h)).abs() <= 1e-10, "seed={seed}");
    }
}

#[test]
fn rayleigh_is_maximized_by_perron() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for seed in 0..40u64 {
        let k = [2, 3][(seed % 2) as usize];
        let g = random_connected(1 + (seed % 6) as usize, k, seed);
        let alpha = a(rng.gen_range(0.0..1.0));
        let res = spectral_radius(&g, alpha, &opts()).unwrap();
        for _ in 0..10 {
            let mut x: Vec<f64> = (0..g.n()).map(|_| rng.gen_range(0.01..1.0)).collect();
            let s: f64 = x.iter().map(|&v| v.powi(k as i32)).sum();
            let scale = s.powf(1.0 / k as f64);
            x.iter_mut().for_each(|v| *v /= scale);
            let q = rayleigh(&g, alpha, &x).unwrap();
            assert!(q <= res.rho + 1e-9, "seed={seed}: rayleigh {q} above rho {}", res.rho);
        }
    }
}

#[test]
fn adding_a_pendant_edge_strictly_increases_rho() {
    for seed in 0..20u64 {
        let k = [2, 3, 4][(seed % 3) as usize];
        let g = random_connected(1 + (seed % 5) as usize, k, seed);
        let before = rho(&g);
        let u = (seed as usize) % g.n();
        let h = attach_path(&g, u, 1).unwrap();
        let after = rho(&h);
        assert!(after > before + 1e-12, "seed={seed}: {before} !< {after}");
    }
}

#[test]
fn thm31_never_exceeds_its_weak_form() {
    for seed in 0..60u64 {
        let k = [2, 3, 4][(seed % 3) as usize];
        let g = random_connected(1 + (seed % 7) as usize, k, seed);
        for av in [0.0, 0.25, 0.5, 0.75] {
            let tight = bound_thm31(&g, a(av)).unwrap().value;
            let weak = bound_thm31_weak(&g, a(av)).unwrap().value;
            assert!(tight <= weak + 1e-12, "seed={seed} alpha={av}: {tight} > {weak}");
        }
    }
}

#[test]
fn switching_back_restores_the_graph() {
    let mut done = 0;
    'outer: for seed in 0..200u64 {
        let g = random_connected(4 + (seed % 3) as usize, 3, seed);
        for e in 0..g.m() {
            for f in e + 1..g.m() {
                if g.edge(e).iter().any(|v| g.edge(f).contains(v)) {
                    continue;
                }
                let us = [g.edge(e)[0]];
                let vs = [g.edge(f)[0]];
                let h = match switch_edges(&g, e, f, &us, &vs) {
                    Ok(h) => h,
                    Err(TransformError::EdgeCollision { .. }) => continue,
                    Err(other) => panic!("unexpected error: {other}"),
                };
                let mut ep = vec![vs[0]];
                ep.extend(g.edge(e).iter().skip(1));
                ep.sort_unstable();
                let fp_idx = h.edges().iter().position(|x| x == &ep).unwrap();
                let mut fq = vec![us[0]];
                fq.extend(g.edge(f).iter().skip(1));
                fq.sort_unstable();
                let ep_idx = h.edges().iter().position(|x| x == &fq).unwrap();
                let back = switch_edges(&h, ep_idx, fp_idx, &us, &vs).unwrap();
                assert_eq!(back, g, "seed={seed}");
                done += 1;
                if done >= 25 {
                    break 'outer;
                }
            }
        }
    }
    assert!(done >= 25, "not enough disjoint-edge switch cases found ({done})");
}
