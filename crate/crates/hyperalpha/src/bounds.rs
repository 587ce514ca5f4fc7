//! Upper bounds on the alpha-spectral radius with equality diagnostics:
//! the degree bound, the two-degree bound through the auxiliary root delta,
//! its weak closed-form corollary, the two Perron-certificate bounds, and
//! three strict bounds for irregular inputs.

use std::collections::BTreeMap;

use crate::hypergraph::{HypergraphError, UniformHypergraph};
use crate::spectral::{spectral_radius, Alpha, SpectralError, SpectralOptions, SpectralResult};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum BoundsError {
    #[error("invalid degrees: need max >= second >= 1, got max={max}, second={second}")]
    InvalidDegrees { max: usize, second: usize },
    #[error("bound undefined for regular hypergraphs")]
    RegularInput,
    #[error("stale Perron certificate: residual {0:.3e} above tolerance")]
    StaleCertificate(f64),
    #[error(transparent)]
    Graph(#[from] HypergraphError),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum BoundName {
    MaxDegree,
    Thm31,
    Thm31Weak,
    Thm32a,
    Thm32b,
    LgzIrregular,
    LgzXmaxDiam,
    LgzXmaxD1,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum EqualityCase {
    /// Numeric gap <= 1e-8 and the structural characterization matches.
    Holds,
    FailsStrict,
    /// No equality characterization applies (strict bounds, or G
    /// disconnected so the characterization is out of scope).
    NotCharacterized,
}

/// A named upper bound value with its inputs and equality diagnosis.
#[derive(Debug, Clone, Serialize)]
pub struct BoundReport {
    pub name: BoundName,
    pub value: f64,
    pub inputs: BTreeMap<String, f64>,
    pub equality_case: EqualityCase,
    /// True when the bound consumes the computed Perron vector.
    pub certificate: bool,
}

const EQUALITY_GAP: f64 = 1e-8;
const CERT_RESIDUAL_TOL: f64 = 1e-8;

/// The auxiliary root of `h(t) = (1-a) D' t^k + a (D'-D) t^(k-1) - (1-a) D`:
/// delta = 1 when D = D', the closed form (D/D')^(1/k) at alpha = 0, and
/// otherwise the unique root above (D/D')^(1/k), found by bracket expansion
/// and bisection.
pub fn solve_delta(
    max_deg: usize,
    second_deg: usize,
    k: usize,
    alpha: Alpha,
) -> Result<f64, BoundsError> {
    if max_deg < second_deg || second_deg < 1 {
        return Err(BoundsError::InvalidDegrees {
            max: max_deg,
            second: second_deg,
        });
    }
    let d1 = max_deg as f64;
    let d2 = second_deg as f64;
    let a = alpha.get();
    if max_deg == second_deg {
        return Ok(1.0);
    }
    let lower = (d1 / d2).powf(1.0 / k as f64);
    if a == 0.0 {
        return Ok(lower);
    }
    let h = |t: f64| {
        (1.0 - a) * d2 * t.powi(k as i32) + a * (d2 - d1) * t.powi(k as i32 - 1) - (1.0 - a) * d1
    };
    // h(lower) <= 0; expand upward until the sign flips, then bisect.
    let mut lo = lower;
    let mut hi = (2.0 * lower).max(2.0);
    while h(hi) <= 0.0 {
        hi *= 2.0;
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if h(mid) > 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

fn base_inputs(g: &UniformHypergraph, alpha: Alpha) -> BTreeMap<String, f64> {
    BTreeMap::from([
        ("alpha".into(), alpha.get()),
        ("k".into(), g.k() as f64),
        ("n".into(), g.n() as f64),
        ("m".into(), g.m() as f64),
        ("max_degree".into(), g.max_degree() as f64),
        ("second_max_degree".into(), g.second_max_degree() as f64),
    ])
}

/// True iff G consists of a single vertex joined to every edge of a regular
/// (k-1)-uniform hypergraph on the remaining vertices (the equality
/// structure of the two-degree bound, besides regularity).
fn is_apex_over_regular(g: &UniformHypergraph) -> bool {
    let m = g.m();
    if m == 0 {
        return false;
    }
    (0..g.n()).any(|v| {
        g.degree(v) == m && {
            let rest: Vec<usize> = (0..g.n()).filter(|&u| u != v).collect();
            let d = g.degree(rest[0]);
            rest.iter().all(|&u| g.degree(u) == d)
        }
    })
}

fn equality_with_structure(
    g: &UniformHypergraph,
    alpha: Alpha,
    value: f64,
    structural: impl Fn(&UniformHypergraph) -> bool,
    inputs: &mut BTreeMap<String, f64>,
) -> Result<EqualityCase, BoundsError> {
    if !g.is_connected() {
        return Ok(EqualityCase::NotCharacterized);
    }
    let res = spectral_radius(g, alpha, &SpectralOptions::default())?;
    inputs.insert("rho_alpha".into(), res.rho);
    let gap_ok = (value - res.rho).abs() <= EQUALITY_GAP;
    Ok(if gap_ok && structural(g) {
        EqualityCase::Holds
    } else {
        EqualityCase::FailsStrict
    })
}

/// `rho_alpha <= a*D + (1-a)*D*delta^-(k-1)`; equality (connected case) iff
/// G is regular or an apex over a regular (k-1)-uniform hypergraph.
pub fn bound_thm31(g: &UniformHypergraph, alpha: Alpha) -> Result<BoundReport, BoundsError> {
    let d1 = g.max_degree();
    let d2 = g.second_max_degree();
    let delta = solve_delta(d1, d2, g.k(), alpha)?;
    let a = alpha.get();
    let value = a * d1 as f64 + (1.0 - a) * d1 as f64 * delta.powi(-(g.k() as i32 - 1));
    let mut inputs = base_inputs(g, alpha);
    inputs.insert("delta".into(), delta);
    let equality_case = equality_with_structure(
        g,
        alpha,
        value,
        |g| g.is_regular() || is_apex_over_regular(g),
        &mut inputs,
    )?;
    Ok(BoundReport {
        name: BoundName::Thm31,
        value,
        inputs,
        equality_case,
        certificate: false,
    })
}

/// `rho_alpha <= a*D + (1-a)*D^(1/k)*D'^(1-1/k)`; equality iff regular.
pub fn bound_thm31_weak(g: &UniformHypergraph, alpha: Alpha) -> Result<BoundReport, BoundsError> {
    let d1 = g.max_degree() as f64;
    let d2 = g.second_max_degree() as f64;
    let a = alpha.get();
    let k = g.k() as f64;
    let value = a * d1 + (1.0 - a) * d1.powf(1.0 / k) * d2.powf(1.0 - 1.0 / k);
    let mut inputs = base_inputs(g, alpha);
    let equality_case =
        equality_with_structure(g, alpha, value, UniformHypergraph::is_regular, &mut inputs)?;
    Ok(BoundReport {
        name: BoundName::Thm31Weak,
        value,
        inputs,
        equality_case,
        certificate: false,
    })
}

/// Row-sum bound `rho_alpha <= max degree`; equality (connected case) iff
/// all degrees are equal.
pub fn bound_max_degree(g: &UniformHypergraph) -> BoundReport {
    let d1 = g.max_degree();
    let mut inputs = BTreeMap::from([
        ("k".into(), g.k() as f64),
        ("n".into(), g.n() as f64),
        ("m".into(), g.m() as f64),
        ("max_degree".into(), d1 as f64),
    ]);
    inputs.insert("second_max_degree".into(), g.second_max_degree() as f64);
    let equality_case = if !g.is_connected() {
        EqualityCase::NotCharacterized
    } else if g.is_regular() {
        EqualityCase::Holds
    } else {
        EqualityCase::FailsStrict
    };
    BoundReport {
        name: BoundName::MaxDegree,
        value: d1 as f64,
        inputs,
        equality_case,
        certificate: false,
    }
}

fn check_certificate(res: &SpectralResult) -> Result<(), BoundsError> {
    if res.residual_inf > CERT_RESIDUAL_TOL {
        Err(BoundsError::StaleCertificate(res.residual_inf))
    } else {
        Ok(())
    }
}

/// The two Perron-certificate bounds built from the maximum entry of the
/// alpha-Perron vector; equality iff G is regular.
pub fn certificates_thm32(
    g: &UniformHypergraph,
    alpha: Alpha,
    res: &SpectralResult,
) -> Result<(BoundReport, BoundReport), BoundsError> {
    check_certificate(res)?;
    let a = alpha.get();
    let k = g.k() as f64;
    let d1 = g.max_degree() as f64;
    let xmax = res.perron.iter().cloned().fold(0.0, f64::max);
    let equality_case = if g.is_regular() {
        if (res.rho - d1).abs() <= EQUALITY_GAP {
            EqualityCase::Holds
        } else {
            EqualityCase::FailsStrict
        }
    } else {
        EqualityCase::FailsStrict
    };
    let mut inputs = base_inputs(g, alpha);
    inputs.insert("x_max".into(), xmax);
    inputs.insert("rho_alpha".into(), res.rho);

    let value_a = a * d1 + (1.0 - a) * k * g.m() as f64 * xmax.powf(k);
    let dsum: f64 = g
        .degrees()
        .iter()
        .map(|&d| (d as f64).powf(k / (k - 1.0)))
        .sum();
    let value_b = a * d1 + (1.0 - a) * dsum.powf((k - 1.0) / k) * xmax.powf(k - 1.0);

    let report_a = BoundReport {
        name: BoundName::Thm32a,
        value: value_a,
        inputs: inputs.clone(),
        equality_case,
        certificate: true,
    };
    let report_b = BoundReport {
        name: BoundName::Thm32b,
        value: value_b,
        inputs,
        equality_case,
        certificate: true,
    };
    Ok((report_a, report_b))
}

/// The reproduced strict bounds: the irregular diameter bound (needs an
/// irregular connected G with k < n) and the two maximum-Perron-entry
/// bounds (need a converged certificate; the second only for D = 1, k >= 3).
pub fn bounds_lgz(
    g: &UniformHypergraph,
    alpha: Alpha,
    res: Option<&SpectralResult>,
) -> Result<Vec<BoundReport>, BoundsError> {
    let diam = g.diameter()?; // errors on disconnected input
    let a = alpha.get();
    let k = g.k() as f64;
    let n = g.n() as f64;
    let d1 = g.max_degree() as f64;
    let big_d = diam as f64;
    let mut out = Vec::new();

    if !g.is_regular() && g.k() < g.n() {
        let denom = ((4.0 * big_d - 1.0 - 2.0 * a) * (k - 1.0) + 1.0) * n;
        let value = d1 - 4.0 * (1.0 - a) / denom;
        let mut inputs = base_inputs(g, alpha);
        inputs.insert("diameter".into(), big_d);
        out.push(BoundReport {
            name: BoundName::LgzIrregular,
            value,
            inputs,
            equality_case: EqualityCase::NotCharacterized,
            certificate: false,
        });
    }

    if let Some(res) = res {
        check_certificate(res)?;
        let xmax = res.perron.iter().cloned().fold(0.0, f64::max);
        let surplus = n * d1 - k * g.m() as f64; // sum of (max_degree - d_v)
        let mut inputs = base_inputs(g, alpha);
        inputs.insert("diameter".into(), big_d);
        inputs.insert("x_max".into(), xmax);
        inputs.insert("rho_alpha".into(), res.rho);
        let value = d1
            - (1.0 - a) * k * surplus / (2.0 * surplus * (k - 1.0) * big_d + (1.0 - a) * k)
                * xmax.powf(k);
        out.push(BoundReport {
            name: BoundName::LgzXmaxDiam,
            value,
            inputs: inputs.clone(),
            equality_case: EqualityCase::NotCharacterized,
            certificate: true,
        });
        if diam == 1 && g.k() >= 3 {
            let value = d1
                - (1.0 - a) * surplus * n / (2.0 * surplus * (k - 1.0) + (1.0 - a) * n)
                    * xmax.powf(k);
            out.push(BoundReport {
                name: BoundName::LgzXmaxD1,
                value,
                inputs,
                equality_case: EqualityCase::NotCharacterized,
                certificate: true,
            });
        }
    }

    if out.is_empty() {
        return Err(BoundsError::RegularInput);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{hyperstar, loose_path};

    fn a(v: f64) -> Alpha {
        Alpha::new(v).unwrap()
    }

    fn rho(g: &UniformHypergraph, alpha: f64) -> f64 {
        spectral_radius(g, a(alpha), &SpectralOptions::default())
            .unwrap()
            .rho
    }

    #[test]
    fn delta_equal_degrees() {
        assert_eq!(solve_delta(3, 3, 3, a(0.7)).unwrap(), 1.0);
        assert_eq!(solve_delta(3, 3, 3, a(0.0)).unwrap(), 1.0);
    }

    #[test]
    fn delta_alpha_zero_closed_form() {
        let d = solve_delta(4, 1, 3, a(0.0)).unwrap();
        assert!((d - 4f64.powf(1.0 / 3.0)).abs() < 1e-14);
    }

    #[test]
    fn delta_cubic_root() {
        // alpha=1/2, D=4, D'=1, k=3: h = 0 is equivalent to t^3 - 3t^2 - 4 = 0
        let d = solve_delta(4, 1, 3, a(0.5)).unwrap();
        assert!((d - 3.355_301_397_608_12).abs() < 1e-11, "delta={d}");
        assert!((d.powi(3) - 3.0 * d.powi(2) - 4.0).abs() < 1e-10);
    }

    #[test]
    fn delta_rejects_bad_degrees() {
        assert!(matches!(
            solve_delta(1, 2, 3, a(0.0)),
            Err(BoundsError::InvalidDegrees { .. })
        ));
        assert!(matches!(
            solve_delta(2, 0, 3, a(0.0)),
            Err(BoundsError::InvalidDegrees { .. })
        ));
    }

    #[test]
    fn thm31_on_regular() {
        let g = UniformHypergraph::build(3, 3, vec![vec![0, 1, 2]]).unwrap();
        let r = bound_thm31(&g, a(0.5)).unwrap();
        assert!((r.value - 1.0).abs() < 1e-12);
        assert_eq!(r.equality_case, EqualityCase::Holds);
    }

    #[test]
    fn thm31_star_equality() {
        let g = hyperstar(4, 3).unwrap();
        let r0 = bound_thm31(&g, a(0.0)).unwrap();
        assert!((r0.value - 4f64.powf(1.0 / 3.0)).abs() < 1e-10);
        assert_eq!(r0.equality_case, EqualityCase::Holds);
        let rh = bound_thm31(&g, a(0.5)).unwrap();
        assert!((rh.value - rho(&g, 0.5)).abs() < 1e-9);
        assert_eq!(rh.equality_case, EqualityCase::Holds);
    }

    #[test]
    fn thm31_path_fails_strict() {
        let g = loose_path(3, 3).unwrap();
        let r = bound_thm31(&g, a(0.0)).unwrap();
        assert!((r.value - 2.0).abs() < 1e-12); // Delta = Delta' = 2
        assert_eq!(r.equality_case, EqualityCase::FailsStrict);
        assert!(r.value > rho(&g, 0.0) + 0.5);
    }

    #[test]
    fn weak_bound_values() {
        let g = hyperstar(4, 3).unwrap();
        let r0 = bound_thm31_weak(&g, a(0.0)).unwrap();
        assert!((r0.value - 4f64.powf(1.0 / 3.0)).abs() < 1e-12);
        let rh = bound_thm31_weak(&g, a(0.5)).unwrap();
        assert!((rh.value - (2.0 + 0.5 * 4f64.powf(1.0 / 3.0))).abs() < 1e-12);
        // weak dominates the delta bound
        assert!(rh.value >= bound_thm31(&g, a(0.5)).unwrap().value - 1e-12);
        assert_eq!(rh.equality_case, EqualityCase::FailsStrict);
        let e = UniformHypergraph::build(3, 3, vec![vec![0, 1, 2]]).unwrap();
        assert_eq!(
            bound_thm31_weak(&e, a(0.25)).unwrap().equality_case,
            EqualityCase::Holds
        );
    }

    #[test]
    fn max_degree_bound() {
        let s = hyperstar(4, 3).unwrap();
        let r = bound_max_degree(&s);
        assert_eq!(r.value, 4.0);
        assert_eq!(r.equality_case, EqualityCase::FailsStrict);
        let e = UniformHypergraph::build(3, 3, vec![vec![0, 1, 2]]).unwrap();
        assert_eq!(bound_max_degree(&e).equality_case, EqualityCase::Holds);
        let h = crate::families::cactus_h(2, 1, 3).unwrap();
        let rb = bound_max_degree(&h);
        assert_eq!(rb.value, 2.0);
        assert_eq!(rb.equality_case, EqualityCase::FailsStrict);
        assert!(rho(&h, 0.0) < 2.0);
    }

    #[test]
    fn certificates_on_single_edge() {
        let g = UniformHypergraph::build(3, 3, vec![vec![0, 1, 2]]).unwrap();
        for av in [0.0, 0.5] {
            let res = spectral_radius(&g, a(av), &SpectralOptions::default()).unwrap();
            let (ra, rb) = certificates_thm32(&g, a(av), &res).unwrap();
            assert!((ra.value - 1.0).abs() < 1e-9);
            assert!((rb.value - 1.0).abs() < 1e-9);
            assert_eq!(ra.equality_case, EqualityCase::Holds);
            assert_eq!(rb.equality_case, EqualityCase::Holds);
        }
    }

    #[test]
    fn certificates_star_strict() {
        let g = hyperstar(4, 3).unwrap();
        let res = spectral_radius(&g, a(0.0), &SpectralOptions::default()).unwrap();
        let (ra, rb) = certificates_thm32(&g, a(0.0), &res).unwrap();
        let r = 4f64.powf(1.0 / 3.0);
        assert!(ra.value > r + 1e-6);
        assert!(rb.value > r + 1e-6);
        assert_eq!(ra.equality_case, EqualityCase::FailsStrict);
        // alpha=0 rearrangement: x_max >= rho^(1/(k-1)) / (sum d^(k/(k-1)))^(1/k)
        let xmax = res.perron.iter().cloned().fold(0.0, f64::max);
        let dsum: f64 = g
            .degrees()
            .iter()
            .map(|&d| (d as f64).powf(1.5))
            .sum();
        assert!(xmax >= res.rho.powf(0.5) / dsum.powf(1.0 / 3.0) - 1e-12);
    }

    #[test]
    fn certificates_reject_stale() {
        let g = hyperstar(4, 3).unwrap();
        let mut res = spectral_radius(&g, a(0.0), &SpectralOptions::default()).unwrap();
        res.residual_inf = 1.0;
        assert!(matches!(
            certificates_thm32(&g, a(0.0), &res),
            Err(BoundsError::StaleCertificate(_))
        ));
    }

    #[test]
    fn lgz_star() {
        let g = hyperstar(4, 3).unwrap();
        let reports = bounds_lgz(&g, a(0.0), None).unwrap();
        assert_eq!(reports.len(), 1);
        assert!((reports[0].value - (4.0 - 4.0 / 135.0)).abs() < 1e-12);
        assert!(reports[0].value > rho(&g, 0.0));
    }

    #[test]
    fn lgz_regular_rejected() {
        let g = UniformHypergraph::build(3, 3, vec![vec![0, 1, 2]]).unwrap();
        assert!(matches!(
            bounds_lgz(&g, a(0.0), None),
            Err(BoundsError::RegularInput)
        ));
        // but the certificate bounds still apply to regular inputs
        let res = spectral_radius(&g, a(0.0), &SpectralOptions::default()).unwrap();
        let reports = bounds_lgz(&g, a(0.0), Some(&res)).unwrap();
        assert_eq!(reports.len(), 2); // D=1 and k>=3 adds the second variant
        for r in reports {
            assert!(r.value >= res.rho - 1e-9);
        }
    }

    #[test]
    fn lgz_path_certificate_bounds() {
        let g = loose_path(3, 3).unwrap();
        let res = spectral_radius(&g, a(0.5), &SpectralOptions::default()).unwrap();
        let reports = bounds_lgz(&g, a(0.5), Some(&res)).unwrap();
        assert_eq!(reports.len(), 2); // irregular + diameter variant (D=3)
        for r in reports {
            assert!(r.value >= res.rho - 1e-9, "{:?}", r.name);
        }
    }
}
