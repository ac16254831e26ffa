//! Floating-point validation harness.
//!
//! Empirically checks the exact growth exponents: minimum of |F(z)| on
//! max-norm spheres against the predicted lower-bound slope, growth of
//! slice roots along rays w -> 0, and the multiplicative product formula
//! for resultants. Everything is randomized but deterministic for a fixed
//! seed, and every minimum estimate is an attained value at a concrete
//! stored witness point, so it bounds the true sphere minimum from above
//! (the conservative direction when validating a lower-bound exponent).

use std::f64::consts::TAU;
use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::analysis::AnalysisReport;
use crate::macaulay::{resultant, FormSystem, MacaulayError};
use crate::pgcurve::PGFull;
use crate::polyring::{MultiPoly, PolyMap};

pub const DEFAULT_RADII: [f64; 4] = [10.0, 100.0, 1_000.0, 10_000.0];
pub const DEFAULT_BUDGET: usize = 2_000;

/// Slope tolerance for PASS verdicts.
pub const SLOPE_TOLERANCE: f64 = 0.15;
/// Relative tolerance of the product-formula comparison.
pub const FORMULA_TOLERANCE: f64 = 1e-8;
/// Relative residual required of every computed root.
pub const ROOT_RESIDUAL: f64 = 1e-10;

const REFINE_CANDIDATES: usize = 10;
const REFINE_SWEEPS: usize = 200;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Skipped => "SKIPPED",
        })
    }
}

#[derive(Debug, Error)]
pub enum NumericError {
    #[error("root finding did not converge: {details}")]
    RootsDiverged { details: String },
    #[error("not enough usable data points for a fit: need {needed}, have {have}")]
    DegenerateProfile { needed: usize, have: usize },
    #[error("the linear form vanishes at the supplied zero ({point})")]
    LinearFormOnZero { point: String },
    #[error("multiplicities sum to {got}, expected the degree product {expected}")]
    BadMultiplicities { got: BigInt, expected: BigInt },
    #[error(transparent)]
    Macaulay(#[from] MacaulayError),
}

/// An attained value of |F(z)| together with the point attaining it.
#[derive(Clone, Debug)]
pub struct SphereMin {
    pub value: f64,
    pub witness: Vec<Complex64>,
}

fn map_norm(f: &PolyMap, z: &[Complex64]) -> f64 {
    f.components().iter().map(|p| p.eval_complex(z).norm()).fold(0.0, f64::max)
}

/// Estimates min_{|z| = R} |F(z)| in max-norm: `budget` random points on the
/// sphere (one coordinate pinned to modulus R, the rest uniform in the
/// polydisk), then coordinate-wise phase/radius descent with shrinking steps
/// from the best candidates. The result is an attained value, hence always
/// an upper bound of the true minimum.
pub fn min_on_sphere(f: &PolyMap, radius: f64, budget: usize, seed: u64) -> SphereMin {
    assert!(radius > 0.0, "radius must be positive");
    assert!(budget > 0, "need at least one sample");
    let n = f.n();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    // polar coordinates per candidate: (modulus, phase) and the pinned index
    let point = |polar: &[(f64, f64)]| -> Vec<Complex64> {
        polar.iter().map(|&(r, th)| Complex64::from_polar(r, th)).collect()
    };

    let mut samples: Vec<(f64, Vec<(f64, f64)>, usize)> = Vec::with_capacity(budget);
    for _ in 0..budget {
        let pinned = rng.gen_range(0..n);
        let polar: Vec<(f64, f64)> = (0..n)
            .map(|i| {
                let r = if i == pinned { radius } else { radius * rng.gen::<f64>().sqrt() };
                (r, rng.gen_range(0.0..TAU))
            })
            .collect();
        let v = map_norm(f, &point(&polar));
        if v.is_finite() {
            samples.push((v, polar, pinned));
        }
    }
    samples.sort_by(|a, b| a.0.total_cmp(&b.0));
    // keep the best candidates from every pinned stratum: a stratum whose
    // pinned coordinate blocks the descent can dominate the raw top of the
    // list while another stratum holds the path to the true minimum
    let per_pin = (REFINE_CANDIDATES / n).max(1);
    let mut counts = vec![0usize; n];
    let mut chosen = Vec::with_capacity(REFINE_CANDIDATES);
    for s in samples {
        if counts[s.2] < per_pin {
            counts[s.2] += 1;
            chosen.push(s);
        }
        if chosen.len() >= REFINE_CANDIDATES {
            break;
        }
    }

    let mut best_value = f64::INFINITY;
    let mut best_polar = chosen[0].1.clone();
    for (v0, mut polar, pinned) in chosen {
        let mut value = v0;
        let mut step_phase = 0.8f64;
        let mut step_rad = 0.35f64;
        for _ in 0..REFINE_SWEEPS {
            let before = value;
            for i in 0..n {
                // phase moves, repeated while they improve
                for dir in [1.0, -1.0] {
                    for _ in 0..60 {
                        let mut cand = polar.clone();
                        cand[i].1 += dir * step_phase;
                        let v = map_norm(f, &point(&cand));
                        if v < value {
                            value = v;
                            polar = cand;
                        } else {
                            break;
                        }
                    }
                }
                // radius moves keep the pinned coordinate at modulus R
                if i != pinned {
                    for dir in [1.0, -1.0] {
                        for _ in 0..60 {
                            let mut cand = polar.clone();
                            cand[i].0 = (cand[i].0 * (1.0 + dir * step_rad)).min(radius);
                            let v = map_norm(f, &point(&cand));
                            if v < value {
                                value = v;
                                polar = cand;
                            } else {
                                break;
                            }
                        }
                    }
                }
            }
            // pattern search: shrink only when a whole sweep stalls, so the
            // resolution adapts to whatever scale the minimum demands
            if value >= before * (1.0 - 1e-12) {
                step_phase *= 0.5;
                step_rad *= 0.5;
                if step_phase < 1e-10 && step_rad < 1e-10 {
                    break;
                }
            }
        }
        if value < best_value {
            best_value = value;
            best_polar = polar;
        }
    }
    SphereMin { value: best_value, witness: point(&best_polar) }
}

/// Minimum estimates of |F| across a ladder of sphere radii, the fitted
/// log-log slope and the fitted constant. A (near-)zero estimate flags a
/// fiber point on that sphere; it stays in `min_estimates` but is excluded
/// from the fit.
#[derive(Clone, Debug)]
pub struct GrowthProfile {
    pub radii: Vec<f64>,
    pub min_estimates: Vec<f64>,
    pub witnesses: Vec<Vec<Complex64>>,
    pub fitted_exponent: f64,
    pub empirical_c: f64,
    pub flat: bool,
}

impl GrowthProfile {
    /// JSON array of (radius, estimate) pairs, for external plotting.
    pub fn to_json(&self) -> String {
        let pairs: Vec<[f64; 2]> =
            self.radii.iter().zip(&self.min_estimates).map(|(&r, &e)| [r, e]).collect();
        serde_json::to_string(&pairs).expect("profile serialization cannot fail")
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Fit {
    pub slope: f64,
    pub intercept: f64,
    pub flat: bool,
}

fn ols(xs: &[f64], ys: &[f64]) -> Fit {
    let n = xs.len() as f64;
    let my = ys.iter().sum::<f64>() / n;
    let spread = ys.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &y| {
        (lo.min(y), hi.max(y))
    });
    if spread.1 - spread.0 <= 1e-12 * spread.1.abs().max(1.0) {
        return Fit { slope: 0.0, intercept: my, flat: true };
    }
    let mx = xs.iter().sum::<f64>() / n;
    let sxx = xs.iter().map(|x| (x - mx).powi(2)).sum::<f64>();
    let sxy = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum::<f64>();
    let slope = sxy / sxx;
    Fit { slope, intercept: my - mx * slope, flat: false }
}

/// Ordinary least squares of log(estimate) against log(radius), skipping
/// fiber hits. Flat data reports slope 0 with the flag set.
pub fn fit_growth_exponent(radii: &[f64], estimates: &[f64]) -> Result<Fit, NumericError> {
    assert_eq!(radii.len(), estimates.len());
    assert!(radii.windows(2).all(|p| p[0] < p[1]), "radii must increase strictly");
    let valid: Vec<(f64, f64)> = radii
        .iter()
        .zip(estimates)
        .filter(|(_, &e)| e > 1e-300)
        .map(|(&r, &e)| (r.ln(), e.ln()))
        .collect();
    if valid.len() < 2 {
        return Err(NumericError::DegenerateProfile { needed: 2, have: valid.len() });
    }
    let xs: Vec<f64> = valid.iter().map(|p| p.0).collect();
    let ys: Vec<f64> = valid.iter().map(|p| p.1).collect();
    Ok(ols(&xs, &ys))
}

/// Builds the growth profile of F over the given radii.
pub fn growth_profile(
    f: &PolyMap,
    radii: &[f64],
    budget: usize,
    seed: u64,
) -> Result<GrowthProfile, NumericError> {
    assert!(radii.len() >= 4, "need at least four radii");
    let mut estimates = Vec::with_capacity(radii.len());
    let mut witnesses = Vec::with_capacity(radii.len());
    for (k, &r) in radii.iter().enumerate() {
        let per_radius = seed.wrapping_add((k as u64 + 1).wrapping_mul(0x9e37_79b9_7f4a_7c15));
        let m = min_on_sphere(f, r, budget, per_radius);
        estimates.push(m.value);
        witnesses.push(m.witness);
    }
    let fit = fit_growth_exponent(radii, &estimates)?;
    Ok(GrowthProfile {
        radii: radii.to_vec(),
        min_estimates: estimates,
        witnesses,
        fitted_exponent: fit.slope,
        empirical_c: fit.intercept.exp(),
        flat: fit.flat,
    })
}

/// Outcome of one growth check.
#[derive(Clone, Debug)]
pub struct GrowthCheck {
    pub profile: GrowthProfile,
    pub bound_exponent: f64,
    pub expected_slope: Option<f64>,
    pub verdict: Verdict,
}

/// Fits the growth slope and compares it against the certified zero-fiber
/// exponent of the report (and, when the tight slope is known, against it).
pub fn verify_growth(
    f: &PolyMap,
    report: &AnalysisReport,
    radii: &[f64],
    budget: usize,
    seed: u64,
    expected_slope: Option<f64>,
) -> Result<GrowthCheck, NumericError> {
    let bound = report
        .thm12_exponent
        .as_ref()
        .expect("verify_growth needs a certified report")
        .to_f64()
        .expect("exponent fits in a double");
    let profile = growth_profile(f, radii, budget, seed)?;
    let slope = profile.fitted_exponent;
    let mut pass = slope >= bound - SLOPE_TOLERANCE;
    if let Some(e) = expected_slope {
        pass = pass && (slope - e).abs() <= SLOPE_TOLERANCE;
    }
    Ok(GrowthCheck {
        profile,
        bound_exponent: bound,
        expected_slope,
        verdict: if pass { Verdict::Pass } else { Verdict::Fail },
    })
}

fn horner_both(coeffs: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for &c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

/// All complex roots of `coeffs[0] + coeffs[1] T + ... + coeffs[d] T^d` by
/// Aberth–Ehrlich iteration with a guarded Newton polish; every returned
/// root satisfies |p(t)| <= 1e-10 * sum |c_i||t|^i.
pub fn roots_univariate(coeffs: &[Complex64]) -> Result<Vec<Complex64>, NumericError> {
    let mut c = coeffs.to_vec();
    while c.last().is_some_and(|x| x.norm() == 0.0) {
        c.pop();
    }
    assert!(c.len() >= 2, "need degree at least 1 with a non-zero leading coefficient");

    // deflate exact roots at the origin
    let mut roots = Vec::new();
    let zeros = c.iter().take_while(|x| x.norm() == 0.0).count();
    for _ in 0..zeros {
        roots.push(Complex64::new(0.0, 0.0));
    }
    let c = &c[zeros..];
    let d = c.len() - 1;
    if d == 0 {
        return Ok(roots);
    }

    let lead = c[d];
    let monic: Vec<Complex64> = c.iter().map(|x| x / lead).collect();
    let radius = 1.0 + monic[..d].iter().map(|x| x.norm()).fold(0.0, f64::max);
    let mut z: Vec<Complex64> = (0..d)
        .map(|k| {
            let spread = 0.4 + 0.6 * (k as f64 + 1.0) / d as f64;
            Complex64::from_polar(radius * spread, TAU * k as f64 / d as f64 + 0.4)
        })
        .collect();

    let mut converged = false;
    for _ in 0..400 {
        let mut done = true;
        for k in 0..d {
            let (p, dp) = horner_both(&monic, z[k]);
            let ratio = if dp.norm() > 1e-300 { p / dp } else { p };
            let mut s = Complex64::new(0.0, 0.0);
            for j in 0..d {
                if j != k {
                    s += 1.0 / (z[k] - z[j]);
                }
            }
            let denom = Complex64::new(1.0, 0.0) - ratio * s;
            let corr = if denom.norm() > 1e-300 { ratio / denom } else { ratio };
            z[k] -= corr;
            if corr.norm() > 1e-13 * (1.0 + z[k].norm()) {
                done = false;
            }
        }
        if done {
            converged = true;
            break;
        }
    }

    for zk in &mut z {
        // guarded Newton polish on the original coefficients
        for _ in 0..3 {
            let (p, dp) = horner_both(c, *zk);
            if dp.norm() < 1e-300 {
                break;
            }
            let cand = *zk - p / dp;
            let (p2, _) = horner_both(c, cand);
            if p2.norm() < p.norm() {
                *zk = cand;
            } else {
                break;
            }
        }
        let (p, _) = horner_both(c, *zk);
        let scale: f64 = c
            .iter()
            .enumerate()
            .map(|(i, x)| x.norm() * zk.norm().powi(i as i32))
            .sum::<f64>()
            .max(1e-300);
        if p.norm() > ROOT_RESIDUAL * scale {
            return Err(NumericError::RootsDiverged {
                details: format!(
                    "residual {:.3e} at t = {} (degree {d}, converged = {converged})",
                    p.norm() / scale,
                    zk
                ),
            });
        }
    }
    roots.extend(z);
    Ok(roots)
}

/// Max root modulus of T -> P(w, T) as |w| shrinks along a ray, with the
/// fitted log-log slope.
#[derive(Clone, Debug)]
pub struct RootGrowthProfile {
    pub w_magnitudes: Vec<f64>,
    pub max_root_t: Vec<f64>,
    pub fitted_exponent: f64,
}

#[derive(Clone, Debug)]
pub struct RootGrowthCheck {
    pub delta: u32,
    pub profile: Option<RootGrowthProfile>,
    pub verdict: Verdict,
    pub note: String,
}

impl RootGrowthCheck {
    /// The vacuous outcome for delta = 0: roots stay bounded as w -> 0 by
    /// continuity, so there is nothing to measure.
    pub fn skipped(delta: u32) -> RootGrowthCheck {
        RootGrowthCheck {
            delta,
            profile: None,
            verdict: Verdict::Skipped,
            note: "delta = 0 is vacuous: roots stay bounded by continuity".to_string(),
        }
    }
}

/// Coefficients of T -> P(w, T) at a numeric w.
fn slice_coeffs_at(p: &PGFull, w: &[Complex64]) -> Vec<Complex64> {
    let n = p.n();
    assert_eq!(w.len(), n, "w needs one coordinate per component");
    let deg_t = p.deg_t().unwrap_or(0) as usize;
    let mut coeffs = vec![Complex64::new(0.0, 0.0); deg_t + 1];
    for (e, c) in p.poly.terms() {
        let powers = e.powers();
        let mut v = Complex64::new(c.to_f64().expect("coefficient fits in a double"), 0.0);
        for (i, &wi) in w.iter().enumerate() {
            v *= wi.powu(powers[i]);
        }
        coeffs[powers[n] as usize] += v;
    }
    coeffs
}

/// Checks root growth along a random ray w(eps) = eps * u, |u| = 1, for
/// eps in {1e-1, ..., 1e-4}: the max root modulus of P(w(eps), T) must grow
/// no faster than eps^{-1/delta}. Vacuous for delta = 0 (continuity of
/// roots), reported as SKIPPED.
pub fn verify_root_growth(
    p: &PGFull,
    delta: u32,
    seed: u64,
) -> Result<RootGrowthCheck, NumericError> {
    let n = p.n();
    let zero_slice = p.slice_at(&vec![BigRational::zero(); n]);
    assert!(!zero_slice.is_zero(), "P(0, T) must not vanish identically");

    if delta == 0 {
        return Ok(RootGrowthCheck::skipped(delta));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut u: Vec<Complex64> = (0..n)
        .map(|_| Complex64::from_polar(rng.gen_range(0.3..=1.0), rng.gen_range(0.0..TAU)))
        .collect();
    let umax = u.iter().map(|x| x.norm()).fold(0.0, f64::max);
    for x in &mut u {
        *x /= umax;
    }

    let mut mags = Vec::new();
    let mut maxima = Vec::new();
    for k in 1..=4 {
        let eps = 10f64.powi(-k);
        let w: Vec<Complex64> = u.iter().map(|x| x * eps).collect();
        let coeffs = slice_coeffs_at(p, &w);
        if coeffs.iter().skip(1).all(|c| c.norm() == 0.0) {
            continue; // constant in T at this magnitude: no roots to track
        }
        let roots = roots_univariate(&coeffs)?;
        let maxt = roots.iter().map(|t| t.norm()).fold(0.0, f64::max).max(1e-300);
        mags.push(eps);
        maxima.push(maxt);
    }
    if mags.len() < 2 {
        return Err(NumericError::DegenerateProfile { needed: 2, have: mags.len() });
    }

    let xs: Vec<f64> = mags.iter().map(|m| m.ln()).collect();
    let ys: Vec<f64> = maxima.iter().map(|m| m.ln()).collect();
    let fit = ols(&xs, &ys);
    let floor = -1.0 / delta as f64 - SLOPE_TOLERANCE;
    Ok(RootGrowthCheck {
        delta,
        profile: Some(RootGrowthProfile {
            w_magnitudes: mags,
            max_root_t: maxima,
            fitted_exponent: fit.slope,
        }),
        verdict: if fit.slope >= floor { Verdict::Pass } else { Verdict::Fail },
        note: format!("slope {:.4} against floor {:.4}", fit.slope, floor),
    })
}

/// Outcome of the product-formula check.
#[derive(Clone, Debug)]
pub struct ProductFormulaCheck {
    pub lhs: f64,
    pub rhs: Complex64,
    pub verdict: Verdict,
}

/// Verifies Res(H1, ..., Hn, H) = Res(H1, ..., Hn, L^d) * prod_p (H/L^d)(p)^{mu_p}
/// for a form H of degree d, a linear form L not vanishing on the common
/// zero set V = {(p, mu_p)} of the H_i. The resultants are exact; the
/// product over V is numeric, compared at 1e-8 relative tolerance.
pub fn verify_product_formula(
    forms: &[MultiPoly],
    h: &MultiPoly,
    l: &MultiPoly,
    zeros: &[(Vec<Complex64>, u32)],
    max_columns: usize,
) -> Result<ProductFormulaCheck, NumericError> {
    let d = h.homogeneous_degree().expect("H must be homogeneous");
    assert!(d >= 1, "H must have positive degree");
    assert_eq!(l.homogeneous_degree(), Some(1), "L must be a linear form");

    let degree_product: BigInt = forms
        .iter()
        .map(|f| BigInt::from(f.homogeneous_degree().expect("forms must be homogeneous")))
        .product();
    let got: BigInt = zeros.iter().map(|(_, mu)| BigInt::from(*mu)).sum();
    if got != degree_product {
        return Err(NumericError::BadMultiplicities { got, expected: degree_product });
    }

    let mut product = Complex64::new(1.0, 0.0);
    for (p, mu) in zeros {
        let lv = l.eval_complex(p);
        let pscale = p.iter().map(|x| x.norm()).fold(0.0, f64::max).max(1.0);
        if lv.norm() <= 1e-12 * pscale {
            return Err(NumericError::LinearFormOnZero {
                point: p.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", "),
            });
        }
        let ratio = h.eval_complex(p) / lv.powu(d);
        product *= ratio.powu(*mu);
    }

    let mut with_h = forms.to_vec();
    with_h.push(h.clone());
    let lhs = resultant(&FormSystem::new(with_h)?, max_columns)?.value;

    let mut with_ld = forms.to_vec();
    with_ld.push(l.pow(d));
    let res_ld = resultant(&FormSystem::new(with_ld)?, max_columns)?.value;

    let lhs_f = lhs.to_f64().expect("resultant fits in a double");
    let rhs = product * res_ld.to_f64().expect("resultant fits in a double");
    let scale = lhs_f.abs().max(rhs.norm()).max(1.0);
    let pass = (rhs - Complex64::new(lhs_f, 0.0)).norm() <= FORMULA_TOLERANCE * scale;
    Ok(ProductFormulaCheck {
        lhs: lhs_f,
        rhs,
        verdict: if pass { Verdict::Pass } else { Verdict::Fail },
    })
}
