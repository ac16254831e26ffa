//! Exact invariants of a polynomial map — the geometric degree d(F), the
//! multiplicity mu of the zero fiber, the defect delta0 = d(F) - mu — and
//! the growth-exponent lower bounds they determine:
//!
//! * defect bound: |F(z)| >= C |z|^{-delta0} for |z| large,
//! * zero-fiber bound: exponent mu - d1*...*dn + min d_i,
//! * general-position comparison: exponent -d1*...*dn + min d_i.
//!
//! Everything is computed exactly through slices of the elimination curve;
//! the hyperplane condition is certified first and nothing that depends on
//! it is reported without a certificate.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::macaulay::Method;
use crate::pgcurve::{
    choose_g, pg_slice, LinearForm, PgError, StarCertificate, DEFAULT_CERT_ATTEMPTS,
};
use crate::polyring::PolyMap;

/// Fresh-seed mask for the single retry of the generic draw.
const RESEED: u64 = 0x9e37_79b9_7f4a_7c15;

/// Deterministic knobs for [`analyze`].
#[derive(Clone, Debug)]
pub struct AnalyzeOptions {
    pub seed: u64,
    pub attempts: usize,
    pub max_columns: usize,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions {
            seed: 0,
            attempts: DEFAULT_CERT_ATTEMPTS,
            max_columns: crate::macaulay::DEFAULT_MAX_COLUMNS,
        }
    }
}

#[derive(Debug, Error)]
pub enum AnalysisError {
    #[error(transparent)]
    Pg(#[from] PgError),
    #[error("generic draws landed on degenerate w twice in a row; giving up")]
    GenericityFailure,
}

/// Largest slice degree over three independent integer draws of w in
/// [-10^6, 10^6]^n; equal to the fiber cardinality (with multiplicities)
/// for almost every w. Returns the degree and the draws used.
pub fn geometric_degree(
    f: &PolyMap,
    cert: &StarCertificate,
    seed: u64,
    max_columns: usize,
) -> Result<(u32, Vec<Vec<BigInt>>), AnalysisError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut draws = Vec::new();
    let mut best = 0u32;
    let mut misses = 0usize;
    while draws.len() < 3 {
        let w_int: Vec<BigInt> = (0..f.n())
            .map(|_| BigInt::from(rng.gen_range(-1_000_000i64..=1_000_000)))
            .collect();
        let w: Vec<BigRational> =
            w_int.iter().map(|x| BigRational::from_integer(x.clone())).collect();
        match pg_slice(f, &cert.g, &w, max_columns) {
            Ok(slice) => {
                best = best.max(slice.deg_t());
                draws.push(w_int);
            }
            // a draw on the non-properness set; astronomically unlikely,
            // handled by drawing again a bounded number of times
            Err(PgError::ZeroSlice { .. }) if misses < 8 => misses += 1,
            Err(e) => return Err(e.into()),
        }
    }
    Ok((best, draws))
}

/// Total multiplicity of the zero fiber: deg_T of the slice at w = 0.
pub fn mu_at_zero(
    f: &PolyMap,
    cert: &StarCertificate,
    max_columns: usize,
) -> Result<u32, AnalysisError> {
    let w = vec![BigRational::zero(); f.n()];
    Ok(pg_slice(f, &cert.g, &w, max_columns)?.deg_t())
}

/// The defect d(F) - mu, always non-negative: a negative value means every
/// generic draw was degenerate, so one retry runs with a fresh seed before
/// giving up.
pub fn delta0(
    f: &PolyMap,
    cert: &StarCertificate,
    seed: u64,
    max_columns: usize,
) -> Result<u32, AnalysisError> {
    let mu = mu_at_zero(f, cert, max_columns)?;
    let (d, _) = geometric_degree(f, cert, seed, max_columns)?;
    if d >= mu {
        return Ok(d - mu);
    }
    let (d, _) = geometric_degree(f, cert, seed ^ RESEED, max_columns)?;
    if d >= mu {
        Ok(d - mu)
    } else {
        Err(AnalysisError::GenericityFailure)
    }
}

/// The three lower-bound exponents: (-delta0, mu - prod + min, -prod + min).
pub fn exponent_bounds(mu: u32, delta0: u32, degrees: &[u32]) -> (BigInt, BigInt, BigInt) {
    let bezout: BigInt = degrees.iter().map(|&d| BigInt::from(d)).product();
    let min_d = BigInt::from(*degrees.iter().min().expect("non-empty degree list"));
    let thm11 = -BigInt::from(delta0);
    let thm12 = BigInt::from(mu) - &bezout + &min_d;
    let kollar = -bezout + min_d;
    (thm11, thm12, kollar)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Classification {
    /// delta0 = 0 and d(F) > 0: the fiber over 0 cannot escape to infinity.
    ProperAt0,
    /// delta0 > 0.
    NonproperAt0,
    /// d(F) = 0: the components satisfy a polynomial relation, every fiber
    /// is empty or infinite.
    AlgebraicallyDependent,
}

pub fn classify(d_of_f: u32, delta0: u32) -> Classification {
    if d_of_f == 0 {
        Classification::AlgebraicallyDependent
    } else if delta0 == 0 {
        Classification::ProperAt0
    } else {
        Classification::NonproperAt0
    }
}

fn ser_int<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

fn ser_opt_int<S: Serializer>(v: &Option<BigInt>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(x) => s.serialize_some(&x.to_string()),
        None => s.serialize_none(),
    }
}

fn ser_degrees<S: Serializer>(v: &[u32], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|d| d.to_string()))
}

/// The certificate in serializable form.
#[derive(Clone, Debug, Serialize)]
pub struct CertificateReport {
    #[serde(rename = "G")]
    pub g: String,
    pub s0: String,
    pub witness: String,
    pub witness_method: String,
    pub implies_finiteness: bool,
}

/// Full result of an analysis. Integer fields serialize as exact decimal
/// strings; every certificate-dependent field is `null` when the hyperplane
/// condition could not be certified.
#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    #[serde(serialize_with = "ser_degrees")]
    pub degrees: Vec<u32>,
    #[serde(serialize_with = "ser_int")]
    pub bezout: BigInt,
    #[serde(rename = "d_of_F", serialize_with = "ser_opt_int")]
    pub d_of_f: Option<BigInt>,
    #[serde(serialize_with = "ser_opt_int")]
    pub mu: Option<BigInt>,
    #[serde(serialize_with = "ser_opt_int")]
    pub delta0: Option<BigInt>,
    #[serde(serialize_with = "ser_opt_int")]
    pub thm11_exponent: Option<BigInt>,
    #[serde(serialize_with = "ser_opt_int")]
    pub thm12_exponent: Option<BigInt>,
    #[serde(serialize_with = "ser_opt_int")]
    pub kollar_exponent: Option<BigInt>,
    pub proper_at_0: Option<bool>,
    pub algebraically_dependent: Option<bool>,
    #[serde(rename = "G_used")]
    pub g_used: Option<String>,
    pub certificate: Option<CertificateReport>,
    pub generic_w_draws: Vec<Vec<String>>,
}

impl AnalysisReport {
    pub fn certified(&self) -> bool {
        self.certificate.is_some()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let degs =
            self.degrees.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(", ");
        writeln!(out, "degrees:        ({degs})").unwrap();
        writeln!(out, "degree product: {}", self.bezout).unwrap();
        match (&self.d_of_f, &self.mu, &self.delta0) {
            (Some(d), Some(mu), Some(delta)) => {
                writeln!(out, "d(F):           {d}").unwrap();
                writeln!(out, "mu(0):          {mu}").unwrap();
                writeln!(out, "delta0:         {delta}").unwrap();
                writeln!(
                    out,
                    "exponents:      defect {}, zero-fiber {}, comparison {}",
                    self.thm11_exponent.as_ref().unwrap(),
                    self.thm12_exponent.as_ref().unwrap(),
                    self.kollar_exponent.as_ref().unwrap()
                )
                .unwrap();
                let class = if self.algebraically_dependent == Some(true) {
                    "algebraically dependent (d(F) = 0)"
                } else if self.proper_at_0 == Some(true) {
                    "proper at 0"
                } else {
                    "non-proper at 0"
                };
                writeln!(out, "classification: {class}").unwrap();
                if let Some(cert) = &self.certificate {
                    writeln!(out, "G:              {} (s0 = {})", cert.g, cert.s0).unwrap();
                }
            }
            _ => {
                writeln!(
                    out,
                    "hypothesis not certified: no linear form passed the budget; \
                     growth exponents are not reported"
                )
                .unwrap();
            }
        }
        out
    }
}

/// Exact data kept alongside the report when certification succeeded.
#[derive(Clone, Debug)]
pub struct Certified {
    pub g: LinearForm,
    pub certificate: StarCertificate,
    pub d_of_f: u32,
    pub mu: u32,
    pub delta0: u32,
    pub classification: Classification,
}

#[derive(Clone, Debug)]
pub struct Analysis {
    pub report: AnalysisReport,
    /// Present exactly when the hyperplane condition was certified.
    pub certified: Option<Certified>,
}

/// Orchestrates certification, the three invariants, the exponent bounds
/// and the classification. Deterministic for fixed options.
pub fn analyze(f: &PolyMap, opts: &AnalyzeOptions) -> Result<Analysis, AnalysisError> {
    let degrees = f.degrees().to_vec();
    let bezout = f.bezout();

    let (g, certificate) = match choose_g(f, opts.seed, opts.attempts, opts.max_columns) {
        Ok(pair) => pair,
        Err(PgError::NoCertifiedForm { .. }) => {
            let report = AnalysisReport {
                degrees,
                bezout,
                d_of_f: None,
                mu: None,
                delta0: None,
                thm11_exponent: None,
                thm12_exponent: None,
                kollar_exponent: None,
                proper_at_0: None,
                algebraically_dependent: None,
                g_used: None,
                certificate: None,
                generic_w_draws: Vec::new(),
            };
            return Ok(Analysis { report, certified: None });
        }
        Err(e) => return Err(e.into()),
    };

    let mu = mu_at_zero(f, &certificate, opts.max_columns)?;
    let (mut d, mut draws) = geometric_degree(f, &certificate, opts.seed, opts.max_columns)?;
    if d < mu {
        let retry = geometric_degree(f, &certificate, opts.seed ^ RESEED, opts.max_columns)?;
        d = retry.0;
        draws = retry.1;
        if d < mu {
            return Err(AnalysisError::GenericityFailure);
        }
    }
    let delta = d - mu;
    let (thm11, thm12, kollar) = exponent_bounds(mu, delta, &degrees);
    let classification = classify(d, delta);

    // structural guarantees; a violation here is a bug, not bad input
    assert!(BigInt::from(d) <= bezout, "geometric degree exceeds the degree product");
    assert!(kollar <= thm12, "comparison exponent must not exceed the zero-fiber exponent");
    assert!(delta == 0 || thm11 >= thm12, "defect bound must dominate in the non-proper case");
    if classification == Classification::AlgebraicallyDependent {
        assert!(mu == 0, "a degenerate map has an empty or infinite zero fiber");
    }

    let report = AnalysisReport {
        degrees,
        bezout,
        d_of_f: Some(BigInt::from(d)),
        mu: Some(BigInt::from(mu)),
        delta0: Some(BigInt::from(delta)),
        thm11_exponent: Some(thm11),
        thm12_exponent: Some(thm12),
        kollar_exponent: Some(kollar),
        proper_at_0: Some(classification == Classification::ProperAt0),
        algebraically_dependent: Some(classification == Classification::AlgebraicallyDependent),
        g_used: Some(g.render()),
        certificate: Some(CertificateReport {
            g: g.render(),
            s0: certificate.s0.to_string(),
            witness: certificate.witness.value.to_string(),
            witness_method: match certificate.witness.method {
                Method::DirectQuotient => "direct_quotient".to_string(),
                Method::PerturbationInterpolation => "perturbation_interpolation".to_string(),
            },
            implies_finiteness: certificate.implies_finiteness,
        }),
        generic_w_draws: draws
            .iter()
            .map(|w| w.iter().map(|x| x.to_string()).collect())
            .collect(),
    };
    Ok(Analysis {
        report,
        certified: Some(Certified {
            g,
            certificate,
            d_of_f: d,
            mu,
            delta0: delta,
            classification,
        }),
    })
}
