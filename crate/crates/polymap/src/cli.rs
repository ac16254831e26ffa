//! Command-line front end: parse a system file, run the pipeline
//! (certify -> elimination curve -> invariants -> bounds -> optional
//! numeric verification) and render text or JSON reports.
//!
//! Exit-code contract: 0 on success, 1 on parse/IO/verification errors,
//! 2 when the hyperplane-condition hypothesis could not be certified
//! (the report is still printed, with the dependent fields nulled).

use num_rational::BigRational;
use serde_json::json;
use thiserror::Error;

use crate::analysis::{analyze, AnalysisError, AnalyzeOptions};
use crate::macaulay::{resultant, FormSystem, MacaulayError, Method, DEFAULT_MAX_COLUMNS};
use crate::numeric::{
    verify_growth, verify_root_growth, NumericError, RootGrowthCheck, Verdict, DEFAULT_BUDGET,
    DEFAULT_RADII,
};
use crate::pgcurve::{
    choose_g, pg_full, pg_slice, PgError, DEFAULT_CERT_ATTEMPTS, DEFAULT_GRID_CAP,
};
use crate::polyring::{parse::parse_system, PolyError};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Json,
}

/// Everything a command run depends on; the seed fully determines every
/// random draw, so equal configs give byte-identical output.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub seed: u64,
    pub radii: Vec<f64>,
    pub samples_per_radius: usize,
    pub certificate_attempts: usize,
    pub matrix_size_cap: usize,
    pub grid_cap: usize,
    pub format: OutputFormat,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            seed: 0,
            radii: DEFAULT_RADII.to_vec(),
            samples_per_radius: DEFAULT_BUDGET,
            certificate_attempts: DEFAULT_CERT_ATTEMPTS,
            matrix_size_cap: DEFAULT_MAX_COLUMNS,
            grid_cap: DEFAULT_GRID_CAP,
            format: OutputFormat::Text,
        }
    }
}

/// How a command ended; maps onto the process exit code.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Success,
    Failure,
    NotCertified,
}

impl Outcome {
    pub fn exit_code(self) -> i32 {
        match self {
            Outcome::Success => 0,
            Outcome::Failure => 1,
            Outcome::NotCertified => 2,
        }
    }
}

#[derive(Clone, Debug)]
pub struct CommandOutput {
    pub stdout: String,
    pub outcome: Outcome,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Parse(#[from] PolyError),
    #[error(transparent)]
    Macaulay(#[from] MacaulayError),
    #[error(transparent)]
    Pg(#[from] PgError),
    #[error(transparent)]
    Analysis(#[from] AnalysisError),
    #[error(transparent)]
    Numeric(#[from] NumericError),
    #[error("the resultant needs at least two forms, got {got}")]
    TooFewForms { got: usize },
    #[error("--w needs exactly {expected} comma-separated rationals, got {got}")]
    WrongWLength { expected: usize, got: usize },
    #[error("invalid rational '{text}' in --w (use integers or p/q)")]
    BadRational { text: String },
}

fn method_slug(m: Method) -> &'static str {
    match m {
        Method::DirectQuotient => "direct_quotient",
        Method::PerturbationInterpolation => "perturbation_interpolation",
    }
}

/// Invariants, exponent bounds and classification of the map in `source`.
pub fn cmd_analyze(source: &str, config: &RunConfig) -> Result<CommandOutput, CliError> {
    let parsed = parse_system(source)?;
    let opts = AnalyzeOptions {
        seed: config.seed,
        attempts: config.certificate_attempts,
        max_columns: config.matrix_size_cap,
    };
    let analysis = analyze(&parsed.map, &opts)?;
    let stdout = match config.format {
        OutputFormat::Json => format!("{}\n", analysis.report.to_json()),
        OutputFormat::Text => analysis.report.to_text(),
    };
    let outcome =
        if analysis.certified.is_some() { Outcome::Success } else { Outcome::NotCertified };
    Ok(CommandOutput { stdout, outcome })
}

/// Exact resultant of the forms listed in `source` (n+1 homogeneous forms
/// in n+1 variables).
pub fn cmd_resultant(source: &str, config: &RunConfig) -> Result<CommandOutput, CliError> {
    let parsed = parse_system(source)?;
    let forms = parsed.map.components().to_vec();
    if forms.len() < 2 {
        return Err(CliError::TooFewForms { got: forms.len() });
    }
    let system = FormSystem::new(forms)?;
    let r = resultant(&system, config.matrix_size_cap)?;
    let stdout = match config.format {
        OutputFormat::Json => format!(
            "{}\n",
            serde_json::to_string_pretty(&json!({
                "resultant": r.value.to_string(),
                "method": method_slug(r.method),
                "normalization": r.sign_convention,
            }))
            .expect("serialization cannot fail")
        ),
        OutputFormat::Text => format!(
            "resultant:     {}\nmethod:        {}\nnormalization: {}\n",
            r.value,
            method_slug(r.method),
            r.sign_convention
        ),
    };
    Ok(CommandOutput { stdout, outcome: Outcome::Success })
}

fn parse_w(csv: &str, expected: usize) -> Result<Vec<BigRational>, CliError> {
    let parts: Vec<&str> = csv.split(',').map(str::trim).collect();
    if parts.len() != expected {
        return Err(CliError::WrongWLength { expected, got: parts.len() });
    }
    parts
        .iter()
        .map(|p| p.parse::<BigRational>().map_err(|_| CliError::BadRational { text: p.to_string() }))
        .collect()
}

/// Exact slice of the elimination curve of the map in `source` at the
/// point w given as comma-separated rationals.
pub fn cmd_pg(source: &str, w_csv: &str, config: &RunConfig) -> Result<CommandOutput, CliError> {
    let parsed = parse_system(source)?;
    let w = parse_w(w_csv, parsed.map.n())?;
    let (g, _cert) = match choose_g(
        &parsed.map,
        config.seed,
        config.certificate_attempts,
        config.matrix_size_cap,
    ) {
        Ok(pair) => pair,
        Err(PgError::NoCertifiedForm { .. }) => {
            let stdout = match config.format {
                OutputFormat::Json => format!(
                    "{}\n",
                    serde_json::to_string_pretty(&json!({
                        "certified": false,
                        "G": null,
                        "slice": null,
                    }))
                    .expect("serialization cannot fail")
                ),
                OutputFormat::Text => {
                    "hypothesis not certified: no slice computed\n".to_string()
                }
            };
            return Ok(CommandOutput { stdout, outcome: Outcome::NotCertified });
        }
        Err(e) => return Err(e.into()),
    };
    let slice = pg_slice(&parsed.map, &g, &w, config.matrix_size_cap)?;
    let rendered = slice.poly_in_t.render(&["T"]);
    let w_strings: Vec<String> = w.iter().map(|x| x.to_string()).collect();
    let stdout = match config.format {
        OutputFormat::Json => format!(
            "{}\n",
            serde_json::to_string_pretty(&json!({
                "certified": true,
                "G": g.render(),
                "w": w_strings,
                "slice": rendered,
                "deg_T": slice.deg_t().to_string(),
            }))
            .expect("serialization cannot fail")
        ),
        OutputFormat::Text => format!(
            "G:        {}\nw:        ({})\nslice:    {}\ndeg_T:    {}\n",
            g.render(),
            w_strings.join(", "),
            rendered,
            slice.deg_t()
        ),
    };
    Ok(CommandOutput { stdout, outcome: Outcome::Success })
}

/// Numeric validation of the certified exponents: sphere growth plus root
/// growth of the elimination curve near w = 0.
pub fn cmd_verify(source: &str, config: &RunConfig) -> Result<CommandOutput, CliError> {
    let parsed = parse_system(source)?;
    let opts = AnalyzeOptions {
        seed: config.seed,
        attempts: config.certificate_attempts,
        max_columns: config.matrix_size_cap,
    };
    let analysis = analyze(&parsed.map, &opts)?;
    let Some(cert) = &analysis.certified else {
        let stdout = match config.format {
            OutputFormat::Json => format!(
                "{}\n",
                serde_json::to_string_pretty(&json!({
                    "certified": false,
                    "growth": null,
                    "root_growth": null,
                    "overall": "NOT CERTIFIED",
                }))
                .expect("serialization cannot fail")
            ),
            OutputFormat::Text => {
                "hypothesis not certified: nothing to verify\n".to_string()
            }
        };
        return Ok(CommandOutput { stdout, outcome: Outcome::NotCertified });
    };

    let growth = verify_growth(
        &parsed.map,
        &analysis.report,
        &config.radii,
        config.samples_per_radius,
        config.seed,
        None,
    )?;
    let root = if cert.delta0 == 0 {
        RootGrowthCheck::skipped(0)
    } else {
        let full = pg_full(&parsed.map, &cert.g, config.grid_cap, config.matrix_size_cap)?;
        verify_root_growth(&full, cert.delta0, config.seed)?
    };

    let all_ok = growth.verdict != Verdict::Fail && root.verdict != Verdict::Fail;
    let overall = if all_ok { "PASS" } else { "FAIL" };
    let stdout = match config.format {
        OutputFormat::Json => format!(
            "{}\n",
            serde_json::to_string_pretty(&json!({
                "certified": true,
                "growth": {
                    "verdict": growth.verdict.to_string(),
                    "fitted_exponent": growth.profile.fitted_exponent,
                    "bound_exponent": growth.bound_exponent,
                    "empirical_C": growth.profile.empirical_c,
                    "flat": growth.profile.flat,
                    "radii": growth.profile.radii,
                    "min_estimates": growth.profile.min_estimates,
                },
                "root_growth": {
                    "verdict": root.verdict.to_string(),
                    "delta": root.delta.to_string(),
                    "fitted_exponent": root.profile.as_ref().map(|p| p.fitted_exponent),
                    "note": root.note,
                },
                "overall": overall,
            }))
            .expect("serialization cannot fail")
        ),
        OutputFormat::Text => {
            let mut out = String::new();
            out.push_str(&format!(
                "growth:      {} (fitted slope {:.4}, bound {:.4}, empirical C {:.4e})\n",
                growth.verdict,
                growth.profile.fitted_exponent,
                growth.bound_exponent,
                growth.profile.empirical_c
            ));
            match &root.profile {
                Some(p) => out.push_str(&format!(
                    "root growth: {} (fitted slope {:.4}, delta {})\n",
                    root.verdict, p.fitted_exponent, root.delta
                )),
                None => {
                    out.push_str(&format!("root growth: {} ({})\n", root.verdict, root.note))
                }
            }
            out.push_str(&format!("overall:     {overall}\n"));
            out
        }
    };
    Ok(CommandOutput {
        stdout,
        outcome: if all_ok { Outcome::Success } else { Outcome::Failure },
    })
}
