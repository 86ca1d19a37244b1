//! Verification campaigns over one or all orientations, with reports.

pub mod checks;
pub mod config;
pub mod golden;
pub mod report;

use std::time::Instant;

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::cartan::RootVector;
use crate::convolution::{ConstructibleFunction, ThetaCache};
use crate::error::{Error, Result};
use crate::quiver::Quiver;
use crate::strings::{BasicStrings, SimilarityClass, StringWord};

pub use checks::Context;
pub use config::{CampaignConfig, OutputFormat};
pub use report::{Check, OrientationReport, Report, Status, SCHEMA_VERSION};

/// Longest words used against the key bracket closed form.
pub const KEY_BRACKET_LETTERS: usize = 10;
/// Ordered pairs `(M, N)` of the Euler form check: the square of this.
pub const EULER_SAMPLE: usize = 6;
/// Pairs and host size bound for the indecomposable support check.
pub const SUPPORT_PAIRS: usize = 50;
pub const SUPPORT_HOST: usize = 8;
/// Bands of height up to this are included in the rank image check.
pub const BAND_HEIGHT: usize = 3;

fn per_orientation<F>(cfg: &CampaignConfig, f: F) -> Result<Vec<OrientationReport>>
where
    F: Fn(&Context) -> Vec<Check> + Sync,
{
    cfg.validate()?;
    cfg.quivers()?
        .into_par_iter()
        .map(|q| {
            let orientation = q.orientation_string();
            let ctx = Context::new(q, cfg.t_samples.clone())?;
            Ok(OrientationReport {
                orientation,
                checks: f(&ctx),
            })
        })
        .collect()
}

fn finish(mut report: Report, parts: Vec<OrientationReport>, start: Instant) -> Report {
    for p in parts {
        report.push(p);
    }
    report.elapsed = start.elapsed();
    report
}

/// Cartan data, Coxeter identities, defect and the positive roots up to `k_max rho`.
pub fn cmd_roots(cfg: &CampaignConfig) -> Result<Report> {
    let start = Instant::now();
    let parts = per_orientation(cfg, |ctx| vec![checks::check_cartan(ctx), checks::check_defect(ctx, cfg.k_max)])?;
    Ok(finish(Report::new("roots", cfg.to_json()), parts, start))
}

fn basic_table(q: &Quiver) -> Value {
    let b = BasicStrings::new(q);
    let n = q.n();
    json!({
        "p": (0..=n).map(|i| b.p[i].format(q)).collect::<Vec<_>>(),
        "q": (0..=n).map(|i| b.q[i].format(q)).collect::<Vec<_>>(),
        "r": (1..=n).map(|i| b.r(i).format(q)).collect::<Vec<_>>(),
        "r_prime": (1..=n).map(|i| b.r_prime(i).format(q)).collect::<Vec<_>>(),
        "tau": (1..=n).map(|i| b.tau(i)).collect::<Vec<_>>(),
    })
}

/// Basic strings, the rank image of locally free strings and bands, fibers of
/// the rank map and tau-local freeness, plus the reference table at `n = 5`.
pub fn cmd_strings(cfg: &CampaignConfig) -> Result<Report> {
    let start = Instant::now();
    let parts = per_orientation(cfg, |ctx| {
        let mut out = Vec::new();
        if ctx.quiver().n() == golden::GOLDEN_N && ctx.quiver().orientation_string() == golden::GOLDEN_ORIENTATION {
            out.push(golden::golden_check(ctx.quiver()));
        }
        let mut image = checks::check_rank_image(ctx, cfg.max_letters, BAND_HEIGHT.max(cfg.k_max), cfg.k_max);
        image.data = Some(basic_table(ctx.quiver()));
        out.push(image);
        out.push(checks::check_fibers(ctx, cfg.k_max));
        out.push(checks::check_tau_locally_free(ctx, cfg.k_max));
        out
    })?;
    Ok(finish(Report::new("strings", cfg.to_json()), parts, start))
}

/// Parses a function specification:
///
/// * `theta:i` for `theta_i`,
/// * `chi:WORD` for the characteristic function of a string module,
/// * `class:STAR` for the sum over a similarity class such as `e0*.h1`,
/// * `root:a0,...,an` for `Theta_alpha` at a real root,
/// * `iso:k:i` for the isotropic function `Theta^(i)_{k rho}`.
pub fn parse_function(ctx: &Context, cache: &ThetaCache, spec: &str) -> Result<ConstructibleFunction> {
    let q = ctx.quiver();
    let bad = || Error::Parse(format!("function spec `{spec}`"));
    let (kind, rest) = spec.split_once(':').ok_or_else(bad)?;
    let num = |s: &str| s.trim().parse::<usize>().map_err(|_| bad());
    match kind {
        "theta" => ctx.alg.theta(num(rest)?),
        "chi" => ctx.alg.chi(&StringWord::parse(q, rest)?),
        "class" => ctx.alg.chi_class(&SimilarityClass::parse(q, rest)?),
        "root" => {
            let coords = rest
                .split(',')
                .map(|x| x.trim().parse::<i64>().map_err(|_| bad()))
                .collect::<Result<Vec<_>>>()?;
            let alpha = RootVector(coords);
            if alpha.n() != q.n() {
                return Err(Error::DimensionMismatch {
                    expected: q.n() + 1,
                    got: alpha.0.len(),
                });
            }
            Ok(ctx.alg.theta_real(cache, &alpha)?.0)
        }
        "iso" => {
            let (k, i) = rest.split_once(':').ok_or_else(bad)?;
            ctx.alg.theta_isotropic(cache, num(k)?, num(i)?)
        }
        _ => Err(bad()),
    }
}

/// The commutator `[f, g]` of two specified functions in every orientation.
pub fn cmd_bracket(cfg: &CampaignConfig, f_spec: &str, g_spec: &str) -> Result<Report> {
    let start = Instant::now();
    cfg.validate()?;
    let results: Vec<(String, Result<Value>)> = cfg
        .quivers()?
        .into_par_iter()
        .map(|q| {
            let name = q.orientation_string();
            let value = (|| {
                let ctx = Context::new(q.clone(), cfg.t_samples.clone())?;
                let cache = ThetaCache::default();
                let f = parse_function(&ctx, &cache, f_spec)?;
                let g = parse_function(&ctx, &cache, g_spec)?;
                let h = ctx.alg.commutator(&f, &g)?;
                Ok(json!({"f": f.to_json(&q), "g": g.to_json(&q), "bracket": h.to_json(&q), "bracket_text": h.format(&q)}))
            })();
            (name, value)
        })
        .collect();
    let mut report = Report::new("bracket", json!({"config": cfg.to_json(), "f": f_spec, "g": g_spec}));
    let mut output = serde_json::Map::new();
    let mut parts = Vec::new();
    for (name, value) in results {
        let mut c = Check::new("bracket");
        match value {
            Ok(v) => {
                c.cases += 1;
                output.insert(name.clone(), v);
            }
            Err(e) => {
                c.cases += 1;
                c.fail(json!({"error": e.to_string()}));
            }
        }
        parts.push(OrientationReport {
            orientation: name,
            checks: vec![c],
        });
    }
    report.output = Some(Value::Object(output));
    Ok(finish(report, parts, start))
}

/// Every check of the campaign.
pub fn cmd_verify(cfg: &CampaignConfig) -> Result<Report> {
    let start = Instant::now();
    let parts = per_orientation(cfg, |ctx| {
        let mut out = Vec::new();
        if ctx.quiver().n() == golden::GOLDEN_N && ctx.quiver().orientation_string() == golden::GOLDEN_ORIENTATION {
            out.push(golden::golden_check(ctx.quiver()));
        }
        out.push(checks::check_cartan(ctx));
        out.push(checks::check_defect(ctx, cfg.k_max));
        out.push(checks::check_euler_form(ctx, EULER_SAMPLE));
        out.push(checks::check_rank_image(ctx, cfg.max_letters, BAND_HEIGHT.max(cfg.k_max), cfg.k_max));
        out.push(checks::check_fibers(ctx, cfg.k_max));
        out.push(checks::check_tau_locally_free(ctx, cfg.k_max));
        out.push(checks::check_key_bracket(ctx, KEY_BRACKET_LETTERS.min(cfg.max_letters)));
        out.push(checks::check_serre(ctx));
        out.push(checks::check_theta_real(ctx, cfg.k_max));
        out.push(checks::check_isotropic(ctx, cfg.k_max));
        out.push(checks::check_indecomposable_support(ctx, SUPPORT_HOST, SUPPORT_PAIRS));
        out.push(checks::check_tier_consistency(ctx));
        out
    })?;
    Ok(finish(Report::new("verify", cfg.to_json()), parts, start))
}

