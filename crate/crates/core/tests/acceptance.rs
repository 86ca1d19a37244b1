//! One PASS/FAIL line per acceptance criterion.

use std::time::{Duration, Instant};

use rayon::prelude::*;

use affstr::campaign::checks::{self, Context};
use affstr::campaign::config::letters_needed;
use affstr::campaign::golden::{golden_check, GOLDEN_N, GOLDEN_ORIENTATION};
use affstr::campaign::{Check, BAND_HEIGHT, EULER_SAMPLE, KEY_BRACKET_LETTERS, SUPPORT_HOST, SUPPORT_PAIRS};
use affstr::convolution::default_t_samples;
use affstr::Quiver;

const K_MAX: usize = 2;

fn contexts(n: usize) -> Vec<Context> {
    Quiver::all(n)
        .unwrap()
        .into_iter()
        .map(|q| Context::new(q, default_t_samples()).unwrap())
        .collect()
}

struct Outcome {
    ok: bool,
    detail: String,
}

fn summarize(checks: Vec<(String, Check)>) -> Outcome {
    let cases: usize = checks.iter().map(|(_, c)| c.cases).sum();
    let failed: Vec<String> = checks
        .iter()
        .filter(|(_, c)| !c.passed())
        .map(|(o, c)| format!("{o}/{} {:?}", c.name, c.counterexamples.first()))
        .collect();
    Outcome {
        ok: failed.is_empty() && cases > 0,
        detail: if failed.is_empty() {
            format!("{} checks, {cases} cases", checks.len())
        } else {
            format!("{} failing: {}", failed.len(), failed.join("; "))
        },
    }
}

fn run_over(ctxs: &[&Context], f: impl Fn(&Context) -> Vec<Check> + Sync) -> Outcome {
    let checks: Vec<(String, Check)> = ctxs
        .par_iter()
        .flat_map_iter(|ctx| {
            let o = ctx.quiver().orientation_string();
            f(ctx).into_iter().map(move |c| (o.clone(), c))
        })
        .collect();
    summarize(checks)
}

fn timed(limit: Option<Duration>, body: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let mut out = body();
    let elapsed = start.elapsed();
    out.detail = format!("{} in {elapsed:.2?}", out.detail);
    if let Some(limit) = limit {
        if elapsed > limit {
            out.ok = false;
            out.detail = format!("{} (limit {limit:?})", out.detail);
        }
    }
    out
}

#[test]
fn acceptance() {
    let by_n: Vec<Vec<Context>> = (2..=4).map(contexts).collect();
    let upto = |n: usize| -> Vec<&Context> { by_n[..n - 1].iter().flatten().collect() };
    let small = upto(3);
    let all = upto(4);

    let mut results: Vec<(&str, Outcome)> = Vec::new();

    results.push((
        "golden example n=5 LRRRL, typos flagged",
        timed(Some(Duration::from_secs(1)), || {
            let q = Quiver::parse(GOLDEN_N, GOLDEN_ORIENTATION).unwrap();
            let c = golden_check(&q);
            let typos = c.notes.len();
            let mut out = summarize(vec![(GOLDEN_ORIENTATION.to_string(), c)]);
            out.detail = format!("{}, {typos} typos flagged", out.detail);
            out.ok &= typos > 0;
            out
        }),
    ));

    results.push((
        "rank image of strings and bands equals the roots up to 2 rho, n=2,3,4",
        timed(Some(Duration::from_secs(120)), || {
            run_over(&all, |ctx| {
                let n = ctx.quiver().n();
                let letters = (2 * n + 2) * 3;
                assert!(letters >= letters_needed(n, K_MAX));
                vec![checks::check_rank_image(ctx, letters, BAND_HEIGHT, K_MAX)]
            })
        }),
    ));

    results.push((
        "fibers of the rank map and tau-locally free members, n=2,3,4",
        timed(None, || {
            run_over(&all, |ctx| {
                vec![
                    checks::check_fibers(ctx, K_MAX),
                    checks::check_tau_locally_free(ctx, K_MAX),
                ]
            })
        }),
    ));

    results.push((
        "Cartan, Coxeter, defect and Euler form identities, n=2,3,4",
        timed(None, || {
            run_over(&all, |ctx| {
                vec![
                    checks::check_cartan(ctx),
                    checks::check_defect(ctx, K_MAX),
                    checks::check_euler_form(ctx, EULER_SAMPLE),
                ]
            })
        }),
    ));

    results.push((
        "key bracket closed form equals convolution, |w| <= 10, n=2,3",
        timed(Some(Duration::from_secs(300)), || {
            run_over(&small, |ctx| vec![checks::check_key_bracket(ctx, KEY_BRACKET_LETTERS)])
        }),
    ));

    results.push((
        "Serre relations, n=2,3,4",
        timed(None, || run_over(&all, |ctx| vec![checks::check_serre(ctx)])),
    ));

    results.push((
        "real and isotropic root functions, n=2,3, k<=2",
        timed(None, || {
            run_over(&small, |ctx| {
                vec![
                    checks::check_theta_real(ctx, K_MAX),
                    checks::check_isotropic(ctx, K_MAX),
                ]
            })
        }),
    ));

    results.push((
        "products of distinct indecomposables have indecomposable support, 50 pairs",
        timed(None, || {
            run_over(&small, |ctx| {
                vec![checks::check_indecomposable_support(ctx, SUPPORT_HOST, SUPPORT_PAIRS)]
            })
        }),
    ));

    results.push((
        "Hom-based band evaluation agrees with the subset count at k=1",
        timed(None, || run_over(&small, |ctx| vec![checks::check_tier_consistency(ctx)])),
    ));

    let mut failed = 0;
    for (i, (name, out)) in results.iter().enumerate() {
        let tag = if out.ok { "PASS" } else { "FAIL" };
        println!("{tag} [{}] {name}: {}", i + 1, out.detail);
        failed += usize::from(!out.ok);
    }
    assert_eq!(failed, 0, "{failed} acceptance criteria failed");
}
