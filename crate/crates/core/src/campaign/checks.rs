use std::collections::BTreeSet;

use num_traits::Signed;
use serde_json::json;

use crate::cartan::{CartanData, RootVector};
use crate::convolution::{
    coefficient_rank, linear_independent, stable_band, ConstructibleFunction, ConvolutionAlgebra, Indecomposable,
    Recipe, Symbol, ThetaCache,
};
use crate::error::Result;
use crate::linalg::{q as rat, Matrix, Rational};
use crate::modules::{ext1_dim, hom_dim, string_module};
use crate::quiver::Quiver;
use crate::strings::{
    bands_within, canonical_string, enumerate_strings, root_to_classes, strings_within, BasicStrings,
    SimilarityClass, StringFilter, StringWord,
};

use super::report::Check;

/// Everything the checks need for one orientation.
pub struct Context {
    pub cd: CartanData,
    pub alg: ConvolutionAlgebra,
    pub cache: ThetaCache,
}

impl Context {
    pub fn new(q: Quiver, t_samples: Vec<Rational>) -> Result<Self> {
        let cd = CartanData::new(q);
        let alg = ConvolutionAlgebra::new(cd.clone()).with_t_samples(t_samples)?;
        Ok(Context {
            cd,
            alg,
            cache: ThetaCache::default(),
        })
    }

    pub fn quiver(&self) -> &Quiver {
        &self.cd.quiver
    }

    pub fn basic(&self) -> &BasicStrings {
        self.alg.basic()
    }

    fn n(&self) -> usize {
        self.cd.n()
    }
}

fn err(c: &mut Check, what: impl serde::Serialize, e: crate::Error) {
    c.cases += 1;
    c.fail(json!({"case": what, "error": e.to_string()}));
}

/// `R + R^T = D C`, integrality of the Coxeter matrix, `c rho = rho` and
/// `c rk(P_i) = -rk(I_i)`.
pub fn check_cartan(ctx: &Context) -> Check {
    let mut c = Check::new("cartan_identities");
    let cd = &ctx.cd;
    let n = ctx.n();
    for i in 0..=n {
        for j in 0..=n {
            let lhs = cd.r[i][j] + cd.r[j][i];
            let rhs = cd.d[i] * cd.c[i][j];
            c.case(lhs == rhs, || json!({"entry": [i, j], "r_plus_rt": lhs, "dc": rhs}));
        }
    }
    let cox = Matrix::from_i64(&cd.coxeter);
    let inv = Matrix::from_i64(&cd.coxeter_inv);
    c.case(&cox * &inv == Matrix::identity(n + 1), || json!({"coxeter_inverse": "not inverse"}));
    let rho = RootVector::rho(n);
    let crho = cd.coxeter_apply(&rho);
    c.case(crho == rho, || json!({"coxeter_rho": crho.to_string()}));
    let q = ctx.quiver();
    for i in 0..=n {
        match (ctx.basic().p[i].rank_vector(q), ctx.basic().q[i].rank_vector(q)) {
            (Ok(p), Ok(inj)) => {
                let cp = cd.coxeter_apply(&p);
                c.case(cp == -&inj, || json!({"vertex": i, "c_rk_p": cp.to_string(), "rk_i": inj.to_string()}));
            }
            (Err(e), _) | (_, Err(e)) => err(&mut c, i, e),
        }
    }
    c
}

/// Defect through the Euler form against the sink and source formula, on
/// simple vectors and every root up to `k_max rho`, with the root table as data.
pub fn check_defect(ctx: &Context, k_max: usize) -> Check {
    let mut c = Check::new("defect");
    let cd = &ctx.cd;
    let n = ctx.n();
    let roots = cd.enumerate_positive_roots(k_max as i64);
    let vectors: Vec<RootVector> = (0..=n)
        .map(|i| RootVector::simple(n, i))
        .chain(roots.iter().map(|r| r.coords.clone()))
        .collect();
    for v in &vectors {
        let (a, b) = (cd.defect(v), cd.defect_by_sinks(v));
        c.case(a.is_ok() && a == b, || json!({"vector": v.to_string(), "form": format!("{a:?}"), "sinks": format!("{b:?}")}));
    }
    c.data = Some(json!({
        "sinks": ctx.quiver().sinks(),
        "sources": ctx.quiver().sources(),
        "roots": roots.iter().map(|r| json!({
            "coords": r.coords.0,
            "label": r.label.to_string(),
            "real": r.real,
            "long": r.long,
            "defect": r.defect,
        })).collect::<Vec<_>>(),
    }));
    c
}

/// The locally free string modules used for Euler form checks: canonical
/// strings with at most `max_letters` letters, in enumeration order.
pub fn euler_sample(q: &Quiver, count: usize, max_letters: usize) -> Vec<StringWord> {
    let mut seen = BTreeSet::new();
    enumerate_strings(q, max_letters, StringFilter::LocallyFree)
        .into_iter()
        .map(|w| canonical_string(&w))
        .filter(|w| seen.insert(w.clone()))
        .take(count)
        .collect()
}

/// `<rk M, rk N> = dim Hom(M, N) - dim Ext^1(M, N)` on all ordered pairs of
/// the sample, `sample^2` pairs in total.
pub fn check_euler_form(ctx: &Context, sample: usize) -> Check {
    let mut c = Check::new("euler_form");
    let q = ctx.quiver();
    let words = euler_sample(q, sample, 4);
    let modules: Vec<_> = words.iter().map(|w| string_module(q, w)).collect();
    for (x, mx) in words.iter().zip(&modules) {
        for (y, my) in words.iter().zip(&modules) {
            let (rx, ry) = (x.rank_vector(q), y.rank_vector(q));
            let (Ok(rx), Ok(ry)) = (rx, ry) else { continue };
            let form = ctx.cd.euler_form(&rx, &ry).unwrap_or(i64::MIN);
            let (h, e) = (hom_dim(mx, my) as i64, ext1_dim(q, mx, my) as i64);
            c.case(form == h - e, || {
                json!({"m": x.format(q), "n": y.format(q), "form": form, "hom": h, "ext1": e})
            });
        }
    }
    c
}

fn attained_ranks(ctx: &Context, max_letters: usize, max_h: usize) -> (Vec<(String, RootVector)>, Vec<String>) {
    let q = ctx.quiver();
    let mut out = Vec::new();
    let mut bad = Vec::new();
    for w in enumerate_strings(q, max_letters, StringFilter::LocallyFree) {
        match w.rank_vector(q) {
            Ok(r) => out.push((w.format(q), r)),
            Err(e) => bad.push(format!("{}: {e}", w.format(q))),
        }
    }
    for b in bands_within(q, &RootVector::rho(ctx.n()).scaled(max_h as i64)) {
        match b.rank_vector(q) {
            Ok(r) => out.push((format!("band:{}", b.format(q)), r)),
            Err(e) => bad.push(format!("band:{}: {e}", b.format(q))),
        }
    }
    (out, bad)
}

/// Every rank vector of a locally free string with at most `max_letters`
/// letters, and of every band of height at most `max_h`, is a positive root;
/// and every root up to `k_max rho` is attained.
pub fn check_rank_image(ctx: &Context, max_letters: usize, max_h: usize, k_max: usize) -> Check {
    let mut c = Check::new("rank_image");
    let (ranks, bad) = attained_ranks(ctx, max_letters, max_h);
    for b in bad {
        c.cases += 1;
        c.fail(json!({"word": b}));
    }
    let mut attained = BTreeSet::new();
    for (w, r) in &ranks {
        c.case(ctx.cd.is_positive_root(r), || json!({"word": w, "rank": r.to_string()}));
        attained.insert(r.clone());
    }
    for info in ctx.cd.enumerate_positive_roots(k_max as i64) {
        c.case(attained.contains(&info.coords), || {
            json!({"root": info.label.to_string(), "coords": info.coords.to_string(), "attained": false})
        });
    }
    c
}

/// Locally free words of rank exactly `alpha`, found by walking inside `alpha`.
pub fn fiber(q: &Quiver, alpha: &RootVector) -> BTreeSet<StringWord> {
    strings_within(q, alpha)
        .into_iter()
        .filter(|w| w.is_locally_free(q) && w.rank_vector(q).as_ref() == Ok(alpha))
        .collect()
}

/// Fibers of the rank map up to `k_max rho`, enumerated, against the closed
/// forms: `[w] u [w^-1]` over real roots, self-inverse exactly for long roots,
/// and `2n` disjoint classes over `k rho`.
pub fn check_fibers(ctx: &Context, k_max: usize) -> Check {
    let mut c = Check::new("fibers");
    let q = ctx.quiver();
    let n = ctx.n();
    for info in ctx.cd.enumerate_positive_roots(k_max as i64) {
        let alpha = &info.coords;
        let classes = match root_to_classes(&ctx.cd, alpha) {
            Ok(v) => v,
            Err(e) => {
                err(&mut c, info.label.to_string(), e);
                continue;
            }
        };
        let mut all: BTreeSet<SimilarityClass> = BTreeSet::new();
        let mut members = BTreeSet::new();
        let mut overlap = false;
        for cl in &classes {
            for x in [cl.clone(), cl.inverse()] {
                if all.insert(x.clone()) {
                    for w in x.members(q) {
                        overlap |= !members.insert(w);
                    }
                }
            }
        }
        let found = fiber(q, alpha);
        let label = info.label.to_string();
        c.case(found == members && !overlap, || {
            json!({"root": label, "enumerated": found.len(), "closed_form": members.len(), "overlap": overlap})
        });
        if info.real {
            let self_inverse = classes.len() == 1 && classes[0].is_self_inverse();
            let expected = if info.long { 1 } else { 2 };
            c.case(all.len() == expected && self_inverse == info.long, || {
                json!({"root": label, "classes": all.len(), "long": info.long})
            });
        } else {
            c.case(all.len() == 2 * n, || json!({"root": label, "classes": all.len(), "expected": 2 * n}));
        }
    }
    c
}

/// `|[w] n St_tau|` is 2 for classes over long roots and 1 otherwise.
pub fn check_tau_locally_free(ctx: &Context, k_max: usize) -> Check {
    let mut c = Check::new("tau_locally_free");
    let q = ctx.quiver();
    for info in ctx.cd.enumerate_positive_roots(k_max as i64).into_iter().filter(|r| r.real) {
        let classes = match root_to_classes(&ctx.cd, &info.coords) {
            Ok(v) => v,
            Err(e) => {
                err(&mut c, info.label.to_string(), e);
                continue;
            }
        };
        for cl in classes {
            let mut hits = 0;
            for w in cl.members(q) {
                match ctx.basic().is_tau_locally_free(&ctx.cd, &w) {
                    Ok(true) => hits += 1,
                    Ok(false) => {}
                    Err(e) => err(&mut c, w.format(q), e),
                }
            }
            let expected = if info.long { 2 } else { 1 };
            c.case(hits == expected, || {
                json!({"root": info.label.to_string(), "class": cl.format(q), "tau_locally_free": hits, "expected": expected})
            });
        }
    }
    c
}

/// The closed form for `[chi_w, chi_r]` against the convolution bracket, for
/// every locally free `w` with at most `max_letters` letters and `r` in a
/// class `[r_i]`.
pub fn check_key_bracket(ctx: &Context, max_letters: usize) -> Check {
    let mut c = Check::new("key_bracket");
    let q = ctx.quiver();
    let alg = &ctx.alg;
    let words = enumerate_strings(q, max_letters, StringFilter::LocallyFree);
    for i in 1..=ctx.n() {
        for r in SimilarityClass::of(ctx.basic().r(i)).members(q) {
            for w in &words {
                let outcome = alg.key_bracket(w, &r).and_then(|kb| {
                    let conv = alg.commutator(&alg.chi(w)?, &alg.chi(&r)?)?;
                    Ok((kb, conv))
                });
                match outcome {
                    Ok((kb, conv)) => c.case(kb == conv, || {
                        json!({"w": w.format(q), "r": r.format(q), "closed_form": kb.to_json(q), "convolution": conv.to_json(q)})
                    }),
                    Err(e) => err(&mut c, json!({"w": w.format(q), "r": r.format(q)}), e),
                }
            }
        }
    }
    c
}

/// `(ad theta_i)^(1 - c_ij)(theta_j) = 0` for every adjacent pair.
pub fn check_serre(ctx: &Context) -> Check {
    let mut c = Check::new("serre");
    let n = ctx.n();
    for i in 0..=n {
        for j in 0..=n {
            if i == j || ctx.cd.c[i][j] == 0 {
                continue;
            }
            match ctx.alg.serre_element(i, j) {
                Ok(f) => c.case(f.is_zero(), || json!({"i": i, "j": j, "value": f.to_json(ctx.quiver())})),
                Err(e) => err(&mut c, [i, j], e),
            }
        }
    }
    c
}

/// `Theta_alpha` for every real root up to `k_max rho`: primitive, supported
/// on exactly the indecomposables of rank `alpha`, and produced by a bracket
/// recipe whose factor has absolute value 2 exactly for long roots.
pub fn check_theta_real(ctx: &Context, k_max: usize) -> Check {
    let mut c = Check::new("theta_real");
    let q = ctx.quiver();
    let mut recipes = Vec::new();
    for info in ctx.cd.enumerate_positive_roots(k_max as i64).into_iter().filter(|r| r.real) {
        let label = info.label.to_string();
        match ctx.alg.theta_real(&ctx.cache, &info.coords) {
            Ok((f, recipe)) => {
                let support: BTreeSet<&Symbol> = f.support().collect();
                let indicator = ctx.alg.indicator_of_rank(&info.coords);
                let expected: BTreeSet<&Symbol> = indicator.support().collect();
                let factor_ok = match &recipe {
                    Recipe::Hook { factor, .. } => {
                        let size = factor.abs();
                        size == if info.long { rat(2) } else { rat(1) }
                    }
                    _ => true,
                };
                c.case(f.is_primitive() && support == expected && factor_ok, || {
                    json!({
                        "root": label,
                        "primitive": f.is_primitive(),
                        "function": f.to_json(q),
                        "expected_support": expected.iter().map(|s| s.format(q)).collect::<Vec<_>>(),
                        "recipe": recipe.to_string(),
                    })
                });
                recipes.push(json!({"root": label, "long": info.long, "recipe": recipe.to_string()}));
            }
            Err(e) => err(&mut c, label, e),
        }
    }
    c.data = Some(json!(recipes));
    c
}

/// The sign of `Theta^(n)_{k rho}` on the stable band: `+1` when `n` is a
/// source and `-1` when it is a sink.
pub fn stable_band_sign(q: &Quiver) -> i64 {
    if q.omega(q.n()) > 0 {
        1
    } else {
        -1
    }
}

/// For `1 <= k <= k_max`: the first `n - 1` difference functions are
/// primitive and independent; `Theta^(n)_{k rho}` is primitive and takes the
/// value [`stable_band_sign`] on `M_(b,t,k)` for the stable band at every band
/// parameter, each parameter evaluated on its own; and the `n` functions
/// together have rank `n`.
pub fn check_isotropic(ctx: &Context, k_max: usize) -> Check {
    let mut c = Check::new("isotropic");
    let q = ctx.quiver();
    let n = ctx.n();
    let band = stable_band(q);
    let sign = rat(stable_band_sign(q));
    for k in 1..=k_max {
        let family = match ctx.alg.difference_family(k) {
            Ok(f) => f,
            Err(e) => {
                err(&mut c, json!({"k": k}), e);
                continue;
            }
        };
        let diffs: Vec<ConstructibleFunction> = family.into_iter().take(n - 1).collect();
        for (i, f) in diffs.iter().enumerate() {
            c.case(f.is_primitive() && !f.is_zero(), || json!({"k": k, "i": i + 1, "function": f.to_json(q)}));
        }
        c.case(linear_independent(&diffs), || json!({"k": k, "independent": false}));
        let top = ctx.alg.theta_isotropic(&ctx.cache, k, n);
        match top {
            Ok(f) => {
                c.case(f.is_primitive(), || json!({"k": k, "i": n, "function": f.to_json(q)}));
                let mut all = diffs.clone();
                all.push(f);
                let rank = coefficient_rank(&all);
                c.case(rank == n, || json!({"k": k, "rank": rank, "expected": n}));
            }
            Err(e) => err(&mut c, json!({"k": k, "i": n}), e),
        }
        let target = Symbol::band(band.clone(), k);
        for t in ctx.alg.t_samples().to_vec() {
            let single = ConvolutionAlgebra::new(ctx.cd.clone()).with_t_samples(vec![t.clone()]);
            let value = single.and_then(|alg| {
                let cache = ThetaCache::default();
                Ok(alg.theta_isotropic(&cache, k, n)?.coeff(&target))
            });
            match value {
                Ok(v) => c.case(v == sign, || {
                    json!({"k": k, "t": t.to_string(), "band": band.format(q), "value": v.to_string(), "expected": sign.to_string()})
                }),
                Err(e) => err(&mut c, json!({"k": k, "t": t.to_string()}), e),
            }
        }
    }
    c.note(format!(
        "stable band {}; Theta^(n) is normalized as [Theta_(k rho - alpha_n), theta_n], value {} on it",
        band.format(q),
        stable_band_sign(q)
    ));
    c
}

/// Number of vertices of the host quiver of an indecomposable.
pub fn host_dimension(p: &Indecomposable) -> usize {
    match p {
        Indecomposable::String(w) => w.len() + 1,
        Indecomposable::Band { band, m } => band.len() * m,
    }
}

/// Pairs of distinct locally free indecomposables with host dimensions adding
/// up to at most `max_host`, ordered by total host dimension and then by
/// symbol; `count` of them are taken at evenly spaced positions.
pub fn distinct_pairs(alg: &ConvolutionAlgebra, max_host: usize, count: usize) -> Vec<(Indecomposable, Indecomposable)> {
    let q = alg.quiver();
    let n = q.n();
    let bound = RootVector(vec![max_host as i64; n + 1]);
    let mut pieces: Vec<Indecomposable> = strings_within(q, &bound)
        .into_iter()
        .filter(|w| w.is_locally_free(q) && w.len() < max_host)
        .map(|w| Indecomposable::string(&w))
        .chain(
            bands_within(q, &bound)
                .into_iter()
                .filter(|b| b.len() < max_host)
                .map(|b| Indecomposable::Band { band: b, m: 1 }),
        )
        .collect();
    pieces.sort();
    pieces.dedup();
    let mut pairs: Vec<(usize, Indecomposable, Indecomposable)> = Vec::new();
    for x in &pieces {
        for y in &pieces {
            let h = host_dimension(x) + host_dimension(y);
            if x != y && h <= max_host {
                pairs.push((h, x.clone(), y.clone()));
            }
        }
    }
    pairs.sort();
    if pairs.len() <= count {
        return pairs.into_iter().map(|(_, x, y)| (x, y)).collect();
    }
    (0..count)
        .map(|i| {
            let (_, x, y) = &pairs[i * pairs.len() / count];
            (x.clone(), y.clone())
        })
        .collect()
}

/// The support of `chi_X * chi_Y - chi_(X + Y)` has no decomposable class,
/// for `X` and `Y` non-isomorphic indecomposables.
pub fn check_indecomposable_support(ctx: &Context, max_host: usize, count: usize) -> Check {
    let mut c = Check::new("indecomposable_support");
    let q = ctx.quiver();
    let alg = &ctx.alg;
    for (x, y) in distinct_pairs(alg, max_host, count) {
        let (sx, sy) = (Symbol::from_parts(vec![x.clone()]), Symbol::from_parts(vec![y.clone()]));
        let outcome = (|| {
            let fx = ConstructibleFunction::indicator(q, sx.clone())?;
            let fy = ConstructibleFunction::indicator(q, sy.clone())?;
            let prod = alg.product(&fx, &fy)?;
            prod.sub(&ConstructibleFunction::indicator(q, sx.direct_sum(&sy))?)
        })();
        match outcome {
            Ok(d) => {
                let bad: Vec<String> = d.decomposable_support().iter().map(|s| s.format(q)).collect();
                c.case(bad.is_empty(), || json!({"x": x.format(q), "y": y.format(q), "decomposable": bad}));
            }
            Err(e) => err(&mut c, json!({"x": x.format(q), "y": y.format(q)}), e),
        }
    }
    c
}

/// On `M_(b,t,1)` for the stable band, the evaluation through winding
/// morphisms into the band and Hom spaces over its host agrees with the
/// coordinate-subset count, for every pair of locally free strings of total
/// rank `rho` and every band parameter.
pub fn check_tier_consistency(ctx: &Context) -> Check {
    let mut c = Check::new("tier_consistency");
    let q = ctx.quiver();
    let alg = &ctx.alg;
    let band = stable_band(q);
    let rho = RootVector::rho(ctx.n());
    let target = Symbol::band(band.clone(), 1);
    let strings: Vec<(StringWord, RootVector)> = strings_within(q, &rho)
        .into_iter()
        .filter(|w| w.is_locally_free(q))
        .map(|w| canonical_string(&w))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .filter_map(|w| w.rank_vector(q).ok().map(|r| (w, r)))
        .collect();
    for (a, ra) in &strings {
        for (b, rb) in &strings {
            if ra + rb != rho {
                continue;
            }
            let (sa, sb) = (Symbol::string(a), Symbol::string(b));
            let thin = match alg.pair_value(&sa, &sb, &target) {
                Ok(v) => v,
                Err(e) => {
                    err(&mut c, json!({"a": a.format(q), "b": b.format(q)}), e);
                    continue;
                }
            };
            for t in alg.t_samples() {
                match alg.krause_value(&sa, &sb, &band, t, 1) {
                    Ok(v) => c.case(v == thin, || {
                        json!({"a": a.format(q), "b": b.format(q), "t": t.to_string(), "subset_count": thin, "hom_route": v})
                    }),
                    Err(e) => err(&mut c, json!({"a": a.format(q), "b": b.format(q), "t": t.to_string()}), e),
                }
            }
        }
    }
    c.note(format!("stable band {}", band.format(q)));
    c
}
