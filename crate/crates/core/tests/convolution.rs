use std::collections::BTreeMap;

use proptest::prelude::*;

use affstr::cartan::{CartanData, RootVector};
use affstr::convolution::{
    stable_band, ConstructibleFunction, ConvolutionAlgebra, Recipe, Symbol, ThetaCache,
};
use affstr::linalg::{q as rat, Matrix, Rational};
use affstr::modules::{hom_dim, is_isomorphic, quotient, string_module, Representation};
use affstr::quiver::Quiver;
use affstr::strings::{canonical_string, enumerate_strings, StringFilter, StringWord};

fn algebra(n: usize, orientation: &str) -> ConvolutionAlgebra {
    ConvolutionAlgebra::new(CartanData::from_orientation(n, orientation).unwrap())
}

fn canonical_lf(q: &Quiver, max: usize) -> Vec<StringWord> {
    let mut ws: Vec<StringWord> = enumerate_strings(q, max, StringFilter::LocallyFree)
        .iter()
        .map(canonical_string)
        .collect();
    ws.sort();
    ws.dedup();
    ws
}

/// Coordinate subrepresentations `U` of a string module, sorted by the
/// classes of `U` and `M/U` among `candidates`.
fn coordinate_subs(m: &Representation, candidates: &[(StringWord, Representation)]) -> BTreeMap<(usize, usize), i64> {
    let coords: Vec<(usize, usize)> = (0..m.dims.len()).flat_map(|v| (0..m.dims[v]).map(move |i| (v, i))).collect();
    let mut out = BTreeMap::new();
    for mask in 0u32..(1 << coords.len()) {
        let inside = |v: usize, i: usize| {
            let p = coords.iter().position(|&c| c == (v, i)).unwrap();
            mask >> p & 1 == 1
        };
        let closed = m.quiver.arrows.iter().zip(&m.mats).all(|(&(t, h), a)| {
            (0..m.dims[t]).filter(|&j| inside(t, j)).all(|j| (0..m.dims[h]).all(|i| a[(i, j)] == rat(0) || inside(h, i)))
        });
        if !closed {
            continue;
        }
        let picks: Vec<Vec<usize>> = (0..m.dims.len()).map(|v| (0..m.dims[v]).filter(|&i| inside(v, i)).collect()).collect();
        let sub_dims: Vec<usize> = picks.iter().map(Vec::len).collect();
        let sub_mats = m
            .quiver
            .arrows
            .iter()
            .zip(&m.mats)
            .map(|(&(t, h), a)| {
                let mut s = Matrix::zeros(picks[h].len(), picks[t].len());
                for (r, &i) in picks[h].iter().enumerate() {
                    for (c, &j) in picks[t].iter().enumerate() {
                        s[(r, c)] = a[(i, j)].clone();
                    }
                }
                s
            })
            .collect();
        let sub = Representation::new(m.quiver.clone(), sub_dims, sub_mats).unwrap();
        let embed: Vec<Matrix> = (0..m.dims.len())
            .map(|v| {
                let mut e = Matrix::zeros(m.dims[v], picks[v].len());
                for (c, &i) in picks[v].iter().enumerate() {
                    e[(i, c)] = rat(1);
                }
                e
            })
            .collect();
        let quot = quotient(m, &embed).unwrap();
        let find = |r: &Representation| candidates.iter().position(|(_, c)| is_isomorphic(r, c, 4));
        if let (Some(a), Some(b)) = (find(&sub), find(&quot)) {
            *out.entry((a, b)).or_insert(0) += 1;
        }
    }
    out
}

#[test]
fn subset_counts_match_coordinate_subrepresentations() {
    for orientation in ["LR", "RR"] {
        let alg = algebra(2, orientation);
        let q = alg.quiver().clone();
        let candidates: Vec<(StringWord, Representation)> = canonical_lf(&q, 5)
            .into_iter()
            .map(|w| {
                let m = string_module(&q, &w);
                (w, m)
            })
            .collect();
        for (x, mx) in candidates.iter().filter(|(w, _)| w.len() >= 2) {
            let counts = coordinate_subs(mx, &candidates);
            let sx = Symbol::string(x);
            for (a, (v, _)) in candidates.iter().enumerate() {
                for (b, (w, _)) in candidates.iter().enumerate() {
                    let expect = counts.get(&(a, b)).copied().unwrap_or(0);
                    let got = alg.pair_value(&Symbol::string(v), &Symbol::string(w), &sx).unwrap();
                    assert_eq!(got, expect, "{orientation}: {} in {} over {}", v.format(&q), x.format(&q), w.format(&q));
                }
            }
        }
    }
}

#[test]
fn thetas_are_simple_indicators() {
    let alg = algebra(3, "LRL");
    for i in 0..=3 {
        let t = alg.theta(i).unwrap();
        assert_eq!(t.grade(), &RootVector::simple(3, i));
        assert_eq!(t.terms().len(), 1);
        let (_, recipe) = alg.theta_real(&ThetaCache::default(), &RootVector::simple(3, i)).unwrap();
        assert_eq!(recipe, Recipe::Simple(i));
    }
}

#[test]
fn unit_is_neutral() {
    let alg = algebra(2, "RL");
    let one = ConstructibleFunction::unit(2);
    let w = canonical_lf(alg.quiver(), 3).pop().unwrap();
    let f = alg.chi(&w).unwrap();
    assert_eq!(alg.product(&one, &f).unwrap(), f);
    assert_eq!(alg.product(&f, &one).unwrap(), f);
}

#[test]
fn products_are_associative() {
    for orientation in ["LL", "LR"] {
        let alg = algebra(2, orientation);
        let fs: Vec<ConstructibleFunction> = (0..=2).map(|i| alg.theta(i).unwrap()).collect();
        for a in &fs {
            for b in &fs {
                for c in &fs {
                    let left = alg.product(&alg.product(a, b).unwrap(), c).unwrap();
                    let right = alg.product(a, &alg.product(b, c).unwrap()).unwrap();
                    assert_eq!(left, right, "{orientation}");
                }
            }
        }
    }
}

#[test]
fn self_products_of_a_brick() {
    // chi_X * chi_X is 2 on X + X: the subobjects isomorphic to X form a projective line.
    let alg = algebra(2, "LR");
    let q = alg.quiver();
    let bricks: Vec<StringWord> = canonical_lf(q, 4)
        .into_iter()
        .filter(|w| {
            let m = string_module(q, w);
            hom_dim(&m, &m) == 1
        })
        .take(4)
        .collect();
    assert_eq!(bricks.len(), 4);
    for w in bricks {
        let word = w.format(q);
        let x = Symbol::string(&w);
        let f = alg.chi(&w).unwrap();
        let sq = alg.product(&f, &f).unwrap();
        assert_eq!(sq.coeff(&x.direct_sum(&x)), rat(2), "{word}");
        let rest = sq.sub(&ConstructibleFunction::indicator(q, x.direct_sum(&x)).unwrap()).unwrap();
        assert_eq!(rest.decomposable_support().len(), 1, "{word}");
    }
}

#[test]
fn regular_brackets_n2() {
    for orientation in ["LL", "LR", "RL", "RR"] {
        let alg = algebra(2, orientation);
        for i in 1..=2 {
            for k in 0..=3 {
                let closed = alg.iterated_regular_bracket(i, k).unwrap();
                let conv = alg.iterated_regular_bracket_by_convolution(i, k).unwrap();
                let form = alg.regular_closed_form(i, k).unwrap();
                assert_eq!(closed, conv, "{orientation} i={i} k={k}");
                // For n = 2 the subtracted term at each multiple of rho feeds back.
                let factor = rat(1 << (k / 2));
                assert_eq!(closed, form.scale(&factor), "{orientation} i={i} k={k}");
            }
        }
    }
}

#[test]
fn serre_relations_n3() {
    for q in Quiver::all(3).unwrap() {
        let alg = ConvolutionAlgebra::new(CartanData::new(q));
        for i in 0..=3usize {
            for j in 0..=3usize {
                if i != j && alg.cartan().c[i][j] != 0 {
                    assert!(alg.serre_check(i, j).unwrap(), "{i} {j}");
                }
            }
            let far = (i + 2..=3).next();
            if let Some(j) = far {
                assert!(alg.serre_check(i, j).unwrap());
            }
        }
    }
}

#[test]
fn top_isotropic_function_sign() {
    for q in Quiver::all(2).unwrap().into_iter().chain(Quiver::all(3).unwrap()) {
        let n = q.n();
        let band = stable_band(&q);
        let expect = rat(if q.omega(n) > 0 { 1 } else { -1 });
        for t in [2, -1] {
            let alg = ConvolutionAlgebra::new(CartanData::new(q.clone())).with_t_samples(vec![rat(t)]).unwrap();
            let f = alg.theta_isotropic(&ThetaCache::default(), 1, n).unwrap();
            assert!(f.is_primitive());
            assert_eq!(f.coeff(&Symbol::band(band.clone(), 1)), expect, "{q} t={t}");
        }
    }
}

#[test]
fn thick_band_values_do_not_depend_on_t() {
    let alg = algebra(2, "LR");
    let q = alg.quiver().clone();
    let band = stable_band(&q);
    let two_rho = RootVector::rho(2).scaled(2);
    let ws = canonical_lf(&q, 12);
    let mut nonzero = 0;
    for v in &ws {
        for w in &ws {
            if &v.rank_vector(&q).unwrap() + &w.rank_vector(&q).unwrap() != two_rho {
                continue;
            }
            let values: Vec<i64> = [2, 3, -1]
                .iter()
                .map(|&t| alg.evaluate_product_on_band(v, w, &band, &rat(t), 2).unwrap())
                .collect();
            assert!(values.iter().all(|x| *x == values[0]), "{} {}: {values:?}", v.format(&q), w.format(&q));
            nonzero += usize::from(values[0] != 0);
        }
    }
    assert!(nonzero > 0);
}

#[test]
fn functions_round_trip_through_json() {
    let alg = algebra(3, "RLR");
    let q = alg.quiver();
    let f = alg.theta_isotropic(&ThetaCache::default(), 1, 1).unwrap();
    let back = ConstructibleFunction::from_json(q, &f.to_json(q)).unwrap();
    assert_eq!(back, f);
}

fn small_function(alg: &ConvolutionAlgebra) -> impl Strategy<Value = ConstructibleFunction> {
    let q = alg.quiver().clone();
    let pool: Vec<ConstructibleFunction> = canonical_lf(&q, 2).iter().map(|w| alg.chi(w).unwrap()).collect();
    (0..pool.len(), -3i64..=3).prop_map(move |(i, c)| pool[i].scale(&Rational::from_integer(c.into())))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn jacobi_identity((f, g, h) in {
        let alg = algebra(2, "RL");
        (small_function(&alg), small_function(&alg), small_function(&alg))
    }) {
        let alg = algebra(2, "RL");
        let br = |a: &ConstructibleFunction, b: &ConstructibleFunction| alg.commutator(a, b).unwrap();
        let total = br(&f, &br(&g, &h)).add(&br(&g, &br(&h, &f))).unwrap().add(&br(&h, &br(&f, &g))).unwrap();
        prop_assert!(total.is_zero());
    }

    #[test]
    fn bracket_is_antisymmetric((f, g) in {
        let alg = algebra(2, "LL");
        (small_function(&alg), small_function(&alg))
    }) {
        let alg = algebra(2, "LL");
        let a = alg.commutator(&f, &g).unwrap();
        let b = alg.commutator(&g, &f).unwrap();
        prop_assert_eq!(a.add(&b).unwrap(), ConstructibleFunction::zero(f.grade() + g.grade()));
    }
}

#[test]
fn regular_brackets_n3() {
    for q in Quiver::all(3).unwrap() {
        let alg = ConvolutionAlgebra::new(CartanData::new(q.clone()));
        for i in 1..=3 {
            for k in 0..=5 {
                let closed = alg.iterated_regular_bracket(i, k).unwrap();
                assert_eq!(closed, alg.regular_closed_form(i, k).unwrap(), "{q} i={i} k={k}");
            }
            let k = 2;
            assert_eq!(alg.iterated_regular_bracket_by_convolution(i, k).unwrap(), alg.regular_closed_form(i, k).unwrap());
        }
    }
}
