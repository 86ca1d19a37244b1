use proptest::prelude::*;

use affstr::cartan::CartanData;
use affstr::linalg::q as rat;
use affstr::modules::{
    ar_translate, ar_translate_inv, band_module, dual_word, ext1_dim, hom_dim, is_isomorphic, opposite_quiver,
    string_module,
};
use affstr::quiver::Quiver;
use affstr::strings::{enumerate_strings, standard_band, Band, BasicStrings, StringFilter, StringWord};

fn lf_strings(q: &Quiver, max: usize) -> Vec<StringWord> {
    enumerate_strings(q, max, StringFilter::LocallyFree)
}

#[test]
fn string_modules_have_the_word_rank() {
    for q in Quiver::all(3).unwrap() {
        for w in lf_strings(&q, 8) {
            let m = string_module(&q, &w);
            m.check_relations(&q).unwrap();
            assert!(m.is_locally_free(&q));
            assert_eq!(m.rank_vector(&q), Some(w.rank_vector(&q).unwrap()), "{}", w.format(&q));
        }
    }
}

#[test]
fn a_word_and_its_inverse_give_isomorphic_modules() {
    let q = Quiver::parse(3, "LRL").unwrap();
    for w in lf_strings(&q, 7) {
        let (m, n) = (string_module(&q, &w), string_module(&q, &w.inverse()));
        assert!(is_isomorphic(&m, &n, 4), "{}", w.format(&q));
    }
}

#[test]
fn different_strings_give_different_modules() {
    let q = Quiver::parse(2, "RL").unwrap();
    let ws: Vec<StringWord> = lf_strings(&q, 6)
        .into_iter()
        .filter(|w| *w <= w.inverse() || w.trivial_data().is_some())
        .filter(|w| w.trivial_data().is_none_or(|t| t.positive))
        .collect();
    for (a, x) in ws.iter().enumerate() {
        for y in &ws[a + 1..] {
            let (m, n) = (string_module(&q, x), string_module(&q, y));
            if m.dims == n.dims {
                assert!(!is_isomorphic(&m, &n, 8), "{} ~ {}", x.format(&q), y.format(&q));
            }
        }
    }
}

#[test]
fn duality_matches_the_opposite_word() {
    for q in Quiver::all(2).unwrap() {
        let op = opposite_quiver(&q);
        for w in lf_strings(&q, 8) {
            let dual = string_module(&q, &w).dual();
            let expect = string_module(&op, &dual_word(&q, &w));
            assert!(is_isomorphic(&dual, &expect, 4), "{q} {}", w.format(&q));
        }
    }
}

#[test]
fn auslander_reiten_formula() {
    for q in Quiver::all(2).unwrap() {
        let b = BasicStrings::new(&q);
        let others = lf_strings(&q, 5);
        for i in 0..=2 {
            for k in 1..=2 {
                let tm = b.two_sided(&b.p[i], k - 1).unwrap();
                let m = ar_translate_inv(&b, &tm).unwrap();
                assert_eq!(m, b.two_sided(&b.p[i], k).unwrap());
                let inj = b.two_sided(&b.q[i], 1 - k).unwrap();
                let t_inj = ar_translate(&b, &inj).unwrap();
                assert_eq!(t_inj, b.two_sided(&b.q[i], -k).unwrap());
                for (x, tx) in [(&m, &tm), (&inj, &t_inj)] {
                    let (mx, mtx) = (string_module(&q, x), string_module(&q, tx));
                    for w in &others {
                        let n = string_module(&q, w);
                        assert_eq!(ext1_dim(&q, &mx, &n), hom_dim(&n, &mtx), "{q} {} {}", x.format(&q), w.format(&q));
                    }
                }
            }
        }
    }
}

#[test]
fn projectives_and_injectives_are_ext_orthogonal() {
    let q = Quiver::parse(3, "RLL").unwrap();
    let b = BasicStrings::new(&q);
    for w in lf_strings(&q, 6) {
        let n = string_module(&q, &w);
        for i in 0..=3 {
            assert_eq!(ext1_dim(&q, &string_module(&q, &b.p[i]), &n), 0);
            assert_eq!(ext1_dim(&q, &n, &string_module(&q, &b.q[i])), 0);
        }
    }
}

#[test]
fn band_modules() {
    for q in Quiver::all(3).unwrap() {
        let (b, _) = Band::new(&q, standard_band(&q)).unwrap();
        let rho = b.rank_vector(&q).unwrap();
        let m1 = band_module(&q, &b, &rat(2), 1).unwrap();
        let m2 = band_module(&q, &b, &rat(2), 2).unwrap();
        assert_eq!(m1.rank_vector(&q), Some(rho.clone()));
        assert_eq!(m2.rank_vector(&q), Some(rho.scaled(2)));
        assert_eq!(hom_dim(&m1, &m1), 1);
        assert_eq!(ext1_dim(&q, &m1, &m1), 1);
        assert_eq!(hom_dim(&m2, &m2), 2);
        let m3 = band_module(&q, &b, &rat(3), 1).unwrap();
        assert_eq!(hom_dim(&m1, &m3), 0);
        assert!(!is_isomorphic(&m1, &m3, 8));
        assert!(band_module(&q, &b, &rat(0), 1).is_err());
    }
}

fn pair() -> impl Strategy<Value = (Quiver, usize, usize)> {
    (2usize..=3).prop_flat_map(|n| (Just(n), 0usize..(1 << n), any::<usize>(), any::<usize>())).prop_map(
        |(n, mask, a, b)| (Quiver::all(n).unwrap().swap_remove(mask), a, b),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn euler_form_is_hom_minus_ext((q, a, b) in pair()) {
        let ws = lf_strings(&q, 7);
        let (x, y) = (&ws[a % ws.len()], &ws[b % ws.len()]);
        let (m, n) = (string_module(&q, x), string_module(&q, y));
        let cd = CartanData::new(q.clone());
        let form = cd.euler_form(&x.rank_vector(&q).unwrap(), &y.rank_vector(&q).unwrap()).unwrap();
        prop_assert_eq!(form, hom_dim(&m, &n) as i64 - ext1_dim(&q, &m, &n) as i64);
    }

    #[test]
    fn hom_is_additive((q, a, b) in pair()) {
        let ws = lf_strings(&q, 5);
        let (x, y) = (&ws[a % ws.len()], &ws[b % ws.len()]);
        let (m, n) = (string_module(&q, x), string_module(&q, y));
        let s = m.direct_sum(&n);
        prop_assert_eq!(hom_dim(&s, &m), hom_dim(&m, &m) + hom_dim(&n, &m));
        prop_assert_eq!(ext1_dim(&q, &m, &s), ext1_dim(&q, &m, &m) + ext1_dim(&q, &m, &n));
    }
}
