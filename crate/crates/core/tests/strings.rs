use std::collections::BTreeSet;

use proptest::prelude::*;

use affstr::campaign::golden::golden_check;
use affstr::cartan::{CartanData, RootVector};
use affstr::quiver::{Letter, Quiver};
use affstr::strings::{
    canonical_string, enumerate_bands, enumerate_strings, root_to_classes, x_form, x_rank, Band, BasicStrings,
    SimilarityClass, StringFilter, StringWord, XFamily,
};

fn letters(q: &Quiver) -> Vec<Letter> {
    q.arrows()
        .into_iter()
        .flat_map(|a| [Letter::direct(a), Letter::inv(a)])
        .collect()
}

/// Every letter sequence of length `1..=max` accepted by the validating constructor.
fn brute_force(q: &Quiver, max: usize) -> Vec<Vec<Letter>> {
    let alphabet = letters(q);
    let mut out = Vec::new();
    let mut layer: Vec<Vec<Letter>> = vec![Vec::new()];
    for _ in 0..max {
        let mut next = Vec::new();
        for w in &layer {
            for &x in &alphabet {
                let mut v = w.clone();
                v.push(x);
                if StringWord::new(q, v.clone()).is_ok() {
                    next.push(v);
                }
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

#[test]
fn reference_table_n5() {
    let q = Quiver::parse(5, "LRRRL").unwrap();
    let c = golden_check(&q);
    assert!(c.passed(), "{:?}", c.counterexamples);
    assert_eq!(c.notes.len(), 4);

    let b = BasicStrings::new(&q);
    let f = |w: &StringWord| w.format(&q);
    let p: Vec<String> = b.p.iter().map(f).collect();
    let inj: Vec<String> = b.q.iter().map(f).collect();
    let r: Vec<String> = (1..=5).map(|i| f(b.r(i))).collect();
    assert_eq!(p, ["e0", "e0.h1.h2-.h3-.h4-", "h3-.h4-", "h4-", "1_4", "h5.en-.h5-"]);
    assert_eq!(inj, ["h1-.e0-.h1", "1_1", "h2-", "h2-.h3-", "h2-.h3-.h4-.h5.en", "en"]);
    assert_eq!(r, ["h2-.h3-.h4-", "h1-.e0-", "1_2-", "1_3-", "en-.h5-"]);
    assert_eq!((1..=5).map(|i| b.tau(i)).collect::<Vec<_>>(), [2, 3, 4, 5, 1]);
}

#[test]
fn golden_check_is_silent_elsewhere() {
    let c = golden_check(&Quiver::parse(3, "LRL").unwrap());
    assert!(c.passed());
    assert_eq!(c.cases, 0);
}

#[test]
fn enumeration_matches_brute_force() {
    for (n, max) in [(2, 6), (3, 5)] {
        for q in Quiver::all(n).unwrap() {
            let dfs: BTreeSet<StringWord> = enumerate_strings(&q, max, StringFilter::All)
                .into_iter()
                .filter(|w| w.trivial_data().is_none())
                .collect();
            let brute: BTreeSet<StringWord> = brute_force(&q, max)
                .into_iter()
                .map(|l| StringWord::new(&q, l).unwrap())
                .collect();
            assert_eq!(dfs, brute, "{q}");
            let trivial = enumerate_strings(&q, 0, StringFilter::All);
            assert_eq!(trivial.len(), 2 * (n + 1));
        }
    }
}

#[test]
fn band_enumeration_matches_brute_force() {
    for q in Quiver::all(2).unwrap() {
        let max = 8;
        let brute: BTreeSet<Band> = brute_force(&q, max)
            .into_iter()
            .filter_map(|l| Band::new(&q, l).ok())
            .map(|(b, _)| b)
            .filter(Band::is_primitive)
            .collect();
        let dfs: BTreeSet<Band> = enumerate_bands(&q, max).into_iter().collect();
        assert_eq!(dfs, brute, "{q}");
        for b in &dfs {
            let rk = b.rank_vector(&q).unwrap();
            let h = rk.0[0];
            assert_eq!(rk, RootVector::rho(2).scaled(h), "{}", b.format(&q));
        }
    }
}

#[test]
fn x_forms_have_tabulated_ranks() {
    for n in 2..=4 {
        for q in Quiver::all(n).unwrap() {
            for fam in XFamily::ALL {
                for (i, j) in fam.indices(n) {
                    for k in 0..=2 {
                        let class = x_form(&q, fam, i, j, k).unwrap();
                        let w = &class.members(&q)[0];
                        assert!(w.is_locally_free(&q));
                        assert_eq!(w.rank_vector(&q).unwrap(), x_rank(n, fam, i, j, k).unwrap(), "{fam:?} {i} {j} {k}");
                    }
                }
            }
        }
    }
}

#[test]
fn classes_over_rho() {
    for n in 2..=5 {
        let cd = CartanData::from_orientation(n, &"L".repeat(n)).unwrap();
        let classes = root_to_classes(&cd, &RootVector::rho(n)).unwrap();
        let closed: BTreeSet<SimilarityClass> = classes.iter().flat_map(|c| [c.clone(), c.inverse()]).collect();
        assert_eq!(closed.len(), 2 * n);
    }
}

#[test]
fn translates_follow_the_coxeter_matrix() {
    for q in Quiver::all(3).unwrap() {
        let cd = CartanData::new(q.clone());
        let b = BasicStrings::new(&q);
        for i in 0..=3 {
            let mut rp = b.p[i].rank_vector(&q).unwrap();
            let mut ri = b.q[i].rank_vector(&q).unwrap();
            for k in 0..4 {
                assert_eq!(b.two_sided(&b.p[i], k).unwrap().rank_vector(&q).unwrap(), rp, "{q} P{i} k={k}");
                assert_eq!(b.two_sided(&b.q[i], -k).unwrap().rank_vector(&q).unwrap(), ri, "{q} I{i} k={k}");
                rp = cd.coxeter_inv_apply(&rp);
                ri = cd.coxeter_apply(&ri);
            }
        }
    }
}

#[test]
fn trivial_words() {
    let q = Quiver::parse(3, "LLR").unwrap();
    let w = StringWord::parse(&q, "1_2-").unwrap();
    assert_eq!(w.format(&q), "1_2-");
    assert_eq!(w.inverse().format(&q), "1_2");
    assert_eq!(canonical_string(&w).format(&q), "1_2");
    assert!(w.is_locally_free(&q));
    assert!(!StringWord::trivial(0, true).is_locally_free(&q));
    assert!(StringWord::parse(&q, "1_4").is_err());
}

#[test]
fn loop_squares_are_not_strings() {
    let q = Quiver::parse(2, "LR").unwrap();
    assert!(StringWord::parse(&q, "e0.e0").is_err());
    assert!(StringWord::parse(&q, "e0.e0-").is_err());
    assert!(StringWord::parse(&q, "h1.h1-").is_err());
}

fn random_string(max: usize) -> impl Strategy<Value = (Quiver, StringWord)> {
    (2usize..=4)
        .prop_flat_map(move |n| (Just(n), 0usize..(1 << n), prop::collection::vec(any::<u32>(), 1..=max)))
        .prop_map(|(n, mask, choices)| {
            let q = Quiver::all(n).unwrap().swap_remove(mask);
            let alphabet = letters(&q);
            let mut w = StringWord::new(&q, vec![alphabet[choices[0] as usize % alphabet.len()]]).unwrap();
            for c in &choices[1..] {
                let ext = w.right_extensions(&q);
                if ext.is_empty() {
                    break;
                }
                w = w.push(&q, ext[*c as usize % ext.len()]).unwrap();
            }
            (q, w)
        })
}

proptest! {
    #[test]
    fn inverse_is_an_involution((q, w) in random_string(20)) {
        prop_assert_eq!(w.inverse().inverse(), w.clone());
        prop_assert_eq!(w.inverse().rank_vector(&q), w.rank_vector(&q));
        prop_assert_eq!(w.inverse().is_locally_free(&q), w.is_locally_free(&q));
        prop_assert_eq!(canonical_string(&w), canonical_string(&w.inverse()));
    }

    #[test]
    fn format_round_trips((q, w) in random_string(20)) {
        prop_assert_eq!(StringWord::parse(&q, &w.format(&q)).unwrap(), w.clone());
        let c = SimilarityClass::of(&w);
        prop_assert_eq!(SimilarityClass::parse(&q, &c.format(&q)).unwrap(), c.clone());
        prop_assert_eq!(c.members(&q).len(), 1 << w.count_loops());
        prop_assert!(c.members(&q).contains(&w));
    }

    #[test]
    fn locally_free_ranks_are_roots((q, w) in random_string(30)) {
        let cd = CartanData::new(q.clone());
        if w.is_locally_free(&q) {
            let rk = w.rank_vector(&q).unwrap();
            prop_assert!(cd.is_positive_root(&rk), "{} has rank {}", w.format(&q), rk);
        }
    }

    #[test]
    fn classes_of_a_root_hold_its_strings((q, w) in random_string(18)) {
        let cd = CartanData::new(q.clone());
        if w.is_locally_free(&q) {
            let rk = w.rank_vector(&q).unwrap();
            let classes = root_to_classes(&cd, &rk).unwrap();
            let c = SimilarityClass::of(&w);
            prop_assert!(classes.iter().any(|x| *x == c || x.inverse() == c), "{}", w.format(&q));
        }
    }
}
