use std::collections::BTreeSet;

use proptest::prelude::*;

use affstr::cartan::{CartanData, RootLabel, RootVector};
use affstr::Quiver;

fn all_cartan(n: usize) -> Vec<CartanData> {
    Quiver::all(n).unwrap().into_iter().map(CartanData::new).collect()
}

fn sym(cd: &CartanData, a: &RootVector, b: &RootVector) -> i64 {
    let n = cd.n();
    let mut s = 0;
    for i in 0..=n {
        for j in 0..=n {
            s += a.0[i] * cd.d[i] * cd.c[i][j] * b.0[j];
        }
    }
    s
}

/// Positive real roots of height at most `h`, by reflecting simple roots upward.
fn weyl_orbit_roots(cd: &CartanData, h: i64) -> BTreeSet<RootVector> {
    let n = cd.n();
    let mut found: BTreeSet<RootVector> = (0..=n).map(|i| RootVector::simple(n, i)).collect();
    let mut frontier: Vec<RootVector> = found.iter().cloned().collect();
    while let Some(a) = frontier.pop() {
        for i in 0..=n {
            let pairing: i64 = (0..=n).map(|j| cd.c[i][j] * a.0[j]).sum();
            let mut b = a.clone();
            b.0[i] -= pairing;
            if b.is_nonnegative() && b.height() <= h && found.insert(b.clone()) {
                frontier.push(b);
            }
        }
    }
    found
}

#[test]
fn cartan_matrix_shape() {
    let cd = CartanData::from_orientation(3, "LRL").unwrap();
    assert_eq!(
        cd.c,
        vec![
            vec![2, -1, 0, 0],
            vec![-2, 2, -1, 0],
            vec![0, -1, 2, -2],
            vec![0, 0, -1, 2],
        ]
    );
    assert_eq!(cd.d, vec![2, 1, 1, 2]);
}

#[test]
fn real_roots_match_weyl_orbit() {
    for n in 2..=4 {
        for cd in all_cartan(n) {
            let h = 2 * RootVector::rho(n).height();
            let orbit = weyl_orbit_roots(&cd, h);
            let listed: BTreeSet<RootVector> = cd
                .enumerate_positive_roots(4)
                .into_iter()
                .filter(|r| r.real && r.coords.height() <= h)
                .map(|r| r.coords)
                .collect();
            assert_eq!(orbit, listed, "n={n} {}", cd.quiver);
        }
    }
}

#[test]
fn imaginary_roots_are_multiples_of_rho() {
    let cd = CartanData::from_orientation(4, "LLRL").unwrap();
    for r in cd.enumerate_positive_roots(3) {
        let norm = sym(&cd, &r.coords, &r.coords);
        if r.real {
            assert!(norm == 2 || norm == 4, "{} has norm {norm}", r.label);
        } else {
            assert_eq!(norm, 0);
            let RootLabel::Isotropic { k } = r.label else { panic!("{}", r.label) };
            assert_eq!(r.coords, RootVector::rho(4).scaled(k));
        }
    }
}

#[test]
fn root_counts() {
    let cd = CartanData::from_orientation(2, "LR").unwrap();
    let roots = cd.enumerate_positive_roots(1);
    // 4 roots of C2, then rho and rho +- each of them; two of each four are long.
    assert_eq!(roots.iter().filter(|r| r.real).count(), 4 + 8);
    assert_eq!(roots.iter().filter(|r| !r.real).count(), 1);
    assert_eq!(roots.iter().filter(|r| r.long).count(), 2 + 4);
}

#[test]
fn defect_signs_by_orientation() {
    let cd = CartanData::from_orientation(3, "LLL").unwrap();
    assert_eq!(cd.quiver.sinks(), vec![0]);
    assert_eq!(cd.quiver.sources(), vec![3]);
    assert_eq!(cd.defect(&RootVector::simple(3, 0)).unwrap(), 2);
    assert_eq!(cd.defect(&RootVector::simple(3, 3)).unwrap(), -2);
    assert_eq!(cd.defect(&RootVector::simple(3, 1)).unwrap(), 0);
    assert_eq!(cd.defect(&RootVector::rho(3)).unwrap(), 0);
}

#[test]
fn not_roots() {
    let cd = CartanData::from_orientation(3, "RRR").unwrap();
    for v in [vec![0, 0, 0, 0], vec![1, 0, 1, 0], vec![2, 0, 0, 0], vec![0, 1, -1, 0], vec![1, 1, 1]] {
        assert!(!cd.is_positive_root(&RootVector(v.clone())), "{v:?}");
    }
}

fn vector(n: usize) -> impl Strategy<Value = RootVector> {
    prop::collection::vec(-6i64..=6, n + 1).prop_map(RootVector)
}

fn case() -> impl Strategy<Value = (CartanData, RootVector, RootVector)> {
    (2usize..=5)
        .prop_flat_map(|n| (Just(n), 0usize..(1 << n), vector(n), vector(n)))
        .prop_map(|(n, mask, a, b)| (all_cartan(n).swap_remove(mask), a, b))
}

proptest! {
    #[test]
    fn euler_form_symmetrizes_to_dc((cd, a, b) in case()) {
        prop_assert_eq!(cd.euler_form(&a, &b).unwrap() + cd.euler_form(&b, &a).unwrap(), sym(&cd, &a, &b));
    }

    #[test]
    fn coxeter_preserves_the_euler_form((cd, a, b) in case()) {
        let (ca, cb) = (cd.coxeter_apply(&a), cd.coxeter_apply(&b));
        prop_assert_eq!(cd.euler_form(&ca, &cb).unwrap(), cd.euler_form(&a, &b).unwrap());
        prop_assert_eq!(cd.euler_form(&a, &b).unwrap(), -cd.euler_form(&b, &ca).unwrap());
        prop_assert_eq!(cd.coxeter_inv_apply(&ca), a);
    }

    #[test]
    fn defect_formulas_agree((cd, a, _b) in case()) {
        prop_assert_eq!(cd.defect(&a).unwrap(), cd.defect_by_sinks(&a).unwrap());
        prop_assert_eq!(cd.defect(&cd.coxeter_apply(&a)).unwrap(), cd.defect(&a).unwrap());
    }

    #[test]
    fn root_labels_round_trip((cd, a, _b) in case()) {
        if let Some(label) = cd.root_label(&a) {
            prop_assert_eq!(label.vector(cd.n()), a.clone());
            prop_assert_eq!(sym(&cd, &a, &a) == 0, !label.is_real());
        }
    }
}
