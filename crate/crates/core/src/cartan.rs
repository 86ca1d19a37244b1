//! Cartan data, the Euler form, the Coxeter matrix and positive roots of type C~n.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{q, Matrix};
use crate::quiver::Quiver;

/// An integer vector indexed by the vertices `0..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RootVector(pub Vec<i64>);

impl RootVector {
    pub fn zero(n: usize) -> Self {
        RootVector(vec![0; n + 1])
    }

    pub fn simple(n: usize, i: usize) -> Self {
        let mut v = RootVector::zero(n);
        v.0[i] = 1;
        v
    }

    /// The minimal positive isotropic root `(1,2,...,2,1)`.
    pub fn rho(n: usize) -> Self {
        let mut v = RootVector(vec![2; n + 1]);
        v.0[0] = 1;
        v.0[n] = 1;
        v
    }

    /// `alpha_i + ... + alpha_j`.
    pub fn alpha(n: usize, i: usize, j: usize) -> Self {
        let mut v = RootVector::zero(n);
        for k in i..=j {
            v.0[k] = 1;
        }
        v
    }

    /// `alpha_{i,n} + alpha_{j,n-1}`.
    pub fn beta(n: usize, i: usize, j: usize) -> Self {
        let mut v = RootVector::alpha(n, i, n);
        for k in j..n {
            v.0[k] += 1;
        }
        v
    }

    pub fn n(&self) -> usize {
        self.0.len() - 1
    }

    pub fn scaled(&self, k: i64) -> Self {
        RootVector(self.0.iter().map(|x| x * k).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Componentwise `self <= other`.
    pub fn le(&self, other: &RootVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

impl Add for &RootVector {
    type Output = RootVector;
    fn add(self, rhs: &RootVector) -> RootVector {
        RootVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &RootVector {
    type Output = RootVector;
    fn sub(self, rhs: &RootVector) -> RootVector {
        RootVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &RootVector {
    type Output = RootVector;
    fn neg(self) -> RootVector {
        self.scaled(-1)
    }
}

impl fmt::Display for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// How a positive root is written in terms of `rho`, `alpha_ij` and `beta_ij`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RootLabel {
    /// `k rho + sign * alpha_ij`
    Alpha { k: i64, sign: i8, i: usize, j: usize },
    /// `k rho + sign * beta_ij`
    Beta { k: i64, sign: i8, i: usize, j: usize },
    /// `k rho`
    Isotropic { k: i64 },
}

impl RootLabel {
    pub fn k(&self) -> i64 {
        match *self {
            RootLabel::Alpha { k, .. } | RootLabel::Beta { k, .. } | RootLabel::Isotropic { k } => k,
        }
    }

    pub fn is_real(&self) -> bool {
        !matches!(self, RootLabel::Isotropic { .. })
    }

    /// `k rho +- beta_ii`, counting `alpha_nn = alpha_n` as `beta_nn`.
    pub fn is_long(&self, n: usize) -> bool {
        match *self {
            RootLabel::Beta { i, j, .. } => i == j,
            RootLabel::Alpha { i, j, .. } => i == n && j == n,
            RootLabel::Isotropic { .. } => false,
        }
    }

    fn sort_key(&self) -> (i64, u8, i8, usize, usize) {
        match *self {
            RootLabel::Isotropic { k } => (k, 0, 0, 0, 0),
            RootLabel::Alpha { k, sign, i, j } => (k, 1, -sign, i, j),
            RootLabel::Beta { k, sign, i, j } => (k, 2, -sign, i, j),
        }
    }

    pub fn vector(&self, n: usize) -> RootVector {
        match *self {
            RootLabel::Isotropic { k } => RootVector::rho(n).scaled(k),
            RootLabel::Alpha { k, sign, i, j } => {
                &RootVector::rho(n).scaled(k) + &RootVector::alpha(n, i, j).scaled(sign.into())
            }
            RootLabel::Beta { k, sign, i, j } => {
                &RootVector::rho(n).scaled(k) + &RootVector::beta(n, i, j).scaled(sign.into())
            }
        }
    }
}

impl fmt::Display for RootLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (k, sign, name, i, j) = match *self {
            RootLabel::Isotropic { k: 1 } => return write!(f, "rho"),
            RootLabel::Isotropic { k } => return write!(f, "{k}rho"),
            RootLabel::Alpha { k, sign, i, j } => (k, sign, "alpha", i, j),
            RootLabel::Beta { k, sign, i, j } => (k, sign, "beta", i, j),
        };
        let pm = if sign > 0 { '+' } else { '-' };
        match k {
            0 => write!(f, "{name}[{i},{j}]"),
            1 => write!(f, "rho{pm}{name}[{i},{j}]"),
            _ => write!(f, "{k}rho{pm}{name}[{i},{j}]"),
        }
    }
}

/// Sign of the defect.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DefectClass {
    Preprojective,
    Regular,
    Preinjective,
}

impl DefectClass {
    pub fn of(defect: i64) -> Self {
        match defect.signum() {
            1 => DefectClass::Preprojective,
            0 => DefectClass::Regular,
            _ => DefectClass::Preinjective,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootInfo {
    pub coords: RootVector,
    pub label: RootLabel,
    pub real: bool,
    pub long: bool,
    pub defect: i64,
    pub class: DefectClass,
}

/// Cartan matrix, symmetrizer, Euler form and Coxeter matrix for one orientation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanData {
    pub quiver: Quiver,
    pub c: Vec<Vec<i64>>,
    pub d: Vec<i64>,
    pub r: Vec<Vec<i64>>,
    pub coxeter: Vec<Vec<i64>>,
    pub coxeter_inv: Vec<Vec<i64>>,
}

fn cartan_matrix(n: usize) -> Vec<Vec<i64>> {
    let mut c = vec![vec![0; n + 1]; n + 1];
    for i in 0..=n {
        c[i][i] = 2;
        if i > 0 {
            c[i][i - 1] = -1;
        }
        if i < n {
            c[i][i + 1] = -1;
        }
    }
    c[1][0] = -2;
    c[n - 1][n] = -2;
    c
}

fn euler_matrix(quiver: &Quiver) -> Vec<Vec<i64>> {
    let n = quiver.n();
    let mut r = vec![vec![0; n + 1]; n + 1];
    for (i, row) in r.iter_mut().enumerate() {
        row[i] = if quiver.is_loop_vertex(i) { 2 } else { 1 };
    }
    for (tail, head) in quiver.edges() {
        r[tail][head] = if quiver.is_loop_vertex(tail) || quiver.is_loop_vertex(head) {
            -2
        } else {
            -1
        };
    }
    r
}

impl CartanData {
    pub fn new(quiver: Quiver) -> Self {
        let n = quiver.n();
        let c = cartan_matrix(n);
        let d: Vec<i64> = (0..=n)
            .map(|i| if quiver.is_loop_vertex(i) { 2 } else { 1 })
            .collect();
        let r = euler_matrix(&quiver);
        let rm = Matrix::from_i64(&r);
        let r_inv = rm.inverse().expect("Euler form matrix is unimodular");
        let cox = (&r_inv * &rm.transpose()).scale(&q(-1));
        let coxeter = cox.to_i64().expect("Coxeter matrix is integral");
        let coxeter_inv = cox
            .inverse()
            .and_then(|m| m.to_i64())
            .expect("Coxeter matrix is invertible over the integers");
        CartanData {
            quiver,
            c,
            d,
            r,
            coxeter,
            coxeter_inv,
        }
    }

    pub fn from_orientation(n: usize, orientation: &str) -> Result<Self> {
        Ok(CartanData::new(Quiver::parse(n, orientation)?))
    }

    pub fn n(&self) -> usize {
        self.quiver.n()
    }

    fn check_len(&self, a: &RootVector) -> Result<()> {
        if a.0.len() != self.n() + 1 {
            return Err(Error::DimensionMismatch {
                expected: self.n() + 1,
                got: a.0.len(),
            });
        }
        Ok(())
    }

    /// `a^T R b`.
    pub fn euler_form(&self, a: &RootVector, b: &RootVector) -> Result<i64> {
        self.check_len(a)?;
        self.check_len(b)?;
        let mut s = 0;
        for (i, ai) in a.0.iter().enumerate() {
            for (j, bj) in b.0.iter().enumerate() {
                s += ai * self.r[i][j] * bj;
            }
        }
        Ok(s)
    }

    pub fn defect(&self, a: &RootVector) -> Result<i64> {
        self.euler_form(a, &RootVector::rho(self.n()))
    }

    /// Defect computed from sinks and sources of the loop-free quiver.
    pub fn defect_by_sinks(&self, a: &RootVector) -> Result<i64> {
        self.check_len(a)?;
        let sinks: i64 = self.quiver.sinks().iter().map(|&i| a.0[i]).sum();
        let sources: i64 = self.quiver.sources().iter().map(|&i| a.0[i]).sum();
        Ok(2 * (sinks - sources))
    }

    fn apply(m: &[Vec<i64>], a: &RootVector) -> RootVector {
        RootVector(
            m.iter()
                .map(|row| row.iter().zip(&a.0).map(|(x, y)| x * y).sum())
                .collect(),
        )
    }

    pub fn coxeter_apply(&self, a: &RootVector) -> RootVector {
        CartanData::apply(&self.coxeter, a)
    }

    pub fn coxeter_inv_apply(&self, a: &RootVector) -> RootVector {
        CartanData::apply(&self.coxeter_inv, a)
    }

    /// Writes `a` as a positive root, if it is one.
    pub fn root_label(&self, a: &RootVector) -> Option<RootLabel> {
        let n = self.n();
        if a.0.len() != n + 1 || !a.is_nonnegative() || a.is_zero() {
            return None;
        }
        let rho = RootVector::rho(n);
        let kmax = a.0.iter().copied().max().unwrap_or(0) + 1;
        for k in 0..=kmax {
            let d = a - &rho.scaled(k);
            if d.is_zero() {
                return (k >= 1).then_some(RootLabel::Isotropic { k });
            }
            if let Some((beta, i, j)) = match_finite(&d) {
                return Some(if beta {
                    RootLabel::Beta { k, sign: 1, i, j }
                } else {
                    RootLabel::Alpha { k, sign: 1, i, j }
                });
            }
            if k >= 1 {
                if let Some((beta, i, j)) = match_finite(&-&d) {
                    return Some(if beta {
                        RootLabel::Beta { k, sign: -1, i, j }
                    } else {
                        RootLabel::Alpha { k, sign: -1, i, j }
                    });
                }
            }
        }
        None
    }

    pub fn is_positive_root(&self, a: &RootVector) -> bool {
        self.root_label(a).is_some()
    }

    pub fn root_info(&self, label: RootLabel) -> RootInfo {
        let coords = label.vector(self.n());
        let defect = self.defect(&coords).expect("length matches");
        RootInfo {
            coords,
            label,
            real: label.is_real(),
            long: label.is_long(self.n()),
            defect,
            class: DefectClass::of(defect),
        }
    }

    /// All positive roots whose `rho`-coefficient `k` is at most `k_max`.
    pub fn enumerate_positive_roots(&self, k_max: i64) -> Vec<RootInfo> {
        let n = self.n();
        let mut labels = Vec::new();
        for k in 0..=k_max {
            if k >= 1 {
                labels.push(RootLabel::Isotropic { k });
            }
            for sign in [1i8, -1] {
                if sign < 0 && k == 0 {
                    continue;
                }
                for i in 1..=n {
                    for j in i..=n {
                        labels.push(RootLabel::Alpha { k, sign, i, j });
                    }
                }
                for i in 1..n {
                    for j in i..n {
                        labels.push(RootLabel::Beta { k, sign, i, j });
                    }
                }
            }
        }
        labels.sort_by_key(RootLabel::sort_key);
        let mut seen = BTreeSet::new();
        labels
            .into_iter()
            .filter(|l| seen.insert(l.vector(n)))
            .map(|l| self.root_info(l))
            .collect()
    }
}

/// Recognizes `alpha_ij` (`false`) or `beta_ij` (`true`).
fn match_finite(d: &RootVector) -> Option<(bool, usize, usize)> {
    let n = d.n();
    if d.0[0] != 0 || !d.is_nonnegative() || d.is_zero() {
        return None;
    }
    for i in 1..=n {
        for j in i..=n {
            if *d == RootVector::alpha(n, i, j) {
                return Some((false, i, j));
            }
            if j < n && *d == RootVector::beta(n, i, j) {
                return Some((true, i, j));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cartan_for_n2() {
        let cd = CartanData::from_orientation(2, "LL").unwrap();
        assert_eq!(cd.c, vec![vec![2, -1, 0], vec![-2, 2, -2], vec![0, -1, 2]]);
        assert_eq!(cd.d, vec![2, 1, 2]);
    }

    #[test]
    fn example_defects() {
        let cd = CartanData::from_orientation(5, "LRRRL").unwrap();
        let n = 5;
        assert_eq!(cd.defect(&RootVector::simple(n, 0)).unwrap(), 2);
        assert_eq!(cd.defect(&RootVector::simple(n, 1)).unwrap(), -2);
        assert_eq!(cd.defect(&RootVector::simple(n, 2)).unwrap(), 0);
        assert_eq!(cd.defect(&RootVector::rho(n)).unwrap(), 0);
    }

    #[test]
    fn euler_form_values() {
        let cd = CartanData::from_orientation(4, "LRLR").unwrap();
        let a = |i| RootVector::simple(4, i);
        assert_eq!(cd.euler_form(&a(0), &a(0)).unwrap(), 2);
        assert_eq!(cd.euler_form(&a(1), &a(1)).unwrap(), 1);
        assert_eq!(cd.euler_form(&a(0), &a(2)).unwrap(), 0);
        assert_eq!(cd.euler_form(&a(1), &a(4)).unwrap(), 0);
        let rho = RootVector::rho(4);
        assert_eq!(cd.euler_form(&rho, &rho).unwrap(), 0);
        assert!(cd.euler_form(&a(0), &RootVector::zero(3)).is_err());
    }

    #[test]
    fn finite_c2_roots() {
        let cd = CartanData::from_orientation(2, "LR").unwrap();
        let roots: BTreeSet<Vec<i64>> = cd
            .enumerate_positive_roots(0)
            .into_iter()
            .map(|r| r.coords.0)
            .collect();
        let expected: BTreeSet<Vec<i64>> =
            [vec![0, 1, 0], vec![0, 0, 1], vec![0, 1, 1], vec![0, 2, 1]]
                .into_iter()
                .collect();
        assert_eq!(roots, expected);
    }

    #[test]
    fn long_roots_have_double_norm() {
        for n in 2..=4 {
            let cd = CartanData::new(Quiver::all(n).unwrap().remove(0));
            for info in cd.enumerate_positive_roots(3).into_iter().filter(|r| r.real) {
                let a = &info.coords.0;
                let norm: i64 = (0..=n)
                    .flat_map(|i| (0..=n).map(move |j| (i, j)))
                    .map(|(i, j)| a[i] * cd.d[i] * cd.c[i][j] * a[j])
                    .sum();
                assert_eq!(norm, if info.long { 4 } else { 2 }, "{}", info.label);
            }
        }
    }

    #[test]
    fn labels_roundtrip() {
        let cd = CartanData::from_orientation(3, "LRL").unwrap();
        for info in cd.enumerate_positive_roots(3) {
            assert_eq!(cd.root_label(&info.coords), Some(info.label));
            assert!(info.coords.is_nonnegative());
        }
        assert_eq!(cd.root_label(&RootVector(vec![0, 0, 0, 2])), None);
    }
}
