use serde::{Deserialize, Serialize};

use crate::cartan::{CartanData, DefectClass};
use crate::error::{Error, Result};
use crate::quiver::{Arrow, Letter, Quiver, Side};

use super::word::StringWord;

/// End data `(s', s'', t', t'')` of a locally free string.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EndData {
    pub s_prime: usize,
    pub s_sign: i8,
    pub t_prime: usize,
    pub t_sign: i8,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum HookDirection {
    /// `w[1]`
    RightPlus,
    /// `[1]w`
    LeftPlus,
    /// `w[-1]`
    RightMinus,
    /// `[-1]w`
    LeftMinus,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WeakClass {
    Preprojective,
    Regular,
    Isotropic,
    Preinjective,
}

impl WeakClass {
    pub fn defect_class(self) -> DefectClass {
        match self {
            WeakClass::Preprojective => DefectClass::Preprojective,
            WeakClass::Regular | WeakClass::Isotropic => DefectClass::Regular,
            WeakClass::Preinjective => DefectClass::Preinjective,
        }
    }
}

/// Grows `start` to the right with letters of one direction as far as possible.
fn grow(q: &Quiver, mut w: StringWord, inverse: bool) -> StringWord {
    loop {
        let next = w
            .right_extensions(q)
            .into_iter()
            .find(|x| x.inverse == inverse);
        match next.and_then(|x| w.push(q, x)) {
            Some(longer) => w = longer,
            None => return w,
        }
    }
}

/// The longest string `x^{±1} . (letters of the same direction)`, starting from
/// the arrow in the given slot of `v`, or `None` when that arrow has the wrong
/// direction.
fn maximal_run(q: &Quiver, v: usize, side: Side, inverse: bool) -> Option<StringWord> {
    let a = q.arrow_at(v, side);
    let x = Letter { arrow: a, inverse };
    if q.target(x) != v {
        return None;
    }
    let w = StringWord::new(q, vec![x]).expect("single letter");
    Some(grow(q, w, inverse))
}

/// Basic strings `p_i`, `q_i`, `e_i`, `r_i`, `r'_i` and the permutation `tau`.
#[derive(Clone, Debug)]
pub struct BasicStrings {
    pub quiver: Quiver,
    pub p: Vec<StringWord>,
    pub q: Vec<StringWord>,
    pub e: Vec<StringWord>,
    r: Vec<StringWord>,
    r_prime: Vec<StringWord>,
    tau: Vec<usize>,
}

impl BasicStrings {
    pub fn new(quiver: &Quiver) -> Self {
        let qv = quiver;
        let n = qv.n();
        let p = (0..=n).map(|i| projective(qv, i)).collect();
        let q = (0..=n).map(|i| injective(qv, i)).collect();
        let e = (0..=n)
            .map(|i| match i {
                0 => StringWord::new(qv, vec![Letter::direct(Arrow::Eps(0))]).unwrap(),
                _ if i == n => StringWord::new(qv, vec![Letter::inv(Arrow::Eps(n))]).unwrap(),
                _ => StringWord::trivial(i, true),
            })
            .collect();
        let r: Vec<StringWord> = (1..=n).map(|i| hook_tail(qv, i)).collect();
        let r_prime: Vec<StringWord> = (1..=n).map(|i| cohook_tail(qv, i)).collect();
        let tau = (1..=n)
            .map(|i| {
                let target = r_prime[i - 1].inverse();
                let hits: Vec<usize> = (1..=n).filter(|&j| r[j - 1] == target).collect();
                assert_eq!(hits.len(), 1, "no unique tau({i})");
                hits[0]
            })
            .collect();
        BasicStrings {
            quiver: qv.clone(),
            p,
            q,
            e,
            r,
            r_prime,
            tau,
        }
    }

    /// `r_i` for `1 <= i <= n`.
    pub fn r(&self, i: usize) -> &StringWord {
        &self.r[i - 1]
    }

    /// `r'_i` for `1 <= i <= n`.
    pub fn r_prime(&self, i: usize) -> &StringWord {
        &self.r_prime[i - 1]
    }

    pub fn tau(&self, i: usize) -> usize {
        self.tau[i - 1]
    }

    pub fn tau_inv(&self, i: usize) -> usize {
        (1..=self.n()).find(|&j| self.tau(j) == i).unwrap()
    }

    /// `tau^k(i)` for any integer `k`.
    pub fn tau_pow(&self, i: usize, k: i64) -> usize {
        let mut j = i;
        for _ in 0..k.unsigned_abs() {
            j = if k > 0 { self.tau(j) } else { self.tau_inv(j) };
        }
        j
    }

    pub fn n(&self) -> usize {
        self.quiver.n()
    }

    /// `(s'(w), s''(w), t'(w), t''(w))` by scanning all `2n` candidate letters.
    pub fn end_data(&self, w: &StringWord) -> Result<EndData> {
        let q = &self.quiver;
        if !w.is_locally_free(q) {
            return Err(Error::NotLocallyFree);
        }
        let (s_prime, s_sign) = unique_end(q, w);
        let (t_prime, t_sign) = unique_end(q, &w.inverse());
        Ok(EndData {
            s_prime,
            s_sign,
            t_prime,
            t_sign,
        })
    }

    fn hook_once(&self, w: &StringWord, dir: HookDirection) -> Result<StringWord> {
        let q = &self.quiver;
        match dir {
            HookDirection::LeftPlus => Ok(self
                .hook_once(&w.inverse(), HookDirection::RightPlus)?
                .inverse()),
            HookDirection::LeftMinus => Ok(self
                .hook_once(&w.inverse(), HookDirection::RightMinus)?
                .inverse()),
            HookDirection::RightPlus | HookDirection::RightMinus => {
                let want: i8 = if dir == HookDirection::RightPlus { 1 } else { -1 };
                let ed = self.end_data(w)?;
                if ed.s_sign != want {
                    return Err(Error::SignMismatch {
                        expected: want,
                        found: ed.s_sign,
                    });
                }
                let i = ed.s_prime;
                let x = Letter::with_sign(Arrow::Eta(i), want);
                let tail = if want > 0 { self.r(i) } else { self.r_prime(i) };
                let hooked = w.push(q, x).expect("end data extension");
                Ok(hooked
                    .concat(q, tail)
                    .expect("hook tails extend their arrow"))
            }
        }
    }

    /// Applies a hook operation `count` times.
    pub fn hook_extend(
        &self,
        w: &StringWord,
        dir: HookDirection,
        count: usize,
    ) -> Result<StringWord> {
        let mut cur = w.clone();
        for _ in 0..count {
            cur = self.hook_once(&cur, dir)?;
        }
        Ok(cur)
    }

    /// `[k] w [k]` for `k >= 0`, `[-k] w [-k]` for `k < 0`.
    pub fn two_sided(&self, w: &StringWord, k: i64) -> Result<StringWord> {
        let (l, r) = if k >= 0 {
            (HookDirection::LeftPlus, HookDirection::RightPlus)
        } else {
            (HookDirection::LeftMinus, HookDirection::RightMinus)
        };
        let c = k.unsigned_abs() as usize;
        let right = self.hook_extend(w, r, c)?;
        self.hook_extend(&right, l, c)
    }

    pub fn classify_weak(&self, w: &StringWord) -> Result<WeakClass> {
        let ed = self.end_data(w)?;
        Ok(match (ed.t_sign, ed.s_sign) {
            (1, 1) => WeakClass::Preprojective,
            (-1, -1) => WeakClass::Preinjective,
            _ if ed.s_prime == ed.t_prime => WeakClass::Isotropic,
            _ => WeakClass::Regular,
        })
    }

    /// Index `i` with `w` in the similarity class of `r_i`, if any.
    pub fn simple_regular_index(&self, w: &StringWord) -> Option<usize> {
        use super::classes::SimilarityClass;
        let c = SimilarityClass::of(w);
        (1..=self.n()).find(|&i| SimilarityClass::of(self.r(i)) == c)
    }

    /// Decides membership in the four families of tau-locally free strings.
    ///
    /// Candidates are reconstructed from the rank vector through the
    /// Coxeter matrix, then compared letter by letter.
    pub fn is_tau_locally_free(&self, cd: &CartanData, w: &StringWord) -> Result<bool> {
        let q = &self.quiver;
        let rk = w.rank_vector(q)?;
        let defect = cd.defect(&rk)?;
        let same = |c: &StringWord| c == w || c.inverse() == *w;
        if defect > 0 {
            let mut v = rk.clone();
            for k in 0.. {
                for i in 0..=self.n() {
                    if v == self.p[i].rank_vector(q)? && same(&self.two_sided(&self.p[i], k)?) {
                        return Ok(true);
                    }
                }
                v = cd.coxeter_apply(&v);
                if !v.is_nonnegative() || v.is_zero() {
                    return Ok(false);
                }
            }
            unreachable!()
        } else if defect < 0 {
            let mut v = rk.clone();
            for k in 0.. {
                for i in 0..=self.n() {
                    if v == self.q[i].rank_vector(q)? && same(&self.two_sided(&self.q[i], -k)?) {
                        return Ok(true);
                    }
                }
                v = cd.coxeter_inv_apply(&v);
                if !v.is_nonnegative() || v.is_zero() {
                    return Ok(false);
                }
            }
            unreachable!()
        } else {
            for i in 1..=self.n() {
                let mut c = self.r(i).clone();
                while c.len() <= w.len() {
                    if same(&c) {
                        return Ok(true);
                    }
                    c = self.hook_once(&c, HookDirection::RightPlus)?;
                }
            }
            Ok(false)
        }
    }
}

fn unique_end(q: &Quiver, w: &StringWord) -> (usize, i8) {
    let hits: Vec<(usize, i8)> = (1..=q.n())
        .flat_map(|j| [(j, 1i8), (j, -1i8)])
        .filter(|&(j, s)| w.push(q, Letter::with_sign(Arrow::Eta(j), s)).is_some())
        .collect();
    assert_eq!(hits.len(), 1, "end data of a locally free string is unique");
    hits[0]
}

/// `D . E^-1` where `D`, `E` are the maximal direct strings leaving `i`.
fn projective(q: &Quiver, i: usize) -> StringWord {
    let left = maximal_run(q, i, Side::Lower, true).map(|w| w.inverse());
    let right = maximal_run(q, i, Side::Higher, true);
    join(q, i, left, right)
}

/// `X^-1 . Y` where `X`, `Y` are the maximal direct strings entering `i`.
fn injective(q: &Quiver, i: usize) -> StringWord {
    let left = maximal_run(q, i, Side::Lower, false).map(|w| w.inverse());
    let right = maximal_run(q, i, Side::Higher, false);
    join(q, i, left, right)
}

fn join(
    q: &Quiver,
    i: usize,
    left: Option<StringWord>,
    right: Option<StringWord>,
) -> StringWord {
    match (left, right) {
        (Some(a), Some(b)) => a.concat(q, &b).expect("both slots at a vertex"),
        (Some(a), None) => a,
        (None, Some(b)) => b,
        (None, None) => StringWord::trivial(i, true),
    }
}

/// Longest inverse string `r` with `eta_i . r` a string.
fn hook_tail(q: &Quiver, i: usize) -> StringWord {
    let x = Letter::direct(Arrow::Eta(i));
    let v = q.source(x);
    let start = StringWord::trivial(v, q.source_side(x) == Side::Lower);
    grow(q, start, true)
}

/// Longest direct string `r'` with `eta_i^-1 . r'` a string.
fn cohook_tail(q: &Quiver, i: usize) -> StringWord {
    let x = Letter::inv(Arrow::Eta(i));
    let v = q.source(x);
    let start = StringWord::trivial(v, q.source_side(x) == Side::Lower);
    grow(q, start, false)
}
