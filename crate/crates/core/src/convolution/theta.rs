use std::collections::HashMap;
use std::fmt;
use std::sync::Mutex;

use num_traits::{One, Zero};

use crate::cartan::RootVector;
use crate::error::{Error, Result};
use crate::linalg::{q as rat, rational_to_string, Rational};
use crate::modules::opposite_quiver;
use crate::quiver::{Arrow, Letter, Quiver};
use crate::strings::{root_to_classes, Band, HookDirection, SimilarityClass, StringWord};

use super::engine::{ConvolutionAlgebra, UniverseKind};
use super::function::ConstructibleFunction;
use super::symbol::{Indecomposable, Symbol};

/// How a real-root function was obtained.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Recipe {
    /// `theta_i`.
    Simple(usize),
    /// `[Theta_beta, chi_[r_i]] = factor * Theta_alpha`; a factor of 2 marks a long root.
    Hook {
        beta: RootVector,
        i: usize,
        factor: Rational,
    },
    /// The left-nested bracket of `chi_[r_j]` along the tau-orbit of `i`, `k` steps.
    Regular { i: usize, k: usize },
}

impl fmt::Display for Recipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Recipe::Simple(i) => write!(f, "theta_{i}"),
            Recipe::Hook { beta, i, factor } => {
                write!(f, "[Theta_{beta}, chi_[r_{i}]] / {}", rational_to_string(factor))
            }
            Recipe::Regular { i, k } => write!(f, "iterated bracket from r_{i}, {k} steps"),
        }
    }
}

/// Memo for [`ConvolutionAlgebra::theta_real`].
#[derive(Default)]
pub struct ThetaCache {
    real: Mutex<HashMap<RootVector, (ConstructibleFunction, Recipe)>>,
}

/// The largest multiple of `rho` allowed in a real root handled by the recursion.
pub const MAX_RHO_MULTIPLE: i64 = 4;

impl ConvolutionAlgebra {
    /// `chi_w`, the characteristic function of `M_w`.
    pub fn chi(&self, w: &StringWord) -> Result<ConstructibleFunction> {
        let q = self.quiver();
        if !w.is_locally_free(q) {
            return Err(Error::NotLocallyFree);
        }
        ConstructibleFunction::indicator(q, Symbol::string(w))
    }

    /// `chi_[w]`: the sum over the class, halved when the class is closed under inversion.
    pub fn chi_class(&self, c: &SimilarityClass) -> Result<ConstructibleFunction> {
        let q = self.quiver();
        let members = c.members(q);
        let weight = if c.is_self_inverse() {
            Rational::new(1.into(), 2.into())
        } else {
            Rational::one()
        };
        let mut f = ConstructibleFunction::zero(members[0].rank_vector(q)?);
        for w in &members {
            if !w.is_locally_free(q) {
                return Err(Error::NotLocallyFree);
            }
            f.add_term(Symbol::string(w), weight.clone());
        }
        Ok(f)
    }

    /// `theta_i = chi_{e_i}`.
    pub fn theta(&self, i: usize) -> Result<ConstructibleFunction> {
        if i > self.quiver().n() {
            return Err(Error::IndexOutOfRange(format!("vertex {i}")));
        }
        self.chi(&self.basic().e[i])
    }

    fn class_members(&self, w: &StringWord) -> (Vec<StringWord>, Rational) {
        let c = SimilarityClass::of(w);
        let weight = if c.is_self_inverse() {
            Rational::new(1.into(), 2.into())
        } else {
            Rational::one()
        };
        (c.members(self.quiver()), weight)
    }

    /// The closed form for `[chi_w, chi_r]` with `r` in `[r_i]`.
    pub fn key_bracket(&self, w: &StringWord, r: &StringWord) -> Result<ConstructibleFunction> {
        let q = self.quiver();
        let b = self.basic();
        let i = b.simple_regular_index(r).ok_or(Error::NotSimpleRegular)?;
        let ed = b.end_data(w)?;
        let grade = &w.rank_vector(q)? + &r.rank_vector(q)?;
        let mut out = ConstructibleFunction::zero(grade);
        let back = b.tau_inv(i);
        let eta = Letter::direct(Arrow::Eta(i));
        let zeta = Letter::direct(Arrow::Eta(back));
        let one = |x: Letter| StringWord::new(q, vec![x]).expect("single letter");
        let mut push = |word: Result<StringWord>, sign: i64| -> Result<()> {
            out.add_term(Symbol::string(&word?), rat(sign));
            Ok(())
        };
        if ed.s_sign == 1 && ed.s_prime == i {
            push(w.concat(q, &one(eta)).and_then(|x| x.concat(q, r)), 1)?;
        }
        if ed.s_sign == -1 && ed.s_prime == back {
            push(w.concat(q, &one(zeta.inverted())).and_then(|x| x.concat(q, &r.inverse())), -1)?;
        }
        if ed.t_sign == 1 && ed.t_prime == i {
            push(r.inverse().concat(q, &one(eta.inverted())).and_then(|x| x.concat(q, w)), 1)?;
        }
        if ed.t_sign == -1 && ed.t_prime == back {
            push(r.concat(q, &one(zeta)).and_then(|x| x.concat(q, w)), -1)?;
        }
        Ok(out)
    }

    /// `[f, chi_[r_i]]` assembled from [`Self::key_bracket`]; `f` must be supported on strings.
    pub fn key_bracket_class(&self, f: &ConstructibleFunction, i: usize) -> Result<ConstructibleFunction> {
        let q = self.quiver();
        let r_i = self.basic().r(i).clone();
        let (members, weight) = self.class_members(&r_i);
        let mut out = ConstructibleFunction::zero(f.grade() + &r_i.rank_vector(q)?);
        for (s, c) in f.terms() {
            let w = match s.parts() {
                [Indecomposable::String(w)] => w,
                _ => {
                    return Err(Error::NotApplicable(format!(
                        "key bracket needs string support, found {}",
                        s.format(q)
                    )))
                }
            };
            for r in &members {
                let term = self.key_bracket(w, r)?.scale(&(c * &weight));
                out = out.add(&term)?;
            }
        }
        Ok(out)
    }

    /// `chi_[r_i]` as the iterated commutator of generators along the support
    /// of `rk(r_i)`, starting at the far end and finishing at `i` when `eta_i`
    /// points left, at `i - 1` when it points right.
    pub fn simple_regular_chi(&self, i: usize) -> Result<(ConstructibleFunction, Vec<usize>)> {
        let q = self.quiver();
        let n = q.n();
        if !(1..=n).contains(&i) {
            return Err(Error::IndexOutOfRange(format!("r_{i}")));
        }
        let rk = self.basic().r(i).rank_vector(q)?;
        let support: Vec<usize> = (0..=n).filter(|&v| rk.0[v] != 0).collect();
        let (lo, hi) = (support[0], *support.last().unwrap());
        let anchor = if q.omega(i) > 0 { i } else { i - 1 };
        let order: Vec<usize> = if anchor == lo {
            (lo..=hi).rev().collect()
        } else if anchor == hi {
            (lo..=hi).collect()
        } else {
            return Err(Error::NotApplicable(format!("support of rk(r_{i}) does not end at {anchor}")));
        };
        let mut f = self.theta(order[0])?;
        for &v in &order[1..] {
            f = self.commutator(&f, &self.theta(v)?)?;
        }
        Ok((f, order))
    }

    /// `r_i[k]`.
    pub fn r_hooked(&self, i: usize, k: usize) -> Result<StringWord> {
        self.basic().hook_extend(self.basic().r(i), HookDirection::RightPlus, k)
    }

    /// The left-nested bracket `[..[chi_[r_i], chi_[r_tau^-1(i)]], .., chi_[r_tau^-k(i)]]`,
    /// through the closed form.
    pub fn iterated_regular_bracket(&self, i: usize, k: usize) -> Result<ConstructibleFunction> {
        let mut f = self.chi_class(&SimilarityClass::of(self.basic().r(i)))?;
        for step in 1..=k {
            let j = self.basic().tau_pow(i, -(step as i64));
            f = self.key_bracket_class(&f, j)?;
        }
        Ok(f)
    }

    /// The same bracket, with every step computed by convolution.
    pub fn iterated_regular_bracket_by_convolution(&self, i: usize, k: usize) -> Result<ConstructibleFunction> {
        let mut f = self.chi_class(&SimilarityClass::of(self.basic().r(i)))?;
        for step in 1..=k {
            let j = self.basic().tau_pow(i, -(step as i64));
            let g = self.chi_class(&SimilarityClass::of(self.basic().r(j)))?;
            f = self.commutator(&f, &g)?;
        }
        Ok(f)
    }

    /// `chi_[r_i[k]]`, minus `chi_[r_tau(i)[k]]` when `k = -1 mod n`.
    pub fn regular_closed_form(&self, i: usize, k: usize) -> Result<ConstructibleFunction> {
        let n = self.quiver().n();
        let main = self.chi_class(&SimilarityClass::of(&self.r_hooked(i, k)?))?;
        if (k + 1) % n == 0 {
            let other = self.chi_class(&SimilarityClass::of(&self.r_hooked(self.basic().tau(i), k)?))?;
            main.sub(&other)
        } else {
            Ok(main)
        }
    }

    /// `(ad theta_i)^(1 - c_ij)(theta_j)` over the full universe of every intermediate grade.
    pub fn serre_element(&self, i: usize, j: usize) -> Result<ConstructibleFunction> {
        if i == j {
            return Err(Error::NotApplicable("Serre relations need i != j".into()));
        }
        let power = 1 - self.cartan().c[i][j];
        let ti = self.theta(i)?;
        let mut f = self.theta(j)?;
        for _ in 0..power {
            let u = self.universe(&(ti.grade() + f.grade()), UniverseKind::Full);
            f = self.bracket(&ti, &f, &u)?;
        }
        Ok(f)
    }

    pub fn serre_check(&self, i: usize, j: usize) -> Result<bool> {
        Ok(self.serre_element(i, j)?.is_zero())
    }

    /// `Theta_alpha` for a positive real root, with the recipe that produced it.
    pub fn theta_real(&self, cache: &ThetaCache, alpha: &RootVector) -> Result<(ConstructibleFunction, Recipe)> {
        if let Some(hit) = cache.real.lock().unwrap().get(alpha) {
            return Ok(hit.clone());
        }
        let q = self.quiver();
        let n = q.n();
        let label = self.cartan().root_label(alpha).ok_or(Error::NotARoot)?;
        if !label.is_real() {
            return Err(Error::NotRealRoot);
        }
        if label.k() > MAX_RHO_MULTIPLE {
            return Err(Error::OutOfBounds(format!("{alpha} is beyond {MAX_RHO_MULTIPLE} rho")));
        }
        let result = if let Some(i) = (0..=n).find(|&i| *alpha == RootVector::simple(n, i)) {
            (self.theta(i)?, Recipe::Simple(i))
        } else if self.cartan().defect(alpha)? == 0 {
            self.theta_regular(alpha)?
        } else {
            self.theta_by_hook(cache, alpha)?
        };
        cache.real.lock().unwrap().insert(alpha.clone(), result.clone());
        Ok(result)
    }

    fn theta_regular(&self, alpha: &RootVector) -> Result<(ConstructibleFunction, Recipe)> {
        let q = self.quiver();
        let n = q.n();
        for i in 1..=n {
            for k in 0.. {
                if (k + 1) % n == 0 {
                    continue;
                }
                let rk = self.r_hooked(i, k)?.rank_vector(q)?;
                if rk.height() > alpha.height() {
                    break;
                }
                if rk == *alpha {
                    return Ok((self.iterated_regular_bracket(i, k)?, Recipe::Regular { i, k }));
                }
            }
        }
        Err(Error::NotApplicable(format!("no r_i[k] of rank {alpha}")))
    }

    /// Splits a string of rank `alpha` as `v eta_i r` (positive defect) or
    /// `v zeta^-1 r^-1` (negative defect) and brackets `Theta_rk(v)` with `chi_[r_i]`.
    fn theta_by_hook(&self, cache: &ThetaCache, alpha: &RootVector) -> Result<(ConstructibleFunction, Recipe)> {
        let q = self.quiver();
        let n = q.n();
        let classes = root_to_classes(self.cartan(), alpha)?;
        let target = self.chi_class(&classes[0])?;
        let positive = self.cartan().defect(alpha)? > 0;
        let mut words: Vec<StringWord> = Vec::new();
        for c in &classes {
            words.extend(c.members(q));
            words.extend(c.inverse().members(q));
        }
        for w in &words {
            for i in 1..=n {
                let (joint, tails): (Letter, Vec<StringWord>) = if positive {
                    (
                        Letter::direct(Arrow::Eta(i)),
                        self.class_members(self.basic().r(i)).0,
                    )
                } else {
                    (
                        Letter::inv(Arrow::Eta(self.basic().tau_inv(i))),
                        self.class_members(self.basic().r(i)).0.iter().map(StringWord::inverse).collect(),
                    )
                };
                for tail in &tails {
                    let Some(v) = self.prefix_before(w, joint, tail) else { continue };
                    let beta = v.rank_vector(q)?;
                    let Ok((theta_beta, _)) = self.theta_real(cache, &beta) else { continue };
                    let bracket = self.key_bracket_class(&theta_beta, i)?;
                    if let Some(factor) = bracket.ratio_to(&target) {
                        if !factor.is_zero() {
                            return Ok((target, Recipe::Hook { beta, i, factor }));
                        }
                    }
                }
            }
        }
        Err(Error::NotApplicable(format!("no hook decomposition for {alpha}")))
    }

    /// `v` with `w = v . x . tail`, when it exists and is locally free.
    fn prefix_before(&self, w: &StringWord, x: Letter, tail: &StringWord) -> Option<StringWord> {
        let q = self.quiver();
        let wl = w.letters();
        let tl = tail.letters();
        if wl.len() < tl.len() + 1 {
            return None;
        }
        let cut = wl.len() - tl.len() - 1;
        if wl[cut] != x || wl[cut + 1..] != *tl {
            return None;
        }
        let candidates: Vec<StringWord> = if cut == 0 {
            let v = q.target(x);
            vec![StringWord::trivial(v, true), StringWord::trivial(v, false)]
        } else {
            vec![StringWord::new(q, wl[..cut].to_vec()).ok()?]
        };
        let one = StringWord::new(q, vec![x]).ok()?;
        candidates.into_iter().find(|v| {
            v.is_locally_free(q)
                && v.concat(q, &one)
                    .and_then(|y| y.concat(q, tail))
                    .map(|y| y == *w)
                    .unwrap_or(false)
        })
    }

    /// `Theta^(i)_{k rho}`: the difference form for `i < n`, and
    /// `[Theta_{k rho - alpha_n}, theta_n]` for `i = n`.
    pub fn theta_isotropic(&self, cache: &ThetaCache, k: usize, i: usize) -> Result<ConstructibleFunction> {
        let q = self.quiver();
        let n = q.n();
        if k == 0 || k as i64 > MAX_RHO_MULTIPLE || !(1..=n).contains(&i) {
            return Err(Error::OutOfBounds(format!("Theta^({i}) at {k} rho")));
        }
        if i < n {
            let kk = k * n - 1;
            let a = self.chi_class(&SimilarityClass::of(&self.r_hooked(i, kk)?))?;
            let b = self.chi_class(&SimilarityClass::of(&self.r_hooked(self.basic().tau(i), kk)?))?;
            return a.sub(&b);
        }
        let beta = &RootVector::rho(n).scaled(k as i64) - &RootVector::simple(n, n);
        let (tb, _) = self.theta_real(cache, &beta)?;
        self.commutator(&tb, &self.theta(n)?)
    }

    /// The whole difference family `Theta^(1..n)_{k rho}` built from `r_i[kn-1]` for every `i`.
    pub fn difference_family(&self, k: usize) -> Result<Vec<ConstructibleFunction>> {
        let n = self.quiver().n();
        let kk = k * n - 1;
        (1..=n)
            .map(|i| {
                let a = self.chi_class(&SimilarityClass::of(&self.r_hooked(i, kk)?))?;
                let b = self.chi_class(&SimilarityClass::of(&self.r_hooked(self.basic().tau(i), kk)?))?;
                a.sub(&b)
            })
            .collect()
    }

    /// Every indecomposable class of rank `alpha`, each with coefficient one.
    pub fn indicator_of_rank(&self, alpha: &RootVector) -> ConstructibleFunction {
        let mut f = ConstructibleFunction::zero(alpha.clone());
        for p in self.indecomposables(alpha).iter() {
            f.add_term(Symbol::from_parts(vec![p.clone()]), Rational::one());
        }
        f
    }
}

/// The band `eta^-1 e0^-1 eta en^-1` when `n` is a source, with `eta` the
/// direct walk from `n` to `0`. When `n` is a sink, the same band built over
/// the opposite quiver, with every letter inverted.
pub fn stable_band(q: &Quiver) -> Band {
    let n = q.n();
    let source = q.omega(n) > 0;
    let qq = if source { q.clone() } else { opposite_quiver(q) };
    let eta: Vec<Letter> = (1..=n).map(|j| Letter::with_sign(Arrow::Eta(j), qq.omega(j))).collect();
    let mut letters: Vec<Letter> = eta.iter().rev().map(|x| x.inverted()).collect();
    letters.push(Letter::inv(Arrow::Eps(0)));
    letters.extend_from_slice(&eta);
    letters.push(Letter::inv(Arrow::Eps(n)));
    if !source {
        letters = letters.iter().map(|x| x.inverted()).collect();
    }
    Band::new(q, letters).expect("stable band is a band").0
}
