use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::cartan::{CartanData, RootVector};
use crate::error::{Error, Result};
use crate::quiver::{Arrow, Letter, Quiver};

use super::word::{StringWord, Trivial};

/// A string over the alphabet where both signs of each loop are merged into one starred letter.
///
/// Loop letters are stored with `inverse = false` and stand for the starred letter.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SimilarityClass {
    letters: Vec<Letter>,
    trivial: Option<Trivial>,
}

fn star(x: Letter) -> Letter {
    if x.arrow.is_loop() {
        Letter::direct(x.arrow)
    } else {
        x
    }
}

impl SimilarityClass {
    pub fn of(w: &StringWord) -> Self {
        SimilarityClass {
            letters: w.letters().iter().map(|&x| star(x)).collect(),
            trivial: w.trivial_data(),
        }
    }

    pub fn star_letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn loop_count(&self) -> usize {
        self.letters.iter().filter(|x| x.arrow.is_loop()).count()
    }

    pub fn inverse(&self) -> Self {
        SimilarityClass {
            letters: self.letters.iter().rev().map(|&x| star(x.inverted())).collect(),
            trivial: self.trivial.map(|t| Trivial {
                vertex: t.vertex,
                positive: !t.positive,
            }),
        }
    }

    pub fn is_self_inverse(&self) -> bool {
        *self == self.inverse()
    }

    /// All resignings of the starred letters, in a fixed order.
    pub fn members(&self, q: &Quiver) -> Vec<StringWord> {
        if let Some(t) = self.trivial {
            return vec![StringWord::trivial(t.vertex, t.positive)];
        }
        let loops: Vec<usize> = (0..self.letters.len())
            .filter(|&p| self.letters[p].arrow.is_loop())
            .collect();
        (0..1usize << loops.len())
            .map(|mask| {
                let mut letters = self.letters.clone();
                for (b, &p) in loops.iter().enumerate() {
                    letters[p].inverse = mask >> b & 1 == 1;
                }
                StringWord::new(q, letters).expect("resigning loops keeps validity")
            })
            .collect()
    }

    pub fn contains(&self, w: &StringWord) -> bool {
        SimilarityClass::of(w) == *self
    }

    /// Textual form with `*` on starred letters, e.g. `e0*.h1`.
    pub fn format(&self, q: &Quiver) -> String {
        if let Some(t) = self.trivial {
            return StringWord::trivial(t.vertex, t.positive).format(q);
        }
        self.letters
            .iter()
            .map(|&x| {
                if x.arrow.is_loop() {
                    q.letter_name(x) + "*"
                } else {
                    q.letter_name(x)
                }
            })
            .collect::<Vec<_>>()
            .join(".")
    }

    pub fn parse(q: &Quiver, s: &str) -> Result<Self> {
        let s = s.trim();
        if s.starts_with("1_") {
            return Ok(SimilarityClass::of(&StringWord::parse(q, s)?));
        }
        let letters = s
            .split('.')
            .map(|t| {
                let t = t.trim();
                match t.strip_suffix('*') {
                    Some(b) => q.parse_letter(b).map(star),
                    None => {
                        let x = q.parse_letter(t)?;
                        if x.arrow.is_loop() {
                            Err(Error::Parse(format!("loop letter `{t}` must be starred")))
                        } else {
                            Ok(x)
                        }
                    }
                }
            })
            .collect::<Result<Vec<_>>>()?;
        let c = SimilarityClass {
            letters,
            trivial: None,
        };
        StringWord::new(q, c.letters.clone())?;
        Ok(c)
    }
}

/// The sign pair labelling one of the four families of locally free star strings.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum XFamily {
    MinusPlus,
    MinusMinus,
    PlusMinus,
    PlusPlus,
}

impl XFamily {
    pub const ALL: [XFamily; 4] = [
        XFamily::MinusPlus,
        XFamily::MinusMinus,
        XFamily::PlusMinus,
        XFamily::PlusPlus,
    ];

    /// Allowed ranges for `(i, j)`: `true` means `1..=n`, `false` means `0..n`.
    fn ranges(self) -> (bool, bool) {
        match self {
            XFamily::MinusPlus => (true, false),
            XFamily::MinusMinus => (true, true),
            XFamily::PlusMinus => (false, true),
            XFamily::PlusPlus => (false, false),
        }
    }

    pub fn inverse(self) -> XFamily {
        match self {
            XFamily::MinusPlus => XFamily::PlusMinus,
            XFamily::PlusMinus => XFamily::MinusPlus,
            f => f,
        }
    }

    pub fn indices(self, n: usize) -> Vec<(usize, usize)> {
        let (a, b) = self.ranges();
        let range = |primed: bool| if primed { 1..=n } else { 0..=n - 1 };
        range(a)
            .flat_map(|i| range(b).map(move |j| (i, j)))
            .collect()
    }
}

/// `eta_{ij}` for `i <= j`: the direct walk from `j` down to `i`.
fn eta(q: &Quiver, i: usize, j: usize) -> Vec<Letter> {
    (i + 1..=j)
        .map(|m| Letter::with_sign(Arrow::Eta(m), q.omega(m)))
        .collect()
}

fn eta_inv(q: &Quiver, i: usize, j: usize) -> Vec<Letter> {
    eta(q, i, j).into_iter().rev().map(Letter::inverted).collect()
}

fn check_range(q: &Quiver, fam: XFamily, i: usize, j: usize) -> Result<()> {
    let n = q.n();
    let (a, b) = fam.ranges();
    let ok = |v: usize, primed: bool| if primed { (1..=n).contains(&v) } else { v < n };
    if ok(i, a) && ok(j, b) {
        Ok(())
    } else {
        Err(Error::IndexOutOfRange(format!("{fam:?} with i={i}, j={j}")))
    }
}

/// The star string `x^{fam}_{i,j,k}`.
pub fn x_form(q: &Quiver, fam: XFamily, i: usize, j: usize, k: usize) -> Result<SimilarityClass> {
    check_range(q, fam, i, j)?;
    let n = q.n();
    let e0 = Letter::direct(Arrow::Eps(0));
    let en = Letter::direct(Arrow::Eps(n));
    let cat = |parts: &[&[Letter]]| parts.concat();
    let full = eta(q, 0, n);
    let full_inv = eta_inv(q, 0, n);
    let letters = match fam {
        XFamily::MinusPlus => {
            let cyc = cat(&[&eta(q, j, n), &[en], &full_inv, &[e0], &eta(q, 0, j)]);
            let head = if i <= j {
                eta(q, i, j)
            } else {
                cat(&[&eta(q, i, n), &[en], &full_inv, &[e0], &eta(q, 0, j)])
            };
            cat(&[&head, &cyc.repeat(k)])
        }
        XFamily::MinusMinus => {
            let cyc = cat(&[&eta_inv(q, 0, j), &[e0], &full, &[en], &eta_inv(q, j, n)]);
            cat(&[&eta(q, i, n), &[en], &eta_inv(q, j, n), &cyc.repeat(k)])
        }
        XFamily::PlusMinus => {
            let cyc = cat(&[&eta_inv(q, 0, j), &[e0], &full, &[en], &eta_inv(q, j, n)]);
            let head = if i >= j {
                eta_inv(q, j, i)
            } else {
                cat(&[&eta_inv(q, 0, i), &[e0], &full, &[en], &eta_inv(q, j, n)])
            };
            cat(&[&head, &cyc.repeat(k)])
        }
        XFamily::PlusPlus => {
            let cyc = cat(&[&eta(q, j, n), &[en], &full_inv, &[e0], &eta(q, 0, j)]);
            cat(&[&eta_inv(q, 0, i), &[e0], &eta(q, 0, j), &cyc.repeat(k)])
        }
    };
    if letters.is_empty() {
        return Ok(SimilarityClass {
            letters,
            trivial: Some(Trivial {
                vertex: i,
                positive: fam == XFamily::MinusPlus,
            }),
        });
    }
    StringWord::new(q, letters.clone())?;
    Ok(SimilarityClass {
        letters,
        trivial: None,
    })
}

/// Rank of `x^{fam}_{i,j,k}` read off the closed-form case tables.
pub fn x_rank(n: usize, fam: XFamily, i: usize, j: usize, k: usize) -> Result<RootVector> {
    let ok = |v: usize, primed: bool| if primed { (1..=n).contains(&v) } else { v < n };
    let (a, b) = fam.ranges();
    if !(ok(i, a) && ok(j, b)) {
        return Err(Error::IndexOutOfRange(format!("{fam:?} with i={i}, j={j}")));
    }
    let k = k as i64;
    let rho = RootVector::rho(n);
    let plus = |v: RootVector, m: i64| &v + &rho.scaled(m);
    let minus = |v: RootVector, m: i64| &rho.scaled(m) - &v;
    Ok(match fam {
        XFamily::MinusPlus => {
            if i <= j {
                plus(RootVector::alpha(n, i, j), k)
            } else if i == j + 1 {
                rho.scaled(k + 1)
            } else {
                minus(RootVector::alpha(n, j + 1, i - 1), k + 1)
            }
        }
        XFamily::MinusMinus => {
            if i <= j && j < n {
                plus(RootVector::beta(n, i, j), k)
            } else if i <= j {
                plus(RootVector::alpha(n, i, n), k)
            } else if i < n {
                plus(RootVector::beta(n, j, i), k)
            } else {
                plus(RootVector::alpha(n, j, n), k)
            }
        }
        XFamily::PlusMinus => {
            if i >= j {
                plus(RootVector::alpha(n, j, i), k)
            } else if i + 1 == j {
                rho.scaled(k + 1)
            } else {
                minus(RootVector::alpha(n, i + 1, j - 1), k + 1)
            }
        }
        XFamily::PlusPlus => {
            if i <= j && j + 1 < n {
                minus(RootVector::beta(n, i + 1, j + 1), k + 1)
            } else if i <= j {
                minus(RootVector::alpha(n, i + 1, n), k + 1)
            } else if i + 1 < n {
                minus(RootVector::beta(n, j + 1, i + 1), k + 1)
            } else {
                minus(RootVector::alpha(n, j + 1, n), k + 1)
            }
        }
    })
}

/// All locally free star strings of rank `alpha`, as similarity classes.
///
/// Real roots give `[w]` and `[w^-1]` (a single class when the root is long);
/// `k rho` gives `2n` classes.
pub fn root_to_classes(cd: &CartanData, alpha: &RootVector) -> Result<Vec<SimilarityClass>> {
    let label = cd.root_label(alpha).ok_or(Error::NotARoot)?;
    let q = &cd.quiver;
    let n = q.n();
    let k_top = label.k().max(0) as usize;
    let mut out = BTreeSet::new();
    for fam in XFamily::ALL {
        for (i, j) in fam.indices(n) {
            for k in 0..=k_top {
                if x_rank(n, fam, i, j, k)? == *alpha {
                    out.insert(x_form(q, fam, i, j, k)?);
                }
            }
        }
    }
    Ok(out.into_iter().collect())
}
