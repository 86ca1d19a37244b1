use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cartan::RootVector;
use crate::error::{Error, Result};
use crate::quiver::{Letter, Quiver, Side};

/// Data of an empty word: its vertex and which of the two trivial words it is.
///
/// The positive trivial word has its target end on the `Higher` slot and its
/// source end on the `Lower` slot; the negative one is its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Trivial {
    pub vertex: usize,
    pub positive: bool,
}

impl Trivial {
    pub fn target_side(self) -> Side {
        if self.positive {
            Side::Higher
        } else {
            Side::Lower
        }
    }

    pub fn source_side(self) -> Side {
        self.target_side().other()
    }
}

/// A string: letters composed right to left, `s(w_{j-1}) = t(w_j)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct StringWord {
    letters: Vec<Letter>,
    trivial: Option<Trivial>,
}

/// Checks the junction `x . y` (with `s(x) = t(y)` required).
pub(crate) fn junction(q: &Quiver, x: Letter, y: Letter) -> std::result::Result<(), bool> {
    if q.source(x) != q.target(y) {
        return Err(false);
    }
    if q.source_side(x) == q.target_side(y) {
        return Err(true);
    }
    Ok(())
}

impl StringWord {
    pub fn trivial(vertex: usize, positive: bool) -> Self {
        StringWord {
            letters: Vec::new(),
            trivial: Some(Trivial { vertex, positive }),
        }
    }

    /// Validates a nonempty letter sequence.
    pub fn new(q: &Quiver, letters: Vec<Letter>) -> Result<Self> {
        if letters.is_empty() {
            return Err(Error::Parse("empty letter sequence needs a vertex".into()));
        }
        for (p, pair) in letters.windows(2).enumerate() {
            match junction(q, pair[0], pair[1]) {
                Ok(()) => {}
                Err(false) => return Err(Error::NonComposable(p + 1)),
                Err(true) => return Err(Error::ForbiddenPair(p + 1)),
            }
        }
        Ok(StringWord {
            letters,
            trivial: None,
        })
    }

    pub(crate) fn from_letters_unchecked(letters: Vec<Letter>) -> Self {
        debug_assert!(!letters.is_empty());
        StringWord {
            letters,
            trivial: None,
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn trivial_data(&self) -> Option<Trivial> {
        self.trivial
    }

    /// `t(w)`.
    pub fn target(&self, q: &Quiver) -> usize {
        match self.trivial {
            Some(t) => t.vertex,
            None => q.target(self.letters[0]),
        }
    }

    /// `s(w)`.
    pub fn source(&self, q: &Quiver) -> usize {
        match self.trivial {
            Some(t) => t.vertex,
            None => q.source(*self.letters.last().unwrap()),
        }
    }

    pub fn target_side(&self, q: &Quiver) -> Side {
        match self.trivial {
            Some(t) => t.target_side(),
            None => q.target_side(self.letters[0]),
        }
    }

    pub fn source_side(&self, q: &Quiver) -> Side {
        match self.trivial {
            Some(t) => t.source_side(),
            None => q.source_side(*self.letters.last().unwrap()),
        }
    }

    pub fn inverse(&self) -> Self {
        StringWord {
            letters: self.letters.iter().rev().map(|x| x.inverted()).collect(),
            trivial: self.trivial.map(|t| Trivial {
                vertex: t.vertex,
                positive: !t.positive,
            }),
        }
    }

    /// `self . other`, absorbing trivial factors.
    pub fn concat(&self, q: &Quiver, other: &StringWord) -> Result<StringWord> {
        if self.source(q) != other.target(q) {
            return Err(Error::IncompatibleEndpoints);
        }
        if self.source_side(q) == other.target_side(q) {
            return Err(Error::ForbiddenJunction);
        }
        if other.is_empty() {
            return Ok(self.clone());
        }
        if self.is_empty() {
            return Ok(other.clone());
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(StringWord {
            letters,
            trivial: None,
        })
    }

    /// `self . x` if that is a string.
    pub fn push(&self, q: &Quiver, x: Letter) -> Option<StringWord> {
        if self.source(q) != q.target(x) || self.source_side(q) == q.target_side(x) {
            return None;
        }
        let mut letters = self.letters.clone();
        letters.push(x);
        Some(StringWord {
            letters,
            trivial: None,
        })
    }

    /// Letters that can be appended on the right.
    pub fn right_extensions(&self, q: &Quiver) -> Vec<Letter> {
        q.letters_with_target(self.source(q), self.source_side(q).other())
    }

    /// Vertices visited by the walk: `t(w), s(w_1), ..., s(w_l)`.
    pub fn walk(&self, q: &Quiver) -> Vec<usize> {
        let mut v = vec![self.target(q)];
        v.extend(self.letters.iter().map(|&x| q.source(x)));
        v
    }

    pub fn is_locally_free(&self, q: &Quiver) -> bool {
        if let Some(t) = self.trivial {
            return !q.is_loop_vertex(t.vertex);
        }
        let first = self.letters[0];
        let last = *self.letters.last().unwrap();
        let ok_end = |v: usize, x: Letter| !q.is_loop_vertex(v) || x.arrow.is_loop();
        ok_end(q.target(first), first) && ok_end(q.source(last), last)
    }

    /// Rank vector: vertex visits, halved at the loop vertices.
    pub fn rank_vector(&self, q: &Quiver) -> Result<RootVector> {
        rank_from_visits(q, &self.walk(q))
    }

    pub fn count_loops(&self) -> usize {
        self.letters.iter().filter(|x| x.arrow.is_loop()).count()
    }

    /// Textual form, e.g. `e0.h1.h2-`, `1_3` or `1_3-`.
    pub fn format(&self, q: &Quiver) -> String {
        match self.trivial {
            Some(t) => format!("1_{}{}", t.vertex, if t.positive { "" } else { "-" }),
            None => self
                .letters
                .iter()
                .map(|&x| q.letter_name(x))
                .collect::<Vec<_>>()
                .join("."),
        }
    }

    pub fn parse(q: &Quiver, s: &str) -> Result<StringWord> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("1_") {
            let (digits, positive) = match rest.strip_suffix('-') {
                Some(d) => (d, false),
                None => (rest, true),
            };
            let v: usize = digits
                .parse()
                .map_err(|_| Error::Parse(format!("bad trivial word `{s}`")))?;
            if v > q.n() {
                return Err(Error::Parse(format!("vertex out of range in `{s}`")));
            }
            return Ok(StringWord::trivial(v, positive));
        }
        let letters = s
            .split('.')
            .map(|t| q.parse_letter(t.trim()))
            .collect::<Result<Vec<_>>>()?;
        StringWord::new(q, letters)
    }

    /// A display adapter bound to a quiver.
    pub fn display<'a>(&'a self, q: &'a Quiver) -> impl fmt::Display + 'a {
        Shown(self, q)
    }
}

struct Shown<'a>(&'a StringWord, &'a Quiver);

impl fmt::Display for Shown<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.format(self.1))
    }
}

pub(crate) fn rank_from_visits(q: &Quiver, visits: &[usize]) -> Result<RootVector> {
    let mut counts = vec![0i64; q.n() + 1];
    for &v in visits {
        counts[v] += 1;
    }
    for v in [0, q.n()] {
        if counts[v] % 2 != 0 {
            return Err(Error::NonIntegralRank);
        }
        counts[v] /= 2;
    }
    Ok(RootVector(counts))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q5() -> Quiver {
        Quiver::parse(5, "LRRRL").unwrap()
    }

    #[test]
    fn validation_errors() {
        let q = q5();
        assert!(StringWord::parse(&q, "e0.h1").is_ok());
        assert_eq!(StringWord::parse(&q, "e0.e0"), Err(Error::ForbiddenPair(1)));
        assert_eq!(StringWord::parse(&q, "e0.e0-"), Err(Error::ForbiddenPair(1)));
        assert_eq!(StringWord::parse(&q, "h2.h4"), Err(Error::NonComposable(1)));
    }

    #[test]
    fn inverse_and_concat() {
        let q = q5();
        let w = StringWord::parse(&q, "e0.h1").unwrap();
        assert_eq!(w.inverse().format(&q), "h1-.e0-");
        let one = StringWord::trivial(2, true);
        let h = StringWord::parse(&q, "h3-").unwrap();
        assert_eq!(one.concat(&q, &h).unwrap(), h);
        assert_eq!(w.concat(&q, &w.inverse()), Err(Error::ForbiddenJunction));
    }

    #[test]
    fn local_freeness_and_rank() {
        let q = q5();
        let e0 = StringWord::parse(&q, "e0").unwrap();
        assert!(e0.is_locally_free(&q));
        assert_eq!(e0.rank_vector(&q).unwrap(), RootVector::simple(5, 0));
        assert!(!StringWord::trivial(0, true).is_locally_free(&q));
        assert!(StringWord::trivial(3, false).is_locally_free(&q));
        let h1 = StringWord::parse(&q, "h1").unwrap();
        assert!(!h1.is_locally_free(&q));
        assert_eq!(h1.rank_vector(&q), Err(Error::NonIntegralRank));
    }

    #[test]
    fn text_roundtrip() {
        let q = q5();
        for s in ["1_2", "1_4-", "h2-.h3-.h4-.h5.en", "e0.h1.h2-"] {
            assert_eq!(StringWord::parse(&q, s).unwrap().format(&q), s);
        }
    }
}
