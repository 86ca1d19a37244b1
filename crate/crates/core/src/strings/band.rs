use serde::{Deserialize, Serialize};

use crate::cartan::RootVector;
use crate::error::{Error, Result};
use crate::quiver::{Letter, Quiver};

use super::word::{junction, rank_from_visits, StringWord};

/// A band, stored as the least word over its rotations and the rotations of its inverse.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Band {
    letters: Vec<Letter>,
}

fn rotations(letters: &[Letter]) -> impl Iterator<Item = Vec<Letter>> + '_ {
    (0..letters.len()).map(move |j| {
        let mut r = letters[j..].to_vec();
        r.extend_from_slice(&letters[..j]);
        r
    })
}

fn inverted(letters: &[Letter]) -> Vec<Letter> {
    letters.iter().rev().map(|x| x.inverted()).collect()
}

/// Checks that `b.b` is a string.
pub fn is_cyclic_string(q: &Quiver, letters: &[Letter]) -> bool {
    let l = letters.len();
    l > 0 && (0..l).all(|p| junction(q, letters[p], letters[(p + 1) % l]).is_ok())
}

impl Band {
    /// Validates `letters` as a band and returns its canonical form, together
    /// with whether the canonical representative is a rotation of the inverse.
    pub fn new(q: &Quiver, letters: Vec<Letter>) -> Result<(Band, bool)> {
        if !is_cyclic_string(q, &letters) {
            return Err(Error::NotABand);
        }
        let direct = rotations(&letters).min().unwrap();
        let inv = rotations(&inverted(&letters)).min().unwrap();
        Ok(if inv < direct {
            (Band { letters: inv }, true)
        } else {
            (Band { letters: direct }, false)
        })
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

    /// Not a proper power of a shorter word.
    pub fn is_primitive(&self) -> bool {
        let l = self.letters.len();
        (1..l)
            .filter(|d| l % d == 0)
            .all(|d| (d..l).any(|p| self.letters[p] != self.letters[p - d]))
    }

    /// `h(b)`: the number of letters divided by `2n+2`, when that divides.
    pub fn height(&self, q: &Quiver) -> Option<usize> {
        let period = 2 * q.n() + 2;
        (self.letters.len() % period == 0).then(|| self.letters.len() / period)
    }

    /// The band read as a string.
    pub fn word(&self) -> StringWord {
        StringWord::from_letters_unchecked(self.letters.clone())
    }

    /// Vertices `t(b_1), s(b_1), ..., s(b_{l-1})`.
    pub fn walk(&self, q: &Quiver) -> Vec<usize> {
        let mut v = vec![q.target(self.letters[0])];
        v.extend(
            self.letters[..self.letters.len() - 1]
                .iter()
                .map(|&x| q.source(x)),
        );
        v
    }

    pub fn rank_vector(&self, q: &Quiver) -> Result<RootVector> {
        rank_from_visits(q, &self.walk(q))
    }

    pub fn format(&self, q: &Quiver) -> String {
        format!("band:{}", self.word().format(q))
    }

    pub fn parse(q: &Quiver, s: &str) -> Result<(Band, bool)> {
        let body = s
            .trim()
            .strip_prefix("band:")
            .ok_or_else(|| Error::Parse(format!("band must start with `band:`: `{s}`")))?;
        let letters = body
            .split('.')
            .map(|t| q.parse_letter(t.trim()))
            .collect::<Result<Vec<_>>>()?;
        Band::new(q, letters)
    }
}

/// The band `eta . en . eta^-1 . e0`, with `eta` the direct walk from n to 0.
pub fn standard_band(q: &Quiver) -> Vec<Letter> {
    let n = q.n();
    let eta: Vec<Letter> = (1..=n)
        .map(|j| crate::quiver::Letter::with_sign(crate::quiver::Arrow::Eta(j), q.omega(j)))
        .collect();
    let mut b = eta.clone();
    b.push(Letter::direct(crate::quiver::Arrow::Eps(n)));
    b.extend(inverted(&eta));
    b.push(Letter::direct(crate::quiver::Arrow::Eps(0)));
    b
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_band_is_primitive_with_rank_rho() {
        for q in Quiver::all(3).unwrap() {
            let (b, _) = Band::new(&q, standard_band(&q)).unwrap();
            assert!(b.is_primitive());
            assert_eq!(b.height(&q), Some(1));
            assert_eq!(b.rank_vector(&q).unwrap(), RootVector::rho(3));
            let mut sq = b.letters().to_vec();
            sq.extend_from_slice(b.letters());
            let (b2, _) = Band::new(&q, sq).unwrap();
            assert!(!b2.is_primitive());
        }
    }

    #[test]
    fn canonical_form_is_rotation_and_inverse_invariant() {
        let q = Quiver::parse(2, "LR").unwrap();
        let b = standard_band(&q);
        let (c, _) = Band::new(&q, b.clone()).unwrap();
        for r in rotations(&b) {
            assert_eq!(Band::new(&q, r.clone()).unwrap().0, c);
            assert_eq!(Band::new(&q, inverted(&r)).unwrap().0, c);
        }
        assert_eq!(Band::parse(&q, &c.format(&q)).unwrap().0, c);
    }
}
