//! The quiver of type C~n with loops at both ends and a chosen orientation.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One of the two half-edge slots at a vertex.
///
/// Every vertex carries exactly two arrow ends: the arrow towards smaller
/// indices sits on `Lower`, the arrow towards larger indices on `Higher`.
/// The loop at 0 occupies `Lower`, the loop at n occupies `Higher`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    Lower,
    Higher,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::Lower => Side::Higher,
            Side::Higher => Side::Lower,
        }
    }
}

/// An arrow of the quiver.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Arrow {
    /// Loop at vertex 0 or n.
    Eps(usize),
    /// The edge joining j-1 and j.
    Eta(usize),
}

impl Arrow {
    pub fn is_loop(self) -> bool {
        matches!(self, Arrow::Eps(_))
    }
}

/// An arrow or a formal inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Letter {
    pub arrow: Arrow,
    pub inverse: bool,
}

impl Letter {
    pub fn direct(arrow: Arrow) -> Self {
        Letter {
            arrow,
            inverse: false,
        }
    }

    pub fn inv(arrow: Arrow) -> Self {
        Letter {
            arrow,
            inverse: true,
        }
    }

    pub fn with_sign(arrow: Arrow, sign: i8) -> Self {
        Letter {
            arrow,
            inverse: sign < 0,
        }
    }

    pub fn inverted(self) -> Self {
        Letter {
            arrow: self.arrow,
            inverse: !self.inverse,
        }
    }

    pub fn sign(self) -> i8 {
        if self.inverse {
            -1
        } else {
            1
        }
    }
}

/// Orientation sign: `+1` when the arrow between j-1 and j points to j-1.
pub type Sign = i8;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Quiver {
    n: usize,
    omega: Vec<Sign>,
}

impl Quiver {
    pub fn new(n: usize, omega: Vec<Sign>) -> Result<Self> {
        if n < 2 {
            return Err(Error::RankTooSmall(n));
        }
        if omega.len() != n {
            return Err(Error::OrientationLength {
                expected: n,
                got: omega.len(),
            });
        }
        if omega.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::BadOrientation(format!("{omega:?}")));
        }
        Ok(Quiver { n, omega })
    }

    /// Parses an orientation string such as `LRRRL`.
    pub fn parse(n: usize, orientation: &str) -> Result<Self> {
        let omega = orientation
            .chars()
            .map(|c| match c {
                'L' | 'l' => Ok(1),
                'R' | 'r' => Ok(-1),
                _ => Err(Error::BadOrientation(orientation.to_string())),
            })
            .collect::<Result<Vec<_>>>()?;
        Quiver::new(n, omega)
    }

    /// All `2^n` orientations for rank `n`, in lexicographic order of their strings.
    pub fn all(n: usize) -> Result<Vec<Quiver>> {
        if n < 2 {
            return Err(Error::RankTooSmall(n));
        }
        (0..1usize << n)
            .map(|mask| {
                let omega = (0..n)
                    .map(|j| if mask >> (n - 1 - j) & 1 == 0 { 1 } else { -1 })
                    .collect();
                Quiver::new(n, omega)
            })
            .collect()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertex_count(&self) -> usize {
        self.n + 1
    }

    /// `omega(j)` for `1 <= j <= n`.
    pub fn omega(&self, j: usize) -> Sign {
        self.omega[j - 1]
    }

    pub fn orientation_string(&self) -> String {
        self.omega
            .iter()
            .map(|&s| if s > 0 { 'L' } else { 'R' })
            .collect()
    }

    pub fn is_loop_vertex(&self, v: usize) -> bool {
        v == 0 || v == self.n
    }

    /// The arrows as pairs `(tail, head)` of the loop-free part.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (1..=self.n)
            .map(|j| {
                if self.omega(j) > 0 {
                    (j, j - 1)
                } else {
                    (j - 1, j)
                }
            })
            .collect()
    }

    /// Sinks of the loop-free quiver.
    pub fn sinks(&self) -> Vec<usize> {
        let e = self.edges();
        (0..=self.n)
            .filter(|&v| e.iter().all(|&(a, _)| a != v))
            .collect()
    }

    /// Sources of the loop-free quiver.
    pub fn sources(&self) -> Vec<usize> {
        let e = self.edges();
        (0..=self.n)
            .filter(|&v| e.iter().all(|&(_, b)| b != v))
            .collect()
    }

    pub fn arrows(&self) -> Vec<Arrow> {
        let mut a = vec![Arrow::Eps(0)];
        a.extend((1..=self.n).map(Arrow::Eta));
        a.push(Arrow::Eps(self.n));
        a
    }

    /// Target vertex of the arrow.
    pub fn head(&self, a: Arrow) -> usize {
        match a {
            Arrow::Eps(v) => v,
            Arrow::Eta(j) => {
                if self.omega(j) > 0 {
                    j - 1
                } else {
                    j
                }
            }
        }
    }

    /// Source vertex of the arrow.
    pub fn tail(&self, a: Arrow) -> usize {
        match a {
            Arrow::Eps(v) => v,
            Arrow::Eta(j) => {
                if self.omega(j) > 0 {
                    j
                } else {
                    j - 1
                }
            }
        }
    }

    /// The slot an arrow occupies at one of its endpoints.
    pub fn side_at(&self, a: Arrow, v: usize) -> Side {
        match a {
            Arrow::Eps(0) => Side::Lower,
            Arrow::Eps(_) => Side::Higher,
            Arrow::Eta(j) => {
                debug_assert!(v == j || v + 1 == j);
                if v + 1 == j {
                    Side::Higher
                } else {
                    Side::Lower
                }
            }
        }
    }

    /// The arrow occupying a slot.
    pub fn arrow_at(&self, v: usize, side: Side) -> Arrow {
        match side {
            Side::Lower if v == 0 => Arrow::Eps(0),
            Side::Lower => Arrow::Eta(v),
            Side::Higher if v == self.n => Arrow::Eps(self.n),
            Side::Higher => Arrow::Eta(v + 1),
        }
    }

    /// `t(x)` in the word convention.
    pub fn target(&self, x: Letter) -> usize {
        if x.inverse {
            self.tail(x.arrow)
        } else {
            self.head(x.arrow)
        }
    }

    /// `s(x)` in the word convention.
    pub fn source(&self, x: Letter) -> usize {
        if x.inverse {
            self.head(x.arrow)
        } else {
            self.tail(x.arrow)
        }
    }

    pub fn target_side(&self, x: Letter) -> Side {
        self.side_at(x.arrow, self.target(x))
    }

    pub fn source_side(&self, x: Letter) -> Side {
        self.side_at(x.arrow, self.source(x))
    }

    /// Letters `x` whose target end sits at `(v, side)`.
    pub fn letters_with_target(&self, v: usize, side: Side) -> Vec<Letter> {
        let a = self.arrow_at(v, side);
        match a {
            Arrow::Eps(_) => vec![Letter::direct(a), Letter::inv(a)],
            Arrow::Eta(_) => {
                if self.head(a) == v {
                    vec![Letter::direct(a)]
                } else {
                    vec![Letter::inv(a)]
                }
            }
        }
    }

    /// Renders a letter in the textual syntax (`e0`, `h3-`, `en`).
    pub fn letter_name(&self, x: Letter) -> String {
        let base = match x.arrow {
            Arrow::Eps(0) => "e0".to_string(),
            Arrow::Eps(_) => "en".to_string(),
            Arrow::Eta(j) => format!("h{j}"),
        };
        if x.inverse {
            base + "-"
        } else {
            base
        }
    }

    pub fn parse_letter(&self, s: &str) -> Result<Letter> {
        let (body, inverse) = match s.strip_suffix('-') {
            Some(b) => (b, true),
            None => (s, false),
        };
        let arrow = match body {
            "e0" => Arrow::Eps(0),
            "en" => Arrow::Eps(self.n),
            _ => {
                let j: usize = body
                    .strip_prefix('h')
                    .and_then(|d| d.parse().ok())
                    .ok_or_else(|| Error::Parse(format!("unknown letter `{s}`")))?;
                if j == 0 || j > self.n {
                    return Err(Error::Parse(format!("arrow index out of range in `{s}`")));
                }
                Arrow::Eta(j)
            }
        };
        Ok(Letter { arrow, inverse })
    }
}

impl fmt::Display for Quiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C~{} [{}]", self.n, self.orientation_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn example_orientation_edges() {
        let q = Quiver::parse(5, "LRRRL").unwrap();
        assert_eq!(q.edges(), vec![(1, 0), (1, 2), (2, 3), (3, 4), (5, 4)]);
        assert_eq!(q.sinks(), vec![0, 4]);
        assert_eq!(q.sources(), vec![1, 5]);
    }

    #[test]
    fn slots_are_consistent() {
        for q in Quiver::all(4).unwrap() {
            for a in q.arrows() {
                for v in [q.head(a), q.tail(a)] {
                    assert_eq!(q.arrow_at(v, q.side_at(a, v)), a);
                }
            }
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(Quiver::parse(1, "L"), Err(Error::RankTooSmall(1))));
        assert!(matches!(
            Quiver::parse(3, "LR"),
            Err(Error::OrientationLength { .. })
        ));
        assert!(Quiver::parse(2, "LX").is_err());
    }

    #[test]
    fn letter_names_roundtrip() {
        let q = Quiver::parse(3, "LRL").unwrap();
        for a in q.arrows() {
            for x in [Letter::direct(a), Letter::inv(a)] {
                assert_eq!(q.parse_letter(&q.letter_name(x)).unwrap(), x);
            }
        }
    }
}
