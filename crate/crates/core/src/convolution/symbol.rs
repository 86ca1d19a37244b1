use std::fmt::Write as _;

use crate::cartan::RootVector;
use crate::error::{Error, Result};
use crate::linalg::Rational;
use crate::modules::{band_module, string_module, Representation};
use crate::quiver::Quiver;
use crate::strings::{canonical_string, Band, StringWord};

/// An indecomposable locally free module up to isomorphism.
///
/// Band entries stand for the whole family `M_(b,t,m)`, `t` in `C*`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Indecomposable {
    String(StringWord),
    Band { band: Band, m: usize },
}

impl Indecomposable {
    pub fn string(w: &StringWord) -> Self {
        Indecomposable::String(canonical_string(w))
    }

    pub fn rank_vector(&self, q: &Quiver) -> Result<RootVector> {
        match self {
            Indecomposable::String(w) => w.rank_vector(q),
            Indecomposable::Band { band, m } => Ok(band.rank_vector(q)?.scaled(*m as i64)),
        }
    }

    pub fn is_band(&self) -> bool {
        matches!(self, Indecomposable::Band { .. })
    }

    /// The module itself; `t` is used only for bands.
    pub fn module(&self, q: &Quiver, t: &Rational) -> Result<Representation> {
        match self {
            Indecomposable::String(w) => Ok(string_module(q, w)),
            Indecomposable::Band { band, m } => band_module(q, band, t, *m),
        }
    }

    pub fn format(&self, q: &Quiver) -> String {
        match self {
            Indecomposable::String(w) => w.format(q),
            Indecomposable::Band { band, m } if *m == 1 => band.format(q),
            Indecomposable::Band { band, m } => format!("{}^{m}", band.format(q)),
        }
    }

    pub fn parse(q: &Quiver, s: &str) -> Result<Self> {
        let s = s.trim();
        if s.starts_with("band:") {
            let (word, m) = match s.split_once('^') {
                Some((w, m)) => (w, m.parse().map_err(|_| Error::Parse(format!("bad multiplicity in `{s}`")))?),
                None => (s, 1),
            };
            if m == 0 {
                return Err(Error::Parse("band multiplicity must be positive".into()));
            }
            let (band, _) = Band::parse(q, word)?;
            Ok(Indecomposable::Band { band, m })
        } else {
            Ok(Indecomposable::string(&StringWord::parse(q, s)?))
        }
    }
}

/// A locally free module up to isomorphism: a sorted multiset of indecomposables.
///
/// The empty multiset is the zero module.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Symbol(Vec<Indecomposable>);

impl Symbol {
    pub fn zero() -> Self {
        Symbol(Vec::new())
    }

    pub fn from_parts(mut parts: Vec<Indecomposable>) -> Self {
        parts.sort();
        Symbol(parts)
    }

    pub fn string(w: &StringWord) -> Self {
        Symbol(vec![Indecomposable::string(w)])
    }

    pub fn band(band: Band, m: usize) -> Self {
        Symbol(vec![Indecomposable::Band { band, m }])
    }

    pub fn parts(&self) -> &[Indecomposable] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_indecomposable(&self) -> bool {
        self.0.len() == 1
    }

    pub fn direct_sum(&self, other: &Symbol) -> Symbol {
        let mut parts = self.0.clone();
        parts.extend(other.0.iter().cloned());
        Symbol::from_parts(parts)
    }

    pub fn rank_vector(&self, q: &Quiver) -> Result<RootVector> {
        let mut r = RootVector::zero(q.n());
        for p in &self.0 {
            r = &r + &p.rank_vector(q)?;
        }
        Ok(r)
    }

    pub fn band_count(&self) -> usize {
        self.0.iter().filter(|p| p.is_band()).count()
    }

    pub fn module(&self, q: &Quiver, t: &Rational) -> Result<Representation> {
        let mut out = Representation::zero(crate::modules::RepQuiver::of(q));
        for p in &self.0 {
            out = out.direct_sum(&p.module(q, t)?);
        }
        Ok(out)
    }

    /// Summands joined by ` + `; the zero module prints as `0`.
    pub fn format(&self, q: &Quiver) -> String {
        if self.0.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        for (k, p) in self.0.iter().enumerate() {
            if k > 0 {
                s.push_str(" + ");
            }
            let _ = write!(s, "{}", p.format(q));
        }
        s
    }

    pub fn parse(q: &Quiver, s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "0" {
            return Ok(Symbol::zero());
        }
        let parts = s
            .split(" + ")
            .map(|p| Indecomposable::parse(q, p))
            .collect::<Result<Vec<_>>>()?;
        Ok(Symbol::from_parts(parts))
    }
}
