use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::cartan::RootVector;
use crate::error::{Error, Result};
use crate::linalg::{parse_rational, rational_to_string, Matrix, Rational};
use crate::quiver::Quiver;

use super::symbol::Symbol;

/// A function on isomorphism classes of locally free modules of one rank,
/// stored by its finite support.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructibleFunction {
    grade: RootVector,
    terms: BTreeMap<Symbol, Rational>,
}

#[derive(Serialize, serde::Deserialize)]
struct TermJson {
    symbol: String,
    coeff: String,
}

#[derive(Serialize, serde::Deserialize)]
struct FunctionJson {
    grade: RootVector,
    terms: Vec<TermJson>,
}

impl ConstructibleFunction {
    pub fn zero(grade: RootVector) -> Self {
        ConstructibleFunction {
            grade,
            terms: BTreeMap::new(),
        }
    }

    /// The unit: value 1 on the zero module.
    pub fn unit(n: usize) -> Self {
        let mut f = Self::zero(RootVector::zero(n));
        f.terms.insert(Symbol::zero(), Rational::one());
        f
    }

    /// Characteristic function of a single class; the rank is checked.
    pub fn indicator(q: &Quiver, s: Symbol) -> Result<Self> {
        let grade = s.rank_vector(q)?;
        let mut f = Self::zero(grade);
        f.terms.insert(s, Rational::one());
        Ok(f)
    }

    pub fn grade(&self) -> &RootVector {
        &self.grade
    }

    pub fn terms(&self) -> &BTreeMap<Symbol, Rational> {
        &self.terms
    }

    pub fn coeff(&self, s: &Symbol) -> Rational {
        self.terms.get(s).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn support(&self) -> impl Iterator<Item = &Symbol> {
        self.terms.keys()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `c` at `s`, dropping the entry when it cancels.
    pub fn add_term(&mut self, s: Symbol, c: Rational) {
        if c.is_zero() {
            return;
        }
        let v = self.coeff(&s) + c;
        if v.is_zero() {
            self.terms.remove(&s);
        } else {
            self.terms.insert(s, v);
        }
    }

    fn check_grade(&self, other: &Self) -> Result<()> {
        if self.grade != other.grade {
            return Err(Error::DimensionMismatch {
                expected: self.grade.0.len(),
                got: other.grade.0.len(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.is_zero() && self.grade != other.grade {
            return Ok(other.clone());
        }
        if other.is_zero() && self.grade != other.grade {
            return Ok(self.clone());
        }
        self.check_grade(other)?;
        let mut out = self.clone();
        for (s, c) in &other.terms {
            out.add_term(s.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.grade.clone());
        if !c.is_zero() {
            for (s, v) in &self.terms {
                out.terms.insert(s.clone(), v * c);
            }
        }
        out
    }

    /// Every support symbol is indecomposable.
    pub fn is_primitive(&self) -> bool {
        self.terms.keys().all(Symbol::is_indecomposable)
    }

    /// Support symbols that are direct sums of two or more indecomposables.
    pub fn decomposable_support(&self) -> Vec<&Symbol> {
        self.terms.keys().filter(|s| s.parts().len() > 1).collect()
    }

    /// `Some(c)` with `self = c * other`, when such a scalar exists and `other` is nonzero.
    pub fn ratio_to(&self, other: &Self) -> Option<Rational> {
        let (s, v) = other.terms.iter().next()?;
        let c = self.coeff(s) / v;
        (other.scale(&c) == *self).then_some(c)
    }

    pub fn to_json(&self, q: &Quiver) -> serde_json::Value {
        serde_json::to_value(FunctionJson {
            grade: self.grade.clone(),
            terms: self
                .terms
                .iter()
                .map(|(s, c)| TermJson {
                    symbol: s.format(q),
                    coeff: rational_to_string(c),
                })
                .collect(),
        })
        .expect("serializable")
    }

    pub fn from_json(q: &Quiver, v: &serde_json::Value) -> Result<Self> {
        let j: FunctionJson =
            serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        let mut f = Self::zero(j.grade);
        for t in j.terms {
            let s = Symbol::parse(q, &t.symbol)?;
            if s.rank_vector(q)? != f.grade {
                return Err(Error::Parse(format!("symbol `{}` has the wrong rank", t.symbol)));
            }
            let c = parse_rational(&t.coeff)
                .ok_or_else(|| Error::Parse(format!("bad coefficient `{}`", t.coeff)))?;
            f.add_term(s, c);
        }
        Ok(f)
    }

    /// One line per support symbol, `coeff  symbol`.
    pub fn format(&self, q: &Quiver) -> String {
        if self.terms.is_empty() {
            return format!("0 (grade {})", self.grade);
        }
        self.terms
            .iter()
            .map(|(s, c)| format!("{:>6}  {}", rational_to_string(c), s.format(q)))
            .collect::<Vec<_>>()
            .join("\n")
    }
}

/// Exact rank of the coefficient matrix over the union of supports.
pub fn coefficient_rank(fs: &[ConstructibleFunction]) -> usize {
    let symbols: Vec<&Symbol> = {
        let mut all: Vec<&Symbol> = fs.iter().flat_map(|f| f.terms.keys()).collect();
        all.sort();
        all.dedup();
        all
    };
    let rows = fs
        .iter()
        .map(|f| symbols.iter().map(|s| f.coeff(s)).collect())
        .collect();
    Matrix::from_rows(rows).rank()
}

pub fn linear_independent(fs: &[ConstructibleFunction]) -> bool {
    coefficient_rank(fs) == fs.len()
}
