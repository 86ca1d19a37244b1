use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::linalg::{rational_to_string, Rational};
use crate::quiver::Quiver;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Text,
    Json,
}

/// Letters enough for a locally free string of every positive root up to
/// `k_max rho`: such a string winds at most `k_max + 1` times around the cycle.
pub fn letters_needed(n: usize, k_max: usize) -> usize {
    (2 * n + 2) * (k_max + 1)
}

#[derive(Clone, Debug)]
pub struct CampaignConfig {
    pub n: usize,
    /// An `L`/`R` word of length `n`, or `all`.
    pub orientation: String,
    pub k_max: usize,
    pub max_letters: usize,
    pub t_samples: Vec<Rational>,
    pub format: OutputFormat,
}

impl CampaignConfig {
    pub fn new(n: usize, orientation: &str, k_max: usize) -> Self {
        CampaignConfig {
            n,
            orientation: orientation.to_string(),
            k_max,
            max_letters: letters_needed(n, k_max),
            t_samples: crate::convolution::default_t_samples(),
            format: OutputFormat::Text,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n < 2 {
            return Err(Error::RankTooSmall(self.n));
        }
        let need = letters_needed(self.n, self.k_max);
        if self.max_letters < need {
            return Err(Error::OutOfBounds(format!(
                "max_letters {} cannot reach every root up to {} rho, which needs {need}",
                self.max_letters, self.k_max
            )));
        }
        if self.t_samples.is_empty() || self.t_samples.iter().any(|t| *t == Rational::from_integer(0.into())) {
            return Err(Error::NotApplicable("band parameters must be nonzero".into()));
        }
        self.quivers().map(|_| ())
    }

    pub fn quivers(&self) -> Result<Vec<Quiver>> {
        if self.orientation.eq_ignore_ascii_case("all") {
            Quiver::all(self.n)
        } else {
            Ok(vec![Quiver::parse(self.n, &self.orientation)?])
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "orientation": self.orientation,
            "k_max": self.k_max,
            "max_letters": self.max_letters,
            "t_samples": self.t_samples.iter().map(rational_to_string).collect::<Vec<_>>(),
        })
    }
}
