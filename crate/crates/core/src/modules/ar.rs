use crate::error::{Error, Result};
use crate::strings::{BasicStrings, StringWord, WeakClass};

/// String of the Auslander-Reiten translate of `M_w`.
///
/// Defined for weakly preinjective strings and for the simple regular strings `r_i`.
pub fn ar_translate(b: &BasicStrings, w: &StringWord) -> Result<StringWord> {
    if let Some(i) = (1..=b.n()).find(|&i| b.r(i) == w) {
        return Ok(b.r(b.tau(i)).clone());
    }
    match b.classify_weak(w)? {
        WeakClass::Preinjective => b.two_sided(w, -1),
        _ => Err(Error::NotApplicable(
            "translate is computed for weakly preinjective or simple regular strings".into(),
        )),
    }
}

/// String of the inverse Auslander-Reiten translate of `M_w`.
///
/// Defined for weakly preprojective strings and for the simple regular strings `r_i`.
pub fn ar_translate_inv(b: &BasicStrings, w: &StringWord) -> Result<StringWord> {
    if let Some(i) = (1..=b.n()).find(|&i| b.r(i) == w) {
        return Ok(b.r(b.tau_inv(i)).clone());
    }
    match b.classify_weak(w)? {
        WeakClass::Preprojective => b.two_sided(w, 1),
        _ => Err(Error::NotApplicable(
            "inverse translate is computed for weakly preprojective or simple regular strings"
                .into(),
        )),
    }
}
