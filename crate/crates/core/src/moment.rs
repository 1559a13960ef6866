//! Recovering `M(x)` from a corrupted word.

use crate::code::{moment, CodeParams, ErrorBudget};
use crate::error::{Error, Result};
use crate::scalar::Exact;
use crate::word::{Symbol, Word};

/// Deletes `a` symbols so that the moment of the result is minimal.
///
/// Each round removes the first symbol of the longest non-increasing suffix.
pub fn minimize_moment_deletions(y: &[Symbol], a: usize) -> Result<Word> {
    if a > y.len() {
        return Err(Error::InvalidInput(format!(
            "cannot delete {a} symbols from a word of length {}",
            y.len()
        )));
    }
    let mut v = y.to_vec();
    for _ in 0..a {
        let mut i = v.len() - 1;
        while i > 0 && v[i - 1] >= v[i] {
            i -= 1;
        }
        v.remove(i);
    }
    Ok(Word::new(v))
}

/// The minimizing word from [`minimize_moment_deletions`] and its moment.
///
/// `a` is capped at `len(y)`; a larger budget only arises when `d > n`, where
/// every moment is below `w_{n+1}`.
pub fn reduced_moment<T: Exact>(y: &[Symbol], a: usize, params: &CodeParams<T>) -> Result<(Word, T)> {
    let reduced = minimize_moment_deletions(y, a.min(y.len()))?;
    let m = moment(&reduced, &params.weights)?;
    Ok((reduced, m))
}

/// `M(x)`: `r` when the minimized moment is at most `r`, else `r + w_{n+1}`.
pub fn recover_moment<T: Exact>(y: &[Symbol], params: &CodeParams<T>, budget: ErrorBudget) -> Result<T> {
    let (_, m) = reduced_moment(y, budget.a, params)?;
    Ok(select_moment(&m, params))
}

pub(crate) fn select_moment<T: Exact>(reduced: &T, params: &CodeParams<T>) -> T {
    if *reduced <= params.r {
        params.r.clone()
    } else {
        params.r.clone() + params.modulus.clone()
    }
}
