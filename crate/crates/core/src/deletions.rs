//! Deletions-only decoding against an exact moment.

use crate::code::{build_weights, symbol_window, WeightTable};
use crate::error::{Error, Result};
use crate::scalar::Exact;
use crate::word::{Symbol, Word};

/// Recovers the length-`n_target` supersequence of `y_prime` with moment
/// `exact_moment`.
///
/// Always returns a word of length `n_target`; when no such word exists the
/// result comes from [`moment_guided_fill`].
pub fn decode_deletions<T: Exact>(
    y_prime: &[Symbol],
    n_target: usize,
    exact_moment: &T,
    q: u32,
    d: usize,
) -> Result<Word> {
    let w = build_weights::<T>(q, d, n_target + 2)?;
    decode_deletions_in(y_prime, n_target, exact_moment, &w)
}

/// [`decode_deletions`] with a prebuilt weight table.
pub fn decode_deletions_in<T: Exact>(
    y_prime: &[Symbol],
    n_target: usize,
    exact_moment: &T,
    w: &WeightTable<T>,
) -> Result<Word> {
    check_input(y_prime, n_target, w)?;
    let found = search(y_prime, n_target, exact_moment, w);
    Ok(match found.into_iter().min() {
        Some(x) => x,
        None => moment_guided_fill(y_prime, n_target, exact_moment, w),
    })
}

/// Every word of length `n_target` with moment `exact_moment` that contains
/// `y_prime` as a subsequence, in lexicographic order.
pub fn deletion_candidates<T: Exact>(
    y_prime: &[Symbol],
    n_target: usize,
    exact_moment: &T,
    w: &WeightTable<T>,
) -> Result<Vec<Word>> {
    check_input(y_prime, n_target, w)?;
    let mut found = search(y_prime, n_target, exact_moment, w);
    found.sort();
    Ok(found)
}

fn check_input<T: Exact>(y_prime: &[Symbol], n_target: usize, w: &WeightTable<T>) -> Result<()> {
    if y_prime.len() > n_target {
        return Err(Error::InvalidInput(format!(
            "received length {} exceeds target length {n_target}",
            y_prime.len()
        )));
    }
    if n_target - y_prime.len() > w.d() {
        return Err(Error::InvalidInput(format!(
            "{} deletions exceed the budget d = {}",
            n_target - y_prime.len(),
            w.d()
        )));
    }
    if n_target > w.max_word_len() {
        return Err(Error::LengthMismatch {
            expected: w.max_word_len(),
            actual: n_target,
        });
    }
    Word::from(y_prime).check_alphabet(w.p())
}

/// Right-to-left search: each position takes a symbol from the window
/// allowed by the remaining moment, matching `y_prime` greedily from the end.
fn search<T: Exact>(y: &[Symbol], n: usize, m: &T, w: &WeightTable<T>) -> Vec<Word> {
    let mut x = vec![0; n];
    let mut found = Vec::new();
    descend(y, n, y.len(), m.clone(), w, &mut x, &mut found);
    found
}

fn descend<T: Exact>(
    y: &[Symbol],
    i: usize,
    j: usize,
    m: T,
    w: &WeightTable<T>,
    x: &mut [Symbol],
    found: &mut Vec<Word>,
) {
    if i == 0 {
        if j == 0 && m.is_zero() {
            found.push(Word::from(&x[..]));
        }
        return;
    }
    for g in symbol_window(&m, i, w) {
        let matched = j > 0 && y[j - 1] == g;
        if !matched && i - 1 < j {
            continue;
        }
        x[i - 1] = g;
        let rest = m.clone() - w[i].scale(g);
        descend(y, i - 1, if matched { j - 1 } else { j }, rest, w, x, found);
    }
}

/// Deterministic length-`n_target` word for inputs with no valid decoding.
///
/// Right to left: copy `y_prime` once no insertions remain; otherwise keep
/// the next symbol of `y_prime` when the remaining moment allows it, else
/// insert the largest symbol whose weight fits.
pub fn moment_guided_fill<T: Exact>(y_prime: &[Symbol], n_target: usize, exact_moment: &T, w: &WeightTable<T>) -> Word {
    let p = w.p();
    let mut x = vec![0; n_target];
    let mut m = exact_moment.clone();
    let mut j = y_prime.len();
    for i in (1..=n_target).rev() {
        let keep = j > 0
            && (i == j || {
                let low = w[i].scale(y_prime[j - 1]);
                low <= m && m <= low + w.reach(i - 1).clone()
            });
        let g = if keep {
            j -= 1;
            y_prime[j]
        } else if m.is_positive() {
            (m.clone() / w[i].clone())
                .to_u32()
                .map_or(p, |v| v.min(u32::from(p)) as Symbol)
        } else {
            0
        };
        x[i - 1] = g;
        m = m - w[i].scale(g);
    }
    Word::new(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::w;

    #[test]
    fn recovers_substep_words() {
        assert_eq!(decode_deletions(&w("001"), 4, &12i64, 2, 3).unwrap(), w("0011"));
        assert_eq!(decode_deletions(&w("0130"), 5, &832i64, 4, 2).unwrap(), w("01303"));
        assert_eq!(decode_deletions(&[], 0, &0i64, 2, 3).unwrap(), Word::empty());
    }

    #[test]
    fn invalid_inputs_still_have_target_length() {
        let y = w("0011100");
        let outs: Vec<String> = (1..=7)
            .map(|j| {
                let yp = crate::align::delete_at(&y, j).unwrap();
                decode_deletions(&yp, 7, &108i64, 2, 3).unwrap().to_string()
            })
            .collect();
        assert_eq!(
            outs,
            ["0111001", "0111001", "0011001", "0011001", "0011001", "0011101", "0011101"]
        );
        assert_eq!(decode_deletions(&w("11"), 3, &-5i64, 2, 3).unwrap().len(), 3);
    }

    #[test]
    fn rejects_out_of_budget() {
        assert!(decode_deletions(&w("0011"), 3, &0i64, 2, 3).is_err());
        assert!(decode_deletions(&w("0"), 5, &0i64, 2, 3).is_err());
        assert!(decode_deletions(&w("02"), 3, &0i64, 2, 3).is_err());
    }

    #[test]
    fn unique_moment_108_word() {
        let t = build_weights::<i64>(2, 3, 9).unwrap();
        assert_eq!(deletion_candidates(&w("1111"), 7, &108, &t).unwrap(), [w("1011111")]);
        assert!(deletion_candidates(&w("011000"), 7, &108, &t).unwrap().is_empty());
    }
}
