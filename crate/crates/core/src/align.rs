//! Longest common subsequences, indel distance and suffix windows.

use std::fmt;

use crate::error::{Error, Result};
use crate::word::{Symbol, Word};

/// Smallest suffix length reaching an LCS threshold, or `Unreachable`.
///
/// `Unreachable` orders above every finite value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VValue {
    Finite(usize),
    Unreachable,
}

impl VValue {
    pub fn finite(self) -> Option<usize> {
        match self {
            VValue::Finite(v) => Some(v),
            VValue::Unreachable => None,
        }
    }
}

impl fmt::Display for VValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VValue::Finite(v) => write!(f, "{v}"),
            VValue::Unreachable => f.write_str("inf"),
        }
    }
}

/// Length of a longest common subsequence.
pub fn lcs_length(s1: &[Symbol], s2: &[Symbol]) -> usize {
    let (long, short) = if s1.len() >= s2.len() { (s1, s2) } else { (s2, s1) };
    let mut row = vec![0usize; short.len() + 1];
    for &a in long {
        let mut diag = 0;
        for (j, &b) in short.iter().enumerate() {
            let up = row[j + 1];
            row[j + 1] = if a == b { diag + 1 } else { up.max(row[j]) };
            diag = up;
        }
    }
    row[short.len()]
}

/// Minimum number of insertions plus deletions turning `s1` into `s2`.
pub fn indel_distance(s1: &[Symbol], s2: &[Symbol]) -> usize {
    s1.len() + s2.len() - 2 * lcs_length(s1, s2)
}

/// True when `sub` is a subsequence of `sup`.
pub fn is_subsequence(sub: &[Symbol], sup: &[Symbol]) -> bool {
    let mut it = sup.iter();
    sub.iter().all(|s| it.any(|t| t == s))
}

/// Smallest `v` with `lcs(candidate, last v symbols of y) >= threshold`.
///
/// Grows the suffix one symbol at a time, updating a single DP column.
pub fn compute_v(candidate: &[Symbol], y: &[Symbol], threshold: usize) -> VValue {
    if threshold == 0 {
        return VValue::Finite(0);
    }
    let c = candidate.len();
    // col[i] = lcs(candidate[i..], current suffix of y)
    let mut col = vec![0usize; c + 1];
    for (v, &sym) in y.iter().rev().enumerate() {
        let mut below = 0;
        for i in (0..c).rev() {
            let old = col[i];
            col[i] = if candidate[i] == sym {
                below + 1
            } else {
                old.max(col[i + 1])
            };
            below = old;
        }
        if col[0] >= threshold {
            return VValue::Finite(v + 1);
        }
    }
    VValue::Unreachable
}

/// Reference form of [`compute_v`]: one full LCS per suffix length.
pub fn compute_v_naive(candidate: &[Symbol], y: &[Symbol], threshold: usize) -> VValue {
    (0..=y.len())
        .find(|&v| lcs_length(candidate, &y[y.len() - v..]) >= threshold)
        .map_or(VValue::Unreachable, VValue::Finite)
}

/// Copy of `s` without the symbol at 1-indexed position `j`.
pub fn delete_at(s: &[Symbol], j: usize) -> Result<Word> {
    if j == 0 || j > s.len() {
        return Err(Error::PositionOutOfRange {
            position: j,
            len: s.len(),
        });
    }
    let mut v = s.to_vec();
    v.remove(j - 1);
    Ok(Word::new(v))
}

/// Copy of `s` with `sym` inserted so that it lands at 1-indexed position `j`.
pub fn insert_at(s: &[Symbol], j: usize, sym: Symbol) -> Result<Word> {
    if j == 0 || j > s.len() + 1 {
        return Err(Error::PositionOutOfRange {
            position: j,
            len: s.len(),
        });
    }
    let mut v = s.to_vec();
    v.insert(j - 1, sym);
    Ok(Word::new(v))
}
