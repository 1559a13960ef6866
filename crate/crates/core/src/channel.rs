//! Insertion/deletion channel simulation.

use std::fmt;

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::word::{Symbol, Word};

/// A single edit with a 1-indexed position valid at application time.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Edit {
    Delete(usize),
    Insert(usize, Symbol),
}

impl fmt::Display for Edit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Edit::Delete(j) => write!(f, "del({j})"),
            Edit::Insert(j, s) => write!(f, "ins({j},{s})"),
        }
    }
}

/// Edits applied left to right to a working copy.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CorruptionPlan {
    pub edits: Vec<Edit>,
}

impl CorruptionPlan {
    pub fn new(edits: Vec<Edit>) -> Self {
        CorruptionPlan { edits }
    }

    pub fn insertions(&self) -> usize {
        self.edits.iter().filter(|e| matches!(e, Edit::Insert(..))).count()
    }

    pub fn deletions(&self) -> usize {
        self.edits.iter().filter(|e| matches!(e, Edit::Delete(_))).count()
    }

    pub fn is_empty(&self) -> bool {
        self.edits.is_empty()
    }
}

/// `del(4),ins(10,0)`; the empty plan is `none`.
impl fmt::Display for CorruptionPlan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.edits.is_empty() {
            f.write_str("none")
        } else {
            write!(f, "{}", self.edits.iter().format(","))
        }
    }
}

/// Applies `plan` to `x`.
pub fn corrupt(x: &[Symbol], plan: &CorruptionPlan) -> Result<Word> {
    let mut v = x.to_vec();
    for edit in &plan.edits {
        match *edit {
            Edit::Delete(j) => {
                if j == 0 || j > v.len() {
                    return Err(Error::PositionOutOfRange {
                        position: j,
                        len: v.len(),
                    });
                }
                v.remove(j - 1);
            }
            Edit::Insert(j, s) => {
                if j == 0 || j > v.len() + 1 {
                    return Err(Error::PositionOutOfRange {
                        position: j,
                        len: v.len(),
                    });
                }
                v.insert(j - 1, s);
            }
        }
    }
    Ok(Word::new(v))
}

/// Seeded plan with `num_ins` insertions and `num_del` deletions in random
/// order; positions and symbols are uniform over the valid choices.
///
/// The generator is ChaCha8 seeded with `seed_from_u64(seed)`.
pub fn random_plan(n: usize, num_ins: usize, num_del: usize, seed: u64, q: u32, d: usize) -> Result<CorruptionPlan> {
    if num_ins + num_del > d {
        return Err(Error::InvalidInput(format!(
            "{num_ins} insertions and {num_del} deletions exceed d = {d}"
        )));
    }
    if num_del > n {
        return Err(Error::InvalidInput(format!(
            "cannot delete {num_del} symbols from length {n}"
        )));
    }
    if q < 2 {
        return Err(Error::InvalidParameter(format!("q must be at least 2, got {q}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut kinds = vec![true; num_ins];
    kinds.extend(std::iter::repeat_n(false, num_del));
    kinds.shuffle(&mut rng);
    let mut len = n;
    let edits = kinds
        .into_iter()
        .map(|insert| {
            if insert {
                let j = rng.gen_range(1..=len + 1);
                let s = rng.gen_range(0..q) as Symbol;
                len += 1;
                Edit::Insert(j, s)
            } else {
                let j = rng.gen_range(1..=len);
                len -= 1;
                Edit::Delete(j)
            }
        })
        .collect();
    Ok(CorruptionPlan { edits })
}

/// Every plan with exactly `ins` insertions and `del` deletions: deletion
/// position sets (applied right to left) followed by insertion sequences.
pub fn plans_with_counts(n: usize, q: u32, ins: usize, del: usize) -> impl Iterator<Item = CorruptionPlan> {
    let after_del = n.saturating_sub(del);
    (1..=n).combinations(del).flat_map(move |set| {
        let dels: Vec<Edit> = set.into_iter().rev().map(Edit::Delete).collect();
        insertion_sequences(after_del, q, ins).map(move |inss| {
            let mut edits = dels.clone();
            edits.extend(inss);
            CorruptionPlan { edits }
        })
    })
}

fn insertion_sequences(len: usize, q: u32, ins: usize) -> Box<dyn Iterator<Item = Vec<Edit>>> {
    if ins == 0 {
        return Box::new(std::iter::once(Vec::new()));
    }
    let choices: Vec<Vec<Edit>> = (0..ins)
        .map(|k| {
            (1..=len + k + 1)
                .flat_map(|j| (0..q).map(move |s| Edit::Insert(j, s as Symbol)))
                .collect()
        })
        .collect();
    Box::new(choices.into_iter().multi_cartesian_product())
}

/// All plans with `i <= max_ins` insertions, `j <= max_del` deletions and
/// `i + j <= d`, grouped by `(i, j)` in increasing order.
pub fn enumerate_plans(
    n: usize,
    max_ins: usize,
    max_del: usize,
    q: u32,
    d: usize,
) -> impl Iterator<Item = CorruptionPlan> {
    (0..=max_ins)
        .cartesian_product(0..=max_del)
        .filter(move |&(i, j)| i + j <= d && j <= n)
        .flat_map(move |(i, j)| plans_with_counts(n, q, i, j))
}
