//! The indel-correcting decoder.

use std::collections::BTreeSet;
use std::fmt;

use crate::align::{compute_v, indel_distance, lcs_length, VValue};
use crate::code::{budget_for, moment, offset_moment, symbol_window, CodeParams, ErrorBudget};
use crate::deletions::decode_deletions_in;
use crate::error::{Error, Result};
use crate::moment::{reduced_moment, select_moment};
use crate::scalar::Exact;
use crate::trace::{Branch, CaseKind, DecoderTrace, StepTwoRecord, StepTwoResult, TraceEvent};
use crate::word::{Symbol, Word};

/// Which case Step 2 examines first when `v1 = v2`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub enum TieBreak {
    Case1,
    #[default]
    Case2,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct DecodeOptions {
    pub tie_break: TieBreak,
}

/// Mid-decode state: positions `n_prime + 1 ..= n` are known.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecoderState<'a, T> {
    pub params: &'a CodeParams<T>,
    /// Received word after the optional first-symbol deletion.
    pub y: Word,
    pub budget: ErrorBudget,
    pub total_moment: T,
    pub n_prime: usize,
    pub known_suffix: Word,
    pub m_prime: T,
}

impl<'a, T: Exact> DecoderState<'a, T> {
    pub fn new(params: &'a CodeParams<T>, y: Word, budget: ErrorBudget, total_moment: T) -> Self {
        DecoderState {
            params,
            y,
            budget,
            m_prime: total_moment.clone(),
            total_moment,
            n_prime: params.n,
            known_suffix: Word::empty(),
        }
    }

    /// Prepends `symbols` to the known suffix.
    fn assign(&mut self, symbols: &[Symbol]) {
        let w = &self.params.weights;
        let start = self.n_prime - symbols.len();
        self.m_prime = self.m_prime.clone() - offset_moment(symbols, start, w);
        self.known_suffix = Word::from(symbols).concat(&self.known_suffix);
        self.n_prime = start;
    }
}

/// A forced suffix candidate for positions `n' - d + 1 ..= n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepTwoCase {
    pub which: CaseKind,
    /// The `d` symbols at positions `n' - d + 1 ..= n'`.
    pub pattern: Word,
    /// `pattern` followed by the known suffix.
    pub candidate: Word,
}

impl StepTwoCase {
    pub fn build(which: CaseKind, g: Symbol, p: Symbol, d: usize, known_suffix: &Word) -> Self {
        let (fill, last) = match which {
            CaseKind::Case1 => (0, g + 1),
            CaseKind::Case2 => (p, g),
        };
        let mut pattern = vec![fill; d - 1];
        pattern.push(last);
        let pattern = Word::new(pattern);
        let candidate = pattern.concat(known_suffix);
        StepTwoCase {
            which,
            pattern,
            candidate,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StepTwoOutcome {
    FullSolution(Word),
    ResolvedCase(StepTwoCase),
}

/// `H`: symbols that can sit at position `n'` given the remaining moment.
pub fn step_one_candidates<T: Exact>(m_prime: &T, n_prime: usize, params: &CodeParams<T>) -> Vec<Symbol> {
    symbol_window(m_prime, n_prime, &params.weights)
}

/// True iff `len(candidate) = n`, `M(candidate) = total_moment` and
/// `lcs(candidate, y) >= n - b`.
pub fn answer_is_correct<T: Exact>(
    candidate: &[Symbol],
    total_moment: &T,
    y: &[Symbol],
    params: &CodeParams<T>,
    b: usize,
) -> bool {
    let n = params.n;
    candidate.len() == n
        && moment(candidate, &params.weights).is_ok_and(|m| m == *total_moment)
        && lcs_length(candidate, y) + b >= n
}

/// Resolves a position where two adjacent symbols `g`, `g + 1` fit.
pub fn step_two<T: Exact>(
    state: &DecoderState<'_, T>,
    g: Symbol,
    options: DecodeOptions,
) -> Result<(StepTwoOutcome, StepTwoRecord<T>)> {
    let params = state.params;
    let (n, d, p) = (params.n, params.d, params.p);
    let n_prime = state.n_prime;
    let ErrorBudget { a, b } = state.budget;
    let y = &state.y;
    if n_prime < d + 2 {
        return Err(Error::InvariantViolation(format!(
            "two candidates at n' = {n_prime} with d = {d}"
        )));
    }
    if g >= p {
        return Err(Error::InvariantViolation(format!(
            "two candidates but g = {g} is the largest symbol"
        )));
    }
    let case1 = StepTwoCase::build(CaseKind::Case1, g, p, d, &state.known_suffix);
    let case2 = StepTwoCase::build(CaseKind::Case2, g, p, d, &state.known_suffix);
    let threshold = n - n_prime + d - b;
    let v1 = compute_v(&case1.candidate, y, threshold);
    let v2 = compute_v(&case2.candidate, y, threshold);
    let t = match v1.cmp(&v2) {
        std::cmp::Ordering::Greater => CaseKind::Case1,
        std::cmp::Ordering::Less => CaseKind::Case2,
        std::cmp::Ordering::Equal => match options.tie_break {
            TieBreak::Case1 => CaseKind::Case1,
            TieBreak::Case2 => CaseKind::Case2,
        },
    };
    let (chosen, other) = match t {
        CaseKind::Case1 => (case1, case2),
        CaseKind::Case2 => (case2, case1),
    };
    let vt = v1.max(v2);
    let start = n_prime - d;
    let m_second = state.total_moment.clone() - offset_moment(&chosen.candidate, start, &params.weights);
    let base = n - n_prime + 2 * a;

    let (branch, fragments) = match vt {
        VValue::Unreachable => (Branch::Ruled, Vec::new()),
        VValue::Finite(v) if v > base => (Branch::Ruled, Vec::new()),
        VValue::Finite(v) if v == base => {
            let len = y.len().saturating_sub(v + b);
            (Branch::Single, vec![y.prefix(len)])
        }
        VValue::Finite(v) if v + 1 == base => {
            let len = y.len().saturating_sub(v + b);
            let fragments = if len > 0 {
                (1..=len)
                    .map(|j| y.slice(1, j - 1).concat(&y.slice(j + 1, len)))
                    .collect()
            } else {
                vec![Word::empty()]
            };
            (Branch::Sweep, fragments)
        }
        VValue::Finite(v) => {
            return Err(Error::InvariantViolation(format!(
                "v_t = {v} is below n - n' + 2a - 1 = {} at n' = {n_prime}",
                base as isize - 1
            )))
        }
    };

    let mut outputs = Vec::with_capacity(fragments.len());
    let mut solution = None;
    for fragment in &fragments {
        if fragment.len() > start || start - fragment.len() > d {
            outputs.push(None);
            continue;
        }
        let prefix = decode_deletions_in(fragment, start, &m_second, &params.weights)?;
        let full = prefix.concat(&chosen.candidate);
        outputs.push(Some(prefix));
        if answer_is_correct(&full, &state.total_moment, y, params, b) {
            solution = Some(full);
            break;
        }
    }

    let (outcome, result) = match solution {
        Some(x) => (StepTwoOutcome::FullSolution(x), StepTwoResult::Solved),
        None => {
            let which = other.which;
            (StepTwoOutcome::ResolvedCase(other), StepTwoResult::Assigned(which))
        }
    };
    let record = StepTwoRecord {
        n_prime,
        g,
        v1,
        v2,
        t,
        branch,
        m_second,
        outputs,
        result,
    };
    Ok((outcome, record))
}

/// Single-indel decoding by trying every single edit of `y`.
pub fn decode_brute_force_d1<T: Exact>(y: &[Symbol], params: &CodeParams<T>) -> Result<Word> {
    let found = brute_force_candidates(y, params)?;
    match found.len() {
        1 => Ok(found.into_iter().next().expect("one candidate")),
        0 => Err(Error::NoCodeword),
        k => Err(Error::MultipleCodewords(k)),
    }
}

fn brute_force_candidates<T: Exact>(y: &[Symbol], params: &CodeParams<T>) -> Result<BTreeSet<Word>> {
    let n = params.n;
    if params.d != 1 {
        return Err(Error::InvalidParameter(format!(
            "brute-force decoding needs d = 1, got {}",
            params.d
        )));
    }
    let mut found = BTreeSet::new();
    let mut consider = |x: Vec<Symbol>| -> Result<()> {
        if params.is_codeword(&x)? {
            found.insert(Word::new(x));
        }
        Ok(())
    };
    if y.len() == n + 1 {
        for j in 0..y.len() {
            let mut x = y.to_vec();
            x.remove(j);
            consider(x)?;
        }
    } else if y.len() + 1 == n {
        for j in 0..=y.len() {
            for s in 0..=params.p {
                let mut x = y.to_vec();
                x.insert(j, s);
                consider(x)?;
            }
        }
    } else if y.len() == n {
        consider(y.to_vec())?;
    } else {
        return Err(Error::InvalidInput(format!(
            "received length {} is more than 1 away from n = {n}",
            y.len()
        )));
    }
    Ok(found)
}

/// Successful decode.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decoded<T> {
    pub word: Word,
    pub trace: DecoderTrace<T>,
    /// Whether the output passed the final consistency check.
    pub verified: bool,
}

/// Decode failure with the trace gathered up to the failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecodeFailure<T> {
    pub error: Error,
    pub trace: DecoderTrace<T>,
}

impl<T: fmt::Display> fmt::Display for DecodeFailure<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "decode failed: {}", self.error)
    }
}

impl<T: fmt::Debug + fmt::Display> std::error::Error for DecodeFailure<T> {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        Some(&self.error)
    }
}

/// Decodes `y` with the default options.
pub fn decode<T: Exact>(y: &[Symbol], params: &CodeParams<T>) -> std::result::Result<Decoded<T>, DecodeFailure<T>> {
    decode_with(y, params, DecodeOptions::default())
}

pub fn decode_with<T: Exact>(
    y: &[Symbol],
    params: &CodeParams<T>,
    options: DecodeOptions,
) -> std::result::Result<Decoded<T>, DecodeFailure<T>> {
    let mut trace = DecoderTrace::new(params.q);
    match run(y, params, options, &mut trace) {
        Ok((word, verified)) => {
            trace.push(TraceEvent::Final {
                word: word.clone(),
                verified,
            });
            Ok(Decoded { word, trace, verified })
        }
        Err(error) => Err(DecodeFailure { error, trace }),
    }
}

fn run<T: Exact>(
    y: &[Symbol],
    params: &CodeParams<T>,
    options: DecodeOptions,
    trace: &mut DecoderTrace<T>,
) -> Result<(Word, bool)> {
    let (n, d) = (params.n, params.d);
    Word::from(y).check_alphabet(params.p)?;
    let mut budget = budget_for(y.len(), n, d)?;

    if d == 1 {
        let found = brute_force_candidates(y, params)?;
        trace.push(TraceEvent::BruteForce {
            candidates: found.len(),
        });
        return match found.len() {
            1 => Ok((found.into_iter().next().expect("one candidate"), true)),
            0 => Err(Error::NoCodeword),
            k => Err(Error::MultipleCodewords(k)),
        };
    }

    let received = y;
    let mut y = Word::from(y);
    let p1_applied = budget.needs_normalizing(d) && !y.is_empty();
    if p1_applied {
        y = y.slice(2, y.len());
        budget = budget_for(y.len(), n, d)?;
    }
    trace.push(TraceEvent::Preliminary {
        p1_applied,
        len_y: y.len(),
        budget,
    });

    let (reduced, reduced_m) = reduced_moment(&y, budget.a, params)?;
    let total = select_moment(&reduced_m, params);
    trace.push(TraceEvent::Moment {
        reduced,
        reduced_moment: reduced_m,
        total: total.clone(),
    });

    let mut state = DecoderState::new(params, y, budget, total);
    while state.n_prime > 0 {
        let h = step_one_candidates(&state.m_prime, state.n_prime, params);
        trace.push(TraceEvent::StepOne {
            n_prime: state.n_prime,
            m_prime: state.m_prime.clone(),
            h: h.clone(),
            g: h.first().copied(),
        });
        match h.as_slice() {
            [] => {
                return Err(Error::InvariantViolation(format!(
                    "no symbol fits moment {} at n' = {}",
                    state.m_prime, state.n_prime
                )))
            }
            [g] => state.assign(&[*g]),
            [g, _] => {
                let (outcome, record) = step_two(&state, *g, options)?;
                trace.push(TraceEvent::StepTwo(record));
                match outcome {
                    StepTwoOutcome::FullSolution(x) => {
                        let verified = within_reach(&x, received, params);
                        return Ok((x, verified));
                    }
                    StepTwoOutcome::ResolvedCase(case) => state.assign(&case.pattern),
                }
            }
            _ => {
                return Err(Error::InvariantViolation(format!(
                    "{} symbols fit at n' = {}",
                    h.len(),
                    state.n_prime
                )))
            }
        }
    }
    let x = state.known_suffix.clone();
    let verified = within_reach(&x, received, params);
    Ok((x, verified))
}

/// `x` is a codeword within indel distance `d` of the received word.
fn within_reach<T: Exact>(x: &[Symbol], received: &[Symbol], params: &CodeParams<T>) -> bool {
    params.is_codeword(x).unwrap_or(false) && indel_distance(x, received) <= params.d
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::w;

    #[test]
    fn step_one_sets() {
        let p = CodeParams::<i64>::new(10, 3, 2, 381).unwrap();
        assert_eq!(step_one_candidates(&381, 10, &p), [0, 1]);
        let p = CodeParams::<i64>::new(9, 2, 4, 147376).unwrap();
        assert_eq!(step_one_candidates(&147376, 9, &p), [2, 3]);
        assert_eq!(step_one_candidates(&135, 5, &p), [0]);
    }

    #[test]
    fn answer_checks() {
        let p = CodeParams::<i64>::new(10, 3, 2, 381).unwrap();
        assert!(answer_is_correct(&w("0011110001"), &381, &w("00111000101"), &p, 1));
        let p = CodeParams::<i64>::new(9, 2, 4, 147376).unwrap();
        assert!(!answer_is_correct(&w("013033003"), &147376, &w("013002103"), &p, 1));
        assert!(answer_is_correct(&w("130200103"), &147376, &w("130200103"), &p, 0));
        assert!(!answer_is_correct(&w("13020010"), &147376, &w("130200103"), &p, 0));
    }

    #[test]
    fn decodes_examples() {
        let p = CodeParams::<i64>::new(10, 3, 2, 381).unwrap();
        assert_eq!(decode(&w("00111000101"), &p).unwrap().word, w("0011110001"));
        let p = CodeParams::<i64>::new(10, 3, 3, 434).unwrap();
        assert_eq!(decode(&w("1021210202"), &p).unwrap().word, w("1021210222"));
        let p = CodeParams::<i64>::new(9, 2, 4, 147376).unwrap();
        let out = decode(&w("013002103"), &p).unwrap();
        assert_eq!(out.word, w("130200103"));
    }

    #[test]
    fn brute_force_single_edits() {
        let p = CodeParams::<i64>::new(2, 1, 2, 0).unwrap();
        assert_eq!(decode_brute_force_d1(&w("000"), &p), Ok(w("00")));
        assert_eq!(decode_brute_force_d1(&w("0"), &p), Ok(w("00")));
        assert_eq!(decode_brute_force_d1(&w("00"), &p), Ok(w("00")));
        assert_eq!(decode_brute_force_d1(&w("10"), &p), Err(Error::NoCodeword));
        assert_eq!(decode_brute_force_d1(&w("1"), &p), Ok(w("11")));
        assert!(decode_brute_force_d1(&w("0000"), &p).is_err());
    }

    #[test]
    fn rejects_out_of_range_lengths() {
        let p = CodeParams::<i64>::new(10, 3, 2, 381).unwrap();
        let err = decode(&w("0011"), &p).unwrap_err();
        assert!(matches!(err.error, Error::InvalidInput(_)));
    }
}
