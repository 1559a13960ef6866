//! Decoder decision records and their line-oriented text form.

use std::fmt;

use crate::align::VValue;
use crate::code::ErrorBudget;
use crate::word::{Symbol, Word};

/// One of the two forced suffix patterns considered when two symbols fit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CaseKind {
    /// `[0]*(d-1) + [g+1]`
    Case1,
    /// `[p]*(d-1) + [g]`
    Case2,
}

impl CaseKind {
    pub fn other(self) -> CaseKind {
        match self {
            CaseKind::Case1 => CaseKind::Case2,
            CaseKind::Case2 => CaseKind::Case1,
        }
    }
}

impl fmt::Display for CaseKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CaseKind::Case1 => "1",
            CaseKind::Case2 => "2",
        })
    }
}

/// How the larger `v` compared to the thresholds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    /// `v_t >= n - n' + 2a + 1`: case `t` is impossible.
    Ruled,
    /// `v_t = n - n' + 2a`: one deletions-decoder call.
    Single,
    /// `v_t = n - n' + 2a - 1`: one call per deleted position.
    Sweep,
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Branch::Ruled => "ii",
            Branch::Single => "iii",
            Branch::Sweep => "iv",
        })
    }
}

/// What a Step-2 visit concluded.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StepTwoResult {
    Solved,
    Assigned(CaseKind),
}

/// Everything computed during one Step-2 visit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepTwoRecord<T> {
    pub n_prime: usize,
    pub g: Symbol,
    pub v1: VValue,
    pub v2: VValue,
    pub t: CaseKind,
    pub branch: Branch,
    pub m_second: T,
    /// Deletions-decoder outputs in call order; `None` marks a fragment
    /// whose length was outside the decoder's range.
    pub outputs: Vec<Option<Word>>,
    pub result: StepTwoResult,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TraceEvent<T> {
    Preliminary {
        p1_applied: bool,
        len_y: usize,
        budget: ErrorBudget,
    },
    Moment {
        reduced: Word,
        reduced_moment: T,
        total: T,
    },
    BruteForce {
        candidates: usize,
    },
    StepOne {
        n_prime: usize,
        m_prime: T,
        h: Vec<Symbol>,
        g: Option<Symbol>,
    },
    StepTwo(StepTwoRecord<T>),
    Final {
        word: Word,
        verified: bool,
    },
}

/// Ordered decoder events.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecoderTrace<T> {
    q: u32,
    events: Vec<TraceEvent<T>>,
}

impl<T: fmt::Display> DecoderTrace<T> {
    pub fn new(q: u32) -> Self {
        DecoderTrace { q, events: Vec::new() }
    }

    pub fn push(&mut self, event: TraceEvent<T>) {
        self.events.push(event);
    }

    pub fn events(&self) -> &[TraceEvent<T>] {
        &self.events
    }

    pub fn step_twos(&self) -> impl Iterator<Item = &StepTwoRecord<T>> {
        self.events.iter().filter_map(|e| match e {
            TraceEvent::StepTwo(r) => Some(r),
            _ => None,
        })
    }

    /// One line per event, fields in a fixed order.
    pub fn to_text(&self) -> String {
        self.events.iter().map(|e| format!("{}\n", self.line(e))).collect()
    }

    fn word(&self, x: &Word) -> String {
        if x.is_empty() {
            "~".into()
        } else {
            x.to_text(self.q)
        }
    }

    fn line(&self, event: &TraceEvent<T>) -> String {
        match event {
            TraceEvent::Preliminary {
                p1_applied,
                len_y,
                budget,
            } => {
                format!(
                    "p1 applied={} len_y={len_y} a={} b={}",
                    yes_no(*p1_applied),
                    budget.a,
                    budget.b
                )
            }
            TraceEvent::Moment {
                reduced,
                reduced_moment,
                total,
            } => {
                format!(
                    "moment reduced={} reduced_moment={reduced_moment} total={total}",
                    self.word(reduced)
                )
            }
            TraceEvent::BruteForce { candidates } => format!("bruteforce candidates={candidates}"),
            TraceEvent::StepOne { n_prime, m_prime, h, g } => {
                let h = if h.is_empty() { "~".into() } else { join(h) };
                let g = g.map_or("!".into(), |g| g.to_string());
                format!("step1 n_prime={n_prime} m_prime={m_prime} h={h} g={g}")
            }
            TraceEvent::StepTwo(r) => {
                let outputs = if r.outputs.is_empty() {
                    "none".into()
                } else {
                    r.outputs
                        .iter()
                        .map(|o| o.as_ref().map_or("!".into(), |x| self.word(x)))
                        .collect::<Vec<_>>()
                        .join("|")
                };
                let result = match r.result {
                    StepTwoResult::Solved => "solved".into(),
                    StepTwoResult::Assigned(c) => format!("case{c}"),
                };
                format!(
                    "step2 n_prime={} g={} v1={} v2={} t={} branch={} m_second={} outputs={outputs} result={result}",
                    r.n_prime, r.g, r.v1, r.v2, r.t, r.branch, r.m_second
                )
            }
            TraceEvent::Final { word, verified } => {
                format!("final word={} verified={}", self.word(word), yes_no(*verified))
            }
        }
    }
}

impl<T: fmt::Display> fmt::Display for DecoderTrace<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn join(symbols: &[Symbol]) -> String {
    symbols.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(",")
}
