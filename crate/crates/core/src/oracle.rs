//! Brute-force decoding oracle and the exhaustive verification harness.

use std::collections::HashMap;
use std::fmt;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::align::{indel_distance, lcs_length, VValue};
use crate::channel::{corrupt, enumerate_plans, random_plan, CorruptionPlan};
use crate::code::{budget_for, moment, CodeParams};
use crate::indel::{answer_is_correct, decode, StepTwoCase};
use crate::scalar::Exact;
use crate::trace::{Branch, CaseKind, DecoderTrace, StepTwoResult, TraceEvent};
use crate::word::{Symbol, Word};

/// Every codeword within indel distance `d` of `y`, in lexicographic order.
pub fn oracle_decode<T: Exact>(y: &[Symbol], params: &CodeParams<T>) -> Vec<Word> {
    oracle_decode_in(y, &params.codebook().collect::<Vec<_>>(), params.d)
}

/// [`oracle_decode`] over a precomputed codebook.
pub fn oracle_decode_in(y: &[Symbol], codebook: &[Word], d: usize) -> Vec<Word> {
    codebook.iter().filter(|x| indel_distance(x, y) <= d).cloned().collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerifyMode {
    /// Every codeword under every plan with `i + j <= d`.
    Full,
    /// `count` random (codeword, plan) pairs drawn from a ChaCha8 stream.
    Sampled { seed: u64, count: usize },
}

/// A `(codeword, plan)` pair that failed one of the checks.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Failure {
    pub x: Word,
    pub plan: CorruptionPlan,
    pub got: String,
    pub check: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub n: usize,
    pub d: usize,
    pub q: u32,
    pub r: String,
    pub codebook_size: usize,
    /// `(codeword, plan)` pairs applied.
    pub plans: usize,
    /// Distinct corrupted words decoded.
    pub decoded: usize,
    pub step_one_visits: usize,
    pub step_two_visits: usize,
    /// Sorted.
    pub failures: Vec<Failure>,
    pub wall_clock: Duration,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Line-oriented report; the wall clock is left out so output is
    /// reproducible.
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "params=n={},d={},q={},r={}\ncodebook={}\nplans={}\n",
            self.n, self.d, self.q, self.r, self.codebook_size, self.plans
        );
        for f in &self.failures {
            out += &format!(
                "FAIL x={} plan={} got={} check={}\n",
                f.x.to_text(self.q),
                f.plan,
                f.got,
                f.check
            );
        }
        out += if self.passed() {
            "result=PASS\n"
        } else {
            "result=FAIL\n"
        };
        out
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Work estimate for a full run: `q^n` times the number of plans with
/// `i + j <= d`. Saturates at `u128::MAX`.
pub fn full_run_cost<T: Exact>(params: &CodeParams<T>) -> u128 {
    let (n, d, q) = (params.n as u128, params.d, u128::from(params.q));
    let mut plans = 0u128;
    for i in 0..=d {
        for j in 0..=(d - i).min(params.n) {
            let dels = (0..j as u128).fold(1u128, |acc, k| acc * (n - k) / (k + 1));
            let base = n - j as u128;
            let ins = (0..i as u128).fold(1u128, |acc, k| acc.saturating_mul((base + k + 1) * q));
            plans = plans.saturating_add(dels.saturating_mul(ins));
        }
    }
    u32::try_from(params.n)
        .ok()
        .and_then(|n| q.checked_pow(n))
        .map_or(u128::MAX, |words| words.saturating_mul(plans))
}

#[derive(Default)]
struct Tally {
    plans: usize,
    decoded: usize,
    step_one: usize,
    step_two: usize,
    failures: Vec<Failure>,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        self.plans += other.plans;
        self.decoded += other.decoded;
        self.step_one += other.step_one;
        self.step_two += other.step_two;
        self.failures.extend(other.failures);
        self
    }
}

/// Decodes corruptions of every codeword and checks each result against the
/// ground truth, the oracle and the decoder's structural invariants.
pub fn verify_exhaustive<T: Exact>(params: &CodeParams<T>, mode: VerifyMode) -> VerificationReport {
    let started = Instant::now();
    let codebook: Vec<Word> = params.codebook().collect();
    let d = params.d;
    let jobs: Vec<(Word, Vec<CorruptionPlan>)> = match mode {
        VerifyMode::Full => codebook
            .iter()
            .map(|x| (x.clone(), enumerate_plans(params.n, d, d, params.q, d).collect()))
            .collect(),
        VerifyMode::Sampled { seed, count } => sample_jobs(params, &codebook, seed, count),
    };
    let tally = jobs
        .par_iter()
        .map(|(x, plans)| check_codeword(params, &codebook, x, plans))
        .reduce(Tally::default, Tally::merge);
    let mut failures = tally.failures;
    failures.sort();
    VerificationReport {
        n: params.n,
        d,
        q: params.q,
        r: params.r.to_string(),
        codebook_size: codebook.len(),
        plans: tally.plans,
        decoded: tally.decoded,
        step_one_visits: tally.step_one,
        step_two_visits: tally.step_two,
        failures,
        wall_clock: started.elapsed(),
    }
}

fn sample_jobs<T: Exact>(
    params: &CodeParams<T>,
    codebook: &[Word],
    seed: u64,
    count: usize,
) -> Vec<(Word, Vec<CorruptionPlan>)> {
    if codebook.is_empty() {
        return Vec::new();
    }
    let d = params.d;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut by_word: Vec<Vec<CorruptionPlan>> = vec![Vec::new(); codebook.len()];
    for _ in 0..count {
        let k = rng.gen_range(0..codebook.len());
        let total = rng.gen_range(0..=d);
        let del = rng.gen_range(0..=total.min(params.n));
        let plan = random_plan(params.n, total - del, del, rng.gen(), params.q, d).expect("plan within budget");
        by_word[k].push(plan);
    }
    codebook
        .iter()
        .cloned()
        .zip(by_word)
        .filter(|(_, plans)| !plans.is_empty())
        .collect()
}

fn check_codeword<T: Exact>(params: &CodeParams<T>, codebook: &[Word], x: &Word, plans: &[CorruptionPlan]) -> Tally {
    let mut tally = Tally::default();
    let (n, d) = (params.n, params.d);
    let total = moment(x, &params.weights).expect("codeword fits the table");
    let mut first_plan: HashMap<Word, &CorruptionPlan> = HashMap::new();
    let fail = |tally: &mut Tally, plan: &CorruptionPlan, got: String, check: &str| {
        tally.failures.push(Failure {
            x: x.clone(),
            plan: plan.clone(),
            got,
            check: check.into(),
        });
    };

    for plan in plans {
        tally.plans += 1;
        let y = match corrupt(x, plan) {
            Ok(y) => y,
            Err(e) => {
                fail(&mut tally, plan, e.to_string(), "plan");
                continue;
            }
        };
        let (i, j) = (plan.insertions(), plan.deletions());
        // Budget bounds after normalizing, counting the normalizing deletion.
        if let Ok(mut budget) = budget_for(y.len(), n, d) {
            let mut j_eff = j;
            if budget.needs_normalizing(d) && !y.is_empty() {
                budget = budget_for(y.len() - 1, n, d).expect("one shorter stays in range");
                j_eff += 1;
            }
            if budget.a < i || budget.b < j_eff {
                fail(&mut tally, plan, format!("a={} b={}", budget.a, budget.b), "budget");
            }
            if lcs_length(x, &y) + j < n || lcs_length(x, &y) + budget.b < n {
                fail(&mut tally, plan, format!("lcs={}", lcs_length(x, &y)), "lcs");
            }
        } else {
            fail(&mut tally, plan, format!("len={}", y.len()), "budget");
        }
        if indel_distance(x, &y) > i + j {
            fail(&mut tally, plan, format!("distance={}", indel_distance(x, &y)), "reach");
        }
        first_plan.entry(y).or_insert(plan);
    }

    let mut words: Vec<_> = first_plan.into_iter().collect();
    words.sort();
    for (y, plan) in words {
        tally.decoded += 1;
        if !codeword_passes_check(params, x, &y) {
            fail(&mut tally, plan, x.to_text(params.q), "answer-check");
        }
        let found = oracle_decode_in(&y, codebook, d);
        if found.as_slice() != std::slice::from_ref(x) {
            let got = found.iter().map(|w| w.to_text(params.q)).collect::<Vec<_>>().join("|");
            fail(&mut tally, plan, got, "oracle");
        }
        match decode(&y, params) {
            Ok(out) => {
                if out.word != *x {
                    fail(&mut tally, plan, out.word.to_text(params.q), "decode");
                } else if !out.verified {
                    fail(&mut tally, plan, out.word.to_text(params.q), "verified");
                }
                for problem in audit_trace(params, x, &total, &out.trace) {
                    fail(&mut tally, plan, out.word.to_text(params.q), &problem);
                }
                for event in out.trace.events() {
                    match event {
                        TraceEvent::StepOne { .. } => tally.step_one += 1,
                        TraceEvent::StepTwo(_) => tally.step_two += 1,
                        _ => {}
                    }
                }
            }
            Err(e) => fail(&mut tally, plan, e.error.to_string().replace(' ', "_"), "decode"),
        }
    }
    tally
}

/// Checks recorded decoder decisions against the true codeword `x`.
///
/// Returns the names of the violated properties.
pub fn audit_trace<T: Exact>(params: &CodeParams<T>, x: &Word, total: &T, trace: &DecoderTrace<T>) -> Vec<String> {
    let (n, d, p) = (params.n, params.d, params.p);
    let mut problems = Vec::new();
    let mut a = 0;
    for event in trace.events() {
        match event {
            TraceEvent::Preliminary { budget, .. } => a = budget.a,
            TraceEvent::Moment { total: got, .. } => {
                if got != total {
                    problems.push("moment".into());
                }
            }
            TraceEvent::StepOne { n_prime, h, .. } => {
                if !h.contains(&x.at(*n_prime)) {
                    problems.push("step1-containment".into());
                }
                if h.len() > 2 || h.windows(2).any(|w| w[1] != w[0] + 1) {
                    problems.push("step1-adjacency".into());
                }
            }
            TraceEvent::StepTwo(r) => {
                let n_prime = r.n_prime;
                if n_prime < d + 2 {
                    problems.push("step2-position".into());
                    continue;
                }
                let suffix = x.slice(n_prime + 1, n);
                let truth = x.slice(n_prime - d + 1, n_prime);
                let matches = |which| StepTwoCase::build(which, r.g, p, d, &suffix).pattern == truth;
                let true_case = [CaseKind::Case1, CaseKind::Case2].into_iter().find(|&c| matches(c));
                if true_case.is_none() {
                    problems.push("step2-two-cases".into());
                }
                let floor = (n - n_prime + 2 * a).saturating_sub(1);
                if r.v1.max(r.v2) < VValue::Finite(floor) {
                    problems.push("step2-v-lower-bound".into());
                }
                let t_true = true_case == Some(r.t);
                match r.branch {
                    Branch::Ruled if t_true => problems.push("step2-ruled-out-true-case".into()),
                    Branch::Single | Branch::Sweep if t_true && r.result != StepTwoResult::Solved => {
                        problems.push("step2-true-case-unsolved".into())
                    }
                    _ => {}
                }
                if let StepTwoResult::Assigned(c) = r.result {
                    if true_case.is_some() && true_case != Some(c) {
                        problems.push("step2-wrong-assignment".into());
                    }
                }
            }
            TraceEvent::Final { .. } | TraceEvent::BruteForce { .. } => {}
        }
    }
    problems
}

/// True when `x` passes the decoder's final answer check against its own
/// corruption `y`.
pub fn codeword_passes_check<T: Exact>(params: &CodeParams<T>, x: &Word, y: &[Symbol]) -> bool {
    let Ok(mut budget) = budget_for(y.len(), params.n, params.d) else {
        return false;
    };
    let mut y = Word::from(y);
    if budget.needs_normalizing(params.d) && !y.is_empty() {
        y = y.slice(2, y.len());
        budget = budget_for(y.len(), params.n, params.d).expect("in range");
    }
    let total = moment(x, &params.weights).expect("codeword fits the table");
    answer_is_correct(x, &total, &y, params, budget.b)
}
