//! Generalized Helberg codes: q-ary number-theoretic codes that correct up
//! to `d` insertions and deletions.
//!
//! A word `x` of length `n` over `{0, ..., q-1}` is a codeword of
//! `C_H(n, d, r, q)` when its moment `M(x) = sum x_i w_i` satisfies
//! `M(x) mod w_{n+1} = r`, with weights `w_i = 1 + (q-1) * (w_{i-1} + ... + w_{i-d})`.
//!
//! ```
//! use helberg::{decode, w, Params};
//!
//! let params = Params::new(10, 3, 2, 381.into()).unwrap();
//! let out = decode(&w("00111000101"), &params).unwrap();
//! assert_eq!(out.word, w("0011110001"));
//! ```
//!
//! Arithmetic is generic over [`Exact`] integers. The aliases below use
//! `BigInt`; `i64` works for small parameters and is rejected with
//! [`Error::Overflow`] when it cannot hold every intermediate value.

pub mod align;
pub mod channel;
pub mod code;
pub mod deletions;
pub mod error;
pub mod indel;
pub mod moment;
pub mod oracle;
pub mod scalar;
pub mod trace;
pub mod word;

pub use align::{compute_v, compute_v_naive, delete_at, indel_distance, insert_at, is_subsequence, lcs_length, VValue};
pub use channel::{corrupt, enumerate_plans, plans_with_counts, random_plan, CorruptionPlan, Edit};
pub use code::{
    build_weights, compute_budget, enumerate_codebook, format_weights, is_codeword, moment, offset_moment,
    partial_moment, symbol_window, CodeParams, Codebook, ErrorBudget, WeightTable,
};
pub use deletions::{decode_deletions, decode_deletions_in, deletion_candidates, moment_guided_fill};
pub use error::{Error, Result};
pub use indel::{
    answer_is_correct, decode, decode_brute_force_d1, decode_with, step_one_candidates, step_two, DecodeFailure,
    DecodeOptions, Decoded, DecoderState, StepTwoCase, StepTwoOutcome, TieBreak,
};
pub use moment::{minimize_moment_deletions, recover_moment, reduced_moment};
pub use num_bigint::BigInt;
pub use oracle::{
    audit_trace, full_run_cost, oracle_decode, oracle_decode_in, verify_exhaustive, Failure, VerificationReport,
    VerifyMode,
};
pub use scalar::Exact;
pub use trace::{Branch, CaseKind, DecoderTrace, StepTwoRecord, StepTwoResult, TraceEvent};
pub use word::{w, Symbol, Word};

/// Unbounded moment type.
pub type Moment = BigInt;
/// Code parameters with unbounded arithmetic.
pub type Params = CodeParams<BigInt>;
/// Weight table with unbounded entries.
pub type Weights = WeightTable<BigInt>;
/// Decoder trace with unbounded moments.
pub type Trace = DecoderTrace<BigInt>;
