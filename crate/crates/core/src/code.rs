//! Weight sequences, moments, codebook membership and the error budget.

use std::ops::Index;

use crate::error::{Error, Result};
use crate::scalar::Exact;
use crate::word::{Symbol, Word};

/// Largest supported alphabet size; symbols are stored as `u16`.
pub const MAX_Q: u32 = 1 << 16;

/// `w_0, ..., w_{len-1}` with `w_0 = 0` and
/// `w_i = 1 + p * (w_{i-1} + ... + w_{i-d})`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightTable<T> {
    q: u32,
    d: usize,
    values: Vec<T>,
    /// `reach[i] = p * (w_1 + ... + w_i)`, the largest moment of a length-`i` word.
    reach: Vec<T>,
}

impl<T: Exact> WeightTable<T> {
    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn p(&self) -> Symbol {
        (self.q - 1) as Symbol
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    /// `p * (w_1 + ... + w_i)`.
    pub fn reach(&self, i: usize) -> &T {
        &self.reach[i]
    }

    /// Longest word whose moment this table can evaluate.
    pub fn max_word_len(&self) -> usize {
        self.values.len() - 1
    }
}

impl<T> Index<usize> for WeightTable<T> {
    type Output = T;

    fn index(&self, i: usize) -> &T {
        &self.values[i]
    }
}

/// Builds `w_0, ..., w_{count-1}` with checked arithmetic.
///
/// Fails with [`Error::Overflow`] only for bounded integer types.
pub fn build_weights<T: Exact>(q: u32, d: usize, count: usize) -> Result<WeightTable<T>> {
    if !(2..=MAX_Q).contains(&q) {
        return Err(Error::InvalidParameter(format!("q must be in 2..={MAX_Q}, got {q}")));
    }
    if d < 1 {
        return Err(Error::InvalidParameter("d must be at least 1".into()));
    }
    if count < 1 {
        return Err(Error::InvalidParameter("count must be at least 1".into()));
    }
    let p = T::from_u32(q - 1).ok_or(Error::Overflow)?;
    let mut values = Vec::with_capacity(count);
    let mut reach = Vec::with_capacity(count);
    values.push(T::zero());
    reach.push(T::zero());
    // Running sum of the last d weights.
    let mut window = T::zero();
    for i in 1..count {
        let w = p
            .checked_mul(&window)
            .and_then(|v| v.checked_add(&T::one()))
            .ok_or(Error::Overflow)?;
        window = window.checked_add(&w).ok_or(Error::Overflow)?;
        if i >= d {
            window = window - values[i - d].clone();
        }
        let r = p
            .checked_mul(&w)
            .and_then(|v| v.checked_add(&reach[i - 1]))
            .ok_or(Error::Overflow)?;
        values.push(w);
        reach.push(r);
    }
    Ok(WeightTable { q, d, values, reach })
}

/// `M(x) = x_1 w_1 + ... + x_len w_len`.
pub fn moment<T: Exact>(x: &[Symbol], w: &WeightTable<T>) -> Result<T> {
    if x.len() > w.max_word_len() {
        return Err(Error::LengthMismatch {
            expected: w.max_word_len(),
            actual: x.len(),
        });
    }
    Ok(offset_moment(x, 0, w))
}

/// `sum_k s_k * w_{offset+k}`: the moment contribution of `s` placed at
/// positions `offset+1 ..= offset+len(s)`.
///
/// Panics when the table is too short.
pub fn offset_moment<T: Exact>(s: &[Symbol], offset: usize, w: &WeightTable<T>) -> T {
    s.iter()
        .enumerate()
        .filter(|(_, &sym)| sym != 0)
        .fold(T::zero(), |acc, (k, &sym)| acc + w[offset + k + 1].scale(sym))
}

/// `m' = total - sum_{i=n'+1}^{n'+len(suffix)} x_i w_i`.
///
/// Negative results mean the suffix is inconsistent with `total`.
pub fn partial_moment<T: Exact>(total: &T, x_suffix_known: &[Symbol], n_prime: usize, params: &CodeParams<T>) -> T {
    total.clone() - offset_moment(x_suffix_known, n_prime, &params.weights)
}

/// `{g in 0..=p : g*w_i <= m <= g*w_i + p*(w_1 + ... + w_{i-1})}`, ascending.
///
/// The set is always a contiguous run of symbols.
pub fn symbol_window<T: Exact>(m: &T, i: usize, w: &WeightTable<T>) -> Vec<Symbol> {
    if m.is_negative() || *m > *w.reach(i) {
        return Vec::new();
    }
    let p = w.p();
    let wi = &w[i];
    let clamp = |v: T| v.to_u32().map_or(p, |v| v.min(u32::from(p)) as Symbol);
    let hi = clamp(m.clone() / wi.clone());
    let excess = m.clone() - w.reach(i - 1).clone();
    let lo = if excess.is_positive() {
        clamp((excess + wi.clone() - T::one()) / wi.clone())
    } else {
        0
    };
    (lo..=hi).collect()
}

/// Codebook parameters `C_H(n, d, r, q)` with modulus `w_{n+1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeParams<T> {
    pub n: usize,
    pub d: usize,
    pub q: u32,
    pub p: Symbol,
    pub r: T,
    pub weights: WeightTable<T>,
    pub modulus: T,
    /// Set when the residue given to [`CodeParams::new`] was outside `0..modulus`.
    pub r_reduced: bool,
}

impl<T: Exact> CodeParams<T> {
    /// Validates parameters and reduces `r` modulo `w_{n+1}`.
    ///
    /// Bounded integer types are accepted only when every quantity the
    /// decoder forms (up to `2 * w_{n+1}`) fits.
    pub fn new(n: usize, d: usize, q: u32, r: T) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidParameter("n must be at least 1".into()));
        }
        let weights = build_weights::<T>(q, d, n + 2)?;
        let modulus = weights[n + 1].clone();
        modulus.checked_add(&modulus).ok_or(Error::Overflow)?;
        let reduced = ((r.clone() % modulus.clone()) + modulus.clone()) % modulus.clone();
        let r_reduced = reduced != r;
        if r_reduced {
            log::warn!("residue {r} reduced modulo {modulus} to {reduced}");
        }
        Ok(CodeParams {
            n,
            d,
            q,
            p: (q - 1) as Symbol,
            r: reduced,
            weights,
            modulus,
            r_reduced,
        })
    }

    /// Same parameters with a different residue.
    pub fn with_residue(&self, r: T) -> Result<Self> {
        CodeParams::new(self.n, self.d, self.q, r)
    }

    pub fn moment(&self, x: &[Symbol]) -> Result<T> {
        moment(x, &self.weights)
    }

    pub fn is_codeword(&self, x: &[Symbol]) -> Result<bool> {
        is_codeword(x, self)
    }

    pub fn codebook(&self) -> Codebook<'_, T> {
        enumerate_codebook(self)
    }

    /// Converts to another exact integer type, e.g. `i64` for fast sweeps.
    pub fn convert<U: Exact>(&self) -> Result<CodeParams<U>> {
        let r = U::from_str_radix(&self.r.to_string(), 10).map_err(|_| Error::Overflow)?;
        CodeParams::new(self.n, self.d, self.q, r)
    }
}

/// True iff `len(x) = n` and `M(x) mod w_{n+1} = r`.
pub fn is_codeword<T: Exact>(x: &[Symbol], params: &CodeParams<T>) -> Result<bool> {
    if x.len() != params.n {
        return Err(Error::LengthMismatch {
            expected: params.n,
            actual: x.len(),
        });
    }
    Word::from(x).check_alphabet(params.p)?;
    let m = moment(x, &params.weights)?;
    Ok(m % params.modulus.clone() == params.r)
}

/// All codewords in lexicographic order.
///
/// Every codeword has moment `r` or `r + w_{n+1}`, so branches whose
/// attainable moment range misses both are pruned.
pub fn enumerate_codebook<T: Exact>(params: &CodeParams<T>) -> Codebook<'_, T> {
    Codebook {
        params,
        low: params.r.clone(),
        high: params.r.clone() + params.modulus.clone(),
        word: Vec::with_capacity(params.n),
        acc: vec![T::zero()],
        next: vec![0],
    }
}

/// Iterator returned by [`enumerate_codebook`].
pub struct Codebook<'a, T> {
    params: &'a CodeParams<T>,
    low: T,
    high: T,
    word: Vec<Symbol>,
    /// `acc[k]` is the moment of the first `k` chosen symbols.
    acc: Vec<T>,
    /// `next[k]` is the next symbol to try at position `k + 1`.
    next: Vec<u32>,
}

impl<T: Exact> Iterator for Codebook<'_, T> {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        let n = self.params.n;
        let p = u32::from(self.params.p);
        let w = &self.params.weights;
        loop {
            let s = *self.next.last()?;
            let k = self.word.len();
            if s > p {
                self.next.pop();
                self.word.pop()?;
                self.acc.pop();
                continue;
            }
            *self.next.last_mut().expect("nonempty") += 1;
            let m = self.acc[k].clone() + w[k + 1].scale(s as Symbol);
            if m > self.high {
                *self.next.last_mut().expect("nonempty") = p + 1;
                continue;
            }
            let top = m.clone() + w.reach(n).clone() - w.reach(k + 1).clone();
            let hits = |t: &T| m <= *t && *t <= top;
            if !hits(&self.low) && !hits(&self.high) {
                continue;
            }
            if k + 1 == n {
                let mut word = self.word.clone();
                word.push(s as Symbol);
                return Some(Word::new(word));
            }
            self.word.push(s as Symbol);
            self.acc.push(m);
            self.next.push(0);
        }
    }
}

/// Upper bounds on insertions (`a`) and deletions (`b`) for a received length.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ErrorBudget {
    pub a: usize,
    pub b: usize,
}

impl ErrorBudget {
    /// `a + b < d`: one symbol must be deleted before decoding.
    pub fn needs_normalizing(&self, d: usize) -> bool {
        self.a + self.b < d
    }
}

/// `a = floor((d + len_y - n) / 2)`, `b = floor((d - len_y + n) / 2)`.
pub fn compute_budget<T>(len_y: usize, params: &CodeParams<T>) -> Result<ErrorBudget> {
    budget_for(len_y, params.n, params.d)
}

pub(crate) fn budget_for(len_y: usize, n: usize, d: usize) -> Result<ErrorBudget> {
    if len_y.abs_diff(n) > d {
        return Err(Error::InvalidInput(format!(
            "received length {len_y} is more than {d} away from n = {n}"
        )));
    }
    let a = (d + len_y - n) / 2;
    let b = (d + n - len_y) / 2;
    Ok(ErrorBudget { a, b })
}

/// Decimal weights, one per line.
pub fn format_weights<T: Exact>(w: &WeightTable<T>) -> String {
    w.values().iter().map(|v| format!("{v}\n")).collect()
}
