//! Words over the alphabet `{0, ..., q-1}`.
//!
//! Positions in every public contract are 1-indexed; storage is a plain
//! vector.

use std::fmt;
use std::ops::Deref;

use crate::error::{Error, Result};

pub type Symbol = u16;

#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Symbol>);

impl Word {
    pub fn new(symbols: Vec<Symbol>) -> Self {
        Word(symbols)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn zeros(len: usize) -> Self {
        Word(vec![0; len])
    }

    pub fn repeat(symbol: Symbol, len: usize) -> Self {
        Word(vec![symbol; len])
    }

    /// Parses the text form used on the command line: a contiguous digit
    /// string when `q <= 10`, otherwise comma-separated decimal symbols.
    /// The empty string is the empty word.
    pub fn parse(text: &str, q: u32) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(Word::empty());
        }
        let symbols: Vec<u32> = if q <= 10 && !text.contains(',') {
            text.chars()
                .map(|c| {
                    c.to_digit(10)
                        .ok_or_else(|| Error::MalformedWord(format!("unexpected character {c:?}")))
                })
                .collect::<Result<_>>()?
        } else {
            text.split(',')
                .map(|part| {
                    part.trim()
                        .parse::<u32>()
                        .map_err(|_| Error::MalformedWord(format!("bad symbol {part:?}")))
                })
                .collect::<Result<_>>()?
        };
        let word = symbols
            .into_iter()
            .map(|s| {
                if s >= q {
                    Err(Error::SymbolOutOfRange {
                        symbol: s,
                        max: q.saturating_sub(1),
                    })
                } else {
                    Ok(s as Symbol)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Word(word))
    }

    /// Text form matching [`Word::parse`] for alphabet size `q`.
    pub fn to_text(&self, q: u32) -> String {
        if q <= 10 {
            self.0.iter().map(|s| char::from(b'0' + *s as u8)).collect()
        } else {
            self.0.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(",")
        }
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.0
    }

    pub fn into_symbols(self) -> Vec<Symbol> {
        self.0
    }

    /// Symbol at 1-indexed position `i`.
    pub fn at(&self, i: usize) -> Symbol {
        self.0[i - 1]
    }

    /// `s[from:to]` with 1-indexed inclusive bounds; empty when `from > to`.
    pub fn slice(&self, from: usize, to: usize) -> Word {
        let to = to.min(self.0.len());
        if from == 0 || from > to {
            return Word::empty();
        }
        Word(self.0[from - 1..to].to_vec())
    }

    /// First `k` symbols (`s[1:k]`), clamped to the word.
    pub fn prefix(&self, k: usize) -> Word {
        Word(self.0[..k.min(self.0.len())].to_vec())
    }

    /// Last `k` symbols, clamped to the word.
    pub fn suffix(&self, k: usize) -> Word {
        let k = k.min(self.0.len());
        Word(self.0[self.0.len() - k..].to_vec())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn max_symbol(&self) -> Option<Symbol> {
        self.0.iter().copied().max()
    }

    /// Fails when any symbol exceeds `p`.
    pub fn check_alphabet(&self, p: Symbol) -> Result<()> {
        match self.0.iter().find(|&&s| s > p) {
            Some(&s) => Err(Error::SymbolOutOfRange {
                symbol: s.into(),
                max: p.into(),
            }),
            None => Ok(()),
        }
    }
}

impl Deref for Word {
    type Target = [Symbol];

    fn deref(&self) -> &[Symbol] {
        &self.0
    }
}

impl From<Vec<Symbol>> for Word {
    fn from(v: Vec<Symbol>) -> Self {
        Word(v)
    }
}

impl From<&[Symbol]> for Word {
    fn from(v: &[Symbol]) -> Self {
        Word(v.to_vec())
    }
}

impl FromIterator<Symbol> for Word {
    fn from_iter<I: IntoIterator<Item = Symbol>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

/// Digits when every symbol is below 10, comma-separated otherwise.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let q = if self.0.iter().all(|&s| s < 10) { 10 } else { 11 };
        f.write_str(&self.to_text(q))
    }
}

/// Shorthand for tests and examples: digits only.
///
/// Panics on anything other than decimal digits.
pub fn w(text: &str) -> Word {
    Word::parse(text, 10).expect("digit string")
}
