//! Closure of a seed string under in-place substring duplication
//! (`x·y·z → x·y·y·z`), counted by length.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::io::{self, Write};
use std::str::FromStr;

use rayon::prelude::*;

/// Default cap on distinct strings held across all levels.
pub const DEFAULT_STRING_BUDGET: usize = 20_000_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DuplicationError {
    #[error("symbol strings are nonempty sequences of digits 1-9: {0:?}")]
    BadSymbols(String),
    #[error("maximum length {max_len} is shorter than the seed ({seed_len})")]
    TooShort { max_len: usize, seed_len: usize },
    #[error("memory budget of {budget} strings exceeded at length {length}; complete counts: {completed:?}")]
    Budget { budget: usize, length: usize, completed: Vec<usize> },
}

/// A nonempty string over the digits 1..=9.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SymbolString(Vec<u8>);

impl SymbolString {
    pub fn new(symbols: Vec<u8>) -> Result<Self, DuplicationError> {
        if symbols.is_empty() || symbols.iter().any(|&s| !(1..=9).contains(&s)) {
            return Err(DuplicationError::BadSymbols(format!("{symbols:?}")));
        }
        Ok(SymbolString(symbols))
    }

    pub fn symbols(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

impl FromStr for SymbolString {
    type Err = DuplicationError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let symbols = s
            .bytes()
            .map(|b| b.wrapping_sub(b'0'))
            .collect::<Vec<_>>();
        SymbolString::new(symbols).map_err(|_| DuplicationError::BadSymbols(s.to_string()))
    }
}

impl fmt::Display for SymbolString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.0 {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// Copy `s[start..start + len]` in place, right after itself.
fn duplicate(s: &[u8], start: usize, len: usize) -> Box<[u8]> {
    let end = start + len;
    let mut out = Vec::with_capacity(s.len() + len);
    out.extend_from_slice(&s[..end]);
    out.extend_from_slice(&s[start..end]);
    out.extend_from_slice(&s[end..]);
    out.into_boxed_slice()
}

/// Every string one duplication away from `s`, of any length.
pub fn duplications(s: &SymbolString) -> BTreeSet<SymbolString> {
    let n = s.len();
    let mut out = BTreeSet::new();
    for start in 0..n {
        for len in 1..=n - start {
            out.insert(SymbolString(duplicate(&s.0, start, len).into_vec()));
        }
    }
    out
}

/// The reachable strings of each length from the seed's length up to
/// `max_len`. Level `T` gathers, for every shorter level `L`, all
/// duplications of a substring of length `T - L`; since duplication only
/// lengthens, the shorter levels are already complete when `T` is built.
#[derive(Debug, Clone)]
pub struct Closure {
    seed: SymbolString,
    levels: Vec<HashSet<Box<[u8]>>>,
}

impl Closure {
    pub fn build(seed: &SymbolString, max_len: usize, budget: usize) -> Result<Self, DuplicationError> {
        Self::build_with_progress(seed, max_len, budget, |_, _| {})
    }

    /// As [`Closure::build`], calling `progress(length, count)` as each level completes.
    pub fn build_with_progress(
        seed: &SymbolString,
        max_len: usize,
        budget: usize,
        mut progress: impl FnMut(usize, usize),
    ) -> Result<Self, DuplicationError> {
        let base = seed.len();
        if max_len < base {
            return Err(DuplicationError::TooShort { max_len, seed_len: base });
        }
        let mut closure = Closure { seed: seed.clone(), levels: vec![HashSet::from([seed.0.clone().into_boxed_slice()])] };
        let mut total = 1usize;
        progress(base, 1);
        for target in base + 1..=max_len {
            let mut next: HashSet<Box<[u8]>> = HashSet::new();
            for (offset, level) in closure.levels.iter().enumerate() {
                let len = target - (base + offset);
                if len > base + offset {
                    continue;
                }
                let found = level
                    .par_iter()
                    .fold(HashSet::new, |mut acc: HashSet<Box<[u8]>>, s| {
                        for start in 0..=s.len() - len {
                            acc.insert(duplicate(s, start, len));
                        }
                        acc
                    })
                    .reduce(HashSet::new, merge);
                next = merge(next, found);
                if total + next.len() > budget {
                    return Err(DuplicationError::Budget { budget, length: target, completed: closure.counts() });
                }
            }
            total += next.len();
            progress(target, next.len());
            closure.levels.push(next);
        }
        Ok(closure)
    }

    pub fn seed(&self) -> &SymbolString {
        &self.seed
    }

    pub fn max_len(&self) -> usize {
        self.seed.len() + self.levels.len() - 1
    }

    /// Counts for lengths `|seed| ..= max_len`.
    pub fn counts(&self) -> Vec<usize> {
        self.levels.iter().map(HashSet::len).collect()
    }

    pub fn contains(&self, s: &SymbolString) -> bool {
        s.len() >= self.seed.len() && self.level_set(s.len()).is_some_and(|l| l.contains(s.symbols()))
    }

    fn level_set(&self, length: usize) -> Option<&HashSet<Box<[u8]>>> {
        self.levels.get(length.checked_sub(self.seed.len())?)
    }

    /// All strings of one length, sorted.
    pub fn level(&self, length: usize) -> Vec<SymbolString> {
        let mut out: Vec<SymbolString> = self
            .level_set(length)
            .map(|l| l.iter().map(|s| SymbolString(s.to_vec())).collect())
            .unwrap_or_default();
        out.sort();
        out
    }

    /// One string per line, lexicographic order, LF line ends.
    pub fn write_level(&self, length: usize, mut out: impl Write) -> io::Result<()> {
        for s in self.level(length) {
            writeln!(out, "{s}")?;
        }
        Ok(())
    }
}

fn merge(mut a: HashSet<Box<[u8]>>, b: HashSet<Box<[u8]>>) -> HashSet<Box<[u8]>> {
    if a.len() < b.len() {
        return merge(b, a);
    }
    a.extend(b);
    a
}

/// Number of distinct reachable strings of each length `|seed| ..= max_len`.
pub fn reachable_counts(seed: &SymbolString, max_len: usize, budget: usize) -> Result<Vec<usize>, DuplicationError> {
    Closure::build(seed, max_len, budget).map(|c| c.counts())
}

pub fn is_reachable(s: &SymbolString, seed: &SymbolString, budget: usize) -> Result<bool, DuplicationError> {
    if s.len() < seed.len() {
        return Ok(false);
    }
    Ok(Closure::build(seed, s.len(), budget)?.contains(s))
}
