//! Curling numbers, Gijswijt's sequence, and the exhaustive search for
//! the longest run before a 1 over initial strings of 2s and 3s.

use std::collections::BTreeMap;
use std::fmt;
use std::fs::{File, OpenOptions};
use std::io::{self, BufRead, BufReader, Write};
use std::path::Path;
use std::str::FromStr;
use std::sync::Mutex;

use rayon::prelude::*;

pub const DEFAULT_STEP_CAP: usize = 10_000;
/// Largest initial length accepted by [`best_tail`].
pub const MAX_EXHAUSTIVE_LEN: usize = 24;

#[derive(Debug, thiserror::Error)]
pub enum CurlingError {
    #[error("empty string")]
    Empty,
    #[error("symbols must be positive integers: {0:?}")]
    BadSymbols(String),
    #[error("no 1 appended within {cap} steps from {initial}; a counterexample to the conjecture would look like this")]
    StepCap { cap: usize, initial: CurlString },
    #[error("exhaustive length must lie in 1..={max}, got {n}")]
    Bound { n: usize, max: usize },
    #[error("checkpoint {path}: {reason}")]
    Checkpoint { path: String, reason: String },
    #[error(transparent)]
    Io(#[from] io::Error),
}

/// A nonempty string of positive integers. Digits print without
/// separators when every symbol is below 10, comma-separated otherwise.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CurlString(Vec<u32>);

impl CurlString {
    pub fn new(symbols: Vec<u32>) -> Result<Self, CurlingError> {
        if symbols.is_empty() {
            return Err(CurlingError::Empty);
        }
        if symbols.contains(&0) {
            return Err(CurlingError::BadSymbols(format!("{symbols:?}")));
        }
        Ok(CurlString(symbols))
    }

    pub fn symbols(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl FromStr for CurlString {
    type Err = CurlingError;

    /// Accepts "222322" or "2,2,2,3,2,2" (spaces allowed around commas).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || CurlingError::BadSymbols(s.to_string());
        let t = s.trim();
        let symbols = if t.contains(',') || t.contains(' ') {
            t.split([',', ' '])
                .filter(|p| !p.is_empty())
                .map(|p| p.parse::<u32>().map_err(|_| bad()))
                .collect::<Result<Vec<_>, _>>()?
        } else {
            t.chars().map(|c| c.to_digit(10).ok_or_else(bad)).collect::<Result<Vec<_>, _>>()?
        };
        CurlString::new(symbols)
    }
}

impl fmt::Display for CurlString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.0.iter().all(|&s| s < 10) { "" } else { "," };
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(sep)?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// Largest `k` with `s = X·Y^k`, `Y` nonempty. 1 for the empty string.
///
/// For each block length `l`, count how often the final `l` symbols repeat
/// going backwards. Once `(best + 1) · l` exceeds the length no longer
/// block can do better, so the scan stops there.
pub fn curling_number(s: &[u32]) -> u32 {
    let n = s.len();
    let mut best = 1usize;
    let mut l = 1;
    while (best + 1) * l <= n {
        let tail = &s[n - l..];
        let mut k = 1;
        while (k + 1) * l <= n && &s[n - (k + 1) * l..n - k * l] == tail {
            k += 1;
        }
        best = best.max(k);
        l += 1;
    }
    best as u32
}

/// First `k` terms of Gijswijt's sequence: start from 1, keep appending
/// the curling number.
pub fn gijswijt_prefix(k: usize) -> Vec<u32> {
    let mut s = Vec::with_capacity(k);
    if k == 0 {
        return s;
    }
    s.push(1);
    while s.len() < k {
        let c = curling_number(&s);
        s.push(c);
    }
    s
}

/// Outcome of appending curling numbers until a 1 shows up.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TailResult {
    pub initial: CurlString,
    /// The initial string, every appended symbol, and the final 1.
    pub extended: CurlString,
    /// Length of the string just before the 1 was appended.
    pub tail_length: usize,
}

/// Append curling numbers to `initial` until the appended value is 1.
pub fn extend_until_one(initial: &CurlString, step_cap: usize) -> Result<TailResult, CurlingError> {
    let mut s = initial.0.clone();
    tail_length_in(&mut s, step_cap)
        .map(|tail_length| TailResult { initial: initial.clone(), extended: CurlString(s), tail_length })
        .ok_or_else(|| CurlingError::StepCap { cap: step_cap, initial: initial.clone() })
}

// Extends `s` in place (ending with the 1). None if the cap ran out.
fn tail_length_in(s: &mut Vec<u32>, step_cap: usize) -> Option<usize> {
    for _ in 0..step_cap {
        let c = curling_number(s);
        s.push(c);
        if c == 1 {
            return Some(s.len() - 1);
        }
    }
    None
}

/// Best tail over all initial strings of one length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BestTail {
    pub n: usize,
    pub tail_length: usize,
    /// Lexicographically least initial string attaining `tail_length`.
    pub witness: CurlString,
}

/// Result for one shard: all strings sharing a fixed prefix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShardResult {
    pub prefix: String,
    pub tail_length: usize,
    pub witness: CurlString,
}

fn bits_to_symbols(bits: u64, len: usize) -> impl Iterator<Item = u32> {
    // most significant bit first; 0 is a 2, 1 is a 3
    (0..len).rev().map(move |i| 2 + ((bits >> i) & 1) as u32)
}

fn prefix_label(bits: u64, len: usize) -> String {
    bits_to_symbols(bits, len).map(|d| char::from_digit(d, 10).unwrap()).collect()
}

/// Exhausts one shard. Suffixes run in increasing order, so the first
/// maximum seen is the lexicographically least.
fn run_shard(n: usize, shard_bits: usize, shard: u64, step_cap: usize) -> Result<ShardResult, CurlingError> {
    let rest = n - shard_bits;
    let mut best: Option<(usize, u64)> = None;
    let mut buf = Vec::with_capacity(n + 256);
    for suffix in 0..1u64 << rest {
        let bits = (shard << rest) | suffix;
        buf.clear();
        buf.extend(bits_to_symbols(bits, n));
        let tail = match tail_length_in(&mut buf, step_cap) {
            Some(t) => t,
            None => {
                let initial = CurlString(bits_to_symbols(bits, n).collect());
                return Err(CurlingError::StepCap { cap: step_cap, initial });
            }
        };
        if best.is_none_or(|(t, _)| tail > t) {
            best = Some((tail, bits));
        }
    }
    let (tail_length, bits) = best.expect("every shard holds at least one string");
    Ok(ShardResult {
        prefix: prefix_label(shard, shard_bits),
        tail_length,
        witness: CurlString(bits_to_symbols(bits, n).collect()),
    })
}

/// Options for [`best_tail_with`].
#[derive(Debug, Clone)]
pub struct BestTailOptions<'a> {
    pub step_cap: usize,
    /// Length of the fixed prefix that defines a shard; clamped to `n`.
    pub shard_len: usize,
    /// Resume from and append to this checkpoint file.
    pub checkpoint: Option<&'a Path>,
}

impl Default for BestTailOptions<'_> {
    fn default() -> Self {
        BestTailOptions { step_cap: DEFAULT_STEP_CAP, shard_len: 10, checkpoint: None }
    }
}

/// Merge rule: longer tail wins; ties go to the smaller witness.
fn better(a: &ShardResult, b: &ShardResult) -> bool {
    a.tail_length > b.tail_length || (a.tail_length == b.tail_length && a.witness < b.witness)
}

pub fn best_tail(n: usize) -> Result<BestTail, CurlingError> {
    best_tail_with(n, &BestTailOptions::default(), |_, _| {})
}

/// Exhaustive search over `{2,3}^n`, split into `2^shard_len` shards run
/// in parallel. `progress(done, total)` is called as shards finish.
pub fn best_tail_with(
    n: usize,
    opts: &BestTailOptions<'_>,
    progress: impl Fn(usize, usize) + Sync,
) -> Result<BestTail, CurlingError> {
    if n == 0 || n > MAX_EXHAUSTIVE_LEN {
        return Err(CurlingError::Bound { n, max: MAX_EXHAUSTIVE_LEN });
    }
    let shard_bits = opts.shard_len.min(n);
    let total = 1usize << shard_bits;
    let mut done: BTreeMap<String, ShardResult> = BTreeMap::new();
    let mut writer = None;
    if let Some(path) = opts.checkpoint {
        done = load_checkpoint(path, n, shard_bits)?;
        let fresh = !path.exists() || std::fs::metadata(path)?.len() == 0;
        let mut f = OpenOptions::new().create(true).append(true).open(path)?;
        if fresh {
            writeln!(f, "# best-tail n={n} shard-len={shard_bits}")?;
        }
        writer = Some(Mutex::new(f));
    }
    let finished = std::sync::atomic::AtomicUsize::new(done.len());
    let pending: Vec<u64> =
        (0..total as u64).filter(|&s| !done.contains_key(&prefix_label(s, shard_bits))).collect();
    let fresh: Vec<ShardResult> = pending
        .par_iter()
        .map(|&shard| {
            let r = run_shard(n, shard_bits, shard, opts.step_cap)?;
            if let Some(w) = &writer {
                let mut f = w.lock().expect("checkpoint lock");
                writeln!(f, "{} {} {}", r.prefix, r.tail_length, r.witness)?;
                f.flush()?;
            }
            let k = finished.fetch_add(1, std::sync::atomic::Ordering::Relaxed) + 1;
            progress(k, total);
            Ok(r)
        })
        .collect::<Result<_, CurlingError>>()?;
    let best = done
        .into_values()
        .chain(fresh)
        .reduce(|a, b| if better(&b, &a) { b } else { a })
        .expect("at least one shard");
    Ok(BestTail { n, tail_length: best.tail_length, witness: best.witness })
}

fn load_checkpoint(path: &Path, n: usize, shard_bits: usize) -> Result<BTreeMap<String, ShardResult>, CurlingError> {
    let mut out = BTreeMap::new();
    if !path.exists() {
        return Ok(out);
    }
    let bad = |reason: String| CurlingError::Checkpoint { path: path.display().to_string(), reason };
    for (i, line) in BufReader::new(File::open(path)?).lines().enumerate() {
        let line = line?;
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(header) = line.strip_prefix('#') {
            let expected = format!("best-tail n={n} shard-len={shard_bits}");
            if header.trim().starts_with("best-tail") && header.trim() != expected {
                return Err(bad(format!("written for `{}`, this run is `{expected}`", header.trim())));
            }
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [prefix, tail, witness] = fields[..] else {
            return Err(bad(format!("line {}: expected `shard-prefix max witness`", i + 1)));
        };
        let tail_length = tail.parse().map_err(|_| bad(format!("line {}: bad tail {tail:?}", i + 1)))?;
        let witness: CurlString = witness.parse().map_err(|_| bad(format!("line {}: bad witness", i + 1)))?;
        if prefix.len() != shard_bits || witness.len() != n || !witness.to_string().starts_with(prefix) {
            return Err(bad(format!("line {}: shard does not match this run", i + 1)));
        }
        out.insert(prefix.to_string(), ShardResult { prefix: prefix.to_string(), tail_length, witness });
    }
    Ok(out)
}
