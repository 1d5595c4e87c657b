//! `a(n) = ⌊H(n) + exp(H(n))·ln(H(n))⌋ − σ(n)`, with the floor certified
//! by interval arithmetic: a term is only emitted once an enclosure of
//! the left-hand side fits strictly between two consecutive integers.
//! `a(n) >= 0` for every `n` is equivalent to the Riemann hypothesis.

pub mod interval;

use num_bigint::{BigInt, BigUint};
use rayon::prelude::*;

pub use interval::CertifiedReal;

use crate::numerics::{harmonic_range, sigma_u64, HarmonicSums, NumericsError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LagariasError {
    #[error("index must be at least 1")]
    Zero,
    #[error("enclosure {enclosure} still straddles an integer at the {max_bits}-bit ceiling")]
    PrecisionCeiling { max_bits: u32, enclosure: String },
    #[error(transparent)]
    Numerics(#[from] NumericsError),
}

/// Starting precision and ceiling for floor certification; precision
/// doubles between attempts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrecisionPolicy {
    pub start_bits: u32,
    pub max_bits: u32,
}

impl Default for PrecisionPolicy {
    fn default() -> Self {
        PrecisionPolicy { start_bits: 128, max_bits: 8192 }
    }
}

/// A floor together with the precision that settled it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertifiedFloor {
    pub value: BigInt,
    pub bits: u32,
}

/// Enclosure of `h + e^h · ln h` for `h = num/den >= 1`.
pub fn lhs_enclosure_of(num: &BigUint, den: &BigUint, bits: u32) -> CertifiedReal {
    let work = bits + 64;
    let h = CertifiedReal::from_fraction(num, den, work);
    h.add(&h.exp().mul(&h.ln())).with_precision(bits)
}

/// Enclosure of `H(n) + exp(H(n))·ln(H(n))` from the exact harmonic number.
pub fn lhs_enclosure(n: u64, bits: u32) -> Result<CertifiedReal, LagariasError> {
    if n == 0 {
        return Err(LagariasError::Zero);
    }
    let (num, den) = harmonic_range(1, n);
    Ok(lhs_enclosure_of(&num, &den, bits))
}

/// Re-evaluate at doubling precision until the enclosure has one floor.
pub fn certified_floor(
    eval: impl Fn(u32) -> CertifiedReal,
    policy: PrecisionPolicy,
) -> Result<CertifiedFloor, LagariasError> {
    let mut bits = policy.start_bits.max(1);
    loop {
        let x = eval(bits);
        if let Some(value) = x.floor() {
            return Ok(CertifiedFloor { value, bits });
        }
        if bits >= policy.max_bits {
            return Err(LagariasError::PrecisionCeiling { max_bits: policy.max_bits, enclosure: x.to_string() });
        }
        bits = (bits * 2).min(policy.max_bits);
    }
}

/// One certified term.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LagariasTerm {
    pub n: u64,
    pub floor: CertifiedFloor,
    pub sigma: BigUint,
    pub value: BigInt,
}

pub fn term(n: u64, policy: PrecisionPolicy) -> Result<LagariasTerm, LagariasError> {
    if n == 0 {
        return Err(LagariasError::Zero);
    }
    let (num, den) = harmonic_range(1, n);
    finish_term(n, &num, &den, policy)
}

fn finish_term(n: u64, num: &BigUint, den: &BigUint, policy: PrecisionPolicy) -> Result<LagariasTerm, LagariasError> {
    let floor = certified_floor(|bits| lhs_enclosure_of(num, den, bits), policy)?;
    let sigma = sigma_u64(n)?;
    let value = &floor.value - BigInt::from(sigma.clone());
    Ok(LagariasTerm { n, floor, sigma, value })
}

const CHUNK: u64 = 256;

/// Terms for `lo..=hi`.
pub fn terms_in(lo: u64, hi: u64, policy: PrecisionPolicy) -> Result<Vec<LagariasTerm>, LagariasError> {
    if lo == 0 {
        return Err(LagariasError::Zero);
    }
    if hi < lo {
        return Ok(Vec::new());
    }
    terms_from(&mut HarmonicSums::starting_at(lo), hi - lo + 1, policy)
}

/// The next `count` terms after `sums`. One sequential pass records the
/// harmonic sum at each chunk start; the chunks then run in parallel.
fn terms_from(sums: &mut HarmonicSums, count: u64, policy: PrecisionPolicy) -> Result<Vec<LagariasTerm>, LagariasError> {
    let mut starts = Vec::new();
    let mut left = count;
    while left > 0 {
        let len = left.min(CHUNK);
        starts.push((sums.clone(), len));
        sums.nth(len as usize - 1);
        left -= len;
    }
    let chunks: Vec<Vec<LagariasTerm>> = starts
        .into_par_iter()
        .map(|(chunk, len)| {
            chunk.take(len as usize).map(|(n, num, den)| finish_term(n, &num, &den, policy)).collect()
        })
        .collect::<Result<_, _>>()?;
    Ok(chunks.into_iter().flatten().collect())
}

/// `a(1), ..., a(k)`.
pub fn a057641_prefix(k: u64) -> Result<Vec<BigInt>, LagariasError> {
    if k == 0 {
        return Err(LagariasError::Zero);
    }
    Ok(terms_in(1, k, PrecisionPolicy::default())?.into_iter().map(|t| t.value).collect())
}

/// Outcome of scanning `a(1..=limit)` for negative terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonnegativityReport {
    pub limit: u64,
    pub first_violation: Option<u64>,
    /// Highest precision any floor needed.
    pub max_bits: u32,
    pub min_value: BigInt,
}

pub fn check_nonnegative(limit: u64) -> Result<NonnegativityReport, LagariasError> {
    check_nonnegative_with(limit, PrecisionPolicy::default())
}

pub fn check_nonnegative_with(limit: u64, policy: PrecisionPolicy) -> Result<NonnegativityReport, LagariasError> {
    check_nonnegative_with_progress(limit, policy, |_, _| {})
}

/// As [`check_nonnegative_with`], calling `progress(done, limit)` after
/// each block of terms.
pub fn check_nonnegative_with_progress(
    limit: u64,
    policy: PrecisionPolicy,
    mut progress: impl FnMut(u64, u64),
) -> Result<NonnegativityReport, LagariasError> {
    if limit == 0 {
        return Err(LagariasError::Zero);
    }
    let block = CHUNK * 64;
    let mut report = NonnegativityReport { limit, first_violation: None, max_bits: policy.start_bits, min_value: BigInt::ZERO };
    let mut sums = HarmonicSums::starting_at(1);
    let mut lo = 1;
    while lo <= limit {
        let hi = (lo + block - 1).min(limit);
        for t in terms_from(&mut sums, hi - lo + 1, policy)? {
            if t.value < BigInt::ZERO && report.first_violation.is_none() {
                report.first_violation = Some(t.n);
            }
            report.max_bits = report.max_bits.max(t.floor.bits);
            if t.n == 1 || t.value < report.min_value {
                report.min_value = t.value;
            }
        }
        progress(hi, limit);
        lo = hi + 1;
    }
    Ok(report)
}
