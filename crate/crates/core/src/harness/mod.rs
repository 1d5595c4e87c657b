//! Ground truth and verification: OEIS b-files, the bundled fixtures of
//! every printed prefix, generators keyed by A-number, and an optional
//! cached fetch of b-files from the OEIS.

mod bfile;
mod fetch;
mod fixtures;
mod registry;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::Serialize;

pub use bfile::{parse_bfile, to_bfile};
pub use fetch::{fetch_bfile, CachePolicy, FetchConfig};
pub use fixtures::{fixture, fixtures};
pub use registry::{generate, supported, Generator};

#[derive(Debug, thiserror::Error)]
pub enum HarnessError {
    #[error("not an A-number: {0:?}")]
    BadANumber(String),
    #[error("line {line}: malformed b-file line {text:?}")]
    Malformed { line: usize, text: String },
    #[error("line {line}: index {found} does not follow {previous}")]
    NonConsecutive { line: usize, previous: i64, found: i64 },
    #[error("b-file has no data lines")]
    EmptyBFile,
    #[error("no overlap between generated terms and the fixture")]
    EmptyOverlap,
    #[error("no bundled fixture for {0}")]
    NoFixture(ANumber),
    #[error("no generator for {0}")]
    NoGenerator(ANumber),
    #[error("{a_number} can produce at most {max} terms here")]
    TooManyTerms { a_number: ANumber, max: usize },
    #[error("network access is disabled; pass --fetch or set HATEFUL_NETWORK=1")]
    NetworkDisabled,
    #[error("{0} is not in the b-file cache")]
    NotInCache(ANumber),
    #[error("HTTP failure fetching {url}: {reason}")]
    Http { url: String, reason: String },
    #[error("cache: {0}")]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Generator(Box<crate::Error>),
}

/// OEIS identifier: `A` followed by six digits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ANumber(u32);

impl ANumber {
    pub fn new(n: u32) -> Option<Self> {
        (n <= 999_999).then_some(ANumber(n))
    }

    pub fn number(&self) -> u32 {
        self.0
    }

    /// `bNNNNNN.txt`, the OEIS b-file name.
    pub fn bfile_name(&self) -> String {
        format!("b{:06}.txt", self.0)
    }
}

impl FromStr for ANumber {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let digits = s.strip_prefix('A').filter(|d| d.len() == 6 && d.bytes().all(|b| b.is_ascii_digit()));
        digits.and_then(|d| d.parse().ok()).map(ANumber).ok_or_else(|| HarnessError::BadANumber(s.to_string()))
    }
}

impl fmt::Display for ANumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A{:06}", self.0)
    }
}

impl Serialize for ANumber {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Terms of one sequence, `terms[i]` being the term with index `offset + i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceRecord {
    pub a_number: ANumber,
    pub offset: i64,
    pub terms: Vec<BigInt>,
}

impl SequenceRecord {
    pub fn new(a_number: ANumber, offset: i64, terms: Vec<BigInt>) -> Self {
        SequenceRecord { a_number, offset, terms }
    }

    /// Term at OEIS index `index`.
    pub fn get(&self, index: i64) -> Option<&BigInt> {
        usize::try_from(index - self.offset).ok().and_then(|i| self.terms.get(i))
    }

    pub fn last_index(&self) -> i64 {
        self.offset + self.terms.len() as i64 - 1
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub index: i64,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub a_number: ANumber,
    pub compared: usize,
    pub first_mismatch: Option<Mismatch>,
    pub status: Status,
}

/// Compare `generated` against `fixture` on the indices both cover.
pub fn verify(generated: &SequenceRecord, fixture: &SequenceRecord) -> Result<VerificationReport, HarnessError> {
    let lo = generated.offset.max(fixture.offset);
    let hi = generated.last_index().min(fixture.last_index());
    if hi < lo || generated.terms.is_empty() || fixture.terms.is_empty() {
        return Err(HarnessError::EmptyOverlap);
    }
    let first_mismatch = (lo..=hi).find_map(|i| {
        let (expected, actual) = (fixture.get(i)?, generated.get(i)?);
        (expected != actual).then(|| Mismatch { index: i, expected: expected.to_string(), actual: actual.to_string() })
    });
    let status = if first_mismatch.is_none() { Status::Pass } else { Status::Fail };
    Ok(VerificationReport { a_number: fixture.a_number, compared: (hi - lo + 1) as usize, first_mismatch, status })
}
