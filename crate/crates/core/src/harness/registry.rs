use num_bigint::BigInt;

use crate::angelini::{self, LanguageTable};
use crate::curling::{self, best_tail};
use crate::digitgames::{self, PersistenceSearch, DEFAULT_LYCHREL_CAP};
use crate::duplication::{reachable_counts, SymbolString, DEFAULT_STRING_BUDGET};
use crate::{lagarias, quet, Error, Natural};

use super::{ANumber, HarnessError, SequenceRecord};

/// A sequence this crate can compute, with the offset of its first term
/// and the largest prefix it will attempt.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Generator {
    pub a_number: &'static str,
    pub offset: i64,
    pub max_terms: usize,
    pub title: &'static str,
}

const GENERATORS: &[Generator] = &[
    Generator { a_number: "A003001", offset: 1, max_terms: 11, title: "smallest number of persistence n" },
    Generator { a_number: "A006960", offset: 0, max_terms: 100_000, title: "reverse-and-add trajectory of 196" },
    Generator { a_number: "A033865", offset: 0, max_terms: 100_000, title: "palindrome reached from n, -1 if none" },
    Generator { a_number: "A051003", offset: 1, max_terms: 1_000_000, title: "beastly numbers" },
    Generator { a_number: "A057641", offset: 1, max_terms: 1_000_000, title: "certified Lagarias slack" },
    Generator { a_number: "A090822", offset: 1, max_terms: 10_000_000, title: "Gijswijt's sequence" },
    Generator { a_number: "A094004", offset: 1, max_terms: curling::MAX_EXHAUSTIVE_LEN, title: "best curling tail" },
    Generator { a_number: "A131744", offset: 1, max_terms: 10_000_000, title: "self-describing letter sequence" },
    Generator { a_number: "A133242", offset: 1, max_terms: 1000, title: "indices n with a(n) < n in Quet's sequence" },
    Generator { a_number: "A134204", offset: 0, max_terms: 10_000_000, title: "Quet's prime recurrence" },
    Generator { a_number: "A135385", offset: 1, max_terms: 11, title: "powertrain fixed points" },
    Generator { a_number: "A135473", offset: 3, max_terms: 15, title: "strings reachable from 123" },
];

/// Every sequence [`generate`] accepts.
pub fn supported() -> &'static [Generator] {
    GENERATORS
}

fn nat(v: impl Into<BigInt>) -> BigInt {
    v.into()
}

fn from_natural(n: Natural) -> BigInt {
    BigInt::from(n)
}

/// First `count` terms of `a_number`, from its offset.
pub fn generate(a_number: ANumber, count: usize) -> Result<SequenceRecord, HarnessError> {
    let key = a_number.to_string();
    let g = GENERATORS.iter().find(|g| g.a_number == key).ok_or(HarnessError::NoGenerator(a_number))?;
    if count > g.max_terms {
        return Err(HarnessError::TooManyTerms { a_number, max: g.max_terms });
    }
    let terms = if count == 0 { Vec::new() } else { compute(&key, count).map_err(|e| HarnessError::Generator(Box::new(e)))? };
    Ok(SequenceRecord::new(a_number, g.offset, terms))
}

fn compute(key: &str, count: usize) -> Result<Vec<BigInt>, Error> {
    Ok(match key {
        "A003001" => (1..=count as u32)
            .map(|p| digitgames::smallest_with_persistence(p, PersistenceSearch::default()).map(from_natural))
            .collect::<Result<_, _>>()?,
        "A006960" => digitgames::palindrome_trajectory(&Natural::from(196u32), count - 1)
            .iterates
            .into_iter()
            .map(from_natural)
            .collect(),
        "A033865" => digitgames::a033865_prefix(count, DEFAULT_LYCHREL_CAP)
            .into_iter()
            .map(|p| p.map_or_else(|| nat(-1), from_natural))
            .collect(),
        "A051003" => digitgames::beastly_prefix(count).into_iter().map(from_natural).collect(),
        "A057641" => lagarias::a057641_prefix(count as u64)?,
        "A090822" => curling::gijswijt_prefix(count).into_iter().map(nat).collect(),
        "A094004" => (1..=count).map(|n| best_tail(n).map(|b| nat(b.tail_length as u64))).collect::<Result<_, _>>()?,
        "A131744" => angelini::generate(1, count, &LanguageTable::english())?.into_iter().map(nat).collect(),
        "A133242" => {
            let mut state = quet::QuetState::new();
            let mut found = Vec::with_capacity(count);
            while found.len() < count {
                let n = state.next_index();
                if state.next_term()? < n {
                    found.push(nat(n));
                }
            }
            found
        }
        "A134204" => quet::quet_prefix(count)?.into_iter().map(nat).collect(),
        "A135385" => {
            let mut points = digitgames::powertrain_fixed_points(100_000_000);
            points.truncate(count);
            points.into_iter().map(nat).collect()
        }
        "A135473" => {
            let seed: SymbolString = "123".parse()?;
            reachable_counts(&seed, count + 2, DEFAULT_STRING_BUDGET)?.iter().map(|&c| nat(c as u64)).collect()
        }
        _ => unreachable!("registry and dispatch disagree on {key}"),
    })
}
