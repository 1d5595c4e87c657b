use rayon::prelude::*;

use crate::numerics::{digit_product, digit_product_u64};
use crate::Natural;

use super::DigitGameError;

/// Digit-product steps until a single digit remains.
pub fn persistence(n: &Natural) -> u32 {
    let mut steps = 0;
    let mut cur = n.clone();
    while cur >= Natural::from(10u32) {
        cur = digit_product(&cur);
        steps += 1;
    }
    steps
}

pub fn persistence_u128(mut n: u128) -> u32 {
    let mut steps = 0;
    while n >= 10 {
        let mut p: u128 = 1;
        while n > 0 && p > 0 {
            p *= n % 10;
            n /= 10;
        }
        n = p;
        steps += 1;
    }
    steps
}

fn persistence_u64(mut n: u64) -> u32 {
    let mut steps = 0;
    while n >= 10 {
        n = digit_product_u64(n);
        steps += 1;
    }
    steps
}

/// Limits for [`smallest_with_persistence`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PersistenceSearch {
    pub max_target: u32,
    /// Largest value examined by the ascending scan (targets up to 8).
    pub scan_ceiling: u64,
    /// Longest candidate examined by the digit-multiset search (targets 9 and up).
    pub max_digits: usize,
}

impl Default for PersistenceSearch {
    fn default() -> Self {
        PersistenceSearch { max_target: 15, scan_ceiling: 100_000_000, max_digits: 30 }
    }
}

/// Least number with persistence exactly `target`.
///
/// Targets up to 8 use a plain ascending scan. Beyond that the scan is
/// hopeless, and the search walks candidates whose digits are drawn from
/// 2..=9 in nondecreasing order: for `target >= 2` the answer has no 0
/// (that would give persistence 1), no 1 (dropping it keeps the product
/// and shortens the number), and among permutations of one digit multiset
/// the sorted one is smallest.
pub fn smallest_with_persistence(target: u32, search: PersistenceSearch) -> Result<Natural, DigitGameError> {
    if target == 0 || target > search.max_target {
        return Err(DigitGameError::PersistenceTarget { target, max: search.max_target });
    }
    if target <= 8 {
        smallest_with_persistence_by_scan(target, search.scan_ceiling).map(Natural::from)
    } else {
        smallest_with_persistence_by_candidates(target, search.max_digits)
    }
}

pub fn smallest_with_persistence_by_scan(target: u32, ceiling: u64) -> Result<u64, DigitGameError> {
    const CHUNK: u64 = 1 << 18;
    let mut lo = 0u64;
    while lo <= ceiling {
        let hi = lo.saturating_add(64 * CHUNK).min(ceiling.saturating_add(1));
        let found = (0..64u64).into_par_iter().find_map_first(|i| {
            let a = lo.saturating_add(i * CHUNK).min(hi);
            let b = a.saturating_add(CHUNK).min(hi);
            (a..b).find(|&n| persistence_u64(n) == target)
        });
        if let Some(n) = found {
            return Ok(n);
        }
        lo = hi;
        if hi == u64::MAX {
            break;
        }
    }
    Err(DigitGameError::SearchExhausted { target, bound: format!("at or below {ceiling}") })
}

/// Walks nondecreasing digit strings over 2..=9, shortest first and in
/// lexicographic order within a length, so the first hit is the least.
pub fn smallest_with_persistence_by_candidates(target: u32, max_digits: usize) -> Result<Natural, DigitGameError> {
    fn walk(digits: &mut Vec<u8>, len: usize, product: u128, target: u32) -> bool {
        if digits.len() == len {
            return 1 + persistence_u128(product) == target;
        }
        let lo = digits.last().copied().unwrap_or(2);
        for d in lo..=9 {
            digits.push(d);
            if walk(digits, len, product * u128::from(d), target) {
                return true;
            }
            digits.pop();
        }
        false
    }

    // 9^38 < 2^128, so products of up to 38 digits stay exact.
    let max_digits = max_digits.min(38);
    for len in 2..=max_digits {
        let mut digits = Vec::with_capacity(len);
        if walk(&mut digits, len, 1, target) {
            let text: String = digits.iter().map(|d| char::from(b'0' + d)).collect();
            return Ok(text.parse().expect("decimal digits"));
        }
    }
    Err(DigitGameError::SearchExhausted { target, bound: format!("with at most {max_digits} digits") })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn plain_scan(target: u32) -> u64 {
        (0u64..).find(|&n| {
            let mut v = n;
            let mut s = 0;
            while v >= 10 {
                v = v.to_string().bytes().map(|b| u64::from(b - b'0')).product();
                s += 1;
            }
            s == target
        })
        .unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(persistence(&Natural::from(679u32)), 5);
        assert_eq!(persistence(&Natural::from(7u32)), 0);
        assert_eq!(persistence(&Natural::from(10u32)), 1);
        assert_eq!(persistence_u128(277_777_788_888_899), 11);
    }

    #[test]
    fn persistence_recurrence() {
        for n in 10..100_000u64 {
            let nn = Natural::from(n);
            assert_eq!(persistence(&nn), 1 + persistence(&digit_product(&nn)));
            assert_eq!(persistence(&nn), persistence_u64(n));
        }
    }

    #[test]
    fn smallest_values() {
        let s = PersistenceSearch::default();
        assert_eq!(smallest_with_persistence(1, s).unwrap(), Natural::from(10u32));
        assert_eq!(smallest_with_persistence(5, s).unwrap(), Natural::from(679u32));
        assert_eq!(smallest_with_persistence(8, s).unwrap(), Natural::from(2_677_889u32));
    }

    #[test]
    fn scan_matches_plain_oracle() {
        for p in 1..=6 {
            assert_eq!(smallest_with_persistence_by_scan(p, 1_000_000).unwrap(), plain_scan(p), "p = {p}");
        }
    }

    #[test]
    fn candidate_search_matches_scan() {
        for p in 2..=8 {
            let scan = smallest_with_persistence_by_scan(p, 10_000_000).unwrap();
            assert_eq!(smallest_with_persistence_by_candidates(p, 20).unwrap(), Natural::from(scan), "p = {p}");
        }
    }

    #[test]
    fn candidate_search_reaches_the_long_terms() {
        let s = PersistenceSearch::default();
        assert_eq!(smallest_with_persistence(9, s).unwrap(), Natural::from(26_888_999u32));
        assert_eq!(smallest_with_persistence(10, s).unwrap(), Natural::from(3_778_888_999u64));
        assert_eq!(smallest_with_persistence(11, s).unwrap(), Natural::from(277_777_788_888_899u64));
    }

    #[test]
    fn bounds() {
        let s = PersistenceSearch::default();
        assert!(matches!(smallest_with_persistence(0, s), Err(DigitGameError::PersistenceTarget { .. })));
        assert!(matches!(smallest_with_persistence(16, s), Err(DigitGameError::PersistenceTarget { .. })));
        assert!(matches!(
            smallest_with_persistence_by_scan(6, 1000),
            Err(DigitGameError::SearchExhausted { .. })
        ));
        assert!(matches!(
            smallest_with_persistence(12, PersistenceSearch { max_digits: 16, ..s }),
            Err(DigitGameError::SearchExhausted { .. })
        ));
    }
}
