use rayon::prelude::*;

use crate::numerics::to_digits;
use crate::Natural;

use super::DigitGameError;

/// Default cap on the decimal size of a single powertrain value.
pub const DEFAULT_POWERTRAIN_DIGITS: usize = 100_000;

/// Conway's powertrain: digits `a b c d ...` map to `a^b · c^d · ...`,
/// with an odd trailing digit as a bare factor, `0^0 = 1`, and 0 fixed.
pub fn powertrain(n: &Natural) -> Result<Natural, DigitGameError> {
    powertrain_with_limit(n, DEFAULT_POWERTRAIN_DIGITS)
}

pub fn powertrain_with_limit(n: &Natural, max_digits: usize) -> Result<Natural, DigitGameError> {
    let digits = to_digits(n);
    if digits == [0] {
        return Ok(Natural::from(0u32));
    }
    let factors: Vec<u64> = digits
        .chunks(2)
        .map(|pair| match *pair {
            [base, exp] => u64::from(base).pow(u32::from(exp)),
            [base] => u64::from(base),
            _ => unreachable!(),
        })
        .collect();
    if factors.contains(&0) {
        return Ok(Natural::from(0u32));
    }
    let estimate: f64 = factors.iter().map(|&f| (f as f64).log10()).sum();
    if estimate > max_digits as f64 {
        return Err(DigitGameError::PowertrainOverflow { digits: digits.len(), limit: max_digits });
    }
    Ok(product_tree(&factors))
}

fn product_tree(factors: &[u64]) -> Natural {
    match factors {
        [] => Natural::from(1u32),
        [f] => Natural::from(*f),
        _ => {
            let (a, b) = factors.split_at(factors.len() / 2);
            product_tree(a) * product_tree(b)
        }
    }
}

/// Powertrain on machine words, `None` once the value passes `cap`.
pub fn powertrain_u128(n: u64, cap: u128) -> Option<u128> {
    if n == 0 {
        return Some(0);
    }
    let mut buf = [0u8; 20];
    let mut len = 0;
    let mut v = n;
    while v > 0 {
        buf[len] = (v % 10) as u8;
        v /= 10;
        len += 1;
    }
    buf[..len].reverse();
    let mut acc: u128 = 1;
    for pair in buf[..len].chunks(2) {
        let f = match *pair {
            [base, exp] => u128::from(base).pow(u32::from(exp)),
            [base] => u128::from(base),
            _ => unreachable!(),
        };
        acc = acc.checked_mul(f)?;
        if acc > cap {
            return None;
        }
    }
    Some(acc)
}

/// Fixed points of the powertrain map in `lo..=hi`, ascending.
pub fn powertrain_fixed_points_in(lo: u64, hi: u64) -> Vec<u64> {
    (lo..=hi).filter(|&n| powertrain_u128(n, u128::from(n)) == Some(u128::from(n))).collect()
}

/// Every `n <= limit` with `powertrain(n) = n`.
pub fn powertrain_fixed_points(limit: u64) -> Vec<u64> {
    const CHUNK: u64 = 1 << 20;
    let chunks = limit / CHUNK + 1;
    let parts: Vec<Vec<u64>> = (0..chunks)
        .into_par_iter()
        .map(|c| powertrain_fixed_points_in(c * CHUNK, (c * CHUNK + CHUNK - 1).min(limit)))
        .collect();
    parts.into_iter().flatten().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nat(s: &str) -> Natural {
        s.parse().unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(powertrain(&nat("2592")).unwrap(), nat("2592"));
        assert_eq!(powertrain(&nat("679")).unwrap(), Natural::from(6u64.pow(7) * 9));
        assert_eq!(powertrain(&nat("679")).unwrap(), nat("2519424"));
        assert_eq!(powertrain(&nat("0")).unwrap(), nat("0"));
        let big = nat("24547284284866560000000000");
        assert_eq!(powertrain(&big).unwrap(), big);
    }

    #[test]
    fn zero_conventions() {
        // 0^0 = 1, 0^k = 0, a trailing bare 0 kills the product
        assert_eq!(powertrain(&nat("10")).unwrap(), nat("1"));
        assert_eq!(powertrain(&nat("2000")).unwrap(), nat("1"));
        assert_eq!(powertrain(&nat("310")).unwrap(), nat("0"));
        assert_eq!(powertrain(&nat("205")).unwrap(), nat("5"));
        assert_eq!(powertrain(&nat("1052")).unwrap(), nat("25"));
    }

    #[test]
    fn single_digits_are_fixed() {
        for d in 0..10u32 {
            assert_eq!(powertrain(&Natural::from(d)).unwrap(), Natural::from(d));
        }
    }

    #[test]
    fn word_version_agrees() {
        for n in 0..200_000u64 {
            let big = powertrain(&Natural::from(n)).unwrap();
            assert_eq!(powertrain_u128(n, u128::MAX).map(Natural::from), Some(big), "{n}");
        }
    }

    #[test]
    fn fixed_points() {
        assert_eq!(powertrain_fixed_points(10), (0..=9).collect::<Vec<_>>());
        assert_eq!(powertrain_fixed_points(2591), (0..=9).collect::<Vec<_>>());
        let mut expected: Vec<u64> = (0..=9).collect();
        expected.push(2592);
        assert_eq!(powertrain_fixed_points(10_000), expected);
    }

    #[test]
    fn overflow_guard() {
        let long = nat(&"99".repeat(200));
        assert!(powertrain(&long).is_ok());
        assert!(matches!(
            powertrain_with_limit(&long, 1000),
            Err(DigitGameError::PowertrainOverflow { digits: 400, limit: 1000 })
        ));
    }
}
