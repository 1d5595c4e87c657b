use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::Natural;

/// Decimal digits, most significant first. Zero is `[0]`.
pub fn to_digits(n: &Natural) -> Vec<u8> {
    n.to_radix_be(10)
}

/// Inverse of [`to_digits`]. Leading zeros are accepted and dropped; an
/// empty slice reads as zero. Returns `None` if any entry is not a digit.
pub fn from_digits(digits: &[u8]) -> Option<Natural> {
    if digits.is_empty() {
        return Some(Natural::zero());
    }
    BigUint::from_radix_be(digits, 10)
}

/// The number whose decimal expansion is that of `n` read backwards.
/// Trailing zeros of `n` become leading zeros and vanish.
pub fn reverse_digits(n: &Natural) -> Natural {
    // Big-endian digits reinterpreted as little-endian is the reversal.
    BigUint::from_radix_le(&n.to_radix_be(10), 10).expect("decimal digits")
}

pub fn reverse_and_add(n: &Natural) -> Natural {
    n + reverse_digits(n)
}

pub fn is_palindrome(n: &Natural) -> bool {
    let d = to_digits(n);
    d.iter().eq(d.iter().rev())
}

pub fn digit_product(n: &Natural) -> Natural {
    let mut acc = 1u64;
    let mut out = Natural::one();
    for d in to_digits(n) {
        if d == 0 {
            return Natural::zero();
        }
        // 9^19 < 2^64, so flush every 19 digits at the latest.
        match acc.checked_mul(u64::from(d)) {
            Some(v) => acc = v,
            None => {
                out *= acc;
                acc = u64::from(d);
            }
        }
    }
    out * acc
}

/// Digit product on machine words, used by the ascending scans.
pub fn digit_product_u64(mut n: u64) -> u64 {
    if n < 10 {
        return n;
    }
    let mut p = 1;
    while n > 0 {
        p *= n % 10;
        if p == 0 {
            return 0;
        }
        n /= 10;
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn nat(v: u64) -> Natural {
        Natural::from(v)
    }

    #[test]
    fn digit_views() {
        assert_eq!(to_digits(&nat(679)), vec![6, 7, 9]);
        assert_eq!(to_digits(&nat(0)), vec![0]);
        assert_eq!(to_digits(&nat(10755470)), vec![1, 0, 7, 5, 5, 4, 7, 0]);
        assert_eq!(from_digits(&[0, 0, 4, 2]), Some(nat(42)));
        assert_eq!(from_digits(&[1, 10]), None);
        assert_eq!(from_digits(&[]), Some(nat(0)));
    }

    #[test]
    fn reverse_and_add_examples() {
        assert_eq!(reverse_and_add(&nat(19)), nat(110));
        assert_eq!(reverse_and_add(&nat(110)), nat(121));
        assert_eq!(reverse_and_add(&nat(0)), nat(0));
    }

    #[test]
    fn palindromes() {
        assert!(is_palindrome(&nat(121)));
        assert!(!is_palindrome(&nat(19)));
        assert!(is_palindrome(&nat(7)));
        assert!(is_palindrome(&nat(0)));
        assert!(!is_palindrome(&nat(110)));
    }

    #[test]
    fn digit_products() {
        assert_eq!(digit_product(&nat(679)), nat(378));
        assert_eq!(digit_product(&nat(48)), nat(32));
        assert_eq!(digit_product(&nat(5)), nat(5));
        assert_eq!(digit_product(&nat(0)), nat(0));
        assert_eq!(digit_product(&nat(105)), nat(0));
        let nines: Natural = "9".repeat(40).parse().unwrap();
        assert_eq!(digit_product(&nines), nat(9).pow(40));
    }

    #[test]
    fn reversal_bounds_below_ten_thousand() {
        for v in 0..10_000u64 {
            let n = nat(v);
            assert!(reverse_digits(&n) <= nat(10 * v.max(1)));
            assert!(reverse_and_add(&n) >= n);
        }
    }

    #[test]
    fn digit_product_shrinks_multi_digit_numbers() {
        for v in 10..100_000u64 {
            assert!(digit_product_u64(v) < v, "{v}");
            assert_eq!(nat(digit_product_u64(v)), digit_product(&nat(v)));
        }
    }

    proptest! {
        #[test]
        fn digits_round_trip(v in any::<u128>()) {
            let n = Natural::from(v);
            let d = to_digits(&n);
            prop_assert!(d.len() == 1 || d[0] != 0);
            prop_assert!(d.iter().all(|&x| x < 10));
            prop_assert_eq!(from_digits(&d), Some(n));
        }
    }
}
