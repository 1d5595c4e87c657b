use num_integer::Integer;
use num_traits::ToPrimitive;

use super::{Natural, NumericsError};

/// Default upper limit for residue-class scans.
pub const DEFAULT_CLASS_CEILING: u64 = 10_000_000_000;

// These twelve bases make Miller-Rabin deterministic for every n < 2^64
// (they cover n < 3.3 * 10^24).
const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((u128::from(a) * u128::from(b)) % u128::from(m)) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic primality for the whole `u64` range.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &WITNESSES {
        if n % p == 0 {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Primality for naturals below 2^64; larger inputs are rejected rather
/// than answered probabilistically.
pub fn is_prime(n: &Natural) -> Result<bool, NumericsError> {
    n.to_u64()
        .map(is_prime_u64)
        .ok_or_else(|| NumericsError::OutOfRange(n.clone()))
}

/// Least prime `p >= start` with `p ≡ residue (mod modulus)`, scanning the
/// progression no further than `ceiling`.
///
/// When `gcd(residue, modulus) = g > 1` every member of the class is a
/// multiple of `g`, so the only possible prime is `g` itself.
pub fn next_prime_in_class(start: u64, residue: u64, modulus: u64, ceiling: u64) -> Result<u64, NumericsError> {
    if modulus == 0 || residue >= modulus {
        return Err(NumericsError::BadResidue { residue, modulus });
    }
    let exhausted = || NumericsError::BoundExhausted { start, residue, modulus, ceiling };
    let g = residue.gcd(&modulus);
    if g > 1 {
        return if g >= start && g <= ceiling && g % modulus == residue && is_prime_u64(g) {
            Ok(g)
        } else {
            Err(exhausted())
        };
    }
    // first member of the class at or above start
    let mut candidate = match start.checked_sub(residue) {
        Some(gap) => residue + gap.div_ceil(modulus) * modulus,
        None => residue,
    };
    while candidate <= ceiling {
        if is_prime_u64(candidate) {
            return Ok(candidate);
        }
        candidate = candidate.checked_add(modulus).ok_or_else(exhausted)?;
    }
    Err(exhausted())
}
