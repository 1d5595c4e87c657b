use std::sync::OnceLock;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use super::{Natural, NumericsError, Rational};

pub const DEFAULT_SIEVE_BOUND: u64 = 1_000_000;

/// Primes up to a fixed bound, used for trial-division factorization.
#[derive(Debug, Clone)]
pub struct Sieve {
    bound: u64,
    primes: Vec<u64>,
}

impl Sieve {
    pub fn new(bound: u64) -> Self {
        let bound = bound.max(2);
        let len = usize::try_from(bound).expect("sieve bound fits in memory") + 1;
        let mut composite = vec![false; len];
        let mut primes = Vec::new();
        for i in 2..len {
            if composite[i] {
                continue;
            }
            primes.push(i as u64);
            let mut j = i * i;
            while j < len {
                composite[j] = true;
                j += i;
            }
        }
        Sieve { bound, primes }
    }

    /// The process-wide sieve with [`DEFAULT_SIEVE_BOUND`].
    pub fn shared() -> &'static Sieve {
        static SHARED: OnceLock<Sieve> = OnceLock::new();
        SHARED.get_or_init(|| Sieve::new(DEFAULT_SIEVE_BOUND))
    }

    pub fn bound(&self) -> u64 {
        self.bound
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    /// Prime factorization as `(prime, exponent)` pairs. Any cofactor left
    /// after dividing out the sieve primes must be below `bound²`, which
    /// makes it prime; otherwise the factorization is not certified.
    pub fn factorize(&self, n: u64) -> Result<Vec<(u64, u32)>, NumericsError> {
        if n == 0 {
            return Err(NumericsError::Zero);
        }
        let mut rest = n;
        let mut out = Vec::new();
        for &p in &self.primes {
            if p.saturating_mul(p) > rest {
                break;
            }
            if rest % p == 0 {
                let mut e = 0;
                while rest % p == 0 {
                    rest /= p;
                    e += 1;
                }
                out.push((p, e));
            }
        }
        if rest > 1 {
            let last = *self.primes.last().unwrap_or(&1);
            if u128::from(last) * u128::from(last) < u128::from(rest) {
                return Err(NumericsError::FactorBound(Natural::from(rest)));
            }
            out.push((rest, 1));
        }
        Ok(out)
    }

    pub fn sigma(&self, n: u64) -> Result<Natural, NumericsError> {
        let mut total = Natural::one();
        for (p, e) in self.factorize(n)? {
            // 1 + p + ... + p^e
            let p = Natural::from(p);
            let mut term = Natural::one();
            let mut sum = Natural::one();
            for _ in 0..e {
                term *= &p;
                sum += &term;
            }
            total *= sum;
        }
        Ok(total)
    }
}

/// Sum of the positive divisors of `n`, via the multiplicative formula.
pub fn sigma(n: &Natural) -> Result<Natural, NumericsError> {
    let small = n.to_u64().ok_or_else(|| NumericsError::OutOfRange(n.clone()))?;
    Sieve::shared().sigma(small)
}

pub fn sigma_u64(n: u64) -> Result<Natural, NumericsError> {
    Sieve::shared().sigma(n)
}

/// `Σ 1/k` for `k` in `lo..=hi` as an unreduced fraction, by binary splitting.
pub fn harmonic_range(lo: u64, hi: u64) -> (BigUint, BigUint) {
    debug_assert!(lo >= 1 && lo <= hi);
    if hi - lo < 16 {
        let mut num = BigUint::zero();
        let mut den = BigUint::one();
        for k in lo..=hi {
            num = num * k + &den;
            den *= k;
        }
        return (num, den);
    }
    let mid = lo + (hi - lo) / 2;
    let (a, b) = harmonic_range(lo, mid);
    let (c, d) = harmonic_range(mid + 1, hi);
    (a * &d + c * &b, b * d)
}

/// The `n`th harmonic number, exactly and in lowest terms.
pub fn harmonic(n: u64) -> Result<Rational, NumericsError> {
    if n == 0 {
        return Err(NumericsError::Zero);
    }
    let (num, den) = harmonic_range(1, n);
    Ok(Rational::new(num, den))
}

/// `lcm(1, ..., n)`.
pub fn lcm_upto(n: u64) -> BigUint {
    fn product(v: &[u64]) -> BigUint {
        match v.len() {
            0 => BigUint::one(),
            1 => BigUint::from(v[0]),
            len => product(&v[..len / 2]) * product(&v[len / 2..]),
        }
    }
    let powers: Vec<u64> = Sieve::new(n.max(2))
        .primes()
        .iter()
        .filter(|&&p| p <= n)
        .map(|&p| {
            let mut q = p;
            while q <= n / p {
                q *= p;
            }
            q
        })
        .collect();
    product(&powers)
}

/// The prime `p` when `k = p^a` with `a >= 1`.
fn prime_power_base(k: u64) -> Option<u64> {
    match Sieve::shared().factorize(k).ok()?.as_slice() {
        [(p, _)] => Some(*p),
        _ => None,
    }
}

/// Successive harmonic numbers `H(start), H(start+1), ...` over the common
/// denominator `lcm(1..n)`. Each step costs one pass over the numerator,
/// and the fractions never outgrow that denominator.
#[derive(Debug, Clone)]
pub struct HarmonicSums {
    next: u64,
    num: BigUint,
    den: BigUint,
}

impl HarmonicSums {
    pub fn starting_at(start: u64) -> Self {
        let start = start.max(1);
        if start == 1 {
            return HarmonicSums { next: 1, num: BigUint::zero(), den: BigUint::one() };
        }
        let (n, d) = harmonic_range(1, start - 1);
        let lcm = lcm_upto(start - 1);
        // lcm·H is an integer, so this division is exact
        HarmonicSums { next: start, num: n * &lcm / d, den: lcm }
    }

    /// The index the next call to `next` will return.
    pub fn position(&self) -> u64 {
        self.next
    }
}

impl Iterator for HarmonicSums {
    /// `(n, numerator, denominator)` with `H(n) = numerator / denominator`.
    type Item = (u64, BigUint, BigUint);

    fn next(&mut self) -> Option<Self::Item> {
        let k = self.next;
        if let Some(p) = prime_power_base(k) {
            self.num *= p;
            self.den *= p;
        }
        self.num += &self.den / k;
        self.next += 1;
        Some((k, self.num.clone(), self.den.clone()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::Integer;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn brute_sigma(n: u64) -> u64 {
        (1..=n).filter(|d| n % d == 0).sum()
    }

    fn q(a: u64, b: u64) -> Rational {
        Rational::new(BigUint::from(a), BigUint::from(b))
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(sigma_u64(1).unwrap(), Natural::from(1u32));
        assert_eq!(sigma_u64(6).unwrap(), Natural::from(brute_sigma(6)));
        assert_eq!(sigma_u64(12).unwrap(), Natural::from(28u32));
        assert_eq!(sigma(&Natural::zero()), Err(NumericsError::Zero));
    }

    #[test]
    fn sigma_matches_brute_force_below_two_thousand() {
        for n in 1..2000 {
            assert_eq!(sigma_u64(n).unwrap(), Natural::from(brute_sigma(n)), "n = {n}");
        }
    }

    #[test]
    fn sigma_is_multiplicative_on_random_coprime_pairs() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut checked = 0;
        while checked < 1000 {
            let a = rng.random_range(1..1_000_000u64);
            let b = rng.random_range(1..1_000_000u64);
            if a.gcd(&b) != 1 {
                continue;
            }
            let lhs = sigma_u64(a * b).unwrap();
            assert_eq!(lhs, sigma_u64(a).unwrap() * sigma_u64(b).unwrap());
            if checked < 30 {
                // brute force is slow; spot-check the factors themselves
                assert_eq!(sigma_u64(a).unwrap(), Natural::from(brute_sigma(a)));
            }
            checked += 1;
        }
    }

    #[test]
    fn factorize_rejects_uncertified_cofactor() {
        let small = Sieve::new(100);
        // 101 * 103 > 100^2 is fine only if the last sieve prime squared covers it
        assert!(small.factorize(10_403).is_err());
        assert_eq!(small.factorize(97 * 89).unwrap(), vec![(89, 1), (97, 1)]);
        assert_eq!(Sieve::shared().factorize(1).unwrap(), vec![]);
    }

    #[test]
    fn lcm_and_running_sums() {
        let expected = [1u64, 1, 2, 6, 12, 60, 60, 420, 840, 2520, 2520];
        for (n, &l) in expected.iter().enumerate() {
            assert_eq!(lcm_upto(n as u64), BigUint::from(l), "lcm(1..{n})");
        }
        let mut sums = HarmonicSums::starting_at(1);
        for (n, num, den) in sums.by_ref().take(300) {
            assert_eq!(den, lcm_upto(n));
            assert_eq!(Rational::new(num, den), harmonic(n).unwrap());
        }
        assert_eq!(sums.position(), 301);
    }

    #[test]
    fn harmonic_examples() {
        assert_eq!(harmonic(1).unwrap(), q(1, 1));
        assert_eq!(harmonic(2).unwrap(), q(3, 2));
        // 1 + 1/2 + 1/3 + 1/4 + 1/5 + 1/6 summed by hand: 49/20
        let mut acc = q(0, 1);
        for k in 1..=6 {
            acc += q(1, k);
        }
        assert_eq!(acc, q(49, 20));
        assert_eq!(harmonic(6).unwrap(), acc);
        assert_eq!(harmonic(0), Err(NumericsError::Zero));
    }

    #[test]
    fn harmonic_differences_are_unit_fractions() {
        let mut prev = harmonic(1).unwrap();
        for n in 2..=500u64 {
            let cur = harmonic(n).unwrap();
            assert_eq!(&cur - &prev, q(1, n));
            assert_eq!(cur.denom().gcd(cur.numer()), BigUint::one());
            prev = cur;
        }
    }

    #[test]
    fn incremental_sums_agree_with_direct() {
        for start in [1u64, 2, 37, 400] {
            for (n, num, den) in HarmonicSums::starting_at(start).take(40) {
                assert_eq!(Rational::new(num, den), harmonic(n).unwrap());
            }
        }
    }
}
