//! Fixed-point interval arithmetic with outward rounding.
//!
//! A [`CertifiedReal`] at precision `p` is the closed interval
//! `[lo / 2^p, hi / 2^p]` with integer `lo <= hi`. Every operation rounds
//! the lower endpoint down and the upper endpoint up, so the true value
//! of any expression built from exact inputs stays inside.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertifiedReal {
    lo: BigInt,
    hi: BigInt,
    prec: u32,
}

fn floor_div(a: &BigInt, b: &BigInt) -> BigInt {
    a.div_floor(b)
}

fn ceil_div(a: &BigInt, b: &BigInt) -> BigInt {
    -((-a).div_floor(b))
}

fn floor_shr(a: &BigInt, bits: u32) -> BigInt {
    floor_div(a, &(BigInt::one() << bits))
}

fn ceil_shr(a: &BigInt, bits: u32) -> BigInt {
    ceil_div(a, &(BigInt::one() << bits))
}

impl CertifiedReal {
    /// Build from raw scaled endpoints. Panics if `lo > hi`.
    pub fn from_scaled(lo: BigInt, hi: BigInt, prec: u32) -> Self {
        assert!(lo <= hi, "interval endpoints out of order");
        CertifiedReal { lo, hi, prec }
    }

    pub fn from_integer(v: i64, prec: u32) -> Self {
        let x = BigInt::from(v) << prec;
        CertifiedReal { lo: x.clone(), hi: x, prec }
    }

    /// Enclosure of `num / den`.
    pub fn from_ratio(num: &BigInt, den: &BigInt, prec: u32) -> Self {
        assert!(den.is_positive(), "denominator must be positive");
        let scaled = num << prec;
        CertifiedReal { lo: floor_div(&scaled, den), hi: ceil_div(&scaled, den), prec }
    }

    pub fn from_fraction(num: &BigUint, den: &BigUint, prec: u32) -> Self {
        Self::from_ratio(&BigInt::from(num.clone()), &BigInt::from(den.clone()), prec)
    }

    /// Enclosure of `√v`.
    pub fn sqrt_of(v: u64, prec: u32) -> Self {
        let scaled = BigUint::from(v) << (2 * prec);
        let root = scaled.sqrt();
        let exact = &root * &root == scaled;
        let lo = BigInt::from(root);
        let hi = if exact { lo.clone() } else { &lo + 1 };
        CertifiedReal { lo, hi, prec }
    }

    pub fn precision(&self) -> u32 {
        self.prec
    }

    pub fn lower_scaled(&self) -> &BigInt {
        &self.lo
    }

    pub fn upper_scaled(&self) -> &BigInt {
        &self.hi
    }

    /// Width in units of `2^-prec`.
    pub fn width_ulps(&self) -> BigInt {
        &self.hi - &self.lo
    }

    /// Whether `width < 2^-bits`.
    pub fn narrower_than(&self, bits: u32) -> bool {
        let w = self.width_ulps();
        if bits >= self.prec {
            return w.is_zero() || (w << (bits - self.prec)) < BigInt::one();
        }
        w < (BigInt::one() << (self.prec - bits))
    }

    pub fn lower_f64(&self) -> f64 {
        scaled_to_f64(&self.lo, self.prec)
    }

    pub fn upper_f64(&self) -> f64 {
        scaled_to_f64(&self.hi, self.prec)
    }

    /// `floor` of both endpoints.
    pub fn floor_bounds(&self) -> (BigInt, BigInt) {
        (floor_shr(&self.lo, self.prec), floor_shr(&self.hi, self.prec))
    }

    /// The floor of every point inside, if they all share one.
    pub fn floor(&self) -> Option<BigInt> {
        let (a, b) = self.floor_bounds();
        (a == b).then_some(a)
    }

    /// Whether `other` lies entirely inside `self`.
    pub fn contains(&self, other: &CertifiedReal) -> bool {
        let (a, b) = align(self, other);
        a.lo <= b.lo && b.hi <= a.hi
    }

    /// Same interval (rounded outward if shrinking) at another precision.
    pub fn with_precision(&self, prec: u32) -> Self {
        match prec.cmp(&self.prec) {
            Ordering::Equal => self.clone(),
            Ordering::Greater => {
                let s = prec - self.prec;
                CertifiedReal { lo: &self.lo << s, hi: &self.hi << s, prec }
            }
            Ordering::Less => {
                let s = self.prec - prec;
                CertifiedReal { lo: floor_shr(&self.lo, s), hi: ceil_shr(&self.hi, s), prec }
            }
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        debug_assert_eq!(self.prec, o.prec);
        CertifiedReal { lo: &self.lo + &o.lo, hi: &self.hi + &o.hi, prec: self.prec }
    }

    pub fn sub(&self, o: &Self) -> Self {
        debug_assert_eq!(self.prec, o.prec);
        CertifiedReal { lo: &self.lo - &o.hi, hi: &self.hi - &o.lo, prec: self.prec }
    }

    pub fn mul(&self, o: &Self) -> Self {
        debug_assert_eq!(self.prec, o.prec);
        let products = [&self.lo * &o.lo, &self.lo * &o.hi, &self.hi * &o.lo, &self.hi * &o.hi];
        let min = products.iter().min().expect("four products");
        let max = products.iter().max().expect("four products");
        CertifiedReal { lo: floor_shr(min, self.prec), hi: ceil_shr(max, self.prec), prec: self.prec }
    }

    pub fn mul_int(&self, k: i64) -> Self {
        let (a, b) = (&self.lo * k, &self.hi * k);
        if k >= 0 {
            CertifiedReal { lo: a, hi: b, prec: self.prec }
        } else {
            CertifiedReal { lo: b, hi: a, prec: self.prec }
        }
    }

    /// Division by a positive integer.
    pub fn div_int(&self, k: u64) -> Self {
        assert!(k > 0, "division by zero");
        let k = BigInt::from(k);
        CertifiedReal { lo: floor_div(&self.lo, &k), hi: ceil_div(&self.hi, &k), prec: self.prec }
    }

    /// Division by `2^bits`.
    pub fn shr(&self, bits: u32) -> Self {
        CertifiedReal { lo: floor_shr(&self.lo, bits), hi: ceil_shr(&self.hi, bits), prec: self.prec }
    }

    /// Division by an interval of strictly positive values.
    pub fn div(&self, o: &Self) -> Self {
        debug_assert_eq!(self.prec, o.prec);
        assert!(o.lo.is_positive(), "divisor interval must be positive");
        let scale = |v: &BigInt| v << self.prec;
        let quotients_lo = [floor_div(&scale(&self.lo), &o.lo), floor_div(&scale(&self.lo), &o.hi)];
        let quotients_hi = [ceil_div(&scale(&self.hi), &o.lo), ceil_div(&scale(&self.hi), &o.hi)];
        CertifiedReal {
            lo: quotients_lo.into_iter().min().expect("two"),
            hi: quotients_hi.into_iter().max().expect("two"),
            prec: self.prec,
        }
    }

    /// Enclosure of `e^x` for `x >= 0`.
    pub fn exp(&self) -> Self {
        assert!(!self.lo.is_negative(), "exp is implemented for non-negative arguments");
        let int_bits = floor_shr(&self.hi, self.prec).magnitude().bits() as u32;
        // halve until the argument is at most 1/2, square back afterwards
        let halvings = int_bits + 1;
        let work = self.prec + halvings + 48;
        let r = self.with_precision(work).shr(halvings);
        let one = CertifiedReal::from_integer(1, work);
        let mut sum = one.clone();
        let mut term = one;
        let mut k = 1u64;
        loop {
            term = term.mul(&r).div_int(k);
            sum = sum.add(&term);
            if term.hi <= BigInt::one() {
                break;
            }
            k += 1;
        }
        // r <= 1/2 makes every later term at most half the previous one,
        // so the remaining tail is at most `term`
        sum.hi += &term.hi;
        for _ in 0..halvings {
            sum = sum.mul(&sum);
        }
        sum.with_precision(self.prec)
    }

    /// Enclosure of `ln x` for `x >= 1`.
    pub fn ln(&self) -> Self {
        let one_scaled = BigInt::one() << self.prec;
        assert!(self.lo >= one_scaled, "ln is implemented for arguments >= 1");
        let k = floor_shr(&self.lo, self.prec).magnitude().bits() as u32 - 1;
        let work = self.prec + 48 + 32 - k.leading_zeros();
        let x = self.with_precision(work);
        let y = x.shr(k); // in [1, 2] up to rounding
        let one = CertifiedReal::from_integer(1, work);
        let t = y.sub(&one).div(&y.add(&one));
        let mut out = atanh_small(&t).mul_int(2);
        if k > 0 {
            let third = CertifiedReal::from_ratio(&BigInt::one(), &BigInt::from(3), work);
            out = out.add(&atanh_small(&third).mul_int(2 * i64::from(k)));
        }
        out.with_precision(self.prec)
    }
}

/// `atanh t` for `0 <= t <= 1/2`, via `t + t³/3 + t⁵/5 + ...`.
fn atanh_small(t: &CertifiedReal) -> CertifiedReal {
    debug_assert!(!t.lo.is_negative());
    debug_assert!(t.hi <= (BigInt::one() << (t.prec - 1)) + 2);
    let t2 = t.mul(t);
    let mut power = t.clone();
    let mut sum = t.clone();
    let mut k = 1u64;
    loop {
        power = power.mul(&t2);
        sum = sum.add(&power.div_int(2 * k + 1));
        if power.hi <= BigInt::one() {
            break;
        }
        k += 1;
    }
    // tail < power · t² / (1 - t²) <= power / 3
    sum.hi += &power.hi;
    sum
}

fn align(a: &CertifiedReal, b: &CertifiedReal) -> (CertifiedReal, CertifiedReal) {
    let p = a.prec.max(b.prec);
    (a.with_precision(p), b.with_precision(p))
}

fn scaled_to_f64(v: &BigInt, prec: u32) -> f64 {
    // keep 64 significant bits, then scale
    let bits = v.magnitude().bits() as i64;
    let drop = (bits - 64).max(0) as u32;
    let top = (v.magnitude() >> drop).to_f64().unwrap_or(f64::INFINITY);
    let signed = if v.sign() == Sign::Minus { -top } else { top };
    signed * 2f64.powi(drop as i32 - prec as i32)
}

impl fmt::Display for CertifiedReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:.17}, {:.17}] @ {} bits", self.lower_f64(), self.upper_f64(), self.prec)
    }
}
