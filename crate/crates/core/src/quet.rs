//! Quet's recurrence: `a(0) = 2`, and `a(n)` is the least prime not yet
//! used with `n | a(n-1) + a(n)`.

use std::collections::HashSet;

use num_integer::Integer;

use crate::numerics::{is_prime_u64, next_prime_in_class, Sieve, DEFAULT_CLASS_CEILING};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QuetError {
    #[error("no admissible prime for index {index} (class {residue} mod {index}) at or below {ceiling}")]
    NoAdmissiblePrime { index: u64, residue: u64, ceiling: u64 },
    #[error("argument must be at least 1")]
    Zero,
}

/// The sequence so far, plus the set of primes already taken.
#[derive(Debug, Clone)]
pub struct QuetState {
    terms: Vec<u64>,
    used: HashSet<u64>,
    ceiling: u64,
}

impl Default for QuetState {
    fn default() -> Self {
        Self::with_ceiling(DEFAULT_CLASS_CEILING)
    }
}

impl QuetState {
    pub fn new() -> Self {
        Self::default()
    }

    /// `ceiling` bounds every residue-class scan.
    pub fn with_ceiling(ceiling: u64) -> Self {
        QuetState { terms: vec![2], used: HashSet::from([2]), ceiling }
    }

    pub fn terms(&self) -> &[u64] {
        &self.terms
    }

    /// Index of the next term.
    pub fn next_index(&self) -> u64 {
        self.terms.len() as u64
    }

    pub fn is_used(&self, p: u64) -> bool {
        self.used.contains(&p)
    }

    /// Compute, record and return `a(n)` for the next index `n`.
    pub fn next_term(&mut self) -> Result<u64, QuetError> {
        let n = self.next_index();
        let prev = *self.terms.last().expect("a(0) is always present");
        // need p ≡ -a(n-1) (mod n)
        let residue = (n - prev % n) % n;
        let p = if residue.gcd(&n) > 1 {
            // the class only holds multiples of the gcd: the candidates
            // are the prime divisors of n lying in the class
            Sieve::shared()
                .factorize(n)
                .ok()
                .into_iter()
                .flatten()
                .map(|(q, _)| q)
                .filter(|&q| q % n == residue && q <= self.ceiling && !self.used.contains(&q))
                .min()
        } else {
            let mut start = 2;
            loop {
                match next_prime_in_class(start, residue, n, self.ceiling) {
                    Ok(p) if self.used.contains(&p) => start = p + 1,
                    Ok(p) => break Some(p),
                    Err(_) => break None,
                }
            }
        };
        let p = p.ok_or(QuetError::NoAdmissiblePrime { index: n, residue, ceiling: self.ceiling })?;
        debug_assert!(is_prime_u64(p));
        self.terms.push(p);
        self.used.insert(p);
        Ok(p)
    }

    /// Extend until `count` terms exist.
    pub fn extend_to(&mut self, count: usize) -> Result<(), QuetError> {
        while self.terms.len() < count {
            self.next_term()?;
        }
        Ok(())
    }
}

/// `a(0), ..., a(k-1)`.
pub fn quet_prefix(k: usize) -> Result<Vec<u64>, QuetError> {
    if k == 0 {
        return Err(QuetError::Zero);
    }
    let mut state = QuetState::new();
    state.extend_to(k)?;
    Ok(state.terms)
}

/// Indices `n <= limit` where `a(n) < n`.
pub fn small_indices(limit: u64) -> Result<Vec<u64>, QuetError> {
    if limit == 0 {
        return Err(QuetError::Zero);
    }
    let mut state = QuetState::new();
    state.extend_to(limit as usize + 1)?;
    Ok(small_indices_of(state.terms()))
}

pub fn small_indices_of(terms: &[u64]) -> Vec<u64> {
    terms.iter().enumerate().filter(|&(n, &a)| a < n as u64).map(|(n, _)| n as u64).collect()
}
