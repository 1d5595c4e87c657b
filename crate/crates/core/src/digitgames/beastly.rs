use rayon::prelude::*;

use crate::numerics::to_digits;
use crate::Natural;

/// True iff the decimal expansion contains the run `666`.
pub fn is_beastly(n: &Natural) -> bool {
    to_digits(n).windows(3).any(|w| w == [6, 6, 6])
}

pub fn is_beastly_u64(mut n: u64) -> bool {
    while n >= 666 {
        if n % 1000 == 666 {
            return true;
        }
        n /= 10;
    }
    false
}

/// Beastly numbers in `lo..hi`, ascending.
pub fn beastly_in_range(lo: u64, hi: u64) -> Vec<u64> {
    (lo..hi).filter(|&n| is_beastly_u64(n)).collect()
}

/// The `k` smallest beastly numbers.
pub fn beastly_prefix(k: usize) -> Vec<Natural> {
    const CHUNK: u64 = 1 << 16;
    let mut out = Vec::with_capacity(k);
    let mut lo = 0u64;
    while out.len() < k {
        // scan a batch of chunks in parallel, keep them in order
        let batch: Vec<Vec<u64>> = (0..16u64)
            .into_par_iter()
            .map(|i| beastly_in_range(lo + i * CHUNK, lo + (i + 1) * CHUNK))
            .collect();
        lo += 16 * CHUNK;
        out.extend(batch.into_iter().flatten().take(k - out.len()).map(Natural::from));
    }
    out
}
