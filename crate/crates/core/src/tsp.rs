//! Optimal tours through random points on the unit flat torus, in units
//! of eels (mean distance from a uniform point of the unit square to its
//! centre).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

/// Largest instance the exact solver accepts by default.
pub const DEFAULT_EXACT_BOUND: usize = 13;
/// Hard limit: the subset table has `2^(n-1) · (n-1)` entries.
const MAX_EXACT_POINTS: usize = 20;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum TspError {
    #[error("instance of {n} points exceeds the exact-solver bound of {bound}")]
    TooManyPoints { n: usize, bound: usize },
    #[error("an instance needs at least one point")]
    NoPoints,
    #[error("coordinate {0} outside [0, 1)")]
    Coordinate(f64),
    #[error("an estimate needs at least 2 trials, got {0}")]
    TooFewTrials(usize),
}

/// `(√2 + ln(1 + √2)) / 6`.
pub fn eel_constant() -> f64 {
    let r2 = std::f64::consts::SQRT_2;
    (r2 + (1.0 + r2).ln()) / 6.0
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TorusPoint {
    x: f64,
    y: f64,
}

impl TorusPoint {
    pub fn new(x: f64, y: f64) -> Result<Self, TspError> {
        for c in [x, y] {
            if !(0.0..1.0).contains(&c) {
                return Err(TspError::Coordinate(c));
            }
        }
        Ok(TorusPoint { x, y })
    }

    /// Reduces both coordinates mod 1.
    pub fn wrapped(x: f64, y: f64) -> Self {
        let w = |c: f64| {
            let r = c.rem_euclid(1.0);
            // rem_euclid can round up to exactly 1.0 for tiny negatives
            if r >= 1.0 { 0.0 } else { r }
        };
        TorusPoint { x: w(x), y: w(y) }
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn y(&self) -> f64 {
        self.y
    }
}

pub fn torus_distance(p: &TorusPoint, q: &TorusPoint) -> f64 {
    let axis = |a: f64, b: f64| {
        let d = (a - b).abs();
        d.min(1.0 - d)
    };
    axis(p.x, q.x).hypot(axis(p.y, q.y))
}

/// An optimal closed tour: `order` starts at point 0.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Tour {
    pub length: f64,
    pub order: Vec<usize>,
}

pub fn optimal_tour_length(points: &[TorusPoint]) -> Result<f64, TspError> {
    optimal_tour_bounded(points, DEFAULT_EXACT_BOUND).map(|t| t.length)
}

pub fn optimal_tour(points: &[TorusPoint]) -> Result<Tour, TspError> {
    optimal_tour_bounded(points, DEFAULT_EXACT_BOUND)
}

/// Held-Karp over subsets of points `1..n`, with point 0 fixed as the start.
pub fn optimal_tour_bounded(points: &[TorusPoint], bound: usize) -> Result<Tour, TspError> {
    let n = points.len();
    let bound = bound.min(MAX_EXACT_POINTS);
    if n == 0 {
        return Err(TspError::NoPoints);
    }
    if n > bound {
        return Err(TspError::TooManyPoints { n, bound });
    }
    match n {
        1 => return Ok(Tour { length: 0.0, order: vec![0] }),
        2 => return Ok(Tour { length: 2.0 * torus_distance(&points[0], &points[1]), order: vec![0, 1] }),
        _ => {}
    }
    let dist: Vec<Vec<f64>> = points.iter().map(|p| points.iter().map(|q| torus_distance(p, q)).collect()).collect();
    // cities 1..n map to bits 0..m
    let m = n - 1;
    let full = (1usize << m) - 1;
    // best[mask * m + j]: shortest path 0 → (all of mask) ending at city j+1
    let mut best = vec![f64::INFINITY; (1 << m) * m];
    let mut parent = vec![u8::MAX; (1 << m) * m];
    for j in 0..m {
        best[(1 << j) * m + j] = dist[0][j + 1];
    }
    for mask in 1..=full {
        for j in 0..m {
            if mask & (1 << j) == 0 {
                continue;
            }
            let here = best[mask * m + j];
            if !here.is_finite() {
                continue;
            }
            for k in 0..m {
                if mask & (1 << k) != 0 {
                    continue;
                }
                let next = mask | (1 << k);
                let cand = here + dist[j + 1][k + 1];
                if cand < best[next * m + k] {
                    best[next * m + k] = cand;
                    parent[next * m + k] = j as u8;
                }
            }
        }
    }
    let (mut last, length) = (0..m)
        .map(|j| (j, best[full * m + j] + dist[j + 1][0]))
        .fold((0, f64::INFINITY), |acc, c| if c.1 < acc.1 { c } else { acc });
    let mut order = Vec::with_capacity(n);
    let mut mask = full;
    while mask != 0 {
        order.push(last + 1);
        let p = parent[mask * m + last];
        mask &= !(1 << last);
        if mask != 0 {
            last = p as usize;
        }
    }
    order.push(0);
    order.reverse();
    Ok(Tour { length, order })
}

/// Uniform instance number `trial` of the stream keyed by `seed`.
///
/// Each trial owns a ChaCha stream (`seed` as key, `trial` as stream id),
/// drawn as `x0, y0, x1, y1, ...`, so any subset of trials can be
/// regenerated in any order on any thread.
pub fn random_instance(n: usize, seed: u64, trial: u64) -> Vec<TorusPoint> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    (0..n)
        .map(|_| {
            let x: f64 = rng.random();
            let y: f64 = rng.random();
            TorusPoint { x, y }
        })
        .collect()
}

/// Monte Carlo estimate of the expected optimal tour length, in eels.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Estimate {
    pub n: usize,
    pub trials: usize,
    pub seed: u64,
    pub mean_eels: f64,
    pub std_error_eels: f64,
    /// `mean_eels · eel_constant()`.
    pub mean_absolute: f64,
}

/// Sum with a fixed binary tree shape, independent of thread count.
fn pairwise_sum(v: &[f64]) -> f64 {
    if v.len() <= 8 {
        return v.iter().sum();
    }
    let (a, b) = v.split_at(v.len() / 2);
    pairwise_sum(a) + pairwise_sum(b)
}

pub fn estimate_l(n: usize, trials: usize, seed: u64) -> Result<Estimate, TspError> {
    if trials < 2 {
        return Err(TspError::TooFewTrials(trials));
    }
    if n == 0 {
        return Err(TspError::NoPoints);
    }
    if n > DEFAULT_EXACT_BOUND {
        return Err(TspError::TooManyPoints { n, bound: DEFAULT_EXACT_BOUND });
    }
    let eel = eel_constant();
    let lengths: Vec<f64> = (0..trials as u64)
        .into_par_iter()
        .map(|t| optimal_tour_length(&random_instance(n, seed, t)).map(|l| l / eel))
        .collect::<Result<_, _>>()?;
    let count = trials as f64;
    let mean = pairwise_sum(&lengths) / count;
    let squares: Vec<f64> = lengths.iter().map(|l| (l - mean) * (l - mean)).collect();
    let variance = pairwise_sum(&squares) / (count - 1.0);
    Ok(Estimate {
        n,
        trials,
        seed,
        mean_eels: mean,
        std_error_eels: (variance / count).sqrt(),
        mean_absolute: mean * eel,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(x: f64, y: f64) -> TorusPoint {
        TorusPoint::new(x, y).unwrap()
    }

    #[test]
    fn eel() {
        let e = eel_constant();
        assert!((e - 0.382597858232).abs() < 1e-12);
        let r2 = std::f64::consts::SQRT_2;
        assert!((6.0 * e - r2 - (1.0 + r2).ln()).abs() < 1e-12);
        assert!(e > 0.38 && e < 0.39);
    }

    #[test]
    fn distances() {
        assert!((torus_distance(&pt(0.0, 0.0), &pt(0.5, 0.5)) - 0.5f64.sqrt()).abs() < 1e-15);
        assert!((torus_distance(&pt(0.1, 0.0), &pt(0.9, 0.0)) - 0.2).abs() < 1e-12);
        assert_eq!(torus_distance(&pt(0.3, 0.7), &pt(0.3, 0.7)), 0.0);
    }

    #[test]
    fn point_validation() {
        assert!(TorusPoint::new(1.0, 0.5).is_err());
        assert!(TorusPoint::new(-0.1, 0.5).is_err());
        assert_eq!(TorusPoint::wrapped(1.25, -0.25), pt(0.25, 0.75));
        assert_eq!(TorusPoint::wrapped(-1e-20, 0.0).x(), 0.0);
    }

    #[test]
    fn tiny_instances() {
        assert_eq!(optimal_tour_length(&[pt(0.2, 0.2)]).unwrap(), 0.0);
        assert!((optimal_tour_length(&[pt(0.0, 0.0), pt(0.25, 0.0)]).unwrap() - 0.5).abs() < 1e-15);
        let tri = [pt(0.1, 0.1), pt(0.4, 0.2), pt(0.2, 0.8)];
        let perimeter = torus_distance(&tri[0], &tri[1]) + torus_distance(&tri[1], &tri[2]) + torus_distance(&tri[2], &tri[0]);
        assert!((optimal_tour_length(&tri).unwrap() - perimeter).abs() < 1e-15);
        assert_eq!(optimal_tour_length(&[]), Err(TspError::NoPoints));
        let many = random_instance(14, 1, 0);
        assert_eq!(optimal_tour_length(&many), Err(TspError::TooManyPoints { n: 14, bound: 13 }));
    }

    #[test]
    fn tour_order_realizes_length() {
        let pts = random_instance(9, 3, 5);
        let tour = optimal_tour(&pts).unwrap();
        let mut sorted = tour.order.clone();
        sorted.sort();
        assert_eq!(sorted, (0..9).collect::<Vec<_>>());
        assert_eq!(tour.order[0], 0);
        let walked: f64 = (0..9).map(|i| torus_distance(&pts[tour.order[i]], &pts[tour.order[(i + 1) % 9]])).sum();
        assert!((walked - tour.length).abs() < 1e-12);
    }

    #[test]
    fn estimates_are_reproducible() {
        let a = estimate_l(4, 500, 42).unwrap();
        let b = rayon::ThreadPoolBuilder::new().num_threads(3).build().unwrap().install(|| estimate_l(4, 500, 42).unwrap());
        assert_eq!(a, b);
        assert_ne!(a, estimate_l(4, 500, 43).unwrap());
        assert_eq!(estimate_l(4, 1, 0), Err(TspError::TooFewTrials(1)));
    }

    #[test]
    fn instances_are_keyed_by_trial() {
        assert_eq!(random_instance(5, 9, 17), random_instance(5, 9, 17));
        assert_ne!(random_instance(5, 9, 17), random_instance(5, 9, 18));
        // a longer instance extends the shorter one from the same stream
        assert_eq!(random_instance(5, 9, 17)[..], random_instance(7, 9, 17)[..5]);
    }
}
