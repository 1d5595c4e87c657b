use hateful::curling::{curling_number, extend_until_one, CurlString, DEFAULT_STEP_CAP};
use hateful::harness::{fixtures, parse_bfile, to_bfile, verify, Status};
use hateful::tsp::{optimal_tour, random_instance, torus_distance, TorusPoint};
use num_bigint::BigInt;
use proptest::prelude::*;

fn brute_force_tour(points: &[TorusPoint]) -> f64 {
    fn permute(rest: &mut Vec<usize>, k: usize, points: &[TorusPoint], best: &mut f64) {
        if k == rest.len() {
            let mut len = torus_distance(&points[0], &points[rest[0]]);
            for w in rest.windows(2) {
                len += torus_distance(&points[w[0]], &points[w[1]]);
            }
            len += torus_distance(&points[*rest.last().unwrap()], &points[0]);
            *best = best.min(len);
            return;
        }
        for i in k..rest.len() {
            rest.swap(k, i);
            permute(rest, k + 1, points, best);
            rest.swap(k, i);
        }
    }
    let mut rest: Vec<usize> = (1..points.len()).collect();
    let mut best = f64::INFINITY;
    permute(&mut rest, 0, points, &mut best);
    best
}

#[test]
fn tour_dp_matches_permutations() {
    for n in 3..=8 {
        for trial in 0..10 {
            let pts = random_instance(n, 7, trial);
            let tour = optimal_tour(&pts).unwrap();
            assert!((tour.length - brute_force_tour(&pts)).abs() < 1e-9, "n={n} trial={trial}");
            let mut order = tour.order.clone();
            order.sort_unstable();
            assert_eq!(order, (0..n).collect::<Vec<_>>());
        }
    }
}

fn naive_curl(s: &[u32]) -> u32 {
    let mut best = 1;
    for l in 1..=s.len() {
        let y = &s[s.len() - l..];
        let mut k = 1;
        while (k + 1) * l <= s.len() && &s[s.len() - (k + 1) * l..s.len() - k * l] == y {
            k += 1;
        }
        best = best.max(k as u32);
    }
    best
}

proptest! {
    #[test]
    fn curling_number_matches_naive(s in prop::collection::vec(1u32..4, 1..40)) {
        prop_assert_eq!(curling_number(&s), naive_curl(&s));
    }

    #[test]
    fn extension_obeys_the_rule(s in prop::collection::vec(2u32..4, 1..16)) {
        let r = extend_until_one(&CurlString::new(s.clone()).unwrap(), DEFAULT_STEP_CAP).unwrap();
        let ext = r.extended.symbols();
        prop_assert_eq!(&ext[..s.len()], &s[..]);
        prop_assert_eq!(ext.len(), r.tail_length + 1);
        prop_assert_eq!(*ext.last().unwrap(), 1);
        for i in s.len()..ext.len() {
            prop_assert_eq!(ext[i], naive_curl(&ext[..i]));
        }
        prop_assert!(ext[s.len()..ext.len() - 1].iter().all(|&c| c != 1));
    }

    #[test]
    fn perturbed_fixture_fails(which in 0usize..12, pos in any::<prop::sample::Index>(), delta in 1i64..1000) {
        let fx = &fixtures()[which];
        let i = pos.index(fx.terms.len());
        let mut gen = fx.clone();
        gen.terms[i] += BigInt::from(delta);
        let r = verify(&gen, fx).unwrap();
        prop_assert_eq!(r.status, Status::Fail);
        prop_assert_eq!(r.first_mismatch.unwrap().index, fx.offset + i as i64);
        prop_assert_eq!(verify(fx, fx).unwrap().status, Status::Pass);
    }

    #[test]
    fn bfile_round_trip(offset in -5i64..50, terms in prop::collection::vec(any::<i128>(), 1..40)) {
        let a = "A000001".parse().unwrap();
        let rec = hateful::harness::SequenceRecord::new(a, offset, terms.into_iter().map(BigInt::from).collect());
        let text = to_bfile(&rec);
        prop_assert!(!text.contains('\r') && !text.ends_with("\n\n"));
        prop_assert_eq!(parse_bfile(&text, a).unwrap(), rec);
    }
}
