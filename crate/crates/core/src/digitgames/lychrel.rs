use crate::numerics::{is_palindrome, reverse_and_add};
use crate::Natural;

use super::{Resolution, Trajectory};

/// Iteration cap used when none is given. 196 runs far beyond this
/// without producing a palindrome.
pub const DEFAULT_LYCHREL_CAP: usize = 300;

/// Reverse-and-add from `n` until a palindrome appears or `cap` additions
/// have been made. A palindromic start resolves to itself.
pub fn palindrome_trajectory(n: &Natural, cap: usize) -> Trajectory {
    let mut iterates = vec![n.clone()];
    let mut status = Resolution::CapReached;
    if is_palindrome(n) {
        status = Resolution::Resolved(n.clone());
    } else {
        for _ in 0..cap {
            let next = reverse_and_add(iterates.last().expect("nonempty"));
            let done = is_palindrome(&next);
            iterates.push(next);
            if done {
                status = Resolution::Resolved(iterates.last().cloned().expect("nonempty"));
                break;
            }
        }
    }
    Trajectory { start: n.clone(), iterates, status }
}

/// The palindrome reached from each of `0..k`; `None` where the cap ran out.
pub fn a033865_prefix(k: usize, cap: usize) -> Vec<Option<Natural>> {
    (0..k as u64)
        .map(|n| palindrome_trajectory(&Natural::from(n), cap).resolved().cloned())
        .collect()
}
