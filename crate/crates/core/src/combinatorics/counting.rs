use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::permutation::{lis_length, Permutation};
use super::tableau::{partitions_iter, syt_count};
use crate::error::Result;
use crate::limits::Limits;

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigUint::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// Counts permutations of `1..=n` with longest increasing subsequence at
/// most `p` by visiting all `n!` of them.
pub fn f_np_bruteforce(n: usize, p: usize, limits: &Limits) -> Result<BigUint> {
    Limits::check("n (brute force)", n, limits.bruteforce_n)?;
    let mut perm = Permutation::identity(n);
    let mut count: u64 = 0;
    loop {
        if lis_length(&perm) <= p {
            count += 1;
        }
        if !perm.next_lexicographic() {
            break;
        }
    }
    Ok(BigUint::from(count))
}

/// `f(n, p)` as the sum of squared tableau counts over shapes of `n` with at
/// most `p` rows.
pub fn f_np_via_shapes(n: usize, p: usize) -> BigUint {
    partitions_iter(n, p)
        .map(|s| {
            let c = syt_count(&s);
            &c * &c
        })
        .sum()
}
