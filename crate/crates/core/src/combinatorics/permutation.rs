use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{validation, Result};

/// A permutation of `1..=n` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Permutation(Vec<u32>);

impl Permutation {
    /// Checks that `entries` is a rearrangement of `1..=entries.len()`.
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        let n = entries.len();
        let mut seen = vec![false; n];
        for (i, &v) in entries.iter().enumerate() {
            if v == 0 || v as usize > n {
                return Err(validation(format!(
                    "entry {v} at position {} is outside 1..={n}",
                    i + 1
                )));
            }
            if std::mem::replace(&mut seen[v as usize - 1], true) {
                return Err(validation(format!("entry {v} appears more than once")));
            }
        }
        Ok(Permutation(entries))
    }


    pub fn identity(n: usize) -> Self {
        Permutation((1..=n as u32).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<u32> {
        self.0
    }

    /// Advances to the lexicographically next permutation; returns `false`
    /// (leaving `self` unchanged) at the last one.
    pub fn next_lexicographic(&mut self) -> bool {
        let v = &mut self.0;
        let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
            return false;
        };
        let pivot = i - 1;
        let j = (i..v.len()).rev().find(|&j| v[j] > v[pivot]).unwrap();
        v.swap(pivot, j);
        v[i..].reverse();
        true
    }
}

impl TryFrom<Vec<u32>> for Permutation {
    type Error = crate::Error;

    fn try_from(entries: Vec<u32>) -> Result<Self> {
        Permutation::new(entries)
    }
}

impl From<Permutation> for Vec<u32> {
    fn from(p: Permutation) -> Self {
        p.0
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

/// Length of the longest strictly increasing subsequence.
///
/// Patience sorting: each value goes on the leftmost pile whose top is not
/// smaller than it, and the number of piles is the answer. `O(n log n)`.
pub fn lis_length(perm: &Permutation) -> usize {
    lis_of_slice(perm.entries())
}

pub(crate) fn lis_of_slice(values: &[u32]) -> usize {
    let mut tops: Vec<u32> = Vec::new();
    for &v in values {
        let pile = tops.partition_point(|&t| t < v);
        if pile == tops.len() {
            tops.push(v);
        } else {
            tops[pile] = v;
        }
    }
    tops.len()
}

/// Uniform random permutation of `1..=n` from a seeded ChaCha8 stream.
pub fn random_permutation(n: usize, seed: u64) -> Permutation {
    random_permutation_with(n, &mut ChaCha8Rng::seed_from_u64(seed))
}

/// Uniform random permutation drawn with a Fisher-Yates shuffle.
pub fn random_permutation_with<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Permutation {
    let mut entries: Vec<u32> = (1..=n as u32).collect();
    entries.shuffle(rng);
    Permutation(entries)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn perm(v: &[u32]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    // Exponential reference: try every subset.
    fn lis_bruteforce(v: &[u32]) -> usize {
        let n = v.len();
        (0u32..1 << n)
            .filter(|mask| {
                let sub: Vec<u32> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| v[i]).collect();
                sub.windows(2).all(|w| w[0] < w[1])
            })
            .map(|mask| mask.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn lis_examples() {
        assert_eq!(lis_length(&perm(&[1, 2, 3])), 3);
        assert_eq!(lis_length(&perm(&[3, 2, 1])), 1);
        assert_eq!(lis_length(&perm(&[3, 1, 2])), 2);
        assert_eq!(lis_length(&perm(&[])), 0);
    }

    #[test]
    fn malformed_permutations_are_rejected() {
        assert!(Permutation::new(vec![1, 1, 2]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
        assert!(Permutation::new(vec![1, 4, 2]).is_err());
        assert!(serde_json::from_str::<Permutation>("[2,2]").is_err());
    }

    #[test]
    fn lis_matches_bruteforce_exhaustively_up_to_8() {
        for n in 0..=8 {
            let mut p = Permutation::identity(n);
            loop {
                assert_eq!(lis_length(&p), lis_bruteforce(p.entries()), "{p}");
                if !p.next_lexicographic() {
                    break;
                }
            }
        }
    }

    #[test]
    fn lexicographic_walk_visits_n_factorial() {
        let mut p = Permutation::identity(5);
        let mut count = 1;
        while p.next_lexicographic() {
            count += 1;
        }
        assert_eq!(count, 120);
        assert_eq!(p.entries(), &[5, 4, 3, 2, 1]);
    }

    #[test]
    fn random_permutation_basics() {
        assert_eq!(random_permutation(1, 99).entries(), &[1]);
        assert_eq!(random_permutation(5, 7), random_permutation(5, 7));
        assert!(Permutation::new(random_permutation(50, 3).into_entries()).is_ok());
    }

    #[test]
    fn random_permutation_is_uniform_on_s3() {
        let draws = 60_000;
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        let mut counts = std::collections::BTreeMap::new();
        for _ in 0..draws {
            *counts.entry(random_permutation_with(3, &mut rng)).or_insert(0usize) += 1;
        }
        assert_eq!(counts.len(), 6);
        let expected = draws as f64 / 6.0;
        let sigma = (draws as f64 * (1.0 / 6.0) * (5.0 / 6.0)).sqrt();
        let mut chi2 = 0.0;
        for &c in counts.values() {
            assert!((c as f64 - expected).abs() < 3.0 * sigma, "count {c}");
            chi2 += (c as f64 - expected).powi(2) / expected;
        }
        // 5 degrees of freedom, 99.9% quantile
        assert!(chi2 < 20.52, "chi2 = {chi2}");
    }

    proptest! {
        #[test]
        fn lis_matches_bruteforce_on_random_samples(seed in any::<u64>(), n in 0usize..=12) {
            let p = random_permutation(n, seed);
            prop_assert_eq!(lis_length(&p), lis_bruteforce(p.entries()));
        }
    }
}
