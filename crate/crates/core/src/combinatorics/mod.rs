//! Permutations, increasing subsequences, standard Young tableaux and the
//! counting function `f(n, p)`.
//!
//! Tableaux use the English convention: rows are listed top to bottom,
//! entries increase left to right along rows and top to bottom down columns.

mod counting;
mod permutation;
mod rsk;
mod tableau;

pub use counting::{f_np_bruteforce, f_np_via_shapes, factorial, binomial};
pub use permutation::{lis_length, random_permutation, random_permutation_with, Permutation};
pub use rsk::{rsk_forward, rsk_inverse};
pub use tableau::{
    enumerate_syt, partitions_iter, syt_count, Partitions, Shape, StandardTableau, TableauPair,
};
