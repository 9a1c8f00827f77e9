//! Closed `L^n R^n` walks, pairs of standard tableaux with at most `p` rows,
//! and permutations of `1..=n` with no increasing subsequence longer than `p`.
//!
//! Column `k` of the diagram becomes row `k` of each tableau. The boxes
//! above the axis (labels `1..=n`) give `P` directly. The boxes below the
//! axis are read backwards in time, `t -> 2n + 1 - t`, which gives `Q`.
//! Row `k` has the length of walker `k`'s largest leftward excursion.

use super::diagram::{diagram_to_walk, walk_to_diagram, Column, SignedDiagram};
use super::history::WalkHistory;
use crate::combinatorics::{rsk_forward, rsk_inverse, Permutation, StandardTableau, TableauPair};
use crate::error::{Error, Result};

pub fn diagram_to_tableau_pair(diagram: &SignedDiagram) -> Result<TableauPair> {
    let word = diagram.word();
    if !word.is_canonical() {
        return Err(Error::Domain(format!(
            "tableau pairs correspond to L^n R^n walks, not {word}"
        )));
    }
    let last = diagram.len() as u32 + 1;
    let occupied = diagram.columns().iter().take_while(|c| !c.above.is_empty());
    let p_rows: Vec<Vec<u32>> = occupied.clone().map(|c| c.above.clone()).collect();
    let q_rows: Vec<Vec<u32>> = occupied
        .map(|c| c.below.iter().rev().map(|&t| last - t).collect())
        .collect();
    let p = StandardTableau::new(p_rows)?;
    let q = StandardTableau::new(q_rows)?;
    TableauPair::new(p, q)
}

pub fn tableau_pair_to_diagram(pair: &TableauPair, p: usize) -> Result<SignedDiagram> {
    let rows = pair.shape().rows();
    if rows > p {
        return Err(Error::Domain(format!(
            "shape {} has {rows} rows but there are only {p} walkers",
            pair.shape()
        )));
    }
    let last = 2 * pair.p_tableau().size() as u32 + 1;
    let mut columns = vec![Column::default(); p];
    for (k, (up, down)) in pair
        .p_tableau()
        .rows()
        .iter()
        .zip(pair.q_tableau().rows())
        .enumerate()
    {
        columns[k].above = up.clone();
        columns[k].below = down.iter().rev().map(|&s| last - s).collect();
    }
    SignedDiagram::new(columns)
}

/// Permutation attached to a closed `L^n R^n` walk.
pub fn walk_to_permutation(history: &WalkHistory) -> Result<Permutation> {
    let pair = diagram_to_tableau_pair(&walk_to_diagram(history)?)?;
    rsk_inverse(&pair)
}

/// The `L^n R^n` walk of `p` walkers attached to `perm`.
pub fn permutation_to_walk(perm: &Permutation, p: usize) -> Result<WalkHistory> {
    diagram_to_walk(&tableau_pair_to_diagram(&rsk_forward(perm), p)?)
}
