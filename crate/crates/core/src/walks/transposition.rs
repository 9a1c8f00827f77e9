//! Adjacent-step transpositions `s_i` acting on (diagram, word) pairs.
//!
//! `s_i` interchanges steps `i` and `i + 1`. When the two boxes belong to
//! different walkers the moves simply trade ticks. When one walker makes
//! both moves, it now makes them in the opposite order, and its first move
//! may run into a neighbour. In that case the pair of moves is handed to
//! the neighbour on the blocked side, then to the next one, until a walker
//! that is free to make the move is found. Walkers `1` and `p` are never
//! blocked on their outer side, so the search always ends.

use super::diagram::SignedDiagram;
use super::word::{Step, StepWord};
use crate::error::{validation, Error, Result};

/// Applies `s_i` (one-based `i`, `1 <= i < 2n`) to a diagram and its word.
///
/// Equal letters at `i` and `i + 1` leave both unchanged.
pub fn apply_transposition(
    diagram: &SignedDiagram,
    word: &StepWord,
    i: usize,
) -> Result<(SignedDiagram, StepWord)> {
    if diagram.word() != *word {
        return Err(validation(format!(
            "word {word} does not match the diagram's word {}",
            diagram.word()
        )));
    }
    if i == 0 || i >= word.len() {
        return Err(validation(format!(
            "transposition index {i} outside 1..{}",
            word.len()
        )));
    }
    let steps = word.steps();
    if steps[i - 1] == steps[i] {
        return Ok((diagram.clone(), word.clone()));
    }
    let first = i as u32;
    let second = first + 1;
    let locations = diagram.locations();
    let (col_a, side_a) = locations[i - 1];
    let (col_b, side_b) = locations[i];
    let mut columns = diagram.columns().to_vec();

    if col_a != col_b {
        relabel(columns[col_a].side_mut(side_a), first, second);
        relabel(columns[col_b].side_mut(side_b), second, first);
    } else {
        // the walker's first move becomes side_b's direction
        let heights = diagram.heights_before(first);
        let target = free_walker(&heights, col_a, side_b.step());
        let column = &mut columns[col_a];
        column.side_mut(side_a).retain(|&t| t != first);
        column.side_mut(side_b).retain(|&t| t != second);
        let column = &mut columns[target];
        insert_sorted(column.side_mut(side_b), first);
        insert_sorted(column.side_mut(side_a), second);
    }
    let out = SignedDiagram::new(columns).map_err(|e| {
        Error::Domain(format!(
            "s_{i} produced an inadmissible diagram from {diagram:?}: {e}"
        ))
    })?;
    Ok((out, word.swapped(i)))
}

/// Nearest walker at or beyond `start`, looking in the direction of `step`,
/// that can make `step` given the column heights (`above - below`).
fn free_walker(heights: &[i64], start: usize, step: Step) -> usize {
    let p = heights.len();
    match step {
        // moving right lowers the height; column k+1 must stay at or below it
        Step::R => (start..p)
            .find(|&k| k + 1 == p || heights[k] > heights[k + 1])
            .expect("the last walker can always move right"),
        Step::L => (0..=start)
            .rev()
            .find(|&k| k == 0 || heights[k] < heights[k - 1])
            .expect("the first walker can always move left"),
    }
}

fn relabel(labels: &mut [u32], from: u32, to: u32) {
    let slot = labels.iter_mut().find(|t| **t == from).expect("label present");
    *slot = to;
}

fn insert_sorted(labels: &mut Vec<u32>, label: u32) {
    let pos = labels.partition_point(|&t| t < label);
    labels.insert(pos, label);
}

/// Transposition indices carrying `word` to `L^n R^n`.
///
/// The `L`s are moved into place from left to right; each one is bubbled
/// leftward past the `R`s before it, one adjacent swap at a time.
pub fn word_reduction(word: &StepWord) -> Vec<usize> {
    let mut steps = word.steps().to_vec();
    let mut out = Vec::new();
    let mut placed = 0;
    for j in 0..steps.len() {
        if steps[j] != Step::L {
            continue;
        }
        for pos in (placed..j).rev() {
            steps.swap(pos, pos + 1);
            out.push(pos + 1);
        }
        placed += 1;
    }
    out
}

/// Applies `word_reduction(word)` to a diagram, giving an `L^n R^n` diagram.
pub fn apply_reduction(diagram: &SignedDiagram, word: &StepWord) -> Result<(SignedDiagram, StepWord)> {
    word_reduction(word)
        .into_iter()
        .try_fold((diagram.clone(), word.clone()), |(d, w), i| {
            apply_transposition(&d, &w, i)
        })
}
