use serde::{Deserialize, Serialize};

use super::word::{Step, StepWord};
use crate::error::{validation, Error, Result};

/// One tick: which walker moved, and in which direction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Move {
    pub walker: usize,
    pub step: Step,
}

impl Move {
    pub fn new(walker: usize, step: Step) -> Self {
        Move { walker, step }
    }
}

/// A sequence of single-walker moves that never puts two walkers on one site.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "WireHistory", into = "WireHistory")]
pub struct WalkHistory {
    initial: Vec<i64>,
    moves: Vec<Move>,
}

impl WalkHistory {
    /// History of `p` walkers starting on sites `1..=p`.
    pub fn new(p: usize, moves: Vec<Move>) -> Result<Self> {
        WalkHistory::with_initial((1..=p as i64).collect(), moves)
    }

    pub fn with_initial(initial: Vec<i64>, moves: Vec<Move>) -> Result<Self> {
        if initial.windows(2).any(|w| w[0] >= w[1]) {
            return Err(validation("initial positions must be strictly increasing"));
        }
        let mut positions = initial.clone();
        for (t, m) in moves.iter().enumerate() {
            if m.walker >= positions.len() {
                return Err(validation(format!(
                    "step {}: walker {} does not exist (p = {})",
                    t + 1,
                    m.walker + 1,
                    positions.len()
                )));
            }
            positions[m.walker] += m.step.delta();
            let x = positions[m.walker];
            if let Some(other) = positions
                .iter()
                .enumerate()
                .position(|(k, &y)| k != m.walker && y == x)
            {
                return Err(validation(format!(
                    "step {}: walker {} moves onto site {x} occupied by walker {}",
                    t + 1,
                    m.walker + 1,
                    other + 1
                )));
            }
        }
        Ok(WalkHistory { initial, moves })
    }

    pub fn p(&self) -> usize {
        self.initial.len()
    }

    pub fn initial_positions(&self) -> &[i64] {
        &self.initial
    }

    pub fn has_default_start(&self) -> bool {
        self.initial.iter().zip(1..).all(|(&x, k)| x == k)
    }

    pub fn moves(&self) -> &[Move] {
        &self.moves
    }

    /// Number of ticks.
    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    /// Positions after the first `t` moves.
    pub fn positions_at(&self, t: usize) -> Vec<i64> {
        let mut positions = self.initial.clone();
        for m in &self.moves[..t] {
            positions[m.walker] += m.step.delta();
        }
        positions
    }

    pub fn is_closed(&self) -> bool {
        self.positions_at(self.moves.len()) == self.initial
    }

    /// Direction sequence of the moves.
    pub fn directions(&self) -> Vec<Step> {
        self.moves.iter().map(|m| m.step).collect()
    }

    /// The step word, when the direction sequence is balanced.
    pub fn word(&self) -> Result<StepWord> {
        StepWord::new(self.directions())
    }

    /// Largest leftward excursion of each walker from its start.
    pub fn max_left_displacements(&self) -> Vec<i64> {
        let mut positions = self.initial.clone();
        let mut best = vec![0; positions.len()];
        for m in &self.moves {
            positions[m.walker] += m.step.delta();
            best[m.walker] = best[m.walker].max(self.initial[m.walker] - positions[m.walker]);
        }
        best
    }
}

#[derive(Serialize, Deserialize)]
struct WireHistory {
    p: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    initial: Option<Vec<i64>>,
    word: String,
    moves: Vec<(usize, Step)>,
}

impl From<WalkHistory> for WireHistory {
    fn from(h: WalkHistory) -> Self {
        WireHistory {
            p: h.p(),
            initial: (!h.has_default_start()).then(|| h.initial.clone()),
            word: h.directions().iter().map(|s| s.as_char()).collect(),
            moves: h.moves.iter().map(|m| (m.walker + 1, m.step)).collect(),
        }
    }
}

impl TryFrom<WireHistory> for WalkHistory {
    type Error = Error;

    fn try_from(w: WireHistory) -> Result<Self> {
        let moves = w
            .moves
            .iter()
            .map(|&(k, step)| {
                if k == 0 {
                    Err(validation("walker numbers in JSON start at 1"))
                } else {
                    Ok(Move::new(k - 1, step))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        let initial = w.initial.unwrap_or_else(|| (1..=w.p as i64).collect());
        if initial.len() != w.p {
            return Err(validation("initial positions do not match p"));
        }
        let h = WalkHistory::with_initial(initial, moves)?;
        let word: String = h.directions().iter().map(|s| s.as_char()).collect();
        if word != w.word.to_ascii_uppercase() {
            return Err(validation(format!(
                "word {:?} does not match move directions {word:?}",
                w.word
            )));
        }
        Ok(h)
    }
}
