use num_bigint::BigUint;

use super::history::{Move, WalkHistory};
use super::word::{Step, StepWord};
use crate::error::Result;
use crate::limits::Limits;

/// Number of closed walks of `p` walkers, started on `1..=p`, whose step
/// directions follow `word`.
pub fn enumerate_walks(p: usize, word: &StepWord, limits: &Limits) -> Result<BigUint> {
    let mut count: u64 = 0;
    search(p, word, limits, &mut |_| count += 1)?;
    Ok(BigUint::from(count))
}

/// Calls `visit` with the moves of every closed walk following `word`.
pub fn for_each_walk<F: FnMut(&[Move])>(
    p: usize,
    word: &StepWord,
    limits: &Limits,
    mut visit: F,
) -> Result<()> {
    search(p, word, limits, &mut visit)
}

/// Every closed walk following `word`, as validated histories.
pub fn collect_walks(p: usize, word: &StepWord, limits: &Limits) -> Result<Vec<WalkHistory>> {
    let mut out = Vec::new();
    search(p, word, limits, &mut |moves| {
        out.push(WalkHistory::new(p, moves.to_vec()).expect("search emits valid walks"))
    })?;
    Ok(out)
}

struct Search<'a, F> {
    steps: &'a [Step],
    positions: Vec<i64>,
    moves: Vec<Move>,
    // total distance still to travel right / left to get every walker home
    owed_right: i64,
    owed_left: i64,
    visit: &'a mut F,
}

fn search<F: FnMut(&[Move])>(
    p: usize,
    word: &StepWord,
    limits: &Limits,
    visit: &mut F,
) -> Result<()> {
    Limits::check("2n (walk steps)", word.len(), limits.walk_steps)?;
    let mut s = Search {
        steps: word.steps(),
        positions: (1..=p as i64).collect(),
        moves: Vec::with_capacity(word.len()),
        owed_right: 0,
        owed_left: 0,
        visit,
    };
    if p == 0 {
        if word.is_empty() {
            (s.visit)(&[]);
        }
        return Ok(());
    }
    s.descend(0, word.half_len() as i64, word.half_len() as i64);
    Ok(())
}

impl<F: FnMut(&[Move])> Search<'_, F> {
    fn descend(&mut self, t: usize, lefts_left: i64, rights_left: i64) {
        if t == self.steps.len() {
            (self.visit)(&self.moves);
            return;
        }
        let step = self.steps[t];
        let (lefts_left, rights_left) = match step {
            Step::L => (lefts_left - 1, rights_left),
            Step::R => (lefts_left, rights_left - 1),
        };
        let p = self.positions.len();
        for k in 0..p {
            let target = self.positions[k] + step.delta();
            let blocked = match step {
                Step::L => k > 0 && self.positions[k - 1] == target,
                Step::R => k + 1 < p && self.positions[k + 1] == target,
            };
            if blocked {
                continue;
            }
            let home = k as i64 + 1;
            let (old_r, old_l) = (self.owed_right, self.owed_left);
            self.adjust_owed(self.positions[k] - home, -1);
            self.adjust_owed(target - home, 1);
            if self.owed_right <= rights_left && self.owed_left <= lefts_left {
                self.positions[k] = target;
                self.moves.push(Move::new(k, step));
                self.descend(t + 1, lefts_left, rights_left);
                self.moves.pop();
                self.positions[k] -= step.delta();
            }
            self.owed_right = old_r;
            self.owed_left = old_l;
        }
    }

    fn adjust_owed(&mut self, offset: i64, sign: i64) {
        if offset < 0 {
            self.owed_right += sign * -offset;
        } else {
            self.owed_left += sign * offset;
        }
    }
}
