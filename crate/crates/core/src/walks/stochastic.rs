use rand::Rng;
use serde::{Deserialize, Serialize};

use super::word::Step;
use crate::error::{validation, Result};

/// Left/right step probabilities of the random turns dynamics.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ModelParams {
    w_left: f64,
    w_right: f64,
}

impl ModelParams {
    pub fn new(w_left: f64, w_right: f64) -> Result<Self> {
        let ok = (0.0..=1.0).contains(&w_left)
            && (0.0..=1.0).contains(&w_right)
            && (w_left + w_right - 1.0).abs() < 1e-12;
        if !ok {
            return Err(validation(format!(
                "step probabilities ({w_left}, {w_right}) must lie in [0, 1] and sum to 1"
            )));
        }
        Ok(ModelParams { w_left, w_right })
    }

    pub fn symmetric() -> Self {
        ModelParams {
            w_left: 0.5,
            w_right: 0.5,
        }
    }

    pub fn w_left(&self) -> f64 {
        self.w_left
    }

    pub fn w_right(&self) -> f64 {
        self.w_right
    }
}

/// One tick of the random turns dynamics; returns the walker that moved and
/// its direction.
///
/// A walker is chosen uniformly and draws a direction. If the target site is
/// taken it goes the other way; if both sides are taken another walker is
/// drawn.
pub fn stochastic_step<R: Rng + ?Sized>(
    positions: &mut [i64],
    params: &ModelParams,
    rng: &mut R,
) -> Result<(usize, Step)> {
    if positions.is_empty() {
        return Err(validation("no walkers to move"));
    }
    for (i, x) in positions.iter().enumerate() {
        if positions[i + 1..].contains(x) {
            return Err(validation(format!("two walkers share site {x}")));
        }
    }
    loop {
        let k = rng.gen_range(0..positions.len());
        let drawn = if rng.gen::<f64>() < params.w_left {
            Step::L
        } else {
            Step::R
        };
        for step in [drawn, drawn.opposite()] {
            let target = positions[k] + step.delta();
            if !positions.contains(&target) {
                positions[k] = target;
                return Ok((k, step));
            }
        }
    }
}
