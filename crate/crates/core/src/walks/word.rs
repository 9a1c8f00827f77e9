use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{validation, Error, Result};

/// Direction of a single move.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Step {
    L,
    R,
}

impl Step {
    pub fn opposite(self) -> Step {
        match self {
            Step::L => Step::R,
            Step::R => Step::L,
        }
    }

    /// Change in lattice position.
    pub fn delta(self) -> i64 {
        match self {
            Step::L => -1,
            Step::R => 1,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Step::L => 'L',
            Step::R => 'R',
        }
    }
}

/// A balanced word over `{L, R}`: `n` of each letter, length `2n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct StepWord(Vec<Step>);

impl StepWord {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        let lefts = steps.iter().filter(|&&s| s == Step::L).count();
        if 2 * lefts != steps.len() {
            return Err(validation(format!(
                "step word has {lefts} L and {} R; a closed walk needs equal counts",
                steps.len() - lefts
            )));
        }
        Ok(StepWord(steps))
    }

    /// `L^n R^n`.
    pub fn canonical(n: usize) -> Self {
        let mut steps = vec![Step::L; n];
        steps.resize(2 * n, Step::R);
        StepWord(steps)
    }

    /// All `C(2n, n)` balanced words of length `2n`, in lexicographic order.
    pub fn all_balanced(n: usize) -> Vec<StepWord> {
        let mut out = Vec::new();
        let mut buf = Vec::with_capacity(2 * n);
        fn rec(buf: &mut Vec<Step>, l: usize, r: usize, out: &mut Vec<StepWord>) {
            if l == 0 && r == 0 {
                out.push(StepWord(buf.clone()));
                return;
            }
            for (step, left) in [(Step::L, l), (Step::R, r)] {
                if left > 0 {
                    buf.push(step);
                    if step == Step::L {
                        rec(buf, l - 1, r, out);
                    } else {
                        rec(buf, l, r - 1, out);
                    }
                    buf.pop();
                }
            }
        }
        rec(&mut buf, n, n, &mut out);
        out
    }

    pub fn steps(&self) -> &[Step] {
        &self.0
    }

    /// Number of steps, `2n`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `n`, the number of `L` (and of `R`) steps.
    pub fn half_len(&self) -> usize {
        self.0.len() / 2
    }

    pub fn is_canonical(&self) -> bool {
        let n = self.half_len();
        self.0[..n].iter().all(|&s| s == Step::L)
    }

    /// Interchanges letters `i` and `i + 1` (one-based `i`).
    pub(crate) fn swapped(&self, i: usize) -> StepWord {
        let mut steps = self.0.clone();
        steps.swap(i - 1, i);
        StepWord(steps)
    }
}

impl FromStr for StepWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let steps = s
            .chars()
            .map(|c| match c.to_ascii_uppercase() {
                'L' => Ok(Step::L),
                'R' => Ok(Step::R),
                other => Err(validation(format!("step word letter {other:?} is not L or R"))),
            })
            .collect::<Result<Vec<_>>>()?;
        StepWord::new(steps)
    }
}

impl TryFrom<String> for StepWord {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<StepWord> for String {
    fn from(w: StepWord) -> Self {
        w.to_string()
    }
}

impl fmt::Display for StepWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|s| write!(f, "{}", s.as_char()))
    }
}
