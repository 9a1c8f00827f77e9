use serde::{Deserialize, Serialize};

use super::history::{Move, WalkHistory};
use super::word::{Step, StepWord};
use crate::error::{validation, Error, Result};

/// Which side of the axis a box sits on. `L` moves go above, `R` below.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Above,
    Below,
}

impl Side {
    pub fn of(step: Step) -> Side {
        match step {
            Step::L => Side::Above,
            Step::R => Side::Below,
        }
    }

    pub fn step(self) -> Step {
        match self {
            Side::Above => Step::L,
            Side::Below => Step::R,
        }
    }
}

/// Boxes of one walker. Both lists hold tick labels in increasing order,
/// i.e. increasing away from the axis.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Column {
    pub above: Vec<u32>,
    pub below: Vec<u32>,
}

impl Column {
    pub(crate) fn side_mut(&mut self, side: Side) -> &mut Vec<u32> {
        match side {
            Side::Above => &mut self.above,
            Side::Below => &mut self.below,
        }
    }
}

/// Labelled box diagram of a closed walk: box `t` sits in column `k` when
/// walker `k` moves at tick `t`.
///
/// Construction checks that every label `1..=2n` is used once, that labels
/// increase away from the axis, that each column has as many boxes below as
/// above, and admissibility: after every tick, `above - below` (counting
/// boxes with labels up to that tick) is weakly decreasing across columns.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "WireDiagram", into = "WireDiagram")]
pub struct SignedDiagram {
    columns: Vec<Column>,
}

#[derive(Serialize, Deserialize)]
struct WireDiagram {
    columns: Vec<Column>,
}

impl TryFrom<WireDiagram> for SignedDiagram {
    type Error = Error;

    fn try_from(w: WireDiagram) -> Result<Self> {
        SignedDiagram::new(w.columns)
    }
}

impl From<SignedDiagram> for WireDiagram {
    fn from(d: SignedDiagram) -> Self {
        WireDiagram { columns: d.columns }
    }
}

impl SignedDiagram {
    pub fn new(columns: Vec<Column>) -> Result<Self> {
        let total: usize = columns.iter().map(|c| c.above.len() + c.below.len()).sum();
        let mut owner = vec![None; total];
        for (k, col) in columns.iter().enumerate() {
            for (side, labels) in [(Side::Above, &col.above), (Side::Below, &col.below)] {
                if labels.windows(2).any(|w| w[0] >= w[1]) {
                    return Err(validation(format!(
                        "column {}: labels {} the axis must increase away from it",
                        k + 1,
                        if side == Side::Above { "above" } else { "below" }
                    )));
                }
                for &t in labels {
                    if t == 0 || t as usize > total || owner[t as usize - 1].is_some() {
                        return Err(validation(format!(
                            "labels must use each of 1..={total} exactly once (bad label {t})"
                        )));
                    }
                    owner[t as usize - 1] = Some((k, side));
                }
            }
            if col.above.len() != col.below.len() {
                return Err(validation(format!(
                    "column {} has {} boxes above and {} below; the walker does not return",
                    k + 1,
                    col.above.len(),
                    col.below.len()
                )));
            }
        }
        let owner: Vec<(usize, Side)> = owner.into_iter().map(Option::unwrap).collect();
        first_inadmissible(columns.len(), &owner)
            .map_or(Ok(()), |(t, k)| {
                Err(validation(format!(
                    "after box {t}, column {} has smaller above-minus-below count than column {}",
                    k + 1,
                    k + 2
                )))
            })?;
        Ok(SignedDiagram { columns })
    }

    pub fn columns(&self) -> &[Column] {
        &self.columns
    }

    /// Number of walkers.
    pub fn p(&self) -> usize {
        self.columns.len()
    }

    /// Number of boxes, `2n`.
    pub fn len(&self) -> usize {
        self.columns.iter().map(|c| c.above.len() + c.below.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Column and side of each label, indexed by `label - 1`.
    pub fn locations(&self) -> Vec<(usize, Side)> {
        let mut out = vec![(0, Side::Above); self.len()];
        for (k, col) in self.columns.iter().enumerate() {
            for &t in &col.above {
                out[t as usize - 1] = (k, Side::Above);
            }
            for &t in &col.below {
                out[t as usize - 1] = (k, Side::Below);
            }
        }
        out
    }

    pub fn word(&self) -> StepWord {
        StepWord::new(self.locations().iter().map(|&(_, s)| s.step()).collect())
            .expect("columns are balanced")
    }

    /// `above - below` per column, counting labels strictly before `tick`.
    pub fn heights_before(&self, tick: u32) -> Vec<i64> {
        self.columns
            .iter()
            .map(|c| {
                let up = c.above.iter().filter(|&&t| t < tick).count() as i64;
                let down = c.below.iter().filter(|&&t| t < tick).count() as i64;
                up - down
            })
            .collect()
    }
}

/// First tick `t` (one-based) and column `k` with `height[k] < height[k + 1]`.
fn first_inadmissible(p: usize, owner: &[(usize, Side)]) -> Option<(usize, usize)> {
    let mut height = vec![0i64; p];
    for (t, &(k, side)) in owner.iter().enumerate() {
        height[k] += if side == Side::Above { 1 } else { -1 };
        if k > 0 && height[k - 1] < height[k] {
            return Some((t + 1, k - 1));
        }
        if k + 1 < p && height[k] < height[k + 1] {
            return Some((t + 1, k));
        }
    }
    None
}

/// Box diagram of a closed history that starts on sites `1..=p`.
pub fn walk_to_diagram(history: &WalkHistory) -> Result<SignedDiagram> {
    if !history.has_default_start() {
        return Err(validation("diagrams encode walkers starting on sites 1..=p"));
    }
    if !history.is_closed() {
        return Err(validation("history does not return the walkers to their starts"));
    }
    let mut columns = vec![Column::default(); history.p()];
    for (t, m) in history.moves().iter().enumerate() {
        columns[m.walker].side_mut(Side::of(m.step)).push(t as u32 + 1);
    }
    SignedDiagram::new(columns)
}

/// Reads the walk back off a diagram.
pub fn diagram_to_walk(diagram: &SignedDiagram) -> Result<WalkHistory> {
    let moves = diagram
        .locations()
        .into_iter()
        .map(|(k, side)| Move::new(k, side.step()))
        .collect();
    WalkHistory::new(diagram.p(), moves)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn col(above: &[u32], below: &[u32]) -> Column {
        Column {
            above: above.to_vec(),
            below: below.to_vec(),
        }
    }

    #[test]
    fn single_walker() {
        let h = WalkHistory::new(1, vec![Move::new(0, Step::L), Move::new(0, Step::R)]).unwrap();
        let d = walk_to_diagram(&h).unwrap();
        assert_eq!(d.columns(), &[col(&[1], &[2])]);
        assert_eq!(diagram_to_walk(&d).unwrap(), h);
        assert_eq!(d.word().to_string(), "LR");
    }

    #[test]
    fn inadmissible_diagrams_name_the_columns() {
        // walker 2 stepping left first would land on walker 1
        let err = SignedDiagram::new(vec![col(&[2], &[3]), col(&[1], &[4])]).unwrap_err();
        assert!(err.to_string().contains("column 1"), "{err}");
        assert!(SignedDiagram::new(vec![col(&[1], &[])]).is_err());
        assert!(SignedDiagram::new(vec![col(&[2, 1], &[3, 4])]).is_err());
        assert!(SignedDiagram::new(vec![col(&[1], &[3])]).is_err());
    }

    #[test]
    fn json_wire_format() {
        let d = SignedDiagram::new(vec![col(&[1], &[2]), col(&[], &[])]).unwrap();
        let json = serde_json::to_string(&d).unwrap();
        assert_eq!(
            json,
            r#"{"columns":[{"above":[1],"below":[2]},{"above":[],"below":[]}]}"#
        );
        assert_eq!(serde_json::from_str::<SignedDiagram>(&json).unwrap(), d);
    }

    #[test]
    fn open_or_shifted_histories_are_rejected() {
        let open = WalkHistory::new(1, vec![Move::new(0, Step::L), Move::new(0, Step::L)]).unwrap();
        assert!(walk_to_diagram(&open).is_err());
        let shifted = WalkHistory::with_initial(vec![5], vec![]).unwrap();
        assert!(walk_to_diagram(&shifted).is_err());
    }
}
