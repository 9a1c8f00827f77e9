use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use super::counting::factorial;
use crate::error::{validation, Result};
use crate::limits::Limits;

/// An integer partition, stored as weakly decreasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Shape(Vec<usize>);

impl Shape {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(validation("shape parts must be positive"));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(validation(format!("shape {parts:?} is not weakly decreasing")));
        }
        Ok(Shape(parts))
    }

    pub fn empty() -> Self {
        Shape(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of rows.
    pub fn rows(&self) -> usize {
        self.0.len()
    }

    pub fn conjugate(&self) -> Shape {
        let width = self.0.first().copied().unwrap_or(0);
        Shape((0..width).map(|c| self.0.iter().take_while(|&&r| r > c).count()).collect())
    }

    /// Hook length of cell `(row, col)`, both zero-based.
    pub fn hook(&self, row: usize, col: usize) -> usize {
        let arm = self.0[row] - col - 1;
        let leg = self.0[row + 1..].iter().take_while(|&&r| r > col).count();
        arm + leg + 1
    }
}

impl TryFrom<Vec<usize>> for Shape {
    type Error = crate::Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Shape::new(parts)
    }
}

impl From<Shape> for Vec<usize> {
    fn from(s: Shape) -> Self {
        s.0
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A standard Young tableau, stored row by row.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<u32>>", into = "Vec<Vec<u32>>")]
pub struct StandardTableau {
    rows: Vec<Vec<u32>>,
}

impl StandardTableau {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let lengths: Vec<usize> = rows.iter().map(Vec::len).collect();
        Shape::new(lengths).map_err(|e| validation(format!("tableau rows: {e}")))?;
        let n: usize = rows.iter().map(Vec::len).sum();
        let mut seen = vec![false; n];
        for &v in rows.iter().flatten() {
            if v == 0 || v as usize > n || std::mem::replace(&mut seen[v as usize - 1], true) {
                return Err(validation(format!(
                    "tableau entries must use each of 1..={n} once (bad entry {v})"
                )));
            }
        }
        for (r, row) in rows.iter().enumerate() {
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return Err(validation(format!("row {} is not increasing", r + 1)));
            }
            if r > 0 && row.iter().zip(&rows[r - 1]).any(|(below, above)| below <= above) {
                return Err(validation(format!(
                    "column entries do not increase into row {}",
                    r + 1
                )));
            }
        }
        Ok(StandardTableau { rows })
    }

    pub(crate) fn from_valid(rows: Vec<Vec<u32>>) -> Self {
        debug_assert!(StandardTableau::new(rows.clone()).is_ok(), "{rows:?}");
        StandardTableau { rows }
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn shape(&self) -> Shape {
        Shape(self.rows.iter().map(Vec::len).collect())
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn first_row_len(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }
}

impl TryFrom<Vec<Vec<u32>>> for StandardTableau {
    type Error = crate::Error;

    fn try_from(rows: Vec<Vec<u32>>) -> Result<Self> {
        StandardTableau::new(rows)
    }
}

impl From<StandardTableau> for Vec<Vec<u32>> {
    fn from(t: StandardTableau) -> Self {
        t.rows
    }
}

/// Two standard tableaux of the same shape.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawPair")]
pub struct TableauPair {
    p_tableau: StandardTableau,
    q_tableau: StandardTableau,
}

#[derive(Deserialize)]
struct RawPair {
    p_tableau: StandardTableau,
    q_tableau: StandardTableau,
}

impl TryFrom<RawPair> for TableauPair {
    type Error = crate::Error;

    fn try_from(raw: RawPair) -> Result<Self> {
        TableauPair::new(raw.p_tableau, raw.q_tableau)
    }
}

impl TableauPair {
    pub fn new(p_tableau: StandardTableau, q_tableau: StandardTableau) -> Result<Self> {
        if p_tableau.shape() != q_tableau.shape() {
            return Err(validation(format!(
                "tableau shapes differ: {} vs {}",
                p_tableau.shape(),
                q_tableau.shape()
            )));
        }
        Ok(TableauPair {
            p_tableau,
            q_tableau,
        })
    }

    pub fn p_tableau(&self) -> &StandardTableau {
        &self.p_tableau
    }

    pub fn q_tableau(&self) -> &StandardTableau {
        &self.q_tableau
    }

    pub fn shape(&self) -> Shape {
        self.p_tableau.shape()
    }
}

/// Number of standard Young tableaux of `shape`, by the hook-length formula.
pub fn syt_count(shape: &Shape) -> BigUint {
    let mut hooks = BigUint::one();
    for (r, &len) in shape.parts().iter().enumerate() {
        for c in 0..len {
            hooks *= shape.hook(r, c);
        }
    }
    factorial(shape.weight()) / hooks
}

/// Every standard Young tableau of `shape`.
///
/// Entries are placed in increasing order, each at an outer corner of the
/// cells filled so far.
pub fn enumerate_syt(shape: &Shape, limits: &Limits) -> Result<Vec<StandardTableau>> {
    Limits::check("shape weight", shape.weight(), limits.syt_enumeration)?;
    let mut out = Vec::new();
    let mut rows: Vec<Vec<u32>> = vec![Vec::new(); shape.rows()];
    fill(shape.parts(), &mut rows, 1, shape.weight() as u32, &mut out);
    Ok(out)
}

fn fill(
    parts: &[usize],
    rows: &mut [Vec<u32>],
    next: u32,
    n: u32,
    out: &mut Vec<StandardTableau>,
) {
    if next > n {
        out.push(StandardTableau::from_valid(rows.to_vec()));
        return;
    }
    for r in 0..rows.len() {
        let c = rows[r].len();
        let fits = c < parts[r] && (r == 0 || rows[r - 1].len() > c);
        if fits {
            rows[r].push(next);
            fill(parts, rows, next + 1, n, out);
            rows[r].pop();
        }
    }
}

/// Iterator over the partitions of `n` with at most `max_parts` parts, in
/// reverse lexicographic order.
#[derive(Debug, Clone)]
pub struct Partitions {
    current: Option<Vec<usize>>,
    max_parts: usize,
}

/// Partitions of `n` into at most `max_parts` parts, each yielded once.
pub fn partitions_iter(n: usize, max_parts: usize) -> Partitions {
    let first = if n == 0 { Vec::new() } else { vec![n] };
    Partitions {
        current: Some(first),
        max_parts,
    }
}

impl Partitions {
    fn advance(parts: &mut Vec<usize>) -> bool {
        let mut freed = 0;
        while parts.last() == Some(&1) {
            parts.pop();
            freed += 1;
        }
        let Some(last) = parts.last_mut() else {
            return false;
        };
        *last -= 1;
        let size = *last;
        freed += 1;
        while freed >= size {
            parts.push(size);
            freed -= size;
        }
        if freed > 0 {
            parts.push(freed);
        }
        true
    }
}

impl Iterator for Partitions {
    type Item = Shape;

    fn next(&mut self) -> Option<Shape> {
        loop {
            let parts = self.current.as_mut()?;
            let candidate = (parts.len() <= self.max_parts).then(|| Shape(parts.clone()));
            if !Partitions::advance(parts) {
                self.current = None;
            }
            if candidate.is_some() {
                return candidate;
            }
        }
    }
}
