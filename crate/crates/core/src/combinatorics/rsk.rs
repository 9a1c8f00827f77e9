//! Row-insertion Robinson-Schensted correspondence.

use super::permutation::Permutation;
use super::tableau::{StandardTableau, TableauPair};
use crate::error::{validation, Result};

/// Insertion tableau `P` and recording tableau `Q` of `perm`.
///
/// The first row of both has length `lis_length(perm)`.
pub fn rsk_forward(perm: &Permutation) -> TableauPair {
    let mut p_rows: Vec<Vec<u32>> = Vec::new();
    let mut q_rows: Vec<Vec<u32>> = Vec::new();
    for (step, &value) in perm.entries().iter().enumerate() {
        let mut carry = value;
        let mut row = 0;
        loop {
            if row == p_rows.len() {
                p_rows.push(vec![carry]);
                q_rows.push(vec![step as u32 + 1]);
                break;
            }
            let target = &mut p_rows[row];
            let pos = target.partition_point(|&x| x < carry);
            if pos == target.len() {
                target.push(carry);
                q_rows[row].push(step as u32 + 1);
                break;
            }
            carry = std::mem::replace(&mut target[pos], carry);
            row += 1;
        }
    }
    TableauPair::new(
        StandardTableau::from_valid(p_rows),
        StandardTableau::from_valid(q_rows),
    )
    .expect("RSK produces equal shapes")
}

/// Recovers the permutation from its `(P, Q)` pair.
pub fn rsk_inverse(pair: &TableauPair) -> Result<Permutation> {
    let mut p_rows = pair.p_tableau().rows().to_vec();
    let mut q_rows = pair.q_tableau().rows().to_vec();
    let n = pair.p_tableau().size();
    let mut entries = vec![0u32; n];
    for step in (1..=n as u32).rev() {
        let row = q_rows
            .iter()
            .position(|r| r.last() == Some(&step))
            .ok_or_else(|| validation(format!("entry {step} of Q is not at a corner")))?;
        q_rows[row].pop();
        let mut carry = p_rows[row].pop().expect("rows of equal shape");
        for above in (0..row).rev() {
            let target = &mut p_rows[above];
            let pos = target.partition_point(|&x| x < carry) - 1;
            carry = std::mem::replace(&mut target[pos], carry);
        }
        if q_rows[row].is_empty() {
            q_rows.pop();
            p_rows.pop();
        }
        entries[step as usize - 1] = carry;
    }
    Permutation::new(entries)
}
