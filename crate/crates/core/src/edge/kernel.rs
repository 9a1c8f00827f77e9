use serde::Serialize;

use super::airy::airy_pair;
use crate::error::{validation, Result};

/// Below this separation the kernel is evaluated by its diagonal form.
pub const DIAGONAL_DELTA: f64 = 1e-4;

/// Largest correlation order accepted by [`rho_k`].
pub const MAX_ORDER: usize = 8;

/// Airy kernel `(Ai(x) Ai'(y) - Ai'(x) Ai(y)) / (x - y)`.
///
/// When `|x - y| <= DIAGONAL_DELTA` the removable singularity is avoided by
/// using the limit `Ai'(m)^2 - m Ai(m)^2` at the midpoint `m`; the limit
/// follows from differentiating the numerator in `y` and using `Ai'' = x Ai`.
/// Both branches are symmetric in `x` and `y` bit for bit.
pub fn kernel(x: f64, y: f64) -> Result<f64> {
    if (x - y).abs() <= DIAGONAL_DELTA {
        return kernel_diagonal(0.5 * (x + y));
    }
    let (ax, dx) = airy_pair(x)?;
    let (ay, dy) = airy_pair(y)?;
    Ok((ax * dy - dx * ay) / (x - y))
}

/// `K(x, x) = Ai'(x)^2 - x Ai(x)^2`.
pub fn kernel_diagonal(x: f64) -> Result<f64> {
    let (a, d) = airy_pair(x)?;
    Ok(d * d - x * a * a)
}

/// Points and their kernel matrix `K(x_a, x_b)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct KernelSample {
    pub points: Vec<f64>,
    pub matrix: Vec<Vec<f64>>,
}

impl KernelSample {
    pub fn new(points: &[f64]) -> Result<Self> {
        let k = points.len();
        let mut matrix = vec![vec![0.0; k]; k];
        for a in 0..k {
            matrix[a][a] = kernel_diagonal(points[a])?;
            for b in a + 1..k {
                let v = kernel(points[a], points[b])?;
                matrix[a][b] = v;
                matrix[b][a] = v;
            }
        }
        Ok(KernelSample {
            points: points.to_vec(),
            matrix,
        })
    }

    pub fn determinant(&self) -> f64 {
        real_det(&self.matrix)
    }
}

/// Scaled `k`-point correlation: the determinant of the kernel matrix.
pub fn rho_k(points: &[f64]) -> Result<f64> {
    if points.is_empty() || points.len() > MAX_ORDER {
        return Err(validation(format!(
            "correlation order {} outside 1..={MAX_ORDER}",
            points.len()
        )));
    }
    Ok(KernelSample::new(points)?.determinant())
}

/// Two-column CSV `x,rho1` of the one-point density on a uniform grid.
pub fn rho1_curve_csv(from: f64, to: f64, intervals: usize) -> Result<String> {
    if intervals == 0 || from.partial_cmp(&to) != Some(std::cmp::Ordering::Less) {
        return Err(validation("curve needs from < to and at least one interval"));
    }
    let mut out = String::from("x,rho1\n");
    for i in 0..=intervals {
        let x = from + (to - from) * i as f64 / intervals as f64;
        out.push_str(&format!("{x},{}\n", kernel_diagonal(x)?));
    }
    Ok(out)
}

fn real_det(matrix: &[Vec<f64>]) -> f64 {
    let n = matrix.len();
    let mut a = matrix.to_vec();
    let mut det = 1.0;
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))
            .unwrap();
        if a[pivot][col] == 0.0 {
            return 0.0;
        }
        if pivot != col {
            a.swap(pivot, col);
            det = -det;
        }
        let head = a[col][col];
        det *= head;
        let (top, rest) = a.split_at_mut(col + 1);
        let pivot_row = &top[col];
        for row in rest {
            let factor = row[col] / head;
            for (x, &y) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                *x -= factor * y;
            }
        }
    }
    det
}
