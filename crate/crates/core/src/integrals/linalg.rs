use num_complex::Complex64;

/// Determinant of a square complex matrix given row by row, by Gaussian
/// elimination with partial pivoting on the modulus.
pub fn complex_det(matrix: &[Vec<Complex64>]) -> Complex64 {
    let n = matrix.len();
    assert!(matrix.iter().all(|r| r.len() == n), "matrix must be square");
    let mut a: Vec<Vec<Complex64>> = matrix.to_vec();
    let mut det = Complex64::new(1.0, 0.0);
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&i, &j| a[i][col].norm().total_cmp(&a[j][col].norm()))
            .unwrap();
        if a[pivot][col].norm() == 0.0 {
            return Complex64::new(0.0, 0.0);
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
            if factor.norm() == 0.0 {
                continue;
            }
            for (x, &y) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                *x -= factor * y;
            }
        }
    }
    det
}

/// `prod_{a < b} |e^{i theta_b} - e^{i theta_a}|^2`.
pub fn vandermonde_sq(thetas: &[f64]) -> f64 {
    let mut out = 1.0;
    for (a, &ta) in thetas.iter().enumerate() {
        for &tb in &thetas[a + 1..] {
            out *= 2.0 - 2.0 * (tb - ta).cos();
        }
    }
    out
}
