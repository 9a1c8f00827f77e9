use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;

/// Uniform tensor grid `theta_k = -pi + 2 pi k / m` in each of `p` dimensions.
///
/// The grid average of `exp(i j theta)` is exact (0 or 1) for `|j| < m`, so a
/// trigonometric polynomial whose per-variable frequencies stay below `m`
/// is integrated exactly.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureGrid {
    nodes: Vec<f64>,
    dim: usize,
}

impl QuadratureGrid {
    pub fn new(m: usize, dim: usize) -> Self {
        assert!(m >= 1, "grid needs at least one node");
        let nodes = (0..m).map(|k| -PI + 2.0 * PI * k as f64 / m as f64).collect();
        QuadratureGrid { nodes, dim }
    }

    /// Smallest `m` that integrates frequencies up to `max_frequency` exactly.
    pub fn exact_size(max_frequency: usize) -> usize {
        max_frequency + 1
    }

    pub fn m(&self) -> usize {
        self.nodes.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    /// Grid mean of `f`, i.e. `(2 pi)^-p` times the integral over the torus.
    ///
    /// Slices along the first axis are summed in parallel with compensated
    /// summation and combined in index order, so the result does not depend
    /// on the thread count.
    pub fn mean<F>(&self, f: F) -> Complex64
    where
        F: Fn(&[f64]) -> Complex64 + Sync,
    {
        self.mean_in_order(&self.nodes, f)
    }

    pub(crate) fn mean_in_order<F>(&self, order: &[f64], f: F) -> Complex64
    where
        F: Fn(&[f64]) -> Complex64 + Sync,
    {
        let m = order.len();
        if self.dim == 0 {
            return f(&[]);
        }
        let partials: Vec<(Compensated, Compensated)> = (0..m)
            .into_par_iter()
            .map(|first| {
                let mut re = Compensated::default();
                let mut im = Compensated::default();
                let mut idx = vec![0usize; self.dim];
                idx[0] = first;
                let mut theta: Vec<f64> = idx.iter().map(|&i| order[i]).collect();
                loop {
                    let v = f(&theta);
                    re.add(v.re);
                    im.add(v.im);
                    // odometer over axes 1..dim
                    let mut axis = self.dim - 1;
                    loop {
                        if axis == 0 {
                            return (re, im);
                        }
                        idx[axis] += 1;
                        if idx[axis] < m {
                            theta[axis] = order[idx[axis]];
                            break;
                        }
                        idx[axis] = 0;
                        theta[axis] = order[0];
                        axis -= 1;
                    }
                }
            })
            .collect();
        let mut re = Compensated::default();
        let mut im = Compensated::default();
        for (r, i) in partials {
            re.add(r.total());
            im.add(i.total());
        }
        let count = (m as f64).powi(self.dim as i32);
        Complex64::new(re.total() / count, im.total() / count)
    }
}

/// Neumaier's variant of Kahan summation.
#[derive(Debug, Default, Clone, Copy)]
struct Compensated {
    sum: f64,
    carry: f64,
}

impl Compensated {
    fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.carry += (self.sum - t) + x;
        } else {
            self.carry += (x - t) + self.sum;
        }
        self.sum = t;
    }

    fn total(&self) -> f64 {
        self.sum + self.carry
    }
}
