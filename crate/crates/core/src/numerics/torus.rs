//! Uniform-product-grid quadrature on the n-torus with a doubling refinement
//! schedule and a conservative error estimate from successive refinements.

use super::NumericsError;

/// Grid specification for [`torus_integrate`].
#[derive(Clone, Debug)]
pub struct TorusGrid {
    /// Torus dimension.
    pub dimension: usize,
    /// Initial points per axis.
    pub n_start: usize,
    /// Maximum points per axis before the budget is declared exhausted.
    pub n_max: usize,
    /// Absolute tolerance on the refinement-difference error estimate.
    pub tol: f64,
    /// Marks integrands with |.|^{odd power} kinks; refinement always runs to
    /// at least two doublings so the error estimate sees the slow mode.
    pub has_kink: bool,
}

impl TorusGrid {
    /// Defaults: N = 64 doubling to 4096 (256 per axis for n = 3).
    pub fn new(dimension: usize) -> Self {
        let n_max = if dimension >= 3 { 256 } else { 4096 };
        TorusGrid {
            dimension,
            n_start: 64,
            n_max,
            tol: 1e-9,
            has_kink: false,
        }
    }

    pub fn with_tol(mut self, tol: f64) -> Self {
        self.tol = tol;
        self
    }

    pub fn with_kink(mut self) -> Self {
        self.has_kink = true;
        self
    }

    pub fn with_max(mut self, n_max: usize) -> Self {
        self.n_max = n_max;
        self
    }
}

#[derive(Clone, Copy, Debug)]
pub struct QuadratureResult {
    pub value: f64,
    pub error_estimate: f64,
    pub evaluations: u64,
}

/// Midpoint-rule integral over one refinement level. Midpoint (rather than
/// node-at-zero) grids keep axis singularities like |1 - z|^a off the grid.
fn level_sum(f: &mut dyn FnMut(&[f64]) -> f64, n: usize, dim: usize) -> (f64, u64) {
    let step = std::f64::consts::TAU / n as f64;
    let mut idx = vec![0usize; dim];
    let mut angles = vec![0f64; dim];
    let mut acc = 0.0;
    let mut count = 0u64;
    loop {
        for d in 0..dim {
            angles[d] = (idx[d] as f64 + 0.5) * step;
        }
        acc += f(&angles);
        count += 1;
        // odometer increment
        let mut d = 0;
        loop {
            if d == dim {
                let norm = (n as f64).powi(dim as i32);
                return (acc / norm, count);
            }
            idx[d] += 1;
            if idx[d] < n {
                break;
            }
            idx[d] = 0;
            d += 1;
        }
    }
}

/// Integrate `f` over the normalized n-torus (angles in [0, 2pi)^n, Haar
/// measure d theta / (2 pi)^n) on a doubling schedule.
///
/// The error estimate is the difference of the last two refinement levels,
/// which overestimates the true error for both spectrally convergent
/// integrands and the O(N^-2) kink class.
pub fn torus_integrate(
    mut f: impl FnMut(&[f64]) -> f64,
    grid: &TorusGrid,
) -> Result<QuadratureResult, NumericsError> {
    let mut n = grid.n_start.max(2);
    let mut evals = 0u64;
    let (mut prev, c0) = level_sum(&mut f, n, grid.dimension);
    evals += c0;
    let mut doublings = 0;
    loop {
        if n * 2 > grid.n_max {
            return Err(NumericsError::BudgetExhausted {
                value: prev,
                error_estimate: f64::NAN,
            });
        }
        n *= 2;
        doublings += 1;
        let (cur, c) = level_sum(&mut f, n, grid.dimension);
        evals += c;
        let est = (cur - prev).abs();
        let enough_levels = !grid.has_kink || doublings >= 2;
        if est <= grid.tol && enough_levels {
            return Ok(QuadratureResult {
                value: cur,
                error_estimate: est.max(f64::EPSILON * cur.abs()),
                evaluations: evals,
            });
        }
        if n * 2 > grid.n_max {
            // schedule ends here; report the best estimate with its gap
            if est <= grid.tol {
                return Ok(QuadratureResult {
                    value: cur,
                    error_estimate: est.max(f64::EPSILON * cur.abs()),
                    evaluations: evals,
                });
            }
            return Err(NumericsError::BudgetExhausted {
                value: cur,
                error_estimate: est,
            });
        }
        prev = cur;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_is_exact() {
        let grid = TorusGrid::new(1).with_tol(1e-14);
        let r = torus_integrate(|_| 1.0, &grid).unwrap();
        assert_eq!(r.value, 1.0);
    }

    #[test]
    fn smooth_laurent_modulus() {
        // |1 - z|^2 integrates to 2
        let grid = TorusGrid::new(1).with_tol(1e-13);
        let r = torus_integrate(|a| 2.0 - 2.0 * a[0].cos(), &grid).unwrap();
        assert!((r.value - 2.0).abs() < 1e-12, "{}", r.value);
    }

    #[test]
    fn kink_case_one_minus_z_squared() {
        // |1 - z^2| integrates to 4/pi
        let grid = TorusGrid::new(1).with_tol(1e-8).with_kink();
        let r = torus_integrate(|a| (2.0 - 2.0 * (2.0 * a[0]).cos()).sqrt(), &grid).unwrap();
        let expect = 4.0 / std::f64::consts::PI;
        assert!((r.value - expect).abs() < 1e-6, "{} vs {}", r.value, expect);
        assert!((r.value - expect).abs() <= r.error_estimate * 4.0 + 1e-12);
    }

    #[test]
    fn pure_monomials_vanish() {
        // uniform grids annihilate z^k for k != 0 up to machine precision
        let grid = TorusGrid::new(1).with_tol(1e-12);
        for k in [1i32, 2, 5] {
            let r = torus_integrate(|a| (k as f64 * a[0]).cos(), &grid).unwrap();
            assert!(r.value.abs() < 1e-13);
        }
    }

    #[test]
    fn budget_exhaustion_reported() {
        let grid = TorusGrid {
            dimension: 1,
            n_start: 2,
            n_max: 4,
            tol: 1e-16,
            has_kink: true,
        };
        let r = torus_integrate(|a| (2.0 - 2.0 * (2.0 * a[0]).cos()).sqrt(), &grid);
        assert!(r.is_err());
    }

    #[test]
    fn two_dimensional_product() {
        // product integrand splits: (2 - 2cos t1)(2 - 2cos t2) -> 4
        let grid = TorusGrid::new(2).with_tol(1e-11);
        let r = torus_integrate(
            |a| (2.0 - 2.0 * a[0].cos()) * (2.0 - 2.0 * a[1].cos()),
            &grid,
        )
        .unwrap();
        assert!((r.value - 4.0).abs() < 1e-10);
    }
}
