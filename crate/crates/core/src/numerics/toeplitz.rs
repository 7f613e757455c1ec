//! Toeplitz matrices from torus symbols and their determinants by pivoted
//! elimination.

use num_complex::Complex64;

/// Toeplitz matrix of order n built from symbol Fourier coefficients
/// d_{-(n-1)} .. d_{n-1}; entry (i,j) = d_{i-j}.
#[derive(Clone, Debug)]
pub struct ToeplitzMatrix {
    pub order: usize,
    /// coeffs[k + order - 1] = d_k for k in -(order-1) ..= order-1
    pub coeffs: Vec<Complex64>,
}

impl ToeplitzMatrix {
    pub fn entry(&self, i: usize, j: usize) -> Complex64 {
        let k = i as i64 - j as i64;
        self.coeffs[(k + self.order as i64 - 1) as usize]
    }

    /// Determinant by Gaussian elimination with partial pivoting.
    pub fn determinant(&self) -> Complex64 {
        let n = self.order;
        let mut a: Vec<Vec<Complex64>> = (0..n)
            .map(|i| (0..n).map(|j| self.entry(i, j)).collect())
            .collect();
        let mut det = Complex64::new(1.0, 0.0);
        for col in 0..n {
            let pivot = (col..n)
                .max_by(|&r, &s| {
                    a[r][col]
                        .norm_sqr()
                        .partial_cmp(&a[s][col].norm_sqr())
                        .unwrap()
                })
                .unwrap();
            if a[pivot][col].norm_sqr() == 0.0 {
                return Complex64::new(0.0, 0.0);
            }
            if pivot != col {
                a.swap(pivot, col);
                det = -det;
            }
            det *= a[col][col];
            for r in (col + 1)..n {
                let f = a[r][col] / a[col][col];
                for j in col..n {
                    let d = f * a[col][j];
                    a[r][j] -= d;
                }
            }
        }
        det
    }
}

/// Fourier coefficients of a symbol on the torus by the uniform trapezoid
/// rule (spectrally accurate for smooth symbols).
pub fn symbol_fourier_coeffs(
    symbol: impl Fn(f64) -> Complex64,
    max_k: usize,
    grid_n: usize,
) -> Vec<Complex64> {
    let n = grid_n.max(4 * max_k + 8);
    let vals: Vec<Complex64> = (0..n)
        .map(|i| symbol(std::f64::consts::TAU * i as f64 / n as f64))
        .collect();
    let mut out = Vec::with_capacity(2 * max_k + 1);
    for k in -(max_k as i64)..=(max_k as i64) {
        let mut acc = Complex64::new(0.0, 0.0);
        for (i, v) in vals.iter().enumerate() {
            let th = std::f64::consts::TAU * i as f64 / n as f64;
            acc += v * Complex64::from_polar(1.0, -(k as f64) * th);
        }
        out.push(acc / n as f64);
    }
    out
}

/// Determinant of the order-n Toeplitz matrix of a symbol.
pub fn toeplitz_det(symbol: impl Fn(f64) -> Complex64, n: usize) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let coeffs = symbol_fourier_coeffs(symbol, n - 1, 1024);
    let m = ToeplitzMatrix {
        order: n,
        coeffs,
    };
    m.determinant().re
}

/// Determinant from explicit coefficients d_{-(n-1)}..d_{n-1}.
pub fn toeplitz_det_from_coeffs(coeffs: &[Complex64], n: usize) -> f64 {
    assert_eq!(coeffs.len(), 2 * n - 1);
    ToeplitzMatrix {
        order: n,
        coeffs: coeffs.to_vec(),
    }
    .determinant()
    .re
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_symbol() {
        for n in 1..=6 {
            let d = toeplitz_det(|_| Complex64::new(1.0, 0.0), n);
            assert!((d - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn modulus_one_plus_z() {
        // phi = |1+z|^2: d_0 = 2, d_{+-1} = 1; det [[2,1],[1,2]] = 3
        let sym = |t: f64| {
            let z = Complex64::from_polar(1.0, t);
            let w = (Complex64::new(1.0, 0.0) + z).norm_sqr();
            Complex64::new(w, 0.0)
        };
        let coeffs = symbol_fourier_coeffs(sym, 1, 256);
        assert!((coeffs[1].re - 2.0).abs() < 1e-12);
        assert!((coeffs[0].re - 1.0).abs() < 1e-12);
        assert!((coeffs[2].re - 1.0).abs() < 1e-12);
        let d = toeplitz_det(sym, 2);
        assert!((d - 3.0).abs() < 1e-10);
    }
}
