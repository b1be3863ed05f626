use crate::numerics::NumericsError;
use crate::scalar::Real;

/// Real symmetric tridiagonal matrix stored by its two bands.
#[derive(Debug, Clone, PartialEq)]
pub struct TridiagonalSymmetric<T> {
    diagonal: Vec<T>,
    offdiagonal: Vec<T>,
}

impl<T: Real> TridiagonalSymmetric<T> {
    pub fn new(diagonal: Vec<T>, offdiagonal: Vec<T>) -> Result<Self, NumericsError> {
        if diagonal.is_empty() || offdiagonal.len() + 1 != diagonal.len() {
            return Err(NumericsError::DimensionMismatch(format!(
                "diagonal has {} entries, off-diagonal has {} (need N and N−1, N ≥ 1)",
                diagonal.len(),
                offdiagonal.len()
            )));
        }
        Ok(Self { diagonal, offdiagonal })
    }

    pub fn dim(&self) -> usize {
        self.diagonal.len()
    }

    pub fn diagonal(&self) -> &[T] {
        &self.diagonal
    }

    pub fn offdiagonal(&self) -> &[T] {
        &self.offdiagonal
    }

    /// Dense entry `(i, j)`; zero outside the band.
    pub fn entry(&self, i: usize, j: usize) -> T {
        match i.abs_diff(j) {
            0 => self.diagonal[i],
            1 => self.offdiagonal[i.min(j)],
            _ => T::zero(),
        }
    }

    /// Number of eigenvalues strictly below `lambda` (Sturm count via the
    /// LDLᵀ pivots of `M − λI`).
    pub fn sturm_count(&self, lambda: T) -> usize {
        if lambda == T::infinity() {
            return self.dim();
        }
        let tiny = T::min_positive_value().sqrt();
        let mut count = 0;
        let mut q = self.diagonal[0] - lambda;
        for i in 0..self.dim() {
            if i > 0 {
                let e = self.offdiagonal[i - 1];
                q = self.diagonal[i] - lambda - e * e / q;
            }
            if q == T::zero() {
                q = -tiny;
            }
            if q < T::zero() {
                count += 1;
            }
        }
        count
    }

    /// Gershgorin enclosure of the spectrum.
    pub fn gershgorin(&self) -> (T, T) {
        let n = self.dim();
        let mut lo = T::infinity();
        let mut hi = T::neg_infinity();
        for i in 0..n {
            let mut r = T::zero();
            if i > 0 {
                r += self.offdiagonal[i - 1].abs();
            }
            if i + 1 < n {
                r += self.offdiagonal[i].abs();
            }
            lo = lo.min(self.diagonal[i] - r);
            hi = hi.max(self.diagonal[i] + r);
        }
        (lo, hi)
    }
}

#[derive(Debug, Clone, Copy)]
pub struct EigenOptions<T> {
    /// Absolute width of the final bisection bracket.
    pub abs_tol: T,
}

impl<T: Real> Default for EigenOptions<T> {
    fn default() -> Self {
        Self { abs_tol: T::lit(1e-12) }
    }
}

pub fn lowest_eigenvalues<T: Real>(m: &TridiagonalSymmetric<T>, k: usize) -> Result<Vec<T>, NumericsError> {
    lowest_eigenvalues_with(m, k, EigenOptions::default())
}

/// The `k` smallest eigenvalues in ascending order, each isolated by
/// bisection on the Sturm count.
pub fn lowest_eigenvalues_with<T: Real>(
    m: &TridiagonalSymmetric<T>,
    k: usize,
    opts: EigenOptions<T>,
) -> Result<Vec<T>, NumericsError> {
    if k > m.dim() {
        return Err(NumericsError::DimensionMismatch(format!(
            "asked for {k} eigenvalues of a {}×{} matrix",
            m.dim(),
            m.dim()
        )));
    }
    let (glo, ghi) = m.gershgorin();
    let scale = glo.abs().max(ghi.abs()).max(T::one());
    let tol = opts.abs_tol.max(T::lit(4.0) * T::epsilon() * scale);
    let half = T::lit(0.5);
    let mut out = Vec::with_capacity(k);
    let mut floor = glo - tol;
    for index in 0..k {
        // eigenvalue #index is the smallest λ with sturm_count(λ) > index
        let mut lo = floor;
        let mut hi = ghi + tol;
        while hi - lo > tol {
            let mid = half * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if m.sturm_count(mid) > index {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        let value = half * (lo + hi);
        out.push(value);
        // eigenvalues are non-decreasing; later searches start at the previous bracket
        floor = lo;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_by_one() {
        let m = TridiagonalSymmetric::new(vec![5.0], vec![]).unwrap();
        let ev = lowest_eigenvalues(&m, 1).unwrap();
        assert!((ev[0] - 5.0_f64).abs() < 1e-12);
    }

    #[test]
    fn two_by_two() {
        let m = TridiagonalSymmetric::new(vec![0.0_f64, 0.0], vec![1.0]).unwrap();
        let ev = lowest_eigenvalues(&m, 2).unwrap();
        assert!((ev[0] + 1.0).abs() < 1e-12 && (ev[1] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn dirichlet_laplacian_closed_form() {
        let n = 100;
        let l = 1.0_f64;
        let h = l / (n as f64 + 1.0);
        let m = TridiagonalSymmetric::new(vec![2.0 / (h * h); n], vec![-1.0 / (h * h); n - 1]).unwrap();
        let ev = lowest_eigenvalues(&m, 10).unwrap();
        for (i, e) in ev.iter().enumerate() {
            let k = (i + 1) as f64;
            let exact = 2.0 / (h * h) * (1.0 - (k * std::f64::consts::PI * h / l).cos());
            assert!((e - exact).abs() < 1e-8 * exact, "k={k}: {e} vs {exact}");
        }
    }

    #[test]
    fn sturm_count_at_infinity_is_dimension() {
        let m = TridiagonalSymmetric::new(vec![1.0, 2.0, 3.0], vec![0.5, 0.5]).unwrap();
        assert_eq!(m.sturm_count(f64::INFINITY), 3);
        assert_eq!(m.sturm_count(f64::NEG_INFINITY), 0);
    }

    #[test]
    fn degenerate_eigenvalues_are_repeated() {
        let m = TridiagonalSymmetric::new(vec![2.0_f64, 2.0, 2.0], vec![0.0, 0.0]).unwrap();
        let ev = lowest_eigenvalues(&m, 3).unwrap();
        assert!(ev.iter().all(|e| (e - 2.0).abs() < 1e-12));
    }

    #[test]
    fn too_many_eigenvalues_requested() {
        let m = TridiagonalSymmetric::new(vec![1.0, 2.0], vec![0.0]).unwrap();
        assert!(matches!(lowest_eigenvalues(&m, 3), Err(NumericsError::DimensionMismatch(_))));
        assert!(TridiagonalSymmetric::new(vec![1.0, 2.0], vec![]).is_err());
    }

    #[test]
    fn laplacian_converges_at_second_order() {
        // lowest eigenvalue of −d²/dx² on [0, L] with Dirichlet ends
        let l = 2.0_f64;
        let exact = (std::f64::consts::PI / l).powi(2);
        let err = |n: usize| {
            let h = l / (n as f64 + 1.0);
            let m = TridiagonalSymmetric::new(vec![2.0 / (h * h); n], vec![-1.0 / (h * h); n - 1]).unwrap();
            lowest_eigenvalues(&m, 1).unwrap()[0] - exact
        };
        // n + 1 doubles each time so h halves exactly
        let ratio = (err(49) - err(99)) / (err(99) - err(199));
        assert!((3.8..=4.2).contains(&ratio), "ratio {ratio}");
    }

    #[test]
    fn f32_small_matrix() {
        let m = TridiagonalSymmetric::new(vec![2.0_f32, 2.0], vec![1.0]).unwrap();
        let ev = lowest_eigenvalues(&m, 2).unwrap();
        assert!((ev[0] - 1.0).abs() < 1e-5 && (ev[1] - 3.0).abs() < 1e-5);
    }
}
