//! Dimensionless effective-mass profiles `m(x) > 0` (with `m₀ = 1`).

use std::fmt;

use crate::numerics::Grid;
use crate::scalar::Real;
use crate::smooth::SmoothFn;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum MassError {
    #[error("mass is not positive at x = {x}: m = {m}")]
    NonpositiveMass { x: f64, m: f64 },
    #[error("invalid mass profile parameter: {0}")]
    InvalidParameter(String),
}

#[derive(Clone)]
pub struct MassProfile<T> {
    label: String,
    func: SmoothFn<T>,
    constant: bool,
}

impl<T> fmt::Debug for MassProfile<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MassProfile").field("label", &self.label).finish()
    }
}

impl<T: Real> MassProfile<T> {
    pub fn new(label: impl Into<String>, func: SmoothFn<T>) -> Self {
        Self { label: label.into(), func, constant: false }
    }

    pub fn constant(c: T) -> Result<Self, MassError> {
        if !(c > T::zero()) {
            return Err(MassError::InvalidParameter(format!("constant mass must be positive, got {c}")));
        }
        Ok(Self { label: format!("constant:{c}"), func: SmoothFn::constant(c), constant: true })
    }

    pub fn unit() -> Self {
        Self::constant(T::one()).expect("1 > 0")
    }

    /// `m = (a + x²)/(1 + x²)`, tending to 1 at infinity with `m(0) = a`.
    pub fn rational(a: T) -> Result<Self, MassError> {
        if !(a > T::zero()) {
            return Err(MassError::InvalidParameter(format!("rational mass needs a > 0, got {a}")));
        }
        let b = a - T::one();
        let two = T::lit(2.0);
        let func = SmoothFn::analytic(
            move |x: T| (a + x * x) / (T::one() + x * x),
            move |x: T| -two * b * x / (T::one() + x * x).powi(2),
            move |x: T| b * (T::lit(6.0) * x * x - two) / (T::one() + x * x).powi(3),
            move |x: T| T::lit(24.0) * b * x * (T::one() - x * x) / (T::one() + x * x).powi(4),
        );
        Ok(Self { label: format!("rational:{a}"), func, constant: false })
    }

    /// `m = 1 + b·exp(−x²)`, positive for `b > −1`.
    pub fn exponential_well(b: T) -> Result<Self, MassError> {
        if !(b > -T::one()) {
            return Err(MassError::InvalidParameter(format!("exponential-well mass needs b > −1, got {b}")));
        }
        let func = SmoothFn::analytic(
            move |x: T| T::one() + b * (-x * x).exp(),
            move |x: T| -T::lit(2.0) * b * x * (-x * x).exp(),
            move |x: T| b * (T::lit(4.0) * x * x - T::lit(2.0)) * (-x * x).exp(),
            move |x: T| b * x * (T::lit(12.0) - T::lit(8.0) * x * x) * (-x * x).exp(),
        );
        Ok(Self { label: format!("exponential-well:{b}"), func, constant: false })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn is_constant(&self) -> bool {
        self.constant
    }

    pub fn m(&self, x: T) -> T {
        self.func.value(x)
    }

    pub fn m_prime(&self, x: T) -> T {
        self.func.d1(x)
    }

    pub fn m_double_prime(&self, x: T) -> T {
        self.func.d2(x)
    }

    /// Fails on the first grid node where `m ≤ 0`.
    pub fn check_positive(&self, grid: &Grid<T>) -> Result<(), MassError> {
        for x in grid.points() {
            let m = self.m(x);
            if !(m > T::zero()) {
                return Err(MassError::NonpositiveMass { x: x.as_f64(), m: m.as_f64() });
            }
        }
        Ok(())
    }

    /// Smallest mass over the grid nodes.
    pub fn min_on(&self, grid: &Grid<T>) -> T {
        grid.points().map(|x| self.m(x)).fold(T::infinity(), T::min)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_derivatives_agree_with_differences() {
        let profiles: [MassProfile<f64>; 2] = [MassProfile::rational(2.0).unwrap(), MassProfile::exponential_well(0.5).unwrap()];
        for p in &profiles {
            let numeric = SmoothFn::numeric({
                let p = p.clone();
                move |x| p.m(x)
            });
            for x in [-2.0, -0.4, 0.0, 0.7, 3.0] {
                assert!((p.m_prime(x) - numeric.d1(x)).abs() < 1e-10, "{}", p.label());
                assert!((p.m_double_prime(x) - numeric.d2(x)).abs() < 1e-7, "{}", p.label());
            }
        }
    }

    #[test]
    fn invalid_parameters() {
        assert!(MassProfile::<f64>::rational(0.0).is_err());
        assert!(MassProfile::<f64>::exponential_well(-1.0).is_err());
        assert!(MassProfile::<f64>::constant(-2.0).is_err());
    }

    #[test]
    fn positivity_check() {
        let g = Grid::new(-1.0, 1.0, 11).unwrap();
        let bad = MassProfile::new("linear", SmoothFn::numeric(|x: f64| x));
        assert!(matches!(bad.check_positive(&g), Err(MassError::NonpositiveMass { .. })));
        assert!(MassProfile::rational(2.0).unwrap().check_positive(&g).is_ok());
        assert_eq!(MassProfile::rational(2.0).unwrap().m(0.0), 2.0);
    }
}
