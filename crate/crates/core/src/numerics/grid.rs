use crate::numerics::NumericsError;
use crate::scalar::Real;

/// Uniform grid including both endpoints.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct Grid<T> {
    x_min: T,
    x_max: T,
    n_points: usize,
    spacing: T,
}

impl<T: Real> Grid<T> {
    pub fn new(x_min: T, x_max: T, n_points: usize) -> Result<Self, NumericsError> {
        if !(x_min.is_finite() && x_max.is_finite()) || !(x_min < x_max) {
            return Err(NumericsError::InvalidGrid(format!(
                "need finite x_min < x_max, got [{}, {}]",
                x_min, x_max
            )));
        }
        if n_points < 3 {
            return Err(NumericsError::InvalidGrid(format!(
                "need at least 3 points, got {n_points}"
            )));
        }
        let spacing = (x_max - x_min) / T::from_count(n_points - 1);
        Ok(Self { x_min, x_max, n_points, spacing })
    }

    pub fn x_min(&self) -> T {
        self.x_min
    }

    pub fn x_max(&self) -> T {
        self.x_max
    }

    pub fn n_points(&self) -> usize {
        self.n_points
    }

    pub fn spacing(&self) -> T {
        self.spacing
    }

    pub fn length(&self) -> T {
        self.x_max - self.x_min
    }

    /// The i-th node; the last node is exactly `x_max`.
    pub fn point(&self, i: usize) -> T {
        if i + 1 == self.n_points {
            self.x_max
        } else {
            self.x_min + T::from_count(i) * self.spacing
        }
    }

    pub fn points(&self) -> impl Iterator<Item = T> + '_ {
        (0..self.n_points).map(move |i| self.point(i))
    }

    /// Same interval with the spacing halved (`2n − 1` points).
    pub fn refined(&self) -> Self {
        Self::new(self.x_min, self.x_max, 2 * self.n_points - 1).expect("refinement of a valid grid")
    }

    /// Same spacing, shifted by `dx`.
    pub fn translated(&self, dx: T) -> Self {
        Self { x_min: self.x_min + dx, x_max: self.x_max + dx, ..*self }
    }
}
