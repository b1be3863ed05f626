//! Reconstruction of `z(x)` from `z′² = 2m(x)·𝔖(z)` for an arbitrary mass.

use super::poly::{Poly, Rational};
use super::{generating_function, generating_function_slope, NatanzonError, NatanzonParams};
use crate::mass::MassProfile;
use crate::numerics::Grid;
use crate::scalar::Real;

/// Sampled solution of `dz/dx = +√(2m𝔖(z))` on a grid, interpolated by
/// quintic Hermite pieces built from `z`, `z′` and `z″` at every node.
#[derive(Debug, Clone)]
pub struct CoordinateMap<T> {
    grid: Grid<T>,
    z: Vec<T>,
    dz: Vec<T>,
    d2z: Vec<T>,
    clamped: Vec<bool>,
    params: NatanzonParams<T>,
    mass: MassProfile<T>,
}

const RK4_SUBSTEPS: usize = 4;

fn slope<T: Real>(params: &NatanzonParams<T>, mass: &MassProfile<T>, x: T, z: T) -> Result<T, NatanzonError> {
    let z = z.max(T::zero()).min(T::one());
    let s = generating_function(params, z)?;
    let v = (T::lit(2.0) * mass.m(x) * s).max(T::zero()).sqrt();
    if v.is_finite() {
        Ok(v)
    } else {
        Err(NatanzonError::StiffBlowup(x.as_f64()))
    }
}

/// The ODE in the angle `θ` with `z = sin²θ`: `θ′ = √(2m·z(1 − z)/R(z))`.
/// Unlike `z′`, this stays Lipschitz where `R` vanishes at an endpoint.
struct AngleField<'a, T> {
    ratio: Rational<T>,
    mass: &'a MassProfile<T>,
}

impl<T: Real> AngleField<'_, T> {
    fn eval(&self, x: T, theta: T) -> Result<T, NatanzonError> {
        let z = theta.sin().powi(2);
        let q = self.ratio.eval(z).ok_or(NatanzonError::RZero(z.as_f64()))?;
        let v = (T::lit(2.0) * self.mass.m(x) * q).max(T::zero()).sqrt();
        if v.is_finite() {
            Ok(v)
        } else {
            Err(NatanzonError::StiffBlowup(x.as_f64()))
        }
    }

    fn step(&self, x: T, theta: T, h: T) -> Result<T, NatanzonError> {
        let top = T::FRAC_PI_2();
        let half = h / T::lit(2.0);
        let k1 = self.eval(x, theta)?;
        let k2 = self.eval(x + half, theta + half * k1)?;
        let k3 = self.eval(x + half, theta + half * k2)?;
        let k4 = self.eval(x + h, theta + h * k3)?;
        let next = theta + h / T::lit(6.0) * (k1 + T::lit(2.0) * (k2 + k3) + k4);
        if !next.is_finite() {
            return Err(NatanzonError::StiffBlowup((x + h).as_f64()));
        }
        Ok(next.max(T::zero()).min(top))
    }
}

/// Integrates from `(x0, z0)` towards both ends of `grid` with fixed RK4
/// steps of a quarter grid spacing. The integration runs in `θ = asin √z`,
/// clamped to `[0, π/2]`, so `z` never leaves `[0, 1]`.
pub fn solve_coordinate_map<T: Real>(
    params: &NatanzonParams<T>,
    mass: &MassProfile<T>,
    x0: T,
    z0: T,
    grid: &Grid<T>,
) -> Result<CoordinateMap<T>, NatanzonError> {
    params.validate()?;
    mass.check_positive(grid)?;
    if !(z0 > T::zero() && z0 < T::one()) {
        return Err(NatanzonError::OutOfRange(z0.as_f64()));
    }
    if x0 < grid.x_min() || x0 > grid.x_max() {
        return Err(NatanzonError::Numerics(crate::numerics::NumericsError::InvalidArgument(format!(
            "anchor x0 = {x0} lies outside [{}, {}]",
            grid.x_min(),
            grid.x_max()
        ))));
    }
    let n = grid.n_points();
    let h = grid.spacing();
    let field = AngleField {
        ratio: Rational { num: Poly(vec![T::zero(), T::one(), -T::one()]), den: params.r_poly() }
            .cancel_at(T::zero())
            .cancel_at(T::one()),
        mass,
    };
    let mut theta = vec![T::zero(); n];

    // index of the first node at or to the right of x0
    let right = (0..n).find(|&i| grid.point(i) >= x0).unwrap_or(n - 1);
    let advance = |from_x: T, from_z: T, to_x: T| -> Result<T, NatanzonError> {
        let span = to_x - from_x;
        if span == T::zero() {
            return Ok(from_z);
        }
        let steps = ((span.abs() / h * T::from_count(RK4_SUBSTEPS)).ceil().to_usize().unwrap_or(1)).max(1);
        let dx = span / T::from_count(steps);
        let mut th = from_z;
        for k in 0..steps {
            th = field.step(from_x + dx * T::from_count(k), th, dx)?;
        }
        Ok(th)
    };

    let theta0 = z0.sqrt().asin();
    theta[right] = advance(x0, theta0, grid.point(right))?;
    for i in right + 1..n {
        theta[i] = advance(grid.point(i - 1), theta[i - 1], grid.point(i))?;
    }
    if right > 0 {
        theta[right - 1] = advance(x0, theta0, grid.point(right - 1))?;
        for i in (0..right - 1).rev() {
            theta[i] = advance(grid.point(i + 1), theta[i + 1], grid.point(i))?;
        }
    }
    let z: Vec<T> = theta
        .iter()
        .map(|&t| if t <= T::zero() { T::zero() } else if t >= T::FRAC_PI_2() { T::one() } else { t.sin().powi(2) })
        .collect();

    let mut dz = Vec::with_capacity(n);
    let mut d2z = Vec::with_capacity(n);
    let mut clamped = Vec::with_capacity(n);
    for (i, &zi) in z.iter().enumerate() {
        let x = grid.point(i);
        let at_end = zi <= T::zero() || zi >= T::one();
        clamped.push(at_end);
        if at_end {
            dz.push(T::zero());
            d2z.push(T::zero());
            continue;
        }
        let d1 = slope(params, mass, x, zi)?;
        let m = mass.m(x);
        let d2 = mass.m_prime(x) * d1 / (T::lit(2.0) * m) + m * generating_function_slope(params, zi)?;
        if !d2.is_finite() {
            return Err(NatanzonError::StiffBlowup(x.as_f64()));
        }
        dz.push(d1);
        d2z.push(d2);
    }
    Ok(CoordinateMap { grid: *grid, z, dz, d2z, clamped, params: *params, mass: mass.clone() })
}

impl<T: Real> CoordinateMap<T> {
    pub fn grid(&self) -> &Grid<T> {
        &self.grid
    }

    /// Node values of `z`.
    pub fn nodes(&self) -> &[T] {
        &self.z
    }

    /// Smallest and largest sampled `z`.
    pub fn range(&self) -> (T, T) {
        let lo = self.z.iter().copied().fold(T::one(), T::min);
        let hi = self.z.iter().copied().fold(T::zero(), T::max);
        (lo, hi)
    }

    fn locate(&self, x: T) -> (usize, T) {
        let x = x.max(self.grid.x_min()).min(self.grid.x_max());
        let h = self.grid.spacing();
        let last = self.grid.n_points() - 2;
        let k = ((x - self.grid.x_min()) / h).floor().to_usize().unwrap_or(0).min(last);
        (k, (x - self.grid.point(k)) / h)
    }

    /// Quintic Hermite value and first two derivatives at `x`, clamped to the grid.
    fn hermite(&self, x: T) -> (T, T, T) {
        let (k, t) = self.locate(x);
        let h = self.grid.spacing();
        let (p0, p1) = (self.z[k], self.z[k + 1]);
        let (v0, v1) = (self.dz[k] * h, self.dz[k + 1] * h);
        let (a0, a1) = (self.d2z[k] * h * h, self.d2z[k + 1] * h * h);
        let c = |v: f64| T::lit(v);
        // coefficients in powers of t
        let c3 = c(10.0) * (p1 - p0) - c(6.0) * v0 - c(4.0) * v1 - c(1.5) * a0 + c(0.5) * a1;
        let c4 = c(-15.0) * (p1 - p0) + c(8.0) * v0 + c(7.0) * v1 + c(1.5) * a0 - a1;
        let c5 = c(6.0) * (p1 - p0) - c(3.0) * (v0 + v1) - c(0.5) * a0 + c(0.5) * a1;
        let c2 = c(0.5) * a0;
        let value = p0 + t * (v0 + t * (c2 + t * (c3 + t * (c4 + t * c5))));
        let d1 = v0 + t * (c(2.0) * c2 + t * (c(3.0) * c3 + t * (c(4.0) * c4 + t * c(5.0) * c5)));
        let d2 = c(2.0) * c2 + t * (c(6.0) * c3 + t * (c(12.0) * c4 + t * c(20.0) * c5));
        (value.max(T::zero()).min(T::one()), d1 / h, d2 / (h * h))
    }

    pub fn z(&self, x: T) -> T {
        self.hermite(x).0
    }

    pub fn z_prime(&self, x: T) -> T {
        self.hermite(x).1
    }

    pub fn z_double_prime(&self, x: T) -> T {
        self.hermite(x).2
    }

    /// `sup |z′² − 2m𝔖(z)|` over interval midpoints, skipping intervals
    /// that touch a node clamped to 0 or 1.
    pub fn identity_residual(&self) -> Result<T, NatanzonError> {
        let mut worst = T::zero();
        let h = self.grid.spacing();
        for k in 0..self.grid.n_points() - 1 {
            if self.clamped[k] || self.clamped[k + 1] {
                continue;
            }
            for frac in [0.25, 0.5, 0.75] {
                let x = self.grid.point(k) + h * T::lit(frac);
                let (z, d1, _) = self.hermite(x);
                let s = generating_function(&self.params, z)?;
                let r = (d1 * d1 - T::lit(2.0) * self.mass.m(x) * s).abs();
                worst = worst.max(r);
            }
        }
        Ok(worst)
    }
}
