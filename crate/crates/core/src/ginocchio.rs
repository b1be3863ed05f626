//! The Ginocchio subclass: parameters, the mass coordinate `μ(u)`, the
//! hyperbolic and polynomial potential forms and the closed-form spectrum.
//!
//! The auxiliary variable is `u`, related to the Natanzon variable by
//! `z = tanh²u`.

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::mass::{MassError, MassProfile};
use crate::natanzon::{mass_correction_terms, NatanzonParams, OrderingParams};
use crate::numerics::{find_root, integrate, integrate_with, EndpointSingularity, Grid, NumericsError, QuadOptions};
use crate::scalar::Real;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GinocchioError {
    #[error("gamma must be positive, got {0}")]
    InvalidGamma(f64),
    #[error("j must be non-negative, got {0}")]
    InvalidJ(f64),
    #[error("level n = {n} exceeds [j] = {max}")]
    IndexOutOfRange { n: u32, max: u32 },
    #[error("z must lie in [0, 1), got {0}")]
    OutOfRange(f64),
    #[error("inverting mu = {mu} did not reach the tolerance (residual {residual})")]
    MaxIterations { mu: f64, residual: f64 },
    #[error(transparent)]
    Mass(#[from] MassError),
    #[error(transparent)]
    Numerics(#[from] NumericsError),
}

/// A Ginocchio configuration `(γ, j)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GinocchioSpec<T> {
    pub gamma: T,
    pub j: T,
}

impl<T: Real> GinocchioSpec<T> {
    pub fn new(gamma: T, j: T) -> Result<Self, GinocchioError> {
        if !(gamma > T::zero() && gamma.is_finite()) {
            return Err(GinocchioError::InvalidGamma(gamma.as_f64()));
        }
        if !(j >= T::zero() && j.is_finite()) {
            return Err(GinocchioError::InvalidJ(j.as_f64()));
        }
        Ok(Self { gamma, j })
    }

    /// `[j]`, the largest admissible level index.
    pub fn max_level(&self) -> u32 {
        self.j.floor().to_u32().unwrap_or(0)
    }
}

/// `c₀ = 1/4γ⁴, a_c = −1/4, p₀ = (1 − γ²)/γ⁴, a_p = (j + ½)² − 1, q₀ = 0, a_q = −7/4`.
pub fn params_for<T: Real>(gamma: T, j: T) -> Result<NatanzonParams<T>, GinocchioError> {
    GinocchioSpec::new(gamma, j)?;
    let g2 = gamma * gamma;
    let g4 = g2 * g2;
    let half = T::lit(0.5);
    Ok(NatanzonParams::new(
        T::lit(0.25) / g4,
        (T::one() - g2) / g4,
        T::zero(),
        -T::lit(0.25),
        (j + half) * (j + half) - T::one(),
        -T::lit(1.75),
    ))
}

/// `y = sinh u/√(γ² + sinh²u)`.
pub fn y_of_u<T: Real>(gamma: T, u: T) -> T {
    let s = u.sinh();
    if s.is_infinite() {
        return s.signum();
    }
    s / (gamma * gamma + s * s).sqrt()
}

/// `asinh(sinh u/γ)`, which equals `arctanh(y)` without cancellation for large `u`.
fn artanh_y<T: Real>(gamma: T, u: T) -> T {
    if u.abs() > T::lit(30.0) {
        // sinh u/γ ≈ e^{|u|}/2γ, so asinh ≈ |u| − ln γ up to e^{−2|u|}
        return u.signum() * (u.abs() - gamma.ln());
    }
    (u.sinh() / gamma).asinh()
}

/// Closed-form mass coordinate
/// `μ = (1/γ²)·arctanh(y) + (√(γ² − 1)/γ²)·arctan(√(γ² − 1)·y)`, continued to
/// `γ < 1` through `arctan(ix) = i·arctanh(x)`.
pub fn mu_closed_form<T: Real>(gamma: T, u: T) -> T {
    if u < T::zero() {
        return -mu_closed_form(gamma, -u);
    }
    let g2 = gamma * gamma;
    let first = artanh_y(gamma, u) / g2;
    let y = y_of_u(gamma, u);
    let k = g2 - T::one();
    let second = if k > T::zero() {
        k.sqrt() / g2 * (k.sqrt() * y).atan()
    } else if k < T::zero() {
        -(-k).sqrt() / g2 * ((-k).sqrt() * y).atanh()
    } else {
        T::zero()
    };
    first + second
}

/// `dμ/du = √(γ² + sinh²u)/(γ² cosh u)`.
pub fn mu_derivative<T: Real>(gamma: T, u: T) -> T {
    let g2 = gamma * gamma;
    let t = u.tanh();
    let c2 = T::one() / (T::one() - t * t).max(T::min_positive_value());
    // √(γ² + sinh²u)/cosh u = √(γ²/cosh²u + tanh²u)
    (g2 / c2 + t * t).sqrt() / g2
}

/// `(1/2γ²)·∫₀^z ds/(1 − s)·√(1 − γ² + γ²/s)` by adaptive quadrature with the
/// substitution `s = t²` at the lower end.
pub fn mass_integral<T: Real>(gamma: T, z: T) -> Result<T, GinocchioError> {
    GinocchioSpec::new(gamma, T::zero())?;
    if !(z >= T::zero() && z < T::one()) {
        return Err(GinocchioError::OutOfRange(z.as_f64()));
    }
    if z == T::zero() {
        return Ok(T::zero());
    }
    let g2 = gamma * gamma;
    // multiplying through by √s keeps the integrand finite after the substitution
    let f = |s: T| ((T::one() - g2) * s + g2).max(T::zero()).sqrt() / ((T::one() - s) * s.sqrt());
    let tol = T::lit(1e-13).max(T::epsilon() * T::lit(64.0));
    let value = integrate_with(f, T::zero(), z, QuadOptions::with_tol(tol).singular_at(EndpointSingularity::Lower))?;
    Ok(value / (T::lit(2.0) * g2))
}

/// Solves `mu_closed_form(γ, u) = mu` for `u`, using monotonicity to bracket.
pub fn invert_mu<T: Real>(gamma: T, mu: T, tol: T) -> Result<T, GinocchioError> {
    GinocchioSpec::new(gamma, T::zero())?;
    if mu == T::zero() {
        return Ok(T::zero());
    }
    let target = mu.abs();
    let mut hi = T::one();
    let mut guard = 0;
    while mu_closed_form(gamma, hi) < target {
        hi *= T::lit(2.0);
        guard += 1;
        if guard > 64 || !hi.is_finite() {
            return Err(GinocchioError::MaxIterations { mu: mu.as_f64(), residual: f64::INFINITY });
        }
    }
    // |dμ/du| is bounded below by min(1/γ, 1/γ²), which converts a μ-tolerance into a u-tolerance
    let slope_floor = (T::one() / gamma).min(T::one() / (gamma * gamma));
    let u_tol = (tol * slope_floor * T::lit(0.5)).max(T::epsilon() * hi);
    let u = find_root(|u| mu_closed_form(gamma, u) - target, T::zero(), hi, u_tol)?;
    let residual = (mu_closed_form(gamma, u) - target).abs();
    if residual > tol.max(T::lit(8.0) * T::epsilon() * target) {
        return Err(GinocchioError::MaxIterations { mu: mu.as_f64(), residual: residual.as_f64() });
    }
    Ok(u * mu.signum())
}

/// Hyperbolic form
/// `−γ⁴[j(j+1) − γ² + 1]/D − (3/4)γ⁴(3γ² − 1)(γ² − 1)/D² + (5/4)γ⁶(γ² − 1)²/D³`, `D = γ² + sinh²u`.
pub fn v_hyperbolic<T: Real>(gamma: T, j: T, u: T) -> T {
    let g2 = gamma * gamma;
    let g4 = g2 * g2;
    let s = u.sinh();
    let d = g2 + s * s;
    if d.is_infinite() {
        return T::zero();
    }
    let k = g2 - T::one();
    -g4 * (j * (j + T::one()) - g2 + T::one()) / d - T::lit(0.75) * g4 * (T::lit(3.0) * g2 - T::one()) * k / (d * d)
        + T::lit(1.25) * g4 * g2 * k * k / (d * d * d)
}

/// Polynomial form `[−γ²j(j+1) + ((1 − γ²)/4)(2 − (7 − γ²)y² + 5(1 − γ²)y⁴)]·(1 − y²)`.
pub fn v_polynomial<T: Real>(gamma: T, j: T, y: T) -> T {
    let g2 = gamma * gamma;
    let y2 = y * y;
    let k = T::one() - g2;
    let inner = T::lit(2.0) - (T::lit(7.0) - g2) * y2 + T::lit(5.0) * k * y2 * y2;
    (-g2 * j * (j + T::one()) + k / T::lit(4.0) * inner) * (T::one() - y2)
}

/// `−[√((1 − γ²)(2n + ½)² + γ²(j + ½)²) − (2n + ½)]²`, evaluated as printed.
pub fn spectrum_closed_form<T: Real>(gamma: T, j: T, n: u32) -> Result<T, GinocchioError> {
    let spec = GinocchioSpec::new(gamma, j)?;
    if n > spec.max_level() {
        return Err(GinocchioError::IndexOutOfRange { n, max: spec.max_level() });
    }
    let g2 = gamma * gamma;
    let half = T::lit(0.5);
    let a = T::lit(2.0) * T::from_u32(n).expect("small integer") + half;
    let b = j + half;
    let root = ((T::one() - g2) * a * a + g2 * b * b).sqrt();
    Ok(-(root - a) * (root - a))
}

/// All closed-form levels `n = 0..=[j]`.
pub fn spectrum_levels<T: Real>(gamma: T, j: T) -> Result<Vec<T>, GinocchioError> {
    let spec = GinocchioSpec::new(gamma, j)?;
    (0..=spec.max_level()).map(|n| spectrum_closed_form(gamma, j, n)).collect()
}

/// How the mass terms enter the total potential.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
pub enum AssemblyVariant {
    /// `V + Um`
    #[default]
    #[serde(rename = "v+um")]
    VPlusUm,
    /// `V − Um`
    #[serde(rename = "v-um")]
    VMinusUm,
    /// `V + Um + Vm`
    #[serde(rename = "v+um+vm")]
    VPlusUmPlusVm,
    /// `V`
    #[serde(rename = "v")]
    VAlone,
}

impl AssemblyVariant {
    pub const ALL: [AssemblyVariant; 4] =
        [AssemblyVariant::VPlusUm, AssemblyVariant::VMinusUm, AssemblyVariant::VPlusUmPlusVm, AssemblyVariant::VAlone];

    pub fn tag(self) -> &'static str {
        match self {
            AssemblyVariant::VPlusUm => "v+um",
            AssemblyVariant::VMinusUm => "v-um",
            AssemblyVariant::VPlusUmPlusVm => "v+um+vm",
            AssemblyVariant::VAlone => "v",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|v| v.tag() == tag)
    }

    fn combine<T: Real>(self, v: T, um: T, vm: T) -> T {
        match self {
            AssemblyVariant::VPlusUm => v + um,
            AssemblyVariant::VMinusUm => v - um,
            AssemblyVariant::VPlusUmPlusVm => v + um + vm,
            AssemblyVariant::VAlone => v,
        }
    }
}

/// One sampled point of the assembled potential.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PotentialRow<T> {
    pub x: T,
    pub m: T,
    pub mu: T,
    pub u: T,
    pub z: T,
    pub v_hyp: T,
    pub v_poly: T,
    pub um: T,
    pub vm: T,
    pub v_total: T,
}

/// `μ(x) = ∫₀ˣ √(2m(y)) dy` at every grid node, accumulated segment by segment.
pub fn mass_coordinate<T: Real>(mass: &MassProfile<T>, grid: &Grid<T>) -> Result<Vec<T>, GinocchioError> {
    mass.check_positive(grid)?;
    let two = T::lit(2.0);
    if mass.is_constant() {
        let k = (two * mass.m(T::zero())).sqrt();
        return Ok(grid.points().map(|x| k * x).collect());
    }
    let f = |y: T| (two * mass.m(y)).sqrt();
    let tol = T::lit(1e-13).max(T::epsilon() * T::lit(64.0));
    let n = grid.n_points();
    let xs: Vec<T> = grid.points().collect();
    // first node at or right of the origin
    let pivot = xs.iter().position(|&x| x >= T::zero()).unwrap_or(n - 1);
    let mut mu = vec![T::zero(); n];
    mu[pivot] = integrate(f, T::zero(), xs[pivot], tol)?;
    for i in pivot + 1..n {
        mu[i] = mu[i - 1] + integrate(f, xs[i - 1], xs[i], tol)?;
    }
    if pivot > 0 {
        mu[pivot - 1] = integrate(f, T::zero(), xs[pivot - 1], tol)?;
        for i in (0..pivot - 1).rev() {
            mu[i] = mu[i + 1] + integrate(f, xs[i + 1], xs[i], tol)?;
        }
    }
    Ok(mu)
}

/// Samples the full position-dependent-mass potential on `grid`:
/// `μ(x)` by quadrature from `x₀ = 0`, `u = μ⁻¹`, the hyperbolic potential at
/// `u` and the mass terms at `x`, combined according to `assembly`.
pub fn potential_on_x_grid<T: Real>(
    spec: &GinocchioSpec<T>,
    mass: &MassProfile<T>,
    ordering: &OrderingParams<T>,
    grid: &Grid<T>,
    assembly: AssemblyVariant,
) -> Result<Vec<PotentialRow<T>>, GinocchioError> {
    let (gamma, j) = (spec.gamma, spec.j);
    let mu = mass_coordinate(mass, grid)?;
    let tol = T::lit(1e-13).max(T::epsilon() * T::lit(64.0));
    (0..grid.n_points())
        .into_par_iter()
        .map(|i| {
            let x = grid.point(i);
            let u = if gamma == T::one() { mu[i] } else { invert_mu(gamma, mu[i], tol)? };
            let t = u.tanh();
            let v_hyp = v_hyperbolic(gamma, j, u);
            let corr = mass_correction_terms(mass, ordering, x);
            Ok(PotentialRow {
                x,
                m: mass.m(x),
                mu: mu[i],
                u,
                z: t * t,
                v_hyp,
                v_poly: v_polynomial(gamma, j, y_of_u(gamma, u)),
                um: corr.um,
                vm: corr.vm,
                v_total: assembly.combine(v_hyp, corr.um, corr.vm),
            })
        })
        .collect()
}
