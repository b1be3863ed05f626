//! First-order differential realization of su(1,1).
//!
//! Generators act on angular sectors `e^{imφ}·u(x)`:
//! `J₀ = −i∂_φ` multiplies by `m`, and
//! `J± = e^{±iφ}[±h∂ₓ ± g + f·J₀ + c]` with
//! `f = (1 + aξ²)/(1 − aξ²)` and `c = δξ/(1 − aξ²)`.
//! With `h = ξ/ξ′` one finds `h·c′ − f·c = 0` and `f² − h·f′ = 1`; the
//! latter constant is exactly what makes `[J₊, J₋] = −2J₀` hold.

use std::sync::Arc;

use thiserror::Error;

use crate::mass::MassProfile;
use crate::numerics::{derivative, DerivativeOrder, Grid};
use crate::scalar::Real;
use crate::smooth::{RealFn, SmoothFn};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AlgebraError {
    #[error("singular point at x = {x}: {what}")]
    SingularPoint { x: f64, what: &'static str },
    #[error("state must occupy exactly one angular sector, found {0}")]
    SectorMismatch(usize),
    #[error("labels do not match the state or realization: {0}")]
    LabelMismatch(String),
    #[error("c + 1/4 = {0} is negative")]
    NegativeDiscriminant(f64),
    #[error("closed-form Casimir requires a = 1, got a = {0}")]
    RequiresUnitA(f64),
}

/// `j₀ = n + 1/2 + √(c + 1/4)`.
pub fn allowed_j0<T: Real>(n: u32, c: T) -> Result<T, AlgebraError> {
    let disc = c + T::lit(0.25);
    if disc < T::zero() {
        return Err(AlgebraError::NegativeDiscriminant(disc.as_f64()));
    }
    Ok(T::from_u32(n).expect("small integer") + T::lit(0.5) + disc.sqrt())
}

/// Discrete-series labels `|j, j₀⟩` together with the constant `δ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GroupLabels<T> {
    pub j: T,
    pub j0: T,
    pub n: u32,
    pub c: T,
    pub delta: T,
}

impl<T: Real> GroupLabels<T> {
    /// Labels with `c = j(j + 1)` and `j₀` from the allowed-values rule.
    pub fn from_quantum_numbers(j: T, n: u32, delta: T) -> Result<Self, AlgebraError> {
        let c = j * (j + T::one());
        Ok(Self { j, j0: allowed_j0(n, c)?, n, c, delta })
    }

    /// Labels with an explicitly chosen weight `j₀`.
    pub fn with_weight(j: T, j0: T, delta: T) -> Self {
        Self { j, j0, n: 0, c: j * (j + T::one()), delta }
    }

    /// `t = (δ − 2j₀)²/4 = p + 1`.
    pub fn t(&self) -> T {
        (self.delta - T::lit(2.0) * self.j0).powi(2) / T::lit(4.0)
    }

    /// `r = (δ + 2j₀)²/4 = q + 2`.
    pub fn r(&self) -> T {
        (self.delta + T::lit(2.0) * self.j0).powi(2) / T::lit(4.0)
    }

    pub fn p(&self) -> T {
        self.t() - T::one()
    }

    pub fn q(&self) -> T {
        self.r() - T::lit(2.0)
    }
}

/// One angular component `e^{i·sector·φ} u(x)`.
fn same_sector<T: Real>(a: T, b: T) -> bool {
    (a - b).abs() <= T::lit(64.0) * T::epsilon() * T::one().max(a.abs())
}

#[derive(Clone)]
pub struct SectorFunction<T> {
    pub sector: T,
    pub profile: RealFn<T>,
}

/// Finite superposition of angular sectors.
#[derive(Clone, Default)]
pub struct AngularState<T> {
    components: Vec<SectorFunction<T>>,
}

impl<T: Real> AngularState<T> {
    pub fn single(sector: T, profile: impl Fn(T) -> T + Send + Sync + 'static) -> Self {
        Self { components: vec![SectorFunction { sector, profile: Arc::new(profile) }] }
    }

    pub fn zero(sector: T) -> Self {
        Self::single(sector, |_| T::zero())
    }

    pub fn components(&self) -> &[SectorFunction<T>] {
        &self.components
    }

    pub fn sector(&self) -> Result<T, AlgebraError> {
        match self.components.as_slice() {
            [only] => Ok(only.sector),
            other => Err(AlgebraError::SectorMismatch(other.len())),
        }
    }

    /// `self + scale·other`, merging equal sectors. Sectors differ by whole
    /// numbers, so labels that agree up to rounding (`m + 1 − 1` versus `m`)
    /// are the same sector.
    pub fn add_scaled(&self, other: &Self, scale: T) -> Self {
        let mut components = self.components.clone();
        for oc in &other.components {
            let theirs = oc.profile.clone();
            match components.iter_mut().find(|c| same_sector(c.sector, oc.sector)) {
                Some(mine) => {
                    let ours = mine.profile.clone();
                    mine.profile = Arc::new(move |x| ours(x) + scale * theirs(x));
                }
                None => components.push(SectorFunction { sector: oc.sector, profile: Arc::new(move |x| scale * theirs(x)) }),
            }
        }
        Self { components }
    }

    pub fn scaled(&self, scale: T) -> Self {
        Self::default().add_scaled(self, scale)
    }

    /// Largest `|u(x)|` over all components and grid nodes.
    pub fn sup_norm(&self, grid: &Grid<T>) -> T {
        self.components
            .iter()
            .flat_map(|c| grid.points().map(move |x| (c.profile)(x).abs()))
            .fold(T::zero(), T::max)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    Raise,
    Lower,
    Weight,
}

/// Realization data: the map `ξ(x)`, integration constants `a`, `δ`, the
/// ∂ₓ coefficient `h` (default `ξ/ξ′`), the weight scale `σ` and a mass.
#[derive(Clone, Debug)]
pub struct Su11Realization<T> {
    pub xi: SmoothFn<T>,
    pub a: T,
    pub delta: T,
    pub h_choice: Option<SmoothFn<T>>,
    pub sigma: T,
    pub mass: MassProfile<T>,
    /// Step of the central differences applied to states.
    pub fd_step: T,
}

impl<T: Real> Su11Realization<T> {
    pub fn new(xi: SmoothFn<T>, delta: T) -> Self {
        Self {
            xi,
            a: T::one(),
            delta,
            h_choice: None,
            sigma: T::one(),
            mass: MassProfile::unit(),
            fd_step: T::lit(1e-3),
        }
    }

    pub fn with_mass(mut self, mass: MassProfile<T>) -> Self {
        self.mass = mass;
        self
    }

    pub fn with_sigma(mut self, sigma: T) -> Self {
        self.sigma = sigma;
        self
    }

    pub fn with_a(mut self, a: T) -> Self {
        self.a = a;
        self
    }

    pub fn with_h(mut self, h: SmoothFn<T>) -> Self {
        self.h_choice = Some(h);
        self
    }

    fn denominator(&self, x: T) -> Result<(T, T), AlgebraError> {
        let xi = self.xi.value(x);
        let den = T::one() - self.a * xi * xi;
        if den == T::zero() || !den.is_finite() {
            return Err(AlgebraError::SingularPoint { x: x.as_f64(), what: "1 − aξ² = 0" });
        }
        Ok((xi, den))
    }

    /// `(f, c)` at `x`.
    pub fn su11_functions(&self, x: T) -> Result<(T, T), AlgebraError> {
        let (xi, den) = self.denominator(x)?;
        Ok(((T::one() + self.a * xi * xi) / den, self.delta * xi / den))
    }

    /// Coefficient of ∂ₓ in `J±`.
    pub fn h(&self, x: T) -> T {
        match &self.h_choice {
            Some(h) => h.value(x),
            None => self.xi.value(x) / self.xi.d1(x),
        }
    }

    /// `g = (2 − ξ²)/(1 − ξ²) − 3ξξ″/(2ξ′²) + m′ξ/(2mξ′)`.
    pub fn g_weight(&self, x: T) -> Result<T, AlgebraError> {
        let xi = self.xi.value(x);
        let d1 = self.xi.d1(x);
        let d2 = self.xi.d2(x);
        let den = T::one() - xi * xi;
        if den == T::zero() {
            return Err(AlgebraError::SingularPoint { x: x.as_f64(), what: "1 − ξ² = 0" });
        }
        if d1 == T::zero() {
            return Err(AlgebraError::SingularPoint { x: x.as_f64(), what: "ξ′ = 0" });
        }
        let m = self.mass.m(x);
        if !(m > T::zero()) {
            return Err(AlgebraError::SingularPoint { x: x.as_f64(), what: "m ≤ 0" });
        }
        let two = T::lit(2.0);
        Ok((two - xi * xi) / den - T::lit(3.0) * xi * d2 / (two * d1 * d1)
            + self.mass.m_prime(x) * xi / (two * m * d1))
    }

    fn f_or_nan(&self, x: T) -> T {
        self.su11_functions(x).map(|p| p.0).unwrap_or(T::nan())
    }

    fn c_or_nan(&self, x: T) -> T {
        self.su11_functions(x).map(|p| p.1).unwrap_or(T::nan())
    }

    fn g_or_nan(&self, x: T) -> T {
        self.g_weight(x).unwrap_or(T::nan())
    }

    /// Pointwise residuals `f² − h·f′` and `h·c′ − f·c` on the grid.
    pub fn constraint_residuals(&self, grid: &Grid<T>) -> Result<(Vec<T>, Vec<T>), AlgebraError> {
        let mut res_a = Vec::with_capacity(grid.n_points());
        let mut res_b = Vec::with_capacity(grid.n_points());
        for x in grid.points() {
            let (f, c) = self.su11_functions(x)?;
            let h = self.h(x);
            let fp = derivative(|t| self.f_or_nan(t), x, DerivativeOrder::First, self.fd_step);
            let cp = derivative(|t| self.c_or_nan(t), x, DerivativeOrder::First, self.fd_step);
            res_a.push(f * f - h * fp);
            res_b.push(h * cp - f * c);
        }
        Ok((res_a, res_b))
    }

    /// The state `ψ = 2σ m ξ²/ξ′² · φ` in the given sector.
    pub fn weighted_state(&self, sector: T, phi: impl Fn(T) -> T + Send + Sync + 'static) -> AngularState<T> {
        let (xi, mass, sigma) = (self.xi.clone(), self.mass.clone(), self.sigma);
        AngularState::single(sector, move |x| {
            let ratio = xi.value(x) / xi.d1(x);
            T::lit(2.0) * sigma * mass.m(x) * ratio * ratio * phi(x)
        })
    }

    pub fn ladder_apply(&self, which: Generator, psi: &AngularState<T>) -> Result<AngularState<T>, AlgebraError> {
        let m = psi.sector()?;
        let u = psi.components[0].profile.clone();
        match which {
            Generator::Weight => Ok(AngularState::single(m, move |x| m * u(x))),
            Generator::Raise | Generator::Lower => {
                let sign = if which == Generator::Raise { T::one() } else { -T::one() };
                let this = self.clone();
                let step = self.fd_step;
                Ok(AngularState::single(m + sign, move |x| {
                    let du = derivative(|t| u(t), x, DerivativeOrder::First, step);
                    let ux = u(x);
                    sign * (this.h(x) * du + this.g_or_nan(x) * ux) + (this.f_or_nan(x) * m + this.c_or_nan(x)) * ux
                }))
            }
        }
    }

    fn apply_chain(&self, ops: &[Generator], psi: &AngularState<T>) -> Result<AngularState<T>, AlgebraError> {
        // rightmost operator acts first
        ops.iter().rev().try_fold(psi.clone(), |state, op| self.ladder_apply(*op, &state))
    }

    fn relative(&self, residual: &AngularState<T>, psi: &AngularState<T>, grid: &Grid<T>) -> T {
        let norm = psi.sup_norm(grid);
        if norm == T::zero() {
            T::zero()
        } else {
            residual.sup_norm(grid) / norm
        }
    }

    /// `(‖([J₊,J₋] + 2J₀)ψ‖, max± ‖([J₀,J±] ∓ J±)ψ‖)`, both relative to `‖ψ‖`.
    pub fn commutator_residual(&self, psi: &AngularState<T>, grid: &Grid<T>) -> Result<(T, T), AlgebraError> {
        use Generator::*;
        let pm = self.apply_chain(&[Raise, Lower], psi)?;
        let mp = self.apply_chain(&[Lower, Raise], psi)?;
        let j0 = self.ladder_apply(Weight, psi)?;
        let first = pm.add_scaled(&mp, -T::one()).add_scaled(&j0, T::lit(2.0));
        let mut second = T::zero();
        for (op, sign) in [(Raise, T::one()), (Lower, -T::one())] {
            let a = self.apply_chain(&[Weight, op], psi)?;
            let b = self.apply_chain(&[op, Weight], psi)?;
            let single = self.ladder_apply(op, psi)?;
            let r = a.add_scaled(&b, -T::one()).add_scaled(&single, -sign);
            second = second.max(self.relative(&r, psi, grid));
        }
        Ok((self.relative(&first, psi, grid), second))
    }

    /// Closed-form Casimir in the sector `j₀`, acting on the profile `u`.
    fn casimir_closed_form(&self, j0: T, u: RealFn<T>) -> RealFn<T> {
        let this = self.clone();
        Arc::new(move |x: T| {
            let step = this.fd_step;
            let xi = this.xi.value(x);
            let d1 = this.xi.d1(x);
            let d2 = this.xi.d2(x);
            let ratio = xi / d1;
            let s = xi * xi;
            let den = T::one() - s;
            let g = this.g_or_nan(x);
            let gp = derivative(|t| this.g_or_nan(t), x, DerivativeOrder::First, step);
            let du = derivative(|t| u(t), x, DerivativeOrder::First, step);
            let ddu = derivative(|t| u(t), x, DerivativeOrder::Second, step);
            let two = T::lit(2.0);
            let delta = this.delta;
            let first = ratio * (two * g - xi * d2 / (d1 * d1) - two * s / den);
            let zeroth = ratio * gp + g * g - (T::one() + s) / den * g
                - xi * (delta + two * j0 * xi) * (two * j0 + delta * xi) / (den * den);
            ratio * ratio * ddu + first * du + zeroth * u(x)
        })
    }

    /// `‖(C_ladder − C_closed)ψ‖/‖ψ‖` with `C_ladder = J₀² − J₀ − J₊J₋`.
    pub fn casimir_residual(
        &self,
        labels: &GroupLabels<T>,
        psi: &AngularState<T>,
        grid: &Grid<T>,
    ) -> Result<T, AlgebraError> {
        use Generator::*;
        if self.a != T::one() {
            return Err(AlgebraError::RequiresUnitA(self.a.as_f64()));
        }
        let sector = psi.sector()?;
        if sector != labels.j0 {
            return Err(AlgebraError::LabelMismatch(format!("state sector {sector} but j0 = {}", labels.j0)));
        }
        if labels.delta != self.delta {
            return Err(AlgebraError::LabelMismatch(format!("δ = {} in labels, {} in realization", labels.delta, self.delta)));
        }
        let ladder = self
            .apply_chain(&[Weight, Weight], psi)?
            .add_scaled(&self.ladder_apply(Weight, psi)?, -T::one())
            .add_scaled(&self.apply_chain(&[Raise, Lower], psi)?, -T::one());
        let closed = AngularState {
            components: vec![SectorFunction { sector, profile: self.casimir_closed_form(sector, psi.components[0].profile.clone()) }],
        };
        Ok(self.relative(&ladder.add_scaled(&closed, -T::one()), psi, grid))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gaussian(center: f64, width: f64) -> impl Fn(f64) -> f64 + Send + Sync + Clone {
        move |x: f64| (-(x - center).powi(2) / (2.0 * width * width)).exp()
    }

    fn working_grid() -> Grid<f64> {
        // |tanh x| ≤ 0.9 for |x| ≤ 1.47
        Grid::new(-1.4, 1.4, 57).unwrap()
    }

    #[test]
    fn su11_function_examples() {
        let r = Su11Realization::new(SmoothFn::constant(0.0), 3.0);
        assert_eq!(r.su11_functions(0.2).unwrap(), (1.0, 0.0));
        let r = Su11Realization::new(SmoothFn::constant(0.5_f64), 2.0);
        let (f, c) = r.su11_functions(0.0).unwrap();
        assert!((f - 5.0 / 3.0).abs() < 1e-15 && (c - 4.0 / 3.0).abs() < 1e-15);
        let r = Su11Realization::new(SmoothFn::identity(), 1.0).with_a(0.0);
        assert_eq!(r.su11_functions(0.37).unwrap(), (1.0, 0.37));
        let r = Su11Realization::new(SmoothFn::constant(1.0), 1.0);
        assert!(matches!(r.su11_functions(0.0), Err(AlgebraError::SingularPoint { .. })));
    }

    #[test]
    fn constraint_residuals_with_default_h() {
        let r = Su11Realization::new(SmoothFn::tanh(), 0.7);
        let (res_a, res_b) = r.constraint_residuals(&working_grid()).unwrap();
        assert!(res_b.iter().all(|v| v.abs() <= 1e-8));
        // f² − (ξ/ξ′)f′ ≡ 1
        assert!(res_a.iter().all(|v| (v - 1.0).abs() <= 1e-8));
        let r = Su11Realization::new(SmoothFn::tanh(), 0.0);
        let (_, res_b) = r.constraint_residuals(&working_grid()).unwrap();
        assert!(res_b.iter().all(|v| *v == 0.0));
    }

    #[test]
    fn g_weight_examples() {
        let r = Su11Realization::new(SmoothFn::identity(), 0.0);
        assert_eq!(r.g_weight(0.0).unwrap(), 2.0);
        let exp_mass = MassProfile::new(
            "exp",
            SmoothFn::analytic(|x: f64| (2.0 * x).exp(), |x| 2.0 * (2.0 * x).exp(), |x| 4.0 * (2.0 * x).exp(), |x| 8.0 * (2.0 * x).exp()),
        );
        let r = Su11Realization::new(SmoothFn::identity(), 0.0).with_mass(exp_mass);
        assert_eq!(r.g_weight(0.0).unwrap(), 2.0);
        // tanh with closed-form derivatives written out by hand
        let x = 0.5_f64;
        let (t, s2) = (x.tanh(), 1.0 / x.cosh().powi(2));
        let expected = (2.0 - t * t) / (1.0 - t * t) - 3.0 * t * (-2.0 * t * s2) / (2.0 * s2 * s2);
        let r = Su11Realization::new(SmoothFn::tanh(), 0.0);
        assert!((r.g_weight(x).unwrap() - expected).abs() < 1e-8);
    }

    #[test]
    fn weight_generator_is_diagonal() {
        let r = Su11Realization::new(SmoothFn::tanh(), 0.0);
        let psi = AngularState::single(3.0, gaussian(0.0, 0.4));
        let out = r.ladder_apply(Generator::Weight, &psi).unwrap();
        assert_eq!(out.sector().unwrap(), 3.0);
        for x in [-0.5, 0.0, 0.3] {
            assert_eq!((out.components()[0].profile)(x), 3.0 * gaussian(0.0, 0.4)(x));
        }
        let up = r.ladder_apply(Generator::Raise, &psi).unwrap();
        assert_eq!(up.sector().unwrap(), 4.0);
        let down = r.ladder_apply(Generator::Lower, &psi).unwrap();
        assert_eq!(down.sector().unwrap(), 2.0);
    }

    #[test]
    fn rounding_in_sector_labels_is_merged() {
        let grid = working_grid();
        let r = Su11Realization::new(SmoothFn::tanh(), 0.62);
        // 1.287491999962058 − 1 + 1 differs from the original in the last bit
        let psi = AngularState::single(1.287491999962058, gaussian(-0.15, 0.39));
        let (res1, _) = r.commutator_residual(&psi, &grid).unwrap();
        assert!(res1 <= 1e-6, "res1 = {res1}");
    }

    #[test]
    fn multi_sector_state_rejected() {
        let r = Su11Realization::new(SmoothFn::tanh(), 0.0);
        let psi = AngularState::single(1.0, gaussian(0.0, 0.4)).add_scaled(&AngularState::single(2.0, gaussian(0.0, 0.4)), 1.0);
        assert_eq!(r.ladder_apply(Generator::Raise, &psi).err(), Some(AlgebraError::SectorMismatch(2)));
    }

    #[test]
    fn commutation_relations() {
        let grid = working_grid();
        for delta in [0.0, 0.6] {
            let r = Su11Realization::new(SmoothFn::tanh(), delta);
            let psi = AngularState::single(1.5, gaussian(0.1, 0.35));
            let (res1, res2) = r.commutator_residual(&psi, &grid).unwrap();
            assert!(res2 <= 1e-6, "res2 = {res2}");
            assert!(res1 <= 1e-6, "res1 = {res1}");
        }
        let r = Su11Realization::new(SmoothFn::tanh(), 0.0);
        assert_eq!(r.commutator_residual(&AngularState::zero(1.0), &grid).unwrap(), (0.0, 0.0));
    }

    #[test]
    fn weight_raise_commutator_on_gaussian() {
        // [J₀, J₊]ψ − J₊ψ
        let grid = working_grid();
        let r = Su11Realization::new(SmoothFn::tanh(), 0.0);
        let psi = AngularState::single(0.0, gaussian(0.0, 0.4));
        let lhs = r.apply_chain(&[Generator::Weight, Generator::Raise], &psi).unwrap();
        let rhs = r.apply_chain(&[Generator::Raise, Generator::Weight], &psi).unwrap();
        let up = r.ladder_apply(Generator::Raise, &psi).unwrap();
        let res = lhs.add_scaled(&rhs, -1.0).add_scaled(&up, -1.0);
        assert!(res.sup_norm(&grid) <= 1e-8);
    }

    #[test]
    fn casimir_closed_form_matches_ladder_composition() {
        let grid = working_grid();
        let mass = MassProfile::rational(2.0).unwrap();
        for (delta, j0) in [(0.0, 0.0), (0.4, 2.5), (-0.3, 1.0)] {
            let r = Su11Realization::new(SmoothFn::tanh(), delta).with_mass(mass.clone());
            let labels = GroupLabels::with_weight(1.0, j0, delta);
            let psi = r.weighted_state(j0, gaussian(-0.1, 0.3));
            let res = r.casimir_residual(&labels, &psi, &grid).unwrap();
            assert!(res <= 1e-6, "δ={delta}, j0={j0}: {res}");
        }
        let r = Su11Realization::new(SmoothFn::tanh(), 0.0);
        let labels = GroupLabels::with_weight(0.0, 0.0, 0.0);
        assert_eq!(r.casimir_residual(&labels, &AngularState::zero(0.0), &grid).unwrap(), 0.0);
    }

    #[test]
    fn casimir_requires_unit_a_and_matching_labels() {
        let grid = working_grid();
        let r = Su11Realization::new(SmoothFn::tanh(), 0.0).with_a(0.5);
        let labels = GroupLabels::with_weight(0.0, 1.0, 0.0);
        let psi = AngularState::single(1.0, gaussian(0.0, 0.3));
        assert!(matches!(r.casimir_residual(&labels, &psi, &grid), Err(AlgebraError::RequiresUnitA(_))));
        let r = Su11Realization::new(SmoothFn::tanh(), 0.0);
        let psi = AngularState::single(2.0, gaussian(0.0, 0.3));
        assert!(matches!(r.casimir_residual(&labels, &psi, &grid), Err(AlgebraError::LabelMismatch(_))));
    }

    #[test]
    fn residuals_do_not_depend_on_sigma() {
        let grid = working_grid();
        let labels = GroupLabels::with_weight(1.0, 1.5, 0.2);
        let run = |sigma: f64| {
            let r = Su11Realization::new(SmoothFn::tanh(), 0.2).with_sigma(sigma);
            let psi = r.weighted_state(1.5, gaussian(0.0, 0.3));
            let (a, b) = r.commutator_residual(&psi, &grid).unwrap();
            (a, b, r.casimir_residual(&labels, &psi, &grid).unwrap())
        };
        let (one, three) = (run(1.0), run(3.0));
        // the residuals are themselves differencing noise, so they agree at that floor
        for (x, y) in [(one.0, three.0), (one.1, three.1), (one.2, three.2)] {
            assert!((x - y).abs() <= 1e-8, "{x} vs {y}");
        }
        // a power-of-two σ rescales every intermediate exactly
        let four = run(4.0);
        assert_eq!(one, four);
    }

    #[test]
    fn allowed_weights() {
        assert_eq!(allowed_j0(0, 0.0).unwrap(), 1.0);
        assert_eq!(allowed_j0(2, 6.0).unwrap(), 5.0);
        assert_eq!(allowed_j0(0, -0.25).unwrap(), 0.5);
        assert!(matches!(allowed_j0(0, -1.0), Err(AlgebraError::NegativeDiscriminant(_))));
    }

    #[test]
    fn labels_feed_discrete_series_coefficients() {
        let l = GroupLabels::from_quantum_numbers(2.0, 1, 0.5).unwrap();
        assert_eq!(l.c, 6.0);
        assert_eq!(l.j0, 4.0);
        assert!((l.p() - ((0.5 - 8.0_f64).powi(2) / 4.0 - 1.0)).abs() < 1e-14);
        assert!((l.q() - ((0.5 + 8.0_f64).powi(2) / 4.0 - 2.0)).abs() < 1e-14);
    }
}
