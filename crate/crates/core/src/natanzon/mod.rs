//! General Natanzon construction: energy-linear coefficients, the quadratic
//! `R(z)`, the generating function `𝔖 = z′²/2m = 4z²(1−z)²/R(z)`, the
//! potential in the variable `z ∈ [0, 1]`, the position-dependent-mass
//! correction terms and the quantization condition.

mod coordinate;
mod poly;

pub use coordinate::{solve_coordinate_map, CoordinateMap};

use serde::Serialize;
use thiserror::Error;

use crate::mass::MassProfile;
use crate::numerics::{find_root, NumericsError};
use crate::scalar::Real;
use poly::{Poly, Rational};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum NatanzonError {
    #[error("R(z) vanishes at z = {0}")]
    RZero(f64),
    #[error("R(z) is not positive on (0, 1): {0}")]
    InvalidParams(String),
    #[error("no sign assignment keeps the radicands non-negative at E = {energy} (q+2 = {q2}, p+1 = {p1}, 4c+1 = {c4})")]
    BranchViolation { energy: f64, q2: f64, p1: f64, c4: f64 },
    #[error("ordering parameters must satisfy η + ε + ρ = −1, got η = {eta}, ε = {epsilon}, ρ = {rho}")]
    InvalidOrdering { eta: f64, epsilon: f64, rho: f64 },
    #[error("z must lie in [0, 1], got {0}")]
    OutOfRange(f64),
    #[error("coordinate map integration blew up near x = {0}")]
    StiffBlowup(f64),
    #[error(transparent)]
    Mass(#[from] crate::mass::MassError),
    #[error(transparent)]
    Numerics(#[from] NumericsError),
}

/// The six real parameters `c₀, p₀, q₀, a_c, a_p, a_q` of the energy-linear
/// coefficients `c = −c₀E + a_c`, `p = −p₀E + a_p`, `q = −q₀E + a_q`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct NatanzonParams<T> {
    pub c0: T,
    pub p0: T,
    pub q0: T,
    pub a_c: T,
    pub a_p: T,
    pub a_q: T,
}

impl<T: Real> NatanzonParams<T> {
    pub fn new(c0: T, p0: T, q0: T, a_c: T, a_p: T, a_q: T) -> Self {
        Self { c0, p0, q0, a_c, a_p, a_q }
    }

    /// `Δ = (4c₀ − p₀ − q₀)² − 4p₀q₀`.
    pub fn discriminant(&self) -> T {
        let b = self.linear_coefficient();
        b * b - T::lit(4.0) * self.p0 * self.q0
    }

    fn linear_coefficient(&self) -> T {
        T::lit(4.0) * self.c0 - self.p0 - self.q0
    }

    fn r_poly(&self) -> Poly<T> {
        Poly(vec![self.q0, self.linear_coefficient(), self.p0])
    }

    /// Checks `R(z) > 0` on the open interval (0, 1).
    pub fn validate(&self) -> Result<(), NatanzonError> {
        let r = self.r_poly();
        let (r0, r1) = (r.eval(T::zero()), r.eval(T::one()));
        let slope = r.derivative();
        let bad = |msg: String| Err(NatanzonError::InvalidParams(msg));
        if r.0.iter().all(|c| *c == T::zero()) {
            return bad("R ≡ 0".into());
        }
        if r0 < T::zero() || r1 < T::zero() {
            return bad(format!("R(0) = {r0}, R(1) = {r1}"));
        }
        if r0 == T::zero() && !(slope.eval(T::zero()) > T::zero()) {
            return bad("R vanishes at 0 without increasing".into());
        }
        if r1 == T::zero() && !(slope.eval(T::one()) < T::zero()) {
            return bad("R vanishes at 1 without decreasing".into());
        }
        if self.p0 > T::zero() {
            let vertex = -self.linear_coefficient() / (T::lit(2.0) * self.p0);
            if vertex > T::zero() && vertex < T::one() && !(r.eval(vertex) > T::zero()) {
                return bad(format!("R({vertex}) = {}", r.eval(vertex)));
            }
        }
        Ok(())
    }

    /// The Natanzon potential as a single cancelled quotient `Num(z)/R(z)³`.
    fn potential_form(&self) -> Rational<T> {
        let r = self.r_poly();
        let four_c = T::lit(4.0) * self.c0 - self.q0;
        let numerator = Poly(vec![self.a_q + T::lit(2.0), -(self.a_p + self.a_q - T::lit(4.0) * self.a_c + T::one()), self.a_p]);
        let bracket = Poly(vec![self.p0 - four_c, T::lit(2.0) * four_c - self.p0, self.p0]);
        let zz = Poly(vec![T::zero(), -T::one(), T::one()]);
        let num = numerator
            .mul(&r)
            .mul(&r)
            .add(&bracket.mul(&zz).mul(&r))
            .add(&zz.mul(&zz).scale(-T::lit(1.25) * self.discriminant()));
        Rational { num, den: r.mul(&r).mul(&r) }.cancel_at(T::zero()).cancel_at(T::one())
    }

    fn generating_form(&self) -> Rational<T> {
        let zz = Poly(vec![T::zero(), T::lit(2.0), -T::lit(2.0)]);
        Rational { num: zz.mul(&zz), den: self.r_poly() }.cancel_at(T::zero()).cancel_at(T::one())
    }
}

/// Coefficients at a fixed energy.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EnergyCoeffs<T> {
    pub energy: T,
    pub c: T,
    pub p: T,
    pub q: T,
}

impl<T: Real> EnergyCoeffs<T> {
    /// `t = p + 1`.
    pub fn t(&self) -> T {
        self.p + T::one()
    }

    /// `r = q + 2`.
    pub fn r(&self) -> T {
        self.q + T::lit(2.0)
    }

    /// Coefficients attached to discrete-series labels.
    pub fn from_labels(energy: T, labels: &crate::algebra::GroupLabels<T>) -> Self {
        Self { energy, c: labels.c, p: labels.p(), q: labels.q() }
    }
}

/// von Roos ordering parameters with `η + ε + ρ = −1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OrderingParams<T> {
    pub eta: T,
    pub epsilon: T,
    pub rho: T,
}

impl<T: Real> OrderingParams<T> {
    pub fn new(eta: T, epsilon: T, rho: T) -> Result<Self, NatanzonError> {
        let sum = eta + epsilon + rho;
        if !((sum + T::one()).abs() <= T::lit(1e-12)) {
            return Err(NatanzonError::InvalidOrdering { eta: eta.as_f64(), epsilon: epsilon.as_f64(), rho: rho.as_f64() });
        }
        Ok(Self { eta, epsilon, rho })
    }

    /// `ρ = −1 − η − ε`.
    pub fn from_eta_epsilon(eta: T, epsilon: T) -> Self {
        Self { eta, epsilon, rho: -T::one() - eta - epsilon }
    }

    /// BenDaniel–Duke: `η = ρ = 0`, `ε = −1`.
    pub fn ben_daniel_duke() -> Self {
        Self::from_eta_epsilon(T::zero(), -T::one())
    }
}

pub fn coeffs_at_energy<T: Real>(params: &NatanzonParams<T>, energy: T) -> EnergyCoeffs<T> {
    EnergyCoeffs {
        energy,
        c: -params.c0 * energy + params.a_c,
        p: -params.p0 * energy + params.a_p,
        q: -params.q0 * energy + params.a_q,
    }
}

/// `R(z) = p₀z² + (4c₀ − p₀ − q₀)z + q₀`.
pub fn r_polynomial<T: Real>(params: &NatanzonParams<T>, z: T) -> T {
    params.r_poly().eval(z)
}

fn check_unit<T: Real>(z: T) -> Result<(), NatanzonError> {
    if z >= T::zero() && z <= T::one() {
        Ok(())
    } else {
        Err(NatanzonError::OutOfRange(z.as_f64()))
    }
}

/// `𝔖(z) = 4z²(1 − z)²/R(z)`; removable zeros of `R` at the endpoints are cancelled.
pub fn generating_function<T: Real>(params: &NatanzonParams<T>, z: T) -> Result<T, NatanzonError> {
    check_unit(z)?;
    params.generating_form().eval(z).ok_or(NatanzonError::RZero(z.as_f64()))
}

/// `d𝔖/dz`.
pub fn generating_function_slope<T: Real>(params: &NatanzonParams<T>, z: T) -> Result<T, NatanzonError> {
    check_unit(z)?;
    params
        .generating_form()
        .derivative()
        .cancel_at(T::zero())
        .cancel_at(T::one())
        .eval(z)
        .ok_or(NatanzonError::RZero(z.as_f64()))
}

/// The general Natanzon potential
/// `[a_p z² − (a_p + a_q − 4a_c + 1)z + a_q + 2]/R
///  + [p₀ + ((4c₀ − q₀)(2z − 1) + p₀)/(z(z − 1)) − 5Δ/(4R)]·[z(z − 1)/R]²`,
/// evaluated as one quotient over `R³` so that `z(z − 1)` never divides.
pub fn natanzon_potential<T: Real>(params: &NatanzonParams<T>, z: T) -> Result<T, NatanzonError> {
    check_unit(z)?;
    params.potential_form().eval(z).ok_or(NatanzonError::RZero(z.as_f64()))
}

/// The two mass terms at one point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MassCorrections<T> {
    /// `m′²/(8m³)·[(1+2η)² + 4ε(1+η)] − ε·m″/(4m²)`.
    pub vm: T,
    /// `[(4(1+2η)² + 16ε(1+η) + 5)/32]·m′²/m³ − ((2ε+1)/8)·m″/m²`.
    pub um: T,
}

pub fn mass_correction_terms<T: Real>(mass: &MassProfile<T>, ordering: &OrderingParams<T>, x: T) -> MassCorrections<T> {
    if mass.is_constant() {
        return MassCorrections { vm: T::zero(), um: T::zero() };
    }
    let m = mass.m(x);
    let m1 = mass.m_prime(x);
    let m2 = mass.m_double_prime(x);
    let (eta, eps) = (ordering.eta, ordering.epsilon);
    let one = T::one();
    let a = (one + T::lit(2.0) * eta).powi(2);
    let b = eps * (one + eta);
    let vm = m1 * m1 / (T::lit(8.0) * m * m * m) * (a + T::lit(4.0) * b) - eps * m2 / (T::lit(4.0) * m * m);
    let um = (T::lit(4.0) * a + T::lit(16.0) * b + T::lit(5.0)) / T::lit(32.0) * m1 * m1 / (m * m * m)
        - (T::lit(2.0) * eps + one) / T::lit(8.0) * m2 / (m * m);
    MassCorrections { vm, um }
}

/// Both forms of the quantization residual at one energy.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QuantizationResidual<T> {
    /// `√(p+1) − √(4c+1) − (2n+1) + √(q+2)`; vanishes on the bound-state energies.
    pub branch_rule: T,
    /// `√(q+2) − √(p+1) − √(4c+1) − (2n+1)` with every root taken non-negative.
    pub verbatim: T,
}

pub fn quantization_residual<T: Real>(
    params: &NatanzonParams<T>,
    energy: T,
    n: u32,
) -> Result<QuantizationResidual<T>, NatanzonError> {
    let k = coeffs_at_energy(params, energy);
    let q2 = k.r();
    let p1 = k.t();
    let c4 = T::lit(4.0) * k.c + T::one();
    if q2 < T::zero() || p1 < T::zero() || c4 < T::zero() || !(q2.is_finite() && p1.is_finite() && c4.is_finite()) {
        return Err(NatanzonError::BranchViolation { energy: energy.as_f64(), q2: q2.as_f64(), p1: p1.as_f64(), c4: c4.as_f64() });
    }
    let level = T::lit(2.0) * T::from_u32(n).expect("small integer") + T::one();
    let (sq, sp, sc) = (q2.sqrt(), p1.sqrt(), c4.sqrt());
    Ok(QuantizationResidual { branch_rule: sp - sc - level + sq, verbatim: sq - sp - sc - level })
}

/// Default scan window `[−(√(a_p+1) + 1)²·scale, 0]` with `scale = max(1, 1/(4|c₀|))`.
pub fn default_energy_bracket<T: Real>(params: &NatanzonParams<T>) -> (T, T) {
    let base = (params.a_p + T::one()).max(T::zero()).sqrt() + T::one();
    let scale = if params.c0 != T::zero() {
        T::one().max((T::lit(4.0) * params.c0.abs()).recip())
    } else {
        T::one()
    };
    (-(base * base) * scale, T::zero())
}

/// One level of the analytic spectrum.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LevelRoot<T> {
    pub n: u32,
    pub energy: Option<T>,
}

const SCAN_SUBDIVISIONS: usize = 64;

/// Roots of the branch-rule residual for `n = 0..=n_max`, scanning the
/// bracket in 64 panels and polishing each sign change with Brent.
/// Levels without a root in the bracket have `energy = None`.
pub fn solve_spectrum<T: Real>(
    params: &NatanzonParams<T>,
    n_max: u32,
    bracket: Option<(T, T)>,
) -> Result<Vec<LevelRoot<T>>, NatanzonError> {
    let (lo, hi) = bracket.unwrap_or_else(|| default_energy_bracket(params));
    let nodes: Vec<T> = (0..=SCAN_SUBDIVISIONS)
        .map(|k| if k == SCAN_SUBDIVISIONS { hi } else { lo + (hi - lo) * T::from_count(k) / T::from_count(SCAN_SUBDIVISIONS) })
        .collect();
    let tol = T::lit(1e-13).max(T::epsilon() * T::lit(16.0));
    let mut out = Vec::new();
    for n in 0..=n_max {
        let f = |e: T| quantization_residual(params, e, n).map(|r| r.branch_rule).unwrap_or(T::nan());
        let values: Vec<T> = nodes.iter().map(|&e| f(e)).collect();
        let mut energy = None;
        for k in 0..nodes.len() {
            if values[k] == T::zero() {
                energy = Some(nodes[k]);
                break;
            }
            if k + 1 < nodes.len() {
                let (a, b) = (values[k], values[k + 1]);
                if a.is_finite() && b.is_finite() && b != T::zero() && a.signum() != b.signum() {
                    energy = Some(find_root(f, nodes[k], nodes[k + 1], tol)?);
                    break;
                }
            }
        }
        out.push(LevelRoot { n, energy });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ginocchio(gamma: f64, j: f64) -> NatanzonParams<f64> {
        let g2 = gamma * gamma;
        NatanzonParams::new(0.25 / (g2 * g2), (1.0 - g2) / (g2 * g2), 0.0, -0.25, (j + 0.5).powi(2) - 1.0, -1.75)
    }

    #[test]
    fn coefficient_examples() {
        let p = ginocchio(1.0, 2.0);
        let k = coeffs_at_energy(&p, 0.0);
        assert_eq!((k.c, k.p, k.q), (p.a_c, p.a_p, p.a_q));
        let k = coeffs_at_energy(&p, -4.0);
        assert_eq!((k.c, k.p, k.q), (0.75, 5.25, -1.75));
        assert_eq!((k.t(), k.r()), (6.25, 0.25));
        let flat = NatanzonParams::new(0.0, 0.0, 0.0, 1.0, 2.0, 3.0);
        assert_eq!(coeffs_at_energy(&flat, 17.0), coeffs_at_energy(&flat, -3.0).with_energy(17.0));
    }

    impl EnergyCoeffs<f64> {
        fn with_energy(mut self, e: f64) -> Self {
            self.energy = e;
            self
        }
    }

    #[test]
    fn r_polynomial_examples() {
        let p = ginocchio(1.0, 2.0);
        for z in [0.0, 0.3, 1.0] {
            assert_eq!(r_polynomial(&p, z), z);
        }
        let p = ginocchio(2.0_f64.sqrt(), 0.0);
        for z in [0.0, 0.4, 1.0] {
            assert!((r_polynomial(&p, z) - (-z * z / 4.0 + z / 2.0)).abs() < 1e-15);
        }
        let p = NatanzonParams::new(1.0, 2.0, 3.0, 0.0, 0.0, 0.0);
        assert_eq!(r_polynomial(&p, 0.0), 3.0);
    }

    #[test]
    fn generating_function_examples() {
        let p = ginocchio(1.0, 2.0);
        for z in [0.0, 0.2, 0.5, 0.9, 1.0] {
            assert!((generating_function(&p, z).unwrap() - 4.0 * z * (1.0 - z).powi(2)).abs() < 1e-15);
        }
        assert_eq!(generating_function(&p, 0.5).unwrap(), 0.5);
        let q = NatanzonParams::<f64>::new(0.5, 0.0, 1.0, 0.0, 0.0, 0.0);
        let small = generating_function(&q, 1e-4).unwrap();
        assert!((small / 1e-8 - 4.0).abs() < 1e-2);
        // R = 1 − 2z vanishes inside the interval
        let bad = NatanzonParams::new(-0.25, 0.0, 1.0, 0.0, 0.0, 0.0);
        assert!(matches!(generating_function(&bad, 0.5), Err(NatanzonError::RZero(_))));
        assert!(bad.validate().is_err());
        assert!(ginocchio(0.8, 2.0).validate().is_ok());
        assert!(ginocchio(1.5, 2.0).validate().is_ok());
    }

    #[test]
    fn generating_slope_matches_difference() {
        let p = ginocchio(1.5, 2.0);
        for z in [0.1, 0.5, 0.8] {
            let h = 1e-5;
            let fd = (generating_function(&p, z + h).unwrap() - generating_function(&p, z - h).unwrap()) / (2.0 * h);
            assert!((generating_function_slope(&p, z).unwrap() - fd).abs() < 1e-8);
        }
    }

    #[test]
    fn potential_at_unit_gamma_is_poschl_teller() {
        let p = ginocchio(1.0, 2.0);
        let z = 1.0_f64.tanh().powi(2);
        let v = natanzon_potential(&p, z).unwrap();
        let expected = -6.0 / 1.0_f64.cosh().powi(2);
        assert!((v - expected).abs() < 1e-12);
        assert!((v + 2.519_846).abs() < 1e-6);
        // endpoints are finite after cancellation
        assert!((natanzon_potential(&p, 0.0).unwrap() + 6.0).abs() < 1e-12);
        assert!(natanzon_potential(&p, 1.0).unwrap().abs() < 1e-12);
    }

    #[test]
    fn flat_numerator_gives_pure_bracket_term() {
        // a_p = 0 and a_p + a_q − 4a_c + 1 = 0: first term is (a_q + 2)/R
        let p = NatanzonParams::<f64>::new(0.5, 0.3, 0.4, 0.0, 0.0, -1.0);
        let z = 0.35_f64;
        let r = r_polynomial(&p, z);
        let zz = z * (z - 1.0);
        let direct = 1.0 / r
            + (p.p0 + ((4.0 * p.c0 - p.q0) * (2.0 * z - 1.0) + p.p0) / zz - 5.0 * p.discriminant() / (4.0 * r)) * (zz / r).powi(2);
        assert!((natanzon_potential(&p, z).unwrap() - direct).abs() < 1e-12);
    }

    #[test]
    fn potential_rejects_out_of_range() {
        assert!(matches!(natanzon_potential(&ginocchio(1.0, 2.0), 1.5), Err(NatanzonError::OutOfRange(_))));
    }

    #[test]
    fn mass_corrections() {
        let flat = MassProfile::<f64>::unit();
        let bdd = OrderingParams::ben_daniel_duke();
        assert_eq!(mass_correction_terms(&flat, &bdd, 0.3), MassCorrections { vm: 0.0, um: 0.0 });
        let m = MassProfile::rational(2.0).unwrap();
        let x = 0.6;
        let (m0, m1, m2) = (m.m(x), m.m_prime(x), m.m_double_prime(x));
        let t = mass_correction_terms(&m, &bdd, x);
        assert!((t.vm - (-3.0 * m1 * m1 / (8.0 * m0.powi(3)) + m2 / (4.0 * m0 * m0))).abs() < 1e-14);
        assert!((t.um - (-7.0 * m1 * m1 / (32.0 * m0.powi(3)) + m2 / (8.0 * m0 * m0))).abs() < 1e-14);
        let exp_mass = MassProfile::new(
            "exp",
            crate::smooth::SmoothFn::analytic(|x: f64| (2.0 * x).exp(), |x| 2.0 * (2.0 * x).exp(), |x| 4.0 * (2.0 * x).exp(), |x| 8.0 * (2.0 * x).exp()),
        );
        let t = mass_correction_terms(&exp_mass, &OrderingParams::from_eta_epsilon(0.0, 0.0), 0.0);
        assert!((t.vm - 0.5).abs() < 1e-15);
        assert!((t.um - 0.625).abs() < 1e-15);
    }

    #[test]
    fn ordering_constraint() {
        assert!(OrderingParams::new(0.0, -1.0, 0.0).is_ok());
        assert!(matches!(OrderingParams::new(0.0, 0.0, 0.0), Err(NatanzonError::InvalidOrdering { .. })));
        let o = OrderingParams::<f64>::from_eta_epsilon(0.3, -0.5);
        assert!((o.eta + o.epsilon + o.rho + 1.0).abs() < 1e-15);
    }

    #[test]
    fn quantization_examples() {
        let p = ginocchio(1.0, 2.0);
        let r = quantization_residual(&p, -4.0, 0).unwrap();
        assert_eq!(r.branch_rule, 0.0);
        // verbatim ordering is negative on the same point
        assert_eq!(r.verbatim, 0.5 - 2.5 - 2.0 - 1.0);
        for e in [-7.0, -2.0, 0.0] {
            let k = coeffs_at_energy(&p, e);
            assert_eq!((k.q + 2.0).sqrt(), 0.5);
        }
        assert!(matches!(quantization_residual(&p, 1.0, 0), Err(NatanzonError::BranchViolation { .. })));
    }

    #[test]
    fn spectrum_unit_gamma() {
        let p = ginocchio(1.0, 2.0);
        let levels = solve_spectrum(&p, 3, None).unwrap();
        assert_eq!(levels[0].energy, Some(-4.0));
        assert_eq!(levels[1].energy, Some(0.0));
        let found = levels.iter().filter(|l| l.energy.is_some()).count();
        assert!(found <= 3);
        assert_eq!(levels[2].energy, None);
    }

    #[test]
    fn energy_independent_condition_has_no_roots() {
        let p = NatanzonParams::new(0.0, 0.0, 0.0, 0.5, 3.0, 1.0);
        assert!(solve_spectrum(&p, 3, Some((-10.0, 0.0))).unwrap().iter().all(|l| l.energy.is_none()));
    }

    #[test]
    fn labels_reproduce_p_and_q() {
        let labels = crate::algebra::GroupLabels::<f64>::from_quantum_numbers(1.5, 2, 0.3).unwrap();
        let k = EnergyCoeffs::from_labels(-1.0, &labels);
        assert!(((labels.delta - 2.0 * labels.j0).powi(2) / 4.0 - 1.0 - k.p).abs() < 1e-14);
        assert!(((labels.delta + 2.0 * labels.j0).powi(2) / 4.0 - 2.0 - k.q).abs() < 1e-14);
    }

    proptest! {
        #[test]
        fn coefficients_are_affine_in_energy(
            raw in proptest::array::uniform6(-3.0f64..3.0),
            e1 in -10.0f64..10.0, e2 in -10.0f64..10.0, alpha in 0.0f64..1.0,
        ) {
            // exact affinity holds for dyadic inputs; round to a 2⁻¹⁰ lattice
            let d = |x: f64| (x * 1024.0).round() / 1024.0;
            let p = NatanzonParams::new(d(raw[0]), d(raw[1]), d(raw[2]), d(raw[3]), d(raw[4]), d(raw[5]));
            let (e1, e2, alpha) = (d(e1), d(e2), (alpha * 8.0).round() / 8.0);
            let mix = coeffs_at_energy(&p, alpha * e1 + (1.0 - alpha) * e2);
            let (k1, k2) = (coeffs_at_energy(&p, e1), coeffs_at_energy(&p, e2));
            prop_assert_eq!(mix.c, alpha * k1.c + (1.0 - alpha) * k2.c);
            prop_assert_eq!(mix.p, alpha * k1.p + (1.0 - alpha) * k2.p);
            prop_assert_eq!(mix.q, alpha * k1.q + (1.0 - alpha) * k2.q);
        }

        #[test]
        fn discriminant_ignores_energy_shifts(c0 in -2.0f64..2.0, p0 in -2.0f64..2.0, q0 in -2.0f64..2.0, shift in -5.0f64..5.0) {
            let p = NatanzonParams::new(c0, p0, q0, 0.1, 0.2, 0.3);
            let shifted = NatanzonParams { a_c: p.a_c + shift, a_p: p.a_p - shift, a_q: p.a_q * shift, ..p };
            prop_assert_eq!(p.discriminant(), shifted.discriminant());
        }
    }
}
