//! Natanzon-class potentials with a position-dependent effective mass.
//!
//! The crate builds the general Natanzon potential from its six energy-linear
//! parameters, specializes it to the Ginocchio family, realizes the
//! underlying su(1,1) algebra numerically, and checks every closed form
//! against a finite-difference solver for the von Roos Hamiltonian.
//!
//! Everything numeric is generic over [`Real`] (`f32` or `f64`); the
//! aliases below fix the scalar to `f64`.

pub mod algebra;
pub mod conformal;
pub mod ginocchio;
pub mod mass;
pub mod natanzon;
pub mod numerics;
pub mod pdmsolver;
pub mod scalar;
pub mod smooth;
pub mod verify;

pub use scalar::Real;

pub type Grid = numerics::Grid<f64>;
pub type MassProfile = mass::MassProfile<f64>;
pub type SmoothFn = smooth::SmoothFn<f64>;
pub type NatanzonParams = natanzon::NatanzonParams<f64>;
pub type EnergyCoeffs = natanzon::EnergyCoeffs<f64>;
pub type OrderingParams = natanzon::OrderingParams<f64>;
pub type CoordinateMap = natanzon::CoordinateMap<f64>;
pub type GinocchioSpec = ginocchio::GinocchioSpec<f64>;
pub type PotentialRow = ginocchio::PotentialRow<f64>;
pub type GroupLabels = algebra::GroupLabels<f64>;
pub type Su11Realization = algebra::Su11Realization<f64>;
pub type TridiagonalSymmetric = numerics::TridiagonalSymmetric<f64>;
pub type BoundStateProblem = pdmsolver::BoundStateProblem<f64>;
pub type BoundStateResult = pdmsolver::BoundStateResult<f64>;
pub type SpectrumReport = pdmsolver::SpectrumReport<f64>;
pub type MobiusCoeffs = conformal::MobiusCoeffs<f64>;
