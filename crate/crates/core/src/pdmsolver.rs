//! Finite-difference solver for the von Roos position-dependent-mass
//! Hamiltonian and the spectrum adjudication report built on it.

use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

use crate::ginocchio::{params_for, potential_on_x_grid, spectrum_levels, AssemblyVariant, GinocchioError, GinocchioSpec};
use crate::mass::{MassError, MassProfile};
use crate::natanzon::{solve_spectrum, NatanzonError, OrderingParams};
use crate::numerics::{lowest_eigenvalues, Grid, NumericsError, TridiagonalSymmetric};
use crate::scalar::Real;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum PdmError {
    #[error("mass is not positive at x = {x}: m = {m}")]
    NonpositiveMass { x: f64, m: f64 },
    #[error("potential has {got} samples but the grid has {expected} points")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error(transparent)]
    Numerics(#[from] NumericsError),
    #[error(transparent)]
    Ginocchio(#[from] GinocchioError),
    #[error(transparent)]
    Natanzon(#[from] NatanzonError),
}

impl From<MassError> for PdmError {
    fn from(e: MassError) -> Self {
        match e {
            MassError::NonpositiveMass { x, m } => PdmError::NonpositiveMass { x, m },
            other => PdmError::InvalidArgument(other.to_string()),
        }
    }
}

/// Builds the Dirichlet matrix on the interior nodes of `grid`.
///
/// The kinetic part is written in flux form `−½·d/dx (1/m) d/dx` with the mass
/// evaluated at interval midpoints; the ordering terms
/// `(1 + ε)m″/4m² − [η(η + ε + 1) + ε + 1]m′²/2m³` and `V` go on the diagonal.
pub fn assemble_hamiltonian<T: Real>(
    mass: &MassProfile<T>,
    potential: &[T],
    ordering: &OrderingParams<T>,
    grid: &Grid<T>,
) -> Result<TridiagonalSymmetric<T>, PdmError> {
    let n = grid.n_points();
    if potential.len() != n {
        return Err(PdmError::DimensionMismatch { expected: n, got: potential.len() });
    }
    mass.check_positive(grid)?;
    let h = grid.spacing();
    let half = T::lit(0.5);
    let scale = half / (h * h);
    // 1/m at the midpoint between node i and i+1
    let inv_mid: Vec<T> = (0..n - 1)
        .map(|i| {
            let x = grid.point(i) + half * h;
            let m = mass.m(x);
            if m > T::zero() {
                Ok(T::one() / m)
            } else {
                Err(PdmError::NonpositiveMass { x: x.as_f64(), m: m.as_f64() })
            }
        })
        .collect::<Result<_, _>>()?;
    let (eta, eps) = (ordering.eta, ordering.epsilon);
    let a = (T::one() + eps) / T::lit(4.0);
    let b = (eta * (eta + eps + T::one()) + eps + T::one()) / T::lit(2.0);
    let carries_ordering = !mass.is_constant() && (a != T::zero() || b != T::zero());
    let diag: Vec<T> = (1..n - 1)
        .map(|i| {
            let x = grid.point(i);
            let mut d = scale * (inv_mid[i - 1] + inv_mid[i]) + potential[i];
            if carries_ordering {
                let (m, m1, m2) = (mass.m(x), mass.m_prime(x), mass.m_double_prime(x));
                d += a * m2 / (m * m) - b * m1 * m1 / (m * m * m);
            }
            d
        })
        .collect();
    let off: Vec<T> = (1..n - 2).map(|i| -scale * inv_mid[i]).collect();
    Ok(TridiagonalSymmetric::new(diag, off)?)
}

/// The `k` lowest eigenvalues, keeping only those strictly below `threshold`
/// when one is given.
pub fn solve_bound_states<T: Real>(h: &TridiagonalSymmetric<T>, k: usize, threshold: Option<T>) -> Result<Vec<T>, PdmError> {
    if k == 0 {
        return Err(PdmError::InvalidArgument("k must be at least 1".into()));
    }
    let available = match threshold {
        Some(t) => h.sturm_count(t).min(k),
        None => k.min(h.dim()),
    };
    if available == 0 {
        return Ok(Vec::new());
    }
    let mut ev = lowest_eigenvalues(h, available)?;
    if let Some(t) = threshold {
        ev.retain(|&e| e < t);
    }
    Ok(ev)
}

/// Samples the potential on whatever grid the solver asks for.
pub type PotentialSampler<T> = Arc<dyn Fn(&Grid<T>) -> Result<Vec<T>, PdmError> + Send + Sync>;

/// A full problem description that can be rediscretized for Richardson
/// extrapolation.
#[derive(Clone)]
pub struct BoundStateProblem<T> {
    pub mass: MassProfile<T>,
    pub ordering: OrderingParams<T>,
    pub grid: Grid<T>,
    potential: PotentialSampler<T>,
    /// Bound states lie strictly below this value when set.
    pub threshold: Option<T>,
}

impl<T> std::fmt::Debug for BoundStateProblem<T>
where
    T: std::fmt::Debug,
{
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("BoundStateProblem")
            .field("mass", &self.mass)
            .field("grid", &self.grid)
            .field("threshold", &self.threshold)
            .finish_non_exhaustive()
    }
}

/// Energies after two-grid Richardson extrapolation.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundStateResult<T> {
    pub energies: Vec<T>,
    pub coarse: Vec<T>,
    pub fine: Vec<T>,
    pub convergence_estimate: Vec<T>,
    pub grid: Grid<T>,
    pub ordering: OrderingParams<T>,
}

impl<T: Real> BoundStateProblem<T> {
    pub fn new(mass: MassProfile<T>, ordering: OrderingParams<T>, grid: Grid<T>, potential: PotentialSampler<T>) -> Self {
        Self { mass, ordering, grid, potential, threshold: None }
    }

    /// Potential given as a function of `x`.
    pub fn with_function(
        mass: MassProfile<T>,
        ordering: OrderingParams<T>,
        grid: Grid<T>,
        v: impl Fn(T) -> T + Send + Sync + 'static,
    ) -> Self {
        Self::new(mass, ordering, grid, Arc::new(move |g: &Grid<T>| Ok(g.points().map(&v).collect())))
    }

    /// The assembled Ginocchio potential; bound states lie below zero.
    pub fn ginocchio(
        spec: GinocchioSpec<T>,
        mass: MassProfile<T>,
        ordering: OrderingParams<T>,
        grid: Grid<T>,
        assembly: AssemblyVariant,
    ) -> Self {
        let (m, o) = (mass.clone(), ordering);
        let sampler: PotentialSampler<T> = Arc::new(move |g: &Grid<T>| {
            Ok(potential_on_x_grid(&spec, &m, &o, g, assembly)?.into_iter().map(|r| r.v_total).collect())
        });
        Self { threshold: Some(T::zero()), ..Self::new(mass, ordering, grid, sampler) }
    }

    pub fn with_threshold(mut self, threshold: Option<T>) -> Self {
        self.threshold = threshold;
        self
    }

    /// Raw eigenvalues on one grid.
    pub fn eigenvalues_on(&self, grid: &Grid<T>, k: usize) -> Result<Vec<T>, PdmError> {
        let v = (self.potential)(grid)?;
        let h = assemble_hamiltonian(&self.mass, &v, &self.ordering, grid)?;
        solve_bound_states(&h, k, self.threshold)
    }

    /// Solves on the grid and on its refinement and extrapolates each level
    /// assuming `O(h²)` error: `E* = (h₁²E₂ − h₂²E₁)/(h₁² − h₂²)`.
    pub fn solve(&self, k: usize) -> Result<BoundStateResult<T>, PdmError> {
        let fine_grid = self.grid.refined();
        let coarse = self.eigenvalues_on(&self.grid, k)?;
        let fine = self.eigenvalues_on(&fine_grid, k)?;
        let (h1, h2) = (self.grid.spacing(), fine_grid.spacing());
        let (w1, w2) = (h1 * h1, h2 * h2);
        let levels = coarse.len().min(fine.len());
        let energies: Vec<T> = (0..levels).map(|i| (w1 * fine[i] - w2 * coarse[i]) / (w1 - w2)).collect();
        let convergence_estimate = (0..levels).map(|i| (energies[i] - fine[i]).abs()).collect();
        Ok(BoundStateResult { energies, coarse, fine, convergence_estimate, grid: self.grid, ordering: self.ordering })
    }

    /// Observed order `log₂((E_h − E_{h/2})/(E_{h/2} − E_{h/4}))` of one level.
    pub fn observed_order(&self, level: usize) -> Result<T, PdmError> {
        let g1 = self.grid;
        let g2 = g1.refined();
        let g3 = g2.refined();
        let e: Vec<T> = [g1, g2, g3]
            .iter()
            .map(|g| {
                self.eigenvalues_on(g, level + 1)?
                    .get(level)
                    .copied()
                    .ok_or_else(|| PdmError::InvalidArgument(format!("level {level} is not bound")))
            })
            .collect::<Result<_, _>>()?;
        Ok(((e[0] - e[1]) / (e[1] - e[2])).abs().log2())
    }
}

/// `|x| ≤ 12/√(min m)`, where `min m` is taken over a coarse sample of `[−12, 12]`.
pub fn default_domain<T: Real>(mass: &MassProfile<T>) -> T {
    let probe = Grid::new(-T::lit(12.0), T::lit(12.0), 241).expect("fixed grid");
    T::lit(12.0) / mass.min_on(&probe).sqrt()
}

/// A reading of the index relation `numeric level = α·(closed-form level)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IndexMap {
    pub alpha: u32,
    pub beta: u32,
    /// `(closed-form n, numeric level)` pairs that both exist.
    pub matched: Vec<(u32, usize)>,
    pub max_mismatch: f64,
    /// `"MATCHED"` or `"UNMATCHED"`.
    pub status: String,
}

/// Among `n → n` and `n → 2n`, the map with the smallest maximum mismatch on
/// the levels both lists contain. Non-finite closed-form levels are skipped.
pub fn best_fit_index_map<T: Real>(closed_form: &[T], numeric: &[T], tol: T) -> IndexMap {
    let mut best: Option<IndexMap> = None;
    for alpha in [1u32, 2] {
        let matched: Vec<(u32, usize)> = (0..closed_form.len())
            .filter(|&n| closed_form[n].is_finite())
            .map(|n| (n as u32, alpha as usize * n))
            .filter(|&(_, k)| k < numeric.len())
            .collect();
        let max_mismatch = if matched.is_empty() {
            f64::INFINITY
        } else {
            matched.iter().map(|&(n, k)| (closed_form[n as usize] - numeric[k]).abs().as_f64()).fold(0.0, f64::max)
        };
        let status = if max_mismatch <= tol.as_f64() { "MATCHED" } else { "UNMATCHED" }.to_string();
        let candidate = IndexMap { alpha, beta: 0, matched, max_mismatch, status };
        // ties go to the map that explains more levels, then to the smaller α
        let better = match &best {
            None => true,
            Some(b) => {
                candidate.max_mismatch < b.max_mismatch
                    || (candidate.max_mismatch == b.max_mismatch && candidate.matched.len() > b.matched.len())
            }
        };
        if better {
            best = Some(candidate);
        }
    }
    best.expect("two candidates")
}

/// Level-by-level comparison of the numeric spectra of two mass profiles.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MassIndependence<T> {
    pub mass_a: String,
    pub mass_b: String,
    pub energies_a: Vec<T>,
    pub energies_b: Vec<T>,
    pub max_difference: T,
    pub same_level_count: bool,
}

/// Pairwise residuals between the three energy lists.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumResiduals<T> {
    /// `|E₂₇(n) − E₃₄(n)|` where both exist.
    pub eq27_vs_eq34: Vec<Option<T>>,
    pub max_eq27_vs_eq34: T,
    /// `|E₃₄(n) − E_numeric(k)|`, rows indexed by `n`.
    pub eq34_vs_numeric: Vec<Vec<T>>,
    /// Richardson error estimate per numeric level.
    pub numeric_convergence: Vec<T>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumReport<T> {
    pub gamma: T,
    pub j: T,
    pub ordering: OrderingParams<T>,
    pub assembly_variant: AssemblyVariant,
    pub mass: String,
    pub energies_numeric: Vec<T>,
    pub energies_eq27: Vec<Option<T>>,
    pub energies_eq34: Vec<T>,
    pub residuals: SpectrumResiduals<T>,
    pub best_fit_index_map: IndexMap,
    pub mass_independence: MassIndependence<T>,
}

/// Settings for [`verify_spectrum`].
#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions<T> {
    /// Mismatch below which an index map counts as matched.
    pub match_tol: T,
    /// Upper bound on the number of numeric levels computed.
    pub max_levels: usize,
}

impl<T: Real> Default for VerifyOptions<T> {
    fn default() -> Self {
        Self { match_tol: T::lit(1e-2), max_levels: 16 }
    }
}

/// Compares the branch-rule roots, the closed-form levels and the numeric
/// spectrum for one `(γ, j)`, and checks mass independence against a second
/// profile (`rational:2` when `mass` is constant, otherwise `m ≡ 1`).
pub fn verify_spectrum<T: Real>(
    spec: &GinocchioSpec<T>,
    mass: &MassProfile<T>,
    ordering: &OrderingParams<T>,
    assembly: AssemblyVariant,
    grid: &Grid<T>,
    opts: VerifyOptions<T>,
) -> Result<SpectrumReport<T>, PdmError> {
    let params = params_for(spec.gamma, spec.j)?;
    let energies_eq27: Vec<Option<T>> =
        solve_spectrum(&params, spec.max_level(), None)?.into_iter().map(|l| l.energy).collect();
    let energies_eq34 = spectrum_levels(spec.gamma, spec.j)?;

    let numeric = BoundStateProblem::ginocchio(*spec, mass.clone(), *ordering, *grid, assembly).solve(opts.max_levels)?;
    let other = if mass.is_constant() { MassProfile::rational(T::lit(2.0))? } else { MassProfile::unit() };
    let reference = BoundStateProblem::ginocchio(*spec, other.clone(), *ordering, *grid, assembly).solve(opts.max_levels)?;

    let eq27_vs_eq34: Vec<Option<T>> = energies_eq27
        .iter()
        .zip(&energies_eq34)
        .map(|(a, b)| a.map(|a| (a - *b).abs()))
        .collect();
    let max_eq27_vs_eq34 = eq27_vs_eq34.iter().flatten().copied().fold(T::zero(), T::max);
    let eq34_vs_numeric =
        energies_eq34.iter().map(|&e| numeric.energies.iter().map(|&k| (e - k).abs()).collect()).collect();

    let shared = numeric.energies.len().min(reference.energies.len());
    let max_difference = (0..shared).map(|i| (numeric.energies[i] - reference.energies[i]).abs()).fold(T::zero(), T::max);
    let mass_independence = MassIndependence {
        mass_a: mass.label().to_string(),
        mass_b: other.label().to_string(),
        energies_a: numeric.energies.clone(),
        energies_b: reference.energies.clone(),
        max_difference,
        same_level_count: numeric.energies.len() == reference.energies.len(),
    };

    Ok(SpectrumReport {
        gamma: spec.gamma,
        j: spec.j,
        ordering: *ordering,
        assembly_variant: assembly,
        mass: mass.label().to_string(),
        best_fit_index_map: best_fit_index_map(&energies_eq34, &numeric.energies, opts.match_tol),
        energies_numeric: numeric.energies,
        energies_eq27,
        energies_eq34,
        residuals: SpectrumResiduals {
            eq27_vs_eq34,
            max_eq27_vs_eq34,
            eq34_vs_numeric,
            numeric_convergence: numeric.convergence_estimate,
        },
        mass_independence,
    })
}
