//! Strip → half-plane → disk mapping pipeline and the unit-circle variable
//! `ξ = (1 + i√z)/(1 − i√z)`.
//!
//! The pipeline is `𝔷 = 2iz` (rotation by π/2 with dilation 2), `Z = e^𝔷`,
//! then the homographic map `w = (1/i)(Z − 1)/(Z + 1)`. Composed, they send
//! the band `|Re z| ≤ π/4` onto the closed unit disk and agree with `tan z`.

use num_complex::Complex;
use thiserror::Error;

use crate::scalar::Real;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConformalError {
    #[error("exponential overflows: Re = {0}")]
    Overflow(f64),
    #[error("pole of the half-plane map at Z = −1")]
    PoleAtMinusOne,
    #[error("pole of the inverse map at w = −i")]
    PoleAtMinusI,
    #[error("degenerate interpolation data: {0}")]
    DegeneratePoints(String),
    #[error("degenerate Möbius coefficients (ad − bc = 0)")]
    Singular,
    #[error("value {0} outside the real segment [0, 1]")]
    OutOfSegment(f64),
}

/// A point of the extended complex plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ExtendedPoint<T> {
    Finite(Complex<T>),
    Infinity,
}

impl<T: Real> ExtendedPoint<T> {
    pub fn finite(re: T, im: T) -> Self {
        Self::Finite(Complex::new(re, im))
    }

    pub fn as_finite(&self) -> Option<Complex<T>> {
        match *self {
            Self::Finite(z) => Some(z),
            Self::Infinity => None,
        }
    }

    fn close_to(&self, other: &Self, tol: T) -> bool {
        match (self, other) {
            (Self::Infinity, Self::Infinity) => true,
            (Self::Finite(a), Self::Finite(b)) => (a - b).norm() <= tol,
            _ => false,
        }
    }
}

impl<T> From<Complex<T>> for ExtendedPoint<T> {
    fn from(z: Complex<T>) -> Self {
        Self::Finite(z)
    }
}

/// `w = (a z + b)/(c z + d)` with `ad − bc ≠ 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MobiusCoeffs<T> {
    pub a: Complex<T>,
    pub b: Complex<T>,
    pub c: Complex<T>,
    pub d: Complex<T>,
}

impl<T: Real> MobiusCoeffs<T> {
    pub fn new(a: Complex<T>, b: Complex<T>, c: Complex<T>, d: Complex<T>) -> Result<Self, ConformalError> {
        let m = Self { a, b, c, d };
        let det = m.determinant();
        let scale = a.norm().max(b.norm()).max(c.norm()).max(d.norm());
        if !(det.norm() > T::epsilon() * scale * scale) {
            return Err(ConformalError::Singular);
        }
        Ok(m)
    }

    pub fn identity() -> Self {
        let (o, z) = (Complex::new(T::one(), T::zero()), Complex::new(T::zero(), T::zero()));
        Self { a: o, b: z, c: z, d: o }
    }

    pub fn determinant(&self) -> Complex<T> {
        self.a * self.d - self.b * self.c
    }

    pub fn apply(&self, z: ExtendedPoint<T>) -> ExtendedPoint<T> {
        match z {
            ExtendedPoint::Infinity => {
                if self.c == Complex::new(T::zero(), T::zero()) {
                    ExtendedPoint::Infinity
                } else {
                    ExtendedPoint::Finite(self.a / self.c)
                }
            }
            ExtendedPoint::Finite(z) => {
                let den = self.c * z + self.d;
                if den == Complex::new(T::zero(), T::zero()) {
                    ExtendedPoint::Infinity
                } else {
                    ExtendedPoint::Finite((self.a * z + self.b) / den)
                }
            }
        }
    }

    /// `self ∘ inner`, the matrix product of the coefficient matrices.
    pub fn compose(&self, inner: &Self) -> Self {
        Self {
            a: self.a * inner.a + self.b * inner.c,
            b: self.a * inner.b + self.b * inner.d,
            c: self.c * inner.a + self.d * inner.c,
            d: self.c * inner.b + self.d * inner.d,
        }
    }

    pub fn inverse(&self) -> Self {
        Self { a: self.d, b: -self.b, c: -self.c, d: self.a }
    }

    /// Scales the coefficients so that the largest one has modulus 1 and a
    /// positive real part direction fixed by the first nonzero entry.
    pub fn normalized(&self) -> Self {
        let entries = [self.a, self.b, self.c, self.d];
        let pivot = entries
            .iter()
            .copied()
            .find(|e| e.norm() > T::epsilon())
            .unwrap_or(Complex::new(T::one(), T::zero()));
        let scaled = entries.map(|e| e / pivot);
        let max = scaled.iter().fold(T::zero(), |acc, e| acc.max(e.norm()));
        let s = scaled.map(|e| e / max);
        Self { a: s[0], b: s[1], c: s[2], d: s[3] }
    }
}

/// Map sending `p1 → 0`, `p2 → 1`, `p3 → ∞`, with the projective
/// convention that a factor containing ∞ is dropped.
fn to_standard<T: Real>(p: [ExtendedPoint<T>; 3]) -> MobiusCoeffs<T> {
    let one = Complex::new(T::one(), T::zero());
    let zero = Complex::new(T::zero(), T::zero());
    match (p[0], p[1], p[2]) {
        (ExtendedPoint::Infinity, ExtendedPoint::Finite(z2), ExtendedPoint::Finite(z3)) => {
            MobiusCoeffs { a: zero, b: z2 - z3, c: one, d: -z3 }
        }
        (ExtendedPoint::Finite(z1), ExtendedPoint::Infinity, ExtendedPoint::Finite(z3)) => {
            MobiusCoeffs { a: one, b: -z1, c: one, d: -z3 }
        }
        (ExtendedPoint::Finite(z1), ExtendedPoint::Finite(z2), ExtendedPoint::Infinity) => {
            MobiusCoeffs { a: one, b: -z1, c: zero, d: z2 - z1 }
        }
        (ExtendedPoint::Finite(z1), ExtendedPoint::Finite(z2), ExtendedPoint::Finite(z3)) => MobiusCoeffs {
            a: z2 - z3,
            b: -z1 * (z2 - z3),
            c: z2 - z1,
            d: -z3 * (z2 - z1),
        },
        _ => unreachable!("distinctness checked by caller"),
    }
}

fn check_distinct<T: Real>(p: &[ExtendedPoint<T>; 3], label: &str) -> Result<(), ConformalError> {
    let tol = T::epsilon() * T::lit(16.0);
    for i in 0..3 {
        for j in (i + 1)..3 {
            let scale = match (p[i], p[j]) {
                (ExtendedPoint::Finite(a), ExtendedPoint::Finite(b)) => T::one().max(a.norm()).max(b.norm()),
                _ => T::one(),
            };
            if p[i].close_to(&p[j], tol * scale) {
                return Err(ConformalError::DegeneratePoints(format!("{label} points {i} and {j} coincide")));
            }
        }
    }
    Ok(())
}

/// The unique Möbius map with `z_k → w_k`, from the cross-ratio identity
/// `(w−w₁)/(w−w₃)·(w₂−w₃)/(w₂−w₁) = (Z−z₁)/(Z−z₃)·(z₂−z₃)/(z₂−z₁)`.
pub fn mobius_from_three_points<T: Real>(
    z: [ExtendedPoint<T>; 3],
    w: [ExtendedPoint<T>; 3],
) -> Result<MobiusCoeffs<T>, ConformalError> {
    check_distinct(&z, "source")?;
    check_distinct(&w, "target")?;
    let m = to_standard(w).inverse().compose(&to_standard(z));
    MobiusCoeffs::new(m.a, m.b, m.c, m.d)
}

/// Cross-ratio `(z₁−z₃)(z₂−z₄) / ((z₁−z₄)(z₂−z₃))` of finite points.
pub fn cross_ratio<T: Real>(z1: Complex<T>, z2: Complex<T>, z3: Complex<T>, z4: Complex<T>) -> Complex<T> {
    (z1 - z3) * (z2 - z4) / ((z1 - z4) * (z2 - z3))
}

fn i<T: Real>() -> Complex<T> {
    Complex::new(T::zero(), T::one())
}

pub fn rotate_dilate<T: Real>(z: Complex<T>) -> Complex<T> {
    i::<T>() * z * T::lit(2.0)
}

pub fn exp_map<T: Real>(zz: Complex<T>) -> Result<Complex<T>, ConformalError> {
    if zz.re > T::max_value().ln() {
        return Err(ConformalError::Overflow(zz.re.as_f64()));
    }
    Ok(zz.exp())
}

pub fn halfplane_to_disk<T: Real>(big_z: Complex<T>) -> Result<Complex<T>, ConformalError> {
    let one = Complex::new(T::one(), T::zero());
    if big_z == -one {
        return Err(ConformalError::PoleAtMinusOne);
    }
    Ok(-i::<T>() * (big_z - one) / (big_z + one))
}

pub fn disk_to_halfplane<T: Real>(w: Complex<T>) -> Result<Complex<T>, ConformalError> {
    let one = Complex::new(T::one(), T::zero());
    if w == -i::<T>() {
        return Err(ConformalError::PoleAtMinusI);
    }
    Ok((one + i::<T>() * w) / (one - i::<T>() * w))
}

/// The full pipeline `halfplane_to_disk ∘ exp_map ∘ rotate_dilate`, which is
/// `tan z`. When `Re 𝔷 > 0` the quotient is evaluated with `e^{−𝔷}` so
/// that large `|Im z|` cannot overflow.
pub fn strip_to_disk<T: Real>(z: Complex<T>) -> Complex<T> {
    let zz = rotate_dilate(z);
    if zz.re <= T::zero() {
        let big_z = zz.exp();
        halfplane_to_disk(big_z).unwrap_or_else(|_| Complex::new(T::infinity(), T::infinity()))
    } else {
        let one = Complex::new(T::one(), T::zero());
        let inv = (-zz).exp();
        -i::<T>() * (one - inv) / (one + inv)
    }
}

/// Square root on the sheet with argument θ ∈ [0, 2π), cut along θ = 0.
pub fn sqrt_cut<T: Real>(w: Complex<T>) -> Complex<T> {
    let r = w.norm();
    let mut theta = w.im.atan2(w.re);
    if theta < T::zero() {
        theta += T::TAU();
    }
    Complex::from_polar(r.sqrt(), theta * T::lit(0.5))
}

/// `ξ = (1 + i√z)/(1 − i√z)` for real `z ∈ [0, 1]`; lies on the unit circle.
pub fn xi_of_z<T: Real>(z: T) -> Result<Complex<T>, ConformalError> {
    if !(z >= T::zero() && z <= T::one()) {
        return Err(ConformalError::OutOfSegment(z.as_f64()));
    }
    let v = sqrt_cut(Complex::new(z, T::zero()));
    let one = Complex::new(T::one(), T::zero());
    Ok((one + i::<T>() * v) / (one - i::<T>() * v))
}

/// Largest Cauchy–Riemann defect `max(|u_x − v_y|, |u_y + v_x|)` of `map`
/// at `at`, from Richardson central differences with step `h`.
pub fn conformality_residual<T, F>(map: F, at: Complex<T>, h: T) -> T
where
    T: Real,
    F: Fn(Complex<T>) -> Complex<T>,
{
    let d = |dir: Complex<T>| {
        let step = |s: T| (map(at + dir * s) - map(at - dir * s)) / (s * T::lit(2.0));
        let coarse = step(h);
        let fine = step(h * T::lit(0.5));
        (fine * T::lit(4.0) - coarse) / T::lit(3.0)
    };
    let dx = d(Complex::new(T::one(), T::zero()));
    let dy = d(i::<T>());
    let (ux, vx) = (dx.re, dx.im);
    let (uy, vy) = (dy.re, dy.im);
    (ux - vy).abs().max((uy + vx).abs())
}

/// One row of the strip-image table.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MapSample<T> {
    pub z: Complex<T>,
    pub w: Complex<T>,
    pub residual: T,
}

/// Samples `strip_to_disk` on an `n_re × n_im` lattice covering
/// `Re z ∈ [−π/4, π/4]`, `Im z ∈ [im_min, im_max]`.
pub fn strip_image<T: Real>(n_re: usize, im_min: T, im_max: T, n_im: usize, h: T) -> Vec<MapSample<T>> {
    let quarter = T::FRAC_PI_4();
    let step = |lo: T, hi: T, n: usize, k: usize| {
        if n == 1 {
            lo
        } else if k + 1 == n {
            hi
        } else {
            lo + (hi - lo) * T::from_count(k) / T::from_count(n - 1)
        }
    };
    let mut out = Vec::with_capacity(n_re * n_im);
    for a in 0..n_im {
        let y = step(im_min, im_max, n_im, a);
        for b in 0..n_re {
            let x = step(-quarter, quarter, n_re, b);
            let z = Complex::new(x, y);
            out.push(MapSample { z, w: strip_to_disk(z), residual: conformality_residual(strip_to_disk, z, h) });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, LN_2};

    type C = Complex<f64>;

    fn c(re: f64, im: f64) -> C {
        C::new(re, im)
    }

    fn close(a: C, b: C, tol: f64) -> bool {
        (a - b).norm() <= tol
    }

    #[test]
    fn rotation_examples() {
        assert_eq!(rotate_dilate(c(1.0, 0.0)), c(0.0, 2.0));
        assert_eq!(rotate_dilate(c(0.0, 1.0)), c(-2.0, 0.0));
        assert!(close(rotate_dilate(c(FRAC_PI_4, 0.0)), c(0.0, FRAC_PI_2), 1e-15));
    }

    #[test]
    fn exponential_examples() {
        assert_eq!(exp_map(c(0.0, 0.0)).unwrap(), c(1.0, 0.0));
        assert!(close(exp_map(c(0.0, FRAC_PI_2)).unwrap(), c(0.0, 1.0), 1e-15));
        assert!(close(exp_map(c(LN_2, 0.0)).unwrap(), c(2.0, 0.0), 1e-15));
        assert!(matches!(exp_map(c(800.0, 0.0)), Err(ConformalError::Overflow(_))));
    }

    #[test]
    fn homographic_examples() {
        assert!(close(halfplane_to_disk(c(1.0, 0.0)).unwrap(), c(0.0, 0.0), 0.0));
        assert!(close(halfplane_to_disk(c(0.0, 1.0)).unwrap(), c(1.0, 0.0), 1e-15));
        assert!(close(halfplane_to_disk(c(0.0, -1.0)).unwrap(), c(-1.0, 0.0), 1e-15));
        assert!(close(halfplane_to_disk(c(0.0, 0.0)).unwrap(), c(0.0, 1.0), 1e-15));
        assert_eq!(halfplane_to_disk(c(-1.0, 0.0)), Err(ConformalError::PoleAtMinusOne));
    }

    #[test]
    fn inverse_homographic_examples() {
        assert_eq!(disk_to_halfplane(c(0.0, 0.0)).unwrap(), c(1.0, 0.0));
        assert!(close(disk_to_halfplane(c(1.0, 0.0)).unwrap(), c(0.0, 1.0), 1e-15));
        assert!(close(disk_to_halfplane(c(-1.0, 0.0)).unwrap(), c(0.0, -1.0), 1e-15));
        assert_eq!(disk_to_halfplane(c(0.0, -1.0)), Err(ConformalError::PoleAtMinusI));
    }

    #[test]
    fn strip_examples() {
        assert!(close(strip_to_disk(c(FRAC_PI_4, 0.0)), c(1.0, 0.0), 1e-15));
        assert!(close(strip_to_disk(c(-FRAC_PI_4, 0.0)), c(-1.0, 0.0), 1e-15));
        assert_eq!(strip_to_disk(c(0.0, 0.0)), c(0.0, 0.0));
        let w = strip_to_disk(c(0.0, 5.0));
        assert!(close(w, c(0.0, 5.0_f64.tanh()), 1e-15));
        assert!((w.im - 0.9999).abs() < 1e-4);
        // far up the band the image approaches i without overflow
        assert!(close(strip_to_disk(c(0.1, 500.0)), c(0.0, 1.0), 1e-15));
        assert!(close(strip_to_disk(c(0.1, -500.0)), c(0.0, -1.0), 1e-15));
    }

    #[test]
    fn xi_examples() {
        assert_eq!(xi_of_z(0.0).unwrap(), c(1.0, 0.0));
        assert!(close(xi_of_z(1.0).unwrap(), c(0.0, 1.0), 1e-15));
        assert!(close(xi_of_z(0.25).unwrap(), c(0.6, 0.8), 1e-15));
        assert!(xi_of_z(1.5).is_err());
        assert!(xi_of_z(-0.1).is_err());
    }

    #[test]
    fn cut_sqrt_sheet() {
        // argument in [0, 2π): −1 + 0i has θ = π, its root is +i; just below the cut θ → 2π
        assert!(close(sqrt_cut(c(-1.0, 0.0)), c(0.0, 1.0), 1e-15));
        assert!(close(sqrt_cut(c(4.0, 0.0)), c(2.0, 0.0), 1e-15));
        let below = sqrt_cut(c(1.0, -1e-12));
        assert!(close(below, c(-1.0, 0.0), 1e-9));
    }

    #[test]
    fn xi_on_unit_circle() {
        for k in 0..=1000 {
            let z = k as f64 / 1000.0;
            assert!((xi_of_z(z).unwrap().norm() - 1.0).abs() <= 1e-12);
        }
    }

    #[test]
    fn homographic_triple_from_three_points() {
        let pts = |a: [C; 3]| a.map(ExtendedPoint::Finite);
        let m = mobius_from_three_points(
            pts([c(0.0, 1.0), c(0.0, 0.0), c(0.0, -1.0)]),
            pts([c(1.0, 0.0), c(0.0, 1.0), c(-1.0, 0.0)]),
        )
        .unwrap();
        // (1/i)(Z − 1)/(Z + 1) = (−i Z + i)/(Z + 1)
        let expected = MobiusCoeffs { a: c(0.0, -1.0), b: c(0.0, 1.0), c: c(1.0, 0.0), d: c(1.0, 0.0) };
        let (m, e) = (m.normalized(), expected.normalized());
        for (x, y) in [(m.a, e.a), (m.b, e.b), (m.c, e.c), (m.d, e.d)] {
            assert!(close(x, y, 1e-14), "{m:?} vs {e:?}");
        }
        for big_z in [c(0.3, 0.4), c(2.0, -1.0)] {
            let a = m.apply(big_z.into()).as_finite().unwrap();
            assert!(close(a, halfplane_to_disk(big_z).unwrap(), 1e-14));
        }
    }

    #[test]
    fn three_points_with_infinity() {
        let zero = ExtendedPoint::finite(0.0, 0.0);
        let one = ExtendedPoint::finite(1.0, 0.0);
        let inf = ExtendedPoint::Infinity;
        let id = mobius_from_three_points([zero, one, inf], [zero, one, inf]).unwrap().normalized();
        assert_eq!(id, MobiusCoeffs::<f64>::identity());
        let inv = mobius_from_three_points([zero, one, inf], [inf, one, zero]).unwrap();
        let w = inv.apply(ExtendedPoint::finite(2.0, 1.0)).as_finite().unwrap();
        assert!(close(w, c(1.0, 0.0) / c(2.0, 1.0), 1e-15));
        assert_eq!(inv.apply(zero), inf);
        assert!(inv.apply(inf).close_to(&zero, 1e-15));
    }

    #[test]
    fn degenerate_data_rejected() {
        let p = ExtendedPoint::finite(0.5, 0.5);
        let q = ExtendedPoint::finite(1.0, 0.0);
        let r = ExtendedPoint::finite(0.0, 1.0);
        assert!(matches!(mobius_from_three_points([p, p, q], [p, q, r]), Err(ConformalError::DegeneratePoints(_))));
        assert!(matches!(
            mobius_from_three_points([p, q, r], [ExtendedPoint::Infinity, q, ExtendedPoint::Infinity]),
            Err(ConformalError::DegeneratePoints(_))
        ));
    }

    #[test]
    fn cauchy_riemann_checks() {
        let at = c(0.3, 0.2);
        assert!(conformality_residual(|z: C| z.exp(), at, 1e-4) <= 1e-8);
        assert!(conformality_residual(strip_to_disk, c(0.1, 0.5), 1e-4) <= 1e-8);
        let conj = conformality_residual(|z: C| z.conj(), at, 1e-4);
        assert!((conj - 2.0).abs() < 1e-9);
    }

    #[test]
    fn band_boundary_lands_on_unit_circle() {
        for k in -50..=50 {
            let y = k as f64 * 0.1;
            for x in [-FRAC_PI_4, FRAC_PI_4] {
                let w = strip_to_disk(c(x, y));
                assert!((w.norm() - 1.0).abs() <= 1e-10, "{w}");
            }
        }
        // on the real axis the boundary images are the real points ±1
        assert!(close(strip_to_disk(c(FRAC_PI_4, 0.0)), c(1.0, 0.0), 1e-15));
    }

    #[test]
    fn strip_image_table() {
        let rows = strip_image(11, -2.0, 2.0, 21, 1e-4);
        assert_eq!(rows.len(), 231);
        assert!(rows.iter().all(|r| r.w.norm() <= 1.0 + 1e-12));
        assert!(rows.iter().all(|r| r.residual <= 1e-8));
        assert!(rows.iter().any(|r| r.z == c(FRAC_PI_4, 0.0) && close(r.w, c(1.0, 0.0), 1e-15)));
    }

    #[test]
    fn f32_pipeline() {
        let z = Complex::new(0.2_f32, 0.3);
        assert!((strip_to_disk(z) - z.tan()).norm() < 1e-6);
    }

    proptest! {
        #[test]
        fn disk_round_trip(r in 0.0f64..0.999, t in 0.0f64..std::f64::consts::TAU) {
            let w = C::from_polar(r, t);
            let back = halfplane_to_disk(disk_to_halfplane(w).unwrap()).unwrap();
            prop_assert!(close(back, w, 1e-12));
        }

        #[test]
        fn strip_is_tangent(x in -FRAC_PI_4..=FRAC_PI_4, y in -3.0f64..3.0) {
            let z = c(x, y);
            prop_assert!(close(strip_to_disk(z), z.tan(), 1e-12));
        }

        #[test]
        fn cross_ratio_is_preserved(
            pts in proptest::array::uniform8(-2.0f64..2.0),
            probe in proptest::array::uniform2(-2.0f64..2.0),
        ) {
            let z = [c(pts[0], pts[1]), c(pts[2], pts[3]), c(pts[4], pts[5])];
            let w = [c(pts[6], pts[7]), c(pts[1], -pts[0]), c(pts[3] + 0.5, pts[5])];
            let z4 = c(probe[0], probe[1]);
            let spread = |a: &[C; 3]| (0..3).flat_map(|i| ((i + 1)..3).map(move |j| (i, j))).map(|(i, j)| (a[i] - a[j]).norm()).fold(f64::INFINITY, f64::min);
            prop_assume!(spread(&z) > 0.2 && spread(&w) > 0.2);
            prop_assume!(z.iter().all(|p| (p - z4).norm() > 0.2));
            let m = mobius_from_three_points(z.map(Into::into), w.map(Into::into)).unwrap();
            let w4 = m.apply(z4.into());
            prop_assume!(w4.as_finite().map(|v| v.norm() < 1e3).unwrap_or(false));
            let before = cross_ratio(z[0], z[1], z[2], z4);
            let after = cross_ratio(w[0], w[1], w[2], w4.as_finite().unwrap());
            prop_assert!((before - after).norm() <= 1e-10 * (1.0 + before.norm()), "{before} vs {after}");
        }
    }
}
