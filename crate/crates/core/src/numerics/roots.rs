use crate::numerics::NumericsError;
use crate::scalar::Real;

#[derive(Debug, Clone, Copy)]
pub struct RootOptions<T> {
    pub tol: T,
    pub max_iterations: usize,
}

impl<T: Real> RootOptions<T> {
    pub fn with_tol(tol: T) -> Self {
        Self { tol, max_iterations: 200 }
    }
}

/// Brent's method on `[a, b]` with a 200-iteration cap.
pub fn find_root<T, F>(f: F, a: T, b: T, tol: T) -> Result<T, NumericsError>
where
    T: Real,
    F: FnMut(T) -> T,
{
    find_root_with(f, a, b, RootOptions::with_tol(tol))
}

/// Brent's method (inverse quadratic interpolation, secant, bisection).
///
/// The iterate is always inside the current bracket, so the returned point
/// never leaves `[min(a, b), max(a, b)]`. Terminates when `|f(x)| ≤ tol` or
/// the bracket is narrower than `tol`.
pub fn find_root_with<T, F>(mut f: F, a: T, b: T, opts: RootOptions<T>) -> Result<T, NumericsError>
where
    T: Real,
    F: FnMut(T) -> T,
{
    if !(opts.tol > T::zero()) {
        return Err(NumericsError::InvalidArgument("root tolerance must be positive".into()));
    }
    let (mut a, mut b) = (a, b);
    let mut fa = f(a);
    let mut fb = f(b);
    if fa == T::zero() {
        return Ok(a);
    }
    if fb == T::zero() {
        return Ok(b);
    }
    if fa.is_nan() || fb.is_nan() || fa.signum() == fb.signum() {
        return Err(NumericsError::NoSignChange {
            a: a.as_f64(),
            b: b.as_f64(),
            fa: fa.as_f64(),
            fb: fb.as_f64(),
        });
    }

    let two = T::lit(2.0);
    let half = T::lit(0.5);
    let three = T::lit(3.0);
    let (mut c, mut fc) = (b, fb);
    let mut d = b - a;
    let mut e = d;

    for _ in 0..opts.max_iterations {
        // keep the root between b and c
        if fb.signum() == fc.signum() {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if fc.abs() < fb.abs() {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        let tol1 = two * T::epsilon() * b.abs() + half * opts.tol;
        let xm = half * (c - b);
        if fb.abs() <= opts.tol || xm.abs() <= tol1 || fb == T::zero() {
            return Ok(b);
        }
        if e.abs() >= tol1 && fa.abs() > fb.abs() {
            let s = fb / fa;
            let (mut p, mut q);
            if a == c {
                p = two * xm * s;
                q = T::one() - s;
            } else {
                let qa = fa / fc;
                let r = fb / fc;
                p = s * (two * xm * qa * (qa - r) - (b - a) * (r - T::one()));
                q = (qa - T::one()) * (r - T::one()) * (s - T::one());
            }
            if p > T::zero() {
                q = -q;
            }
            p = p.abs();
            let min1 = three * xm * q - (tol1 * q).abs();
            let min2 = (e * q).abs();
            if two * p < min1.min(min2) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        if d.abs() > tol1 {
            b += d;
        } else {
            b += if xm > T::zero() { tol1 } else { -tol1 };
        }
        fb = f(b);
        if fb.is_nan() {
            // bisect back into the bracket
            b = a + xm;
            fb = f(b);
        }
    }
    Err(NumericsError::MaxIterations { iterations: opts.max_iterations, estimate: b.as_f64() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn quadratic_root() {
        let r = find_root(|x: f64| x * x - 4.0, 0.0, 3.0, 1e-12).unwrap();
        assert!((r - 2.0).abs() < 1e-12);
    }

    #[test]
    fn tanh_root_matches_arctanh() {
        let r = find_root(|x: f64| x.tanh() - 0.5, 0.0, 2.0, 1e-12).unwrap();
        assert!((r - 0.5_f64.atanh()).abs() < 1e-12);
        assert!((r - 0.549_306_1).abs() < 1e-7);
    }

    #[test]
    fn odd_function_root_at_zero() {
        let r = find_root(|x: f64| x, -1.0, 1.0, 1e-12).unwrap();
        assert!(r.abs() <= 1e-12);
    }

    #[test]
    fn no_sign_change_is_an_error() {
        let err = find_root(|x: f64| x * x + 1.0, -1.0, 1.0, 1e-12).unwrap_err();
        assert!(matches!(err, NumericsError::NoSignChange { .. }));
    }

    #[test]
    fn iteration_cap_is_reported() {
        let opts = RootOptions { tol: 1e-300, max_iterations: 3 };
        let err = find_root_with(|x: f64| x.powi(3) - 0.3, 0.0, 1.0, opts).unwrap_err();
        assert!(matches!(err, NumericsError::MaxIterations { iterations: 3, .. }));
    }

    #[test]
    fn works_in_f32() {
        let r = find_root(|x: f32| x * x - 2.0, 0.0, 2.0, 1e-6).unwrap();
        assert!((r - std::f32::consts::SQRT_2).abs() < 1e-5);
    }

    proptest! {
        #[test]
        fn root_stays_in_bracket(root in -5.0f64..5.0, lo in 0.01f64..10.0, hi in 0.01f64..10.0, k in 1i32..4) {
            let a = root - lo;
            let b = root + hi;
            // odd power keeps the sign change; the kink-free but flat case stresses bisection
            let x = find_root(|x: f64| (x - root).powi(2 * k - 1), a, b, 1e-12).unwrap();
            prop_assert!(x >= a && x <= b);
        }
    }
}
