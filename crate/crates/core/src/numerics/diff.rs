use crate::scalar::Real;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DerivativeOrder {
    First,
    Second,
    Third,
}

fn central<T: Real, F: Fn(T) -> T>(f: &F, x: T, order: DerivativeOrder, h: T) -> T {
    let two = T::lit(2.0);
    match order {
        DerivativeOrder::First => (f(x + h) - f(x - h)) / (two * h),
        DerivativeOrder::Second => (f(x + h) - two * f(x) + f(x - h)) / (h * h),
        DerivativeOrder::Third => {
            (f(x + two * h) - two * f(x + h) + two * f(x - h) - f(x - two * h)) / (two * h * h * h)
        }
    }
}

/// Central difference with one Richardson step; error O(h⁴).
pub fn derivative<T, F>(f: F, x: T, order: DerivativeOrder, h: T) -> T
where
    T: Real,
    F: Fn(T) -> T,
{
    let coarse = central(&f, x, order, h);
    let fine = central(&f, x, order, h * T::lit(0.5));
    (T::lit(4.0) * fine - coarse) / T::lit(3.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sin_first() {
        assert!((derivative(f64::sin, 0.0, DerivativeOrder::First, 1e-2) - 1.0).abs() < 1e-10);
    }

    #[test]
    fn exp_second() {
        assert!((derivative(f64::exp, 0.0, DerivativeOrder::Second, 1e-2) - 1.0).abs() < 1e-8);
    }

    #[test]
    fn tanh_squared_first() {
        let x = 0.7_f64;
        let exact = 2.0 * x.tanh() / x.cosh().powi(2);
        let est = derivative(|t: f64| t.tanh().powi(2), x, DerivativeOrder::First, 1e-3);
        assert!((est - exact).abs() < 1e-11);
        assert!((est - 0.767_23).abs() < 1e-5);
    }

    #[test]
    fn cubic_third_is_exact() {
        let est = derivative(|t: f64| t.powi(3) - 2.0 * t, 0.4, DerivativeOrder::Third, 1e-2);
        assert!((est - 6.0).abs() < 1e-6);
    }

    #[test]
    fn fourth_order_convergence() {
        let f = |t: f64| (2.0 * t).sin();
        let exact = 2.0 * 0.8_f64.cos();
        let e1 = (derivative(f, 0.4, DerivativeOrder::First, 0.1) - exact).abs();
        let e2 = (derivative(f, 0.4, DerivativeOrder::First, 0.05) - exact).abs();
        let order = (e1 / e2).log2();
        assert!((order - 4.0).abs() < 0.2, "observed order {order}");
    }
}
