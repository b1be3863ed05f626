//! Real functions carried together with their first three derivatives.

use std::fmt;
use std::sync::Arc;

use crate::numerics::{derivative, DerivativeOrder, Grid};
use crate::scalar::Real;

pub type RealFn<T> = Arc<dyn Fn(T) -> T + Send + Sync>;

/// A function with optional closed-form derivatives; missing ones fall back
/// to Richardson central differences with step `fd_step`.
#[derive(Clone)]
pub struct SmoothFn<T> {
    value: RealFn<T>,
    derivs: [Option<RealFn<T>>; 3],
    fd_step: T,
}

impl<T: fmt::Debug> fmt::Debug for SmoothFn<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SmoothFn")
            .field("analytic_derivatives", &self.derivs.iter().filter(|d| d.is_some()).count())
            .field("fd_step", &self.fd_step)
            .finish()
    }
}

impl<T: Real> SmoothFn<T> {
    pub fn numeric(value: impl Fn(T) -> T + Send + Sync + 'static) -> Self {
        Self { value: Arc::new(value), derivs: [None, None, None], fd_step: T::lit(1e-3) }
    }

    pub fn analytic(
        value: impl Fn(T) -> T + Send + Sync + 'static,
        d1: impl Fn(T) -> T + Send + Sync + 'static,
        d2: impl Fn(T) -> T + Send + Sync + 'static,
        d3: impl Fn(T) -> T + Send + Sync + 'static,
    ) -> Self {
        Self {
            value: Arc::new(value),
            derivs: [Some(Arc::new(d1)), Some(Arc::new(d2)), Some(Arc::new(d3))],
            fd_step: T::lit(1e-3),
        }
    }

    pub fn with_first(mut self, d1: impl Fn(T) -> T + Send + Sync + 'static) -> Self {
        self.derivs[0] = Some(Arc::new(d1));
        self
    }

    pub fn with_second(mut self, d2: impl Fn(T) -> T + Send + Sync + 'static) -> Self {
        self.derivs[1] = Some(Arc::new(d2));
        self
    }

    pub fn with_fd_step(mut self, h: T) -> Self {
        self.fd_step = h;
        self
    }

    pub fn constant(c: T) -> Self {
        Self::analytic(move |_| c, |_| T::zero(), |_| T::zero(), |_| T::zero())
    }

    pub fn identity() -> Self {
        Self::analytic(|x| x, |_| T::one(), |_| T::zero(), |_| T::zero())
    }

    pub fn tanh() -> Self {
        Self::analytic(
            |x: T| x.tanh(),
            |x: T| {
                let s = x.cosh().recip();
                s * s
            },
            |x: T| {
                let s = x.cosh().recip();
                -T::lit(2.0) * x.tanh() * s * s
            },
            |x: T| {
                let t = x.tanh();
                let s2 = x.cosh().recip().powi(2);
                T::lit(2.0) * s2 * (T::lit(3.0) * t * t - T::one())
            },
        )
    }

    pub fn value(&self, x: T) -> T {
        (self.value)(x)
    }

    fn nth(&self, k: usize, x: T) -> T {
        match &self.derivs[k] {
            Some(d) => d(x),
            None => {
                let order = [DerivativeOrder::First, DerivativeOrder::Second, DerivativeOrder::Third][k];
                derivative(|t| (self.value)(t), x, order, self.fd_step)
            }
        }
    }

    pub fn d1(&self, x: T) -> T {
        self.nth(0, x)
    }

    pub fn d2(&self, x: T) -> T {
        self.nth(1, x)
    }

    pub fn d3(&self, x: T) -> T {
        self.nth(2, x)
    }

    pub fn sample(&self, grid: &Grid<T>) -> Vec<T> {
        grid.points().map(|x| self.value(x)).collect()
    }
}
