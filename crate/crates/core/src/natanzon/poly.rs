//! Dense real polynomials and rational functions with endpoint cancellation.

use crate::scalar::Real;

/// Coefficients in ascending powers.
#[derive(Debug, Clone, PartialEq)]
pub(crate) struct Poly<T>(pub Vec<T>);

impl<T: Real> Poly<T> {
    pub fn eval(&self, z: T) -> T {
        self.0.iter().rev().fold(T::zero(), |acc, &c| acc * z + c)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.0.len().max(other.0.len());
        Poly((0..n).map(|i| *self.0.get(i).unwrap_or(&T::zero()) + *other.0.get(i).unwrap_or(&T::zero())).collect())
    }

    pub fn scale(&self, s: T) -> Self {
        Poly(self.0.iter().map(|&c| c * s).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.0.is_empty() || other.0.is_empty() {
            return Poly(vec![]);
        }
        let mut out = vec![T::zero(); self.0.len() + other.0.len() - 1];
        for (i, &a) in self.0.iter().enumerate() {
            for (j, &b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly(out)
    }

    pub fn derivative(&self) -> Self {
        Poly(self.0.iter().enumerate().skip(1).map(|(k, &c)| c * T::from_count(k)).collect())
    }

    /// Σ|cₖ|·max(1,|z|)ᵏ, the scale against which `eval(z)` is judged zero.
    fn magnitude(&self, z: T) -> T {
        let r = z.abs().max(T::one());
        self.0.iter().rev().fold(T::zero(), |acc, &c| acc * r + c.abs())
    }

    fn vanishes_at(&self, z: T) -> bool {
        let mag = self.magnitude(z);
        mag == T::zero() || self.eval(z).abs() <= T::lit(64.0) * T::epsilon() * mag
    }

    /// Quotient of synthetic division by `(z − root)`, dropping the remainder.
    fn deflate(&self, root: T) -> Self {
        let n = self.0.len();
        if n <= 1 {
            return Poly(vec![]);
        }
        let mut q = vec![T::zero(); n - 1];
        let mut carry = T::zero();
        for k in (1..n).rev() {
            carry = self.0[k] + carry * root;
            q[k - 1] = carry;
        }
        Poly(q)
    }
}

/// `num/den` with common factors at chosen roots divided out.
#[derive(Debug, Clone)]
pub(crate) struct Rational<T> {
    pub num: Poly<T>,
    pub den: Poly<T>,
}

impl<T: Real> Rational<T> {
    /// Divides out `(z − root)` from both polynomials while both vanish there.
    pub fn cancel_at(mut self, root: T) -> Self {
        while !self.den.0.is_empty() && self.den.vanishes_at(root) && self.num.vanishes_at(root) {
            if self.num.0.iter().all(|c| *c == T::zero()) {
                break;
            }
            self.num = self.num.deflate(root);
            self.den = self.den.deflate(root);
        }
        self
    }

    /// `None` where the (cancelled) denominator vanishes.
    pub fn eval(&self, z: T) -> Option<T> {
        if self.den.vanishes_at(z) {
            if self.num.0.iter().all(|c| *c == T::zero()) {
                return Some(T::zero());
            }
            return None;
        }
        Some(self.num.eval(z) / self.den.eval(z))
    }

    pub fn derivative(&self) -> Self {
        Rational {
            num: self.num.derivative().mul(&self.den).add(&self.num.mul(&self.den.derivative()).scale(-T::one())),
            den: self.den.mul(&self.den),
        }
    }
}
