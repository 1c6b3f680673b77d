//! Weight sequences of the two-term families `z^n|z|^s + a·z^m|z|^t` (unprimed) and
//! `z^n|z|^s + a·z̄^m|z|^t` (primed).
//!
//! The defining piecewise expressions are differences of nearly equal fractions, so
//! production code uses equivalent single-fraction forms without cancellation.

use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq)]
pub struct WeightSequences<T> {
    pub m: u64,
    pub n: u64,
    pub s: T,
    pub t: T,
}

pub fn weight_sequences<T: Scalar>(m: u64, n: u64, s: T, t: T) -> WeightSequences<T> {
    WeightSequences { m, n, s, t }
}

fn int<T: Scalar>(v: u64) -> T {
    T::from_u64(v)
}

/// `4(k+p+1) / (2(k+p)+e+2)²` and its cancellation-free difference for `k ≥ p`.
fn diagonal<T: Scalar>(k: u64, p: u64, e: &T) -> T {
    let b = int::<T>(2 * (k + p) + 2) + e.clone();
    if k < p {
        return int::<T>(4 * (k + p + 1)) / (b.clone() * b);
    }
    let a = int::<T>(2 * k + 2) + e.clone();
    let pt = int::<T>(p);
    let num = int::<T>(8 * p)
        * ((pt.clone() + e.clone()) * a.clone() + pt.clone() * (e.clone() + int::<T>(2 * p)));
    num / (a.clone() * a * b.clone() * b)
}

impl<T: Scalar> WeightSequences<T> {
    pub fn sigma(&self, k: u64) -> T {
        diagonal(k, self.n, &self.s)
    }

    pub fn omega(&self, k: u64) -> T {
        diagonal(k, self.m, &self.t)
    }

    pub fn delta(&self, k: u64) -> T {
        let (m, n, s, t) = (self.m, self.n, &self.s, &self.t);
        let p = int::<T>(2 * (k + n) + 2) + s.clone();
        let q = int::<T>(2 * (k + n) + 2) + t.clone();
        if k < m {
            return int::<T>(4 * (k + n + 1)) / (p * q);
        }
        let r = int::<T>(2 * (k + n - m) + 2) + s.clone();
        let w = int::<T>(2 * k + 2) + t.clone();
        let (mt, nt_, kt) = (int::<T>(m), int::<T>(n), int::<T>(k));
        let slope = int::<T>(4 * m * n) + int::<T>(2 * m) * s.clone() + int::<T>(2 * n) * t.clone();
        let constant = int::<T>(4 * m * n * n + 4 * m * n)
            + int::<T>(2 * m * n) * s.clone()
            + mt.clone() * s.clone() * t.clone()
            + int::<T>(2 * m) * s.clone()
            + int::<T>(2 * n * n) * t.clone()
            + nt_.clone() * s.clone() * t.clone()
            + int::<T>(2 * n) * t.clone();
        let num = int::<T>(4) * (slope * kt + constant);
        num / (p * q * r * w)
    }

    pub fn sigma_prime(&self, k: u64) -> T {
        self.sigma(k)
    }

    pub fn omega_prime(&self, k: u64) -> T {
        -self.omega(k)
    }

    /// Linear in `k` over a positive denominator, so its sign pattern is explicit.
    pub fn delta_prime(&self, k: u64) -> T {
        let (num, den) = self.delta_prime_parts(k);
        num / den
    }

    /// `(numerator, positive denominator)` of `δ′_k`.
    pub fn delta_prime_parts(&self, k: u64) -> (T, T) {
        let (m, n, s, t) = (self.m, self.n, &self.s, &self.t);
        let a = int::<T>(2 * (k + n) + 2) + s.clone();
        let b = int::<T>(2 * (k + n + m) + 2) + t.clone();
        let c = int::<T>(2 * (k + n + m) + 2) + s.clone();
        let d = int::<T>(2 * (k + m) + 2) + t.clone();
        let (slope, constant) = self.delta_prime_line();
        (slope * int::<T>(k) + constant, a * b * c * d)
    }

    /// `(slope, intercept)` of the numerator of `δ′_k` as a function of `k`.
    pub fn delta_prime_line(&self) -> (T, T) {
        let (m, n, s, t) = (self.m, self.n, &self.s, &self.t);
        let (mt, nt_) = (int::<T>(m), int::<T>(n));
        let slope = int::<T>(8) * (nt_.clone() * t.clone() - mt.clone() * s.clone());
        let constant = -int::<T>(8 * m * m) * s.clone()
            - int::<T>(4 * m) * s.clone() * t.clone()
            - int::<T>(8 * m) * s.clone()
            + int::<T>(8 * n * n) * t.clone()
            + int::<T>(4 * n) * s.clone() * t.clone()
            + int::<T>(8 * n) * t.clone();
        (slope, constant)
    }

    /// `n(n+s)`, `m(m+t)`, `mn + (ms+nt)/2`: limits of `k³·σ_k`, `k³·ω_k`, `k³·δ_k`.
    pub fn asymptotic_constants(&self) -> (T, T, T) {
        let (mt, nt_) = (int::<T>(self.m), int::<T>(self.n));
        let sigma = nt_.clone() * (nt_.clone() + self.s.clone());
        let omega = mt.clone() * (mt.clone() + self.t.clone());
        let delta =
            mt.clone() * nt_.clone() + (mt * self.s.clone() + nt_ * self.t.clone()) / int::<T>(2);
        (sigma, omega, delta)
    }
}

/// The defining piecewise expressions, evaluated literally.
#[cfg(test)]
pub(crate) mod literal {
    use super::*;

    fn frac<T: Scalar>(num: u64, den: T) -> T {
        int::<T>(num) / den
    }

    pub fn sigma<T: Scalar>(w: &WeightSequences<T>, k: u64) -> T {
        let n = w.n;
        let b = int::<T>(2 * (n + k) + 2) + w.s.clone();
        let head = frac(4 * (k + n + 1), b.clone() * b);
        if k < n {
            return head;
        }
        let a = int::<T>(2 * k + 2) + w.s.clone();
        head - frac(4 * (k - n + 1), a.clone() * a)
    }

    pub fn omega<T: Scalar>(w: &WeightSequences<T>, k: u64) -> T {
        let m = w.m;
        let b = int::<T>(2 * (m + k) + 2) + w.t.clone();
        let head = frac(4 * (k + m + 1), b.clone() * b);
        if k < m {
            return head;
        }
        let a = int::<T>(2 * k + 2) + w.t.clone();
        head - frac(4 * (k - m + 1), a.clone() * a)
    }

    pub fn delta<T: Scalar>(w: &WeightSequences<T>, k: u64) -> T {
        let (m, n) = (w.m, w.n);
        let head = frac(
            4 * (k + n + 1),
            (int::<T>(2 * (k + n) + 2) + w.s.clone()) * (int::<T>(2 * (k + n) + 2) + w.t.clone()),
        );
        if k < m {
            return head;
        }
        head - frac(
            4 * (k - m + 1),
            (int::<T>(2 * (k + n - m) + 2) + w.s.clone()) * (int::<T>(2 * k + 2) + w.t.clone()),
        )
    }

    pub fn sigma_prime<T: Scalar>(w: &WeightSequences<T>, k: u64) -> T {
        sigma(w, k)
    }

    pub fn omega_prime<T: Scalar>(w: &WeightSequences<T>, k: u64) -> T {
        let m = w.m;
        let b = int::<T>(2 * (m + k) + 2) + w.t.clone();
        let head = frac(4 * (k + m + 1), b.clone() * b);
        if k < m {
            return -head;
        }
        let a = int::<T>(2 * k + 2) + w.t.clone();
        frac(4 * (k - m + 1), a.clone() * a) - head
    }

    pub fn delta_prime<T: Scalar>(w: &WeightSequences<T>, k: u64) -> T {
        let (m, n) = (w.m, w.n);
        frac(
            4 * (k + n + 1),
            (int::<T>(2 * (k + n) + 2) + w.s.clone())
                * (int::<T>(2 * (k + n + m) + 2) + w.t.clone()),
        ) - frac(
            4 * (k + m + 1),
            (int::<T>(2 * (k + n + m) + 2) + w.s.clone())
                * (int::<T>(2 * (k + m) + 2) + w.t.clone()),
        )
    }
}
