//! Banded Hermitian matrices: inertia by LDLᴴ, extreme eigenvalues by bisection,
//! eigenvectors by shifted inverse iteration. Cost is O(n·b²) per factorization.

use num_complex::Complex64;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct HermitianBand {
    n: usize,
    bandwidth: usize,
    /// Row-major upper band: `upper[i * (b+1) + o] = A[i][i+o]`.
    upper: Vec<Complex64>,
}

struct Ldl {
    d: Vec<f64>,
    /// `l[i * b + (k-1)] = L[i][i-k]`, k = 1..=b.
    l: Vec<Complex64>,
}

impl HermitianBand {
    pub fn zeros(n: usize, bandwidth: usize) -> Self {
        let bandwidth = bandwidth.min(n.saturating_sub(1));
        Self {
            n,
            bandwidth,
            upper: vec![Complex64::new(0.0, 0.0); n * (bandwidth + 1)],
        }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn bandwidth(&self) -> usize {
        self.bandwidth
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        let (lo, hi, conj) = if i <= j { (i, j, false) } else { (j, i, true) };
        let off = hi - lo;
        if off > self.bandwidth || hi >= self.n {
            return Complex64::new(0.0, 0.0);
        }
        let v = self.upper[lo * (self.bandwidth + 1) + off];
        if conj {
            v.conj()
        } else {
            v
        }
    }

    /// Sets `A[i][j]` (and implicitly `A[j][i]`); diagonal entries keep only their real part.
    pub fn set(&mut self, i: usize, j: usize, v: Complex64) {
        let (lo, hi, v) = if i <= j { (i, j, v) } else { (j, i, v.conj()) };
        let off = hi - lo;
        assert!(off <= self.bandwidth, "entry ({i},{j}) outside band");
        let v = if off == 0 {
            Complex64::new(v.re, 0.0)
        } else {
            v
        };
        self.upper[lo * (self.bandwidth + 1) + off] = v;
    }

    /// `W A W` for a positive diagonal `W`.
    pub fn scaled(&self, w: &[f64]) -> Self {
        let mut out = self.clone();
        for i in 0..self.n {
            for o in 0..=self.bandwidth {
                if i + o < self.n {
                    out.upper[i * (self.bandwidth + 1) + o] *= w[i] * w[i + o];
                }
            }
        }
        out
    }

    pub fn negated(&self) -> Self {
        Self {
            upper: self.upper.iter().map(|v| -v).collect(),
            ..self.clone()
        }
    }

    pub fn apply(&self, x: &[Complex64]) -> Vec<Complex64> {
        let mut y = vec![Complex64::new(0.0, 0.0); self.n];
        for i in 0..self.n {
            for o in 0..=self.bandwidth {
                let j = i + o;
                if j >= self.n {
                    break;
                }
                let a = self.upper[i * (self.bandwidth + 1) + o];
                y[i] += a * x[j];
                if o > 0 {
                    y[j] += a.conj() * x[i];
                }
            }
        }
        y
    }

    pub fn rayleigh(&self, x: &[Complex64]) -> f64 {
        let ax = self.apply(x);
        let num: f64 = x.iter().zip(&ax).map(|(a, b)| (a.conj() * b).re).sum();
        let den: f64 = x.iter().map(|a| a.norm_sqr()).sum();
        num / den
    }

    /// Gershgorin enclosure of the spectrum.
    pub fn gershgorin(&self) -> (f64, f64) {
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for i in 0..self.n {
            let lo_j = i.saturating_sub(self.bandwidth);
            let hi_j = (i + self.bandwidth).min(self.n - 1);
            let radius: f64 = (lo_j..=hi_j)
                .filter(|&j| j != i)
                .map(|j| self.get(i, j).norm())
                .sum();
            let d = self.get(i, i).re;
            lo = lo.min(d - radius);
            hi = hi.max(d + radius);
        }
        (lo, hi)
    }

    fn scale(&self) -> f64 {
        self.upper.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    /// LDLᴴ of `A − σI` without pivoting. Zero pivots are nudged to a tiny negative value
    /// so the inertia count stays well defined.
    fn factor(&self, sigma: f64) -> Ldl {
        let n = self.n;
        let b = self.bandwidth;
        let tiny = f64::MIN_POSITIVE.sqrt() * (1.0 + self.scale());
        let mut d = vec![0.0f64; n];
        let mut l = vec![Complex64::new(0.0, 0.0); n * b.max(1)];
        let lget = |l: &[Complex64], i: usize, j: usize| -> Complex64 {
            // L[i][j], j < i
            l[i * b + (i - j - 1)]
        };
        for j in 0..n {
            let k0 = j.saturating_sub(b);
            let mut dj = self.get(j, j).re - sigma;
            for k in k0..j {
                dj -= lget(&l, j, k).norm_sqr() * d[k];
            }
            if dj == 0.0 || !dj.is_finite() {
                dj = -tiny;
            }
            d[j] = dj;
            for i in (j + 1)..=(j + b).min(n.saturating_sub(1)) {
                let mut v = self.get(i, j);
                let k_start = i.saturating_sub(b).max(k0);
                for k in k_start..j {
                    v -= lget(&l, i, k) * d[k] * lget(&l, j, k).conj();
                }
                l[i * b + (i - j - 1)] = v / dj;
            }
        }
        Ldl { d, l }
    }

    /// Number of eigenvalues strictly below `sigma` (Sylvester inertia).
    pub fn count_below(&self, sigma: f64) -> usize {
        self.factor(sigma).d.iter().filter(|&&v| v < 0.0).count()
    }

    fn solve(&self, f: &Ldl, rhs: &[Complex64]) -> Vec<Complex64> {
        let n = self.n;
        let b = self.bandwidth;
        let mut y = rhs.to_vec();
        for i in 0..n {
            for k in i.saturating_sub(b)..i {
                let lik = f.l[i * b + (i - k - 1)];
                let yk = y[k];
                y[i] -= lik * yk;
            }
        }
        for i in 0..n {
            y[i] /= f.d[i];
        }
        for i in (0..n).rev() {
            for j in (i + 1)..=(i + b).min(n.saturating_sub(1)) {
                let lji = f.l[j * b + (j - i - 1)];
                let yj = y[j];
                y[i] -= lji.conj() * yj;
            }
        }
        y
    }

    /// Smallest eigenvalue by bisection on the inertia count.
    pub fn min_eigenvalue(&self) -> f64 {
        if self.n == 0 {
            return 0.0;
        }
        let (mut lo, mut hi) = self.gershgorin();
        let width = (hi - lo).abs().max(f64::MIN_POSITIVE);
        lo -= 1e-12 * width;
        hi += 1e-12 * width;
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if self.count_below(mid) >= 1 {
                hi = mid;
            } else {
                lo = mid;
            }
            if hi - lo <= 4.0 * f64::EPSILON * lo.abs().max(hi.abs()) {
                break;
            }
        }
        0.5 * (lo + hi)
    }

    /// Smallest eigenvalue and a unit eigenvector.
    pub fn min_eigenpair(&self) -> Result<(f64, Vec<Complex64>)> {
        if self.n == 0 {
            return Err(Error::Eigen("empty matrix".into()));
        }
        let lambda = self.min_eigenvalue();
        let scale = self.scale().max(f64::MIN_POSITIVE);
        let mu = lambda - (1e-10 * scale).max(1e-12 * lambda.abs());
        let f = self.factor(mu);
        if f.d.iter().any(|&v| v <= 0.0) {
            return Err(Error::Eigen(
                "shifted matrix is not positive definite".into(),
            ));
        }
        // deterministic, non-degenerate start vector
        let mut x: Vec<Complex64> = (0..self.n)
            .map(|i| Complex64::new(1.0 + 0.5 * ((i * 7919) % 13) as f64 / 13.0, 0.0))
            .collect();
        for _ in 0..8 {
            x = self.solve(&f, &x);
            let norm = x.iter().map(|v| v.norm_sqr()).sum::<f64>().sqrt();
            if !norm.is_finite() || norm == 0.0 {
                return Err(Error::Eigen("inverse iteration diverged".into()));
            }
            for v in &mut x {
                *v /= norm;
            }
        }
        Ok((self.rayleigh(&x), x))
    }

    /// Largest eigenvalue and a unit eigenvector.
    pub fn max_eigenpair(&self) -> Result<(f64, Vec<Complex64>)> {
        let (l, x) = self.negated().min_eigenpair()?;
        Ok((-l, x))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use nalgebra::DMatrix;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_band(rng: &mut ChaCha8Rng, n: usize, b: usize, complex: bool) -> HermitianBand {
        let mut m = HermitianBand::zeros(n, b);
        for i in 0..n {
            for j in i..(i + b + 1).min(n) {
                let im = if complex && j != i {
                    rng.gen_range(-1.0..1.0)
                } else {
                    0.0
                };
                m.set(i, j, Complex64::new(rng.gen_range(-1.0..1.0), im));
            }
        }
        m
    }

    fn dense(m: &HermitianBand) -> DMatrix<Complex64> {
        DMatrix::from_fn(m.size(), m.size(), |i, j| m.get(i, j))
    }

    #[test]
    fn matches_dense_eigensolver() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for trial in 0..30 {
            let n = 5 + trial % 20;
            let b = 1 + trial % 4;
            let m = random_band(&mut rng, n, b, trial % 2 == 0);
            let eig = dense(&m).symmetric_eigenvalues();
            let expected_min = eig.iter().cloned().fold(f64::INFINITY, f64::min);
            let expected_max = eig.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
            let (lmin, x) = m.min_eigenpair().unwrap();
            assert!(
                (lmin - expected_min).abs() < 1e-10,
                "{lmin} vs {expected_min}"
            );
            let residual: f64 = m
                .apply(&x)
                .iter()
                .zip(&x)
                .map(|(ax, xi)| (ax - xi * lmin).norm_sqr())
                .sum::<f64>()
                .sqrt();
            assert!(residual < 1e-8, "residual {residual}");
            let (lmax, _) = m.max_eigenpair().unwrap();
            assert!((lmax - expected_max).abs() < 1e-10);
            for sigma in [-0.5, 0.0, 0.3] {
                let count = eig.iter().filter(|&&e| e < sigma).count();
                assert_eq!(m.count_below(sigma), count);
            }
        }
    }

    #[test]
    fn zero_matrix_has_zero_spectrum() {
        let m = HermitianBand::zeros(10, 2);
        assert_eq!(m.min_eigenvalue(), 0.0);
    }

    #[test]
    fn scaling_is_congruence() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let m = random_band(&mut rng, 12, 2, true);
        let w: Vec<f64> = (0..12).map(|i| 1.0 + i as f64).collect();
        let s = m.scaled(&w);
        // inertia is preserved
        assert_eq!(m.count_below(0.0), s.count_below(0.0));
        assert!((s.get(3, 5) - m.get(3, 5) * 4.0 * 6.0).norm() < 1e-12);
    }
}
