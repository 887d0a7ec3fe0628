//! Cyclic complex Jacobi for dense Hermitian matrices.
//!
//! Each rotation first removes the phase of the pivot `a_pq` with a diagonal
//! unitary, then applies the classical real rotation that annihilates it.
//! Sweeps stop once `off(A) <= tol * ||A||_F`; by Weyl's inequality every
//! diagonal entry is then within `tol * ||A||_F` of a true eigenvalue.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::Real;

pub(crate) const MAX_SWEEPS: usize = 64;

/// Eigenvalues in nonincreasing order with matching unit eigenvectors.
///
/// `vectors` is row-major `n x n`; column `k` is the eigenvector of
/// `values[k]`.
#[derive(Debug, Clone)]
pub struct EigenDecomposition<T> {
    pub values: Vec<T>,
    pub vectors: Vec<Complex<T>>,
    pub n: usize,
}

impl<T: Real> EigenDecomposition<T> {
    pub fn vector(&self, k: usize) -> Vec<Complex<T>> {
        (0..self.n).map(|i| self.vectors[i * self.n + k]).collect()
    }
}

fn off_norm<T: Real>(a: &[Complex<T>], n: usize) -> T {
    let mut s = T::zero();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s = s + a[i * n + j].norm_sqr();
            }
        }
    }
    s.sqrt()
}

pub(crate) fn jacobi_eigen<T: Real>(
    input: &[Complex<T>],
    n: usize,
    tol: T,
    want_vectors: bool,
) -> Result<EigenDecomposition<T>> {
    let mut a = input.to_vec();
    let mut v: Vec<Complex<T>> = if want_vectors {
        let mut v = vec![Complex::new(T::zero(), T::zero()); n * n];
        for i in 0..n {
            v[i * n + i] = Complex::new(T::one(), T::zero());
        }
        v
    } else {
        Vec::new()
    };

    let norm = a
        .iter()
        .map(|z| z.norm_sqr())
        .fold(T::zero(), |x, y| x + y)
        .sqrt();
    let tol = tol.max(T::lit(4.0) * T::epsilon());
    let threshold = tol * norm;
    // pivots this small relative to the whole matrix are flushed to zero
    let negligible = T::epsilon() * T::lit(1e-3) * norm;

    let mut sweeps = 0;
    loop {
        let off = off_norm(&a, n);
        if off <= threshold {
            break;
        }
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence {
                sweeps,
                residual: off.to_f64().unwrap_or(f64::NAN),
            });
        }
        sweeps += 1;

        for p in 0..n {
            for q in p + 1..n {
                let g = a[p * n + q];
                let abs_g = g.norm();
                if abs_g <= negligible {
                    a[p * n + q] = Complex::new(T::zero(), T::zero());
                    a[q * n + p] = Complex::new(T::zero(), T::zero());
                    continue;
                }
                rotate(&mut a, &mut v, n, p, q, g, abs_g, want_vectors);
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    let diag: Vec<T> = (0..n).map(|i| a[i * n + i].re).collect();
    order.sort_by(|&i, &j| {
        diag[j]
            .partial_cmp(&diag[i])
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    let values = order.iter().map(|&i| diag[i]).collect();
    let vectors = if want_vectors {
        let mut sorted = vec![Complex::new(T::zero(), T::zero()); n * n];
        for (k, &src) in order.iter().enumerate() {
            for i in 0..n {
                sorted[i * n + k] = v[i * n + src];
            }
        }
        sorted
    } else {
        Vec::new()
    };
    Ok(EigenDecomposition { values, vectors, n })
}

#[allow(clippy::too_many_arguments)]
fn rotate<T: Real>(
    a: &mut [Complex<T>],
    v: &mut [Complex<T>],
    n: usize,
    p: usize,
    q: usize,
    g: Complex<T>,
    abs_g: T,
    want_vectors: bool,
) {
    let phase = g / abs_g;
    let phase_conj = phase.conj();
    let alpha = a[p * n + p].re;
    let gamma = a[q * n + q].re;
    let theta = (gamma - alpha) / (T::lit(2.0) * abs_g);
    let t = if theta >= T::zero() {
        T::one() / (theta + (theta * theta + T::one()).sqrt())
    } else {
        -T::one() / (-theta + (theta * theta + T::one()).sqrt())
    };
    let c = T::one() / (t * t + T::one()).sqrt();
    let s = t * c;

    // V restricted to (p, q): [[c, s], [-s conj(e), c conj(e)]]
    let vpp = Complex::new(c, T::zero());
    let vpq = Complex::new(s, T::zero());
    let vqp = phase_conj * (-s);
    let vqq = phase_conj * c;

    for k in 0..n {
        let akp = a[k * n + p];
        let akq = a[k * n + q];
        a[k * n + p] = akp * vpp + akq * vqp;
        a[k * n + q] = akp * vpq + akq * vqq;
    }
    for k in 0..n {
        let apk = a[p * n + k];
        let aqk = a[q * n + k];
        a[p * n + k] = vpp.conj() * apk + vqp.conj() * aqk;
        a[q * n + k] = vpq.conj() * apk + vqq.conj() * aqk;
    }
    a[p * n + q] = Complex::new(T::zero(), T::zero());
    a[q * n + p] = Complex::new(T::zero(), T::zero());
    a[p * n + p].im = T::zero();
    a[q * n + q].im = T::zero();

    if want_vectors {
        for k in 0..n {
            let xkp = v[k * n + p];
            let xkq = v[k * n + q];
            v[k * n + p] = xkp * vpp + xkq * vqp;
            v[k * n + q] = xkp * vpq + xkq * vqq;
        }
    }
}
