//! Dense Hermitian matrices and their spectra.

mod jacobi;
mod spectrum;

pub use jacobi::EigenDecomposition;
pub use spectrum::Spectrum;

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::Real;

/// An `n x n` complex Hermitian matrix, stored row-major.
///
/// Construction symmetrizes small asymmetries and rejects larger ones, so
/// `get(i, j) == get(j, i).conj()` holds exactly for every stored matrix and
/// the diagonal is real.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianMatrix<T> {
    n: usize,
    entries: Vec<Complex<T>>,
}

fn czero<T: Real>() -> Complex<T> {
    Complex::new(T::zero(), T::zero())
}

impl<T: Real> HermitianMatrix<T> {
    /// Relative tolerance for accepting near-Hermitian input.
    pub fn hermiticity_tolerance() -> T {
        T::lit(1e-12).max(T::lit(64.0) * T::epsilon())
    }

    pub fn new(n: usize, mut entries: Vec<Complex<T>>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Argument("matrix size must be positive".into()));
        }
        if entries.len() != n * n {
            return Err(Error::Argument(format!(
                "expected {} entries for a {n}x{n} matrix, got {}",
                n * n,
                entries.len()
            )));
        }
        if entries
            .iter()
            .any(|z| !z.re.is_finite() || !z.im.is_finite())
        {
            return Err(Error::Argument("matrix entries must be finite".into()));
        }
        let scale = entries.iter().map(|z| z.norm()).fold(T::one(), T::max);
        let tol = Self::hermiticity_tolerance() * scale;
        for i in 0..n {
            for j in i..n {
                let upper = entries[i * n + j];
                let lower = entries[j * n + i];
                let deviation = (upper - lower.conj()).norm();
                if deviation > tol {
                    return Err(Error::NotHermitian {
                        row: i + 1,
                        col: j + 1,
                        deviation: deviation.to_f64().unwrap_or(f64::NAN),
                    });
                }
                let avg = (upper + lower.conj()) / T::lit(2.0);
                if i == j {
                    entries[i * n + i] = Complex::new(avg.re, T::zero());
                } else {
                    entries[i * n + j] = avg;
                    entries[j * n + i] = avg.conj();
                }
            }
        }
        Ok(Self { n, entries })
    }

    /// Real symmetric matrix from row-major entries.
    pub fn from_real(n: usize, entries: Vec<T>) -> Result<Self> {
        Self::new(
            n,
            entries
                .into_iter()
                .map(|x| Complex::new(x, T::zero()))
                .collect(),
        )
    }

    /// From separate real and imaginary row lists; a missing imaginary part
    /// means zero.
    pub fn from_parts(re: &[Vec<T>], im: Option<&[Vec<T>]>) -> Result<Self> {
        let n = re.len();
        if re.iter().any(|r| r.len() != n) {
            return Err(Error::Argument("real part must be square".into()));
        }
        if let Some(im) = im {
            if im.len() != n || im.iter().any(|r| r.len() != n) {
                return Err(Error::Argument(
                    "imaginary part must match the real part".into(),
                ));
            }
        }
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let y = im.map_or(T::zero(), |m| m[i][j]);
                entries.push(Complex::new(re[i][j], y));
            }
        }
        Self::new(n, entries)
    }

    pub fn diagonal(d: &[T]) -> Self {
        assert!(!d.is_empty(), "diagonal matrix needs at least one entry");
        let n = d.len();
        let mut entries = vec![czero(); n * n];
        for (i, &x) in d.iter().enumerate() {
            entries[i * n + i] = Complex::new(x, T::zero());
        }
        Self { n, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Zero-based entry access.
    pub fn get(&self, i: usize, j: usize) -> Complex<T> {
        self.entries[i * self.n + j]
    }

    pub fn entries(&self) -> &[Complex<T>] {
        &self.entries
    }

    pub fn diag(&self) -> Vec<T> {
        (0..self.n)
            .map(|i| self.entries[i * self.n + i].re)
            .collect()
    }

    pub fn trace(&self) -> T {
        self.diag().into_iter().fold(T::zero(), |a, b| a + b)
    }

    pub fn frobenius_norm(&self) -> T {
        self.entries
            .iter()
            .map(|z| z.norm_sqr())
            .fold(T::zero(), |a, b| a + b)
            .sqrt()
    }

    pub fn is_real(&self) -> bool {
        self.entries.iter().all(|z| z.im == T::zero())
    }

    /// Row lists of the real and imaginary parts.
    pub fn to_parts(&self) -> (Vec<Vec<T>>, Vec<Vec<T>>) {
        let rows = |f: fn(&Complex<T>) -> T| {
            (0..self.n)
                .map(|i| {
                    (0..self.n)
                        .map(|j| f(&self.entries[i * self.n + j]))
                        .collect()
                })
                .collect()
        };
        (rows(|z| z.re), rows(|z| z.im))
    }

    /// The top-left `j x j` block, `1 <= j <= n`.
    pub fn leading_principal_submatrix(&self, j: usize) -> Result<Self> {
        if j == 0 || j > self.n {
            return Err(Error::Argument(format!(
                "submatrix size {j} out of range 1..={}",
                self.n
            )));
        }
        let mut entries = Vec::with_capacity(j * j);
        for r in 0..j {
            entries.extend_from_slice(&self.entries[r * self.n..r * self.n + j]);
        }
        Ok(Self { n: j, entries })
    }

    /// Places `self` in the top-left corner of an `n x n` zero matrix.
    pub fn embed_top_left(&self, n: usize) -> Result<Self> {
        if n < self.n {
            return Err(Error::Argument(format!(
                "cannot embed size {} into {n}",
                self.n
            )));
        }
        let mut entries = vec![czero(); n * n];
        for i in 0..self.n {
            for j in 0..self.n {
                entries[i * n + j] = self.get(i, j);
            }
        }
        Ok(Self { n, entries })
    }

    /// Eigenvalues sorted nonincreasing.
    ///
    /// Each value is within `tol * ||A||_F` of a true eigenvalue, counted with
    /// multiplicity. Fails with [`Error::NoConvergence`] when the sweep budget
    /// runs out.
    pub fn eigenvalues_desc(&self, tol: T) -> Result<Vec<T>> {
        Ok(self.eigen_desc_impl(tol, false)?.values)
    }

    /// Eigenvalues sorted nonincreasing together with an orthonormal basis of
    /// eigenvectors.
    pub fn eigen_desc(&self, tol: T) -> Result<EigenDecomposition<T>> {
        self.eigen_desc_impl(tol, true)
    }

    fn eigen_desc_impl(&self, tol: T, vectors: bool) -> Result<EigenDecomposition<T>> {
        if tol.is_nan() || tol <= T::zero() {
            return Err(Error::Argument(
                "eigensolver tolerance must be positive".into(),
            ));
        }
        jacobi::jacobi_eigen(&self.entries, self.n, tol, vectors)
    }

    /// `U A U^H` for a row-major `n x n` matrix `U` (unitary for the result
    /// to stay on the same orbit).
    pub fn conjugate_by(&self, u: &[Complex<T>]) -> Result<Self> {
        let n = self.n;
        if u.len() != n * n {
            return Err(Error::Argument(
                "conjugating matrix has the wrong size".into(),
            ));
        }
        let mut ua = vec![czero::<T>(); n * n];
        for i in 0..n {
            for k in 0..n {
                let uik = u[i * n + k];
                for j in 0..n {
                    ua[i * n + j] = ua[i * n + j] + uik * self.entries[k * n + j];
                }
            }
        }
        let mut out = vec![czero(); n * n];
        for i in 0..n {
            for j in 0..n {
                let mut s = czero();
                for k in 0..n {
                    s = s + ua[i * n + k] * u[j * n + k].conj();
                }
                out[i * n + j] = s;
            }
        }
        Self::new(n, out)
    }

    pub fn map<U: Real>(&self, f: impl Fn(T) -> U) -> HermitianMatrix<U> {
        HermitianMatrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .map(|z| Complex::new(f(z.re), f(z.im)))
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex<f64> {
        Complex::new(re, im)
    }

    #[test]
    fn diagonal_eigenvalues() {
        let a = HermitianMatrix::diagonal(&[1.0, 5.0, 3.0]);
        assert_eq!(a.eigenvalues_desc(1e-12).unwrap(), vec![5.0, 3.0, 1.0]);
    }

    #[test]
    fn involution_eigenvalues() {
        let a = HermitianMatrix::from_real(2, vec![0.0f64, 1.0, 1.0, 0.0]).unwrap();
        let ev = a.eigenvalues_desc(1e-12).unwrap();
        assert!((ev[0] - 1.0).abs() < 1e-14 && (ev[1] + 1.0).abs() < 1e-14);
    }

    #[test]
    fn rank_one_eigenvalues() {
        // roots of t^2 - 2t
        let a = HermitianMatrix::from_real(2, vec![1.0f64, 1.0, 1.0, 1.0]).unwrap();
        let ev = a.eigenvalues_desc(1e-12).unwrap();
        assert!((ev[0] - 2.0).abs() < 1e-14 && ev[1].abs() < 1e-14);
    }

    #[test]
    fn complex_two_by_two_matches_closed_form() {
        // [[1, i], [-i, 2]] has eigenvalues (3 ± sqrt 5) / 2
        let a = HermitianMatrix::new(2, vec![c(1.0, 0.0), c(0.0, 1.0), c(0.0, -1.0), c(2.0, 0.0)])
            .unwrap();
        let ev = a.eigenvalues_desc(1e-12).unwrap();
        let r = 5f64.sqrt();
        assert!((ev[0] - (3.0 + r) / 2.0).abs() < 1e-13);
        assert!((ev[1] - (3.0 - r) / 2.0).abs() < 1e-13);
    }

    #[test]
    fn eigenvectors_are_orthonormal_and_correct() {
        let a = HermitianMatrix::new(
            3,
            vec![
                c(2.0, 0.0),
                c(1.0, -1.0),
                c(0.0, 0.5),
                c(1.0, 1.0),
                c(-1.0, 0.0),
                c(0.3, 0.0),
                c(0.0, -0.5),
                c(0.3, 0.0),
                c(4.0, 0.0),
            ],
        )
        .unwrap();
        let ed = a.eigen_desc(1e-13).unwrap();
        for k in 0..3 {
            let x = ed.vector(k);
            for i in 0..3 {
                let ax: Complex<f64> = (0..3).map(|j| a.get(i, j) * x[j]).sum();
                assert!((ax - x[i] * ed.values[k]).norm() < 1e-12);
            }
            for l in 0..3 {
                let y = ed.vector(l);
                let dot: Complex<f64> = (0..3).map(|i| x[i].conj() * y[i]).sum();
                let expected = if k == l { 1.0 } else { 0.0 };
                assert!((dot - c(expected, 0.0)).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn single_precision_solver() {
        let a = HermitianMatrix::<f32>::from_real(2, vec![1.0, 1.0, 1.0, 1.0]).unwrap();
        let ev = a.eigenvalues_desc(1e-6).unwrap();
        assert!((ev[0] - 2.0).abs() < 1e-5 && ev[1].abs() < 1e-5);
    }

    #[test]
    fn leading_blocks() {
        let a = HermitianMatrix::diagonal(&[5.0, 3.0, 1.0]);
        assert_eq!(
            a.leading_principal_submatrix(2).unwrap(),
            HermitianMatrix::diagonal(&[5.0, 3.0])
        );
        assert_eq!(a.leading_principal_submatrix(3).unwrap(), a);
        assert!(a.leading_principal_submatrix(0).is_err());
        assert!(a.leading_principal_submatrix(4).is_err());

        let b = HermitianMatrix::new(2, vec![c(1.0, 0.0), c(0.0, 1.0), c(0.0, -1.0), c(2.0, 0.0)])
            .unwrap();
        let big = b.embed_top_left(3).unwrap();
        assert_eq!(big.leading_principal_submatrix(2).unwrap(), b);
    }

    #[test]
    fn hermiticity_enforced() {
        let err = HermitianMatrix::from_real(2, vec![1.0, 2.0, 3.0, 1.0]).unwrap_err();
        assert!(matches!(err, Error::NotHermitian { row: 1, col: 2, .. }));
        let tiny = HermitianMatrix::from_real(2, vec![1.0, 2.0, 2.0 + 1e-14, 1.0]).unwrap();
        assert_eq!(tiny.get(0, 1), tiny.get(1, 0).conj());
        assert!(HermitianMatrix::new(1, vec![c(1.0, 0.1)]).is_err());
        assert!(HermitianMatrix::<f64>::from_real(0, vec![]).is_err());
        assert!(HermitianMatrix::from_real(2, vec![1.0, f64::NAN, f64::NAN, 1.0]).is_err());
    }

    #[test]
    fn tolerance_must_be_positive() {
        let a = HermitianMatrix::diagonal(&[1.0]);
        assert!(a.eigenvalues_desc(0.0).is_err());
    }

    #[test]
    fn zero_matrix() {
        let a = HermitianMatrix::diagonal(&[0.0, 0.0]);
        assert_eq!(a.eigenvalues_desc(1e-9).unwrap(), vec![0.0, 0.0]);
    }
}
