//! Seeded random generators for tests and verification suites.

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::gtsystem::GtPattern;
use crate::hermitian::{HermitianMatrix, Spectrum};
use crate::scalar::{rational, Real};

pub type SeededRng = ChaCha8Rng;

pub fn seeded(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_rational<R: Rng + ?Sized>(rng: &mut R, max_abs: i64, max_den: i64) -> BigRational {
    let den = rng.random_range(1..=max_den);
    rational(rng.random_range(-max_abs * den..=max_abs * den), den)
}

/// A spectrum of `n` rationals with at most one repeated value.
///
/// With `repeat` set and `n >= 2`, one value is given a random multiplicity
/// between 2 and `n`.
pub fn random_spectrum<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    repeat: bool,
) -> Spectrum<BigRational> {
    assert!(n > 0, "spectrum size must be positive");
    let copies = if repeat && n >= 2 {
        rng.random_range(2..=n)
    } else {
        1
    };
    let distinct = n - copies + 1;
    let mut values: Vec<BigRational> = Vec::with_capacity(n);
    while values.len() < distinct {
        let v = random_rational(rng, 10, 4);
        if !values.contains(&v) {
            values.push(v);
        }
    }
    let repeated = values[rng.random_range(0..distinct)].clone();
    values.extend(std::iter::repeat_n(repeated, copies - 1));
    Spectrum::from_unsorted(values).expect("rationals are totally ordered")
}

/// A random point of the polytope, built row by row downward: each entry is
/// drawn from the grid `lo + (hi - lo) * r / grid` between its two upper
/// neighbours.
pub fn sample_pattern<R: Rng + ?Sized>(
    rng: &mut R,
    lambda: &Spectrum<BigRational>,
    grid: u32,
) -> GtPattern<BigRational> {
    let n = lambda.n();
    let grid = grid.max(1);
    let mut rows: Vec<Vec<BigRational>> = vec![lambda.values().to_vec()];
    for j in (1..n).rev() {
        let above = rows.last().expect("top row present");
        let row = (0..j)
            .map(|k| {
                let (hi, lo) = (&above[k], &above[k + 1]);
                let t =
                    BigRational::new(BigInt::from(rng.random_range(0..=grid)), BigInt::from(grid));
                lo + (hi - lo) * t
            })
            .collect();
        rows.push(row);
    }
    let top = rows.remove(0);
    rows.reverse();
    GtPattern::new(top, rows).expect("rows have the right lengths")
}

fn gaussian<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    rng.sample(StandardNormal)
}

/// Complex Gaussian entries, symmetrized.
pub fn random_hermitian<T: Real, R: Rng + ?Sized>(rng: &mut R, n: usize) -> HermitianMatrix<T> {
    let mut entries = vec![Complex::new(T::zero(), T::zero()); n * n];
    for i in 0..n {
        entries[i * n + i] = Complex::new(T::lit(gaussian(rng)), T::zero());
        for j in i + 1..n {
            let z = Complex::new(T::lit(gaussian(rng)), T::lit(gaussian(rng)));
            entries[i * n + j] = z;
            entries[j * n + i] = z.conj();
        }
    }
    HermitianMatrix::new(n, entries).expect("constructed Hermitian")
}

/// A unitary matrix (row-major) from Gram-Schmidt on complex Gaussian columns.
pub fn random_unitary<T: Real, R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<Complex<T>> {
    let mut cols: Vec<Vec<Complex<T>>> = Vec::with_capacity(n);
    while cols.len() < n {
        let mut v: Vec<Complex<T>> = (0..n)
            .map(|_| Complex::new(T::lit(gaussian(rng)), T::lit(gaussian(rng))))
            .collect();
        // two passes keep the basis orthonormal to working precision
        for _ in 0..2 {
            for c in &cols {
                let proj = c
                    .iter()
                    .zip(&v)
                    .fold(Complex::new(T::zero(), T::zero()), |acc, (a, b)| {
                        acc + a.conj() * b
                    });
                for (x, a) in v.iter_mut().zip(c) {
                    *x = *x - *a * proj;
                }
            }
        }
        let norm = v
            .iter()
            .map(|x| x.norm_sqr())
            .fold(T::zero(), |a, b| a + b)
            .sqrt();
        if norm > T::lit(1e-3) {
            cols.push(v.into_iter().map(|x| x / norm).collect());
        }
    }
    let mut u = vec![Complex::new(T::zero(), T::zero()); n * n];
    for (k, c) in cols.iter().enumerate() {
        for (i, x) in c.iter().enumerate() {
            u[i * n + k] = *x;
        }
    }
    u
}

/// `U diag(values) U^H` for a random unitary `U`.
pub fn random_orbit_matrix<T: Real, R: Rng + ?Sized>(
    rng: &mut R,
    values: &[T],
) -> HermitianMatrix<T> {
    let u = random_unitary(rng, values.len());
    HermitianMatrix::diagonal(values)
        .conjugate_by(&u)
        .expect("unitary has matching size")
}

pub fn random_arrangement<R: Rng + ?Sized>(
    rng: &mut R,
    lambda: &Spectrum<BigRational>,
) -> Vec<BigRational> {
    let mut v = lambda.values().to_vec();
    v.shuffle(rng);
    v
}

/// A complex number with small rational real and imaginary parts.
pub fn random_complex_rational<R: Rng + ?Sized>(rng: &mut R) -> Complex<BigRational> {
    Complex::new(random_rational(rng, 3, 5), random_rational(rng, 3, 5))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gtsystem::check_interlacing;
    use num_traits::Zero;

    #[test]
    fn spectra_have_at_most_one_repeat() {
        let mut rng = seeded(1);
        for n in 1..=6 {
            for repeat in [false, true] {
                let l = random_spectrum(&mut rng, n, repeat);
                assert_eq!(l.n(), n);
                assert!(l.repeated_value_count() <= 1);
                assert_eq!(l.is_generic(), !(repeat && n >= 2));
            }
        }
    }

    #[test]
    fn sampled_patterns_interlace() {
        let mut rng = seeded(2);
        for _ in 0..20 {
            let l = random_spectrum(&mut rng, 5, true);
            let p = sample_pattern(&mut rng, &l, 6);
            assert!(check_interlacing(&p, &BigRational::zero()).is_empty());
            assert_eq!(p.top(), l.values());
        }
    }

    #[test]
    fn unitary_is_orthonormal() {
        let mut rng = seeded(3);
        let n = 5;
        let u: Vec<Complex<f64>> = random_unitary(&mut rng, n);
        for a in 0..n {
            for b in 0..n {
                let ip: Complex<f64> = (0..n).map(|i| u[i * n + a].conj() * u[i * n + b]).sum();
                let want = if a == b { 1.0 } else { 0.0 };
                assert!((ip - Complex::new(want, 0.0)).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn orbit_matrix_has_requested_spectrum() {
        let mut rng = seeded(4);
        let a: HermitianMatrix<f64> = random_orbit_matrix(&mut rng, &[3.0, 1.0, 1.0, -2.0]);
        let ev = a.eigenvalues_desc(1e-14).unwrap();
        for (x, y) in ev.iter().zip([3.0, 1.0, 1.0, -2.0]) {
            assert!((x - y).abs() < 1e-10);
        }
        let h: HermitianMatrix<f32> = random_hermitian(&mut rng, 3);
        assert_eq!(h.n(), 3);
    }

    #[test]
    fn seeds_are_reproducible() {
        let a = random_spectrum(&mut seeded(9), 4, true);
        let b = random_spectrum(&mut seeded(9), 4, true);
        assert_eq!(a, b);
    }
}
