#![allow(dead_code)]

use gtorbit::scalar::{int, parse_rational};
use gtorbit::{HermitianMatrix, Rational, RationalSpectrum};

pub fn lam(text: &str) -> RationalSpectrum {
    let values = text
        .split(',')
        .map(|s| parse_rational(s).unwrap())
        .collect();
    RationalSpectrum::new(values).unwrap()
}

pub fn ints(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| int(x)).collect()
}

/// `sum_{i<j} l_i l_j` over the multiplicities.
pub fn d_formula(lambda: &RationalSpectrum) -> usize {
    let m = lambda.multiplicities();
    let mut d = 0;
    for i in 0..m.len() {
        for j in i + 1..m.len() {
            d += m[i] * m[j];
        }
    }
    d
}

/// Householder reduction of a real symmetric matrix to tridiagonal form,
/// returning the diagonal and the off-diagonal.
fn tridiagonalize(mut a: Vec<Vec<f64>>) -> (Vec<f64>, Vec<f64>) {
    let n = a.len();
    for k in 0..n.saturating_sub(2) {
        let x: Vec<f64> = (k + 1..n).map(|i| a[i][k]).collect();
        let alpha = -x[0].signum() * x.iter().map(|v| v * v).sum::<f64>().sqrt();
        if alpha == 0.0 {
            continue;
        }
        let mut v = x.clone();
        v[0] -= alpha;
        let vn = v.iter().map(|t| t * t).sum::<f64>().sqrt();
        if vn == 0.0 {
            continue;
        }
        v.iter_mut().for_each(|t| *t /= vn);
        // A <- H A H with H = I - 2 v v^T acting on indices k+1..n
        let m = n - k - 1;
        let sub = |a: &Vec<Vec<f64>>, i: usize, j: usize| a[k + 1 + i][k + 1 + j];
        let p: Vec<f64> = (0..m)
            .map(|i| (0..m).map(|j| sub(&a, i, j) * v[j]).sum())
            .collect();
        let pv: f64 = p.iter().zip(&v).map(|(x, y)| x * y).sum();
        for i in 0..m {
            for j in 0..m {
                a[k + 1 + i][k + 1 + j] +=
                    -2.0 * v[i] * p[j] - 2.0 * p[i] * v[j] + 4.0 * pv * v[i] * v[j];
            }
        }
        a[k + 1][k] = alpha;
        a[k][k + 1] = alpha;
        for row in a.iter_mut().skip(k + 2) {
            row[k] = 0.0;
        }
        a[k][k + 2..].fill(0.0);
    }
    let d = (0..n).map(|i| a[i][i]).collect();
    let e = (1..n).map(|i| a[i][i - 1]).collect();
    (d, e)
}

/// Number of eigenvalues of the tridiagonal matrix below `x`.
fn sturm_count(d: &[f64], e: &[f64], x: f64) -> usize {
    let mut count = 0;
    let mut q = 1.0;
    for i in 0..d.len() {
        let e2 = if i == 0 { 0.0 } else { e[i - 1] * e[i - 1] };
        q = d[i] - x - if i == 0 { 0.0 } else { e2 / q };
        if q == 0.0 {
            q = -f64::EPSILON * (x.abs() + 1.0);
        }
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

/// Eigenvalues of a real symmetric matrix by bisection, descending.
pub fn symmetric_eigenvalues(a: Vec<Vec<f64>>) -> Vec<f64> {
    let n = a.len();
    let bound = a
        .iter()
        .map(|r| r.iter().map(|v| v.abs()).sum::<f64>())
        .fold(0.0, f64::max)
        + 1.0;
    let (d, e) = tridiagonalize(a);
    let mut out: Vec<f64> = (0..n)
        .map(|k| {
            // k-th smallest
            let (mut lo, mut hi) = (-bound, bound);
            for _ in 0..200 {
                let mid = 0.5 * (lo + hi);
                if sturm_count(&d, &e, mid) > k {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            0.5 * (lo + hi)
        })
        .collect();
    out.reverse();
    out
}

/// Eigenvalues of a Hermitian matrix through its real `2n x 2n` form
/// `[[Re, -Im], [Im, Re]]`, whose spectrum repeats each eigenvalue twice.
pub fn oracle_eigenvalues(a: &HermitianMatrix<f64>) -> Vec<f64> {
    let n = a.n();
    let mut m = vec![vec![0.0; 2 * n]; 2 * n];
    for i in 0..n {
        for j in 0..n {
            let z = a.get(i, j);
            m[i][j] = z.re;
            m[i + n][j + n] = z.re;
            m[i][j + n] = -z.im;
            m[i + n][j] = z.im;
        }
    }
    symmetric_eigenvalues(m).into_iter().step_by(2).collect()
}

pub fn max_diff(a: &[f64], b: &[f64]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}
