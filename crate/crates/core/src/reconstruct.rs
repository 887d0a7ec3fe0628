//! Realizing any point of the polytope by a Hermitian matrix.
//!
//! Row by row, a bordered diagonal ("arrow") matrix with diagonal `b` (row
//! `j`) is solved exactly so that its spectrum is `a` (row `j + 1`). The
//! current block is then rotated into its eigenbasis and bordered by the
//! arrow's coupling column, which appends row `j + 1` without touching the
//! leading blocks already built.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::gtsystem::{check_interlacing, GtPattern};
use crate::hermitian::HermitianMatrix;
use crate::scalar::{Exact, Real, Scalar};

/// Exact data of the arrow matrix
/// `[[diag(b), conj(x)], [x^T, corner]]` whose spectrum is `a`.
#[derive(Debug, Clone, PartialEq)]
pub struct ArrowSolution<Q> {
    pub b: Vec<Q>,
    /// `|x_i|^2`, one per diagonal entry.
    pub squared_moduli: Vec<Q>,
    pub corner: Q,
}

fn product<Q: Scalar>(factors: impl Iterator<Item = Q>) -> Q {
    factors.fold(Q::one(), |acc, f| acc * f)
}

impl<Q: Exact> ArrowSolution<Q> {
    pub fn k(&self) -> usize {
        self.b.len()
    }

    /// `(t - corner) prod_i (t - b_i) - sum_i |x_i|^2 prod_{j != i} (t - b_j)`
    pub fn characteristic_polynomial_at(&self, t: &Q) -> Q {
        let tb: Vec<Q> = self.b.iter().map(|b| t.clone() - b.clone()).collect();
        let lead = (t.clone() - self.corner.clone()) * product(tb.iter().cloned());
        let coupling = self
            .squared_moduli
            .iter()
            .enumerate()
            .fold(Q::zero(), |acc, (i, m)| {
                let others = product(
                    tb.iter()
                        .enumerate()
                        .filter(|(j, _)| *j != i)
                        .map(|(_, v)| v.clone()),
                );
                acc + m.clone() * others
            });
        lead - coupling
    }

    /// Checks `prod_m (t - a_m)` against the arrow's characteristic
    /// polynomial at `k + 1` distinct integer points. Both sides are monic of
    /// degree `k + 1`, so agreement there is agreement everywhere.
    pub fn char_poly_matches(&self, a: &[Q]) -> bool {
        if a.len() != self.k() + 1 {
            return false;
        }
        (0..=self.k() as i64).all(|t| {
            let t = Q::from_i64_exact(t);
            let target = product(a.iter().map(|am| t.clone() - am.clone()));
            target == self.characteristic_polynomial_at(&t)
        })
    }

    /// Trace identity `sum a = sum b + corner`.
    pub fn trace_matches(&self, a: &[Q]) -> bool {
        let sa = a.iter().cloned().fold(Q::zero(), |x, y| x + y);
        let sb = self.b.iter().cloned().fold(Q::zero(), |x, y| x + y);
        sa == sb + self.corner.clone()
    }
}

fn check_arrow_interlacing<Q: Exact>(b: &[Q], a: &[Q]) -> Result<()> {
    if a.len() != b.len() + 1 {
        return Err(Error::Argument(format!(
            "arrow problem needs {} target eigenvalues for {} diagonal entries, got {}",
            b.len() + 1,
            b.len(),
            a.len()
        )));
    }
    for i in 0..b.len() {
        if a[i] < b[i] {
            return Err(Error::Interlacing(format!(
                "a_{} = {} < b_{} = {}",
                i + 1,
                a[i],
                i + 1,
                b[i]
            )));
        }
        if b[i] < a[i + 1] {
            return Err(Error::Interlacing(format!(
                "b_{} = {} < a_{} = {}",
                i + 1,
                b[i],
                i + 2,
                a[i + 1]
            )));
        }
    }
    Ok(())
}

/// Solves the arrow inverse eigenvalue problem exactly.
///
/// Requires `a_1 >= b_1 >= a_2 >= ... >= b_k >= a_{k+1}`. For distinct `b`
/// the couplings are `|x_i|^2 = -prod_m (a_m - b_i) / prod_{j != i} (b_j - b_i)`.
/// A repeated diagonal value `b_i = b_{i+1}` forces `a_{i+1} = b_i`; that pair
/// is deflated with zero coupling before the formula is applied.
pub fn solve_arrow<Q: Exact>(b: &[Q], a: &[Q]) -> Result<ArrowSolution<Q>> {
    check_arrow_interlacing(b, a)?;
    let k = b.len();

    // indices into b / a that survive deflation
    let mut keep_b: Vec<usize> = Vec::with_capacity(k);
    let mut keep_a: Vec<usize> = Vec::with_capacity(k + 1);
    keep_a.push(0);
    for i in 0..k {
        let repeated = keep_b.last().is_some_and(|&prev| b[prev] == b[i]);
        if repeated {
            // interlacing pins a_{i} (0-based i) to the shared value
            debug_assert!(a[i] == b[i]);
        } else {
            keep_b.push(i);
            if i > 0 {
                keep_a.push(i);
            }
        }
    }
    keep_a.push(k);
    keep_a.dedup();
    debug_assert_eq!(keep_a.len(), keep_b.len() + 1);

    let mut squared_moduli = vec![Q::zero(); k];
    for &i in &keep_b {
        let num = product(keep_a.iter().map(|&m| a[m].clone() - b[i].clone()));
        let den = product(
            keep_b
                .iter()
                .filter(|&&j| j != i)
                .map(|&j| b[j].clone() - b[i].clone()),
        );
        let m = -num / den;
        if m.is_negative() {
            return Err(Error::Invariant(format!(
                "negative squared coupling {m} for b_{} despite interlacing",
                i + 1
            )));
        }
        squared_moduli[i] = m;
    }
    let sa = a.iter().cloned().fold(Q::zero(), |x, y| x + y);
    let sb = b.iter().cloned().fold(Q::zero(), |x, y| x + y);
    Ok(ArrowSolution {
        b: b.to_vec(),
        squared_moduli,
        corner: sa - sb,
    })
}

/// Builds a Hermitian matrix whose pattern is `p`.
///
/// The matrix is real symmetric: all couplings are taken as nonnegative real
/// square roots. Returns the exact arrow solutions alongside.
pub fn reconstruct_with_arrows<Q: Exact, T: Real>(
    p: &GtPattern<Q>,
    tol: T,
) -> Result<(HermitianMatrix<T>, Vec<ArrowSolution<Q>>)> {
    if let Some(v) = check_interlacing(p, &Q::zero()).first() {
        return Err(Error::Interlacing(format!(
            "pattern violates {} with slack {:?}",
            v.label, v.slack
        )));
    }
    let n = p.n();
    let first: T = p.row(1)[0].to_real();
    let mut current = HermitianMatrix::from_real(1, vec![first])?;
    let mut arrows = Vec::with_capacity(n - 1);

    for j in 1..n {
        let sol = solve_arrow(p.row(j), p.row(j + 1))?;
        let x: Vec<T> = sol
            .squared_moduli
            .iter()
            .map(|m| m.to_real::<T>().sqrt())
            .collect();
        let eig = current.eigen_desc(tol)?;

        // column = V x where the columns of V are eigenvectors of the block
        let column: Vec<Complex<T>> = (0..j)
            .map(|r| {
                (0..j).fold(Complex::new(T::zero(), T::zero()), |acc, c| {
                    acc + eig.vectors[r * j + c] * x[c]
                })
            })
            .collect();

        let size = j + 1;
        let mut entries = vec![Complex::new(T::zero(), T::zero()); size * size];
        for r in 0..j {
            for c in 0..j {
                entries[r * size + c] = current.get(r, c);
            }
            entries[r * size + j] = column[r];
            entries[j * size + r] = column[r].conj();
        }
        entries[j * size + j] = Complex::new(sol.corner.to_real(), T::zero());
        current = HermitianMatrix::new(size, entries)?;
        arrows.push(sol);
    }
    Ok((current, arrows))
}

pub fn reconstruct_matrix<Q: Exact, T: Real>(
    p: &GtPattern<Q>,
    tol: T,
) -> Result<HermitianMatrix<T>> {
    reconstruct_with_arrows(p, tol).map(|(m, _)| m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gtsystem::{gt_map, gt_of_diagonal};
    use crate::scalar::{int, rational};
    use num_rational::BigRational;
    use num_traits::{Signed, Zero};

    fn ints(v: &[i64]) -> Vec<BigRational> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn rank_one_arrow() {
        let s = solve_arrow(&ints(&[1]), &ints(&[2, 0])).unwrap();
        assert_eq!(s.squared_moduli, ints(&[1]));
        assert_eq!(s.corner, int(1));
        assert!(s.char_poly_matches(&ints(&[2, 0])));
        assert!(s.trace_matches(&ints(&[2, 0])));
    }

    #[test]
    fn tight_arrow_has_zero_couplings() {
        let s = solve_arrow(&ints(&[5, 3]), &ints(&[5, 4, 3])).unwrap();
        assert_eq!(s.squared_moduli, ints(&[0, 0]));
        assert_eq!(s.corner, int(4));
        assert!(s.char_poly_matches(&ints(&[5, 4, 3])));
    }

    #[test]
    fn repeated_diagonal_is_deflated() {
        let b = ints(&[4, 4, 1]);
        let a = vec![int(5), int(4), int(4), rational(1, 2)];
        let s = solve_arrow(&b, &a).unwrap();
        assert!(s.squared_moduli[1].is_zero());
        assert!(s.squared_moduli.iter().all(|m| !m.is_negative()));
        assert!(s.char_poly_matches(&a));

        let b = ints(&[3, 3, 3]);
        let a = ints(&[3, 3, 3, 3]);
        let s = solve_arrow(&b, &a).unwrap();
        assert_eq!(s.squared_moduli, ints(&[0, 0, 0]));
        assert!(s.char_poly_matches(&a));
    }

    #[test]
    fn arrow_rejects_bad_input() {
        assert!(matches!(
            solve_arrow(&ints(&[3]), &ints(&[2, 0])),
            Err(Error::Interlacing(_))
        ));
        assert!(matches!(
            solve_arrow(&ints(&[1]), &ints(&[2, 2])),
            Err(Error::Interlacing(_))
        ));
        assert!(matches!(
            solve_arrow(&ints(&[1]), &ints(&[2])),
            Err(Error::Argument(_))
        ));
    }

    #[test]
    fn diagonal_pattern_reconstructs() {
        let p = gt_of_diagonal(&ints(&[5, 3, 1])).unwrap();
        let (m, arrows) = reconstruct_with_arrows::<_, f64>(&p, 1e-12).unwrap();
        assert!(arrows
            .iter()
            .all(|s| s.squared_moduli.iter().all(|x| x.is_zero())));
        assert!(gt_map(&m, 1e-12).unwrap().max_abs_diff(&p) < 1e-12);
    }

    #[test]
    fn boundary_point_reconstructs() {
        let p = GtPattern::new(ints(&[5, 5, 4]), vec![ints(&[5]), ints(&[5, 4])]).unwrap();
        let m: HermitianMatrix<f64> = reconstruct_matrix(&p, 1e-12).unwrap();
        assert!(gt_map(&m, 1e-12).unwrap().max_abs_diff(&p) < 1e-10);
    }

    #[test]
    fn interior_point_reconstructs() {
        let p = GtPattern::new(
            ints(&[4, 2, 1, 0]),
            vec![
                vec![rational(3, 2)],
                vec![rational(5, 2), rational(1, 2)],
                vec![int(3), rational(3, 2), rational(1, 3)],
            ],
        )
        .unwrap();
        let (m, arrows) = reconstruct_with_arrows::<_, f64>(&p, 1e-12).unwrap();
        for (j, s) in arrows.iter().enumerate() {
            assert!(s.char_poly_matches(p.row(j + 2)));
        }
        assert!(gt_map(&m, 1e-12).unwrap().max_abs_diff(&p) < 1e-10);
    }

    #[test]
    fn non_interlacing_pattern_rejected() {
        let p = GtPattern::new(ints(&[5, 3]), vec![ints(&[6])]).unwrap();
        assert!(matches!(
            reconstruct_matrix::<_, f64>(&p, 1e-9),
            Err(Error::Interlacing(_))
        ));
    }
}
