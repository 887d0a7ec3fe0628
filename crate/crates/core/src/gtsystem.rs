//! Gelfand-Tsetlin patterns: the map from a Hermitian matrix to the
//! eigenvalues of its leading principal blocks, the projection back to
//! diagonal entries, interlacing checks and orbit combinatorics.
//!
//! Positions `(j, k)` are one-based: row `j` runs over `1..n` (row `n` is the
//! spectrum itself) and entry `k` over `1..=j`. Vectors in `R^N` list the
//! coordinates from row `n - 1` down to row `1`, each row left to right.

use std::fmt;

use crate::error::{Error, Result};
use crate::hermitian::{HermitianMatrix, Spectrum};
use crate::scalar::{Real, Scalar};

/// `N = n(n-1)/2`, the number of pattern coordinates.
pub fn coordinate_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Index of `x^{(j)}_k` in the coordinate vector.
pub fn coord_index(n: usize, j: usize, k: usize) -> usize {
    debug_assert!(1 <= j && j < n && 1 <= k && k <= j);
    // rows n-1, n-2, ..., j+1 come first
    let before: usize = (j + 1..n).sum();
    before + k - 1
}

/// All positions `(j, k)` in coordinate order.
pub fn positions(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..n).rev().flat_map(|j| (1..=j).map(move |k| (j, k)))
}

/// Which interlacing inequality a label refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum InequalityKind {
    /// `x^{(j+1)}_k >= x^{(j)}_k`
    A,
    /// `x^{(j)}_k >= x^{(j+1)}_{k+1}`
    B,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct InequalityLabel {
    pub kind: InequalityKind,
    pub j: usize,
    pub k: usize,
}

impl fmt::Display for InequalityLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}_{{{},{}}}", self.kind, self.j, self.k)
    }
}

/// A triangular array of eigenvalues of leading principal blocks.
#[derive(Debug, Clone, PartialEq)]
pub struct GtPattern<S> {
    rows: Vec<Vec<S>>,
    top: Vec<S>,
}

impl<S: Scalar> GtPattern<S> {
    /// `rows[j - 1]` holds row `j` and must have length `j`; `top` is row `n`.
    pub fn new(top: Vec<S>, rows: Vec<Vec<S>>) -> Result<Self> {
        let n = top.len();
        if n == 0 {
            return Err(Error::Argument("pattern needs a nonempty top row".into()));
        }
        if rows.len() != n - 1 {
            return Err(Error::Argument(format!(
                "pattern with top row of length {n} needs {} lower rows, got {}",
                n - 1,
                rows.len()
            )));
        }
        if let Some((j, r)) = rows.iter().enumerate().find(|(j, r)| r.len() != j + 1) {
            return Err(Error::Argument(format!(
                "row {} must have {} entries, got {}",
                j + 1,
                j + 1,
                r.len()
            )));
        }
        Ok(Self { rows, top })
    }

    /// Rebuilds a pattern from a coordinate vector in the shared order.
    pub fn from_coords(top: Vec<S>, coords: &[S]) -> Result<Self> {
        let n = top.len();
        if coords.len() != coordinate_count(n) {
            return Err(Error::Argument(format!(
                "expected {} coordinates for n = {n}, got {}",
                coordinate_count(n),
                coords.len()
            )));
        }
        let rows = (1..n)
            .map(|j| {
                (1..=j)
                    .map(|k| coords[coord_index(n, j, k)].clone())
                    .collect()
            })
            .collect();
        Self::new(top, rows)
    }

    pub fn n(&self) -> usize {
        self.top.len()
    }

    pub fn top(&self) -> &[S] {
        &self.top
    }

    /// Rows `1..n`, bottom first.
    pub fn rows(&self) -> &[Vec<S>] {
        &self.rows
    }

    /// Row `j` for `1 <= j <= n`; row `n` is the top.
    pub fn row(&self, j: usize) -> &[S] {
        if j == self.n() {
            &self.top
        } else {
            &self.rows[j - 1]
        }
    }

    pub fn entry(&self, j: usize, k: usize) -> &S {
        &self.row(j)[k - 1]
    }

    pub fn coords(&self) -> Vec<S> {
        positions(self.n())
            .map(|(j, k)| self.entry(j, k).clone())
            .collect()
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&S) -> U) -> GtPattern<U> {
        GtPattern {
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(&f).collect())
                .collect(),
            top: self.top.iter().map(&f).collect(),
        }
    }

    /// Largest entrywise difference over all rows including the top.
    pub fn max_abs_diff<U: Scalar>(&self, other: &GtPattern<U>) -> f64 {
        assert_eq!(self.n(), other.n(), "patterns of different size");
        (1..=self.n())
            .flat_map(|j| (1..=j).map(move |k| (j, k)))
            .map(|(j, k)| {
                let a = self.entry(j, k).to_f64().unwrap_or(f64::NAN);
                let b = other.entry(j, k).to_f64().unwrap_or(f64::NAN);
                (a - b).abs()
            })
            .fold(0.0, f64::max)
    }
}

/// Λ(A): eigenvalues of every leading principal block, nonincreasing.
pub fn gt_map<T: Real>(a: &HermitianMatrix<T>, tol: T) -> Result<GtPattern<T>> {
    let n = a.n();
    let top = a.eigenvalues_desc(tol)?;
    let rows = (1..n)
        .map(|j| a.leading_principal_submatrix(j)?.eigenvalues_desc(tol))
        .collect::<Result<Vec<_>>>()?;
    GtPattern::new(top, rows)
}

fn sorted_desc<S: Scalar>(values: &[S]) -> Vec<S> {
    let mut v = values.to_vec();
    v.sort_by(|a, b| b.partial_cmp(a).expect("ordered scalars"));
    v
}

/// Exact pattern of `diag(d)`: row `j` is `{d_1..d_j}` sorted nonincreasing.
pub fn gt_of_diagonal<S: Scalar>(d: &[S]) -> Result<GtPattern<S>> {
    if d.is_empty() {
        return Err(Error::Argument("diagonal must be nonempty".into()));
    }
    let rows = (1..d.len()).map(|j| sorted_desc(&d[..j])).collect();
    GtPattern::new(sorted_desc(d), rows)
}

/// The diagonal of any matrix realizing the pattern: entry `k` is
/// `sum(row k) - sum(row k-1)`.
pub fn project_to_diagonal<S: Scalar>(p: &GtPattern<S>) -> Vec<S> {
    let sum = |r: &[S]| r.iter().cloned().fold(S::zero(), |a, b| a + b);
    let mut prev = S::zero();
    (1..=p.n())
        .map(|k| {
            let s = sum(p.row(k));
            let d = s.clone() - prev.clone();
            prev = s;
            d
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct Violation<S> {
    pub label: InequalityLabel,
    /// Negative slack; the inequality reads `slack >= 0`.
    pub slack: S,
}

/// Every `A_{j,k}` / `B_{j,k}` whose slack is below `-tol`.
pub fn check_interlacing<S: Scalar>(p: &GtPattern<S>, tol: &S) -> Vec<Violation<S>> {
    let n = p.n();
    let mut out = Vec::new();
    for j in 1..n {
        for k in 1..=j {
            let x = p.entry(j, k).clone();
            let slack_a = p.entry(j + 1, k).clone() - x.clone();
            let slack_b = x - p.entry(j + 1, k + 1).clone();
            for (kind, slack) in [(InequalityKind::A, slack_a), (InequalityKind::B, slack_b)] {
                if slack < -tol.clone() {
                    out.push(Violation {
                        label: InequalityLabel { kind, j, k },
                        slack,
                    });
                }
            }
        }
    }
    out
}

/// Dimension data for the orbit through a spectrum.
#[derive(Debug, Clone, PartialEq)]
pub struct OrbitSpec<S> {
    pub lambda: Spectrum<S>,
    /// `N = n(n-1)/2`
    pub coordinate_count: usize,
    /// `D = sum_{i<j} l_i l_j`, half the orbit dimension.
    pub d: usize,
    pub orbit_dimension: usize,
    /// Coordinates pinned by interlacing alone, in coordinate order.
    pub forced_constants: Vec<((usize, usize), S)>,
    pub repeated_value_count: usize,
}

impl<S: Scalar> OrbitSpec<S> {
    pub fn forced_value(&self, j: usize, k: usize) -> Option<&S> {
        self.forced_constants
            .iter()
            .find(|(pos, _)| *pos == (j, k))
            .map(|(_, v)| v)
    }

    pub fn n(&self) -> usize {
        self.lambda.n()
    }
}

/// Upper and lower bounds `(hi, lo)` of each coordinate implied by the top
/// row alone, in coordinate order.
///
/// Bounds propagate downward from row `n`: `x^{(j)}_k` lies between the upper
/// bound of `x^{(j+1)}_k` and the lower bound of `x^{(j+1)}_{k+1}`. One
/// downward pass reaches the fixed point because lower rows never constrain
/// higher ones beyond what the top row already does.
pub fn interlacing_bounds<S: Scalar>(lambda: &Spectrum<S>) -> Vec<(S, S)> {
    let n = lambda.n();
    let mut hi: Vec<Vec<S>> = vec![Vec::new(); n + 1];
    let mut lo: Vec<Vec<S>> = vec![Vec::new(); n + 1];
    hi[n] = lambda.values().to_vec();
    lo[n] = lambda.values().to_vec();
    for j in (1..n).rev() {
        hi[j] = (0..j).map(|k| hi[j + 1][k].clone()).collect();
        lo[j] = (0..j).map(|k| lo[j + 1][k + 1].clone()).collect();
    }
    positions(n)
        .map(|(j, k)| (hi[j][k - 1].clone(), lo[j][k - 1].clone()))
        .collect()
}

pub fn orbit_spec<S: Scalar>(lambda: &Spectrum<S>) -> OrbitSpec<S> {
    let n = lambda.n();
    let l = lambda.multiplicities();
    let mut d = 0;
    for i in 0..l.len() {
        for j in i + 1..l.len() {
            d += l[i] * l[j];
        }
    }
    let forced_constants = positions(n)
        .zip(interlacing_bounds(lambda))
        .filter(|(_, (hi, lo))| hi == lo)
        .map(|(pos, (hi, _))| (pos, hi))
        .collect();
    OrbitSpec {
        lambda: lambda.clone(),
        coordinate_count: coordinate_count(n),
        d,
        orbit_dimension: 2 * d,
        forced_constants,
        repeated_value_count: lambda.repeated_value_count(),
    }
}
