//! The 1-skeleton of the moment polytope of the diagonal torus action.
//!
//! Fixed points that differ by a transposition are joined by the two-sphere
//! family `F_z`, whose GT image traces an edge of the polytope.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::gtpolytope::{edge_directions_at_good_vertex, enumerate_fixed_points};
use crate::gtsystem::{gt_map, gt_of_diagonal, orbit_spec, GtPattern};
use crate::hermitian::{HermitianMatrix, Spectrum};
use crate::scalar::{Exact, Real};

#[derive(Debug, Clone, PartialEq)]
pub struct SkeletonEdge<Q> {
    /// Indices into [`SkeletonGraph::vertices`], `u < v`.
    pub u: usize,
    pub v: usize,
    /// 1-based positions swapped between the endpoints.
    pub pair: (usize, usize),
    /// `-e_p + e_q`.
    pub weight: Vec<i64>,
    pub length: Q,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SkeletonGraph<Q> {
    pub vertices: Vec<Vec<Q>>,
    pub edges: Vec<SkeletonEdge<Q>>,
}

impl<Q: Exact> SkeletonGraph<Q> {
    pub fn degree(&self, vertex: usize) -> usize {
        self.edges
            .iter()
            .filter(|e| e.u == vertex || e.v == vertex)
            .count()
    }
}

/// The pair of positions at which `a` and `b` differ, if they differ by
/// exactly one transposition of distinct entries.
fn transposition<Q: Exact>(a: &[Q], b: &[Q]) -> Option<(usize, usize)> {
    let mut diff = (0..a.len()).filter(|&i| a[i] != b[i]);
    let (p, q) = (diff.next()?, diff.next()?);
    if diff.next().is_some() || a[p] != b[q] || a[q] != b[p] {
        return None;
    }
    Some((p + 1, q + 1))
}

/// Vertices are the distinct arrangements of `lambda` in lexicographic
/// order; edges join arrangements one transposition apart.
pub fn skeleton_graph<Q: Exact>(lambda: &Spectrum<Q>) -> SkeletonGraph<Q> {
    let vertices = enumerate_fixed_points(lambda);
    let n = lambda.n();
    let mut edges = Vec::new();
    for u in 0..vertices.len() {
        for v in u + 1..vertices.len() {
            if let Some((p, q)) = transposition(&vertices[u], &vertices[v]) {
                let mut weight = vec![0i64; n];
                weight[p - 1] = -1;
                weight[q - 1] = 1;
                let (a, b) = (&vertices[u][p - 1], &vertices[u][q - 1]);
                let length = if a > b {
                    a.clone() - b.clone()
                } else {
                    b.clone() - a.clone()
                };
                edges.push(SkeletonEdge {
                    u,
                    v,
                    pair: (p, q),
                    weight,
                    length,
                });
            }
        }
    }
    SkeletonGraph { vertices, edges }
}

#[derive(Debug, Clone, PartialEq)]
pub enum SphereParam<Q> {
    Finite(Complex<Q>),
    /// The far pole of the sphere: `F` with entries `p` and `q` swapped.
    Infinity,
}

/// `F_z = I_z F I_z^{-1}`, with exact entries.
#[derive(Debug, Clone, PartialEq)]
pub struct SpherePoint<Q> {
    pub arrangement: Vec<Q>,
    pub p: usize,
    pub q: usize,
    pub z: SphereParam<Q>,
    /// `[[(p,p), (p,q)], [(q,p), (q,q)]]`; every other entry is that of `diag(F)`.
    pub block: [[Complex<Q>; 2]; 2],
    /// The `(p,p)` entry, `(v_i + |z|^2 v_k) / (1 + |z|^2)`.
    pub rho: Q,
}

impl<Q: Exact> SpherePoint<Q> {
    pub fn n(&self) -> usize {
        self.arrangement.len()
    }

    pub fn block_trace(&self) -> Q {
        self.block[0][0].re.clone() + self.block[1][1].re.clone()
    }

    pub fn block_determinant(&self) -> Q {
        let d = self.block[0][0].clone() * self.block[1][1].clone()
            - self.block[0][1].clone() * self.block[1][0].clone();
        d.re
    }

    /// Exact check that the block has the spectrum `{F_pp, F_qq}` and is
    /// Hermitian, so the whole matrix has the spectrum of `diag(F)`.
    pub fn preserves_spectrum(&self) -> bool {
        let (vi, vk) = (&self.arrangement[self.p - 1], &self.arrangement[self.q - 1]);
        let hermitian = self.block[0][0].im.is_zero()
            && self.block[1][1].im.is_zero()
            && self.block[0][1] == self.block[1][0].conj();
        hermitian
            && self.block_trace() == vi.clone() + vk.clone()
            && self.block_determinant() == vi.clone() * vk.clone()
    }

    pub fn exact_entry(&self, i: usize, j: usize) -> Complex<Q> {
        let (p, q) = (self.p - 1, self.q - 1);
        let slot = |x: usize| {
            if x == p {
                Some(0)
            } else if x == q {
                Some(1)
            } else {
                None
            }
        };
        match (slot(i), slot(j)) {
            (Some(a), Some(b)) => self.block[a][b].clone(),
            _ if i == j => Complex::new(self.arrangement[i].clone(), Q::zero()),
            _ => Complex::new(Q::zero(), Q::zero()),
        }
    }

    pub fn matrix<T: Real>(&self) -> Result<HermitianMatrix<T>> {
        let n = self.n();
        let entries = (0..n * n)
            .map(|idx| {
                let c = self.exact_entry(idx / n, idx % n);
                Complex::new(c.re.to_real(), c.im.to_real())
            })
            .collect();
        HermitianMatrix::new(n, entries)
    }
}

fn check_pair<Q: Exact>(f: &[Q], p: usize, q: usize) -> Result<()> {
    if p == 0 || p >= q || q > f.len() {
        return Err(Error::Argument(format!(
            "pair ({p},{q}) must satisfy 1 <= p < q <= {}",
            f.len()
        )));
    }
    if f[p - 1] == f[q - 1] {
        return Err(Error::DegeneratePair { p, q });
    }
    Ok(())
}

/// The point `F_z` of the sphere through `diag(F)` and its `(p,q)` swap.
pub fn sphere_point<Q: Exact>(
    f: &[Q],
    p: usize,
    q: usize,
    z: SphereParam<Q>,
) -> Result<SpherePoint<Q>> {
    check_pair(f, p, q)?;
    let (vi, vk) = (f[p - 1].clone(), f[q - 1].clone());
    let c = |x: Q| Complex::new(x, Q::zero());
    let (block, rho) = match &z {
        SphereParam::Infinity => {
            let zero = c(Q::zero());
            ([[c(vk.clone()), zero.clone()], [zero, c(vi)]], vk)
        }
        SphereParam::Finite(z) => {
            let m = z.norm_sqr();
            let den = Q::one() + m.clone();
            let rho = (vi.clone() + m.clone() * vk.clone()) / den.clone();
            let other = (vk.clone() + m * vi.clone()) / den.clone();
            let gap = (vi - vk) / den;
            let upper = z.conj() * gap.clone();
            let lower = z.clone() * gap;
            ([[c(rho.clone()), upper], [lower, c(other)]], rho)
        }
    };
    Ok(SpherePoint {
        arrangement: f.to_vec(),
        p,
        q,
        z,
        block,
        rho,
    })
}

/// `|z|^2` at which the `(p,p)` entry of `F_z` equals `rho`; `None` at the
/// far pole `rho = v_k`.
pub fn modulus_squared_for_rho<T: Real>(vi: T, vk: T, rho: T) -> Option<T> {
    if rho == vk {
        None
    } else {
        Some((vi - rho) / (rho - vk))
    }
}

/// Floating-point `F_z` for real `z = sqrt(|z|^2)`; `None` means the far pole.
pub fn sphere_matrix<T: Real>(
    f: &[T],
    p: usize,
    q: usize,
    modulus_squared: Option<T>,
) -> Result<HermitianMatrix<T>> {
    let n = f.len();
    let mut entries = vec![Complex::new(T::zero(), T::zero()); n * n];
    for i in 0..n {
        entries[i * n + i] = Complex::new(f[i], T::zero());
    }
    let (a, b) = (p - 1, q - 1);
    let (vi, vk) = (f[a], f[b]);
    match modulus_squared {
        None => {
            entries[a * n + a] = Complex::new(vk, T::zero());
            entries[b * n + b] = Complex::new(vi, T::zero());
        }
        Some(m) => {
            let den = T::one() + m;
            let off = m.sqrt() * (vi - vk) / den;
            entries[a * n + a] = Complex::new((vi + m * vk) / den, T::zero());
            entries[b * n + b] = Complex::new((vk + m * vi) / den, T::zero());
            entries[a * n + b] = Complex::new(off, T::zero());
            entries[b * n + a] = Complex::new(off, T::zero());
        }
    }
    HermitianMatrix::new(n, entries)
}

/// The distinct eigenvalue next to `F_pp` in the direction of `F_qq`.
fn adjacent_value<Q: Exact>(lambda: &Spectrum<Q>, vi: &Q, vk: &Q) -> Q {
    let distinct = lambda.distinct_values();
    let idx = distinct
        .iter()
        .position(|d| d == vi)
        .expect("F_pp is an eigenvalue");
    if vi > vk {
        distinct[idx + 1].clone()
    } else {
        distinct[idx - 1].clone()
    }
}

fn checked_direction<Q: Exact>(f: &[Q], p: usize, q: usize) -> Result<(Spectrum<Q>, Vec<i64>)> {
    check_pair(f, p, q)?;
    let lambda = Spectrum::from_unsorted(f.to_vec())?;
    let spec = orbit_spec(&lambda);
    let dir = edge_directions_at_good_vertex(f, &spec)?
        .into_iter()
        .find(|d| d.pair == (p, q))
        .expect("every pair of distinct entries has a direction");
    Ok((lambda, dir.direction))
}

/// `V_F + |rho - F_pp| * delta_(p,q)`, the point the sphere should reach.
pub fn expected_edge_pattern<Q: Exact, T: Real>(
    f: &[Q],
    p: usize,
    q: usize,
    rho: T,
) -> Result<GtPattern<T>> {
    let (lambda, direction) = checked_direction(f, p, q)?;
    let base = gt_of_diagonal(f)?;
    let vi: T = f[p - 1].to_real();
    let step = (rho - vi).abs();
    let coords: Vec<T> = base
        .coords()
        .iter()
        .zip(&direction)
        .map(|(b, &d)| b.to_real::<T>() + step * T::lit(d as f64))
        .collect();
    let top: Vec<T> = lambda.values().iter().map(|v| v.to_real()).collect();
    GtPattern::from_coords(top, &coords)
}

/// Samples the GT image of the sphere through a good vertex.
///
/// `rho` runs uniformly from `F_pp` to the adjacent distinct eigenvalue in
/// the direction of `F_qq`, both ends included; each sample is `gt_map` of
/// the explicit `F_z`. Output is ordered by distance from `F_pp`.
pub fn trace_edge<Q: Exact, T: Real>(
    f: &[Q],
    p: usize,
    q: usize,
    samples: usize,
    tol: T,
) -> Result<Vec<(T, GtPattern<T>)>> {
    if samples == 0 {
        return Err(Error::Argument(
            "trace_edge needs at least one sample".into(),
        ));
    }
    let (lambda, _) = checked_direction(f, p, q)?;
    let target: T = adjacent_value(&lambda, &f[p - 1], &f[q - 1]).to_real();
    let fr: Vec<T> = f.iter().map(|v| v.to_real()).collect();
    let (vi, vk) = (fr[p - 1], fr[q - 1]);
    (0..samples)
        .map(|s| {
            let t = if samples == 1 {
                T::zero()
            } else {
                T::lit(s as f64 / (samples - 1) as f64)
            };
            let rho = if s + 1 == samples && samples > 1 {
                target
            } else {
                vi + (target - vi) * t
            };
            let m = modulus_squared_for_rho(vi, vk, rho);
            let pattern = gt_map(&sphere_matrix(&fr, p, q, m)?, tol)?;
            Ok((rho, pattern))
        })
        .collect()
}
