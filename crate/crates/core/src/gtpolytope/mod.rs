//! The Gelfand-Tsetlin polytope as an exact H-representation, with the
//! combinatorics at its fixed-point vertices and the resulting lower bound
//! for the Gromov width.
//!
//! All arithmetic in this module is exact.

mod edges;
pub mod exact;
pub mod oracle;
mod vertex;

pub use edges::{gromov_lower_bound, ray_shoot, EdgeRay, EmbeddingReport, RayLength};
pub use vertex::{
    edge_directions_at_good_vertex, enumerate_fixed_points, good_vertex, is_good_vertex,
    EdgeDirection, GoodVertex,
};

use crate::error::{Error, Result};
use crate::gtsystem::{
    coord_index, coordinate_count, orbit_spec, positions, InequalityKind, InequalityLabel,
};
use crate::hermitian::Spectrum;
use crate::scalar::Exact;

/// One half-space `normal . x <= rhs`.
#[derive(Debug, Clone, PartialEq)]
pub struct Inequality<Q> {
    pub label: InequalityLabel,
    pub normal: Vec<i64>,
    pub rhs: Q,
}

impl<Q: Exact> Inequality<Q> {
    pub fn lhs(&self, x: &[Q]) -> Q {
        dot(&self.normal, x)
    }

    /// `rhs - normal . x`, nonnegative exactly when the point satisfies it.
    pub fn slack(&self, x: &[Q]) -> Q {
        self.rhs.clone() - self.lhs(x)
    }
}

pub(crate) fn dot<Q: Exact>(normal: &[i64], x: &[Q]) -> Q {
    normal
        .iter()
        .zip(x)
        .filter(|(a, _)| **a != 0)
        .fold(Q::zero(), |acc, (&a, v)| {
            acc + Q::from_i64_exact(a) * v.clone()
        })
}

#[derive(Debug, Clone, PartialEq)]
pub struct GtPolytope<Q> {
    lambda: Spectrum<Q>,
    inequalities: Vec<Inequality<Q>>,
}

/// H-representation of the polytope cut out by the interlacing inequalities.
///
/// For every position `(j, k)` in coordinate order the list holds `A_{j,k}`
/// followed by `B_{j,k}`. References to row `n` are replaced by the fixed
/// eigenvalues.
pub fn hrep<Q: Exact>(lambda: &Spectrum<Q>) -> GtPolytope<Q> {
    let n = lambda.n();
    let dim = coordinate_count(n);
    let top = lambda.values();
    let mut inequalities = Vec::with_capacity(2 * dim);
    for (j, k) in positions(n) {
        let me = coord_index(n, j, k);

        // A_{j,k}: x^{(j)}_k - x^{(j+1)}_k <= 0
        let mut normal = vec![0; dim];
        normal[me] = 1;
        let rhs = if j + 1 == n {
            top[k - 1].clone()
        } else {
            normal[coord_index(n, j + 1, k)] = -1;
            Q::zero()
        };
        inequalities.push(Inequality {
            label: InequalityLabel {
                kind: InequalityKind::A,
                j,
                k,
            },
            normal,
            rhs,
        });

        // B_{j,k}: x^{(j+1)}_{k+1} - x^{(j)}_k <= 0
        let mut normal = vec![0; dim];
        normal[me] = -1;
        let rhs = if j + 1 == n {
            -top[k].clone()
        } else {
            normal[coord_index(n, j + 1, k + 1)] = 1;
            Q::zero()
        };
        inequalities.push(Inequality {
            label: InequalityLabel {
                kind: InequalityKind::B,
                j,
                k,
            },
            normal,
            rhs,
        });
    }
    GtPolytope {
        lambda: lambda.clone(),
        inequalities,
    }
}

/// Classification of a point by which interlacing pairs are slack.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PointKind {
    /// Every position has a tight `A` or `B`: the point is a vertex.
    Vertex,
    /// Exactly one position has both slack: the point is inside an edge.
    EdgeInterior,
    /// Neither sufficient condition applies; no claim is made.
    Other,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointClass {
    pub kind: PointKind,
    pub free_positions: Vec<(usize, usize)>,
}

/// The sum of one tight inequality per position. It is valid on the whole
/// polytope and tight only at the certified vertex.
#[derive(Debug, Clone, PartialEq)]
pub struct VertexCertificate<Q> {
    pub chosen: Vec<InequalityLabel>,
    pub normal: Vec<i64>,
    pub rhs: Q,
}

impl<Q: Exact> GtPolytope<Q> {
    pub fn lambda(&self) -> &Spectrum<Q> {
        &self.lambda
    }

    pub fn n(&self) -> usize {
        self.lambda.n()
    }

    /// Ambient dimension `N`.
    pub fn dim(&self) -> usize {
        coordinate_count(self.n())
    }

    pub fn inequalities(&self) -> &[Inequality<Q>] {
        &self.inequalities
    }

    pub fn inequality(&self, label: InequalityLabel) -> &Inequality<Q> {
        let idx = 2 * coord_index(self.n(), label.j, label.k)
            + usize::from(label.kind == InequalityKind::B);
        &self.inequalities[idx]
    }

    fn check_dim(&self, len: usize) -> Result<()> {
        if len != self.dim() {
            return Err(Error::Argument(format!(
                "point has dimension {len}, polytope lives in dimension {}",
                self.dim()
            )));
        }
        Ok(())
    }

    /// Whether every inequality holds within `tol`; exact when `tol` is zero.
    pub fn contains(&self, x: &[Q], tol: &Q) -> Result<bool> {
        self.check_dim(x.len())?;
        Ok(self.inequalities.iter().all(|h| h.slack(x) >= -tol.clone()))
    }

    /// Membership test for floating point coordinates.
    pub fn contains_approx(&self, x: &[f64], tol: f64) -> Result<bool> {
        self.check_dim(x.len())?;
        Ok(self.inequalities.iter().all(|h| {
            let lhs: f64 = h.normal.iter().zip(x).map(|(&a, &v)| a as f64 * v).sum();
            h.rhs.to_f64().unwrap_or(f64::NAN) - lhs >= -tol
        }))
    }

    /// Labels of the inequalities that hold with equality at `x`.
    pub fn tight_labels(&self, x: &[Q]) -> Vec<InequalityLabel> {
        self.inequalities
            .iter()
            .filter(|h| h.slack(x).is_zero())
            .map(|h| h.label)
            .collect()
    }

    fn require_member(&self, x: &[Q]) -> Result<()> {
        if !self.contains(x, &Q::zero())? {
            return Err(Error::Precondition(
                "point lies outside the polytope".into(),
            ));
        }
        Ok(())
    }

    /// Sufficient-condition face classification.
    pub fn classify_point(&self, x: &[Q]) -> Result<PointClass> {
        self.require_member(x)?;
        let n = self.n();
        let free_positions: Vec<_> = positions(n)
            .filter(|&(j, k)| {
                let a = InequalityLabel {
                    kind: InequalityKind::A,
                    j,
                    k,
                };
                let b = InequalityLabel {
                    kind: InequalityKind::B,
                    j,
                    k,
                };
                self.inequality(a).slack(x).is_positive()
                    && self.inequality(b).slack(x).is_positive()
            })
            .collect();
        let kind = match free_positions.len() {
            0 => PointKind::Vertex,
            1 => PointKind::EdgeInterior,
            _ => PointKind::Other,
        };
        Ok(PointClass {
            kind,
            free_positions,
        })
    }

    /// Picks one tight inequality per position (`B` when both are tight) and
    /// sums them. `None` unless the point classifies as a vertex.
    pub fn vertex_certificate(&self, x: &[Q]) -> Result<Option<VertexCertificate<Q>>> {
        if self.classify_point(x)?.kind != PointKind::Vertex {
            return Ok(None);
        }
        let mut chosen = Vec::with_capacity(self.dim());
        let mut normal = vec![0i64; self.dim()];
        let mut rhs = Q::zero();
        for (j, k) in positions(self.n()) {
            let b = self.inequality(InequalityLabel {
                kind: InequalityKind::B,
                j,
                k,
            });
            let a = self.inequality(InequalityLabel {
                kind: InequalityKind::A,
                j,
                k,
            });
            let pick = if b.slack(x).is_zero() { b } else { a };
            chosen.push(pick.label);
            for (acc, v) in normal.iter_mut().zip(&pick.normal) {
                *acc += v;
            }
            rhs = rhs + pick.rhs.clone();
        }
        Ok(Some(VertexCertificate {
            chosen,
            normal,
            rhs,
        }))
    }

    /// Solves the chosen equalities of a certificate row by row from the top.
    /// The result is the only point of the polytope where the certificate is
    /// tight.
    pub fn certificate_solution(&self, cert: &VertexCertificate<Q>) -> Vec<Q> {
        let n = self.n();
        let top = self.lambda.values();
        let mut x = vec![Q::zero(); self.dim()];
        for label in &cert.chosen {
            let (j, k) = (label.j, label.k);
            let source = match label.kind {
                InequalityKind::A => k,
                InequalityKind::B => k + 1,
            };
            let v = if j + 1 == n {
                top[source - 1].clone()
            } else {
                x[coord_index(n, j + 1, source)].clone()
            };
            x[coord_index(n, j, k)] = v;
        }
        x
    }

    /// A point in the relative interior: each row is the vector of midpoints
    /// of consecutive entries of the row above.
    pub fn central_point(&self) -> Vec<Q> {
        let n = self.n();
        let two = Q::from_i64_exact(2);
        let mut above = self.lambda.values().to_vec();
        let mut rows = vec![Vec::new(); n];
        for j in (1..n).rev() {
            let row: Vec<Q> = (0..j)
                .map(|k| (above[k].clone() + above[k + 1].clone()) / two.clone())
                .collect();
            rows[j] = row.clone();
            above = row;
        }
        positions(n).map(|(j, k)| rows[j][k - 1].clone()).collect()
    }

    /// Dimension of the affine hull: `N` minus the rank of the inequalities
    /// tight at a relative-interior point.
    pub fn affine_dimension(&self) -> usize {
        let c = self.central_point();
        let tight: Vec<Vec<Q>> = self
            .inequalities
            .iter()
            .filter(|h| h.slack(&c).is_zero())
            .map(|h| h.normal.iter().map(|&a| Q::from_i64_exact(a)).collect())
            .collect();
        self.dim() - exact::rank(&tight)
    }
}

/// Whether the wall `x^{(j)}_k = x^{(j)}_{k+1}` holds on the whole polytope,
/// i.e. both coordinates are forced to the same constant.
pub fn wall_is_special<Q: Exact>(lambda: &Spectrum<Q>, j: usize, k: usize) -> Result<bool> {
    let n = lambda.n();
    if j == 0 || j >= n || k == 0 || k >= j {
        return Err(Error::Argument(format!(
            "wall ({j},{k}) out of range: need 1 <= j <= {} and 1 <= k <= j - 1",
            n.saturating_sub(1)
        )));
    }
    let spec = orbit_spec(lambda);
    Ok(
        match (spec.forced_value(j, k), spec.forced_value(j, k + 1)) {
            (Some(a), Some(b)) => a == b,
            _ => false,
        },
    )
}
