use crate::error::{Error, Result};
use crate::gtsystem::{orbit_spec, GtPattern, InequalityLabel};
use crate::hermitian::Spectrum;
use crate::scalar::Exact;

use super::vertex::{edge_directions_at_good_vertex, good_vertex, GoodVertex};
use super::{dot, hrep, GtPolytope};

#[derive(Debug, Clone, PartialEq)]
pub enum RayLength<Q> {
    /// The ray leaves the polytope past `base + length * direction`; the
    /// listed inequalities become tight there.
    Finite {
        length: Q,
        binding: Vec<InequalityLabel>,
    },
    Unbounded,
}

impl<Q: Clone> RayLength<Q> {
    pub fn length(&self) -> Option<Q> {
        match self {
            RayLength::Finite { length, .. } => Some(length.clone()),
            RayLength::Unbounded => None,
        }
    }
}

/// Largest `c >= 0` with `base + t * direction` inside the polytope for all
/// `0 <= t <= c`.
pub fn ray_shoot<Q: Exact>(
    polytope: &GtPolytope<Q>,
    base: &[Q],
    direction: &[i64],
) -> Result<RayLength<Q>> {
    polytope.check_dim(direction.len())?;
    if direction.iter().all(|&d| d == 0) {
        return Err(Error::Argument("ray direction must be nonzero".into()));
    }
    polytope.require_member(base)?;

    let mut best: Option<(Q, Vec<InequalityLabel>)> = None;
    for h in polytope.inequalities() {
        let rate: i64 = h.normal.iter().zip(direction).map(|(a, d)| a * d).sum();
        if rate <= 0 {
            continue;
        }
        let t = (h.rhs.clone() - dot(&h.normal, base)) / Q::from_i64_exact(rate);
        match &mut best {
            Some((c, labels)) if t == *c => labels.push(h.label),
            Some((c, _)) if t > *c => {}
            _ => best = Some((t, vec![h.label])),
        }
    }
    Ok(match best {
        Some((length, binding)) => RayLength::Finite { length, binding },
        None => RayLength::Unbounded,
    })
}

/// One edge of the polytope leaving a good vertex.
#[derive(Debug, Clone, PartialEq)]
pub struct EdgeRay<Q> {
    pub base: GtPattern<Q>,
    pub pair: (usize, usize),
    pub direction: Vec<i64>,
    pub length: Q,
    pub endpoint: GtPattern<Q>,
}

/// Everything behind the ball-embedding bound for one orbit.
#[derive(Debug, Clone, PartialEq)]
pub struct EmbeddingReport<Q> {
    pub lambda: Spectrum<Q>,
    pub coordinate_count: usize,
    pub d: usize,
    pub orbit_dimension: usize,
    pub good_vertex: GoodVertex<Q>,
    pub edges: Vec<EdgeRay<Q>>,
    pub gromov_lower_bound: Q,
    /// `min { λ_i − λ_j : λ_i > λ_j }`, zero for a point orbit.
    pub min_gap: Q,
}

impl<Q: Exact> EmbeddingReport<Q> {
    /// Human readable summary of the embedding.
    pub fn statement(&self) -> String {
        if self.d == 0 {
            return "the orbit is a single point; no ball of positive capacity embeds".into();
        }
        format!(
            "every ball B_a = {{ z in C^{d} : pi * sum |z_j|^2 < a }} with a <= {r} embeds \
             symplectically into the orbit (dimension {dim}), so its Gromov width is at least {r}",
            d = self.d,
            r = self.gromov_lower_bound,
            dim = self.orbit_dimension,
        )
    }
}

/// Computes the edges at the canonical good vertex by exact ray shooting and
/// returns the shortest edge length, which bounds the Gromov width from
/// below.
///
/// Fails with [`Error::UnsupportedSpectrum`] when two or more eigenvalues are
/// repeated and with [`Error::Invariant`] if an edge is unbounded or
/// degenerate, or the shortest edge differs from the smallest eigenvalue gap.
pub fn gromov_lower_bound<Q: Exact>(lambda: &Spectrum<Q>) -> Result<(Q, EmbeddingReport<Q>)> {
    let gv = good_vertex(lambda)?;
    let spec = orbit_spec(lambda);
    let polytope = hrep(lambda);
    let base = gv.pattern.coords();
    let top = lambda.values().to_vec();

    let mut edges = Vec::with_capacity(spec.d);
    for dir in edge_directions_at_good_vertex(&gv.diagonal, &spec)? {
        let length = match ray_shoot(&polytope, &base, &dir.direction)? {
            RayLength::Finite { length, .. } if length.is_positive() => length,
            other => {
                return Err(Error::Invariant(format!(
                    "edge for pair {:?} has no positive finite length ({other:?})",
                    dir.pair
                )))
            }
        };
        let end: Vec<Q> = base
            .iter()
            .zip(&dir.direction)
            .map(|(b, &d)| b.clone() + length.clone() * Q::from_i64_exact(d))
            .collect();
        edges.push(EdgeRay {
            base: gv.pattern.clone(),
            pair: dir.pair,
            direction: dir.direction,
            length,
            endpoint: GtPattern::from_coords(top.clone(), &end)?,
        });
    }
    if edges.len() != spec.d {
        return Err(Error::Invariant(format!(
            "found {} edges at the good vertex, expected D = {}",
            edges.len(),
            spec.d
        )));
    }

    let min_gap = lambda.min_gap().unwrap_or_else(Q::zero);
    let bound = edges
        .iter()
        .map(|e| e.length.clone())
        .min()
        .unwrap_or_else(Q::zero);
    if bound != min_gap {
        return Err(Error::Invariant(format!(
            "shortest edge {bound} differs from the smallest eigenvalue gap {min_gap}"
        )));
    }

    let report = EmbeddingReport {
        lambda: lambda.clone(),
        coordinate_count: spec.coordinate_count,
        d: spec.d,
        orbit_dimension: spec.orbit_dimension,
        good_vertex: gv,
        edges,
        gromov_lower_bound: bound.clone(),
        min_gap,
    };
    Ok((bound, report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gtsystem::{project_to_diagonal, InequalityKind};
    use crate::scalar::int;
    use num_rational::BigRational;

    fn lam(v: &[i64]) -> Spectrum<BigRational> {
        Spectrum::new(v.iter().map(|&x| int(x)).collect()).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<BigRational> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn rays_at_554() {
        let p = hrep(&lam(&[5, 5, 4]));
        let base = ints(&[5, 4, 5]);
        let r = ray_shoot(&p, &base, &[0, 0, -1]).unwrap();
        assert_eq!(
            r,
            RayLength::Finite {
                length: int(1),
                binding: vec![InequalityLabel {
                    kind: InequalityKind::B,
                    j: 1,
                    k: 1
                }]
            }
        );
        let r = ray_shoot(&p, &base, &[0, 1, 0]).unwrap();
        let RayLength::Finite { length, binding } = r else {
            panic!("bounded")
        };
        assert_eq!(length, int(1));
        assert_eq!(binding.len(), 2);
    }

    #[test]
    fn outward_ray_has_zero_length() {
        let p = hrep(&lam(&[5, 5, 4]));
        assert_eq!(
            ray_shoot(&p, &ints(&[5, 4, 5]), &[0, 0, 1])
                .unwrap()
                .length(),
            Some(int(0))
        );
    }

    #[test]
    fn ray_errors() {
        let p = hrep(&lam(&[5, 5, 4]));
        assert!(matches!(
            ray_shoot(&p, &ints(&[5, 4, 5]), &[0, 0, 0]),
            Err(Error::Argument(_))
        ));
        assert!(matches!(
            ray_shoot(&p, &ints(&[5, 4, 9]), &[0, 0, 1]),
            Err(Error::Precondition(_))
        ));
        assert!(ray_shoot(&p, &ints(&[5, 4, 5]), &[1]).is_err());
    }

    #[test]
    fn bounds() {
        assert_eq!(gromov_lower_bound(&lam(&[5, 5, 4])).unwrap().0, int(1));
        assert_eq!(gromov_lower_bound(&lam(&[3, 1, 0])).unwrap().0, int(1));
        assert_eq!(gromov_lower_bound(&lam(&[9, 2])).unwrap().0, int(7));
        assert_eq!(
            gromov_lower_bound(&lam(&[4, 4, 3, 3])).unwrap_err(),
            Error::UnsupportedSpectrum { repeated: 2 }
        );
        let (r, report) = gromov_lower_bound(&lam(&[2, 2])).unwrap();
        assert_eq!((r, report.d, report.edges.len()), (int(0), 0, 0));
    }

    #[test]
    fn report_contents() {
        let (_, report) = gromov_lower_bound(&lam(&[3, 1, 0])).unwrap();
        assert_eq!(report.d, 3);
        let lengths: Vec<_> = report.edges.iter().map(|e| e.length.clone()).collect();
        // pairs (1,2), (1,3), (2,3) of diag(3,1,0)
        assert_eq!(lengths, ints(&[2, 2, 1]));
        for e in &report.edges {
            let shift: Vec<_> = project_to_diagonal(&e.endpoint)
                .into_iter()
                .zip(project_to_diagonal(&e.base))
                .map(|(a, b)| a - b)
                .collect();
            let (p, q) = e.pair;
            for (i, s) in shift.iter().enumerate() {
                let expected = if i + 1 == p {
                    -e.length.clone()
                } else if i + 1 == q {
                    e.length.clone()
                } else {
                    int(0)
                };
                assert_eq!(*s, expected);
            }
        }
        assert!(report.statement().contains("at least 1"));
    }
}
