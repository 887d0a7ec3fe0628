//! Brute-force polytope combinatorics from the H-representation alone.
//!
//! Vertices come from solving every `N`-subset of inequalities exactly;
//! two vertices are adjacent when the inequalities tight at both have rank
//! `N - 1`. Nothing here uses the interlacing structure, so it serves as an
//! independent check on the combinatorial constructions. Cost grows like
//! `C(2N, N)`; intended for `n <= 4`.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use super::exact::{rank, solve_square};
use super::GtPolytope;
use crate::scalar::Exact;

fn combinations(m: usize, k: usize, mut visit: impl FnMut(&[usize])) {
    let mut idx: Vec<usize> = (0..k).collect();
    if k > m {
        return;
    }
    loop {
        visit(&idx);
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + m - k) else {
            return;
        };
        idx[i] += 1;
        for t in i + 1..k {
            idx[t] = idx[t - 1] + 1;
        }
    }
}

fn normal_row<Q: Exact>(normal: &[i64]) -> Vec<Q> {
    normal.iter().map(|&a| Q::from_i64_exact(a)).collect()
}

/// All vertices, sorted.
pub fn enumerate_vertices<Q: Exact>(polytope: &GtPolytope<Q>) -> Vec<Vec<Q>> {
    let dim = polytope.dim();
    let ineqs = polytope.inequalities();
    let mut found = BTreeSet::new();
    if dim == 0 {
        found.insert(Vec::new());
        return found.into_iter().collect();
    }
    combinations(ineqs.len(), dim, |subset| {
        let a: Vec<Vec<Q>> = subset
            .iter()
            .map(|&i| normal_row(&ineqs[i].normal))
            .collect();
        let b: Vec<Q> = subset.iter().map(|&i| ineqs[i].rhs.clone()).collect();
        if let Some(x) = solve_square(&a, &b) {
            if polytope.contains(&x, &Q::zero()).unwrap_or(false) {
                found.insert(x);
            }
        }
    });
    found.into_iter().collect()
}

fn tight_rank<Q: Exact>(polytope: &GtPolytope<Q>, points: &[&[Q]]) -> usize {
    let rows: Vec<Vec<Q>> = polytope
        .inequalities()
        .iter()
        .filter(|h| points.iter().all(|x| h.slack(x).is_zero()))
        .map(|h| normal_row(&h.normal))
        .collect();
    rank(&rows)
}

/// Vertices joined to `v` by an edge of the polytope.
pub fn adjacent_vertices<Q: Exact>(
    polytope: &GtPolytope<Q>,
    v: &[Q],
    vertices: &[Vec<Q>],
) -> Vec<Vec<Q>> {
    let target = polytope.dim().saturating_sub(1);
    vertices
        .iter()
        .filter(|u| u.as_slice() != v && tight_rank(polytope, &[v, u.as_slice()]) == target)
        .cloned()
        .collect()
}

/// Scales a nonzero rational vector to the primitive integer vector with the
/// same direction, returning it with the factor `c` such that
/// `vector = c * primitive`.
pub fn primitive_direction<Q: Exact>(vector: &[Q]) -> Option<(Vec<i64>, BigRational)> {
    let big: Vec<BigRational> = vector.iter().map(Exact::to_big_rational).collect();
    if big.iter().all(Zero::is_zero) {
        return None;
    }
    let lcm = big
        .iter()
        .fold(BigInt::from(1), |acc, q| acc.lcm(q.denom()));
    let ints: Vec<BigInt> = big
        .iter()
        .map(|q| (q * BigRational::from_integer(lcm.clone())).to_integer())
        .collect();
    let gcd = ints.iter().fold(BigInt::zero(), |acc, z| acc.gcd(z));
    let prim: Vec<i64> = ints
        .iter()
        .map(|z| (z / &gcd).to_i64())
        .collect::<Option<_>>()?;
    let scale = BigRational::new(gcd.abs(), lcm);
    Some((prim, scale))
}

/// Primitive edge directions and lengths at vertex `v`, sorted.
pub fn edges_at<Q: Exact>(polytope: &GtPolytope<Q>, v: &[Q]) -> Vec<(Vec<i64>, BigRational)> {
    let vertices = enumerate_vertices(polytope);
    let mut out: Vec<_> = adjacent_vertices(polytope, v, &vertices)
        .into_iter()
        .filter_map(|u| {
            let diff: Vec<Q> = u
                .iter()
                .zip(v)
                .map(|(a, b)| a.clone() - b.clone())
                .collect();
            primitive_direction(&diff)
        })
        .collect();
    out.sort();
    out
}

/// Dimension of the affine span of a vertex set.
pub fn affine_dimension_of_vertices<Q: Exact>(vertices: &[Vec<Q>]) -> usize {
    let Some(first) = vertices.first() else {
        return 0;
    };
    let diffs: Vec<Vec<Q>> = vertices[1..]
        .iter()
        .map(|u| {
            u.iter()
                .zip(first)
                .map(|(a, b)| a.clone() - b.clone())
                .collect()
        })
        .collect();
    rank(&diffs)
}
