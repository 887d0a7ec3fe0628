use crate::error::{Error, Result};
use crate::gtsystem::{coord_index, coordinate_count, gt_of_diagonal, GtPattern, OrbitSpec};
use crate::hermitian::Spectrum;
use crate::scalar::Exact;

use super::wall_is_special;

/// Rearranges into the next permutation in lexicographic order.
fn next_permutation<Q: Ord>(v: &mut [Q]) -> bool {
    let Some(i) = v.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = v
        .iter()
        .rposition(|x| *x > v[i])
        .expect("a larger element exists past i");
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

/// Every distinct arrangement of the spectrum on the diagonal, in ascending
/// lexicographic order. There are `n! / (l_1! ... l_s!)` of them.
pub fn enumerate_fixed_points<Q: Exact>(lambda: &Spectrum<Q>) -> Vec<Vec<Q>> {
    let mut current: Vec<Q> = lambda.values().iter().rev().cloned().collect();
    let mut out = vec![current.clone()];
    while next_permutation(&mut current) {
        out.push(current.clone());
    }
    out
}

/// A fixed point whose pattern avoids every wall that is not forced.
#[derive(Debug, Clone, PartialEq)]
pub struct GoodVertex<Q> {
    pub diagonal: Vec<Q>,
    pub pattern: GtPattern<Q>,
}

/// The canonical good vertex: every distinct eigenvalue once in descending
/// order, followed by the remaining copies of the repeated eigenvalue.
pub fn good_vertex<Q: Exact>(lambda: &Spectrum<Q>) -> Result<GoodVertex<Q>> {
    let repeated = lambda.repeated_value_count();
    if repeated >= 2 {
        return Err(Error::UnsupportedSpectrum { repeated });
    }
    let mut diagonal = lambda.distinct_values().to_vec();
    if let Some((v, l)) = lambda.repeated_value() {
        diagonal.extend(std::iter::repeat_n(v, l - 1));
    }
    let pattern = gt_of_diagonal(&diagonal)?;
    Ok(GoodVertex { diagonal, pattern })
}

fn is_arrangement_of<Q: Exact>(diagonal: &[Q], lambda: &Spectrum<Q>) -> bool {
    let mut sorted = diagonal.to_vec();
    sorted.sort_by(|a, b| b.cmp(a));
    sorted == lambda.values()
}

/// Whether `diag(diagonal)` is a fixed point whose pattern has equal
/// neighbours in a row only along walls forced by the spectrum.
pub fn is_good_vertex<Q: Exact>(diagonal: &[Q], lambda: &Spectrum<Q>) -> bool {
    if !is_arrangement_of(diagonal, lambda) {
        return false;
    }
    let Ok(pattern) = gt_of_diagonal(diagonal) else {
        return false;
    };
    let n = lambda.n();
    (2..n).all(|j| {
        (1..j).all(|k| {
            pattern.entry(j, k) != pattern.entry(j, k + 1)
                || wall_is_special(lambda, j, k).unwrap_or(false)
        })
    })
}

/// The transposition `(p, q)` and primitive direction of one edge at a good
/// vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeDirection {
    pub pair: (usize, usize),
    pub direction: Vec<i64>,
}

/// One direction per pair `p < q` with distinct diagonal entries.
///
/// The value `F_pp` moves toward `F_qq` in rows `p..q-1`: it decreases at its
/// last occurrence in the row when `F_pp > F_qq` and increases at its first
/// occurrence otherwise.
pub fn edge_directions_at_good_vertex<Q: Exact>(
    diagonal: &[Q],
    spec: &OrbitSpec<Q>,
) -> Result<Vec<EdgeDirection>> {
    if !is_good_vertex(diagonal, &spec.lambda) {
        return Err(Error::Precondition(format!(
            "diagonal {diagonal:?} is not a good vertex of the orbit"
        )));
    }
    let n = diagonal.len();
    let pattern = gt_of_diagonal(diagonal)?;
    let mut out = Vec::with_capacity(spec.d);
    for p in 1..=n {
        for q in p + 1..=n {
            let (fp, fq) = (&diagonal[p - 1], &diagonal[q - 1]);
            if fp == fq {
                continue;
            }
            let decreasing = fp > fq;
            let mut direction = vec![0i64; coordinate_count(n)];
            for j in p..q {
                let row = pattern.row(j);
                let s = if decreasing {
                    row.iter().rposition(|v| v == fp)
                } else {
                    row.iter().position(|v| v == fp)
                }
                .expect("F_pp appears in every row j >= p");
                direction[coord_index(n, j, s + 1)] = if decreasing { -1 } else { 1 };
            }
            out.push(EdgeDirection {
                pair: (p, q),
                direction,
            });
        }
    }
    Ok(out)
}
