//! Randomized invariant suites for one spectrum.
//!
//! Each suite checks a family of identities that should hold for every orbit.
//! A failing suite reports its first counterexample; suites that do not apply
//! to the spectrum are skipped.

use std::fmt;

use num_complex::Complex;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::gtpolytope::{
    edge_directions_at_good_vertex, enumerate_fixed_points, good_vertex, gromov_lower_bound, hrep,
    oracle, ray_shoot, PointKind,
};
use crate::gtsystem::{check_interlacing, gt_map, gt_of_diagonal, orbit_spec, project_to_diagonal};
use crate::hermitian::{HermitianMatrix, Spectrum};
use crate::random::{random_complex_rational, random_orbit_matrix, sample_pattern, seeded};
use crate::reconstruct::reconstruct_with_arrows;
use crate::scalar::Scalar;
use crate::skeleton::{
    expected_edge_pattern, skeleton_graph, sphere_point, trace_edge, SphereParam,
};

/// Tolerance for comparisons of floating-point outputs.
pub const CHECK_TOL: f64 = 1e-8;

/// Largest `n` for which the brute-force oracle is run.
pub const ORACLE_MAX_N: usize = 4;

#[derive(Debug, Clone, PartialEq)]
pub enum Status {
    Pass,
    Fail(String),
    Skip(String),
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteResult {
    pub name: &'static str,
    pub checks: usize,
    pub status: Status,
}

impl fmt::Display for SuiteResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.status {
            Status::Pass => write!(f, "PASS  {:<14} {} checks", self.name, self.checks),
            Status::Fail(why) => write!(f, "FAIL  {:<14} {}", self.name, why),
            Status::Skip(why) => write!(f, "SKIP  {:<14} {}", self.name, why),
        }
    }
}

#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub suites: Vec<SuiteResult>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.suites
            .iter()
            .all(|s| !matches!(s.status, Status::Fail(_)))
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.suites {
            writeln!(f, "{s}")?;
        }
        let failed = self
            .suites
            .iter()
            .filter(|s| matches!(s.status, Status::Fail(_)))
            .count();
        write!(f, "{} suites, {failed} failed", self.suites.len())
    }
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    pub trials: usize,
    pub seed: u64,
    /// Eigensolver tolerance.
    pub tol: f64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            trials: 100,
            seed: 0,
            tol: 1e-9,
        }
    }
}

/// Outcome of a suite body: `Ok(Ok(checks))` passes, `Ok(Err(msg))` is a
/// counterexample, `Err` an unexpected library error.
type Outcome = Result<std::result::Result<usize, String>>;

fn run(name: &'static str, body: impl FnOnce() -> Outcome) -> SuiteResult {
    let (checks, status) = match body() {
        Ok(Ok(checks)) => (checks, Status::Pass),
        Ok(Err(why)) => (0, Status::Fail(why)),
        Err(e) => (0, Status::Fail(format!("error: {e}"))),
    };
    SuiteResult {
        name,
        checks,
        status,
    }
}

fn skip(name: &'static str, why: impl Into<String>) -> SuiteResult {
    SuiteResult {
        name,
        checks: 0,
        status: Status::Skip(why.into()),
    }
}

fn max_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

fn floats(lambda: &Spectrum<BigRational>) -> Vec<f64> {
    lambda.values().iter().map(|v| v.to_real()).collect()
}

/// Edge directions with their lengths, sorted.
pub type EdgeSet = Vec<(Vec<i64>, BigRational)>;

/// Edges at the good vertex from ray shooting, as `(direction, length)`
/// sorted, next to the brute-force oracle's edges at the same vertex.
pub fn edge_sets(lambda: &Spectrum<BigRational>) -> Result<(EdgeSet, EdgeSet)> {
    let polytope = hrep(lambda);
    let gv = good_vertex(lambda)?;
    let base = gv.pattern.coords();
    let mut combinatorial = Vec::new();
    for dir in edge_directions_at_good_vertex(&gv.diagonal, &orbit_spec(lambda))? {
        let length = ray_shoot(&polytope, &base, &dir.direction)?
            .length()
            .ok_or_else(|| Error::Invariant(format!("unbounded edge for pair {:?}", dir.pair)))?;
        combinatorial.push((dir.direction, length));
    }
    combinatorial.sort();
    Ok((combinatorial, oracle::edges_at(&polytope, &base)))
}

fn suite_matrices(lambda: &Spectrum<BigRational>, opts: &VerifyOptions) -> SuiteResult {
    run("gt-map", || {
        let mut rng = seeded(opts.seed);
        let values = floats(lambda);
        let polytope = hrep(lambda);
        let scale = values.iter().fold(1.0f64, |m, v| m.max(v.abs()));
        for t in 0..opts.trials {
            let a: HermitianMatrix<f64> = random_orbit_matrix(&mut rng, &values);
            let ev = a.eigenvalues_desc(opts.tol)?;
            if max_diff(&ev, &values) > CHECK_TOL * scale {
                return Ok(Err(format!(
                    "trial {t}: spectrum {ev:?} differs from {values:?}"
                )));
            }
            let p = gt_map(&a, opts.tol)?;
            let pr = project_to_diagonal(&p);
            if max_diff(&pr, &a.diag()) > CHECK_TOL * scale {
                return Ok(Err(format!("trial {t}: pr(gt_map(A)) {pr:?} != diag(A)")));
            }
            if let Some(v) = check_interlacing(&p, &(CHECK_TOL * scale)).first() {
                return Ok(Err(format!(
                    "trial {t}: {} violated by {}",
                    v.label, v.slack
                )));
            }
            if !polytope.contains_approx(&p.coords(), CHECK_TOL * scale)? {
                return Ok(Err(format!("trial {t}: image outside the polytope")));
            }
        }
        Ok(Ok(opts.trials))
    })
}

fn suite_dimensions(lambda: &Spectrum<BigRational>) -> SuiteResult {
    run("dimensions", || {
        let spec = orbit_spec(lambda);
        let m = lambda.multiplicities();
        let d: usize = (0..m.len())
            .flat_map(|i| (i + 1..m.len()).map(move |j| (i, j)))
            .map(|(i, j)| m[i] * m[j])
            .sum();
        if spec.d != d {
            return Ok(Err(format!("D = {} but sum l_i l_j = {d}", spec.d)));
        }
        if spec.coordinate_count - spec.forced_constants.len() != spec.d {
            return Ok(Err(format!(
                "N - forced = {} - {} != D = {}",
                spec.coordinate_count,
                spec.forced_constants.len(),
                spec.d
            )));
        }
        let dim = hrep(lambda).affine_dimension();
        if dim != spec.d {
            return Ok(Err(format!("affine dimension {dim} != D = {}", spec.d)));
        }
        Ok(Ok(3))
    })
}

fn suite_fixed_points(lambda: &Spectrum<BigRational>) -> SuiteResult {
    run("fixed-points", || {
        let polytope = hrep(lambda);
        let points = enumerate_fixed_points(lambda);
        for f in &points {
            let p = gt_of_diagonal(f)?;
            if polytope.classify_point(&p.coords())?.kind != PointKind::Vertex {
                return Ok(Err(format!("diag{f:?} does not classify as a vertex")));
            }
        }
        let g = skeleton_graph(lambda);
        let d = orbit_spec(lambda).d;
        if let Some(v) = (0..g.vertices.len()).find(|&v| g.degree(v) != d) {
            return Ok(Err(format!(
                "skeleton vertex {v} has degree {} != D = {d}",
                g.degree(v)
            )));
        }
        Ok(Ok(points.len()))
    })
}

fn suite_bound(lambda: &Spectrum<BigRational>) -> SuiteResult {
    if lambda.repeated_value_count() > 1 {
        return skip("bound", "two or more repeated eigenvalues");
    }
    run("bound", || {
        let (bound, report) = gromov_lower_bound(lambda)?;
        if report.edges.len() != report.d {
            return Ok(Err(format!(
                "{} edges at the good vertex, D = {}",
                report.edges.len(),
                report.d
            )));
        }
        if report.edges.iter().any(|e| e.length < report.min_gap) {
            return Ok(Err("an edge is shorter than the smallest gap".into()));
        }
        if bound != report.min_gap {
            return Ok(Err(format!("bound {bound} != min gap {}", report.min_gap)));
        }
        Ok(Ok(report.edges.len() + 1))
    })
}

fn suite_oracle(lambda: &Spectrum<BigRational>) -> SuiteResult {
    if lambda.n() > ORACLE_MAX_N {
        return skip("oracle", format!("n > {ORACLE_MAX_N}"));
    }
    if lambda.repeated_value_count() > 1 {
        return skip("oracle", "two or more repeated eigenvalues");
    }
    run("oracle", || {
        let (ours, theirs) = edge_sets(lambda)?;
        if ours != theirs {
            return Ok(Err(format!("edges {ours:?} differ from oracle {theirs:?}")));
        }
        Ok(Ok(ours.len()))
    })
}

fn suite_roundtrip(lambda: &Spectrum<BigRational>, opts: &VerifyOptions) -> SuiteResult {
    run("reconstruct", || {
        let mut rng = seeded(opts.seed.wrapping_add(1));
        let values = floats(lambda);
        for t in 0..opts.trials {
            let p = sample_pattern(&mut rng, lambda, 8);
            let (m, arrows) = reconstruct_with_arrows::<_, f64>(&p, opts.tol)?;
            for (j, s) in arrows.iter().enumerate() {
                if !s.char_poly_matches(p.row(j + 2)) {
                    return Ok(Err(format!(
                        "trial {t}: arrow identity fails at row {}",
                        j + 1
                    )));
                }
            }
            let err = gt_map(&m, opts.tol)?.max_abs_diff(&p);
            if err > CHECK_TOL {
                return Ok(Err(format!("trial {t}: roundtrip error {err:e}")));
            }
            let ev = m.eigenvalues_desc(opts.tol)?;
            if max_diff(&ev, &values) > CHECK_TOL {
                return Ok(Err(format!("trial {t}: spectrum {ev:?} off the orbit")));
            }
        }
        Ok(Ok(opts.trials))
    })
}

/// Exact sphere checks at random `z`, then `trace_edge` against the affine
/// prediction, for every pair of the good vertex.
pub fn check_spheres(
    lambda: &Spectrum<BigRational>,
    trials: usize,
    seed: u64,
    tol: f64,
) -> Result<std::result::Result<usize, String>> {
    let mut rng = seeded(seed);
    let f = good_vertex(lambda)?.diagonal;
    let n = f.len();
    let pairs: Vec<(usize, usize)> = (1..=n)
        .flat_map(|p| (p + 1..=n).map(move |q| (p, q)))
        .filter(|&(p, q)| f[p - 1] != f[q - 1])
        .collect();
    if pairs.is_empty() {
        return Ok(Ok(0));
    }
    let fr: Vec<f64> = f.iter().map(|v| v.to_real()).collect();
    let mut checks = 0;
    for t in 0..trials {
        let (p, q) = pairs[t % pairs.len()];
        let z: Complex<BigRational> = random_complex_rational(&mut rng);
        let s = sphere_point(&f, p, q, SphereParam::Finite(z))?;
        if !s.preserves_spectrum() {
            return Ok(Err(format!(
                "trial {t}: sphere block for ({p},{q}) changes the spectrum"
            )));
        }
        let rho: f64 = s.rho.to_real();
        let pattern = gt_map(&s.matrix::<f64>()?, tol)?;
        let shift = project_to_diagonal(&pattern);
        let (vi, vk) = (fr[p - 1], fr[q - 1]);
        let mut want = fr.clone();
        want[p - 1] = rho;
        want[q - 1] = vk + (vi - rho);
        if max_diff(&shift, &want) > CHECK_TOL {
            return Ok(Err(format!("trial {t}: pr shift {shift:?} != {want:?}")));
        }
        checks += 1;
    }
    for &(p, q) in &pairs {
        for (rho, pattern) in trace_edge::<_, f64>(&f, p, q, 9, tol)? {
            let want = expected_edge_pattern::<_, f64>(&f, p, q, rho)?;
            let err = pattern.max_abs_diff(&want);
            if err > CHECK_TOL {
                return Ok(Err(format!(
                    "pair ({p},{q}) at rho = {rho}: off the edge by {err:e}"
                )));
            }
            checks += 1;
        }
    }
    Ok(Ok(checks))
}

fn suite_spheres(lambda: &Spectrum<BigRational>, opts: &VerifyOptions) -> SuiteResult {
    if lambda.repeated_value_count() > 1 {
        return skip("spheres", "two or more repeated eigenvalues");
    }
    run("spheres", || {
        check_spheres(lambda, opts.trials, opts.seed.wrapping_add(2), opts.tol)
    })
}

/// Runs every suite for `lambda`.
pub fn verify_all(lambda: &Spectrum<BigRational>, opts: &VerifyOptions) -> VerifyReport {
    VerifyReport {
        suites: vec![
            suite_matrices(lambda, opts),
            suite_dimensions(lambda),
            suite_fixed_points(lambda),
            suite_bound(lambda),
            suite_oracle(lambda),
            suite_roundtrip(lambda, opts),
            suite_spheres(lambda, opts),
        ],
    }
}
