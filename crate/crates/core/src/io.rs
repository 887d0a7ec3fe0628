//! JSON formats for the library's data types.
//!
//! Field order is fixed by the struct declarations, so parsing a document
//! produced here and serializing it again reproduces it byte for byte.
//! Exact quantities are written as `"p/q"` strings (`"p"` for integers).

use num_complex::Complex;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gtpolytope::EmbeddingReport;
use crate::gtsystem::GtPattern;
use crate::hermitian::{HermitianMatrix, Spectrum};
use crate::scalar::{format_rational, parse_rational, Exact};
use crate::skeleton::SkeletonGraph;

fn exact_text<Q: Exact>(q: &Q) -> String {
    format_rational(&q.to_big_rational())
}

fn exact_texts<Q: Exact>(v: &[Q]) -> Vec<String> {
    v.iter().map(exact_text).collect()
}

fn parse_json<'a, T: Deserialize<'a>>(text: &'a str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

/// A comma separated nonincreasing list such as `5,5,4` or `3/2,1/2,-1`.
pub fn parse_lambda(text: &str) -> Result<Spectrum<BigRational>> {
    let values = text
        .split(',')
        .map(parse_rational)
        .collect::<Result<Vec<_>>>()?;
    if let Some(i) = values.windows(2).position(|w| w[0] < w[1]) {
        return Err(Error::Parse(format!(
            "eigenvalues must be nonincreasing: {} is followed by {}",
            values[i],
            values[i + 1]
        )));
    }
    Spectrum::new(values)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub n: usize,
    pub re: Vec<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub im: Option<Vec<Vec<f64>>>,
}

impl MatrixJson {
    pub fn from_matrix(a: &HermitianMatrix<f64>) -> Self {
        let (re, im) = a.to_parts();
        let im = if im.iter().flatten().all(|&x| x == 0.0) {
            None
        } else {
            Some(im)
        };
        Self { n: a.n(), re, im }
    }

    pub fn to_matrix(&self) -> Result<HermitianMatrix<f64>> {
        let n = self.n;
        let flat = |m: &[Vec<f64>], what: &str| -> Result<Vec<f64>> {
            if m.len() != n || m.iter().any(|r| r.len() != n) {
                return Err(Error::Parse(format!(
                    "\"{what}\" must be an {n} x {n} array"
                )));
            }
            Ok(m.concat())
        };
        let re = flat(&self.re, "re")?;
        let im = self.im.as_deref().map(|m| flat(m, "im")).transpose()?;
        let entries = match im {
            Some(im) => re
                .iter()
                .zip(&im)
                .map(|(&r, &i)| Complex::new(r, i))
                .collect(),
            None => re.iter().map(|&r| Complex::new(r, 0.0)).collect(),
        };
        HermitianMatrix::new(n, entries)
    }
}

pub fn matrix_to_json(a: &HermitianMatrix<f64>) -> String {
    to_json(&MatrixJson::from_matrix(a))
}

pub fn matrix_from_json(text: &str) -> Result<HermitianMatrix<f64>> {
    parse_json::<MatrixJson>(text)?.to_matrix()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PatternJson {
    pub n: usize,
    pub top: Vec<String>,
    /// Rows `1..n-1`, bottom first.
    pub rows: Vec<Vec<String>>,
}

impl PatternJson {
    fn build<S: crate::scalar::Scalar>(p: &GtPattern<S>, text: impl Fn(&S) -> String) -> Self {
        Self {
            n: p.n(),
            top: p.top().iter().map(&text).collect(),
            rows: p
                .rows()
                .iter()
                .map(|r| r.iter().map(&text).collect())
                .collect(),
        }
    }

    pub fn from_exact<Q: Exact>(p: &GtPattern<Q>) -> Self {
        Self::build(p, exact_text)
    }

    /// Floats are written in their shortest round-tripping decimal form.
    pub fn from_float(p: &GtPattern<f64>) -> Self {
        Self::build(p, |x| format!("{x:?}"))
    }

    fn convert<S: crate::scalar::Scalar>(
        &self,
        parse: impl Fn(&str) -> Result<S>,
    ) -> Result<GtPattern<S>> {
        if self.top.len() != self.n {
            return Err(Error::Parse(format!(
                "\"top\" has {} entries but n = {}",
                self.top.len(),
                self.n
            )));
        }
        let top = self
            .top
            .iter()
            .map(|s| parse(s))
            .collect::<Result<Vec<_>>>()?;
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().map(|s| parse(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        GtPattern::new(top, rows).map_err(|e| Error::Parse(e.to_string()))
    }

    /// Exact entries only; decimal strings are rejected.
    pub fn to_exact(&self) -> Result<GtPattern<BigRational>> {
        self.convert(parse_rational)
    }

    pub fn to_float(&self) -> Result<GtPattern<f64>> {
        self.convert(|s| {
            s.trim()
                .parse::<f64>()
                .map_err(|_| Error::Parse(format!("not a number: {s:?}")))
        })
    }
}

pub fn pattern_to_json<Q: Exact>(p: &GtPattern<Q>) -> String {
    to_json(&PatternJson::from_exact(p))
}

pub fn float_pattern_to_json(p: &GtPattern<f64>) -> String {
    to_json(&PatternJson::from_float(p))
}

pub fn pattern_from_json(text: &str) -> Result<GtPattern<BigRational>> {
    parse_json::<PatternJson>(text)?.to_exact()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GoodVertexJson {
    pub diagonal: Vec<String>,
    pub pattern: PatternJson,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EdgeJson {
    pub pair: [usize; 2],
    pub direction: Vec<i64>,
    pub length: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportJson {
    pub lambda: Vec<String>,
    #[serde(rename = "N")]
    pub coordinate_count: usize,
    #[serde(rename = "D")]
    pub d: usize,
    pub orbit_dimension: usize,
    pub good_vertex: GoodVertexJson,
    pub edges: Vec<EdgeJson>,
    pub gromov_lower_bound: String,
    pub min_gap: String,
    pub statement: String,
}

impl ReportJson {
    pub fn from_report<Q: Exact>(r: &EmbeddingReport<Q>) -> Self {
        Self {
            lambda: exact_texts(r.lambda.values()),
            coordinate_count: r.coordinate_count,
            d: r.d,
            orbit_dimension: r.orbit_dimension,
            good_vertex: GoodVertexJson {
                diagonal: exact_texts(&r.good_vertex.diagonal),
                pattern: PatternJson::from_exact(&r.good_vertex.pattern),
            },
            edges: r
                .edges
                .iter()
                .map(|e| EdgeJson {
                    pair: [e.pair.0, e.pair.1],
                    direction: e.direction.clone(),
                    length: exact_text(&e.length),
                })
                .collect(),
            gromov_lower_bound: exact_text(&r.gromov_lower_bound),
            min_gap: exact_text(&r.min_gap),
            statement: r.statement(),
        }
    }
}

pub fn report_to_json<Q: Exact>(r: &EmbeddingReport<Q>) -> String {
    to_json(&ReportJson::from_report(r))
}

pub fn report_from_json(text: &str) -> Result<ReportJson> {
    parse_json(text)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SkeletonEdgeJson {
    pub u: usize,
    pub v: usize,
    pub pair: [usize; 2],
    pub weight: Vec<i64>,
    pub length: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SkeletonJson {
    pub vertices: Vec<Vec<String>>,
    pub edges: Vec<SkeletonEdgeJson>,
}

impl SkeletonJson {
    pub fn from_graph<Q: Exact>(g: &SkeletonGraph<Q>) -> Self {
        Self {
            vertices: g.vertices.iter().map(|v| exact_texts(v)).collect(),
            edges: g
                .edges
                .iter()
                .map(|e| SkeletonEdgeJson {
                    u: e.u,
                    v: e.v,
                    pair: [e.pair.0, e.pair.1],
                    weight: e.weight.clone(),
                    length: exact_text(&e.length),
                })
                .collect(),
        }
    }
}

pub fn skeleton_to_json<Q: Exact>(g: &SkeletonGraph<Q>) -> String {
    to_json(&SkeletonJson::from_graph(g))
}

pub fn skeleton_from_json(text: &str) -> Result<SkeletonJson> {
    parse_json(text)
}

/// Parses `text` as `T` and serializes it again.
pub fn reserialize<T: Serialize + for<'a> Deserialize<'a>>(text: &str) -> Result<String> {
    Ok(to_json(&parse_json::<T>(text)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gtpolytope::gromov_lower_bound;
    use crate::gtsystem::gt_of_diagonal;
    use crate::scalar::{int, rational};
    use crate::skeleton::skeleton_graph;

    #[test]
    fn lambda_parsing() {
        let l = parse_lambda("5, 5,4").unwrap();
        assert_eq!(l.values(), &[int(5), int(5), int(4)]);
        assert_eq!(
            parse_lambda("3/2,-1").unwrap().values(),
            &[rational(3, 2), int(-1)]
        );
        assert!(matches!(parse_lambda("1,2"), Err(Error::Parse(_))));
        assert!(matches!(parse_lambda("1.5,1"), Err(Error::Parse(_))));
        assert!(matches!(parse_lambda(""), Err(Error::Parse(_))));
    }

    #[test]
    fn matrix_roundtrip() {
        let text = r#"{"n": 2, "re": [[1, 0.5], [0.5, -2]], "im": [[0, 1], [-1, 0]]}"#;
        let a = matrix_from_json(text).unwrap();
        assert_eq!(a.get(0, 1), Complex::new(0.5, 1.0));
        let once = matrix_to_json(&a);
        assert_eq!(reserialize::<MatrixJson>(&once).unwrap(), once);
        assert_eq!(matrix_from_json(&once).unwrap(), a);

        let real = matrix_to_json(&HermitianMatrix::diagonal(&[1.0, 2.0]));
        assert!(!real.contains("\"im\""));
    }

    #[test]
    fn matrix_rejects_bad_shapes() {
        assert!(matches!(
            matrix_from_json(r#"{"n": 2, "re": [[1, 0]]}"#),
            Err(Error::Parse(_))
        ));
        assert!(matches!(matrix_from_json("[1]"), Err(Error::Parse(_))));
        assert!(matches!(
            matrix_from_json(r#"{"n": 2, "re": [[1, 0], [3, 1]]}"#),
            Err(Error::NotHermitian { .. })
        ));
    }

    #[test]
    fn pattern_roundtrip() {
        let p = gt_of_diagonal(&[rational(1, 2), int(5), int(3)]).unwrap();
        let once = pattern_to_json(&p);
        assert!(once.contains("\"1/2\""));
        assert_eq!(pattern_from_json(&once).unwrap(), p);
        assert_eq!(reserialize::<PatternJson>(&once).unwrap(), once);

        let f = gt_of_diagonal(&[0.1, 5.0, 3.0]).unwrap();
        let once = float_pattern_to_json(&f);
        let back = parse_json::<PatternJson>(&once)
            .unwrap()
            .to_float()
            .unwrap();
        assert_eq!(back, f);
        assert!(matches!(pattern_from_json(&once), Err(Error::Parse(_))));
    }

    #[test]
    fn report_and_skeleton_roundtrip() {
        let l = parse_lambda("5,5,4").unwrap();
        let (_, report) = gromov_lower_bound(&l).unwrap();
        let once = report_to_json(&report);
        let parsed = report_from_json(&once).unwrap();
        assert_eq!((parsed.d, parsed.gromov_lower_bound.as_str()), (2, "1"));
        assert_eq!(reserialize::<ReportJson>(&once).unwrap(), once);
        let keys: Vec<usize> = [
            "\"lambda\"",
            "\"N\"",
            "\"D\"",
            "\"orbit_dimension\"",
            "\"good_vertex\"",
            "\"edges\"",
            "\"gromov_lower_bound\"",
            "\"min_gap\"",
            "\"statement\"",
        ]
        .iter()
        .map(|k| once.find(k).unwrap())
        .collect();
        assert!(keys.windows(2).all(|w| w[0] < w[1]));

        let once = skeleton_to_json(&skeleton_graph(&l));
        assert_eq!(skeleton_from_json(&once).unwrap().edges.len(), 3);
        assert_eq!(reserialize::<SkeletonJson>(&once).unwrap(), once);
    }
}
