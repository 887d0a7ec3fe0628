use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A nonincreasing list of eigenvalues with multiplicity bookkeeping.
///
/// `distinct_values()` is strictly decreasing and `multiplicities()[i]`
/// counts the copies of `distinct_values()[i]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum<S> {
    values: Vec<S>,
    distinct: Vec<S>,
    multiplicities: Vec<usize>,
}

impl<S: Scalar> Spectrum<S> {
    /// Builds a spectrum from values that are already nonincreasing.
    pub fn new(values: Vec<S>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Argument(
                "spectrum must contain at least one value".into(),
            ));
        }
        if let Some(i) = values.windows(2).position(|w| w[0] < w[1]) {
            return Err(Error::Argument(format!(
                "spectrum must be nonincreasing, but value {} ({:?}) < value {} ({:?})",
                i + 1,
                values[i],
                i + 2,
                values[i + 1]
            )));
        }
        let mut distinct: Vec<S> = Vec::new();
        let mut multiplicities = Vec::new();
        for v in &values {
            match distinct.last() {
                Some(last) if last == v => *multiplicities.last_mut().unwrap() += 1,
                _ => {
                    distinct.push(v.clone());
                    multiplicities.push(1);
                }
            }
        }
        Ok(Self {
            values,
            distinct,
            multiplicities,
        })
    }

    /// Sorts the values into nonincreasing order first.
    pub fn from_unsorted(mut values: Vec<S>) -> Result<Self> {
        if values.iter().any(|v| v.partial_cmp(v).is_none()) {
            return Err(Error::Argument(
                "spectrum contains an unordered value (NaN)".into(),
            ));
        }
        values.sort_by(|a, b| b.partial_cmp(a).unwrap());
        Self::new(values)
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[S] {
        &self.values
    }

    pub fn distinct_values(&self) -> &[S] {
        &self.distinct
    }

    pub fn multiplicities(&self) -> &[usize] {
        &self.multiplicities
    }

    /// Number of distinct values that occur more than once.
    pub fn repeated_value_count(&self) -> usize {
        self.multiplicities.iter().filter(|&&l| l > 1).count()
    }

    /// The first repeated value and its multiplicity.
    pub fn repeated_value(&self) -> Option<(S, usize)> {
        self.distinct
            .iter()
            .zip(&self.multiplicities)
            .find(|(_, &l)| l > 1)
            .map(|(v, &l)| (v.clone(), l))
    }

    pub fn is_generic(&self) -> bool {
        self.distinct.len() == self.values.len()
    }

    /// `min { λ_i − λ_j : λ_i > λ_j }`, or `None` when all values coincide.
    pub fn min_gap(&self) -> Option<S> {
        self.distinct
            .windows(2)
            .map(|w| w[0].clone() - w[1].clone())
            .reduce(|a, b| if b < a { b } else { a })
    }

    /// Expands `distinct_values` by `multiplicities`.
    pub fn expanded(&self) -> Vec<S> {
        self.distinct
            .iter()
            .zip(&self.multiplicities)
            .flat_map(|(v, &l)| std::iter::repeat_n(v.clone(), l))
            .collect()
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&S) -> U) -> Spectrum<U> {
        Spectrum::new(self.values.iter().map(f).collect())
            .expect("monotone conversion keeps the spectrum ordered")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn spec(v: &[i64]) -> Spectrum<num_rational::BigRational> {
        Spectrum::new(v.iter().map(|&x| int(x)).collect()).unwrap()
    }

    #[test]
    fn multiplicity_bookkeeping() {
        let s = spec(&[5, 4, 4, 4, 3, 1]);
        assert_eq!(s.multiplicities(), &[1, 3, 1, 1]);
        assert_eq!(s.distinct_values(), &[int(5), int(4), int(3), int(1)]);
        assert_eq!(s.expanded(), s.values());
        assert_eq!(s.repeated_value_count(), 1);
        assert_eq!(s.repeated_value(), Some((int(4), 3)));
        assert_eq!(s.min_gap(), Some(int(1)));
        assert_eq!(s.multiplicities().iter().sum::<usize>(), 6);
    }

    #[test]
    fn point_orbit_has_no_gap() {
        let s = spec(&[4, 4, 4]);
        assert_eq!(s.min_gap(), None);
        assert!(!s.is_generic());
        assert!(spec(&[3, 2, 1]).is_generic());
    }

    #[test]
    fn rejects_increasing_and_empty() {
        assert!(Spectrum::<f64>::new(vec![1.0, 2.0]).is_err());
        assert!(Spectrum::<f64>::new(vec![]).is_err());
        let s = Spectrum::from_unsorted(vec![1.0, 3.0, 2.0]).unwrap();
        assert_eq!(s.values(), &[3.0, 2.0, 1.0]);
        assert!(Spectrum::from_unsorted(vec![1.0, f64::NAN]).is_err());
    }
}
