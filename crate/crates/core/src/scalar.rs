//! Scalar abstractions.
//!
//! Everything that only needs ordered field arithmetic is written against
//! [`Scalar`], so it runs on floats as well as exact rationals. The
//! eigensolver needs square roots and machine epsilon and asks for [`Real`];
//! polyhedral code insists on exact arithmetic through [`Exact`].

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{Float, FromPrimitive, Num, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// An ordered field element.
pub trait Scalar:
    Clone + Debug + PartialOrd + Num + Signed + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
    /// Lossy conversion into a floating point type.
    fn to_real<T: Real>(&self) -> T {
        T::from_f64(self.to_f64().unwrap_or(f64::NAN)).unwrap_or_else(T::nan)
    }

    fn from_i64_exact(v: i64) -> Self {
        Self::from_i64(v).expect("integer fits in scalar")
    }

    /// `self <= other + tol`
    fn le_tol(&self, other: &Self, tol: &Self) -> bool {
        self.clone() <= other.clone() + tol.clone()
    }
}

impl<S> Scalar for S where
    S: Clone
        + Debug
        + PartialOrd
        + Num
        + Signed
        + FromPrimitive
        + ToPrimitive
        + Send
        + Sync
        + 'static
{
}

/// Floating point scalar used by the Hermitian eigensolver.
pub trait Real: Scalar + Float + Display + Default + Copy {
    fn lit(v: f64) -> Self {
        <Self as FromPrimitive>::from_f64(v).expect("f64 literal representable")
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// Exact ordered field (rationals). No rounding ever happens.
pub trait Exact: Scalar + Ord + Hash + Display {
    /// Widens to an arbitrary precision rational.
    fn to_big_rational(&self) -> BigRational;
}

impl<T> Exact for Ratio<T>
where
    Ratio<T>: Scalar + Ord + Hash + Display,
    T: Clone + num_integer::Integer + Into<BigInt>,
{
    fn to_big_rational(&self) -> BigRational {
        BigRational::new(self.numer().clone().into(), self.denom().clone().into())
    }
}

/// Parses `"p/q"`, `"p"` or `"-p/q"`. Decimal notation is rejected.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let t = text.trim();
    if t.is_empty() {
        return Err(Error::Parse(format!("empty rational in {text:?}")));
    }
    let (num, den) = match t.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (t, "1"),
    };
    let num = BigInt::from_str(num)
        .map_err(|_| Error::Parse(format!("not a rational number: {text:?}")))?;
    let den = BigInt::from_str(den)
        .map_err(|_| Error::Parse(format!("not a rational number: {text:?}")))?;
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {text:?}")));
    }
    Ok(BigRational::new(num, den))
}

/// Parses a decimal such as `"4.25"` or `"-3e-2"` into the rational it denotes
/// exactly in base ten. Also accepts everything [`parse_rational`] accepts.
pub fn parse_decimal_exact(text: &str) -> Result<BigRational> {
    if let Ok(q) = parse_rational(text) {
        return Ok(q);
    }
    let t = text.trim();
    let bad = || Error::Parse(format!("not a decimal number: {text:?}"));
    let (mantissa, exp) = match t.find(['e', 'E']) {
        Some(i) => (&t[..i], t[i + 1..].parse::<i32>().map_err(|_| bad())?),
        None => (t, 0),
    };
    let (int_part, frac_part) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    let digits = format!("{int_part}{frac_part}");
    let digits = if digits == "-" || digits == "+" {
        format!("{digits}0")
    } else {
        digits
    };
    let num = BigInt::from_str(&digits).map_err(|_| bad())?;
    let scale = exp - frac_part.len() as i32;
    let ten = BigInt::from(10u32);
    let q = if scale >= 0 {
        BigRational::from_integer(num * num_traits::pow(ten, scale as usize))
    } else {
        BigRational::new(num, num_traits::pow(ten, (-scale) as usize))
    };
    Ok(q)
}

/// Canonical text form: `"p/q"` in lowest terms, or `"p"` for integers.
pub fn format_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Converts a finite float to the rational it represents exactly.
pub fn rational_from_f64(v: f64) -> Option<BigRational> {
    BigRational::from_float(v)
}

pub fn rational(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}
