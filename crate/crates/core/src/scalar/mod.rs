//! Exact surd arithmetic with a high-precision decimal fallback.

mod float;
mod parse;
mod surd;

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::atomic::{AtomicUsize, Ordering as AtomicOrdering};

use dashu_int::IBig;
use dashu_ratio::RBig;
use thiserror::Error;

pub use float::BigFloat;
pub(crate) use parse::Cursor;
pub use parse::parse_scalar;
pub use surd::{square_free_split, Surd};
pub(crate) use surd::prime_factors;

/// Working precision for values that leave the surd ring.
pub const DEFAULT_DIGITS: usize = 64;

/// Absolute threshold below which a float counts as zero (`10^-40`).
pub const ZERO_DIGITS: usize = 40;

static DIGITS: AtomicUsize = AtomicUsize::new(DEFAULT_DIGITS);

pub fn default_digits() -> usize {
    DIGITS.load(AtomicOrdering::Relaxed)
}

/// Set the working precision (clamped to at least 32 digits).
pub fn set_default_digits(digits: usize) {
    DIGITS.store(digits.max(32), AtomicOrdering::Relaxed);
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },
}

/// A real number: exact in the surd ring, or approximate.
#[derive(Clone)]
pub enum Scalar {
    Exact(Surd),
    Approx(BigFloat),
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

pub fn rat(n: i64, d: i64) -> RBig {
    RBig::from_parts_signed(IBig::from(n), IBig::from(d))
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Exact(Surd::zero())
    }

    pub fn one() -> Self {
        Scalar::Exact(Surd::one())
    }

    pub fn int(n: i64) -> Self {
        Scalar::Exact(Surd::from_int(n))
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        Scalar::from_rational(rat(n, d))
    }

    pub fn from_rational(q: RBig) -> Self {
        Scalar::Exact(Surd::from_rational(q))
    }

    /// Exact `√n`.
    pub fn sqrt_int(n: u64) -> Self {
        Surd::sqrt_times(RBig::ONE, n).map(Scalar::Exact).unwrap_or_else(|| {
            Scalar::Approx(BigFloat::from_u64(n, default_digits()).sqrt())
        })
    }

    /// Exact `√(n/d)`.
    pub fn sqrt_ratio(n: i64, d: i64) -> Self {
        Scalar::ratio(n, d).sqrt()
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Scalar::Exact(_))
    }

    pub fn as_surd(&self) -> Option<&Surd> {
        match self {
            Scalar::Exact(s) => Some(s),
            Scalar::Approx(_) => None,
        }
    }

    pub fn as_rational(&self) -> Option<RBig> {
        self.as_surd().and_then(Surd::as_rational)
    }

    /// Exact zero, or a float below `10^-40`.
    pub fn is_zero(&self) -> bool {
        self.is_negligible(ZERO_DIGITS)
    }

    /// Exact zero, or a float below `10^-digits`.
    pub fn is_negligible(&self, digits: usize) -> bool {
        match self {
            Scalar::Exact(s) => s.is_zero(),
            Scalar::Approx(f) => f.is_zero_within_digits(digits),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Exact(s) => s.as_rational().is_some_and(|q| q.is_one()),
            Scalar::Approx(_) => (self - &Scalar::one()).is_zero(),
        }
    }

    pub fn to_float(&self, digits: usize) -> BigFloat {
        match self {
            Scalar::Exact(s) => s.to_float(digits),
            Scalar::Approx(f) => f.with_digits(digits),
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Scalar::Exact(s) => s.to_f64(),
            Scalar::Approx(f) => f.to_f64(),
        }
    }

    /// Sign; exact for surds, with a `10^-40` dead zone for floats.
    pub fn signum(&self) -> i32 {
        match self {
            Scalar::Exact(s) => s.signum(),
            Scalar::Approx(f) => {
                if f.is_zero_within_digits(ZERO_DIGITS) {
                    0
                } else if f.is_negative() {
                    -1
                } else {
                    1
                }
            }
        }
    }

    pub fn abs(&self) -> Scalar {
        if self.signum() < 0 {
            -self
        } else {
            self.clone()
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        match self {
            Scalar::Exact(s) => match s.inv() {
                Some(i) => Some(Scalar::Exact(i)),
                None if s.is_zero() => None,
                None => {
                    let d = default_digits();
                    Some(Scalar::Approx(BigFloat::from_u64(1, d).div(&s.to_float(d))))
                }
            },
            Scalar::Approx(f) => {
                if self.is_zero() {
                    None
                } else {
                    Some(Scalar::Approx(BigFloat::from_u64(1, f.digits()).div(f)))
                }
            }
        }
    }

    pub fn checked_div(&self, o: &Scalar) -> Result<Scalar, ScalarError> {
        o.inv().map(|i| self * &i).ok_or(ScalarError::DivisionByZero)
    }

    pub fn pow(&self, n: u32) -> Scalar {
        let mut acc = Scalar::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Square root of a nonnegative value: exact for rationals, otherwise a float.
    pub fn sqrt(&self) -> Scalar {
        assert!(self.signum() >= 0, "square root of a negative scalar");
        if let Some(q) = self.as_rational() {
            if let Some(s) = Surd::sqrt_rational(&q) {
                return Scalar::Exact(s);
            }
        }
        let d = self.working_digits();
        Scalar::Approx(self.to_float(d).sqrt())
    }

    /// Real `n`-th root of a nonnegative value (a float unless exact).
    pub fn nth_root(&self, n: u32) -> Scalar {
        assert!(self.signum() >= 0, "root of a negative scalar");
        if n == 1 {
            return self.clone();
        }
        if n == 2 {
            return self.sqrt();
        }
        if self.is_zero() {
            return Scalar::zero();
        }
        let d = self.working_digits();
        Scalar::Approx(self.to_float(d).nth_root(n as usize))
    }

    fn working_digits(&self) -> usize {
        match self {
            Scalar::Exact(_) => default_digits(),
            Scalar::Approx(f) => f.digits(),
        }
    }

    /// Compare as reals (floats within `10^-40` count as equal).
    pub fn cmp_value(&self, o: &Scalar) -> Ordering {
        (self - o).signum().cmp(&0)
    }

    fn promote(a: &Scalar, b: &Scalar) -> (BigFloat, BigFloat) {
        let d = a.working_digits().max(b.working_digits());
        (a.to_float(d), b.to_float(d))
    }

    fn add_ref(&self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Exact(a), Scalar::Exact(b)) => Scalar::Exact(a.add(b)),
            _ => {
                let (a, b) = Scalar::promote(self, o);
                Scalar::Approx(a.add(&b))
            }
        }
    }

    fn mul_ref(&self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Exact(a), Scalar::Exact(b)) => match a.mul(b) {
                Some(p) => Scalar::Exact(p),
                None => {
                    let (a, b) = Scalar::promote(self, o);
                    Scalar::Approx(a.mul(&b))
                }
            },
            _ => {
                let (a, b) = Scalar::promote(self, o);
                Scalar::Approx(a.mul(&b))
            }
        }
    }

    fn neg_ref(&self) -> Scalar {
        match self {
            Scalar::Exact(a) => Scalar::Exact(a.neg()),
            Scalar::Approx(f) => Scalar::Approx(f.neg()),
        }
    }
}

impl PartialEq for Scalar {
    fn eq(&self, o: &Scalar) -> bool {
        match (self, o) {
            (Scalar::Exact(a), Scalar::Exact(b)) => a == b,
            _ => (self - o).is_zero(),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Exact(s) => write!(f, "{}", s),
            Scalar::Approx(x) => write!(f, "{}", x),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Exact(s) => write!(f, "{}", s),
            Scalar::Approx(x) => write!(f, "~{}", x),
        }
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::int(n)
    }
}

impl From<RBig> for Scalar {
    fn from(q: RBig) -> Self {
        Scalar::from_rational(q)
    }
}

impl From<Surd> for Scalar {
    fn from(s: Surd) -> Self {
        Scalar::Exact(s)
    }
}

impl From<BigFloat> for Scalar {
    fn from(f: BigFloat) -> Self {
        Scalar::Approx(f)
    }
}

macro_rules! binop {
    ($tr:ident, $f:ident, $body:expr) => {
        impl<'a> $tr<&'a Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $f(self, o: &Scalar) -> Scalar {
                $body(self, o)
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $f(self, o: Scalar) -> Scalar {
                $body(&self, &o)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $f(self, o: &Scalar) -> Scalar {
                $body(&self, o)
            }
        }
    };
}

binop!(Add, add, |a: &Scalar, b: &Scalar| a.add_ref(b));
binop!(Sub, sub, |a: &Scalar, b: &Scalar| a.add_ref(&b.neg_ref()));
binop!(Mul, mul, |a: &Scalar, b: &Scalar| a.mul_ref(b));
binop!(Div, div, |a: &Scalar, b: &Scalar| a.checked_div(b).expect("division by zero"));

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn division_examples() {
        assert_eq!(Scalar::int(6) / Scalar::int(3), Scalar::int(2));
        assert_eq!(Scalar::sqrt_int(6) / Scalar::sqrt_int(2), Scalar::sqrt_int(3));
        let a = Scalar::one() + Scalar::sqrt_int(2);
        assert_eq!(Scalar::one() / a, Scalar::sqrt_int(2) - Scalar::one());
        assert_eq!(Scalar::one().checked_div(&Scalar::zero()), Err(ScalarError::DivisionByZero));
    }

    #[test]
    fn roots() {
        assert_eq!(Scalar::ratio(9, 4).sqrt(), Scalar::ratio(3, 2));
        assert_eq!(Scalar::ratio(1, 2).sqrt(), Scalar::Exact(Surd::sqrt_times(rat(1, 2), 2).unwrap()));
        let c = Scalar::int(3).nth_root(4);
        assert!(!c.is_exact());
        assert_eq!(c.pow(4), Scalar::int(3));
        assert_eq!(Scalar::sqrt_int(3).sqrt().pow(4), Scalar::int(3));
    }

    #[test]
    fn mixed_arithmetic_promotes() {
        let f = Scalar::int(2).nth_root(3);
        let s = &f + &Scalar::sqrt_int(2);
        assert!(!s.is_exact());
        assert!((s.to_f64() - (2f64.cbrt() + 2f64.sqrt())).abs() < 1e-12);
    }

    #[test]
    fn signs_and_ordering() {
        assert_eq!((Scalar::sqrt_int(2) - Scalar::ratio(141, 100)).signum(), 1);
        assert_eq!(Scalar::sqrt_int(3).cmp_value(&Scalar::sqrt_int(2)), Ordering::Greater);
        assert_eq!(Scalar::zero().signum(), 0);
    }
}
