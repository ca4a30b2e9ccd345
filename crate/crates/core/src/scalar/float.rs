use std::fmt;

use dashu_float::DBig;
use dashu_int::IBig;
use dashu_ratio::RBig;

/// Decimal floating point value at a fixed number of significant digits.
#[derive(Clone, PartialEq, PartialOrd)]
pub struct BigFloat {
    v: DBig,
    digits: usize,
}

fn at(v: DBig, digits: usize) -> DBig {
    v.with_precision(digits).value()
}

impl BigFloat {
    pub fn zero(digits: usize) -> Self {
        BigFloat { v: at(DBig::ZERO, digits), digits }
    }

    pub fn from_ibig(n: IBig, digits: usize) -> Self {
        BigFloat { v: at(DBig::from(n), digits), digits }
    }

    pub fn from_u64(n: u64, digits: usize) -> Self {
        BigFloat::from_ibig(IBig::from(n), digits)
    }

    pub fn from_rational(q: &RBig, digits: usize) -> Self {
        let n = at(DBig::from(q.numerator().clone()), digits);
        let d = at(DBig::from(IBig::from(q.denominator().clone())), digits);
        BigFloat { v: n / d, digits }
    }

    /// Exact decimal conversion of an `f64` (used only for parsed decimals).
    pub fn from_decimal_str(s: &str, digits: usize) -> Option<Self> {
        let v: DBig = s.parse().ok()?;
        Some(BigFloat { v: at(v, digits), digits })
    }

    pub fn digits(&self) -> usize {
        self.digits
    }

    pub fn with_digits(&self, digits: usize) -> Self {
        BigFloat { v: at(self.v.clone(), digits), digits }
    }

    fn common(&self, o: &BigFloat) -> usize {
        self.digits.max(o.digits)
    }

    pub fn add(&self, o: &BigFloat) -> Self {
        let d = self.common(o);
        BigFloat { v: at(self.v.clone(), d) + at(o.v.clone(), d), digits: d }
    }

    pub fn sub(&self, o: &BigFloat) -> Self {
        let d = self.common(o);
        BigFloat { v: at(self.v.clone(), d) - at(o.v.clone(), d), digits: d }
    }

    pub fn mul(&self, o: &BigFloat) -> Self {
        let d = self.common(o);
        BigFloat { v: at(self.v.clone(), d) * at(o.v.clone(), d), digits: d }
    }

    pub fn div(&self, o: &BigFloat) -> Self {
        let d = self.common(o);
        BigFloat { v: at(self.v.clone(), d) / at(o.v.clone(), d), digits: d }
    }

    pub fn neg(&self) -> Self {
        BigFloat { v: -self.v.clone(), digits: self.digits }
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            self.neg()
        } else {
            self.clone()
        }
    }

    pub fn is_negative(&self) -> bool {
        self.v < DBig::ZERO
    }

    /// Square root of `|self|` carrying the sign convention of the caller;
    /// panics on negative input.
    pub fn sqrt(&self) -> Self {
        assert!(!self.is_negative(), "square root of a negative number");
        if self.v == DBig::ZERO {
            return self.clone();
        }
        BigFloat { v: self.v.sqrt(), digits: self.digits }
    }

    /// Real `n`-th root of a nonnegative value.
    pub fn nth_root(&self, n: usize) -> Self {
        assert!(!self.is_negative(), "even root of a negative number");
        if self.v == DBig::ZERO {
            return self.clone();
        }
        BigFloat { v: self.v.nth_root(n), digits: self.digits }
    }

    pub fn to_f64(&self) -> f64 {
        self.v.to_f64().value()
    }

    /// `|self| < 10^(-e)`.
    pub fn is_zero_within_digits(&self, e: usize) -> bool {
        if self.v == DBig::ZERO {
            return true;
        }
        let tol = DBig::from_parts(IBig::ONE, -(e as isize));
        at(self.abs().v, self.digits) < tol
    }

    /// Integer power.
    pub fn powi(&self, n: u32) -> Self {
        let mut acc = BigFloat { v: at(DBig::ONE, self.digits), digits: self.digits };
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }
}

impl fmt::Display for BigFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.v == DBig::ZERO {
            return f.write_str("0.0");
        }
        let s = self.v.to_string();
        if s.contains('.') || s.contains('e') {
            f.write_str(&s)
        } else {
            write!(f, "{}.0", s)
        }
    }
}

impl fmt::Debug for BigFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BigFloat({})", self)
    }
}
