//! Minimal coefficient-ring abstraction shared by numeric forms (over
//! [`Scalar`]) and symbolic forms (over [`Poly`]).

use std::fmt::{Debug, Display};

use dashu_ratio::RBig;
use su3_groebner::Poly;

use crate::scalar::Scalar;

pub trait Ring: Clone + PartialEq + Debug + Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_rational(q: RBig) -> Self;
    fn plus(&self, o: &Self) -> Self;
    fn minus(&self, o: &Self) -> Self;
    fn times(&self, o: &Self) -> Self;
    fn negated(&self) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_rational(RBig::from(n))
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

pub trait Field: Ring {
    fn inverse(&self) -> Option<Self>;
    /// Rough size, used to pick pivots.
    fn magnitude(&self) -> f64;
}

impl Ring for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn one() -> Self {
        Scalar::one()
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
    fn from_rational(q: RBig) -> Self {
        Scalar::from_rational(q)
    }
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn negated(&self) -> Self {
        -self
    }
    fn is_one(&self) -> bool {
        Scalar::is_one(self)
    }
}

impl Field for Scalar {
    fn inverse(&self) -> Option<Self> {
        self.inv()
    }
    fn magnitude(&self) -> f64 {
        self.to_f64().abs()
    }
}

impl Ring for Poly {
    fn zero() -> Self {
        Poly::zero()
    }
    fn one() -> Self {
        Poly::one()
    }
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
    fn from_rational(q: RBig) -> Self {
        Poly::constant(q)
    }
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn negated(&self) -> Self {
        -self
    }
}

impl Ring for RBig {
    fn zero() -> Self {
        RBig::ZERO
    }
    fn one() -> Self {
        RBig::ONE
    }
    fn is_zero(&self) -> bool {
        RBig::is_zero(self)
    }
    fn from_rational(q: RBig) -> Self {
        q
    }
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn negated(&self) -> Self {
        -self.clone()
    }
}

impl Field for RBig {
    fn inverse(&self) -> Option<Self> {
        (!self.is_zero()).then(|| RBig::ONE / self)
    }
    fn magnitude(&self) -> f64 {
        self.to_f64().value().abs()
    }
}
