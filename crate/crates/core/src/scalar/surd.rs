use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use dashu_base::{Gcd, UnsignedAbs};
use dashu_int::{IBig, UBig};
use dashu_ratio::RBig;

use super::float::BigFloat;

/// Trial-division bound used when splitting radicands.
const TRIAL_LIMIT: u64 = 1_000_000;

/// `n = k² · m` with `m` square-free; `None` if `n` is too large to factor
/// reliably.
pub fn square_free_split(n: u64) -> Option<(u64, u64)> {
    if n == 0 {
        return Some((0, 1));
    }
    let mut k = 1u64;
    let mut m = 1u64;
    let mut rest = n;
    let mut p = 2u64;
    while p <= TRIAL_LIMIT && p * p <= rest {
        let mut e = 0;
        while rest % p == 0 {
            rest /= p;
            e += 1;
        }
        for _ in 0..e / 2 {
            k *= p;
        }
        if e % 2 == 1 {
            m *= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        let r = isqrt(rest);
        if r * r == rest {
            k *= r;
        } else if rest < TRIAL_LIMIT * TRIAL_LIMIT {
            // no factor below the limit: rest is prime
            m *= rest;
        } else {
            return None;
        }
    }
    Some((k, m))
}

fn isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

/// Prime factors of a square-free radicand, if they can be found.
pub(crate) fn prime_factors(mut n: u64) -> Option<Vec<u64>> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p <= TRIAL_LIMIT && p * p <= n {
        if n % p == 0 {
            out.push(p);
            n /= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        if n >= TRIAL_LIMIT * TRIAL_LIMIT {
            return None;
        }
        out.push(n);
    }
    Some(out)
}

/// An element of the ring ℚ(√2, √3, √5, …): a finite sum `Σ q_d √d` over
/// square-free radicands `d` (with `d = 1` the rational part).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Surd {
    terms: BTreeMap<u64, RBig>,
}

impl Surd {
    pub fn zero() -> Self {
        Surd::default()
    }

    pub fn one() -> Self {
        Surd::from_rational(RBig::ONE)
    }

    pub fn from_rational(q: RBig) -> Self {
        let mut s = Surd::zero();
        s.add_term(1, q);
        s
    }

    pub fn from_int(n: i64) -> Self {
        Surd::from_rational(RBig::from(n))
    }

    /// `q · √n` for any `n ≥ 0`; `None` when `n` cannot be factored.
    pub fn sqrt_times(q: RBig, n: u64) -> Option<Self> {
        let (k, m) = square_free_split(n)?;
        let mut s = Surd::zero();
        s.add_term(m, q * RBig::from(k));
        Some(s)
    }

    /// Exact square root of a nonnegative rational.
    pub fn sqrt_rational(q: &RBig) -> Option<Self> {
        if q < &RBig::ZERO {
            return None;
        }
        let num = q.numerator().unsigned_abs();
        let den = q.denominator().clone();
        // √(n/d) = √(n·d)/d
        let prod = u64::try_from(&(num * &den)).ok()?;
        Surd::sqrt_times(RBig::from_parts(IBig::ONE, den), prod)
    }

    pub fn terms(&self) -> impl Iterator<Item = (u64, &RBig)> {
        self.terms.iter().map(|(d, q)| (*d, q))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_rational(&self) -> bool {
        self.terms.keys().all(|&d| d == 1)
    }

    pub fn as_rational(&self) -> Option<RBig> {
        if self.is_rational() {
            Some(self.terms.get(&1).cloned().unwrap_or(RBig::ZERO))
        } else {
            None
        }
    }

    pub fn rational_part(&self) -> RBig {
        self.terms.get(&1).cloned().unwrap_or(RBig::ZERO)
    }

    pub fn radicands(&self) -> impl Iterator<Item = u64> + '_ {
        self.terms.keys().copied().filter(|&d| d != 1)
    }

    fn add_term(&mut self, d: u64, q: RBig) {
        if q.is_zero() {
            return;
        }
        let slot = self.terms.entry(d).or_insert(RBig::ZERO);
        *slot += q;
        if slot.is_zero() {
            self.terms.remove(&d);
        }
    }

    pub fn add(&self, o: &Surd) -> Surd {
        let mut out = self.clone();
        for (d, q) in &o.terms {
            out.add_term(*d, q.clone());
        }
        out
    }

    pub fn neg(&self) -> Surd {
        Surd { terms: self.terms.iter().map(|(d, q)| (*d, -q.clone())).collect() }
    }

    pub fn sub(&self, o: &Surd) -> Surd {
        self.add(&o.neg())
    }

    pub fn scale(&self, c: &RBig) -> Surd {
        if c.is_zero() {
            return Surd::zero();
        }
        Surd { terms: self.terms.iter().map(|(d, q)| (*d, q * c)).collect() }
    }

    /// Product; `None` only if a radicand product overflows 64 bits.
    pub fn mul(&self, o: &Surd) -> Option<Surd> {
        let mut out = Surd::zero();
        for (m, p) in &self.terms {
            for (n, q) in &o.terms {
                let g = (*m).gcd(*n);
                let rad = u64::try_from((m / g) as u128 * (n / g) as u128).ok()?;
                out.add_term(rad, p * q * RBig::from(g));
            }
        }
        Some(out)
    }

    /// Exact inverse by repeated conjugation over the largest prime in the
    /// radicands: `(x + y√p)(x − y√p) = x² − p y²` has no `√p`.
    pub fn inv(&self) -> Option<Surd> {
        if self.is_zero() {
            return None;
        }
        if let Some(q) = self.as_rational() {
            return Some(Surd::from_rational(RBig::ONE / q));
        }
        let mut primes = Vec::new();
        for d in self.radicands() {
            primes.extend(prime_factors(d)?);
        }
        let p = *primes.iter().max()?;
        let conj = Surd {
            terms: self
                .terms
                .iter()
                .map(|(d, q)| (*d, if d % p == 0 { -q.clone() } else { q.clone() }))
                .collect(),
        };
        let norm = self.mul(&conj)?;
        debug_assert!(norm.radicands().all(|d| d % p != 0));
        norm.inv()?.mul(&conj)
    }

    pub fn to_float(&self, digits: usize) -> BigFloat {
        let mut acc = BigFloat::zero(digits);
        for (d, q) in &self.terms {
            let t = BigFloat::from_rational(q, digits + 4);
            let t = if *d == 1 { t } else { t.mul(&BigFloat::from_u64(*d, digits + 4).sqrt()) };
            acc = acc.add(&t);
        }
        acc.with_digits(digits)
    }

    pub fn to_f64(&self) -> f64 {
        self.terms.iter().map(|(d, q)| q.to_f64().value() * (*d as f64).sqrt()).sum()
    }

    /// Exact sign, refining precision until the value clears the error bound.
    pub fn signum(&self) -> i32 {
        if let Some(q) = self.as_rational() {
            return match q.cmp(&RBig::ZERO) {
                Ordering::Less => -1,
                Ordering::Equal => 0,
                Ordering::Greater => 1,
            };
        }
        let scale: f64 = self
            .terms
            .iter()
            .map(|(d, q)| q.to_f64().value().abs() * (*d as f64).sqrt())
            .sum::<f64>()
            .max(1.0);
        let f = self.to_f64();
        if f.abs() > 1e-9 * scale {
            return if f > 0.0 { 1 } else { -1 };
        }
        // a nonzero surd is a nonzero real: refine until it clears the error bound
        let slack = scale.log10().ceil() as usize + 6;
        let mut digits = 64;
        loop {
            let v = self.to_float(digits);
            if !v.is_zero_within_digits(digits - slack) {
                return if v.is_negative() { -1 } else { 1 };
            }
            digits *= 2;
        }
    }

    pub fn cmp_zero(&self) -> Ordering {
        self.signum().cmp(&0)
    }
}

fn write_rational(f: &mut fmt::Formatter<'_>, q: &RBig) -> fmt::Result {
    if q.denominator().is_one() {
        write!(f, "{}", q.numerator())
    } else {
        write!(f, "{}/{}", q.numerator(), q.denominator())
    }
}

impl fmt::Display for Surd {
    /// Scalar grammar: `1/2`, `-1/2*sqrt(3)`, `1+2/3*sqrt(3)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (d, q)) in self.terms.iter().enumerate() {
            let neg = q < &RBig::ZERO;
            let abs = if neg { -q.clone() } else { q.clone() };
            if neg {
                f.write_str("-")?;
            } else if k > 0 {
                f.write_str("+")?;
            }
            if *d == 1 {
                write_rational(f, &abs)?;
            } else {
                if !abs.is_one() {
                    write_rational(f, &abs)?;
                    f.write_str("*")?;
                }
                write!(f, "sqrt({})", d)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Surd({})", self)
    }
}

impl From<UBig> for Surd {
    fn from(n: UBig) -> Self {
        Surd::from_rational(RBig::from(n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> RBig {
        RBig::from_parts_signed(IBig::from(n), IBig::from(d))
    }

    fn r(n: u64) -> Surd {
        Surd::sqrt_times(RBig::ONE, n).unwrap()
    }

    #[test]
    fn square_free_parts() {
        assert_eq!(square_free_split(12), Some((2, 3)));
        assert_eq!(square_free_split(1), Some((1, 1)));
        assert_eq!(square_free_split(330), Some((1, 330)));
        assert_eq!(square_free_split(49 * 11), Some((7, 11)));
        assert_eq!(square_free_split(1_000_003u64 * 1_000_003), Some((1_000_003, 1)));
    }

    #[test]
    fn products() {
        assert_eq!(r(2).mul(&r(2)).unwrap(), Surd::from_int(2));
        assert_eq!(r(2).mul(&r(3)).unwrap(), r(6));
        let a = Surd::one().add(&r(2));
        let b = Surd::one().sub(&r(2));
        assert_eq!(a.mul(&b).unwrap(), Surd::from_int(-1));
        assert_eq!(r(6).mul(&r(10)).unwrap(), Surd::sqrt_times(q(2, 1), 15).unwrap());
    }

    #[test]
    fn inverses() {
        let a = Surd::one().add(&r(2));
        assert_eq!(a.inv().unwrap(), r(2).sub(&Surd::one()));
        assert_eq!(r(6).mul(&r(2).inv().unwrap()).unwrap(), r(3));
        let b = Surd::from_int(3).add(&r(2)).add(&r(3)).add(&r(6).scale(&q(1, 2)));
        assert_eq!(b.mul(&b.inv().unwrap()).unwrap(), Surd::one());
        assert!(Surd::zero().inv().is_none());
    }

    #[test]
    fn rational_square_roots() {
        assert_eq!(Surd::sqrt_rational(&q(2, 105)).unwrap(), Surd::sqrt_times(q(1, 105), 210).unwrap());
        assert_eq!(Surd::sqrt_rational(&q(9, 4)).unwrap(), Surd::from_rational(q(3, 2)));
        assert!(Surd::sqrt_rational(&q(-1, 1)).is_none());
    }

    #[test]
    fn signs() {
        // 7√330/660 vs 1/√22: 7/(2√330) < 1/√22
        let branch = Surd::sqrt_times(q(7, 660), 330).unwrap();
        let max = Surd::sqrt_times(q(1, 22), 22).unwrap();
        assert_eq!(max.sub(&branch).signum(), 1);
        // 99 - 70√2 ≈ 0.00505
        let tiny = Surd::from_int(99).sub(&r(2).scale(&q(70, 1)));
        assert_eq!(tiny.signum(), 1);
        // 3363 - 2378√2 ≈ -1.5e-4 (near cancellation)
        let t = Surd::from_int(3363).sub(&r(2).scale(&q(2378, 1)));
        assert_eq!(t.signum(), 1);
        assert_eq!(t.neg().signum(), -1);
    }

    #[test]
    fn display() {
        assert_eq!(Surd::sqrt_times(q(-1, 2), 3).unwrap().to_string(), "-1/2*sqrt(3)");
        assert_eq!(Surd::one().add(&Surd::sqrt_times(q(2, 3), 3).unwrap()).to_string(), "1+2/3*sqrt(3)");
        assert_eq!(Surd::zero().to_string(), "0");
    }

    #[test]
    fn float_values() {
        let v = Surd::sqrt_times(q(2, 3), 3).unwrap().to_float(40);
        assert!(v.to_string().starts_with("1.154700538379251529018297561003914911295"));
    }
}
