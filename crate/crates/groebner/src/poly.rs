use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use dashu_int::IBig;
use dashu_ratio::RBig;
use smallvec::SmallVec;

use crate::order::MonomialOrder;

/// An ordered list of named indeterminates shared by a family of polynomials.
#[derive(Clone, Debug)]
pub struct Vars(Arc<[String]>);

impl Vars {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Self {
        Vars(names.into_iter().map(Into::into).collect::<Vec<_>>().into())
    }

    pub fn empty() -> Self {
        Vars(Arc::from(Vec::<String>::new()))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn name(&self, i: usize) -> &str {
        &self.0[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }

    /// A new variable list `prefix ++ self`.
    pub fn with_prefix<S: Into<String>>(&self, prefix: impl IntoIterator<Item = S>) -> Vars {
        let mut names: Vec<String> = prefix.into_iter().map(Into::into).collect();
        names.extend(self.0.iter().cloned());
        Vars(names.into())
    }

    fn same(&self, other: &Vars) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl PartialEq for Vars {
    fn eq(&self, other: &Self) -> bool {
        self.same(other)
    }
}

impl Eq for Vars {}

/// A monomial stored sparsely as `(variable index, exponent)` pairs sorted by index.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Mono(SmallVec<[(u16, u16); 4]>);

impl Mono {
    pub fn one() -> Self {
        Mono(SmallVec::new())
    }

    pub fn var(i: usize) -> Self {
        Mono(smallvec::smallvec![(i as u16, 1)])
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        Mono(
            exps.iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| (i as u16, e as u16))
                .collect(),
        )
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e as u32).sum()
    }

    pub fn exponent(&self, var: usize) -> u32 {
        self.0
            .iter()
            .find(|&&(v, _)| v as usize == var)
            .map_or(0, |&(_, e)| e as u32)
    }

    pub fn factors(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.0.iter().map(|&(v, e)| (v as usize, e as u32))
    }

    pub fn dense(&self, nvars: usize) -> Vec<u32> {
        let mut out = vec![0; nvars];
        for &(v, e) in &self.0 {
            out[v as usize] = e as u32;
        }
        out
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        let mut out = SmallVec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            let (a, b) = (self.0[i], other.0[j]);
            match a.0.cmp(&b.0) {
                std::cmp::Ordering::Less => {
                    out.push(a);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((a.0, a.1 + b.1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Mono(out)
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Mono) -> Option<Mono> {
        let mut out = SmallVec::new();
        let mut j = 0;
        for &(v, e) in &self.0 {
            let mut d = 0;
            if j < other.0.len() && other.0[j].0 == v {
                d = other.0[j].1;
                j += 1;
            } else if j < other.0.len() && other.0[j].0 < v {
                return None;
            }
            if d > e {
                return None;
            }
            if e > d {
                out.push((v, e - d));
            }
        }
        if j < other.0.len() {
            return None;
        }
        Some(Mono(out))
    }

    /// Renumber variables through `map` (old index -> new index).
    pub fn remap(&self, map: &[usize]) -> Mono {
        let mut v: SmallVec<[(u16, u16); 4]> =
            self.0.iter().map(|&(i, e)| (map[i as usize] as u16, e)).collect();
        v.sort_unstable_by_key(|&(i, _)| i);
        Mono(v)
    }

    fn fmt_with(&self, vars: &Vars, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, &(v, e)) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            let name = if (v as usize) < vars.len() {
                vars.name(v as usize).to_string()
            } else {
                format!("x{}", v)
            };
            if e == 1 {
                write!(f, "{}", name)?;
            } else {
                write!(f, "{}^{}", name, e)?;
            }
        }
        Ok(())
    }
}

/// A multivariate polynomial with rational coefficients.
///
/// Terms are stored in a map keyed by sparse monomials; leading terms are only
/// meaningful relative to a [`MonomialOrder`]. A polynomial built without a
/// variable list (for instance `Poly::zero()`) adopts the list of whatever it is
/// combined with.
#[derive(Clone, Debug)]
pub struct Poly {
    vars: Vars,
    terms: BTreeMap<Mono, RBig>,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl Eq for Poly {}

impl Poly {
    pub fn zero() -> Self {
        Poly { vars: Vars::empty(), terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Poly::constant(RBig::ONE)
    }

    pub fn constant(c: RBig) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Mono::one(), c);
        }
        Poly { vars: Vars::empty(), terms }
    }

    pub fn zero_in(vars: &Vars) -> Self {
        Poly { vars: vars.clone(), terms: BTreeMap::new() }
    }

    pub fn constant_in(vars: &Vars, c: RBig) -> Self {
        let mut p = Poly::constant(c);
        p.vars = vars.clone();
        p
    }

    pub fn var(vars: &Vars, i: usize) -> Self {
        assert!(i < vars.len(), "variable index {} out of range", i);
        let mut terms = BTreeMap::new();
        terms.insert(Mono::var(i), RBig::ONE);
        Poly { vars: vars.clone(), terms }
    }

    /// Variable by name; panics if the name is not declared.
    pub fn named(vars: &Vars, name: &str) -> Self {
        let i = vars.index_of(name).unwrap_or_else(|| panic!("unknown variable {}", name));
        Poly::var(vars, i)
    }

    pub fn from_terms(vars: &Vars, terms: impl IntoIterator<Item = (Mono, RBig)>) -> Self {
        let mut p = Poly::zero_in(vars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    /// Attach a variable list, keeping the terms.
    pub fn with_vars(mut self, vars: &Vars) -> Self {
        self.vars = vars.clone();
        self
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Mono::is_one)
    }

    pub fn constant_term(&self) -> RBig {
        self.terms.get(&Mono::one()).cloned().unwrap_or(RBig::ZERO)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &RBig)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Mono) -> RBig {
        self.terms.get(m).cloned().unwrap_or(RBig::ZERO)
    }

    pub fn add_term(&mut self, m: Mono, c: RBig) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Mono::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Mono::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m.exponent(var)).max().unwrap_or(0)
    }

    /// Indices of variables that actually occur.
    pub fn support(&self) -> Vec<usize> {
        let mut seen: Vec<usize> = self.terms.keys().flat_map(|m| m.factors().map(|(v, _)| v)).collect();
        seen.sort_unstable();
        seen.dedup();
        seen
    }

    pub fn scale(&self, c: &RBig) -> Poly {
        if c.is_zero() {
            return Poly::zero_in(&self.vars);
        }
        Poly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_mono(&self, m: &Mono, c: &RBig) -> Poly {
        if c.is_zero() {
            return Poly::zero_in(&self.vars);
        }
        Poly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(k, a)| (k.mul(m), a * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Poly {
        let mut out = Poly::constant_in(&self.vars, RBig::ONE);
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// Leading monomial and coefficient with respect to `order`.
    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(&Mono, &RBig)> {
        let n = self.vars.len().max(self.max_var_index() + 1);
        self.terms
            .iter()
            .max_by(|a, b| order.cmp_sparse(a.0, b.0, n))
    }

    fn max_var_index(&self) -> usize {
        self.terms
            .keys()
            .filter_map(|m| m.factors().map(|(v, _)| v).max())
            .max()
            .unwrap_or(0)
    }

    /// Terms sorted from largest to smallest in `order`.
    pub fn sorted_terms(&self, order: &MonomialOrder) -> Vec<(Mono, RBig)> {
        let n = self.vars.len().max(self.max_var_index() + 1);
        let mut v: Vec<(Mono, RBig)> = self.terms.iter().map(|(m, c)| (m.clone(), c.clone())).collect();
        v.sort_by(|a, b| order.cmp_sparse(&b.0, &a.0, n));
        v
    }

    /// Divide by the leading coefficient in `order`.
    pub fn monic(&self, order: &MonomialOrder) -> Poly {
        match self.leading_term(order) {
            None => self.clone(),
            Some((_, c)) => {
                let inv = RBig::ONE / c;
                self.scale(&inv)
            }
        }
    }

    pub fn eval(&self, point: &[RBig]) -> RBig {
        let mut acc = RBig::ZERO;
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, e) in m.factors() {
                t *= point[v].pow(e as isize);
            }
            acc += t;
        }
        acc
    }

    /// Ring map sending variable `i` to `images[i]`.
    pub fn compose(&self, images: &[Poly]) -> Poly {
        let target = images.iter().find(|p| !p.vars.is_empty()).map(|p| p.vars.clone()).unwrap_or_else(Vars::empty);
        let mut out = Poly::zero_in(&target);
        for (m, c) in &self.terms {
            let mut t = Poly::constant_in(&target, c.clone());
            for (v, e) in m.factors() {
                t = &t * &images[v].pow(e);
            }
            out = &out + &t;
        }
        out
    }

    /// Substitute a single variable.
    pub fn substitute(&self, var: usize, value: &Poly) -> Poly {
        let images: Vec<Poly> = (0..self.vars.len())
            .map(|i| if i == var { value.clone().with_vars(&self.vars) } else { Poly::var(&self.vars, i) })
            .collect();
        self.compose(&images).with_vars(&self.vars)
    }

    /// `self = Σ_k c_k · x_var^k`; returns `[c_0, c_1, …]`, each free of `x_var`.
    pub fn coefficients_in(&self, var: usize) -> Vec<Poly> {
        let mut out = vec![Poly::zero_in(&self.vars); self.degree_in(var) as usize + 1];
        for (m, c) in &self.terms {
            let e = m.exponent(var);
            let rest = Mono(m.0.iter().copied().filter(|(v, _)| *v as usize != var).collect());
            out[e as usize].add_term(rest, c.clone());
        }
        out
    }

    /// Move into a new variable list: variable `i` becomes `map[i]` of `target`.
    pub fn remap(&self, target: &Vars, map: &[usize]) -> Poly {
        Poly {
            vars: target.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.remap(map), c.clone())).collect(),
        }
    }

    /// Exact division; `None` if `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Poly) -> Option<Poly> {
        if divisor.is_zero() {
            return None;
        }
        let order = MonomialOrder::Grevlex;
        let (dm, dc) = {
            let (m, c) = divisor.leading_term(&order)?;
            (m.clone(), c.clone())
        };
        let mut rem = self.clone();
        let mut quot = Poly::zero_in(&self.vars);
        while let Some((m, c)) = rem.leading_term(&order).map(|(m, c)| (m.clone(), c.clone())) {
            let q = m.div(&dm)?;
            let qc = c / &dc;
            rem = &rem - &divisor.mul_mono(&q, &qc);
            quot.add_term(q, qc);
        }
        Some(quot)
    }

    /// Integer content-free version with positive leading coefficient (grevlex).
    pub fn primitive(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        use dashu_base::{Gcd, UnsignedAbs};
        let mut den_lcm = dashu_int::UBig::ONE;
        for c in self.terms.values() {
            let d = c.denominator();
            let g = (&den_lcm).gcd(d);
            den_lcm = &den_lcm / &g * d;
        }
        let mut num_gcd = dashu_int::UBig::ZERO;
        let scaled: Vec<(Mono, IBig)> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let n = c.numerator() * IBig::from(den_lcm.clone()) / IBig::from(c.denominator().clone());
                (m.clone(), n)
            })
            .collect();
        for (_, n) in &scaled {
            let a = n.unsigned_abs();
            num_gcd = if num_gcd.is_zero() { a } else { (&num_gcd).gcd(&a) };
        }
        let lead_sign_neg = {
            let (m, _) = self.leading_term(&MonomialOrder::Grevlex).unwrap();
            let m = m.clone();
            scaled.iter().find(|(k, _)| *k == m).unwrap().1 < IBig::ZERO
        };
        let g = IBig::from(num_gcd);
        let g = if lead_sign_neg { -g } else { g };
        Poly::from_terms(&self.vars, scaled.into_iter().map(|(m, n)| (m, RBig::from(n / &g))))
    }

    pub fn display(&self) -> String {
        self.to_string()
    }

    fn merged_vars(&self, other: &Poly) -> Vars {
        if self.vars.is_empty() {
            other.vars.clone()
        } else {
            debug_assert!(
                other.vars.is_empty() || self.vars.same(&other.vars),
                "polynomials over different variable lists"
            );
            self.vars.clone()
        }
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.sorted_terms(&MonomialOrder::Grevlex).iter().enumerate() {
            let neg = c < &RBig::ZERO;
            let abs = if neg { -c.clone() } else { c.clone() };
            if k == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            if m.is_one() {
                write!(f, "{}", abs)?;
            } else {
                if !abs.is_one() {
                    write!(f, "{}*", abs)?;
                }
                m.fmt_with(&self.vars, f)?;
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let vars = self.merged_vars(rhs);
        let (big, small) = if self.terms.len() >= rhs.terms.len() { (self, rhs) } else { (rhs, self) };
        let mut out = Poly { vars, terms: big.terms.clone() };
        for (m, c) in &small.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let vars = self.merged_vars(rhs);
        let mut out = Poly { vars, terms: self.terms.clone() };
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let vars = self.merged_vars(rhs);
        let mut out = Poly { vars, terms: BTreeMap::new() };
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $f(self, rhs: Poly) -> Poly {
                (&self).$f(&rhs)
            }
        }
        impl<'a> $tr<&'a Poly> for Poly {
            type Output = Poly;
            fn $f(self, rhs: &Poly) -> Poly {
                (&self).$f(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

/// Shorthand for the rational `n/d`.
pub fn rat(n: i64, d: i64) -> RBig {
    RBig::from_parts_signed(IBig::from(n), IBig::from(d))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coefficients_in_a_variable() {
        let (_, x, y) = xy();
        let p = &(&(&x * &x) * &y) + &(&y - &x);
        let c = p.coefficients_in(0);
        assert_eq!(c.len(), 3);
        assert_eq!(c[0], y);
        assert_eq!(c[1], -&Poly::one());
        assert_eq!(c[2], y);
    }

    fn xy() -> (Vars, Poly, Poly) {
        let v = Vars::new(["x", "y"]);
        let x = Poly::var(&v, 0);
        let y = Poly::var(&v, 1);
        (v, x, y)
    }

    #[test]
    fn arithmetic_and_display() {
        let (_, x, y) = xy();
        let p = &(&x + &y) * &(&x - &y);
        assert_eq!(p.to_string(), "x^2 - y^2");
        assert!(p.is_homogeneous());
        assert_eq!(p.total_degree(), Some(2));
    }

    #[test]
    fn exact_division() {
        let (_, x, y) = xy();
        let f = &x + &y;
        let g = &(&f * &f) * &(&x - &Poly::one());
        assert_eq!(g.div_exact(&f).unwrap(), &f * &(&x - &Poly::one()));
        assert!(x.div_exact(&y).is_none());
    }

    #[test]
    fn substitution_and_eval() {
        let (_, x, y) = xy();
        let p = &(&x * &x) + &y;
        let q = p.substitute(1, &(&x + &x));
        assert_eq!(q.to_string(), "x^2 + 2*x");
        assert_eq!(p.eval(&[rat(3, 1), rat(-1, 2)]), rat(17, 2));
    }

    #[test]
    fn primitive_part() {
        let (_, x, y) = xy();
        let p = &x.scale(&rat(-2, 3)) + &y.scale(&rat(4, 9));
        assert_eq!(p.primitive().to_string(), "3*x - 2*y");
    }

    #[test]
    fn mono_division() {
        let a = Mono::from_exponents(&[2, 1, 0]);
        let b = Mono::from_exponents(&[1, 1, 0]);
        assert_eq!(a.div(&b), Some(Mono::from_exponents(&[1, 0, 0])));
        assert_eq!(b.div(&a), None);
        assert_eq!(Mono::from_exponents(&[0, 0, 1]).div(&Mono::var(1)), None);
    }
}
