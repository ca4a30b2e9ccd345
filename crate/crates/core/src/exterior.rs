//! Exterior algebra of a 6-dimensional space with basis e¹…e⁶.
//!
//! Forms are sparse maps from index words to coefficients in any [`Ring`];
//! [`KForm`] uses exact/float scalars and [`SymForm`] polynomial coefficients.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use su3_groebner::Poly;
use thiserror::Error;

use crate::linalg::Matrix;
use crate::ring::Ring;
use crate::scalar::{Cursor, Scalar, ScalarError};

pub const DIM: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExteriorError {
    #[error("degree overflow: {0} + {1} > 6")]
    DegreeOverflow(usize, usize),
    #[error("cannot contract a 0-form")]
    DegreeUnderflow,
    #[error("expected a form of degree {expected}, found degree {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },
}

impl From<ScalarError> for ExteriorError {
    fn from(e: ScalarError) -> Self {
        match e {
            ScalarError::Parse { column, message } => ExteriorError::Parse { column, message },
            other => ExteriorError::Parse { column: 0, message: other.to_string() },
        }
    }
}

/// A strictly increasing index word, stored as a bitmask (bit `i-1` for index `i`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Word(u8);

impl Word {
    pub const EMPTY: Word = Word(0);
    pub const TOP: Word = Word(0b11_1111);

    pub fn bits(self) -> u8 {
        self.0
    }

    pub fn from_bits(bits: u8) -> Word {
        assert!(bits < 64, "index out of range");
        Word(bits)
    }

    pub fn single(i: usize) -> Word {
        assert!((1..=DIM).contains(&i), "index {} out of range", i);
        Word(1 << (i - 1))
    }

    /// From 1-based indices; `None` unless strictly increasing and within 1..=6.
    pub fn from_indices(ix: &[usize]) -> Option<Word> {
        let mut bits = 0u8;
        let mut last = 0;
        for &i in ix {
            if i <= last || i > DIM {
                return None;
            }
            bits |= 1 << (i - 1);
            last = i;
        }
        Some(Word(bits))
    }

    pub fn indices(self) -> impl Iterator<Item = usize> {
        (1..=DIM).filter(move |i| self.0 & (1 << (i - 1)) != 0)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 & (1 << (i - 1)) != 0
    }

    pub fn without(self, i: usize) -> Word {
        Word(self.0 & !(1 << (i - 1)))
    }

    pub fn complement(self) -> Word {
        Word(!self.0 & Word::TOP.0)
    }

    /// All words of length `k` in increasing order.
    pub fn all(k: usize) -> Vec<Word> {
        let mut v: Vec<Word> = (0u8..64).map(Word).filter(|w| w.len() == k).collect();
        v.sort();
        v
    }

    /// Sign of `e^a ∧ e^b` relative to `e^{a∪b}`, or `None` if they overlap.
    pub fn wedge_sign(a: Word, b: Word) -> Option<i32> {
        if a.0 & b.0 != 0 {
            return None;
        }
        let mut inversions = 0;
        for j in b.indices() {
            inversions += (a.0 >> j).count_ones();
        }
        Some(if inversions % 2 == 0 { 1 } else { -1 })
    }

    /// Sign picked up by moving index `i` (contained in the word) to the front.
    pub fn front_sign(self, i: usize) -> i32 {
        let before = (self.0 & ((1 << (i - 1)) - 1)).count_ones();
        if before % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

impl Ord for Word {
    /// Lexicographic on index sequences, so e^{12} < e^{123} < e^{13}.
    fn cmp(&self, other: &Self) -> Ordering {
        let x = self.0 ^ other.0;
        if x == 0 {
            return Ordering::Equal;
        }
        // Indices below the lowest differing one are shared; the word owning
        // that index is smaller unless the other word stops before it.
        let low = x & x.wrapping_neg();
        let above = !(low - 1);
        let (a, b) = if self.0 & low != 0 { (Ordering::Less, other.0) } else { (Ordering::Greater, self.0) };
        if b & above == 0 {
            a.reverse()
        } else {
            a
        }
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ix: Vec<String> = self.indices().map(|i| i.to_string()).collect();
        write!(f, "e^{{{}}}", ix.join(","))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A homogeneous form of fixed degree.
#[derive(Clone, PartialEq)]
pub struct Form<T> {
    degree: usize,
    terms: BTreeMap<Word, T>,
}

pub type KForm = Form<Scalar>;
pub type SymForm = Form<Poly>;

/// `v ⊗ (top · e^{123456})`, the image of a 5-form under the canonical isomorphism.
#[derive(Clone, Debug, PartialEq)]
pub struct VectorValuedTop<T> {
    pub vector: Vec<T>,
    pub top: T,
}

impl<T: Ring> Form<T> {
    /// The zero form; degree 7 is allowed so that `d` of a top form has a home.
    pub fn zero(degree: usize) -> Self {
        assert!(degree <= DIM + 1);
        Form { degree, terms: BTreeMap::new() }
    }

    pub fn basis(w: Word) -> Self {
        Form::term(T::one(), w)
    }

    pub fn term(c: T, w: Word) -> Self {
        let mut f = Form::zero(w.len());
        f.add_term(w, c);
        f
    }

    /// `e^{i}` for 1-based `i`.
    pub fn e(i: usize) -> Self {
        Form::basis(Word::single(i))
    }

    pub fn constant(c: T) -> Self {
        Form::term(c, Word::EMPTY)
    }

    /// `e^{123456}`.
    pub fn volume() -> Self {
        Form::basis(Word::TOP)
    }

    pub fn from_terms(degree: usize, terms: impl IntoIterator<Item = (Word, T)>) -> Self {
        let mut f = Form::zero(degree);
        for (w, c) in terms {
            f.add_term(w, c);
        }
        f
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Word, &T)> {
        self.terms.iter().map(|(w, c)| (*w, c))
    }

    pub fn coeff(&self, w: Word) -> T {
        self.terms.get(&w).cloned().unwrap_or_else(T::zero)
    }

    pub fn add_term(&mut self, w: Word, c: T) {
        assert_eq!(w.len(), self.degree, "word degree mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(old) => {
                let s = old.plus(&c);
                if s.is_zero() {
                    self.terms.remove(&w);
                } else {
                    *old = s;
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    fn check_degree(&self, o: &Self) {
        assert!(
            self.degree == o.degree || self.is_zero() || o.is_zero(),
            "adding forms of degrees {} and {}",
            self.degree,
            o.degree
        );
    }

    pub fn add(&self, o: &Self) -> Self {
        self.check_degree(o);
        let mut out = if self.is_zero() { Form::zero(o.degree) } else { self.clone() };
        if self.is_zero() {
            out.terms = o.terms.clone();
            return out;
        }
        for (w, c) in &o.terms {
            out.add_term(*w, c.clone());
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        self.map(|c| c.negated())
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Form::zero(self.degree);
        }
        self.map(|x| x.times(c))
    }

    /// Apply `f` to every coefficient (zero results are dropped).
    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> Form<U> {
        let mut out = Form::zero(self.degree);
        for (w, c) in &self.terms {
            out.add_term(*w, f(c));
        }
        out
    }

    pub fn wedge(&self, o: &Self) -> Result<Self, ExteriorError> {
        let k = self.degree + o.degree;
        if k > DIM {
            return Err(ExteriorError::DegreeOverflow(self.degree, o.degree));
        }
        let mut out = Form::zero(k);
        for (a, ca) in &self.terms {
            for (b, cb) in &o.terms {
                if let Some(s) = Word::wedge_sign(*a, *b) {
                    let c = ca.times(cb);
                    out.add_term(Word(a.0 | b.0), if s < 0 { c.negated() } else { c });
                }
            }
        }
        Ok(out)
    }

    /// Wedge with the degree check turned into a panic; for internal callers
    /// whose degrees are known to fit.
    pub(crate) fn w(&self, o: &Self) -> Self {
        self.wedge(o).expect("degree fits")
    }

    /// `i_{e_j} self` for 1-based `j`.
    pub fn interior_basis(&self, j: usize) -> Result<Self, ExteriorError> {
        if self.degree == 0 {
            return Err(ExteriorError::DegreeUnderflow);
        }
        let mut out = Form::zero(self.degree - 1);
        for (w, c) in &self.terms {
            if w.contains(j) {
                let c = if w.front_sign(j) < 0 { c.negated() } else { c.clone() };
                out.add_term(w.without(j), c);
            }
        }
        Ok(out)
    }

    /// `i_v self`, contracting the first slot; `v` holds components in e₁…e₆.
    pub fn interior(&self, v: &[T]) -> Result<Self, ExteriorError> {
        assert_eq!(v.len(), DIM);
        let mut out = Form::zero(self.degree.checked_sub(1).ok_or(ExteriorError::DegreeUnderflow)?);
        for (j, vj) in v.iter().enumerate() {
            if !vj.is_zero() {
                out = out.add(&self.interior_basis(j + 1)?.scale(vj));
            }
        }
        Ok(out)
    }

    /// The coefficient of e^{123456}.
    pub fn top_coefficient(&self) -> Result<T, ExteriorError> {
        if self.degree != DIM {
            return Err(ExteriorError::DegreeMismatch { expected: DIM, found: self.degree });
        }
        Ok(self.coeff(Word::TOP))
    }

    /// Canonical isomorphism Λ⁵ → V ⊗ Λ⁶ with the top form fixed to e^{123456}.
    pub fn five_form_iso(&self) -> Result<VectorValuedTop<T>, ExteriorError> {
        if self.degree != 5 {
            return Err(ExteriorError::DegreeMismatch { expected: 5, found: self.degree });
        }
        let vector = (1..=DIM)
            .map(|j| {
                let c = self.coeff(Word::TOP.without(j));
                if j % 2 == 0 {
                    c.negated()
                } else {
                    c
                }
            })
            .collect();
        Ok(VectorValuedTop { vector, top: T::one() })
    }

    /// Pullback along the linear map with matrix `m` (column j = image of e_j):
    /// `m* e^i = Σ_j m[i][j] e^j`.
    pub fn pullback(&self, m: &Matrix<T>) -> Self {
        assert!(m.rows() == DIM && m.cols() == DIM);
        let images: Vec<Form<T>> = (0..DIM)
            .map(|i| Form::from_terms(1, (0..DIM).map(|j| (Word::single(j + 1), m[(i, j)].clone()))))
            .collect();
        let mut out = Form::zero(self.degree);
        for (w, c) in &self.terms {
            let mut acc = Form::constant(c.clone());
            for i in w.indices() {
                acc = acc.w(&images[i - 1]);
                if acc.is_zero() {
                    break;
                }
            }
            out = out.add(&acc);
        }
        out
    }

    /// Matrix `W[i][k] = self(e_i, e_k)` of a 2-form.
    pub fn skew_matrix(&self) -> Matrix<T> {
        assert_eq!(self.degree, 2);
        let mut m = Matrix::zeros(DIM, DIM);
        for (w, c) in &self.terms {
            let ix: Vec<usize> = w.indices().collect();
            let (i, k) = (ix[0] - 1, ix[1] - 1);
            m[(i, k)] = c.clone();
            m[(k, i)] = c.negated();
        }
        m
    }

    /// Coefficient vector in the order of [`Word::all`].
    pub fn to_vector(&self) -> Vec<T> {
        Word::all(self.degree).into_iter().map(|w| self.coeff(w)).collect()
    }

    pub fn from_vector(degree: usize, v: &[T]) -> Self {
        Form::from_terms(degree, Word::all(degree).into_iter().zip(v.iter().cloned()))
    }
}

impl<T: Ring> fmt::Display for Form<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (w, c)) in self.terms.iter().enumerate() {
            let s = c.to_string();
            let (neg, body) = match s.strip_prefix('-') {
                Some(rest) if !has_top_level_sign(rest) => (true, rest.to_string()),
                _ => (false, s),
            };
            if n == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            if self.degree == 0 {
                if has_top_level_sign(&body) {
                    write!(f, "({})", body)?;
                } else {
                    f.write_str(&body)?;
                }
                continue;
            }
            if body != "1" {
                if has_top_level_sign(&body) {
                    write!(f, "({})*", body)?;
                } else {
                    write!(f, "{}*", body)?;
                }
            }
            write!(f, "{}", w)?;
        }
        Ok(())
    }
}

impl<T: Ring> fmt::Debug for Form<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}", self.degree, self)
    }
}

/// Whether a coefficient string contains a `+`/`-` outside parentheses
/// (other than a leading sign or an exponent sign).
fn has_top_level_sign(s: &str) -> bool {
    let mut depth = 0i32;
    let b = s.as_bytes();
    for (i, &c) in b.iter().enumerate() {
        match c {
            b'(' => depth += 1,
            b')' => depth -= 1,
            b'+' | b'-' if depth == 0 && i > 0 && !matches!(b[i - 1], b'e' | b'E') => return true,
            _ => {}
        }
    }
    false
}

impl KForm {
    /// Parse a form; the degree is taken from the first basis word.
    pub fn parse(src: &str) -> Result<KForm, ExteriorError> {
        parse_form(src, None)
    }

    /// Parse a form of known degree (accepts `0`).
    pub fn parse_degree(src: &str, degree: usize) -> Result<KForm, ExteriorError> {
        parse_form(src, Some(degree))
    }

    /// Every coefficient is exact.
    pub fn is_exact(&self) -> bool {
        self.terms.values().all(Scalar::is_exact)
    }

    /// Zero, with float coefficients below `10^-digits` ignored.
    pub fn is_negligible(&self, digits: usize) -> bool {
        self.terms.values().all(|c| c.is_negligible(digits))
    }
}

fn parse_form(src: &str, degree: Option<usize>) -> Result<KForm, ExteriorError> {
    let mut c = Cursor::new(src);
    if let Some(k) = degree {
        let save = c.pos;
        if c.eat(b'0') && c.at_end() {
            return Ok(Form::zero(k));
        }
        c.pos = save;
    }
    let mut acc: Option<KForm> = None;
    let mut first = true;
    loop {
        let sign = if c.eat(b'-') {
            -1
        } else if c.eat(b'+') || first {
            1
        } else if c.at_end() || c.peek() == Some(b')') {
            break;
        } else {
            return Err(parse_err(&c, "expected '+' or '-'"));
        };
        first = false;
        let mut t = form_term(&mut c)?;
        if sign < 0 {
            t = t.neg();
        }
        acc = Some(match acc {
            None => t,
            Some(a) => {
                if a.degree != t.degree {
                    return Err(parse_err(&c, "terms of different degree"));
                }
                a.add(&t)
            }
        });
    }
    let form = acc.ok_or_else(|| parse_err(&c, "empty form"))?;
    if let Some(k) = degree {
        if form.degree != k {
            return Err(ExteriorError::DegreeMismatch { expected: k, found: form.degree });
        }
    }
    Ok(form)
}

fn parse_err(c: &Cursor<'_>, msg: &str) -> ExteriorError {
    ExteriorError::Parse { column: c.pos + 1, message: msg.to_string() }
}

/// `[scalar '*'] (basis | '(' form ')')`.
fn form_term(c: &mut Cursor<'_>) -> Result<KForm, ExteriorError> {
    if c.looking_at("e^") {
        return basis_word(c).map(KForm::basis);
    }
    let save = c.pos;
    let coef = match c.term() {
        Ok(s) => s,
        Err(e) => {
            c.pos = save;
            if c.eat(b'(') {
                let inner = form_group(c)?;
                return Ok(inner);
            }
            return Err(e.into());
        }
    };
    if !c.eat(b'*') {
        // A parenthesised scalar may have been a form group after all.
        c.pos = save;
        if c.eat(b'(') {
            return form_group(c);
        }
        return Err(parse_err(c, "expected '*' before a basis form"));
    }
    if c.looking_at("e^") {
        let w = basis_word(c)?;
        return Ok(KForm::term(coef, w));
    }
    if c.eat(b'(') {
        return Ok(form_group(c)?.scale(&coef));
    }
    Err(parse_err(c, "expected 'e^{' or '('"))
}

fn form_group(c: &mut Cursor<'_>) -> Result<KForm, ExteriorError> {
    let start = c.pos;
    let rest = remaining_group(c)?;
    let inner = parse_form(rest, None).map_err(|e| match e {
        ExteriorError::Parse { column, message } => {
            ExteriorError::Parse { column: column + start, message }
        }
        other => other,
    })?;
    c.pos = start + rest.len();
    c.expect(b')')?;
    Ok(inner)
}

/// Slice up to the matching close parenthesis (exclusive).
fn remaining_group<'a>(c: &Cursor<'a>) -> Result<&'a str, ExteriorError> {
    let s = c.source();
    let mut depth = 0i32;
    for (i, b) in s[c.pos..].bytes().enumerate() {
        match b {
            b'(' => depth += 1,
            b')' if depth == 0 => return Ok(&s[c.pos..c.pos + i]),
            b')' => depth -= 1,
            _ => {}
        }
    }
    Err(parse_err(c, "unbalanced parenthesis"))
}

/// `e^{i,j,k}` or `e^{ijk}`.
fn basis_word(c: &mut Cursor<'_>) -> Result<Word, ExteriorError> {
    if !c.eat_str("e^{") {
        return Err(parse_err(c, "expected 'e^{'"));
    }
    let mut ix = Vec::new();
    loop {
        let d = c.digits()?;
        if ix.is_empty() && c.peek() == Some(b'}') && d.len() > 1 {
            ix.extend(d.bytes().map(|b| (b - b'0') as usize));
        } else {
            ix.push(d.parse::<usize>().map_err(|_| parse_err(c, "bad index"))?);
        }
        if c.eat(b'}') {
            break;
        }
        c.expect(b',')?;
    }
    Word::from_indices(&ix).ok_or_else(|| parse_err(c, "indices must be strictly increasing within 1..6"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(s: &str) -> KForm {
        KForm::parse(s).unwrap()
    }

    fn word(ix: &[usize]) -> Word {
        Word::from_indices(ix).unwrap()
    }

    #[test]
    fn word_order_is_lexicographic() {
        let mut ws = vec![word(&[1, 3]), word(&[1, 2, 3]), word(&[2]), word(&[1, 2]), word(&[1])];
        ws.sort();
        assert_eq!(ws, vec![word(&[1]), word(&[1, 2]), word(&[1, 2, 3]), word(&[1, 3]), word(&[2])]);
        let all3 = Word::all(3);
        assert_eq!(all3.len(), 20);
        assert_eq!(all3[0], word(&[1, 2, 3]));
        assert_eq!(all3[1], word(&[1, 2, 4]));
        assert_eq!(all3[19], word(&[4, 5, 6]));
        let all2 = Word::all(2);
        assert_eq!(all2[4], word(&[1, 6]));
        assert_eq!(all2[5], word(&[2, 3]));
    }

    #[test]
    fn wedge_examples() {
        assert_eq!(f("e^{1}").wedge(&f("e^{2}")).unwrap(), f("e^{1,2}"));
        assert!(f("e^{1,2}").wedge(&f("e^{1,3}")).unwrap().is_zero());
        assert_eq!(f("e^{3,5}").wedge(&f("e^{1,4,6}")).unwrap(), f("-e^{1,3,4,5,6}"));
        assert!(matches!(
            f("e^{1,2,3}").wedge(&f("e^{1,2,3,4}")),
            Err(ExteriorError::DegreeOverflow(3, 4))
        ));
    }

    #[test]
    fn interior_examples() {
        assert_eq!(f("e^{1,2,3}").interior_basis(1).unwrap(), f("e^{2,3}"));
        assert_eq!(f("e^{1,2}").interior_basis(2).unwrap(), f("-e^{1}"));
        assert_eq!(KForm::volume().interior_basis(2).unwrap(), f("-e^{1,3,4,5,6}"));
        assert_eq!(KForm::constant(Scalar::one()).interior_basis(1), Err(ExteriorError::DegreeUnderflow));
    }

    #[test]
    fn five_form_examples() {
        let a = f("e^{2,3,4,5,6}").five_form_iso().unwrap();
        assert_eq!(a.vector[0], Scalar::one());
        assert!(a.vector[1..].iter().all(Scalar::is_zero));
        let b = f("2*e^{1,3,4,5,6}").five_form_iso().unwrap();
        assert_eq!(b.vector[1], Scalar::int(-2));
        assert_eq!(b.top, Scalar::one());
        let z = KForm::zero(5).five_form_iso().unwrap();
        assert!(z.vector.iter().all(Scalar::is_zero));
    }

    #[test]
    fn top_coefficient_examples() {
        let w = f("e^{1,2}+e^{3,4}+e^{5,6}");
        let w3 = w.w(&w).w(&w);
        assert_eq!(w3.top_coefficient().unwrap(), Scalar::int(6));
        assert_eq!(KForm::volume().top_coefficient().unwrap(), Scalar::one());
        assert_eq!(KForm::zero(6).top_coefficient().unwrap(), Scalar::zero());
    }

    #[test]
    fn parsing_and_display() {
        let a = f("1/2*e^{1,2} - e^{3,4}");
        assert_eq!(a.to_string(), "1/2*e^{1,2} - e^{3,4}");
        assert_eq!(f("e^{12}+e^{34}"), f("e^{1,2}+e^{3,4}"));
        let b = f("(1+sqrt(2))*e^{1,4} - sqrt(3)/2*e^{2,5}");
        assert_eq!(KForm::parse(&b.to_string()).unwrap(), b);
        let g = f("sqrt(2)*(e^{1,2,3} - e^{4,5,6})");
        assert_eq!(g, f("sqrt(2)*e^{1,2,3} - sqrt(2)*e^{4,5,6}"));
        let h = f("-(e^{1} + 2*e^{2})");
        assert_eq!(h, f("-e^{1} - 2*e^{2}"));
        assert!(KForm::parse("e^{2,1}").is_err());
        assert!(KForm::parse("e^{1,7}").is_err());
        assert!(KForm::parse("e^{1} + e^{1,2}").is_err());
        assert!(KForm::parse("3").is_err());
        assert_eq!(KForm::parse_degree("0", 3).unwrap(), KForm::zero(3));
    }

    #[test]
    fn pullback_identity_and_swap() {
        let a = f("e^{1,2,4}+2*e^{3,5,6}");
        let id: Matrix<Scalar> = Matrix::identity(6);
        assert_eq!(a.pullback(&id), a);
        assert_eq!(f("e^{1,2}").pullback(&id), f("e^{1,2}"));
        let mut swap = Matrix::zeros(6, 6);
        for (i, j) in [(0, 1), (1, 0), (2, 2), (3, 3), (4, 4), (5, 5)] {
            swap[(i, j)] = Scalar::one();
        }
        assert_eq!(f("e^{1,3}").pullback(&swap), f("e^{2,3}"));
        assert_eq!(f("e^{1,2}").pullback(&swap), f("-e^{1,2}"));
    }

    #[test]
    fn skew_matrix_entries() {
        let m = f("e^{1,2} - 3*e^{2,5}").skew_matrix();
        assert_eq!(m[(0, 1)], Scalar::one());
        assert_eq!(m[(1, 0)], Scalar::int(-1));
        assert_eq!(m[(4, 1)], Scalar::int(3));
    }
}
