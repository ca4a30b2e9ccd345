//! Six-dimensional Lie algebras given by their Chevalley–Eilenberg
//! differentials `de^1, …, de^6`.

mod catalog;
mod rational;
mod ricci;

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::exterior::{ExteriorError, Form, KForm, Word, DIM};
use crate::linalg::Matrix;
use crate::ring::Ring;
use crate::scalar::Scalar;

pub use catalog::{catalog, catalog_entries, parse_algebra_spec, CatalogEntry};
pub use rational::{Rationalized, RationalizeError};
pub use ricci::{einstein_check, jensen_matrix, ricci};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LieError {
    #[error("unknown algebra '{0}'")]
    UnknownName(String),
    #[error("unknown parameter '{param}' for {algebra}")]
    UnknownParam { algebra: String, param: String },
    #[error("parameter out of range for {algebra}: {detail}")]
    ParamOutOfRange { algebra: String, detail: String },
    #[error("{0}: d² ≠ 0 (Jacobi identity fails)")]
    Jacobi(String),
    #[error("de^{index} must be a 2-form")]
    NotTwoForm { index: usize },
    #[error("metric matrix is singular")]
    SingularMetric,
    #[error("coefficients are not exact; an exact presentation is required")]
    InexactScalars,
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Exterior(#[from] ExteriorError),
}

/// The differential on Λ*(V*) determined by `de^1, …, de^6`, with `d(e^w)`
/// tabulated for every basis word.
#[derive(Clone, Debug)]
pub struct Differential<T: Ring> {
    de: Vec<Form<T>>,
    table: Vec<Form<T>>,
}

impl<T: Ring> Differential<T> {
    pub fn new(de: Vec<Form<T>>) -> Self {
        assert_eq!(de.len(), DIM);
        let mut table = Vec::with_capacity(64);
        for bits in 0u8..64 {
            let w = Word::from_bits(bits);
            let mut out = Form::zero(w.len() + 1);
            let ix: Vec<usize> = w.indices().collect();
            for (m, &i) in ix.iter().enumerate() {
                let mut t = Form::constant(if m % 2 == 0 { T::one() } else { T::one().negated() });
                for &j in &ix[..m] {
                    t = t.w(&Form::e(j));
                }
                if w.len() < DIM {
                    t = t.w(&de[i - 1]);
                    for &j in &ix[m + 1..] {
                        t = t.w(&Form::e(j));
                    }
                    out = out.add(&t);
                }
            }
            table.push(out);
        }
        Differential { de, table }
    }

    pub fn de(&self, i: usize) -> &Form<T> {
        &self.de[i - 1]
    }

    /// `d(e^w)`.
    pub fn on_word(&self, w: Word) -> &Form<T> {
        &self.table[w.bits() as usize]
    }

    pub fn apply(&self, a: &Form<T>) -> Result<Form<T>, ExteriorError> {
        if a.degree() > DIM {
            return Err(ExteriorError::DegreeOverflow(a.degree(), 1));
        }
        let mut out = Form::zero(a.degree() + 1);
        for (w, c) in a.terms() {
            let dw = self.on_word(w);
            if dw.is_zero() {
                continue;
            }
            out = out.add(&dw.scale(c));
        }
        Ok(out)
    }
}

#[derive(Clone)]
pub struct LieAlgebra {
    name: String,
    params: Vec<(String, Scalar)>,
    d: Arc<Differential<Scalar>>,
}

impl LieAlgebra {
    /// Builds an algebra, rejecting it unless `d² = 0`.
    pub fn new(name: impl Into<String>, de: Vec<KForm>) -> Result<Self, LieError> {
        let alg = LieAlgebra::unchecked(name, de)?;
        if !alg.check_jacobi() {
            return Err(LieError::Jacobi(alg.name));
        }
        Ok(alg)
    }

    /// Builds an algebra without the Jacobi check (for testing bad data).
    pub fn unchecked(name: impl Into<String>, de: Vec<KForm>) -> Result<Self, LieError> {
        assert_eq!(de.len(), DIM, "need six differentials");
        for (i, f) in de.iter().enumerate() {
            if f.degree() != 2 {
                return Err(LieError::NotTwoForm { index: i + 1 });
            }
        }
        Ok(LieAlgebra { name: name.into(), params: Vec::new(), d: Arc::new(Differential::new(de)) })
    }

    pub fn abelian() -> Self {
        LieAlgebra::new("abelian", vec![KForm::zero(2); DIM]).expect("abelian")
    }

    pub fn with_params(mut self, params: Vec<(String, Scalar)>) -> Self {
        self.params = params;
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn params(&self) -> &[(String, Scalar)] {
        &self.params
    }

    /// `de^i` for 1-based `i`.
    pub fn de(&self, i: usize) -> &KForm {
        self.d.de(i)
    }

    pub fn differentials(&self) -> Vec<KForm> {
        (1..=DIM).map(|i| self.de(i).clone()).collect()
    }

    pub fn differential(&self) -> &Differential<Scalar> {
        &self.d
    }

    pub fn d(&self, a: &KForm) -> Result<KForm, ExteriorError> {
        self.d.apply(a)
    }

    /// The same differential with coefficients mapped into another ring.
    pub fn differential_over<T: Ring>(
        &self,
        f: impl Fn(&Scalar) -> Option<T>,
    ) -> Option<Differential<T>> {
        let mut de = Vec::with_capacity(DIM);
        for i in 1..=DIM {
            let mut g = Form::zero(2);
            for (w, c) in self.de(i).terms() {
                g.add_term(w, f(c)?);
            }
            de.push(g);
        }
        Some(Differential::new(de))
    }

    pub fn is_exact(&self) -> bool {
        (1..=DIM).all(|i| self.de(i).is_exact())
    }

    /// `d(de^i) = 0` for every i; floats are compared at the 10⁻⁴⁰ threshold.
    pub fn check_jacobi(&self) -> bool {
        (1..=DIM).all(|i| self.d(self.de(i)).map(|f| f.is_zero()).unwrap_or(false))
    }

    /// Largest |coefficient| of `d(de^i)` over all i (zero for exact algebras).
    pub fn jacobi_residual(&self) -> f64 {
        let mut worst = 0f64;
        for i in 1..=DIM {
            let dd = self.d(self.de(i)).expect("degree 3");
            for (_, c) in dd.terms() {
                worst = worst.max(c.to_f64().abs());
            }
        }
        worst
    }

    /// Matrix of `d: Λ^k → Λ^{k+1}` in the bases of [`Word::all`].
    pub fn d_matrix(&self, k: usize) -> Matrix<Scalar> {
        let src = Word::all(k);
        let dst = Word::all(k + 1);
        let mut m = Matrix::zeros(dst.len(), src.len());
        for (j, w) in src.iter().enumerate() {
            for (u, c) in self.d.on_word(*w).terms() {
                let i = dst.iter().position(|x| *x == u).expect("word of degree k+1");
                m[(i, j)] = c.clone();
            }
        }
        m
    }

    /// A basis of the closed k-forms.
    pub fn closed_forms(&self, k: usize) -> Vec<KForm> {
        assert!(k <= DIM);
        if k == DIM {
            return vec![KForm::volume()];
        }
        self.d_matrix(k).kernel().iter().map(|v| KForm::from_vector(k, v)).collect()
    }

    /// Parses the text format:
    ///
    /// ```text
    /// algebra <name>
    /// dim 6
    /// de1 = <form>
    /// ```
    pub fn parse(src: &str) -> Result<Self, LieError> {
        let mut name = None;
        let mut dim_seen = false;
        let mut de = vec![KForm::zero(2); DIM];
        for (n, raw) in src.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |message: String| LieError::Parse { line: n + 1, message };
            if let Some(rest) = line.strip_prefix("algebra") {
                name = Some(rest.trim().to_string());
            } else if let Some(rest) = line.strip_prefix("dim") {
                if rest.trim() != "6" {
                    return Err(err(format!("unsupported dimension '{}'", rest.trim())));
                }
                dim_seen = true;
            } else if let Some(rest) = line.strip_prefix("de") {
                let (lhs, rhs) = rest.split_once('=').ok_or_else(|| err("expected '='".into()))?;
                let i: usize = lhs.trim().parse().map_err(|_| err(format!("bad index '{}'", lhs.trim())))?;
                if !(1..=DIM).contains(&i) {
                    return Err(err(format!("index {} out of range", i)));
                }
                de[i - 1] = KForm::parse_degree(rhs.trim(), 2).map_err(|e| err(e.to_string()))?;
            } else {
                return Err(err(format!("unrecognized line '{}'", line)));
            }
        }
        let name = name.ok_or(LieError::Parse { line: 1, message: "missing 'algebra <name>'".into() })?;
        if !dim_seen {
            return Err(LieError::Parse { line: 2, message: "missing 'dim 6'".into() });
        }
        LieAlgebra::new(name, de)
    }
}

impl fmt::Display for LieAlgebra {
    /// Writes the text format accepted by [`LieAlgebra::parse`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "algebra {}", self.name)?;
        writeln!(f, "dim 6")?;
        for i in 1..=DIM {
            if !self.de(i).is_zero() {
                writeln!(f, "de{} = {}", i, self.de(i))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
