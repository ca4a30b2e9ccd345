//! Rational presentations of algebras with surd structure constants.
//!
//! Rescaling `f^i = μ_i e^i` turns `c·e^{jk}` in `de^i` into
//! `μ_i c/(μ_j μ_k)·f^{jk}` in `df^i`. With `μ_i = √m_i` and every `c` a
//! single term `q√d`, rationality is a linear condition on the square
//! classes of `m_i` over GF(2), one equation per structure constant.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::exterior::{KForm, DIM};
use crate::linalg::Matrix;
use crate::scalar::{prime_factors, Scalar};

use super::LieAlgebra;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RationalizeError {
    #[error("coefficient {0} is not exact")]
    Inexact(String),
    #[error("coefficient {0} has more than one radical term")]
    MultiTerm(String),
    #[error("radicand {0} could not be factored")]
    Unfactorable(u64),
    #[error("no diagonal rescaling clears the radicals")]
    NoSolution,
}

/// An algebra in the basis `f^i = μ_i e^i` where all structure constants are rational.
#[derive(Clone, Debug)]
pub struct Rationalized {
    pub algebra: LieAlgebra,
    /// `μ_i`, with `f^i = μ_i e^i`.
    pub scales: Vec<Scalar>,
}

impl Rationalized {
    /// Rewrites a form given in the `e` basis in terms of the `f` basis.
    pub fn to_new_basis(&self, a: &KForm) -> KForm {
        let m = Matrix::from_fn(DIM, DIM, |i, j| {
            if i == j {
                self.scales[i].inv().expect("nonzero scale")
            } else {
                Scalar::zero()
            }
        });
        a.pullback(&m)
    }

    /// Matrix of `h = Σ (e^i)²` in the `f` basis: `diag(1/μ_i²)`.
    pub fn standard_metric(&self) -> Matrix<Scalar> {
        Matrix::from_fn(DIM, DIM, |i, j| {
            if i == j {
                (&self.scales[i] * &self.scales[i]).inv().expect("nonzero scale")
            } else {
                Scalar::zero()
            }
        })
    }
}

impl LieAlgebra {
    /// All structure constants rational?
    pub fn is_rational(&self) -> bool {
        (1..=DIM).all(|i| self.de(i).terms().all(|(_, c)| c.as_rational().is_some()))
    }

    /// Finds a diagonal rescaling with rational structure constants.
    pub fn rationalize(&self) -> Result<Rationalized, RationalizeError> {
        // (unknown mask over μ_1..μ_6, radicand prime set)
        let mut rows: Vec<(u8, BTreeSet<u64>)> = Vec::new();
        for i in 1..=DIM {
            for (w, c) in self.de(i).terms() {
                let s = c.as_surd().ok_or_else(|| RationalizeError::Inexact(c.to_string()))?;
                let terms: Vec<(u64, _)> = s.terms().collect();
                if terms.len() != 1 {
                    return Err(RationalizeError::MultiTerm(c.to_string()));
                }
                let d = terms[0].0;
                let primes = prime_factors(d).ok_or(RationalizeError::Unfactorable(d))?;
                let mut mask = 1u8 << (i - 1);
                for j in w.indices() {
                    mask ^= 1 << (j - 1);
                }
                rows.push((mask, primes.into_iter().collect()));
            }
        }
        let classes = solve_gf2(rows).ok_or(RationalizeError::NoSolution)?;
        let scales: Vec<Scalar> = classes
            .iter()
            .map(|ps| Scalar::sqrt_int(ps.iter().product::<u64>()))
            .collect();
        let mut de = Vec::with_capacity(DIM);
        for i in 1..=DIM {
            let mut f = KForm::zero(2);
            for (w, c) in self.de(i).terms() {
                let ix: Vec<usize> = w.indices().collect();
                let den = &scales[ix[0] - 1] * &scales[ix[1] - 1];
                let v = (&scales[i - 1] * c).checked_div(&den).expect("nonzero");
                debug_assert!(v.as_rational().is_some());
                f.add_term(w, v);
            }
            de.push(f);
        }
        let algebra = LieAlgebra::new(format!("{}(rational)", self.name()), de)
            .expect("rescaling preserves Jacobi")
            .with_params(self.params().to_vec());
        Ok(Rationalized { algebra, scales })
    }
}

/// Solves `Σ_{i∈mask} x_i = rhs` over GF(2)^primes; free unknowns set to 0.
fn solve_gf2(mut rows: Vec<(u8, BTreeSet<u64>)>) -> Option<Vec<BTreeSet<u64>>> {
    let mut pivots: Vec<(usize, usize)> = Vec::new(); // (row, column)
    let mut r = 0;
    for col in 0..DIM {
        let bit = 1u8 << col;
        let Some(p) = (r..rows.len()).find(|&k| rows[k].0 & bit != 0) else { continue };
        rows.swap(r, p);
        let (pm, prhs) = rows[r].clone();
        for (k, row) in rows.iter_mut().enumerate() {
            if k != r && row.0 & bit != 0 {
                row.0 ^= pm;
                row.1 = row.1.symmetric_difference(&prhs).copied().collect();
            }
        }
        pivots.push((r, col));
        r += 1;
    }
    if rows[r..].iter().any(|(m, rhs)| *m == 0 && !rhs.is_empty()) {
        return None;
    }
    let mut x = vec![BTreeSet::new(); DIM];
    for (row, col) in pivots {
        x[col] = rows[row].1.clone();
    }
    Some(x)
}
