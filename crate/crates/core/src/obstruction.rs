//! A covector obstruction to half-flat structures.
//!
//! For a 3-form ρ and a 1-form α, `J̃*_ρα` is the 1-form with
//! `J̃*_ρα(X)·e^{123456} = α∧(i_Xρ)∧ρ`. If some α makes `α∧J̃*_ρα∧σ` vanish for
//! every closed 3-form ρ and every closed 4-form σ, the algebra carries no
//! half-flat structure. The test here expands that expression over symbolic
//! bases of the closed forms and checks the coefficients, so a positive answer
//! is exact.

use std::fmt;

use su3_groebner::{Mono, Poly, Vars};
use thiserror::Error;

use crate::exterior::{ExteriorError, Form, KForm, SymForm, DIM};
use crate::liealg::LieAlgebra;
use crate::ring::Ring;
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ObstructionError {
    #[error("{0} has inexact or irrational structure constants; pass a rationalized presentation")]
    InexactScalars(String),
    #[error("alpha must be a nonzero 1-form with rational coefficients, got {0}")]
    BadAlpha(String),
    #[error(transparent)]
    Exterior(#[from] ExteriorError),
}

/// `X ↦ top(α∧(i_Xρ)∧ρ)` on the basis vectors, as a 1-form.
pub fn jtilde_pullback<T: Ring>(rho: &Form<T>, alpha: &Form<T>) -> Result<Form<T>, ExteriorError> {
    if rho.degree() != 3 {
        return Err(ExteriorError::DegreeMismatch { expected: 3, found: rho.degree() });
    }
    if alpha.degree() != 1 {
        return Err(ExteriorError::DegreeMismatch { expected: 1, found: alpha.degree() });
    }
    let mut out = Form::zero(1);
    for j in 1..=DIM {
        let five = alpha.wedge(&rho.interior_basis(j)?)?.wedge(rho)?;
        out.add_term(crate::exterior::Word::single(j), five.top_coefficient()?);
    }
    Ok(out)
}

/// `top(α∧J̃*_ρα∧σ)`.
fn pairing<T: Ring>(rho: &Form<T>, sigma: &Form<T>, alpha: &Form<T>) -> Result<T, ExteriorError> {
    let ja = jtilde_pullback(rho, alpha)?;
    alpha.wedge(&ja)?.wedge(sigma)?.top_coefficient()
}

#[derive(Debug, Clone)]
pub enum Witness {
    /// The full expansion, identically zero.
    Identity { expansion: Poly, rho_dim: usize, sigma_dim: usize },
    /// Closed forms with `top(α∧J̃*_ρα∧σ) = value ≠ 0`.
    Counterexample { rho: KForm, sigma: KForm, value: Scalar },
}

#[derive(Debug, Clone)]
pub struct ObstructionReport {
    pub algebra: String,
    pub alpha: KForm,
    pub obstructed: bool,
    pub witness: Witness,
}

impl fmt::Display for ObstructionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "algebra {}", self.algebra)?;
        writeln!(f, "alpha {}", self.alpha)?;
        writeln!(f, "obstructed {}", self.obstructed)?;
        match &self.witness {
            Witness::Identity { expansion, rho_dim, sigma_dim } => {
                writeln!(f, "closed 3-forms {}, closed 4-forms {}", rho_dim, sigma_dim)?;
                writeln!(f, "expansion := {}", expansion)
            }
            Witness::Counterexample { rho, sigma, value } => {
                writeln!(f, "rho {}", rho)?;
                writeln!(f, "sigma {}", sigma)?;
                writeln!(f, "value {}", value)
            }
        }
    }
}

/// Closed-form bases of an algebra, computed once per scan.
struct Bases {
    name: String,
    rho: Vec<KForm>,
    sigma: Vec<KForm>,
    vars: Vars,
    rho_sym: SymForm,
    sigma_sym: SymForm,
}

fn symbolic(vars: &Vars, basis: &[KForm], offset: usize, degree: usize) -> SymForm {
    let mut out = Form::zero(degree);
    for (k, b) in basis.iter().enumerate() {
        let x = Poly::var(vars, offset + k);
        let term = b.map(|c| Poly::constant_in(vars, c.as_rational().expect("rational basis")));
        out = out.add(&term.scale(&x));
    }
    out
}

impl Bases {
    fn new(g: &LieAlgebra) -> Result<Self, ObstructionError> {
        if !g.is_rational() {
            return Err(ObstructionError::InexactScalars(g.name().to_string()));
        }
        let rho = g.closed_forms(3);
        let sigma = g.closed_forms(4);
        let names = (1..=rho.len()).map(|i| format!("r{}", i)).chain((1..=sigma.len()).map(|i| format!("s{}", i)));
        let vars = Vars::new(names);
        let rho_sym = symbolic(&vars, &rho, 0, 3);
        let sigma_sym = symbolic(&vars, &sigma, rho.len(), 4);
        Ok(Bases { name: g.name().to_string(), rho, sigma, vars, rho_sym, sigma_sym })
    }

    fn test(&self, alpha: &KForm) -> Result<ObstructionReport, ObstructionError> {
        let bad = || ObstructionError::BadAlpha(alpha.to_string());
        if alpha.degree() != 1 || alpha.is_zero() {
            return Err(bad());
        }
        let mut alpha_sym = Form::zero(1);
        for (w, c) in alpha.terms() {
            alpha_sym.add_term(w, Poly::constant_in(&self.vars, c.as_rational().ok_or_else(bad)?));
        }
        let expansion = pairing(&self.rho_sym, &self.sigma_sym, &alpha_sym)?;
        let (obstructed, witness) = if expansion.is_zero() {
            let witness = Witness::Identity { expansion, rho_dim: self.rho.len(), sigma_dim: self.sigma.len() };
            (true, witness)
        } else {
            (false, self.counterexample(&expansion, alpha)?)
        };
        Ok(ObstructionReport { algebra: self.name.clone(), alpha: alpha.clone(), obstructed, witness })
    }

    /// Reads a nonzero term `r_a r_b s_k` off the expansion and evaluates the
    /// pairing on the corresponding basis forms.
    fn counterexample(&self, expansion: &Poly, alpha: &KForm) -> Result<Witness, ObstructionError> {
        let nr = self.rho.len();
        let (mono, _) = expansion.terms().next().expect("nonzero expansion");
        let (rho_ix, sigma_ix) = split_mono(mono, nr);
        let sigma = self.sigma[sigma_ix[0]].clone();
        let (a, b) = (rho_ix[0], *rho_ix.last().expect("quadratic in rho"));
        let candidates = [
            self.rho[a].clone(),
            self.rho[b].clone(),
            self.rho[a].add(&self.rho[b]),
        ];
        for rho in candidates {
            let value = pairing(&rho, &sigma, alpha)?;
            if !value.is_zero() && value.to_f64() != 0.0 {
                return Ok(Witness::Counterexample { rho, sigma, value });
            }
        }
        unreachable!("a nonzero binary quadratic form is nonzero at (1,0), (0,1) or (1,1)")
    }
}

fn split_mono(m: &Mono, nr: usize) -> (Vec<usize>, Vec<usize>) {
    let mut rho = Vec::new();
    let mut sigma = Vec::new();
    for (v, e) in m.factors() {
        for _ in 0..e {
            if v < nr {
                rho.push(v);
            } else {
                sigma.push(v - nr);
            }
        }
    }
    (rho, sigma)
}

/// Decides whether `alpha` obstructs half-flat structures on `g`.
pub fn obstruction_test(g: &LieAlgebra, alpha: &KForm) -> Result<ObstructionReport, ObstructionError> {
    Bases::new(g)?.test(alpha)
}

/// `e^i` and `e^i ± e^j`.
pub fn default_candidates() -> Vec<KForm> {
    let mut out: Vec<KForm> = (1..=DIM).map(KForm::e).collect();
    for i in 1..=DIM {
        for j in i + 1..=DIM {
            out.push(KForm::e(i).add(&KForm::e(j)));
            out.push(KForm::e(i).sub(&KForm::e(j)));
        }
    }
    out
}

/// First obstructing candidate, if any.
pub fn obstruction_scan(
    g: &LieAlgebra,
    candidates: Option<&[KForm]>,
) -> Result<Option<ObstructionReport>, ObstructionError> {
    let bases = Bases::new(g)?;
    let defaults;
    let list = match candidates {
        Some(c) => c,
        None => {
            defaults = default_candidates();
            &defaults
        }
    };
    for alpha in list {
        let report = bases.test(alpha)?;
        if report.obstructed {
            return Ok(Some(report));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hitchin::k_endo;
    use crate::liealg::catalog;

    fn f(s: &str) -> KForm {
        KForm::parse(s).unwrap()
    }

    const FLAT: &str = "e^{1,3,5}-e^{1,4,6}-e^{2,3,6}-e^{2,4,5}";

    #[test]
    fn matches_transpose_of_k() {
        let rho = f(FLAT);
        let k = k_endo(&rho).unwrap();
        for i in 1..=DIM {
            let ja = jtilde_pullback(&rho, &KForm::e(i)).unwrap();
            for j in 1..=DIM {
                assert_eq!(ja.coeff(crate::exterior::Word::single(j)), k[(i - 1, j - 1)]);
            }
        }
        let e1 = jtilde_pullback(&rho, &KForm::e(1)).unwrap();
        assert_eq!(e1.len(), 1);
        assert!(!e1.coeff(crate::exterior::Word::single(2)).is_zero());
    }

    #[test]
    fn zero_and_scaling() {
        let rho = f(FLAT);
        let a = f("e^{1} - 2*e^{4}");
        assert!(jtilde_pullback(&KForm::zero(3), &a).unwrap().is_zero());
        let two = rho.scale(&Scalar::int(2));
        assert_eq!(
            jtilde_pullback(&two, &a).unwrap(),
            jtilde_pullback(&rho, &a).unwrap().scale(&Scalar::int(4))
        );
    }

    #[test]
    fn abelian_has_counterexamples() {
        let g = catalog("abelian", &[]).unwrap();
        for alpha in default_candidates().iter().take(8) {
            let r = obstruction_test(&g, alpha).unwrap();
            assert!(!r.obstructed);
            let Witness::Counterexample { rho, sigma, value } = r.witness else { panic!() };
            assert!(g.d(&rho).unwrap().is_zero() && g.d(&sigma).unwrap().is_zero());
            assert!(!value.is_zero());
        }
    }

    #[test]
    fn irrational_algebra_is_refused() {
        let g = catalog("s1", &[]).unwrap();
        assert!(matches!(obstruction_test(&g, &KForm::e(6)), Err(ObstructionError::InexactScalars(_))));
    }

    #[test]
    fn bad_alpha() {
        let g = catalog("abelian", &[]).unwrap();
        assert!(matches!(obstruction_test(&g, &KForm::zero(1)), Err(ObstructionError::BadAlpha(_))));
        assert!(obstruction_test(&g, &f("e^{1,2}")).is_err());
    }
}
