//! Symbolic SU(3)-structure ansätze and the polynomial systems they induce.
//!
//! Coefficients of ω and ψ₊ are indeterminates; λ and the metric surrogate
//! `H̃ = −W·K` are then polynomials, and the structure conditions become
//! polynomial equations over ℚ.

mod pipeline;
mod split;

use std::collections::BTreeMap;
use std::fmt;

use dashu_ratio::RBig;
use su3_groebner::{Poly, Vars};
use thiserror::Error;

use crate::exterior::{ExteriorError, Form, SymForm, Word, DIM};
use crate::hitchin;
use crate::liealg::{Differential, LieAlgebra};
use crate::linalg::Matrix;

pub use split::{split_decide, SplitOutcome};
pub use pipeline::{
    coupled_su2su2_pipeline, nonexistence_pipeline, CaseReport, NonexistenceMode, Su2Su2Report,
};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SystemError {
    #[error("ansatz mode {mode} is not available on {algebra}")]
    ModeUnsupported { mode: String, algebra: String },
    #[error("structure constants of {0} are not rational; rationalize the algebra first")]
    Irrational(String),
    #[error(transparent)]
    Exterior(#[from] ExteriorError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AnsatzMode {
    /// Generic ω (15 unknowns `b`) and ψ₊ (20 unknowns `a`).
    Full,
    /// Generic ω with ψ₊ = c·dω; `keep_c` adds `c` as an unknown, otherwise c = 1.
    Coupled { keep_c: bool },
    /// su(2)⊕su(2) only: ω in the mixed part `a14 … a36`, ψ₊ = c·dω.
    RestrictedMixed { keep_c: bool },
}

impl fmt::Display for AnsatzMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnsatzMode::Full => f.write_str("full"),
            AnsatzMode::Coupled { keep_c: false } => f.write_str("coupled"),
            AnsatzMode::Coupled { keep_c: true } => f.write_str("coupled(c)"),
            AnsatzMode::RestrictedMixed { keep_c: false } => f.write_str("restricted_mixed"),
            AnsatzMode::RestrictedMixed { keep_c: true } => f.write_str("restricted_mixed(c)"),
        }
    }
}

/// A symbolic pair `(ω, ψ₊)` over a shared variable list.
#[derive(Debug, Clone)]
pub struct Ansatz {
    pub mode: AnsatzMode,
    pub vars: Vars,
    pub omega: SymForm,
    pub psi_plus: SymForm,
    d: Differential<Poly>,
}

fn poly_differential(g: &LieAlgebra, vars: &Vars) -> Result<Differential<Poly>, SystemError> {
    g.differential_over(|s| s.as_rational().map(|q| Poly::constant_in(vars, q)))
        .ok_or_else(|| SystemError::Irrational(g.name().to_string()))
}

fn word_name(w: Word) -> String {
    w.indices().map(|i| i.to_string()).collect()
}

/// Builds the symbolic ansatz of the given mode on `g` (which must have
/// rational structure constants).
pub fn generic_ansatz(g: &LieAlgebra, mode: AnsatzMode) -> Result<Ansatz, SystemError> {
    let words2 = Word::all(2);
    let words3 = Word::all(3);
    let mixed: Vec<Word> = words2
        .iter()
        .copied()
        .filter(|w| {
            let ix: Vec<usize> = w.indices().collect();
            ix[0] <= 3 && ix[1] >= 4
        })
        .collect();
    let (omega_words, omega_names): (Vec<Word>, Vec<String>) = match mode {
        AnsatzMode::RestrictedMixed { .. } => {
            if !g.name().starts_with("su2su2") {
                return Err(SystemError::ModeUnsupported {
                    mode: mode.to_string(),
                    algebra: g.name().to_string(),
                });
            }
            mixed.iter().map(|w| (*w, format!("a{}", word_name(*w)))).unzip()
        }
        _ => words2.iter().enumerate().map(|(k, w)| (*w, format!("b{}", k + 1))).unzip(),
    };
    let mut names = omega_names;
    let keep_c = matches!(mode, AnsatzMode::Coupled { keep_c: true } | AnsatzMode::RestrictedMixed { keep_c: true });
    if mode == AnsatzMode::Full {
        names.extend((1..=words3.len()).map(|k| format!("a{}", k)));
    }
    if keep_c {
        names.push("c".to_string());
    }
    let vars = Vars::new(names);
    let d = poly_differential(g, &vars)?;
    let omega = Form::from_terms(
        2,
        omega_words.iter().enumerate().map(|(k, w)| (*w, Poly::var(&vars, k))),
    );
    let psi_plus = match mode {
        AnsatzMode::Full => {
            let off = omega_words.len();
            Form::from_terms(3, words3.iter().enumerate().map(|(k, w)| (*w, Poly::var(&vars, off + k))))
        }
        _ => {
            let dw = d.apply(&omega)?;
            if keep_c {
                dw.scale(&Poly::var(&vars, vars.len() - 1))
            } else {
                dw
            }
        }
    };
    Ok(Ansatz { mode, vars, omega, psi_plus, d })
}

impl Ansatz {
    pub fn unknown_count(&self) -> usize {
        self.vars.len()
    }

    pub fn d(&self, a: &SymForm) -> Result<SymForm, ExteriorError> {
        self.d.apply(a)
    }

    /// Index of `c` when it is kept as an unknown.
    pub fn c_index(&self) -> Option<usize> {
        self.vars.index_of("c")
    }

    pub fn lambda(&self) -> Poly {
        symbolic_lambda(&self.psi_plus).with_vars(&self.vars)
    }

    pub fn h_tilde(&self) -> Matrix<Poly> {
        symbolic_h_tilde(&self.omega, &self.psi_plus).map(|p| p.clone().with_vars(&self.vars))
    }

    /// Top coefficient of ω³.
    pub fn omega_cubed(&self) -> Poly {
        let w = &self.omega;
        w.w(w).w(w).coeff(Word::TOP).with_vars(&self.vars)
    }
}

/// `λ(ψ₊) = tr(K²)/6` as a polynomial.
pub fn symbolic_lambda(psi: &SymForm) -> Poly {
    hitchin::lambda(psi).expect("3-form")
}

/// `H̃ = −W·K_{ψ₊}` as a matrix of polynomials.
pub fn symbolic_h_tilde(omega: &SymForm, psi: &SymForm) -> Matrix<Poly> {
    hitchin::h_tilde(omega, psi).expect("2-form and 3-form")
}

/// What the metric surrogate `H̃` is required to be proportional to.
#[derive(Debug, Clone, PartialEq)]
pub enum Target {
    None,
    /// `H = αI`; at the level of `H̃` the same as proportionality to I.
    Identity,
    ProportionalIdentity,
    Jensen,
    /// Off-diagonal entries vanish and the diagonal is constant.
    DiagEqual,
    /// Proportional to a fixed rational matrix.
    Proportional(Matrix<RBig>),
    /// Off-diagonal entries vanish; the diagonal is free.
    OffDiagonal,
}

impl Target {
    fn pattern(&self) -> Option<Matrix<RBig>> {
        match self {
            Target::Identity | Target::ProportionalIdentity | Target::DiagEqual => {
                Some(Matrix::identity(DIM))
            }
            // The Jensen matrix times √3: 2 on the diagonal, −1 at (i, i+3).
            Target::Jensen => Some(Matrix::from_fn(DIM, DIM, |i, j| {
                if i == j {
                    RBig::from(2)
                } else if i + 3 == j || j + 3 == i {
                    RBig::from(-1)
                } else {
                    RBig::ZERO
                }
            })),
            Target::Proportional(m) => Some(m.clone()),
            Target::None | Target::OffDiagonal => None,
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Target::None => f.write_str("none"),
            Target::Identity => f.write_str("identity"),
            Target::ProportionalIdentity => f.write_str("proportional_identity"),
            Target::Jensen => f.write_str("jensen"),
            Target::DiagEqual => f.write_str("diag_equal"),
            Target::Proportional(_) => f.write_str("proportional"),
            Target::OffDiagonal => f.write_str("off_diagonal"),
        }
    }
}

/// A named polynomial equation `poly = 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct Equation {
    pub name: String,
    pub poly: Poly,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Verdict {
    EmptyVariety,
    SolutionFamily(String),
    Inconclusive(String),
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::EmptyVariety => f.write_str("EmptyVariety"),
            Verdict::SolutionFamily(s) => write!(f, "SolutionFamily({})", s),
            Verdict::Inconclusive(s) => write!(f, "Inconclusive({})", s),
        }
    }
}

#[derive(Debug, Clone)]
pub struct SystemReport {
    pub algebra: String,
    pub mode: AnsatzMode,
    pub target: String,
    pub vars: Vars,
    pub equations: Vec<Equation>,
    pub verdict: Option<Verdict>,
    pub notes: Vec<String>,
}

impl SystemReport {
    pub fn unknown_count(&self) -> usize {
        self.vars.len()
    }

    /// Number of equations of each total degree.
    pub fn degree_histogram(&self) -> BTreeMap<u32, usize> {
        let mut h = BTreeMap::new();
        for e in &self.equations {
            *h.entry(e.poly.total_degree().unwrap_or(0)).or_insert(0) += 1;
        }
        h
    }

    /// Equations whose name starts with `prefix`.
    pub fn family(&self, prefix: &str) -> Vec<&Equation> {
        self.equations.iter().filter(|e| e.name.starts_with(prefix)).collect()
    }

    pub fn polys(&self) -> Vec<Poly> {
        self.equations.iter().map(|e| e.poly.clone()).collect()
    }

    /// Generators in the polynomial grammar, one per line.
    pub fn emit_ideal(&self) -> String {
        let mut s = format!("# vars: {}\n", self.vars.names().join(","));
        for e in &self.equations {
            s.push_str(&e.poly.to_string());
            s.push('\n');
        }
        s
    }
}

impl fmt::Display for SystemReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "algebra {}", self.algebra)?;
        writeln!(f, "ansatz {}", self.mode)?;
        writeln!(f, "target {}", self.target)?;
        writeln!(f, "unknowns {} ({})", self.unknown_count(), self.vars.names().join(","))?;
        let hist: Vec<String> =
            self.degree_histogram().iter().map(|(d, n)| format!("{}:{}", d, n)).collect();
        writeln!(f, "equations {} (degree:count {})", self.equations.len(), hist.join(" "))?;
        for e in &self.equations {
            writeln!(f, "eq {} := {}", e.name, e.poly)?;
        }
        for n in &self.notes {
            writeln!(f, "note {}", n)?;
        }
        if let Some(v) = &self.verdict {
            writeln!(f, "verdict {}", v)?;
        }
        Ok(())
    }
}

fn push_nonzero(out: &mut Vec<Equation>, name: String, poly: Poly) {
    if !poly.is_zero() {
        out.push(Equation { name, poly });
    }
}

/// Target equations on the upper triangle of `H̃`.
pub fn target_equations(h: &Matrix<Poly>, target: &Target) -> Vec<Equation> {
    let mut out = Vec::new();
    let entry = |i: usize, j: usize| format!("H{}{}", i + 1, j + 1);
    match target.pattern() {
        None => {
            if *target == Target::OffDiagonal {
                for i in 0..DIM {
                    for j in i + 1..DIM {
                        push_nonzero(&mut out, entry(i, j), h[(i, j)].clone());
                    }
                }
            }
        }
        Some(t) => {
            let mut support = Vec::new();
            for i in 0..DIM {
                for j in i..DIM {
                    if t[(i, j)].is_zero() {
                        if i != j {
                            push_nonzero(&mut out, entry(i, j), h[(i, j)].clone());
                        }
                    } else {
                        support.push((i, j));
                    }
                }
            }
            // Proportionality along the support: T[q]·H̃[p] − T[p]·H̃[q] = 0 for
            // consecutive supported entries p, q.
            for pair in support.windows(2) {
                let (p, q) = (pair[0], pair[1]);
                let poly = &h[p].scale(&t[q]) - &h[q].scale(&t[p]);
                let name = format!("{}~{}", entry(p.0, p.1), entry(q.0, q.1));
                push_nonzero(&mut out, name, poly.primitive());
            }
        }
    }
    out
}

/// The defining system of `ansatz` on its algebra: compatibility `β`
/// (ω∧ψ₊ = 0), closure of ψ₊, closure `γ` of ω², and the metric target.
pub fn build_system(algebra: &str, ansatz: &Ansatz, target: &Target) -> Result<SystemReport, SystemError> {
    let mut equations = Vec::new();
    let beta = ansatz.omega.wedge(&ansatz.psi_plus)?;
    for (w, p) in beta.terms() {
        push_nonzero(&mut equations, format!("beta{}", word_name(w)), p.clone().with_vars(&ansatz.vars));
    }
    let dpsi = ansatz.d(&ansatz.psi_plus)?;
    for (w, p) in dpsi.terms() {
        push_nonzero(&mut equations, format!("dpsi{}", word_name(w)), p.clone().with_vars(&ansatz.vars));
    }
    let omega2 = ansatz.omega.wedge(&ansatz.omega)?;
    let gamma = ansatz.d(&omega2)?;
    for (w, p) in gamma.terms() {
        push_nonzero(&mut equations, format!("gamma{}", word_name(w)), p.clone().with_vars(&ansatz.vars));
    }
    if *target != Target::None {
        equations.extend(target_equations(&ansatz.h_tilde(), target));
    }
    Ok(SystemReport {
        algebra: algebra.to_string(),
        mode: ansatz.mode,
        target: target.to_string(),
        vars: ansatz.vars.clone(),
        equations,
        verdict: None,
        notes: Vec::new(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exterior::KForm;
    use crate::liealg::catalog;
    use crate::scalar::Scalar;

    fn su2su2() -> LieAlgebra {
        catalog("su2su2", &[]).unwrap()
    }

    #[test]
    fn unknown_counts() {
        let g = su2su2();
        assert_eq!(generic_ansatz(&g, AnsatzMode::Full).unwrap().unknown_count(), 35);
        assert_eq!(generic_ansatz(&g, AnsatzMode::Coupled { keep_c: false }).unwrap().unknown_count(), 15);
        assert_eq!(generic_ansatz(&g, AnsatzMode::Coupled { keep_c: true }).unwrap().unknown_count(), 16);
        assert_eq!(generic_ansatz(&g, AnsatzMode::RestrictedMixed { keep_c: false }).unwrap().unknown_count(), 9);
        let s9 = catalog("s9", &[]).unwrap();
        assert!(matches!(
            generic_ansatz(&s9, AnsatzMode::RestrictedMixed { keep_c: false }),
            Err(SystemError::ModeUnsupported { .. })
        ));
    }

    #[test]
    fn restricted_psi_has_eighteen_terms() {
        let a = generic_ansatz(&su2su2(), AnsatzMode::RestrictedMixed { keep_c: true }).unwrap();
        assert_eq!(a.psi_plus.len(), 18);
        let lam = a.lambda();
        assert!(lam.is_homogeneous());
        assert_eq!(lam.total_degree(), Some(8));
    }

    #[test]
    fn zero_psi_gives_zero_lambda_and_metric() {
        let z: SymForm = Form::zero(3);
        assert!(symbolic_lambda(&z).is_zero());
        let w: SymForm = Form::zero(2);
        assert!(symbolic_h_tilde(&w, &z).is_zero());
    }

    #[test]
    fn specialization_matches_numeric_metric() {
        // Evaluate the full ansatz at a rational point and compare with the
        // numeric construction.
        let g = su2su2();
        let a = generic_ansatz(&g, AnsatzMode::Full).unwrap();
        let point: Vec<RBig> = (0..35).map(|k| RBig::from(((k * 7 + 3) % 11) as i64 - 5)).collect();
        let ev = |p: &Poly| Scalar::from_rational(p.eval(&point));
        let omega: KForm = a.omega.map(ev);
        let psi: KForm = a.psi_plus.map(ev);
        let h = hitchin::h_tilde(&omega, &psi).unwrap();
        let hs = a.h_tilde().map(ev);
        assert_eq!(h, hs);
        assert_eq!(hitchin::lambda(&psi).unwrap(), ev(&a.lambda()));
    }

    #[test]
    fn coupled_system_identities() {
        let g = catalog("s13", &[]).unwrap().rationalize().unwrap().algebra;
        let a = generic_ansatz(&g, AnsatzMode::Coupled { keep_c: false }).unwrap();
        let r = build_system("s13", &a, &Target::None).unwrap();
        assert!(r.family("dpsi").is_empty());
        let beta = r.family("beta");
        let gamma = r.family("gamma");
        assert_eq!(beta.len(), gamma.len());
        for (b, c) in beta.iter().zip(&gamma) {
            assert_eq!(b.name[4..], c.name[5..]);
            assert_eq!(b.poly.scale(&RBig::from(2)), c.poly);
        }
    }

    #[test]
    fn full_system_degrees() {
        let g = catalog("s6", &[]).unwrap().rationalize().unwrap().algebra;
        let a = generic_ansatz(&g, AnsatzMode::Full).unwrap();
        let r = build_system("s6", &a, &Target::None).unwrap();
        assert_eq!(r.unknown_count(), 35);
        let nb = a.vars.len() - 20;
        for e in r.family("beta") {
            assert!(e.poly.is_homogeneous() && e.poly.total_degree() == Some(2));
        }
        for e in r.family("gamma") {
            assert!(e.poly.is_homogeneous() && e.poly.total_degree() == Some(2));
            assert!(e.poly.support().iter().all(|&v| v < nb));
        }
        assert!(!r.family("dpsi").is_empty());
    }
}
