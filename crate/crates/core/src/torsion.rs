//! Intrinsic torsion of half-flat structures on a Lie algebra:
//! `dω = −(3/2)w₁ψ₊ + w₃` and `dψ₋ = w₁ω² − w₂∧ω`.

use std::fmt;

use thiserror::Error;

use crate::exterior::{ExteriorError, KForm, Word};
use crate::hitchin::{HitchinError, SU3Structure, CLASSIFY_DIGITS};
use crate::liealg::LieAlgebra;
use crate::linalg::Matrix;
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum TorsionError {
    #[error("structure is not usable: {0}")]
    Structure(#[from] HitchinError),
    #[error("w1 extractions disagree: {primary} from dψ₋∧ω, {cross} from dω∧ψ₋")]
    InconsistentTorsion { primary: Scalar, cross: Scalar },
    #[error(transparent)]
    Exterior(#[from] ExteriorError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TorsionClass {
    TorsionFree,
    NearlyKahler,
    Coupled,
    Double,
    HalfFlatGeneric,
    NotHalfFlat,
}

impl fmt::Display for TorsionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            TorsionClass::TorsionFree => "TorsionFree",
            TorsionClass::NearlyKahler => "NearlyKahler",
            TorsionClass::Coupled => "Coupled",
            TorsionClass::Double => "Double",
            TorsionClass::HalfFlatGeneric => "HalfFlatGeneric",
            TorsionClass::NotHalfFlat => "NotHalfFlat",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone)]
pub struct TorsionData {
    pub w1: Scalar,
    pub w2: KForm,
    pub w3: KForm,
    pub class: TorsionClass,
    /// `c` with `dω = c·ψ₊`.
    pub coupled_constant: Option<Scalar>,
    /// `k` with `dψ₋ = k·ω²`.
    pub double_constant: Option<Scalar>,
    pub quasi_kahler: bool,
    pub d_omega: KForm,
    pub d_psi_minus: KForm,
}

fn negligible(f: &KForm) -> bool {
    f.is_negligible(CLASSIFY_DIGITS)
}

/// `dψ₊ = 0` and `d(ω²) = 0`.
pub fn is_half_flat(g: &LieAlgebra, s: &SU3Structure) -> Result<bool, ExteriorError> {
    Ok(negligible(&g.d(s.psi_plus())?) && negligible(&g.d(&s.omega().w(s.omega()))?))
}

fn top(f: &KForm) -> Scalar {
    f.coeff(Word::TOP)
}

/// Solves `x ∧ ω = rhs` for a 2-form `x` (∧ω is invertible on Λ²).
fn divide_by_omega(rhs: &KForm, omega: &KForm) -> Option<KForm> {
    let src = Word::all(2);
    let dst = Word::all(4);
    let mut m = Matrix::zeros(dst.len(), src.len());
    for (j, w) in src.iter().enumerate() {
        let col = KForm::basis(*w).w(omega);
        for (u, c) in col.terms() {
            let i = dst.iter().position(|x| *x == u).expect("4-word");
            m[(i, j)] = c.clone();
        }
    }
    let b: Vec<Scalar> = dst.iter().map(|w| rhs.coeff(*w)).collect();
    m.solve(&b).map(|x| KForm::from_vector(2, &x))
}

/// Extracts `w₁, w₂, w₃` (the structure should be half-flat and normalized).
pub fn torsion_forms(g: &LieAlgebra, s: &SU3Structure) -> Result<TorsionData, TorsionError> {
    let omega = s.omega();
    let psi = s.psi_plus();
    let pm = s.psi_minus()?.clone();
    let w3top = s.omega_cubed();
    if w3top.is_negligible(CLASSIFY_DIGITS) {
        return Err(HitchinError::Degenerate2Form.into());
    }
    let d_omega = g.d(omega)?;
    let d_pm = g.d(&pm)?;
    let inv = w3top.inv().expect("nonzero");
    let w1 = &top(&d_pm.w(omega)) * &inv;
    let cross = -(&top(&d_omega.w(&pm)) * &inv);
    let half_flat = is_half_flat(g, s)?;
    if half_flat && !(&w1 - &cross).is_negligible(CLASSIFY_DIGITS) {
        return Err(TorsionError::InconsistentTorsion { primary: w1, cross });
    }
    let w3 = d_omega.add(&psi.scale(&(&Scalar::ratio(3, 2) * &w1)));
    let omega2 = omega.w(omega);
    let rhs = omega2.scale(&w1).sub(&d_pm);
    let w2 = divide_by_omega(&rhs, omega).ok_or(HitchinError::Degenerate2Form)?;

    let w1_zero = w1.is_negligible(CLASSIFY_DIGITS);
    let (w2_zero, w3_zero) = (negligible(&w2), negligible(&w3));
    let class = if !half_flat {
        TorsionClass::NotHalfFlat
    } else if negligible(&d_omega) && negligible(&d_pm) {
        TorsionClass::TorsionFree
    } else if w1_zero {
        TorsionClass::HalfFlatGeneric
    } else {
        match (w2_zero, w3_zero) {
            (true, true) => TorsionClass::NearlyKahler,
            (false, true) => TorsionClass::Coupled,
            (true, false) => TorsionClass::Double,
            (false, false) => TorsionClass::HalfFlatGeneric,
        }
    };
    let coupled_constant =
        (half_flat && w3_zero && !w1_zero).then(|| &Scalar::ratio(-3, 2) * &w1);
    let double_constant = (half_flat && w2_zero && !w1_zero).then(|| w1.clone());
    let quasi_kahler = matches!(
        class,
        TorsionClass::Coupled | TorsionClass::NearlyKahler | TorsionClass::TorsionFree
    );
    Ok(TorsionData { w1, w2, w3, class, coupled_constant, double_constant, quasi_kahler, d_omega, d_psi_minus: d_pm })
}

/// Torsion class of a validated structure on `g`.
pub fn classify(g: &LieAlgebra, s: &SU3Structure) -> Result<TorsionData, TorsionError> {
    torsion_forms(g, s)
}

impl TorsionData {
    /// Identities the extracted forms must satisfy; returns the names of those
    /// that fail.
    pub fn violations(&self, s: &SU3Structure) -> Vec<&'static str> {
        let mut bad = Vec::new();
        if self.class == TorsionClass::NotHalfFlat {
            return bad;
        }
        let omega = s.omega();
        let psi = s.psi_plus();
        let omega2 = omega.w(omega);
        let rebuilt_d_omega = psi.scale(&(&Scalar::ratio(-3, 2) * &self.w1)).add(&self.w3);
        if !negligible(&rebuilt_d_omega.sub(&self.d_omega)) {
            bad.push("dω = -(3/2)w1ψ+ + w3");
        }
        let rebuilt_dpm = omega2.scale(&self.w1).sub(&self.w2.w(omega));
        if !negligible(&rebuilt_dpm.sub(&self.d_psi_minus)) {
            bad.push("dψ- = w1ω² - w2∧ω");
        }
        if !negligible(&self.w2.w(&omega2)) {
            bad.push("w2∧ω² = 0");
        }
        if !negligible(&self.w3.w(omega)) {
            bad.push("w3∧ω = 0");
        }
        if !negligible(&self.w3.w(psi)) {
            bad.push("w3∧ψ+ = 0");
        }
        if let Ok(pm) = s.psi_minus() {
            if !negligible(&self.w3.w(pm)) {
                bad.push("w3∧ψ- = 0");
            }
        }
        bad
    }
}
