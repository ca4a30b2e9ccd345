//! Stable forms: `K_ρ`, `λ(ρ)`, the almost complex structure `J_ρ`, `ψ₋`, and
//! the induced metric of a pair `(ω, ψ₊)`.
//!
//! The top form is fixed to `Ω = e^{123456}`, so `K_ρ` is an ordinary matrix.

use std::sync::OnceLock;

use thiserror::Error;

use crate::exterior::{ExteriorError, Form, KForm, Word, DIM};
use crate::linalg::Matrix;
use crate::ring::Ring;
use crate::scalar::Scalar;

/// Digits used when deciding float equalities in flags.
pub const CLASSIFY_DIGITS: usize = 30;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum HitchinError {
    #[error("3-form is not stable (λ = 0)")]
    NotStable,
    #[error("λ > 0: the 3-form induces a paracomplex structure")]
    WrongOrientation,
    #[error("ω(·, J·) is not symmetric")]
    NotSymmetric,
    #[error("2-form is degenerate (ω³ = 0)")]
    Degenerate2Form,
    #[error(transparent)]
    Exterior(#[from] ExteriorError),
}

/// Matrix of `K_ρ`: column j is the vector part of `A((i_{e_j}ρ) ∧ ρ)`.
pub fn k_endo<T: Ring>(rho: &Form<T>) -> Result<Matrix<T>, ExteriorError> {
    if rho.degree() != 3 {
        return Err(ExteriorError::DegreeMismatch { expected: 3, found: rho.degree() });
    }
    let mut k = Matrix::zeros(DIM, DIM);
    for j in 0..DIM {
        let five = rho.interior_basis(j + 1)?.w(rho);
        let v = five.five_form_iso()?.vector;
        for (i, vi) in v.into_iter().enumerate() {
            k[(i, j)] = vi;
        }
    }
    Ok(k)
}

/// `λ(ρ) = tr(K_ρ²)/6`.
pub fn lambda<T: Ring>(rho: &Form<T>) -> Result<T, ExteriorError> {
    let k = k_endo(rho)?;
    Ok(lambda_from_k(&k))
}

fn lambda_from_k<T: Ring>(k: &Matrix<T>) -> T {
    let mut tr = T::zero();
    for i in 0..DIM {
        for j in 0..DIM {
            let a = &k[(i, j)];
            let b = &k[(j, i)];
            if !a.is_zero() && !b.is_zero() {
                tr = tr.plus(&a.times(b));
            }
        }
    }
    tr.times(&T::from_rational(dashu_ratio::RBig::from_parts(1.into(), 6u8.into())))
}

/// `H̃ = −W·K` with `W[i][k] = ω(e_i, e_k)`; equals `√(−λ)·H` when λ < 0.
pub fn h_tilde<T: Ring>(omega: &Form<T>, psi: &Form<T>) -> Result<Matrix<T>, ExteriorError> {
    if omega.degree() != 2 {
        return Err(ExteriorError::DegreeMismatch { expected: 2, found: omega.degree() });
    }
    let k = k_endo(psi)?;
    Ok(omega.skew_matrix().mul(&k).map(|x| x.negated()))
}

fn j_from_k(k: &Matrix<Scalar>, lam: &Scalar) -> Result<Matrix<Scalar>, HitchinError> {
    match lam.signum() {
        0 => Err(HitchinError::NotStable),
        s if s > 0 => Err(HitchinError::WrongOrientation),
        _ => {
            let root = (-lam).sqrt();
            let inv = root.inv().ok_or(HitchinError::NotStable)?;
            Ok(k.scale(&-inv))
        }
    }
}

/// `J_ρ = −K_ρ/√|λ(ρ)|`, defined when λ < 0.
pub fn almost_complex(rho: &KForm) -> Result<Matrix<Scalar>, HitchinError> {
    let k = k_endo(rho)?;
    let lam = lambda_from_k(&k);
    j_from_k(&k, &lam)
}

/// `ψ₋ = J*ψ₊`, i.e. `ψ₋(X,Y,Z) = ψ₊(JX, JY, JZ)`.
pub fn psi_minus(psi: &KForm) -> Result<KForm, HitchinError> {
    Ok(psi.pullback(&almost_complex(psi)?))
}

fn metric_from_j(omega: &KForm, j: &Matrix<Scalar>) -> Result<Matrix<Scalar>, HitchinError> {
    let h = omega.skew_matrix().mul(j);
    if !symmetric_within(&h, CLASSIFY_DIGITS) {
        return Err(HitchinError::NotSymmetric);
    }
    Ok(h)
}

/// `H[i][j] = ω(e_i, J e_j)`; symmetry is checked.
pub fn metric(omega: &KForm, psi: &KForm) -> Result<Matrix<Scalar>, HitchinError> {
    metric_from_j(omega, &almost_complex(psi)?)
}

/// `H[i][j] = −3·((i_{e_i}ω) ∧ (i_{e_j}ψ₊) ∧ ψ₊) / ω³`, top coefficients.
pub fn metric_wedge(omega: &KForm, psi: &KForm) -> Result<Matrix<Scalar>, HitchinError> {
    let w3 = omega.w(omega).w(omega).top_coefficient()?;
    if w3.is_zero() {
        return Err(HitchinError::Degenerate2Form);
    }
    let scale = (&Scalar::int(-3)).checked_div(&w3).map_err(|_| HitchinError::Degenerate2Form)?;
    let iw: Vec<KForm> = (1..=DIM).map(|i| omega.interior_basis(i)).collect::<Result<_, _>>()?;
    let ip: Vec<KForm> = (1..=DIM).map(|j| psi.interior_basis(j).map(|f| f.w(psi))).collect::<Result<_, _>>()?;
    Ok(Matrix::from_fn(DIM, DIM, |i, j| &iw[i].w(&ip[j]).coeff(Word::TOP) * &scale))
}

fn symmetric_within(m: &Matrix<Scalar>, digits: usize) -> bool {
    (0..m.rows()).all(|i| (0..i).all(|j| (&m[(i, j)] - &m[(j, i)]).is_negligible(digits)))
}

/// Positive definite, by leading principal minors.
pub fn is_positive_definite(m: &Matrix<Scalar>) -> bool {
    (1..=m.rows()).all(|k| {
        let minor = Matrix::from_fn(k, k, |i, j| m[(i, j)].clone());
        let d = minor.det();
        !d.is_negligible(CLASSIFY_DIGITS) && d.signum() > 0
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Flags {
    pub stable2: bool,
    pub stable3: bool,
    pub lambda_negative: bool,
    pub compatible: bool,
    pub normalized: bool,
    pub metric_positive: bool,
}

impl Flags {
    pub fn all(&self) -> bool {
        self.stable2
            && self.stable3
            && self.lambda_negative
            && self.compatible
            && self.normalized
            && self.metric_positive
    }

    pub fn named(&self) -> [(&'static str, bool); 6] {
        [
            ("stable2", self.stable2),
            ("stable3", self.stable3),
            ("lambda_negative", self.lambda_negative),
            ("compatible", self.compatible),
            ("normalized", self.normalized),
            ("metric_positive", self.metric_positive),
        ]
    }
}

/// A pair `(ω, ψ₊)` with derived data computed on demand and cached.
#[derive(Debug)]
pub struct SU3Structure {
    omega: KForm,
    psi_plus: KForm,
    k: OnceLock<Matrix<Scalar>>,
    lambda: OnceLock<Scalar>,
    j: OnceLock<Result<Matrix<Scalar>, HitchinError>>,
    psi_minus: OnceLock<Result<KForm, HitchinError>>,
    metric: OnceLock<Result<Matrix<Scalar>, HitchinError>>,
    flags: OnceLock<Flags>,
}

impl Clone for SU3Structure {
    fn clone(&self) -> Self {
        SU3Structure::new(self.omega.clone(), self.psi_plus.clone()).expect("degrees already checked")
    }
}

impl SU3Structure {
    pub fn new(omega: KForm, psi_plus: KForm) -> Result<Self, HitchinError> {
        if omega.degree() != 2 {
            return Err(ExteriorError::DegreeMismatch { expected: 2, found: omega.degree() }.into());
        }
        if psi_plus.degree() != 3 {
            return Err(ExteriorError::DegreeMismatch { expected: 3, found: psi_plus.degree() }.into());
        }
        Ok(SU3Structure {
            omega,
            psi_plus,
            k: OnceLock::new(),
            lambda: OnceLock::new(),
            j: OnceLock::new(),
            psi_minus: OnceLock::new(),
            metric: OnceLock::new(),
            flags: OnceLock::new(),
        })
    }

    pub fn omega(&self) -> &KForm {
        &self.omega
    }

    pub fn psi_plus(&self) -> &KForm {
        &self.psi_plus
    }

    pub fn k(&self) -> &Matrix<Scalar> {
        self.k.get_or_init(|| k_endo(&self.psi_plus).expect("3-form"))
    }

    pub fn lambda(&self) -> &Scalar {
        self.lambda.get_or_init(|| lambda_from_k(self.k()))
    }

    pub fn j(&self) -> Result<&Matrix<Scalar>, HitchinError> {
        self.j.get_or_init(|| j_from_k(self.k(), self.lambda())).as_ref().map_err(Clone::clone)
    }

    pub fn psi_minus(&self) -> Result<&KForm, HitchinError> {
        self.psi_minus
            .get_or_init(|| self.j().map(|j| self.psi_plus.pullback(j)))
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn metric(&self) -> Result<&Matrix<Scalar>, HitchinError> {
        self.metric
            .get_or_init(|| self.j().and_then(|j| metric_from_j(&self.omega, j)))
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn metric_wedge(&self) -> Result<Matrix<Scalar>, HitchinError> {
        metric_wedge(&self.omega, &self.psi_plus)
    }

    /// `ω³` top coefficient.
    pub fn omega_cubed(&self) -> Scalar {
        self.omega.w(&self.omega).w(&self.omega).coeff(Word::TOP)
    }

    pub fn flags(&self) -> Flags {
        *self.flags.get_or_init(|| self.compute_flags())
    }

    fn compute_flags(&self) -> Flags {
        let w3 = self.omega_cubed();
        let lam = self.lambda();
        let stable2 = !w3.is_negligible(CLASSIFY_DIGITS);
        let stable3 = !lam.is_negligible(CLASSIFY_DIGITS);
        let lambda_negative = stable3 && lam.signum() < 0;
        let mut compatible = self.omega.w(&self.psi_plus).is_negligible(CLASSIFY_DIGITS);
        let mut normalized = false;
        if let (true, Ok(pm)) = (lambda_negative, self.psi_minus()) {
            compatible = compatible && self.omega.w(pm).is_negligible(CLASSIFY_DIGITS);
            let lhs = self.psi_plus.w(pm).coeff(Word::TOP);
            let rhs = &Scalar::ratio(2, 3) * &w3;
            normalized = stable2 && (&lhs - &rhs).is_negligible(CLASSIFY_DIGITS);
        }
        let metric_positive = lambda_negative && self.metric().map(is_positive_definite).unwrap_or(false);
        Flags { stable2, stable3, lambda_negative, compatible, normalized, metric_positive }
    }

    pub fn is_valid(&self) -> bool {
        self.flags().all()
    }

    /// Largest entrywise difference between the two metric formulas.
    pub fn metric_discrepancy(&self) -> Option<f64> {
        let a = self.metric().ok()?;
        let b = self.metric_wedge().ok()?;
        Some(a.minus(&b).entries().iter().map(|x| x.to_f64().abs()).fold(0.0, f64::max))
    }
}

/// Computes every derived field and flag of `(ω, ψ₊)`.
pub fn validate(omega: &KForm, psi: &KForm) -> Result<SU3Structure, HitchinError> {
    let s = SU3Structure::new(omega.clone(), psi.clone())?;
    s.flags();
    Ok(s)
}
