//! Ricci tensor of a left-invariant metric from the structure constants,
//! via the Koszul formula for the Levi-Civita connection.

use crate::exterior::DIM;
use crate::linalg::Matrix;
use crate::scalar::Scalar;

use super::{LieAlgebra, LieError};

/// `C[i][j][k]` with `[e_j, e_k] = Σ_i C[i][j][k] e_i`, using `de(X,Y) = −e([X,Y])`.
fn brackets(g: &LieAlgebra) -> Vec<Vec<Vec<Scalar>>> {
    let mut c = vec![vec![vec![Scalar::zero(); DIM]; DIM]; DIM];
    for i in 0..DIM {
        for (w, coef) in g.de(i + 1).terms() {
            let ix: Vec<usize> = w.indices().collect();
            let (j, k) = (ix[0] - 1, ix[1] - 1);
            c[i][j][k] = -coef;
            c[i][k][j] = coef.clone();
        }
    }
    c
}

/// Ricci tensor `Ric[j][k] = Ric(e_j, e_k)` of the metric `H[i][j] = h(e_i, e_j)`.
pub fn ricci(g: &LieAlgebra, h: &Matrix<Scalar>) -> Result<Matrix<Scalar>, LieError> {
    let hinv = h.inverse().ok_or(LieError::SingularMetric)?;
    let c = brackets(g);
    let n = DIM;
    // b[i][j][l] = h([e_i, e_j], e_l)
    let mut b = vec![vec![vec![Scalar::zero(); n]; n]; n];
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                let mut acc = Scalar::zero();
                for m in 0..n {
                    if !c[m][i][j].is_zero() && !h[(m, l)].is_zero() {
                        acc = &acc + &(&c[m][i][j] * &h[(m, l)]);
                    }
                }
                b[i][j][l] = acc;
            }
        }
    }
    // gamma[i][j][k]: ∇_{e_i} e_j = Σ_k gamma[i][j][k] e_k
    let half = Scalar::ratio(1, 2);
    let mut gamma = vec![vec![vec![Scalar::zero(); n]; n]; n];
    for i in 0..n {
        for j in 0..n {
            let lower: Vec<Scalar> =
                (0..n).map(|l| &(&(&b[i][j][l] - &b[j][l][i]) + &b[l][i][j]) * &half).collect();
            for k in 0..n {
                let mut acc = Scalar::zero();
                for (l, lo) in lower.iter().enumerate() {
                    if !lo.is_zero() && !hinv[(k, l)].is_zero() {
                        acc = &acc + &(&hinv[(k, l)] * lo);
                    }
                }
                gamma[i][j][k] = acc;
            }
        }
    }
    // Ric(e_j, e_k) = Σ_i e^i(R(e_i, e_j) e_k), with
    // R(X,Y)Z = ∇_X∇_Y Z − ∇_Y∇_X Z − ∇_{[X,Y]} Z.
    Ok(Matrix::from_fn(n, n, |j, k| {
        let mut acc = Scalar::zero();
        for i in 0..n {
            for m in 0..n {
                let a = &gamma[j][k][m];
                if !a.is_zero() && !gamma[i][m][i].is_zero() {
                    acc = &acc + &(a * &gamma[i][m][i]);
                }
                let bb = &gamma[i][k][m];
                if !bb.is_zero() && !gamma[j][m][i].is_zero() {
                    acc = &acc - &(bb * &gamma[j][m][i]);
                }
                let cc = &c[m][i][j];
                if !cc.is_zero() && !gamma[m][k][i].is_zero() {
                    acc = &acc - &(cc * &gamma[m][k][i]);
                }
            }
        }
        acc
    }))
}

/// `μ` with `Ric = μ·H`, if it exists. Exact for exact scalars; float entries
/// are compared at 10⁻³⁰.
pub fn einstein_check(g: &LieAlgebra, h: &Matrix<Scalar>) -> Result<Option<Scalar>, LieError> {
    let ric = ricci(g, h)?;
    let (i, j) = (0..DIM)
        .flat_map(|i| (0..DIM).map(move |j| (i, j)))
        .find(|&(i, j)| !h[(i, j)].is_zero())
        .ok_or(LieError::SingularMetric)?;
    let mu = ric[(i, j)].checked_div(&h[(i, j)]).map_err(|_| LieError::SingularMetric)?;
    let proportional = (0..DIM).all(|a| {
        (0..DIM).all(|b| (&ric[(a, b)] - &(&mu * &h[(a, b)])).is_negligible(30))
    });
    Ok(proportional.then_some(mu))
}

/// The Jensen metric on su(2)⊕su(2): diagonal `2√3/3`, with `−√3/3` at
/// (1,4), (2,5), (3,6) and their transposes.
pub fn jensen_matrix() -> Matrix<Scalar> {
    let d = &Scalar::int(2) * &Scalar::sqrt_ratio(1, 3);
    let o = -Scalar::sqrt_ratio(1, 3);
    Matrix::from_fn(DIM, DIM, |i, j| {
        if i == j {
            d.clone()
        } else if i + 3 == j || j + 3 == i {
            o.clone()
        } else {
            Scalar::zero()
        }
    })
}
