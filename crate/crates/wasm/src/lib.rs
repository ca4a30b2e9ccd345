//! Browser bindings: Einstein check, torsion classification and the covector
//! obstruction, each returning a plain-text report for the demo page in `www/`.
//!
//! The `*_report` functions are ordinary Rust and are what the tests exercise;
//! the `#[wasm_bindgen]` wrappers only convert errors.

use std::fmt::Write as _;

use su3_core::exterior::KForm;
use su3_core::hitchin::{validate, CLASSIFY_DIGITS};
use su3_core::liealg::{catalog_entries, einstein_check, jensen_matrix, parse_algebra_spec, ricci};
use su3_core::linalg::Matrix;
use su3_core::obstruction::{obstruction_scan, obstruction_test};
use su3_core::scalar::Scalar;
use su3_core::torsion::classify;
use wasm_bindgen::prelude::*;

/// One line per catalog algebra: `name:param,param`.
pub fn algebra_list() -> String {
    catalog_entries().iter().map(|e| format!("{}:{}\n", e.name, e.params.join(","))).collect()
}

/// `spec` is `name[,p=v…]`; `metric` is `identity` or `jensen`.
pub fn einstein_report(spec: &str, metric: &str) -> Result<String, String> {
    let g = parse_algebra_spec(spec).map_err(|e| e.to_string())?;
    let h = match metric {
        "identity" => Matrix::identity(6),
        "jensen" => jensen_matrix(),
        other => return Err(format!("unknown metric '{}'", other)),
    };
    let ric = ricci(&g, &h).map_err(|e| e.to_string())?;
    let mut out = String::new();
    writeln!(out, "algebra {}", g.name()).unwrap();
    for (k, v) in g.params() {
        writeln!(out, "{} = {} ≈ {:.6}", k, v, v.to_f64()).unwrap();
    }
    match einstein_check(&g, &h).map_err(|e| e.to_string())? {
        Some(mu) => writeln!(out, "Einstein: Ric = μ·h with μ = {} ≈ {:.6}", mu, mu.to_f64()).unwrap(),
        None => writeln!(out, "not Einstein for this metric").unwrap(),
    }
    writeln!(out, "Ricci (approx.)").unwrap();
    for i in 0..6 {
        let row: Vec<String> = (0..6)
            .map(|j| {
                let x = ric[(i, j)].to_f64();
                format!("{:>9.4}", if x.abs() < 5e-5 { 0.0 } else { x })
            })
            .collect();
        writeln!(out, "{}", row.join(" ")).unwrap();
    }
    Ok(out)
}

pub fn classify_report(spec: &str, omega: &str, psi: &str) -> Result<String, String> {
    let g = parse_algebra_spec(spec).map_err(|e| e.to_string())?;
    let omega = KForm::parse_degree(omega, 2).map_err(|e| format!("omega: {}", e))?;
    let psi = KForm::parse_degree(psi, 3).map_err(|e| format!("psi: {}", e))?;
    let s = validate(&omega, &psi).map_err(|e| e.to_string())?;
    let mut out = String::new();
    for (name, ok) in s.flags().named() {
        writeln!(out, "{:<16}{}", name, ok).unwrap();
    }
    let t = classify(&g, &s).map_err(|e| e.to_string())?;
    writeln!(out, "class {}", t.class).unwrap();
    writeln!(out, "w1 = {}", t.w1).unwrap();
    for (label, f) in [("w2", &t.w2), ("w3", &t.w3)] {
        if f.is_negligible(CLASSIFY_DIGITS) {
            writeln!(out, "{} = 0", label).unwrap();
        } else {
            writeln!(out, "{} = {}", label, f).unwrap();
        }
    }
    if let Some(c) = &t.coupled_constant {
        writeln!(out, "dω = c·ψ₊ with c = {}", c).unwrap();
    }
    if let Some(k) = &t.double_constant {
        writeln!(out, "dψ₋ = k·ω² with k = {}", k).unwrap();
    }
    Ok(out)
}

/// An empty `alpha` scans `e^i` and `e^i ± e^j`.
pub fn obstruct_report(spec: &str, alpha: &str) -> Result<String, String> {
    let g = parse_algebra_spec(spec).map_err(|e| e.to_string())?;
    let mut out = String::new();
    let (g, rescale) = if g.is_rational() {
        (g, None)
    } else {
        let r = g.rationalize().map_err(|e| e.to_string())?;
        let mu: Vec<String> = r.scales.iter().map(Scalar::to_string).collect();
        writeln!(out, "working basis f^i = μ_i e^i, μ = [{}]", mu.join(", ")).unwrap();
        (r.algebra.clone(), Some(r))
    };
    if alpha.trim().is_empty() {
        match obstruction_scan(&g, None).map_err(|e| e.to_string())? {
            Some(r) => write!(out, "{}", r).unwrap(),
            None => writeln!(out, "no candidate covector obstructs").unwrap(),
        }
        return Ok(out);
    }
    let a = KForm::parse_degree(alpha, 1).map_err(|e| format!("alpha: {}", e))?;
    let a = rescale.as_ref().map_or(a.clone(), |r| r.to_new_basis(&a));
    let lead = a.terms().next().map(|(_, c)| c.clone()).ok_or("alpha is zero")?;
    let a = a.scale(&lead.inv().expect("nonzero"));
    write!(out, "{}", obstruction_test(&g, &a).map_err(|e| e.to_string())?).unwrap();
    Ok(out)
}

#[wasm_bindgen]
pub fn algebras() -> String {
    algebra_list()
}

#[wasm_bindgen]
pub fn einstein(spec: &str, metric: &str) -> Result<String, JsValue> {
    einstein_report(spec, metric).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = classify)]
pub fn classify_js(spec: &str, omega: &str, psi: &str) -> Result<String, JsValue> {
    classify_report(spec, omega, psi).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn obstruct(spec: &str, alpha: &str) -> Result<String, JsValue> {
    obstruct_report(spec, alpha).map_err(|e| JsValue::from_str(&e))
}
