use std::fmt::Write as _;
use std::fs;

use su3_core::exterior::KForm;
use su3_core::hitchin::validate;
use su3_core::liealg::{catalog, catalog_entries, einstein_check, jensen_matrix, parse_algebra_spec, ricci, LieAlgebra};
use su3_core::linalg::Matrix;
use su3_core::obstruction::{obstruction_scan, obstruction_test, ObstructionError};
use su3_core::scalar::{parse_scalar, set_default_digits, Scalar};
use su3_core::systems::{coupled_su2su2_pipeline, nonexistence_pipeline, NonexistenceMode, SystemError};
use su3_core::torsion::classify;
use su3_groebner::{parse_poly, parse_poly_list, Budget, GroebnerError, Ideal, MonomialOrder, Vars};
use thiserror::Error;

use crate::{Cli, Command, Mode, Pipeline};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("budget exhausted: {0}")]
    Budget(String),
}

fn input(e: impl ToString) -> CliError {
    CliError::Input(e.to_string())
}

impl From<GroebnerError> for CliError {
    fn from(e: GroebnerError) -> Self {
        match e {
            GroebnerError::ResourceBudgetExceeded { .. } => CliError::Budget(e.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<SystemError> for CliError {
    fn from(e: SystemError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<ObstructionError> for CliError {
    fn from(e: ObstructionError) -> Self {
        CliError::Input(e.to_string())
    }
}

/// `catalog:name[,p=v…]`, `file:path` or a bare path.
pub fn load_algebra(src: &str) -> Result<LieAlgebra, CliError> {
    if let Some(spec) = src.strip_prefix("catalog:") {
        return parse_algebra_spec(spec).map_err(input);
    }
    let path = src.strip_prefix("file:").unwrap_or(src);
    let text = fs::read_to_string(path).map_err(|e| input(format!("{}: {}", path, e)))?;
    LieAlgebra::parse(&text).map_err(input)
}

fn form(src: &str, degree: usize) -> Result<KForm, CliError> {
    KForm::parse_degree(src, degree).map_err(|e| input(format!("'{}': {}", src, e)))
}

fn metric(src: &str) -> Result<Matrix<Scalar>, CliError> {
    match src {
        "identity" => Ok(Matrix::identity(6)),
        "jensen" => Ok(jensen_matrix()),
        _ => {
            let path = src
                .strip_prefix("file:")
                .ok_or_else(|| input(format!("metric must be identity, jensen or file:<path>, got '{}'", src)))?;
            let text = fs::read_to_string(path).map_err(|e| input(format!("{}: {}", path, e)))?;
            let rows: Vec<Vec<Scalar>> = text
                .lines()
                .map(|l| l.split('#').next().unwrap_or("").trim())
                .filter(|l| !l.is_empty())
                .map(|l| {
                    l.split(|c: char| c == ',' || c.is_whitespace())
                        .filter(|t| !t.is_empty())
                        .map(|t| parse_scalar(t).map_err(input))
                        .collect()
                })
                .collect::<Result<_, _>>()?;
            if rows.len() != 6 || rows.iter().any(|r| r.len() != 6) {
                return Err(input("metric file needs six rows of six scalars"));
            }
            let m = Matrix::from_rows(rows);
            if !m.is_symmetric() {
                return Err(input("metric is not symmetric"));
            }
            Ok(m)
        }
    }
}

fn header(out: &mut String, cli: &Cli, command: &str) {
    writeln!(out, "su3-report v1").unwrap();
    writeln!(out, "command {}", command).unwrap();
    writeln!(out, "precision {}", cli.common.precision).unwrap();
    writeln!(out, "seed {}", cli.common.seed).unwrap();
}

fn budget(cli: &Cli) -> Result<Budget, CliError> {
    let c = &cli.common;
    if !(c.budget_min > 0.0) || c.budget_mib == 0 {
        return Err(input("budgets must be positive"));
    }
    Ok(Budget::minutes(c.budget_min).with_memory_mib(c.budget_mib))
}

fn nonzero_terms(out: &mut String, label: &str, f: &KForm) {
    if f.is_negligible(su3_core::hitchin::CLASSIFY_DIGITS) {
        writeln!(out, "{} 0", label).unwrap();
    } else {
        writeln!(out, "{} {}", label, f).unwrap();
    }
}

pub fn run(cli: &Cli) -> Result<(), CliError> {
    set_default_digits(cli.common.precision as usize);
    let mut out = String::new();
    match &cli.command {
        Command::Validate { omega, psi } => {
            header(&mut out, cli, "validate");
            let s = validate(&form(omega, 2)?, &form(psi, 3)?).map_err(input)?;
            writeln!(out, "omega {}", s.omega()).unwrap();
            writeln!(out, "psi_plus {}", s.psi_plus()).unwrap();
            for (name, ok) in s.flags().named() {
                writeln!(out, "flag {} {}", name, ok).unwrap();
            }
            writeln!(out, "lambda {}", s.lambda()).unwrap();
            writeln!(out, "omega_cubed {}", s.omega_cubed()).unwrap();
            match s.metric() {
                Ok(h) => write!(out, "metric\n{}", h).unwrap(),
                Err(e) => writeln!(out, "metric unavailable: {}", e).unwrap(),
            }
            writeln!(out, "valid {}", s.is_valid()).unwrap();
        }
        Command::Classify { algebra, omega, psi } => {
            header(&mut out, cli, "classify");
            let g = load_algebra(algebra)?;
            let s = validate(&form(omega, 2)?, &form(psi, 3)?).map_err(input)?;
            writeln!(out, "algebra {}", g.name()).unwrap();
            writeln!(out, "valid {}", s.is_valid()).unwrap();
            let t = classify(&g, &s).map_err(input)?;
            writeln!(out, "class {}", t.class).unwrap();
            writeln!(out, "w1 {}", t.w1).unwrap();
            nonzero_terms(&mut out, "w2", &t.w2);
            nonzero_terms(&mut out, "w3", &t.w3);
            if let Some(c) = &t.coupled_constant {
                writeln!(out, "coupled_constant {}", c).unwrap();
            }
            if let Some(k) = &t.double_constant {
                writeln!(out, "double_constant {}", k).unwrap();
            }
            writeln!(out, "quasi_kahler {}", t.quasi_kahler).unwrap();
            for v in t.violations(&s) {
                writeln!(out, "violation {}", v).unwrap();
            }
        }
        Command::Obstruct { algebra, alpha } => {
            header(&mut out, cli, "obstruct");
            let g = load_algebra(algebra)?;
            let (g, rescale) = if g.is_rational() {
                (g, None)
            } else {
                let r = g.rationalize().map_err(input)?;
                let mu: Vec<String> = r.scales.iter().map(|m| m.to_string()).collect();
                writeln!(out, "basis f^i = mu_i e^i, mu = [{}]", mu.join(", ")).unwrap();
                (r.algebra.clone(), Some(r))
            };
            match alpha {
                Some(a) => {
                    let a = form(a, 1)?;
                    let a = rescale.as_ref().map_or(a.clone(), |r| r.to_new_basis(&a));
                    // The verdict is invariant under scaling alpha.
                    let lead = a.terms().next().map(|(_, c)| c.clone()).ok_or_else(|| input("alpha is zero"))?;
                    let a = a.scale(&lead.inv().expect("nonzero"));
                    write!(out, "{}", obstruction_test(&g, &a)?).unwrap();
                }
                None => match obstruction_scan(&g, None)? {
                    Some(r) => write!(out, "{}", r).unwrap(),
                    None => {
                        writeln!(out, "algebra {}", g.name()).unwrap();
                        writeln!(out, "obstructed false (no default candidate obstructs)").unwrap();
                    }
                },
            }
        }
        Command::Groebner { file, vars, order, quotient, saturate } => {
            header(&mut out, cli, "groebner");
            let order: MonomialOrder = order.parse().map_err(input)?;
            let vars = Vars::new(vars.iter().map(|v| v.trim().to_string()));
            let text = fs::read_to_string(file).map_err(|e| input(format!("{}: {}", file.display(), e)))?;
            let budget = budget(cli)?;
            let mut ideal = Ideal::new(&vars, parse_poly_list(&text, &vars).map_err(input)?);
            if let Some(q) = quotient {
                ideal = ideal.quotient(&parse_poly(q, &vars).map_err(input)?, &budget)?;
            }
            if let Some(s) = saturate {
                ideal = ideal.saturate(&parse_poly(s, &vars).map_err(input)?, &budget)?;
            }
            let gb = ideal.groebner(order, &budget)?;
            writeln!(out, "vars {}", vars.names().join(",")).unwrap();
            writeln!(out, "order {}", order).unwrap();
            writeln!(out, "basis {}", gb.basis.len()).unwrap();
            for p in &gb.basis {
                writeln!(out, "{}", p).unwrap();
            }
        }
        Command::Pipeline { which } => match which {
            Pipeline::Su2su2Coupled => {
                header(&mut out, cli, "pipeline su2su2-coupled");
                let r = coupled_su2su2_pipeline(&budget(cli)?)?;
                write!(out, "{}", r).unwrap();
            }
            Pipeline::Nonexist { algebra, mode, emit_ideal } => {
                header(&mut out, cli, "pipeline nonexist");
                let g = load_algebra(algebra)?;
                let mode = match mode {
                    Mode::Coupled => NonexistenceMode::Coupled,
                    Mode::Halfflat => NonexistenceMode::HalfFlat,
                };
                let r = nonexistence_pipeline(&g, mode, &budget(cli)?)?;
                if let Some(path) = emit_ideal {
                    fs::write(path, r.emit_ideal()).map_err(|e| input(format!("{}: {}", path.display(), e)))?;
                }
                write!(out, "{}", r).unwrap();
            }
        },
        Command::Catalog => {
            header(&mut out, cli, "catalog");
            for e in catalog_entries() {
                writeln!(out, "[{}]", e.name).unwrap();
                if !e.params.is_empty() {
                    writeln!(out, "params {}", e.params.join(",")).unwrap();
                    writeln!(out, "range {}", e.range).unwrap();
                }
                writeln!(out, "note {}", e.note).unwrap();
                let g = catalog(e.name, &[]).map_err(input)?;
                for i in 1..=6 {
                    writeln!(out, "de{} = {}", i, g.de(i)).unwrap();
                }
            }
        }
        Command::Einstein { algebra, metric: m } => {
            header(&mut out, cli, "einstein");
            let g = load_algebra(algebra)?;
            let h = metric(m)?;
            writeln!(out, "algebra {}", g.name()).unwrap();
            for (k, v) in g.params() {
                writeln!(out, "param {} = {}", k, v).unwrap();
            }
            writeln!(out, "metric {}", m).unwrap();
            let ric = ricci(&g, &h).map_err(input)?;
            write!(out, "ricci\n{}", ric).unwrap();
            match einstein_check(&g, &h).map_err(input)? {
                Some(mu) => writeln!(out, "einstein true\nmu {}", mu).unwrap(),
                None => writeln!(out, "einstein false").unwrap(),
            }
        }
    }
    match &cli.common.out {
        Some(path) => fs::write(path, out).map_err(|e| input(format!("{}: {}", path.display(), e))),
        None => {
            print!("{}", out);
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn algebra_sources() {
        assert_eq!(load_algebra("catalog:su2su2").unwrap().name(), "su2su2");
        assert!(matches!(load_algebra("catalog:nope"), Err(CliError::Input(_))));
        assert!(matches!(load_algebra("/no/such/file"), Err(CliError::Input(_))));
    }

    #[test]
    fn metric_sources() {
        assert_eq!(metric("identity").unwrap(), Matrix::identity(6));
        assert!(metric("diag").is_err());
    }

    #[test]
    fn budget_errors_map_to_budget() {
        let e = GroebnerError::ResourceBudgetExceeded {
            resource: su3_groebner::Resource::Time,
            elapsed: std::time::Duration::from_secs(1),
            basis_len: 3,
            pairs_left: 4,
        };
        assert!(matches!(CliError::from(e), CliError::Budget(_)));
    }
}
