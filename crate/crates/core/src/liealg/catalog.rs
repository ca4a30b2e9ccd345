//! Built-in algebras: su(2)⊕su(2), the thirteen Einstein solvable algebras
//! s1…s13 (orthonormal Einstein basis, Ric = −r²h), A₆,₉₉ and the abelian algebra.

use std::cmp::Ordering;

use crate::exterior::KForm;
use crate::scalar::{parse_scalar, Scalar};

use super::{LieAlgebra, LieError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub params: &'static [&'static str],
    pub range: &'static str,
    pub note: &'static str,
}

const ENTRIES: &[CatalogEntry] = &[
    CatalogEntry { name: "su2su2", params: &[], range: "", note: "su(2)+su(2), Lie algebra of S3xS3" },
    CatalogEntry { name: "s1", params: &["r"], range: "r > 0", note: "rank 1, Ric = -r^2 h" },
    CatalogEntry { name: "s2", params: &["r"], range: "r > 0", note: "rank 1, Ric = -r^2 h" },
    CatalogEntry { name: "s3", params: &["r"], range: "r > 0", note: "rank 1, Ric = -r^2 h; isomorphic to a6_99" },
    CatalogEntry { name: "s4", params: &["r"], range: "r > 0", note: "rank 1, Ric = -r^2 h" },
    CatalogEntry { name: "s5", params: &["r"], range: "r > 0", note: "rank 1, Ric = -r^2 h" },
    CatalogEntry { name: "s6", params: &["r"], range: "r > 0", note: "rank 1, Ric = -r^2 h" },
    CatalogEntry { name: "s7", params: &["r"], range: "r > 0", note: "rank 1, Ric = -r^2 h" },
    CatalogEntry { name: "s8", params: &["r"], range: "r > 0", note: "rank 1, Ric = -r^2 h" },
    CatalogEntry { name: "s9", params: &["r"], range: "r > 0", note: "rank 1, Ric = -r^2 h, abelian nilradical" },
    CatalogEntry {
        name: "s10",
        params: &["r", "t"],
        range: "r > 0, 0 <= t <= 1/sqrt(22); presets t=branch (7/(2*sqrt(330))), t=max",
        note: "rank 2, Ric = -r^2 h",
    },
    CatalogEntry { name: "s11", params: &["r"], range: "r > 0", note: "rank 2, Ric = -r^2 h" },
    CatalogEntry { name: "s12", params: &["r", "s", "t"], range: "r > 0, 0 <= s <= t <= 1", note: "rank 2, Ric = -r^2 h" },
    CatalogEntry { name: "s13", params: &["r"], range: "r > 0", note: "rank 3, Ric = -r^2 h" },
    CatalogEntry {
        name: "a6_99",
        params: &[],
        range: "",
        note: "(5f16+f25+f34, 4f26+f35, 3f36+f45, 2f46, f56, 0)",
    },
    CatalogEntry { name: "abelian", params: &[], range: "", note: "all de^i = 0" },
];

pub fn catalog_entries() -> &'static [CatalogEntry] {
    ENTRIES
}

fn c(s: &str) -> Scalar {
    parse_scalar(s).expect("catalog constant")
}

fn forms(rows: [&str; 6]) -> Vec<KForm> {
    rows.iter().map(|r| KForm::parse_degree(r, 2).expect("catalog form")).collect()
}

/// Rows whose coefficients are all constant multiples of r.
fn scaled(rows: [&str; 6], r: &Scalar) -> Vec<KForm> {
    forms(rows).iter().map(|f| f.scale(r)).collect()
}

fn lookup(params: &[(String, Scalar)], name: &str, default: Scalar) -> Scalar {
    params.iter().find(|(k, _)| k == name).map(|(_, v)| v.clone()).unwrap_or(default)
}

fn out_of_range(algebra: &str, detail: impl Into<String>) -> LieError {
    LieError::ParamOutOfRange { algebra: algebra.to_string(), detail: detail.into() }
}

/// The catalog algebra `name` with parameters substituted (defaults r = 1,
/// s = t = 0).
pub fn catalog(name: &str, params: &[(String, Scalar)]) -> Result<LieAlgebra, LieError> {
    let entry = ENTRIES.iter().find(|e| e.name == name).ok_or_else(|| LieError::UnknownName(name.into()))?;
    for (k, _) in params {
        if !entry.params.contains(&k.as_str()) {
            return Err(LieError::UnknownParam { algebra: name.into(), param: k.clone() });
        }
    }
    let r = lookup(params, "r", Scalar::one());
    if entry.params.contains(&"r") && r.signum() <= 0 {
        return Err(out_of_range(name, "r must be positive"));
    }
    let z = "0";
    let de = match name {
        "su2su2" => forms(["e^{2,3}", "-e^{1,3}", "e^{1,2}", "e^{5,6}", "-e^{4,6}", "e^{4,5}"]),
        "abelian" => forms([z; 6]),
        "a6_99" => forms([
            "5*e^{1,6} + e^{2,5} + e^{3,4}",
            "4*e^{2,6} + e^{3,5}",
            "3*e^{3,6} + e^{4,5}",
            "2*e^{4,6}",
            "e^{5,6}",
            z,
        ]),
        "s1" => scaled(
            [
                "1/(2*sqrt(2))*e^{1,6}",
                "1/(2*sqrt(2))*e^{2,6}",
                "1/(2*sqrt(2))*e^{3,6}",
                "1/(2*sqrt(2))*e^{4,6}",
                "-1/sqrt(2)*e^{1,2} - 1/sqrt(2)*e^{3,4} + 1/sqrt(2)*e^{5,6}",
                z,
            ],
            &r,
        ),
        "s2" => scaled(
            [
                "2*sqrt(2)/sqrt(105)*e^{1,6}",
                "sqrt(3)/sqrt(70)*e^{2,6}",
                "-2/sqrt(7)*e^{1,2} + sqrt(7)/sqrt(30)*e^{3,6}",
                "2*sqrt(3)/sqrt(70)*e^{4,6}",
                "-sqrt(2)/sqrt(7)*e^{1,4} - 2/sqrt(7)*e^{2,3} + sqrt(10)/sqrt(21)*e^{5,6}",
                z,
            ],
            &r,
        ),
        "s3" => scaled(
            [
                "1/sqrt(55)*e^{1,6}",
                "2/sqrt(55)*e^{2,6}",
                "-sqrt(6)/sqrt(11)*e^{1,2} + 3/sqrt(55)*e^{3,6}",
                "-sqrt(6)/sqrt(11)*e^{1,3} + 4/sqrt(55)*e^{4,6}",
                "-2/sqrt(11)*e^{1,4} - 2/sqrt(11)*e^{2,3} + 5/sqrt(55)*e^{5,6}",
                z,
            ],
            &r,
        ),
        "s4" => scaled(
            [
                "sqrt(6)/30*e^{1,6}",
                "3*sqrt(6)/20*e^{2,6}",
                "-1/sqrt(2)*e^{1,2} + 11*sqrt(6)/60*e^{3,6}",
                "-sqrt(2)/sqrt(3)*e^{1,3} + 13*sqrt(6)/60*e^{4,6}",
                "-1/sqrt(2)*e^{1,4} + sqrt(6)/4*e^{5,6}",
                z,
            ],
            &r,
        ),
        "s5" => scaled(
            [
                "1/(3*sqrt(2))*e^{1,6}",
                "1/(2*sqrt(2))*e^{2,6}",
                "1/(2*sqrt(2))*e^{3,6}",
                "-1/sqrt(2)*e^{1,2} + 5/(6*sqrt(2))*e^{4,6}",
                "-1/sqrt(2)*e^{1,3} + 5/(6*sqrt(2))*e^{5,6}",
                z,
            ],
            &r,
        ),
        "s6" => scaled(
            [
                "1/(2*sqrt(6))*e^{1,6}",
                "1/(2*sqrt(6))*e^{2,6}",
                "-sqrt(2)/sqrt(3)*e^{1,2} + 1/sqrt(6)*e^{3,6}",
                "-1/sqrt(2)*e^{1,3} + sqrt(6)/4*e^{4,6}",
                "-1/sqrt(2)*e^{2,3} + sqrt(6)/4*e^{5,6}",
                z,
            ],
            &r,
        ),
        "s7" => scaled(
            [
                "1/sqrt(39)*e^{1,6}",
                "2/sqrt(39)*e^{2,6}",
                "-sqrt(2)/sqrt(3)*e^{1,2} + 3/sqrt(39)*e^{3,6}",
                "-sqrt(2)/sqrt(3)*e^{1,3} + 4/sqrt(39)*e^{4,6}",
                "3/sqrt(39)*e^{5,6}",
                z,
            ],
            &r,
        ),
        "s8" => scaled(
            [
                "sqrt(2)/sqrt(21)*e^{1,6}",
                "sqrt(2)/sqrt(21)*e^{2,6}",
                "-sqrt(2)/sqrt(3)*e^{1,2} + 2*sqrt(2)/sqrt(21)*e^{3,6}",
                "sqrt(3)/sqrt(14)*e^{4,6}",
                "sqrt(3)/sqrt(14)*e^{5,6}",
                z,
            ],
            &r,
        ),
        "s9" => scaled(
            [
                "1/sqrt(5)*e^{1,6}",
                "1/sqrt(5)*e^{2,6}",
                "1/sqrt(5)*e^{3,6}",
                "1/sqrt(5)*e^{4,6}",
                "1/sqrt(5)*e^{5,6}",
                z,
            ],
            &r,
        ),
        "s10" => {
            let t = lookup(params, "t", Scalar::zero());
            let max = c("1/sqrt(22)");
            if t.signum() < 0 || t.cmp_value(&max) == Ordering::Greater {
                return Err(out_of_range(name, format!("t = {} outside [0, 1/sqrt(22)]", t)));
            }
            let u = (&c("1/2") - &(&c("11") * &(&t * &t))).sqrt();
            let e = |s: &str| KForm::parse_degree(s, 2).expect("basis");
            let k = c("1/sqrt(33)");
            let de = vec![
                e("e^{1,5}").scale(&(&c("2") * &k)).add(&e("e^{1,6}").scale(&t)).add(&e("e^{2,6}").scale(&u)),
                e("e^{2,5}").scale(&(&c("2") * &k)).add(&e("e^{1,6}").scale(&u)).add(&e("e^{2,6}").scale(&t)),
                e("e^{1,2}")
                    .scale(&c("-sqrt(2)/sqrt(3)"))
                    .add(&e("e^{3,5}").scale(&(&c("4") * &k)))
                    .add(&e("e^{3,6}").scale(&(&c("2") * &t))),
                e("e^{4,5}").scale(&(&c("3") * &k)).add(&e("e^{4,6}").scale(&(&c("-4") * &t))),
                KForm::zero(2),
                KForm::zero(2),
            ];
            de.iter().map(|f| f.scale(&r)).collect()
        }
        "s11" => scaled(
            [
                "1/sqrt(30)*e^{1,5} + 3/sqrt(30)*e^{1,6}",
                "2/sqrt(30)*e^{2,5} - 4/sqrt(30)*e^{2,6}",
                "-sqrt(2)/sqrt(3)*e^{1,2} + 3/sqrt(30)*e^{3,5} - 1/sqrt(30)*e^{3,6}",
                "-sqrt(2)/sqrt(3)*e^{1,3} + 4/sqrt(30)*e^{4,5} + 2/sqrt(30)*e^{4,6}",
                z,
                z,
            ],
            &r,
        ),
        "s12" => {
            let s = lookup(params, "s", Scalar::zero());
            let t = lookup(params, "t", Scalar::zero());
            if s.signum() < 0 || s.cmp_value(&t) == Ordering::Greater || t.cmp_value(&Scalar::one()) == Ordering::Greater {
                return Err(out_of_range(name, format!("need 0 <= s <= t <= 1, got s = {}, t = {}", s, t)));
            }
            let n = (&(&Scalar::one() + &(&t * &t)) + &(&s * &s)).sqrt();
            let den = (&Scalar::int(2) * &n).inv().expect("positive");
            let one = Scalar::one();
            let k = [
                &(&(&one + &s) + &t) * &den,
                &(&(&one - &s) - &t) * &den,
                &(&(&t - &s) - &one) * &den,
                &(&(&s - &t) - &one) * &den,
            ];
            let half = Scalar::ratio(1, 2);
            let mut de = Vec::new();
            for (i, ki) in k.iter().enumerate() {
                let i = i + 1;
                let a = KForm::parse_degree(&format!("e^{{{},5}}", i), 2).unwrap().scale(&half);
                let b = KForm::parse_degree(&format!("e^{{{},6}}", i), 2).unwrap().scale(ki);
                de.push(a.add(&b).scale(&r));
            }
            de.push(KForm::zero(2));
            de.push(KForm::zero(2));
            de
        }
        "s13" => scaled(
            [
                "1/sqrt(3)*e^{1,4} - 2/sqrt(6)*e^{1,6}",
                "1/sqrt(3)*e^{2,4} + 1/sqrt(2)*e^{2,5} + 1/sqrt(6)*e^{2,6}",
                "1/sqrt(3)*e^{3,4} - 1/sqrt(2)*e^{3,5} + 1/sqrt(6)*e^{3,6}",
                z,
                z,
                z,
            ],
            &r,
        ),
        _ => unreachable!("entry list and match agree"),
    };
    let mut used: Vec<(String, Scalar)> = Vec::new();
    for p in entry.params {
        let default = if *p == "r" { Scalar::one() } else { Scalar::zero() };
        used.push((p.to_string(), lookup(params, p, default)));
    }
    Ok(LieAlgebra::new(name, de)?.with_params(used))
}

/// Parses `name[,param=value…]`, where values use the scalar grammar or the
/// presets `t=branch` / `t=max` for s10.
pub fn parse_algebra_spec(spec: &str) -> Result<LieAlgebra, LieError> {
    let mut parts = spec.split(',');
    let name = parts.next().unwrap_or("").trim();
    let mut params = Vec::new();
    for p in parts {
        let (k, v) = p.split_once('=').ok_or_else(|| LieError::Parse {
            line: 1,
            message: format!("expected param=value, got '{}'", p),
        })?;
        let (k, v) = (k.trim(), v.trim());
        let value = match (name, k, v) {
            ("s10", "t", "branch") => c("7/(2*sqrt(330))"),
            ("s10", "t", "max") => c("1/sqrt(22)"),
            _ => parse_scalar(v).map_err(|e| LieError::Parse { line: 1, message: e.to_string() })?,
        };
        params.push((k.to_string(), value));
    }
    catalog(name, &params)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(s: &str) -> KForm {
        KForm::parse(s).unwrap()
    }

    #[test]
    fn every_entry_satisfies_jacobi() {
        for e in catalog_entries() {
            let g = catalog(e.name, &[]).unwrap();
            assert!(g.check_jacobi(), "{}", e.name);
            assert!(g.is_exact(), "{}", e.name);
        }
        for t in ["0", "7/(2*sqrt(330))", "1/sqrt(22)", "1/10"] {
            assert!(catalog("s10", &[("t".into(), c(t))]).is_ok(), "s10 t={}", t);
        }
        for (s, t) in [("0", "0"), ("1", "1"), ("1/3", "1/2"), ("0", "3/4")] {
            assert!(catalog("s12", &[("s".into(), c(s)), ("t".into(), c(t))]).is_ok());
        }
    }

    #[test]
    fn documented_examples() {
        assert_eq!(catalog("su2su2", &[]).unwrap().de(4), &f("e^{5,6}"));
        let s9 = catalog("s9", &[("r".into(), c("sqrt(5)"))]).unwrap();
        for i in 1..=5 {
            assert_eq!(s9.de(i), &f(&format!("e^{{{},6}}", i)));
        }
        assert!(s9.de(6).is_zero());
        let ab = catalog("abelian", &[]).unwrap();
        assert!((1..=6).all(|i| ab.de(i).is_zero()));
    }

    #[test]
    fn ranges_and_names() {
        assert!(matches!(catalog("s14", &[]), Err(LieError::UnknownName(_))));
        assert!(matches!(
            catalog("s10", &[("t".into(), c("1/4"))]),
            Err(LieError::ParamOutOfRange { .. })
        ));
        assert!(matches!(
            catalog("s12", &[("s".into(), c("1/2")), ("t".into(), c("1/3"))]),
            Err(LieError::ParamOutOfRange { .. })
        ));
        assert!(matches!(catalog("s1", &[("t".into(), c("0"))]), Err(LieError::UnknownParam { .. })));
        assert!(matches!(catalog("s1", &[("r".into(), c("-1"))]), Err(LieError::ParamOutOfRange { .. })));
    }

    #[test]
    fn spec_strings() {
        let g = parse_algebra_spec("s10,t=branch").unwrap();
        assert_eq!(g.params()[1].1, c("7/(2*sqrt(330))"));
        let h = parse_algebra_spec("s12,s=1/3,t=1/2,r=2").unwrap();
        assert_eq!(h.params()[0].1, Scalar::int(2));
        assert!(parse_algebra_spec("s10,t").is_err());
    }

    #[test]
    fn closed_one_forms_of_s12() {
        let g = catalog("s12", &[]).unwrap();
        let closed = g.closed_forms(1);
        let span: Vec<KForm> = closed.clone();
        assert_eq!(span.len(), 2);
        for target in [f("e^{5}"), f("e^{6}")] {
            // target lies in the span: the 2 closed forms are e5, e6 up to basis change
            let m = crate::linalg::Matrix::from_rows(
                span.iter().map(|s| s.to_vector()).chain([target.to_vector()]).collect(),
            );
            assert_eq!(m.rank(), 2);
        }
    }
}
