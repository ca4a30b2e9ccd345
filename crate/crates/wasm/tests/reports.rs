use su3_wasm::{algebra_list, classify_report, einstein_report, obstruct_report};

#[test]
fn lists_every_algebra_with_params() {
    let list = algebra_list();
    assert!(list.lines().any(|l| l == "s12:r,s,t"));
    assert!(list.lines().any(|l| l == "su2su2:"));
}

#[test]
fn einstein_follows_slider_values() {
    for spec in ["s5", "s5,r=3/2", "s12,r=1,s=1/4,t=3/4", "s10,r=1,t=1/10"] {
        let out = einstein_report(spec, "identity").unwrap();
        assert!(out.contains("Einstein: Ric"), "{spec}: {out}");
    }
    assert!(einstein_report("s5,r=2", "identity").unwrap().contains("μ = -4"));
    assert!(einstein_report("su2su2", "jensen").unwrap().contains("Einstein: Ric"));
    assert!(einstein_report("s5", "jensen").unwrap().contains("not Einstein"));
    assert!(einstein_report("s12,s=1,t=0", "identity").is_err());
}

#[test]
fn classifies_the_double_structure() {
    let out = classify_report(
        "su2su2",
        "-e^{14}-e^{25}-e^{36}",
        "1/sqrt(2)*(e^{123}-e^{156}+e^{246}-e^{345}+e^{126}-e^{135}+e^{234}-e^{456})",
    )
    .unwrap();
    assert!(out.contains("class Double"), "{out}");
    assert!(classify_report("su2su2", "e^{1}", "e^{123}").is_err());
}

#[test]
fn obstruction_reports() {
    assert!(obstruct_report("s12,s=1/2,t=1/2", "e^{6}").unwrap().contains("obstructed true"));
    assert!(obstruct_report("su2su2", "").unwrap().contains("no candidate covector obstructs"));
    assert!(obstruct_report("abelian", "e^{1}+e^{2}").unwrap().contains("obstructed false"));
}
