use proptest::prelude::*;
use su3_groebner::{
    groebner_basis, parse_poly, rat, reduce_by, Budget, GbConfig, Ideal, Mono, MonomialOrder, Poly, Vars,
};

fn polys(v: &Vars, src: &[&str]) -> Vec<Poly> {
    src.iter().map(|s| parse_poly(s, v).unwrap()).collect()
}

fn shown(gb: &[Poly]) -> Vec<String> {
    gb.iter().map(|p| p.to_string()).collect()
}

fn spoly(f: &Poly, g: &Poly, order: MonomialOrder) -> Poly {
    let (mf, cf) = f.leading_term(&order).unwrap();
    let (mg, cg) = g.leading_term(&order).unwrap();
    let n = f.vars().len();
    let (df, dg) = (mf.dense(n), mg.dense(n));
    let l: Vec<u32> = df.iter().zip(&dg).map(|(a, b)| *a.max(b)).collect();
    let l = Mono::from_exponents(&l);
    let a = f.mul_mono(&l.div(mf).unwrap(), &(dashu_ratio::RBig::ONE / cf));
    let b = g.mul_mono(&l.div(mg).unwrap(), &(dashu_ratio::RBig::ONE / cg));
    &a - &b
}

fn assert_groebner(gens: &[Poly], order: MonomialOrder) -> Vec<Poly> {
    let gb = groebner_basis(gens, &GbConfig::new(order)).unwrap().basis;
    for g in gens {
        assert!(reduce_by(g, &gb, order).unwrap().is_zero(), "generator {} not in GB ideal", g);
    }
    for i in 0..gb.len() {
        for j in i + 1..gb.len() {
            let s = spoly(&gb[i], &gb[j], order);
            assert!(reduce_by(&s, &gb, order).unwrap().is_zero(), "S({}, {}) does not reduce to 0", gb[i], gb[j]);
        }
    }
    gb
}

#[test]
fn lex_example() {
    let v = Vars::new(["x", "y"]);
    let gb = assert_groebner(&polys(&v, &["x^2 - 1", "x*y - 1"]), MonomialOrder::Lex);
    assert_eq!(shown(&gb), ["y^2 - 1", "x - y"]);
}

#[test]
fn trivial_bases() {
    let v = Vars::new(["x", "y"]);
    for order in [MonomialOrder::Grevlex, MonomialOrder::Lex] {
        assert_eq!(shown(&assert_groebner(&polys(&v, &["x"]), order)), ["x"]);
        assert_eq!(shown(&assert_groebner(&polys(&v, &["x", "1 - x"]), order)), ["1"]);
    }
}

#[test]
fn cyclic_four() {
    let v = Vars::new(["a", "b", "c", "d"]);
    let gens = polys(
        &v,
        &["a + b + c + d", "a*b + b*c + c*d + d*a", "a*b*c + b*c*d + c*d*a + d*a*b", "a*b*c*d - 1"],
    );
    let gb = assert_groebner(&gens, MonomialOrder::Grevlex);
    assert_eq!(gb.len(), 7);
    assert_groebner(&gens, MonomialOrder::Lex);
}

#[test]
fn katsura_three_is_zero_dimensional() {
    let v = Vars::new(["x0", "x1", "x2", "x3"]);
    let gens = polys(
        &v,
        &[
            "x0 + 2*x1 + 2*x2 + 2*x3 - 1",
            "x0^2 + 2*x1^2 + 2*x2^2 + 2*x3^2 - x0",
            "2*x0*x1 + 2*x1*x2 + 2*x2*x3 - x1",
            "x1^2 + 2*x0*x2 + 2*x1*x3 - x2",
        ],
    );
    let gb = assert_groebner(&gens, MonomialOrder::Lex);
    // the last element is univariate in x3 of degree 8 (the Bezout bound)
    let first = &gb[0];
    assert_eq!(first.support(), vec![3]);
    assert_eq!(first.degree_in(3), 8);
}

#[test]
fn quotient_soundness_on_a_cubic() {
    let v = Vars::new(["x", "y", "z"]);
    let b = Budget::default();
    let q = Ideal::new(&v, polys(&v, &["x^2*y - z^3", "x*z^2 - y^2*z"]));
    let f = parse_poly("x*z", &v).unwrap();
    let quot = q.quotient(&f, &b).unwrap();
    for g in quot.generators() {
        assert!(q.contains(&(g * &f), &b).unwrap(), "{} * f not in Q", g);
    }
    for g in q.generators() {
        assert!(quot.contains(g, &b).unwrap());
    }
}

#[test]
fn tiny_budget_fails_loudly() {
    let v = Vars::new(["a", "b", "c", "d", "e"]);
    let gens = polys(
        &v,
        &[
            "a + b + c + d + e",
            "a*b + b*c + c*d + d*e + e*a",
            "a*b*c + b*c*d + c*d*e + d*e*a + e*a*b",
            "a*b*c*d + b*c*d*e + c*d*e*a + d*e*a*b + e*a*b*c",
            "a*b*c*d*e - 1",
        ],
    );
    let cfg = GbConfig::new(MonomialOrder::Lex).with_budget(Budget::new(std::time::Duration::ZERO, 1 << 30));
    let err = groebner_basis(&gens, &cfg).unwrap_err();
    assert!(err.to_string().contains("budget"));
}

fn arb_poly(v: Vars) -> impl Strategy<Value = Poly> {
    let term = (0u32..3, 0u32..3, 0u32..2, -3i64..4);
    prop::collection::vec(term, 1..4).prop_map(move |ts| {
        Poly::from_terms(&v, ts.into_iter().map(|(a, b, c, k)| (Mono::from_exponents(&[a, b, c]), rat(k, 1))))
    })
}

fn vars3() -> Vars {
    Vars::new(["x", "y", "z"])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn generators_reduce_to_zero(gens in prop::collection::vec(arb_poly(vars3()), 1..4)) {
        let gens: Vec<Poly> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        prop_assume!(!gens.is_empty());
        assert_groebner(&gens, MonomialOrder::Grevlex);
    }

    #[test]
    fn reduced_basis_ignores_generator_order(gens in prop::collection::vec(arb_poly(vars3()), 2..4)) {
        let gens: Vec<Poly> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        prop_assume!(gens.len() >= 2);
        let mut rev = gens.clone();
        rev.reverse();
        let cfg = GbConfig::new(MonomialOrder::Grevlex);
        prop_assert_eq!(groebner_basis(&gens, &cfg).unwrap().basis, groebner_basis(&rev, &cfg).unwrap().basis);
    }

    #[test]
    fn saturation_contains_ideal(gens in prop::collection::vec(arb_poly(vars3()), 1..3), f in arb_poly(vars3())) {
        prop_assume!(!f.is_zero());
        let v = vars3();
        let b = Budget::default();
        let i = Ideal::new(&v, gens);
        let sat = i.saturate(&f, &b).unwrap();
        for g in i.generators() {
            prop_assert!(sat.contains(g, &b).unwrap());
        }
    }

    #[test]
    fn quotient_times_f_lies_in_ideal(gens in prop::collection::vec(arb_poly(vars3()), 1..3), f in arb_poly(vars3())) {
        prop_assume!(!f.is_zero());
        let v = vars3();
        let b = Budget::default();
        let i = Ideal::new(&v, gens);
        let q = i.quotient(&f, &b).unwrap();
        for g in q.generators() {
            prop_assert!(i.contains(&(g * &f), &b).unwrap());
        }
    }
}
