use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::budget::{Budget, GroebnerError};
use crate::engine::{groebner_basis, reduce_by, GbConfig, Groebner};
use crate::order::MonomialOrder;
use crate::poly::{Poly, Vars};

/// An ideal given by generators, with reduced Gröbner bases cached per order.
#[derive(Clone, Debug)]
pub struct Ideal {
    vars: Vars,
    gens: Vec<Poly>,
    cache: Arc<Mutex<HashMap<MonomialOrder, Arc<Groebner>>>>,
}

impl Ideal {
    pub fn new(vars: &Vars, gens: impl IntoIterator<Item = Poly>) -> Self {
        let gens = gens
            .into_iter()
            .filter(|g| !g.is_zero())
            .map(|g| g.with_vars(vars))
            .collect();
        Ideal { vars: vars.clone(), gens, cache: Arc::default() }
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn generators(&self) -> &[Poly] {
        &self.gens
    }

    /// Reduced Gröbner basis for `order` under `budget`; cached on success.
    pub fn groebner(&self, order: MonomialOrder, budget: &Budget) -> Result<Arc<Groebner>, GroebnerError> {
        if let Some(gb) = self.cache.lock().expect("cache poisoned").get(&order) {
            return Ok(gb.clone());
        }
        let cfg = GbConfig::new(order).with_budget(*budget);
        let gb = Arc::new(if self.gens.is_empty() {
            Groebner { vars: self.vars.clone(), order, basis: Vec::new(), stats: Default::default() }
        } else {
            groebner_basis(&self.gens, &cfg)?
        });
        self.cache.lock().expect("cache poisoned").entry(order).or_insert_with(|| gb.clone());
        Ok(gb)
    }

    pub fn normal_form(&self, f: &Poly, order: MonomialOrder, budget: &Budget) -> Result<Poly, GroebnerError> {
        let gb = self.groebner(order, budget)?;
        reduce_by(&f.clone().with_vars(&self.vars), &gb.basis, order)
    }

    pub fn contains(&self, f: &Poly, budget: &Budget) -> Result<bool, GroebnerError> {
        Ok(self.normal_form(f, MonomialOrder::Grevlex, budget)?.is_zero())
    }

    pub fn is_unit(&self, budget: &Budget) -> Result<bool, GroebnerError> {
        Ok(self.groebner(MonomialOrder::Grevlex, budget)?.is_unit())
    }

    /// `self : ⟨f⟩`, via `(self ∩ ⟨f⟩) / f`.
    pub fn quotient(&self, f: &Poly, budget: &Budget) -> Result<Ideal, GroebnerError> {
        if f.is_zero() {
            return Err(GroebnerError::ZeroPolynomial);
        }
        let f = f.clone().with_vars(&self.vars);
        let (ext, lift) = self.extend("_t");
        let t = Poly::var(&ext, 0);
        let one_minus_t = &Poly::constant_in(&ext, dashu_ratio::RBig::ONE) - &t;
        let mut gens: Vec<Poly> = self.gens.iter().map(|g| &t * &lift(g)).collect();
        gens.push(&one_minus_t * &lift(&f));
        let inter = eliminate_first(&ext, gens, budget)?;
        let quot = inter
            .iter()
            .map(|g| {
                let g = drop_first(g, &self.vars);
                g.div_exact(&f).expect("intersection element not divisible by f")
            })
            .collect::<Vec<_>>();
        Ok(Ideal::new(&self.vars, quot))
    }

    /// `self : f^∞`, via `self + ⟨1 - y f⟩` eliminating `y`.
    pub fn saturate(&self, f: &Poly, budget: &Budget) -> Result<Ideal, GroebnerError> {
        if f.is_zero() {
            return Err(GroebnerError::ZeroPolynomial);
        }
        let (ext, lift) = self.extend("_y");
        let y = Poly::var(&ext, 0);
        let mut gens: Vec<Poly> = self.gens.iter().map(&lift).collect();
        gens.push(&Poly::constant_in(&ext, dashu_ratio::RBig::ONE) - &(&y * &lift(f)));
        let elim = eliminate_first(&ext, gens, budget)?;
        Ok(Ideal::new(&self.vars, elim.iter().map(|g| drop_first(g, &self.vars))))
    }

    /// Elimination ideal `self ∩ Q[x_k, …]` dropping the first `k` variables.
    pub fn eliminate(&self, k: usize, budget: &Budget) -> Result<Ideal, GroebnerError> {
        let names: Vec<String> = self.vars.names()[k..].to_vec();
        let rest = Vars::new(names);
        let gb = self.groebner(MonomialOrder::Block(k), budget)?;
        let map: Vec<usize> = (0..self.vars.len()).map(|i| i.saturating_sub(k)).collect();
        let kept = gb
            .basis
            .iter()
            .filter(|g| g.support().iter().all(|&v| v >= k))
            .map(|g| g.remap(&rest, &map));
        Ok(Ideal::new(&rest, kept))
    }

    /// True iff the reduced Gröbner bases (grevlex) coincide.
    pub fn equals(&self, other: &Ideal, budget: &Budget) -> Result<bool, GroebnerError> {
        if self.vars != other.vars {
            return Err(GroebnerError::VariableMismatch);
        }
        let a = self.groebner(MonomialOrder::Grevlex, budget)?;
        let b = other.groebner(MonomialOrder::Grevlex, budget)?;
        Ok(a.basis == b.basis)
    }

    fn extend(&self, name: &str) -> (Vars, impl Fn(&Poly) -> Poly) {
        let mut fresh = name.to_string();
        while self.vars.index_of(&fresh).is_some() {
            fresh.push('_');
        }
        let ext = self.vars.with_prefix([fresh]);
        let map: Vec<usize> = (1..=self.vars.len()).collect();
        let ext2 = ext.clone();
        (ext, move |p: &Poly| p.remap(&ext2, &map))
    }
}

fn eliminate_first(ext: &Vars, gens: Vec<Poly>, budget: &Budget) -> Result<Vec<Poly>, GroebnerError> {
    let cfg = GbConfig::new(MonomialOrder::Block(1)).with_budget(*budget);
    let gens: Vec<Poly> = gens.into_iter().map(|g| g.with_vars(ext)).collect();
    let gb = groebner_basis(&gens, &cfg)?;
    Ok(gb.basis.into_iter().filter(|g| g.degree_in(0) == 0).collect())
}

fn drop_first(p: &Poly, target: &Vars) -> Poly {
    let map: Vec<usize> = (0..=target.len()).map(|i| i.saturating_sub(1)).collect();
    p.remap(target, &map)
}
