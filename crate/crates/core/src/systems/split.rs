//! Emptiness of `V(I) − V(f₁⋯f_k)` by linear elimination with case splits.
//!
//! At each node an equation `c·x + r = 0` (c, r free of x) is used to
//! eliminate `x`. If `c` is not known to be nonzero the node splits into
//! `c = 0` and `c ≠ 0`. Known-nonzero factors are divided out of every
//! equation, so an equation that becomes a nonzero constant closes the branch.
//! Leaves with no usable linear equation fall back to a Gröbner basis test.

use std::time::Instant;

use su3_groebner::{Budget, GroebnerError, Poly, Vars};

use super::pipeline::saturation_is_unit;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SplitOutcome {
    /// Every branch closed.
    Empty { branches: usize, gb_leaves: usize },
    /// Some leaf's saturated ideal is proper.
    Proper { branch: String },
    /// Ran out of budget or depth.
    Unknown { reason: String, branches: usize },
}

struct Ctx<'a> {
    vars: &'a Vars,
    started: Instant,
    budget: Budget,
    leaf_budget: Budget,
    branches: usize,
    gb_leaves: usize,
    max_depth: usize,
}

#[derive(Clone)]
struct Node {
    eqs: Vec<Poly>,
    nonzero: Vec<Poly>,
    path: Vec<String>,
}

enum Step {
    Closed,
    Open(Node),
}

fn is_nonzero_constant(p: &Poly) -> bool {
    p.is_constant() && !p.is_zero()
}

/// Divides out every known-nonzero factor, repeatedly.
fn strip(mut p: Poly, nonzero: &[Poly]) -> Poly {
    if p.is_zero() {
        return p;
    }
    loop {
        let mut changed = false;
        for f in nonzero {
            if f.is_constant() {
                continue;
            }
            while let Some(q) = p.div_exact(f) {
                p = q;
                changed = true;
            }
        }
        if !changed {
            return p.primitive();
        }
    }
}

/// `c^d · p(x = −r/c)` with `d = deg_x p`.
fn substitute_fraction(p: &Poly, x: usize, c: &Poly, r: &Poly) -> Poly {
    let coeffs = p.coefficients_in(x);
    let d = coeffs.len() - 1;
    if d == 0 {
        return p.clone();
    }
    let neg_r = -r;
    let mut out = Poly::zero_in(p.vars());
    for (k, ck) in coeffs.iter().enumerate() {
        if ck.is_zero() {
            continue;
        }
        out = &out + &(&(ck * &neg_r.pow(k as u32)) * &c.pow((d - k) as u32));
    }
    out
}

impl Node {
    /// Simplifies and detects closed branches.
    fn normalize(mut self) -> Step {
        let mut nonzero = Vec::new();
        for f in std::mem::take(&mut self.nonzero) {
            if f.is_zero() {
                return Step::Closed;
            }
            let f = strip(f, &nonzero);
            if f.is_constant() {
                continue;
            }
            if !nonzero.contains(&f) {
                nonzero.push(f);
            }
        }
        let mut eqs: Vec<Poly> = Vec::new();
        for e in std::mem::take(&mut self.eqs) {
            let e = strip(e, &nonzero);
            if e.is_zero() {
                continue;
            }
            if is_nonzero_constant(&e) {
                return Step::Closed;
            }
            if !eqs.contains(&e) && !eqs.contains(&-&e) {
                eqs.push(e);
            }
        }
        // A nonzero factor that is a multiple of an equation is violated.
        for f in &nonzero {
            if eqs.iter().any(|e| f.div_exact(e).is_some()) {
                return Step::Closed;
            }
        }
        Step::Open(Node { eqs, nonzero, path: self.path })
    }

    fn eliminate(&self, x: usize, c: &Poly, r: &Poly, vars: &Vars, label: String) -> Node {
        let mut eqs = Vec::with_capacity(self.eqs.len());
        for e in &self.eqs {
            eqs.push(substitute_fraction(e, x, c, r));
        }
        let mut nonzero: Vec<Poly> = self.nonzero.iter().map(|f| substitute_fraction(f, x, c, r)).collect();
        if !c.is_constant() {
            nonzero.push(c.clone());
        }
        let mut path = self.path.clone();
        path.push(format!("{} := {}", vars.name(x), label));
        Node { eqs, nonzero, path }
    }
}

/// Best linear pivot: `(equation index, variable, c, r, needs_split)`.
fn pick_pivot(node: &Node) -> Option<(usize, usize, Poly, Poly, bool)> {
    let mut best: Option<((bool, usize, usize), (usize, usize, Poly, Poly, bool))> = None;
    for (i, e) in node.eqs.iter().enumerate() {
        for x in e.support() {
            if e.degree_in(x) != 1 {
                continue;
            }
            let cs = e.coefficients_in(x);
            let (r, c) = (cs[0].clone(), cs[1].clone());
            let stripped = strip(c.clone(), &node.nonzero);
            let split = !stripped.is_constant();
            let key = (split, stripped.len(), r.len() + c.len());
            if best.as_ref().is_none_or(|(k, _)| key < *k) {
                best = Some((key, (i, x, c, r, split)));
            }
        }
    }
    best.map(|(_, v)| v)
}

/// The variable occurring in the most equations, among those not yet known
/// to be nonzero.
fn busiest_variable(node: &Node, vars: &Vars) -> Option<usize> {
    let mut count = vec![0usize; vars.len()];
    for e in &node.eqs {
        for x in e.support() {
            count[x] += 1;
        }
    }
    (0..vars.len())
        .filter(|&x| count[x] > 0 && !node.nonzero.contains(&Poly::var(vars, x)))
        .max_by_key(|&x| count[x])
}

/// A variable dividing some equation that is not known to be nonzero.
fn pick_monomial_factor(node: &Node, vars: &Vars) -> Option<usize> {
    for e in &node.eqs {
        for x in e.support() {
            let xv = Poly::var(vars, x);
            if !node.nonzero.contains(&xv) && e.div_exact(&xv).is_some() {
                return Some(x);
            }
        }
    }
    None
}

impl Ctx<'_> {
    fn out_of_time(&self) -> bool {
        self.started.elapsed() > self.budget.time
    }

    fn solve(&mut self, node: Node, depth: usize) -> SplitOutcome {
        self.branches += 1;
        let node = match node.normalize() {
            Step::Closed => return self.empty(),
            Step::Open(n) => n,
        };
        if self.out_of_time() || depth > self.max_depth {
            return SplitOutcome::Unknown {
                reason: if depth > self.max_depth { "split depth".into() } else { "time".into() },
                branches: self.branches,
            };
        }
        if node.eqs.is_empty() {
            return SplitOutcome::Proper { branch: node.path.join(", ") };
        }
        if let Some((i, x, c, r, split)) = pick_pivot(&node) {
            if !split {
                let label = format!("from equation {}", i);
                return self.solve(node.eliminate(x, &c, &r, self.vars, label), depth);
            }
            if let Some(v) = pick_monomial_factor(&node, self.vars) {
                return self.split(&node, &Poly::var(self.vars, v), depth);
            }
            // With c = 0 the pivot equation reduces to r = 0.
            let mut zero = node.clone();
            zero.eqs[i] = r.clone();
            zero.eqs.push(c.clone());
            zero.path.push(format!("({}) = 0", c));
            let a = self.solve(zero, depth + 1);
            if !matches!(a, SplitOutcome::Empty { .. }) {
                return a;
            }
            let label = format!("from equation {} with ({}) != 0", i, c);
            return self.solve(node.eliminate(x, &c, &r, self.vars, label), depth + 1);
        }
        if let Some(v) = pick_monomial_factor(&node, self.vars) {
            return self.split(&node, &Poly::var(self.vars, v), depth);
        }
        match self.leaf(&node) {
            SplitOutcome::Unknown { .. } if !self.out_of_time() => match busiest_variable(&node, self.vars) {
                Some(v) => self.split(&node, &Poly::var(self.vars, v), depth),
                None => SplitOutcome::Unknown { reason: "no split available".into(), branches: self.branches },
            },
            other => other,
        }
    }

    fn split(&mut self, node: &Node, f: &Poly, depth: usize) -> SplitOutcome {
        let mut zero = node.clone();
        zero.eqs.push(f.clone());
        zero.path.push(format!("{} = 0", f));
        let a = self.solve(zero, depth + 1);
        if !matches!(a, SplitOutcome::Empty { .. }) {
            return a;
        }
        let mut nz = node.clone();
        nz.nonzero.push(f.clone());
        nz.path.push(format!("{} != 0", f));
        self.solve(nz, depth + 1)
    }

    fn leaf(&mut self, node: &Node) -> SplitOutcome {
        self.gb_leaves += 1;
        let remaining = self.budget.time.saturating_sub(self.started.elapsed());
        let budget = Budget { time: remaining.min(self.leaf_budget.time), ..self.leaf_budget };
        match saturation_is_unit(self.vars, &node.eqs, &node.nonzero, &budget) {
            Ok(true) => self.empty(),
            Ok(false) => SplitOutcome::Proper { branch: node.path.join(", ") },
            Err(e @ GroebnerError::ResourceBudgetExceeded { .. }) => {
                SplitOutcome::Unknown { reason: e.to_string(), branches: self.branches }
            }
            Err(e) => SplitOutcome::Unknown { reason: e.to_string(), branches: self.branches },
        }
    }

    fn empty(&self) -> SplitOutcome {
        SplitOutcome::Empty { branches: self.branches, gb_leaves: self.gb_leaves }
    }
}

/// Decides whether `V(eqs) ⊆ V(f₁⋯f_k)`, i.e. whether no point satisfies the
/// equations with every `f_i ≠ 0`.
pub fn split_decide(vars: &Vars, eqs: &[Poly], nonzero: &[Poly], budget: &Budget) -> SplitOutcome {
    let leaf_time = (budget.time / 16).max(std::time::Duration::from_millis(200));
    let mut ctx = Ctx {
        vars,
        started: Instant::now(),
        budget: *budget,
        leaf_budget: Budget { time: leaf_time, ..*budget },
        branches: 0,
        gb_leaves: 0,
        max_depth: 64,
    };
    let node = Node { eqs: eqs.to_vec(), nonzero: nonzero.to_vec(), path: Vec::new() };
    match ctx.solve(node, 0) {
        SplitOutcome::Empty { .. } => ctx.empty(),
        other => other,
    }
}


#[cfg(test)]
mod agreement {
    use super::*;
    use proptest::prelude::*;
    use dashu_ratio::RBig;
    use su3_groebner::Mono;

    fn poly_strategy(nvars: usize) -> impl Strategy<Value = Vec<(Vec<u32>, i64)>> {
        prop::collection::vec((prop::collection::vec(0u32..3, nvars), -3i64..=3), 1..4)
    }

    fn build(vars: &Vars, terms: &[(Vec<u32>, i64)]) -> Poly {
        Poly::from_terms(vars, terms.iter().map(|(e, c)| (Mono::from_exponents(e), RBig::from(*c))))
    }

    proptest! {
        #![proptest_config(ProptestConfig { cases: 128, ..ProptestConfig::default() })]
        #[test]
        fn agrees_with_saturation(
            eqs in prop::collection::vec(poly_strategy(3), 1..4),
            nz in prop::collection::vec(poly_strategy(3), 0..2),
        ) {
            let vars = Vars::new(["x", "y", "z"]);
            let eqs: Vec<Poly> = eqs.iter().map(|t| build(&vars, t)).filter(|p| !p.is_zero()).collect();
            let nz: Vec<Poly> = nz.iter().map(|t| build(&vars, t)).filter(|p| !p.is_zero()).collect();
            prop_assume!(!eqs.is_empty());
            let budget = Budget::minutes(0.05);
            let Ok(unit) = saturation_is_unit(&vars, &eqs, &nz, &budget) else { return Ok(()) };
            match split_decide(&vars, &eqs, &nz, &budget) {
                SplitOutcome::Empty { .. } => prop_assert!(unit, "split says empty, saturation proper"),
                SplitOutcome::Proper { .. } => prop_assert!(!unit, "split says proper, saturation unit"),
                SplitOutcome::Unknown { .. } => {}
            }
        }
    }
}
