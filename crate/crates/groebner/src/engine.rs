//! Buchberger's algorithm over the integers (fraction-free, content-reduced).
//!
//! Monomials are packed as 8-bit exponents in `[u64; 8]`, which bounds the
//! engine to 64 variables and exponents below 128. Pairs are selected by the
//! sugar strategy and pruned with the Gebauer–Möller criteria.

use std::cmp::Ordering;

use dashu_base::{Gcd, UnsignedAbs};
use dashu_int::{IBig, UBig};
use dashu_ratio::RBig;

use crate::budget::{Budget, GroebnerError, Meter};
use crate::order::MonomialOrder;
use crate::poly::{Mono, Poly, Vars};

const WORDS: usize = 8;
const FULL_IN_LOOP: bool = true;
const HIGH: u64 = 0x8080_8080_8080_8080;
const LOW7: u64 = 0x7f7f_7f7f_7f7f_7f7f;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
struct PMono {
    w: [u64; WORDS],
    deg: u32,
}

fn byte_sum(x: u64) -> u32 {
    let y = (x & 0x00ff_00ff_00ff_00ff) + ((x >> 8) & 0x00ff_00ff_00ff_00ff);
    let y = (y & 0x0000_ffff_0000_ffff) + ((y >> 16) & 0x0000_ffff_0000_ffff);
    ((y & 0xffff_ffff) + (y >> 32)) as u32
}

fn nonzero_bytes(x: u64) -> u64 {
    (((x & LOW7) + LOW7) | x) & HIGH
}

impl PMono {
    const ONE: PMono = PMono { w: [0; WORDS], deg: 0 };

    fn from_mono(m: &Mono) -> Result<PMono, GroebnerError> {
        let mut w = [0u64; WORDS];
        for (v, e) in m.factors() {
            if v >= 64 {
                return Err(GroebnerError::TooManyVariables(v + 1));
            }
            if e >= 128 {
                return Err(GroebnerError::ExponentOverflow);
            }
            w[v / 8] |= (e as u64) << (8 * (v % 8));
        }
        Ok(PMono { w, deg: m.degree() })
    }

    fn to_mono(self, nvars: usize) -> Mono {
        let exps: Vec<u32> = (0..nvars).map(|v| self.exp(v)).collect();
        Mono::from_exponents(&exps)
    }

    fn exp(&self, v: usize) -> u32 {
        ((self.w[v / 8] >> (8 * (v % 8))) & 0xff) as u32
    }

    fn mul(&self, o: &PMono) -> Result<PMono, GroebnerError> {
        let mut w = [0u64; WORDS];
        for i in 0..WORDS {
            w[i] = self.w[i] + o.w[i];
            if w[i] & HIGH != 0 {
                return Err(GroebnerError::ExponentOverflow);
            }
        }
        Ok(PMono { w, deg: self.deg + o.deg })
    }

    /// Does `self` divide `o`?
    fn divides(&self, o: &PMono) -> bool {
        if self.deg > o.deg {
            return false;
        }
        (0..WORDS).all(|i| ((o.w[i] | HIGH).wrapping_sub(self.w[i])) & HIGH == HIGH)
    }

    /// `o / self`, assuming divisibility.
    fn quotient_of(&self, o: &PMono) -> PMono {
        let mut w = [0u64; WORDS];
        for i in 0..WORDS {
            w[i] = o.w[i] - self.w[i];
        }
        PMono { w, deg: o.deg - self.deg }
    }

    fn lcm(&self, o: &PMono) -> PMono {
        let mut w = [0u64; WORDS];
        let mut deg = 0;
        for i in 0..WORDS {
            if self.w[i] == 0 && o.w[i] == 0 {
                continue;
            }
            for k in 0..8 {
                let a = (self.w[i] >> (8 * k)) & 0xff;
                let b = (o.w[i] >> (8 * k)) & 0xff;
                let m = a.max(b);
                w[i] |= m << (8 * k);
                deg += m as u32;
            }
        }
        PMono { w, deg }
    }

    fn coprime(&self, o: &PMono) -> bool {
        (0..WORDS).all(|i| nonzero_bytes(self.w[i]) & nonzero_bytes(o.w[i]) == 0)
    }
}

#[derive(Clone, Debug)]
struct OrderCtx {
    kind: MonomialOrder,
    block_mask: [u64; WORDS],
}

impl OrderCtx {
    fn new(kind: MonomialOrder) -> Self {
        let mut block_mask = [0u64; WORDS];
        if let MonomialOrder::Block(k) = kind {
            for v in 0..k.min(64) {
                block_mask[v / 8] |= 0xff << (8 * (v % 8));
            }
        }
        OrderCtx { kind, block_mask }
    }

    fn cmp(&self, a: &PMono, b: &PMono) -> Ordering {
        match self.kind {
            MonomialOrder::Grevlex => a.deg.cmp(&b.deg).then_with(|| revlex(&a.w, &b.w, None)),
            MonomialOrder::Lex => {
                for i in 0..WORDS {
                    if a.w[i] != b.w[i] {
                        let x = a.w[i] ^ b.w[i];
                        let shift = (x.trailing_zeros() / 8) * 8;
                        let ea = (a.w[i] >> shift) & 0xff;
                        let eb = (b.w[i] >> shift) & 0xff;
                        return ea.cmp(&eb);
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::Block(_) => {
                let m = &self.block_mask;
                let d1a: u32 = (0..WORDS).map(|i| byte_sum(a.w[i] & m[i])).sum();
                let d1b: u32 = (0..WORDS).map(|i| byte_sum(b.w[i] & m[i])).sum();
                d1a.cmp(&d1b)
                    .then_with(|| revlex(&a.w, &b.w, Some((m, false))))
                    .then_with(|| (a.deg - d1a).cmp(&(b.deg - d1b)))
                    .then_with(|| revlex(&a.w, &b.w, Some((m, true))))
            }
        }
    }
}

/// Reverse-lexicographic tie break (after degrees compare equal): the monomial
/// with the smaller exponent in the last differing variable is larger.
fn revlex(a: &[u64; WORDS], b: &[u64; WORDS], mask: Option<(&[u64; WORDS], bool)>) -> Ordering {
    for i in (0..WORDS).rev() {
        let (x, y) = match mask {
            None => (a[i], b[i]),
            Some((m, invert)) => {
                let m = if invert { !m[i] } else { m[i] };
                (a[i] & m, b[i] & m)
            }
        };
        if x != y {
            let d = x ^ y;
            let shift = ((63 - d.leading_zeros()) / 8) * 8;
            let ex = (x >> shift) & 0xff;
            let ey = (y >> shift) & 0xff;
            return ey.cmp(&ex);
        }
    }
    Ordering::Equal
}

#[derive(Clone, Debug)]
struct Term {
    m: PMono,
    c: IBig,
}

type IPoly = Vec<Term>;

fn content(p: &[Term]) -> UBig {
    let mut g = UBig::ZERO;
    for t in p {
        g = if g.is_zero() { (&t.c).unsigned_abs() } else { (&g).gcd(&(&t.c).unsigned_abs()) };
        if g.is_one() {
            break;
        }
    }
    g
}

/// Divide out the content and make the leading coefficient positive.
/// Returns the rational factor `f` with `new = f * old`.
fn make_primitive(p: &mut IPoly) -> RBig {
    if p.is_empty() {
        return RBig::ONE;
    }
    let g = content(p);
    let neg = p[0].c < IBig::ZERO;
    let gi = if neg { -IBig::from(g.clone()) } else { IBig::from(g.clone()) };
    if !gi.is_one() {
        for t in p.iter_mut() {
            t.c = &t.c / &gi;
        }
    }
    RBig::from_parts_signed(IBig::ONE, gi)
}

struct Elem {
    p: IPoly,
    sugar: u32,
    active: bool,
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: PMono,
    sugar: u32,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GbStats {
    pub pairs_processed: usize,
    pub pairs_pruned: usize,
    pub zero_reductions: usize,
    pub max_basis_len: usize,
    pub homogeneous: bool,
    pub elapsed_ms: u128,
}

/// Configuration of a single Gröbner basis computation.
#[derive(Clone, Debug)]
pub struct GbConfig {
    pub order: MonomialOrder,
    pub budget: Budget,
    /// Skip S-pairs whose sugar exceeds this degree (truncated basis).
    pub max_degree: Option<u32>,
    /// Stop as soon as a nonzero constant appears (the ideal is the unit ideal).
    pub stop_on_unit: bool,
}

impl GbConfig {
    pub fn new(order: MonomialOrder) -> Self {
        GbConfig { order, budget: Budget::default(), max_degree: None, stop_on_unit: true }
    }

    pub fn with_budget(mut self, budget: Budget) -> Self {
        self.budget = budget;
        self
    }
}

pub(crate) struct Engine {
    nvars: usize,
    ord: OrderCtx,
    meter: Meter,
    basis: Vec<Elem>,
    pairs: Vec<Pair>,
    stats: GbStats,
    steps: u64,
}

impl Engine {
    fn new(nvars: usize, order: MonomialOrder, budget: &Budget) -> Result<Self, GroebnerError> {
        if nvars > 64 {
            return Err(GroebnerError::TooManyVariables(nvars));
        }
        Ok(Engine {
            nvars,
            ord: OrderCtx::new(order),
            meter: budget.start(),
            basis: Vec::new(),
            pairs: Vec::new(),
            stats: GbStats::default(),
            steps: 0,
        })
    }

    fn import(&self, p: &Poly) -> Result<(IPoly, RBig), GroebnerError> {
        // clear denominators
        let mut den = UBig::ONE;
        for (_, c) in p.terms() {
            let d = c.denominator();
            let g = (&den).gcd(d);
            den = &den / &g * d;
        }
        let deni = IBig::from(den.clone());
        let mut out: IPoly = Vec::with_capacity(p.len());
        for (m, c) in p.terms() {
            let n = c.numerator() * &deni / IBig::from(c.denominator().clone());
            out.push(Term { m: PMono::from_mono(m)?, c: n });
        }
        out.sort_by(|a, b| self.ord.cmp(&b.m, &a.m));
        let mut scale = RBig::from(deni);
        scale *= make_primitive(&mut out);
        Ok((out, scale))
    }

    fn export(&self, p: &IPoly, vars: &Vars) -> Poly {
        let lc = RBig::from(p[0].c.clone());
        Poly::from_terms(vars, p.iter().map(|t| (t.m.to_mono(self.nvars), RBig::from(t.c.clone()) / &lc)))
    }

    fn approx_bytes(&self) -> u64 {
        let terms: usize = self.basis.iter().map(|e| e.p.len()).sum();
        (terms as u64) * (std::mem::size_of::<Term>() as u64 + 16) + (self.pairs.len() as u64) * 96
    }

    fn check_budget(&self) -> Result<(), GroebnerError> {
        let live = self.basis.iter().filter(|e| e.active).count();
        self.meter.check(self.approx_bytes(), live, self.pairs.len())
    }

    /// `ca * ma * a - cb * mb * b`, all inputs sorted descending.
    fn lincomb(&self, ca: &IBig, ma: &PMono, a: &[Term], cb: &IBig, mb: &PMono, b: &[Term]) -> Result<IPoly, GroebnerError> {
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let mut next_a = if i < a.len() { Some(ma.mul(&a[0].m)?) } else { None };
        let mut next_b = if j < b.len() { Some(mb.mul(&b[0].m)?) } else { None };
        loop {
            match (next_a, next_b) {
                (None, None) => break,
                (Some(x), None) => {
                    out.push(Term { m: x, c: ca * &a[i].c });
                    i += 1;
                    next_a = if i < a.len() { Some(ma.mul(&a[i].m)?) } else { None };
                }
                (None, Some(y)) => {
                    out.push(Term { m: y, c: -(cb * &b[j].c) });
                    j += 1;
                    next_b = if j < b.len() { Some(mb.mul(&b[j].m)?) } else { None };
                }
                (Some(x), Some(y)) => match self.ord.cmp(&x, &y) {
                    Ordering::Greater => {
                        out.push(Term { m: x, c: ca * &a[i].c });
                        i += 1;
                        next_a = if i < a.len() { Some(ma.mul(&a[i].m)?) } else { None };
                    }
                    Ordering::Less => {
                        out.push(Term { m: y, c: -(cb * &b[j].c) });
                        j += 1;
                        next_b = if j < b.len() { Some(mb.mul(&b[j].m)?) } else { None };
                    }
                    Ordering::Equal => {
                        let c = ca * &a[i].c - cb * &b[j].c;
                        if !c.is_zero() {
                            out.push(Term { m: x, c });
                        }
                        i += 1;
                        j += 1;
                        next_a = if i < a.len() { Some(ma.mul(&a[i].m)?) } else { None };
                        next_b = if j < b.len() { Some(mb.mul(&b[j].m)?) } else { None };
                    }
                },
            }
        }
        Ok(out)
    }

    fn find_reducer(&self, m: &PMono, skip: Option<usize>) -> Option<usize> {
        let mut best: Option<usize> = None;
        for (k, e) in self.basis.iter().enumerate() {
            if !e.active || Some(k) == skip {
                continue;
            }
            if e.p[0].m.divides(m) && best.is_none_or(|b| self.basis[b].p.len() > e.p.len()) {
                best = Some(k);
            }
        }
        best
    }

    /// Reduction of `p` against the active basis (tail included when `full`).
    /// With `track`, also returns `s` such that `result = s * p mod basis`.
    fn reduce(&mut self, mut p: IPoly, skip: Option<usize>, full: bool, track: bool) -> Result<(IPoly, RBig), GroebnerError> {
        let mut scale = RBig::ONE;
        let mut pos = 0;
        let mut since_content = 0u32;
        while pos < p.len() {
            let m = p[pos].m;
            let Some(k) = self.find_reducer(&m, skip) else {
                if !full {
                    break;
                }
                pos += 1;
                continue;
            };
            let g = &self.basis[k].p;
            let lc_g = &g[0].c;
            let lc_p = &p[pos].c;
            let h = IBig::from(lc_g.unsigned_abs().gcd(lc_p.unsigned_abs()));
            let a = lc_g / &h;
            let b = lc_p / &h;
            let q = g[0].m.quotient_of(&m);
            let tail = self.lincomb(&a, &PMono::ONE, &p[pos + 1..], &b, &q, &g[1..])?;
            let mut next: IPoly = Vec::with_capacity(pos + tail.len());
            if a.is_one() {
                next.extend(p.drain(..pos));
            } else {
                next.extend(p.drain(..pos).map(|t| Term { m: t.m, c: t.c * &a }));
            }
            next.extend(tail);
            p = next;
            if track {
                scale *= RBig::from(a);
            }
            since_content += 1;
            if since_content >= 8 {
                let f = make_primitive(&mut p);
                if track {
                    scale *= f;
                }
                since_content = 0;
            }
            self.steps += 1;
            if self.steps % 512 == 0 {
                self.check_budget()?;
            }
        }
        let f = make_primitive(&mut p);
        if track {
            scale *= f;
        }
        Ok((p, scale))
    }

    fn spoly(&self, pair: &Pair) -> Result<IPoly, GroebnerError> {
        let f = &self.basis[pair.i].p;
        let g = &self.basis[pair.j].p;
        let h = IBig::from((&f[0].c).unsigned_abs().gcd((&g[0].c).unsigned_abs()));
        let a = &g[0].c / &h;
        let b = &f[0].c / &h;
        let mf = f[0].m.quotient_of(&pair.lcm);
        let mg = g[0].m.quotient_of(&pair.lcm);
        self.lincomb(&a, &mf, &f[1..], &b, &mg, &g[1..])
    }

    fn pair_sugar(&self, i: usize, j: usize, lcm: &PMono) -> u32 {
        let si = self.basis[i].sugar + lcm.deg - self.basis[i].p[0].m.deg;
        let sj = self.basis[j].sugar + lcm.deg - self.basis[j].p[0].m.deg;
        si.max(sj)
    }

    /// Gebauer–Möller update with the new element at index `h`.
    fn update(&mut self, h: usize) {
        let lm_h = self.basis[h].p[0].m;
        let mut cands: Vec<Pair> = Vec::new();
        for (k, e) in self.basis.iter().enumerate() {
            if k == h || !e.active {
                continue;
            }
            let lcm = lm_h.lcm(&e.p[0].m);
            cands.push(Pair { i: k, j: h, lcm, sugar: 0 });
        }
        for c in cands.iter_mut() {
            c.sugar = self.pair_sugar(c.i, c.j, &c.lcm);
        }
        // chain criterion among the new pairs
        let mut keep: Vec<Pair> = Vec::new();
        for (idx, c) in cands.iter().enumerate() {
            let coprime = self.basis[c.i].p[0].m.coprime(&lm_h);
            if coprime {
                keep.push(c.clone());
                continue;
            }
            let dominated = cands.iter().enumerate().any(|(o, d)| {
                o != idx && d.lcm.divides(&c.lcm) && (d.lcm != c.lcm || o < idx)
            });
            if !dominated {
                keep.push(c.clone());
            }
        }
        // product criterion: coprime pairs served as witnesses above, now drop them
        keep.retain(|c| !self.basis[c.i].p[0].m.coprime(&lm_h));
        self.stats.pairs_pruned += cands.len() - keep.len();
        // prune old pairs
        let old = std::mem::take(&mut self.pairs);
        for p in old {
            let lm_i = self.basis[p.i].p[0].m;
            let lm_j = self.basis[p.j].p[0].m;
            let li = lm_i.lcm(&lm_h);
            let lj = lm_j.lcm(&lm_h);
            if lm_h.divides(&p.lcm) && li != p.lcm && lj != p.lcm {
                self.stats.pairs_pruned += 1;
            } else {
                self.pairs.push(p);
            }
        }
        self.pairs.extend(keep);
        // retire basis elements whose leading monomial is divisible by lm_h
        for k in 0..self.basis.len() {
            if k != h && self.basis[k].active && lm_h.divides(&self.basis[k].p[0].m) {
                self.basis[k].active = false;
            }
        }
    }

    fn add_element(&mut self, p: IPoly, sugar: u32) -> usize {
        self.basis.push(Elem { p, sugar, active: true });
        let h = self.basis.len() - 1;
        self.update(h);
        let live = self.basis.iter().filter(|e| e.active).count();
        self.stats.max_basis_len = self.stats.max_basis_len.max(live);
        h
    }

    fn select_pair(&mut self) -> Option<Pair> {
        if self.pairs.is_empty() {
            return None;
        }
        let mut best = 0;
        for k in 1..self.pairs.len() {
            let (a, b) = (&self.pairs[k], &self.pairs[best]);
            let better = a.sugar < b.sugar || (a.sugar == b.sugar && self.ord.cmp(&a.lcm, &b.lcm) == Ordering::Less);
            if better {
                best = k;
            }
        }
        Some(self.pairs.swap_remove(best))
    }

    fn is_unit(p: &IPoly) -> bool {
        p.len() == 1 && p[0].m.deg == 0
    }

    fn run(&mut self, inputs: Vec<IPoly>, cfg: &GbConfig) -> Result<bool, GroebnerError> {
        let mut inputs = inputs;
        inputs.sort_by(|a, b| self.ord.cmp(&a[0].m, &b[0].m));
        for p in inputs {
            let sugar = p.iter().map(|t| t.m.deg).max().unwrap_or(0);
            let (r, _) = self.reduce(p, None, FULL_IN_LOOP, false)?;
            if r.is_empty() {
                continue;
            }
            if Self::is_unit(&r) && cfg.stop_on_unit {
                return Ok(true);
            }
            self.add_element(r, sugar);
        }
        while let Some(pair) = self.select_pair() {
            if let Some(maxd) = cfg.max_degree {
                if pair.sugar > maxd {
                    continue;
                }
            }
            self.check_budget()?;
            self.stats.pairs_processed += 1;
            let s = self.spoly(&pair)?;
            if s.is_empty() {
                self.stats.zero_reductions += 1;
                continue;
            }
            let (r, _) = self.reduce(s, None, FULL_IN_LOOP, false)?;
            if r.is_empty() {
                self.stats.zero_reductions += 1;
                continue;
            }
            if Self::is_unit(&r) && cfg.stop_on_unit {
                return Ok(true);
            }
            self.add_element(r, pair.sugar);
        }
        Ok(false)
    }

    /// Minimal, fully interreduced basis with positive leading coefficients.
    fn finalize(&mut self) -> Result<Vec<IPoly>, GroebnerError> {
        // minimalize
        let idx: Vec<usize> = (0..self.basis.len()).filter(|&k| self.basis[k].active).collect();
        let mut keep: Vec<usize> = Vec::new();
        for &k in &idx {
            let mk = self.basis[k].p[0].m;
            let redundant = idx.iter().any(|&o| {
                o != k && {
                    let mo = self.basis[o].p[0].m;
                    mo.divides(&mk) && (mo != mk || o < k)
                }
            });
            if !redundant {
                keep.push(k);
            }
        }
        for e in self.basis.iter_mut() {
            e.active = false;
        }
        for &k in &keep {
            self.basis[k].active = true;
        }
        let mut out = Vec::with_capacity(keep.len());
        for &k in &keep {
            let p = self.basis[k].p.clone();
            let (r, _) = self.reduce(p, Some(k), true, false)?;
            out.push((k, r));
        }
        for (k, r) in &out {
            self.basis[*k].p = r.clone();
        }
        let mut polys: Vec<IPoly> = out.into_iter().map(|(_, r)| r).collect();
        polys.sort_by(|a, b| self.ord.cmp(&a[0].m, &b[0].m));
        Ok(polys)
    }
}

fn common_vars(gens: &[Poly]) -> Result<Vars, GroebnerError> {
    let mut vars: Option<Vars> = None;
    for g in gens {
        if g.vars().is_empty() {
            continue;
        }
        match &vars {
            None => vars = Some(g.vars().clone()),
            Some(v) if v == g.vars() => {}
            Some(_) => return Err(GroebnerError::VariableMismatch),
        }
    }
    Ok(vars.unwrap_or_else(Vars::empty))
}

/// Result of a Gröbner basis computation.
#[derive(Clone, Debug)]
pub struct Groebner {
    pub vars: Vars,
    pub order: MonomialOrder,
    /// Reduced, monic, sorted by increasing leading monomial.
    pub basis: Vec<Poly>,
    pub stats: GbStats,
}

impl Groebner {
    pub fn is_unit(&self) -> bool {
        self.basis.len() == 1 && self.basis[0].is_constant() && !self.basis[0].is_zero()
    }
}

/// Reduced Gröbner basis of the ideal generated by `gens`.
pub fn groebner_basis(gens: &[Poly], cfg: &GbConfig) -> Result<Groebner, GroebnerError> {
    let vars = common_vars(gens)?;
    let nvars = vars.len().max(
        gens.iter()
            .flat_map(|g| g.support())
            .max()
            .map_or(0, |m| m + 1),
    );
    let mut eng = Engine::new(nvars, cfg.order, &cfg.budget)?;
    eng.stats.homogeneous = gens.iter().all(Poly::is_homogeneous);
    let mut inputs = Vec::new();
    for g in gens.iter().filter(|g| !g.is_zero()) {
        inputs.push(eng.import(g)?.0);
    }
    if inputs.is_empty() {
        return Ok(Groebner { vars, order: cfg.order, basis: Vec::new(), stats: eng.stats });
    }
    let unit = eng.run(inputs, cfg)?;
    let basis = if unit {
        vec![Poly::constant_in(&vars, RBig::ONE)]
    } else {
        let polys = eng.finalize()?;
        if polys.iter().any(Engine::is_unit) {
            vec![Poly::constant_in(&vars, RBig::ONE)]
        } else {
            polys.iter().map(|p| eng.export(p, &vars)).collect()
        }
    };
    eng.stats.elapsed_ms = eng.meter.elapsed().as_millis();
    Ok(Groebner { vars, order: cfg.order, basis, stats: eng.stats })
}

/// Remainder of `f` on division by `basis` (expected to be a Gröbner basis for
/// `order`); unique when `basis` is reduced.
pub fn reduce_by(f: &Poly, basis: &[Poly], order: MonomialOrder) -> Result<Poly, GroebnerError> {
    if f.is_zero() {
        return Ok(f.clone());
    }
    let mut all: Vec<Poly> = basis.to_vec();
    all.push(f.clone());
    let vars = common_vars(&all)?;
    let nvars = vars.len().max(all.iter().flat_map(|g| g.support()).max().map_or(0, |m| m + 1));
    let mut eng = Engine::new(nvars, order, &Budget::default())?;
    for g in basis.iter().filter(|g| !g.is_zero()) {
        let (p, _) = eng.import(g)?;
        eng.basis.push(Elem { p, sugar: 0, active: true });
    }
    let (p, s0) = eng.import(f)?;
    let (r, s1) = eng.reduce(p, None, true, true)?;
    if r.is_empty() {
        return Ok(Poly::zero_in(&vars));
    }
    // r = s1 * s0 * f  (mod basis)
    let inv = RBig::ONE / (s0 * s1);
    Ok(Poly::from_terms(
        &vars,
        r.iter().map(|t| (t.m.to_mono(nvars), RBig::from(t.c.clone()) * &inv)),
    ))
}
