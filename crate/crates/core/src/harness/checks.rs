//! The individual theorem checks, one function per theorem, each run on a
//! single ring.

use std::collections::BTreeSet;
use std::sync::Arc;

use super::ctx::RingCtx;
use super::zn::{arithmetic_predicate, Boundary};
use super::{Counterexample, HarnessOptions, TheoremId};
use crate::classify::{
    find_one_triple_zeros, is_prime, is_weakly_one_absorbing_prime, is_weakly_prime, tmm_characterize_with, Property,
    TmmContext, Witness,
};
use crate::error::{Error, Result};
use crate::ideal::{Ideal, IdealLattice};
use crate::ring::{self, isomorphism_search, FiniteRing, Homomorphism};

use Property::{
    OneAbsorbingPrime as OneA, Prime as P, WeaklyOneAbsorbingPrime as W1A, WeaklyPrime as WP,
};

/// Violations kept per ring and theorem.
const MAX_VIOLATIONS: usize = 32;

pub(super) fn parts(id: TheoremId) -> &'static [&'static str] {
    match id {
        TheoremId::Tred => &["radical", "colon"],
        TheoremId::Thom => &["i", "ii"],
        TheoremId::Tfac => &["i", "ii", "iii"],
        TheoremId::Tloc => &["i", "ii"],
        TheoremId::Nql => &["equivalence"],
        TheoremId::Tmm => &["ii", "iii", "iv", "v", "vi"],
        TheoremId::Ttriple => &["i", "ii"],
        TheoremId::ReducedTriple => &["i", "ii"],
        TheoremId::Ttri => &["equivalence"],
        TheoremId::Tcar => &["equivalence"],
        TheoremId::Tcarr => &["equivalence"],
        TheoremId::Pc1 => &["disjunction"],
        TheoremId::Tql => &["equivalence"],
        TheoremId::CorM2 => &["implication"],
        TheoremId::Tmax => &["bound"],
        TheoremId::Tring => &["equivalence"],
        TheoremId::ZnExample => &["predicate"],
    }
}

pub(super) fn provably_vacuous(id: TheoremId, part: &str) -> bool {
    id == TheoremId::Tred && part == "colon"
}

pub(super) fn static_notes(id: TheoremId) -> &'static [&'static str] {
    match id {
        TheoremId::Tred => &["colon: reg(A) = u(A) in a finite ring, so reg(A) - (P u u(A)) is always empty"],
        TheoremId::Tloc => &["ii: S must lie in reg(A) = u(A); sets with zero divisors count as vacuous"],
        TheoremId::ZnExample => &["prime and prime-square n are reported, not asserted"],
        _ => &[],
    }
}

pub(crate) struct Tally {
    id: TheoremId,
    expr: crate::dsl::RingExpr,
    pub tested: Vec<usize>,
    pub vacuous: Vec<usize>,
    pub violations: Vec<Counterexample>,
    pub notes: Vec<String>,
}

impl Tally {
    fn new(id: TheoremId, ctx: &RingCtx) -> Self {
        let k = parts(id).len();
        Tally {
            id,
            expr: ctx.expr.clone(),
            tested: vec![0; k],
            vacuous: vec![0; k],
            violations: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn slot(&self, part: &str) -> usize {
        parts(self.id).iter().position(|&p| p == part).expect("known part")
    }

    fn tested(&mut self, part: &str) {
        let i = self.slot(part);
        self.tested[i] += 1;
    }

    fn vacuous(&mut self, part: &str) {
        let i = self.slot(part);
        self.vacuous[i] += 1;
    }

    fn vacuous_all(&mut self) {
        for v in &mut self.vacuous {
            *v += 1;
        }
    }

    fn violate(&mut self, part: &'static str, ideals: &[&Ideal], elements: Vec<usize>, detail: String) {
        let i = self.slot(part);
        // A violation still counts as a tested instance.
        debug_assert!(self.tested[i] > 0);
        if self.violations.len() < MAX_VIOLATIONS {
            self.violations.push(Counterexample {
                theorem: self.id,
                part,
                ring: self.expr.clone(),
                ideals: ideals.iter().map(|i| i.to_literal_text()).collect(),
                elements,
                detail,
            });
        }
    }

    /// Unwraps a derived-ring construction. A construction that rejects its
    /// input is recorded as a violation; cap errors propagate.
    fn derived<T>(&mut self, part: &'static str, what: &str, r: Result<T>) -> Result<Option<T>> {
        match r {
            Ok(v) => Ok(Some(v)),
            Err(e) if e.is_cap() => Err(e),
            Err(e) => {
                self.tested(part);
                self.violate(part, &[], Vec::new(), format!("{what} rejected: {e}"));
                Ok(None)
            }
        }
    }
}

pub(crate) fn run(id: TheoremId, ctx: &RingCtx, opts: &HarnessOptions) -> Result<Tally> {
    let mut t = Tally::new(id, ctx);
    match id {
        TheoremId::Tred => tred(ctx, &mut t)?,
        TheoremId::Thom => thom(ctx, opts, &mut t)?,
        TheoremId::Tfac => tfac(ctx, &mut t)?,
        TheoremId::Tloc => tloc(ctx, opts, &mut t)?,
        TheoremId::Nql => nql(ctx, &mut t)?,
        TheoremId::Tmm => tmm(ctx, &mut t)?,
        TheoremId::Ttriple => ttriple(ctx, &mut t)?,
        TheoremId::ReducedTriple => reduced_triple(ctx, &mut t)?,
        TheoremId::Ttri => ttri(ctx, opts, &mut t)?,
        TheoremId::Tcar => tcar(ctx, &mut t)?,
        TheoremId::Tcarr => tcarr(ctx, &mut t),
        TheoremId::Pc1 => pc1(ctx, &mut t)?,
        TheoremId::Tql => tql(ctx, &mut t),
        TheoremId::CorM2 => cor_m2(ctx, &mut t),
        TheoremId::Tmax => tmax(ctx, &mut t),
        TheoremId::Tring => tring(ctx, opts, &mut t)?,
        TheoremId::ZnExample => zn_example(ctx, &mut t),
    }
    Ok(t)
}

fn w1ap(p: &Ideal) -> Result<Option<Witness>> {
    Ok(is_weakly_one_absorbing_prime(p)?.witness())
}

fn tred(ctx: &RingCtx, t: &mut Tally) -> Result<()> {
    let r = &ctx.ring;
    let reg = r.regular_elements();
    for (p, rep) in ctx.proper() {
        if !(ctx.reduced && rep.holds(W1A)) {
            t.vacuous_all();
            continue;
        }
        t.tested("radical");
        let rad = p.radical();
        if let Some(w) = is_weakly_prime(&rad)?.witness() {
            t.violate("radical", &[p, &rad], w.elements(), "radical is not weakly prime".into());
        }
        let xs: Vec<usize> = reg.iter().copied().filter(|&x| !p.contains(x) && !r.is_unit(x)).collect();
        if xs.is_empty() {
            t.vacuous("colon");
        }
        for x in xs {
            t.tested("colon");
            let c = p.colon_element(x)?;
            if let Some(w) = is_weakly_prime(&c)?.witness() {
                let mut e = vec![x];
                e.extend(w.elements());
                t.violate("colon", &[p, &c], e, "(P:x) is not weakly prime".into());
            }
        }
    }
    Ok(())
}

fn homomorphisms(ctx: &RingCtx, opts: &HarnessOptions, t: &mut Tally) -> Result<Vec<(String, Homomorphism)>> {
    let r = &ctx.ring;
    let n = r.size();
    let caps = &opts.caps;
    let mut homs = vec![("identity".to_string(), Homomorphism::identity(r))];
    if n <= 12 {
        if let Some(rr) = t.derived("i", "R x R", ring::product(r, r, caps))? {
            let map = (0..n).map(|a| a * n + a).collect();
            homs.push(("diagonal R -> R x R".into(), Homomorphism::new(Arc::clone(r), rr, map)?));
        }
    }
    if n <= 8 {
        if let Some(ext) = t.derived("i", "R x| R", ring::idealization(r, &Ideal::zero(r), caps))? {
            let map = (0..n).map(|a| a * n).collect();
            homs.push(("embedding R -> R x| R".into(), Homomorphism::new(Arc::clone(r), ext, map)?));
        }
    }
    for (q, _) in ctx.proper() {
        if q.is_zero() {
            continue;
        }
        if let Some((_, pi)) = t.derived("ii", "quotient", ring::quotient(r, q))? {
            homs.push((format!("projection R -> R/{}", q.to_literal_text()), pi));
        }
    }
    if let Some((a, b)) = r.product_factors() {
        let nb = b.size();
        let left = (0..n).map(|i| i / nb).collect();
        let right = (0..n).map(|i| i % nb).collect();
        homs.push(("projection to left factor".into(), Homomorphism::new(Arc::clone(r), Arc::clone(a), left)?));
        homs.push(("projection to right factor".into(), Homomorphism::new(Arc::clone(r), Arc::clone(b), right)?));
    }
    Ok(homs)
}

fn thom(ctx: &RingCtx, opts: &HarnessOptions, t: &mut Tally) -> Result<()> {
    for (name, f) in homomorphisms(ctx, opts, t)? {
        let mono = f.is_injective() && f.preserves_nonunits();
        let target_lattice = IdealLattice::enumerate(f.target(), &opts.caps)?;
        for (_, p) in target_lattice.proper() {
            if !(mono && w1ap(p)?.is_none()) {
                t.vacuous("i");
                continue;
            }
            t.tested("i");
            let pre = f.preimage(p)?;
            if let Some(w) = w1ap(&pre)? {
                let detail = format!("{name}: preimage of {} is not weakly 1-absorbing prime", p.display_label());
                t.violate("i", &[&pre], w.elements(), detail);
            }
        }
        let epi = f.is_surjective();
        let kernel = f.kernel();
        for (ps, rep) in ctx.proper() {
            if !(epi && rep.holds(W1A) && kernel.is_subset_of(ps)) {
                t.vacuous("ii");
                continue;
            }
            t.tested("ii");
            let image = f.image(ps)?;
            if !image.is_proper() {
                t.violate("ii", &[ps], Vec::new(), format!("{name}: image is the whole ring"));
            } else if let Some(w) = w1ap(&image)? {
                let detail = format!(
                    "{name}: image {} is not weakly 1-absorbing prime",
                    image.display_label()
                );
                t.violate("ii", &[ps], w.elements(), detail);
            }
        }
    }
    Ok(())
}

fn unit_image_is_all_units(pi: &Homomorphism) -> bool {
    let target = pi.target();
    let lifted: BTreeSet<usize> = pi.source().units().iter().map(|&u| pi.apply(u)).collect();
    lifted == target.units().iter().copied().collect()
}

fn tfac(ctx: &RingCtx, t: &mut Tally) -> Result<()> {
    let r = &ctx.ring;
    let zero_is_1a = ctx.reports[ctx.lattice.zero_index()]
        .as_ref()
        .expect("zero ideal is proper")
        .holds(OneA);
    for (p, rep) in ctx.proper() {
        if zero_is_1a && rep.holds(W1A) {
            t.tested("iii");
            if let Some(w) = rep.witness(OneA) {
                t.violate("iii", &[p], w.elements(), "not 1-absorbing prime".into());
            }
        } else {
            t.vacuous("iii");
        }
    }
    for (q, rq) in ctx.proper() {
        let Some((_, pi)) = t.derived("i", "quotient", ring::quotient(r, q))? else {
            continue;
        };
        let lifts = unit_image_is_all_units(&pi);
        for (p, rp) in ctx.proper() {
            if !q.is_subset_of(p) {
                continue;
            }
            let pq = pi.image(p)?;
            let pq_w1ap = pq.is_proper() && w1ap(&pq)?.is_none();
            if rp.holds(W1A) {
                t.tested("i");
                if !pq_w1ap {
                    let detail = format!("P/Q = {} is not weakly 1-absorbing prime in A/Q", pq.display_label());
                    t.violate("i", &[q, p], Vec::new(), detail);
                }
            } else {
                t.vacuous("i");
            }
            if lifts && rq.holds(W1A) && pq_w1ap {
                t.tested("ii");
                if let Some(w) = rp.witness(W1A) {
                    t.violate("ii", &[q, p], w.elements(), "P is not weakly 1-absorbing prime".into());
                }
            } else {
                t.vacuous("ii");
            }
        }
    }
    Ok(())
}

fn multiplicative_sets(ctx: &RingCtx) -> BTreeSet<Vec<usize>> {
    let r = &ctx.ring;
    let mut sets = BTreeSet::new();
    sets.insert(r.units().to_vec());
    for (p, rep) in ctx.proper() {
        if rep.holds(P) {
            sets.insert(r.elements().filter(|&a| !p.contains(a)).collect());
        }
    }
    for &s in r.nonunits() {
        if r.is_nilpotent(s) {
            continue;
        }
        let mut powers = BTreeSet::new();
        let mut x = r.one();
        while powers.insert(x) {
            x = r.mul(x, s);
        }
        sets.insert(powers.into_iter().collect());
    }
    sets
}

fn tloc(ctx: &RingCtx, opts: &HarnessOptions, t: &mut Tally) -> Result<()> {
    let r = &ctx.ring;
    let n = r.size();
    let reg: BTreeSet<usize> = r.regular_elements().into_iter().collect();
    for s in multiplicative_sets(ctx) {
        let Some((loc, phi)) = t.derived("i", "localization", ring::localization(r, &s, &opts.caps))? else {
            continue;
        };
        let in_s = |a: usize| s.binary_search(&a).is_ok();
        let s_regular = s.iter().all(|a| reg.contains(a));
        let fraction_units: BTreeSet<usize> = r
            .units()
            .iter()
            .flat_map(|&x| {
                let phi = &phi;
                let loc = &loc;
                s.iter().map(move |&d| {
                    let inv = loc.inverse(phi.apply(d)).expect("s/1 is a unit");
                    loc.mul(phi.apply(x), inv)
                })
            })
            .collect();
        let units_are_fractions = fraction_units == loc.units().iter().copied().collect();
        for (p, rep) in ctx.proper() {
            let disjoint = !p.elements().any(in_s);
            let ext = if disjoint { Some(phi.image(p)?) } else { None };
            let ext_w1ap = match &ext {
                Some(e) if e.is_proper() => w1ap(e)?.is_none(),
                _ => false,
            };
            if rep.holds(W1A) && disjoint {
                t.tested("i");
                let e = ext.as_ref().expect("disjoint");
                if !ext_w1ap {
                    let detail = format!(
                        "S = {:?}: S^-1 P = {} is not weakly 1-absorbing prime in {}",
                        s,
                        e.display_label(),
                        loc.expr()
                    );
                    t.violate("i", &[p], Vec::new(), detail);
                }
            } else {
                t.vacuous("i");
            }
            let zp_avoids_s = !(0..n).any(|x| in_s(x) && (0..n).any(|y| !p.contains(y) && p.contains(r.mul(x, y))));
            if s_regular && units_are_fractions && disjoint && ext_w1ap && zp_avoids_s {
                t.tested("ii");
                if let Some(w) = rep.witness(W1A) {
                    t.violate("ii", &[p], w.elements(), format!("S = {s:?}: P is not weakly 1-absorbing prime"));
                }
            } else {
                t.vacuous("ii");
            }
        }
    }
    Ok(())
}

fn nql(ctx: &RingCtx, t: &mut Tally) -> Result<()> {
    let r = &ctx.ring;
    let maximal: Vec<&Ideal> = ctx.lattice.maximal_ideals();
    let ann_maximal: Vec<bool> = r
        .elements()
        .map(|x| {
            let a = Ideal::annihilator(r, x)?;
            Ok(maximal.iter().any(|m| **m == a))
        })
        .collect::<Result<_>>()?;
    let non_ql = !ctx.quasi_local();
    for (p, rep) in ctx.proper() {
        if !(non_ql && p.elements().all(|x| !ann_maximal[x])) {
            t.vacuous("equivalence");
            continue;
        }
        t.tested("equivalence");
        if rep.holds(WP) != rep.holds(W1A) {
            let w = rep.witness(WP).or(rep.witness(W1A)).map(|w| w.elements()).unwrap_or_default();
            let detail = format!("weakly prime = {}, weakly 1-absorbing prime = {}", rep.holds(WP), rep.holds(W1A));
            t.violate("equivalence", &[p], w, detail);
        }
    }
    Ok(())
}

const ROMAN: [&str; 6] = ["i", "ii", "iii", "iv", "v", "vi"];

fn tmm(ctx: &RingCtx, t: &mut Tally) -> Result<()> {
    let tc = TmmContext::new(&ctx.lattice);
    for (p, rep) in ctx.proper() {
        let c = tmm_characterize_with(p, &tc)?;
        debug_assert_eq!(c.get(1), rep.holds(W1A));
        for k in 2..=6 {
            let part = ROMAN[k - 1];
            t.tested(part);
            if c.get(k) != c.get(1) {
                let detail = format!("({part}) = {} but (i) = {}", c.get(k), c.get(1));
                t.violate(part, &[p], Vec::new(), detail);
            }
        }
    }
    Ok(())
}

/// `kills[w]` iff `w·I = 0`.
fn kills(r: &FiniteRing, i: &Ideal) -> Vec<bool> {
    r.elements().map(|w| i.elements().all(|q| r.mul(w, q) == r.zero())).collect()
}

fn ttriple(ctx: &RingCtx, t: &mut Tally) -> Result<()> {
    let r = &ctx.ring;
    for (p, rep) in ctx.proper() {
        if !rep.holds(W1A) {
            t.vacuous_all();
            continue;
        }
        let zeros = find_one_triple_zeros(p)?;
        if zeros.is_empty() {
            t.vacuous_all();
            continue;
        }
        let kp = kills(r, p);
        let p2 = p.product(p)?;
        let kp2 = kills(r, &p2);
        let p3_zero = p2.product(p)?.is_zero();
        for tz in zeros {
            let (x, y, z) = (tz.x, tz.y, tz.z);
            t.tested("i");
            if !kp[r.mul(x, y)] {
                t.violate("i", &[p], vec![x, y, z], "xyP != 0".into());
            }
            let (xz, yz) = (r.mul(x, z), r.mul(y, z));
            if p.contains(xz) || p.contains(yz) {
                t.vacuous("ii");
                continue;
            }
            t.tested("ii");
            let checks = [
                ("xzP", kp[xz]),
                ("yzP", kp[yz]),
                ("xP^2", kp2[x]),
                ("yP^2", kp2[y]),
                ("zP^2", kp2[z]),
                ("P^3", p3_zero),
            ];
            let bad: Vec<&str> = checks.iter().filter(|c| !c.1).map(|c| c.0).collect();
            if !bad.is_empty() {
                t.violate("ii", &[p], vec![x, y, z], format!("nonzero: {}", bad.join(", ")));
            }
        }
    }
    Ok(())
}

fn reduced_triple(ctx: &RingCtx, t: &mut Tally) -> Result<()> {
    let r = &ctx.ring;
    for (p, rep) in ctx.proper() {
        if !(ctx.reduced && rep.holds(W1A) && !rep.holds(OneA)) {
            t.vacuous_all();
            continue;
        }
        for tz in find_one_triple_zeros(p)? {
            let (x, y, z) = (tz.x, tz.y, tz.z);
            let (xz_in, yz_in) = (p.contains(r.mul(x, z)), p.contains(r.mul(y, z)));
            if !xz_in && !yz_in {
                t.tested("i");
                if !p.is_zero() {
                    t.violate("i", &[p], vec![x, y, z], "x,y not in (P:z) but P != 0".into());
                }
            } else {
                t.vacuous("i");
            }
            if p.is_zero() {
                t.vacuous("ii");
            } else {
                t.tested("ii");
                if !xz_in && !yz_in {
                    t.violate("ii", &[p], vec![x, y, z], "neither xz nor yz lies in P".into());
                }
            }
        }
    }
    Ok(())
}

/// Base rings for the idealization check.
const TTRI_MAX_BASE: usize = 16;

fn ttri(ctx: &RingCtx, opts: &HarnessOptions, t: &mut Tally) -> Result<()> {
    let r = &ctx.ring;
    if r.size() > TTRI_MAX_BASE {
        t.vacuous("equivalence");
        return Ok(());
    }
    for (j, _) in ctx.proper() {
        let Some(ext) = t.derived("equivalence", "idealization", ring::idealization(r, j, &opts.caps))? else {
            continue;
        };
        for (p, rep) in ctx.proper() {
            t.tested("equivalence");
            let left = idealization_side(&ext, r, j, p)?;
            let right = base_side(r, j, p, rep.holds(W1A))?;
            if left != right {
                let detail = format!(
                    "J = {}: P x| M weakly 1-absorbing prime = {left}, base criterion = {right}",
                    j.to_literal_text()
                );
                t.violate("equivalence", &[p], Vec::new(), detail);
            }
        }
    }
    Ok(())
}

/// Direct scan of `P ⋉ A/J` inside `A ⋉ A/J`.
pub(crate) fn idealization_side(ext: &Arc<FiniteRing>, base: &Arc<FiniteRing>, j: &Ideal, p: &Ideal) -> Result<bool> {
    let m = ext.size() / base.size();
    debug_assert_eq!(m, base.size() / j.len());
    let elems: Vec<usize> = p.elements().flat_map(|a| (0..m).map(move |u| a * m + u)).collect();
    let pm = Ideal::from_elements(ext, &elems)?;
    Ok(w1ap(&pm)?.is_none())
}

/// `P` weakly 1-absorbing prime, and every nonunit `x, y, z` with `xyz = 0`,
/// `xy ∉ P`, `z ∉ P` has `xy, xz, yz ∈ ann(A/J)`.
pub(crate) fn base_side(base: &Arc<FiniteRing>, j: &Ideal, p: &Ideal, p_w1ap: bool) -> Result<bool> {
    if !p_w1ap {
        return Ok(false);
    }
    let (module, pi) = ring::quotient(base, j)?;
    let ann: Vec<bool> = base
        .elements()
        .map(|a| module.elements().all(|u| module.mul(pi.apply(a), u) == module.zero()))
        .collect();
    let nu = base.nonunits();
    for &x in nu {
        for &y in nu {
            let xy = base.mul(x, y);
            if p.contains(xy) {
                continue;
            }
            for &z in nu {
                if p.contains(z) || base.mul(xy, z) != base.zero() {
                    continue;
                }
                if !(ann[xy] && ann[base.mul(x, z)] && ann[base.mul(y, z)]) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

fn tcar(ctx: &RingCtx, t: &mut Tally) -> Result<()> {
    let r = &ctx.ring;
    let Some((a, b)) = r.product_factors().filter(|(a, b)| !a.is_field() && !b.is_field()) else {
        for _ in ctx.proper() {
            t.vacuous("equivalence");
        }
        return Ok(());
    };
    let nb = b.size();
    for (p, rep) in ctx.proper() {
        if p.is_zero() {
            t.vacuous("equivalence");
            continue;
        }
        t.tested("equivalence");
        let p1: Vec<usize> = a.elements().filter(|&x| p.contains(x * nb + b.zero())).collect();
        let p2: Vec<usize> = b.elements().filter(|&y| p.contains(a.zero() * nb + y)).collect();
        let split = p1.len() * p2.len() == p.len() && p1.iter().all(|&x| p2.iter().all(|&y| p.contains(x * nb + y)));
        let p1 = Ideal::from_elements(a, &p1)?;
        let p2 = Ideal::from_elements(b, &p2)?;
        let prime_in = |i: &Ideal| -> Result<bool> { Ok(i.is_proper() && is_prime(i)?.holds()) };
        let shape = split && ((!p1.is_proper() && prime_in(&p2)?) || (!p2.is_proper() && prime_in(&p1)?));
        let conds = [rep.holds(W1A), shape, rep.holds(P), rep.holds(WP), rep.holds(OneA)];
        if conds.iter().any(|&c| c != conds[0]) {
            let detail = format!("conditions (i)-(v) = {conds:?}");
            t.violate("equivalence", &[p], Vec::new(), detail);
        }
    }
    Ok(())
}

fn flatten(r: &Arc<FiniteRing>, out: &mut Vec<Arc<FiniteRing>>) {
    match r.product_factors() {
        Some((a, b)) => {
            flatten(a, out);
            flatten(b, out);
        }
        None => out.push(Arc::clone(r)),
    }
}

fn failing_ideal(ctx: &RingCtx) -> (Vec<&Ideal>, Vec<usize>) {
    match ctx.first_non_w1ap {
        Some((i, w)) => (vec![ctx.lattice.get(i)], w.elements()),
        None => (Vec::new(), Vec::new()),
    }
}

fn tcarr(ctx: &RingCtx, t: &mut Tally) {
    if ctx.ring.product_factors().is_none() {
        t.vacuous("equivalence");
        return;
    }
    let mut factors = Vec::new();
    flatten(&ctx.ring, &mut factors);
    let lhs = ctx.all_w1ap();
    let rhs = factors.len() == 2 && factors.iter().all(|f| f.is_field());
    t.tested("equivalence");
    if lhs != rhs {
        let (ideals, elems) = failing_ideal(ctx);
        let detail = format!(
            "{} factors; every proper ideal weakly 1-absorbing prime = {lhs}, two fields = {rhs}",
            factors.len()
        );
        t.violate("equivalence", &ideals, elems, detail);
    }
}

fn pc1(ctx: &RingCtx, t: &mut Tally) -> Result<()> {
    if !ctx.all_w1ap() {
        t.vacuous("disjunction");
        return Ok(());
    }
    t.tested("disjunction");
    let r = &ctx.ring;
    let jac = &ctx.jacobson;
    let jac2 = jac.product(jac)?;
    if jac2.is_zero() {
        return Ok(());
    }
    let mut second = Ideal::zero(r).colon(&jac2)? == *jac;
    'outer: for x in jac.elements() {
        for y in jac.elements() {
            let xy = r.mul(x, y);
            if xy != r.zero() && Ideal::annihilator(r, xy)? != *jac {
                second = false;
                break 'outer;
            }
        }
    }
    if !second {
        t.violate("disjunction", &[jac], Vec::new(), "Jac^2 != 0 and Jac != (0:xy) for some xy != 0".into());
    }
    Ok(())
}

fn unique_maximal(ctx: &RingCtx) -> Option<&Ideal> {
    ctx.quasi_local().then(|| ctx.lattice.get(ctx.lattice.maximal_indices()[0]))
}

fn tql(ctx: &RingCtx, t: &mut Tally) {
    let Some(m) = unique_maximal(ctx) else {
        t.vacuous("equivalence");
        return;
    };
    t.tested("equivalence");
    let m3 = m.power(3).is_zero();
    if ctx.all_w1ap() != m3 {
        let (ideals, elems) = failing_ideal(ctx);
        let detail = format!("every proper ideal weakly 1-absorbing prime = {}, m^3 = 0 is {m3}", ctx.all_w1ap());
        t.violate("equivalence", &ideals, elems, detail);
    }
}

fn cor_m2(ctx: &RingCtx, t: &mut Tally) {
    match unique_maximal(ctx) {
        Some(m) if m.power(2).is_zero() => {
            t.tested("implication");
            if let Some((p, rep)) = ctx.proper().find(|(_, rep)| !rep.holds(OneA)) {
                let w = rep.witness(OneA).map(|w| w.elements()).unwrap_or_default();
                t.violate("implication", &[p], w, "m^2 = 0 but P is not 1-absorbing prime".into());
            }
        }
        _ => t.vacuous("implication"),
    }
}

fn tmax(ctx: &RingCtx, t: &mut Tally) {
    if !ctx.all_w1ap() {
        t.vacuous("bound");
        return;
    }
    t.tested("bound");
    let k = ctx.lattice.maximal_indices().len();
    if k > 2 {
        t.violate("bound", &[], Vec::new(), format!("{k} maximal ideals"));
    }
}

/// `A ≅ F₁ × F₂` for fields `F₁, F₂`: two maximal ideals meeting in zero,
/// both quotients fields, and the map `a ↦ (a + m₁, a + m₂)` a bijective
/// homomorphism.
pub(crate) fn is_product_of_two_fields(ctx: &RingCtx, opts: &HarnessOptions) -> Result<bool> {
    let r = &ctx.ring;
    let max = ctx.lattice.maximal_ideals();
    if max.len() != 2 || !max[0].intersect(max[1])?.is_zero() {
        return Ok(false);
    }
    let (f1, p1) = ring::quotient(r, max[0])?;
    let (f2, p2) = ring::quotient(r, max[1])?;
    for f in [&f1, &f2] {
        if !is_field(f, opts)? {
            return Ok(false);
        }
    }
    let prod = ring::product(&f1, &f2, &opts.caps)?;
    let map = r.elements().map(|a| p1.apply(a) * f2.size() + p2.apply(a)).collect();
    let h = match Homomorphism::new(Arc::clone(r), prod, map) {
        Ok(h) => h,
        Err(Error::NotAHomomorphism(_)) => return Ok(false),
        Err(e) => return Err(e),
    };
    Ok(h.is_injective() && h.is_surjective())
}

/// Against `Zp` by isomorphism search when the size is a prime within the
/// search cap; otherwise every nonzero element must be a unit.
fn is_field(f: &Arc<FiniteRing>, opts: &HarnessOptions) -> Result<bool> {
    let n = f.size();
    let prime = n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0);
    if prime && n <= opts.caps.iso_search {
        let zp = ring::zn(n as u64, &opts.caps)?;
        return Ok(isomorphism_search(f, &zp, &opts.caps)?.is_some());
    }
    Ok(f.is_field())
}

fn tring(ctx: &RingCtx, opts: &HarnessOptions, t: &mut Tally) -> Result<()> {
    t.tested("equivalence");
    let lhs = ctx.all_w1ap();
    let local = unique_maximal(ctx).is_some_and(|m| m.power(3).is_zero());
    let fields = !local && is_product_of_two_fields(ctx, opts)?;
    if lhs != (local || fields) {
        let (ideals, elems) = failing_ideal(ctx);
        let detail = format!(
            "every proper ideal weakly 1-absorbing prime = {lhs}, quasi-local with m^3 = 0 = {local}, two fields = {fields}"
        );
        t.violate("equivalence", &ideals, elems, detail);
    }
    Ok(())
}

fn zn_example(ctx: &RingCtx, t: &mut Tally) {
    let Some(n) = ctx.ring.cyclic_modulus() else {
        t.vacuous("predicate");
        return;
    };
    let engine = ctx.all_w1ap();
    let predicate = arithmetic_predicate(n);
    if let Some(b) = Boundary::of(n) {
        t.vacuous("predicate");
        if engine != predicate {
            t.notes.push(format!(
                "Z{n} ({b}): engine says every proper ideal is weakly 1-absorbing prime = {engine}, predicate = {predicate}"
            ));
        }
        return;
    }
    t.tested("predicate");
    if engine != predicate {
        let (ideals, elems) = failing_ideal(ctx);
        t.violate(
            "predicate",
            &ideals,
            elems,
            format!("engine = {engine}, n = p^3 or p1 p2 is {predicate}"),
        );
    }
}
