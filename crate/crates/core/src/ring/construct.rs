//! Ring constructors. Every constructor goes through [`FiniteRing::from_tables`],
//! so the result is axiom-checked before it is returned.

use std::sync::Arc;

use super::{FiniteRing, Homomorphism, Structure};
use crate::caps::Caps;
use crate::dsl::RingExpr;
use crate::error::{Error, Result};
use crate::ideal::Ideal;

fn check_cap(size: Option<usize>, caps: &Caps) -> Result<usize> {
    match size {
        Some(s) if s <= caps.elements => Ok(s),
        Some(s) => Err(Error::CapExceeded {
            size: s,
            cap: caps.elements,
        }),
        None => Err(Error::CapExceeded {
            size: usize::MAX,
            cap: caps.elements,
        }),
    }
}

fn tables(n: usize, op: impl Fn(usize, usize) -> (usize, usize)) -> (Vec<u32>, Vec<u32>) {
    let mut add = Vec::with_capacity(n * n);
    let mut mul = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            let (s, p) = op(a, b);
            add.push(s as u32);
            mul.push(p as u32);
        }
    }
    (add, mul)
}

/// Integers modulo `n`; element `i` is the residue `i`.
pub fn zn(n: u64, caps: &Caps) -> Result<Arc<FiniteRing>> {
    if n < 2 {
        return Err(Error::InvalidModulus(n));
    }
    let size = check_cap(usize::try_from(n).ok(), caps)?;
    let (add, mul) = tables(size, |a, b| ((a + b) % size, (a * b) % size));
    FiniteRing::from_tables(size, add, mul, 0, 1, Structure::Cyclic(n), RingExpr::Zn(n)).map(Arc::new)
}

/// Componentwise product; the pair `(i, j)` is element `i * right.size() + j`.
pub fn product(left: &Arc<FiniteRing>, right: &Arc<FiniteRing>, caps: &Caps) -> Result<Arc<FiniteRing>> {
    let size = check_cap(left.size().checked_mul(right.size()), caps)?;
    let r = right.size();
    let (add, mul) = tables(size, |a, b| {
        let (a1, a2) = (a / r, a % r);
        let (b1, b2) = (b / r, b % r);
        (
            left.add(a1, b1) * r + right.add(a2, b2),
            left.mul(a1, b1) * r + right.mul(a2, b2),
        )
    });
    let zero = left.zero() * r + right.zero();
    let one = left.one() * r + right.one();
    let expr = RingExpr::product(left.expr().clone(), right.expr().clone());
    let structure = Structure::Product {
        left: Arc::clone(left),
        right: Arc::clone(right),
    };
    FiniteRing::from_tables(size, add, mul, zero, one, structure, expr).map(Arc::new)
}

/// Quotient by a proper ideal, with its projection.
///
/// Cosets are numbered in order of their least element, which is also the
/// coset representative.
pub fn quotient(ring: &Arc<FiniteRing>, q: &Ideal) -> Result<(Arc<FiniteRing>, Homomorphism)> {
    let expr = RingExpr::quotient(ring.expr().clone(), q.generator_literals());
    quotient_with_expr(ring, q, expr)
}

pub(crate) fn quotient_with_expr(
    ring: &Arc<FiniteRing>,
    q: &Ideal,
    expr: RingExpr,
) -> Result<(Arc<FiniteRing>, Homomorphism)> {
    if !Arc::ptr_eq(q.ring(), ring) {
        return Err(Error::RingMismatch);
    }
    if !q.is_proper() {
        return Err(Error::ImproperIdeal);
    }
    const UNSET: u32 = u32::MAX;
    let mut projection = vec![UNSET; ring.size()];
    let mut reps = Vec::new();
    for a in ring.elements() {
        if projection[a] != UNSET {
            continue;
        }
        let class = reps.len() as u32;
        reps.push(a as u32);
        for i in q.elements() {
            projection[ring.add(a, i)] = class;
        }
    }
    let size = reps.len();
    let (add, mul) = tables(size, |c, d| {
        let (a, b) = (reps[c] as usize, reps[d] as usize);
        (
            projection[ring.add(a, b)] as usize,
            projection[ring.mul(a, b)] as usize,
        )
    });
    let zero = projection[ring.zero()] as usize;
    let one = projection[ring.one()] as usize;
    let structure = Structure::Quotient {
        parent: Arc::clone(ring),
        projection: projection.clone(),
        reps,
    };
    let target = Arc::new(FiniteRing::from_tables(size, add, mul, zero, one, structure, expr)?);
    let map = projection.iter().map(|&c| c as usize).collect();
    let hom = Homomorphism::new(Arc::clone(ring), Arc::clone(&target), map)?;
    if hom.kernel().elements_u32() != q.elements_u32() {
        return Err(Error::NotAHomomorphism("projection kernel differs from the ideal".into()));
    }
    Ok((target, hom))
}

/// Checks that `set` is multiplicatively closed, contains one and avoids zero.
/// Returns it sorted and deduplicated.
pub(crate) fn multiplicative_set(ring: &FiniteRing, set: &[usize]) -> Result<Vec<usize>> {
    let mut s: Vec<usize> = set.to_vec();
    for &e in &s {
        ring.check_element(e)?;
    }
    s.sort_unstable();
    s.dedup();
    if s.contains(&ring.zero()) {
        return Err(Error::ZeroInS);
    }
    if !s.contains(&ring.one()) {
        return Err(Error::OneNotInS);
    }
    let mut member = vec![false; ring.size()];
    for &e in &s {
        member[e] = true;
    }
    for &a in &s {
        for &b in &s {
            let p = ring.mul(a, b);
            if !member[p] {
                return Err(Error::NotMultClosed { a, b, product: p });
            }
        }
    }
    Ok(s)
}

/// Ring of fractions `S⁻¹A` built from pairs `(a, t)` with `t ∈ S` under
/// `(a,t) ~ (b,u)` iff `v(au − bt) = 0` for some `v ∈ S`.
///
/// Returns the ring and the canonical map `a ↦ a/1`.
pub fn localization(ring: &Arc<FiniteRing>, set: &[usize], caps: &Caps) -> Result<(Arc<FiniteRing>, Homomorphism)> {
    let s = multiplicative_set(ring, set)?;
    let expr = RingExpr::localize(ring.expr().clone(), s.iter().map(|&e| ring.literal(e)).collect());
    localization_with_expr(ring, &s, caps, expr)
}

pub(crate) fn localization_with_expr(
    ring: &Arc<FiniteRing>,
    set: &[usize],
    caps: &Caps,
    expr: RingExpr,
) -> Result<(Arc<FiniteRing>, Homomorphism)> {
    let s = multiplicative_set(ring, set)?;
    let n = ring.size();
    let k = s.len();
    let mut s_pos = vec![usize::MAX; n];
    for (i, &e) in s.iter().enumerate() {
        s_pos[e] = i;
    }
    let equivalent = |(a, t): (usize, usize), (b, u): (usize, usize)| {
        let diff = ring.sub(ring.mul(a, u), ring.mul(b, t));
        s.iter().any(|&v| ring.mul(v, diff) == ring.zero())
    };

    // Pair (a, s[i]) lives at a * k + i.
    let mut class_of = vec![usize::MAX; n * k];
    let mut reps: Vec<(usize, usize)> = Vec::new();
    for a in 0..n {
        for (i, &t) in s.iter().enumerate() {
            let found = reps.iter().position(|&rep| equivalent(rep, (a, t)));
            class_of[a * k + i] = match found {
                Some(c) => c,
                None => {
                    reps.push((a, t));
                    reps.len() - 1
                }
            };
        }
    }
    let size = check_cap(Some(reps.len()), caps)?;
    let class = |a: usize, t: usize| class_of[a * k + s_pos[t]];
    let (add, mul) = tables(size, |c, d| {
        let ((a, t), (b, u)) = (reps[c], reps[d]);
        let tu = ring.mul(t, u);
        (
            class(ring.add(ring.mul(a, u), ring.mul(b, t)), tu),
            class(ring.mul(a, b), tu),
        )
    });
    let one_r = ring.one();
    let canonical: Vec<u32> = (0..n).map(|a| class(a, one_r) as u32).collect();
    let mut preimage = vec![u32::MAX; size];
    for a in (0..n).rev() {
        preimage[canonical[a] as usize] = a as u32;
    }
    if preimage.contains(&u32::MAX) {
        return Err(Error::NotAHomomorphism(
            "canonical map onto a finite localization must be surjective".into(),
        ));
    }
    let zero = class(ring.zero(), one_r);
    let one = class(one_r, one_r);
    let structure = Structure::Localization {
        parent: Arc::clone(ring),
        canonical: canonical.clone(),
        preimage,
    };
    let target = Arc::new(FiniteRing::from_tables(size, add, mul, zero, one, structure, expr)?);
    let hom = Homomorphism::new(
        Arc::clone(ring),
        Arc::clone(&target),
        canonical.iter().map(|&c| c as usize).collect(),
    )?;

    for &t in &s {
        if !target.is_unit(hom.apply(t)) {
            return Err(Error::NotAHomomorphism(format!(
                "image of {} is not a unit",
                ring.display_element(t)
            )));
        }
    }
    let expected_kernel: Vec<usize> = (0..n)
        .filter(|&a| s.iter().any(|&v| ring.mul(v, a) == ring.zero()))
        .collect();
    if hom.kernel().elements().collect::<Vec<_>>() != expected_kernel {
        return Err(Error::NotAHomomorphism(
            "kernel of the canonical map differs from the S-torsion".into(),
        ));
    }
    Ok((target, hom))
}

/// Trivial extension `A ⋉ A/J` with `(x,m)(y,m') = (xy, xm' + ym)`.
///
/// `(a, m)` is element `a * |A/J| + m`.
pub fn idealization(ring: &Arc<FiniteRing>, j: &Ideal, caps: &Caps) -> Result<Arc<FiniteRing>> {
    let expr = RingExpr::idealize(ring.expr().clone(), j.generator_literals());
    idealization_with_expr(ring, j, caps, expr)
}

pub(crate) fn idealization_with_expr(
    ring: &Arc<FiniteRing>,
    j: &Ideal,
    caps: &Caps,
    expr: RingExpr,
) -> Result<Arc<FiniteRing>> {
    if !Arc::ptr_eq(j.ring(), ring) {
        return Err(Error::RingMismatch);
    }
    if !j.is_proper() {
        return Err(Error::ImproperIdeal);
    }
    let module_size = ring.size() / j.len();
    check_cap(ring.size().checked_mul(module_size), caps)?;
    let (module, proj) = quotient(ring, j)?;
    let m = module.size();
    let size = ring.size() * m;
    let act = |a: usize, x: usize| module.mul(proj.apply(a), x);
    let (add, mul) = tables(size, |p, q| {
        let (x, mx) = (p / m, p % m);
        let (y, my) = (q / m, q % m);
        (
            ring.add(x, y) * m + module.add(mx, my),
            ring.mul(x, y) * m + module.add(act(x, my), act(y, mx)),
        )
    });
    let zero = ring.zero() * m + module.zero();
    let one = ring.one() * m + module.zero();
    let module_projection = (0..ring.size()).map(|a| proj.apply(a) as u32).collect();
    let structure = Structure::Idealization {
        base: Arc::clone(ring),
        module: Arc::clone(&module),
        module_projection,
    };
    let ext = FiniteRing::from_tables(size, add, mul, zero, one, structure, expr)?;
    for e in 0..size {
        if ext.is_unit(e) != ring.is_unit(e / m) {
            return Err(Error::AxiomViolation {
                axiom: "idealization unit criterion",
                elements: vec![e],
            });
        }
    }
    Ok(Arc::new(ext))
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

/// `F_p[x, y]/(x², xy, y²)`: element `a + bx + cy` is index `a + p·b + p²·c`.
pub fn local_algebra(p: u64, caps: &Caps) -> Result<Arc<FiniteRing>> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let pu = usize::try_from(p).ok();
    let size = check_cap(pu.and_then(|p| p.checked_mul(p)?.checked_mul(p)), caps)?;
    let p = pu.expect("checked above");
    let split = |i: usize| (i % p, (i / p) % p, i / (p * p));
    let join = |(a, b, c): (usize, usize, usize)| a + p * b + p * p * c;
    let (add, mul) = tables(size, |u, v| {
        let (a, b, c) = split(u);
        let (d, e, f) = split(v);
        (
            join(((a + d) % p, (b + e) % p, (c + f) % p)),
            join(((a * d) % p, (a * e + b * d) % p, (a * f + c * d) % p)),
        )
    });
    FiniteRing::from_tables(
        size,
        add,
        mul,
        0,
        1,
        Structure::LocalAlgebra(p as u64),
        RingExpr::LocalAlg(p as u64),
    )
    .map(Arc::new)
}
