//! Ideal-theoretic operations: sum, intersection, colon quotients,
//! saturation, elimination, and Krull dimension.
//!
//! Intersections use the classic auxiliary-variable construction
//! `I ∩ J = (t·I + (1−t)·J) ∩ k[x]`, saturation by a single element uses
//! the inverted-element trick (adjoin `w`, add `w·f − 1`, eliminate `w`),
//! and saturation by an ideal is the *intersection* of the single-element
//! saturations of its generators:
//!
//! `I : (f₁,…,f_k)^∞  =  ⋂ᵢ (I : fᵢ^∞)`
//!
//! (`⊇` by pigeonhole on the factors of a large power, `⊆` termwise).
//! Note the sequential variant `(…((I : f₁^∞) : f₂^∞)…)` is *not* equal in
//! general — it computes `I : (f₁⋯f_k)^∞` instead, which differs already
//! for `(xy) : (x,y)^∞` — so the fold here is an intersection, never a
//! chain of quotients.
//!
//! Elimination of a prefix block of variables relies on the block-dominant
//! order [`MonomialOrder::Elimination`]; the surviving prefix-free elements
//! of the reduced basis are exactly the reduced grevlex basis of the
//! contraction, so the projected handle is seeded with them.

use crate::error::{Error, Result};
use crate::groebner::{buchberger, Budget};
use crate::ideal::IdealHandle;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Polynomial;
use crate::ring::{PolyRing, RingRef};

/// Picks a variable name not already used by `ring`, preferring `base`.
fn fresh_aux_name(ring: &PolyRing, base: &str) -> String {
    let taken = ring.vars();
    if !taken.iter().any(|v| v == base) {
        return base.to_string();
    }
    for i in 0.. {
        let candidate = format!("{base}{i}");
        if !taken.iter().any(|v| v == &candidate) {
            return candidate;
        }
    }
    unreachable!()
}

/// Sum of two ideals (concatenated generators).
pub fn ideal_sum(a: &IdealHandle, b: &IdealHandle) -> Result<IdealHandle> {
    if a.ring() != b.ring() {
        return Err(Error::RingMismatch("sum of ideals in different rings".into()));
    }
    let mut gens = a.generators().to_vec();
    gens.extend_from_slice(b.generators());
    IdealHandle::new(a.ring(), gens)
}

/// Contraction `I ∩ k[x_{k},…]`, returned in `target` (which must be the
/// ring with the first `k` variables of `I`'s ring removed).
pub(crate) fn eliminate_prefix_into(
    ideal: &IdealHandle,
    k: usize,
    target: &RingRef,
    budget: &Budget,
) -> Result<IdealHandle> {
    let basis = ideal.reduced_groebner(MonomialOrder::Elimination(k), budget)?;
    let kept: Vec<Polynomial> = basis
        .iter()
        .filter(|g| g.free_of_prefix(k))
        .map(|g| g.drop_prefix(target, k))
        .collect();
    // The prefix-free part of a reduced elimination basis is the reduced
    // grevlex basis of the contraction (the elimination order restricts to
    // grevlex on the remaining block), so the cache can be seeded.
    IdealHandle::from_reduced_basis(target, kept, MonomialOrder::GrevLex)
}

/// Eliminates the first `k` variables, returning the contraction as an
/// ideal of the smaller ring.
pub fn eliminate_prefix(ideal: &IdealHandle, k: usize, budget: &Budget) -> Result<IdealHandle> {
    let target = ideal.ring().drop_prefix(k)?;
    eliminate_prefix_into(ideal, k, &target, budget)
}

/// Intersection of two ideals via the auxiliary-variable construction.
pub fn intersect(a: &IdealHandle, b: &IdealHandle, budget: &Budget) -> Result<IdealHandle> {
    if a.ring() != b.ring() {
        return Err(Error::RingMismatch(
            "intersection of ideals in different rings".into(),
        ));
    }
    let ring = a.ring();
    if a.is_zero() || b.is_zero() {
        return IdealHandle::new(ring, Vec::new());
    }
    let aux = fresh_aux_name(ring, "t");
    let ext = ring.extend_prefix(&[&aux])?;
    let t = Polynomial::var(&ext, 0);
    let one_minus_t = Polynomial::one(&ext).sub(&t);
    let mut gens = Vec::with_capacity(a.generators().len() + b.generators().len());
    for f in a.generators() {
        gens.push(t.mul(&f.shift_right(&ext, 1)));
    }
    for g in b.generators() {
        gens.push(one_minus_t.mul(&g.shift_right(&ext, 1)));
    }
    let extended = IdealHandle::new(&ext, gens)?;
    eliminate_prefix_into(&extended, 1, ring, budget)
}

/// Intersection of a nonempty family of ideals.
pub fn intersect_many(ideals: &[IdealHandle], budget: &Budget) -> Result<IdealHandle> {
    let mut iter = ideals.iter();
    let first = iter
        .next()
        .ok_or_else(|| Error::invalid("intersection of an empty family of ideals"))?;
    let mut acc = first.clone();
    for next in iter {
        acc = intersect(&acc, next, budget)?;
    }
    Ok(acc)
}

/// Colon quotient `I : (f)`, computed as `(I ∩ (f)) / f`.
pub fn ideal_quotient(ideal: &IdealHandle, f: &Polynomial, budget: &Budget) -> Result<IdealHandle> {
    if f.is_zero() {
        return Err(Error::DivisionByZero);
    }
    if f.ring() != ideal.ring() {
        return Err(Error::RingMismatch("quotient divisor from a different ring".into()));
    }
    if f.is_constant() {
        return Ok(ideal.clone());
    }
    let principal = IdealHandle::new(ideal.ring(), vec![f.clone()])?;
    let inter = intersect(ideal, &principal, budget)?;
    let mut gens = Vec::with_capacity(inter.generators().len());
    for g in inter.generators() {
        let q = g.exact_div(f).ok_or_else(|| {
            Error::invalid("intersection with a principal ideal produced an indivisible element")
        })?;
        gens.push(q);
    }
    IdealHandle::new(ideal.ring(), gens)
}

/// Colon quotient by an ideal, `I : J = ⋂ᵢ (I : fᵢ)`.
pub fn quotient_by_ideal(
    ideal: &IdealHandle,
    j: &IdealHandle,
    budget: &Budget,
) -> Result<IdealHandle> {
    if ideal.ring() != j.ring() {
        return Err(Error::RingMismatch("quotient by an ideal of a different ring".into()));
    }
    if j.is_zero() {
        // I : (0) is the whole ring.
        return IdealHandle::new(ideal.ring(), vec![Polynomial::one(ideal.ring())]);
    }
    let parts = j
        .generators()
        .iter()
        .map(|f| ideal_quotient(ideal, f, budget))
        .collect::<Result<Vec<_>>>()?;
    intersect_many(&parts, budget)
}

/// True when `f` is a scalar multiple of a pure power of the *last*
/// variable — the shape the reverse-lex saturation shortcut needs.
fn last_variable_power(ring: &PolyRing, f: &Polynomial) -> bool {
    let n = ring.nvars();
    if f.num_terms() != 1 {
        return false;
    }
    let (_, m) = &f.terms()[0];
    let support = m.support();
    support.len() == 1 && support[0] == n - 1
}

/// Divides every term of `g` by the largest power of variable `idx` that
/// divides all of them.
fn strip_variable_power(g: &Polynomial, idx: usize) -> Polynomial {
    let k = g
        .terms()
        .iter()
        .map(|(_, m)| m.exp(idx))
        .min()
        .unwrap_or(0);
    if k == 0 {
        return g.clone();
    }
    let terms = g
        .terms()
        .iter()
        .map(|(c, m)| {
            let mut exps = m.exps().to_vec();
            exps[idx] -= k;
            (c.clone(), Monomial::from_exps(exps))
        })
        .collect();
    Polynomial::from_terms(g.ring(), terms)
}

/// Saturation `I : f^∞` by a single nonzero element.
pub fn saturate_poly(ideal: &IdealHandle, f: &Polynomial, budget: &Budget) -> Result<IdealHandle> {
    if f.is_zero() {
        return Err(Error::DivisionByZero);
    }
    if f.ring() != ideal.ring() {
        return Err(Error::RingMismatch("saturation divisor from a different ring".into()));
    }
    let ring = ideal.ring();
    if f.is_constant() {
        return Ok(ideal.clone());
    }
    // Homogeneous shortcut: under grevlex, dividing each reduced-basis
    // element by the largest power of the last variable that divides it
    // yields a basis of the saturation with respect to that variable.
    if ideal.is_homogeneous() && last_variable_power(ring, f) {
        let basis = ideal.reduced_groebner(MonomialOrder::GrevLex, budget)?;
        let idx = ring.nvars() - 1;
        let stripped: Vec<Polynomial> =
            basis.iter().map(|g| strip_variable_power(g, idx)).collect();
        let reduced = buchberger(ring, &stripped, MonomialOrder::GrevLex, budget)?;
        return IdealHandle::from_reduced_basis(ring, reduced, MonomialOrder::GrevLex);
    }
    let aux = fresh_aux_name(ring, "w");
    let ext = ring.extend_prefix(&[&aux])?;
    let w = Polynomial::var(&ext, 0);
    let mut gens: Vec<Polynomial> = ideal
        .generators()
        .iter()
        .map(|g| g.shift_right(&ext, 1))
        .collect();
    gens.push(w.mul(&f.shift_right(&ext, 1)).sub(&Polynomial::one(&ext)));
    let extended = IdealHandle::new(&ext, gens)?;
    eliminate_prefix_into(&extended, 1, ring, budget)
}

/// Saturation `I : J^∞ = ⋂ᵢ (I : fᵢ^∞)` over the generators of `J`.
pub fn saturate(ideal: &IdealHandle, j: &IdealHandle, budget: &Budget) -> Result<IdealHandle> {
    if ideal.ring() != j.ring() {
        return Err(Error::RingMismatch("saturation by an ideal of a different ring".into()));
    }
    if j.is_zero() {
        return IdealHandle::new(ideal.ring(), vec![Polynomial::one(ideal.ring())]);
    }
    let parts = j
        .generators()
        .iter()
        .map(|f| saturate_poly(ideal, f, budget))
        .collect::<Result<Vec<_>>>()?;
    intersect_many(&parts, budget)
}

/// Krull dimension of `ring/I`, as the largest cardinality of a set of
/// variables independent modulo the initial ideal.
pub fn krull_dimension(ideal: &IdealHandle, budget: &Budget) -> Result<usize> {
    let basis = ideal.reduced_groebner(MonomialOrder::GrevLex, budget)?;
    if basis.len() == 1 && basis[0].is_constant() {
        return Err(Error::UnitIdeal(
            "dimension of the empty scheme (unit ideal)".into(),
        ));
    }
    let n = ideal.ring().nvars();
    if n > 24 {
        return Err(Error::invalid(
            "dimension enumeration supports at most 24 variables",
        ));
    }
    let supports: Vec<u32> = basis
        .iter()
        .map(|g| {
            let (_, m) = g.leading_grevlex().expect("nonzero basis element");
            m.support().iter().fold(0u32, |acc, &i| acc | (1 << i))
        })
        .collect();
    let mut best = 0usize;
    for mask in 0u32..(1u32 << n) {
        // `mask` is independent iff no leading monomial lives entirely
        // inside it.
        if supports.iter().all(|s| s & !mask != 0) {
            best = best.max(mask.count_ones() as usize);
        }
    }
    Ok(best)
}

/// Codimension (height) of `I` inside its ambient polynomial ring.
pub fn codimension(ideal: &IdealHandle, budget: &Budget) -> Result<usize> {
    let n = ideal.ring().nvars();
    Ok(n - krull_dimension(ideal, budget)?)
}
