//! Buchberger engine with pair pruning and explicit budgets.
//!
//! Internals work on `WPoly`: term lists sorted under the *working* order
//! (the canonical `Polynomial` form is grevlex-sorted, so engines re-sort on
//! entry and back on exit). Pair selection is by increasing lcm degree with
//! deterministic tie-breaks, which processes homogeneous input degree by
//! degree. Pruning uses the product criterion plus the chain criterion in
//! the conservative "both companion pairs already handled" form.
//!
//! Over Q, basis elements are kept integer-primitive during the run to tame
//! coefficient growth; the final reduced basis is monic either way.

use crate::error::{Error, Result};
use crate::field::{Coeff, FieldSpec};
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Polynomial;
use crate::ring::RingRef;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;

/// Hard limits for a Groebner run. Exceeding either aborts with
/// [`Error::BudgetExceeded`] instead of looping forever.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_pairs: u64,
    pub max_degree: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_pairs: 200_000,
            max_degree: 200,
        }
    }
}

/// Working polynomial: terms sorted strictly decreasing under the engine's
/// order.
#[derive(Clone, Debug)]
pub(crate) struct WPoly {
    pub terms: Vec<(Coeff, Monomial)>,
}

impl WPoly {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lm(&self) -> &Monomial {
        &self.terms[0].1
    }

    pub fn lc(&self) -> &Coeff {
        &self.terms[0].0
    }
}

pub(crate) fn to_w(p: &Polynomial, ord: MonomialOrder) -> WPoly {
    let mut terms = p.terms().to_vec();
    terms.sort_by(|a, b| ord.cmp_mono(&b.1, &a.1));
    WPoly { terms }
}

pub(crate) fn from_w(ring: &RingRef, w: &WPoly) -> Polynomial {
    Polynomial::from_terms(ring, w.terms.clone())
}

/// `a - c * x^m * b`, both sorted under `ord`; the workhorse of reduction.
fn sub_scaled(
    field: &FieldSpec,
    ord: MonomialOrder,
    a: &WPoly,
    b: &WPoly,
    c: &Coeff,
    m: &Monomial,
) -> WPoly {
    let mut out = Vec::with_capacity(a.terms.len() + b.terms.len());
    let mut i = 0;
    let mut j = 0;
    while i < a.terms.len() && j < b.terms.len() {
        let bm = b.terms[j].1.mul(m);
        match ord.cmp_mono(&a.terms[i].1, &bm) {
            Ordering::Greater => {
                out.push(a.terms[i].clone());
                i += 1;
            }
            Ordering::Less => {
                let bc = field.neg(&field.mul(&b.terms[j].0, c));
                out.push((bc, bm));
                j += 1;
            }
            Ordering::Equal => {
                let bc = field.mul(&b.terms[j].0, c);
                let s = field.sub(&a.terms[i].0, &bc);
                if !s.is_zero() {
                    out.push((s, bm));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a.terms[i..]);
    while j < b.terms.len() {
        let bm = b.terms[j].1.mul(m);
        let bc = field.neg(&field.mul(&b.terms[j].0, c));
        out.push((bc, bm));
        j += 1;
    }
    WPoly { terms: out }
}

/// Full normal form: reduces every term of `f`, choosing the lowest-index
/// divisor in `basis` at each step (deterministic).
pub(crate) fn reduce_full(
    field: &FieldSpec,
    ord: MonomialOrder,
    f: WPoly,
    basis: &[WPoly],
) -> WPoly {
    let mut tail: Vec<(Coeff, Monomial)> = Vec::new();
    let mut work = f;
    'outer: while !work.is_zero() {
        let (wc, wm) = (work.terms[0].0.clone(), work.terms[0].1.clone());
        for g in basis {
            if g.lm().divides(&wm) {
                let m = g.lm().div_into(&wm);
                let c = field.div(&wc, g.lc()).expect("nonzero leading coefficient");
                work = sub_scaled(field, ord, &work, g, &c, &m);
                continue 'outer;
            }
        }
        tail.push((wc, wm));
        work.terms.remove(0);
    }
    WPoly { terms: tail }
}

/// Over Q: clear denominators and divide by the numerator gcd, making the
/// leading coefficient positive. Over F_p: make monic. Normalizes scale
/// without changing the ideal element up to a unit.
fn normalize_scale(field: &FieldSpec, mut f: WPoly) -> WPoly {
    if f.is_zero() {
        return f;
    }
    match field {
        FieldSpec::Prime(_) => {
            let inv = field.inv(f.lc()).expect("nonzero leading coefficient");
            for t in &mut f.terms {
                t.0 = field.mul(&t.0, &inv);
            }
            f
        }
        FieldSpec::Rationals => {
            let mut den_lcm = BigInt::one();
            for (c, _) in &f.terms {
                if let Coeff::Rat(r) = c {
                    den_lcm = den_lcm.lcm(r.denom());
                }
            }
            let mut num_gcd = BigInt::zero();
            for (c, _) in &f.terms {
                if let Coeff::Rat(r) = c {
                    num_gcd = num_gcd.gcd(&(r.numer() * &den_lcm / r.denom()));
                }
            }
            if num_gcd.is_zero() {
                num_gcd = BigInt::one();
            }
            let lead_negative = match f.lc() {
                Coeff::Rat(r) => r.numer().is_negative(),
                _ => false,
            };
            if lead_negative {
                num_gcd = -num_gcd;
            }
            let scale = Coeff::Rat(num_rational::BigRational::new(den_lcm, num_gcd));
            for t in &mut f.terms {
                t.0 = field.mul(&t.0, &scale);
            }
            f
        }
    }
}

fn spoly(field: &FieldSpec, ord: MonomialOrder, f: &WPoly, g: &WPoly) -> WPoly {
    let l = f.lm().lcm(g.lm());
    let mf = f.lm().div_into(&l);
    let mg = g.lm().div_into(&l);
    // (1/lc f) * mf * f  -  (1/lc g) * mg * g
    let inv_f = field.inv(f.lc()).expect("nonzero lc");
    let scaled_f = WPoly {
        terms: f
            .terms
            .iter()
            .map(|(c, m)| (field.mul(c, &inv_f), m.mul(&mf)))
            .collect(),
    };
    let inv_g = field.inv(g.lc()).expect("nonzero lc");
    sub_scaled(field, ord, &scaled_f, g, &inv_g, &mg)
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    deg: u64,
}

/// Buchberger with product + chain criteria. Returns the unique reduced
/// basis, monic, sorted by increasing leading monomial.
pub fn buchberger(
    ring: &RingRef,
    gens: &[Polynomial],
    ord: MonomialOrder,
    budget: &Budget,
) -> Result<Vec<Polynomial>> {
    let field = *ring.field();
    let mut basis: Vec<WPoly> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    let mut processed: u64 = 0;

    let add_element = |h: WPoly, basis: &mut Vec<WPoly>, pairs: &mut Vec<Pair>| {
        let t = basis.len();
        for (i, g) in basis.iter().enumerate() {
            let lcm = g.lm().lcm(h.lm());
            pairs.push(Pair {
                i,
                j: t,
                deg: lcm.degree(),
                lcm,
            });
        }
        basis.push(h);
    };

    for g in gens {
        if g.is_zero() {
            continue;
        }
        let w = normalize_scale(&field, to_w(g, ord));
        add_element(w, &mut basis, &mut pairs);
    }

    while !pairs.is_empty() {
        // deterministic selection: min (degree, lcm, i, j)
        let mut best = 0;
        for k in 1..pairs.len() {
            let a = &pairs[k];
            let b = &pairs[best];
            let ord_cmp = a
                .deg
                .cmp(&b.deg)
                .then_with(|| ord.cmp_mono(&a.lcm, &b.lcm))
                .then_with(|| (a.i, a.j).cmp(&(b.i, b.j)));
            if ord_cmp == Ordering::Less {
                best = k;
            }
        }
        let pair = pairs.swap_remove(best);

        if pair.deg > budget.max_degree {
            return Err(Error::BudgetExceeded {
                pairs: processed,
                degree: pair.deg,
                max_pairs: budget.max_pairs,
                max_degree: budget.max_degree,
            });
        }

        // product criterion
        if basis[pair.i].lm().coprime(basis[pair.j].lm()) {
            continue;
        }
        // chain criterion: some k with lm_k | lcm(i,j) and both companion
        // pairs no longer pending
        let chain = (0..basis.len()).any(|k| {
            k != pair.i
                && k != pair.j
                && basis[k].lm().divides(&pair.lcm)
                && !pairs.iter().any(|p| {
                    (p.i == pair.i.min(k) && p.j == pair.i.max(k))
                        || (p.i == pair.j.min(k) && p.j == pair.j.max(k))
                })
        });
        if chain {
            continue;
        }

        processed += 1;
        if processed > budget.max_pairs {
            return Err(Error::BudgetExceeded {
                pairs: processed,
                degree: pair.deg,
                max_pairs: budget.max_pairs,
                max_degree: budget.max_degree,
            });
        }

        let s = spoly(&field, ord, &basis[pair.i], &basis[pair.j]);
        let h = reduce_full(&field, ord, s, &basis);
        if !h.is_zero() {
            let h = normalize_scale(&field, h);
            add_element(h, &mut basis, &mut pairs);
        }
    }

    Ok(finalize_reduced(ring, &field, ord, basis))
}

/// Minimalize leading terms, tail-reduce, make monic, sort ascending.
fn finalize_reduced(
    ring: &RingRef,
    field: &FieldSpec,
    ord: MonomialOrder,
    basis: Vec<WPoly>,
) -> Vec<Polynomial> {
    let mut sorted: Vec<WPoly> = basis.into_iter().filter(|g| !g.is_zero()).collect();
    sorted.sort_by(|a, b| ord.cmp_mono(a.lm(), b.lm()));
    let mut minimal: Vec<WPoly> = Vec::new();
    for g in sorted {
        if !minimal.iter().any(|h| h.lm().divides(g.lm())) {
            minimal.push(g);
        }
    }
    let snapshot = minimal.clone();
    let mut reduced: Vec<WPoly> = Vec::new();
    for (i, g) in snapshot.iter().enumerate() {
        let others: Vec<WPoly> = snapshot
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, h)| h.clone())
            .collect();
        let mut r = reduce_full(field, ord, g.clone(), &others);
        if r.is_zero() {
            continue; // duplicate leading monomial (same generator twice)
        }
        let inv = field.inv(r.lc()).expect("nonzero lc");
        for t in &mut r.terms {
            t.0 = field.mul(&t.0, &inv);
        }
        reduced.push(r);
    }
    reduced.sort_by(|a, b| ord.cmp_mono(a.lm(), b.lm()));
    reduced.iter().map(|w| from_w(ring, w)).collect()
}

/// Normal form of `f` against an already-computed basis.
pub fn normal_form(
    ring: &RingRef,
    f: &Polynomial,
    basis: &[Polynomial],
    ord: MonomialOrder,
) -> Polynomial {
    let field = *ring.field();
    let wb: Vec<WPoly> = basis.iter().map(|g| to_w(g, ord)).collect();
    let r = reduce_full(&field, ord, to_w(f, ord), &wb);
    from_w(ring, &r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;
    use crate::ring::PolyRing;

    fn setup(vars: &[&str]) -> RingRef {
        PolyRing::new(
            FieldSpec::Rationals,
            vars.iter().map(|s| s.to_string()).collect(),
        )
        .unwrap()
    }

    fn gb(ring: &RingRef, gens: &[&str], ord: MonomialOrder) -> Vec<String> {
        let gens: Vec<Polynomial> = gens
            .iter()
            .map(|s| parse_polynomial(ring, s).unwrap())
            .collect();
        buchberger(ring, &gens, ord, &Budget::default())
            .unwrap()
            .iter()
            .map(|p| p.to_string())
            .collect()
    }

    #[test]
    fn single_spair_example() {
        // {x^2 + y^2, x*y} completes with y^3
        let r = setup(&["x", "y"]);
        let basis = gb(&r, &["x^2 + y^2", "x*y"], MonomialOrder::GrevLex);
        assert_eq!(basis, vec!["x*y", "x^2 + y^2", "y^3"]);
    }

    #[test]
    fn reduced_basis_is_generator_order_invariant() {
        let r = setup(&["x", "y", "z"]);
        let a = gb(
            &r,
            &["x^2 - y*z", "y^2 - x*z", "z^2 - x*y"],
            MonomialOrder::GrevLex,
        );
        let b = gb(
            &r,
            &["z^2 - x*y", "x^2 - y*z", "y^2 - x*z"],
            MonomialOrder::GrevLex,
        );
        assert_eq!(a, b);
        // rescaling generators must not change the reduced basis either
        let gens: Vec<Polynomial> = ["x^2 - y*z", "y^2 - x*z", "z^2 - x*y"]
            .iter()
            .map(|s| {
                parse_polynomial(&r, s)
                    .unwrap()
                    .mul_coeff(&r.field().from_i64(-7))
            })
            .collect();
        let c: Vec<String> = buchberger(&r, &gens, MonomialOrder::GrevLex, &Budget::default())
            .unwrap()
            .iter()
            .map(|p| p.to_string())
            .collect();
        assert_eq!(a, c);
    }

    #[test]
    fn normal_form_linearity() {
        let r = setup(&["x", "y"]);
        let gens: Vec<Polynomial> = ["x^2 - y", "y^2 - 1"]
            .iter()
            .map(|s| parse_polynomial(&r, s).unwrap())
            .collect();
        let basis = buchberger(&r, &gens, MonomialOrder::GrevLex, &Budget::default()).unwrap();
        let f = parse_polynomial(&r, "x^4 + x^2*y + 3").unwrap();
        let g = parse_polynomial(&r, "x*y^3 - x").unwrap();
        let nf_sum = normal_form(&r, &f.add(&g), &basis, MonomialOrder::GrevLex);
        let sum_nf = normal_form(&r, &f, &basis, MonomialOrder::GrevLex)
            .add(&normal_form(&r, &g, &basis, MonomialOrder::GrevLex));
        assert_eq!(nf_sum, sum_nf);
        // membership: x^4 - y^2 = (x^2+y)(x^2-y) reduces to zero
        let member = parse_polynomial(&r, "x^4 - y^2").unwrap();
        assert!(normal_form(&r, &member, &basis, MonomialOrder::GrevLex).is_zero());
    }

    #[test]
    fn budget_aborts() {
        let r = setup(&["x", "y"]);
        let gens: Vec<Polynomial> = ["x^3 - y^2 - 1", "x*y - 3"]
            .iter()
            .map(|s| parse_polynomial(&r, s).unwrap())
            .collect();
        let tight = Budget {
            max_pairs: 0,
            max_degree: 200,
        };
        match buchberger(&r, &gens, MonomialOrder::GrevLex, &tight) {
            Err(Error::BudgetExceeded { .. }) => {}
            other => panic!("expected budget error, got {other:?}"),
        }
    }

    #[test]
    fn unit_ideal_collapses_to_one() {
        let r = setup(&["x", "y"]);
        let basis = gb(&r, &["x", "x + 1"], MonomialOrder::GrevLex);
        assert_eq!(basis, vec!["1"]);
    }

    #[test]
    fn lex_elimination_shape() {
        // lex basis of (x^2 - y, x*y - 1) contains a pure-y element
        let r = setup(&["x", "y"]);
        let basis = gb(&r, &["x^2 - y", "x*y - 1"], MonomialOrder::Lex);
        assert!(basis.iter().any(|s| !s.contains('x')), "basis: {basis:?}");
    }
}
