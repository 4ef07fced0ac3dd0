//! Multivariate polynomials with exact coefficients.
//!
//! Representation: a shared ring handle plus a term list `(Coeff, Monomial)`
//! kept sorted strictly decreasing under grevlex with no zero coefficients.
//! That canonical form makes equality, hashing-by-display and printing
//! deterministic; engines that work under a different order re-sort on entry.

use crate::error::{Error, Result};
use crate::field::Coeff;
use crate::monomial::{Monomial, MonomialOrder};
use crate::ring::RingRef;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

#[derive(Clone)]
pub struct Polynomial {
    ring: RingRef,
    /// Sorted strictly decreasing under grevlex; no zero coefficients.
    terms: Vec<(Coeff, Monomial)>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring)
            && self.terms == other.terms
    }
}
impl Eq for Polynomial {}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl Polynomial {
    pub fn zero(ring: &RingRef) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &RingRef) -> Self {
        Self::constant(ring, ring.field().one())
    }

    pub fn constant(ring: &RingRef, c: Coeff) -> Self {
        if c.is_zero() {
            return Self::zero(ring);
        }
        Polynomial {
            ring: ring.clone(),
            terms: vec![(c, Monomial::one(ring.nvars()))],
        }
    }

    pub fn var(ring: &RingRef, i: usize) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: vec![(ring.field().one(), Monomial::var(ring.nvars(), i))],
        }
    }

    pub fn term(ring: &RingRef, c: Coeff, m: Monomial) -> Self {
        Self::from_terms(ring, vec![(c, m)])
    }

    /// Normalizing constructor: merges duplicate monomials, drops zeros,
    /// sorts canonically.
    pub fn from_terms(ring: &RingRef, terms: Vec<(Coeff, Monomial)>) -> Self {
        let field = *ring.field();
        let mut acc: BTreeMap<Monomial, Coeff> = BTreeMap::new();
        for (c, m) in terms {
            debug_assert_eq!(m.nvars(), ring.nvars());
            match acc.entry(m) {
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(c);
                }
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    let s = field.add(e.get(), &c);
                    if s.is_zero() {
                        e.remove();
                    } else {
                        *e.get_mut() = s;
                    }
                }
            }
        }
        let mut terms: Vec<(Coeff, Monomial)> = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| (c, m))
            .collect();
        terms.sort_by(|a, b| MonomialOrder::GrevLex.cmp_mono(&b.1, &a.1));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn terms(&self) -> &[(Coeff, Monomial)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.iter().all(|(_, m)| m.is_one())
    }

    pub fn constant_value(&self) -> Option<&Coeff> {
        if self.terms.len() == 1 && self.terms[0].1.is_one() {
            Some(&self.terms[0].0)
        } else {
            None
        }
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Total degree (maximum over terms); `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u64> {
        self.terms.iter().map(|(_, m)| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((_, m0)) => {
                let d = m0.degree();
                self.terms.iter().all(|(_, m)| m.degree() == d)
            }
        }
    }

    /// Degree in the x-block / y-block of a bigraded ring, when the
    /// polynomial is bihomogeneous. `None` for zero or mixed bidegrees.
    pub fn bidegree(&self) -> Option<(u64, u64)> {
        let k = self.ring.x_block()?;
        let n = self.ring.nvars();
        let (_, m0) = self.terms.first()?;
        let bd = (m0.block_degree(0, k), m0.block_degree(k, n));
        for (_, m) in &self.terms {
            if (m.block_degree(0, k), m.block_degree(k, n)) != bd {
                return None;
            }
        }
        Some(bd)
    }

    /// Leading term under an arbitrary order (linear scan of the canonical
    /// term list).
    pub fn leading(&self, order: MonomialOrder) -> Option<(&Coeff, &Monomial)> {
        self.terms
            .iter()
            .max_by(|a, b| order.cmp_mono(&a.1, &b.1))
            .map(|(c, m)| (c, m))
    }

    pub fn leading_grevlex(&self) -> Option<(&Coeff, &Monomial)> {
        self.terms.first().map(|(c, m)| (c, m))
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.require_same_ring(other);
        let field = *self.ring.field();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match MonomialOrder::GrevLex.cmp_mono(&self.terms[i].1, &other.terms[j].1) {
                std::cmp::Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = field.add(&self.terms[i].0, &other.terms[j].0);
                    if !c.is_zero() {
                        out.push((c, self.terms[i].1.clone()));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    pub fn neg(&self) -> Polynomial {
        let field = *self.ring.field();
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(c, m)| (field.neg(c), m.clone()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        self.require_same_ring(other);
        let field = *self.ring.field();
        let mut acc: BTreeMap<Monomial, Coeff> = BTreeMap::new();
        for (ca, ma) in &self.terms {
            for (cb, mb) in &other.terms {
                let m = ma.mul(mb);
                let c = field.mul(ca, cb);
                match acc.entry(m) {
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(c);
                    }
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        let s = field.add(e.get(), &c);
                        *e.get_mut() = s;
                    }
                }
            }
        }
        let mut terms: Vec<(Coeff, Monomial)> = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| (c, m))
            .collect();
        terms.sort_by(|a, b| MonomialOrder::GrevLex.cmp_mono(&b.1, &a.1));
        Polynomial {
            ring: self.ring.clone(),
            terms,
        }
    }

    pub fn mul_coeff(&self, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        let field = *self.ring.field();
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(a, m)| (field.mul(a, c), m.clone()))
                .collect(),
        }
    }

    /// Multiply by the single term `c * m` (preserves sortedness).
    pub fn mul_term(&self, c: &Coeff, m: &Monomial) -> Polynomial {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        let field = *self.ring.field();
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(a, t)| (field.mul(a, c), t.mul(m)))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Exact division by `g`: returns `Some(q)` with `self == q*g`, or `None`
    /// when `self` is not a multiple.
    pub fn exact_div(&self, g: &Polynomial) -> Option<Polynomial> {
        self.require_same_ring(g);
        if g.is_zero() {
            return None;
        }
        let field = *self.ring.field();
        let (gc, gm) = (g.terms[0].0.clone(), g.terms[0].1.clone());
        let mut rem = self.clone();
        let mut q: Vec<(Coeff, Monomial)> = Vec::new();
        while !rem.is_zero() {
            let (rc, rm) = (&rem.terms[0].0, &rem.terms[0].1);
            if !gm.divides(rm) {
                return None;
            }
            let qm = gm.div_into(rm);
            let qc = field.div(rc, &gc).expect("nonzero leading coefficient");
            q.push((qc.clone(), qm.clone()));
            rem = rem.sub(&g.mul_term(&qc, &qm));
        }
        Some(Polynomial::from_terms(&self.ring, q))
    }

    /// GCD of the term monomials — the largest monomial dividing every term.
    pub fn monomial_content(&self) -> Option<Monomial> {
        let mut it = self.terms.iter();
        let first = it.next()?.1.clone();
        Some(it.fold(first, |acc, (_, m)| acc.gcd(m)))
    }

    /// Apply a ring map sending variable `i` of this ring to `images[i]`
    /// (all images in a common target ring over the same field).
    pub fn apply_map(&self, target: &RingRef, images: &[Polynomial]) -> Result<Polynomial> {
        if images.len() != self.ring.nvars() {
            return Err(Error::invalid("wrong number of variable images"));
        }
        for im in images {
            if im.ring() != target {
                return Err(Error::RingMismatch(
                    "variable image lies in a different ring".into(),
                ));
            }
        }
        if self.ring.field() != target.field() {
            return Err(Error::RingMismatch(
                "source and target fields differ".into(),
            ));
        }
        // memoize powers per variable
        let mut powers: Vec<Vec<Polynomial>> = images
            .iter()
            .map(|im| vec![Polynomial::one(target), im.clone()])
            .collect();
        let power = |v: usize, e: u32, pows: &mut Vec<Vec<Polynomial>>| -> Polynomial {
            while pows[v].len() <= e as usize {
                let next = pows[v].last().unwrap().mul(&images[v]);
                pows[v].push(next);
            }
            pows[v][e as usize].clone()
        };
        let mut out = Polynomial::zero(target);
        for (c, m) in &self.terms {
            let mut t = Polynomial::constant(target, c.clone());
            for (v, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    t = t.mul(&power(v, e, &mut powers));
                }
            }
            out = out.add(&t);
        }
        Ok(out)
    }

    /// Reinterpret in a ring with `prefix` extra leading variables.
    pub fn shift_right(&self, target: &RingRef, prefix: usize) -> Polynomial {
        debug_assert_eq!(target.nvars(), self.ring.nvars() + prefix);
        Polynomial::from_terms(
            target,
            self.terms
                .iter()
                .map(|(c, m)| (c.clone(), m.shift_right(prefix)))
                .collect(),
        )
    }

    /// Reinterpret in a ring that appends extra trailing variables; the
    /// existing variables keep their indices.
    pub fn extend_suffix(&self, target: &RingRef) -> Polynomial {
        debug_assert!(target.nvars() >= self.ring.nvars());
        debug_assert_eq!(
            &target.vars()[..self.ring.nvars()],
            self.ring.vars(),
            "suffix extension must preserve the leading variables"
        );
        Polynomial::from_terms(
            target,
            self.terms
                .iter()
                .map(|(c, m)| (c.clone(), m.extend(target.nvars())))
                .collect(),
        )
    }

    /// Drop the leading `prefix` variables (they must not occur).
    pub fn drop_prefix(&self, target: &RingRef, prefix: usize) -> Polynomial {
        debug_assert_eq!(target.nvars() + prefix, self.ring.nvars());
        Polynomial::from_terms(
            target,
            self.terms
                .iter()
                .map(|(c, m)| (c.clone(), m.drop_prefix(prefix)))
                .collect(),
        )
    }

    /// True when no variable with index `< prefix` occurs.
    pub fn free_of_prefix(&self, prefix: usize) -> bool {
        self.terms
            .iter()
            .all(|(_, m)| m.exps()[..prefix].iter().all(|&e| e == 0))
    }

    fn require_same_ring(&self, other: &Polynomial) {
        assert!(
            Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring,
            "ring mismatch in polynomial arithmetic"
        );
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (c, m)) in self.terms.iter().enumerate() {
            let cs = format!("{c}");
            let (neg, abs) = match cs.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, cs),
            };
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs == "1" {
                write!(f, "{}", self.ring.format_monomial(m))?;
            } else {
                write!(f, "{abs}*{}", self.ring.format_monomial(m))?;
            }
        }
        Ok(())
    }
}

/// Checked binary arithmetic for callers that cannot guarantee matching
/// rings (the library-level entry point).
pub fn poly_arith(op: ArithOp, a: &Polynomial, b: &Polynomial) -> Result<Polynomial> {
    if a.ring() != b.ring() {
        return Err(Error::RingMismatch(
            "operands live in different rings".into(),
        ));
    }
    Ok(match op {
        ArithOp::Add => a.add(b),
        ArithOp::Sub => a.sub(b),
        ArithOp::Mul => a.mul(b),
    })
}

#[derive(Clone, Copy, Debug)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::ring::PolyRing;

    fn ring2() -> RingRef {
        PolyRing::new(FieldSpec::Rationals, vec!["x".into(), "y".into()]).unwrap()
    }

    #[test]
    fn freshman_dream_mod_2() {
        let r = PolyRing::new(FieldSpec::prime(2).unwrap(), vec!["x".into(), "y".into()])
            .unwrap();
        let xy = Polynomial::var(&r, 0).add(&Polynomial::var(&r, 1));
        let sq = xy.mul(&xy);
        let expect = Polynomial::var(&r, 0)
            .pow(2)
            .add(&Polynomial::var(&r, 1).pow(2));
        assert_eq!(sq, expect);
    }

    #[test]
    fn exact_division() {
        let r = ring2();
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let f = x.add(&y);
        let g = x.sub(&y);
        let prod = f.mul(&g);
        assert_eq!(prod.exact_div(&f).unwrap(), g);
        assert!(prod.add(&Polynomial::one(&r)).exact_div(&f).is_none());
    }

    #[test]
    fn display_canonical() {
        let r = ring2();
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let p = x.pow(2).sub(&y.mul_coeff(&r.field().from_i64(3)));
        assert_eq!(p.to_string(), "x^2 - 3*y");
        assert_eq!(Polynomial::zero(&r).to_string(), "0");
    }

    #[test]
    fn homogeneity_and_bidegree() {
        let r = PolyRing::bigraded(
            FieldSpec::Rationals,
            vec!["x".into(), "y".into(), "u".into()],
            2,
        )
        .unwrap();
        let x = Polynomial::var(&r, 0);
        let u = Polynomial::var(&r, 2);
        let p = x.mul(&u);
        assert!(p.is_homogeneous());
        assert_eq!(p.bidegree(), Some((1, 1)));
        let q = p.add(&x);
        assert!(!q.is_homogeneous());
        assert_eq!(q.bidegree(), None);
    }

    #[test]
    fn ring_mismatch_rejected() {
        let a = Polynomial::one(&ring2());
        let r3 =
            PolyRing::new(FieldSpec::Rationals, vec!["x".into(), "y".into(), "z".into()])
                .unwrap();
        let b = Polynomial::one(&r3);
        assert!(poly_arith(ArithOp::Add, &a, &b).is_err());
    }
}
