//! Ideal handles with cached reduced Gröbner bases.
//!
//! An [`IdealHandle`] is a cheaply clonable reference to an ideal of a
//! polynomial ring, remembered by a generating set.  Reduced bases are
//! computed lazily per monomial order and cached.  Because a reduced basis
//! is *unique* for a given ideal and order, the cache is write-once in
//! spirit: concurrent computations of the same entry produce identical
//! values, so last-writer-wins is harmless.
//!
//! Mathematical equality of ideals (`equals`) compares reduced grevlex
//! bases, which is sound precisely because of that uniqueness.

use std::collections::BTreeMap;
use std::sync::{Arc, RwLock};

use crate::error::{Error, Result};
use crate::groebner::{buchberger, normal_form as nf_against, Budget};
use crate::monomial::MonomialOrder;
use crate::poly::Polynomial;
use crate::ring::RingRef;

#[derive(Debug)]
struct Inner {
    ring: RingRef,
    generators: Vec<Polynomial>,
    cache: RwLock<BTreeMap<MonomialOrder, Arc<Vec<Polynomial>>>>,
}

/// An ideal of a polynomial ring, with per-order Gröbner basis caching.
#[derive(Clone, Debug)]
pub struct IdealHandle {
    inner: Arc<Inner>,
}

impl IdealHandle {
    /// Creates an ideal from a generating set.  Zero generators are
    /// dropped; all polynomials must live in `ring`.
    pub fn new(ring: &RingRef, generators: Vec<Polynomial>) -> Result<Self> {
        let mut gens = Vec::with_capacity(generators.len());
        for g in generators {
            if g.ring() != ring {
                return Err(Error::RingMismatch(
                    "ideal generator from a different ring".into(),
                ));
            }
            if !g.is_zero() {
                gens.push(g);
            }
        }
        Ok(IdealHandle {
            inner: Arc::new(Inner {
                ring: ring.clone(),
                generators: gens,
                cache: RwLock::new(BTreeMap::new()),
            }),
        })
    }

    /// Creates an ideal whose generating set is already known to be the
    /// *reduced* Gröbner basis under `order`; the cache is seeded with it.
    ///
    /// Callers are trusted on reducedness — this is a crate-internal
    /// shortcut used where an elimination step has just produced a reduced
    /// basis of the contraction.
    pub(crate) fn from_reduced_basis(
        ring: &RingRef,
        basis: Vec<Polynomial>,
        order: MonomialOrder,
    ) -> Result<Self> {
        let handle = IdealHandle::new(ring, basis)?;
        let shared = Arc::new(handle.inner.generators.clone());
        handle
            .inner
            .cache
            .write()
            .expect("ideal cache poisoned")
            .insert(order, shared);
        Ok(handle)
    }

    pub fn ring(&self) -> &RingRef {
        &self.inner.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.inner.generators
    }

    /// The reduced Gröbner basis under `order` (cached after first use).
    pub fn reduced_groebner(
        &self,
        order: MonomialOrder,
        budget: &Budget,
    ) -> Result<Arc<Vec<Polynomial>>> {
        if let Some(hit) = self
            .inner
            .cache
            .read()
            .expect("ideal cache poisoned")
            .get(&order)
        {
            return Ok(hit.clone());
        }
        let basis = Arc::new(buchberger(
            &self.inner.ring,
            &self.inner.generators,
            order,
            budget,
        )?);
        let mut cache = self.inner.cache.write().expect("ideal cache poisoned");
        // A concurrent writer may have raced us; both values are the unique
        // reduced basis, so either entry is fine to keep.
        let entry = cache.entry(order).or_insert_with(|| basis.clone());
        Ok(entry.clone())
    }

    /// Remainder of `f` modulo the reduced basis under `order`.
    pub fn normal_form(
        &self,
        f: &Polynomial,
        order: MonomialOrder,
        budget: &Budget,
    ) -> Result<Polynomial> {
        let basis = self.reduced_groebner(order, budget)?;
        Ok(nf_against(&self.inner.ring, f, &basis, order))
    }

    /// Membership test: `f ∈ I` iff its grevlex normal form vanishes.
    pub fn contains(&self, f: &Polynomial, budget: &Budget) -> Result<bool> {
        Ok(self
            .normal_form(f, MonomialOrder::GrevLex, budget)?
            .is_zero())
    }

    /// Inclusion test `self ⊆ other`.
    pub fn subset_of(&self, other: &IdealHandle, budget: &Budget) -> Result<bool> {
        for g in &self.inner.generators {
            if !other.contains(g, budget)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Mathematical equality, decided by comparing reduced grevlex bases.
    pub fn equals(&self, other: &IdealHandle, budget: &Budget) -> Result<bool> {
        if self.inner.ring != other.inner.ring {
            return Err(Error::RingMismatch(
                "comparing ideals of different rings".into(),
            ));
        }
        let a = self.reduced_groebner(MonomialOrder::GrevLex, budget)?;
        let b = other.reduced_groebner(MonomialOrder::GrevLex, budget)?;
        Ok(*a == *b)
    }

    /// True for the zero ideal (no nonzero generators).
    pub fn is_zero(&self) -> bool {
        self.inner.generators.is_empty()
    }

    /// True iff the ideal is the whole ring.
    pub fn is_unit(&self, budget: &Budget) -> Result<bool> {
        let basis = self.reduced_groebner(MonomialOrder::GrevLex, budget)?;
        Ok(basis.len() == 1 && basis[0].is_constant() && !basis[0].is_zero())
    }

    /// True iff every generator is homogeneous.
    pub fn is_homogeneous(&self) -> bool {
        self.inner.generators.iter().all(|g| g.is_homogeneous())
    }

    /// Smallest degree of a minimal generator, read off the reduced
    /// grevlex basis; `None` for the zero ideal.
    pub fn min_basis_degree(&self, budget: &Budget) -> Result<Option<u64>> {
        let basis = self.reduced_groebner(MonomialOrder::GrevLex, budget)?;
        Ok(basis.iter().filter_map(|g| g.degree()).min())
    }
}
