//! Degree of a rational map by counting a general fiber.
//!
//! For a map given by forms `f_0, …, f_m` on `X = Proj(R)`, the fiber over
//! a point `q` of the image is cut out by the saturation
//! `𝔞 = (I_q : I^∞)`, where `I_q` is generated by the specialized Koszul
//! relations `q_i·f_j − q_j·f_i` and `I` is the base ideal.  For a general
//! `q` the quotient `R/𝔞` is a one-dimensional cone and its Hilbert
//! multiplicity is the number of preimages counted with multiplicity,
//! i.e. the degree of the map.
//!
//! "General" is realized by sampling: we draw a random source point `p`
//! (so that `q = (f_0(p) : … : f_m(p))` is guaranteed to lie on the image),
//! repeat over independent trials, and report the modal multiplicity, ties
//! broken downwards.  Every trial's data is kept so a caller can inspect
//! the full distribution instead of trusting the mode blindly.
//!
//! The same specialization machinery yields *row ideals*: for a presentation
//! matrix `ψ` of `I` and a row vector `q` with a unit entry, the entries of
//! `q·ψ` generate exactly the colon ideal `(I_q : I)` (single colon, no
//! saturation).  [`verify_row_ideal_identity`] checks that equality on
//! random vectors by mutual Gröbner membership; it is used as a
//! cross-validation oracle for the whole syzygy pipeline.

use crate::error::{Error, Result};
use crate::exec::{self, tags, ExecMode};
use crate::field::{Coeff, FieldSpec};
use crate::groebner::Budget;
use crate::hilbert::hilbert_data;
use crate::ideal::IdealHandle;
use crate::ops;
use crate::poly::Polynomial;
use crate::rees::RationalMapSpec;
use crate::resolution::{minimal_free_resolution, presentation_matrix, GradedMatrix};
use crate::ring::RingRef;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;

/// Resampling cap for a single trial when the drawn point lands in the
/// base locus or (over a small field) keeps missing the source variety.
const SAMPLE_RETRIES: usize = 64;

/// Attempt cap for the rejection search of a point on a positive-codimension
/// source variety over F_p; a random point hits a hypersurface with
/// probability about 1/p, so the cap must comfortably exceed the
/// characteristic.
const VARIETY_SEARCH_ATTEMPTS: usize = 400_000;

/// Magnitude window for random rational coordinates; any fixed large set
/// of integers plays the role of an infinite field for genericity.
const RATIONAL_SAMPLE_BOUND: i64 = 999;

/// Everything recorded about one sampled fiber.
#[derive(Clone, Debug)]
pub struct FiberData {
    /// Source point `p` the trial used, one coordinate per ring variable.
    pub sample_point: Vec<Coeff>,
    /// Image point `q = (f_0(p), …, f_m(p))`.
    pub image_point: Vec<Coeff>,
    /// Ideal of the specialized Koszul relations `q_i·f_j − q_j·f_i`.
    pub koszul_ideal: IdealHandle,
    /// The saturated fiber ideal `(I_q + P) : I^∞` in the ambient ring.
    pub fiber_ideal: IdealHandle,
    /// Krull dimension of the quotient by the fiber ideal (the fiber as an
    /// affine cone); `1` for a finite fiber.
    pub fiber_dim: usize,
    /// Hilbert multiplicity of the fiber cone — the preimage count with
    /// multiplicity when `fiber_dim == 1`, and `0` otherwise.
    pub fiber_multiplicity: u64,
    /// Castelnuovo–Mumford regularity of the fiber ideal when the fiber is
    /// finite (`0` otherwise).  This is a specialization proxy for the
    /// regularity of the generic-fiber ideal over the function field of the
    /// image.
    pub reg_fiber: u64,
}

impl FiberData {
    /// A trial is usable for degree counting exactly when its fiber cone is
    /// one-dimensional.
    pub fn is_valid(&self) -> bool {
        self.fiber_dim == 1
    }
}

/// Outcome of one row-ideal identity check.
#[derive(Clone, Debug)]
pub struct RowIdealCheck {
    /// The specialization vector `q` (its first entry is kept nonzero).
    pub point: Vec<Coeff>,
    /// Whether `I_1(q·ψ) = I_q : I` held as an exact ideal equality.
    pub holds: bool,
}

/// Evaluates a polynomial at a point given by one coefficient per variable.
pub fn evaluate(f: &Polynomial, point: &[Coeff]) -> Result<Coeff> {
    let ring = f.ring();
    if point.len() != ring.nvars() {
        return Err(Error::invalid(format!(
            "point has {} coordinates but the ring has {} variables",
            point.len(),
            ring.nvars()
        )));
    }
    let field = ring.field();
    let mut acc = field.zero();
    for (c, m) in f.terms() {
        let mut v = c.clone();
        for (i, &e) in m.exps().iter().enumerate() {
            for _ in 0..e {
                v = field.mul(&v, &point[i]);
            }
        }
        acc = field.add(&acc, &v);
    }
    Ok(acc)
}

pub(crate) fn random_coeff(field: &FieldSpec, rng: &mut ChaCha8Rng) -> Coeff {
    match field {
        FieldSpec::Rationals => {
            field.from_i64(rng.gen_range(-RATIONAL_SAMPLE_BOUND..=RATIONAL_SAMPLE_BOUND))
        }
        FieldSpec::Prime(p) => Coeff::Fp(rng.gen_range(0..*p)),
    }
}

pub(crate) fn random_unit_coeff(field: &FieldSpec, rng: &mut ChaCha8Rng) -> Coeff {
    loop {
        let c = random_coeff(field, rng);
        if !c.is_zero() {
            return c;
        }
    }
}

/// Scales the vector so its first nonzero coordinate becomes `1`; returns
/// `None` for the zero vector.
fn normalize_first_unit(field: &FieldSpec, coords: &mut [Coeff]) -> Option<()> {
    let lead = coords.iter().position(|c| !c.is_zero())?;
    let inv = field
        .inv(&coords[lead].clone())
        .expect("nonzero coordinate is invertible");
    for c in coords.iter_mut() {
        *c = field.mul(c, &inv);
    }
    Some(())
}

/// Draws a point on the source variety.
///
/// With a trivial variety ideal the point is uniform over the coordinate
/// window with its first nonzero coordinate normalized to `1`.  With a
/// nontrivial variety over a prime field, random points are rejected until
/// all defining equations vanish (capped).  Over the rationals with a
/// nontrivial variety there is no terminating search procedure, so the
/// caller must supply points and drive [`fiber_at_point`] directly.
pub fn sample_source_point(spec: &RationalMapSpec, rng: &mut ChaCha8Rng) -> Result<Vec<Coeff>> {
    let ring = spec.ring();
    let field = *ring.field();
    let nvars = ring.nvars();
    if spec.variety().is_zero() {
        loop {
            let mut coords: Vec<Coeff> =
                (0..nvars).map(|_| random_coeff(&field, rng)).collect();
            if normalize_first_unit(&field, &mut coords).is_some() {
                return Ok(coords);
            }
        }
    }
    if field == FieldSpec::Rationals {
        return Err(Error::Sampling(
            "cannot search for rational points on a positive-codimension variety over the \
             rationals; supply sample points and use fiber_at_point"
                .into(),
        ));
    }
    for _ in 0..VARIETY_SEARCH_ATTEMPTS {
        let mut coords: Vec<Coeff> = (0..nvars).map(|_| random_coeff(&field, rng)).collect();
        if coords.iter().all(|c| c.is_zero()) {
            continue;
        }
        let mut on_variety = true;
        for g in spec.variety().generators() {
            if !evaluate(g, &coords)?.is_zero() {
                on_variety = false;
                break;
            }
        }
        if on_variety {
            normalize_first_unit(&field, &mut coords).expect("vector checked nonzero");
            return Ok(coords);
        }
    }
    Err(Error::Sampling(format!(
        "found no point on the source variety after {VARIETY_SEARCH_ATTEMPTS} random draws; \
         the field may be too small"
    )))
}

/// Ideal generated by the specialized Koszul relations
/// `q_i·f_j − q_j·f_i` for all pairs `i < j`.
fn koszul_specialization(
    ring: &RingRef,
    forms: &[Polynomial],
    q: &[Coeff],
) -> Result<IdealHandle> {
    let mut gens = Vec::new();
    for i in 0..forms.len() {
        for j in (i + 1)..forms.len() {
            let g = forms[j].mul_coeff(&q[i]).sub(&forms[i].mul_coeff(&q[j]));
            if !g.is_zero() {
                gens.push(g);
            }
        }
    }
    IdealHandle::new(ring, gens)
}

/// Computes the fiber data of the map over the image of one source point.
///
/// The point must lie on the source variety and outside the base locus
/// (some form must not vanish at it).  The returned record is complete even
/// when the fiber has the wrong dimension; use [`FiberData::is_valid`] to
/// filter before counting.
pub fn fiber_at_point(
    spec: &RationalMapSpec,
    point: &[Coeff],
    budget: &Budget,
) -> Result<FiberData> {
    let ring = spec.ring();
    if point.len() != ring.nvars() {
        return Err(Error::invalid(format!(
            "sample point has {} coordinates, expected {}",
            point.len(),
            ring.nvars()
        )));
    }
    if point.iter().all(|c| c.is_zero()) {
        return Err(Error::invalid("sample point must be nonzero"));
    }
    for g in spec.variety().generators() {
        if !evaluate(g, point)?.is_zero() {
            return Err(Error::invalid(
                "sample point does not lie on the source variety",
            ));
        }
    }
    let image: Vec<Coeff> = spec
        .forms()
        .iter()
        .map(|f| evaluate(f, point))
        .collect::<Result<_>>()?;
    if image.iter().all(|c| c.is_zero()) {
        return Err(Error::invalid(
            "sample point lies in the base locus; every form vanishes there",
        ));
    }
    let koszul = koszul_specialization(ring, spec.forms(), &image)?;
    let with_variety = if spec.variety().is_zero() {
        koszul.clone()
    } else {
        ops::ideal_sum(&koszul, spec.variety())?
    };
    let base = IdealHandle::new(ring, spec.forms().to_vec())?;
    let fiber_ideal = ops::saturate(&with_variety, &base, budget)?;
    if fiber_ideal.is_unit(budget)? {
        // Defensive: an empty fiber cannot occur when the image point comes
        // from an actual source point, but a degenerate hand-supplied point
        // should not crash the Hilbert machinery.
        return Ok(FiberData {
            sample_point: point.to_vec(),
            image_point: image,
            koszul_ideal: koszul,
            fiber_ideal,
            fiber_dim: 0,
            fiber_multiplicity: 0,
            reg_fiber: 0,
        });
    }
    let hilbert = hilbert_data(&fiber_ideal, budget)?;
    let (multiplicity, reg) = if hilbert.dimension == 1 {
        let reg = if fiber_ideal.is_zero() {
            0
        } else {
            let table = minimal_free_resolution(&fiber_ideal, budget)?;
            table.regularity()?.max(0) as u64
        };
        (hilbert.multiplicity, reg)
    } else {
        (0, 0)
    };
    Ok(FiberData {
        sample_point: point.to_vec(),
        image_point: image,
        koszul_ideal: koszul,
        fiber_ideal,
        fiber_dim: hilbert.dimension,
        fiber_multiplicity: multiplicity,
        reg_fiber: reg,
    })
}

/// Modal fiber multiplicity across the valid trials, ties broken towards
/// the smaller value.  Errors when no trial produced a one-dimensional
/// fiber cone.
pub fn degree_from_trials(trials: &[FiberData]) -> Result<u64> {
    let mut counts: BTreeMap<u64, usize> = BTreeMap::new();
    for t in trials.iter().filter(|t| t.is_valid()) {
        *counts.entry(t.fiber_multiplicity).or_insert(0) += 1;
    }
    let mut best: Option<(u64, usize)> = None;
    for (&value, &count) in &counts {
        // Ascending iteration makes the first maximum the smallest value.
        if best.is_none_or(|(_, c)| count > c) {
            best = Some((value, count));
        }
    }
    best.map(|(v, _)| v).ok_or_else(|| {
        Error::Sampling(
            "no sampled fiber was one-dimensional; the map may not be generically finite"
                .into(),
        )
    })
}

/// Degree of the map by repeated general-fiber sampling.
///
/// Runs `trials` independent samples (concurrently under the parallel
/// execution mode), each deterministic in `(seed, trial index)`, and
/// returns the modal multiplicity together with all per-trial data.
pub fn degree_via_general_fiber(
    spec: &RationalMapSpec,
    trials: u64,
    seed: u64,
    mode: ExecMode,
    budget: &Budget,
) -> Result<(u64, Vec<FiberData>)> {
    if trials == 0 {
        return Err(Error::invalid("at least one fiber trial is required"));
    }
    let outcomes: Vec<Result<FiberData>> =
        exec::map_indexed(mode, trials as usize, |i| -> Result<FiberData> {
            let mut rng = exec::rng_for(seed, tags::FIBER_TRIAL, i as u64);
            for _ in 0..SAMPLE_RETRIES {
                let point = sample_source_point(spec, &mut rng)?;
                let off_base_locus = spec
                    .forms()
                    .iter()
                    .map(|f| evaluate(f, &point))
                    .collect::<Result<Vec<_>>>()?
                    .iter()
                    .any(|c| !c.is_zero());
                if !off_base_locus {
                    continue;
                }
                return fiber_at_point(spec, &point, budget);
            }
            Err(Error::Sampling(format!(
                "every drawn point landed in the base locus after {SAMPLE_RETRIES} tries; \
                 the field may be too small"
            )))
        });
    let mut data = Vec::with_capacity(outcomes.len());
    let mut first_error = None;
    for outcome in outcomes {
        match outcome {
            Ok(d) => data.push(d),
            Err(e) => {
                if first_error.is_none() {
                    first_error = Some(e);
                }
            }
        }
    }
    if data.is_empty() {
        return Err(first_error.expect("trials >= 1, so an empty run carries an error"));
    }
    let degree = degree_from_trials(&data)?;
    Ok((degree, data))
}

/// The row ideal `I_1(q·ψ)`: entries of the product of the row vector `q`
/// with the presentation matrix.
pub fn row_ideal(psi: &GradedMatrix, q: &[Coeff]) -> Result<IdealHandle> {
    if q.len() != psi.nrows() {
        return Err(Error::invalid(format!(
            "specialization vector has {} entries but the matrix has {} rows",
            q.len(),
            psi.nrows()
        )));
    }
    if q.iter().all(|c| c.is_zero()) {
        return Err(Error::invalid("specialization vector must be nonzero"));
    }
    let ring = psi.ring().clone();
    let mut gens = Vec::with_capacity(psi.ncols());
    for c in 0..psi.ncols() {
        let mut entry = Polynomial::zero(&ring);
        for (r, qr) in q.iter().enumerate() {
            entry = entry.add(&psi.entry(r, c).mul_coeff(qr));
        }
        if !entry.is_zero() {
            gens.push(entry);
        }
    }
    IdealHandle::new(&ring, gens)
}

/// Checks the identity `I_1(q·ψ) = I_q : I` on random vectors whose first
/// entry is a unit.  Both sides absorb the variety ideal so the comparison
/// happens in the coordinate ring of the source.  Failures are reported as
/// evidence, not errors.
pub fn verify_row_ideal_identity(
    spec: &RationalMapSpec,
    trials: u64,
    seed: u64,
    budget: &Budget,
) -> Result<Vec<RowIdealCheck>> {
    let ring = spec.ring();
    let field = *ring.field();
    let psi = presentation_matrix(spec.forms(), spec.variety().generators(), budget)?;
    let base = IdealHandle::new(ring, spec.forms().to_vec())?;
    let mut checks = Vec::with_capacity(trials as usize);
    for i in 0..trials {
        let mut rng = exec::rng_for(seed, tags::ROW_IDEAL, i);
        let mut q = vec![random_unit_coeff(&field, &mut rng)];
        for _ in 1..=spec.m() {
            q.push(random_coeff(&field, &mut rng));
        }
        let mut lhs = row_ideal(&psi, &q)?;
        let koszul = koszul_specialization(ring, spec.forms(), &q)?;
        let mut rhs_base = koszul;
        if !spec.variety().is_zero() {
            lhs = ops::ideal_sum(&lhs, spec.variety())?;
            rhs_base = ops::ideal_sum(&rhs_base, spec.variety())?;
        }
        let rhs = ops::quotient_by_ideal(&rhs_base, &base, budget)?;
        let holds = lhs.equals(&rhs, budget)?;
        checks.push(RowIdealCheck { point: q, holds });
    }
    Ok(checks)
}
