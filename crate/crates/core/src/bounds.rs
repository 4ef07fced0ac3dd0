//! Named degree bounds and the auxiliary certificates behind them.
//!
//! Upper bounds multiply syzygy degrees against the source multiplicity:
//! with minimal syzygy degrees `d_1 ≥ … ≥ d_r`, source dimension `t`, and
//! `e = e(R)`, the basic product bound is `d_1⋯d_{t−1}·d_r·e`.  Knowing the
//! rank `s` of the linear part of the defining equations of the Rees
//! algebra lets the first `s` factors be dropped (`d_1⋯d_{t−s}·e`), and if
//! some lowest-degree relation survives outside the linear subideal the
//! last factor can be pulled down to `d_r` once more.  A common factor
//! among two of the forms, a factorial coordinate ring, or a complete
//! intersection base ideal each sharpen or close the product in their own
//! way.  Lower bounds run through the embedding codimension: the degree is
//! at least `n+1−s`, improves by `reg−2` when the regularity of a general
//! fiber is known, and reaches `n+1` outright when the Rees equations
//! carry no linear part at all.
//!
//! Every bound is emitted — inapplicable ones are flagged with the reason
//! their hypotheses could not be certified, never silently dropped, and
//! hypotheses that cannot be decided exactly (minimal-prime conditions,
//! grade) are proxied by the documented codimension checks.
//!
//! The module also houses the smaller combinatorial gadgets used by the
//! verification suite: generic height sequences (random elements of
//! prescribed degrees cutting the codimension one step at a time), the
//! δ-degree of a monomial subscheme (count of minimal vertex covers), the
//! log-matrix birationality test for monomial maps, and the syzygy-degree
//! obstruction to a set of forms being a Noether normalization.

use crate::error::{Error, Result};
use crate::exec::{self, tags};
use crate::fiber::random_coeff;
use crate::groebner::Budget;
use crate::ideal::IdealHandle;
use crate::monomial::Monomial;
use crate::ops;
use crate::poly::Polynomial;
use crate::rees::ReesData;
use crate::rees::RationalMapSpec;
use crate::resolution::presentation_matrix;
use crate::ring::RingRef;
use num_integer::Integer;
use serde::Serialize;

/// How many fresh random draws each height-sequence step is allowed.
pub const HEIGHT_RETRY_CAP: u32 = 10;

/// Direction of a bound relative to the computed degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundKind {
    Upper,
    Lower,
    Equality,
}

/// Outcome of comparing a bound against the computed degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Holds,
    Violated,
    NotApplicable,
}

/// One named bound, with its applicability story and (after
/// [`BoundReport::evaluate`]) its verdict against the computed degree.
#[derive(Clone, Debug, Serialize)]
pub struct BoundReport {
    /// Stable slug identifying the bound.
    pub name: &'static str,
    pub kind: BoundKind,
    /// The numeric bound; `None` when inapplicable.
    pub value: Option<u64>,
    pub applicable: bool,
    /// Why the bound applies or why it was ruled out.
    pub reason: String,
    /// `None` until evaluated against a degree.
    pub verdict: Option<Verdict>,
    /// Whether the computed degree meets the bound exactly.
    pub attained: bool,
}

impl BoundReport {
    fn applicable(name: &'static str, kind: BoundKind, value: u128, reason: String) -> Self {
        match u64::try_from(value) {
            Ok(v) => BoundReport {
                name,
                kind,
                value: Some(v),
                applicable: true,
                reason,
                verdict: None,
                attained: false,
            },
            Err(_) => Self::not_applicable(name, kind, "bound value exceeds the integer range"),
        }
    }

    fn not_applicable(name: &'static str, kind: BoundKind, reason: impl Into<String>) -> Self {
        BoundReport {
            name,
            kind,
            value: None,
            applicable: false,
            reason: reason.into(),
            verdict: Some(Verdict::NotApplicable),
            attained: false,
        }
    }

    /// Fills in the verdict by comparing against the computed degree.
    pub fn evaluate(&mut self, degree: u64) {
        if !self.applicable {
            self.verdict = Some(Verdict::NotApplicable);
            return;
        }
        let value = match self.value {
            Some(v) => v,
            None => {
                self.verdict = Some(Verdict::NotApplicable);
                return;
            }
        };
        let ok = match self.kind {
            BoundKind::Upper => value >= degree,
            BoundKind::Lower => value <= degree,
            BoundKind::Equality => value == degree,
        };
        self.verdict = Some(if ok { Verdict::Holds } else { Verdict::Violated });
        self.attained = value == degree;
    }
}

/// Precomputed facts the upper-bound battery depends on.
#[derive(Clone, Debug)]
pub struct UpperBoundExtras {
    /// Codimension of the base ideal inside the source coordinate ring.
    pub codim_base: usize,
    /// Whether the source coordinate ring is known factorial (always true
    /// for a polynomial ring; user-declared otherwise).
    pub factorial: bool,
    /// Largest degree of a common factor between two of the forms, if any.
    pub common_factor: Option<u64>,
    /// Whether every lowest-degree defining relation already lies in the
    /// linear subideal (`Some(true)` blocks the improved product bound);
    /// `None` when the membership test was not run.
    pub improved_obstructed: Option<bool>,
}

fn prod(degrees: &[u64]) -> u128 {
    degrees.iter().map(|&d| d as u128).product()
}

/// The upper-bound battery.
///
/// `degrees` are the generator degrees of a rank-`m` syzygy submodule
/// (normally the minimal syzygy degrees), sorted descending; `s` is the
/// linear rank of the Rees equations; `e_r` is the multiplicity of the
/// source.  The minimal-prime/grade hypotheses behind the product bounds
/// are certified by `extras.codim_base ≥ 2`.
pub fn upper_bounds(
    spec: &RationalMapSpec,
    degrees: &[u64],
    s: usize,
    e_r: u64,
    extras: &UpperBoundExtras,
) -> Vec<BoundReport> {
    let t = spec.t();
    let r = degrees.len();
    let m = spec.m();
    let d = spec.d();
    let e = e_r as u128;
    let mut out = Vec::new();

    let grade_ok = extras.codim_base >= 2;
    let grade_reason = format!(
        "base ideal has codimension {} (grade at least 2 is required to certify the \
         minimal-prime hypothesis)",
        extras.codim_base
    );
    let product_ready = grade_ok && t >= 1 && r >= t && r >= 1;
    let product_obstacle = || -> String {
        if !grade_ok {
            grade_reason.clone()
        } else if t == 0 {
            "the source is zero-dimensional".into()
        } else if r == 0 {
            "the forms admit no syzygies".into()
        } else {
            format!("only {r} syzygy degrees for a source of dimension {t}")
        }
    };

    // Product of the t−1 largest syzygy degrees times the smallest.
    out.push(if product_ready {
        let value = prod(&degrees[..t - 1]) * degrees[r - 1] as u128 * e;
        BoundReport::applicable(
            "syzygy-degree-product",
            BoundKind::Upper,
            value,
            grade_reason.clone(),
        )
    } else {
        BoundReport::not_applicable("syzygy-degree-product", BoundKind::Upper, product_obstacle())
    });

    // Factorial refinement: swap one top factor for the second-smallest.
    out.push(if product_ready && extras.factorial && t >= 2 && r >= 2 {
        let value =
            prod(&degrees[..t - 2]) * degrees[r - 2] as u128 * degrees[r - 1] as u128 * e;
        BoundReport::applicable(
            "factorial-refinement",
            BoundKind::Upper,
            value,
            "source coordinate ring is factorial".into(),
        )
    } else if !product_ready {
        BoundReport::not_applicable("factorial-refinement", BoundKind::Upper, product_obstacle())
    } else if !extras.factorial {
        BoundReport::not_applicable(
            "factorial-refinement",
            BoundKind::Upper,
            "source coordinate ring is not known to be factorial",
        )
    } else {
        BoundReport::not_applicable(
            "factorial-refinement",
            BoundKind::Upper,
            "needs a source of dimension at least 2 and at least two syzygies",
        )
    });

    // Linear rank: drop the s largest factors.
    out.push(if product_ready {
        let (value, note) = if s >= t {
            (e, format!("linear rank {s} reaches the source dimension {t}"))
        } else {
            (
                prod(&degrees[..t - s]) * e,
                format!("linear rank {s} removes {s} of the {t} product factors"),
            )
        };
        BoundReport::applicable("linear-rank", BoundKind::Upper, value, note)
    } else {
        BoundReport::not_applicable("linear-rank", BoundKind::Upper, product_obstacle())
    });

    // Improved linear rank: also pull the last factor down to the smallest
    // degree, provided a lowest-degree relation survives outside the linear
    // subideal.
    out.push(if product_ready && s < t {
        match extras.improved_obstructed {
            Some(false) => {
                let value = prod(&degrees[..t - s - 1]) * degrees[r - 1] as u128 * e;
                BoundReport::applicable(
                    "improved-linear-rank",
                    BoundKind::Upper,
                    value,
                    "a lowest-degree relation lies outside the linear subideal".into(),
                )
            }
            Some(true) => BoundReport::not_applicable(
                "improved-linear-rank",
                BoundKind::Upper,
                "every lowest-degree relation lies inside the linear subideal",
            ),
            None => BoundReport::not_applicable(
                "improved-linear-rank",
                BoundKind::Upper,
                "the linear-subideal membership test was not run",
            ),
        }
    } else if !product_ready {
        BoundReport::not_applicable("improved-linear-rank", BoundKind::Upper, product_obstacle())
    } else {
        BoundReport::not_applicable(
            "improved-linear-rank",
            BoundKind::Upper,
            format!("linear rank {s} already reaches the source dimension {t}"),
        )
    });

    // Two-dimensional source: the rank alone decides the shape.
    out.push(if product_ready && t == 2 {
        if s >= 2 {
            BoundReport::applicable(
                "surface-case",
                BoundKind::Equality,
                1,
                "linear rank at least 2 on a surface forces a birational map".into(),
            )
        } else if s == 1 {
            BoundReport::applicable(
                "surface-case",
                BoundKind::Upper,
                degrees[0] as u128 * e,
                "one linear relation on a surface".into(),
            )
        } else {
            BoundReport::applicable(
                "surface-case",
                BoundKind::Upper,
                degrees[0] as u128 * degrees[r - 1] as u128 * e,
                "no linear relations on a surface".into(),
            )
        }
    } else if !product_ready {
        BoundReport::not_applicable("surface-case", BoundKind::Upper, product_obstacle())
    } else {
        BoundReport::not_applicable(
            "surface-case",
            BoundKind::Upper,
            format!("source has dimension {t}, not 2"),
        )
    });

    // Common factor between two forms.
    out.push(match extras.common_factor {
        Some(delta) if grade_ok && m >= 1 && delta >= 1 && delta < d => {
            let value = (d - delta) as u128 * (d as u128).pow(m as u32 - 1) * e;
            BoundReport::applicable(
                "common-factor",
                BoundKind::Upper,
                value,
                format!("two forms share a factor of degree {delta}"),
            )
        }
        Some(delta) if delta >= d => BoundReport::not_applicable(
            "common-factor",
            BoundKind::Upper,
            "two forms are proportional, so the reduced relations drop rank",
        ),
        Some(_) | None if !grade_ok => {
            BoundReport::not_applicable("common-factor", BoundKind::Upper, grade_reason.clone())
        }
        _ => BoundReport::not_applicable(
            "common-factor",
            BoundKind::Upper,
            "no two forms share a factor",
        ),
    });

    // Complete intersection: codimension equal to the number of forms turns
    // the product into an equality.
    out.push(if m == t && extras.codim_base == m + 1 {
        BoundReport::applicable(
            "complete-intersection",
            BoundKind::Equality,
            (d as u128).pow(m as u32) * e,
            "the forms are a maximal regular sequence (codimension equals their number)".into(),
        )
    } else {
        BoundReport::not_applicable(
            "complete-intersection",
            BoundKind::Equality,
            format!(
                "codimension {} with {} forms on a {}-dimensional source is not a \
                 zero-dimensional complete intersection",
                extras.codim_base,
                m + 1,
                t
            ),
        )
    });

    out
}

/// The lower-bound battery.
///
/// `reg_fiber` is the regularity proxy from sampled fibers; `j_linear_zero`
/// asserts that the Rees equations have no bidegree-(1,·) part at all
/// (stronger than `s == 0` when the image is not all of its ambient space).
pub fn lower_bounds(
    spec: &RationalMapSpec,
    s: usize,
    reg_fiber: Option<u64>,
    j_linear_zero: bool,
    budget: &Budget,
) -> Result<Vec<BoundReport>> {
    let n = spec.n();
    let mut out = Vec::new();

    // The embedding-codimension argument needs a non-degenerate source.
    let degenerate = matches!(spec.variety().min_basis_degree(budget)?, Some(1));
    let degeneracy_reason =
        "the source variety lies in a hyperplane, so the embedding-codimension count is off";

    out.push(if degenerate {
        BoundReport::not_applicable("rank-defect", BoundKind::Lower, degeneracy_reason)
    } else {
        BoundReport::applicable(
            "rank-defect",
            BoundKind::Lower,
            (n as u128 + 1).saturating_sub(s as u128),
            format!("embedding dimension {} minus linear rank {s}", n + 1),
        )
    });

    out.push(match (degenerate, reg_fiber) {
        (true, _) => BoundReport::not_applicable(
            "rank-defect-regularity",
            BoundKind::Lower,
            degeneracy_reason,
        ),
        (false, None) => BoundReport::not_applicable(
            "rank-defect-regularity",
            BoundKind::Lower,
            "no fiber regularity is available",
        ),
        (false, Some(reg)) => {
            let raw = (n as i128 + 1 - s as i128) + reg as i128 - 2;
            BoundReport::applicable(
                "rank-defect-regularity",
                BoundKind::Lower,
                raw.max(0) as u128,
                format!("rank-defect bound improved by the fiber regularity {reg}"),
            )
        }
    });

    out.push(if degenerate {
        BoundReport::not_applicable("no-linear-relations", BoundKind::Lower, degeneracy_reason)
    } else if j_linear_zero {
        BoundReport::applicable(
            "no-linear-relations",
            BoundKind::Lower,
            n as u128 + 1,
            "the Rees equations have no linear part in the source variables".into(),
        )
    } else {
        BoundReport::not_applicable(
            "no-linear-relations",
            BoundKind::Lower,
            "the Rees equations have a linear part in the source variables",
        )
    });

    Ok(out)
}

/// Verdict of the fiber-regularity cap against the syzygy degrees.
#[derive(Clone, Debug, Serialize)]
pub struct RegularityCheck {
    pub applicable: bool,
    pub reason: String,
    /// The degree-sum cap, when applicable.
    pub bound: Option<u64>,
    /// The regularity proxy being compared.
    pub reg_fiber: Option<u64>,
    /// `None` when the check could not be run.
    pub verdict: Option<Verdict>,
}

/// Checks the fiber-regularity cap
/// `reg ≤ d_1 + … + d_{n−2} + d_{r−1} + d_r − n + 1`,
/// valid when the source is the full projective space of dimension at
/// least 2.
pub fn regularity_bound_check(
    spec: &RationalMapSpec,
    degrees: &[u64],
    reg_fiber: Option<u64>,
) -> RegularityCheck {
    let n = spec.n();
    let r = degrees.len();
    if !spec.variety().is_zero() {
        return RegularityCheck {
            applicable: false,
            reason: "the source is a proper subvariety, not the full projective space".into(),
            bound: None,
            reg_fiber,
            verdict: None,
        };
    }
    if n < 2 {
        return RegularityCheck {
            applicable: false,
            reason: format!("the source projective space has dimension {n}, below 2"),
            bound: None,
            reg_fiber,
            verdict: None,
        };
    }
    if r < n || r < 2 {
        return RegularityCheck {
            applicable: false,
            reason: format!("only {r} syzygy degrees for a source of dimension {n}"),
            bound: None,
            reg_fiber,
            verdict: None,
        };
    }
    let sum: i128 = degrees[..n - 2].iter().map(|&d| d as i128).sum::<i128>()
        + degrees[r - 2] as i128
        + degrees[r - 1] as i128
        - n as i128
        + 1;
    let bound = sum.max(0) as u64;
    let (reason, verdict) = match reg_fiber {
        Some(reg) => (
            format!("comparing the fiber-regularity proxy {reg} against the degree-sum cap"),
            Some(if reg <= bound {
                Verdict::Holds
            } else {
                Verdict::Violated
            }),
        ),
        None => (
            "no fiber regularity is available to compare".into(),
            None,
        ),
    };
    RegularityCheck {
        applicable: true,
        reason,
        bound: Some(bound),
        reg_fiber,
        verdict,
    }
}

/// Codimension of the base ideal inside the coordinate ring of the source
/// variety.
pub fn base_codimension(spec: &RationalMapSpec, budget: &Budget) -> Result<usize> {
    let ring = spec.ring();
    let ambient_dim = if spec.variety().is_zero() {
        ring.nvars()
    } else {
        ops::krull_dimension(spec.variety(), budget)?
    };
    let base = IdealHandle::new(ring, spec.forms().to_vec())?;
    let total = if spec.variety().is_zero() {
        base
    } else {
        ops::ideal_sum(&base, spec.variety())?
    };
    let quotient_dim = ops::krull_dimension(&total, budget)?;
    Ok(ambient_dim - quotient_dim)
}

/// Largest degree of a common factor between two of the forms, detected in
/// the ambient polynomial ring via `deg gcd = deg f + deg g − deg lcm`,
/// with the least common multiple read off the intersection of principal
/// ideals.
pub fn common_factor_degree(forms: &[Polynomial], budget: &Budget) -> Result<Option<u64>> {
    let mut best: Option<u64> = None;
    for i in 0..forms.len() {
        for j in (i + 1)..forms.len() {
            let (fi, fj) = (&forms[i], &forms[j]);
            let ring = fi.ring();
            let a = IdealHandle::new(ring, vec![fi.clone()])?;
            let b = IdealHandle::new(ring, vec![fj.clone()])?;
            let inter = ops::intersect(&a, &b, budget)?;
            if inter.generators().len() != 1 {
                continue;
            }
            let lcm_deg = inter.generators()[0]
                .degree()
                .ok_or_else(|| Error::invalid("zero least common multiple"))?;
            let di = fi.degree().unwrap_or(0);
            let dj = fj.degree().unwrap_or(0);
            let delta = (di + dj).saturating_sub(lcm_deg);
            if delta >= 1 && best.is_none_or(|b| delta > b) {
                best = Some(delta);
            }
        }
    }
    Ok(best)
}

/// Whether every lowest-degree generator of the symmetric-algebra ideal
/// already lies in the subideal spanned by the linear part (plus the image
/// equations).  When that membership holds, the improved product bound is
/// blocked.  A truncated linear part is treated as blocking, since
/// membership can then not be refuted.
pub fn improved_bound_obstructed(rees: &ReesData, budget: &Budget) -> Result<bool> {
    let sym = rees.symmetric();
    if sym.is_zero() {
        return Ok(true);
    }
    let linear = rees.x_linear();
    if !linear.complete {
        return Ok(true);
    }
    let s_ring = rees.s_ring();
    let x_count = rees.spec().ring().nvars();
    let mut membership = linear.forms.clone();
    for g in rees.fiber().generators() {
        membership.push(g.shift_right(s_ring, x_count));
    }
    let lowest = sym
        .generators()
        .iter()
        .filter_map(|g| g.bidegree().map(|(xd, _)| xd))
        .min()
        .ok_or_else(|| Error::invalid("symmetric ideal without bihomogeneous generators"))?;
    if membership.is_empty() {
        // Membership in the zero ideal fails for any nonzero generator.
        return Ok(false);
    }
    let handle = IdealHandle::new(s_ring, membership)?;
    for g in sym.generators() {
        if g.bidegree().map(|(xd, _)| xd) == Some(lowest) && !handle.contains(g, budget)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A verified sequence of random combinations cutting the codimension one
/// step at a time.
#[derive(Clone, Debug)]
pub struct HeightSequence {
    pub elements: Vec<Polynomial>,
    /// Degree schedule actually used (the largest generator degrees,
    /// descending).
    pub degrees: Vec<u64>,
    /// Fresh draws each step needed beyond the first attempt.
    pub retries_per_step: Vec<u32>,
}

fn monomials_of_degree(nvars: usize, degree: u64) -> Vec<Monomial> {
    fn rec(exps: &mut Vec<u32>, index: usize, remaining: u32, out: &mut Vec<Monomial>) {
        if index + 1 == exps.len() {
            exps[index] = remaining;
            out.push(Monomial::from_exps(exps.clone()));
            return;
        }
        for e in 0..=remaining {
            exps[index] = e;
            rec(exps, index + 1, remaining - e, out);
        }
    }
    let mut out = Vec::new();
    if nvars == 0 {
        return out;
    }
    rec(&mut vec![0; nvars], 0, degree as u32, &mut out);
    out
}

fn random_form(ring: &RingRef, degree: u64, rng: &mut rand_chacha::ChaCha8Rng) -> Polynomial {
    let field = ring.field();
    let terms = monomials_of_degree(ring.nvars(), degree)
        .into_iter()
        .map(|m| (random_coeff(field, rng), m))
        .collect();
    Polynomial::from_terms(ring, terms)
}

/// Builds elements `α_1, …, α_target` of the ideal, with `deg α_i` the
/// `i`-th largest generator degree, such that the first `i` of them span
/// codimension exactly `i` — verified by a dimension computation at every
/// step, with up to [`HEIGHT_RETRY_CAP`] fresh draws per step.
pub fn generic_height_sequence(
    a: &IdealHandle,
    target: usize,
    seed: u64,
    budget: &Budget,
) -> Result<HeightSequence> {
    if a.is_zero() {
        return Err(Error::invalid("height sequence of the zero ideal"));
    }
    if !a.is_homogeneous() {
        return Err(Error::NonHomogeneous(
            "height sequences need a homogeneous ideal".into(),
        ));
    }
    if target == 0 {
        return Err(Error::invalid("requested height must be positive"));
    }
    let available = ops::codimension(a, budget)?;
    if target > available {
        return Err(Error::invalid(format!(
            "requested height {target} exceeds the codimension {available}"
        )));
    }
    let ring = a.ring();
    let mut gen_degrees: Vec<u64> = a
        .generators()
        .iter()
        .map(|g| g.degree().expect("nonzero generator"))
        .collect();
    gen_degrees.sort_unstable_by(|x, y| y.cmp(x));
    let schedule: Vec<u64> = gen_degrees[..target].to_vec();

    let mut elements: Vec<Polynomial> = Vec::with_capacity(target);
    let mut retries = Vec::with_capacity(target);
    for (step, &deg) in schedule.iter().enumerate() {
        let mut rng = exec::rng_for(seed, tags::HEIGHT_SEQUENCE, step as u64);
        let mut placed = false;
        for attempt in 0..HEIGHT_RETRY_CAP {
            let mut alpha = Polynomial::zero(ring);
            for g in a.generators() {
                let gd = g.degree().expect("nonzero generator");
                if gd > deg {
                    continue;
                }
                alpha = alpha.add(&g.mul(&random_form(ring, deg - gd, &mut rng)));
            }
            if alpha.is_zero() {
                continue;
            }
            let mut candidate = elements.clone();
            candidate.push(alpha.clone());
            let trial = IdealHandle::new(ring, candidate)?;
            if ops::codimension(&trial, budget)? == step + 1 {
                elements.push(alpha);
                retries.push(attempt);
                placed = true;
                break;
            }
        }
        if !placed {
            return Err(Error::Sampling(format!(
                "step {} of the height sequence found no degree-{deg} element cutting the \
                 codimension within {HEIGHT_RETRY_CAP} draws",
                step + 1
            )));
        }
    }
    Ok(HeightSequence {
        elements,
        degrees: schedule,
        retries_per_step: retries,
    })
}

/// Sum of the degrees of the reduced irreducible components of a monomial
/// subscheme.  Every component is a coordinate subspace (degree 1), so the
/// count equals the number of minimal primes, i.e. of minimal vertex
/// covers of the generator supports.
pub fn delta_degree(z: &IdealHandle) -> Result<u64> {
    let mut supports: Vec<Vec<usize>> = Vec::new();
    for g in z.generators() {
        if g.num_terms() != 1 {
            return Err(Error::invalid(
                "component counting is implemented for monomial ideals only",
            ));
        }
        let support = g.terms()[0].1.support();
        if support.is_empty() {
            // A unit generator: the subscheme is empty.
            return Ok(0);
        }
        supports.push(support);
    }
    if supports.is_empty() {
        // The zero ideal cuts nothing: one component, the whole space.
        return Ok(1);
    }
    let mut vars: Vec<usize> = supports.iter().flatten().copied().collect();
    vars.sort_unstable();
    vars.dedup();
    if vars.len() > 20 {
        return Err(Error::invalid(
            "component counting supports at most 20 distinct variables",
        ));
    }
    let masks: Vec<u32> = supports
        .iter()
        .map(|s| {
            s.iter()
                .map(|v| vars.iter().position(|w| w == v).expect("indexed variable"))
                .fold(0u32, |acc, i| acc | (1 << i))
        })
        .collect();
    let mut covers: Vec<u32> = Vec::new();
    for mask in 0u32..(1u32 << vars.len()) {
        if masks.iter().all(|m| m & mask != 0) {
            covers.push(mask);
        }
    }
    let minimal = covers
        .iter()
        .filter(|&&c| !covers.iter().any(|&o| o != c && o & c == o))
        .count();
    Ok(minimal as u64)
}

fn int_det(matrix: &[Vec<i128>]) -> i128 {
    let n = matrix.len();
    if n == 0 {
        return 1;
    }
    if n == 1 {
        return matrix[0][0];
    }
    let mut det = 0i128;
    for (i, row) in matrix.iter().enumerate() {
        if row[0] == 0 {
            continue;
        }
        let minor: Vec<Vec<i128>> = matrix
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != i)
            .map(|(_, r)| r[1..].to_vec())
            .collect();
        let sign = if i % 2 == 0 { 1 } else { -1 };
        det += sign * row[0] * int_det(&minor);
    }
    det
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for i in start..n {
            current.push(i);
            rec(i + 1, n, k, current, out);
            current.pop();
        }
    }
    rec(0, n, k, &mut current, &mut out);
    out
}

/// Log-matrix birationality test for a monomial map: the map is birational
/// onto its image exactly when the greatest common divisor of the maximal
/// minors of the exponent matrix equals the common degree.
pub fn monomial_birationality_check(spec: &RationalMapSpec) -> Result<bool> {
    if !spec.variety().is_zero() {
        return Err(Error::invalid(
            "the log-matrix test needs the full projective space as source",
        ));
    }
    let nvars = spec.ring().nvars();
    let mut rows: Vec<Vec<i128>> = Vec::with_capacity(spec.forms().len());
    for f in spec.forms() {
        if f.num_terms() != 1 {
            return Err(Error::invalid("the log-matrix test needs monomial forms"));
        }
        let m = &f.terms()[0].1;
        rows.push(m.exps().iter().map(|&e| e as i128).collect());
    }
    let k = rows.len().min(nvars);
    let mut gcd: i128 = 0;
    for row_set in combinations(rows.len(), k) {
        for col_set in combinations(nvars, k) {
            let sub: Vec<Vec<i128>> = row_set
                .iter()
                .map(|&r| col_set.iter().map(|&c| rows[r][c]).collect())
                .collect();
            gcd = gcd.gcd(&int_det(&sub));
        }
    }
    Ok(gcd.unsigned_abs() == spec.d() as u128)
}

/// Result of the syzygy-degree obstruction to a Noether normalization.
#[derive(Clone, Debug, Serialize)]
pub struct NoetherCheck {
    /// Column degrees of the selected maximal-rank syzygy submatrix,
    /// descending.
    pub degrees: Vec<u64>,
    /// Their product.
    pub product: u64,
    /// The threshold `d^t` the product must reach.
    pub threshold: u64,
    pub holds: bool,
}

/// Rank of a polynomial matrix (rows over the fraction field), by
/// fraction-free elimination with exact zero tests.
fn poly_matrix_rank(rows: &[Vec<Polynomial>]) -> usize {
    let mut pivots: Vec<(usize, Vec<Polynomial>)> = Vec::new();
    for row in rows {
        let mut current = row.clone();
        'reduce: loop {
            let lead = match current.iter().position(|p| !p.is_zero()) {
                Some(l) => l,
                None => break 'reduce,
            };
            match pivots.iter().find(|(pl, _)| *pl == lead) {
                Some((_, pivot_row)) => {
                    let pivot_val = pivot_row[lead].clone();
                    let row_val = current[lead].clone();
                    current = current
                        .iter()
                        .zip(pivot_row.iter())
                        .map(|(a, b)| a.mul(&pivot_val).sub(&b.mul(&row_val)))
                        .collect();
                }
                None => {
                    pivots.push((lead, current));
                    break 'reduce;
                }
            }
        }
    }
    pivots.len()
}

/// Obstruction test for `t+1` equal-degree forms in a polynomial ring of
/// dimension `t+1` to be a Noether normalization: when the extension they
/// generate is integral, the column degrees `d_1, …, d_t` of any
/// maximal-rank syzygy submatrix satisfy `d_1⋯d_t ≥ d^t`.  The submatrix
/// with the smallest degree product is selected, making the check as sharp
/// as the criterion allows.
pub fn noether_obstruction(forms: &[Polynomial], budget: &Budget) -> Result<NoetherCheck> {
    if forms.len() < 2 {
        return Err(Error::invalid(
            "the obstruction needs at least two forms",
        ));
    }
    let ring = forms[0].ring().clone();
    if forms.iter().any(|f| f.ring() != &ring) {
        return Err(Error::RingMismatch("forms from different rings".into()));
    }
    if forms.len() != ring.nvars() {
        return Err(Error::invalid(format!(
            "{} forms cannot be a Noether normalization of a polynomial ring in {} variables",
            forms.len(),
            ring.nvars()
        )));
    }
    let d = forms[0]
        .degree()
        .filter(|_| forms.iter().all(|f| f.is_homogeneous() && !f.is_zero()))
        .ok_or_else(|| Error::NonHomogeneous("the forms must be nonzero and homogeneous".into()))?;
    if forms.iter().any(|f| f.degree() != Some(d)) {
        return Err(Error::invalid("the forms must share one degree"));
    }
    let t = forms.len() - 1;
    let ideal = IdealHandle::new(&ring, forms.to_vec())?;
    if ops::codimension(&ideal, budget)? != t + 1 {
        return Err(Error::invalid(
            "integrality certificate failed: the forms do not cut the ambient space down to \
             a point",
        ));
    }
    let psi = presentation_matrix(forms, &[], budget)?;
    let mut order: Vec<usize> = (0..psi.ncols()).collect();
    order.sort_by_key(|&c| psi.col_degrees()[c]);
    let mut chosen: Vec<Vec<Polynomial>> = Vec::with_capacity(t);
    let mut degrees: Vec<u64> = Vec::with_capacity(t);
    for &c in &order {
        if chosen.len() == t {
            break;
        }
        let column: Vec<Polynomial> = (0..psi.nrows()).map(|r| psi.entry(r, c).clone()).collect();
        let mut trial = chosen.clone();
        trial.push(column.clone());
        if poly_matrix_rank(&trial) == trial.len() {
            chosen.push(column);
            degrees.push((psi.col_degrees()[c] - d as i64) as u64);
        }
    }
    if chosen.len() != t {
        return Err(Error::invalid(
            "the syzygy matrix has deficient rank; the forms are not algebraically independent",
        ));
    }
    degrees.sort_unstable_by(|x, y| y.cmp(x));
    let product = prod(&degrees);
    let threshold = (d as u128).pow(t as u32);
    Ok(NoetherCheck {
        degrees,
        product: u64::try_from(product)
            .map_err(|_| Error::invalid("degree product exceeds the integer range"))?,
        threshold: u64::try_from(threshold)
            .map_err(|_| Error::invalid("degree threshold exceeds the integer range"))?,
        holds: product >= threshold,
    })
}
