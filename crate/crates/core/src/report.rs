//! One orchestrated pass from a map description to a serializable
//! analysis document.
//!
//! [`assemble_report`] runs the full pipeline — syzygies, Rees algebra,
//! fiber sampling, degree, bound battery — and renders the results into
//! plain-data structures (numbers, strings, ordered maps) so the document
//! serializes deterministically and never drags ring handles across crate
//! boundaries.  Stage failures are wrapped in [`Error::Stage`], keeping
//! the underlying variant reachable for exit-code mapping.
//!
//! The degree is the modal multiplicity across sampled fibers (ties broken
//! downward) and the full distribution is part of the document, so a
//! non-general sample shows up as a visible outlier instead of a silent
//! bias.  The fiber regularity entering the lower bounds is likewise the
//! modal value across valid trials, flagged in the warnings as a
//! specialization proxy.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::bounds::{
    base_codimension, common_factor_degree, improved_bound_obstructed, lower_bounds,
    monomial_birationality_check, noether_obstruction, regularity_bound_check, upper_bounds,
    BoundReport, NoetherCheck, RegularityCheck, UpperBoundExtras,
};
use crate::error::{Error, Result};
use crate::exec::ExecMode;
use crate::fiber::{degree_via_general_fiber, FiberData};
use crate::groebner::Budget;
use crate::hilbert::hilbert_data;
use crate::ideal::IdealHandle;
use crate::ops;
use crate::rees::{RationalMapSpec, ReesData};
use crate::resolution::{minimal_free_resolution, presentation_matrix, syzygy_degree_vector};

/// How many Rees-ideal generators the rendered report lists before
/// truncating (the full count is always reported).
const RENDERED_GENERATOR_CAP: usize = 12;

/// Knobs for [`assemble_report`].
#[derive(Clone, Debug)]
pub struct ReportOptions {
    /// Independent fiber samples feeding the modal degree.
    pub trials: u64,
    pub seed: u64,
    /// Cap on the y-degree scanned for linear relations; `None` uses the
    /// built-in default.
    pub y_degree_cap: Option<u64>,
    pub mode: ExecMode,
    /// Declares the source coordinate ring factorial; `None` derives the
    /// flag (true exactly when the source is the full projective space).
    pub factorial: Option<bool>,
    pub budget: Budget,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions {
            trials: 5,
            seed: 42,
            y_degree_cap: None,
            mode: ExecMode::default(),
            factorial: None,
            budget: Budget::default(),
        }
    }
}

/// The headline numbers of the analyzed map.
#[derive(Clone, Debug, Serialize)]
pub struct Invariants {
    /// Source ambient projective dimension.
    pub n: usize,
    /// Target projective dimension.
    pub m: usize,
    /// Common degree of the defining forms.
    pub d: u64,
    /// Dimension of the source variety.
    pub t: usize,
    /// Multiplicity of the source coordinate ring.
    pub multiplicity: u64,
    /// Minimal syzygy degrees, descending.
    pub syzygy_degrees: Vec<u64>,
    /// Rank of the linear part of the Rees equations.
    pub jdrank: usize,
    pub analytic_spread: usize,
    pub characteristic: u64,
}

/// The computed degree with its trial statistics.
#[derive(Clone, Debug, Serialize)]
pub struct DegreeSummary {
    pub value: u64,
    pub trials: u64,
    pub valid_trials: usize,
    /// Fiber multiplicity → number of valid trials that produced it.
    pub distribution: BTreeMap<u64, usize>,
    /// Cross-check remark tying the fiber count to the multiplicity route.
    pub note: String,
}

/// The full bound battery with the auxiliary certificates.
#[derive(Clone, Debug, Serialize)]
pub struct BoundsBlock {
    pub upper: Vec<BoundReport>,
    pub lower: Vec<BoundReport>,
    pub regularity_cap: RegularityCheck,
    /// Log-matrix birationality verdict (monomial maps on projective
    /// space only).
    pub monomial_birational: Option<bool>,
    /// Syzygy-degree obstruction when the forms could be a Noether
    /// normalization.
    pub noether: Option<NoetherCheck>,
}

/// Betti numbers of the base ideal over the ambient polynomial ring.
#[derive(Clone, Debug, Serialize)]
pub struct BettiSummary {
    /// `"i,j"` → rank of the degree-`j` part of the `i`-th free module.
    pub entries: BTreeMap<String, usize>,
    pub regularity: i64,
    /// Length of the minimal free resolution.
    pub length: usize,
    /// Staircase rendering for terminal display.
    pub table: String,
}

/// Rees-algebra facts, with generator lists rendered to strings.
#[derive(Clone, Debug, Serialize)]
pub struct ReesSummary {
    pub jdrank: usize,
    pub analytic_spread: usize,
    pub x_linear_forms: Vec<String>,
    pub x_linear_complete: bool,
    pub x_linear_cap: u64,
    /// Whether the symmetric-algebra relations already present the Rees
    /// algebra.
    pub linear_type: bool,
    pub symmetric_generator_count: usize,
    pub rees_generator_count: usize,
    /// Rees-ideal generators, truncated to a display cap.
    pub rees_generators: Vec<String>,
    /// Defining equations of the image.
    pub image_equations: Vec<String>,
}

/// One sampled fiber, rendered.
#[derive(Clone, Debug, Serialize)]
pub struct FiberSummary {
    pub point: Vec<String>,
    pub image: Vec<String>,
    pub dimension: usize,
    pub multiplicity: u64,
    pub regularity: u64,
    pub valid: bool,
}

/// The complete analysis document.
#[derive(Clone, Debug, Serialize)]
pub struct DegreeReport {
    pub invariants: Invariants,
    pub degree: DegreeSummary,
    pub bounds: BoundsBlock,
    pub betti: BettiSummary,
    pub rees: ReesSummary,
    pub fibers: Vec<FiberSummary>,
    pub warnings: Vec<String>,
}

fn stage(label: &'static str, e: Error) -> Error {
    Error::staged(label, e)
}

/// Modal value, ties broken downward; `None` on an empty input.
fn modal(values: impl Iterator<Item = u64>) -> Option<u64> {
    let mut counts: BTreeMap<u64, usize> = BTreeMap::new();
    for v in values {
        *counts.entry(v).or_insert(0) += 1;
    }
    let mut best: Option<(u64, usize)> = None;
    for (&v, &c) in &counts {
        if best.is_none_or(|(_, bc)| c > bc) {
            best = Some((v, c));
        }
    }
    best.map(|(v, _)| v)
}

fn render_fiber(f: &FiberData) -> FiberSummary {
    FiberSummary {
        point: f.sample_point.iter().map(|c| c.to_string()).collect(),
        image: f.image_point.iter().map(|c| c.to_string()).collect(),
        dimension: f.fiber_dim,
        multiplicity: f.fiber_multiplicity,
        regularity: f.reg_fiber,
        valid: f.is_valid(),
    }
}

/// Runs the whole pipeline and renders the document.
pub fn assemble_report(spec: &RationalMapSpec, options: &ReportOptions) -> Result<DegreeReport> {
    let budget = &options.budget;
    let ring = spec.ring();

    let psi = presentation_matrix(spec.forms(), spec.variety().generators(), budget)
        .map_err(|e| stage("syzygy stage", e))?;
    let degrees =
        syzygy_degree_vector(&psi, spec.d()).map_err(|e| stage("syzygy stage", e))?;

    let source = hilbert_data(spec.variety(), budget).map_err(|e| stage("invariant stage", e))?;
    let e_r = source.multiplicity;

    let rees = ReesData::build(spec, options.y_degree_cap, budget)
        .map_err(|e| stage("Rees stage", e))?;
    let s = rees.jdrank();

    let (degree_value, trial_data) =
        degree_via_general_fiber(spec, options.trials, options.seed, options.mode, budget)
            .map_err(|e| stage("degree stage", e))?;
    let valid: Vec<&FiberData> = trial_data.iter().filter(|t| t.is_valid()).collect();
    let distribution: BTreeMap<u64, usize> = {
        let mut map = BTreeMap::new();
        for t in &valid {
            *map.entry(t.fiber_multiplicity).or_insert(0) += 1;
        }
        map
    };
    let reg_proxy = modal(valid.iter().map(|t| t.reg_fiber));

    let factorial = options
        .factorial
        .unwrap_or_else(|| spec.variety().is_zero());
    let extras = UpperBoundExtras {
        codim_base: base_codimension(spec, budget).map_err(|e| stage("bound stage", e))?,
        factorial,
        common_factor: common_factor_degree(spec.forms(), budget)
            .map_err(|e| stage("bound stage", e))?,
        improved_obstructed: Some(
            improved_bound_obstructed(&rees, budget).map_err(|e| stage("bound stage", e))?,
        ),
    };
    let mut upper = upper_bounds(spec, &degrees, s, e_r, &extras);
    let j_linear_zero = rees.x_linear().forms.is_empty()
        && rees.x_linear().complete
        && rees.fiber().is_zero();
    let mut lower = lower_bounds(spec, s, reg_proxy, j_linear_zero, budget)
        .map_err(|e| stage("bound stage", e))?;
    for b in upper.iter_mut().chain(lower.iter_mut()) {
        b.evaluate(degree_value);
    }
    let regularity_cap = regularity_bound_check(spec, &degrees, reg_proxy);

    let all_monomial = spec.forms().iter().all(|f| f.num_terms() == 1);
    let monomial_birational = if spec.variety().is_zero() && all_monomial {
        Some(monomial_birationality_check(spec).map_err(|e| stage("bound stage", e))?)
    } else {
        None
    };
    let noether = if spec.variety().is_zero() && spec.forms().len() == ring.nvars() {
        noether_obstruction(spec.forms(), budget).ok()
    } else {
        None
    };

    let base =
        IdealHandle::new(ring, spec.forms().to_vec()).map_err(|e| stage("resolution stage", e))?;
    let resolved = if spec.variety().is_zero() {
        base
    } else {
        ops::ideal_sum(&base, spec.variety()).map_err(|e| stage("resolution stage", e))?
    };
    let betti_table =
        minimal_free_resolution(&resolved, budget).map_err(|e| stage("resolution stage", e))?;
    let betti = BettiSummary {
        entries: betti_table.to_string_map(),
        regularity: betti_table
            .regularity()
            .map_err(|e| stage("resolution stage", e))?,
        length: betti_table.length(),
        table: betti_table.to_string(),
    };

    let linear_type = rees
        .symmetric()
        .equals(rees.rees(), budget)
        .map_err(|e| stage("Rees stage", e))?;
    let rees_gens: Vec<String> = rees
        .rees()
        .generators()
        .iter()
        .take(RENDERED_GENERATOR_CAP)
        .map(|g| g.to_string())
        .collect();
    let rees_summary = ReesSummary {
        jdrank: s,
        analytic_spread: rees.analytic_spread(),
        x_linear_forms: rees.x_linear().forms.iter().map(|g| g.to_string()).collect(),
        x_linear_complete: rees.x_linear().complete,
        x_linear_cap: rees.x_linear().y_degree_cap,
        linear_type,
        symmetric_generator_count: rees.symmetric().generators().len(),
        rees_generator_count: rees.rees().generators().len(),
        rees_generators: rees_gens,
        image_equations: rees.fiber().generators().iter().map(|g| g.to_string()).collect(),
    };

    let mut warnings = Vec::new();
    let characteristic = ring.field().characteristic();
    if characteristic != 0 {
        warnings.push(format!(
            "computed over a field of characteristic {characteristic}; an inseparable field \
             extension would make the fiber count differ from the separable degree"
        ));
    }
    if reg_proxy.is_some() {
        warnings.push(
            "fiber regularity is a specialization proxy measured at the sampled points".into(),
        );
    }
    if !rees.x_linear().complete {
        warnings.push(format!(
            "the scan for linear relations was truncated at y-degree {}",
            rees.x_linear().y_degree_cap
        ));
    }
    if spec.variety().min_basis_degree(budget)? == Some(1) {
        warnings.push("the source variety lies in a hyperplane".into());
    }
    if valid.len() < trial_data.len() {
        warnings.push(format!(
            "{} of {} trials produced fibers of the wrong dimension and were discarded",
            trial_data.len() - valid.len(),
            trial_data.len()
        ));
    }

    let note = format!(
        "the degree equals the multiplicity e(R/a) of the general fiber, which the product of \
         syzygy degrees caps from above; modal fiber count {} over {} valid trial(s)",
        degree_value,
        valid.len()
    );

    Ok(DegreeReport {
        invariants: Invariants {
            n: spec.n(),
            m: spec.m(),
            d: spec.d(),
            t: spec.t(),
            multiplicity: e_r,
            syzygy_degrees: degrees,
            jdrank: s,
            analytic_spread: rees.analytic_spread(),
            characteristic,
        },
        degree: DegreeSummary {
            value: degree_value,
            trials: options.trials,
            valid_trials: valid.len(),
            distribution,
            note,
        },
        bounds: BoundsBlock {
            upper,
            lower,
            regularity_cap,
            monomial_birational,
            noether,
        },
        betti,
        rees: rees_summary,
        fibers: trial_data.iter().map(render_fiber).collect(),
        warnings,
    })
}
