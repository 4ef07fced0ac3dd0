//! rmdeg-core: exact commutative-algebra machinery for measuring rational
//! maps between projective varieties.
//!
//! The crate is organized bottom-up:
//!
//! * [`field`], [`monomial`], [`ring`], [`poly`], [`parse`] — exact
//!   arithmetic over Q or F_p, dense-exponent monomials, orders, parsing.
//! * [`groebner`], [`ideal`], [`ops`], [`hilbert`] — Buchberger engine with
//!   explicit budgets, cached reduced bases, quotients / saturations /
//!   eliminations, dimension and multiplicity.
//! * [`modgb`], [`resolution`] — free-module Groebner bases, syzygies,
//!   minimal graded free resolutions, Betti tables, regularity.
//! * [`rees`], [`fiber`], [`bounds`], [`report`] — Rees algebra data,
//!   general-fiber degree computation, the upper/lower bound battery and
//!   report assembly.
//!
//! Everything is deterministic for a fixed seed, including the
//! rayon-parallel paths (enabled by the default `parallel` feature; disable
//! it for a fully sequential build).

pub mod bounds;
pub mod error;
pub mod exec;
pub mod fiber;
pub mod field;
pub mod groebner;
pub mod hilbert;
pub mod ideal;
mod modgb;
pub mod ops;
pub mod rees;
pub mod report;
pub mod resolution;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod ring;

pub use bounds::{
    base_codimension, common_factor_degree, delta_degree, generic_height_sequence,
    improved_bound_obstructed, lower_bounds, monomial_birationality_check, noether_obstruction,
    regularity_bound_check, upper_bounds, BoundKind, BoundReport, HeightSequence, NoetherCheck,
    RegularityCheck, UpperBoundExtras, Verdict,
};
pub use error::{Error, Result};
pub use fiber::{
    degree_from_trials, degree_via_general_fiber, evaluate, fiber_at_point, row_ideal,
    sample_source_point, verify_row_ideal_identity, FiberData, RowIdealCheck,
};
pub use field::{Coeff, FieldSpec, DEFAULT_FAST_PRIME};
pub use groebner::{buchberger, normal_form, Budget};
pub use hilbert::{hilbert_data, HilbertData};
pub use ideal::IdealHandle;
pub use ops::{
    codimension, eliminate_prefix, ideal_quotient, ideal_sum, intersect, intersect_many,
    krull_dimension, quotient_by_ideal, saturate, saturate_poly,
};
pub use resolution::{
    minimal_complex, minimal_free_resolution, presentation_matrix, syzygy_degree_vector,
    syzygy_module, BettiTable, GradedMatrix,
};
pub use rees::{
    analytic_spread, jdrank, rees_ideal, special_fiber_ideal, substitute_forms, symmetric_ideal,
    x_linear_part, RationalMapSpec, ReesData, XLinearPart,
};
pub use report::{
    assemble_report, BettiSummary, BoundsBlock, DegreeReport, DegreeSummary, FiberSummary,
    Invariants, ReesSummary, ReportOptions,
};
pub use monomial::{Monomial, MonomialOrder};
pub use parse::parse_polynomial;
pub use poly::{poly_arith, ArithOp, Polynomial};
pub use ring::{PolyRing, RingRef};
