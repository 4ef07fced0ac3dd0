//! Output document assembly and rendering.
//!
//! Every subcommand emits the same top-level document; partial runs leave
//! the blocks they did not compute out of the JSON and the text. The JSON
//! key order is fixed by the struct: invariants, degree, bounds, betti,
//! rees, fibers, warnings, version, timing_ms.

use serde::Serialize;

use rmdeg_core::{
    BettiSummary, BoundKind, BoundReport, BoundsBlock, DegreeReport, DegreeSummary, FiberSummary,
    Invariants, ReesSummary, Verdict,
};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// The emitted report document. Blocks a subcommand did not compute are
/// omitted from the serialized form.
#[derive(Debug, Serialize)]
pub struct Document {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub invariants: Option<Invariants>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree: Option<DegreeSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bounds: Option<BoundsBlock>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub betti: Option<BettiSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rees: Option<ReesSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fibers: Option<Vec<FiberSummary>>,
    pub warnings: Vec<String>,
    pub version: &'static str,
    pub timing_ms: u64,
}

impl Document {
    pub fn empty() -> Document {
        Document {
            invariants: None,
            degree: None,
            bounds: None,
            betti: None,
            rees: None,
            fibers: None,
            warnings: Vec::new(),
            version: VERSION,
            timing_ms: 0,
        }
    }

    pub fn from_report(report: DegreeReport) -> Document {
        Document {
            invariants: Some(report.invariants),
            degree: Some(report.degree),
            bounds: Some(report.bounds),
            betti: Some(report.betti),
            rees: Some(report.rees),
            fibers: Some(report.fibers),
            warnings: report.warnings,
            version: VERSION,
            timing_ms: 0,
        }
    }

    /// True when any evaluated bound is violated.
    pub fn any_violation(&self) -> bool {
        let Some(bounds) = &self.bounds else {
            return false;
        };
        let violated = |b: &BoundReport| b.verdict == Some(Verdict::Violated);
        bounds.upper.iter().any(violated)
            || bounds.lower.iter().any(violated)
            || bounds.regularity_cap.verdict == Some(Verdict::Violated)
    }

    /// Keeps only the named bounds in the battery.
    pub fn restrict_bounds(&mut self, names: &[String]) {
        if let Some(bounds) = &mut self.bounds {
            bounds.upper.retain(|b| names.iter().any(|n| n == b.name));
            bounds.lower.retain(|b| names.iter().any(|n| n == b.name));
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut push = |s: String| {
            out.push_str(&s);
            out.push('\n');
        };
        push(format!("rmdeg {}", self.version));

        if let Some(inv) = &self.invariants {
            push(String::new());
            push("invariants".into());
            push(format!(
                "  n = {}   m = {}   d = {}   t = {}   e(R) = {}   char = {}",
                inv.n, inv.m, inv.d, inv.t, inv.multiplicity, inv.characteristic
            ));
            push(format!(
                "  syzygy degrees: {}",
                inv.syzygy_degrees
                    .iter()
                    .map(u64::to_string)
                    .collect::<Vec<_>>()
                    .join(", ")
            ));
            push(format!(
                "  jdrank s = {}   analytic spread = {}",
                inv.jdrank, inv.analytic_spread
            ));
        }

        if let Some(deg) = &self.degree {
            push(String::new());
            push("degree".into());
            push(format!(
                "  deg = {}   ({} of {} trials valid)",
                deg.value, deg.valid_trials, deg.trials
            ));
            let dist = deg
                .distribution
                .iter()
                .map(|(v, c)| format!("{v} x{c}"))
                .collect::<Vec<_>>()
                .join(", ");
            push(format!("  fiber distribution: {{{dist}}}"));
            push(format!("  note: {}", deg.note));
        }

        if let Some(bounds) = &self.bounds {
            push(String::new());
            push("bounds".into());
            for b in bounds.upper.iter().chain(bounds.lower.iter()) {
                push(format!("  {}", render_bound(b)));
            }
            let cap = &bounds.regularity_cap;
            if cap.applicable {
                push(format!(
                    "  regularity cap: proxy {} <= {} -- {}",
                    cap.reg_fiber.map_or("?".into(), |v| v.to_string()),
                    cap.bound.map_or("?".into(), |v| v.to_string()),
                    cap.verdict.map_or("unevaluated", verdict_label),
                ));
            } else {
                push(format!("  regularity cap: not applicable: {}", cap.reason));
            }
            if let Some(b) = bounds.monomial_birational {
                push(format!(
                    "  log-matrix test: {}",
                    if b { "birational" } else { "not birational" }
                ));
            }
            if let Some(n) = &bounds.noether {
                push(format!(
                    "  normalization obstruction: product {} vs threshold {} -- {}",
                    n.product,
                    n.threshold,
                    if n.holds { "holds" } else { "violated" }
                ));
            }
        }

        if let Some(betti) = &self.betti {
            push(String::new());
            push("betti".into());
            for line in betti.table.lines() {
                push(format!("  {line}"));
            }
            push(format!(
                "  regularity = {}   resolution length = {}",
                betti.regularity, betti.length
            ));
        }

        if let Some(rees) = &self.rees {
            push(String::new());
            push("rees".into());
            push(format!(
                "  jdrank s = {}   analytic spread = {}   linear type: {}",
                rees.jdrank,
                rees.analytic_spread,
                if rees.linear_type { "yes" } else { "no" }
            ));
            push(format!(
                "  linear part: {} form(s), scan {} at y-degree cap {}",
                rees.x_linear_forms.len(),
                if rees.x_linear_complete {
                    "complete"
                } else {
                    "truncated"
                },
                rees.x_linear_cap
            ));
            push(format!(
                "  defining ideal: {} generator(s), {} from the symmetric algebra",
                rees.rees_generator_count, rees.symmetric_generator_count
            ));
            for g in &rees.rees_generators {
                push(format!("    {g}"));
            }
            if rees.rees_generator_count > rees.rees_generators.len() {
                push(format!(
                    "    ... and {} more",
                    rees.rees_generator_count - rees.rees_generators.len()
                ));
            }
            if rees.image_equations.is_empty() {
                push("  image: all of the target space".into());
            } else {
                push(format!(
                    "  image equations: {}",
                    rees.image_equations.join(", ")
                ));
            }
        }

        if let Some(fibers) = &self.fibers {
            push(String::new());
            push("fibers".into());
            for (i, f) in fibers.iter().enumerate() {
                push(format!(
                    "  #{} point ({}) -> ({}): multiplicity {}, regularity {}{}",
                    i + 1,
                    f.point.join(", "),
                    f.image.join(", "),
                    f.multiplicity,
                    f.regularity,
                    if f.valid { "" } else { "  [discarded]" }
                ));
            }
        }

        if !self.warnings.is_empty() {
            push(String::new());
            push("warnings".into());
            for w in &self.warnings {
                push(format!("  - {w}"));
            }
        }

        out
    }
}

fn verdict_label(v: Verdict) -> &'static str {
    match v {
        Verdict::Holds => "holds",
        Verdict::Violated => "VIOLATED",
        Verdict::NotApplicable => "not applicable",
    }
}

fn render_bound(b: &BoundReport) -> String {
    let kind = match b.kind {
        BoundKind::Upper => "upper",
        BoundKind::Lower => "lower",
        BoundKind::Equality => "exact",
    };
    if !b.applicable {
        return format!("{kind:5} {:28} not applicable: {}", b.name, b.reason);
    }
    let value = b.value.map_or("?".into(), |v| v.to_string());
    let verdict = b.verdict.map_or("unevaluated", verdict_label);
    let attained = if b.attained { ", attained" } else { "" };
    format!("{kind:5} {:28} {value:>6}   {verdict}{attained}", b.name)
}
