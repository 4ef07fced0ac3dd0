//! Input document schema and its realization into core objects.
//!
//! The on-disk format is a single JSON document; every field outside the
//! ring and the form list is optional. Command-line flags override the
//! document's own `options` block.

use serde::Deserialize;

use rmdeg_core::exec::ExecMode;
use rmdeg_core::{
    parse_polynomial, Budget, Error, FieldSpec, IdealHandle, PolyRing, RationalMapSpec,
    ReportOptions, Result,
};

/// The JSON input document.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    pub ring: RingBlock,
    #[serde(default)]
    pub variety_ideal: Vec<String>,
    pub map: MapBlock,
    #[serde(default)]
    pub options: OptionsBlock,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingBlock {
    pub variables: Vec<String>,
    /// 0 selects exact rational arithmetic; a prime selects fast mode.
    #[serde(default)]
    pub characteristic: u64,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapBlock {
    pub forms: Vec<String>,
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct OptionsBlock {
    pub trials: Option<u64>,
    pub seed: Option<u64>,
    /// Cap on the y-degree scanned for defining equations.
    pub y_degree_cap: Option<u64>,
    pub budget_pairs: Option<u64>,
    pub budget_degree: Option<u64>,
    /// Declares the source coordinate ring factorial, enabling the
    /// refined degree-product bound. Defaults to true exactly when the
    /// source is all of projective space.
    pub factorial: Option<bool>,
    /// Restricts the emitted bound battery to the named bounds.
    pub bound_set: Option<Vec<String>>,
}

/// Command-line overrides applied on top of the document options.
#[derive(Debug, Clone, Default)]
pub struct Overrides {
    pub characteristic: Option<u64>,
    pub seed: Option<u64>,
    pub trials: Option<u64>,
    pub budget_pairs: Option<u64>,
    pub budget_degree: Option<u64>,
}

/// A fully realized analysis job.
pub struct Job {
    pub spec: RationalMapSpec,
    pub options: ReportOptions,
    pub bound_set: Option<Vec<String>>,
}

impl InputDocument {
    /// Parses the document from JSON text. Schema violations are reported
    /// as parse errors with the serde position information.
    pub fn from_json(text: &str) -> Result<InputDocument> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            position: e.column(),
            message: format!("input document: {e}"),
        })
    }

    /// Builds a document for the `--forms`/`--vars` text shortcut: a map
    /// defined on all of projective space.
    pub fn from_shortcut(forms: &str, vars: &str) -> InputDocument {
        let split = |s: &str| -> Vec<String> {
            s.split(',')
                .map(|p| p.trim().to_string())
                .filter(|p| !p.is_empty())
                .collect()
        };
        InputDocument {
            ring: RingBlock {
                variables: split(vars),
                characteristic: 0,
            },
            variety_ideal: Vec::new(),
            map: MapBlock {
                forms: split(forms),
            },
            options: OptionsBlock::default(),
        }
    }

    /// Realizes the document into a map specification plus run options,
    /// applying command-line overrides.
    pub fn realize(&self, overrides: &Overrides) -> Result<Job> {
        let characteristic = overrides
            .characteristic
            .unwrap_or(self.ring.characteristic);
        let field = if characteristic == 0 {
            FieldSpec::Rationals
        } else {
            FieldSpec::prime(characteristic)?
        };
        let names: Vec<&str> = self.ring.variables.iter().map(String::as_str).collect();
        let ring = PolyRing::from_names(field, &names)?;

        let budget = Budget {
            max_pairs: overrides
                .budget_pairs
                .or(self.options.budget_pairs)
                .unwrap_or(Budget::default().max_pairs),
            max_degree: overrides
                .budget_degree
                .or(self.options.budget_degree)
                .unwrap_or(Budget::default().max_degree),
        };

        let variety = if self.variety_ideal.is_empty() {
            None
        } else {
            let gens = self
                .variety_ideal
                .iter()
                .map(|t| parse_polynomial(&ring, t))
                .collect::<Result<Vec<_>>>()?;
            Some(IdealHandle::new(&ring, gens)?)
        };

        let forms = self
            .map
            .forms
            .iter()
            .map(|t| parse_polynomial(&ring, t))
            .collect::<Result<Vec<_>>>()?;

        let spec = RationalMapSpec::new(&ring, variety, forms, &budget)?;

        let defaults = ReportOptions::default();
        let options = ReportOptions {
            trials: overrides.trials.or(self.options.trials).unwrap_or(defaults.trials),
            seed: overrides.seed.or(self.options.seed).unwrap_or(defaults.seed),
            y_degree_cap: self.options.y_degree_cap,
            mode: ExecMode::default(),
            factorial: self.options.factorial,
            budget,
        };

        Ok(Job {
            spec,
            options,
            bound_set: self.options.bound_set.clone(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_document_parses() {
        let doc = InputDocument::from_json(
            r#"{"ring":{"variables":["x","y","z"],"characteristic":0},
                "map":{"forms":["x^2","y*z","z^2"]}}"#,
        )
        .unwrap();
        assert_eq!(doc.ring.variables, ["x", "y", "z"]);
        assert!(doc.variety_ideal.is_empty());
        let job = doc.realize(&Overrides::default()).unwrap();
        assert_eq!(job.spec.d(), 2);
        assert_eq!(job.options.trials, 5);
    }

    #[test]
    fn unknown_keys_are_parse_errors() {
        let err = InputDocument::from_json(
            r#"{"ring":{"variables":["x"],"characteristic":0},
                "map":{"forms":["x"]},"extra":1}"#,
        )
        .unwrap_err();
        assert!(matches!(err, Error::Parse { .. }));
    }

    #[test]
    fn overrides_win_over_document_options() {
        let doc = InputDocument::from_json(
            r#"{"ring":{"variables":["x","y"],"characteristic":0},
                "map":{"forms":["x^2","y^2"]},
                "options":{"trials":3,"seed":7,"budget_pairs":1000}}"#,
        )
        .unwrap();
        let job = doc
            .realize(&Overrides {
                characteristic: Some(32003),
                trials: Some(9),
                ..Overrides::default()
            })
            .unwrap();
        assert_eq!(job.options.trials, 9);
        assert_eq!(job.options.seed, 7);
        assert_eq!(job.options.budget.max_pairs, 1000);
        assert_eq!(job.spec.ring().field().characteristic(), 32003);
    }

    #[test]
    fn shortcut_builds_a_plane_map() {
        let doc = InputDocument::from_shortcut("x^2, y*z, z^2", "x,y,z");
        let job = doc.realize(&Overrides::default()).unwrap();
        assert_eq!(job.spec.n(), 2);
        assert_eq!(job.spec.m(), 2);
    }
}
