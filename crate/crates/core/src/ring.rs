//! Polynomial rings: a coefficient field, an ordered list of variable names
//! and an optional bigraded block structure (a prefix of "x" variables, the
//! rest being "y" variables).

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::monomial::Monomial;
use std::fmt::Write as _;
use std::sync::Arc;

#[derive(Debug)]
pub struct PolyRing {
    field: FieldSpec,
    vars: Vec<String>,
    /// Length of the leading x-block when the ring is bigraded.
    x_block: Option<usize>,
}

pub type RingRef = Arc<PolyRing>;

impl PartialEq for PolyRing {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.vars == other.vars && self.x_block == other.x_block
    }
}
impl Eq for PolyRing {}

impl PolyRing {
    pub fn new(field: FieldSpec, vars: Vec<String>) -> Result<RingRef> {
        Self::build(field, vars, None)
    }

    /// Convenience constructor taking variable names as string slices.
    pub fn from_names(field: FieldSpec, vars: &[&str]) -> Result<RingRef> {
        Self::new(field, vars.iter().map(|s| s.to_string()).collect())
    }

    pub fn bigraded(field: FieldSpec, vars: Vec<String>, x_block: usize) -> Result<RingRef> {
        if x_block > vars.len() {
            return Err(Error::invalid("x-block longer than the variable list"));
        }
        Self::build(field, vars, Some(x_block))
    }

    fn build(field: FieldSpec, vars: Vec<String>, x_block: Option<usize>) -> Result<RingRef> {
        if vars.is_empty() {
            return Err(Error::invalid("a ring needs at least one variable"));
        }
        for v in &vars {
            if !is_identifier(v) {
                return Err(Error::invalid(format!("bad variable name {v:?}")));
            }
        }
        let mut sorted = vars.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != vars.len() {
            return Err(Error::invalid("duplicate variable names"));
        }
        Ok(Arc::new(PolyRing {
            field,
            vars,
            x_block,
        }))
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn x_block(&self) -> Option<usize> {
        self.x_block
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// New ring with `names` prepended (used by the elimination tricks).
    pub fn extend_prefix(&self, names: &[&str]) -> Result<RingRef> {
        let mut vars: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        vars.extend(self.vars.iter().cloned());
        PolyRing::new(self.field, vars)
    }

    /// New ring keeping only the variables from index `k` on.
    pub fn drop_prefix(&self, k: usize) -> Result<RingRef> {
        PolyRing::new(self.field, self.vars[k..].to_vec())
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        if m.is_one() {
            return "1".to_string();
        }
        let mut out = String::new();
        let mut first = true;
        for (i, &e) in m.exps().iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                out.push('*');
            }
            first = false;
            out.push_str(&self.vars[i]);
            if e > 1 {
                let _ = write!(out, "^{e}");
            }
        }
        out
    }
}

pub fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Fresh fiber-variable names `y0..ym` that do not clash with `taken`.
pub fn fiber_var_names(count: usize, taken: &[String]) -> Vec<String> {
    for prefix in ["y", "Y", "w", "T", "fib"] {
        let candidate: Vec<String> = (0..count).map(|i| format!("{prefix}{i}")).collect();
        if candidate.iter().all(|c| !taken.contains(c)) {
            return candidate;
        }
    }
    // last resort: grow a prefix that cannot collide
    let mut prefix = "y_".to_string();
    while taken.iter().any(|t| t.starts_with(&prefix)) {
        prefix.push('_');
    }
    (0..count).map(|i| format!("{prefix}{i}")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_and_lookup() {
        let r = PolyRing::new(FieldSpec::Rationals, vec!["x".into(), "y".into()]).unwrap();
        assert_eq!(r.var_index("y"), Some(1));
        assert_eq!(r.var_index("z"), None);
        assert!(PolyRing::new(FieldSpec::Rationals, vec!["x".into(), "x".into()]).is_err());
        assert!(PolyRing::new(FieldSpec::Rationals, vec!["2x".into()]).is_err());
    }

    #[test]
    fn monomial_formatting() {
        let r = PolyRing::new(FieldSpec::Rationals, vec!["x".into(), "y".into(), "z".into()])
            .unwrap();
        let m = Monomial::from_exps(vec![2, 1, 0]);
        assert_eq!(r.format_monomial(&m), "x^2*y");
        assert_eq!(r.format_monomial(&Monomial::one(3)), "1");
    }

    #[test]
    fn fresh_fiber_names_avoid_clashes() {
        let names = fiber_var_names(2, &["y0".to_string(), "x".to_string()]);
        assert_eq!(names, vec!["Y0".to_string(), "Y1".to_string()]);
    }
}
