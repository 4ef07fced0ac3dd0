//! Hilbert series, dimension, and multiplicity of graded quotients.
//!
//! For a homogeneous ideal `I` the Hilbert function of `R/I` agrees with
//! that of `R/in(I)`, so everything reduces to a monomial-ideal
//! computation.  The numerator `N(T)` of the series `N(T)/(1−T)^n`
//! (`n` = number of variables) is computed by pivot splitting:
//!
//! `N(M) = N(M + (x_i)) + T · N(M : x_i)`
//!
//! with the pairwise-coprime base case `N = Π (1 − T^{deg g})`.  The pivot
//! is the most frequent variable among the minimal generators; both
//! branches strictly decrease total generator degree, so the recursion
//! terminates.
//!
//! Dimension falls out as `n` minus the multiplicity of the root `T = 1`
//! in `N`, and the multiplicity is the value at `1` of the numerator after
//! that root is factored out.  Coefficients are kept as `i128`; the
//! intermediate ideals at desk scale stay far below overflow.

use crate::error::{Error, Result};
use crate::groebner::Budget;
use crate::ideal::IdealHandle;
use crate::monomial::{Monomial, MonomialOrder};

/// Hilbert-series data of a graded quotient `ring/I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertData {
    /// Dense coefficients of the series numerator over `(1−T)^{nvars}`;
    /// index is the exponent of `T`.
    pub numerator: Vec<i128>,
    /// Krull dimension of the quotient ring.
    pub dimension: usize,
    /// Hilbert multiplicity (normalized leading coefficient); `1` for the
    /// zero ideal.
    pub multiplicity: u64,
}

impl HilbertData {
    /// Human-readable numerator, e.g. `1 - 3*T^2 + 2*T^3`.
    pub fn numerator_string(&self) -> String {
        if self.numerator.iter().all(|&c| c == 0) {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, &c) in self.numerator.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mag = c.unsigned_abs();
            if out.is_empty() {
                if c < 0 {
                    out.push('-');
                }
            } else {
                out.push_str(if c < 0 { " - " } else { " + " });
            }
            let power = match k {
                0 => String::new(),
                1 => "T".to_string(),
                _ => format!("T^{k}"),
            };
            if mag != 1 || power.is_empty() {
                out.push_str(&mag.to_string());
                if !power.is_empty() {
                    out.push('*');
                }
            }
            out.push_str(&power);
        }
        out
    }

    /// Value of the Hilbert function at degree `d`, recovered from the
    /// numerator: `HF(d) = Σ_k N_k · C(d−k+n−1, n−1)`.
    pub fn hilbert_function(&self, nvars: usize, d: u64) -> i128 {
        let mut total: i128 = 0;
        for (k, &c) in self.numerator.iter().enumerate() {
            if c == 0 || (k as u64) > d {
                continue;
            }
            total += c * monomial_count(nvars, d - k as u64);
        }
        total
    }
}

/// Number of monomials of degree `d` in `n` variables: `C(d+n−1, n−1)`.
pub(crate) fn monomial_count(n: usize, d: u64) -> i128 {
    if n == 0 {
        return if d == 0 { 1 } else { 0 };
    }
    let mut acc: i128 = 1;
    for i in 1..n as u64 {
        acc = acc * (d + i) as i128 / i as i128;
    }
    acc
}

fn minimalize(gens: &mut Vec<Monomial>) {
    gens.sort_by_key(|m| m.degree());
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens.drain(..) {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    *gens = kept;
}

fn poly_sub_shifted(a: &[i128], shift: usize) -> Vec<i128> {
    // a(T) · (1 − T^shift)
    let mut out = vec![0i128; a.len() + shift];
    for (i, &c) in a.iter().enumerate() {
        out[i] += c;
        out[i + shift] -= c;
    }
    out
}

fn poly_add_shifted(acc: &mut Vec<i128>, b: &[i128], shift: usize) {
    if acc.len() < b.len() + shift {
        acc.resize(b.len() + shift, 0);
    }
    for (i, &c) in b.iter().enumerate() {
        acc[i + shift] += c;
    }
}

/// Series numerator of `R/M` for a monomial ideal `M` (any generating
/// set; minimalized internally).
fn numerator(mut gens: Vec<Monomial>) -> Vec<i128> {
    minimalize(&mut gens);
    if gens.iter().any(|m| m.is_one()) {
        return vec![0];
    }
    // Pairwise-coprime base case (covers the empty and single-generator
    // ideals).
    let coprime = gens
        .iter()
        .enumerate()
        .all(|(i, g)| gens[i + 1..].iter().all(|h| g.coprime(h)));
    if coprime {
        let mut acc = vec![1i128];
        for g in &gens {
            acc = poly_sub_shifted(&acc, g.degree() as usize);
        }
        return acc;
    }
    // Pivot on the most frequent variable (lowest index on ties).
    let nvars = gens[0].nvars();
    let mut freq = vec![0usize; nvars];
    for g in &gens {
        for &v in &g.support() {
            freq[v] += 1;
        }
    }
    let pivot = (0..nvars).max_by_key(|&v| freq[v]).expect("nonempty ring");
    debug_assert!(freq[pivot] >= 2, "pivot must occur in two generators");

    // M + (x_pivot): generators touching the pivot variable collapse.
    let mut plus: Vec<Monomial> = gens
        .iter()
        .filter(|g| g.exp(pivot) == 0)
        .cloned()
        .collect();
    plus.push(Monomial::var(nvars, pivot));
    // M : x_pivot: divide each generator by its pivot content.
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|g| {
            if g.exp(pivot) == 0 {
                g.clone()
            } else {
                let mut exps = g.exps().to_vec();
                exps[pivot] -= 1;
                Monomial::from_exps(exps)
            }
        })
        .collect();

    let mut acc = numerator(plus);
    let colon_part = numerator(colon);
    poly_add_shifted(&mut acc, &colon_part, 1);
    acc
}

/// Divides `p` by `(1 − T)` in place; returns `false` when `1` is not a
/// root (in which case `p` is left unchanged).
fn divide_by_one_minus_t(p: &mut Vec<i128>) -> bool {
    if p.iter().all(|&c| c == 0) || p.iter().sum::<i128>() != 0 {
        return false;
    }
    // q(T) = p(T)/(1−T)  ⇔  q_k = Σ_{j ≤ k} p_j; the top prefix sum is
    // p(1) = 0 and drops off the end.
    let mut running = 0i128;
    let mut q = Vec::with_capacity(p.len().saturating_sub(1));
    for (k, &c) in p.iter().enumerate() {
        running += c;
        if k + 1 < p.len() {
            q.push(running);
        }
    }
    if q.is_empty() {
        q.push(0);
    }
    *p = q;
    true
}

/// Hilbert data of `ring/I` for homogeneous `I`.  The unit ideal (empty
/// scheme) is rejected, as is non-homogeneous input.
pub fn hilbert_data(ideal: &IdealHandle, budget: &Budget) -> Result<HilbertData> {
    if !ideal.is_homogeneous() {
        return Err(Error::NonHomogeneous(
            "Hilbert data needs homogeneous generators".into(),
        ));
    }
    let basis = ideal.reduced_groebner(MonomialOrder::GrevLex, budget)?;
    if basis.len() == 1 && basis[0].is_constant() {
        return Err(Error::UnitIdeal("Hilbert data of the empty scheme".into()));
    }
    let lms: Vec<Monomial> = basis
        .iter()
        .map(|g| g.leading_grevlex().expect("nonzero basis element").1.clone())
        .collect();
    let nvars = ideal.ring().nvars();
    let mut num = numerator(lms);
    let mut codim = 0usize;
    let mut reduced = num.clone();
    while divide_by_one_minus_t(&mut reduced) {
        codim += 1;
    }
    let multiplicity: i128 = reduced.iter().sum();
    if multiplicity <= 0 {
        return Err(Error::invalid(
            "Hilbert multiplicity came out non-positive; numerator bookkeeping is broken",
        ));
    }
    while num.len() > 1 && num.last() == Some(&0) {
        num.pop();
    }
    Ok(HilbertData {
        numerator: num,
        dimension: nvars - codim,
        multiplicity: multiplicity as u64,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::parse::parse_polynomial;
    use crate::ring::{PolyRing, RingRef};

    fn ideal(ring: &RingRef, gens: &[&str]) -> IdealHandle {
        let polys = gens
            .iter()
            .map(|s| parse_polynomial(ring, s).unwrap())
            .collect();
        IdealHandle::new(ring, polys).unwrap()
    }

    #[test]
    fn zero_ideal_of_three_variables() {
        let r = PolyRing::from_names(FieldSpec::Rationals, &["x", "y", "z"]).unwrap();
        let h = hilbert_data(&ideal(&r, &[]), &Budget::default()).unwrap();
        assert_eq!(h.numerator, vec![1]);
        assert_eq!(h.dimension, 3);
        assert_eq!(h.multiplicity, 1);
        assert_eq!(h.numerator_string(), "1");
    }

    #[test]
    fn plane_double_line() {
        let r = PolyRing::from_names(FieldSpec::Rationals, &["x", "y"]).unwrap();
        let h = hilbert_data(&ideal(&r, &["x^2"]), &Budget::default()).unwrap();
        // HF 1, 2, 2, 2, …
        assert_eq!(h.dimension, 1);
        assert_eq!(h.multiplicity, 2);
        assert_eq!(h.hilbert_function(2, 0), 1);
        assert_eq!(h.hilbert_function(2, 1), 2);
        assert_eq!(h.hilbert_function(2, 5), 2);
    }

    #[test]
    fn monomial_triple() {
        let r = PolyRing::from_names(FieldSpec::Rationals, &["x", "y", "z"]).unwrap();
        let h = hilbert_data(&ideal(&r, &["x^2", "y*z", "z^2"]), &Budget::default()).unwrap();
        assert_eq!(h.dimension, 1);
        assert_eq!(h.multiplicity, 2);
    }

    #[test]
    fn twisted_cubic_degree() {
        // The rational normal curve of degree 3 in ℙ³.
        let r = PolyRing::from_names(FieldSpec::Rationals, &["a", "b", "c", "d"]).unwrap();
        let i = ideal(&r, &["b^2 - a*c", "b*c - a*d", "c^2 - b*d"]);
        let h = hilbert_data(&i, &Budget::default()).unwrap();
        assert_eq!(h.dimension, 2);
        assert_eq!(h.multiplicity, 3);
    }

    #[test]
    fn rejects_bad_input() {
        let r = PolyRing::from_names(FieldSpec::Rationals, &["x", "y"]).unwrap();
        assert!(matches!(
            hilbert_data(&ideal(&r, &["x^2 + y"]), &Budget::default()),
            Err(Error::NonHomogeneous(_))
        ));
        assert!(matches!(
            hilbert_data(&ideal(&r, &["1"]), &Budget::default()),
            Err(Error::UnitIdeal(_))
        ));
    }

    #[test]
    fn hilbert_function_matches_standard_monomial_count() {
        // Brute-force oracle: count monomials outside the ideal per degree.
        let r = PolyRing::from_names(FieldSpec::Rationals, &["x", "y", "z"]).unwrap();
        let gens = ["x^3", "x*y^2", "y^4", "x^2*z^2"];
        let i = ideal(&r, &gens);
        let h = hilbert_data(&i, &Budget::default()).unwrap();
        let lms: Vec<Monomial> = gens
            .iter()
            .map(|s| {
                parse_polynomial(&r, s)
                    .unwrap()
                    .leading_grevlex()
                    .unwrap()
                    .1
                    .clone()
            })
            .collect();
        for d in 0u64..12 {
            let count = count_standard(3, d, &lms);
            assert_eq!(h.hilbert_function(3, d), count, "degree {d}");
        }
    }

    fn count_standard(nvars: usize, degree: u64, gens: &[Monomial]) -> i128 {
        fn walk(exps: &mut Vec<u32>, var: usize, left: u64, nvars: usize, gens: &[Monomial], hits: &mut i128) {
            if var == nvars - 1 {
                exps[var] = left as u32;
                let m = Monomial::from_exps(exps.clone());
                if !gens.iter().any(|g| g.divides(&m)) {
                    *hits += 1;
                }
                return;
            }
            for e in 0..=left {
                exps[var] = e as u32;
                walk(exps, var + 1, left - e, nvars, gens, hits);
            }
        }
        let mut exps = vec![0u32; nvars];
        let mut hits = 0i128;
        walk(&mut exps, 0, degree, nvars, gens, &mut hits);
        hits
    }
}
