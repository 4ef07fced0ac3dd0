//! Monomials as dense exponent vectors, plus the monomial orders the engine
//! understands.
//!
//! The derived `Ord` on `Monomial` is plain lexicographic comparison of the
//! exponent vector and is only used as a canonical map key; *semantic*
//! comparisons always go through [`MonomialOrder::cmp_mono`].

use std::cmp::Ordering;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: vec![0; nvars],
        }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        Monomial { exps }
    }

    pub fn from_exps(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    /// Total degree of the exponents in `range` (used for block orders and
    /// bidegrees).
    pub fn block_degree(&self, start: usize, end: usize) -> u64 {
        self.exps[start..end].iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.checked_add(b).expect("monomial exponent overflow"))
            .collect();
        Monomial { exps }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.nvars(), other.nvars());
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a <= b)
    }

    /// `other / self`, assuming divisibility.
    pub fn div_into(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        let exps = other
            .exps
            .iter()
            .zip(&self.exps)
            .map(|(&b, &a)| b - a)
            .collect();
        Monomial { exps }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.max(b))
            .collect();
        Monomial { exps }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.min(b))
            .collect();
        Monomial { exps }
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Indices of variables with positive exponent.
    pub fn support(&self) -> Vec<usize> {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
            .collect()
    }

    /// Embed into a ring with `prefix` extra variables in front.
    pub fn shift_right(&self, prefix: usize) -> Monomial {
        let mut exps = vec![0; prefix];
        exps.extend_from_slice(&self.exps);
        Monomial { exps }
    }

    /// The same monomial viewed in a ring with `nvars` variables, the new
    /// ones appended after the existing block with exponent zero.
    pub fn extend(&self, nvars: usize) -> Monomial {
        debug_assert!(nvars >= self.exps.len());
        let mut exps = self.exps.clone();
        exps.resize(nvars, 0);
        Monomial { exps }
    }

    /// Drop the first `prefix` variables; they must have exponent zero.
    pub fn drop_prefix(&self, prefix: usize) -> Monomial {
        debug_assert!(self.exps[..prefix].iter().all(|&e| e == 0));
        Monomial {
            exps: self.exps[prefix..].to_vec(),
        }
    }
}

/// A global monomial order.
///
/// * `GrevLex` — degree then reverse lexicographic; the workhorse.
/// * `Lex` — pure lexicographic, first variable dominant.
/// * `Elimination(k)` — grevlex on the first `k` variables, ties broken by
///   grevlex on the rest; eliminates the leading block.
/// * `BigradedGrevLex(k)` — compares degree in the leading `k`-variable block
///   first, then full grevlex. Refines the x-degree of a bigraded ring, so
///   reduced bases sort by x-degree; it also eliminates the x-block.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MonomialOrder {
    GrevLex,
    Lex,
    Elimination(usize),
    BigradedGrevLex(usize),
}

fn grevlex_slice(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    match da.cmp(&db) {
        Ordering::Equal => {
            for i in (0..a.len()).rev() {
                match a[i].cmp(&b[i]) {
                    Ordering::Equal => continue,
                    // smaller exponent in the *last* differing slot wins
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                }
            }
            Ordering::Equal
        }
        o => o,
    }
}

fn lex_slice(a: &[u32], b: &[u32]) -> Ordering {
    for i in 0..a.len() {
        match a[i].cmp(&b[i]) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    pub fn cmp_mono(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.nvars(), b.nvars());
        match *self {
            MonomialOrder::GrevLex => grevlex_slice(a.exps(), b.exps()),
            MonomialOrder::Lex => lex_slice(a.exps(), b.exps()),
            MonomialOrder::Elimination(k) => grevlex_slice(&a.exps()[..k], &b.exps()[..k])
                .then_with(|| grevlex_slice(&a.exps()[k..], &b.exps()[k..])),
            MonomialOrder::BigradedGrevLex(k) => a
                .block_degree(0, k)
                .cmp(&b.block_degree(0, k))
                .then_with(|| grevlex_slice(a.exps(), b.exps())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exps(e.to_vec())
    }

    #[test]
    fn grevlex_ladder() {
        let o = MonomialOrder::GrevLex;
        // x > y > z among degree-1 monomials
        assert_eq!(o.cmp_mono(&m(&[1, 0, 0]), &m(&[0, 1, 0])), Ordering::Greater);
        assert_eq!(o.cmp_mono(&m(&[0, 1, 0]), &m(&[0, 0, 1])), Ordering::Greater);
        // degree dominates
        assert_eq!(o.cmp_mono(&m(&[0, 0, 2]), &m(&[1, 0, 0])), Ordering::Greater);
        // classic grevlex tie-break: x*z < y^2
        assert_eq!(o.cmp_mono(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
    }

    #[test]
    fn lex_ladder() {
        let o = MonomialOrder::Lex;
        // x > y^5 under lex
        assert_eq!(o.cmp_mono(&m(&[1, 0]), &m(&[0, 5])), Ordering::Greater);
    }

    #[test]
    fn elimination_blocks() {
        let o = MonomialOrder::Elimination(1);
        // any monomial containing the first variable beats any without it
        assert_eq!(o.cmp_mono(&m(&[1, 0, 0]), &m(&[0, 9, 9])), Ordering::Greater);
        // ties on the first block fall back to grevlex on the rest
        assert_eq!(o.cmp_mono(&m(&[1, 1, 0]), &m(&[1, 0, 1])), Ordering::Greater);
    }

    #[test]
    fn bigraded_refines_block_degree() {
        let o = MonomialOrder::BigradedGrevLex(2);
        // x-degree first: x*y^9 (block deg 1) < x^2 (block deg 2)
        assert_eq!(o.cmp_mono(&m(&[1, 0, 9]), &m(&[2, 0, 0])), Ordering::Less);
    }

    #[test]
    fn lattice_ops() {
        let a = m(&[2, 0, 1]);
        let b = m(&[1, 3, 0]);
        assert_eq!(a.lcm(&b), m(&[2, 3, 1]));
        assert_eq!(a.gcd(&b), m(&[1, 0, 0]));
        assert!(!a.coprime(&b));
        assert!(a.gcd(&b).divides(&a));
        assert_eq!(a.gcd(&b).div_into(&a), m(&[1, 0, 1]));
    }
}
