//! Syzygies, presentation matrices, minimal free resolutions, and graded
//! Betti tables.
//!
//! Syzygy generators come from the classic augmented-module construction:
//! each generator `vᵢ` of a submodule of `R^r` is extended to
//! `(vᵢ; eᵢ) ∈ R^{r+k}`, a Gröbner basis is computed under a block order
//! in which the first `r` components dominate, and the basis elements
//! whose target block vanishes are (the tails of) a generating set of the
//! syzygy module.
//!
//! Minimal free resolutions iterate syzygies, taking Nakayama-minimal
//! generators at each stage, and finish with a pivot sweep: any remaining
//! nonzero *constant* entry (these arise exactly when the presented
//! generators were redundant) is cleared by elementary row/column
//! operations — mirrored onto the neighbouring matrices so composites stay
//! zero — and its row/column pair is deleted.  The sweep terminates (each
//! pivot shrinks the complex) and the result has all entries in the
//! irrelevant maximal ideal, which is the defining property of the minimal
//! resolution.
//!
//! Presentations of a base ideal over a coordinate ring `k[x]/P` are
//! computed by the lifting trick: syzygies of the forms *together with the
//! generators of `P`* are computed over `k[x]`, the coordinates along the
//! `P`-generators are discarded, and the surviving columns are minimalized
//! modulo `P`.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::groebner::Budget;
use crate::ideal::IdealHandle;
use crate::modgb::{
    buchberger_module, minimal_module_generators, mv_degree, mv_is_zero, mv_zero, ModOrder, MVec,
};
use crate::poly::Polynomial;
use crate::ring::RingRef;

/// A matrix of homogeneous polynomials with graded row/column twists;
/// entry `(r, c)` has degree `col_degrees[c] − row_degrees[r]`.
#[derive(Clone, Debug, PartialEq)]
pub struct GradedMatrix {
    ring: RingRef,
    entries: Vec<Vec<Polynomial>>,
    row_degrees: Vec<i64>,
    col_degrees: Vec<i64>,
}

impl GradedMatrix {
    /// Builds a matrix from columns, deriving column degrees from the row
    /// shifts; every column must be homogeneous and nonzero.
    pub fn from_columns(
        ring: &RingRef,
        row_degrees: Vec<i64>,
        columns: &[MVec],
    ) -> Result<GradedMatrix> {
        let nrows = row_degrees.len();
        let mut col_degrees = Vec::with_capacity(columns.len());
        for col in columns {
            if col.len() != nrows {
                return Err(Error::invalid("column length does not match row count"));
            }
            let d = mv_degree(col, &row_degrees)?
                .ok_or_else(|| Error::invalid("zero column in a graded matrix"))?;
            col_degrees.push(d);
        }
        let entries = (0..nrows)
            .map(|r| columns.iter().map(|col| col[r].clone()).collect())
            .collect();
        let m = GradedMatrix {
            ring: ring.clone(),
            entries,
            row_degrees,
            col_degrees,
        };
        m.validate()?;
        Ok(m)
    }

    /// A single-row matrix presenting ring elements (degree shifts 0 → deg).
    pub fn row_of(ring: &RingRef, gens: &[Polynomial]) -> Result<GradedMatrix> {
        let columns: Vec<MVec> = gens.iter().map(|g| vec![g.clone()]).collect();
        GradedMatrix::from_columns(ring, vec![0], &columns)
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn nrows(&self) -> usize {
        self.row_degrees.len()
    }

    pub fn ncols(&self) -> usize {
        self.col_degrees.len()
    }

    pub fn entry(&self, r: usize, c: usize) -> &Polynomial {
        &self.entries[r][c]
    }

    pub fn row_degrees(&self) -> &[i64] {
        &self.row_degrees
    }

    pub fn col_degrees(&self) -> &[i64] {
        &self.col_degrees
    }

    pub fn column(&self, c: usize) -> MVec {
        self.entries.iter().map(|row| row[c].clone()).collect()
    }

    pub fn columns(&self) -> Vec<MVec> {
        (0..self.ncols()).map(|c| self.column(c)).collect()
    }

    /// Checks the grading invariant on every nonzero entry.
    pub fn validate(&self) -> Result<()> {
        for (r, row) in self.entries.iter().enumerate() {
            if row.len() != self.ncols() {
                return Err(Error::invalid("ragged matrix"));
            }
            for (c, e) in row.iter().enumerate() {
                if e.is_zero() {
                    continue;
                }
                if !e.is_homogeneous() {
                    return Err(Error::NonHomogeneous(format!(
                        "matrix entry ({r}, {c}) is not homogeneous"
                    )));
                }
                let expected = self.col_degrees[c] - self.row_degrees[r];
                if e.degree().map(|d| d as i64) != Some(expected) {
                    return Err(Error::invalid(format!(
                        "matrix entry ({r}, {c}) has degree {:?}, expected {expected}",
                        e.degree()
                    )));
                }
            }
        }
        Ok(())
    }

    /// Row vector times matrix: `v·A` for `v` of length `nrows`.
    pub fn vec_times(&self, v: &[Polynomial]) -> Vec<Polynomial> {
        (0..self.ncols())
            .map(|c| {
                let mut acc = Polynomial::zero(&self.ring);
                for (r, coeff) in v.iter().enumerate() {
                    acc = acc.add(&coeff.mul(&self.entries[r][c]));
                }
                acc
            })
            .collect()
    }

    /// True iff `self · next` is the zero matrix.
    pub fn compose_is_zero(&self, next: &GradedMatrix) -> bool {
        if self.ncols() != next.nrows() {
            return false;
        }
        for r in 0..self.nrows() {
            for j in 0..next.ncols() {
                let mut acc = Polynomial::zero(&self.ring);
                for k in 0..self.ncols() {
                    acc = acc.add(&self.entries[r][k].mul(&next.entries[k][j]));
                }
                if !acc.is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// True iff no entry is a nonzero constant.
    pub fn has_no_unit_entries(&self) -> bool {
        self.entries
            .iter()
            .flatten()
            .all(|e| e.is_zero() || !e.is_constant())
    }
}

/// Raw (Gröbner-derived, generally non-minimal) generating set of the
/// syzygies among `columns` inside `⊕ R(−row_degrees)`: returns the syzygy
/// vectors in `⊕ R(−col_degrees)`.
fn raw_syzygies(
    ring: &RingRef,
    row_degrees: &[i64],
    columns: &[MVec],
    budget: &Budget,
) -> Result<Vec<MVec>> {
    let r = row_degrees.len();
    let k = columns.len();
    let mut col_degrees = Vec::with_capacity(k);
    for col in columns {
        let d = mv_degree(col, row_degrees)?
            .ok_or_else(|| Error::invalid("zero generator among syzygy inputs"))?;
        col_degrees.push(d);
    }
    let mut shifts = row_degrees.to_vec();
    shifts.extend_from_slice(&col_degrees);
    let ord = ModOrder {
        split: r,
        shifts,
    };
    let mut augmented = Vec::with_capacity(k);
    for (i, col) in columns.iter().enumerate() {
        let mut v = col.clone();
        let mut tracker = mv_zero(ring, k);
        tracker[i] = Polynomial::one(ring);
        v.extend(tracker);
        augmented.push(v);
    }
    let basis = buchberger_module(ring, &augmented, &ord, budget)?;
    let mut syzygies = Vec::new();
    for g in basis {
        if g[..r].iter().all(|p| p.is_zero()) {
            syzygies.push(g[r..].to_vec());
        }
    }
    Ok(syzygies)
}

/// First syzygy matrix of a list of homogeneous ring elements: columns are
/// a minimal generating set of the relations.
pub fn syzygy_module(gens: &[Polynomial], budget: &Budget) -> Result<GradedMatrix> {
    if gens.is_empty() {
        return Err(Error::invalid("syzygies of an empty generator list"));
    }
    let ring = gens[0].ring().clone();
    for g in gens {
        if g.is_zero() {
            return Err(Error::invalid("zero generator among syzygy inputs"));
        }
        if !g.is_homogeneous() {
            return Err(Error::NonHomogeneous("syzygy input must be homogeneous".into()));
        }
    }
    let row = GradedMatrix::row_of(&ring, gens)?;
    let raw = raw_syzygies(&ring, row.row_degrees(), &row.columns(), budget)?;
    let shifts = row.col_degrees().to_vec();
    let minimal = minimal_module_generators(&ring, gens.len(), &shifts, &raw, &[], budget)?;
    GradedMatrix::from_columns(&ring, shifts, &minimal)
}

/// Presentation matrix of the module generated by `forms` over the
/// coordinate ring `k[x]/⟨variety⟩`: syzygies are computed over `k[x]` on
/// the concatenated list, projected to the form coordinates, and
/// minimalized modulo the variety ideal.  With an empty `variety` this is
/// exactly [`syzygy_module`].
pub fn presentation_matrix(
    forms: &[Polynomial],
    variety: &[Polynomial],
    budget: &Budget,
) -> Result<GradedMatrix> {
    if forms.is_empty() {
        return Err(Error::invalid("presentation of an empty generator list"));
    }
    let ring = forms[0].ring().clone();
    let k = forms.len();
    let mut pool = forms.to_vec();
    pool.extend(variety.iter().cloned());
    for g in &pool {
        if g.is_zero() {
            return Err(Error::invalid("zero generator among presentation inputs"));
        }
        if !g.is_homogeneous() {
            return Err(Error::NonHomogeneous(
                "presentation input must be homogeneous".into(),
            ));
        }
    }
    let row = GradedMatrix::row_of(&ring, &pool)?;
    let raw = raw_syzygies(&ring, row.row_degrees(), &row.columns(), budget)?;
    let projected: Vec<MVec> = raw
        .into_iter()
        .map(|v| v[..k].to_vec())
        .filter(|v| !mv_is_zero(v))
        .collect();
    let shifts: Vec<i64> = row.col_degrees()[..k].to_vec();
    let minimal =
        minimal_module_generators(&ring, k, &shifts, &projected, variety, budget)?;
    GradedMatrix::from_columns(&ring, shifts, &minimal)
}

/// Degrees `dᵢ = col_degree − d` of the presentation columns, sorted
/// descending; `d` is the common degree of the presented forms.
pub fn syzygy_degree_vector(psi: &GradedMatrix, d: u64) -> Result<Vec<u64>> {
    if psi.row_degrees().iter().any(|&r| r != d as i64) {
        return Err(Error::invalid(
            "presentation rows must all carry the common form degree",
        ));
    }
    let mut out = Vec::with_capacity(psi.ncols());
    for &cd in psi.col_degrees() {
        if cd < d as i64 {
            return Err(Error::invalid("presentation column of degree below the forms"));
        }
        out.push((cd - d as i64) as u64);
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    Ok(out)
}

/// Graded Betti numbers: `(homological degree, internal degree) → rank`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, i64), usize>,
}

impl BettiTable {
    pub fn from_complex(mats: &[GradedMatrix]) -> BettiTable {
        let mut entries = BTreeMap::new();
        for (i, m) in mats.iter().enumerate() {
            for &j in m.col_degrees() {
                *entries.entry((i, j)).or_insert(0) += 1;
            }
        }
        BettiTable { entries }
    }

    pub fn entries(&self) -> &BTreeMap<(usize, i64), usize> {
        &self.entries
    }

    pub fn rank(&self, i: usize, j: i64) -> usize {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Total rank of the `i`-th free module.
    pub fn total_rank(&self, i: usize) -> usize {
        self.entries
            .iter()
            .filter(|((h, _), _)| *h == i)
            .map(|(_, r)| r)
            .sum()
    }

    /// Length of the resolution (largest homological degree present).
    pub fn length(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    /// Castelnuovo–Mumford regularity: `max (j − i)` over nonzero entries.
    pub fn regularity(&self) -> Result<i64> {
        self.entries
            .keys()
            .map(|&(i, j)| j - i as i64)
            .max()
            .ok_or_else(|| Error::invalid("regularity of an empty Betti table"))
    }

    /// JSON-friendly map `"i,j" → rank`.
    pub fn to_string_map(&self) -> BTreeMap<String, usize> {
        self.entries
            .iter()
            .map(|(&(i, j), &r)| (format!("{i},{j}"), r))
            .collect()
    }
}

impl fmt::Display for BettiTable {
    /// Staircase layout: columns are homological degrees, rows are slopes
    /// `j − i`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return write!(f, "(empty Betti table)");
        }
        let length = self.length();
        let slopes: Vec<i64> = self.entries.keys().map(|&(i, j)| j - i as i64).collect();
        let lo = *slopes.iter().min().unwrap();
        let hi = *slopes.iter().max().unwrap();
        let width = 6;
        write!(f, "{:>width$}", "")?;
        for i in 0..=length {
            write!(f, "{i:>width$}")?;
        }
        writeln!(f)?;
        write!(f, "{:>width$}", "total:")?;
        for i in 0..=length {
            write!(f, "{:>width$}", self.total_rank(i))?;
        }
        writeln!(f)?;
        for d in lo..=hi {
            write!(f, "{:>w$}", format!("{d}:"), w = width)?;
            for i in 0..=length {
                let r = self.rank(i, d + i as i64);
                if r == 0 {
                    write!(f, "{:>width$}", ".")?;
                } else {
                    write!(f, "{r:>width$}")?;
                }
            }
            if d < hi {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

/// The chain of matrices of a minimal free resolution of an ideal:
/// `mats[0]` is the 1×β₀ row of minimal generators, `mats[i]` maps the
/// `i`-th syzygy module onto the `(i−1)`-st.
pub fn minimal_complex(ideal: &IdealHandle, budget: &Budget) -> Result<Vec<GradedMatrix>> {
    if ideal.is_zero() {
        return Err(Error::invalid("resolution of the zero ideal"));
    }
    if !ideal.is_homogeneous() {
        return Err(Error::NonHomogeneous(
            "resolution needs a homogeneous ideal".into(),
        ));
    }
    if ideal.is_unit(budget)? {
        return Err(Error::UnitIdeal("resolution of the unit ideal".into()));
    }
    let ring = ideal.ring().clone();
    let nvars = ring.nvars();
    let mut mats = vec![GradedMatrix::row_of(&ring, ideal.generators())?];
    loop {
        let last = mats.last().expect("nonempty complex");
        let raw = raw_syzygies(&ring, last.row_degrees(), &last.columns(), budget)?;
        let shifts = last.col_degrees().to_vec();
        let minimal =
            minimal_module_generators(&ring, shifts.len(), &shifts, &raw, &[], budget)?;
        if minimal.is_empty() {
            break;
        }
        if mats.len() > nvars {
            return Err(Error::invalid(
                "resolution exceeded the variable-count bound; this is a bug",
            ));
        }
        mats.push(GradedMatrix::from_columns(&ring, shifts, &minimal)?);
    }
    minimalize_complex(&mut mats)?;
    Ok(mats)
}

/// Minimal free resolution of a homogeneous ideal, reported as its graded
/// Betti table (row 0 = minimal generators).
pub fn minimal_free_resolution(ideal: &IdealHandle, budget: &Budget) -> Result<BettiTable> {
    Ok(BettiTable::from_complex(&minimal_complex(ideal, budget)?))
}

/// Clears every nonzero constant entry of the complex by pivoting,
/// deleting the matched row/column pairs, with basis changes mirrored to
/// the neighbouring matrices.
fn minimalize_complex(mats: &mut Vec<GradedMatrix>) -> Result<()> {
    let field: FieldSpec = *mats[0].ring.field();
    loop {
        // Lowest (stage, row, column) nonzero constant entry.
        let mut pivot: Option<(usize, usize, usize)> = None;
        'scan: for (s, m) in mats.iter().enumerate() {
            for r in 0..m.nrows() {
                for c in 0..m.ncols() {
                    let e = &m.entries[r][c];
                    if !e.is_zero() && e.is_constant() {
                        pivot = Some((s, r, c));
                        break 'scan;
                    }
                }
            }
        }
        let (s, r, c) = match pivot {
            Some(p) => p,
            None => break,
        };
        let unit = mats[s].entries[r][c]
            .constant_value()
            .expect("constant entry");
        let unit_inv = field.inv(unit)?;

        // Clear row r by column operations; mirror onto the next matrix as
        // row operations.
        for c2 in 0..mats[s].ncols() {
            if c2 == c || mats[s].entries[r][c2].is_zero() {
                continue;
            }
            let lambda = mats[s].entries[r][c2].mul_coeff(&unit_inv);
            for row in 0..mats[s].nrows() {
                let delta = mats[s].entries[row][c].mul(&lambda);
                mats[s].entries[row][c2] = mats[s].entries[row][c2].sub(&delta);
            }
            if s + 1 < mats.len() {
                for col in 0..mats[s + 1].ncols() {
                    let delta = mats[s + 1].entries[c2][col].mul(&lambda);
                    mats[s + 1].entries[c][col] = mats[s + 1].entries[c][col].add(&delta);
                }
            }
        }
        // Clear column c by row operations; mirror onto the previous
        // matrix as column operations.
        for r2 in 0..mats[s].nrows() {
            if r2 == r || mats[s].entries[r2][c].is_zero() {
                continue;
            }
            let nu = mats[s].entries[r2][c].mul_coeff(&unit_inv);
            for col in 0..mats[s].ncols() {
                let delta = mats[s].entries[r][col].mul(&nu);
                mats[s].entries[r2][col] = mats[s].entries[r2][col].sub(&delta);
            }
            if s > 0 {
                for row in 0..mats[s - 1].nrows() {
                    let delta = mats[s - 1].entries[row][r2].mul(&nu);
                    mats[s - 1].entries[row][r] = mats[s - 1].entries[row][r].add(&delta);
                }
            }
        }

        // Exactness forces the cleared row/column images to vanish, so the
        // rank-1 subcomplex splits off; delete it.
        for row in &mut mats[s].entries {
            row.remove(c);
        }
        mats[s].col_degrees.remove(c);
        mats[s].entries.remove(r);
        mats[s].row_degrees.remove(r);
        if s + 1 < mats.len() {
            debug_assert!(mats[s + 1].entries[c].iter().all(|p| p.is_zero()));
            mats[s + 1].entries.remove(c);
            mats[s + 1].row_degrees.remove(c);
        }
        if s > 0 {
            for row in &mut mats[s - 1].entries {
                debug_assert!(row[r].is_zero());
                row.remove(r);
            }
            mats[s - 1].col_degrees.remove(r);
        }
    }
    while mats.len() > 1 && mats.last().map(|m| m.ncols()) == Some(0) {
        mats.pop();
    }
    for m in mats.iter() {
        m.validate()?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::parse::parse_polynomial;
    use crate::ring::PolyRing;

    fn polys(ring: &RingRef, gens: &[&str]) -> Vec<Polynomial> {
        gens.iter()
            .map(|s| parse_polynomial(ring, s).unwrap())
            .collect()
    }

    fn betti(vars: &[&str], gens: &[&str]) -> BettiTable {
        let ring = PolyRing::from_names(FieldSpec::Rationals, vars).unwrap();
        let ideal = IdealHandle::new(&ring, polys(&ring, gens)).unwrap();
        minimal_free_resolution(&ideal, &Budget::default()).unwrap()
    }

    #[test]
    fn koszul_two_variables() {
        let ring = PolyRing::from_names(FieldSpec::Rationals, &["x", "y"]).unwrap();
        let psi = syzygy_module(&polys(&ring, &["x", "y"]), &Budget::default()).unwrap();
        assert_eq!(psi.ncols(), 1);
        assert_eq!(psi.col_degrees(), &[2]);
        assert_eq!(psi.entry(0, 0).to_string(), "y");
        assert_eq!(psi.entry(1, 0).to_string(), "-x");
        let t = betti(&["x", "y"], &["x", "y"]);
        assert_eq!(t.rank(0, 1), 2);
        assert_eq!(t.rank(1, 2), 1);
        assert_eq!(t.length(), 1);
        assert_eq!(t.regularity().unwrap(), 1);
    }

    #[test]
    fn monomial_triple_resolution() {
        let t = betti(&["x", "y", "z"], &["x^2", "y*z", "z^2"]);
        assert_eq!(t.rank(0, 2), 3);
        assert_eq!(t.rank(1, 3), 1);
        assert_eq!(t.rank(1, 4), 2);
        assert_eq!(t.rank(2, 5), 1);
        assert_eq!(t.entries().len(), 4);
        assert_eq!(t.regularity().unwrap(), 3);
        // Rank bookkeeping: alternating sum equals the rank of the ideal.
        assert_eq!(t.total_rank(0) - t.total_rank(1) + t.total_rank(2), 1);
    }

    #[test]
    fn syzygies_of_monomial_triple() {
        let ring = PolyRing::from_names(FieldSpec::Rationals, &["x", "y", "z"]).unwrap();
        let gens = polys(&ring, &["x^2", "y*z", "z^2"]);
        let psi = syzygy_module(&gens, &Budget::default()).unwrap();
        let mut degs = psi.col_degrees().to_vec();
        degs.sort_unstable();
        assert_eq!(degs, vec![3, 4, 4]);
        // Every column annihilates the generator row.
        let products = psi.vec_times(&gens);
        assert!(products.iter().all(|p| p.is_zero()));
        assert_eq!(syzygy_degree_vector(&psi, 2).unwrap(), vec![2, 2, 1]);
    }

    #[test]
    fn two_linear_syzygies_of_the_net() {
        let ring = PolyRing::from_names(FieldSpec::Rationals, &["x", "y", "z"]).unwrap();
        let gens = polys(&ring, &["x*y", "x*z", "y*z"]);
        let psi = syzygy_module(&gens, &Budget::default()).unwrap();
        assert_eq!(psi.ncols(), 2);
        assert_eq!(psi.col_degrees(), &[3, 3]);
        let products = psi.vec_times(&gens);
        assert!(products.iter().all(|p| p.is_zero()));
    }

    #[test]
    fn regular_sequence_is_koszul() {
        let t = betti(&["x", "y"], &["x^2", "y^2"]);
        assert_eq!(t.rank(0, 2), 2);
        assert_eq!(t.rank(1, 4), 1);
        assert_eq!(t.regularity().unwrap(), 3);

        let t3 = betti(&["x", "y", "z"], &["x", "y", "z"]);
        assert_eq!(t3.rank(0, 1), 3);
        assert_eq!(t3.rank(1, 2), 3);
        assert_eq!(t3.rank(2, 3), 1);
    }

    #[test]
    fn redundant_generators_are_pruned() {
        // (x, y, x + y): the pivot sweep must collapse to the Koszul table.
        let t = betti(&["x", "y"], &["x", "y", "x + y"]);
        assert_eq!(t.rank(0, 1), 2);
        assert_eq!(t.rank(1, 2), 1);
        assert_eq!(t.entries().len(), 2);
    }

    #[test]
    fn complex_is_exactly_composable() {
        let ring = PolyRing::from_names(FieldSpec::Rationals, &["x", "y", "z"]).unwrap();
        let ideal = IdealHandle::new(&ring, polys(&ring, &["x^2", "y*z", "z^2"])).unwrap();
        let mats = minimal_complex(&ideal, &Budget::default()).unwrap();
        assert_eq!(mats.len(), 3);
        for w in mats.windows(2) {
            assert!(w[0].compose_is_zero(&w[1]));
        }
        for m in &mats[1..] {
            assert!(m.has_no_unit_entries());
        }
    }

    #[test]
    fn betti_table_is_presentation_invariant() {
        let a = betti(&["x", "y", "z"], &["x^2", "y*z", "z^2"]);
        let b = betti(&["x", "y", "z"], &["z^2", "x^2", "y*z"]);
        let c = betti(&["x", "y", "z"], &["3*x^2", "y*z - z^2", "z^2"]);
        assert_eq!(a, b);
        assert_eq!(a, c);
    }

    #[test]
    fn presentation_over_hypersurface() {
        // Forms (x², xy) on the coordinate ring of V(x·z): over the
        // quotient, z annihilates both forms... the relation (z, 0) is a
        // presentation column that plain syzygies over k[x,y,z] miss.
        let ring = PolyRing::from_names(FieldSpec::Rationals, &["x", "y", "z"]).unwrap();
        let forms = polys(&ring, &["x^2", "x*y"]);
        let variety = polys(&ring, &["x*z"]);
        let psi = presentation_matrix(&forms, &variety, &Budget::default()).unwrap();
        // Columns: the Koszul-style relation y·x² − x·xy and the two
        // variety relations z·x² ≡ 0, z·xy ≡ 0 (mod x z).
        let gens_row = forms.clone();
        for cidx in 0..psi.ncols() {
            let col = psi.column(cidx);
            let combo = gens_row[0]
                .mul(&col[0])
                .add(&gens_row[1].mul(&col[1]));
            // Products must vanish modulo the variety ideal.
            let vi = IdealHandle::new(&ring, variety.clone()).unwrap();
            assert!(vi.contains(&combo, &Budget::default()).unwrap());
        }
        let degs: Vec<i64> = {
            let mut d = psi.col_degrees().to_vec();
            d.sort_unstable();
            d
        };
        assert_eq!(degs, vec![3, 3, 3]);

        // With no variety ideal the presentation is the plain syzygy matrix.
        let plain = presentation_matrix(&forms, &[], &Budget::default()).unwrap();
        let direct = syzygy_module(&forms, &Budget::default()).unwrap();
        assert_eq!(plain, direct);
    }

    #[test]
    fn staircase_display() {
        let t = betti(&["x", "y", "z"], &["x^2", "y*z", "z^2"]);
        let shown = format!("{t}");
        assert!(shown.contains("total:"));
        assert!(shown.lines().count() >= 4);
    }

    #[test]
    fn degree_vector_rejects_mixed_rows() {
        let ring = PolyRing::from_names(FieldSpec::Rationals, &["x", "y"]).unwrap();
        let psi = syzygy_module(&polys(&ring, &["x", "y^2"]), &Budget::default()).unwrap();
        assert!(syzygy_degree_vector(&psi, 1).is_err());
    }
}
