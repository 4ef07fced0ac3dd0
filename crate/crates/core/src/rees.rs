//! Rees-algebra data for a rational map.
//!
//! A rational map from a projective source (all of ℙⁿ, or the subvariety
//! cut out by a homogeneous prime `P`) is given by forms `f₀,…,f_m` of one
//! common degree in the coordinate ring `k[x₀,…,xₙ]`. Everything here
//! lives in the bigraded ring `S = k[x][y]` with one fiber variable per
//! form:
//!
//! * the symmetric-algebra ideal `L`, read off a presentation matrix `ψ`
//!   of the forms as the entries of the row vector `(y₀ … y_m)·ψ`;
//! * the Rees ideal `J = (L + P·S) : f₀^∞` — adjoining `P` and saturating
//!   realizes the computation over `k[x]/P` without quotient arithmetic;
//! * the special fiber ideal `𝔮 = J ∩ k[y]`;
//! * the x-degree-one part of `J`, the rank of its coefficient matrix
//!   modulo `𝔮` (the Jacobian dual rank `s`), and the analytic spread
//!   `ℓ = dim k[y]/𝔮`.
//!
//! Representation notes. `J` is bihomogeneous, so its reduced Gröbner
//! basis under [`MonomialOrder::BigradedGrevLex`] consists of bihomogeneous
//! elements. That order compares x-degree first, hence it eliminates the
//! x-block, and the x-free basis elements are exactly the reduced grevlex
//! basis of `𝔮`. The x-degree-one basis elements generate the
//! x-degree-one piece of `J` over `k[y]` together with the trivial
//! multiples `xᵢ·𝔮`: a reduction of an x-degree-one element only ever
//! involves reducers of x-degree at most one. The trivial multiples have
//! coefficient rows congruent to zero modulo `𝔮`, so the rank computation
//! sees the right matrix. That rank is computed fraction-free by
//! cross-multiplied row elimination over `k[y]`, with normal forms modulo
//! `𝔮` as the zero test; this is valid because `k[y]/𝔮` is a domain
//! whenever the source is integral (`J` is then the kernel of a map onto a
//! subalgebra of a polynomial ring over a domain). Primality of the
//! variety ideal is assumed, not verified.
//!
//! A linear form inside the variety ideal would also land in the
//! x-degree-one part (with constant coefficients); present the source in a
//! nondegenerate embedding to avoid the inflation.

use crate::error::{Error, Result};
use crate::field::Coeff;
use crate::groebner::Budget;
use crate::ideal::IdealHandle;
use crate::monomial::{Monomial, MonomialOrder};
use crate::ops;
use crate::poly::Polynomial;
use crate::resolution::{presentation_matrix, GradedMatrix};
use crate::ring::{fiber_var_names, PolyRing, RingRef};

/// A rational map, validated: homogeneous forms of one positive degree,
/// none vanishing on the source variety.
#[derive(Clone, Debug)]
pub struct RationalMapSpec {
    ring: RingRef,
    variety: IdealHandle,
    forms: Vec<Polynomial>,
    d: u64,
    t: usize,
}

impl RationalMapSpec {
    /// Validates and builds a map description. `variety` defaults to the
    /// zero ideal (source = all of projective space).
    pub fn new(
        ring: &RingRef,
        variety: Option<IdealHandle>,
        forms: Vec<Polynomial>,
        budget: &Budget,
    ) -> Result<RationalMapSpec> {
        if ring.x_block().is_some() {
            return Err(Error::invalid(
                "the source coordinate ring must be single-graded",
            ));
        }
        if forms.is_empty() {
            return Err(Error::invalid("a rational map needs at least one defining form"));
        }
        for f in &forms {
            if f.ring() != ring {
                return Err(Error::RingMismatch("defining form from a different ring".into()));
            }
            if f.is_zero() {
                return Err(Error::invalid("defining forms must be nonzero"));
            }
            if !f.is_homogeneous() {
                return Err(Error::NonHomogeneous("defining forms must be homogeneous".into()));
            }
        }
        let d = forms[0].degree().unwrap_or(0);
        if d == 0 {
            return Err(Error::invalid("defining forms must have positive degree"));
        }
        if forms.iter().any(|f| f.degree() != Some(d)) {
            return Err(Error::invalid("defining forms must share one degree"));
        }
        let variety = match variety {
            Some(v) => {
                if v.ring() != ring {
                    return Err(Error::RingMismatch(
                        "variety ideal from a different ring".into(),
                    ));
                }
                if !v.is_homogeneous() {
                    return Err(Error::NonHomogeneous(
                        "the variety ideal must be homogeneous".into(),
                    ));
                }
                v
            }
            None => IdealHandle::new(ring, Vec::new())?,
        };
        for f in &forms {
            if variety.contains(f, budget)? {
                return Err(Error::invalid("a defining form vanishes on the source variety"));
            }
        }
        let dim = ops::krull_dimension(&variety, budget)?;
        if dim == 0 {
            return Err(Error::invalid(
                "the variety ideal cuts out the empty projective scheme",
            ));
        }
        Ok(RationalMapSpec {
            ring: ring.clone(),
            variety,
            forms,
            d,
            t: dim - 1,
        })
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn variety(&self) -> &IdealHandle {
        &self.variety
    }

    pub fn forms(&self) -> &[Polynomial] {
        &self.forms
    }

    /// Source ambient dimension: the source sits in ℙⁿ.
    pub fn n(&self) -> usize {
        self.ring.nvars() - 1
    }

    /// Target dimension: the map lands in ℙᵐ.
    pub fn m(&self) -> usize {
        self.forms.len() - 1
    }

    /// Common degree of the defining forms.
    pub fn d(&self) -> u64 {
        self.d
    }

    /// Dimension of the source variety.
    pub fn t(&self) -> usize {
        self.t
    }
}

/// The x-degree-one piece of the Rees ideal, as reduced-basis elements of
/// y-degree at most `y_degree_cap`. `complete` records whether the cap
/// dropped anything; with the default cap it never does in practice.
#[derive(Clone, Debug)]
pub struct XLinearPart {
    pub forms: Vec<Polynomial>,
    pub y_degree_cap: u64,
    pub complete: bool,
}

/// Everything the Rees construction produces, immutable once built.
#[derive(Clone, Debug)]
pub struct ReesData {
    spec: RationalMapSpec,
    s_ring: RingRef,
    symmetric: IdealHandle,
    rees: IdealHandle,
    fiber_ring: RingRef,
    fiber: IdealHandle,
    x_linear: XLinearPart,
    jdrank: usize,
    analytic_spread: usize,
}

/// The bigraded model ring `k[x][y]` for a map: source variables first,
/// one fresh fiber variable per form.
fn bigraded_model(spec: &RationalMapSpec) -> Result<RingRef> {
    let base = spec.ring();
    let mut vars = base.vars().to_vec();
    vars.extend(fiber_var_names(spec.m() + 1, base.vars()));
    PolyRing::bigraded(*base.field(), vars, spec.n() + 1)
}

/// The symmetric-algebra ideal `L`: entries of the row vector
/// `(y₀ … y_m)·ψ`, each bihomogeneous of y-degree one.
pub fn symmetric_ideal(spec: &RationalMapSpec, psi: &GradedMatrix) -> Result<IdealHandle> {
    if psi.ring() != spec.ring() {
        return Err(Error::RingMismatch(
            "presentation matrix from a different ring".into(),
        ));
    }
    if psi.nrows() != spec.m() + 1 {
        return Err(Error::invalid(
            "presentation matrix must have one row per defining form",
        ));
    }
    if psi.row_degrees().iter().any(|&r| r != spec.d() as i64) {
        return Err(Error::invalid(
            "presentation rows must sit in the degree of the forms",
        ));
    }
    let s = bigraded_model(spec)?;
    let split = spec.n() + 1;
    let mut gens = Vec::with_capacity(psi.ncols());
    for c in 0..psi.ncols() {
        let mut g = Polynomial::zero(&s);
        for r in 0..psi.nrows() {
            let e = psi.entry(r, c);
            if e.is_zero() {
                continue;
            }
            g = g.add(&e.extend_suffix(&s).mul(&Polynomial::var(&s, split + r)));
        }
        debug_assert_eq!(
            g.bidegree(),
            Some((psi.col_degrees()[c] as u64 - spec.d(), 1))
        );
        gens.push(g);
    }
    IdealHandle::new(&s, gens)
}

/// The Rees ideal `J = (L + P·S) : f₀^∞`. The saturating element is the
/// first defining form, which validation guarantees is nonzero modulo the
/// variety ideal.
pub fn rees_ideal(spec: &RationalMapSpec, l: &IdealHandle, budget: &Budget) -> Result<IdealHandle> {
    let s = l.ring();
    let mut gens = l.generators().to_vec();
    for p in spec.variety().generators() {
        gens.push(p.extend_suffix(s));
    }
    let sum = IdealHandle::new(s, gens)?;
    let f0 = spec.forms()[0].extend_suffix(s);
    ops::saturate_poly(&sum, &f0, budget)
}

fn split_of(j: &IdealHandle) -> Result<usize> {
    j.ring()
        .x_block()
        .ok_or_else(|| Error::invalid("expected an ideal of a bigraded ring"))
}

/// The special fiber ideal `𝔮 = J ∩ k[y]`, eliminating the x-block.
///
/// The x-degree-first basis makes the contraction free: an element whose
/// leading monomial is x-free is x-free throughout, and on x-free
/// monomials the order restricts to grevlex, so the x-free part of the
/// reduced basis is the reduced grevlex basis of the contraction.
pub fn special_fiber_ideal(j: &IdealHandle, budget: &Budget) -> Result<IdealHandle> {
    let k = split_of(j)?;
    let basis = j.reduced_groebner(MonomialOrder::BigradedGrevLex(k), budget)?;
    let target = j.ring().drop_prefix(k)?;
    let kept: Vec<Polynomial> = basis
        .iter()
        .filter(|g| g.free_of_prefix(k))
        .map(|g| g.drop_prefix(&target, k))
        .collect();
    IdealHandle::from_reduced_basis(&target, kept, MonomialOrder::GrevLex)
}

/// The x-degree-one elements of the reduced basis of `J`, up to the
/// y-degree cap.
pub fn x_linear_part(j: &IdealHandle, y_degree_cap: u64, budget: &Budget) -> Result<XLinearPart> {
    let k = split_of(j)?;
    let basis = j.reduced_groebner(MonomialOrder::BigradedGrevLex(k), budget)?;
    let mut forms = Vec::new();
    let mut complete = true;
    for g in basis.iter() {
        let Some((xd, yd)) = g.bidegree() else {
            return Err(Error::invalid("the Rees ideal basis is not bihomogeneous"));
        };
        if xd != 1 {
            continue;
        }
        if yd > y_degree_cap {
            complete = false;
            continue;
        }
        forms.push(g.clone());
    }
    Ok(XLinearPart {
        forms,
        y_degree_cap,
        complete,
    })
}

/// Jacobian dual rank: the rank, over the fraction field of `k[y]/𝔮`, of
/// the matrix whose rows are the x-coefficient vectors of the x-linear
/// forms. Fraction-free row elimination; a pivot survives when its normal
/// form modulo `𝔮` is nonzero.
pub fn jdrank(x_linear: &[Polynomial], fiber: &IdealHandle, budget: &Budget) -> Result<usize> {
    if x_linear.is_empty() {
        return Ok(0);
    }
    let s = x_linear[0].ring();
    let k = s
        .x_block()
        .ok_or_else(|| Error::invalid("x-linear forms must live in a bigraded ring"))?;
    let fring = fiber.ring();
    if fring.nvars() + k != s.nvars() || fring.field() != s.field() {
        return Err(Error::RingMismatch(
            "fiber ideal does not match the bigraded model".into(),
        ));
    }
    let nf = |p: &Polynomial| fiber.normal_form(p, MonomialOrder::GrevLex, budget);
    let mut rows: Vec<Vec<Polynomial>> = Vec::with_capacity(x_linear.len());
    for g in x_linear {
        let mut cols: Vec<Vec<(Coeff, Monomial)>> = vec![Vec::new(); k];
        for (c, m) in g.terms() {
            if m.block_degree(0, k) != 1 {
                return Err(Error::invalid("an x-linear form must have x-degree one"));
            }
            let i = m.exps()[..k].iter().position(|&e| e > 0).unwrap();
            cols[i].push((c.clone(), Monomial::from_exps(m.exps()[k..].to_vec())));
        }
        let row: Vec<Polynomial> = cols
            .into_iter()
            .map(|ts| nf(&Polynomial::from_terms(fring, ts)))
            .collect::<Result<_>>()?;
        rows.push(row);
    }
    let nrows = rows.len();
    let mut rank = 0;
    for col in 0..k {
        let Some(pr) = (rank..nrows).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pr);
        let pivot = rows[rank][col].clone();
        for r in rank + 1..nrows {
            if rows[r][col].is_zero() {
                continue;
            }
            let factor = rows[r][col].clone();
            #[allow(clippy::needless_range_loop)] // `c` indexes two rows at once
            for c in col..k {
                let combo = pivot.mul(&rows[r][c]).sub(&factor.mul(&rows[rank][c]));
                rows[r][c] = nf(&combo)?;
            }
        }
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    Ok(rank)
}

/// Analytic spread `ℓ = dim k[y]/𝔮`.
pub fn analytic_spread(q: &IdealHandle, budget: &Budget) -> Result<usize> {
    ops::krull_dimension(q, budget)
}

/// Substitute each fiber variable by its form, landing in the coordinate
/// ring of the source. Accepts elements of the bigraded model (the source
/// variables pass through) and of the plain fiber ring.
pub fn substitute_forms(g: &Polynomial, forms: &[Polynomial]) -> Result<Polynomial> {
    if forms.is_empty() {
        return Err(Error::invalid("no forms to substitute"));
    }
    let xring = forms[0].ring();
    for f in forms {
        if f.ring() != xring {
            return Err(Error::RingMismatch("forms from different rings".into()));
        }
    }
    if g.ring().field() != xring.field() {
        return Err(Error::RingMismatch("substitution across different fields".into()));
    }
    let split = g
        .ring()
        .nvars()
        .checked_sub(forms.len())
        .ok_or_else(|| Error::invalid("substitution shape mismatch"))?;
    if split != 0 && split != xring.nvars() {
        return Err(Error::invalid("substitution shape mismatch"));
    }
    let mut out = Polynomial::zero(xring);
    for (c, m) in g.terms() {
        let mut head = m.exps()[..split].to_vec();
        head.resize(xring.nvars(), 0);
        let mut t = Polynomial::term(xring, c.clone(), Monomial::from_exps(head));
        for (i, &e) in m.exps()[split..].iter().enumerate() {
            if e > 0 {
                t = t.mul(&forms[i].pow(e));
            }
        }
        out = out.add(&t);
    }
    Ok(out)
}

impl ReesData {
    /// Runs the whole construction. `y_degree_cap` bounds the reported
    /// x-linear part (default: twice the target dimension).
    pub fn build(
        spec: &RationalMapSpec,
        y_degree_cap: Option<u64>,
        budget: &Budget,
    ) -> Result<ReesData> {
        let psi = presentation_matrix(spec.forms(), spec.variety().generators(), budget)?;
        let symmetric = symmetric_ideal(spec, &psi)?;
        let s_ring = symmetric.ring().clone();
        let rees = rees_ideal(spec, &symmetric, budget)?;
        let fiber = special_fiber_ideal(&rees, budget)?;
        let fiber_ring = fiber.ring().clone();
        let cap = y_degree_cap.unwrap_or(2 * spec.m() as u64);
        let x_linear = x_linear_part(&rees, cap, budget)?;
        let jdrank = jdrank(&x_linear.forms, &fiber, budget)?;
        let analytic_spread = analytic_spread(&fiber, budget)?;
        Ok(ReesData {
            spec: spec.clone(),
            s_ring,
            symmetric,
            rees,
            fiber_ring,
            fiber,
            x_linear,
            jdrank,
            analytic_spread,
        })
    }

    pub fn spec(&self) -> &RationalMapSpec {
        &self.spec
    }

    /// The bigraded model ring `k[x][y]`.
    pub fn s_ring(&self) -> &RingRef {
        &self.s_ring
    }

    pub fn symmetric(&self) -> &IdealHandle {
        &self.symmetric
    }

    pub fn rees(&self) -> &IdealHandle {
        &self.rees
    }

    pub fn fiber_ring(&self) -> &RingRef {
        &self.fiber_ring
    }

    pub fn fiber(&self) -> &IdealHandle {
        &self.fiber
    }

    pub fn x_linear(&self) -> &XLinearPart {
        &self.x_linear
    }

    pub fn jdrank(&self) -> usize {
        self.jdrank
    }

    pub fn analytic_spread(&self) -> usize {
        self.analytic_spread
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::parse::parse_polynomial;

    fn budget() -> Budget {
        Budget::default()
    }

    fn map_over(vars: &[&str], forms: &[&str]) -> RationalMapSpec {
        let ring = PolyRing::from_names(FieldSpec::Rationals, vars).unwrap();
        let forms: Vec<Polynomial> = forms
            .iter()
            .map(|s| parse_polynomial(&ring, s).unwrap())
            .collect();
        RationalMapSpec::new(&ring, None, forms, &budget()).unwrap()
    }

    fn map_with_variety(vars: &[&str], variety: &[&str], forms: &[&str]) -> RationalMapSpec {
        let ring = PolyRing::from_names(FieldSpec::Rationals, vars).unwrap();
        let v = parsed_ideal(&ring, variety);
        let forms: Vec<Polynomial> = forms
            .iter()
            .map(|s| parse_polynomial(&ring, s).unwrap())
            .collect();
        RationalMapSpec::new(&ring, Some(v), forms, &budget()).unwrap()
    }

    fn parsed_ideal(ring: &RingRef, gens: &[&str]) -> IdealHandle {
        IdealHandle::new(
            ring,
            gens.iter()
                .map(|s| parse_polynomial(ring, s).unwrap())
                .collect(),
        )
        .unwrap()
    }

    /// Every Rees and fiber generator must die under yᵢ ↦ fᵢ (modulo the
    /// variety ideal), and the dual rank never exceeds the source
    /// ambient dimension.
    fn assert_coherent(data: &ReesData) {
        let b = budget();
        for g in data.rees().generators().iter().chain(data.fiber().generators()) {
            let sub = substitute_forms(g, data.spec().forms()).unwrap();
            let nf = data
                .spec()
                .variety()
                .normal_form(&sub, MonomialOrder::GrevLex, &b)
                .unwrap();
            assert!(nf.is_zero(), "generator survives substitution: {g}");
        }
        assert!(data.jdrank() <= data.spec().n());
        assert!(data.symmetric().subset_of(data.rees(), &b).unwrap());
    }

    #[test]
    fn koszul_pair_is_linear_type() {
        let spec = map_over(&["x", "y"], &["x", "y"]);
        assert_eq!((spec.n(), spec.m(), spec.d(), spec.t()), (1, 1, 1, 1));
        let data = ReesData::build(&spec, None, &budget()).unwrap();
        let l = data.symmetric();
        assert_eq!(l.generators().len(), 1);
        assert_eq!(l.generators()[0].to_string(), "y*y0 - x*y1");
        assert!(data.rees().equals(l, &budget()).unwrap());
        assert!(data.fiber().is_zero());
        assert_eq!(data.x_linear().forms.len(), 1);
        assert!(data.x_linear().complete);
        assert_eq!(data.jdrank(), 1);
        assert_eq!(data.analytic_spread(), 2);
        assert_coherent(&data);
    }

    #[test]
    fn regular_sequence_squares_have_no_linear_part() {
        let spec = map_over(&["x", "y"], &["x^2", "y^2"]);
        let data = ReesData::build(&spec, None, &budget()).unwrap();
        let expected = parsed_ideal(data.s_ring(), &["y^2*y0 - x^2*y1"]);
        assert!(data.symmetric().equals(&expected, &budget()).unwrap());
        assert!(data.rees().equals(&expected, &budget()).unwrap());
        assert!(data.x_linear().forms.is_empty());
        assert!(data.x_linear().complete);
        assert_eq!(data.jdrank(), 0);
        assert!(data.fiber().is_zero());
        assert_eq!(data.analytic_spread(), 2);
        assert_coherent(&data);
    }

    #[test]
    fn veronese_conic_relation_and_dual_rank() {
        let spec = map_over(&["x", "y"], &["x^2", "x*y", "y^2"]);
        let data = ReesData::build(&spec, None, &budget()).unwrap();
        // The fiber is the conic, and the Rees ideal strictly contains the
        // symmetric one.
        let conic = parsed_ideal(data.fiber_ring(), &["y0*y2 - y1^2"]);
        assert!(data.fiber().equals(&conic, &budget()).unwrap());
        assert!(!data.rees().equals(data.symmetric(), &budget()).unwrap());
        // Two linear syzygies whose 2×2 dual determinant IS the conic, so
        // the rank modulo the fiber drops to one.
        let span = IdealHandle::new(data.s_ring(), data.x_linear().forms.clone()).unwrap();
        let expected = parsed_ideal(data.s_ring(), &["y*y0 - x*y1", "y*y1 - x*y2"]);
        assert!(span.equals(&expected, &budget()).unwrap());
        assert_eq!(data.x_linear().forms.len(), 2);
        assert_eq!(data.jdrank(), 1);
        assert_eq!(data.analytic_spread(), 2);
        assert_coherent(&data);
    }

    #[test]
    fn monomial_net_with_one_linear_syzygy() {
        let spec = map_over(&["x", "y", "z"], &["x^2", "y*z", "z^2"]);
        let data = ReesData::build(&spec, None, &budget()).unwrap();
        let expected_l = parsed_ideal(
            data.s_ring(),
            &["z*y1 - y*y2", "z^2*y0 - x^2*y2", "y*z*y0 - x^2*y1"],
        );
        assert!(data.symmetric().equals(&expected_l, &budget()).unwrap());
        assert!(data.rees().equals(data.symmetric(), &budget()).unwrap());
        assert!(data.fiber().is_zero());
        assert_eq!(data.x_linear().forms.len(), 1);
        assert_eq!(
            data.x_linear().forms[0],
            parse_polynomial(data.s_ring(), "z*y1 - y*y2").unwrap()
        );
        assert_eq!(data.jdrank(), 1);
        assert_eq!(data.analytic_spread(), 3);
        assert_coherent(&data);
    }

    #[test]
    fn cremona_involution_attains_full_rank() {
        let spec = map_over(&["x", "y", "z"], &["x*y", "x*z", "y*z"]);
        let data = ReesData::build(&spec, None, &budget()).unwrap();
        assert!(data.fiber().is_zero());
        assert_eq!(data.analytic_spread(), 3);
        assert_eq!(data.x_linear().forms.len(), 2);
        let span = IdealHandle::new(data.s_ring(), data.x_linear().forms.clone()).unwrap();
        let expected = parsed_ideal(data.s_ring(), &["z*y0 - y*y1", "y*y1 - x*y2"]);
        assert!(span.equals(&expected, &budget()).unwrap());
        // full rank = ambient dimension: the involution is birational
        assert_eq!(data.jdrank(), 2);
        assert!(data.rees().equals(data.symmetric(), &budget()).unwrap());
        assert_coherent(&data);
    }

    #[test]
    fn degree_three_monomial_map_has_rank_zero() {
        let spec = map_over(&["x", "y", "z"], &["x^2*y", "x*z^2", "y^2*z"]);
        let data = ReesData::build(&spec, None, &budget()).unwrap();
        assert!(data.x_linear().forms.is_empty());
        assert!(data.x_linear().complete);
        assert_eq!(data.jdrank(), 0);
        assert!(data.fiber().is_zero());
        assert_eq!(data.analytic_spread(), 3);
        assert_coherent(&data);
    }

    #[test]
    fn map_from_a_conic_hypersurface() {
        let spec = map_with_variety(&["x", "y", "z"], &["x*z - y^2"], &["x", "y"]);
        assert_eq!(spec.t(), 1);
        let data = ReesData::build(&spec, None, &budget()).unwrap();
        // Projection of the conic from an outside point is an isomorphism
        // onto ℙ¹: full dual rank, free fiber.
        assert_eq!(data.jdrank(), 2);
        assert!(data.fiber().is_zero());
        assert_eq!(data.analytic_spread(), 2);
        assert!(!data.x_linear().forms.is_empty());
        assert_coherent(&data);
    }

    #[test]
    fn fiber_ideal_matches_plain_elimination() {
        let spec = map_over(&["x", "y"], &["x^2", "x*y", "y^2"]);
        let data = ReesData::build(&spec, None, &budget()).unwrap();
        let via_elim = ops::eliminate_prefix(data.rees(), spec.n() + 1, &budget()).unwrap();
        assert!(data.fiber().equals(&via_elim, &budget()).unwrap());
    }

    #[test]
    fn jdrank_stable_under_target_coordinate_changes() {
        // an invertible change of the defining forms is a coordinate
        // change on the target, so the dual rank must not move
        let veronese: [&[&str]; 3] = [
            &["y^2", "x*y", "x^2"],
            &["x^2 + x*y", "x*y", "y^2"],
            &["x^2", "x*y + y^2", "x^2 + y^2"],
        ];
        for forms in veronese {
            let spec = map_over(&["x", "y"], forms);
            let data = ReesData::build(&spec, None, &budget()).unwrap();
            assert_eq!(data.jdrank(), 1, "changed Veronese forms {forms:?}");
            assert_eq!(data.analytic_spread(), 2);
        }
        let cremona: [&[&str]; 2] = [
            &["y*z", "x*z", "x*y"],
            &["x*y + x*z", "x*z", "y*z"],
        ];
        for forms in cremona {
            let spec = map_over(&["x", "y", "z"], forms);
            let data = ReesData::build(&spec, None, &budget()).unwrap();
            assert_eq!(data.jdrank(), 2, "changed Cremona forms {forms:?}");
        }
    }

    #[test]
    fn y_degree_cap_flags_truncation() {
        let spec = map_over(&["x", "y"], &["x^2", "x*y", "y^2"]);
        let data = ReesData::build(&spec, Some(0), &budget()).unwrap();
        assert!(data.x_linear().forms.is_empty());
        assert!(!data.x_linear().complete);
        assert_eq!(data.jdrank(), 0);
    }

    #[test]
    fn spec_validation_rejects_malformed_maps() {
        let ring = PolyRing::from_names(FieldSpec::Rationals, &["x", "y"]).unwrap();
        let p = |s: &str| parse_polynomial(&ring, s).unwrap();
        let b = budget();
        // mixed degrees
        assert!(RationalMapSpec::new(&ring, None, vec![p("x"), p("y^2")], &b).is_err());
        // inhomogeneous form
        assert!(RationalMapSpec::new(&ring, None, vec![p("x^2 + y")], &b).is_err());
        // constant form
        assert!(RationalMapSpec::new(&ring, None, vec![p("1"), p("x")], &b).is_err());
        // no forms at all
        assert!(RationalMapSpec::new(&ring, None, Vec::new(), &b).is_err());
        // a form inside the variety ideal
        let v = parsed_ideal(&ring, &["x"]);
        assert!(RationalMapSpec::new(&ring, Some(v), vec![p("x"), p("y")], &b).is_err());
        // the irrelevant ideal leaves an empty scheme
        let irr = parsed_ideal(&ring, &["x", "y"]);
        assert!(RationalMapSpec::new(&ring, Some(irr), vec![p("x")], &b).is_err());
        // inhomogeneous variety ideal
        let bad = parsed_ideal(&ring, &["x + y^2"]);
        assert!(RationalMapSpec::new(&ring, Some(bad), vec![p("x"), p("y")], &b).is_err());
    }

    #[test]
    fn symmetric_ideal_checks_shape() {
        let spec3 = map_over(&["x", "y"], &["x^2", "x*y", "y^2"]);
        let spec2 = map_over(&["x", "y"], &["x^2", "y^2"]);
        let psi2 =
            presentation_matrix(spec2.forms(), spec2.variety().generators(), &budget()).unwrap();
        assert!(symmetric_ideal(&spec3, &psi2).is_err());
    }

    #[test]
    fn substitution_handles_both_shapes() {
        let spec = map_over(&["x", "y"], &["x^2", "x*y", "y^2"]);
        let data = ReesData::build(&spec, None, &budget()).unwrap();
        // fiber-ring element: the conic relation dies under substitution
        let conic = parse_polynomial(data.fiber_ring(), "y0*y2 - y1^2").unwrap();
        assert!(substitute_forms(&conic, spec.forms()).unwrap().is_zero());
        // model element with a surviving x-part
        let g = parse_polynomial(data.s_ring(), "x*y0").unwrap();
        let sub = substitute_forms(&g, spec.forms()).unwrap();
        assert_eq!(sub.to_string(), "x^3");
    }
}
