//! Randomized structural invariants: arithmetic laws, Groebner-basis
//! uniqueness, saturation algebra, resolution bookkeeping, and the
//! Rees-algebra identities, checked over both coefficient fields.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rmdeg_core::bounds::Verdict;
use rmdeg_core::exec::ExecMode;
use rmdeg_core::{
    assemble_report, eliminate_prefix, hilbert_data, minimal_complex, minimal_free_resolution,
    monomial_birationality_check, normal_form, parse_polynomial, presentation_matrix, saturate,
    substitute_forms, Budget, Coeff, FieldSpec, IdealHandle, Monomial, MonomialOrder, PolyRing,
    Polynomial, RationalMapSpec, ReesData, ReportOptions, RingRef,
};

fn budget() -> Budget {
    Budget::default()
}

fn ring(field: FieldSpec, vars: &[&str]) -> RingRef {
    PolyRing::from_names(field, vars).unwrap()
}

fn polys(r: &RingRef, texts: &[&str]) -> Vec<Polynomial> {
    texts.iter().map(|t| parse_polynomial(r, t).unwrap()).collect()
}

/// Raw term data: (coefficient, exponents), buildable over any field.
type TermData = Vec<(i64, Vec<u32>)>;

fn build(r: &RingRef, data: &TermData) -> Polynomial {
    let field = r.field();
    Polynomial::from_terms(
        r,
        data.iter()
            .map(|(c, e)| (field.from_i64(*c), Monomial::from_exps(e.clone())))
            .collect(),
    )
}

fn term_data(nvars: usize, max_exp: u32, max_terms: usize) -> impl Strategy<Value = TermData> {
    prop::collection::vec(
        (
            (-9i64..=9).prop_filter("nonzero", |c| *c != 0),
            prop::collection::vec(0..=max_exp, nvars),
        ),
        1..=max_terms,
    )
}

/// Reduces a rational polynomial with integral coefficients into 𝔽_p.
fn reduce_mod_p(f: &Polynomial, target: &RingRef) -> Polynomial {
    assert!(matches!(target.field(), FieldSpec::Prime(_)));
    let terms = f
        .terms()
        .iter()
        .map(|(c, m)| {
            let r = match c {
                Coeff::Rat(r) => r,
                Coeff::Fp(_) => unreachable!("source must be rational"),
            };
            assert_eq!(r.denom(), &BigInt::from(1), "integral coefficients expected");
            (target.field().from_bigint(r.numer()), m.clone())
        })
        .collect();
    Polynomial::from_terms(target, terms)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    /// Prime-field arithmetic agrees with integer arithmetic reduced mod p.
    #[test]
    fn prime_field_matches_reduced_integers(
        a in term_data(3, 3, 4),
        b in term_data(3, 3, 4),
    ) {
        let rq = ring(FieldSpec::Rationals, &["x", "y", "z"]);
        let rp = ring(FieldSpec::prime(32003).unwrap(), &["x", "y", "z"]);
        let (fq, gq) = (build(&rq, &a), build(&rq, &b));
        let (fp, gp) = (build(&rp, &a), build(&rp, &b));
        prop_assert_eq!(reduce_mod_p(&fq.mul(&gq), &rp), fp.mul(&gp));
        prop_assert_eq!(reduce_mod_p(&fq.add(&gq), &rp), fp.add(&gp));
        prop_assert_eq!(reduce_mod_p(&fq.sub(&gq), &rp), fp.sub(&gp));
    }
}

proptest! {
    /// The leading monomial of a product is the product of the leading
    /// monomials, for every order kind (coefficients live in a domain).
    #[test]
    fn leading_monomials_multiply(
        a in term_data(4, 3, 4),
        b in term_data(4, 3, 4),
    ) {
        let r = ring(FieldSpec::Rationals, &["x", "y", "z", "w"]);
        let rb = PolyRing::bigraded(
            FieldSpec::Rationals,
            vec!["x".into(), "y".into(), "z".into(), "w".into()],
            2,
        )
        .unwrap();
        for (target, order) in [
            (&r, MonomialOrder::GrevLex),
            (&r, MonomialOrder::Lex),
            (&r, MonomialOrder::Elimination(2)),
            (&rb, MonomialOrder::BigradedGrevLex(2)),
        ] {
            let f = build(target, &a);
            let g = build(target, &b);
            if f.is_zero() || g.is_zero() {
                continue;
            }
            let lead = |h: &Polynomial| {
                h.terms()
                    .iter()
                    .map(|(_, m)| m.clone())
                    .max_by(|x, y| order.cmp_mono(x, y))
                    .unwrap()
            };
            let expected = lead(&f).mul(&lead(&g));
            prop_assert_eq!(lead(&f.mul(&g)), expected);
        }
    }

    /// Printing and re-parsing reproduces the polynomial exactly.
    #[test]
    fn print_parse_round_trip(a in term_data(3, 4, 5), num in -99i64..=99, den in 1i64..=40) {
        for field in [FieldSpec::Rationals, FieldSpec::prime(32003).unwrap()] {
            let r = ring(field, &["x", "y", "z"]);
            let scale = r
                .field()
                .from_ratio(&BigInt::from(num), &BigInt::from(den))
                .unwrap();
            let f = build(&r, &a).mul_coeff(&scale);
            prop_assert_eq!(parse_polynomial(&r, &f.to_string()).unwrap(), f);
        }
    }

    /// Bidegrees add under multiplication.
    #[test]
    fn bidegrees_add(xa in 0u32..4, ya in 0u32..4, xb in 0u32..4, yb in 0u32..4) {
        let r = PolyRing::bigraded(
            FieldSpec::Rationals,
            vec!["x0".into(), "x1".into(), "y0".into(), "y1".into()],
            2,
        )
        .unwrap();
        // Bihomogeneous pieces of prescribed bidegree.
        let f = parse_polynomial(&r, "x0 + 2*x1").unwrap().pow(xa)
            .mul(&parse_polynomial(&r, "y0 - y1").unwrap().pow(ya));
        let g = parse_polynomial(&r, "x0 - 3*x1").unwrap().pow(xb)
            .mul(&parse_polynomial(&r, "y0 + y1").unwrap().pow(yb));
        let product = f.mul(&g);
        prop_assert!(!product.is_zero());
        prop_assert_eq!(f.bidegree(), Some((xa as u64, ya as u64)));
        prop_assert_eq!(g.bidegree(), Some((xb as u64, yb as u64)));
        prop_assert_eq!(
            product.bidegree(),
            Some(((xa + xb) as u64, (ya + yb) as u64))
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// The reduced basis is a canonical form: invariant under generator
    /// permutations and unit rescalings.
    #[test]
    fn reduced_basis_is_canonical(
        gens in prop::collection::vec(term_data(3, 2, 3), 1..=4),
        rotation in 0usize..4,
        scales in prop::collection::vec(1i64..=31, 4),
    ) {
        let r = ring(FieldSpec::prime(32003).unwrap(), &["x", "y", "z"]);
        let built: Vec<Polynomial> = gens
            .iter()
            .map(|d| build(&r, d))
            .filter(|f| !f.is_zero())
            .collect();
        prop_assume!(!built.is_empty());
        let mut shuffled: Vec<Polynomial> = built
            .iter()
            .zip(scales.iter().cycle())
            .map(|(f, &s)| f.mul_coeff(&r.field().from_i64(s)))
            .collect();
        shuffled.reverse();
        let len = shuffled.len();
        shuffled.rotate_left(rotation % len);
        let a = IdealHandle::new(&r, built).unwrap();
        let b = IdealHandle::new(&r, shuffled).unwrap();
        let ga = a.reduced_groebner(MonomialOrder::GrevLex, &budget()).unwrap();
        let gb = b.reduced_groebner(MonomialOrder::GrevLex, &budget()).unwrap();
        prop_assert_eq!(&*ga, &*gb);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    /// Explicit combinations of the generators always reduce to zero, and
    /// the membership predicate agrees with the normal form.
    #[test]
    fn membership_matches_normal_form(
        gens in prop::collection::vec(term_data(3, 2, 3), 1..=3),
        coeffs in prop::collection::vec(term_data(3, 2, 2), 3),
        probe in term_data(3, 3, 4),
    ) {
        let r = ring(FieldSpec::prime(32003).unwrap(), &["x", "y", "z"]);
        let built: Vec<Polynomial> = gens
            .iter()
            .map(|d| build(&r, d))
            .filter(|f| !f.is_zero())
            .collect();
        prop_assume!(!built.is_empty());
        let ideal = IdealHandle::new(&r, built.clone()).unwrap();
        let mut member = Polynomial::zero(&r);
        for (f, c) in built.iter().zip(coeffs.iter()) {
            member = member.add(&f.mul(&build(&r, c)));
        }
        prop_assert!(ideal.contains(&member, &budget()).unwrap());

        let basis = ideal.reduced_groebner(MonomialOrder::GrevLex, &budget()).unwrap();
        let probe_poly = build(&r, &probe);
        let nf = normal_form(&r, &probe_poly, &basis, MonomialOrder::GrevLex);
        prop_assert_eq!(
            ideal.contains(&probe_poly, &budget()).unwrap(),
            nf.is_zero()
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// Saturation only grows the ideal and is idempotent.
    #[test]
    fn saturation_grows_and_stabilizes(
        gens in prop::collection::vec(term_data(3, 2, 2), 1..=3),
    ) {
        let r = ring(FieldSpec::prime(32003).unwrap(), &["x", "y", "z"]);
        let built: Vec<Polynomial> = gens
            .iter()
            .map(|d| build(&r, d))
            .filter(|f| !f.is_zero() && !f.is_constant())
            .collect();
        prop_assume!(!built.is_empty());
        let ideal = IdealHandle::new(&r, built.clone()).unwrap();
        let irrelevant = IdealHandle::new(&r, polys(&r, &["x", "y", "z"])).unwrap();
        let sat = saturate(&ideal, &irrelevant, &budget()).unwrap();
        for f in &built {
            prop_assert!(sat.contains(f, &budget()).unwrap());
        }
        let sat2 = saturate(&sat, &irrelevant, &budget()).unwrap();
        prop_assert!(sat.equals(&sat2, &budget()).unwrap());
    }
}

#[test]
fn elimination_is_a_subideal_and_keeps_prefix_free_generators() {
    let r = PolyRing::bigraded(
        FieldSpec::Rationals,
        vec!["x0".into(), "x1".into(), "y0".into(), "y1".into(), "y2".into()],
        2,
    )
    .unwrap();
    let gens = polys(
        &r,
        &[
            "x0*y0 - x1*y1",
            "y0*y2 - y1^2",
            "x0^2*y2 - x1^2*y0",
            "y0 + y1 - y2",
        ],
    );
    let ideal = IdealHandle::new(&r, gens.clone()).unwrap();
    // The result lives in the ring with the prefix variables removed.
    let eliminated = eliminate_prefix(&ideal, 2, &budget()).unwrap();
    for g in eliminated.generators() {
        let promoted = g.shift_right(&r, 2);
        assert!(
            ideal.contains(&promoted, &budget()).unwrap(),
            "not a subideal: {g}"
        );
    }
    let small = eliminated.ring();
    for g in &gens {
        let x_free = g.terms().iter().all(|(_, m)| m.exps()[..2].iter().all(|&e| e == 0));
        if x_free {
            assert!(
                eliminated.contains(&g.drop_prefix(small, 2), &budget()).unwrap(),
                "prefix-free generator dropped: {g}"
            );
        }
    }
}

/// The example corpus with the published degrees.
fn corpus(field: FieldSpec) -> Vec<(&'static str, RationalMapSpec, u64)> {
    let plane = ring(field, &["x", "y", "z"]);
    let line = ring(field, &["x", "y"]);
    let make = |r: &RingRef, forms: &[&str]| {
        RationalMapSpec::new(r, None, polys(r, forms), &budget()).unwrap()
    };
    vec![
        ("mon-a", make(&plane, &["x^2", "y*z", "z^2"]), 2),
        ("mon-b", make(&plane, &["x^2*y", "x*z^2", "y^2*z"]), 3),
        ("cremona", make(&plane, &["x*y", "x*z", "y*z"]), 1),
        (
            "veronese",
            make(&plane, &["x^2", "x*y", "y^2", "x*z", "y*z", "z^2"]),
            1,
        ),
        ("ci-d2", make(&plane, &["x^2", "y^2", "z^2"]), 4),
        ("ci-d3", make(&plane, &["x^3", "y^3", "z^3"]), 9),
        ("koszul-p1", make(&line, &["x^2", "y^2"]), 2),
    ]
}

#[test]
fn syzygy_columns_annihilate_the_generators() {
    for (name, spec, _) in corpus(FieldSpec::Rationals) {
        let psi = presentation_matrix(spec.forms(), &[], &budget()).unwrap();
        for c in 0..psi.ncols() {
            let mut dot = Polynomial::zero(spec.ring());
            for (row, f) in spec.forms().iter().enumerate() {
                dot = dot.add(&psi.entry(row, c).mul(f));
            }
            assert!(dot.is_zero(), "{name}: column {c} is not a syzygy");
        }
    }
}

#[test]
fn resolutions_are_minimal_and_rank_balanced() {
    for (name, spec, _) in corpus(FieldSpec::Rationals) {
        let base = IdealHandle::new(spec.ring(), spec.forms().to_vec()).unwrap();
        let mats = minimal_complex(&base, &budget()).unwrap();
        for (k, m) in mats.iter().enumerate() {
            if k == 0 {
                continue; // the generator row itself maps onto the ideal
            }
            for r in 0..m.nrows() {
                for c in 0..m.ncols() {
                    let e = m.entry(r, c);
                    assert!(
                        e.is_zero() || !e.is_constant(),
                        "{name}: constant entry survives at stage {k}"
                    );
                }
            }
        }
        // The complex starts with the generator row, so the free ranks
        // resolve the quotient module, whose generic rank vanishes for a
        // nonzero ideal: the Euler characteristic must be zero.
        let mut alternating: i64 = 0;
        let mut sign = 1i64;
        for m in &mats {
            alternating += sign * m.nrows() as i64;
            sign = -sign;
        }
        alternating += sign * mats.last().unwrap().ncols() as i64;
        assert_eq!(alternating, 0, "{name}: rank bookkeeping");
    }
}

#[test]
fn betti_numbers_ignore_generator_presentation() {
    let field = FieldSpec::prime(32003).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for (name, spec, _) in corpus(field) {
        let gens = spec.forms().to_vec();
        let base = IdealHandle::new(spec.ring(), gens.clone()).unwrap();
        let reference = minimal_free_resolution(&base, &budget()).unwrap();
        for _ in 0..3 {
            // Random invertible change: unit rescalings plus additions of
            // same-degree earlier generators, then a rotation.
            let mut changed = gens.clone();
            for i in 0..changed.len() {
                let unit = field.from_i64(rng.gen_range(1..32003));
                changed[i] = changed[i].mul_coeff(&unit);
                for j in 0..i {
                    if changed[j].degree() == changed[i].degree() && rng.gen_bool(0.5) {
                        let c = field.from_i64(rng.gen_range(0..32003));
                        changed[i] = changed[i].add(&changed[j].mul_coeff(&c));
                    }
                }
            }
            let k = rng.gen_range(0..changed.len());
            changed.rotate_left(k);
            let moved = IdealHandle::new(spec.ring(), changed).unwrap();
            let betti = minimal_free_resolution(&moved, &budget()).unwrap();
            assert_eq!(betti, reference, "{name}: Betti table moved");
        }
    }
}

#[test]
fn regular_sequences_resolve_as_koszul_complexes() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let r = ring(FieldSpec::Rationals, &["x", "y", "z"]);
    let vars = ["x", "y", "z"];
    for len in 1..=3usize {
        for _ in 0..4 {
            let degrees: Vec<u32> = (0..len).map(|_| rng.gen_range(1..=3)).collect();
            let gens: Vec<Polynomial> = degrees
                .iter()
                .enumerate()
                .map(|(i, &d)| {
                    parse_polynomial(&r, &format!("{}^{}", vars[i], d)).unwrap()
                })
                .collect();
            let ideal = IdealHandle::new(&r, gens).unwrap();
            let betti = minimal_free_resolution(&ideal, &budget()).unwrap();
            let mut expected: BTreeMap<(usize, i64), usize> = BTreeMap::new();
            // Free module i of the resolved ideal is spanned by the
            // (i+1)-subsets of the sequence, shifted by their degree sums.
            for mask in 1u32..(1 << len) {
                let size = mask.count_ones() as usize;
                let shift: i64 = (0..len)
                    .filter(|i| mask & (1 << i) != 0)
                    .map(|i| degrees[i] as i64)
                    .sum();
                *expected.entry((size - 1, shift)).or_insert(0) += 1;
            }
            assert_eq!(
                betti.entries(),
                &expected,
                "Koszul shape for degrees {degrees:?}"
            );
        }
    }
}

#[test]
fn rees_ideal_contains_and_kills_the_expected_elements() {
    for (name, spec, _) in corpus(FieldSpec::Rationals) {
        let rees = ReesData::build(&spec, None, &budget()).unwrap();
        for g in rees.symmetric().generators() {
            assert!(
                rees.rees().contains(g, &budget()).unwrap(),
                "{name}: symmetric relation outside the Rees ideal"
            );
        }
        for g in rees.rees().generators() {
            let image = substitute_forms(g, spec.forms()).unwrap();
            assert!(image.is_zero(), "{name}: Rees generator {g} survives substitution");
        }
        let x_count = spec.ring().nvars();
        for g in rees.fiber().generators() {
            let image = substitute_forms(g, spec.forms()).unwrap();
            assert!(image.is_zero(), "{name}: image equation {g} survives substitution");
            let promoted = g.shift_right(rees.s_ring(), x_count);
            assert!(
                rees.rees().contains(&promoted, &budget()).unwrap(),
                "{name}: image equation outside the Rees ideal"
            );
        }
    }
}

#[test]
fn analytic_spread_is_full_for_finite_corpus_maps() {
    for (name, spec, _) in corpus(FieldSpec::Rationals) {
        let rees = ReesData::build(&spec, None, &budget()).unwrap();
        assert_eq!(
            rees.analytic_spread(),
            spec.t() + 1,
            "{name}: analytic spread"
        );
    }
}

#[test]
fn jdrank_survives_target_coordinate_changes() {
    let field = FieldSpec::prime(32003).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for (name, spec, _) in corpus(field) {
        let reference = ReesData::build(&spec, None, &budget()).unwrap().jdrank();
        let m = spec.forms().len();
        for change in 0..5 {
            // Invertible matrix: unit-diagonal upper times unit-diagonal
            // lower triangular.
            let mut upper = vec![vec![0i64; m]; m];
            let mut lower = vec![vec![0i64; m]; m];
            for i in 0..m {
                upper[i][i] = 1;
                lower[i][i] = 1;
                for j in (i + 1)..m {
                    upper[i][j] = rng.gen_range(0..23);
                    lower[j][i] = rng.gen_range(0..23);
                }
            }
            let multiply = |a: &Vec<Vec<i64>>, b: &Vec<Vec<i64>>| -> Vec<Vec<i64>> {
                let mut out = vec![vec![0i64; m]; m];
                for i in 0..m {
                    for k in 0..m {
                        for j in 0..m {
                            out[i][j] += a[i][k] * b[k][j];
                        }
                    }
                }
                out
            };
            let matrix = multiply(&upper, &lower);
            let changed: Vec<Polynomial> = (0..m)
                .map(|i| {
                    let mut acc = Polynomial::zero(spec.ring());
                    for (j, f) in spec.forms().iter().enumerate() {
                        acc = acc.add(&f.mul_coeff(&field.from_i64(matrix[i][j])));
                    }
                    acc
                })
                .collect();
            let moved =
                RationalMapSpec::new(spec.ring(), None, changed, &budget()).unwrap();
            let jdrank = ReesData::build(&moved, None, &budget()).unwrap().jdrank();
            assert_eq!(jdrank, reference, "{name}: rank moved on change {change}");
        }
    }
}

#[test]
fn jdrank_is_bounded_by_n_and_detects_birationality() {
    for (name, spec, expected_degree) in corpus(FieldSpec::Rationals) {
        let rees = ReesData::build(&spec, None, &budget()).unwrap();
        assert!(rees.jdrank() <= spec.n(), "{name}: rank exceeds n");
        assert_eq!(
            rees.jdrank() == spec.n(),
            expected_degree == 1,
            "{name}: rank {} vs degree {expected_degree}",
            rees.jdrank()
        );
    }
}

#[test]
fn bound_chain_holds_on_the_corpus() {
    for (name, spec, expected_degree) in corpus(FieldSpec::Rationals) {
        let report = assemble_report(&spec, &ReportOptions::default()).unwrap();
        assert_eq!(report.degree.value, expected_degree, "{name}: degree");
        let min_upper = report
            .bounds
            .upper
            .iter()
            .filter(|b| b.applicable)
            .filter_map(|b| b.value)
            .min()
            .unwrap();
        let max_lower = report
            .bounds
            .lower
            .iter()
            .filter(|b| b.applicable)
            .filter_map(|b| b.value)
            .max()
            .unwrap_or(0);
        assert!(
            max_lower <= report.degree.value && report.degree.value <= min_upper,
            "{name}: chain {max_lower} <= {} <= {min_upper}",
            report.degree.value,
        );
        let violated: Vec<&str> = report
            .bounds
            .upper
            .iter()
            .chain(report.bounds.lower.iter())
            .filter(|b| b.verdict == Some(Verdict::Violated))
            .map(|b| b.name)
            .collect();
        assert!(violated.is_empty(), "{name}: violated {violated:?}");
    }
}

#[test]
fn modal_degree_is_seed_stable() {
    for (name, spec, expected_degree) in corpus(FieldSpec::Rationals) {
        for seed in 1..=5u64 {
            let (value, _) = rmdeg_core::degree_via_general_fiber(
                &spec,
                3,
                seed,
                ExecMode::default(),
                &budget(),
            )
            .unwrap();
            assert_eq!(value, expected_degree, "{name}: seed {seed}");
        }
    }
}

#[test]
fn fiber_multiplicity_matches_the_stabilized_hilbert_count() {
    let field = FieldSpec::prime(32003).unwrap();
    for (name, spec, expected_degree) in corpus(field) {
        let (value, trials) = rmdeg_core::degree_via_general_fiber(
            &spec,
            3,
            42,
            ExecMode::default(),
            &budget(),
        )
        .unwrap();
        assert_eq!(value, expected_degree, "{name}: degree over the prime field");
        let nvars = spec.ring().nvars();
        for t in trials.iter().filter(|t| t.is_valid()) {
            let h = hilbert_data(&t.fiber_ideal, &budget()).unwrap();
            assert_eq!(h.multiplicity, t.fiber_multiplicity, "{name}: data mismatch");
            // The affine cone over a finite fiber has a Hilbert function
            // that stabilizes at the point count.
            for d in 12..=15u64 {
                assert_eq!(
                    h.hilbert_function(nvars, d),
                    h.multiplicity as i128,
                    "{name}: function not stabilized at degree {d}"
                );
            }
        }
    }
}

#[test]
fn log_matrix_verdict_agrees_with_the_computed_degree() {
    for (name, spec, expected_degree) in corpus(FieldSpec::Rationals) {
        let birational = monomial_birationality_check(&spec).unwrap();
        assert_eq!(
            birational,
            expected_degree == 1,
            "{name}: log-matrix verdict vs degree {expected_degree}"
        );
    }
}
