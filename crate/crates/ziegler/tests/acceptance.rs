//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line
//! (run with `cargo test --test acceptance -- --nocapture` to see them all).
//! Betti tables are asserted exactly; time budgets are wall-clock pinned.

mod common;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::sync::OnceLock;
use std::time::{Duration, Instant};
use ziegler::catalog::{catalog_entries, entry, verify, verify_all, CatalogEntry};
use ziegler::curvelab::{
    analyze, resolution_analysis, verdict_from_tables, ziegler_verdict, Options,
    ResolutionAnalysis, Verdict,
};
use ziegler::groebner::{ideal_groebner_basis, normal_form_poly, verify_basis};
use ziegler::polyring::{Poly, Var};
use ziegler::resolution::{betti_numerator, betti_table, free_resolution, minimize, BettiTable};
use ziegler::scalars::FieldKind;
use ziegler::textio::parse_poly;

fn criterion(name: &str, body: impl FnOnce() + std::panic::UnwindSafe) {
    let outcome = std::panic::catch_unwind(body);
    match &outcome {
        Ok(()) => println!("acceptance {name}: PASS"),
        Err(_) => println!("acceptance {name}: FAIL"),
    }
    if let Err(e) = outcome {
        std::panic::resume_unwind(e);
    }
}

/// One checked analysis per catalog curve, shared across criteria. The
/// `check` flag turns on S-pair re-verification, d∘d = 0 on both the raw and
/// the minimal resolution, the Euler membership test, and the Hilbert-series
/// identity — so simply building this table discharges most of criterion 7.
fn checked_analyses() -> &'static Vec<(CatalogEntry, ResolutionAnalysis, Duration)> {
    static CELL: OnceLock<Vec<(CatalogEntry, ResolutionAnalysis, Duration)>> = OnceLock::new();
    CELL.get_or_init(|| {
        let opts = Options {
            check: true,
            ..Options::default()
        };
        catalog_entries()
            .into_iter()
            .map(|e| {
                let start = Instant::now();
                let a = resolution_analysis(&e.curve, &opts);
                let elapsed = start.elapsed();
                (e, a, elapsed)
            })
            .collect()
    })
}

fn analysis_for(key: &str) -> (&'static ResolutionAnalysis, Duration) {
    let (_, a, d) = checked_analyses()
        .iter()
        .find(|(e, _, _)| e.key == key)
        .unwrap_or_else(|| panic!("no catalog entry {key}"));
    (a, *d)
}

fn assert_shape(key: &str, budget: Duration, expected: &[(i64, i64, i64)], chain: &str) {
    let (a, elapsed) = analysis_for(key);
    assert!(
        elapsed <= budget,
        "{key} took {elapsed:?}, over the {budget:?} budget"
    );
    assert_eq!(
        a.betti,
        BettiTable::from_triples(expected),
        "{key}: Betti table differs from the published shape"
    );
    assert_eq!(a.resolution.display_chain(), chain, "{key}");
}

#[test]
fn criterion_1_sextic_betti_reproduction() {
    criterion("criterion 1 (sextic Betti reproduction)", || {
        let budget = Duration::from_secs(120);
        assert_shape(
            "sextic-B1",
            budget,
            &[
                (0, 0, 1),
                (1, 5, 3),
                (2, 8, 1),
                (2, 10, 3),
                (3, 11, 1),
                (3, 12, 1),
            ],
            "0 → S(-11) ⊕ S(-12) → S(-8) ⊕ S(-10)^3 → S(-5)^3 → S(0)",
        );
        assert_shape(
            "sextic-B2",
            budget,
            &[(0, 0, 1), (1, 5, 3), (2, 9, 2), (2, 10, 3), (3, 11, 3)],
            "0 → S(-11)^3 → S(-9)^2 ⊕ S(-10)^3 → S(-5)^3 → S(0)",
        );
    });
}

#[test]
fn criterion_2_degree_seven_betti_reproduction() {
    criterion("criterion 2 (degree-7 Betti reproduction)", || {
        let budget = Duration::from_secs(120);
        let first_shape: &[(i64, i64, i64)] = &[
            (0, 0, 1),
            (1, 6, 3),
            (2, 9, 1),
            (2, 10, 1),
            (2, 11, 1),
            (3, 12, 1),
        ];
        let first_chain = "0 → S(-12) → S(-9) ⊕ S(-10) ⊕ S(-11) → S(-6)^3 → S(0)";
        let second_shape: &[(i64, i64, i64)] = &[(0, 0, 1), (1, 6, 3), (2, 10, 4), (3, 11, 2)];
        let second_chain = "0 → S(-11)^2 → S(-10)^4 → S(-6)^3 → S(0)";
        for i in 1..=3 {
            assert_shape(&format!("deg7-B{i},1"), budget, first_shape, first_chain);
            assert_shape(&format!("deg7-B{i},2"), budget, second_shape, second_chain);
        }
        // the Cmb123 pair runs over Q(sqrt(2))
        for key in ["deg7-B1,1", "deg7-B1,2"] {
            let e = entry(key).unwrap();
            assert_eq!(e.curve.field, FieldKind::Quadratic(2), "{key}");
        }
        for i in 1..=4 {
            assert_shape(
                &format!("deg7-B4,{i}"),
                budget,
                &[(0, 0, 1), (1, 6, 3), (2, 10, 3), (3, 12, 1)],
                "0 → S(-12) → S(-10)^3 → S(-6)^3 → S(0)",
            );
        }
        assert_shape(
            "deg7-B5,1",
            budget,
            &[
                (0, 0, 1),
                (1, 6, 3),
                (2, 9, 1),
                (2, 10, 1),
                (2, 12, 1),
                (3, 13, 1),
            ],
            "0 → S(-13) → S(-9) ⊕ S(-10) ⊕ S(-12) → S(-6)^3 → S(0)",
        );
        assert_shape(
            "deg7-B5,2",
            budget,
            &[
                (0, 0, 1),
                (1, 6, 3),
                (2, 10, 3),
                (2, 11, 1),
                (3, 11, 1),
                (3, 12, 1),
            ],
            "0 → S(-11) ⊕ S(-12) → S(-10)^3 ⊕ S(-11) → S(-6)^3 → S(0)",
        );
    });
}

#[test]
fn criterion_3_degree_eight_betti_reproduction() {
    criterion("criterion 3 (degree-8 Betti reproduction)", || {
        let budget = Duration::from_secs(300);
        assert_shape(
            "deg8-B1",
            budget,
            &[(0, 0, 1), (1, 7, 3), (2, 11, 1), (2, 12, 2), (3, 14, 1)],
            "0 → S(-14) → S(-11) ⊕ S(-12)^2 → S(-7)^3 → S(0)",
        );
        let shape: &[(i64, i64, i64)] = &[(0, 0, 1), (1, 7, 3), (2, 12, 5), (3, 13, 3)];
        let chain = "0 → S(-13)^3 → S(-12)^5 → S(-7)^3 → S(0)";
        assert_shape("deg8-B2", budget, shape, chain);
        assert_shape("deg8-B3", budget, shape, chain);
    });
}

#[test]
fn criterion_4_ziegler_verdicts() {
    criterion("criterion 4 (strong-Ziegler verdicts)", || {
        let betti = |key: &str| -> &BettiTable { &analysis_for(key).0.betti };
        // strong Ziegler pairs of degree 7: (B_{i,1}, B_{i,2}) for i = 1,2,3,5
        for i in [1, 2, 3, 5] {
            let v = verdict_from_tables(
                betti(&format!("deg7-B{i},1")),
                betti(&format!("deg7-B{i},2")),
                true,
            );
            assert_eq!(v.verdict, Verdict::StrongZiegler, "deg7 pair {i}");
        }
        // the sextic pair, exercised through the full curve-level operation
        let v = ziegler_verdict(
            &entry("sextic-B1").unwrap().curve,
            &entry("sextic-B2").unwrap().curve,
            true,
        )
        .unwrap();
        assert_eq!(v.verdict, Verdict::StrongZiegler, "sextic pair");
        // degree 8: (B1,B2) and (B1,B3) are strong Ziegler pairs
        for other in ["deg8-B2", "deg8-B3"] {
            let v = verdict_from_tables(betti("deg8-B1"), betti(other), true);
            assert_eq!(v.verdict, Verdict::StrongZiegler, "deg8-B1 vs {other}");
        }
        // every Cmb223 quadruple pair stays inconclusive
        for i in 1..=4 {
            for j in (i + 1)..=4 {
                let v = verdict_from_tables(
                    betti(&format!("deg7-B4,{i}")),
                    betti(&format!("deg7-B4,{j}")),
                    true,
                );
                assert_eq!(v.verdict, Verdict::Inconclusive, "deg7-B4 pair ({i},{j})");
                assert!(v.betti_equal);
            }
        }
        // and so does degree-8 (B2, B3)
        let v = verdict_from_tables(betti("deg8-B2"), betti("deg8-B3"), true);
        assert_eq!(v.verdict, Verdict::Inconclusive, "deg8 (B2,B3)");
        // without the combinatorics assertion no claim is made
        let v = verdict_from_tables(betti("sextic-B1"), betti("sextic-B2"), false);
        assert_eq!(v.verdict, Verdict::NotComparable);
    });
}

#[test]
fn criterion_5_tjurina_cross_check() {
    criterion("criterion 5 (Tjurina cross-checks)", || {
        for (e, a, _) in checked_analyses() {
            let stats = betti_numerator(&a.betti).stats();
            assert_eq!(stats.at_one, 0, "{}", e.key);
            assert_eq!(stats.derivative_at_one, 0, "{}", e.key);
            assert_eq!(
                stats.half_second_derivative_at_one, a.tjurina,
                "{}: numerator vs stabilized Hilbert value",
                e.key
            );
        }
        for key in ["sextic-B1", "sextic-B2"] {
            assert_eq!(
                analysis_for(key).0.tjurina,
                12,
                "{key}: 6 cusps x tau(A2)=2"
            );
        }
        for key in ["deg8-B1", "deg8-B2", "deg8-B3"] {
            assert_eq!(
                analysis_for(key).0.tjurina,
                33,
                "{key}: 7 nodes + 6 tacnodes x 3 + 2 triple points x 4"
            );
        }
    });
}

#[test]
fn criterion_6_conic_test() {
    criterion("criterion 6 (conic through the six cusps)", || {
        let b1 = analyze(&entry("sextic-B1").unwrap().curve);
        let b2 = analyze(&entry("sextic-B2").unwrap().curve);
        let dims1 = &b1.report.saturated_piece_dims;
        let dims2 = &b2.report.saturated_piece_dims;
        assert_eq!(
            dims2[&2], 0,
            "sextic-B2: no conic may vanish on the singular scheme"
        );
        // As specified this expects dim (J^sat)_2 = 1 for sextic-B1. The
        // saturated Jacobian ideal localizes to the Tjurina ideal (Q, C^2) at
        // each cusp, which contains the *cubic* Q = x^3+y^3+z^3 but not the
        // conic C: the computed dims are (0, 0, 1) for B1 and (0, 0, 0) for
        // B2, i.e. the published dichotomy shows up in degree 3, not 2.
        assert_eq!(
            dims1[&2], 1,
            "sextic-B1: expected a one-dimensional space of conics on the \
             singular scheme; computed dims k=1..3 are {:?} vs B2's {:?} — \
             the existence/non-existence split is realized by dim (J^sat)_3 = \
             {} vs {}",
            dims1, dims2, dims1[&3], dims2[&3]
        );
    });
}

#[test]
fn criterion_7_property_suites() {
    criterion("criterion 7 (Koszul shapes, exactness, GB closure)", || {
        // Fermat curves x^n + y^n + z^n, n = 3..6: Koszul resolutions
        for n in 3i64..=6 {
            let f = parse_poly(&format!("x^{n} + y^{n} + z^{n}"), FieldKind::Rational).unwrap();
            let j = ideal_groebner_basis(vec![
                f.partial(Var::X),
                f.partial(Var::Y),
                f.partial(Var::Z),
            ]);
            let min = minimize(&free_resolution(&j));
            let b = betti_table(&min).unwrap();
            let d = n - 1;
            assert_eq!(
                b,
                BettiTable::from_triples(&[(0, 0, 1), (1, d, 3), (2, 2 * d, 3), (3, 3 * d, 1)]),
                "Fermat n = {n}"
            );
        }
        // d∘d = 0 and the Hilbert-series identity for every computed
        // resolution: forcing the shared checked analyses runs check_complex
        // on the raw and minimal chains plus the Hilbert cross-check per curve
        assert_eq!(checked_analyses().len(), 17);
        // GB S-pair closure and membership round-trips on randomized ideals
        // of degree <= 4 against the brute-force linear-algebra oracle
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        for _ in 0..6 {
            let mut gens: Vec<Poly> = Vec::new();
            while gens.len() < 2 {
                let d = rng.gen_range(1i64..=4);
                let f =
                    Poly::from_terms(common::monomials_of_degree(d).into_iter().filter_map(|m| {
                        let c = rng.gen_range(-3i64..=3);
                        (c != 0 && rng.gen_bool(0.5))
                            .then(|| (ziegler::FieldElement::from_int(c), m))
                    }));
                if !f.is_zero() {
                    gens.push(f);
                }
            }
            let gb = ideal_groebner_basis(gens.clone());
            assert!(verify_basis(&gb), "S-pair closure for {gens:?}");
            for g in &gens {
                assert!(gb.contains_poly(g), "membership round-trip for {g}");
            }
            for t in 1..=5 {
                let probe =
                    Poly::from_terms(common::monomials_of_degree(t).into_iter().filter_map(|m| {
                        let c = rng.gen_range(-2i64..=2);
                        (c != 0 && rng.gen_bool(0.4))
                            .then(|| (ziegler::FieldElement::from_int(c), m))
                    }));
                if probe.is_zero() {
                    continue;
                }
                assert_eq!(
                    common::ideal_contains(&gens, &probe),
                    normal_form_poly(&probe, &gb).is_zero(),
                    "oracle disagreement for {probe} against {gens:?}"
                );
            }
        }
    });
}

#[test]
fn criterion_8_negative_control() {
    criterion("criterion 8 (negative control)", || {
        let opts = Options::default();
        let baseline = verify_all(&opts, true);
        assert!(
            baseline.iter().all(|o| o.pass),
            "baseline catalog must be green"
        );
        for mut e in catalog_entries() {
            let key = e.key;
            // corrupt a single coefficient: double one term of the first
            // component with more than one term (a one-term component would
            // only rescale the defining polynomial, which provably changes
            // nothing)
            let idx = e
                .curve
                .components
                .iter()
                .position(|c| c.poly.len() > 1)
                .unwrap_or_else(|| panic!("{key}: no multi-term component"));
            let poly = &e.curve.components[idx].poly;
            let (c0, m0) = poly.terms()[0].clone();
            e.curve.components[idx].poly = poly.add(&Poly::term(c0, m0));
            let outcome = verify(&e, &opts);
            assert!(
                !outcome.pass,
                "{key}: corrupted coefficient slipped through verify (detail: {})",
                outcome.detail
            );
        }
    });
}
