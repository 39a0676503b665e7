//! Resolution pipeline checks: Koszul shapes for the Fermat family, exactness
//! bookkeeping, the Hilbert-series identity against both the monomial count
//! and the brute-force oracle, and stability under generator reordering.

mod common;

use ziegler::groebner::{hilbert_function, ideal_groebner_basis};
use ziegler::polyring::{Poly, Var};
use ziegler::resolution::{
    betti_table, check_complex, free_resolution, hilbert_from_betti, minimize, regularity,
    BettiTable,
};
use ziegler::scalars::FieldKind;
use ziegler::textio::parse_poly;

fn p(src: &str) -> Poly {
    parse_poly(src, FieldKind::Rational).unwrap()
}

fn milnor(
    f: &Poly,
) -> (
    ziegler::FreeResolution,
    BettiTable,
    ziegler::groebner::GroebnerBasis,
) {
    let j = ideal_groebner_basis(vec![
        f.partial(Var::X),
        f.partial(Var::Y),
        f.partial(Var::Z),
    ]);
    let raw = free_resolution(&j);
    check_complex(&raw).unwrap();
    assert!(raw.length() <= 3, "resolution length bound");
    let min = minimize(&raw);
    check_complex(&min).unwrap();
    let b = betti_table(&min).unwrap();
    (min, b, j)
}

#[test]
fn fermat_family_is_koszul() {
    for n in 3i64..=6 {
        let f = p(&format!("x^{n} + y^{n} + z^{n}"));
        let (min, b, _) = milnor(&f);
        let d = n - 1;
        let expected =
            BettiTable::from_triples(&[(0, 0, 1), (1, d, 3), (2, 2 * d, 3), (3, 3 * d, 1)]);
        assert_eq!(b, expected, "Fermat n = {n}");
        assert_eq!(
            min.display_chain(),
            format!("0 → S(-{}) → S(-{})^3 → S(-{})^3 → S(0)", 3 * d, 2 * d, d)
        );
    }
}

#[test]
fn hilbert_identity_three_ways() {
    // resolution twists vs GB monomial count vs generator-only linear algebra
    for src in [
        "x^3 + y^3 + z^3",
        "x*y*z",
        "x^4 + x*y^3 + z^4",
        "(x^2 + y^2 + z^2)^2 + x*y*z*x",
    ] {
        let f = p(src);
        let partials = vec![f.partial(Var::X), f.partial(Var::Y), f.partial(Var::Z)];
        let (_, b, j) = milnor(&f);
        let top = regularity(&b) + 3;
        for t in 0..=top {
            let from_betti = hilbert_from_betti(&b, t);
            let from_count = hilbert_function(&j, t);
            assert_eq!(from_betti, from_count, "{src} at degree {t}");
            if t <= 6 {
                assert_eq!(
                    from_count,
                    common::quotient_dim(&partials, t),
                    "{src} oracle at {t}"
                );
            }
        }
    }
}

#[test]
fn alternating_rank_sum_vanishes() {
    for src in ["x^3 + y^3 + z^3", "x^5 + y^5 + z^5", "x*y*z"] {
        let (_, b, _) = milnor(&p(src));
        assert_eq!(b.alternating_rank_sum(), 0);
        assert_eq!(b.get(0, 0), 1);
    }
}

#[test]
fn betti_table_is_independent_of_generator_order() {
    let f = p("(x^2 + y^2 + z^2)^3 + (x^3 + y^3 + z^3)^2");
    let gens = vec![f.partial(Var::X), f.partial(Var::Y), f.partial(Var::Z)];
    let reference = {
        let j = ideal_groebner_basis(gens.clone());
        betti_table(&minimize(&free_resolution(&j))).unwrap()
    };
    let orders: Vec<Vec<usize>> = vec![vec![2, 0, 1], vec![1, 2, 0], vec![2, 1, 0]];
    for perm in orders {
        let shuffled: Vec<Poly> = perm.iter().map(|&i| gens[i].clone()).collect();
        let j = ideal_groebner_basis(shuffled);
        let b = betti_table(&minimize(&free_resolution(&j))).unwrap();
        assert_eq!(b, reference, "permutation {perm:?}");
    }
}

#[test]
fn resolving_a_regular_sequence_of_mixed_degrees() {
    // (x, y^2, z^3): Koszul twists come from the degree sums
    let j = ideal_groebner_basis(vec![p("x"), p("y^2"), p("z^3")]);
    let min = minimize(&free_resolution(&j));
    let b = betti_table(&min).unwrap();
    let expected = BettiTable::from_triples(&[
        (0, 0, 1),
        (1, 1, 1),
        (1, 2, 1),
        (1, 3, 1),
        (2, 3, 1),
        (2, 4, 1),
        (2, 5, 1),
        (3, 6, 1),
    ]);
    assert_eq!(b, expected);
}

#[test]
fn principal_ideal_resolution_has_length_one() {
    let j = ideal_groebner_basis(vec![p("x^2 + y*z")]);
    let min = minimize(&free_resolution(&j));
    assert_eq!(min.length(), 1);
    assert_eq!(min.display_chain(), "0 → S(-2) → S(0)");
}

#[test]
fn minimization_is_idempotent_on_catalog_scale_input() {
    let f = p(
        "x^6 - x^4*y^2 + 1/3*x^2*y^4 - 1/27*y^6 + 2*x^3*y^2*z - 2*x^4*z^2 \
               - 5/3*x^2*y^2*z^2 - 2/9*y^4*z^2 + 4/3*x^2*z^4 + 5/9*y^2*z^4 - 8/27*z^6",
    );
    let j = ideal_groebner_basis(vec![
        f.partial(Var::X),
        f.partial(Var::Y),
        f.partial(Var::Z),
    ]);
    let raw = free_resolution(&j);
    let min = minimize(&raw);
    let again = minimize(&min);
    assert_eq!(min.twist_vectors, again.twist_vectors);
    assert_eq!(min.differentials, again.differentials);
    assert!(min.minimal);
}
