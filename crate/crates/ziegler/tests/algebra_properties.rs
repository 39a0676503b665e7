//! Property tests for the exact scalar fields, the polynomial ring, and the
//! expression parser.

use num_traits::{Signed, Zero};
use proptest::prelude::*;
use ziegler::polyring::{grevlex_cmp, Monomial, Poly, Var};
use ziegler::scalars::{rat, FieldElement, QuadExt, Rational};
use ziegler::textio::parse_poly;
use ziegler::FieldKind;

fn rational_strategy() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=24).prop_map(|(n, m)| rat(n, m))
}

fn field_element_strategy() -> impl Strategy<Value = FieldElement> {
    prop_oneof![
        rational_strategy().prop_map(FieldElement::from_rational),
        (rational_strategy(), rational_strategy())
            .prop_map(|(a, b)| { FieldElement::from_quad(QuadExt::new(a, b, 2).unwrap()) }),
    ]
}

fn monomial_strategy() -> impl Strategy<Value = Monomial> {
    (0u16..5, 0u16..5, 0u16..5).prop_map(|(a, b, c)| Monomial::new(a, b, c))
}

fn poly_strategy() -> impl Strategy<Value = Poly> {
    proptest::collection::vec((field_element_strategy(), monomial_strategy()), 0..6)
        .prop_map(Poly::from_terms)
}

/// Random homogeneous polynomial of degree exactly `d` (or zero).
fn homogeneous_strategy(d: i64) -> impl Strategy<Value = Poly> {
    let monomials: Vec<Monomial> = {
        let mut out = Vec::new();
        for ex in 0..=d {
            for ey in 0..=(d - ex) {
                out.push(Monomial::new(ex as u16, ey as u16, (d - ex - ey) as u16));
            }
        }
        out
    };
    proptest::collection::vec((field_element_strategy(), 0..monomials.len()), 1..6)
        .prop_map(move |pairs| Poly::from_terms(pairs.into_iter().map(|(c, i)| (c, monomials[i]))))
}

proptest! {
    #[test]
    fn field_axioms(a in field_element_strategy(),
                    b in field_element_strategy(),
                    c in field_element_strategy()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        if !a.is_zero() {
            let inv = a.inv().unwrap();
            prop_assert!((&a * &inv).is_one());
        }
    }

    #[test]
    fn rational_results_stay_normalized(a in rational_strategy(), b in rational_strategy()) {
        // num_rational maintains the invariant; make it an explicit contract
        for r in [&a + &b, &a - &b, &a * &b] {
            prop_assert!(r.denom().is_positive());
            prop_assert!(num_integer::gcd(r.numer().clone(), r.denom().clone())
                == num_bigint::BigInt::from(1) || r.numer() == &num_bigint::BigInt::from(0));
        }
    }

    #[test]
    fn conjugate_product_is_rational(a in rational_strategy(), b in rational_strategy()) {
        let u = QuadExt::new(a, b, 2).unwrap();
        let prod = u.mul(&u.conjugate()).unwrap();
        prop_assert!(prod.b.is_zero());
    }

    #[test]
    fn grevlex_is_multiplicative(m in monomial_strategy(),
                                 n in monomial_strategy(),
                                 w in monomial_strategy()) {
        prop_assert_eq!(grevlex_cmp(&m, &n), grevlex_cmp(&m.mul(&w), &n.mul(&w)));
    }

    #[test]
    fn poly_ring_axioms(f in poly_strategy(), g in poly_strategy(), h in poly_strategy()) {
        prop_assert_eq!(f.mul(&g), g.mul(&f));
        prop_assert_eq!(f.mul(&g).mul(&h), f.mul(&g.mul(&h)));
        prop_assert_eq!(f.mul(&g.add(&h)), f.mul(&g).add(&f.mul(&h)));
        prop_assert!(f.sub(&f).is_zero());
    }

    #[test]
    fn degree_is_additive_on_homogeneous(f in homogeneous_strategy(2), g in homogeneous_strategy(3)) {
        prop_assume!(!f.is_zero() && !g.is_zero());
        let fg = f.mul(&g);
        prop_assert!(!fg.is_zero(), "no zero divisors over a field");
        prop_assert_eq!(fg.homogeneous_degree().unwrap(), 5);
    }

    #[test]
    fn euler_identity(f in homogeneous_strategy(4)) {
        prop_assume!(!f.is_zero());
        let mut acc = Poly::zero();
        for v in Var::ALL {
            acc = acc.add(&Poly::var(v).mul(&f.partial(v)));
        }
        prop_assert_eq!(acc, f.scale(&FieldElement::from_int(4)));
    }

    #[test]
    fn parser_never_panics(src in "[-+*/^()xyzr0-9 ]{0,40}") {
        let _ = parse_poly(&src, FieldKind::Rational);
        let _ = parse_poly(&src, FieldKind::Quadratic(2));
    }

    #[test]
    fn parser_rejects_or_errors_cleanly(src in ".{0,24}") {
        // arbitrary unicode: must return a positioned error or a poly, no panic
        if let Err(e) = parse_poly(&src, FieldKind::Rational) {
            prop_assert!(e.pos <= src.len());
        }
    }

    #[test]
    fn render_parse_round_trip(f in poly_strategy()) {
        let rendered = f.to_string();
        let field = f.field();
        let again = parse_poly(&rendered, field).unwrap();
        prop_assert_eq!(f, again);
    }
}

#[test]
fn malformed_corpus_is_rejected_with_positions() {
    let corpus = [
        "", "+", "x +", "* x", "x ** y", "x ^", "x ^ -2", "(x + y", "x + y)", "2x", "x y", "1/0",
        "r", "x^999999", "x ^ 1/2", "--x", "x*", "/3", "^2", "()",
    ];
    for src in corpus {
        let e =
            parse_poly(src, FieldKind::Rational).expect_err(&format!("'{src}' should not parse"));
        assert!(e.pos <= src.len());
        assert!(!e.msg.is_empty());
    }
}
