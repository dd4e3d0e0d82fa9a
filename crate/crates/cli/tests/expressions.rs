//! Printing and parsing of algebra elements: parse ∘ print ∘ parse = parse.

use ncreflect::analysis::poly;
use ncreflect_core::input::Problem;
use ncreflect_core::presets;
use proptest::prelude::*;
use std::sync::OnceLock;

fn e42() -> &'static Problem {
    static P: OnceLock<Problem> = OnceLock::new();
    P.get_or_init(|| {
        presets::load("e42-kacpalyutkin")
            .unwrap()
            .load(Some(6))
            .unwrap()
    })
}

fn coeff() -> impl Strategy<Value = String> {
    (0i64..=5, 1i64..=4, 0u32..8).prop_map(|(n, d, k)| match k {
        0 => format!("{n}/{d}"),
        2 => format!("{n}/{d}*i"),
        _ => format!("{n}/{d}*z8^{k}"),
    })
}

/// A term of degree `d` built from degree-one factors.
fn term(d: usize) -> impl Strategy<Value = String> {
    let word = prop::collection::vec(
        prop::sample::select(vec!["u", "v", "(u + v)", "(v - 2*u)"]),
        d,
    );
    (coeff(), word).prop_map(|(c, w)| {
        if w.is_empty() {
            c
        } else {
            format!("{c}*{}", w.join("*"))
        }
    })
}

/// A homogeneous expression with explicit signs.
fn expression() -> impl Strategy<Value = String> {
    (0usize..5).prop_flat_map(|d| {
        prop::collection::vec((prop::bool::ANY, term(d)), 1..5).prop_map(|ts| {
            ts.iter()
                .map(|(neg, t)| format!("{} {t}", if *neg { "-" } else { "+" }))
                .collect::<Vec<_>>()
                .join(" ")
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn parse_print_parse(s in expression()) {
        let alg = e42().alg();
        let e = alg.parse(&s).unwrap();
        let printed = alg.format(&e);
        let again = alg.parse(&printed).unwrap();
        prop_assert_eq!(&again, &e);
        prop_assert_eq!(alg.format(&again), printed);
    }

    #[test]
    fn normalized_form_is_proportional(s in expression()) {
        let alg = e42().alg();
        let e = alg.parse(&s).unwrap();
        prop_assume!(!e.is_zero());
        let shown = poly(alg, &e);
        let back = alg.parse(&shown).unwrap();
        prop_assert!(back.proportional(&e), "{} vs {}", shown, s);
        prop_assert_eq!(poly(alg, &back), shown);
    }
}

#[test]
fn relation_normal_form() {
    let alg = e42().alg();
    assert_eq!(alg.parse("v*u").unwrap(), alg.parse("i*u*v").unwrap());
    assert_eq!(
        poly(alg, &alg.parse("u*v*(u^2 - v^2)").unwrap()),
        "u^3*v + u*v^3"
    );
}

#[test]
fn malformed_expression_fails_at_offset_zero() {
    let err = e42().alg().presentation().parse_poly("^2x").unwrap_err();
    assert_eq!(err.offset, 0);
}
