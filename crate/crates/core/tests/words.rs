mod common;

use common::{letters_over, naive_reduce, params, units};
use orbimap::presentation::{full_generators, pure_generators};
use orbimap::{free_reduce, parse_word, Error, Gen, Word};
use proptest::prelude::*;

fn all_gens() -> Vec<Gen> {
    let p = params(4, 2, 2);
    let mut g = full_generators(&p);
    g.extend(pure_generators(&p));
    g
}

proptest! {
    #[test]
    fn print_then_parse_is_identity(w in letters_over(all_gens(), 25)) {
        let p = params(4, 2, 2);
        let back = parse_word(&w.to_string(), &p).unwrap();
        prop_assert_eq!(back, w);
    }

    #[test]
    fn free_reduce_matches_unit_cancellation(w in letters_over(all_gens(), 40)) {
        let r = free_reduce(&w);
        prop_assert_eq!(units(&r), naive_reduce(&w));
        prop_assert!(r.is_reduced());
        prop_assert_eq!(free_reduce(&r), r);
    }

    #[test]
    fn inverse_reverses_products(
        u in letters_over(all_gens(), 15),
        v in letters_over(all_gens(), 15),
    ) {
        prop_assert_eq!(u.concat(&v).inverse(), v.inverse().concat(&u.inverse()));
        prop_assert!(u.concat(&u.inverse()).free_reduce().is_empty());
        prop_assert_eq!(u.inverse().inverse(), u);
    }
}

#[test]
fn syntax_errors_carry_positions() {
    let p = params(3, 1, 1);
    for (text, pos) in [
        ("H1 H", 4),
        ("H1 X2", 3),
        ("H01", 1),
        ("H1^-0", 4),
        ("H1H2", 2),
    ] {
        match parse_word(text, &p) {
            Err(Error::Syntax { pos: got, .. }) => assert_eq!(got, pos, "{text}"),
            other => panic!("{text}: {other:?}"),
        }
    }
}

#[test]
fn indices_are_checked_against_params() {
    let p = params(3, 1, 1);
    for text in ["H3", "T2", "U2", "A(2,2)", "A(4,1)", "B(1,2)", "C(0,1)"] {
        assert!(
            matches!(parse_word(text, &p), Err(Error::IndexOutOfRange { .. })),
            "{text}"
        );
    }
    assert!(parse_word("T1", &params(0, 1, 0)).is_err());
}

#[test]
fn powers_merge_when_parsed() {
    let p = params(2, 1, 0);
    let w = parse_word("H1 H1^2 H1^-3 T1", &p).unwrap();
    assert_eq!(w, Word::single(Gen::T(1), 1));
}
