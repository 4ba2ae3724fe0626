//! Conjugation of pure generators by half twists.
//!
//! `H_k` swaps `p_k` and `p_{k+1}`; conjugating a pure generator by it
//! relabels the generator's marked points, picking up a conjugation by
//! `A(k+1,k) = H_k^2` when the band has to pass around the twist.

use crate::params::Point;
use crate::word::{Gen, Power, Word};

fn single(g: Gen) -> Word {
    Word::single(g, 1)
}

fn conj_by(x: Gen, inner: Gen, positive: bool) -> Word {
    let e = if positive { 1 } else { -1 };
    Word::from_letters([Power::new(x, e), Power::new(inner, 1), Power::new(x, -e)])
}

/// `H_k X H_k^-1` for a pure generator `X`.
pub fn h_conj_positive(k: u32, x: Gen) -> Word {
    let b = x.level().expect("pure generator");
    let a = x.lower_point().expect("pure generator");
    let twist = Gen::A(k + 1, k);
    if b == k + 1 && a == Point::Marked(k) {
        single(x)
    } else if b == k + 1 {
        single(Gen::pure(k, a))
    } else if b == k {
        conj_by(twist, Gen::pure(k + 1, a), true)
    } else if b > k + 1 && a == Point::Marked(k + 1) {
        single(Gen::A(b, k))
    } else if b > k + 1 && a == Point::Marked(k) {
        conj_by(twist, Gen::A(b, k + 1), true)
    } else {
        single(x)
    }
}

/// `H_k^-1 X H_k` for a pure generator `X`.
pub fn h_conj_negative(k: u32, x: Gen) -> Word {
    let b = x.level().expect("pure generator");
    let a = x.lower_point().expect("pure generator");
    let twist = Gen::A(k + 1, k);
    if b == k + 1 && a == Point::Marked(k) {
        single(x)
    } else if b == k {
        single(Gen::pure(k + 1, a))
    } else if b == k + 1 {
        conj_by(twist, Gen::pure(k, a), false)
    } else if b > k + 1 && a == Point::Marked(k) {
        single(Gen::A(b, k + 1))
    } else if b > k + 1 && a == Point::Marked(k + 1) {
        conj_by(twist, Gen::A(b, k), false)
    } else {
        single(x)
    }
}

/// `H_k^{±1} w H_k^{∓1}` for a word `w` over pure generators.
pub fn h_conj_word(k: u32, positive: bool, w: &Word) -> Word {
    w.substitute(|x| {
        if positive {
            h_conj_positive(k, x)
        } else {
            h_conj_negative(k, x)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn b_letter_moves_up_and_down() {
        // H_k^-1 B(k,λ) H_k = B(k+1,λ) is the defining abbreviation
        assert_eq!(h_conj_negative(2, Gen::B(2, 1)), single(Gen::B(3, 1)));
        assert_eq!(
            h_conj_positive(2, Gen::B(2, 1)),
            "A(3,2) B(3,1) A(3,2)^-1".parse().unwrap()
        );
    }

    #[test]
    fn positive_and_negative_rules_are_inverse() {
        let gens = [
            Gen::A(2, 1),
            Gen::A(3, 1),
            Gen::A(3, 2),
            Gen::A(4, 2),
            Gen::A(4, 3),
            Gen::A(5, 3),
            Gen::B(2, 1),
            Gen::B(3, 2),
            Gen::C(4, 1),
        ];
        for k in 1..=4 {
            for &x in &gens {
                let w = single(x);
                let there = h_conj_word(k, true, &w);
                assert_eq!(h_conj_word(k, false, &there), w, "k={k} x={x}");
            }
        }
    }
}
