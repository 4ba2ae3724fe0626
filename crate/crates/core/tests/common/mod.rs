//! Independent oracles shared by the integration and acceptance tests.
#![allow(dead_code)]

use orbimap::presentation::full_generators;
use orbimap::word::Power;
use orbimap::{Gen, GroupParams, Word};
use proptest::prelude::*;

pub fn params(n: u32, l: u32, cones: u32) -> GroupParams {
    GroupParams::with_default_orders(n, l, cones)
}

pub fn binom(n: u32, k: u32) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1usize, |acc, i| acc * (n - i) as usize / (i + 1) as usize)
}

/// Closed-form relator count of the pure presentation.
pub fn pure_relator_count(n: u32, l: u32, c: u32) -> usize {
    let lc = (l + c) as usize;
    3 * binom(n, 4)
        + 3 * lc * binom(n, 3)
        + 2 * binom(n, 2) * (binom(l, 2) + (l * c) as usize + binom(c, 2))
        + 2 * binom(n, 3)
        + 2 * binom(n, 2) * lc
}

/// Closed-form relator count of the full presentation, `n >= 1`.
pub fn full_relator_count(n: u32, l: u32, c: u32) -> usize {
    let lc = (l + c) as usize;
    let m = n.saturating_sub(2);
    let tail = if n >= 2 {
        lc + binom(l, 2) + binom(c, 2) + (l * c) as usize
    } else {
        0
    };
    m as usize + binom(m, 2) + m as usize * lc + tail
}

/// Free reduction by cancelling one unit letter at a time on a stack.
pub fn naive_reduce(w: &Word) -> Vec<(Gen, i64)> {
    let mut stack: Vec<(Gen, i64)> = Vec::new();
    for p in w.letters() {
        let unit = p.exp.signum();
        for _ in 0..p.exp.abs() {
            match stack.last() {
                Some(&(g, e)) if g == p.gen && e == -unit => {
                    stack.pop();
                }
                _ => stack.push((p.gen, unit)),
            }
        }
    }
    stack
}

/// Expands a word into unit letters.
pub fn units(w: &Word) -> Vec<(Gen, i64)> {
    w.letters()
        .iter()
        .flat_map(|p| std::iter::repeat_n((p.gen, p.exp.signum()), p.exp.unsigned_abs() as usize))
        .collect()
}

/// Image of `w` in the permutation group, acting on an array of labels.
pub fn naive_perm(w: &Word, n: u32) -> Vec<u32> {
    let mut images: Vec<u32> = (1..=n).collect();
    for p in w.letters() {
        if let Gen::H(j) = p.gen {
            if p.exp % 2 != 0 {
                images.swap(j as usize - 1, j as usize);
            }
        }
    }
    images
}

/// `Z/2 * Z/3` sits faithfully in `PSL(2, Z)` via `g1 -> S`, `g2 -> ST`.
/// Returns the matrix normalised up to sign.
pub fn psl_image(raw: &[(u32, i64)]) -> [i64; 4] {
    let s = [0, -1, 1, 0];
    let st = [0, -1, 1, 1];
    let mul = |a: [i64; 4], b: [i64; 4]| {
        [
            a[0] * b[0] + a[1] * b[2],
            a[0] * b[1] + a[1] * b[3],
            a[2] * b[0] + a[3] * b[2],
            a[2] * b[1] + a[3] * b[3],
        ]
    };
    let mut m = [1, 0, 0, 1];
    for &(f, e) in raw {
        let g = if f == 1 { s } else { st };
        let order = if f == 1 { 2 } else { 3 };
        for _ in 0..e.rem_euclid(order) {
            m = mul(m, g);
        }
    }
    let first = m.iter().copied().find(|&x| x != 0).unwrap_or(1);
    if first < 0 {
        m.map(|x| -x)
    } else {
        m
    }
}

/// Strategy for words of at most `max` letters over `H`, `T`, `U`.
pub fn braid_word(p: &GroupParams, max: usize) -> BoxedStrategy<Word> {
    letters_over(full_generators(p), max)
}

pub fn letters_over(gens: Vec<Gen>, max: usize) -> BoxedStrategy<Word> {
    if gens.is_empty() {
        return Just(Word::new()).boxed();
    }
    let k = gens.len();
    prop::collection::vec(
        (0..k, prop_oneof![Just(-2i64), Just(-1), Just(1), Just(2)]),
        0..=max,
    )
    .prop_map(move |v| v.into_iter().map(|(i, e)| Power::new(gens[i], e)).collect())
    .boxed()
}
