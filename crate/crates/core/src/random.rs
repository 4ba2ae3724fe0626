//! Seeded random words for tests, benchmarks and the `verify` command.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::combing::level_generators;
use crate::params::GroupParams;
use crate::perm::transversal_lift;
use crate::presentation::{full_generators, full_presentation, pure_generators};
use crate::word::{Gen, Power, Word};

fn random_over<R: Rng>(gens: &[Gen], len: usize, rng: &mut R) -> Word {
    let mut w = Word::new();
    if gens.is_empty() {
        return w;
    }
    for _ in 0..len {
        let g = *gens.choose(rng).expect("nonempty");
        let e = if rng.gen_bool(0.5) { 1 } else { -1 };
        w.push(Power::new(g, e));
    }
    w
}

/// Uniform word of exactly `len` letters `g^{±1}` over `H`, `T`, `U`,
/// freely reduced afterwards.
pub fn random_braid_word<R: Rng>(params: &GroupParams, len: usize, rng: &mut R) -> Word {
    random_over(&full_generators(params), len, rng)
}

/// Uniform word over the pure generators.
pub fn random_pure_word<R: Rng>(params: &GroupParams, len: usize, rng: &mut R) -> Word {
    random_over(&pure_generators(params), len, rng)
}

/// Uniform word over the level-`n` free generators.
pub fn random_free_word<R: Rng>(params: &GroupParams, len: usize, rng: &mut R) -> Word {
    random_over(&level_generators(params, params.n()), len, rng)
}

/// Test word over `H`, `T`, `U` with at most `max_len` letters, drawn from
/// a mix that hits both answers of the word problem: uniform words, words
/// closed up to trivial permutation, and conjugated relators that may carry
/// one extra letter.
pub fn mixed_test_word<R: Rng>(params: &GroupParams, max_len: usize, rng: &mut R) -> Word {
    let gens = full_generators(params);
    let relators: Vec<Word> = full_presentation(params)
        .map(|p| p.relators.into_iter().map(|r| r.word).collect())
        .unwrap_or_default();
    match rng.gen_range(0..4) {
        0 => random_over(&gens, rng.gen_range(0..=max_len), rng),
        1 => {
            let lift_budget = (params.n() as usize * params.n().saturating_sub(1) as usize) / 2;
            let len = rng.gen_range(0..=max_len.saturating_sub(lift_budget));
            let w = random_over(&gens, len, rng);
            let perm = crate::perm::perm_image(&w, params.n()).expect("braid word");
            w.concat(&transversal_lift(&perm).inverse())
        }
        kind => {
            let r = match relators.choose(rng) {
                Some(r) if (r.syllable_length() as usize) < max_len => r,
                _ => return random_over(&gens, rng.gen_range(0..=max_len), rng),
            };
            let r = if rng.gen_bool(0.5) {
                r.clone()
            } else {
                r.inverse()
            };
            let room = (max_len - r.syllable_length() as usize - 1) / 2;
            let u = random_over(&gens, rng.gen_range(0..=room), rng);
            // u r u^-1, optionally spoiled by one letter
            let mut w = u.concat(&r).concat(&u.inverse());
            if kind == 3 && !gens.is_empty() {
                w = w.concat(&random_over(&gens, 1, rng));
            }
            w
        }
    }
}
