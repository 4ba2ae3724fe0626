//! Consistency suites run over grids of parameters: relator soundness,
//! agreement with the braid oracle, and well-definedness of the action.

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use rand::rngs::StdRng;
use rand::SeedableRng;
use rayon::prelude::*;
use serde::Serialize;

use crate::combing::{level_generators, Engine};
use crate::error::{Error, Result};
use crate::oracle::BandSide;
use crate::oracle::BraidEmbedding;
use crate::params::GroupParams;
use crate::presentation::{full_presentation, pure_presentation};
use crate::random::mixed_test_word;
use crate::word::Word;

/// Ranges of `(n, L, N)` to sweep, written `n=0..4,L=0..2,N=0..2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grid {
    pub n: RangeInclusive<u32>,
    pub punctures: RangeInclusive<u32>,
    pub cones: RangeInclusive<u32>,
}

impl Grid {
    pub fn tuples(&self) -> Vec<(u32, u32, u32)> {
        let mut out = Vec::new();
        for n in self.n.clone() {
            for l in self.punctures.clone() {
                for c in self.cones.clone() {
                    out.push((n, l, c));
                }
            }
        }
        out
    }
}

impl FromStr for Grid {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: String| Error::Syntax { pos: 0, msg };
        let mut grid = Grid {
            n: 0..=0,
            punctures: 0..=0,
            cones: 0..=0,
        };
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (key, range) = part
                .split_once('=')
                .ok_or_else(|| bad(format!("expected key=range in '{part}'")))?;
            let parse = |x: &str| {
                x.trim()
                    .parse::<u32>()
                    .map_err(|_| bad(format!("bad bound '{x}' in '{part}'")))
            };
            let r = match range.split_once("..") {
                Some((lo, hi)) => parse(lo)?..=parse(hi.trim_start_matches('='))?,
                None => {
                    let v = parse(range)?;
                    v..=v
                }
            };
            match key.trim() {
                "n" => grid.n = r,
                "L" => grid.punctures = r,
                "N" => grid.cones = r,
                other => return Err(bad(format!("unknown key '{other}'"))),
            }
        }
        Ok(grid)
    }
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct TupleReport {
    pub n: u32,
    #[serde(rename = "L")]
    pub l: u32,
    #[serde(rename = "N")]
    pub cones: u32,
    pub relators: usize,
    /// Relators the combing engine did not find trivial.
    pub relator_failures: Vec<String>,
    /// Relators the oracle did not find trivial.
    pub oracle_relator_failures: Vec<String>,
    pub samples: usize,
    pub disagreements: Vec<String>,
    pub trivial_samples: usize,
    pub blowups: usize,
    pub action_checks: usize,
    pub action_failures: Vec<String>,
}

impl TupleReport {
    pub fn passed(&self) -> bool {
        self.relator_failures.is_empty()
            && self.oracle_relator_failures.is_empty()
            && self.disagreements.is_empty()
            && self.blowups == 0
            && self.action_failures.is_empty()
    }
}

impl fmt::Display for TupleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} n={} L={} N={}: relators {}/{} engine, {}/{} oracle; samples {} ({} trivial, {} disagree, {} blowups); action {}/{}",
            if self.passed() { "PASS" } else { "FAIL" },
            self.n,
            self.l,
            self.cones,
            self.relators - self.relator_failures.len(),
            self.relators,
            self.relators - self.oracle_relator_failures.len(),
            self.relators,
            self.samples,
            self.trivial_samples,
            self.disagreements.len(),
            self.blowups,
            self.action_checks - self.action_failures.len(),
            self.action_checks,
        )
    }
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    pub samples: usize,
    pub max_len: usize,
    pub seed: u64,
    pub cap: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            samples: 200,
            max_len: 30,
            seed: 0,
            cap: crate::combing::DEFAULT_SYLLABLE_CAP,
        }
    }
}

/// Every relator of both presentations, with its family tag.
pub fn all_relators(params: &GroupParams) -> Vec<(String, Word)> {
    let mut out: Vec<(String, Word)> = pure_presentation(params)
        .relators
        .into_iter()
        .map(|r| (format!("pure-{}", r.family), r.word))
        .collect();
    if let Ok(full) = full_presentation(params) {
        out.extend(
            full.relators
                .into_iter()
                .map(|r| (format!("full-{}", r.family), r.word)),
        );
    }
    out
}

/// Relators the engine fails to recognise as trivial.
pub fn relator_failures(engine: &Engine) -> (usize, Vec<String>) {
    let rels = all_relators(engine.params());
    let failures = rels
        .iter()
        .filter(|(_, w)| !matches!(engine.is_trivial(w), Ok(true)))
        .map(|(fam, w)| format!("[{fam}] {w}"))
        .collect();
    (rels.len(), failures)
}

/// Relators the braid oracle fails to recognise as trivial.
pub fn oracle_relator_failures(params: &GroupParams) -> Vec<String> {
    let emb = BraidEmbedding::new(params, BandSide::Below);
    all_relators(params)
        .iter()
        .filter(|(_, w)| !emb.is_trivial(w))
        .map(|(fam, w)| format!("[{fam}] {w}"))
        .collect()
}

/// Checks that each relator `r` of the pure presentation with `k - 1`
/// marked points fixes every level-`k` generator under the conjugation
/// action, for `k = 2..=n`.
pub fn action_failures(engine: &Engine) -> (usize, Vec<String>) {
    let params = engine.params();
    let table = engine.table();
    let mut checks = 0;
    let mut failures = Vec::new();
    for k in 2..=params.n() {
        let lower = GroupParams::new(k - 1, params.punctures(), params.cone_orders().to_vec())
            .expect("valid params");
        for r in pure_presentation(&lower).relators {
            for x in level_generators(params, k) {
                checks += 1;
                let mut img = Word::single(x, 1);
                for letter in r.word.letters().iter().rev() {
                    img = table.act_pow(letter.gen, letter.exp, &img);
                }
                if img != Word::single(x, 1) {
                    failures.push(format!("[{}] {} moves {x} to {img}", r.family, r.word));
                }
            }
        }
    }
    (checks, failures)
}

/// Samples random words and compares the engine with the oracle.
pub fn oracle_agreement(
    engine: &Engine,
    samples: usize,
    max_len: usize,
    seed: u64,
) -> (usize, Vec<String>, usize) {
    let params = engine.params();
    let emb = BraidEmbedding::new(params, BandSide::Below);
    let mut rng = StdRng::seed_from_u64(seed);
    let mut disagreements = Vec::new();
    let mut trivial = 0;
    let mut blowups = 0;
    for _ in 0..samples {
        let w = mixed_test_word(params, max_len, &mut rng);
        let oracle = emb.is_trivial(&w);
        match engine.is_trivial(&w) {
            Ok(ans) if ans == oracle => trivial += usize::from(ans),
            Ok(ans) => disagreements.push(format!("{w}: engine {ans}, oracle {oracle}")),
            Err(Error::Blowup { .. }) => blowups += 1,
            Err(e) => disagreements.push(format!("{w}: {e}")),
        }
    }
    (trivial, disagreements, blowups)
}

fn tuple_seed(base: u64, (n, l, c): (u32, u32, u32)) -> u64 {
    base ^ ((n as u64) << 40 | (l as u64) << 20 | c as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15)
}

/// Runs every suite for one parameter tuple; cone orders are `(2, 3, ..)`.
pub fn verify_tuple(tuple: (u32, u32, u32), opts: &VerifyOptions) -> TupleReport {
    let (n, l, c) = tuple;
    let orders = (0..c).map(|i| 2 + i).collect();
    let params = GroupParams::new(n, l, orders).expect("orders >= 2");
    let engine = Engine::new(&params).with_cap(opts.cap);
    let (relators, relator_failures) = relator_failures(&engine);
    let oracle_relator_failures = oracle_relator_failures(&params);
    let (trivial_samples, disagreements, blowups) = oracle_agreement(
        &engine,
        opts.samples,
        opts.max_len,
        tuple_seed(opts.seed, tuple),
    );
    let (action_checks, action_failures) = action_failures(&engine);
    TupleReport {
        n,
        l,
        cones: c,
        relators,
        relator_failures,
        oracle_relator_failures,
        samples: opts.samples,
        disagreements,
        trivial_samples,
        blowups,
        action_checks,
        action_failures,
    }
}

/// Runs [`verify_tuple`] over a grid in parallel; reports come back in
/// grid order.
pub fn verify_grid(grid: &Grid, opts: &VerifyOptions) -> Vec<TupleReport> {
    grid.tuples()
        .into_par_iter()
        .map(|t| verify_tuple(t, opts))
        .collect()
}
