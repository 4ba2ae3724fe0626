//! Independent word-problem oracle.
//!
//! The group embeds in the braid group on `M = N + L + n` strands of the
//! quotient disk, with cone points, punctures and marked points laid out
//! along the real axis. Triviality is then decided by the Artin action of
//! the braid group on the free group `F_M`, which is faithful.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::params::{GroupParams, Point};
use crate::presentation::{expand_abbrev, expand_word, full_presentation, pure_presentation};
use crate::word::{FreeWord, Gen, Power, Word};

/// Strand numbering of the distinguished points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrandLayout {
    n: u32,
    l: u32,
    cones: u32,
}

impl StrandLayout {
    pub fn new(params: &GroupParams) -> Self {
        Self {
            n: params.n(),
            l: params.punctures(),
            cones: params.cones(),
        }
    }

    pub fn strands(&self) -> u32 {
        self.n + self.l + self.cones
    }

    /// `c_ν -> N - ν + 1`, `r_λ -> N + L - λ + 1`, `p_j -> N + L + j`.
    pub fn strand(&self, point: Point) -> u32 {
        match point {
            Point::Cone(nu) => self.cones - nu + 1,
            Point::Puncture(lambda) => self.cones + self.l - lambda + 1,
            Point::Marked(j) => self.cones + self.l + j,
        }
    }
}

/// Word in the Artin generators `σ_1 .. σ_{M-1}`.
pub type BraidWord = FreeWord<u32>;

pub fn format_braid(b: &BraidWord) -> String {
    b.letters()
        .iter()
        .map(|p| {
            if p.exp == 1 {
                format!("s{}", p.gen)
            } else {
                format!("s{}^{}", p.gen, p.exp)
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// Which way the conjugating arc of a band generator passes the strands
/// between its two ends.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BandSide {
    /// `(σ_{t-1}^-1 .. σ_{s+1}^-1) σ_s^2 (σ_{s+1} .. σ_{t-1})`
    Below,
    /// `(σ_{t-1} .. σ_{s+1}) σ_s^2 (σ_{s+1}^-1 .. σ_{t-1}^-1)`
    Above,
}

impl BandSide {
    pub fn flipped(self) -> Self {
        match self {
            BandSide::Below => BandSide::Above,
            BandSide::Above => BandSide::Below,
        }
    }
}

impl fmt::Display for BandSide {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BandSide::Below => "below",
            BandSide::Above => "above",
        })
    }
}

/// Full twist of strand `t` around strand `s < t`.
pub fn band(s: u32, t: u32, side: BandSide) -> BraidWord {
    let sign = match side {
        BandSide::Below => -1,
        BandSide::Above => 1,
    };
    let mut b = BraidWord::new();
    for i in (s + 1..t).rev() {
        b.push_gen(i, sign);
    }
    b.push_gen(s, 2);
    for i in s + 1..t {
        b.push_gen(i, -sign);
    }
    b
}

/// Embedding of the `H`, `T`, `U` generators into the braid group.
#[derive(Debug, Clone)]
pub struct BraidEmbedding {
    layout: StrandLayout,
    side: BandSide,
}

impl BraidEmbedding {
    pub fn new(params: &GroupParams, side: BandSide) -> Self {
        Self {
            layout: StrandLayout::new(params),
            side,
        }
    }

    pub fn side(&self) -> BandSide {
        self.side
    }

    pub fn layout(&self) -> &StrandLayout {
        &self.layout
    }

    /// `H(j) -> σ_{N+L+j}`; `T(λ)`, `U(ν)` go to the band of strand `p_1`
    /// around `r_λ`, resp. `c_ν`.
    pub fn embed_generator(&self, gen: Gen) -> Result<BraidWord> {
        let p1 = self.layout.strand(Point::Marked(1));
        Ok(match gen {
            Gen::H(j) => BraidWord::single(self.layout.strand(Point::Marked(j)), 1),
            Gen::T(lambda) => band(self.layout.strand(Point::Puncture(lambda)), p1, self.side),
            Gen::U(nu) => band(self.layout.strand(Point::Cone(nu)), p1, self.side),
            other => {
                return Err(Error::WrongAlphabet {
                    op: "embed_generator",
                    letter: other.to_string(),
                })
            }
        })
    }

    /// Embeds a word; pure letters are expanded first.
    pub fn embed_word(&self, w: &Word) -> BraidWord {
        expand_word(w).substitute(|g| self.embed_generator(g).expect("expanded word"))
    }

    pub fn is_trivial(&self, w: &Word) -> bool {
        artin_is_trivial(&self.embed_word(w), self.layout.strands())
    }
}

/// Image of one free generator `x_k` under `σ_i^{±1}`.
fn sigma_image(i: u32, positive: bool, k: u32) -> FreeWord<u32> {
    let w = |v: &[(u32, i64)]| FreeWord::from_letters(v.iter().map(|&(g, e)| Power::new(g, e)));
    match (positive, k) {
        (true, k) if k == i => w(&[(i, 1), (i + 1, 1), (i, -1)]),
        (true, k) if k == i + 1 => w(&[(i, 1)]),
        (false, k) if k == i => w(&[(i + 1, 1)]),
        (false, k) if k == i + 1 => w(&[(i + 1, -1), (i, 1), (i + 1, 1)]),
        (_, k) => w(&[(k, 1)]),
    }
}

/// Image of the basis element `x_k` of `F_strands` under the Artin action
/// of `b`: `σ_i` sends `x_i -> x_i x_{i+1} x_i^-1`, `x_{i+1} -> x_i`.
pub fn artin_image(b: &BraidWord, k: u32) -> FreeWord<u32> {
    // b = b_1 .. b_m acts as the composite b_1 ∘ .. ∘ b_m, so the rightmost
    // letter is applied to x_k first.
    let mut w = FreeWord::single(k, 1);
    for p in b.letters().iter().rev() {
        for _ in 0..p.exp.unsigned_abs() {
            w = w.substitute(|x| sigma_image(p.gen, p.exp > 0, x));
        }
    }
    w
}

/// Letters an Artin image may reach before triviality is decided through
/// the linear representation instead.
const IMAGE_BUDGET: u64 = 1 << 16;

fn artin_image_bounded(b: &BraidWord, k: u32, budget: u64) -> Option<FreeWord<u32>> {
    let mut w = FreeWord::single(k, 1);
    for p in b.letters().iter().rev() {
        for _ in 0..p.exp.unsigned_abs() {
            w = w.substitute(|x| sigma_image(p.gen, p.exp > 0, x));
            if w.syllable_length() > budget {
                return None;
            }
        }
    }
    Some(w)
}

/// Whether `b` acts trivially on the free group of rank `strands`.
///
/// Reduced images can grow exponentially with the length of `b`. Once an
/// image passes a budget the question is settled by the left normal form
/// of `b` instead, which is polynomial.
pub fn artin_is_trivial(b: &BraidWord, strands: u32) -> bool {
    let b = b.free_reduce();
    if b.is_empty() {
        return true;
    }
    for k in 1..=strands {
        match artin_image_bounded(&b, k, IMAGE_BUDGET) {
            Some(img) => {
                if img.len() != 1 || img.letters()[0] != Power::new(k, 1) {
                    return false;
                }
            }
            None => return garside_is_trivial(&b, strands),
        }
    }
    true
}

/// Permutation braid, stored as the images of `0..strands`. A positive
/// word `σ_{i1} .. σ_{ir}` corresponds to `s_{i1} ∘ .. ∘ s_{ir}`.
type Simple = Vec<u8>;

/// `{i : p = p' σ_i}`, i.e. `p(i) > p(i + 1)`.
fn finishes_with(p: &Simple, i: usize) -> bool {
    p[i] > p[i + 1]
}

/// `{i : p = σ_i p'}`: the value `i` sits right of the value `i + 1`.
fn starts_with(p: &Simple, i: usize) -> bool {
    let at = |v: usize| {
        p.iter()
            .position(|&x| x as usize == v)
            .expect("permutation")
    };
    at(i) > at(i + 1)
}

/// Decides triviality from the left normal form `Δ^k A_1 .. A_r`.
pub fn garside_is_trivial(b: &BraidWord, strands: u32) -> bool {
    let n = strands as usize;
    if n < 2 {
        return true;
    }
    let identity: Simple = (0..n as u8).collect();
    let delta: Simple = (0..n as u8).rev().collect();
    let flip = |p: &Simple| -> Simple { p.iter().rev().map(|&x| (n - 1) as u8 - x).collect() };

    // b = Δ^k F_1 .. F_r; σ_i^-1 = Δ^-1 (Δ σ_i^-1) and F Δ^-1 = Δ^-1 τ(F).
    let mut k: i64 = 0;
    let mut factors: Vec<Simple> = Vec::new();
    for p in b.letters() {
        let i = p.gen as usize - 1;
        for _ in 0..p.exp.unsigned_abs() {
            let mut s = identity.clone();
            if p.exp > 0 {
                s.swap(i, i + 1);
            } else {
                for f in factors.iter_mut() {
                    *f = flip(f);
                }
                k -= 1;
                s = delta.clone();
                s.swap(i, i + 1);
            }
            factors.push(s);
        }
    }

    // make every adjacent pair left-weighted
    let mut changed = true;
    while changed {
        changed = false;
        for j in 0..factors.len().saturating_sub(1) {
            let (head, tail) = factors.split_at_mut(j + 1);
            let (a, c) = (&mut head[j], &mut tail[0]);
            let mut i = 0;
            while i + 1 < n {
                if starts_with(c, i) && !finishes_with(a, i) {
                    a.swap(i, i + 1);
                    let (x, y) = (
                        c.iter()
                            .position(|&v| v as usize == i)
                            .expect("permutation"),
                        c.iter()
                            .position(|&v| v as usize == i + 1)
                            .expect("permutation"),
                    );
                    c.swap(x, y);
                    changed = true;
                    i = 0;
                } else {
                    i += 1;
                }
            }
        }
    }
    factors.retain(|f| *f != identity);
    let leading = factors.iter().take_while(|f| **f == delta).count();
    k + leading as i64 == 0 && factors.len() == leading
}

/// Oracle decision for a word over `H`, `T`, `U` (pure letters are expanded).
pub fn oracle_is_trivial(w: &Word, params: &GroupParams) -> Result<bool> {
    w.check(params)?;
    Ok(BraidEmbedding::new(params, BandSide::Below).is_trivial(w))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FailedRelator {
    pub family: String,
    pub relator: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EmbeddingReport {
    /// Convention that passed, if any.
    pub side: Option<BandSide>,
    pub relators_checked: usize,
    pub abbreviations_checked: usize,
    /// Failures of each convention tried, in order.
    pub attempts: Vec<(BandSide, Vec<FailedRelator>)>,
}

/// Checks one convention: every defining relator of both presentations
/// must map to a trivial braid, and each `A(j,i)` must map to the band of
/// `p_j` around `p_i`.
pub fn check_embedding(params: &GroupParams, side: BandSide) -> (usize, usize, Vec<FailedRelator>) {
    let emb = BraidEmbedding::new(params, side);
    let strands = emb.layout.strands();
    let mut failures = Vec::new();
    let mut relators = 0;
    let pres = std::iter::once(pure_presentation(params)).chain(full_presentation(params).ok());
    for p in pres {
        for r in &p.relators {
            relators += 1;
            if !emb.is_trivial(&r.word) {
                failures.push(FailedRelator {
                    family: format!("{:?}-{}", p.kind, r.family).to_lowercase(),
                    relator: r.word.to_string(),
                });
            }
        }
    }
    let mut abbrevs = 0;
    for j in 2..=params.n() {
        for i in 1..j {
            abbrevs += 1;
            let expanded = expand_abbrev(Power::new(Gen::A(j, i), 1)).expect("pure letter");
            let via_h = emb.embed_word(&expanded);
            let s = emb.layout.strand(Point::Marked(i));
            let t = emb.layout.strand(Point::Marked(j));
            let diff = via_h.concat(&band(s, t, side).inverse());
            if !artin_is_trivial(&diff, strands) {
                failures.push(FailedRelator {
                    family: "abbreviation".into(),
                    relator: format!("A({j},{i})"),
                });
            }
        }
    }
    (relators, abbrevs, failures)
}

/// Validates the embedding, flipping the band convention once on failure.
pub fn validate_embedding(params: &GroupParams) -> Result<EmbeddingReport> {
    validate_embedding_from(params, BandSide::Below)
}

pub fn validate_embedding_from(params: &GroupParams, first: BandSide) -> Result<EmbeddingReport> {
    let mut attempts = Vec::new();
    let mut side = first;
    for _ in 0..2 {
        let (relators_checked, abbreviations_checked, failures) = check_embedding(params, side);
        let ok = failures.is_empty();
        attempts.push((side, failures));
        if ok {
            return Ok(EmbeddingReport {
                side: Some(side),
                relators_checked,
                abbreviations_checked,
                attempts,
            });
        }
        side = side.flipped();
    }
    let first_failure = &attempts[0].1[0];
    Err(Error::EmbeddingInvalid {
        family: first_failure.family.clone(),
        relator: first_failure.relator.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(n: u32, l: u32, cones: u32) -> GroupParams {
        GroupParams::with_default_orders(n, l, cones)
    }

    #[test]
    fn embeds_small_generators() {
        let e = BraidEmbedding::new(&params(2, 0, 0), BandSide::Below);
        assert_eq!(format_braid(&e.embed_generator(Gen::H(1)).unwrap()), "s1");
        let e = BraidEmbedding::new(&params(1, 1, 0), BandSide::Below);
        assert_eq!(format_braid(&e.embed_generator(Gen::T(1)).unwrap()), "s1^2");
        let e = BraidEmbedding::new(&params(1, 0, 1), BandSide::Below);
        assert_eq!(format_braid(&e.embed_generator(Gen::U(1)).unwrap()), "s1^2");
        assert!(e.embed_generator(Gen::B(1, 1)).is_err());
    }

    #[test]
    fn layout_matches_axis_order() {
        let lay = StrandLayout::new(&params(2, 2, 2));
        let strands: Vec<u32> = params(2, 2, 2).points().map(|p| lay.strand(p)).collect();
        assert_eq!(strands, vec![1, 2, 3, 4, 5, 6]);
    }

    #[test]
    fn artin_basics() {
        let b = |s: &str| -> BraidWord {
            FreeWord::from_letters(s.split_whitespace().map(|t| {
                let (g, e) = t.split_once('^').unwrap_or((t, "1"));
                Power::new(g[1..].parse().unwrap(), e.parse().unwrap())
            }))
        };
        assert!(artin_is_trivial(
            &BraidWord::from_raw(vec![Power::new(1, 1), Power::new(1, -1)]),
            2
        ));
        assert!(!artin_is_trivial(&b("s1"), 2));
        assert_eq!(artin_image(&b("s1"), 1).letters().len(), 3);
        assert!(artin_is_trivial(&b("s1 s2 s1 s2^-1 s1^-1 s2^-1"), 3));
        assert!(!artin_is_trivial(&b("s1 s2 s1 s1^-1 s2^-1 s2^-1"), 3));
        assert!(artin_is_trivial(&b("s1 s3 s1^-1 s3^-1"), 4));
    }

    #[test]
    fn oracle_on_h1() {
        let p = params(2, 0, 0);
        assert!(!oracle_is_trivial(&"H1".parse().unwrap(), &p).unwrap());
        assert!(oracle_is_trivial(&"H1 H1^-1".parse().unwrap(), &p).unwrap());
        assert!(!oracle_is_trivial(&"H1^2".parse().unwrap(), &p).unwrap());
    }

    #[test]
    fn validator_passes_below() {
        let r = validate_embedding(&params(3, 1, 2)).unwrap();
        assert_eq!(r.side, Some(BandSide::Below));
        assert_eq!(r.attempts.len(), 1);
        let r = validate_embedding(&params(1, 1, 1)).unwrap();
        assert_eq!(r.side, Some(BandSide::Below));
    }

    #[test]
    fn validator_flips_from_wrong_side() {
        let r = validate_embedding_from(&params(3, 1, 2), BandSide::Above).unwrap();
        assert_eq!(r.side, Some(BandSide::Below));
        assert_eq!(r.attempts.len(), 2);
        let failed = &r.attempts[0].1;
        assert!(failed
            .iter()
            .any(|f| f.relator == "T1 H1^-1 U1 H1 T1^-1 H1^-1 U1^-1 H1"));
    }

    fn braid(v: &[(u32, i64)]) -> BraidWord {
        FreeWord::from_letters(v.iter().map(|&(g, e)| Power::new(g, e)))
    }

    fn word_is_trivial(b: &BraidWord, strands: u32) -> bool {
        (1..=strands).all(|k| artin_image(b, k) == FreeWord::single(k, 1))
    }

    proptest::proptest! {
        #[test]
        fn normal_form_route_matches_images(
            v in proptest::collection::vec((1u32..4, proptest::prop_oneof![proptest::strategy::Just(-1i64), proptest::strategy::Just(1)]), 0..14)
        ) {
            let b = braid(&v).free_reduce();
            proptest::prop_assert_eq!(garside_is_trivial(&b, 4), word_is_trivial(&b, 4));
            let closed = b.concat(&braid(&[(2, 1), (3, 1), (2, 1), (3, -1), (2, -1), (3, -1)])).concat(&b.inverse());
            proptest::prop_assert!(garside_is_trivial(&closed, 4));
        }
    }

    #[test]
    fn long_braids_are_decided() {
        // a pseudo-Anosov braid: its images grow far past the budget
        let mut b = BraidWord::new();
        for _ in 0..60 {
            b.append(&braid(&[(1, 1), (2, -1), (3, 1), (4, -1)]));
        }
        assert!(!artin_is_trivial(&b, 5));
        let mut c = b.concat(&braid(&[(1, 1), (3, 1), (1, -1), (3, -1)]));
        c.append(&b.inverse());
        assert!(artin_is_trivial(&c, 5));
        c.push(Power::new(2, 2));
        assert!(!artin_is_trivial(&c, 5));
    }

    #[test]
    fn routes_agree_on_twists_and_commutators() {
        // Δ² on 4 strands is central and nontrivial
        let delta: Vec<(u32, i64)> = vec![(1, 1), (2, 1), (3, 1), (1, 1), (2, 1), (1, 1)];
        let twist = braid(&delta).pow(2);
        assert!(!garside_is_trivial(&twist, 4));
        assert!(!word_is_trivial(&twist, 4));
        let conj = braid(&[(2, 1), (1, -1)]);
        let w = conj
            .concat(&twist)
            .concat(&conj.inverse())
            .concat(&twist.inverse());
        assert!(garside_is_trivial(&w, 4));
        let far = braid(&[(1, 1), (3, -1), (1, -1), (3, 1)]);
        assert!(garside_is_trivial(&far, 4));
        let near = braid(&[(1, 1), (2, -1), (1, -1), (2, 1)]);
        assert!(!garside_is_trivial(&near, 4));
        assert!(!garside_is_trivial(&braid(&[(1, -2)]), 2));
    }
}
