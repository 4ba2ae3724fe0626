//! Word problem and normal forms.
//!
//! A word over `H`, `T`, `U` (or already over `A`, `B`, `C`) is handled in
//! two stages. Its image in `Sym_n` picks the coset; multiplying by the
//! inverse of the coset's canonical lift leaves a pure element, which is
//! rewritten into pure generators by telescoping over prefix cosets. The
//! pure word is then combed level by level through the split extensions
//! `F_{k-1+L+N} ⋊ PMap_{k-1}`, leaving one freely reduced syllable per level.

mod action;
mod hconj;

use std::collections::HashMap;
use std::fmt;
use std::sync::RwLock;

use serde::Serialize;

pub use action::{
    apply_action, conjugation_image, level_generators, level_points, lower_generators, ActionTable,
};
pub use hconj::{h_conj_negative, h_conj_positive, h_conj_word};

use crate::error::{Error, Result};
use crate::params::GroupParams;
use crate::perm::{transversal_lift, Permutation};
use crate::presentation::expand_word;
use crate::word::{Gen, Power, Word};

pub const DEFAULT_SYLLABLE_CAP: usize = 1_000_000;

/// Combed form: `syllables[0]` is level `n`, the last entry level 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct NormalForm {
    pub syllables: Vec<Word>,
    pub coset: Permutation,
}

impl NormalForm {
    pub fn n(&self) -> u32 {
        self.syllables.len() as u32
    }

    /// Syllable of level `k`.
    pub fn level(&self, k: u32) -> &Word {
        &self.syllables[(self.n() - k) as usize]
    }

    pub fn is_trivial(&self) -> bool {
        self.coset.is_identity() && self.syllables.iter().all(Word::is_empty)
    }

    /// Pure part as one word over `A`, `B`, `C`.
    pub fn pure_word(&self) -> Word {
        let mut w = Word::new();
        for s in &self.syllables {
            w.append(s);
        }
        w
    }

    /// A word over `H`, `T`, `U` representing this element: the expanded
    /// pure part followed by the canonical lift of the coset.
    pub fn representative(&self) -> Word {
        let mut w = expand_word(&self.pure_word());
        w.append(&transversal_lift(&self.coset));
        w
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.n();
        for (idx, s) in self.syllables.iter().enumerate() {
            let k = n - idx as u32;
            if s.is_empty() {
                write!(f, "[k={k}: ] ")?;
            } else {
                write!(f, "[k={k}: {s}] ")?;
            }
        }
        write!(f, "| coset: {}", self.coset)
    }
}

/// Word-problem engine for one parameter set. Tables are built once; the
/// conjugation cache is shared behind a lock and only ever gains
/// deterministic entries.
#[derive(Debug)]
pub struct Engine {
    params: GroupParams,
    table: ActionTable,
    cap: usize,
    lift_cache: RwLock<HashMap<(Permutation, Gen), Word>>,
}

impl Engine {
    pub fn new(params: &GroupParams) -> Self {
        Self {
            params: params.clone(),
            table: ActionTable::new(params),
            cap: DEFAULT_SYLLABLE_CAP,
            lift_cache: RwLock::new(HashMap::new()),
        }
    }

    /// Maximum number of runs any intermediate syllable may reach.
    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn params(&self) -> &GroupParams {
        &self.params
    }

    pub fn table(&self) -> &ActionTable {
        &self.table
    }

    /// Coset of a word; pure letters contribute the identity.
    pub fn permutation(&self, w: &Word) -> Permutation {
        let mut p = Permutation::identity(self.params.n());
        for letter in w.letters() {
            if let Gen::H(j) = letter.gen {
                if letter.exp % 2 != 0 {
                    p.then_swap(j);
                }
            }
        }
        p
    }

    /// `τ_π X τ_π^-1` for the canonical lift `τ_π` and a pure generator `X`.
    fn lift_conjugate(&self, perm: &Permutation, x: Gen) -> Word {
        if perm.is_identity() {
            return Word::single(x, 1);
        }
        let key = (perm.clone(), x);
        if let Some(w) = self.lift_cache.read().expect("cache lock").get(&key) {
            return w.clone();
        }
        let mut w = Word::single(x, 1);
        for j in perm.reduced_word().into_iter().rev() {
            w = h_conj_word(j, true, &w);
        }
        self.lift_cache
            .write()
            .expect("cache lock")
            .insert(key, w.clone());
        w
    }

    /// Rewrites a word with trivial permutation into pure generators.
    ///
    /// With prefix cosets `π_0 = 1, π_1, .., π_p = 1` and canonical lifts
    /// `τ_π`, `w = ∏ τ_{π_{i-1}} w_i τ_{π_i}^-1`. Each factor is either
    /// trivial (an `H` letter lengthening or shortening the lift exactly) or
    /// a lift-conjugate of a single pure generator.
    pub fn rewrite_pure(&self, w: &Word) -> Result<Word> {
        w.check(&self.params)?;
        let perm = self.permutation(w);
        if !perm.is_identity() {
            return Err(Error::NotPure(perm));
        }
        let out = self.rewrite_from(w);
        #[cfg(test)]
        {
            let back = expand_word(&out).concat(&w.inverse());
            assert!(
                crate::oracle::oracle_is_trivial(&back, &self.params).unwrap(),
                "rewrite of {w} is not certified"
            );
        }
        Ok(out)
    }

    fn rewrite_from(&self, w: &Word) -> Word {
        let mut perm = Permutation::identity(self.params.n());
        let mut out = Word::new();
        for &letter in w.letters() {
            let pure = match letter.gen {
                Gen::T(lambda) => Some(Gen::B(1, lambda)),
                Gen::U(nu) => Some(Gen::C(1, nu)),
                Gen::H(_) => None,
                g => Some(g),
            };
            if let Some(x) = pure {
                out.append_pow(&self.lift_conjugate(&perm, x), letter.exp);
                continue;
            }
            let Gen::H(j) = letter.gen else {
                unreachable!()
            };
            let twist = Gen::A(j + 1, j);
            for _ in 0..letter.exp.unsigned_abs() {
                let ascends = perm.ascends_at(j);
                if letter.exp > 0 {
                    perm.then_swap(j);
                    if !ascends {
                        // τ_π = τ_{π'} H_j, factor τ_{π'} H_j^2 τ_{π'}^-1
                        out.append(&self.lift_conjugate(&perm, twist));
                    }
                } else {
                    if ascends {
                        // τ_{π'} = τ_π H_j, factor τ_π H_j^-2 τ_π^-1
                        out.append_pow(&self.lift_conjugate(&perm, twist), -1);
                    }
                    perm.then_swap(j);
                }
            }
        }
        out
    }

    /// Splits a pure word of level at most `k` as `u . v` with `u` over
    /// level `k` and `v` below it. Letters are consumed right to left, so
    /// `u` is always the top syllable of the current suffix.
    fn split_level(&self, w: &Word, k: u32) -> Result<(Word, Word)> {
        // holds u^-1, so prepending to u is appending here
        let mut u_inv = Word::new();
        let mut lower_rev: Vec<Power<Gen>> = Vec::new();
        for &letter in w.letters().iter().rev() {
            match letter.gen.level() {
                Some(level) if level == k => u_inv.push(Power::new(letter.gen, -letter.exp)),
                Some(level) if level < k => {
                    if !u_inv.is_empty() {
                        u_inv = self.table.act_pow(letter.gen, letter.exp, &u_inv);
                    }
                    lower_rev.push(letter);
                }
                _ => {
                    return Err(Error::WrongAlphabet {
                        op: "comb",
                        letter: letter.gen.to_string(),
                    })
                }
            }
            if u_inv.len() > self.cap {
                return Err(Error::Blowup {
                    level: k,
                    len: u_inv.len(),
                    cap: self.cap,
                });
            }
        }
        let lower: Word = lower_rev.into_iter().rev().collect();
        Ok((u_inv.inverse(), lower))
    }

    /// Combs a word over `A`, `B`, `C`.
    pub fn comb(&self, w: &Word) -> Result<NormalForm> {
        w.check(&self.params)?;
        if let Some(bad) = w.letters().iter().find(|p| !p.gen.is_pure()) {
            return Err(Error::WrongAlphabet {
                op: "comb",
                letter: bad.gen.to_string(),
            });
        }
        self.comb_unchecked(w, false).map(|(nf, _)| nf)
    }

    /// Combs, optionally stopping at the first nonempty syllable. Returns
    /// whether every syllable came out empty.
    fn comb_unchecked(&self, w: &Word, stop_early: bool) -> Result<(NormalForm, bool)> {
        let n = self.params.n();
        let mut syllables = Vec::with_capacity(n as usize);
        let mut rest = w.free_reduce();
        for k in (1..=n).rev() {
            let (top, lower) = self.split_level(&rest, k)?;
            let empty = top.is_empty();
            syllables.push(top);
            rest = lower;
            if stop_early && !empty {
                syllables.resize(n as usize, Word::new());
                let nf = NormalForm {
                    syllables,
                    coset: Permutation::identity(n),
                };
                return Ok((nf, false));
            }
        }
        debug_assert!(rest.is_empty());
        let trivial = syllables.iter().all(Word::is_empty);
        Ok((
            NormalForm {
                syllables,
                coset: Permutation::identity(n),
            },
            trivial,
        ))
    }

    /// Normal form of any word: pure part `w . τ_coset^-1` combed, plus coset.
    pub fn normal_form(&self, w: &Word) -> Result<NormalForm> {
        w.check(&self.params)?;
        let coset = self.permutation(w);
        let pure = w.concat(&transversal_lift(&coset).inverse());
        let rewritten = self.rewrite_from(&pure);
        let (mut nf, _) = self.comb_unchecked(&rewritten, false)?;
        nf.coset = coset;
        Ok(nf)
    }

    /// Word problem: permutation gate, pure rewriting, combing.
    pub fn is_trivial(&self, w: &Word) -> Result<bool> {
        w.check(&self.params)?;
        if !self.permutation(w).is_identity() {
            return Ok(false);
        }
        let rewritten = self.rewrite_from(w);
        Ok(self.comb_unchecked(&rewritten, true)?.1)
    }

    /// Whether two words represent the same element.
    pub fn equal(&self, u: &Word, v: &Word) -> Result<bool> {
        self.is_trivial(&u.concat(&v.inverse()))
    }

    /// Point pushing: the free group on the level-`n` generators included
    /// as itself.
    pub fn push(&self, w: &Word) -> Result<Word> {
        let n = self.params.n();
        w.check(&self.params)?;
        if let Some(bad) = w.letters().iter().find(|p| p.gen.level() != Some(n)) {
            return Err(Error::WrongAlphabet {
                op: "push",
                letter: bad.gen.to_string(),
            });
        }
        Ok(w.free_reduce())
    }

    /// Forgets the marked point `p_n`: drops level-`n` letters. The result
    /// lives in the group with parameters `params.forget_one()`.
    pub fn forget(&self, w: &Word) -> Result<Word> {
        let n = self.params.n();
        if n == 0 {
            return Err(Error::InvalidParams("no marked point to forget".into()));
        }
        w.check(&self.params)?;
        if let Some(bad) = w.letters().iter().find(|p| !p.gen.is_pure()) {
            return Err(Error::WrongAlphabet {
                op: "forget",
                letter: bad.gen.to_string(),
            });
        }
        Ok(w.letters()
            .iter()
            .copied()
            .filter(|p| p.gen.level() != Some(n))
            .collect())
    }

    /// Includes a pure word of the group with `n - 1` marked points by
    /// homonyms.
    pub fn section(&self, w: &Word) -> Result<Word> {
        let n = self.params.n();
        if let Some(bad) = w
            .letters()
            .iter()
            .find(|p| !p.gen.is_pure() || p.gen.level().is_some_and(|k| k >= n))
        {
            return Err(Error::WrongAlphabet {
                op: "section",
                letter: bad.gen.to_string(),
            });
        }
        w.check(&self.params)?;
        Ok(w.free_reduce())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::oracle_is_trivial;
    use crate::presentation::{full_presentation, pure_presentation};

    fn params(n: u32, l: u32, cones: u32) -> GroupParams {
        GroupParams::with_default_orders(n, l, cones)
    }

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn comb_empty() {
        let e = Engine::new(&params(3, 1, 1));
        let nf = e.comb(&Word::new()).unwrap();
        assert!(nf.is_trivial());
        assert_eq!(nf.syllables.len(), 3);
    }

    #[test]
    fn comb_cyclic_relator() {
        let e = Engine::new(&params(3, 0, 0));
        let r = w("A(2,1) A(3,2) A(3,1) A(3,2)^-1 A(2,1)^-1 A(3,1)^-1");
        assert!(e.comb(&r).unwrap().is_trivial());
    }

    #[test]
    fn comb_conjugate() {
        let e = Engine::new(&params(3, 0, 0));
        let nf = e.comb(&w("A(2,1) A(3,1) A(2,1)^-1")).unwrap();
        assert_eq!(*nf.level(3), w("A(3,1)^-1 A(3,2)^-1 A(3,1) A(3,2) A(3,1)"));
        assert!(nf.level(2).is_empty());
        assert!(nf.level(1).is_empty());
        assert_eq!(
            nf.to_string(),
            "[k=3: A(3,1)^-1 A(3,2)^-1 A(3,1) A(3,2) A(3,1)] [k=2: ] [k=1: ] | coset: ()"
        );
    }

    #[test]
    fn rewrite_examples() {
        let e = Engine::new(&params(2, 1, 0));
        assert_eq!(e.rewrite_pure(&w("H1^2")).unwrap(), w("A(2,1)"));
        assert_eq!(e.rewrite_pure(&w("H1^-1 T1 H1")).unwrap(), w("B(2,1)"));
        assert!(matches!(e.rewrite_pure(&w("H1")), Err(Error::NotPure(_))));
    }

    #[test]
    fn rewrite_is_certified_on_mixed_words() {
        // rewrite_pure asserts against the oracle in test builds
        let e = Engine::new(&params(4, 1, 1));
        for s in [
            "H1 H2 H3^2 H2^-1 H1^-1 H2^2 H3 H1 H3^-1 H1^-1",
            "H3^-1 T1 H2 U1^-1 H2^-1 H3",
            "H2 H1 H2 H1^-1 H2^-1 H1^-1",
            "H1^-3 U1 H1 T1 H1^2",
        ] {
            e.rewrite_pure(&w(s)).unwrap();
        }
    }

    #[test]
    fn trivial_examples() {
        let e = Engine::new(&params(3, 1, 2));
        assert!(e.is_trivial(&w("H1 H2 H1 H2^-1 H1^-1 H2^-1")).unwrap());
        assert!(!e.is_trivial(&w("H1")).unwrap());
        assert!(!e.is_trivial(&w("H1^2")).unwrap());
        assert!(e.is_trivial(&Word::new()).unwrap());
    }

    #[test]
    fn normal_form_of_h1() {
        let e = Engine::new(&params(2, 0, 0));
        let nf = e.normal_form(&w("H1")).unwrap();
        assert!(nf.syllables.iter().all(Word::is_empty));
        assert_eq!(nf.coset.to_string(), "(1 2)");
        assert_eq!(nf.representative(), w("H1"));
    }

    #[test]
    fn relators_are_trivial_small_grid() {
        for (n, l, c) in [(2, 1, 1), (3, 1, 2), (4, 2, 1)] {
            let p = params(n, l, c);
            let e = Engine::new(&p);
            for r in pure_presentation(&p)
                .relators
                .iter()
                .chain(&full_presentation(&p).unwrap().relators)
            {
                assert!(e.is_trivial(&r.word).unwrap(), "{} {}", r.family, r.word);
            }
        }
    }

    #[test]
    fn hconj_rules_match_oracle() {
        for (n, l, c) in [(5, 1, 1), (4, 2, 2)] {
            let p = params(n, l, c);
            for k in 1..n {
                for b in 1..=n {
                    for x in level_generators(&p, b) {
                        let h = Word::single(Gen::H(k), 1);
                        let xw = Word::single(x, 1);
                        let lhs = h.concat(&xw).concat(&h.inverse());
                        let rhs = h_conj_positive(k, x);
                        let diff = lhs.concat(&rhs.inverse());
                        assert!(oracle_is_trivial(&diff, &p).unwrap(), "H{k} {x} H{k}^-1");
                        let lhs = h.inverse().concat(&xw).concat(&h);
                        let rhs = h_conj_negative(k, x);
                        let diff = lhs.concat(&rhs.inverse());
                        assert!(oracle_is_trivial(&diff, &p).unwrap(), "H{k}^-1 {x} H{k}");
                    }
                }
            }
        }
    }

    #[test]
    fn action_table_matches_oracle() {
        for (n, l, c) in [(4, 2, 2), (5, 1, 1)] {
            let p = params(n, l, c);
            let e = Engine::new(&p);
            for (&(conj, positive, target), image) in e.table().iter() {
                let g = Word::single(conj, if positive { 1 } else { -1 });
                let lhs = g.concat(&Word::single(target, 1)).concat(&g.inverse());
                let diff = lhs.concat(&image.inverse());
                assert!(
                    oracle_is_trivial(&diff, &p).unwrap(),
                    "{conj} {positive} {target}"
                );
            }
        }
    }

    #[test]
    fn blowup_is_typed() {
        let e = Engine::new(&params(3, 0, 0)).with_cap(4);
        let r = e.comb(&w("A(2,1) A(3,1) A(2,1)^-1"));
        assert!(matches!(r, Err(Error::Blowup { level: 3, .. })));
    }

    #[test]
    fn birman_maps() {
        let p = params(3, 1, 1);
        let e = Engine::new(&p);
        assert_eq!(e.push(&w("A(3,1)")).unwrap(), w("A(3,1)"));
        assert!(e.push(&w("A(2,1)")).is_err());
        assert!(e.forget(&w("A(3,2)")).unwrap().is_empty());
        assert_eq!(
            e.forget(&w("A(2,1) B(3,1) C(1,1)")).unwrap(),
            w("A(2,1) C(1,1)")
        );
        assert_eq!(e.section(&w("B(1,1)")).unwrap(), w("B(1,1)"));
        assert!(e.section(&Word::new()).unwrap().is_empty());
        assert!(e.section(&w("A(3,1)")).is_err());
        let e0 = Engine::new(&params(0, 1, 1));
        assert!(e0.forget(&Word::new()).is_err());
    }
}
