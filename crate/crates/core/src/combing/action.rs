//! Conjugation action of lower-level pure generators on the free group
//! pushed in at level `k`.
//!
//! Every pure generator joins a marked point `p_s` to a point `q < p_s` on
//! the real axis (cone points, then punctures, then marked points). With
//! `P_x` the level-`k` generator attached to the point `x`, conjugating
//! `P_a` by the generator joining `q = r` and `p_s` gives
//!
//! | position of `a` | `g P_a g^-1` | `g^-1 P_a g` |
//! |---|---|---|
//! | `a = p_s` | `P_r^-1 P_s P_r` | `P_s P_r P_s P_r^-1 P_s^-1` |
//! | `a = r` | `P_r^-1 P_s^-1 P_r P_s P_r` | `P_s P_r P_s^-1` |
//! | `r < a < p_s` | `[P_r^-1,P_s^-1] P_a [P_r^-1,P_s^-1]^-1` | `[P_s,P_r] P_a [P_s,P_r]^-1` |
//! | otherwise | `P_a` | `P_a` |
//!
//! Specialising `r` and `a` to marked points, punctures and cone points gives
//! the families for `A`, `B` and `C` letters respectively.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::params::{GroupParams, Point};
use crate::word::{Gen, Power, Word};

/// Image of `P_a` (level `k`) under conjugation by `conj^{±1}`.
pub fn conjugation_image(conj: Gen, positive: bool, k: u32, target: Point) -> Word {
    let s = conj.level().expect("pure conjugator");
    let r = conj.lower_point().expect("pure conjugator");
    let ps = Point::Marked(s);
    let gen = |q: Point| Gen::pure(k, q);
    let word =
        |v: &[(Point, i64)]| -> Word { v.iter().map(|&(q, e)| Power::new(gen(q), e)).collect() };
    let a = target;
    match (positive, a) {
        (true, a) if a == ps => word(&[(r, -1), (ps, 1), (r, 1)]),
        (false, a) if a == ps => word(&[(ps, 1), (r, 1), (ps, 1), (r, -1), (ps, -1)]),
        (true, a) if a == r => word(&[(r, -1), (ps, -1), (r, 1), (ps, 1), (r, 1)]),
        (false, a) if a == r => word(&[(ps, 1), (r, 1), (ps, -1)]),
        (true, a) if r < a && a < ps => word(&[
            (r, -1),
            (ps, -1),
            (r, 1),
            (ps, 1),
            (a, 1),
            (ps, -1),
            (r, -1),
            (ps, 1),
            (r, 1),
        ]),
        (false, a) if r < a && a < ps => word(&[
            (ps, 1),
            (r, 1),
            (ps, -1),
            (r, -1),
            (a, 1),
            (r, 1),
            (ps, 1),
            (r, -1),
            (ps, -1),
        ]),
        (_, a) => word(&[(a, 1)]),
    }
}

/// Lower points available at level `k`: all cone points and punctures and
/// the marked points `p_1 .. p_{k-1}`.
pub fn level_points(params: &GroupParams, k: u32) -> Vec<Point> {
    params
        .points()
        .filter(|p| !matches!(p, Point::Marked(j) if *j >= k))
        .collect()
}

/// Free generators of level `k`.
pub fn level_generators(params: &GroupParams, k: u32) -> Vec<Gen> {
    level_points(params, k)
        .into_iter()
        .map(|q| Gen::pure(k, q))
        .collect()
}

/// Pure generators of level strictly below `k`.
pub fn lower_generators(params: &GroupParams, k: u32) -> Vec<Gen> {
    (1..k).flat_map(|s| level_generators(params, s)).collect()
}

/// Tabulated conjugation action for every level `2..=n`.
#[derive(Debug, Clone)]
pub struct ActionTable {
    entries: HashMap<(Gen, bool, Gen), Word>,
}

impl ActionTable {
    pub fn new(params: &GroupParams) -> Self {
        let mut entries = HashMap::new();
        for k in 2..=params.n() {
            let targets = level_points(params, k);
            for conj in lower_generators(params, k) {
                for positive in [true, false] {
                    for &a in &targets {
                        let image = conjugation_image(conj, positive, k, a);
                        entries.insert((conj, positive, Gen::pure(k, a)), image);
                    }
                }
            }
        }
        Self { entries }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, conj: Gen, positive: bool, target: Gen) -> Option<&Word> {
        self.entries.get(&(conj, positive, target))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(Gen, bool, Gen), &Word)> {
        self.entries.iter()
    }

    /// `conj^sign . w . conj^-sign` for `w` over one level; a missing entry
    /// means the table is not total and is reported as a bug.
    pub fn act(&self, conj: Gen, positive: bool, w: &Word) -> Word {
        let mut out = Word::new();
        for p in w.letters() {
            let img = self
                .get(conj, positive, p.gen)
                .unwrap_or_else(|| panic!("action table has no entry for {conj} on {}", p.gen));
            out.append_pow(img, p.exp);
        }
        out
    }

    /// Action of `conj^exp`.
    pub fn act_pow(&self, conj: Gen, exp: i64, w: &Word) -> Word {
        let mut out = w.clone();
        for _ in 0..exp.unsigned_abs() {
            out = self.act(conj, exp > 0, &out);
        }
        out
    }
}

/// `g w g^-1` for a single letter `g = conj^{±1}` below level `k` and a
/// word `w` over the level-`k` generators.
pub fn apply_action(table: &ActionTable, g: Power<Gen>, w: &Word, k: u32) -> Result<Word> {
    match g.gen.level() {
        Some(s) if s < k && g.exp.abs() == 1 => {}
        _ => {
            return Err(Error::WrongAlphabet {
                op: "apply_action",
                letter: g.to_string(),
            })
        }
    }
    if let Some(bad) = w.letters().iter().find(|p| p.gen.level() != Some(k)) {
        return Err(Error::WrongAlphabet {
            op: "apply_action",
            letter: bad.gen.to_string(),
        });
    }
    Ok(table.act(g.gen, g.exp > 0, w))
}
