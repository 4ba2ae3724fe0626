//! Generator alphabets and run-length encoded words.
//!
//! A [`FreeWord`] stores maximal runs `g^e`, so `H1^1000` is one entry.
//! Words built with [`FreeWord::push`] stay freely reduced; words built
//! with [`FreeWord::from_raw`] keep whatever runs they were given until
//! [`FreeWord::free_reduce`] is called.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::params::{GroupParams, Point};

/// Generator kinds. `H`, `T`, `U` generate the full group; `A`, `B`, `C`
/// generate the pure subgroup.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Gen {
    /// Half twist of the marked points `j`, `j + 1`.
    H(u32),
    /// Marked point 1 encircling puncture `lambda`.
    T(u32),
    /// Marked point 1 encircling cone point `nu`.
    U(u32),
    /// `A(j, i)`, `i < j`: full twist of marked points `i` and `j`.
    A(u32, u32),
    /// `B(k, lambda)`: marked point `k` encircling puncture `lambda`.
    B(u32, u32),
    /// `C(k, nu)`: marked point `k` encircling cone point `nu`.
    C(u32, u32),
}

impl Gen {
    pub fn is_pure(self) -> bool {
        matches!(self, Gen::A(..) | Gen::B(..) | Gen::C(..))
    }

    /// Pure generator attached to marked point `upper` and a lower point.
    pub fn pure(upper: u32, lower: Point) -> Gen {
        match lower {
            Point::Marked(i) => Gen::A(upper, i),
            Point::Puncture(lambda) => Gen::B(upper, lambda),
            Point::Cone(nu) => Gen::C(upper, nu),
        }
    }

    /// Level (first index) of a pure generator.
    pub fn level(self) -> Option<u32> {
        match self {
            Gen::A(k, _) | Gen::B(k, _) | Gen::C(k, _) => Some(k),
            _ => None,
        }
    }

    /// The point a pure generator's marked point winds around.
    pub fn lower_point(self) -> Option<Point> {
        match self {
            Gen::A(_, i) => Some(Point::Marked(i)),
            Gen::B(_, lambda) => Some(Point::Puncture(lambda)),
            Gen::C(_, nu) => Some(Point::Cone(nu)),
            _ => None,
        }
    }

    pub fn is_valid(self, params: &GroupParams) -> bool {
        let (n, l, cones) = (params.n(), params.punctures(), params.cones());
        match self {
            Gen::H(j) => j >= 1 && j < n,
            Gen::T(lambda) => n >= 1 && (1..=l).contains(&lambda),
            Gen::U(nu) => n >= 1 && (1..=cones).contains(&nu),
            Gen::A(j, i) => i >= 1 && i < j && j <= n,
            Gen::B(k, lambda) => (1..=n).contains(&k) && (1..=l).contains(&lambda),
            Gen::C(k, nu) => (1..=n).contains(&k) && (1..=cones).contains(&nu),
        }
    }

    pub fn check(self, params: &GroupParams) -> Result<()> {
        if self.is_valid(params) {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                letter: self.to_string(),
                params: params.to_string(),
            })
        }
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Gen::H(j) => write!(f, "H{j}"),
            Gen::T(lambda) => write!(f, "T{lambda}"),
            Gen::U(nu) => write!(f, "U{nu}"),
            Gen::A(j, i) => write!(f, "A({j},{i})"),
            Gen::B(k, lambda) => write!(f, "B({k},{lambda})"),
            Gen::C(k, nu) => write!(f, "C({k},{nu})"),
        }
    }
}

/// A run `gen^exp`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Power<G> {
    pub gen: G,
    pub exp: i64,
}

impl<G> Power<G> {
    pub fn new(gen: G, exp: i64) -> Self {
        Self { gen, exp }
    }
}

pub type Letter = Power<Gen>;

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exp == 1 {
            write!(f, "{}", self.gen)
        } else {
            write!(f, "{}^{}", self.gen, self.exp)
        }
    }
}

/// Word in a free monoid on `G` and its inverses, run-length encoded.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FreeWord<G> {
    runs: Vec<Power<G>>,
}

pub type Word = FreeWord<Gen>;

impl<G> Default for FreeWord<G> {
    fn default() -> Self {
        Self { runs: Vec::new() }
    }
}

impl<G: Copy + PartialEq> FreeWord<G> {
    pub fn new() -> Self {
        Self::default()
    }

    /// Keeps the runs exactly as given; nothing is merged or dropped.
    pub fn from_raw(runs: Vec<Power<G>>) -> Self {
        Self { runs }
    }

    pub fn from_letters(letters: impl IntoIterator<Item = Power<G>>) -> Self {
        let mut w = Self::new();
        w.extend(letters);
        w
    }

    pub fn single(gen: G, exp: i64) -> Self {
        Self::from_letters([Power::new(gen, exp)])
    }

    pub fn letters(&self) -> &[Power<G>] {
        &self.runs
    }

    pub fn into_letters(self) -> Vec<Power<G>> {
        self.runs
    }

    /// Number of runs.
    pub fn len(&self) -> usize {
        self.runs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.runs.is_empty()
    }

    /// Length counted with multiplicity, `sum |e|`.
    pub fn syllable_length(&self) -> u64 {
        self.runs.iter().map(|p| p.exp.unsigned_abs()).sum()
    }

    /// Appends one run, cancelling against the end of the word.
    pub fn push(&mut self, p: Power<G>) {
        if p.exp == 0 {
            return;
        }
        if let Some(last) = self.runs.last_mut() {
            if last.gen == p.gen {
                last.exp += p.exp;
                if last.exp == 0 {
                    self.runs.pop();
                }
                return;
            }
        }
        self.runs.push(p);
    }

    pub fn push_gen(&mut self, gen: G, exp: i64) {
        self.push(Power::new(gen, exp));
    }

    pub fn append(&mut self, other: &Self) {
        for &p in &other.runs {
            self.push(p);
        }
    }

    /// Appends `other^exp`.
    pub fn append_pow(&mut self, other: &Self, exp: i64) {
        if exp == 0 || other.is_empty() {
            return;
        }
        if other.len() == 1 {
            let p = other.runs[0];
            self.push(Power::new(p.gen, p.exp * exp));
            return;
        }
        for _ in 0..exp.unsigned_abs() {
            if exp > 0 {
                for &p in &other.runs {
                    self.push(p);
                }
            } else {
                for p in other.runs.iter().rev() {
                    self.push(Power::new(p.gen, -p.exp));
                }
            }
        }
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut w = self.clone();
        w.append(other);
        w
    }

    pub fn inverse(&self) -> Self {
        Self {
            runs: self
                .runs
                .iter()
                .rev()
                .map(|p| Power::new(p.gen, -p.exp))
                .collect(),
        }
    }

    pub fn pow(&self, exp: i64) -> Self {
        let mut w = Self::new();
        w.append_pow(self, exp);
        w
    }

    /// Merges adjacent equal generators and drops zero exponents until
    /// nothing changes. A single stack pass suffices.
    pub fn free_reduce(&self) -> Self {
        Self::from_letters(self.runs.iter().copied())
    }

    pub fn is_reduced(&self) -> bool {
        self.runs.iter().all(|p| p.exp != 0) && self.runs.windows(2).all(|w| w[0].gen != w[1].gen)
    }

    /// Image under the homomorphism sending each generator to a word.
    pub fn substitute<H, F>(&self, mut image: F) -> FreeWord<H>
    where
        H: Copy + PartialEq,
        F: FnMut(G) -> FreeWord<H>,
    {
        let mut out = FreeWord::new();
        for p in &self.runs {
            out.append_pow(&image(p.gen), p.exp);
        }
        out
    }
}

impl<G: Copy + PartialEq> Extend<Power<G>> for FreeWord<G> {
    fn extend<I: IntoIterator<Item = Power<G>>>(&mut self, iter: I) {
        for p in iter {
            self.push(p);
        }
    }
}

impl<G: Copy + PartialEq> FromIterator<Power<G>> for FreeWord<G> {
    fn from_iter<I: IntoIterator<Item = Power<G>>>(iter: I) -> Self {
        Self::from_letters(iter)
    }
}

impl Word {
    pub fn check(&self, params: &GroupParams) -> Result<()> {
        self.runs.iter().try_for_each(|p| p.gen.check(params))
    }

    pub fn is_pure_alphabet(&self) -> bool {
        self.runs.iter().all(|p| p.gen.is_pure())
    }

    pub fn is_braid_alphabet(&self) -> bool {
        self.runs.iter().all(|p| !p.gen.is_pure())
    }

    /// Exponent sum of one generator.
    pub fn exponent_sum(&self, gen: Gen) -> i64 {
        self.runs
            .iter()
            .filter(|p| p.gen == gen)
            .map(|p| p.exp)
            .sum()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, p) in self.runs.iter().enumerate() {
            if idx > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// Free reduction of a word.
pub fn free_reduce(w: &Word) -> Word {
    w.free_reduce()
}

/// Parses a word and checks every letter against `params`. The result is
/// freely reduced.
pub fn parse_word(text: &str, params: &GroupParams) -> Result<Word> {
    let w = parse_unchecked(text)?;
    w.check(params)?;
    Ok(w)
}

/// Grammar-only parse, no index checks.
pub fn parse_unchecked(text: &str) -> Result<Word> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let mut w = Word::new();
    p.skip_ws();
    while !p.at_end() {
        let gen = p.letter()?;
        let exp = if p.eat(b'^') { p.signed_int()? } else { 1 };
        w.push(Power::new(gen, exp));
        if !p.at_end() && !p.peek().is_ascii_whitespace() {
            return Err(p.error("expected whitespace between letters"));
        }
        p.skip_ws();
    }
    Ok(w)
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_unchecked(s)
    }
}

pub(crate) struct Parser<'a> {
    pub(crate) src: &'a [u8],
    pub(crate) pos: usize,
}

impl Parser<'_> {
    pub(crate) fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    pub(crate) fn peek(&self) -> u8 {
        self.src.get(self.pos).copied().unwrap_or(0)
    }

    pub(crate) fn eat(&mut self, c: u8) -> bool {
        if self.peek() == c && !self.at_end() {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    pub(crate) fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("expected '{}'", c as char)))
        }
    }

    pub(crate) fn skip_ws(&mut self) {
        while !self.at_end() && self.peek().is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    pub(crate) fn error(&self, msg: &str) -> Error {
        Error::Syntax {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    /// Decimal without leading zeros.
    pub(crate) fn uint(&mut self) -> Result<u64> {
        let start = self.pos;
        while self.peek().is_ascii_digit() && !self.at_end() {
            self.pos += 1;
        }
        let digits = &self.src[start..self.pos];
        if digits.is_empty() {
            self.pos = start;
            return Err(self.error("expected integer"));
        }
        if digits.len() > 1 && digits[0] == b'0' {
            self.pos = start;
            return Err(self.error("leading zero"));
        }
        std::str::from_utf8(digits)
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| {
                let mut e = self.error("integer overflow");
                if let Error::Syntax { pos, .. } = &mut e {
                    *pos = start;
                }
                e
            })
    }

    pub(crate) fn index(&mut self) -> Result<u32> {
        let start = self.pos;
        let v = self.uint()?;
        u32::try_from(v).map_err(|_| Error::Syntax {
            pos: start,
            msg: "index overflow".into(),
        })
    }

    pub(crate) fn signed_int(&mut self) -> Result<i64> {
        let neg = self.eat(b'-');
        let start = self.pos;
        let v = self.uint()?;
        if neg && v == 0 {
            return Err(Error::Syntax {
                pos: start,
                msg: "negative zero".into(),
            });
        }
        let v = i64::try_from(v).map_err(|_| Error::Syntax {
            pos: start,
            msg: "integer overflow".into(),
        })?;
        Ok(if neg { -v } else { v })
    }

    fn pair(&mut self) -> Result<(u32, u32)> {
        self.expect(b'(')?;
        let a = self.index()?;
        self.expect(b',')?;
        let b = self.index()?;
        self.expect(b')')?;
        Ok((a, b))
    }

    fn letter(&mut self) -> Result<Gen> {
        let c = self.peek();
        if self.at_end() {
            return Err(self.error("expected letter"));
        }
        self.pos += 1;
        match c {
            b'H' => Ok(Gen::H(self.index()?)),
            b'T' => Ok(Gen::T(self.index()?)),
            b'U' => Ok(Gen::U(self.index()?)),
            b'A' => self.pair().map(|(a, b)| Gen::A(a, b)),
            b'B' => self.pair().map(|(a, b)| Gen::B(a, b)),
            b'C' => self.pair().map(|(a, b)| Gen::C(a, b)),
            _ => {
                self.pos -= 1;
                Err(self.error("expected one of H T U A B C"))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(n: u32, l: u32, cones: u32) -> GroupParams {
        GroupParams::with_default_orders(n, l, cones)
    }

    #[test]
    fn parse_empty() {
        assert!(parse_word("", &params(2, 0, 0)).unwrap().is_empty());
        assert!(parse_word("   ", &params(0, 0, 0)).unwrap().is_empty());
    }

    #[test]
    fn parse_merges_runs() {
        let w = parse_word("H1 H1", &params(2, 0, 0)).unwrap();
        assert_eq!(w.letters(), &[Power::new(Gen::H(1), 2)]);
        let w = parse_word("H1 H1^-1", &params(2, 0, 0)).unwrap();
        assert!(w.is_empty());
        let w = parse_word("T1^0", &params(1, 1, 0)).unwrap();
        assert!(w.is_empty());
    }

    #[test]
    fn parse_transcribes() {
        let w = parse_word("H2^-1 T1 U3 H2", &params(3, 1, 3)).unwrap();
        let exps: Vec<i64> = w.letters().iter().map(|p| p.exp).collect();
        assert_eq!(exps, vec![-1, 1, 1, 1]);
        assert_eq!(w.letters()[2].gen, Gen::U(3));
    }

    #[test]
    fn parse_pure_letters() {
        let w = parse_word("A(3,1)^-2 B(2,1) C(2,3)", &params(3, 1, 3)).unwrap();
        assert_eq!(w.to_string(), "A(3,1)^-2 B(2,1) C(2,3)");
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let p = params(3, 1, 1);
        let cases = [
            ("H1 X2", 3),
            ("H01", 1),
            ("H1H2", 2),
            ("A(3 1)", 3),
            ("H1^", 3),
            ("H1^-0", 4),
            ("A(3,1", 5),
        ];
        for (text, pos) in cases {
            match parse_word(text, &p) {
                Err(Error::Syntax { pos: got, .. }) => assert_eq!(got, pos, "{text}"),
                other => panic!("{text}: {other:?}"),
            }
        }
    }

    #[test]
    fn range_errors_name_the_letter() {
        let p = params(3, 1, 0);
        for text in [
            "H3", "H0", "T2", "U1", "A(2,2)", "A(4,1)", "B(0,1)", "C(1,1)",
        ] {
            match parse_word(text, &p) {
                Err(Error::IndexOutOfRange { letter, .. }) => assert_eq!(letter, text),
                other => panic!("{text}: {other:?}"),
            }
        }
        // no H letters for n <= 1, no T/U letters for n = 0
        assert!(parse_word("H1", &params(1, 0, 0)).is_err());
        assert!(parse_word("T1", &params(0, 1, 0)).is_err());
    }

    #[test]
    fn free_reduce_cases() {
        let w = Word::from_raw(vec![Power::new(Gen::T(1), 1), Power::new(Gen::T(1), -1)]);
        assert!(w.free_reduce().is_empty());
        let w = Word::from_raw(vec![Power::new(Gen::U(2), 3), Power::new(Gen::U(2), -1)]);
        assert_eq!(w.free_reduce().letters(), &[Power::new(Gen::U(2), 2)]);
        let w = Word::from_raw(vec![
            Power::new(Gen::H(1), 1),
            Power::new(Gen::T(1), 0),
            Power::new(Gen::H(1), -1),
            Power::new(Gen::U(1), 2),
        ]);
        assert_eq!(w.free_reduce().letters(), &[Power::new(Gen::U(1), 2)]);
    }

    #[test]
    fn inverse_and_pow() {
        let w: Word = "H1 T1^2".parse().unwrap();
        assert_eq!(w.inverse().to_string(), "T1^-2 H1^-1");
        assert!(w.concat(&w.inverse()).is_empty());
        assert_eq!(w.pow(2).to_string(), "H1 T1^2 H1 T1^2");
        assert_eq!(w.pow(-1), w.inverse());
        let x: Word = "A(2,1)".parse().unwrap();
        assert_eq!(x.pow(-3).to_string(), "A(2,1)^-3");
    }
}
