//! Arithmetic in the free product `Z_{m_1} * ... * Z_{m_N}`.
//!
//! Elements are alternating syllable sequences `g_{nu_1}^{e_1} g_{nu_2}^{e_2} ..`
//! with neighbouring factors distinct and `1 <= e <= m_nu - 1`. This form is
//! unique, so equality of elements is equality of syllable lists.

use std::fmt;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::params::GroupParams;
use crate::word::Parser;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Syllable {
    pub factor: u32,
    pub exp: u32,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GammaElement {
    syllables: Vec<Syllable>,
}

impl GammaElement {
    pub fn identity() -> Self {
        Self::default()
    }

    /// The generator `g_nu`.
    pub fn generator(nu: u32, params: &GroupParams) -> Result<Self> {
        Self::from_raw(&[(nu, 1)], params)
    }

    /// Reduces an arbitrary sequence of `(factor, exponent)` pairs.
    pub fn from_raw(raw: &[(u32, i64)], params: &GroupParams) -> Result<Self> {
        let mut out = Self::identity();
        for &(nu, e) in raw {
            let m = order(nu, params)?;
            out.push(nu, e.rem_euclid(m as i64) as u32, m);
        }
        Ok(out)
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn len(&self) -> usize {
        self.syllables.len()
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Appends `g_nu^e` with `0 <= e < m`, merging with the last syllable.
    fn push(&mut self, nu: u32, e: u32, m: u32) {
        if e == 0 {
            return;
        }
        if let Some(last) = self.syllables.last_mut() {
            if last.factor == nu {
                last.exp = (last.exp + e) % m;
                if last.exp == 0 {
                    self.syllables.pop();
                }
                return;
            }
        }
        self.syllables.push(Syllable { factor: nu, exp: e });
    }

    pub fn multiply(&self, other: &Self, params: &GroupParams) -> Result<Self> {
        let mut out = self.clone();
        for s in &other.syllables {
            let m = order(s.factor, params)?;
            out.push(s.factor, s.exp % m, m);
        }
        Ok(out)
    }

    pub fn inverse(&self, params: &GroupParams) -> Result<Self> {
        let syllables = self
            .syllables
            .iter()
            .rev()
            .map(|s| {
                let m = order(s.factor, params)?;
                Ok(Syllable {
                    factor: s.factor,
                    exp: m - s.exp,
                })
            })
            .collect::<Result<_>>()?;
        Ok(Self { syllables })
    }

    pub fn pow(&self, e: i64, params: &GroupParams) -> Result<Self> {
        let base = if e < 0 {
            self.inverse(params)?
        } else {
            self.clone()
        };
        let mut out = Self::identity();
        for _ in 0..e.unsigned_abs() {
            out = out.multiply(&base, params)?;
        }
        Ok(out)
    }

    /// Checks the normal-form invariants against `params`.
    pub fn check(&self, params: &GroupParams) -> Result<()> {
        for (i, s) in self.syllables.iter().enumerate() {
            let m = order(s.factor, params)?;
            if s.exp == 0 || s.exp >= m {
                return Err(Error::InvalidParams(format!(
                    "exponent {} of g{} outside 1..{}",
                    s.exp,
                    s.factor,
                    m - 1
                )));
            }
            if i > 0 && self.syllables[i - 1].factor == s.factor {
                return Err(Error::InvalidParams(format!(
                    "adjacent syllables share factor {}",
                    s.factor
                )));
            }
        }
        Ok(())
    }

    /// Random normal-form element with at most `len` syllables.
    pub fn random(params: &GroupParams, len: usize, seed: u64) -> Self {
        let mut rng = StdRng::seed_from_u64(seed);
        Self::random_with(params, len, &mut rng)
    }

    pub fn random_with<R: Rng>(params: &GroupParams, len: usize, rng: &mut R) -> Self {
        let cones = params.cones();
        let mut out = Self::identity();
        if cones == 0 {
            return out;
        }
        let target = rng.gen_range(0..=len);
        while out.len() < target {
            let nu = rng.gen_range(1..=cones);
            if out.syllables.last().is_some_and(|s| s.factor == nu) {
                if cones == 1 {
                    break;
                }
                continue;
            }
            let m = params.cone_order(nu).unwrap_or(2);
            out.syllables.push(Syllable {
                factor: nu,
                exp: rng.gen_range(1..m),
            });
        }
        out
    }

    /// Parses `g1^2*g3*g1` or `e`.
    pub fn parse(text: &str, params: &GroupParams) -> Result<Self> {
        let mut p = Parser {
            src: text.as_bytes(),
            pos: 0,
        };
        let el = parse_gamma(&mut p, params)?;
        p.skip_ws();
        if !p.at_end() {
            return Err(p.error("trailing input"));
        }
        Ok(el)
    }
}

pub(crate) fn parse_gamma(p: &mut Parser<'_>, params: &GroupParams) -> Result<GammaElement> {
    p.skip_ws();
    if p.eat(b'e') {
        return Ok(GammaElement::identity());
    }
    let mut raw = Vec::new();
    loop {
        let start = p.pos;
        p.expect(b'g')?;
        let nu = p.index()?;
        if order(nu, params).is_err() {
            p.pos = start;
            return Err(Error::IndexOutOfRange {
                letter: format!("g{nu}"),
                params: params.to_string(),
            });
        }
        let e = if p.eat(b'^') { p.signed_int()? } else { 1 };
        raw.push((nu, e));
        if !p.eat(b'*') {
            break;
        }
    }
    GammaElement::from_raw(&raw, params)
}

fn order(nu: u32, params: &GroupParams) -> Result<u32> {
    params.cone_order(nu).ok_or_else(|| Error::IndexOutOfRange {
        letter: format!("g{nu}"),
        params: params.to_string(),
    })
}

impl fmt::Display for GammaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.syllables.is_empty() {
            return f.write_str("e");
        }
        for (i, s) in self.syllables.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            if s.exp == 1 {
                write!(f, "g{}", s.factor)?;
            } else {
                write!(f, "g{}^{}", s.factor, s.exp)?;
            }
        }
        Ok(())
    }
}

/// Free-function forms of the element operations.
pub fn gamma_multiply(
    a: &GammaElement,
    b: &GammaElement,
    params: &GroupParams,
) -> Result<GammaElement> {
    a.multiply(b, params)
}

pub fn gamma_inverse(a: &GammaElement, params: &GroupParams) -> Result<GammaElement> {
    a.inverse(params)
}

pub fn gamma_is_identity(a: &GammaElement) -> bool {
    a.is_identity()
}

pub fn gamma_random(params: &GroupParams, len: usize, seed: u64) -> GammaElement {
    GammaElement::random(params, len, seed)
}
