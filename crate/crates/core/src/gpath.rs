//! Symbolic G-paths and their continuous normal form.
//!
//! A G-path `(g_0, c_1, g_1, .., c_p, g_p)` is stored with each path piece
//! `c_i` written as `t_i . s_i`: a translate `t_i` in the group applied to an
//! opaque segment token `s_i`. Shifts and subdivisions only touch group
//! labels and tokens, so the calculus is exact on this representation.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gamma::{parse_gamma, GammaElement};
use crate::params::GroupParams;
use crate::word::Parser;

/// Opaque path piece. Subdividing `s3` yields `s3.1` and `s3.2`; the parent
/// of a half is recovered by dropping the last component.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SegmentToken {
    root: u32,
    halves: Vec<u8>,
}

impl SegmentToken {
    pub fn new(root: u32) -> Self {
        Self {
            root,
            halves: Vec::new(),
        }
    }

    pub fn root(&self) -> u32 {
        self.root
    }

    pub fn parent(&self) -> Option<(SegmentToken, u8)> {
        let (&half, rest) = self.halves.split_last()?;
        Some((
            SegmentToken {
                root: self.root,
                halves: rest.to_vec(),
            },
            half,
        ))
    }

    pub fn child(&self, half: u8) -> Self {
        let mut halves = self.halves.clone();
        halves.push(half);
        Self {
            root: self.root,
            halves,
        }
    }
}

impl fmt::Display for SegmentToken {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s{}", self.root)?;
        for h in &self.halves {
            write!(f, ".{h}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Segment {
    pub translate: GammaElement,
    pub token: SegmentToken,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GPath {
    groups: Vec<GammaElement>,
    segments: Vec<Segment>,
}

/// `(g, c)` with `c` the concatenation of the pieces `delta_i . s_i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContinuousForm {
    pub g: GammaElement,
    pub pieces: Vec<Segment>,
}

impl GPath {
    pub fn new(groups: Vec<GammaElement>, segments: Vec<Segment>) -> Result<Self> {
        if segments.is_empty() || groups.len() != segments.len() + 1 {
            return Err(Error::InvalidParams(format!(
                "G-path needs p >= 1 segments and p + 1 group entries, got {} and {}",
                segments.len(),
                groups.len()
            )));
        }
        Ok(Self { groups, segments })
    }

    /// Path with untranslated segments `s1 .. sp` and the given labels.
    pub fn from_groups(groups: Vec<GammaElement>) -> Result<Self> {
        let segments = (1..groups.len() as u32)
            .map(|i| Segment {
                translate: GammaElement::identity(),
                token: SegmentToken::new(i),
            })
            .collect();
        Self::new(groups, segments)
    }

    pub fn groups(&self) -> &[GammaElement] {
        &self.groups
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    /// Number of segments `p`.
    pub fn len(&self) -> usize {
        self.segments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.segments.is_empty()
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.segments.len() {
            Err(Error::PositionOutOfRange {
                index: i,
                len: self.segments.len(),
            })
        } else {
            Ok(())
        }
    }

    /// Replaces `(g_{i-1}, c_i, g_i)` by `(g_{i-1} h^-1, h.c_i, h g_i)`.
    pub fn shift(&self, i: usize, h: &GammaElement, params: &GroupParams) -> Result<Self> {
        self.check_index(i)?;
        let mut out = self.clone();
        let h_inv = h.inverse(params)?;
        out.groups[i - 1] = out.groups[i - 1].multiply(&h_inv, params)?;
        out.segments[i - 1].translate = h.multiply(&out.segments[i - 1].translate, params)?;
        out.groups[i] = h.multiply(&out.groups[i], params)?;
        Ok(out)
    }

    /// Splits segment `i` into its two halves with an identity label between.
    pub fn subdivide(&self, i: usize) -> Result<Self> {
        self.check_index(i)?;
        let mut out = self.clone();
        let seg = out.segments[i - 1].clone();
        out.segments[i - 1] = Segment {
            translate: seg.translate.clone(),
            token: seg.token.child(1),
        };
        out.segments.insert(
            i,
            Segment {
                translate: seg.translate,
                token: seg.token.child(2),
            },
        );
        out.groups.insert(i, GammaElement::identity());
        Ok(out)
    }

    /// The unique continuous representative of this path's class.
    pub fn normalize(&self, params: &GroupParams) -> Result<ContinuousForm> {
        let p = self.segments.len();
        // suffix[i] = g_i g_{i+1} .. g_p
        let mut suffix = vec![GammaElement::identity(); p + 2];
        for i in (0..=p).rev() {
            suffix[i] = self.groups[i].multiply(&suffix[i + 1], params)?;
        }
        let mut pieces: Vec<Segment> = Vec::with_capacity(p);
        for (idx, seg) in self.segments.iter().enumerate() {
            let delta = suffix[idx + 1]
                .inverse(params)?
                .multiply(&seg.translate, params)?;
            pieces.push(Segment {
                translate: delta,
                token: seg.token.clone(),
            });
            merge_siblings(&mut pieces);
        }
        Ok(ContinuousForm {
            g: suffix[0].clone(),
            pieces,
        })
    }

    /// Parses `(g0, [t1]s1, g1, [t2]s2, .., gp)`.
    pub fn parse(text: &str, params: &GroupParams) -> Result<Self> {
        let mut p = Parser {
            src: text.as_bytes(),
            pos: 0,
        };
        p.skip_ws();
        p.expect(b'(')?;
        let mut groups = vec![parse_gamma(&mut p, params)?];
        let mut segments = Vec::new();
        loop {
            p.skip_ws();
            if p.eat(b')') {
                break;
            }
            p.expect(b',')?;
            segments.push(parse_segment(&mut p, params)?);
            p.skip_ws();
            p.expect(b',')?;
            groups.push(parse_gamma(&mut p, params)?);
        }
        p.skip_ws();
        if !p.at_end() {
            return Err(p.error("trailing input"));
        }
        Self::new(groups, segments)
    }
}

fn merge_siblings(pieces: &mut Vec<Segment>) {
    while pieces.len() >= 2 {
        let second = &pieces[pieces.len() - 1];
        let first = &pieces[pieces.len() - 2];
        let merged = match (first.token.parent(), second.token.parent()) {
            (Some((pa, 1)), Some((pb, 2))) if pa == pb && first.translate == second.translate => pa,
            _ => break,
        };
        pieces.pop();
        pieces.last_mut().expect("two pieces").token = merged;
    }
}

fn parse_segment(p: &mut Parser<'_>, params: &GroupParams) -> Result<Segment> {
    p.skip_ws();
    let translate = if p.eat(b'[') {
        let t = parse_gamma(p, params)?;
        p.skip_ws();
        p.expect(b']')?;
        t
    } else {
        GammaElement::identity()
    };
    p.expect(b's')?;
    let mut token = SegmentToken::new(p.index()?);
    while p.eat(b'.') {
        let start = p.pos;
        match p.index()? {
            h @ (1 | 2) => token = token.child(h as u8),
            _ => {
                p.pos = start;
                return Err(p.error("segment half must be 1 or 2"));
            }
        }
    }
    Ok(Segment { translate, token })
}

impl ContinuousForm {
    /// The continuous form read back as a G-path: `(g, c_1, 1, .., c_q, 1)`.
    pub fn to_gpath(&self) -> Result<GPath> {
        let mut groups = vec![self.g.clone()];
        groups.extend(std::iter::repeat_n(
            GammaElement::identity(),
            self.pieces.len(),
        ));
        GPath::new(groups, self.pieces.clone())
    }
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]{}", self.translate, self.token)
    }
}

impl fmt::Display for ContinuousForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({};", self.g)?;
        for (i, piece) in self.pieces.iter().enumerate() {
            let sep = if i == 0 { " " } else { ", " };
            write!(f, "{sep}{piece}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for GPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}", self.groups[0])?;
        for (seg, g) in self.segments.iter().zip(&self.groups[1..]) {
            write!(f, ", {seg}, {g}")?;
        }
        write!(f, ")")
    }
}

pub fn gpath_shift(p: &GPath, i: usize, h: &GammaElement, params: &GroupParams) -> Result<GPath> {
    p.shift(i, h, params)
}

pub fn gpath_subdivide(p: &GPath, i: usize) -> Result<GPath> {
    p.subdivide(i)
}

pub fn gpath_normalize(p: &GPath, params: &GroupParams) -> Result<ContinuousForm> {
    p.normalize(params)
}
