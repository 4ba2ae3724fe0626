use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::word::{Gen, Word};

/// Permutation of `{1..n}`, stored 0-based: `images[i]` is the image of
/// `i + 1`, minus one.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(n: u32) -> Self {
        Self {
            images: (0..n).collect(),
        }
    }

    /// From 1-based images.
    pub fn from_images(images: &[u32]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in images {
            let slot = (x as usize)
                .checked_sub(1)
                .filter(|&i| i < n)
                .ok_or_else(|| Error::InvalidParams(format!("image {x} outside 1..={n}")))?;
            if std::mem::replace(&mut seen[slot], true) {
                return Err(Error::InvalidParams(format!("image {x} repeated")));
            }
        }
        Ok(Self {
            images: images.iter().map(|&x| x - 1).collect(),
        })
    }

    /// The adjacent transposition `(j, j+1)`.
    pub fn transposition(n: u32, j: u32) -> Self {
        let mut p = Self::identity(n);
        p.images.swap(j as usize - 1, j as usize);
        p
    }

    pub fn degree(&self) -> u32 {
        self.images.len() as u32
    }

    /// Image of the 1-based point `i`.
    pub fn apply(&self, i: u32) -> u32 {
        self.images[i as usize - 1] + 1
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        Self {
            images: other
                .images
                .iter()
                .map(|&x| self.images[x as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Self { images: inv }
    }

    /// `self ∘ (j, j+1)`.
    pub fn then_swap(&mut self, j: u32) {
        self.images.swap(j as usize - 1, j as usize);
    }

    /// Whether `self ∘ (j, j+1)` is longer than `self` in the Coxeter length.
    pub fn ascends_at(&self, j: u32) -> bool {
        self.images[j as usize - 1] < self.images[j as usize]
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let n = self.images.len();
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.images[i] > self.images[j])
            .count()
    }

    /// Reduced word `j_1 .. j_m` with `self = s_{j_1} ∘ .. ∘ s_{j_m}`,
    /// produced by bubble sort always swapping the leftmost descent.
    pub fn reduced_word(&self) -> Vec<u32> {
        let mut p = self.clone();
        let mut word = Vec::with_capacity(p.length());
        while let Some(j) = (1..p.degree()).find(|&j| !p.ascends_at(j)) {
            p.then_swap(j);
            word.push(j);
        }
        word.reverse();
        word
    }

    /// Disjoint cycles of length at least two, each starting at its
    /// smallest point, 1-based.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i as u32 + 1);
                i = self.images[i] as usize;
            }
            out.push(cycle);
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            let pts: Vec<String> = c.iter().map(u32::to_string).collect();
            write!(f, "({})", pts.join(" "))?;
        }
        Ok(())
    }
}

/// Image in `Sym_n` of a word over `H`, `T`, `U`: `H(j)` goes to the
/// transposition `(j, j+1)`, `T` and `U` to the identity.
pub fn perm_image(w: &Word, n: u32) -> Result<Permutation> {
    let mut p = Permutation::identity(n);
    for letter in w.letters() {
        match letter.gen {
            Gen::H(j) => {
                if j == 0 || j >= n {
                    return Err(Error::IndexOutOfRange {
                        letter: letter.gen.to_string(),
                        params: format!("n={n}"),
                    });
                }
                if letter.exp % 2 != 0 {
                    p.then_swap(j);
                }
            }
            Gen::T(_) | Gen::U(_) => {}
            g => {
                return Err(Error::WrongAlphabet {
                    op: "perm_image",
                    letter: g.to_string(),
                })
            }
        }
    }
    Ok(p)
}

/// Canonical positive lift of a permutation: the `H` word of its
/// bubble-sort reduced word.
pub fn transversal_lift(p: &Permutation) -> Word {
    p.reduced_word()
        .into_iter()
        .map(|j| crate::word::Power::new(Gen::H(j), 1))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_for_small_degrees() {
        for n in 0..3 {
            let id = Permutation::identity(n);
            assert!(id.is_identity());
            assert_eq!(id.to_string(), "()");
            assert!(id.reduced_word().is_empty());
        }
    }

    #[test]
    fn image_of_h1() {
        let w: Word = "H1".parse().unwrap();
        let p = perm_image(&w, 2).unwrap();
        assert_eq!(p, Permutation::transposition(2, 1));
        assert_eq!(p.to_string(), "(1 2)");
        assert!(perm_image(&Word::new(), 4).unwrap().is_identity());
    }

    #[test]
    fn braid_relation_image() {
        let a = perm_image(&"H1 H2 H1".parse().unwrap(), 3).unwrap();
        let b = perm_image(&"H2 H1 H2".parse().unwrap(), 3).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_string(), "(1 3)");
    }

    #[test]
    fn rejects_pure_letters() {
        let w: Word = "A(2,1)".parse().unwrap();
        assert!(matches!(
            perm_image(&w, 2),
            Err(Error::WrongAlphabet { .. })
        ));
    }

    #[test]
    fn reduced_word_is_a_reduced_expression() {
        let p = Permutation::from_images(&[3, 1, 4, 2]).unwrap();
        let word = p.reduced_word();
        assert_eq!(word.len(), p.length());
        let mut q = Permutation::identity(4);
        for &j in &word {
            q.then_swap(j);
        }
        assert_eq!(q, p);
        let lift = transversal_lift(&p);
        assert_eq!(perm_image(&lift, 4).unwrap(), p);
    }

    #[test]
    fn compose_matches_word_concatenation() {
        let u: Word = "H1 H2".parse().unwrap();
        let v: Word = "H2 H3 H1".parse().unwrap();
        let pu = perm_image(&u, 4).unwrap();
        let pv = perm_image(&v, 4).unwrap();
        assert_eq!(perm_image(&u.concat(&v), 4).unwrap(), pu.compose(&pv));
        assert!(pu.compose(&pu.inverse()).is_identity());
    }
}
