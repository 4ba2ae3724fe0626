//! Finite presentations of the pure group (generators `A`, `B`, `C`) and of
//! the full group (generators `H`, `T`, `U`), plus the abbreviations that
//! write pure generators as `H`-conjugates.
//!
//! Neither presentation depends on the cone orders; exports never print them.

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::params::GroupParams;
use crate::word::{Gen, Power, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GroupKind {
    Pure,
    Full,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Relator {
    pub family: &'static str,
    pub word: Word,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub kind: GroupKind,
    pub params: GroupParams,
    pub generators: Vec<Gen>,
    pub relators: Vec<Relator>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    Text,
    Json,
    Algebra,
}

fn g(gen: Gen) -> Word {
    Word::single(gen, 1)
}

fn commutator(a: &Word, b: &Word) -> Word {
    let mut w = a.clone();
    w.append(b);
    w.append(&a.inverse());
    w.append(&b.inverse());
    w
}

/// `x y x^-1`
fn conj(x: &Word, y: &Word) -> Word {
    let mut w = x.clone();
    w.append(y);
    w.append(&x.inverse());
    w
}

fn equal(lhs: &Word, rhs: &Word) -> Word {
    lhs.concat(&rhs.inverse())
}

fn prod(gens: &[Gen]) -> Word {
    gens.iter().map(|&x| Power::new(x, 1)).collect()
}

fn pairs(n: u32) -> impl Iterator<Item = (u32, u32)> {
    (1..=n).flat_map(move |a| (a + 1..=n).map(move |b| (a, b)))
}

fn triples(n: u32) -> impl Iterator<Item = (u32, u32, u32)> {
    pairs(n).flat_map(move |(a, b)| (b + 1..=n).map(move |c| (a, b, c)))
}

fn quadruples(n: u32) -> impl Iterator<Item = (u32, u32, u32, u32)> {
    triples(n).flat_map(move |(a, b, c)| (c + 1..=n).map(move |d| (a, b, c, d)))
}

/// Pure generators in order `A(j,i)`, then `B(k,lambda)`, then `C(k,nu)`.
pub fn pure_generators(params: &GroupParams) -> Vec<Gen> {
    let (n, l, cones) = (params.n(), params.punctures(), params.cones());
    let mut gens: Vec<Gen> = pairs(n).map(|(i, j)| Gen::A(j, i)).collect();
    gens.extend((1..=n).flat_map(|k| (1..=l).map(move |lambda| Gen::B(k, lambda))));
    gens.extend((1..=n).flat_map(|k| (1..=cones).map(move |nu| Gen::C(k, nu))));
    gens
}

pub fn full_generators(params: &GroupParams) -> Vec<Gen> {
    let mut gens: Vec<Gen> = (1..params.n()).map(Gen::H).collect();
    if params.n() >= 1 {
        gens.extend((1..=params.punctures()).map(Gen::T));
        gens.extend((1..=params.cones()).map(Gen::U));
    }
    gens
}

/// Presentation of the pure group with relator families:
///
/// 1. `[A(j,i),A(l,k)]`, `[B(j,λ),A(l,k)]`, `[C(j,ν),A(l,k)]`
/// 2. `[A(l,i),A(k,j)]`, `[B(l,λ),A(k,j)]`, `[B(l,λ),B(k,θ)]`,
///    `[C(l,ν),A(k,j)]`, `[C(l,ν),B(k,λ)]`, `[C(l,ν),C(k,μ)]`
/// 3. `[A(l,k)A(l,j)A(l,k)^-1, A(k,i)]`, `[A(k,j)A(k,i)A(k,j)^-1, B(j,λ)]`,
///    `[A(k,j)B(k,θ)A(k,j)^-1, B(j,λ)]`, `[A(k,j)A(k,i)A(k,j)^-1, C(j,ν)]`,
///    `[A(k,j)C(k,μ)A(k,j)^-1, C(j,ν)]`, `[A(k,j)B(k,λ)A(k,j)^-1, C(j,ν)]`
/// 4. the cyclic triples `A(j,i)A(k,j)A(k,i) = A(k,i)A(j,i)A(k,j) = A(k,j)A(k,i)A(j,i)`
///    and their `B`, `C` analogues, two relators each
///
/// where `i<j<k<l`, `θ<λ`, `μ<ν` and every family ranges over exactly the
/// indices it mentions.
pub fn pure_presentation(params: &GroupParams) -> Presentation {
    let (n, l, cones) = (params.n(), params.punctures(), params.cones());
    let lambdas = || 1..=l;
    let nus = || 1..=cones;
    let mut rels: Vec<Relator> = Vec::new();
    let mut add = |family: &'static str, word: Word| rels.push(Relator { family, word });
    use Gen::{A, B, C};

    for (i, j, k, ll) in quadruples(n) {
        add("1a", commutator(&g(A(j, i)), &g(A(ll, k))));
    }
    for (j, k, ll) in triples(n) {
        for lambda in lambdas() {
            add("1b", commutator(&g(B(j, lambda)), &g(A(ll, k))));
        }
        for nu in nus() {
            add("1c", commutator(&g(C(j, nu)), &g(A(ll, k))));
        }
    }

    for (i, j, k, ll) in quadruples(n) {
        add("2a", commutator(&g(A(ll, i)), &g(A(k, j))));
    }
    for (j, k, ll) in triples(n) {
        for lambda in lambdas() {
            add("2b", commutator(&g(B(ll, lambda)), &g(A(k, j))));
        }
    }
    for (k, ll) in pairs(n) {
        for (theta, lambda) in pairs(l) {
            add("2c", commutator(&g(B(ll, lambda)), &g(B(k, theta))));
        }
    }
    for (j, k, ll) in triples(n) {
        for nu in nus() {
            add("2d", commutator(&g(C(ll, nu)), &g(A(k, j))));
        }
    }
    for (k, ll) in pairs(n) {
        for lambda in lambdas() {
            for nu in nus() {
                add("2e", commutator(&g(C(ll, nu)), &g(B(k, lambda))));
            }
        }
        for (mu, nu) in pairs(cones) {
            add("2f", commutator(&g(C(ll, nu)), &g(C(k, mu))));
        }
    }

    for (i, j, k, ll) in quadruples(n) {
        let x = conj(&g(A(ll, k)), &g(A(ll, j)));
        add("3a", commutator(&x, &g(A(k, i))));
    }
    for (i, j, k) in triples(n) {
        let x = conj(&g(A(k, j)), &g(A(k, i)));
        for lambda in lambdas() {
            add("3b", commutator(&x, &g(B(j, lambda))));
        }
    }
    for (j, k) in pairs(n) {
        for (theta, lambda) in pairs(l) {
            let x = conj(&g(A(k, j)), &g(B(k, theta)));
            add("3c", commutator(&x, &g(B(j, lambda))));
        }
    }
    for (i, j, k) in triples(n) {
        let x = conj(&g(A(k, j)), &g(A(k, i)));
        for nu in nus() {
            add("3d", commutator(&x, &g(C(j, nu))));
        }
    }
    for (j, k) in pairs(n) {
        for (mu, nu) in pairs(cones) {
            let x = conj(&g(A(k, j)), &g(C(k, mu)));
            add("3e", commutator(&x, &g(C(j, nu))));
        }
        for lambda in lambdas() {
            for nu in nus() {
                let x = conj(&g(A(k, j)), &g(B(k, lambda)));
                add("3f", commutator(&x, &g(C(j, nu))));
            }
        }
    }

    let mut cyclic = |family: &'static str, [a, b, c]: [Gen; 3]| {
        let left = prod(&[a, b, c]);
        let middle = prod(&[c, a, b]);
        let right = prod(&[b, c, a]);
        add(family, equal(&left, &middle));
        add(family, equal(&middle, &right));
    };
    for (i, j, k) in triples(n) {
        cyclic("4a", [A(j, i), A(k, j), A(k, i)]);
    }
    for (i, j) in pairs(n) {
        for lambda in lambdas() {
            cyclic("4b", [A(j, i), B(j, lambda), B(i, lambda)]);
        }
        for nu in nus() {
            cyclic("4c", [A(j, i), C(j, nu), C(i, nu)]);
        }
    }

    Presentation {
        kind: GroupKind::Pure,
        params: params.clone(),
        generators: pure_generators(params),
        relators: rels,
    }
}

/// Presentation of the full group, `n >= 1`:
///
/// 1. braid relations `H_j H_{j+1} H_j = H_{j+1} H_j H_{j+1}` and
///    `[H_i, H_j]` for `|i - j| >= 2`
/// 2. `[T_λ, H_j]`, `[U_ν, H_j]` for `2 <= j < n`
/// 3. `[H_1 T_λ H_1, T_λ]`, `[H_1 U_ν H_1, U_ν]`
/// 4. `[T_θ, B(2,λ)]` for `θ < λ`, `[U_μ, C(2,ν)]` for `μ < ν`, and
///    `[T_λ, C(2,ν)]` for all `λ, ν`, with `B(2,λ) = H_1^-1 T_λ H_1`
///    and `C(2,ν) = H_1^-1 U_ν H_1`
pub fn full_presentation(params: &GroupParams) -> Result<Presentation> {
    let (n, l, cones) = (params.n(), params.punctures(), params.cones());
    if n == 0 {
        return Err(Error::InvalidParams(
            "the full presentation needs at least one marked point".into(),
        ));
    }
    use Gen::{H, T, U};
    let mut rels: Vec<Relator> = Vec::new();
    let mut add = |family: &'static str, word: Word| rels.push(Relator { family, word });

    for j in 1..n.saturating_sub(1) {
        add(
            "1a",
            equal(
                &prod(&[H(j), H(j + 1), H(j)]),
                &prod(&[H(j + 1), H(j), H(j + 1)]),
            ),
        );
    }
    for (i, j) in pairs(n.saturating_sub(1)) {
        if j >= i + 2 {
            add("1b", commutator(&g(H(i)), &g(H(j))));
        }
    }
    for j in 2..n {
        for lambda in 1..=l {
            add("2a", commutator(&g(T(lambda)), &g(H(j))));
        }
        for nu in 1..=cones {
            add("2b", commutator(&g(U(nu)), &g(H(j))));
        }
    }
    if n >= 2 {
        let h1 = g(H(1));
        for lambda in 1..=l {
            let x = prod(&[H(1), T(lambda), H(1)]);
            add("3a", commutator(&x, &g(T(lambda))));
        }
        for nu in 1..=cones {
            let x = prod(&[H(1), U(nu), H(1)]);
            add("3b", commutator(&x, &g(U(nu))));
        }
        let b2 = |lambda| conj(&h1.inverse(), &g(T(lambda)));
        let c2 = |nu| conj(&h1.inverse(), &g(U(nu)));
        for (theta, lambda) in pairs(l) {
            add("4a", commutator(&g(T(theta)), &b2(lambda)));
        }
        for (mu, nu) in pairs(cones) {
            add("4b", commutator(&g(U(mu)), &c2(nu)));
        }
        for lambda in 1..=l {
            for nu in 1..=cones {
                add("4c", commutator(&g(T(lambda)), &c2(nu)));
            }
        }
    }

    Ok(Presentation {
        kind: GroupKind::Full,
        params: params.clone(),
        generators: full_generators(params),
        relators: rels,
    })
}

/// Writes a pure generator in `H`, `T`, `U`:
///
/// * `A(j,i) = H_{j-1}^-1 .. H_{i+1}^-1 H_i^2 H_{i+1} .. H_{j-1}`
/// * `B(k,λ) = H_{k-1}^-1 .. H_1^-1 T_λ H_1 .. H_{k-1}`
/// * `C(k,ν) = H_{k-1}^-1 .. H_1^-1 U_ν H_1 .. H_{k-1}`
///
/// A power expands as the conjugate of the power of the core letter.
pub fn expand_abbrev(letter: Power<Gen>) -> Result<Word> {
    let (core, from, to) = match letter.gen {
        Gen::A(j, i) => (Power::new(Gen::H(i), 2 * letter.exp), i + 1, j),
        Gen::B(k, lambda) => (Power::new(Gen::T(lambda), letter.exp), 1, k),
        Gen::C(k, nu) => (Power::new(Gen::U(nu), letter.exp), 1, k),
        other => {
            return Err(Error::WrongAlphabet {
                op: "expand_abbrev",
                letter: other.to_string(),
            })
        }
    };
    let mut w = Word::new();
    for t in (from..to).rev() {
        w.push_gen(Gen::H(t), -1);
    }
    w.push(core);
    for t in from..to {
        w.push_gen(Gen::H(t), 1);
    }
    Ok(w)
}

/// Expands every pure letter of a word; `H`, `T`, `U` letters pass through.
pub fn expand_word(w: &Word) -> Word {
    let mut out = Word::new();
    for &p in w.letters() {
        if p.gen.is_pure() {
            out.append(&expand_abbrev(p).expect("pure letter"));
        } else {
            out.push(p);
        }
    }
    out
}

#[derive(Serialize)]
struct JsonRelator<'a> {
    family: &'a str,
    word: String,
}

#[derive(Serialize)]
struct JsonPresentation<'a> {
    group: GroupKind,
    n: u32,
    #[serde(rename = "L")]
    l: u32,
    #[serde(rename = "N")]
    cones: u32,
    generators: Vec<String>,
    relators: Vec<JsonRelator<'a>>,
}

impl Presentation {
    pub fn relator_words(&self) -> impl Iterator<Item = &Word> {
        self.relators.iter().map(|r| &r.word)
    }

    /// Deterministic rendering. No format prints the cone orders.
    pub fn export(&self, format: ExportFormat) -> String {
        let gens: Vec<String> = self.generators.iter().map(Gen::to_string).collect();
        match format {
            ExportFormat::Algebra => {
                let rels: Vec<String> = self.relator_words().map(Word::to_string).collect();
                format!("< {} | {} >\n", gens.join(", "), rels.join(", "))
            }
            ExportFormat::Json => {
                let doc = JsonPresentation {
                    group: self.kind,
                    n: self.params.n(),
                    l: self.params.punctures(),
                    cones: self.params.cones(),
                    generators: gens,
                    relators: self
                        .relators
                        .iter()
                        .map(|r| JsonRelator {
                            family: r.family,
                            word: r.word.to_string(),
                        })
                        .collect(),
                };
                let mut s = serde_json::to_string_pretty(&doc).expect("serializable");
                s.push('\n');
                s
            }
            ExportFormat::Text => {
                let mut s = String::new();
                let kind = match self.kind {
                    GroupKind::Pure => "pure",
                    GroupKind::Full => "full",
                };
                let _ = writeln!(
                    s,
                    "# {kind} presentation, n={} L={} N={}",
                    self.params.n(),
                    self.params.punctures(),
                    self.params.cones()
                );
                let _ = writeln!(s, "generators ({}): {}", gens.len(), gens.join(" "));
                let _ = writeln!(s, "relators ({}):", self.relators.len());
                for r in &self.relators {
                    let _ = writeln!(s, "[{}] {}", r.family, r.word);
                }
                s
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::perm_image;

    fn params(n: u32, l: u32, cones: u32) -> GroupParams {
        GroupParams::with_default_orders(n, l, cones)
    }

    #[test]
    fn single_marked_point_is_free() {
        let p = pure_presentation(&params(1, 2, 1));
        assert_eq!(p.generators, vec![Gen::B(1, 1), Gen::B(1, 2), Gen::C(1, 1)]);
        assert!(p.relators.is_empty());
        let f = full_presentation(&params(1, 1, 1)).unwrap();
        assert_eq!(f.generators, vec![Gen::T(1), Gen::U(1)]);
        assert!(f.relators.is_empty());
    }

    #[test]
    fn generator_counts() {
        assert_eq!(pure_presentation(&params(2, 1, 1)).generators.len(), 5);
        let f = full_presentation(&params(3, 1, 2)).unwrap();
        let names: Vec<String> = f.generators.iter().map(Gen::to_string).collect();
        assert_eq!(names, ["H1", "H2", "T1", "U1", "U2"]);
    }

    #[test]
    fn contains_cyclic_triple() {
        let p = pure_presentation(&params(3, 0, 0));
        let want: Word = "A(2,1) A(3,2) A(3,1) A(3,2)^-1 A(2,1)^-1 A(3,1)^-1"
            .parse()
            .unwrap();
        assert!(p.relator_words().any(|w| *w == want));
    }

    #[test]
    fn contains_braid_relator() {
        let f = full_presentation(&params(3, 0, 0)).unwrap();
        let want: Word = "H1 H2 H1 H2^-1 H1^-1 H2^-1".parse().unwrap();
        assert_eq!(f.relators[0].word, want);
    }

    #[test]
    fn full_rejects_n0() {
        assert!(full_presentation(&params(0, 1, 1)).is_err());
    }

    #[test]
    fn expansions() {
        let a = expand_abbrev(Power::new(Gen::A(2, 1), 1)).unwrap();
        assert_eq!(a.to_string(), "H1^2");
        let b = expand_abbrev(Power::new(Gen::B(1, 3), 1)).unwrap();
        assert_eq!(b.to_string(), "T3");
        let c = expand_abbrev(Power::new(Gen::C(3, 1), 1)).unwrap();
        assert_eq!(c.to_string(), "H2^-1 H1^-1 U1 H1 H2");
        let a = expand_abbrev(Power::new(Gen::A(4, 1), -2)).unwrap();
        assert_eq!(a.to_string(), "H3^-1 H2^-1 H1^-4 H2 H3");
        assert!(expand_abbrev(Power::new(Gen::H(1), 1)).is_err());
    }

    #[test]
    fn expanded_a_letters_are_pure() {
        for (i, j) in pairs(5) {
            let w = expand_abbrev(Power::new(Gen::A(j, i), 1)).unwrap();
            assert!(perm_image(&w, 5).unwrap().is_identity());
        }
    }

    #[test]
    fn empty_algebra_export() {
        let p = pure_presentation(&params(0, 0, 0));
        assert_eq!(p.export(ExportFormat::Algebra), "<  |  >\n");
    }

    #[test]
    fn export_ignores_cone_orders() {
        let a = GroupParams::new(3, 1, vec![2, 2]).unwrap();
        let b = GroupParams::new(3, 1, vec![5, 7]).unwrap();
        for fmt in [
            ExportFormat::Text,
            ExportFormat::Json,
            ExportFormat::Algebra,
        ] {
            assert_eq!(
                pure_presentation(&a).export(fmt),
                pure_presentation(&b).export(fmt)
            );
            assert_eq!(
                full_presentation(&a).unwrap().export(fmt),
                full_presentation(&b).unwrap().export(fmt)
            );
        }
    }
}
