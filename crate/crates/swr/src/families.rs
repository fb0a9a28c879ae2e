//! Deterministic generators for the named digraph families, each paired
//! with the spectral and walk-regularity facts the construction guarantees.
//!
//! Facts returned by [`FamilySpec::expected_facts`] are golden data: the
//! test suite recomputes everything from the built digraph and asserts
//! equality, so a generator and the analysis code check each other.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::algebra::{Int, IntPoly};
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::spectral::{DiagClass, SrdParameters};

/// A family name with parameters, parsable from the CLI mini-language
/// (`cycle:g=6`, `lvl-odd:m=3,k=2`, `mate:1`,
/// `blowup-complement:base=mate:1,q=3`, ...). Nested `base` values that
/// themselves contain commas are parenthesized:
/// `line:base=(lvl-odd:m=3,k=2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    /// Directed g-cycle on Z_g.
    DirectedCycle { g: usize },
    /// Coclique extension of a directed cycle: consecutive classes of the
    /// given sizes, completely joined class i -> class i+1 (mod g).
    CocliqueExtension { sizes: Vec<usize> },
    /// Directed l-cycle plus the chord 02, and for `chords = 2` also 13.
    ExceptionalChord { l: usize, chords: usize },
    /// (-k)-circulant on Z_n, n = k^m + 1, m odd: u -> v iff
    /// ku + v mod n in {1,...,k}. Satisfies A^m = J - I.
    LamVanLintOdd { m: usize, k: usize },
    /// Same adjacency rule on n = k^m - 1 vertices, m even: A^m = J + I.
    LamVanLintEven { m: usize, k: usize },
    /// The 2-regular strongly regular digraph on six vertices.
    SixVertexSrd,
    /// The three 2-regular six-vertex digraphs sharing its spectrum
    /// without being strongly regular; index in 1..=3, and #3 is the
    /// reverse of #2.
    SixVertexMate(usize),
    /// Quadratic-residue tournament on Z_n, n prime, n = 3 (mod 4):
    /// u -> v iff v - u is a nonzero square. A doubly regular tournament;
    /// this concrete generator is one standard choice for that class.
    PaleyTournament { n: usize },
    /// A tensor J_q: each vertex split into q copies, arcs between all
    /// copy pairs of an original arc.
    TensorBlowup { base: Box<FamilySpec>, q: usize },
    /// J_{qn} - I - A tensor J_q: the complement of the blowup, loops
    /// removed.
    ComplementBlowup { base: Box<FamilySpec>, q: usize },
    /// Line digraph of the base digraph.
    LineDigraph { base: Box<FamilySpec> },
}

/// Expected shape of the set of l > 1 for which the digraph is strongly
/// l-walk-regular.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExponentExpectation {
    /// Exactly the l with l mod modulus in residues.
    Residues { modulus: usize, residues: Vec<usize> },
    /// Exactly this finite set, at any lmax beyond its maximum.
    Exactly(Vec<usize>),
    /// At least these values; others not ruled out.
    Contains(Vec<usize>),
    /// No l > 1 at all.
    Empty,
}

impl ExponentExpectation {
    /// The expected exponent list restricted to (1, lmax], or None when
    /// only a lower bound is known.
    pub fn expected_values(&self, lmax: usize) -> Option<Vec<usize>> {
        match self {
            ExponentExpectation::Residues { modulus, residues } => Some(
                (2..=lmax)
                    .filter(|l| residues.contains(&(l % modulus)))
                    .collect(),
            ),
            ExponentExpectation::Exactly(v) => {
                Some(v.iter().copied().filter(|l| *l <= lmax).collect())
            }
            ExponentExpectation::Contains(_) => None,
            ExponentExpectation::Empty => Some(vec![]),
        }
    }
}

/// Facts guaranteed by a family construction; `None` fields are simply not
/// asserted for that family.
#[derive(Clone, Debug, Default)]
pub struct FactSheet {
    pub n: usize,
    pub degree: Option<usize>,
    pub minpoly: Option<IntPoly>,
    /// Monic Hoffman polynomial (minimal polynomial with the Perron factor
    /// removed); only for strongly connected regular families.
    pub hoffman_monic: Option<IntPoly>,
    pub diag_class: Option<DiagClass>,
    pub exponents: Option<ExponentExpectation>,
    pub srd: Option<SrdParameters>,
    pub walk_regular: Option<bool>,
}

impl FamilySpec {
    pub fn build(&self) -> Result<Digraph> {
        match self {
            FamilySpec::DirectedCycle { g } => {
                if *g < 2 {
                    return Err(Error::InvalidParameter("cycle needs g >= 2".into()));
                }
                Digraph::from_adjacency(*g, |u, v| (u + 1) % g == v)
            }
            FamilySpec::CocliqueExtension { sizes } => {
                let g = sizes.len();
                if g < 2 || sizes.iter().any(|s| *s == 0) {
                    return Err(Error::InvalidParameter(
                        "coclique extension needs g >= 2 classes of size >= 1".into(),
                    ));
                }
                let n: usize = sizes.iter().sum();
                let mut class = vec![0usize; n];
                let mut v = 0;
                for (i, s) in sizes.iter().enumerate() {
                    for _ in 0..*s {
                        class[v] = i;
                        v += 1;
                    }
                }
                Digraph::from_adjacency(n, |u, v| (class[u] + 1) % g == class[v])
            }
            FamilySpec::ExceptionalChord { l, chords } => {
                if *l < 3 || !(1..=2).contains(chords) {
                    return Err(Error::InvalidParameter(
                        "chord digraph needs l >= 3 and 1 or 2 chords".into(),
                    ));
                }
                let mut edges: Vec<(usize, usize)> = (0..*l).map(|u| (u, (u + 1) % l)).collect();
                edges.push((0, 2 % *l));
                if *chords == 2 {
                    edges.push((1, 3 % *l));
                }
                // for l = 3 the chords duplicate cycle arcs reversed; dedup
                edges.sort_unstable();
                edges.dedup();
                Digraph::from_edges(*l, &edges)
            }
            FamilySpec::LamVanLintOdd { m, k } => {
                if *m < 1 || m % 2 == 0 || *k < 1 {
                    return Err(Error::InvalidParameter(
                        "unique-walk construction needs odd m >= 1 and k >= 1".into(),
                    ));
                }
                let n = k.pow(*m as u32) + 1;
                Digraph::from_adjacency(n, |u, v| {
                    let r = (k * u + v) % n;
                    (1..=*k).contains(&r)
                })
            }
            FamilySpec::LamVanLintEven { m, k } => {
                if *m < 2 || m % 2 == 1 || *k < 2 {
                    return Err(Error::InvalidParameter(
                        "even-m construction needs even m >= 2 and k >= 2".into(),
                    ));
                }
                let n = k.pow(*m as u32) - 1;
                Digraph::from_adjacency(n, |u, v| {
                    let r = (k * u + v) % n;
                    (1..=*k).contains(&r)
                })
            }
            FamilySpec::SixVertexSrd => Digraph::from_edges(
                6,
                &[
                    (0, 4),
                    (0, 5),
                    (1, 4),
                    (1, 5),
                    (2, 1),
                    (2, 3),
                    (3, 0),
                    (3, 2),
                    (4, 1),
                    (4, 3),
                    (5, 0),
                    (5, 2),
                ],
            ),
            FamilySpec::SixVertexMate(i) => {
                let mate2 = || {
                    let dir = [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)];
                    let bid = [(1, 3), (3, 1), (2, 5), (5, 2), (4, 5), (5, 4)];
                    Digraph::from_edges(6, &[&dir[..], &bid[..]].concat())
                };
                match i {
                    1 => {
                        let cyc = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)];
                        let bid = [(0, 2), (2, 0), (1, 4), (4, 1), (3, 5), (5, 3)];
                        Digraph::from_edges(6, &[&cyc[..], &bid[..]].concat())
                    }
                    2 => mate2(),
                    3 => Ok(mate2()?.reverse()),
                    _ => Err(Error::InvalidParameter("mate index must be 1, 2, or 3".into())),
                }
            }
            FamilySpec::PaleyTournament { n } => {
                if *n < 3 || n % 4 != 3 || !is_prime(*n) {
                    return Err(Error::InvalidParameter(
                        "tournament needs a prime n with n = 3 (mod 4)".into(),
                    ));
                }
                let mut is_square = vec![false; *n];
                for x in 1..*n {
                    is_square[x * x % n] = true;
                }
                Digraph::from_adjacency(*n, |u, v| u != v && is_square[(n + v - u) % n])
            }
            FamilySpec::TensorBlowup { base, q } => base.build()?.tensor_allones(*q),
            FamilySpec::ComplementBlowup { base, q } => base.build()?.complement_blowup(*q),
            FamilySpec::LineDigraph { base } => Ok(base.build()?.line_digraph()),
        }
    }

    /// Golden facts for the family instance; errors on invalid parameters.
    pub fn expected_facts(&self) -> Result<FactSheet> {
        // validate parameters exactly as build does
        let built = self.build()?;
        let mut f = FactSheet { n: built.n(), ..FactSheet::default() };
        match self {
            FamilySpec::DirectedCycle { g } => {
                f.degree = Some(1);
                // minimal polynomial x^g - 1, Hoffman 1 + x + ... + x^(g-1)
                let mut mp = vec![0i64; g + 1];
                mp[0] = -1;
                mp[*g] = 1;
                f.minpoly = Some(IntPoly::from_i64(&mp));
                f.hoffman_monic = Some(IntPoly::new(vec![Int::from(1); *g]));
                f.diag_class = Some(DiagClass::Diagonalizable);
                // Cycles of length <= 3 have diameter <= 2, so every power
                // of A is constant on each vertex-pair class.
                f.exponents = Some(if *g <= 3 {
                    ExponentExpectation::Residues { modulus: 1, residues: vec![0] }
                } else {
                    ExponentExpectation::Residues { modulus: *g, residues: vec![0, 1 % *g] }
                });
            }
            FamilySpec::CocliqueExtension { sizes } => {
                let g = sizes.len();
                if sizes.iter().any(|s| *s > 1) {
                    // A^(g+1) = lambda A with lambda the product of the
                    // class sizes; minimal polynomial x^(g+1) - lambda x
                    let lambda: usize = sizes.iter().product();
                    let mut mp = vec![Int::zero(); g + 2];
                    mp[1] = -Int::from(lambda as i64);
                    mp[g + 1] = Int::from(1);
                    f.minpoly = Some(IntPoly::new(mp));
                    f.diag_class = Some(DiagClass::Diagonalizable);
                    // With two equal parts the digraph is a complete
                    // bipartite graph whose classes are the bipartition; A^l
                    // is then constant on each class for every l.
                    f.exponents = Some(if g == 2 && sizes[0] == sizes[1] {
                        ExponentExpectation::Residues { modulus: 1, residues: vec![0] }
                    } else {
                        ExponentExpectation::Residues { modulus: g, residues: vec![1 % g] }
                    });
                } else {
                    // degenerate to the directed g-cycle
                    f.exponents = Some(if g <= 3 {
                        ExponentExpectation::Residues { modulus: 1, residues: vec![0] }
                    } else {
                        ExponentExpectation::Residues { modulus: g, residues: vec![0, 1 % g] }
                    });
                }
            }
            FamilySpec::ExceptionalChord { l, chords } => {
                if *l > 3 || *chords == 1 {
                    // minimal polynomial x^l - c x - 1; the only exponent
                    // is l itself, with certificate (c, 0, 1)
                    let mut mp = vec![0i64; l + 1];
                    mp[0] = -1;
                    mp[1] = -(*chords as i64);
                    mp[*l] = 1;
                    f.minpoly = Some(IntPoly::from_i64(&mp));
                    f.exponents = Some(ExponentExpectation::Exactly(vec![*l]));
                } else {
                    // l = 3 with two chords is K3 minus an edge
                    f.exponents = Some(ExponentExpectation::Exactly(vec![3]));
                }
            }
            FamilySpec::LamVanLintOdd { m, k } => {
                f.degree = Some(*k);
                // A^m = J - I; Hoffman polynomial x^m + 1
                let mut h = vec![0i64; m + 1];
                h[0] = 1;
                h[*m] = 1;
                f.hoffman_monic = Some(IntPoly::from_i64(&h));
                f.diag_class = Some(DiagClass::Diagonalizable);
                f.exponents = Some(ExponentExpectation::Residues {
                    modulus: *m,
                    residues: vec![0, 1 % *m],
                });
            }
            FamilySpec::LamVanLintEven { m, k } => {
                f.degree = Some(*k);
                // A^m = J + I; Hoffman polynomial x^m - 1, except in the
                // degenerate case m = 2, k = 2 where n = 3 gives the
                // complete digraph (diameter 1, Hoffman polynomial x + 1)
                if (*m, *k) == (2, 2) {
                    f.hoffman_monic = Some(IntPoly::from_i64(&[1, 1]));
                } else {
                    let mut h = vec![0i64; m + 1];
                    h[0] = -1;
                    h[*m] = 1;
                    f.hoffman_monic = Some(IntPoly::from_i64(&h));
                }
                f.diag_class = Some(DiagClass::Diagonalizable);
                f.exponents = Some(ExponentExpectation::Residues {
                    modulus: *m,
                    residues: vec![0, 1 % *m],
                });
                if *m == 2 {
                    f.srd = Some(SrdParameters {
                        n: k * k - 1,
                        k: *k,
                        t: Int::from(2),
                        lambda: Int::from(1),
                        mu: Int::from(1),
                    });
                }
            }
            FamilySpec::SixVertexSrd => {
                f.degree = Some(2);
                f.diag_class = Some(DiagClass::Diagonalizable);
                f.srd = Some(SrdParameters {
                    n: 6,
                    k: 2,
                    t: Int::from(1),
                    lambda: Int::from(0),
                    mu: Int::from(1),
                });
                f.exponents = Some(ExponentExpectation::Residues {
                    modulus: 1,
                    residues: vec![0],
                });
                f.walk_regular = Some(true);
            }
            FamilySpec::SixVertexMate(i) => {
                f.degree = Some(2);
                f.hoffman_monic = Some(IntPoly::from_i64(&[0, 0, 1, 1]));
                f.diag_class = Some(DiagClass::DTheta(Int::zero()));
                f.exponents = Some(ExponentExpectation::Empty);
                f.walk_regular = Some(*i == 1);
            }
            FamilySpec::PaleyTournament { n } => {
                f.degree = Some((n - 1) / 2);
                f.diag_class = Some(DiagClass::Diagonalizable);
                f.srd = Some(SrdParameters {
                    n: *n,
                    k: (n - 1) / 2,
                    t: Int::zero(),
                    lambda: Int::from(((n - 3) / 4) as i64),
                    mu: Int::from(((n + 1) / 4) as i64),
                });
                f.exponents = Some(ExponentExpectation::Residues {
                    modulus: 1,
                    residues: vec![0],
                });
            }
            FamilySpec::TensorBlowup { base, .. } | FamilySpec::LineDigraph { base } => {
                // a blowup or line digraph adds eigenvalue 0; when the base
                // satisfies A^m in span{I, J} the result is strongly
                // l-walk-regular exactly for l = 1 (mod m)
                if let FamilySpec::LamVanLintOdd { m, .. } | FamilySpec::LamVanLintEven { m, .. } =
                    base.as_ref()
                {
                    f.exponents = Some(ExponentExpectation::Residues {
                        modulus: *m,
                        residues: vec![1 % *m],
                    });
                }
            }
            FamilySpec::ComplementBlowup { base, q } => match base.as_ref() {
                FamilySpec::SixVertexMate(_) if *q == 3 => {
                    f.degree = Some(11);
                    f.hoffman_monic = Some(IntPoly::from_i64(&[-2, -3, 0, 1]));
                    f.diag_class = Some(DiagClass::DTheta(Int::from(-1)));
                    f.exponents = Some(ExponentExpectation::Exactly(vec![3]));
                }
                FamilySpec::PaleyTournament { .. } if *q == 3 => {
                    // complement blowup of a doubly regular tournament is
                    // strongly 3-walk-regular
                    f.exponents = Some(ExponentExpectation::Contains(vec![3]));
                    f.diag_class = Some(DiagClass::Diagonalizable);
                }
                _ => {}
            },
        }
        Ok(f)
    }
}

fn is_prime(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        let base_str = |b: &FamilySpec| {
            let s = b.to_string();
            if s.contains(',') {
                format!("({s})")
            } else {
                s
            }
        };
        match self {
            FamilySpec::DirectedCycle { g } => write!(out, "cycle:g={g}"),
            FamilySpec::CocliqueExtension { sizes } => {
                let s: Vec<String> = sizes.iter().map(|x| x.to_string()).collect();
                write!(out, "coclique:sizes={}", s.join("."))
            }
            FamilySpec::ExceptionalChord { l, chords } => {
                write!(out, "chord:l={l},chords={chords}")
            }
            FamilySpec::LamVanLintOdd { m, k } => write!(out, "lvl-odd:m={m},k={k}"),
            FamilySpec::LamVanLintEven { m, k } => write!(out, "lvl-even:m={m},k={k}"),
            FamilySpec::SixVertexSrd => write!(out, "srd6"),
            FamilySpec::SixVertexMate(i) => write!(out, "mate:{i}"),
            FamilySpec::PaleyTournament { n } => write!(out, "paley:n={n}"),
            FamilySpec::TensorBlowup { base, q } => {
                write!(out, "blowup-tensor:base={},q={q}", base_str(base))
            }
            FamilySpec::ComplementBlowup { base, q } => {
                write!(out, "blowup-complement:base={},q={q}", base_str(base))
            }
            FamilySpec::LineDigraph { base } => write!(out, "line:base={}", base_str(base)),
        }
    }
}

/// Split on commas that are not nested inside parentheses.
fn split_top_level(s: &str) -> Vec<&str> {
    let mut parts = vec![];
    let mut depth = 0usize;
    let mut start = 0usize;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => {
                parts.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&s[start..]);
    parts
}

fn strip_parens(s: &str) -> &str {
    if s.starts_with('(') && s.ends_with(')') {
        &s[1..s.len() - 1]
    } else {
        s
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<FamilySpec> {
        let err = |msg: String| Error::Parse(msg);
        let (name, rest) = match s.find(':') {
            Some(i) => (&s[..i], &s[i + 1..]),
            None => (s, ""),
        };
        let mut params: Vec<(Option<&str>, &str)> = vec![];
        if !rest.is_empty() {
            for part in split_top_level(rest) {
                match part.find('=') {
                    Some(i) => params.push((Some(&part[..i]), &part[i + 1..])),
                    None => params.push((None, part)),
                }
            }
        }
        // base values may contain '=' inside; reassemble by key lookup
        let get = |key: &str| -> Option<&str> {
            params
                .iter()
                .find(|(k, _)| *k == Some(key))
                .map(|(_, v)| *v)
        };
        let get_usize = |key: &str| -> Result<usize> {
            let v = get(key).ok_or_else(|| err(format!("{name}: missing parameter {key}")))?;
            v.parse::<usize>()
                .map_err(|_| err(format!("{name}: {key} must be a nonnegative integer")))
        };
        match name {
            "cycle" => Ok(FamilySpec::DirectedCycle { g: get_usize("g")? }),
            "coclique" => {
                let raw = get("sizes")
                    .ok_or_else(|| err("coclique: missing parameter sizes".into()))?;
                let sizes: std::result::Result<Vec<usize>, _> =
                    raw.split('.').map(|x| x.parse::<usize>()).collect();
                let sizes =
                    sizes.map_err(|_| err("coclique: sizes must be dot-separated integers".into()))?;
                Ok(FamilySpec::CocliqueExtension { sizes })
            }
            "chord" => Ok(FamilySpec::ExceptionalChord {
                l: get_usize("l")?,
                chords: get_usize("chords")?,
            }),
            "lvl-odd" => Ok(FamilySpec::LamVanLintOdd { m: get_usize("m")?, k: get_usize("k")? }),
            "lvl-even" => Ok(FamilySpec::LamVanLintEven { m: get_usize("m")?, k: get_usize("k")? }),
            "srd6" => Ok(FamilySpec::SixVertexSrd),
            "mate" => {
                let v = params
                    .first()
                    .map(|(_, v)| *v)
                    .ok_or_else(|| err("mate: missing index".into()))?;
                let i = v
                    .parse::<usize>()
                    .map_err(|_| err("mate: index must be 1, 2, or 3".into()))?;
                Ok(FamilySpec::SixVertexMate(i))
            }
            "paley" => Ok(FamilySpec::PaleyTournament { n: get_usize("n")? }),
            "blowup-tensor" | "blowup-complement" => {
                let base = get("base")
                    .ok_or_else(|| err(format!("{name}: missing parameter base")))?;
                let base = Box::new(strip_parens(base).parse::<FamilySpec>()?);
                let q = get_usize("q")?;
                if name == "blowup-tensor" {
                    Ok(FamilySpec::TensorBlowup { base, q })
                } else {
                    Ok(FamilySpec::ComplementBlowup { base, q })
                }
            }
            "line" => {
                let base = get("base").ok_or_else(|| err("line: missing parameter base".into()))?;
                Ok(FamilySpec::LineDigraph {
                    base: Box::new(strip_parens(base).parse::<FamilySpec>()?),
                })
            }
            _ => Err(err(format!("unknown family '{name}'"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral;

    fn facts_match(spec: &FamilySpec, lmax: usize) {
        let g = spec.build().unwrap();
        let facts = spec.expected_facts().unwrap();
        assert_eq!(g.n(), facts.n, "{spec}");
        let p = spectral::profile(&g).unwrap();
        if let Some(k) = facts.degree {
            assert_eq!(p.degree, Some(k), "{spec}");
        }
        if let Some(mp) = &facts.minpoly {
            assert_eq!(&p.minpoly, mp, "{spec}");
        }
        if let Some(h) = &facts.hoffman_monic {
            assert_eq!(&p.hoffman.as_ref().unwrap().monic, h, "{spec}");
        }
        if let Some(d) = &facts.diag_class {
            assert_eq!(&p.diag_class, d, "{spec}");
        }
        if let Some(srd) = &facts.srd {
            assert_eq!(spectral::is_srd(&g).as_ref(), Some(srd), "{spec}");
        }
        if let Some(wr) = facts.walk_regular {
            assert_eq!(spectral::is_walk_regular(&g, 6).unwrap(), wr, "{spec}");
        }
        if let Some(exp) = &facts.exponents {
            let got = crate::engine::exponent_set(&g, lmax).unwrap().values();
            match exp.expected_values(lmax) {
                Some(want) => assert_eq!(got, want, "{spec}"),
                None => {
                    if let ExponentExpectation::Contains(v) = exp {
                        for l in v {
                            assert!(got.contains(l), "{spec}: missing exponent {l}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn golden_facts_small_families() {
        facts_match(&FamilySpec::DirectedCycle { g: 6 }, 13);
        facts_match(&FamilySpec::CocliqueExtension { sizes: vec![2, 1, 1] }, 13);
        facts_match(&FamilySpec::ExceptionalChord { l: 5, chords: 1 }, 16);
        facts_match(&FamilySpec::ExceptionalChord { l: 5, chords: 2 }, 16);
        facts_match(&FamilySpec::LamVanLintOdd { m: 3, k: 2 }, 13);
        facts_match(&FamilySpec::LamVanLintEven { m: 2, k: 2 }, 9);
        facts_match(&FamilySpec::LamVanLintEven { m: 2, k: 3 }, 9);
        facts_match(&FamilySpec::SixVertexSrd, 8);
        for i in 1..=3 {
            facts_match(&FamilySpec::SixVertexMate(i), 10);
        }
        facts_match(&FamilySpec::PaleyTournament { n: 7 }, 8);
        facts_match(
            &FamilySpec::LineDigraph { base: Box::new(FamilySpec::LamVanLintOdd { m: 3, k: 2 }) },
            10,
        );
        facts_match(
            &FamilySpec::TensorBlowup {
                base: Box::new(FamilySpec::LamVanLintOdd { m: 3, k: 2 }),
                q: 2,
            },
            10,
        );
        facts_match(
            &FamilySpec::ComplementBlowup { base: Box::new(FamilySpec::SixVertexMate(1)), q: 3 },
            10,
        );
    }

    #[test]
    fn lam_van_lint_power_identities() {
        // A^3 = J - I on nine vertices
        let g = FamilySpec::LamVanLintOdd { m: 3, k: 2 }.build().unwrap();
        let a = g.adjacency_matrix();
        let j = crate::algebra::IntMatrix::ones(9);
        let i = crate::algebra::IntMatrix::identity(9);
        assert_eq!(a.pow(3).unwrap(), j.sub(&i).unwrap());
        // A^2 = J + I on three vertices (k = 2, m = 2)
        let g = FamilySpec::LamVanLintEven { m: 2, k: 2 }.build().unwrap();
        let a = g.adjacency_matrix();
        let j = crate::algebra::IntMatrix::ones(3);
        let i = crate::algebra::IntMatrix::identity(3);
        assert_eq!(a.pow(2).unwrap(), j.add(&i).unwrap());
    }

    #[test]
    fn lam_van_lint_reach_bound() {
        // every vertex reaches at most 1 + k + ... + k^(m-1) < n vertices
        // within m - 1 steps, so the Hoffman degree is exactly m
        let (m, k) = (3usize, 2usize);
        let g = FamilySpec::LamVanLintOdd { m, k }.build().unwrap();
        let n = g.n();
        let a = g.adjacency_matrix();
        let mut reach = crate::algebra::IntMatrix::identity(n);
        let mut sum = crate::algebra::IntMatrix::identity(n);
        for _ in 0..m - 1 {
            reach = reach.mul(&a).unwrap();
            sum = sum.add(&reach).unwrap();
        }
        let bound = (0..m).map(|i| k.pow(i as u32)).sum::<usize>();
        assert!(bound < n);
        for u in 0..n {
            let reached = (0..n)
                .filter(|v| !num_traits::Zero::is_zero(sum.get(u, *v)))
                .count();
            assert!(reached <= bound);
        }
    }

    #[test]
    fn chord_three_with_two_chords_is_k3_minus_edge() {
        let g = FamilySpec::ExceptionalChord { l: 3, chords: 2 }.build().unwrap();
        // complete digraph on 3 vertices minus the edge 21
        assert_eq!(g.edge_count(), 5);
        assert!(!g.has_edge(2, 1));
    }

    #[test]
    fn paley_tournament_identity() {
        // A + A^T = J - I
        let g = FamilySpec::PaleyTournament { n: 7 }.build().unwrap();
        let a = g.adjacency_matrix();
        let lhs = a.add(&a.transpose()).unwrap();
        let rhs = crate::algebra::IntMatrix::ones(7)
            .sub(&crate::algebra::IntMatrix::identity(7))
            .unwrap();
        assert_eq!(lhs, rhs);
        assert!(FamilySpec::PaleyTournament { n: 9 }.build().is_err());
        assert!(FamilySpec::PaleyTournament { n: 13 }.build().is_err());
    }

    #[test]
    fn mates_two_and_three_are_reverses() {
        let m2 = FamilySpec::SixVertexMate(2).build().unwrap();
        let m3 = FamilySpec::SixVertexMate(3).build().unwrap();
        assert_eq!(m3, m2.reverse());
    }

    #[test]
    fn parse_roundtrip() {
        let specs = [
            "cycle:g=6",
            "coclique:sizes=2.1.1",
            "chord:l=5,chords=1",
            "lvl-odd:m=3,k=2",
            "lvl-even:m=2,k=3",
            "srd6",
            "mate:1",
            "paley:n=7",
            "blowup-complement:base=mate:1,q=3",
            "blowup-tensor:base=(lvl-odd:m=3,k=2),q=2",
            "line:base=(lvl-odd:m=3,k=2)",
        ];
        for s in specs {
            let spec: FamilySpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
            let again: FamilySpec = spec.to_string().parse().unwrap();
            assert_eq!(again, spec);
        }
        assert!("nonsense:x=1".parse::<FamilySpec>().is_err());
        assert!("cycle".parse::<FamilySpec>().is_err());
    }
}
