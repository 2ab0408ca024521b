//! Chordal decompositions of a labelled n-gon: validation, enumeration,
//! chordal degree sequences and the dihedral action.
//!
//! Everything here is combinatorial; labels are 1-based positions on the
//! boundary cycle.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest polygon size accepted by [`enumerate_decompositions`].
pub const DEFAULT_MAX_N: usize = 14;

/// A diagonal `a∧b` with `a < b`, joining non-adjacent vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Chord {
    a: usize,
    b: usize,
}

impl Chord {
    /// Normalizes endpoint order and rejects boundary edges and bad labels.
    pub fn new(x: usize, y: usize, n: usize) -> Result<Self> {
        let (a, b) = (x.min(y), x.max(y));
        if a == 0 || b > n || b - a < 2 || (a == 1 && b == n) {
            return Err(Error::NotAChord { a: x, b: y, n });
        }
        Ok(Chord { a, b })
    }

    pub fn a(&self) -> usize {
        self.a
    }

    pub fn b(&self) -> usize {
        self.b
    }

    pub fn endpoints(&self) -> (usize, usize) {
        (self.a, self.b)
    }

    pub fn has_endpoint(&self, label: usize) -> bool {
        self.a == label || self.b == label
    }
}

impl fmt::Display for Chord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}∧{}", self.a, self.b)
    }
}

/// Whether two chords strictly interleave around the cycle. Chords sharing
/// an endpoint never cross.
pub fn chords_cross(c1: Chord, c2: Chord) -> bool {
    let (a, b) = c1.endpoints();
    let (c, d) = c2.endpoints();
    if a == c || a == d || b == c || b == d {
        return false;
    }
    let inside = |x: usize| a < x && x < b;
    inside(c) != inside(d)
}

/// `n - 3` pairwise non-crossing chords triangulating an n-gon, sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChordalDecomposition {
    n: usize,
    chords: Vec<Chord>,
}

impl ChordalDecomposition {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn chords(&self) -> &[Chord] {
        &self.chords
    }

    pub fn contains(&self, a: usize, b: usize) -> bool {
        let c = Chord { a: a.min(b), b: a.max(b) };
        self.chords.binary_search(&c).is_ok()
    }

    /// Builds from raw endpoint pairs.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let chords = pairs
            .iter()
            .map(|&(a, b)| Chord::new(a, b, n))
            .collect::<Result<Vec<_>>>()?;
        validate_decomposition(n, chords)
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.chords.iter().map(Chord::endpoints).collect()
    }
}

impl fmt::Display for ChordalDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, c) in self.chords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}{}", c.a, c.b)?;
        }
        write!(f, "}}")
    }
}

/// Accepts exactly `n - 3` distinct, pairwise non-crossing chords.
pub fn validate_decomposition(n: usize, chords: Vec<Chord>) -> Result<ChordalDecomposition> {
    if n < 3 {
        return Err(Error::SizeOutOfRange { n, min: 3, max: usize::MAX });
    }
    let mut chords = chords;
    for c in &chords {
        // Re-check against this n; chords may have been built for another.
        Chord::new(c.a, c.b, n)?;
    }
    chords.sort_unstable();
    if let Some(w) = chords.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::DuplicateChord { a: w[0].a, b: w[0].b });
    }
    if chords.len() != n - 3 {
        return Err(Error::ChordCount { n, expected: n - 3, got: chords.len() });
    }
    for (i, &c1) in chords.iter().enumerate() {
        for &c2 in &chords[i + 1..] {
            if chords_cross(c1, c2) {
                return Err(Error::ChordsCross { first: c1.endpoints(), second: c2.endpoints() });
            }
        }
    }
    Ok(ChordalDecomposition { n, chords })
}

/// All decompositions of the n-gon in lexicographic order of their sorted
/// chord lists, for `3 <= n <= DEFAULT_MAX_N`.
pub fn enumerate_decompositions(n: usize) -> Result<Vec<ChordalDecomposition>> {
    enumerate_decompositions_capped(n, DEFAULT_MAX_N)
}

/// As [`enumerate_decompositions`] with an explicit upper bound on `n`.
pub fn enumerate_decompositions_capped(n: usize, max_n: usize) -> Result<Vec<ChordalDecomposition>> {
    if n < 3 || n > max_n {
        return Err(Error::SizeOutOfRange { n, min: 3, max: max_n });
    }
    let labels: Vec<usize> = (1..=n).collect();
    let mut out: Vec<ChordalDecomposition> = triangulate(&labels)
        .into_iter()
        .map(|mut chords| {
            chords.sort_unstable();
            ChordalDecomposition { n, chords }
        })
        .collect();
    out.sort_unstable();
    Ok(out)
}

// Apex recursion on the base edge w1∧w2: each apex w_k splits off the
// left part (w1, w_k..w_r) and the right part (w2..w_k).
fn triangulate(w: &[usize]) -> Vec<Vec<Chord>> {
    let r = w.len();
    if r < 3 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for k in 2..r {
        let mut left_frame = vec![w[0]];
        left_frame.extend_from_slice(&w[k..]);
        let lefts = triangulate(&left_frame);
        let rights = triangulate(&w[1..=k]);
        let mut own = Vec::with_capacity(2);
        if k != r - 1 {
            own.push(Chord { a: w[0].min(w[k]), b: w[0].max(w[k]) });
        }
        if k != 2 {
            own.push(Chord { a: w[1].min(w[k]), b: w[1].max(w[k]) });
        }
        for l in &lefts {
            for rt in &rights {
                let mut chords = own.clone();
                chords.extend_from_slice(l);
                chords.extend_from_slice(rt);
                out.push(chords);
            }
        }
    }
    out
}

/// Catalan number `C_k`.
pub fn catalan(k: usize) -> u128 {
    (0..k).fold(1u128, |c, i| c * 2 * (2 * i as u128 + 1) / (i as u128 + 2))
}

/// Chordal degree sequence: the nonzero vertex degrees of the chord graph,
/// non-increasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DegreeSequence(Vec<usize>);

impl DegreeSequence {
    /// Sorts into canonical non-increasing order; zeros are dropped.
    pub fn new(mut degrees: Vec<usize>) -> Self {
        degrees.retain(|&d| d > 0);
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        DegreeSequence(degrees)
    }

    pub fn degrees(&self) -> &[usize] {
        &self.0
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    /// Whether this could be the sequence of some n-gon decomposition.
    pub fn is_admissible(&self, n: usize) -> bool {
        n >= 3 && self.sum() == 2 * (n - 3) && self.0.iter().all(|&d| d <= n - 3)
    }
}

/// Exponent notation with ascending values, e.g. `"1^3 3"`, `"1^2 2^2"`,
/// `"2^3"`. The empty sequence (triangle) prints as `""`.
impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
        for &d in &self.0 {
            *counts.entry(d).or_default() += 1;
        }
        let parts: Vec<String> = counts
            .into_iter()
            .map(|(d, k)| if k == 1 { d.to_string() } else { format!("{d}^{k}") })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

impl FromStr for DegreeSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BadDegreeSequence(s.to_string());
        let mut degrees = Vec::new();
        for token in s.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()) {
            let (value, count) = match token.split_once('^') {
                Some((v, k)) => (v, k.parse::<usize>().map_err(|_| bad())?),
                None => (token, 1),
            };
            let value: usize = value.parse().map_err(|_| bad())?;
            if value == 0 || count == 0 {
                return Err(bad());
            }
            degrees.extend(std::iter::repeat_n(value, count));
        }
        Ok(DegreeSequence::new(degrees))
    }
}

pub fn cds(d: &ChordalDecomposition) -> DegreeSequence {
    let mut degrees = vec![0usize; d.n + 1];
    for c in &d.chords {
        degrees[c.a] += 1;
        degrees[c.b] += 1;
    }
    DegreeSequence::new(degrees)
}

/// An element of the dihedral group `D_n` acting on labels 1..=n.
///
/// `Rotation(k)` sends `i` to `i + k`; `Reflection(k)` sends `i` to `k - i`
/// (mod n, with 0 read as n). `Reflection(0)` is negation mod n.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DihedralKind {
    Rotation,
    Reflection,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DihedralElement {
    n: usize,
    kind: DihedralKind,
    shift: usize,
}

impl DihedralElement {
    pub fn rotation(n: usize, k: usize) -> Self {
        DihedralElement { n, kind: DihedralKind::Rotation, shift: k % n }
    }

    pub fn reflection(n: usize, k: usize) -> Self {
        DihedralElement { n, kind: DihedralKind::Reflection, shift: k % n }
    }

    pub fn identity(n: usize) -> Self {
        Self::rotation(n, 0)
    }

    /// All `2n` elements: rotations first, then reflections.
    pub fn all(n: usize) -> Vec<Self> {
        (0..n)
            .map(|k| Self::rotation(n, k))
            .chain((0..n).map(|k| Self::reflection(n, k)))
            .collect()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> DihedralKind {
        self.kind
    }

    pub fn shift(&self) -> usize {
        self.shift
    }

    /// Image of a 1-based label.
    pub fn apply(&self, label: usize) -> usize {
        let n = self.n;
        let i = label % n;
        let img = match self.kind {
            DihedralKind::Rotation => (i + self.shift) % n,
            DihedralKind::Reflection => (self.shift + n - i) % n,
        };
        if img == 0 {
            n
        } else {
            img
        }
    }

    /// `self` followed by `other`: `i ↦ other(self(i))`.
    pub fn then(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "dihedral groups of different order");
        let n = self.n;
        let p1 = other.apply(self.apply(1));
        let p2 = other.apply(self.apply(2));
        if p2 % n == (p1 % n + 1) % n {
            Self::rotation(n, p1 + n - 1)
        } else {
            Self::reflection(n, p1 + 1)
        }
    }

    pub fn inverse(&self) -> Self {
        match self.kind {
            DihedralKind::Rotation => Self::rotation(self.n, self.n - self.shift),
            DihedralKind::Reflection => *self,
        }
    }

    pub fn permutation(&self) -> Vec<usize> {
        (1..=self.n).map(|i| self.apply(i)).collect()
    }
}

/// Relabels chord endpoints by `g` and renormalizes.
pub fn dihedral_apply(d: &ChordalDecomposition, g: &DihedralElement) -> ChordalDecomposition {
    assert_eq!(d.n, g.n, "decomposition and group element disagree on n");
    let mut chords: Vec<Chord> = d
        .chords
        .iter()
        .map(|c| {
            let (x, y) = (g.apply(c.a), g.apply(c.b));
            Chord { a: x.min(y), b: x.max(y) }
        })
        .collect();
    chords.sort_unstable();
    ChordalDecomposition { n: d.n, chords }
}

/// The distinct images of a decomposition under `D_n`, each with the number
/// of group elements producing it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orbit {
    pub n: usize,
    pub multiplicities: BTreeMap<ChordalDecomposition, usize>,
}

impl Orbit {
    pub fn len(&self) -> usize {
        self.multiplicities.len()
    }

    pub fn is_empty(&self) -> bool {
        self.multiplicities.is_empty()
    }

    pub fn members(&self) -> impl Iterator<Item = &ChordalDecomposition> {
        self.multiplicities.keys()
    }

    /// The lexicographically smallest member.
    pub fn representative(&self) -> &ChordalDecomposition {
        self.multiplicities.keys().next().expect("orbits are never empty")
    }

    pub fn group_order(&self) -> usize {
        2 * self.n
    }
}

pub fn orbit(d: &ChordalDecomposition) -> Orbit {
    let mut multiplicities = BTreeMap::new();
    for g in DihedralElement::all(d.n) {
        *multiplicities.entry(dihedral_apply(d, &g)).or_insert(0) += 1;
    }
    Orbit { n: d.n, multiplicities }
}

/// Partitions the decompositions of the n-gon into dihedral orbits, ordered
/// by representative.
pub fn orbits(n: usize) -> Result<Vec<Orbit>> {
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for d in enumerate_decompositions(n)? {
        if seen.contains(&d) {
            continue;
        }
        let o = orbit(&d);
        seen.extend(o.members().cloned());
        out.push(o);
    }
    Ok(out)
}
