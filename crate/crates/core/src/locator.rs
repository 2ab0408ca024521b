//! Region identification by the recursive apex-selection procedure, the
//! resulting parsing tree, the triangle/chord sign-code table, and point
//! location by sign codes.
//!
//! Starting from the base edge `1∧2` of the whole polygon, each step picks
//! the apex `d` of the triangle on the current base, emits that triangle,
//! and recurses on the sub-polygon left of `w1∧d` (path letter `L`) and the
//! one right of `w2∧d` (path letter `R`). Sub-polygons with two vertices
//! are terminal and become leaves (boundary edges).

use std::fmt;

use crate::decomposition::{Chord, ChordalDecomposition};
use crate::error::{Error, Result};
use crate::geometry::{areal_value, OrientedSegment, OrientedTriangle, Point2, Polygon};
use crate::scalar::Scalar;

/// Input to one recursive step: vertex labels listed counterclockwise from
/// the base `w1∧w2`, the chords interior to this sub-polygon, and the path
/// word from the root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubPolygonFrame {
    pub vertices: Vec<usize>,
    pub chords: Vec<Chord>,
    pub path: String,
}

impl SubPolygonFrame {
    pub fn root(d: &ChordalDecomposition) -> Self {
        SubPolygonFrame {
            vertices: (1..=d.n()).collect(),
            chords: d.chords().to_vec(),
            path: String::new(),
        }
    }

    pub fn is_terminal(&self) -> bool {
        self.vertices.len() == 2
    }

    pub fn base(&self) -> (usize, usize) {
        (self.vertices[0], self.vertices[1])
    }

    fn has_chord(&self, x: usize, y: usize) -> bool {
        self.chords.iter().any(|c| c.has_endpoint(x) && c.has_endpoint(y))
    }
}

/// How the apex relates to the base of its frame.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ApexCase {
    /// Both `w1∧d` and `w2∧d` are chords.
    BothChords,
    /// Only `w2∧d` is a chord; `d` is the last vertex and `d∧w1` is a leaf.
    LeftBoundary,
    /// Only `w1∧d` is a chord; `d = w3` and `w2∧w3` is a leaf.
    RightBoundary,
    /// The frame is a triangle; both children are leaves.
    Triangle,
}

impl ApexCase {
    pub fn tag(self) -> &'static str {
        match self {
            ApexCase::BothChords => "a",
            ApexCase::LeftBoundary => "bL",
            ApexCase::RightBoundary => "bR",
            ApexCase::Triangle => "t",
        }
    }
}

impl fmt::Display for ApexCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Finds the unique apex of the triangle on the frame's base.
///
/// Returns the apex label and its case. Fails with an invariant error when
/// the frame is terminal or the apex is missing or ambiguous, which cannot
/// happen for a validated decomposition.
pub fn select_apex(frame: &SubPolygonFrame) -> Result<(usize, ApexCase)> {
    let w = &frame.vertices;
    let r = w.len();
    if r < 3 {
        return Err(Error::Invariant(format!("apex requested for terminal frame {w:?}")));
    }
    if r == 3 {
        return Ok((w[2], ApexCase::Triangle));
    }
    let mut found = None;
    for (idx, &d) in w.iter().enumerate().skip(2) {
        let left_chord = frame.has_chord(w[0], d);
        let right_chord = frame.has_chord(w[1], d);
        let left_ok = left_chord || idx == r - 1;
        let right_ok = right_chord || idx == 2;
        if !(left_ok && right_ok) {
            continue;
        }
        let case = match (left_chord, right_chord) {
            (true, true) => ApexCase::BothChords,
            (false, true) => ApexCase::LeftBoundary,
            (true, false) => ApexCase::RightBoundary,
            (false, false) => unreachable!("r > 3 leaves no vertex adjacent to both"),
        };
        if found.is_some() {
            return Err(Error::Invariant(format!("ambiguous apex in frame {w:?}")));
        }
        found = Some((d, case));
    }
    found.ok_or_else(|| Error::Invariant(format!("no apex in frame {w:?}")))
}

/// An internal node: the triangle selected by one recursive step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeNode {
    pub path: String,
    pub frame: Vec<usize>,
    pub base: (usize, usize),
    pub apex: usize,
    pub case: ApexCase,
    /// Counterclockwise, smallest label first.
    pub triangle: OrientedTriangle,
}

/// A leaf: a boundary edge, oriented counterclockwise. The initial base
/// `1∧2` has the empty path; the others carry the path of the terminal
/// child that produced them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Leaf {
    pub path: String,
    pub edge: (usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsingTree {
    n: usize,
    nodes: Vec<TreeNode>,
    leaves: Vec<Leaf>,
}

impl ParsingTree {
    /// Runs the recursion on a decomposition. Purely combinatorial.
    pub fn build(d: &ChordalDecomposition) -> Result<Self> {
        let mut tree = ParsingTree {
            n: d.n(),
            nodes: Vec::with_capacity(d.n() - 2),
            leaves: vec![Leaf { path: String::new(), edge: (1, 2) }],
        };
        tree.step(SubPolygonFrame::root(d))?;
        Ok(tree)
    }

    fn step(&mut self, frame: SubPolygonFrame) -> Result<()> {
        let (d, case) = select_apex(&frame)?;
        let w = &frame.vertices;
        let pos = w.iter().position(|&x| x == d).expect("apex comes from the frame");
        let (w1, w2) = frame.base();
        self.nodes.push(TreeNode {
            path: frame.path.clone(),
            frame: w.clone(),
            base: (w1, w2),
            apex: d,
            case,
            triangle: OrientedTriangle([w1, w2, d]).normalized(),
        });

        let mut left_vertices = vec![w1];
        left_vertices.extend_from_slice(&w[pos..]);
        let mut right_vertices = vec![d];
        right_vertices.extend_from_slice(&w[1..pos]);

        for (vertices, letter) in [(left_vertices, 'L'), (right_vertices, 'R')] {
            let mut path = frame.path.clone();
            path.push(letter);
            if vertices.len() == 2 {
                // [w1, d] or [d, w2]: both are boundary edges listed clockwise
                self.leaves.push(Leaf { path, edge: (vertices[1], vertices[0]) });
                continue;
            }
            let chords = frame
                .chords
                .iter()
                .filter(|c| {
                    vertices.contains(&c.a())
                        && vertices.contains(&c.b())
                        && !is_frame_edge(&vertices, c)
                })
                .copied()
                .collect();
            self.step(SubPolygonFrame { vertices, chords, path })?;
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Internal nodes in preorder (root, left subtree, right subtree).
    pub fn nodes(&self) -> &[TreeNode] {
        &self.nodes
    }

    pub fn leaves(&self) -> &[Leaf] {
        &self.leaves
    }

    pub fn node(&self, path: &str) -> Option<&TreeNode> {
        self.nodes.iter().find(|n| n.path == path)
    }

    pub fn triangles(&self) -> Vec<OrientedTriangle> {
        self.nodes.iter().map(|n| n.triangle).collect()
    }
}

fn is_frame_edge(cycle: &[usize], c: &Chord) -> bool {
    let r = cycle.len();
    (0..r).any(|i| {
        let (x, y) = (cycle[i], cycle[(i + 1) % r]);
        c.has_endpoint(x) && c.has_endpoint(y)
    })
}

/// Builds the parsing tree and checks every selected triangle is
/// counterclockwise on `poly`.
pub fn build_parsing_tree<S: Scalar>(poly: &Polygon<S>, d: &ChordalDecomposition) -> Result<ParsingTree> {
    check_size(poly, d)?;
    let tree = ParsingTree::build(d)?;
    for node in tree.nodes() {
        OrientedTriangle::new(node.triangle.labels(), poly)?;
    }
    Ok(tree)
}

fn check_size<S: Scalar>(poly: &Polygon<S>, d: &ChordalDecomposition) -> Result<()> {
    if poly.n() != d.n() {
        return Err(Error::SizeMismatch { expected: poly.n(), got: d.n() });
    }
    Ok(())
}

/// The `n - 2` regions of a decomposition in parsing-tree preorder.
pub fn regions<S: Scalar>(poly: &Polygon<S>, d: &ChordalDecomposition) -> Result<Vec<OrientedTriangle>> {
    Ok(build_parsing_tree(poly, d)?.triangles())
}

/// Which closed side of a chord `a∧b` (with `a < b`) a region lies on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SideConstraint {
    /// Areal function `⟨x | a∧b⟩ ≤ 0` on the region; code bit `0`.
    NonPositive,
    /// Areal function `⟨x | a∧b⟩ ≥ 0` on the region; code bit `1`.
    NonNegative,
}

impl SideConstraint {
    pub fn bit(self) -> char {
        match self {
            SideConstraint::NonPositive => '0',
            SideConstraint::NonNegative => '1',
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            SideConstraint::NonPositive => "<=0",
            SideConstraint::NonNegative => ">=0",
        }
    }

    /// Whether a point with areal sign `sign` satisfies the constraint.
    pub fn admits(self, sign: i8) -> bool {
        match self {
            SideConstraint::NonPositive => sign <= 0,
            SideConstraint::NonNegative => sign >= 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignRow {
    pub path: String,
    pub triangle: OrientedTriangle,
    pub constraints: Vec<SideConstraint>,
}

impl SignRow {
    pub fn code(&self) -> String {
        self.constraints.iter().map(|c| c.bit()).collect()
    }

    pub fn admits(&self, signs: &[i8]) -> bool {
        self.constraints.iter().zip(signs).all(|(c, &s)| c.admits(s))
    }
}

/// The triangle/chord table: one row per region (preorder), one column per
/// chord (sorted).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignCodeTable {
    pub chords: Vec<Chord>,
    pub rows: Vec<SignRow>,
}

impl SignCodeTable {
    pub fn codes(&self) -> Vec<String> {
        self.rows.iter().map(SignRow::code).collect()
    }
}

/// Reads each region's side of each chord off the signs of its vertices.
pub fn sign_code_table<S: Scalar>(poly: &Polygon<S>, d: &ChordalDecomposition) -> Result<SignCodeTable> {
    let tree = build_parsing_tree(poly, d)?;
    table_for_tree(poly, d, &tree)
}

fn table_for_tree<S: Scalar>(
    poly: &Polygon<S>,
    d: &ChordalDecomposition,
    tree: &ParsingTree,
) -> Result<SignCodeTable> {
    let chords = d.chords().to_vec();
    let mut rows = Vec::with_capacity(tree.nodes().len());
    for node in tree.nodes() {
        let mut constraints = Vec::with_capacity(chords.len());
        for c in &chords {
            let seg = OrientedSegment { j: c.a(), k: c.b() };
            let mut positive = false;
            let mut negative = false;
            for v in node.triangle.labels() {
                match areal_value(poly.vertex(v)?, seg, poly)?.sign() {
                    1 => positive = true,
                    -1 => negative = true,
                    _ => {}
                }
            }
            constraints.push(match (positive, negative) {
                (true, false) => SideConstraint::NonNegative,
                (false, true) => SideConstraint::NonPositive,
                _ => {
                    return Err(Error::Invariant(format!(
                        "region {} is not on one side of chord {c}",
                        node.triangle
                    )))
                }
            });
        }
        rows.push(SignRow { path: node.path.clone(), triangle: node.triangle, constraints });
    }
    for (i, r) in rows.iter().enumerate() {
        if rows[..i].iter().any(|o| o.constraints == r.constraints) {
            return Err(Error::Invariant(format!("duplicate sign code {}", r.code())));
        }
    }
    Ok(SignCodeTable { chords, rows })
}

/// Result of locating a point: its sign against each chord and the indices
/// (preorder) of every region containing it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Location {
    pub chord_signs: Vec<i8>,
    pub regions: Vec<usize>,
}

/// A polygon with a decomposition, its parsing tree and sign-code table,
/// prepared for repeated point location.
#[derive(Debug, Clone)]
pub struct Locator<S = crate::Rational> {
    polygon: Polygon<S>,
    decomposition: ChordalDecomposition,
    tree: ParsingTree,
    table: SignCodeTable,
}

impl<S: Scalar> Locator<S> {
    pub fn new(polygon: Polygon<S>, decomposition: ChordalDecomposition) -> Result<Self> {
        let tree = build_parsing_tree(&polygon, &decomposition)?;
        let table = table_for_tree(&polygon, &decomposition, &tree)?;
        Ok(Locator { polygon, decomposition, tree, table })
    }

    pub fn polygon(&self) -> &Polygon<S> {
        &self.polygon
    }

    pub fn decomposition(&self) -> &ChordalDecomposition {
        &self.decomposition
    }

    pub fn tree(&self) -> &ParsingTree {
        &self.tree
    }

    pub fn table(&self) -> &SignCodeTable {
        &self.table
    }

    pub fn regions(&self) -> Vec<OrientedTriangle> {
        self.tree.triangles()
    }

    /// Regions whose sign row admits `x`; a zero sign admits both sides.
    /// Points outside the closed polygon are rejected before any chord is
    /// evaluated.
    pub fn locate(&self, x: &Point2<S>) -> Result<Location> {
        self.polygon.check_contains(x)?;
        let chord_signs = self
            .table
            .chords
            .iter()
            .map(|c| Ok(areal_value(x, OrientedSegment { j: c.a(), k: c.b() }, &self.polygon)?.sign()))
            .collect::<Result<Vec<i8>>>()?;
        let regions: Vec<usize> = self
            .table
            .rows
            .iter()
            .enumerate()
            .filter(|(_, row)| row.admits(&chord_signs))
            .map(|(i, _)| i)
            .collect();
        if regions.is_empty() {
            return Err(Error::Invariant(format!("point {x} inside the polygon matched no region")));
        }
        Ok(Location { chord_signs, regions })
    }
}

/// One-shot location; build a [`Locator`] for repeated queries.
pub fn locate<S: Scalar>(x: &Point2<S>, poly: &Polygon<S>, d: &ChordalDecomposition) -> Result<Location> {
    check_size(poly, d)?;
    Locator::new(poly.clone(), d.clone())?.locate(x)
}
