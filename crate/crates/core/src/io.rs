//! JSON documents for polygons, decompositions, points, system descriptors,
//! vertex values, and the emitted reports.
//!
//! Rationals are always strings in canonical lowest terms (`"5/8"`, `"1"`,
//! `"0"`); on input JSON integers are accepted as well. Vertex labels are
//! 1-based.

use std::collections::BTreeMap;
use std::fmt;
use std::fs;
use std::path::Path;

use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::coords::{mix_systems, CoordinateSystem, CoordinateVector};
use crate::decomposition::{cds, ChordalDecomposition};
use crate::error::{Error, Result};
use crate::geometry::{Point2, Polygon};
use crate::locator::{ParsingTree, SignCodeTable};
use crate::scalar::{format_rational, parse_rational};
use crate::Rational;

/// A rational carried as text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalText(pub Rational);

impl Serialize for RationalText {
    fn serialize<Ser: Serializer>(&self, s: Ser) -> std::result::Result<Ser::Ok, Ser::Error> {
        s.serialize_str(&format_rational(&self.0))
    }
}

impl<'de> Deserialize<'de> for RationalText {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = RationalText;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a rational string \"p/q\" or an integer")
            }

            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<RationalText, E> {
                parse_rational(v).map(RationalText).map_err(E::custom)
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<RationalText, E> {
                Ok(RationalText(Rational::from_integer(v.into())))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<RationalText, E> {
                Ok(RationalText(Rational::from_integer(v.into())))
            }
        }
        d.deserialize_any(V)
    }
}

impl From<Rational> for RationalText {
    fn from(r: Rational) -> Self {
        RationalText(r)
    }
}

pub type PointDoc = [RationalText; 2];

pub fn point_doc(p: &Point2) -> PointDoc {
    [RationalText(p.x.clone()), RationalText(p.y.clone())]
}

pub fn point_from_doc(doc: &PointDoc) -> Point2 {
    Point2::new(doc[0].0.clone(), doc[1].0.clone())
}

fn texts(values: &[Rational]) -> Vec<RationalText> {
    values.iter().cloned().map(RationalText).collect()
}

/// `{"vertices": [["x","y"], …]}`
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolygonDoc {
    pub vertices: Vec<PointDoc>,
}

impl PolygonDoc {
    pub fn to_polygon(&self) -> Result<Polygon> {
        Polygon::new(self.vertices.iter().map(point_from_doc).collect())
    }

    pub fn from_polygon(poly: &Polygon) -> Self {
        PolygonDoc { vertices: poly.vertices().iter().map(point_doc).collect() }
    }
}

/// `{"n": 6, "chords": [[1,3],[1,5],[3,5]]}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DecompositionDoc {
    pub n: usize,
    pub chords: Vec<[usize; 2]>,
}

impl DecompositionDoc {
    pub fn to_decomposition(&self) -> Result<ChordalDecomposition> {
        let pairs: Vec<(usize, usize)> = self.chords.iter().map(|c| (c[0], c[1])).collect();
        ChordalDecomposition::from_pairs(self.n, &pairs)
    }

    pub fn from_decomposition(d: &ChordalDecomposition) -> Self {
        DecompositionDoc { n: d.n(), chords: chord_list(d) }
    }
}

pub fn chord_list(d: &ChordalDecomposition) -> Vec<[usize; 2]> {
    d.pairs().into_iter().map(|(a, b)| [a, b]).collect()
}

/// A decomposition echoed with its degree sequence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionSummary {
    pub n: usize,
    pub chords: Vec<[usize; 2]>,
    pub cds: String,
    pub degrees: Vec<usize>,
}

impl DecompositionSummary {
    pub fn new(d: &ChordalDecomposition) -> Self {
        let seq = cds(d);
        DecompositionSummary {
            n: d.n(),
            chords: chord_list(d),
            cds: seq.to_string(),
            degrees: seq.degrees().to_vec(),
        }
    }
}

/// `{"points": [["x","y"], …]}`
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointsDoc {
    pub points: Vec<PointDoc>,
}

impl PointsDoc {
    pub fn to_points(&self) -> Vec<Point2> {
        self.points.iter().map(point_from_doc).collect()
    }
}

/// `{"values": {"1": ["2","1"], "2": […], …}}`
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ValuesDoc {
    pub values: BTreeMap<usize, Vec<RationalText>>,
}

impl ValuesDoc {
    pub fn to_values(&self) -> BTreeMap<usize, Vec<Rational>> {
        self.values
            .iter()
            .map(|(&k, v)| (k, v.iter().map(|r| r.0.clone()).collect()))
            .collect()
    }
}

/// Coordinate-system descriptor, tagged by `kind`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum SystemDescriptor {
    Chordal { chords: Vec<[usize; 2]> },
    Cartographic { representative: Vec<[usize; 2]> },
    Mixture { parts: Vec<MixturePart> },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MixturePart {
    pub weight: RationalText,
    pub system: SystemDescriptor,
}

impl SystemDescriptor {
    /// Instantiates the described system on `poly`.
    pub fn build(&self, poly: &Polygon) -> Result<CoordinateSystem> {
        let decomposition = |chords: &[[usize; 2]]| {
            let pairs: Vec<(usize, usize)> = chords.iter().map(|c| (c[0], c[1])).collect();
            ChordalDecomposition::from_pairs(poly.n(), &pairs)
        };
        match self {
            SystemDescriptor::Chordal { chords } => {
                CoordinateSystem::chordal(poly.clone(), decomposition(chords)?)
            }
            SystemDescriptor::Cartographic { representative } => {
                CoordinateSystem::cartographic(poly.clone(), decomposition(representative)?)
            }
            SystemDescriptor::Mixture { parts } => {
                let built = parts
                    .iter()
                    .map(|p| Ok((p.system.build(poly)?, p.weight.0.clone())))
                    .collect::<Result<Vec<_>>>()?;
                mix_systems(built)
            }
        }
    }
}

/// `{"point": ["7/4","3/2"], "weights": ["1/2","1/4",…]}`
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoordinateVectorDoc {
    pub point: PointDoc,
    pub weights: Vec<RationalText>,
}

impl CoordinateVectorDoc {
    pub fn new(point: &Point2, v: &CoordinateVector) -> Self {
        CoordinateVectorDoc { point: point_doc(point), weights: texts(v.weights()) }
    }
}

pub fn values_doc(values: &[Rational]) -> Vec<RationalText> {
    texts(values)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeNodeDoc {
    pub frame: Vec<usize>,
    pub base: [usize; 2],
    pub apex: usize,
    pub case: String,
    pub triangle: [usize; 3],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeafDoc {
    pub path: String,
    pub edge: [usize; 2],
}

/// Internal nodes keyed by path word (lexicographic order is preorder).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParsingTreeDoc {
    pub n: usize,
    pub nodes: BTreeMap<String, TreeNodeDoc>,
    pub leaves: Vec<LeafDoc>,
}

impl ParsingTreeDoc {
    pub fn new(tree: &ParsingTree) -> Self {
        ParsingTreeDoc {
            n: tree.n(),
            nodes: tree
                .nodes()
                .iter()
                .map(|node| {
                    let doc = TreeNodeDoc {
                        frame: node.frame.clone(),
                        base: [node.base.0, node.base.1],
                        apex: node.apex,
                        case: node.case.tag().to_string(),
                        triangle: node.triangle.labels(),
                    };
                    (node.path.clone(), doc)
                })
                .collect(),
            leaves: tree
                .leaves()
                .iter()
                .map(|l| LeafDoc { path: l.path.clone(), edge: [l.edge.0, l.edge.1] })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignRowDoc {
    pub region: String,
    pub triangle: [usize; 3],
    pub constraints: Vec<String>,
    pub code: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignCodeTableDoc {
    pub chords: Vec<[usize; 2]>,
    pub rows: Vec<SignRowDoc>,
}

impl SignCodeTableDoc {
    pub fn new(table: &SignCodeTable) -> Self {
        SignCodeTableDoc {
            chords: table.chords.iter().map(|c| [c.a(), c.b()]).collect(),
            rows: table
                .rows
                .iter()
                .map(|r| SignRowDoc {
                    region: r.path.clone(),
                    triangle: r.triangle.labels(),
                    constraints: r.constraints.iter().map(|c| c.symbol().to_string()).collect(),
                    code: r.code(),
                })
                .collect(),
        }
    }
}

pub fn read_json<T: serde::de::DeserializeOwned>(path: impl AsRef<Path>) -> Result<T> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

pub fn to_json<T: Serialize>(value: &T, pretty: bool) -> String {
    let mut s = if pretty {
        serde_json::to_string_pretty(value)
    } else {
        serde_json::to_string(value)
    }
    .expect("documents serialize infallibly");
    s.push('\n');
    s
}
