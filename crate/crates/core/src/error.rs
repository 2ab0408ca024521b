use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Everything that can go wrong, grouped by [`ErrorClass`].
///
/// Scalars in messages are pre-rendered as text so the type stays
/// independent of the scalar parameter.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    // algebra
    #[error("weight {0} is not in the required interval")]
    WeightOutOfRange(String),
    #[error("duplicate label {0}")]
    DuplicateLabel(String),
    #[error("{labels} labels need {expected} operators, got {got}")]
    OperatorCount { labels: usize, expected: usize, got: usize },

    // polygon geometry
    #[error("a polygon needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("vertices {0} and {1} coincide")]
    RepeatedVertex(usize, usize),
    #[error("vertices {0}, {1}, {2} are collinear")]
    Collinear(usize, usize, usize),
    #[error("vertices {0}, {1}, {2} turn clockwise")]
    Clockwise(usize, usize, usize),
    #[error("vertex sequence winds more than once around vertex 1 (fan {0}, {1})")]
    NotSimple(usize, usize),
    #[error("unknown vertex label {label} (polygon has {n} vertices)")]
    UnknownLabel { label: usize, n: usize },
    #[error("standard order needs at least 2 labels, got {0}")]
    TooFewLabels(usize),
    #[error("segment endpoints coincide at label {0}")]
    DegenerateSegment(usize),
    #[error("triangle {0}∧{1}∧{2} is not counterclockwise")]
    TriangleOrientation(usize, usize, usize),

    // point queries
    #[error("point {point} lies outside the polygon, right of boundary edge {}∧{}", edge.0, edge.1)]
    OutsidePolygon { point: String, edge: (usize, usize) },
    #[error("point {point} lies outside triangle {}∧{}∧{}", tri.0, tri.1, tri.2)]
    OutsideTriangle { point: String, tri: (usize, usize, usize) },

    // decompositions
    #[error("{a}∧{b} is not a chord of the {n}-gon")]
    NotAChord { a: usize, b: usize, n: usize },
    #[error("chord {a}∧{b} listed twice")]
    DuplicateChord { a: usize, b: usize },
    #[error("a decomposition of the {n}-gon needs {expected} chords, got {got}")]
    ChordCount { n: usize, expected: usize, got: usize },
    #[error("chords {}∧{} and {}∧{} cross", first.0, first.1, second.0, second.1)]
    ChordsCross { first: (usize, usize), second: (usize, usize) },
    #[error("polygon size {n} outside the supported range {min}..={max}")]
    SizeOutOfRange { n: usize, min: usize, max: usize },
    #[error("size mismatch: expected {expected}-gon, got {got}")]
    SizeMismatch { expected: usize, got: usize },
    #[error("invalid degree sequence {0:?}")]
    BadDegreeSequence(String),

    // coordinate systems
    #[error("mixture weights sum to {0}, not 1")]
    WeightSum(String),
    #[error("mixture parts live on different polygons")]
    PolygonMismatch,
    #[error("mixture has no parts")]
    EmptyMixture,
    #[error("no value supplied for vertex {0}")]
    MissingValue(usize),
    #[error("value for vertex {label} has dimension {got}, expected {expected}")]
    DimensionMismatch { label: usize, expected: usize, got: usize },

    /// A condition guaranteed by construction failed; indicates a bug or an
    /// inexact scalar.
    #[error("internal invariant violated: {0}")]
    Invariant(String),

    // files
    #[error("parse error: {0}")]
    Parse(String),
    #[error("i/o error: {0}")]
    Io(String),
}

/// Coarse classification, used for CLI exit codes and reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    Algebra,
    Polygon,
    Decomposition,
    OutsidePoint,
    CoordinateSystem,
    Internal,
    Input,
}

impl ErrorClass {
    pub fn as_str(self) -> &'static str {
        match self {
            ErrorClass::Algebra => "algebra",
            ErrorClass::Polygon => "polygon",
            ErrorClass::Decomposition => "decomposition",
            ErrorClass::OutsidePoint => "outside-point",
            ErrorClass::CoordinateSystem => "coordinate-system",
            ErrorClass::Internal => "internal",
            ErrorClass::Input => "input",
        }
    }
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        use Error::*;
        match self {
            WeightOutOfRange(_) | DuplicateLabel(_) | OperatorCount { .. } => ErrorClass::Algebra,
            TooFewVertices(_)
            | RepeatedVertex(..)
            | Collinear(..)
            | Clockwise(..)
            | NotSimple(..)
            | UnknownLabel { .. }
            | TooFewLabels(_)
            | DegenerateSegment(_)
            | TriangleOrientation(..) => ErrorClass::Polygon,
            OutsidePolygon { .. } | OutsideTriangle { .. } => ErrorClass::OutsidePoint,
            NotAChord { .. }
            | DuplicateChord { .. }
            | ChordCount { .. }
            | ChordsCross { .. }
            | SizeOutOfRange { .. }
            | SizeMismatch { .. }
            | BadDegreeSequence(_) => ErrorClass::Decomposition,
            WeightSum(_) | PolygonMismatch | EmptyMixture | MissingValue(_)
            | DimensionMismatch { .. } => ErrorClass::CoordinateSystem,
            Invariant(_) => ErrorClass::Internal,
            Parse(_) | Io(_) => ErrorClass::Input,
        }
    }

    /// Process exit code: 2 for unreadable input, 1 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self.class() {
            ErrorClass::Input => 2,
            _ => 1,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
