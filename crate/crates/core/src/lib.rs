//! Exact generalized barycentric coordinates on strictly convex polygons.
//!
//! The crate computes chordal coordinate systems from non-crossing
//! triangulations, convex mixtures of coordinate systems, and cartographic
//! systems obtained by averaging a chordal system over its dihedral orbit.
//! Supporting pieces cover triangulation enumeration, chordal degree
//! sequences, the dihedral action on triangulations, parsing trees of the
//! recursive region-selection procedure, and sign-code point location.
//!
//! All geometry is generic over [`Scalar`]. The default scalar everywhere is
//! [`Rational`], an arbitrary-precision rational, which is what the exactness
//! guarantees (partition of unity, linear precision, sign decisions) rely on.
//! Floating-point scalars compile and evaluate, but exact equality checks are
//! only meaningful for exact scalars.

pub mod algebra;
pub mod commands;
pub mod coords;
pub mod decomposition;
pub mod error;
pub mod geometry;
pub mod io;
pub mod locator;
pub mod scalar;

pub use algebra::{
    complement, distribution_from_operators, dual_product, weighted_mean, Distribution,
    OpenWeight, Weight,
};
pub use coords::{
    cartographic_eval, chordal_eval, chordal_eval_recursive, interpolate, mix_systems,
    verify_system, verify_vector, CartographicSystem, ChordalSystem, CoordinateSystem,
    CoordinateVector, MixtureSystem, VerificationReport, Violation,
};
pub use decomposition::{
    cds, chords_cross, dihedral_apply, enumerate_decompositions, orbit, validate_decomposition,
    Chord, ChordalDecomposition, DegreeSequence, DihedralElement, Orbit,
};
pub use error::{Error, ErrorClass, Result};
pub use geometry::{
    areal_value, side_of, signed_area, standard_order, triangle_coords, validate_polygon,
    OrientedSegment, OrientedTriangle, Point2, Polygon,
};
pub use locator::{
    build_parsing_tree, locate, regions, select_apex, sign_code_table, ApexCase, Location,
    Locator, ParsingTree, SignCodeTable, SubPolygonFrame,
};
pub use scalar::{parse_rational, Scalar};

/// Arbitrary-precision exact rational, the default scalar.
pub type Rational = num_rational::BigRational;

/// Double-precision point, for callers that trade exactness for speed.
pub type PointF64 = Point2<f64>;
/// Double-precision polygon.
pub type PolygonF64 = Polygon<f64>;
/// Double-precision coordinate system.
pub type CoordinateSystemF64 = CoordinateSystem<f64>;
