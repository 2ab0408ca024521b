//! The command layer behind the `polycoords` binary. Each command takes
//! parsed documents and returns a JSON report plus an exit code, so the same
//! code paths serve the CLI and tests.

use serde::Serialize;
use serde_json::{json, Value};

use crate::coords::interpolate;
use crate::decomposition::{self, cds, enumerate_decompositions, DegreeSequence};
use crate::error::{Error, Result};
use crate::io::{
    chord_list, point_doc, values_doc, CoordinateVectorDoc, DecompositionDoc, DecompositionSummary,
    ParsingTreeDoc, PointsDoc, PolygonDoc, SignCodeTableDoc, SystemDescriptor, ValuesDoc,
};
use crate::locator::Locator;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Clone, PartialEq)]
pub struct CommandOutput {
    pub body: Value,
    pub exit_code: i32,
}

impl CommandOutput {
    fn ok(body: Value) -> Self {
        CommandOutput { body, exit_code: EXIT_OK }
    }

    pub fn render(&self, pretty: bool) -> String {
        crate::io::to_json(&self.body, pretty)
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("documents serialize infallibly")
}

/// The error report printed for failed commands.
pub fn error_body(e: &Error) -> Value {
    json!({ "error": e.to_string(), "class": e.class().as_str() })
}

/// Validates a polygon and optionally a decomposition of it. Invariant
/// failures are reported in the body with exit code 1.
pub fn validate(polygon: &PolygonDoc, decomposition: Option<&DecompositionDoc>) -> CommandOutput {
    let checked = (|| {
        let poly = polygon.to_polygon()?;
        let mut body = json!({ "valid": true, "polygon": PolygonDoc::from_polygon(&poly) });
        if let Some(doc) = decomposition {
            if doc.n != poly.n() {
                return Err(Error::SizeMismatch { expected: poly.n(), got: doc.n });
            }
            let d = doc.to_decomposition()?;
            body["decomposition"] = to_value(&DecompositionSummary::new(&d));
        }
        Ok(body)
    })();
    match checked {
        Ok(body) => CommandOutput::ok(body),
        Err(e) => CommandOutput {
            body: json!({ "valid": false, "error": e.to_string(), "class": e.class().as_str() }),
            exit_code: e.exit_code(),
        },
    }
}

/// Lists all decompositions of the n-gon, optionally filtered by degree
/// sequence and grouped into dihedral orbits.
pub fn triangulations(n: usize, cds_filter: Option<&str>, group_orbits: bool) -> Result<CommandOutput> {
    let filter = match cds_filter {
        Some(text) => {
            let seq: DegreeSequence = text.parse()?;
            if !seq.is_admissible(n) {
                return Err(Error::BadDegreeSequence(text.to_string()));
            }
            Some(seq)
        }
        None => None,
    };
    let keep = |d: &decomposition::ChordalDecomposition| filter.as_ref().is_none_or(|f| cds(d) == *f);
    let body = if group_orbits {
        let orbits: Vec<Value> = decomposition::orbits(n)?
            .iter()
            .filter(|o| keep(o.representative()))
            .map(|o| {
                let seq = cds(o.representative());
                let members: Vec<Value> = o
                    .multiplicities
                    .iter()
                    .map(|(d, m)| json!({ "chords": chord_list(d), "multiplicity": m }))
                    .collect();
                json!({
                    "cds": seq.to_string(),
                    "degrees": seq.degrees(),
                    "size": o.len(),
                    "members": members,
                })
            })
            .collect();
        Value::Array(orbits)
    } else {
        let entries: Vec<Value> = enumerate_decompositions(n)?
            .iter()
            .filter(|d| keep(d))
            .map(|d| {
                let s = DecompositionSummary::new(d);
                json!({ "chords": s.chords, "cds": s.cds, "degrees": s.degrees })
            })
            .collect();
        Value::Array(entries)
    };
    Ok(CommandOutput::ok(body))
}

fn locator(polygon: &PolygonDoc, decomposition: &DecompositionDoc) -> Result<Locator> {
    let poly = polygon.to_polygon()?;
    if decomposition.n != poly.n() {
        return Err(Error::SizeMismatch { expected: poly.n(), got: decomposition.n });
    }
    Locator::new(poly, decomposition.to_decomposition()?)
}

/// Per point: chord signs, matching sign codes and region path words.
/// Points outside the polygon get an error entry and exit code 1.
pub fn locate(polygon: &PolygonDoc, decomposition: &DecompositionDoc, points: &PointsDoc) -> Result<CommandOutput> {
    let loc = locator(polygon, decomposition)?;
    let mut exit_code = EXIT_OK;
    let results: Vec<Value> = points
        .to_points()
        .iter()
        .map(|x| match loc.locate(x) {
            Ok(found) => {
                let rows = &loc.table().rows;
                json!({
                    "point": point_doc(x),
                    "chord_signs": found.chord_signs,
                    "codes": found.regions.iter().map(|&i| rows[i].code()).collect::<Vec<_>>(),
                    "regions": found.regions.iter().map(|&i| rows[i].path.clone()).collect::<Vec<_>>(),
                })
            }
            Err(e) => {
                exit_code = EXIT_INVALID;
                json!({ "point": point_doc(x), "error": e.to_string(), "class": e.class().as_str() })
            }
        })
        .collect();
    Ok(CommandOutput {
        body: json!({ "chords": decomposition.to_decomposition().map(|d| chord_list(&d))?, "results": results }),
        exit_code,
    })
}

/// The parsing tree and the triangle/chord sign-code table.
pub fn tree(polygon: &PolygonDoc, decomposition: &DecompositionDoc) -> Result<CommandOutput> {
    let loc = locator(polygon, decomposition)?;
    Ok(CommandOutput::ok(json!({
        "tree": ParsingTreeDoc::new(loc.tree()),
        "sign_codes": SignCodeTableDoc::new(loc.table()),
    })))
}

/// One coordinate vector per point, in input order.
pub fn coords(polygon: &PolygonDoc, system: &SystemDescriptor, points: &PointsDoc) -> Result<CommandOutput> {
    let poly = polygon.to_polygon()?;
    let sys = system.build(&poly)?;
    let mut exit_code = EXIT_OK;
    let results: Vec<Value> = points
        .to_points()
        .iter()
        .map(|x| match sys.eval(x) {
            Ok(v) => to_value(&CoordinateVectorDoc::new(x, &v)),
            Err(e) => {
                exit_code = EXIT_INVALID;
                json!({ "point": point_doc(x), "error": e.to_string(), "class": e.class().as_str() })
            }
        })
        .collect();
    Ok(CommandOutput { body: json!({ "results": results }), exit_code })
}

/// Interpolated vertex data at each point. Coverage and dimension errors
/// abort the command; outside points get per-point error entries.
pub fn interpolate_values(
    polygon: &PolygonDoc,
    system: &SystemDescriptor,
    values: &ValuesDoc,
    points: &PointsDoc,
) -> Result<CommandOutput> {
    let poly = polygon.to_polygon()?;
    let sys = system.build(&poly)?;
    let values = values.to_values();
    // coverage problems are independent of the point; surface them once
    interpolate(poly.vertex(1)?, &sys, &values)?;
    let mut exit_code = EXIT_OK;
    let results: Vec<Value> = points
        .to_points()
        .iter()
        .map(|x| match interpolate(x, &sys, &values) {
            Ok(v) => json!({ "point": point_doc(x), "value": values_doc(&v) }),
            Err(e) => {
                exit_code = EXIT_INVALID;
                json!({ "point": point_doc(x), "error": e.to_string(), "class": e.class().as_str() })
            }
        })
        .collect();
    Ok(CommandOutput { body: json!({ "results": results }), exit_code })
}
