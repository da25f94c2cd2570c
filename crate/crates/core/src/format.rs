//! Family documents: versioned JSON with exact rational string literals.
//!
//! ```json
//! {"version":"1","polytopes":[[["1","0"],["1","1"],["-1","0"]]]}
//! ```
//!
//! Coordinates are `"p"` or `"p/q"` strings; JSON numbers are rejected so no
//! value ever passes through floating point. Vertex lists are hulled on load.

use serde::Deserialize;
use sha2::{Digest, Sha256};

use crate::converter::Collection;
use crate::error::{Error, ParseError, Result};
use crate::geometry::{convex_hull, Point, Polytope};
use crate::rational::{format_rational, parse_rational};

pub const FORMAT_VERSION: &str = "1";

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilyDocument {
    pub version: String,
    pub polytopes: Vec<Vec<[String; 2]>>,
}

pub fn parse_family(text: &str) -> Result<Collection> {
    let doc: FamilyDocument = serde_json::from_str(text).map_err(|e| ParseError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    collection_from_document(&doc)
}

pub fn collection_from_document(doc: &FamilyDocument) -> Result<Collection> {
    if doc.version != FORMAT_VERSION {
        return Err(ParseError::Version(doc.version.clone()).into());
    }
    if doc.polytopes.is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut members = Vec::with_capacity(doc.polytopes.len());
    for (pi, vertices) in doc.polytopes.iter().enumerate() {
        if vertices.is_empty() {
            return Err(ParseError::EmptyPolytope(pi).into());
        }
        let mut points = Vec::with_capacity(vertices.len());
        for (vi, [x, y]) in vertices.iter().enumerate() {
            let coord = |lit: &String| {
                parse_rational(lit).map_err(|_| ParseError::Rational {
                    polytope: pi,
                    vertex: vi,
                    literal: lit.clone(),
                })
            };
            points.push(Point::new(coord(x)?, coord(y)?));
        }
        members.push(convex_hull(points)?);
    }
    Collection::new(members)
}

/// Canonical text: members in collection order, one per line, reduced
/// literals, trailing newline.
pub fn serialize_family(omega: &Collection) -> String {
    let mut out = String::new();
    out.push_str("{\"version\":\"");
    out.push_str(FORMAT_VERSION);
    out.push_str("\",\"polytopes\":[\n");
    let n = omega.len();
    for (i, p) in omega.members().iter().enumerate() {
        out.push_str("  ");
        out.push_str(&polytope_literal(p));
        if i + 1 < n {
            out.push(',');
        }
        out.push('\n');
    }
    out.push_str("]}\n");
    out
}

fn polytope_literal(p: &Polytope) -> String {
    let vs: Vec<String> = p
        .vertices()
        .iter()
        .map(|v| {
            format!(
                "[\"{}\",\"{}\"]",
                format_rational(&v.x),
                format_rational(&v.y)
            )
        })
        .collect();
    format!("[{}]", vs.join(","))
}

/// SHA-256 of the canonical serialization, hex encoded.
pub fn canonical_digest(omega: &Collection) -> String {
    hex::encode(Sha256::digest(serialize_family(omega).as_bytes()))
}
