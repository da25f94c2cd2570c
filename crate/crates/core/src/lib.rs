//! Exact planar Demyanov converter.
//!
//! Given a finite collection `Omega` of convex polygons (points and segments
//! included), the converter maps it to the set of all polytopes
//! `P_Omega(g) = conv of the faces of each member maximizing <., g>`, over
//! nonzero directions `g`. This crate computes that image exactly over the
//! rationals, iterates it, and finds the preperiod and minimal cycle length of
//! the resulting sequence.

pub mod cli;
pub mod converter;
pub mod dynamics;
pub mod error;
pub mod format;
pub mod geometry;
pub mod rational;
pub mod render;

pub use converter::{
    converter_image, demyanov_convert, fan_rays, sampled_convert, sector_representative,
    test_directions, CellBounds, Collection, FanCell,
};
pub use dynamics::{
    builtin_counterexample, iterate_until_cycle, random_family, search_cycles, verify_paper_claim,
    CycleResult, GeneratorParams, InstanceSource, SearchReport,
};
pub use error::{Error, ParseError, Result};
pub use format::{parse_family, serialize_family};
pub use geometry::{
    convex_hull, exposed_face, orient, reflect_y, support_value, Direction, Point, Polytope,
};
pub use rational::Rational;
pub use render::{render_svg, RenderSpec};
