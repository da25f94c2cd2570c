//! Exact planar primitives: points, primitive directions, the orientation
//! predicate, convex hulls in canonical form, support values and exposed faces.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{common_denominator, format_rational, rat, sign, Rational};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        Self { x, y }
    }

    pub fn int(x: i64, y: i64) -> Self {
        Self::new(rat(x), rat(y))
    }

    pub fn dot(&self, g: &Direction) -> Rational {
        &self.x * Rational::from_integer(g.a.clone())
            + &self.y * Rational::from_integer(g.b.clone())
    }

    pub fn reflect_y(&self) -> Self {
        Self::new(-&self.x, self.y.clone())
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({},{})",
            format_rational(&self.x),
            format_rational(&self.y)
        )
    }
}

/// Sign of the cross product `(q - p) x (r - p)`: `+1` for a counterclockwise
/// turn, `-1` for clockwise, `0` when collinear.
pub fn orient(p: &Point, q: &Point, r: &Point) -> i8 {
    let cross = (&q.x - &p.x) * (&r.y - &p.y) - (&q.y - &p.y) * (&r.x - &p.x);
    sign(&cross)
}

/// A ray of directions, stored as its primitive integer vector.
///
/// Fields are private so every value is primitive and nonzero; positively
/// proportional inputs produce equal `Direction`s.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Direction {
    a: BigInt,
    b: BigInt,
}

impl Direction {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Result<Self> {
        let (a, b) = (a.into(), b.into());
        if a.is_zero() && b.is_zero() {
            return Err(Error::ZeroDirection);
        }
        let g = a.gcd(&b);
        Ok(Self {
            a: a / &g,
            b: b / g,
        })
    }

    /// Primitive integer direction positively proportional to `(a, b)`.
    pub fn from_rationals(a: &Rational, b: &Rational) -> Result<Self> {
        let den = common_denominator([a, b]);
        let scale = Rational::from_integer(den);
        Self::new((a * &scale).to_integer(), (b * &scale).to_integer())
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn neg(&self) -> Self {
        Self {
            a: -&self.a,
            b: -&self.b,
        }
    }

    /// Quarter turn counterclockwise.
    pub fn rotate_ccw(&self) -> Self {
        Self {
            a: -&self.b,
            b: self.a.clone(),
        }
    }

    pub fn reflect_y(&self) -> Self {
        Self {
            a: -&self.a,
            b: self.b.clone(),
        }
    }

    pub fn cross(&self, other: &Direction) -> BigInt {
        &self.a * &other.b - &self.b * &other.a
    }

    /// Largest absolute coordinate.
    pub fn magnitude(&self) -> BigInt {
        self.a.abs().max(self.b.abs())
    }

    /// 0 for angles in [0, pi), 1 for [pi, 2 pi).
    fn half(&self) -> u8 {
        if self.b.is_positive() || (self.b.is_zero() && self.a.is_positive()) {
            0
        } else {
            1
        }
    }

    /// Total order by angle in [0, 2 pi) measured counterclockwise from (1,0).
    pub fn angle_cmp(&self, other: &Direction) -> Ordering {
        self.half().cmp(&other.half()).then_with(|| {
            let c = self.cross(other);
            if c.is_positive() {
                Ordering::Less
            } else if c.is_negative() {
                Ordering::Greater
            } else {
                Ordering::Equal
            }
        })
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

/// Convex polytope in the plane stored by its extreme points.
///
/// Canonical form: a single point; two endpoints in lexicographic order; or
/// three or more vertices counterclockwise with strictly convex turns,
/// starting at the lexicographically smallest vertex. Two polytopes are equal
/// exactly when their point sets are equal.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Polytope {
    vertices: Vec<Point>,
}

impl Polytope {
    pub fn point(p: Point) -> Self {
        Self { vertices: vec![p] }
    }

    /// Hull of integer points, for literals in tests and the builtin family.
    pub fn from_ints(points: &[(i64, i64)]) -> Result<Self> {
        convex_hull(points.iter().map(|&(x, y)| Point::int(x, y)))
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains_vertex(&self, p: &Point) -> bool {
        self.vertices.contains(p)
    }

    pub fn support_value(&self, g: &Direction) -> Rational {
        support_value(self, g)
    }

    pub fn exposed_face(&self, g: &Direction) -> Polytope {
        exposed_face(self, g)
    }

    pub fn reflect_y(&self) -> Polytope {
        reflect_y(self)
    }
}

impl fmt::Display for Polytope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("conv{")?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

/// Andrew's monotone chain over exact coordinates. Returns the canonical form.
pub fn convex_hull(points: impl IntoIterator<Item = Point>) -> Result<Polytope> {
    let mut pts: Vec<Point> = points.into_iter().collect();
    if pts.is_empty() {
        return Err(Error::EmptyInput);
    }
    pts.sort();
    pts.dedup();
    if pts.len() <= 2 {
        return Ok(Polytope { vertices: pts });
    }

    let mut lower: Vec<Point> = Vec::with_capacity(pts.len());
    for p in &pts {
        while lower.len() >= 2 && orient(&lower[lower.len() - 2], &lower[lower.len() - 1], p) <= 0 {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<Point> = Vec::with_capacity(pts.len());
    for p in pts.iter().rev() {
        while upper.len() >= 2 && orient(&upper[upper.len() - 2], &upper[upper.len() - 1], p) <= 0 {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);

    // All input collinear: the chains degenerate to the two extreme points.
    if lower.len() == 2 && lower[0] > lower[1] {
        lower.swap(0, 1);
    }
    Ok(Polytope { vertices: lower })
}

pub fn support_value(p: &Polytope, g: &Direction) -> Rational {
    p.vertices
        .iter()
        .map(|v| v.dot(g))
        .max()
        .expect("polytopes are nonempty")
}

/// Face of `p` on which `<., g>` is maximal.
pub fn exposed_face(p: &Polytope, g: &Direction) -> Polytope {
    let values: Vec<Rational> = p.vertices.iter().map(|v| v.dot(g)).collect();
    let best = values.iter().max().expect("polytopes are nonempty");
    let vertices: Vec<Point> = p
        .vertices
        .iter()
        .zip(&values)
        .filter(|(_, val)| *val == best)
        .map(|(v, _)| v.clone())
        .collect();
    // A subset of extreme points attaining the max is itself in convex
    // position; hulling restores canonical order (it may wrap around vertex 0).
    convex_hull(vertices).expect("argmax is nonempty")
}

/// Mirror image through the vertical axis, `(x, y) -> (-x, y)`.
pub fn reflect_y(p: &Polytope) -> Polytope {
    convex_hull(p.vertices.iter().map(Point::reflect_y)).expect("polytopes are nonempty")
}

/// Primitive outward normals of the edges of `p`. A segment has both normals
/// orthogonal to it; a point has none.
pub fn edge_normals(p: &Polytope) -> Vec<Direction> {
    let vs = &p.vertices;
    match vs.len() {
        1 => Vec::new(),
        2 => {
            let n = edge_normal(&vs[0], &vs[1]);
            let m = n.neg();
            vec![n, m]
        }
        k => (0..k)
            .map(|i| edge_normal(&vs[i], &vs[(i + 1) % k]))
            .collect(),
    }
}

/// `(dy, -dx)` for the edge vector `to - from`: outward for a CCW polygon.
fn edge_normal(from: &Point, to: &Point) -> Direction {
    let dx = &to.x - &from.x;
    let dy = &to.y - &from.y;
    Direction::from_rationals(&dy, &-dx).expect("canonical vertices are distinct")
}
