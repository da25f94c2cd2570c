//! The Demyanov converter on finite collections of planar polytopes.
//!
//! `P_Omega(g)` is the convex hull of the exposed faces of all members of a
//! collection in direction `g`. It only changes where some member's exposed
//! face changes, i.e. on the edge normals of the members. Those normals cut
//! the circle of directions into rays and open sectors (the common refinement
//! of the members' normal fans); evaluating once per cell yields the full
//! image `F(Omega)` exactly.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::geometry::{self, convex_hull, Direction, Point, Polytope};

/// A finite set of polytopes, deduplicated and sorted by canonical form.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Collection {
    members: Vec<Polytope>,
}

impl Collection {
    pub fn new(members: impl IntoIterator<Item = Polytope>) -> Result<Self> {
        let set: BTreeSet<Polytope> = members.into_iter().collect();
        if set.is_empty() {
            return Err(Error::EmptyInput);
        }
        Ok(Self {
            members: set.into_iter().collect(),
        })
    }

    pub fn members(&self) -> &[Polytope] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, p: &Polytope) -> bool {
        self.members.binary_search(p).is_ok()
    }

    pub fn is_subset(&self, other: &Collection) -> bool {
        self.members.iter().all(|p| other.contains(p))
    }

    /// Every vertex of every member, sorted and deduplicated.
    pub fn vertex_set(&self) -> BTreeSet<Point> {
        self.members
            .iter()
            .flat_map(|p| p.vertices().iter().cloned())
            .collect()
    }

    pub fn reflect_y(&self) -> Collection {
        Collection::new(self.members.iter().map(Polytope::reflect_y)).expect("nonempty")
    }

    /// Union of the collection with its mirror image.
    pub fn symmetrized(&self) -> Collection {
        Collection::new(self.members.iter().cloned().chain(self.reflect_y().members))
            .expect("nonempty")
    }
}

impl fmt::Display for Collection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, p) in self.members.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("}")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CellBounds {
    Ray(Direction),
    /// Open sector swept counterclockwise from the first ray to the second.
    Sector(Direction, Direction),
}

/// One cell of the common refinement of the members' normal fans, with a
/// direction at which to evaluate `P_Omega`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FanCell {
    pub bounds: CellBounds,
    pub representative: Direction,
}

impl FanCell {
    pub fn is_ray(&self) -> bool {
        matches!(self.bounds, CellBounds::Ray(_))
    }

    /// Whether `g` lies in this cell. The whole-circle sector of a fan with no
    /// rays is the only cell without bounds and contains everything.
    pub fn contains(&self, g: &Direction) -> bool {
        match &self.bounds {
            CellBounds::Ray(r) => r == g,
            CellBounds::Sector(r1, r2) if r1 == r2 => true,
            CellBounds::Sector(r1, r2) => strictly_inside(r1, r2, g),
        }
    }
}

/// `g` lies strictly inside the open counterclockwise sector from `r1` to
/// `r2`, assuming that sector spans at most a half-turn.
pub fn strictly_inside(r1: &Direction, r2: &Direction, g: &Direction) -> bool {
    r1.cross(g).is_positive() && g.cross(r2).is_positive()
}

pub fn edge_normals(p: &Polytope) -> Vec<Direction> {
    geometry::edge_normals(p)
}

/// Rays of the common refinement: all members' edge normals, deduplicated,
/// in counterclockwise order starting from the smallest angle in [0, 2 pi).
pub fn fan_rays(omega: &Collection) -> Vec<Direction> {
    let mut rays: Vec<Direction> = omega.members.iter().flat_map(edge_normals).collect();
    rays.sort_by(Direction::angle_cmp);
    rays.dedup();
    rays
}

/// A primitive direction strictly inside the open sector from `r1` to `r2`:
/// the bisecting sum, or a quarter turn of `r1` when the rays are opposite.
pub fn sector_representative(r1: &Direction, r2: &Direction) -> Result<Direction> {
    if r1 == r2 {
        return Err(Error::DegenerateSector);
    }
    let a: BigInt = r1.a() + r2.a();
    let b: BigInt = r1.b() + r2.b();
    let rep = if a.is_zero() && b.is_zero() {
        r1.rotate_ccw()
    } else {
        Direction::new(a, b)?
    };
    if !strictly_inside(r1, r2, &rep) {
        return Err(Error::InvariantViolation(format!(
            "sector from {r1} to {r2} is wider than a half-turn"
        )));
    }
    Ok(rep)
}

/// One ray cell per fan ray and one sector cell per consecutive pair.
pub fn test_directions(omega: &Collection) -> Result<Vec<FanCell>> {
    let rays = fan_rays(omega);
    if rays.is_empty() {
        // Only points: P_Omega is constant on the whole circle.
        let e = Direction::new(1, 0)?;
        return Ok(vec![FanCell {
            bounds: CellBounds::Sector(e.clone(), e.clone()),
            representative: e,
        }]);
    }
    if rays.len() == 1 {
        return Err(Error::InvariantViolation(
            "a fan cannot have a single ray".into(),
        ));
    }
    let mut cells = Vec::with_capacity(2 * rays.len());
    for (i, r1) in rays.iter().enumerate() {
        let r2 = &rays[(i + 1) % rays.len()];
        cells.push(FanCell {
            bounds: CellBounds::Ray(r1.clone()),
            representative: r1.clone(),
        });
        cells.push(FanCell {
            representative: sector_representative(r1, r2)?,
            bounds: CellBounds::Sector(r1.clone(), r2.clone()),
        });
    }
    Ok(cells)
}

/// `P_Omega(g)`: hull of the union of all members' exposed faces at `g`.
pub fn converter_image(omega: &Collection, g: &Direction) -> Polytope {
    convex_hull(
        omega
            .members
            .iter()
            .flat_map(|p| p.exposed_face(g).vertices().to_vec()),
    )
    .expect("collections are nonempty")
}

/// `F(Omega)`, evaluated once per cell of the common refinement.
pub fn demyanov_convert(omega: &Collection) -> Result<Collection> {
    let cells = test_directions(omega)?;
    let images: Vec<Polytope> = cells
        .par_iter()
        .map(|c| converter_image(omega, &c.representative))
        .collect();
    Collection::new(images)
}

/// Brute-force image over every primitive direction `(a, b)` with
/// `max(|a|, |b|) <= bound`.
pub fn sampled_convert(omega: &Collection, bound: u32) -> Result<Collection> {
    let b = i64::from(bound.max(1));
    let mut images = BTreeSet::new();
    for x in -b..=b {
        for y in -b..=b {
            if num_integer::gcd(x, y) != 1 {
                continue;
            }
            images.insert(converter_image(omega, &Direction::new(x, y)?));
        }
    }
    Collection::new(images)
}

/// Largest coordinate magnitude over all cell representatives: the sampling
/// bound at which `sampled_convert` is guaranteed to hit every cell.
pub fn max_representative_magnitude(omega: &Collection) -> Result<BigInt> {
    Ok(test_directions(omega)?
        .iter()
        .map(|c| c.representative.magnitude())
        .max()
        .expect("at least one cell"))
}
