//! Fano and reflexive polytopes, the polar dual, and the volume identities
//! that tie reflexivity to lattice surface area.
//!
//! "Fano" here means: the origin is strictly interior and every vertex is a
//! primitive lattice vector.
//!
//! With inward primitive normals, the dual `P* = {y : <x, y> >= -1 for x in P}`
//! has one vertex `a / (-c)` per facet `<a, x> >= c`, so `P*` is a lattice
//! polytope exactly when every facet offset is `-1`.

use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::facets::{surface_direct, volume_direct};
use crate::linalg::{Int, Rat};
use crate::polytope::{build_polytope, LatticePoint, Polytope};
use crate::surface::surface_determinant;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualDescription {
    pub vertices: Vec<Vec<Rat>>,
    pub is_lattice: bool,
}

impl DualDescription {
    /// The dual as a lattice polytope, when it is one.
    pub fn to_lattice_polytope(&self) -> Option<Result<Polytope>> {
        if !self.is_lattice {
            return None;
        }
        let d = self.vertices.first().map_or(0, Vec::len);
        let points: Vec<LatticePoint> = self
            .vertices
            .iter()
            .map(|v| LatticePoint::new(v.iter().map(Rat::to_integer).collect()))
            .collect();
        Some(build_polytope(&points, d))
    }
}

pub fn is_fano(p: &Polytope) -> bool {
    p.origin_in_interior() && p.vertices().iter().all(LatticePoint::is_primitive)
}

pub fn dual_polytope(p: &Polytope) -> Result<DualDescription> {
    if !p.origin_in_interior() {
        return Err(Error::OriginNotInterior);
    }
    let vertices = p
        .facets()
        .iter()
        .map(|h| {
            let height = -h.offset();
            h.normal()
                .iter()
                .map(|a| Rat::new(a.clone(), height.clone()))
                .collect()
        })
        .collect();
    let is_lattice = p.facets().iter().all(|h| (-h.offset()).is_one());
    Ok(DualDescription {
        vertices,
        is_lattice,
    })
}

/// Origin strictly inside and every facet at lattice distance one from it.
pub fn is_reflexive(p: &Polytope) -> bool {
    p.origin_in_interior() && p.facets().iter().all(|h| (-h.offset()).is_one())
}

/// For Fano input: does `vol(P) = surf(P) / d` hold exactly? Both sides come
/// from the triangulation oracle.
pub fn check_volume_identity(p: &Polytope) -> Result<bool> {
    if !is_fano(p) {
        return Err(Error::NotFano);
    }
    let d = Rat::from_integer(Int::from(p.dim()));
    Ok(volume_direct(p)? == surface_direct(p)? / d)
}

/// Determinant-formula surface area divided by `d`; equals the volume
/// exactly when `p` is reflexive.
pub fn reflexive_volume_formula(p: &Polytope) -> Result<Rat> {
    let d = Rat::from_integer(Int::from(p.dim()));
    Ok(surface_determinant(p)? / d)
}

/// Largest lattice distance from the origin to a facet hyperplane, or `None`
/// when the origin is not interior.
pub fn max_facet_height(p: &Polytope) -> Option<Int> {
    if !p.origin_in_interior() {
        return None;
    }
    p.facets().iter().map(|h| h.offset().abs()).max()
}
