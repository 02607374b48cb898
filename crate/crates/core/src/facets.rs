//! Direct geometric surface area and volume.
//!
//! The relative volume of a facet is measured in coordinates of the lattice
//! `{x : <normal, x> = 0} ∩ Z^d`, which turns `vol_{d-1}(F) / det(aff F ∩ Z^d)`
//! into an ordinary Euclidean volume in `Z^{d-1}`. Volumes come from a pulling
//! triangulation: each face is coned from its lexicographically smallest
//! vertex over the triangulated sub-faces not containing it.

use std::collections::BTreeSet;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{
    det_int, factorial, hnf_kernel_basis, lattice_coordinates, Int, IntMatrix, Rat,
};
use crate::polytope::{affine_dimension, HalfSpace, LatticePoint, Polytope};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacetGeometry {
    pub halfspace: HalfSpace,
    pub facet_vertices: Vec<LatticePoint>,
    /// Rows form a basis of the facet hyperplane's lattice.
    pub lattice_chart: IntMatrix,
    pub relative_volume: Rat,
}

fn affine_dim_of(p: &Polytope, idx: &[usize]) -> usize {
    let pts: Vec<&[Int]> = idx.iter().map(|&i| p.vertices()[i].coords()).collect();
    affine_dimension(&pts).unwrap_or(0)
}

fn facet_indices(p: &Polytope, h: &HalfSpace) -> Result<Vec<usize>> {
    if h.normal().len() != p.dim() {
        return Err(Error::DimensionMismatch {
            expected: p.dim(),
            found: h.normal().len(),
        });
    }
    if !p.vertices().iter().all(|v| h.contains(v)) {
        return Err(Error::NotAFacet);
    }
    let idx = p.tight_vertices(h);
    if idx.is_empty() || affine_dim_of(p, &idx) + 1 != p.dim() {
        return Err(Error::NotAFacet);
    }
    Ok(idx)
}

/// Vertices of `p` on the hyperplane of the facet `h`.
pub fn facet_vertices(p: &Polytope, h: &HalfSpace) -> Result<Vec<LatticePoint>> {
    Ok(facet_indices(p, h)?
        .into_iter()
        .map(|i| p.vertices()[i].clone())
        .collect())
}

/// Pulling triangulation of the face spanned by the vertex indices `face`
/// (ascending, so `face[0]` is the lexicographic minimum), of dimension
/// `dim`. Each simplex is returned as `dim + 1` vertex indices.
pub fn triangulate_face(p: &Polytope, face: &[usize], dim: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(dim + 1);
    pull(p, face, dim, &mut prefix, &mut out);
    out
}

fn pull(
    p: &Polytope,
    face: &[usize],
    dim: usize,
    prefix: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    let apex = face[0];
    prefix.push(apex);
    if dim == 0 {
        out.push(prefix.clone());
    } else {
        // facets of this face are its intersections with facets of p
        let mut subfaces = BTreeSet::new();
        for h in p.facets() {
            let sub: Vec<usize> = face
                .iter()
                .copied()
                .filter(|&i| h.on_boundary(&p.vertices()[i]))
                .collect();
            if sub.len() < dim || sub.len() == face.len() || sub[0] == apex {
                continue;
            }
            if affine_dim_of(p, &sub) + 1 == dim {
                subfaces.insert(sub);
            }
        }
        for sub in subfaces {
            pull(p, &sub, dim - 1, prefix, out);
        }
    }
    prefix.pop();
}

/// Full-dimensional simplices covering `p` without overlap.
pub fn triangulate(p: &Polytope) -> Vec<Vec<usize>> {
    let all: Vec<usize> = (0..p.vertices().len()).collect();
    triangulate_face(p, &all, p.dim())
}

/// `vol_{d-1}(F) / det(aff F ∩ Z^d)` for the facet `h`, measured in the given
/// chart (any basis of the facet hyperplane lattice).
pub fn relative_volume_in_chart(p: &Polytope, h: &HalfSpace, chart: &IntMatrix) -> Result<Rat> {
    let idx = facet_indices(p, h)?;
    let d = p.dim();
    let mut total = Int::zero();
    for simplex in triangulate_face(p, &idx, d - 1) {
        let base = &p.vertices()[simplex[0]];
        let rows = simplex[1..]
            .iter()
            .map(|&i| {
                let diff = p.vertices()[i].sub(base);
                lattice_coordinates(chart, &diff).ok_or_else(|| {
                    Error::Internal(format!(
                        "edge {diff:?} of facet {h} has no integer chart coordinates"
                    ))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        total += det_int(&IntMatrix::from_rows(rows)?)?.abs();
    }
    Ok(Rat::new(total, factorial(d - 1)))
}

pub fn facet_geometry(p: &Polytope, h: &HalfSpace) -> Result<FacetGeometry> {
    let facet_vertices = facet_vertices(p, h)?;
    let lattice_chart = hnf_kernel_basis(h.normal())?;
    let relative_volume = relative_volume_in_chart(p, h, &lattice_chart)?;
    Ok(FacetGeometry {
        halfspace: h.clone(),
        facet_vertices,
        lattice_chart,
        relative_volume,
    })
}

pub fn relative_facet_volume(p: &Polytope, h: &HalfSpace) -> Result<Rat> {
    Ok(facet_geometry(p, h)?.relative_volume)
}

/// Lattice surface area as the sum of relative facet volumes.
pub fn surface_direct(p: &Polytope) -> Result<Rat> {
    p.facets().iter().map(|h| relative_facet_volume(p, h)).sum()
}

/// Euclidean volume by triangulation.
pub fn volume_direct(p: &Polytope) -> Result<Rat> {
    let mut total = Int::zero();
    for simplex in triangulate(p) {
        let base = &p.vertices()[simplex[0]];
        let m = IntMatrix::from_rows(simplex[1..].iter().map(|&i| p.vertices()[i].sub(base)))?;
        total += det_int(&m)?.abs();
    }
    Ok(Rat::new(total, factorial(p.dim())))
}
