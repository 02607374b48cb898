//! Full-dimensional lattice polytopes in vertex and half-space form.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::Deref;

use itertools::Itertools;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{det_int, dot, gcd_all, rank, Int, IntMatrix};

/// A point of `Z^d`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticePoint(Vec<Int>);

impl LatticePoint {
    pub fn new(coords: Vec<Int>) -> Self {
        LatticePoint(coords)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Int] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Int> {
        self.0
    }

    pub fn scaled(&self, k: &Int) -> LatticePoint {
        LatticePoint(self.0.iter().map(|x| x * k).collect())
    }

    pub fn sub(&self, other: &LatticePoint) -> Vec<Int> {
        self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()
    }

    pub fn is_primitive(&self) -> bool {
        gcd_all(&self.0).is_one()
    }
}

impl Deref for LatticePoint {
    type Target = [Int];

    fn deref(&self) -> &[Int] {
        &self.0
    }
}

impl From<Vec<i64>> for LatticePoint {
    fn from(v: Vec<i64>) -> Self {
        LatticePoint(v.into_iter().map(Int::from).collect())
    }
}

impl<const N: usize> From<[i64; N]> for LatticePoint {
    fn from(v: [i64; N]) -> Self {
        LatticePoint(v.into_iter().map(Int::from).collect())
    }
}

impl fmt::Debug for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().join(","))
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().join(", "))
    }
}

/// The closed half-space `{x : <normal, x> >= offset}` with a primitive
/// integer normal pointing into the polytope.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfSpace {
    normal: Vec<Int>,
    offset: Int,
}

impl HalfSpace {
    /// Normalizes `normal` to be primitive, scaling `offset` by the same
    /// factor. Offsets that do not divide evenly are rounded up, which keeps
    /// the set of lattice points unchanged.
    pub fn new(normal: Vec<Int>, offset: Int) -> Result<Self> {
        let g = gcd_all(&normal);
        if g.is_zero() {
            return Err(Error::DegenerateNormal);
        }
        let normal = normal.into_iter().map(|x| x / &g).collect();
        let offset = num_integer::Integer::div_ceil(&offset, &g);
        Ok(HalfSpace { normal, offset })
    }

    pub fn normal(&self) -> &[Int] {
        &self.normal
    }

    pub fn offset(&self) -> &Int {
        &self.offset
    }

    /// Lattice distance of `x` from the bounding hyperplane, signed so that
    /// points inside are non-negative.
    pub fn slack(&self, x: &[Int]) -> Int {
        dot(&self.normal, x) - &self.offset
    }

    pub fn contains(&self, x: &[Int]) -> bool {
        !self.slack(x).is_negative()
    }

    pub fn on_boundary(&self, x: &[Int]) -> bool {
        self.slack(x).is_zero()
    }

    fn scaled(&self, k: &Int) -> HalfSpace {
        HalfSpace {
            normal: self.normal.clone(),
            offset: &self.offset * k,
        }
    }
}

impl fmt::Display for HalfSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "<({}), x> >= {}",
            self.normal.iter().join(", "),
            self.offset
        )
    }
}

/// A full-dimensional lattice polytope. Vertices are sorted
/// lexicographically; facets are sorted by (normal, offset).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polytope {
    dim: usize,
    vertices: Vec<LatticePoint>,
    facets: Vec<HalfSpace>,
    dropped: Vec<LatticePoint>,
}

/// Affine dimension of a point set (`None` for the empty set).
pub fn affine_dimension(points: &[&[Int]]) -> Option<usize> {
    let (first, rest) = points.split_first()?;
    if rest.is_empty() {
        return Some(0);
    }
    let diffs = IntMatrix::from_rows(rest.iter().map(|p| {
        p.iter()
            .zip(first.iter())
            .map(|(a, b)| a - b)
            .collect::<Vec<_>>()
    }))
    .expect("points share a dimension");
    Some(rank(&diffs))
}

/// Integer normal of the hyperplane through `d` points of `Z^d`, via signed
/// maximal minors of the difference matrix. Zero iff the points are affinely
/// dependent.
fn hyperplane_normal(points: &[&LatticePoint]) -> Vec<Int> {
    let d = points[0].dim();
    let base = points[0];
    let diffs: Vec<Vec<Int>> = points[1..].iter().map(|p| p.sub(base)).collect();
    (0..d)
        .map(|skip| {
            let minor = IntMatrix::from_rows(diffs.iter().map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(j, _)| *j != skip)
                    .map(|(_, x)| x.clone())
                    .collect::<Vec<_>>()
            }))
            .expect("rectangular");
            let m = det_int(&minor).expect("square minor");
            if skip % 2 == 0 {
                m
            } else {
                -m
            }
        })
        .collect()
}

/// Builds the convex hull of `points` in `Z^d`.
///
/// Facets are found by testing the hyperplane through every affinely
/// independent `d`-subset; a hyperplane is kept when all points lie weakly on
/// one side. Points that are not extreme are dropped and remembered in
/// [`Polytope::dropped_points`].
pub fn build_polytope(points: &[LatticePoint], d: usize) -> Result<Polytope> {
    if points.is_empty() {
        return Err(Error::Empty);
    }
    if d == 0 {
        return Err(Error::UnsupportedDimension {
            dim: 0,
            reason: "polytopes need at least one coordinate",
        });
    }
    if let Some(p) = points.iter().find(|p| p.dim() != d) {
        return Err(Error::DimensionMismatch {
            expected: d,
            found: p.dim(),
        });
    }
    let unique: Vec<LatticePoint> = points
        .iter()
        .cloned()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let refs: Vec<&[Int]> = unique.iter().map(|p| p.coords()).collect();
    let found = affine_dimension(&refs).unwrap_or(0);
    if found < d {
        return Err(Error::LowerDimensional { dim: d, found });
    }

    let mut facets = BTreeSet::new();
    for subset in unique.iter().combinations(d) {
        let normal = hyperplane_normal(&subset);
        if normal.iter().all(Zero::is_zero) {
            continue;
        }
        let g = gcd_all(&normal);
        let mut normal: Vec<Int> = normal.into_iter().map(|x| x / &g).collect();
        let level = dot(&normal, subset[0]);
        let mut above = false;
        let mut below = false;
        for p in &unique {
            match dot(&normal, p).cmp(&level) {
                std::cmp::Ordering::Greater => above = true,
                std::cmp::Ordering::Less => below = true,
                std::cmp::Ordering::Equal => {}
            }
            if above && below {
                break;
            }
        }
        let offset = match (above, below) {
            (true, true) => continue,
            (_, false) => level,
            (false, true) => {
                normal.iter_mut().for_each(|x| *x = -x.clone());
                -level
            }
        };
        facets.insert(HalfSpace { normal, offset });
    }
    let facets: Vec<HalfSpace> = facets.into_iter().collect();

    let mut vertices = Vec::new();
    let mut dropped = Vec::new();
    for p in unique {
        let tight: Vec<Vec<Int>> = facets
            .iter()
            .filter(|h| h.on_boundary(&p))
            .map(|h| h.normal.clone())
            .collect();
        let is_vertex = tight.len() >= d && rank(&IntMatrix::from_rows(tight)?) == d;
        if is_vertex {
            vertices.push(p);
        } else {
            dropped.push(p);
        }
    }
    // duplicates count as dropped input too
    let mut seen = BTreeSet::new();
    for p in points {
        if !seen.insert(p) && !dropped.contains(p) {
            dropped.push(p.clone());
        }
    }
    Ok(Polytope {
        dim: d,
        vertices,
        facets,
        dropped,
    })
}

impl Polytope {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[LatticePoint] {
        &self.vertices
    }

    pub fn facets(&self) -> &[HalfSpace] {
        &self.facets
    }

    /// Input points that were not vertices (interior, on a face, or repeated).
    pub fn dropped_points(&self) -> &[LatticePoint] {
        &self.dropped
    }

    /// The dilate `kP`: vertices scaled by `k`, facet offsets scaled by `k`.
    pub fn dilate(&self, k: u64) -> Result<Polytope> {
        if k == 0 {
            return Err(Error::DegenerateDilate);
        }
        let k = Int::from(k);
        Ok(Polytope {
            dim: self.dim,
            vertices: self.vertices.iter().map(|v| v.scaled(&k)).collect(),
            facets: self.facets.iter().map(|h| h.scaled(&k)).collect(),
            dropped: Vec::new(),
        })
    }

    /// Membership by facet inequalities; `strict` tests the interior.
    pub fn contains(&self, x: &[Int], strict: bool) -> Result<bool> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: x.len(),
            });
        }
        Ok(self.facets.iter().all(|h| {
            let s = h.slack(x);
            if strict {
                s.is_positive()
            } else {
                !s.is_negative()
            }
        }))
    }

    /// Componentwise minimum and maximum over the vertices.
    pub fn bounding_box(&self) -> (LatticePoint, LatticePoint) {
        let mut lo = self.vertices[0].coords().to_vec();
        let mut hi = lo.clone();
        for v in &self.vertices[1..] {
            for (i, x) in v.iter().enumerate() {
                if *x < lo[i] {
                    lo[i] = x.clone();
                }
                if *x > hi[i] {
                    hi[i] = x.clone();
                }
            }
        }
        (LatticePoint(lo), LatticePoint(hi))
    }

    /// Indices of vertices lying on the hyperplane of `h`.
    pub fn tight_vertices(&self, h: &HalfSpace) -> Vec<usize> {
        (0..self.vertices.len())
            .filter(|&i| h.on_boundary(&self.vertices[i]))
            .collect()
    }

    /// Whether the origin lies strictly inside, i.e. every offset is negative.
    pub fn origin_in_interior(&self) -> bool {
        self.facets.iter().all(|h| h.offset.is_negative())
    }
}
