//! Lattice point counting in polytopes and their dilates.
//!
//! [`count_points`] walks the integer grid of the bounding box one line at a
//! time: for a fixed prefix of the first `d - 1` coordinates every facet
//! inequality becomes a bound on the last coordinate, so a whole line is
//! settled with one integer division per facet. [`lattice_points`] is the
//! plain point-by-point scan and serves as its reference.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::Result;
use crate::linalg::{dot, Int};
use crate::polytope::{HalfSpace, LatticePoint, Polytope};

/// `(k, G(kP), i(kP), b(kP))` for one dilation factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountTriple {
    pub k: u64,
    pub total: Int,
    pub interior: Int,
    pub boundary: Int,
}

/// Count triples of `kP` for `k = 1..=t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DilationSeries {
    pub base: Polytope,
    pub entries: Vec<CountTriple>,
}

impl DilationSeries {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Boundary counts `b(P), b(2P), ...`.
    pub fn boundary(&self) -> Vec<Int> {
        self.entries.iter().map(|e| e.boundary.clone()).collect()
    }

    pub fn totals(&self) -> Vec<Int> {
        self.entries.iter().map(|e| e.total.clone()).collect()
    }

    pub fn get(&self, k: u64) -> Option<&CountTriple> {
        self.entries.get(usize::try_from(k).ok()?.checked_sub(1)?)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PointClass {
    Interior,
    Boundary,
}

/// Number of lattice points in `p` (in its interior when `strict`).
pub fn count_points(p: &Polytope, strict: bool) -> Int {
    let d = p.dim();
    let (lo, hi) = p.bounding_box();
    // facets with no last-coordinate term can reject a line without division
    let mut facets: Vec<&HalfSpace> = p.facets().iter().collect();
    facets.sort_by_key(|h| (!h.normal()[d - 1].is_zero(), nonzeros(h.normal())));

    if d == 1 {
        return count_line(&facets, &[], &lo[0], &hi[0], strict);
    }
    let first: Vec<Int> = int_range(&lo[0], &hi[0]).collect();
    let per_slice = |x0: &Int| -> Int {
        let mut prefix: Vec<Int> = Vec::with_capacity(d - 1);
        prefix.push(x0.clone());
        prefix.extend(lo[1..d - 1].iter().cloned());
        let mut acc = Int::zero();
        loop {
            acc += count_line(&facets, &prefix, &lo[d - 1], &hi[d - 1], strict);
            if !advance(&mut prefix[1..], &lo[1..d - 1], &hi[1..d - 1]) {
                break;
            }
        }
        acc
    };

    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        first
            .par_iter()
            .map(per_slice)
            .reduce(Int::zero, |a, b| a + b)
    }
    #[cfg(not(feature = "parallel"))]
    {
        first.iter().map(per_slice).sum()
    }
}

fn nonzeros(v: &[Int]) -> usize {
    v.iter().filter(|x| !x.is_zero()).count()
}

fn int_range(lo: &Int, hi: &Int) -> impl Iterator<Item = Int> {
    let hi = hi.clone();
    std::iter::successors(Some(lo.clone()), |x| Some(x + 1u32)).take_while(move |x| *x <= hi)
}

/// Odometer step over the box `[lo, hi]`; false once it wraps around.
fn advance(x: &mut [Int], lo: &[Int], hi: &[Int]) -> bool {
    for i in (0..x.len()).rev() {
        if x[i] < hi[i] {
            x[i] += 1u32;
            return true;
        }
        x[i] = lo[i].clone();
    }
    false
}

/// Points of the line `prefix x [lo, hi]` satisfying every facet inequality.
fn count_line(facets: &[&HalfSpace], prefix: &[Int], lo: &Int, hi: &Int, strict: bool) -> Int {
    let last = prefix.len();
    let mut y_lo = lo.clone();
    let mut y_hi = hi.clone();
    for h in facets {
        let a = &h.normal()[last];
        // need a*y >= rest (or > when strict)
        let rest = h.offset() - dot(&h.normal()[..last], prefix);
        if a.is_zero() {
            let ok = if strict {
                rest.is_negative()
            } else {
                !rest.is_positive()
            };
            if !ok {
                return Int::zero();
            }
            continue;
        }
        if a.is_positive() {
            let bound = if strict {
                rest.div_floor(a) + 1u32
            } else {
                rest.div_ceil(a)
            };
            if bound > y_lo {
                y_lo = bound;
            }
        } else {
            let bound = if strict {
                rest.div_ceil(a) - 1u32
            } else {
                rest.div_floor(a)
            };
            if bound < y_hi {
                y_hi = bound;
            }
        }
        if y_lo > y_hi {
            return Int::zero();
        }
    }
    y_hi - y_lo + Int::one()
}

/// Every lattice point of `p`, classified, in lexicographic order.
pub fn lattice_points(p: &Polytope) -> Vec<(LatticePoint, PointClass)> {
    let (lo, hi) = p.bounding_box();
    let mut x = lo.coords().to_vec();
    let mut out = Vec::new();
    loop {
        if p.facets().iter().all(|h| h.contains(&x)) {
            let class = if p.facets().iter().any(|h| h.on_boundary(&x)) {
                PointClass::Boundary
            } else {
                PointClass::Interior
            };
            out.push((LatticePoint::new(x.clone()), class));
        }
        if !advance(&mut x, &lo, &hi) {
            break;
        }
    }
    out
}

pub fn count_triple(p: &Polytope, k: u64) -> Result<CountTriple> {
    let q = p.dilate(k)?;
    let total = count_points(&q, false);
    let interior = count_points(&q, true);
    let boundary = &total - &interior;
    Ok(CountTriple {
        k,
        total,
        interior,
        boundary,
    })
}

pub fn dilation_series(p: &Polytope, t: u64) -> Result<DilationSeries> {
    let entries = (1..=t).map(|k| count_triple(p, k)).collect::<Result<_>>()?;
    Ok(DilationSeries {
        base: p.clone(),
        entries,
    })
}
