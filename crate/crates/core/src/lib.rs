//! Exact lattice point counting, Ehrhart polynomials, and lattice surface
//! areas of full-dimensional lattice polytopes.
//!
//! The surface area of a lattice polytope `P` is computed along three
//! independent routes that must agree exactly:
//!
//! * [`surface::surface_determinant`]: a quotient of two determinants built
//!   from the boundary counts `b(P), b(2P), ..., b(tP)`;
//! * [`ehrhart::surface_from_ehrhart`]: twice the second-highest coefficient
//!   of the interpolated Ehrhart polynomial;
//! * [`facets::surface_direct`]: the sum over facets of their volumes
//!   relative to the facet hyperplane lattice.
//!
//! All arithmetic is over arbitrary-precision integers and rationals.
//!
//! ```
//! use ehrlatt_core::{build_polytope, ehrhart, facets, linalg::rat, surface, LatticePoint};
//!
//! let pts: Vec<LatticePoint> = [[1, 0, 0], [-1, 0, 0], [0, 1, 0], [0, -1, 0], [0, 0, 1], [0, 0, -1]]
//!     .into_iter()
//!     .map(LatticePoint::from)
//!     .collect();
//! let p = build_polytope(&pts, 3)?;
//! let e = ehrhart::interpolate(&p)?;
//! assert_eq!(e.coeffs(), [rat(1, 1), rat(8, 3), rat(2, 1), rat(4, 3)]);
//! assert_eq!(surface::surface_determinant(&p)?, facets::surface_direct(&p)?);
//! assert_eq!(ehrhart::surface_from_ehrhart(&e), rat(4, 1));
//! # Ok::<(), ehrlatt_core::Error>(())
//! ```

pub mod corpus;
pub mod ehrhart;
pub mod error;
pub mod facets;
pub mod io;
pub mod lattice;
pub mod linalg;
pub mod polytope;
pub mod reflexive;
pub mod surface;

pub use error::{Error, Result};
pub use linalg::{Int, IntMatrix, Rat};
pub use polytope::{build_polytope, HalfSpace, LatticePoint, Polytope};
