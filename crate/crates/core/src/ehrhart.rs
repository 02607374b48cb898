//! Ehrhart polynomials by exact interpolation of dilate counts.

use std::fmt;

use itertools::Itertools;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lattice::{count_points, count_triple};
use crate::linalg::{format_rat, solve_cramer, Int, IntMatrix, Rat};
use crate::polytope::Polytope;

/// `E(x) = e_0 + e_1 x + ... + e_d x^d` with exact rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EhrhartPolynomial {
    coeffs: Vec<Rat>,
}

impl EhrhartPolynomial {
    /// Wraps raw coefficients `e_0..e_d`. No lattice-polytope invariants are
    /// checked here.
    pub fn from_coeffs(coeffs: Vec<Rat>) -> Self {
        assert!(!coeffs.is_empty(), "polynomial needs at least e_0");
        EhrhartPolynomial { coeffs }
    }

    /// The degree-`d` polynomial through `(k, counts[k])` for `k = 0..=d`.
    pub fn from_counts(counts: &[Int]) -> Result<Self> {
        if counts.is_empty() {
            return Err(Error::InsufficientSeries { have: 0, need: 1 });
        }
        let vandermonde = IntMatrix::from_rows((0..counts.len()).map(|k| {
            let k = Int::from(k);
            std::iter::successors(Some(Int::one()), move |p| Some(p * &k))
                .take(counts.len())
                .collect::<Vec<_>>()
        }))?;
        Ok(EhrhartPolynomial {
            coeffs: solve_cramer(&vandermonde, counts)?,
        })
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &Rat {
        &self.coeffs[i]
    }

    /// Horner evaluation at an integer.
    pub fn eval(&self, x: &Int) -> Rat {
        let x = Rat::from_integer(x.clone());
        self.coeffs
            .iter()
            .rev()
            .fold(Rat::zero(), |acc, c| acc * &x + c)
    }
}

impl fmt::Display for EhrhartPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                let coef = if i > 0 && c.is_one() {
                    String::new()
                } else if i == 0 || c.is_integer() {
                    format_rat(c)
                } else {
                    format!("({})", format_rat(c))
                };
                match i {
                    0 => coef,
                    1 => format!("{coef}n"),
                    _ => format!("{coef}n^{i}"),
                }
            });
        write!(f, "{}", terms.format(" + "))
    }
}

/// Interpolates the Ehrhart polynomial from `G(kP)` for `k = 0..=d`, taking
/// `G(0P) = 1`.
pub fn interpolate(p: &Polytope) -> Result<EhrhartPolynomial> {
    let d = p.dim();
    let mut counts = Vec::with_capacity(d + 1);
    counts.push(Int::one());
    for k in 1..=d as u64 {
        counts.push(count_points(&p.dilate(k)?, false));
    }
    EhrhartPolynomial::from_counts(&counts)
}

/// Leading coefficient, the Euclidean volume.
pub fn volume_from_ehrhart(e: &EhrhartPolynomial) -> Rat {
    e.coeff(e.dim()).clone()
}

/// `2 e_{d-1}`, the lattice surface area.
pub fn surface_from_ehrhart(e: &EhrhartPolynomial) -> Rat {
    e.coeff(e.dim() - 1) * Rat::from_integer(Int::from(2))
}

/// Checks `E(-k) = (-1)^d i(kP)` against a fresh interior count.
pub fn check_reciprocity(e: &EhrhartPolynomial, p: &Polytope, k: u64) -> Result<bool> {
    let interior = count_triple(p, k)?.interior;
    let signed = if p.dim().is_multiple_of(2) {
        interior
    } else {
        -interior
    };
    Ok(e.eval(&-Int::from(k)) == Rat::from_integer(signed))
}

pub fn check_constant_term(e: &EhrhartPolynomial) -> bool {
    e.coeff(0).is_one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::linalg::{int, rat};

    fn coeffs(v: &[(i64, i64)]) -> Vec<Rat> {
        v.iter().map(|&(n, d)| rat(n, d)).collect()
    }

    #[test]
    fn interpolation_examples() {
        let sq = interpolate(&corpus::unit_cube(2)).unwrap();
        assert_eq!(sq.coeffs(), &coeffs(&[(1, 1), (2, 1), (1, 1)])[..]);
        let tri = interpolate(&corpus::standard_simplex(2)).unwrap();
        assert_eq!(tri.coeffs(), &coeffs(&[(1, 1), (3, 2), (1, 2)])[..]);
        let cube = interpolate(&corpus::unit_cube(3)).unwrap();
        assert_eq!(
            cube.coeffs(),
            &coeffs(&[(1, 1), (3, 1), (3, 1), (1, 1)])[..]
        );
        let simplex = interpolate(&corpus::standard_simplex(3)).unwrap();
        assert_eq!(
            simplex.coeffs(),
            &coeffs(&[(1, 1), (11, 6), (1, 1), (1, 6)])[..]
        );
        let oct = interpolate(&corpus::cross_polytope(3)).unwrap();
        assert_eq!(oct.coeffs(), &coeffs(&[(1, 1), (8, 3), (2, 1), (4, 3)])[..]);
    }

    #[test]
    fn from_counts_matches_octahedron_counts() {
        // G(kP) for the octahedron at k = 0..3
        let e = EhrhartPolynomial::from_counts(&[int(1), int(7), int(25), int(63)]).unwrap();
        assert_eq!(volume_from_ehrhart(&e), rat(4, 3));
        assert_eq!(surface_from_ehrhart(&e), rat(4, 1));
    }

    #[test]
    fn volume_and_surface() {
        let cube = interpolate(&corpus::unit_cube(3)).unwrap();
        assert_eq!(volume_from_ehrhart(&cube), rat(1, 1));
        assert_eq!(surface_from_ehrhart(&cube), rat(6, 1));
        let tri = interpolate(&corpus::standard_simplex(2)).unwrap();
        assert_eq!(volume_from_ehrhart(&tri), rat(1, 2));
        let simplex = interpolate(&corpus::standard_simplex(3)).unwrap();
        assert_eq!(surface_from_ehrhart(&simplex), rat(2, 1));
    }

    #[test]
    fn reciprocity_examples() {
        let tri = corpus::standard_simplex(2);
        let e = interpolate(&tri).unwrap();
        assert_eq!(e.eval(&int(-3)), rat(1, 1));
        assert!(check_reciprocity(&e, &tri, 3).unwrap());

        let sq = corpus::unit_cube(2);
        let e = interpolate(&sq).unwrap();
        assert_eq!(e.eval(&int(-1)), rat(0, 1));
        assert!(check_reciprocity(&e, &sq, 1).unwrap());

        let cube = corpus::unit_cube(3);
        let e = interpolate(&cube).unwrap();
        assert_eq!(e.eval(&int(-2)), rat(-1, 1));
        assert!(check_reciprocity(&e, &cube, 2).unwrap());
    }

    #[test]
    fn reciprocity_detects_wrong_polynomial() {
        let sq = corpus::unit_cube(2);
        let wrong = EhrhartPolynomial::from_coeffs(coeffs(&[(1, 1), (3, 1), (1, 1)]));
        assert!(!check_reciprocity(&wrong, &sq, 2).unwrap());
    }

    #[test]
    fn constant_term() {
        assert!(check_constant_term(
            &interpolate(&corpus::unit_cube(2)).unwrap()
        ));
        assert!(check_constant_term(
            &interpolate(&corpus::standard_simplex(3)).unwrap()
        ));
        let synthetic = EhrhartPolynomial::from_coeffs(coeffs(&[(2, 1), (1, 1)]));
        assert!(!check_constant_term(&synthetic));
    }

    #[test]
    fn display() {
        let tri = interpolate(&corpus::standard_simplex(2)).unwrap();
        assert_eq!(tri.to_string(), "(1/2)n^2 + (3/2)n + 1");
        let square = EhrhartPolynomial::from_coeffs(vec![rat(1, 1), rat(2, 1), rat(1, 1)]);
        assert_eq!(square.to_string(), "n^2 + 2n + 1");
    }
}
