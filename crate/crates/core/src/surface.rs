//! Lattice surface area from boundary point counts of the first few dilates.
//!
//! Subtracting the reciprocity law from the Ehrhart polynomial leaves only
//! the coefficients of one parity:
//!
//! ```text
//! odd d:   b(kP) - 2 = 2e_{d-1} k^{d-1} + 2e_{d-3} k^{d-3} + ... + 2e_2 k^2
//! even d:  b(kP)     = 2e_{d-1} k^{d-1} + 2e_{d-3} k^{d-3} + ... + 2e_1 k
//! ```
//!
//! Taking `k = 1..t` gives a square system in the unknowns `2e_{d-1}, ...`,
//! and Cramer's rule yields the surface area `2e_{d-1}` as a quotient of two
//! determinants. The denominator depends only on `d`.

use num_traits::Zero;

use crate::ehrhart::EhrhartPolynomial;
use crate::error::{Error, Result};
use crate::lattice::{count_triple, dilation_series, DilationSeries};
use crate::linalg::{det_int, Int, IntMatrix, Rat};
use crate::polytope::Polytope;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Odd,
    Even,
}

impl Parity {
    pub fn of(d: usize) -> Parity {
        if d.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// The numerator (`A` for odd `d`, `B` for even `d`) and denominator (`D`)
/// matrices of the determinant formula.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceSystem {
    pub d: usize,
    pub parity: Parity,
    pub t: usize,
    pub numerator: IntMatrix,
    pub denominator: IntMatrix,
    /// Exponents of the trailing columns: `d-3, d-5, ...` down to 2 (odd) or
    /// 1 (even).
    pub exponents: Vec<u32>,
}

/// Number of dilates the formula needs: `(d-1)/2` for odd `d`, `d/2` for even.
pub fn system_size(d: usize) -> usize {
    match Parity::of(d) {
        Parity::Odd => (d - 1) / 2,
        Parity::Even => d / 2,
    }
}

pub fn column_exponents(d: usize) -> Vec<u32> {
    let last = match Parity::of(d) {
        Parity::Odd => 2,
        Parity::Even => 1,
    };
    let d = d as u32;
    if d < 3 + last {
        return Vec::new();
    }
    (last..=d - 3).rev().step_by(2).collect()
}

fn check_dim(d: usize) -> Result<()> {
    if d < 2 {
        return Err(Error::UnsupportedDimension {
            dim: d,
            reason: "the determinant formula needs d >= 2",
        });
    }
    Ok(())
}

fn power_row(k: usize, first: u32, exponents: &[u32]) -> Vec<Int> {
    let k = Int::from(k);
    std::iter::once(first)
        .chain(exponents.iter().copied())
        .map(|e| num_traits::pow(k.clone(), e as usize))
        .collect()
}

/// `D(P, d)`; rows `[k^{d-1}, k^{d-3}, ...]` for `k = 1..t`.
pub fn denominator_matrix(d: usize) -> Result<IntMatrix> {
    check_dim(d)?;
    let exps = column_exponents(d);
    IntMatrix::from_rows((1..=system_size(d)).map(|k| power_row(k, d as u32 - 1, &exps)))
}

pub fn build_system(series: &DilationSeries, d: usize) -> Result<SurfaceSystem> {
    check_dim(d)?;
    let t = system_size(d);
    if series.len() < t {
        return Err(Error::InsufficientSeries {
            have: series.len(),
            need: t,
        });
    }
    let parity = Parity::of(d);
    let exponents = column_exponents(d);
    let shift = match parity {
        Parity::Odd => Int::from(2),
        Parity::Even => Int::zero(),
    };
    let numerator = IntMatrix::from_rows(series.entries[..t].iter().map(|e| {
        let mut row = power_row(e.k as usize, 0, &exponents);
        row[0] = &e.boundary - &shift;
        row
    }))?;
    Ok(SurfaceSystem {
        d,
        parity,
        t,
        numerator,
        denominator: denominator_matrix(d)?,
        exponents,
    })
}

impl SurfaceSystem {
    pub fn numerator_det(&self) -> Result<Int> {
        det_int(&self.numerator)
    }

    pub fn denominator_det(&self) -> Result<Int> {
        det_int(&self.denominator)
    }

    /// `det(numerator) / det(denominator)`.
    pub fn surface(&self) -> Result<Rat> {
        let den = self.denominator_det()?;
        if den.is_zero() {
            return Err(Error::Singular);
        }
        Ok(Rat::new(self.numerator_det()?, den))
    }
}

/// Surface area as the determinant quotient over `b(P), ..., b(tP)`.
pub fn surface_determinant(p: &Polytope) -> Result<Rat> {
    let d = p.dim();
    check_dim(d)?;
    let series = dilation_series(p, system_size(d) as u64)?;
    build_system(&series, d)?.surface()
}

/// Closed forms for `d <= 5`, written out from the determinant quotient.
pub fn surface_closed_form(p: &Polytope) -> Result<Rat> {
    let d = p.dim();
    let b = |k: u64| -> Result<Int> { Ok(count_triple(p, k)?.boundary) };
    let r = |n: Int, den: i64| Rat::new(n, Int::from(den));
    match d {
        2 => Ok(Rat::from_integer(b(1)?)),
        3 => Ok(Rat::from_integer(b(1)? - 2)),
        4 => {
            let (b1, b2) = (b(1)?, b(2)?);
            Ok(r(b2 - b1 * 2, 6))
        }
        5 => {
            let (b1, b2) = (b(1)?, b(2)?);
            Ok(closed_form_5(&b1, &b2))
        }
        _ => Err(Error::UnsupportedDimension {
            dim: d,
            reason: "closed forms exist for d = 2..5",
        }),
    }
}

/// `(b(2P) - 4b(P) + 6) / 12`.
pub fn closed_form_5(b1: &Int, b2: &Int) -> Rat {
    Rat::new(b2 - b1 * 4 + 6, Int::from(12))
}

/// `(b(2P) - 4b(P) - 6) / 12`, the variant with the constant's sign flipped.
/// It disagrees with the determinant quotient by exactly one and is kept
/// only so reports can show the discrepancy.
pub fn closed_form_5_minus6(b1: &Int, b2: &Int) -> Rat {
    Rat::new(b2 - b1 * 4 - 6, Int::from(12))
}

/// Pick's formula `i + b/2 - 1` for lattice polygons.
pub fn pick_area(p: &Polytope) -> Result<Rat> {
    if p.dim() != 2 {
        return Err(Error::UnsupportedDimension {
            dim: p.dim(),
            reason: "Pick's formula is for polygons",
        });
    }
    let c = count_triple(p, 1)?;
    Ok(
        Rat::from_integer(c.interior) + Rat::new(c.boundary, Int::from(2))
            - Rat::from_integer(Int::from(1)),
    )
}

/// Checks the parity-restricted expansion of `b(kP)` against a fresh count.
pub fn verify_boundary_identity(p: &Polytope, e: &EhrhartPolynomial, k: u64) -> Result<bool> {
    let d = p.dim();
    check_dim(d)?;
    if e.dim() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            found: e.dim(),
        });
    }
    let measured = Rat::from_integer(count_triple(p, k)?.boundary);
    let kk = Rat::from_integer(Int::from(k));
    let two = Rat::from_integer(Int::from(2));
    let mut predicted = Rat::zero();
    let mut exp = d as i64 - 1;
    let stop = match Parity::of(d) {
        Parity::Odd => {
            predicted += &two;
            2
        }
        Parity::Even => 1,
    };
    while exp >= stop {
        predicted += &two * e.coeff(exp as usize) * num_traits::pow(kk.clone(), exp as usize);
        exp -= 2;
    }
    Ok(predicted == measured)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::ehrhart::interpolate;
    use crate::linalg::{int, rat};

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(rows.iter().map(|r| r.iter().copied())).unwrap()
    }

    #[test]
    fn exponents_and_sizes() {
        assert_eq!(column_exponents(2), Vec::<u32>::new());
        assert_eq!(column_exponents(3), Vec::<u32>::new());
        assert_eq!(column_exponents(4), vec![1]);
        assert_eq!(column_exponents(5), vec![2]);
        assert_eq!(column_exponents(8), vec![5, 3, 1]);
        assert_eq!(column_exponents(9), vec![6, 4, 2]);
        let sizes: Vec<usize> = (2..=9).map(system_size).collect();
        assert_eq!(sizes, vec![1, 1, 2, 2, 3, 3, 4, 4]);
    }

    #[test]
    fn denominator_is_nonsingular_up_to_nine() {
        // frozen from an independent sympy evaluation
        let expected = [1i64, 1, -6, -12, -720, -4320, 3628800, 87091200];
        for (d, want) in (2..=9).zip(expected) {
            let den = det_int(&denominator_matrix(d).unwrap()).unwrap();
            assert_eq!(den, int(want), "d = {d}");
        }
    }

    #[test]
    fn systems_for_cubes() {
        let s4 = dilation_series(&corpus::unit_cube(4), 2).unwrap();
        let sys = build_system(&s4, 4).unwrap();
        assert_eq!(sys.numerator, m(&[&[16, 1], &[80, 2]]));
        assert_eq!(sys.denominator, m(&[&[1, 1], &[8, 2]]));

        let s3 = dilation_series(&corpus::unit_cube(3), 1).unwrap();
        let sys = build_system(&s3, 3).unwrap();
        assert_eq!(sys.numerator, m(&[&[6]]));
        assert_eq!(sys.denominator, m(&[&[1]]));

        let s5 = dilation_series(&corpus::unit_cube(5), 2).unwrap();
        let sys = build_system(&s5, 5).unwrap();
        assert_eq!(sys.numerator, m(&[&[30, 1], &[240, 4]]));
        assert_eq!(sys.denominator, m(&[&[1, 1], &[16, 4]]));
        assert_eq!(sys.parity, Parity::Odd);
        assert_eq!(sys.t, 2);
    }

    #[test]
    fn short_series_rejected() {
        let s = dilation_series(&corpus::unit_cube(4), 1).unwrap();
        assert_eq!(
            build_system(&s, 4),
            Err(Error::InsufficientSeries { have: 1, need: 2 })
        );
    }

    #[test]
    fn determinant_surface_of_cubes() {
        assert_eq!(
            surface_determinant(&corpus::unit_cube(3)).unwrap(),
            rat(6, 1)
        );
        assert_eq!(
            surface_determinant(&corpus::unit_cube(4)).unwrap(),
            rat(8, 1)
        );
        assert_eq!(
            surface_determinant(&corpus::unit_cube(5)).unwrap(),
            rat(10, 1)
        );
    }

    #[test]
    fn closed_forms() {
        assert_eq!(
            surface_closed_form(&corpus::unit_cube(3)).unwrap(),
            rat(6, 1)
        );
        assert_eq!(
            surface_closed_form(&corpus::unit_cube(4)).unwrap(),
            rat(8, 1)
        );
        assert_eq!(
            surface_closed_form(&corpus::unit_cube(5)).unwrap(),
            rat(10, 1)
        );
        assert_eq!(
            surface_closed_form(&corpus::unit_cube(2)).unwrap(),
            rat(4, 1)
        );
        assert!(matches!(
            surface_closed_form(&corpus::standard_simplex(6)),
            Err(Error::UnsupportedDimension { dim: 6, .. })
        ));
    }

    #[test]
    fn minus6_variant_is_off_by_one() {
        let (b1, b2) = (int(32), int(242));
        assert_eq!(closed_form_5(&b1, &b2), rat(10, 1));
        assert_eq!(closed_form_5_minus6(&b1, &b2), rat(9, 1));
    }

    #[test]
    fn pick_examples() {
        assert_eq!(pick_area(&corpus::unit_cube(2)).unwrap(), rat(1, 1));
        let tri = corpus::polygon(&[[0, 0], [2, 0], [0, 2]]);
        assert_eq!(pick_area(&tri).unwrap(), rat(2, 1));
        assert_eq!(pick_area(&corpus::centered_cube(2)).unwrap(), rat(4, 1));
        assert!(pick_area(&corpus::unit_cube(3)).is_err());
    }

    #[test]
    fn boundary_identity_examples() {
        let c3 = corpus::unit_cube(3);
        assert!(verify_boundary_identity(&c3, &interpolate(&c3).unwrap(), 2).unwrap());
        let sq = corpus::unit_cube(2);
        assert!(verify_boundary_identity(&sq, &interpolate(&sq).unwrap(), 3).unwrap());
        let c4 = corpus::unit_cube(4);
        assert!(verify_boundary_identity(&c4, &interpolate(&c4).unwrap(), 1).unwrap());
    }

    #[test]
    fn boundary_identity_rejects_wrong_coefficients() {
        let sq = corpus::unit_cube(2);
        let wrong = EhrhartPolynomial::from_coeffs(vec![rat(1, 1), rat(3, 1), rat(1, 1)]);
        assert!(!verify_boundary_identity(&sq, &wrong, 1).unwrap());
    }
}
