//! Exact integer and rational linear algebra.
//!
//! Everything here works over arbitrary-precision integers: determinants are
//! computed by fraction-free (Bareiss) elimination, linear systems by Cramer's
//! rule, and sublattice bases by Hermite normal form.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision integer.
pub type Int = BigInt;
/// Exact rational, always kept in lowest terms with a positive denominator.
pub type Rat = BigRational;

pub fn int(v: i64) -> Int {
    Int::from(v)
}

pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(Int::from(num), Int::from(den))
}

/// Renders a rational as `p` or `p/q`.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn factorial(n: usize) -> Int {
    (1..=n).fold(Int::one(), |acc, i| acc * Int::from(i))
}

/// Non-negative gcd of all entries; zero for an all-zero (or empty) vector.
pub fn gcd_all(v: &[Int]) -> Int {
    v.iter().fold(Int::zero(), |g, x| g.gcd(x))
}

pub fn dot(a: &[Int], b: &[Int]) -> Int {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Dense integer matrix, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Int>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![Int::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Int::one();
        }
        m
    }

    /// Builds a matrix from nested rows. Ragged input is a dimension error.
    pub fn from_rows<R, T>(rows: impl IntoIterator<Item = R>) -> Result<Self>
    where
        R: IntoIterator<Item = T>,
        T: Into<Int>,
    {
        let mut data = Vec::new();
        let mut n_rows = 0;
        let mut n_cols = None;
        for row in rows {
            let before = data.len();
            data.extend(row.into_iter().map(Into::into));
            let width = data.len() - before;
            match n_cols {
                None => n_cols = Some(width),
                Some(c) if c != width => {
                    return Err(Error::DimensionMismatch {
                        expected: c,
                        found: width,
                    })
                }
                _ => {}
            }
            n_rows += 1;
        }
        Ok(IntMatrix {
            rows: n_rows,
            cols: n_cols.unwrap_or(0),
            data,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, r: usize) -> &[Int] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[Int]> {
        (0..self.rows).map(move |r| self.row(r))
    }

    pub fn to_rows(&self) -> Vec<Vec<Int>> {
        self.row_iter().map(<[Int]>::to_vec).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    /// Copy of the matrix with column `col` replaced by `values`.
    pub fn with_column(&self, col: usize, values: &[Int]) -> Self {
        let mut m = self.clone();
        for (r, v) in values.iter().enumerate().take(self.rows) {
            m[(r, col)] = v.clone();
        }
        m
    }

    /// Row vector times matrix.
    pub fn left_mul(&self, coeffs: &[Int]) -> Vec<Int> {
        let mut out = vec![Int::zero(); self.cols];
        for (r, c) in coeffs.iter().enumerate().take(self.rows) {
            if c.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(self.row(r)) {
                *o += c * x;
            }
        }
        out
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            let row = other.left_mul(self.row(r));
            for (c, v) in row.into_iter().enumerate() {
                out[(r, c)] = v;
            }
        }
        Ok(out)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = Int;

    fn index(&self, (r, c): (usize, usize)) -> &Int {
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Int {
        &mut self.data[r * self.cols + c]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.row_iter()).finish()
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.row_iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, x) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Exact determinant by Bareiss elimination. Every intermediate is a minor of
/// the input, so the divisions are exact and no rationals appear.
pub fn det_int(m: &IntMatrix) -> Result<Int> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    let n = m.rows;
    if n == 0 {
        return Ok(Int::one());
    }
    let mut a = m.clone();
    let mut negate = false;
    let mut prev = Int::one();
    for k in 0..n - 1 {
        if a[(k, k)].is_zero() {
            match (k + 1..n).find(|&i| !a[(i, k)].is_zero()) {
                Some(i) => {
                    a.swap_rows(k, i);
                    negate = !negate;
                }
                None => return Ok(Int::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)];
                a[(i, j)] = v / &prev;
            }
            a[(i, k)] = Int::zero();
        }
        prev = a[(k, k)].clone();
    }
    let d = a[(n - 1, n - 1)].clone();
    Ok(if negate { -d } else { d })
}

/// Rank via fraction-free row echelon reduction.
pub fn rank(m: &IntMatrix) -> usize {
    let mut a = m.clone();
    let mut r = 0;
    let mut prev = Int::one();
    for c in 0..a.cols {
        if r == a.rows {
            break;
        }
        let Some(p) = (r..a.rows).find(|&i| !a[(i, c)].is_zero()) else {
            continue;
        };
        a.swap_rows(r, p);
        for i in r + 1..a.rows {
            for j in c + 1..a.cols {
                let v = &a[(i, j)] * &a[(r, c)] - &a[(i, c)] * &a[(r, j)];
                a[(i, j)] = v / &prev;
            }
            a[(i, c)] = Int::zero();
        }
        prev = a[(r, c)].clone();
        r += 1;
    }
    r
}

/// Solves `coeffs * x = rhs` exactly by Cramer's rule.
pub fn solve_cramer(coeffs: &IntMatrix, rhs: &[Int]) -> Result<Vec<Rat>> {
    if !coeffs.is_square() {
        return Err(Error::NotSquare {
            rows: coeffs.rows,
            cols: coeffs.cols,
        });
    }
    if rhs.len() != coeffs.rows {
        return Err(Error::DimensionMismatch {
            expected: coeffs.rows,
            found: rhs.len(),
        });
    }
    let det = det_int(coeffs)?;
    if det.is_zero() {
        return Err(Error::Singular);
    }
    (0..coeffs.cols)
        .map(|i| Ok(Rat::new(det_int(&coeffs.with_column(i, rhs))?, det.clone())))
        .collect()
}

/// Row-style Hermite normal form: upper echelon, positive pivots, entries
/// above each pivot reduced into `[0, pivot)`. Zero rows are dropped, so the
/// result has `rank(m)` rows and spans the same lattice as the rows of `m`.
pub fn hermite_normal_form(m: &IntMatrix) -> IntMatrix {
    let mut a = m.to_rows();
    let n_rows = a.len();
    let mut r = 0;
    for c in 0..m.cols {
        if r == n_rows {
            break;
        }
        let mut found = false;
        loop {
            let pivot = (r..n_rows)
                .filter(|&i| !a[i][c].is_zero())
                .min_by(|&i, &j| a[i][c].abs().cmp(&a[j][c].abs()));
            let Some(p) = pivot else { break };
            found = true;
            a.swap(r, p);
            let mut clean = true;
            for i in r + 1..n_rows {
                if a[i][c].is_zero() {
                    continue;
                }
                let q = a[i][c].div_floor(&a[r][c]);
                sub_scaled_row(&mut a, i, r, &q);
                if !a[i][c].is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        if !found {
            continue;
        }
        if a[r][c].is_negative() {
            for x in a[r].iter_mut() {
                *x = -x.clone();
            }
        }
        for i in 0..r {
            let q = a[i][c].div_floor(&a[r][c]);
            if !q.is_zero() {
                sub_scaled_row(&mut a, i, r, &q);
            }
        }
        r += 1;
    }
    a.truncate(r);
    let mut out = IntMatrix::zeros(r, m.cols);
    for (i, row) in a.into_iter().enumerate() {
        for (j, x) in row.into_iter().enumerate() {
            out[(i, j)] = x;
        }
    }
    out
}

fn sub_scaled_row(a: &mut [Vec<Int>], target: usize, source: usize, q: &Int) {
    let src = a[source].clone();
    for (t, s) in a[target].iter_mut().zip(&src) {
        *t -= q * s;
    }
}

/// Basis of the lattice `{x in Z^d : <normal, x> = 0}` as the rows of a
/// `(d-1) x d` matrix in Hermite normal form.
///
/// Column operations reduce `normal` to a single `±1` entry while tracking a
/// unimodular transform `U`; the remaining columns of `U` span the kernel.
pub fn hnf_kernel_basis(normal: &[Int]) -> Result<IntMatrix> {
    let g = gcd_all(normal);
    if g.is_zero() {
        return Err(Error::DegenerateNormal);
    }
    if !g.is_one() {
        return Err(Error::NonPrimitive(g));
    }
    let d = normal.len();
    let mut a = normal.to_vec();
    let mut u = IntMatrix::identity(d);
    let pivot = loop {
        let p = (0..d)
            .filter(|&i| !a[i].is_zero())
            .min_by(|&i, &j| a[i].abs().cmp(&a[j].abs()))
            .expect("normal is nonzero");
        let mut single = true;
        for j in 0..d {
            if j == p || a[j].is_zero() {
                continue;
            }
            let q = a[j].div_floor(&a[p]);
            let step = &q * &a[p];
            a[j] -= step;
            for r in 0..d {
                let v = &q * &u[(r, p)];
                u[(r, j)] -= v;
            }
            if !a[j].is_zero() {
                single = false;
            }
        }
        if single {
            break p;
        }
    };
    let kernel_rows = (0..d)
        .filter(|&j| j != pivot)
        .map(|j| (0..d).map(|r| u[(r, j)].clone()).collect::<Vec<_>>());
    if d == 1 {
        return Ok(IntMatrix::zeros(0, 1));
    }
    Ok(hermite_normal_form(&IntMatrix::from_rows(kernel_rows)?))
}

/// Integer coefficients `c` with `c * basis = v`, if `v` lies in the lattice
/// spanned by the (linearly independent) rows of `basis`.
pub fn lattice_coordinates(basis: &IntMatrix, v: &[Int]) -> Option<Vec<Int>> {
    if v.len() != basis.cols {
        return None;
    }
    let r = basis.rows;
    if r == 0 {
        return v.iter().all(Zero::is_zero).then(Vec::new);
    }
    // pick r columns with a nonzero maximal minor
    let mut chosen: Vec<usize> = Vec::with_capacity(r);
    for c in 0..basis.cols {
        let mut trial = chosen.clone();
        trial.push(c);
        let sub = IntMatrix::from_rows(
            trial
                .iter()
                .map(|&j| (0..r).map(|i| basis[(i, j)].clone()).collect::<Vec<_>>()),
        )
        .ok()?;
        if rank(&sub) == trial.len() {
            chosen = trial;
            if chosen.len() == r {
                break;
            }
        }
    }
    if chosen.len() < r {
        return None;
    }
    let system = IntMatrix::from_rows(
        chosen
            .iter()
            .map(|&j| (0..r).map(|i| basis[(i, j)].clone()).collect::<Vec<_>>()),
    )
    .ok()?;
    let rhs: Vec<Int> = chosen.iter().map(|&j| v[j].clone()).collect();
    let sol = solve_cramer(&system, &rhs).ok()?;
    let coeffs: Vec<Int> = sol
        .into_iter()
        .map(|x| x.is_integer().then(|| x.to_integer()))
        .collect::<Option<_>>()?;
    (basis.left_mul(&coeffs) == v).then_some(coeffs)
}
