//! Gorenstein tests for lecture hall cones and general simple cones.
//!
//! A lecture hall cone `0 <= l_1/s_1 <= ... <= l_n/s_n` is Gorenstein iff the
//! point defined by `c_1 = 1`, `c_j s_{j-1} = c_{j-1} s_j + gcd(s_j, s_{j-1})`
//! is integral. Failure at some prefix length persists for every longer one.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::arith::{gcd, lcm, ExactInt, ExactRat};
use crate::sequences::{generate_from_u, generate_kl, generate_recurrence, SequenceError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GorensteinError {
    #[error("matrix is singular")]
    Singular,
    #[error("matrix must be square and nonempty, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is not lower triangular with positive diagonal (row {row})")]
    NotTriangular { row: usize },
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error(transparent)]
    Sequence(#[from] SequenceError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GorensteinResult {
    Gorenstein {
        point: Vec<ExactInt>,
    },
    /// `index` is 1-based; `witness` is the non-integral value forced there.
    FailsAt {
        index: usize,
        witness: ExactRat,
    },
}

impl GorensteinResult {
    pub fn is_gorenstein(&self) -> bool {
        matches!(self, GorensteinResult::Gorenstein { .. })
    }

    pub fn point(&self) -> Option<&[ExactInt]> {
        match self {
            GorensteinResult::Gorenstein { point } => Some(point),
            GorensteinResult::FailsAt { .. } => None,
        }
    }

    pub fn fails_at(&self) -> Option<usize> {
        match self {
            GorensteinResult::FailsAt { index, .. } => Some(*index),
            GorensteinResult::Gorenstein { .. } => None,
        }
    }
}

/// Incremental form of the point recursion, one coordinate per term.
struct PointRecursion {
    prev_s: Option<ExactInt>,
    prev_c: ExactInt,
    point: Vec<ExactInt>,
}

impl PointRecursion {
    fn new() -> Self {
        PointRecursion {
            prev_s: None,
            prev_c: ExactInt::zero(),
            point: Vec::new(),
        }
    }

    /// Feed `s_j`; returns the forced rational value of `c_j` if it is not
    /// an integer.
    fn push(&mut self, s: &ExactInt) -> Result<(), ExactRat> {
        let c = match &self.prev_s {
            None => ExactInt::one(),
            Some(prev_s) => {
                let numerator = &self.prev_c * s + gcd(s, prev_s);
                let (q, r) = numerator.div_rem(prev_s);
                if !r.is_zero() {
                    return Err(ExactRat::new(numerator, prev_s.clone()));
                }
                q
            }
        };
        self.prev_s = Some(s.clone());
        self.prev_c = c.clone();
        self.point.push(c);
        Ok(())
    }
}

/// Decide whether the lecture hall cone of `s` is Gorenstein.
pub fn lecture_hall_gorenstein(s: &[ExactInt]) -> GorensteinResult {
    let mut rec = PointRecursion::new();
    for (j, term) in s.iter().enumerate() {
        if let Err(witness) = rec.push(term) {
            return GorensteinResult::FailsAt {
                index: j + 1,
                witness,
            };
        }
    }
    GorensteinResult::Gorenstein { point: rec.point }
}

/// True iff `c` satisfies `c_1 = 1` and
/// `c_j s_{j-1} = c_{j-1} s_j + gcd(s_j, s_{j-1})` for `2 <= j <= n`.
pub fn is_gorenstein_point(s: &[ExactInt], c: &[ExactInt]) -> bool {
    s.len() == c.len()
        && c.first().is_none_or(One::is_one)
        && (1..s.len()).all(|j| &c[j] * &s[j - 1] == &c[j - 1] * &s[j] + gcd(&s[j], &s[j - 1]))
}

/// Smallest `n <= horizon` at which the recurrence cone stops being
/// Gorenstein; every larger `n` fails as well.
pub fn gorenstein_fail_index(
    ell: &ExactInt,
    b: &ExactInt,
    horizon: usize,
) -> Result<Option<usize>, SequenceError> {
    if horizon == 0 {
        return Ok(None);
    }
    let s = generate_recurrence(ell, b, horizon)?;
    Ok(lecture_hall_gorenstein(&s).fails_at())
}

/// Gorenstein point `(s_1, s_1 + s_2, ..., s_{n-1} + s_n)` of an `l`-sequence.
pub fn ell_sequence_point(ell: &ExactInt, n: usize) -> Result<Vec<ExactInt>, SequenceError> {
    let s = generate_kl(ell, ell, n)?;
    let mut point = Vec::with_capacity(n);
    point.push(s[0].clone());
    point.extend(s.windows(2).map(|w| &w[0] + &w[1]));
    Ok(point)
}

/// Gorenstein point of the `u`-generated sequence starting at `s1`:
/// `c_1 = 1`, `c_2 = u_1`, `c_{i+1} = u_i c_i - c_{i-1}`.
pub fn u_generated_point(
    u: &[ExactInt],
    s1: &ExactInt,
    n: usize,
) -> Result<Vec<ExactInt>, SequenceError> {
    generate_from_u(u, s1, n)?;
    let mut c = Vec::with_capacity(n);
    c.push(ExactInt::one());
    for i in 1..n {
        let next = if i == 1 {
            u[0].clone()
        } else {
            &u[i - 1] * &c[i - 1] - &c[i - 2]
        };
        c.push(next);
    }
    Ok(c)
}

/// Dense square matrix over the rationals. Rows are the linear functionals
/// `alpha^1..alpha^n` of a cone `{x : A x >= 0}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: Vec<Vec<ExactRat>>,
}

impl RatMatrix {
    pub fn new(rows: Vec<Vec<ExactRat>>) -> Result<Self, GorensteinError> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(GorensteinError::NotSquare {
                rows: n,
                cols: rows.iter().map(Vec::len).max().unwrap_or(0),
            });
        }
        Ok(RatMatrix { rows })
    }

    pub fn identity(n: usize) -> Self {
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            ExactRat::one()
                        } else {
                            ExactRat::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        RatMatrix { rows }
    }

    /// Inequalities `l_1/s_1 >= 0` and `l_j/s_j - l_{j-1}/s_{j-1} >= 0`.
    pub fn lecture_hall(s: &[ExactInt]) -> Result<Self, GorensteinError> {
        let n = s.len();
        let mut rows = vec![vec![ExactRat::zero(); n]; n];
        for (j, row) in rows.iter_mut().enumerate() {
            row[j] = ExactRat::new(ExactInt::one(), s[j].clone());
            if j > 0 {
                row[j - 1] = -ExactRat::new(ExactInt::one(), s[j - 1].clone());
            }
        }
        Self::new(rows)
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<ExactRat>] {
        &self.rows
    }

    /// Solve `A x = rhs` by Gauss-Jordan elimination.
    pub fn solve(&self, rhs: &[ExactRat]) -> Result<Vec<ExactRat>, GorensteinError> {
        let n = self.dim();
        let mut m: Vec<Vec<ExactRat>> = self
            .rows
            .iter()
            .zip(rhs)
            .map(|(row, b)| {
                let mut r = row.clone();
                r.push(b.clone());
                r
            })
            .collect();
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !m[r][col].is_zero())
                .ok_or(GorensteinError::Singular)?;
            m.swap(col, pivot);
            let inv = m[col][col].recip();
            for x in m[col].iter_mut() {
                *x *= &inv;
            }
            let pivot_row = m[col].clone();
            for (r, row) in m.iter_mut().enumerate() {
                if r == col || row[col].is_zero() {
                    continue;
                }
                let factor = row[col].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x -= &factor * p;
                }
            }
        }
        Ok(m.into_iter()
            .map(|mut r| r.pop().unwrap_or_default())
            .collect())
    }

    /// Positive generator `q` of the projected lattice `alpha(Z^n) = q Z`
    /// for row `j`: gcd of the row scaled to integers, over the scale.
    pub fn row_lattice_generator(&self, j: usize) -> ExactRat {
        let row = &self.rows[j];
        let denom = row
            .iter()
            .fold(ExactInt::one(), |acc, x| lcm(&acc, x.denom()));
        let g = row
            .iter()
            .map(|x| x.numer() * (&denom / x.denom()))
            .fold(ExactInt::zero(), |acc, v| gcd(&acc, &v));
        ExactRat::new(g, denom)
    }
}

impl FromStr for RatMatrix {
    type Err = GorensteinError;

    /// One row per line, entries `p/q` or integers separated by whitespace.
    /// Blank lines and lines starting with `#` are skipped.
    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let mut rows = Vec::new();
        for (line_no, line) in text.lines().enumerate() {
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let mut row = Vec::new();
            let mut column = 0;
            for token in line.split_whitespace() {
                let idx = line[column..].find(token).map_or(column, |i| column + i);
                column = idx + token.len();
                let value = parse_rat(token).ok_or_else(|| GorensteinError::Parse {
                    line: line_no + 1,
                    column: idx + 1,
                    message: format!("`{token}` is not an integer or p/q rational"),
                })?;
                row.push(value);
            }
            rows.push(row);
        }
        RatMatrix::new(rows)
    }
}

fn parse_rat(token: &str) -> Option<ExactRat> {
    match token.split_once('/') {
        None => token.parse::<ExactInt>().ok().map(ExactRat::from_integer),
        Some((p, q)) => {
            let p = p.parse::<ExactInt>().ok()?;
            let q = q.parse::<ExactInt>().ok()?;
            (!q.is_zero()).then(|| ExactRat::new(p, q))
        }
    }
}

impl fmt::Display for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Gorenstein test for the full-dimensional simple cone `{x : A x >= 0}`.
///
/// Solves `alpha^j(c) = q_j` for all rows; the cone is Gorenstein iff the
/// solution is integral.
pub fn simple_cone_gorenstein(a: &RatMatrix) -> Result<GorensteinResult, GorensteinError> {
    let q: Vec<ExactRat> = (0..a.dim()).map(|j| a.row_lattice_generator(j)).collect();
    let c = a.solve(&q)?;
    if let Some((i, x)) = c.iter().enumerate().find(|(_, x)| !x.is_integer()) {
        return Ok(GorensteinResult::FailsAt {
            index: i + 1,
            witness: x.clone(),
        });
    }
    Ok(GorensteinResult::Gorenstein {
        point: c.into_iter().map(|x| x.to_integer()).collect(),
    })
}

/// Cone `{x : A x >= 0}` with `A` lower triangular and a positive diagonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangularCone {
    a: RatMatrix,
}

impl TriangularCone {
    pub fn new(a: RatMatrix) -> Result<Self, GorensteinError> {
        for (i, row) in a.rows().iter().enumerate() {
            if !row[i].is_positive() || row[i + 1..].iter().any(|x| !x.is_zero()) {
                return Err(GorensteinError::NotTriangular { row: i + 1 });
            }
        }
        Ok(TriangularCone { a })
    }

    pub fn lecture_hall(s: &[ExactInt]) -> Result<Self, GorensteinError> {
        Self::new(RatMatrix::lecture_hall(s)?)
    }

    pub fn matrix(&self) -> &RatMatrix {
        &self.a
    }
}

/// Coordinatewise-minimal integer point with every `alpha^i(c) > 0`,
/// chosen in order `i = 1..n`. For a Gorenstein cone this is the
/// Gorenstein point.
pub fn greedy_interior_point(cone: &TriangularCone) -> Vec<ExactInt> {
    let rows = cone.matrix().rows();
    let mut c: Vec<ExactInt> = Vec::with_capacity(rows.len());
    for (i, row) in rows.iter().enumerate() {
        let partial: ExactRat = row[..i]
            .iter()
            .zip(&c)
            .map(|(a, x)| a * ExactRat::from_integer(x.clone()))
            .sum();
        // a_ii c_i > -partial  <=>  c_i > -partial / a_ii
        let bound = -partial / &row[i];
        c.push(bound.floor().to_integer() + 1);
    }
    c
}
