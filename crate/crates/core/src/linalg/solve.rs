//! Exact Gaussian elimination: rank, kernels, linear systems, inverses and
//! Sylvester equations.

use num::{BigInt, Integer, One, Zero};

use crate::error::{Error, Result};
use crate::linalg::matrix::ExactMatrix;
use crate::linalg::scalar::Scalar;

/// Reduced row echelon form of `rows` with `ncols` columns, computed in place.
/// Pivot choice is the first nonzero entry (in row order) of the leftmost
/// unfinished column. Returns the pivot columns.
pub(crate) fn rref(rows: &mut [Vec<Scalar>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv().expect("pivot is nonzero");
        if !inv.is_one() {
            for v in rows[r][c..].iter_mut() {
                *v = &*v * &inv;
            }
        }
        let (head, tail) = rows.split_at_mut(r);
        let (pivot_row, below) = tail.split_first_mut().expect("row r exists");
        for other in head.iter_mut().chain(below.iter_mut()) {
            let factor = other[c].clone();
            if factor.is_zero() {
                continue;
            }
            for (dst, src) in other[c..].iter_mut().zip(&pivot_row[c..]) {
                if !src.is_zero() {
                    *dst = &*dst - &(&factor * src);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Rank of a rational matrix by fraction-free elimination: rows are scaled to
/// primitive integer vectors and kept primitive after every update.
fn integer_rank(m: &ExactMatrix) -> usize {
    let mut rows: Vec<Vec<BigInt>> = (0..m.rows())
        .map(|i| {
            let row = m.row(i);
            let den = row
                .iter()
                .fold(BigInt::one(), |acc, v| acc.lcm(v.re().denom()));
            let mut ints: Vec<BigInt> = row
                .iter()
                .map(|v| v.re().numer() * (&den / v.re().denom()))
                .collect();
            make_primitive(&mut ints);
            ints
        })
        .filter(|r| r.iter().any(|v| !v.is_zero()))
        .collect();
    let mut rank = 0;
    for c in 0..m.cols() {
        let Some(p) = (rank..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let (head, tail) = rows.split_at_mut(rank + 1);
        let pivot = &head[rank];
        for row in tail.iter_mut() {
            if row[c].is_zero() {
                continue;
            }
            let g = pivot[c].gcd(&row[c]);
            let a = &pivot[c] / &g;
            let b = &row[c] / &g;
            for (dst, src) in row[c..].iter_mut().zip(&pivot[c..]) {
                *dst = &*dst * &a - src * &b;
            }
            make_primitive(row);
        }
        rank += 1;
    }
    rank
}

/// Same elimination over Z[i]; a row entry is `(re, im)` and rows are kept
/// free of common rational-integer factors.
fn gaussian_integer_rank(m: &ExactMatrix) -> usize {
    type G = (BigInt, BigInt);
    fn mul(a: &G, b: &G) -> G {
        (&a.0 * &b.0 - &a.1 * &b.1, &a.0 * &b.1 + &a.1 * &b.0)
    }
    fn is_zero(a: &G) -> bool {
        a.0.is_zero() && a.1.is_zero()
    }
    fn primitive(row: &mut [G]) {
        let g = row
            .iter()
            .fold(BigInt::zero(), |acc, v| acc.gcd(&v.0).gcd(&v.1));
        if !g.is_zero() && !g.is_one() {
            for v in row.iter_mut() {
                v.0 = &v.0 / &g;
                v.1 = &v.1 / &g;
            }
        }
    }
    let mut rows: Vec<Vec<G>> = (0..m.rows())
        .map(|i| {
            let row = m.row(i);
            let den = row.iter().fold(BigInt::one(), |acc, v| {
                acc.lcm(v.re().denom()).lcm(v.im().denom())
            });
            let mut ints: Vec<G> = row
                .iter()
                .map(|v| {
                    (
                        v.re().numer() * (&den / v.re().denom()),
                        v.im().numer() * (&den / v.im().denom()),
                    )
                })
                .collect();
            primitive(&mut ints);
            ints
        })
        .filter(|r| r.iter().any(|v| !is_zero(v)))
        .collect();
    let mut rank = 0;
    for c in 0..m.cols() {
        let Some(p) = (rank..rows.len()).find(|&i| !is_zero(&rows[i][c])) else {
            continue;
        };
        rows.swap(rank, p);
        let (head, tail) = rows.split_at_mut(rank + 1);
        let pivot = &head[rank];
        for row in tail.iter_mut() {
            if is_zero(&row[c]) {
                continue;
            }
            let a = pivot[c].clone();
            let b = row[c].clone();
            for (dst, src) in row[c..].iter_mut().zip(&pivot[c..]) {
                let x = mul(dst, &a);
                let y = mul(src, &b);
                *dst = (x.0 - y.0, x.1 - y.1);
            }
            primitive(row);
        }
        rank += 1;
    }
    rank
}

fn make_primitive(row: &mut [BigInt]) {
    let g = row.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    if !g.is_zero() && !g.is_one() {
        for v in row.iter_mut() {
            *v = &*v / &g;
        }
    }
}

/// Outcome of [`ExactMatrix::solve`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinearSolve {
    /// A particular solution (free variables set to zero) and the dimension of
    /// the solution space.
    Consistent {
        solution: Vec<Scalar>,
        nullity: usize,
    },
    Inconsistent,
}

impl LinearSolve {
    pub fn solution(&self) -> Option<&[Scalar]> {
        match self {
            LinearSolve::Consistent { solution, .. } => Some(solution),
            LinearSolve::Inconsistent => None,
        }
    }
}

impl ExactMatrix {
    pub fn rank(&self) -> usize {
        if self.is_real() {
            integer_rank(self)
        } else {
            gaussian_integer_rank(self)
        }
    }

    pub fn nullity(&self) -> usize {
        self.cols() - self.rank()
    }

    /// Basis of the right kernel `{v : self * v = 0}`.
    pub fn kernel(&self) -> Vec<Vec<Scalar>> {
        let n = self.cols();
        let mut rows = self.to_rows();
        let pivots = rref(&mut rows, n);
        let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Scalar::zero(); n];
                v[f] = Scalar::one();
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = -&rows[r][f];
                }
                v
            })
            .collect()
    }

    /// Solves `self * x = b` exactly.
    pub fn solve(&self, b: &[Scalar]) -> Result<LinearSolve> {
        if b.len() != self.rows() {
            return Err(Error::DimensionMismatch(format!(
                "right-hand side has {} entries, matrix has {} rows",
                b.len(),
                self.rows()
            )));
        }
        let n = self.cols();
        let mut rows: Vec<Vec<Scalar>> = self
            .to_rows()
            .into_iter()
            .zip(b)
            .map(|(mut row, v)| {
                row.push(v.clone());
                row
            })
            .collect();
        let pivots = rref(&mut rows, n + 1);
        if pivots.last() == Some(&n) {
            return Ok(LinearSolve::Inconsistent);
        }
        let mut solution = vec![Scalar::zero(); n];
        for (r, &pc) in pivots.iter().enumerate() {
            solution[pc] = rows[r][n].clone();
        }
        Ok(LinearSolve::Consistent {
            solution,
            nullity: n - pivots.len(),
        })
    }

    pub fn inverse(&self) -> Option<ExactMatrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows();
        let mut rows: Vec<Vec<Scalar>> = (0..n)
            .map(|i| {
                let mut row = self.row(i).to_vec();
                row.extend((0..n).map(|j| {
                    if i == j {
                        Scalar::one()
                    } else {
                        Scalar::zero()
                    }
                }));
                row
            })
            .collect();
        let pivots = rref(&mut rows, n);
        if pivots.len() < n {
            return None;
        }
        let data = rows
            .into_iter()
            .flat_map(|row| row.into_iter().skip(n))
            .collect();
        ExactMatrix::new(n, n, data).ok()
    }
}

/// Solves `M*B - C*M = R` for `M` (`B` is t×t, `C` is s×s, `R` is s×t).
///
/// Requires the operator `M -> MB - CM` to be invertible, i.e. `B` and `C`
/// without common eigenvalues. The result is checked by substitution.
pub fn sylvester_solve(b: &ExactMatrix, c: &ExactMatrix, r: &ExactMatrix) -> Result<ExactMatrix> {
    if !b.is_square() || !c.is_square() {
        return Err(Error::DimensionMismatch("B and C must be square".into()));
    }
    let (t, s) = (b.rows(), c.rows());
    if r.rows() != s || r.cols() != t {
        return Err(Error::DimensionMismatch(format!(
            "R is {}x{}, expected {s}x{t}",
            r.rows(),
            r.cols()
        )));
    }
    // unknown M[i][k] has index i*t + k; equation (i, j) has the same layout
    let dim = s * t;
    let mut op = ExactMatrix::zeros(dim, dim);
    for i in 0..s {
        for j in 0..t {
            let eq = i * t + j;
            for k in 0..t {
                let v = op.get(eq, i * t + k) + b.get(k, j);
                op.set(eq, i * t + k, v);
            }
            for k in 0..s {
                let v = op.get(eq, k * t + j) - c.get(i, k);
                op.set(eq, k * t + j, v);
            }
        }
    }
    let solution = match op.solve(r.entries())? {
        LinearSolve::Consistent {
            solution,
            nullity: 0,
        } => solution,
        _ => return Err(Error::SingularSylvester),
    };
    let m = ExactMatrix::new(s, t, solution)?;
    if &(&m * b) - &(c * &m) != *r {
        return Err(Error::Certificate(
            "Sylvester solution failed substitution".into(),
        ));
    }
    Ok(m)
}
