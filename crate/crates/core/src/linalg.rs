//! Small exact linear algebra helpers (Gauss elimination over the rationals).

use crate::error::{Error, Result};
use crate::ratio::Rational;
use num::Zero;

/// Solve `A x = b` exactly. `A` is row-major, possibly rectangular with more
/// rows than unknowns; requires full column rank and a consistent system.
pub fn solve(a: &[Vec<Rational>], b: &[Rational]) -> Result<Vec<Rational>> {
    let rows = a.len();
    if rows == 0 {
        return Ok(Vec::new());
    }
    let cols = a[0].len();
    if b.len() != rows {
        return Err(Error::DimensionMismatch(b.len(), rows));
    }
    let mut m: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();

    let mut pivot_row = 0usize;
    let mut pivots = Vec::new();
    for col in 0..cols {
        let Some(p) = (pivot_row..rows).find(|&r| !m[r][col].is_zero()) else {
            return Err(Error::Singular);
        };
        m.swap(pivot_row, p);
        let inv = m[pivot_row][col].clone().recip();
        for c in col..=cols {
            let v = &m[pivot_row][c] * &inv;
            m[pivot_row][c] = v;
        }
        for r in 0..rows {
            if r != pivot_row && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for c in col..=cols {
                    let v = &m[r][c] - &factor * &m[pivot_row][c];
                    m[r][c] = v;
                }
            }
        }
        pivots.push((pivot_row, col));
        pivot_row += 1;
    }
    // Remaining rows must be all-zero for consistency.
    for r in pivot_row..rows {
        if !m[r][cols].is_zero() {
            return Err(Error::Inconsistent);
        }
    }
    let mut x = vec![Rational::zero(); cols];
    for (r, c) in pivots {
        x[c] = m[r][cols].clone();
    }
    Ok(x)
}

/// Exact matrix inverse.
pub fn invert(a: &[Vec<Rational>]) -> Result<Vec<Vec<Rational>>> {
    let n = a.len();
    let mut m: Vec<Vec<Rational>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            if row.len() != n {
                return Err(Error::DimensionMismatch(row.len(), n));
            }
            let mut r = row.clone();
            for j in 0..n {
                r.push(if i == j {
                    Rational::from_integer(1.into())
                } else {
                    Rational::zero()
                });
            }
            Ok(r)
        })
        .collect::<Result<_>>()?;

    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Err(Error::Singular);
        };
        m.swap(col, p);
        let inv = m[col][col].clone().recip();
        for c in 0..2 * n {
            let v = &m[col][c] * &inv;
            m[col][c] = v;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for c in 0..2 * n {
                    let v = &m[r][c] - &factor * &m[col][c];
                    m[r][c] = v;
                }
            }
        }
    }
    Ok(m.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Exact determinant.
pub fn det(a: &[Vec<Rational>]) -> Rational {
    let n = a.len();
    let mut m: Vec<Vec<Rational>> = a.to_vec();
    let mut result = Rational::from_integer(1.into());
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Rational::zero();
        };
        if p != col {
            m.swap(col, p);
            result = -result;
        }
        result *= m[col][col].clone();
        let inv = m[col][col].clone().recip();
        for r in col + 1..n {
            if !m[r][col].is_zero() {
                let factor = &m[r][col] * &inv;
                for c in col..n {
                    let v = &m[r][c] - &factor * &m[col][c];
                    m[r][c] = v;
                }
            }
        }
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratio::{frac, rat};

    #[test]
    fn solve_square() {
        // x + y = 3, x - y = 1  =>  x = 2, y = 1
        let a = vec![vec![rat(1), rat(1)], vec![rat(1), rat(-1)]];
        let x = solve(&a, &[rat(3), rat(1)]).unwrap();
        assert_eq!(x, vec![rat(2), rat(1)]);
    }

    #[test]
    fn solve_rectangular_consistent() {
        // Overdetermined but consistent.
        let a = vec![
            vec![rat(1), rat(0)],
            vec![rat(0), rat(1)],
            vec![rat(1), rat(1)],
        ];
        let x = solve(&a, &[frac(1, 2), rat(2), frac(5, 2)]).unwrap();
        assert_eq!(x, vec![frac(1, 2), rat(2)]);
        assert!(matches!(
            solve(&a, &[frac(1, 2), rat(2), rat(0)]),
            Err(Error::Inconsistent)
        ));
    }

    #[test]
    fn invert_and_det() {
        let a = vec![vec![rat(2), rat(1)], vec![rat(1), rat(1)]];
        let inv = invert(&a).unwrap();
        assert_eq!(inv, vec![vec![rat(1), rat(-1)], vec![rat(-1), rat(2)]]);
        assert_eq!(det(&a), rat(1));
        let sing = vec![vec![rat(1), rat(2)], vec![rat(2), rat(4)]];
        assert!(matches!(invert(&sing), Err(Error::Singular)));
        assert_eq!(det(&sing), rat(0));
    }
}
