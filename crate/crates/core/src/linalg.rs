//! Exact dense linear algebra: Gaussian elimination over the rationals.
//!
//! Elimination order is fixed (first usable row, columns left to right),
//! so solutions and inconsistency certificates are deterministic.

use num_traits::Zero;

use crate::rational::Rational;

/// Outcome of solving `A x = b` exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinSolve {
    /// A solution; free columns (if any) are set to zero, so the result is
    /// the unique solution exactly when `rank == num_cols`.
    Solution { x: Vec<Rational>, rank: usize },
    /// Left multipliers `y` with `yᵀA = 0` and `yᵀb ≠ 0`: an exact witness
    /// that no solution exists.
    Inconsistent { combo: Vec<Rational> },
}

/// Row-reduce the augmented system, tracking row operations so that an
/// inconsistent row yields its expression in terms of the original rows.
pub fn solve(a: &[Vec<Rational>], b: &[Rational]) -> LinSolve {
    let m = a.len();
    assert_eq!(b.len(), m, "rhs length mismatch");
    let n = if m == 0 { 0 } else { a[0].len() };
    for row in a {
        assert_eq!(row.len(), n, "ragged matrix");
    }

    // Augment each row with its rhs and the identity (the row-op tracker).
    let mut rows: Vec<Vec<Rational>> = (0..m)
        .map(|i| {
            let mut r = a[i].clone();
            r.push(b[i].clone());
            for j in 0..m {
                r.push(if i == j {
                    Rational::from_integer(1.into())
                } else {
                    Rational::zero()
                });
            }
            r
        })
        .collect();

    let rhs_col = n;
    let mut pivot_in_col: Vec<Option<usize>> = vec![None; n];
    let mut next_row = 0;
    for col in 0..n {
        let Some(pivot_row) = (next_row..m).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(next_row, pivot_row);
        let pivot = rows[next_row][col].clone();
        for entry in rows[next_row].iter_mut() {
            *entry /= pivot.clone();
        }
        for r in 0..m {
            if r != next_row && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                for c in 0..rows[r].len() {
                    let delta = factor.clone() * rows[next_row][c].clone();
                    rows[r][c] -= delta;
                }
            }
        }
        pivot_in_col[col] = Some(next_row);
        next_row += 1;
        if next_row == m {
            break;
        }
    }
    let rank = next_row;

    // A zero row of A with nonzero rhs is an exact certificate.
    for r in 0..m {
        let zero_a = (0..n).all(|c| rows[r][c].is_zero());
        if zero_a && !rows[r][rhs_col].is_zero() {
            let combo = rows[r][rhs_col + 1..].to_vec();
            return LinSolve::Inconsistent { combo };
        }
    }

    let mut x = vec![Rational::zero(); n];
    for col in 0..n {
        if let Some(r) = pivot_in_col[col] {
            x[col] = rows[r][rhs_col].clone();
        }
    }
    LinSolve::Solution { x, rank }
}

pub fn rank(a: &[Vec<Rational>]) -> usize {
    let m = a.len();
    let b = vec![Rational::zero(); m];
    match solve(a, &b) {
        LinSolve::Solution { rank, .. } => rank,
        LinSolve::Inconsistent { .. } => unreachable!("homogeneous system"),
    }
}
