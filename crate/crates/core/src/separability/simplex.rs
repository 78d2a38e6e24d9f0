//! Phase-1 simplex over exact rationals with Bland's rule.

use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// Outcome of a feasibility solve for `A x = b, x ≥ 0`.
#[derive(Clone, Debug, PartialEq)]
pub enum Feasibility {
    Feasible(Vec<BigRational>),
    Infeasible,
}

impl Feasibility {
    pub fn solution(self) -> Option<Vec<BigRational>> {
        match self {
            Feasibility::Feasible(x) => Some(x),
            Feasibility::Infeasible => None,
        }
    }
}

/// Decides whether `A x = b` has a nonnegative solution, returning a basic one.
///
/// Rows need not be independent. Artificial variables leaving the basis are
/// never readmitted, so the loop is Bland's rule on the structural columns.
pub fn find_feasible(a: &[Vec<BigRational>], b: &[BigRational]) -> Feasibility {
    let m = a.len();
    assert_eq!(m, b.len(), "row count mismatch");
    let n = a.first().map_or(0, Vec::len);
    assert!(a.iter().all(|r| r.len() == n), "ragged constraint matrix");

    // rows: [structural | rhs]; artificial columns are implicit.
    let mut rows: Vec<Vec<BigRational>> = Vec::with_capacity(m);
    for (row, rhs) in a.iter().zip(b) {
        let negate = rhs.is_negative();
        let mut r: Vec<BigRational> = row
            .iter()
            .map(|x| if negate { -x } else { x.clone() })
            .collect();
        r.push(if negate { -rhs } else { rhs.clone() });
        rows.push(r);
    }
    // basis[i] < n is structural, n + i is the artificial of row i
    let mut basis: Vec<usize> = (n..n + m).collect();

    // gain[j] = Σ over rows whose basic is artificial; entering needs gain > 0
    let mut gain = vec![BigRational::zero(); n + 1];
    for r in &rows {
        for (g, x) in gain.iter_mut().zip(r) {
            *g += x;
        }
    }

    while let Some(enter) = (0..n).find(|&j| gain[j].is_positive()) {
        let mut leave: Option<(usize, BigRational)> = None;
        for (i, r) in rows.iter().enumerate() {
            if !r[enter].is_positive() {
                continue;
            }
            let ratio = &r[n] / &r[enter];
            let better = match &leave {
                None => true,
                Some((li, best)) => ratio < *best || (ratio == *best && basis[i] < basis[*li]),
            };
            if better {
                leave = Some((i, ratio));
            }
        }
        // Phase-1 objective is bounded below by zero, so a positive gain column always has a pivot.
        let (p, _) = leave.expect("phase-1 objective is bounded");
        pivot(&mut rows, &mut gain, p, enter);
        basis[p] = enter;
    }

    if !gain[n].is_zero() {
        return Feasibility::Infeasible;
    }
    let mut x = vec![BigRational::zero(); n];
    for (i, &bv) in basis.iter().enumerate() {
        if bv < n {
            x[bv] = rows[i][n].clone();
        }
    }
    Feasibility::Feasible(x)
}

fn pivot(rows: &mut [Vec<BigRational>], gain: &mut [BigRational], p: usize, col: usize) {
    let inv = rows[p][col].recip();
    for x in rows[p].iter_mut() {
        *x *= &inv;
    }
    let pivot_row = rows[p].clone();
    for (i, r) in rows.iter_mut().enumerate() {
        if i == p || r[col].is_zero() {
            continue;
        }
        let f = r[col].clone();
        for (x, y) in r.iter_mut().zip(&pivot_row) {
            if !y.is_zero() {
                *x -= &f * y;
            }
        }
    }
    if !gain[col].is_zero() {
        let f = gain[col].clone();
        for (x, y) in gain.iter_mut().zip(&pivot_row) {
            if !y.is_zero() {
                *x -= &f * y;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn mat(rows: &[&[i64]]) -> Vec<Vec<BigRational>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| q(x, 1)).collect())
            .collect()
    }

    fn check(a: &[Vec<BigRational>], b: &[BigRational], x: &[BigRational]) {
        assert!(x.iter().all(|v| !v.is_negative()));
        for (row, rhs) in a.iter().zip(b) {
            let lhs: BigRational = row.iter().zip(x).map(|(p, q)| p * q).sum();
            assert_eq!(&lhs, rhs);
        }
    }

    #[test]
    fn simple_feasible_system() {
        let a = mat(&[&[1, 1, 0], &[0, 1, 1]]);
        let b = vec![q(1, 2), q(1, 3)];
        let x = find_feasible(&a, &b).solution().unwrap();
        check(&a, &b, &x);
    }

    #[test]
    fn infeasible_by_sign() {
        let a = mat(&[&[1, 1]]);
        assert_eq!(find_feasible(&a, &[q(-1, 1)]), Feasibility::Infeasible);
        let a = mat(&[&[1, -1], &[1, 1]]);
        let x = find_feasible(&a, &[q(-1, 1), q(3, 1)]).solution().unwrap();
        assert_eq!(x, vec![q(1, 1), q(2, 1)]);
    }

    #[test]
    fn contradictory_rows() {
        let a = mat(&[&[1, 1], &[2, 2]]);
        assert_eq!(
            find_feasible(&a, &[q(1, 1), q(3, 1)]),
            Feasibility::Infeasible
        );
    }

    #[test]
    fn redundant_rows_are_fine() {
        let a = mat(&[&[1, 0, 1], &[0, 1, 1], &[1, 1, 2]]);
        let b = vec![q(1, 1), q(1, 1), q(2, 1)];
        let x = find_feasible(&a, &b).solution().unwrap();
        check(&a, &b, &x);
    }

    #[test]
    fn degenerate_problem_terminates() {
        // a classic cycling example for the largest-coefficient rule, as equalities with slacks
        let a = mat(&[
            &[1, -11, -5, 18, 1, 0, 0],
            &[1, -3, -1, 2, 0, 1, 0],
            &[1, 0, 0, 0, 0, 0, 1],
        ]);
        let b = vec![q(0, 1), q(0, 1), q(1, 1)];
        let x = find_feasible(&a, &b).solution().unwrap();
        check(&a, &b, &x);
    }

    #[test]
    fn empty_column_set() {
        let a: Vec<Vec<BigRational>> = vec![vec![], vec![]];
        assert!(matches!(
            find_feasible(&a, &[q(0, 1), q(0, 1)]),
            Feasibility::Feasible(_)
        ));
        assert_eq!(
            find_feasible(&a, &[q(1, 1), q(0, 1)]),
            Feasibility::Infeasible
        );
    }
}
