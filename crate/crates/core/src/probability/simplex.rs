//! Exact phase-one simplex for `A x = b, x >= 0`.
//!
//! Dense tableau over big rationals with Bland's rule, so it terminates and
//! never rounds. Sizes here are bounded by the world enumeration cap.

use num_traits::{One, Signed, Zero};

use crate::rational::Rational;

/// A nonnegative solution of `a x = b`, or `None` if there is none.
pub fn feasible_point(a: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    assert_eq!(b.len(), m, "row count mismatch");
    if m == 0 {
        return Some(vec![Rational::zero(); n]);
    }

    // Columns 0..n are the real variables, n..n+m one artificial per row.
    let width = n + m;
    let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(m);
    let mut rhs: Vec<Rational> = Vec::with_capacity(m);
    for (i, (row, bi)) in a.iter().zip(b).enumerate() {
        assert_eq!(row.len(), n, "ragged constraint matrix");
        let flip = bi.is_negative();
        let mut t: Vec<Rational> = row
            .iter()
            .map(|v| if flip { -v.clone() } else { v.clone() })
            .collect();
        t.resize(width, Rational::zero());
        t[n + i] = Rational::one();
        rows.push(t);
        rhs.push(bi.abs());
    }
    let mut basis: Vec<usize> = (n..width).collect();

    // Reduced costs for minimizing the sum of artificials.
    let mut cost = vec![Rational::zero(); width];
    let mut value = Rational::zero();
    for (row, r) in rows.iter().zip(&rhs) {
        for j in 0..n {
            cost[j] -= &row[j];
        }
        value -= r;
    }

    loop {
        let Some(enter) = (0..width).find(|&j| cost[j].is_negative()) else {
            break;
        };
        let mut leave: Option<usize> = None;
        let mut best: Option<Rational> = None;
        for i in 0..m {
            if rows[i][enter].is_positive() {
                let ratio = &rhs[i] / &rows[i][enter];
                let better = match &best {
                    None => true,
                    Some(b) => ratio < *b || (ratio == *b && basis[i] < basis[leave.unwrap()]),
                };
                if better {
                    best = Some(ratio);
                    leave = Some(i);
                }
            }
        }
        // Phase one is bounded below by zero, so a ratio always exists.
        let r = leave.expect("phase one objective is bounded");

        let pivot = rows[r][enter].clone();
        for v in rows[r].iter_mut() {
            *v /= &pivot;
        }
        rhs[r] /= &pivot;
        let pivot_row = rows[r].clone();
        let pivot_rhs = rhs[r].clone();
        for i in 0..m {
            if i == r || rows[i][enter].is_zero() {
                continue;
            }
            let factor = rows[i][enter].clone();
            for (v, p) in rows[i].iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *v -= &factor * p;
                }
            }
            rhs[i] -= &factor * &pivot_rhs;
        }
        if !cost[enter].is_zero() {
            let factor = cost[enter].clone();
            for (v, p) in cost.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *v -= &factor * p;
                }
            }
            value -= &factor * &pivot_rhs;
        }
        basis[r] = enter;
    }

    if !value.is_zero() {
        return None;
    }
    let mut x = vec![Rational::zero(); n];
    for (i, &var) in basis.iter().enumerate() {
        if var < n {
            x[var] = rhs[i].clone();
        }
    }
    Some(x)
}
