//! Exact feasibility of `A x = b, x >= 0` by phase-one simplex over the
//! rationals with Bland's anticycling rule.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A nonnegative solution of `A x = b`, if one exists. `a` is row-major with
/// one row per equation.
pub fn feasible_point(a: &[Vec<BigRational>], b: &[BigRational]) -> Option<Vec<BigRational>> {
    let rows = a.len();
    assert_eq!(rows, b.len(), "one right-hand side per row");
    let m = a.first().map_or(0, Vec::len);
    let width = m + rows;
    // tableau rows: [structural | artificial | rhs], every rhs made nonnegative
    let mut t: Vec<Vec<BigRational>> = (0..rows)
        .map(|i| {
            let flip = b[i].is_negative();
            let mut row: Vec<BigRational> =
                a[i].iter().map(|x| if flip { -x.clone() } else { x.clone() }).collect();
            row.extend((0..rows).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
            row.push(if flip { -b[i].clone() } else { b[i].clone() });
            row
        })
        .collect();
    let mut basis: Vec<usize> = (m..width).collect();
    // reduced costs of `sum of artificials`, with the objective value last
    let mut cost = vec![BigRational::zero(); width + 1];
    for row in &t {
        for j in 0..m {
            cost[j] -= &row[j];
        }
        cost[width] -= &row[width];
    }
    while let Some(enter) = (0..width).find(|&j| cost[j].is_negative()) {
        let mut leave: Option<(usize, BigRational)> = None;
        for (i, row) in t.iter().enumerate() {
            if row[enter].is_positive() {
                let ratio = &row[width] / &row[enter];
                let better = match &leave {
                    None => true,
                    Some((l, best)) => ratio < *best || (ratio == *best && basis[i] < basis[*l]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        // phase one is bounded below by zero, so some row always qualifies
        let (r, _) = leave.expect("phase one objective is bounded");
        let piv = t[r][enter].clone();
        for x in t[r].iter_mut() {
            *x /= &piv;
        }
        let pivot_row = t[r].clone();
        for (i, row) in t.iter_mut().enumerate() {
            if i != r && !row[enter].is_zero() {
                let f = row[enter].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * p;
                }
            }
        }
        let f = cost[enter].clone();
        for (x, p) in cost.iter_mut().zip(&pivot_row) {
            *x -= &f * p;
        }
        basis[r] = enter;
    }
    if !cost[width].is_zero() {
        return None;
    }
    let mut x = vec![BigRational::zero(); m];
    for (i, &v) in basis.iter().enumerate() {
        if v < m {
            x[v] = t[i][width].clone();
        }
    }
    Some(x)
}

/// Whether `target` is a convex combination of `points`.
pub fn in_convex_hull(points: &[Vec<i64>], target: &[i64]) -> bool {
    convex_weights(points, target).is_some()
}

/// Convex weights expressing `target` through `points`, if any.
pub fn convex_weights(points: &[Vec<i64>], target: &[i64]) -> Option<Vec<BigRational>> {
    if points.is_empty() {
        return None;
    }
    let k = target.len();
    let mut a: Vec<Vec<BigRational>> = (0..k)
        .map(|c| points.iter().map(|p| BigRational::from_integer(p[c].into())).collect())
        .collect();
    a.push(vec![BigRational::one(); points.len()]);
    let mut b: Vec<BigRational> = target.iter().map(|&x| BigRational::from_integer(x.into())).collect();
    b.push(BigRational::one());
    feasible_point(&a, &b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(x: i64) -> BigRational {
        BigRational::from_integer(x.into())
    }

    fn check(a: &[Vec<BigRational>], b: &[BigRational], x: &[BigRational]) {
        assert!(x.iter().all(|v| !v.is_negative()));
        for (row, rhs) in a.iter().zip(b) {
            let lhs: BigRational = row.iter().zip(x).map(|(p, q)| p * q).sum();
            assert_eq!(&lhs, rhs);
        }
    }

    #[test]
    fn small_systems() {
        let a = vec![vec![r(1), r(1)], vec![r(1), r(-1)]];
        let b = vec![r(4), r(2)];
        let x = feasible_point(&a, &b).unwrap();
        assert_eq!(x, vec![r(3), r(1)]);
        assert!(feasible_point(&a, &[r(2), r(4)]).is_none());
        assert!(feasible_point(&[vec![r(1), r(1)]], &[r(-1)]).is_none());
        let x = feasible_point(&[vec![r(-1), r(-2)]], &[r(-4)]).unwrap();
        check(&[vec![r(-1), r(-2)]], &[r(-4)], &x);
        // redundant rows leave an artificial basic at zero
        let a = vec![vec![r(1), r(2)], vec![r(2), r(4)]];
        let x = feasible_point(&a, &[r(2), r(4)]).unwrap();
        check(&a, &[r(2), r(4)], &x);
    }

    #[test]
    fn hull_examples() {
        let pts = vec![vec![6, 2, 2, 2], vec![4, 4, 4, 0]];
        assert!(in_convex_hull(&pts, &[5, 3, 3, 1]));
        assert!(!in_convex_hull(&pts, &[5, 4, 3, 0]));
        let w = convex_weights(&pts, &[5, 3, 3, 1]).unwrap();
        assert_eq!(w, vec![BigRational::new(1.into(), 2.into()); 2]);
        assert!(!in_convex_hull(&[], &[0]));
    }

    /// Membership in the segment or triangle by independent arithmetic.
    fn in_triangle(p: [i64; 2], q: [i64; 2], s: [i64; 2], t: [i64; 2]) -> bool {
        let cross = |a: [i64; 2], b: [i64; 2], c: [i64; 2]| (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
        let (d1, d2, d3) = (cross(p, q, t), cross(q, s, t), cross(s, p, t));
        let area = cross(p, q, s);
        if area == 0 {
            // degenerate: t must lie on one of the segments
            let on = |a: [i64; 2], b: [i64; 2]| {
                cross(a, b, t) == 0
                    && t[0] >= a[0].min(b[0])
                    && t[0] <= a[0].max(b[0])
                    && t[1] >= a[1].min(b[1])
                    && t[1] <= a[1].max(b[1])
            };
            return on(p, q) || on(q, s) || on(p, s);
        }
        let neg = d1 < 0 || d2 < 0 || d3 < 0;
        let pos = d1 > 0 || d2 > 0 || d3 > 0;
        !(neg && pos)
    }

    proptest! {
        #[test]
        fn planar_hull_agrees(pts in prop::collection::vec((-6i64..7, -6i64..7), 3), t in (-6i64..7, -6i64..7)) {
            let p: Vec<Vec<i64>> = pts.iter().map(|&(x, y)| vec![x, y]).collect();
            let expected = in_triangle([pts[0].0, pts[0].1], [pts[1].0, pts[1].1], [pts[2].0, pts[2].1], [t.0, t.1]);
            prop_assert_eq!(in_convex_hull(&p, &[t.0, t.1]), expected);
        }

        #[test]
        fn solutions_verify(a in prop::collection::vec(prop::collection::vec(-4i64..5, 5), 1..4), x in prop::collection::vec(0i64..4, 5)) {
            let a: Vec<Vec<BigRational>> = a.iter().map(|row| row.iter().map(|&v| r(v)).collect()).collect();
            let b: Vec<BigRational> = a.iter().map(|row| row.iter().zip(&x).map(|(p, &q)| p * r(q)).sum()).collect();
            let sol = feasible_point(&a, &b);
            prop_assert!(sol.is_some());
            check(&a, &b, &sol.unwrap());
        }
    }
}
