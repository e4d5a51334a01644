//! Dense exact linear algebra over the rationals, for the handful of small
//! systems the crate needs (3x3 solve matrices, 5x5 basis changes).

use num_traits::{One, Zero};

use crate::scalar::Scalar;

pub type Matrix = Vec<Vec<Scalar>>;

pub fn from_ints(rows: &[&[i64]]) -> Matrix {
    rows.iter()
        .map(|r| r.iter().map(|&x| Scalar::from_integer(x.into())).collect())
        .collect()
}

/// Reduced row echelon form; returns the pivot columns.
pub fn rref(m: &mut Matrix) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = Scalar::one() / &m[r][c];
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let delta = &f * &m[r][j];
                    m[i][j] -= delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &Matrix) -> usize {
    let mut work = m.clone();
    rref(&mut work).len()
}

pub fn determinant(m: &Matrix) -> Scalar {
    let n = m.len();
    let mut a = m.clone();
    let mut det = Scalar::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return Scalar::zero();
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        det *= &a[c][c];
        for i in c + 1..n {
            if a[i][c].is_zero() {
                continue;
            }
            let f = &a[i][c] / &a[c][c];
            for j in c..n {
                let delta = &f * &a[c][j];
                a[i][j] -= delta;
            }
        }
    }
    det
}

/// Solves `m x = b` for square nonsingular `m`.
pub fn solve(m: &Matrix, b: &[Scalar]) -> Option<Vec<Scalar>> {
    let n = m.len();
    let mut aug: Matrix = m
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n].clone()).collect())
}

pub fn mat_vec(m: &Matrix, v: &[Scalar]) -> Vec<Scalar> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

pub fn transpose(m: &Matrix) -> Matrix {
    let cols = m.first().map_or(0, Vec::len);
    (0..cols).map(|j| m.iter().map(|r| r[j].clone()).collect()).collect()
}

/// Dimension of the null space of `m` (number of columns minus rank).
pub fn nullity(m: &Matrix) -> usize {
    m.first().map_or(0, Vec::len) - rank(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    #[test]
    fn determinant_and_rank() {
        let m = from_ints(&[&[0, -1, -1, 1], &[-1, 0, 0, 0], &[-1, 0, 0, 1], &[1, 0, 1, 0]]);
        assert_eq!(determinant(&m), int(1));
        assert_eq!(rank(&m), 4);
        let s = from_ints(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        assert_eq!(determinant(&s), int(0));
        assert_eq!(rank(&s), 2);
        assert_eq!(nullity(&s), 1);
    }

    #[test]
    fn solve_square_system() {
        let m = from_ints(&[&[2, 1], &[1, 3]]);
        let x = solve(&m, &[int(3), int(5)]).unwrap();
        assert_eq!(mat_vec(&m, &x), vec![int(3), int(5)]);
        assert!(solve(&from_ints(&[&[1, 1], &[2, 2]]), &[int(1), int(2)]).is_none());
    }
}
