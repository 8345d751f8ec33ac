//! Exact Gaussian elimination over Q.

use crate::rational::Rational;

/// Reduces `m` to row echelon form in place and returns the pivot columns.
fn echelon(m: &mut [Vec<Rational>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        if row == m.len() {
            break;
        }
        let Some(pr) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, pr);
        let inv = m[row][col].inv().expect("pivot is nonzero");
        for x in m[row].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..m.len() {
            if r == row || m[r][col].is_zero() {
                continue;
            }
            let f = m[r][col].clone();
            let (src, dst) = if r < row {
                let (a, b) = m.split_at_mut(row);
                (&b[0], &mut a[r])
            } else {
                let (a, b) = m.split_at_mut(r);
                (&a[row], &mut b[0])
            };
            for (d, s) in dst.iter_mut().zip(src.iter()) {
                if !s.is_zero() {
                    *d -= &(&f * s);
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

/// Rank of the matrix whose rows are `rows`.
pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut m = rows.to_vec();
    echelon(&mut m, cols).len()
}

/// Rank of an integer matrix.
pub fn rank_i64(rows: &[Vec<i64>]) -> usize {
    let m: Vec<Vec<Rational>> = rows.iter().map(|r| r.iter().map(|&v| Rational::from_i64(v)).collect()).collect();
    rank(&m)
}

/// Solves `Σ xⱼ columns[j] = rhs`. Returns `None` when the system is
/// inconsistent or the columns are dependent (no unique solution).
pub fn solve_unique(columns: &[Vec<i64>], rhs: &[i64]) -> Option<Vec<Rational>> {
    let k = columns.len();
    let mut m: Vec<Vec<Rational>> = (0..rhs.len())
        .map(|r| {
            let mut row: Vec<Rational> = columns.iter().map(|c| Rational::from_i64(c[r])).collect();
            row.push(Rational::from_i64(rhs[r]));
            row
        })
        .collect();
    let pivots = echelon(&mut m, k + 1);
    if pivots.len() != k || pivots.last() == Some(&k) {
        return None;
    }
    Some((0..k).map(|r| m[r][k].clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranks() {
        assert_eq!(rank_i64(&[vec![1, 2], vec![2, 4]]), 1);
        assert_eq!(rank_i64(&[vec![1, 2], vec![3, 4]]), 2);
        assert_eq!(rank_i64(&[vec![0, 0, 0]]), 0);
        assert_eq!(rank_i64(&[]), 0);
    }

    #[test]
    fn solving() {
        // x·(1,1,0) + y·(0,1,1) = (2,5,3)
        let sol = solve_unique(&[vec![1, 1, 0], vec![0, 1, 1]], &[2, 5, 3]).unwrap();
        assert_eq!(sol, vec![Rational::from_i64(2), Rational::from_i64(3)]);
        assert!(solve_unique(&[vec![1, 1, 0], vec![0, 1, 1]], &[1, 0, 0]).is_none());
        assert!(solve_unique(&[vec![1, 1], vec![2, 2]], &[1, 1]).is_none());
        let half = solve_unique(&[vec![2]], &[1]).unwrap();
        assert_eq!(half, vec![Rational::new(1, 2).unwrap()]);
    }
}
