use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Rank over Q by fraction-free (Bareiss) elimination.
pub fn rational_rank(rows: &[Vec<BigInt>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows.iter().filter(|r| r.iter().any(|a| !a.is_zero())).cloned().collect();
    if m.is_empty() {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0;
    let mut prev = BigInt::one();
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][c].clone();
        for r in rank + 1..m.len() {
            let f = m[r][c].clone();
            for k in c..cols {
                let v = (&pivot * &m[r][k] - &f * &m[rank][k]) / &prev;
                m[r][k] = v;
            }
        }
        prev = pivot;
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

/// Rank over Q of a small-entry matrix. Runs in i128 with row-content
/// reduction and falls back to the big-integer path on overflow.
pub fn rational_rank_i64(rows: &[Vec<i64>]) -> usize {
    match rank_i128(rows) {
        Some(r) => r,
        None => {
            let big: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|&a| BigInt::from(a)).collect()).collect();
            rational_rank(&big)
        }
    }
}

fn rank_i128(rows: &[Vec<i64>]) -> Option<usize> {
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .filter(|r| r.iter().any(|&a| a != 0))
        .map(|r| r.iter().map(|&a| a as i128).collect())
        .collect();
    if m.is_empty() {
        return Some(0);
    }
    let cols = m[0].len();
    let mut rank = 0;
    for c in 0..cols {
        // smallest pivot keeps the numbers down
        let Some(p) = (rank..m.len()).filter(|&r| m[r][c] != 0).min_by_key(|&r| m[r][c].unsigned_abs()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][c];
        let (head, tail) = m.split_at_mut(rank + 1);
        let prow = &head[rank];
        for row in tail.iter_mut() {
            let f = row[c];
            if f == 0 {
                continue;
            }
            let g = pivot.gcd(&f);
            let (a, b) = (pivot / g, f / g);
            let mut content = 0i128;
            for k in c..cols {
                let v = a.checked_mul(row[k])?.checked_sub(b.checked_mul(prow[k])?)?;
                row[k] = v;
                content = content.gcd(&v);
            }
            if content > 1 {
                for v in row[c..].iter_mut() {
                    *v /= content;
                }
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    Some(rank)
}

/// Determinant of a square matrix (Bareiss).
pub fn determinant(rows: &[Vec<BigInt>]) -> BigInt {
    let n = rows.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut m = rows.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !m[r][c].is_zero()) else {
            return BigInt::zero();
        };
        if p != c {
            m.swap(p, c);
            sign = -sign;
        }
        for r in c + 1..n {
            for k in c + 1..n {
                let v = (&m[c][c] * &m[r][k] - &m[r][c] * &m[c][k]) / &prev;
                m[r][k] = v;
            }
            m[r][c] = BigInt::zero();
        }
        prev = m[c][c].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// Inverse of a square integer matrix when it is again integral
/// (i.e. the matrix is unimodular); `None` otherwise.
pub fn integer_inverse(rows: &[Vec<BigInt>]) -> Option<Vec<Vec<BigInt>>> {
    let n = rows.len();
    let mut a: Vec<Vec<BigRational>> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row: Vec<BigRational> = r.iter().map(|x| BigRational::from_integer(x.clone())).collect();
            row.extend((0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
            row
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| !a[r][c].is_zero())?;
        a.swap(p, c);
        let inv = a[c][c].recip();
        for v in a[c].iter_mut() {
            *v *= &inv;
        }
        for r in 0..n {
            if r != c && !a[r][c].is_zero() {
                let f = a[r][c].clone();
                for k in 0..2 * n {
                    let d = &f * &a[c][k];
                    a[r][k] -= d;
                }
            }
        }
    }
    a.into_iter()
        .map(|row| {
            row[n..]
                .iter()
                .map(|x| if x.is_integer() { Some(x.to_integer()) } else { None })
                .collect::<Option<Vec<_>>>()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    fn big(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&a| BigInt::from(a)).collect()).collect()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rational_rank(&big(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]])), 3);
        assert_eq!(rational_rank(&big(&[&[0, 0], &[0, 0]])), 0);
        assert_eq!(rational_rank(&big(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rational_rank(&[]), 0);
    }

    #[test]
    fn small_rank_matches_big_rank() {
        let rows: Vec<Vec<i64>> = vec![vec![2, 4, 6, 8], vec![1, 3, 5, 7], vec![3, 7, 11, 15], vec![0, 1, 0, 1]];
        let b: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|&a| BigInt::from(a)).collect()).collect();
        assert_eq!(rational_rank_i64(&rows), rational_rank(&b));
        assert_eq!(rational_rank_i64(&rows), 3);
    }

    #[test]
    fn det_and_inverse() {
        let m = big(&[&[1, 1, 0], &[0, 1, 0], &[-1, -1, -1]]);
        assert_eq!(determinant(&m).abs(), BigInt::one());
        let inv = integer_inverse(&m).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let s: BigInt = (0..3).map(|k| &m[i][k] * &inv[k][j]).sum();
                assert_eq!(s, BigInt::from((i == j) as i64));
            }
        }
        assert_eq!(determinant(&big(&[&[1, 1], &[0, 2]])), BigInt::from(2));
        assert!(integer_inverse(&big(&[&[1, 1], &[0, 2]])).is_none());
    }
}
