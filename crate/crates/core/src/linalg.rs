//! Exact rank of integer matrices by fraction-free (Bareiss) elimination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Rank over ℚ of a dense integer matrix given as rows.
///
/// Every intermediate entry is a minor of the input, so each division by the
/// previous pivot is exact; this is asserted.
pub fn rank(rows: &[Vec<BigInt>]) -> usize {
    let mut a: Vec<Vec<BigInt>> = rows.to_vec();
    let n = a.len();
    let cols = a.first().map_or(0, Vec::len);
    assert!(a.iter().all(|r| r.len() == cols), "ragged matrix");
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == n {
            break;
        }
        let Some(p) = (r..n).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        for i in r + 1..n {
            for j in c + 1..cols {
                let num = &a[r][c] * &a[i][j] - &a[i][c] * &a[r][j];
                let (q, rem) = num.div_rem(&prev);
                debug_assert!(rem.is_zero(), "Bareiss division must be exact");
                a[i][j] = q;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        r += 1;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use num_traits::Zero;
    use proptest::prelude::*;

    fn m(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    /// Plain Gauss–Jordan over ℚ.
    #[allow(clippy::needless_range_loop)]
    fn rational_rank(rows: &[Vec<BigInt>]) -> usize {
        let mut a: Vec<Vec<BigRational>> =
            rows.iter().map(|r| r.iter().map(|x| BigRational::from_integer(x.clone())).collect()).collect();
        let cols = a.first().map_or(0, Vec::len);
        let mut r = 0;
        for c in 0..cols {
            let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else { continue };
            a.swap(r, p);
            for i in 0..a.len() {
                if i != r && !a[i][c].is_zero() {
                    let f = &a[i][c] / &a[r][c];
                    for j in 0..cols {
                        let t = &f * &a[r][j];
                        a[i][j] -= t;
                    }
                }
            }
            r += 1;
        }
        r
    }

    #[test]
    fn small_ranks() {
        assert_eq!(rank(&m(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank(&m(&[&[0, 1], &[1, 0]])), 2);
        assert_eq!(rank(&m(&[&[0, 0, 3], &[0, 0, 1]])), 1);
        assert_eq!(rank(&m(&[])), 0);
        assert_eq!(rank(&m(&[&[1, -1, 0, 0], &[0, 0, 1, -1], &[1, -1, 1, -1]])), 2);
    }

    proptest! {
        #[test]
        fn agrees_with_rational_elimination(
            rows in 1usize..6, cols in 1usize..6,
            entries in proptest::collection::vec(-3i64..=3, 36),
        ) {
            let a: Vec<Vec<BigInt>> = (0..rows)
                .map(|i| (0..cols).map(|j| BigInt::from(entries[i * 6 + j])).collect())
                .collect();
            prop_assert_eq!(rank(&a), rational_rank(&a));
        }
    }
}
