//! Exact rank of integer matrices by fraction-free (Bareiss) elimination.

use num_bigint::BigInt;
use num_traits::Zero;

/// Rank over the rationals of the row space of `rows`.
///
/// Rows may have different lengths; missing entries are zero. Elimination runs
/// on `i128` and restarts on `BigInt` if an intermediate minor overflows.
pub fn integer_rank(rows: &[Vec<i64>]) -> usize {
    let width = rows.iter().map(Vec::len).max().unwrap_or(0);
    let small: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| {
            (0..width)
                .map(|j| r.get(j).copied().unwrap_or(0) as i128)
                .collect()
        })
        .collect();
    if let Some(r) = bareiss_i128(small, width) {
        return r;
    }
    let big: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| {
            (0..width)
                .map(|j| BigInt::from(r.get(j).copied().unwrap_or(0)))
                .collect()
        })
        .collect();
    bareiss_big(big, width)
}

#[allow(clippy::needless_range_loop)]
fn bareiss_i128(mut m: Vec<Vec<i128>>, width: usize) -> Option<usize> {
    let height = m.len();
    let mut rank = 0;
    let mut prev: i128 = 1;
    for col in 0..width {
        if rank == height {
            break;
        }
        let Some(p) = (rank..height).find(|&i| m[i][col] != 0) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][col];
        for i in rank + 1..height {
            let lead = m[i][col];
            for j in col + 1..width {
                let t = pivot
                    .checked_mul(m[i][j])?
                    .checked_sub(lead.checked_mul(m[rank][j])?)?;
                m[i][j] = t / prev;
            }
            m[i][col] = 0;
        }
        prev = pivot;
        rank += 1;
    }
    Some(rank)
}

#[allow(clippy::needless_range_loop)]
fn bareiss_big(mut m: Vec<Vec<BigInt>>, width: usize) -> usize {
    let height = m.len();
    let mut rank = 0;
    let mut prev = BigInt::from(1);
    for col in 0..width {
        if rank == height {
            break;
        }
        let Some(p) = (rank..height).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][col].clone();
        for i in rank + 1..height {
            let lead = m[i][col].clone();
            for j in col + 1..width {
                let t = &pivot * &m[i][j] - &lead * &m[rank][j];
                m[i][j] = t / &prev;
            }
            m[i][col] = BigInt::zero();
        }
        prev = pivot;
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        assert_eq!(
            integer_rank(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]),
            3
        );
        assert_eq!(integer_rank(&[vec![1, 0], vec![1, 0], vec![0, 0]]), 1);
        // 2·5 − 4·3 = −2 ≠ 0
        assert_eq!(integer_rank(&[vec![2, 4], vec![1, 2], vec![3, 5]]), 2);
        assert_eq!(integer_rank(&[]), 0);
        assert_eq!(integer_rank(&[vec![], vec![]]), 0);
        assert_eq!(integer_rank(&[vec![0, 0, 0]]), 0);
    }

    #[test]
    fn overflow_falls_back_to_bigint() {
        let big = i64::MAX / 3;
        let rows = vec![
            vec![big, big - 1, 7],
            vec![big - 5, big, 11],
            vec![3, big - 2, big],
        ];
        assert!(bareiss_i128(
            rows.iter()
                .map(|r| r.iter().map(|&x| x as i128).collect())
                .collect(),
            3
        )
        .is_none());
        assert_eq!(integer_rank(&rows), 3);
        // third row = first + second: rank drops to 2 even with huge entries
        let dependent = [vec![big, 1, big - 9], vec![big - 4, big, 2]];
        let sum: Vec<i64> = dependent[0]
            .iter()
            .zip(&dependent[1])
            .map(|(x, y)| (*x as i128 + *y as i128) as i64)
            .collect();
        let rows = vec![dependent[0].clone(), dependent[1].clone(), sum];
        assert_eq!(integer_rank(&rows), 2);
    }
}
