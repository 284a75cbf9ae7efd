//! Exact rank over the rationals.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Rank over `Q` of the matrix whose rows are `rows`, by fraction-free
/// (Bareiss) elimination on arbitrary-precision integers.
///
/// All rows must have the same length.
#[allow(clippy::needless_range_loop)]
pub fn exact_rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .filter(|r| r.iter().any(|&e| e != 0))
        .map(|r| r.iter().map(|&e| BigInt::from(e)).collect())
        .collect();
    let Some(ncols) = m.first().map(Vec::len) else {
        return 0;
    };
    assert!(m.iter().all(|r| r.len() == ncols), "ragged matrix");

    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..ncols {
        if rank == m.len() {
            break;
        }
        let pivot = (rank..m.len())
            .filter(|&r| !m[r][col].is_zero())
            .min_by(|&a, &b| m[a][col].abs().cmp(&m[b][col].abs()));
        let Some(pivot) = pivot else {
            continue;
        };
        m.swap(rank, pivot);

        let (top, rest) = m.split_at_mut(rank + 1);
        let prow = &top[rank];
        let p = &prow[col];
        for row in rest.iter_mut() {
            let factor = std::mem::take(&mut row[col]);
            if factor.is_zero() {
                for c in col + 1..ncols {
                    if !row[c].is_zero() {
                        row[c] = (p * &row[c]) / &prev;
                    }
                }
                continue;
            }
            for c in col + 1..ncols {
                row[c] = (p * &row[c] - &factor * &prow[c]) / &prev;
            }
        }
        prev = p.clone();
        rank += 1;
    }
    rank
}
