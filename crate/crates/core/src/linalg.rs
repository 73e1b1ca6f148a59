//! Exact rank of sparse integer matrices.
//!
//! Rows are eliminated fraction-free: reducing `r` by a pivot row `p` on
//! column `c` replaces `r` with `p[c]*r - r[c]*p`, and each new row is divided
//! by the gcd of its entries so coefficients stay small. The rank is the rank
//! over the rationals.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A sparse row: column index to nonzero entry.
pub type SparseRow = BTreeMap<usize, BigInt>;

/// Order in which pending rows pick their pivot column.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PivotOrder {
    /// Pivot on the smallest column index present in the row.
    First,
    /// Pivot on the largest column index present in the row.
    Last,
}

/// Rank over the rationals of the matrix whose rows are `rows`.
pub fn sparse_rank(rows: &[SparseRow]) -> usize {
    sparse_rank_with(rows, PivotOrder::First)
}

pub fn sparse_rank_with(rows: &[SparseRow], order: PivotOrder) -> usize {
    // pivot column -> reduced pivot row
    let mut pivots: BTreeMap<usize, SparseRow> = BTreeMap::new();
    for row in rows {
        let mut r: SparseRow = row
            .iter()
            .filter(|(_, v)| !v.is_zero())
            .map(|(&c, v)| (c, v.clone()))
            .collect();
        loop {
            let col = match order {
                PivotOrder::First => r.keys().next().copied(),
                PivotOrder::Last => r.keys().next_back().copied(),
            };
            let Some(col) = col else { break };
            match pivots.get(&col) {
                Some(p) => r = eliminate(&r, p, col),
                None => {
                    normalize(&mut r);
                    pivots.insert(col, r);
                    break;
                }
            }
        }
    }
    pivots.len()
}

fn eliminate(r: &SparseRow, p: &SparseRow, col: usize) -> SparseRow {
    let a = &p[&col];
    let b = &r[&col];
    let g = a.gcd(b);
    let (fa, fb) = (a / &g, b / &g);
    let mut out: SparseRow = r.iter().map(|(&c, v)| (c, v * &fa)).collect();
    for (&c, v) in p {
        let e = out.entry(c).or_insert_with(BigInt::zero);
        *e -= v * &fb;
        if e.is_zero() {
            out.remove(&c);
        }
    }
    normalize(&mut out);
    out
}

fn normalize(r: &mut SparseRow) {
    let g = r.values().fold(BigInt::zero(), |g, v| g.gcd(v));
    if !g.is_zero() && !g.is_one() {
        for v in r.values_mut() {
            *v /= &g;
        }
    }
}

/// Rank of a dense integer matrix by Bareiss elimination.
pub fn dense_rank(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pr) = (rank..rows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pr);
        for i in rank + 1..rows {
            for k in col + 1..cols {
                let v = &m[rank][col] * &m[i][k] - &m[i][col] * &m[rank][k];
                m[i][k] = v / &prev;
            }
            m[i][col] = BigInt::zero();
        }
        prev = m[rank][col].abs();
        rank += 1;
    }
    rank
}

/// Dense copy of a sparse matrix with `cols` columns.
pub fn to_dense(rows: &[SparseRow], cols: usize) -> Vec<Vec<BigInt>> {
    rows.iter()
        .map(|r| {
            let mut d = vec![BigInt::zero(); cols];
            for (&c, v) in r {
                d[c] = v.clone();
            }
            d
        })
        .collect()
}
