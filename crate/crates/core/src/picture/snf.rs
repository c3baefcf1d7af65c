//! Ranks and elementary divisors of sparse integer matrices.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Column-major sparse integer matrix.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SparseMatrix {
    pub rows: usize,
    pub cols: usize,
    pub columns: Vec<Vec<(usize, i64)>>,
}

impl SparseMatrix {
    pub fn new(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols,
            columns: vec![Vec::new(); cols],
        }
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(|c| c.len()).sum()
    }

    /// `self · other` (self: a×b, other: b×c).
    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = SparseMatrix::new(self.rows, other.cols);
        for (j, col) in other.columns.iter().enumerate() {
            let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
            for &(k, v) in col {
                for &(i, w) in &self.columns[k] {
                    *acc.entry(i).or_default() += v * w;
                }
            }
            out.columns[j] = acc.into_iter().filter(|&(_, v)| v != 0).collect();
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(|c| c.iter().all(|&(_, v)| v == 0))
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut d = vec![vec![0; self.cols]; self.rows];
        for (j, col) in self.columns.iter().enumerate() {
            for &(i, v) in col {
                d[i][j] += v;
            }
        }
        d
    }
}

/// Rank and the elementary divisors different from 1 (all positive).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithInvariants {
    pub rank: usize,
    pub torsion: Vec<BigInt>,
}

/// Eliminate ±1 pivots sparsely, then finish the leftover block densely
/// over arbitrary-precision integers.
pub fn smith_invariants(m: &SparseMatrix) -> SmithInvariants {
    let mut rows: Vec<BTreeMap<usize, i64>> = vec![BTreeMap::new(); m.rows];
    let mut col_rows: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); m.cols];
    for (j, col) in m.columns.iter().enumerate() {
        for &(i, v) in col {
            if v != 0 {
                *rows[i].entry(j).or_default() += v;
            }
        }
    }
    for (i, row) in rows.iter_mut().enumerate() {
        row.retain(|_, v| *v != 0);
        for &j in row.keys() {
            col_rows[j].insert(i);
        }
    }
    let mut unit_rank = 0;
    let mut overflow = false;
    'passes: loop {
        let mut order: Vec<usize> = (0..m.cols).filter(|&j| !col_rows[j].is_empty()).collect();
        order.sort_by_key(|&j| col_rows[j].len());
        let mut progress = false;
        for j in order {
            let pivot = col_rows[j]
                .iter()
                .copied()
                .filter(|&i| rows[i][&j].abs() == 1)
                .min_by_key(|&i| rows[i].len());
            let Some(r) = pivot else { continue };
            let u = rows[r][&j];
            let prow: Vec<(usize, i64)> = rows[r].iter().map(|(&c, &v)| (c, v)).collect();
            let others: Vec<usize> = col_rows[j].iter().copied().filter(|&i| i != r).collect();
            for i in others {
                let f = rows[i][&j] * u;
                for &(c, v) in &prow {
                    let cur = rows[i].get(&c).copied().unwrap_or(0);
                    let Some(nv) = f.checked_mul(v).and_then(|x| cur.checked_sub(x)) else {
                        overflow = true;
                        break 'passes;
                    };
                    if nv == 0 {
                        rows[i].remove(&c);
                        col_rows[c].remove(&i);
                    } else {
                        if cur == 0 {
                            col_rows[c].insert(i);
                        }
                        rows[i].insert(c, nv);
                    }
                }
            }
            for &(c, _) in &prow {
                col_rows[c].remove(&r);
            }
            rows[r].clear();
            unit_rank += 1;
            progress = true;
        }
        if !progress {
            break;
        }
    }
    if overflow {
        let big: Vec<Vec<BigInt>> = m.to_dense().iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
        return dense_smith(&big);
    }
    let live_rows: Vec<usize> = (0..m.rows).filter(|&i| !rows[i].is_empty()).collect();
    let live_cols: Vec<usize> = (0..m.cols).filter(|&j| !col_rows[j].is_empty()).collect();
    let dense: Vec<Vec<BigInt>> = live_rows
        .iter()
        .map(|&i| {
            live_cols
                .iter()
                .map(|j| BigInt::from(rows[i].get(j).copied().unwrap_or(0)))
                .collect()
        })
        .collect();
    let rest = dense_smith(&dense);
    SmithInvariants {
        rank: unit_rank + rest.rank,
        torsion: rest.torsion,
    }
}

/// Textbook Smith normal form on a dense matrix.
pub fn dense_smith(m: &[Vec<BigInt>]) -> SmithInvariants {
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let nr = a.len();
    let nc = a.first().map_or(0, |r| r.len());
    let mut divisors: Vec<BigInt> = Vec::new();
    let mut t = 0;
    while t < nr.min(nc) {
        // Smallest nonzero entry of the trailing block.
        let mut best: Option<(usize, usize)> = None;
        for i in t..nr {
            for j in t..nc {
                if !a[i][j].is_zero() && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        a.swap(t, bi);
        for row in a.iter_mut() {
            row.swap(t, bj);
        }
        loop {
            let mut clean = true;
            for i in t + 1..nr {
                if !a[i][t].is_zero() {
                    let q = a[i][t].div_floor(&a[t][t]);
                    for j in t..nc {
                        let s = &q * &a[t][j];
                        a[i][j] -= s;
                    }
                    if !a[i][t].is_zero() {
                        clean = false;
                        if a[i][t].abs() < a[t][t].abs() {
                            a.swap(t, i);
                        }
                    }
                }
            }
            for j in t + 1..nc {
                if !a[t][j].is_zero() {
                    let q = a[t][j].div_floor(&a[t][t]);
                    for i in t..nr {
                        let s = &q * &a[i][t];
                        a[i][j] -= s;
                    }
                    if !a[t][j].is_zero() {
                        clean = false;
                        if a[t][j].abs() < a[t][t].abs() {
                            for row in a.iter_mut() {
                                row.swap(t, j);
                            }
                        }
                    }
                }
            }
            if !clean {
                continue;
            }
            // Divisibility of the trailing block by the pivot.
            let bad = (t + 1..nr).find(|&i| (t + 1..nc).any(|j| !(&a[i][j] % &a[t][t]).is_zero()));
            match bad {
                Some(i) => {
                    for j in t..nc {
                        let v = a[i][j].clone();
                        a[t][j] += v;
                    }
                }
                None => break,
            }
        }
        divisors.push(a[t][t].abs());
        t += 1;
    }
    SmithInvariants {
        rank: divisors.len(),
        torsion: divisors.into_iter().filter(|d| !d.is_one()).collect(),
    }
}
