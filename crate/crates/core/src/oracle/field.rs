//! Dense linear algebra over a prime field 𝔽_p.

/// Row-major matrix; an empty row list with `cols` recorded separately is
/// allowed so zero-dimensional spaces behave.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<u64>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(cols: usize, rows: &[Vec<u64>]) -> Self {
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols);
            m.data[i * cols..(i + 1) * cols].copy_from_slice(r);
        }
        m
    }

    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn mul(&self, other: &Mat, p: u64) -> Mat {
        assert_eq!(self.cols, other.rows);
        let mut out = Mat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let v = (out.get(i, j) + a * other.get(k, j)) % p;
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    /// Apply to a column vector.
    pub fn apply(&self, v: &[u64], p: u64) -> Vec<u64> {
        (0..self.rows)
            .map(|r| self.row(r).iter().zip(v).fold(0, |s, (a, b)| (s + a * b) % p))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }
}

pub fn inv(a: u64, p: u64) -> u64 {
    pow(a, p - 2, p)
}

fn pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

/// Reduced row echelon form in place; returns pivot columns.
pub fn rref(m: &mut Mat, p: u64) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..m.cols {
        if r == m.rows {
            break;
        }
        let Some(pr) = (r..m.rows).find(|&i| m.get(i, c) != 0) else {
            continue;
        };
        if pr != r {
            for j in 0..m.cols {
                m.data.swap(pr * m.cols + j, r * m.cols + j);
            }
        }
        let iv = inv(m.get(r, c), p);
        for j in 0..m.cols {
            let v = m.get(r, j) * iv % p;
            m.set(r, j, v);
        }
        for i in 0..m.rows {
            let f = m.get(i, c);
            if i != r && f != 0 {
                for j in 0..m.cols {
                    let v = (m.get(i, j) + (p - f) * m.get(r, j)) % p;
                    m.set(i, j, v);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &Mat, p: u64) -> usize {
    let mut m = m.clone();
    rref(&mut m, p).len()
}

/// Basis (as rows) of `{x : m x = 0}`.
pub fn nullspace(m: &Mat, p: u64) -> Mat {
    let mut r = m.clone();
    let pivots = rref(&mut r, p);
    let free: Vec<usize> = (0..m.cols).filter(|c| !pivots.contains(c)).collect();
    let mut out = Mat::zeros(free.len(), m.cols);
    for (k, &f) in free.iter().enumerate() {
        out.set(k, f, 1);
        for (i, &pc) in pivots.iter().enumerate() {
            out.set(k, pc, (p - r.get(i, f)) % p);
        }
    }
    out
}

/// Basis (as rows) of `{y : yᵀ m = 0}`.
pub fn left_nullspace(m: &Mat, p: u64) -> Mat {
    nullspace(&m.transpose(), p)
}

/// Row basis of the span of the given vectors, in reduced echelon form.
pub fn span(cols: usize, vectors: &[Vec<u64>], p: u64) -> Mat {
    let mut m = Mat::from_rows(cols, vectors);
    let k = rref(&mut m, p).len();
    m.data.truncate(k * cols);
    m.rows = k;
    m
}

/// Every subspace of 𝔽_p^d, each given by a reduced echelon basis.
pub fn all_subspaces(d: usize, p: u64) -> Vec<Mat> {
    let mut out = Vec::new();
    for k in 0..=d {
        for pivots in combinations(d, k) {
            // Free slots: (row i, column c) with c > pivot_i and c not a pivot.
            let slots: Vec<(usize, usize)> = pivots
                .iter()
                .enumerate()
                .flat_map(|(i, &pc)| (pc + 1..d).filter(|c| !pivots.contains(c)).map(move |c| (i, c)))
                .collect();
            let total = (p as usize).pow(slots.len() as u32);
            for mut code in 0..total {
                let mut m = Mat::zeros(k, d);
                for (i, &pc) in pivots.iter().enumerate() {
                    m.set(i, pc, 1);
                }
                for &(i, c) in &slots {
                    m.set(i, c, (code % p as usize) as u64);
                    code /= p as usize;
                }
                out.push(m);
            }
        }
    }
    out
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Whether the row space of `sub` lies in the row space of `space`.
pub fn contains_span(space: &Mat, sub: &Mat, p: u64) -> bool {
    if sub.rows == 0 {
        return true;
    }
    let mut rows: Vec<Vec<u64>> = (0..space.rows).map(|i| space.row(i).to_vec()).collect();
    rows.extend((0..sub.rows).map(|i| sub.row(i).to_vec()));
    rank(&Mat::from_rows(space.cols, &rows), p) == space.rows
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subspace_counts() {
        // Gaussian binomials: over 𝔽₂, 𝔽₂² has 1+3+1 subspaces, 𝔽₂³ has 1+7+7+1.
        assert_eq!(all_subspaces(2, 2).len(), 5);
        assert_eq!(all_subspaces(3, 2).len(), 16);
        assert_eq!(all_subspaces(2, 3).len(), 6);
        assert_eq!(all_subspaces(0, 2).len(), 1);
    }

    #[test]
    fn nullspaces() {
        let m = Mat::from_rows(3, &[vec![1, 1, 0], vec![0, 1, 1]]);
        let n = nullspace(&m, 2);
        assert_eq!(n.rows, 1);
        assert!(m.mul(&n.transpose(), 2).is_zero());
        let l = left_nullspace(&Mat::from_rows(1, &[vec![1], vec![1]]), 3);
        assert_eq!(l.rows, 1);
        assert_eq!(l.row(0), &[2, 1]);
        assert_eq!(inv(3, 5), 2);
    }

    #[test]
    fn containment() {
        let a = span(2, &[vec![1, 1]], 2);
        let full = Mat::identity(2);
        assert!(contains_span(&full, &a, 2));
        assert!(!contains_span(&a, &full, 2));
    }
}
