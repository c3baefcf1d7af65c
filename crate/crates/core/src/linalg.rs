//! Small exact linear algebra over ℤ and ℚ.

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Signed, Zero};

pub type Q = Ratio<i128>;

pub fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Rank over ℚ of a list of integer rows.
pub fn rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let cols = m.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..m.len() {
            if m[i][c] == 0 {
                continue;
            }
            let (a, b) = (m[r][c], m[i][c]);
            let g = a.gcd(&b);
            let (a, b) = (a / g, b / g);
            for j in 0..cols {
                m[i][j] = m[i][j] * a - m[r][j] * b;
            }
            let g = m[i].iter().fold(0i128, |g, x| g.gcd(x));
            if g > 1 {
                m[i].iter_mut().for_each(|x| *x /= g);
            }
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

/// Leading principal minors of a square integer matrix (fraction-free elimination).
pub fn leading_minors(m: &[Vec<i64>]) -> Vec<i128> {
    let n = m.len();
    let mut a: Vec<Vec<i128>> = m
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let mut out = Vec::with_capacity(n);
    let mut prev = 1i128;
    for k in 0..n {
        let piv = a[k][k];
        out.push(piv);
        if piv == 0 {
            // Remaining minors are not determined without pivoting; callers only
            // need to know the sequence stopped being positive.
            break;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * piv - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = piv;
    }
    out
}

pub fn is_positive_definite(m: &[Vec<i64>]) -> bool {
    let minors = leading_minors(m);
    minors.len() == m.len() && minors.iter().all(|&d| d > 0)
}

/// Determinant of a square integer matrix (fraction-free, with row pivoting).
pub fn determinant(m: &[Vec<i64>]) -> i128 {
    let n = m.len();
    let mut a: Vec<Vec<i128>> = m
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| a[i][k] != 0) else {
            return 0;
        };
        if p != k {
            a.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    if n == 0 {
        1
    } else {
        sign * a[n - 1][n - 1]
    }
}

/// Coefficients `c` with `Σ c_i basis_i = v`, if `v` lies in the rational span.
/// The basis vectors must be linearly independent.
pub fn express(basis: &[Vec<i64>], v: &[i64]) -> Option<Vec<Q>> {
    let k = basis.len();
    let n = v.len();
    // Augmented n × (k+1) system.
    let mut m: Vec<Vec<Q>> = (0..n)
        .map(|i| {
            let mut row: Vec<Q> = basis.iter().map(|b| Q::from(b[i] as i128)).collect();
            row.push(Q::from(v[i] as i128));
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..k {
        let Some(p) = (r..n).find(|&i| !m[i][c].is_zero()) else {
            return None;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= inv;
        }
        for i in 0..n {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c];
                for j in 0..=k {
                    let t = m[r][j] * f;
                    m[i][j] -= t;
                }
            }
        }
        pivots.push(r);
        r += 1;
    }
    if (r..n).any(|i| !m[i][k].is_zero()) {
        return None;
    }
    Some(pivots.iter().map(|&i| m[i][k]).collect())
}

/// Solve the square system `a x = b` over ℚ.
pub fn solve(a: &[Vec<i64>], b: &[i64]) -> Option<Vec<Q>> {
    let n = a.len();
    let cols: Vec<Vec<i64>> = (0..n).map(|j| a.iter().map(|r| r[j]).collect()).collect();
    express(&cols, b)
}

/// Whether `v` is a nonnegative integer combination of independent vectors.
pub fn nonneg_integer_combination(basis: &[Vec<i64>], v: &[i64]) -> bool {
    match express(basis, v) {
        Some(c) => c.iter().all(|x| x.is_integer() && !x.is_negative()),
        None => false,
    }
}

/// A sublattice of ℤⁿ in row-echelon (Hermite) form.
#[derive(Debug, Clone)]
pub struct IntLattice {
    rows: Vec<(usize, Vec<i64>)>,
    dim: usize,
}

impl IntLattice {
    pub fn new(dim: usize, gens: &[Vec<i64>]) -> Self {
        let mut m: Vec<Vec<i64>> = gens.iter().filter(|g| g.iter().any(|&x| x != 0)).cloned().collect();
        let mut rows = Vec::new();
        let mut r = 0;
        for c in 0..dim {
            loop {
                let nz: Vec<usize> = (r..m.len()).filter(|&i| m[i][c] != 0).collect();
                if nz.is_empty() {
                    break;
                }
                let best = *nz.iter().min_by_key(|&&i| m[i][c].abs()).unwrap();
                m.swap(r, best);
                if m[r][c] < 0 {
                    m[r].iter_mut().for_each(|x| *x = -*x);
                }
                let mut done = true;
                for i in r + 1..m.len() {
                    if m[i][c] != 0 {
                        let q = Integer::div_floor(&m[i][c], &m[r][c]);
                        for j in 0..dim {
                            m[i][j] -= q * m[r][j];
                        }
                        if m[i][c] != 0 {
                            done = false;
                        }
                    }
                }
                if done {
                    rows.push((c, m[r].clone()));
                    r += 1;
                    break;
                }
            }
        }
        IntLattice { rows, dim }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        assert_eq!(v.len(), self.dim);
        let mut v = v.to_vec();
        for (c, row) in &self.rows {
            if v[*c] % row[*c] != 0 {
                return false;
            }
            let q = v[*c] / row[*c];
            for j in 0..self.dim {
                v[j] -= q * row[j];
            }
        }
        v.iter().all(|&x| x == 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_and_minors() {
        assert_eq!(rank(&[vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]]), 2);
        assert_eq!(rank(&[]), 0);
        let cartan_a3 = vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]];
        assert_eq!(leading_minors(&cartan_a3), vec![2, 3, 4]);
        assert!(is_positive_definite(&cartan_a3));
        let affine = vec![vec![2, -2], vec![-2, 2]];
        assert!(!is_positive_definite(&affine));
        assert_eq!(determinant(&cartan_a3), 4);
        assert_eq!(determinant(&[vec![0, 1], vec![1, 0]]), -1);
        assert_eq!(determinant(&[vec![1, 2], vec![2, 4]]), 0);
    }

    #[test]
    fn express_and_solve() {
        let basis = vec![vec![1, 0, 0], vec![1, 1, 0]];
        let c = express(&basis, &[3, 1, 0]).unwrap();
        assert_eq!(c, vec![Q::from(2), Q::from(1)]);
        assert!(express(&basis, &[0, 0, 1]).is_none());
        assert!(nonneg_integer_combination(&basis, &[2, 1, 0]));
        assert!(!nonneg_integer_combination(&basis, &[0, 1, 0]));
        let x = solve(&[vec![2, 0], vec![0, 4]], &[1, 2]).unwrap();
        assert_eq!(x, vec![Q::new(1, 2), Q::new(1, 2)]);
    }

    #[test]
    fn lattice_membership() {
        let l = IntLattice::new(3, &[vec![2, 0, 0], vec![1, 1, 0]]);
        assert_eq!(l.rank(), 2);
        assert!(l.contains(&[3, 1, 0]));
        assert!(l.contains(&[0, 2, 0]));
        assert!(!l.contains(&[0, 1, 0]));
        assert!(!l.contains(&[0, 0, 1]));
        assert!(IntLattice::new(2, &[]).contains(&[0, 0]));
    }
}
