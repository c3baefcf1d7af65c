//! Explicit representations of simply-laced quivers over 𝔽_p.

use std::collections::BTreeSet;

use super::field::{self, Mat};
use crate::error::{Error, Result};
use crate::quiver::Root;

/// Per-vertex dimensions and one matrix per arrow (`dims[t] × dims[s]`,
/// arrows indexed as in the quiver).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    pub p: u64,
    pub arrows: Vec<(usize, usize)>,
    pub dims: Vec<usize>,
    pub maps: Vec<Mat>,
}

impl Representation {
    pub fn dim_vector(&self) -> Root {
        self.dims.iter().map(|&d| d as i64).collect()
    }

    fn simple(arrows: &[(usize, usize)], n: usize, k: usize, p: u64) -> Self {
        let mut dims = vec![0; n];
        dims[k] = 1;
        let maps = arrows.iter().map(|&(s, t)| Mat::zeros(dims[t], dims[s])).collect();
        Representation {
            p,
            arrows: arrows.to_vec(),
            dims,
            maps,
        }
    }

    /// `(dim Hom(self, other), dim Ext¹(self, other))` from the standard
    /// two-term complex `⊕ Hom(X_i, M_i) → ⊕_{a:i→j} Hom(X_i, M_j)`.
    pub fn hom_ext(&self, other: &Representation) -> (usize, usize) {
        assert_eq!(self.arrows, other.arrows);
        assert_eq!(self.p, other.p);
        let p = self.p;
        let n = self.dims.len();
        let (x, m) = (self, other);
        // Variable offsets for f_i: M_i × X_i.
        let mut off = vec![0; n + 1];
        for i in 0..n {
            off[i + 1] = off[i] + m.dims[i] * x.dims[i];
        }
        let vars = off[n];
        let mut rows = Vec::new();
        for (a, &(s, t)) in self.arrows.iter().enumerate() {
            for r in 0..m.dims[t] {
                for c in 0..x.dims[s] {
                    let mut row = vec![0u64; vars];
                    // (M_a f_s)[r][c] = Σ_l M_a[r][l] f_s[l][c]
                    for l in 0..m.dims[s] {
                        let v = m.maps[a].get(r, l);
                        let idx = off[s] + l * x.dims[s] + c;
                        row[idx] = (row[idx] + v) % p;
                    }
                    // − (f_t X_a)[r][c] = − Σ_l f_t[r][l] X_a[l][c]
                    for l in 0..x.dims[t] {
                        let v = x.maps[a].get(l, c);
                        let idx = off[t] + r * x.dims[t] + l;
                        row[idx] = (row[idx] + (p - v) % p) % p;
                    }
                    rows.push(row);
                }
            }
        }
        let nrows = rows.len();
        let rk = if nrows == 0 || vars == 0 {
            0
        } else {
            field::rank(&Mat::from_rows(vars, &rows), p)
        };
        (vars - rk, nrows - rk)
    }

    /// A brick over 𝔽_p has one-dimensional endomorphism ring.
    pub fn is_brick(&self) -> bool {
        self.hom_ext(self).0 == 1
    }

    /// Dimension vectors of all subrepresentations, by exhaustive enumeration
    /// of compatible subspace tuples (vertices in topological order).
    pub fn submodule_dims(&self, topo: &[usize], max_vertex_dim: usize) -> Result<BTreeSet<Root>> {
        if let Some(&d) = self.dims.iter().max() {
            if d > max_vertex_dim {
                return Err(Error::Resource(format!(
                    "vertex dimension {d} exceeds the enumeration cap of {max_vertex_dim}"
                )));
            }
        }
        let p = self.p;
        let subspaces: Vec<Vec<Mat>> = self.dims.iter().map(|&d| field::all_subspaces(d, p)).collect();
        let n = self.dims.len();
        let mut chosen: Vec<Option<Mat>> = vec![None; n];
        let mut out = BTreeSet::new();
        self.enumerate(topo, 0, &subspaces, &mut chosen, &mut out);
        Ok(out)
    }

    fn enumerate(
        &self,
        topo: &[usize],
        k: usize,
        subspaces: &[Vec<Mat>],
        chosen: &mut Vec<Option<Mat>>,
        out: &mut BTreeSet<Root>,
    ) {
        if k == topo.len() {
            out.insert(chosen.iter().map(|u| u.as_ref().unwrap().rows as i64).collect());
            return;
        }
        let v = topo[k];
        let p = self.p;
        let mut images = Vec::new();
        for (a, &(s, t)) in self.arrows.iter().enumerate() {
            if t != v {
                continue;
            }
            let u = chosen[s].as_ref().unwrap();
            for i in 0..u.rows {
                images.push(self.maps[a].apply(u.row(i), p));
            }
        }
        let required = field::span(self.dims[v], &images, p);
        for cand in &subspaces[v] {
            if cand.rows >= required.rows && field::contains_span(cand, &required, p) {
                chosen[v] = Some(cand.clone());
                self.enumerate(topo, k + 1, subspaces, chosen, out);
            }
        }
        chosen[v] = None;
    }
}

/// Build an indecomposable representation with dimension vector `alpha` by
/// reflection functors, starting from a simple.
pub fn build(arrows: &[(usize, usize)], alpha: &[i64], p: u64) -> Result<Representation> {
    build_rec(arrows, alpha, p, 0)
}

const MAX_DEPTH: usize = 4096;

fn build_rec(arrows: &[(usize, usize)], alpha: &[i64], p: u64, depth: usize) -> Result<Representation> {
    let n = alpha.len();
    if depth > MAX_DEPTH {
        return Err(Error::InvariantViolation("reflection recursion did not terminate".into()));
    }
    if alpha.iter().any(|&x| x < 0) || alpha.iter().all(|&x| x == 0) {
        return Err(Error::NotARoot(alpha.to_vec()));
    }
    if alpha.iter().sum::<i64>() == 1 {
        let k = alpha.iter().position(|&x| x == 1).unwrap();
        return Ok(Representation::simple(arrows, n, k, p));
    }
    // Smallest sink in the connected component of the support.
    let support: Vec<usize> = (0..n).filter(|&i| alpha[i] != 0).collect();
    let mut comp = support.clone();
    let mut k = 0;
    while k < comp.len() {
        let v = comp[k];
        for &(s, t) in arrows {
            for (a, b) in [(s, t), (t, s)] {
                if a == v && !comp.contains(&b) {
                    comp.push(b);
                }
            }
        }
        k += 1;
    }
    let sink = comp
        .iter()
        .copied()
        .filter(|&v| arrows.iter().all(|&(s, _)| s != v))
        .min()
        .ok_or_else(|| Error::InvariantViolation("no sink in component".into()))?;
    let neighbours: Vec<usize> = arrows
        .iter()
        .enumerate()
        .filter(|(_, &(_, t))| t == sink)
        .map(|(i, _)| i)
        .collect();
    let mut beta = alpha.to_vec();
    beta[sink] = neighbours.iter().map(|&a| alpha[arrows[a].0]).sum::<i64>() - alpha[sink];
    let flipped: Vec<(usize, usize)> = arrows
        .iter()
        .map(|&(s, t)| if t == sink { (t, s) } else { (s, t) })
        .collect();
    let rep = build_rec(&flipped, &beta, p, depth + 1)?;

    // In the flipped quiver `sink` is a source: stack the outgoing maps.
    let mut block_cols = Vec::new();
    let total: usize = neighbours.iter().map(|&a| rep.dims[arrows[a].0]).sum();
    let mut h = Mat::zeros(total, rep.dims[sink]);
    let mut row = 0;
    for &a in &neighbours {
        let j = arrows[a].0;
        let m = &rep.maps[a];
        for r in 0..m.rows {
            for c in 0..m.cols {
                h.set(row + r, c, m.get(r, c));
            }
        }
        block_cols.push((a, row, m.rows));
        row += m.rows;
        debug_assert_eq!(m.rows, rep.dims[j]);
    }
    let coker = field::left_nullspace(&h, p);
    if coker.rows as i64 != alpha[sink] {
        return Err(Error::InvariantViolation(format!(
            "reflection functor produced dimension {} instead of {} at vertex {}",
            coker.rows,
            alpha[sink],
            sink + 1
        )));
    }
    let mut maps = rep.maps.clone();
    for (a, start, len) in block_cols {
        let mut m = Mat::zeros(coker.rows, len);
        for r in 0..coker.rows {
            for c in 0..len {
                m.set(r, c, coker.get(r, start + c));
            }
        }
        maps[a] = m;
    }
    let mut dims = rep.dims.clone();
    dims[sink] = alpha[sink] as usize;
    Ok(Representation {
        p,
        arrows: arrows.to_vec(),
        dims,
        maps,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interval_module_a3() {
        // 1←2←3 as arrows (1,0), (2,1)
        let arrows = [(1, 0), (2, 1)];
        let r = build(&arrows, &[1, 1, 1], 2).unwrap();
        assert_eq!(r.dims, vec![1, 1, 1]);
        assert!(r.maps.iter().all(|m| m.get(0, 0) != 0));
        assert!(r.is_brick());
        let subs = r.submodule_dims(&[2, 1, 0], 6).unwrap();
        let want: BTreeSet<Root> = [vec![0, 0, 0], vec![1, 0, 0], vec![1, 1, 0], vec![1, 1, 1]].into_iter().collect();
        assert_eq!(subs, want);
    }

    #[test]
    fn d4_centre_root() {
        // arms 1,3,4 pointing into 2
        let arrows = [(0, 1), (2, 1), (3, 1)];
        for p in [2, 3, 5] {
            let r = build(&arrows, &[1, 2, 1, 1], p).unwrap();
            assert_eq!(r.dims, vec![1, 2, 1, 1]);
            assert!(r.is_brick(), "p = {p}");
            // three lines in general position
            let images: Vec<Vec<u64>> = r.maps.iter().map(|m| (0..2).map(|i| m.get(i, 0)).collect()).collect();
            for i in 0..3 {
                for j in i + 1..3 {
                    assert_eq!(field::rank(&Mat::from_rows(2, &[images[i].clone(), images[j].clone()]), p), 2);
                }
            }
        }
    }

    #[test]
    fn simple_has_zero_maps() {
        let r = build(&[(0, 1)], &[0, 1], 2).unwrap();
        assert!(r.maps[0].is_zero());
        assert_eq!(r.hom_ext(&r), (1, 0));
    }

    #[test]
    fn extension_between_simples() {
        // 1→2: Ext¹(S1, S2) = 1 via P1.
        let s1 = build(&[(0, 1)], &[1, 0], 2).unwrap();
        let s2 = build(&[(0, 1)], &[0, 1], 2).unwrap();
        assert_eq!(s1.hom_ext(&s2), (0, 1));
        assert_eq!(s2.hom_ext(&s1), (0, 0));
        let p1 = build(&[(0, 1)], &[1, 1], 2).unwrap();
        let subs = p1.submodule_dims(&[0, 1], 6).unwrap();
        let want: BTreeSet<Root> = [vec![0, 0], vec![0, 1], vec![1, 1]].into_iter().collect();
        assert_eq!(subs, want);
    }

    #[test]
    fn vertex_cap() {
        let arrows = [(0, 1), (2, 1), (3, 1)];
        let r = build(&arrows, &[1, 2, 1, 1], 2).unwrap();
        assert!(matches!(r.submodule_dims(&[0, 2, 3, 1], 1), Err(Error::Resource(_))));
    }
}
