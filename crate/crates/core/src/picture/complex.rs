//! Cubical chain complex of the cluster morphism category and its nerve.

use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use super::snf::{smith_invariants, SparseMatrix};
use crate::algebra::{Algebra, ClusterObject};
use crate::error::{Error, Result};
use crate::morphism::ClusterMorphism;

/// Free abelian groups on cells with integer boundary matrices;
/// `boundaries[k]` maps degree `k` to degree `k − 1` (`boundaries[0]` is empty).
#[derive(Debug, Clone)]
pub struct ChainComplex {
    pub dims: Vec<usize>,
    pub boundaries: Vec<SparseMatrix>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TorsionCoefficients {
    pub degree: usize,
    pub coefficients: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomologyResult {
    pub betti: Vec<usize>,
    pub torsion: Vec<TorsionCoefficients>,
}

impl ChainComplex {
    pub fn euler_characteristic(&self) -> i64 {
        self.dims.iter().enumerate().map(|(k, &d)| if k % 2 == 0 { d as i64 } else { -(d as i64) }).sum()
    }

    /// `∂_{k} ∘ ∂_{k+1} = 0` in every degree.
    pub fn check_boundary_squared(&self) -> Result<()> {
        for k in 1..self.boundaries.len().saturating_sub(1) {
            if !self.boundaries[k].mul(&self.boundaries[k + 1]).is_zero() {
                return Err(Error::InvariantViolation(format!("∂∂ ≠ 0 from degree {}", k + 1)));
            }
        }
        Ok(())
    }

    pub fn homology(&self) -> HomologyResult {
        let top = self.dims.len();
        let inv: Vec<_> = (0..=top)
            .map(|k| {
                if k == 0 || k >= top {
                    None
                } else {
                    Some(smith_invariants(&self.boundaries[k]))
                }
            })
            .collect();
        let rank = |k: usize| inv[k].as_ref().map_or(0, |s| s.rank);
        let mut betti = Vec::with_capacity(top);
        let mut torsion = Vec::new();
        for k in 0..top {
            betti.push(self.dims[k] - rank(k) - rank(k + 1));
            if let Some(s) = &inv[k + 1] {
                if !s.torsion.is_empty() {
                    torsion.push(TorsionCoefficients {
                        degree: k,
                        coefficients: s.torsion.iter().map(|d| d.to_string()).collect(),
                    });
                }
            }
        }
        HomologyResult { betti, torsion }
    }
}

/// Sign of the permutation sorting `v`.
fn sort_sign<T: Ord + Copy>(v: &[T]) -> i64 {
    let mut inversions = 0;
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            if v[i] > v[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

impl Algebra {
    /// All morphisms of the cluster morphism category, grouped by rank.
    pub fn morphisms_by_rank(&self) -> Result<Vec<Vec<ClusterMorphism>>> {
        let n = self.n();
        let mut cells: Vec<BTreeSet<ClusterMorphism>> = vec![BTreeSet::new(); n + 1];
        for w in self.all_wide_subcategories()? {
            let mut seen: BTreeSet<Vec<ClusterObject>> = BTreeSet::new();
            for cluster in self.all_clusters(w.roots)? {
                let k = cluster.len();
                for mask in 0u32..(1 << k) {
                    let sub: Vec<ClusterObject> = (0..k).filter(|i| mask >> i & 1 == 1).map(|i| cluster[i]).collect();
                    if seen.insert(sub.clone()) {
                        let target = self.perp_roots(w.roots, &sub);
                        cells[sub.len()].insert(ClusterMorphism {
                            source: w.roots,
                            objects: sub,
                            target,
                        });
                    }
                }
            }
        }
        Ok(cells.into_iter().map(|s| s.into_iter().collect()).collect())
    }

    /// Faces of the cube of `[T]`: `(coefficient, face)` pairs.
    pub fn cube_boundary(&self, m: &ClusterMorphism) -> Result<Vec<(i64, ClusterMorphism)>> {
        let k = m.objects.len();
        let mut out = Vec::with_capacity(2 * k);
        for i in 0..k {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            let t = m.objects[i];
            let rest: Vec<ClusterObject> = m.objects.iter().copied().filter(|&x| x != t).collect();
            let source = self.perp_roots(m.source, &[t]);
            let mut comps = Vec::with_capacity(k - 1);
            for &y in &rest {
                comps.push(self.descend(m.source, &[t], y)?);
            }
            let perm = sort_sign(&comps);
            comps.sort();
            out.push((
                sign * perm,
                ClusterMorphism {
                    source,
                    objects: comps,
                    target: m.target,
                },
            ));
            let target = self.perp_roots(m.source, &rest);
            out.push((
                -sign,
                ClusterMorphism {
                    source: m.source,
                    objects: rest,
                    target,
                },
            ));
        }
        Ok(out)
    }

    /// Cellular chain complex of the picture space: one `k`-cube per rank-`k` morphism.
    pub fn cubical_complex(&self) -> Result<ChainComplex> {
        let cells = self.morphisms_by_rank()?;
        let index: Vec<HashMap<&ClusterMorphism, usize>> =
            cells.iter().map(|c| c.iter().enumerate().map(|(i, m)| (m, i)).collect()).collect();
        let mut boundaries = vec![SparseMatrix::new(0, cells[0].len())];
        for k in 1..cells.len() {
            let mut d = SparseMatrix::new(cells[k - 1].len(), cells[k].len());
            for (j, m) in cells[k].iter().enumerate() {
                let mut acc: HashMap<usize, i64> = HashMap::new();
                for (c, face) in self.cube_boundary(m)? {
                    let row = *index[k - 1]
                        .get(&face)
                        .ok_or_else(|| Error::InvariantViolation("cube face is not a morphism".into()))?;
                    *acc.entry(row).or_default() += c;
                }
                let mut col: Vec<(usize, i64)> = acc.into_iter().filter(|&(_, v)| v != 0).collect();
                col.sort_unstable();
                d.columns[j] = col;
            }
            boundaries.push(d);
        }
        let cx = ChainComplex {
            dims: cells.iter().map(|c| c.len()).collect(),
            boundaries,
        };
        cx.check_boundary_squared()?;
        Ok(cx)
    }

    /// Simplicial chain complex of the nerve: `k`-simplices are chains of `k`
    /// composable non-identity morphisms.
    pub fn nerve_complex(&self) -> Result<ChainComplex> {
        let cells = self.morphisms_by_rank()?;
        let objects: Vec<_> = cells[0].iter().map(|m| m.source).collect();
        let obj_index: HashMap<_, usize> = objects.iter().enumerate().map(|(i, &w)| (w, i)).collect();
        let arrows: Vec<ClusterMorphism> = cells[1..].iter().flatten().cloned().collect();
        let arrow_index: HashMap<&ClusterMorphism, usize> = arrows.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut out_of: HashMap<_, Vec<usize>> = HashMap::new();
        for (i, m) in arrows.iter().enumerate() {
            out_of.entry(m.source).or_default().push(i);
        }
        // simplices[k]: chains of k arrows (k ≥ 1).
        let mut simplices: Vec<Vec<Vec<usize>>> = vec![Vec::new(), arrows.iter().enumerate().map(|(i, _)| vec![i]).collect()];
        loop {
            let last = simplices.last().unwrap();
            let mut next = Vec::new();
            for chain in last {
                let end = arrows[*chain.last().unwrap()].target;
                for &a in out_of.get(&end).map_or(&[][..], |v| &v[..]) {
                    let mut c = chain.clone();
                    c.push(a);
                    next.push(c);
                }
            }
            if next.is_empty() {
                break;
            }
            simplices.push(next);
        }
        let mut dims = vec![objects.len()];
        dims.extend(simplices[1..].iter().map(|s| s.len()));
        let mut boundaries = vec![SparseMatrix::new(0, objects.len())];
        let mut d1 = SparseMatrix::new(objects.len(), arrows.len());
        for (j, m) in arrows.iter().enumerate() {
            let (t, s) = (obj_index[&m.target], obj_index[&m.source]);
            d1.columns[j] = if t < s { vec![(t, 1), (s, -1)] } else { vec![(s, -1), (t, 1)] };
        }
        boundaries.push(d1);
        for k in 2..simplices.len() {
            let index: HashMap<&Vec<usize>, usize> = simplices[k - 1].iter().enumerate().map(|(i, c)| (c, i)).collect();
            let mut d = SparseMatrix::new(simplices[k - 1].len(), simplices[k].len());
            for (j, chain) in simplices[k].iter().enumerate() {
                let mut acc: HashMap<usize, i64> = HashMap::new();
                for i in 0..=k {
                    let face: Vec<usize> = if i == 0 {
                        chain[1..].to_vec()
                    } else if i == k {
                        chain[..k - 1].to_vec()
                    } else {
                        let comp = self.compose(&arrows[chain[i]], &arrows[chain[i - 1]])?;
                        let mut f = chain[..i - 1].to_vec();
                        f.push(arrow_index[&comp]);
                        f.extend_from_slice(&chain[i + 1..]);
                        f
                    };
                    let sign = if i % 2 == 0 { 1 } else { -1 };
                    *acc.entry(index[&face]).or_default() += sign;
                }
                let mut col: Vec<(usize, i64)> = acc.into_iter().filter(|&(_, v)| v != 0).collect();
                col.sort_unstable();
                d.columns[j] = col;
            }
            boundaries.push(d);
        }
        let cx = ChainComplex { dims, boundaries };
        cx.check_boundary_squared()?;
        Ok(cx)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a1_circle() {
        let a = Algebra::from_spec("A1:").unwrap();
        let cx = a.cubical_complex().unwrap();
        assert_eq!(cx.dims, vec![2, 2]);
        assert_eq!(cx.homology().betti, vec![1, 1]);
    }

    #[test]
    fn a2_cubical_and_nerve() {
        let a = Algebra::from_spec("A2: 1<2").unwrap();
        let cx = a.cubical_complex().unwrap();
        let h = cx.homology();
        assert_eq!(h.betti, vec![1, 2, 0]);
        assert!(h.torsion.is_empty());
        let nerve = a.nerve_complex().unwrap();
        assert_eq!(nerve.dims, vec![5, 16, 10]);
        assert_eq!(nerve.euler_characteristic(), -1);
        assert_eq!(nerve.homology().betti, vec![1, 2, 0]);
    }

    #[test]
    fn a3_objects() {
        let a = Algebra::from_spec("A3: 1<2<3").unwrap();
        let cx = a.cubical_complex().unwrap();
        assert_eq!(cx.dims[0], 14);
        assert_eq!(cx.homology().betti, vec![1, 3, 2, 0]);
    }
}
