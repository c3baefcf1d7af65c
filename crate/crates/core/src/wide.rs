//! Wide subcategories as root sets.

use std::collections::HashSet;

use serde::Serialize;

use crate::algebra::{Algebra, ClusterObject};
use crate::error::{Error, Result};
use crate::linalg;
use crate::rootset::RootSet;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct WideSubcategory {
    pub roots: RootSet,
    pub simples: Vec<usize>,
    pub projectives: Vec<usize>,
}

impl WideSubcategory {
    pub fn rank(&self) -> usize {
        self.simples.len()
    }

    pub fn contains(&self, a: usize) -> bool {
        self.roots.contains(a)
    }
}

impl Algebra {
    /// Validate a root set as a wide subcategory and find its simples and
    /// relative projectives.
    pub fn wide(&self, roots: RootSet) -> Result<WideSubcategory> {
        let simples = self.simples_of(roots)?;
        let projectives = self.projectives_of(roots);
        if projectives.len() != simples.len() {
            return Err(Error::InvariantViolation(format!(
                "{} relative projectives but {} simples",
                projectives.len(),
                simples.len()
            )));
        }
        Ok(WideSubcategory {
            roots,
            simples,
            projectives,
        })
    }

    pub fn module_category(&self) -> WideSubcategory {
        self.wide(self.full()).expect("mod-Λ is wide")
    }

    /// The unique hom-orthogonal set of `rank` members that spans every
    /// member with nonnegative integer coefficients.
    ///
    /// Members are scanned by increasing height and kept when they are not
    /// already a nonnegative combination of those kept so far; the result is
    /// then checked against the defining properties.
    pub fn simples_of(&self, w: RootSet) -> Result<Vec<usize>> {
        let members: Vec<usize> = w.to_vec();
        let rank = linalg::rank(&members.iter().map(|&a| self.root(a).clone()).collect::<Vec<_>>());
        let mut simples: Vec<usize> = Vec::new();
        let mut basis: Vec<Vec<i64>> = Vec::new();
        for &a in &members {
            if !linalg::nonneg_integer_combination(&basis, self.root(a)) {
                simples.push(a);
                basis.push(self.root(a).clone());
            }
        }
        let fail = |why: &str| Err(Error::InvariantViolation(format!("{w:?} is not wide: {why}")));
        if simples.len() != rank {
            return fail("spanning set has the wrong size");
        }
        for (i, &a) in simples.iter().enumerate() {
            for &b in &simples[i + 1..] {
                if self.hom(a, b) != 0 || self.hom(b, a) != 0 {
                    return fail("candidate simples are not hom-orthogonal");
                }
            }
        }
        Ok(simples)
    }

    /// Members `P` with `Ext¹(P, γ) = 0` for every member `γ`.
    pub fn projectives_of(&self, w: RootSet) -> Vec<usize> {
        self.projectives_in(w)
    }

    /// Root set of `perp(W, xs)` without validating the inputs.
    pub fn perp_roots(&self, w: RootSet, xs: &[ClusterObject]) -> RootSet {
        xs.iter().fold(w, |acc, &x| acc.intersection(&self.perp_mask(x)))
    }

    /// `{γ ∈ W : g(x) ∈ D(M_γ) for all x ∈ xs}`.
    pub fn perp(&self, w: &WideSubcategory, xs: &[ClusterObject]) -> Result<WideSubcategory> {
        self.check_partial_cluster(w.roots, xs)?;
        let out = self.wide(self.perp_roots(w.roots, xs))?;
        if out.rank() + xs.len() != w.rank() {
            return Err(Error::InvariantViolation("perpendicular category has the wrong rank".into()));
        }
        Ok(out)
    }

    /// Every element lies in the cluster category of `w`, no repeats, pairwise compatible.
    pub fn check_partial_cluster(&self, w: RootSet, xs: &[ClusterObject]) -> Result<()> {
        for (i, &x) in xs.iter().enumerate() {
            if !self.in_cluster_category(w, x) {
                return Err(Error::InvalidInput(format!(
                    "{} is not in the cluster category of the source",
                    self.name(x)
                )));
            }
            for &y in &xs[..i] {
                if x == y {
                    return Err(Error::InvalidInput(format!("{} repeated", self.name(x))));
                }
                if !self.compatible(x, y) {
                    return Err(Error::InvalidInput(format!(
                        "{} and {} are not compatible",
                        self.name(x),
                        self.name(y)
                    )));
                }
            }
        }
        Ok(())
    }

    /// All wide subcategories `T^⊥` over partial clusters `T`, ordered by rank
    /// and then by root list.
    pub fn all_wide_subcategories(&self) -> Result<Vec<WideSubcategory>> {
        let mut seen: HashSet<RootSet> = HashSet::new();
        let full = self.full();
        for cluster in self.all_clusters(full)? {
            let k = cluster.len();
            for mask in 0u32..(1 << k) {
                let sub: Vec<ClusterObject> = (0..k).filter(|i| mask >> i & 1 == 1).map(|i| cluster[i]).collect();
                seen.insert(self.perp_roots(full, &sub));
            }
        }
        let mut out: Vec<WideSubcategory> = seen.into_iter().map(|r| self.wide(r)).collect::<Result<_>>()?;
        out.sort_by_key(|w| (w.rank(), w.roots.to_vec()));
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ClusterObject::*;

    fn ids(a: &Algebra, roots: &[&[i64]]) -> RootSet {
        roots.iter().map(|r| a.root_id(r).unwrap()).collect()
    }

    #[test]
    fn perp_examples() {
        let a = Algebra::from_spec("A3: 1>2>3").unwrap();
        let m = a.module_category();
        let s3 = Module(a.root_id(&[0, 0, 1]).unwrap());
        let w1 = a.perp(&m, &[s3]).unwrap();
        assert_eq!(w1.roots, ids(&a, &[&[1, 0, 0], &[0, 1, 0], &[1, 1, 0]]));
        let i2 = Module(a.root_id(&[1, 1, 0]).unwrap());
        let w0 = a.perp(&w1, &[i2]).unwrap();
        assert_eq!(w0.roots, ids(&a, &[&[0, 1, 0]]));
        assert_eq!(w0.simples, w0.projectives);
        let s1 = Module(a.root_id(&[1, 0, 0]).unwrap());
        let p1 = Module(a.root_id(&[1, 1, 1]).unwrap());
        let zero = a.perp(&m, &[s1, s3, p1]).unwrap();
        assert!(zero.roots.is_empty());
        assert_eq!(zero.rank(), 0);
    }

    #[test]
    fn perp_rejects_bad_input() {
        let a = Algebra::from_spec("A2: 1>2").unwrap();
        let m = a.module_category();
        assert!(a.perp(&m, &[Module(0), Module(1)]).is_err());
        let w = a.perp(&m, &[Module(1)]).unwrap();
        assert!(a.perp(&w, &[Module(1)]).is_err());
    }

    #[test]
    fn simples_and_projectives() {
        let a = Algebra::from_spec("A3: 1<2<3").unwrap();
        let w = ids(&a, &[&[0, 1, 0], &[1, 1, 1]]);
        let mut s = a.simples_of(w).unwrap();
        s.sort_unstable();
        assert_eq!(s, w.to_vec());
        assert_eq!(a.projectives_of(w), w.to_vec());
        let m = a.module_category();
        assert_eq!(m.simples, vec![0, 1, 2]);
        let mut p: Vec<usize> = (0..3).map(|i| a.projective(i)).collect();
        p.sort_unstable();
        assert_eq!(m.projectives, p);
        assert!(a.wide(ids(&a, &[&[1, 0, 0], &[0, 1, 0]])).is_err());
    }

    #[test]
    fn wide_counts() {
        for (spec, count) in [("A1:", 2), ("A2: 1>2", 5), ("A3: 1<2<3", 14), ("A4: 1<2<3<4", 42)] {
            let a = Algebra::from_spec(spec).unwrap();
            assert_eq!(a.all_wide_subcategories().unwrap().len(), count, "{spec}");
        }
        let a = Algebra::from_spec("A3: 1<2<3").unwrap();
        let ranks: Vec<usize> = a.all_wide_subcategories().unwrap().iter().map(|w| w.rank()).collect();
        let hist: Vec<usize> = (0..4).map(|r| ranks.iter().filter(|&&x| x == r).count()).collect();
        assert_eq!(hist, vec![1, 6, 6, 1]);
    }
}
