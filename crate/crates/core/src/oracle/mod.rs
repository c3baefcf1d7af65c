//! Explicit-representation oracle and semi-invariant domains.

pub mod field;
pub mod representation;

use std::collections::BTreeSet;

use serde::Serialize;

pub use representation::Representation;

use crate::algebra::{Algebra, ClusterObject};
use crate::error::{Error, Result};
use crate::linalg::dot;
use crate::quiver::Root;

/// Largest vertex dimension for which subspaces are enumerated.
pub const MAX_VERTEX_DIM: usize = 6;

/// `D(M) = {g : g·m = 0, g·m' ≤ 0 for every submodule m' ⊂ M}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SemiInvariantDomain {
    pub brick: Root,
    /// Dimension vectors of the nonzero submodules, `brick` included.
    pub normals: Vec<Root>,
}

impl SemiInvariantDomain {
    pub fn contains(&self, g: &[i64]) -> bool {
        dot(g, &self.brick) == 0 && self.normals.iter().all(|m| dot(g, m) <= 0)
    }
}

impl Algebra {
    fn require_simply_laced(&self, what: &str) -> Result<()> {
        if self.quiver().is_simply_laced() {
            Ok(())
        } else {
            Err(Error::Unsupported(format!("{what} needs a simply-laced quiver")))
        }
    }

    /// Indecomposable representation of dimension `alpha` over 𝔽_p.
    pub fn build_representation(&self, alpha: &[i64], p: u64) -> Result<Representation> {
        self.require_simply_laced("explicit representations")?;
        self.root_id(alpha)?;
        let arrows: Vec<(usize, usize)> = self.quiver().arrows().iter().map(|a| (a.source, a.target)).collect();
        representation::build(&arrows, alpha, p)
    }

    /// Submodule dimension vectors of `M_α` (0 and α included), computed over
    /// the algebra's field order.
    pub fn submodule_dims(&self, alpha: &[i64]) -> Result<Vec<Root>> {
        self.require_simply_laced("submodule enumeration")?;
        let id = self.root_id(alpha)?;
        self.submodules[id]
            .get_or_init(|| {
                let rep = self.build_representation(alpha, self.field_order())?;
                let set = rep.submodule_dims(self.quiver().topological_order(), MAX_VERTEX_DIM)?;
                let mut v: Vec<Root> = set.into_iter().collect();
                crate::quiver::sort_roots(&mut v);
                Ok(v)
            })
            .clone()
    }

    /// Same as [`submodule_dims`](Self::submodule_dims) at an explicit prime.
    pub fn submodule_dims_over(&self, alpha: &[i64], p: u64) -> Result<BTreeSet<Root>> {
        let rep = self.build_representation(alpha, p)?;
        rep.submodule_dims(self.quiver().topological_order(), MAX_VERTEX_DIM)
    }

    /// `{α − s : s a submodule dimension}`.
    pub fn quotient_dims(&self, alpha: &[i64]) -> Result<Vec<Root>> {
        let subs = self.submodule_dims(alpha)?;
        let mut q: Vec<Root> = subs
            .iter()
            .map(|s| alpha.iter().zip(s).map(|(a, b)| a - b).collect())
            .collect();
        crate::quiver::sort_roots(&mut q);
        Ok(q)
    }

    pub fn domain(&self, alpha: &[i64]) -> Result<SemiInvariantDomain> {
        let normals = self
            .submodule_dims(alpha)?
            .into_iter()
            .filter(|s| s.iter().any(|&x| x != 0))
            .collect();
        Ok(SemiInvariantDomain {
            brick: alpha.to_vec(),
            normals,
        })
    }

    /// Whether `g(x)` lies in `D(M_a)`, decided from Hom/Ext alone.
    pub fn in_domain_via_hom(&self, x: ClusterObject, a: usize) -> bool {
        self.perp_mask(x).contains(a)
    }

    /// Hom/Ext dimensions of explicit representations of two roots over 𝔽_p.
    pub fn oracle_hom_ext(&self, alpha: &[i64], beta: &[i64], p: u64) -> Result<(usize, usize)> {
        let x = self.build_representation(alpha, p)?;
        let m = self.build_representation(beta, p)?;
        Ok(x.hom_ext(&m))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p3_domain_inequalities() {
        let a = Algebra::from_spec("A3: 1<2<3").unwrap();
        let d = a.domain(&[1, 1, 1]).unwrap();
        assert_eq!(d.normals, vec![vec![1, 0, 0], vec![1, 1, 0], vec![1, 1, 1]]);
        let p3 = a.root_id(&[1, 1, 1]).unwrap();
        assert!(!d.contains(&a.g_vector(ClusterObject::Module(p3))));
    }

    #[test]
    fn quotients_mirror_submodules() {
        let a = Algebra::from_spec("A2: 1>2").unwrap();
        assert_eq!(a.submodule_dims(&[1, 1]).unwrap(), vec![vec![0, 0], vec![0, 1], vec![1, 1]]);
        assert_eq!(a.quotient_dims(&[1, 1]).unwrap(), vec![vec![0, 0], vec![1, 0], vec![1, 1]]);
    }

    #[test]
    fn valued_is_unsupported() {
        let a = Algebra::from_spec("B2: 1<(1,2)2").unwrap();
        assert!(matches!(a.build_representation(&[1, 1], 2), Err(Error::Unsupported(_))));
        assert!(matches!(a.domain(&[1, 1]), Err(Error::Unsupported(_))));
    }

    #[test]
    fn in_domain_examples() {
        let a = Algebra::from_spec("A3: 1<2<3").unwrap();
        let s1 = a.root_id(&[1, 0, 0]).unwrap();
        let i2 = a.root_id(&[0, 1, 1]).unwrap();
        let s2 = a.root_id(&[0, 1, 0]).unwrap();
        assert!(a.in_domain_via_hom(ClusterObject::Shifted(a.projective(0)), i2));
        assert!(!a.in_domain_via_hom(ClusterObject::Module(s2), s1));
    }
}
