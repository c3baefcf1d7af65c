//! Torsion classes of chambers and the brick-labelled Hasse diagram.

use num_rational::Ratio;
use serde::Serialize;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::fan::Fan;
use crate::linalg::dot;
use crate::quiver::Root;
use crate::rootset::RootSet;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TorsionClass {
    /// Indecomposable members, by root index.
    pub roots: RootSet,
    pub chamber: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HasseEdge {
    pub from: usize,
    pub to: usize,
    pub label: usize,
}

/// One node per chamber of the fan, in chamber order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TorsionHasse {
    pub classes: Vec<TorsionClass>,
    pub edges: Vec<HasseEdge>,
}

fn integral(g: &[Ratio<i64>]) -> Root {
    let den = g.iter().fold(1i64, |l, x| num_integer::lcm(l, *x.denom()));
    g.iter().map(|x| (x * den).to_integer()).collect()
}

impl Algebra {
    /// Modules all of whose nonzero quotients pair positively with `g`.
    pub fn torsion_class_of_point(&self, g: &[Ratio<i64>]) -> Result<TorsionClass> {
        if g.len() != self.n() {
            return Err(Error::InvalidInput(format!("point needs {} coordinates", self.n())));
        }
        let gi = integral(g);
        Ok(TorsionClass {
            roots: self.torsion_roots(&gi)?,
            chamber: None,
        })
    }

    fn torsion_roots(&self, g: &[i64]) -> Result<RootSet> {
        let mut out = RootSet::empty();
        for a in 0..self.num_roots() {
            let alpha = self.root(a);
            if self.domain(alpha)?.contains(g) {
                return Err(Error::AmbiguousPoint(format!("point lies on the wall of {}", self.root_name(a))));
            }
            let qs = self.quotient_dims(alpha)?;
            if qs.iter().filter(|q| q.iter().any(|&x| x != 0)).all(|q| dot(g, q) > 0) {
                out.insert(a);
            }
        }
        Ok(out)
    }

    /// Smallest torsion class containing `roots`, as `⊥(roots^⊥)` with
    /// Hom computed from the Euler form.
    pub fn torsion_closure(&self, roots: RootSet) -> RootSet {
        let m = self.num_roots();
        let free: Vec<usize> = (0..m).filter(|&y| roots.iter().all(|x| self.hom(x, y) == 0)).collect();
        (0..m).filter(|&x| free.iter().all(|&y| self.hom(x, y) == 0)).collect()
    }

    pub fn torsion_hasse(&self) -> Result<TorsionHasse> {
        let fan = self.build_fan()?;
        self.torsion_hasse_of(&fan)
    }

    pub fn torsion_hasse_of(&self, fan: &Fan) -> Result<TorsionHasse> {
        let mut classes = Vec::with_capacity(fan.clusters.len());
        for c in 0..fan.clusters.len() {
            classes.push(TorsionClass {
                roots: self.torsion_roots(&fan.chamber_point(self, c))?,
                chamber: Some(c),
            });
        }
        let mut edges = Vec::with_capacity(fan.facets.len());
        for f in &fan.facets {
            let (lo, hi) = (classes[f.negative].roots, classes[f.positive].roots);
            if !(lo.is_subset(&hi) && lo != hi) {
                return Err(Error::InvariantViolation(format!(
                    "wall of {} does not increase the torsion class",
                    self.root_name(f.label)
                )));
            }
            edges.push(HasseEdge {
                from: f.negative,
                to: f.positive,
                label: f.label,
            });
        }
        edges.sort_by_key(|e| (e.from, e.to));
        Ok(TorsionHasse { classes, edges })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: &[i64]) -> Vec<Ratio<i64>> {
        v.iter().map(|&x| Ratio::from_integer(x)).collect()
    }

    fn names(a: &Algebra, s: RootSet) -> Vec<String> {
        s.iter().map(|r| a.root_name(r)).collect()
    }

    #[test]
    fn a2_points() {
        let a = Algebra::from_spec("A2: 1>2").unwrap();
        let t = a.torsion_class_of_point(&q(&[2, -1])).unwrap();
        assert_eq!(names(&a, t.roots), ["S1", "P1"]);
        assert_eq!(a.torsion_class_of_point(&q(&[1, 1])).unwrap().roots, a.full());
        assert!(a.torsion_class_of_point(&q(&[-1, -3])).unwrap().roots.is_empty());
        let err = a.torsion_class_of_point(&q(&[1, 0])).unwrap_err();
        assert_eq!(err.kind(), "ambiguous_point");
    }

    #[test]
    fn a1_hasse() {
        let a = Algebra::from_spec("A1:").unwrap();
        let h = a.torsion_hasse().unwrap();
        assert_eq!(h.classes.len(), 2);
        assert_eq!(h.edges.len(), 1);
        assert_eq!(h.edges[0].label, 0);
    }

    #[test]
    fn closure_is_idempotent() {
        let a = Algebra::from_spec("A3: 1>2>3").unwrap();
        for c in a.torsion_hasse().unwrap().classes {
            assert_eq!(a.torsion_closure(c.roots), c.roots);
        }
    }
}
