//! Clusters, the g-vector fan and brick labels of its walls.

use std::collections::{HashMap, VecDeque};

use num_rational::Ratio;
use num_traits::Signed;
use serde::Serialize;

use crate::algebra::{Algebra, ClusterObject};
use crate::error::{Error, Result};
use crate::linalg::{self, dot};
use crate::quiver::Root;
use crate::rootset::RootSet;

/// A maximal compatible set, sorted canonically.
pub type Cluster = Vec<ClusterObject>;

/// A codimension-one cone shared by two chambers, labelled by the brick
/// whose domain contains it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Facet {
    pub shared: Vec<ClusterObject>,
    /// Chamber on the side where `g·dim M < 0`.
    pub negative: usize,
    /// Chamber on the side where `g·dim M > 0`.
    pub positive: usize,
    pub label: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Fan {
    pub clusters: Vec<Cluster>,
    pub rays: Vec<(ClusterObject, Root)>,
    pub facets: Vec<Facet>,
}

impl Fan {
    /// Interior point of a chamber: the sum of its g-vectors.
    pub fn chamber_point(&self, algebra: &Algebra, c: usize) -> Root {
        sum_g(algebra, &self.clusters[c])
    }
}

fn sum_g(a: &Algebra, xs: &[ClusterObject]) -> Root {
    let mut g = vec![0; a.n()];
    for &x in xs {
        for (s, v) in g.iter_mut().zip(a.g_vector(x)) {
            *s += v;
        }
    }
    g
}

impl Algebra {
    /// The unique object replacing `cluster[i]`.
    pub fn mutate(&self, w: RootSet, cluster: &[ClusterObject], i: usize) -> Result<ClusterObject> {
        let rest: Vec<ClusterObject> = cluster.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &x)| x).collect();
        let cands: Vec<ClusterObject> = self
            .cluster_objects(w)
            .into_iter()
            .filter(|&y| !cluster.contains(&y) && rest.iter().all(|&r| self.compatible(r, y)))
            .collect();
        match cands.as_slice() {
            [y] => Ok(*y),
            _ => Err(Error::InvariantViolation(format!(
                "mutation of {} has {} candidates",
                self.name(cluster[i]),
                cands.len()
            ))),
        }
    }

    /// All clusters of `w` by a breadth-first mutation walk from the cluster
    /// of shifted projectives, together with the exchange edges
    /// `(cluster, position, neighbour)`.
    pub fn clusters_with_exchange(&self, w: RootSet) -> Result<(Vec<Cluster>, Vec<(usize, usize, usize)>)> {
        let mut start: Cluster = self.projectives_in(w).into_iter().map(ClusterObject::Shifted).collect();
        start.sort();
        let mut index: HashMap<Cluster, usize> = HashMap::new();
        let mut clusters = vec![start.clone()];
        index.insert(start, 0);
        let mut edges = Vec::new();
        let mut queue = VecDeque::from([0usize]);
        while let Some(c) = queue.pop_front() {
            let cl = clusters[c].clone();
            for i in 0..cl.len() {
                let y = self.mutate(w, &cl, i)?;
                let mut next = cl.clone();
                next[i] = y;
                next.sort();
                let id = match index.get(&next) {
                    Some(&id) => id,
                    None => {
                        let id = clusters.len();
                        clusters.push(next.clone());
                        index.insert(next, id);
                        queue.push_back(id);
                        id
                    }
                };
                edges.push((c, i, id));
            }
        }
        Ok((clusters, edges))
    }

    pub fn all_clusters(&self, w: RootSet) -> Result<Vec<Cluster>> {
        Ok(self.clusters_with_exchange(w)?.0)
    }

    /// The cluster fan of the whole module category.
    pub fn build_fan(&self) -> Result<Fan> {
        let full = self.full();
        let (clusters, edges) = self.clusters_with_exchange(full)?;
        let n = self.n();
        for c in &clusters {
            let g: Vec<Root> = c.iter().map(|&x| self.g_vector(x)).collect();
            if linalg::determinant(&g).abs() != 1 {
                return Err(Error::InvariantViolation("cluster g-vectors are not a ℤ-basis".into()));
            }
        }
        let mut rays: Vec<(ClusterObject, Root)> = self
            .cluster_objects(full)
            .into_iter()
            .filter(|x| clusters.iter().any(|c| c.contains(x)))
            .map(|x| (x, self.g_vector(x)))
            .collect();
        rays.sort();
        let mut facets = Vec::new();
        for &(c, i, d) in &edges {
            if d < c {
                continue;
            }
            let shared: Vec<ClusterObject> =
                clusters[c].iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &x)| x).collect();
            debug_assert_eq!(shared.len(), n - 1);
            let label = self.facet_label(&shared)?;
            let normal = self.wall_normal(label);
            let sc = dot(&sum_g(self, &clusters[c]), &normal).signum();
            let sd = dot(&sum_g(self, &clusters[d]), &normal).signum();
            let (negative, positive) = match (sc, sd) {
                (-1, 1) => (c, d),
                (1, -1) => (d, c),
                _ => {
                    return Err(Error::InvariantViolation(
                        "adjacent chambers on the same side of their wall".into(),
                    ))
                }
            };
            facets.push(Facet {
                shared,
                negative,
                positive,
                label,
            });
        }
        Ok(Fan {
            clusters,
            rays,
            facets,
        })
    }

    /// Brick labelling the cone spanned by `shared` (n−1 compatible objects):
    /// the single root of `shared^⊥`. For simply-laced quivers this is
    /// cross-checked against the semi-invariant domains.
    pub fn facet_label(&self, shared: &[ClusterObject]) -> Result<usize> {
        let perp = self.perp_roots(self.full(), shared);
        let [label] = perp.to_vec()[..] else {
            return Err(Error::InvariantViolation(format!(
                "facet perpendicular category has {} roots",
                perp.len()
            )));
        };
        if self.quiver().is_simply_laced() {
            let g = sum_g(self, shared);
            let mut hits = Vec::new();
            for b in 0..self.num_roots() {
                if dot(&g, self.root(b)) == 0 && self.domain(self.root(b))?.contains(&g) {
                    hits.push(b);
                }
            }
            if hits != [label] {
                return Err(Error::InvariantViolation(format!(
                    "facet lies in {} domains, expected exactly one",
                    hits.len()
                )));
            }
        }
        Ok(label)
    }

    /// `{γ : g ∈ D(M_γ)}` for a rational point `g`.
    pub fn wide_at_point(&self, g: &[Ratio<i64>]) -> Result<RootSet> {
        if g.len() != self.n() {
            return Err(Error::InvalidInput(format!("point needs {} coordinates", self.n())));
        }
        let den = g.iter().fold(1i64, |l, x| num_integer::lcm(l, *x.denom()));
        let gi: Root = g.iter().map(|x| (x * den).to_integer()).collect();
        let mut out = RootSet::empty();
        for b in 0..self.num_roots() {
            if dot(&gi, self.root(b)) == 0 && self.domain(self.root(b))?.contains(&gi) {
                out.insert(b);
            }
        }
        self.wide(out)?;
        Ok(out)
    }

    /// Chambers whose closed cone contains the integer point `g`.
    pub fn chambers_containing(&self, fan: &Fan, g: &[i64]) -> Vec<usize> {
        (0..fan.clusters.len())
            .filter(|&c| {
                let basis: Vec<Root> = fan.clusters[c].iter().map(|&x| self.g_vector(x)).collect();
                linalg::express(&basis, g).is_some_and(|co| co.iter().all(|x| !x.is_negative()))
            })
            .collect()
    }
}
