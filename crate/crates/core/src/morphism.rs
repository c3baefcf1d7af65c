//! The cluster morphism category, signed exceptional sequences and braid moves.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::algebra::{Algebra, ClusterObject};
use crate::error::{Error, Result};
use crate::linalg::IntLattice;
use crate::quiver::Root;
use crate::rootset::RootSet;

/// `[T] : source → T^⊥`, with the partial cluster stored sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ClusterMorphism {
    pub source: RootSet,
    pub objects: Vec<ClusterObject>,
    pub target: RootSet,
}

impl ClusterMorphism {
    pub fn rank(&self) -> usize {
        self.objects.len()
    }
}

/// Terms in display order: the first factor is the last entry.
pub type SignedSequence = Vec<ClusterObject>;

impl Algebra {
    pub fn morphism(&self, source: RootSet, mut objects: Vec<ClusterObject>) -> Result<ClusterMorphism> {
        self.check_partial_cluster(source, &objects)?;
        objects.sort();
        let target = self.perp_roots(source, &objects);
        Ok(ClusterMorphism {
            source,
            objects,
            target,
        })
    }

    pub fn identity(&self, source: RootSet) -> ClusterMorphism {
        ClusterMorphism {
            source,
            objects: Vec::new(),
            target: source,
        }
    }

    /// Whether `y ∈ C(W)` is the lift of `x ∈ C(T^⊥)` along `T`.
    pub fn is_lift(&self, w: RootSet, t: &[ClusterObject], lattice: &IntLattice, x: ClusterObject, y: ClusterObject) -> bool {
        if t.contains(&y) || !self.in_cluster_category(w, y) || !t.iter().all(|&s| self.compatible(s, y)) {
            return false;
        }
        let d: Root = self
            .signed_dim(y)
            .iter()
            .zip(self.signed_dim(x))
            .map(|(a, b)| a - b)
            .collect();
        if !lattice.contains(&d) {
            return false;
        }
        let inner = self.perp_roots(w, t);
        let mut ty = t.to_vec();
        ty.push(y);
        self.perp_roots(w, &ty) == self.perp_roots(inner, &[x])
    }

    fn dim_lattice(&self, t: &[ClusterObject]) -> IntLattice {
        let gens: Vec<Root> = t.iter().map(|&s| self.root(s.root_id()).clone()).collect();
        IntLattice::new(self.n(), &gens)
    }

    /// The unique `y ∈ C(W)` compatible with `T`, congruent to `x` modulo the
    /// dimension vectors of `T`, with `(T ⊕ y)^⊥ = x^⊥` inside `T^⊥`.
    pub fn lift(&self, w: RootSet, t: &[ClusterObject], x: ClusterObject) -> Result<ClusterObject> {
        let inner = self.perp_roots(w, t);
        if !self.in_cluster_category(inner, x) {
            return Err(Error::InvalidInput(format!(
                "{} is not in the cluster category of the target",
                self.name(x)
            )));
        }
        let lattice = self.dim_lattice(t);
        let found: Vec<ClusterObject> = self
            .cluster_objects(w)
            .into_iter()
            .filter(|&y| self.is_lift(w, t, &lattice, x, y))
            .collect();
        match found.as_slice() {
            [y] => Ok(*y),
            _ => Err(Error::InvariantViolation(format!(
                "lift of {} has {} candidates",
                self.name(x),
                found.len()
            ))),
        }
    }

    /// Inverse of [`lift`](Self::lift): the `x ∈ C(T^⊥)` lifting to `y`.
    pub fn descend(&self, w: RootSet, t: &[ClusterObject], y: ClusterObject) -> Result<ClusterObject> {
        let inner = self.perp_roots(w, t);
        let lattice = self.dim_lattice(t);
        let found: Vec<ClusterObject> = self
            .cluster_objects(inner)
            .into_iter()
            .filter(|&x| self.is_lift(w, t, &lattice, x, y))
            .collect();
        match found.as_slice() {
            [x] => Ok(*x),
            _ => Err(Error::InvariantViolation(format!(
                "{} descends to {} candidates",
                self.name(y),
                found.len()
            ))),
        }
    }

    /// `g ∘ f`.
    pub fn compose(&self, g: &ClusterMorphism, f: &ClusterMorphism) -> Result<ClusterMorphism> {
        if f.target != g.source {
            return Err(Error::InvalidInput("morphisms are not composable".into()));
        }
        let mut objects = f.objects.clone();
        for &s in &g.objects {
            objects.push(self.lift(f.source, &f.objects, s)?);
        }
        let out = self.morphism(f.source, objects)?;
        if out.target != g.target {
            return Err(Error::InvariantViolation("composite has the wrong target".into()));
        }
        Ok(out)
    }

    /// Factorization of `[T]` along the order `t_1, …, t_k`, in display order.
    pub fn factorization_along(&self, w: RootSet, order: &[ClusterObject]) -> Result<SignedSequence> {
        let mut out = Vec::with_capacity(order.len());
        for j in 0..order.len() {
            out.push(self.descend(w, &order[..j], order[j])?);
        }
        out.reverse();
        Ok(out)
    }

    /// One factorization into rank-one morphisms per ordering of `m`'s components.
    pub fn factorizations(&self, m: &ClusterMorphism) -> Result<Vec<SignedSequence>> {
        let k = m.rank();
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for perm in permutations(k) {
            let order: Vec<ClusterObject> = perm.iter().map(|&i| m.objects[i]).collect();
            let s = self.factorization_along(m.source, &order)?;
            if seen.insert(s.clone()) {
                out.push(s);
            }
        }
        let want: usize = (1..=k).product();
        if out.len() != want {
            return Err(Error::InvariantViolation(format!(
                "{} distinct factorizations, expected {want}",
                out.len()
            )));
        }
        Ok(out)
    }

    /// Wide subcategories reached while reading `seq` from its first factor,
    /// or an error naming the first illegal term.
    pub fn signed_sequence_perps(&self, w: RootSet, seq: &[ClusterObject]) -> Result<Vec<RootSet>> {
        let mut cur = w;
        let mut out = vec![cur];
        for &x in seq.iter().rev() {
            if !self.in_cluster_category(cur, x) {
                return Err(Error::InvalidInput(format!(
                    "{} is not an object of the cluster category at its position",
                    self.name(x)
                )));
            }
            cur = self.perp_roots(cur, &[x]);
            out.push(cur);
        }
        Ok(out)
    }

    pub fn is_signed_exceptional(&self, seq: &[ClusterObject]) -> bool {
        self.signed_sequence_perps(self.full(), seq).is_ok()
    }

    /// Every complete signed exceptional sequence, in display order.
    pub fn complete_signed_sequences(&self) -> Vec<SignedSequence> {
        fn go(a: &Algebra, w: RootSet, acc: &mut Vec<ClusterObject>, out: &mut Vec<SignedSequence>) {
            if w.is_empty() {
                let mut s = acc.clone();
                s.reverse();
                out.push(s);
                return;
            }
            for x in a.cluster_objects(w) {
                acc.push(x);
                go(a, a.perp_roots(w, &[x]), acc, out);
                acc.pop();
            }
        }
        let mut out = Vec::new();
        go(self, self.full(), &mut Vec::new(), &mut out);
        out
    }

    /// The ordered cluster `(t_1, …, t_n)` whose factorization in that order
    /// is `seq`.
    pub fn to_ordered_cluster(&self, seq: &[ClusterObject]) -> Result<Vec<ClusterObject>> {
        let full = self.full();
        let perps = self.signed_sequence_perps(full, seq)?;
        if !perps.last().unwrap().is_empty() {
            return Err(Error::InvalidInput("signed exceptional sequence is not complete".into()));
        }
        let mut t: Vec<ClusterObject> = Vec::new();
        for &x in seq.iter().rev() {
            let y = self.lift(full, &t, x)?;
            t.push(y);
        }
        Ok(t)
    }

    pub fn from_ordered_cluster(&self, objs: &[ClusterObject]) -> Result<SignedSequence> {
        let full = self.full();
        self.check_partial_cluster(full, objs)?;
        if objs.len() != self.n() {
            return Err(Error::InvalidInput("not a cluster: wrong number of objects".into()));
        }
        self.factorization_along(full, objs)
    }

    /// No backward Hom or Ext¹ between the terms (display order).
    pub fn is_exceptional(&self, seq: &[usize]) -> bool {
        let distinct: BTreeSet<usize> = seq.iter().copied().collect();
        distinct.len() == seq.len()
            && (0..seq.len()).all(|i| (i + 1..seq.len()).all(|j| self.perp_mask(ClusterObject::Module(seq[j])).contains(seq[i])))
    }

    /// All exceptional sequences of the given length, in display order.
    pub fn exceptional_sequences(&self, len: usize) -> Vec<Vec<usize>> {
        fn go(a: &Algebra, w: RootSet, len: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if acc.len() == len {
                let mut s = acc.clone();
                s.reverse();
                out.push(s);
                return;
            }
            for x in w.iter() {
                acc.push(x);
                go(a, a.perp_roots(w, &[ClusterObject::Module(x)]), len, acc, out);
                acc.pop();
            }
        }
        let mut out = Vec::new();
        go(self, self.full(), len, &mut Vec::new(), &mut out);
        out
    }

    /// Braid move at positions `(i, i+1)` (1-based `i`). The inverse move
    /// `σ_i⁻¹` sends `(E, F)` to `(F, X)` with `X ≡ ±E mod F`; `σ_i` sends
    /// `(E, F)` to `(Y, E)` with `Y ≡ ±F mod E`.
    pub fn braid_move(&self, seq: &[usize], i: usize, inverse: bool) -> Result<Vec<usize>> {
        if !self.is_exceptional(seq) {
            return Err(Error::InvalidInput("not an exceptional sequence".into()));
        }
        if i == 0 || i >= seq.len() {
            return Err(Error::InvalidInput(format!("braid position {i} out of range")));
        }
        let (e, f) = (seq[i - 1], seq[i]);
        let (kept, moved) = if inverse { (f, e) } else { (e, f) };
        let lattice = IntLattice::new(self.n(), &[self.root(kept).clone()]);
        let pair_perp = |a: usize, b: usize| {
            self.perp_mask(ClusterObject::Module(a)).intersection(&self.perp_mask(ClusterObject::Module(b)))
        };
        let old_perp = pair_perp(e, f);
        let mut found = Vec::new();
        for z in 0..self.num_roots() {
            let d: Root = self.root(z).iter().zip(self.root(moved)).map(|(a, b)| a - b).collect();
            let e: Root = self.root(z).iter().zip(self.root(moved)).map(|(a, b)| a + b).collect();
            if !lattice.contains(&d) && !lattice.contains(&e) {
                continue;
            }
            let mut s = seq.to_vec();
            if inverse {
                s[i - 1] = kept;
                s[i] = z;
            } else {
                s[i - 1] = z;
                s[i] = kept;
            }
            if self.is_exceptional(&s) && pair_perp(s[i - 1], s[i]) == old_perp {
                found.push(s);
            }
        }
        match found.len() {
            1 => Ok(found.pop().unwrap()),
            k => Err(Error::InvariantViolation(format!("braid move has {k} candidates"))),
        }
    }

    /// Extend an exceptional sequence on the left to a complete one, taking
    /// the smallest root of the current perpendicular category each time.
    pub fn complete_on_left(&self, seq: &[usize]) -> Result<Vec<usize>> {
        if !self.is_exceptional(seq) {
            return Err(Error::InvalidInput("not an exceptional sequence".into()));
        }
        let objs: Vec<ClusterObject> = seq.iter().map(|&a| ClusterObject::Module(a)).collect();
        let mut w = self.perp_roots(self.full(), &objs);
        let mut out = seq.to_vec();
        loop {
            let Some(x) = w.iter().next() else { break };
            out.insert(0, x);
            w = self.perp_roots(w, &[ClusterObject::Module(x)]);
        }
        if out.len() != self.n() {
            return Err(Error::InvariantViolation("completion has the wrong length".into()));
        }
        Ok(out)
    }
}

pub(crate) fn permutations(k: usize) -> Vec<Vec<usize>> {
    fn go(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                go(cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; k], &mut out);
    out
}
