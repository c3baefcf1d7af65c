//! The module category of a Dynkin quiver, indexed by positive roots.

use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quiver::{self, parse_quiver, Root, ValuedQuiver};
use crate::rootset::{RootSet, MAX_ROOTS};

/// A vertex of the cluster fan: an exceptional module or a shifted
/// projective `P[1]`. Both carry a root index; for `Shifted` it is the root
/// of `P`, which need only be projective relative to the ambient wide
/// subcategory.
///
/// The derived order (modules first, then by root index) is the canonical
/// order used for cube axes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ClusterObject {
    Module(usize),
    Shifted(usize),
}

impl ClusterObject {
    pub fn root_id(self) -> usize {
        match self {
            ClusterObject::Module(r) | ClusterObject::Shifted(r) => r,
        }
    }

    pub fn is_shifted(self) -> bool {
        matches!(self, ClusterObject::Shifted(_))
    }
}

/// Default prime for explicit representations.
pub const DEFAULT_FIELD_ORDER: u64 = 2;

/// Precomputed homological data for a valued Dynkin quiver.
///
/// Roots are indexed by their position in [`ValuedQuiver::positive_roots`].
pub struct Algebra {
    quiver: ValuedQuiver,
    roots: Vec<Root>,
    index: HashMap<Root, usize>,
    euler: Vec<Vec<i64>>,
    pair: Vec<Vec<i64>>,
    simples: Vec<usize>,
    projectives: Vec<usize>,
    injectives: Vec<usize>,
    module_perp: Vec<RootSet>,
    shifted_perp: Vec<RootSet>,
    ext_from: Vec<RootSet>,
    field_order: u64,
    pub(crate) submodules: Vec<OnceLock<Result<Vec<Root>>>>,
}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Algebra")
            .field("quiver", &self.quiver.to_string())
            .field("roots", &self.roots.len())
            .field("field_order", &self.field_order)
            .finish()
    }
}

impl Algebra {
    pub fn new(quiver: ValuedQuiver) -> Result<Self> {
        Self::with_field_order(quiver, DEFAULT_FIELD_ORDER)
    }

    pub fn from_spec(spec: &str) -> Result<Self> {
        Self::new(parse_quiver(spec)?)
    }

    pub fn with_field_order(quiver: ValuedQuiver, p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidInput(format!("field order {p} is not prime")));
        }
        let roots = quiver.positive_roots();
        if roots.len() > MAX_ROOTS {
            return Err(Error::Resource(format!(
                "{} positive roots exceeds the supported maximum of {MAX_ROOTS}",
                roots.len()
            )));
        }
        let n = quiver.n();
        let index: HashMap<Root, usize> = roots.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
        let euler = quiver.euler_form();
        let pair: Vec<Vec<i64>> = roots
            .iter()
            .map(|a| roots.iter().map(|b| quiver::pairing(&euler, a, b)).collect())
            .collect();
        let unit = |i: usize| -> Root {
            let mut e = vec![0; n];
            e[i] = 1;
            e
        };
        let simples: Vec<usize> = (0..n).map(|i| index[&unit(i)]).collect();
        let f = quiver.symmetrizers();
        let lookup = |v: Vec<crate::linalg::Q>, what: &str| -> Result<usize> {
            let r: Option<Root> = v
                .iter()
                .map(|x| x.is_integer().then(|| *x.numer() as i64))
                .collect();
            r.and_then(|r| index.get(&r).copied())
                .ok_or_else(|| Error::InvariantViolation(format!("{what} is not a positive root")))
        };
        let mut projectives = Vec::with_capacity(n);
        let mut injectives = Vec::with_capacity(n);
        let et: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| euler[j][i]).collect()).collect();
        for i in 0..n {
            let mut rhs = vec![0; n];
            rhs[i] = f[i];
            // ⟨P_i, -⟩ = f_i·(-)_i and ⟨-, I_i⟩ = f_i·(-)_i.
            let p = crate::linalg::solve(&et, &rhs).ok_or_else(|| Error::InvariantViolation("singular Euler form".into()))?;
            projectives.push(lookup(p, "projective")?);
            let q = crate::linalg::solve(&euler, &rhs).ok_or_else(|| Error::InvariantViolation("singular Euler form".into()))?;
            injectives.push(lookup(q, "injective")?);
        }
        let m = roots.len();
        let mut module_perp = vec![RootSet::empty(); m];
        let mut shifted_perp = vec![RootSet::empty(); m];
        let mut ext_from = vec![RootSet::empty(); m];
        for a in 0..m {
            for g in 0..m {
                let (h, e) = hom_ext(&pair, a, g);
                if h == 0 && e == 0 {
                    module_perp[a].insert(g);
                }
                if h == 0 {
                    shifted_perp[a].insert(g);
                }
                if e != 0 {
                    ext_from[a].insert(g);
                }
            }
        }
        Ok(Algebra {
            quiver,
            submodules: (0..m).map(|_| OnceLock::new()).collect(),
            roots,
            index,
            euler,
            pair,
            simples,
            projectives,
            injectives,
            module_perp,
            shifted_perp,
            ext_from,
            field_order: p,
        })
    }

    pub fn quiver(&self) -> &ValuedQuiver {
        &self.quiver
    }

    pub fn n(&self) -> usize {
        self.quiver.n()
    }

    pub fn field_order(&self) -> u64 {
        self.field_order
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn root(&self, id: usize) -> &Root {
        &self.roots[id]
    }

    pub fn root_id(&self, v: &[i64]) -> Result<usize> {
        self.index.get(v).copied().ok_or_else(|| Error::NotARoot(v.to_vec()))
    }

    pub fn euler_form(&self) -> &[Vec<i64>] {
        &self.euler
    }

    /// `⟨α,β⟩` on root indices.
    pub fn pairing(&self, a: usize, b: usize) -> i64 {
        self.pair[a][b]
    }

    /// `dim Hom(M_a, M_b)` via the Euler form and directedness.
    pub fn hom(&self, a: usize, b: usize) -> i64 {
        hom_ext(&self.pair, a, b).0
    }

    /// `dim Ext¹(M_a, M_b)`.
    pub fn ext(&self, a: usize, b: usize) -> i64 {
        hom_ext(&self.pair, a, b).1
    }

    pub fn hom_dim(&self, alpha: &[i64], beta: &[i64]) -> Result<i64> {
        Ok(self.hom(self.root_id(alpha)?, self.root_id(beta)?))
    }

    pub fn ext_dim(&self, alpha: &[i64], beta: &[i64]) -> Result<i64> {
        Ok(self.ext(self.root_id(alpha)?, self.root_id(beta)?))
    }

    pub fn simple(&self, vertex: usize) -> usize {
        self.simples[vertex]
    }

    pub fn projective(&self, vertex: usize) -> usize {
        self.projectives[vertex]
    }

    pub fn injective(&self, vertex: usize) -> usize {
        self.injectives[vertex]
    }

    /// Roots of the whole module category.
    pub fn full(&self) -> RootSet {
        RootSet::full(self.roots.len())
    }

    /// g-vector in the basis of indecomposable projectives; `g(P_i) = e_i`
    /// and `g(M)·(D·dim N) = ⟨M,N⟩` with `D = diag(f)`.
    pub fn g_vector(&self, x: ClusterObject) -> Root {
        let f = self.quiver.symmetrizers();
        let r = &self.roots[x.root_id()];
        let n = self.n();
        let g: Root = (0..n)
            .map(|j| (0..n).map(|i| self.euler[i][j] * r[i]).sum::<i64>() / f[j])
            .collect();
        match x {
            ClusterObject::Module(_) => g,
            ClusterObject::Shifted(_) => g.into_iter().map(|v| -v).collect(),
        }
    }

    /// Normal vector of the wall `D(M_a)`, i.e. `D·dim M_a`.
    pub fn wall_normal(&self, a: usize) -> Root {
        let f = self.quiver.symmetrizers();
        self.roots[a].iter().zip(f).map(|(x, f)| x * f).collect()
    }

    /// Root for modules, minus the root for shifted projectives.
    pub fn signed_dim(&self, x: ClusterObject) -> Root {
        match x {
            ClusterObject::Module(a) => self.roots[a].clone(),
            ClusterObject::Shifted(a) => self.roots[a].iter().map(|v| -v).collect(),
        }
    }

    pub fn compatible(&self, x: ClusterObject, y: ClusterObject) -> bool {
        use ClusterObject::*;
        match (x, y) {
            (Module(a), Module(b)) => self.ext(a, b) == 0 && self.ext(b, a) == 0,
            (Shifted(p), Module(b)) | (Module(b), Shifted(p)) => self.hom(p, b) == 0,
            (Shifted(_), Shifted(_)) => true,
        }
    }

    /// Roots `γ` with `x` in the domain of `M_γ`: `Hom = 0 = Ext¹` for a
    /// module, `Hom(P, -) = 0` for `P[1]`.
    pub fn perp_mask(&self, x: ClusterObject) -> RootSet {
        match x {
            ClusterObject::Module(a) => self.module_perp[a],
            ClusterObject::Shifted(a) => self.shifted_perp[a],
        }
    }

    /// Roots `γ` with `Ext¹(M_a, M_γ) ≠ 0`.
    pub fn ext_from(&self, a: usize) -> RootSet {
        self.ext_from[a]
    }

    /// Members of `w` that are projective inside `w`.
    pub fn projectives_in(&self, w: RootSet) -> Vec<usize> {
        w.iter().filter(|&p| w.is_disjoint(&self.ext_from[p])).collect()
    }

    /// Objects of the cluster category of `w`, in canonical order.
    pub fn cluster_objects(&self, w: RootSet) -> Vec<ClusterObject> {
        let mut out: Vec<ClusterObject> = w.iter().map(ClusterObject::Module).collect();
        out.extend(self.projectives_in(w).into_iter().map(ClusterObject::Shifted));
        out
    }

    pub fn in_cluster_category(&self, w: RootSet, x: ClusterObject) -> bool {
        match x {
            ClusterObject::Module(a) => w.contains(a),
            ClusterObject::Shifted(p) => w.contains(p) && w.is_disjoint(&self.ext_from[p]),
        }
    }

    /// Display name of a root: `S_i`, `P_i`, `I_i` when it is one, else `M(…)`.
    pub fn root_name(&self, a: usize) -> String {
        if let Some(i) = self.simples.iter().position(|&s| s == a) {
            return format!("S{}", i + 1);
        }
        if let Some(i) = self.projectives.iter().position(|&s| s == a) {
            return format!("P{}", i + 1);
        }
        if let Some(i) = self.injectives.iter().position(|&s| s == a) {
            return format!("I{}", i + 1);
        }
        let coords: Vec<String> = self.roots[a].iter().map(|x| x.to_string()).collect();
        format!("M({})", coords.join(","))
    }

    pub fn name(&self, x: ClusterObject) -> String {
        match x {
            ClusterObject::Module(a) => self.root_name(a),
            ClusterObject::Shifted(a) => format!("{}[1]", self.root_name(a)),
        }
    }

    /// Parse a list such as `S2[1], M(1,1,0); P3`, split at commas and
    /// semicolons outside brackets.
    pub fn parse_objects(&self, text: &str) -> Result<Vec<ClusterObject>> {
        let mut out = Vec::new();
        let mut depth = 0i32;
        let mut start = 0;
        for (i, c) in text.char_indices() {
            match c {
                '(' | '[' => depth += 1,
                ')' | ']' => depth -= 1,
                ',' | ';' if depth == 0 => {
                    out.push(&text[start..i]);
                    start = i + 1;
                }
                _ => {}
            }
        }
        out.push(&text[start..]);
        out.into_iter().filter(|t| !t.trim().is_empty()).map(|t| self.parse_object(t)).collect()
    }

    /// Parse `S2`, `P1`, `I2`, `M(1,1,0)`, `[1,1,0]` optionally followed by
    /// `[1]` or preceded by `-` for the shifted object.
    pub fn parse_object(&self, text: &str) -> Result<ClusterObject> {
        let mut t = text.trim();
        let mut shifted = false;
        if let Some(rest) = t.strip_prefix('-').or_else(|| t.strip_prefix('−')) {
            shifted = true;
            t = rest.trim();
        }
        if let Some(rest) = t.strip_suffix("[1]") {
            if shifted {
                return Err(Error::Parse(format!("double shift in {text:?}")));
            }
            shifted = true;
            t = rest.trim();
        }
        let bad = || Error::Parse(format!("cannot read object {text:?}"));
        let id = if let Some(inner) = t
            .strip_prefix("M(")
            .and_then(|s| s.strip_suffix(')'))
            .or_else(|| t.strip_prefix('[').and_then(|s| s.strip_suffix(']')))
            .or_else(|| t.strip_prefix('(').and_then(|s| s.strip_suffix(')')))
        {
            let v: Root = inner
                .split(',')
                .map(|x| x.trim().parse::<i64>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| bad())?;
            if v.len() != self.n() {
                return Err(Error::Parse(format!("{text:?} has the wrong length")));
            }
            self.root_id(&v)?
        } else {
            let mut chars = t.chars();
            let kind = chars.next().ok_or_else(bad)?;
            let i: usize = chars.as_str().parse().map_err(|_| bad())?;
            if i == 0 || i > self.n() {
                return Err(Error::Parse(format!("vertex out of range in {text:?}")));
            }
            match kind {
                'S' => self.simples[i - 1],
                'P' => self.projectives[i - 1],
                'I' => self.injectives[i - 1],
                _ => return Err(bad()),
            }
        };
        Ok(if shifted {
            ClusterObject::Shifted(id)
        } else {
            ClusterObject::Module(id)
        })
    }
}

fn hom_ext(pair: &[Vec<i64>], a: usize, b: usize) -> (i64, i64) {
    let p = pair[a][b];
    if a == b {
        (p, 0)
    } else {
        (p.max(0), (-p).max(0))
    }
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use ClusterObject::*;

    fn a3() -> Algebra {
        Algebra::from_spec("A3: 1<2<3").unwrap()
    }

    #[test]
    fn projectives_injectives_and_names() {
        let a = a3();
        let ids = |v: &[&[i64]]| -> Vec<usize> { v.iter().map(|r| a.root_id(r).unwrap()).collect() };
        assert_eq!(a.projectives, ids(&[&[1, 0, 0], &[1, 1, 0], &[1, 1, 1]]));
        assert_eq!(a.injectives, ids(&[&[1, 1, 1], &[0, 1, 1], &[0, 0, 1]]));
        let names: Vec<String> = (0..6).map(|i| a.root_name(i)).collect();
        assert_eq!(names, ["S1", "S2", "S3", "P2", "I2", "P3"]);
        let b = Algebra::from_spec("A3: 1>2>3").unwrap();
        let names: Vec<String> = (0..6).map(|i| b.root_name(i)).collect();
        assert_eq!(names, ["S1", "S2", "S3", "I2", "P2", "P1"]);
    }

    #[test]
    fn hom_ext_examples() {
        let a = a3();
        assert_eq!(a.hom_dim(&[1, 1, 1], &[1, 0, 0]).unwrap(), 0);
        assert_eq!(a.ext_dim(&[1, 1, 1], &[1, 0, 0]).unwrap(), 0);
        assert_eq!(a.ext_dim(&[0, 1, 1], &[1, 0, 0]).unwrap(), 1);
        for r in 0..6 {
            assert_eq!(a.ext(r, r), 0);
        }
        let a2 = Algebra::from_spec("A2: 1>2").unwrap();
        assert_eq!(a2.ext_dim(&[1, 0], &[0, 1]).unwrap(), 1);
        assert_eq!(a2.hom_dim(&[0, 1], &[1, 0]).unwrap(), 0);
        assert!(matches!(a.hom_dim(&[1, 0, 1], &[1, 0, 0]), Err(Error::NotARoot(_))));
    }

    #[test]
    fn g_vectors() {
        let a = a3();
        let p3 = a.root_id(&[1, 1, 1]).unwrap();
        assert_eq!(a.g_vector(Module(p3)), vec![0, 0, 1]);
        for i in 0..3 {
            let mut e = vec![0; 3];
            e[i] = 1;
            assert_eq!(a.g_vector(Module(a.projective(i))), e);
            e[i] = -1;
            assert_eq!(a.g_vector(Shifted(a.projective(i))), e);
        }
        let b2 = Algebra::from_spec("B2: 1<(1,2)2").unwrap();
        for i in 0..2 {
            let mut e = vec![0; 2];
            e[i] = 1;
            assert_eq!(b2.g_vector(Module(b2.projective(i))), e);
        }
    }

    #[test]
    fn compatibility_examples() {
        let a = a3();
        let id = |v: &[i64]| a.root_id(v).unwrap();
        assert!(a.compatible(Module(id(&[1, 0, 0])), Module(id(&[1, 1, 0]))));
        assert!(a.compatible(Shifted(a.projective(0)), Shifted(a.projective(1))));
        let a2 = Algebra::from_spec("A2: 1>2").unwrap();
        assert!(!a2.compatible(Module(0), Module(1)));
    }

    #[test]
    fn parse_objects() {
        let a = Algebra::from_spec("A3: 1>2>3").unwrap();
        let i2 = a.root_id(&[1, 1, 0]).unwrap();
        assert_eq!(a.parse_object("I2").unwrap(), Module(i2));
        assert_eq!(a.parse_object("M(1,1,0)").unwrap(), Module(i2));
        assert_eq!(a.parse_object("-P2").unwrap(), Shifted(a.projective(1)));
        assert_eq!(a.parse_object("P2[1]").unwrap(), Shifted(a.projective(1)));
        assert_eq!(a.parse_object("S2[1]").unwrap(), Shifted(a.simple(1)));
        assert!(a.parse_object("X2").is_err());
        assert!(a.parse_object("S4").is_err());
        assert!(matches!(a.parse_object("M(1,0,1)"), Err(Error::NotARoot(_))));
        for x in a.cluster_objects(a.full()) {
            assert_eq!(a.parse_object(&a.name(x)).unwrap(), x);
        }
        let list = a.parse_objects("S2[1], M(1,1,0); P1").unwrap();
        assert_eq!(list, [Shifted(a.simple(1)), Module(i2), Module(a.projective(0))]);
        assert!(a.parse_objects(" ").unwrap().is_empty());
    }
}
