//! Valued Dynkin quivers, their root systems and Euler forms.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::linalg;

/// An arrow `source → target` with valuation `(a_st, a_ts)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub source: usize,
    pub target: usize,
    pub valuation: (i64, i64),
}

/// A connected component of the underlying valued graph together with its
/// Dynkin type, e.g. `("B", 2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub vertices: Vec<usize>,
    pub family: char,
    pub rank: usize,
}

impl Component {
    pub fn name(&self) -> String {
        format!("{}{}", self.family, self.rank)
    }
}

/// A validated valued quiver of finite (Dynkin) type. Vertices are 0-based
/// internally and printed 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValuedQuiver {
    n: usize,
    arrows: Vec<Arrow>,
    symmetrizers: Vec<i64>,
    components: Vec<Component>,
    topo_order: Vec<usize>,
}

pub type Root = Vec<i64>;

impl ValuedQuiver {
    /// Validate arrows on `n` vertices and derive symmetrizers and types.
    pub fn new(n: usize, arrows: Vec<Arrow>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Parse("quiver needs at least one vertex".into()));
        }
        for a in &arrows {
            if a.source >= n || a.target >= n {
                return Err(Error::Parse(format!(
                    "arrow {}>{} references a vertex outside 1..={n}",
                    a.source + 1,
                    a.target + 1
                )));
            }
            if a.source == a.target {
                return Err(Error::CyclicQuiver);
            }
            if a.valuation.0 <= 0 || a.valuation.1 <= 0 {
                return Err(Error::Parse("valuations must be positive".into()));
            }
        }
        let topo_order = topological_order(n, &arrows).ok_or(Error::CyclicQuiver)?;
        let valuation = valuation_matrix(n, &arrows);
        let symmetrizers = symmetrizers(n, &valuation)?;

        let mut q = ValuedQuiver {
            n,
            arrows,
            symmetrizers,
            components: Vec::new(),
            topo_order,
        };
        if !linalg::is_positive_definite(&q.symmetrized_form()) {
            return Err(Error::NotDynkin(
                "symmetrized Cartan matrix is not positive definite".into(),
            ));
        }
        q.components = q.classify();
        Ok(q)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn symmetrizers(&self) -> &[i64] {
        &self.symmetrizers
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    /// Vertices ordered so that every arrow goes from an earlier to a later vertex.
    pub fn topological_order(&self) -> &[usize] {
        &self.topo_order
    }

    pub fn is_simply_laced(&self) -> bool {
        self.arrows.iter().all(|a| a.valuation == (1, 1))
    }

    /// Dynkin type, e.g. `A3` or `A2xG2`.
    pub fn type_name(&self) -> String {
        let mut names: Vec<String> = self.components.iter().map(|c| c.name()).collect();
        names.sort();
        names.join("x")
    }

    /// `a_ij` for i ≠ j (0 if not adjacent).
    pub fn valuation_matrix(&self) -> Vec<Vec<i64>> {
        valuation_matrix(self.n, &self.arrows)
    }

    /// Cartan matrix `C` with `C_ii = 2` and `C_ij = -a_ij`.
    pub fn cartan(&self) -> Vec<Vec<i64>> {
        let a = self.valuation_matrix();
        (0..self.n)
            .map(|i| (0..self.n).map(|j| if i == j { 2 } else { -a[i][j] }).collect())
            .collect()
    }

    /// `E + Eᵀ`, equal to `D·C` with `D = diag(f)`.
    pub fn symmetrized_form(&self) -> Vec<Vec<i64>> {
        let c = self.cartan();
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.symmetrizers[i] * c[i][j]).collect())
            .collect()
    }

    /// Euler matrix with `⟨α,β⟩ = αᵀEβ`.
    pub fn euler_form(&self) -> Vec<Vec<i64>> {
        let mut e = vec![vec![0; self.n]; self.n];
        for i in 0..self.n {
            e[i][i] = self.symmetrizers[i];
        }
        for a in &self.arrows {
            e[a.source][a.target] -= self.symmetrizers[a.target] * a.valuation.1;
        }
        e
    }

    pub fn pairing(&self, alpha: &[i64], beta: &[i64]) -> i64 {
        pairing(&self.euler_form(), alpha, beta)
    }

    /// Simple reflection `s_i` on ℤⁿ.
    pub fn reflect(&self, i: usize, v: &[i64]) -> Root {
        let c = self.cartan();
        reflect_with(&c, i, v)
    }

    /// All positive roots, ordered by height and then by coordinates in
    /// decreasing lexicographic order (so `100, 010, 001, 110, 011, 111`).
    pub fn positive_roots(&self) -> Vec<Root> {
        let c = self.cartan();
        let mut seen: HashSet<Root> = HashSet::new();
        let mut queue = VecDeque::new();
        for i in 0..self.n {
            let mut e = vec![0; self.n];
            e[i] = 1;
            seen.insert(e.clone());
            queue.push_back(e);
        }
        while let Some(r) = queue.pop_front() {
            for i in 0..self.n {
                let s = reflect_with(&c, i, &r);
                if s.iter().all(|&x| x >= 0) && s.iter().any(|&x| x > 0) && seen.insert(s.clone()) {
                    queue.push_back(s);
                }
            }
        }
        let mut roots: Vec<Root> = seen.into_iter().collect();
        sort_roots(&mut roots);
        roots
    }

    /// Roots `aα + bβ` (a, b ≥ 0) sorted by increasing `a/b`, with `b = 0` last.
    pub fn rank2_roots(&self, alpha: &[i64], beta: &[i64]) -> Result<Vec<(Root, i64, i64)>> {
        rank2_roots_in(&self.positive_roots(), alpha, beta)
    }

    /// The same quiver with the arrows at `k` reversed.
    pub fn reflected_at(&self, k: usize) -> ValuedQuiver {
        let mut q = self.clone();
        for a in q.arrows.iter_mut() {
            if a.source == k || a.target == k {
                *a = Arrow {
                    source: a.target,
                    target: a.source,
                    valuation: (a.valuation.1, a.valuation.0),
                };
            }
        }
        q.topo_order = topological_order(q.n, &q.arrows).expect("reflection at a sink or source keeps acyclicity");
        q
    }

    pub fn is_sink(&self, k: usize) -> bool {
        self.arrows.iter().all(|a| a.source != k)
    }

    pub fn is_source(&self, k: usize) -> bool {
        self.arrows.iter().all(|a| a.target != k)
    }

    /// Every orientation of the same valued graph.
    pub fn all_orientations(&self) -> Vec<ValuedQuiver> {
        let m = self.arrows.len();
        (0..1u64 << m)
            .map(|mask| {
                let arrows = self
                    .arrows
                    .iter()
                    .enumerate()
                    .map(|(i, a)| {
                        if mask >> i & 1 == 1 {
                            Arrow {
                                source: a.target,
                                target: a.source,
                                valuation: (a.valuation.1, a.valuation.0),
                            }
                        } else {
                            *a
                        }
                    })
                    .collect();
                ValuedQuiver::new(self.n, arrows).expect("trees have no cycles")
            })
            .collect()
    }

    fn classify(&self) -> Vec<Component> {
        let a = self.valuation_matrix();
        let roots = self.positive_roots();
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut verts = vec![start];
            seen[start] = true;
            let mut k = 0;
            while k < verts.len() {
                let v = verts[k];
                for w in 0..self.n {
                    if a[v][w] != 0 && !seen[w] {
                        seen[w] = true;
                        verts.push(w);
                    }
                }
                k += 1;
            }
            verts.sort_unstable();
            let count = roots
                .iter()
                .filter(|r| r.iter().enumerate().any(|(i, &x)| x != 0 && verts.binary_search(&i).is_ok()))
                .count();
            let r = verts.len();
            let laced = verts.iter().all(|&i| verts.iter().all(|&j| a[i][j] == a[j][i]));
            let family = if laced {
                match (r, count) {
                    (6, 36) => 'E',
                    (7, 63) => 'E',
                    (8, 120) => 'E',
                    _ if count == r * (r + 1) / 2 => 'A',
                    _ => 'D',
                }
            } else {
                match (r, count) {
                    (2, 6) => 'G',
                    (4, 24) => 'F',
                    (2, _) => 'B',
                    _ => {
                        let fmin = verts.iter().map(|&i| self.symmetrizers[i]).min().unwrap();
                        let short = verts.iter().filter(|&&i| self.symmetrizers[i] == fmin).count();
                        if short == 1 {
                            'B'
                        } else {
                            'C'
                        }
                    }
                }
            };
            comps.push(Component {
                vertices: verts,
                family,
                rank: r,
            });
        }
        comps
    }
}

impl fmt::Display for ValuedQuiver {
    /// Renders in the parse grammar, one chain per arrow.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.type_name())?;
        for (i, a) in self.arrows.iter().enumerate() {
            let sep = if i == 0 { " " } else { ", " };
            if a.valuation == (1, 1) {
                write!(f, "{sep}{}>{}", a.source + 1, a.target + 1)?;
            } else {
                write!(f, "{sep}{}>({},{}){}", a.source + 1, a.valuation.0, a.valuation.1, a.target + 1)?;
            }
        }
        Ok(())
    }
}

pub fn pairing(e: &[Vec<i64>], alpha: &[i64], beta: &[i64]) -> i64 {
    let mut s = 0;
    for (i, &a) in alpha.iter().enumerate() {
        if a != 0 {
            s += a * linalg::dot(&e[i], beta);
        }
    }
    s
}

/// Height first, then larger coordinates first.
pub fn sort_roots(roots: &mut [Root]) {
    roots.sort_by(|a, b| {
        let ha: i64 = a.iter().sum();
        let hb: i64 = b.iter().sum();
        ha.cmp(&hb).then_with(|| b.cmp(a))
    });
}

pub fn rank2_roots_in(roots: &[Root], alpha: &[i64], beta: &[i64]) -> Result<Vec<(Root, i64, i64)>> {
    if linalg::rank(&[alpha.to_vec(), beta.to_vec()]) < 2 {
        return Err(Error::InvalidInput("roots are linearly dependent".into()));
    }
    let mut out = Vec::new();
    for r in roots {
        if let Some(c) = linalg::express(&[alpha.to_vec(), beta.to_vec()], r) {
            if c.iter().all(|x| x.is_integer() && *x.numer() >= 0) {
                out.push((r.clone(), *c[0].numer() as i64, *c[1].numer() as i64));
            }
        }
    }
    // a1/b1 < a2/b2  ⇔  a1·b2 < a2·b1 (b = 0 is +∞).
    out.sort_by(|x, y| (x.1 * y.2).cmp(&(y.1 * x.2)));
    Ok(out)
}

fn reflect_with(c: &[Vec<i64>], i: usize, v: &[i64]) -> Root {
    let k = linalg::dot(&c[i], v);
    let mut out = v.to_vec();
    out[i] -= k;
    out
}

fn valuation_matrix(n: usize, arrows: &[Arrow]) -> Vec<Vec<i64>> {
    let mut a = vec![vec![0; n]; n];
    for ar in arrows {
        a[ar.source][ar.target] += ar.valuation.0;
        a[ar.target][ar.source] += ar.valuation.1;
    }
    a
}

fn topological_order(n: usize, arrows: &[Arrow]) -> Option<Vec<usize>> {
    let mut indeg = vec![0; n];
    for a in arrows {
        indeg[a.target] += 1;
    }
    let mut ready: BTreeSet<usize> = (0..n).filter(|&i| indeg[i] == 0).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(v) = ready.pop_first() {
        order.push(v);
        for a in arrows.iter().filter(|a| a.source == v) {
            indeg[a.target] -= 1;
            if indeg[a.target] == 0 {
                ready.insert(a.target);
            }
        }
    }
    (order.len() == n).then_some(order)
}

/// Minimal positive integers with `f_i a_ij = f_j a_ji`, per connected component.
fn symmetrizers(n: usize, a: &[Vec<i64>]) -> Result<Vec<i64>> {
    // Track f_i as a fraction num/den.
    let mut f: Vec<Option<(i64, i64)>> = vec![None; n];
    let mut out = vec![0; n];
    for start in 0..n {
        if f[start].is_some() {
            continue;
        }
        f[start] = Some((1, 1));
        let mut comp = vec![start];
        let mut k = 0;
        while k < comp.len() {
            let i = comp[k];
            let (p, q) = f[i].unwrap();
            for j in 0..n {
                if a[i][j] == 0 {
                    continue;
                }
                if a[j][i] == 0 {
                    return Err(Error::NotDynkin("one-sided valuation".into()));
                }
                // f_j = f_i a_ij / a_ji
                let (mut np, mut nq) = (p * a[i][j], q * a[j][i]);
                let g = np.gcd(&nq);
                np /= g;
                nq /= g;
                match f[j] {
                    None => {
                        f[j] = Some((np, nq));
                        comp.push(j);
                    }
                    Some((rp, rq)) => {
                        if rp * nq != np * rq {
                            return Err(Error::NotDynkin("inconsistent valuations around a cycle".into()));
                        }
                    }
                }
            }
            k += 1;
        }
        let l = comp.iter().fold(1i64, |l, &i| l.lcm(&f[i].unwrap().1));
        let vals: Vec<i64> = comp.iter().map(|&i| f[i].unwrap().0 * (l / f[i].unwrap().1)).collect();
        let g = vals.iter().fold(0i64, |g, v| g.gcd(v));
        for (&i, v) in comp.iter().zip(vals) {
            out[i] = v / g;
        }
    }
    Ok(out)
}

/// Parse a quiver description such as `"A3: 1<2<3"`, `"B2: 1<(1,2)2"` or
/// `"D4: 1>2<3, 2<4"`. The type tag fixes the vertex count and is checked
/// against the classified type; without a tag the largest label is used.
pub fn parse_quiver(spec: &str) -> Result<ValuedQuiver> {
    let (tag, body) = match spec.split_once(':') {
        Some((t, b)) => (Some(t.trim()), b),
        None => (None, spec),
    };
    let declared = tag.map(parse_type_tag).transpose()?;
    let raw = parse_chains(body)?;
    let max_label = raw.iter().flat_map(|a| [a.source, a.target]).max().unwrap_or(0);
    let n = match &declared {
        Some(d) => d.iter().map(|(_, r)| r).sum(),
        None => max_label,
    };
    if max_label > n {
        return Err(Error::Parse(format!("vertex {max_label} exceeds quiver rank {n}")));
    }
    let mut seen = HashSet::new();
    for a in &raw {
        let key = (a.source.min(a.target), a.source.max(a.target));
        if !seen.insert(key) {
            return Err(Error::NotDynkin(format!("multiple edges between {} and {}", key.0, key.1)));
        }
    }
    let arrows = raw
        .into_iter()
        .map(|a| Arrow {
            source: a.source - 1,
            target: a.target - 1,
            valuation: a.valuation,
        })
        .collect();
    let q = ValuedQuiver::new(n, arrows)?;
    if let Some(d) = declared {
        check_declared_type(&q, d)?;
    }
    Ok(q)
}

fn check_declared_type(q: &ValuedQuiver, declared: Vec<(char, usize)>) -> Result<()> {
    let norm = |(c, r): (char, usize)| -> (char, usize) {
        match (c, r) {
            ('C', 2) => ('B', 2),
            ('D', 3) => ('A', 3),
            (c, r) => (c, r),
        }
    };
    let mut want: Vec<_> = declared.into_iter().map(norm).collect();
    let mut got: Vec<_> = q.components.iter().map(|c| norm((c.family, c.rank))).collect();
    want.sort_unstable();
    got.sort_unstable();
    if want != got {
        return Err(Error::NotDynkin(format!(
            "declared type does not match the arrows (classified as {})",
            q.type_name()
        )));
    }
    Ok(())
}

fn parse_type_tag(tag: &str) -> Result<Vec<(char, usize)>> {
    let mut out = Vec::new();
    for part in tag.split(['x', '×', '+', '⨿']) {
        let part = part.trim();
        let mut chars = part.chars();
        let fam = chars
            .next()
            .ok_or_else(|| Error::Parse(format!("empty component in type tag {tag:?}")))?
            .to_ascii_uppercase();
        if !"ABCDEFG".contains(fam) {
            return Err(Error::Parse(format!("unknown Dynkin family in {part:?}")));
        }
        let rank: usize = chars
            .as_str()
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad rank in type tag {part:?}")))?;
        if rank == 0 {
            return Err(Error::Parse("rank must be positive".into()));
        }
        out.push((fam, rank));
    }
    Ok(out)
}

fn read_num(chars: &mut std::iter::Peekable<impl Iterator<Item = char>>) -> Option<i64> {
    let mut s = String::new();
    while let Some(&c) = chars.peek() {
        if !c.is_ascii_digit() {
            break;
        }
        s.push(c);
        chars.next();
    }
    s.parse().ok()
}

/// 1-based arrows straight from the text.
fn parse_chains(body: &str) -> Result<Vec<Arrow>> {
    let mut out = Vec::new();
    let mut chars = body.chars().filter(|c| !c.is_whitespace()).peekable();
    let mut prev: Option<usize> = None;
    let mut pending: Option<(char, (i64, i64))> = None;
    loop {
        match chars.peek().copied() {
            None => break,
            Some(',') | Some(';') => {
                if pending.is_some() {
                    return Err(Error::Parse("dangling arrow".into()));
                }
                chars.next();
                prev = None;
            }
            Some(c @ ('<' | '>')) => {
                chars.next();
                if prev.is_none() || pending.is_some() {
                    return Err(Error::Parse(format!("arrow {c:?} without a left vertex")));
                }
                let mut val = (1, 1);
                if chars.peek() == Some(&'(') {
                    chars.next();
                    let a = read_num(&mut chars).ok_or_else(|| Error::Parse("bad valuation".into()))?;
                    if chars.next() != Some(',') {
                        return Err(Error::Parse("valuation needs two entries".into()));
                    }
                    let b = read_num(&mut chars).ok_or_else(|| Error::Parse("bad valuation".into()))?;
                    if chars.next() != Some(')') {
                        return Err(Error::Parse("unclosed valuation".into()));
                    }
                    val = (a, b);
                }
                pending = Some((c, val));
            }
            Some(c) if c.is_ascii_digit() => {
                let v = read_num(&mut chars).unwrap() as usize;
                if v == 0 {
                    return Err(Error::Parse("vertices are numbered from 1".into()));
                }
                if let Some((sym, val)) = pending.take() {
                    let x = prev.ok_or_else(|| Error::Parse("arrow without left vertex".into()))?;
                    let (s, t) = if sym == '>' { (x, v) } else { (v, x) };
                    out.push(Arrow {
                        source: s,
                        target: t,
                        valuation: val,
                    });
                } else if prev.is_some() {
                    return Err(Error::Parse("two vertices without an arrow".into()));
                }
                prev = Some(v);
            }
            Some(c) => return Err(Error::Parse(format!("unexpected character {c:?}"))),
        }
    }
    if pending.is_some() {
        return Err(Error::Parse("dangling arrow".into()));
    }
    Ok(out)
}
