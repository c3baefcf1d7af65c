//! Picture-group presentations and homology of the picture space.

pub mod complex;
pub mod snf;

use std::collections::BTreeSet;

use serde::Serialize;

pub use complex::{ChainComplex, HomologyResult, TorsionCoefficients};

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg;

/// A word in the generators: `(root index, ±1)` letters.
pub type Word = Vec<(usize, i8)>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Presentation {
    /// One generator `x_α` per positive root, by root index.
    pub generators: Vec<usize>,
    /// Relators `w = 1`, canonical up to rotation and inversion.
    pub relations: Vec<Word>,
}

pub fn inverse(w: &[(usize, i8)]) -> Word {
    w.iter().rev().map(|&(g, e)| (g, -e)).collect()
}

/// Lexicographically least rotation of the word or of its inverse.
pub fn canonical(w: &[(usize, i8)]) -> Word {
    let inv = inverse(w);
    let mut best: Option<Word> = None;
    for base in [w, &inv[..]] {
        for r in 0..base.len().max(1) {
            let mut c = base[r..].to_vec();
            c.extend_from_slice(&base[..r]);
            if best.as_ref().is_none_or(|b| c < *b) {
                best = Some(c);
            }
        }
    }
    best.unwrap_or_default()
}

impl Algebra {
    /// The relation of a hom-orthogonal pair with `Ext¹(M_α, M_β) = 0`:
    /// `x_α x_β = Π x_γ` over the rank-two chain, written as a relator.
    pub fn pair_relation(&self, alpha: usize, beta: usize) -> Result<Word> {
        let chain = crate::quiver::rank2_roots_in(self.roots(), self.root(alpha), self.root(beta))?;
        let mut w: Word = vec![(alpha, 1), (beta, 1)];
        for (root, _, _) in chain.iter().rev() {
            w.push((self.root_id(root)?, -1));
        }
        Ok(w)
    }

    pub fn presentation(&self) -> Result<Presentation> {
        let m = self.num_roots();
        let mut rels: BTreeSet<Word> = BTreeSet::new();
        for a in 0..m {
            for b in a + 1..m {
                if self.hom(a, b) != 0 || self.hom(b, a) != 0 {
                    continue;
                }
                let (alpha, beta) = match (self.ext(a, b), self.ext(b, a)) {
                    (0, _) => (a, b),
                    (_, 0) => (b, a),
                    _ => {
                        return Err(Error::InvariantViolation(
                            "hom-orthogonal roots extending each other both ways".into(),
                        ))
                    }
                };
                rels.insert(canonical(&self.pair_relation(alpha, beta)?));
            }
        }
        Ok(Presentation {
            generators: (0..m).collect(),
            relations: rels.into_iter().collect(),
        })
    }

    pub fn word_to_string(&self, w: &[(usize, i8)]) -> String {
        w.iter()
            .map(|&(g, e)| {
                let name = self.root(g).iter().map(|x| x.to_string()).collect::<String>();
                if e > 0 {
                    format!("x{name}")
                } else {
                    format!("x{name}^-1")
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Rank of the abelianization: generators minus the rank of the exponent-sum matrix.
pub fn abelianization_rank(p: &Presentation) -> usize {
    let pos = |g: usize| p.generators.iter().position(|&x| x == g).expect("declared generator");
    let rows: Vec<Vec<i64>> = p
        .relations
        .iter()
        .map(|w| {
            let mut r = vec![0; p.generators.len()];
            for &(g, e) in w {
                r[pos(g)] += e as i64;
            }
            r
        })
        .collect();
    p.generators.len() - linalg::rank(&rows)
}

/// Compare the picture-group presentation of `A_{n−1}` (orientation
/// `1←2←…`) with the Stasheff relations, identifying the root supported on
/// vertices `i+1..=j` with `x_{i+1, j+1}`. Returns `Ok(true)` on an exact
/// match and an error listing the differences otherwise.
pub fn check_stasheff(n: usize) -> Result<bool> {
    if n < 2 {
        return Err(Error::InvalidInput("Stasheff groups start at n = 2".into()));
    }
    let chain: Vec<String> = (1..n).map(|v| v.to_string()).collect();
    let a = Algebra::from_spec(&format!("A{}: {}", n - 1, chain.join("<")))?;
    // x_{ab} with 1 ≤ a < b ≤ n ↔ root with support a..b-1 (1-based vertices).
    let gen = |lo: usize, hi: usize| -> usize {
        let mut r = vec![0; n - 1];
        for v in lo..hi {
            r[v - 1] = 1;
        }
        a.root_id(&r).expect("interval root")
    };
    let mut want: BTreeSet<Word> = BTreeSet::new();
    for i in 1..=n {
        for j in i + 1..=n {
            for k in j + 1..=n {
                // x_ij x_jk = x_jk x_ik x_ij
                want.insert(canonical(&[
                    (gen(i, j), 1),
                    (gen(j, k), 1),
                    (gen(i, j), -1),
                    (gen(i, k), -1),
                    (gen(j, k), -1),
                ]));
            }
            for k in 1..=n {
                for l in k + 1..=n {
                    let distinct = BTreeSet::from([i, j, k, l]).len() == 4;
                    let disjoint = j < k || l < i;
                    let nested = (i < k && l < j) || (k < i && j < l);
                    if distinct && (disjoint || nested) {
                        want.insert(canonical(&[
                            (gen(i, j), 1),
                            (gen(k, l), 1),
                            (gen(i, j), -1),
                            (gen(k, l), -1),
                        ]));
                    }
                }
            }
        }
    }
    let got: BTreeSet<Word> = a.presentation()?.relations.into_iter().collect();
    if got == want {
        return Ok(true);
    }
    let show = |s: &BTreeSet<Word>| s.iter().map(|w| a.word_to_string(w)).collect::<Vec<_>>().join("; ");
    Err(Error::InvariantViolation(format!(
        "Stasheff mismatch; missing [{}], unexpected [{}]",
        show(&want.difference(&got).cloned().collect()),
        show(&got.difference(&want).cloned().collect())
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        let w: Word = vec![(0, 1), (1, 1), (0, -1), (1, -1)];
        let rot: Word = vec![(1, 1), (0, -1), (1, -1), (0, 1)];
        assert_eq!(canonical(&w), canonical(&rot));
        assert_eq!(canonical(&w), canonical(&inverse(&w)));
    }

    #[test]
    fn small_presentations() {
        let a1 = Algebra::from_spec("A1:").unwrap();
        let p = a1.presentation().unwrap();
        assert_eq!((p.generators.len(), p.relations.len()), (1, 0));
        assert_eq!(abelianization_rank(&p), 1);

        let a2 = Algebra::from_spec("A2: 1<2").unwrap();
        let p = a2.presentation().unwrap();
        assert_eq!(p.relations.len(), 1);
        assert_eq!(p.relations[0].len(), 5);
        assert_eq!(abelianization_rank(&p), 2);
    }

    #[test]
    fn b2_hexagon() {
        let b2 = Algebra::from_spec("B2: 1<(1,2)2").unwrap();
        let p = b2.presentation().unwrap();
        let id = |v: &[i64]| b2.root_id(v).unwrap();
        let (al, be) = (id(&[1, 0]), id(&[0, 1]));
        let hexagon = vec![
            (al, 1),
            (be, 1),
            (al, -1),
            (id(&[2, 1]), -1),
            (id(&[1, 1]), -1),
            (be, -1),
        ];
        assert_eq!(p.relations, vec![canonical(&hexagon)]);
    }

    #[test]
    fn stasheff_small() {
        assert!(check_stasheff(2).unwrap());
        assert!(check_stasheff(3).unwrap());
        assert!(check_stasheff(4).unwrap());
        assert!(check_stasheff(1).is_err());
    }
}
