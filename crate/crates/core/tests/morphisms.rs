use std::collections::BTreeSet;

use clusterpic_core::{Algebra, ClusterMorphism, ClusterObject};
use proptest::prelude::*;

fn objects(a: &Algebra, names: &[&str]) -> Vec<ClusterObject> {
    names.iter().map(|s| a.parse_object(s).unwrap()).collect()
}

#[test]
fn category_laws() {
    for spec in ["A2: 1<2", "A3: 1>2<3", "B2: 1<(1,2)2", "A2xA1: 1>2, 3"] {
        let a = Algebra::from_spec(spec).unwrap();
        let all: Vec<ClusterMorphism> = a.morphisms_by_rank().unwrap().into_iter().flatten().collect();
        for f in &all {
            assert_eq!(a.compose(f, &a.identity(f.source)).unwrap(), *f);
            assert_eq!(a.compose(&a.identity(f.target), f).unwrap(), *f);
        }
        let from = |w| all.iter().filter(move |m: &&ClusterMorphism| m.source == w);
        for f in &all {
            for g in from(f.target) {
                let gf = a.compose(g, f).unwrap();
                for h in from(g.target) {
                    let lhs = a.compose(h, &gf).unwrap();
                    let rhs = a.compose(&a.compose(h, g).unwrap(), f).unwrap();
                    assert_eq!(lhs, rhs, "{spec}");
                }
            }
        }
    }
}

#[test]
fn signed_sequence_counts() {
    for (spec, count) in [("A1:", 2), ("A2: 1<2", 10), ("A3: 1>2<3", 84), ("B2: 1<(1,2)2", 12), ("G2: 1<(1,3)2", 16)] {
        let a = Algebra::from_spec(spec).unwrap();
        assert_eq!(a.complete_signed_sequences().len(), count, "{spec}");
    }
}

#[test]
fn factorizations_are_exceptional_with_legal_signs() {
    for spec in ["A3: 1<2<3", "A3: 1>2<3", "B3: 1<2<(2,1)3", "D4: 1<2>3, 2>4"] {
        let a = Algebra::from_spec(spec).unwrap();
        for c in a.all_clusters(a.full()).unwrap() {
            let m = a.morphism(a.full(), c).unwrap();
            for seq in a.factorizations(&m).unwrap() {
                let unsigned: Vec<usize> = seq.iter().map(|x| x.root_id()).collect();
                assert!(a.is_exceptional(&unsigned), "{spec}");
                let mut w = a.full();
                for &x in seq.iter().rev() {
                    if x.is_shifted() {
                        assert!(a.projectives_of(w).contains(&x.root_id()), "{spec}: {}", a.name(x));
                    } else {
                        assert!(w.contains(x.root_id()));
                    }
                    w = a.perp_roots(w, &[x]);
                }
                assert!(w.is_empty());
            }
        }
    }
}

#[test]
fn cube_coherence() {
    for spec in ["A3: 1>2>3", "B2: 1<(1,2)2", "A2xA1: 1<2, 3"] {
        let a = Algebra::from_spec(spec).unwrap();
        let full = a.full();
        for c in a.all_clusters(full).unwrap() {
            let whole = a.morphism(full, c.clone()).unwrap();
            for mask in 0u32..1 << c.len() {
                let (s, rest): (Vec<_>, Vec<_>) = (0..c.len()).partition(|i| mask >> i & 1 == 1);
                let s: Vec<ClusterObject> = s.iter().map(|&i| c[i]).collect();
                let f = a.morphism(full, s.clone()).unwrap();
                let down: Vec<ClusterObject> = rest.iter().map(|&i| a.descend(full, &s, c[i]).unwrap()).collect();
                let g = a.morphism(f.target, down).unwrap();
                assert_eq!(a.compose(&g, &f).unwrap(), whole, "{spec}");
            }
            // Every maximal path of rank-one morphisms composes to the whole cube.
            for seq in a.factorizations(&whole).unwrap() {
                let mut acc = a.identity(full);
                for &x in seq.iter().rev() {
                    let step = a.morphism(acc.target, vec![x]).unwrap();
                    acc = a.compose(&step, &acc).unwrap();
                }
                assert_eq!(acc, whole);
            }
        }
    }
}

#[test]
fn worked_example_in_rank_three() {
    let a = Algebra::from_spec("A3: 1>2>3").unwrap();
    let m = a.morphism(a.full(), objects(&a, &["S1", "S3", "P1"])).unwrap();
    let got: BTreeSet<Vec<ClusterObject>> = a.factorizations(&m).unwrap().into_iter().collect();
    let want: BTreeSet<Vec<ClusterObject>> = [
        ["S2[1]", "I2", "S3"],
        ["S2[1]", "S3", "P1"],
        ["I2", "S1", "S3"],
        ["S3", "-P2", "P1"],
        ["S3", "P1", "S1"],
        ["I2", "S3", "S1"],
    ]
    .iter()
    .map(|s| objects(&a, s))
    .collect();
    assert_eq!(got, want);
    // S1 is not relatively projective where it would be factored.
    assert!(!a.is_signed_exceptional(&objects(&a, &["I2", "S1[1]", "S3"])));
    assert!(a.is_signed_exceptional(&objects(&a, &["S3", "-P2", "P1"])));
}

#[test]
fn ordered_cluster_round_trip() {
    let a = Algebra::from_spec("A3: 1>2>3").unwrap();
    let seq = objects(&a, &["S2[1]", "S3", "P1"]);
    let t = a.to_ordered_cluster(&seq).unwrap();
    assert_eq!(t, objects(&a, &["P1", "S3", "S1"]));
    assert_eq!(a.from_ordered_cluster(&t).unwrap(), seq);
}

#[test]
fn complete_exceptional_sequence_counts() {
    for (spec, count) in [("A2: 1<2", 3), ("A3: 1>2<3", 16), ("A4: 1<2<3<4", 125), ("A4: 1>2<3>4", 125)] {
        let a = Algebra::from_spec(spec).unwrap();
        assert_eq!(a.exceptional_sequences(a.n()).len(), count, "{spec}");
    }
}

#[test]
fn braid_move_example() {
    let a = Algebra::from_spec("A3: 1>2>3").unwrap();
    let id = |s: &str| a.parse_object(s).unwrap().root_id();
    let seq = vec![id("S2"), id("I2"), id("S3")];
    assert_eq!(a.braid_move(&seq, 2, true).unwrap(), vec![id("S2"), id("S3"), id("P1")]);
    assert!(a.braid_move(&seq, 3, true).is_err());
}

#[test]
fn completion_on_the_left() {
    let a = Algebra::from_spec("D4: 1<2>3, 2>4").unwrap();
    for len in 1..=a.n() {
        for s in a.exceptional_sequences(len) {
            let full = a.complete_on_left(&s).unwrap();
            assert_eq!(full.len(), a.n());
            assert!(a.is_exceptional(&full));
            assert_eq!(&full[a.n() - len..], &s[..]);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn braid_moves_are_inverse(pick in 0usize..4, idx in any::<u16>(), pos in 1usize..4) {
        let spec = ["A3: 1<2<3", "A4: 1>2<3>4", "D4: 1<2>3, 2>4", "B3: 1<2<(2,1)3"][pick];
        let a = Algebra::from_spec(spec).unwrap();
        let seqs = a.exceptional_sequences(a.n());
        let s = &seqs[idx as usize % seqs.len()];
        let i = 1 + (pos - 1) % (a.n() - 1);
        let t = a.braid_move(s, i, true).unwrap();
        prop_assert!(a.is_exceptional(&t));
        prop_assert_eq!(&a.braid_move(&t, i, false).unwrap(), s);
        let u = a.braid_move(s, i, false).unwrap();
        prop_assert_eq!(&a.braid_move(&u, i, true).unwrap(), s);
    }

    #[test]
    fn swapping_terms_is_detected(pick in 0usize..3, idx in any::<u16>(), i in 0usize..4, j in 0usize..4) {
        let spec = ["A3: 1>2<3", "D4: 1<2>3, 2>4", "A4: 1<2<3<4"][pick];
        let a = Algebra::from_spec(spec).unwrap();
        let seqs = a.exceptional_sequences(a.n());
        let s = &seqs[idx as usize % seqs.len()];
        let (i, j) = (i % a.n(), j % a.n());
        let mut t = s.clone();
        t.swap(i, j);
        let backward = (0..t.len()).any(|p| (p + 1..t.len()).any(|q| {
            a.hom(t[q], t[p]) != 0 || a.ext(t[q], t[p]) != 0
        }));
        prop_assert_eq!(a.is_exceptional(&t), !backward);
    }
}
