use std::collections::BTreeSet;

use clusterpic_core::{Algebra, ClusterObject, RootSet};
use num_rational::Ratio;

const QUIVERS: &[&str] = &["A1:", "A2: 1>2", "A3: 1>2>3", "A3: 1<2>3", "A3: 1>2<3", "D4: 1<2>3, 2>4"];

#[test]
fn one_class_per_cluster() {
    for spec in QUIVERS {
        let a = Algebra::from_spec(spec).unwrap();
        let h = a.torsion_hasse().unwrap();
        let distinct: BTreeSet<RootSet> = h.classes.iter().map(|c| c.roots).collect();
        assert_eq!(distinct.len(), a.all_clusters(a.full()).unwrap().len(), "{spec}");
    }
}

#[test]
fn hasse_has_bottom_and_top() {
    for spec in QUIVERS {
        let a = Algebra::from_spec(spec).unwrap();
        let h = a.torsion_hasse().unwrap();
        let k = h.classes.len();
        let sources: Vec<usize> = (0..k).filter(|&c| h.edges.iter().all(|e| e.to != c)).collect();
        let sinks: Vec<usize> = (0..k).filter(|&c| h.edges.iter().all(|e| e.from != c)).collect();
        assert_eq!(sources.len(), 1);
        assert_eq!(sinks.len(), 1);
        assert!(h.classes[sources[0]].roots.is_empty());
        assert_eq!(h.classes[sinks[0]].roots, a.full());
        // Inclusion along every edge makes the graph acyclic.
        for e in &h.edges {
            assert!(h.classes[e.to].roots.len() > h.classes[e.from].roots.len());
        }
    }
}

#[test]
fn edges_are_minimal_extensions() {
    for spec in QUIVERS {
        let a = Algebra::from_spec(spec).unwrap();
        let h = a.torsion_hasse().unwrap();
        for e in &h.edges {
            let mut seed = h.classes[e.from].roots;
            seed.insert(e.label);
            assert_eq!(a.torsion_closure(seed), h.classes[e.to].roots, "{spec}");
            assert!(!h.classes[e.from].roots.contains(e.label));
        }
    }
}

#[test]
fn constant_on_chambers() {
    for spec in QUIVERS {
        let a = Algebra::from_spec(spec).unwrap();
        let fan = a.build_fan().unwrap();
        let h = a.torsion_hasse_of(&fan).unwrap();
        for (c, cluster) in fan.clusters.iter().enumerate() {
            for weights in [[1, 2, 3, 4], [5, 1, 2, 1], [2, 7, 1, 3]] {
                let mut g = vec![Ratio::from_integer(0); a.n()];
                for (k, &x) in cluster.iter().enumerate() {
                    for (s, v) in g.iter_mut().zip(a.g_vector(x)) {
                        *s += Ratio::new(v * weights[k], 5);
                    }
                }
                assert_eq!(a.torsion_class_of_point(&g).unwrap().roots, h.classes[c].roots, "{spec}");
            }
        }
    }
}

#[test]
fn pentagon_around_point_a() {
    let a = Algebra::from_spec("A3: 1>2>3").unwrap();
    let s1 = a.parse_object("S1").unwrap();
    let fan = a.build_fan().unwrap();
    let h = a.torsion_hasse_of(&fan).unwrap();
    let around: Vec<usize> = (0..fan.clusters.len()).filter(|&c| fan.clusters[c].contains(&s1)).collect();
    assert_eq!(around.len(), 5);
    let edges: Vec<_> = h.edges.iter().filter(|e| around.contains(&e.from) && around.contains(&e.to)).collect();
    assert_eq!(edges.len(), 5);
    let labels: BTreeSet<String> = edges.iter().map(|e| a.root_name(e.label)).collect();
    assert_eq!(labels, ["I2", "P1", "S3"].iter().map(|s| s.to_string()).collect());
    // One bottom and one top, joined by chains of length two and three.
    let bottom = around.iter().copied().find(|&c| edges.iter().all(|e| e.to != c)).unwrap();
    let top = around.iter().copied().find(|&c| edges.iter().all(|e| e.from != c)).unwrap();
    let mut lengths = Vec::new();
    for first in edges.iter().filter(|e| e.from == bottom) {
        let mut cur = first.to;
        let mut len = 1;
        while cur != top {
            cur = edges.iter().find(|e| e.from == cur).unwrap().to;
            len += 1;
        }
        lengths.push(len);
    }
    lengths.sort();
    assert_eq!(lengths, [2, 3]);
    // The chamber of the cluster {S1, S3, P1}.
    let t3: Vec<ClusterObject> = {
        let mut v: Vec<ClusterObject> = ["S1", "S3", "P1"].iter().map(|s| a.parse_object(s).unwrap()).collect();
        v.sort();
        v
    };
    assert!(around.iter().any(|&c| fan.clusters[c] == t3));
}
