use clusterpic_core::linalg::dot;
use clusterpic_core::quiver::{Arrow, ValuedQuiver};
use clusterpic_core::{parse_quiver, Algebra, ClusterObject};
use proptest::prelude::*;

const VALUED: &[&str] = &[
    "A1:",
    "A3: 1>2<3",
    "B2: 1<(1,2)2",
    "C2: 1<(2,1)2",
    "G2: 1>(3,1)2",
    "B3: 1<2<(2,1)3",
    "C3: 1>2>(2,1)3",
    "D4: 1<2>3, 2>4",
    "F4: 1<2<(1,2)3<4",
    "E6: 1<2<3<4<5, 3<6",
];

/// Tree quiver from an undirected edge list and an orientation bitmask.
fn oriented(n: usize, edges: &[(usize, usize)], mask: u32) -> Algebra {
    let arrows = edges
        .iter()
        .enumerate()
        .map(|(k, &(a, b))| {
            let (s, t) = if mask >> k & 1 == 1 { (a, b) } else { (b, a) };
            Arrow {
                source: s,
                target: t,
                valuation: (1, 1),
            }
        })
        .collect();
    Algebra::new(ValuedQuiver::new(n, arrows).unwrap()).unwrap()
}

const A4: &[(usize, usize)] = &[(0, 1), (1, 2), (2, 3)];
const D4: &[(usize, usize)] = &[(0, 1), (1, 2), (1, 3)];
const A3: &[(usize, usize)] = &[(0, 1), (1, 2)];

#[test]
fn root_counts() {
    for n in 1..=7 {
        let chain: Vec<String> = (1..=n).map(|v| v.to_string()).collect();
        let q = parse_quiver(&format!("A{n}: {}", chain.join("<"))).unwrap();
        assert_eq!(q.positive_roots().len(), n * (n + 1) / 2);
    }
    for (spec, count) in [
        ("B2: 1<(1,2)2", 4),
        ("C2: 1<(2,1)2", 4),
        ("G2: 1<(1,3)2", 6),
        ("D4: 1<2>3, 2>4", 12),
        ("B3: 1<2<(2,1)3", 9),
        ("F4: 1<2<(1,2)3<4", 24),
        ("E6: 1<2<3<4<5, 3<6", 36),
        ("E7: 1<2<3<4<5<6, 3<7", 63),
        ("E8: 1<2<3<4<5<6<7, 5<8", 120),
    ] {
        assert_eq!(parse_quiver(spec).unwrap().positive_roots().len(), count, "{spec}");
    }
}

#[test]
fn root_lengths_and_reflection_closure() {
    for spec in VALUED {
        let q = parse_quiver(spec).unwrap();
        let s = q.symmetrized_form();
        let roots = q.positive_roots();
        for r in &roots {
            let sr: Vec<i64> = s.iter().map(|row| dot(row, r)).collect();
            let len = dot(r, &sr);
            assert!(q.symmetrizers().iter().any(|&f| len == 2 * f), "{spec}: {r:?}");
            for i in 0..q.n() {
                let t = q.reflect(i, r);
                let neg: Vec<i64> = t.iter().map(|x| -x).collect();
                assert!(roots.contains(&t) || roots.contains(&neg), "{spec}: s{i}{r:?}");
            }
        }
    }
}

#[test]
fn g_vector_pairing() {
    for spec in VALUED {
        let a = Algebra::from_spec(spec).unwrap();
        for x in 0..a.num_roots() {
            for y in 0..a.num_roots() {
                let g = a.g_vector(ClusterObject::Module(x));
                assert_eq!(dot(&g, &a.wall_normal(y)), a.pairing(x, y), "{spec}");
                let gs = a.g_vector(ClusterObject::Shifted(x));
                if a.projectives_in(a.full()).contains(&x) {
                    assert_eq!(dot(&gs, &a.wall_normal(y)), -a.pairing(x, y));
                }
            }
        }
    }
}

#[test]
fn directedness() {
    for spec in VALUED {
        let a = Algebra::from_spec(spec).unwrap();
        for x in 0..a.num_roots() {
            assert_eq!(a.ext(x, x), 0);
            for y in 0..a.num_roots() {
                if x != y {
                    assert!(a.hom(x, y) == 0 || a.ext(x, y) == 0, "{spec}");
                }
            }
        }
    }
}

#[test]
fn domain_membership_matches_hom_orthogonality() {
    for spec in ["A2: 1<2", "A3: 1>2<3", "A3: 1<2<3", "D4: 1<2>3, 2>4", "A4: 1>2<3>4"] {
        let a = Algebra::from_spec(spec).unwrap();
        for x in a.cluster_objects(a.full()) {
            let g = a.g_vector(x);
            for b in 0..a.num_roots() {
                let d = a.domain(a.root(b)).unwrap();
                assert_eq!(a.in_domain_via_hom(x, b), d.contains(&g), "{spec} {} {b}", a.name(x));
            }
        }
    }
}

#[test]
fn submodules_and_quotients_are_complementary() {
    let a = Algebra::from_spec("D4: 1<2>3, 2>4").unwrap();
    for r in a.roots() {
        let mut flipped: Vec<Vec<i64>> = a
            .submodule_dims(r)
            .unwrap()
            .iter()
            .map(|s| r.iter().zip(s).map(|(x, y)| x - y).collect())
            .collect();
        flipped.sort();
        let mut q = a.quotient_dims(r).unwrap();
        q.sort();
        assert_eq!(flipped, q);
    }
}

#[test]
fn field_order_is_validated() {
    let q = parse_quiver("A2: 1<2").unwrap();
    assert!(Algebra::with_field_order(q.clone(), 4).is_err());
    let a = Algebra::with_field_order(q, 5).unwrap();
    assert_eq!(a.submodule_dims(&[1, 1]).unwrap().len(), 3);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn oracle_matches_euler_form(
        shape in 0usize..3,
        mask in 0u32..8,
        p in prop::sample::select(vec![2u64, 3]),
        seed in any::<(u16, u16)>(),
    ) {
        let a = match shape {
            0 => oriented(4, A4, mask),
            1 => oriented(4, D4, mask),
            _ => oriented(3, A3, mask),
        };
        let m = a.num_roots();
        let (x, y) = (seed.0 as usize % m, seed.1 as usize % m);
        let (h, e) = a.oracle_hom_ext(a.root(x), a.root(y), p).unwrap();
        prop_assert_eq!((h as i64, e as i64), (a.hom(x, y), a.ext(x, y)));
    }

    #[test]
    fn representations_are_bricks(mask in 0u32..8, p in prop::sample::select(vec![2u64, 3, 5]), pick in any::<u16>()) {
        let a = oriented(4, D4, mask);
        let r = a.root(pick as usize % a.num_roots()).clone();
        let rep = a.build_representation(&r, p).unwrap();
        prop_assert_eq!(rep.dim_vector(), r);
        prop_assert!(rep.is_brick());
    }

    #[test]
    fn submodule_lattice_is_field_independent(mask in 0u32..8, pick in any::<u16>()) {
        let a = oriented(4, A4, mask);
        let r = a.root(pick as usize % a.num_roots()).clone();
        prop_assert_eq!(a.submodule_dims_over(&r, 2).unwrap(), a.submodule_dims_over(&r, 3).unwrap());
    }
}
