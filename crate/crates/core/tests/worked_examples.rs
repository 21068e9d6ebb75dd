//! Frozen reference data: the size-9 truncation of the model with prefix
//! (1,3,4), the 27-configuration crystal of the three-element biorder, and
//! the correspondence between a rank-2 partition component and its good
//! configurations.

mod common;

use std::collections::BTreeSet;

use common::{random_biorder, seed, three_element_biorder, Rng};
use crystal_models::arm_seq::ArmSequence;
use crystal_models::biorder::{component_biorder, Biorder, Color, Configuration};
use crystal_models::crystal_graph::CrystalGraph;
use crystal_models::partition::Partition;
use crystal_models::reg_crystal::ArmModel;

/// Every vertex of the size-9 truncation for n = 3, A = (1,3,4,...),
/// listed explicitly as a frozen fixture.
const REFERENCE_CRYSTAL_VERTICES: &[&str] = &[
    "",
    "1",
    "2",
    "1,1",
    "3",
    "1,1,1",
    "4",
    "3,1",
    "2,1,1",
    "1,1,1,1",
    "5",
    "4,1",
    "3,1,1",
    "2,1,1,1",
    "1,1,1,1,1",
    "6",
    "5,1",
    "4,2",
    "3,1,1,1",
    "2,2,1,1",
    "2,1,1,1,1",
    "1,1,1,1,1,1",
    "7",
    "6,1",
    "5,2",
    "5,1,1",
    "4,1,1,1",
    "2,2,1,1,1",
    "3,1,1,1,1",
    "2,1,1,1,1,1",
    "1,1,1,1,1,1,1",
    "8",
    "7,1",
    "6,2",
    "6,1,1",
    "5,3",
    "5,1,1,1",
    "4,2,1,1",
    "4,1,1,1,1",
    "2,2,2,1,1",
    "3,1,1,1,1,1",
    "2,2,1,1,1,1",
    "2,1,1,1,1,1,1",
    "1,1,1,1,1,1,1,1",
    "9",
    "8,1",
    "7,2",
    "7,1,1",
    "6,3",
    "5,3,1",
    "6,1,1,1",
    "5,2,1,1",
    "4,2,1,1,1",
    "4,1,1,1,1,1",
    "3,2,2,1,1",
    "2,2,2,1,1,1",
    "3,1,1,1,1,1,1",
    "2,2,1,1,1,1,1",
    "2,1,1,1,1,1,1,1",
    "1,1,1,1,1,1,1,1,1",
];

/// The three components of the 27-configuration crystal, as value triples
/// (a(p), a(q), a(r)).
const GOOD_COMPONENT: &[&str] = &[
    "0,0,0", "0,0,1", "0,0,2", "1,0,0", "1,0,2", "1,1,0", "1,1,2", "2,0,0", "2,0,1", "2,0,2",
    "2,1,0", "2,1,2", "2,2,0", "2,2,1", "2,2,2",
];
const MIDDLE_COMPONENT: &[&str] = &[
    "0,1,0", "0,1,1", "0,1,2", "0,2,0", "0,2,1", "0,2,2", "1,2,0", "1,2,1", "1,2,2",
];
const CHAIN_COMPONENT: &[&str] = &["1,0,1", "1,1,1", "2,1,1"];

#[test]
fn crystal_truncation_matches_the_reference() {
    let model = ArmModel::new(ArmSequence::new(3, vec![1, 3, 4]).unwrap());
    let graph = CrystalGraph::generate(&model, 9).unwrap();

    let generated: BTreeSet<&str> = graph
        .vertices()
        .iter()
        .map(|v| v.payload.as_str())
        .collect();
    let expected: BTreeSet<&str> = REFERENCE_CRYSTAL_VERTICES.iter().copied().collect();
    assert_eq!(expected.len(), 60);
    assert_eq!(generated, expected);

    // The empty partition lowers to (1) along residue 0 and nothing else.
    let empty = graph.vertex_id("").unwrap();
    let one = graph.vertex_id("1").unwrap();
    assert_eq!(graph.f_step(empty, 0), Some(one));
    assert_eq!(graph.f_step(empty, 1), None);
    assert_eq!(graph.f_step(empty, 2), None);
}

#[test]
fn configuration_crystal_components_match_the_reference() {
    let biorder = three_element_biorder();
    let graph = biorder.cc_graph().unwrap();
    assert_eq!(graph.num_vertices(), 27);

    let component_of = |payload: &str| -> BTreeSet<String> {
        let id = graph.vertex_id(payload).unwrap();
        graph
            .components()
            .into_iter()
            .find(|c| c.contains(&id))
            .unwrap()
            .into_iter()
            .map(|v| graph.vertex(v).payload.clone())
            .collect()
    };
    let as_set =
        |items: &[&str]| -> BTreeSet<String> { items.iter().map(|s| s.to_string()).collect() };

    assert_eq!(component_of("0,0,0"), as_set(GOOD_COMPONENT));
    assert_eq!(component_of("0,1,0"), as_set(MIDDLE_COMPONENT));
    assert_eq!(component_of("1,1,1"), as_set(CHAIN_COMPONENT));

    // The middle component's two sources.
    let middle: Vec<usize> = MIDDLE_COMPONENT
        .iter()
        .map(|p| graph.vertex_id(p).unwrap())
        .collect();
    let sub = graph.subgraph(&middle);
    let sources: BTreeSet<&str> = sub
        .sources()
        .into_iter()
        .map(|v| sub.vertex(v).payload.as_str())
        .collect();
    assert_eq!(sources, ["0,1,0", "0,1,1"].into_iter().collect());

    // The good configurations are exactly the first component.
    let good: BTreeSet<String> = graph
        .vertices()
        .iter()
        .filter(|v| {
            let values = v
                .payload
                .split(',')
                .map(|x| x.parse().unwrap())
                .collect::<Vec<u8>>();
            biorder
                .is_good(&crystal_models::biorder::Configuration::new(values))
                .is_ok()
        })
        .map(|v| v.payload.clone())
        .collect();
    assert_eq!(good, as_set(GOOD_COMPONENT));
}

#[test]
fn rank2_component_realizes_the_good_component() {
    // At truncation 11 the component of (3,1) under labels {0,1} is
    // complete; its fifteen members map onto the good configurations.
    let arm = ArmSequence::new(3, vec![1, 3, 4, 6]).unwrap();
    let model = ArmModel::new(arm.clone());
    let graph = CrystalGraph::generate(&model, 11).unwrap();
    let root = graph.vertex_id("3,1").unwrap();
    let component = graph
        .rank2(0, 1)
        .into_iter()
        .find(|c| c.vertices.contains(&root))
        .unwrap();
    assert!(component.complete);
    assert_eq!(component.vertices.len(), 15);

    let members: Vec<Partition> = component
        .vertices
        .iter()
        .map(|&v| graph.vertex(v).payload.parse().unwrap())
        .collect();
    let cb = component_biorder(&members[0], 0, &arm).unwrap();
    assert_eq!(
        cb.biorder.canonical_structure(),
        three_element_biorder().canonical_structure()
    );

    let images: BTreeSet<String> = members.iter().map(|lam| cb.psi(lam).to_string()).collect();
    let expected: BTreeSet<String> = GOOD_COMPONENT.iter().map(|s| s.to_string()).collect();
    assert_eq!(images, expected);

    // The distinguished member (3,1) sits at the all-zero configuration,
    // and the closure tops out at the all-two configuration.
    assert_eq!(cb.psi(&members[0]).to_string(), "0,0,0");
    assert_eq!(cb.c_down, "3,1".parse().unwrap());
    assert_eq!(cb.c_up, "5,3,1,1".parse().unwrap());
    assert!(members.contains(&cb.c_down));
    assert!(members.contains(&cb.c_up));
}

/// Goodness recomputed from scratch: raw quantifier scans with a per-query
/// breadth-first transitive closure, independent of the precomputed pattern
/// lists inside `Biorder`.
fn good_oracle(b: &Biorder, a: &Configuration) -> bool {
    let k = b.len();
    let covers = |s: usize, t: usize| b.gt(Color::I, s, t) || b.gt(Color::J, s, t);
    let dominates = |s: usize, t: usize| b.gt(Color::I, s, t) && b.gt(Color::J, s, t);
    let above = |s: usize, t: usize| {
        let mut reached = vec![false; k];
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for w in 0..k {
                if w != u && covers(u, w) && !reached[w] {
                    reached[w] = true;
                    stack.push(w);
                }
            }
        }
        reached[t]
    };

    for s in 0..k {
        for t in 0..k {
            if s == t {
                continue;
            }
            if b.gt(Color::I, s, t) && b.gt(Color::J, t, s) && a.get(s) == 1 && a.get(t) == 1 {
                return false;
            }
            if covers(s, t) && above(t, s) && b.color(s) == b.color(t) && a.get(s) < a.get(t) {
                return false;
            }
        }
    }
    for q in 0..k {
        for r in 0..k {
            for s in 0..k {
                for t in 0..k {
                    let distinct =
                        q != r && q != s && q != t && r != s && r != t && s != t;
                    if distinct
                        && covers(q, r)
                        && dominates(r, s)
                        && covers(s, t)
                        && dominates(r, t)
                        && covers(t, q)
                        && dominates(q, s)
                        && a.get(q) == 2
                        && a.get(s) == 2
                        && a.get(r) == 0
                        && a.get(t) == 0
                    {
                        return false;
                    }
                }
            }
        }
    }
    true
}

#[test]
fn goodness_predicate_matches_an_independent_oracle() {
    let mut rng = Rng::new(seed() ^ 0x5EED);
    let mut biorders = vec![three_element_biorder()];
    for _ in 0..10 {
        let size = 1 + rng.below(5);
        biorders.push(random_biorder(&mut rng, size));
    }
    for b in &biorders {
        for a in b.all_configurations().unwrap() {
            assert_eq!(
                b.is_good(&a).is_ok(),
                good_oracle(b, &a),
                "goodness disagrees at {:?}",
                a
            );
        }
    }
}
