//! Compare partition models by rooted isomorphism.
//!
//! Run with: cargo run --example compare_models

use crystal_models::arm_seq::ArmSequence;
use crystal_models::crystal_graph::CrystalGraph;
use crystal_models::models::{RegularModel, RestrictedModel};
use crystal_models::reg_crystal::{ArmModel, CrystalModel};

fn main() {
    let n = 3;
    let max_size = 8;
    let models: Vec<(&str, Box<dyn CrystalModel>)> = vec![
        (
            "ladder",
            Box::new(ArmModel::new(ArmSequence::berg(n, 3).unwrap())),
        ),
        (
            "prefix (1,3,4)",
            Box::new(ArmModel::new(ArmSequence::new(n, vec![1, 3, 4]).unwrap())),
        ),
        ("restricted", Box::new(RestrictedModel::new(n))),
        ("regular", Box::new(RegularModel::new(n))),
    ];
    let graphs: Vec<(&str, CrystalGraph)> = models
        .iter()
        .map(|(name, m)| (*name, CrystalGraph::generate(m.as_ref(), max_size).unwrap()))
        .collect();

    for (idx, (name_a, ga)) in graphs.iter().enumerate() {
        for (name_b, gb) in &graphs[idx + 1..] {
            match ga.isomorphic(gb).unwrap() {
                Some(map) => {
                    // Show where the first nonempty vertex lands.
                    let sample = (0..map.len())
                        .find(|&u| !ga.vertex(u).payload.is_empty())
                        .map(|u| {
                            format!(
                                "({}) -> ({})",
                                ga.vertex(u).payload,
                                gb.vertex(map[u]).payload
                            )
                        })
                        .unwrap_or_default();
                    println!("{:<16} ~ {:<16} e.g. {}", name_a, name_b, sample);
                }
                None => println!("{:<16} !~ {}", name_a, name_b),
            }
        }
    }

    // The vertex SETS differ even though the crystals agree.
    let ladder: std::collections::BTreeSet<_> = graphs[0]
        .1
        .vertices()
        .iter()
        .map(|v| v.payload.clone())
        .collect();
    let regular: std::collections::BTreeSet<_> = graphs[3]
        .1
        .vertices()
        .iter()
        .map(|v| v.payload.clone())
        .collect();
    let only_ladder: Vec<_> = ladder.difference(&regular).take(4).collect();
    let only_regular: Vec<_> = regular.difference(&ladder).take(4).collect();
    println!(
        "\nin the ladder model but not the regular one: {:?}",
        only_ladder
    );
    println!(
        "in the regular model but not the ladder one: {:?}",
        only_regular
    );
}
