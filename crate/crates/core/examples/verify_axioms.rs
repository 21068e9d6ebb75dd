//! Check the crystal axioms and rank-2 components of a generated model.
//!
//! Run with: cargo run --example verify_axioms

use crystal_models::arm_seq::ArmSequence;
use crystal_models::crystal_graph::CrystalGraph;
use crystal_models::reg_crystal::ArmModel;

fn main() {
    let n = 4;
    let arm = ArmSequence::berg(n, 3).unwrap();
    let graph = CrystalGraph::generate(&ArmModel::new(arm), 10).unwrap();

    let report = graph.verify_axioms();
    println!(
        "axioms on {} vertices: {}",
        graph.num_vertices(),
        if report.is_ok() { "ok" } else { "FAILED" }
    );

    let sources = graph.sources();
    println!(
        "sources: {:?}",
        sources
            .iter()
            .map(|&v| graph.vertex(v).payload.as_str())
            .collect::<Vec<_>>()
    );

    // Non-adjacent labels commute; adjacent ones satisfy the local axioms.
    for i in 0..n {
        for j in i + 1..n {
            let adjacent = (i + 1) % n == j || (j + 1) % n == i;
            let mut complete = 0;
            let mut skipped = 0;
            let mut failures = 0;
            for component in graph.rank2(i, j) {
                if !component.complete {
                    skipped += 1;
                    continue;
                }
                complete += 1;
                let ok = if adjacent {
                    graph.check_local_axioms(&component).unwrap().is_ok()
                } else {
                    graph.check_commuting(&component).unwrap().is_empty()
                };
                if !ok {
                    failures += 1;
                }
            }
            println!(
                "labels ({},{}) [{}]: {} complete ok, {} failures, {} incomplete skipped",
                i,
                j,
                if adjacent {
                    "local axioms"
                } else {
                    "commuting"
                },
                complete - failures,
                failures,
                skipped
            );
        }
    }
}
