//! Generate the crystal graph of an arm-sequence model and export it.
//!
//! Run with: cargo run --example generate_crystal

use crystal_models::arm_seq::ArmSequence;
use crystal_models::crystal_graph::CrystalGraph;
use crystal_models::reg_crystal::ArmModel;

fn main() {
    let arm = ArmSequence::new(3, vec![1, 3, 4]).unwrap();
    let model = ArmModel::new(arm);
    let graph = CrystalGraph::generate(&model, 9).unwrap();

    println!(
        "crystal for A = (1,3,4): {} vertices, {} edges up to size 9",
        graph.num_vertices(),
        graph.edges().len()
    );
    for m in 0..=9u32 {
        let members: Vec<&str> = graph
            .vertices()
            .iter()
            .filter(|v| v.size == m)
            .map(|v| v.payload.as_str())
            .collect();
        println!(
            "  size {}: {:>2}  [{}]",
            m,
            members.len(),
            members.join(" | ")
        );
    }

    // The first few lines of the deterministic DOT rendering.
    println!("\nDOT preview:");
    for line in graph.to_dot().lines().take(8) {
        println!("  {}", line);
    }
    println!("  ...");
}
