//! The domino construction: from a rank-2 partition component to good
//! configurations.
//!
//! Run with: cargo run --example domino_map

use crystal_models::arm_seq::ArmSequence;
use crystal_models::biorder::component_biorder;
use crystal_models::crystal_graph::CrystalGraph;
use crystal_models::reg_crystal::ArmModel;

fn main() {
    let arm = ArmSequence::new(3, vec![1, 3, 4, 6]).unwrap();
    let member = "3,1".parse().unwrap();
    let cb = component_biorder(&member, 0, &arm).unwrap();

    println!("member:  ({})", member);
    println!("labels:  i = {}, j = {}", cb.i, cb.j);
    println!("c_down:  ({})", cb.c_down);
    println!("c_up:    ({})", cb.c_up);
    println!("dominoes:");
    for (idx, d) in cb.dominoes.iter().enumerate() {
        println!(
            "  {}: {} {} {}",
            cb.biorder.name(idx),
            d.i_node,
            d.j_node,
            if d.horizontal {
                "horizontal"
            } else {
                "vertical"
            }
        );
    }

    // Walk the whole component at a truncation that keeps it complete and
    // tabulate the cell counts.
    let graph = CrystalGraph::generate(&ArmModel::new(arm.clone()), 11).unwrap();
    let root = graph.vertex_id(&member.to_string()).unwrap();
    let component = graph
        .rank2(cb.i, cb.j)
        .into_iter()
        .find(|c| c.vertices.contains(&root))
        .unwrap();
    println!("\ncomponent members and their configurations:");
    for &v in &component.vertices {
        let lam: crystal_models::partition::Partition = graph.vertex(v).payload.parse().unwrap();
        let image = cb.psi(&lam);
        println!(
            "  ({:<12}) -> ({})  good: {}",
            lam,
            image,
            cb.biorder.is_good(&image).is_ok()
        );
    }
}
