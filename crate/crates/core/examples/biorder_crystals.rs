//! Configuration crystals of a biorder: components, goodness, local axioms.
//!
//! Run with: cargo run --example biorder_crystals

use crystal_models::biorder::{Biorder, Color, Configuration};

fn main() {
    // r >_i p >_i q and p >_j q >_j r force the colors (p, q, r) = (i, i, j).
    let biorder = Biorder::new(
        vec!["p".into(), "q".into(), "r".into()],
        vec![2, 0, 1],
        vec![0, 1, 2],
        vec![Color::I, Color::I, Color::J],
    )
    .unwrap();
    println!("{}", biorder.to_json());
    println!("transitive: {}", biorder.is_transitive());

    let graph = biorder.cc_graph().unwrap();
    println!(
        "\n{} configurations in {} components:",
        graph.num_vertices(),
        graph.components().len()
    );
    for (idx, component) in graph.components().iter().enumerate() {
        let parse = |v: usize| {
            Configuration::new(
                graph
                    .vertex(v)
                    .payload
                    .split(',')
                    .map(|x| x.parse().unwrap())
                    .collect(),
            )
        };
        let good = component
            .iter()
            .all(|&v| biorder.is_good(&parse(v)).is_ok());
        let sub = graph.subgraph(component);
        let report = sub.check_local_axioms(&sub.rank2(0, 1)[0]).unwrap();
        println!(
            "  component {}: {:>2} vertices, good: {:<5} sources: {}, local axioms: {}",
            idx + 1,
            component.len(),
            good,
            report.sources.len(),
            if report.is_ok() { "pass" } else { "FAIL" }
        );
        if let Some(first) = report.violations.first() {
            println!("    e.g. {}", first);
        }
    }

    // Good configurations form full components, so the restriction is a
    // crystal in its own right.
    let gc = biorder.gc_graph().unwrap();
    println!(
        "\ngood restriction: {} vertices, {} component(s), {} source(s)",
        gc.num_vertices(),
        gc.components().len(),
        gc.sources().len()
    );
}
