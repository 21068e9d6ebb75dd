//! Witness partitions separating different arm-sequence models.
//!
//! Run with: cargo run --example distinct_models

use crystal_models::arm_seq::ArmSequence;
use crystal_models::models::{distinct_sets, witness};
use crystal_models::reg_crystal::is_a_regular;

fn main() {
    let n = 3;
    let pairs = [
        (vec![1, 2, 3, 4], vec![2, 4, 6, 8]),
        (vec![1, 2, 3, 4], vec![0, 1, 2, 3]),
        (vec![1, 2, 3, 4], vec![1, 3, 4, 6]),
        (vec![1, 3, 4, 6], vec![1, 2, 4, 5]),
    ];
    for (pa, pb) in pairs {
        let a = ArmSequence::new(n, pa).unwrap();
        let b = ArmSequence::new(n, pb).unwrap();
        let w = witness(&a, &b).unwrap();
        let side = if is_a_regular(&w, &a).unwrap() {
            "first"
        } else {
            "second"
        };
        println!(
            "{} vs {}: witness ({}) is regular for the {} sequence only",
            a, b, w, side
        );
        let brute = distinct_sets(&a, &b, 10).unwrap();
        println!(
            "  brute-force scan up to 10 found: {:?}",
            brute.map(|p| p.to_string())
        );
    }

    // Identical prefixes cannot be separated.
    let a = ArmSequence::berg(n, 4).unwrap();
    println!(
        "\nladder vs ladder: {:?}",
        witness(&a, &a).unwrap_err().to_string()
    );
}
