//! Arm sequences: validation, canonical families, limit intervals.
//!
//! Run with: cargo run --example arm_sequences

use crystal_models::arm_seq::{ArmSequence, CanonicalSign, Ratio};

fn main() {
    // The ladder sequence and the two extremes for n = 3.
    for (label, arm) in [
        ("A^{1,+} (ladder)", ArmSequence::berg(3, 6).unwrap()),
        (
            "A^{1,-} (lower extreme)",
            ArmSequence::lower_extreme(3, 6).unwrap(),
        ),
        (
            "A^{2,+} (upper extreme)",
            ArmSequence::restricted(3, 6).unwrap(),
        ),
    ] {
        let li = arm.limit_interval();
        println!(
            "{:<24} {:?} extreme: {:?}, limit in [{}, {}]",
            label,
            arm.prefix(),
            arm.is_extreme(),
            li.lo,
            li.hi
        );
    }
    println!();

    // A rational limit produces two sequences, differing exactly at the
    // multiples of the denominator.
    let plus = ArmSequence::canonical(4, Ratio::new(3, 2), CanonicalSign::Plus, 8).unwrap();
    let minus = ArmSequence::canonical(4, Ratio::new(3, 2), CanonicalSign::Minus, 8).unwrap();
    println!("A^{{3/2,+}} = {:?}", plus.prefix());
    println!("A^{{3/2,-}} = {:?}", minus.prefix());
    println!();

    // Validation pinpoints the first broken axiom.
    match ArmSequence::new(3, vec![1, 4]) {
        Err(err) => println!("(1,4) rejected: {}", err),
        Ok(_) => unreachable!(),
    }
    match ArmSequence::new(3, vec![1, 2, 7]) {
        Err(err) => println!("(1,2,7) rejected: {}", err),
        Ok(_) => unreachable!(),
    }
}
