//! Sign-sequence calculus: statistics, good/cogood positions, reduction.
//!
//! Run with: cargo run --example sign_sequences

use crystal_models::pm_seq::SignSeq;

fn main() {
    let pi: SignSeq = "-+0--00++0-0-++0-".parse().unwrap();
    let analysis = pi.analyze();

    println!("word:     {}", pi);
    println!("epsilon:  {}", analysis.epsilon);
    println!("phi:      {}", analysis.phi);
    println!("good:     {:?}", analysis.good_pos);
    println!("cogood:   {:?}", analysis.cogood_pos);
    println!("reduced:  {}", pi.reduce());
    println!();

    // phi - epsilon is always the sum of the entries.
    assert_eq!(analysis.phi as i64 - analysis.epsilon as i64, pi.total());

    // Concatenation: when phi(left) >= epsilon(right), the left word decides
    // the epsilon statistics of the whole.
    let left: SignSeq = "++-".parse().unwrap();
    let right: SignSeq = "-0+".parse().unwrap();
    let both = left.concat(&right);
    println!("left:   {}  (phi = {})", left, left.analyze().phi);
    println!("right:  {}  (epsilon = {})", right, right.analyze().epsilon);
    println!(
        "concat: {}  (epsilon = {}, left's epsilon = {})",
        both,
        both.analyze().epsilon,
        left.analyze().epsilon
    );
}
