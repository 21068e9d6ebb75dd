//! Shared helpers for the integration suites: a deterministic PRNG,
//! random biorders and sign sequences, and the model lists under test.

#![allow(dead_code)]

use crystal_models::arm_seq::{ArmSequence, CanonicalSign, Ratio};
use crystal_models::biorder::{Biorder, Color};
use crystal_models::models::{RegularModel, RestrictedModel};
use crystal_models::pm_seq::{Sign, SignSeq};
use crystal_models::reg_crystal::{required_prefix, ArmModel, CrystalModel};

/// SplitMix64: tiny, seedable, stable across platforms.
pub struct Rng(u64);

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng(seed)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, n: usize) -> usize {
        (self.next_u64() % n as u64) as usize
    }

    pub fn shuffled(&mut self, n: usize) -> Vec<usize> {
        let mut out: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            out.swap(i, self.below(i + 1));
        }
        out
    }
}

/// Seed for the randomized suites; `CRYSTAL_TEST_SEED` overrides the
/// default.  Every suite that samples prints the seed it used.
pub fn seed() -> u64 {
    std::env::var("CRYSTAL_TEST_SEED")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(0xC0FF_EE11)
}

pub fn random_sign_seq(rng: &mut Rng, max_len: usize) -> SignSeq {
    let len = rng.below(max_len + 1);
    (0..len)
        .map(|_| match rng.below(3) {
            0 => Sign::Plus,
            1 => Sign::Zero,
            _ => Sign::Minus,
        })
        .collect()
}

/// Random biorder by rejection: draw two random total orders, force the
/// colors the axiom demands, color the rest randomly, resample on conflict.
pub fn random_biorder(rng: &mut Rng, size: usize) -> Biorder {
    assert!(size >= 1);
    'attempt: loop {
        let order_i = rng.shuffled(size);
        let order_j = rng.shuffled(size);
        let mut rank_i = vec![0usize; size];
        let mut rank_j = vec![0usize; size];
        for (pos, &id) in order_i.iter().enumerate() {
            rank_i[id] = pos;
        }
        for (pos, &id) in order_j.iter().enumerate() {
            rank_j[id] = pos;
        }
        let mut forced: Vec<Option<Color>> = vec![None; size];
        for s in 0..size {
            for t in 0..size {
                if s != t && rank_i[s] < rank_i[t] && rank_j[t] < rank_j[s] {
                    for (element, color) in [(s, Color::J), (t, Color::I)] {
                        match forced[element] {
                            Some(existing) if existing != color => continue 'attempt,
                            _ => forced[element] = Some(color),
                        }
                    }
                }
            }
        }
        let colors = forced
            .into_iter()
            .map(|c| {
                c.unwrap_or_else(|| {
                    if rng.below(2) == 0 {
                        Color::I
                    } else {
                        Color::J
                    }
                })
            })
            .collect();
        let names = (0..size).map(|k| format!("s{}", k)).collect();
        return Biorder::new(names, order_i, order_j, colors)
            .expect("forced coloring satisfies the axiom");
    }
}

/// A split biorder assembled from two random factors: every element of the
/// first factor dominates every element of the second.
pub fn random_split_biorder(rng: &mut Rng, k1: usize, k2: usize) -> (Biorder, Biorder, Biorder) {
    let left = random_biorder(rng, k1);
    let right = random_biorder(rng, k2);
    let names = (0..k1 + k2).map(|k| format!("s{}", k)).collect();
    let glue = |h: Color| {
        let mut order = left.order(h).to_vec();
        order.extend(right.order(h).iter().map(|&id| id + k1));
        order
    };
    let order_i = glue(Color::I);
    let order_j = glue(Color::J);
    let colors = (0..k1 + k2)
        .map(|s| {
            if s < k1 {
                left.color(s)
            } else {
                right.color(s - k1)
            }
        })
        .collect();
    let combined =
        Biorder::new(names, order_i, order_j, colors).expect("stacked biorders satisfy the axiom");
    (combined, left, right)
}

pub struct NamedModel {
    pub name: String,
    pub model: Box<dyn CrystalModel>,
}

fn arm_named(name: &str, arm: ArmSequence) -> NamedModel {
    NamedModel {
        name: name.to_string(),
        model: Box::new(ArmModel::new(arm)),
    }
}

/// The arm-sequence models exercised by the vertex-count and closure
/// suites, materialized with prefixes long enough for `max_size`.
pub fn arm_models(n: u32, max_size: u32) -> Vec<NamedModel> {
    let len = required_prefix(n, max_size).max(1);
    let mut out = vec![
        arm_named("A^{1,+}", ArmSequence::berg(n, len).unwrap()),
        arm_named("A^{1,-}", ArmSequence::lower_extreme(n, len).unwrap()),
        arm_named("A^{n-1,+}", ArmSequence::restricted(n, len).unwrap()),
    ];
    match n {
        3 => {
            // The unique arm-sequence extension of the prefix (1,3,4).
            let mut prefix = vec![1, 3, 4, 6, 7, 9];
            prefix.truncate(len.max(3));
            out.push(arm_named(
                "prefix:1,3,4",
                ArmSequence::new(3, prefix).unwrap(),
            ));
        }
        4 => {
            for sign in [CanonicalSign::Plus, CanonicalSign::Minus] {
                let tag = match sign {
                    CanonicalSign::Plus => "A^{3/2,+}",
                    CanonicalSign::Minus => "A^{3/2,-}",
                };
                out.push(arm_named(
                    tag,
                    ArmSequence::canonical(n, Ratio::new(3, 2), sign, len).unwrap(),
                ));
            }
        }
        _ => {}
    }
    out
}

/// Arm models plus the two classical models.
pub fn all_models(n: u32, max_size: u32) -> Vec<NamedModel> {
    let mut out = arm_models(n, max_size);
    out.push(NamedModel {
        name: "restricted".into(),
        model: Box::new(RestrictedModel::new(n)),
    });
    out.push(NamedModel {
        name: "regular".into(),
        model: Box::new(RegularModel::new(n)),
    });
    out
}

/// The three-element biorder behind the worked configuration example:
/// `r >_i p >_i q`, `p >_j q >_j r`, colors `(p, q, r) = (i, i, j)`.
pub fn three_element_biorder() -> Biorder {
    Biorder::new(
        vec!["p".into(), "q".into(), "r".into()],
        vec![2, 0, 1],
        vec![0, 1, 2],
        vec![Color::I, Color::I, Color::J],
    )
    .unwrap()
}
