//! Classical partition models and distinctness witnesses.
//!
//! The `n`-restricted model sorts the boundary nodes of one residue by
//! increasing column, the `n`-regular model by decreasing column; everything
//! else (signs, good/cogood positions, adding/removing) is as in the
//! arm-sequence model.  The restricted model coincides pointwise with the
//! arm model of the upper extreme sequence `A_t = (n-1)t`; the regular model
//! is defined directly and is not identified with any strict arm model.
//!
//! [`witness`] separates two distinct arm sequences constructively: a single
//! row `(n)` or column `(1^n)` handles the extremes, and otherwise the hook
//! partition `(A'_u + 1, 1^{nu - A'_u - 1})` at the first differing index
//! `u` is regular for exactly one of the two sequences.  [`distinct_sets`]
//! is the brute-force counterpart used to cross-check it.

use std::str::FromStr;

use thiserror::Error;

use crate::arm_seq::{ArmSequence, ArmSequenceError, Extremity};
use crate::partition::{partitions_of, BoundaryKind, Node, Partition, PartitionError};
use crate::pm_seq::{Sign, SignSeq};
use crate::reg_crystal::{find_illegal_hook, ArmModel, CrystalModel, ModelError};

/// Which model to run: an arm-sequence model or one of the two classical
/// ones.
#[derive(Clone, Debug)]
pub enum ModelSpec {
    Arm(ArmSequence),
    Restricted(u32),
    Regular(u32),
}

#[derive(Debug, Error)]
pub enum ModelSpecError {
    #[error(transparent)]
    Arm(#[from] ArmSequenceError),
    #[error("invalid model spec {0:?}: expected 'regular', 'restricted', 'berg', 'colregular', 'prefix:...' or 'canonical:...'")]
    Unknown(String),
}

impl ModelSpec {
    /// Parse a CLI model spec.  `alias_len` sizes the prefixes materialized
    /// for named arm sequences.
    pub fn parse(
        n: u32,
        text: &str,
        broad: bool,
        alias_len: usize,
    ) -> Result<Self, ModelSpecError> {
        match text {
            "regular" => Ok(ModelSpec::Regular(n)),
            "restricted" => Ok(ModelSpec::Restricted(n)),
            _ => match ArmSequence::parse_spec(n, text, broad, alias_len) {
                Ok(arm) => Ok(ModelSpec::Arm(arm)),
                Err(ArmSequenceError::Parse { .. }) => {
                    Err(ModelSpecError::Unknown(text.to_string()))
                }
                Err(e) => Err(e.into()),
            },
        }
    }

    pub fn build(&self) -> Box<dyn CrystalModel> {
        match self {
            ModelSpec::Arm(arm) => Box::new(ArmModel::new(arm.clone())),
            ModelSpec::Restricted(n) => Box::new(RestrictedModel::new(*n)),
            ModelSpec::Regular(n) => Box::new(RegularModel::new(*n)),
        }
    }

    pub fn n(&self) -> u32 {
        match self {
            ModelSpec::Arm(arm) => arm.n(),
            ModelSpec::Restricted(n) | ModelSpec::Regular(n) => *n,
        }
    }
}

fn column_signature(p: &Partition, n: u32, i: u32, descending: bool) -> (Vec<Node>, SignSeq) {
    let mut boundary = p.boundary_nodes(n, i);
    if descending {
        boundary.reverse();
    }
    let nodes = boundary.iter().map(|(node, _)| *node).collect();
    let seq = boundary
        .iter()
        .map(|(_, kind)| match kind {
            BoundaryKind::Addable => Sign::Plus,
            BoundaryKind::Removable => Sign::Minus,
        })
        .collect();
    (nodes, seq)
}

macro_rules! classical_model {
    ($name:ident, $pred:ident, $descending:expr, $label:literal) => {
        #[derive(Clone, Copy, Debug)]
        pub struct $name {
            n: u32,
        }

        impl $name {
            pub fn new(n: u32) -> Self {
                assert!(n >= 3, "n must be at least 3");
                $name { n }
            }

            fn checked_signature(
                &self,
                p: &Partition,
                i: u32,
            ) -> Result<(Vec<Node>, SignSeq), ModelError> {
                if i >= self.n {
                    return Err(ModelError::BadResidue { i, n: self.n });
                }
                if !p.$pred(self.n) {
                    return Err(ModelError::NotInModel {
                        partition: p.to_string(),
                        model: self.describe(),
                    });
                }
                Ok(column_signature(p, self.n, i, $descending))
            }
        }

        impl CrystalModel for $name {
            fn n(&self) -> u32 {
                self.n
            }

            fn describe(&self) -> String {
                format!(concat!($label, " (n = {})"), self.n)
            }

            fn contains(&self, p: &Partition) -> Result<bool, ModelError> {
                Ok(p.$pred(self.n))
            }

            fn f_tilde(&self, p: &Partition, i: u32) -> Result<Option<Partition>, ModelError> {
                let (nodes, seq) = self.checked_signature(p, i)?;
                Ok(seq.analyze().cogood_pos.map(|pos| {
                    p.add_node(nodes[pos - 1])
                        .expect("cogood position holds an addable node")
                }))
            }

            fn e_tilde(&self, p: &Partition, i: u32) -> Result<Option<Partition>, ModelError> {
                let (nodes, seq) = self.checked_signature(p, i)?;
                Ok(seq.analyze().good_pos.map(|pos| {
                    p.remove_node(nodes[pos - 1])
                        .expect("good position holds a removable node")
                }))
            }

            fn eps_phi(&self, p: &Partition, i: u32) -> Result<(u32, u32), ModelError> {
                let (_, seq) = self.checked_signature(p, i)?;
                let a = seq.analyze();
                Ok((a.epsilon, a.phi))
            }
        }
    };
}

classical_model!(RestrictedModel, is_restricted, false, "n-restricted model");
classical_model!(RegularModel, is_regular, true, "n-regular model");

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WitnessError {
    #[error("arm sequences have different moduli: {0} vs {1}")]
    DifferentModulus(u32, u32),
    #[error("broadened arm sequences are not supported by the witness search")]
    Broadened,
    #[error("no witness found: prefixes agree on the comparable range (length {0})")]
    NoDifference(usize),
    #[error("witness self-check failed for ({0})")]
    SelfCheckFailed(String),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Partition(#[from] PartitionError),
}

/// A partition lying in exactly one of the two regular sets.
///
/// If either sequence is an extreme, the witness is `(n)` (upper) or
/// `(1^n)` (lower).  Otherwise the hook partition built from the second
/// sequence at the first differing index is regular for the first sequence
/// only.  The result is re-verified against [`find_illegal_hook`] on both
/// sides before being returned.
pub fn witness(a: &ArmSequence, b: &ArmSequence) -> Result<Partition, WitnessError> {
    if a.n() != b.n() {
        return Err(WitnessError::DifferentModulus(a.n(), b.n()));
    }
    if a.is_broad() || b.is_broad() {
        return Err(WitnessError::Broadened);
    }
    let n = a.n();
    let comparable = a.len().min(b.len());
    let first_diff = (1..=comparable).find(|&t| a.get(t) != b.get(t));
    let u = match first_diff {
        Some(u) => u,
        None => return Err(WitnessError::NoDifference(comparable)),
    };

    let candidate = if a.is_extreme() == Extremity::Upper || b.is_extreme() == Extremity::Upper {
        Partition::from_str(&n.to_string())?
    } else if a.is_extreme() == Extremity::Lower || b.is_extreme() == Extremity::Lower {
        Partition::new(vec![1; n as usize])?
    } else {
        // (A'_u + 1, 1^{nu - A'_u - 1}) using the second sequence's value.
        let b_u = b.get(u).expect("u within both prefixes");
        let mut parts = vec![b_u as u32 + 1];
        parts.extend(std::iter::repeat_n(
            1,
            (n as i64 * u as i64 - b_u - 1) as usize,
        ));
        Partition::new(parts)?
    };

    let in_a = find_illegal_hook(&candidate, a)?.is_none();
    let in_b = find_illegal_hook(&candidate, b)?.is_none();
    if in_a == in_b {
        return Err(WitnessError::SelfCheckFailed(candidate.to_string()));
    }
    Ok(candidate)
}

/// Brute-force membership-disagreement scan over all partitions of size up
/// to `bound`; the oracle against which [`witness`] is validated.
pub fn distinct_sets(
    a: &ArmSequence,
    b: &ArmSequence,
    bound: u32,
) -> Result<Option<Partition>, WitnessError> {
    if a.n() != b.n() {
        return Err(WitnessError::DifferentModulus(a.n(), b.n()));
    }
    for m in 0..=bound {
        for lam in partitions_of(m)? {
            if find_illegal_hook(&lam, a)?.is_none() != find_illegal_hook(&lam, b)?.is_none() {
                return Ok(Some(lam));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reg_crystal::is_a_regular;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn restricted_operators() {
        let model = RestrictedModel::new(3);
        assert_eq!(model.f_tilde(&Partition::empty(), 0).unwrap(), Some(p("1")));
        assert_eq!(model.f_tilde(&p("1"), 1).unwrap(), Some(p("2")));
        assert_eq!(model.f_tilde(&p("1"), 2).unwrap(), Some(p("1,1")));
    }

    #[test]
    fn regular_model_rejects_irregular_input() {
        let model = RegularModel::new(3);
        assert!(matches!(
            model.f_tilde(&p("1,1,1"), 0),
            Err(ModelError::NotInModel { .. })
        ));
    }

    #[test]
    fn restricted_equals_upper_extreme_arm_model_pointwise() {
        let classical = RestrictedModel::new(3);
        let arm = ArmModel::new(ArmSequence::restricted(3, 5).unwrap());
        for m in 0..=12 {
            for lam in partitions_of(m).unwrap() {
                assert_eq!(
                    classical.contains(&lam).unwrap(),
                    arm.contains(&lam).unwrap(),
                    "membership differs at {:?}",
                    lam
                );
                if !classical.contains(&lam).unwrap() {
                    continue;
                }
                for i in 0..3 {
                    assert_eq!(
                        classical.f_tilde(&lam, i).unwrap(),
                        arm.f_tilde(&lam, i).unwrap()
                    );
                    assert_eq!(
                        classical.e_tilde(&lam, i).unwrap(),
                        arm.e_tilde(&lam, i).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn ladder_membership_matches_hook_ratio_characterization() {
        // Ladder-regular means no hook has length exactly n times its arm.
        let berg = ArmSequence::berg(3, 4).unwrap();
        for m in 0..=12 {
            for lam in partitions_of(m).unwrap() {
                let no_ratio_hook = lam.nodes().all(|node| {
                    let hook = lam.hook(node).unwrap();
                    hook.length != 3 * hook.arm
                });
                assert_eq!(is_a_regular(&lam, &berg).unwrap(), no_ratio_hook);
            }
        }
    }

    #[test]
    fn witness_examples() {
        // Upper extreme against anything smaller at t = 1.
        let upper = ArmSequence::restricted(3, 3).unwrap();
        let berg = ArmSequence::berg(3, 3).unwrap();
        assert_eq!(witness(&upper, &berg).unwrap(), p("3"));

        // Lower extreme.
        let lower = ArmSequence::lower_extreme(3, 3).unwrap();
        assert_eq!(witness(&lower, &berg).unwrap(), p("1,1,1"));

        // Generic: berg vs (1,3,4) differ first at u = 2; the hook partition
        // built from A'_2 = 3 is ladder-regular but not (1,3,4)-regular.
        let a134 = ArmSequence::new(3, vec![1, 3, 4]).unwrap();
        let w = witness(&berg, &a134).unwrap();
        assert_eq!(w, p("4,1,1"));
        assert!(is_a_regular(&w, &berg).unwrap());
        assert!(!is_a_regular(&w, &a134).unwrap());
    }

    #[test]
    fn witness_errors() {
        let berg3 = ArmSequence::berg(3, 3).unwrap();
        let berg4 = ArmSequence::berg(4, 3).unwrap();
        assert_eq!(
            witness(&berg3, &berg4),
            Err(WitnessError::DifferentModulus(3, 4))
        );
        assert_eq!(
            witness(&berg3, &ArmSequence::berg(3, 5).unwrap()),
            Err(WitnessError::NoDifference(3))
        );
        let broad = ArmSequence::new_broad(3, vec![1, 2]).unwrap();
        assert_eq!(
            witness(&broad, &ArmSequence::berg(3, 2).unwrap()),
            Err(WitnessError::Broadened)
        );
    }

    #[test]
    fn distinct_sets_oracle() {
        let berg = ArmSequence::berg(3, 4).unwrap();
        let upper = ArmSequence::restricted(3, 4).unwrap();
        let found = distinct_sets(&berg, &upper, 6).unwrap();
        assert!(found.is_some());
        assert_eq!(
            distinct_sets(&berg, &ArmSequence::berg(3, 4).unwrap(), 10).unwrap(),
            None
        );
    }
}
