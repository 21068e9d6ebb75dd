//! The arm-sequence partition model: illegal hooks, the node order, crystal
//! operators and weights.
//!
//! Fix `n >= 3` and an arm sequence `A`.  A partition is *A-regular* when no
//! node has hook length `nt` with arm length exactly `A_t`.  Two distinct
//! nodes of the same residue have axial distance `(b-a) + (c-d) = nt`;
//! orienting so `t >= 0`, node `(a,c)` sits above `(b,d)` iff `c - d > A_t`
//! (with `A_0 = 0`).  Listing the addable/removable `i`-nodes of a partition
//! in decreasing order and writing `+` for addable, `-` for removable gives
//! the `i`-signature; the raising operator removes the node at the good
//! position, the lowering operator adds the node at the cogood position.
//! Both preserve A-regularity and are mutually inverse.
//!
//! Weights live in the lattice spanned by the fundamental weights and the
//! null root: `wt(lambda) = Lambda_0 - sum_i c_i alpha_i` with `c_i` the
//! number of `i`-nodes and `alpha_i = 2 Lambda_i - Lambda_{i-1} -
//! Lambda_{i+1} + [i = 0] delta`.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arm_seq::ArmSequence;
use crate::partition::{BoundaryKind, Node, Partition};
use crate::pm_seq::{Sign, SignSeq};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ModelError {
    #[error("arm sequence prefix has {available} terms but {required} are required here")]
    PrefixTooShort { required: usize, available: usize },
    #[error("nodes {x} and {y} have different residues mod {n}")]
    ResidueMismatch { x: Node, y: Node, n: u32 },
    #[error("partition ({partition}) is not in the model {model}")]
    NotInModel { partition: String, model: String },
    #[error("residue {i} out of range for n = {n}")]
    BadResidue { i: u32, n: u32 },
}

/// An integral weight written in the basis of fundamental weights plus the
/// null root: `sum_i lambda[i] * Lambda_i + delta * d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Weight {
    pub lambda: Vec<i64>,
    pub delta: i64,
}

impl Weight {
    /// The highest weight `Lambda_0`.
    pub fn highest(n: u32) -> Weight {
        let mut lambda = vec![0; n as usize];
        lambda[0] = 1;
        Weight { lambda, delta: 0 }
    }

    pub fn n(&self) -> u32 {
        self.lambda.len() as u32
    }

    /// `<h_i, w>`: the simple coroots pair trivially with the null root, so
    /// this is just the `Lambda_i` coefficient.
    pub fn pairing(&self, i: u32) -> i64 {
        self.lambda[(i % self.n()) as usize]
    }

    /// Sum of the fundamental-weight coefficients.
    pub fn level(&self) -> i64 {
        self.lambda.iter().sum()
    }

    pub fn add_alpha(&self, i: u32) -> Weight {
        self.shift_alpha(i, 1)
    }

    pub fn sub_alpha(&self, i: u32) -> Weight {
        self.shift_alpha(i, -1)
    }

    fn shift_alpha(&self, i: u32, times: i64) -> Weight {
        let n = self.n() as usize;
        let i = (i as usize) % n;
        let mut lambda = self.lambda.clone();
        lambda[i] += 2 * times;
        lambda[(i + 1) % n] -= times;
        lambda[(i + n - 1) % n] -= times;
        let delta = self.delta + if i == 0 { times } else { 0 };
        Weight { lambda, delta }
    }
}

/// `wt(lambda) = Lambda_0 - sum_i c_i alpha_i`.
pub fn weight_of(p: &Partition, n: u32) -> Weight {
    let mut w = Weight::highest(n);
    for (i, &count) in p.residue_counts(n).iter().enumerate() {
        w = w.shift_alpha(i as u32, -(count as i64));
    }
    w
}

/// Prefix length needed to handle partitions of the given size: node
/// comparisons reach axial distance at most `size + 1` and hook scans reach
/// hook length at most `size`.
pub fn required_prefix(n: u32, size: u32) -> usize {
    ((size + 1) / n) as usize
}

/// First node (row-major) whose hook has length `nt` and arm length `A_t`,
/// together with that `t`.
pub fn find_illegal_hook(
    p: &Partition,
    arm: &ArmSequence,
) -> Result<Option<(Node, u32)>, ModelError> {
    let n = arm.n();
    let required = (p.size() / n) as usize;
    if arm.len() < required {
        return Err(ModelError::PrefixTooShort {
            required,
            available: arm.len(),
        });
    }
    for node in p.nodes() {
        let hook = p.hook(node).expect("node of the diagram");
        if hook.length.is_multiple_of(n) {
            let t = hook.length / n;
            if hook.arm as i64 == arm.get(t as usize).expect("t within prefix") {
                return Ok(Some((node, t)));
            }
        }
    }
    Ok(None)
}

pub fn is_a_regular(p: &Partition, arm: &ArmSequence) -> Result<bool, ModelError> {
    Ok(find_illegal_hook(p, arm)?.is_none())
}

/// Total order on nodes of one residue class: `Greater` means the first
/// node is above the second.
pub fn node_cmp(x: Node, y: Node, arm: &ArmSequence) -> Result<Ordering, ModelError> {
    if x == y {
        return Ok(Ordering::Equal);
    }
    let n = arm.n();
    if x.residue(n) != y.residue(n) {
        return Err(ModelError::ResidueMismatch { x, y, n });
    }
    let dist = (y.row as i64 - x.row as i64) + (x.col as i64 - y.col as i64);
    debug_assert_eq!(dist.rem_euclid(n as i64), 0);
    let (hi, lo, dist) = if dist >= 0 {
        (x, y, dist)
    } else {
        (y, x, -dist)
    };
    let t = (dist / n as i64) as usize;
    let a_t = arm.get(t).ok_or(ModelError::PrefixTooShort {
        required: t,
        available: arm.len(),
    })?;
    let hi_above = hi.col as i64 - lo.col as i64 > a_t;
    Ok(match (hi_above, hi == x) {
        (true, true) | (false, false) => Ordering::Greater,
        (true, false) | (false, true) => Ordering::Less,
    })
}

/// Addable/removable `i`-nodes in decreasing node order, with `+` for
/// addable and `-` for removable.
///
/// Defined for every partition; the crystal operators additionally demand
/// A-regularity.
pub fn signature(
    p: &Partition,
    i: u32,
    arm: &ArmSequence,
) -> Result<(Vec<Node>, SignSeq), ModelError> {
    let n = arm.n();
    if i >= n {
        return Err(ModelError::BadResidue { i, n });
    }
    let required = required_prefix(n, p.size());
    if arm.len() < required {
        return Err(ModelError::PrefixTooShort {
            required,
            available: arm.len(),
        });
    }
    let mut boundary = p.boundary_nodes(n, i);
    boundary.sort_by(|(a, _), (b, _)| {
        node_cmp(*b, *a, arm).expect("same residue, prefix length pre-checked")
    });
    let nodes = boundary.iter().map(|(node, _)| *node).collect();
    let seq = boundary
        .iter()
        .map(|(_, kind)| match kind {
            BoundaryKind::Addable => Sign::Plus,
            BoundaryKind::Removable => Sign::Minus,
        })
        .collect();
    Ok((nodes, seq))
}

/// Partition models that expose crystal operators on a subset of partitions.
pub trait CrystalModel {
    fn n(&self) -> u32;

    /// Human-readable model name, used in reports.
    fn describe(&self) -> String;

    /// Fail fast when the model cannot handle partitions up to `max_size`
    /// (an arm-sequence prefix that is too short).
    fn ensure_supports(&self, _max_size: u32) -> Result<(), ModelError> {
        Ok(())
    }

    /// Membership test for the model's vertex set.
    fn contains(&self, p: &Partition) -> Result<bool, ModelError>;

    /// Lowering operator: adds the cogood node, `None` at the end of a string.
    fn f_tilde(&self, p: &Partition, i: u32) -> Result<Option<Partition>, ModelError>;

    /// Raising operator: removes the good node, `None` at a source.
    fn e_tilde(&self, p: &Partition, i: u32) -> Result<Option<Partition>, ModelError>;

    /// String statistics `(epsilon_i, phi_i)`, computed intrinsically so
    /// they stay valid on truncation frontiers.
    fn eps_phi(&self, p: &Partition, i: u32) -> Result<(u32, u32), ModelError>;

    fn weight(&self, p: &Partition) -> Weight {
        weight_of(p, self.n())
    }
}

/// The model attached to an arm sequence.
#[derive(Clone, Debug)]
pub struct ArmModel {
    arm: ArmSequence,
}

impl ArmModel {
    pub fn new(arm: ArmSequence) -> Self {
        ArmModel { arm }
    }

    pub fn arm(&self) -> &ArmSequence {
        &self.arm
    }

    fn checked_signature(&self, p: &Partition, i: u32) -> Result<(Vec<Node>, SignSeq), ModelError> {
        if !self.contains(p)? {
            return Err(ModelError::NotInModel {
                partition: p.to_string(),
                model: self.describe(),
            });
        }
        signature(p, i, &self.arm)
    }
}

impl CrystalModel for ArmModel {
    fn n(&self) -> u32 {
        self.arm.n()
    }

    fn describe(&self) -> String {
        format!("R_A with {}", self.arm)
    }

    fn ensure_supports(&self, max_size: u32) -> Result<(), ModelError> {
        let required = required_prefix(self.arm.n(), max_size);
        if self.arm.len() < required {
            return Err(ModelError::PrefixTooShort {
                required,
                available: self.arm.len(),
            });
        }
        Ok(())
    }

    fn contains(&self, p: &Partition) -> Result<bool, ModelError> {
        is_a_regular(p, &self.arm)
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
        let analysis = seq.analyze();
        Ok((analysis.epsilon, analysis.phi))
    }
}
