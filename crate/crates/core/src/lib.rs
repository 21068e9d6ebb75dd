//! Partition models of the basic affine crystal.
//!
//! For each `n >= 3`, every *arm sequence* `A` (an integer sequence with
//! `t-1 <= A_t <= (n-1)t` and `A_{t+u} - A_t - A_u` always 0 or 1) determines
//! a family of partitions without "illegal hooks" (hooks of length `nt`
//! whose arm length is exactly `A_t`), together with raising and lowering
//! operators indexed by residues mod `n`.  Each of these partition families
//! carries the structure of the highest-weight crystal with highest weight
//! `Lambda_0`, and different arm sequences give genuinely different models.
//! The classical `n`-restricted and `n`-regular models and the ladder
//! crystal are special cases.
//!
//! This crate implements the whole toolkit around that family:
//!
//! - [`pm_seq`]: the sign-sequence calculus (words over `{+, 0, -}` with
//!   partial-sum statistics, good/cogood positions, reduction, concatenation)
//!   that drives every operator definition;
//! - [`partition`]: partitions, Young-diagram nodes, residues, hooks,
//!   conjugation, and a brute-force partition enumerator;
//! - [`arm_seq`]: validated arm-sequence prefixes, the canonical families
//!   `A^{y,+}` / `A^{y,-}`, limit intervals, and extreme sequences;
//! - [`reg_crystal`]: illegal hooks, the node order used to sort signatures,
//!   the crystal operators and weights of the arm-sequence model;
//! - [`models`]: the classical restricted/regular models and distinctness
//!   witnesses separating any two arm-sequence models;
//! - [`crystal_graph`]: truncated crystal-graph generation, the crystal
//!   axioms, rank-2 component checks (commuting pairs and the local
//!   sl3 axioms), rooted isomorphism, tensor products, JSON/DOT export;
//! - [`biorder`]: two-order colored sets, their configuration crystals,
//!   the good-configuration axioms, and the domino construction that maps
//!   rank-2 components of the partition models onto good configurations;
//! - [`cli`]: the batch command-line surface.
//!
//! Each `examples/*.rs` file is a runnable tour of one capability; the
//! `crystal-models` binary exposes the same operations as subcommands.

pub mod arm_seq;
pub mod biorder;
pub mod cli;
pub mod crystal_graph;
pub mod limits;
pub mod models;
pub mod partition;
pub mod pm_seq;
pub mod reg_crystal;

pub use arm_seq::{ArmSequence, CanonicalSign, Extremity, LimitInterval, Ratio};
pub use biorder::{Biorder, ComponentBiorder, Configuration};
pub use crystal_graph::CrystalGraph;
pub use models::{ModelSpec, RegularModel, RestrictedModel};
pub use partition::{Node, Partition};
pub use pm_seq::{Sign, SignAnalysis, SignSeq};
pub use reg_crystal::{ArmModel, CrystalModel, Weight};
