//! Partitions, Young diagrams, nodes, residues and hooks.
//!
//! A partition is stored as its weakly decreasing list of positive parts;
//! the empty partition has no parts.  Nodes `(row, col)` are 1-based with
//! rows increasing downwards, and the residue of a node is
//! `(col - row) mod n`.  The text form is comma-separated parts
//! (`"3,2,1,1"`), with the empty string denoting the empty partition; the
//! JSON form is a plain array of integers.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Cap on [`partitions_of`]; p(40) = 37338 is plenty for every desk-scale scan.
pub const ENUMERATION_BOUND: u32 = 40;

/// A cell of a Young diagram: `row` increases downwards, `col` rightwards,
/// both 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Node {
    pub row: u32,
    pub col: u32,
}

impl Node {
    pub fn new(row: u32, col: u32) -> Self {
        assert!(row >= 1 && col >= 1, "nodes are 1-based");
        Node { row, col }
    }

    /// Residue class `(col - row) mod n`, normalized to `0..n`.
    pub fn residue(&self, n: u32) -> u32 {
        (self.col as i64 - self.row as i64).rem_euclid(n as i64) as u32
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// Whether a boundary node can be added to or removed from a partition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundaryKind {
    Addable,
    Removable,
}

/// Hook data of a node inside a diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Hook {
    /// `lambda_a - c + lambda'_c - a + 1`.
    pub length: u32,
    /// Number of nodes strictly to the right: `lambda_a - c`.
    pub arm: u32,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PartitionError {
    #[error("parts must be weakly decreasing: part {0} followed by {1}")]
    NotDecreasing(u32, u32),
    #[error("node {0} lies outside the diagram")]
    OutsideDiagram(Node),
    #[error("partition enumeration is capped at {bound}, got {requested}")]
    EnumerationBound { requested: u32, bound: u32 },
    #[error("invalid partition text {text:?}: {reason}")]
    Parse { text: String, reason: String },
}

/// A weakly decreasing finite sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Build from parts; trailing zeros are stripped, anything not weakly
    /// decreasing is rejected.
    pub fn new(mut parts: Vec<u32>) -> Result<Self, PartitionError> {
        for w in parts.windows(2) {
            if w[0] < w[1] {
                return Err(PartitionError::NotDecreasing(w[0], w[1]));
            }
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn num_rows(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of nodes `|lambda|`.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Part in a 1-based row; 0 beyond the last row.
    pub fn part(&self, row: u32) -> u32 {
        if row == 0 {
            return 0;
        }
        self.parts.get(row as usize - 1).copied().unwrap_or(0)
    }

    pub fn contains(&self, node: Node) -> bool {
        node.col <= self.part(node.row)
    }

    /// All nodes of the diagram, row by row.
    pub fn nodes(&self) -> impl Iterator<Item = Node> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (1..=len).map(move |c| Node::new(r as u32 + 1, c)))
    }

    /// Column lengths: `lambda'_a = #{c : lambda_c >= a}`.
    pub fn conjugate(&self) -> Partition {
        let cols = self.part(1);
        let parts = (1..=cols)
            .map(|a| self.parts.iter().take_while(|&&p| p >= a).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Column length `lambda'_c`.
    pub fn col_length(&self, col: u32) -> u32 {
        if col == 0 {
            return 0;
        }
        self.parts.iter().take_while(|&&p| p >= col).count() as u32
    }

    /// The partition with `node` added, if the union is still a diagram.
    pub fn add_node(&self, node: Node) -> Option<Partition> {
        if !self.is_addable(node) {
            return None;
        }
        let mut parts = self.parts.clone();
        if node.row as usize > parts.len() {
            parts.push(1);
        } else {
            parts[node.row as usize - 1] += 1;
        }
        Some(Partition { parts })
    }

    /// The partition with `node` removed, if the complement is still a diagram.
    pub fn remove_node(&self, node: Node) -> Option<Partition> {
        if !self.is_removable(node) {
            return None;
        }
        let mut parts = self.parts.clone();
        parts[node.row as usize - 1] -= 1;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Some(Partition { parts })
    }

    pub fn is_addable(&self, node: Node) -> bool {
        node.col == self.part(node.row) + 1
            && (node.row == 1 || self.part(node.row - 1) > self.part(node.row))
    }

    pub fn is_removable(&self, node: Node) -> bool {
        node.col >= 1
            && node.col == self.part(node.row)
            && self.part(node.row) > self.part(node.row + 1)
    }

    /// Addable nodes, top row first.  The node in row `num_rows + 1`,
    /// column 1 is always present.
    pub fn addable_nodes(&self) -> Vec<Node> {
        let mut nodes = Vec::new();
        for row in 1..=self.parts.len() as u32 + 1 {
            let node = Node::new(row, self.part(row) + 1);
            if self.is_addable(node) {
                nodes.push(node);
            }
        }
        nodes
    }

    /// Removable nodes, top row first.
    pub fn removable_nodes(&self) -> Vec<Node> {
        let mut nodes = Vec::new();
        for row in 1..=self.parts.len() as u32 {
            let node = Node::new(row, self.part(row));
            if self.is_removable(node) {
                nodes.push(node);
            }
        }
        nodes
    }

    /// Addable and removable nodes of residue `i`, sorted by increasing column.
    pub fn boundary_nodes(&self, n: u32, i: u32) -> Vec<(Node, BoundaryKind)> {
        let mut out: Vec<(Node, BoundaryKind)> = self
            .addable_nodes()
            .into_iter()
            .filter(|node| node.residue(n) == i % n)
            .map(|node| (node, BoundaryKind::Addable))
            .chain(
                self.removable_nodes()
                    .into_iter()
                    .filter(|node| node.residue(n) == i % n)
                    .map(|node| (node, BoundaryKind::Removable)),
            )
            .collect();
        out.sort_by_key(|(node, _)| node.col);
        out
    }

    /// Hook length and arm length of a node of the diagram.
    pub fn hook(&self, node: Node) -> Result<Hook, PartitionError> {
        if !self.contains(node) {
            return Err(PartitionError::OutsideDiagram(node));
        }
        let row_len = self.part(node.row);
        let col_len = self.col_length(node.col);
        Ok(Hook {
            length: row_len - node.col + col_len - node.row + 1,
            arm: row_len - node.col,
        })
    }

    /// `lambda_a - lambda_{a+1} < n` for every row (including the last one
    /// against 0).
    pub fn is_restricted(&self, n: u32) -> bool {
        (1..=self.parts.len() as u32).all(|a| self.part(a) - self.part(a + 1) < n)
    }

    /// No part repeated `n` or more times: there is no `a` with
    /// `lambda_a = lambda_{a+n-1} > 0`.
    pub fn is_regular(&self, n: u32) -> bool {
        (1..=self.parts.len() as u32).all(|a| {
            let p = self.part(a);
            p == 0 || self.part(a + n - 1) != p
        })
    }

    /// Number of `i`-nodes for each residue class `i`.
    pub fn residue_counts(&self, n: u32) -> Vec<u64> {
        let mut counts = vec![0u64; n as usize];
        for node in self.nodes() {
            counts[node.residue(n) as usize] += 1;
        }
        counts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, part) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", part)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition({})", self)
    }
}

impl FromStr for Partition {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for piece in s.split(',') {
            let part: u32 = piece.trim().parse().map_err(|_| PartitionError::Parse {
                text: s.to_string(),
                reason: format!("bad part {:?}", piece),
            })?;
            parts.push(part);
        }
        Partition::new(parts).map_err(|e| PartitionError::Parse {
            text: s.to_string(),
            reason: e.to_string(),
        })
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = PartitionError;

    fn try_from(parts: Vec<u32>) -> Result<Self, Self::Error> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Vec<u32> {
        p.parts
    }
}

/// All partitions of `m`, in lexicographic-descending order, so
/// `partitions_of(3)` is `(3), (2,1), (1,1,1)`.
pub fn partitions_of(m: u32) -> Result<Vec<Partition>, PartitionError> {
    if m > ENUMERATION_BOUND {
        return Err(PartitionError::EnumerationBound {
            requested: m,
            bound: ENUMERATION_BOUND,
        });
    }
    let mut out = Vec::new();
    let mut current = Vec::new();
    descend(m, m, &mut current, &mut out);
    Ok(out)
}

fn descend(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    for part in (1..=remaining.min(max_part)).rev() {
        current.push(part);
        descend(remaining - part, part, current, out);
        current.pop();
    }
}
