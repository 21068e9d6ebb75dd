//! Biorders, configuration crystals and the domino construction.
//!
//! A biorder is a finite set with two total orders `>_i`, `>_j` and a
//! two-coloring subject to one compatibility rule: whenever `s >_i t >_j s`,
//! the color of `s` is `j` and the color of `t` is `i`.  A configuration
//! assigns each element a value in `{0, 1, 2}`; sorting the elements by one
//! of the orders and translating (value, color) pairs into signs yields a
//! sign sequence, and the usual good/cogood positions define raising and
//! lowering operators on configurations.  The *good* configurations are the
//! ones avoiding three forbidden patterns (G1, G2, G3); goodness is stable
//! along edges, and every good component is a regular rank-2 crystal.
//!
//! The domino construction links this back to partitions: a connected
//! rank-2 piece of an arm-sequence model determines closures `C_down`
//! (remove all removable nodes of the two residues) and `C_up` (add all
//! addable ones), the cells in between split into dominos, and counting
//! cells of a member inside each domino maps the component onto good
//! configurations, commuting with all four operators.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arm_seq::ArmSequence;
use crate::crystal_graph::{CrystalGraph, Vertex};
use crate::limits;
use crate::partition::{Node, Partition};
use crate::pm_seq::{Sign, SignSeq};
use crate::reg_crystal::{node_cmp, ModelError};

/// The two abstract labels of a rank-2 crystal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Color {
    I,
    J,
}

impl Color {
    pub fn flip(self) -> Color {
        match self {
            Color::I => Color::J,
            Color::J => Color::I,
        }
    }

    /// Label used for this color in generated crystal graphs.
    pub fn label(self) -> u32 {
        match self {
            Color::I => 0,
            Color::J => 1,
        }
    }
}

#[derive(Debug, Error)]
pub enum BiorderError {
    #[error("{0} is not a permutation of the element indices")]
    NotAPermutation(&'static str),
    #[error("orders, colors and element names must all have the same length")]
    LengthMismatch,
    #[error(
        "biorder axiom violated by the pair ({s}, {t}): {s} >_i {t} >_j {s} forces colors (j, i)"
    )]
    AxiomViolation { s: String, t: String },
    #[error("biorder has {size} elements; configuration enumeration is capped at {bound}")]
    TooLarge { size: usize, bound: usize },
    #[error("labels {i} and {j} are not adjacent mod {n}")]
    NotAdjacent { i: u32, j: u32, n: u32 },
    #[error("cells between the closures do not split into dominos: {0}")]
    DominoDecomposition(String),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error("invalid biorder JSON: {0}")]
    Json(String),
}

/// One of the three forbidden patterns, with witnessing element indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GoodViolation {
    G1 {
        s: usize,
        t: usize,
    },
    G2 {
        s: usize,
        t: usize,
    },
    G3 {
        q: usize,
        r: usize,
        s: usize,
        t: usize,
    },
}

/// A function from the elements to `{0, 1, 2}`, stored in element order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Configuration(Vec<u8>);

impl Configuration {
    pub fn new(values: Vec<u8>) -> Self {
        assert!(values.iter().all(|&v| v <= 2), "values live in {{0,1,2}}");
        Configuration(values)
    }

    pub fn zero(len: usize) -> Self {
        Configuration(vec![0; len])
    }

    pub fn values(&self) -> &[u8] {
        &self.0
    }

    pub fn get(&self, element: usize) -> u8 {
        self.0[element]
    }

    /// Sum of values; the grading used for graph layout.
    pub fn size(&self) -> u32 {
        self.0.iter().map(|&v| v as u32).sum()
    }
}

impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, v) in self.0.iter().enumerate() {
            if idx > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", v)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Configuration({})", self)
    }
}

/// A finite set with two total orders and a compatible two-coloring.
///
/// Derived relations: `s >> t` when `s` is greater in both orders, `s > t`
/// ("covers") when greater in at least one, and `above` is the transitive
/// closure of the cover relation.
#[derive(Clone, Debug)]
pub struct Biorder {
    names: Vec<String>,
    /// Element ids in descending `>_i` order.
    order_i: Vec<usize>,
    order_j: Vec<usize>,
    color: Vec<Color>,
    rank_i: Vec<usize>,
    rank_j: Vec<usize>,
    above: Vec<Vec<bool>>,
    g1_pairs: Vec<(usize, usize)>,
    g2_pairs: Vec<(usize, usize)>,
    g3_tuples: Vec<(usize, usize, usize, usize)>,
}

impl Biorder {
    pub fn new(
        names: Vec<String>,
        order_i: Vec<usize>,
        order_j: Vec<usize>,
        color: Vec<Color>,
    ) -> Result<Self, BiorderError> {
        let k = names.len();
        if order_i.len() != k || order_j.len() != k || color.len() != k {
            return Err(BiorderError::LengthMismatch);
        }
        let rank_of = |order: &[usize], which: &'static str| {
            let mut rank = vec![usize::MAX; k];
            for (pos, &id) in order.iter().enumerate() {
                if id >= k || rank[id] != usize::MAX {
                    return Err(BiorderError::NotAPermutation(which));
                }
                rank[id] = pos;
            }
            Ok(rank)
        };
        let rank_i = rank_of(&order_i, "order_i")?;
        let rank_j = rank_of(&order_j, "order_j")?;

        for s in 0..k {
            for t in 0..k {
                if s != t && rank_i[s] < rank_i[t] && rank_j[t] < rank_j[s] {
                    // s >_i t and t >_j s force the colors.
                    if color[s] != Color::J || color[t] != Color::I {
                        return Err(BiorderError::AxiomViolation {
                            s: names[s].clone(),
                            t: names[t].clone(),
                        });
                    }
                }
            }
        }

        // Transitive closure of the cover relation.
        let covers =
            |s: usize, t: usize| s != t && (rank_i[s] < rank_i[t] || rank_j[s] < rank_j[t]);
        let mut above = vec![vec![false; k]; k];
        for s in 0..k {
            for t in 0..k {
                above[s][t] = covers(s, t);
            }
        }
        for mid in 0..k {
            for s in 0..k {
                if above[s][mid] {
                    for t in 0..k {
                        above[s][t] = above[s][t] || above[mid][t];
                    }
                }
            }
        }

        let both = |s: usize, t: usize| rank_i[s] < rank_i[t] && rank_j[s] < rank_j[t];
        let mut g1_pairs = Vec::new();
        let mut g2_pairs = Vec::new();
        for s in 0..k {
            for t in 0..k {
                if s == t {
                    continue;
                }
                if rank_i[s] < rank_i[t] && rank_j[t] < rank_j[s] {
                    g1_pairs.push((s, t));
                }
                if covers(s, t) && above[t][s] && color[s] == color[t] {
                    g2_pairs.push((s, t));
                }
            }
        }
        let mut g3_tuples = Vec::new();
        for q in 0..k {
            for r in 0..k {
                for s in 0..k {
                    for t in 0..k {
                        if q == r || q == s || q == t || r == s || r == t || s == t {
                            continue;
                        }
                        if covers(q, r)
                            && both(r, s)
                            && covers(s, t)
                            && both(r, t)
                            && covers(t, q)
                            && both(q, s)
                        {
                            g3_tuples.push((q, r, s, t));
                        }
                    }
                }
            }
        }

        Ok(Biorder {
            names,
            order_i,
            order_j,
            color,
            rank_i,
            rank_j,
            above,
            g1_pairs,
            g2_pairs,
            g3_tuples,
        })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, element: usize) -> &str {
        &self.names[element]
    }

    pub fn color(&self, element: usize) -> Color {
        self.color[element]
    }

    /// Element ids in descending `>_h` order.
    pub fn order(&self, h: Color) -> &[usize] {
        match h {
            Color::I => &self.order_i,
            Color::J => &self.order_j,
        }
    }

    pub fn gt(&self, h: Color, s: usize, t: usize) -> bool {
        match h {
            Color::I => self.rank_i[s] < self.rank_i[t],
            Color::J => self.rank_j[s] < self.rank_j[t],
        }
    }

    /// Greater in both orders.
    pub fn dominates(&self, s: usize, t: usize) -> bool {
        s != t && self.rank_i[s] < self.rank_i[t] && self.rank_j[s] < self.rank_j[t]
    }

    /// Greater in at least one order.
    pub fn covers(&self, s: usize, t: usize) -> bool {
        s != t && (self.rank_i[s] < self.rank_i[t] || self.rank_j[s] < self.rank_j[t])
    }

    /// Transitive closure of [`Biorder::covers`].
    pub fn above(&self, s: usize, t: usize) -> bool {
        self.above[s][t]
    }

    /// Elements in descending `>_h` order with the signs of a configuration.
    pub fn signature(&self, a: &Configuration, h: Color) -> (Vec<usize>, SignSeq) {
        let order = match h {
            Color::I => &self.order_i,
            Color::J => &self.order_j,
        };
        let seq = order
            .iter()
            .map(|&s| {
                let same = self.color[s] == h;
                match (a.get(s), same) {
                    (0, true) | (1, false) => Sign::Plus,
                    (1, true) | (2, false) => Sign::Minus,
                    _ => Sign::Zero,
                }
            })
            .collect();
        (order.clone(), seq)
    }

    /// Raising operator: decrement at the good element of the `h`-signature.
    pub fn config_e(&self, a: &Configuration, h: Color) -> Option<Configuration> {
        let (order, seq) = self.signature(a, h);
        seq.analyze().good_pos.map(|pos| {
            let mut values = a.0.clone();
            values[order[pos - 1]] -= 1;
            Configuration(values)
        })
    }

    /// Lowering operator: increment at the cogood element of the `h`-signature.
    pub fn config_f(&self, a: &Configuration, h: Color) -> Option<Configuration> {
        let (order, seq) = self.signature(a, h);
        seq.analyze().cogood_pos.map(|pos| {
            let mut values = a.0.clone();
            values[order[pos - 1]] += 1;
            Configuration(values)
        })
    }

    /// String statistics of a configuration, read off the `h`-signature.
    pub fn eps_phi(&self, a: &Configuration, h: Color) -> (u32, u32) {
        let (_, seq) = self.signature(a, h);
        let analysis = seq.analyze();
        (analysis.epsilon, analysis.phi)
    }

    pub fn g1_violation(&self, a: &Configuration) -> Option<(usize, usize)> {
        self.g1_pairs
            .iter()
            .copied()
            .find(|&(s, t)| a.get(s) == 1 && a.get(t) == 1)
    }

    pub fn g2_violation(&self, a: &Configuration) -> Option<(usize, usize)> {
        self.g2_pairs
            .iter()
            .copied()
            .find(|&(s, t)| a.get(s) < a.get(t))
    }

    pub fn g3_violation(&self, a: &Configuration) -> Option<(usize, usize, usize, usize)> {
        self.g3_tuples
            .iter()
            .copied()
            .find(|&(q, r, s, t)| a.get(q) == 2 && a.get(s) == 2 && a.get(r) == 0 && a.get(t) == 0)
    }

    /// First violated pattern, scanning G1, then G2, then G3.
    pub fn is_good(&self, a: &Configuration) -> Result<(), GoodViolation> {
        if let Some((s, t)) = self.g1_violation(a) {
            return Err(GoodViolation::G1 { s, t });
        }
        if let Some((s, t)) = self.g2_violation(a) {
            return Err(GoodViolation::G2 { s, t });
        }
        if let Some((q, r, s, t)) = self.g3_violation(a) {
            return Err(GoodViolation::G3 { q, r, s, t });
        }
        Ok(())
    }

    /// A triangle-normal-form witness for a G2 violation: `s >> t > r > s`
    /// with equal colors and `a(s) < a(t)`; `None` when G2 holds.
    pub fn g2_triangle(&self, a: &Configuration) -> Option<(usize, usize, usize)> {
        let k = self.len();
        for s in 0..k {
            for t in 0..k {
                if s == t
                    || !self.dominates(s, t)
                    || self.color[s] != self.color[t]
                    || a.get(s) >= a.get(t)
                {
                    continue;
                }
                for r in 0..k {
                    if r != s && r != t && self.covers(t, r) && self.covers(r, s) {
                        return Some((s, t, r));
                    }
                }
            }
        }
        None
    }

    /// Every ordered pair of distinct elements is related under `above`.
    pub fn is_transitive(&self) -> bool {
        let k = self.len();
        (0..k).all(|s| (0..k).all(|t| s == t || self.above[s][t]))
    }

    /// For an intransitive biorder, a split `(S1, S2)` with every element of
    /// `S1` dominating every element of `S2`.
    pub fn split(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let k = self.len();
        let base = (0..k).find_map(|s0| {
            (0..k)
                .find(|&t0| t0 != s0 && !self.above[t0][s0])
                .map(|_| s0)
        })?;
        let s1: Vec<usize> = (0..k)
            .filter(|&s| s == base || self.above[s][base])
            .collect();
        let s2: Vec<usize> = (0..k).filter(|&s| !s1.contains(&s)).collect();
        debug_assert!(!s1.is_empty() && !s2.is_empty());
        debug_assert!(s1.iter().all(|&s| s2.iter().all(|&t| self.dominates(s, t))));
        Some((s1, s2))
    }

    /// The induced biorder on a subset of elements (ids renumbered, names kept).
    pub fn restrict(&self, subset: &[usize]) -> Biorder {
        let names = subset.iter().map(|&s| self.names[s].clone()).collect();
        let color = subset.iter().map(|&s| self.color[s]).collect();
        let renumber: BTreeMap<usize, usize> = subset
            .iter()
            .enumerate()
            .map(|(new, &old)| (old, new))
            .collect();
        let order_of = |order: &[usize]| {
            order
                .iter()
                .filter_map(|old| renumber.get(old).copied())
                .collect::<Vec<_>>()
        };
        Biorder::new(
            names,
            order_of(&self.order_i),
            order_of(&self.order_j),
            color,
        )
        .expect("restriction of a biorder is a biorder")
    }

    /// All `3^k` configurations in lexicographic value order.
    pub fn all_configurations(&self) -> Result<Vec<Configuration>, BiorderError> {
        let k = self.len();
        if k > limits::BIORDER_BOUND {
            return Err(BiorderError::TooLarge {
                size: k,
                bound: limits::BIORDER_BOUND,
            });
        }
        let total = 3usize.pow(k as u32);
        let mut out = Vec::with_capacity(total);
        let mut values = vec![0u8; k];
        loop {
            out.push(Configuration(values.clone()));
            let mut pos = k;
            loop {
                if pos == 0 {
                    return Ok(out);
                }
                pos -= 1;
                if values[pos] < 2 {
                    values[pos] += 1;
                    break;
                }
                values[pos] = 0;
            }
        }
    }

    /// Crystal graph on all configurations, with labels 0 for `i` and 1 for `j`.
    pub fn cc_graph(&self) -> Result<CrystalGraph, BiorderError> {
        self.build_graph(false)
    }

    /// Crystal graph restricted to the good configurations; a union of
    /// components of the full graph.
    pub fn gc_graph(&self) -> Result<CrystalGraph, BiorderError> {
        self.build_graph(true)
    }

    fn build_graph(&self, only_good: bool) -> Result<CrystalGraph, BiorderError> {
        let mut configs = self.all_configurations()?;
        if only_good {
            configs.retain(|a| self.is_good(a).is_ok());
        }
        let vertices = configs
            .iter()
            .map(|a| {
                let stats = [Color::I, Color::J]
                    .iter()
                    .map(|&h| self.eps_phi(a, h))
                    .collect();
                Vertex {
                    payload: a.to_string(),
                    size: a.size(),
                    weight: None,
                    stats: Some(stats),
                }
            })
            .collect();
        let mut edges = Vec::new();
        for a in &configs {
            for h in [Color::I, Color::J] {
                if let Some(b) = self.config_f(a, h) {
                    if !only_good || self.is_good(&b).is_ok() {
                        edges.push((a.to_string(), b.to_string(), h.label()));
                    }
                }
            }
        }
        Ok(
            CrystalGraph::from_parts(3, vec![0, 1], None, vertices, edges)
                .expect("configuration payloads are unique"),
        )
    }

    /// Structure up to renaming: the `>_j` order written in `>_i` positions,
    /// plus colors listed in `>_i` order.
    pub fn canonical_structure(&self) -> (Vec<usize>, Vec<Color>) {
        let pos_in_i: BTreeMap<usize, usize> = self
            .order_i
            .iter()
            .enumerate()
            .map(|(pos, &id)| (id, pos))
            .collect();
        let order_j = self.order_j.iter().map(|id| pos_in_i[id]).collect();
        let colors = self.order_i.iter().map(|&id| self.color[id]).collect();
        (order_j, colors)
    }

    pub fn to_json(&self) -> String {
        let dto = BiorderJson {
            elements: self.names.clone(),
            order_i: self
                .order_i
                .iter()
                .map(|&s| self.names[s].clone())
                .collect(),
            order_j: self
                .order_j
                .iter()
                .map(|&s| self.names[s].clone())
                .collect(),
            color: self
                .names
                .iter()
                .enumerate()
                .map(|(id, name)| {
                    (
                        name.clone(),
                        match self.color[id] {
                            Color::I => "i".to_string(),
                            Color::J => "j".to_string(),
                        },
                    )
                })
                .collect(),
        };
        serde_json::to_string_pretty(&dto).expect("biorder serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self, BiorderError> {
        let dto: BiorderJson =
            serde_json::from_str(text).map_err(|e| BiorderError::Json(e.to_string()))?;
        let id_of: BTreeMap<&str, usize> = dto
            .elements
            .iter()
            .enumerate()
            .map(|(id, name)| (name.as_str(), id))
            .collect();
        if id_of.len() != dto.elements.len() {
            return Err(BiorderError::Json("duplicate element names".into()));
        }
        let resolve = |names: &[String]| -> Result<Vec<usize>, BiorderError> {
            names
                .iter()
                .map(|name| {
                    id_of
                        .get(name.as_str())
                        .copied()
                        .ok_or_else(|| BiorderError::Json(format!("unknown element {:?}", name)))
                })
                .collect()
        };
        let order_i = resolve(&dto.order_i)?;
        let order_j = resolve(&dto.order_j)?;
        let mut color = vec![Color::I; dto.elements.len()];
        for (name, value) in &dto.color {
            let id = *id_of
                .get(name.as_str())
                .ok_or_else(|| BiorderError::Json(format!("unknown element {:?}", name)))?;
            color[id] = match value.as_str() {
                "i" => Color::I,
                "j" => Color::J,
                other => {
                    return Err(BiorderError::Json(format!(
                        "color must be \"i\" or \"j\", got {:?}",
                        other
                    )))
                }
            };
        }
        if dto.color.len() != dto.elements.len() {
            return Err(BiorderError::Json(
                "color map must cover every element".into(),
            ));
        }
        Biorder::new(dto.elements, order_i, order_j, color)
    }
}

#[derive(Serialize, Deserialize)]
struct BiorderJson {
    elements: Vec<String>,
    order_i: Vec<String>,
    order_j: Vec<String>,
    color: BTreeMap<String, String>,
}

/// An adjacent pair of cells, one of residue `i` and one of residue `j = i+1`;
/// the `j`-cell sits above (vertical) or to the right (horizontal) of the
/// `i`-cell.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Domino {
    pub i_node: Node,
    pub j_node: Node,
    pub horizontal: bool,
}

/// The biorder attached to a rank-2 component of an arm-sequence model.
#[derive(Clone, Debug)]
pub struct ComponentBiorder {
    pub i: u32,
    pub j: u32,
    pub c_down: Partition,
    pub c_up: Partition,
    pub dominoes: Vec<Domino>,
    pub biorder: Biorder,
}

/// Closures and domino biorder of the component containing `member`, for
/// the adjacent labels `i` and `j = i+1 mod n`.
pub fn component_biorder(
    member: &Partition,
    i: u32,
    arm: &ArmSequence,
) -> Result<ComponentBiorder, BiorderError> {
    let n = arm.n();
    let i = i % n;
    let j = (i + 1) % n;
    let of_labels = |node: &Node| {
        let r = node.residue(n);
        r == i || r == j
    };

    let mut c_down = member.clone();
    while let Some(node) = c_down
        .removable_nodes()
        .iter()
        .find(|nd| of_labels(nd))
        .copied()
    {
        c_down = c_down.remove_node(node).expect("removable");
    }
    let mut c_up = member.clone();
    while let Some(node) = c_up
        .addable_nodes()
        .iter()
        .find(|nd| of_labels(nd))
        .copied()
    {
        c_up = c_up.add_node(node).expect("addable");
    }

    let diff: Vec<Node> = c_up
        .nodes()
        .filter(|node| !c_down.contains(*node))
        .collect();
    let mut used = std::collections::HashSet::new();
    let mut dominoes = Vec::new();
    for &node in &diff {
        if node.residue(n) != i {
            continue;
        }
        let above = Node::new(node.row.saturating_sub(1).max(1), node.col);
        let vertical = node.row > 1 && diff.contains(&above) && above.residue(n) == j;
        let partner = if vertical {
            above
        } else {
            Node::new(node.row, node.col + 1)
        };
        if !diff.contains(&partner) || partner.residue(n) != j {
            return Err(BiorderError::DominoDecomposition(format!(
                "no partner for the {}-cell {}",
                i, node
            )));
        }
        used.insert(node);
        used.insert(partner);
        dominoes.push(Domino {
            i_node: node,
            j_node: partner,
            horizontal: !vertical,
        });
    }
    if used.len() != diff.len() {
        return Err(BiorderError::DominoDecomposition(format!(
            "{} cells between the closures, {} covered by dominos",
            diff.len(),
            used.len()
        )));
    }
    dominoes.sort_by_key(|d| (d.i_node.row, d.i_node.col));

    let names: Vec<String> = dominoes
        .iter()
        .map(|d| format!("{}{}", if d.horizontal { "h" } else { "v" }, d.i_node))
        .collect();
    let sort_desc = |key: fn(&Domino) -> Node| -> Result<Vec<usize>, BiorderError> {
        let mut ids: Vec<usize> = (0..dominoes.len()).collect();
        // Validate the needed prefix once so the comparator cannot fail.
        for &a in &ids {
            for &b in &ids {
                if a != b {
                    node_cmp(key(&dominoes[a]), key(&dominoes[b]), arm)?;
                }
            }
        }
        ids.sort_by(|&a, &b| {
            node_cmp(key(&dominoes[b]), key(&dominoes[a]), arm)
                .expect("prefix length checked above")
        });
        Ok(ids)
    };
    let order_i = sort_desc(|d| d.i_node)?;
    let order_j = sort_desc(|d| d.j_node)?;
    let color = dominoes
        .iter()
        .map(|d| if d.horizontal { Color::I } else { Color::J })
        .collect();
    let biorder = Biorder::new(names, order_i, order_j, color)?;

    Ok(ComponentBiorder {
        i,
        j,
        c_down,
        c_up,
        dominoes,
        biorder,
    })
}

impl ComponentBiorder {
    /// Count the member's cells inside each domino.
    pub fn psi(&self, lam: &Partition) -> Configuration {
        let values = self
            .dominoes
            .iter()
            .map(|d| u8::from(lam.contains(d.i_node)) + u8::from(lam.contains(d.j_node)))
            .collect();
        Configuration::new(values)
    }

    /// Residue corresponding to a configuration-crystal color.
    pub fn residue_of(&self, color: Color) -> u32 {
        match color {
            Color::I => self.i,
            Color::J => self.j,
        }
    }
}
