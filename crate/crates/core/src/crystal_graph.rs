//! Finite crystal graphs: generation, axioms, rank-2 checks, rooted
//! isomorphism, tensor products, JSON and DOT export.
//!
//! A graph stores an indexed vertex list (payload text, size, optional
//! weight, optional intrinsic string statistics) and labelled edges
//! `from -> to`; an edge labelled `i` means the lowering operator for `i`
//! maps `from` to `to`.  Vertex numbering is canonical (sorted by size,
//! then by payload text), so identical inputs always produce identical
//! graphs, edge lists, and serialized output.
//!
//! Graphs produced by truncated generation carry `max_size`; a connected
//! rank-2 piece is judged only when *complete* (every vertex strictly below
//! the truncation bound), since a component touching the frontier may be
//! missing operators.  Intrinsic statistics, when present, let the axiom
//! `<h_i, wt(b)> = phi_i(b) - eps_i(b)` be verified on frontier vertices
//! where graph-walking would undercount.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::limits;
use crate::partition::Partition;
use crate::reg_crystal::{CrystalModel, ModelError, Weight};

#[derive(Debug, Error)]
pub enum GraphError {
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error("max size {requested} exceeds the cap {cap} (override with CRYSTAL_MAX_SIZE)")]
    SizeBound { requested: u32, cap: u32 },
    #[error("duplicate vertex payload {0:?}")]
    DuplicatePayload(String),
    #[error("edge ({from} -> {to}, label {label}) out of range or off the label set")]
    BadEdge { from: usize, to: usize, label: u32 },
    #[error("vertex ids must be 0..len in order, found {0}")]
    BadVertexId(usize),
    #[error("graphs have different label sets")]
    IncompatibleLabels,
    #[error("expected a unique source, found {0}")]
    NoUniqueSource(usize),
    #[error("operation requires a complete graph (no truncation bound)")]
    Truncated,
    #[error("component is incomplete; checks on it would be unsound")]
    IncompleteComponent,
    #[error(
        "rooted traversal left {0} vertices unreached; graph is not connected from its source"
    )]
    NotConnected(usize),
    #[error("unknown vertex payload {0:?} in edge list")]
    UnknownPayload(String),
    #[error("graph contains a labelled cycle; string statistics are undefined")]
    LabelledCycle,
    #[error("invalid graph JSON: {0}")]
    Json(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vertex {
    pub payload: String,
    pub size: u32,
    pub weight: Option<Weight>,
    /// `(epsilon, phi)` per label, parallel to the graph's label list.
    pub stats: Option<Vec<(u32, u32)>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub label: u32,
}

/// A connected piece of a rank-2 subgraph.
#[derive(Clone, Debug)]
pub struct Component {
    /// Vertex ids in the ambient graph, ascending.
    pub vertices: Vec<usize>,
    /// True when every vertex sits strictly below the truncation bound, so
    /// no operator image was cut away.
    pub complete: bool,
    pub labels: (u32, u32),
}

#[derive(Clone, Debug, Default)]
pub struct AxiomReport {
    pub violations: Vec<String>,
    /// False when missing weights or statistics forced C3/C4 to be skipped.
    pub weight_axioms_checked: bool,
}

impl AxiomReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Clone, Debug, Default)]
pub struct LocalAxiomReport {
    pub violations: Vec<String>,
    pub sources: Vec<usize>,
}

impl LocalAxiomReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Clone, Debug)]
pub struct CrystalGraph {
    n: u32,
    labels: Vec<u32>,
    max_size: Option<u32>,
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
    out_adj: Vec<BTreeMap<u32, usize>>,
    in_adj: Vec<BTreeMap<u32, usize>>,
    index: HashMap<String, usize>,
}

impl PartialEq for CrystalGraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n
            && self.labels == other.labels
            && self.max_size == other.max_size
            && self.vertices == other.vertices
            && self.edges == other.edges
    }
}

impl CrystalGraph {
    /// Assemble a graph from raw parts, renumbering vertices canonically.
    pub fn from_parts(
        n: u32,
        labels: Vec<u32>,
        max_size: Option<u32>,
        vertices: Vec<Vertex>,
        edges: Vec<(String, String, u32)>,
    ) -> Result<Self, GraphError> {
        let mut vertices = vertices;
        vertices.sort_by(|a, b| (a.size, &a.payload).cmp(&(b.size, &b.payload)));
        let mut index = HashMap::new();
        for (id, v) in vertices.iter().enumerate() {
            if index.insert(v.payload.clone(), id).is_some() {
                return Err(GraphError::DuplicatePayload(v.payload.clone()));
            }
        }
        let mut edge_list = Vec::with_capacity(edges.len());
        for (from, to, label) in edges {
            let from = *index
                .get(&from)
                .ok_or_else(|| GraphError::UnknownPayload(from.clone()))?;
            let to = *index
                .get(&to)
                .ok_or_else(|| GraphError::UnknownPayload(to.clone()))?;
            if !labels.contains(&label) {
                return Err(GraphError::BadEdge { from, to, label });
            }
            edge_list.push(Edge { from, to, label });
        }
        Ok(Self::assemble(n, labels, max_size, vertices, edge_list))
    }

    fn assemble(
        n: u32,
        labels: Vec<u32>,
        max_size: Option<u32>,
        vertices: Vec<Vertex>,
        mut edges: Vec<Edge>,
    ) -> Self {
        edges.sort();
        let mut out_adj = vec![BTreeMap::new(); vertices.len()];
        let mut in_adj = vec![BTreeMap::new(); vertices.len()];
        for e in &edges {
            out_adj[e.from].insert(e.label, e.to);
            in_adj[e.to].insert(e.label, e.from);
        }
        let index = vertices
            .iter()
            .enumerate()
            .map(|(id, v)| (v.payload.clone(), id))
            .collect();
        CrystalGraph {
            n,
            labels,
            max_size,
            vertices,
            edges,
            out_adj,
            in_adj,
            index,
        }
    }

    /// Breadth-first closure of the empty partition under the lowering
    /// operators, truncated at `max_size`.
    pub fn generate(model: &dyn CrystalModel, max_size: u32) -> Result<Self, GraphError> {
        let cap = limits::max_size_cap();
        if max_size > cap {
            return Err(GraphError::SizeBound {
                requested: max_size,
                cap,
            });
        }
        model.ensure_supports(max_size)?;
        let n = model.n();
        let labels: Vec<u32> = (0..n).collect();

        let mut seen: HashSet<Partition> = HashSet::new();
        let mut frontier = vec![Partition::empty()];
        seen.insert(Partition::empty());
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for p in &frontier {
                if p.size() >= max_size {
                    continue;
                }
                for &i in &labels {
                    if let Some(q) = model.f_tilde(p, i)? {
                        if q.size() <= max_size && seen.insert(q.clone()) {
                            next.push(q);
                        }
                    }
                }
            }
            frontier = next;
        }

        let mut members: Vec<Partition> = seen.into_iter().collect();
        members.sort_by_key(|p| (p.size(), p.to_string()));

        let mut vertices = Vec::with_capacity(members.len());
        for p in &members {
            let stats = labels
                .iter()
                .map(|&i| model.eps_phi(p, i))
                .collect::<Result<Vec<_>, _>>()?;
            vertices.push(Vertex {
                payload: p.to_string(),
                size: p.size(),
                weight: Some(model.weight(p)),
                stats: Some(stats),
            });
        }
        let index: HashMap<String, usize> = members
            .iter()
            .enumerate()
            .map(|(id, p)| (p.to_string(), id))
            .collect();
        let mut edges = Vec::new();
        for (id, p) in members.iter().enumerate() {
            for &i in &labels {
                if let Some(q) = model.f_tilde(p, i)? {
                    if q.size() <= max_size {
                        let to = *index
                            .get(&q.to_string())
                            .expect("closure under lowering operators");
                        edges.push(Edge {
                            from: id,
                            to,
                            label: i,
                        });
                    }
                }
            }
        }
        Ok(Self::assemble(n, labels, Some(max_size), vertices, edges))
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn max_size(&self) -> Option<u32> {
        self.max_size
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn vertex(&self, id: usize) -> &Vertex {
        &self.vertices[id]
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex_id(&self, payload: &str) -> Option<usize> {
        self.index.get(payload).copied()
    }

    /// Lowering step along `label`, read off the edge list.
    pub fn f_step(&self, v: usize, label: u32) -> Option<usize> {
        self.out_adj[v].get(&label).copied()
    }

    /// Raising step along `label`, read off the edge list.
    pub fn e_step(&self, v: usize, label: u32) -> Option<usize> {
        self.in_adj[v].get(&label).copied()
    }

    /// String lengths `(epsilon, phi)` by walking edges; `None` if a walk
    /// exceeds the vertex count (a labelled cycle).
    pub fn string_stats(&self, v: usize, label: u32) -> Option<(u32, u32)> {
        let cap = self.vertices.len();
        let mut eps = 0u32;
        let mut cur = v;
        while let Some(prev) = self.e_step(cur, label) {
            eps += 1;
            cur = prev;
            if eps as usize > cap {
                return None;
            }
        }
        let mut phi = 0u32;
        cur = v;
        while let Some(next) = self.f_step(cur, label) {
            phi += 1;
            cur = next;
            if phi as usize > cap {
                return None;
            }
        }
        Some((eps, phi))
    }

    fn label_pos(&self, label: u32) -> Option<usize> {
        self.labels.iter().position(|&l| l == label)
    }

    /// Best available `(epsilon, phi)`: intrinsic statistics when stored,
    /// otherwise a graph walk.
    pub fn stats_for(&self, v: usize, label: u32) -> Option<(u32, u32)> {
        if let Some(stats) = &self.vertices[v].stats {
            return self.label_pos(label).map(|pos| stats[pos]);
        }
        self.string_stats(v, label)
    }

    /// Check axioms: at most one edge per label and direction at each vertex
    /// plus mutual inverses (C1), the weight step (C3) and the pairing
    /// identity (C4).
    pub fn verify_axioms(&self) -> AxiomReport {
        let mut report = AxiomReport::default();

        // C1: the edge list must define partial injections.
        let mut out_seen: HashMap<(usize, u32), usize> = HashMap::new();
        let mut in_seen: HashMap<(usize, u32), usize> = HashMap::new();
        for e in &self.edges {
            if let Some(other) = out_seen.insert((e.from, e.label), e.to) {
                report.violations.push(format!(
                    "C1: vertex {} ({}) has two outgoing {}-edges (to {} and {})",
                    e.from, self.vertices[e.from].payload, e.label, other, e.to
                ));
            }
            if let Some(other) = in_seen.insert((e.to, e.label), e.from) {
                report.violations.push(format!(
                    "C1: vertex {} ({}) has two incoming {}-edges (from {} and {})",
                    e.to, self.vertices[e.to].payload, e.label, other, e.from
                ));
            }
        }

        let all_weights = self.vertices.iter().all(|v| v.weight.is_some());
        if !all_weights {
            report.weight_axioms_checked = false;
            return report;
        }

        // C3: each lowering edge subtracts a simple root.
        for e in &self.edges {
            let wu = self.vertices[e.from].weight.as_ref().unwrap();
            let wv = self.vertices[e.to].weight.as_ref().unwrap();
            if *wv != wu.sub_alpha(e.label) {
                report.violations.push(format!(
                    "C3: edge {} -> {} (label {}) does not step by alpha_{}",
                    self.vertices[e.from].payload, self.vertices[e.to].payload, e.label, e.label
                ));
            }
        }

        // C4: pairing equals phi - eps.  Graph walks are only trusted on
        // complete graphs; otherwise intrinsic statistics are required.
        let walk_ok = self.max_size.is_none();
        let mut c4_complete = true;
        for (id, v) in self.vertices.iter().enumerate() {
            for &label in &self.labels {
                let stats = if v.stats.is_some() {
                    self.stats_for(id, label)
                } else if walk_ok {
                    self.string_stats(id, label)
                } else {
                    None
                };
                match stats {
                    Some((eps, phi)) => {
                        let pairing = v.weight.as_ref().unwrap().pairing(label);
                        if pairing != phi as i64 - eps as i64 {
                            report.violations.push(format!(
                                "C4: vertex {} label {}: pairing {} != phi - eps = {}",
                                v.payload,
                                label,
                                pairing,
                                phi as i64 - eps as i64
                            ));
                        }
                    }
                    None => c4_complete = false,
                }
            }
        }
        report.weight_axioms_checked = c4_complete;
        report
    }

    /// Vertices with no incoming edges.
    pub fn sources(&self) -> Vec<usize> {
        (0..self.vertices.len())
            .filter(|&v| self.in_adj[v].is_empty())
            .collect()
    }

    /// Connected components under undirected reachability over all labels.
    pub fn components(&self) -> Vec<Vec<usize>> {
        self.components_on(&self.labels)
    }

    fn components_on(&self, labels: &[u32]) -> Vec<Vec<usize>> {
        // Neighbours come from the raw edge list, so even a graph that
        // violates the injectivity axiom splits into honest undirected
        // components.
        let mut neighbours = vec![Vec::new(); self.vertices.len()];
        for e in &self.edges {
            if labels.contains(&e.label) {
                neighbours[e.from].push(e.to);
                neighbours[e.to].push(e.from);
            }
        }
        let mut seen = vec![false; self.vertices.len()];
        let mut out = Vec::new();
        for start in 0..self.vertices.len() {
            if seen[start] {
                continue;
            }
            let mut comp = Vec::new();
            let mut queue = VecDeque::from([start]);
            seen[start] = true;
            while let Some(v) = queue.pop_front() {
                comp.push(v);
                for &w in &neighbours[v] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Connected components of the subgraph keeping only labels `i` and `j`.
    pub fn rank2(&self, i: u32, j: u32) -> Vec<Component> {
        let labels = [i, j];
        self.components_on(&labels)
            .into_iter()
            .map(|vertices| {
                let complete = match self.max_size {
                    None => true,
                    Some(bound) => vertices.iter().all(|&v| self.vertices[v].size < bound),
                };
                Component {
                    vertices,
                    complete,
                    labels: (i, j),
                }
            })
            .collect()
    }

    fn require_complete(&self, c: &Component) -> Result<(), GraphError> {
        if c.complete {
            Ok(())
        } else {
            Err(GraphError::IncompleteComponent)
        }
    }

    /// Verify that the two labels' raising and lowering operators commute at
    /// every vertex of a complete component, including definedness.
    pub fn check_commuting(&self, c: &Component) -> Result<Vec<String>, GraphError> {
        self.require_complete(c)?;
        let (i, j) = c.labels;
        let mut violations = Vec::new();
        let step = |v: usize, label: u32, raise: bool| {
            if raise {
                self.e_step(v, label)
            } else {
                self.f_step(v, label)
            }
        };
        for &v in &c.vertices {
            for raise_i in [true, false] {
                for raise_j in [true, false] {
                    let ij = step(v, i, raise_i).and_then(|w| step(w, j, raise_j));
                    let ji = step(v, j, raise_j).and_then(|w| step(w, i, raise_i));
                    if ij != ji {
                        violations.push(format!(
                            "operators ({}{}, {}{}) disagree at {}: {:?} vs {:?}",
                            if raise_i { "e" } else { "f" },
                            i,
                            if raise_j { "e" } else { "f" },
                            j,
                            self.vertices[v].payload,
                            ij.map(|w| &self.vertices[w].payload),
                            ji.map(|w| &self.vertices[w].payload),
                        ));
                    }
                }
            }
        }
        Ok(violations)
    }

    /// Verify the local sl3 axioms (A2 and A3) on a complete component and
    /// report its sources.
    pub fn check_local_axioms(&self, c: &Component) -> Result<LocalAxiomReport, GraphError> {
        self.require_complete(c)?;
        let (i, j) = c.labels;
        let mut report = LocalAxiomReport::default();

        let members: HashSet<usize> = c.vertices.iter().copied().collect();
        let mut stats: HashMap<(usize, u32), (u32, u32)> = HashMap::new();
        for &v in &c.vertices {
            for label in [i, j] {
                match self.component_stats(v, label, members.len()) {
                    Some(s) => {
                        stats.insert((v, label), s);
                    }
                    None => {
                        report
                            .violations
                            .push(format!("labelled cycle through vertex {}", v));
                        return Ok(report);
                    }
                }
            }
        }
        let stats = |v: usize, label: u32| stats[&(v, label)];

        report.sources = c
            .vertices
            .iter()
            .copied()
            .filter(|&v| self.e_step(v, i).is_none() && self.e_step(v, j).is_none())
            .collect();
        if report.sources.len() != 1 {
            report.violations.push(format!(
                "expected a unique source, found {}",
                report.sources.len()
            ));
        }

        for &b in &c.vertices {
            for (h, k) in [(i, j), (j, i)] {
                let name = |v: usize| self.vertices[v].payload.as_str();
                // A2(a): raising along h moves (eps_k, phi_k) by exactly one
                // of the two allowed steps.
                if let Some(bh) = self.e_step(b, h) {
                    let (ek0, pk0) = stats(b, k);
                    let (ek, pk) = stats(bh, k);
                    let up = ek == ek0 + 1 && pk == pk0;
                    let down = ek == ek0 && pk0 > 0 && pk == pk0 - 1;
                    if !(up || down) {
                        report.violations.push(format!(
                            "A2(a) fails at {} for e_{}: ({},{}) -> ({},{})",
                            name(b),
                            h,
                            ek0,
                            pk0,
                            ek,
                            pk
                        ));
                    }
                }
                // A2(b): not both neutral.
                if let (Some(bh), Some(bf)) = (self.e_step(b, h), self.f_step(b, h)) {
                    let grows_eps = stats(bh, k).0 > stats(b, k).0;
                    let grows_phi = stats(bf, k).1 > stats(b, k).1;
                    if !grows_eps && !grows_phi {
                        report.violations.push(format!(
                            "A2(b) fails at {} for label {}",
                            name(b),
                            h
                        ));
                    }
                }
                // A3(a): neutral raising forces commutation and growth.
                if let (Some(bh), Some(bk)) = (self.e_step(b, h), self.e_step(b, k)) {
                    if stats(bh, k).0 == stats(b, k).0 {
                        let hk = self.e_step(bk, h);
                        let kh = self.e_step(bh, k);
                        if hk.is_none() || hk != kh {
                            report.violations.push(format!(
                                "A3(a) fails at {}: e_{} e_{} != e_{} e_{}",
                                name(b),
                                h,
                                k,
                                k,
                                h
                            ));
                        }
                        if stats(bk, h).0 <= stats(b, h).0 {
                            report.violations.push(format!(
                                "A3(a) fails at {}: eps_{} did not grow under e_{}",
                                name(b),
                                h,
                                k
                            ));
                        }
                    }
                }
                // A3(b): dual statement for the lowering operators.
                if let (Some(bh), Some(bk)) = (self.f_step(b, h), self.f_step(b, k)) {
                    if stats(bh, k).1 == stats(b, k).1 {
                        let hk = self.f_step(bk, h);
                        let kh = self.f_step(bh, k);
                        if hk.is_none() || hk != kh {
                            report.violations.push(format!(
                                "A3(b) fails at {}: f_{} f_{} != f_{} f_{}",
                                name(b),
                                h,
                                k,
                                k,
                                h
                            ));
                        }
                        if stats(bk, h).1 <= stats(b, h).1 {
                            report.violations.push(format!(
                                "A3(b) fails at {}: phi_{} did not grow under f_{}",
                                name(b),
                                h,
                                k
                            ));
                        }
                    }
                }
            }
        }
        Ok(report)
    }

    fn component_stats(&self, v: usize, label: u32, cap: usize) -> Option<(u32, u32)> {
        let mut eps = 0u32;
        let mut cur = v;
        while let Some(prev) = self.e_step(cur, label) {
            eps += 1;
            cur = prev;
            if eps as usize > cap {
                return None;
            }
        }
        let mut phi = 0u32;
        cur = v;
        while let Some(next) = self.f_step(cur, label) {
            phi += 1;
            cur = next;
            if phi as usize > cap {
                return None;
            }
        }
        Some((eps, phi))
    }

    /// Rooted isomorphism for connected unique-source crystals: pair the
    /// sources and propagate along lowering edges.  Returns the vertex map
    /// or `None` when the traversal fails to close.
    pub fn isomorphic(&self, other: &CrystalGraph) -> Result<Option<Vec<usize>>, GraphError> {
        if self.labels != other.labels {
            return Err(GraphError::IncompatibleLabels);
        }
        let s1 = self.sources();
        let s2 = other.sources();
        if s1.len() != 1 {
            return Err(GraphError::NoUniqueSource(s1.len()));
        }
        if s2.len() != 1 {
            return Err(GraphError::NoUniqueSource(s2.len()));
        }
        if self.vertices.len() != other.vertices.len() || self.edges.len() != other.edges.len() {
            return Ok(None);
        }

        let mut map = vec![usize::MAX; self.vertices.len()];
        let mut rev = vec![usize::MAX; other.vertices.len()];
        map[s1[0]] = s2[0];
        rev[s2[0]] = s1[0];
        let mut queue = VecDeque::from([s1[0]]);
        let mut visited = 1usize;
        while let Some(u) = queue.pop_front() {
            let u2 = map[u];
            // Operator definedness must agree; on frontiers compare the
            // intrinsic statistics when both sides carry them.
            if self.out_adj[u].keys().ne(other.out_adj[u2].keys())
                || self.in_adj[u].keys().ne(other.in_adj[u2].keys())
            {
                return Ok(None);
            }
            if let (Some(a), Some(b)) = (&self.vertices[u].stats, &other.vertices[u2].stats) {
                if a != b {
                    return Ok(None);
                }
            }
            for (&label, &v) in &self.out_adj[u] {
                let v2 = other.out_adj[u2][&label];
                if map[v] == usize::MAX && rev[v2] == usize::MAX {
                    map[v] = v2;
                    rev[v2] = v;
                    visited += 1;
                    queue.push_back(v);
                } else if map[v] != v2 || rev[v2] != v {
                    return Ok(None);
                }
            }
        }
        if visited != self.vertices.len() {
            return Err(GraphError::NotConnected(self.vertices.len() - visited));
        }
        // Every edge must map to an edge; counts already agree.
        for e in &self.edges {
            if other.f_step(map[e.from], e.label) != Some(map[e.to]) {
                return Ok(None);
            }
        }
        Ok(Some(map))
    }

    /// Match all components of two graphs pairwise by rooted traversal.
    pub fn isomorphic_by_components(&self, other: &CrystalGraph) -> Result<bool, GraphError> {
        if self.labels != other.labels {
            return Err(GraphError::IncompatibleLabels);
        }
        let mine: Vec<CrystalGraph> = self
            .components()
            .into_iter()
            .map(|c| self.subgraph(&c))
            .collect();
        let mut theirs: Vec<Option<CrystalGraph>> = other
            .components()
            .into_iter()
            .map(|c| Some(other.subgraph(&c)))
            .collect();
        if mine.len() != theirs.len() {
            return Ok(false);
        }
        for g in &mine {
            let mut matched = false;
            for slot in theirs.iter_mut() {
                if let Some(h) = slot {
                    if g.isomorphic(h)?.is_some() {
                        *slot = None;
                        matched = true;
                        break;
                    }
                }
            }
            if !matched {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The induced subgraph on a vertex subset, renumbered canonically.
    pub fn subgraph(&self, ids: &[usize]) -> CrystalGraph {
        let keep: HashSet<usize> = ids.iter().copied().collect();
        let vertices: Vec<Vertex> = ids.iter().map(|&v| self.vertices[v].clone()).collect();
        let payload_of = |v: usize| self.vertices[v].payload.clone();
        let edges = self
            .edges
            .iter()
            .filter(|e| keep.contains(&e.from) && keep.contains(&e.to))
            .map(|e| (payload_of(e.from), payload_of(e.to), e.label))
            .collect();
        Self::from_parts(self.n, self.labels.clone(), self.max_size, vertices, edges)
            .expect("subgraph of a valid graph")
    }

    /// Tensor product of two complete crystals over the same label set.
    ///
    /// The lowering rule acts on the left factor when `phi(left) >
    /// eps(right)` and on the right factor otherwise; weights add.
    pub fn tensor(&self, other: &CrystalGraph) -> Result<CrystalGraph, GraphError> {
        if self.labels != other.labels {
            return Err(GraphError::IncompatibleLabels);
        }
        if self.max_size.is_some() || other.max_size.is_some() {
            return Err(GraphError::Truncated);
        }
        let stats_table = |g: &CrystalGraph| -> Result<Vec<Vec<(u32, u32)>>, GraphError> {
            (0..g.vertices.len())
                .map(|v| {
                    g.labels
                        .iter()
                        .map(|&l| g.string_stats(v, l).ok_or(GraphError::LabelledCycle))
                        .collect()
                })
                .collect()
        };
        let left_stats = stats_table(self)?;
        let right_stats = stats_table(other)?;

        let pair_payload = |v1: usize, v2: usize| {
            format!(
                "({}) (x) ({})",
                self.vertices[v1].payload, other.vertices[v2].payload
            )
        };
        let mut vertices = Vec::new();
        let mut edges = Vec::new();
        for v1 in 0..self.vertices.len() {
            for v2 in 0..other.vertices.len() {
                let weight = match (&self.vertices[v1].weight, &other.vertices[v2].weight) {
                    (Some(a), Some(b)) => {
                        let lambda = a.lambda.iter().zip(&b.lambda).map(|(x, y)| x + y).collect();
                        Some(Weight {
                            lambda,
                            delta: a.delta + b.delta,
                        })
                    }
                    _ => None,
                };
                vertices.push(Vertex {
                    payload: pair_payload(v1, v2),
                    size: self.vertices[v1].size + other.vertices[v2].size,
                    weight,
                    stats: None,
                });
                for (pos, &label) in self.labels.iter().enumerate() {
                    let phi_left = left_stats[v1][pos].1;
                    let eps_right = right_stats[v2][pos].0;
                    let target = if phi_left > eps_right {
                        self.f_step(v1, label).map(|w1| pair_payload(w1, v2))
                    } else {
                        other.f_step(v2, label).map(|w2| pair_payload(v1, w2))
                    };
                    if let Some(to) = target {
                        edges.push((pair_payload(v1, v2), to, label));
                    }
                }
            }
        }
        Self::from_parts(self.n, self.labels.clone(), None, vertices, edges)
    }

    pub fn to_json(&self) -> String {
        let dto = GraphJson {
            n: self.n,
            labels: self.labels.clone(),
            max_size: self.max_size,
            vertices: self
                .vertices
                .iter()
                .enumerate()
                .map(|(id, v)| VertexJson {
                    id,
                    payload: v.payload.clone(),
                    size: v.size,
                    weight: v.weight.clone(),
                })
                .collect(),
            edges: self
                .edges
                .iter()
                .map(|e| EdgeJson {
                    from: e.from,
                    to: e.to,
                    label: e.label,
                })
                .collect(),
        };
        serde_json::to_string_pretty(&dto).expect("graph serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self, GraphError> {
        let dto: GraphJson =
            serde_json::from_str(text).map_err(|e| GraphError::Json(e.to_string()))?;
        for (pos, v) in dto.vertices.iter().enumerate() {
            if v.id != pos {
                return Err(GraphError::BadVertexId(v.id));
            }
        }
        let vertices: Vec<Vertex> = dto
            .vertices
            .iter()
            .map(|v| Vertex {
                payload: v.payload.clone(),
                size: v.size,
                weight: v.weight.clone(),
                stats: None,
            })
            .collect();
        let payload_of = |id: usize| -> Result<String, GraphError> {
            dto.vertices
                .get(id)
                .map(|v| v.payload.clone())
                .ok_or(GraphError::BadVertexId(id))
        };
        let mut edges = Vec::with_capacity(dto.edges.len());
        for e in &dto.edges {
            edges.push((payload_of(e.from)?, payload_of(e.to)?, e.label));
        }
        Self::from_parts(dto.n, dto.labels, dto.max_size, vertices, edges)
    }

    /// Deterministic DOT rendering: one node per vertex labelled by payload
    /// text, edges labelled by residue.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph crystal {\n");
        for (id, v) in self.vertices.iter().enumerate() {
            let _ = writeln!(
                out,
                "  v{} [label=\"{}\"];",
                id,
                v.payload.replace('"', "\\\"")
            );
        }
        for e in &self.edges {
            let _ = writeln!(out, "  v{} -> v{} [label=\"{}\"];", e.from, e.to, e.label);
        }
        out.push_str("}\n");
        out
    }
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: u32,
    labels: Vec<u32>,
    max_size: Option<u32>,
    vertices: Vec<VertexJson>,
    edges: Vec<EdgeJson>,
}

#[derive(Serialize, Deserialize)]
struct VertexJson {
    id: usize,
    payload: String,
    size: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    weight: Option<Weight>,
}

#[derive(Serialize, Deserialize)]
struct EdgeJson {
    from: usize,
    to: usize,
    label: u32,
}
