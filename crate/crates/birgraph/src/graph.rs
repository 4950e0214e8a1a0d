//! Weighted graphs with stable vertex identities.
//!
//! Vertices carry integer weights; edges form a multiset of unordered pairs,
//! where a pair `{v, v}` is a loop. Identifiers come from monotone counters
//! and are never handed out twice, so a vertex keeps its name through any
//! sequence of blowups and blowdowns.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};

#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub u32);

#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub u32);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedGraph {
    weights: BTreeMap<VertexId, i64>,
    // endpoints stored with u <= v
    edges: BTreeMap<EdgeId, (VertexId, VertexId)>,
    adj: BTreeMap<VertexId, BTreeSet<EdgeId>>,
    next_vertex: u32,
    next_edge: u32,
}

/// Structural type of one connected component.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Shape {
    Point,
    Linear,
    Circular,
    Branched,
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Shape::Point => "point",
            Shape::Linear => "linear",
            Shape::Circular => "circular",
            Shape::Branched => "branched",
        };
        f.write_str(s)
    }
}

fn norm(u: VertexId, v: VertexId) -> (VertexId, VertexId) {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

impl WeightedGraph {
    pub(crate) fn empty() -> Self {
        WeightedGraph {
            weights: BTreeMap::new(),
            edges: BTreeMap::new(),
            adj: BTreeMap::new(),
            next_vertex: 0,
            next_edge: 0,
        }
    }

    /// Builds a graph whose vertex `i` has weight `weights[i]`. Edge ids are
    /// assigned in sorted endpoint order.
    pub fn build(weights: &[i64], edges: &[(usize, usize)]) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::EmptyGraph);
        }
        let mut g = Self::empty();
        for &w in weights {
            g.add_vertex(w);
        }
        let mut es = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            if a >= weights.len() || b >= weights.len() {
                return Err(Error::DanglingEdge(a, b));
            }
            es.push(norm(VertexId(a as u32), VertexId(b as u32)));
        }
        es.sort();
        for (u, v) in es {
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub(crate) fn from_parts(
        weights: BTreeMap<VertexId, i64>,
        mut edges: Vec<(VertexId, VertexId)>,
    ) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::EmptyGraph);
        }
        let mut g = Self::empty();
        for (&v, &w) in &weights {
            g.weights.insert(v, w);
            g.adj.insert(v, BTreeSet::new());
        }
        g.next_vertex = weights.keys().next_back().map_or(0, |v| v.0 + 1);
        for e in edges.iter_mut() {
            if !weights.contains_key(&e.0) || !weights.contains_key(&e.1) {
                return Err(Error::DanglingEdge(e.0 .0 as usize, e.1 .0 as usize));
            }
            *e = norm(e.0, e.1);
        }
        edges.sort();
        for (u, v) in edges {
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.weights.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.weights.keys().copied()
    }

    pub fn weights(&self) -> &BTreeMap<VertexId, i64> {
        &self.weights
    }

    pub fn weight(&self, v: VertexId) -> Option<i64> {
        self.weights.get(&v).copied()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.weights.contains_key(&v)
    }

    pub fn edges(&self) -> impl Iterator<Item = (EdgeId, VertexId, VertexId)> + '_ {
        self.edges.iter().map(|(&e, &(u, v))| (e, u, v))
    }

    pub fn edge(&self, e: EdgeId) -> Option<(VertexId, VertexId)> {
        self.edges.get(&e).copied()
    }

    pub fn next_vertex_id(&self) -> VertexId {
        VertexId(self.next_vertex)
    }

    pub fn next_edge_id(&self) -> EdgeId {
        EdgeId(self.next_edge)
    }

    /// Edges incident to `v`, each loop listed once.
    pub fn incident(&self, v: VertexId) -> impl Iterator<Item = EdgeId> + '_ {
        self.adj.get(&v).into_iter().flatten().copied()
    }

    /// Loops count twice.
    pub fn degree(&self, v: VertexId) -> usize {
        self.incident(v)
            .map(|e| {
                let (a, b) = self.edges[&e];
                if a == b {
                    2
                } else {
                    1
                }
            })
            .sum()
    }

    pub fn loops_at(&self, v: VertexId) -> usize {
        self.incident(v)
            .filter(|e| {
                let (a, b) = self.edges[e];
                a == b
            })
            .count()
    }

    pub fn multiplicity(&self, u: VertexId, v: VertexId) -> usize {
        let key = norm(u, v);
        self.incident(u).filter(|e| self.edges[e] == key).count()
    }

    /// Smallest edge id joining `u` and `v`.
    pub fn edge_between(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        let key = norm(u, v);
        self.incident(u).find(|e| self.edges[e] == key)
    }

    /// The other endpoint of `e` seen from `v`.
    pub fn opposite(&self, e: EdgeId, v: VertexId) -> Option<VertexId> {
        let (a, b) = self.edge(e)?;
        if a == v {
            Some(b)
        } else if b == v {
            Some(a)
        } else {
            None
        }
    }

    /// Neighbours of `v` listed once per edge end (a loop contributes `v`
    /// twice), sorted.
    pub fn neighbor_list(&self, v: VertexId) -> Vec<VertexId> {
        let mut out = Vec::new();
        for e in self.incident(v) {
            let (a, b) = self.edges[&e];
            if a == b {
                out.push(v);
                out.push(v);
            } else {
                out.push(if a == v { b } else { a });
            }
        }
        out.sort();
        out
    }

    /// Distinct neighbours other than `v` itself.
    pub fn neighbors(&self, v: VertexId) -> Vec<VertexId> {
        let mut out: Vec<_> = self.neighbor_list(v).into_iter().filter(|&u| u != v).collect();
        out.dedup();
        out
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for v in self.vertices() {
            if seen.contains(&v) {
                continue;
            }
            let mut comp = vec![v];
            seen.insert(v);
            let mut queue = VecDeque::from([v]);
            while let Some(x) = queue.pop_front() {
                for y in self.neighbors(x) {
                    if seen.insert(y) {
                        comp.push(y);
                        queue.push_back(y);
                    }
                }
            }
            comp.sort();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// First Betti number `E - V + C`.
    pub fn betti(&self) -> i64 {
        self.edge_count() as i64 - self.vertex_count() as i64 + self.components().len() as i64
    }

    /// Total branching number.
    pub fn nu(&self) -> usize {
        self.vertices().map(|v| self.degree(v).saturating_sub(2)).sum()
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.edge_count() + 1 == self.vertex_count()
    }

    pub fn component_shape(&self, comp: &[VertexId]) -> Shape {
        if comp.len() == 1 && self.degree(comp[0]) == 0 {
            return Shape::Point;
        }
        let degs: Vec<usize> = comp.iter().map(|&v| self.degree(v)).collect();
        if degs.iter().any(|&d| d >= 3) {
            Shape::Branched
        } else if degs.iter().all(|&d| d == 2) {
            Shape::Circular
        } else {
            Shape::Linear
        }
    }

    /// Shape of every component, in [`components`](Self::components) order.
    pub fn classify(&self) -> Vec<Shape> {
        self.components().iter().map(|c| self.component_shape(c)).collect()
    }

    /// Subgraph induced on `keep`; identifiers and counters are retained.
    pub fn induced(&self, keep: &BTreeSet<VertexId>) -> WeightedGraph {
        let mut g = Self::empty();
        for (&v, &w) in &self.weights {
            if keep.contains(&v) {
                g.weights.insert(v, w);
                g.adj.insert(v, BTreeSet::new());
            }
        }
        for (&e, &(u, v)) in &self.edges {
            if keep.contains(&u) && keep.contains(&v) {
                g.edges.insert(e, (u, v));
                g.adj.get_mut(&u).unwrap().insert(e);
                g.adj.get_mut(&v).unwrap().insert(e);
            }
        }
        g.next_vertex = self.next_vertex;
        g.next_edge = self.next_edge;
        g
    }

    /// Copy with vertices renumbered `0..n` in id order and fresh edge ids.
    pub fn compacted(&self) -> WeightedGraph {
        let index: BTreeMap<VertexId, usize> =
            self.vertices().enumerate().map(|(i, v)| (v, i)).collect();
        let ws: Vec<i64> = self.weights.values().copied().collect();
        let es: Vec<(usize, usize)> = self.edges().map(|(_, u, v)| (index[&u], index[&v])).collect();
        WeightedGraph::build(&ws, &es).expect("nonempty")
    }

    /// Canonical serialization of the full labelled state.
    pub fn state_string(&self) -> String {
        let mut s = String::new();
        for (v, w) in &self.weights {
            s.push_str(&format!("V {v} {w}\n"));
        }
        for (e, (u, v)) in &self.edges {
            s.push_str(&format!("E {e} {u} {v}\n"));
        }
        s.push_str(&format!("N {} {}\n", self.next_vertex, self.next_edge));
        s
    }

    /// Hash of [`state_string`](Self::state_string), 32 hex digits.
    pub fn fingerprint(&self) -> String {
        let digest = Sha256::digest(self.state_string().as_bytes());
        digest.iter().take(16).map(|b| format!("{b:02x}")).collect()
    }

    pub(crate) fn add_vertex(&mut self, w: i64) -> VertexId {
        let v = VertexId(self.next_vertex);
        self.next_vertex += 1;
        self.weights.insert(v, w);
        self.adj.insert(v, BTreeSet::new());
        v
    }

    pub(crate) fn add_edge(&mut self, u: VertexId, v: VertexId) -> EdgeId {
        let e = EdgeId(self.next_edge);
        self.next_edge += 1;
        self.edges.insert(e, norm(u, v));
        self.adj.get_mut(&u).expect("endpoint").insert(e);
        self.adj.get_mut(&v).expect("endpoint").insert(e);
        e
    }

    pub(crate) fn remove_edge(&mut self, e: EdgeId) -> Option<(VertexId, VertexId)> {
        let (u, v) = self.edges.remove(&e)?;
        self.adj.get_mut(&u).map(|s| s.remove(&e));
        self.adj.get_mut(&v).map(|s| s.remove(&e));
        Some((u, v))
    }

    /// Removes `v` together with its incident edges.
    pub(crate) fn remove_vertex(&mut self, v: VertexId) {
        let es: Vec<EdgeId> = self.incident(v).collect();
        for e in es {
            self.remove_edge(e);
        }
        self.adj.remove(&v);
        self.weights.remove(&v);
    }

    pub(crate) fn add_weight(&mut self, v: VertexId, d: i64) -> Result<()> {
        let w = self.weights.get_mut(&v).ok_or(Error::MissingVertex(v))?;
        *w = w.checked_add(d).ok_or(Error::WeightOverflow(v))?;
        Ok(())
    }
}

/// Attachment of one end of a segment.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum End {
    Free,
    Branch(VertexId),
}

/// A segment path together with what its two ends attach to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SegmentPath {
    pub ids: Vec<VertexId>,
    pub left: End,
    pub right: End,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Segment {
    Linear(LinearChain),
    Circular(CircularGraph),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchData {
    pub branch_points: BTreeSet<VertexId>,
    pub nu: usize,
    pub degrees: BTreeMap<VertexId, usize>,
    pub segments: Vec<Segment>,
}

impl WeightedGraph {
    pub fn branch_data(&self) -> BranchData {
        let degrees: BTreeMap<VertexId, usize> = self.vertices().map(|v| (v, self.degree(v))).collect();
        let branch_points: BTreeSet<VertexId> =
            degrees.iter().filter(|(_, &d)| d >= 3).map(|(&v, _)| v).collect();
        let nu = degrees.values().map(|d| d.saturating_sub(2)).sum();
        let mut segments = Vec::new();
        for comp in self.components() {
            if matches!(self.component_shape(&comp), Shape::Circular) {
                segments.push(Segment::Circular(CircularGraph::from_component(self, &comp)));
            }
        }
        for p in self.segment_paths() {
            let weights = p.ids.iter().map(|&v| self.weights[&v]).collect();
            segments.push(Segment::Linear(LinearChain { ids: p.ids, weights }));
        }
        BranchData { branch_points, nu, degrees, segments }
    }

    /// Non-circular segments as ordered paths with their end attachments.
    /// Each path starts at the end with the smaller vertex id.
    pub fn segment_paths(&self) -> Vec<SegmentPath> {
        let branch: BTreeSet<VertexId> = self.vertices().filter(|&v| self.degree(v) >= 3).collect();
        let mut seen: BTreeSet<VertexId> = BTreeSet::new();
        let mut out = Vec::new();
        for comp in self.components() {
            if matches!(self.component_shape(&comp), Shape::Circular) {
                seen.extend(comp);
            }
        }
        let inner = |v: VertexId| !branch.contains(&v);
        for start in self.vertices() {
            if !inner(start) || seen.contains(&start) {
                continue;
            }
            // collect the path component of start inside the non-branch part
            let mut comp = BTreeSet::from([start]);
            let mut queue = VecDeque::from([start]);
            while let Some(x) = queue.pop_front() {
                for y in self.neighbors(x) {
                    if inner(y) && comp.insert(y) {
                        queue.push_back(y);
                    }
                }
            }
            seen.extend(comp.iter().copied());
            let inside_deg = |v: VertexId| {
                self.neighbor_list(v).into_iter().filter(|u| comp.contains(u)).count()
            };
            let ends: Vec<VertexId> = comp.iter().copied().filter(|&v| inside_deg(v) <= 1).collect();
            let first = ends[0];
            let mut ids = vec![first];
            let mut prev: Option<VertexId> = None;
            let mut cur = first;
            loop {
                let next = self
                    .neighbors(cur)
                    .into_iter()
                    .find(|u| comp.contains(u) && Some(*u) != prev && *u != cur);
                match next {
                    Some(n) if !ids.contains(&n) => {
                        prev = Some(cur);
                        cur = n;
                        ids.push(n);
                    }
                    _ => break,
                }
            }
            let outer = |v: VertexId| -> Vec<VertexId> {
                self.neighbor_list(v).into_iter().filter(|u| branch.contains(u)).collect()
            };
            let (left, right) = if ids.len() == 1 {
                let o = outer(ids[0]);
                let l = o.first().map_or(End::Free, |&b| End::Branch(b));
                let r = o.get(1).map_or(End::Free, |&b| End::Branch(b));
                (l, r)
            } else {
                let l = outer(ids[0]).first().map_or(End::Free, |&b| End::Branch(b));
                let r = outer(*ids.last().unwrap()).first().map_or(End::Free, |&b| End::Branch(b));
                (l, r)
            };
            let (left, right) = if ids.len() == 1 && left == End::Free && right != End::Free {
                (right, left)
            } else {
                (left, right)
            };
            out.push(SegmentPath { ids, left, right });
        }
        out
    }

    /// Vertex order along a linear or point component, starting from the
    /// end with the smaller id.
    pub fn chain_order(&self, comp: &[VertexId]) -> Option<Vec<VertexId>> {
        match self.component_shape(comp) {
            Shape::Point => Some(comp.to_vec()),
            Shape::Linear => {
                let first = *comp.iter().find(|&&v| self.degree(v) == 1)?;
                Some(self.walk(first, comp.len()))
            }
            _ => None,
        }
    }

    /// Cyclic vertex order of a circular component, starting at its
    /// smallest id and continuing toward the smaller-id neighbour.
    pub fn cycle_order(&self, comp: &[VertexId]) -> Option<Vec<VertexId>> {
        if self.component_shape(comp) != Shape::Circular {
            return None;
        }
        Some(self.walk(comp[0], comp.len()))
    }

    fn walk(&self, first: VertexId, n: usize) -> Vec<VertexId> {
        let mut ids = vec![first];
        let mut used: BTreeSet<EdgeId> = BTreeSet::new();
        let mut cur = first;
        while ids.len() < n {
            let mut best: Option<(VertexId, EdgeId)> = None;
            for e in self.incident(cur) {
                if used.contains(&e) {
                    continue;
                }
                let o = self.opposite(e, cur).unwrap();
                if o == cur {
                    continue;
                }
                if best.is_none_or(|(b, _)| o < b) {
                    best = Some((o, e));
                }
            }
            let Some((o, e)) = best else { break };
            used.insert(e);
            ids.push(o);
            cur = o;
        }
        ids
    }
}

/// Linear chain `[[w0, ..., wn]]` with the identifiers of its vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearChain {
    pub ids: Vec<VertexId>,
    pub weights: Vec<i64>,
}

impl LinearChain {
    pub fn new(weights: Vec<i64>) -> Self {
        let ids = (0..weights.len() as u32).map(VertexId).collect();
        LinearChain { ids, weights }
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    /// Reads a linear or point graph; `None` for any other shape.
    pub fn from_graph(g: &WeightedGraph) -> Option<Self> {
        if !g.is_connected() {
            return None;
        }
        let comp: Vec<VertexId> = g.vertices().collect();
        let ids = g.chain_order(&comp)?;
        let weights = ids.iter().map(|v| g.weights[v]).collect();
        Some(LinearChain { ids, weights })
    }

    pub fn to_graph(&self) -> Result<WeightedGraph> {
        let weights = self.ids.iter().copied().zip(self.weights.iter().copied()).collect();
        let edges = self.ids.windows(2).map(|p| (p[0], p[1])).collect();
        WeightedGraph::from_parts(weights, edges)
    }

    /// Concatenation `LM`; the result is renumbered from 0.
    pub fn join(&self, other: &LinearChain) -> LinearChain {
        let mut w = self.weights.clone();
        w.extend_from_slice(&other.weights);
        LinearChain::new(w)
    }

    pub fn reverse(&self) -> LinearChain {
        let mut ids = self.ids.clone();
        let mut weights = self.weights.clone();
        ids.reverse();
        weights.reverse();
        LinearChain { ids, weights }
    }
}

impl fmt::Display for LinearChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L[{}]", join_ints(&self.weights))
    }
}

/// Circular graph `((w0, ..., wn))`. Base point and orientation are only
/// bookkeeping.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CircularGraph {
    pub ids: Vec<VertexId>,
    pub weights: Vec<i64>,
}

impl CircularGraph {
    pub fn new(weights: Vec<i64>) -> Self {
        let ids = (0..weights.len() as u32).map(VertexId).collect();
        CircularGraph { ids, weights }
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub(crate) fn from_component(g: &WeightedGraph, comp: &[VertexId]) -> Self {
        let ids = g.cycle_order(comp).expect("circular component");
        let weights = ids.iter().map(|v| g.weights[v]).collect();
        CircularGraph { ids, weights }
    }

    pub fn from_graph(g: &WeightedGraph) -> Option<Self> {
        let comp: Vec<VertexId> = g.vertices().collect();
        if !g.is_connected() || g.component_shape(&comp) != Shape::Circular {
            return None;
        }
        Some(Self::from_component(g, &comp))
    }

    pub fn to_graph(&self) -> Result<WeightedGraph> {
        let weights = self.ids.iter().copied().zip(self.weights.iter().copied()).collect();
        let n = self.ids.len();
        let edges = (0..n).map(|i| (self.ids[i], self.ids[(i + 1) % n])).collect();
        WeightedGraph::from_parts(weights, edges)
    }

    /// Re-bases the cyclic order so that position `k` comes first.
    pub fn rotate(&self, k: usize) -> CircularGraph {
        let mut c = self.clone();
        if !c.is_empty() {
            let k = k % c.len();
            c.ids.rotate_left(k);
            c.weights.rotate_left(k);
        }
        c
    }

    pub fn reverse(&self) -> CircularGraph {
        let mut c = self.clone();
        c.ids.reverse();
        c.weights.reverse();
        c
    }
}

impl fmt::Display for CircularGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C({})", join_ints(&self.weights))
    }
}

pub(crate) fn join_ints(ws: &[i64]) -> String {
    ws.iter().map(|w| w.to_string()).collect::<Vec<_>>().join(",")
}
