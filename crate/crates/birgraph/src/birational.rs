//! Blowups, blowdowns and the composite rewrites built from them.
//!
//! Every operation records its steps in a [`TransformationTrace`]. Replay
//! derives new identifiers from the graph's counters, so a trace applied to
//! the same source always reproduces the same target, ids included.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{CircularGraph, EdgeId, LinearChain, VertexId, WeightedGraph};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Site {
    Edge(EdgeId),
    Vertex(VertexId),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum StepKind {
    InnerBlowup(EdgeId),
    OuterBlowup(VertexId),
    Blowdown(VertexId),
}

impl fmt::Display for StepKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StepKind::InnerBlowup(e) => write!(f, "IB {e}"),
            StepKind::OuterBlowup(v) => write!(f, "OB {v}"),
            StepKind::Blowdown(v) => write!(f, "BD {v}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    pub kind: StepKind,
    pub created: Option<VertexId>,
    pub deleted: Option<VertexId>,
    pub weight_deltas: Vec<(VertexId, i64)>,
    pub edges_added: Vec<EdgeId>,
    pub edges_removed: Vec<EdgeId>,
}

impl Step {
    pub fn is_blowup(&self) -> bool {
        !matches!(self.kind, StepKind::Blowdown(_))
    }
}

/// Applies one step in place.
pub fn apply_step(g: &mut WeightedGraph, kind: StepKind) -> Result<Step> {
    let mut step = Step {
        kind,
        created: None,
        deleted: None,
        weight_deltas: Vec::new(),
        edges_added: Vec::new(),
        edges_removed: Vec::new(),
    };
    match kind {
        StepKind::InnerBlowup(e) => {
            let (u, v) = g.edge(e).ok_or(Error::MissingEdge(e))?;
            let d = if u == v { -2 } else { -1 };
            g.add_weight(u, d)?;
            if u != v {
                g.add_weight(v, -1)?;
            }
            g.remove_edge(e);
            let x = g.add_vertex(-1);
            step.edges_added.push(g.add_edge(u, x));
            step.edges_added.push(g.add_edge(x, v));
            step.created = Some(x);
            step.edges_removed.push(e);
            step.weight_deltas.push((u, d));
            if u != v {
                step.weight_deltas.push((v, -1));
            }
        }
        StepKind::OuterBlowup(v) => {
            if !g.contains(v) {
                return Err(Error::MissingVertex(v));
            }
            g.add_weight(v, -1)?;
            let x = g.add_vertex(-1);
            step.edges_added.push(g.add_edge(v, x));
            step.created = Some(x);
            step.weight_deltas.push((v, -1));
        }
        StepKind::Blowdown(v) => {
            let w = g.weight(v).ok_or(Error::MissingVertex(v))?;
            if w != -1 {
                return Err(Error::NotBlowdownable(v, "weight is not -1"));
            }
            if g.loops_at(v) > 0 {
                return Err(Error::NotBlowdownable(v, "vertex carries a loop"));
            }
            let deg = g.degree(v);
            if deg == 0 {
                return Err(Error::NotBlowdownable(v, "isolated vertex"));
            }
            if deg > 2 {
                return Err(Error::NotBlowdownable(v, "degree above 2"));
            }
            let es: Vec<EdgeId> = g.incident(v).collect();
            let nbrs: Vec<VertexId> = es.iter().map(|&e| g.opposite(e, v).unwrap()).collect();
            for &e in &es {
                g.remove_edge(e);
                step.edges_removed.push(e);
            }
            g.remove_vertex(v);
            match nbrs.as_slice() {
                [a] => {
                    g.add_weight(*a, 1)?;
                    step.weight_deltas.push((*a, 1));
                }
                [a, b] if a == b => {
                    g.add_weight(*a, 2)?;
                    step.weight_deltas.push((*a, 2));
                    step.edges_added.push(g.add_edge(*a, *a));
                }
                [a, b] => {
                    g.add_weight(*a, 1)?;
                    g.add_weight(*b, 1)?;
                    step.weight_deltas.push((*a, 1));
                    step.weight_deltas.push((*b, 1));
                    step.edges_added.push(g.add_edge(*a, *b));
                }
                _ => unreachable!(),
            }
            step.deleted = Some(v);
        }
    }
    Ok(step)
}

pub fn blow_up(g: &WeightedGraph, site: Site) -> Result<(WeightedGraph, Step)> {
    let mut h = g.clone();
    let kind = match site {
        Site::Edge(e) => StepKind::InnerBlowup(e),
        Site::Vertex(v) => StepKind::OuterBlowup(v),
    };
    let s = apply_step(&mut h, kind)?;
    Ok((h, s))
}

pub fn blow_down(g: &WeightedGraph, v: VertexId) -> Result<(WeightedGraph, Step)> {
    let mut h = g.clone();
    let s = apply_step(&mut h, StepKind::Blowdown(v))?;
    Ok((h, s))
}

pub fn can_blow_down(g: &WeightedGraph, v: VertexId) -> bool {
    let d = g.degree(v);
    g.weight(v) == Some(-1) && g.loops_at(v) == 0 && (1..=2).contains(&d)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransformationTrace {
    pub source: String,
    pub target: String,
    pub steps: Vec<Step>,
    /// The branching number stays constant at every step.
    pub admissible: bool,
    /// Admissible and free of outer blowups.
    pub inner: bool,
    pub source_vertices: BTreeSet<VertexId>,
}

/// Image of a source vertex under a trace.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Transform {
    Vertex(VertexId),
    Contracted,
}

impl TransformationTrace {
    pub fn identity(g: &WeightedGraph) -> Self {
        Tracer::new(g).finish().1
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn kinds(&self) -> Vec<StepKind> {
        self.steps.iter().map(|s| s.kind).collect()
    }

    pub fn blowups(&self) -> usize {
        self.steps.iter().filter(|s| s.is_blowup()).count()
    }

    pub fn blowdowns(&self) -> usize {
        self.len() - self.blowups()
    }

    /// Source vertices that disappear along the trace.
    pub fn contracted(&self) -> BTreeSet<VertexId> {
        let gone: BTreeSet<VertexId> = self.steps.iter().filter_map(|s| s.deleted).collect();
        self.source_vertices.intersection(&gone).copied().collect()
    }

    pub fn proper_transform(&self, v: VertexId) -> Result<Transform> {
        if !self.source_vertices.contains(&v) {
            return Err(Error::UnknownVertex(v));
        }
        if self.steps.iter().any(|s| s.deleted == Some(v)) {
            Ok(Transform::Contracted)
        } else {
            Ok(Transform::Vertex(v))
        }
    }

    /// Appends `next`, whose source must be this trace's target.
    pub fn then(&self, next: &TransformationTrace) -> Result<TransformationTrace> {
        if self.target != next.source {
            return Err(Error::FingerprintMismatch { expected: next.source.clone(), found: self.target.clone() });
        }
        let mut steps = self.steps.clone();
        steps.extend(next.steps.iter().cloned());
        Ok(TransformationTrace {
            source: self.source.clone(),
            target: next.target.clone(),
            steps,
            admissible: self.admissible && next.admissible,
            inner: self.inner && next.inner,
            source_vertices: self.source_vertices.clone(),
        })
    }

    pub fn to_text(&self) -> String {
        let mut s = format!(
            "# birgraph trace\nsource {}\ntarget {}\nsteps {}\n",
            self.source,
            self.target,
            self.steps.len()
        );
        for st in &self.steps {
            s.push_str(&format!("{}\n", st.kind));
        }
        s
    }

    /// Reads the text form back, replaying it from `source` to recover the
    /// step details.
    pub fn parse(text: &str, source: &WeightedGraph) -> Result<TransformationTrace> {
        let bad = |m: String| Error::InvalidTrace(m);
        let mut src = None;
        let mut tgt = None;
        let mut count = None;
        let mut kinds = Vec::new();
        for raw in text.lines() {
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let toks: Vec<&str> = line.split_whitespace().collect();
            let num = |t: &str| t.parse::<u32>().map_err(|_| bad(format!("bad number {t:?}")));
            match toks.as_slice() {
                ["source", f] => src = Some(f.to_string()),
                ["target", f] => tgt = Some(f.to_string()),
                ["steps", n] => count = Some(num(n)? as usize),
                ["IB", e] => kinds.push(StepKind::InnerBlowup(EdgeId(num(e)?))),
                ["OB", v] => kinds.push(StepKind::OuterBlowup(VertexId(num(v)?))),
                ["BD", v] => kinds.push(StepKind::Blowdown(VertexId(num(v)?))),
                _ => return Err(bad(format!("unrecognized line {line:?}"))),
            }
        }
        let src = src.ok_or_else(|| bad("missing source line".into()))?;
        let tgt = tgt.ok_or_else(|| bad("missing target line".into()))?;
        if count != Some(kinds.len()) {
            return Err(bad("step count does not match".into()));
        }
        let found = source.fingerprint();
        if found != src {
            return Err(Error::FingerprintMismatch { expected: src, found });
        }
        let mut tr = Tracer::new(source);
        for k in kinds {
            tr.step(k)?;
        }
        let (_, t) = tr.finish();
        if t.target != tgt {
            return Err(bad("replay does not reach the recorded target".into()));
        }
        Ok(t)
    }
}

/// Replays `t` from `g`.
pub fn apply_trace(g: &WeightedGraph, t: &TransformationTrace) -> Result<WeightedGraph> {
    let found = g.fingerprint();
    if found != t.source {
        return Err(Error::FingerprintMismatch { expected: t.source.clone(), found });
    }
    let mut h = g.clone();
    for s in &t.steps {
        let r = apply_step(&mut h, s.kind)?;
        if r != *s {
            return Err(Error::InvalidTrace(format!("step {} diverges on replay", s.kind)));
        }
    }
    if h.fingerprint() != t.target {
        return Err(Error::InvalidTrace("replay does not reach the recorded target".into()));
    }
    Ok(h)
}

/// Builds a trace step by step on a working copy of a graph.
#[derive(Clone, Debug)]
pub struct Tracer {
    g: WeightedGraph,
    source: String,
    source_vertices: BTreeSet<VertexId>,
    steps: Vec<Step>,
    nu0: usize,
    admissible: bool,
    inner: bool,
}

/// Which way an elementary transformation pivots around its 0-vertex.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Side {
    /// Blow up the edge toward this neighbour.
    Toward(VertexId),
    /// Outer blowup at the 0-vertex, which must have degree at most 1.
    Outer,
}

impl Tracer {
    pub fn new(g: &WeightedGraph) -> Self {
        Tracer {
            g: g.clone(),
            source: g.fingerprint(),
            source_vertices: g.vertices().collect(),
            steps: Vec::new(),
            nu0: g.nu(),
            admissible: true,
            inner: true,
        }
    }

    pub fn graph(&self) -> &WeightedGraph {
        &self.g
    }

    pub fn weight(&self, v: VertexId) -> i64 {
        self.g.weight(v).expect("live vertex")
    }

    pub fn step(&mut self, kind: StepKind) -> Result<Step> {
        let s = apply_step(&mut self.g, kind)?;
        if self.g.nu() != self.nu0 {
            self.admissible = false;
        }
        if matches!(kind, StepKind::OuterBlowup(_)) {
            self.inner = false;
        }
        self.steps.push(s.clone());
        Ok(s)
    }

    pub fn inner_blowup(&mut self, e: EdgeId) -> Result<VertexId> {
        Ok(self.step(StepKind::InnerBlowup(e))?.created.unwrap())
    }

    pub fn outer_blowup(&mut self, v: VertexId) -> Result<VertexId> {
        Ok(self.step(StepKind::OuterBlowup(v))?.created.unwrap())
    }

    pub fn blowdown(&mut self, v: VertexId) -> Result<()> {
        self.step(StepKind::Blowdown(v)).map(|_| ())
    }

    /// Elementary transformation at the 0-vertex `z`; returns the new
    /// 0-vertex, which takes the place of `z`.
    ///
    /// `Toward(x)` lowers `x` by one and raises the other neighbour (if any)
    /// by one. `Outer` raises the only neighbour (if any) by one.
    pub fn pivot(&mut self, z: VertexId, side: Side) -> Result<VertexId> {
        let w = self.g.weight(z).ok_or(Error::MissingVertex(z))?;
        if w != 0 {
            return Err(Error::NotZeroVertex(z));
        }
        if self.g.degree(z) > 2 || self.g.loops_at(z) > 0 {
            return Err(Error::NotAtMostLinear(z));
        }
        let y = match side {
            Side::Toward(x) => {
                let e = self.g.edge_between(z, x).filter(|_| x != z).ok_or(Error::MissingEdge(EdgeId(u32::MAX)))?;
                self.inner_blowup(e)?
            }
            Side::Outer => {
                if self.g.degree(z) > 1 {
                    return Err(Error::NotAtMostLinear(z));
                }
                self.outer_blowup(z)?
            }
        };
        self.blowdown(z)?;
        Ok(y)
    }

    /// Moves weight `t` across an odd block of 0-vertices: `left` loses `t`,
    /// `right` gains `t`. A missing side is a free end of the block. Block
    /// ids are updated in place.
    pub fn transfer(
        &mut self,
        block: &mut [VertexId],
        left: Option<VertexId>,
        right: Option<VertexId>,
        t: i64,
    ) -> Result<()> {
        let n = block.len();
        debug_assert!(n % 2 == 1);
        if t > 0 {
            for idx in (0..n).step_by(2) {
                for _ in 0..t {
                    let nb = if idx == 0 { left } else { Some(block[idx - 1]) };
                    let side = nb.map_or(Side::Outer, Side::Toward);
                    block[idx] = self.pivot(block[idx], side)?;
                }
            }
        } else if t < 0 {
            for idx in (0..n).rev().step_by(2) {
                for _ in 0..(-t) {
                    let nb = if idx + 1 == n { right } else { Some(block[idx + 1]) };
                    let side = nb.map_or(Side::Outer, Side::Toward);
                    block[idx] = self.pivot(block[idx], side)?;
                }
            }
        }
        Ok(())
    }

    /// `[[w, 0, 0]]` at `(p, z1, z2)` becomes `[[0, 0, w]]`; returns the new
    /// id at the middle position.
    pub fn hop_right(&mut self, p: VertexId, z1: VertexId, z2: VertexId) -> Result<VertexId> {
        let w = self.weight(p);
        let mut b = [z1];
        self.transfer(&mut b, Some(p), Some(z2), w)?;
        Ok(b[0])
    }

    /// `[[0, 0, w]]` at `(z1, z2, q)` becomes `[[w, 0, 0]]`; returns the new
    /// id at the middle position.
    pub fn hop_left(&mut self, z1: VertexId, z2: VertexId, q: VertexId) -> Result<VertexId> {
        let w = self.weight(q);
        let mut b = [z2];
        self.transfer(&mut b, Some(z1), Some(q), -w)?;
        Ok(b[0])
    }

    pub fn finish(self) -> (WeightedGraph, TransformationTrace) {
        let target = self.g.fingerprint();
        let t = TransformationTrace {
            source: self.source,
            target,
            steps: self.steps,
            admissible: self.admissible,
            inner: self.admissible && self.inner,
            source_vertices: self.source_vertices,
        };
        (self.g, t)
    }
}

fn blowdown_candidate(g: &WeightedGraph) -> Option<VertexId> {
    let mut deg1 = None;
    for v in g.vertices() {
        if can_blow_down(g, v) {
            if g.degree(v) == 2 {
                return Some(v);
            }
            deg1.get_or_insert(v);
        }
    }
    deg1
}

/// Blows down `-1` vertices until none is eligible, preferring linear
/// vertices and then smaller ids.
pub fn minimalize(g: &WeightedGraph) -> Result<(WeightedGraph, TransformationTrace)> {
    let mut tr = Tracer::new(g);
    minimalize_in(&mut tr)?;
    Ok(tr.finish())
}

pub(crate) fn minimalize_in(tr: &mut Tracer) -> Result<()> {
    while let Some(v) = blowdown_candidate(tr.graph()) {
        tr.blowdown(v)?;
    }
    Ok(())
}

pub fn is_minimal(g: &WeightedGraph) -> bool {
    blowdown_candidate(g).is_none()
}

/// One elementary transformation at `z`.
pub fn elementary(g: &WeightedGraph, z: VertexId, side: Side) -> Result<(WeightedGraph, TransformationTrace)> {
    let mut tr = Tracer::new(g);
    tr.pivot(z, side)?;
    Ok(tr.finish())
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum BlockRewrite {
    /// `[[0_{2k}, w1..wn]]` to `[[w1..wn, 0_{2k}]]`.
    A,
    /// `[[w1, 0_{2k+1}, w2]]` to `[[w1 - a, 0_{2k+1}, w2 + a]]`.
    B(i64),
    /// `[[0_{2k+1}, w0, ..]]` to `[[0_{2k+1}, w0 - a, ..]]`.
    C(i64),
}

fn check_path(g: &WeightedGraph, chain: &[VertexId]) -> Result<()> {
    if chain.is_empty() {
        return Err(Error::PatternMismatch("empty chain".into()));
    }
    for v in chain {
        if !g.contains(*v) {
            return Err(Error::MissingVertex(*v));
        }
    }
    for p in chain.windows(2) {
        if g.multiplicity(p[0], p[1]) == 0 || p[0] == p[1] {
            return Err(Error::PatternMismatch(format!("{} and {} are not adjacent", p[0], p[1])));
        }
    }
    let distinct: BTreeSet<_> = chain.iter().collect();
    if distinct.len() != chain.len() {
        return Err(Error::PatternMismatch("chain repeats a vertex".into()));
    }
    Ok(())
}

/// Applies one of the three zero-block rewrites to the subchain `chain`,
/// listed in left-to-right order.
pub fn zero_block_rewrite(
    g: &WeightedGraph,
    chain: &[VertexId],
    variant: BlockRewrite,
) -> Result<(WeightedGraph, TransformationTrace)> {
    check_path(g, chain)?;
    let ws: Vec<i64> = chain.iter().map(|v| g.weight(*v).unwrap()).collect();
    let zeros = ws.iter().take_while(|&&w| w == 0).count();
    let mismatch = |m: &str| Error::PatternMismatch(m.to_string());
    let mut tr = Tracer::new(g);
    let mut ids = chain.to_vec();
    match variant {
        BlockRewrite::A => {
            if zeros % 2 == 1 {
                return Err(mismatch("expected an even block of zeros on the left"));
            }
            // each pair, rightmost first, hops past every nonzero weight
            let n = ids.len() - zeros;
            for pair in (0..zeros / 2).rev() {
                for pos in 2 * pair..2 * pair + n {
                    ids[pos + 1] = tr.hop_left(ids[pos], ids[pos + 1], ids[pos + 2])?;
                }
            }
        }
        BlockRewrite::B(a) => {
            let n = ids.len();
            if n < 3 || ws[1..n - 1].iter().any(|&w| w != 0) || (n - 2) % 2 == 0 {
                return Err(mismatch("expected [[w1, 0_{2k+1}, w2]]"));
            }
            let (l, r) = (ids[0], ids[n - 1]);
            tr.transfer(&mut ids[1..n - 1], Some(l), Some(r), a)?;
        }
        BlockRewrite::C(a) => {
            if zeros % 2 == 0 || zeros == ids.len() {
                return Err(mismatch("expected [[0_{2k+1}, w0, ...]]"));
            }
            let outside = g.neighbors(ids[0]).into_iter().find(|u| !chain.contains(u));
            let w0 = ids[zeros];
            tr.transfer(&mut ids[..zeros], outside, Some(w0), -a)?;
        }
    }
    Ok(tr.finish())
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Direction {
    Left,
    Right,
}

/// Left or right move of the chain `[[0_{2k+1}]]`, read in its stored order.
pub fn move_chain(g: &WeightedGraph, dir: Direction) -> Result<(WeightedGraph, TransformationTrace)> {
    let c = LinearChain::from_graph(g).ok_or(Error::NotOddZeroChain)?;
    if c.len() % 2 == 0 || c.weights.iter().any(|&w| w != 0) {
        return Err(Error::NotOddZeroChain);
    }
    let a = match dir {
        Direction::Left => c.ids.clone(),
        Direction::Right => c.reverse().ids,
    };
    let mut tr = Tracer::new(g);
    move_in(&mut tr, &a)?;
    Ok(tr.finish())
}

/// Left move on the chain `a` (ordered); returns the new chain in order.
pub(crate) fn move_in(tr: &mut Tracer, a: &[VertexId]) -> Result<Vec<VertexId>> {
    let k = a.len() / 2;
    let x0 = tr.outer_blowup(a[0])?;
    let mut ys = Vec::new();
    for i in 1..=k {
        let (p, q) = (a[2 * i - 1], a[2 * i]);
        let e = tr.graph().edge_between(p, q).ok_or(Error::MissingEdge(EdgeId(u32::MAX)))?;
        ys.push(tr.inner_blowup(e)?);
    }
    for i in 0..=k {
        tr.blowdown(a[2 * i])?;
    }
    let mut out = vec![x0];
    for i in 1..=k {
        out.push(a[2 * i - 1]);
        out.push(ys[i - 1]);
    }
    Ok(out)
}

/// A reading `((0_{2k+1}, alpha_0, ..., alpha_n))` of an almost standard
/// circular graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlmostStandard {
    /// Cyclic order, block first.
    pub ids: Vec<VertexId>,
    pub block: usize,
    pub alphas: Vec<i64>,
}

fn alphas_ok(a: &[i64]) -> bool {
    match a {
        [] => true,
        [w] => *w <= 0,
        [0, -1] | [-1, 0] | [0, -1, -1] | [-1, -1, 0] => true,
        _ => {
            let (f, l) = (a[0], a[a.len() - 1]);
            f <= 0 && l <= 0 && f + l <= -2 && a[1..a.len() - 1].iter().all(|&w| w <= -2)
        }
    }
}

/// First almost-standard reading of `c` in its stored orientation, trying
/// base points in order and shorter zero blocks first.
pub fn almost_standard_reading(c: &CircularGraph) -> Option<AlmostStandard> {
    let n = c.len();
    for r in 0..n {
        let rc = c.rotate(r);
        let lead = rc.weights.iter().take_while(|&&w| w == 0).count();
        for b in (1..=lead).step_by(2) {
            let alphas = rc.weights[b..].to_vec();
            if alphas_ok(&alphas) {
                return Some(AlmostStandard { ids: rc.ids.clone(), block: b, alphas });
            }
        }
    }
    None
}

fn circle_of(g: &WeightedGraph) -> Result<CircularGraph> {
    CircularGraph::from_graph(g).ok_or(Error::NotAlmostStandard)
}

/// Shift of an almost standard circular graph. `Left` lowers `alpha_0` and
/// raises `alpha_n`; `Right` does the opposite.
pub fn shift(g: &WeightedGraph, dir: Direction) -> Result<(WeightedGraph, TransformationTrace)> {
    let c = circle_of(g)?;
    let r = almost_standard_reading(&c).ok_or(Error::NotAlmostStandard)?;
    if r.alphas.len() < 2 {
        return Err(Error::NotAlmostStandard);
    }
    let mut tr = Tracer::new(g);
    let mut ids = r.ids.clone();
    let (a0, an) = (ids[r.block], *ids.last().unwrap());
    let t = if dir == Direction::Left { -1 } else { 1 };
    tr.transfer(&mut ids[..r.block], Some(an), Some(a0), t)?;
    Ok(tr.finish())
}

/// Turn: the last two zeros of the block travel past every `alpha_i`.
/// `Right` undoes a `Left` turn.
pub fn turn(g: &WeightedGraph, dir: Direction) -> Result<(WeightedGraph, TransformationTrace)> {
    let c = circle_of(g).map_err(|_| Error::PatternMismatch("not circular".into()))?;
    let r = almost_standard_reading(&c)
        .filter(|r| r.block >= 3 && !r.alphas.is_empty())
        .ok_or_else(|| Error::PatternMismatch("expected ((0_{2k+1}, alpha...)) with k >= 1".into()))?;
    let mut tr = Tracer::new(g);
    let mut ids = r.ids.clone();
    let b = r.block;
    let m = ids.len();
    match dir {
        Direction::Left => {
            // pair at b-2, b-1 hops right past positions b..m
            let mut pos = b - 2;
            while pos + 2 < m {
                let mid = tr.hop_left(ids[pos], ids[pos + 1], ids[pos + 2])?;
                ids[pos + 1] = mid;
                pos += 1;
            }
        }
        Direction::Right => {
            // pair at 0, 1 hops left past positions m-1 down to b
            ids.rotate_right(m - b);
            // now alphas occupy 0..m-b and the block follows
            let mut pos = m - b;
            while pos > 0 {
                let mid = tr.hop_right(ids[pos - 1], ids[pos], ids[pos + 1])?;
                ids[pos] = mid;
                pos -= 1;
            }
        }
    }
    Ok(tr.finish())
}
