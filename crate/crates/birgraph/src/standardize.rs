//! Standard shapes, the reduction to standard form, and canonical keys.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::birational::{minimalize_in, TransformationTrace, Tracer};
use crate::error::{Error, Result};
use crate::graph::{join_ints, End, LinearChain, SegmentPath, Shape, VertexId, WeightedGraph};
use crate::invariants::inertia;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ShapeTag {
    Standard,
    Semistandard,
    AlmostStandardCircular,
    ZigzagStandard,
    None,
}

impl fmt::Display for ShapeTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ShapeTag::Standard => "standard",
            ShapeTag::Semistandard => "semistandard",
            ShapeTag::AlmostStandardCircular => "almost-standard",
            ShapeTag::ZigzagStandard => "standard-zigzag",
            ShapeTag::None => "none",
        };
        f.write_str(s)
    }
}

/// Recognized shape of one segment: a block of `zeros` zeros followed by
/// `tail` in the orientation that realizes the shape.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShapeClass {
    pub tag: ShapeTag,
    pub zeros: usize,
    pub tail: Vec<i64>,
}

impl ShapeClass {
    fn none() -> Self {
        ShapeClass { tag: ShapeTag::None, zeros: 0, tail: Vec::new() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphShape {
    pub tag: ShapeTag,
    pub segments: Vec<ShapeClass>,
}

fn lead_zeros(ws: &[i64]) -> usize {
    ws.iter().take_while(|&&w| w == 0).count()
}

fn split(ws: &[i64]) -> (usize, Vec<i64>) {
    let z = lead_zeros(ws);
    (z, ws[z..].to_vec())
}

fn linear_standard(ws: &[i64]) -> bool {
    let (z, tail) = split(ws);
    if tail.is_empty() {
        return true;
    }
    z % 2 == 0 && tail.iter().all(|&w| w <= -2)
}

fn linear_semistandard(ws: &[i64]) -> bool {
    let (_, tail) = split(ws);
    let body = match tail.split_last() {
        Some((0, rest)) => rest,
        _ => &tail[..],
    };
    body.iter().all(|&w| w <= -2)
}

/// Shape of a linear segment, trying both orientations.
pub fn classify_segment(ws: &[i64]) -> ShapeClass {
    let rev: Vec<i64> = ws.iter().rev().copied().collect();
    let tests: [(ShapeTag, fn(&[i64]) -> bool); 2] =
        [(ShapeTag::Standard, linear_standard), (ShapeTag::Semistandard, linear_semistandard)];
    for (tag, test) in tests {
        for cand in [ws, &rev[..]] {
            if test(cand) {
                let (zeros, tail) = split(cand);
                return ShapeClass { tag, zeros, tail };
            }
        }
    }
    ShapeClass::none()
}

/// Readings of a cyclic sequence: every rotation of both orientations.
fn readings(ws: &[i64]) -> Vec<Vec<i64>> {
    let n = ws.len();
    let mut out = Vec::with_capacity(2 * n);
    let rev: Vec<i64> = ws.iter().rev().copied().collect();
    for base in [ws.to_vec(), rev] {
        for r in 0..n {
            let mut v = base.clone();
            v.rotate_left(r);
            out.push(v);
        }
    }
    out
}

fn circle_standard(ws: &[i64]) -> bool {
    let (z, tail) = split(ws);
    match tail.as_slice() {
        [] => true,
        [w] => *w <= 0,
        [-1, -1] => z % 2 == 0,
        t => z % 2 == 0 && t.iter().all(|&w| w <= -2),
    }
}

/// Shape of a circular component, trying all rotations and reflections.
pub fn classify_circle(ws: &[i64]) -> ShapeClass {
    let all = readings(ws);
    if let Some(r) = all.iter().find(|r| circle_standard(r)) {
        let (zeros, tail) = split(r);
        return ShapeClass { tag: ShapeTag::Standard, zeros, tail };
    }
    let c = crate::graph::CircularGraph::new(ws.to_vec());
    for dir in [c.clone(), c.reverse()] {
        if let Some(a) = crate::birational::almost_standard_reading(&dir) {
            return ShapeClass { tag: ShapeTag::AlmostStandardCircular, zeros: a.block, tail: a.alphas };
        }
    }
    ShapeClass::none()
}

fn combine(tags: impl Iterator<Item = ShapeTag>) -> ShapeTag {
    let tags: Vec<ShapeTag> = tags.collect();
    if tags.iter().all(|t| *t == ShapeTag::Standard) {
        ShapeTag::Standard
    } else if tags.iter().all(|t| matches!(t, ShapeTag::Standard | ShapeTag::Semistandard)) {
        ShapeTag::Semistandard
    } else if tags.iter().all(|t| matches!(t, ShapeTag::Standard | ShapeTag::AlmostStandardCircular)) {
        ShapeTag::AlmostStandardCircular
    } else {
        ShapeTag::None
    }
}

/// Shape of every segment and of the whole graph. A lone `[[-1]]`
/// component counts as standard: it is the contractible class.
pub fn shape_of(g: &WeightedGraph) -> GraphShape {
    let mut segments = Vec::new();
    for comp in g.components() {
        if let Some(ids) = g.cycle_order(&comp) {
            let ws: Vec<i64> = ids.iter().map(|v| g.weight(*v).unwrap()).collect();
            segments.push(classify_circle(&ws));
        }
    }
    for p in g.segment_paths() {
        let ws: Vec<i64> = p.ids.iter().map(|v| g.weight(*v).unwrap()).collect();
        let lone = p.left == End::Free && p.right == End::Free;
        if lone && ws == [-1] {
            segments.push(ShapeClass { tag: ShapeTag::Standard, zeros: 0, tail: ws });
        } else {
            segments.push(classify_segment(&ws));
        }
    }
    GraphShape { tag: combine(segments.iter().map(|s| s.tag)), segments }
}

pub fn is_standard(g: &WeightedGraph) -> bool {
    shape_of(g).tag == ShapeTag::Standard
}

/// Admissible transformation into a standard graph. Already standard
/// input comes back unchanged with an empty trace.
pub fn to_standard(g: &WeightedGraph) -> Result<(WeightedGraph, TransformationTrace)> {
    let mut tr = Tracer::new(g);
    if !is_standard(g) {
        standardize_in(&mut tr)?;
    }
    let (h, t) = tr.finish();
    if !is_standard(&h) {
        return Err(Error::NotStandard);
    }
    Ok((h, t))
}

pub(crate) fn standardize_in(tr: &mut Tracer) -> Result<()> {
    minimalize_in(tr)?;
    fix_positive(tr)?;
    for p in tr.graph().segment_paths() {
        let SegmentPath { ids, left, right } = p;
        let end = |e: End| match e {
            End::Free => None,
            End::Branch(b) => Some(b),
        };
        standardize_segment(tr, ids, end(left), end(right))?;
    }
    for comp in tr.graph().components() {
        if let Some(ids) = tr.graph().cycle_order(&comp) {
            standardize_circle(tr, ids)?;
        }
    }
    Ok(())
}

/// Inner blowups next to every positive non-branch vertex until it reaches
/// 0. An isolated vertex first gets an outer blowup, a loop is blown up first.
fn fix_positive(tr: &mut Tracer) -> Result<()> {
    let positives: Vec<VertexId> =
        tr.graph().vertices().filter(|&v| tr.weight(v) > 0 && tr.graph().degree(v) <= 2).collect();
    for v in positives {
        let mut newest: Option<VertexId> = None;
        while tr.weight(v) > 0 {
            let g = tr.graph();
            let x = if g.degree(v) == 0 {
                tr.outer_blowup(v)?
            } else if g.loops_at(v) > 0 {
                let e = g.edge_between(v, v).unwrap();
                tr.inner_blowup(e)?
            } else {
                let u = newest.unwrap_or_else(|| g.neighbors(v)[0]);
                let e = g.edge_between(v, u).ok_or(Error::MissingVertex(u))?;
                tr.inner_blowup(e)?
            };
            newest = Some(x);
        }
    }
    Ok(())
}

/// Maximal zero runs `(start, len)` of a linear sequence.
fn zero_runs(ws: &[i64]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut i = 0;
    while i < ws.len() {
        if ws[i] == 0 {
            let s = i;
            while i < ws.len() && ws[i] == 0 {
                i += 1;
            }
            out.push((s, i - s));
        } else {
            i += 1;
        }
    }
    out
}

fn standardize_segment(
    tr: &mut Tracer,
    mut ids: Vec<VertexId>,
    left: Option<VertexId>,
    right: Option<VertexId>,
) -> Result<()> {
    loop {
        let n = ids.len();
        if n == 0 {
            return Ok(());
        }
        let ws: Vec<i64> = ids.iter().map(|&v| tr.weight(v)).collect();

        if let Some(&(s, l)) = zero_runs(&ws).iter().find(|(_, l)| l % 2 == 1 && *l < n) {
            if s > 0 {
                let p = ids[s - 1];
                let q = if s + l < n { Some(ids[s + l]) } else { right };
                let t = tr.weight(p);
                tr.transfer(&mut ids[s..s + l], Some(p), q, t)?;
            } else {
                let q = ids[l];
                let t = -tr.weight(q);
                tr.transfer(&mut ids[..l], left, Some(q), t)?;
            }
            continue;
        }

        let lead = lead_zeros(&ws);
        if let Some(i) = (lead + 1..n).find(|&i| ws[i] == 0 && ws[i - 1] != 0) {
            ids[i] = tr.hop_right(ids[i - 1], ids[i], ids[i + 1])?;
            continue;
        }

        if let Some(i) = (lead + 1..n).find(|&i| ws[i] == -1) {
            tr.blowdown(ids.remove(i))?;
            continue;
        }
        if lead < n && ws[lead] == -1 {
            if n == 1 {
                // a bridge contracts; a free point is the contractible class
                if left.is_some() && right.is_some() {
                    tr.blowdown(ids.remove(0))?;
                }
                return Ok(());
            }
            if lead > 0 && n - lead >= 2 {
                let m = n - lead;
                for pair in (0..lead / 2).rev() {
                    for pos in 2 * pair..2 * pair + m {
                        ids[pos + 1] = tr.hop_left(ids[pos], ids[pos + 1], ids[pos + 2])?;
                    }
                }
                tr.blowdown(ids.remove(0))?;
            } else {
                tr.blowdown(ids.remove(lead))?;
            }
            continue;
        }
        return Ok(());
    }
}

/// Zero runs of a cyclic sequence as `(start, len)`, each preceded by the
/// nonzero at `start - 1`. Requires at least one nonzero.
fn cyclic_runs(ws: &[i64]) -> Vec<(usize, usize)> {
    let n = ws.len();
    let nz: Vec<usize> = (0..n).filter(|&i| ws[i] != 0).collect();
    let mut out = Vec::new();
    for (j, &p) in nz.iter().enumerate() {
        let q = nz[(j + 1) % nz.len()];
        let len = (q + n - p - 1) % n;
        let len = if nz.len() == 1 { n - 1 } else { len };
        if len > 0 {
            out.push(((p + 1) % n, len));
        }
    }
    out
}

fn standardize_circle(tr: &mut Tracer, mut ids: Vec<VertexId>) -> Result<()> {
    loop {
        let n = ids.len();
        let ws: Vec<i64> = ids.iter().map(|&v| tr.weight(v)).collect();
        let nz: Vec<usize> = (0..n).filter(|&i| ws[i] != 0).collect();
        if nz.len() <= 1 {
            return Ok(());
        }
        let runs = cyclic_runs(&ws);
        let at = |i: usize| (i + n) % n;

        if let Some(&(s, l)) = runs.iter().find(|(_, l)| l % 2 == 1) {
            let p = ids[at(s + n - 1)];
            let q = ids[at(s + l)];
            let mut block: Vec<VertexId> = (0..l).map(|i| ids[at(s + i)]).collect();
            tr.transfer(&mut block, Some(p), Some(q), tr.weight(p))?;
            for (i, v) in block.into_iter().enumerate() {
                ids[at(s + i)] = v;
            }
            continue;
        }

        if runs.len() > 1 {
            // merge the second run into the one before it
            let (s, l) = runs[1];
            let (ps, pl) = runs[0];
            let d = (s + n - (ps + pl)) % n;
            for j in 0..l / 2 {
                for step in 0..d {
                    let pos = s + 2 * j + n - step;
                    ids[at(pos)] = tr.hop_right(ids[at(pos + n - 1)], ids[at(pos)], ids[at(pos + 1)])?;
                }
            }
            continue;
        }

        let minus: Vec<usize> = nz.iter().copied().filter(|&i| ws[i] == -1).collect();
        if minus.is_empty() {
            return Ok(());
        }
        let m = nz.len();
        if m >= 3 {
            let good = minus.iter().copied().find(|&i| ws[at(i + n - 1)] != 0 && ws[at(i + 1)] != 0);
            match good {
                Some(i) => {
                    tr.blowdown(ids.remove(i))?;
                }
                None => {
                    // move the zero block one nonzero to the right
                    let (s, l) = runs[0];
                    for pair in (0..l / 2).rev() {
                        let pos = s + 2 * pair;
                        ids[at(pos + 1)] = tr.hop_left(ids[at(pos)], ids[at(pos + 1)], ids[at(pos + 2)])?;
                    }
                }
            }
            continue;
        }
        if minus.len() == 2 {
            return Ok(());
        }
        tr.blowdown(ids.remove(minus[0]))?;
    }
}

/// Least rotation of a cyclic sequence (Booth's algorithm).
pub fn least_rotation(s: &[i64]) -> usize {
    let n = s.len();
    if n == 0 {
        return 0;
    }
    let at = |i: i64| s[(i as usize) % n];
    let mut f = vec![-1i64; 2 * n];
    let mut k: i64 = 0;
    for j in 1..(2 * n) as i64 {
        let sj = at(j);
        let mut i = f[(j - k - 1) as usize];
        while i != -1 && sj != at(k + i + 1) {
            if sj < at(k + i + 1) {
                k = j - i - 1;
            }
            i = f[i as usize];
        }
        if sj != at(k + i + 1) {
            if sj < at(k) {
                k = j;
            }
            f[(j - k) as usize] = -1;
        } else {
            f[(j - k) as usize] = i + 1;
        }
    }
    (k as usize) % n
}

/// Least sequence over rotations and reflections.
pub fn least_cyclic_form(s: &[i64]) -> Vec<i64> {
    let mut best: Option<Vec<i64>> = None;
    let rev: Vec<i64> = s.iter().rev().copied().collect();
    for base in [s.to_vec(), rev] {
        let mut v = base;
        let r = least_rotation(&v);
        v.rotate_left(r);
        if best.as_ref().is_none_or(|b| v < *b) {
            best = Some(v);
        }
    }
    best.unwrap_or_default()
}

/// Stable text key of a standard graph: equal keys exactly for standard
/// graphs in one birational class.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey(pub String);

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

pub fn canonical_form(g: &WeightedGraph) -> Result<CanonicalKey> {
    if !is_standard(g) {
        return Err(Error::NotStandard);
    }
    let mut keys: Vec<String> = g.components().iter().map(|c| component_key(g, c)).collect();
    keys.sort();
    Ok(CanonicalKey(keys.join(" + ")))
}

fn seq(ws: &[i64]) -> String {
    join_ints(ws)
}

pub(crate) fn component_key(g: &WeightedGraph, comp: &[VertexId]) -> String {
    let ws = |ids: &[VertexId]| -> Vec<i64> { ids.iter().map(|v| g.weight(*v).unwrap()).collect() };
    match g.component_shape(comp) {
        Shape::Point | Shape::Linear => {
            let c = ws(&g.chain_order(comp).unwrap());
            let z = c.iter().filter(|&&w| w == 0).count();
            let tail: Vec<i64> = c.iter().copied().filter(|&w| w != 0).collect();
            let rev: Vec<i64> = tail.iter().rev().copied().collect();
            format!("L(z={z};{})", seq(&tail.min(rev)))
        }
        Shape::Circular => {
            let c = ws(&g.cycle_order(comp).unwrap());
            let z = c.iter().filter(|&&w| w == 0).count();
            let nz: Vec<i64> = c.iter().copied().filter(|&w| w != 0).collect();
            format!("C(z={z};{})", seq(&least_cyclic_form(&nz)))
        }
        Shape::Branched => branched_key(g, comp),
    }
}

/// A segment of a branched component reduced to what its standard form
/// determines: the zero count and the nonzero weights read from `a` to `b`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub(crate) struct SegLabel {
    pub zeros: usize,
    pub tail: Vec<i64>,
}

impl SegLabel {
    fn reversed(&self) -> SegLabel {
        SegLabel { zeros: self.zeros, tail: self.tail.iter().rev().copied().collect() }
    }

    pub(crate) fn odd_pure(&self) -> bool {
        self.tail.is_empty() && self.zeros % 2 == 1
    }
}

/// A segment of a branched component with its attachments; tips have
/// `b = None` and are read outward from `a`.
#[derive(Clone, Debug)]
pub(crate) struct BranchSeg {
    pub a: VertexId,
    pub b: Option<VertexId>,
    pub ids: Vec<VertexId>,
    pub label: SegLabel,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub(crate) enum PointLabel {
    Weight(i64),
    Pool(i64),
    Free,
}

pub(crate) struct Skeleton {
    pub points: Vec<VertexId>,
    pub segs: Vec<BranchSeg>,
    pub pool_of: BTreeMap<VertexId, usize>,
    pub pools: Vec<Vec<VertexId>>,
    pub labels: BTreeMap<VertexId, PointLabel>,
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut c = x;
    while parent[c] != r {
        let n = parent[c];
        parent[c] = r;
        c = n;
    }
    r
}

pub(crate) fn skeleton(g: &WeightedGraph, comp: &[VertexId]) -> Skeleton {
    let inside: BTreeSet<VertexId> = comp.iter().copied().collect();
    let points: Vec<VertexId> = comp.iter().copied().filter(|&v| g.degree(v) >= 3).collect();
    let mut segs = Vec::new();
    for p in g.segment_paths() {
        if !inside.contains(&p.ids[0]) {
            continue;
        }
        let ws: Vec<i64> = p.ids.iter().map(|v| g.weight(*v).unwrap()).collect();
        let (a, b, ids, ws) = match (p.left, p.right) {
            (End::Branch(a), End::Branch(b)) => (a, Some(b), p.ids, ws),
            (End::Branch(a), End::Free) => (a, None, p.ids, ws),
            (End::Free, End::Branch(a)) => {
                (a, None, p.ids.into_iter().rev().collect(), ws.into_iter().rev().collect())
            }
            (End::Free, End::Free) => unreachable!("segment of a branched component"),
        };
        let label = SegLabel {
            zeros: ws.iter().filter(|&&w| w == 0).count(),
            tail: ws.iter().copied().filter(|&w| w != 0).collect(),
        };
        segs.push(BranchSeg { a, b, ids, label });
    }
    // direct edges between branch points are empty segments
    for (_, u, v) in g.edges() {
        if inside.contains(&u) && g.degree(u) >= 3 && g.degree(v) >= 3 {
            segs.push(BranchSeg { a: u, b: Some(v), ids: Vec::new(), label: SegLabel { zeros: 0, tail: Vec::new() } });
        }
    }
    let idx: BTreeMap<VertexId, usize> = points.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut parent: Vec<usize> = (0..points.len()).collect();
    for s in &segs {
        if let Some(b) = s.b {
            if b != s.a && s.label.odd_pure() {
                let (x, y) = (find(&mut parent, idx[&s.a]), find(&mut parent, idx[&b]));
                parent[x] = y;
            }
        }
    }
    let mut pools: Vec<Vec<VertexId>> = Vec::new();
    let mut root_pool: BTreeMap<usize, usize> = BTreeMap::new();
    let mut pool_of = BTreeMap::new();
    for (i, &v) in points.iter().enumerate() {
        let r = find(&mut parent, i);
        let k = *root_pool.entry(r).or_insert_with(|| {
            pools.push(Vec::new());
            pools.len() - 1
        });
        pools[k].push(v);
        pool_of.insert(v, k);
    }
    let free: BTreeSet<usize> = segs
        .iter()
        .filter(|s| s.b.is_none() && s.label.odd_pure())
        .map(|s| pool_of[&s.a])
        .collect();
    let mut labels = BTreeMap::new();
    for (k, members) in pools.iter().enumerate() {
        for &v in members {
            let l = if free.contains(&k) {
                PointLabel::Free
            } else if members.len() == 1 {
                PointLabel::Weight(g.weight(v).unwrap())
            } else {
                PointLabel::Pool(members.iter().map(|u| g.weight(*u).unwrap()).sum())
            };
            labels.insert(v, l);
        }
    }
    Skeleton { points, segs, pool_of, pools, labels }
}

type SegKey = (usize, usize, SegLabel);
pub(crate) type Serial = (Vec<(usize, PointLabel, usize)>, Vec<SegKey>);

impl Skeleton {
    fn signature(&self, g: &WeightedGraph, v: VertexId) -> (usize, PointLabel, Vec<(bool, SegLabel)>) {
        let mut inc: Vec<(bool, SegLabel)> = Vec::new();
        for s in &self.segs {
            let ends = [Some(s.a), s.b];
            for (i, e) in ends.iter().enumerate() {
                if *e == Some(v) {
                    let l = if i == 0 { s.label.clone() } else { s.label.reversed() };
                    let l = if s.b.is_some() { l.clone().min(l.reversed()) } else { l };
                    inc.push((s.b.is_none(), l));
                }
            }
        }
        inc.sort();
        (g.degree(v), self.labels[&v].clone(), inc)
    }

    /// Serialization under the ordering `order` of branch points.
    pub(crate) fn serialize(&self, g: &WeightedGraph, order: &[VertexId]) -> Serial {
        let pos: BTreeMap<VertexId, usize> = order.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut first_in_pool: BTreeMap<usize, usize> = BTreeMap::new();
        let head = order
            .iter()
            .map(|v| {
                let k = self.pool_of[v];
                let n = first_in_pool.len();
                let p = *first_in_pool.entry(k).or_insert(n);
                (g.degree(*v), self.labels[v].clone(), p)
            })
            .collect();
        let mut segs: Vec<SegKey> = self.segs.iter().map(|s| self.seg_key(&pos, s)).collect();
        segs.sort();
        (head, segs)
    }

    pub(crate) fn seg_key(&self, pos: &BTreeMap<VertexId, usize>, s: &BranchSeg) -> SegKey {
        let i = pos[&s.a];
        match s.b {
            None => (i, usize::MAX, s.label.clone()),
            Some(b) => {
                let j = pos[&b];
                if i < j {
                    (i, j, s.label.clone())
                } else if j < i {
                    (j, i, s.label.reversed())
                } else {
                    (i, i, s.label.clone().min(s.label.reversed()))
                }
            }
        }
    }

    /// Orderings of branch points compatible with the signature classes.
    pub(crate) fn orderings(&self, g: &WeightedGraph) -> Vec<Vec<VertexId>> {
        let mut classes: BTreeMap<_, Vec<VertexId>> = BTreeMap::new();
        for &v in &self.points {
            classes.entry(self.signature(g, v)).or_default().push(v);
        }
        let mut out: Vec<Vec<VertexId>> = vec![Vec::new()];
        for members in classes.values() {
            let perms = permutations(members);
            let mut next = Vec::new();
            for prefix in &out {
                for p in &perms {
                    let mut o = prefix.clone();
                    o.extend(p.iter().copied());
                    next.push(o);
                }
            }
            out = next;
        }
        out
    }

    pub(crate) fn best(&self, g: &WeightedGraph) -> (Serial, Vec<VertexId>) {
        self.orderings(g)
            .into_iter()
            .map(|o| (self.serialize(g, &o), o))
            .min()
            .expect("at least one ordering")
    }
}

fn permutations(xs: &[VertexId]) -> Vec<Vec<VertexId>> {
    if xs.len() <= 1 {
        return vec![xs.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..xs.len() {
        let mut rest = xs.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

fn branched_key(g: &WeightedGraph, comp: &[VertexId]) -> String {
    let sk = skeleton(g, comp);
    let ((head, segs), _) = sk.best(g);
    let head: Vec<String> = head
        .iter()
        .map(|(d, l, p)| {
            let l = match l {
                PointLabel::Weight(w) => format!("w{w}"),
                PointLabel::Pool(s) => format!("p{p}s{s}"),
                PointLabel::Free => format!("p{p}f"),
            };
            format!("d{d}{l}")
        })
        .collect();
    let segs: Vec<String> = segs
        .iter()
        .map(|(i, j, l)| {
            let j = if *j == usize::MAX { "*".to_string() } else { j.to_string() };
            format!("{i}-{j}:z={};{}", l.zeros, seq(&l.tail))
        })
        .collect();
    format!("B({} | {})", head.join(","), segs.join(" "))
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum ZigzagClass {
    StandardZigzag,
    SemistandardZigzag,
    NotZigzag,
    ZigzagNonstandard,
}

fn zigzag_standard(ws: &[i64]) -> bool {
    match ws {
        [0] | [0, 0, 0] => true,
        [0, 0, rest @ ..] => rest.iter().all(|&w| w <= -2),
        _ => false,
    }
}

fn zigzag_semistandard(ws: &[i64]) -> bool {
    match ws {
        [0, rest @ ..] if rest.iter().all(|&w| w <= -2) => true,
        [0, w, 0] => *w <= -2,
        _ => false,
    }
}

/// A chain is a zigzag when its intersection form has at most one positive
/// eigenvalue.
pub fn zigzag_class(chain: &LinearChain) -> Result<ZigzagClass> {
    let g = chain.to_graph()?;
    if inertia(&g).plus > 1 {
        return Ok(ZigzagClass::NotZigzag);
    }
    let rev = chain.reverse().weights;
    let both = [&chain.weights[..], &rev[..]];
    if both.iter().any(|w| zigzag_standard(w)) {
        Ok(ZigzagClass::StandardZigzag)
    } else if both.iter().any(|w| zigzag_semistandard(w)) {
        Ok(ZigzagClass::SemistandardZigzag)
    } else {
        Ok(ZigzagClass::ZigzagNonstandard)
    }
}
