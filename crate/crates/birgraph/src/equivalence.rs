//! Equivalence decisions, explicit transformations between equivalent
//! standard graphs, and the classification of linear pairs.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::birational::{apply_trace, move_in, StepKind, TransformationTrace, Tracer};
use crate::error::{Error, Result};
use crate::graph::{LinearChain, Shape, VertexId, WeightedGraph};
use crate::invariants::inertia;
use crate::standardize::{canonical_form, component_key, is_standard, skeleton, to_standard, PointLabel};

/// Decides birational equivalence by comparing canonical keys of the
/// standard forms.
pub fn are_equivalent(g1: &WeightedGraph, g2: &WeightedGraph) -> bool {
    let key = |g: &WeightedGraph| to_standard(g).and_then(|(h, _)| canonical_form(&h));
    match (key(g1), key(g2)) {
        (Ok(a), Ok(b)) => a == b,
        _ => false,
    }
}

/// Vertex bijection between two graphs preserving weights and edge
/// multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Isomorphism {
    pub map: BTreeMap<VertexId, VertexId>,
}

impl Isomorphism {
    pub fn image(&self, v: VertexId) -> Option<VertexId> {
        self.map.get(&v).copied()
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().all(|(a, b)| a == b)
    }

    /// Checks that the map is an isomorphism from `g` onto `h`.
    pub fn verify(&self, g: &WeightedGraph, h: &WeightedGraph) -> bool {
        if g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count() {
            return false;
        }
        let img: BTreeSet<VertexId> = self.map.values().copied().collect();
        if self.map.len() != g.vertex_count() || img.len() != h.vertex_count() {
            return false;
        }
        for v in g.vertices() {
            let Some(x) = self.image(v) else { return false };
            if g.weight(v) != h.weight(x) {
                return false;
            }
            for u in g.vertices() {
                if g.multiplicity(v, u) != h.multiplicity(x, self.map[&u]) {
                    return false;
                }
            }
        }
        true
    }
}

type Sig = (i64, usize, usize);

fn sig(g: &WeightedGraph, v: VertexId) -> Sig {
    (g.weight(v).unwrap(), g.degree(v), g.loops_at(v))
}

/// Backtracking isomorphism search.
pub fn find_isomorphism(g: &WeightedGraph, h: &WeightedGraph) -> Option<Isomorphism> {
    if g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count() {
        return None;
    }
    let mut sg: Vec<Sig> = g.vertices().map(|v| sig(g, v)).collect();
    let mut sh: Vec<Sig> = h.vertices().map(|v| sig(h, v)).collect();
    sg.sort();
    sh.sort();
    if sg != sh {
        return None;
    }
    let mut count: BTreeMap<Sig, usize> = BTreeMap::new();
    for s in &sh {
        *count.entry(*s).or_default() += 1;
    }
    // BFS order inside each component, starting from the rarest signature
    let mut order = Vec::new();
    let mut seen = BTreeSet::new();
    let mut comps = g.components();
    comps.sort_by_key(|c| c.iter().map(|v| count[&sig(g, *v)]).min());
    for comp in comps {
        let start = *comp.iter().min_by_key(|v| (count[&sig(g, **v)], **v)).unwrap();
        let mut q = VecDeque::from([start]);
        seen.insert(start);
        while let Some(x) = q.pop_front() {
            order.push(x);
            for y in g.neighbors(x) {
                if seen.insert(y) {
                    q.push_back(y);
                }
            }
        }
    }
    let mut fwd = BTreeMap::new();
    let mut back = BTreeMap::new();
    if extend(g, h, &order, 0, &mut fwd, &mut back) {
        Some(Isomorphism { map: fwd })
    } else {
        None
    }
}

fn extend(
    g: &WeightedGraph,
    h: &WeightedGraph,
    order: &[VertexId],
    idx: usize,
    fwd: &mut BTreeMap<VertexId, VertexId>,
    back: &mut BTreeMap<VertexId, VertexId>,
) -> bool {
    let Some(&v) = order.get(idx) else { return true };
    let anchor = g.neighbors(v).into_iter().find(|u| fwd.contains_key(u));
    let cands: Vec<VertexId> = match anchor {
        Some(u) => h.neighbors(fwd[&u]),
        None => h.vertices().collect(),
    };
    let s = sig(g, v);
    for c in cands {
        if back.contains_key(&c) || sig(h, c) != s {
            continue;
        }
        let ok_v = g
            .neighbors(v)
            .into_iter()
            .filter(|u| fwd.contains_key(u))
            .all(|u| g.multiplicity(v, u) == h.multiplicity(c, fwd[&u]));
        let ok_c = h.neighbors(c).into_iter().filter(|x| back.contains_key(x)).all(|x| g.multiplicity(v, back[&x]) > 0);
        if !(ok_v && ok_c) {
            continue;
        }
        fwd.insert(v, c);
        back.insert(c, v);
        if extend(g, h, order, idx + 1, fwd, back) {
            return true;
        }
        fwd.remove(&v);
        back.remove(&c);
    }
    false
}

fn weights_of(g: &WeightedGraph, ids: &[VertexId]) -> Vec<i64> {
    ids.iter().map(|v| g.weight(*v).unwrap()).collect()
}

fn rev<T: Clone>(v: &[T]) -> Vec<T> {
    v.iter().rev().cloned().collect()
}

/// Moves the zeros at the start of the segment `ids` to its other end.
fn zeros_to_far_end(tr: &mut Tracer, ids: &mut [VertexId]) -> Result<()> {
    let ws = weights_of(tr.graph(), ids);
    let zeros = ws.iter().take_while(|&&w| w == 0).count();
    let m = ids.len() - zeros;
    for pair in (0..zeros / 2).rev() {
        for pos in 2 * pair..2 * pair + m {
            let mid = tr.hop_left(ids[pos], ids[pos + 1], ids[pos + 2])?;
            ids[pos + 1] = mid;
        }
    }
    // positions now read tail then zeros
    Ok(())
}

/// Zero side of a standard segment read in `ids` order: `Some(false)` for
/// zeros first, `Some(true)` for zeros last, `None` when it does not matter.
fn zero_side(ws: &[i64]) -> Option<bool> {
    let z = ws.iter().filter(|&&w| w == 0).count();
    if z == 0 || z == ws.len() {
        return None;
    }
    Some(ws[0] != 0)
}

fn flip_segment(tr: &mut Tracer, ids: &[VertexId]) -> Result<()> {
    let ws = weights_of(tr.graph(), ids);
    let mut v = if ws[0] == 0 { ids.to_vec() } else { rev(ids) };
    zeros_to_far_end(tr, &mut v)
}

fn cyclic_equal(a: &[i64], b: &[i64]) -> bool {
    let n = a.len();
    if n != b.len() {
        return false;
    }
    let ra = rev(a);
    (0..n.max(1)).any(|r| {
        let mut x = a.to_vec();
        let mut y = ra.clone();
        x.rotate_left(r % n.max(1));
        y.rotate_left(r % n.max(1));
        x == b || y == b
    })
}

/// Cyclic reading with the zero block first; `None` if the zeros are not
/// contiguous or absent.
fn zeros_first(g: &WeightedGraph, cyc: &[VertexId]) -> Option<Vec<VertexId>> {
    let n = cyc.len();
    let ws = weights_of(g, cyc);
    (0..n).find_map(|r| {
        let prev = ws[(r + n - 1) % n];
        if ws[r] == 0 && prev != 0 {
            let mut v = cyc.to_vec();
            v.rotate_left(r);
            Some(v)
        } else {
            None
        }
    })
}

fn align_circle(tr: &mut Tracer, a_comp: &[VertexId], b: &WeightedGraph, b_comp: &[VertexId]) -> Result<()> {
    let ao = tr.graph().cycle_order(a_comp).unwrap();
    let bo = b.cycle_order(b_comp).unwrap();
    let (aw, bw) = (weights_of(tr.graph(), &ao), weights_of(b, &bo));
    if cyclic_equal(&aw, &bw) {
        return Ok(());
    }
    let bz = zeros_first(b, &bo).ok_or(Error::NotEquivalent)?;
    let bws = weights_of(b, &bz);
    let z = bws.iter().filter(|&&w| w == 0).count();
    let tb = bws[z..].to_vec();
    for orient in [ao.clone(), rev(&ao)] {
        let mut ids = zeros_first(tr.graph(), &orient).ok_or(Error::NotEquivalent)?;
        let ws = weights_of(tr.graph(), &ids);
        let ta = ws[z..].to_vec();
        let n = ta.len();
        let Some(r) = (0..n).find(|&r| {
            let mut t = ta.clone();
            t.rotate_right(r);
            t == tb
        }) else {
            continue;
        };
        for _ in 0..r {
            // rotate the tail right by one through the first 2k - 1 zeros
            let last = *ids.last().unwrap();
            let t = tr.weight(last);
            let right = ids[z - 1];
            tr.transfer(&mut ids[..z - 1], Some(last), Some(right), t)?;
            ids.rotate_right(1);
        }
        return Ok(());
    }
    Err(Error::NotEquivalent)
}

fn align_chain(tr: &mut Tracer, a_comp: &[VertexId], b: &WeightedGraph, b_comp: &[VertexId]) -> Result<()> {
    let ao = tr.graph().chain_order(a_comp).unwrap();
    let bo = b.chain_order(b_comp).unwrap();
    let (aw, bw) = (weights_of(tr.graph(), &ao), weights_of(b, &bo));
    if aw == bw || aw == rev(&bw) {
        return Ok(());
    }
    flip_segment(tr, &ao)
}

fn align_branched(tr: &mut Tracer, a_comp: &[VertexId], b: &WeightedGraph, b_comp: &[VertexId]) -> Result<()> {
    let ga = tr.graph().clone();
    let ska = skeleton(&ga, a_comp);
    let skb = skeleton(b, b_comp);
    let (sa, oa) = ska.best(&ga);
    let (sb, ob) = skb.best(b);
    if sa != sb {
        return Err(Error::NotEquivalent);
    }
    let pos_a: BTreeMap<VertexId, usize> = oa.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let pos_b: BTreeMap<VertexId, usize> = ob.iter().enumerate().map(|(i, &v)| (v, i)).collect();

    // reading of a segment in its key orientation, with its zero side
    let reading = |g: &WeightedGraph, pos: &BTreeMap<VertexId, usize>, s: &crate::standardize::BranchSeg| {
        let ids = match s.b {
            Some(b) if pos[&b] < pos[&s.a] => rev(&s.ids),
            Some(b) if pos[&b] == pos[&s.a] => {
                let ws = weights_of(g, &s.ids);
                let t: Vec<i64> = ws.iter().copied().filter(|&w| w != 0).collect();
                if rev(&t) < t {
                    rev(&s.ids)
                } else {
                    s.ids.clone()
                }
            }
            _ => s.ids.clone(),
        };
        let ws = weights_of(g, &ids);
        let loop_palindrome = s.b == Some(s.a) && {
            let t: Vec<i64> = ws.iter().copied().filter(|&w| w != 0).collect();
            t == rev(&t)
        };
        let side = if loop_palindrome { None } else { zero_side(&ws) };
        (ids, side)
    };

    let mut want: BTreeMap<_, Vec<Option<bool>>> = BTreeMap::new();
    for s in &skb.segs {
        let key = skb.seg_key(&pos_b, s);
        want.entry(key).or_default().push(reading(b, &pos_b, s).1);
    }
    let mut todo: Vec<(Vec<VertexId>, Option<bool>)> = Vec::new();
    let mut groups: BTreeMap<_, Vec<(Vec<VertexId>, Option<bool>)>> = BTreeMap::new();
    for s in &ska.segs {
        groups.entry(ska.seg_key(&pos_a, s)).or_default().push(reading(&ga, &pos_a, s));
    }
    for (key, segs) in groups {
        let mut pool = want.remove(&key).ok_or(Error::NotEquivalent)?;
        let mut rest = Vec::new();
        for (ids, side) in segs {
            if let Some(i) = pool.iter().position(|d| *d == side) {
                pool.remove(i);
            } else {
                rest.push((ids, side));
            }
        }
        for (ids, side) in rest {
            let target = pool.pop().ok_or(Error::NotEquivalent)?;
            if target != side {
                todo.push((ids, side));
            }
        }
    }
    for (ids, _) in todo {
        flip_segment(tr, &ids)?;
    }

    // branch weights: flow inside each pool along odd zero bridges
    let target = |v: VertexId| b.weight(ob[pos_a[&v]]).unwrap();
    for members in &ska.pools {
        let label = &ska.labels[&members[0]];
        if matches!(label, PointLabel::Weight(_)) {
            continue;
        }
        let free_tip = ska
            .segs
            .iter()
            .find(|s| s.b.is_none() && s.label.odd_pure() && members.contains(&s.a));
        let root = free_tip.map_or(members[0], |s| s.a);
        let bridges: Vec<&crate::standardize::BranchSeg> = ska
            .segs
            .iter()
            .filter(|s| s.label.odd_pure() && s.b.is_some_and(|b| b != s.a) && members.contains(&s.a))
            .collect();
        let mut parent: BTreeMap<VertexId, (VertexId, Vec<VertexId>)> = BTreeMap::new();
        let mut seen = BTreeSet::from([root]);
        let mut order = vec![root];
        let mut i = 0;
        while i < order.len() {
            let x = order[i];
            i += 1;
            for s in &bridges {
                let b = s.b.unwrap();
                let (y, ids) = if s.a == x {
                    (b, rev(&s.ids))
                } else if b == x {
                    (s.a, s.ids.clone())
                } else {
                    continue;
                };
                if seen.insert(y) {
                    // ids read from y toward x
                    parent.insert(y, (x, ids));
                    order.push(y);
                }
            }
        }
        for &u in order.iter().rev() {
            if u == root {
                continue;
            }
            let (p, mut ids) = parent.remove(&u).unwrap();
            let t = tr.weight(u) - target(u);
            tr.transfer(&mut ids, Some(u), Some(p), t)?;
        }
        if let Some(tip) = free_tip {
            let mut ids = tip.ids.clone();
            let t = tr.weight(root) - target(root);
            tr.transfer(&mut ids, Some(root), None, t)?;
        }
    }
    Ok(())
}

/// Transformation from a standard graph `a` to an equivalent standard graph
/// `b`: a trace of elementary transformations followed by an isomorphism
/// from the trace's target onto `b`. Both are checked before returning.
pub fn transformation_between(a: &WeightedGraph, b: &WeightedGraph) -> Result<(TransformationTrace, Isomorphism)> {
    if !is_standard(a) || !is_standard(b) {
        return Err(Error::NotStandard);
    }
    if canonical_form(a)? != canonical_form(b)? {
        return Err(Error::NotEquivalent);
    }
    let mut tr = Tracer::new(a);
    let mut b_comps: Vec<(String, Vec<VertexId>)> =
        b.components().into_iter().map(|c| (component_key(b, &c), c)).collect();
    for comp in a.components() {
        let key = component_key(a, &comp);
        let i = b_comps.iter().position(|(k, _)| *k == key).ok_or(Error::NotEquivalent)?;
        let (_, bc) = b_comps.remove(i);
        // the component's vertex ids may have changed: none have, as earlier
        // components are disjoint from this one
        match a.component_shape(&comp) {
            Shape::Point | Shape::Linear => align_chain(&mut tr, &comp, b, &bc)?,
            Shape::Circular => align_circle(&mut tr, &comp, b, &bc)?,
            Shape::Branched => align_branched(&mut tr, &comp, b, &bc)?,
        }
    }
    let (h, t) = tr.finish();
    let iso = find_isomorphism(&h, b).ok_or_else(|| Error::InvalidWitness("no isomorphism onto the target".into()))?;
    let replayed = apply_trace(a, &t)?;
    if !iso.verify(&replayed, b) {
        return Err(Error::InvalidWitness("replay does not match the target".into()));
    }
    Ok((t, iso))
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum LinearPair {
    Isomorphic,
    /// `B` is the `s`-th power of the left move applied to `A`, with left
    /// meaning the start of `gamma`'s vertex order.
    MovePower(i64),
}

fn blowdowns_only(t: &TransformationTrace) -> Result<Vec<VertexId>> {
    t.steps
        .iter()
        .map(|s| match s.kind {
            StepKind::Blowdown(v) => Ok(v),
            k => Err(Error::InvalidTrace(format!("{k} is not a contraction step"))),
        })
        .collect()
}

fn replay_downs(g: &WeightedGraph, vs: &[VertexId]) -> Result<WeightedGraph> {
    let mut tr = Tracer::new(g);
    for &v in vs {
        tr.blowdown(v)?;
    }
    Ok(tr.finish().0)
}

/// Classifies two contractions of the chain `gamma` onto standard chains.
pub fn classify_linear_pair(
    gamma: &LinearChain,
    trace_a: &TransformationTrace,
    trace_b: &TransformationTrace,
) -> Result<LinearPair> {
    let mut g = gamma.to_graph()?;
    if LinearChain::from_graph(&g).is_none() {
        return Err(Error::NotLinear);
    }
    let mut da = blowdowns_only(trace_a)?;
    let mut db = blowdowns_only(trace_b)?;
    // replaying checks both traces against gamma
    apply_trace(&g, trace_a)?;
    apply_trace(&g, trace_b)?;

    // relative minimization: contract -1 vertices lost in both directions
    loop {
        let both: Vec<VertexId> = da
            .iter()
            .copied()
            .filter(|v| db.contains(v) && g.weight(*v) == Some(-1))
            .collect();
        let Some(&v) = both.first() else { break };
        let mut tr = Tracer::new(&g);
        tr.blowdown(v)?;
        g = tr.finish().0;
        da.retain(|&u| u != v);
        db.retain(|&u| u != v);
    }
    let a = replay_downs(&g, &da)?;
    let b = replay_downs(&g, &db)?;
    let (ca, cb) = match (LinearChain::from_graph(&a), LinearChain::from_graph(&b)) {
        (Some(x), Some(y)) if is_standard(&a) && is_standard(&b) => (x, y),
        _ => return Err(Error::EndpointsNotStandard),
    };
    let odd_zero = |c: &LinearChain| c.len() % 2 == 1 && c.weights.iter().all(|&w| w == 0);
    if !(odd_zero(&ca) && odd_zero(&cb)) {
        if !da.is_empty() || !db.is_empty() {
            return Err(Error::InvalidWitness("relatively minimal pair with a nontrivial contraction".into()));
        }
        return Ok(LinearPair::Isomorphic);
    }
    if ca.len() != cb.len() {
        return Err(Error::NotEquivalent);
    }
    let k = ca.len() / 2;
    if inertia(&a).plus != k {
        return Err(Error::InvalidWitness("positive index disagrees with the chain length".into()));
    }
    let order: Vec<VertexId> = gamma.ids.iter().copied().filter(|v| g.contains(*v)).collect();
    let pos = |v: VertexId| order.iter().position(|&u| u == v).unwrap() as i64;
    let first = |c: &BTreeSet<VertexId>| order.iter().copied().find(|v| c.contains(v)).unwrap();
    let sa: BTreeSet<VertexId> = a.vertices().collect();
    let sb: BTreeSet<VertexId> = b.vertices().collect();
    let s = pos(first(&sa)) - pos(first(&sb));

    // replay s moves from A to confirm they reach a chain like B
    let mut tr = Tracer::new(&a);
    let mut chain: Vec<VertexId> = order.iter().copied().filter(|v| sa.contains(v)).collect();
    for _ in 0..s.unsigned_abs() {
        if s < 0 {
            chain.reverse();
        }
        chain = move_in(&mut tr, &chain)?;
        if s < 0 {
            chain.reverse();
        }
    }
    let (end, _) = tr.finish();
    if find_isomorphism(&end, &b).is_none() {
        return Err(Error::InvalidWitness("move power does not reach the second endpoint".into()));
    }
    Ok(LinearPair::MovePower(s))
}

/// A chain dominating `A = [[0_{2k+1}]]` and its image under `s` left
/// moves, with contraction traces onto both, listed with the new vertices
/// first. Any `s` works for `k = 0`; otherwise `s` is `-1`, `0` or `1`.
pub fn move_domination(k: usize, s: i64) -> Result<(LinearChain, TransformationTrace, TransformationTrace)> {
    let n = 2 * k + 1;
    let (ws, to_a, to_b): (Vec<i64>, Vec<usize>, Vec<usize>) = if s == 0 {
        (vec![0; n], vec![], vec![])
    } else if k == 0 {
        // x_{m-1}, ..., x_0, a from a chain of outer blowups
        let m = s.unsigned_abs() as usize;
        let mut ws = vec![-2; m + 1];
        ws[0] = -1;
        ws[m] = -1;
        (ws, (0..m).collect(), (1..=m).rev().collect())
    } else if s.abs() == 1 {
        // x0, a1, a2, y1, a3, ..., a_{2k}, y_k, a_{2k+1}
        let mut ws = vec![-1; 3 * k + 2];
        let mut to_a = vec![0];
        let mut to_b = Vec::new();
        for i in 0..=k {
            to_b.push(1 + 3 * i);
            if i > 0 {
                to_a.push(3 * i);
            }
        }
        ws.shrink_to_fit();
        (ws, to_a, to_b)
    } else {
        return Err(Error::PatternMismatch("move powers beyond 1 need k = 0".into()));
    };
    let mut gamma = LinearChain::new(ws);
    let (mut ta, mut tb) = (to_a, to_b);
    if s < 0 {
        let last = gamma.len() - 1;
        gamma = LinearChain::new(rev(&gamma.weights));
        ta = ta.iter().map(|i| last - i).collect();
        tb = tb.iter().map(|i| last - i).collect();
    }
    let gg = gamma.to_graph()?;
    let contract = |idx: &[usize]| -> Result<TransformationTrace> {
        let mut tr = Tracer::new(&gg);
        for &i in idx {
            tr.blowdown(gamma.ids[i])?;
        }
        Ok(tr.finish().1)
    };
    Ok((gamma.clone(), contract(&ta)?, contract(&tb)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::parse_graph;

    fn g(s: &str) -> WeightedGraph {
        parse_graph(s).unwrap()
    }

    #[test]
    fn equivalences() {
        assert!(are_equivalent(&g("C(0,0,-3,-5,-2)"), &g("C(0,0,-2,-3,-5)")));
        assert!(are_equivalent(&g("C(-3,-1,-2,-2,-1)"), &g("C(0,0)")));
        assert!(!are_equivalent(&g("L[0,0,0]"), &g("L[0,0,0,0,0]")));
    }

    #[test]
    fn transformations() {
        let (t, iso) = transformation_between(&g("C(0,0,-3,-5,-2)"), &g("C(0,0,-5,-2,-3)")).unwrap();
        assert!(!t.is_empty() && t.inner);
        assert_eq!(iso.map.len(), 5);
        let (t, iso) = transformation_between(&g("L[0,0,-2]"), &g("L[0,0,-2]")).unwrap();
        assert!(t.is_empty() && iso.is_identity());
        let (t, _) = transformation_between(&g("L[0,0,-2,-3]"), &g("L[0,0,-3,-2]")).unwrap();
        assert!(!t.is_empty() && t.inner);
        assert!(matches!(transformation_between(&g("L[0]"), &g("L[0,0,0]")), Err(Error::NotEquivalent)));
    }

    fn witness(a: &str, b: &str) -> TransformationTrace {
        let (a, b) = (g(a), g(b));
        let (t, iso) = transformation_between(&a, &b).unwrap();
        assert!(iso.verify(&apply_trace(&a, &t).unwrap(), &b));
        t
    }

    #[test]
    fn branch_weight_flows() {
        // an odd zero tip frees the branch weight
        let star = |w: i64| format!("V 0 {w}; V 1 0; V 2 -2; V 3 -3\nE 0 1; E 0 2; E 0 3");
        let t = witness(&star(-1), &star(-5));
        assert!(t.inner && t.len() == 8);
        let t = witness(&star(-5), &star(2));
        assert!(!t.inner && t.admissible);
        // an odd zero bridge pools the two branch weights
        let pair = |x: i64, y: i64| {
            format!("V 0 {x}; V 1 {y}; V 2 0; V 3 -2; V 4 -3; V 5 -2; V 6 -3\nE 0 2; E 2 1; E 0 3; E 0 4; E 1 5; E 1 6")
        };
        let t = witness(&pair(-1, -3), &pair(-2, -2));
        assert!(t.inner);
        assert!(!are_equivalent(&g(&pair(-1, -3)), &g(&pair(-1, -2))));
        // zeros move to the other end of a bridge
        let bridge = |l: &str| format!("V 0 -1; V 1 -1; {l}; V 5 -2; V 6 -3; V 7 -2; V 8 -3\nE 0 2; E 2 3; E 3 4; E 4 1; E 0 5; E 0 6; E 1 7; E 1 8");
        witness(&bridge("V 2 0; V 3 0; V 4 -4"), &bridge("V 2 -4; V 3 0; V 4 0"));
    }

    #[test]
    fn linear_pairs() {
        for (k, s) in [(1, 1), (1, -1), (0, 2), (0, -3), (2, 1), (3, -1), (2, 0)] {
            let (gamma, ta, tb) = move_domination(k, s).unwrap();
            let want = LinearPair::MovePower(s);
            assert_eq!(classify_linear_pair(&gamma, &ta, &tb).unwrap(), want, "k={k} s={s}");
        }
        let c = LinearChain::new(vec![0, 0, -2]);
        let t = TransformationTrace::identity(&c.to_graph().unwrap());
        assert_eq!(classify_linear_pair(&c, &t, &t).unwrap(), LinearPair::Isomorphic);
    }
}
