//! Seeded random graphs and blowup histories for fuzzing and property tests.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::birational::{StepKind, TransformationTrace, Tracer};
use crate::error::Result;
use crate::graph::{VertexId, WeightedGraph};

/// Connected graph on `1..=max_vertices` vertices: a random tree plus up to
/// `max_extra` further edges (loops and parallel edges allowed).
pub fn random_connected<R: Rng>(rng: &mut R, max_vertices: usize, lo: i64, hi: i64, max_extra: usize) -> WeightedGraph {
    let n = rng.gen_range(1..=max_vertices);
    let weights: Vec<i64> = (0..n).map(|_| rng.gen_range(lo..=hi)).collect();
    let mut edges: Vec<(usize, usize)> = (1..n).map(|i| (rng.gen_range(0..i), i)).collect();
    for _ in 0..rng.gen_range(0..=max_extra) {
        edges.push((rng.gen_range(0..n), rng.gen_range(0..n)));
    }
    WeightedGraph::build(&weights, &edges).expect("valid random graph")
}

/// Connected simple graph on `1..=max_vertices` vertices.
pub fn random_simple<R: Rng>(rng: &mut R, max_vertices: usize, lo: i64, hi: i64) -> WeightedGraph {
    let n = rng.gen_range(1..=max_vertices);
    let weights: Vec<i64> = (0..n).map(|_| rng.gen_range(lo..=hi)).collect();
    let mut edges: Vec<(usize, usize)> = (1..n).map(|i| (rng.gen_range(0..i), i)).collect();
    for _ in 0..rng.gen_range(0..=2) {
        let (a, b) = (rng.gen_range(0..n), rng.gen_range(0..n));
        let e = (a.min(b), a.max(b));
        if a != b && !edges.contains(&e) {
            edges.push(e);
        }
    }
    WeightedGraph::build(&weights, &edges).expect("valid random graph")
}

fn random_site<R: Rng>(rng: &mut R, g: &WeightedGraph) -> StepKind {
    let edges: Vec<_> = g.edges().map(|(e, _, _)| e).collect();
    if !edges.is_empty() && rng.gen_bool(0.5) {
        StepKind::InnerBlowup(*edges.choose(rng).unwrap())
    } else {
        let vs: Vec<VertexId> = g.vertices().collect();
        StepKind::OuterBlowup(*vs.choose(rng).unwrap())
    }
}

/// `steps` random blowups of `g`.
pub fn random_blowups<R: Rng>(rng: &mut R, g: &WeightedGraph, steps: usize) -> Result<(WeightedGraph, TransformationTrace)> {
    let mut tr = Tracer::new(g);
    for _ in 0..steps {
        let k = random_site(rng, tr.graph());
        tr.step(k)?;
    }
    Ok(tr.finish())
}

/// Random walk mixing blowups with legal blowdowns.
pub fn random_walk<R: Rng>(rng: &mut R, g: &WeightedGraph, steps: usize) -> Result<(WeightedGraph, TransformationTrace)> {
    let mut tr = Tracer::new(g);
    for _ in 0..steps {
        let downs: Vec<VertexId> = tr
            .graph()
            .vertices()
            .filter(|&v| crate::birational::can_blow_down(tr.graph(), v))
            .filter(|_| tr.graph().vertex_count() > 1)
            .collect();
        let k = if !downs.is_empty() && rng.gen_bool(0.4) {
            StepKind::Blowdown(*downs.choose(rng).unwrap())
        } else {
            random_site(rng, tr.graph())
        };
        tr.step(k)?;
    }
    Ok(tr.finish())
}

fn tail<R: Rng>(rng: &mut R, max_len: usize) -> Vec<i64> {
    let n = rng.gen_range(0..=max_len);
    (0..n).map(|_| rng.gen_range(-6..=-2)).collect()
}

/// Standard linear segment `[[0_{2k}, w..]]` or `[[0_{2k+1}]]`.
fn standard_segment<R: Rng>(rng: &mut R) -> Vec<i64> {
    if rng.gen_bool(0.3) {
        vec![0; 2 * rng.gen_range(0..=2) + 1]
    } else {
        let mut v = vec![0; 2 * rng.gen_range(0..=2)];
        v.extend(tail(rng, 3));
        if rng.gen_bool(0.5) {
            v.reverse();
        }
        v
    }
}

/// Random standard graph: a chain, a circle, or a branched tree of
/// standard segments.
pub fn random_standard<R: Rng>(rng: &mut R) -> WeightedGraph {
    match rng.gen_range(0..3) {
        0 => {
            let mut ws = standard_segment(rng);
            if ws.is_empty() {
                ws.push(0);
            }
            let edges: Vec<(usize, usize)> = (1..ws.len()).map(|i| (i - 1, i)).collect();
            WeightedGraph::build(&ws, &edges).unwrap()
        }
        1 => {
            let ws: Vec<i64> = match rng.gen_range(0..3) {
                0 => {
                    let mut v = vec![0; rng.gen_range(0..=4)];
                    v.push(rng.gen_range(-5..=0));
                    v
                }
                1 => {
                    let mut v = vec![0; 2 * rng.gen_range(0..=2)];
                    v.extend([-1, -1]);
                    v
                }
                _ => {
                    let mut v = vec![0; 2 * rng.gen_range(0..=2)];
                    let mut t = tail(rng, 4);
                    if t.is_empty() {
                        t.push(-2);
                    }
                    v.extend(t);
                    v
                }
            };
            let n = ws.len();
            let mut ws = ws;
            ws.rotate_left(rng.gen_range(0..n));
            let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            WeightedGraph::build(&ws, &edges).unwrap()
        }
        _ => random_branched(rng),
    }
}

fn random_branched<R: Rng>(rng: &mut R) -> WeightedGraph {
    let points = rng.gen_range(1..=2);
    let mut weights: Vec<i64> = (0..points).map(|_| rng.gen_range(-4..=2)).collect();
    let mut edges = Vec::new();
    let mut deg: BTreeMap<usize, usize> = BTreeMap::new();
    let attach = |weights: &mut Vec<i64>, edges: &mut Vec<(usize, usize)>, a: usize, b: Option<usize>, seg: Vec<i64>| {
        let mut prev = a;
        for w in seg {
            weights.push(w);
            let id = weights.len() - 1;
            edges.push((prev, id));
            prev = id;
        }
        if let Some(b) = b {
            edges.push((prev, b));
        }
    };
    if points == 2 {
        let seg = loop {
            let s = standard_segment(rng);
            if !s.is_empty() {
                break s;
            }
        };
        attach(&mut weights, &mut edges, 0, Some(1), seg);
        *deg.entry(0).or_default() += 1;
        *deg.entry(1).or_default() += 1;
    }
    for p in 0..points {
        while deg.get(&p).copied().unwrap_or(0) < 3 || (rng.gen_bool(0.2) && deg[&p] < 4) {
            let seg = loop {
                let s = standard_segment(rng);
                if !s.is_empty() {
                    break s;
                }
            };
            attach(&mut weights, &mut edges, p, None, seg);
            *deg.entry(p).or_default() += 1;
        }
    }
    WeightedGraph::build(&weights, &edges).unwrap()
}
