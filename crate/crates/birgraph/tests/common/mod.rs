//! Exhaustive rewrite-space search used as an independent equivalence oracle.
//!
//! Graphs are held densely (at most `CAP` vertices, loop counts on the
//! diagonal) and blown up or down by rules written out here rather than
//! through the library, so agreement with `are_equivalent` means something.

#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};

use birgraph::birational::apply_trace;
use birgraph::equivalence::{are_equivalent, transformation_between};
use birgraph::standardize::{canonical_form, to_standard};
use birgraph::WeightedGraph;

pub const CAP: usize = 8;

#[derive(Clone, Debug)]
pub struct Dense {
    pub n: usize,
    pub w: [i64; CAP],
    pub adj: [[u8; CAP]; CAP],
}

impl Dense {
    pub fn simple(weights: &[i64], edges: &[(usize, usize)]) -> Dense {
        let mut d = Dense { n: weights.len(), w: [0; CAP], adj: [[0; CAP]; CAP] };
        d.w[..weights.len()].copy_from_slice(weights);
        for &(a, b) in edges {
            d.add(a, b);
        }
        d
    }

    fn add(&mut self, a: usize, b: usize) {
        self.adj[a][b] += 1;
        if a != b {
            self.adj[b][a] += 1;
        }
    }

    fn sub(&mut self, a: usize, b: usize) {
        self.adj[a][b] -= 1;
        if a != b {
            self.adj[b][a] -= 1;
        }
    }

    fn push(&mut self, w: i64) -> usize {
        let x = self.n;
        self.n += 1;
        self.w[x] = w;
        x
    }

    fn degree(&self, v: usize) -> usize {
        (0..self.n).map(|j| if j == v { 2 * self.adj[v][v] as usize } else { self.adj[v][j] as usize }).sum()
    }

    fn remove(&mut self, v: usize) {
        let last = self.n - 1;
        for i in v..last {
            self.w[i] = self.w[i + 1];
        }
        for r in 0..self.n {
            for c in v..last {
                self.adj[r][c] = self.adj[r][c + 1];
            }
        }
        for r in v..last {
            self.adj[r] = self.adj[r + 1];
        }
        for c in 0..CAP {
            self.adj[last][c] = 0;
            self.adj[c][last] = 0;
        }
        self.w[last] = 0;
        self.n = last;
    }

    /// Every graph one blowup or one blowdown away. Blowups are skipped once
    /// `cap` vertices are reached.
    pub fn moves(&self, cap: usize) -> Vec<Dense> {
        let mut out = Vec::new();
        if self.n < cap {
            for v in 0..self.n {
                let mut d = self.clone();
                d.w[v] -= 1;
                let x = d.push(-1);
                d.add(v, x);
                out.push(d);
            }
            for a in 0..self.n {
                for b in a..self.n {
                    if self.adj[a][b] == 0 {
                        continue;
                    }
                    let mut d = self.clone();
                    d.sub(a, b);
                    let x = d.push(-1);
                    if a == b {
                        d.w[a] -= 2;
                    } else {
                        d.w[a] -= 1;
                        d.w[b] -= 1;
                    }
                    d.add(a, x);
                    d.add(x, b);
                    out.push(d);
                }
            }
        }
        for v in 0..self.n {
            if self.w[v] != -1 || self.adj[v][v] > 0 || !(1..=2).contains(&self.degree(v)) {
                continue;
            }
            let mut ends = Vec::new();
            for j in 0..self.n {
                for _ in 0..self.adj[v][j] {
                    ends.push(j);
                }
            }
            let mut d = self.clone();
            match ends.as_slice() {
                [a] => d.w[*a] += 1,
                [a, b] => {
                    if a == b {
                        d.w[*a] += 2;
                    } else {
                        d.w[*a] += 1;
                        d.w[*b] += 1;
                    }
                    d.add(*a, *b);
                }
                _ => unreachable!(),
            }
            d.remove(v);
            out.push(d);
        }
        out
    }

    pub fn to_graph(&self) -> WeightedGraph {
        let mut edges = Vec::new();
        for a in 0..self.n {
            for b in a..self.n {
                for _ in 0..self.adj[a][b] {
                    edges.push((a, b));
                }
            }
        }
        WeightedGraph::build(&self.w[..self.n], &edges).unwrap()
    }

    /// Isomorphism-invariant code: colour refinement, then the least
    /// encoding over all orderings compatible with the colours.
    pub fn certificate(&self) -> Vec<i64> {
        let n = self.n;
        let mut colour: Vec<usize> = {
            let sig: Vec<(i64, u8, usize)> =
                (0..n).map(|v| (self.w[v], self.adj[v][v], self.degree(v))).collect();
            rank(&sig)
        };
        loop {
            let sig: Vec<(usize, Vec<(usize, u8)>)> = (0..n)
                .map(|v| {
                    let mut nb: Vec<(usize, u8)> =
                        (0..n).filter(|&j| j != v && self.adj[v][j] > 0).map(|j| (colour[j], self.adj[v][j])).collect();
                    nb.sort_unstable();
                    (colour[v], nb)
                })
                .collect();
            let next = rank(&sig);
            let classes = |c: &[usize]| c.iter().max().map_or(0, |m| m + 1);
            let done = classes(&next) == classes(&colour);
            colour = next;
            if done {
                break;
            }
        }
        let mut classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for v in 0..n {
            classes.entry(colour[v]).or_default().push(v);
        }
        let groups: Vec<Vec<usize>> = classes.into_values().collect();
        let mut best: Option<Vec<i64>> = None;
        let mut order = Vec::with_capacity(n);
        self.search(&groups, 0, &mut order, &mut best);
        best.unwrap()
    }

    fn search(&self, groups: &[Vec<usize>], gi: usize, order: &mut Vec<usize>, best: &mut Option<Vec<i64>>) {
        if gi == groups.len() {
            let mut code = Vec::with_capacity(1 + self.n + self.n * (self.n + 1) / 2);
            code.push(self.n as i64);
            code.extend(order.iter().map(|&v| self.w[v]));
            for i in 0..self.n {
                for j in i..self.n {
                    code.push(self.adj[order[i]][order[j]] as i64);
                }
            }
            if best.as_ref().is_none_or(|b| code < *b) {
                *best = Some(code);
            }
            return;
        }
        let mut g = groups[gi].clone();
        permute(&mut g, 0, &mut |p| {
            let base = order.len();
            order.extend_from_slice(p);
            self.search(groups, gi + 1, order, best);
            order.truncate(base);
        });
    }
}

fn rank<T: Ord + Clone>(sig: &[T]) -> Vec<usize> {
    let mut sorted: Vec<T> = sig.to_vec();
    sorted.sort();
    sorted.dedup();
    sig.iter().map(|s| sorted.binary_search(s).unwrap()).collect()
}

fn permute(xs: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
    if k == xs.len() {
        f(xs);
        return;
    }
    for i in k..xs.len() {
        xs.swap(k, i);
        permute(xs, k + 1, f);
        xs.swap(k, i);
    }
}

fn connected(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for &(a, b) in edges {
            for (x, y) in [(a, b), (b, a)] {
                if x == v && !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Connected simple graphs on `1..=max_n` vertices with weights in `lo..=hi`,
/// one per isomorphism class.
pub fn seeds(max_n: usize, lo: i64, hi: i64) -> Vec<Dense> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        let mut shapes: HashMap<Vec<i64>, Vec<(usize, usize)>> = HashMap::new();
        for mask in 0u32..(1 << pairs.len()) {
            let edges: Vec<(usize, usize)> =
                pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
            if edges.len() + 1 < n || !connected(n, &edges) {
                continue;
            }
            let d = Dense::simple(&vec![0; n], &edges);
            shapes.entry(d.certificate()).or_insert(edges);
        }
        let mut shapes: Vec<_> = shapes.into_iter().collect();
        shapes.sort();
        let span = (hi - lo + 1) as usize;
        let mut seen = HashMap::new();
        for (_, edges) in shapes {
            for code in 0..span.pow(n as u32) {
                let mut c = code;
                let ws: Vec<i64> = (0..n)
                    .map(|_| {
                        let w = lo + (c % span) as i64;
                        c /= span;
                        w
                    })
                    .collect();
                let d = Dense::simple(&ws, &edges);
                if seen.insert(d.certificate(), ()).is_none() {
                    out.push(d);
                }
            }
        }
    }
    out
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            self.0[a.max(b)] = a.min(b);
        }
    }
}

#[derive(Debug, Default)]
pub struct OracleReport {
    pub seeds: usize,
    pub nodes: usize,
    pub seed_classes_bfs: usize,
    pub seed_classes_key: usize,
    /// Pairs joined by the search whose canonical keys differ.
    pub unsound: Vec<(String, String)>,
    /// Seeds sharing a key that neither the search nor a replayed
    /// constructive witness could connect.
    pub incomplete: Vec<(String, String)>,
    /// Search classes merged only through a constructive witness.
    pub witnessed_merges: usize,
    pub witnessed: Vec<(String, String)>,
}

impl OracleReport {
    pub fn disagreements(&self) -> usize {
        self.unsound.len() + self.incomplete.len()
    }
}

fn key_of(g: &WeightedGraph) -> String {
    let (s, _) = to_standard(g).expect("standardizes");
    canonical_form(&s).expect("standard").0
}

/// Explores every graph within `radius` moves of a seed (at most `cap`
/// vertices) and compares the resulting connectivity with canonical keys.
pub fn run_oracle(seed_list: &[Dense], radius: usize, cap: usize) -> OracleReport {
    let mut index: HashMap<Vec<i64>, usize> = HashMap::new();
    let mut nodes: Vec<Dense> = Vec::new();
    let mut parent = Vec::new();
    let mut frontier = Vec::new();
    for s in seed_list {
        let c = s.certificate();
        if !index.contains_key(&c) {
            index.insert(c, nodes.len());
            frontier.push(nodes.len());
            parent.push(nodes.len());
            nodes.push(s.clone());
        }
    }
    let seed_count = nodes.len();
    let mut uf = UnionFind(parent);
    for _ in 0..radius {
        let mut next = Vec::new();
        for &i in &frontier {
            for m in nodes[i].moves(cap) {
                let c = m.certificate();
                let j = match index.get(&c) {
                    Some(&j) => j,
                    None => {
                        let j = nodes.len();
                        index.insert(c, j);
                        nodes.push(m);
                        uf.0.push(j);
                        next.push(j);
                        j
                    }
                };
                uf.union(i, j);
            }
        }
        frontier = next;
    }

    let mut report = OracleReport { seeds: seed_count, nodes: nodes.len(), ..Default::default() };

    // soundness: every explored node carries the key of its search class
    let mut class_key: HashMap<usize, (String, usize)> = HashMap::new();
    for i in 0..nodes.len() {
        let r = uf.find(i);
        let k = key_of(&nodes[i].to_graph());
        match class_key.get(&r) {
            None => {
                class_key.insert(r, (k, i));
            }
            Some((k0, i0)) if *k0 != k => {
                report.unsound.push((fmt(&nodes[*i0]), fmt(&nodes[i])));
            }
            _ => {}
        }
    }

    // completeness: seeds with one key but different search classes need a witness
    let mut by_key: BTreeMap<String, Vec<usize>> = BTreeMap::new();
    let mut seed_roots = std::collections::BTreeSet::new();
    for i in 0..seed_count {
        let r = uf.find(i);
        seed_roots.insert(r);
        let k = class_key[&r].0.clone();
        let v = by_key.entry(k).or_default();
        if !v.iter().any(|&j| uf.find(j) == r) {
            v.push(i);
        }
    }
    report.seed_classes_bfs = seed_roots.len();
    report.seed_classes_key = by_key.len();
    for reps in by_key.values() {
        let g0 = nodes[reps[0]].to_graph();
        let (s0, _) = to_standard(&g0).unwrap();
        for &i in &reps[1..] {
            let gi = nodes[i].to_graph();
            let ok = (|| {
                are_equivalent(&gi, &g0).then_some(())?;
                let (si, ti) = to_standard(&gi).ok()?;
                if apply_trace(&gi, &ti).ok()?.state_string() != si.state_string() {
                    return None;
                }
                let (t, iso) = transformation_between(&si, &s0).ok()?;
                let end = apply_trace(&si, &t).ok()?;
                iso.verify(&end, &s0).then_some(())
            })();
            match ok {
                Some(()) => {
                    report.witnessed_merges += 1;
                    report.witnessed.push((fmt(&nodes[reps[0]]), fmt(&nodes[i])));
                }
                None => report.incomplete.push((fmt(&nodes[reps[0]]), fmt(&nodes[i]))),
            }
        }
    }
    report
}

fn fmt(d: &Dense) -> String {
    birgraph::format_graph(&d.to_graph()).replace('\n', "; ")
}
