//! Adjacency forms and the numbers read off them: discriminant, inertia,
//! continued fractions, contractibility and a few closed-form spectra.
//!
//! Loops add 2 to the diagonal and parallel edges add their multiplicity
//! off the diagonal, so `C(w)` has form `<w + 2>` and `C(0,0)` has
//! off-diagonal entry 2.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::birational::{self, TransformationTrace};
use crate::error::{Error, Result};
use crate::graph::{LinearChain, VertexId, WeightedGraph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymMatrix {
    pub ids: Vec<VertexId>,
    pub entries: Vec<Vec<BigInt>>,
}

impl SymMatrix {
    pub fn n(&self) -> usize {
        self.ids.len()
    }

    pub fn negated(&self) -> Vec<Vec<BigInt>> {
        self.entries.iter().map(|r| r.iter().map(|x| -x).collect()).collect()
    }

    pub fn principal(&self, keep: &[usize]) -> SymMatrix {
        SymMatrix {
            ids: keep.iter().map(|&i| self.ids[i]).collect(),
            entries: keep.iter().map(|&i| keep.iter().map(|&j| self.entries[i][j].clone()).collect()).collect(),
        }
    }

    pub fn to_rational(&self) -> Vec<Vec<BigRational>> {
        self.entries
            .iter()
            .map(|r| r.iter().map(|x| BigRational::from_integer(x.clone())).collect())
            .collect()
    }
}

impl fmt::Display for SymMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.entries.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Rows and columns follow ascending vertex id.
pub fn adjacency_matrix(g: &WeightedGraph) -> SymMatrix {
    let ids: Vec<VertexId> = g.vertices().collect();
    let index: BTreeMap<VertexId, usize> = ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let n = ids.len();
    let mut m = vec![vec![BigInt::zero(); n]; n];
    for (i, v) in ids.iter().enumerate() {
        m[i][i] = BigInt::from(g.weight(*v).unwrap());
    }
    for (_, u, v) in g.edges() {
        let (a, b) = (index[&u], index[&v]);
        if a == b {
            m[a][a] += 2;
        } else {
            m[a][b] += 1;
            m[b][a] += 1;
        }
    }
    SymMatrix { ids, entries: m }
}

/// Fraction-free elimination; the empty matrix has determinant 1.
pub fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = t / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    if n == 0 {
        return BigInt::one();
    }
    sign * &m[n - 1][n - 1]
}

/// `det(-I(g))`.
pub fn discriminant(g: &WeightedGraph) -> BigInt {
    if g.vertex_count() == 0 {
        return BigInt::one();
    }
    bareiss_det(adjacency_matrix(g).negated())
}

/// Discriminant through the branch recursion, expanding at the smallest
/// vertex whose branches each hang on a single edge. `None` when some
/// subgraph along the way has no such vertex.
pub fn discriminant_recursive(g: &WeightedGraph) -> Option<BigInt> {
    let all: BTreeSet<VertexId> = g.vertices().collect();
    let mut memo = HashMap::new();
    grdi(g, &all, &mut memo)
}

fn grdi(
    g: &WeightedGraph,
    set: &BTreeSet<VertexId>,
    memo: &mut HashMap<Vec<VertexId>, Option<BigInt>>,
) -> Option<BigInt> {
    if set.is_empty() {
        return Some(BigInt::one());
    }
    let key: Vec<VertexId> = set.iter().copied().collect();
    if let Some(r) = memo.get(&key) {
        return r.clone();
    }
    let sub = g.induced(set);
    let comps = sub.components();
    let result = if comps.len() > 1 {
        let mut acc = BigInt::one();
        let mut ok = true;
        for c in comps {
            match grdi(g, &c.into_iter().collect(), memo) {
                Some(d) => acc *= d,
                None => {
                    ok = false;
                    break;
                }
            }
        }
        ok.then_some(acc)
    } else {
        expand_at_valid(g, &sub, set, memo)
    };
    memo.insert(key, result.clone());
    result
}

fn expand_at_valid(
    g: &WeightedGraph,
    sub: &WeightedGraph,
    set: &BTreeSet<VertexId>,
    memo: &mut HashMap<Vec<VertexId>, Option<BigInt>>,
) -> Option<BigInt> {
    'vertex: for v in sub.vertices() {
        if sub.loops_at(v) > 0 {
            continue;
        }
        let mut rest = set.clone();
        rest.remove(&v);
        let branches = sub.induced(&rest).components();
        // each branch must be attached through exactly one edge
        let mut attach = Vec::new();
        for b in &branches {
            let links: Vec<VertexId> = sub.neighbor_list(v).into_iter().filter(|u| b.binary_search(u).is_ok()).collect();
            if links.len() != 1 {
                continue 'vertex;
            }
            attach.push(links[0]);
        }
        let a = BigInt::from(sub.weight(v).unwrap());
        let mut deltas = Vec::new();
        for b in &branches {
            deltas.push(grdi(g, &b.iter().copied().collect(), memo)?);
        }
        let mut delta_v = BigInt::one();
        for d in &deltas {
            delta_v *= d;
        }
        let mut neg = a * &delta_v;
        for (j, b) in branches.iter().enumerate() {
            let mut bj: BTreeSet<VertexId> = b.iter().copied().collect();
            bj.remove(&attach[j]);
            let mut term = grdi(g, &bj, memo)?;
            for (i, d) in deltas.iter().enumerate() {
                if i != j {
                    term *= d;
                }
            }
            neg += term;
        }
        return Some(-neg);
    }
    None
}

#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Inertia {
    pub plus: usize,
    pub minus: usize,
    pub zero: usize,
}

impl Inertia {
    pub fn new(plus: usize, minus: usize, zero: usize) -> Self {
        Inertia { plus, minus, zero }
    }

    pub fn total(&self) -> usize {
        self.plus + self.minus + self.zero
    }

    pub fn is_negative_definite(&self) -> bool {
        self.plus == 0 && self.zero == 0
    }
}

impl std::ops::Add for Inertia {
    type Output = Inertia;
    fn add(self, o: Inertia) -> Inertia {
        Inertia::new(self.plus + o.plus, self.minus + o.minus, self.zero + o.zero)
    }
}

impl fmt::Display for Inertia {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.plus, self.minus, self.zero)
    }
}

/// Signature by symmetric congruence over the rationals.
pub fn rational_inertia(mut m: Vec<Vec<BigRational>>) -> Inertia {
    let mut out = Inertia::default();
    let mut live: Vec<usize> = (0..m.len()).collect();
    let count = |x: &BigRational, out: &mut Inertia| {
        if x.is_positive() {
            out.plus += 1;
        } else {
            out.minus += 1;
        }
    };
    while !live.is_empty() {
        if let Some(pos) = live.iter().position(|&i| !m[i][i].is_zero()) {
            let i = live.remove(pos);
            let p = m[i][i].clone();
            count(&p, &mut out);
            for &r in &live {
                if m[r][i].is_zero() {
                    continue;
                }
                let f = &m[r][i] / &p;
                for &s in &live {
                    let t = &f * &m[i][s];
                    m[r][s] -= t;
                }
            }
            continue;
        }
        let pair = live.iter().enumerate().find_map(|(a, &i)| {
            live[a + 1..].iter().find(|&&j| !m[i][j].is_zero()).map(|&j| (i, j))
        });
        let Some((i, j)) = pair else {
            out.zero += live.len();
            break;
        };
        // hyperbolic block [[0, a], [a, 0]] contributes one of each sign
        out.plus += 1;
        out.minus += 1;
        live.retain(|&x| x != i && x != j);
        let a = m[i][j].clone();
        let snapshot: Vec<(usize, BigRational, BigRational)> =
            live.iter().map(|&r| (r, m[r][i].clone(), m[r][j].clone())).collect();
        for (r, ri, rj) in &snapshot {
            for (s, si, sj) in &snapshot {
                let t = (ri * sj + rj * si) / &a;
                m[*r][*s] -= t;
            }
        }
    }
    out
}

pub fn inertia(g: &WeightedGraph) -> Inertia {
    rational_inertia(adjacency_matrix(g).to_rational())
}

/// Inertia of the subgraph induced on `keep`.
pub fn inertia_of(g: &WeightedGraph, keep: &BTreeSet<VertexId>) -> Inertia {
    inertia(&g.induced(keep))
}

/// Reduced `m/e` with `0 <= e < m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fraction {
    pub m: BigInt,
    pub e: BigInt,
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.m, self.e)
    }
}

/// Evaluates `[k1, ..., kn] = k1 - 1/(k2 - 1/(...))`.
pub fn continued_fraction(ks: &[i64]) -> Result<Fraction> {
    if ks.is_empty() {
        return Err(Error::MalformedFraction("empty expansion".into()));
    }
    if let Some(k) = ks.iter().skip(1).find(|&&k| k < 2) {
        return Err(Error::MalformedFraction(format!("term {k} below 2")));
    }
    let (p, q) = cf_pair(ks);
    if q.is_negative() || q >= p || !p.gcd(&q).is_one() {
        return Err(Error::MalformedFraction(format!("{p}/{q} outside 0 <= e < m")));
    }
    Ok(Fraction { m: p, e: q })
}

// numerator and denominator without normalization
fn cf_pair(ks: &[i64]) -> (BigInt, BigInt) {
    let mut p = BigInt::from(*ks.last().unwrap());
    let mut q = BigInt::one();
    for &k in ks.iter().rev().skip(1) {
        let np = BigInt::from(k) * &p - &q;
        q = p;
        p = np;
    }
    (p, q)
}

/// Inverse of [`continued_fraction`]: the chain `[[-k1, ..., -kn]]`.
pub fn chain_from_fraction(f: &Fraction) -> Result<LinearChain> {
    if !f.e.is_positive() || f.e >= f.m || !f.m.gcd(&f.e).is_one() {
        return Err(Error::MalformedFraction(format!("{f} not in normal range")));
    }
    let (mut m, mut e) = (f.m.clone(), f.e.clone());
    let mut ks = Vec::new();
    while !e.is_zero() {
        let k = m.div_ceil(&e);
        let ne = &k * &e - &m;
        ks.push(-i64::try_from(k).map_err(|_| Error::MalformedFraction("term too large".into()))?);
        m = e;
        e = ne;
    }
    Ok(LinearChain::new(ks))
}

/// Value of `[x1, ..., xn]` for arbitrary integer terms, `None` when a
/// partial denominator vanishes.
pub fn cf_value(xs: &[i64]) -> Option<BigRational> {
    let mut acc: Option<BigRational> = None;
    for &x in xs.iter().rev() {
        let xr = BigRational::from_integer(BigInt::from(x));
        acc = Some(match acc {
            None => xr,
            Some(a) if a.is_zero() => return None,
            Some(a) => xr - a.recip(),
        });
    }
    acc
}

/// A graph whose form carries rational entries; used only to compute
/// invariants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalForm {
    pub ids: Vec<VertexId>,
    pub entries: Vec<Vec<BigRational>>,
}

impl RationalForm {
    pub fn inertia(&self) -> Inertia {
        rational_inertia(self.entries.clone())
    }

    /// `det(-M)` by Gaussian elimination.
    pub fn discriminant(&self) -> BigRational {
        let mut m: Vec<Vec<BigRational>> =
            self.entries.iter().map(|r| r.iter().map(|x| -x.clone()).collect()).collect();
        let n = m.len();
        let mut det = BigRational::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&r| !m[r][k].is_zero()) else {
                return BigRational::zero();
            };
            if p != k {
                m.swap(p, k);
                det = -det;
            }
            det *= m[k][k].clone();
            for i in k + 1..n {
                let f = &m[i][k] / &m[k][k];
                for j in k..n {
                    let t = &f * &m[k][j];
                    m[i][j] -= t;
                }
            }
        }
        det
    }
}

/// Removes the linear branch `branch = [v1, ..., vn]` hanging at `v0`,
/// returning the reduced form and the diagonal `w'_1, ..., w'_n`.
pub fn cfr1_reduce(
    g: &WeightedGraph,
    v0: VertexId,
    branch: &[VertexId],
) -> Result<(RationalForm, Vec<BigRational>)> {
    let bad = |m: &str| Error::PatternMismatch(m.to_string());
    if branch.is_empty() || !g.contains(v0) {
        return Err(bad("empty branch or missing base vertex"));
    }
    let ws: Vec<i64> = branch
        .iter()
        .map(|&v| g.weight(v).ok_or(Error::MissingVertex(v)))
        .collect::<Result<_>>()?;
    let n = branch.len();
    // the first weight may be -1 as well; inner weights stay <= -2
    let inner_bad = n > 2 && ws[1..n - 1].iter().any(|&w| w > -2);
    if inner_bad || ws[0] > -1 || ws[n - 1] > -1 || (n > 1 && ws[0] == -1 && ws[n - 1] == -1) {
        return Err(bad("branch weights must be <= -2 apart from the ends"));
    }
    // shape: v0 - v1 - ... - vn with vn an end and no other attachments
    let mut prev = v0;
    for (i, &v) in branch.iter().enumerate() {
        let mut expect = vec![prev];
        if i + 1 < n {
            expect.push(branch[i + 1]);
        }
        expect.sort();
        if g.neighbor_list(v) != expect {
            return Err(bad("branch is not a linear chain attached by one edge"));
        }
        prev = v;
    }
    let mut diag: Vec<BigRational> = vec![BigRational::zero(); n];
    let mut acc = BigRational::from_integer(BigInt::from(ws[n - 1]));
    diag[n - 1] = acc.clone();
    for i in (0..n - 1).rev() {
        acc = BigRational::from_integer(BigInt::from(ws[i])) - acc.recip();
        diag[i] = acc.clone();
    }
    let gone: BTreeSet<VertexId> = branch.iter().copied().collect();
    let keep: BTreeSet<VertexId> = g.vertices().filter(|v| !gone.contains(v)).collect();
    let sub = adjacency_matrix(&g.induced(&keep));
    let mut entries = sub.to_rational();
    let i0 = sub.ids.iter().position(|&v| v == v0).unwrap();
    entries[i0][i0] -= diag[0].recip();
    Ok((RationalForm { ids: sub.ids, entries }, diag))
}

#[derive(Clone, Debug)]
pub struct Contractibility {
    pub contractible: bool,
    /// Greedy blowdown sequence down to `[[-1]]` when contractible.
    pub trace: Option<TransformationTrace>,
    /// Outcome of the `e1/m1 + e2/m2 = 1 - 1/(m1 m2)` test for chains with a
    /// single `-1` vertex and all other weights `<= -2`.
    pub fraction_test: Option<bool>,
}

pub fn is_contractible(g: &WeightedGraph) -> Result<Contractibility> {
    let n = g.vertex_count();
    let decided = g.is_tree() && inertia(g) == Inertia::new(0, n, 0) && discriminant(g).is_one();
    let fraction_test = LinearChain::from_graph(g).and_then(|c| fraction_test(&c.weights));
    if let Some(f) = fraction_test {
        if f != decided {
            return Err(Error::InvalidWitness("fraction test disagrees with discriminant".into()));
        }
    }
    let trace = if decided {
        let (h, t) = birational::minimalize(g)?;
        let end = h.vertices().next().and_then(|v| h.weight(v));
        if h.vertex_count() != 1 || end != Some(-1) {
            return Err(Error::InvalidWitness("greedy contraction stopped early".into()));
        }
        Some(t)
    } else {
        None
    };
    Ok(Contractibility { contractible: decided, trace, fraction_test })
}

/// Tests the fraction identity on `[[w0, ..., wn]]` with exactly one `-1`
/// and the other weights `<= -2`; `None` outside that pattern.
pub fn fraction_test(ws: &[i64]) -> Option<bool> {
    let ones: Vec<usize> = (0..ws.len()).filter(|&i| ws[i] == -1).collect();
    if ones.len() != 1 || ws.iter().any(|&w| w != -1 && w > -2) {
        return None;
    }
    let k = ones[0];
    let left: Vec<i64> = ws[..k].iter().rev().map(|w| -w).collect();
    let right: Vec<i64> = ws[k + 1..].iter().map(|w| -w).collect();
    let (e1, m1) = inverse_parts(&left);
    let (e2, m2) = inverse_parts(&right);
    let lhs = BigRational::new(e1, m1.clone()) + BigRational::new(e2, m2.clone());
    let rhs = BigRational::one() - BigRational::new(BigInt::one(), m1 * m2);
    Some(lhs == rhs)
}

// e/m with m/e = [xs]; the empty expansion gives 0/1
fn inverse_parts(xs: &[i64]) -> (BigInt, BigInt) {
    if xs.is_empty() {
        return (BigInt::zero(), BigInt::one());
    }
    let (p, q) = cf_pair(xs);
    (q, p)
}

/// `2 cos(2 pi l / m)` for `l = 0..m`, sorted descending.
pub fn circular_zero_spectrum(m: usize) -> Vec<f64> {
    let mut v: Vec<f64> = (0..m)
        .map(|l| 2.0 * (2.0 * std::f64::consts::PI * l as f64 / m as f64).cos())
        .collect();
    v.sort_by(|a, b| b.partial_cmp(a).unwrap());
    v
}

/// Checks that every proper subgraph of `g` is negative definite, given a
/// witness trace contracting `g` onto `[[0]]`. It is enough to look at the
/// subgraphs missing one vertex.
pub fn zariski_check(g: &WeightedGraph, witness: &TransformationTrace) -> Result<bool> {
    let end = birational::apply_trace(g, witness).map_err(|e| Error::InvalidWitness(e.to_string()))?;
    let single_zero = end.vertex_count() == 1 && end.weights().values().all(|&w| w == 0) && end.edge_count() == 0;
    if !single_zero {
        return Err(Error::InvalidWitness("trace does not end at [[0]]".into()));
    }
    let all: BTreeSet<VertexId> = g.vertices().collect();
    for v in &all {
        let mut keep = all.clone();
        keep.remove(v);
        if !inertia_of(g, &keep).is_negative_definite() && !keep.is_empty() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// For a chain contracted onto `[[0_{2k+1}]]`, checks that `sub` has at most
/// `k` non-negative eigenvalues. `sub` must be proper and either connected or
/// missing more than `k` vertices.
pub fn zar1_check(g: &WeightedGraph, witness: &TransformationTrace, sub: &BTreeSet<VertexId>) -> Result<bool> {
    if LinearChain::from_graph(g).is_none() {
        return Err(Error::InvalidWitness("graph is not a linear chain".into()));
    }
    let end = birational::apply_trace(g, witness).map_err(|e| Error::InvalidWitness(e.to_string()))?;
    let target = LinearChain::from_graph(&end)
        .filter(|c| c.len() % 2 == 1 && c.weights.iter().all(|&w| w == 0))
        .ok_or_else(|| Error::InvalidWitness("trace does not end at [[0_{2k+1}]]".into()))?;
    let k = target.len() / 2;
    if sub.len() >= g.vertex_count() || sub.iter().any(|v| !g.contains(*v)) {
        return Err(Error::InvalidWitness("subgraph is not proper".into()));
    }
    let h = g.induced(sub);
    let missing = g.vertex_count() - sub.len();
    if !(h.vertex_count() > 0 && h.is_connected()) && missing <= k {
        return Err(Error::InvalidWitness("subgraph disconnected and too large".into()));
    }
    let i = inertia(&h);
    Ok(i.plus + i.zero <= k)
}
