//! Inertia tables of standard linear and circular graphs, recomputed from scratch.
//!
//! Each [`Row`] carries the closed form read off the tables next to a sampler
//! for admissible weights, so a row can be checked against the exact
//! signature of as many instances as wanted.

use std::fmt;
use std::ops::RangeInclusive;

use num_bigint::BigInt;
use rand::Rng;

use crate::graph::WeightedGraph;
use crate::invariants::{discriminant, inertia, Inertia};

/// One column of the chain or circular tables. `p` is the table's `l` or `k`.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Row {
    /// `[[0_m]]` with `m = p`.
    ChainZeros,
    /// `[[0_{2k}, w1..wn]]`, all `wi <= -2`.
    ChainTail,
    /// `((0_{4l+r}))`.
    Zeros(usize),
    /// `((0_{2k}, w))`, `w <= 0`, except `((0_{4l}, w))` with `-2 <= w <= 0`.
    ZerosW,
    /// `((0_{4l}, -1))`.
    ZerosMinusOne,
    /// `((0_{4l+r}, w))` for `r` in {1, 3}; `w != 0` when `r = 3`.
    OddZerosW(usize),
    /// `((0_{4l+r}, -1, -1))` for `r` in {0, 2}.
    MinusOnes(usize),
    /// `((0_{2k}, w1..wn))`, `n >= 2`, all `wi <= -2`, except the next row.
    Tail,
    /// `((0_{4l}, (-2)_n))`. `n = 1` is accepted too and fills the one
    /// gap of the tables, `((0_{4l}, -2))`.
    MinusTwos,
}

pub const ROWS: [Row; 13] = [
    Row::ChainZeros,
    Row::ChainTail,
    Row::Zeros(0),
    Row::Zeros(1),
    Row::Zeros(2),
    Row::Zeros(3),
    Row::ZerosW,
    Row::ZerosMinusOne,
    Row::OddZerosW(1),
    Row::OddZerosW(3),
    Row::MinusOnes(0),
    Row::MinusOnes(2),
    Row::Tail,
];

/// All rows including [`Row::MinusTwos`].
pub fn all_rows() -> Vec<Row> {
    let mut v = ROWS.to_vec();
    v.push(Row::MinusTwos);
    v
}

impl fmt::Display for Row {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Row::ChainZeros => write!(f, "[[0_m]]"),
            Row::ChainTail => write!(f, "[[0_2k,w1..wn]]"),
            Row::Zeros(0) => write!(f, "((0_4l))"),
            Row::Zeros(r) => write!(f, "((0_4l+{r}))"),
            Row::ZerosW => write!(f, "((0_2k,w))"),
            Row::ZerosMinusOne => write!(f, "((0_4l,-1))"),
            Row::OddZerosW(r) => write!(f, "((0_4l+{r},w))"),
            Row::MinusOnes(0) => write!(f, "((0_4l,-1,-1))"),
            Row::MinusOnes(r) => write!(f, "((0_4l+{r},-1,-1))"),
            Row::Tail => write!(f, "((0_2k,w1..wn))"),
            Row::MinusTwos => write!(f, "((0_4l,(-2)_n))"),
        }
    }
}

impl Row {
    pub fn is_circular(&self) -> bool {
        !matches!(self, Row::ChainZeros | Row::ChainTail)
    }

    /// Whether the row has a tail length parameter.
    pub fn uses_n(&self) -> bool {
        matches!(self, Row::ChainTail | Row::Tail | Row::MinusTwos)
    }

    /// Whether instances carry free weights worth sampling.
    pub fn has_free_weights(&self) -> bool {
        matches!(self, Row::ChainTail | Row::ZerosW | Row::OddZerosW(_) | Row::Tail)
    }

    fn parameter_name(&self) -> &'static str {
        match self {
            Row::ChainZeros => "m",
            Row::ChainTail | Row::ZerosW | Row::Tail => "k",
            _ => "l",
        }
    }

    /// Number of leading zeros.
    fn zeros(&self, p: usize) -> usize {
        match self {
            Row::ChainZeros => p,
            Row::ChainTail | Row::ZerosW | Row::Tail => 2 * p,
            Row::Zeros(r) | Row::OddZerosW(r) | Row::MinusOnes(r) => 4 * p + r,
            Row::ZerosMinusOne | Row::MinusTwos => 4 * p,
        }
    }

    /// Whether `(p, n)` names an actual instance of the row.
    pub fn admissible(&self, p: usize, n: usize) -> bool {
        match self {
            Row::Zeros(0) | Row::ChainZeros => p >= 1,
            Row::ChainTail | Row::MinusTwos => n >= 1,
            Row::Tail => n >= 2,
            _ => true,
        }
    }

    /// The tabulated inertia.
    pub fn expected(&self, p: usize, n: usize) -> Inertia {
        let l = p;
        let k = p;
        match self {
            Row::ChainZeros => Inertia::new(p / 2, p / 2, p % 2),
            Row::ChainTail => Inertia::new(k, k + n, 0),
            Row::Zeros(0) => Inertia::new(2 * l - 1, 2 * l - 1, 2),
            Row::Zeros(1) => Inertia::new(2 * l + 1, 2 * l, 0),
            Row::Zeros(2) => Inertia::new(2 * l + 1, 2 * l + 1, 0),
            Row::Zeros(_) => Inertia::new(2 * l + 1, 2 * l + 2, 0),
            Row::ZerosW => Inertia::new(k, k + 1, 0),
            Row::ZerosMinusOne => Inertia::new(2 * l + 1, 2 * l, 0),
            Row::OddZerosW(1) => Inertia::new(2 * l + 1, 2 * l + 1, 0),
            Row::OddZerosW(_) => Inertia::new(2 * l + 1, 2 * l + 2, 1),
            Row::MinusOnes(0) => Inertia::new(2 * l + 1, 2 * l + 1, 0),
            Row::MinusOnes(_) => Inertia::new(2 * l + 1, 2 * l + 3, 0),
            Row::Tail => Inertia::new(k, k + n, 0),
            Row::MinusTwos => Inertia::new(2 * l, 2 * l + n - 1, 1),
        }
    }

    /// Non-zero weights of a random admissible instance.
    pub fn sample<R: Rng>(&self, rng: &mut R, p: usize, n: usize) -> Vec<i64> {
        match self {
            Row::ChainZeros | Row::Zeros(_) => vec![],
            Row::ChainTail => (0..n).map(|_| rng.gen_range(-8..=-2)).collect(),
            Row::ZerosW => {
                let lo = if p % 2 == 0 { -3 } else { 0 };
                vec![rng.gen_range(-9..=lo)]
            }
            Row::ZerosMinusOne => vec![-1],
            Row::OddZerosW(r) => {
                let hi = if *r == 3 { -1 } else { 0 };
                vec![rng.gen_range(-9..=hi)]
            }
            Row::MinusOnes(_) => vec![-1, -1],
            Row::Tail => loop {
                let ws: Vec<i64> = (0..n).map(|_| rng.gen_range(-6..=-2)).collect();
                let excluded = p % 2 == 0 && ws.iter().all(|&w| w == -2);
                if !excluded {
                    break ws;
                }
            },
            Row::MinusTwos => vec![-2; n],
        }
    }

    /// The graph with the row's zeros followed by `ws`.
    pub fn build(&self, p: usize, ws: &[i64]) -> WeightedGraph {
        let mut all = vec![0; self.zeros(p)];
        all.extend_from_slice(ws);
        let m = all.len();
        let edges: Vec<(usize, usize)> = if self.is_circular() {
            (0..m).map(|i| (i, (i + 1) % m)).collect()
        } else {
            (1..m).map(|i| (i - 1, i)).collect()
        };
        WeightedGraph::build(&all, &edges).expect("table graphs are well formed")
    }

    /// Chain rows also pin down the discriminant.
    pub fn expected_discriminant(&self, p: usize, ws: &[i64]) -> Option<BigInt> {
        match self {
            Row::ChainZeros if p % 2 == 1 => Some(BigInt::from(0)),
            Row::ChainZeros => Some(BigInt::from(if (p / 2) % 2 == 0 { 1 } else { -1 })),
            Row::ChainTail => {
                let tail = Row::ChainZeros.build(0, ws);
                let sign = if p % 2 == 0 { 1 } else { -1 };
                Some(discriminant(&tail) * sign)
            }
            _ => None,
        }
    }
}

/// Outcome of checking one `(row, p, n)` cell.
#[derive(Clone, Debug)]
pub struct CellReport {
    pub row: Row,
    pub p: usize,
    pub n: Option<usize>,
    pub expected: Inertia,
    pub samples: usize,
    /// Weight vectors (non-zero part) whose computed data disagreed.
    pub failures: Vec<(Vec<i64>, Inertia)>,
}

impl CellReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for CellReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:<18} {}={}", self.row.to_string(), self.row.parameter_name(), self.p)?;
        match self.n {
            Some(n) => write!(f, " n={n}")?,
            None => write!(f, "    ")?,
        }
        write!(f, " inertia={} samples={} ", self.expected, self.samples)?;
        if self.ok() {
            write!(f, "ok")
        } else {
            let (ws, got) = &self.failures[0];
            write!(f, "FAIL {} mismatches, e.g. w={ws:?} gave {got}", self.failures.len())
        }
    }
}

/// Checks one cell against `samples` random instances (one if the row has
/// no free weights).
pub fn check_cell<R: Rng>(rng: &mut R, row: Row, p: usize, n: usize, samples: usize) -> Option<CellReport> {
    if !row.admissible(p, n) {
        return None;
    }
    let expected = row.expected(p, n);
    let count = if row.has_free_weights() { samples } else { 1 };
    let mut failures = Vec::new();
    for _ in 0..count {
        let ws = row.sample(rng, p, n);
        let g = row.build(p, &ws);
        let got = inertia(&g);
        let disc_ok = row.expected_discriminant(p, &ws).map_or(true, |d| d == discriminant(&g));
        if got != expected || !disc_ok {
            failures.push((ws, got));
        }
    }
    Some(CellReport { row, p, n: row.uses_n().then_some(n), expected, samples: count, failures })
}

/// Checks every row over `p` in `ps` and `n` in `ns`. Chain zero rows use
/// `m` in `0..=2 * max(ps) + 1`.
pub fn check_tables<R: Rng>(
    rng: &mut R,
    rows: &[Row],
    ps: RangeInclusive<usize>,
    ns: RangeInclusive<usize>,
    samples: usize,
) -> Vec<CellReport> {
    let mut out = Vec::new();
    for &row in rows {
        let prange = if row == Row::ChainZeros { 0..=2 * ps.end() + 1 } else { ps.clone() };
        for p in prange {
            if row.uses_n() {
                for n in ns.clone() {
                    out.extend(check_cell(rng, row, p, n, samples));
                }
            } else {
                out.extend(check_cell(rng, row, p, 0, samples));
            }
        }
    }
    out
}
