//! Acceptance run: one line per criterion, non-zero exit if any fails.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use nalgebra::DMatrix;
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use birgraph::birational::{apply_trace, StepKind, TransformationTrace, Tracer};
use birgraph::equivalence::{classify_linear_pair, LinearPair};
use birgraph::invariants::{
    adjacency_matrix, chain_from_fraction, circular_zero_spectrum, continued_fraction, discriminant,
    discriminant_recursive, inertia, is_contractible, zariski_check, Inertia,
};
use birgraph::sample::{random_blowups, random_connected, random_standard};
use birgraph::standardize::{canonical_form, shape_of, to_standard, ShapeTag};
use birgraph::tables::{all_rows, check_tables};
use birgraph::{format_graph, parse_graph, CircularGraph, LinearChain, VertexId, WeightedGraph};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t < limit, || format!("took {t:.2?}, limit {limit:?}"))
}

fn key(g: &WeightedGraph) -> String {
    let (s, _) = to_standard(g).unwrap();
    canonical_form(&s).unwrap().0
}

fn inertia_tables() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let cells = check_tables(&mut rng, &all_rows(), 0..=4, 1..=6, 50);
    if let Some(bad) = cells.iter().find(|c| !c.ok()) {
        return Err(bad.to_string());
    }
    within(start, Duration::from_secs(10))?;
    let samples: usize = cells.iter().map(|c| c.samples).sum();
    Ok(format!("{} cells, {samples} instances", cells.len()))
}

fn zero_chains() -> Outcome {
    for m in 1..=20usize {
        let g = LinearChain::new(vec![0; m]).to_graph().unwrap();
        let k = m / 2;
        ensure(inertia(&g) == Inertia::new(k, k, m % 2), || format!("inertia of [[0_{m}]]"))?;
        let want = if m % 2 == 1 { 0 } else if k % 2 == 0 { 1 } else { -1 };
        ensure(discriminant(&g) == BigInt::from(want), || format!("discriminant of [[0_{m}]]"))?;
    }
    Ok("m = 1..20".into())
}

fn standardization_soundness() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut steps = 0;
    for i in 0..1000 {
        let g = random_connected(&mut rng, 12, -5, 3, 3);
        let label = || format!("graph {i}: {}", format_graph(&g).replace('\n', "; "));
        let (s, t) = to_standard(&g).map_err(|e| format!("{}: {e}", label()))?;
        ensure(shape_of(&s).tag == ShapeTag::Standard, || format!("{} not standard", label()))?;
        ensure(discriminant(&g) == discriminant(&s), || format!("{} delta changed", label()))?;
        let (a, b) = (inertia(&g), inertia(&s));
        ensure((a.plus, a.zero) == (b.plus, b.zero), || format!("{} inertia {a} vs {b}", label()))?;
        ensure(g.betti() == s.betti(), || format!("{} betti changed", label()))?;
        let reread = TransformationTrace::parse(&t.to_text(), &g).map_err(|e| format!("{}: {e}", label()))?;
        let end = apply_trace(&g, &reread).map_err(|e| format!("{}: {e}", label()))?;
        ensure(end.state_string() == s.state_string(), || format!("{} replay differs", label()))?;
        steps += t.len();
    }
    within(start, Duration::from_secs(60))?;
    Ok(format!("1000 graphs, {steps} steps replayed"))
}

fn uniqueness_roundtrip() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for i in 0..500 {
        let a = random_standard(&mut rng);
        let (g, _) = random_blowups(&mut rng, &a, 30).map_err(|e| e.to_string())?;
        let before = canonical_form(&a).map_err(|e| e.to_string())?;
        let after = key(&g);
        ensure(before.0 == after, || format!("sample {i}: {} gave {before} then {after}", format_graph(&a)))?;
    }
    Ok("500 graphs x 30 blowups".into())
}

fn example_pair() -> Result<LinearPair, String> {
    let gamma = LinearChain::new(vec![-1; 5]);
    let g = gamma.to_graph().map_err(|e| e.to_string())?;
    let contract = |vs: [u32; 2]| {
        let mut tr = Tracer::new(&g);
        for v in vs {
            tr.blowdown(VertexId(v)).unwrap();
        }
        tr.finish()
    };
    let (a, ta) = contract([0, 3]);
    let (b, tb) = contract([1, 4]);
    for h in [&a, &b] {
        ensure(format_graph(h) == "L[0,0,0]", || format!("contraction gave {}", format_graph(h)))?;
    }
    classify_linear_pair(&gamma, &ta, &tb).map_err(|e| e.to_string())
}

fn worked_examples() -> Outcome {
    for (ws, parts) in [(vec![-2, -1, -3], "1/2+1/3=1-1/6"), (vec![-2, -2, -1, -4], "2/3+1/4=1-1/12")] {
        let g = LinearChain::new(ws.clone()).to_graph().unwrap();
        let c = is_contractible(&g).map_err(|e| e.to_string())?;
        ensure(c.contractible && c.fraction_test == Some(true), || format!("{ws:?} ({parts})"))?;
    }
    let g = parse_graph("C(-3,-1,-2,-2,-1)").unwrap();
    let (s, _) = to_standard(&g).unwrap();
    ensure(format_graph(&s) == "C(0,0)", || format!("C(-3,-1,-2,-2,-1) gave {}", format_graph(&s)))?;

    let circles = ["C(0,0,-3,-5,-2)", "C(0,0,-5,-2,-3)", "C(0,0,-2,-3,-5)"];
    let keys: BTreeSet<String> = circles.iter().map(|c| key(&parse_graph(c).unwrap())).collect();
    ensure(keys.len() == 1, || format!("circles give keys {keys:?}"))?;

    let pair = example_pair()?;
    ensure(matches!(pair, LinearPair::MovePower(1 | -1)), || format!("five -1 chain gave {pair:?}"))?;

    let (s, _) = to_standard(&parse_graph("L[3]").unwrap()).unwrap();
    ensure(format_graph(&s) == "L[0,0,-2,-2]", || format!("L[3] gave {}", format_graph(&s)))?;
    Ok(format!("contractible chains, C(0,0), one circle key, {pair:?}, L[0,0,-2,-2]"))
}

fn continued_fractions() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..200 {
        let n = rng.gen_range(1..=10);
        let ws: Vec<i64> = (0..n).map(|_| rng.gen_range(-7..=-2)).collect();
        let ks: Vec<i64> = ws.iter().map(|w| -w).collect();
        let f = continued_fraction(&ks).map_err(|e| e.to_string())?;
        let g = LinearChain::new(ws.clone()).to_graph().unwrap();
        let rest = if n == 1 {
            BigInt::from(1)
        } else {
            discriminant(&LinearChain::new(ws[1..].to_vec()).to_graph().unwrap())
        };
        let d = discriminant(&g);
        ensure(f.m == d && f.e == rest, || format!("{ws:?}: {f} vs ({d}, {rest})"))?;
        ensure(discriminant_recursive(&g).as_ref() == Some(&d), || format!("{ws:?}: engines differ"))?;
        let back = chain_from_fraction(&f).map_err(|e| e.to_string())?;
        ensure(back.weights == ws, || format!("{ws:?}: round trip gave {:?}", back.weights))?;
    }
    Ok("200 chains".into())
}

fn blowup_spectral_law() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for i in 0..1000 {
        let g = random_connected(&mut rng, 10, -5, 3, 3);
        let (h, _) = random_blowups(&mut rng, &g, 1).map_err(|e| e.to_string())?;
        ensure(discriminant(&g) == discriminant(&h), || format!("blowup {i}: delta changed"))?;
        ensure(inertia(&h) == inertia(&g) + Inertia::new(0, 1, 0), || format!("blowup {i}: inertia"))?;
    }
    Ok("1000 blowups".into())
}

fn eigen_negative_definite(g: &WeightedGraph) -> bool {
    let m = adjacency_matrix(g);
    let n = m.n();
    let dm = DMatrix::from_fn(n, n, |i, j| m.entries[i][j].to_string().parse::<f64>().unwrap());
    dm.symmetric_eigen().eigenvalues.iter().all(|&x| x < -1e-9)
}

fn zariski_histories() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let start = LinearChain::new(vec![0]).to_graph().unwrap();
    let mut subsets = 0usize;
    for i in 0..300 {
        let steps = rng.gen_range(1..=10);
        let (g, t) = random_blowups(&mut rng, &start, steps).map_err(|e| e.to_string())?;
        let mut back = Tracer::new(&g);
        for st in t.steps.iter().rev() {
            back.step(StepKind::Blowdown(st.created.unwrap())).map_err(|e| e.to_string())?;
        }
        let (_, witness) = back.finish();
        let ok = zariski_check(&g, &witness).map_err(|e| format!("history {i}: {e}"))?;
        ensure(ok, || format!("history {i}: {}", format_graph(&g)))?;
        let vs: Vec<VertexId> = g.vertices().collect();
        for mask in 1u32..(1u32 << vs.len()) - 1 {
            let keep: BTreeSet<VertexId> = (0..vs.len()).filter(|b| mask >> b & 1 == 1).map(|b| vs[b]).collect();
            ensure(eigen_negative_definite(&g.induced(&keep)), || format!("history {i}: subgraph {keep:?}"))?;
            subsets += 1;
        }
    }
    Ok(format!("300 histories, {subsets} proper subgraphs"))
}

fn zero_circle_spectra() -> Outcome {
    let mut worst = 0f64;
    for m in 1..=24 {
        let g = CircularGraph::new(vec![0; m]).to_graph().unwrap();
        let a = adjacency_matrix(&g);
        let dm = DMatrix::from_fn(m, m, |i, j| a.entries[i][j].to_string().parse::<f64>().unwrap());
        let mut eig: Vec<f64> = dm.symmetric_eigen().eigenvalues.iter().copied().collect();
        eig.sort_by(|x, y| y.partial_cmp(x).unwrap());
        let closed = circular_zero_spectrum(m);
        for (x, y) in eig.iter().zip(&closed) {
            worst = worst.max((x - y).abs());
        }
    }
    ensure(worst < 1e-9, || format!("max deviation {worst:e}"))?;
    Ok(format!("m = 1..24, max deviation {worst:.1e}"))
}

fn rewrite_oracle() -> Outcome {
    let start = Instant::now();
    let seeds = common::seeds(5, -3, 0);
    let rep = common::run_oracle(&seeds, 4, 6);
    if let Some((a, b)) = rep.unsound.first() {
        return Err(format!("search joins {a} and {b} with different keys"));
    }
    if let Some((a, b)) = rep.incomplete.first() {
        return Err(format!("{a} and {b} share a key but no witness connects them"));
    }
    within(start, Duration::from_secs(300))?;
    Ok(format!(
        "{} seeds, {} graphs explored, {} classes ({} joined by witness only)",
        rep.seeds, rep.nodes, rep.seed_classes_key, rep.witnessed_merges
    ))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("inertia tables", inertia_tables),
        ("zero chains", zero_chains),
        ("standardization soundness", standardization_soundness),
        ("uniqueness roundtrip", uniqueness_roundtrip),
        ("worked examples", worked_examples),
        ("continued fractions", continued_fractions),
        ("blowup spectral law", blowup_spectral_law),
        ("zariski oracle", zariski_histories),
        ("zero circle spectra", zero_circle_spectra),
        ("rewrite-space oracle", rewrite_oracle),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let res = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        let secs = t.elapsed().as_secs_f64();
        match res {
            Ok(detail) => println!("criterion {:>2} PASS {name} ({secs:.2}s): {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL {name} ({secs:.2}s): {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
