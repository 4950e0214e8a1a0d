use birgraph::birational::{apply_trace, minimalize};
use birgraph::invariants::{discriminant, inertia};
use birgraph::sample::{random_blowups, random_connected, random_standard};
use birgraph::standardize::{canonical_form, is_standard, to_standard};
use birgraph::{format_graph, WeightedGraph};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn check(g: &WeightedGraph) {
    let (h, t) = to_standard(g).unwrap_or_else(|e| panic!("{}: {e}", format_graph(g)));
    assert!(is_standard(&h));
    // minimalization may contract tips at branch points; the rest is admissible
    let (m, _) = minimalize(g).unwrap();
    let (hm, tm) = to_standard(&m).unwrap();
    assert!(tm.admissible, "{}", format_graph(&m));
    assert_eq!(hm.nu(), m.nu());
    assert_eq!(h.nu(), m.nu());
    assert_eq!(apply_trace(g, &t).unwrap(), h);
    assert_eq!(discriminant(g), discriminant(&h));
    let (a, b) = (inertia(g), inertia(&h));
    assert_eq!((a.plus, a.zero), (b.plus, b.zero), "{}", format_graph(g));
    assert_eq!(g.betti(), h.betti());
    let (h2, t2) = to_standard(&h).unwrap();
    assert!(t2.is_empty() && h2 == h);
}

#[test]
fn random_graphs_standardize() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..1000 {
        check(&random_connected(&mut rng, 12, -5, 3, 3));
    }
}

#[test]
fn blowups_keep_the_key() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..300 {
        let a = random_standard(&mut rng);
        let key = canonical_form(&a).unwrap();
        let (b, _) = random_blowups(&mut rng, &a, 30).unwrap();
        let (c, _) = to_standard(&b).unwrap_or_else(|e| panic!("{} -> {}: {e}", format_graph(&a), format_graph(&b)));
        assert_eq!(canonical_form(&c).unwrap(), key, "{} vs {}", format_graph(&a), format_graph(&c));
    }
}
