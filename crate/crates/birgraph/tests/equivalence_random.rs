use birgraph::birational::apply_trace;
use birgraph::equivalence::{are_equivalent, transformation_between};
use birgraph::sample::{random_blowups, random_standard};
use birgraph::standardize::to_standard;
use birgraph::format_graph;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn witnesses_between_random_standard_forms() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..400 {
        let a = random_standard(&mut rng);
        let (g, _) = random_blowups(&mut rng, &a, 12).unwrap();
        let (b, _) = to_standard(&g).unwrap();
        assert!(are_equivalent(&a, &g));
        let (t, iso) = transformation_between(&a, &b)
            .unwrap_or_else(|e| panic!("{} -> {}: {e}", format_graph(&a), format_graph(&b)));
        assert!(t.admissible);
        let end = apply_trace(&a, &t).unwrap();
        assert!(iso.verify(&end, &b));
    }
}
