//! Canonical labeling against brute force over every vertex permutation.

use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

mod common;
use common::{brute_aut, brute_key, labeled, permutations};
use vstab::generator::enumerate_graphs;
use vstab::{are_isomorphic, automorphisms, canonical_form, canonical_labeling};

#[test]
fn canonical_form_partitions_labeled_graphs_like_brute_force() {
    for n in 1..=6 {
        let perms = permutations(n);
        let mut canon_to_brute = HashMap::new();
        let mut brute_to_canon = HashMap::new();
        for mask in 0..1u64 << (n * (n - 1) / 2) {
            let g = labeled(n, mask);
            let c = canonical_form(&g);
            let b = brute_key(&g, &perms);
            assert_eq!(
                *canon_to_brute.entry(c.clone()).or_insert(b),
                b,
                "n={n} mask={mask:#x}"
            );
            assert_eq!(
                *brute_to_canon.entry(b).or_insert(c.clone()),
                c,
                "n={n} mask={mask:#x}"
            );
        }
    }
}

#[test]
fn classes_up_to_seven_are_pairwise_distinct_and_stable_under_relabeling() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for n in 1..=7 {
        let perms = permutations(n);
        let graphs = enumerate_graphs(n, None, 1).unwrap();
        let mut seen = HashMap::new();
        for (key, g) in &graphs {
            let b = brute_key(g, &perms);
            assert!(
                seen.insert(b, key.clone()).is_none(),
                "two classes share brute-force key at n={n}"
            );
            for _ in 0..4 {
                let mut p: Vec<usize> = (0..n).collect();
                p.shuffle(&mut rng);
                let h = g.permuted(&p);
                assert_eq!(&canonical_form(&h), key);
                assert!(are_isomorphic(g, &h));
            }
        }
    }
}

#[test]
fn automorphism_counts_match_brute_force() {
    for n in 1..=7 {
        let perms = permutations(n);
        for (_, g) in enumerate_graphs(n, None, 1).unwrap() {
            let aut = automorphisms(&g);
            assert_eq!(aut.order, brute_aut(&g, &perms), "{g:?}");
            for gen in &aut.generators {
                assert_eq!(g.permuted(gen).rows(), g.rows());
            }
        }
    }
}

#[test]
fn orbit_stabilizer_sums_to_all_labeled_graphs() {
    for n in 1..=8usize {
        let fact: u128 = (1..=n as u128).product();
        let total: u128 = enumerate_graphs(n, None, 1)
            .unwrap()
            .iter()
            .map(|(_, g)| fact / automorphisms(g).order)
            .sum();
        assert_eq!(total, 1u128 << (n * (n - 1) / 2), "n={n}");
    }
}

#[test]
fn canonical_labeling_maps_onto_the_key() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for (key, g) in enumerate_graphs(7, None, 1)
        .unwrap()
        .into_iter()
        .step_by(13)
    {
        let mut p: Vec<usize> = (0..7).collect();
        p.shuffle(&mut rng);
        let h = g.permuted(&p);
        let c = canonical_labeling(&h);
        let lab: Vec<usize> = (0..7).map(|v| c.position(v)).collect();
        assert_eq!(h.permuted(&lab).rows(), key.graph().rows());
        // Orbits are unions of automorphism images.
        for v in 0..7 {
            for gen in &automorphisms(&h).generators {
                assert_eq!(c.orbit_of(v), c.orbit_of(gen[v]));
            }
        }
    }
}
