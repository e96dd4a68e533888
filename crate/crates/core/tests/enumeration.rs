use std::collections::BTreeSet;

use vstab::generator::{count_planar, edge_addition_links, enumerate_graphs, enumerate_with_jobs};
use vstab::{are_isomorphic, canonical_form, Filter, GenSpec, Graph};

#[test]
fn unbounded_counts() {
    // OEIS A000088.
    let expected = [1, 2, 4, 11, 34, 156, 1044, 12346, 274668];
    for (i, &e) in expected.iter().enumerate() {
        assert_eq!(
            enumerate_graphs(i + 1, None, 0).unwrap().len(),
            e,
            "n={}",
            i + 1
        );
    }
}

#[test]
fn connected_counts() {
    // OEIS A001349.
    let expected = [1, 1, 2, 6, 21, 112, 853, 11117];
    for (i, &e) in expected.iter().enumerate() {
        let cat = enumerate_with_jobs(
            GenSpec {
                n: i + 1,
                max_degree: None,
                connected_only: true,
                filter: None,
            },
            0,
        )
        .unwrap();
        assert_eq!(cat.len(), e, "n={}", i + 1);
        assert_eq!(cat.funnel.connected, e);
    }
}

#[test]
fn degree_bound_agrees_with_filtering_the_full_enumeration() {
    let full8 = enumerate_graphs(8, None, 0).unwrap();
    for d in 0..=7 {
        let bounded: Vec<_> = enumerate_graphs(8, Some(d), 0)
            .unwrap()
            .into_iter()
            .map(|(k, _)| k)
            .collect();
        let filtered: Vec<_> = full8
            .iter()
            .filter(|(_, g)| g.max_degree() <= d)
            .map(|(k, _)| k.clone())
            .collect();
        assert_eq!(bounded, filtered, "d={d}");
    }
    let full9 = enumerate_graphs(9, None, 0).unwrap();
    let filtered = full9.iter().filter(|(_, g)| g.max_degree() <= 4).count();
    assert_eq!(enumerate_graphs(9, Some(4), 0).unwrap().len(), filtered);
}

#[test]
fn catalogs_do_not_depend_on_worker_count() {
    let spec = GenSpec {
        n: 9,
        max_degree: Some(4),
        connected_only: false,
        filter: Some(Filter::TARGET_CLASS),
    };
    let a = enumerate_with_jobs(spec, 1).unwrap();
    let b = enumerate_with_jobs(spec, 4).unwrap();
    assert_eq!(a.to_text(), b.to_text());
    assert_eq!(a.funnel, b.funnel);
    let x: Vec<_> = enumerate_graphs(8, None, 1)
        .unwrap()
        .into_iter()
        .map(|p| p.0)
        .collect();
    let y: Vec<_> = enumerate_graphs(8, None, 3)
        .unwrap()
        .into_iter()
        .map(|p| p.0)
        .collect();
    assert_eq!(x, y);
}

#[test]
fn keys_are_canonical_and_sorted() {
    let graphs = enumerate_graphs(7, None, 0).unwrap();
    assert!(graphs.windows(2).all(|w| w[0].0 < w[1].0));
    for (k, g) in graphs.iter().step_by(7) {
        assert_eq!(&canonical_form(g), k);
    }
}

#[test]
fn edge_addition_on_four_vertices_matches_brute_force() {
    let cat = enumerate_with_jobs(GenSpec::all(4), 1).unwrap();
    let graphs: Vec<Graph> = cat.keys().map(|k| k.graph()).collect();
    let mut expected = BTreeSet::new();
    for (i, a) in graphs.iter().enumerate() {
        for (j, b) in graphs.iter().enumerate() {
            let plus_one = (0..4)
                .flat_map(|u| (u + 1..4).map(move |v| (u, v)))
                .any(|(u, v)| {
                    !a.has_edge(u, v) && are_isomorphic(&a.add_edges(&[(u, v)]).unwrap(), b)
                });
            if plus_one {
                expected.insert((i, j));
            }
        }
    }
    let keys: Vec<_> = cat.keys().cloned().collect();
    let got: BTreeSet<_> = edge_addition_links(&cat)
        .unwrap()
        .into_iter()
        .map(|(a, b)| {
            (
                keys.binary_search(&a).unwrap(),
                keys.binary_search(&b).unwrap(),
            )
        })
        .collect();
    assert_eq!(got, expected);
    assert_eq!(count_planar(&cat), 11);
}

#[test]
fn gap_filter_is_empty_below_nine() {
    for n in 1..=8 {
        let cat = enumerate_with_jobs(
            GenSpec {
                n,
                max_degree: None,
                connected_only: false,
                filter: Some(Filter::StabilityGap),
            },
            0,
        )
        .unwrap();
        assert!(cat.is_empty(), "n={n}");
    }
}
