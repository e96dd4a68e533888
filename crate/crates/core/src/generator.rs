//! Isomorph-free exhaustive generation by canonical augmentation.
//!
//! Graphs grow one vertex at a time. A child is kept only if its new vertex
//! lies in the automorphism orbit of the child's designated vertex: among the
//! vertices maximizing (degree, neighbour-degree sum), the one placed last by
//! the canonical labeling. Since removing the designated vertex recovers the
//! parent class, two accepted children from different parents are never
//! isomorphic; isomorphic siblings are merged per parent by canonical key.

use std::collections::{BTreeSet, HashSet};
use std::fmt::Write as _;
use std::path::Path;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::canon::{canonical_form, canonize_rows, CanonKey, Canonical};
use crate::chromatic::{analyze, chromatic_number, ivs_chi, vs_chi, StabilityReport};
use crate::error::{Error, Result};
use crate::graph::{bits, low_mask, Graph};

/// Largest order accepted by exhaustive mode.
pub const MAX_EXHAUSTIVE_ORDER: usize = 10;

/// Staged filter applied to completed graphs, cheapest stage first:
/// Δ, then χ, then `vs`, then `ivs`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Filter {
    /// Exact values of the parameters; `max_degree: None` leaves Δ free.
    Class {
        max_degree: Option<usize>,
        chi: usize,
        vs: usize,
        ivs: usize,
    },
    /// `ivs > vs` together with `χ ≥ Δ/2 + 1`.
    StabilityGap,
}

impl Filter {
    /// Δ = 4, χ = 3, vs = 2, ivs = 3.
    pub const TARGET_CLASS: Filter = Filter::Class {
        max_degree: Some(4),
        chi: 3,
        vs: 2,
        ivs: 3,
    };
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GenSpec {
    pub n: usize,
    pub max_degree: Option<usize>,
    pub connected_only: bool,
    pub filter: Option<Filter>,
}

impl GenSpec {
    pub fn all(n: usize) -> Self {
        GenSpec {
            n,
            max_degree: None,
            connected_only: false,
            filter: None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(1..=MAX_EXHAUSTIVE_ORDER).contains(&self.n) {
            return Err(Error::OrderOutOfRange {
                n: self.n,
                min: 1,
                max: MAX_EXHAUSTIVE_ORDER,
            });
        }
        if let Some(d) = self.max_degree {
            if d > self.n - 1 {
                return Err(Error::DegreeBound {
                    bound: d,
                    n: self.n,
                });
            }
        }
        Ok(())
    }
}

/// Number of graphs surviving each stage, in stage order.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Funnel {
    pub generated: usize,
    pub connected: usize,
    pub max_degree: usize,
    pub chi: usize,
    pub vs: usize,
    pub ivs: usize,
}

impl Funnel {
    fn add(mut self, o: Funnel) -> Funnel {
        self.generated += o.generated;
        self.connected += o.connected;
        self.max_degree += o.max_degree;
        self.chi += o.chi;
        self.vs += o.vs;
        self.ivs += o.ivs;
        self
    }
}

#[derive(Clone, Debug)]
pub struct Catalog {
    pub spec: GenSpec,
    /// Strictly increasing by key.
    pub entries: Vec<(CanonKey, StabilityReport)>,
    pub funnel: Funnel,
    pub wall_time_ms: u128,
}

#[derive(Serialize)]
struct Metadata<'a> {
    spec: &'a GenSpec,
    funnel: &'a Funnel,
    entries: usize,
    wall_time_ms: u128,
}

impl Catalog {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn keys(&self) -> impl Iterator<Item = &CanonKey> {
        self.entries.iter().map(|(k, _)| k)
    }

    pub fn contains(&self, key: &CanonKey) -> bool {
        self.entries.binary_search_by(|(k, _)| k.cmp(key)).is_ok()
    }

    /// The entries whose report satisfies `keep`, with the same spec and funnel.
    pub fn restrict(&self, keep: impl Fn(&StabilityReport) -> bool) -> Catalog {
        Catalog {
            entries: self
                .entries
                .iter()
                .filter(|(_, r)| keep(r))
                .cloned()
                .collect(),
            ..self.clone()
        }
    }

    /// One line per entry: canonical graph6, a tab, the JSON report.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for (k, r) in &self.entries {
            let _ = writeln!(
                s,
                "{}\t{}",
                k,
                serde_json::to_string(r).expect("report serializes")
            );
        }
        s
    }

    pub fn metadata_json(&self) -> String {
        let meta = Metadata {
            spec: &self.spec,
            funnel: &self.funnel,
            entries: self.entries.len(),
            wall_time_ms: self.wall_time_ms,
        };
        serde_json::to_string_pretty(&meta).expect("metadata serializes")
    }

    /// Writes the catalog to `path` and its metadata to `<path>.meta.json`.
    pub fn write(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_text())
            .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        let mut meta = path.as_os_str().to_owned();
        meta.push(".meta.json");
        std::fs::write(&meta, self.metadata_json() + "\n")
            .map_err(|e| Error::Io(format!("{}: {e}", Path::new(&meta).display())))
    }
}

fn vertex_score(rows: &[u64], v: usize) -> u32 {
    let nbr_sum: u32 = bits(rows[v]).map(|u| rows[u].count_ones()).sum();
    rows[v].count_ones() << 12 | nbr_sum
}

/// Decides whether the last vertex of `rows` is canonical. Returns the
/// canonical labeling when it is.
fn accept_last(rows: &[u64]) -> Option<Canonical> {
    let n = rows.len();
    let last = n - 1;
    let scores: Vec<u32> = (0..n).map(|v| vertex_score(rows, v)).collect();
    let best = *scores.iter().max().expect("nonempty");
    if scores[last] != best {
        return None;
    }
    let canon = canonize_rows(rows);
    let designated = canon
        .labeling
        .iter()
        .rev()
        .copied()
        .find(|&v| scores[v] == best)
        .expect("some vertex attains the maximum");
    (canon.orbit_of(designated) == canon.orbit_of(last)).then_some(canon)
}

/// All accepted one-vertex extensions of `parent`, deduplicated, as canonical rows.
fn extensions(parent: &[u64], max_degree: Option<usize>) -> Vec<Vec<u64>> {
    let k = parent.len();
    let (allowed, cap) = match max_degree {
        Some(d) => {
            let full = (0..k)
                .filter(|&v| parent[v].count_ones() as usize >= d)
                .fold(0u64, |a, v| a | 1 << v);
            (low_mask(k) & !full, d)
        }
        None => (low_mask(k), k),
    };
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut child = parent.to_vec();
    child.push(0);
    let mut sub = allowed;
    loop {
        if sub.count_ones() as usize <= cap {
            for v in 0..k {
                child[v] = parent[v] | ((sub >> v & 1) << k);
            }
            child[k] = sub;
            if let Some(c) = accept_last(&child) {
                if seen.insert(c.rows.clone()) {
                    out.push(c.rows);
                }
            }
        }
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & allowed;
    }
    out
}

fn grow(rows: Vec<u64>, n: usize, max_degree: Option<usize>, emit: &mut impl FnMut(Vec<u64>)) {
    if rows.len() == n {
        emit(rows);
        return;
    }
    for child in extensions(&rows, max_degree) {
        grow(child, n, max_degree, emit);
    }
}

/// Canonical representatives of every graph of order `n` with maximum degree
/// at most `max_degree`, sorted by key.
pub fn enumerate_graphs(
    n: usize,
    max_degree: Option<usize>,
    jobs: usize,
) -> Result<Vec<(CanonKey, Graph)>> {
    GenSpec {
        n,
        max_degree,
        connected_only: false,
        filter: None,
    }
    .validate()?;
    Ok(run_pool(jobs, || {
        let mut out: Vec<(CanonKey, Graph)> = seeds(n, max_degree)
            .into_par_iter()
            .flat_map_iter(|seed| {
                let mut local = Vec::new();
                grow(seed, n, max_degree, &mut |rows| {
                    let g = Graph::from_rows(rows);
                    local.push((crate::canon::CanonKey::from_rows(g.rows().to_vec()), g));
                });
                local
            })
            .collect();
        out.sort_by(|a, b| a.0.cmp(&b.0));
        assert!(
            out.windows(2).all(|w| w[0].0 != w[1].0),
            "canonical augmentation produced a duplicate"
        );
        out
    }))
}

/// Sequentially expands to an intermediate order whose graphs become the
/// independent work units.
fn seeds(n: usize, max_degree: Option<usize>) -> Vec<Vec<u64>> {
    let split = n.saturating_sub(2).max(1);
    let mut level = vec![vec![0u64]];
    while level[0].len() < split {
        level = level
            .iter()
            .flat_map(|p| extensions(p, max_degree))
            .collect();
        if level.is_empty() {
            break;
        }
    }
    level
}

fn run_pool<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> T {
    let jobs = if jobs == 0 {
        std::thread::available_parallelism().map_or(1, |n| n.get())
    } else {
        jobs
    };
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool")
        .install(f)
}

/// Runs the staged filter on one completed graph, recording survivors.
fn passes(spec: &GenSpec, g: &Graph, funnel: &mut Funnel) -> bool {
    funnel.generated += 1;
    if spec.connected_only && !g.connectivity().connected {
        return false;
    }
    funnel.connected += 1;
    let Some(filter) = spec.filter else {
        funnel.max_degree += 1;
        funnel.chi += 1;
        funnel.vs += 1;
        funnel.ivs += 1;
        return true;
    };
    let delta = g.max_degree();
    if let Filter::Class {
        max_degree: Some(d),
        ..
    } = filter
    {
        if delta != d {
            return false;
        }
    }
    funnel.max_degree += 1;
    let chi = chromatic_number(g);
    let chi_ok = match filter {
        Filter::Class { chi: c, .. } => chi == c,
        Filter::StabilityGap => chi >= 1 && 2 * chi >= delta + 2,
    };
    if !chi_ok {
        return false;
    }
    funnel.chi += 1;
    let vs = vs_chi(g).expect("chi >= 1").value;
    let vs_ok = match filter {
        Filter::Class { vs: v, .. } => vs == v,
        // vs = 1 forces ivs = 1.
        Filter::StabilityGap => vs >= 2,
    };
    if !vs_ok {
        return false;
    }
    funnel.vs += 1;
    let ivs = ivs_chi(g).expect("chi >= 1").value;
    let ivs_ok = match filter {
        Filter::Class { ivs: i, .. } => ivs == i,
        Filter::StabilityGap => ivs > vs,
    };
    if !ivs_ok {
        return false;
    }
    funnel.ivs += 1;
    true
}

/// Exhaustive catalog for `spec` using the default worker count.
pub fn enumerate(spec: GenSpec) -> Result<Catalog> {
    enumerate_with_jobs(spec, 0)
}

/// Exhaustive catalog for `spec` on `jobs` workers (0 = available parallelism).
/// The result does not depend on `jobs`.
pub fn enumerate_with_jobs(spec: GenSpec, jobs: usize) -> Result<Catalog> {
    spec.validate()?;
    let start = Instant::now();
    let (mut entries, funnel) = run_pool(jobs, || {
        seeds(spec.n, spec.max_degree)
            .into_par_iter()
            .map(|seed| {
                let mut funnel = Funnel::default();
                let mut local = Vec::new();
                grow(seed, spec.n, spec.max_degree, &mut |rows| {
                    let g = Graph::from_rows(rows);
                    if passes(&spec, &g, &mut funnel) {
                        let report = analyze(&g).expect("n >= 1");
                        local.push((CanonKey::from_rows(g.rows().to_vec()), report));
                    }
                });
                (local, funnel)
            })
            .reduce(
                || (Vec::new(), Funnel::default()),
                |(mut a, fa), (b, fb)| {
                    a.extend(b);
                    (a, fa.add(fb))
                },
            )
    });
    entries.sort_by(|a, b| a.0.cmp(&b.0));
    assert!(
        entries.windows(2).all(|w| w[0].0 != w[1].0),
        "canonical augmentation produced a duplicate"
    );
    Ok(Catalog {
        spec,
        entries,
        funnel,
        wall_time_ms: start.elapsed().as_millis(),
    })
}

/// Ordered pairs `(A, B)` of catalog members where `B` is `A` plus one edge.
pub fn edge_addition_links(cat: &Catalog) -> Result<Vec<(CanonKey, CanonKey)>> {
    if let Some((first, _)) = cat.entries.first() {
        let n0 = first.graph().order();
        for (k, _) in &cat.entries {
            let n = k.graph().order();
            if n != n0 {
                return Err(Error::MixedOrders(n0, n));
            }
        }
    }
    let mut links = BTreeSet::new();
    for (a, _) in &cat.entries {
        let g = a.graph();
        let n = g.order();
        for u in 0..n {
            for v in u + 1..n {
                if g.has_edge(u, v) {
                    continue;
                }
                let b = canonical_form(&g.add_edges(&[(u, v)])?);
                if cat.contains(&b) {
                    links.insert((a.clone(), b));
                }
            }
        }
    }
    Ok(links.into_iter().collect())
}

pub fn count_planar(cat: &Catalog) -> usize {
    cat.entries.iter().filter(|(_, r)| r.planar).count()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (1..=6)
            .map(|n| enumerate_graphs(n, None, 2).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34, 156]);
    }

    #[test]
    fn four_vertex_catalog() {
        let cat = enumerate_with_jobs(GenSpec::all(4), 1).unwrap();
        assert_eq!(cat.len(), 11);
        assert_eq!(count_planar(&cat), 11);
        assert!(cat.entries.windows(2).all(|w| w[0].0 < w[1].0));
    }

    #[test]
    fn spec_validation() {
        assert!(matches!(
            enumerate(GenSpec::all(11)),
            Err(Error::OrderOutOfRange { .. })
        ));
        assert!(matches!(
            enumerate(GenSpec::all(0)),
            Err(Error::OrderOutOfRange { .. })
        ));
        let bad = GenSpec {
            n: 4,
            max_degree: Some(4),
            connected_only: false,
            filter: None,
        };
        assert_eq!(bad.validate(), Err(Error::DegreeBound { bound: 4, n: 4 }));
    }

    #[test]
    fn connected_and_degree_bounds() {
        let c5 = enumerate(GenSpec {
            n: 5,
            max_degree: None,
            connected_only: true,
            filter: None,
        })
        .unwrap();
        assert_eq!(c5.len(), 21);
        // Δ ≤ 2 graphs are multisets of paths (any order) and cycles (order ≥ 3).
        let kinds = |s: usize| if s >= 3 { 2 } else { 1 };
        let mut count = [0u64; 9];
        count[0] = 1;
        for s in 1..=8 {
            for _ in 0..kinds(s) {
                for t in s..=8 {
                    count[t] += count[t - s];
                }
            }
        }
        for (n, &c) in count.iter().enumerate().skip(3) {
            assert_eq!(
                enumerate_graphs(n, Some(2), 1).unwrap().len() as u64,
                c,
                "n = {n}"
            );
        }
    }

    #[test]
    fn singleton_and_empty_catalogs() {
        let one = enumerate(GenSpec::all(1)).unwrap();
        assert_eq!(one.len(), 1);
        assert!(edge_addition_links(&one).unwrap().is_empty());
        let none = Catalog {
            spec: GenSpec::all(3),
            entries: vec![],
            funnel: Funnel::default(),
            wall_time_ms: 0,
        };
        assert_eq!(count_planar(&none), 0);
    }
}
