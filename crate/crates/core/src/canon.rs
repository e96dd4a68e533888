//! Canonical labeling, isomorphism and automorphism groups.
//!
//! The search tree is the usual individualization/refinement tree: every node
//! is an ordered equitable partition, children individualize one vertex of the
//! first largest non-singleton cell, leaves are discrete partitions read as
//! vertex orderings. The canonical leaf is the one whose relabeled adjacency
//! rows are lexicographically least. Automorphisms found at leaves prune
//! sibling subtrees, and the group order is the product of the orbit lengths
//! along the first path.

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::graph::{bits, Graph};
use crate::io::to_graph6;

/// Isomorphism-class identifier: the graph6 string of the canonical relabeling.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonKey(String);

impl CanonKey {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn as_bytes(&self) -> &[u8] {
        self.0.as_bytes()
    }

    /// Decodes the canonical representative.
    pub fn graph(&self) -> Graph {
        crate::io::parse_graph6(&self.0).expect("canonical keys are valid graph6")
    }

    pub(crate) fn from_rows(rows: Vec<u64>) -> Self {
        CanonKey(to_graph6(&Graph::from_rows(rows)))
    }
}

impl fmt::Display for CanonKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for CanonKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonKey({})", self.0)
    }
}

impl Serialize for CanonKey {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AutInfo {
    /// Exact group order; saturates at `u128::MAX` (only reachable for n > 34).
    pub order: u128,
    /// Each generator maps vertex `v` to `generators[i][v]`.
    pub generators: Vec<Vec<usize>>,
}

/// Full result of one canonical search.
#[derive(Clone, Debug)]
pub struct Canonical {
    /// `labeling[i]` is the vertex placed at canonical position `i`.
    pub labeling: Vec<usize>,
    /// Adjacency rows of the canonically relabeled graph.
    pub rows: Vec<u64>,
    pub aut: AutInfo,
    orbit_root: Vec<usize>,
}

impl Canonical {
    pub fn key(&self) -> CanonKey {
        CanonKey::from_rows(self.rows.clone())
    }

    /// Orbit representative (least vertex) of `v` under the automorphism group.
    pub fn orbit_of(&self, v: usize) -> usize {
        self.orbit_root[v]
    }

    pub fn orbits(&self) -> &[usize] {
        &self.orbit_root
    }

    /// Canonical position of vertex `v`.
    pub fn position(&self, v: usize) -> usize {
        self.labeling
            .iter()
            .position(|&x| x == v)
            .expect("labeling is a permutation")
    }
}

/// Splits every cell by neighbour counts into each splitter until stable.
/// Sub-cells are ordered by increasing count, so the result depends only on
/// the graph and the incoming ordered partition.
fn refine(rows: &[u64], cells: &mut Vec<u64>, queue: &mut Vec<u64>) {
    let mut buckets = [0u64; 65];
    let mut head = 0;
    while head < queue.len() {
        let w = queue[head];
        head += 1;
        let mut i = 0;
        while i < cells.len() {
            let x = cells[i];
            if x & (x - 1) == 0 {
                i += 1;
                continue;
            }
            let mut present = 0u128;
            for v in bits(x) {
                let c = (rows[v] & w).count_ones() as usize;
                buckets[c] |= 1 << v;
                present |= 1 << c;
            }
            if present & (present - 1) == 0 {
                buckets[present.trailing_zeros() as usize] = 0;
                i += 1;
                continue;
            }
            let mut pieces = Vec::with_capacity(present.count_ones() as usize);
            let mut p = present;
            while p != 0 {
                let c = p.trailing_zeros() as usize;
                p &= p - 1;
                pieces.push(buckets[c]);
                buckets[c] = 0;
            }
            let k = pieces.len();
            queue.extend_from_slice(&pieces);
            cells.splice(i..=i, pieces);
            i += k;
        }
    }
}

fn relabel(rows: &[u64], lab: &[usize], pos: &mut [usize]) -> Vec<u64> {
    for (i, &v) in lab.iter().enumerate() {
        pos[v] = i;
    }
    lab.iter()
        .map(|&v| bits(rows[v]).fold(0u64, |acc, u| acc | 1 << pos[u]))
        .collect()
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

fn union(parent: &mut [usize], a: usize, b: usize) {
    let (ra, rb) = (find(parent, a), find(parent, b));
    if ra != rb {
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        parent[hi] = lo;
    }
}

/// Orbit partition (union-find parents) of the group generated by `gens`.
fn orbit_parents<'a>(n: usize, gens: impl Iterator<Item = &'a Vec<usize>>) -> Vec<usize> {
    let mut parent: Vec<usize> = (0..n).collect();
    for g in gens {
        for (v, &w) in g.iter().enumerate() {
            union(&mut parent, v, w);
        }
    }
    parent
}

struct Search<'a> {
    rows: &'a [u64],
    n: usize,
    first_lab: Vec<usize>,
    first_cert: Vec<u64>,
    best_lab: Vec<usize>,
    best_cert: Vec<u64>,
    first_path: Vec<usize>,
    generators: Vec<Vec<usize>>,
    pos: Vec<usize>,
}

impl Search<'_> {
    fn record(&mut self, from: &[usize], to: &[usize]) {
        let mut gamma = vec![0; self.n];
        for (&a, &b) in from.iter().zip(to) {
            gamma[a] = b;
        }
        debug_assert!((0..self.n).all(|v| {
            bits(self.rows[v]).fold(0u64, |acc, u| acc | 1 << gamma[u]) == self.rows[gamma[v]]
        }));
        if gamma.iter().enumerate().any(|(v, &w)| v != w) && !self.generators.contains(&gamma) {
            self.generators.push(gamma);
        }
    }

    /// Returns `Some(k)` to abandon everything below the first-path node at depth `k`.
    fn visit(&mut self, cells: Vec<u64>, prefix: &mut Vec<usize>, on_first: bool) -> Option<usize> {
        let target = {
            let mut best: Option<(usize, u32)> = None;
            for (i, &c) in cells.iter().enumerate() {
                let sz = c.count_ones();
                if sz > 1 && best.is_none_or(|(_, s)| sz > s) {
                    best = Some((i, sz));
                }
            }
            best.map(|(i, _)| i)
        };
        let Some(t) = target else {
            return self.leaf(&cells, prefix);
        };
        let cell = cells[t];
        let depth = prefix.len();
        let mut explored = 0u64;
        let mut first_child = true;
        for w in bits(cell) {
            if explored != 0 {
                let fixing = self
                    .generators
                    .iter()
                    .filter(|g| prefix.iter().all(|&v| g[v] == v))
                    .collect::<Vec<_>>();
                if !fixing.is_empty() {
                    let mut parent = orbit_parents(self.n, fixing.into_iter());
                    let rw = find(&mut parent, w);
                    if bits(explored).any(|x| find(&mut parent, x) == rw) {
                        continue;
                    }
                }
            }
            explored |= 1 << w;
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..t]);
            child.push(1 << w);
            child.push(cell & !(1 << w));
            child.extend_from_slice(&cells[t + 1..]);
            let mut queue = vec![1u64 << w];
            refine(self.rows, &mut child, &mut queue);
            let child_first = on_first && first_child;
            if child_first {
                self.first_path.push(w);
            }
            first_child = false;
            prefix.push(w);
            let r = self.visit(child, prefix, child_first);
            prefix.pop();
            match r {
                Some(k) if k == depth && on_first => continue,
                Some(k) => return Some(k),
                None => {}
            }
        }
        None
    }

    fn leaf(&mut self, cells: &[u64], prefix: &[usize]) -> Option<usize> {
        let lab: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        let cert = relabel(self.rows, &lab, &mut self.pos);
        if self.first_lab.is_empty() {
            self.first_lab = lab.clone();
            self.first_cert = cert.clone();
            self.best_lab = lab;
            self.best_cert = cert;
            return None;
        }
        if cert == self.first_cert {
            let first = std::mem::take(&mut self.first_lab);
            self.record(&first, &lab);
            self.first_lab = first;
            let common = prefix
                .iter()
                .zip(&self.first_path)
                .take_while(|(a, b)| a == b)
                .count();
            return Some(common);
        }
        match cert.cmp(&self.best_cert) {
            Ordering::Less => {
                self.best_lab = lab;
                self.best_cert = cert;
            }
            Ordering::Equal => {
                let best = std::mem::take(&mut self.best_lab);
                self.record(&best, &lab);
                self.best_lab = best;
            }
            Ordering::Greater => {}
        }
        None
    }
}

/// Canonical labeling of the graph given by raw rows.
pub(crate) fn canonize_rows(rows: &[u64]) -> Canonical {
    let n = rows.len();
    let mut search = Search {
        rows,
        n,
        first_lab: Vec::new(),
        first_cert: Vec::new(),
        best_lab: Vec::new(),
        best_cert: Vec::new(),
        first_path: Vec::new(),
        generators: Vec::new(),
        pos: vec![0; n],
    };
    if n > 0 {
        let mut cells = vec![crate::graph::low_mask(n)];
        let mut queue = cells.clone();
        refine(rows, &mut cells, &mut queue);
        search.visit(cells, &mut Vec::new(), true);
    }

    let mut order: u128 = 1;
    for k in 0..search.first_path.len() {
        let prefix = &search.first_path[..k];
        let mut parent = orbit_parents(
            n,
            search
                .generators
                .iter()
                .filter(|g| prefix.iter().all(|&v| g[v] == v)),
        );
        let v = search.first_path[k];
        let rv = find(&mut parent, v);
        let len = (0..n).filter(|&x| find(&mut parent, x) == rv).count() as u128;
        order = order.saturating_mul(len);
    }
    let mut parent = orbit_parents(n, search.generators.iter());
    let orbit_root: Vec<usize> = (0..n).map(|v| find(&mut parent, v)).collect();
    Canonical {
        labeling: search.best_lab,
        rows: search.best_cert,
        aut: AutInfo {
            order,
            generators: search.generators,
        },
        orbit_root,
    }
}

pub fn canonical_labeling(g: &Graph) -> Canonical {
    canonize_rows(g.rows())
}

pub fn canonical_form(g: &Graph) -> CanonKey {
    canonical_labeling(g).key()
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.order() == h.order()
        && g.size() == h.size()
        && canonical_labeling(g).rows == canonical_labeling(h).rows
}

pub fn automorphisms(g: &Graph) -> AutInfo {
    canonical_labeling(g).aut
}
