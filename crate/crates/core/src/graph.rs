//! Immutable simple graphs on at most 64 vertices.
//!
//! Each vertex owns one `u64` neighbour row, so set operations on
//! neighbourhoods are single machine instructions. All surgery operations
//! return a new graph; nothing mutates a `Graph` after construction.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Hard vertex capacity of [`Graph`].
pub const MAX_ORDER: usize = 64;

/// Iterator over the set bits of a word, lowest first.
#[derive(Clone, Copy, Debug)]
pub struct Bits(u64);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Bits {}

#[inline]
pub fn bits(word: u64) -> Bits {
    Bits(word)
}

/// Mask with the low `n` bits set.
#[inline]
pub const fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A set of vertex indices of some graph, stored as a bitmask.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        VertexSet(it.into_iter().fold(0u64, |acc, v| acc | (1u64 << v)))
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1 << v)
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> Bits {
        bits(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(it: I) -> Self {
        VertexSet::from_indices(it)
    }
}

/// A two-colouring witness: no edge lies inside either side.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bipartition {
    pub left: VertexSet,
    pub right: VertexSet,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeProfile {
    pub max_degree: usize,
    pub degrees: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Connectivity {
    pub connected: bool,
    pub two_connected: bool,
}

/// Simple undirected graph with optional per-vertex role labels.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    labels: Option<Vec<String>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

fn check_vertex(v: usize, n: usize) -> Result<()> {
    if v >= n {
        Err(Error::VertexOutOfRange { vertex: v, n })
    } else {
        Ok(())
    }
}

impl Graph {
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_ORDER {
            return Err(Error::TooManyVertices(n));
        }
        Ok(Graph {
            n,
            adj: vec![0; n],
            labels: None,
        })
    }

    /// Builds the simple graph on `n` vertices with the given edges.
    /// Duplicate pairs collapse; pair orientation is irrelevant.
    pub fn build(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Graph::empty(n)?.add_edges(edges)
    }

    /// Wraps raw neighbour rows. Rows must already be symmetric and loop-free.
    pub(crate) fn from_rows(adj: Vec<u64>) -> Self {
        let g = Graph {
            n: adj.len(),
            adj,
            labels: None,
        };
        debug_assert!(g.is_well_formed());
        g
    }

    /// Checks symmetry, loop-freeness and range of every row.
    pub fn is_well_formed(&self) -> bool {
        let mask = low_mask(self.n);
        self.n <= MAX_ORDER
            && self.adj.len() == self.n
            && (0..self.n).all(|u| {
                let row = self.adj[u];
                row & !mask == 0
                    && row >> u & 1 == 0
                    && bits(row).all(|v| self.adj[v] >> u & 1 == 1)
            })
            && self.labels.as_ref().is_none_or(|l| l.len() == self.n)
    }

    pub fn with_labels<S: Into<String>>(mut self, labels: Vec<S>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() != self.n {
            return Err(Error::LabelCount {
                labels: labels.len(),
                n: self.n,
            });
        }
        let mut seen = std::collections::HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn without_labels(mut self) -> Self {
        self.labels = None;
        self
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    pub fn all_vertices(&self) -> VertexSet {
        VertexSet(low_mask(self.n))
    }

    /// Edges as `(min, max)` pairs in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| bits(self.adj[u] & !low_mask(u + 1)).map(move |v| (u, v)))
            .collect()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    pub fn vertex(&self, label: &str) -> Result<usize> {
        self.labels
            .as_ref()
            .and_then(|l| l.iter().position(|x| x == label))
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn vertex_set(&self, labels: &[&str]) -> Result<VertexSet> {
        labels.iter().map(|l| self.vertex(l)).collect()
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.adj[v] & s.0 == 0)
    }

    /// G − S. Surviving vertices keep their relative order and labels.
    pub fn delete_vertices(&self, s: VertexSet) -> Result<Graph> {
        if let Some(v) = s.iter().find(|&v| v >= self.n) {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            });
        }
        Ok(self.delete_unchecked(s))
    }

    pub(crate) fn delete_unchecked(&self, s: VertexSet) -> Graph {
        let keep: Vec<usize> = (0..self.n).filter(|&v| !s.contains(v)).collect();
        let kept = low_mask(self.n) & !s.0;
        let adj = keep.iter().map(|&v| compress(self.adj[v], kept)).collect();
        let labels = self
            .labels
            .as_ref()
            .map(|l| keep.iter().map(|&v| l[v].clone()).collect());
        Graph {
            n: keep.len(),
            adj,
            labels,
        }
    }

    /// Replaces edge `u`-`v` by a path `u, n, n+1, .., n+k-1, v`.
    pub fn subdivide_edge(&self, u: usize, v: usize, k: usize) -> Result<Graph> {
        check_vertex(u, self.n)?;
        check_vertex(v, self.n)?;
        if !self.has_edge(u, v) {
            return Err(Error::NotAnEdge(u, v));
        }
        if k == 0 {
            return Ok(self.clone());
        }
        let n2 = self.n + k;
        if n2 > MAX_ORDER {
            return Err(Error::TooManyVertices(n2));
        }
        let mut adj = self.adj.clone();
        adj.resize(n2, 0);
        adj[u] &= !(1 << v);
        adj[v] &= !(1 << u);
        let mut prev = u;
        for x in self.n..n2 {
            adj[prev] |= 1 << x;
            adj[x] |= 1 << prev;
            prev = x;
        }
        adj[prev] |= 1 << v;
        adj[v] |= 1 << prev;
        let labels = self.labels.as_ref().map(|l| {
            let mut l = l.clone();
            for x in self.n..n2 {
                l.push(fresh_label(&l, x));
            }
            l
        });
        let g = Graph { n: n2, adj, labels };
        debug_assert!(g.is_well_formed());
        Ok(g)
    }

    pub fn add_edges(&self, es: &[(usize, usize)]) -> Result<Graph> {
        let mut adj = self.adj.clone();
        for &(u, v) in es {
            check_vertex(u, self.n)?;
            check_vertex(v, self.n)?;
            if u == v {
                return Err(Error::Loop(u));
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(Graph {
            n: self.n,
            adj,
            labels: self.labels.clone(),
        })
    }

    /// Disjoint union; vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n2 = self.n + other.n;
        if n2 > MAX_ORDER {
            return Err(Error::TooManyVertices(n2));
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|r| r << self.n));
        let labels = match (&self.labels, &other.labels) {
            (None, None) => None,
            (a, b) => {
                let mut l: Vec<String> = match a {
                    Some(a) => a.clone(),
                    None => (0..self.n).map(|i| format!("x{i}")).collect(),
                };
                for i in 0..other.n {
                    let cand = b
                        .as_ref()
                        .map(|b| b[i].clone())
                        .unwrap_or_else(|| format!("y{i}"));
                    let cand = if l.contains(&cand) {
                        fresh_label(&l, self.n + i)
                    } else {
                        cand
                    };
                    l.push(cand);
                }
                Some(l)
            }
        };
        Ok(Graph { n: n2, adj, labels })
    }

    /// Relabels vertex `v` as `perm[v]`. Labels follow their vertices.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut adj = vec![0u64; self.n];
        for u in 0..self.n {
            adj[perm[u]] = bits(self.adj[u]).fold(0, |acc, v| acc | 1 << perm[v]);
        }
        let labels = self.labels.as_ref().map(|l| {
            let mut out = vec![String::new(); self.n];
            for (v, lab) in l.iter().enumerate() {
                out[perm[v]] = lab.clone();
            }
            out
        });
        Graph {
            n: self.n,
            adj,
            labels,
        }
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let degrees: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        DegreeProfile {
            max_degree: degrees.iter().copied().max().unwrap_or(0),
            degrees,
        }
    }

    pub fn max_degree(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    /// Vertices reachable from `start` inside `within`.
    pub(crate) fn reach(&self, start: usize, within: u64) -> u64 {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            next &= within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    fn is_connected_within(&self, within: u64) -> bool {
        if within == 0 {
            return true;
        }
        self.reach(within.trailing_zeros() as usize, within) == within
    }

    pub fn components(&self) -> Vec<VertexSet> {
        let mut left = low_mask(self.n);
        let mut out = Vec::new();
        while left != 0 {
            let c = self.reach(left.trailing_zeros() as usize, left);
            out.push(VertexSet(c));
            left &= !c;
        }
        out
    }

    pub fn connectivity(&self) -> Connectivity {
        let all = low_mask(self.n);
        let connected = self.is_connected_within(all);
        let two_connected = connected
            && self.n >= 3
            && (0..self.n).all(|v| self.is_connected_within(all & !(1 << v)));
        Connectivity {
            connected,
            two_connected,
        }
    }

    /// BFS distance, `None` when `b` is unreachable from `a`.
    pub fn distance(&self, a: usize, b: usize) -> Option<usize> {
        let mut seen = 1u64 << a;
        let mut frontier = seen;
        let mut d = 0;
        while frontier != 0 {
            if frontier >> b & 1 == 1 {
                return Some(d);
            }
            let mut next = 0;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            next &= !seen;
            seen |= next;
            frontier = next;
            d += 1;
        }
        None
    }

    /// Two-colours every component by BFS; `None` if an odd cycle exists.
    pub fn is_bipartite(&self) -> Option<Bipartition> {
        self.bipartition_within(low_mask(self.n))
            .map(|(l, r)| Bipartition {
                left: VertexSet(l),
                right: VertexSet(r),
            })
    }

    #[inline]
    pub(crate) fn is_bipartite_within(&self, within: u64) -> bool {
        self.bipartition_within(within).is_some()
    }

    fn bipartition_within(&self, within: u64) -> Option<(u64, u64)> {
        let mut left = 0u64;
        let mut right = 0u64;
        let mut todo = within;
        while todo != 0 {
            let s = todo.trailing_zeros() as usize;
            let mut side_a = 1u64 << s;
            let mut side_b = 0u64;
            let mut frontier = side_a;
            let mut frontier_is_a = true;
            while frontier != 0 {
                let mut next = 0;
                for v in bits(frontier) {
                    next |= self.adj[v];
                }
                next &= within;
                if frontier_is_a {
                    if next & side_a != 0 {
                        return None;
                    }
                    next &= !side_b;
                    side_b |= next;
                } else {
                    if next & side_b != 0 {
                        return None;
                    }
                    next &= !side_a;
                    side_a |= next;
                }
                frontier = next;
                frontier_is_a = !frontier_is_a;
            }
            left |= side_a;
            right |= side_b;
            todo &= !(side_a | side_b);
        }
        Some((left, right))
    }

    pub fn complete(n: usize) -> Result<Graph> {
        Graph::empty(n)?;
        let all = low_mask(n);
        Ok(Graph::from_rows((0..n).map(|v| all & !(1 << v)).collect()))
    }

    pub fn path(n: usize) -> Result<Graph> {
        let es: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::build(n, &es)
    }

    /// The cycle `0-1-..-(n-1)-0`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::OrderOutOfRange {
                n,
                min: 3,
                max: MAX_ORDER,
            });
        }
        let mut es: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        es.push((n - 1, 0));
        Graph::build(n, &es)
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
        let es: Vec<_> = (0..a)
            .flat_map(|i| (a..a + b).map(move |j| (i, j)))
            .collect();
        Graph::build(a + b, &es)
    }

    pub fn hypercube(d: usize) -> Result<Graph> {
        let n = 1usize << d;
        let es: Vec<_> = (0..n)
            .flat_map(|v| (0..d).map(move |i| (v, v ^ (1 << i))))
            .filter(|&(u, v)| u < v)
            .collect();
        Graph::build(n, &es)
    }
}

/// Packs the bits of `row` selected by `keep` into the low end.
#[inline]
fn compress(row: u64, keep: u64) -> u64 {
    let mut out = 0u64;
    for (j, i) in bits(keep).enumerate() {
        out |= (row >> i & 1) << j;
    }
    out
}

fn fresh_label(existing: &[String], index: usize) -> String {
    let mut cand = format!("s{index}");
    while existing.contains(&cand) {
        cand.push('\'');
    }
    cand
}

#[cfg(test)]
mod tests {
    use super::*;

    // Enumerates simple cycles whose least vertex is `s`, looking for an odd one.
    fn odd_cycle_exists(g: &Graph) -> bool {
        fn extend(g: &Graph, s: usize, v: usize, len: usize, used: u64) -> bool {
            for w in bits(g.rows()[v]) {
                if w == s && len >= 3 && len % 2 == 1 {
                    return true;
                }
                if w > s && used >> w & 1 == 0 && extend(g, s, w, len + 1, used | 1 << w) {
                    return true;
                }
            }
            false
        }
        (0..g.order()).any(|s| extend(g, s, s, 1, 1 << s))
    }

    #[test]
    fn build_basics() {
        let k3 = Graph::build(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(k3.size(), 3);
        let k1 = Graph::build(1, &[]).unwrap();
        assert_eq!(k1.size(), 0);
        let dup = Graph::build(3, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(dup.size(), 1);
    }

    #[test]
    fn build_errors() {
        assert_eq!(Graph::build(65, &[]), Err(Error::TooManyVertices(65)));
        assert_eq!(
            Graph::build(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(Graph::build(3, &[(1, 1)]), Err(Error::Loop(1)));
        assert!(Graph::build(64, &[(0, 63)]).is_ok());
    }

    #[test]
    fn delete_vertices_reindexes() {
        let k3 = Graph::complete(3).unwrap();
        let k2 = k3.delete_vertices(VertexSet::from_indices([0])).unwrap();
        assert_eq!(k2, Graph::complete(2).unwrap());
        let c5 = Graph::cycle(5).unwrap();
        let p4 = c5.delete_vertices(VertexSet::from_indices([0])).unwrap();
        assert_eq!(p4, Graph::path(4).unwrap());
        assert!(k3.delete_vertices(VertexSet::from_indices([5])).is_err());
        assert_eq!(k3.delete_vertices(VertexSet::EMPTY).unwrap(), k3);
    }

    #[test]
    fn delete_keeps_labels() {
        let g = Graph::path(3)
            .unwrap()
            .with_labels(vec!["a", "b", "c"])
            .unwrap();
        let h = g.delete_vertices(VertexSet::from_indices([1])).unwrap();
        assert_eq!(h.labels().unwrap(), &["a".to_string(), "c".to_string()]);
        assert_eq!(h.size(), 0);
    }

    #[test]
    fn subdivide_triangle_gives_c5() {
        let k3 = Graph::complete(3).unwrap();
        let c5 = k3.subdivide_edge(0, 1, 2).unwrap();
        assert_eq!(c5.order(), 5);
        assert_eq!(c5.size(), 5);
        assert!(c5.degree_profile().degrees.iter().all(|&d| d == 2));
        assert!(c5.connectivity().two_connected);
        assert_eq!(k3.subdivide_edge(0, 1, 0).unwrap(), k3);
        assert_eq!(
            Graph::path(3).unwrap().subdivide_edge(0, 2, 1),
            Err(Error::NotAnEdge(0, 2))
        );
    }

    #[test]
    fn add_edges_closes_triangle() {
        let p3 = Graph::path(3).unwrap();
        assert_eq!(
            p3.add_edges(&[(0, 2)]).unwrap(),
            Graph::complete(3).unwrap()
        );
        assert_eq!(p3.add_edges(&[]).unwrap(), p3);
        assert_eq!(p3.add_edges(&[(2, 2)]), Err(Error::Loop(2)));
    }

    #[test]
    fn bipartite_cycles() {
        assert!(Graph::cycle(6).unwrap().is_bipartite().is_some());
        assert!(Graph::cycle(5).unwrap().is_bipartite().is_none());
        assert!(Graph::empty(0).unwrap().is_bipartite().is_some());
        let b = Graph::hypercube(3).unwrap().is_bipartite().unwrap();
        assert_eq!(b.left.len(), 4);
    }

    #[test]
    fn degree_and_connectivity() {
        assert_eq!(Graph::complete(4).unwrap().degree_profile().max_degree, 3);
        assert_eq!(Graph::empty(1).unwrap().degree_profile().max_degree, 0);
        assert_eq!(Graph::empty(0).unwrap().degree_profile().max_degree, 0);
        let c4 = Graph::cycle(4).unwrap().connectivity();
        assert_eq!(
            c4,
            Connectivity {
                connected: true,
                two_connected: true
            }
        );
        let p3 = Graph::path(3).unwrap().connectivity();
        assert_eq!(
            p3,
            Connectivity {
                connected: true,
                two_connected: false
            }
        );
        assert!(Graph::empty(1).unwrap().connectivity().connected);
        assert!(!Graph::empty(2).unwrap().connectivity().connected);
    }

    #[test]
    fn bipartite_matches_odd_cycle_search_small() {
        for n in 0..=6usize {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect();
            for mask in 0u64..1 << pairs.len() {
                let es: Vec<_> = bits(mask).map(|i| pairs[i]).collect();
                let g = Graph::build(n, &es).unwrap();
                assert_eq!(g.is_bipartite().is_some(), !odd_cycle_exists(&g), "{g:?}");
                if let Some(b) = g.is_bipartite() {
                    assert!(g.is_independent(b.left) && g.is_independent(b.right));
                    assert_eq!(b.left.0 | b.right.0, low_mask(n));
                }
            }
        }
    }

    #[test]
    fn distance_bfs() {
        let c6 = Graph::cycle(6).unwrap();
        assert_eq!(c6.distance(0, 3), Some(3));
        assert_eq!(c6.distance(0, 0), Some(0));
        assert_eq!(Graph::empty(2).unwrap().distance(0, 1), None);
    }
}
