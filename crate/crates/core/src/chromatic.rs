//! Exact chromatic number and the two chromatic vertex stability parameters.
//!
//! `vs` is the least number of vertices whose removal lowers the chromatic
//! number by exactly one; `ivs` is the same minimum over independent sets.
//! Both searches are size-ascending and return every minimum witness.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{bits, low_mask, Graph, VertexSet};
use crate::planarity::is_planar;

/// A proper colouring using colours `0..k`, every class nonempty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    pub colors: Vec<usize>,
    pub k: usize,
}

impl Coloring {
    pub fn is_proper(&self, g: &Graph) -> bool {
        self.colors.len() == g.order()
            && self.colors.iter().all(|&c| c < self.k)
            && g.edges()
                .iter()
                .all(|&(u, v)| self.colors[u] != self.colors[v])
            && (0..self.k).all(|c| self.colors.contains(&c))
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.k];
        for &c in &self.colors {
            sizes[c] += 1;
        }
        sizes
    }
}

/// Minimum deletion sets for one stability parameter.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Stability {
    pub value: usize,
    pub witnesses: Vec<VertexSet>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StabilityReport {
    pub n: usize,
    pub m: usize,
    pub max_degree: usize,
    pub chi: usize,
    pub vs: usize,
    pub ivs: usize,
    pub vs_witnesses: Vec<VertexSet>,
    pub ivs_witnesses: Vec<VertexSet>,
    pub c_chi: VertexSet,
    pub planar: bool,
    pub connected: bool,
    pub two_connected: bool,
}

impl StabilityReport {
    /// Membership in S_n: Δ = 4, χ = 3, ivs = 3, vs = 2.
    pub fn in_target_class(&self) -> bool {
        self.max_degree == 4 && self.chi == 3 && self.ivs == 3 && self.vs == 2
    }
}

struct Colorer<'a> {
    rows: &'a [u64],
    order: Vec<usize>,
    k: usize,
    classes: [u64; 64],
    color: [u8; 64],
}

impl Colorer<'_> {
    fn extend(&mut self, depth: usize, used: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        let limit = (used + 1).min(self.k);
        for c in 0..limit {
            if self.rows[v] & self.classes[c] == 0 {
                self.classes[c] |= 1 << v;
                self.color[v] = c as u8;
                if self.extend(depth + 1, used.max(c + 1)) {
                    return true;
                }
                self.classes[c] &= !(1 << v);
            }
        }
        false
    }
}

/// Vertices of `within` by descending degree inside `within`, ties by index.
fn degree_order(rows: &[u64], within: u64) -> Vec<usize> {
    let mut order: Vec<usize> = bits(within).collect();
    order.sort_by_key(|&v| std::cmp::Reverse((rows[v] & within).count_ones()));
    order
}

/// Backtracking k-colouring of the subgraph induced by `within`. The first
/// (maximum-degree) vertex always receives colour 0 and a new colour is only
/// opened as the next unused index, which removes colour permutations.
fn color_within(rows: &[u64], within: u64, k: usize) -> Option<[u8; 64]> {
    if within == 0 {
        return Some([0; 64]);
    }
    if k == 0 {
        return None;
    }
    let mut c = Colorer {
        rows,
        order: degree_order(rows, within),
        k,
        classes: [0; 64],
        color: [0; 64],
    };
    c.extend(0, 0).then_some(c.color)
}

pub(crate) fn colorable_within(g: &Graph, within: u64, k: usize) -> bool {
    match k {
        0 => within == 0,
        1 => bits(within).all(|v| g.rows()[v] & within == 0),
        2 => g.is_bipartite_within(within),
        _ => color_within(g.rows(), within, k).is_some(),
    }
}

pub fn is_k_colorable(g: &Graph, k: usize) -> Option<Coloring> {
    let all = low_mask(g.order());
    let color = color_within(g.rows(), all, k)?;
    let colors: Vec<usize> = (0..g.order()).map(|v| color[v] as usize).collect();
    let used = colors.iter().copied().max().map_or(0, |c| c + 1);
    Some(Coloring { colors, k: used })
}

/// Size of a clique grown greedily from each vertex; a lower bound on χ.
fn greedy_clique_within(rows: &[u64], within: u64) -> usize {
    let mut best = usize::from(within != 0);
    for v in bits(within) {
        let mut cand = rows[v] & within;
        let mut size = 1;
        while cand != 0 {
            let u = bits(cand)
                .max_by_key(|&u| (rows[u] & cand).count_ones())
                .expect("nonempty");
            size += 1;
            cand &= rows[u];
        }
        best = best.max(size);
    }
    best
}

pub(crate) fn chromatic_within(g: &Graph, within: u64) -> usize {
    if within == 0 {
        return 0;
    }
    let rows = g.rows();
    if bits(within).all(|v| rows[v] & within == 0) {
        return 1;
    }
    let mut k = greedy_clique_within(rows, within).max(2);
    while !colorable_within(g, within, k) {
        k += 1;
    }
    k
}

pub fn chromatic_number(g: &Graph) -> usize {
    chromatic_within(g, low_mask(g.order()))
}

/// Calls `f` on every subset of `cand` of size `s` (independent in `g` when
/// `independent` is set), in increasing order of the smallest elements.
fn for_each_subset(
    g: &Graph,
    cand: u64,
    s: usize,
    independent: bool,
    chosen: u64,
    f: &mut impl FnMut(u64),
) {
    if s == 0 {
        f(chosen);
        return;
    }
    if (cand.count_ones() as usize) < s {
        return;
    }
    let mut rest = cand;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let next = if independent {
            rest & !g.rows()[v]
        } else {
            rest
        };
        for_each_subset(g, next, s - 1, independent, chosen | 1 << v, f);
    }
}

fn stability(g: &Graph, independent: bool) -> Result<Stability> {
    let n = g.order();
    let chi = chromatic_number(g);
    if chi == 0 {
        return Err(Error::NullGraph);
    }
    let all = low_mask(n);
    let target = chi - 1;
    for s in 1..=n {
        let mut witnesses = Vec::new();
        for_each_subset(g, all, s, independent, 0, &mut |set| {
            let rest = all & !set;
            if colorable_within(g, rest, target) {
                // A size-minimal set cannot overshoot: dropping one vertex
                // from it would leave chromatic number at least chi.
                debug_assert!(target == 0 || !colorable_within(g, rest, target - 1));
                witnesses.push(VertexSet(set));
            }
        });
        if !witnesses.is_empty() {
            witnesses.sort();
            return Ok(Stability {
                value: s,
                witnesses,
            });
        }
    }
    unreachable!("deleting every vertex always lowers a positive chromatic number")
}

/// Chromatic vertex stability with all minimum witnesses.
pub fn vs_chi(g: &Graph) -> Result<Stability> {
    stability(g, false)
}

/// Independent chromatic vertex stability with all minimum witnesses.
pub fn ivs_chi(g: &Graph) -> Result<Stability> {
    stability(g, true)
}

/// Minimum colour-class size over all proper χ(G)-colourings, enumerated in
/// index order with colours introduced in increasing first-occurrence order.
pub fn ivs_chi_via_colorings(g: &Graph) -> Result<usize> {
    let chi = chromatic_number(g);
    if chi == 0 {
        return Err(Error::NullGraph);
    }
    fn walk(
        rows: &[u64],
        v: usize,
        chi: usize,
        classes: &mut Vec<u64>,
        used: usize,
        best: &mut usize,
    ) {
        if v == rows.len() {
            debug_assert_eq!(used, chi);
            let smallest = classes[..used]
                .iter()
                .map(|c| c.count_ones() as usize)
                .min()
                .unwrap_or(0);
            *best = (*best).min(smallest);
            return;
        }
        let remaining = rows.len() - v;
        // Every colour must appear; unopened colours need vertices left.
        for c in 0..(used + 1).min(chi) {
            let opens = c == used;
            if chi - used - usize::from(opens) > remaining - 1 {
                continue;
            }
            if rows[v] & classes[c] == 0 {
                classes[c] |= 1 << v;
                walk(rows, v + 1, chi, classes, used.max(c + 1), best);
                classes[c] &= !(1 << v);
            }
        }
    }
    let mut classes = vec![0u64; chi];
    let mut best = usize::MAX;
    walk(g.rows(), 0, chi, &mut classes, 0, &mut best);
    Ok(best)
}

/// Vertices `x` with some `y != x` such that G − {x, y} has chromatic number 2.
pub fn c_chi(g: &Graph) -> VertexSet {
    let all = low_mask(g.order());
    let mut out = 0u64;
    for x in 0..g.order() {
        for y in x + 1..g.order() {
            if chromatic_within(g, all & !(1 << x | 1 << y)) == 2 {
                out |= 1 << x | 1 << y;
            }
        }
    }
    VertexSet(out)
}

/// Partners `y` of `x` with χ(G − {x, y}) = 2.
pub fn c_chi_partners(g: &Graph, x: usize) -> VertexSet {
    let all = low_mask(g.order());
    (0..g.order())
        .filter(|&y| y != x && chromatic_within(g, all & !(1 << x | 1 << y)) == 2)
        .collect()
}

pub fn analyze(g: &Graph) -> Result<StabilityReport> {
    let vs = vs_chi(g)?;
    let ivs = ivs_chi(g)?;
    let conn = g.connectivity();
    Ok(StabilityReport {
        n: g.order(),
        m: g.size(),
        max_degree: g.max_degree(),
        chi: chromatic_number(g),
        vs: vs.value,
        ivs: ivs.value,
        vs_witnesses: vs.witnesses,
        ivs_witnesses: ivs.witnesses,
        c_chi: c_chi(g),
        planar: is_planar(g),
        connected: conn.connected,
        two_connected: conn.two_connected,
    })
}
