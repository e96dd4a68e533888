//! Named graphs and graph families with `Δ = 4`, `χ = 3`, `ivs_χ = 3`, `vs_χ = 2`.
//!
//! * [`g9`]: the octahedron `K_{2,2,2}` with the three edges of one face
//!   subdivided once. Vertices `u1 u2 u3` span the subdivided face, `w_i`
//!   subdivides the face edge opposite `u_i`, and `v1 v2 v3` form the
//!   opposite face with `v_i` adjacent to every `u_j`, `j != i`.
//! * [`g10`]: `g9` plus a vertex `q` adjacent to `w2` and `w3`.
//! * [`g_n`]: `g9` (odd `n`) or `g10` (even `n`) with `u2 w1` subdivided.
//! * [`h_n_e`]: `g_n` plus a subset of the chords `a_i a_{l-1-i}` across
//!   the `u2 .. w1 u3` path.
//! * [`subdivide_family`] and [`bipartite_construction`]: the two general
//!   constructions.

use serde::Serialize;

use crate::chromatic::c_chi;
use crate::error::{Error, Result};
use crate::graph::{low_mask, Graph, MAX_ORDER};

/// Parameters selecting one construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyParams {
    G9,
    G10,
    GN {
        n: usize,
    },
    /// Bit `i - 1` of `chords` selects chord `a_i a_{l-1-i}`.
    HNE {
        n: usize,
        chords: u64,
    },
    Bip {
        host: Graph,
        a: usize,
        b: usize,
    },
    Subdiv {
        base: Graph,
        plan: Vec<((usize, usize), usize)>,
    },
}

impl FamilyParams {
    pub fn build(&self) -> Result<Graph> {
        match self {
            FamilyParams::G9 => Ok(g9()),
            FamilyParams::G10 => Ok(g10()),
            FamilyParams::GN { n } => g_n(*n),
            FamilyParams::HNE { n, chords } => h_n_e(*n, *chords),
            FamilyParams::Bip { host, a, b } => bipartite_construction(host, *a, *b),
            FamilyParams::Subdiv { base, plan } => subdivide_family(base, plan),
        }
    }
}

const G9_LABELS: [&str; 9] = ["u1", "u2", "u3", "v1", "v2", "v3", "w1", "w2", "w3"];

pub fn g9() -> Graph {
    let (u, v, w) = (|i: usize| i - 1, |i: usize| i + 2, |i: usize| i + 5);
    let mut es = vec![(v(1), v(2)), (v(2), v(3)), (v(1), v(3))];
    for i in 1..=3 {
        for j in 1..=3 {
            if i != j {
                es.push((u(i), v(j)));
                es.push((w(i), u(j)));
            }
        }
    }
    Graph::build(9, &es)
        .and_then(|g| g.with_labels(G9_LABELS.to_vec()))
        .expect("fixed edge list")
}

pub fn g10() -> Graph {
    let g = g9();
    let mut labels: Vec<String> = g.labels().expect("labelled").to_vec();
    labels.push("q".into());
    let mut es = g.edges();
    es.extend([(9, 7), (9, 8)]);
    Graph::build(10, &es)
        .and_then(|g| g.with_labels(labels))
        .expect("fixed edge list")
}

/// Length `l` of the relabeled `u2 = a_0, .., a_{l-1} = w1, a_l = u3` path.
pub fn path_length(n: usize) -> usize {
    if n % 2 == 1 {
        n - 7
    } else {
        n - 8
    }
}

/// Number of available chords `a_i a_{l-1-i}`, i.e. `l/2 - 2`.
pub fn chord_count(n: usize) -> usize {
    (path_length(n) / 2).saturating_sub(2)
}

pub fn g_n(n: usize) -> Result<Graph> {
    if !(9..=MAX_ORDER).contains(&n) {
        return Err(Error::OrderOutOfRange {
            n,
            min: 9,
            max: MAX_ORDER,
        });
    }
    let (base, k) = if n % 2 == 1 {
        (g9(), n - 9)
    } else {
        (g10(), n - 10)
    };
    let u2 = base.vertex("u2")?;
    let w1 = base.vertex("w1")?;
    let g = base.subdivide_edge(u2, w1, k)?;
    let mut labels: Vec<String> = g.labels().expect("labelled").to_vec();
    for (i, x) in (base.order()..n).enumerate() {
        labels[x] = format!("a{}", i + 1);
    }
    g.without_labels().with_labels(labels)
}

/// Vertex index of `a_i` in `g_n(n)`.
fn path_vertex(g: &Graph, n: usize, i: usize) -> Result<usize> {
    let l = path_length(n);
    match i {
        0 => g.vertex("u2"),
        _ if i == l - 1 => g.vertex("w1"),
        _ if i == l => g.vertex("u3"),
        _ => g.vertex(&format!("a{i}")),
    }
}

/// The chords `a_i a_{l-1-i}` for `i = 1 ..= l/2 - 2`, as vertex pairs of `g_n(n)`.
pub fn chords(n: usize) -> Result<Vec<(usize, usize)>> {
    let g = g_n(n)?;
    let l = path_length(n);
    (1..=chord_count(n))
        .map(|i| Ok((path_vertex(&g, n, i)?, path_vertex(&g, n, l - 1 - i)?)))
        .collect()
}

pub fn h_n_e(n: usize, chord_mask: u64) -> Result<Graph> {
    if !(13..=MAX_ORDER).contains(&n) {
        return Err(Error::OrderOutOfRange {
            n,
            min: 13,
            max: MAX_ORDER,
        });
    }
    let max = chord_count(n);
    if chord_mask & !low_mask(max) != 0 {
        let index = 64 - chord_mask.leading_zeros() as usize;
        return Err(Error::ChordOutOfRange { index, max });
    }
    let g = g_n(n)?;
    let all = chords(n)?;
    let chosen: Vec<_> = (0..max)
        .filter(|i| chord_mask >> i & 1 == 1)
        .map(|i| all[i])
        .collect();
    g.add_edges(&chosen)
}

/// Subdivides each planned edge with a positive even number of new vertices.
/// Edges with both ends in `C_χ(G)` are refused.
pub fn subdivide_family(g: &Graph, plan: &[((usize, usize), usize)]) -> Result<Graph> {
    let core = c_chi(g);
    for &((u, v), k) in plan {
        if !g.has_edge(u, v) {
            return Err(Error::NotAnEdge(u, v));
        }
        if k == 0 || k % 2 == 1 {
            return Err(Error::OddSubdivision { u, v, count: k });
        }
        if core.contains(u) && core.contains(v) {
            return Err(Error::ForbiddenEdge(u, v));
        }
    }
    plan.iter()
        .try_fold(g.clone(), |h, &((u, v), k)| h.subdivide_edge(u, v, k))
}

/// Why a host/attachment choice is unusable, if it is.
pub fn check_bipartite_host(h: &Graph, a: usize, b: usize) -> Result<()> {
    let n = h.order();
    for x in [a, b] {
        if x >= n {
            return Err(Error::VertexOutOfRange { vertex: x, n });
        }
    }
    if a == b {
        return Err(Error::SameAttachment);
    }
    if h.is_bipartite().is_none() {
        return Err(Error::HostNotBipartite);
    }
    let delta = h.max_degree();
    if delta > 4 {
        return Err(Error::HostDegreeTooLarge(delta));
    }
    for x in [a, b] {
        if h.degree(x) != 2 {
            return Err(Error::AttachmentDegree {
                vertex: x,
                degree: h.degree(x),
            });
        }
    }
    if h.has_edge(a, b) {
        return Err(Error::AttachmentsAdjacent(a, b));
    }
    match h.distance(a, b) {
        None => return Err(Error::AttachmentsDisconnected(a, b)),
        Some(d) if d % 2 == 0 => return Err(Error::EvenDistance(d)),
        Some(_) => {}
    }
    // Two internally disjoint a-b paths exist iff no third vertex separates
    // a from b. In a bipartite host with a, b nonadjacent at odd distance
    // both paths are odd of length at least 3, so their union is a cycle of
    // length at least 6.
    let all = low_mask(n);
    for x in 0..n {
        if x != a && x != b && h.reach(a, all & !(1 << x)) >> b & 1 == 0 {
            return Err(Error::NoCommonCycle(a, b));
        }
    }
    Ok(())
}

/// Host `H` plus a triangle `u v w` joined by `a v, b v, a w, b w`.
/// The triangle takes indices `m, m+1, m+2`.
pub fn bipartite_construction(h: &Graph, a: usize, b: usize) -> Result<Graph> {
    check_bipartite_host(h, a, b)?;
    let m = h.order();
    let host = match h.labels() {
        Some(_) => h.clone(),
        None => h
            .clone()
            .with_labels((0..m).map(|i| format!("h{i}")).collect())?,
    };
    let tri = Graph::complete(3)?.with_labels(vec!["u", "v", "w"])?;
    let g = host.disjoint_union(&tri)?;
    let (v, w) = (m + 1, m + 2);
    g.add_edges(&[(a, v), (b, v), (a, w), (b, w)])
}

/// Label map emitted next to a family graph.
#[derive(Serialize)]
pub struct LabelMap<'a> {
    pub labels: Vec<(&'a str, usize)>,
}

pub fn label_map(g: &Graph) -> LabelMap<'_> {
    LabelMap {
        labels: g
            .labels()
            .map(|l| l.iter().enumerate().map(|(i, s)| (s.as_str(), i)).collect())
            .unwrap_or_default(),
    }
}
