//! Left-right planarity test (testing phase only, no embedding).
//!
//! A DFS orients the graph and computes lowpoints and nesting depths; a
//! second DFS in nesting order maintains a stack of conflict pairs of
//! return-edge intervals. The graph is planar iff no interval pair ever has
//! to sit on both sides at once.

use crate::graph::{bits, Graph};

const NONE: usize = usize::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Interval {
    low: usize,
    high: usize,
}

impl Interval {
    const EMPTY: Interval = Interval {
        low: NONE,
        high: NONE,
    };

    fn is_empty(&self) -> bool {
        self.low == NONE && self.high == NONE
    }
}

#[derive(Clone, Copy, Debug)]
struct ConflictPair {
    id: usize,
    left: Interval,
    right: Interval,
}

impl ConflictPair {
    fn swap(&mut self) {
        std::mem::swap(&mut self.left, &mut self.right);
    }

    fn is_empty(&self) -> bool {
        self.left.is_empty() && self.right.is_empty()
    }
}

struct LrState<'a> {
    rows: &'a [u64],
    edge_id: Vec<usize>,
    oriented: Vec<bool>,
    src: Vec<usize>,
    dst: Vec<usize>,
    height: Vec<usize>,
    parent_edge: Vec<usize>,
    lowpt: Vec<usize>,
    lowpt2: Vec<usize>,
    nesting: Vec<usize>,
    out: Vec<Vec<usize>>,
    refs: Vec<usize>,
    lowpt_edge: Vec<usize>,
    stack_bottom: Vec<usize>,
    stack: Vec<ConflictPair>,
    next_id: usize,
}

impl LrState<'_> {
    fn eid(&self, u: usize, v: usize) -> usize {
        self.edge_id[u * self.rows.len() + v]
    }

    fn orient(&mut self, v: usize) {
        let e = self.parent_edge[v];
        for w in bits(self.rows[v]) {
            let id = self.eid(v, w);
            if self.oriented[id] {
                continue;
            }
            self.oriented[id] = true;
            self.src[id] = v;
            self.dst[id] = w;
            self.lowpt[id] = self.height[v];
            self.lowpt2[id] = self.height[v];
            if self.height[w] == NONE {
                self.parent_edge[w] = id;
                self.height[w] = self.height[v] + 1;
                self.orient(w);
            } else {
                self.lowpt[id] = self.height[w];
            }
            self.nesting[id] = 2 * self.lowpt[id] + usize::from(self.lowpt2[id] < self.height[v]);
            if e != NONE {
                if self.lowpt[id] < self.lowpt[e] {
                    self.lowpt2[e] = self.lowpt[e].min(self.lowpt2[id]);
                    self.lowpt[e] = self.lowpt[id];
                } else if self.lowpt[id] > self.lowpt[e] {
                    self.lowpt2[e] = self.lowpt2[e].min(self.lowpt[id]);
                } else {
                    self.lowpt2[e] = self.lowpt2[e].min(self.lowpt2[id]);
                }
            }
            self.out[v].push(id);
        }
    }

    fn top_id(&self) -> usize {
        self.stack.last().map_or(NONE, |p| p.id)
    }

    fn push_new(&mut self, left: Interval, right: Interval) {
        let id = self.next_id;
        self.next_id += 1;
        self.stack.push(ConflictPair { id, left, right });
    }

    fn conflicting(&self, i: Interval, b: usize) -> bool {
        !i.is_empty() && self.lowpt[i.high] > self.lowpt[b]
    }

    fn lowest(&self, p: &ConflictPair) -> usize {
        if p.left.is_empty() {
            self.lowpt[p.right.low]
        } else if p.right.is_empty() {
            self.lowpt[p.left.low]
        } else {
            self.lowpt[p.left.low].min(self.lowpt[p.right.low])
        }
    }

    fn set_ref(&mut self, e: usize, to: usize) {
        if e != NONE {
            self.refs[e] = to;
        }
    }

    fn test(&mut self, v: usize) -> bool {
        let e = self.parent_edge[v];
        let out = std::mem::take(&mut self.out[v]);
        for (i, &ei) in out.iter().enumerate() {
            self.stack_bottom[ei] = self.top_id();
            let w = self.dst[ei];
            if self.parent_edge[w] == ei {
                if !self.test(w) {
                    return false;
                }
            } else {
                self.lowpt_edge[ei] = ei;
                self.push_new(Interval::EMPTY, Interval { low: ei, high: ei });
            }
            if self.lowpt[ei] < self.height[v] {
                if i == 0 {
                    self.lowpt_edge[e] = self.lowpt_edge[ei];
                } else if !self.add_constraints(ei, e) {
                    return false;
                }
            }
        }
        if e != NONE {
            let u = self.src[e];
            self.trim_back_edges(u);
            if self.lowpt[e] < self.height[u] {
                let top = *self
                    .stack
                    .last()
                    .expect("return edges leave a pair on the stack");
                let (hl, hr) = (top.left.high, top.right.high);
                self.refs[e] = if hl != NONE && (hr == NONE || self.lowpt[hl] > self.lowpt[hr]) {
                    hl
                } else {
                    hr
                };
            }
        }
        true
    }

    fn add_constraints(&mut self, ei: usize, e: usize) -> bool {
        let mut p = ConflictPair {
            id: NONE,
            left: Interval::EMPTY,
            right: Interval::EMPTY,
        };
        loop {
            let mut q = self.stack.pop().expect("pairs above the stack bottom");
            if !q.left.is_empty() {
                q.swap();
            }
            if !q.left.is_empty() {
                return false;
            }
            if self.lowpt[q.right.low] > self.lowpt[e] {
                if p.right.is_empty() {
                    p.right.high = q.right.high;
                } else {
                    self.set_ref(p.right.low, q.right.high);
                }
                p.right.low = q.right.low;
            } else {
                self.set_ref(q.right.low, self.lowpt_edge[e]);
            }
            if self.top_id() == self.stack_bottom[ei] {
                break;
            }
        }
        while let Some(top) = self.stack.last().copied() {
            if !(self.conflicting(top.left, ei) || self.conflicting(top.right, ei)) {
                break;
            }
            let mut q = self.stack.pop().expect("peeked");
            if self.conflicting(q.right, ei) {
                q.swap();
            }
            if self.conflicting(q.right, ei) {
                return false;
            }
            self.set_ref(p.right.low, q.right.high);
            if q.right.low != NONE {
                p.right.low = q.right.low;
            }
            if p.left.is_empty() {
                p.left.high = q.left.high;
            } else {
                self.set_ref(p.left.low, q.left.high);
            }
            p.left.low = q.left.low;
        }
        if !p.is_empty() {
            self.push_new(p.left, p.right);
        }
        true
    }

    fn trim_back_edges(&mut self, u: usize) {
        while let Some(top) = self.stack.last() {
            if self.lowest(top) != self.height[u] {
                break;
            }
            self.stack.pop();
        }
        if let Some(mut p) = self.stack.pop() {
            while p.left.high != NONE && self.dst[p.left.high] == u {
                p.left.high = self.refs[p.left.high];
            }
            if p.left.high == NONE && p.left.low != NONE {
                self.refs[p.left.low] = p.right.low;
                p.left.low = NONE;
            }
            while p.right.high != NONE && self.dst[p.right.high] == u {
                p.right.high = self.refs[p.right.high];
            }
            if p.right.high == NONE && p.right.low != NONE {
                self.refs[p.right.low] = p.left.low;
                p.right.low = NONE;
            }
            self.stack.push(p);
        }
    }
}

pub fn is_planar(g: &Graph) -> bool {
    let n = g.order();
    let m = g.size();
    if n <= 4 || m <= 8 {
        return true;
    }
    if m > 3 * n - 6 {
        return false;
    }
    let rows = g.rows();
    let mut edge_id = vec![NONE; n * n];
    for (i, (u, v)) in g.edges().into_iter().enumerate() {
        edge_id[u * n + v] = i;
        edge_id[v * n + u] = i;
    }
    let mut st = LrState {
        rows,
        edge_id,
        oriented: vec![false; m],
        src: vec![NONE; m],
        dst: vec![NONE; m],
        height: vec![NONE; n],
        parent_edge: vec![NONE; n],
        lowpt: vec![0; m],
        lowpt2: vec![0; m],
        nesting: vec![0; m],
        out: vec![Vec::new(); n],
        refs: vec![NONE; m],
        lowpt_edge: vec![NONE; m],
        stack_bottom: vec![NONE; m],
        stack: Vec::new(),
        next_id: 0,
    };
    let mut roots = Vec::new();
    for v in 0..n {
        if st.height[v] == NONE {
            st.height[v] = 0;
            roots.push(v);
            st.orient(v);
        }
    }
    for v in 0..n {
        let nesting = &st.nesting;
        st.out[v].sort_by_key(|&e| nesting[e]);
    }
    roots.into_iter().all(|r| st.test(r))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, es: &[(usize, usize)]) -> Graph {
        Graph::build(n, es).unwrap()
    }

    #[test]
    fn kuratowski_graphs() {
        assert!(!is_planar(&Graph::complete(5).unwrap()));
        assert!(!is_planar(&Graph::complete_bipartite(3, 3).unwrap()));
        assert!(is_planar(&Graph::complete(4).unwrap()));
        assert!(is_planar(&Graph::complete_bipartite(2, 7).unwrap()));
        // K5 minus an edge and K3,3 minus an edge are planar.
        let es: Vec<_> = Graph::complete(5)
            .unwrap()
            .edges()
            .into_iter()
            .filter(|&e| e != (0, 1))
            .collect();
        assert!(is_planar(&g(5, &es)));
        let k33: Vec<_> = Graph::complete_bipartite(3, 3)
            .unwrap()
            .edges()
            .into_iter()
            .skip(1)
            .collect();
        assert!(is_planar(&g(6, &k33)));
    }

    #[test]
    fn petersen_is_not_planar() {
        let p = g(
            10,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 0),
                (0, 5),
                (1, 6),
                (2, 7),
                (3, 8),
                (4, 9),
                (5, 7),
                (7, 9),
                (9, 6),
                (6, 8),
                (8, 5),
            ],
        );
        assert!(!is_planar(&p));
    }

    #[test]
    fn goldner_harary_is_planar() {
        let es = [
            (1, 2),
            (1, 3),
            (1, 4),
            (1, 5),
            (1, 7),
            (1, 8),
            (1, 10),
            (1, 11),
            (2, 3),
            (2, 4),
            (2, 6),
            (2, 7),
            (2, 9),
            (2, 10),
            (2, 11),
            (3, 4),
            (4, 5),
            (4, 6),
            (4, 7),
            (5, 7),
            (6, 7),
            (7, 8),
            (7, 9),
            (7, 10),
            (8, 10),
            (9, 10),
            (10, 11),
        ];
        let es: Vec<_> = es.iter().map(|&(u, v)| (u - 1, v - 1)).collect();
        assert!(is_planar(&g(11, &es)));
    }

    #[test]
    fn grids_cubes_and_unions() {
        let mut es = Vec::new();
        for r in 0..5 {
            for c in 0..5 {
                let v = r * 5 + c;
                if c < 4 {
                    es.push((v, v + 1));
                }
                if r < 4 {
                    es.push((v, v + 5));
                }
            }
        }
        assert!(is_planar(&g(25, &es)));
        assert!(is_planar(&Graph::hypercube(3).unwrap()));
        assert!(!is_planar(&Graph::hypercube(4).unwrap()));
        // K3,3 next to a triangle is still nonplanar.
        let k33 = Graph::complete_bipartite(3, 3).unwrap();
        let u = k33.disjoint_union(&Graph::complete(3).unwrap()).unwrap();
        assert!(!is_planar(&u));
        // Subdivided K5 is nonplanar.
        let mut s = Graph::complete(5).unwrap();
        for (a, b) in [(0, 1), (2, 3), (1, 4)] {
            s = s.subdivide_edge(a, b, 2).unwrap();
        }
        assert!(!is_planar(&s));
    }
}
