//! Brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use vstab::Graph;

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Upper-triangle adjacency bits of `g` relabeled by `p` (v goes to p[v]).
pub fn code(rows: &[u64], p: &[usize]) -> u64 {
    let n = rows.len();
    let mut inv = vec![0; n];
    for (v, &pv) in p.iter().enumerate() {
        inv[pv] = v;
    }
    let mut c = 0u64;
    for i in 0..n {
        for j in i + 1..n {
            c = c << 1 | (rows[inv[i]] >> inv[j] & 1);
        }
    }
    c
}

pub fn brute_key(g: &Graph, perms: &[Vec<usize>]) -> u64 {
    perms.iter().map(|p| code(g.rows(), p)).min().unwrap()
}

pub fn brute_aut(g: &Graph, perms: &[Vec<usize>]) -> u128 {
    let id = code(g.rows(), &(0..g.order()).collect::<Vec<_>>());
    perms.iter().filter(|p| code(g.rows(), p) == id).count() as u128
}

pub fn labeled(n: usize, mask: u64) -> Graph {
    let mut es = Vec::new();
    let mut bit = 0;
    for i in 0..n {
        for j in i + 1..n {
            if mask >> bit & 1 == 1 {
                es.push((i, j));
            }
            bit += 1;
        }
    }
    Graph::build(n, &es).unwrap()
}

/// Routes every pair in `pairs[i..]` along internally disjoint paths whose
/// interior avoids `used`.
pub fn route(rows: &[u64], pairs: &[(usize, usize)], i: usize, used: u64) -> bool {
    let Some(&(s, t)) = pairs.get(i) else {
        return true;
    };
    // Depth-first over simple paths from s to t through free vertices.
    fn walk(
        rows: &[u64],
        pairs: &[(usize, usize)],
        i: usize,
        at: usize,
        t: usize,
        used: u64,
    ) -> bool {
        if rows[at] >> t & 1 == 1 && route(rows, pairs, i + 1, used) {
            return true;
        }
        let mut free = rows[at] & !used;
        while free != 0 {
            let v = free.trailing_zeros() as usize;
            free &= free - 1;
            if walk(rows, pairs, i, v, t, used | 1 << v) {
                return true;
            }
        }
        false
    }
    walk(rows, pairs, i, s, t, used)
}

pub fn choose(pool: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for (i, &x) in pool.iter().enumerate() {
        for mut rest in choose(&pool[i + 1..], k - 1) {
            rest.insert(0, x);
            out.push(rest);
        }
    }
    out
}

pub fn has_kuratowski_subdivision(g: &Graph) -> bool {
    let n = g.order();
    let rows = g.rows();
    let deg = |v: usize| g.degree(v);
    let five: Vec<usize> = (0..n).filter(|&v| deg(v) >= 4).collect();
    for b in choose(&five, 5) {
        let pairs: Vec<_> = choose(&b, 2).into_iter().map(|p| (p[0], p[1])).collect();
        let used = b.iter().fold(0u64, |a, &v| a | 1 << v);
        if route(rows, &pairs, 0, used) {
            return true;
        }
    }
    let three: Vec<usize> = (0..n).filter(|&v| deg(v) >= 3).collect();
    for b in choose(&three, 6) {
        // Split the six into sides; fixing b[0] on the left avoids mirror images.
        for left in choose(&b[1..], 2) {
            let l: Vec<usize> = std::iter::once(b[0]).chain(left).collect();
            let r: Vec<usize> = b.iter().copied().filter(|v| !l.contains(v)).collect();
            let pairs: Vec<_> = l
                .iter()
                .flat_map(|&x| r.iter().map(move |&y| (x, y)))
                .collect();
            let used = b.iter().fold(0u64, |a, &v| a | 1 << v);
            if route(rows, &pairs, 0, used) {
                return true;
            }
        }
    }
    false
}
