//! Test-only oracles, kept independent of the library's algorithms.
#![allow(dead_code, clippy::needless_range_loop)]

use std::collections::BTreeSet;

use pursuit_core::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Classical game (robber speed 1) over ordered cop tuples, solved by
/// repeated full sweeps until nothing changes.
pub fn classical_cops_win(g: &Graph, k: usize) -> bool {
    let n = g.n();
    let tuples = n.pow(k as u32);
    let decode = |mut idx: usize| -> Vec<usize> {
        let mut out = Vec::with_capacity(k);
        for _ in 0..k {
            out.push(idx % n);
            idx /= n;
        }
        out
    };
    let encode = |cops: &[usize]| cops.iter().rev().fold(0, |acc, &c| acc * n + c);
    let closed = |v: usize| -> Vec<usize> {
        let mut out = vec![v];
        out.extend(g.neighbors(v).iter().copied());
        out
    };
    let steps: Vec<Vec<usize>> = (0..tuples)
        .map(|idx| {
            let cops = decode(idx);
            let mut all = vec![Vec::new()];
            for &c in &cops {
                let mut next = Vec::new();
                for partial in &all {
                    for w in closed(c) {
                        let mut p: Vec<usize> = partial.clone();
                        p.push(w);
                        next.push(p);
                    }
                }
                all = next;
            }
            all.iter().map(|p| encode(p)).collect()
        })
        .collect();

    let mut cop_turn = vec![vec![false; n]; tuples];
    let mut robber_turn = vec![vec![false; n]; tuples];
    loop {
        let mut changed = false;
        for idx in 0..tuples {
            let cops = decode(idx);
            for r in 0..n {
                if cops.contains(&r) {
                    if !cop_turn[idx][r] || !robber_turn[idx][r] {
                        cop_turn[idx][r] = true;
                        robber_turn[idx][r] = true;
                        changed = true;
                    }
                    continue;
                }
                if !robber_turn[idx][r] {
                    let lost = closed(r)
                        .into_iter()
                        .filter(|w| !cops.contains(w))
                        .all(|w| cop_turn[idx][w]);
                    if lost {
                        robber_turn[idx][r] = true;
                        changed = true;
                    }
                }
                if !cop_turn[idx][r] && steps[idx].iter().any(|&nx| robber_turn[nx][r]) {
                    cop_turn[idx][r] = true;
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    (0..tuples).any(|idx| (0..n).all(|r| cop_turn[idx][r]))
}

pub fn classical_cop_number(g: &Graph, k_max: usize) -> Option<usize> {
    (1..=k_max).find(|&k| classical_cops_win(g, k))
}

pub fn floyd_warshall(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let inf = usize::MAX / 4;
    let mut d = vec![vec![inf; n]; n];
    for u in 0..n {
        d[u][u] = 0;
        for &v in g.neighbors(u) {
            d[u][v] = 1;
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

/// Vertices at the end of some simple path of length <= t from `from`
/// avoiding `cops`, by exhaustive DFS.
pub fn reach_by_paths(g: &Graph, from: usize, cops: &[usize], t: usize) -> BTreeSet<usize> {
    fn walk(
        g: &Graph,
        v: usize,
        cops: &[usize],
        left: usize,
        seen: &mut Vec<usize>,
        out: &mut BTreeSet<usize>,
    ) {
        out.insert(v);
        if left == 0 {
            return;
        }
        for &w in g.neighbors(v) {
            if !cops.contains(&w) && !seen.contains(&w) {
                seen.push(w);
                walk(g, w, cops, left - 1, seen, out);
                seen.pop();
            }
        }
    }
    let mut out = BTreeSet::new();
    walk(g, from, cops, t, &mut vec![from], &mut out);
    out
}

pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

pub fn random_connected_graph(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    loop {
        let p = rng.gen_range(0.2..0.75);
        let g = random_graph(rng, n, p);
        if g.is_connected() {
            return g;
        }
    }
}

/// Random labelled tree: vertex i attaches to a uniformly chosen earlier one.
pub fn random_tree(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (rng.gen_range(0..i), i)).collect();
    Graph::from_edges(n, &edges).unwrap()
}

/// Adjacency bitmasks, one per vertex.
type Masks = Vec<u32>;

fn code(masks: &Masks, perm: &[usize]) -> u64 {
    // perm[new] = old
    let n = masks.len();
    let mut bits = 0u64;
    let mut pos = 0;
    for i in 0..n {
        for j in i + 1..n {
            if masks[perm[i]] >> perm[j] & 1 == 1 {
                bits |= 1 << pos;
            }
            pos += 1;
        }
    }
    bits
}

/// Minimum edge code over relabellings that list vertices by degree.
fn canonical_code(masks: &Masks) -> u64 {
    let n = masks.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| masks[v].count_ones());
    let degree = |v: usize| masks[v].count_ones();
    let mut best = u64::MAX;
    let mut perm = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn go(
        masks: &Masks,
        order: &[usize],
        degree: &dyn Fn(usize) -> u32,
        perm: &mut Vec<usize>,
        used: &mut [bool],
        best: &mut u64,
    ) {
        let n = masks.len();
        if perm.len() == n {
            *best = (*best).min(code(masks, perm));
            return;
        }
        let want = degree(order[perm.len()]);
        for v in 0..n {
            if !used[v] && degree(v) == want {
                used[v] = true;
                perm.push(v);
                go(masks, order, degree, perm, used, best);
                perm.pop();
                used[v] = false;
            }
        }
    }
    go(masks, &order, &degree, &mut perm, &mut used, &mut best);
    best
}

fn to_graph(masks: &Masks) -> Graph {
    let n = masks.len();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if masks[u] >> v & 1 == 1 {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// One representative per isomorphism class of graphs on `n` vertices,
/// grown vertex by vertex.
pub fn all_graphs_up_to_iso(n: usize) -> Vec<Graph> {
    let mut level: Vec<Masks> = vec![vec![]];
    for size in 1..=n {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for base in &level {
            for subset in 0u32..(1 << (size - 1)) {
                let mut masks = base.clone();
                for (v, m) in masks.iter_mut().enumerate() {
                    if subset >> v & 1 == 1 {
                        *m |= 1 << (size - 1);
                    }
                }
                masks.push(subset);
                if seen.insert(canonical_code(&masks)) {
                    next.push(masks);
                }
            }
        }
        level = next;
    }
    level.iter().map(to_graph).collect()
}

pub fn connected_graphs_up_to_iso(n: usize) -> Vec<Graph> {
    all_graphs_up_to_iso(n)
        .into_iter()
        .filter(|g| g.is_connected())
        .collect()
}
