//! Brute-force oracles shared by the integration tests. None of them calls
//! into the search code they are compared against.

#![allow(dead_code)]

use oddgirth::Graph;
use rand::{Rng, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;

pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

/// The graph whose edges are the pairs selected by `mask` in lexicographic
/// pair order.
pub fn graph_from_bits(n: usize, mask: u64) -> Graph {
    let edges: Vec<_> = pairs(n).into_iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, e)| e).collect();
    Graph::new(n, &edges).unwrap()
}

pub fn adjacency(g: &Graph) -> Vec<Vec<bool>> {
    (0..g.n()).map(|u| (0..g.n()).map(|v| g.has_edge(u, v)).collect()).collect()
}

/// Shortest odd cycle by listing simple cycles: each cycle is grown from its
/// smallest vertex through larger vertices only.
pub fn odd_girth_by_cycles(g: &Graph) -> Option<usize> {
    let adj = adjacency(g);
    let n = g.n();
    let mut best: Option<usize> = None;
    fn grow(adj: &[Vec<bool>], start: usize, cur: usize, len: usize, on_path: &mut Vec<bool>, best: &mut Option<usize>) {
        if best.is_some_and(|b| len + 1 >= b) {
            return;
        }
        if len >= 2 && len.is_multiple_of(2) && adj[cur][start] {
            *best = Some(len + 1);
        }
        for next in start + 1..adj.len() {
            if adj[cur][next] && !on_path[next] {
                on_path[next] = true;
                grow(adj, start, next, len + 1, on_path, best);
                on_path[next] = false;
            }
        }
    }
    for s in 0..n {
        let mut on_path = vec![false; n];
        on_path[s] = true;
        grow(&adj, s, s, 0, &mut on_path, &mut best);
    }
    best
}

/// `{u, v}` added to `g` closes an odd cycle of length at most `2k - 1`.
pub fn short_odd_cycle_after_adding(g: &Graph, u: usize, v: usize, k: usize) -> bool {
    let h = g.with_edge(u, v).unwrap();
    odd_girth_by_cycles(&h).is_some_and(|l| l < 2 * k)
}

/// Some 6 vertices in some order span the hexagon `a0..a5` plus the
/// diagonal `{a1, a4}` and nothing else.
pub fn has_induced_phi_naive(g: &Graph) -> bool {
    let adj = adjacency(g);
    let mut want = [[false; 6]; 6];
    for (x, y) in [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (1, 4)] {
        want[x][y] = true;
        want[y][x] = true;
    }
    let n = g.n();
    let mut order = Vec::with_capacity(6);
    fn place(adj: &[Vec<bool>], want: &[[bool; 6]; 6], n: usize, order: &mut Vec<usize>) -> bool {
        let i = order.len();
        if i == 6 {
            return true;
        }
        for v in 0..n {
            if order.contains(&v) {
                continue;
            }
            if (0..i).all(|j| adj[order[j]][v] == want[j][i]) {
                order.push(v);
                if place(adj, want, n, order) {
                    return true;
                }
                order.pop();
            }
        }
        false
    }
    n >= 6 && place(&adj, &want, n, &mut order)
}

/// Lexicographically smallest upper-triangle string over all n! labellings.
pub fn brute_canonical(g: &Graph) -> Vec<bool> {
    let n = g.n();
    let adj = adjacency(g);
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Vec<bool>> = None;
    fn permute(k: usize, perm: &mut Vec<usize>, adj: &[Vec<bool>], best: &mut Option<Vec<bool>>) {
        if k == perm.len() {
            let n = perm.len();
            let s: Vec<bool> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).map(|(u, v)| adj[perm[u]][perm[v]]).collect();
            if best.as_ref().is_none_or(|b| s < *b) {
                *best = Some(s);
            }
            return;
        }
        for i in k..perm.len() {
            perm.swap(k, i);
            permute(k + 1, perm, adj, best);
            perm.swap(k, i);
        }
    }
    permute(0, &mut perm, &adj, &mut best);
    best.unwrap_or_default()
}

/// Every map `V(g) -> V(h)` in turn; fine for `|h|^|g|` up to a few million.
pub fn hom_exists_naive(g: &Graph, h: &Graph) -> bool {
    let n = g.n();
    let m = h.n();
    if n == 0 {
        return true;
    }
    if m == 0 {
        return false;
    }
    let edges: Vec<_> = g.edges().collect();
    let mut map = vec![0usize; n];
    loop {
        if edges.iter().all(|&(u, v)| h.has_edge(map[u], map[v])) {
            return true;
        }
        let mut i = 0;
        loop {
            if i == n {
                return false;
            }
            map[i] += 1;
            if map[i] < m {
                break;
            }
            map[i] = 0;
            i += 1;
        }
    }
}

pub fn is_independent_naive(g: &Graph, set: u64) -> bool {
    pairs(g.n()).into_iter().all(|(u, v)| !(set >> u & 1 == 1 && set >> v & 1 == 1 && g.has_edge(u, v)))
}

pub fn min_degree_naive(g: &Graph) -> usize {
    (0..g.n()).map(|u| (0..g.n()).filter(|&v| g.has_edge(u, v)).count()).min().unwrap_or(0)
}

pub fn rng(seed: u64) -> Xoshiro256PlusPlus {
    Xoshiro256PlusPlus::seed_from_u64(seed)
}

/// `G(n, p)` with `n` and `p` drawn from the ranges.
pub fn random_graph(rng: &mut Xoshiro256PlusPlus, n_range: std::ops::RangeInclusive<usize>) -> Graph {
    let n = rng.random_range(n_range);
    let p = rng.random_range(0.05..0.7);
    let edges: Vec<_> = pairs(n).into_iter().filter(|_| rng.random_bool(p)).collect();
    Graph::new(n, &edges).unwrap()
}
