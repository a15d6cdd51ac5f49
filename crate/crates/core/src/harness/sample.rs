//! Seeded random instances. All randomness comes from the caller's
//! `Xoshiro256PlusPlus`, so a campaign seed fixes every instance.

use rand::Rng;
use rand_xoshiro::Xoshiro256PlusPlus;

use crate::generators::{blowup, cycle};
use crate::graph::Graph;
use crate::parity::{odd_girth, Dist};
use crate::saturation::{exceeds_degree_threshold, saturate, SaturationOrder};

/// Class sizes for a blow-up of `C_{2k+1}` on `n >= 2k+1` vertices: as
/// equal as possible, with the surplus placed at random.
fn near_balanced_sizes(rng: &mut Xoshiro256PlusPlus, n: usize, parts: usize) -> Vec<usize> {
    let mut sizes = vec![n / parts; parts];
    for _ in 0..n % parts {
        let i = rng.random_range(0..parts);
        sizes[i] += 1;
    }
    sizes
}

/// Class sizes: one vertex each, the rest placed uniformly at random.
fn random_sizes(rng: &mut Xoshiro256PlusPlus, n: usize, parts: usize) -> Vec<usize> {
    let mut sizes = vec![1; parts];
    for _ in parts..n {
        let i = rng.random_range(0..parts);
        sizes[i] += 1;
    }
    sizes
}

fn thin(rng: &mut Xoshiro256PlusPlus, g: &Graph, drop: f64) -> Graph {
    let kept: Vec<(usize, usize)> = g.edges().filter(|_| !rng.random_bool(drop)).collect();
    Graph::new(g.n(), &kept).expect("edges of an existing graph")
}

fn cycle_blowup(rng: &mut Xoshiro256PlusPlus, n: usize, k: usize, balanced: bool) -> Option<Graph> {
    let parts = 2 * k + 1;
    if n < parts {
        return None;
    }
    let sizes = if balanced { near_balanced_sizes(rng, n, parts) } else { random_sizes(rng, n, parts) };
    Some(blowup(&cycle(parts).ok()?, &sizes).ok()?.graph)
}

fn random_bipartite(rng: &mut Xoshiro256PlusPlus, n: usize, density: f64) -> Graph {
    let side: Vec<bool> = (0..n).map(|_| rng.random_bool(0.5)).collect();
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| side[u] != side[v])
        .filter(|_| rng.random_bool(density))
        .collect();
    Graph::new(n, &edges).expect("vertices are in range")
}

fn random_maximal(rng: &mut Xoshiro256PlusPlus, n: usize, k: usize) -> Graph {
    let empty = Graph::empty(n).expect("n within the vertex bound");
    saturate(&empty, k, SaturationOrder::SeededRandom(rng.random())).expect("edgeless graphs have infinite odd girth")
}

/// A random graph on `n` vertices, kept only if it has odd girth at least
/// `2k + 1` and `4k * delta > 3n`. Draws a thinned blow-up of `C_{2k+1}`,
/// a dense random bipartite graph, or a thinned random edge-maximal graph.
pub fn theorem_candidate(rng: &mut Xoshiro256PlusPlus, n: usize, k: usize) -> Option<Graph> {
    let g = match rng.random_range(0..4) {
        0 | 1 => {
            let balanced = rng.random_bool(0.7);
            let g = cycle_blowup(rng, n, k, balanced)?;
            let drop = [0.0, 0.05, 0.15][rng.random_range(0..3)];
            thin(rng, &g, drop)
        }
        2 => {
            let density = rng.random_range(0.6..=1.0);
            random_bipartite(rng, n, density)
        }
        _ => {
            let g = random_maximal(rng, n, k);
            thin(rng, &g, 0.1)
        }
    };
    (exceeds_degree_threshold(&g, k) && odd_girth(&g) >= Dist::Finite(2 * k + 1)).then_some(g)
}

/// A random graph of odd girth at least `2k + 1` to be saturated by a lemma
/// campaign: a thinned blow-up of `C_{2k+1}`, a random bipartite graph, or
/// a sparse random graph grown edge by edge.
pub fn lemma_candidate(rng: &mut Xoshiro256PlusPlus, n: usize, k: usize) -> Graph {
    match rng.random_range(0..4) {
        0 | 1 => match cycle_blowup(rng, n, k, true) {
            Some(g) => {
                let drop = rng.random_range(0.0..0.5);
                thin(rng, &g, drop)
            }
            None => random_bipartite(rng, n, 0.5),
        },
        2 => {
            let density = rng.random_range(0.3..0.9);
            random_bipartite(rng, n, density)
        }
        _ => {
            let g = random_maximal(rng, n, k);
            let drop = rng.random_range(0.3..0.8);
            thin(rng, &g, drop)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn candidates_meet_their_contracts() {
        let mut rng = Xoshiro256PlusPlus::seed_from_u64(3);
        let mut found = 0;
        for _ in 0..300 {
            let n = rng.random_range(2..=10);
            if let Some(g) = theorem_candidate(&mut rng, n, 2) {
                assert!(exceeds_degree_threshold(&g, 2));
                assert!(odd_girth(&g) >= Dist::Finite(5));
                found += 1;
            }
            let g = lemma_candidate(&mut rng, n, 2);
            assert!(odd_girth(&g) >= Dist::Finite(5));
        }
        assert!(found > 30, "{found}");
    }

    #[test]
    fn seeds_fix_instances() {
        let draw = |seed| {
            let mut rng = Xoshiro256PlusPlus::seed_from_u64(seed);
            (0..20).map(|_| lemma_candidate(&mut rng, 9, 2)).collect::<Vec<_>>()
        };
        assert_eq!(draw(5), draw(5));
        assert_ne!(draw(5), draw(6));
    }
}
