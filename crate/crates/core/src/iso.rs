//! Isomorphism testing and canonical forms for small graphs.
//!
//! Both routines start from an isomorphism-invariant colour refinement
//! (degrees, then iterated neighbour-colour multisets). `canonical_form`
//! then minimises the adjacency string over all colour-respecting
//! relabellings; `is_isomorphic` backtracks a colour-respecting bijection.

use thiserror::Error;

use crate::graph::{bits, Graph, VertexSet};

/// Largest graph `is_isomorphic` accepts by default.
pub const DEFAULT_ISO_MAX_N: usize = 16;
/// Largest graph `canonical_form` accepts.
pub const CANONICAL_MAX_N: usize = 11;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum IsoError {
    #[error("graph on {n} vertices exceeds the isomorphism bound {max}")]
    TooLarge { n: usize, max: usize },
}

/// Stable colour refinement. Colours are canonical: two isomorphic graphs
/// receive the same colour multiset, and colour ids are ranks of sorted
/// signatures so they can be compared across graphs refined together.
fn refine(graphs: &[&Graph]) -> Vec<Vec<usize>> {
    let mut colours: Vec<Vec<usize>> = graphs
        .iter()
        .map(|g| (0..g.n()).map(|v| g.degree(v)).collect())
        .collect();
    loop {
        let mut signatures: Vec<Vec<(usize, Vec<usize>)>> = Vec::with_capacity(graphs.len());
        for (g, col) in graphs.iter().zip(&colours) {
            signatures.push(
                (0..g.n())
                    .map(|v| {
                        let mut nb: Vec<usize> = g.neighbours(v).map(|w| col[w]).collect();
                        nb.sort_unstable();
                        (col[v], nb)
                    })
                    .collect(),
            );
        }
        let mut palette: Vec<&(usize, Vec<usize>)> = signatures.iter().flatten().collect();
        palette.sort();
        palette.dedup();
        let next: Vec<Vec<usize>> = signatures
            .iter()
            .map(|sig| {
                sig.iter()
                    .map(|s| palette.binary_search(&s).expect("signature in palette"))
                    .collect()
            })
            .collect();
        let classes = |c: &Vec<Vec<usize>>| {
            let mut all: Vec<usize> = c.iter().flatten().copied().collect();
            all.sort_unstable();
            all.dedup();
            all.len()
        };
        if classes(&next) == classes(&colours) {
            return next;
        }
        colours = next;
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    pub n: usize,
    pub bits: Vec<bool>,
}

/// Canonical adjacency string: the lexicographically smallest upper
/// triangle (column-major, `(0,1), (0,2), (1,2), …`) over every relabelling that
/// lists refinement colours in increasing order. Two graphs are isomorphic
/// iff their canonical forms are equal.
pub fn canonical_form(g: &Graph) -> Result<CanonicalForm, IsoError> {
    let n = g.n();
    if n > CANONICAL_MAX_N {
        return Err(IsoError::TooLarge { n, max: CANONICAL_MAX_N });
    }
    let colour = refine(&[g]).pop().unwrap_or_default();
    // Position i of the relabelled graph must hold a vertex of colour slot[i].
    let mut slot = colour.clone();
    slot.sort_unstable();

    let mut best: Option<Vec<bool>> = None;
    let mut order = Vec::with_capacity(n);
    let mut current = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    canon_rec(g, &colour, &slot, &mut order, 0, &mut current, &mut best);
    Ok(CanonicalForm {
        n,
        bits: best.unwrap_or_default(),
    })
}

/// `order[i]` is the vertex placed at position `i`. Placing position `j`
/// appends the bits `(i, j)` for `i < j`, so `current` is the upper triangle
/// in column-major order and every partial string is a prefix of the final
/// one; a prefix already greater than the best string is pruned.
fn canon_rec(
    g: &Graph,
    colour: &[usize],
    slot: &[usize],
    order: &mut Vec<usize>,
    used: VertexSet,
    current: &mut Vec<bool>,
    best: &mut Option<Vec<bool>>,
) {
    let j = order.len();
    if j == g.n() {
        if best.as_ref().is_none_or(|b| current[..] < b[..]) {
            *best = Some(current.clone());
        }
        return;
    }
    for v in bits(g.all_vertices() & !used) {
        if colour[v] != slot[j] {
            continue;
        }
        let mark = current.len();
        current.extend(order.iter().map(|&u| g.has_edge(u, v)));
        let worse = best
            .as_ref()
            .is_some_and(|b| current[..] > b[..current.len()]);
        if !worse {
            order.push(v);
            canon_rec(g, colour, slot, order, used | 1 << v, current, best);
            order.pop();
        }
        current.truncate(mark);
    }
}

/// Exact isomorphism test for graphs up to [`DEFAULT_ISO_MAX_N`] vertices.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> Result<bool, IsoError> {
    is_isomorphic_bounded(g, h, DEFAULT_ISO_MAX_N)
}

pub fn is_isomorphic_bounded(g: &Graph, h: &Graph, max_n: usize) -> Result<bool, IsoError> {
    for x in [g, h] {
        if x.n() > max_n {
            return Err(IsoError::TooLarge { n: x.n(), max: max_n });
        }
    }
    Ok(find_isomorphism(g, h).is_some())
}

/// A bijection `map` with `{u,v} ∈ E(g) ⇔ {map[u],map[v]} ∈ E(h)`.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return None;
    }
    let mut cols = refine(&[g, h]);
    let ch = cols.pop()?;
    let cg = cols.pop()?;
    let (mut sg, mut sh) = (cg.clone(), ch.clone());
    sg.sort_unstable();
    sh.sort_unstable();
    if sg != sh {
        return None;
    }
    // Map g's vertices in BFS order so each new vertex has mapped neighbours.
    let order = bfs_order(g);
    let mut map = vec![usize::MAX; g.n()];
    if iso_rec(g, h, &cg, &ch, &order, 0, &mut map, 0) {
        Some(map)
    } else {
        None
    }
}

fn bfs_order(g: &Graph) -> Vec<usize> {
    let mut seen: VertexSet = 0;
    let mut order = Vec::with_capacity(g.n());
    for root in 0..g.n() {
        if seen >> root & 1 == 1 {
            continue;
        }
        seen |= 1 << root;
        let start = order.len();
        order.push(root);
        let mut i = start;
        while i < order.len() {
            let u = order[i];
            for w in bits(g.neighbours_mask(u) & !seen) {
                seen |= 1 << w;
                order.push(w);
            }
            i += 1;
        }
    }
    order
}

#[allow(clippy::too_many_arguments)]
fn iso_rec(
    g: &Graph,
    h: &Graph,
    cg: &[usize],
    ch: &[usize],
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: VertexSet,
) -> bool {
    let Some(&v) = order.get(depth) else {
        return true;
    };
    for img in bits(h.all_vertices() & !used) {
        if ch[img] != cg[v] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&u| g.has_edge(u, v) == h.has_edge(map[u], img));
        if !consistent {
            continue;
        }
        map[v] = img;
        if iso_rec(g, h, cg, ch, order, depth + 1, map, used | 1 << img) {
            return true;
        }
    }
    map[v] = usize::MAX;
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete_bipartite, cycle, f_family, mobius_ladder};

    fn two_triangles() -> Graph {
        Graph::new(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap()
    }

    #[test]
    fn relabelled_cycle() {
        let c5 = cycle(5).unwrap();
        let shuffled = c5.permuted(&[3, 0, 4, 1, 2]);
        assert_ne!(c5, shuffled);
        assert!(is_isomorphic(&c5, &shuffled).unwrap());
        let map = find_isomorphism(&c5, &shuffled).unwrap();
        for (u, v) in c5.edges() {
            assert!(shuffled.has_edge(map[u], map[v]));
        }
    }

    #[test]
    fn hexagon_is_not_two_triangles() {
        assert!(!is_isomorphic(&cycle(6).unwrap(), &two_triangles()).unwrap());
    }

    #[test]
    fn f33_is_m12() {
        assert!(is_isomorphic(&f_family(3, 3).unwrap(), &mobius_ladder(12).unwrap()).unwrap());
        assert!(is_isomorphic(&f_family(3, 2).unwrap(), &mobius_ladder(8).unwrap()).unwrap());
    }

    #[test]
    fn too_large() {
        let c = cycle(17).unwrap();
        assert_eq!(is_isomorphic(&c, &c), Err(IsoError::TooLarge { n: 17, max: 16 }));
        assert!(is_isomorphic_bounded(&c, &c, 20).unwrap());
        assert!(canonical_form(&c).is_err());
    }

    #[test]
    fn canonical_form_agrees_with_isomorphism() {
        let c6 = cycle(6).unwrap();
        let k33 = complete_bipartite(3, 3).unwrap();
        let perm = [5, 3, 1, 0, 2, 4];
        assert_eq!(canonical_form(&c6).unwrap(), canonical_form(&c6.permuted(&perm)).unwrap());
        assert_eq!(canonical_form(&k33).unwrap(), canonical_form(&k33.permuted(&perm)).unwrap());
        assert_ne!(canonical_form(&c6).unwrap(), canonical_form(&two_triangles()).unwrap());
        assert_ne!(canonical_form(&c6).unwrap(), canonical_form(&k33).unwrap());
    }

    #[test]
    fn canonical_form_matches_brute_force_classes() {
        // Every labelled graph on 5 vertices: 34 isomorphism classes.
        let pairs: Vec<(usize, usize)> =
            (0..5).flat_map(|u| (u + 1..5).map(move |v| (u, v))).collect();
        let mut forms = std::collections::HashSet::new();
        for bitsset in 0u32..1 << pairs.len() {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| bitsset >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            forms.insert(canonical_form(&Graph::new(5, &edges).unwrap()).unwrap());
        }
        assert_eq!(forms.len(), 34);
    }
}
