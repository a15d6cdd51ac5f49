use crate::generators::{complete, cycle};
use crate::graph::{Graph, VertexSet};
use crate::parity::{odd_girth, shortest_odd_cycle, Dist};
use crate::saturation::{saturate, SaturationOrder};

use super::{verify_hom, BlowupDecomposition, HomCertificate, HomError};

/// The outcome of [`constructive_c_hom`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructiveHom {
    /// Map from the input graph into `C_{2k+1}`.
    pub certificate: HomCertificate,
    /// `saturated` as a blow-up of the base (`C_{2k+1}`, or `K_2` for
    /// bipartite inputs).
    pub decomposition: BlowupDecomposition,
    /// An edge-maximal supergraph of the input on the same vertices.
    pub saturated: Graph,
}

fn check_hypotheses(g: &Graph, k: usize) -> Result<(), HomError> {
    if k < 2 {
        return Err(HomError::HypothesisViolated(format!("k must be at least 2, got {k}")));
    }
    let girth = odd_girth(g);
    if girth < Dist::Finite(2 * k + 1) {
        return Err(HomError::HypothesisViolated(format!(
            "odd girth {girth} is below 2k+1 = {}",
            2 * k + 1
        )));
    }
    let n = g.n();
    let delta = g.min_degree().unwrap_or(0);
    if 4 * k * delta <= 3 * n {
        return Err(HomError::HypothesisViolated(format!(
            "minimum degree too small: 4k*delta = {} is not greater than 3n = {}",
            4 * k * delta,
            3 * n
        )));
    }
    Ok(())
}

/// Maps a graph with odd girth at least `2k + 1` and minimum degree above
/// `3n / 4k` into `C_{2k+1}` by reading off its structure.
///
/// Bipartite graphs map onto the edge `{0, 1}`. Otherwise the graph is
/// saturated; a shortest odd cycle of the saturated graph has length
/// exactly `2k + 1` and seeds one class per cycle vertex. Unplaced vertices
/// are then absorbed in increasing index order, sweep after sweep: a vertex
/// whose placed neighbours lie in exactly the classes `i - 1` and `i + 1`,
/// and which is joined to all of both, joins class `i`. Any other pattern
/// of placed neighbours, or a vertex left over at the fixed point, cannot
/// occur under the hypotheses and is reported as
/// [`HomError::InternalContradiction`].
pub fn constructive_c_hom(g: &Graph, k: usize) -> Result<ConstructiveHom, HomError> {
    check_hypotheses(g, k)?;
    let len = 2 * k + 1;
    let target = cycle(len).expect("2k+1 >= 5");

    let (class_of, decomposition, saturated) = match g.bipartition() {
        Some(side) => {
            let class_of: Vec<usize> = (0..g.n()).map(|v| (side >> v & 1) as usize).collect();
            let saturated = Graph::new(
                g.n(),
                &(0..g.n())
                    .flat_map(|u| (u + 1..g.n()).map(move |v| (u, v)))
                    .filter(|&(u, v)| class_of[u] != class_of[v])
                    .collect::<Vec<_>>(),
            )
            .expect("vertices are in range");
            let d = BlowupDecomposition::from_class_map(&class_of, complete(2).expect("K2"));
            (class_of, d, saturated)
        }
        None => {
            let saturated = saturate(g, k, SaturationOrder::Lexicographic)
                .map_err(|e| HomError::InternalContradiction(format!("saturation failed: {e}")))?;
            let class_of = absorb(&saturated, len)?;
            let d = BlowupDecomposition::from_class_map(&class_of, target.clone());
            (class_of, d, saturated)
        }
    };

    if !decomposition.validate(&saturated) {
        return Err(HomError::InternalContradiction(
            "the final partition is not a blow-up of the saturated graph".into(),
        ));
    }
    if !g.is_spanning_subgraph_of(&saturated) || verify_hom(g, &target, &class_of) != Ok(true) {
        return Err(HomError::InternalContradiction("the class map is not a homomorphism".into()));
    }
    Ok(ConstructiveHom {
        certificate: HomCertificate { map: class_of, target_n: len },
        decomposition,
        saturated,
    })
}

#[allow(clippy::needless_range_loop)]
fn absorb(sat: &Graph, len: usize) -> Result<Vec<usize>, HomError> {
    let seed = shortest_odd_cycle(sat)
        .ok_or_else(|| HomError::InternalContradiction("saturated graph became bipartite".into()))?;
    if seed.len() != len {
        return Err(HomError::InternalContradiction(format!(
            "shortest odd cycle of the saturated graph has length {}, expected {len}",
            seed.len()
        )));
    }
    let n = sat.n();
    let mut class_of = vec![usize::MAX; n];
    let mut classes: Vec<VertexSet> = vec![0; len];
    for (i, &v) in seed.vertices.iter().enumerate() {
        class_of[v] = i;
        classes[i] |= 1 << v;
    }
    let mut changed = true;
    while changed {
        changed = false;
        for x in 0..n {
            if class_of[x] != usize::MAX {
                continue;
            }
            let nb = sat.neighbours_mask(x);
            let touched: Vec<usize> = (0..len).filter(|&i| classes[i] & nb != 0).collect();
            if touched.is_empty() {
                continue;
            }
            let i = match touched[..] {
                [a, b] if (a + 2) % len == b => (a + 1) % len,
                [a, b] if (b + 2) % len == a => (b + 1) % len,
                _ => {
                    return Err(HomError::InternalContradiction(format!(
                        "vertex {x} has neighbours in classes {touched:?}"
                    )))
                }
            };
            let (before, after) = ((i + len - 1) % len, (i + 1) % len);
            if (classes[before] | classes[after]) & !nb != 0 {
                return Err(HomError::InternalContradiction(format!(
                    "vertex {x} is not joined to all of classes {before} and {after}"
                )));
            }
            class_of[x] = i;
            classes[i] |= 1 << x;
            changed = true;
        }
    }
    if let Some(x) = class_of.iter().position(|&c| c == usize::MAX) {
        return Err(HomError::InternalContradiction(format!("vertex {x} has no neighbour in the blow-up")));
    }
    Ok(class_of)
}

/// An independent set of `g` of size at least `ceil(kn / (2k+1))`, read off
/// a homomorphism into `C_{2k+1}`.
///
/// The `k`-set `{0, 2, .., 2k-2}` is independent in the cycle; of its
/// `2k + 1` rotations the one with the largest preimage is taken (the
/// first on ties). Each vertex lies in the preimage of exactly `k`
/// rotations, which gives the bound.
pub fn independent_set_from_hom(g: &Graph, cert: &HomCertificate, k: usize) -> Result<VertexSet, HomError> {
    if k < 1 {
        return Err(HomError::InvalidCertificate(format!("k must be positive, got {k}")));
    }
    let len = 2 * k + 1;
    let target = cycle(len).map_err(|e| HomError::InvalidCertificate(e.to_string()))?;
    if cert.target_n != len {
        return Err(HomError::InvalidCertificate(format!(
            "certificate targets {} vertices, expected {len}",
            cert.target_n
        )));
    }
    match verify_hom(g, &target, &cert.map) {
        Ok(true) => {}
        Ok(false) => return Err(HomError::InvalidCertificate("some edge is not preserved".into())),
        Err(e) => return Err(HomError::InvalidCertificate(e.to_string())),
    }
    let preimage = |r: usize| -> VertexSet {
        let images: VertexSet = (0..k).fold(0, |m, j| m | 1 << ((r + 2 * j) % len));
        (0..g.n()).filter(|&v| images >> cert.map[v] & 1 == 1).fold(0, |m, v| m | 1 << v)
    };
    let best = (0..len)
        .map(preimage)
        .enumerate()
        .max_by_key(|&(r, s)| (s.count_ones(), std::cmp::Reverse(r)))
        .map(|(_, s)| s)
        .expect("at least one rotation");
    debug_assert!(g.is_independent(best));
    debug_assert!(best.count_ones() as usize * len >= k * g.n());
    Ok(best)
}
