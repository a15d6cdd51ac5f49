//! Homomorphisms: an exact backtracking oracle, blow-up recognition, and
//! the construction of a map into `C_{2k+1}` from the structure of
//! edge-maximal graphs, which needs no search at all.

mod blowup;
mod constructive;
mod solver;

use thiserror::Error;

use crate::budget::{Budget, BudgetExceeded};
use crate::graph::{bits, Graph};

pub use blowup::{is_blowup_of, BlowupDecomposition};
pub use constructive::{constructive_c_hom, independent_set_from_hom, ConstructiveHom};
use solver::{Mode, Solver};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum HomError {
    #[error("map has length {found}, expected {expected}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("image {image} of vertex {vertex} is not a vertex of the target (n = {n})")]
    IndexOutOfRange { vertex: usize, image: usize, n: usize },

    #[error("search budget of {0} nodes exhausted before the search completed")]
    SearchBudgetExceeded(u64),

    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),

    #[error("internal contradiction: {0}")]
    InternalContradiction(String),

    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),
}

impl From<BudgetExceeded> for HomError {
    fn from(e: BudgetExceeded) -> HomError {
        HomError::SearchBudgetExceeded(e.0)
    }
}

/// A vertex map `G -> H` recorded with the size of its target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomCertificate {
    pub map: Vec<usize>,
    pub target_n: usize,
}

impl HomCertificate {
    pub fn validate(&self, g: &Graph, h: &Graph) -> bool {
        self.target_n == h.n() && verify_hom(g, h, &self.map) == Ok(true)
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &HomCertificate) -> Option<HomCertificate> {
        let map = self.map.iter().map(|&v| other.map.get(v).copied()).collect::<Option<_>>()?;
        Some(HomCertificate { map, target_n: other.target_n })
    }
}

/// Whether `map` sends every edge of `g` to an edge of `h`.
pub fn verify_hom(g: &Graph, h: &Graph, map: &[usize]) -> Result<bool, HomError> {
    if map.len() != g.n() {
        return Err(HomError::LengthMismatch { expected: g.n(), found: map.len() });
    }
    if let Some((vertex, &image)) = map.iter().enumerate().find(|&(_, &t)| t >= h.n()) {
        return Err(HomError::IndexOutOfRange { vertex, image, n: h.n() });
    }
    Ok(g.edges().all(|(u, v)| h.has_edge(map[u], map[v])))
}

/// Decides whether `g` maps homomorphically into `h`.
pub fn find_hom(g: &Graph, h: &Graph) -> Option<HomCertificate> {
    find_hom_bounded(g, h, &mut Budget::unlimited()).expect("an unlimited budget is never exhausted")
}

/// [`find_hom`] with a node budget.
///
/// Vertices with identical neighbourhoods can always share an image, so the
/// search runs on one representative per neighbourhood and copies the
/// result to the others.
pub fn find_hom_bounded(g: &Graph, h: &Graph, budget: &mut Budget) -> Result<Option<HomCertificate>, HomError> {
    let masks = g.masks();
    let rep: Vec<usize> = (0..g.n()).map(|v| (0..=v).find(|&u| masks[u] == masks[v]).unwrap_or(v)).collect();
    let reps = rep.iter().enumerate().filter(|&(v, &r)| v == r).fold(0u64, |m, (v, _)| m | 1 << v);
    let reduced = g.induced(reps);
    let position: Vec<usize> = {
        let mut pos = vec![usize::MAX; g.n()];
        for (i, v) in bits(reps).enumerate() {
            pos[v] = i;
        }
        pos
    };
    let Some(small) = Solver::new(&reduced, h, Mode::Hom).solve(budget)? else {
        return Ok(None);
    };
    let map = (0..g.n()).map(|v| small[position[rep[v]]]).collect();
    let cert = HomCertificate { map, target_n: h.n() };
    debug_assert!(cert.validate(g, h));
    Ok(Some(cert))
}

/// An injective homomorphism, i.e. a copy of `g` as a (not necessarily
/// induced) subgraph of `h`.
pub fn find_embedding(g: &Graph, h: &Graph, budget: &mut Budget) -> Result<Option<HomCertificate>, HomError> {
    let found = Solver::new(g, h, Mode::Injective).solve(budget)?;
    Ok(found.map(|map| HomCertificate { map, target_n: h.n() }))
}

/// Whether `g` has a proper colouring with `c` colours.
pub fn chromatic_number_le(g: &Graph, c: usize) -> bool {
    if c >= g.n() {
        return true;
    }
    let kc = crate::generators::complete(c).expect("colour count exceeds the vertex bound");
    find_hom(g, &kc).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, f_family, grotzsch, mobius_ladder};

    #[test]
    fn verify_examples() {
        let c5 = cycle(5).unwrap();
        assert_eq!(verify_hom(&c5, &c5, &[0, 1, 2, 3, 4]), Ok(true));
        let k2 = complete(2).unwrap();
        assert_eq!(verify_hom(&k2, &k2, &[0, 0]), Ok(false));
        assert_eq!(
            verify_hom(&k2, &k2, &[0, 2]),
            Err(HomError::IndexOutOfRange { vertex: 1, image: 2, n: 2 })
        );
        assert_eq!(verify_hom(&k2, &k2, &[0]), Err(HomError::LengthMismatch { expected: 2, found: 1 }));
    }

    #[test]
    fn cycle_targets() {
        let c5 = cycle(5).unwrap();
        let c7 = cycle(7).unwrap();
        let id = find_hom(&c5, &c5).unwrap();
        assert!(id.validate(&c5, &c5));
        let fold = find_hom(&c7, &c5).unwrap();
        assert!(fold.validate(&c7, &c5));
        assert_eq!(find_hom(&c5, &c7), None);
        assert_eq!(find_hom(&mobius_ladder(8).unwrap(), &c5), None);
    }

    #[test]
    fn twins_share_images() {
        let k33 = crate::generators::complete_bipartite(3, 3).unwrap();
        let cert = find_hom(&k33, &complete(2).unwrap()).unwrap();
        assert_eq!(cert.map, vec![0, 0, 0, 1, 1, 1]);
        let isolated = Graph::empty(3).unwrap();
        assert!(find_hom(&isolated, &complete(1).unwrap()).is_some());
        assert_eq!(find_hom(&complete(2).unwrap(), &complete(1).unwrap()), None);
        assert!(find_hom(&Graph::empty(0).unwrap(), &Graph::empty(0).unwrap()).is_some());
        assert_eq!(find_hom(&Graph::empty(1).unwrap(), &Graph::empty(0).unwrap()), None);
    }

    #[test]
    fn colourings() {
        let c5 = cycle(5).unwrap();
        assert!(!chromatic_number_le(&c5, 2));
        assert!(chromatic_number_le(&c5, 3));
        assert!(!chromatic_number_le(&grotzsch(), 3));
        assert!(chromatic_number_le(&grotzsch(), 4));
        assert!(chromatic_number_le(&f_family(4, 3).unwrap(), 3));
        assert!(chromatic_number_le(&Graph::empty(0).unwrap(), 0));
        assert!(!chromatic_number_le(&Graph::empty(1).unwrap(), 0));
    }

    #[test]
    fn embeddings() {
        let f32 = f_family(3, 2).unwrap();
        let f42 = f_family(4, 2).unwrap();
        let e = find_embedding(&f32, &f42, &mut Budget::unlimited()).unwrap().unwrap();
        assert!(e.validate(&f32, &f42));
        let mut seen = e.map.clone();
        seen.sort();
        seen.dedup();
        assert_eq!(seen.len(), f32.n());
        assert_eq!(find_hom(&f42, &f32), None);
    }

    #[test]
    fn composition() {
        let c9 = cycle(9).unwrap();
        let c7 = cycle(7).unwrap();
        let c5 = cycle(5).unwrap();
        let a = find_hom(&c9, &c7).unwrap();
        let b = find_hom(&c7, &c5).unwrap();
        assert!(a.then(&b).unwrap().validate(&c9, &c5));
    }

    #[test]
    fn budget() {
        let m8 = mobius_ladder(8).unwrap();
        assert_eq!(
            find_hom_bounded(&m8, &cycle(5).unwrap(), &mut Budget::new(0)),
            Err(HomError::SearchBudgetExceeded(0))
        );
    }
}
