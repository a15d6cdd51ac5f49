//! Generators for the fixed graph families used as witnesses.
//!
//! Labelling conventions (fixed so serialized fixtures are stable):
//!
//! * cycles, Möbius ladders and `F(l, k)` list the underlying cycle as
//!   `0, 1, …, r-1`, chords are added on top;
//! * blow-ups place the class of base vertex `u` in a consecutive block,
//!   blocks ordered by `u`;
//! * the Grötzsch graph is the Mycielskian of `C5`: `0..5` is the cycle,
//!   `5 + i` is the shadow of `i`, and `10` is the hub.

use thiserror::Error;

use crate::graph::{full_mask, Graph, GraphError, VertexSet, MAX_VERTICES};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum GenError {
    #[error("parameter {name} = {value} is below the minimum {min}")]
    ParamTooSmall {
        name: &'static str,
        value: usize,
        min: usize,
    },

    #[error("parameter {name} = {value} must be even")]
    OddParam { name: &'static str, value: usize },

    #[error("{sizes} class sizes given for a base graph on {base} vertices")]
    SizeMismatch { sizes: usize, base: usize },

    #[error("class of base vertex {0} is empty")]
    ZeroClass(usize),

    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn at_least(name: &'static str, value: usize, min: usize) -> Result<(), GenError> {
    if value < min {
        Err(GenError::ParamTooSmall { name, value, min })
    } else {
        Ok(())
    }
}

/// Describes one generated graph; `build` produces it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GeneratorSpec {
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    MobiusLadder(usize),
    FFamily { l: usize, k: usize },
    Blowup { base: Box<GeneratorSpec>, sizes: Vec<usize> },
    Grotzsch,
}

impl GeneratorSpec {
    pub fn build(&self) -> Result<Graph, GenError> {
        match self {
            GeneratorSpec::Cycle(r) => cycle(*r),
            GeneratorSpec::Complete(r) => complete(*r),
            GeneratorSpec::CompleteBipartite(a, b) => complete_bipartite(*a, *b),
            GeneratorSpec::MobiusLadder(r) => mobius_ladder(*r),
            GeneratorSpec::FFamily { l, k } => f_family(*l, *k),
            GeneratorSpec::Blowup { base, sizes } => Ok(blowup(&base.build()?, sizes)?.graph),
            GeneratorSpec::Grotzsch => Ok(grotzsch()),
        }
    }
}

/// Cycle with `r` vertices, edges `{i, i+1 mod r}`.
pub fn cycle(r: usize) -> Result<Graph, GenError> {
    at_least("r", r, 3)?;
    circulant(r, &[1])
}

pub fn complete(r: usize) -> Result<Graph, GenError> {
    let g = Graph::empty(r)?;
    let all = full_mask(r);
    Ok(Graph::from_masks((0..g.n()).map(|v| all & !(1 << v)).collect()))
}

/// `K_{a,b}` with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph, GenError> {
    let g = Graph::empty(a + b)?;
    let left = full_mask(a);
    let right = full_mask(a + b) & !left;
    Ok(Graph::from_masks(
        (0..g.n()).map(|v| if v < a { right } else { left }).collect(),
    ))
}

/// The cycle on `r` vertices with all `r/2` diagonals `{i, i + r/2}`.
pub fn mobius_ladder(r: usize) -> Result<Graph, GenError> {
    if r % 2 == 1 {
        return Err(GenError::OddParam { name: "r", value: r });
    }
    at_least("r", r, 6)?;
    circulant(r, &[1, r / 2])
}

/// `F(l, k)`: a cycle of length `(2k-1)(l-1)+2` plus every chord joining
/// vertices at cycle distance `j(2k-1)+1`, `j = 1..=(l-1)/2`.
///
/// Defined for `l >= 2` and `k >= 2`; the `k = 2` members extend the usual
/// `k >= 3` range so that `F(2,2) = C5` and `F(3,2) = M8`.
pub fn f_family(l: usize, k: usize) -> Result<Graph, GenError> {
    at_least("l", l, 2)?;
    at_least("k", k, 2)?;
    let n = (2 * k - 1) * (l - 1) + 2;
    let mut offsets = vec![1];
    offsets.extend((1..=(l - 1) / 2).map(|j| j * (2 * k - 1) + 1));
    circulant(n, &offsets)
}

fn circulant(n: usize, offsets: &[usize]) -> Result<Graph, GenError> {
    let mut g = Graph::empty(n)?;
    for i in 0..n {
        for &d in offsets {
            let j = (i + d) % n;
            if j != i {
                g.insert_edge(i, j);
            }
        }
    }
    Ok(g)
}

/// A blow-up together with its class map onto the base graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Blowup {
    pub graph: Graph,
    /// `class_of[x]` is the base vertex whose class contains `x`.
    pub class_of: Vec<usize>,
}

/// Replaces base vertex `u` by an independent set of `sizes[u]` vertices and
/// every base edge by a complete bipartite join.
pub fn blowup(base: &Graph, sizes: &[usize]) -> Result<Blowup, GenError> {
    if sizes.len() != base.n() {
        return Err(GenError::SizeMismatch {
            sizes: sizes.len(),
            base: base.n(),
        });
    }
    if let Some(u) = sizes.iter().position(|&s| s == 0) {
        return Err(GenError::ZeroClass(u));
    }
    let total: usize = sizes.iter().sum();
    if total > MAX_VERTICES {
        return Err(GraphError::TooLarge { n: total, max: MAX_VERTICES }.into());
    }
    let class_of: Vec<usize> = sizes
        .iter()
        .enumerate()
        .flat_map(|(u, &s)| std::iter::repeat_n(u, s))
        .collect();
    let mut class_mask: Vec<VertexSet> = vec![0; base.n()];
    for (x, &u) in class_of.iter().enumerate() {
        class_mask[u] |= 1 << x;
    }
    let adj = class_of
        .iter()
        .map(|&u| base.neighbours(u).fold(0, |m, w| m | class_mask[w]))
        .collect();
    Ok(Blowup {
        graph: Graph::from_masks(adj),
        class_of,
    })
}

/// Mycielskian of `C5`: 11 vertices, 20 edges, triangle-free, 4-chromatic.
pub fn grotzsch() -> Graph {
    let mut g = Graph::empty(11).expect("11 vertices fit");
    for i in 0..5 {
        let next = (i + 1) % 5;
        g.insert_edge(i, next);
        g.insert_edge(5 + i, next);
        g.insert_edge(5 + next, i);
        g.insert_edge(5 + i, 10);
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycles() {
        assert_eq!(cycle(5).unwrap().edge_count(), 5);
        assert_eq!(cycle(7).unwrap().edge_count(), 7);
        assert_eq!(cycle(7).unwrap().regular_degree(), Some(2));
        assert_eq!(
            cycle(2),
            Err(GenError::ParamTooSmall { name: "r", value: 2, min: 3 })
        );
    }

    #[test]
    fn mobius_ladders() {
        let m8 = mobius_ladder(8).unwrap();
        assert_eq!(m8.edge_count(), 12);
        assert_eq!(m8.regular_degree(), Some(3));
        assert!(m8.has_edge(0, 4) && m8.has_edge(3, 7));
        let m12 = mobius_ladder(12).unwrap();
        assert_eq!(m12.edge_count(), 18);
        assert_eq!(mobius_ladder(7), Err(GenError::OddParam { name: "r", value: 7 }));
        assert!(matches!(mobius_ladder(4), Err(GenError::ParamTooSmall { .. })));
        for k in 2..=6 {
            let m = mobius_ladder(4 * k).unwrap();
            assert_eq!(m.n(), 4 * k);
            assert_eq!(m.regular_degree(), Some(3));
        }
    }

    #[test]
    fn f_family_shapes() {
        assert_eq!(f_family(2, 3).unwrap(), cycle(7).unwrap());
        // F(4,2): (2*2-1)*(4-1)+2 = 11 vertices, chords at distance 1*3+1 = 4.
        let f = f_family(4, 2).unwrap();
        assert_eq!(f.n(), 11);
        assert_eq!(f.regular_degree(), Some(4));
        assert!(f.has_edge(0, 4) && f.has_edge(0, 7) && !f.has_edge(0, 5));
        for l in 2..=5 {
            for k in 2..=4 {
                let f = f_family(l, k).unwrap();
                assert!(f.is_well_formed());
                assert_eq!(f.n(), (2 * k - 1) * (l - 1) + 2, "F({l},{k})");
                assert_eq!(f.regular_degree(), Some(l), "F({l},{k})");
            }
        }
        assert!(matches!(f_family(1, 3), Err(GenError::ParamTooSmall { name: "l", .. })));
        assert!(matches!(f_family(3, 1), Err(GenError::ParamTooSmall { name: "k", .. })));
    }

    #[test]
    fn blowups() {
        let k2 = complete(2).unwrap();
        let b = blowup(&k2, &[2, 3]).unwrap();
        assert_eq!(b.graph, complete_bipartite(2, 3).unwrap());
        assert_eq!(b.class_of, vec![0, 0, 1, 1, 1]);

        let c5 = cycle(5).unwrap();
        assert_eq!(blowup(&c5, &[1; 5]).unwrap().graph, c5);

        let m8 = mobius_ladder(8).unwrap();
        let b = blowup(&m8, &[2; 8]).unwrap();
        assert_eq!(b.graph.n(), 16);
        assert_eq!(b.graph.regular_degree(), Some(6));

        assert_eq!(blowup(&c5, &[1, 1]), Err(GenError::SizeMismatch { sizes: 2, base: 5 }));
        assert_eq!(blowup(&c5, &[1, 1, 0, 1, 1]), Err(GenError::ZeroClass(2)));
        assert!(matches!(blowup(&c5, &[20; 5]), Err(GenError::Graph(GraphError::TooLarge { .. }))));
    }

    #[test]
    fn blowup_degree_law() {
        let c5 = cycle(5).unwrap();
        let sizes = [3, 1, 4, 1, 5];
        let b = blowup(&c5, &sizes).unwrap();
        for x in 0..b.graph.n() {
            let expect: usize = c5.neighbours(b.class_of[x]).map(|w| sizes[w]).sum();
            assert_eq!(b.graph.degree(x), expect);
        }
    }

    #[test]
    fn grotzsch_counts() {
        let g = grotzsch();
        assert_eq!(g.n(), 11);
        assert_eq!(g.edge_count(), 20);
        assert_eq!(g.degree(10), 5);
    }

    #[test]
    fn spec_builds() {
        let spec = GeneratorSpec::Blowup {
            base: Box::new(GeneratorSpec::Cycle(5)),
            sizes: vec![2; 5],
        };
        assert_eq!(spec.build().unwrap().n(), 10);
        assert_eq!(GeneratorSpec::CompleteBipartite(4, 4).build().unwrap().edge_count(), 16);
        assert_eq!(GeneratorSpec::Grotzsch.build().unwrap(), grotzsch());
    }
}
