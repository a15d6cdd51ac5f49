use crate::budget::Budget;
use crate::graph::{bits, mask_of, Graph, VertexSet};

use super::solver::{Mode, Solver};
use super::HomError;

/// A partition of `V(G)` into classes `A_0..A_{m-1}` indexed by the
/// vertices of a base graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlowupDecomposition {
    pub classes: Vec<Vec<usize>>,
    pub base: Graph,
}

impl BlowupDecomposition {
    /// Builds the decomposition whose class `i` is the preimage of `i`.
    pub fn from_class_map(class_of: &[usize], base: Graph) -> BlowupDecomposition {
        let mut classes = vec![Vec::new(); base.n()];
        for (v, &c) in class_of.iter().enumerate() {
            if let Some(class) = classes.get_mut(c) {
                class.push(v);
            }
        }
        BlowupDecomposition { classes, base }
    }

    /// `class_of[v]`, or `None` if some vertex of `g` is in no class.
    pub fn class_map(&self, n: usize) -> Option<Vec<usize>> {
        let mut out = vec![usize::MAX; n];
        for (i, class) in self.classes.iter().enumerate() {
            for &v in class {
                *out.get_mut(v)? = i;
            }
        }
        out.iter().all(|&c| c != usize::MAX).then_some(out)
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }

    /// Whether `g` is exactly the blow-up described: the classes partition
    /// `V(g)` into nonempty independent sets, edges run only between classes
    /// adjacent in the base, and those pairs of classes are completely
    /// joined.
    pub fn validate(&self, g: &Graph) -> bool {
        if self.classes.len() != self.base.n() || self.classes.iter().any(Vec::is_empty) {
            return false;
        }
        let mut masks: Vec<VertexSet> = Vec::with_capacity(self.classes.len());
        let mut covered: VertexSet = 0;
        for class in &self.classes {
            if class.iter().any(|&v| v >= g.n()) {
                return false;
            }
            let m = mask_of(class.iter().copied());
            if m.count_ones() as usize != class.len() || m & covered != 0 {
                return false;
            }
            covered |= m;
            masks.push(m);
        }
        if covered != g.all_vertices() {
            return false;
        }
        (0..masks.len()).all(|i| {
            let expected = bits(self.base.neighbours_mask(i)).fold(0, |m, j| m | masks[j]);
            bits(masks[i]).all(|v| g.neighbours_mask(v) == expected)
        })
    }
}

/// Finds a decomposition of `g` as a blow-up of `h`, if there is one.
pub fn is_blowup_of(g: &Graph, h: &Graph, budget: &mut Budget) -> Result<Option<BlowupDecomposition>, HomError> {
    let found = Solver::new(g, h, Mode::ExactSurjective).solve(budget)?;
    Ok(found.map(|map| {
        let d = BlowupDecomposition::from_class_map(&map, h.clone());
        debug_assert!(d.validate(g));
        d
    }))
}
