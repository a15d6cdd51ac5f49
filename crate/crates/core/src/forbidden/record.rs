//! JSON records for detected witnesses: `{"kind", "vertices", "paths",
//! "lengths"}` in that order.
//!
//! | kind          | vertices            | paths                                  | lengths            |
//! |---------------|---------------------|----------------------------------------|--------------------|
//! | `phi`         | `a0..a5`            | empty                                  | `[6]`              |
//! | `phi_prime`   | the `4k`-cycle      | the three diagonals as 2-vertex paths  | `[4k]`             |
//! | `tetrahedron` | `z, a, b, c`        | spokes to `a, b, c`, arcs `ab, bc, ca` | `p, q, r, x, y, w` |

use serde::{Deserialize, Serialize};

use super::{PhiPrimeWitness, PhiWitness, TetraWitness};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessRecord {
    pub kind: String,
    pub vertices: Vec<usize>,
    pub paths: Vec<Vec<usize>>,
    pub lengths: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Phi(PhiWitness),
    PhiPrime(PhiPrimeWitness),
    Tetrahedron(TetraWitness),
}

impl Witness {
    pub fn kind(&self) -> &'static str {
        match self {
            Witness::Phi(_) => "phi",
            Witness::PhiPrime(_) => "phi_prime",
            Witness::Tetrahedron(_) => "tetrahedron",
        }
    }

    pub fn validate(&self, g: &crate::Graph, k: usize) -> bool {
        match self {
            Witness::Phi(w) => w.validate(g),
            Witness::PhiPrime(w) => w.validate(g, k),
            Witness::Tetrahedron(w) => w.validate(g, k),
        }
    }

    pub fn to_record(&self) -> WitnessRecord {
        let kind = self.kind().to_string();
        match self {
            Witness::Phi(w) => WitnessRecord {
                kind,
                vertices: w.a.to_vec(),
                paths: Vec::new(),
                lengths: vec![6],
            },
            Witness::PhiPrime(w) => WitnessRecord {
                kind,
                vertices: w.cycle.clone(),
                paths: w.diagonals.iter().map(|&(u, v)| vec![u, v]).collect(),
                lengths: vec![w.cycle.len()],
            },
            Witness::Tetrahedron(t) => WitnessRecord {
                kind,
                vertices: vec![t.center, t.branches[0], t.branches[1], t.branches[2]],
                paths: t.spokes.iter().chain(&t.arcs).cloned().collect(),
                lengths: t.spoke_lengths().into_iter().chain(t.arc_lengths()).collect(),
            },
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_record()).expect("records always serialize")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RecordError {
    #[error("malformed witness JSON: {0}")]
    Json(String),

    #[error("inconsistent {kind} record: {msg}")]
    Shape { kind: String, msg: &'static str },
}

impl WitnessRecord {
    pub fn from_json(text: &str) -> Result<WitnessRecord, RecordError> {
        serde_json::from_str(text).map_err(|e| RecordError::Json(e.to_string()))
    }

    /// Rebuilds the typed witness. Only the shape is checked here; use
    /// [`Witness::validate`] against a graph for the rest.
    pub fn to_witness(&self) -> Result<Witness, RecordError> {
        let shape = |msg| RecordError::Shape { kind: self.kind.clone(), msg };
        match self.kind.as_str() {
            "phi" => {
                let a: [usize; 6] = self.vertices[..].try_into().map_err(|_| shape("needs six vertices"))?;
                Ok(Witness::Phi(PhiWitness { a }))
            }
            "phi_prime" => {
                let diagonals: Vec<(usize, usize)> = self
                    .paths
                    .iter()
                    .map(|p| match p[..] {
                        [u, v] => Ok((u, v)),
                        _ => Err(shape("diagonals are vertex pairs")),
                    })
                    .collect::<Result<_, _>>()?;
                let diagonals: [(usize, usize); 3] =
                    diagonals.try_into().map_err(|_| shape("needs three diagonals"))?;
                Ok(Witness::PhiPrime(PhiPrimeWitness {
                    cycle: self.vertices.clone(),
                    diagonals,
                }))
            }
            "tetrahedron" => {
                let [center, a, b, c]: [usize; 4] =
                    self.vertices[..].try_into().map_err(|_| shape("needs center and three branches"))?;
                if self.paths.len() != 6 {
                    return Err(shape("needs three spokes and three arcs"));
                }
                let p = &self.paths;
                Ok(Witness::Tetrahedron(TetraWitness {
                    center,
                    branches: [a, b, c],
                    spokes: [p[0].clone(), p[1].clone(), p[2].clone()],
                    arcs: [p[3].clone(), p[4].clone(), p[5].clone()],
                }))
            }
            _ => Err(shape("unknown kind")),
        }
    }
}
