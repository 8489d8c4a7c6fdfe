//! Bistellar flips on closed combinatorial manifolds, driven by a simple
//! annealing loop that tries to reach the boundary of a simplex.
//!
//! A move is a pair `(A, B)` with `|A| + |B| = dim + 2`, `A` a face whose
//! link is the boundary of the simplex `B`, and `B` not a face. It replaces
//! the facets `A * ∂B` by `∂A * B`; the facet count changes by `|A| - |B|`.
//! Moves with `|A| = 1` delete a vertex. Vertex insertions are never used.

use std::collections::{BTreeSet, HashMap, HashSet};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::is_pseudomanifold;
use crate::complex::{is_subset, Complex, Vertex};
use crate::error::{Error, Result};

pub const DEFAULT_MAX_ROUNDS: usize = 10_000;

/// One applied flip, in vertex ids of the input complex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Flip {
    pub removed: Vec<Vertex>,
    pub inserted: Vec<Vertex>,
}

#[derive(Clone, Debug)]
pub struct Reduction {
    /// The simplex boundary that was reached.
    pub complex: Complex,
    pub trace: Vec<Flip>,
}

/// Flips `k` down to the boundary of a `(dim+1)`-simplex.
///
/// Improving moves (those with `|A| < |B|`, vertex deletions first) are taken
/// greedily in random order. When none is left the loop heats up by applying
/// a number of random non-improving moves; the number grows while the
/// `(f_0, f_dim)` minimum stalls and resets when it improves. Every applied
/// flip counts as one round. Fully determined by `seed`.
pub fn bistellar_reduce(k: &Complex, max_rounds: usize, seed: u64) -> Result<Reduction> {
    if let Err(why) = is_pseudomanifold(k) {
        return Err(Error::PreconditionFailed(why.to_string()));
    }
    let mut state = FlipState::new(k);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut trace = Vec::new();
    let mut best = state.key();
    let mut heat = 1usize;
    const MAX_HEAT: usize = 12;

    while trace.len() < max_rounds {
        if state.is_simplex_boundary() {
            return Ok(Reduction {
                complex: state.to_complex(k),
                trace,
            });
        }
        let moves = state.moves();
        let removals: Vec<&Move> = moves.iter().filter(|m| m.a.len() == 1).collect();
        let improving: Vec<&Move> = moves.iter().filter(|m| m.a.len() < m.b.len()).collect();
        let pick = if !removals.is_empty() {
            Some(*removals.choose(&mut rng).unwrap())
        } else {
            improving.choose(&mut rng).copied()
        };
        if let Some(m) = pick {
            trace.push(state.apply(m));
            continue;
        }

        let key = state.key();
        if key < best {
            best = key;
            heat = 1;
        } else {
            heat = (heat + 1).min(MAX_HEAT);
        }
        if moves.is_empty() {
            break;
        }
        let steps = rng.gen_range(1..=heat);
        for _ in 0..steps {
            let moves = state.moves();
            let Some(m) = moves.choose(&mut rng) else { break };
            trace.push(state.apply(m));
            if trace.len() >= max_rounds {
                break;
            }
        }
    }
    Err(Error::Inconclusive { rounds: trace.len() })
}

#[derive(Clone, Debug)]
struct Move {
    a: Vec<Vertex>,
    b: Vec<Vertex>,
    facets: Vec<usize>,
}

struct FlipState {
    dim: usize,
    slots: Vec<Option<Vec<Vertex>>>,
    free: Vec<usize>,
    lookup: HashMap<Vec<Vertex>, usize>,
    by_vertex: HashMap<Vertex, BTreeSet<usize>>,
}

impl FlipState {
    fn new(k: &Complex) -> Self {
        let mut s = FlipState {
            dim: k.dim() as usize,
            slots: Vec::new(),
            free: Vec::new(),
            lookup: HashMap::new(),
            by_vertex: HashMap::new(),
        };
        for f in k.facets() {
            s.insert(f.clone());
        }
        s
    }

    fn insert(&mut self, f: Vec<Vertex>) {
        let slot = match self.free.pop() {
            Some(i) => i,
            None => {
                self.slots.push(None);
                self.slots.len() - 1
            }
        };
        for &v in &f {
            self.by_vertex.entry(v).or_default().insert(slot);
        }
        self.lookup.insert(f.clone(), slot);
        self.slots[slot] = Some(f);
    }

    fn remove(&mut self, slot: usize) {
        let f = self.slots[slot].take().expect("live facet");
        for v in &f {
            let set = self.by_vertex.get_mut(v).unwrap();
            set.remove(&slot);
            if set.is_empty() {
                self.by_vertex.remove(v);
            }
        }
        self.lookup.remove(&f);
        self.free.push(slot);
    }

    fn num_facets(&self) -> usize {
        self.lookup.len()
    }

    fn key(&self) -> (usize, usize) {
        (self.by_vertex.len(), self.num_facets())
    }

    fn is_simplex_boundary(&self) -> bool {
        self.by_vertex.len() == self.dim + 2 && self.num_facets() == self.dim + 2
    }

    fn containing(&self, face: &[Vertex]) -> Vec<usize> {
        let Some(smallest) = face
            .iter()
            .filter_map(|v| self.by_vertex.get(v))
            .min_by_key(|s| s.len())
        else {
            return Vec::new();
        };
        if face.iter().any(|v| !self.by_vertex.contains_key(v)) {
            return Vec::new();
        }
        smallest
            .iter()
            .copied()
            .filter(|&i| is_subset(face, self.slots[i].as_ref().unwrap()))
            .collect()
    }

    fn is_face(&self, face: &[Vertex]) -> bool {
        !self.containing(face).is_empty()
    }

    /// All valid moves, in a deterministic order.
    fn moves(&self) -> Vec<Move> {
        let mut faces: HashSet<Vec<Vertex>> = HashSet::new();
        for f in self.slots.iter().flatten() {
            for mask in 1u32..(1u32 << f.len()) - 1 {
                let face: Vec<Vertex> = f
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &v)| v)
                    .collect();
                faces.insert(face);
            }
        }
        let mut faces: Vec<Vec<Vertex>> = faces.into_iter().collect();
        faces.sort_unstable();

        let mut out = Vec::new();
        for a in faces {
            let bsize = self.dim + 2 - a.len();
            let facets = self.containing(&a);
            if facets.len() != bsize {
                continue;
            }
            let b: BTreeSet<Vertex> = facets
                .iter()
                .flat_map(|&i| self.slots[i].as_ref().unwrap().iter().copied())
                .filter(|v| a.binary_search(v).is_err())
                .collect();
            if b.len() != bsize {
                continue;
            }
            let b: Vec<Vertex> = b.into_iter().collect();
            if self.is_face(&b) {
                continue;
            }
            out.push(Move { a, b, facets });
        }
        out
    }

    fn apply(&mut self, m: &Move) -> Flip {
        for &slot in &m.facets {
            self.remove(slot);
        }
        for &skip in &m.a {
            let mut f: Vec<Vertex> = m.a.iter().copied().filter(|&v| v != skip).collect();
            f.extend_from_slice(&m.b);
            f.sort_unstable();
            self.insert(f);
        }
        Flip {
            removed: m.a.clone(),
            inserted: m.b.clone(),
        }
    }

    fn to_complex(&self, k: &Complex) -> Complex {
        let facets: Vec<Vec<Vertex>> = self.slots.iter().flatten().cloned().collect();
        Complex::from_parts(facets, k.labels().to_vec())
    }
}
