//! Stable sets: exact branch-and-bound, the greedy minimum-degree witness and
//! the link-recursive witness for flag spheres of dimension at least 3.

use std::time::{Duration, Instant};

use fixedbitset::FixedBitSet;
use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use super::Graph;
use crate::complex::{Complex, Vertex};
use crate::error::{Error, Result};
use crate::verify::{verify_sphere_with, Verdict, VerifyOptions};

pub const DEFAULT_VERTEX_CAP: usize = 2000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StableMethod {
    Exact,
    TuranGreedy,
    LinkRecursive,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StableSetWitness {
    /// Sorted vertex ids.
    pub vertices: Vec<Vertex>,
    pub method: StableMethod,
    pub size: usize,
}

/// Serialized witness, vertices given by label.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessJson {
    pub method: StableMethod,
    pub size: usize,
    pub vertices: Vec<String>,
}

impl StableSetWitness {
    fn new(mut vertices: Vec<Vertex>, method: StableMethod) -> Self {
        vertices.sort_unstable();
        let size = vertices.len();
        StableSetWitness { vertices, method, size }
    }

    pub fn to_json(&self, g: &Graph) -> WitnessJson {
        WitnessJson {
            method: self.method,
            size: self.size,
            vertices: self.vertices.iter().map(|&v| g.label(v).to_string()).collect(),
        }
    }
}

/// Maximum stable set by branch and bound.
///
/// Candidates are greedily partitioned into cliques (a sequential colouring of
/// the complement); the number of cliques bounds what the candidates can still
/// contribute. Vertices are branched on in reverse colouring order. With a
/// budget, running out of time yields [`Error::Timeout`] carrying the best set
/// found so far.
pub fn alpha_exact(g: &Graph, budget: Option<Duration>) -> Result<StableSetWitness> {
    let n = g.num_vertices();
    if n > DEFAULT_VERTEX_CAP {
        return Err(Error::InvalidInput(format!(
            "{n} vertices exceeds the exact-solver cap of {DEFAULT_VERTEX_CAP}"
        )));
    }
    let incumbent = greedy_min_degree(g, None);
    let mut solver = Solver {
        adj: (0..n as Vertex).map(|v| g.neighbor_set(v).clone()).collect(),
        best: incumbent,
        current: Vec::new(),
        nodes: 0,
        deadline: budget.map(|b| Instant::now() + b),
        timed_out: false,
    };
    let mut all = FixedBitSet::with_capacity(n);
    all.insert_range(..);
    solver.expand(all);
    let witness = StableSetWitness::new(solver.best, StableMethod::Exact);
    if solver.timed_out {
        return Err(Error::Timeout { best: witness });
    }
    Ok(witness)
}

/// `α(G)` without a time budget.
pub fn alpha(g: &Graph) -> usize {
    alpha_exact(g, None).expect("unbounded exact solve").size
}

struct Solver {
    adj: Vec<FixedBitSet>,
    best: Vec<Vertex>,
    current: Vec<Vertex>,
    nodes: u64,
    deadline: Option<Instant>,
    timed_out: bool,
}

impl Solver {
    fn expand(&mut self, mut cand: FixedBitSet) {
        self.nodes += 1;
        if self.nodes % 4096 == 0 {
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    self.timed_out = true;
                }
            }
        }
        if self.timed_out {
            return;
        }

        // Greedy clique cover of the candidates; order[i] is covered by the
        // clique numbered bound[i].
        let mut order = Vec::with_capacity(cand.count_ones(..));
        let mut bound = Vec::with_capacity(order.capacity());
        let mut rest = cand.clone();
        let mut k = 0;
        while let Some(first) = rest.ones().next() {
            k += 1;
            let mut clique_cand = rest.clone();
            let mut v = first;
            loop {
                rest.set(v, false);
                clique_cand.set(v, false);
                clique_cand.intersect_with(&self.adj[v]);
                order.push(v);
                bound.push(k);
                match clique_cand.ones().next() {
                    Some(u) => v = u,
                    None => break,
                }
            }
        }

        for i in (0..order.len()).rev() {
            if self.current.len() + bound[i] <= self.best.len() {
                return;
            }
            let v = order[i];
            self.current.push(v as Vertex);
            let mut next = cand.clone();
            next.difference_with(&self.adj[v]);
            next.set(v, false);
            if next.is_clear() {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
            } else {
                self.expand(next);
            }
            self.current.pop();
            cand.set(v, false);
            if self.timed_out {
                return;
            }
        }
    }
}

/// Repeatedly takes a vertex of minimum remaining degree (smallest id on
/// ties) and deletes its closed neighbourhood. Restricted to `within` when
/// given.
pub fn greedy_min_degree(g: &Graph, within: Option<&FixedBitSet>) -> Vec<Vertex> {
    let n = g.num_vertices();
    let mut alive = match within {
        Some(w) => w.clone(),
        None => {
            let mut a = FixedBitSet::with_capacity(n);
            a.insert_range(..);
            a
        }
    };
    let mut chosen = Vec::new();
    loop {
        let pick = alive
            .ones()
            .map(|v| (g.neighbor_set(v as Vertex).intersection(&alive).count(), v))
            .min();
        let Some((_, v)) = pick else { break };
        chosen.push(v as Vertex);
        alive.set(v, false);
        alive.difference_with(g.neighbor_set(v as Vertex));
    }
    chosen.sort_unstable();
    chosen
}

/// Minimum-degree greedy stable set; its size is at least `n / (d̄ + 1)`.
pub fn turan_stable(g: &Graph) -> StableSetWitness {
    StableSetWitness::new(greedy_min_degree(g, None), StableMethod::TuranGreedy)
}

/// `⌈n / (d̄ + 1)⌉ = ⌈n² / (2m + n)⌉`.
pub fn turan_bound(g: &Graph) -> usize {
    let n = g.num_vertices();
    if n == 0 {
        return 0;
    }
    let m = g.edge_count();
    (n * n).div_ceil(2 * m + n)
}

/// Stable set in the graph of a flag `(d-1)`-sphere built by recursion on
/// vertex links. Guarantees size `≥ ¼·n^{1/(d-2)}`, checked exactly as
/// `(4·size)^{d-2} ≥ n` before returning.
///
/// If some vertex link has at least `n^{(d-3)/(d-2)}` vertices the search
/// descends into the largest such link; otherwise vertices are picked greedily
/// (minimum degree first) deleting closed neighbourhoods. At `d = 4` links are
/// 2-spheres and are solved exactly, standing in for the four-colour bound
/// `⌈|V|/4⌉`, which is asserted.
///
/// The input must be flag, pure of dimension `d-1`, and not rejected by
/// [`crate::verify::verify_sphere`] (a homology sphere is accepted).
pub fn link_recursive_stable(k: &Complex, d: usize) -> Result<StableSetWitness> {
    if d < 4 {
        return Err(Error::PreconditionFailed(format!("need d >= 4, got {d}")));
    }
    if k.dim() != d as isize - 1 || !k.is_pure() {
        return Err(Error::PreconditionFailed(format!(
            "expected a pure {}-dimensional complex, got dimension {}",
            d - 1,
            k.dim()
        )));
    }
    if !k.is_flag() {
        return Err(Error::PreconditionFailed("complex is not flag".into()));
    }
    let cert = verify_sphere_with(k, &VerifyOptions::homology_only());
    if cert.verdict == Verdict::NotSphere {
        return Err(Error::PreconditionFailed(format!("not a sphere: {}", cert.reason)));
    }
    let set = descend(k, d)?;
    let g = k.skeleton_graph();
    let n = k.num_vertices();
    if !g.is_stable(&set)? {
        return Err(Error::GuaranteeViolated("link-recursive set is not stable".into()));
    }
    if !meets_root_bound(set.len(), n, d - 2) {
        return Err(Error::GuaranteeViolated(format!(
            "size {} below n^(1/{})/4 for n = {n}",
            set.len(),
            d - 2
        )));
    }
    Ok(StableSetWitness::new(set, StableMethod::LinkRecursive))
}

/// `(4·size)^e ≥ n`, i.e. `size ≥ ¼·n^{1/e}`, in exact arithmetic.
pub fn meets_root_bound(size: usize, n: usize, e: usize) -> bool {
    BigUint::from(4 * size).pow(e as u32) >= BigUint::from(n)
}

fn descend(k: &Complex, d: usize) -> Result<Vec<Vertex>> {
    let n = k.num_vertices();
    let mut big: Option<(usize, Vertex, Complex)> = None;
    for v in 0..n as Vertex {
        let lk = k.link(&[v])?;
        let m = lk.num_vertices();
        // m ≥ n^{(d-3)/(d-2)}  ⟺  m^{d-2} ≥ n^{d-3}
        let large = BigUint::from(m).pow(d as u32 - 2) >= BigUint::from(n).pow(d as u32 - 3);
        if large && big.as_ref().map_or(true, |(bm, _, _)| m > *bm) {
            big = Some((m, v, lk));
        }
    }

    match big {
        Some((m, _, lk)) => {
            let inner = if d == 4 {
                let w = alpha_exact(&lk.skeleton_graph(), None)?;
                if 4 * w.size < m {
                    return Err(Error::GuaranteeViolated(format!(
                        "planar link on {m} vertices has stable set of only {}",
                        w.size
                    )));
                }
                w.vertices
            } else {
                descend(&lk, d - 1)?
            };
            Ok(inner
                .into_iter()
                .map(|u| k.vertex_id(lk.label(u)).expect("link vertex belongs to complex"))
                .collect())
        }
        None => Ok(greedy_min_degree(&k.skeleton_graph(), None)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let mut g = Graph::with_vertices(n);
        for i in 0..n {
            g.add_edge(i as Vertex, ((i + 1) % n) as Vertex);
        }
        g
    }

    /// Exhaustive maximum over all subsets.
    fn brute_alpha(g: &Graph) -> usize {
        let n = g.num_vertices();
        assert!(n <= 20);
        (0u32..(1 << n))
            .filter(|mask| {
                g.edges()
                    .all(|(u, v)| mask >> u & 1 == 0 || mask >> v & 1 == 0)
            })
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap()
    }

    #[test]
    fn edgeless() {
        let g = Graph::with_vertices(5);
        let w = alpha_exact(&g, None).unwrap();
        assert_eq!(w.size, 5);
        assert_eq!(turan_stable(&Graph::with_vertices(4)).size, 4);
    }

    #[test]
    fn cycles_match_brute_force() {
        for n in 3..12 {
            let g = cycle(n);
            assert_eq!(alpha(&g), brute_alpha(&g));
            assert_eq!(alpha(&g), n / 2);
        }
    }

    #[test]
    fn petersen() {
        let mut g = Graph::with_vertices(10);
        for i in 0..5u32 {
            g.add_edge(i, (i + 1) % 5);
            g.add_edge(i, i + 5);
            g.add_edge(5 + i, 5 + (i + 2) % 5);
        }
        let w = alpha_exact(&g, None).unwrap();
        assert_eq!(w.size, 4);
        assert!(g.is_stable(&w.vertices).unwrap());
    }

    #[test]
    fn timeout_carries_incumbent() {
        // Sparse random-ish graph large enough not to finish instantly.
        let n = 400;
        let mut g = Graph::with_vertices(n);
        let mut x: u64 = 12345;
        for u in 0..n as Vertex {
            for _ in 0..3 {
                x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                let v = (x >> 33) as usize % n;
                if v as Vertex != u {
                    g.add_edge(u, v as Vertex);
                }
            }
        }
        match alpha_exact(&g, Some(Duration::from_millis(1))) {
            Err(Error::Timeout { best }) => {
                assert!(g.is_stable(&best.vertices).unwrap());
                assert!(best.size >= turan_bound(&g));
            }
            Ok(w) => assert!(g.is_stable(&w.vertices).unwrap()),
            Err(e) => panic!("unexpected {e}"),
        }
    }

    #[test]
    fn cap_enforced() {
        let g = Graph::with_vertices(DEFAULT_VERTEX_CAP + 1);
        assert!(matches!(alpha_exact(&g, None), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn root_bound_is_exact() {
        // ¼·16^{1/2} = 1
        assert!(meets_root_bound(1, 16, 2));
        assert!(!meets_root_bound(1, 17, 2));
        // ¼·64^{1/3} = 1
        assert!(meets_root_bound(1, 64, 3));
        assert!(!meets_root_bound(1, 65, 3));
    }
}
