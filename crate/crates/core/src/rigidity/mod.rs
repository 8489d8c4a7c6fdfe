//! Generic rigidity of sphere graphs: rigidity matrices over a prime field,
//! Monte Carlo generic rank, stresses and `g_2`.

pub mod modp;

use rand::SeedableRng;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::graph::{alpha_exact, Graph};
use crate::verify::is_pseudomanifold;

pub const DEFAULT_TRIALS: usize = 3;

fn binom2(x: usize) -> usize {
    x * x.saturating_sub(1) / 2
}

/// Rank of the rigidity matrix of a generic embedding of `n` points in
/// `R^d` that are allowed to move freely: `dn - C(d+1, 2)` once `n > d`,
/// and `C(n, 2)` for a simplex.
pub fn trivial_rank_bound(n: usize, d: usize) -> usize {
    if n > d {
        d * n - binom2(d + 1)
    } else {
        binom2(n)
    }
}

/// The `f_1 × dn` rigidity matrix over GF(`p`) for the embedding `coords`
/// (one `d`-vector per vertex). The row of edge `uv` holds `p_u - p_v` in the
/// block of `u` and `p_v - p_u` in the block of `v`.
pub fn rigidity_matrix(g: &Graph, d: usize, coords: &[Vec<u64>], p: u64) -> Result<Vec<Vec<u64>>> {
    let n = g.num_vertices();
    if coords.len() != n {
        return Err(Error::InvalidInput(format!("{} coordinates for {n} vertices", coords.len())));
    }
    if let Some(v) = coords.iter().position(|c| c.len() != d) {
        return Err(Error::InvalidInput(format!("vertex {} has no {d}-dimensional coordinate", g.label(v as u32))));
    }
    Ok(g.edges()
        .map(|(u, v)| {
            let (u, v) = (u as usize, v as usize);
            let mut row = vec![0u64; d * n];
            for t in 0..d {
                let diff = (coords[u][t] % p + p - coords[v][t] % p) % p;
                row[d * u + t] = diff;
                row[d * v + t] = (p - diff) % p;
            }
            row
        })
        .collect())
}

/// Outcome of [`generic_rank`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RankEstimate {
    pub rank: usize,
    pub trials: usize,
    /// Upper bound on the probability that `rank` is below the generic rank.
    pub failure_bound: f64,
}

/// Largest rigidity-matrix rank over `trials` random embeddings, each with
/// coordinates uniform in `[1, p)` for a fresh random prime `p ≥ 2^61`.
///
/// Some `r × r` minor of the generic matrix, `r` the generic rank, is a
/// nonzero polynomial of degree `r`; by Schwartz–Zippel a trial misses it with
/// probability at most `r/(p-1)`, so all trials miss with probability at most
/// the product. The chance that `p` divides every coefficient of that minor
/// is ignored.
pub fn generic_rank(g: &Graph, d: usize, seed: u64, trials: usize) -> RankEstimate {
    assert!(trials >= 1, "generic_rank needs at least one trial");
    let n = g.num_vertices();
    let runs: Vec<(usize, u64)> = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(t as u64);
            let p = modp::random_prime(&mut rng);
            let coords: Vec<Vec<u64>> = (0..n).map(|_| (0..d).map(|_| rng.gen_range(1..p)).collect()).collect();
            let m = rigidity_matrix(g, d, &coords, p).expect("coordinates match the graph");
            (modp::rank(m, d * n, p), p)
        })
        .collect();
    let rank = runs.iter().map(|r| r.0).max().unwrap_or(0);
    let failure_bound = runs.iter().map(|&(_, p)| rank as f64 / (p - 1) as f64).product::<f64>();
    debug_assert!(rank <= g.edge_count().min(trivial_rank_bound(n, d)));
    RankEstimate { rank, trials, failure_bound }
}

/// `g_2 = f_1 - d f_0 + C(d+1, 2)` of a pure `(d-1)`-complex.
pub fn g2(k: &Complex, d: usize) -> Result<i64> {
    if !k.is_pure() {
        return Err(Error::NotPure);
    }
    if k.dim() != d as isize - 1 {
        return Err(Error::DimMismatch { expected: d as isize - 1, found: k.dim() });
    }
    let f = k.f_vector();
    Ok(f.edges() as i64 - (d as i64) * f.vertices() as i64 + binom2(d + 1) as i64)
}

/// Whether the graph of `k` is generically `r`-rigid.
pub fn rigidity_probe(k: &Complex, r: usize, seed: u64, trials: usize) -> bool {
    let g = k.skeleton_graph();
    generic_rank(&g, r, seed, trials).rank == trivial_rank_bound(g.num_vertices(), r)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RigidityVerdicts {
    pub generically_d_rigid: bool,
    pub stress_ge_alpha: bool,
    /// Generic rigidity in dimension `probe_r` of the report.
    pub d_plus_1_rigid: bool,
}

/// Edge count against the fixed-dimension bound `f_1 ≥ (d + 0.987/(2d+1)) n`
/// and the conditional bound `f_1 ≥ (d + 1/(2d-2)) n`. The bounds only hold
/// for large `n`, so these are observations.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EdgeBound {
    /// `f_1/n - d`.
    pub excess: f64,
    pub threshold: f64,
    pub conditional_threshold: f64,
    pub meets_threshold: bool,
    pub meets_conditional: bool,
}

impl EdgeBound {
    pub fn new(n: usize, f1: usize, d: usize) -> Self {
        let (n, f1, d) = (n as u128, f1 as u128, d as u128);
        EdgeBound {
            excess: f1 as f64 / n as f64 - d as f64,
            threshold: 0.987 / (2 * d + 1) as f64,
            conditional_threshold: 1.0 / (2 * d - 2) as f64,
            // f1 ≥ (d + 987/(1000(2d+1))) n, cleared of denominators.
            meets_threshold: 1000 * (2 * d + 1) * f1 >= (1000 * d * (2 * d + 1) + 987) * n,
            meets_conditional: (2 * d - 2) * f1 >= (d * (2 * d - 2) + 1) * n,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RigidityReport {
    pub d: usize,
    pub n: usize,
    pub f1: usize,
    pub rank: usize,
    pub expected_rank: usize,
    pub stress_dim: usize,
    pub g2: i64,
    pub alpha_witness: usize,
    pub failure_bound: f64,
    pub edge_bound: EdgeBound,
    pub probe_r: usize,
    pub verdicts: RigidityVerdicts,
}

/// Rank, stress dimension and `g_2` of the graph of a pure `(d-1)`-complex,
/// with exact `α` and a generic `probe_r`-rigidity test (`d+1` by default).
pub fn rigidity_report(k: &Complex, d: usize, probe_r: Option<usize>, seed: u64, trials: usize) -> Result<RigidityReport> {
    let g2v = g2(k, d)?;
    let g = k.skeleton_graph();
    let (n, f1) = (g.num_vertices(), g.edge_count());
    let est = generic_rank(&g, d, seed, trials);
    let expected_rank = trivial_rank_bound(n, d);
    let alpha = alpha_exact(&g, None)?.size;
    let r = probe_r.unwrap_or(d + 1);
    let probe = generic_rank(&g, r, seed.wrapping_add(1), trials).rank == trivial_rank_bound(n, r);
    Ok(RigidityReport {
        d,
        n,
        f1,
        rank: est.rank,
        expected_rank,
        stress_dim: f1 - est.rank,
        g2: g2v,
        alpha_witness: alpha,
        failure_bound: est.failure_bound,
        edge_bound: EdgeBound::new(n, f1, d),
        probe_r: r,
        verdicts: RigidityVerdicts {
            generically_d_rigid: est.rank == expected_rank,
            stress_ge_alpha: g2v >= alpha as i64,
            d_plus_1_rigid: probe,
        },
    })
}

/// Checks the stress count `g_2 ≥ α` on a flag `(d-1)`-sphere, `d ≥ 4`.
///
/// Each vertex of a stable set carries a stress supported on its closed
/// star, and these stresses are independent; generic `d`-rigidity makes the
/// stress space `g_2`-dimensional. The sphere precondition is checked only up
/// to flagness and the pseudomanifold property.
pub fn stress_inequality_check(k: &Complex, d: usize, seed: u64, trials: usize) -> Result<RigidityReport> {
    if d < 4 {
        return Err(Error::PreconditionFailed(format!("stress count needs d >= 4, got {d}")));
    }
    g2(k, d)?;
    if !k.is_flag() {
        return Err(Error::PreconditionFailed("complex is not flag".into()));
    }
    if let Err(why) = is_pseudomanifold(k) {
        return Err(Error::PreconditionFailed(why.to_string()));
    }
    rigidity_report(k, d, None, seed, trials)
}
