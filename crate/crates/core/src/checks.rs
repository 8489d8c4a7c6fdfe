//! End-to-end criteria: each function rebuilds its instances, recomputes the
//! claimed quantities and reports pass/fail with a one-line summary.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::{stable_set_counting_check, witness_spec};
use crate::complex::{Complex, Vertex};
use crate::constructions::*;
use crate::error::{Error, Result};
use crate::graph::{alpha_exact, link_recursive_stable, meets_root_bound, Graph};
use crate::rigidity::{generic_rank, rigidity_probe, stress_inequality_check, trivial_rank_bound};
use crate::verify::{verify_sphere, Verdict};

/// Largest accepted Monte Carlo failure probability per rigidity instance.
pub const RANK_FAILURE_TOLERANCE: f64 = 1e-9;
/// Seeds per rigidity instance.
pub const RANK_SEEDS: u64 = 3;
/// Randomised trials per structural invariant.
pub const STRUCTURAL_TRIALS: usize = 100;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionResult {
    pub id: String,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for CriterionResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "[{status}] {:>3} {}: {}", self.id, self.name, self.detail)
    }
}

fn result(id: &str, name: &str, failures: Vec<String>, summary: String) -> CriterionResult {
    let passed = failures.is_empty();
    let detail = if passed {
        summary
    } else {
        let shown: Vec<&str> = failures.iter().take(3).map(String::as_str).collect();
        format!("{} failure(s): {}", failures.len(), shown.join("; "))
    };
    CriterionResult { id: id.into(), name: name.into(), passed, detail }
}

fn spec(s: &str) -> ConstructionSpec {
    s.parse().expect("built-in spec string")
}

fn alpha_of(k: &Complex) -> Result<usize> {
    Ok(alpha_exact(&k.skeleton_graph(), None)?.size)
}

/// Independent stream of the run seed for sub-task `stream`.
fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Stable set numbers `k+1` of `X(d,k,j)` and `k+2` of `Y(d,k,j)` for
/// `d ≤ 6`, `k ≤ 8` and every valid `j`.
pub fn criterion_1() -> CriterionResult {
    let mut specs = Vec::new();
    for d in 2..=6 {
        for k in 1..=8 {
            for j in 0..d {
                specs.push(ConstructionSpec::X { d, k, j });
                if d >= 3 && j >= 1 {
                    specs.push(ConstructionSpec::Y { d, k, j });
                }
            }
        }
    }
    let failures: Vec<String> = specs
        .par_iter()
        .filter_map(|s| {
            let expected = s.expected_alpha().unwrap();
            match s.build().and_then(|k| alpha_of(&k)) {
                Ok(a) if a == expected => None,
                Ok(a) => Some(format!("{s}: alpha {a} != {expected}")),
                Err(e) => Some(format!("{s}: {e}")),
            }
        })
        .collect();
    result("1", "stable set numbers of X and Y", failures, format!("{} instances exact", specs.len()))
}

/// The three drawn instances: vertex counts 14/12/13 and α 4/3/4.
pub fn criterion_2() -> CriterionResult {
    let mut failures = Vec::new();
    for (s, n, a) in [("W:d=3,k=3", 14, 4), ("X:d=3,k=2,j=2", 12, 3), ("Y:d=3,k=2,j=1", 13, 4)] {
        match spec(s).build().and_then(|k| Ok((k.num_vertices(), alpha_of(&k)?))) {
            Ok(got) if got == (n, a) => {}
            Ok(got) => failures.push(format!("{s}: (n, alpha) = {got:?}, expected ({n}, {a})")),
            Err(e) => failures.push(format!("{s}: {e}")),
        }
    }
    result("2", "drawn instances W(3,3), X(3,2,2), Y(3,2,1)", failures, "n = 14/12/13, alpha = 4/3/4".into())
}

fn certified_flag(s: ConstructionSpec) -> std::result::Result<Option<usize>, String> {
    let k = s.build().map_err(|e| format!("{s}: {e}"))?;
    if !k.is_flag() {
        return Err(format!("{s}: not flag"));
    }
    let cert = verify_sphere(&k);
    if cert.verdict != Verdict::CertifiedSphere {
        return Err(format!("{s}: {:?} ({})", cert.verdict, cert.reason));
    }
    Ok(cert.evidence.bistellar_trace_len)
}

/// `cl(W_{3,k})` is a certified flag 2-sphere for `k ≤ 10`.
pub fn criterion_3() -> CriterionResult {
    let failures: Vec<String> = (1..=10)
        .into_par_iter()
        .filter_map(|k| certified_flag(ConstructionSpec::W { d: 3, k }).err())
        .collect();
    result("3", "cl(W_{3,k}) flag 2-spheres", failures, "k = 1..10 certified and flag".into())
}

/// `cl(W'_{4,k})` is a certified flag 3-sphere for `k ≤ 6`, while
/// `cl(W_{4,2})` is not a sphere.
pub fn criterion_4() -> CriterionResult {
    let mut flips = Vec::new();
    let mut failures = Vec::new();
    for k in 1..=6 {
        match certified_flag(ConstructionSpec::W4prime { k }) {
            Ok(Some(len)) => flips.push(len),
            Ok(None) => failures.push(format!("W'_{{4,{k}}}: no bistellar trace")),
            Err(e) => failures.push(e),
        }
    }
    match build_w(4, 2).map(|k| verify_sphere(&k).verdict) {
        Ok(Verdict::NotSphere) => {}
        Ok(v) => failures.push(format!("control cl(W_{{4,2}}) gave {v:?}")),
        Err(e) => failures.push(format!("control: {e}")),
    }
    result(
        "4",
        "cl(W'_{4,k}) flag 3-spheres",
        failures,
        format!("k = 1..6 certified, flips {flips:?}; cl(W_{{4,2}}) NotSphere"),
    )
}

fn coverage(d: usize, ns: std::ops::RangeInclusive<usize>, formula: impl Fn(usize) -> usize + Sync) -> Vec<String> {
    ns.collect::<Vec<_>>()
        .into_par_iter()
        .filter_map(|n| {
            let Some(s) = witness_spec(d, n) else {
                return Some(format!("d={d}, n={n}: no witness"));
            };
            let k = match s.build() {
                Ok(k) => k,
                Err(e) => return Some(format!("{s}: {e}")),
            };
            let want = formula(n);
            match alpha_of(&k) {
                Ok(a) if a == want && k.num_vertices() == n && k.is_flag() && k.dim() == d as isize - 1 => None,
                Ok(a) => Some(format!("{s}: n={}, alpha {a}, want n={n}, alpha {want}", k.num_vertices())),
                Err(e) => Some(format!("{s}: {e}")),
            }
        })
        .collect()
}

/// Every `n ∈ [6,30]` has a flag 2-sphere witness with `α = ⌈n/4⌉`.
pub fn criterion_5_d3() -> CriterionResult {
    let failures = coverage(3, 6..=30, |n| n.div_ceil(4));
    result("5a", "2-sphere witnesses alpha = ceil(n/4)", failures, "n = 6..30".into())
}

/// Every `n ∈ [8,30]` has a flag 3-sphere witness with `α = ⌈(n+1)/6⌉`.
pub fn criterion_5_d4() -> CriterionResult {
    let failures = coverage(4, 8..=30, |n| (n + 1).div_ceil(6));
    result("5b", "3-sphere witnesses alpha = ceil((n+1)/6)", failures, "n = 8..30".into())
}

pub fn criterion_5() -> CriterionResult {
    let (a, b) = (criterion_5_d3(), criterion_5_d4());
    CriterionResult {
        id: "5".into(),
        name: "witness coverage in dimensions 2 and 3".into(),
        passed: a.passed && b.passed,
        detail: format!("{}; {}", a.detail, b.detail),
    }
}

/// Flag spheres with `d ∈ {4,5,6,8}` and at most 60 vertices on which the
/// link-recursive witness is exercised. Dimension 8 is sampled more sparsely
/// because homology of every face link dominates the cost there.
pub fn link_recursive_corpus() -> Vec<ConstructionSpec> {
    let mut out = vec![
        ConstructionSpec::Crosspolytope { d: 4 },
        ConstructionSpec::Crosspolytope { d: 5 },
        ConstructionSpec::Crosspolytope { d: 6 },
        ConstructionSpec::Crosspolytope { d: 8 },
    ];
    out.extend((8..=60).filter_map(|n| best_flag_3sphere(n).ok()));
    out.extend((1..=6).map(|k| ConstructionSpec::W4prime { k }));
    for (d, step) in [(4, 4), (5, 5), (6, 6), (8, 8)] {
        out.extend((2 * d..=60).step_by(step).map(|n| ConstructionSpec::PolygonSuspension { d, n }));
    }
    out.extend((10..=60).step_by(2).map(|n| ConstructionSpec::JoinUpper { d: 5, n }));
    out.extend((12..=60).step_by(4).map(|n| ConstructionSpec::JoinUpper { d: 6, n }));
    out.extend([16, 20, 28, 40, 60].map(|n| ConstructionSpec::JoinUpper { d: 8, n }));
    out
}

/// The link-recursive stable set reaches `¼·n^{1/(d-2)}` on every instance
/// of [`link_recursive_corpus`].
pub fn criterion_6() -> CriterionResult {
    let corpus = link_recursive_corpus();
    let failures: Vec<String> = corpus
        .par_iter()
        .filter_map(|s| {
            let d = s.sphere_dim().unwrap();
            let k = match s.build() {
                Ok(k) => k,
                Err(e) => return Some(format!("{s}: {e}")),
            };
            match link_recursive_stable(&k, d) {
                Ok(w) if meets_root_bound(w.size, k.num_vertices(), d - 2)
                    && k.skeleton_graph().is_stable(&w.vertices).unwrap_or(false) =>
                {
                    None
                }
                Ok(w) => Some(format!("{s}: size {} too small or not stable", w.size)),
                Err(e) => Some(format!("{s}: {e}")),
            }
        })
        .collect();
    result("6", "link-recursive stable sets", failures, format!("{} spheres, d in {{4,5,6,8}}, n <= 60", corpus.len()))
}

/// Flag 3- and 4-spheres with at most 40 vertices.
pub fn rigidity_corpus() -> Vec<ConstructionSpec> {
    let mut out = vec![ConstructionSpec::Crosspolytope { d: 4 }, ConstructionSpec::Crosspolytope { d: 5 }];
    out.extend((8..=40).filter_map(|n| best_flag_3sphere(n).ok()));
    out.extend((1..=6).map(|k| ConstructionSpec::W4prime { k }));
    out.extend((8..=40).map(|n| ConstructionSpec::PolygonSuspension { d: 4, n }));
    out.extend((10..=40).map(|n| ConstructionSpec::PolygonSuspension { d: 5, n }));
    out.extend((10..=40).map(|n| ConstructionSpec::JoinUpper { d: 5, n }));
    out
}

/// Generic `d`-rigidity of the graphs of [`rigidity_corpus`] under
/// [`RANK_SEEDS`] seeds, `stress_dim = g_2` and `g_2 ≥ α`.
pub fn criterion_7(seed: u64) -> CriterionResult {
    let corpus = rigidity_corpus();
    let failures: Vec<String> = corpus
        .par_iter()
        .enumerate()
        .filter_map(|(i, s)| {
            let d = s.sphere_dim().unwrap();
            let k = match s.build() {
                Ok(k) => k,
                Err(e) => return Some(format!("{s}: {e}")),
            };
            let g = k.skeleton_graph();
            let expected = trivial_rank_bound(g.num_vertices(), d);
            let base = seed.wrapping_add((i as u64) << 8);
            let mut failure = 1.0;
            for t in 0..RANK_SEEDS {
                let est = generic_rank(&g, d, base.wrapping_add(t), 1);
                if est.rank != expected {
                    return Some(format!("{s}: rank {} != {expected} (seed {})", est.rank, base + t));
                }
                failure *= est.failure_bound;
            }
            if failure >= RANK_FAILURE_TOLERANCE {
                return Some(format!("{s}: failure bound {failure:e}"));
            }
            match stress_inequality_check(&k, d, base, 1) {
                Ok(r) if r.verdicts.generically_d_rigid
                    && r.stress_dim as i64 == r.g2
                    && r.verdicts.stress_ge_alpha =>
                {
                    None
                }
                Ok(r) => Some(format!("{s}: stress_dim {}, g2 {}, alpha {}", r.stress_dim, r.g2, r.alpha_witness)),
                Err(e) => Some(format!("{s}: {e}")),
            }
        })
        .collect();
    result(
        "7",
        "generic rigidity and g2 >= alpha",
        failures,
        format!("{} spheres, d in {{4,5}}, n <= 40, {RANK_SEEDS} seeds each", corpus.len()),
    )
}

/// The `(d+1)`-rigidity probe fails on some flag 2-sphere and some flag
/// 3-sphere; flag 4-spheres are only recorded.
pub fn criterion_8(seed: u64) -> CriterionResult {
    let probe = |s: &str| {
        let s = spec(s);
        let k = s.build().expect("built-in instance");
        (s, rigidity_probe(&k, s.sphere_dim().unwrap() + 1, seed, RANK_SEEDS as usize))
    };
    let d3: Vec<_> = ["cross:d=3", "W:d=3,k=3", "X:d=3,k=2,j=2"].map(probe).to_vec();
    let d4: Vec<_> = ["cross:d=4", "Wp:k=2", "Xp:k=3,j=1"].map(probe).to_vec();
    let d5: Vec<_> = ["cross:d=5", "joinupper:d=5,n=16", "polysusp:d=5,n=14"].map(probe).to_vec();
    let mut failures = Vec::new();
    if d3.iter().all(|(_, rigid)| *rigid) {
        failures.push("every 2-sphere graph was 4-rigid".into());
    }
    if d4.iter().all(|(_, rigid)| *rigid) {
        failures.push("every 3-sphere graph was 5-rigid".into());
    }
    let show = |v: &[(ConstructionSpec, bool)]| {
        v.iter().map(|(s, r)| format!("{s}={r}")).collect::<Vec<_>>().join(" ")
    };
    result(
        "8",
        "(d+1)-rigidity probe",
        failures,
        format!("d=3: {}; d=4: {}; recorded d=5: {}", show(&d3), show(&d4), show(&d5)),
    )
}

/// Certified flag 2-spheres produced by the constructions.
pub fn two_sphere_corpus() -> Vec<ConstructionSpec> {
    let mut out = vec![ConstructionSpec::Crosspolytope { d: 3 }];
    out.extend((1..=10).map(|k| ConstructionSpec::W { d: 3, k }));
    for k in 1..=6 {
        out.extend((1..=2).map(|j| ConstructionSpec::X { d: 3, k, j }));
        out.extend((1..=2).map(|j| ConstructionSpec::Y { d: 3, k, j }));
    }
    out.extend((6..=24).map(|n| ConstructionSpec::PolygonSuspension { d: 3, n }));
    out
}

/// Suspended polygons attain `⌊(n-2)/2⌋`, and the planar counting
/// `4|I| ≤ |B| ≤ 2n-4` holds on every flag 2-sphere of the corpus.
pub fn criterion_9() -> CriterionResult {
    let mut failures: Vec<String> = (6..=24)
        .into_par_iter()
        .filter_map(|n| {
            let s = ConstructionSpec::PolygonSuspension { d: 3, n };
            match s.build().and_then(|k| alpha_of(&k)) {
                Ok(a) if a == (n - 2) / 2 => None,
                Ok(a) => Some(format!("{s}: alpha {a} != {}", (n - 2) / 2)),
                Err(e) => Some(format!("{s}: {e}")),
            }
        })
        .collect();
    let corpus = two_sphere_corpus();
    failures.extend(corpus.par_iter().filter_map(|s| {
        let k = s.build().ok()?;
        stable_set_counting_check(&k).err().map(|e| format!("{s}: {e}"))
    }).collect::<Vec<_>>());
    result(
        "9",
        "maximum stable sets of flag 2-spheres",
        failures,
        format!("polysusp n = 6..24 exact; counting holds on {} 2-spheres", corpus.len()),
    )
}

/// Facets of the cyclic polytope by testing every `d`-subset for Gale's
/// evenness condition directly.
pub fn gale_facets_brute_force(d: usize, m: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for mask in 0u32..1 << m {
        if mask.count_ones() as usize != d {
            continue;
        }
        let inside = |i: usize| mask >> i & 1 == 1;
        let even = (0..m).filter(|&i| !inside(i)).all(|i| {
            (i + 1..m)
                .filter(|&j| !inside(j))
                .all(|j| (i + 1..j).filter(|&t| inside(t)).count() % 2 == 0)
        });
        if even {
            out.push((0..m).filter(|&i| inside(i)).collect());
        }
    }
    out
}

/// Cyclic 4-polytopes have `m(m-3)/2` facets, and the subdivision vertices
/// of their stellarly subdivided boundaries form a stable set.
pub fn criterion_10() -> CriterionResult {
    let mut failures = Vec::new();
    for m in 6..=12 {
        let mut fast = gale_facets(4, m);
        fast.sort();
        let mut slow = gale_facets_brute_force(4, m);
        slow.sort();
        if fast != slow {
            failures.push(format!("m={m}: enumeration disagrees with brute force"));
        }
        if fast.len() != m * (m - 3) / 2 {
            failures.push(format!("m={m}: {} facets", fast.len()));
        }
        match cyclic_boundary(4, m) {
            Ok(c) if c.facets().len() == fast.len() => {}
            Ok(c) => failures.push(format!("m={m}: complex has {} facets", c.facets().len())),
            Err(e) => failures.push(format!("m={m}: {e}")),
        }
        match neighborly_subdivided(4, m) {
            Ok(c) => {
                let new = subdivision_vertices(&c);
                if new.len() != fast.len() || !c.skeleton_graph().is_stable(&new).unwrap_or(false) {
                    failures.push(format!("m={m}: {} new vertices, stable check failed", new.len()));
                }
            }
            Err(e) => failures.push(format!("m={m}: {e}")),
        }
    }
    result("10", "cyclic polytopes and facet subdivisions", failures, "m = 6..12".into())
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::with_vertices(n);
    for u in 0..n as Vertex {
        for v in u + 1..n as Vertex {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// f-vector of a join from those of its factors:
/// `f_k(K * L) = Σ_{i+j=k-1} f_i(K) f_j(L)` with `f_{-1} = 1`.
pub fn join_f_vector(a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn random_relabel(k: &Complex, rng: &mut ChaCha8Rng) -> Complex {
    let mut perm: Vec<Vertex> = (0..k.num_vertices() as Vertex).collect();
    perm.shuffle(rng);
    let tag: u32 = rng.gen();
    k.permute_ids(&perm).relabel(|l| format!("{l}~{tag}")).expect("fresh labels are valid")
}

/// Structural invariants over [`STRUCTURAL_TRIALS`] seeded trials each:
/// flag closure idempotence, join f-vectors, Euler characteristic under
/// stellar subdivision, relabelling invariance of the sphere verdict.
pub fn criterion_11(seed: u64) -> CriterionResult {
    let mut failures = Vec::new();

    let mut rng = rng_for(seed, 1);
    for t in 0..STRUCTURAL_TRIALS {
        let n = rng.gen_range(1..=12);
        let p = rng.gen_range(0.1..0.9);
        let g = random_graph(&mut rng, n, p);
        let c = Complex::clique_complex(&g);
        if Complex::clique_complex(&c.skeleton_graph()) != c || !c.is_flag() {
            failures.push(format!("idempotence trial {t}"));
        }
    }

    let mut rng = rng_for(seed, 2);
    for t in 0..STRUCTURAL_TRIALS {
        let (n1, n2) = (rng.gen_range(1..=7), rng.gen_range(1..=7));
        let a = Complex::clique_complex(&random_graph(&mut rng, n1, 0.5));
        let b = Complex::clique_complex(&random_graph(&mut rng, n2, 0.5));
        let got = a.join(&b).f_vector().0;
        if got != join_f_vector(&a.f_vector().0, &b.f_vector().0) {
            failures.push(format!("join trial {t}: {got:?}"));
        }
    }

    let bases: Vec<Complex> = ["cross:d=3", "W:d=3,k=3", "Y:d=3,k=1,j=2", "cross:d=4", "Wp:k=2", "polysusp:d=4,n=10"]
        .iter()
        .map(|s| spec(s).build().expect("built-in instance"))
        .collect();
    let mut rng = rng_for(seed, 3);
    for t in 0..STRUCTURAL_TRIALS {
        let k = bases.choose(&mut rng).unwrap();
        let facet = k.facets().choose(&mut rng).unwrap().clone();
        let (x, y) = {
            let pair: Vec<_> = facet.choose_multiple(&mut rng, 2).copied().collect();
            (pair[0], pair[1])
        };
        let by_edge = k.stellar_subdivide_edge(x, y, "s_new");
        let by_facet = k.stellar_subdivide_facet(&facet, "s_new");
        match (by_edge, by_facet) {
            (Ok(e), Ok(f))
                if e.euler_characteristic() == k.euler_characteristic()
                    && f.euler_characteristic() == k.euler_characteristic() => {}
            _ => failures.push(format!("subdivision trial {t}")),
        }
    }

    let mut samples = bases.clone();
    samples.push(build_w(4, 2).expect("built-in instance"));
    samples.push(
        Complex::from_facets(&[vec!["a", "b", "c"], vec!["b", "c", "d"]]).expect("two triangles"),
    );
    let verdicts: Vec<Verdict> = samples.iter().map(|k| verify_sphere(k).verdict).collect();
    let mut rng = rng_for(seed, 4);
    for t in 0..STRUCTURAL_TRIALS {
        let i = rng.gen_range(0..samples.len());
        let relabelled = random_relabel(&samples[i], &mut rng);
        let v = verify_sphere(&relabelled).verdict;
        if v != verdicts[i] {
            failures.push(format!("relabel trial {t}: {v:?} != {:?}", verdicts[i]));
        }
    }

    result(
        "11",
        "structural invariants",
        failures,
        format!("4 invariants x {STRUCTURAL_TRIALS} trials, seed {seed}"),
    )
}

/// Groups of criteria selectable from the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    /// Stable set numbers in the layered families and the 2-sphere witnesses.
    Alpha2,
    /// 3-sphere witnesses and the link-recursive bound.
    Alpha3,
    Spheres,
    Rigidity,
    Bounds,
    All,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "alpha2" => Suite::Alpha2,
            "alpha3" => Suite::Alpha3,
            "spheres" => Suite::Spheres,
            "rigidity" => Suite::Rigidity,
            "bounds" => Suite::Bounds,
            "all" => Suite::All,
            other => return Err(Error::InvalidInput(format!("unknown suite `{other}`"))),
        })
    }
}

/// Runs a suite sequentially, in criterion order.
pub fn run_suite(suite: Suite, seed: u64) -> Vec<CriterionResult> {
    match suite {
        Suite::Alpha2 => vec![criterion_1(), criterion_2(), criterion_5_d3()],
        Suite::Alpha3 => vec![criterion_5_d4(), criterion_6()],
        Suite::Spheres => vec![criterion_3(), criterion_4(), criterion_11(seed)],
        Suite::Rigidity => vec![criterion_7(seed), criterion_8(seed)],
        Suite::Bounds => vec![criterion_9(), criterion_10()],
        Suite::All => vec![
            criterion_1(),
            criterion_2(),
            criterion_3(),
            criterion_4(),
            criterion_5(),
            criterion_6(),
            criterion_7(seed),
            criterion_8(seed),
            criterion_9(),
            criterion_10(),
            criterion_11(seed),
        ],
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn brute_force_gale_small() {
        assert_eq!(gale_facets_brute_force(2, 5).len(), 5);
        assert_eq!(gale_facets_brute_force(4, 7).len(), 14);
    }

    #[test]
    fn join_convolution_formula() {
        assert_eq!(join_f_vector(&[1, 4, 4], &[1, 4, 4]), vec![1, 8, 24, 32, 16]);
    }
}
