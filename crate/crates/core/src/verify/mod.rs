//! Sphere recognition.
//!
//! [`verify_sphere`] runs: purity, pseudomanifold and dual connectivity,
//! Euler characteristic and mod-2 Betti numbers, then the link of every face
//! through the same low-dimensional tests, then for dimension 3 and up a
//! bistellar reduction to a simplex boundary. Checking the links of all faces
//! is the same as recursing into vertex links, since `lk_{lk F}(G) = lk(F ∪ G)`.

mod bistellar;
mod homology;

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complex::{Complex, Vertex};
use crate::error::{Error, Result};

pub use bistellar::{bistellar_reduce, Flip, Reduction, DEFAULT_MAX_ROUNDS};
pub use homology::betti_mod2;

/// Ordered from worst to best so that `min` combines verdicts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Verdict {
    NotSphere,
    HomologySphere,
    CertifiedSphere,
}

impl Verdict {
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::CertifiedSphere => 0,
            Verdict::NotSphere => 1,
            Verdict::HomologySphere => 2,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Evidence {
    pub dim: isize,
    pub betti_mod2: Vec<usize>,
    pub euler_characteristic: i64,
    pub links_checked: usize,
    pub links_certified: usize,
    pub links_homology_only: usize,
    /// Length of the successful top-level flip sequence, if one was found.
    pub bistellar_trace_len: Option<usize>,
    /// Seed of the successful attempt.
    pub bistellar_seed: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SphereCert {
    pub verdict: Verdict,
    pub reason: String,
    pub evidence: Evidence,
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub seed: u64,
    pub max_rounds: usize,
    /// Further seeds tried after the first failed reduction.
    pub restarts: usize,
    /// Highest dimension in which a bistellar reduction is attempted; above
    /// it the best possible verdict is `HomologySphere`.
    pub max_certify_dim: isize,
}

impl VerifyOptions {
    /// No bistellar search: everything from dimension 3 up is checked up to
    /// homology only.
    pub fn homology_only() -> Self {
        VerifyOptions { max_certify_dim: 2, ..Self::default() }
    }
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            seed: 0,
            max_rounds: DEFAULT_MAX_ROUNDS,
            restarts: 5,
            max_certify_dim: 4,
        }
    }
}

/// Why a complex fails to be a closed pseudomanifold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PseudomanifoldFailure {
    NotPure,
    /// A ridge lies in the given number of facets instead of two.
    BadRidge { ridge: String, facets: usize },
    DisconnectedDual { components: usize },
    /// A 0-dimensional pseudomanifold must be two points.
    WrongPointCount(usize),
}

impl fmt::Display for PseudomanifoldFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NotPure => write!(f, "complex is not pure"),
            Self::BadRidge { ridge, facets } => write!(f, "ridge {ridge} lies in {facets} facets"),
            Self::DisconnectedDual { components } => {
                write!(f, "dual graph has {components} components")
            }
            Self::WrongPointCount(n) => write!(f, "0-dimensional complex with {n} points"),
        }
    }
}

/// Every ridge in exactly two facets and the dual graph connected.
pub fn is_pseudomanifold(k: &Complex) -> std::result::Result<(), PseudomanifoldFailure> {
    if !k.is_pure() {
        return Err(PseudomanifoldFailure::NotPure);
    }
    let facets = k.facets();
    if k.dim() <= 0 {
        return if facets.len() == 2 {
            Ok(())
        } else {
            Err(PseudomanifoldFailure::WrongPointCount(facets.len()))
        };
    }
    let mut ridges: BTreeMap<Vec<Vertex>, Vec<usize>> = BTreeMap::new();
    for (i, f) in facets.iter().enumerate() {
        for skip in 0..f.len() {
            let mut r = f.clone();
            r.remove(skip);
            ridges.entry(r).or_default().push(i);
        }
    }
    let mut parent: Vec<usize> = (0..facets.len()).collect();
    for (ridge, owners) in &ridges {
        if owners.len() != 2 {
            return Err(PseudomanifoldFailure::BadRidge {
                ridge: k.describe(ridge),
                facets: owners.len(),
            });
        }
        let (a, b) = (find(&mut parent, owners[0]), find(&mut parent, owners[1]));
        parent[a] = b;
    }
    let components = (0..facets.len()).filter(|&i| find(&mut parent, i) == i).count();
    if components != 1 {
        return Err(PseudomanifoldFailure::DisconnectedDual { components });
    }
    Ok(())
}

fn find(parent: &mut [usize], mut i: usize) -> usize {
    while parent[i] != i {
        parent[i] = parent[parent[i]];
        i = parent[i];
    }
    i
}

/// Pseudomanifold check with the error type used by the rest of the crate.
pub fn check_pseudomanifold(k: &Complex) -> Result<()> {
    match is_pseudomanifold(k) {
        Ok(()) => Ok(()),
        Err(PseudomanifoldFailure::NotPure) => Err(Error::NotPure),
        Err(e) => Err(Error::PreconditionFailed(e.to_string())),
    }
}

pub fn verify_sphere(k: &Complex) -> SphereCert {
    verify_sphere_with(k, &VerifyOptions::default())
}

pub fn verify_sphere_with(k: &Complex, opts: &VerifyOptions) -> SphereCert {
    let dim = k.dim();
    let mut evidence = Evidence {
        dim,
        betti_mod2: Vec::new(),
        euler_characteristic: 0,
        links_checked: 0,
        links_certified: 0,
        links_homology_only: 0,
        bistellar_trace_len: None,
        bistellar_seed: None,
    };
    let fail = |reason: String, evidence: Evidence| SphereCert {
        verdict: Verdict::NotSphere,
        reason,
        evidence,
    };

    if let Err(e) = is_pseudomanifold(k) {
        return fail(e.to_string(), evidence);
    }
    evidence.euler_characteristic = k.euler_characteristic();
    let expected_chi = if dim % 2 == 0 { 2 } else { 0 };
    if evidence.euler_characteristic != expected_chi {
        return fail(
            format!("Euler characteristic {} != {expected_chi}", evidence.euler_characteristic),
            evidence,
        );
    }
    evidence.betti_mod2 = betti_mod2(k);
    if evidence.betti_mod2 != sphere_betti(dim) {
        return fail(format!("mod-2 Betti numbers {:?}", evidence.betti_mod2), evidence);
    }

    let certify = dim <= opts.max_certify_dim;
    let mut verdict = Verdict::CertifiedSphere;
    let mut reason = String::from("all checks passed");

    // Links of all non-empty proper faces.
    let mut by_vertex: HashMap<Vertex, Vec<usize>> = HashMap::new();
    for (i, f) in k.facets().iter().enumerate() {
        for &v in f {
            by_vertex.entry(v).or_default().push(i);
        }
    }
    let mut seen: HashSet<Vec<Vertex>> = HashSet::new();
    let mut faces: Vec<Vec<Vertex>> = Vec::new();
    for f in k.facets() {
        for mask in 1u32..(1u32 << f.len()) - 1 {
            let face: Vec<Vertex> = (0..f.len()).filter(|i| mask >> i & 1 == 1).map(|i| f[i]).collect();
            if seen.insert(face.clone()) {
                faces.push(face);
            }
        }
    }
    faces.sort_unstable_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    let results: Vec<std::result::Result<Verdict, String>> = faces
        .par_iter()
        .map(|face| {
            let rarest = face.iter().min_by_key(|v| by_vertex[v].len()).unwrap();
            let link_facets: Vec<Vec<Vertex>> = by_vertex[rarest]
                .iter()
                .map(|&i| &k.facets()[i])
                .filter(|f| crate::complex::is_subset(face, f))
                .map(|f| f.iter().copied().filter(|v| face.binary_search(v).is_err()).collect())
                .collect();
            check_link(&Complex::from_parts(link_facets, k.labels().to_vec()), certify, opts)
        })
        .collect();
    for (face, result) in faces.iter().zip(results) {
        evidence.links_checked += 1;
        match result {
            Ok(Verdict::CertifiedSphere) => evidence.links_certified += 1,
            Ok(_) => {
                evidence.links_homology_only += 1;
                if verdict == Verdict::CertifiedSphere {
                    verdict = Verdict::HomologySphere;
                    reason = format!("link of {} only recognised up to homology", k.describe(face));
                }
            }
            Err(why) => {
                return fail(format!("link of {}: {why}", k.describe(face)), evidence);
            }
        }
    }

    if dim >= 3 {
        if certify {
            match reduce_with_restarts(k, opts) {
                Some((seed, r)) => {
                    evidence.bistellar_trace_len = Some(r.trace.len());
                    evidence.bistellar_seed = Some(seed);
                }
                None => {
                    verdict = Verdict::HomologySphere;
                    reason = format!("bistellar reduction inconclusive after {} attempts", opts.restarts + 1);
                }
            }
        } else {
            verdict = Verdict::HomologySphere;
            reason = format!("dimension {dim} is above the certification limit {}", opts.max_certify_dim);
        }
    }
    SphereCert { verdict, reason, evidence }
}

fn reduce_with_restarts(k: &Complex, opts: &VerifyOptions) -> Option<(u64, Reduction)> {
    (0..=opts.restarts as u64).find_map(|i| {
        let seed = opts.seed.wrapping_add(i);
        bistellar_reduce(k, opts.max_rounds, seed).ok().map(|r| (seed, r))
    })
}

fn sphere_betti(dim: isize) -> Vec<usize> {
    match dim {
        d if d < 0 => Vec::new(),
        0 => vec![2],
        d => {
            let mut b = vec![0; d as usize + 1];
            b[0] = 1;
            b[d as usize] = 1;
            b
        }
    }
}

/// Local test of a face link. Its own links are faces of the ambient complex
/// and get checked separately.
fn check_link(link: &Complex, certify: bool, opts: &VerifyOptions) -> std::result::Result<Verdict, String> {
    let e = link.dim();
    if e < 0 {
        return Ok(Verdict::CertifiedSphere);
    }
    is_pseudomanifold(link).map_err(|f| f.to_string())?;
    if e <= 1 {
        // Two points, or a connected 2-regular graph: a cycle.
        return Ok(Verdict::CertifiedSphere);
    }
    let chi = link.euler_characteristic();
    if e == 2 {
        // Closed connected surface with χ = 2.
        return if chi == 2 {
            Ok(Verdict::CertifiedSphere)
        } else {
            Err(format!("surface with Euler characteristic {chi}"))
        };
    }
    let betti = betti_mod2(link);
    if betti != sphere_betti(e) {
        return Err(format!("mod-2 Betti numbers {betti:?}"));
    }
    if certify && e <= opts.max_certify_dim && reduce_with_restarts(link, opts).is_some() {
        return Ok(Verdict::CertifiedSphere);
    }
    Ok(Verdict::HomologySphere)
}
