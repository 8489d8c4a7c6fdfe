//! Bound formulas for the minimum and maximum stable set number of flag
//! spheres, tables comparing them with the constructions, and the planar
//! counting argument for flag 2-spheres.
//!
//! All comparisons that decide a verdict are done in integer arithmetic.

use std::ops::RangeInclusive;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complex::Complex;
use crate::constructions::{best_flag_3sphere, ConstructionSpec};
use crate::error::{Error, Result};
use crate::graph::{alpha_exact, meets_root_bound, turan_stable};
use crate::rigidity::{g2, EdgeBound};
use crate::verify::{verify_sphere, Verdict};

/// Conjectured minimum stable set number over flag `(d-1)`-spheres on `n`
/// vertices: `⌈(n+d-3)/(2(d-1))⌉`.
pub fn conjecture_formula(d: usize, n: usize) -> Result<usize> {
    if d < 2 || n < 2 * d {
        return Err(Error::InvalidInput(format!("need d >= 2 and n >= 2d, got d={d}, n={n}")));
    }
    Ok((n + d - 3).div_ceil(2 * (d - 1)))
}

/// Upper bound `⌈(⌈n/⌊d/4⌋⌉ + 1)/6⌉` from joins of 3-spheres, `d ≥ 4`.
pub fn join_upper_bound(d: usize, n: usize) -> Option<usize> {
    (d >= 4).then(|| (n.div_ceil(d / 4) + 1).div_ceil(6))
}

/// Lower bound `¼·n^{1/(d-2)}`, `d ≥ 4`, as a float for display.
pub fn root_lower_bound(d: usize, n: usize) -> Option<f64> {
    (d >= 4).then(|| 0.25 * (n as f64).powf(1.0 / (d - 2) as f64))
}

/// Maximum stable set number conjectured over flag `(d-1)`-spheres on `n`
/// vertices: `⌊(n - 2(d-2))/2⌋`, attained by suspended polygons.
pub fn alpha_max_formula(d: usize, n: usize) -> usize {
    (n - 2 * (d - 2)) / 2
}

/// The construction used as a small-α witness on `n` vertices:
/// `X(d,k,j)`/`Y(d,k,j)` for `d ≤ 3`, `X'`/`Y'` for `d = 4`, joins above.
pub fn witness_spec(d: usize, n: usize) -> Option<ConstructionSpec> {
    match d {
        2 if n >= 4 => Some(ConstructionSpec::X { d: 2, k: (n - 2) / 2, j: n % 2 }),
        3 if n >= 6 => {
            // |X(3,k,j)| = 2 + j + 4k for j ≤ 2; |Y(3,k,1)| = 5 + 4k covers n ≡ 1.
            let j = (n - 2) % 4;
            Some(if j <= 2 {
                ConstructionSpec::X { d: 3, k: (n - 2 - j) / 4, j }
            } else {
                ConstructionSpec::Y { d: 3, k: (n - 5) / 4, j: 1 }
            })
        }
        4 => best_flag_3sphere(n).ok(),
        _ if d >= 5 && n >= 2 * d => Some(ConstructionSpec::JoinUpper { d, n }),
        _ => None,
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundRow {
    pub d: usize,
    pub n: usize,
    pub conj_value: Option<usize>,
    pub construction_alpha: Option<usize>,
    pub join_upper: Option<usize>,
    pub root_lower: Option<f64>,
    /// `¼·n^{1/(d-2)} ≤ construction_alpha`, decided exactly.
    pub lower_holds: Option<bool>,
    pub witness_spec: Option<ConstructionSpec>,
}

pub fn bound_row(d: usize, n: usize) -> BoundRow {
    let spec = witness_spec(d, n);
    let construction_alpha = spec
        .and_then(|s| s.build().ok())
        .and_then(|k| alpha_exact(&k.skeleton_graph(), None).ok())
        .map(|w| w.size);
    BoundRow {
        d,
        n,
        conj_value: conjecture_formula(d, n).ok(),
        construction_alpha,
        join_upper: join_upper_bound(d, n),
        root_lower: root_lower_bound(d, n),
        lower_holds: construction_alpha.filter(|_| d >= 4).map(|a| meets_root_bound(a, n, d - 2)),
        witness_spec: spec,
    }
}

/// One row per `n`, infeasible cells left empty; rows are computed in
/// parallel and returned in order of `n`.
pub fn alpha_table(d: usize, ns: RangeInclusive<usize>) -> Vec<BoundRow> {
    ns.collect::<Vec<_>>().into_par_iter().map(|n| bound_row(d, n)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlphaMaxRow {
    pub d: usize,
    pub n: usize,
    pub formula: usize,
    pub alpha: usize,
    /// Equality is proven for `d ≤ 3` and only conjectured above.
    pub asserted: bool,
}

/// Stable set numbers of suspended polygons against `⌊(n - 2(d-2))/2⌋`.
/// Fails with [`Error::GuaranteeViolated`] on a mismatch for `d ≤ 3`.
pub fn alpha_max_table(d: usize, ns: RangeInclusive<usize>) -> Result<Vec<AlphaMaxRow>> {
    let rows = ns
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|n| {
            let spec = ConstructionSpec::PolygonSuspension { d, n };
            spec.validate()?;
            let alpha = alpha_exact(&spec.build()?.skeleton_graph(), None)?.size;
            Ok(AlphaMaxRow { d, n, formula: alpha_max_formula(d, n), alpha, asserted: d <= 3 })
        })
        .collect::<Result<Vec<_>>>()?;
    if let Some(bad) = rows.iter().find(|r| r.asserted && r.alpha != r.formula) {
        return Err(Error::GuaranteeViolated(format!(
            "suspended polygon d={}, n={}: alpha {} != {}",
            bad.d, bad.n, bad.alpha, bad.formula
        )));
    }
    Ok(rows)
}

/// The counting behind `α ≤ ⌊(n-2)/2⌋` for flag 2-spheres: the edges leaving
/// a maximum stable set `I` form a bipartite planar graph `B`, so
/// `4|I| ≤ Σ_{v∈I} deg v = |B| ≤ 2n - 4`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountingReport {
    pub n: usize,
    pub stable_size: usize,
    pub degree_sum: usize,
    pub cut_edges: usize,
    pub bound: usize,
}

pub fn stable_set_counting_check(k: &Complex) -> Result<CountingReport> {
    if k.dim() != 2 || !k.is_flag() {
        return Err(Error::PreconditionFailed("expected a flag 2-complex".into()));
    }
    let cert = verify_sphere(k);
    if cert.verdict != Verdict::CertifiedSphere {
        return Err(Error::PreconditionFailed(format!("not a certified 2-sphere: {}", cert.reason)));
    }
    let g = k.skeleton_graph();
    let n = g.num_vertices();
    let w = alpha_exact(&g, None)?;
    let inside = |v: u32| w.vertices.binary_search(&v).is_ok();
    let cut_edges = g.edges().filter(|&(u, v)| inside(u) != inside(v)).count();
    let degree_sum = w.vertices.iter().map(|&v| g.degree(v)).sum();
    let report = CountingReport { n, stable_size: w.size, degree_sum, cut_edges, bound: (n - 2) / 2 };
    if report.cut_edges != report.degree_sum
        || 4 * report.stable_size > report.cut_edges
        || report.cut_edges > 2 * n - 4
        || report.stable_size > report.bound
    {
        return Err(Error::GuaranteeViolated(format!("counting inequalities fail: {report:?}")));
    }
    Ok(report)
}

/// Edge-count observations for a pure `(d-1)`-complex.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct F1Report {
    pub n: usize,
    pub f1: usize,
    pub edge_bound: EdgeBound,
    pub g2: i64,
    pub alpha: usize,
    pub turan_size: usize,
}

pub fn f1_report(k: &Complex, d: usize) -> Result<F1Report> {
    let g2v = g2(k, d)?;
    let g = k.skeleton_graph();
    let (n, f1) = (g.num_vertices(), g.edge_count());
    Ok(F1Report {
        n,
        f1,
        edge_bound: EdgeBound::new(n, f1, d),
        g2: g2v,
        alpha: alpha_exact(&g, None)?.size,
        turan_size: turan_stable(&g).size,
    })
}

/// Fixed-width text rendering of [`alpha_table`] rows.
pub fn render_table(rows: &[BoundRow]) -> String {
    fn cell<T: ToString>(x: Option<T>) -> String {
        x.map_or_else(|| "-".to_string(), |v| v.to_string())
    }
    let mut out = format!(
        "{:>3} {:>4} {:>5} {:>6} {:>6} {:>7}  {}\n",
        "d", "n", "conj", "alpha", "upper", "lower", "witness"
    );
    for r in rows {
        out.push_str(&format!(
            "{:>3} {:>4} {:>5} {:>6} {:>6} {:>7}  {}\n",
            r.d,
            r.n,
            cell(r.conj_value),
            cell(r.construction_alpha),
            cell(r.join_upper),
            r.root_lower.map_or_else(|| "-".to_string(), |x| format!("{x:.3}")),
            cell(r.witness_spec),
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::tests::octahedron;
    use crate::constructions::{build_w, crosspolytope, polygon_suspension};

    #[test]
    fn formulas() {
        assert_eq!(conjecture_formula(3, 14).unwrap(), 4);
        assert_eq!(conjecture_formula(4, 14).unwrap(), 3);
        assert_eq!(conjecture_formula(2, 6).unwrap(), 3);
        assert!(matches!(conjecture_formula(3, 5), Err(Error::InvalidInput(_))));
        for n in 6..=40 {
            assert_eq!(conjecture_formula(3, n).unwrap(), n.div_ceil(4));
            if n >= 8 {
                assert_eq!(conjecture_formula(4, n).unwrap(), (n + 1).div_ceil(6));
            }
        }
        assert_eq!(join_upper_bound(8, 40), Some(4));
        assert_eq!(join_upper_bound(3, 40), None);
        assert_eq!(alpha_max_formula(3, 10), 4);
        assert_eq!(alpha_max_formula(5, 14), 4);
    }

    #[test]
    fn witnesses_have_n_vertices() {
        for d in 2..=6 {
            for n in 2 * d..=30 {
                let spec = witness_spec(d, n).unwrap();
                assert_eq!(spec.vertex_count(), n, "{spec}");
            }
        }
    }

    #[test]
    fn rows() {
        let r = bound_row(5, 16);
        assert_eq!(r.construction_alpha, Some(3));
        assert!((r.root_lower.unwrap() - 0.25 * 16f64.cbrt()).abs() < 1e-12);
        assert_eq!(r.lower_holds, Some(true));
        let t = alpha_table(3, 6..=12);
        assert_eq!(t.iter().map(|r| r.n).collect::<Vec<_>>(), (6..=12).collect::<Vec<_>>());
        assert!(t.iter().all(|r| r.construction_alpha == Some(r.n.div_ceil(4))));
        assert!(render_table(&t).lines().count() == 8);
    }

    #[test]
    fn alpha_max() {
        let rows = alpha_max_table(3, 10..=10).unwrap();
        assert_eq!(rows[0].alpha, 4);
        assert_eq!(alpha_max_table(2, 8..=8).unwrap()[0].alpha, 4);
        let r = &alpha_max_table(5, 14..=14).unwrap()[0];
        assert!(!r.asserted);
        assert_eq!(r.formula, 4);
    }

    #[test]
    fn counting() {
        let r = stable_set_counting_check(&octahedron()).unwrap();
        assert_eq!((r.stable_size, r.cut_edges, 2 * r.n - 4), (2, 8, 8));
        let r = stable_set_counting_check(&polygon_suspension(3, 10).unwrap()).unwrap();
        assert_eq!((r.stable_size, r.cut_edges, 2 * r.n - 4), (4, 16, 16));
        let r = stable_set_counting_check(&build_w(3, 3).unwrap()).unwrap();
        assert_eq!(r.stable_size, 4);
        assert!(r.cut_edges >= 16 && r.cut_edges <= 24);
        assert!(stable_set_counting_check(&crosspolytope(4).unwrap()).is_err());
    }

    #[test]
    fn f1_observations() {
        let r = f1_report(&crosspolytope(6).unwrap(), 6).unwrap();
        assert_eq!((r.n, r.f1), (12, 60));
        assert_eq!(r.edge_bound.excess, -1.0);
        assert!(!r.edge_bound.meets_threshold);
        assert_eq!(r.alpha, 2);
    }
}
