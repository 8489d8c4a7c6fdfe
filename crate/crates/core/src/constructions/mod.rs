//! Sphere families with small (or large) maximum stable sets.
//!
//! Vertex labels follow the usual naming: apexes `a`, `b`; layer vertices
//! `y_s^i`, `z_s^i`; subdivision vertices `u_j` (at `a`) and `w_j` (at `b`).

mod spec;

use crate::complex::{Complex, Vertex};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub use spec::{best_flag_3sphere, join_upper_plan, ConstructionSpec, JoinPlan, Manifest};

pub fn y(s: usize, i: usize) -> String {
    format!("y_{s}^{i}")
}

pub fn z(s: usize, i: usize) -> String {
    format!("z_{s}^{i}")
}

/// The layered graph `W_{d,k}`.
///
/// Each layer `X_i = {y_s^i, z_s^i : 1 ≤ s ≤ d-1}` spans a crosspolytope graph
/// (only `y_s^i z_s^i` missing); `a` sees all of `X_1`, `b` all of `X_k`.
/// Between consecutive layers the pair `(s, t)` is positive when `t ≥ s`
/// (edges `y_s^i y_t^{i+1}` and `z_s^i z_t^{i+1}`) and negative otherwise
/// (edges `y_s^i z_t^{i+1}` and `z_s^i y_t^{i+1}`).
pub fn w_graph(d: usize, k: usize) -> Result<Graph> {
    if d < 2 || k < 1 {
        return Err(Error::InvalidSpec(format!("W needs d >= 2 and k >= 1, got d={d}, k={k}")));
    }
    let m = d - 1;
    let mut labels = vec!["a".to_string(), "b".to_string()];
    for i in 1..=k {
        labels.extend((1..=m).map(|s| y(s, i)));
        labels.extend((1..=m).map(|s| z(s, i)));
    }
    // ids: a = 0, b = 1, then per layer y_1..y_m, z_1..z_m.
    let yid = |s: usize, i: usize| (2 + (i - 1) * 2 * m + (s - 1)) as Vertex;
    let zid = |s: usize, i: usize| (2 + (i - 1) * 2 * m + m + (s - 1)) as Vertex;

    let mut g = Graph::with_labels(labels);
    for s in 1..=m {
        for (apex, layer) in [(0, 1), (1, k)] {
            g.add_edge(apex, yid(s, layer));
            g.add_edge(apex, zid(s, layer));
        }
    }
    for i in 1..=k {
        for s in 1..=m {
            for t in s + 1..=m {
                g.add_edge(yid(s, i), yid(t, i));
                g.add_edge(yid(s, i), zid(t, i));
                g.add_edge(zid(s, i), yid(t, i));
                g.add_edge(zid(s, i), zid(t, i));
            }
        }
    }
    for i in 1..k {
        for s in 1..=m {
            for t in 1..=m {
                if t >= s {
                    g.add_edge(yid(s, i), yid(t, i + 1));
                    g.add_edge(zid(s, i), zid(t, i + 1));
                } else {
                    g.add_edge(yid(s, i), zid(t, i + 1));
                    g.add_edge(zid(s, i), yid(t, i + 1));
                }
            }
        }
    }
    Ok(g)
}

/// `cl(W_{d,k})`.
pub fn build_w(d: usize, k: usize) -> Result<Complex> {
    Ok(Complex::clique_complex(&w_graph(d, k)?))
}

/// `X''(d,k,j)`: `cl(W_{d,k})` subdivided at `a y_1^1, ..., a y_j^1`, the new
/// vertices named `u_1, ..., u_j`.
pub fn build_x(d: usize, k: usize, j: usize) -> Result<Complex> {
    if d < 2 || k < 1 || j > d - 1 {
        return Err(Error::InvalidSpec(format!(
            "X needs d >= 2, k >= 1, 0 <= j <= d-1, got d={d}, k={k}, j={j}"
        )));
    }
    let mut c = build_w(d, k)?;
    for t in 1..=j {
        c = c.subdivide_edge_by_label("a", &y(t, 1), &format!("u_{t}"))?;
    }
    Ok(c)
}

/// `Y''(d,k,j)`: `X''(d,k,d-1)` subdivided at `b y_1^k, ..., b y_j^k`, the new
/// vertices named `w_1, ..., w_j`.
pub fn build_y(d: usize, k: usize, j: usize) -> Result<Complex> {
    if d < 3 || k < 1 || j < 1 || j > d - 1 {
        return Err(Error::InvalidSpec(format!(
            "Y needs d >= 3, k >= 1, 1 <= j <= d-1, got d={d}, k={k}, j={j}"
        )));
    }
    let mut c = build_x(d, k, d - 1)?;
    for t in 1..=j {
        c = c.subdivide_edge_by_label("b", &y(t, k), &format!("w_{t}"))?;
    }
    Ok(c)
}

/// The two prism diagonals per layer gap that turn `W_{4,k}` into `W'_{4,k}`:
/// `y_1^i z_2^{i+1}` and `z_1^i y_2^{i+1}` for `1 ≤ i ≤ k-1`.
pub fn prism_diagonals(k: usize) -> Vec<(String, String)> {
    (1..k)
        .flat_map(|i| [(y(1, i), z(2, i + 1)), (z(1, i), y(2, i + 1))])
        .collect()
}

fn add_diagonals_and_close(c: &Complex, k: usize) -> Result<Complex> {
    let mut g = c.skeleton_graph();
    for (p, q) in prism_diagonals(k) {
        let (u, v) = (g.vertex_id(&p).unwrap(), g.vertex_id(&q).unwrap());
        g.add_edge(u, v);
    }
    let out = Complex::clique_complex(&g);
    assert!(out.is_pure() && out.dim() == 3, "retriangulated complex must be a pure 3-complex");
    Ok(out)
}

/// `cl(W'_{4,k})`.
pub fn build_w4_prime(k: usize) -> Result<Complex> {
    build_x4_prime(k, 0)
}

/// `cl(X'(4,k,j))`.
pub fn build_x4_prime(k: usize, j: usize) -> Result<Complex> {
    if k < 1 || j > 3 {
        return Err(Error::InvalidSpec(format!("X' needs k >= 1, 0 <= j <= 3, got k={k}, j={j}")));
    }
    add_diagonals_and_close(&build_x(4, k, j)?, k)
}

/// `cl(Y'(4,k,j))`.
pub fn build_y4_prime(k: usize, j: usize) -> Result<Complex> {
    if k < 1 || !(1..=3).contains(&j) {
        return Err(Error::InvalidSpec(format!("Y' needs k >= 1, 1 <= j <= 3, got k={k}, j={j}")));
    }
    add_diagonals_and_close(&build_y(4, k, j)?, k)
}

/// Boundary of the `d`-dimensional crosspolytope on `e_i^+`, `e_i^-`.
pub fn crosspolytope(d: usize) -> Result<Complex> {
    if d < 1 {
        return Err(Error::InvalidSpec("crosspolytope needs d >= 1".into()));
    }
    let mut facets: Vec<Vec<String>> = vec![Vec::new()];
    for i in 1..=d {
        facets = facets
            .into_iter()
            .flat_map(|f| {
                ["+", "-"].map(|s| {
                    let mut g = f.clone();
                    g.push(format!("e_{i}^{s}"));
                    g
                })
            })
            .collect();
    }
    Complex::from_facets(&facets)
}

/// The `m`-gon on `c_1, ..., c_m`.
pub fn polygon(m: usize) -> Result<Complex> {
    if m < 3 {
        return Err(Error::InvalidSpec(format!("polygon needs m >= 3, got {m}")));
    }
    let facets: Vec<Vec<String>> = (1..=m)
        .map(|i| vec![format!("c_{i}"), format!("c_{}", i % m + 1)])
        .collect();
    Complex::from_facets(&facets)
}

/// `(d-2)`-fold suspension of the `(n - 2(d-2))`-gon: a flag `(d-1)`-sphere
/// on `n` vertices with `α = ⌊(n - 2(d-2))/2⌋`.
pub fn polygon_suspension(d: usize, n: usize) -> Result<Complex> {
    if d < 2 || n < 2 * (d - 2) + 4 {
        return Err(Error::InvalidSpec(format!(
            "polysusp needs d >= 2 and a polygon of length >= 4, got d={d}, n={n}"
        )));
    }
    let mut c = polygon(n - 2 * (d - 2))?;
    for _ in 0..d - 2 {
        c = c.suspension();
    }
    Ok(c)
}

/// Join of `⌊d/4⌋` flag 3-spheres from the `X'`/`Y'` families followed by
/// `d mod 4` suspensions, `n` vertices in total. See [`join_upper_plan`].
pub fn join_upper_family(d: usize, n: usize) -> Result<Complex> {
    let plan = join_upper_plan(d, n)?;
    let mut parts = plan.components.iter().map(ConstructionSpec::build);
    let mut c = parts.next().expect("at least one component")?;
    for p in parts {
        c = c.join(&p?);
    }
    for _ in 0..plan.suspensions {
        c = c.suspension();
    }
    debug_assert_eq!(c.num_vertices(), n);
    Ok(c)
}

/// Facets of the cyclic `d`-polytope on `m` vertices, as sorted 0-based
/// position lists, by Gale's evenness condition: every maximal block of
/// chosen positions with unchosen positions on both sides has even length.
pub fn gale_facets(d: usize, m: usize) -> Vec<Vec<usize>> {
    fn go(pos: usize, m: usize, d: usize, run: usize, run_from_start: bool, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == d {
            // Trailing positions are all unchosen; close the current run.
            let closes_run = pos < m && run > 0;
            if !closes_run || run_from_start || run % 2 == 0 {
                out.push(cur.clone());
            }
            return;
        }
        if m - pos < d - cur.len() {
            return;
        }
        cur.push(pos);
        go(pos + 1, m, d, run + 1, run_from_start || (run == 0 && pos == 0), cur, out);
        cur.pop();
        if run == 0 || run_from_start || run % 2 == 0 {
            go(pos + 1, m, d, 0, false, cur, out);
        }
    }
    let mut out = Vec::new();
    go(0, m, d, 0, false, &mut Vec::new(), &mut out);
    out
}

/// Boundary of the cyclic `d`-polytope on `c_1, ..., c_m`.
pub fn cyclic_boundary(d: usize, m: usize) -> Result<Complex> {
    if d < 2 || m <= d {
        return Err(Error::InvalidSpec(format!("cyclic needs m > d >= 2, got d={d}, m={m}")));
    }
    let facets: Vec<Vec<String>> = gale_facets(d, m)
        .into_iter()
        .map(|f| f.into_iter().map(|p| format!("c_{}", p + 1)).collect())
        .collect();
    Complex::from_facets(&facets)
}

/// Cyclic boundary with every facet stellarly subdivided; the new vertex of
/// facet `{c_1, c_2, c_3, c_4}` is `v_{1,2,3,4}`.
pub fn neighborly_subdivided(d: usize, m: usize) -> Result<Complex> {
    let base = cyclic_boundary(d, m)?;
    let mut c = base.clone();
    for f in gale_facets(d, m) {
        let labels: Vec<String> = f.iter().map(|p| format!("c_{}", p + 1)).collect();
        let name = format!(
            "v_{{{}}}",
            f.iter().map(|p| (p + 1).to_string()).collect::<Vec<_>>().join(",")
        );
        let ids = c.face_ids(&labels)?;
        c = c.stellar_subdivide_facet(&ids, &name)?;
    }
    Ok(c)
}

/// Ids of the subdivision vertices `v_{...}` of a neighborly-subdivided complex.
pub fn subdivision_vertices(c: &Complex) -> Vec<Vertex> {
    (0..c.num_vertices() as Vertex)
        .filter(|&v| c.label(v).starts_with("v_{"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::alpha;

    #[test]
    fn w33_cross_edges() {
        let g = w_graph(3, 3).unwrap();
        assert_eq!(g.num_vertices(), 14);
        // Cross edges between layers 1 and 2.
        for (p, q) in [
            ("y_1^1", "y_1^2"),
            ("y_2^1", "y_2^2"),
            ("z_1^1", "z_1^2"),
            ("z_2^1", "z_2^2"),
            ("y_1^1", "y_2^2"),
            ("y_2^1", "z_1^2"),
            ("z_1^1", "z_2^2"),
            ("z_2^1", "y_1^2"),
        ] {
            assert!(g.has_edge(g.vertex_id(p).unwrap(), g.vertex_id(q).unwrap()), "{p}-{q}");
        }
        assert!(!g.has_edge(g.vertex_id("y_1^1").unwrap(), g.vertex_id("z_1^1").unwrap()));
        assert!(!g.has_edge(g.vertex_id("y_2^1").unwrap(), g.vertex_id("y_1^2").unwrap()));
        // 4 cycles of 4 + 2 gaps of 8 + 2 apexes of 4.
        assert_eq!(g.edge_count(), 12 + 16 + 8);
        assert_eq!(alpha(&g), 4);
    }

    #[test]
    fn w_d1_is_crosspolytope() {
        for d in 2..=5 {
            let w = build_w(d, 1).unwrap();
            let c = crosspolytope(d).unwrap();
            assert_eq!(w.f_vector(), c.f_vector());
            assert_eq!(w.num_vertices(), 2 * d);
        }
    }

    #[test]
    fn x_with_zero_subdivisions_is_w() {
        assert_eq!(build_x(3, 2, 0).unwrap(), build_w(3, 2).unwrap());
        assert_eq!(build_x(5, 3, 0).unwrap(), build_w(5, 3).unwrap());
    }

    #[test]
    fn vertex_counts() {
        for d in 2..=5 {
            for k in 1..=3 {
                for j in 0..d {
                    assert_eq!(build_x(d, k, j).unwrap().num_vertices(), 2 + j + k * (2 * d - 2));
                    if d >= 3 && j >= 1 {
                        assert_eq!(
                            build_y(d, k, j).unwrap().num_vertices(),
                            2 + (d - 1) + j + k * (2 * d - 2)
                        );
                    }
                }
            }
        }
        assert_eq!(build_x(3, 2, 1).unwrap().num_vertices(), 11);
    }

    #[test]
    fn bad_parameters() {
        assert!(matches!(build_w(1, 2), Err(Error::InvalidSpec(_))));
        assert!(matches!(build_x(3, 2, 3), Err(Error::InvalidSpec(_))));
        assert!(matches!(build_y(2, 2, 1), Err(Error::InvalidSpec(_))));
        assert!(matches!(build_y(3, 2, 0), Err(Error::InvalidSpec(_))));
        assert!(matches!(build_x4_prime(2, 4), Err(Error::InvalidSpec(_))));
        assert!(matches!(polygon_suspension(3, 5), Err(Error::InvalidSpec(_))));
        assert!(matches!(cyclic_boundary(4, 4), Err(Error::InvalidSpec(_))));
    }

    #[test]
    fn w4_prime_k1_is_crosspolytope() {
        let w = build_w4_prime(1).unwrap();
        assert_eq!(w.f_vector().0, vec![1, 8, 24, 32, 16]);
    }

    #[test]
    fn crosspolytopes() {
        assert_eq!(crosspolytope(3).unwrap().f_vector().0, vec![1, 6, 12, 8]);
        assert_eq!(crosspolytope(4).unwrap().f_vector().0, vec![1, 8, 24, 32, 16]);
        let sq = crosspolytope(2).unwrap();
        assert_eq!(sq.facets().len(), 4);
        assert_eq!(sq.dim(), 1);
    }

    #[test]
    fn polygon_suspensions() {
        let h = polygon_suspension(2, 6).unwrap();
        assert_eq!(h.num_vertices(), 6);
        assert_eq!(alpha(&h.skeleton_graph()), 3);
        let s = polygon_suspension(3, 10).unwrap();
        assert_eq!(s.num_vertices(), 10);
        assert_eq!(alpha(&s.skeleton_graph()), 4);
        let s = polygon_suspension(4, 12).unwrap();
        assert_eq!(s.num_vertices(), 12);
        assert_eq!(s.dim(), 3);
        assert_eq!(alpha(&s.skeleton_graph()), 4);
    }

    #[test]
    fn cyclic_counts() {
        assert_eq!(gale_facets(4, 7).len(), 14);
        let p = cyclic_boundary(2, 5).unwrap();
        assert_eq!(p.facets().len(), 5);
        assert_eq!(p.f_vector(), polygon(5).unwrap().f_vector());
        // 3-polytopes are simplicial with 2m - 4 facets.
        assert_eq!(gale_facets(3, 6).len(), 8);
    }

    #[test]
    fn neighborly_new_vertices_stable() {
        let c = neighborly_subdivided(4, 7).unwrap();
        assert_eq!(c.num_vertices(), 21);
        let new = subdivision_vertices(&c);
        assert_eq!(new.len(), 14);
        assert!(c.skeleton_graph().is_stable(&new).unwrap());
    }
}
