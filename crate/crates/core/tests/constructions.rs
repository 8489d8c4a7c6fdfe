use flag_spheres::constructions::*;
use flag_spheres::graph::alpha;
use flag_spheres::verify::{verify_sphere, Verdict};
use flag_spheres::{Complex, Graph};

fn ids(g: &Graph, labels: &[String]) -> Vec<u32> {
    labels.iter().map(|l| g.vertex_id(l).unwrap()).collect()
}

#[test]
fn drawn_instances() {
    for (spec, n, a) in [("W:d=3,k=3", 14, 4), ("X:d=3,k=2,j=2", 12, 3), ("Y:d=3,k=2,j=1", 13, 4)] {
        let k = spec.parse::<ConstructionSpec>().unwrap().build().unwrap();
        assert_eq!(k.num_vertices(), n, "{spec}");
        assert_eq!(alpha(&k.skeleton_graph()), a, "{spec}");
    }
}

#[test]
fn explicit_stable_sets_from_the_layers() {
    for d in 2..=5 {
        for k in 1..=5 {
            for j in 0..d {
                let g = build_x(d, k, j).unwrap().skeleton_graph();
                let mut s: Vec<String> = (1..=k).step_by(2).flat_map(|i| [y(1, i), z(1, i)]).collect();
                if k % 2 == 0 {
                    s.push("b".into());
                }
                assert_eq!(s.len(), k + 1);
                assert!(g.is_stable(&ids(&g, &s)).unwrap(), "X({d},{k},{j})");
            }
            if d < 3 {
                continue;
            }
            for j in 1..d {
                let g = build_y(d, k, j).unwrap().skeleton_graph();
                let layers: Vec<String> = (1..=k).map(|i| if (k - i) % 2 == 1 { y(1, i) } else { z(1, i) }).collect();
                let with_apex = |apex: &str| {
                    let mut s = vec![apex.to_string(), "w_1".to_string()];
                    s.extend(layers.iter().cloned());
                    ids(&g, &s)
                };
                // With `a`, the set is stable only for even k: for odd k it
                // picks z_1^1, which stays adjacent to a. u_1 avoids z_1^1.
                assert_eq!(g.is_stable(&with_apex("a")).unwrap(), k % 2 == 0, "Y({d},{k},{j})");
                let apex = if k % 2 == 0 { "a" } else { "u_1" };
                let s = with_apex(apex);
                assert_eq!(s.len(), k + 2);
                assert!(g.is_stable(&s).unwrap(), "Y({d},{k},{j})");
            }
        }
    }
}

#[test]
fn alpha_closed_forms_small() {
    for d in 2..=4 {
        for k in 1..=4 {
            for j in 0..d {
                let n = 2 + j + k * (2 * d - 2);
                let a = alpha(&build_x(d, k, j).unwrap().skeleton_graph());
                assert_eq!(a, k + 1);
                assert_eq!(a, (n - 2 - j) / (2 * d - 2) + 1);
                if d >= 3 && j >= 1 {
                    let n = 2 + (d - 1) + j + k * (2 * d - 2);
                    let a = alpha(&build_y(d, k, j).unwrap().skeleton_graph());
                    assert_eq!(a, k + 2);
                    assert_eq!(a, (n - 2 + (d - 1 - j)) / (2 * d - 2) + 1);
                }
            }
        }
    }
}

#[test]
fn residues_of_vertex_counts() {
    for k in 1..=10 {
        for j in 0..=2 {
            assert_eq!(build_x(3, k, j).unwrap().num_vertices() % 4, (2 + j) % 4);
        }
        for j in 0..=3 {
            assert_eq!(build_x(4, k, j).unwrap().num_vertices() % 6, (2 + j) % 6);
        }
        for j in 1..=3 {
            assert_eq!(build_y(4, k, j).unwrap().num_vertices() % 6, (j + 5) % 6);
        }
    }
}

#[test]
fn every_size_is_covered() {
    let mut small: Vec<usize> = Vec::new();
    let mut three: Vec<usize> = Vec::new();
    for k in 1..=10 {
        small.extend((0..=2).map(|j| ConstructionSpec::X { d: 3, k, j }.vertex_count()));
        small.extend((1..=2).map(|j| ConstructionSpec::Y { d: 3, k, j }.vertex_count()));
        three.extend((0..=3).map(|j| ConstructionSpec::X4prime { k, j }.vertex_count()));
        three.extend((1..=3).map(|j| ConstructionSpec::Y4prime { k, j }.vertex_count()));
    }
    assert!((6..=40).all(|n| small.contains(&n)));
    assert!((8..=60).all(|n| three.contains(&n)));
}

#[test]
fn consecutive_layers_span_a_cylinder() {
    let g = w_graph(3, 4).unwrap();
    for i in 1..4 {
        let layer: Vec<String> = [y(1, i), y(2, i), z(1, i), z(2, i), y(1, i + 1), y(2, i + 1), z(1, i + 1), z(2, i + 1)].to_vec();
        let h = g.induced(&ids(&g, &layer));
        let c = Complex::clique_complex(&h);
        assert_eq!(c.f_vector().0, vec![1, 8, 16, 8]);
        assert_eq!(c.euler_characteristic(), 0);
    }
}

#[test]
fn family_invariants() {
    let specs = [
        "W:d=3,k=4", "X:d=3,k=3,j=2", "Y:d=3,k=3,j=1", "Wp:k=3", "Xp:k=2,j=3", "Yp:k=2,j=2",
        "cross:d=5", "polysusp:d=4,n=11", "joinupper:d=5,n=18", "joinupper:d=8,n=16",
    ];
    for s in specs {
        let spec: ConstructionSpec = s.parse().unwrap();
        let d = spec.sphere_dim().unwrap();
        let k = spec.build().unwrap();
        assert!(k.is_pure() && k.dim() == d as isize - 1, "{s}");
        assert!(k.facets().iter().all(|f| f.len() == d), "{s}");
        assert!(k.skeleton_graph().min_degree() >= 2 * (d - 1), "{s}");
        assert_eq!(k.num_vertices(), spec.vertex_count(), "{s}");
        assert!(k.num_vertices() >= 2 * d, "{s}");
        assert_eq!(k.euler_characteristic(), 1 + if d % 2 == 1 { 1 } else { -1 }, "{s}");
        assert!(k.is_flag(), "{s}");
    }
}

#[test]
fn prime_families_are_3_spheres_and_match_formula() {
    for n in 8..=26 {
        let spec = best_flag_3sphere(n).unwrap();
        let k = spec.build().unwrap();
        assert_eq!(verify_sphere(&k).verdict, Verdict::CertifiedSphere, "{spec}");
        assert_eq!(alpha(&k.skeleton_graph()), (n + 1).div_ceil(6), "{spec}");
    }
}

#[test]
fn diagonals_added_only_between_layers() {
    assert!(prism_diagonals(1).is_empty());
    assert_eq!(prism_diagonals(3).len(), 4);
    let w = build_w4_prime(3).unwrap();
    let g = w.skeleton_graph();
    assert_eq!(g.edge_count(), w_graph(4, 3).unwrap().edge_count() + 4);
}

#[test]
fn join_family_dimensions() {
    let k = join_upper_family(8, 40).unwrap();
    assert_eq!(k.num_vertices(), 40);
    assert_eq!(k.dim(), 7);
    assert!(alpha(&k.skeleton_graph()) <= 4);
    let k = join_upper_family(7, 20).unwrap();
    assert_eq!((k.num_vertices(), k.dim()), (20, 6));
    assert_eq!(alpha(&k.skeleton_graph()), 3);
}

#[test]
fn polygon_suspension_alpha() {
    assert_eq!(alpha(&polygon_suspension(4, 12).unwrap().skeleton_graph()), 4);
    assert_eq!(alpha(&polygon_suspension(5, 14).unwrap().skeleton_graph()), 4);
}

#[test]
fn neighborly_sizes() {
    for m in 6..=9 {
        let c = neighborly_subdivided(4, m).unwrap();
        let f = cyclic_boundary(4, m).unwrap().facets().len();
        assert_eq!(f, m * (m - 3) / 2);
        assert_eq!(c.num_vertices(), m + f);
        assert_eq!(verify_sphere(&cyclic_boundary(4, m).unwrap()).verdict, Verdict::CertifiedSphere);
    }
}
