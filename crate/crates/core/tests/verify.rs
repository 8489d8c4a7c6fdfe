use flag_spheres::constructions::{build_w, build_w4_prime, crosspolytope, polygon, polygon_suspension};
use flag_spheres::verify::{
    betti_mod2, bistellar_reduce, is_pseudomanifold, verify_sphere, verify_sphere_with, Verdict, VerifyOptions,
};
use flag_spheres::Complex;

fn sphere_betti(dim: usize) -> Vec<usize> {
    let mut b = vec![0; dim + 1];
    b[0] = 1;
    b[dim] += 1;
    b
}

#[test]
fn crosspolytopes_are_certified() {
    for d in 1..=5 {
        let c = crosspolytope(d).unwrap();
        let cert = verify_sphere(&c);
        assert_eq!(cert.verdict, Verdict::CertifiedSphere, "cross({d}): {}", cert.reason);
        assert_eq!(cert.evidence.betti_mod2, sphere_betti(d - 1));
        let chi = if d % 2 == 1 { 2 } else { 0 };
        assert_eq!(cert.evidence.euler_characteristic, chi);
    }
}

#[test]
fn subdivisions_stay_certified() {
    for base in [crosspolytope(3).unwrap(), crosspolytope(4).unwrap(), polygon(7).unwrap()] {
        let f = base.facets()[0].clone();
        let e = base.stellar_subdivide_edge(f[0], f[1], "m").unwrap();
        let t = base.stellar_subdivide_facet(&f, "m").unwrap();
        for k in [e, t] {
            assert_eq!(verify_sphere(&k).verdict, Verdict::CertifiedSphere);
        }
    }
}

#[test]
fn layered_spheres_reduce_to_a_simplex() {
    for k in [build_w(3, 5).unwrap(), build_w4_prime(4).unwrap()] {
        let r = bistellar_reduce(&k, 10_000, 0).unwrap();
        assert_eq!(r.complex.num_vertices() as isize, k.dim() + 2);
        assert_eq!(r.complex.facets().len() as isize, k.dim() + 2);
        assert!(!r.trace.is_empty());
    }
    assert!(is_pseudomanifold(&build_w4_prime(3).unwrap()).is_ok());
}

#[test]
fn homology_only_mode() {
    let c = crosspolytope(4).unwrap();
    let cert = verify_sphere_with(&c, &VerifyOptions::homology_only());
    assert_eq!(cert.verdict, Verdict::HomologySphere);
    assert_eq!(cert.evidence.bistellar_trace_len, None);
    // Above the certification ceiling the best answer is homological.
    assert_eq!(verify_sphere(&crosspolytope(6).unwrap()).verdict, Verdict::HomologySphere);
}

#[test]
fn non_spheres_are_rejected() {
    let torus: Vec<Vec<String>> = {
        // 7-vertex torus.
        let mut f = Vec::new();
        for i in 0..7 {
            for (a, b) in [(1, 3), (2, 3)] {
                let mut t = vec![i, (i + a) % 7, (i + b) % 7];
                t.sort();
                f.push(t.iter().map(|v| format!("t{v}")).collect());
            }
        }
        f
    };
    let torus = Complex::from_facets(&torus).unwrap();
    assert_eq!(betti_mod2(&torus), vec![1, 2, 1]);
    assert_eq!(verify_sphere(&torus).verdict, Verdict::NotSphere);

    let two = crosspolytope(3).unwrap().relabel(|l| format!("{l}'")).unwrap();
    let mut facets = crosspolytope(3).unwrap().labeled_facets();
    facets.extend(two.labeled_facets());
    let disjoint = Complex::from_facets(&facets).unwrap();
    assert!(is_pseudomanifold(&disjoint).is_err());
    assert_eq!(verify_sphere(&disjoint).verdict, Verdict::NotSphere);

    let ball = Complex::from_facets(&[vec!["a", "b", "c"], vec!["a", "c", "d"]]).unwrap();
    assert_eq!(verify_sphere(&ball).verdict, Verdict::NotSphere);
}

#[test]
fn verdict_is_deterministic() {
    let k = polygon_suspension(4, 13).unwrap();
    let a = verify_sphere(&k);
    let b = verify_sphere(&k);
    assert_eq!(a, b);
    assert_eq!(a.verdict, Verdict::CertifiedSphere);
}
