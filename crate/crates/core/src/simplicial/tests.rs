use proptest::prelude::*;

use super::*;
use crate::classify::classify;
use crate::gallery;
use crate::hamspace::stratify;

fn octahedron_boundary() -> OrderedComplex {
    let facets: Vec<Vec<usize>> = (0..8).map(|m: usize| (0..3).map(|i| 2 * i + ((m >> i) & 1)).collect()).collect();
    OrderedComplex::from_facets(6, facets)
}

fn kunneth(a: &HomologyProfile, b: &HomologyProfile) -> HomologyProfile {
    let mut out = vec![0; a.betti().len() + b.betti().len()];
    for (i, x) in a.betti().iter().enumerate() {
        for (j, y) in b.betti().iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    HomologyProfile::from_betti(&out)
}

#[test]
fn boundary_spheres() {
    let s0 = simplex_boundary_sphere(1).unwrap();
    assert_eq!(s0.f_vector(), vec![2]);
    let s2 = simplex_boundary_sphere(3).unwrap();
    assert_eq!(s2.f_vector(), vec![4, 6, 4]);
    assert_eq!(s2.homology(), HomologyProfile::from_betti(&[1, 0, 1]));
    assert_eq!(simplex_boundary_sphere(4).unwrap().homology(), HomologyProfile::from_betti(&[1, 0, 0, 1]));
    assert!(simplex_boundary_sphere(0).is_err());
    assert_eq!(homology(&OrderedComplex::empty(0)), HomologyProfile::default());
}

#[test]
fn surfaces() {
    for g in 0..4u32 {
        let s = surface_complex(g);
        assert_eq!(s.homology(), HomologyProfile::surface(g), "genus {g}");
        assert!(!s.homology().has_torsion());
        if g > 0 {
            assert_eq!(s.vertex_count(), 4 * g as usize + 3);
        }
        // Closed pseudomanifold: every edge on exactly two triangles.
        for e in s.simplices(1) {
            let n = s.simplices(2).iter().filter(|t| e.iter().all(|v| t.contains(v))).count();
            assert_eq!(n, 2, "genus {g} edge {e:?}");
        }
    }
}

#[test]
fn real_projective_plane_torsion() {
    // Six-vertex RP^2.
    let facets = [
        [0, 1, 3], [0, 1, 5], [0, 2, 4], [0, 2, 5], [0, 3, 4],
        [1, 2, 3], [1, 2, 4], [1, 4, 5], [2, 3, 5], [3, 4, 5],
    ];
    let h = OrderedComplex::from_facets(6, facets).homology();
    assert_eq!(h.betti(), &[1, 0]);
    assert_eq!(h.torsion()[1], vec![num_bigint::BigInt::from(2)]);
}

#[test]
fn products() {
    let edge = simplex(1);
    let sq = product(&edge, &edge);
    assert_eq!(sq.f_vector(), vec![4, 5, 2]);
    let s0 = simplex_boundary_sphere(1).unwrap();
    assert_eq!(product(&s0, &s0).f_vector(), vec![4]);
    let s2 = simplex_boundary_sphere(3).unwrap();
    let p = product(&s2, &s2);
    assert_eq!(p.homology(), HomologyProfile::from_betti(&[1, 0, 2, 0, 1]));
    assert_eq!(p.len() as u128, estimate_product_size(&s2, &s2));
    // Projections of every simplex land in simplices.
    for s in p.iter() {
        let a: Vec<usize> = s.iter().map(|v| v / 4).collect::<BTreeSet<_>>().into_iter().collect();
        let b: Vec<usize> = s.iter().map(|v| v % 4).collect::<BTreeSet<_>>().into_iter().collect();
        assert!(s2.contains(&a) && s2.contains(&b));
    }
}

#[test]
fn delannoy_numbers() {
    let table: Vec<u128> = (0..5).map(|n| delannoy(n, n)).collect();
    assert_eq!(table, vec![1, 3, 13, 63, 321]);
    assert_eq!(delannoy(2, 0), 1);
    assert_eq!(delannoy(1, 2), 5);
}

#[test]
fn kunneth_on_spheres_and_surfaces() {
    let models = [
        simplex_boundary_sphere(1).unwrap(),
        simplex_boundary_sphere(2).unwrap(),
        simplex_boundary_sphere(3).unwrap(),
        surface_complex(1),
    ];
    for a in &models {
        for b in &models {
            assert_eq!(product(a, b).homology(), kunneth(&a.homology(), &b.homology()));
        }
    }
}

#[test]
fn joins() {
    let s0 = simplex_boundary_sphere(1).unwrap();
    let c = join(&s0, &s0);
    assert_eq!(c.f_vector(), vec![4, 4]);
    assert_eq!(c.homology(), HomologyProfile::sphere(1));
    let cone = join(&simplex(0), &surface_complex(1));
    assert!(cone.homology().is_acyclic());
    let s5 = join(&octahedron_boundary(), &simplex_boundary_sphere(3).unwrap());
    assert_eq!(s5.homology(), HomologyProfile::from_betti(&[1, 0, 0, 0, 0, 1]));
}

#[test]
fn polytope_triangulations() {
    let cp1 = stratify(&gallery::sphere_product(&[vec![1]], 1).unwrap()).unwrap();
    let ends: Vec<usize> = cp1.lattice.faces_of_dim(0).map(|f| f.id).collect();
    let (full, sub) = boundary_subcomplex_of_polytope(&cp1, &ends).unwrap();
    assert_eq!((full.f_vector(), sub.f_vector()), (vec![2, 1], vec![2]));

    let rect = stratify(&gallery::s2_cubed()).unwrap();
    let (full, sub) = boundary_subcomplex_of_polytope(&rect, &rect.short_faces).unwrap();
    assert!(sub.is_subcomplex_of(&full));
    assert_eq!(full.euler_characteristic(), 1);
    assert_eq!(sub.f_vector(), vec![4, 2]);
    assert_eq!(full.labels().unwrap()[0], "(-2, -1)");

    let oct = stratify(&gallery::gr2c4()).unwrap();
    let proper: Vec<usize> = oct.lattice.proper_faces().map(|f| f.id).collect();
    let (full, sub) = boundary_subcomplex_of_polytope(&oct, &proper).unwrap();
    assert!(full.homology().is_acyclic());
    assert_eq!(sub.homology(), HomologyProfile::sphere(2));
    assert_eq!(sub.f_vector(), vec![6, 12, 8]);

    let top = rect.lattice.top_id();
    assert!(matches!(boundary_subcomplex_of_polytope(&rect, &[top]), Err(Error::NotDownwardClosed(_))));
}

#[test]
fn crushing_interval_fibers() {
    let interval = simplex(1);
    let s2 = simplex_boundary_sphere(3).unwrap();
    let ends = OrderedComplex::from_facets(2, [[0], [1]]);
    let one = OrderedComplex::from_facets(2, [[0]]);
    assert_eq!(collapse_fibers(&interval, &ends, &s2).unwrap().homology(), HomologyProfile::sphere(3));
    assert!(collapse_fibers(&interval, &one, &s2).unwrap().homology().is_acyclic());
    let none = OrderedComplex::empty(2);
    let q = collapse_fibers(&interval, &none, &s2).unwrap();
    assert_eq!(q.cell_count(), product(&interval, &s2).len());
    assert_eq!(q.homology(), HomologyProfile::sphere(2));
    assert_eq!(collapse_fibers(&interval, &interval, &s2).unwrap().homology(), HomologyProfile::point());
    let stray = OrderedComplex::from_facets(2, [[0, 1]]);
    assert!(matches!(collapse_fibers(&ends, &stray, &s2), Err(Error::NotSubcomplex(_))));
}

#[test]
fn crushing_a_circle_of_fibers() {
    // Each uncrushed edge becomes a suspended S^2 joining the two crushed
    // arcs: S^1 v S^3 v S^3.
    let square = OrderedComplex::from_facets(4, [[0, 1], [1, 2], [2, 3], [0, 3]]);
    let sub = OrderedComplex::from_facets(4, [[0, 1], [2, 3]]);
    let s2 = simplex_boundary_sphere(3).unwrap();
    let q = collapse_fibers(&square, &sub, &s2).unwrap();
    assert_eq!(q.homology(), HomologyProfile::from_betti(&[1, 1, 0, 2]));
    assert_eq!(q.homology().euler_characteristic(), q.euler_characteristic());
}

fn verify(spec: &crate::hamspace::HamSpec) -> VerificationResult {
    verify_report(&classify(spec).unwrap(), DEFAULT_MAX_SIMPLICES).unwrap()
}

#[test]
fn verify_gallery_reports() {
    let r = verify(&gallery::gr2c4());
    assert!(r.passed(), "{r:?}");
    assert_eq!(r.checks.len(), 2);
    assert!(r.checks.iter().all(|c| c.computed == HomologyProfile::sphere(5)));
    assert_eq!(verify(&gallery::s2xs2_diag()).checks[0].computed, HomologyProfile::sphere(3));
    assert!(verify(&gallery::cp2_s1()).checks[0].computed.is_acyclic());
    assert_eq!(verify(&gallery::surface_times_sphere(1)).checks[0].computed, HomologyProfile::surface(1));
    let r = verify(&gallery::s2_cubed());
    assert!(r.passed());
    assert_eq!(r.checks[0].computed, HomologyProfile::from_betti(&[1, 0, 0, 1]));
    let cp1 = verify(&gallery::sphere_product(&[vec![1]], 1).unwrap());
    assert!(cp1.passed());
}

#[test]
fn verify_skips() {
    let r = verify(&gallery::cp5_t3());
    assert_eq!(r.status, VerificationStatus::Skipped("StratificationOnly: complexity 2".into()));
    let r = verify_report(&classify(&gallery::gr2c4()).unwrap(), 10).unwrap();
    assert!(matches!(r.status, VerificationStatus::Skipped(ref s) if s.starts_with("size cap")));
    assert!(r.estimated_simplices > 10);
}

fn arb_complex() -> impl Strategy<Value = OrderedComplex> {
    prop::collection::vec(prop::collection::btree_set(0usize..6, 1..5), 1..8)
        .prop_map(|fs| OrderedComplex::from_facets(6, fs.into_iter().map(|s| s.into_iter().collect::<Vec<_>>())))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn euler_characteristic_matches(k in arb_complex()) {
        prop_assert_eq!(k.homology().euler_characteristic(), k.euler_characteristic());
    }

    #[test]
    fn join_with_s0_suspends(k in arb_complex()) {
        let s0 = simplex_boundary_sphere(1).unwrap();
        prop_assert_eq!(join(&s0, &k).homology(), k.homology().suspend(1));
    }

    #[test]
    fn empty_collapse_is_product(k in arb_complex()) {
        let s0 = simplex_boundary_sphere(1).unwrap();
        let q = collapse_fibers(&k, &OrderedComplex::empty(6), &s0).unwrap();
        prop_assert_eq!(q.homology(), product(&k, &s0).homology());
        let full = collapse_fibers(&k, &k, &s0).unwrap();
        prop_assert_eq!(full.homology(), k.homology());
    }

    #[test]
    fn crushing_over_contractible_base_is_join(sub in prop::collection::vec(prop::collection::btree_set(0usize..5, 1..4), 0..5)) {
        // Base is a full simplex, so the quotient is the join of the crushed set with the fiber.
        let base = simplex(4);
        let sub = OrderedComplex::from_facets(5, sub.into_iter().map(|s| s.into_iter().collect::<Vec<_>>()));
        let fiber = simplex_boundary_sphere(2).unwrap();
        let q = collapse_fibers(&base, &sub, &fiber).unwrap();
        let expected = if sub.is_empty() { fiber.homology() } else { join(&sub, &fiber).homology() };
        prop_assert_eq!(q.homology(), expected);
    }
}
