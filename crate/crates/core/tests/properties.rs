use std::collections::BTreeSet;

use ehrlatt_core::corpus::{self, random_polytope};
use ehrlatt_core::ehrhart::{interpolate, surface_from_ehrhart, volume_from_ehrhart};
use ehrlatt_core::facets::{surface_direct, volume_direct};
use ehrlatt_core::lattice::{count_points, lattice_points, PointClass};
use ehrlatt_core::linalg::{hnf_kernel_basis, lattice_coordinates, solve_cramer, Int, IntMatrix};
use ehrlatt_core::polytope::{affine_dimension, build_polytope, LatticePoint, Polytope};
use ehrlatt_core::reflexive::{dual_polytope, is_reflexive};
use ehrlatt_core::surface::surface_determinant;
use itertools::Itertools;
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn random(d: usize, seed: u64) -> Polytope {
    random_polytope(d, 2, &mut ChaCha8Rng::seed_from_u64(seed))
}

/// Carathéodory membership: `x` lies in conv(V) iff it lies in the hull of
/// some affinely independent (d+1)-subset, tested by barycentric coordinates.
fn in_hull_by_simplices(vertices: &[LatticePoint], x: &[Int]) -> bool {
    let d = x.len();
    vertices.iter().combinations(d + 1).any(|simplex| {
        // columns are the simplex vertices lifted by a trailing 1
        let m = IntMatrix::from_rows((0..=d).map(|r| {
            simplex
                .iter()
                .map(|v| if r < d { v[r].clone() } else { Int::from(1) })
                .collect::<Vec<_>>()
        }))
        .unwrap();
        let mut rhs = x.to_vec();
        rhs.push(Int::from(1));
        match solve_cramer(&m, &rhs) {
            Ok(lambda) => lambda.iter().all(|l| !l.is_negative()),
            Err(_) => false,
        }
    })
}

fn box_points(p: &Polytope, pad: i64) -> Vec<Vec<Int>> {
    let (lo, hi) = p.bounding_box();
    (0..p.dim())
        .map(|i| {
            let a: i64 = (&lo[i] - pad).try_into().unwrap();
            let b: i64 = (&hi[i] + pad).try_into().unwrap();
            (a..=b).map(Int::from).collect::<Vec<_>>()
        })
        .multi_cartesian_product()
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn facet_membership_matches_carath(d in 2usize..=3, seed in any::<u64>()) {
        let p = random(d, seed);
        for x in box_points(&p, 1) {
            prop_assert_eq!(p.contains(&x, false).unwrap(), in_hull_by_simplices(p.vertices(), &x));
        }
    }

    #[test]
    fn facets_are_well_formed(d in 2usize..=4, seed in any::<u64>()) {
        let p = random(d, seed);
        let mut seen = BTreeSet::new();
        for h in p.facets() {
            prop_assert!(seen.insert((h.normal().to_vec(), h.offset().clone())));
            let tight: Vec<&[Int]> = p.vertices().iter()
                .filter(|v| h.on_boundary(v)).map(|v| v.coords()).collect();
            prop_assert_eq!(affine_dimension(&tight), Some(d - 1));
            let g = h.normal().iter().fold(Int::zero(), |g, x| num_integer::Integer::gcd(&g, x));
            prop_assert_eq!(g, Int::from(1));
        }
        for v in p.vertices() {
            prop_assert!(p.facets().iter().all(|h| h.contains(v)));
            prop_assert!(p.facets().iter().filter(|h| h.on_boundary(v)).count() >= d);
        }
    }

    #[test]
    fn dilation_composes(d in 2usize..=3, seed in any::<u64>(), a in 1u64..4, b in 1u64..4) {
        let p = random(d, seed);
        let once = p.dilate(a * b).unwrap();
        let twice = p.dilate(a).unwrap().dilate(b).unwrap();
        prop_assert_eq!(once.vertices(), twice.vertices());
        prop_assert_eq!(once.facets(), twice.facets());
    }

    #[test]
    fn boundary_count_matches_on_facet_test(d in 2usize..=3, seed in any::<u64>()) {
        let p = random(d, seed).dilate(2).unwrap();
        let total = count_points(&p, false);
        let interior = count_points(&p, true);
        // independent boundary test: on at least one facet hyperplane
        let on_facet = box_points(&p, 0).into_iter()
            .filter(|x| p.contains(x, false).unwrap())
            .filter(|x| p.facets().iter().any(|h| h.on_boundary(x)))
            .count();
        prop_assert_eq!(total - interior, Int::from(on_facet));
        let classified = lattice_points(&p).iter().filter(|(_, c)| *c == PointClass::Boundary).count();
        prop_assert_eq!(classified, on_facet);
    }

    #[test]
    fn chart_coordinates_are_integral(d in 3usize..=4, seed in any::<u64>()) {
        let p = random(d, seed);
        for h in p.facets() {
            let chart = hnf_kernel_basis(h.normal()).unwrap();
            let on: Vec<&LatticePoint> = p.vertices().iter().filter(|v| h.on_boundary(v)).collect();
            for v in &on[1..] {
                prop_assert!(lattice_coordinates(&chart, &v.sub(on[0])).is_some());
            }
        }
    }

    #[test]
    fn three_surface_routes_agree(d in 2usize..=4, seed in any::<u64>()) {
        let p = random(d, seed);
        let e = interpolate(&p).unwrap();
        let det = surface_determinant(&p).unwrap();
        prop_assert_eq!(&det, &surface_from_ehrhart(&e));
        prop_assert_eq!(&det, &surface_direct(&p).unwrap());
        prop_assert_eq!(volume_from_ehrhart(&e), volume_direct(&p).unwrap());
        prop_assert!(det.is_positive());
    }
}

#[test]
fn duality_is_an_involution_on_reflexive_corpus() {
    let mut checked = 0;
    for d in 2..=4 {
        for p in [corpus::centered_cube(d), corpus::cross_polytope(d)] {
            assert!(is_reflexive(&p));
            let dual = dual_polytope(&p)
                .unwrap()
                .to_lattice_polytope()
                .unwrap()
                .unwrap();
            assert!(is_reflexive(&dual));
            let back = dual_polytope(&dual)
                .unwrap()
                .to_lattice_polytope()
                .unwrap()
                .unwrap();
            assert_eq!(back.vertices(), p.vertices());
            checked += 1;
        }
    }
    for (entry, reflexive) in corpus::fano_corpus() {
        if reflexive {
            let dual = dual_polytope(&entry.polytope).unwrap();
            let q = dual.to_lattice_polytope().unwrap().unwrap();
            let back = dual_polytope(&q)
                .unwrap()
                .to_lattice_polytope()
                .unwrap()
                .unwrap();
            assert_eq!(back.vertices(), entry.polytope.vertices(), "{}", entry.name);
            checked += 1;
        }
    }
    assert!(checked >= 6);
}

#[test]
fn offset_criterion_matches_dual_lattice_flag() {
    for (entry, reflexive) in corpus::fano_corpus() {
        let p = &entry.polytope;
        assert_eq!(is_reflexive(p), reflexive, "{}", entry.name);
        assert_eq!(
            dual_polytope(p).unwrap().is_lattice,
            reflexive,
            "{}",
            entry.name
        );
    }
}

#[test]
fn build_is_order_independent() {
    let p = random(3, 7);
    let mut pts = p.vertices().to_vec();
    pts.reverse();
    pts.push(pts[0].clone());
    assert_eq!(build_polytope(&pts, 3).unwrap().vertices(), p.vertices());
}
