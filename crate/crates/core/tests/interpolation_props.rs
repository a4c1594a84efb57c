use pickbody::complex::ComplexPoint;
use pickbody::interpolator::*;
use pickbody::invariants::{c_star_disc, d_value, solvable_via_d};
use pickbody::minkowski::{Ray, DEFAULT_BAND};
use pickbody::moebius::{boundary_sup_probe, pseudo_distance, DiscMap};
use pickbody::pick::{diagnose, InterpolationProblem};
use pickbody::sampling;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn solutions_interpolate_and_respect_the_degree_law() {
    let mut rng = ChaCha8Rng::seed_from_u64(201);
    let (mut interior, mut boundary) = (0, 0);
    for _ in 0..300 {
        let n = rng.random_range(1..=6);
        let ray = sampling::ray(&mut rng, n, 0.9);
        let w = sampling::boundary_tuple(&ray).unwrap();
        let p = if rng.random_bool(0.5) {
            InterpolationProblem::new(ray.nodes().clone(), w.clone()).unwrap()
        } else {
            let s = rng.random_range(0.1..0.99);
            InterpolationProblem::new(ray.nodes().clone(), w.iter().map(|&v| v * s).collect()).unwrap()
        };
        let r = central_solve(&p).unwrap();
        assert!(r.max_residual() <= 1e-9, "residual {}", r.max_residual());
        match r.classification {
            Classification::InteriorCentral => {
                interior += 1;
                assert!(boundary_sup_probe(&r.interpolant, 256) < 1.0);
            }
            Classification::BoundaryUnique => {
                boundary += 1;
                let degree = r.interpolant.blaschke_degree(1e-12).unwrap();
                assert!(degree < n);
                assert_eq!(minimal_degree(p.nodes(), p.targets(), DEFAULT_BAND).unwrap(), degree);
            }
            Classification::Constant => {}
        }
    }
    assert!(interior > 50 && boundary > 50);
}

#[test]
fn boundary_data_attains_d() {
    let mut rng = ChaCha8Rng::seed_from_u64(202);
    for _ in 0..200 {
        let n = rng.random_range(2..=6);
        let ray = sampling::ray(&mut rng, n, 0.9);
        let w = sampling::boundary_tuple(&ray).unwrap();
        let wray = Ray::new(ray.nodes().clone(), w.clone()).unwrap();
        for i in 0..n {
            for j in i + 1..n {
                if (w[i] - w[j]).norm() < 1e-9 {
                    continue;
                }
                let (d, _, _) = d_value(&wray, i, j).unwrap();
                assert!((pseudo_distance(w[i], w[j]).unwrap() - d).abs() <= 1e-8);
            }
        }
        let via = solvable_via_d(&InterpolationProblem::new(ray.nodes().clone(), w).unwrap(), DEFAULT_BAND).unwrap();
        assert!(via.solvable && via.equality_pair.is_some());
    }
}

#[test]
fn solvability_criteria_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(203);
    for _ in 0..1000 {
        let n = rng.random_range(1..=5);
        let p = sampling::problem(&mut rng, n, 0.95);
        let via = solvable_via_d(&p, DEFAULT_BAND).unwrap();
        if via.mu.is_some_and(|mu| (mu - 1.0).abs() <= DEFAULT_BAND) {
            continue;
        }
        assert_eq!(via.solvable, diagnose(&p, None).unwrap().solvable);
    }
}

fn disc_point() -> impl Strategy<Value = ComplexPoint> {
    (0.0..0.9f64, -3.2..3.2f64).prop_map(|(r, t)| ComplexPoint::from_polar(r.sqrt(), t))
}

proptest! {
    #[test]
    fn two_point_d_equals_c_star(a in disc_point(), b in disc_point(), x in disc_point(), y in disc_point()) {
        prop_assume!((a - b).norm() > 1e-3 && (x - y).norm() > 1e-6);
        let ray = Ray::from_points(vec![a, b], vec![x, y]).unwrap();
        let (d, _, _) = d_value(&ray, 0, 1).unwrap();
        prop_assert!((d - c_star_disc(a, b).unwrap()).abs() < 1e-10);
    }

    #[test]
    fn central_solution_is_a_self_map(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.random_range(2..=5);
        let ray = sampling::ray(&mut rng, n, 0.9);
        let s = rng.random_range(0.05..0.95);
        let w: Vec<_> = sampling::boundary_tuple(&ray).unwrap().iter().map(|&v| v * s).collect();
        let r = central_solve(&InterpolationProblem::new(ray.nodes().clone(), w).unwrap()).unwrap();
        for _ in 0..20 {
            let l = sampling::disc_point(&mut rng, 1.0);
            prop_assert!(r.interpolant.value_at(l).norm() <= 1.0 + 1e-12);
        }
    }
}
