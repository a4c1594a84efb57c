use pickbody::complex::c;
use pickbody::invariants::d_value;
use pickbody::minkowski::Ray;
use pickbody::polydisc::*;
use pickbody::sampling;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn certificates_sit_inside_independent_bounds() {
    let mut rng = ChaCha8Rng::seed_from_u64(301);
    let mut certified = 0;
    for m in [2, 3] {
        let mut instances = 0;
        while instances < 8 {
            let Some(points) = sampling::analytic_disc_points(&mut rng, m) else { continue };
            instances += 1;
            let alpha = sampling::boundary_alpha(&mut rng);
            let Some(cert) = (0..m).find_map(|k| graph_disc_certificate(&points, &alpha, 0, 2, k, DEFAULT_CERTIFICATE_TOL).ok())
            else {
                continue;
            };
            certified += 1;
            assert!(cert.certified && cert.gap.abs() <= 1e-6);
            assert!(cert.lower <= cert.upper + 1e-8);
            let upper = delta_upper(&points, &alpha, 0, 2, &DeltaOptions::default()).unwrap();
            let lower = d_lower_polydisc(&points, &alpha, 0, 2).unwrap();
            assert!(lower <= cert.upper + 1e-8 && cert.upper <= upper.value + 1e-8, "{lower} {} {}", cert.upper, upper.value);
        }
    }
    assert!(certified >= 8);
}

#[test]
fn delta_matches_disc_value_on_a_graph_geodesic() {
    let lambdas = [c(0.1, -0.2), c(0.6, 0.1), c(-0.3, 0.5)];
    // λ ↦ (λ, 0.8 λ²) is a graph disc through these points
    let points: Vec<_> = lambdas.iter().map(|&l| PolyPoint::new(vec![l, l * l * 0.8]).unwrap()).collect();
    let alpha = [c(0.2, 0.0), c(-0.5, 0.3), c(0.1, 0.7)];
    let ray = Ray::from_points(lambdas.to_vec(), alpha.to_vec()).unwrap();
    let (disc, _, _) = d_value(&ray, 1, 2).unwrap();
    let upper = delta_upper(&points, &alpha, 1, 2, &DeltaOptions::default()).unwrap();
    assert!((upper.value - disc).abs() <= 1e-6, "{} vs {disc}", upper.value);

    let id = Polynomial::identity();
    let sq = Polynomial::new(vec![c(0.0, 0.0), c(0.0, 0.0), c(0.8, 0.0)]);
    assert!(geodesic_body_check(&points, &lambdas, &[&id, &sq]).unwrap());
}

#[test]
fn grid_refinement_does_not_worsen_the_bound() {
    let lambdas = [c(0.0, 0.0), c(0.4, 0.3), c(-0.5, 0.2)];
    let points: Vec<_> = lambdas.iter().map(|&l| PolyPoint::new(vec![l * 0.9, l * l]).unwrap()).collect();
    let alpha = [c(0.0, 0.0), c(0.3, 0.0), c(0.0, 0.6)];
    let coarse = delta_upper(&points, &alpha, 0, 1, &DeltaOptions::default()).unwrap();
    let fine = delta_upper(&points, &alpha, 0, 1, &DeltaOptions { grid: 20, ..DeltaOptions::default() }).unwrap();
    assert!(fine.value <= coarse.value + 1e-9, "{} > {}", fine.value, coarse.value);
}
