mod common;

use gmst::datasets::{generate, read_csv, write_csv, ManifoldKind, SwissRoll, SyntheticSpec};
use gmst::PointCloud;
use proptest::prelude::*;

use common::rel_err;

#[test]
fn hyperplane_embedding_is_isometric() {
    let sample = generate(&SyntheticSpec::new(ManifoldKind::Hyperplane, 3, 7, 200, 1).with_scale(2.5)).unwrap();
    for i in 0..50 {
        for j in 150..200 {
            let truth = sample.analytic_geodesic(i, j).unwrap();
            assert!(rel_err(sample.cloud.distance(i, j), truth) < 1e-9);
        }
    }
}

#[test]
fn swiss_roll_parameters_can_be_recovered_from_the_embedding() {
    let roll = SwissRoll::default();
    let sample = generate(&SyntheticSpec::new(ManifoldKind::SwissRoll, 2, 3, 500, 2)).unwrap();
    let recovered: Vec<[f64; 2]> = sample
        .cloud
        .points()
        .map(|p| {
            let t = p[0].hypot(p[2]);
            [SwissRoll::arc_length(t) - SwissRoll::arc_length(roll.t_min), p[1]]
        })
        .collect();
    for i in 0..500 {
        let param = sample.param(i);
        assert!((0.0..=roll.spiral_length()).contains(&param[0]));
        assert!((0.0..=roll.height).contains(&param[1]));
        assert!((recovered[i][0] - param[0]).abs() < 1e-9 * roll.spiral_length());
        assert!((recovered[i][1] - param[1]).abs() < 1e-12);
    }
    for i in 0..100 {
        let j = 499 - i;
        let d = ((recovered[i][0] - recovered[j][0]).powi(2) + (recovered[i][1] - recovered[j][1]).powi(2)).sqrt();
        assert!(rel_err(d, sample.analytic_geodesic(i, j).unwrap()) < 1e-9);
    }
}

#[test]
fn ground_truth_entropies() {
    let spec = |kind, m, d| SyntheticSpec::new(kind, m, d, 10, 0);
    assert_eq!(spec(ManifoldKind::Hyperplane, 2, 3).ground_truth_entropy(), Some(0.0));
    let roll = spec(ManifoldKind::SwissRoll, 2, 3).ground_truth_entropy().unwrap();
    assert!(rel_err(roll, SwissRoll::default().area().ln()) < 1e-12);
    let sphere = spec(ManifoldKind::Sphere, 2, 3).ground_truth_entropy().unwrap();
    assert!(rel_err(sphere, (4.0 * std::f64::consts::PI).ln()) < 1e-12);
    let scaled = spec(ManifoldKind::Hypercube, 3, 4).with_scale(2.0).ground_truth_entropy().unwrap();
    assert!(rel_err(scaled, 3.0 * 2f64.ln()) < 1e-12);
    assert_eq!(spec(ManifoldKind::ConformalFishbowl, 2, 3).ground_truth_entropy(), None);
}

#[test]
fn generator_rejects_unsupported_shapes() {
    for (kind, m, d) in [
        (ManifoldKind::SwissRoll, 3, 4),
        (ManifoldKind::Hypercube, 4, 3),
        (ManifoldKind::Sphere, 3, 3),
        (ManifoldKind::Hyperplane, 1, 3),
    ] {
        assert!(generate(&SyntheticSpec::new(kind, m, d, 100, 0)).is_err(), "{kind} m={m} d={d}");
    }
}

#[test]
fn csv_errors_name_the_location() {
    let err = read_csv("1,2\n3\n".as_bytes(), b',').unwrap_err().to_string();
    assert!(err.contains("line 2"), "{err}");
    let err = read_csv("1,2\n3,x\n".as_bytes(), b',').unwrap_err().to_string();
    assert!(err.contains("line 2") && err.contains("column 2"), "{err}");
    assert!(read_csv("1,2\n".as_bytes(), b',').is_err());
    let with_header = read_csv("x,y\n1,2\n3,4\n".as_bytes(), b',').unwrap();
    assert_eq!(with_header.len(), 2);
}

proptest! {
    #[test]
    fn csv_round_trip_is_exact(
        rows in prop::collection::vec(prop::collection::vec(-1e6f64..1e6, 3), 2..30),
        tab in any::<bool>(),
    ) {
        let delimiter = if tab { b'\t' } else { b',' };
        let cloud = PointCloud::from_rows(&rows).unwrap();
        let mut buf = Vec::new();
        write_csv(&cloud, &mut buf, delimiter).unwrap();
        let back = read_csv(buf.as_slice(), delimiter).unwrap();
        prop_assert_eq!(back, cloud);
    }
}
