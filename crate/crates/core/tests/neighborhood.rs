mod common;

use gmst::neighborhood::{build_graph, NeighborRule};
use gmst::PointCloud;
use proptest::prelude::*;
use rand::Rng;

use common::rng;

fn random_cloud(seed: u64, n: usize, d: usize) -> PointCloud {
    let mut r = rng(seed);
    PointCloud::new(n, d, (0..n * d).map(|_| r.gen_range(-1.0..1.0)).collect()).unwrap()
}

fn pairs(cloud: &PointCloud, rule: NeighborRule) -> Vec<(usize, usize)> {
    build_graph(cloud, rule).unwrap().edges().iter().map(|e| (e.i, e.j)).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn knn_graphs_are_nested(seed in any::<u64>(), n in 5usize..40, k in 1usize..4) {
        let cloud = random_cloud(seed, n, 3);
        let small = pairs(&cloud, NeighborRule::Knn(k));
        let large = pairs(&cloud, NeighborRule::Knn(k + 1));
        prop_assert!(small.iter().all(|e| large.contains(e)));
    }

    #[test]
    fn epsilon_graphs_are_nested(seed in any::<u64>(), n in 3usize..40, r in 0.1f64..1.0) {
        let cloud = random_cloud(seed, n, 2);
        let small = pairs(&cloud, NeighborRule::Epsilon(r));
        let large = pairs(&cloud, NeighborRule::Epsilon(r * 1.5));
        prop_assert!(small.iter().all(|e| large.contains(e)));
    }

    #[test]
    fn knn_gives_every_vertex_at_least_k_neighbors(seed in any::<u64>(), n in 5usize..40, k in 1usize..4) {
        let cloud = random_cloud(seed, n, 2);
        let graph = build_graph(&cloud, NeighborRule::Knn(k)).unwrap();
        prop_assert!(graph.degrees().iter().all(|&deg| deg >= k));
    }

    #[test]
    fn conformal_weights_ignore_global_scale(seed in any::<u64>(), n in 5usize..30, e in -3i32..3) {
        // powers of two scale every distance exactly, so the rescaled weights match bitwise
        let cloud = random_cloud(seed, n, 3);
        let s = 2f64.powi(e);
        let a = build_graph(&cloud, NeighborRule::Knn(3)).unwrap();
        let b = build_graph(&cloud.scaled(s).unwrap(), NeighborRule::Knn(3)).unwrap();
        for (x, y) in a.edges().iter().zip(b.edges()) {
            prop_assert_eq!(x.weight * s, y.weight);
        }
        let (ra, rb) = (a.rescale_conformal().unwrap(), b.rescale_conformal().unwrap());
        prop_assert_eq!(ra.edges(), rb.edges());
    }

    #[test]
    fn conformal_weights_ignore_rigid_motions(seed in any::<u64>(), n in 5usize..30, s in 0.1f64..10.0) {
        let cloud = random_cloud(seed, n, 3);
        let mut r = rng(seed ^ 1);
        let rot = common::random_rotation(&mut r, 3);
        let moved = cloud
            .map_points(3, |p, out| {
                for (k, o) in out.iter_mut().enumerate() {
                    *o = (0..3).map(|c| rot[k][c] * p[c]).sum::<f64>() + 1.0;
                }
            })
            .unwrap()
            .scaled(s)
            .unwrap();
        let a = build_graph(&cloud, NeighborRule::Knn(3)).unwrap().rescale_conformal().unwrap();
        let b = build_graph(&moved, NeighborRule::Knn(3)).unwrap().rescale_conformal().unwrap();
        prop_assert_eq!(a.edges().len(), b.edges().len());
        for (x, y) in a.edges().iter().zip(b.edges()) {
            prop_assert_eq!((x.i, x.j), (y.i, y.j));
            prop_assert!((x.weight - y.weight).abs() <= 1e-10 * x.weight);
        }
    }
}

#[test]
fn rejects_bad_rules() {
    let cloud = random_cloud(1, 5, 2);
    assert!(build_graph(&cloud, NeighborRule::Knn(0)).is_err());
    assert!(build_graph(&cloud, NeighborRule::Knn(5)).is_err());
    assert!(build_graph(&cloud, NeighborRule::Epsilon(0.0)).is_err());
    assert!(build_graph(&cloud, NeighborRule::Epsilon(f64::NAN)).is_err());
}
