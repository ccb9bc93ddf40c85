//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits non-zero
//! if any criterion fails.
//!
//!     cargo test -p gmst --test acceptance -- --nocapture

mod common;

use std::process::Command;
use std::time::Instant;

use gmst::datasets::{generate, save_csv, ManifoldKind, SyntheticSpec};
use gmst::estimator::{
    approx_beta, estimate, linear_sizes, log_sizes, run_pipeline, BetaSource, EstimateOptions, EstimateReport,
    PipelineConfig, ResamplingPlan,
};
use gmst::geodesics::all_pairs_geodesics;
use gmst::matrix::{DenseMatrix, EuclideanView};
use gmst::mst::{gmst_length, mst_oracle};
use gmst::neighborhood::build_graph;
use gmst::{NeighborRule, PointCloud};
use rand::Rng;

use common::{floyd_warshall, rel_err, rng};

struct Outcome {
    pass: bool,
    detail: String,
}

fn criterion(id: u32, name: &str, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let out = f();
    println!(
        "ACCEPTANCE {id} {name}: {} ({}; {:.1}s)",
        if out.pass { "PASS" } else { "FAIL" },
        out.detail,
        start.elapsed().as_secs_f64()
    );
    out.pass
}

fn oracle_equivalence() -> Outcome {
    let mut r = rng(0xacce_0001);
    let mut worst = 0.0f64;
    let mut mismatches = 0;
    for case in 0..200 {
        let p = 3 + case % 5;
        let gamma = [0.5, 1.0, 2.0][case % 3];
        let mut upper = vec![0.0; p * p];
        for i in 0..p {
            for j in i + 1..p {
                upper[i * p + j] = r.gen_range(0.001..10.0);
            }
        }
        let w = DenseMatrix::from_fn(p, |i, j| if i < j { upper[i * p + j] } else { upper[j * p + i] });
        let fast = gmst_length(&w, gamma).unwrap().total_length;
        let slow = mst_oracle(&w, gamma).unwrap().total_length;
        let e = rel_err(fast, slow);
        worst = worst.max(e);
        if e > 1e-12 {
            mismatches += 1;
        }
    }
    Outcome {
        pass: mismatches == 0,
        detail: format!("200 matrices, {mismatches} mismatches, worst relative error {worst:.1e}"),
    }
}

fn apsp_correctness() -> Outcome {
    let mut r = rng(0xacce_0002);
    let mut bad = 0;
    for case in 0..100 {
        let n = r.gen_range(2..=50);
        let degree = r.gen_range(0.5..4.0);
        // integer weights make every path sum exact, so equality is bitwise
        let edges = common::random_sparse_edges(&mut r, n, degree, case % 2 == 0);
        let geo = all_pairs_geodesics(&common::to_graph(n, &edges));
        let oracle = floyd_warshall(n, &edges);
        let exact = case % 2 == 0;
        let ok = (0..n).all(|i| {
            (0..n).all(|j| match geo.get(i, j) {
                None => oracle[i][j].is_infinite(),
                Some(d) if exact => d == oracle[i][j],
                Some(d) => rel_err(d, oracle[i][j]) <= 1e-12,
            })
        });
        if !ok {
            bad += 1;
        }
    }
    Outcome {
        pass: bad == 0,
        detail: format!("100 graphs (integer weights compared bitwise, real weights to 1e-12), {bad} mismatches"),
    }
}

fn bhh_convergence() -> Outcome {
    let sizes = [512usize, 1024, 2048, 4096];
    let mut ratios = Vec::new();
    for &n in &sizes {
        let mut sum = 0.0;
        for seed in 0..10u64 {
            let mut r = rng(0xb11 ^ (seed << 16) ^ n as u64);
            let coords: Vec<f64> = (0..2 * n).map(|_| r.gen::<f64>()).collect();
            let cloud = PointCloud::new(n, 2, coords).unwrap();
            sum += gmst_length(&EuclideanView(&cloud), 1.0).unwrap().total_length / (n as f64).sqrt();
        }
        ratios.push(sum / 10.0);
    }
    let diffs: Vec<f64> = ratios.windows(2).map(|w| rel_err(w[0], w[1])).collect();
    let worst = diffs.iter().cloned().fold(0.0, f64::max);
    Outcome {
        pass: worst < 0.05,
        detail: format!(
            "L/sqrt(n) = {}; largest successive difference {:.2}%",
            ratios.iter().map(|x| format!("{x:.4}")).collect::<Vec<_>>().join(", "),
            100.0 * worst
        ),
    }
}

fn hypercube_config(seed: u64) -> PipelineConfig {
    let plan = ResamplingPlan::new(log_sizes(256, 2048, 8).unwrap(), 20, seed);
    PipelineConfig::new(NeighborRule::Knn(7), plan)
}

fn slope_recovery() -> Outcome {
    let mut pass = true;
    let mut parts = Vec::new();
    for m in [2usize, 3] {
        let target = (m as f64 - 1.0) / m as f64;
        let mut hits = 0;
        let mut worst = 0.0f64;
        for seed in 0..20u64 {
            let sample = generate(&SyntheticSpec::new(ManifoldKind::Hypercube, m, m + 1, 2048, 1000 + seed)).unwrap();
            let report = run_pipeline(&sample.cloud, &hypercube_config(seed)).unwrap();
            worst = worst.max((report.fit.a_hat - target).abs());
            if report.m_hat == m {
                hits += 1;
            }
        }
        let ok = worst <= 0.08 && hits >= 18;
        pass &= ok;
        parts.push(format!("m={m}: max |a-{target:.3}| = {worst:.3}, m_hat={m} in {hits}/20"));
    }
    Outcome { pass, detail: parts.join("; ") }
}

fn swiss_roll_dimension() -> Outcome {
    let mut hits = 0;
    let mut seen = Vec::new();
    for seed in 0..20u64 {
        let sample = generate(&SyntheticSpec::new(ManifoldKind::SwissRoll, 2, 3, 1000, 2000 + seed)).unwrap();
        let plan = ResamplingPlan::new(linear_sizes(100, 1000, 10).unwrap(), 20, seed);
        let report = run_pipeline(&sample.cloud, &PipelineConfig::new(NeighborRule::Knn(7), plan)).unwrap();
        if report.m_hat == 2 {
            hits += 1;
        }
        seen.push(report.m_hat);
    }
    Outcome {
        pass: hits >= 18,
        detail: format!("m_hat=2 in {hits}/20 seeds (estimates {seen:?})"),
    }
}

fn entropy_ground_truth() -> Outcome {
    let mut mc = Vec::new();
    let mut observed_bias = Vec::new();
    let mut predicted_bias = Vec::new();
    let approx = EstimateOptions {
        beta: BetaSource::Approx,
        ..Default::default()
    };
    for seed in 0..10u64 {
        let spec = SyntheticSpec::new(ManifoldKind::Hyperplane, 2, 3, 2048, 3000 + seed);
        let truth = spec.ground_truth_entropy().unwrap();
        let sample = generate(&spec).unwrap();
        let report = run_pipeline(&sample.cloud, &hypercube_config(seed)).unwrap();
        mc.push(report.entropy_nats() - truth);
        let alt = estimate(&report.curve, &report.fit, report.gamma, &approx).unwrap();
        observed_bias.push(alt.entropy_nats() - truth);
        let m = report.m_hat as f64;
        predicted_bias.push(m / report.gamma * (report.beta_value.ln() - approx_beta(report.m_hat, report.gamma).ln()));
    }
    let mean = |v: &[f64]| v.iter().sum::<f64>() / v.len() as f64;
    let (h_mc, obs, pred) = (mean(&mc), mean(&observed_bias), mean(&predicted_bias));
    let pass = h_mc.abs() <= 0.5 && (obs - pred).abs() <= 0.2;
    Outcome {
        pass,
        detail: format!(
            "Monte Carlo beta: mean H = {h_mc:.3} nats (tolerance 0.5); approx beta: bias {obs:.3} vs predicted {pred:.3}, gap {:.3} (tolerance 0.2)",
            (obs - pred).abs()
        ),
    }
}

fn geodesic_fidelity() -> Outcome {
    let sample = generate(&SyntheticSpec::new(ManifoldKind::SwissRoll, 2, 3, 1500, 7)).unwrap();
    let geo = all_pairs_geodesics(&build_graph(&sample.cloud, NeighborRule::Knn(7)).unwrap());
    let mut r = rng(0xacce_0007);
    let mut within = 0;
    let mut errors = Vec::new();
    for _ in 0..500 {
        let i = r.gen_range(0..1500);
        let mut j = r.gen_range(0..1500);
        while j == i {
            j = r.gen_range(0..1500);
        }
        let truth = sample.analytic_geodesic(i, j).unwrap();
        let err = geo.get(i, j).map_or(f64::INFINITY, |g| (g - truth).abs() / truth);
        if err <= 0.05 {
            within += 1;
        }
        errors.push(err);
    }
    errors.sort_by(f64::total_cmp);
    Outcome {
        pass: within >= 475,
        detail: format!(
            "{within}/500 pairs within 5% (need 475); median relative error {:.1}%",
            100.0 * errors[250]
        ),
    }
}

fn report_json(cloud: &PointCloud, config: &PipelineConfig) -> (EstimateReport, String) {
    let report = run_pipeline(cloud, config).unwrap();
    let json = report.to_json().unwrap();
    (report, json)
}

fn reports_close(a: &EstimateReport, b: &EstimateReport, tol: f64) -> bool {
    let lengths = |r: &EstimateReport| -> Vec<f64> {
        r.curve.entries.iter().flat_map(|e| e.trial_lengths.iter().copied()).collect()
    };
    let (la, lb) = (lengths(a), lengths(b));
    a.m_hat == b.m_hat
        && a.warnings == b.warnings
        && la.len() == lb.len()
        && la.iter().zip(&lb).all(|(x, y)| rel_err(*x, *y) <= tol)
        && (a.fit.a_hat - b.fit.a_hat).abs() <= tol
        && (a.entropy - b.entropy).abs() <= tol
}

fn invariance_suite() -> Outcome {
    let sample = generate(&SyntheticSpec::new(ManifoldKind::SwissRoll, 2, 3, 500, 8)).unwrap();
    let cloud = &sample.cloud;
    let plan = ResamplingPlan::new(linear_sizes(100, 500, 5).unwrap(), 10, 8);
    let config = PipelineConfig::new(NeighborRule::Knn(7), plan);
    let (base, base_json) = report_json(cloud, &config);
    let mut checks: Vec<(&str, bool)> = Vec::new();

    // reflections are exact in floating point, so the report must match bit for bit
    let reflected = cloud.map_points(3, |p, out| {
        out[0] = -p[0];
        out[1] = p[1];
        out[2] = -p[2];
    });
    checks.push(("reflection bit-identical", report_json(&reflected.unwrap(), &config).1 == base_json));

    let mut r = rng(0xacce_0008);
    let rot = common::random_rotation(&mut r, 3);
    let shift: Vec<f64> = (0..3).map(|_| r.gen_range(-5.0..5.0)).collect();
    let moved = cloud
        .map_points(3, |p, out| {
            for (k, o) in out.iter_mut().enumerate() {
                *o = (0..3).map(|c| rot[k][c] * p[c]).sum::<f64>() + shift[k];
            }
        })
        .unwrap();
    checks.push(("rotation+translation identical to 1e-9", reports_close(&base, &run_pipeline(&moved, &config).unwrap(), 1e-9)));

    for s in [2.0f64, 3.7] {
        let scaled = run_pipeline(&cloud.scaled(s).unwrap(), &config).unwrap();
        let shift = s.ln() * base.gamma;
        let all_shifted = base.curve.entries.iter().zip(&scaled.curve.entries).all(|(a, b)| {
            a.trial_lengths
                .iter()
                .zip(&b.trial_lengths)
                .all(|(x, y)| (y.ln() - x.ln() - shift).abs() <= 1e-12)
        });
        let entropy_shift = (scaled.entropy - base.entropy - base.m_hat as f64 * s.ln()).abs() <= 1e-9;
        checks.push((
            if s == 2.0 { "scale 2 shifts log-lengths by gamma log s" } else { "scale 3.7 shifts log-lengths by gamma log s" },
            all_shifted && scaled.m_hat == base.m_hat && entropy_shift,
        ));
    }

    let conformal = config.clone().with_conformal(true);
    let (c_base, c_json) = report_json(cloud, &conformal);
    for s in [2.0f64, 0.25] {
        checks.push(("conformal dyadic scale bit-identical", report_json(&cloud.scaled(s).unwrap(), &conformal).1 == c_json));
    }
    let c_scaled = run_pipeline(&cloud.scaled(3.7).unwrap(), &conformal).unwrap();
    checks.push(("conformal scale 3.7 identical to 1e-9", reports_close(&c_base, &c_scaled, 1e-9)));

    let failed: Vec<&str> = checks.iter().filter(|c| !c.1).map(|c| c.0).collect();
    Outcome {
        pass: failed.is_empty(),
        detail: if failed.is_empty() {
            format!("{} checks passed", checks.len())
        } else {
            format!("failed: {}", failed.join(", "))
        },
    }
}

fn face_protocol_smoke() -> Outcome {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("faces.csv");
    let report = dir.path().join("report.toml");
    let stand_in = generate(&SyntheticSpec::new(ManifoldKind::Hyperplane, 6, 4096, 585, 9)).unwrap();
    save_csv(&stand_in.cloud, &input, b',').unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_gmst"))
        .args(["estimate", "--input"])
        .arg(&input)
        .args(["--k", "7", "--size-range", "100:585:26", "--trials", "25", "--fit-above", "500"])
        .args(["--beta-mode", "approx", "--log-base", "2", "--seed", "0", "--out"])
        .arg(&report)
        .output()
        .unwrap();
    let parsed = std::fs::read_to_string(&report).ok().and_then(|t| EstimateReport::from_text(&t).ok());
    match (out.status.success(), parsed) {
        (true, Some(r)) => Outcome {
            pass: true,
            detail: format!(
                "585x4096 CSV, 26 sizes x 25 trials, fit on {} sizes: m_hat = {}, H = {:.1} bits",
                r.fit.sizes.len(),
                r.m_hat,
                r.entropy
            ),
        },
        _ => Outcome {
            pass: false,
            detail: format!("exit {:?}: {}", out.status.code(), String::from_utf8_lossy(&out.stderr).trim()),
        },
    }
}

fn main() {
    // libtest-style flags such as --nocapture are accepted and ignored
    let results = [
        criterion(1, "MST oracle equivalence", oracle_equivalence),
        criterion(2, "APSP correctness", apsp_correctness),
        criterion(3, "BHH convergence", bhh_convergence),
        criterion(4, "hypercube slope recovery", slope_recovery),
        criterion(5, "swiss roll dimension", swiss_roll_dimension),
        criterion(6, "entropy at known ground truth", entropy_ground_truth),
        criterion(7, "geodesic fidelity", geodesic_fidelity),
        criterion(8, "invariance suite", invariance_suite),
        criterion(9, "face protocol smoke test", face_protocol_smoke),
    ];
    let failed = results.iter().filter(|ok| !**ok).count();
    println!("acceptance: {} passed, {failed} failed", results.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
