use crwedge::continuation::{
    bounded_slab_scan, evaluate_extension, geometric_schedule, march, run, seed_quadrant, two_sided_fill,
    ContinuationError, ContinuationJob, Mode, ProbeGrid, SeedParams,
};
use crwedge::gallery::oracle;
use crwedge::Complex64;

#[test]
fn slabs_seed_and_fill_agree_on_good2s() {
    let o = oracle("good2s").unwrap();
    let sched = geometric_schedule(1.0, 4);
    let mut slabs = bounded_slab_scan(&o, 1, &sched, &ProbeGrid::default()).unwrap().slabs;
    slabs.extend(bounded_slab_scan(&o, 2, &sched, &ProbeGrid::default()).unwrap().slabs);
    assert!(slabs.iter().any(|s| s.axis == 1) && slabs.iter().any(|s| s.axis == 2));

    let seed = seed_quadrant(&o, &slabs, 0.1, &SeedParams::default()).unwrap();
    let atlas = two_sided_fill(&ContinuationJob::new("good2s", Mode::TwoSided, 0.2, 0.25, 64)).unwrap();
    let mut compared = 0;
    for p in &seed.points {
        if let Ok(e) = evaluate_extension(&atlas, p.center) {
            let exact = 1.0 / (3.0 - p.center[0] - p.center[1]);
            assert!((p.value - exact).norm() < 1e-7);
            assert!((e.value - exact).norm() < 1e-7);
            compared += 1;
        }
    }
    assert!(compared > 0);
}

#[test]
fn modes_and_failures() {
    let two = ContinuationJob::new("entire", Mode::TwoSided, 0.2, 0.25, 48);
    let atlas = run(&two).unwrap();
    assert_eq!(atlas.charts.len(), 1);
    assert!(matches!(
        march(&two),
        Err(ContinuationError::Mode { .. })
    ));
    let onesided_two = ContinuationJob::new("onesided", Mode::TwoSided, 0.2, 0.25, 48);
    assert!(matches!(two_sided_fill(&onesided_two), Err(ContinuationError::RadiusCollapse { .. })));
}

#[test]
fn march_extension_is_holomorphic_across_charts() {
    let atlas = march(&ContinuationJob::new("entire", Mode::OneSidedUp, 0.2, 0.25, 48)).unwrap();
    // Cauchy integral in z2 around a circle that crosses several charts
    let z1 = Complex64::new(0.3, 0.0);
    let center = Complex64::new(0.065, 0.2);
    let r = 0.1;
    let m = 64;
    let mut mean = Complex64::new(0.0, 0.0);
    let mut ids = std::collections::BTreeSet::new();
    for k in 0..m {
        let z2 = center + Complex64::from_polar(r, std::f64::consts::TAU * k as f64 / m as f64);
        let e = evaluate_extension(&atlas, [z1, z2]).unwrap();
        ids.insert(e.chart_id);
        mean += e.value / m as f64;
    }
    assert!(ids.len() >= 2);
    assert!((mean - (z1 * center).exp()).norm() < 1e-9);
}
