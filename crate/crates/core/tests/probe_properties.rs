use infcone::cone::{cone_at_infinity, CoordinateSplit};
use infcone::ideal::Ideal;
use infcone::poly::{parse_polynomial, vars};
use infcone::probe::{
    line_alignment, pair_ratios, region_fit, sample_hypersurface, tangent_directions, Hypersurface, NeighborGraph,
    CLUSTER_THRESHOLD, DEFAULT_K,
};
use proptest::prelude::*;

#[test]
fn geodesics_never_beat_the_chord() {
    for f in ["y - x^2", "x*y - 1", "y^3 - x^2 + 1"] {
        let f = parse_polynomial(f, &["x", "y"]).unwrap();
        let cloud = sample_hypersurface(&f, (0.5, 30.0), 300, 5).unwrap();
        let surface = Hypersurface::new(&f).unwrap();
        let graph = NeighborGraph::build(&cloud, Some(&surface), DEFAULT_K);
        let nodes: Vec<usize> = (0..cloud.len()).step_by(7).collect();
        for r in pair_ratios(&cloud, &graph, &nodes) {
            assert!(r >= 1.0 - 1e-12, "{r}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn fitted_regions_contain_their_clouds(
        coeffs in prop::collection::vec(-4i64..=4, 1..=4),
        seed in any::<u64>(),
    ) {
        let body: String = coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| format!(" {} {}*x^{}", if *c < 0 { '+' } else { '-' }, c.abs(), i + 1))
            .collect();
        let f = parse_polynomial(&format!("y{body}"), &["x", "y"]).unwrap();
        let cloud = sample_hypersurface(&f, (1.0, 1e4), 200, seed).unwrap();
        let split = CoordinateSplit::identity(&vars(&["x", "y"]), 1);
        let region = region_fit(&cloud, &split).unwrap();
        prop_assert!(region.b >= 1.0);
        prop_assert_eq!(region.coverage(&cloud), 1.0);
    }
}

fn same_clusters(a: &[infcone::probe::Direction], b: &[infcone::probe::Direction]) -> bool {
    a.len() == b.len()
        && a.iter().all(|u| b.iter().any(|v| line_alignment(&u.vector, &v.vector) >= CLUSTER_THRESHOLD))
}

#[test]
fn rescaled_scales_give_the_same_direction_clusters() {
    let ideal = Ideal::parse(&["x", "y"], &["x*y - 1"]).unwrap();
    let cone = cone_at_infinity(&ideal).unwrap();
    let f = &ideal.generators()[0];
    let scales = [1e2, 1e3, 1e4];
    let base = tangent_directions(f, &scales, 60, 2, &cone).unwrap();
    for lambda in [0.5, 3.0] {
        let scaled: Vec<f64> = scales.iter().map(|s| s * lambda).collect();
        let other = tangent_directions(f, &scaled, 60, 2, &cone).unwrap();
        assert!(same_clusters(&base.clusters, &other.clusters), "lambda {lambda}");
    }
}

#[test]
fn cone_residuals_shrink_with_scale() {
    for (names, f) in [(["x", "y"], "y - x^2"), (["x", "y"], "x*y - 1"), (["x", "y"], "y^2 - x^3 - x^2")] {
        let ideal = Ideal::parse(&names, &[f]).unwrap();
        let cone = cone_at_infinity(&ideal).unwrap();
        let res = tangent_directions(&ideal.generators()[0], &[1e1, 1e2, 1e3, 1e4, 1e5], 40, 8, &cone).unwrap();
        let r = res.residuals();
        assert!(r.windows(2).all(|w| w[1] <= w[0]), "{f}: {r:?}");
    }
}
