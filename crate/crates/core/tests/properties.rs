mod common;

use common::*;
use proptest::prelude::*;
use proptest::sample::select;
use yolk::decision::trace_sides_match;
use yolk::geometry::{
    classify_point, critical_hyperplane, hyperplane_side, tangent_order, tangent_vertices, Location, Side,
};
use yolk::{
    choose_k, decide, decide_bruteforce, decide_with_trace, lp_min_radius, sweep_events, sweep_profile, yolk,
    yolk_bruteforce, EventKind, Line, Metric, NormTag, Point, PointSet, PolygonParams,
};

fn point(range: f64) -> impl Strategy<Value = Point> {
    (-range..range, -range..range).prop_map(|(x, y)| Point::new(x, y))
}

fn params(ks: &'static [usize], r_max: f64, spread: f64) -> impl Strategy<Value = PolygonParams> {
    (select(ks), 0.0..r_max, -spread..spread, -spread..spread)
        .prop_map(|(k, r, x, y)| PolygonParams::new(k, r, x, y).unwrap())
}

fn point_set(max_n: usize, range: f64) -> impl Strategy<Value = PointSet> {
    prop::collection::vec(point(range), 1..=max_n).prop_filter_map("duplicate points", |v| PointSet::new(v).ok())
}

const KS: &[usize] = &[3, 4, 7, 12];
const KS_WIDE: &[usize] = &[3, 4, 5, 6, 7, 12, 31];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn classification_matches_edge_tests(p in point(3.0), params in params(KS_WIDE, 2.0, 1.0)) {
        let margins = edge_margins(p, &params);
        let worst = margins.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        prop_assume!(params.r > 1e-6 && worst.abs() > 1e-9);
        let expected = if worst > 0.0 { Location::Outside } else { Location::Inside };
        prop_assert_eq!(classify_point(p, &params).unwrap(), expected);
    }

    #[test]
    fn tangent_order_matches_numeric_angles(
        p in point(4.0),
        q in point(4.0),
        params in params(KS_WIDE, 1.5, 0.5),
    ) {
        prop_assume!(params.r > 1e-3);
        let far = |s: Point| edge_margins(s, &params).into_iter().fold(f64::NEG_INFINITY, f64::max) > 1e-6;
        prop_assume!(far(p) && far(q) && p.distance(q) > 1e-6);
        let Some(expected) = numeric_order(p, q, &params) else { return Ok(()) };
        match tangent_order(p, q, &params) {
            Ok(got) => prop_assert!(is_rotation(&got.order, &expected), "{:?} vs {:?}", got, expected),
            // Region boundaries are measure zero; the numeric oracle must then be near a tie.
            Err(e) => prop_assert!(false, "unexpected error {e}"),
        }
    }

    #[test]
    fn gradient_hyperplane_sign_is_the_above_test(
        g in -5.0..5.0f64,
        v in point(1.0),
        p in point(5.0),
        r in 0.0..3.0f64,
        x in -2.0..2.0f64,
        y in -2.0..2.0f64,
    ) {
        // Above the line of gradient g through (x, y) + r v.
        let ax = x + r * v.x;
        let ay = y + r * v.y;
        let direct = p.y - (ay + g * (p.x - ax));
        prop_assume!(direct.abs() > 1e-9);
        let h = critical_hyperplane(g, v, p);
        let side = hyperplane_side(&h, &PolygonParams { k: 4, r, x, y });
        prop_assert_eq!(side, if direct > 0.0 { Side::Above } else { Side::Below });
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2_000))]

    #[test]
    fn tangent_lines_support_the_polygon(p in point(4.0), params in params(KS_WIDE, 2.0, 0.5)) {
        let margins = edge_margins(p, &params);
        prop_assume!(params.r > 1e-3 && margins.iter().all(|m| m.abs() > 1e-9));
        prop_assume!(margins.iter().any(|&m| m > 0.0));
        let pair = tangent_vertices(p, &params).unwrap();
        let k = params.k;
        // Visible edges are exactly entry, entry + 1, ..., exit - 1.
        let visible: Vec<usize> = (0..k).filter(|&j| margins[j] > 0.0).collect();
        let mut run = Vec::new();
        let mut j = pair.entry;
        while j != pair.exit {
            run.push(j);
            j = (j + 1) % k;
        }
        run.sort_unstable();
        prop_assert_eq!(run, visible);
    }

    #[test]
    fn sweep_orders_two_points_like_tangent_order(
        p in point(4.0),
        q in point(4.0),
        params in params(KS_WIDE, 1.5, 0.5),
    ) {
        prop_assume!(params.r > 1e-3);
        let far = |s: Point| edge_margins(s, &params).into_iter().fold(f64::NEG_INFINITY, f64::max) > 1e-6;
        prop_assume!(far(p) && far(q) && p.distance(q) > 1e-6);
        prop_assume!(numeric_order(p, q, &params).is_some());
        let set = PointSet::new(vec![p, q]).unwrap();
        let events = sweep_events(&set, &params).unwrap();
        use yolk::geometry::TangentId::*;
        let ids: Vec<_> = events
            .iter()
            .map(|e| match (e.point_index, e.kind) {
                (0, EventKind::Enter) => PEntry,
                (0, EventKind::Exit) => PExit,
                (_, EventKind::Enter) => QEntry,
                (_, EventKind::Exit) => QExit,
            })
            .collect();
        let expected = tangent_order(p, q, &params).unwrap().order;
        prop_assert!(is_rotation(&ids, &expected), "{:?} vs {:?}", ids, expected);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1_000))]

    #[test]
    fn decide_matches_bruteforce(points in point_set(16, 2.0), params in params(KS, 2.5, 1.0)) {
        prop_assert_eq!(
            decide(&params, &points).unwrap(),
            decide_bruteforce(&params, &points).unwrap()
        );
    }

    #[test]
    fn decide_is_monotone_in_radius(
        points in point_set(16, 2.0),
        params in params(KS, 2.0, 1.0),
        grow in 0.0..2.0f64,
    ) {
        if decide(&params, &points).unwrap() {
            prop_assert!(decide(&params.with_radius(params.r + grow), &points).unwrap());
        }
    }

    #[test]
    fn feasible_set_is_convex(
        points in point_set(16, 2.0),
        a in params(&[4], 2.5, 1.0),
        b in params(&[4], 2.5, 1.0),
    ) {
        if decide(&a, &points).unwrap() && decide(&b, &points).unwrap() {
            let mid = PolygonParams::new(4, 0.5 * (a.r + b.r), 0.5 * (a.x + b.x), 0.5 * (a.y + b.y)).unwrap();
            prop_assert!(decide(&mid, &points).unwrap());
        }
    }

    #[test]
    fn sweep_counter_is_conserved(points in point_set(32, 2.0), params in params(KS, 2.0, 1.0)) {
        let profile = sweep_profile(&params, &points).unwrap();
        let direct = points.iter().filter(|p| p.y - params.y - params.r > 1e-12).count() as i64;
        prop_assert_eq!(profile.initial, direct);
        prop_assert!(profile.after_groups.iter().all(|&c| c >= 0));
        if let Some(&last) = profile.after_groups.last() {
            prop_assert_eq!(last, profile.initial);
        }
        prop_assert_eq!(profile.event_count % 2, 0);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn traced_sides_reproduce_and_pin_the_verdict(
        points in point_set(16, 2.0),
        params in params(KS, 2.0, 1.0),
        nudges in prop::collection::vec((-1.0..1.0f64, -1.0..1.0f64, -1.0..1.0f64), 10),
    ) {
        prop_assume!(params.r > 1e-3);
        let trace = decide_with_trace(&params, &points).unwrap();
        prop_assert!(trace_sides_match(&trace.comparisons, &params));
        for (dr, dx, dy) in nudges {
            let scale = 1e-4;
            let moved = PolygonParams::new(
                params.k,
                params.r + scale * dr.abs(),
                params.x + scale * dx,
                params.y + scale * dy,
            ).unwrap();
            if trace_sides_match(&trace.comparisons, &moved) {
                prop_assert_eq!(decide(&moved, &points).unwrap(), trace.verdict);
            }
        }
    }

    #[test]
    fn oracle_radius_scales(points in point_set(10, 2.0), c in 0.1..10.0f64) {
        prop_assume!(points.len() >= 2);
        let scaled = points.map(|p| p * c).unwrap();
        for norm in [NormTag::Euclidean, NormTag::Diamond, NormTag::Square] {
            let a = yolk_bruteforce(&points, norm).unwrap().radius;
            let b = yolk_bruteforce(&scaled, norm).unwrap().radius;
            prop_assert!((b - c * a).abs() <= 1e-7 * (1.0 + c * a), "{norm:?}: {b} vs {}", c * a);
        }
    }

    #[test]
    fn lp_solution_is_feasible_and_minimal(
        raw in prop::collection::vec((-1.0..1.0f64, -1.0..1.0f64, -2.0..2.0f64), 1..8),
        norm in select(&[NormTag::Euclidean, NormTag::Diamond, NormTag::Square][..]),
    ) {
        let lines: Vec<Line> = raw.iter().filter_map(|&(a, b, c)| Line::new(a, b, c)).collect();
        prop_assume!(!lines.is_empty());
        let sol = lp_min_radius(&lines, norm).unwrap();
        prop_assert!(sol.max_violation(&lines, norm) <= 1e-9);
        prop_assert!(sol.active_constraints.len() <= 3);
        if sol.radius > 1e-7 {
            let shrunk = yolk::LpSolution { radius: sol.radius - 1e-7, ..sol.clone() };
            prop_assert!(shrunk.max_violation(&lines, norm) > 0.0);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn lp_agrees_with_grid_search(
        raw in prop::collection::vec((-1.0..1.0f64, -1.0..1.0f64, -1.0..1.0f64), 2..6),
        norm in select(&[NormTag::Euclidean, NormTag::Diamond, NormTag::Square][..]),
    ) {
        let lines: Vec<Line> = raw.iter().filter_map(|&(a, b, c)| Line::new(a, b, c)).collect();
        prop_assume!(lines.len() >= 2);
        let sol = lp_min_radius(&lines, norm).unwrap();
        // Smallest radius needed over a grid around the optimum.
        let half = 2.0;
        let steps = 200;
        let cell = 2.0 * half / steps as f64;
        let need = |c: Point| {
            lines.iter()
                .map(|l| (l.a * c.x + l.b * c.y - l.c).abs() / norm.support(l.a, l.b))
                .fold(0.0, f64::max)
        };
        let mut grid_best = f64::INFINITY;
        for i in 0..=steps {
            for j in 0..=steps {
                let c = Point::new(sol.center.x - half + i as f64 * cell, sol.center.y - half + j as f64 * cell);
                grid_best = grid_best.min(need(c));
            }
        }
        // `need` is Lipschitz with constant at most 1 / min support (≥ 1/√2).
        let lipschitz = std::f64::consts::SQRT_2;
        prop_assert!(sol.radius <= grid_best + 1e-9);
        prop_assert!(grid_best - sol.radius <= 2.0 * cell * lipschitz);
    }

    #[test]
    fn choose_k_meets_the_secant_bound(eps in 1e-3..10.0f64) {
        let k = choose_k(eps).unwrap();
        prop_assert!(k >= 3);
        prop_assert!(1.0 / (std::f64::consts::PI / k as f64).cos() <= 1.0 + eps);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn solver_matches_oracle(points in point_set(12, 2.0)) {
        prop_assume!(points.len() >= 4);
        let oracle = yolk_bruteforce(&points, NormTag::Diamond).unwrap().radius;
        let got = yolk(&points, Metric::L1, None, 1e-7).unwrap();
        prop_assert!((got.radius - oracle).abs() <= 1e-5 * (1.0 + oracle), "{} vs {oracle}", got.radius);

        let oracle_inf = yolk_bruteforce(&points, NormTag::Square).unwrap().radius;
        let got_inf = yolk(&points, Metric::Linf, None, 1e-7).unwrap();
        prop_assert!((got_inf.radius - oracle_inf).abs() <= 1e-5 * (1.0 + oracle_inf));
    }

    #[test]
    fn l2_result_meets_every_limiting_line(points in point_set(10, 2.0), eps in select(&[0.5, 0.1][..])) {
        prop_assume!(points.len() >= 3);
        let res = yolk(&points, Metric::L2Approx, Some(eps), 1e-7).unwrap();
        let params = PolygonParams::new(res.k_used, res.radius, res.center.x, res.center.y).unwrap();
        prop_assert!(decide(&params, &points).unwrap());
        for line in yolk::limiting_median_lines(&points).unwrap() {
            prop_assert!(line.signed_distance(res.center).abs() <= res.radius + 1e-9);
        }
        let r2 = yolk_bruteforce(&points, NormTag::Euclidean).unwrap().radius;
        prop_assert!(r2 - 1e-5 <= res.radius && res.radius <= (1.0 + eps) * r2 + 1e-5);
    }

    #[test]
    fn yolk_is_translation_equivariant(
        points in point_set(10, 2.0),
        t in point(5.0),
    ) {
        let tol = 1e-7;
        let a = yolk(&points, Metric::L1, None, tol).unwrap();
        let b = yolk(&points.map(|p| p + t).unwrap(), Metric::L1, None, tol).unwrap();
        prop_assert!((a.radius - b.radius).abs() <= 10.0 * tol * (1.0 + a.radius));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn oracle_radius_matches_dense_direction_sampling(
        points in point_set(12, 2.0),
        norm in select(&[NormTag::Euclidean, NormTag::Diamond, NormTag::Square][..]),
    ) {
        prop_assume!(points.len() >= 2);
        let sol = yolk_bruteforce(&points, norm).unwrap();
        let sampled = sampled_required_radius(&points, sol.center, norm, 20_000);
        // Sampling can only miss the worst direction, by O(step^2) for smooth
        // pieces and O(step) at kinks.
        prop_assert!(sampled <= sol.radius + 1e-9, "{sampled} > {}", sol.radius);
        prop_assert!(sampled >= sol.radius - 1e-3 * (1.0 + sol.radius), "{sampled} << {}", sol.radius);
    }

    #[test]
    fn oracle_dominates_the_limiting_line_lp(
        points in point_set(12, 2.0),
        norm in select(&[NormTag::Euclidean, NormTag::Diamond, NormTag::Square][..]),
    ) {
        prop_assume!(points.len() >= 3);
        let exact = yolk_bruteforce(&points, norm).unwrap().radius;
        let limiting = lp_min_radius(&yolk::limiting_median_lines(&points).unwrap(), norm).unwrap().radius;
        prop_assert!(exact >= limiting - 1e-9);
    }
}
