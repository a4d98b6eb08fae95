mod common;

use alphadom::bounds::{
    caro_roditty, classical_bound, cor1_bound, cor2_bound, dunbar_degree_bounds,
    dunbar_edge_bounds, optimal_p, thm2_bound, thm3_bound, BoundInputs,
};
use alphadom::construct::run_trials;
use alphadom::generators::{circulant, complete, cycle, gnp, petersen, random_regular};
use alphadom::io::{parse_dimacs, parse_edge_list, to_dimacs, to_edge_list, IndexBase};
use alphadom::{
    alpha_degrees, best_of_trials, bound_report, construct_alpha, construct_alpha_rate,
    derandomize_alpha, exact_number, lower_bound, verify, Alpha, ConstructionKind,
    ConstructionParams, Graph, Mode,
};
use common::*;
use proptest::prelude::*;

const ALPHA_GRID: [(u64, u64); 5] = [(1, 10), (1, 4), (1, 2), (3, 4), (1, 1)];

fn small_graph() -> impl Strategy<Value = alphadom::Graph> {
    (1usize..=10, 0.0f64..=1.0, any::<u64>()).prop_map(|(n, p, s)| gnp(n, p, s).unwrap())
}

fn any_alpha() -> impl Strategy<Value = Alpha> {
    (1u64..=12, 1u64..=12).prop_map(|(a, b)| Alpha::new(a.min(b), a.max(b)).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn formats_round_trip(n in 1usize..40, p in 0.0f64..0.6, seed in any::<u64>()) {
        let g = gnp(n, p, seed).unwrap();
        let d = to_dimacs(&g);
        prop_assert_eq!(&parse_dimacs(&d).unwrap().graph, &g);
        let e = to_edge_list(&g);
        let back = parse_edge_list(&e, IndexBase::Zero).unwrap().graph;
        prop_assert_eq!(to_edge_list(&back), e);
    }

    #[test]
    fn generated_graphs_are_simple(n in 2usize..60, p in 0.0f64..1.0, seed in any::<u64>()) {
        let g = gnp(n, p, seed).unwrap();
        prop_assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.m());
        for v in 0..n {
            prop_assert!(!g.has_edge(v, v));
            for &u in g.neighbors(v) {
                prop_assert!(g.has_edge(u, v));
            }
        }
        prop_assert_eq!(g, gnp(n, p, seed).unwrap());
    }

    #[test]
    fn alpha_requirement_is_monotone(g in small_graph(), a1 in any_alpha(), a2 in any_alpha(), mask in any::<u16>()) {
        let (lo, hi) = if a1 <= a2 { (a1, a2) } else { (a2, a1) };
        let set: Vec<usize> = (0..g.n()).filter(|&v| mask >> v & 1 == 1).collect();
        if verify(&g, &set, Mode::Alpha(hi)).unwrap().valid {
            prop_assert!(verify(&g, &set, Mode::Alpha(lo)).unwrap().valid);
        }
    }

    #[test]
    fn rate_sets_are_alpha_sets(g in small_graph(), a in any_alpha(), mask in any::<u16>()) {
        let set: Vec<usize> = (0..g.n()).filter(|&v| mask >> v & 1 == 1).collect();
        let rate = verify(&g, &set, Mode::AlphaRate(a)).unwrap();
        let open = verify(&g, &set, Mode::Alpha(a)).unwrap();
        prop_assert_eq!(rate.valid, set_satisfies(&g, &set, Mode::AlphaRate(a)));
        prop_assert_eq!(open.valid, set_satisfies(&g, &set, Mode::Alpha(a)));
        if rate.valid {
            prop_assert!(open.valid);
        }
        for (_, d) in open.deficiencies {
            prop_assert!(d.required > d.achieved);
        }
    }

    #[test]
    fn log_degrees_match_exact(g in small_graph(), a in any_alpha()) {
        let d = alpha_degrees(&g, a);
        let (eo, ec) = d.exact_logs().unwrap();
        if d.open_is_zero() {
            prop_assert_eq!(eo, f64::NEG_INFINITY);
        } else {
            prop_assert!((d.log_open.exp() - eo.exp()).abs() <= 1e-9 * eo.exp());
        }
        if !d.closed_is_zero() {
            prop_assert!((d.log_closed.exp() - ec.exp()).abs() <= 1e-9 * ec.exp());
        }
    }

    #[test]
    fn bound_shape(n in 2usize..80, p in 0.0f64..1.0, seed in any::<u64>(), a in any_alpha()) {
        let g = gnp(n, p, seed).unwrap();
        let i = BoundInputs::new(&g, a);
        for v in [thm2_bound(&i), cor1_bound(&i), thm3_bound(&i), cor2_bound(&i), caro_roditty(&i)]
            .into_iter()
            .flatten()
            .chain([classical_bound(&i)])
        {
            prop_assert!((0.0..=1.0).contains(&v), "{v}");
        }
        if let Some(p) = optimal_p(&i) {
            prop_assert!((0.0..1.0).contains(&p));
        }
        if let (Some(t2), Some(t3)) = (thm2_bound(&i), thm3_bound(&i)) {
            prop_assert!(t3 >= t2 - 1e-15);
        }
        if let (Some(c1), Some(c2)) = (cor1_bound(&i), cor2_bound(&i)) {
            prop_assert!(c2 >= c1 - 1e-15);
        }
    }

    #[test]
    fn exact_matches_brute_force(g in small_graph(), a in any_alpha(), k in 1usize..4) {
        let mut modes = vec![Mode::Dom, Mode::KDom(k), Mode::Alpha(a), Mode::AlphaRate(a)];
        if g.min_degree() + 1 >= k {
            modes.push(Mode::KTuple(k));
        }
        for mode in modes {
            let r = exact_number(&g, mode).unwrap();
            prop_assert_eq!(r.value, brute_min(&g, mode), "{}", mode);
            prop_assert!(set_satisfies(&g, &r.witness, mode));
            prop_assert!(lower_bound(&g, mode) <= r.value);
        }
    }

    #[test]
    fn constructions_verify(g in small_graph(), a in any_alpha(), seed in any::<u64>(), greedy in any::<bool>()) {
        let params = ConstructionParams {
            trials: 8,
            master_seed: seed,
            p_override: g.is_edgeless().then_some(0.5),
            greedy_repair: greedy,
            ..Default::default()
        };
        for i in 0..4 {
            let o = construct_alpha(&g, a, &params, i).unwrap();
            prop_assert!(set_satisfies(&g, &o.set, Mode::Alpha(a)));
            prop_assert_eq!(o.size, o.set.len());
            let o = construct_alpha_rate(&g, a, &params, i).unwrap();
            prop_assert!(set_satisfies(&g, &o.set, Mode::AlphaRate(a)));
            prop_assert!(o.a.iter().all(|v| !o.b.contains(v)));
        }
    }
}

#[test]
fn generalization_on_named_graphs() {
    for g in [cycle(7).unwrap(), petersen(), complete(6).unwrap()] {
        let a = Alpha::new(1, g.max_degree() as u64).unwrap();
        let i = BoundInputs::new(&g, a);
        let rel = |x: f64, y: f64| (x - y).abs() / y;
        assert!(rel(thm2_bound(&i).unwrap(), caro_roditty(&i).unwrap()) < 1e-12);
        assert!(rel(cor1_bound(&i).unwrap(), classical_bound(&i)) < 1e-12);
        assert!(rel(cor2_bound(&i).unwrap(), classical_bound(&i)) < 1e-12);
    }
}

#[test]
fn thousand_regular_report() {
    let g = circulant(2001, &(1..=500).collect::<Vec<_>>()).unwrap();
    assert!(g.degrees().iter().all(|&d| d == 1000));
    let r = bound_report(&g, Alpha::new(1, 10).unwrap());
    let thm2 = r.fraction("thm2").unwrap();
    let dunbar = r.fraction("dunbar_degree_upper").unwrap();
    assert!(thm2 < 0.305 && dunbar < 0.527 && thm2 < dunbar);
    // 60-digit reference values
    assert!((thm2 - 0.304_765_526_268_382_7).abs() < 1e-12);
    assert!((r.fraction("cor1").unwrap() - 0.363_103_732_684_819_2).abs() < 1e-12);
    assert!((r.fraction("thm3").unwrap() - 0.304_845_878_892_448_9).abs() < 1e-12);
    assert!((r.fraction("cor2").unwrap() - 0.363_219_187_517_693_5).abs() < 1e-12);
    let p = optimal_p(&r.inputs).unwrap();
    assert!((p - 0.303_993_900_881_333_2).abs() < 1e-12);
}

/// Sandwich on seeded random graphs with n <= 16 over the full alpha grid.
#[test]
fn random_graph_sandwich() {
    let mut graphs = random_graphs_min_degree_one(12, 6, 16, 4242);
    graphs.push(gnp(14, 0.4, 3).unwrap());
    graphs.push(Graph::new(9, [(0, 1), (1, 2), (3, 4)]).unwrap());
    for g in &graphs {
        let n = g.n() as f64;
        let mut prev = (0, 0);
        for (p, q) in ALPHA_GRID {
            let a = Alpha::new(p, q).unwrap();
            let r = bound_report(g, a);
            let ga = exact_number(g, Mode::Alpha(a)).unwrap().value as f64;
            let gr = exact_number(g, Mode::AlphaRate(a)).unwrap().value as f64;
            assert!(r.alpha_lower_max <= ga + 1e-9, "{a}");
            assert!(
                ga <= r.alpha_upper_min + 1e-9,
                "{a}: {ga} > {}",
                r.alpha_upper_min
            );
            assert!(ga <= gr && gr <= r.rate_upper_min + 1e-9);
            assert!(r.rate_upper_min <= n);
            assert!(prev.0 <= ga as usize && prev.1 <= gr as usize);
            prev = (ga as usize, gr as usize);
        }
    }
}

#[test]
fn dunbar_bounds_bracket_exact_on_named_graphs() {
    let a = Alpha::new(1, 2).unwrap();
    let c5 = cycle(5).unwrap();
    let i = BoundInputs::new(&c5, a);
    let (dl, du) = dunbar_degree_bounds(&i).unwrap();
    let (el, eu) = dunbar_edge_bounds(&i).unwrap();
    let exact = exact_number(&c5, Mode::Alpha(a)).unwrap().value as f64;
    assert_eq!(exact, 2.0);
    assert!(dl * 5.0 <= exact && el <= exact && exact <= du * 5.0 && exact <= eu);
}

/// Instance-wise regression: on these graphs the random-set bound grows
/// with alpha across the grid (not a general theorem).
#[test]
fn thm2_monotone_on_fixed_instances() {
    for g in [
        cycle(5).unwrap(),
        cycle(8).unwrap(),
        petersen(),
        circulant(101, &(1..=10).collect::<Vec<_>>()).unwrap(),
    ] {
        let values: Vec<f64> = ALPHA_GRID
            .iter()
            .map(|&(p, q)| thm2_bound(&BoundInputs::new(&g, Alpha::new(p, q).unwrap())).unwrap())
            .collect();
        assert!(
            values.windows(2).all(|w| w[0] <= w[1] + 1e-15),
            "{values:?}"
        );
    }
}

#[test]
fn cycle_mean_size_matches_expectation() {
    let g = cycle(5).unwrap();
    let a = Alpha::new(1, 2).unwrap();
    let params = ConstructionParams {
        trials: 10_000,
        master_seed: 99,
        ..Default::default()
    };
    let sizes: Vec<f64> = run_trials(&g, a, ConstructionKind::Alpha, &params)
        .unwrap()
        .iter()
        .map(|o| o.size as f64)
        .collect();
    let n = sizes.len() as f64;
    let mean = sizes.iter().sum::<f64>() / n;
    let sd = (sizes.iter().map(|s| (s - mean).powi(2)).sum::<f64>() / (n - 1.0)).sqrt();
    // the estimator is tight here: E|D| = 5(p + (1-p)^3) = 3.0754991...
    assert!(
        mean <= 3.075_499_102_701_247 + 3.0 * sd / n.sqrt(),
        "{mean}"
    );
}

#[test]
fn best_of_trials_cycle_and_petersen() {
    let a = Alpha::new(1, 2).unwrap();
    let params = ConstructionParams {
        trials: 200,
        master_seed: 7,
        ..Default::default()
    };
    let best = best_of_trials(&cycle(5).unwrap(), a, ConstructionKind::Alpha, &params).unwrap();
    assert!(best.size <= 3);

    let g = petersen();
    let params = ConstructionParams {
        trials: 500,
        ..params
    };
    let exact = exact_number(&g, Mode::Alpha(a)).unwrap().value;
    let best = best_of_trials(&g, a, ConstructionKind::Alpha, &params).unwrap();
    assert!(best.size >= exact);
    let rate_exact = exact_number(&g, Mode::AlphaRate(a)).unwrap().value;
    let best = best_of_trials(&g, a, ConstructionKind::Rate, &params).unwrap();
    assert!(best.size >= rate_exact);
}

#[test]
fn best_of_trials_ignores_thread_count() {
    let g = random_regular(60, 5, 3).unwrap();
    let a = Alpha::new(1, 2).unwrap();
    let params = ConstructionParams {
        trials: 100,
        master_seed: 11,
        ..Default::default()
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap();
    let single = pool.install(|| best_of_trials(&g, a, ConstructionKind::Rate, &params).unwrap());
    let multi = best_of_trials(&g, a, ConstructionKind::Rate, &params).unwrap();
    assert_eq!(single, multi);
}

#[test]
fn derandomization_brackets() {
    for (g, a) in [
        (cycle(5).unwrap(), Alpha::new(1, 2).unwrap()),
        (petersen(), Alpha::ONE),
        (petersen(), Alpha::new(1, 2).unwrap()),
        (complete(6).unwrap(), Alpha::new(2, 3).unwrap()),
    ] {
        let d = derandomize_alpha(&g, a).unwrap();
        let bound = thm2_bound(&BoundInputs::new(&g, a)).unwrap() * g.n() as f64;
        let exact = exact_number(&g, Mode::Alpha(a)).unwrap().value;
        assert!(exact <= d.set.len() && d.set.len() as f64 <= bound);
        assert!(d.initial_expectation <= bound + 1e-9);
    }
}

#[test]
fn derandomization_on_regular_graphs() {
    for seed in 0..5 {
        let g = random_regular(80, 6, seed).unwrap();
        for (p, q) in [(1, 4), (1, 2), (3, 4)] {
            let a = Alpha::new(p, q).unwrap();
            let d = derandomize_alpha(&g, a).unwrap();
            let bound = thm2_bound(&BoundInputs::new(&g, a)).unwrap() * 80.0;
            assert!(d.set.len() as f64 <= bound);
            assert!(set_satisfies(&g, &d.set, Mode::Alpha(a)));
        }
    }
}
