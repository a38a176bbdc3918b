//! Invariants of the visibility engine, ranking strategies and generators.

mod common;

use common::{distinct_instance, pt, small_instance};
use proptest::prelude::*;
use unitsquares::factory::{lower_bound_instance, quadratic_instance, random_instance};
use unitsquares::format::{parse_graph, parse_instance, parse_ranking, serialize_graph, serialize_instance, serialize_ranking};
use unitsquares::geometry::{intersect, parse_rational, rat, uncovered_witness, Point, Rect};
use unitsquares::ranking::{lex_ranking, optimal_ranking, random_ranking, DEFAULT_CAP};
use unitsquares::verify::{exhaustive_min_edges, is_plane_embedding, max_edges_bound, uncovered_witness_subdivision};
use unitsquares::visibility::{
    forced_edges, obs1_blocked, pair_sees, visibility_graph, visibility_graph_with, Prefilter,
};
use unitsquares::{Instance, Ranking};

fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for rest in all_permutations(n - 1) {
        for slot in 0..=rest.len() {
            let mut p = rest.clone();
            p.insert(slot, n - 1);
            out.push(p);
        }
    }
    out
}

/// Visibility straight from the definition, using the subdivision oracle.
fn sees_by_definition(inst: &Instance, order: &[usize], s: usize, t: usize) -> bool {
    let region = intersect(&inst.body(order[s]), &inst.body(order[t]));
    let blockers: Vec<Rect> = order[s + 1..t].iter().map(|&j| inst.body(j)).collect();
    uncovered_witness_subdivision(&region, &blockers).is_some()
}

#[test]
fn row_of_three_by_definition() {
    let row = Instance::new(vec![pt(0, 0), pt(1, 0), pt(2, 0)]);
    let order = [0, 1, 2];
    let brute: Vec<(usize, usize)> = (0..3)
        .flat_map(|s| (s + 1..3).map(move |t| (s, t)))
        .filter(|&(s, t)| sees_by_definition(&row, &order, s, t))
        .collect();
    assert_eq!(brute, vec![(0, 1), (1, 2)]);
    assert_eq!(visibility_graph(&row, &Ranking::identity(3)).unwrap().edges(), &[(0, 1), (1, 2)]);
}

#[test]
fn row_of_three_forced_edges_over_both_blocker_orders() {
    let row = Instance::new(vec![pt(0, 0), pt(1, 0), pt(2, 0)]);
    // {0,2} has only square 1 as a possible blocker, and it always blocks.
    assert!(!sees_by_definition(&row, &[0, 1, 2], 0, 2));
    assert!(!sees_by_definition(&row, &[2, 1, 0], 0, 2));
    assert_eq!(forced_edges(&row), vec![(0, 1), (1, 2)]);
}

#[test]
fn row_of_three_optimum() {
    let row = Instance::new(vec![pt(0, 0), pt(1, 0), pt(2, 0)]);
    let counts: Vec<usize> = all_permutations(3)
        .into_iter()
        .map(|p| visibility_graph(&row, &Ranking::new(p).unwrap()).unwrap().edge_count())
        .collect();
    assert_eq!(counts.iter().min(), Some(&2));
    assert_eq!(optimal_ranking(&row, DEFAULT_CAP).unwrap().1, 2);
    assert_eq!(exhaustive_min_edges(&row, DEFAULT_CAP).unwrap(), 2);
}

#[test]
fn lower_bound_n6_forced_edges_have_private_witnesses() {
    let lb = lower_bound_instance(6, &rat(1, 16)).unwrap();
    let forced = forced_edges(&lb);
    assert!(forced.len() >= 8, "{forced:?}");
    for special in [4, 5] {
        for bunch in 0..4 {
            assert!(forced.contains(&(bunch, special)), "missing ({bunch}, {special})");
        }
    }
    for &(i, k) in &forced {
        let others: Vec<Rect> = (0..6).filter(|&j| j != i && j != k).map(|j| lb.body(j)).collect();
        let w = uncovered_witness(&intersect(&lb.body(i), &lb.body(k)), &others).unwrap();
        assert!(lb.body(i).contains(&w) && lb.body(k).contains(&w));
        assert!(others.iter().all(|b| !b.contains(&w)));
    }
}

#[test]
fn lower_bound_closed_form_witnesses() {
    // ((i−1)δ − 1 + δ/2, (i−1)δ + 1 − δ/2) lies only in bunch square i and A.
    let delta = rat(1, 16);
    let lb = lower_bound_instance(6, &delta).unwrap();
    for i in 0..4i64 {
        let base = rat(i, 16);
        let w = Point::new(&base - rat(1, 1) + rat(1, 32), &base + rat(1, 1) - rat(1, 32));
        let holders: Vec<usize> = (0..6).filter(|&j| lb.body(j).contains(&w)).collect();
        assert_eq!(holders, vec![i as usize, 4]);
    }
}

#[test]
fn lower_bound_exhaustive_minimum_n6() {
    let lb = lower_bound_instance(6, &rat(1, 16)).unwrap();
    assert_eq!(exhaustive_min_edges(&lb, DEFAULT_CAP).unwrap(), 11);
    let lex = visibility_graph(&lb, &lex_ranking(&lb)).unwrap();
    assert!(lex.edge_count() <= 11);
}

#[test]
fn lower_bound_n4_minimum() {
    let lb = lower_bound_instance(4, &rat(1, 16)).unwrap();
    assert_eq!(exhaustive_min_edges(&lb, DEFAULT_CAP).unwrap(), 5);
}

#[test]
fn quadratic_examples() {
    let (q, rk) = quadratic_instance(4, &rat(1, 8)).unwrap();
    let g = visibility_graph(&q, &rk).unwrap();
    for l in 0..2 {
        for u in 2..4 {
            assert!(g.has_edge(l, u), "cross pair ({l}, {u}) missing");
        }
    }

    let (q, rk) = quadratic_instance(12, &rat(1, 16)).unwrap();
    let bad = visibility_graph(&q, &rk).unwrap();
    let cross = bad.edges().iter().filter(|&&(a, b)| a < 6 && (6..12).contains(&b)).count();
    assert_eq!(cross, 36);
    assert!(visibility_graph(&q, &lex_ranking(&q)).unwrap().edge_count() <= 29);

    let (q, rk) = quadratic_instance(2, &rat(1, 8)).unwrap();
    assert_eq!(visibility_graph(&q, &rk).unwrap().edges(), &[(0, 1)]);
}

#[test]
fn n3_tightness() {
    let tri = Instance::new(vec![
        Point::new(rat(0, 1), rat(0, 1)),
        Point::new(rat(1, 2), rat(1, 2)),
        Point::new(rat(1, 1), rat(0, 1)),
    ]);
    let g = visibility_graph(&tri, &lex_ranking(&tri)).unwrap();
    assert_eq!(g.edge_count(), 3);
    assert!(is_plane_embedding(&tri, &g).is_plane());
}

#[test]
fn pinned_random_ranking() {
    assert_eq!(random_ranking(5, 42).order(), &[4, 3, 1, 0, 2]);
}

#[test]
fn pinned_random_instance() {
    let expected = "unitsquares v1\nn 10\n295/64 81/16\n375/64 139/32\n65/64 3/64\n3/2 185/32\n\
                    337/64 15/16\n251/64 35/64\n35/32 19/32\n29/32 167/32\n333/64 211/64\n17/16 47/16\n";
    assert_eq!(serialize_instance(&random_instance(10, &rat(6, 1), 7).unwrap()), expected);
}

#[test]
fn optimum_sits_between_forced_and_lex() {
    for seed in 0..40 {
        let inst = random_instance(6, &rat(3, 1), seed).unwrap();
        let (_, best) = optimal_ranking(&inst, DEFAULT_CAP).unwrap();
        let lex = visibility_graph(&inst, &lex_ranking(&inst)).unwrap().edge_count();
        assert!(forced_edges(&inst).len() <= best && best <= lex, "seed {seed}");
        assert!(best <= max_edges_bound(6));
    }
}

fn random_subset(n: usize, seed: u64) -> Vec<usize> {
    let rk = random_ranking(n, seed);
    let keep = (seed as usize % n.max(1)) + 1;
    let mut subset: Vec<usize> = rk.order()[..keep.min(n)].to_vec();
    subset.sort_unstable();
    subset
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn graph_matches_definition(inst in small_instance(6), seed in any::<u64>()) {
        let rk = random_ranking(inst.len(), seed);
        let g = visibility_graph(&inst, &rk).unwrap();
        let order = rk.order();
        for s in 0..order.len() {
            for t in s + 1..order.len() {
                prop_assert_eq!(g.has_edge(order[s], order[t]), sees_by_definition(&inst, order, s, t));
            }
        }
    }

    #[test]
    fn observation_one_and_prefilter_neutrality(inst in small_instance(9), seed in any::<u64>()) {
        let rk = random_ranking(inst.len(), seed);
        for s in 0..inst.len() {
            for t in s + 1..inst.len() {
                if obs1_blocked(&inst, &rk, s, t).unwrap() {
                    prop_assert!(!pair_sees(&inst, &rk, s, t).unwrap());
                }
            }
        }
        prop_assert_eq!(
            visibility_graph_with(&inst, &rk, Prefilter::Enabled).unwrap(),
            visibility_graph_with(&inst, &rk, Prefilter::Disabled).unwrap()
        );
    }

    #[test]
    fn adjacent_overlapping_squares_see(inst in small_instance(8), seed in any::<u64>()) {
        let rk = random_ranking(inst.len(), seed);
        let g = visibility_graph(&inst, &rk).unwrap();
        for w in rk.order().windows(2) {
            let meet = !intersect(&inst.body(w[0]), &inst.body(w[1])).is_empty();
            prop_assert_eq!(meet, g.has_edge(w[0], w[1]));
        }
    }

    #[test]
    fn deletion_keeps_edges(inst in small_instance(7), seed in any::<u64>()) {
        let n = inst.len();
        let rk = random_ranking(n, seed);
        let g = visibility_graph(&inst, &rk).unwrap();
        let keep = random_subset(n, seed.rotate_left(17));
        let mut new_index = vec![usize::MAX; n];
        for (new, &old) in keep.iter().enumerate() {
            new_index[old] = new;
        }
        let sub = inst.select(&keep);
        let sub_order: Vec<usize> = rk.order().iter().filter(|&&i| new_index[i] != usize::MAX).map(|&i| new_index[i]).collect();
        let sub_g = visibility_graph(&sub, &Ranking::new(sub_order).unwrap()).unwrap();
        for &(a, b) in g.edges() {
            if new_index[a] != usize::MAX && new_index[b] != usize::MAX {
                prop_assert!(sub_g.has_edge(new_index[a], new_index[b]));
            }
        }
    }

    #[test]
    fn lex_graph_is_plane_and_bounded(inst in distinct_instance(16)) {
        let rk = lex_ranking(&inst);
        let order = rk.order();
        for w in order.windows(2) {
            let (a, b) = (inst.center(w[0]), inst.center(w[1]));
            prop_assert!((&a.x, &a.y) <= (&b.x, &b.y));
        }
        let g = visibility_graph(&inst, &rk).unwrap();
        prop_assert!(is_plane_embedding(&inst, &g).is_plane());
        if inst.len() >= 4 {
            prop_assert!(g.edge_count() <= 3 * inst.len() - 7);
        }
        prop_assert!(g.edge_count() <= max_edges_bound(inst.len()));
    }

    #[test]
    fn text_formats_round_trip(inst in small_instance(10), seed in any::<u64>()) {
        prop_assert_eq!(&parse_instance(&serialize_instance(&inst)).unwrap(), &inst);
        let rk = random_ranking(inst.len(), seed);
        prop_assert_eq!(&parse_ranking(&serialize_ranking(&rk)).unwrap(), &rk);
        let g = visibility_graph(&inst, &rk).unwrap();
        prop_assert_eq!(&parse_graph(&serialize_graph(&g)).unwrap(), &g);
    }
}

#[test]
fn forced_edges_hold_under_every_ranking() {
    for seed in 0..40u64 {
        let n = 3 + (seed as usize % 4);
        let inst = random_instance(n, &rat(2, 1), seed).unwrap();
        let forced = forced_edges(&inst);
        for p in all_permutations(n) {
            let g = visibility_graph(&inst, &Ranking::new(p).unwrap()).unwrap();
            for &(a, b) in &forced {
                assert!(g.has_edge(a, b), "seed {seed}: forced ({a}, {b}) missing");
            }
        }
    }
}

#[test]
fn decimal_instances_parse_exactly() {
    let inst = parse_instance("unitsquares v1\nn 1\n0.25 1\n").unwrap();
    assert_eq!(inst.center(0).x, parse_rational("1/4").unwrap());
}
