mod common;

use std::collections::BTreeSet;

use backarc::generate::{gen_dk, InstanceSpec};
use backarc::oracle::Oracle;
use backarc::orcycle::*;
use backarc::{Digraph, SolveError, Vertex};
use common::lemma::*;
use common::*;
use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn alpha2(n: usize, conn: &str, seed: u64) -> Digraph {
    let mode = ["bipartite", "trianglefree"][seed as usize % 2];
    let density = [0.3, 0.5, 0.8][seed as usize % 3];
    format!("alpha2:n={n},digon=0.15,conn={conn},mode={mode},density={density},seed={seed}")
        .parse::<InstanceSpec>()
        .unwrap()
        .generate()
        .unwrap()
}

#[test]
fn clique_matches_subset_scan() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for round in 0..300u64 {
        let n = 1 + (round % 12) as usize;
        let d = if round % 2 == 0 {
            alpha2(n, "none", round)
        } else {
            let arcs: Vec<_> = pairs(n).into_iter().filter(|_| rng.gen_bool(0.5)).collect();
            Digraph::from_arcs(n, arcs).unwrap()
        };
        let x = max_semicomplete_subset(&d);
        assert_eq!(x.len(), brute_clique_size(&d));
        assert!(d.is_semicomplete_on(&x));
        assert!(x.windows(2).all(|w| w[0] < w[1]));
    }
    let fig1 = backarc::generate::gen_fig1(3, 3).unwrap();
    assert_eq!(max_semicomplete_subset(&fig1), vec![0, 1, 2]);
}

fn check_run(d: &Digraph, config: &CycleConfig, o: &Oracle) -> &'static str {
    let (c, trace) = hamilton_orcycle_with(d, config).unwrap();
    assert!(c.is_hamilton(d));
    assert!(c.sigma_minus() <= 5);
    if d.n() <= 16 {
        let exact = o.min_backward_orcycle(d).unwrap().minimum.unwrap();
        assert!(c.sigma_minus() >= exact);
    }
    replay_trace(d, &trace, config).unwrap();
    trace.top_case().unwrap()
}

#[test]
fn driver_on_generated_instances() {
    let o = Oracle::default();
    let config = CycleConfig::default();
    let mut seen = BTreeSet::new();
    for n in 5..=16 {
        for seed in 0..40 {
            seen.insert(check_run(&alpha2(n, "two", seed), &config, &o));
        }
    }
    for (x, y) in [(5, 7), (6, 6), (6, 8), (8, 6)] {
        for seed in 0..25 {
            let spec: InstanceSpec = format!("planted:x={x},y={y},digon=0.2,density=0.6,seed={seed}").parse().unwrap();
            if let Ok(d) = spec.generate() {
                seen.insert(check_run(&d, &config, &o));
            }
        }
    }
    for label in CASE_LABELS {
        assert!(seen.contains(label), "{label} never reached: {seen:?}");
    }
}

#[test]
fn lowered_threshold_exercises_the_cases() {
    let o = Oracle::with_cap(14);
    let mut seen = BTreeSet::new();
    for cf in [4, 7, 10] {
        let config = CycleConfig {
            constructive_from: cf,
            oracle_fallback: false,
        };
        for n in 6..=13 {
            for seed in 0..60 {
                seen.insert(check_run(&alpha2(n, "two", 1000 + seed), &config, &o));
            }
        }
    }
    for label in ["semicomplete", "small-order", "case-1.1", "case-1.2.1", "case-2"] {
        assert!(seen.contains(label), "{label} never reached: {seen:?}");
    }
}

#[test]
fn gadget_with_two_blocks() {
    let d = gen_dk(2).unwrap();
    let (c, _) = hamilton_orcycle(&d).unwrap();
    assert!(c.sigma_minus() <= 5);
    assert!(c.sigma_minus() >= 4);
}

#[test]
fn fallback_is_flagged_only_when_used() {
    let d = alpha2(13, "two", 7);
    let config = CycleConfig {
        oracle_fallback: true,
        ..CycleConfig::default()
    };
    let (_, trace) = hamilton_orcycle_with(&d, &config).unwrap();
    assert!(trace.steps().iter().all(|s| s.label != "oracle-fallback"));
}

#[test]
fn rejects_bad_inputs() {
    assert!(matches!(
        hamilton_orcycle(&Digraph::from_arcs(2, [(0, 1)]).unwrap()),
        Err(SolveError::TooFewVertices { .. })
    ));
    let fig1 = backarc::generate::gen_fig1(3, 3).unwrap();
    assert!(matches!(hamilton_orcycle(&fig1), Err(SolveError::NotTwoConnected)));
    assert!(matches!(
        hamilton_orcycle(&gen_dk(3).unwrap()),
        Err(SolveError::IndependentTriple(_))
    ));
}

#[test]
fn two_sided_cycles() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for round in 0..4000 {
        let (a, b) = (1 + round % 4, 1 + (round / 4) % 4);
        let (ip, iq) = ((round / 16) % 3, (round / 48) % 3);
        if (a == 1 || b == 1) && ip + iq == 0 {
            continue;
        }
        let (d, x, y, p, q) = two_sided(a, b, ip, iq, &mut rng);
        if p[0] == q[0] || p.last() == q.last() {
            continue;
        }
        let c = two_semicomplete_cycle(&d, &x, &y, &p, &q).unwrap();
        assert!(c.is_hamilton(&d));
        assert!(c.sigma_minus() <= 2 + (p.len() + q.len()) / 2);
    }
}

#[test]
fn two_sided_rejects_shared_links() {
    let d = Digraph::from_arcs(4, [(0, 1), (1, 0), (2, 3), (3, 2), (0, 2), (3, 1)]).unwrap();
    assert!(two_semicomplete_cycle(&d, &[0, 1], &[2, 3], &[0, 2], &[0, 2]).is_err());
    let c = two_semicomplete_cycle(&d, &[0, 1], &[2, 3], &[0, 2], &[1, 3]).unwrap();
    assert!(c.sigma_minus() <= 4);
}

#[test]
fn corollary_on_bridged_tournaments() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    let mut built = 0;
    for round in 0..3000 {
        let (a, b) = (2 + round % 5, 2 + (round / 5) % 5);
        let n = a + b;
        let mut d = Digraph::empty(n);
        for (u, v) in (0..a).tuple_combinations().chain((a..n).tuple_combinations()) {
            if rng.gen_bool(0.5) {
                d.add_arc(u, v).unwrap();
            } else {
                d.add_arc(v, u).unwrap();
            }
        }
        for u in 0..a {
            for v in a..n {
                if rng.gen_bool(0.25) {
                    if rng.gen_bool(0.5) {
                        d.add_arc(u, v).unwrap();
                    } else {
                        d.add_arc(v, u).unwrap();
                    }
                }
            }
        }
        let x: Vec<Vertex> = (0..a).collect();
        let y: Vec<Vertex> = (a..n).collect();
        match two_semicomplete_corollary(&d, &x, &y) {
            Ok(c) => {
                assert!(c.is_hamilton(&d) && c.sigma_minus() <= 4);
                built += 1;
            }
            Err(e) => {
                assert!(!e.is_internal());
                assert!(!d.is_two_connected());
            }
        }
    }
    assert!(built > 1000);
}

#[test]
fn plus_semi_on_generated_instances() {
    let mut calls = 0;
    for n in 4..=10 {
        for seed in 0..60 {
            calls += plus_semi_on(&alpha2(n, "connected", seed), 40);
        }
    }
    assert!(calls > 2000);
}

#[test]
fn plus_semi_dense_needs_four() {
    let d = Digraph::from_arcs(4, [(0, 1), (1, 2), (0, 2), (0, 3), (3, 1), (2, 3)]).unwrap();
    let e = dipath_plus_semi(&d, &[0, 1, 2], &[3], &[3], PlusSemiCondition::Dense).unwrap_err();
    assert!(e.to_string().contains("|X| = 3"));
}
