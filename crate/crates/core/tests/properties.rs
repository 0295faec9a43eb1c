mod common;

use backarc::generate::InstanceSpec;
use backarc::graph::format::{parse_digraph, write_digraph, DigraphFile};
use backarc::oracle::Oracle;
use backarc::orcycle::{hamilton_orcycle, max_semicomplete_subset};
use backarc::orpath::hamilton_orpath;
use backarc::semicomplete::redei_dipath;
use backarc::{audit_sequence, Digraph, Vertex};
use common::*;
use proptest::prelude::*;

fn digraph(min_n: usize, max_n: usize) -> impl Strategy<Value = Digraph> {
    (min_n..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n).prop_map(move |bits| {
            let arcs = (0..n * n).filter(|&i| bits[i] && i / n != i % n).map(|i| (i / n, i % n));
            Digraph::from_arcs(n, arcs).unwrap()
        })
    })
}

fn tournament(max_n: usize) -> impl Strategy<Value = Digraph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n).prop_map(move |bits| {
            let arcs = pairs(n).into_iter().map(|(i, j)| if bits[i * n + j] { (i, j) } else { (j, i) });
            Digraph::from_arcs(n, arcs).unwrap()
        })
    })
}

fn alpha2_spec(min_n: usize, max_n: usize, conn: &'static str) -> impl Strategy<Value = InstanceSpec> {
    (min_n..=max_n, 0u64..10_000, 0usize..3, 0usize..2).prop_map(move |(n, seed, dens, mode)| {
        let density = [0.3, 0.5, 0.8][dens];
        let mode = ["bipartite", "trianglefree"][mode];
        format!("alpha2:n={n},digon=0.2,conn={conn},mode={mode},density={density},seed={seed}")
            .parse()
            .unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn transpose_is_an_involution(d in digraph(1, 10)) {
        prop_assert_eq!(d.transpose().transpose(), d.clone());
        prop_assert_eq!(d.transpose().arc_count(), d.arc_count());
    }

    #[test]
    fn closure_keeps_adjacency(d in digraph(1, 9)) {
        let s = d.symmetric_closure();
        for u in 0..d.n() {
            for v in 0..d.n() {
                prop_assert_eq!(s.has_arc(u, v), u != v && d.adjacent(u, v));
            }
        }
        prop_assert_eq!(s.is_semicomplete(), d.is_semicomplete());
    }

    #[test]
    fn file_round_trip(d in digraph(1, 10)) {
        let text = write_digraph(&DigraphFile::new(d.clone()).with_comment("note"));
        let back = parse_digraph(&text).unwrap();
        prop_assert_eq!(&back.digraph, &d);
        prop_assert_eq!(write_digraph(&back), text);
    }

    #[test]
    fn reversal_swaps_step_directions(d in tournament(9), rot in 0usize..9) {
        let n = d.n();
        let seq: Vec<Vertex> = (0..n).map(|i| (i + rot) % n).collect();
        let fwd = audit_sequence(&d, &seq, false);
        let rev: Vec<Vertex> = seq.iter().rev().copied().collect();
        let back = audit_sequence(&d, &rev, false);
        prop_assert!(fwd.valid && back.valid);
        // No digons in a tournament, so each step flips.
        prop_assert_eq!(fwd.sigma_minus, back.sigma_plus);
        prop_assert_eq!(fwd.sigma_plus, back.sigma_minus);
    }

    #[test]
    fn redei_has_no_backward_step(d in tournament(40)) {
        let p = redei_dipath(&d, &all_vertices(d.n())).unwrap();
        prop_assert_eq!(p.sigma_minus(), 0);
        prop_assert!(p.is_hamilton(&d));
    }

    #[test]
    fn clique_is_maximum(d in digraph(1, 11)) {
        let x = max_semicomplete_subset(&d);
        prop_assert!(d.is_semicomplete_on(&x));
        prop_assert_eq!(x.len(), brute_clique_size(&d));
    }

    #[test]
    fn adding_an_arc_never_costs_more(d in digraph(1, 7), pick in any::<usize>()) {
        let o = Oracle::default();
        let n = d.n();
        let absent: Vec<(Vertex, Vertex)> = (0..n)
            .flat_map(|u| (0..n).map(move |v| (u, v)))
            .filter(|&(u, v)| u != v && !d.has_arc(u, v))
            .collect();
        if absent.is_empty() {
            return Ok(());
        }
        let (u, v) = absent[pick % absent.len()];
        let mut e = d.clone();
        e.add_arc(u, v).unwrap();
        let before = o.min_backward_orpath(&d, None, None).unwrap().minimum;
        let after = o.min_backward_orpath(&e, None, None).unwrap().minimum;
        prop_assert!(after.unwrap_or(usize::MAX) <= before.unwrap_or(usize::MAX));
        if n >= 3 {
            let before = o.min_backward_orcycle(&d).unwrap().minimum;
            let after = o.min_backward_orcycle(&e).unwrap().minimum;
            prop_assert!(after.unwrap_or(usize::MAX) <= before.unwrap_or(usize::MAX));
        }
    }

    #[test]
    fn transpose_keeps_the_cycle_minimum(d in digraph(3, 8)) {
        let o = Oracle::default();
        prop_assert_eq!(
            o.min_backward_orcycle(&d).unwrap().minimum,
            o.min_backward_orcycle(&d.transpose()).unwrap().minimum
        );
    }

    #[test]
    fn orpaths_on_generated_instances(spec in alpha2_spec(1, 14, "connected")) {
        let d = spec.generate().unwrap();
        let (p, trace) = hamilton_orpath(&d).unwrap();
        prop_assert!(p.is_hamilton(&d));
        prop_assert!(p.sigma_minus() <= 2);
        prop_assert_eq!(trace.terminal_count(), 1);
    }

    #[test]
    fn orcycles_on_generated_instances(spec in alpha2_spec(3, 18, "two")) {
        // Tiny sparse specs can exhaust the retry budget; that is reported, not a solver matter.
        let Ok(d) = spec.generate() else { return Ok(()) };
        let (c, trace) = hamilton_orcycle(&d).unwrap();
        prop_assert!(c.is_hamilton(&d));
        prop_assert!(c.sigma_minus() <= 5);
        prop_assert_eq!(trace.terminal_count(), 1);
    }

    #[test]
    fn spec_text_round_trips(n in 1usize..30, seed in any::<u64>(), digon in 0u8..=10) {
        let text = format!("alpha2:n={n},digon={},conn=none,mode=mixed,density=0.5,seed={seed}", f64::from(digon) / 10.0);
        let spec: InstanceSpec = text.parse().unwrap();
        prop_assert_eq!(spec.to_string(), text);
    }
}
