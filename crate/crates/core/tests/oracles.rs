mod common;

use common::{family, naive_ec};
use paleylab::arith::prime_powers_in;
use paleylab::field::{Field, FieldElement, PowerTable};
use paleylab::graph::{Family, Graph};
use paleylab::properties::{n_ec_check, n_ec_check_with, pmnk_check, SearchOptions, WitnessKind};
use proptest::prelude::*;

fn library_ec(g: &Graph, n: usize) -> Option<(Vec<usize>, Vec<usize>)> {
    let v = n_ec_check(g, n).unwrap();
    v.witness().map(|w| match &w.kind {
        WitnessKind::EcFailure { s, t } => {
            assert!(w.replay(g));
            (s.clone(), t.clone())
        }
        other => panic!("unexpected witness {other:?}"),
    })
}

fn cayley_graphs_up_to(q_max: u64) -> Vec<Graph> {
    let mut out = Vec::new();
    for (q, p, _) in prime_powers_in(2, q_max) {
        if q % 4 == 1 {
            out.push(family(Family::Paley, q));
        }
        if p != 2 {
            for m in [3, 5, 7] {
                out.push(family(Family::MPaley { m }, q));
            }
        }
        if q % 3 == 1 && q % 2 == 1 {
            out.push(family(Family::CubicPaley, q));
        }
    }
    out
}

#[test]
fn ec_checker_matches_naive_oracle() {
    for g in cayley_graphs_up_to(17) {
        for n in 1..=3.min(g.order() - 1) {
            assert_eq!(library_ec(&g, n), naive_ec(&g, n), "{} n={n}", g.label());
        }
    }
}

#[test]
fn ec_witness_independent_of_jobs() {
    let g = family(Family::Paley, 25);
    let base = n_ec_check(&g, 3).unwrap();
    for jobs in [1, 2, 3, 8] {
        let opts = SearchOptions { jobs: Some(jobs), ..SearchOptions::default() };
        assert_eq!(n_ec_check_with(&g, 3, &opts).unwrap(), base);
    }
}

#[test]
fn table_multiplication_matches_direct() {
    for (q, _, _) in prime_powers_in(3, 256) {
        let f = Field::with_order(q).unwrap();
        let t = PowerTable::new(&f);
        for x in f.nonzero_elements() {
            assert_eq!(t.inv(x), f.inv(x).ok());
            for y in f.nonzero_elements() {
                assert_eq!(t.mul(x, y), f.mul(x, y), "q={q}");
            }
        }
    }
}

fn naive_pmnk_count(g: &Graph, a: &[usize], b: &[usize]) -> usize {
    (0..g.order())
        .filter(|x| !a.contains(x) && !b.contains(x))
        .filter(|&x| a.iter().all(|&y| g.adjacent(x, y)) && b.iter().all(|&y| !g.adjacent(x, y)))
        .count()
}

#[test]
fn pmnk_witness_replays() {
    let g = family(Family::Paley, 13);
    for (m, n, k) in [(2, 1, 1), (2, 2, 1), (1, 2, 2), (3, 0, 1)] {
        let v = pmnk_check(&g, m, n, k).unwrap();
        let w = v.witness().expect("expected a failure");
        let WitnessKind::PmnkFailure { a, b, found, required } = &w.kind else { panic!() };
        assert_eq!(*required, k);
        assert_eq!(naive_pmnk_count(&g, a, b), *found);
        assert!(w.replay(&g));
    }
    assert!(pmnk_check(&g, 1, 1, 1).unwrap().holds());
}

fn random_graph() -> impl Strategy<Value = Graph> {
    (4usize..12).prop_flat_map(|order| {
        proptest::collection::vec(any::<bool>(), order * (order - 1) / 2).prop_map(move |bits| {
            let pairs = (0..order).flat_map(|u| (u + 1..order).map(move |v| (u, v)));
            let edges: Vec<_> = pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e).collect();
            Graph::from_edges(order, edges, "random").unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn ec_matches_naive_on_random_graphs(g in random_graph(), n in 1usize..=3) {
        prop_assert_eq!(library_ec(&g, n), naive_ec(&g, n));
    }

    #[test]
    fn pmnk_1_1_matches_naive(g in random_graph(), k in 1usize..4) {
        let naive_holds = (0..g.order()).all(|a| (0..g.order()).filter(|&b| b != a)
            .all(|b| naive_pmnk_count(&g, &[a], &[b]) >= k));
        prop_assert_eq!(pmnk_check(&g, 1, 1, k).unwrap().holds(), naive_holds);
    }

    #[test]
    fn log_antilog_inverse(idx in 0usize..50) {
        let orders: Vec<u64> = prime_powers_in(3, 256).map(|(q, _, _)| q).collect();
        let f = Field::with_order(orders[idx % orders.len()]).unwrap();
        let t = PowerTable::new(&f);
        let seen: std::collections::BTreeSet<u32> = t.antilog_row().map(FieldElement::index).collect();
        prop_assert_eq!(seen.len() as u32, f.q() - 1);
        prop_assert!(!seen.contains(&0));
    }
}
