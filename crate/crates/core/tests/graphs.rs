use proptest::prelude::*;
use zonolat::graphs::{ehrhart_complete, ehrhart_of_complete_graph, quotient, tutte_complete};
use zonolat::posets::flats;
use zonolat::zonotopes::Budget;
use zonolat::{GraphSpec, Multigraph, Permutation, Rational, SetPartition, Zonotope};

fn arb_graph(max_r: usize, max_mult: u64) -> impl Strategy<Value = Multigraph> {
    (2..=max_r).prop_flat_map(move |r| {
        proptest::collection::vec(0..=max_mult, r * (r - 1) / 2).prop_map(move |ys| {
            let mut edges = Vec::new();
            let mut k = 0;
            for a in 0..r {
                for b in a + 1..r {
                    if ys[k] > 0 {
                        edges.push((a, b, ys[k]));
                    }
                    k += 1;
                }
            }
            Multigraph::from_edges(r, &edges).unwrap()
        })
    })
}

fn quotient_partition(s: &SetPartition, t: &SetPartition) -> SetPartition {
    let labels: Vec<usize> = s.blocks().iter().map(|b| t.block_of(b[0])).collect();
    SetPartition::from_labels(&labels)
}

#[test]
fn tutte_and_ehrhart_tables() {
    assert_eq!(tutte_complete::<i64>(1).to_string(), "x");
    assert_eq!(tutte_complete::<i64>(2).to_string(), "x^2+x+y");
    assert_eq!(tutte_complete::<i64>(3).to_string(), "x^3+3x^2+2x+4xy+2y+3y^2+y^3");
    assert_eq!(ehrhart_of_complete_graph::<i64>(2).to_string(), "q+1");
    assert_eq!(ehrhart_of_complete_graph::<i64>(3).to_string(), "3q^2+3q+1");
    assert_eq!(ehrhart_of_complete_graph::<i64>(4).to_string(), "16q^3+15q^2+6q+1");
    for m in 1..=5 {
        assert_eq!(ehrhart_complete::<i64>(m), ehrhart_of_complete_graph::<i64>(m + 1));
    }
}

#[test]
fn ehrhart_at_one_counts_points() {
    let budget = Budget::default();
    for m in 2..=5 {
        let z = Zonotope::graphical(&Multigraph::complete(m, 1).unwrap());
        let pts = z.lattice_points(false, &budget).unwrap().len() as i64;
        assert_eq!(ehrhart_of_complete_graph::<i64>(m).eval(&1), pts, "K{m}");
        assert_eq!(ehrhart_of_complete_graph::<i64>(m).eval(&0), 1);
    }
}

#[test]
fn reciprocity_on_complete_multigraphs() {
    let budget = Budget::default();
    for m in 2..=4 {
        for e in 1..=3u64 {
            let g = Multigraph::complete(m, e).unwrap();
            let inner = Zonotope::graphical(&g).interior_count(&budget).unwrap();
            let sign = if (m - 1) % 2 == 0 { 1 } else { -1 };
            let val = sign * ehrhart_of_complete_graph::<i64>(m).eval(&-(e as i64));
            assert_eq!(inner, val, "K({m},{e})");
        }
    }
}

#[test]
fn complete_graph_automorphisms() {
    for m in 1..=5 {
        let g = Multigraph::complete(m, 2).unwrap();
        let auts = g.automorphisms().unwrap();
        assert_eq!(auts.len() as i64, zonolat::scalar::factorial(m as u64));
    }
    let sq = Multigraph::from_edges(4, &[(0, 1, 1), (1, 2, 1), (2, 3, 1), (0, 3, 1)]).unwrap();
    assert_eq!(sq.automorphisms().unwrap().len(), 8);
    assert_eq!(Multigraph::triangle(2, 4, 4).automorphisms().unwrap().len(), 2);
}

#[test]
fn contraction_of_square() {
    let sq = Multigraph::from_edges(4, &[(0, 1, 1), (1, 2, 1), (2, 3, 1), (0, 3, 1)]).unwrap();
    let s = SetPartition::parse("12|3|4", 4).unwrap();
    let c = sq.contract(&s).unwrap();
    assert_eq!(c.edges(), vec![(0, 1, 1), (0, 2, 1), (1, 2, 1)]);
    assert!(sq.contract(&SetPartition::parse("13|2|4", 4).unwrap()).is_err());
}

#[test]
fn quotient_of_k4_transposition() {
    let k4 = Multigraph::complete(4, 1).unwrap();
    let q = quotient::<i64>(&k4, &Permutation::parse("(12)", 4).unwrap()).unwrap();
    assert_eq!(q.lengths, vec![2, 1, 1]);
    assert_eq!(q.t, vec![Rational::new(1, 2), 0.into(), 0.into()]);
    assert_eq!(q.graph.edges(), vec![(0, 1, 1), (0, 2, 1), (1, 2, 1)]);
    assert!(quotient::<i64>(&Multigraph::triangle(1, 2, 1), &Permutation::parse("(12)", 3).unwrap()).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn automorphisms_form_a_group(g in arb_graph(5, 2)) {
        let auts = g.automorphisms().unwrap();
        prop_assert!(auts.iter().any(|p| p.is_identity()));
        for p in &auts {
            prop_assert!(auts.contains(&p.inverse()));
            for q in &auts {
                prop_assert!(auts.contains(&p.compose(q)));
            }
        }
    }

    // The parity rule on t_σ is asserted inside `quotient`.
    #[test]
    fn quotients_are_well_formed(g in arb_graph(5, 3)) {
        for sigma in g.automorphisms().unwrap() {
            let q = quotient::<i64>(&g, &sigma).unwrap();
            prop_assert_eq!(q.lengths.iter().sum::<usize>(), g.r());
            for t in &q.t {
                prop_assert!((*t * 2).is_integer());
            }
        }
    }

    #[test]
    fn contraction_is_functorial(g in arb_graph(5, 2)) {
        let fl = flats(&g);
        for s in fl.elements() {
            let gs = g.contract(s).unwrap();
            for t in fl.elements().iter().filter(|t| s.refines(t)) {
                let rel = quotient_partition(s, t);
                prop_assert!(gs.is_flat(&rel));
                prop_assert_eq!(gs.contract(&rel).unwrap(), g.contract(t).unwrap());
            }
        }
    }

    #[test]
    fn graph_spec_roundtrip(g in arb_graph(6, 3)) {
        let spec = GraphSpec::from_graph(&g);
        let json = serde_json::to_string(&spec).unwrap();
        let back: GraphSpec = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back.to_graph().unwrap(), g);
    }
}
