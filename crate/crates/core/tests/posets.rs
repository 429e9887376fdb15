use zonolat::posets::*;
use zonolat::scalar::factorial;
use zonolat::{Multigraph, Rational, SetPartition};

fn omega_grid(r: usize, den: i64) -> Vec<Vec<Rational>> {
    let mut vals: Vec<Rational> = (1..=den).flat_map(|q| (0..q).map(move |p| Rational::new(p, q))).collect();
    vals.sort();
    vals.dedup();
    fn go(start: usize, r: usize, vals: &[Rational], cur: &mut Vec<Rational>, out: &mut Vec<Vec<Rational>>) {
        if cur.len() == r {
            if cur.iter().sum::<Rational>().is_integer() {
                out.push(cur.clone());
            }
            return;
        }
        for i in start..vals.len() {
            cur.push(vals[i]);
            go(i, r, vals, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, r, &vals, &mut Vec::new(), &mut out);
    out
}

fn square() -> Multigraph {
    Multigraph::from_edges(4, &[(0, 1, 1), (1, 2, 1), (2, 3, 1), (0, 3, 1)]).unwrap()
}

fn half(r: usize) -> Vec<Rational> {
    vec![Rational::new(1, 2); r]
}

#[test]
fn three_counts_agree_on_complete_graphs() {
    for r in 2..=5 {
        let k = Multigraph::complete(r, 1).unwrap();
        for w in omega_grid(r, 4) {
            let sc = sphere_count(&k, &w).unwrap();
            let lab = LexLabelling::new(&k, &w, EdgeOrder::lexicographic(&k)).unwrap();
            assert_eq!(sc, signed_factorial_sum(&w), "K{r} {w:?}");
            assert_eq!(sc, lab.mediocre_count() as i64, "K{r} {w:?}");
            if w.iter().any(|x| !x.is_integer()) {
                assert!(sc > 0, "K{r} {w:?}");
                assert_eq!(sc, hall_count(&k, &w).unwrap());
            } else {
                assert_eq!(sc, 0);
            }
        }
    }
}

#[test]
fn two_vertices_have_one_chain() {
    let k2 = Multigraph::complete(2, 1).unwrap();
    let lab = LexLabelling::new(&k2, &half(2), EdgeOrder::lexicographic(&k2)).unwrap();
    assert_eq!(lab.poset().len(), 2);
    assert_eq!(lab.mediocre_count(), 1);
    assert_eq!(sphere_count(&k2, &half(2)).unwrap(), 1);
    let zero = vec![Rational::from(0); 2];
    let lab = LexLabelling::new(&k2, &zero, EdgeOrder::lexicographic(&k2)).unwrap();
    assert_eq!(lab.mediocre_count(), 0);
}

#[test]
fn generic_omega_gives_factorial() {
    for r in 2..=6 {
        let k = Multigraph::complete(r, 1).unwrap();
        let mut w: Vec<Rational> = (1..r as i64).map(|i| Rational::new(1, 2 * r as i64 + i)).collect();
        let s: Rational = w.iter().sum();
        w.push(-s);
        assert_eq!(sphere_count(&k, &w).unwrap(), factorial(r as u64 - 1), "r = {r}");
    }
}

#[test]
fn lex_axiom_on_complete_graphs() {
    for r in 2..=5 {
        let k = Multigraph::complete(r, 1).unwrap();
        for w in omega_grid(r, 3) {
            LexLabelling::new(&k, &w, EdgeOrder::lexicographic(&k)).unwrap().check_lex_axiom().unwrap();
        }
    }
}

#[test]
fn square_with_halves() {
    let sq = square();
    let w = half(4);
    let nonint: Vec<String> = non_integral_flats(&sq, &w).iter().map(|s| s.to_string()).collect();
    assert!(nonint.contains(&"1|2|3|4".to_string()));
    assert!(!nonint.contains(&"12|34".to_string()));
    for order in ["12,23,34,14", "12,14,23,34", "34,23,14,12"] {
        let lab = LexLabelling::new(&sq, &w, EdgeOrder::parse(&sq, order).unwrap()).unwrap();
        lab.check_lex_axiom().unwrap();
        assert_eq!(lab.mediocre_count() as i64, sphere_count(&sq, &w).unwrap(), "{order}");
        assert_eq!(lab.mediocre_count() as i64, hall_count(&sq, &w).unwrap(), "{order}");
    }
}

#[test]
fn tree_and_f_flat_under_contraction() {
    let graphs = [(Multigraph::complete(4, 1).unwrap(), 4), (Multigraph::complete(5, 1).unwrap(), 3), (square(), 4)];
    for (g, den) in graphs {
        let order = EdgeOrder::lexicographic(&g);
        let fl = flats(&g);
        for w in omega_grid(g.r(), den) {
            for s in fl.elements() {
                let d = flat_data(&order, s, &w);
                assert!(s.refines(&d.f_flat));
                for &a in &d.tree {
                    let (u, v) = order.pairs()[a];
                    let sa = s.merge(u, v);
                    let da = flat_data(&order, &sa, &w);
                    let mut expect: Vec<usize> = d.tree.iter().copied().filter(|&e| e != a).collect();
                    let mut got = da.tree.clone();
                    expect.sort();
                    got.sort();
                    assert_eq!(got, expect, "{s} ∨ {a}");
                    assert_eq!(da.f_flat, d.f_flat.merge(u, v), "{s} ∨ {a}");
                }
            }
        }
    }
}

#[test]
fn partition_mobius_matches_poset() {
    let k4 = Multigraph::complete(4, 1).unwrap();
    let fl = flats(&k4);
    let bot = SetPartition::singletons(4);
    for l in fl.elements() {
        assert_eq!(fl.mobius(&bot, l).unwrap(), partition_lattice_mobius(l));
    }
}

#[test]
fn hat_poset_is_graded() {
    for w in omega_grid(4, 4) {
        let p = hat_poset(&Multigraph::complete(4, 1).unwrap(), &w).unwrap();
        assert!(p.is_graded());
    }
    let disconnected = Multigraph::from_edges(3, &[(0, 1, 1)]).unwrap();
    let w = vec![Rational::new(1, 2), Rational::new(1, 2), 0.into()];
    assert!(hat_poset(&disconnected, &w).is_err());
}
