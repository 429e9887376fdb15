use num_rational::Ratio;
use proptest::prelude::*;
use zonolat::zonotopes::{
    graph_flats_match, graphical_count, inequality_description, satisfies_inequalities, Budget, VectorConfig,
};
use zonolat::{Multigraph, Rational, Zonotope};

fn budget() -> Budget {
    Budget::default()
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

#[test]
fn facet_census() {
    let k3 = Zonotope::graphical(&Multigraph::complete(3, 1).unwrap());
    assert_eq!(k3.dim(), 2);
    assert_eq!(k3.facets().len() * 2, 6);

    let k4 = Zonotope::graphical(&Multigraph::complete(4, 1).unwrap());
    let facets = k4.facets();
    assert_eq!(facets.len() * 2, 14);
    let mut types: Vec<Vec<usize>> =
        facets.iter().map(|f| k4.flat_partition(f.flat_mask).unwrap().block_sizes()).collect();
    types.sort();
    let hexagons = types.iter().filter(|t| t.contains(&3)).count();
    assert_eq!((hexagons * 2, (facets.len() - hexagons) * 2), (8, 6));
}

#[test]
fn faces_are_translates_of_flat_zonotopes() {
    for g in [Multigraph::complete(4, 1).unwrap(), Multigraph::complete(3, 2).unwrap(), Multigraph::triangle(2, 4, 4)] {
        let z = Zonotope::graphical(&g);
        let pts = z.lattice_points(false, &budget()).unwrap();
        for f in z.facets() {
            let s = z.flat_partition(f.flat_mask).unwrap();
            let expect = Zonotope::graphical(&g.restrict(&s)).lattice_points(false, &budget()).unwrap().len();
            for level in [&f.lo, &f.hi] {
                let on = pts.iter().filter(|x| Ratio::from_integer(dot(&f.normal, x)) == *level).count();
                assert_eq!(on, expect, "{s}");
            }
        }
    }
}

#[test]
fn inequalities_match_the_zonotope() {
    for g in [Multigraph::complete(4, 1).unwrap(), Multigraph::triangle(1, 2, 3)] {
        let z = Zonotope::graphical(&g);
        let desc = inequality_description(&g);
        let closed = z.lattice_points(false, &budget()).unwrap();
        let open = z.lattice_points(true, &budget()).unwrap();
        assert!(closed.iter().all(|x| satisfies_inequalities(&desc, x, false)));
        assert_eq!(closed.iter().filter(|x| satisfies_inequalities(&desc, x, true)).count(), open.len());
        assert!(graph_flats_match::<i64>(&g));
    }
}

#[test]
fn quasi_polynomial_matches_dilates() {
    let cases: Vec<(Multigraph, Vec<Rational>)> = vec![
        (Multigraph::complete(3, 1).unwrap(), vec![Rational::new(1, 2), Rational::new(1, 2), 0.into()]),
        (Multigraph::complete(3, 1).unwrap(), vec![Rational::new(1, 3); 3]),
        (Multigraph::triangle(2, 4, 4), vec![Rational::new(1, 2), Rational::new(1, 2), 0.into()]),
        (Multigraph::complete(3, 2).unwrap(), vec![Rational::new(1, 4), Rational::new(1, 2), Rational::new(1, 4)]),
    ];
    for (g, w) in cases {
        let z = Zonotope::graphical(&g).translated(w.clone()).unwrap();
        let qp = z.ehrhart(&budget()).unwrap();
        for t in 1..=2 * qp.period as u64 + 1 {
            let d = z.dilate(t);
            assert_eq!(qp.eval(t as i64), d.lattice_points(false, &budget()).unwrap().len() as i64, "t={t} {w:?}");
            let sign = if z.dim() % 2 == 0 { 1 } else { -1 };
            assert_eq!(sign * qp.eval(-(t as i64)), d.interior_count(&budget()).unwrap(), "t={t} {w:?}");
        }
        for res in 0..qp.period {
            assert_eq!(qp.constituent(res), qp.constituent(res + qp.period));
        }
    }
}

#[test]
fn three_routes_on_k4() {
    let z = Zonotope::graphical(&Multigraph::complete(4, 1).unwrap());
    for (w, n) in [(0, 6), (1, 16), (2, 13)] {
        let w: Vec<Rational> = vec![Rational::new(w, 4); 4];
        let z = z.translated(w).unwrap();
        assert_eq!(z.interior_count(&budget()).unwrap(), n);
        assert_eq!(z.count_via_reciprocity(&budget()).unwrap(), n);
        assert_eq!(z.mobius_count(&budget()).unwrap().total, n);
    }
}

#[test]
fn graphical_count_matches_oracle() {
    for e in 1..=2 {
        let g = Multigraph::complete(4, e).unwrap();
        for d in 0..4 {
            let w = vec![Rational::new(d, 4); 4];
            let gc = graphical_count(&g, &w, &budget()).unwrap();
            let z = Zonotope::graphical(&g).translated(w).unwrap();
            assert_eq!(gc.total, z.interior_count(&budget()).unwrap(), "e={e} d={d}");
        }
    }
}

#[test]
fn budget_is_enforced() {
    let z = Zonotope::graphical(&Multigraph::complete(5, 3).unwrap());
    let tiny = Budget { max_generators: 64, max_points: 10 };
    assert!(matches!(z.interior_count(&tiny), Err(zonolat::Error::Budget(_))));
}

fn arb_config() -> impl Strategy<Value = (usize, Vec<Vec<i64>>)> {
    (2..=3usize).prop_flat_map(|r| {
        (Just(r), proptest::collection::vec(proptest::collection::vec(-2..=2i64, r), 1..=6))
            .prop_map(|(r, vs)| (r, vs.into_iter().filter(|v| v.iter().any(|&c| c != 0)).collect::<Vec<_>>()))
            .prop_filter("nonempty", |(_, vs)| !vs.is_empty())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    // Sum of rvol over independent subsets counts the closed zonotope.
    #[test]
    fn parallelepiped_decomposition((r, vs) in arb_config()) {
        let z = Zonotope::new(VectorConfig::new(r, vs).unwrap(), vec![0; r], vec![Rational::from(0); r]).unwrap();
        let qp = z.ehrhart(&budget()).unwrap();
        prop_assert_eq!(qp.eval(1), z.lattice_points(false, &budget()).unwrap().len() as i64);
        prop_assert_eq!(z.count_via_reciprocity(&budget()).unwrap(), z.interior_count(&budget()).unwrap());
    }
}
