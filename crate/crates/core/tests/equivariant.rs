use num_rational::Ratio;
use zonolat::equivariant::*;
use zonolat::posets::{flats, sphere_count};
use zonolat::scalar::parse_fraction_list;
use zonolat::zonotopes::Budget;
use zonolat::{Multigraph, Permutation, SetPartition};

fn w(s: &str) -> Vec<Ratio<i64>> {
    parse_fraction_list(s).unwrap()
}

fn square() -> Multigraph {
    Multigraph::from_edges(4, &[(0, 1, 1), (1, 2, 1), (2, 3, 1), (0, 3, 1)]).unwrap()
}

fn assert_decomposes(g: &Multigraph, omega: &str) {
    let rep = verify_decomposition(g, &w(omega), &Budget::default()).unwrap();
    for p in &rep.per_sigma {
        assert!(p.passed, "σ={} lhs={} rhs={} {:?}", p.sigma, p.lhs, p.rhs, p.forest_failures);
    }
    assert!(rep.passed);
    assert_eq!(rep.dimension_sum, rep.translated[0]);
}

#[test]
fn identity_on_complete_graphs() {
    assert_decomposes(&Multigraph::complete(3, 1).unwrap(), "1/3,1/3,1/3");
    assert_decomposes(&Multigraph::complete(3, 1).unwrap(), "2/3,2/3,2/3");
    assert_decomposes(&Multigraph::complete(4, 1).unwrap(), "1/4,1/4,1/4,1/4");
    assert_decomposes(&Multigraph::complete(4, 1).unwrap(), "1/2,1/2,1/2,1/2");
    for e in 1..=3 {
        assert_decomposes(&Multigraph::complete(3, e).unwrap(), "1/3,1/3,1/3");
    }
}

#[test]
fn identity_on_worked_examples() {
    assert_decomposes(&square(), "1/2,1/2,1/2,1/2");
    assert_decomposes(&Multigraph::triangle(2, 4, 4), "1/2,1/2,0");
}

#[test]
fn k4_quarter_has_24_sigmas() {
    let rep = verify_decomposition(&Multigraph::complete(4, 1).unwrap(), &w("1/4,1/4,1/4,1/4"), &Budget::default()).unwrap();
    assert_eq!(rep.per_sigma.len(), 24);
    assert!(rep.per_sigma.iter().all(|p| p.forests_checked > 0));
}

#[test]
fn homology_at_identity_is_sphere_count() {
    for (g, om) in [
        (Multigraph::complete(4, 1).unwrap(), "1/2,1/2,1/2,1/2"),
        (Multigraph::complete(4, 1).unwrap(), "1/4,1/4,1/4,1/4"),
        (square(), "1/2,1/2,1/2,1/2"),
    ] {
        let id = Permutation::identity(g.r());
        assert_eq!(homology_character(&g, &w(om), &id).unwrap(), sphere_count(&g, &w(om)).unwrap());
    }
    let k3 = Multigraph::complete(3, 1).unwrap();
    let om = w("1/2,1/2,0");
    assert_eq!(homology_character(&k3, &om, &Permutation::identity(3)).unwrap(), 1);
    assert_eq!(homology_character(&k3, &om, &Permutation::parse("(12)", 3).unwrap()).unwrap(), -1);
}

#[test]
fn burnside_matches_orbit_count() {
    let b = Budget::default();
    for (g, om) in [
        (Multigraph::complete(4, 1).unwrap(), "1/4,1/4,1/4,1/4"),
        (Multigraph::complete(3, 2).unwrap(), "0,0,0"),
        (square(), "1/2,1/2,1/2,1/2"),
        (Multigraph::triangle(2, 4, 4), "1/2,1/2,0"),
    ] {
        let chi = permutation_character(&g, &w(om), &b).unwrap();
        let sum: i64 = chi.values.iter().sum();
        let n = chi.group.len() as i64;
        assert_eq!(sum % n, 0);
        assert_eq!((sum / n) as usize, interior_orbit_count(&g, &w(om), &b).unwrap());
    }
}

#[test]
fn orientation_is_multiplicative() {
    for g in [
        Multigraph::complete(4, 1).unwrap(),
        Multigraph::complete(4, 2).unwrap(),
        square(),
        Multigraph::from_edges(5, &[(0, 1, 3), (1, 2, 3), (2, 3, 3), (3, 4, 3), (0, 4, 3), (0, 2, 1), (0, 3, 1)]).unwrap(),
    ] {
        let aut = g.automorphisms().unwrap();
        for s in &aut {
            for t in &aut {
                let lhs = orientation_character(&g, s).unwrap() * orientation_character(&g, t).unwrap();
                assert_eq!(lhs, orientation_character(&g, &s.compose(t)).unwrap());
            }
        }
    }
}

#[test]
fn alpha_closed_form_when_hypothesis_holds() {
    let mut applicable = 0;
    for g in [Multigraph::complete(4, 1).unwrap(), Multigraph::complete(4, 3).unwrap(), square(), Multigraph::triangle(2, 4, 4)] {
        for sigma in g.automorphisms().unwrap() {
            for s in flats(&g).elements().iter().cloned().filter(|s| sigma.stabilizes(s)) {
                if let Some(v) = alpha_closed_form(&g, &s, &sigma).unwrap() {
                    applicable += 1;
                    assert_eq!(v, alpha_character(&g, &s, &sigma).unwrap(), "{g:?} {s} {sigma}");
                }
            }
        }
    }
    assert!(applicable > 50);
}

#[test]
fn r_flat_block_counts_exhaustive() {
    for r in 2..=6 {
        let g = Multigraph::complete(r, 1).unwrap();
        let zero = vec![Ratio::from_integer(0i64); r];
        for sigma in g.automorphisms().unwrap() {
            let q = zonolat::graphs::quotient::<i64>(&g, &sigma).unwrap();
            let orbits = quotient_pair_orbits(&g, &sigma, &q);
            let forests = quotient_forests(&orbits, q.cycles.len());
            let d = a_sets(&g, &sigma, &[], &zero).unwrap();
            assert_eq!(d.r_flat, Some(SetPartition::singletons(r)));
            if r <= 4 {
                for f in &forests {
                    a_sets(&g, &sigma, f, &zero).unwrap();
                }
            }
        }
    }
}

#[test]
fn feasibility_criteria_match_direct_solve() {
    let graphs = [Multigraph::complete(4, 1).unwrap(), Multigraph::complete(4, 2).unwrap(), square(), Multigraph::triangle(2, 4, 4)];
    let omegas = ["0,0,0,0", "1/2,1/2,1/2,1/2", "1/4,1/4,1/4,1/4", "1/2,1/2,0,0", "3/4,3/4,1/4,1/4"];
    let mut checked = 0;
    for g in &graphs {
        for om in omegas.iter().map(|s| w(s)).filter(|o| o.len() == g.r()) {
            for sigma in g.automorphisms().unwrap() {
                if (0..g.r()).any(|a| om[sigma.apply(a)] != om[a]) {
                    continue;
                }
                let q = zonolat::graphs::quotient::<i64>(g, &sigma).unwrap();
                for s in flats(g).elements().iter().cloned().filter(|s| sigma.stabilizes(s)) {
                    let ps = project_flat(&q, &s);
                    for b in SetPartition::all(q.cycles.len()).into_iter().filter(|b| b.refines(&ps)) {
                        let f = face_lattice_feasibility(g, &sigma, &s, &b, &om).unwrap();
                        assert_eq!(f.untranslated_criterion, f.untranslated_direct, "{s} {b} {sigma}");
                        if s == SetPartition::whole(g.r()) {
                            assert_eq!(f.translated_criterion, f.translated_direct, "{b} {sigma} {om:?}");
                        }
                        checked += 1;
                    }
                }
            }
        }
    }
    assert!(checked > 100);
}

#[test]
fn non_invariant_omega_rejected() {
    let k4 = Multigraph::complete(4, 1).unwrap();
    assert!(permutation_character(&k4, &w("1/2,1/2,0,0"), &Budget::default()).is_err());
    assert!(verify_decomposition(&k4, &w("1/2,1/2,0,0"), &Budget::default()).is_err());
}
