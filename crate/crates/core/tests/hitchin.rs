use zonolat::hitchin::*;
use zonolat::posets::sphere_count;
use zonolat::scalar::factorial;
use zonolat::zonotopes::{graphical_count, Budget};
use zonolat::{IntPartition, Multigraph};

fn p(s: &str) -> IntPartition {
    s.parse().unwrap()
}

#[test]
fn support_dichotomy_n4() {
    let sup = |d| -> Vec<String> {
        supports(&HitchinInstance::new(4, d, 2).unwrap()).unwrap().supporting().iter().map(|q| q.to_string()).collect()
    };
    assert_eq!(sup(0), vec!["{4}"]);
    assert_eq!(sup(1).len(), 5);
    assert_eq!(sup(2), vec!["{4}", "{3,1}", "{2,1,1}", "{1,1,1,1}"]);
}

#[test]
fn dichotomy_up_to_six() {
    for n in 1..=6 {
        for d in -(n as i64)..=2 * n as i64 {
            let rep = supports(&HitchinInstance::new(n, d, 2).unwrap()).unwrap();
            for row in &rep.rows {
                if !row.partition.is_trivial() {
                    assert!(row.d_integral != row.supports, "n={n} d={d} {}", row.partition);
                }
            }
        }
    }
}

#[test]
fn coprime_ranks_are_factorials() {
    for n in 2..=7u64 {
        for d in 1..n as i64 {
            if num_integer::gcd(d, n as i64) != 1 {
                continue;
            }
            for m in IntPartition::all(n) {
                assert_eq!(rank_formula(&m, d), factorial(m.len() as u64 - 1), "{m} d={d}");
            }
        }
    }
}

#[test]
fn rank_is_sphere_count() {
    for n in 2..=6u64 {
        for d in 0..=n as i64 {
            for m in IntPartition::all(n).into_iter().filter(|m| m.len() >= 2) {
                let k = Multigraph::complete(m.len(), 1).unwrap();
                assert_eq!(rank_formula(&m, d), sphere_count(&k, &omega_vector::<i64>(&m, d)).unwrap());
            }
        }
    }
}

#[test]
fn gcd_invariance_up_to_six() {
    let b = Budget::default();
    for n in 1..=6u64 {
        for d in 0..=n as i64 {
            let rep = gcd_invariance::<i64>(&HitchinInstance::new(n, d, 2).unwrap(), &b).unwrap();
            assert!(rep.holds, "n={n} d={d}");
        }
    }
}

#[test]
fn stalk_values() {
    let b = Budget::default();
    let s = stalk_dimension::<i64>(&p("1,1,1,1"), &HitchinInstance::new(4, 1, 2).unwrap(), &b).unwrap();
    assert_eq!((s.formula, s.oracle), (128, Some(128)));
    let s = stalk_dimension::<i64>(&p("1,1,1,1"), &HitchinInstance::new(4, 2, 2).unwrap(), &b).unwrap();
    assert_eq!(s.formula, 116);
    let s = stalk_dimension::<i64>(&p("2,1"), &HitchinInstance::new(3, 1, 3).unwrap(), &b).unwrap();
    assert_eq!(s.oracle, Some(s.formula));
}

#[test]
fn stalk_matches_branch_weighted_rows() {
    let b = Budget::default();
    for n in 2..=5u64 {
        for d in 0..n as i64 {
            let inst = HitchinInstance::new(n, d, 2).unwrap();
            for m in IntPartition::all(n) {
                let s = stalk_dimension::<i64>(&m, &inst, &b).unwrap();
                let g = graphical_count(&s.graph, &s.omega, &b).unwrap();
                let from_rows: i64 = g.rows.iter().map(|r| r.contribution).sum();
                assert_eq!(from_rows, s.formula, "{m} d={d}");
            }
        }
    }
}
