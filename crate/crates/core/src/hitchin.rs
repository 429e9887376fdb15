//! Combinatorial data of the decomposition theorem for Hitchin fibrations
//! over the reduced locus: supports, local-system ranks and stalk
//! dimensions, all in terms of partitions of the rank `n`.

use num_integer::Integer;
use num_rational::Ratio;

use crate::error::{invalid, Error, Result};
use crate::graphs::{dual_graph, Multigraph};
use crate::partition::IntPartition;
use crate::posets::sphere_count;
use crate::scalar::{factorial, ExactInt};
use crate::zonotopes::{graphical_count, Budget, Zonotope};

pub use crate::posets::{omega_vector, rank_formula};

/// Rank, degree and genus.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HitchinInstance {
    pub n: u64,
    pub d: i64,
    pub g: u64,
}

impl HitchinInstance {
    pub fn new(n: u64, d: i64, g: u64) -> Result<Self> {
        if n == 0 {
            return invalid("rank must be positive");
        }
        if g < 2 {
            return invalid("genus must be at least 2");
        }
        Ok(HitchinInstance { n, d, g })
    }

    /// `2 c(n, g) = 2(g−1)n² + 2`.
    pub fn moduli_dimension(&self) -> u64 {
        2 * (self.g - 1) * self.n * self.n + 2
    }
}

/// `d n_i / n ∈ ℤ` for every part.
pub fn is_d_integral(n: &IntPartition, d: i64) -> bool {
    let total = n.n() as i64;
    n.parts().iter().all(|&p| (d * p as i64) % total == 0)
}

/// Number of set partitions of `[n]` whose block sizes are the parts of `n`.
pub fn branch_count(n: &IntPartition) -> u64 {
    let mut denom: u128 = 1;
    let mut run = 0u64;
    let parts = n.parts();
    for (i, &p) in parts.iter().enumerate() {
        denom *= factorial(p) as u128;
        run = if i > 0 && parts[i - 1] == p { run + 1 } else { 1 };
        denom *= run as u128;
    }
    let num: u128 = (1..=n.n() as u128).product();
    (num / denom) as u64
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportRow {
    pub partition: IntPartition,
    pub d_integral: bool,
    pub rank: i64,
    pub supports: bool,
    pub branches: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportReport {
    pub instance: HitchinInstance,
    pub rows: Vec<SupportRow>,
}

impl SupportReport {
    pub fn supporting(&self) -> Vec<&IntPartition> {
        self.rows.iter().filter(|r| r.supports).map(|r| &r.partition).collect()
    }
}

/// Largest `ℓ(n)` for which the rank is also computed as a sphere count.
const SPHERE_CHECK_MAX: usize = 7;

/// One row per partition of `n`: a partition supports a summand iff it is
/// trivial or its rank is positive.
pub fn supports(inst: &HitchinInstance) -> Result<SupportReport> {
    let mut rows = Vec::new();
    for p in IntPartition::all(inst.n) {
        let rank = rank_formula(&p, inst.d);
        if p.len() >= 2 && p.len() <= SPHERE_CHECK_MAX {
            let kl = Multigraph::complete(p.len(), 1)?;
            let sc = sphere_count(&kl, &omega_vector::<i64>(&p, inst.d))?;
            if sc != rank {
                return Err(Error::Verification(format!("rank of {p}: formula {rank}, sphere count {sc}")));
            }
        }
        let d_integral = is_d_integral(&p, inst.d);
        let supports = p.is_trivial() || rank > 0;
        if supports != (p.is_trivial() || !d_integral) {
            return Err(Error::Verification(format!("support dichotomy fails at {p}, d = {}", inst.d)));
        }
        rows.push(SupportRow { branches: branch_count(&p), partition: p, d_integral, rank, supports });
    }
    Ok(SupportReport { instance: *inst, rows })
}

#[derive(Debug, Clone)]
pub struct StalkReport<T> {
    pub graph: Multigraph,
    pub omega: Vec<Ratio<T>>,
    pub formula: T,
    /// Present when enumeration fits the budget.
    pub oracle: Option<T>,
}

impl<T: ExactInt> StalkReport<T> {
    pub fn value(&self) -> &T {
        &self.formula
    }
}

fn oracle_count<T: ExactInt>(g: &Multigraph, omega: &[Ratio<T>], budget: &Budget) -> Result<Option<T>> {
    let z = Zonotope::graphical(g).translated(omega.to_vec())?;
    match z.interior_count(budget) {
        Ok(c) => Ok(Some(c)),
        Err(Error::Budget(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

/// `C(Z_{Γ[m]} + ω_m(d))`, the number of irreducible components of the
/// fibre over a point of the stratum of `m`.
pub fn stalk_dimension<T: ExactInt>(m: &IntPartition, inst: &HitchinInstance, budget: &Budget) -> Result<StalkReport<T>> {
    if m.n() != inst.n {
        return invalid(format!("{m} is not a partition of {}", inst.n));
    }
    let graph = dual_graph(m, inst.g)?;
    let omega = omega_vector::<T>(m, inst.d);
    let formula = graphical_count(&graph, &omega, budget)?.total;
    let oracle = oracle_count(&graph, &omega, budget)?;
    if let Some(o) = &oracle {
        if *o != formula {
            return Err(Error::Verification(format!("stalk of {m}: formula {formula}, enumeration {o}")));
        }
    }
    Ok(StalkReport { graph, omega, formula, oracle })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GcdRow<T> {
    pub partition: IntPartition,
    pub at_d: T,
    pub at_gcd: T,
    pub oracle_checked: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GcdReport<T> {
    pub instance: HitchinInstance,
    pub gcd: i64,
    pub rows: Vec<GcdRow<T>>,
    pub holds: bool,
}

/// Largest `ℓ(m)` for which gcd invariance is also checked by enumeration.
const GCD_ORACLE_MAX: usize = 4;

/// Compares `C(Z_{Γ[m]} + ω_m(d))` with the same count at `gcd(d, n)` for
/// every partition `m` of `n`.
pub fn gcd_invariance<T: ExactInt>(inst: &HitchinInstance, budget: &Budget) -> Result<GcdReport<T>> {
    let gcd = inst.d.gcd(&(inst.n as i64));
    let mut rows = Vec::new();
    for m in IntPartition::all(inst.n) {
        let graph = dual_graph(&m, inst.g)?;
        let w_d = omega_vector::<T>(&m, inst.d);
        let w_g = omega_vector::<T>(&m, gcd);
        let at_d = graphical_count(&graph, &w_d, budget)?.total;
        let at_gcd = graphical_count(&graph, &w_g, budget)?.total;
        let mut oracle_checked = false;
        if m.len() <= GCD_ORACLE_MAX {
            for (w, v) in [(&w_d, &at_d), (&w_g, &at_gcd)] {
                if let Some(o) = oracle_count(&graph, w, budget)? {
                    if o != *v {
                        return Err(Error::Verification(format!("count for {m}: formula {v}, enumeration {o}")));
                    }
                    oracle_checked = true;
                }
            }
        }
        rows.push(GcdRow { partition: m, at_d, at_gcd, oracle_checked });
    }
    let holds = rows.iter().all(|r| r.at_d == r.at_gcd);
    Ok(GcdReport { instance: *inst, gcd, rows, holds })
}
