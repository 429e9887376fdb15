//! Automorphism actions on lattice points of graphical zonotopes: fixed-locus
//! zonotopes, orientation and α characters, the A/Half set combinatorics of
//! quotient flats, and a character-level check of the decomposition of
//! `C(Z_Γ + ω)` into induced summands.

use std::collections::{BTreeSet, HashSet};

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::Zero;

use crate::error::{invalid, Error, Result};
use crate::graphs::{quotient, Multigraph, Permutation, Quotient};
use crate::lattice::solve_integer;
use crate::partition::{SetPartition, UnionFind};
use crate::posets::{is_omega_integral, FinitePoset};
use crate::scalar::{is_strict_half, v2, ExactInt};
use crate::zonotopes::{Budget, VectorConfig, Zonotope};

/// Values of a class function on an explicit list of group elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterVector<T> {
    pub group: Vec<Permutation>,
    pub values: Vec<T>,
}

impl<T: ExactInt> CharacterVector<T> {
    pub fn at(&self, sigma: &Permutation) -> Option<&T> {
        self.group.iter().position(|g| g == sigma).map(|i| &self.values[i])
    }

    /// Value at the identity.
    pub fn dimension(&self) -> T {
        self.group
            .iter()
            .position(Permutation::is_identity)
            .map(|i| self.values[i].clone())
            .unwrap_or_else(T::zero)
    }

    /// Constant on conjugacy classes of the listed group.
    pub fn is_class_function(&self) -> bool {
        self.group.iter().enumerate().all(|(i, s)| {
            self.group.iter().all(|g| {
                let c = g.compose(s).compose(&g.inverse());
                self.at(&c).is_none_or(|v| *v == self.values[i])
            })
        })
    }
}

fn ensure_automorphism(g: &Multigraph, sigma: &Permutation) -> Result<()> {
    if !g.is_automorphism(sigma) {
        return invalid(format!("{sigma} is not an automorphism"));
    }
    Ok(())
}

fn ensure_invariant<T: ExactInt>(sigma: &Permutation, omega: &[Ratio<T>]) -> Result<()> {
    if (0..omega.len()).any(|a| omega[sigma.apply(a)] != omega[a]) {
        return invalid(format!("ω is not invariant under {sigma}"));
    }
    Ok(())
}

fn parity_sign(k: i64) -> i64 {
    if k.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Sign of the action on edge orientations: each edge `a < b` whose image
/// is reversed contributes `(−1)^{y_ab}`.
pub fn orientation_direct(g: &Multigraph, sigma: &Permutation) -> i64 {
    let flips: u64 = g
        .edges()
        .iter()
        .filter(|&&(a, b, _)| sigma.apply(a) > sigma.apply(b))
        .map(|e| e.2)
        .sum();
    parity_sign(flips as i64)
}

/// Closed form `(−1)^{Σ_i (1/l_i) Σ_{a ∈ σ_i} y_{a, σ^{l_i/2}(a)}}` over even
/// cycles.
pub fn orientation_closed(g: &Multigraph, sigma: &Permutation) -> i64 {
    let mut e = 0u64;
    for c in sigma.cycles() {
        let l = c.len();
        if l % 2 == 1 {
            continue;
        }
        let half = sigma.pow(l / 2);
        let s: u64 = c.iter().map(|&a| g.y(a, half.apply(a))).sum();
        assert!(s % l as u64 == 0);
        e += s / l as u64;
    }
    parity_sign(e as i64)
}

/// The orientation character `o_Γ(σ)`; both routes are computed and must
/// agree.
pub fn orientation_character(g: &Multigraph, sigma: &Permutation) -> Result<i64> {
    ensure_automorphism(g, sigma)?;
    let (d, c) = (orientation_direct(g, sigma), orientation_closed(g, sigma));
    if d != c {
        return Err(Error::Verification(format!("orientation routes disagree for {sigma}")));
    }
    Ok(c)
}

/// `α_S(σ) = sgn(σ on blocks of S) · o_{Γ^S}(σ)`.
pub fn alpha_character(g: &Multigraph, s: &SetPartition, sigma: &Permutation) -> Result<i64> {
    ensure_automorphism(g, sigma)?;
    if !sigma.stabilizes(s) {
        return invalid(format!("{sigma} does not stabilize {s}"));
    }
    let gs = g.contract(s)?;
    let on = sigma.on_blocks(s);
    Ok(on.sign() * orientation_character(&gs, &on)?)
}

/// The σ-fixed part of `Z_Γ + ω`, written in cycle coordinates.
#[derive(Debug, Clone)]
pub struct FixedZonotope<T> {
    pub sigma: Permutation,
    pub quotient: Quotient<T>,
    pub zonotope: Zonotope<T>,
}

impl<T: ExactInt> FixedZonotope<T> {
    /// `ι`: the point constant on each cycle.
    pub fn lift(&self, v: &[T]) -> Vec<T> {
        self.quotient.vertex_to_cycle.iter().map(|&i| v[i].clone()).collect()
    }

    pub fn project(&self, x: &[T]) -> Option<Vec<T>> {
        let v: Vec<T> = self.quotient.cycles.iter().map(|c| x[c[0]].clone()).collect();
        (self.lift(&v) == x).then_some(v)
    }
}

/// `Σ_{i<j} x_ij [(l_j/g) e_i, (l_i/g) e_j] + t_σ + ω_σ`.
pub fn fixed_zonotope<T: ExactInt>(g: &Multigraph, sigma: &Permutation, omega: &[Ratio<T>]) -> Result<FixedZonotope<T>> {
    ensure_invariant(sigma, omega)?;
    let q = quotient::<T>(g, sigma)?;
    let k = q.cycles.len();
    let mut vectors = Vec::new();
    let mut offset = vec![T::zero(); k];
    for (i, j, x) in q.graph.edges() {
        let (li, lj) = (q.lengths[i], q.lengths[j]);
        let gg = li.gcd(&lj);
        let mut u = vec![T::zero(); k];
        u[j] = T::from_i64_exact((li / gg) as i64);
        u[i] = -T::from_i64_exact((lj / gg) as i64);
        vectors.push((u, x));
        offset[i] = offset[i].clone() + T::from_i64_exact((x as usize * lj / gg) as i64);
    }
    if k == 1 && g.r() == 1 {
        offset[0] = T::one();
    }
    let avg = q.average(omega);
    let translation: Vec<Ratio<T>> = q.t.iter().zip(&avg).map(|(t, w)| t.clone() + w.clone()).collect();
    let config = VectorConfig::with_multiplicities(k, vectors)?;
    let zonotope = Zonotope::new(config, offset, translation)?;
    Ok(FixedZonotope { sigma: sigma.clone(), quotient: q, zonotope })
}

/// Number of σ-fixed interior lattice points of `Z_Γ + ω`, via the fixed
/// zonotope.
pub fn fixed_interior_count<T: ExactInt>(
    g: &Multigraph,
    sigma: &Permutation,
    omega: &[Ratio<T>],
    budget: &Budget,
) -> Result<T> {
    fixed_zonotope(g, sigma, omega)?.zonotope.interior_count(budget)
}

fn translated_graphical<T: ExactInt>(g: &Multigraph, omega: &[Ratio<T>]) -> Result<Zonotope<T>> {
    Zonotope::graphical(g).translated(omega.to_vec())
}

/// `χ(σ)` = number of σ-fixed interior points of `Z_Γ + ω`, computed by
/// filtering the oracle's point list and by the fixed zonotope; the two
/// point sets must coincide.
pub fn permutation_character<T: ExactInt>(
    g: &Multigraph,
    omega: &[Ratio<T>],
    budget: &Budget,
) -> Result<CharacterVector<T>> {
    let group = g.automorphisms()?;
    for s in &group {
        ensure_invariant(s, omega)?;
    }
    let points = translated_graphical(g, omega)?.interior_points(budget)?;
    let mut values = Vec::with_capacity(group.len());
    for s in &group {
        let fixed: Vec<&Vec<T>> = points
            .iter()
            .filter(|x| (0..g.r()).all(|a| x[s.apply(a)] == x[a]))
            .collect();
        let fz = fixed_zonotope(g, s, omega)?;
        let mut lifted: Vec<Vec<T>> = fz.zonotope.interior_points(budget)?.iter().map(|v| fz.lift(v)).collect();
        lifted.sort();
        if lifted.len() != fixed.len() || lifted.iter().zip(&fixed).any(|(a, b)| a != *b) {
            return Err(Error::Verification(format!(
                "fixed points of {s}: oracle {} vs fixed zonotope {}",
                fixed.len(),
                lifted.len()
            )));
        }
        values.push(T::from_i64_exact(fixed.len() as i64));
    }
    Ok(CharacterVector { group, values })
}

/// Number of orbits of interior lattice points under `Aut(Γ)`, by direct
/// orbit enumeration.
pub fn interior_orbit_count<T: ExactInt>(g: &Multigraph, omega: &[Ratio<T>], budget: &Budget) -> Result<usize> {
    let group = g.automorphisms()?;
    let points = translated_graphical(g, omega)?.interior_points(budget)?;
    let mut reps: HashSet<Vec<T>> = HashSet::new();
    for x in &points {
        let canon = group
            .iter()
            .map(|s| {
                let mut y = x.clone();
                for a in 0..g.r() {
                    y[s.apply(a)] = x[a].clone();
                }
                y
            })
            .min()
            .unwrap();
        reps.insert(canon);
    }
    Ok(reps.len())
}

/// One σ-orbit of vertex pairs joining two different cycles: an edge of the
/// quotient graph (up to parallel copies).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairOrbit {
    pub cycles: (usize, usize),
    pub pairs: Vec<(usize, usize)>,
}

/// Adjacent pair orbits between distinct cycles, in order of their least
/// pair.
pub fn quotient_pair_orbits(g: &Multigraph, sigma: &Permutation, q: &Quotient<impl ExactInt>) -> Vec<PairOrbit> {
    let mut seen: HashSet<(usize, usize)> = HashSet::new();
    let mut out = Vec::new();
    for (a, b, _) in g.edges() {
        let (ca, cb) = (q.vertex_to_cycle[a], q.vertex_to_cycle[b]);
        if ca == cb || seen.contains(&(a, b)) {
            continue;
        }
        let mut pairs = Vec::new();
        let (mut x, mut y) = (a, b);
        loop {
            let p = (x.min(y), x.max(y));
            if !seen.insert(p) {
                break;
            }
            pairs.push(p);
            x = sigma.apply(x);
            y = sigma.apply(y);
        }
        pairs.sort_unstable();
        out.push(PairOrbit { cycles: (ca.min(cb), ca.max(cb)), pairs });
    }
    out
}

/// All forests of the quotient graph, as sets of pair orbits.
pub fn quotient_forests(orbits: &[PairOrbit], cycles: usize) -> Vec<Vec<usize>> {
    fn go(i: usize, orbits: &[PairOrbit], uf: &UnionFind, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == orbits.len() {
            out.push(cur.clone());
            return;
        }
        go(i + 1, orbits, uf, cur, out);
        let mut next = uf.clone();
        if next.union(orbits[i].cycles.0, orbits[i].cycles.1) {
            cur.push(i);
            go(i + 1, orbits, &next, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, orbits, &UnionFind::new(cycles), &mut Vec::new(), &mut out);
    out
}

/// `π(S)`: the partition of cycles induced by a σ-invariant partition.
pub fn project_flat<T: ExactInt>(q: &Quotient<T>, s: &SetPartition) -> SetPartition {
    let mut uf = UnionFind::new(q.cycles.len());
    for block in s.blocks() {
        for w in block.windows(2) {
            uf.union(q.vertex_to_cycle[w[0]], q.vertex_to_cycle[w[1]]);
        }
    }
    uf.partition()
}

/// Pairing partition of `σ_i^{l_i/2}` on the cycle `σ_i`.
fn half_power_type<T: ExactInt>(sigma: &Permutation, q: &Quotient<T>, i: usize, r: usize) -> SetPartition {
    let half = sigma.pow(q.lengths[i] / 2);
    let mut uf = UnionFind::new(r);
    for &a in &q.cycles[i] {
        uf.union(a, half.apply(a));
    }
    uf.partition()
}

fn join_all(parts: &[SetPartition], r: usize) -> SetPartition {
    parts.iter().fold(SetPartition::singletons(r), |acc, p| acc.join(p))
}

/// A-set data of a flat `B` of the quotient graph.
#[derive(Debug, Clone)]
pub struct ASetData<T> {
    /// Flat of the quotient, as a partition of cycle indices.
    pub b: SetPartition,
    /// Minimal 2-adic valuation of cycle lengths, per block.
    pub m: Vec<u32>,
    /// gcd of cycle lengths, per block.
    pub gcd: Vec<usize>,
    pub a_j: Vec<Vec<SetPartition>>,
    pub a: Vec<SetPartition>,
    pub half: Vec<SetPartition>,
    /// Total of ω over the lift of each block.
    pub omega_b: Vec<Ratio<T>>,
    /// Present when built from a forest.
    pub r_flat: Option<SetPartition>,
}

impl<T: ExactInt> ASetData<T> {
    /// Elements of `A_{B,σ}` refining `s`.
    pub fn a_below(&self, s: &SetPartition) -> Vec<SetPartition> {
        self.a.iter().filter(|p| p.refines(s)).cloned().collect()
    }
}

/// A-sets and Half set of the quotient flat `b`.
pub fn a_sets_for_flat<T: ExactInt>(
    g: &Multigraph,
    sigma: &Permutation,
    b: &SetPartition,
    omega: &[Ratio<T>],
) -> Result<ASetData<T>> {
    ensure_automorphism(g, sigma)?;
    let q = quotient::<T>(g, sigma)?;
    if b.r() != q.cycles.len() {
        return invalid("quotient flat has the wrong size");
    }
    let r = g.r();
    let blocks = b.blocks();
    let mut m = Vec::new();
    let mut gcds = Vec::new();
    let mut a_j = Vec::new();
    let mut a = Vec::new();
    let mut half = Vec::new();
    let mut omega_b = Vec::new();
    for block in &blocks {
        let mj = block.iter().map(|&i| v2(q.lengths[i] as u64)).min().unwrap();
        let gj = block.iter().fold(0usize, |acc, &i| acc.gcd(&q.lengths[i]));
        let mut members = Vec::new();
        if mj > 0 {
            for &i in block {
                if v2(q.lengths[i] as u64) != mj {
                    continue;
                }
                let a0 = q.cycles[i][0];
                let partner = sigma.pow(q.lengths[i] / 2).apply(a0);
                // independent of the representative
                for &a1 in &q.cycles[i] {
                    let p1 = sigma.pow(q.lengths[i] / 2).apply(a1);
                    assert_eq!(g.y(a1, p1) % 2, g.y(a0, partner) % 2);
                }
                if g.y(a0, partner) % 2 == 1 {
                    members.push(half_power_type(sigma, &q, i, r));
                }
            }
        }
        let join = join_all(&members, r);
        if mj > 0 && members.len() % 2 == 1 {
            a.push(join.clone());
        }
        let wb = block
            .iter()
            .flat_map(|&i| q.cycles[i].iter())
            .fold(Ratio::<T>::zero(), |acc, &k| acc + omega[k].clone());
        let ratio = wb.clone() / Ratio::from_integer(T::from_i64_exact(gj as i64));
        if is_strict_half(&ratio) && !half.contains(&join) {
            half.push(join);
        }
        m.push(mj);
        gcds.push(gj);
        a_j.push(members);
        omega_b.push(wb);
    }
    Ok(ASetData { b: b.clone(), m, gcd: gcds, a_j, a, half, omega_b, r_flat: None })
}

/// `R(F)`: components of the lifts of the forest's pair orbits.
pub fn lift_forest(r: usize, orbits: &[PairOrbit], forest: &[usize]) -> SetPartition {
    let mut uf = UnionFind::new(r);
    for &f in forest {
        for &(a, b) in &orbits[f].pairs {
            uf.union(a, b);
        }
    }
    uf.partition()
}

/// `B(F)`: components of the forest in the quotient graph.
pub fn forest_flat(cycles: usize, orbits: &[PairOrbit], forest: &[usize]) -> SetPartition {
    let mut uf = UnionFind::new(cycles);
    for &f in forest {
        uf.union(orbits[f].cycles.0, orbits[f].cycles.1);
    }
    uf.partition()
}

/// Full A-set data for a forest of `Γ/σ` (given by pair-orbit indices).
/// Checks that each block `B_j` lifts to `gcd_{i ∈ B_j} l_i` blocks of `R(F)`.
pub fn a_sets<T: ExactInt>(
    g: &Multigraph,
    sigma: &Permutation,
    forest: &[usize],
    omega: &[Ratio<T>],
) -> Result<ASetData<T>> {
    ensure_automorphism(g, sigma)?;
    let q = quotient::<T>(g, sigma)?;
    let orbits = quotient_pair_orbits(g, sigma, &q);
    if forest.iter().any(|&f| f >= orbits.len()) {
        return invalid("forest edge out of range");
    }
    let mut uf = UnionFind::new(q.cycles.len());
    for &f in forest {
        if !uf.union(orbits[f].cycles.0, orbits[f].cycles.1) {
            return invalid("edge set is not a forest");
        }
    }
    let b = forest_flat(q.cycles.len(), &orbits, forest);
    let rf = lift_forest(g.r(), &orbits, forest);
    let mut data = a_sets_for_flat(g, sigma, &b, omega)?;
    for (j, block) in b.blocks().iter().enumerate() {
        let lifted: BTreeSet<usize> = block
            .iter()
            .flat_map(|&i| q.cycles[i].iter())
            .map(|&a| rf.block_of(a))
            .collect();
        if lifted.len() != data.gcd[j] {
            return Err(Error::Verification(format!(
                "block {j} of B(F) lifts to {} blocks, expected {}",
                lifted.len(),
                data.gcd[j]
            )));
        }
    }
    data.r_flat = Some(rf);
    Ok(data)
}

/// Whether `v + span(B)` meets the lattice in cycle coordinates, i.e. the
/// system `Σ_{i ∈ B_j} l_i x_i = Σ_{i ∈ B_j} l_i v_i` has an integer
/// solution.
pub fn quotient_flat_feasible<T: ExactInt>(lengths: &[usize], b: &SetPartition, v: &[Ratio<T>]) -> bool {
    let blocks = b.blocks();
    let n = lengths.len();
    let mut a = Vec::new();
    let mut rhs = Vec::new();
    for block in &blocks {
        let mut row = vec![T::zero(); n];
        let mut s = Ratio::<T>::zero();
        for &i in block {
            let l = T::from_i64_exact(lengths[i] as i64);
            row[i] = l.clone();
            s = s + v[i].clone() * Ratio::from_integer(l);
        }
        a.push(row);
        rhs.push(s);
    }
    solve_integer(&a, &rhs, n).is_some()
}

/// Outcome of the face criterion together with the direct solve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Feasibility {
    pub untranslated_criterion: bool,
    pub untranslated_direct: bool,
    pub translated_criterion: bool,
    pub translated_direct: bool,
}

/// Lattice-point criteria for the affine span of the face `b` of the fixed
/// zonotope: untranslated for `Γ_S`, and translated by `ω` for `Γ`. Both
/// are compared with a direct integer solve.
pub fn face_lattice_feasibility<T: ExactInt>(
    g: &Multigraph,
    sigma: &Permutation,
    s: &SetPartition,
    b: &SetPartition,
    omega: &[Ratio<T>],
) -> Result<Feasibility> {
    ensure_automorphism(g, sigma)?;
    ensure_invariant(sigma, omega)?;
    if !sigma.stabilizes(s) || !g.is_flat(s) {
        return invalid(format!("{s} is not a σ-invariant flat"));
    }
    let q = quotient::<T>(g, sigma)?;
    let ps = project_flat(&q, s);
    if !b.refines(&ps) {
        return invalid(format!("π({s}) = {ps} is not above {b}"));
    }
    let data = a_sets_for_flat(g, sigma, b, omega)?;
    let untranslated_criterion = data.a_below(s).is_empty();
    let qs = quotient::<T>(&g.restrict(s), sigma)?;
    let untranslated_direct = quotient_flat_feasible(&q.lengths, b, &qs.t);
    let mut a_sorted = data.a.clone();
    a_sorted.sort();
    let mut h_sorted = data.half.clone();
    h_sorted.sort();
    let translated_criterion = data
        .omega_b
        .iter()
        .zip(&data.gcd)
        .all(|(w, &gj)| {
            let two_w = w.clone() * Ratio::from_integer(T::from_i64_exact(2));
            two_w.is_integer() && two_w.to_integer().is_multiple_of(&T::from_i64_exact(gj as i64))
        })
        && a_sorted == h_sorted;
    let avg = q.average(omega);
    let v: Vec<Ratio<T>> = q.t.iter().zip(&avg).map(|(t, w)| t.clone() + w.clone()).collect();
    let translated_direct = quotient_flat_feasible(&q.lengths, b, &v);
    Ok(Feasibility { untranslated_criterion, untranslated_direct, translated_criterion, translated_direct })
}

/// Closed form for α when `A_{π(S),σ}^{≤S}` is empty:
/// `(−1)^{ℓ(S) − #orbits + |A_{π(S),σ}|}`. Returns `None` when the
/// hypothesis fails.
pub fn alpha_closed_form(g: &Multigraph, s: &SetPartition, sigma: &Permutation) -> Result<Option<i64>> {
    let q = quotient::<i64>(g, sigma)?;
    let ps = project_flat(&q, s);
    let zero = vec![Ratio::<i64>::zero(); g.r()];
    let data = a_sets_for_flat(g, sigma, &ps, &zero)?;
    if !data.a_below(s).is_empty() {
        return Ok(None);
    }
    let orbits = sigma.on_blocks(s).cycles().len();
    Ok(Some(parity_sign((s.len() - orbits + data.a.len()) as i64)))
}

/// `Fl_ω ∪ {1̂}` restricted to elements fixed by `sigma`.
fn fixed_upper_poset<T: ExactInt>(g: &Multigraph, omega: &[Ratio<T>], sigma: &Permutation) -> FinitePoset {
    let mut el: Vec<SetPartition> = crate::posets::non_integral_flats(g, omega)
        .into_iter()
        .filter(|s| sigma.stabilizes(s))
        .collect();
    el.push(SetPartition::whole(g.r()));
    FinitePoset::new(el)
}

/// Lefschetz character of the reduced homology attached to `S`:
/// `(−1)^{ℓ(S)−3} μ(S, 1̂)` over the σ-fixed part of `Fl_ω ∪ {1̂}`.
pub fn upper_homology_character<T: ExactInt>(
    g: &Multigraph,
    omega: &[Ratio<T>],
    s: &SetPartition,
    sigma: &Permutation,
) -> Result<i64> {
    let p = fixed_upper_poset(g, omega, sigma);
    let mut el: Vec<SetPartition> = p.elements().to_vec();
    if !el.contains(s) {
        el.push(s.clone());
    }
    let p = FinitePoset::new(el);
    let mu = p.mobius(s, &SetPartition::whole(g.r()))?;
    Ok(parity_sign(s.len() as i64 - 3) * mu)
}

/// `χ_{H̃_{r−3}}(σ) = (−1)^{r−3} μ_{F̂l_ω^σ}(0̂, 1̂)`.
pub fn homology_character<T: ExactInt>(g: &Multigraph, omega: &[Ratio<T>], sigma: &Permutation) -> Result<i64> {
    ensure_invariant(sigma, omega)?;
    upper_homology_character(g, omega, &SetPartition::singletons(g.r()), sigma)
}

/// One flat's contribution to the identity at σ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlatTerm<T> {
    pub flat: SetPartition,
    pub alpha: i64,
    /// `(−1)^{ℓ(S)−3} μ(S, 1̂)` in the σ-fixed poset.
    pub signed_mobius: i64,
    /// `C(Z^σ_{Γ_S})`.
    pub fixed_count: T,
    pub value: T,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaReport<T> {
    pub sigma: Permutation,
    /// `C(Z^σ + ω) − C(Z^σ)`.
    pub lhs: T,
    pub rhs: T,
    pub terms: Vec<FlatTerm<T>>,
    pub forests_checked: usize,
    pub forest_failures: Vec<String>,
    pub passed: bool,
}

/// An induced summand `Ind_{Stab(S)} (α_S ⊗ H̃ ⊗ C(Z_{Γ_S}))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Summand<T> {
    pub representative: SetPartition,
    pub orbit: Vec<SetPartition>,
    pub stabilizer: Vec<Permutation>,
    pub alpha: Vec<i64>,
    pub homology: Vec<i64>,
    pub zonotope: Vec<T>,
    /// Induced character on the whole automorphism group.
    pub induced: Vec<T>,
    pub dimension: T,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionReport<T> {
    pub group: Vec<Permutation>,
    pub per_sigma: Vec<SigmaReport<T>>,
    /// Character of `C(Z_Γ)`.
    pub base: Vec<T>,
    /// Character of `C(Z_Γ + ω)`.
    pub translated: Vec<T>,
    pub summands: Vec<Summand<T>>,
    /// `C(Z_Γ) + Σ dim` over summands.
    pub dimension_sum: T,
    pub passed: bool,
}

/// Verifies the decomposition of `C(Z_Γ + ω)` at the level of characters,
/// together with the per-forest coefficient identity behind it.
pub fn verify_decomposition<T: ExactInt>(
    g: &Multigraph,
    omega: &[Ratio<T>],
    budget: &Budget,
) -> Result<DecompositionReport<T>> {
    if omega.len() != g.r() {
        return invalid("ω has the wrong length");
    }
    if !omega.iter().fold(Ratio::<T>::zero(), |a, w| a + w.clone()).is_integer() {
        return invalid("ω must have integral total sum");
    }
    if !g.is_connected() {
        return invalid("decomposition needs a connected graph");
    }
    let group = g.automorphisms()?;
    for s in &group {
        ensure_invariant(s, omega)?;
    }
    let zero = vec![Ratio::<T>::zero(); g.r()];
    let fl_omega = crate::posets::non_integral_flats(g, omega);
    let mut per_sigma = Vec::new();
    let mut base = Vec::new();
    let mut translated = Vec::new();
    for sigma in &group {
        let with = fixed_interior_count(g, sigma, omega, budget)?;
        let without = fixed_interior_count(g, sigma, &zero, budget)?;
        let lhs = with.clone() - without.clone();
        base.push(without);
        translated.push(with);
        let poset = fixed_upper_poset(g, omega, sigma);
        let top = poset.index_of(&SetPartition::whole(g.r())).unwrap();
        let mut terms = Vec::new();
        let mut rhs = T::zero();
        for s in fl_omega.iter().filter(|s| sigma.stabilizes(s)) {
            let alpha = alpha_character(g, s, sigma)?;
            let mu = poset.mobius_idx(poset.index_of(s).unwrap(), top);
            let signed_mobius = parity_sign(s.len() as i64 - 3) * mu;
            let fixed_count = fixed_interior_count(&g.restrict(s), sigma, &zero, budget)?;
            let value = T::from_i64_exact(alpha * signed_mobius) * fixed_count.clone();
            rhs = rhs + value.clone();
            terms.push(FlatTerm { flat: s.clone(), alpha, signed_mobius, fixed_count, value });
        }
        let (forests_checked, forest_failures) = check_coefficient_identity(g, sigma, omega, &poset)?;
        let passed = lhs == rhs && forest_failures.is_empty();
        per_sigma.push(SigmaReport { sigma: sigma.clone(), lhs, rhs, terms, forests_checked, forest_failures, passed });
    }

    let summands = induced_summands(g, omega, &group, &fl_omega, budget)?;
    let mut dimension_sum = base[0].clone();
    for s in &summands {
        dimension_sum = dimension_sum + s.dimension.clone();
    }
    let characters_match = (0..group.len()).all(|k| {
        let total = summands.iter().fold(base[k].clone(), |acc, s| acc + s.induced[k].clone());
        total == translated[k]
    });
    let passed = per_sigma.iter().all(|p| p.passed) && characters_match && dimension_sum == translated[0];
    Ok(DecompositionReport { group, per_sigma, base, translated, summands, dimension_sum, passed })
}

/// Checks, for every forest `F` of `Γ/σ` with `R(F)` non-integral, that
/// `δ_{B(F), ω_σ+t_σ} − δ_{B(F), t_σ}` equals
/// `Σ_{S ≥ R(F)} (−1)^{|A_{π(S),σ}|} μ(S, 1̂) δ_{B(F), t_σ(Γ_S)}`.
fn check_coefficient_identity<T: ExactInt>(
    g: &Multigraph,
    sigma: &Permutation,
    omega: &[Ratio<T>],
    poset: &FinitePoset,
) -> Result<(usize, Vec<String>)> {
    let q = quotient::<T>(g, sigma)?;
    let orbits = quotient_pair_orbits(g, sigma, &q);
    let avg = q.average(omega);
    let shifted: Vec<Ratio<T>> = q.t.iter().zip(&avg).map(|(t, w)| t.clone() + w.clone()).collect();
    let top = poset.index_of(&SetPartition::whole(g.r())).unwrap();
    let zero = vec![Ratio::<T>::zero(); g.r()];
    let mut checked = 0;
    let mut failures = Vec::new();
    let flats: Vec<(usize, SetPartition, i64, Vec<Ratio<T>>)> = (0..poset.len())
        .filter(|&i| i != top)
        .map(|i| {
            let s = poset.element(i).clone();
            let ps = project_flat(&q, &s);
            let a = a_sets_for_flat(g, sigma, &ps, &zero).map(|d| d.a.len())?;
            let ts = quotient::<T>(&g.restrict(&s), sigma)?.t;
            Ok((i, s, parity_sign(a as i64), ts))
        })
        .collect::<Result<_>>()?;
    for forest in quotient_forests(&orbits, q.cycles.len()) {
        let rf = lift_forest(g.r(), &orbits, &forest);
        if is_omega_integral(&rf, omega) {
            continue;
        }
        let b = forest_flat(q.cycles.len(), &orbits, &forest);
        let lhs = quotient_flat_feasible(&q.lengths, &b, &shifted) as i64
            - quotient_flat_feasible(&q.lengths, &b, &q.t) as i64;
        let rhs: i64 = flats
            .iter()
            .filter(|(_, s, _, _)| rf.refines(s))
            .map(|(i, _, sign, ts)| sign * poset.mobius_idx(*i, top) * quotient_flat_feasible(&q.lengths, &b, ts) as i64)
            .sum();
        checked += 1;
        if lhs != rhs {
            let names: Vec<String> = forest
                .iter()
                .map(|&f| {
                    let (a, b) = orbits[f].pairs[0];
                    format!("{}{}", a + 1, b + 1)
                })
                .collect();
            failures.push(format!("σ={sigma} F={{{}}}: lhs {lhs} rhs {rhs}", names.join(",")));
        }
    }
    Ok((checked, failures))
}

fn induced_summands<T: ExactInt>(
    g: &Multigraph,
    omega: &[Ratio<T>],
    group: &[Permutation],
    fl_omega: &[SetPartition],
    budget: &Budget,
) -> Result<Vec<Summand<T>>> {
    let zero = vec![Ratio::<T>::zero(); g.r()];
    let mut done: HashSet<SetPartition> = HashSet::new();
    let mut out = Vec::new();
    let mut sorted = fl_omega.to_vec();
    sorted.sort();
    for s in &sorted {
        if done.contains(s) {
            continue;
        }
        let mut orbit: Vec<SetPartition> = group.iter().map(|h| s.permute(h.images())).collect();
        orbit.sort();
        orbit.dedup();
        done.extend(orbit.iter().cloned());
        let stabilizer: Vec<Permutation> = group.iter().filter(|h| h.stabilizes(s)).cloned().collect();
        let restricted = g.restrict(s);
        let mut alpha = Vec::new();
        let mut homology = Vec::new();
        let mut zonotope = Vec::new();
        let mut v = Vec::new();
        for tau in &stabilizer {
            let a = alpha_character(g, s, tau)?;
            let h = upper_homology_character(g, omega, s, tau)?;
            let z = fixed_interior_count(&restricted, tau, &zero, budget)?;
            v.push(T::from_i64_exact(a * h) * z.clone());
            alpha.push(a);
            homology.push(h);
            zonotope.push(z);
        }
        let stab_size = T::from_i64_exact(stabilizer.len() as i64);
        let mut induced = Vec::with_capacity(group.len());
        for sigma in group {
            let mut sum = T::zero();
            for h in group {
                let c = h.inverse().compose(sigma).compose(h);
                if let Some(k) = stabilizer.iter().position(|t| *t == c) {
                    sum = sum + v[k].clone();
                }
            }
            if !sum.is_multiple_of(&stab_size) {
                return Err(Error::Verification(format!("induced character of {s} is not integral")));
            }
            induced.push(sum / stab_size.clone());
        }
        let dimension = induced[group.iter().position(Permutation::is_identity).unwrap()].clone();
        out.push(Summand {
            representative: s.clone(),
            orbit,
            stabilizer,
            alpha,
            homology,
            zonotope,
            induced,
            dimension,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::parse_fraction_list;

    fn w(s: &str) -> Vec<Ratio<i64>> {
        parse_fraction_list(s).unwrap()
    }

    #[test]
    fn orientation_examples() {
        let t = Multigraph::triangle(3, 2, 2);
        let s = Permutation::parse("(12)", 3).unwrap();
        assert_eq!(orientation_character(&t, &Permutation::identity(3)).unwrap(), 1);
        for e in 1..5 {
            let t = Multigraph::triangle(e, 2, 2);
            let a = alpha_character(&t, &SetPartition::singletons(3), &s).unwrap();
            assert_eq!(a, if e % 2 == 0 { -1 } else { 1 });
        }
        let k3 = Multigraph::complete(3, 1).unwrap();
        assert_eq!(orientation_character(&k3, &Permutation::parse("(123)", 3).unwrap()).unwrap(), 1);
        assert_eq!(alpha_character(&k3, &SetPartition::whole(3), &s).unwrap(), 1);
        assert!(alpha_character(&k3, &SetPartition::parse("13|2", 3).unwrap(), &s).is_err());
    }

    #[test]
    fn fixed_zonotope_of_k4() {
        let k4 = Multigraph::complete(4, 1).unwrap();
        let s = Permutation::parse("(12)", 4).unwrap();
        let fz = fixed_zonotope(&k4, &s, &w("0,0,0,0")).unwrap();
        let classes: Vec<Vec<i64>> = fz.zonotope.config.classes().to_vec();
        assert_eq!(classes, vec![vec![-1, 2, 0], vec![-1, 0, 2], vec![0, -1, 1]]);
        assert_eq!(fz.zonotope.offset, vec![2, 1, 0]);
        assert_eq!(fz.zonotope.omega, w("1/2,0,0"));
        assert_eq!(fz.zonotope.interior_count(&Budget::default()).unwrap(), 2);
        assert!(fixed_zonotope(&k4, &s, &w("1/2,0,0,-1/2")).is_err());
    }

    #[test]
    fn permutation_character_k4() {
        let k4 = Multigraph::complete(4, 1).unwrap();
        let b = Budget::default();
        let chi = permutation_character(&k4, &w("1/4,1/4,1/4,1/4"), &b).unwrap();
        assert_eq!(chi.dimension(), 16);
        assert!(chi.is_class_function());
        let chi0 = permutation_character(&k4, &w("0,0,0,0"), &b).unwrap();
        assert_eq!(*chi0.at(&Permutation::parse("(12)", 4).unwrap()).unwrap(), 2);
        let k3 = Multigraph::complete(3, 1).unwrap();
        let chi = permutation_character(&k3, &w("0,0,0"), &b).unwrap();
        assert!(chi.values.iter().all(|&v| v == 1));
    }

    #[test]
    fn triangle_worked_example() {
        let g = Multigraph::triangle(2, 4, 4);
        let rep = verify_decomposition(&g, &w("1/2,1/2,0"), &Budget::default()).unwrap();
        assert!(rep.passed, "{rep:?}");
        assert_eq!(rep.translated[0] - rep.base[0], 7);
        assert_eq!(rep.translated[1] - rep.base[1], 1);
        let reps: Vec<String> = rep.summands.iter().map(|s| s.representative.to_string()).collect();
        assert_eq!(reps, vec!["13|2", "1|2|3"]);
        assert_eq!(rep.summands[1].induced, vec![1, 1]);
        assert_eq!(rep.summands[1].alpha, vec![1, -1]);
        assert_eq!(rep.summands[1].homology, vec![1, -1]);
        assert_eq!(rep.summands[0].induced, vec![6, 0]);
    }

    #[test]
    fn zero_translation_is_trivial() {
        let k3 = Multigraph::complete(3, 1).unwrap();
        let rep = verify_decomposition(&k3, &w("0,0,0"), &Budget::default()).unwrap();
        assert!(rep.passed);
        assert!(rep.summands.is_empty());
        assert!(rep.per_sigma.iter().all(|p| p.terms.is_empty() && p.lhs == 0));
    }

    #[test]
    fn a_sets_basics() {
        let k4 = Multigraph::complete(4, 1).unwrap();
        let s = Permutation::parse("(12)(34)", 4).unwrap();
        let d = a_sets::<i64>(&k4, &s, &[], &w("0,0,0,0")).unwrap();
        assert_eq!(d.r_flat, Some(SetPartition::singletons(4)));
        assert_eq!(d.m, vec![1, 1]);
        assert_eq!(d.a.len(), 2);
        let odd = Permutation::parse("(123)", 4).unwrap();
        let d = a_sets::<i64>(&k4, &odd, &[], &w("0,0,0,0")).unwrap();
        assert!(d.a.is_empty() && d.a_j.iter().all(Vec::is_empty));
    }

    #[test]
    fn feasibility_criteria_agree() {
        let k4 = Multigraph::complete(4, 1).unwrap();
        let s = Permutation::parse("(12)", 4).unwrap();
        let f = face_lattice_feasibility(&k4, &s, &SetPartition::whole(4), &SetPartition::whole(3), &w("0,0,0,0")).unwrap();
        assert_eq!(f.untranslated_criterion, f.untranslated_direct);
        assert_eq!(f.translated_criterion, f.translated_direct);
        // strict-half block sum with no matching A-set: infeasible
        let id = Permutation::identity(4);
        let f = face_lattice_feasibility(&k4, &id, &SetPartition::whole(4), &SetPartition::singletons(4), &w("1/2,1/2,0,0")).unwrap();
        assert!(!f.translated_criterion && !f.translated_direct);
    }
}
