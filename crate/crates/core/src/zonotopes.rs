//! Lattice zonotopes with rational translations: facet descriptions, the
//! brute-force lattice-point oracle, Ehrhart quasi-polynomials, reciprocity
//! and the Möbius-inverted interior count.

use std::collections::HashMap;

use num_rational::Ratio;
use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::error::{invalid, Error, Result};
use crate::graphs::{ehrhart_of_complete_graph, Multigraph};
use crate::lattice::{self, affine_meets_lattice, dot, left_kernel, relative_volume, rref};
use crate::partition::{IntPartition, SetPartition, UnionFind};
use crate::polynomial::Poly;
use crate::posets::signed_factorial_sum;
use crate::scalar::{common_denominator, ExactInt};

pub const DEFAULT_MAX_GENERATORS: usize = 24;
pub const DEFAULT_MAX_POINTS: u64 = 10_000_000;

/// Enumeration limits for the exponential kernels.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_generators: usize,
    pub max_points: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_generators: DEFAULT_MAX_GENERATORS, max_points: DEFAULT_MAX_POINTS }
    }
}

/// A configuration of nonzero integer vectors, with identical vectors
/// grouped into classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VectorConfig<T> {
    r: usize,
    classes: Vec<Vec<T>>,
    mult: Vec<u64>,
}

impl<T: ExactInt> VectorConfig<T> {
    pub fn new(r: usize, vectors: Vec<Vec<T>>) -> Result<Self> {
        Self::with_multiplicities(r, vectors.into_iter().map(|v| (v, 1)).collect())
    }

    pub fn with_multiplicities(r: usize, vectors: Vec<(Vec<T>, u64)>) -> Result<Self> {
        let mut classes: Vec<Vec<T>> = Vec::new();
        let mut mult: Vec<u64> = Vec::new();
        for (v, m) in vectors {
            if v.len() != r {
                return invalid(format!("vector of length {} in dimension {r}", v.len()));
            }
            if m == 0 {
                continue;
            }
            if v.iter().all(Zero::is_zero) {
                return invalid("zero vector in configuration");
            }
            match classes.iter().position(|c| *c == v) {
                Some(i) => mult[i] += m,
                None => {
                    classes.push(v);
                    mult.push(m);
                }
            }
        }
        if classes.len() > 64 {
            return invalid("more than 64 distinct vectors");
        }
        Ok(VectorConfig { r, classes, mult })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn classes(&self) -> &[Vec<T>] {
        &self.classes
    }

    pub fn multiplicities(&self) -> &[u64] {
        &self.mult
    }

    pub fn generator_count(&self) -> u64 {
        self.mult.iter().sum()
    }

    pub fn rank(&self) -> usize {
        lattice::rank(&self.classes, self.r)
    }

    fn check_budget(&self, budget: &Budget) -> Result<()> {
        if self.classes.len() > budget.max_generators {
            return Err(Error::Budget(format!(
                "{} distinct generators exceed the limit {}",
                self.classes.len(),
                budget.max_generators
            )));
        }
        Ok(())
    }

    /// All flats, grouped by rank. Flat `0` is the empty flat and the last
    /// flat is the whole configuration.
    pub fn flats(&self) -> FlatLattice<T> {
        let k = self.classes.len();
        let mut flats = vec![ConfigFlat { mask: 0, rank: 0, basis: Vec::new() }];
        let mut layer = vec![0usize];
        let total = self.rank();
        for rank in 1..=total {
            let mut next: Vec<usize> = Vec::new();
            let mut seen: HashMap<u64, usize> = HashMap::new();
            for &f in &layer {
                let base = flats[f].clone();
                for c in 0..k {
                    if base.mask >> c & 1 == 1 {
                        continue;
                    }
                    let mut basis = base.basis.clone();
                    basis.push(self.classes[c].clone());
                    let mut mask = 0u64;
                    for v in 0..k {
                        let mut probe = basis.clone();
                        probe.push(self.classes[v].clone());
                        if lattice::rank(&probe, self.r) == rank {
                            mask |= 1 << v;
                        }
                    }
                    if let std::collections::hash_map::Entry::Vacant(e) = seen.entry(mask) {
                        e.insert(flats.len());
                        next.push(flats.len());
                        flats.push(ConfigFlat { mask, rank, basis });
                    }
                }
            }
            layer = next;
        }
        FlatLattice::new(flats)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfigFlat<T> {
    /// Bitmask of the member classes.
    pub mask: u64,
    pub rank: usize,
    /// A basis of the span, drawn from the configuration.
    pub basis: Vec<Vec<T>>,
}

/// Flats of a vector configuration ordered by inclusion, sorted by rank.
#[derive(Debug, Clone)]
pub struct FlatLattice<T> {
    pub flats: Vec<ConfigFlat<T>>,
    mobius: Vec<Vec<i64>>,
}

impl<T: ExactInt> FlatLattice<T> {
    fn new(flats: Vec<ConfigFlat<T>>) -> Self {
        let n = flats.len();
        let le = |i: usize, j: usize| flats[i].mask & !flats[j].mask == 0;
        let mobius = (0..n)
            .map(|x| {
                let mut row = vec![0i64; n];
                row[x] = 1;
                for y in x + 1..n {
                    if le(x, y) {
                        row[y] = -(x..y).filter(|&z| le(z, y)).map(|z| row[z]).sum::<i64>();
                    }
                }
                row
            })
            .collect();
        FlatLattice { flats, mobius }
    }

    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.flats[i].mask & !self.flats[j].mask == 0
    }

    pub fn mobius(&self, i: usize, j: usize) -> i64 {
        self.mobius[i][j]
    }

    pub fn top(&self) -> usize {
        self.flats.len() - 1
    }

    pub fn index_of_mask(&self, mask: u64) -> Option<usize> {
        self.flats.iter().position(|f| f.mask == mask)
    }
}

/// A facet pair `lo ≤ y·x ≤ hi` of a zonotope.
#[derive(Debug, Clone)]
pub struct Facet<T> {
    pub normal: Vec<T>,
    pub lo: Ratio<T>,
    pub hi: Ratio<T>,
    /// Classes spanning the facet direction.
    pub flat_mask: u64,
}

/// `offset + omega + Σ_i [0, m_i u_i]`, with integral `offset` and rational
/// `omega`.
#[derive(Debug, Clone)]
pub struct Zonotope<T> {
    pub config: VectorConfig<T>,
    pub offset: Vec<T>,
    pub omega: Vec<Ratio<T>>,
    /// For graphical zonotopes: the vertex pair of each class.
    pub edges: Option<Vec<(usize, usize)>>,
}

impl<T: ExactInt> Zonotope<T> {
    pub fn new(config: VectorConfig<T>, offset: Vec<T>, omega: Vec<Ratio<T>>) -> Result<Self> {
        if offset.len() != config.r() || omega.len() != config.r() {
            return invalid("offset and translation must live in the ambient space");
        }
        Ok(Zonotope { config, offset, omega, edges: None })
    }

    /// `Z_Γ`: one segment `[e_a, e_b]` per edge, `a < b`.
    pub fn graphical(g: &Multigraph) -> Self {
        let r = g.r();
        let mut vectors = Vec::new();
        let mut offset = vec![T::zero(); r];
        let mut edges = Vec::new();
        for (a, b, m) in g.edges() {
            let mut u = vec![T::zero(); r];
            u[a] = -T::one();
            u[b] = T::one();
            vectors.push((u, m));
            offset[a] = offset[a].clone() + T::from_i64_exact(m as i64);
            edges.push((a, b));
        }
        if r == 1 {
            offset[0] = T::one();
        }
        let config = VectorConfig::with_multiplicities(r, vectors).expect("graph vectors are valid");
        Zonotope { config, offset, omega: vec![Ratio::zero(); r], edges: Some(edges) }
    }

    pub fn translated(&self, omega: Vec<Ratio<T>>) -> Result<Self> {
        if omega.len() != self.r() {
            return invalid("translation has the wrong length");
        }
        Ok(Zonotope { omega, ..self.clone() })
    }

    pub fn r(&self) -> usize {
        self.config.r()
    }

    pub fn dim(&self) -> usize {
        self.config.rank()
    }

    /// `offset + omega`.
    pub fn base_point(&self) -> Vec<Ratio<T>> {
        self.offset
            .iter()
            .zip(&self.omega)
            .map(|(o, w)| Ratio::from_integer(o.clone()) + w.clone())
            .collect()
    }

    /// The `t`-th dilate, `t ≥ 1`.
    pub fn dilate(&self, t: u64) -> Self {
        let tt = T::from_i64_exact(t as i64);
        let vectors = self
            .config
            .classes
            .iter()
            .cloned()
            .zip(self.config.mult.iter().map(|m| m * t))
            .collect();
        Zonotope {
            config: VectorConfig::with_multiplicities(self.r(), vectors).unwrap(),
            offset: self.offset.iter().map(|o| o.clone() * tt.clone()).collect(),
            omega: self.omega.iter().map(|w| w.clone() * Ratio::from_integer(tt.clone())).collect(),
            edges: self.edges.clone(),
        }
    }

    /// Equations `N x = N p` cutting out the affine span.
    pub fn span_equations(&self) -> Vec<(Vec<T>, Ratio<T>)> {
        let p = self.base_point();
        left_kernel(&self.config.classes, self.r())
            .into_iter()
            .map(|y| {
                let v = rat_dot(&y, &p);
                (y, v)
            })
            .collect()
    }

    /// One facet pair per flat of rank `dim − 1`.
    pub fn facets(&self) -> Vec<Facet<T>> {
        let dim = self.dim();
        if dim == 0 {
            return Vec::new();
        }
        let p = self.base_point();
        let fl = self.config.flats();
        fl.flats
            .iter()
            .filter(|f| f.rank == dim - 1)
            .map(|f| {
                let normal = left_kernel(&f.basis, self.r())
                    .into_iter()
                    .find(|y| self.config.classes.iter().any(|u| !dot(y, u).is_zero()))
                    .expect("hyperplane normal exists");
                let base = rat_dot(&normal, &p);
                let (mut lo, mut hi) = (base.clone(), base);
                for (u, &m) in self.config.classes.iter().zip(&self.config.mult) {
                    let s = dot(&normal, u) * T::from_i64_exact(m as i64);
                    if s.is_negative() {
                        lo = lo + Ratio::from_integer(s);
                    } else {
                        hi = hi + Ratio::from_integer(s);
                    }
                }
                Facet { normal, lo, hi, flat_mask: f.mask }
            })
            .collect()
    }

    /// Membership of a rational point (closed or relative interior).
    pub fn contains(&self, x: &[Ratio<T>], strict: bool) -> bool {
        self.contains_with(&self.span_equations(), &self.facets(), x, strict)
    }

    fn contains_with(
        &self,
        eqs: &[(Vec<T>, Ratio<T>)],
        facets: &[Facet<T>],
        x: &[Ratio<T>],
        strict: bool,
    ) -> bool {
        eqs.iter().all(|(y, v)| rat_dot(y, x) == *v)
            && facets.iter().all(|f| {
                let s = rat_dot(&f.normal, x);
                if strict {
                    f.lo < s && s < f.hi
                } else {
                    f.lo <= s && s <= f.hi
                }
            })
    }

    /// Brute-force enumeration of lattice points in the relative interior
    /// (`strict`) or in the closed zonotope, in lexicographic order.
    pub fn lattice_points(&self, strict: bool, budget: &Budget) -> Result<Vec<Vec<T>>> {
        self.config.check_budget(budget)?;
        let r = self.r();
        let p = self.base_point();
        let dim = self.dim();
        if dim == 0 {
            return Ok(if p.iter().all(|q| q.is_integer()) {
                vec![p.iter().map(|q| q.to_integer()).collect()]
            } else {
                Vec::new()
            });
        }
        let rows: Vec<Vec<Ratio<T>>> = self
            .config
            .classes
            .iter()
            .map(|u| u.iter().cloned().map(Ratio::from_integer).collect())
            .collect();
        let (pivots, reduced) = rref(&rows, r);
        let mut ranges: Vec<(T, T)> = Vec::with_capacity(dim);
        let mut boxsize: u64 = 1;
        for &c in &pivots {
            let (mut lo, mut hi) = (p[c].clone(), p[c].clone());
            for (u, &m) in self.config.classes.iter().zip(&self.config.mult) {
                let s = Ratio::from_integer(u[c].clone() * T::from_i64_exact(m as i64));
                if s.is_negative() {
                    lo = lo + s;
                } else {
                    hi = hi + s;
                }
            }
            let (a, b) = (lo.ceil().to_integer(), hi.floor().to_integer());
            let len = if b < a { 0 } else { (b.clone() - a.clone()).to_i64_exact() as u64 + 1 };
            boxsize = boxsize.saturating_mul(len);
            ranges.push((a, b));
        }
        if boxsize > budget.max_points {
            return Err(Error::Budget(format!(
                "bounding box has {boxsize} candidates, limit {}",
                budget.max_points
            )));
        }
        if boxsize == 0 {
            return Ok(Vec::new());
        }
        let facets = self.facets();
        let eqs = self.span_equations();
        let first: Vec<T> = int_range(&ranges[0].0, &ranges[0].1);
        let mut points: Vec<Vec<T>> = first
            .into_par_iter()
            .flat_map_iter(|x0| {
                let mut out = Vec::new();
                let mut cur = vec![x0];
                self.scan(&ranges, &pivots, &reduced, &p, &eqs, &facets, strict, &mut cur, &mut out);
                out
            })
            .collect();
        points.sort();
        Ok(points)
    }

    #[allow(clippy::too_many_arguments)]
    fn scan(
        &self,
        ranges: &[(T, T)],
        pivots: &[usize],
        reduced: &[Vec<Ratio<T>>],
        p: &[Ratio<T>],
        eqs: &[(Vec<T>, Ratio<T>)],
        facets: &[Facet<T>],
        strict: bool,
        cur: &mut Vec<T>,
        out: &mut Vec<Vec<T>>,
    ) {
        if cur.len() == pivots.len() {
            let mut x: Vec<Ratio<T>> = p.to_vec();
            for (i, &pc) in pivots.iter().enumerate() {
                let c = Ratio::from_integer(cur[i].clone()) - p[pc].clone();
                if c.is_zero() {
                    continue;
                }
                for (xj, rij) in x.iter_mut().zip(&reduced[i]) {
                    if !rij.is_zero() {
                        *xj = xj.clone() + c.clone() * rij.clone();
                    }
                }
            }
            if x.iter().all(|q| q.is_integer()) && self.contains_with(eqs, facets, &x, strict) {
                out.push(x.into_iter().map(|q| q.to_integer()).collect());
            }
            return;
        }
        let (a, b) = &ranges[cur.len()];
        for v in int_range(a, b) {
            cur.push(v);
            self.scan(ranges, pivots, reduced, p, eqs, facets, strict, cur, out);
            cur.pop();
        }
    }

    pub fn interior_points(&self, budget: &Budget) -> Result<Vec<Vec<T>>> {
        self.lattice_points(true, budget)
    }

    /// Oracle interior count.
    pub fn interior_count(&self, budget: &Budget) -> Result<T> {
        Ok(T::from_i64_exact(self.interior_points(budget)?.len() as i64))
    }

    /// Ehrhart quasi-polynomial, one term per flat.
    pub fn ehrhart(&self, budget: &Budget) -> Result<QuasiPolynomial<T>> {
        self.config.check_budget(budget)?;
        let fl = self.config.flats();
        let mut q: Vec<T> = vec![T::zero(); fl.len()];
        let k = self.config.classes.len();
        // DFS over independent subsets of classes.
        let mut stack: Vec<(usize, Vec<usize>)> = vec![(0, Vec::new())];
        while let Some((start, chosen)) = stack.pop() {
            let vecs: Vec<Vec<T>> = chosen.iter().map(|&i| self.config.classes[i].clone()).collect();
            let weight = chosen
                .iter()
                .fold(T::one(), |acc, &i| acc * T::from_i64_exact(self.config.mult[i] as i64));
            let rv = relative_volume(&vecs, self.r())?;
            let mask = chosen.iter().fold(0u64, |m, &i| m | 1 << i);
            let f = (0..fl.len())
                .find(|&f| fl.flats[f].rank == chosen.len() && fl.flats[f].mask & mask == mask)
                .expect("independent set spans a flat");
            q[f] = q[f].clone() + weight * rv;
            for c in start..k {
                let mut probe = vecs.clone();
                probe.push(self.config.classes[c].clone());
                if lattice::rank(&probe, self.r()) == probe.len() {
                    let mut next = chosen.clone();
                    next.push(c);
                    stack.push((c + 1, next));
                }
            }
        }
        let terms = fl
            .flats
            .iter()
            .zip(q)
            .map(|(f, coeff)| QpTerm { flat_mask: f.mask, rank: f.rank, coeff, basis: f.basis.clone() })
            .collect();
        Ok(QuasiPolynomial { omega: self.omega.clone(), terms, period: common_denominator(&self.omega) })
    }

    /// `C = (−1)^{dim} L(−1)`.
    pub fn count_via_reciprocity(&self, budget: &Budget) -> Result<T> {
        let l = self.ehrhart(budget)?.eval(-1);
        Ok(if self.dim() % 2 == 0 { l } else { -l })
    }

    /// Möbius-inverted interior count with its per-flat breakdown.
    pub fn mobius_count(&self, budget: &Budget) -> Result<MobiusCount<T>> {
        let qp = self.ehrhart(budget)?;
        let fl = self.config.flats();
        let dim = self.dim();
        let n = fl.len();
        let sign = |k: usize| if k % 2 == 0 { T::one() } else { -T::one() };
        // C(Z(S)) = (−1)^{rk S} Σ_{T ≤ S} (−1)^{rk T} Q_T.
        let untranslated: Vec<T> = (0..n)
            .map(|s| {
                let l = (0..n)
                    .filter(|&t| fl.leq(t, s))
                    .fold(T::zero(), |acc, t| acc + sign(qp.terms[t].rank) * qp.terms[t].coeff.clone());
                sign(fl.flats[s].rank) * l
            })
            .collect();
        let integral: Vec<bool> = qp.terms.iter().map(|t| qp.delta(t, 1)).collect();
        let mut rows = Vec::new();
        let mut total = T::zero();
        for s in 0..n {
            let mu: i64 = (s..n).filter(|&t| fl.leq(s, t) && integral[t]).map(|t| fl.mobius(s, t)).sum();
            let coeff = sign(dim - fl.flats[s].rank) * T::from_i64_exact(mu);
            if coeff.is_zero() {
                continue;
            }
            total = total + coeff.clone() * untranslated[s].clone();
            rows.push(MobiusRow {
                flat_mask: fl.flats[s].mask,
                rank: fl.flats[s].rank,
                partition: self.flat_partition(fl.flats[s].mask),
                coeff,
                count: untranslated[s].clone(),
            });
        }
        Ok(MobiusCount { total, rows })
    }

    /// For graphical zonotopes: the set partition matching a flat.
    pub fn flat_partition(&self, mask: u64) -> Option<SetPartition> {
        let edges = self.edges.as_ref()?;
        let mut uf = UnionFind::new(self.r());
        for (i, &(a, b)) in edges.iter().enumerate() {
            if mask >> i & 1 == 1 {
                uf.union(a, b);
            }
        }
        Some(uf.partition())
    }
}

fn rat_dot<T: ExactInt>(y: &[T], x: &[Ratio<T>]) -> Ratio<T> {
    y.iter()
        .zip(x)
        .fold(Ratio::zero(), |acc, (a, b)| acc + b.clone() * Ratio::from_integer(a.clone()))
}

fn int_range<T: ExactInt>(a: &T, b: &T) -> Vec<T> {
    let mut out = Vec::new();
    let mut v = a.clone();
    while v <= *b {
        out.push(v.clone());
        v = v + T::one();
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QpTerm<T> {
    pub flat_mask: u64,
    pub rank: usize,
    /// `Q_S = Σ rvol(W)` over independent `W` spanning `S`, with multiplicity.
    pub coeff: T,
    pub basis: Vec<Vec<T>>,
}

/// `L(t) = Σ_S δ_S(t) Q_S t^{rk S}`.
#[derive(Debug, Clone)]
pub struct QuasiPolynomial<T> {
    pub omega: Vec<Ratio<T>>,
    pub terms: Vec<QpTerm<T>>,
    /// δ depends on `t` only modulo this period.
    pub period: T,
}

impl<T: ExactInt> QuasiPolynomial<T> {
    /// `δ_S(t) = 1` iff `(tω + ⟨S⟩) ∩ Z^r ≠ ∅`.
    pub fn delta(&self, term: &QpTerm<T>, t: i64) -> bool {
        let tt = Ratio::from_integer(T::from_i64_exact(t));
        let point: Vec<Ratio<T>> = self.omega.iter().map(|w| w.clone() * tt.clone()).collect();
        affine_meets_lattice(&point, &term.basis)
    }

    pub fn eval(&self, t: i64) -> T {
        let tt = T::from_i64_exact(t);
        self.terms
            .iter()
            .filter(|term| self.delta(term, t))
            .fold(T::zero(), |acc, term| {
                let mut p = T::one();
                for _ in 0..term.rank {
                    p = p * tt.clone();
                }
                acc + term.coeff.clone() * p
            })
    }

    /// The constituent polynomial for residue `t mod period`, as
    /// coefficients by degree.
    pub fn constituent(&self, residue: i64) -> Vec<T> {
        let deg = self.terms.iter().map(|t| t.rank).max().unwrap_or(0);
        let mut c = vec![T::zero(); deg + 1];
        for term in &self.terms {
            if self.delta(term, residue) {
                c[term.rank] = c[term.rank].clone() + term.coeff.clone();
            }
        }
        c
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MobiusRow<T> {
    pub flat_mask: u64,
    pub rank: usize,
    pub partition: Option<SetPartition>,
    /// `(−1)^{dim − rk S} Σ_{T ≥ S, T ω-integral} μ(S, T)`.
    pub coeff: T,
    /// Untranslated interior count `C(Z(S))`.
    pub count: T,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MobiusCount<T> {
    pub total: T,
    pub rows: Vec<MobiusRow<T>>,
}

/// One row of the complete-graph count grouped by block type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphicalRow<T> {
    pub block_type: IntPartition,
    /// Number of set partitions of this type.
    pub b: u64,
    /// Common coefficient when it is the same for every partition of this type.
    pub l: Option<i64>,
    pub coeff_sum: i64,
    /// Σ coeff(S) Π_j C(Z_{Γ(S_j)}) over partitions of this type.
    pub contribution: T,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphicalCount<T> {
    pub total: T,
    /// Per set partition: `(S, coeff(S), Π_j C(Z_{Γ(S_j)}))`.
    pub terms: Vec<(SetPartition, i64, T)>,
    pub rows: Vec<GraphicalRow<T>>,
}

/// `C(Z_{K(n,e)} + ω)` as a polynomial in the multiplicity `e`, using
/// `C(Z_{K(k,e)}) = (−1)^{k−1} E_{K_k}(−e)` on every block.
pub fn complete_count_polynomial<T: ExactInt>(omega: &[Ratio<T>]) -> Poly<T> {
    let n = omega.len();
    let block: Vec<Poly<T>> = (0..=n)
        .map(|k| {
            if k == 0 {
                return Poly::from_i64(&[1]);
            }
            let p = ehrhart_of_complete_graph::<T>(k).reflect();
            if k % 2 == 1 {
                p
            } else {
                p.scale(&-T::one())
            }
        })
        .collect();
    let mut total = Poly::new(Vec::new());
    for s in SetPartition::all(n) {
        let blocks = s.blocks();
        let sums: Vec<Ratio<T>> = blocks
            .iter()
            .map(|b| b.iter().fold(Ratio::zero(), |acc, &i| acc + omega[i].clone()))
            .collect();
        let coeff = signed_factorial_sum(&sums);
        if coeff == 0 {
            continue;
        }
        let prod = blocks.iter().fold(Poly::from_i64(&[coeff]), |acc, b| acc.mul(&block[b.len()]));
        total = total.add(&prod);
    }
    total
}

/// Interior count of `Z_Γ + ω` for a graph with every pair of vertices
/// adjacent, summing over all set partitions of the vertices.
pub fn graphical_count<T: ExactInt>(g: &Multigraph, omega: &[Ratio<T>], budget: &Budget) -> Result<GraphicalCount<T>> {
    if !g.is_complete_type() {
        return invalid("graphical count formula needs every pair of vertices adjacent");
    }
    if omega.len() != g.r() {
        return invalid("ω has the wrong length");
    }
    let mut block_counts: HashMap<Vec<usize>, T> = HashMap::new();
    let mut block_count = |block: &Vec<usize>| -> Result<T> {
        if let Some(v) = block_counts.get(block) {
            return Ok(v.clone());
        }
        let c = Zonotope::<T>::graphical(&g.induced(block)).count_via_reciprocity(budget)?;
        block_counts.insert(block.clone(), c.clone());
        Ok(c)
    };
    let mut terms = Vec::new();
    let mut total = T::zero();
    for s in SetPartition::all(g.r()) {
        let blocks = s.blocks();
        let sums: Vec<Ratio<T>> = blocks
            .iter()
            .map(|b| b.iter().fold(Ratio::zero(), |acc, &i| acc + omega[i].clone()))
            .collect();
        let coeff = signed_factorial_sum(&sums);
        if coeff == 0 {
            terms.push((s, 0, T::zero()));
            continue;
        }
        let mut prod = T::one();
        for b in &blocks {
            prod = prod * block_count(b)?;
        }
        total = total + T::from_i64_exact(coeff) * prod.clone();
        terms.push((s, coeff, prod));
    }
    let mut rows: Vec<GraphicalRow<T>> = Vec::new();
    for n in IntPartition::all(g.r() as u64) {
        let of_type: Vec<&(SetPartition, i64, T)> = terms
            .iter()
            .filter(|(s, _, _)| {
                let mut sizes: Vec<u64> = s.block_sizes().iter().map(|&x| x as u64).collect();
                sizes.sort_unstable_by(|a, b| b.cmp(a));
                sizes == n.parts()
            })
            .collect();
        let coeffs: Vec<i64> = of_type.iter().map(|t| t.1).collect();
        let l = if coeffs.windows(2).all(|w| w[0] == w[1]) { coeffs.first().copied() } else { None };
        rows.push(GraphicalRow {
            block_type: n,
            b: of_type.len() as u64,
            l,
            coeff_sum: coeffs.iter().sum(),
            contribution: of_type
                .iter()
                .fold(T::zero(), |acc, t| acc + T::from_i64_exact(t.1) * t.2.clone()),
        });
    }
    Ok(GraphicalCount { total, terms, rows })
}

/// Inequality description of `Z_Γ`: `Σ_{i} x_i = z_{[r]}` and
/// `Σ_{i ∈ K} x_i ≥ z_K` for every nonempty proper `K`, where `z_K` counts
/// the edges inside `K`. Returned as `(K, z_K)` with `K = [r]` first.
pub fn inequality_description(g: &Multigraph) -> Vec<(Vec<usize>, u64)> {
    let r = g.r();
    let z = |k: &[usize]| -> u64 {
        let mut s = 0;
        for (i, &a) in k.iter().enumerate() {
            for &b in &k[i + 1..] {
                s += g.y(a, b);
            }
        }
        s
    };
    let mut out = Vec::new();
    let all: Vec<usize> = (0..r).collect();
    out.push((all.clone(), z(&all)));
    for mask in 1u64..(1 << r) - 1 {
        let k: Vec<usize> = (0..r).filter(|i| mask >> i & 1 == 1).collect();
        let zk = z(&k);
        out.push((k, zk));
    }
    out
}

/// Checks a lattice point against the inequality description.
pub fn satisfies_inequalities<T: ExactInt>(desc: &[(Vec<usize>, u64)], x: &[T], strict: bool) -> bool {
    desc.iter().enumerate().all(|(i, (k, z))| {
        let s = k.iter().fold(T::zero(), |acc, &j| acc + x[j].clone());
        let z = T::from_i64_exact(*z as i64);
        if i == 0 {
            s == z
        } else if strict {
            s > z
        } else {
            s >= z
        }
    })
}

/// Graph flat test used by the interior count breakdowns: a flat of the
/// vector configuration of `Z_Γ` is exactly a partition with connected
/// blocks.
pub fn graph_flats_match<T: ExactInt>(g: &Multigraph) -> bool {
    let z = Zonotope::<T>::graphical(g);
    let mut from_config: Vec<SetPartition> = z
        .config
        .flats()
        .flats
        .iter()
        .map(|f| z.flat_partition(f.mask).unwrap())
        .collect();
    from_config.sort();
    let mut from_graph: Vec<SetPartition> = SetPartition::all(g.r()).into_iter().filter(|s| g.is_flat(s)).collect();
    from_graph.sort();
    from_config == from_graph
}
