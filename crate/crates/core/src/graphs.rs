//! Loopless multigraphs on `[r]` and the constructions built from them:
//! automorphisms, contraction, restriction, quotients by a permutation,
//! dual graphs of partitions and the Tutte/Ehrhart polynomials of complete
//! graphs.

use std::fmt;

use num_integer::Integer;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::partition::{IntPartition, SetPartition, UnionFind};
use crate::polynomial::{BivariatePoly, Poly};
use crate::scalar::{binomial, ExactInt};

/// Default cap on the vertex count for the exhaustive automorphism search.
pub const DEFAULT_MAX_AUTOMORPHISM_VERTICES: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Multigraph {
    r: usize,
    y: Vec<Vec<u64>>,
}

impl Multigraph {
    pub fn new(y: Vec<Vec<u64>>) -> Result<Self> {
        let r = y.len();
        if r == 0 {
            return invalid("graph needs at least one vertex");
        }
        for a in 0..r {
            if y[a].len() != r {
                return invalid("multiplicity matrix is not square");
            }
            if y[a][a] != 0 {
                return invalid("loops are not allowed");
            }
            for b in 0..a {
                if y[a][b] != y[b][a] {
                    return invalid("multiplicity matrix is not symmetric");
                }
            }
        }
        Ok(Multigraph { r, y })
    }

    /// Edges given as 0-based `(a, b, multiplicity)`; repeated pairs add up.
    pub fn from_edges(r: usize, edges: &[(usize, usize, u64)]) -> Result<Self> {
        let mut y = vec![vec![0; r]; r];
        for &(a, b, m) in edges {
            if a >= r || b >= r || a == b {
                return invalid(format!("bad edge ({}, {})", a + 1, b + 1));
            }
            y[a][b] += m;
            y[b][a] += m;
        }
        Self::new(y)
    }

    /// `K(n, e)`: complete graph on `n` vertices, every pair with `e` edges.
    pub fn complete(n: usize, e: u64) -> Result<Self> {
        Self::new(
            (0..n)
                .map(|a| (0..n).map(|b| if a == b { 0 } else { e }).collect())
                .collect(),
        )
    }

    /// Triangle with `y12 = y12`, `y13 = y13`, `y23 = y23`.
    pub fn triangle(y12: u64, y13: u64, y23: u64) -> Self {
        Self::from_edges(3, &[(0, 1, y12), (0, 2, y13), (1, 2, y23)]).unwrap()
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn y(&self, a: usize, b: usize) -> u64 {
        self.y[a][b]
    }

    pub fn matrix(&self) -> &[Vec<u64>] {
        &self.y
    }

    /// Distinct adjacent pairs `(a, b, y_ab)` with `a < b`, lexicographic.
    pub fn edges(&self) -> Vec<(usize, usize, u64)> {
        let mut out = Vec::new();
        for a in 0..self.r {
            for b in a + 1..self.r {
                if self.y[a][b] > 0 {
                    out.push((a, b, self.y[a][b]));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> u64 {
        self.edges().iter().map(|e| e.2).sum()
    }

    /// Every pair of distinct vertices is joined by at least one edge.
    pub fn is_complete_type(&self) -> bool {
        (0..self.r).all(|a| (0..self.r).all(|b| a == b || self.y[a][b] > 0))
    }

    pub fn components(&self) -> SetPartition {
        let mut uf = UnionFind::new(self.r);
        for (a, b, _) in self.edges() {
            uf.union(a, b);
        }
        uf.partition()
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Every block of `s` induces a connected subgraph.
    pub fn is_flat(&self, s: &SetPartition) -> bool {
        s.r() == self.r && self.restrict(s).components() == *s
    }

    /// `Γ_S`: keeps only the edges inside blocks of `s`.
    pub fn restrict(&self, s: &SetPartition) -> Multigraph {
        let y = (0..self.r)
            .map(|a| {
                (0..self.r)
                    .map(|b| if s.same_block(a, b) { self.y[a][b] } else { 0 })
                    .collect()
            })
            .collect();
        Multigraph { r: self.r, y }
    }

    /// Induced subgraph on `vertices` (kept in the given order).
    pub fn induced(&self, vertices: &[usize]) -> Multigraph {
        let y = vertices
            .iter()
            .map(|&a| vertices.iter().map(|&b| self.y[a][b]).collect())
            .collect();
        Multigraph { r: vertices.len(), y }
    }

    /// `Γ^S`: contracts the blocks of the flat `s`; vertex `i` of the result
    /// is the `i`-th block in order of minimum element.
    pub fn contract(&self, s: &SetPartition) -> Result<Multigraph> {
        if !self.is_flat(s) {
            return invalid(format!("{s} is not a flat"));
        }
        Ok(self.contract_unchecked(s))
    }

    pub(crate) fn contract_unchecked(&self, s: &SetPartition) -> Multigraph {
        let l = s.len();
        let mut y = vec![vec![0; l]; l];
        for a in 0..self.r {
            for b in 0..self.r {
                let (i, j) = (s.block_of(a), s.block_of(b));
                if i != j {
                    y[i][j] += self.y[a][b];
                }
            }
        }
        Multigraph { r: l, y }
    }

    pub fn is_automorphism(&self, p: &Permutation) -> bool {
        p.len() == self.r
            && (0..self.r).all(|a| (0..self.r).all(|b| self.y[p.apply(a)][p.apply(b)] == self.y[a][b]))
    }

    pub fn automorphisms(&self) -> Result<Vec<Permutation>> {
        self.automorphisms_capped(DEFAULT_MAX_AUTOMORPHISM_VERTICES)
    }

    /// All automorphisms in lexicographic order of their image tuples.
    pub fn automorphisms_capped(&self, max_vertices: usize) -> Result<Vec<Permutation>> {
        if self.r > max_vertices {
            return invalid(format!(
                "automorphism search limited to {max_vertices} vertices, graph has {}",
                self.r
            ));
        }
        let profile: Vec<Vec<u64>> = (0..self.r)
            .map(|a| {
                let mut v = self.y[a].clone();
                v.sort_unstable();
                v
            })
            .collect();
        let mut out = Vec::new();
        let mut images = vec![usize::MAX; self.r];
        let mut used = vec![false; self.r];
        self.aut_search(0, &profile, &mut images, &mut used, &mut out);
        Ok(out)
    }

    fn aut_search(
        &self,
        a: usize,
        profile: &[Vec<u64>],
        images: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<Permutation>,
    ) {
        if a == self.r {
            out.push(Permutation { images: images.clone() });
            return;
        }
        for c in 0..self.r {
            if used[c] || profile[c] != profile[a] {
                continue;
            }
            if (0..a).any(|b| self.y[c][images[b]] != self.y[a][b]) {
                continue;
            }
            images[a] = c;
            used[c] = true;
            self.aut_search(a + 1, profile, images, used, out);
            used[c] = false;
        }
        images[a] = usize::MAX;
    }
}

impl fmt::Display for Multigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e: Vec<String> = self
            .edges()
            .iter()
            .map(|(a, b, m)| format!("{}-{}:{}", a + 1, b + 1, m))
            .collect();
        write!(f, "r={} [{}]", self.r, e.join(", "))
    }
}

/// JSON graph literal: `{"r": 3, "edges": [[1,2,1], ...]}` with 1-based
/// vertices, or `{"complete": n, "mult": e}`.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(untagged)]
pub enum GraphSpec {
    Edges { r: usize, edges: Vec<(usize, usize, u64)> },
    Complete { complete: usize, #[serde(default = "one")] mult: u64 },
}

fn one() -> u64 {
    1
}

impl GraphSpec {
    pub fn to_graph(&self) -> Result<Multigraph> {
        match self {
            GraphSpec::Complete { complete, mult } => Multigraph::complete(*complete, *mult),
            GraphSpec::Edges { r, edges } => {
                let mut e = Vec::with_capacity(edges.len());
                for &(a, b, m) in edges {
                    if a == 0 || b == 0 || a >= b {
                        return invalid(format!("edge [{a},{b}] must satisfy 1 <= a < b"));
                    }
                    e.push((a - 1, b - 1, m));
                }
                Multigraph::from_edges(*r, &e)
            }
        }
    }

    pub fn from_graph(g: &Multigraph) -> Self {
        GraphSpec::Edges {
            r: g.r(),
            edges: g.edges().into_iter().map(|(a, b, m)| (a + 1, b + 1, m)).collect(),
        }
    }
}

pub fn parse_graph_json(s: &str) -> Result<Multigraph> {
    let spec: GraphSpec =
        serde_json::from_str(s).map_err(|e| Error::Parse(format!("graph literal: {e}")))?;
    spec.to_graph()
}

/// A bijection of `[r]`, stored by its images.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || seen[i] {
                return invalid("not a permutation");
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(r: usize) -> Self {
        Permutation { images: (0..r).collect() }
    }

    /// Builds a permutation of `[r]` from 0-based cycles.
    pub fn from_cycles(r: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..r).collect();
        let mut seen = vec![false; r];
        for c in cycles {
            for (k, &a) in c.iter().enumerate() {
                if a >= r || seen[a] {
                    return invalid("bad cycle notation");
                }
                seen[a] = true;
                images[a] = c[(k + 1) % c.len()];
            }
        }
        Ok(Permutation { images })
    }

    /// Parses `"(12)(34)"`, `"(1,10)"`, `"id"` or `"()"`.
    pub fn parse(s: &str, r: usize) -> Result<Self> {
        let s = s.trim();
        if s == "id" || s.is_empty() || s == "()" {
            return Ok(Self::identity(r));
        }
        let bad = || Error::Parse(format!("invalid permutation `{s}`"));
        let mut cycles = Vec::new();
        for part in s.split(')') {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            let body = part.strip_prefix('(').ok_or_else(bad)?;
            let items: Vec<&str> = if body.contains(',') {
                body.split(',').map(str::trim).collect()
            } else {
                body.split("").filter(|c| !c.is_empty()).collect()
            };
            let c = items
                .into_iter()
                .map(|x| x.parse::<usize>().ok().filter(|&v| v >= 1).map(|v| v - 1).ok_or_else(bad))
                .collect::<Result<Vec<_>>>()?;
            cycles.push(c);
        }
        Self::from_cycles(r, &cycles)
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn apply(&self, a: usize) -> usize {
        self.images[a]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `(self ∘ other)(a) = self(other(a))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation { images: other.images.iter().map(|&a| self.images[a]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (a, &b) in self.images.iter().enumerate() {
            inv[b] = a;
        }
        Permutation { images: inv }
    }

    pub fn pow(&self, k: usize) -> Permutation {
        (0..k).fold(Self::identity(self.len()), |acc, _| self.compose(&acc))
    }

    /// Cycles (including fixed points), each starting at its minimum, sorted
    /// by minimum element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for a in 0..self.len() {
            if seen[a] {
                continue;
            }
            let mut c = vec![a];
            seen[a] = true;
            let mut b = self.images[a];
            while b != a {
                seen[b] = true;
                c.push(b);
                b = self.images[b];
            }
            out.push(c);
        }
        out
    }

    pub fn cycle_lengths(&self) -> Vec<usize> {
        self.cycles().iter().map(Vec::len).collect()
    }

    pub fn order(&self) -> usize {
        self.cycle_lengths().into_iter().fold(1, |a, l| a.lcm(&l))
    }

    pub fn sign(&self) -> i64 {
        let even = self.cycles().iter().filter(|c| c.len() % 2 == 0).count();
        if even % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Whether `σ(S) = S` as a set of blocks.
    pub fn stabilizes(&self, s: &SetPartition) -> bool {
        s.permute(&self.images) == *s
    }

    /// The permutation induced on the blocks of a stabilized partition.
    pub fn on_blocks(&self, s: &SetPartition) -> Permutation {
        let blocks = s.blocks();
        Permutation { images: blocks.iter().map(|b| s.block_of(self.images[b[0]])).collect() }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.len() > 9 { "," } else { "" };
        let cyc: Vec<String> = self
            .cycles()
            .into_iter()
            .filter(|c| c.len() > 1)
            .map(|c| format!("({})", c.iter().map(|v| (v + 1).to_string()).collect::<Vec<_>>().join(sep)))
            .collect();
        if cyc.is_empty() {
            write!(f, "id")
        } else {
            write!(f, "{}", cyc.concat())
        }
    }
}

/// The quotient graph `Γ/σ` together with the cycle data it is built from.
#[derive(Debug, Clone)]
pub struct Quotient<T> {
    pub graph: Multigraph,
    /// Cycles of σ sorted by minimum element.
    pub cycles: Vec<Vec<usize>>,
    pub lengths: Vec<usize>,
    /// Translation vector `t_σ`, half-integral.
    pub t: Vec<Ratio<T>>,
    pub vertex_to_cycle: Vec<usize>,
}

impl<T: ExactInt> Quotient<T> {
    /// Cycle-average of a vector on `[r]`.
    pub fn average(&self, w: &[Ratio<T>]) -> Vec<Ratio<T>> {
        self.cycles
            .iter()
            .map(|c| {
                let s = c.iter().fold(Ratio::from_integer(T::zero()), |acc, &a| acc + w[a].clone());
                s / Ratio::from_integer(T::from_i64_exact(c.len() as i64))
            })
            .collect()
    }
}

pub fn quotient<T: ExactInt>(g: &Multigraph, sigma: &Permutation) -> Result<Quotient<T>> {
    if !g.is_automorphism(sigma) {
        return invalid(format!("{sigma} is not an automorphism"));
    }
    let cycles = sigma.cycles();
    let lengths: Vec<usize> = cycles.iter().map(Vec::len).collect();
    let k = cycles.len();
    let mut vertex_to_cycle = vec![0; g.r()];
    for (i, c) in cycles.iter().enumerate() {
        for &a in c {
            vertex_to_cycle[a] = i;
        }
    }
    let mut x = vec![vec![0u64; k]; k];
    for i in 0..k {
        for j in i + 1..k {
            let s: u64 = cycles[i]
                .iter()
                .flat_map(|&a| cycles[j].iter().map(move |&b| (a, b)))
                .map(|(a, b)| g.y(a, b))
                .sum();
            let l = lengths[i].lcm(&lengths[j]) as u64;
            assert!(s % l == 0, "quotient multiplicity not integral");
            x[i][j] = s / l;
            x[j][i] = s / l;
        }
    }
    let mut t = Vec::with_capacity(k);
    for (i, c) in cycles.iter().enumerate() {
        let mut s = 0u64;
        for (p, &a) in c.iter().enumerate() {
            for &b in &c[p + 1..] {
                s += g.y(a, b);
            }
        }
        let ti = Ratio::new(T::from_i64_exact(s as i64), T::from_i64_exact(lengths[i] as i64));
        let two = T::from_i64_exact(2);
        assert!(two.is_multiple_of(ti.denom()), "translation not half-integral");
        let l = lengths[i];
        let integral_expected = l % 2 == 1 || g.y(c[0], sigma.pow(l / 2).apply(c[0])) % 2 == 0;
        assert_eq!(ti.is_integer(), integral_expected, "half-integrality parity rule");
        t.push(ti);
    }
    Ok(Quotient { graph: Multigraph::new(x)?, cycles, lengths, t, vertex_to_cycle })
}

/// `Γ[n]`: one vertex per part, `n_i n_j (2g-2)` edges between parts.
pub fn dual_graph(n: &IntPartition, g: u64) -> Result<Multigraph> {
    if g < 2 {
        return invalid("dual graphs need genus at least 2");
    }
    let p = n.parts();
    Multigraph::new(
        (0..p.len())
            .map(|i| (0..p.len()).map(|j| if i == j { 0 } else { p[i] * p[j] * (2 * g - 2) }).collect())
            .collect(),
    )
}

/// Tutte polynomial of `K_{m+1}` by the recursion over the block containing
/// a fixed vertex; `T_0 = 1`.
pub fn tutte_complete<T: ExactInt>(m: usize) -> BivariatePoly<T> {
    let mut t: Vec<BivariatePoly<T>> = vec![BivariatePoly::one()];
    let mut t_at_x1: Vec<BivariatePoly<T>> = vec![BivariatePoly::one()];
    for mm in 1..=m {
        let mut acc = BivariatePoly::zero();
        for k in 1..=mm {
            // x + y + ... + y^{k-1}
            let mut f = BivariatePoly::monomial(T::one(), 1, 0);
            for j in 1..k {
                f.add_term(T::one(), 0, j as u32);
            }
            let c = T::from_i64_exact(binomial((mm - 1) as u64, (k - 1) as u64));
            acc = acc.add(&f.mul(&t_at_x1[k - 1]).mul(&t[mm - k]).scale(&c));
        }
        t_at_x1.push(acc.at_x_one());
        t.push(acc);
    }
    t.pop().unwrap()
}

/// `E_{K_{m+1}}(q) = q^m T_m(1 + 1/q, 1)`.
pub fn ehrhart_complete<T: ExactInt>(m: usize) -> Poly<T> {
    let tx = tutte_complete::<T>(m).at_y_one();
    // q^m (1+1/q)^i = q^{m-i} (q+1)^i
    let mut out = vec![T::zero(); m + 1];
    for (i, c) in tx.coeffs().iter().enumerate() {
        assert!(i <= m, "Tutte x-degree exceeds m");
        for j in 0..=i {
            let b = T::from_i64_exact(binomial(i as u64, j as u64));
            out[m - i + j] = out[m - i + j].clone() + c.clone() * b;
        }
    }
    Poly::new(out)
}

/// Ehrhart polynomial of the graphical zonotope of `K_n`.
pub fn ehrhart_of_complete_graph<T: ExactInt>(n: usize) -> Poly<T> {
    assert!(n >= 1);
    ehrhart_complete(n - 1)
}
