//! Posets of flats, ω-integrality, Möbius functions, the LEX labelling of
//! the non-integral flat poset and the sphere counts derived from it.

use std::collections::HashMap;
use std::sync::OnceLock;

use num_rational::Ratio;
use num_traits::Zero;

use crate::error::{invalid, Error, Result};
use crate::graphs::Multigraph;
use crate::partition::{IntPartition, SetPartition, UnionFind};
use crate::scalar::{factorial, ExactInt};

/// A finite poset of set partitions under refinement. Elements are stored
/// in a linear extension (more blocks first).
#[derive(Debug)]
pub struct FinitePoset {
    elements: Vec<SetPartition>,
    index: HashMap<SetPartition, usize>,
    leq: Vec<Vec<bool>>,
    upper: Vec<Vec<usize>>,
    lower: Vec<Vec<usize>>,
    mobius_rows: Vec<OnceLock<Vec<i64>>>,
}

impl FinitePoset {
    pub fn new(mut elements: Vec<SetPartition>) -> Self {
        elements.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        elements.dedup();
        let n = elements.len();
        let index = elements.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let leq: Vec<Vec<bool>> = (0..n)
            .map(|i| (0..n).map(|j| elements[i].refines(&elements[j])).collect())
            .collect();
        let mut upper = vec![Vec::new(); n];
        let mut lower = vec![Vec::new(); n];
        for i in 0..n {
            for j in i + 1..n {
                if leq[i][j] && !(i + 1..j).any(|k| leq[i][k] && leq[k][j]) {
                    upper[i].push(j);
                    lower[j].push(i);
                }
            }
        }
        let mobius_rows = (0..n).map(|_| OnceLock::new()).collect();
        FinitePoset { elements, index, leq, upper, lower, mobius_rows }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[SetPartition] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &SetPartition {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &SetPartition) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i][j]
    }

    pub fn upper_covers(&self, i: usize) -> &[usize] {
        &self.upper[i]
    }

    pub fn lower_covers(&self, i: usize) -> &[usize] {
        &self.lower[i]
    }

    /// Index of the unique minimum, if any.
    pub fn bottom(&self) -> Option<usize> {
        (0..self.len()).find(|&i| (0..self.len()).all(|j| self.leq[i][j]))
    }

    pub fn top(&self) -> Option<usize> {
        (0..self.len()).find(|&i| (0..self.len()).all(|j| self.leq[j][i]))
    }

    fn mobius_row(&self, x: usize) -> &[i64] {
        self.mobius_rows[x].get_or_init(|| {
            let mut row = vec![0i64; self.len()];
            row[x] = 1;
            for y in x + 1..self.len() {
                if self.leq[x][y] {
                    row[y] = -(x..y).filter(|&z| self.leq[z][y]).map(|z| row[z]).sum::<i64>();
                }
            }
            row
        })
    }

    /// `μ(x, y)`; only meaningful for `x ≤ y`.
    pub fn mobius_idx(&self, x: usize, y: usize) -> i64 {
        self.mobius_row(x)[y]
    }

    pub fn mobius(&self, x: &SetPartition, y: &SetPartition) -> Result<i64> {
        let (Some(i), Some(j)) = (self.index_of(x), self.index_of(y)) else {
            return invalid("element not in poset");
        };
        if !self.leq[i][j] {
            return invalid(format!("{x} is not below {y}"));
        }
        Ok(self.mobius_idx(i, j))
    }

    /// Rank of each element (distance from the bottom) when the poset is
    /// bounded below and every cover raises the rank by exactly one.
    pub fn grading(&self) -> Option<Vec<usize>> {
        let b = self.bottom()?;
        let mut rank = vec![usize::MAX; self.len()];
        rank[b] = 0;
        for i in 0..self.len() {
            if rank[i] == usize::MAX {
                return None;
            }
            for &j in &self.upper[i] {
                if rank[j] == usize::MAX {
                    rank[j] = rank[i] + 1;
                } else if rank[j] != rank[i] + 1 {
                    return None;
                }
            }
        }
        Some(rank)
    }

    pub fn is_graded(&self) -> bool {
        self.grading().is_some()
    }

    /// All maximal chains of the interval `[x, t]`.
    pub fn maximal_chains(&self, x: usize, t: usize) -> Vec<Vec<usize>> {
        fn go(p: &FinitePoset, cur: &mut Vec<usize>, t: usize, out: &mut Vec<Vec<usize>>) {
            let last = *cur.last().unwrap();
            if last == t {
                out.push(cur.clone());
                return;
            }
            for &y in &p.upper[last] {
                if p.leq[y][t] {
                    cur.push(y);
                    go(p, cur, t, out);
                    cur.pop();
                }
            }
        }
        let mut out = Vec::new();
        if self.leq[x][t] {
            go(self, &mut vec![x], t, &mut out);
        }
        out
    }
}

pub fn is_omega_integral<T: ExactInt>(s: &SetPartition, omega: &[Ratio<T>]) -> bool {
    s.blocks().iter().all(|b| {
        b.iter().fold(Ratio::<T>::zero(), |acc, &i| acc + omega[i].clone()).is_integer()
    })
}

fn check_omega<T: ExactInt>(r: usize, omega: &[Ratio<T>]) -> Result<()> {
    if omega.len() != r {
        return invalid(format!("ω has length {}, expected {r}", omega.len()));
    }
    if !omega.iter().fold(Ratio::<T>::zero(), |a, w| a + w.clone()).is_integer() {
        return invalid("ω must have integral total sum");
    }
    Ok(())
}

/// The poset of flats of `g`: partitions whose blocks induce connected
/// subgraphs.
pub fn flats(g: &Multigraph) -> FinitePoset {
    FinitePoset::new(SetPartition::all(g.r()).into_iter().filter(|s| g.is_flat(s)).collect())
}

/// Non-ω-integral flats `Fl_ω`.
pub fn non_integral_flats<T: ExactInt>(g: &Multigraph, omega: &[Ratio<T>]) -> Vec<SetPartition> {
    SetPartition::all(g.r())
        .into_iter()
        .filter(|s| g.is_flat(s) && !is_omega_integral(s, omega))
        .collect()
}

/// `F̂l_ω = Fl_ω ∪ {0̂, 1̂}`; requires a connected graph so that `1̂` is a flat.
pub fn hat_poset<T: ExactInt>(g: &Multigraph, omega: &[Ratio<T>]) -> Result<FinitePoset> {
    check_omega(g.r(), omega)?;
    if !g.is_connected() {
        return invalid("the bounded poset needs a connected graph");
    }
    let mut el = non_integral_flats(g, omega);
    el.push(SetPartition::singletons(g.r()));
    el.push(SetPartition::whole(g.r()));
    Ok(FinitePoset::new(el))
}

/// `(−1)^{r−1} Σ_{λ ∈ Fl ∖ Fl_ω} μ_Fl(0̂, λ)`.
pub fn sphere_count<T: ExactInt>(g: &Multigraph, omega: &[Ratio<T>]) -> Result<i64> {
    check_omega(g.r(), omega)?;
    let fl = flats(g);
    let b = fl.bottom().expect("flat poset has a bottom");
    let s: i64 = (0..fl.len())
        .filter(|&i| is_omega_integral(fl.element(i), omega))
        .map(|i| fl.mobius_idx(b, i))
        .sum();
    Ok(if g.r() % 2 == 1 { s } else { -s })
}

/// Reduced Euler characteristic route: `(−1)^{r−1} μ_{F̂l_ω}(0̂, 1̂)`.
pub fn hall_count<T: ExactInt>(g: &Multigraph, omega: &[Ratio<T>]) -> Result<i64> {
    let p = hat_poset(g, omega)?;
    let m = p.mobius_idx(p.bottom().unwrap(), p.top().unwrap());
    Ok(if g.r() % 2 == 1 { m } else { -m })
}

/// `μ_Π(0̂, λ)` for the full partition lattice.
pub fn partition_lattice_mobius(lambda: &SetPartition) -> i64 {
    let sign = if (lambda.r() - lambda.len()) % 2 == 0 { 1 } else { -1 };
    sign * lambda.block_sizes().iter().map(|&k| factorial(k as u64 - 1)).product::<i64>()
}

/// Signed factorial sum over ω-integral partitions of `[r]`:
/// `Σ (−1)^{ℓ(λ)−1} Π (|λ_i|−1)!`.
pub fn signed_factorial_sum<T: ExactInt>(omega: &[Ratio<T>]) -> i64 {
    SetPartition::all(omega.len())
        .iter()
        .filter(|l| is_omega_integral(l, omega))
        .map(|l| {
            let sign = if l.len() % 2 == 1 { 1 } else { -1 };
            sign * l.block_sizes().iter().map(|&k| factorial(k as u64 - 1)).product::<i64>()
        })
        .sum()
}

/// `ω_n(d) = (d n_1 / n, …, d n_ℓ / n)`.
pub fn omega_vector<T: ExactInt>(n: &IntPartition, d: i64) -> Vec<Ratio<T>> {
    let total = T::from_i64_exact(n.n() as i64);
    n.parts()
        .iter()
        .map(|&p| Ratio::new(T::from_i64_exact(d) * T::from_i64_exact(p as i64), total.clone()))
        .collect()
}

/// Rank of the local system attached to `n` in degree `d`.
pub fn rank_formula(n: &IntPartition, d: i64) -> i64 {
    if n.len() == 1 {
        return 1;
    }
    signed_factorial_sum(&omega_vector::<i64>(n, d))
}

/// A total order on the adjacent vertex pairs of a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeOrder {
    pairs: Vec<(usize, usize)>,
}

impl EdgeOrder {
    pub fn lexicographic(g: &Multigraph) -> Self {
        EdgeOrder { pairs: g.edges().into_iter().map(|(a, b, _)| (a, b)).collect() }
    }

    /// `pairs` lists every adjacent pair exactly once, smallest first.
    pub fn custom(g: &Multigraph, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut norm: Vec<(usize, usize)> = pairs.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
        let mut sorted = norm.clone();
        sorted.sort_unstable();
        sorted.dedup();
        let expected: Vec<(usize, usize)> = g.edges().into_iter().map(|(a, b, _)| (a, b)).collect();
        if sorted != expected || sorted.len() != norm.len() {
            return invalid("edge order must list every adjacent pair exactly once");
        }
        norm.shrink_to_fit();
        Ok(EdgeOrder { pairs: norm })
    }

    /// Parses `"12,23,34,14"` (or `"1-2,2-3"` for labels above 9).
    pub fn parse(g: &Multigraph, s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("invalid edge order `{s}`"));
        let pairs = s
            .split(',')
            .map(|e| {
                let e = e.trim();
                let (a, b) = match e.split_once('-') {
                    Some(ab) => ab,
                    None if e.len() == 2 => e.split_at(1),
                    None => return Err(bad()),
                };
                let a: usize = a.parse().map_err(|_| bad())?;
                let b: usize = b.parse().map_err(|_| bad())?;
                if a == 0 || b == 0 {
                    return Err(bad());
                }
                Ok((a - 1, b - 1))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::custom(g, &pairs)
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn edge_name(&self, e: usize) -> String {
        let (a, b) = self.pairs[e];
        if a < 9 && b < 9 {
            format!("{}{}", a + 1, b + 1)
        } else {
            format!("{}-{}", a + 1, b + 1)
        }
    }
}

/// Labelling data attached to a flat `S`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlatData {
    /// Edge ids of the ≺-minimal spanning forest `T(S)` of `Γ^S`.
    pub tree: Vec<usize>,
    /// Forest edges lying below `F(S)`.
    pub f_edges: Vec<usize>,
    /// `F(S)` as a partition of `[r]` (contains `S`).
    pub f_flat: SetPartition,
    /// `E(Γ^S)` listed in the order `≺_S`.
    pub order: Vec<usize>,
}

/// Computes `T(S)`, `F(S)` and `≺_S` for a flat `s` of a connected graph.
pub fn flat_data<T: ExactInt>(order: &EdgeOrder, s: &SetPartition, omega: &[Ratio<T>]) -> FlatData {
    let r = s.r();
    let seed = |uf: &mut UnionFind| {
        for b in s.blocks() {
            for w in b.windows(2) {
                uf.union(w[0], w[1]);
            }
        }
    };
    let mut uf = UnionFind::new(r);
    seed(&mut uf);
    let mut tree = Vec::new();
    let mut other = Vec::new();
    for (e, &(a, b)) in order.pairs().iter().enumerate() {
        if s.same_block(a, b) {
            continue;
        }
        if uf.union(a, b) {
            tree.push(e);
        } else {
            other.push(e);
        }
    }
    // A tree edge lies below F(S) iff cutting it leaves a side with
    // non-integral ω sum.
    let mut f_edges = Vec::new();
    let mut free = Vec::new();
    for &e in &tree {
        let mut uf = UnionFind::new(r);
        seed(&mut uf);
        for &f in &tree {
            if f != e {
                uf.union(order.pairs()[f].0, order.pairs()[f].1);
            }
        }
        let a = order.pairs()[e].0;
        let root = uf.find(a);
        let side = (0..r)
            .filter(|&v| uf.find(v) == root)
            .fold(Ratio::<T>::zero(), |acc, v| acc + omega[v].clone());
        if side.is_integer() {
            free.push(e);
        } else {
            f_edges.push(e);
        }
    }
    let mut uf = UnionFind::new(r);
    seed(&mut uf);
    for &e in &f_edges {
        uf.union(order.pairs()[e].0, order.pairs()[e].1);
    }
    let f_flat = uf.partition();
    let order_s = free.iter().chain(&f_edges).chain(&other).copied().collect();
    FlatData { tree, f_edges, f_flat, order: order_s }
}

/// The LEX labelling of `F̂l_ω`.
#[derive(Debug)]
pub struct LexLabelling {
    poset: FinitePoset,
    order: EdgeOrder,
    data: Vec<FlatData>,
    /// `position[x][e]`: rank of edge `e` in `≺_x`.
    position: Vec<Vec<usize>>,
    labels: HashMap<(usize, usize), usize>,
    /// `Fl_ω = ∅`, i.e. ω is integral.
    integral: bool,
}

impl LexLabelling {
    pub fn new<T: ExactInt>(g: &Multigraph, omega: &[Ratio<T>], order: EdgeOrder) -> Result<Self> {
        let poset = hat_poset(g, omega)?;
        let integral = omega.iter().all(|w| w.is_integer());
        if !poset.is_graded() {
            return Err(Error::Verification("F̂l_ω is not graded".into()));
        }
        let data: Vec<FlatData> = poset.elements().iter().map(|s| flat_data(&order, s, omega)).collect();
        let position: Vec<Vec<usize>> = data
            .iter()
            .map(|d| {
                let mut p = vec![usize::MAX; order.len()];
                for (k, &e) in d.order.iter().enumerate() {
                    p[e] = k;
                }
                p
            })
            .collect();
        let mut labels = HashMap::new();
        for x in 0..poset.len() {
            for &y in poset.upper_covers(x) {
                let target = poset.element(y);
                let label = data[x]
                    .order
                    .iter()
                    .copied()
                    .find(|&e| {
                        let (a, b) = order.pairs()[e];
                        target.same_block(a, b)
                    })
                    .expect("cover merges no edge");
                labels.insert((x, y), label);
            }
        }
        Ok(LexLabelling { poset, order, data, position, labels, integral })
    }

    pub fn poset(&self) -> &FinitePoset {
        &self.poset
    }

    pub fn edge_order(&self) -> &EdgeOrder {
        &self.order
    }

    pub fn data(&self, x: usize) -> &FlatData {
        &self.data[x]
    }

    pub fn label(&self, x: usize, y: usize) -> usize {
        self.labels[&(x, y)]
    }

    /// Label sequence of a chain.
    pub fn chain_labels(&self, chain: &[usize]) -> Vec<usize> {
        chain.windows(2).map(|w| self.label(w[0], w[1])).collect()
    }

    /// The lexicographically least maximal chain of `[x, t]`, if one exists.
    /// Labels leaving `x` are compared in `≺_x`; a tie between distinct
    /// covers leaves the two chains incomparable, so no least chain exists.
    pub fn lex_least(&self, x: usize, t: usize) -> Option<Vec<usize>> {
        let mut chain = vec![x];
        let mut cur = x;
        while cur != t {
            let mut best: Option<(usize, usize)> = None;
            let mut tied = false;
            for &y in self.poset.upper_covers(cur) {
                if !self.poset.leq(y, t) {
                    continue;
                }
                let p = self.position[cur][self.label(cur, y)];
                match best {
                    None => best = Some((p, y)),
                    Some((bp, _)) if p < bp => {
                        best = Some((p, y));
                        tied = false;
                    }
                    Some((bp, _)) if p == bp => tied = true,
                    _ => {}
                }
            }
            if tied {
                return None;
            }
            cur = best?.1;
            chain.push(cur);
        }
        Some(chain)
    }

    fn is_least_triple(&self, x: usize, y: usize, z: usize) -> bool {
        self.lex_least(x, z).is_some_and(|c| c == [x, y, z])
    }

    /// Maximal chains `0̂ → 1̂` none of whose length-two restrictions is
    /// lexicographically least.
    pub fn mediocre_count(&self) -> u64 {
        let (b, t) = (self.poset.bottom().unwrap(), self.poset.top().unwrap());
        if self.integral {
            return 0;
        }
        let mut memo: HashMap<(usize, usize), u64> = HashMap::new();
        fn go(l: &LexLabelling, prev: usize, cur: usize, t: usize, memo: &mut HashMap<(usize, usize), u64>) -> u64 {
            if cur == t {
                return 1;
            }
            if let Some(&v) = memo.get(&(prev, cur)) {
                return v;
            }
            let mut total = 0;
            for &next in l.poset.upper_covers(cur) {
                if !l.is_least_triple(prev, cur, next) {
                    total += go(l, cur, next, t, memo);
                }
            }
            memo.insert((prev, cur), total);
            total
        }
        self.poset
            .upper_covers(b)
            .iter()
            .map(|&y| go(self, b, y, t, &mut memo))
            .sum()
    }

    /// Every maximal chain `0̂ → 1̂` that is mediocre, as label names.
    pub fn mediocre_chains(&self) -> Vec<Vec<usize>> {
        let (b, t) = (self.poset.bottom().unwrap(), self.poset.top().unwrap());
        if self.integral {
            return Vec::new();
        }
        self.poset
            .maximal_chains(b, t)
            .into_iter()
            .filter(|c| c.windows(3).all(|w| !self.is_least_triple(w[0], w[1], w[2])))
            .collect()
    }

    /// Checks the LEX axiom on every interval: if a maximal chain `c` of
    /// `[x, t]` restricts to least chains on `[x, z]` and `[y, t]` with
    /// `x < y < z < t` on `c`, then `c` is least in `[x, t]`. Returns the
    /// first counterexample.
    pub fn check_lex_axiom(&self) -> std::result::Result<usize, String> {
        let n = self.poset.len();
        let mut least: HashMap<(usize, usize), Option<Vec<usize>>> = HashMap::new();
        let mut get = |a: usize, b: usize| least.entry((a, b)).or_insert_with(|| self.lex_least(a, b)).clone();
        let mut checked = 0;
        for x in 0..n {
            for t in 0..n {
                if x == t || !self.poset.leq(x, t) {
                    continue;
                }
                let lxt = get(x, t);
                for c in self.poset.maximal_chains(x, t) {
                    let k = c.len() - 1;
                    for i in 1..k {
                        for j in i + 1..k {
                            let lxz = get(x, c[j]);
                            let lyt = get(c[i], t);
                            let lower_ok = lxz.as_deref() == Some(&c[..=j]);
                            let upper_ok = lyt.as_deref() == Some(&c[i..]);
                            if lower_ok && upper_ok {
                                checked += 1;
                                if lxt.as_deref() != Some(&c[..]) {
                                    return Err(format!(
                                        "chain {} in [{}, {}] is not least",
                                        self.describe_chain(&c),
                                        self.poset.element(x),
                                        self.poset.element(t)
                                    ));
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(checked)
    }

    pub fn describe_chain(&self, c: &[usize]) -> String {
        c.iter().map(|&i| self.poset.element(i).to_string()).collect::<Vec<_>>().join(" < ")
    }

    pub fn describe_order(&self, x: usize) -> Vec<String> {
        self.data[x].order.iter().map(|&e| self.order.edge_name(e)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{parse_fraction_list, rat};

    fn omega(s: &str) -> Vec<Ratio<i64>> {
        parse_fraction_list(s).unwrap()
    }

    fn square() -> Multigraph {
        Multigraph::from_edges(4, &[(0, 1, 1), (1, 2, 1), (2, 3, 1), (0, 3, 1)]).unwrap()
    }

    fn square_order(g: &Multigraph) -> EdgeOrder {
        EdgeOrder::parse(g, "12,23,34,14").unwrap()
    }

    #[test]
    fn flat_posets() {
        assert_eq!(flats(&Multigraph::complete(4, 1).unwrap()).len(), 15);
        let path = Multigraph::from_edges(3, &[(0, 1, 1), (1, 2, 1)]).unwrap();
        let names: Vec<String> = flats(&path).elements().iter().map(|s| s.to_string()).collect();
        assert_eq!(names, vec!["1|2|3", "12|3", "1|23", "123"]);
        let empty = Multigraph::new(vec![vec![0; 3]; 3]).unwrap();
        assert_eq!(flats(&empty).len(), 1);
    }

    #[test]
    fn integrality() {
        let w = omega("1/2,1/2,1/2,1/2");
        assert!(is_omega_integral(&SetPartition::parse("12|34", 4).unwrap(), &w));
        assert!(!is_omega_integral(&SetPartition::singletons(4), &w));
        assert!(is_omega_integral(&SetPartition::singletons(3), &omega("1,0,-1")));
    }

    #[test]
    fn mobius_values() {
        let p = flats(&Multigraph::complete(4, 1).unwrap());
        let (b, t) = (p.bottom().unwrap(), p.top().unwrap());
        assert_eq!(p.mobius_idx(b, t), -6);
        assert_eq!(p.mobius_idx(t, t), 1);
        let x = SetPartition::parse("1|2|3|4", 4).unwrap();
        let y = SetPartition::parse("12|34", 4).unwrap();
        assert_eq!(p.mobius(&x, &y).unwrap(), 1);
        assert!(p.mobius(&y, &x).is_err());
        for (i, s) in p.elements().iter().enumerate() {
            assert_eq!(p.mobius_idx(b, i), partition_lattice_mobius(s));
        }
    }

    #[test]
    fn square_labelling_by_hand() {
        let g = square();
        let w = omega("1/2,1/2,1/2,1/2");
        let lex = LexLabelling::new(&g, &w, square_order(&g)).unwrap();
        let p = lex.poset();
        let bot = p.bottom().unwrap();
        let d = lex.data(bot);
        let names = |v: &[usize]| v.iter().map(|&e| lex.edge_order().edge_name(e)).collect::<Vec<_>>();
        assert_eq!(names(&d.tree), vec!["12", "23", "34"]);
        assert_eq!(names(&d.f_edges), vec!["12", "34"]);
        assert_eq!(lex.describe_order(bot), vec!["23", "12", "34", "14"]);
        let s = p.index_of(&SetPartition::parse("14|2|3", 4).unwrap()).unwrap();
        assert_eq!(names(&lex.data(s).tree), vec!["12", "23"]);
        assert_eq!(names(&lex.data(s).f_edges), vec!["23"]);
        assert_eq!(lex.describe_order(s), vec!["12", "23", "34"]);
    }

    #[test]
    fn sphere_counts_small() {
        let k2 = Multigraph::complete(2, 1).unwrap();
        assert_eq!(sphere_count(&k2, &omega("1/2,1/2")).unwrap(), 1);
        let k4 = Multigraph::complete(4, 1).unwrap();
        for (w, expect) in [("1/4,1/4,1/4,1/4", 6), ("1/2,1/2,1/2,1/2", 3), ("1,0,0,-1", 0)] {
            let w = omega(w);
            assert_eq!(sphere_count(&k4, &w).unwrap(), expect);
            assert_eq!(signed_factorial_sum(&w), expect);
            let lex = LexLabelling::new(&k4, &w, EdgeOrder::lexicographic(&k4)).unwrap();
            assert_eq!(lex.mediocre_count() as i64, expect);
            if expect > 0 {
                assert_eq!(hall_count(&k4, &w).unwrap(), expect);
            }
        }
        assert!(sphere_count(&k4, &omega("1/2,0,0,0")).is_err());
    }

    #[test]
    fn rank_formula_examples() {
        assert_eq!(rank_formula(&"1,1,1,1".parse().unwrap(), 1), 6);
        assert_eq!(rank_formula(&"2,1,1".parse().unwrap(), 2), 1);
        assert_eq!(rank_formula(&"2,2".parse().unwrap(), 2), 0);
        assert_eq!(rank_formula(&"4".parse().unwrap(), 3), 1);
        assert_eq!(omega_vector::<i64>(&"2,1,1".parse().unwrap(), 2), vec![rat(1, 1), rat(1, 2), rat(1, 2)]);
    }

    #[test]
    fn lex_axiom_on_square_and_k4() {
        let g = square();
        let lex = LexLabelling::new(&g, &omega("1/2,1/2,1/2,1/2"), square_order(&g)).unwrap();
        lex.check_lex_axiom().unwrap();
        let k4 = Multigraph::complete(4, 1).unwrap();
        let lex = LexLabelling::new(&k4, &omega("1/2,1/2,1/2,1/2"), EdgeOrder::lexicographic(&k4)).unwrap();
        lex.check_lex_axiom().unwrap();
    }

    #[test]
    fn edge_order_parsing() {
        let g = square();
        assert!(EdgeOrder::parse(&g, "12,23,34").is_err());
        assert!(EdgeOrder::parse(&g, "12,23,34,13").is_err());
        assert_eq!(EdgeOrder::parse(&g, "41,12,23,34").unwrap().pairs()[0], (0, 3));
    }
}
