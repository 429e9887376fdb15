//! Set partitions of `[r]` and integer partitions.
//!
//! Vertices are 0-based internally and 1-based in every textual form.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A set partition stored as a restricted growth string: `block_of[i]` is
/// the index of the block containing `i`, and blocks are numbered in order
/// of their minimum element.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    block_of: Vec<usize>,
}

impl SetPartition {
    /// Canonicalizes any labelling of blocks.
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut map = std::collections::HashMap::new();
        let block_of = labels
            .iter()
            .map(|l| {
                let n = map.len();
                *map.entry(*l).or_insert(n)
            })
            .collect();
        SetPartition { block_of }
    }

    pub fn from_blocks(r: usize, blocks: &[Vec<usize>]) -> Result<Self> {
        let mut labels = vec![usize::MAX; r];
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::InvalidInput("empty block".into()));
            }
            for &v in block {
                if v >= r || labels[v] != usize::MAX {
                    return Err(Error::InvalidInput(format!("bad vertex {} in partition", v + 1)));
                }
                labels[v] = b;
            }
        }
        if labels.contains(&usize::MAX) {
            return Err(Error::InvalidInput("blocks do not cover all vertices".into()));
        }
        Ok(Self::from_labels(&labels))
    }

    /// The finest partition `0̂`.
    pub fn singletons(r: usize) -> Self {
        SetPartition { block_of: (0..r).collect() }
    }

    /// The coarsest partition `1̂`.
    pub fn whole(r: usize) -> Self {
        SetPartition { block_of: vec![0; r] }
    }

    pub fn r(&self) -> usize {
        self.block_of.len()
    }

    /// Number of blocks.
    pub fn len(&self) -> usize {
        self.block_of.iter().max().map_or(0, |m| m + 1)
    }

    pub fn is_empty(&self) -> bool {
        self.block_of.is_empty()
    }

    pub fn block_of(&self, v: usize) -> usize {
        self.block_of[v]
    }

    pub fn labels(&self) -> &[usize] {
        &self.block_of
    }

    /// Blocks sorted by minimum element, each block sorted.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.len()];
        for (v, &b) in self.block_of.iter().enumerate() {
            out[b].push(v);
        }
        out
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        let mut s = vec![0; self.len()];
        for &b in &self.block_of {
            s[b] += 1;
        }
        s
    }

    pub fn same_block(&self, a: usize, b: usize) -> bool {
        self.block_of[a] == self.block_of[b]
    }

    /// `self ≤ other` in the refinement order.
    pub fn refines(&self, other: &SetPartition) -> bool {
        let mut img = vec![usize::MAX; self.len()];
        for (v, &b) in self.block_of.iter().enumerate() {
            let o = other.block_of[v];
            if img[b] == usize::MAX {
                img[b] = o;
            } else if img[b] != o {
                return false;
            }
        }
        true
    }

    pub fn join(&self, other: &SetPartition) -> SetPartition {
        let r = self.r();
        let mut uf = UnionFind::new(r);
        for v in 0..r {
            uf.union(v, self.first_in_block(v));
            uf.union(v, other.first_in_block(v));
        }
        uf.partition()
    }

    pub fn meet(&self, other: &SetPartition) -> SetPartition {
        let labels: Vec<usize> = (0..self.r())
            .map(|v| self.block_of[v] * (other.len() + 1) + other.block_of[v])
            .collect();
        Self::from_labels(&labels)
    }

    fn first_in_block(&self, v: usize) -> usize {
        let b = self.block_of[v];
        self.block_of.iter().position(|&x| x == b).unwrap()
    }

    /// Merges the blocks containing `a` and `b`.
    pub fn merge(&self, a: usize, b: usize) -> SetPartition {
        let (ba, bb) = (self.block_of[a], self.block_of[b]);
        let labels: Vec<usize> = self.block_of.iter().map(|&x| if x == bb { ba } else { x }).collect();
        Self::from_labels(&labels)
    }

    /// Image under a vertex permutation: `v` and `w` share a block of the
    /// result iff `perm⁻¹(v)` and `perm⁻¹(w)` share a block of `self`.
    pub fn permute(&self, perm: &[usize]) -> SetPartition {
        let mut labels = vec![0; self.r()];
        for (v, &b) in self.block_of.iter().enumerate() {
            labels[perm[v]] = b;
        }
        Self::from_labels(&labels)
    }

    /// Every set partition of `[r]` in restricted-growth order.
    pub fn all(r: usize) -> Vec<SetPartition> {
        fn go(i: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<SetPartition>) {
            if i == cur.len() {
                out.push(SetPartition { block_of: cur.clone() });
                return;
            }
            for b in 0..=max {
                cur[i] = b;
                go(i + 1, max.max(b + 1), cur, out);
            }
        }
        if r == 0 {
            return vec![SetPartition { block_of: Vec::new() }];
        }
        let mut out = Vec::new();
        let mut cur = vec![0; r];
        go(1, 1, &mut cur, &mut out);
        out
    }

    /// Parses `"12|3|4"` or, for labels above 9, `"1,2|3|10"`.
    pub fn parse(s: &str, r: usize) -> Result<Self> {
        let blocks = s
            .split('|')
            .map(|blk| {
                let blk = blk.trim();
                let items: Vec<&str> = if blk.contains(',') {
                    blk.split(',').map(str::trim).collect()
                } else {
                    blk.split("").filter(|c| !c.is_empty()).collect()
                };
                items
                    .into_iter()
                    .map(|c| {
                        c.parse::<usize>()
                            .ok()
                            .filter(|&v| v >= 1)
                            .map(|v| v - 1)
                            .ok_or_else(|| Error::Parse(format!("invalid partition `{s}`")))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_blocks(r, &blocks)
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.r() > 9 { "," } else { "" };
        let s: Vec<String> = self
            .blocks()
            .iter()
            .map(|b| b.iter().map(|v| (v + 1).to_string()).collect::<Vec<_>>().join(sep))
            .collect();
        write!(f, "{}", s.join("|"))
    }
}

/// Disjoint-set forest with path halving.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false when already joined.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        true
    }

    pub fn partition(&mut self) -> SetPartition {
        let labels: Vec<usize> = (0..self.parent.len()).map(|v| self.find(v)).collect();
        SetPartition::from_labels(&labels)
    }
}

/// An integer partition with parts in descending order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntPartition {
    parts: Vec<u64>,
}

impl IntPartition {
    pub fn new(mut parts: Vec<u64>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::InvalidInput("integer partition needs positive parts".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(IntPartition { parts })
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn n(&self) -> u64 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.parts.len() == 1
    }

    /// Partitions of `n`, ordered from `{n}` down to all ones.
    pub fn all(n: u64) -> Vec<IntPartition> {
        fn go(rest: u64, max: u64, cur: &mut Vec<u64>, out: &mut Vec<IntPartition>) {
            if rest == 0 {
                out.push(IntPartition { parts: cur.clone() });
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                go(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Label `3+1` used in tables.
    pub fn plus_label(&self) -> String {
        self.parts.iter().map(u64::to_string).collect::<Vec<_>>().join("+")
    }
}

impl fmt::Display for IntPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(u64::to_string).collect();
        write!(f, "{{{}}}", s.join(","))
    }
}

impl FromStr for IntPartition {
    type Err = Error;

    /// Accepts `1,1,1,1`, `{2,1,1}` or `2+1+1`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('{').trim_end_matches('}');
        let parts = t
            .split([',', '+'])
            .map(|p| p.trim().parse::<u64>().map_err(|_| Error::Parse(format!("invalid integer partition `{s}`"))))
            .collect::<Result<Vec<_>>>()?;
        IntPartition::new(parts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bell_numbers() {
        let counts: Vec<usize> = (0..7).map(|r| SetPartition::all(r).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 15, 52, 203]);
    }

    #[test]
    fn parse_and_display() {
        let p = SetPartition::parse("14|2|3", 4).unwrap();
        assert_eq!(p.to_string(), "14|2|3");
        assert_eq!(p.len(), 3);
        assert_eq!(SetPartition::parse("3|21|4", 4).unwrap().to_string(), "12|3|4");
        assert!(SetPartition::parse("12|2", 3).is_err());
        assert!(SetPartition::parse("12", 3).is_err());
        let big = SetPartition::parse("1,10|2|3|4|5|6|7|8|9", 10).unwrap();
        assert_eq!(big.to_string(), "1,10|2|3|4|5|6|7|8|9");
    }

    #[test]
    fn lattice_operations() {
        let a = SetPartition::parse("12|3|4", 4).unwrap();
        let b = SetPartition::parse("1|2|34", 4).unwrap();
        assert_eq!(a.join(&b).to_string(), "12|34");
        assert_eq!(a.meet(&b), SetPartition::singletons(4));
        assert!(a.refines(&a.join(&b)));
        assert!(!a.refines(&b));
        assert!(SetPartition::singletons(4).refines(&a));
        assert!(a.refines(&SetPartition::whole(4)));
        assert_eq!(a.merge(0, 3).to_string(), "124|3");
    }

    #[test]
    fn permute_partition() {
        let a = SetPartition::parse("12|3", 3).unwrap();
        // perm sends 1->3, 2->2, 3->1
        assert_eq!(a.permute(&[2, 1, 0]).to_string(), "1|23");
    }

    #[test]
    fn integer_partitions() {
        let p4: Vec<String> = IntPartition::all(4).iter().map(|p| p.to_string()).collect();
        assert_eq!(p4, vec!["{4}", "{3,1}", "{2,2}", "{2,1,1}", "{1,1,1,1}"]);
        assert_eq!(IntPartition::all(6).len(), 11);
        let p: IntPartition = "1,2,1".parse().unwrap();
        assert_eq!(p.parts(), &[2, 1, 1]);
        assert_eq!(p.plus_label(), "2+1+1");
        assert!("0,1".parse::<IntPartition>().is_err());
    }
}
