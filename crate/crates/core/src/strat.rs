//! Strata of the self-self-dual Grassmannian: labels, the degeneration order,
//! simple degenerations, Hasse diagrams and covering degrees.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::repn::{hom_dim, invariant_dim, tensor_decompose};
use crate::rootdata::Weight;

/// Largest `d` accepted by [`hasse_diagram`] unless the caller raises it.
pub const DEFAULT_D_BOUND: i64 = 14;

/// A weight with its shift `k`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Pair {
    pub lambda: Weight,
    pub k: i64,
}

impl Pair {
    pub fn new(lambda: Weight, k: i64) -> Self {
        Pair { lambda, k }
    }

    /// `|lambda_{A,k}| / 7`.
    pub fn level(&self) -> i64 {
        2 * self.lambda.0 + self.lambda.1 + self.k
    }

    /// `|lambda_{A,k}|`.
    pub fn size(&self) -> i64 {
        7 * self.level()
    }

    fn key(&self) -> (i64, i64, i64, i64) {
        (-self.level(), self.k, -self.lambda.0, -self.lambda.1)
    }
}

impl Ord for Pair {
    fn cmp(&self, o: &Self) -> Ordering {
        self.key().cmp(&o.key())
    }
}

impl PartialOrd for Pair {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Display for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.lambda)?;
        if self.k != 0 {
            write!(f, "_{}", self.k)?;
        }
        Ok(())
    }
}

/// Unordered multiset of nonzero pairs, kept sorted.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct StratumLabel {
    pairs: Vec<Pair>,
}

impl StratumLabel {
    pub fn new(mut pairs: Vec<Pair>) -> Result<Self> {
        for p in &pairs {
            p.lambda.require_dominant()?;
            if p.k < 0 || p.level() == 0 {
                return Err(Error::InvalidInput(format!("pair {p} must have k >= 0 and nonzero size")));
            }
        }
        pairs.sort();
        Ok(StratumLabel { pairs })
    }

    pub fn empty() -> Self {
        StratumLabel { pairs: Vec::new() }
    }

    pub fn pairs(&self) -> &[Pair] {
        &self.pairs
    }

    /// Number of pairs, the dimension of the stratum.
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn weights(&self) -> Vec<Weight> {
        self.pairs.iter().map(|p| p.lambda).collect()
    }

    /// `sum |lambda_{A,k}|`, which equals `7(d - 7)`.
    pub fn total_size(&self) -> i64 {
        self.pairs.iter().map(Pair::size).sum()
    }

    pub fn d(&self) -> i64 {
        self.total_size() / 7 + 7
    }

    /// Nonzero invariants in the tensor product of the weights.
    pub fn is_nontrivial(&self) -> bool {
        invariant_dim(&self.weights()).map(|n| n > 0).unwrap_or(false)
    }
}

impl Ord for StratumLabel {
    fn cmp(&self, o: &Self) -> Ordering {
        o.len().cmp(&self.len()).then_with(|| self.pairs.cmp(&o.pairs))
    }
}

impl PartialOrd for StratumLabel {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Display for StratumLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.pairs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for StratumLabel {
    type Err = Error;

    /// Parses the rendered form, e.g. `((0,1)_1,(0,1))`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad stratum label {s:?}"));
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let inner = t.strip_prefix('(').and_then(|r| r.strip_suffix(')')).ok_or_else(bad)?;
        let mut pairs = Vec::new();
        let mut rest = inner;
        while !rest.is_empty() {
            let r = rest.strip_prefix('(').ok_or_else(bad)?;
            let close = r.find(')').ok_or_else(bad)?;
            let lambda: Weight = r[..close].parse().map_err(|_| bad())?;
            let mut after = &r[close + 1..];
            let mut k = 0;
            if let Some(a) = after.strip_prefix('_') {
                let end = a.find(',').unwrap_or(a.len());
                k = a[..end].parse().map_err(|_| bad())?;
                after = &a[end..];
            }
            pairs.push(Pair::new(lambda, k));
            rest = after.strip_prefix(',').unwrap_or(after);
            if !after.is_empty() && !after.starts_with(',') {
                return Err(bad());
            }
        }
        StratumLabel::new(pairs)
    }
}

impl Serialize for StratumLabel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// All pairs of level between 1 and `max_level`.
fn pairs_up_to(max_level: i64) -> Vec<Pair> {
    let mut out = Vec::new();
    for a in 0..=max_level / 2 {
        for b in 0..=max_level - 2 * a {
            for k in 0..=max_level - 2 * a - b {
                let p = Pair::new(Weight(a, b), k);
                if p.level() > 0 {
                    out.push(p);
                }
            }
        }
    }
    out.sort();
    out
}

/// All d-nontrivial labels, in canonical order.
pub fn enumerate_nontrivial(d: i64) -> Result<Vec<StratumLabel>> {
    if d < 7 {
        return Err(Error::InvalidInput(format!("d = {d} must be at least 7")));
    }
    let budget = d - 7;
    let pool = pairs_up_to(budget);
    let mut raw: Vec<Vec<Pair>> = Vec::new();
    // multisets as non-decreasing index sequences into the pool
    fn rec(pool: &[Pair], start: usize, left: i64, cur: &mut Vec<Pair>, out: &mut Vec<Vec<Pair>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for i in start..pool.len() {
            if pool[i].level() <= left {
                cur.push(pool[i]);
                rec(pool, i, left - pool[i].level(), cur, out);
                cur.pop();
            }
        }
    }
    rec(&pool, 0, budget, &mut Vec::new(), &mut raw);
    let mut labels: Vec<StratumLabel> = raw
        .into_par_iter()
        .map(|ps| StratumLabel::new(ps).unwrap())
        .filter(|l| l.is_nontrivial())
        .collect();
    labels.sort();
    labels.dedup();
    Ok(labels)
}

/// Whether `smaller` is a degeneration of `larger` (or equal to it): the pairs of
/// `larger` split into blocks, one per pair `(xi, r)` of `smaller`, with matching
/// total size and a nonzero `Hom(V_xi, tensor of the block)`.
pub fn stratum_leq(larger: &StratumLabel, smaller: &StratumLabel) -> bool {
    let (n, m) = (larger.len(), smaller.len());
    if m > n || larger.total_size() != smaller.total_size() {
        return false;
    }
    if n == 0 {
        return true;
    }
    let mut blocks: Vec<Vec<usize>> = vec![Vec::new(); m];
    assign(larger, smaller, 0, &mut blocks)
}

fn assign(larger: &StratumLabel, smaller: &StratumLabel, idx: usize, blocks: &mut Vec<Vec<usize>>) -> bool {
    let n = larger.len();
    if idx == n {
        return blocks.iter().zip(smaller.pairs()).all(|(b, target)| {
            if b.is_empty() {
                return false;
            }
            let ws: Vec<Weight> = b.iter().map(|&j| larger.pairs()[j].lambda).collect();
            hom_dim(target.lambda, &ws).map(|h| h > 0).unwrap_or(false)
        });
    }
    // indices left must still be able to fill the empty blocks
    let empty = blocks.iter().filter(|b| b.is_empty()).count();
    if n - idx < empty {
        return false;
    }
    let p = larger.pairs()[idx];
    for bi in 0..blocks.len() {
        let used: i64 = blocks[bi].iter().map(|&j| larger.pairs()[j].size()).sum();
        if used + p.size() > smaller.pairs()[bi].size() {
            continue;
        }
        // identical targets with identical contents are interchangeable
        if bi > 0 && smaller.pairs()[bi] == smaller.pairs()[bi - 1] && blocks[bi - 1].is_empty() {
            continue;
        }
        blocks[bi].push(idx);
        let full_ok = idx + 1 < n || blocks.iter().zip(smaller.pairs()).all(|(b, t)| {
            b.iter().map(|&j| larger.pairs()[j].size()).sum::<i64>() == t.size()
        });
        if full_ok && assign(larger, smaller, idx + 1, blocks) {
            blocks[bi].pop();
            return true;
        }
        blocks[bi].pop();
    }
    false
}

/// Every label obtained by merging two pairs of `a` into one `(xi, r)`, with no
/// nontriviality filter.
pub fn merge_candidates(a: &StratumLabel) -> Result<Vec<StratumLabel>> {
    let ps = a.pairs();
    let mut out = BTreeSet::new();
    for i in 0..ps.len() {
        for j in i + 1..ps.len() {
            let level = ps[i].level() + ps[j].level();
            for xi in tensor_decompose(ps[i].lambda, ps[j].lambda)?.keys() {
                let r = level - (2 * xi.0 + xi.1);
                if r < 0 {
                    continue;
                }
                let mut rest: Vec<Pair> =
                    ps.iter().enumerate().filter(|(t, _)| *t != i && *t != j).map(|(_, p)| *p).collect();
                rest.push(Pair::new(*xi, r));
                out.insert(StratumLabel::new(rest)?);
            }
        }
    }
    Ok(out.into_iter().collect())
}

/// Simple degenerations of `a`: merges of two pairs that stay d-nontrivial.
pub fn simple_degenerations(a: &StratumLabel) -> Result<Vec<StratumLabel>> {
    Ok(merge_candidates(a)?.into_iter().filter(StratumLabel::is_nontrivial).collect())
}

/// `b(Lambda, k)`: product over sizes of multinomials of the pair multiplicities.
pub fn symmetry_coefficient(a: &StratumLabel) -> u64 {
    let mut by_size: BTreeMap<i64, BTreeMap<Pair, u64>> = BTreeMap::new();
    for p in a.pairs() {
        *by_size.entry(p.size()).or_default().entry(*p).or_default() += 1;
    }
    by_size
        .values()
        .map(|mult| {
            let total: u64 = mult.values().sum();
            let mut acc: u128 = 1;
            let mut seen = 0u64;
            // multinomial as a product of binomials
            for &m in mult.values() {
                for i in 1..=m {
                    acc = acc * u128::from(seen + i) / u128::from(i);
                }
                seen += m;
            }
            debug_assert_eq!(seen, total);
            acc as u64
        })
        .product()
}

/// `b(Lambda, k) * dim (V_Lambda)^g`.
pub fn covering_degree(a: &StratumLabel) -> Result<u64> {
    Ok(symmetry_coefficient(a) * invariant_dim(&a.weights())?)
}

#[derive(Clone, Debug, Serialize)]
pub struct HasseDiagram {
    pub d: i64,
    pub nodes: Vec<StratumLabel>,
    /// Index pairs into `nodes`, from a stratum to a simple degeneration.
    pub edges: Vec<(usize, usize)>,
}

/// Nodes and simple-degeneration edges for `d <= bound`.
pub fn hasse_diagram_bounded(d: i64, bound: i64) -> Result<HasseDiagram> {
    if d > bound {
        return Err(Error::InvalidInput(format!("d = {d} exceeds the bound {bound}")));
    }
    let nodes = enumerate_nontrivial(d)?;
    let index: BTreeMap<&StratumLabel, usize> = nodes.iter().enumerate().map(|(i, l)| (l, i)).collect();
    let per_node: Vec<Result<Vec<(usize, usize)>>> = nodes
        .par_iter()
        .enumerate()
        .map(|(i, l)| {
            simple_degenerations(l)?
                .iter()
                .map(|t| {
                    index
                        .get(t)
                        .map(|&j| (i, j))
                        .ok_or_else(|| Error::Consistency(format!("degeneration {t} of {l} is not enumerated")))
                })
                .collect()
        })
        .collect();
    let mut edges = Vec::new();
    for e in per_node {
        edges.extend(e?);
    }
    edges.sort_unstable();
    edges.dedup();
    Ok(HasseDiagram { d, nodes, edges })
}

pub fn hasse_diagram(d: i64) -> Result<HasseDiagram> {
    hasse_diagram_bounded(d, DEFAULT_D_BOUND)
}

impl HasseDiagram {
    /// Node indices grouped by number of pairs, largest first.
    pub fn layers(&self) -> Vec<(usize, Vec<usize>)> {
        let mut m: BTreeMap<std::cmp::Reverse<usize>, Vec<usize>> = BTreeMap::new();
        for (i, l) in self.nodes.iter().enumerate() {
            m.entry(std::cmp::Reverse(l.len())).or_default().push(i);
        }
        m.into_iter().map(|(k, v)| (k.0, v)).collect()
    }

    /// Nodes with no incoming edge.
    pub fn maximal(&self) -> Vec<usize> {
        (0..self.nodes.len()).filter(|&i| self.edges.iter().all(|e| e.1 != i)).collect()
    }

    /// Nodes with no outgoing edge.
    pub fn minimal(&self) -> Vec<usize> {
        (0..self.nodes.len()).filter(|&i| self.edges.iter().all(|e| e.0 != i)).collect()
    }

    /// Edges of the transitive reduction of the order given by [`stratum_leq`].
    pub fn covering_edges(&self) -> Vec<(usize, usize)> {
        let n = self.nodes.len();
        let leq: Vec<Vec<bool>> = (0..n)
            .into_par_iter()
            .map(|i| (0..n).map(|j| i != j && stratum_leq(&self.nodes[i], &self.nodes[j])).collect())
            .collect();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if leq[i][j] && !(0..n).any(|k| leq[i][k] && leq[k][j]) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn edge_labels(&self) -> Vec<(String, String)> {
        self.edges.iter().map(|&(a, b)| (self.nodes[a].to_string(), self.nodes[b].to_string())).collect()
    }

    pub fn to_dot(&self) -> String {
        let mut s = format!("digraph strata_d{} {{\n  rankdir=TB;\n", self.d);
        for (n, layer) in self.layers() {
            s.push_str(&format!("  {{ rank=same; // {n} pairs\n"));
            for i in layer {
                s.push_str(&format!("    \"{}\";\n", self.nodes[i]));
            }
            s.push_str("  }\n");
        }
        for (a, b) in self.edge_labels() {
            s.push_str(&format!("  \"{a}\" -> \"{b}\";\n"));
        }
        s.push_str("}\n");
        s
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "d": self.d,
            "nodes": self.nodes.iter().map(|l| serde_json::json!({
                "label": l.to_string(),
                "dimension": l.len(),
                "symmetry_coefficient": symmetry_coefficient(l),
                "covering_degree": covering_degree(l).unwrap_or(0),
            })).collect::<Vec<_>>(),
            "edges": self.edge_labels().into_iter().map(|(a, b)| [a, b]).collect::<Vec<_>>(),
        })
    }
}
