use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// The order `m_st` of a product of two distinct generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeOrder {
    Finite(u32),
    Infinite,
}

impl EdgeOrder {
    pub fn finite(self) -> Option<u32> {
        match self {
            EdgeOrder::Finite(m) => Some(m),
            EdgeOrder::Infinite => None,
        }
    }

    /// Edges of the Coxeter graph are the pairs with `m >= 3`.
    pub fn is_edge(self) -> bool {
        !matches!(self, EdgeOrder::Finite(m) if m <= 2)
    }
}

impl fmt::Display for EdgeOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EdgeOrder::Finite(m) => write!(f, "{m}"),
            EdgeOrder::Infinite => write!(f, "inf"),
        }
    }
}

/// A validated Coxeter graph: generator labels plus the symmetric matrix of
/// orders. Pairs not listed at construction default to `m = 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoxeterGraph {
    generators: Vec<String>,
    orders: Vec<Vec<EdgeOrder>>,
    connected: bool,
    simply_laced: bool,
    cycle_count: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct RawGraph {
    generators: Vec<String>,
    #[serde(default)]
    edges: Vec<RawEdge>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct RawEdge {
    a: String,
    b: String,
    m: RawOrder,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
enum RawOrder {
    Number(i64),
    Text(String),
}

impl CoxeterGraph {
    /// Validates generator labels and the listed edges.
    pub fn new<S: Into<String>>(
        generators: impl IntoIterator<Item = S>,
        edges: impl IntoIterator<Item = (String, String, EdgeOrder)>,
    ) -> Result<Self> {
        let generators: Vec<String> = generators.into_iter().map(Into::into).collect();
        if generators.is_empty() {
            return Err(Error::InvalidGraph("no generators".into()));
        }
        let mut index = HashMap::new();
        for (i, g) in generators.iter().enumerate() {
            if g.is_empty() {
                return Err(Error::InvalidGraph("empty generator label".into()));
            }
            if index.insert(g.as_str(), i).is_some() {
                return Err(Error::InvalidGraph(format!("duplicate generator label `{g}`")));
            }
        }
        let n = generators.len();
        let mut orders = vec![vec![EdgeOrder::Finite(2); n]; n];
        let mut seen = vec![vec![false; n]; n];
        for (i, row) in orders.iter_mut().enumerate() {
            row[i] = EdgeOrder::Finite(1);
        }
        for (a, b, m) in edges {
            let i = *index.get(a.as_str()).ok_or_else(|| Error::UnknownGenerator(a.clone()))?;
            let j = *index.get(b.as_str()).ok_or_else(|| Error::UnknownGenerator(b.clone()))?;
            if i == j {
                return Err(Error::InvalidGraph(format!("edge from `{a}` to itself")));
            }
            if let EdgeOrder::Finite(k) = m {
                if k < 2 {
                    return Err(Error::InvalidGraph(format!("m({a},{b}) = {k} is below 2")));
                }
            }
            if seen[i][j] && orders[i][j] != m {
                return Err(Error::InvalidGraph(format!("conflicting orders for `{a}`,`{b}`")));
            }
            seen[i][j] = true;
            seen[j][i] = true;
            orders[i][j] = m;
            orders[j][i] = m;
        }
        Ok(Self::with_flags(generators, orders))
    }

    fn with_flags(generators: Vec<String>, orders: Vec<Vec<EdgeOrder>>) -> Self {
        let n = generators.len();
        let simply_laced = orders
            .iter()
            .enumerate()
            .all(|(i, row)| row.iter().enumerate().all(|(j, m)| i == j || matches!(m, EdgeOrder::Finite(2 | 3) | EdgeOrder::Infinite)));
        let edge_count = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| orders[i][j].is_edge())
            .count();
        let components = count_components(n, |i, j| orders[i][j].is_edge());
        Self {
            generators,
            orders,
            connected: components == 1,
            simply_laced,
            cycle_count: edge_count + components - n,
        }
    }

    /// Dihedral graph `I_2(m)` on generators `r`, `t`.
    pub fn dihedral(m: EdgeOrder) -> Result<Self> {
        Self::new(["r", "t"], [("r".to_string(), "t".to_string(), m)])
    }

    /// `A_n` on `s1, ..., sn`.
    pub fn type_a(n: usize) -> Self {
        let gens: Vec<String> = (1..=n).map(|i| format!("s{i}")).collect();
        let edges = (1..n).map(|i| (format!("s{i}"), format!("s{}", i + 1), EdgeOrder::Finite(3)));
        Self::new(gens, edges).expect("valid A_n graph")
    }

    /// `D_n` (n >= 4): a path `s1 - ... - s(n-1)` with `sn` attached to `s(n-2)`.
    pub fn type_d(n: usize) -> Self {
        assert!(n >= 4);
        let gens: Vec<String> = (1..=n).map(|i| format!("s{i}")).collect();
        let mut edges: Vec<_> =
            (1..n - 1).map(|i| (format!("s{i}"), format!("s{}", i + 1), EdgeOrder::Finite(3))).collect();
        edges.push((format!("s{}", n - 2), format!("s{n}"), EdgeOrder::Finite(3)));
        Self::new(gens, edges).expect("valid D_n graph")
    }

    /// Affine `~A_(n-1)`: an `n`-cycle with all orders 3 on `s0, ..., s(n-1)`.
    pub fn affine_a_cycle(n: usize) -> Self {
        assert!(n >= 3);
        let gens: Vec<String> = (0..n).map(|i| format!("s{i}")).collect();
        let edges = (0..n).map(|i| (format!("s{i}"), format!("s{}", (i + 1) % n), EdgeOrder::Finite(3)));
        Self::new(gens, edges).expect("valid cycle graph")
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn label(&self, s: usize) -> &str {
        &self.generators[s]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.generators
            .iter()
            .position(|g| g == label)
            .ok_or_else(|| Error::UnknownGenerator(label.to_string()))
    }

    pub fn order(&self, s: usize, t: usize) -> EdgeOrder {
        self.orders[s][t]
    }

    pub fn connected(&self) -> bool {
        self.connected
    }

    pub fn simply_laced(&self) -> bool {
        self.simply_laced
    }

    pub fn cycle_count(&self) -> usize {
        self.cycle_count
    }

    pub fn is_tree(&self) -> bool {
        self.connected && self.cycle_count == 0
    }

    /// Unordered pairs `s < t` with finite `m_st`.
    pub fn finite_pairs(&self) -> Vec<(usize, usize, u32)> {
        let n = self.rank();
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter_map(|(i, j)| self.orders[i][j].finite().map(|m| (i, j, m)))
            .collect()
    }

    /// Neighbours of `s` in the Coxeter graph (pairs with `m >= 3`).
    pub fn neighbours(&self, s: usize) -> Vec<usize> {
        (0..self.rank()).filter(|&t| t != s && self.orders[s][t].is_edge()).collect()
    }

    /// Renders a word with the generator labels, `"e"` for the empty word.
    /// Labels are concatenated when all are single characters, else joined by `.`.
    pub fn format_word(&self, word: &[usize]) -> String {
        if word.is_empty() {
            return "e".to_string();
        }
        let sep = if self.generators.iter().all(|g| g.chars().count() == 1) { "" } else { "." };
        word.iter().map(|&s| self.generators[s].as_str()).collect::<Vec<_>>().join(sep)
    }

    pub fn word_labels(&self, word: &[usize]) -> Vec<String> {
        word.iter().map(|&s| self.generators[s].clone()).collect()
    }

    pub fn parse_word<S: AsRef<str>>(&self, labels: &[S]) -> Result<Vec<usize>> {
        labels.iter().map(|l| self.index_of(l.as_ref())).collect()
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let raw: RawGraph = serde_json::from_value(value.clone())
            .map_err(|e| Error::Parse(format!("graph: {e}")))?;
        let edges = raw
            .edges
            .into_iter()
            .map(|e| {
                let m = match e.m {
                    RawOrder::Number(k) if k >= 0 && k <= u32::MAX as i64 => EdgeOrder::Finite(k as u32),
                    RawOrder::Number(k) => {
                        return Err(Error::InvalidGraph(format!("m({},{}) = {k} is below 2", e.a, e.b)))
                    }
                    RawOrder::Text(t) if matches!(t.as_str(), "inf" | "infinity" | "∞") => EdgeOrder::Infinite,
                    RawOrder::Text(t) => return Err(Error::Parse(format!("bad edge order `{t}`"))),
                };
                Ok((e.a, e.b, m))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(raw.generators, edges)
    }

    /// Canonical JSON: only pairs with `m != 2` are listed.
    pub fn to_json(&self) -> serde_json::Value {
        let n = self.rank();
        let edges: Vec<_> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.orders[i][j] != EdgeOrder::Finite(2))
            .map(|(i, j)| {
                let m = match self.orders[i][j] {
                    EdgeOrder::Finite(m) => serde_json::Value::from(m),
                    EdgeOrder::Infinite => serde_json::Value::from("inf"),
                };
                serde_json::json!({"a": self.generators[i], "b": self.generators[j], "m": m})
            })
            .collect();
        serde_json::json!({"generators": self.generators, "edges": edges})
    }

    pub fn flags_json(&self) -> serde_json::Value {
        serde_json::json!({
            "connected": self.connected,
            "simply_laced": self.simply_laced,
            "cycle_count": self.cycle_count,
        })
    }
}

/// Connected components of the graph on `0..n` with the given adjacency.
pub(crate) fn count_components(n: usize, adjacent: impl Fn(usize, usize) -> bool) -> usize {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut root = x;
        while parent[root] != root {
            root = parent[root];
        }
        parent[x] = root;
        root
    }
    for i in 0..n {
        for j in i + 1..n {
            if adjacent(i, j) {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a] = b;
            }
        }
    }
    let roots: BTreeMap<usize, ()> = (0..n).map(|i| (find(&mut parent, i), ())).collect();
    roots.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn edge(a: &str, b: &str, m: u32) -> (String, String, EdgeOrder) {
        (a.into(), b.into(), EdgeOrder::Finite(m))
    }

    #[test]
    fn validation_examples() {
        let g = CoxeterGraph::new(["r", "t"], [edge("r", "t", 3)]).unwrap();
        assert!(g.simply_laced() && g.is_tree());

        let tri = CoxeterGraph::new(["a", "b", "c"], [edge("a", "b", 3), edge("b", "c", 3), edge("a", "c", 3)]).unwrap();
        assert_eq!(tri.cycle_count(), 1);
        assert!(tri.connected());

        assert!(matches!(CoxeterGraph::new(["r", "t"], [edge("r", "t", 1)]), Err(Error::InvalidGraph(_))));
        assert!(matches!(CoxeterGraph::new(["r", "r"], Vec::new()), Err(Error::InvalidGraph(_))));
        assert_eq!(
            CoxeterGraph::new(["r", "t"], [edge("r", "u", 3)]),
            Err(Error::UnknownGenerator("u".into()))
        );
    }

    #[test]
    fn derived_flags() {
        assert!(!CoxeterGraph::dihedral(EdgeOrder::Finite(4)).unwrap().simply_laced());
        let a3 = CoxeterGraph::type_a(3);
        assert_eq!(a3.order(0, 2), EdgeOrder::Finite(2));
        assert!(a3.is_tree());
        let disjoint = CoxeterGraph::new(["a", "b", "c"], [edge("a", "b", 3)]).unwrap();
        assert!(!disjoint.connected());
        assert_eq!(disjoint.cycle_count(), 0);
        // Two triangles sharing an edge: 5 edges, 4 vertices, 1 component.
        let two = CoxeterGraph::new(
            ["a", "b", "c", "d"],
            [edge("a", "b", 3), edge("b", "c", 3), edge("a", "c", 3), edge("b", "d", 3), edge("c", "d", 3)],
        )
        .unwrap();
        assert_eq!(two.cycle_count(), 2);
    }

    #[test]
    fn json_roundtrip() {
        let json = serde_json::json!({
            "generators": ["r", "t", "u"],
            "edges": [{"a": "r", "b": "t", "m": 3}, {"a": "t", "b": "u", "m": "inf"}]
        });
        let g = CoxeterGraph::from_json(&json).unwrap();
        assert_eq!(g.order(1, 2), EdgeOrder::Infinite);
        assert_eq!(g.order(0, 2), EdgeOrder::Finite(2));
        assert_eq!(g.to_json(), json);
        assert!(CoxeterGraph::from_json(&serde_json::json!({"generators": ["a"], "edges": [{"a": "a", "b": "b", "m": 0}]})).is_err());
    }
}
