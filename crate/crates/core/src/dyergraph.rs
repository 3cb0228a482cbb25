//! Dyer graphs: a finite simple graph with vertex orders `f(v) in {2, 3, ..., inf}`
//! and edge labels `m(e) >= 2`, where an edge labeled `m >= 3` may only join two
//! vertices of order 2.
//!
//! Vertices keep their declaration order. Subsets are `u64` bitmasks over that
//! order, bound to the graph they were created from.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coxeter::{self, CoxeterClass};

/// Largest supported vertex count (subsets are `u64` bitmasks).
pub const MAX_VERTICES: usize = 64;

static NEXT_GRAPH_ID: AtomicU64 = AtomicU64::new(1);

fn fresh_id() -> u64 {
    NEXT_GRAPH_ID.fetch_add(1, Ordering::Relaxed)
}

/// Order of a generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Order {
    Finite(u32),
    Infinite,
}

impl Order {
    pub fn is_involution(self) -> bool {
        self == Order::Finite(2)
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(n) => write!(f, "{n}"),
            Order::Infinite => f.write_str("inf"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("vertex name must be nonempty")]
    EmptyName,
    #[error("duplicate vertex {0:?}")]
    DuplicateVertex(String),
    #[error("vertex {name:?} has order {order}; orders must be >= 2 or \"inf\"")]
    OrderTooSmall { name: String, order: i64 },
    #[error("vertex {name:?} has unknown order symbol {symbol:?}")]
    BadOrderSymbol { name: String, symbol: String },
    #[error("edge {a:?}-{b:?} names unknown vertex {missing:?}")]
    UnknownVertex {
        a: String,
        b: String,
        missing: String,
    },
    #[error("self-loop at {0:?}")]
    SelfLoop(String),
    #[error("duplicate edge {0:?}-{1:?}")]
    DuplicateEdge(String, String),
    #[error("edge {a:?}-{b:?} has label {label}; labels must be >= 2")]
    LabelTooSmall { a: String, b: String, label: i64 },
    #[error("edge {a:?}-{b:?} has label {label} but its ends do not both have order 2")]
    MixedLabel { a: String, b: String, label: u32 },
    #[error("{0} vertices exceeds the supported maximum of {MAX_VERTICES}")]
    TooManyVertices(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("invalid Dyer graph: {}", list_violations(.0))]
    Invalid(Vec<Violation>),
    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),
    #[error("vertex subset belongs to a different graph")]
    ForeignSubset,
    #[error("malformed graph file: {0}")]
    Parse(String),
}

fn list_violations(v: &[Violation]) -> String {
    v.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}

/// Order as it appears in a graph file: an integer or the string `"inf"`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RawOrder {
    Int(i64),
    Symbol(String),
}

impl From<Order> for RawOrder {
    fn from(o: Order) -> Self {
        match o {
            Order::Finite(n) => RawOrder::Int(n.into()),
            Order::Infinite => RawOrder::Symbol("inf".into()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawVertex {
    pub name: String,
    pub order: RawOrder,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawEdge {
    pub ends: [String; 2],
    pub label: i64,
}

/// Unvalidated graph description, in the JSON file layout
/// `{"vertices":[{"name","order"}...],"edges":[{"ends":[a,b],"label"}...]}`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphSpec {
    pub vertices: Vec<RawVertex>,
    #[serde(default)]
    pub edges: Vec<RawEdge>,
}

impl GraphSpec {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn vertex(mut self, name: &str, order: Order) -> Self {
        self.vertices.push(RawVertex {
            name: name.to_string(),
            order: order.into(),
        });
        self
    }

    pub fn edge(mut self, a: &str, b: &str, label: u32) -> Self {
        self.edges.push(RawEdge {
            ends: [a.to_string(), b.to_string()],
            label: label.into(),
        });
        self
    }

    pub fn from_json(text: &str) -> Result<Self, GraphError> {
        serde_json::from_str(text).map_err(|e| GraphError::Parse(e.to_string()))
    }

    pub fn validate(&self) -> Result<DyerGraph, GraphError> {
        validate(self)
    }
}

/// A validated Dyer graph.
#[derive(Debug, Clone)]
pub struct DyerGraph {
    id: u64,
    names: Vec<String>,
    orders: Vec<Order>,
    /// Row-major `n x n`; `None` means no edge.
    labels: Vec<Option<u32>>,
    adjacency: Vec<u64>,
}

/// Checks every constraint and reports all violations at once.
pub fn validate(spec: &GraphSpec) -> Result<DyerGraph, GraphError> {
    let mut violations = Vec::new();
    let n = spec.vertices.len();
    if n > MAX_VERTICES {
        return Err(GraphError::Invalid(vec![Violation::TooManyVertices(n)]));
    }

    let mut index: HashMap<&str, usize> = HashMap::new();
    let mut names = Vec::with_capacity(n);
    let mut orders = Vec::with_capacity(n);
    for v in &spec.vertices {
        if v.name.is_empty() {
            violations.push(Violation::EmptyName);
        } else if index.insert(v.name.as_str(), names.len()).is_some() {
            violations.push(Violation::DuplicateVertex(v.name.clone()));
        }
        let order = match &v.order {
            RawOrder::Int(k) if *k >= 2 && *k <= u32::MAX as i64 => Order::Finite(*k as u32),
            RawOrder::Int(k) => {
                violations.push(Violation::OrderTooSmall {
                    name: v.name.clone(),
                    order: *k,
                });
                Order::Infinite
            }
            RawOrder::Symbol(s) if s == "inf" => Order::Infinite,
            RawOrder::Symbol(s) => {
                violations.push(Violation::BadOrderSymbol {
                    name: v.name.clone(),
                    symbol: s.clone(),
                });
                Order::Infinite
            }
        };
        names.push(v.name.clone());
        orders.push(order);
    }

    let mut labels = vec![None; n * n];
    let mut adjacency = vec![0u64; n];
    let mut seen = BTreeSet::new();
    for e in &spec.edges {
        let [a, b] = &e.ends;
        let mut endpoints = Vec::with_capacity(2);
        for end in [a, b] {
            match index.get(end.as_str()) {
                Some(&i) => endpoints.push(i),
                None => violations.push(Violation::UnknownVertex {
                    a: a.clone(),
                    b: b.clone(),
                    missing: end.clone(),
                }),
            }
        }
        if a == b {
            violations.push(Violation::SelfLoop(a.clone()));
            continue;
        }
        if e.label < 2 || e.label > u32::MAX as i64 {
            violations.push(Violation::LabelTooSmall {
                a: a.clone(),
                b: b.clone(),
                label: e.label,
            });
            continue;
        }
        let label = e.label as u32;
        let [i, j] = match endpoints[..] {
            [i, j] => [i, j],
            _ => continue,
        };
        if !seen.insert((i.min(j), i.max(j))) {
            violations.push(Violation::DuplicateEdge(a.clone(), b.clone()));
            continue;
        }
        if label != 2 && !(orders[i].is_involution() && orders[j].is_involution()) {
            violations.push(Violation::MixedLabel {
                a: a.clone(),
                b: b.clone(),
                label,
            });
        }
        labels[i * n + j] = Some(label);
        labels[j * n + i] = Some(label);
        adjacency[i] |= 1 << j;
        adjacency[j] |= 1 << i;
    }

    if violations.is_empty() {
        Ok(DyerGraph {
            id: fresh_id(),
            names,
            orders,
            labels,
            adjacency,
        })
    } else {
        Err(GraphError::Invalid(violations))
    }
}

impl DyerGraph {
    pub fn from_json(text: &str) -> Result<Self, GraphError> {
        GraphSpec::from_json(text)?.validate()
    }

    pub fn to_spec(&self) -> GraphSpec {
        let mut spec = GraphSpec::new();
        for (name, &order) in self.names.iter().zip(&self.orders) {
            spec = spec.vertex(name, order);
        }
        for (i, j, label) in self.edges() {
            spec = spec.edge(&self.names[i], &self.names[j], label);
        }
        spec
    }

    /// Identity shared by clones; fresh for every validated or derived graph.
    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn order(&self, v: usize) -> Order {
        self.orders[v]
    }

    pub fn index_of(&self, name: &str) -> Result<usize, GraphError> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| GraphError::UnknownVertex(name.to_string()))
    }

    pub fn label(&self, a: usize, b: usize) -> Option<u32> {
        self.labels[a * self.len() + b]
    }

    /// Bitmask of the neighbours of `v`.
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adjacency[v]
    }

    /// Edges `(i, j, label)` with `i < j`, in index order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        let n = self.len();
        (0..n)
            .flat_map(move |i| (i + 1..n).filter_map(move |j| self.label(i, j).map(|m| (i, j, m))))
    }

    pub fn edge_count(&self) -> usize {
        self.edges().count()
    }

    pub fn all_labels_two(&self) -> bool {
        self.edges().all(|(_, _, m)| m == 2)
    }

    pub fn full_mask(&self) -> u64 {
        bits::full(self.len())
    }

    pub fn full(&self) -> VertexSubset {
        self.subset_from_mask(self.full_mask())
    }

    pub fn empty_subset(&self) -> VertexSubset {
        self.subset_from_mask(0)
    }

    /// Panics if `mask` has bits outside the vertex range.
    pub fn subset_from_mask(&self, mask: u64) -> VertexSubset {
        assert_eq!(mask & !self.full_mask(), 0, "subset bits out of range");
        VertexSubset {
            graph_id: self.id,
            bits: mask,
        }
    }

    pub fn subset<S: AsRef<str>>(&self, names: &[S]) -> Result<VertexSubset, GraphError> {
        let mut mask = 0;
        for n in names {
            mask |= 1 << self.index_of(n.as_ref())?;
        }
        Ok(self.subset_from_mask(mask))
    }

    /// Returns the raw mask after checking that `s` belongs to this graph.
    pub fn mask_of(&self, s: &VertexSubset) -> Result<u64, GraphError> {
        if s.graph_id != self.id {
            return Err(GraphError::ForeignSubset);
        }
        Ok(s.bits)
    }

    /// Mask of the vertices with `f(v) = 2`.
    pub fn v2_mask(&self) -> u64 {
        self.mask_where(|o| o == Order::Finite(2))
    }

    /// Mask of the vertices with `2 < f(v) < inf`.
    pub fn vp_mask(&self) -> u64 {
        self.mask_where(|o| matches!(o, Order::Finite(k) if k > 2))
    }

    pub fn vinf_mask(&self) -> u64 {
        self.mask_where(|o| o == Order::Infinite)
    }

    fn mask_where(&self, pred: impl Fn(Order) -> bool) -> u64 {
        self.orders
            .iter()
            .enumerate()
            .filter(|(_, &o)| pred(o))
            .fold(0, |m, (i, _)| m | (1 << i))
    }

    /// Every pair of vertices in `mask` is joined by an edge.
    pub fn is_complete_on(&self, mask: u64) -> bool {
        bits::iter(mask).all(|v| mask & !(1 << v) & !self.adjacency[v] == 0)
    }

    /// Link and star of `v` inside the full subgraph on `mask`.
    pub fn link_star_in(&self, v: usize, mask: u64) -> (u64, u64) {
        let lk = self.adjacency[v] & mask;
        (lk, lk | (1 << v))
    }

    /// Full subgraph on `mask`, as a new graph with its own identity.
    pub fn induced_by_mask(&self, mask: u64) -> DyerGraph {
        let keep: Vec<usize> = bits::iter(mask).collect();
        let n = keep.len();
        let mut labels = vec![None; n * n];
        let mut adjacency = vec![0u64; n];
        for (a, &i) in keep.iter().enumerate() {
            for (b, &j) in keep.iter().enumerate() {
                if let Some(m) = self.label(i, j) {
                    labels[a * n + b] = Some(m);
                    adjacency[a] |= 1 << b;
                }
            }
        }
        DyerGraph {
            id: fresh_id(),
            names: keep.iter().map(|&i| self.names[i].clone()).collect(),
            orders: keep.iter().map(|&i| self.orders[i]).collect(),
            labels,
            adjacency,
        }
    }

    /// Same graph with vertices re-declared in the order `perm[0], perm[1], ...`.
    pub fn permuted(&self, perm: &[usize]) -> DyerGraph {
        assert_eq!(perm.len(), self.len());
        let n = self.len();
        let mut labels = vec![None; n * n];
        let mut adjacency = vec![0u64; n];
        for a in 0..n {
            for b in 0..n {
                if let Some(m) = self.label(perm[a], perm[b]) {
                    labels[a * n + b] = Some(m);
                    adjacency[a] |= 1 << b;
                }
            }
        }
        DyerGraph {
            id: fresh_id(),
            names: perm.iter().map(|&i| self.names[i].clone()).collect(),
            orders: perm.iter().map(|&i| self.orders[i]).collect(),
            labels,
            adjacency,
        }
    }

    /// Structural identity, ignoring the graph id.
    pub fn same_structure(&self, other: &DyerGraph) -> bool {
        self.names == other.names && self.orders == other.orders && self.labels == other.labels
    }
}

/// A set of vertices of one particular graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct VertexSubset {
    graph_id: u64,
    bits: u64,
}

impl VertexSubset {
    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn contains(&self, v: usize) -> bool {
        v < 64 && self.bits >> v & 1 == 1
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> {
        bits::iter(self.bits)
    }
}

/// Full subgraph spanned by `subset`.
pub fn induced(graph: &DyerGraph, subset: &VertexSubset) -> Result<DyerGraph, GraphError> {
    Ok(graph.induced_by_mask(graph.mask_of(subset)?))
}

/// `(lk(v), st(v))`.
pub fn link_star(graph: &DyerGraph, v: &str) -> Result<(VertexSubset, VertexSubset), GraphError> {
    let i = graph.index_of(v)?;
    let (lk, st) = graph.link_star_in(i, graph.full_mask());
    Ok((graph.subset_from_mask(lk), graph.subset_from_mask(st)))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureReport {
    pub is_complete: bool,
    pub is_spherical: bool,
    pub is_finite_group: bool,
    pub n_involutions: usize,
    pub n_finite_higher: usize,
    pub n_infinite: usize,
    /// Classification of the Coxeter diagram on the order-2 vertices.
    pub coxeter: CoxeterClass,
}

pub fn classify(graph: &DyerGraph) -> StructureReport {
    classify_mask(graph, graph.full_mask())
}

/// Structure of the full subgraph on `mask`.
pub fn classify_mask(graph: &DyerGraph, mask: u64) -> StructureReport {
    let is_complete = graph.is_complete_on(mask);
    let v2 = mask & graph.v2_mask();
    let coxeter = coxeter::classify_mask(graph, v2);
    let is_spherical = is_complete && coxeter.is_finite();
    let n_infinite = (mask & graph.vinf_mask()).count_ones() as usize;
    StructureReport {
        is_complete,
        is_spherical,
        is_finite_group: is_spherical && n_infinite == 0,
        n_involutions: v2.count_ones() as usize,
        n_finite_higher: (mask & graph.vp_mask()).count_ones() as usize,
        n_infinite,
        coxeter,
    }
}

/// Bitmask helpers.
pub mod bits {
    pub fn full(n: usize) -> u64 {
        if n >= 64 {
            u64::MAX
        } else {
            (1u64 << n) - 1
        }
    }

    /// Set bits in increasing order.
    pub fn iter(mut mask: u64) -> impl Iterator<Item = usize> {
        std::iter::from_fn(move || {
            if mask == 0 {
                return None;
            }
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        })
    }

    /// All submasks of `mask`, including `0` and `mask` itself.
    pub fn submasks(mask: u64) -> impl Iterator<Item = u64> {
        let mut next = Some(mask);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == 0 {
                None
            } else {
                Some((cur - 1) & mask)
            };
            Some(cur)
        })
    }

    pub fn parity_sign(mask: u64) -> i64 {
        if mask.count_ones().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const INF: Order = Order::Infinite;
    fn fin(k: u32) -> Order {
        Order::Finite(k)
    }

    fn path_xyz() -> DyerGraph {
        GraphSpec::new()
            .vertex("x", fin(2))
            .vertex("y", fin(2))
            .vertex("z", fin(2))
            .edge("x", "y", 3)
            .edge("y", "z", 2)
            .validate()
            .unwrap()
    }

    #[test]
    fn validate_rejects_mixed_label() {
        let err = GraphSpec::new()
            .vertex("x", fin(3))
            .vertex("y", fin(2))
            .edge("x", "y", 3)
            .validate()
            .unwrap_err();
        assert_eq!(
            err,
            GraphError::Invalid(vec![Violation::MixedLabel {
                a: "x".into(),
                b: "y".into(),
                label: 3
            }])
        );
    }

    #[test]
    fn validate_accepts_basic_graphs() {
        let z = GraphSpec::new().vertex("x", INF).validate().unwrap();
        assert_eq!(z.len(), 1);
        assert_eq!(z.order(0), INF);
        let i23 = GraphSpec::new()
            .vertex("x", fin(2))
            .vertex("y", fin(2))
            .edge("x", "y", 3)
            .validate()
            .unwrap();
        assert_eq!(i23.label(0, 1), Some(3));
        assert_eq!(i23.label(1, 0), Some(3));
    }

    #[test]
    fn validate_lists_every_violation() {
        let spec = GraphSpec {
            vertices: vec![
                RawVertex {
                    name: "a".into(),
                    order: RawOrder::Int(1),
                },
                RawVertex {
                    name: "a".into(),
                    order: RawOrder::Int(2),
                },
                RawVertex {
                    name: "".into(),
                    order: RawOrder::Symbol("omega".into()),
                },
                RawVertex {
                    name: "b".into(),
                    order: RawOrder::Int(2),
                },
            ],
            edges: vec![
                RawEdge {
                    ends: ["a".into(), "a".into()],
                    label: 2,
                },
                RawEdge {
                    ends: ["a".into(), "q".into()],
                    label: 2,
                },
                RawEdge {
                    ends: ["a".into(), "b".into()],
                    label: 1,
                },
                RawEdge {
                    ends: ["b".into(), "a".into()],
                    label: 2,
                },
                RawEdge {
                    ends: ["a".into(), "b".into()],
                    label: 2,
                },
            ],
        };
        let GraphError::Invalid(v) = spec.validate().unwrap_err() else {
            panic!("expected validation error");
        };
        assert!(v.contains(&Violation::OrderTooSmall {
            name: "a".into(),
            order: 1
        }));
        assert!(v.contains(&Violation::DuplicateVertex("a".into())));
        assert!(v.contains(&Violation::EmptyName));
        assert!(v
            .iter()
            .any(|x| matches!(x, Violation::BadOrderSymbol { .. })));
        assert!(v.contains(&Violation::SelfLoop("a".into())));
        assert!(v
            .iter()
            .any(|x| matches!(x, Violation::UnknownVertex { missing, .. } if missing == "q")));
        assert!(v
            .iter()
            .any(|x| matches!(x, Violation::LabelTooSmall { label: 1, .. })));
        assert!(v.contains(&Violation::DuplicateEdge("a".into(), "b".into())));
    }

    #[test]
    fn json_file_format() {
        let text = r#"{"vertices":[{"name":"x","order":2},{"name":"y","order":"inf"}],
                       "edges":[{"ends":["x","y"],"label":2}]}"#;
        let g = DyerGraph::from_json(text).unwrap();
        assert_eq!(g.order(1), INF);
        assert_eq!(g.label(0, 1), Some(2));
        let again = DyerGraph::from_json(&serde_json::to_string(&g.to_spec()).unwrap()).unwrap();
        assert!(again.same_structure(&g));
        assert!(matches!(
            DyerGraph::from_json("{\"vertices\":3}"),
            Err(GraphError::Parse(_))
        ));
        assert!(matches!(
            DyerGraph::from_json(r#"{"vertices":[{"name":"x","order":-3}]}"#),
            Err(GraphError::Invalid(_))
        ));
    }

    #[test]
    fn induced_examples() {
        let g = path_xyz();
        assert!(induced(&g, &g.full()).unwrap().same_structure(&g));
        assert!(induced(&g, &g.empty_subset()).unwrap().is_empty());
        let xz = induced(&g, &g.subset(&["x", "z"]).unwrap()).unwrap();
        assert_eq!(xz.names(), &["x".to_string(), "z".to_string()]);
        assert_eq!(xz.edge_count(), 0);
        let other = path_xyz();
        assert_eq!(
            induced(&g, &other.full()).unwrap_err(),
            GraphError::ForeignSubset
        );
    }

    #[test]
    fn link_star_examples() {
        let iso = GraphSpec::new()
            .vertex("v", INF)
            .vertex("w", INF)
            .validate()
            .unwrap();
        let (lk, st) = link_star(&iso, "v").unwrap();
        assert_eq!((lk.bits(), st.bits()), (0, 0b01));

        let tri = GraphSpec::new()
            .vertex("a", INF)
            .vertex("b", INF)
            .vertex("c", INF)
            .edge("a", "b", 2)
            .edge("b", "c", 2)
            .edge("a", "c", 2)
            .validate()
            .unwrap();
        let (lk, st) = link_star(&tri, "b").unwrap();
        assert_eq!((lk.bits(), st.bits()), (0b101, 0b111));

        let g = path_xyz();
        let (lk, st) = link_star(&g, "y").unwrap();
        assert_eq!((lk.bits(), st.bits()), (0b101, 0b111));
        assert!(matches!(
            link_star(&g, "w"),
            Err(GraphError::UnknownVertex(_))
        ));
    }

    #[test]
    fn classify_examples() {
        let empty = GraphSpec::new().validate().unwrap();
        let r = classify(&empty);
        assert!(r.is_complete && r.is_spherical && r.is_finite_group);

        let f2 = GraphSpec::new()
            .vertex("x", INF)
            .vertex("y", INF)
            .validate()
            .unwrap();
        let r = classify(&f2);
        assert!(!r.is_complete && !r.is_spherical && !r.is_finite_group);
        assert_eq!(r.n_infinite, 2);

        let affine = GraphSpec::new()
            .vertex("a", fin(2))
            .vertex("b", fin(2))
            .vertex("c", fin(2))
            .edge("a", "b", 3)
            .edge("b", "c", 3)
            .edge("a", "c", 3)
            .validate()
            .unwrap();
        let r = classify(&affine);
        assert!(r.is_complete && !r.is_spherical && !r.is_finite_group);

        let z2z = GraphSpec::new()
            .vertex("x", fin(2))
            .vertex("y", INF)
            .edge("x", "y", 2)
            .validate()
            .unwrap();
        let r = classify(&z2z);
        assert!(r.is_spherical && !r.is_finite_group);
    }

    #[test]
    fn bit_helpers() {
        assert_eq!(bits::iter(0b1011).collect::<Vec<_>>(), vec![0, 1, 3]);
        let mut subs: Vec<u64> = bits::submasks(0b101).collect();
        subs.sort();
        assert_eq!(subs, vec![0, 1, 4, 5]);
        assert_eq!(bits::submasks(0).collect::<Vec<_>>(), vec![0]);
        assert_eq!(bits::full(64), u64::MAX);
    }

    fn arb_graph() -> impl Strategy<Value = DyerGraph> {
        let order = prop_oneof![
            Just(fin(2)),
            Just(fin(2)),
            Just(fin(3)),
            Just(fin(4)),
            Just(INF)
        ];
        (
            prop::collection::vec(order, 0..6),
            prop::collection::vec(0u32..5, 15),
        )
            .prop_map(|(orders, raw_edges)| {
                let n = orders.len();
                let mut spec = GraphSpec::new();
                for (i, &o) in orders.iter().enumerate() {
                    spec = spec.vertex(&format!("v{i}"), o);
                }
                let mut k = 0;
                for i in 0..n {
                    for j in i + 1..n {
                        let code = raw_edges[k % raw_edges.len()];
                        k += 1;
                        let both2 = orders[i] == fin(2) && orders[j] == fin(2);
                        match code {
                            0 | 1 => {}
                            2 => spec = spec.edge(&format!("v{i}"), &format!("v{j}"), 2),
                            c if both2 => spec = spec.edge(&format!("v{i}"), &format!("v{j}"), c),
                            _ => spec = spec.edge(&format!("v{i}"), &format!("v{j}"), 2),
                        }
                    }
                }
                spec.validate().unwrap()
            })
    }

    proptest! {
        #[test]
        fn induced_is_hereditary_and_composes(g in arb_graph(), y_raw in any::<u64>(), x_raw in any::<u64>()) {
            let y = y_raw & g.full_mask();
            let x = x_raw & y;
            let gy = g.induced_by_mask(y);
            // Def. constraint survives restriction
            prop_assert!(gy.to_spec().validate().is_ok());
            // X as a subset of the induced graph's own vertex order
            let x_in_y = bits::iter(y).enumerate()
                .filter(|(_, v)| x >> v & 1 == 1)
                .fold(0u64, |m, (k, _)| m | 1 << k);
            let twice = gy.induced_by_mask(x_in_y);
            prop_assert!(twice.same_structure(&g.induced_by_mask(x)));
        }

        #[test]
        fn completeness_matches_edge_count(g in arb_graph()) {
            let n = g.len();
            prop_assert_eq!(classify(&g).is_complete, g.edge_count() == n * n.saturating_sub(1) / 2);
        }

        #[test]
        fn report_implications(g in arb_graph()) {
            let r = classify(&g);
            prop_assert!(!r.is_finite_group || r.is_spherical);
            prop_assert!(!r.is_spherical || r.is_complete);
            prop_assert_eq!(r.n_involutions + r.n_finite_higher + r.n_infinite, g.len());
        }
    }
}
