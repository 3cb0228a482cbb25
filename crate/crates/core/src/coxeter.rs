//! Recognition of finite Coxeter groups from the order-2 part of a Dyer graph.
//!
//! Diagram convention on order-2 vertices: a Dyer edge labeled 2 means the two
//! generators commute (no diagram edge), a Dyer edge labeled `m >= 3` becomes a
//! diagram edge labeled `m`, and a missing Dyer edge becomes a diagram edge
//! labeled infinity.
//!
//! Recognition is by shape against the classification of connected diagrams
//! (A, B, D, E, F, H, I2), so everything stays in integer arithmetic.

use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::dyergraph::{bits, DyerGraph};
use crate::ratfun::Polynomial;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoxeterError {
    #[error("vertex {0:?} does not have order 2")]
    NotAnInvolution(String),
    #[error("the Coxeter group is infinite")]
    Infinite,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DiagramLabel {
    Finite(u32),
    Infinite,
}

/// Coxeter diagram on a set of order-2 vertices of a host graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoxeterDiagram {
    /// Host-graph vertex indices, increasing.
    vertices: Vec<usize>,
    names: Vec<String>,
    /// Row-major over local indices; `None` = commuting pair (no edge).
    labels: Vec<Option<DiagramLabel>>,
}

impl CoxeterDiagram {
    /// Diagram with local vertices `0..n` and the given edges `(i, j, label)`;
    /// unlisted pairs commute.
    pub fn from_edges(n: usize, edges: &[(usize, usize, DiagramLabel)]) -> Self {
        let mut labels = vec![None; n * n];
        for &(i, j, l) in edges {
            assert!(i != j && i < n && j < n);
            if let DiagramLabel::Finite(m) = l {
                assert!(m >= 3, "diagram labels are >= 3");
            }
            labels[i * n + j] = Some(l);
            labels[j * n + i] = Some(l);
        }
        CoxeterDiagram {
            vertices: (0..n).collect(),
            names: (0..n).map(|i| format!("s{i}")).collect(),
            labels,
        }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn label(&self, i: usize, j: usize) -> Option<DiagramLabel> {
        self.labels[i * self.len() + j]
    }

    fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(move |&j| self.label(i, j).is_some())
    }
}

/// Diagram of the whole graph; every vertex must have order 2.
pub fn to_diagram(graph: &DyerGraph) -> Result<CoxeterDiagram, CoxeterError> {
    diagram_of_mask(graph, graph.full_mask())
}

/// Diagram of the full subgraph on `mask`; every vertex in it must have order 2.
pub fn diagram_of_mask(graph: &DyerGraph, mask: u64) -> Result<CoxeterDiagram, CoxeterError> {
    let vertices: Vec<usize> = bits::iter(mask).collect();
    if let Some(&bad) = vertices.iter().find(|&&v| !graph.order(v).is_involution()) {
        return Err(CoxeterError::NotAnInvolution(graph.name(bad).to_string()));
    }
    let n = vertices.len();
    let mut labels = vec![None; n * n];
    for (a, &i) in vertices.iter().enumerate() {
        for (b, &j) in vertices.iter().enumerate() {
            if a == b {
                continue;
            }
            labels[a * n + b] = match graph.label(i, j) {
                Some(2) => None,
                Some(m) => Some(DiagramLabel::Finite(m)),
                None => Some(DiagramLabel::Infinite),
            };
        }
    }
    Ok(CoxeterDiagram {
        names: vertices
            .iter()
            .map(|&v| graph.name(v).to_string())
            .collect(),
        vertices,
        labels,
    })
}

/// Irreducible finite Coxeter type. Rank-1 and rank-2 coincidences are tagged
/// canonically: `A1`, `A2` (not `I2(3)`), and `I2(m)` for every other `m`
/// (so `B2` is reported as `I2(4)`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IrreducibleCoxeterType {
    A(u32),
    B(u32),
    D(u32),
    E6,
    E7,
    E8,
    F4,
    H3,
    H4,
    I2(u32),
}

impl IrreducibleCoxeterType {
    pub fn rank(self) -> u32 {
        use IrreducibleCoxeterType::*;
        match self {
            A(n) | B(n) | D(n) => n,
            E6 => 6,
            E7 => 7,
            E8 => 8,
            F4 | H4 => 4,
            H3 => 3,
            I2(_) => 2,
        }
    }

    pub fn exponents(self) -> Vec<u32> {
        use IrreducibleCoxeterType::*;
        match self {
            A(n) => (1..=n).collect(),
            B(n) => (0..n).map(|i| 2 * i + 1).collect(),
            D(n) => {
                let mut e: Vec<u32> = (0..n - 1).map(|i| 2 * i + 1).collect();
                e.push(n - 1);
                e.sort_unstable();
                e
            }
            E6 => vec![1, 4, 5, 7, 8, 11],
            E7 => vec![1, 5, 7, 9, 11, 13, 17],
            E8 => vec![1, 7, 11, 13, 17, 19, 23, 29],
            F4 => vec![1, 5, 7, 11],
            H3 => vec![1, 5, 9],
            H4 => vec![1, 11, 19, 29],
            I2(m) => vec![1, m - 1],
        }
    }

    /// `prod (m_i + 1)`
    pub fn order(self) -> BigInt {
        self.exponents()
            .into_iter()
            .map(|m| BigInt::from(m + 1))
            .product()
    }

    /// Length of the longest element: the sum of the exponents.
    pub fn longest_length(self) -> u64 {
        self.exponents().into_iter().map(u64::from).sum()
    }
}

impl fmt::Display for IrreducibleCoxeterType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use IrreducibleCoxeterType::*;
        match self {
            A(n) => write!(f, "A{n}"),
            B(n) => write!(f, "B{n}"),
            D(n) => write!(f, "D{n}"),
            I2(m) => write!(f, "I2({m})"),
            other => write!(f, "{other:?}"),
        }
    }
}

/// One irreducible component of a finite diagram.
///
/// `vertices` are host-graph indices listed in the standard generator order of
/// the type: A along the path; B starting at the end of the 4-edge; D with the
/// two short-arm leaves first, then the branch vertex, then the long arm;
/// F4 along the path; H starting at the end of the 5-edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub kind: IrreducibleCoxeterType,
    pub vertices: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoxeterClass {
    /// Components ordered by their smallest host vertex.
    Finite(Vec<Component>),
    Infinite,
}

impl CoxeterClass {
    pub fn is_finite(&self) -> bool {
        matches!(self, CoxeterClass::Finite(_))
    }

    pub fn components(&self) -> Option<&[Component]> {
        match self {
            CoxeterClass::Finite(c) => Some(c),
            CoxeterClass::Infinite => None,
        }
    }

    /// Sorted component types, for comparisons that ignore vertex naming.
    pub fn type_multiset(&self) -> Option<Vec<IrreducibleCoxeterType>> {
        self.components().map(|cs| {
            let mut t: Vec<_> = cs.iter().map(|c| c.kind).collect();
            t.sort();
            t
        })
    }

    pub fn exponents(&self) -> Result<Vec<u32>, CoxeterError> {
        let cs = self.components().ok_or(CoxeterError::Infinite)?;
        Ok(cs.iter().flat_map(|c| c.kind.exponents()).collect())
    }
}

impl fmt::Display for CoxeterClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoxeterClass::Infinite => f.write_str("infinite"),
            CoxeterClass::Finite(cs) if cs.is_empty() => f.write_str("trivial"),
            CoxeterClass::Finite(cs) => {
                let parts: Vec<String> = cs.iter().map(|c| c.kind.to_string()).collect();
                f.write_str(&parts.join(" x "))
            }
        }
    }
}

/// Classification of the order-2 vertices in `mask` (other vertices ignored).
pub fn classify_mask(graph: &DyerGraph, mask: u64) -> CoxeterClass {
    let diagram = diagram_of_mask(graph, mask & graph.v2_mask())
        .expect("mask restricted to order-2 vertices");
    classify_finite(&diagram)
}

pub fn classify_finite(diagram: &CoxeterDiagram) -> CoxeterClass {
    let n = diagram.len();
    let mut seen = vec![false; n];
    let mut components = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut k = 0;
        while k < comp.len() {
            let v = comp[k];
            k += 1;
            for w in diagram.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                }
            }
        }
        comp.sort_unstable();
        match classify_component(diagram, &comp) {
            Some((kind, local)) => components.push(Component {
                kind,
                vertices: local.into_iter().map(|i| diagram.vertices[i]).collect(),
            }),
            None => return CoxeterClass::Infinite,
        }
    }
    CoxeterClass::Finite(components)
}

fn finite_label(diagram: &CoxeterDiagram, i: usize, j: usize) -> Option<u32> {
    match diagram.label(i, j) {
        Some(DiagramLabel::Finite(m)) => Some(m),
        _ => None,
    }
}

/// Type and standard vertex order of a connected component (local indices),
/// or `None` when the component is infinite.
fn classify_component(
    diagram: &CoxeterDiagram,
    comp: &[usize],
) -> Option<(IrreducibleCoxeterType, Vec<usize>)> {
    use IrreducibleCoxeterType::*;
    let k = comp.len();
    let mut edge_count = 0;
    for (a, &i) in comp.iter().enumerate() {
        for &j in &comp[a + 1..] {
            match diagram.label(i, j) {
                None => {}
                Some(DiagramLabel::Infinite) => return None,
                Some(DiagramLabel::Finite(_)) => edge_count += 1,
            }
        }
    }
    // connected with k - 1 edges means a tree
    if edge_count != k - 1 {
        return None;
    }
    match k {
        1 => return Some((A(1), comp.to_vec())),
        2 => {
            let m = finite_label(diagram, comp[0], comp[1])?;
            let kind = if m == 3 { A(2) } else { I2(m) };
            return Some((kind, comp.to_vec()));
        }
        _ => {}
    }

    let degree = |v: usize| diagram.neighbors(v).count();
    if comp.iter().any(|&v| degree(v) > 3) {
        return None;
    }
    let branch: Vec<usize> = comp.iter().copied().filter(|&v| degree(v) == 3).collect();
    let all_simple = comp.iter().enumerate().all(|(a, &i)| {
        comp[a + 1..]
            .iter()
            .all(|&j| finite_label(diagram, i, j).is_none_or(|m| m == 3))
    });

    match branch[..] {
        [] => classify_path(diagram, comp),
        [center] if all_simple => {
            let mut arms: Vec<Vec<usize>> = diagram
                .neighbors(center)
                .map(|first| walk_arm(diagram, center, first))
                .collect();
            arms.sort_by_key(|a| (a.len(), a[0]));
            let lens: Vec<usize> = arms.iter().map(Vec::len).collect();
            let kind = match lens[..] {
                [1, 1, c] => D(c as u32 + 3),
                [1, 2, 2] => E6,
                [1, 2, 3] => E7,
                [1, 2, 4] => E8,
                _ => return None,
            };
            let order = match kind {
                D(_) => {
                    let mut o = vec![arms[0][0], arms[1][0], center];
                    o.extend(&arms[2]);
                    o
                }
                _ => {
                    // short arm, center, middle arm, long arm
                    let mut o = arms[0].clone();
                    o.push(center);
                    o.extend(&arms[1]);
                    o.extend(&arms[2]);
                    o
                }
            };
            Some((kind, order))
        }
        _ => None,
    }
}

/// Vertices along an arm starting at `first`, moving away from `center`.
fn walk_arm(diagram: &CoxeterDiagram, center: usize, first: usize) -> Vec<usize> {
    let mut arm = vec![first];
    let (mut prev, mut cur) = (center, first);
    while let Some(next) = diagram.neighbors(cur).find(|&w| w != prev) {
        arm.push(next);
        prev = cur;
        cur = next;
    }
    arm
}

fn classify_path(
    diagram: &CoxeterDiagram,
    comp: &[usize],
) -> Option<(IrreducibleCoxeterType, Vec<usize>)> {
    use IrreducibleCoxeterType::*;
    let k = comp.len();
    let start = *comp
        .iter()
        .find(|&&v| diagram.neighbors(v).count() == 1)
        .expect("a path has an end");
    let mut path = vec![start];
    let (mut prev, mut cur) = (usize::MAX, start);
    while let Some(next) = diagram.neighbors(cur).find(|&w| w != prev) {
        path.push(next);
        prev = cur;
        cur = next;
    }
    debug_assert_eq!(path.len(), k);
    let labels: Vec<u32> = path
        .windows(2)
        .map(|w| finite_label(diagram, w[0], w[1]).expect("tree edges are finite"))
        .collect();
    let big: Vec<usize> = (0..labels.len()).filter(|&i| labels[i] > 3).collect();
    match big[..] {
        [] => Some((A(k as u32), path)),
        [pos] => {
            let at_end = pos == 0 || pos == k - 2;
            if pos == k - 2 && pos != 0 {
                path.reverse();
            }
            let kind = match (labels[pos], k, at_end) {
                (4, _, true) => B(k as u32),
                (4, 4, false) => F4,
                (5, 3, true) => H3,
                (5, 4, true) => H4,
                _ => return None,
            };
            Some((kind, path))
        }
        _ => None,
    }
}

/// `prod_i (1 + t + ... + t^{m_i})` over all exponents of a finite diagram.
pub fn solomon_growth(diagram: &CoxeterDiagram) -> Result<Polynomial, CoxeterError> {
    solomon_from_class(&classify_finite(diagram))
}

pub fn solomon_from_class(class: &CoxeterClass) -> Result<Polynomial, CoxeterError> {
    Ok(class
        .exponents()?
        .into_iter()
        .fold(Polynomial::one(), |acc, m| {
            &acc * &Polynomial::geometric(m as usize)
        }))
}

/// Length of the longest element (sum of all exponents).
pub fn longest_length(diagram: &CoxeterDiagram) -> Result<u64, CoxeterError> {
    longest_length_of_class(&classify_finite(diagram))
}

pub fn longest_length_of_class(class: &CoxeterClass) -> Result<u64, CoxeterError> {
    Ok(class.exponents()?.into_iter().map(u64::from).sum())
}
