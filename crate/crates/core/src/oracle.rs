//! Brute-force ground truth: concrete group models with canonical forms, and
//! breadth-first censuses of their Cayley graphs.
//!
//! Supported families:
//! * graph products of cyclic groups (every edge label 2), with the usual
//!   syllable normal form;
//! * Coxeter groups of type A, B, D, I2 and the infinite dihedral group, as
//!   (signed) permutations;
//! * free and direct products of the above.
//!
//! Generator conventions for the permutation models (right multiplication by a
//! generator acts on positions):
//! * `A(n)`: permutations of `0..=n`; `s_i` swaps positions `i, i+1`.
//! * `B(n)`: signed permutations; `s_0` negates position 0, `s_i` swaps `i-1, i`.
//! * `D(n)`: even signed permutations; `s_0` maps positions `(0, 1)` to
//!   `(-w[1], -w[0])`, `s_i` swaps `i-1, i`.
//! * `I2(m)`: permutations of `Z/m`; `s: k -> -k`, `t: k -> 1 - k`.
//! * infinite dihedral: affine maps `k -> +-k + c` of `Z`; `s: k -> -k`,
//!   `t: k -> 1 - k`.

use std::sync::Arc;

use rustc_hash::FxHashSet;
use thiserror::Error;

use crate::coxeter::{self, CoxeterClass, IrreducibleCoxeterType};
use crate::dyergraph::{bits, DyerGraph, Order};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("unknown generator {0}")]
    UnknownGenerator(usize),
    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),
    #[error("invalid model: {0}")]
    InvalidModel(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("no oracle model: {reason}")]
pub struct Unsupported {
    pub reason: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PermutationKind {
    A(usize),
    B(usize),
    D(usize),
    I2(u32),
    InfiniteDihedral,
}

/// Graph product of cyclic groups on local vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphProductModel {
    orders: Vec<Order>,
    /// `commute[i]` = bitmask of vertices adjacent to `i`.
    commute: Vec<u64>,
}

impl GraphProductModel {
    pub fn new(orders: Vec<Order>, edges: &[(usize, usize)]) -> Result<Self, OracleError> {
        let n = orders.len();
        if n > 64 {
            return Err(OracleError::InvalidModel("more than 64 vertices".into()));
        }
        let mut commute = vec![0u64; n];
        for &(a, b) in edges {
            if a == b || a >= n || b >= n {
                return Err(OracleError::InvalidModel(format!("bad edge ({a}, {b})")));
            }
            commute[a] |= 1 << b;
            commute[b] |= 1 << a;
        }
        Ok(GraphProductModel { orders, commute })
    }

    fn commutes(&self, a: usize, b: usize) -> bool {
        self.commute[a] >> b & 1 == 1
    }

    /// Exponent representative: `0..n` for `Z/n`, any integer for `Z`.
    fn reduce(&self, v: usize, e: i64) -> i64 {
        match self.orders[v] {
            Order::Finite(n) => e.rem_euclid(i64::from(n)),
            Order::Infinite => e,
        }
    }

    /// Right-multiplies a reduced word by `v^e` and returns the canonical form.
    fn mul_syllable(&self, word: &[(usize, i64)], v: usize, e: i64) -> Vec<(usize, i64)> {
        let mut out = word.to_vec();
        let e = self.reduce(v, e);
        if e == 0 {
            return out;
        }
        {
            let mut merged = false;
            for k in (0..out.len()).rev() {
                let (w, a) = out[k];
                if w == v {
                    let sum = self.reduce(v, a + e);
                    if sum != 0 {
                        // same syllables in the same order: still canonical
                        out[k].1 = sum;
                        return out;
                    }
                    out.remove(k);
                    merged = true;
                    break;
                }
                if !self.commutes(w, v) {
                    break;
                }
            }
            if !merged {
                out.push((v, e));
            }
        }
        self.lex_normal_form(out)
    }

    /// Among all commutation-equivalent orderings of a reduced word, the one
    /// whose vertex sequence is lexicographically least.
    fn lex_normal_form(&self, mut rest: Vec<(usize, i64)>) -> Vec<(usize, i64)> {
        let mut out = Vec::with_capacity(rest.len());
        while !rest.is_empty() {
            let mut best: Option<usize> = None;
            for i in 0..rest.len() {
                let v = rest[i].0;
                let free = rest[..i]
                    .iter()
                    .all(|&(w, _)| w != v && self.commutes(w, v));
                if free && best.is_none_or(|b| v < rest[b].0) {
                    best = Some(i);
                }
            }
            out.push(rest.remove(best.expect("the first syllable is always available")));
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleGroup {
    CyclicGraphProduct(GraphProductModel),
    PermutationCoxeter(PermutationKind),
    FreeProduct(Vec<OracleGroup>),
    DirectProduct(Vec<OracleGroup>),
}

/// Canonical element of an [`OracleGroup`]; equal elements are identical.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GroupElement {
    Syllables(Vec<(usize, i64)>),
    /// Images of the points, as listed in the model conventions.
    Perm(Vec<i32>),
    Affine {
        sign: i8,
        shift: i64,
    },
    /// Alternating factors, adjacent factor indices distinct, no identities.
    /// Factors are shared, so extending a word does not copy its prefix.
    Free(Vec<(usize, Arc<GroupElement>)>),
    Tuple(Vec<Arc<GroupElement>>),
}

impl GroupElement {
    pub fn is_identity(&self) -> bool {
        match self {
            GroupElement::Syllables(w) => w.is_empty(),
            // A and I2 models move 0, 1, ...; B and D models move 1, 2, ...
            GroupElement::Perm(p) => {
                let identity_from = |start: i32| p.iter().zip(start..).all(|(&x, k)| x == k);
                identity_from(0) || identity_from(1)
            }
            GroupElement::Affine { sign, shift } => *sign == 1 && *shift == 0,
            GroupElement::Free(parts) => parts.is_empty(),
            GroupElement::Tuple(parts) => parts.iter().all(|p| p.is_identity()),
        }
    }
}

impl OracleGroup {
    pub fn cyclic(order: Order) -> Self {
        OracleGroup::CyclicGraphProduct(GraphProductModel {
            orders: vec![order],
            commute: vec![0],
        })
    }

    pub fn coxeter(kind: PermutationKind) -> Result<Self, OracleError> {
        let ok = match kind {
            PermutationKind::A(n) => n >= 1,
            PermutationKind::B(n) => n >= 2,
            PermutationKind::D(n) => n >= 2,
            PermutationKind::I2(m) => m >= 3,
            PermutationKind::InfiniteDihedral => true,
        };
        if !ok {
            return Err(OracleError::InvalidModel(format!("{kind:?}")));
        }
        Ok(OracleGroup::PermutationCoxeter(kind))
    }

    pub fn generator_count(&self) -> usize {
        match self {
            OracleGroup::CyclicGraphProduct(m) => m.orders.len(),
            OracleGroup::PermutationCoxeter(kind) => match *kind {
                PermutationKind::A(n) | PermutationKind::B(n) | PermutationKind::D(n) => n,
                PermutationKind::I2(_) | PermutationKind::InfiniteDihedral => 2,
            },
            OracleGroup::FreeProduct(fs) | OracleGroup::DirectProduct(fs) => {
                fs.iter().map(OracleGroup::generator_count).sum()
            }
        }
    }

    pub fn identity(&self) -> GroupElement {
        match self {
            OracleGroup::CyclicGraphProduct(_) => GroupElement::Syllables(Vec::new()),
            OracleGroup::PermutationCoxeter(kind) => match *kind {
                PermutationKind::A(n) => GroupElement::Perm((0..=n as i32).collect()),
                PermutationKind::B(n) | PermutationKind::D(n) => {
                    GroupElement::Perm((1..=n as i32).collect())
                }
                PermutationKind::I2(m) => GroupElement::Perm((0..m as i32).collect()),
                PermutationKind::InfiniteDihedral => GroupElement::Affine { sign: 1, shift: 0 },
            },
            OracleGroup::FreeProduct(_) => GroupElement::Free(Vec::new()),
            OracleGroup::DirectProduct(fs) => {
                GroupElement::Tuple(fs.iter().map(|f| Arc::new(f.identity())).collect())
            }
        }
    }

    /// Factor index and local generator index of a composite model's generator.
    fn locate(factors: &[OracleGroup], mut gen: usize) -> (usize, usize) {
        for (i, f) in factors.iter().enumerate() {
            let n = f.generator_count();
            if gen < n {
                return (i, gen);
            }
            gen -= n;
        }
        unreachable!("generator index checked by caller")
    }

    /// `element * gen^{+-1}`.
    pub fn mul_generator(
        &self,
        element: &GroupElement,
        gen: usize,
        inverse: bool,
    ) -> Result<GroupElement, OracleError> {
        if gen >= self.generator_count() {
            return Err(OracleError::UnknownGenerator(gen));
        }
        Ok(self.mul_gen_unchecked(element, gen, inverse))
    }

    fn mul_gen_unchecked(&self, element: &GroupElement, gen: usize, inverse: bool) -> GroupElement {
        match (self, element) {
            (OracleGroup::CyclicGraphProduct(m), GroupElement::Syllables(w)) => {
                GroupElement::Syllables(m.mul_syllable(w, gen, if inverse { -1 } else { 1 }))
            }
            (OracleGroup::PermutationCoxeter(kind), GroupElement::Perm(p)) => {
                GroupElement::Perm(apply_reflection(*kind, p, gen))
            }
            (OracleGroup::PermutationCoxeter(_), GroupElement::Affine { sign, shift }) => {
                // w o s: k -> -sign k + shift;  w o t: k -> -sign k + sign + shift
                let shift = if gen == 0 {
                    *shift
                } else {
                    shift + i64::from(*sign)
                };
                GroupElement::Affine { sign: -sign, shift }
            }
            (OracleGroup::FreeProduct(fs), GroupElement::Free(parts)) => {
                let (f, local) = Self::locate(fs, gen);
                let mut out = Vec::with_capacity(parts.len() + 1);
                match parts.split_last() {
                    Some(((last, e), head)) if *last == f => {
                        out.extend_from_slice(head);
                        let next = fs[f].mul_gen_unchecked(e, local, inverse);
                        if !next.is_identity() {
                            out.push((f, Arc::new(next)));
                        }
                    }
                    _ => {
                        out.extend_from_slice(parts);
                        let e = fs[f].mul_gen_unchecked(&fs[f].identity(), local, inverse);
                        out.push((f, Arc::new(e)));
                    }
                }
                GroupElement::Free(out)
            }
            (OracleGroup::DirectProduct(fs), GroupElement::Tuple(parts)) => {
                let (f, local) = Self::locate(fs, gen);
                let mut parts = parts.clone();
                parts[f] = Arc::new(fs[f].mul_gen_unchecked(&parts[f], local, inverse));
                GroupElement::Tuple(parts)
            }
            _ => panic!("element does not belong to this model"),
        }
    }

    /// Canonical form of the word `g_1^{e_1} g_2^{e_2} ...`.
    pub fn canonicalize(&self, word: &[(usize, i64)]) -> Result<GroupElement, OracleError> {
        let mut e = self.identity();
        for &(gen, exp) in word {
            for _ in 0..exp.unsigned_abs() {
                e = self.mul_generator(&e, gen, exp < 0)?;
            }
        }
        Ok(e)
    }

    /// Sphere sizes `a_0..=a_n` of the Cayley graph for all generators.
    pub fn bfs_census(&self, n: usize) -> CensusReport {
        self.bfs_census_bounded(n, usize::MAX)
    }

    /// Like [`bfs_census`](Self::bfs_census), but stops after the first radius
    /// at which more than `max_elements` elements have been seen. The report
    /// then covers fewer radii.
    pub fn bfs_census_bounded(&self, n: usize, max_elements: usize) -> CensusReport {
        let moves: Vec<(usize, bool)> = (0..self.generator_count())
            .flat_map(|g| {
                let both = !self.generator_is_involution(g);
                std::iter::once((g, false)).chain(both.then_some((g, true)))
            })
            .collect();
        // Cayley graphs with inverse-closed generators are undirected, so the
        // neighbours of layer k lie in layers k-1, k and k+1.
        let mut previous: FxHashSet<GroupElement> = FxHashSet::default();
        let mut current: FxHashSet<GroupElement> = FxHashSet::default();
        current.insert(self.identity());
        let mut spheres = vec![1u64];
        let mut total = 1usize;
        while spheres.len() <= n && total <= max_elements {
            let mut next = FxHashSet::default();
            for e in &current {
                for &(g, inverse) in &moves {
                    let f = self.mul_gen_unchecked(e, g, inverse);
                    if !previous.contains(&f) && !current.contains(&f) {
                        next.insert(f);
                    }
                }
            }
            if next.is_empty() {
                let max_length = spheres.len() - 1;
                spheres.resize(n + 1, 0);
                return CensusReport {
                    spheres,
                    order: Some(total as u64),
                    max_length: Some(max_length),
                };
            }
            total += next.len();
            spheres.push(next.len() as u64);
            previous = std::mem::replace(&mut current, next);
        }
        CensusReport {
            spheres,
            order: None,
            max_length: None,
        }
    }

    fn generator_is_involution(&self, gen: usize) -> bool {
        match self {
            OracleGroup::CyclicGraphProduct(m) => m.orders[gen] == Order::Finite(2),
            OracleGroup::PermutationCoxeter(_) => true,
            OracleGroup::FreeProduct(fs) | OracleGroup::DirectProduct(fs) => {
                let (f, local) = Self::locate(fs, gen);
                fs[f].generator_is_involution(local)
            }
        }
    }

    /// Full census of a finite group, or `None` past `max_elements`.
    pub fn exhaust(&self, max_elements: usize) -> Option<CensusReport> {
        let mut n = 8;
        loop {
            let r = self.bfs_census_bounded(n, max_elements);
            if let Some(len) = r.max_length {
                let mut r = r;
                r.spheres.truncate(len + 1);
                return Some(r);
            }
            if r.spheres.len() <= n {
                return None;
            }
            n *= 2;
        }
    }
}

fn apply_reflection(kind: PermutationKind, p: &[i32], gen: usize) -> Vec<i32> {
    let mut q = p.to_vec();
    match kind {
        PermutationKind::A(_) => q.swap(gen, gen + 1),
        PermutationKind::B(_) if gen == 0 => q[0] = -q[0],
        PermutationKind::D(_) if gen == 0 => {
            q[0] = -p[1];
            q[1] = -p[0];
        }
        PermutationKind::B(_) | PermutationKind::D(_) => q.swap(gen - 1, gen),
        PermutationKind::I2(m) => {
            let m = m as i32;
            for (k, slot) in q.iter_mut().enumerate() {
                let k = k as i32;
                let src = if gen == 0 { -k } else { 1 - k };
                *slot = p[src.rem_euclid(m) as usize];
            }
        }
        PermutationKind::InfiniteDihedral => unreachable!("affine model"),
    }
    q
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusReport {
    /// `spheres[k]` = number of elements of length `k`.
    pub spheres: Vec<u64>,
    /// Group order, when the search exhausted the group.
    pub order: Option<u64>,
    pub max_length: Option<usize>,
}

/// A model together with the root-graph vertex behind each model generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Oracle {
    pub group: OracleGroup,
    /// `generator_vertices[g]` = root-graph vertex of model generator `g`.
    pub generator_vertices: Vec<usize>,
}

impl Oracle {
    pub fn generator_of(&self, vertex: usize) -> Option<usize> {
        self.generator_vertices.iter().position(|&v| v == vertex)
    }

    /// Canonical form of a word over graph vertex names.
    pub fn canonicalize_names(
        &self,
        graph: &DyerGraph,
        word: &[(&str, i64)],
    ) -> Result<GroupElement, OracleError> {
        let mut w = Vec::with_capacity(word.len());
        for &(name, e) in word {
            let v = graph
                .index_of(name)
                .map_err(|_| OracleError::UnknownVertex(name.to_string()))?;
            let g = self
                .generator_of(v)
                .ok_or_else(|| OracleError::UnknownVertex(name.to_string()))?;
            w.push((g, e));
        }
        self.group.canonicalize(&w)
    }
}

/// Builds an oracle model when the graph decomposes into supported families.
pub fn build_oracle(graph: &DyerGraph) -> Result<Oracle, Unsupported> {
    let (group, generator_vertices) = build_mask(graph, graph.full_mask())?;
    Ok(Oracle {
        group,
        generator_vertices,
    })
}

fn components(mask: u64, adjacent: impl Fn(usize, usize) -> bool) -> Vec<u64> {
    let mut left = mask;
    let mut out = Vec::new();
    while left != 0 {
        let mut comp = 1u64 << left.trailing_zeros();
        let mut grew = true;
        while grew {
            grew = false;
            for v in bits::iter(left & !comp) {
                if bits::iter(comp).any(|u| adjacent(u, v)) {
                    comp |= 1 << v;
                    grew = true;
                }
            }
        }
        out.push(comp);
        left &= !comp;
    }
    out
}

fn build_mask(graph: &DyerGraph, mask: u64) -> Result<(OracleGroup, Vec<usize>), Unsupported> {
    let combine = |parts: Vec<u64>, free: bool| -> Result<(OracleGroup, Vec<usize>), Unsupported> {
        let mut groups = Vec::new();
        let mut gens = Vec::new();
        for p in parts {
            let (g, v) = build_mask(graph, p)?;
            groups.push(g);
            gens.extend(v);
        }
        let group = if free {
            OracleGroup::FreeProduct(groups)
        } else {
            OracleGroup::DirectProduct(groups)
        };
        Ok((group, gens))
    };

    let verts: Vec<usize> = bits::iter(mask).collect();
    if let [a, b] = verts[..] {
        if graph.label(a, b).is_none()
            && graph.order(a).is_involution()
            && graph.order(b).is_involution()
        {
            return Ok((
                OracleGroup::PermutationCoxeter(PermutationKind::InfiniteDihedral),
                verts,
            ));
        }
    }
    let connected = components(mask, |a, b| graph.label(a, b).is_some());
    if connected.len() > 1 {
        return combine(connected, true);
    }
    let non_commuting = components(mask, |a, b| graph.label(a, b) != Some(2));
    if non_commuting.len() > 1 {
        return combine(non_commuting, false);
    }

    let right_angled = verts.iter().all(|&a| {
        verts
            .iter()
            .all(|&b| graph.label(a, b).is_none_or(|m| m == 2))
    });
    if right_angled {
        let orders = verts.iter().map(|&v| graph.order(v)).collect();
        let mut edges = Vec::new();
        for (i, &a) in verts.iter().enumerate() {
            for (j, &b) in verts.iter().enumerate().skip(i + 1) {
                if graph.label(a, b).is_some() {
                    edges.push((i, j));
                }
            }
        }
        let model = GraphProductModel::new(orders, &edges).expect("valid edges");
        return Ok((OracleGroup::CyclicGraphProduct(model), verts));
    }

    if verts.iter().any(|&v| !graph.order(v).is_involution()) {
        return Err(Unsupported {
            reason: "mixed-order component that is neither a free nor a direct product".into(),
        });
    }
    match coxeter::classify_mask(graph, mask) {
        CoxeterClass::Finite(cs) if cs.len() == 1 => {
            let c = &cs[0];
            let kind = match c.kind {
                IrreducibleCoxeterType::A(n) => PermutationKind::A(n as usize),
                IrreducibleCoxeterType::B(n) => PermutationKind::B(n as usize),
                IrreducibleCoxeterType::D(n) => PermutationKind::D(n as usize),
                IrreducibleCoxeterType::I2(m) => PermutationKind::I2(m),
                other => {
                    return Err(Unsupported {
                        reason: format!("no permutation model for type {other}"),
                    })
                }
            };
            Ok((OracleGroup::PermutationCoxeter(kind), c.vertices.clone()))
        }
        _ => Err(Unsupported {
            reason: "infinite irreducible Coxeter component".into(),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dyergraph::GraphSpec;

    const INF: Order = Order::Infinite;
    fn fin(k: u32) -> Order {
        Order::Finite(k)
    }

    #[test]
    fn canonicalize_examples() {
        let z4 = OracleGroup::cyclic(fin(4));
        assert_eq!(z4.canonicalize(&[(0, 2), (0, 2)]).unwrap(), z4.identity());

        let model = GraphProductModel::new(vec![INF, INF], &[(0, 1)]).unwrap();
        let g = OracleGroup::CyclicGraphProduct(model);
        assert_eq!(
            g.canonicalize(&[(1, 1), (0, 1)]).unwrap(),
            GroupElement::Syllables(vec![(0, 1), (1, 1)])
        );

        let s3 = OracleGroup::coxeter(PermutationKind::A(2)).unwrap();
        assert_eq!(
            s3.canonicalize(&[(0, 1), (1, 1), (0, 1)]).unwrap(),
            s3.canonicalize(&[(1, 1), (0, 1), (1, 1)]).unwrap()
        );
        assert_eq!(
            z4.canonicalize(&[(3, 1)]),
            Err(OracleError::UnknownGenerator(3))
        );
    }

    #[test]
    fn census_examples() {
        let f2 = GraphProductModel::new(vec![INF, INF], &[]).unwrap();
        let f2 = OracleGroup::CyclicGraphProduct(f2);
        assert_eq!(f2.bfs_census(3).spheres, vec![1, 4, 12, 36]);

        let z5 = OracleGroup::cyclic(fin(5));
        let r = z5.bfs_census(3);
        assert_eq!(r.spheres, vec![1, 2, 2, 0]);
        assert_eq!((r.order, r.max_length), (Some(5), Some(2)));

        let s3 = OracleGroup::coxeter(PermutationKind::A(2)).unwrap();
        assert_eq!(s3.bfs_census(4).spheres, vec![1, 2, 2, 1, 0]);
    }

    #[test]
    fn permutation_models_have_classical_orders() {
        let cases = [
            (PermutationKind::A(3), 24),
            (PermutationKind::B(2), 8),
            (PermutationKind::B(3), 48),
            (PermutationKind::D(4), 192),
            (PermutationKind::I2(5), 10),
        ];
        for (kind, order) in cases {
            let g = OracleGroup::coxeter(kind).unwrap();
            assert_eq!(g.exhaust(1_000_000).unwrap().order, Some(order), "{kind:?}");
        }
        let d = OracleGroup::coxeter(PermutationKind::InfiniteDihedral).unwrap();
        assert_eq!(d.bfs_census(4).spheres, vec![1, 2, 2, 2, 2]);
        assert!(d.exhaust(1000).is_none());
        assert!(OracleGroup::coxeter(PermutationKind::I2(2)).is_err());
    }

    #[test]
    fn build_examples() {
        let g = GraphSpec::new()
            .vertex("x", fin(2))
            .vertex("y", fin(2))
            .vertex("z", fin(3))
            .edge("x", "y", 3)
            .validate()
            .unwrap();
        let o = build_oracle(&g).unwrap();
        let OracleGroup::FreeProduct(fs) = &o.group else {
            panic!("{:?}", o.group)
        };
        assert_eq!(
            fs[0],
            OracleGroup::PermutationCoxeter(PermutationKind::A(2))
        );
        assert!(matches!(fs[1], OracleGroup::CyclicGraphProduct(_)));

        let g = GraphSpec::new()
            .vertex("x", fin(2))
            .vertex("y", INF)
            .edge("x", "y", 2)
            .validate()
            .unwrap();
        let o = build_oracle(&g).unwrap();
        assert_eq!(
            o.group,
            OracleGroup::DirectProduct(vec![OracleGroup::cyclic(fin(2)), OracleGroup::cyclic(INF)])
        );
        assert_eq!(o.group.bfs_census(3).spheres, vec![1, 3, 4, 4]);

        // the 4-vertex path is right-angled but splits neither way
        let g = GraphSpec::new()
            .vertex("a", INF)
            .vertex("b", fin(3))
            .vertex("c", INF)
            .vertex("d", fin(2))
            .edge("a", "b", 2)
            .edge("b", "c", 2)
            .edge("c", "d", 2)
            .validate()
            .unwrap();
        assert!(matches!(
            build_oracle(&g).unwrap().group,
            OracleGroup::CyclicGraphProduct(_)
        ));

        let g = GraphSpec::new()
            .vertex("x", fin(2))
            .vertex("y", fin(2))
            .vertex("z", fin(3))
            .edge("x", "y", 3)
            .edge("y", "z", 2)
            .validate()
            .unwrap();
        assert!(build_oracle(&g).is_err());

        // A2 x Z/3 splits as a direct product
        let g = GraphSpec::new()
            .vertex("x", fin(2))
            .vertex("y", fin(2))
            .vertex("z", fin(3))
            .edge("x", "y", 3)
            .edge("y", "z", 2)
            .edge("x", "z", 2)
            .validate()
            .unwrap();
        let o = build_oracle(&g).unwrap();
        assert!(matches!(o.group, OracleGroup::DirectProduct(_)));
        assert_eq!(o.group.exhaust(1000).unwrap().spheres, vec![1, 4, 6, 5, 2]);
    }

    #[test]
    fn names_map_to_generators() {
        let g = GraphSpec::new()
            .vertex("a", fin(2))
            .vertex("b", fin(2))
            .vertex("c", fin(2))
            .edge("a", "b", 3)
            .edge("b", "c", 4)
            .edge("a", "c", 2)
            .validate()
            .unwrap();
        let o = build_oracle(&g).unwrap();
        assert_eq!(
            o.group,
            OracleGroup::PermutationCoxeter(PermutationKind::B(3))
        );
        // (bc)^4 = 1 and (ab)^3 = 1 hold under the vertex-to-generator map
        let bc4 = o
            .canonicalize_names(&g, &[("b", 1), ("c", 1)].repeat(4))
            .unwrap();
        let ab3 = o
            .canonicalize_names(&g, &[("a", 1), ("b", 1)].repeat(3))
            .unwrap();
        assert_eq!(bc4, o.group.identity());
        assert_eq!(ab3, o.group.identity());
        let ab = o.canonicalize_names(&g, &[("a", 1), ("b", 1)]).unwrap();
        assert_ne!(ab, o.group.identity());
    }
}
