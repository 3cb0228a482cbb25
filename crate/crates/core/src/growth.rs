//! Growth series of Dyer groups with respect to the standard generators.
//!
//! Three routes are available and are expected to agree exactly:
//!
//! * **subset recursion**: for a non-spherical graph on `V`,
//!   `(-1)^{|V|+1} / G_V = sum_{Y proper subset of V} (-1)^{|Y|} / G_Y`;
//! * **amalgam recursion**: if some vertex `v` has `st(v) != V`, the group is an
//!   amalgam of `D_{V-v}` and `D_{st(v)}` over `D_{lk(v)}`, and
//!   `1/G_V = 1/G_{V-v} + 1/G_{st(v)} - 1/G_{lk(v)}`;
//! * **graph-product formula** (all labels 2 only): `1/G = sum over cliques of
//!   prod (1/G_x - 1)`.
//!
//! Spherical graphs (complete, with a finite Coxeter part) are leaves for the
//! first two: the group is `D_2 x D_p x Z^l` and its series is a product.
//!
//! Parabolic series are cached in a [`MemoTable`] keyed by the vertex bitmask
//! of the root graph. Word length in a standard parabolic subgroup agrees with
//! word length in the whole group, so a cached entry is reusable anywhere.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::coxeter::{self, CoxeterClass, CoxeterError};
use crate::dyergraph::{bits, classify_mask, DyerGraph, GraphError, Order, VertexSubset};
use crate::ratfun::{Polynomial, RatFunError, RationalFunction};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GrowthError {
    #[error("the Dyer group is not of spherical type")]
    NonSpherical,
    #[error("edge {a:?}-{b:?} has label {label}; the graph-product formula needs all labels 2")]
    NotRightAngled { a: String, b: String, label: u32 },
    #[error(
        "strategies disagree: subset recursion gives {subset}, amalgam recursion gives {amalgam}"
    )]
    CrossCheckMismatch {
        subset: RationalFunction,
        amalgam: RationalFunction,
    },
    #[error(transparent)]
    Coxeter(#[from] CoxeterError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    RatFun(#[from] RatFunError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Strategy {
    Auto,
    Subset,
    Amalgam,
    CrossCheck,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Spherical,
    Subset,
    Amalgam,
    GraphProduct,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Spherical => "spherical",
            Method::Subset => "subset",
            Method::Amalgam => "amalgam",
            Method::GraphProduct => "graph_product",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrowthResult {
    pub series: RationalFunction,
    pub method: Method,
    /// Number of parabolic subgroups whose series was computed.
    pub subsets_evaluated: usize,
}

/// Growth series of standard parabolic subgroups, keyed by vertex bitmask.
#[derive(Debug, Clone)]
pub struct MemoTable {
    graph_id: u64,
    entries: HashMap<u64, RationalFunction>,
}

impl MemoTable {
    pub fn new(graph: &DyerGraph) -> Self {
        MemoTable {
            graph_id: graph.id(),
            entries: HashMap::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, subset: &VertexSubset) -> Option<&RationalFunction> {
        self.entries.get(&subset.bits())
    }

    fn check(&self, graph: &DyerGraph) -> Result<(), GrowthError> {
        if self.graph_id != graph.id() {
            return Err(GraphError::ForeignSubset.into());
        }
        Ok(())
    }
}

/// Growth series of `Z/n` (or `Z`) with respect to a single generator.
pub fn cyclic_growth(order: Order) -> RationalFunction {
    match order {
        Order::Finite(n) => {
            let r = (n / 2) as usize;
            let mut c = vec![2i64; r + 1];
            c[0] = 1;
            if n % 2 == 0 {
                c[r] = 1;
            }
            RationalFunction::from_poly(Polynomial::from_i64s(&c))
        }
        Order::Infinite => infinite_cyclic_growth(),
    }
}

fn infinite_cyclic_growth() -> RationalFunction {
    RationalFunction::new(
        Polynomial::from_i64s(&[1, 1]),
        Polynomial::from_i64s(&[1, -1]),
    )
    .expect("nonzero denominator")
}

/// `G_{D_2} * prod_{V_p} G_{Z/f(x)} * ((1+t)/(1-t))^l` for a spherical mask.
fn spherical_mask(graph: &DyerGraph, mask: u64) -> Result<RationalFunction, GrowthError> {
    let report = classify_mask(graph, mask);
    if !report.is_spherical {
        return Err(GrowthError::NonSpherical);
    }
    let coxeter_part = coxeter::solomon_from_class(&report.coxeter)
        .expect("spherical graphs have a finite Coxeter part");
    let mut series = RationalFunction::from_poly(coxeter_part);
    for v in bits::iter(mask & graph.vp_mask()) {
        series = &series * &cyclic_growth(graph.order(v));
    }
    let l = (mask & graph.vinf_mask()).count_ones();
    Ok(&series * &infinite_cyclic_growth().pow(l))
}

/// Product formula; fails with [`GrowthError::NonSpherical`] otherwise.
pub fn spherical_growth(graph: &DyerGraph) -> Result<RationalFunction, GrowthError> {
    spherical_mask(graph, graph.full_mask())
}

/// `sum_{Y proper subset of mask} (-1)^{|Y|} / G_Y`, using `series` for each `G_Y`.
fn alternating_inverse_sum(
    mask: u64,
    mut series: impl FnMut(u64) -> Result<RationalFunction, GrowthError>,
) -> Result<RationalFunction, GrowthError> {
    let mut sum = RationalFunction::zero();
    for y in bits::submasks(mask).filter(|&y| y != mask) {
        let term = series(y)?.invert()?;
        sum = if bits::parity_sign(y) > 0 {
            &sum + &term
        } else {
            &sum - &term
        };
    }
    Ok(sum)
}

/// Solves `(-1)^{|mask|+1} / G = sum` for `G`.
fn solve_alternating(mask: u64, sum: RationalFunction) -> Result<RationalFunction, GrowthError> {
    let inv = if bits::parity_sign(mask) < 0 {
        sum
    } else {
        -sum
    };
    Ok(inv.invert()?)
}

struct SubsetRecursion<'a> {
    graph: &'a DyerGraph,
    memo: &'a mut MemoTable,
}

impl SubsetRecursion<'_> {
    fn series(&mut self, mask: u64) -> Result<RationalFunction, GrowthError> {
        if let Some(g) = self.memo.entries.get(&mask) {
            return Ok(g.clone());
        }
        let g = if classify_mask(self.graph, mask).is_spherical {
            spherical_mask(self.graph, mask)?
        } else {
            let sum = alternating_inverse_sum(mask, |y| self.series(y))?;
            solve_alternating(mask, sum)?
        };
        self.memo.entries.insert(mask, g.clone());
        Ok(g)
    }
}

struct AmalgamRecursion<'a> {
    graph: &'a DyerGraph,
    memo: &'a mut MemoTable,
}

impl AmalgamRecursion<'_> {
    fn series(&mut self, mask: u64) -> Result<RationalFunction, GrowthError> {
        if let Some(g) = self.memo.entries.get(&mask) {
            return Ok(g.clone());
        }
        let g = match self.split_vertex(mask) {
            Some(v) => {
                let (lk, st) = self.graph.link_star_in(v, mask);
                let inv = &(&self.series(mask & !(1 << v))?.invert()?
                    + &self.series(st)?.invert()?)
                    - &self.series(lk)?.invert()?;
                inv.invert()?
            }
            None => self.complete(mask)?,
        };
        self.memo.entries.insert(mask, g.clone());
        Ok(g)
    }

    /// First vertex in declaration order whose star misses part of `mask`.
    fn split_vertex(&self, mask: u64) -> Option<usize> {
        bits::iter(mask).find(|&v| self.graph.link_star_in(v, mask).1 != mask)
    }

    /// Complete graph: `D = D_2 x D_p x Z^l`.
    fn complete(&mut self, mask: u64) -> Result<RationalFunction, GrowthError> {
        let v2 = mask & self.graph.v2_mask();
        if v2 != mask {
            let mut series = self.series(v2)?;
            for v in bits::iter(mask & self.graph.vp_mask()) {
                series = &series * &cyclic_growth(self.graph.order(v));
            }
            let l = (mask & self.graph.vinf_mask()).count_ones();
            return Ok(&series * &infinite_cyclic_growth().pow(l));
        }
        match coxeter::classify_mask(self.graph, v2) {
            class @ CoxeterClass::Finite(_) => Ok(RationalFunction::from_poly(
                coxeter::solomon_from_class(&class)?,
            )),
            // infinite Coxeter group: its own alternating recursion
            CoxeterClass::Infinite => {
                let sum = alternating_inverse_sum(mask, |y| self.series(y))?;
                solve_alternating(mask, sum)
            }
        }
    }
}

/// Growth series via the alternating sum over proper parabolic subgroups.
pub fn subset_recursion_growth(
    graph: &DyerGraph,
    memo: &mut MemoTable,
) -> Result<RationalFunction, GrowthError> {
    subset_recursion_growth_of(graph, &graph.full(), memo)
}

pub fn subset_recursion_growth_of(
    graph: &DyerGraph,
    subset: &VertexSubset,
    memo: &mut MemoTable,
) -> Result<RationalFunction, GrowthError> {
    memo.check(graph)?;
    let mask = graph.mask_of(subset)?;
    SubsetRecursion { graph, memo }.series(mask)
}

/// Growth series via repeated amalgam splitting along a vertex star.
pub fn amalgam_growth(
    graph: &DyerGraph,
    memo: &mut MemoTable,
) -> Result<RationalFunction, GrowthError> {
    amalgam_growth_of(graph, &graph.full(), memo)
}

pub fn amalgam_growth_of(
    graph: &DyerGraph,
    subset: &VertexSubset,
    memo: &mut MemoTable,
) -> Result<RationalFunction, GrowthError> {
    memo.check(graph)?;
    let mask = graph.mask_of(subset)?;
    AmalgamRecursion { graph, memo }.series(mask)
}

/// Growth series of the standard parabolic subgroup on `subset`.
pub fn parabolic_growth(
    graph: &DyerGraph,
    subset: &VertexSubset,
    memo: &mut MemoTable,
) -> Result<RationalFunction, GrowthError> {
    amalgam_growth_of(graph, subset, memo)
}

pub fn growth(graph: &DyerGraph, strategy: Strategy) -> Result<GrowthResult, GrowthError> {
    let spherical = classify_mask(graph, graph.full_mask()).is_spherical;
    let tag = |m: Method| if spherical { Method::Spherical } else { m };
    match strategy {
        Strategy::Auto | Strategy::Amalgam => {
            let mut memo = MemoTable::new(graph);
            let series = amalgam_growth(graph, &mut memo)?;
            Ok(GrowthResult {
                series,
                method: tag(Method::Amalgam),
                subsets_evaluated: memo.len(),
            })
        }
        Strategy::Subset => {
            let mut memo = MemoTable::new(graph);
            let series = subset_recursion_growth(graph, &mut memo)?;
            Ok(GrowthResult {
                series,
                method: tag(Method::Subset),
                subsets_evaluated: memo.len(),
            })
        }
        Strategy::CrossCheck => {
            // separate tables so neither route can reuse the other's results
            let mut subset_memo = MemoTable::new(graph);
            let mut amalgam_memo = MemoTable::new(graph);
            let subset = subset_recursion_growth(graph, &mut subset_memo)?;
            let amalgam = amalgam_growth(graph, &mut amalgam_memo)?;
            if subset != amalgam {
                return Err(GrowthError::CrossCheckMismatch { subset, amalgam });
            }
            Ok(GrowthResult {
                series: amalgam,
                method: tag(Method::Amalgam),
                subsets_evaluated: subset_memo.len() + amalgam_memo.len(),
            })
        }
    }
}

/// Bitmasks of all complete subgraphs inside `candidates`, each extending `clique`.
fn cliques(graph: &DyerGraph, clique: u64, candidates: u64, out: &mut Vec<u64>) {
    out.push(clique);
    for v in bits::iter(candidates) {
        let higher = candidates & !((1u64 << v) | ((1u64 << v) - 1));
        cliques(graph, clique | 1 << v, higher & graph.neighbors(v), out);
    }
}

/// Growth series of a graph product of cyclic groups from the clique formula.
pub fn graph_product_check(graph: &DyerGraph) -> Result<RationalFunction, GrowthError> {
    if let Some((a, b, label)) = graph.edges().find(|&(_, _, m)| m != 2) {
        return Err(GrowthError::NotRightAngled {
            a: graph.name(a).to_string(),
            b: graph.name(b).to_string(),
            label,
        });
    }
    let vertex_terms: Vec<RationalFunction> = (0..graph.len())
        .map(|v| {
            let inv = cyclic_growth(graph.order(v)).invert()?;
            Ok(&inv - &RationalFunction::one())
        })
        .collect::<Result<_, RatFunError>>()?;
    let mut all = Vec::new();
    cliques(graph, 0, graph.full_mask(), &mut all);
    let inv = all
        .into_iter()
        .fold(RationalFunction::zero(), |acc, clique| {
            let term =
                bits::iter(clique).fold(RationalFunction::one(), |p, v| &p * &vertex_terms[v]);
            &acc + &term
        });
    Ok(inv.invert()?)
}

/// Growth series of `B_empty` for a spherical graph:
/// `t^m * prod_{V_p} P_x(t) * 2^l t^l / (1-t)^l`, with `m` the longest length in `D_2`.
pub fn pd_series(graph: &DyerGraph) -> Result<RationalFunction, GrowthError> {
    let report = classify_mask(graph, graph.full_mask());
    if !report.is_spherical {
        return Err(GrowthError::NonSpherical);
    }
    let m = coxeter::longest_length_of_class(&report.coxeter)? as usize;
    let mut numerator = Polynomial::monomial(BigInt::from(1), m);
    for v in bits::iter(graph.vp_mask()) {
        let Order::Finite(f) = graph.order(v) else {
            unreachable!("V_p vertices have finite order")
        };
        // f = 2r: 2t + ... + 2t^{r-1} + t^r;  f = 2r+1: 2t + ... + 2t^r
        let r = (f / 2) as usize;
        let mut c = vec![2i64; r + 1];
        c[0] = 0;
        if f % 2 == 0 {
            c[r] = 1;
        }
        numerator = &numerator * &Polynomial::from_i64s(&c);
    }
    let l = graph.vinf_mask().count_ones();
    numerator = &numerator * &Polynomial::monomial(BigInt::from(2).pow(l), l as usize);
    let denominator = Polynomial::from_i64s(&[1, -1]).pow(l);
    Ok(RationalFunction::new(numerator, denominator)?)
}

/// `G_{B_X} = sum_{X subset Y} (-1)^{|Y - X|} G_D / G_{D_Y}`.
pub fn bx_series(graph: &DyerGraph, x: &VertexSubset) -> Result<RationalFunction, GrowthError> {
    let mut memo = MemoTable::new(graph);
    bx_series_with(graph, x, &mut memo)
}

pub fn bx_series_with(
    graph: &DyerGraph,
    x: &VertexSubset,
    memo: &mut MemoTable,
) -> Result<RationalFunction, GrowthError> {
    let x_mask = graph.mask_of(x)?;
    let whole = amalgam_growth(graph, memo)?;
    let outside = graph.full_mask() & !x_mask;
    let mut sum = RationalFunction::zero();
    for extra in bits::submasks(outside) {
        let y = graph.subset_from_mask(x_mask | extra);
        let term = whole.checked_div(&amalgam_growth_of(graph, &y, memo)?)?;
        sum = if bits::parity_sign(extra) > 0 {
            &sum + &term
        } else {
            &sum - &term
        };
    }
    Ok(sum)
}

/// `sum_{Y proper subset of V} (-1)^{|Y|} / G_{D_Y}`, the common right-hand side
/// of the alternating identities.
pub fn proper_subset_sum(
    graph: &DyerGraph,
    memo: &mut MemoTable,
) -> Result<RationalFunction, GrowthError> {
    memo.check(graph)?;
    let mut rec = AmalgamRecursion { graph, memo };
    alternating_inverse_sum(graph.full_mask(), |y| rec.series(y))
}

/// Sphere sizes `a_0, ..., a_n` of the Cayley graph.
pub fn sphere_sizes(graph: &DyerGraph, n: usize) -> Result<Vec<BigInt>, GrowthError> {
    Ok(growth(graph, Strategy::Auto)?
        .series
        .taylor_coefficients(n)?)
}
