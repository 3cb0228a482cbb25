//! Rational Euler characteristic of a Dyer group, computed two independent ways:
//! by evaluating `1/G(t)` at `t = 1`, and by the amalgam/product recursion on
//! the graph itself.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::coxeter::{self, CoxeterClass};
use crate::dyergraph::{bits, DyerGraph, Order};
use crate::growth::{growth, GrowthError, Strategy};
use crate::ratfun::RatFunError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EulerError {
    #[error("1/G(t) has a pole at t = 1")]
    Pole,
    #[error(transparent)]
    Growth(#[from] GrowthError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EulerMethod {
    ViaGrowth,
    Recursive,
}

impl fmt::Display for EulerMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EulerMethod::ViaGrowth => "growth",
            EulerMethod::Recursive => "recursive",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerResult {
    pub value: BigRational,
    pub method: EulerMethod,
}

/// `chi(D) = 1 / G(1)`.
pub fn euler_via_growth(graph: &DyerGraph) -> Result<EulerResult, EulerError> {
    let g = growth(graph, Strategy::Auto)?.series;
    let inv = g.invert().map_err(GrowthError::from)?;
    let value = match inv.evaluate(&BigRational::one()) {
        Ok(v) => v,
        Err(RatFunError::Pole { .. }) => return Err(EulerError::Pole),
        Err(e) => return Err(GrowthError::from(e).into()),
    };
    Ok(EulerResult {
        value,
        method: EulerMethod::ViaGrowth,
    })
}

/// Euler characteristic from the graph alone:
/// `chi(D) = chi(D_{V-x}) + chi(D_{st(x)}) - chi(D_{lk(x)})` while the graph is
/// not complete, and `chi(D_2) * chi(D_p) * chi(Z^l)` once it is.
pub fn euler_recursive(graph: &DyerGraph) -> Result<EulerResult, EulerError> {
    let mut rec = EulerRecursion {
        graph,
        memo: HashMap::new(),
    };
    Ok(EulerResult {
        value: rec.chi(graph.full_mask()),
        method: EulerMethod::Recursive,
    })
}

struct EulerRecursion<'a> {
    graph: &'a DyerGraph,
    memo: HashMap<u64, BigRational>,
}

impl EulerRecursion<'_> {
    fn chi(&mut self, mask: u64) -> BigRational {
        if let Some(v) = self.memo.get(&mask) {
            return v.clone();
        }
        let split = bits::iter(mask).find(|&v| self.graph.link_star_in(v, mask).1 != mask);
        let value = match split {
            Some(v) => {
                let (lk, st) = self.graph.link_star_in(v, mask);
                self.chi(mask & !(1 << v)) + self.chi(st) - self.chi(lk)
            }
            None => self.complete(mask),
        };
        self.memo.insert(mask, value.clone());
        value
    }

    fn complete(&mut self, mask: u64) -> BigRational {
        if mask & self.graph.vinf_mask() != 0 {
            return BigRational::zero();
        }
        let v2 = mask & self.graph.v2_mask();
        let finite_part: BigInt = bits::iter(mask & self.graph.vp_mask())
            .map(|v| match self.graph.order(v) {
                Order::Finite(k) => BigInt::from(k),
                Order::Infinite => unreachable!(),
            })
            .product();
        let chi_p = BigRational::new(BigInt::one(), finite_part);
        chi_p * self.coxeter_chi(v2)
    }

    /// Euler characteristic of the Coxeter group on the (complete) mask `v2`.
    fn coxeter_chi(&mut self, v2: u64) -> BigRational {
        match coxeter::classify_mask(self.graph, v2) {
            CoxeterClass::Finite(components) => {
                let order: BigInt = components.iter().map(|c| c.kind.order()).product();
                BigRational::new(BigInt::one(), order)
            }
            // (-1)^{|S|+1} chi(W_S) = sum_{X proper subset of S} (-1)^{|X|} chi(W_X),
            // the Coxeter alternating identity evaluated at t = 1
            CoxeterClass::Infinite => {
                let mut sum = BigRational::zero();
                for x in bits::submasks(v2).filter(|&x| x != v2) {
                    let c = self.chi(x);
                    if bits::parity_sign(x) > 0 {
                        sum += c;
                    } else {
                        sum -= c;
                    }
                }
                if bits::parity_sign(v2) < 0 {
                    sum
                } else {
                    -sum
                }
            }
        }
    }
}
