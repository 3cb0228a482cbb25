//! Helpers shared by the integration test targets.
#![allow(dead_code)]

use std::collections::HashSet;
use std::path::PathBuf;

use dyer_growth::dyergraph::{DyerGraph, GraphSpec, Order};

pub const INF: Order = Order::Infinite;

pub fn fin(k: u32) -> Order {
    Order::Finite(k)
}

const NAMES: [&str; 8] = ["a", "b", "c", "d", "e", "f", "g", "h"];

/// Builds a validated graph from orders and `(i, j, label)` edges.
pub fn graph(orders: &[Order], edges: &[(usize, usize, u32)]) -> DyerGraph {
    let mut spec = GraphSpec::new();
    for (i, &o) in orders.iter().enumerate() {
        spec = spec.vertex(NAMES[i], o);
    }
    for &(i, j, m) in edges {
        spec = spec.edge(NAMES[i], NAMES[j], m);
    }
    spec.validate().expect("test graph is valid")
}

fn order_code(o: Order) -> u32 {
    match o {
        Order::Finite(k) => k,
        Order::Infinite => u32::MAX,
    }
}

/// Isomorphism-invariant key: the least relabelled encoding.
fn canonical_key(orders: &[Order], labels: &[Vec<u32>]) -> Vec<u32> {
    let n = orders.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Vec<u32>> = None;
    loop {
        let mut key: Vec<u32> = perm.iter().map(|&p| order_code(orders[p])).collect();
        for i in 0..n {
            for j in i + 1..n {
                key.push(labels[perm[i]][perm[j]]);
            }
        }
        if best.as_ref().is_none_or(|b| key < *b) {
            best = Some(key);
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    best.unwrap_or_default()
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Every valid Dyer graph with at most `max_vertices` vertices, orders from
/// `orders` and labels from `labels`, one representative per isomorphism class.
pub fn enumerate(max_vertices: usize, orders: &[Order], labels: &[u32]) -> Vec<DyerGraph> {
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    for n in 0..=max_vertices {
        // orders as nondecreasing index sequences; other orderings are isomorphic
        let mut choice = vec![0usize; n];
        loop {
            let vertex_orders: Vec<Order> = choice.iter().map(|&c| orders[c]).collect();
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .collect();
            let options: Vec<Vec<u32>> = pairs
                .iter()
                .map(|&(i, j)| {
                    // 0 encodes a missing edge
                    let both_involutions =
                        vertex_orders[i].is_involution() && vertex_orders[j].is_involution();
                    std::iter::once(0)
                        .chain(
                            labels
                                .iter()
                                .copied()
                                .filter(|&m| m == 2 || both_involutions),
                        )
                        .collect()
                })
                .collect();
            let mut pick = vec![0usize; pairs.len()];
            loop {
                let mut matrix = vec![vec![0u32; n]; n];
                for (k, &(i, j)) in pairs.iter().enumerate() {
                    matrix[i][j] = options[k][pick[k]];
                    matrix[j][i] = options[k][pick[k]];
                }
                if seen.insert(canonical_key(&vertex_orders, &matrix)) {
                    let edges: Vec<(usize, usize, u32)> = pairs
                        .iter()
                        .filter(|&&(i, j)| matrix[i][j] != 0)
                        .map(|&(i, j)| (i, j, matrix[i][j]))
                        .collect();
                    out.push(graph(&vertex_orders, &edges));
                }
                if !advance(&mut pick, |k| options[k].len()) {
                    break;
                }
            }
            if !advance_nondecreasing(&mut choice, orders.len()) {
                break;
            }
        }
    }
    out
}

fn advance(pick: &mut [usize], len: impl Fn(usize) -> usize) -> bool {
    for (k, slot) in pick.iter_mut().enumerate() {
        *slot += 1;
        if *slot < len(k) {
            return true;
        }
        *slot = 0;
    }
    false
}

fn advance_nondecreasing(choice: &mut [usize], radix: usize) -> bool {
    for k in (0..choice.len()).rev() {
        if choice[k] + 1 < radix {
            choice[k] += 1;
            let v = choice[k];
            for c in &mut choice[k + 1..] {
                *c = v;
            }
            return true;
        }
    }
    false
}

/// Exhaustive corpus: at most 4 vertices, orders {2,3,4,inf}, labels {2,3,4}.
pub fn small_corpus() -> Vec<DyerGraph> {
    enumerate(4, &[fin(2), fin(3), fin(4), INF], &[2, 3, 4])
}

pub fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("corpus")
}

/// The bundled graph files, with their file stems.
pub fn bundled_corpus() -> Vec<(String, DyerGraph)> {
    let mut files: Vec<_> = std::fs::read_dir(corpus_dir())
        .expect("corpus directory")
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    files.sort();
    files
        .into_iter()
        .map(|p| {
            let text = std::fs::read_to_string(&p).unwrap();
            let name = p.file_stem().unwrap().to_string_lossy().into_owned();
            (name, DyerGraph::from_json(&text).unwrap())
        })
        .collect()
}
