//! Seeded random graphs and trees, plus exhaustive enumerations for sweeps.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};

use crate::graph::Graph;
use crate::rng::seeded;
use rand::Rng;

/// Decodes a Prüfer sequence (length `n - 2`, entries `< n`) into a labeled tree.
///
/// `n = 1` and `n = 2` take the empty sequence and give `K1` and `K2`.
pub fn prufer_decode(n: usize, seq: &[usize]) -> Graph {
    assert!(n >= 1, "a tree needs at least one vertex");
    assert_eq!(seq.len(), n.saturating_sub(2), "Prüfer sequence length");
    let mut g = Graph::edgeless(n);
    if n == 1 {
        return g;
    }
    let mut degree = vec![1usize; n];
    for &x in seq {
        assert!(x < n, "Prüfer entry {x} out of range");
        degree[x] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> =
        (0..n).filter(|&v| degree[v] == 1).map(Reverse).collect();
    for &x in seq {
        let Reverse(leaf) = leaves.pop().expect("a leaf always exists");
        g.add_edge(leaf, x);
        degree[x] -= 1;
        if degree[x] == 1 {
            leaves.push(Reverse(x));
        }
    }
    let Reverse(u) = leaves.pop().expect("two leaves remain");
    let Reverse(v) = leaves.pop().expect("two leaves remain");
    g.add_edge(u, v);
    g
}

/// A labeled tree on `n` vertices from a Prüfer sequence drawn from the
/// ChaCha8 stream seeded with `seed`.
pub fn random_tree(n: usize, seed: u64) -> Graph {
    let mut rng = seeded(seed);
    let seq: Vec<usize> = (0..n.saturating_sub(2))
        .map(|_| rng.random_range(0..n))
        .collect();
    prufer_decode(n, &seq)
}

/// Every labeled tree on `n` vertices, in lexicographic Prüfer order
/// (`n^(n-2)` of them).
pub fn labeled_trees(n: usize) -> impl Iterator<Item = Graph> {
    assert!(n >= 1);
    let len = n.saturating_sub(2);
    let mut seq = vec![0usize; len];
    let mut done = false;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let tree = prufer_decode(n, &seq);
        // Odometer increment; wraps to completion.
        done = true;
        for digit in seq.iter_mut().rev() {
            *digit += 1;
            if *digit < n {
                done = false;
                break;
            }
            *digit = 0;
        }
        Some(tree)
    })
}

/// Erdős–Rényi `G(n, p)`: each pair `(u, v)`, `u < v`, visited in order and
/// kept when the next uniform draw is below `p`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = seeded(seed);
    let mut g = Graph::edgeless(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.random::<f64>() < p {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Upper-triangle code of `g` under the vertex order `order` (new position ->
/// old vertex). Needs `n <= 11`.
fn code_under(g: &Graph, order: &[usize]) -> u64 {
    let mut code = 0u64;
    for j in 1..order.len() {
        for i in 0..j {
            code = code << 1 | g.has_edge(order[i], order[j]) as u64;
        }
    }
    code
}

/// Canonical code: the maximum upper-triangle code over all vertex orders
/// that sort vertices by nondecreasing degree. Isomorphic graphs get the
/// same code.
fn canonical_code(g: &Graph) -> u64 {
    let n = g.order();
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| g.degree(v));
    let slot_degree: Vec<usize> = by_degree.iter().map(|&v| g.degree(v)).collect();

    fn search(
        g: &Graph,
        slot_degree: &[usize],
        order: &mut Vec<usize>,
        used: &mut [bool],
        best: &mut u64,
    ) {
        let n = slot_degree.len();
        if order.len() == n {
            *best = (*best).max(code_under(g, order));
            return;
        }
        let want = slot_degree[order.len()];
        for v in 0..n {
            if !used[v] && g.degree(v) == want {
                used[v] = true;
                order.push(v);
                search(g, slot_degree, order, used, best);
                order.pop();
                used[v] = false;
            }
        }
    }

    let mut best = 0;
    search(
        g,
        &slot_degree,
        &mut Vec::with_capacity(n),
        &mut vec![false; n],
        &mut best,
    );
    best
}

fn decode_canonical(n: usize, code: u64) -> Graph {
    let bits = n * n.saturating_sub(1) / 2;
    let mut g = Graph::edgeless(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if code >> (bits - 1 - k) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    g
}

/// One representative of every isomorphism class of graphs on exactly `n`
/// vertices (`n <= 9`), in increasing canonical-code order. The vertex
/// numbering of each representative is its canonical order.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= 9, "exhaustive generation is limited to n <= 9");
    let mut codes: Vec<u64> = vec![0];
    for order in 1..=n {
        let mut next: HashSet<u64> = HashSet::new();
        for &code in &codes {
            let base = decode_canonical(order - 1, code);
            for mask in 0u64..1 << (order - 1) {
                let mut g = Graph::edgeless(order);
                for (u, v) in base.edges() {
                    g.add_edge(u, v);
                }
                for u in 0..order - 1 {
                    if mask >> u & 1 == 1 {
                        g.add_edge(u, order - 1);
                    }
                }
                next.insert(canonical_code(&g));
            }
        }
        codes = next.into_iter().collect();
        codes.sort_unstable();
    }
    codes.into_iter().map(|c| decode_canonical(n, c)).collect()
}
