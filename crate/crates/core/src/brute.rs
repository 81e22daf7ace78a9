//! Definition-level oracles over all `2^n` vertex subsets.
//!
//! Nothing here shares code with the branch-and-bound solver or the
//! stable-set enumerator: adjacency is flattened into `u64` masks and every
//! subset is visited. Intended for `n <= ORACLE_MAX_ORDER`.

use crate::family::SetFamily;
use crate::graph::Graph;
use crate::set::VertexSet;

/// Largest order the oracles accept (tables hold `2^n` entries).
pub const ORACLE_MAX_ORDER: usize = 22;

fn masks(g: &Graph) -> Vec<u64> {
    let n = g.order();
    assert!(
        n <= ORACLE_MAX_ORDER,
        "brute-force oracle limited to {ORACLE_MAX_ORDER} vertices, got {n}"
    );
    (0..n)
        .map(|v| {
            (0..n)
                .filter(|&w| g.has_edge(v, w))
                .fold(0u64, |m, w| m | 1 << w)
        })
        .collect()
}

/// Stability flags and α for every subset of the vertex set.
pub struct SubsetTable {
    adj: Vec<u64>,
    stable: Vec<bool>,
    alpha: Vec<u8>,
}

impl SubsetTable {
    pub fn new(g: &Graph) -> Self {
        let adj = masks(g);
        let size = 1usize << adj.len();
        let mut stable = vec![true; size];
        let mut alpha = vec![0u8; size];
        for m in 1..size {
            let v = m.trailing_zeros() as usize;
            let rest = m & (m - 1);
            stable[m] = stable[rest] && (adj[v] & m as u64) == 0;
            // Either v is left out, or v is in and its neighbours are out.
            let without_nb = rest & !(adj[v] as usize);
            alpha[m] = alpha[rest].max(1 + alpha[without_nb]);
        }
        Self { adj, stable, alpha }
    }

    pub fn is_stable(&self, mask: u64) -> bool {
        self.stable[mask as usize]
    }

    pub fn alpha_of(&self, mask: u64) -> usize {
        self.alpha[mask as usize] as usize
    }

    pub fn closed_neighborhood(&self, mask: u64) -> u64 {
        (0..self.adj.len())
            .filter(|&v| mask >> v & 1 == 1)
            .fold(mask, |acc, v| acc | self.adj[v])
    }

    /// The local-maximum condition read straight off the definition.
    pub fn is_local_max(&self, mask: u64) -> bool {
        self.is_stable(mask)
            && mask.count_ones() as usize == self.alpha_of(self.closed_neighborhood(mask))
    }
}

/// α(G) as the largest stable subset, by checking every subset pairwise.
pub fn alpha_naive(g: &Graph) -> usize {
    let adj = masks(g);
    let n = adj.len();
    (0u64..1 << n)
        .filter(|&m| (0..n).all(|v| m >> v & 1 == 0 || adj[v] & m == 0))
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Ψ(G) by testing every one of the `2^n` subsets against the definition.
pub fn psi_naive(g: &Graph) -> SetFamily {
    let n = g.order();
    let table = SubsetTable::new(g);
    SetFamily::new(
        n,
        (0u64..1 << n)
            .filter(|&m| table.is_local_max(m))
            .map(|m| VertexSet::from_mask(n, m)),
    )
}

/// Ω(G) by testing every subset.
pub fn omega_naive(g: &Graph) -> SetFamily {
    let n = g.order();
    let table = SubsetTable::new(g);
    let a = table.alpha_of((1u64 << n) - 1);
    SetFamily::new(
        n,
        (0u64..1 << n)
            .filter(|&m| table.is_stable(m) && m.count_ones() as usize == a)
            .map(|m| VertexSet::from_mask(n, m)),
    )
}

pub fn is_local_max_naive(g: &Graph, s: &VertexSet) -> bool {
    let mask = s.to_mask().expect("oracle sets fit one word");
    SubsetTable::new(g).is_local_max(mask)
}
