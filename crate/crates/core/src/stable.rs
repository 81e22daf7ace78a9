//! Exact stability computations: α(G), Ω(G), stable-set enumeration and the
//! family Ψ(G) of local maximum stable sets.

use rayon::prelude::*;

use crate::family::SetFamily;
use crate::graph::Graph;
use crate::set::VertexSet;

/// Graphs at least this large filter their stable sets in parallel.
const PARALLEL_ORDER: usize = 20;

/// No two members of `s` adjacent.
pub fn is_stable(g: &Graph, s: &VertexSet) -> bool {
    s.iter().all(|v| g.neighbors(v).is_disjoint(s))
}

struct MaxStable<'g> {
    g: &'g Graph,
    best: usize,
    goal: usize,
}

impl MaxStable<'_> {
    /// Greedy clique partition of `cand`, stopping once it exceeds `limit`
    /// cliques. Each clique holds at most one vertex of a stable set.
    fn clique_cover(&self, cand: &VertexSet, limit: usize) -> usize {
        let mut cliques: Vec<VertexSet> = Vec::new();
        for v in cand {
            let nb = self.g.neighbors(v);
            match cliques.iter_mut().find(|c| c.is_subset(nb)) {
                Some(c) => c.insert(v),
                None => {
                    if cliques.len() == limit {
                        return limit + 1;
                    }
                    cliques.push(VertexSet::from_indices(cand.universe(), [v]));
                }
            }
        }
        cliques.len()
    }

    /// Returns true once a stable set of size `goal` has been seen.
    fn search(&mut self, mut cand: VertexSet, mut size: usize) -> bool {
        // A vertex with at most one neighbour among the candidates lies in
        // some maximum stable set of the candidates: take it without branching.
        let branch = loop {
            if size + cand.len() <= self.best {
                return false;
            }
            let mut low = None;
            let mut high = (0, 0);
            for v in &cand {
                let d = self.g.neighbors(v).intersection_len(&cand);
                if d <= 1 {
                    low = Some(v);
                    break;
                }
                if d > high.1 {
                    high = (v, d);
                }
            }
            match low {
                Some(v) => {
                    size += 1;
                    cand.difference_with(self.g.neighbors(v));
                    cand.remove(v);
                }
                None if cand.is_empty() => break None,
                None => break Some(high.0),
            }
        };
        if size > self.best {
            self.best = size;
            if self.best >= self.goal {
                return true;
            }
        }
        let Some(v) = branch else {
            return false;
        };
        let room = self.best - size;
        if self.clique_cover(&cand, room) <= room {
            return false;
        }
        let mut with_v = cand.difference(self.g.neighbors(v));
        with_v.remove(v);
        if self.search(with_v, size + 1) {
            return true;
        }
        cand.remove(v);
        self.search(cand, size)
    }
}

/// α(G[within]) by branch and bound.
pub fn alpha_within(g: &Graph, within: &VertexSet) -> usize {
    let mut s = MaxStable {
        g,
        best: 0,
        goal: usize::MAX,
    };
    s.search(within.clone(), 0);
    s.best
}

/// The stability number α(G); 0 for the empty graph.
pub fn alpha(g: &Graph) -> usize {
    alpha_within(g, &g.vertex_set())
}

/// Whether `G[within]` has a stable set with more than `k` vertices. Stops
/// at the first such set.
pub fn has_stable_set_larger_than(g: &Graph, within: &VertexSet, k: usize) -> bool {
    if within.len() <= k {
        return false;
    }
    let mut s = MaxStable {
        g,
        best: k,
        goal: k + 1,
    };
    s.search(within.clone(), 0)
}

/// Depth-first stream of stable sets by include/exclude branching on the
/// smallest candidate vertex. Only stable sets are ever built.
pub struct StableSets<'g> {
    g: &'g Graph,
    stack: Vec<(VertexSet, VertexSet)>,
    min_size: usize,
}

impl<'g> StableSets<'g> {
    /// Only yields sets of at least `min_size` vertices, pruning branches
    /// that cannot reach it.
    pub fn with_min_size(g: &'g Graph, min_size: usize) -> Self {
        Self {
            g,
            stack: vec![(g.empty_set(), g.vertex_set())],
            min_size,
        }
    }
}

impl Iterator for StableSets<'_> {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        while let Some((current, mut cand)) = self.stack.pop() {
            if current.len() + cand.len() < self.min_size {
                continue;
            }
            let Some(v) = cand.first() else {
                return Some(current);
            };
            cand.remove(v);
            let mut with_cand = cand.difference(self.g.neighbors(v));
            with_cand.remove(v);
            self.stack.push((current.clone(), cand));
            self.stack.push((current.with(v), with_cand));
        }
        None
    }
}

/// Every stable set of `g` exactly once, including ∅.
pub fn enumerate_stable_sets(g: &Graph) -> StableSets<'_> {
    StableSets::with_min_size(g, 0)
}

/// Ω(G): all maximum stable sets.
pub fn omega(g: &Graph) -> SetFamily {
    let a = alpha(g);
    SetFamily::new(
        g.order(),
        StableSets::with_min_size(g, a).filter(|s| s.len() == a),
    )
}

/// `S` is stable and maximum in `G[N[S]]`. ∅ qualifies: `G[N[∅]]` is empty.
pub fn is_local_max_stable(g: &Graph, s: &VertexSet) -> bool {
    is_stable(g, s) && is_local_max_given_stable(g, s)
}

fn is_local_max_given_stable(g: &Graph, s: &VertexSet) -> bool {
    !has_stable_set_larger_than(g, &g.closed_neighborhood(s), s.len())
}

/// Ψ(G), the family of local maximum stable sets, ∅ included.
pub fn psi(g: &Graph) -> SetFamily {
    let members: Vec<VertexSet> = if g.order() >= PARALLEL_ORDER {
        enumerate_stable_sets(g)
            .par_bridge()
            .filter(|s| is_local_max_given_stable(g, s))
            .collect()
    } else {
        enumerate_stable_sets(g)
            .filter(|s| is_local_max_given_stable(g, s))
            .collect()
    };
    SetFamily::new(g.order(), members)
}

/// Smallest size of a nonempty local maximum stable set; `None` only for
/// the empty graph.
pub fn psi_min_size(g: &Graph) -> Option<usize> {
    psi(g).min_nonempty_size()
}

/// Second-largest entry of a sequence, counting repeats (`[2, 2] -> 2`).
pub fn max2(values: &[usize]) -> Option<usize> {
    let mut sorted = values.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    sorted.get(1).copied()
}
