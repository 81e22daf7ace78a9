//! Graph constructions that remember where every vertex came from:
//! disjoint union, Zykov sum, corona, composition `H0[H1..Hn]` and the
//! lexicographic product.
//!
//! Vertices are numbered operand-major: operands are laid out one after the
//! other in list order, and for a corona the host graph comes first. With
//! this numbering `composition(edgeless(p), parts)` is literally equal to
//! `disjoint_union(parts)`, and likewise for complete hosts and Zykov sums.

use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;
use crate::set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OpsError {
    #[error("{op} needs at least {min} operands, got {found}")]
    TooFewOperands {
        op: &'static str,
        min: usize,
        found: usize,
    },
    #[error("operand {index} has no vertices")]
    EmptyOperand { index: usize },
    #[error("host has {expected} vertices but {found} operands were given")]
    OperandCountMismatch { expected: usize, found: usize },
    #[error("operand index {index} out of range (have {count})")]
    NoSuchOperand { index: usize, count: usize },
    #[error("set over {found} vertices does not match operand of order {expected}")]
    WidthMismatch { expected: usize, found: usize },
}

/// Where a composite vertex came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Origin {
    /// Vertex `v_i` of a corona's host graph.
    Host(usize),
    /// Vertex `vertex` of operand `part`.
    Operand { part: usize, vertex: usize },
}

/// A graph together with its operand layout.
#[derive(Debug, Clone)]
pub struct CompositeGraph {
    graph: Graph,
    origins: Vec<Origin>,
    /// First composite index of each operand.
    offsets: Vec<usize>,
    orders: Vec<usize>,
    host_order: usize,
}

impl CompositeGraph {
    fn layout(host_order: usize, parts: &[Graph]) -> Self {
        let mut origins: Vec<Origin> = (0..host_order).map(Origin::Host).collect();
        let mut offsets = Vec::with_capacity(parts.len());
        for (part, h) in parts.iter().enumerate() {
            offsets.push(origins.len());
            origins.extend((0..h.order()).map(|vertex| Origin::Operand { part, vertex }));
        }
        let mut graph = Graph::edgeless(origins.len());
        for (h, &off) in parts.iter().zip(&offsets) {
            for (u, v) in h.edges() {
                graph.add_edge(off + u, off + v);
            }
        }
        Self {
            graph,
            origins,
            offsets,
            orders: parts.iter().map(Graph::order).collect(),
            host_order,
        }
    }

    fn join_operands(&mut self, i: usize, j: usize) {
        for u in self.operand_range(i) {
            for v in self.operand_range(j) {
                self.graph.add_edge(u, v);
            }
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    pub fn operand_count(&self) -> usize {
        self.orders.len()
    }

    pub fn origin(&self, v: usize) -> Origin {
        self.origins[v]
    }

    pub fn origins(&self) -> &[Origin] {
        &self.origins
    }

    /// Composite indices of operand `i`.
    pub fn operand_range(&self, i: usize) -> std::ops::Range<usize> {
        self.offsets[i]..self.offsets[i] + self.orders[i]
    }

    /// Number of host vertices (0 unless this is a corona).
    pub fn host_order(&self) -> usize {
        self.host_order
    }

    pub fn operand_vertices(&self, i: usize) -> Result<VertexSet, OpsError> {
        self.check_index(i)?;
        Ok(VertexSet::from_indices(
            self.graph.order(),
            self.operand_range(i),
        ))
    }

    pub fn host_vertices(&self) -> VertexSet {
        VertexSet::from_indices(self.graph.order(), 0..self.host_order)
    }

    fn check_index(&self, i: usize) -> Result<(), OpsError> {
        if i >= self.orders.len() {
            return Err(OpsError::NoSuchOperand {
                index: i,
                count: self.orders.len(),
            });
        }
        Ok(())
    }

    /// `S ∩ V(H_i)` in operand-`i` coordinates.
    pub fn restrict(&self, s: &VertexSet, i: usize) -> Result<VertexSet, OpsError> {
        self.check_index(i)?;
        let off = self.offsets[i];
        Ok(VertexSet::from_indices(
            self.orders[i],
            s.iter()
                .filter(|v| self.operand_range(i).contains(v))
                .map(|v| v - off),
        ))
    }

    /// `S ∩ V(X)` in host coordinates (coronas).
    pub fn restrict_host(&self, s: &VertexSet) -> VertexSet {
        VertexSet::from_indices(self.host_order, s.iter().filter(|&v| v < self.host_order))
    }

    /// Maps a set of operand-`i` vertices into composite coordinates.
    pub fn lift(&self, i: usize, s: &VertexSet) -> Result<VertexSet, OpsError> {
        self.check_index(i)?;
        if s.universe() != self.orders[i] {
            return Err(OpsError::WidthMismatch {
                expected: self.orders[i],
                found: s.universe(),
            });
        }
        let off = self.offsets[i];
        Ok(VertexSet::from_indices(
            self.graph.order(),
            s.iter().map(|v| v + off),
        ))
    }

    /// Maps a set of host vertices into composite coordinates.
    pub fn lift_host(&self, s: &VertexSet) -> VertexSet {
        VertexSet::from_indices(self.graph.order(), s.iter())
    }
}

fn check_operands(op: &'static str, parts: &[Graph], min: usize) -> Result<(), OpsError> {
    if parts.len() < min {
        return Err(OpsError::TooFewOperands {
            op,
            min,
            found: parts.len(),
        });
    }
    match parts.iter().position(|h| h.order() == 0) {
        Some(index) => Err(OpsError::EmptyOperand { index }),
        None => Ok(()),
    }
}

/// Side-by-side copies, no edges between operands. Needs `p >= 2`.
pub fn disjoint_union(parts: &[Graph]) -> Result<CompositeGraph, OpsError> {
    check_operands("disjoint union", parts, 2)?;
    Ok(CompositeGraph::layout(0, parts))
}

/// Every vertex of each operand joined to every vertex of every other.
pub fn zykov_sum(parts: &[Graph]) -> Result<CompositeGraph, OpsError> {
    check_operands("Zykov sum", parts, 2)?;
    let mut c = CompositeGraph::layout(0, parts);
    for i in 0..parts.len() {
        for j in i + 1..parts.len() {
            c.join_operands(i, j);
        }
    }
    Ok(c)
}

/// `X ∘ {H_1..H_n}`: host vertex `v_i` joined to all of `H_i`.
pub fn corona(host: &Graph, parts: &[Graph]) -> Result<CompositeGraph, OpsError> {
    if parts.len() != host.order() {
        return Err(OpsError::OperandCountMismatch {
            expected: host.order(),
            found: parts.len(),
        });
    }
    check_operands("corona", parts, 0)?;
    let mut c = CompositeGraph::layout(host.order(), parts);
    for (u, v) in host.edges() {
        c.graph.add_edge(u, v);
    }
    for i in 0..parts.len() {
        for w in c.operand_range(i) {
            c.graph.add_edge(i, w);
        }
    }
    Ok(c)
}

/// `H0[H_1..H_n]`: `(i,x) ~ (j,y)` iff `ij ∈ E(H0)`, or `i = j` and `xy ∈ E(H_i)`.
pub fn composition(h0: &Graph, parts: &[Graph]) -> Result<CompositeGraph, OpsError> {
    if parts.len() != h0.order() {
        return Err(OpsError::OperandCountMismatch {
            expected: h0.order(),
            found: parts.len(),
        });
    }
    check_operands("composition", parts, 0)?;
    let mut c = CompositeGraph::layout(0, parts);
    for (i, j) in h0.edges() {
        c.join_operands(i, j);
    }
    Ok(c)
}

/// `H0 • H`: composition with every part equal to `h`.
pub fn lexicographic_product(h0: &Graph, h: &Graph) -> Result<CompositeGraph, OpsError> {
    composition(h0, &vec![h.clone(); h0.order()])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, edgeless, path};
    use crate::stable::alpha;
    use proptest::prelude::*;

    #[test]
    fn union_of_singletons() {
        let u = disjoint_union(&[complete(1), complete(1)]).unwrap();
        assert_eq!(u.graph(), &edgeless(2));
        let pp = disjoint_union(&[path(3), path(3)]).unwrap();
        assert_eq!(alpha(pp.graph()), 4);
    }

    #[test]
    fn preconditions() {
        assert_eq!(
            disjoint_union(&[path(3)]).unwrap_err(),
            OpsError::TooFewOperands {
                op: "disjoint union",
                min: 2,
                found: 1
            }
        );
        assert_eq!(
            zykov_sum(&[path(3), Graph::edgeless(0)]).unwrap_err(),
            OpsError::EmptyOperand { index: 1 }
        );
        assert_eq!(
            corona(&path(2), &[path(1)]).unwrap_err(),
            OpsError::OperandCountMismatch {
                expected: 2,
                found: 1
            }
        );
        assert_eq!(
            corona(&path(2), &[path(1), Graph::edgeless(0)]).unwrap_err(),
            OpsError::EmptyOperand { index: 1 }
        );
        assert!(composition(&path(3), &[path(2)]).is_err());
    }

    #[test]
    fn zykov_sizes() {
        let z1 = zykov_sum(&[complete(2), path(3)]).unwrap();
        assert_eq!((z1.graph().order(), z1.graph().edge_count()), (5, 9));
        let z2 = zykov_sum(&[path(3), path(3)]).unwrap();
        assert_eq!((z2.graph().order(), z2.graph().edge_count()), (6, 13));
        assert_eq!(
            zykov_sum(&[complete(2), complete(3)]).unwrap().graph(),
            &complete(5)
        );
    }

    #[test]
    fn small_coronas() {
        assert_eq!(
            corona(&complete(1), &[complete(1)]).unwrap().graph(),
            &complete(2)
        );
        // Two pendants hung on an edge: 2 - 0 - 1 - 3.
        let c = corona(&path(2), &[complete(1), complete(1)]).unwrap();
        let expected = Graph::from_edge_list(4, &[(2, 0), (0, 1), (1, 3)]).unwrap();
        assert_eq!(c.graph(), &expected);
        assert_eq!(c.host_order(), 2);
        assert_eq!(c.origin(3), Origin::Operand { part: 1, vertex: 0 });
    }

    #[test]
    fn composition_specializations() {
        let parts = [complete(2), path(3)];
        assert_eq!(
            composition(&complete(2), &parts).unwrap().graph(),
            zykov_sum(&parts).unwrap().graph()
        );
        let parts = [path(3), path(3)];
        assert_eq!(
            composition(&complete(2).complement(), &parts)
                .unwrap()
                .graph(),
            disjoint_union(&parts).unwrap().graph()
        );
        assert_eq!(
            composition(&path(2), &[complete(1), complete(1)])
                .unwrap()
                .graph(),
            &complete(2)
        );
    }

    #[test]
    fn lexicographic_cases() {
        let h = cycle(5).unwrap();
        assert_eq!(lexicographic_product(&complete(1), &h).unwrap().graph(), &h);
        assert_eq!(
            lexicographic_product(&edgeless(2), &path(3))
                .unwrap()
                .graph(),
            disjoint_union(&[path(3), path(3)]).unwrap().graph()
        );
        assert_eq!(
            lexicographic_product(&path(2), &complete(1))
                .unwrap()
                .graph(),
            &complete(2)
        );
    }

    #[test]
    fn restrict_and_lift() {
        let u = disjoint_union(&[path(3), path(3)]).unwrap();
        let s = VertexSet::from_indices(6, [0]);
        assert!(u.restrict(&s, 1).unwrap().is_empty());
        assert_eq!(u.restrict(&s, 0).unwrap().to_vec(), vec![0]);
        assert_eq!(
            u.restrict(&s, 2),
            Err(OpsError::NoSuchOperand { index: 2, count: 2 })
        );
        let t = VertexSet::from_indices(3, [0, 2]);
        assert_eq!(u.lift(1, &t).unwrap().to_vec(), vec![3, 5]);
    }

    fn arb_parts() -> impl Strategy<Value = Vec<Graph>> {
        proptest::collection::vec((1usize..=5, 0.0f64..1.0, any::<u64>()), 2..=4).prop_map(|v| {
            v.into_iter()
                .map(|(n, p, seed)| crate::generators::random_graph(n, p, seed))
                .collect()
        })
    }

    proptest! {
        #[test]
        fn layouts_reproduce_operands(parts in arb_parts(), host_p in 0.0f64..1.0, seed in any::<u64>()) {
            let host = crate::generators::random_graph(parts.len(), host_p, seed);
            let built = [
                disjoint_union(&parts).unwrap(),
                zykov_sum(&parts).unwrap(),
                corona(&host, &parts).unwrap(),
                composition(&host, &parts).unwrap(),
            ];
            for c in &built {
                let mut covered = c.host_vertices();
                for (i, h) in parts.iter().enumerate() {
                    let vs = c.operand_vertices(i).unwrap();
                    prop_assert!(vs.is_disjoint(&covered));
                    covered.union_with(&vs);
                    prop_assert_eq!(&c.graph().induced_subgraph(&vs).0, h);
                    for v in &vs {
                        match c.origin(v) {
                            Origin::Operand { part, vertex } => {
                                prop_assert_eq!(part, i);
                                prop_assert_eq!(c.operand_range(i).start + vertex, v);
                            }
                            Origin::Host(_) => prop_assert!(false, "operand vertex tagged as host"),
                        }
                    }
                }
                prop_assert_eq!(covered, c.graph().vertex_set());
            }
            let c = &built[2];
            let (x, _) = c.graph().induced_subgraph(&c.host_vertices());
            prop_assert_eq!(&x, &host);
        }

        #[test]
        fn alpha_laws(parts in arb_parts(), host_p in 0.0f64..1.0, seed in any::<u64>()) {
            let alphas: Vec<usize> = parts.iter().map(alpha).collect();
            let sum: usize = alphas.iter().sum();
            let max = *alphas.iter().max().unwrap();
            prop_assert_eq!(alpha(disjoint_union(&parts).unwrap().graph()), sum);
            prop_assert_eq!(alpha(zykov_sum(&parts).unwrap().graph()), max);
            let host = crate::generators::random_graph(parts.len(), host_p, seed);
            prop_assert_eq!(alpha(corona(&host, &parts).unwrap().graph()), sum);
        }

        #[test]
        fn restriction_partitions_sets(parts in arb_parts(), mask in any::<u64>()) {
            let c = zykov_sum(&parts).unwrap();
            let n = c.graph().order();
            let s = VertexSet::from_indices(n, (0..n).filter(|&v| mask >> v & 1 == 1));
            let mut rebuilt = c.graph().empty_set();
            for i in 0..parts.len() {
                rebuilt.union_with(&c.lift(i, &c.restrict(&s, i).unwrap()).unwrap());
            }
            prop_assert_eq!(rebuilt, s);
        }
    }
}
