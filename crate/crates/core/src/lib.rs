//! Local maximum stable sets of graphs.
//!
//! A stable set `S` of `G` is a *local maximum stable set* when it is a
//! maximum stable set of the subgraph induced by its closed neighbourhood
//! `N[S]`. The family of these sets, Ψ(G), is computed by [`psi`]; the family
//! of maximum stable sets, Ω(G), by [`omega`]. [`is_greedoid`] checks the
//! greedoid axioms on a family, [`ops`] builds disjoint unions, Zykov sums,
//! coronas and compositions with their vertex maps, and [`verify`] checks the
//! known structural results about Ψ on concrete or generated inputs.
//!
//! ```
//! use psi_core::{is_greedoid, path, psi};
//!
//! let p4 = path(4);
//! let family = psi(&p4);
//! assert_eq!(family.len(), 6);
//! assert!(is_greedoid(&family).unwrap().is_greedoid());
//! ```

pub mod brute;
pub mod family;
pub mod fixtures;
pub mod generators;
pub mod graph;
pub mod greedoid;
pub mod io;
pub mod ops;
pub mod rng;
pub mod set;
pub mod stable;
pub mod verify;

pub use family::SetFamily;
pub use fixtures::{named_fixture, FixtureId};
pub use graph::{complete, cycle, edgeless, path, star, Graph, GraphError};
pub use greedoid::{
    accessibility_chain, check_accessibility, check_exchange, is_greedoid, GreedoidError,
    GreedoidStatus, GreedoidVerdict,
};
pub use ops::{
    composition, corona, disjoint_union, lexicographic_product, zykov_sum, CompositeGraph,
    OpsError, Origin,
};
pub use set::VertexSet;
pub use stable::{
    alpha, enumerate_stable_sets, is_local_max_stable, is_stable, omega, psi, psi_min_size,
};
pub use verify::{TheoremId, TheoremReport};
