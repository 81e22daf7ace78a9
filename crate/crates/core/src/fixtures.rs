//! The worked example graphs, with their letter labels.

use std::fmt;
use std::str::FromStr;

use crate::graph::{complete, path, Graph};
use crate::ops::{corona, zykov_sum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FixtureId {
    /// `W`: a path a-b-c-d-e with the 5-cycle c-d-e-f-g.
    WFig1,
    /// Unicyclic bipartite graph with a 4-cycle.
    G1Fig3,
    G2Fig3,
    /// `K4` plus a pendant vertex.
    G3Fig3,
    G4Fig3,
    /// `Z[K2, P3]`.
    ZK2P3Fig4,
    /// `Z[P3, P3]`.
    ZP3P3Fig4,
    /// `(K3 + v3v4) ∘ {K3, K2, P3, K1}`.
    CoronaFig5,
}

impl FixtureId {
    pub const ALL: [FixtureId; 8] = [
        FixtureId::WFig1,
        FixtureId::G1Fig3,
        FixtureId::G2Fig3,
        FixtureId::G3Fig3,
        FixtureId::G4Fig3,
        FixtureId::ZK2P3Fig4,
        FixtureId::ZP3P3Fig4,
        FixtureId::CoronaFig5,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FixtureId::WFig1 => "W_FIG1",
            FixtureId::G1Fig3 => "G1_FIG3",
            FixtureId::G2Fig3 => "G2_FIG3",
            FixtureId::G3Fig3 => "G3_FIG3",
            FixtureId::G4Fig3 => "G4_FIG3",
            FixtureId::ZK2P3Fig4 => "Z_K2_P3_FIG4",
            FixtureId::ZP3P3Fig4 => "Z_P3_P3_FIG4",
            FixtureId::CoronaFig5 => "CORONA_FIG5",
        }
    }

    fn aliases(self) -> &'static [&'static str] {
        match self {
            FixtureId::WFig1 => &["W"],
            FixtureId::G1Fig3 => &["G1"],
            FixtureId::G2Fig3 => &["G2"],
            FixtureId::G3Fig3 => &["G3"],
            FixtureId::G4Fig3 => &["G4"],
            FixtureId::ZK2P3Fig4 => &["Z_K2_P3"],
            FixtureId::ZP3P3Fig4 => &["Z_P3_P3"],
            FixtureId::CoronaFig5 => &["CORONA"],
        }
    }
}

impl fmt::Display for FixtureId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown fixture `{0}`")]
pub struct UnknownFixture(pub String);

impl FromStr for FixtureId {
    type Err = UnknownFixture;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let upper = s.trim().to_ascii_uppercase();
        FixtureId::ALL
            .into_iter()
            .find(|id| id.name() == upper || id.aliases().contains(&upper.as_str()))
            .ok_or_else(|| UnknownFixture(s.to_string()))
    }
}

fn labeled(n: usize, edges: &[(usize, usize)], labels: &[&str]) -> Graph {
    Graph::from_edge_list(n, edges)
        .and_then(|g| g.with_labels(labels.iter().map(|s| s.to_string()).collect()))
        .expect("fixture edge lists are valid")
}

/// Host graph of the corona fixture: a triangle v1 v2 v3 with v4 pendant on v3.
pub fn corona_fig5_host() -> Graph {
    Graph::from_edge_list(4, &[(0, 1), (0, 2), (1, 2), (2, 3)]).expect("valid host")
}

/// Operands of the corona fixture, in host-vertex order.
pub fn corona_fig5_parts() -> Vec<Graph> {
    vec![complete(3), complete(2), path(3), complete(1)]
}

/// Unnamed vertices are labeled by their index, so labels and numeric
/// indices never disagree.
pub fn named_fixture(id: FixtureId) -> Graph {
    match id {
        FixtureId::WFig1 => labeled(
            7,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (2, 6), (6, 5), (5, 4)],
            &["a", "b", "c", "d", "e", "f", "g"],
        ),
        FixtureId::G1Fig3 => {
            Graph::from_edge_list(7, &[(0, 1), (1, 2), (2, 3), (1, 4), (4, 5), (2, 5), (2, 6)])
                .expect("valid fixture")
        }
        FixtureId::G2Fig3 => labeled(
            5,
            &[(0, 1), (1, 2), (1, 3), (1, 4), (2, 4)],
            &["a", "1", "2", "b", "c"],
        ),
        FixtureId::G3Fig3 => {
            Graph::from_edge_list(5, &[(0, 1), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)])
                .expect("valid fixture")
        }
        FixtureId::G4Fig3 => Graph::from_edge_list(
            6,
            &[
                (0, 1),
                (1, 2),
                (3, 4),
                (4, 5),
                (0, 3),
                (1, 4),
                (2, 5),
                (0, 4),
                (1, 3),
                (1, 5),
                (2, 4),
            ],
        )
        .expect("valid fixture"),
        FixtureId::ZK2P3Fig4 => zykov_sum(&[complete(2), path(3)])
            .expect("two nonempty operands")
            .into_graph(),
        FixtureId::ZP3P3Fig4 => zykov_sum(&[path(3), path(3)])
            .expect("two nonempty operands")
            .into_graph(),
        FixtureId::CoronaFig5 => corona(&corona_fig5_host(), &corona_fig5_parts())
            .expect("one operand per host vertex")
            .into_graph()
            // v1..v4, then K3 = {y,5,6}, K2 = {u,8}, P3 = x-10-z, K1 = {t}.
            .with_labels(
                [
                    "v1", "v2", "v3", "v4", "y", "5", "6", "u", "8", "x", "10", "z", "t",
                ]
                .iter()
                .map(|s| s.to_string())
                .collect(),
            )
            .expect("13 labels"),
    }
}
