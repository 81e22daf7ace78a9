//! Machine checks of the structural results about Ψ: each check returns a
//! [`TheoremReport`] with a counterexample when the statement fails on the
//! given input.
//!
//! Reports are data. Callers decide what a failure means (the CLI maps it to
//! an exit code, the test suites to a test failure). Every witness carries
//! the graph in graph6 so it can be re-checked from scratch with
//! [`Witness::recheck`], which only uses the all-subsets oracle.

mod sweep;
mod theorems;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::brute::{self, ORACLE_MAX_ORDER};
use crate::greedoid::{is_greedoid, GreedoidVerdict};
use crate::io::parse_graph6_str;
use crate::ops::OpsError;
use crate::set::VertexSet;

pub use sweep::{
    expected_shape, fixture_instances, random_instance, run_seeded, sweep, Instance, SweepConfig,
};
pub use theorems::{
    corona_psi_characterization, verify_composition_specializations, verify_corona_lemma,
    verify_corona_theorem, verify_nemhauser_trotter, verify_tree_greedoid, verify_union_prop,
    verify_zykov_bound, verify_zykov_characterization, CROSS_CHECK_MAX_ORDER,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum TheoremId {
    /// Every local maximum stable set extends to a maximum stable set.
    #[serde(rename = "T1_NT")]
    T1Nt,
    /// Ψ of a tree is a greedoid.
    #[serde(rename = "T2_TREE")]
    T2Tree,
    /// Disjoint unions: membership by components, greedoid iff all parts are.
    #[serde(rename = "P1_UNION")]
    P1Union,
    /// Zykov sums: nonempty members are at least the second-largest α.
    #[serde(rename = "L4_ZYKOV_BOUND")]
    L4ZykovBound,
    /// Zykov sums: greedoid iff a unique non-complete part carries Ψ.
    #[serde(rename = "P2_ZYKOV")]
    P2Zykov,
    /// Coronas: Ψ(H_i) lifts into Ψ(G).
    #[serde(rename = "L3_CORONA_I")]
    L3CoronaI,
    /// Coronas: a host vertex in a member forces a complete H_i and hit neighbours.
    #[serde(rename = "L3_CORONA_II")]
    L3CoronaII,
    /// Coronas: members restrict to members of each Ψ(H_i).
    #[serde(rename = "L3_CORONA_III")]
    L3CoronaIII,
    /// Coronas: the restriction conditions are also sufficient.
    #[serde(rename = "L3_CORONA_IV")]
    L3CoronaIV,
    /// Coronas: Ψ(G) greedoid iff every Ψ(H_i) is.
    #[serde(rename = "T_CORONA")]
    TCorona,
    /// Uniform coronas `X ∘ H`: greedoid iff Ψ(H) is.
    #[serde(rename = "COR_CORONA")]
    CorCorona,
    /// Compositions over edgeless / complete hosts are unions / Zykov sums.
    #[serde(rename = "C4_COMPOSITION_SPECIALIZE")]
    C4CompositionSpecialize,
}

impl TheoremId {
    pub const ALL: [TheoremId; 12] = [
        TheoremId::T1Nt,
        TheoremId::T2Tree,
        TheoremId::P1Union,
        TheoremId::L4ZykovBound,
        TheoremId::P2Zykov,
        TheoremId::L3CoronaI,
        TheoremId::L3CoronaII,
        TheoremId::L3CoronaIII,
        TheoremId::L3CoronaIV,
        TheoremId::TCorona,
        TheoremId::CorCorona,
        TheoremId::C4CompositionSpecialize,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::T1Nt => "T1_NT",
            TheoremId::T2Tree => "T2_TREE",
            TheoremId::P1Union => "P1_UNION",
            TheoremId::L4ZykovBound => "L4_ZYKOV_BOUND",
            TheoremId::P2Zykov => "P2_ZYKOV",
            TheoremId::L3CoronaI => "L3_CORONA_I",
            TheoremId::L3CoronaII => "L3_CORONA_II",
            TheoremId::L3CoronaIII => "L3_CORONA_III",
            TheoremId::L3CoronaIV => "L3_CORONA_IV",
            TheoremId::TCorona => "T_CORONA",
            TheoremId::CorCorona => "COR_CORONA",
            TheoremId::C4CompositionSpecialize => "C4_COMPOSITION_SPECIALIZE",
        }
    }

    /// The four corona-lemma parts are always checked together.
    pub fn is_corona_lemma(self) -> bool {
        matches!(
            self,
            TheoremId::L3CoronaI
                | TheoremId::L3CoronaII
                | TheoremId::L3CoronaIII
                | TheoremId::L3CoronaIV
        )
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown theorem id `{0}`")]
pub struct UnknownTheorem(pub String);

impl FromStr for TheoremId {
    type Err = UnknownTheorem;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let upper = s.trim().to_ascii_uppercase();
        if upper == "L3_CORONA" {
            return Ok(TheoremId::L3CoronaI);
        }
        TheoremId::ALL
            .into_iter()
            .find(|t| t.name() == upper)
            .ok_or_else(|| UnknownTheorem(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Ops(#[from] OpsError),
    #[error("not a tree: {order} vertices, {edges} edges")]
    NotATree { order: usize, edges: usize },
    #[error("the corona membership rule needs a host with at least 2 vertices, got {0}")]
    HostTooSmall(usize),
    #[error("vertex set over {found} vertices, expected {expected}")]
    SetWidth { expected: usize, found: usize },
    #[error("{theorem} takes {expected}")]
    InstanceShape {
        theorem: TheoremId,
        expected: &'static str,
    },
    #[error("{0} has no exhaustive sweep")]
    NoExhaustiveSweep(TheoremId),
    #[error("{theorem} sweeps need instances of at least {min} vertices, got {found}")]
    SweepTooSmall {
        theorem: TheoremId,
        min: usize,
        found: usize,
    },
}

/// A counterexample, self-contained: graphs are carried as graph6.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// `set` is in Ψ(`graph`) but inside no maximum stable set.
    NotExtendable { graph: String, set: VertexSet },
    /// Membership of `set` in Ψ(`graph`) disagrees with the rule being checked.
    Membership {
        graph: String,
        set: VertexSet,
        member: bool,
        predicted: bool,
        rule: &'static str,
    },
    /// The greedoid verdict for Ψ(`graph`) disagrees with the predicted one.
    Greedoid {
        graph: String,
        verdict: GreedoidVerdict,
        predicted: bool,
    },
    /// A nonempty member of Ψ(`graph`) smaller than `bound`.
    SizeBound {
        graph: String,
        set: VertexSet,
        bound: usize,
    },
    /// Two constructions that should be identical are not.
    Structure {
        left: String,
        right: String,
        relation: &'static str,
    },
    /// The pruned Ψ enumeration and the all-subsets oracle disagree on `set`.
    OracleMismatch {
        graph: String,
        set: VertexSet,
        fast: bool,
    },
}

impl Witness {
    /// Re-derives the violation with the all-subsets oracle. `None` when the
    /// graph is too large for the oracle or the graph6 does not parse.
    pub fn recheck(&self) -> Option<bool> {
        let load = |g6: &str| {
            parse_graph6_str(g6)
                .ok()
                .filter(|g| g.order() <= ORACLE_MAX_ORDER)
        };
        Some(match self {
            Witness::NotExtendable { graph, set } => {
                let g = load(graph)?;
                brute::is_local_max_naive(&g, set)
                    && !brute::omega_naive(&g).iter().any(|m| set.is_subset(m))
            }
            Witness::Membership {
                graph,
                set,
                member,
                predicted,
                ..
            } => {
                let g = load(graph)?;
                brute::is_local_max_naive(&g, set) == *member && member != predicted
            }
            Witness::Greedoid {
                graph,
                verdict,
                predicted,
            } => {
                let g = load(graph)?;
                let actual = is_greedoid(&brute::psi_naive(&g)).ok()?;
                actual.is_greedoid() == verdict.is_greedoid() && actual.is_greedoid() != *predicted
            }
            Witness::SizeBound { graph, set, bound } => {
                let g = load(graph)?;
                !set.is_empty() && set.len() < *bound && brute::is_local_max_naive(&g, set)
            }
            Witness::Structure { left, right, .. } => {
                parse_graph6_str(left).ok()? != parse_graph6_str(right).ok()?
            }
            Witness::OracleMismatch { graph, set, fast } => {
                let g = load(graph)?;
                brute::is_local_max_naive(&g, set) != *fast
            }
        })
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Stats {
    /// Sets examined against the statement.
    pub sets_checked: u64,
    /// |Ψ| of the graph under test (composite graph for constructions).
    pub family_size: usize,
    /// Whether Ψ was also compared with the all-subsets oracle.
    pub oracle_compared: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub theorem: TheoremId,
    pub input: String,
    /// Input graphs in graph6, in argument order (corona host first).
    pub inputs: Vec<String>,
    pub holds: bool,
    pub witness: Option<Witness>,
    pub stats: Stats,
    pub seed: Option<u64>,
    pub notes: Vec<String>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{named_fixture, FixtureId};
    use crate::io::to_graph6;

    #[test]
    fn ids_round_trip() {
        for t in TheoremId::ALL {
            assert_eq!(t.name().parse::<TheoremId>().unwrap(), t);
            assert_eq!(
                serde_json::to_string(&t).unwrap(),
                format!("\"{}\"", t.name())
            );
        }
        assert_eq!(
            "l3_corona".parse::<TheoremId>().unwrap(),
            TheoremId::L3CoronaI
        );
        assert!("T9".parse::<TheoremId>().is_err());
    }

    #[test]
    fn recheck_confirms_real_violations_only() {
        let w = named_fixture(FixtureId::WFig1);
        let g6 = to_graph6(&w);
        let d = w.parse_set("{d}").unwrap();
        let eg = w.parse_set("{e,g}").unwrap();
        // {d} is not local-maximum; a rule predicting it is gets confirmed.
        let real = Witness::Membership {
            graph: g6.clone(),
            set: d.clone(),
            member: false,
            predicted: true,
            rule: "test",
        };
        assert_eq!(real.recheck(), Some(true));
        let bogus = Witness::Membership {
            graph: g6.clone(),
            set: d,
            member: true,
            predicted: false,
            rule: "test",
        };
        assert_eq!(bogus.recheck(), Some(false));
        // {e,g} extends to {b,e,g}, so this is not a counterexample.
        let not_extendable = Witness::NotExtendable {
            graph: g6.clone(),
            set: eg,
        };
        assert_eq!(not_extendable.recheck(), Some(false));
        let verdict = is_greedoid(&crate::stable::psi(&w)).unwrap();
        let greedoid = Witness::Greedoid {
            graph: g6.clone(),
            verdict,
            predicted: true,
        };
        assert_eq!(greedoid.recheck(), Some(true));
        let structure = Witness::Structure {
            left: g6.clone(),
            right: g6,
            relation: "test",
        };
        assert_eq!(structure.recheck(), Some(false));
    }

    #[test]
    fn witness_json_is_tagged() {
        let w = Witness::SizeBound {
            graph: "Bw".into(),
            set: VertexSet::from_indices(3, [1]),
            bound: 2,
        };
        assert_eq!(
            serde_json::to_string(&w).unwrap(),
            r#"{"kind":"size_bound","graph":"Bw","set":[1],"bound":2}"#
        );
        // K3 has singleton members, so a bound of 2 is genuinely violated.
        assert_eq!(w.recheck(), Some(true));
    }
}
