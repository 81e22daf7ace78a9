//! Seeded and exhaustive sweeps over generated inputs.

use rayon::prelude::*;

use crate::fixtures::{corona_fig5_host, corona_fig5_parts, named_fixture, FixtureId};
use crate::generators::{all_graphs, labeled_trees, random_graph, random_tree};
use crate::graph::{complete, edgeless, path, star, Graph};
use crate::rng::{seeded, SeededRng};
use rand::Rng;

use super::theorems::{
    verify_composition_specializations, verify_corona_lemma, verify_corona_theorem,
    verify_nemhauser_trotter, verify_tree_greedoid, verify_union_prop, verify_zykov_bound,
    verify_zykov_characterization,
};
use super::{TheoremId, TheoremReport, VerifyError};

/// Largest order with an exhaustive non-isomorphic graph enumeration.
const EXHAUSTIVE_GRAPH_MAX: usize = 9;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepConfig {
    /// Bound on the order of the graph under test (the composite graph for
    /// constructions).
    pub max_order: usize,
    /// Number of random instances; ignored by exhaustive sweeps.
    pub count: usize,
    pub seed: u64,
    pub exhaustive: bool,
}

/// The inputs of one check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Instance {
    Graph(Graph),
    Parts(Vec<Graph>),
    Corona { host: Graph, parts: Vec<Graph> },
}

impl Instance {
    pub fn run(&self, theorem: TheoremId) -> Result<Vec<TheoremReport>, VerifyError> {
        use TheoremId::*;
        Ok(match (theorem, self) {
            (T1Nt, Instance::Graph(g)) => vec![verify_nemhauser_trotter(g)],
            (T2Tree, Instance::Graph(t)) => vec![verify_tree_greedoid(t)?],
            (P1Union, Instance::Parts(p)) => vec![verify_union_prop(p)?],
            (L4ZykovBound, Instance::Parts(p)) => vec![verify_zykov_bound(p)?],
            (P2Zykov, Instance::Parts(p)) => vec![verify_zykov_characterization(p)?],
            (C4CompositionSpecialize, Instance::Parts(p)) => {
                vec![verify_composition_specializations(p)?]
            }
            (t, Instance::Corona { host, parts }) if t.is_corona_lemma() => {
                verify_corona_lemma(host, parts)?
            }
            (TCorona | CorCorona, Instance::Corona { host, parts }) => {
                vec![verify_corona_theorem(host, parts)?]
            }
            (t, _) => {
                return Err(VerifyError::InstanceShape {
                    theorem: t,
                    expected: expected_shape(t),
                })
            }
        })
    }
}

/// What an instance for `theorem` looks like, for error messages.
pub fn expected_shape(theorem: TheoremId) -> &'static str {
    match theorem {
        TheoremId::T1Nt => "one graph",
        TheoremId::T2Tree => "one tree",
        TheoremId::P1Union
        | TheoremId::L4ZykovBound
        | TheoremId::P2Zykov
        | TheoremId::C4CompositionSpecialize => "two or more operand graphs",
        _ => "a host graph followed by one operand per host vertex",
    }
}

/// The worked examples for `theorem`.
pub fn fixture_instances(theorem: TheoremId) -> Vec<Instance> {
    use TheoremId::*;
    let p3 = || path(3);
    let w = || named_fixture(FixtureId::WFig1);
    let fig5 = || Instance::Corona {
        host: corona_fig5_host(),
        parts: corona_fig5_parts(),
    };
    match theorem {
        T1Nt => FixtureId::ALL
            .into_iter()
            .map(|id| Instance::Graph(named_fixture(id)))
            .chain([Instance::Graph(complete(5))])
            .collect(),
        T2Tree => vec![Instance::Graph(path(7)), Instance::Graph(star(5))],
        P1Union => vec![
            Instance::Parts(vec![p3(), p3()]),
            Instance::Parts(vec![w(), w()]),
        ],
        L4ZykovBound | C4CompositionSpecialize => vec![
            Instance::Parts(vec![p3(), p3()]),
            Instance::Parts(vec![complete(2), p3()]),
        ],
        P2Zykov => vec![
            Instance::Parts(vec![complete(2), p3()]),
            Instance::Parts(vec![p3(), p3()]),
            Instance::Parts(vec![complete(3), complete(2)]),
        ],
        t if t.is_corona_lemma() => vec![
            fig5(),
            Instance::Corona {
                host: path(2),
                parts: vec![complete(1), complete(1)],
            },
        ],
        TCorona => vec![fig5()],
        _ => vec![
            Instance::Corona {
                host: path(2),
                parts: vec![w(), w()],
            },
            Instance::Corona {
                host: path(3),
                parts: vec![p3(), p3(), p3()],
            },
        ],
    }
}

fn min_order(theorem: TheoremId) -> usize {
    match theorem {
        TheoremId::T1Nt | TheoremId::T2Tree => 1,
        t if t.is_corona_lemma() => 4,
        _ => 2,
    }
}

fn random_operand(n: usize, rng: &mut SeededRng) -> Graph {
    let seed = rng.random::<u64>();
    match rng.random_range(0..4) {
        0 => complete(n),
        1 => random_tree(n, seed),
        2 => edgeless(n),
        _ => {
            let p = 0.2 + 0.6 * rng.random::<f64>();
            random_graph(n, p, seed)
        }
    }
}

fn random_parts(count: usize, cap: usize, rng: &mut SeededRng) -> Vec<Graph> {
    (0..count)
        .map(|_| {
            let n = rng.random_range(1..=cap);
            random_operand(n, rng)
        })
        .collect()
}

/// A random instance for `theorem` whose graph under test has at most
/// `max_order` vertices.
///
/// Single graphs are `G(n, p)` with `p` uniform in `[0.1, 0.9]`; trees come
/// from random Prüfer sequences. Operands are complete, edgeless, trees or
/// `G(n, p)`. Products take 2 or 3 operands; corona hosts have 1 to 4
/// vertices (at least 2 for the membership lemma).
pub fn random_instance(
    theorem: TheoremId,
    max_order: usize,
    rng: &mut SeededRng,
) -> Result<Instance, VerifyError> {
    let min = min_order(theorem);
    if max_order < min {
        return Err(VerifyError::SweepTooSmall {
            theorem,
            min,
            found: max_order,
        });
    }
    use TheoremId::*;
    Ok(match theorem {
        T1Nt => {
            let n = rng.random_range(1..=max_order);
            let p = 0.1 + 0.8 * rng.random::<f64>();
            Instance::Graph(random_graph(n, p, rng.random::<u64>()))
        }
        T2Tree => {
            let n = rng.random_range(1..=max_order);
            Instance::Graph(random_tree(n, rng.random::<u64>()))
        }
        P1Union | L4ZykovBound | P2Zykov | C4CompositionSpecialize => {
            let p = rng.random_range(2..=3.min(max_order));
            Instance::Parts(random_parts(p, max_order / p, rng))
        }
        t => {
            let lo = if t.is_corona_lemma() { 2 } else { 1 };
            let h = rng.random_range(lo..=4.min(max_order / 2));
            let host = random_graph(h, 0.5, rng.random::<u64>());
            let cap = (max_order - h) / h;
            let parts = if t == CorCorona {
                let n = rng.random_range(1..=cap);
                vec![random_operand(n, rng); h]
            } else {
                random_parts(h, cap, rng)
            };
            Instance::Corona { host, parts }
        }
    })
}

/// Runs `theorem` on the random instance drawn from `seed`. Reports carry
/// the seed so the instance can be regenerated.
pub fn run_seeded(
    theorem: TheoremId,
    max_order: usize,
    seed: u64,
) -> Result<Vec<TheoremReport>, VerifyError> {
    let mut rng = seeded(seed);
    let instance = random_instance(theorem, max_order, &mut rng)?;
    let mut reports = instance.run(theorem)?;
    for r in &mut reports {
        r.seed = Some(seed);
    }
    Ok(reports)
}

/// Runs `theorem` over many inputs, in parallel, keeping instance order.
///
/// Random sweeps draw one instance seed per instance from a generator seeded
/// with `cfg.seed`. Exhaustive sweeps exist for `T1_NT` (every graph on
/// `1..=max_order` vertices up to isomorphism, `max_order <= 9`) and
/// `T2_TREE` (every labeled tree on `1..=max_order` vertices).
pub fn sweep(theorem: TheoremId, cfg: &SweepConfig) -> Result<Vec<TheoremReport>, VerifyError> {
    if cfg.exhaustive {
        let graphs: Vec<Graph> = match theorem {
            TheoremId::T1Nt if cfg.max_order <= EXHAUSTIVE_GRAPH_MAX => {
                (1..=cfg.max_order).flat_map(all_graphs).collect()
            }
            TheoremId::T2Tree => (1..=cfg.max_order).flat_map(labeled_trees).collect(),
            t => return Err(VerifyError::NoExhaustiveSweep(t)),
        };
        let nested: Result<Vec<_>, _> = graphs
            .into_par_iter()
            .map(|g| Instance::Graph(g).run(theorem))
            .collect();
        return Ok(nested?.into_iter().flatten().collect());
    }
    let mut master = seeded(cfg.seed);
    let seeds: Vec<u64> = (0..cfg.count).map(|_| master.random::<u64>()).collect();
    let nested: Result<Vec<_>, _> = seeds
        .into_par_iter()
        .map(|s| run_seeded(theorem, cfg.max_order, s))
        .collect();
    Ok(nested?.into_iter().flatten().collect())
}
