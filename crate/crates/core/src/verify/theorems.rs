use crate::brute;
use crate::family::SetFamily;
use crate::graph::{complete, edgeless, Graph};
use crate::greedoid::{is_greedoid, GreedoidVerdict};
use crate::io::to_graph6;
use crate::ops::{composition, corona, disjoint_union, zykov_sum, CompositeGraph, OpsError};
use crate::set::VertexSet;
use crate::stable::{alpha, enumerate_stable_sets, is_stable, max2, omega, psi};

use super::{Stats, TheoremId, TheoremReport, VerifyError, Witness};

/// Composite graphs up to this order also get Ψ from the all-subsets oracle.
pub const CROSS_CHECK_MAX_ORDER: usize = 18;

type Check = Result<(), Witness>;

fn greedoid_verdict(f: &SetFamily) -> GreedoidVerdict {
    is_greedoid(f).expect("Ψ always contains the empty set")
}

/// Ψ(g), compared against the oracle when `g` is small enough.
fn psi_checked(g: &Graph, stats: &mut Stats) -> Result<SetFamily, Witness> {
    let fam = psi(g);
    if g.order() <= CROSS_CHECK_MAX_ORDER {
        stats.oracle_compared = true;
        let naive = brute::psi_naive(g);
        if let Some(set) = fam.symmetric_difference(&naive).first() {
            return Err(Witness::OracleMismatch {
                graph: to_graph6(g),
                set: (*set).clone(),
                fast: fam.contains(set),
            });
        }
    }
    Ok(fam)
}

fn describe(label: &str, graphs: &[&Graph]) -> String {
    let shapes: Vec<String> = graphs
        .iter()
        .map(|g| format!("n={} m={}", g.order(), g.edge_count()))
        .collect();
    format!("{label}[{}]", shapes.join("; "))
}

fn report(
    theorem: TheoremId,
    label: &str,
    graphs: &[&Graph],
    stats: Stats,
    outcome: Check,
) -> TheoremReport {
    TheoremReport {
        theorem,
        input: describe(label, graphs),
        inputs: graphs.iter().map(|g| to_graph6(g)).collect(),
        holds: outcome.is_ok(),
        witness: outcome.err(),
        stats,
        seed: None,
        notes: Vec::new(),
    }
}

fn nemhauser_trotter(g: &Graph, stats: &mut Stats) -> Check {
    let fam = psi_checked(g, stats)?;
    stats.family_size = fam.len();
    let maximum = omega(g);
    for s in &fam {
        stats.sets_checked += 1;
        if !maximum.iter().any(|m| s.is_subset(m)) {
            return Err(Witness::NotExtendable {
                graph: to_graph6(g),
                set: s.clone(),
            });
        }
    }
    Ok(())
}

/// Every member of Ψ(g) lies inside some maximum stable set.
pub fn verify_nemhauser_trotter(g: &Graph) -> TheoremReport {
    let mut stats = Stats::default();
    let outcome = nemhauser_trotter(g, &mut stats);
    report(TheoremId::T1Nt, "graph", &[g], stats, outcome)
}

/// Ψ(t) is a greedoid for a tree `t`.
pub fn verify_tree_greedoid(t: &Graph) -> Result<TheoremReport, VerifyError> {
    if !t.is_tree() {
        return Err(VerifyError::NotATree {
            order: t.order(),
            edges: t.edge_count(),
        });
    }
    let mut stats = Stats::default();
    let outcome = (|| {
        let fam = psi_checked(t, &mut stats)?;
        stats.family_size = fam.len();
        stats.sets_checked = fam.len() as u64;
        let verdict = greedoid_verdict(&fam);
        if verdict.is_greedoid() {
            Ok(())
        } else {
            Err(Witness::Greedoid {
                graph: to_graph6(t),
                verdict,
                predicted: true,
            })
        }
    })();
    Ok(report(TheoremId::T2Tree, "tree", &[t], stats, outcome))
}

fn part_families(parts: &[Graph]) -> (Vec<SetFamily>, Vec<bool>) {
    let fams: Vec<SetFamily> = parts.iter().map(psi).collect();
    let greedoids = fams
        .iter()
        .map(|f| greedoid_verdict(f).is_greedoid())
        .collect();
    (fams, greedoids)
}

fn union_prop(parts: &[Graph], u: &CompositeGraph, stats: &mut Stats) -> Check {
    let g = u.graph();
    let fam = psi_checked(g, stats)?;
    stats.family_size = fam.len();
    let (part_psi, part_greedoid) = part_families(parts);

    // Members are stable, and stability of S is stability of each S ∩ V(G_i),
    // so scanning the stable sets covers both directions of the criterion.
    for s in enumerate_stable_sets(g) {
        stats.sets_checked += 1;
        let predicted = (0..parts.len())
            .all(|i| part_psi[i].contains(&u.restrict(&s, i).expect("index in range")));
        let member = fam.contains(&s);
        if predicted != member {
            return Err(Witness::Membership {
                graph: to_graph6(g),
                set: s,
                member,
                predicted,
                rule: "union_components",
            });
        }
    }

    let predicted = part_greedoid.iter().all(|&b| b);
    let verdict = greedoid_verdict(&fam);
    if verdict.is_greedoid() != predicted {
        return Err(Witness::Greedoid {
            graph: to_graph6(g),
            verdict,
            predicted,
        });
    }
    Ok(())
}

/// For a disjoint union `G`: `S ∈ Ψ(G)` iff every `S ∩ V(G_i) ∈ Ψ(G_i)`, and
/// Ψ(G) is a greedoid iff every Ψ(G_i) is.
pub fn verify_union_prop(parts: &[Graph]) -> Result<TheoremReport, VerifyError> {
    let u = disjoint_union(parts)?;
    let mut stats = Stats::default();
    let outcome = union_prop(parts, &u, &mut stats);
    let graphs: Vec<&Graph> = parts.iter().collect();
    let mut r = report(TheoremId::P1Union, "union", &graphs, stats, outcome);
    r.notes
        .push("membership criterion: S ∩ V(G_i) ∈ Ψ(G_i) for every component".into());
    Ok(r)
}

fn zykov_bound(parts: &[Graph], z: &Graph, stats: &mut Stats) -> Check {
    let fam = psi_checked(z, stats)?;
    stats.family_size = fam.len();
    stats.sets_checked = fam.len() as u64;
    let alphas: Vec<usize> = parts.iter().map(alpha).collect();
    let bound = max2(&alphas).expect("at least two operands");
    match fam.iter().find(|s| !s.is_empty() && s.len() < bound) {
        Some(s) => Err(Witness::SizeBound {
            graph: to_graph6(z),
            set: s.clone(),
            bound,
        }),
        None => Ok(()),
    }
}

/// Nonempty members of Ψ(Z[G_1..G_p]) have at least max₂{α(G_i)} vertices,
/// the second-largest α counted with multiplicity.
pub fn verify_zykov_bound(parts: &[Graph]) -> Result<TheoremReport, VerifyError> {
    let z = zykov_sum(parts)?;
    let mut stats = Stats::default();
    let outcome = zykov_bound(parts, z.graph(), &mut stats);
    let graphs: Vec<&Graph> = parts.iter().collect();
    Ok(report(
        TheoremId::L4ZykovBound,
        "zykov",
        &graphs,
        stats,
        outcome,
    ))
}

fn zykov_characterization(
    parts: &[Graph],
    z: &CompositeGraph,
    stats: &mut Stats,
    notes: &mut Vec<String>,
) -> Check {
    let g = z.graph();
    let fam = psi_checked(g, stats)?;
    stats.family_size = fam.len();
    stats.sets_checked = fam.len() as u64;
    let verdict = greedoid_verdict(&fam);

    if alpha(g) == 1 {
        notes.push("α(Z) = 1: Ψ(Z) must be ∅ plus all singletons".into());
        let expected = SetFamily::new(
            g.order(),
            std::iter::once(g.empty_set())
                .chain((0..g.order()).map(|v| VertexSet::from_indices(g.order(), [v]))),
        );
        if let Some(s) = fam.symmetric_difference(&expected).first() {
            return Err(Witness::Membership {
                graph: to_graph6(g),
                set: (*s).clone(),
                member: fam.contains(s),
                predicted: expected.contains(s),
                rule: "zykov_singletons",
            });
        }
        if !verdict.is_greedoid() {
            return Err(Witness::Greedoid {
                graph: to_graph6(g),
                verdict,
                predicted: true,
            });
        }
        return Ok(());
    }

    let (part_psi, part_greedoid) = part_families(parts);
    let non_complete: Vec<usize> = (0..parts.len())
        .filter(|&i| !parts[i].is_complete())
        .collect();
    let carried = match non_complete[..] {
        [k] => {
            let lifted = SetFamily::new(
                g.order(),
                part_psi[k]
                    .iter()
                    .map(|s| z.lift(k, s).expect("operand index in range")),
            );
            notes.push(format!("unique non-complete operand: {k}"));
            lifted == fam
        }
        _ => {
            notes.push(format!("{} non-complete operands", non_complete.len()));
            false
        }
    };
    let predicted = part_greedoid.iter().all(|&b| b) && carried;
    if verdict.is_greedoid() != predicted {
        return Err(Witness::Greedoid {
            graph: to_graph6(g),
            verdict,
            predicted,
        });
    }
    Ok(())
}

/// For α(Z) > 1: Ψ(Z) is a greedoid iff all Ψ(G_i) are greedoids, exactly
/// one G_k is not complete, and Ψ(Z) = Ψ(G_k). For α(Z) = 1 (all parts
/// complete): Ψ(Z) is ∅ plus the singletons, a greedoid.
pub fn verify_zykov_characterization(parts: &[Graph]) -> Result<TheoremReport, VerifyError> {
    let z = zykov_sum(parts)?;
    let mut stats = Stats::default();
    let mut notes = Vec::new();
    let outcome = zykov_characterization(parts, &z, &mut stats, &mut notes);
    let graphs: Vec<&Graph> = parts.iter().collect();
    let mut r = report(TheoremId::P2Zykov, "zykov", &graphs, stats, outcome);
    r.notes = notes;
    Ok(r)
}

/// Precomputed pieces for the corona membership rule.
struct CoronaRule<'a> {
    host: &'a Graph,
    comp: CompositeGraph,
    part_psi: Vec<SetFamily>,
    part_complete: Vec<bool>,
}

impl<'a> CoronaRule<'a> {
    fn new(host: &'a Graph, parts: &[Graph]) -> Result<Self, VerifyError> {
        let comp = corona(host, parts)?;
        Ok(Self {
            host,
            comp,
            part_psi: parts.iter().map(psi).collect(),
            part_complete: parts.iter().map(Graph::is_complete).collect(),
        })
    }

    /// Every restriction `S ∩ V(H_i)` is in Ψ(H_i).
    fn restrictions_ok(&self, s: &VertexSet) -> bool {
        (0..self.part_psi.len())
            .all(|i| self.part_psi[i].contains(&self.comp.restrict(s, i).expect("index in range")))
    }

    /// Each host vertex `v_i ∈ S` has complete `H_i`, and every host
    /// neighbour `v_k` of `v_i` has `S ∩ V(H_k) ≠ ∅`.
    fn host_vertices_ok(&self, s: &VertexSet) -> bool {
        self.comp.restrict_host(s).iter().all(|i| {
            self.part_complete[i]
                && self
                    .host
                    .neighbors(i)
                    .iter()
                    .all(|k| !self.comp.restrict(s, k).expect("index in range").is_empty())
        })
    }

    fn predicts(&self, s: &VertexSet) -> bool {
        is_stable(self.comp.graph(), s) && self.restrictions_ok(s) && self.host_vertices_ok(s)
    }
}

/// Membership of `s` in Ψ(X ∘ {H_1..H_n}) decided from the parts: `s` is
/// stable, each `s ∩ V(H_i)` is in Ψ(H_i), and each host vertex `v_i ∈ s`
/// has complete `H_i` with `s` meeting `H_k` for all host neighbours `v_k`.
/// `s` is in corona coordinates (host first, then the H_i in order).
pub fn corona_psi_characterization(
    host: &Graph,
    parts: &[Graph],
    s: &VertexSet,
) -> Result<bool, VerifyError> {
    if host.order() < 2 {
        return Err(VerifyError::HostTooSmall(host.order()));
    }
    let rule = CoronaRule::new(host, parts)?;
    let n = rule.comp.graph().order();
    if s.universe() != n {
        return Err(VerifyError::SetWidth {
            expected: n,
            found: s.universe(),
        });
    }
    Ok(rule.predicts(s))
}

/// Checks the four parts of the corona membership lemma, one report each
/// (ids `L3_CORONA_I` to `L3_CORONA_IV`):
///
/// 1. lifted members of each Ψ(H_i) are members of Ψ(G);
/// 2. a member containing `v_i` has complete `H_i` and meets `H_k` for every
///    host neighbour `v_k`;
/// 3. members restrict to members of every Ψ(H_i);
/// 4. the combined rule agrees with Ψ(G) on every stable set of `G`.
pub fn verify_corona_lemma(
    host: &Graph,
    parts: &[Graph],
) -> Result<Vec<TheoremReport>, VerifyError> {
    if host.order() < 2 {
        return Err(VerifyError::HostTooSmall(host.order()));
    }
    let rule = CoronaRule::new(host, parts)?;
    let g = rule.comp.graph();
    let g6 = to_graph6(g);
    let mut graphs: Vec<&Graph> = vec![host];
    graphs.extend(parts);

    let mut base = Stats::default();
    let fam = match psi_checked(g, &mut base) {
        Ok(f) => f,
        Err(w) => {
            return Ok([
                TheoremId::L3CoronaI,
                TheoremId::L3CoronaII,
                TheoremId::L3CoronaIII,
                TheoremId::L3CoronaIV,
            ]
            .into_iter()
            .map(|t| report(t, "corona", &graphs, base.clone(), Err(w.clone())))
            .collect());
        }
    };
    base.family_size = fam.len();
    let membership = |set: &VertexSet, member: bool, rule: &'static str| Witness::Membership {
        graph: g6.clone(),
        set: set.clone(),
        member,
        predicted: !member,
        rule,
    };

    // (i)
    let mut stats = base.clone();
    let mut outcome = Ok(());
    'parts: for (i, part) in rule.part_psi.iter().enumerate() {
        for a in part {
            stats.sets_checked += 1;
            let lifted = rule.comp.lift(i, a).map_err(VerifyError::from)?;
            if !fam.contains(&lifted) {
                outcome = Err(membership(&lifted, false, "corona_part_lifts"));
                break 'parts;
            }
        }
    }
    let first = report(TheoremId::L3CoronaI, "corona", &graphs, stats, outcome);

    // (ii), (iii)
    let scan = |theorem: TheoremId, ok: &dyn Fn(&VertexSet) -> bool, name: &'static str| {
        let mut stats = base.clone();
        let outcome = fam
            .iter()
            .inspect(|_| stats.sets_checked += 1)
            .find(|s| !ok(s))
            .map_or(Ok(()), |s| Err(membership(s, true, name)));
        report(theorem, "corona", &graphs, stats, outcome)
    };
    let second = scan(
        TheoremId::L3CoronaII,
        &|s| rule.host_vertices_ok(s),
        "corona_host_vertex",
    );
    let third = scan(
        TheoremId::L3CoronaIII,
        &|s| rule.restrictions_ok(s),
        "corona_restriction",
    );

    // (iv): necessary and sufficient together, over every stable set.
    let mut stats = base.clone();
    let mut outcome = Ok(());
    for s in enumerate_stable_sets(g) {
        stats.sets_checked += 1;
        let member = fam.contains(&s);
        if rule.predicts(&s) != member {
            outcome = Err(membership(&s, member, "corona_characterization"));
            break;
        }
    }
    let fourth = report(TheoremId::L3CoronaIV, "corona", &graphs, stats, outcome);

    Ok(vec![first, second, third, fourth])
}

/// Ψ(X ∘ {H_1..H_n}) is a greedoid iff every Ψ(H_i) is. Reported as
/// `COR_CORONA` when all H_i are equal.
pub fn verify_corona_theorem(host: &Graph, parts: &[Graph]) -> Result<TheoremReport, VerifyError> {
    let comp = corona(host, parts)?;
    let g = comp.graph();
    let uniform = parts.windows(2).all(|w| w[0] == w[1]);
    let mut stats = Stats::default();
    let outcome = (|| {
        let fam = psi_checked(g, &mut stats)?;
        stats.family_size = fam.len();
        stats.sets_checked = fam.len() as u64;
        let (_, part_greedoid) = part_families(parts);
        let predicted = part_greedoid.iter().all(|&b| b);
        let verdict = greedoid_verdict(&fam);
        if verdict.is_greedoid() != predicted {
            return Err(Witness::Greedoid {
                graph: to_graph6(g),
                verdict,
                predicted,
            });
        }
        Ok(())
    })();
    let theorem = if uniform {
        TheoremId::CorCorona
    } else {
        TheoremId::TCorona
    };
    let mut graphs: Vec<&Graph> = vec![host];
    graphs.extend(parts);
    let mut r = report(theorem, "corona", &graphs, stats, outcome);
    if host.order() == 1 {
        r.notes.push("host has a single vertex".into());
    }
    Ok(r)
}

/// `composition(edgeless(p), parts)` is the disjoint union and
/// `composition(complete(p), parts)` the Zykov sum, and the greedoid
/// verdicts on both agree with the union and Zykov checks.
pub fn verify_composition_specializations(parts: &[Graph]) -> Result<TheoremReport, VerifyError> {
    if parts.len() < 2 {
        return Err(OpsError::TooFewOperands {
            op: "composition specialization",
            min: 2,
            found: parts.len(),
        }
        .into());
    }
    let p = parts.len();
    let over_edgeless = composition(&edgeless(p), parts)?;
    let over_complete = composition(&complete(p), parts)?;
    let union = disjoint_union(parts)?;
    let zykov = zykov_sum(parts)?;
    let graphs: Vec<&Graph> = parts.iter().collect();

    let structural = [
        (
            over_edgeless.graph(),
            union.graph(),
            "edgeless_host_is_union",
        ),
        (
            over_complete.graph(),
            zykov.graph(),
            "complete_host_is_zykov",
        ),
    ];
    for (left, right, relation) in structural {
        if left != right {
            let w = Witness::Structure {
                left: to_graph6(left),
                right: to_graph6(right),
                relation,
            };
            return Ok(report(
                TheoremId::C4CompositionSpecialize,
                "compose",
                &graphs,
                Stats::default(),
                Err(w),
            ));
        }
    }

    let mut stats = Stats::default();
    let mut notes = Vec::new();
    let outcome = union_prop(parts, &over_edgeless, &mut stats).and_then(|()| {
        let mut zstats = Stats::default();
        let r = zykov_characterization(parts, &over_complete, &mut zstats, &mut notes);
        stats.sets_checked += zstats.sets_checked;
        stats.family_size += zstats.family_size;
        stats.oracle_compared &= zstats.oracle_compared;
        r
    });
    let mut r = report(
        TheoremId::C4CompositionSpecialize,
        "compose",
        &graphs,
        stats,
        outcome,
    );
    r.notes = notes;
    Ok(r)
}
