use proptest::prelude::*;

use psi_core::generators::{random_graph, random_tree};
use psi_core::stable::max2;
use psi_core::verify::{run_seeded, verify_nemhauser_trotter};
use psi_core::{
    accessibility_chain, alpha, check_accessibility, check_exchange, complete, composition,
    disjoint_union, edgeless, is_greedoid, psi, psi_min_size, zykov_sum, Graph, TheoremId,
};

fn small_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1usize..=max_n, 0.0f64..=1.0, any::<u64>()).prop_map(|(n, p, seed)| random_graph(n, p, seed))
}

fn operands(max_parts: usize, max_n: usize) -> impl Strategy<Value = Vec<Graph>> {
    proptest::collection::vec(small_graph(max_n), 2..=max_parts)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn random_trees_have_tree_shape(n in 1usize..=40, seed in any::<u64>()) {
        let t = random_tree(n, seed);
        prop_assert_eq!(t.edge_count(), n - 1);
        prop_assert!(t.is_connected());
    }

    #[test]
    fn greedoid_verdict_is_both_axioms(g in small_graph(10)) {
        let f = psi(&g);
        let v = is_greedoid(&f).unwrap();
        let both = check_accessibility(&f).unwrap().is_greedoid()
            && check_exchange(&f).unwrap().is_greedoid();
        prop_assert_eq!(v.is_greedoid(), both);
        // Same family, same verdict and witness on every run.
        prop_assert_eq!(&v, &is_greedoid(&f).unwrap());
        if v.is_greedoid() {
            for s in &f {
                let chain = accessibility_chain(&f, s).unwrap();
                prop_assert_eq!(chain.len(), s.len() + 1);
                prop_assert!(chain.iter().all(|c| f.contains(c)));
                prop_assert!(chain.windows(2).all(|w| w[0].is_subset(&w[1])));
            }
        }
    }

    #[test]
    fn trees_give_greedoids(n in 1usize..=14, seed in any::<u64>()) {
        let t = random_tree(n, seed);
        prop_assert!(is_greedoid(&psi(&t)).unwrap().is_greedoid());
    }

    #[test]
    fn members_extend_to_maximum_sets(g in small_graph(14)) {
        let r = verify_nemhauser_trotter(&g);
        prop_assert!(r.holds, "{:?}", r.witness);
    }

    #[test]
    fn specializations_are_exact(parts in operands(3, 5)) {
        let p = parts.len();
        prop_assert_eq!(
            composition(&edgeless(p), &parts).unwrap().into_graph(),
            disjoint_union(&parts).unwrap().into_graph()
        );
        prop_assert_eq!(
            composition(&complete(p), &parts).unwrap().into_graph(),
            zykov_sum(&parts).unwrap().into_graph()
        );
    }

    #[test]
    fn zykov_members_respect_second_largest_alpha(parts in operands(3, 5)) {
        let z = zykov_sum(&parts).unwrap().into_graph();
        let alphas: Vec<usize> = parts.iter().map(alpha).collect();
        prop_assert!(psi_min_size(&z).unwrap() >= max2(&alphas).unwrap());
    }

    #[test]
    fn seeded_theorem_instances_hold(idx in 0usize..TheoremId::ALL.len(), seed in any::<u64>()) {
        let t = TheoremId::ALL[idx];
        for r in run_seeded(t, 12, seed).unwrap() {
            // A violation must come with a witness the oracle confirms.
            if let Some(w) = &r.witness {
                prop_assert_eq!(w.recheck(), Some(true));
            }
            prop_assert!(r.holds, "{} seed {}: {:?}", r.theorem, seed, r.witness);
        }
    }
}
