use euledit_core::editors::pairing_witnessed;
use euledit_core::oracle::{enumerate_graphs, exact_edit_number, exact_edit_number_iddfs};
use euledit_core::{
    apply_ops, eulerize, parity_lower_bound, plan_edit, plan_extend, plan_reduce, sample_gnp, EditKind,
    EditMode, EditPlan, Error, Graph, OracleValue, Seed,
};
use proptest::prelude::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut g = Graph::new(n);
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        g.insert_edge(u, v);
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

/// Reachability by Warshall's closure over the adjacency matrix.
fn connected_by_closure(g: &Graph) -> bool {
    let n = g.n();
    let mut reach: Vec<Vec<bool>> = (0..n)
        .map(|u| (0..n).map(|v| u == v || g.has_edge(u, v)).collect())
        .collect();
    for k in 0..n {
        let via = reach[k].clone();
        for row in reach.iter_mut() {
            if row[k] {
                for (cell, &hop) in row.iter_mut().zip(&via) {
                    *cell |= hop;
                }
            }
        }
    }
    (0..n).all(|v| reach[0][v])
}

fn parity_ops(plan: &EditPlan) -> &[euledit_core::EditOp] {
    &plan.ops[..plan.ops.len() - plan.repair_ops]
}

fn check_planner(g: &Graph, plan: &EditPlan, mode: EditMode) {
    assert_eq!(plan.mode, mode);
    assert!(plan.ops.iter().all(|op| mode.allows(op.kind)));
    assert_eq!(plan.lower_bound, parity_lower_bound(g));
    let toggled = apply_ops(g, &plan.ops).unwrap();
    assert_eq!(toggled.odd_count(), 0);
    assert!(plan.achieved() >= plan.lower_bound);
}

#[test]
fn bfs_and_iddfs_agree_on_four_vertices() {
    for g in enumerate_graphs(4).unwrap() {
        for mode in EditMode::ALL {
            let a = exact_edit_number(&g, mode, 6).unwrap();
            let b = exact_edit_number_iddfs(&g, mode, 6).unwrap();
            assert_eq!(a.value, b.value, "{g:?} {mode}");
            if let Some(w) = a.witness {
                assert!(apply_ops(&g, &w.ops).unwrap().is_eulerian());
            }
        }
    }
}

#[test]
fn bfs_and_iddfs_agree_on_sampled_five_vertex_graphs() {
    for i in 0..60 {
        let g = sample_gnp(5, 0.5, Seed(17).for_trial(i)).unwrap();
        for mode in EditMode::ALL {
            let a = exact_edit_number(&g, mode, 5).unwrap().value;
            let b = exact_edit_number_iddfs(&g, mode, 5).unwrap().value;
            if a != OracleValue::BudgetExhausted && b != OracleValue::BudgetExhausted {
                assert_eq!(a, b, "{g:?} {mode}");
            }
        }
    }
}

#[test]
fn eulerize_matches_oracle_feasibility_up_to_five() {
    let mut reduce_misses = 0;
    let mut reduce_feasible = 0;
    for n in 1..=5 {
        for g in enumerate_graphs(n).unwrap() {
            for mode in EditMode::ALL {
                let oracle = exact_edit_number(&g, mode, 10).unwrap().value;
                let planned = eulerize(&g, mode);
                if let Ok((h, plan)) = &planned {
                    assert!(h.is_eulerian());
                    assert!(matches!(oracle, OracleValue::Exact(k) if k <= plan.achieved()));
                }
                match mode {
                    EditMode::Edit | EditMode::Extend => {
                        assert_eq!(planned.is_ok(), oracle != OracleValue::Infeasible, "{g:?} {mode}");
                    }
                    EditMode::Reduce => {
                        if oracle != OracleValue::Infeasible {
                            reduce_feasible += 1;
                            reduce_misses += usize::from(planned.is_err());
                        } else {
                            assert!(planned.is_err());
                        }
                    }
                }
            }
        }
    }
    println!("reduce planner missed {reduce_misses} of {reduce_feasible} reducible graphs");
    assert!(reduce_misses * 20 <= reduce_feasible);
}

#[test]
fn witnessed_edit_plans_are_optimal_on_five_vertices() {
    for g in enumerate_graphs(5).unwrap().filter(Graph::is_connected) {
        let plan = plan_edit(&g);
        if pairing_witnessed(&g, &plan) {
            let (h, full) = eulerize(&g, EditMode::Edit).unwrap();
            assert!(h.is_eulerian());
            assert_eq!(full.repair_ops, 0);
            assert_eq!(full.achieved(), plan.lower_bound);
        }
    }
}

#[test]
fn infeasible_results_use_the_mode_error() {
    assert!(matches!(eulerize(&Graph::complete(4), EditMode::Extend), Err(Error::NotExtendable(_))));
    assert!(matches!(eulerize(&Graph::path(3), EditMode::Reduce), Err(Error::NotReducible(_))));
    assert!(eulerize(&Graph::new(2), EditMode::Edit).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 400,
        failure_persistence: None,
        ..ProptestConfig::default()
    })]

    #[test]
    fn planners_fix_parity(g in arb_graph(14)) {
        check_planner(&g, &plan_edit(&g), EditMode::Edit);
        if let Ok(plan) = plan_extend(&g) {
            check_planner(&g, &plan, EditMode::Extend);
        }
        if let Ok(plan) = plan_reduce(&g) {
            check_planner(&g, &plan, EditMode::Reduce);
            if g.is_connected() {
                prop_assert!(apply_ops(&g, &plan.ops).unwrap().is_eulerian());
            }
        }
    }

    #[test]
    fn eulerize_results_have_circuits(g in arb_graph(14)) {
        for mode in EditMode::ALL {
            if let Ok((h, plan)) = eulerize(&g, mode) {
                prop_assert_eq!(&apply_ops(&g, &plan.ops).unwrap(), &h);
                prop_assert!(plan.ops.iter().all(|op| mode.allows(op.kind)));
                prop_assert!(plan.repair_ops <= plan.ops.len());
                prop_assert_eq!(apply_ops(&g, parity_ops(&plan)).unwrap().odd_count(), 0);
                let circuit = h.euler_circuit().unwrap();
                prop_assert_eq!(circuit.len(), h.m());
                prop_assert!(circuit.verify(&h).is_ok());
            }
        }
    }

    #[test]
    fn edit_mode_always_succeeds_from_three_vertices(g in arb_graph(14)) {
        prop_assume!(g.n() >= 3);
        prop_assert!(eulerize(&g, EditMode::Edit).is_ok());
    }

    #[test]
    fn inverse_plan_restores_the_graph(g in arb_graph(12)) {
        let plan = plan_edit(&g);
        let h = apply_ops(&g, &plan.ops).unwrap();
        let back: Vec<_> = plan.ops.iter().rev().map(|op| op.inverse()).collect();
        prop_assert_eq!(apply_ops(&h, &back).unwrap(), g);
    }

    #[test]
    fn removals_only_remove(g in arb_graph(14)) {
        if let Ok(plan) = plan_reduce(&g) {
            prop_assert!(plan.ops.iter().all(|op| op.kind == EditKind::Remove && g.has_edge(op.edge.u(), op.edge.v())));
        }
    }

    #[test]
    fn complement_is_an_involution(g in arb_graph(16)) {
        let c = g.complement();
        prop_assert_eq!(c.m() + g.m(), g.n() * g.n().saturating_sub(1) / 2);
        prop_assert_eq!(c.complement(), g);
    }

    #[test]
    fn connectivity_matches_closure(g in arb_graph(16)) {
        prop_assert_eq!(g.is_connected(), g.n() == 0 || connected_by_closure(&g));
    }

    #[test]
    fn odd_count_is_even(g in arb_graph(20)) {
        prop_assert_eq!(g.odd_count() % 2, 0);
        prop_assert_eq!(g.degree_sequence().iter().sum::<usize>(), 2 * g.m());
    }

    #[test]
    fn sampling_is_a_function_of_the_seed(n in 0usize..40, p in 0.0f64..=1.0, s in any::<u64>()) {
        let a = sample_gnp(n, p, Seed(s)).unwrap();
        prop_assert_eq!(&a, &sample_gnp(n, p, Seed(s)).unwrap());
        prop_assert_eq!(a.n(), n);
    }
}

#[test]
fn random_samples_satisfy_planner_invariants() {
    for i in 0..1000 {
        let n = 3 + (i as usize % 40);
        let g = sample_gnp(n, 0.5, Seed(99).for_trial(i)).unwrap();
        check_planner(&g, &plan_edit(&g), EditMode::Edit);
        for mode in EditMode::ALL {
            if let Ok((h, _)) = eulerize(&g, mode) {
                assert!(h.is_eulerian());
            }
        }
    }
}
