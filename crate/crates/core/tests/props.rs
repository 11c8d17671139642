//! Property tests for the structural invariants.

use proptest::prelude::*;

use autboost::aut::{aut_brute_force, aut_group, equitable_refinement};
use autboost::graph::Graph;
use autboost::io::{emit_graph6, parse_graph6};
use autboost::perm::{closure_order, Permutation, DEFAULT_CLOSURE_CAP};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n, any::<u64>()).prop_map(|(n, seed)| {
        let mut state = seed | 1;
        let mut g = Graph::new(n).unwrap();
        for u in 0..n {
            for v in (u + 1)..n {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                if state >> 33 & 1 == 1 {
                    g.add_edge(u, v).unwrap();
                }
            }
        }
        g
    })
}

fn arb_perm(n: usize) -> impl Strategy<Value = Permutation> {
    Just(()).prop_perturb(move |_, mut rng| {
        let mut images: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            let j = rng.random_range(0..=i);
            images.swap(i, j);
        }
        Permutation::from_images(images).unwrap()
    })
}

proptest! {
    #[test]
    fn graph6_round_trip(g in arb_graph(50)) {
        let text = emit_graph6(&g);
        let back = parse_graph6(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(emit_graph6(&back), text);
    }

    #[test]
    fn complement_is_an_involution(g in arb_graph(30)) {
        prop_assert_eq!(g.complement().complement(), g.clone());
        prop_assert_eq!(g.is_complete(), g.complement().edge_count() == 0);
    }

    #[test]
    fn induced_on_everything_is_identity(g in arb_graph(30)) {
        let full = autboost::graph::VertexSet::full(g.n());
        prop_assert_eq!(g.induced_subgraph(&full).unwrap(), g);
    }

    #[test]
    fn compose_is_associative((a, b, c) in (arb_perm(7), arb_perm(7), arb_perm(7))) {
        let lhs = a.compose(&b.compose(&c).unwrap()).unwrap();
        let rhs = a.compose(&b).unwrap().compose(&c).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn identity_and_inverse_laws(p in arb_perm(9)) {
        let id = Permutation::identity(9);
        prop_assert_eq!(p.compose(&id).unwrap(), p.clone());
        prop_assert_eq!(id.compose(&p).unwrap(), p.clone());
        prop_assert_eq!(p.compose(&p.inverse()).unwrap(), id);
    }

    #[test]
    fn closure_invariant_under_generator_presentation((a, b) in (arb_perm(6), arb_perm(6))) {
        let fwd = closure_order(6, &[a.clone(), b.clone()], DEFAULT_CLOSURE_CAP).unwrap();
        let rev = closure_order(6, &[b.clone(), a.clone()], DEFAULT_CLOSURE_CAP).unwrap();
        let inv = closure_order(6, &[a.inverse(), b.inverse()], DEFAULT_CLOSURE_CAP).unwrap();
        prop_assert_eq!(fwd, rev);
        prop_assert_eq!(fwd, inv);
    }

    #[test]
    fn refinement_is_an_equitable_partition(g in arb_graph(20)) {
        prop_assume!(g.n() > 0);
        let cells = equitable_refinement(&g, &vec![(0..g.n()).collect()]);
        // cells partition the vertex set
        let mut all: Vec<usize> = cells.iter().flatten().copied().collect();
        all.sort_unstable();
        prop_assert_eq!(all, (0..g.n()).collect::<Vec<_>>());
        // within each cell, neighbor counts into every cell agree
        for cell in &cells {
            for other in &cells {
                let counts: Vec<usize> = cell
                    .iter()
                    .map(|&v| other.iter().filter(|&&u| g.has_edge(v, u)).count())
                    .collect();
                prop_assert!(counts.windows(2).all(|w| w[0] == w[1]));
            }
        }
    }

    #[test]
    fn solver_order_matches_brute_force(g in arb_graph(6)) {
        prop_assert_eq!(aut_group(&g).unwrap().order, aut_brute_force(&g).unwrap().order);
    }
}
