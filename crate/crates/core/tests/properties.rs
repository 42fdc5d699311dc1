use std::collections::HashSet;
use std::f64::consts::TAU;

use gsbound_core::bounds::{
    best_bipartite_lower_bound, bipartite_entanglement, independent_set_upper_bound,
    max_independent_set, schmidt_rank_oracle, witness_product_state,
};
use gsbound_core::named::{corpus, named_graph};
use gsbound_core::state::{
    amplitude, basis_amplitude, fidelity, product_overlap, symmetric_coefficients,
    symmetric_overlap, verify_stabilizer,
};
use gsbound_core::{Gf2Matrix, Graph, ProductState, VertexSet};
use proptest::prelude::*;
use proptest::strategy::ValueTree;

const TOL: f64 = 1e-12;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut g = Graph::edgeless(n).unwrap();
            let mut k = 0;
            for a in 0..n {
                for b in a + 1..n {
                    if bits[k] {
                        g.add_edge(a, b).unwrap();
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

fn product_state_strategy(n: usize) -> impl Strategy<Value = ProductState> {
    (
        proptest::collection::vec(0.0..=1.0f64, n),
        proptest::collection::vec(0.0..TAU, n),
    )
        .prop_map(|(p, phi)| ProductState::new(p, phi).unwrap())
}

/// Rank as log2 of the size of the row span, by listing every XOR of rows.
fn span_rank(rows: &[u64]) -> usize {
    let mut span = HashSet::new();
    for mask in 0..1u32 << rows.len() {
        let v = rows
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .fold(0u64, |acc, (_, r)| acc ^ r);
        span.insert(v);
    }
    span.len().trailing_zeros() as usize
}

fn brute_mis(g: &Graph) -> (usize, VertexSet) {
    let mut best = (0, VertexSet::EMPTY);
    for bits in 0..1u32 << g.n() {
        let s = VertexSet::from_bits(bits);
        if !g.is_independent(s) {
            continue;
        }
        if s.len() > best.0 || (s.len() == best.0 && s.lex_cmp(best.1).is_lt()) {
            best = (s.len(), s);
        }
    }
    best
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn parity_matches_edge_count(g in graph_strategy(8), bits in any::<u32>()) {
        let s = VertexSet::from_bits(bits).intersection(g.vertices());
        let vs: Vec<usize> = s.iter().collect();
        let mut count = 0;
        for (i, &a) in vs.iter().enumerate() {
            for &b in &vs[i + 1..] {
                count += g.has_edge(a, b) as u32;
            }
        }
        prop_assert_eq!(g.induced_edge_parity(s), count % 2);
    }

    #[test]
    fn toggle_keeps_invariants(g in graph_strategy(8), a in 0usize..8, b in 0usize..8) {
        prop_assume!(a < g.n() && b < g.n() && a != b);
        let t = g.toggle_edge(a, b).unwrap();
        // Rebuilding through the validating constructor checks symmetry and diagonal.
        prop_assert_eq!(Graph::from_adjacency(t.adjacency().to_vec()).unwrap(), t.clone());
        prop_assert_ne!(t.has_edge(a, b), g.has_edge(a, b));
        prop_assert_eq!(t.toggle_edge(a, b).unwrap(), g);
    }

    #[test]
    fn gf2_rank_matches_span_oracle(
        ncols in 0usize..=12,
        rows in proptest::collection::vec(any::<u64>(), 0..=12),
    ) {
        let m = Gf2Matrix::from_rows(rows, ncols);
        prop_assert_eq!(m.rank(), span_rank(m.rows()));
    }

    #[test]
    fn gf2_rank_permutation_invariant(
        rows in proptest::collection::vec(0u64..1 << 10, 1..=10),
        row_perm in Just((0..10).collect::<Vec<usize>>()).prop_shuffle(),
        col_perm in Just((0..10).collect::<Vec<usize>>()).prop_shuffle(),
    ) {
        let m = Gf2Matrix::from_rows(rows.clone(), 10);
        let permuted: Vec<u64> = row_perm
            .iter()
            .filter(|&&i| i < rows.len())
            .map(|&i| {
                (0..10).fold(0u64, |acc, j| acc | ((rows[i] >> j & 1) << col_perm[j]))
            })
            .collect();
        prop_assert_eq!(Gf2Matrix::from_rows(permuted, 10).rank(), m.rank());
    }

    #[test]
    fn stabilizers_hold_on_random_graphs(g in graph_strategy(8)) {
        for a in 0..g.n() {
            prop_assert!(verify_stabilizer(&g, a));
        }
    }

    #[test]
    fn basis_is_orthonormal(g in graph_strategy(4)) {
        let dim = 1u32 << g.n();
        for k in 0..dim {
            for k2 in 0..dim {
                let ip: f64 = (0..dim)
                    .map(|mu| {
                        let mu = VertexSet::from_bits(mu);
                        basis_amplitude(&g, VertexSet::from_bits(k), mu)
                            * basis_amplitude(&g, VertexSet::from_bits(k2), mu)
                    })
                    .sum();
                let expected = if k == k2 { 1.0 } else { 0.0 };
                prop_assert!((ip - expected).abs() < TOL);
            }
        }
    }

    #[test]
    fn symmetric_overlap_matches_product_overlap(
        g in graph_strategy(10),
        p in 0.0..=1.0f64,
        phi in 0.0..TAU,
    ) {
        let c = symmetric_coefficients(&g);
        let direct = product_overlap(&g, &ProductState::uniform(g.n(), p, phi).unwrap()).unwrap();
        prop_assert!((symmetric_overlap(&c, p, phi) - direct).norm() < TOL);
    }

    #[test]
    fn coefficient_invariants(g in graph_strategy(12)) {
        let c = symmetric_coefficients(&g);
        let c = c.as_slice();
        prop_assert_eq!(c[0], 1);
        if g.n() >= 1 {
            prop_assert_eq!(c[1], g.n() as i64);
        }
        prop_assert!(c.iter().map(|x| x.unsigned_abs()).sum::<u64>() <= 1 << g.n());
    }

    #[test]
    fn fidelity_conjugation_and_periodicity(
        (g, s) in graph_strategy(8).prop_flat_map(|g| {
            let n = g.n();
            (Just(g), product_state_strategy(n))
        })
    ) {
        let f = fidelity(&g, &s).unwrap();
        prop_assert!((0.0..=1.0 + TOL).contains(&f));
        let negated: Vec<f64> = s.phi().iter().map(|x| -x).collect();
        let conj = ProductState::new(s.p().to_vec(), negated).unwrap();
        prop_assert!((fidelity(&g, &conj).unwrap() - f).abs() < TOL);
        let shifted: Vec<f64> = s.phi().iter().map(|x| x + TAU).collect();
        let periodic = ProductState::new(s.p().to_vec(), shifted).unwrap();
        prop_assert!((fidelity(&g, &periodic).unwrap() - f).abs() < TOL);
        // Overlap conjugates exactly because the amplitudes are real.
        let z = product_overlap(&g, &s).unwrap();
        prop_assert!((product_overlap(&g, &conj).unwrap() - z.conj()).norm() < TOL);
    }

    #[test]
    fn mis_matches_brute_force(g in graph_strategy(16)) {
        let r = max_independent_set(&g);
        let (size, witness) = brute_mis(&g);
        prop_assert_eq!(r.size, size);
        prop_assert_eq!(r.witness, witness);
        prop_assert!(g.is_independent(r.witness));
        prop_assert_eq!(r.witness.len(), r.size);
    }

    #[test]
    fn witness_fidelity_for_random_independent_sets(g in graph_strategy(10), bits in any::<u32>()) {
        // Greedily thin a random set down to an independent one.
        let mut s = VertexSet::EMPTY;
        for v in VertexSet::from_bits(bits).intersection(g.vertices()).iter() {
            if g.neighbors(v).intersection(s).is_empty() {
                s.insert(v);
            }
        }
        let w = witness_product_state(&g, s).unwrap();
        let expected = (2f64).powi(-((g.n() - s.len()) as i32));
        prop_assert!((fidelity(&g, &w).unwrap() - expected).abs() < TOL);
    }

    #[test]
    fn cut_rank_matches_schmidt_oracle(g in graph_strategy(9), bits in any::<u32>()) {
        let side = VertexSet::from_bits(bits).intersection(g.vertices());
        prop_assume!(!side.is_empty() && side != g.vertices());
        let ebits = bipartite_entanglement(&g, side).unwrap().ebits;
        prop_assert_eq!(ebits, schmidt_rank_oracle(&g, side).unwrap());
        prop_assert!(ebits <= side.len().min(g.n() - side.len()));
    }
}

#[test]
fn normalization_on_corpus_and_larger_graphs() {
    let mut graphs: Vec<Graph> = corpus().into_iter().map(|(_, g)| g).collect();
    graphs.extend(["ring:11", "ring:12", "star:12", "edgeless:12"].map(|n| named_graph(n).unwrap()));
    for g in graphs {
        let norm: f64 = (0..1u32 << g.n())
            .map(|b| amplitude(&g, VertexSet::from_bits(b)).powi(2))
            .sum();
        assert!((norm - 1.0).abs() < TOL, "n={} norm={norm}", g.n());
    }
}

#[test]
fn petersen_coefficients_are_labeling_invariant() {
    let g = named_graph("petersen").unwrap();
    let reference = symmetric_coefficients(&g);
    let mut runner = proptest::test_runner::TestRunner::deterministic();
    let perms = Just((0..10).collect::<Vec<usize>>()).prop_shuffle();
    for _ in 0..10 {
        let perm = perms.new_tree(&mut runner).unwrap().current();
        let h = g.permuted(&perm).unwrap();
        assert_eq!(symmetric_coefficients(&h), reference, "perm {perm:?}");
    }
}

#[test]
fn corpus_sandwich_and_fidelity_ceiling() {
    let mut runner = proptest::test_runner::TestRunner::deterministic();
    for (name, g) in corpus() {
        let lower = best_bipartite_lower_bound(&g).unwrap().ebits;
        assert!(lower <= independent_set_upper_bound(&g), "{name}");
        let ceiling = (2f64).powi(-(lower as i32));
        let states = product_state_strategy(g.n());
        for _ in 0..100 {
            let s = states.new_tree(&mut runner).unwrap().current();
            let f = fidelity(&g, &s).unwrap();
            assert!(
                -f.log2() >= lower as f64 - 1e-9,
                "{name}: F={f} beats ceiling {ceiling}"
            );
        }
    }
}

#[test]
fn corpus_witness_states_reach_bound() {
    for (name, g) in corpus() {
        let mis = max_independent_set(&g);
        let w = witness_product_state(&g, mis.witness).unwrap();
        let expected = (2f64).powi(-((g.n() - mis.size) as i32));
        assert!((fidelity(&g, &w).unwrap() - expected).abs() < TOL, "{name}");
    }
}

#[test]
fn corpus_cut_rank_matches_oracle_exhaustively() {
    for (name, g) in corpus() {
        let n = g.n();
        for bits in 1..(1u32 << n) - 1 {
            let side = VertexSet::from_bits(bits);
            assert_eq!(
                bipartite_entanglement(&g, side).unwrap().ebits,
                schmidt_rank_oracle(&g, side).unwrap(),
                "{name} side {side}"
            );
        }
    }
}
