use proptest::prelude::*;

use linksgould::braid::{markov_perturb, markov_perturb_bounded, BraidWord};
use linksgould::hecke::quotient::lg4_irreps;
use linksgould::rmatrix::lg_invariant;
use linksgould::trace::{solve_trace_coeffs, TraceCoeffs};

fn word(n: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    let g = n as i32 - 1;
    prop::collection::vec((1..=g, any::<bool>()), 0..=max_len)
        .prop_map(move |ls| BraidWord::new(n, ls.into_iter().map(|(i, s)| if s { i } else { -i }).collect()).unwrap())
}

fn trace() -> &'static TraceCoeffs {
    use std::sync::OnceLock;
    static T: OnceLock<TraceCoeffs> = OnceLock::new();
    T.get_or_init(|| solve_trace_coeffs(&lg4_irreps(1).unwrap(), 1, 20).unwrap().0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn components_survive_markov_moves(w in word(3, 8), seed in any::<u64>(), steps in 0usize..12) {
        prop_assert_eq!(markov_perturb(&w, seed, steps).closure_components(), w.closure_components());
    }

    #[test]
    fn writhe_changes_only_by_stabilization(w in word(3, 8), seed in any::<u64>()) {
        let (p, log) = markov_perturb_bounded(&w, seed, 10, 6);
        let stab = log.iter().filter(|m| m.is_stabilization()).count() as i64;
        prop_assert!((p.writhe() - w.writhe()).abs() <= stab);
    }

    #[test]
    fn invariant_survives_markov_moves(w in word(3, 6), seed in any::<u64>()) {
        let (p, _) = markov_perturb_bounded(&w, seed, 5, 5);
        prop_assert_eq!(lg_invariant(&p).unwrap(), lg_invariant(&w).unwrap());
    }

    #[test]
    fn trace_is_cyclic(x in word(4, 4), y in word(4, 4), v in prop::sample::select(vec![[2i64, 3, 5], [7, 4, 11], [3, 13, 6]])) {
        let t = trace();
        let xy = x.concat(&y);
        let yx = y.concat(&x);
        prop_assert_eq!(t.tr4_at(xy.letters(), v), t.tr4_at(yx.letters(), v));
    }
}
