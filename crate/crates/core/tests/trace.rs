use num_rational::BigRational;

use linksgould::braid::BraidWord;
use linksgould::hecke::quotient::lg4_irreps;
use linksgould::rmatrix::lg_invariant;
use linksgould::trace::{crosscheck, solve_at, solve_trace_coeffs, table_entries, TraceCoeffs};

const TREFOIL: &str = "1 - t1 + t1^2 - t0 + 2*t0*t1 - t0*t1^2 + t0^2 - t0^2*t1";
const FIGURE_EIGHT: &str = "2*t0^-1*t1^-1 - 3*t0^-1 + t0^-1*t1 - 3*t1^-1 + 7 - 3*t1 + t0*t1^-1 - 3*t0 + 2*t0*t1";

fn trace() -> TraceCoeffs {
    let l = lg4_irreps(1).unwrap();
    solve_trace_coeffs(&l, 1, 20).unwrap().0
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

#[test]
fn table_entries_at_a_point() {
    let t = table_entries();
    // chi_8: c^2 b (ac+1)(ab+1) / (a (b-c)(b+c)(b a^2 - c^3)) at (2,3,5)
    assert_eq!(t[7].at([2, 3, 5]).unwrap(), q(25 * 3 * 11 * 7, 2 * -2 * 8 * (12 - 125)));
    // chi_10: cb(ac+1)(ab+1)(bc+a^2) / (a (b a^2 - c^3)(-b^3 + c a^2))
    assert_eq!(t[9].at([2, 3, 5]).unwrap(), q(15 * 11 * 7 * 19, 2 * (12 - 125) * (-27 + 20)));
    // chi_4: -(ac+1)(ca^2 - cab - a - c) b^2 / (a (a-b)(b-c)(b+c)(b^2+a^2))
    assert_eq!(t[3].at([2, 3, 5]).unwrap(), q(-11 * (20 - 30 - 2 - 5) * 9, 2 * -1 * -2 * 8 * 13));
}

#[test]
fn solved_coefficients_at_a_point() {
    let l = lg4_irreps(1).unwrap();
    let t = trace();
    let models: Vec<_> = t.models().to_vec();
    let x = solve_at(&models, [2, 3, 5], &BigRational::from_integer(0.into())).unwrap();
    for (k, (_, e)) in t.entries.iter().enumerate() {
        assert_eq!(e.at([2, 3, 5]).unwrap(), x[k]);
    }
    assert_eq!(l.len(), 10);
}

#[test]
fn trace_examples() {
    let t = trace();
    assert_eq!(t.tr4(&[1, 2, 3]).to_string(), "1");
    assert!(t.tr4(&[3]).is_zero());
    assert!(t.tr4(&[]).is_zero());
    assert!(t.tr4(&[-3]).is_zero());
    assert_eq!(t.tr4(&[1, -2, 3]).to_string(), "1");
}

#[test]
fn frozen_knot_values() {
    let t = trace();
    let tre = BraidWord::parse("[1,1,1,2,3]", 4).unwrap();
    let fig = BraidWord::parse("[1,-2,1,-2,3]", 4).unwrap();
    // the trace at a = -1 reproduces both values independently of the R-matrix
    assert!(crosscheck(&t, &tre).unwrap().equal);
    assert!(crosscheck(&t, &fig).unwrap().equal);
    assert_eq!(lg_invariant(&tre).unwrap().to_string(), TREFOIL);
    assert_eq!(lg_invariant(&BraidWord::parse("[1,1,1]", 2).unwrap()).unwrap().to_string(), TREFOIL);
    assert_eq!(lg_invariant(&fig).unwrap().to_string(), FIGURE_EIGHT);
}

#[test]
fn split_closures_vanish_on_both_sides() {
    let t = trace();
    for (w, n) in [("[1,1,1]", 2), ("[1,-2,1,-2]", 3), ("[]", 4)] {
        let r = crosscheck(&t, &BraidWord::parse(w, n).unwrap()).unwrap();
        assert!(r.equal);
        assert_eq!(r.lg, "0");
    }
}
