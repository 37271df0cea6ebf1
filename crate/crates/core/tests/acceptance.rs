//! Acceptance criteria 1-10. Runs without the libtest harness so that every criterion
//! prints one PASS/FAIL line; exits nonzero if any criterion fails.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::Zero;

use linksgould::braid::{markov_perturb_bounded, BraidWord};
use linksgould::bratteli::{catalan, conjectured_dim, dim_lg, level_dims, noncrossing_pairs};
use linksgould::hecke::expansions::verify_b3_expansions;
use linksgould::hecke::labels::{h3_labels, h4_labels};
use linksgould::hecke::models::build_model;
use linksgould::hecke::quotient::{lg3_irreps, lg4_irreps, r2_quotient_labels, sum_dim_sq};
use linksgould::hecke::rank::rank_of_span;
use linksgould::hecke::relations::{derive_r2, derive_r3, vanishing_exact, vanishing_mod};
use linksgould::hecke::restriction::{multiset_text, restriction_multiplicities};
use linksgould::hecke::words;
use linksgould::rmatrix::{
    self, cubic_residual, is_identity, is_zero_matrix, mat_mul, rmatrix_entries, rmatrix_inverse, yang_baxter_residual,
};
use linksgould::trace::{self, crosscheck, solve_trace_coeffs, verify_markov, z_falsification};
use linksgould::verify::{crosscheck_corpus, expected_restriction, markov_samples};

const SEED: u64 = 1;
/// Specializations at which solved and tabulated trace coefficients must agree.
const TRACE_POINTS: usize = 20;
/// Generic points at which each rank must be attained.
const RANK_POINTS: usize = 3;
/// Perturbations per base word for Markov invariance.
const PERTURBATIONS: u64 = 10;
const PERTURB_STEPS: usize = 6;
const MAX_STRANDS_AFTER: usize = 8;
/// Longest 4-strand word length in the cross-validation corpus.
const CROSS_MAX_LEN: usize = 6;

type Check = fn() -> Result<String, String>;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn bw(s: &str, n: usize) -> BraidWord {
    BraidWord::parse(s, n).unwrap()
}

fn c1_rmatrix() -> Result<String, String> {
    let r = rmatrix_entries();
    let yb = yang_baxter_residual(&r);
    ensure(yb.len() == 64 && yb.iter().all(|row| row.len() == 64 && row.iter().all(|x| x.is_zero())), "Yang-Baxter residual")?;
    ensure(is_zero_matrix(&cubic_residual(&r)), "cubic relation")?;
    ensure(is_identity(&mat_mul(&r, &rmatrix_inverse(&r))), "R Rinv")?;
    Ok("YB residual zero on 64 inputs; cubic; inverse".into())
}

fn c2_values() -> Result<String, String> {
    let lg = |w: &BraidWord| rmatrix::lg_invariant(w).map_err(|e| e.to_string());
    ensure(lg(&BraidWord::identity(1))?.to_string() == "1", "unknot")?;
    for k in [2, 3] {
        ensure(lg(&BraidWord::identity(k))?.is_zero(), format!("{k}-component unlink"))?;
    }
    // lg_invariant only returns values that pass the integrality check
    for (w, n) in [("[1,1,1]", 2), ("[1,-2,1,-2]", 3), ("[1,1]", 2), ("[1,2,3,1,2,3]", 4)] {
        lg(&bw(w, n))?;
    }
    Ok("unknot 1; unlinks 0; integral".into())
}

fn c3_markov() -> Result<String, String> {
    let bases = [bw("[1,1,1]", 2), bw("[1,-2,1,-2]", 3), bw("[1,2,1,2]", 3), bw("[1,1]", 2), bw("[1,-2,3,1,-2,3]", 4)];
    let mut n = 0;
    let mut widest = 0;
    for b in &bases {
        let base = rmatrix::lg_invariant(b).map_err(|e| e.to_string())?;
        for s in 0..PERTURBATIONS {
            let (w, _) = markov_perturb_bounded(b, SEED * 1000 + s, PERTURB_STEPS, MAX_STRANDS_AFTER);
            widest = widest.max(w.strands());
            let v = rmatrix::lg_invariant(&w).map_err(|e| e.to_string())?;
            ensure(v == base, format!("{b} vs {w}"))?;
            n += 1;
        }
    }
    ensure(n >= 50, "too few perturbations")?;
    Ok(format!("{n} perturbations of {} words, up to {widest} strands", bases.len()))
}

fn c4_dims() -> Result<String, String> {
    let got: Vec<String> = (1..=6).map(|n| dim_lg(n).to_string()).collect();
    ensure(got == ["1", "3", "20", "175", "1764", "19404"], format!("{got:?}"))?;
    let l4: Vec<u32> = [1, 6, 6, 1, 3, 8, 3, 3, 3, 1].to_vec();
    let keys4 = [(0, 0), (0, 1), (0, 2), (0, 3), (1, 0), (1, 1), (1, 2), (2, 0), (2, 1), (3, 0)];
    let l5: [((u32, u32), u32); 15] = [
        ((0, 0), 1),
        ((0, 1), 10),
        ((0, 2), 20),
        ((0, 3), 10),
        ((0, 4), 1),
        ((2, 0), 6),
        ((2, 1), 15),
        ((2, 2), 6),
        ((1, 0), 4),
        ((1, 1), 20),
        ((1, 2), 20),
        ((1, 3), 4),
        ((3, 0), 4),
        ((3, 1), 4),
        ((4, 0), 1),
    ];
    let want4: BTreeMap<(u32, u32), BigUint> = keys4.iter().zip(l4).map(|(&k, v)| (k, v.into())).collect();
    let want5: BTreeMap<(u32, u32), BigUint> = l5.iter().map(|&(k, v)| (k, v.into())).collect();
    ensure(level_dims(4).counts == want4, "level 4")?;
    ensure(level_dims(5).counts == want5, "level 5")?;
    for n in 1..=50u32 {
        let c = catalan(n);
        ensure(dim_lg(n + 1) == conjectured_dim(n) && conjectured_dim(n) == &c * &c * (2 * n + 1), format!("formula at {n}"))?;
    }
    for n in 1..=12 {
        ensure(noncrossing_pairs(n) == dim_lg(n + 1), format!("noncrossing at {n}"))?;
    }
    Ok("ladder, levels 4-5, formula n<=50, noncrossing n<=12".into())
}

fn c5_hecke() -> Result<String, String> {
    let labels = h4_labels();
    ensure(labels.len() == 24, "24 models")?;
    for l in &labels {
        build_model(l).check_relations()?;
    }
    ensure(sum_dim_sq(&labels) == 648, "sum of squares")?;
    for l in &labels {
        let r = restriction_multiplicities(&build_model(l), SEED)?;
        ensure(r == expected_restriction(l), format!("{l} restricts to {}", multiset_text(&r)))?;
    }
    let q = r2_quotient_labels(SEED)?;
    ensure(sum_dim_sq(&q) == 264, format!("quotient dimension {}", sum_dim_sq(&q)))?;
    let lg4 = lg4_irreps(SEED)?;
    ensure(sum_dim_sq(&lg4) == 175, "LG4 dimension")?;
    Ok(format!("relations; 648; restrictions; quotient 264 ({} reps); LG4 175", q.len()))
}

fn c6_relations() -> Result<String, String> {
    let lg3 = lg3_irreps(SEED)?;
    let lg4 = lg4_irreps(SEED)?;
    let r2 = derive_r2(&lg3, SEED)?;
    let rep = vanishing_exact(&r2, &h3_labels());
    let nonzero: Vec<&str> = rep.rows.iter().filter(|r| !r.1).map(|r| r.0.as_str()).collect();
    ensure(nonzero == ["T_bc"], format!("r2 nonzero in {nonzero:?}"))?;
    let others: Vec<_> = h4_labels().into_iter().filter(|l| !lg4.contains(l)).collect();
    ensure(others.len() == 14, "14 other representations")?;
    for sign in [1, -1] {
        let f = derive_r3(sign, &lg4, SEED)?;
        ensure(vanishing_exact(&f, &lg4).rows.iter().all(|r| r.1), format!("F{sign} symbolic vanishing"))?;
        ensure(vanishing_mod(&f, &others, SEED).rows.iter().all(|r| !r.1), format!("F{sign} nonvanishing"))?;
    }
    Ok("r2 nonzero only in T_bc; F+ and F- vanish exactly in the 10, nonzero in the 14".into())
}

fn c7_ranks() -> Result<String, String> {
    let lg3 = lg3_irreps(SEED)?;
    let lg4 = lg4_irreps(SEED)?;
    let mut with_extra = words::bimodule_words();
    with_extra.push(words::bimodule_extra());
    let cases = [
        (words::b0_3(), &lg3, 13),
        (words::b_3(), &lg3, 20),
        (words::b3_4(), &lg4, 139),
        (words::b3_4_down(), &lg4, 141),
        (words::b3_4_up(), &lg4, 141),
        (words::b4_4(), &lg4, 141),
        (words::bimodule_words(), &lg4, 174),
        (with_extra, &lg4, 175),
        (words::b6_4(), &lg4, 175),
    ];
    let mut got = Vec::new();
    for (ws, ls, want) in cases {
        let r = rank_of_span(&ws, ls, SEED)?;
        ensure(r.rank == want && r.ranks.iter().filter(|&&x| x == want).count() >= RANK_POINTS, format!("rank {} != {want}", r.rank))?;
        got.push(r.rank);
    }
    Ok(format!("{got:?}"))
}

fn c8_expansions() -> Result<String, String> {
    let lg3 = lg3_irreps(SEED)?;
    let rows = verify_b3_expansions(&lg3);
    ensure(rows.len() == 12 && rows.iter().all(|r| r.holds), "expansion residual")?;
    Ok("both identities in all 6 LG3 representations".into())
}

fn c9_trace() -> Result<String, String> {
    let lg4 = lg4_irreps(SEED)?;
    let (t, rep) = solve_trace_coeffs(&lg4, SEED, TRACE_POINTS)?;
    ensure(rep.singular_points == 0 && rep.points.len() >= TRACE_POINTS, "family matrix")?;
    for &v in &rep.points {
        ensure(t.nonzero_at(v), format!("zero coefficient at {v:?}"))?;
    }
    let vals: Vec<BigRational> = trace::trace_family()
        .iter()
        .map(|f| t.tr4(f).specialize_ints(2, 3, 5).map(|q| q.u).map_err(|e| e.to_string()))
        .collect::<Result<_, _>>()?;
    ensure(vals == trace::family_values(&BigRational::zero()), "family values")?;
    for f in trace::trace_family() {
        ensure(t.tr4(&f).is_polynomial(), "family value is not constant")?;
    }
    let pairs = vec![(vec![1, -2], vec![3, 2, -1]), (vec![2, 3, -2], vec![-1, 3]), (vec![-3, -3], vec![1, 2, 1])];
    let rows = verify_markov(&t, &markov_samples(SEED), &pairs);
    ensure(rows.iter().all(|r| r.ok), "Markov axioms")?;
    let z = z_falsification(&lg4, SEED, 5);
    ensure(z.len() == 5 && z.iter().all(|(_, _, a, b)| !a.is_zero() || !b.is_zero()), "nonzero z not falsified")?;
    ensure(trace::z_zero_residuals(&t, &rep.points), "z = 0 residual")?;
    let order: Vec<String> = rep.assignment.iter().map(|(_, l)| l.clone()).collect();
    Ok(format!("{} points; order {}", rep.points.len(), order.join(",")))
}

fn c10_crosscheck() -> Result<String, String> {
    let lg4 = lg4_irreps(SEED)?;
    let (t, _) = solve_trace_coeffs(&lg4, SEED, TRACE_POINTS)?;
    let corpus = crosscheck_corpus(CROSS_MAX_LEN);
    for w in &corpus {
        let r = crosscheck(&t, w)?;
        ensure(r.equal, format!("{}: {} vs {}/{}", r.braid, r.lg, r.trace_num, r.trace_den))?;
    }
    Ok(format!("{} words", corpus.len()))
}

fn main() {
    let criteria: [(u32, &str, Check, Duration); 10] = [
        (1, "R-matrix gates", c1_rmatrix, Duration::from_secs(10)),
        (2, "invariant values", c2_values, Duration::from_secs(5)),
        (3, "Markov invariance", c3_markov, Duration::from_secs(600)),
        (4, "dimension ladder", c4_dims, Duration::from_secs(5)),
        (5, "H4 suite", c5_hecke, Duration::from_secs(120)),
        (6, "relations", c6_relations, Duration::from_secs(600)),
        (7, "rank claims", c7_ranks, Duration::from_secs(600)),
        (8, "printed expansions", c8_expansions, Duration::from_secs(60)),
        (9, "trace suite", c9_trace, Duration::from_secs(300)),
        (10, "cross-validation", c10_crosscheck, Duration::from_secs(900)),
    ];
    let filter: Vec<u32> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let mut failed = 0;
    for (id, name, f, budget) in criteria {
        if !filter.is_empty() && !filter.contains(&id) {
            continue;
        }
        let t = Instant::now();
        let r = f();
        let el = t.elapsed();
        let (ok, msg) = match r {
            Ok(m) if el <= budget => (true, m),
            Ok(m) => (false, format!("{m}; over the {}s budget", budget.as_secs())),
            Err(e) => (false, e),
        };
        if !ok {
            failed += 1;
        }
        println!("criterion {id:>2} {} {name} [{:.1}s]: {msg}", if ok { "PASS" } else { "FAIL" }, el.as_secs_f64());
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
