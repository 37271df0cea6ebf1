//! Verification suites, one per block of checks; each returns named pass/fail rows.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::braid::{markov_perturb_bounded, BraidWord};
use crate::bratteli::{check_dim_conjecture, dim_lg, level_dims, noncrossing_pairs};
use crate::hecke::labels::{h3_labels, h4_labels, IrrepKind, IrrepLabel};
use crate::hecke::models::build_model;
use crate::hecke::quotient::{lg3_irreps, lg4_irreps, r2_quotient_labels, sum_dim_sq};
use crate::hecke::rank::rank_of_span;
use crate::hecke::relations::{derive_r2, derive_r3, vanishing_exact, vanishing_mod};
use crate::hecke::restriction::{multiset_text, restriction_multiplicities, Multiset};
use crate::hecke::words;
use crate::hecke::expansions::verify_b3_expansions;
use crate::rmatrix::{self, cubic_residual, is_identity, is_zero_matrix, mat_mul, rmatrix_entries, rmatrix_inverse, yang_baxter_residual};
use crate::trace::{self, crosscheck, random_words, solve_trace_coeffs, verify_markov, TraceCoeffs};

#[derive(Debug, Clone, Serialize)]
pub struct CheckRow {
    pub name: String,
    pub ok: bool,
    pub detail: String,
}

impl CheckRow {
    pub fn new(name: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        CheckRow { name: name.into(), ok, detail: detail.into() }
    }

    fn from_result<T>(name: &str, r: Result<T, String>, f: impl FnOnce(T) -> (bool, String)) -> Self {
        match r {
            Ok(x) => {
                let (ok, d) = f(x);
                CheckRow::new(name, ok, d)
            }
            Err(e) => CheckRow::new(name, false, e),
        }
    }
}

pub const SUITES: [&str; 6] = ["rmatrix", "bratteli", "hecke", "relations", "trace", "crosscheck"];

pub fn run_suite(name: &str, seed: u64) -> Option<Vec<CheckRow>> {
    Some(match name {
        "rmatrix" => rmatrix_suite(seed),
        "bratteli" => bratteli_suite(),
        "hecke" => hecke_suite(seed),
        "relations" => relations_suite(seed),
        "trace" => trace_suite(seed),
        "crosscheck" => crosscheck_suite(seed),
        _ => return None,
    })
}

fn bw(text: &str, n: usize) -> BraidWord {
    BraidWord::parse(text, n).expect("fixed braid word")
}

/// Words used as starting points for the Markov-move checks.
pub fn markov_bases() -> Vec<BraidWord> {
    vec![bw("[1,1,1]", 2), bw("[1,1]", 2), bw("[1,-2,1,-2]", 3), bw("[1,2,1,2]", 3), bw("[1,-2,3,1,-2,3]", 4), bw("[1,1,2,-1,2,3,-2,3]", 4)]
}

pub fn rmatrix_suite(seed: u64) -> Vec<CheckRow> {
    let r = rmatrix_entries();
    let rinv = rmatrix_inverse(&r);
    let yb = yang_baxter_residual(&r);
    let mut out = vec![
        CheckRow::new("yang-baxter", yb.iter().all(|row| row.iter().all(|x| x.is_zero())), format!("{} basis inputs", yb.len())),
        CheckRow::new("cubic", is_zero_matrix(&cubic_residual(&r)), "(R+1)(R-t0)(R-t1) = 0"),
        CheckRow::new("inverse", is_identity(&mat_mul(&r, &rinv)), "R Rinv = Id"),
    ];
    let unknot = rmatrix::lg_invariant(&BraidWord::identity(1));
    out.push(CheckRow::new("unknot", unknot.as_ref().map(|p| p.to_string() == "1").unwrap_or(false), format!("{unknot:?}")));
    for k in [2, 3] {
        let v = rmatrix::lg_invariant(&BraidWord::identity(k));
        out.push(CheckRow::new(format!("unlink {k}"), v.as_ref().map(|p| p.is_zero()).unwrap_or(false), format!("{v:?}")));
    }
    let mut checked = 0;
    let mut bad = Vec::new();
    for b in markov_bases() {
        let base = rmatrix::lg_invariant(&b);
        for s in 0..10u64 {
            let (w, _) = markov_perturb_bounded(&b, seed.wrapping_mul(1000) + s, 6, rmatrix::MAX_STRANDS);
            checked += 1;
            match (&base, rmatrix::lg_invariant(&w)) {
                (Ok(x), Ok(y)) if *x == y => {}
                _ => bad.push(format!("{b} -> {w}")),
            }
        }
    }
    out.push(CheckRow::new("markov invariance", bad.is_empty(), format!("{checked} perturbations; failures {bad:?}")));
    out
}

/// Path counts at levels 4 and 5 by node `(a, k)`.
pub fn expected_level_counts() -> [Vec<((u32, u32), u32)>; 2] {
    [
        vec![((0, 0), 1), ((0, 1), 6), ((0, 2), 6), ((0, 3), 1), ((1, 0), 3), ((1, 1), 8), ((1, 2), 3), ((2, 0), 3), ((2, 1), 3), ((3, 0), 1)],
        vec![
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
        ],
    ]
}

pub fn bratteli_suite() -> Vec<CheckRow> {
    let mut out = Vec::new();
    let dims: Vec<BigUint> = (1..=6).map(dim_lg).collect();
    let want: Vec<BigUint> = [1u32, 3, 20, 175, 1764, 19404].iter().map(|&x| x.into()).collect();
    out.push(CheckRow::new("dim ladder", dims == want, format!("{dims:?}")));
    for (r, exp) in [4u32, 5].into_iter().zip(expected_level_counts()) {
        let got = level_dims(r).counts;
        let exp: BTreeMap<(u32, u32), BigUint> = exp.into_iter().map(|(k, v)| (k, v.into())).collect();
        out.push(CheckRow::new(format!("level {r} counts"), got == exp, format!("{} nodes", got.len())));
    }
    let rows = check_dim_conjecture(50);
    out.push(CheckRow::new("dimension formula n <= 50", rows.iter().all(|r| r.matches), format!("{} rows", rows.len())));
    let bad: Vec<u32> = (1..=12).filter(|&n| noncrossing_pairs(n) != dim_lg(n + 1)).collect();
    out.push(CheckRow::new("noncrossing pairs n <= 12", bad.is_empty(), format!("mismatches {bad:?}")));
    out
}

fn lab(s: &str) -> IrrepLabel {
    s.parse().expect("label")
}

fn t_label(x: u8, y: u8) -> IrrepLabel {
    IrrepLabel::new(IrrepKind::T, &[x.min(y), x.max(y)])
}

/// The restriction of an H4 representation to H3 predicted by its family.
pub fn expected_restriction(l: &IrrepLabel) -> Multiset {
    let s = |x: u8| IrrepLabel::new(IrrepKind::S, &[x]);
    let v = lab("V");
    let p = &l.params;
    let parts: Vec<IrrepLabel> = match l.kind {
        IrrepKind::S | IrrepKind::T | IrrepKind::V3 => vec![l.clone()],
        IrrepKind::U => vec![s(p[0]), t_label(p[0], p[1])],
        IrrepKind::V6 => vec![s(p[0]), t_label(p[0], p[1]), v],
        IrrepKind::W => {
            let others: Vec<u8> = (0..3).filter(|&i| i != p[0]).collect();
            vec![s(p[0]), t_label(p[0], others[0]), t_label(p[0], others[1]), v]
        }
        IrrepKind::X | IrrepKind::XPrime => vec![t_label(0, 1), t_label(0, 2), t_label(1, 2), v],
    };
    let mut ms = Multiset::new();
    for x in parts {
        *ms.entry(x).or_insert(0) += 1;
    }
    ms
}

pub fn hecke_suite(seed: u64) -> Vec<CheckRow> {
    let mut out = Vec::new();
    let labels = h4_labels();
    let bad: Vec<String> = labels.iter().filter_map(|l| build_model(l).check_relations().err()).collect();
    out.push(CheckRow::new("braid and cubic relations", bad.is_empty() && labels.len() == 24, format!("{} models; {bad:?}", labels.len())));
    let sd = sum_dim_sq(&labels);
    out.push(CheckRow::new("sum of squared dimensions", sd == 648, sd.to_string()));
    let mut mism = Vec::new();
    for l in &labels {
        match restriction_multiplicities(&build_model(l), seed) {
            Ok(r) if r == expected_restriction(l) => {}
            Ok(r) => mism.push(format!("{l}: {}", multiset_text(&r))),
            Err(e) => mism.push(e),
        }
    }
    out.push(CheckRow::new("restriction rules", mism.is_empty(), format!("{mism:?}")));
    out.push(CheckRow::from_result("r2 quotient", r2_quotient_labels(seed), |q| {
        let d = sum_dim_sq(&q);
        (d == 264, format!("{} representations, dimension {d}", q.len()))
    }));
    let lg4 = lg4_irreps(seed);
    out.push(CheckRow::from_result("LG4 dimension", lg4.clone(), |q| {
        let d = sum_dim_sq(&q);
        (d == 175, format!("{} representations, dimension {d}", q.len()))
    }));
    let lg3 = match lg3_irreps(seed) {
        Ok(x) => x,
        Err(e) => {
            out.push(CheckRow::new("LG3", false, e));
            return out;
        }
    };
    let lg4 = match lg4 {
        Ok(x) => x,
        Err(_) => return out,
    };
    let mut bimod = words::bimodule_words();
    let n_bimod = bimod.len();
    let bimod_rank = rank_of_span(&bimod, &lg4, seed);
    bimod.push(words::bimodule_extra());
    let families: Vec<(&str, Vec<Vec<i32>>, &[IrrepLabel], usize)> = vec![
        ("rank b0_3", words::b0_3(), &lg3, 13),
        ("rank b_3", words::b_3(), &lg3, 20),
        ("rank b3_4", words::b3_4(), &lg4, 139),
        ("rank b3_4 without the s1-first pair", words::b3_4_down(), &lg4, 141),
        ("rank b3_4 without the s1-last pair", words::b3_4_up(), &lg4, 141),
        ("rank b4_4", words::b4_4(), &lg4, 141),
        ("rank b30_4", words::b30_4(), &lg4, 139),
        ("rank b6_4", words::b6_4(), &lg4, 175),
    ];
    for (name, ws, ls, want) in families {
        let n = ws.len();
        out.push(CheckRow::from_result(name, rank_of_span(&ws, ls, seed), |r| {
            (r.rank == want && r.ranks.iter().filter(|&&x| x == want).count() >= 3, format!("{n} words, rank {} at {:?}", r.rank, r.points))
        }));
    }
    out.push(CheckRow::from_result("rank LG3 s3^r LG3", bimod_rank, |r| {
        (r.rank == 174, format!("{n_bimod} words, rank {} at {:?}", r.rank, r.points))
    }));
    out.push(CheckRow::from_result("rank with s3^-1 s2 s3^-1", rank_of_span(&bimod, &lg4, seed), |r| {
        (r.rank == 175, format!("rank {} at {:?}", r.rank, r.points))
    }));
    out
}

pub fn relations_suite(seed: u64) -> Vec<CheckRow> {
    let mut out = Vec::new();
    let (lg3, lg4) = match (lg3_irreps(seed), lg4_irreps(seed)) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => return vec![CheckRow::new("identification", false, e)],
    };
    out.push(CheckRow::from_result("r2", derive_r2(&lg3, seed), |r2| {
        let rep = vanishing_exact(&r2, &h3_labels());
        let nonzero: Vec<&str> = rep.rows.iter().filter(|r| !r.1).map(|r| r.0.as_str()).collect();
        (nonzero == ["T_bc"], format!("{} terms; vanishes in {:?}", r2.len(), rep.vanishing()))
    }));
    let others: Vec<IrrepLabel> = h4_labels().into_iter().filter(|l| !lg4.contains(l)).collect();
    for sign in [1, -1] {
        let name = if sign > 0 { "r3 F+" } else { "r3 F-" };
        out.push(CheckRow::from_result(name, derive_r3(sign, &lg4, seed), |f| {
            let ex = vanishing_exact(&f, &lg4);
            let md = vanishing_mod(&f, &others, seed);
            let ok = ex.rows.iter().all(|r| r.1) && md.rows.iter().all(|r| !r.1);
            (ok, format!("{} terms; exact zero in {} of {}; nonzero in {} of {}", f.len(), ex.vanishing().len(), lg4.len(), md.rows.iter().filter(|r| !r.1).count(), others.len()))
        }));
    }
    let rows = verify_b3_expansions(&lg3);
    let bad: Vec<String> = rows.iter().filter(|r| !r.holds).map(|r| format!("{} in {}", r.word, r.label)).collect();
    out.push(CheckRow::new("three-crossing expansions", bad.is_empty() && rows.len() == 12, format!("{} checks; failures {bad:?}", rows.len())));
    out
}

/// 3-strand samples for the Markov checks.
pub fn markov_samples(seed: u64) -> Vec<Vec<i32>> {
    let mut out = vec![vec![], vec![1, 2], vec![1], vec![-2], vec![1, -2, 1, -2], vec![1, 1, 1]];
    out.extend(random_words(seed, 14, 2, 6));
    out
}

pub fn trace_suite(seed: u64) -> Vec<CheckRow> {
    let mut out = Vec::new();
    let lg4 = match lg4_irreps(seed) {
        Ok(x) => x,
        Err(e) => return vec![CheckRow::new("identification", false, e)],
    };
    let (t, rep) = match solve_trace_coeffs(&lg4, seed, 20) {
        Ok(x) => x,
        Err(e) => return vec![CheckRow::new("table matches solved coefficients", false, e)],
    };
    out.push(CheckRow::new(
        "family matrix invertible",
        rep.singular_points == 0,
        format!("{} singular among {} generic points", rep.singular_points, rep.points.len() + rep.singular_points),
    ));
    let order: Vec<String> = rep.assignment.iter().map(|(i, l)| format!("{i}:{l}")).collect();
    out.push(CheckRow::new("table matches solved coefficients", rep.points.len() >= 20, format!("{} points; {}", rep.points.len(), order.join(" "))));
    out.push(CheckRow::new(
        "coefficients nonzero",
        rep.points.iter().all(|&v| t.nonzero_at(v)),
        format!("{} points", rep.points.len()),
    ));
    let vals: Vec<String> = trace::trace_family().iter().map(|f| t.tr4(f).to_string()).collect();
    let want: Vec<String> = trace::family_values(&BigRational::zero()).iter().map(|x| x.to_string()).collect();
    out.push(CheckRow::new("family values", vals == want, vals.join(",")));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pairs: Vec<(Vec<i32>, Vec<i32>)> = (0..8)
        .map(|_| {
            let w = random_words(rng.gen(), 2, 3, 4);
            (w[0].clone(), w[1].clone())
        })
        .collect();
    let rows = verify_markov(&t, &markov_samples(seed), &pairs);
    let bad: Vec<&str> = rows.iter().filter(|r| !r.ok).map(|r| r.name.as_str()).collect();
    out.push(CheckRow::new("markov axioms", bad.is_empty(), format!("{} checks; failures {bad:?}", rows.len())));
    let z = trace::z_falsification(&lg4, seed, 5);
    let ok = z.len() == 5 && z.iter().all(|(_, _, r1, r2)| !r1.is_zero() || !r2.is_zero());
    out.push(CheckRow::new("nonzero z is inconsistent", ok, format!("{} points", z.len())));
    out.push(CheckRow::new("z = 0 is consistent", trace::z_zero_residuals(&t, &rep.points), ""));
    out
}

/// 4-strand words for comparing the trace with the R-matrix invariant: every reduced word
/// of length at most `max_len` and fixed knot presentations.
pub fn crosscheck_corpus(max_len: usize) -> Vec<BraidWord> {
    let mut out: Vec<BraidWord> = ["[1,1,1]", "[1,-2,1,-2]", "[1,1,1,2,3]", "[1,-2,1,-2,3]", "[1,2,3,1,2,3]"]
        .iter()
        .map(|s| bw(s, 4))
        .collect();
    for w in words::all_words(3, max_len) {
        out.push(BraidWord::new(4, w).expect("4-strand word"));
    }
    out
}

pub fn crosscheck_words(t: &TraceCoeffs, ws: &[BraidWord]) -> (usize, Vec<String>) {
    use rayon::prelude::*;
    let bad: Vec<String> = ws
        .par_iter()
        .filter_map(|w| match crosscheck(t, w) {
            Ok(r) if r.equal => None,
            Ok(r) => Some(format!("{}: lg {} vs {}/{}", r.braid, r.lg, r.trace_num, r.trace_den)),
            Err(e) => Some(format!("{w}: {e}")),
        })
        .collect();
    (ws.len(), bad)
}

pub fn crosscheck_suite(seed: u64) -> Vec<CheckRow> {
    let t = match lg4_irreps(seed).and_then(|l| solve_trace_coeffs(&l, seed, 20)) {
        Ok((t, _)) => t,
        Err(e) => return vec![CheckRow::new("trace", false, e)],
    };
    let (n, bad) = crosscheck_words(&t, &crosscheck_corpus(6));
    vec![CheckRow::new("trace equals invariant", bad.is_empty(), format!("{n} words; mismatches {bad:?}"))]
}
