//! The unique Markov trace on LG4: tabulated coefficients, evaluation on 4-strand words,
//! re-derivation from the Markov axioms and comparison with the R-matrix invariant.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::arith::{Laurent, MultiPoly, RatFunc};
use crate::braid::BraidWord;
use crate::hecke::labels::IrrepLabel;
use crate::hecke::models::{abc, build_model, IrrepModel};
use crate::hecke::rank::sample_points;
use crate::linalg::solve_rational;
use crate::rmatrix;
use crate::verify::CheckRow;

/// Irreducible factors of the coefficient denominators.
const DEN_FACTORS: [&str; 9] = ["a", "a-b", "a-c", "b-c", "b+c", "a^2+c^2", "a^2+b^2", "a^2*b-c^3", "a^2*c-b^3"];

/// `(sign, numerator factors, indices into DEN_FACTORS)` for chi_1 .. chi_10.
const TABLE: [(i64, &[&str], &[usize]); 10] = [
    (
        1,
        &["a^4*b^2*c^2 + a^4*b*c + a^4 - a^3*b^3*c^2 - a^3*b^2*c^3 + a^2*b^3*c^3 - a^2*b^2*c^2 + a*b^3*c^2 + a*b^2*c^3 + b^2*c^2"],
        &[0, 1, 2, 5, 6],
    ),
    (-1, &["a*b+1", "a^3*b - a^2*b*c - a*b + c^2", "c^2"], &[2, 3, 5, 7]),
    (1, &["a*c+1", "a^3*c - a^2*b*c - a*c + b^2", "b^2"], &[1, 3, 6, 8]),
    (-1, &["a*c+1", "a^2*c - a*b*c - a - c", "b^2"], &[0, 1, 3, 4, 6]),
    (
        -1,
        &[
            "a*b+1",
            "a^4*b*c - a^3*b*c^2 + a^3*b - a^3*c - a^2*b^3*c + a^2*b^2*c^2 - a^2*b*c + a*b^3*c^2 - a*b^2*c^3 + a*b^2*c + b^3*c - b^2*c^2",
            "c",
        ],
        &[0, 2, 3, 5, 8],
    ),
    (1, &["a*b+1", "a^2*b - a*b*c - a - b", "c^2"], &[0, 2, 3, 4, 5]),
    (
        1,
        &[
            "a*c+1",
            "a^4*b*c - a^3*b^2*c + a^3*c - a^3*b - a^2*b*c^3 + a^2*b^2*c^2 - a^2*b*c + a*b^2*c^3 + a*b*c^2 - a*b^3*c^2 - b^2*c^2 + b*c^3",
            "b",
        ],
        &[0, 1, 3, 6, 7],
    ),
    (1, &["b*c^2", "a*c+1", "a*b+1"], &[0, 3, 4, 7]),
    (-1, &["b^2*c", "a*c+1", "a*b+1"], &[0, 3, 4, 8]),
    (1, &["b*c", "a*c+1", "a*b+1", "b*c+a^2"], &[0, 7, 8]),
];

/// The family on which the trace values determine the trace.
pub fn trace_family() -> Vec<Vec<i32>> {
    vec![
        vec![3],
        vec![1, 3],
        vec![-1, 3],
        vec![2, 3],
        vec![-2, 3],
        vec![1, 2, 3],
        vec![1, -2, 3],
        vec![-1, 2, 3],
        vec![-1, -2, 3],
        vec![-3],
    ]
}

/// Trace values on the family for the stabilization parameter `z`.
pub fn family_values(z: &BigRational) -> Vec<BigRational> {
    let one = BigRational::one();
    let z2 = z * z;
    vec![z2.clone(), z.clone(), z.clone(), z.clone(), z.clone(), one.clone(), one.clone(), one.clone(), one, z2]
}

fn poly(s: &str) -> MultiPoly {
    MultiPoly::parse(s).expect("table entry")
}

fn product(fs: impl IntoIterator<Item = MultiPoly>) -> MultiPoly {
    fs.into_iter().fold(MultiPoly::one(), |acc, f| &acc * &f)
}

/// A tabulated coefficient kept in factored form.
#[derive(Debug, Clone)]
pub struct TableEntry {
    pub index: usize,
    pub sign: i64,
    pub num: Vec<MultiPoly>,
    pub den: Vec<usize>,
}

impl TableEntry {
    pub fn numerator(&self) -> MultiPoly {
        product(self.num.iter().cloned()).scale_int(&BigInt::from(self.sign))
    }

    pub fn denominator(&self) -> MultiPoly {
        product(self.den.iter().map(|&i| poly(DEN_FACTORS[i])))
    }

    pub fn ratfunc(&self) -> RatFunc {
        RatFunc::new(self.numerator(), self.denominator()).expect("nonzero denominator")
    }

    pub fn at(&self, v: [i64; 3]) -> Option<BigRational> {
        let r = self.ratfunc().specialize_ints(v[0], v[1], v[2]).ok()?;
        Some(r.u)
    }
}

pub fn table_entries() -> Vec<TableEntry> {
    TABLE
        .iter()
        .enumerate()
        .map(|(i, (sign, num, den))| TableEntry { index: i + 1, sign: *sign, num: num.iter().map(|s| poly(s)).collect(), den: den.to_vec() })
        .collect()
}

/// Coefficients of the trace, one per irreducible model of LG4.
#[derive(Debug, Clone)]
pub struct TraceCoeffs {
    pub entries: Vec<(IrrepLabel, TableEntry)>,
    models: Vec<IrrepModel>,
}

/// Stabilization parameter of the trace family; only `z = 0` admits a trace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceSpec {
    pub z: BigRational,
}

impl Default for TraceSpec {
    fn default() -> Self {
        TraceSpec { z: BigRational::zero() }
    }
}

/// Exact traces of `(abc)^k` times the images of the word, `k` the number of inverse letters.
fn scaled_traces_at(models: &[IrrepModel], w: &[i32], v: [i64; 3]) -> Vec<BigInt> {
    models
        .iter()
        .map(|m| {
            let g = m.at_ints(v).scaled_word(w);
            (0..g.len()).map(|i| g[i][i].clone()).sum()
        })
        .collect()
}

fn inverse_count(w: &[i32]) -> u32 {
    w.iter().filter(|&&l| l < 0).count() as u32
}

/// Traces of the images of `w` in each model, at an integer point.
pub fn traces_at(models: &[IrrepModel], w: &[i32], v: [i64; 3]) -> Vec<BigRational> {
    let scale = BigInt::from(v[0] * v[1] * v[2]).pow(inverse_count(w));
    scaled_traces_at(models, w, v).into_iter().map(|t| BigRational::new(t, scale.clone())).collect()
}

/// Coefficients solved from the family values at one point; `None` if the system is singular.
pub fn solve_at(models: &[IrrepModel], v: [i64; 3], z: &BigRational) -> Option<Vec<BigRational>> {
    let fam = trace_family();
    let cols: Vec<Vec<BigRational>> = fam.iter().map(|f| traces_at(models, f, v)).collect();
    solve_rational(&cols, &family_values(z))
}

fn generic(v: [i64; 3]) -> bool {
    table_entries().iter().all(|e| e.at(v).map_or(false, |x| !x.is_zero()))
}

#[derive(Debug, Clone, Serialize)]
pub struct MatchReport {
    /// table index (1-based) and matched label
    pub assignment: Vec<(usize, String)>,
    pub points: Vec<[i64; 3]>,
    pub singular_points: usize,
}

/// Solves the family system at `count` generic points and assigns each table row to the
/// unique model whose solved coefficient agrees with it everywhere.
pub fn solve_trace_coeffs(labels: &[IrrepLabel], seed: u64, count: usize) -> Result<(TraceCoeffs, MatchReport), String> {
    if labels.len() != TABLE.len() {
        return Err(format!("expected {} models, got {}", TABLE.len(), labels.len()));
    }
    let models: Vec<IrrepModel> = labels.iter().map(build_model).collect();
    let table = table_entries();
    let z = BigRational::zero();
    let mut points = Vec::new();
    let mut singular = 0;
    // agree[i][k]: table row i agrees with model k at every point so far
    let mut agree = vec![vec![true; models.len()]; table.len()];
    for v in sample_points(seed, 4 * count) {
        if points.len() == count {
            break;
        }
        if !generic(v) {
            continue;
        }
        let Some(x) = solve_at(&models, v, &z) else {
            singular += 1;
            continue;
        };
        for (i, e) in table.iter().enumerate() {
            let t = e.at(v).unwrap();
            for (k, xk) in x.iter().enumerate() {
                agree[i][k] &= &t == xk;
            }
        }
        points.push(v);
    }
    if points.len() < count {
        return Err(format!("only {} usable points", points.len()));
    }
    let mut entries = Vec::new();
    let mut assignment = Vec::new();
    let mut used = vec![false; models.len()];
    for (i, e) in table.into_iter().enumerate() {
        let hits: Vec<usize> = (0..models.len()).filter(|&k| agree[i][k]).collect();
        if hits.len() != 1 || used[hits[0]] {
            return Err(format!("table row {} matches models {:?}", i + 1, hits));
        }
        used[hits[0]] = true;
        assignment.push((i + 1, labels[hits[0]].to_string()));
        entries.push((labels[hits[0]].clone(), e));
    }
    let models = entries.iter().map(|(l, _)| build_model(l)).collect();
    Ok((TraceCoeffs { entries, models }, MatchReport { assignment, points, singular_points: singular }))
}

impl TraceCoeffs {
    /// Table coefficients attached to models in the given order (row `i` to `labels[i]`).
    pub fn from_assignment(labels: &[IrrepLabel]) -> Self {
        let entries: Vec<(IrrepLabel, TableEntry)> = labels.iter().cloned().zip(table_entries()).collect();
        let models = labels.iter().map(build_model).collect();
        TraceCoeffs { entries, models }
    }

    pub fn models(&self) -> &[IrrepModel] {
        &self.models
    }

    /// The trace of a word on at most four strands, as a rational function.
    pub fn tr4(&self, w: &[i32]) -> RatFunc {
        let k = inverse_count(w);
        let l = product(DEN_FACTORS.iter().map(|s| poly(s)));
        let terms: Vec<MultiPoly> = self
            .entries
            .par_iter()
            .zip(self.models.par_iter())
            .map(|((_, e), m)| {
                let g = m.scaled_word_poly(w);
                let tr = (0..g.len()).fold(MultiPoly::zero(), |acc, i| &acc + &g[i][i]);
                let rest = product((0..DEN_FACTORS.len()).filter(|i| !e.den.contains(i)).map(|i| poly(DEN_FACTORS[i])));
                &(&e.numerator() * &rest) * &tr
            })
            .collect();
        let mut num = terms.into_iter().fold(MultiPoly::zero(), |acc, t| &acc + &t);
        let mut den = &l * &abc().pow(k);
        for f in DEN_FACTORS.iter().skip(1).map(|s| poly(s)) {
            while let (Some(n), Some(d)) = (num.div_exact(&f), den.div_exact(&f)) {
                num = n;
                den = d;
            }
        }
        RatFunc::new(num, den).expect("nonzero denominator")
    }

    /// The trace at an integer point, exactly.
    pub fn tr4_at(&self, w: &[i32], v: [i64; 3]) -> Option<BigRational> {
        let tr = traces_at(&self.models, w, v);
        let mut acc = BigRational::zero();
        for ((_, e), t) in self.entries.iter().zip(tr) {
            acc += e.at(v)? * t;
        }
        Some(acc)
    }

    /// True when every coefficient is nonzero at the point.
    pub fn nonzero_at(&self, v: [i64; 3]) -> bool {
        self.entries.iter().all(|(_, e)| e.at(v).map_or(false, |x| !x.is_zero()))
    }
}

/// Matches the table against solved coefficients and returns the trace.
pub fn build_trace_coeffs(labels: &[IrrepLabel], seed: u64) -> Result<TraceCoeffs, String> {
    Ok(solve_trace_coeffs(labels, seed, 20)?.0)
}

fn embed(w: &[i32], tail: i32) -> Vec<i32> {
    let mut out = w.to_vec();
    out.push(tail);
    out
}

/// True when `x` vanishes on the slice `a = -1`.
pub fn vanishes_at_minus_one(x: &RatFunc) -> bool {
    let sub = [Some(-1), None, None];
    x.num().substitute_ints(sub).is_zero() && !x.den().substitute_ints(sub).is_zero()
}

/// Markov and trace axioms on 3-strand samples and random pairs, symbolically. The two
/// stabilizations are compared on the slice `a = -1`, where the trace computes the
/// invariant; away from it they differ by a multiple of `a + 1`.
pub fn verify_markov(t: &TraceCoeffs, samples: &[Vec<i32>], pairs: &[(Vec<i32>, Vec<i32>)]) -> Vec<CheckRow> {
    let mut out = Vec::new();
    for b in samples {
        let up = t.tr4(&embed(b, 3));
        let down = t.tr4(&embed(b, -3));
        let flat = t.tr4(b);
        let diff = &up - &down;
        out.push(CheckRow::new(
            format!("markov {b:?}"),
            vanishes_at_minus_one(&diff) && flat.is_zero(),
            format!("tr(b s3) = {up}; equal for all a: {}; tr(b) = {flat}", diff.is_zero()),
        ));
    }
    for (x, y) in pairs {
        let xy: Vec<i32> = x.iter().chain(y).copied().collect();
        let yx: Vec<i32> = y.iter().chain(x).copied().collect();
        let ok = t.tr4(&xy) == t.tr4(&yx);
        out.push(CheckRow::new(format!("cyclic {x:?} {y:?}"), ok, ""));
    }
    out
}

/// Random words on generators `1..=gens`.
pub fn random_words(seed: u64, count: usize, gens: i32, max_len: usize) -> Vec<Vec<i32>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let len = rng.gen_range(0..=max_len);
            (0..len).map(|_| rng.gen_range(1..=gens) * if rng.gen_bool(0.5) { 1 } else { -1 }).collect()
        })
        .collect()
}

/// For nonzero `z`, the trace solved from the family values must violate the Markov
/// property on `s1^-1 s3^-1` or `s2^-1 s3^-1`. Returns the residuals at each point.
pub fn z_falsification(labels: &[IrrepLabel], seed: u64, points: usize) -> Vec<(BigRational, [i64; 3], BigRational, BigRational)> {
    let models: Vec<IrrepModel> = labels.iter().map(build_model).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5a);
    let mut out = Vec::new();
    for v in sample_points(seed, 4 * points) {
        if out.len() == points {
            break;
        }
        let z = BigRational::new(rng.gen_range(1..50).into(), rng.gen_range(1..50).into());
        let Some(x) = solve_at(&models, v, &z) else { continue };
        let value = |w: &[i32]| -> BigRational { traces_at(&models, w, v).iter().zip(&x).map(|(t, c)| t * c).sum() };
        let r1 = value(&[-1, -3]) - &z;
        let r2 = value(&[-2, -3]) - &z;
        out.push((z, v, r1, r2));
    }
    out
}

/// Residual of the z = 0 trace on the two test words at the same points (must vanish).
pub fn z_zero_residuals(t: &TraceCoeffs, pts: &[[i64; 3]]) -> bool {
    pts.iter().all(|&v| {
        [[-1, -3], [-2, -3]].iter().all(|w| t.tr4_at(w, v).map_or(false, |x| x.is_zero()))
    })
}

/// Laurent polynomial in (t0, t1) from a polynomial in b, c with `a` already substituted.
fn bc_to_laurent(p: &MultiPoly) -> Result<Laurent, String> {
    let mut terms = Vec::new();
    for (m, c) in p.terms() {
        if m[0] != 0 || !c.v.is_zero() {
            return Err("unexpected term after substitution".into());
        }
        terms.push(((m[1] as i32, m[2] as i32), c.u.clone()));
    }
    Ok(Laurent::from_terms(terms))
}

#[derive(Debug, Clone, Serialize)]
pub struct CrosscheckReport {
    pub braid: String,
    pub lg: String,
    pub trace_num: String,
    pub trace_den: String,
    pub equal: bool,
}

/// Compares the trace at `(a, b, c) = (-1, t0, t1)` with the R-matrix invariant.
pub fn crosscheck(t: &TraceCoeffs, w: &BraidWord) -> Result<CrosscheckReport, String> {
    if w.strands() > 4 {
        return Err(format!("{} strands exceeds 4", w.strands()));
    }
    let w4 = w.embed(4);
    let tr = t.tr4(w4.letters());
    let sub = [Some(-1), None, None];
    let n = bc_to_laurent(&tr.num().substitute_ints(sub))?;
    let d = bc_to_laurent(&tr.den().substitute_ints(sub))?;
    if d.is_zero() {
        return Err("trace denominator vanishes at a = -1".into());
    }
    let lg = rmatrix::lg_invariant(&w4).map_err(|e| e.to_string())?;
    let equal = &lg * &d == n;
    Ok(CrosscheckReport { braid: w4.to_string(), lg: lg.to_string(), trace_num: n.to_string(), trace_den: d.to_string(), equal })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_shapes() {
        let t = table_entries();
        assert_eq!(t.len(), 10);
        // the chi_8 entry at (2,3,5)
        let v = t[7].at([2, 3, 5]).unwrap();
        let want = BigRational::new((25 * 3 * 11 * 7).into(), (2 * -2 * 8 * (12 - 125)).into());
        assert_eq!(v, want);
    }
}
