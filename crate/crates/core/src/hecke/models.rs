//! Matrix models of the irreducible representations of H4 and their evaluation,
//! symbolically, modulo a prime, and over the integers.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::labels::{h4_labels, IrrepKind, IrrepLabel};
use crate::arith::{MultiPoly, RatFunc};
use crate::linalg::ModMatrix;
use crate::modp;

pub type PolyMatrix = Vec<Vec<MultiPoly>>;
pub type RatMatrix = Vec<Vec<RatFunc>>;
pub type IntMatrix = Vec<Vec<BigInt>>;

#[derive(Debug, Clone, PartialEq)]
pub struct IrrepModel {
    pub label: IrrepLabel,
    pub dim: usize,
    /// images of s1, s2, s3
    pub gens: Vec<PolyMatrix>,
}

fn pm(rows: &[&[&str]]) -> PolyMatrix {
    rows.iter().map(|r| r.iter().map(|e| MultiPoly::parse(e).expect("model entry")).collect()).collect()
}

fn proto_t() -> Vec<PolyMatrix> {
    let s1 = pm(&[&["b", "0"], &["b*c", "c"]]);
    let s2 = pm(&[&["c", "-1"], &["0", "b"]]);
    vec![s1.clone(), s2, s1]
}

fn proto_v3() -> Vec<PolyMatrix> {
    let s1 = pm(&[&["c", "0", "0"], &["a*c+b^2", "b", "0"], &["b", "1", "a"]]);
    let s2 = pm(&[&["a", "-1", "b"], &["0", "b", "-a*c-b^2"], &["0", "0", "c"]]);
    vec![s1.clone(), s2, s1]
}

fn proto_u() -> Vec<PolyMatrix> {
    vec![
        pm(&[&["b", "0", "0"], &["0", "a", "0"], &["a", "0", "a"]]),
        pm(&[&["a", "-a+b", "-b"], &["0", "b", "-b"], &["0", "0", "a"]]),
        pm(&[&["a", "0", "0"], &["0", "a", "0"], &["-a", "2*a", "b"]]),
    ]
}

fn proto_v6() -> Vec<PolyMatrix> {
    vec![
        pm(&[
            &["a", "0", "0", "0", "0", "0"],
            &["a*c+b^2", "b", "0", "0", "0", "0"],
            &["b", "1", "c", "0", "0", "0"],
            &["0", "0", "0", "a", "0", "0"],
            &["0", "0", "0", "0", "a", "0"],
            &["0", "0", "0", "1", "0", "b"],
        ]),
        pm(&[
            &["c", "-1", "b", "-1", "-b", "a"],
            &["0", "b", "-a*c-b^2", "0", "0", "-a*b"],
            &["0", "0", "a", "0", "0", "0"],
            &["0", "0", "0", "b", "a*c+b^2", "-a*b"],
            &["0", "0", "0", "0", "a", "0"],
            &["0", "0", "0", "0", "0", "a"],
        ]),
        pm(&[
            &["a", "0", "0", "0", "0", "0"],
            &["0", "a", "0", "0", "0", "0"],
            &["0", "0", "a", "0", "0", "0"],
            &["a*c+b^2", "0", "0", "b", "0", "0"],
            &["-b", "0", "0", "-1", "c", "0"],
            &["0", "1", "0", "0", "0", "b"],
        ]),
    ]
}

fn proto_w() -> Vec<PolyMatrix> {
    vec![
        pm(&[
            &["b", "0", "0", "0", "0", "0", "0", "0"],
            &["1", "c", "0", "0", "0", "0", "0", "0"],
            &["c", "a*b+c^2", "a", "0", "0", "0", "0", "0"],
            &["0", "0", "0", "b", "0", "0", "0", "0"],
            &["-1", "-c", "0", "b", "a", "0", "0", "0"],
            &["0", "0", "0", "0", "0", "c", "0", "0"],
            &["0", "0", "0", "b", "0", "-1", "a", "0"],
            &["0", "0", "0", "0", "0", "b-c", "0", "a"],
        ]),
        pm(&[
            &["a", "-a*b-c^2", "c", "0", "0", "0", "0", "0"],
            &["0", "c", "-1", "0", "0", "0", "0", "0"],
            &["0", "0", "b", "0", "0", "0", "0", "0"],
            &["0", "-a", "0", "a", "-a", "0", "0", "0"],
            &["0", "0", "0", "0", "b", "0", "0", "0"],
            &["0", "0", "-a", "0", "-a*c", "a", "a*c", "0"],
            &["0", "0", "-1", "0", "b-c", "0", "c", "0"],
            &["0", "0", "-c", "0", "b*c-c^2", "0", "a*b+c^2", "a"],
        ]),
        pm(&[
            &["a", "0", "0", "b*c-c^2", "0", "0", "0", "0"],
            &["0", "a", "0", "c", "0", "-1", "0", "0"],
            &["0", "0", "a", "0", "0", "b-c", "a*c+c^2", "-c"],
            &["0", "0", "0", "c", "0", "0", "0", "0"],
            &["0", "0", "0", "0", "a", "1", "-a", "0"],
            &["0", "0", "0", "0", "0", "b", "0", "0"],
            &["0", "0", "0", "0", "0", "0", "c", "-1"],
            &["0", "0", "0", "0", "0", "0", "0", "b"],
        ]),
    ]
}

fn proto_x() -> Vec<PolyMatrix> {
    vec![
        pm(&[
            &["c", "0", "0", "0", "0", "0", "0", "0", "0"],
            &["a*c+b^2", "b", "0", "0", "0", "0", "-j^2*b*c", "0", "0"],
            &["b", "1", "a", "0", "0", "0", "c", "0", "0"],
            &["0", "0", "0", "a", "0", "0", "-c", "j*c", "a+j^2*b"],
            &["j^2*a-b", "0", "0", "0", "b", "0", "0", "0", "0"],
            &["j^2*a", "0", "0", "0", "b", "a", "0", "0", "0"],
            &["0", "0", "0", "0", "0", "0", "c", "0", "0"],
            &["0", "0", "0", "0", "0", "0", "0", "c", "0"],
            &["0", "0", "0", "0", "0", "0", "0", "j^2*c", "b"],
        ]),
        pm(&[
            &["a", "-1", "b", "-j*b", "0", "0", "0", "0", "b"],
            &["0", "b", "-a*c-b^2", "-a*c+j*b^2", "0", "0", "0", "0", "-a*c-b^2"],
            &["0", "0", "c", "0", "0", "0", "0", "0", "0"],
            &["0", "0", "0", "c", "0", "0", "0", "0", "0"],
            &["0", "0", "a", "a", "a", "-a", "0", "0", "0"],
            &["0", "0", "j*b", "0", "0", "b", "0", "0", "0"],
            &["0", "0", "0", "a", "0", "0", "a", "a", "a"],
            &["0", "0", "0", "0", "0", "0", "0", "b", "-j*b"],
            &["0", "0", "0", "0", "0", "0", "0", "0", "c"],
        ]),
        pm(&[
            &["c", "0", "0", "0", "0", "0", "0", "0", "0"],
            &["a*c+b^2", "b", "0", "0", "-j^2*b*c", "0", "0", "0", "0"],
            &["0", "0", "b", "0", "0", "-j^2*c", "0", "0", "0"],
            &["0", "0", "a+j^2*b", "a", "-c", "-j*c", "0", "0", "0"],
            &["0", "0", "0", "0", "c", "0", "0", "0", "0"],
            &["0", "0", "0", "0", "0", "c", "0", "0", "0"],
            &["j^2*a-b", "0", "0", "0", "0", "0", "b", "0", "0"],
            &["-j^2*a", "0", "0", "0", "0", "0", "-b", "a", "0"],
            &["b", "1", "0", "0", "c", "0", "0", "0", "a"],
        ]),
    ]
}

fn rename(gens: &[PolyMatrix], target: [usize; 3]) -> Vec<PolyMatrix> {
    gens.iter().map(|m| m.iter().map(|r| r.iter().map(|e| e.permute_vars(target)).collect()).collect()).collect()
}

fn third(x: usize, y: usize) -> usize {
    3 - x - y
}

/// The model attached to a label: a table prototype with its parameters renamed.
pub fn build_model(label: &IrrepLabel) -> IrrepModel {
    let p: Vec<usize> = label.params.iter().map(|&x| x as usize).collect();
    let gens = match label.kind {
        IrrepKind::S => {
            let m = vec![vec![MultiPoly::var(p[0])]];
            vec![m.clone(), m.clone(), m]
        }
        IrrepKind::T => rename(&proto_t(), [third(p[0], p[1]), p[0], p[1]]),
        IrrepKind::V3 => proto_v3(),
        IrrepKind::U => rename(&proto_u(), [p[0], p[1], third(p[0], p[1])]),
        IrrepKind::V6 => rename(&proto_v6(), [p[0], p[1], p[2]]),
        IrrepKind::W => rename(&proto_w(), [p[0], (p[0] + 1) % 3, (p[0] + 2) % 3]),
        IrrepKind::X => proto_x(),
        IrrepKind::XPrime => proto_x()
            .iter()
            .map(|m| m.iter().map(|r| r.iter().map(MultiPoly::conj_j).collect()).collect())
            .collect(),
    };
    IrrepModel { dim: label.dim(), label: label.clone(), gens }
}

/// All 24 models, in storage order.
pub fn build_h4_irreps() -> Vec<IrrepModel> {
    h4_labels().iter().map(build_model).collect()
}

pub fn poly_mul(x: &PolyMatrix, y: &PolyMatrix) -> PolyMatrix {
    let n = x.len();
    let m = y[0].len();
    let mut out = vec![vec![MultiPoly::zero(); m]; n];
    for i in 0..n {
        for k in 0..y.len() {
            if x[i][k].is_zero() {
                continue;
            }
            for j in 0..m {
                if !y[k][j].is_zero() {
                    out[i][j] = &out[i][j] + &(&x[i][k] * &y[k][j]);
                }
            }
        }
    }
    out
}

pub fn poly_identity(n: usize) -> PolyMatrix {
    (0..n).map(|i| (0..n).map(|j| if i == j { MultiPoly::one() } else { MultiPoly::zero() }).collect()).collect()
}

fn poly_lin(m: &PolyMatrix, k: &MultiPoly, shift: &MultiPoly) -> PolyMatrix {
    m.iter()
        .enumerate()
        .map(|(i, r)| {
            r.iter()
                .enumerate()
                .map(|(j, e)| {
                    let v = e * k;
                    if i == j {
                        &v + shift
                    } else {
                        v
                    }
                })
                .collect()
        })
        .collect()
}

pub fn poly_sub(x: &PolyMatrix, y: &PolyMatrix) -> PolyMatrix {
    x.iter().zip(y).map(|(r, s)| r.iter().zip(s).map(|(p, q)| p - q).collect()).collect()
}

pub fn poly_is_zero(m: &PolyMatrix) -> bool {
    m.iter().all(|r| r.iter().all(MultiPoly::is_zero))
}

fn e1() -> MultiPoly {
    &(&MultiPoly::a() + &MultiPoly::b()) + &MultiPoly::c()
}

fn e2() -> MultiPoly {
    let (a, b, c) = (MultiPoly::a(), MultiPoly::b(), MultiPoly::c());
    &(&(&a * &b) + &(&a * &c)) + &(&b * &c)
}

pub fn abc() -> MultiPoly {
    MultiPoly::term([1, 1, 1], crate::arith::ZJ::one())
}

/// `abc * M^{-1} = M^2 - (a+b+c) M + (ab+ac+bc) Id` for a generator image `M`.
pub fn scaled_inverse(m: &PolyMatrix) -> PolyMatrix {
    let sq = poly_mul(m, m);
    let lin = poly_lin(m, &-&e1(), &e2());
    sq.iter().zip(&lin).map(|(r, s)| r.iter().zip(s).map(|(p, q)| p + q).collect()).collect()
}

/// `M^{-1}` over the rational functions, checked against `M * M^{-1} = Id`.
pub fn generator_inverse(m: &PolyMatrix) -> Result<RatMatrix, String> {
    let s = scaled_inverse(m);
    if poly_mul(m, &s) != poly_lin(&poly_identity(m.len()), &abc(), &MultiPoly::zero()) {
        return Err("generator does not satisfy the cubic relation".into());
    }
    let d = abc();
    Ok(s.iter().map(|r| r.iter().map(|e| RatFunc::new(e.clone(), d.clone()).unwrap()).collect()).collect())
}

/// A prime together with values of a, b, c (and of j when the prime allows it).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ModPoint {
    pub p: u64,
    pub vals: [u64; 3],
    pub j: Option<u64>,
}

impl ModPoint {
    pub fn new(p: u64, vals: [u64; 3]) -> Self {
        ModPoint { p, vals, j: modp::cube_root_of_unity(p) }
    }

    pub fn abc(&self) -> u64 {
        modp::mul(modp::mul(self.vals[0], self.vals[1], self.p), self.vals[2], self.p)
    }
}

/// Generator images and their inverses at a modular point.
#[derive(Debug, Clone)]
pub struct ModGens {
    pub gens: Vec<ModMatrix>,
    pub invs: Vec<ModMatrix>,
}

impl ModGens {
    pub fn dim(&self) -> usize {
        self.gens[0].rows
    }

    /// The image of a braid word.
    pub fn word(&self, letters: &[i32]) -> ModMatrix {
        let n = self.dim();
        let p = self.gens[0].p;
        let mut acc = ModMatrix::identity(n, p);
        for &l in letters {
            let i = l.unsigned_abs() as usize - 1;
            let g = if l > 0 { &self.gens[i] } else { &self.invs[i] };
            acc = acc.mul(g);
        }
        acc
    }
}

fn poly_to_mod(m: &PolyMatrix, pt: &ModPoint) -> Option<ModMatrix> {
    let n = m.len();
    let mut out = ModMatrix::zeros(n, n, pt.p);
    for i in 0..n {
        for j in 0..n {
            out.set(i, j, m[i][j].eval_mod(&pt.vals, pt.j, pt.p)?);
        }
    }
    Some(out)
}

/// An integer matrix with `abc * M^{-1}` in place of each inverse generator.
#[derive(Debug, Clone)]
pub struct IntGens {
    pub gens: Vec<IntMatrix>,
    pub scaled_invs: Vec<IntMatrix>,
}

fn int_mul(x: &IntMatrix, y: &IntMatrix) -> IntMatrix {
    let n = x.len();
    let m = y[0].len();
    let mut out = vec![vec![BigInt::zero(); m]; n];
    for i in 0..n {
        for k in 0..y.len() {
            if x[i][k].is_zero() {
                continue;
            }
            for j in 0..m {
                if !y[k][j].is_zero() {
                    out[i][j] += &x[i][k] * &y[k][j];
                }
            }
        }
    }
    out
}

impl IntGens {
    /// `(abc)^k` times the image of the word, where `k` is the number of inverse letters.
    pub fn scaled_word(&self, letters: &[i32]) -> IntMatrix {
        let n = self.gens[0].len();
        let mut acc: IntMatrix =
            (0..n).map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect()).collect();
        for &l in letters {
            let i = l.unsigned_abs() as usize - 1;
            let g = if l > 0 { &self.gens[i] } else { &self.scaled_invs[i] };
            acc = int_mul(&acc, g);
        }
        acc
    }
}

impl IrrepModel {
    pub fn has_j(&self) -> bool {
        self.gens.iter().any(|m| m.iter().any(|r| r.iter().any(MultiPoly::has_j)))
    }

    /// Images at a modular point; `None` if j is needed but unavailable or abc = 0.
    pub fn at_mod(&self, pt: &ModPoint) -> Option<ModGens> {
        let inv_abc = {
            let d = pt.abc();
            if d == 0 {
                return None;
            }
            modp::inv(d, pt.p)
        };
        let mut gens = Vec::new();
        let mut invs = Vec::new();
        for g in &self.gens {
            gens.push(poly_to_mod(g, pt)?);
            let mut s = poly_to_mod(&scaled_inverse(g), pt)?;
            for x in s.data.iter_mut() {
                *x = modp::mul(*x, inv_abc, pt.p);
            }
            invs.push(s);
        }
        Some(ModGens { gens, invs })
    }

    /// Images at an integer point (j-free models only).
    pub fn at_ints(&self, vals: [i64; 3]) -> IntGens {
        assert!(!self.has_j(), "integer evaluation needs a j-free model");
        let sub = |m: &PolyMatrix| -> IntMatrix {
            m.iter()
                .map(|r| {
                    r.iter()
                        .map(|e| {
                            let s = e.substitute_ints([Some(vals[0]), Some(vals[1]), Some(vals[2])]);
                            s.terms().first().map(|(_, c)| c.u.clone()).unwrap_or_default()
                        })
                        .collect()
                })
                .collect()
        };
        IntGens {
            gens: self.gens.iter().map(sub).collect(),
            scaled_invs: self.gens.iter().map(|g| sub(&scaled_inverse(g))).collect(),
        }
    }

    /// `(abc)^k` times the image of the word as a polynomial matrix, with `k` the number
    /// of inverse letters.
    pub fn scaled_word_poly(&self, letters: &[i32]) -> PolyMatrix {
        let mut acc = poly_identity(self.dim);
        for &l in letters {
            let i = l.unsigned_abs() as usize - 1;
            let g = if l > 0 { self.gens[i].clone() } else { scaled_inverse(&self.gens[i]) };
            acc = poly_mul(&acc, &g);
        }
        acc
    }

    /// Symbolic check of the braid relations and the cubic relation.
    pub fn check_relations(&self) -> Result<(), String> {
        let g = &self.gens;
        let ngens = if self.label.is_h3() && g.len() < 3 { 2 } else { 3 };
        let braid = |x: &PolyMatrix, y: &PolyMatrix| poly_mul(&poly_mul(x, y), x) == poly_mul(&poly_mul(y, x), y);
        if !braid(&g[0], &g[1]) {
            return Err(format!("{}: s1 s2 s1 != s2 s1 s2", self.label));
        }
        if ngens == 3 {
            if !braid(&g[1], &g[2]) {
                return Err(format!("{}: s2 s3 s2 != s3 s2 s3", self.label));
            }
            if poly_mul(&g[0], &g[2]) != poly_mul(&g[2], &g[0]) {
                return Err(format!("{}: s1 s3 != s3 s1", self.label));
            }
        }
        for (k, m) in g.iter().enumerate().take(ngens) {
            let n = self.dim;
            let mut acc = poly_identity(n);
            for v in 0..3 {
                let shifted = poly_lin(m, &MultiPoly::one(), &-&MultiPoly::var(v));
                acc = poly_mul(&acc, &shifted);
            }
            if !poly_is_zero(&acc) {
                return Err(format!("{}: cubic relation fails for s{}", self.label, k + 1));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_models_satisfy_relations() {
        for m in build_h4_irreps() {
            m.check_relations().unwrap();
        }
    }

    #[test]
    fn renaming() {
        let t = build_model(&"T_bc".parse().unwrap());
        assert_eq!(t.gens[0][1][0].to_string(), "b*c");
        let tab = build_model(&"T_ab".parse().unwrap());
        assert_eq!(tab.gens[0][0][0].to_string(), "a");
        assert_eq!(tab.gens[0][1][1].to_string(), "b");
        let inv = generator_inverse(&t.gens[0]).unwrap();
        assert_eq!(inv[0][0], RatFunc::new(MultiPoly::one(), MultiPoly::b()).unwrap());
    }
}
