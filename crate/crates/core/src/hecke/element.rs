//! Linear combinations of braid words with rational-function coefficients.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::models::{abc, poly_identity, IrrepModel, ModPoint, PolyMatrix, RatMatrix};
use crate::arith::{MultiPoly, RatFunc};
use crate::linalg::ModMatrix;

#[derive(Debug, Clone, PartialEq, Default)]
pub struct AlgebraElement {
    /// (letters, coefficient); words are kept in insertion order and are distinct
    pub terms: Vec<(Vec<i32>, RatFunc)>,
}

impl AlgebraElement {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn word(letters: &[i32]) -> Self {
        AlgebraElement { terms: vec![(letters.to_vec(), RatFunc::one())] }
    }

    /// Adds `coeff * word`, merging with an existing term.
    pub fn add_term(&mut self, letters: &[i32], coeff: RatFunc) {
        if coeff.is_zero() {
            return;
        }
        if let Some(pos) = self.terms.iter().position(|(w, _)| w == letters) {
            let s = &self.terms[pos].1 + &coeff;
            if s.is_zero() {
                self.terms.remove(pos);
            } else {
                self.terms[pos].1 = s;
            }
        } else {
            self.terms.push((letters.to_vec(), coeff));
        }
    }

    pub fn add(&self, o: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        for (w, c) in &o.terms {
            out.add_term(w, c.clone());
        }
        out
    }

    pub fn scale(&self, k: &RatFunc) -> AlgebraElement {
        let mut out = AlgebraElement::new();
        for (w, c) in &self.terms {
            out.add_term(w, c * k);
        }
        out
    }

    /// Product in the braid group algebra (words concatenate, no reduction).
    pub fn mul(&self, o: &AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::new();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &o.terms {
                let w: Vec<i32> = w1.iter().chain(w2).copied().collect();
                out.add_term(&w, c1 * c2);
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Highest generator index used.
    pub fn max_generator(&self) -> usize {
        self.terms.iter().flat_map(|(w, _)| w.iter()).map(|l| l.unsigned_abs() as usize).max().unwrap_or(0)
    }

    /// Image in a model, modulo a prime. `None` if a coefficient or the model is undefined there.
    pub fn evaluate_mod(&self, m: &IrrepModel, pt: &ModPoint) -> Option<ModMatrix> {
        let g = m.at_mod(pt)?;
        let mut acc = ModMatrix::zeros(m.dim, m.dim, pt.p);
        for (w, c) in &self.terms {
            let k = c.eval_mod(&pt.vals, pt.j, pt.p)?;
            acc.add_scaled(&g.word(w), k);
        }
        Some(acc)
    }

    /// Exact image in a model, as a matrix of rational functions.
    pub fn evaluate(&self, m: &IrrepModel) -> RatMatrix {
        let (num, den) = self.evaluate_common(m);
        num.iter().map(|r| r.iter().map(|e| RatFunc::new(e.clone(), den.clone()).unwrap()).collect()).collect()
    }

    /// Exact image as `(numerator matrix, common denominator)`. The denominator is a
    /// product of the distinct non-monomial coefficient denominators times a monomial.
    pub fn evaluate_common(&self, m: &IrrepModel) -> (PolyMatrix, MultiPoly) {
        if self.terms.is_empty() {
            return (vec![vec![MultiPoly::zero(); m.dim]; m.dim], MultiPoly::one());
        }
        // split each denominator (including abc^k from inverse letters) into a monomial and the rest
        struct Part {
            mono: [u32; 3],
            rest_idx: Option<usize>,
        }
        let mut rests: Vec<MultiPoly> = Vec::new();
        let mut parts = Vec::new();
        for (w, c) in &self.terms {
            let k = w.iter().filter(|&&l| l < 0).count() as u32;
            let den = c.den();
            let mc = den.monomial_content();
            let rest = den.div_monomial(mc);
            let rest_idx = if rest.is_one() {
                None
            } else {
                Some(match rests.iter().position(|r| r == &rest) {
                    Some(i) => i,
                    None => {
                        rests.push(rest.clone());
                        rests.len() - 1
                    }
                })
            };
            parts.push(Part { mono: [mc[0] + k, mc[1] + k, mc[2] + k], rest_idx });
        }
        let mut lmono = [0u32; 3];
        for pa in &parts {
            for v in 0..3 {
                lmono[v] = lmono[v].max(pa.mono[v]);
            }
        }
        let rest_prod = rests.iter().fold(MultiPoly::one(), |acc, r| &acc * r);
        let den = rest_prod.mul_monomial(lmono);
        let mut num = vec![vec![MultiPoly::zero(); m.dim]; m.dim];
        for ((w, c), pa) in self.terms.iter().zip(&parts) {
            let cofactor_rest = match pa.rest_idx {
                Some(i) => rests.iter().enumerate().filter(|(j, _)| *j != i).fold(MultiPoly::one(), |acc, (_, r)| &acc * r),
                None => rest_prod.clone(),
            };
            let mono_cof = [lmono[0] - pa.mono[0], lmono[1] - pa.mono[1], lmono[2] - pa.mono[2]];
            let scale = (&cofactor_rest * c.num()).mul_monomial(mono_cof);
            let pw = m.scaled_word_poly(w);
            for i in 0..m.dim {
                for j in 0..m.dim {
                    if !pw[i][j].is_zero() {
                        num[i][j] = &num[i][j] + &(&scale * &pw[i][j]);
                    }
                }
            }
        }
        (num, den)
    }

    /// True when the element vanishes exactly in the model.
    pub fn vanishes_in(&self, m: &IrrepModel) -> bool {
        let (num, _) = self.evaluate_common(m);
        num.iter().all(|r| r.iter().all(MultiPoly::is_zero))
    }
}

/// The image of a single word as exact rational functions.
pub fn word_matrix(m: &IrrepModel, letters: &[i32]) -> RatMatrix {
    let p = m.scaled_word_poly(letters);
    let k = letters.iter().filter(|&&l| l < 0).count() as u32;
    let d = abc().pow(k);
    p.iter().map(|r| r.iter().map(|e| RatFunc::new(e.clone(), d.clone()).unwrap()).collect()).collect()
}

pub fn identity_matrix(n: usize) -> RatMatrix {
    poly_identity(n).into_iter().map(|r| r.into_iter().map(RatFunc::from_poly).collect()).collect()
}

/// Renders a word as `[i1,i2,...]`.
pub fn word_text(letters: &[i32]) -> String {
    let body: Vec<String> = letters.iter().map(|l| l.to_string()).collect();
    format!("[{}]", body.join(","))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoeffJson {
    pub num: String,
    pub den: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub word: String,
    pub coeff: CoeffJson,
}

impl AlgebraElement {
    pub fn to_json_terms(&self) -> Vec<TermJson> {
        self.terms
            .iter()
            .map(|(w, c)| TermJson {
                word: word_text(w),
                coeff: CoeffJson { num: c.num().to_string(), den: c.den().to_string() },
            })
            .collect()
    }

    pub fn from_json_terms(terms: &[TermJson]) -> Result<Self, String> {
        let mut out = AlgebraElement::new();
        for t in terms {
            let inner = t.word.trim().trim_start_matches('[').trim_end_matches(']');
            let letters: Vec<i32> = if inner.trim().is_empty() {
                Vec::new()
            } else {
                inner.split(',').map(|x| x.trim().parse::<i32>().map_err(|e| e.to_string())).collect::<Result<_, _>>()?
            };
            let num = MultiPoly::parse(&t.coeff.num).map_err(|e| e.to_string())?;
            let den = MultiPoly::parse(&t.coeff.den).map_err(|e| e.to_string())?;
            out.add_term(&letters, RatFunc::new(num, den).map_err(|e| e.to_string())?);
        }
        Ok(out)
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})*{}", word_text(w))?;
        }
        Ok(())
    }
}
