//! Expansions of s1^-1 s2 s1 and s1 s2 s1 on shorter words, valid in every
//! representation of H3 except T_bc.

use serde::Serialize;

use super::element::AlgebraElement;
use super::labels::IrrepLabel;
use super::models::build_model;
use crate::arith::{MultiPoly, RatFunc};

fn rf(num: &str, den: &str) -> RatFunc {
    RatFunc::new(MultiPoly::parse(num).unwrap(), MultiPoly::parse(den).unwrap()).unwrap()
}

fn element(terms: &[(&str, &str, &[i32])]) -> AlgebraElement {
    let mut e = AlgebraElement::new();
    for (n, d, w) in terms {
        e.add_term(w, rf(n, d));
    }
    e
}

/// Right-hand side of the 11-term expansion of `s1^-1 s2 s1`.
pub fn expansion_inv_pos_pos() -> AlgebraElement {
    element(&[
        ("-1", "a", &[1, 2]),
        ("a", "1", &[1, -2]),
        ("a", "1", &[-1, 2]),
        ("-a^3", "1", &[-1, -2]),
        ("1", "a", &[2, 1]),
        ("-a", "1", &[2, -1]),
        ("-a", "1", &[-2, 1]),
        ("a^3", "1", &[-2, -1]),
        ("a^2", "1", &[-1, -2, 1]),
        ("-a^2", "1", &[1, -2, -1]),
        ("1", "1", &[1, 2, -1]),
    ])
}

/// Right-hand side of the 15-term expansion of `s1 s2 s1`.
pub fn expansion_pos_pos_pos() -> AlgebraElement {
    element(&[
        ("-a*b - a*c - b*c - a^2", "1", &[2]),
        ("a^2*b*c + a^3*b + a^3*c + a^4", "1", &[-2]),
        ("a + b + c", "1", &[1, 2]),
        ("-a^2*b - a^2*c - a^3", "1", &[1, -2]),
        ("a*b*c", "1", &[-1, 2]),
        ("-a^3*b*c", "1", &[-1, -2]),
        ("a", "1", &[2, 1]),
        ("a*b*c + a^2*b + a^2*c", "1", &[2, -1]),
        ("-a^3", "1", &[-2, 1]),
        ("-a^3*b*c - a^4*b - a^4*c", "1", &[-2, -1]),
        ("a^4*b*c", "1", &[-1, -2, -1]),
        ("-a^2*b*c", "1", &[-1, 2, -1]),
        ("a^3*b + a^3*c", "1", &[1, -2, -1]),
        ("a^2", "1", &[1, -2, 1]),
        ("-a*b - a*c", "1", &[1, 2, -1]),
    ])
}

/// `lhs - rhs` for both identities.
pub fn expansion_residuals() -> Vec<(Vec<i32>, AlgebraElement)> {
    let mut out = Vec::new();
    for (lhs, rhs) in [(vec![-1, 2, 1], expansion_inv_pos_pos()), (vec![1, 2, 1], expansion_pos_pos_pos())] {
        let r = AlgebraElement::word(&lhs).add(&rhs.scale(&RatFunc::int(-1)));
        out.push((lhs, r));
    }
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct ExpansionRow {
    pub word: String,
    pub terms: usize,
    pub label: String,
    pub holds: bool,
}

/// Exact residual check of both identities in each listed representation.
pub fn verify_b3_expansions(labels: &[IrrepLabel]) -> Vec<ExpansionRow> {
    let mut rows = Vec::new();
    for (lhs, r) in expansion_residuals() {
        for l in labels {
            rows.push(ExpansionRow {
                word: super::element::word_text(&lhs),
                terms: r.len() - 1,
                label: l.to_string(),
                holds: r.vanishes_in(&build_model(l)),
            });
        }
    }
    rows
}
