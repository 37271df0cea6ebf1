//! Identification of the irreducible representations of LG3 and LG4 among those of H3
//! and H4, by matching restrictions against the branching graph.

use super::labels::{h3_labels, h4_labels, IrrepLabel};
use super::models::build_model;
use super::restriction::{restriction_multiplicities, restriction_to_h2, Multiset};
use crate::bratteli::{level_dims, parents, Weight};

/// Level-2 nodes and the eigenvalue of s1 on them.
fn level2_seed() -> Vec<(Weight, IrrepLabel)> {
    vec![
        (Weight::new(0, 0, 2), "S_c".parse().unwrap()),
        (Weight::new(0, 1, 2), "S_b".parse().unwrap()),
        (Weight::new(1, 0, 2), "S_a".parse().unwrap()),
    ]
}

fn identify(
    level: u32,
    below: &[(Weight, IrrepLabel)],
    candidates: &[(IrrepLabel, Multiset)],
) -> Result<Vec<(Weight, IrrepLabel)>, String> {
    let mut out = Vec::new();
    for &(a, k) in level_dims(level).counts.keys() {
        let w = Weight::new(a, k, level);
        let mut want = Multiset::new();
        for p in parents(w) {
            let l = below.iter().find(|(x, _)| *x == p).map(|(_, l)| l.clone()).ok_or("unidentified parent")?;
            *want.entry(l).or_insert(0) += 1;
        }
        let hits: Vec<&IrrepLabel> = candidates.iter().filter(|(_, r)| *r == want).map(|(l, _)| l).collect();
        match hits.as_slice() {
            [l] => out.push((w, (*l).clone())),
            _ => return Err(format!("{w}: {} candidate representations", hits.len())),
        }
    }
    Ok(out)
}

/// Level-3 and level-4 nodes with their representation labels.
pub fn identify_levels(seed: u64) -> Result<(Vec<(Weight, IrrepLabel)>, Vec<(Weight, IrrepLabel)>), String> {
    let h3: Vec<(IrrepLabel, Multiset)> = h3_labels()
        .into_iter()
        .map(|l| restriction_to_h2(&build_model(&l), seed).map(|r| (l, r)))
        .collect::<Result<_, _>>()?;
    let l3 = identify(3, &level2_seed(), &h3)?;
    let h4: Vec<(IrrepLabel, Multiset)> = h4_labels()
        .into_iter()
        .map(|l| restriction_multiplicities(&build_model(&l), seed).map(|r| (l, r)))
        .collect::<Result<_, _>>()?;
    let l4 = identify(4, &l3, &h4)?;
    Ok((l3, l4))
}

/// The H3 representation killed in LG3.
pub fn lg3_excluded(seed: u64) -> Result<IrrepLabel, String> {
    let (l3, _) = identify_levels(seed)?;
    let mut rest: Vec<IrrepLabel> = h3_labels().into_iter().filter(|l| !l3.iter().any(|(_, x)| x == l)).collect();
    match (rest.pop(), rest.is_empty()) {
        (Some(l), true) => Ok(l),
        _ => Err("LG3 should miss exactly one representation of H3".into()),
    }
}

/// The 6 representations of LG3, in H3 order.
pub fn lg3_irreps(seed: u64) -> Result<Vec<IrrepLabel>, String> {
    let bad = lg3_excluded(seed)?;
    Ok(h3_labels().into_iter().filter(|l| *l != bad).collect())
}

/// H4 representations whose restriction avoids the H3 representation killed by r2.
pub fn r2_quotient_labels(seed: u64) -> Result<Vec<IrrepLabel>, String> {
    let bad = lg3_excluded(seed)?;
    let mut out = Vec::new();
    for l in h4_labels() {
        if !restriction_multiplicities(&build_model(&l), seed)?.contains_key(&bad) {
            out.push(l);
        }
    }
    Ok(out)
}

/// The 10 representations of LG4, in H4 storage order.
pub fn lg4_irreps(seed: u64) -> Result<Vec<IrrepLabel>, String> {
    let (_, l4) = identify_levels(seed)?;
    let quotient = r2_quotient_labels(seed)?;
    let out: Vec<IrrepLabel> = h4_labels().into_iter().filter(|l| l4.iter().any(|(_, x)| x == l)).collect();
    if out.len() != l4.len() {
        return Err("two level-4 nodes share a representation".into());
    }
    if let Some(l) = out.iter().find(|l| !quotient.contains(l)) {
        return Err(format!("{l} does not factor through the r2 quotient"));
    }
    let mut dims: Vec<usize> = out.iter().map(IrrepLabel::dim).collect();
    let mut counts: Vec<usize> =
        level_dims(4).counts.values().map(|c| c.to_string().parse().unwrap()).collect();
    dims.sort();
    counts.sort();
    if dims != counts {
        return Err(format!("dimensions {dims:?} differ from path counts {counts:?}"));
    }
    Ok(out)
}

pub fn sum_dim_sq(labels: &[IrrepLabel]) -> usize {
    labels.iter().map(|l| l.dim() * l.dim()).sum()
}
