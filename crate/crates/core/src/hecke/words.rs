//! Braid-word families used as spanning sets and bases of LG3 and LG4.

pub type Word = Vec<i32>;

/// All sign choices of a pattern of generator indices, in lexicographic order of signs
/// (negative first).
pub fn sign_choices(pattern: &[i32]) -> Vec<Word> {
    let k = pattern.len();
    (0..1u32 << k)
        .map(|mask| {
            pattern
                .iter()
                .enumerate()
                .map(|(i, &g)| if mask >> (k - 1 - i) & 1 == 1 { g } else { -g })
                .collect()
        })
        .collect()
}

fn shift(w: &[i32], by: i32) -> Word {
    w.iter().map(|&l| l.signum() * (l.abs() + by)).collect()
}

fn cat(x: &[i32], y: &[i32]) -> Word {
    x.iter().chain(y).copied().collect()
}

/// The 13 words of length at most 2 spanning H2 + H2 s2 H2 inside LG3.
pub fn b0_3() -> Vec<Word> {
    let mut out = vec![vec![], vec![1], vec![-1], vec![2], vec![-2]];
    out.extend([vec![1, 2], vec![1, -2], vec![-1, 2], vec![-1, -2]]);
    out.extend([vec![2, 1], vec![2, -1], vec![-2, 1], vec![-2, -1]]);
    out
}

/// The 7 length-3 words completing `b0_3` to a basis of LG3.
pub fn box_words() -> Vec<Word> {
    vec![
        vec![-1, -2, -1],
        vec![-1, -2, 1],
        vec![-1, 2, -1],
        vec![1, -2, -1],
        vec![1, -2, 1],
        vec![1, 2, -1],
        vec![-2, 1, -2],
    ]
}

/// Basis of LG3 (20 words).
pub fn b_3() -> Vec<Word> {
    let mut out = b0_3();
    out.extend(box_words());
    out
}

/// The 24-word spanning set of H3.
pub fn h3_spanning() -> Vec<Word> {
    let h2: [&[i32]; 3] = [&[], &[1], &[-1]];
    let mut out = h2.iter().map(|w| w.to_vec()).collect::<Vec<_>>();
    for mid in [2, -2] {
        for l in h2 {
            for r in h2 {
                out.push(cat(&cat(l, &[mid]), r));
            }
        }
    }
    out.extend([vec![2, -1, 2], vec![1, 2, -1, 2], vec![-1, 2, -1, 2]]);
    out
}

/// Words with at most two crossings (27).
pub fn b0_4() -> Vec<Word> {
    let mut out = vec![vec![]];
    for g in 1..=3 {
        out.push(vec![-g]);
        out.push(vec![g]);
    }
    for pat in [[1, 2], [2, 1], [2, 3], [3, 2], [1, 3]] {
        out.extend(sign_choices(&pat));
    }
    out
}

/// Words with three crossings (46).
pub fn b1_4() -> Vec<Word> {
    let mut out = Vec::new();
    for pat in [[1, 2, 3], [1, 3, 2], [3, 2, 1], [2, 1, 3]] {
        out.extend(sign_choices(&pat));
    }
    out.extend(box_words());
    out.extend(box_words().iter().map(|w| shift(w, 1)));
    out
}

/// Words with four crossings (72).
pub fn b2_4() -> Vec<Word> {
    let mut out = sign_choices(&[2, 1, 3, 2]);
    for s in [-3, 3] {
        for b in box_words() {
            out.push(cat(&b, &[s]));
            out.push(cat(&[s], &b));
        }
    }
    for s in [-1, 1] {
        for b in box_words() {
            let b = shift(&b, 1);
            out.push(cat(&b, &[s]));
            out.push(cat(&[s], &b));
        }
    }
    out
}

/// `s1^± s3^-1 s2 s3^-1`
pub fn a3_up() -> Vec<Word> {
    vec![vec![-1, -3, 2, -3], vec![1, -3, 2, -3]]
}

/// `s3^-1 s2 s3^-1 s1^±`
pub fn a3_down() -> Vec<Word> {
    vec![vec![-3, 2, -3, -1], vec![-3, 2, -3, 1]]
}

fn union_145() -> Vec<Word> {
    let mut out = b0_4();
    out.extend(b1_4());
    out.extend(b2_4());
    out
}

fn without(ws: Vec<Word>, drop: &[Word]) -> Vec<Word> {
    ws.into_iter().filter(|w| !drop.contains(w)).collect()
}

/// The 145-word union with both `s3^-1 s2 s3^-1` variants removed (141 words, rank 139).
pub fn b3_4() -> Vec<Word> {
    let mut drop = a3_up();
    drop.extend(a3_down());
    without(union_145(), &drop)
}

/// The 145-word union with only the variants ending in `s1^±` removed.
pub fn b3_4_down() -> Vec<Word> {
    without(union_145(), &a3_up())
}

/// The 145-word union with only the variants starting with `s1^±` removed.
pub fn b3_4_up() -> Vec<Word> {
    without(union_145(), &a3_down())
}

fn removed_pair() -> Vec<Word> {
    vec![vec![-1, -2, -3, -2], vec![1, -2, -3, -2]]
}

/// Free family of 141 words used as the support of the r3 correction term.
pub fn b4_4() -> Vec<Word> {
    without(b3_4_down(), &removed_pair())
}

/// `b3_4` minus the removed pair (139 words).
pub fn b30_4() -> Vec<Word> {
    without(b3_4(), &removed_pair())
}

pub fn a5_left() -> Vec<Word> {
    vec![
        vec![-1, -2, -1, 3, 2],
        vec![-1, -2, 1, 3, 2],
        vec![-1, 2, -1, 3, 2],
        vec![1, -2, -1, 3, 2],
        vec![1, -2, 1, 3, 2],
        vec![1, 2, -1, 3, 2],
        vec![-1, -2, -1, 3, -2],
        vec![-1, 2, -1, 3, -2],
        vec![1, -2, -1, 3, -2],
    ]
}

/// `s2^± s3^± b` for the six box words `b` on the first three strands, minus four.
pub fn a5_right() -> Vec<Word> {
    let dropped: Vec<Word> =
        vec![vec![2, 3, -1, -2, -1], vec![2, 3, -1, -2, 1], vec![2, 3, 1, -2, -1], vec![2, 3, 1, 2, -1]];
    let mut out = Vec::new();
    for head in sign_choices(&[2, 3]) {
        for b in box_words().iter().take(6) {
            let w = cat(&head, b);
            if !dropped.contains(&w) {
                out.push(w);
            }
        }
    }
    out
}

pub fn a6() -> Vec<Word> {
    vec![
        vec![1, -2, 1, -3, 2, 1],
        vec![1, -2, 1, 3, -2, 1],
        vec![1, 2, 1, -3, -2, 1],
        vec![1, 2, 1, -3, 2, 1],
        vec![1, 2, 1, 3, -2, 1],
        vec![-1, 2, -1, -3, 2, -1],
        vec![-1, 2, -1, 3, -2, -1],
    ]
}

/// Basis of LG4 (175 words).
pub fn b6_4() -> Vec<Word> {
    let mut out = b30_4();
    out.extend(a5_left());
    out.extend(a5_right());
    out.extend(a6());
    out
}

/// `b1 s3^r b2` for `b1, b2` in the LG3 basis and `r` in {-1, 0, 1}, without repeats.
pub fn bimodule_words() -> Vec<Word> {
    let b = b_3();
    let mut out: Vec<Word> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for r in [vec![], vec![3], vec![-3]] {
        for b1 in &b {
            for b2 in &b {
                let w = cat(&cat(b1, &r), b2);
                if seen.insert(w.clone()) {
                    out.push(w);
                }
            }
        }
    }
    out
}

/// The extra word `s3^-1 s2 s3^-1`.
pub fn bimodule_extra() -> Word {
    vec![-3, 2, -3]
}

/// All words of length at most `len` on generators `1..=gens`.
pub fn all_words(gens: i32, len: usize) -> Vec<Word> {
    let letters: Vec<i32> = (1..=gens).flat_map(|g| [-g, g]).collect();
    let mut out = vec![vec![]];
    let mut frontier = vec![vec![]];
    for _ in 0..len {
        let mut next = Vec::new();
        for w in &frontier {
            for &l in &letters {
                if w.last() == Some(&-l) {
                    continue;
                }
                let mut x: Word = w.clone();
                x.push(l);
                next.push(x);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn family_sizes() {
        assert_eq!(b0_3().len(), 13);
        assert_eq!(b_3().len(), 20);
        assert_eq!(h3_spanning().len(), 24);
        assert_eq!(b0_4().len(), 27);
        assert_eq!(b1_4().len(), 46);
        assert_eq!(b2_4().len(), 72);
        assert_eq!(union_145().iter().collect::<HashSet<_>>().len(), 145);
        assert_eq!(b3_4().len(), 141);
        assert_eq!(b4_4().len(), 141);
        assert_eq!(b30_4().len(), 139);
        assert_eq!(a5_right().len(), 20);
        let b6 = b6_4();
        assert_eq!(b6.len(), 175);
        assert_eq!(b6.iter().collect::<HashSet<_>>().len(), 175);
    }
}
