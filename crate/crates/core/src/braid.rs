//! Braid words, closure combinatorics and seeded Markov-move perturbation.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("malformed braid text: {0}")]
    Malformed(String),
    #[error("letter {letter} out of range for {n} strands")]
    OutOfRange { letter: i32, n: usize },
    #[error("zero letter")]
    ZeroLetter,
    #[error("strand count must be at least 1")]
    NoStrands,
}

/// A word in the Artin generators of the braid group on `n` strands.
/// Letter `i` is `s_i`, letter `-i` is its inverse.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BraidWord {
    n: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(n: usize, letters: Vec<i32>) -> Result<Self, BraidError> {
        if n == 0 {
            return Err(BraidError::NoStrands);
        }
        for &l in &letters {
            if l == 0 {
                return Err(BraidError::ZeroLetter);
            }
            if l.unsigned_abs() as usize >= n {
                return Err(BraidError::OutOfRange { letter: l, n });
            }
        }
        Ok(BraidWord { n, letters })
    }

    pub fn identity(n: usize) -> Self {
        assert!(n >= 1);
        BraidWord { n, letters: Vec::new() }
    }

    /// Parses `[i1,i2,...]`.
    pub fn parse(text: &str, n: usize) -> Result<Self, BraidError> {
        let t = text.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .ok_or_else(|| BraidError::Malformed(format!("expected `[...]`, got `{t}`")))?;
        let mut letters = Vec::new();
        if !inner.trim().is_empty() {
            for piece in inner.split(',') {
                let v: i32 = piece
                    .trim()
                    .parse()
                    .map_err(|_| BraidError::Malformed(format!("bad letter `{}`", piece.trim())))?;
                letters.push(v);
            }
        }
        Self::new(n, letters)
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Sum of the crossing signs.
    pub fn writhe(&self) -> i64 {
        self.letters.iter().map(|&l| l.signum() as i64).sum()
    }

    /// The same word viewed on `m >= n` strands.
    pub fn embed(&self, m: usize) -> Self {
        assert!(m >= self.n);
        BraidWord { n: m, letters: self.letters.clone() }
    }

    pub fn concat(&self, other: &BraidWord) -> Self {
        let n = self.n.max(other.n);
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        BraidWord { n, letters }
    }

    pub fn inverse(&self) -> Self {
        BraidWord { n: self.n, letters: self.letters.iter().rev().map(|l| -l).collect() }
    }

    /// Image of each strand position under the underlying permutation.
    pub fn permutation(&self) -> Vec<usize> {
        let mut pos: Vec<usize> = (0..self.n).collect();
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            pos.swap(i, i + 1);
        }
        pos
    }

    /// Number of components of the closure.
    pub fn closure_components(&self) -> usize {
        let perm = self.permutation();
        let mut seen = vec![false; self.n];
        let mut cycles = 0;
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            cycles += 1;
            let mut k = s;
            while !seen[k] {
                seen[k] = true;
                k = perm[k];
            }
        }
        cycles
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, "]")
    }
}

/// One elementary move applied by [`markov_perturb`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MarkovMove {
    Conjugate(i32),
    Rotate,
    Stabilize(i32),
    Destabilize,
    BraidRelation(usize),
    FarCommute(usize),
    InsertPair(usize, i32),
    CancelPair(usize),
}

impl MarkovMove {
    pub fn is_stabilization(&self) -> bool {
        matches!(self, MarkovMove::Stabilize(_) | MarkovMove::Destabilize)
    }
}

/// A random word whose closure is the same link as that of `w`; see [`markov_perturb_bounded`].
pub fn markov_perturb(w: &BraidWord, seed: u64, steps: usize) -> BraidWord {
    markov_perturb_bounded(w, seed, steps, usize::MAX).0
}

/// Applies `steps` seeded random moves (conjugation, stabilization, destabilization,
/// braid relations, far commutation, free insertion and cancellation), never exceeding
/// `max_strands` strands. Returns the word and the moves applied.
pub fn markov_perturb_bounded(
    w: &BraidWord,
    seed: u64,
    steps: usize,
    max_strands: usize,
) -> (BraidWord, Vec<MarkovMove>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut n = w.n;
    let mut word = w.letters.clone();
    let mut log = Vec::with_capacity(steps);
    while log.len() < steps {
        let kind = rng.gen_range(0..8);
        let mv = match kind {
            0 if n >= 2 => {
                let g = random_letter(&mut rng, n);
                word.insert(0, -g);
                word.push(g);
                Some(MarkovMove::Conjugate(g))
            }
            1 if !word.is_empty() => {
                let first = word.remove(0);
                word.push(first);
                Some(MarkovMove::Rotate)
            }
            2 if n < max_strands => {
                let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
                let g = sign * n as i32;
                word.push(g);
                n += 1;
                Some(MarkovMove::Stabilize(g))
            }
            3 if n >= 2 => {
                let top = n as i32 - 1;
                let last_ok = word.last().map(|l| l.abs() == top).unwrap_or(false);
                if last_ok && word.iter().filter(|l| l.abs() == top).count() == 1 {
                    word.pop();
                    n -= 1;
                    Some(MarkovMove::Destabilize)
                } else {
                    None
                }
            }
            4 => {
                let sites: Vec<usize> = (0..word.len().saturating_sub(2))
                    .filter(|&k| {
                        let (x, y, z) = (word[k], word[k + 1], word[k + 2]);
                        x == z && x.signum() == y.signum() && (x.abs() - y.abs()).abs() == 1
                    })
                    .collect();
                if sites.is_empty() {
                    None
                } else {
                    let k = sites[rng.gen_range(0..sites.len())];
                    let (x, y) = (word[k], word[k + 1]);
                    word[k] = y;
                    word[k + 1] = x;
                    word[k + 2] = y;
                    Some(MarkovMove::BraidRelation(k))
                }
            }
            5 => {
                let sites: Vec<usize> = (0..word.len().saturating_sub(1))
                    .filter(|&k| (word[k].abs() - word[k + 1].abs()).abs() >= 2)
                    .collect();
                if sites.is_empty() {
                    None
                } else {
                    let k = sites[rng.gen_range(0..sites.len())];
                    word.swap(k, k + 1);
                    Some(MarkovMove::FarCommute(k))
                }
            }
            6 if n >= 2 => {
                let g = random_letter(&mut rng, n);
                let k = rng.gen_range(0..=word.len());
                word.insert(k, -g);
                word.insert(k, g);
                Some(MarkovMove::InsertPair(k, g))
            }
            7 => {
                let sites: Vec<usize> =
                    (0..word.len().saturating_sub(1)).filter(|&k| word[k] == -word[k + 1]).collect();
                if sites.is_empty() {
                    None
                } else {
                    let k = sites[rng.gen_range(0..sites.len())];
                    word.drain(k..k + 2);
                    Some(MarkovMove::CancelPair(k))
                }
            }
            _ => None,
        };
        if let Some(mv) = mv {
            log.push(mv);
        }
    }
    (BraidWord { n, letters: word }, log)
}

fn random_letter(rng: &mut ChaCha8Rng, n: usize) -> i32 {
    let i = rng.gen_range(1..n) as i32;
    if rng.gen_bool(0.5) {
        i
    } else {
        -i
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_render() {
        let w = BraidWord::parse("[1, -2,1,-2]", 3).unwrap();
        assert_eq!(w.letters(), &[1, -2, 1, -2]);
        assert_eq!(w.to_string(), "[1,-2,1,-2]");
        assert_eq!(BraidWord::parse("[]", 1).unwrap().len(), 0);
        assert_eq!(BraidWord::parse("[3]", 3), Err(BraidError::OutOfRange { letter: 3, n: 3 }));
        assert_eq!(BraidWord::parse("[0]", 3), Err(BraidError::ZeroLetter));
        assert!(matches!(BraidWord::parse("1,2", 3), Err(BraidError::Malformed(_))));
        assert!(matches!(BraidWord::parse("[1,,2]", 3), Err(BraidError::Malformed(_))));
    }

    #[test]
    fn components() {
        assert_eq!(BraidWord::identity(2).closure_components(), 2);
        assert_eq!(BraidWord::parse("[1,1,1]", 2).unwrap().closure_components(), 1);
        assert_eq!(BraidWord::parse("[1,2,1,2]", 3).unwrap().closure_components(), 1);
        assert_eq!(BraidWord::parse("[1,1]", 2).unwrap().closure_components(), 2);
    }

    #[test]
    fn perturb_small_cases() {
        let w = BraidWord::identity(3);
        assert_eq!(markov_perturb(&w, 5, 0), w);
        let one = BraidWord::identity(1);
        let (p, log) = markov_perturb_bounded(&one, 1, 1, usize::MAX);
        assert_eq!(log.len(), 1);
        assert!(matches!(log[0], MarkovMove::Stabilize(_)));
        assert_eq!(p.strands(), 2);
        assert_eq!(p.letters().len(), 1);
        assert_eq!(p.letters()[0].abs(), 1);
    }
}
