//! Labels of the irreducible representations of H3 and H4.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// Parameter names, 0 = a, 1 = b, 2 = c.
pub const PARAM_NAMES: [char; 3] = ['a', 'b', 'c'];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum IrrepKind {
    S,
    T,
    U,
    V3,
    V6,
    W,
    X,
    XPrime,
}

/// An irreducible representation label; `params` holds the subscripts in order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IrrepLabel {
    pub kind: IrrepKind,
    pub params: Vec<u8>,
}

impl IrrepLabel {
    pub fn new(kind: IrrepKind, params: &[u8]) -> Self {
        IrrepLabel { kind, params: params.to_vec() }
    }

    pub fn dim(&self) -> usize {
        match self.kind {
            IrrepKind::S => 1,
            IrrepKind::T => 2,
            IrrepKind::U | IrrepKind::V3 => 3,
            IrrepKind::V6 => 6,
            IrrepKind::W => 8,
            IrrepKind::X | IrrepKind::XPrime => 9,
        }
    }

    /// True for the labels of irreducible representations of H3.
    pub fn is_h3(&self) -> bool {
        matches!(self.kind, IrrepKind::S | IrrepKind::T | IrrepKind::V3)
    }
}

fn label(kind: IrrepKind, params: &str) -> IrrepLabel {
    let ps: Vec<u8> = params.chars().map(|ch| PARAM_NAMES.iter().position(|&x| x == ch).unwrap() as u8).collect();
    IrrepLabel { kind, params: ps }
}

/// The 24 irreducible representations of H4, in their storage order.
pub fn h4_labels() -> Vec<IrrepLabel> {
    use IrrepKind::*;
    vec![
        label(S, "a"),
        label(S, "c"),
        label(S, "b"),
        label(T, "bc"),
        label(T, "ab"),
        label(T, "ac"),
        label(V3, ""),
        label(U, "ba"),
        label(U, "ac"),
        label(U, "cb"),
        label(U, "ca"),
        label(U, "ab"),
        label(U, "bc"),
        label(V6, "cab"),
        label(V6, "bca"),
        label(V6, "abc"),
        label(V6, "bac"),
        label(V6, "cba"),
        label(V6, "acb"),
        label(W, "a"),
        label(W, "c"),
        label(W, "b"),
        label(X, ""),
        label(XPrime, ""),
    ]
}

/// The 7 irreducible representations of H3.
pub fn h3_labels() -> Vec<IrrepLabel> {
    use IrrepKind::*;
    vec![label(S, "a"), label(S, "b"), label(S, "c"), label(T, "ab"), label(T, "ac"), label(T, "bc"), label(V3, "")]
}

impl fmt::Display for IrrepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sub: String = self.params.iter().map(|&p| PARAM_NAMES[p as usize]).collect();
        match self.kind {
            IrrepKind::S => write!(f, "S_{sub}"),
            IrrepKind::T => write!(f, "T_{sub}"),
            IrrepKind::U => write!(f, "U_{sub}"),
            IrrepKind::V3 => write!(f, "V"),
            IrrepKind::V6 => write!(f, "V_{sub}"),
            IrrepKind::W => write!(f, "W_{sub}"),
            IrrepKind::X => write!(f, "X"),
            IrrepKind::XPrime => write!(f, "X'"),
        }
    }
}

impl FromStr for IrrepLabel {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let bad = || format!("unknown representation label `{s}`");
        match s {
            "V" => return Ok(label(IrrepKind::V3, "")),
            "X" => return Ok(label(IrrepKind::X, "")),
            "X'" => return Ok(label(IrrepKind::XPrime, "")),
            _ => {}
        }
        let (head, sub) = s.split_once('_').ok_or_else(bad)?;
        if sub.is_empty() || !sub.chars().all(|c| PARAM_NAMES.contains(&c)) {
            return Err(bad());
        }
        let kind = match (head, sub.len()) {
            ("S", 1) => IrrepKind::S,
            ("T", 2) => IrrepKind::T,
            ("U", 2) => IrrepKind::U,
            ("V", 3) => IrrepKind::V6,
            ("W", 1) => IrrepKind::W,
            _ => return Err(bad()),
        };
        let l = label(kind, sub);
        let mut sorted = l.params.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != l.params.len() {
            return Err(bad());
        }
        if kind == IrrepKind::T {
            // T_{x,y} and T_{y,x} name the same representation; keep the sorted form
            return Ok(IrrepLabel { kind, params: sorted });
        }
        Ok(l)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels_round_trip() {
        let ls = h4_labels();
        assert_eq!(ls.len(), 24);
        for l in &ls {
            assert_eq!(&l.to_string().parse::<IrrepLabel>().unwrap(), l);
        }
        let dims: usize = ls.iter().map(|l| l.dim() * l.dim()).sum();
        assert_eq!(dims, 648);
        let h3: usize = h3_labels().iter().map(|l| l.dim() * l.dim()).sum();
        assert_eq!(h3, 24);
    }
}
