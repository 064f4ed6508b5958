//! The tensor algebra T(S) as a structure-constant algebra.
//!
//! Basis: vertex elements `e_i` (and `ε_i` at D vertices), then paths of
//! left-basis letters ordered by length and lexicographically, each with an
//! optional leading ε when the path ends at a D vertex. Products compose left
//! to right, so `e_i · p · e_j = p` for a path from i to j.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use super::{Bimodule, Label, Superspecies};
use crate::algebra::GradedAlgebra;
use crate::error::{Error, Result};
use crate::exact::{Field, Scalar};

/// Largest tensor algebra built as a table.
const MAX_TABLE_DIM: usize = 2048;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TensorDim {
    Finite(BigUint),
    Infinite,
}

impl fmt::Display for TensorDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TensorDim::Finite(n) => write!(f, "{n}"),
            TensorDim::Infinite => f.write_str("infinite"),
        }
    }
}

impl Serialize for TensorDim {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[derive(Clone, Copy, Debug)]
struct Letter {
    source: usize,
    target: usize,
    l: usize,
    bimodule: Bimodule,
    degree: u8,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Key {
    start: usize,
    letters: Vec<usize>,
    eps: u8,
}

impl Superspecies {
    /// K-dimension of T(S) without building it.
    pub fn tensor_algebra_dim(&self) -> TensorDim {
        let Some(order) = self.topological_order() else {
            return TensorDim::Infinite;
        };
        // paths[j]: number of letter sequences of length ≥ 1 ending at j
        let mut paths = vec![BigUint::zero(); self.len()];
        for &j in &order {
            let mut acc = BigUint::zero();
            for (&(i, t), b) in &self.bimodules {
                if t == j {
                    acc += BigUint::from(b.left_basis_len()) * (BigUint::one() + &paths[i]);
                }
            }
            paths[j] = acc;
        }
        let total = self
            .labels
            .iter()
            .zip(&paths)
            .map(|(l, p)| BigUint::from(l.dim()) * (BigUint::one() + p))
            .sum();
        TensorDim::Finite(total)
    }

    /// T(S) over `field`.
    pub fn tensor_algebra(&self, field: Field) -> Result<GradedAlgebra> {
        self.check_acyclic()?;
        match self.tensor_algebra_dim() {
            TensorDim::Finite(n) if n <= BigUint::from(MAX_TABLE_DIM) => {}
            d => return Err(Error::Budget(format!("tensor algebra of dimension {d} exceeds {MAX_TABLE_DIM}"))),
        }
        let letters: Vec<Letter> = self
            .bimodules
            .iter()
            .flat_map(|(&(source, target), &bimodule)| {
                bimodule
                    .left_basis_degrees()
                    .into_iter()
                    .enumerate()
                    .map(move |(l, degree)| Letter { source, target, l, bimodule, degree })
            })
            .collect();

        let mut keys: Vec<Key> = Vec::new();
        for start in 0..self.len() {
            keys.push(Key { start, letters: vec![], eps: 0 });
        }
        for start in 0..self.len() {
            if self.labels[start] == Label::D {
                keys.push(Key { start, letters: vec![], eps: 1 });
            }
        }
        let mut frontier: Vec<Vec<usize>> = (0..letters.len()).map(|a| vec![a]).collect();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for seq in frontier {
                let last = letters[*seq.last().expect("nonempty")];
                for eps in 0..self.labels[last.target].dim() as u8 {
                    keys.push(Key { start: letters[seq[0]].source, letters: seq.clone(), eps });
                }
                for (a, x) in letters.iter().enumerate() {
                    if x.source == last.target {
                        let mut s = seq.clone();
                        s.push(a);
                        next.push(s);
                    }
                }
            }
            frontier = next;
        }
        let index: HashMap<Key, usize> = keys.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect();
        let end = |k: &Key| k.letters.last().map_or(k.start, |&a| letters[a].target);

        let labels = keys.iter().map(|k| self.basis_label(k, &letters)).collect();
        let degrees = keys
            .iter()
            .map(|k| (k.eps + k.letters.iter().map(|&a| letters[a].degree).sum::<u8>()) % 2)
            .collect();

        let mut entries = Vec::new();
        for (x, a) in keys.iter().enumerate() {
            for (y, b) in keys.iter().enumerate() {
                if end(a) != b.start {
                    continue;
                }
                // a·b: the ε of `a` moves across the letters of `b`
                let mut carry = a.eps;
                let mut sign = 1i64;
                let mut moved = b.letters.clone();
                for slot in moved.iter_mut() {
                    if carry == 0 {
                        break;
                    }
                    let x = letters[*slot];
                    match x.bimodule {
                        Bimodule::DtoK { rank } => {
                            let l = if x.l < rank { x.l + rank } else { x.l - rank };
                            *slot = *slot + l - x.l;
                            carry = 0;
                        }
                        Bimodule::DD { .. } => sign *= x.bimodule.dd_sign(x.l),
                        _ => return Err(Error::Internal("ε at a K vertex".into())),
                    }
                }
                let mut cat = a.letters.clone();
                cat.extend(moved);
                let key = Key { start: a.start, letters: cat, eps: b.eps ^ carry };
                let Some(&k) = index.get(&key) else {
                    return Err(Error::Internal("product path missing from the basis".into()));
                };
                entries.push((x, y, k, field.from_i64(sign)));
            }
        }
        let identity: Vec<Scalar> = (0..keys.len())
            .map(|i| if i < self.len() { field.one() } else { field.zero() })
            .collect();
        GradedAlgebra::from_entries_with_identity(field, labels, degrees, entries, Some(identity))
    }

    fn basis_label(&self, k: &Key, letters: &[Letter]) -> String {
        if k.letters.is_empty() {
            let prefix = if k.eps == 1 { "eps" } else { "e" };
            return format!("{prefix}{}", self.ids[k.start]);
        }
        let body = k
            .letters
            .iter()
            .map(|&a| {
                let x = letters[a];
                format!("m{}>{}.{}", self.ids[x.source], self.ids[x.target], x.l)
            })
            .collect::<Vec<_>>()
            .join("*");
        if k.eps == 1 {
            let end = letters[*k.letters.last().expect("nonempty")].target;
            format!("{body}*eps{}", self.ids[end])
        } else {
            body
        }
    }
}
