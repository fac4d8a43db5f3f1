//! Signed perfect matchings of `{0, .., 2D-1}`.
//!
//! Summing `sign * Π {A_a, A_b}` over these pairings is the Pfaffian of the
//! bracket matrix, which collapses the `(2D)!`-term Levi-Civita expansion of
//! the Jacobian into `(2D-1)!!` terms.

use std::sync::OnceLock;

use crate::error::{Error, Result};

/// Largest dimension accepted by [`pairing_table`]; `D = 7` would need
/// 135135 entries.
pub const MAX_PAIRING_DIM: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairingEntry {
    /// Zero-based index pairs, each ascending, ordered by first element.
    pub pairs: Vec<(usize, usize)>,
    pub sign: i8,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairingTable {
    dim: usize,
    entries: Vec<PairingEntry>,
}

impl PairingTable {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[PairingEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Signed sum of pair products of an antisymmetric `2D x 2D` matrix.
    pub fn pfaffian(&self, entry: impl Fn(usize, usize) -> f64) -> f64 {
        self.entries
            .iter()
            .map(|e| {
                let prod: f64 = e.pairs.iter().map(|&(a, b)| entry(a, b)).product();
                f64::from(e.sign) * prod
            })
            .sum()
    }
}

/// All perfect matchings of `2D` phase indices with their permutation parity.
pub fn pairing_table(dim: usize) -> Result<PairingTable> {
    cached_pairing_table(dim).cloned()
}

pub(crate) fn cached_pairing_table(dim: usize) -> Result<&'static PairingTable> {
    static CACHE: [OnceLock<PairingTable>; MAX_PAIRING_DIM] =
        [const { OnceLock::new() }; MAX_PAIRING_DIM];
    if dim == 0 {
        return Err(Error::ZeroDimension);
    }
    if dim > MAX_PAIRING_DIM {
        return Err(Error::DimensionTooLarge {
            dim,
            max: MAX_PAIRING_DIM,
        });
    }
    Ok(CACHE[dim - 1].get_or_init(|| build(dim)))
}

fn build(dim: usize) -> PairingTable {
    let mut entries = Vec::new();
    let mut used = vec![false; 2 * dim];
    let mut pairs = Vec::with_capacity(dim);
    enumerate(&mut used, &mut pairs, &mut entries);
    PairingTable { dim, entries }
}

fn enumerate(used: &mut [bool], pairs: &mut Vec<(usize, usize)>, out: &mut Vec<PairingEntry>) {
    let Some(first) = used.iter().position(|u| !u) else {
        let flat: Vec<usize> = pairs.iter().flat_map(|&(a, b)| [a, b]).collect();
        out.push(PairingEntry {
            pairs: pairs.clone(),
            sign: permutation_sign(&flat),
        });
        return;
    };
    used[first] = true;
    for second in first + 1..used.len() {
        if used[second] {
            continue;
        }
        used[second] = true;
        pairs.push((first, second));
        enumerate(used, pairs, out);
        pairs.pop();
        used[second] = false;
    }
    used[first] = false;
}

/// Parity of a permutation of `0..n`: `+1` if it is a product of an even
/// number of transpositions.
pub fn permutation_sign(perm: &[usize]) -> i8 {
    let mut seen = vec![false; perm.len()];
    let mut transpositions = 0;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut k = start;
        while !seen[k] {
            seen[k] = true;
            k = perm[k];
            len += 1;
        }
        transpositions += len - 1;
    }
    if transpositions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `(2D-1)!!`.
pub fn double_factorial_odd(dim: usize) -> usize {
    (1..=dim).map(|k| 2 * k - 1).product()
}
