use std::collections::BTreeMap;

use thiserror::Error;

use crate::linalg::{homology_of_pair, AbelianGroupStructure, SparseIntMatrix};
use crate::perm::{PermGroup, Permutation};

use super::{HomologyResult, Method};

#[derive(Debug, Error)]
pub enum BarError {
    #[error("group order {order} exceeds the bar-complex size cap {cap}")]
    SizeCapExceeded { order: u128, cap: u128 },
    #[error("bar homology implemented only for degrees k <= 3, got {0}")]
    DegreeTooLarge(usize),
    #[error("chain complex assembly failed: {0}")]
    Chain(#[from] crate::linalg::ChainError),
}

/// The multiplication table of a fully enumerated small group. Element 0 is
/// the identity; the remaining elements are sorted permutations.
struct SmallGroup {
    n: usize,
    mult: Vec<Vec<usize>>,
}

impl SmallGroup {
    fn enumerate(g: &PermGroup, cap: u128) -> Result<SmallGroup, BarError> {
        let elements: Vec<Permutation> = g
            .elements_capped(cap)
            .map_err(|e| match e {
                crate::perm::GroupError::TooLarge { order, cap } => {
                    BarError::SizeCapExceeded { order, cap }
                }
                other => panic!("unexpected enumeration failure: {other}"),
            })?;
        debug_assert!(elements[0].is_identity());
        let index: BTreeMap<&Permutation, usize> =
            elements.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let n = elements.len();
        let mut mult = vec![vec![0usize; n]; n];
        for (i, a) in elements.iter().enumerate() {
            for (j, b) in elements.iter().enumerate() {
                mult[i][j] = index[&a.then(b)];
            }
        }
        Ok(SmallGroup { n, mult })
    }

    /// Dimension of the normalized chain module `C_j`: tuples of non-identity
    /// elements.
    fn dim(&self, j: usize) -> usize {
        (self.n - 1).pow(j as u32)
    }

    fn decode(&self, mut idx: usize, j: usize) -> Vec<usize> {
        let m = self.n - 1;
        let mut tuple = vec![0usize; j];
        for slot in (0..j).rev() {
            tuple[slot] = idx % m;
            idx /= m;
        }
        tuple
    }

    fn encode(&self, tuple: &[usize]) -> usize {
        let m = self.n - 1;
        tuple.iter().fold(0usize, |acc, &t| acc * m + t)
    }

    /// Boundary `d_j: C_j -> C_(j-1)` of the normalized bar complex. The
    /// standard alternating face sum; faces that produce an identity entry
    /// are degenerate and dropped.
    fn boundary(&self, j: usize) -> SparseIntMatrix {
        assert!(j >= 1);
        let rows = self.dim(j - 1);
        let cols = self.dim(j);
        let mut d = SparseIntMatrix::zero(rows, cols);
        for col in 0..cols {
            let tuple = self.decode(col, j);
            // Face 0: drop the first entry.
            d.add_to(self.encode(&tuple[1..]), col, &1.into());
            // Middle faces: multiply adjacent entries.
            for i in 1..j {
                let prod = self.mult[tuple[i - 1] + 1][tuple[i] + 1];
                if prod == 0 {
                    continue; // degenerate tuple, zero in the normalized complex
                }
                let mut merged = Vec::with_capacity(j - 1);
                merged.extend_from_slice(&tuple[..i - 1]);
                merged.push(prod - 1);
                merged.extend_from_slice(&tuple[i + 1..]);
                let sign = if i % 2 == 0 { 1 } else { -1 };
                d.add_to(self.encode(&merged), col, &sign.into());
            }
            // Face j: drop the last entry.
            let sign = if j % 2 == 0 { 1 } else { -1 };
            d.add_to(self.encode(&tuple[..j - 1]), col, &sign.into());
        }
        d
    }
}

/// `H_k(G; Z)` for `k <= 3` via the normalized bar complex
/// `C_j = Z[(G \ 1)^j]`. Exact, certified, and quite exponential: the group
/// must fit under `size_cap`.
pub fn bar_homology(
    group_id: &str,
    g: &PermGroup,
    k: usize,
    size_cap: u128,
) -> Result<HomologyResult, BarError> {
    if k > 3 {
        return Err(BarError::DegreeTooLarge(k));
    }
    let sg = SmallGroup::enumerate(g, size_cap)?;
    let d_k = if k == 0 {
        SparseIntMatrix::zero(0, 1)
    } else {
        sg.boundary(k)
    };
    let d_k1 = sg.boundary(k + 1);
    let structure: AbelianGroupStructure = homology_of_pair(&d_k, &d_k1)?;
    Ok(HomologyResult::computed(group_id, k, structure, Method::Bar))
}
