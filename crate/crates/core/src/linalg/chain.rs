use thiserror::Error;

use super::abelian::AbelianGroupStructure;
use super::snf::smith_normal_form;
use super::sparse::SparseIntMatrix;

#[derive(Debug, Error)]
pub enum ChainError {
    #[error("boundary shapes incompatible: d_k is {0}x{1} but d_(k+1) is {2}x{3}")]
    ShapeMismatch(usize, usize, usize, usize),
    #[error("d_k ∘ d_(k+1) ≠ 0: the chain complex is wrongly built")]
    CompositionNotZero,
}

/// Homology of one spot in a chain complex of free `Z`-modules:
/// `ker(d_k) / im(d_(k+1))` where `d_k: C_k -> C_(k-1)` and
/// `d_(k+1): C_(k+1) -> C_k`.
///
/// The composition `d_k * d_(k+1) = 0` is verified, not assumed; a violation
/// is a hard failure. The kernel of an integer matrix is a saturated
/// submodule, so the torsion of the quotient equals the torsion of
/// `Z^n / im(d_(k+1))`, which is read off the Smith normal form of
/// `d_(k+1)`; the free rank is `nullity(d_k) - rank(d_(k+1))`.
pub fn homology_of_pair(
    d_k: &SparseIntMatrix,
    d_k1: &SparseIntMatrix,
) -> Result<AbelianGroupStructure, ChainError> {
    if d_k.cols() != d_k1.rows() {
        return Err(ChainError::ShapeMismatch(
            d_k.rows(),
            d_k.cols(),
            d_k1.rows(),
            d_k1.cols(),
        ));
    }
    if !d_k.mul(d_k1).is_zero() {
        return Err(ChainError::CompositionNotZero);
    }
    let rank_k = smith_normal_form(d_k, false).rank;
    let snf_k1 = smith_normal_form(d_k1, false);
    let nullity = d_k.cols() - rank_k;
    assert!(
        nullity >= snf_k1.rank,
        "im(d_(k+1)) larger than ker(d_k) despite zero composition"
    );
    let free = nullity - snf_k1.rank;
    Ok(AbelianGroupStructure::new(free, snf_k1.diagonal))
}

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;

    use super::*;

    #[test]
    fn zero_maps_give_free_module() {
        let d_k = SparseIntMatrix::zero(4, 6);
        let d_k1 = SparseIntMatrix::zero(6, 3);
        let h = homology_of_pair(&d_k, &d_k1).unwrap();
        assert_eq!(h, AbelianGroupStructure::free(6));
    }

    #[test]
    fn periodic_cyclic_segment() {
        // ... -> Z --n--> Z --0--> Z: homology in the middle is Z/n.
        let d_k = SparseIntMatrix::zero(1, 1); // multiplication by 0
        let mut d_k1 = SparseIntMatrix::zero(1, 1);
        d_k1.set(0, 0, BigInt::from(5));
        let h = homology_of_pair(&d_k, &d_k1).unwrap();
        assert_eq!(h, AbelianGroupStructure::cyclic(5));
    }

    #[test]
    fn nonzero_composition_is_rejected() {
        let mut d_k = SparseIntMatrix::zero(1, 2);
        d_k.set(0, 0, BigInt::from(1));
        let mut d_k1 = SparseIntMatrix::zero(2, 1);
        d_k1.set(0, 0, BigInt::from(1));
        assert!(matches!(
            homology_of_pair(&d_k, &d_k1),
            Err(ChainError::CompositionNotZero)
        ));
    }
}
