use crate::linalg::AbelianGroupStructure;

/// `H_k(Z/n; Z)` via the standard 2-periodic free resolution
/// `... -> Z[G] --(1-t)--> Z[G] --N--> Z[G] --(1-t)--> Z[G] -> Z`:
/// `H_0 = Z`, `H_k = Z/n` for odd `k`, and `H_k = 0` for even `k >= 2`.
pub fn homology_cyclic(n: u64, k: usize) -> AbelianGroupStructure {
    assert!(n >= 2, "cyclic group order must be at least 2");
    match k {
        0 => AbelianGroupStructure::free(1),
        k if k % 2 == 1 => AbelianGroupStructure::cyclic(n),
        _ => AbelianGroupStructure::trivial(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_three_is_cyclic_of_order_p() {
        for p in [2u64, 3, 5, 7] {
            assert_eq!(homology_cyclic(p, 3), AbelianGroupStructure::cyclic(p));
        }
    }

    #[test]
    fn even_positive_degrees_vanish() {
        assert_eq!(homology_cyclic(6, 2), AbelianGroupStructure::trivial());
        assert_eq!(homology_cyclic(9, 4), AbelianGroupStructure::trivial());
    }

    #[test]
    fn degree_one_is_the_abelianization() {
        assert_eq!(homology_cyclic(6, 1), AbelianGroupStructure::cyclic(6));
    }

    #[test]
    fn degree_zero_is_z() {
        assert_eq!(homology_cyclic(4, 0), AbelianGroupStructure::free(1));
    }
}
