use std::collections::BTreeSet;

use crate::linalg::AbelianGroupStructure;

/// The action of the normalizer `N_P(Z/p)` on `H^2(Z/p; Z) = Z/p`, recorded
/// by a unit generating its image in `(Z/p)^x`. For `P = PSL_2(p)` the image
/// is the subgroup of quadratic residues.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WeylAction {
    pub p: u64,
    pub unit: u64,
}

impl WeylAction {
    pub fn new(p: u64, unit: u64) -> Self {
        assert!(p >= 2 && unit % p != 0, "unit must be nonzero mod p");
        WeylAction { p, unit: unit % p }
    }
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc: u64 = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

/// Fixed points of the Weyl action on `H^(2l)(Z/p; Z) = Z/p`: the action in
/// degree `2l` is multiplication by `unit^l`, so the fixed points are all of
/// `Z/p` when `unit^l = 1 (mod p)` and `0` otherwise. The criterion is
/// invariant under replacing the unit by its inverse, so the direction
/// convention of the normalizer action does not matter.
pub fn weyl_fixed_points(action: WeylAction, degree: usize) -> AbelianGroupStructure {
    assert!(degree >= 2 && degree % 2 == 0, "degree must be even and >= 2");
    let l = (degree / 2) as u64;
    if pow_mod(action.unit, l, action.p) == 1 {
        AbelianGroupStructure::cyclic(action.p)
    } else {
        AbelianGroupStructure::trivial()
    }
}

/// Trial-division primality check; the primes here are tiny.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn multiplicative_order(a: u64, p: u64) -> u64 {
    let mut x = a % p;
    let mut k = 1;
    while x != 1 {
        x = x * a % p;
        k += 1;
        assert!(k < p, "element order exceeded group order");
    }
    k
}

/// A generator of the group of quadratic residues mod `p`: the square of the
/// smallest primitive root. Its multiplicative order is `(p-1)/2`, matching
/// the index-two subgroup of `F_p^x`.
pub fn quadratic_residue_generator(p: u64) -> u64 {
    assert!(is_prime(p) && p >= 3, "need an odd prime");
    let root = (2..p)
        .find(|&g| multiplicative_order(g, p) == p - 1)
        .expect("every prime has a primitive root");
    let unit = root * root % p;
    debug_assert_eq!(multiplicative_order(unit, p), (p - 1) / 2);
    unit
}

/// The cohomological degrees `k <= k_max` in which `H^k(PSL_2(p); Z)` has
/// p-torsion: exactly the `k = 2l` with `(p-1)/2 | l`.
///
/// Computed two independent ways — the closed divisibility formula, and
/// degree-by-degree Weyl fixed points for a computed quadratic-residue
/// generator — which are required to agree.
pub fn psl2_p_torsion_degrees(p: u64, k_max: usize) -> BTreeSet<usize> {
    assert!(is_prime(p) && p >= 5, "formula applies to primes p >= 5");
    let half = ((p - 1) / 2) as usize;
    let by_formula: BTreeSet<usize> = (1..=k_max / 2)
        .filter(|l| l % half == 0)
        .map(|l| 2 * l)
        .collect();

    let action = WeylAction::new(p, quadratic_residue_generator(p));
    let by_fixed_points: BTreeSet<usize> = (1..=k_max / 2)
        .map(|l| 2 * l)
        .filter(|&deg| !weyl_fixed_points(action, deg).is_trivial())
        .collect();
    assert_eq!(
        by_formula, by_fixed_points,
        "closed formula and Weyl fixed points disagree for p = {p}"
    );
    by_formula
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_action_fixes_everything() {
        let a = WeylAction::new(7, 1);
        assert_eq!(weyl_fixed_points(a, 4), AbelianGroupStructure::cyclic(7));
        assert_eq!(weyl_fixed_points(a, 10), AbelianGroupStructure::cyclic(7));
    }

    #[test]
    fn unit_two_mod_seven() {
        // 2 generates the quadratic residues mod 7: 2^2 = 4 ≠ 1 but 2^3 = 1.
        let a = WeylAction::new(7, 2);
        assert_eq!(weyl_fixed_points(a, 4), AbelianGroupStructure::trivial());
        assert_eq!(weyl_fixed_points(a, 6), AbelianGroupStructure::cyclic(7));
    }

    #[test]
    fn torsion_degrees_for_seven() {
        let degrees = psl2_p_torsion_degrees(7, 12);
        assert_eq!(degrees, BTreeSet::from([6, 12]));
        assert!(!degrees.contains(&4));
    }

    #[test]
    fn torsion_degrees_for_five_include_four() {
        // (5-1)/2 = 2 divides l = 2, so degree 4 carries 5-torsion: the
        // p >= 7 hypothesis is sharp at p = 5.
        assert_eq!(psl2_p_torsion_degrees(5, 4), BTreeSet::from([4]));
    }

    #[test]
    fn torsion_degrees_for_eleven_start_at_ten() {
        assert_eq!(psl2_p_torsion_degrees(11, 8), BTreeSet::new());
        assert_eq!(psl2_p_torsion_degrees(11, 10), BTreeSet::from([10]));
    }

    #[test]
    fn residue_generator_has_half_order() {
        for p in [5u64, 7, 11, 13, 17, 19, 23] {
            let u = quadratic_residue_generator(p);
            assert_eq!(multiplicative_order(u, p), (p - 1) / 2);
        }
    }

    #[test]
    fn routes_agree_for_many_primes() {
        for p in (5..=50).filter(|&p| is_prime(p)) {
            // agreement is asserted inside the function
            let _ = psl2_p_torsion_degrees(p, 40);
        }
    }
}
