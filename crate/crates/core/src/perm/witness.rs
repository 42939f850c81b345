use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use super::group::PermGroup;
use super::permutation::Permutation;

/// Witness that a group contains a copy of the mod-p Heisenberg group: two
/// elements of order `p` whose commutator `z` is a central element of order
/// `p` in the subgroup they generate, which has order exactly `p^3`.
#[derive(Clone, Debug)]
pub struct HeisenbergWitness {
    a: Permutation,
    b: Permutation,
    p: u64,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WitnessError {
    #[error("a^p is not the identity")]
    AOrder,
    #[error("b^p is not the identity")]
    BOrder,
    #[error("z = [a,b] does not have order exactly {0}")]
    ZOrder(u64),
    #[error("z does not commute with a")]
    ZNotCentralA,
    #[error("z does not commute with b")]
    ZNotCentralB,
    #[error("<a,b> has order {got}, expected p^3 = {want}")]
    SubgroupOrder { got: u128, want: u128 },
    #[error("witness element is not a member of the ambient group")]
    NotInGroup,
}

impl HeisenbergWitness {
    /// Validates every invariant clause; a witness can only exist in a
    /// checked state.
    pub fn verify(
        a: Permutation,
        b: Permutation,
        p: u64,
        ambient: &PermGroup,
    ) -> Result<Self, WitnessError> {
        if !ambient.contains(&a) || !ambient.contains(&b) {
            return Err(WitnessError::NotInGroup);
        }
        if a.pow(p as i64) != Permutation::identity(a.degree()) {
            return Err(WitnessError::AOrder);
        }
        if b.pow(p as i64) != Permutation::identity(b.degree()) {
            return Err(WitnessError::BOrder);
        }
        let z = Permutation::commutator(&a, &b);
        if z.order() != p {
            return Err(WitnessError::ZOrder(p));
        }
        if !Permutation::commutator(&a, &z).is_identity() {
            return Err(WitnessError::ZNotCentralA);
        }
        if !Permutation::commutator(&b, &z).is_identity() {
            return Err(WitnessError::ZNotCentralB);
        }
        let sub = PermGroup::new(a.degree(), vec![a.clone(), b.clone()])
            .expect("degrees already checked");
        let want = (p as u128).pow(3);
        let got = sub.order();
        if got != want {
            return Err(WitnessError::SubgroupOrder { got, want });
        }
        Ok(HeisenbergWitness { a, b, p })
    }

    pub fn a(&self) -> &Permutation {
        &self.a
    }

    pub fn b(&self) -> &Permutation {
        &self.b
    }

    pub fn z(&self) -> Permutation {
        Permutation::commutator(&self.a, &self.b)
    }

    pub fn p(&self) -> u64 {
        self.p
    }
}

/// Result of the seeded Heisenberg subgroup search.
#[derive(Debug)]
pub enum HeisenbergOutcome {
    Witness(HeisenbergWitness),
    /// Proven absent by Lagrange: `p^3` does not divide the group order.
    Excluded { reason: String },
    /// Budget exhausted without a witness. Inconclusive, never a proof of
    /// absence.
    NotFound { trials: u64 },
}

/// Seeded randomized search for a Heisenberg subgroup `He_3(p) <= G`.
///
/// The only negative proof is the Lagrange exclusion `p^3 ∤ |G|`; a failed
/// search is reported as inconclusive. Each trial draws two uniform random
/// elements, powers them down to order `p` when possible, and tests the
/// witness invariants cheapest-first.
pub fn find_heisenberg_subgroup(
    group: &PermGroup,
    p: u64,
    seed: u64,
    budget: u64,
) -> HeisenbergOutcome {
    let order = group.order();
    let p3 = (p as u128).pow(3);
    if order % p3 != 0 {
        return HeisenbergOutcome::Excluded {
            reason: format!("Lagrange: p^3 = {p3} does not divide |G| = {order}"),
        };
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let id = Permutation::identity(group.degree());
    let order_p = |rng: &mut ChaCha8Rng| -> Option<Permutation> {
        let x = group.random_element(rng);
        let m = x.order();
        if m % p != 0 {
            return None;
        }
        let y = x.pow((m / p) as i64);
        (y != id).then_some(y)
    };
    for trial in 0..budget {
        let Some(a) = order_p(&mut rng) else { continue };
        let Some(b) = order_p(&mut rng) else { continue };
        let z = Permutation::commutator(&a, &b);
        if z.is_identity() || z.order() != p {
            continue;
        }
        if !Permutation::commutator(&a, &z).is_identity()
            || !Permutation::commutator(&b, &z).is_identity()
        {
            continue;
        }
        let sub = PermGroup::new(group.degree(), vec![a.clone(), b.clone()])
            .expect("degrees match");
        if sub.order() != p3 {
            continue;
        }
        match HeisenbergWitness::verify(a, b, p, group) {
            Ok(w) => return HeisenbergOutcome::Witness(w),
            Err(_) => {
                let _ = trial;
                continue;
            }
        }
    }
    HeisenbergOutcome::NotFound { trials: budget }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// S4 contains D4 = He_3(2) as a Sylow 2-subgroup.
    #[test]
    fn finds_dihedral_in_s4() {
        let s4 = PermGroup::new(
            4,
            vec![
                Permutation::from_cycles(4, &[vec![0, 1, 2, 3]]).unwrap(),
                Permutation::from_cycles(4, &[vec![0, 1]]).unwrap(),
            ],
        )
        .unwrap();
        match find_heisenberg_subgroup(&s4, 2, 7, 10_000) {
            HeisenbergOutcome::Witness(w) => {
                assert_eq!(w.z().order(), 2);
            }
            other => panic!("expected a witness, got {other:?}"),
        }
    }

    /// |A4| = 12 is not divisible by 8: Lagrange exclusion.
    #[test]
    fn lagrange_excludes_a4() {
        let a4 = PermGroup::new(
            4,
            vec![
                Permutation::from_cycles(4, &[vec![0, 1, 2]]).unwrap(),
                Permutation::from_cycles(4, &[vec![1, 2, 3]]).unwrap(),
            ],
        )
        .unwrap();
        assert!(matches!(
            find_heisenberg_subgroup(&a4, 2, 7, 100),
            HeisenbergOutcome::Excluded { .. }
        ));
    }

    /// Z/8 has order divisible by 8 but is abelian, so the search comes back
    /// empty-handed and must report itself inconclusive.
    #[test]
    fn abelian_group_is_inconclusive_not_excluded() {
        let z8 = PermGroup::new(
            8,
            vec![Permutation::from_cycles(8, &[(0..8).collect()]).unwrap()],
        )
        .unwrap();
        assert!(matches!(
            find_heisenberg_subgroup(&z8, 2, 7, 200),
            HeisenbergOutcome::NotFound { trials: 200 }
        ));
    }

    #[test]
    fn witness_validation_rejects_commuting_pair() {
        let a = Permutation::from_cycles(4, &[vec![0, 1]]).unwrap();
        let b = Permutation::from_cycles(4, &[vec![2, 3]]).unwrap();
        let s4 = PermGroup::new(
            4,
            vec![
                Permutation::from_cycles(4, &[vec![0, 1, 2, 3]]).unwrap(),
                Permutation::from_cycles(4, &[vec![0, 1]]).unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(
            HeisenbergWitness::verify(a, b, 2, &s4).unwrap_err(),
            WitnessError::ZOrder(2)
        );
    }
}
