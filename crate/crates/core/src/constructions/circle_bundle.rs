use thiserror::Error;

use crate::fp::{GroupElement, Presentation, Word};

/// The circle bundle `Y` over a closed orientable genus-`g` surface with
/// euler number `n != 0`: the boundary of the disk bundle whose zero section
/// is the embedded surface.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CircleBundleSpec {
    pub genus: u32,
    pub euler_number: i64,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CircleBundleError {
    #[error("euler number must be nonzero")]
    ZeroEuler,
    #[error("cyclic quotient needs target n with euler number = ±n; euler {euler}, n {n}")]
    EulerMismatch { euler: i64, n: u64 },
}

impl CircleBundleSpec {
    pub fn new(genus: u32, euler_number: i64) -> Result<Self, CircleBundleError> {
        if euler_number == 0 {
            return Err(CircleBundleError::ZeroEuler);
        }
        Ok(CircleBundleSpec {
            genus,
            euler_number,
        })
    }
}

/// The fundamental group of the circle bundle:
///
/// `< a_1, b_1, ..., a_g, b_g, z | prod [a_i, b_i] · z^(-n), [a_j, z], [b_j, z] >`
///
/// with the central fibre class marked as `mu = z`. At genus 0 this
/// degenerates to the lens-space group `< z | z^(-n) > = Z/|n|`.
pub fn circle_bundle_pi1(spec: &CircleBundleSpec) -> Presentation {
    let g = spec.genus as usize;
    let n = spec.euler_number;
    let mut names: Vec<String> = Vec::with_capacity(2 * g + 1);
    for i in 1..=g {
        names.push(format!("a{i}"));
        names.push(format!("b{i}"));
    }
    names.push("z".to_string());
    let z = 2 * g;
    let mut p = Presentation::with_names(names).expect("generated names are valid and distinct");

    let mut surface = Word::identity();
    for i in 0..g {
        surface = surface.concat(&Word::commutator(&Word::gen(2 * i), &Word::gen(2 * i + 1)));
    }
    surface = surface.concat(&Word::gen_pow(z, -n));
    p.add_relator(surface).expect("n != 0 keeps the relator nontrivial");

    for i in 0..g {
        p.add_relator(Word::commutator(&Word::gen(2 * i), &Word::gen(z)))
            .expect("centrality relator is nontrivial");
        p.add_relator(Word::commutator(&Word::gen(2 * i + 1), &Word::gen(z)))
            .expect("centrality relator is nontrivial");
    }
    p.mark("mu", Word::gen(z)).expect("z is in range");
    p
}

/// An element of `Z/n` in additive notation, for evaluating words in cyclic
/// quotients.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ZnElement {
    pub n: u64,
    pub value: u64,
}

impl ZnElement {
    pub fn new(n: u64, value: i64) -> Self {
        assert!(n >= 1);
        ZnElement {
            n,
            value: value.rem_euclid(n as i64) as u64,
        }
    }
}

impl GroupElement for ZnElement {
    fn identity_like(&self) -> Self {
        ZnElement::new(self.n, 0)
    }

    fn group_mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "modulus mismatch");
        ZnElement::new(self.n, (self.value + other.value) as i64)
    }

    fn group_inv(&self) -> Self {
        ZnElement::new(self.n, -(self.value as i64))
    }
}

/// Generator images of the quotient `pi_1(Y) -> Z/n` sending every surface
/// generator to `0` and the fibre `z` (hence `mu`) to `1`, a generator.
/// Requires the euler number to be `±n`: the surface relator then maps to
/// `∓n = 0 (mod n)`.
pub fn cyclic_quotient(
    spec: &CircleBundleSpec,
    n: u64,
) -> Result<Vec<ZnElement>, CircleBundleError> {
    if spec.euler_number.unsigned_abs() != n {
        return Err(CircleBundleError::EulerMismatch {
            euler: spec.euler_number,
            n,
        });
    }
    let g = spec.genus as usize;
    let mut images = vec![ZnElement::new(n, 0); 2 * g];
    images.push(ZnElement::new(n, 1));
    Ok(images)
}

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;

    use super::*;
    use crate::fp::check_hom;
    use crate::linalg::AbelianGroupStructure;

    #[test]
    fn genus_one_euler_one_matches_the_displayed_presentation() {
        let p = circle_bundle_pi1(&CircleBundleSpec::new(1, 1).unwrap());
        assert_eq!(p.num_generators(), 3);
        assert_eq!(p.relators().len(), 3);
        let text = p.serialize();
        assert!(text.contains("a1 b1 a1^-1 b1^-1 z^-1"));
        assert!(text.contains("mark mu = z"));
    }

    #[test]
    fn genus_zero_is_a_lens_space_group() {
        let p = circle_bundle_pi1(&CircleBundleSpec::new(0, 5).unwrap());
        assert_eq!(p.num_generators(), 1);
        let (h, marks) = p.abelianization();
        assert_eq!(h, AbelianGroupStructure::cyclic(5));
        assert!(marks["mu"].generates_cyclic_torsion(&BigInt::from(5)));
    }

    #[test]
    fn abelianization_is_z2g_plus_zn_with_mu_generating_torsion() {
        for g in 0..=3u32 {
            for n in [-9i64, -5, -1, 1, 2, 3, 9] {
                let p = circle_bundle_pi1(&CircleBundleSpec::new(g, n).unwrap());
                let (h, marks) = p.abelianization();
                let torsion = n.unsigned_abs();
                let expected = if torsion == 1 {
                    AbelianGroupStructure::free(2 * g as usize)
                } else {
                    AbelianGroupStructure::new(2 * g as usize, vec![BigInt::from(torsion)])
                };
                assert_eq!(h, expected, "genus {g}, euler {n}");
                if torsion > 1 {
                    assert!(
                        marks["mu"].generates_cyclic_torsion(&BigInt::from(torsion)),
                        "mu must generate the torsion part at genus {g}, euler {n}"
                    );
                }
            }
        }
    }

    #[test]
    fn cyclic_quotient_is_a_homomorphism_with_nontrivial_mu() {
        let spec = CircleBundleSpec::new(1, 7).unwrap();
        let p = circle_bundle_pi1(&spec);
        let images = cyclic_quotient(&spec, 7).unwrap();
        assert!(check_hom(&p, &images).unwrap().ok);
        let mu = crate::fp::evaluate(p.marked("mu").unwrap(), &images).unwrap();
        assert_eq!(mu, ZnElement::new(7, 1));
    }

    #[test]
    fn cyclic_quotient_rejects_mismatched_n() {
        let spec = CircleBundleSpec::new(1, 7).unwrap();
        assert!(cyclic_quotient(&spec, 5).is_err());
    }

    #[test]
    fn genus_zero_identity_quotient() {
        let spec = CircleBundleSpec::new(0, 5).unwrap();
        let p = circle_bundle_pi1(&spec);
        let images = cyclic_quotient(&spec, 5).unwrap();
        assert!(check_hom(&p, &images).unwrap().ok);
    }
}
