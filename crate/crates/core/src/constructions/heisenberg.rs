use thiserror::Error;

use crate::fp::GroupElement;
use crate::perm::{PermGroup, Permutation};

/// An element of the 3-dimensional Heisenberg group: the uni-triangular
/// matrix with superdiagonal `(x, y)` and corner `t`. With `modulus = None`
/// this is the integer group `He_3(Z)`; with `modulus = Some(p)` coordinates
/// live mod `p` and the group is `He_3(p)` of order `p^3`.
///
/// Group law: `(x1,y1,t1) · (x2,y2,t2) = (x1+x2, y1+y2, t1+t2+x1*y2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct He3Element {
    pub x: i64,
    pub y: i64,
    pub t: i64,
    pub modulus: Option<u64>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HeisenbergError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("the Heisenberg surjection needs genus >= 1 (there is no a_1 at genus 0)")]
    GenusZero,
    #[error("the Heisenberg surjection applies to euler number ±1, got {0}")]
    EulerNotUnit(i64),
}

fn reduce(v: i64, modulus: Option<u64>) -> i64 {
    match modulus {
        None => v,
        Some(p) => v.rem_euclid(p as i64),
    }
}

impl He3Element {
    pub fn integral(x: i64, y: i64, t: i64) -> Self {
        He3Element {
            x,
            y,
            t,
            modulus: None,
        }
    }

    pub fn mod_p(x: i64, y: i64, t: i64, p: u64) -> Self {
        He3Element {
            x: reduce(x, Some(p)),
            y: reduce(y, Some(p)),
            t: reduce(t, Some(p)),
            modulus: Some(p),
        }
    }

    pub fn identity(modulus: Option<u64>) -> Self {
        He3Element {
            x: 0,
            y: 0,
            t: 0,
            modulus,
        }
    }

    /// Coordinate-wise mod-p reduction: the surjection `He_3(Z) -> He_3(p)`.
    pub fn reduced_mod(&self, p: u64) -> He3Element {
        He3Element::mod_p(self.x, self.y, self.t, p)
    }

    pub fn mul(&self, other: &He3Element) -> He3Element {
        assert_eq!(self.modulus, other.modulus, "modulus mismatch");
        He3Element {
            x: reduce(self.x + other.x, self.modulus),
            y: reduce(self.y + other.y, self.modulus),
            t: reduce(self.t + other.t + self.x * other.y, self.modulus),
            modulus: self.modulus,
        }
    }

    pub fn inverse(&self) -> He3Element {
        He3Element {
            x: reduce(-self.x, self.modulus),
            y: reduce(-self.y, self.modulus),
            t: reduce(-self.t + self.x * self.y, self.modulus),
            modulus: self.modulus,
        }
    }
}

impl GroupElement for He3Element {
    fn identity_like(&self) -> Self {
        He3Element::identity(self.modulus)
    }

    fn group_mul(&self, other: &Self) -> Self {
        self.mul(other)
    }

    fn group_inv(&self) -> Self {
        self.inverse()
    }
}

/// `He_3(p)` realized on `p^3` points by its right-regular action, plus the
/// reduction map from `He_3(Z)`. The element `(x, y, t)` sits at index
/// `(x*p + y)*p + t`, so the representation is deterministic.
#[derive(Debug)]
pub struct He3ModP {
    p: u64,
    group: PermGroup,
}

impl He3ModP {
    pub fn new(p: u64) -> Result<He3ModP, HeisenbergError> {
        if !crate::homology::is_prime(p) {
            return Err(HeisenbergError::NotPrime(p));
        }
        let gens = vec![
            right_regular_perm(&He3Element::mod_p(1, 0, 0, p)),
            right_regular_perm(&He3Element::mod_p(0, 1, 0, p)),
            right_regular_perm(&He3Element::mod_p(0, 0, 1, p)),
        ];
        let degree = (p * p * p) as usize;
        let group = PermGroup::new(degree, gens).expect("regular action has uniform degree");
        assert_eq!(group.order(), (p as u128).pow(3), "regular action must be faithful");
        Ok(He3ModP { p, group })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    /// The permutation realizing an element (after mod-p reduction) in the
    /// right-regular action.
    pub fn perm_of(&self, e: &He3Element) -> Permutation {
        right_regular_perm(&e.reduced_mod(self.p))
    }

    pub fn gen_a(&self) -> Permutation {
        self.perm_of(&He3Element::integral(1, 0, 0))
    }

    pub fn gen_b(&self) -> Permutation {
        self.perm_of(&He3Element::integral(0, 1, 0))
    }

    pub fn gen_z(&self) -> Permutation {
        self.perm_of(&He3Element::integral(0, 0, 1))
    }
}

fn index_of(e: &He3Element, p: u64) -> usize {
    ((e.x as u64 * p + e.y as u64) * p + e.t as u64) as usize
}

fn element_at(idx: usize, p: u64) -> He3Element {
    let p64 = p as i64;
    let idx = idx as i64;
    He3Element::mod_p(idx / (p64 * p64), (idx / p64) % p64, idx % p64, p)
}

fn right_regular_perm(g: &He3Element) -> Permutation {
    let p = g.modulus.expect("regular action needs a finite group");
    let degree = (p * p * p) as usize;
    let images = (0..degree)
        .map(|i| index_of(&element_at(i, p).mul(g), p))
        .collect();
    Permutation::from_images(images).expect("right multiplication is a bijection")
}

/// Shorthand for building the mod-p quotient.
pub fn he3_mod_p(p: u64) -> Result<He3ModP, HeisenbergError> {
    He3ModP::new(p)
}

/// Generator images of the surjection `pi_1(Y_{g,n}) -> He_3(Z)` for a
/// genus-`g` circle bundle with euler number `n = ±1`:
/// `a_1 -> (1,0,0)`, `b_1 -> (0,1,0)`, all other `a_i, b_i -> 1`, and
/// `z -> (0,0,n)`. The corner sign matches the commutator convention
/// `[a, b] = a b a^-1 b^-1`, under which `[a_1, b_1]` maps to `(0, 0, 1)`,
/// so the surface relator `prod [a_i, b_i] · z^(-n)` dies.
pub fn heisenberg_surjection(genus: u32, euler: i64) -> Result<Vec<He3Element>, HeisenbergError> {
    if genus == 0 {
        return Err(HeisenbergError::GenusZero);
    }
    if euler != 1 && euler != -1 {
        return Err(HeisenbergError::EulerNotUnit(euler));
    }
    let mut images = Vec::with_capacity(2 * genus as usize + 1);
    images.push(He3Element::integral(1, 0, 0)); // a_1
    images.push(He3Element::integral(0, 1, 0)); // b_1
    for _ in 1..genus {
        images.push(He3Element::identity(None)); // a_i
        images.push(He3Element::identity(None)); // b_i
    }
    images.push(He3Element::integral(0, 0, euler)); // z
    Ok(images)
}
