use thiserror::Error;

use crate::homology::{is_prime, quadratic_residue_generator};
use crate::perm::{PermGroup, Permutation};

/// `PSL_2(p)` acting on the projective line over `F_p`: points `0..p-1` are
/// the affine line and point `p` is infinity. Comes with a distinguished
/// unipotent element `u: x -> x + 1` of order `p`, the image of `1` under the
/// embedding `Z/p -> PSL_2(p)`.
#[derive(Debug)]
pub struct Psl2 {
    p: u64,
    group: PermGroup,
    unipotent: Permutation,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Psl2Error {
    #[error("need a prime p >= 5, got {0}")]
    BadPrime(u64),
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
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

/// Builds `PSL_2(p)` from three projective transformations:
/// the unipotent `x -> x+1`, the torus element `x -> r^2 x` for a primitive
/// root `r` (order `(p-1)/2`, normalizing the Sylow p-subgroup), and the
/// inversion `x -> -1/x`. The order is verified to equal `p(p^2-1)/2`.
pub fn psl2(p: u64) -> Result<Psl2, Psl2Error> {
    if p < 5 || !is_prime(p) {
        return Err(Psl2Error::BadPrime(p));
    }
    let degree = (p + 1) as usize;
    let inf = p as usize;

    let unipotent = {
        let mut images: Vec<usize> = (0..degree).collect();
        for x in 0..p {
            images[x as usize] = ((x + 1) % p) as usize;
        }
        images[inf] = inf;
        Permutation::from_images(images).expect("translation is a bijection")
    };

    let torus = {
        let r2 = {
            let unit = quadratic_residue_generator(p);
            debug_assert_ne!(unit % p, 0);
            unit
        };
        let mut images: Vec<usize> = (0..degree).collect();
        for x in 0..p {
            images[x as usize] = (x * r2 % p) as usize;
        }
        images[inf] = inf;
        Permutation::from_images(images).expect("scaling by a unit is a bijection")
    };

    let inversion = {
        let mut images: Vec<usize> = (0..degree).collect();
        images[0] = inf;
        images[inf] = 0;
        for x in 1..p {
            let inv = pow_mod(x, p - 2, p);
            images[x as usize] = ((p - inv) % p) as usize;
        }
        Permutation::from_images(images).expect("x -> -1/x is an involution on P^1")
    };

    let group = PermGroup::new(degree, vec![unipotent.clone(), torus, inversion])
        .expect("uniform degree");
    let expected = (p as u128) * ((p as u128) * (p as u128) - 1) / 2;
    assert_eq!(
        group.order(),
        expected,
        "projective construction must produce the full PSL_2({p})"
    );
    assert_eq!(unipotent.order(), p);
    Ok(Psl2 {
        p,
        group,
        unipotent,
    })
}

impl Psl2 {
    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn unipotent(&self) -> &Permutation {
        &self.unipotent
    }

    pub fn name(&self) -> String {
        format!("PSL2({})", self.p)
    }
}
