use std::fmt;

use thiserror::Error;

use crate::fp::GroupElement;

/// A permutation of `{0, ..., degree-1}`, stored as its image vector.
///
/// Products compose left-to-right: `(a.then(b)).apply(x) = b.apply(a.apply(x))`.
/// This makes `g -> right-multiplication-by-g` a homomorphism, which is the
/// convention the regular representations in this crate rely on.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PermError {
    #[error("image vector is not a bijection")]
    NotBijective,
    #[error("point {0} out of range for degree {1}")]
    PointOutOfRange(usize, usize),
    #[error("point {0} repeated in cycle notation")]
    RepeatedPoint(usize),
    #[error("malformed cycle string at `{0}`")]
    BadCycleString(String),
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self, PermError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &img in &images {
            if img >= n {
                return Err(PermError::PointOutOfRange(img, n));
            }
            if seen[img] {
                return Err(PermError::NotBijective);
            }
            seen[img] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation from disjoint cycles of 0-based points.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self, PermError> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            for (i, &pt) in cycle.iter().enumerate() {
                if pt >= degree {
                    return Err(PermError::PointOutOfRange(pt, degree));
                }
                if used[pt] {
                    return Err(PermError::RepeatedPoint(pt));
                }
                used[pt] = true;
                let next = cycle[(i + 1) % cycle.len()];
                if next >= degree {
                    return Err(PermError::PointOutOfRange(next, degree));
                }
                images[pt] = next;
            }
        }
        Ok(Permutation { images })
    }

    /// Parses 1-based disjoint-cycle notation, e.g. `(1,4,7)(2,5)`.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Self, PermError> {
        let text = text.trim();
        if text.is_empty() || text == "()" {
            return Ok(Permutation::identity(degree));
        }
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut rest = text;
        while !rest.is_empty() {
            let Some(stripped) = rest.strip_prefix('(') else {
                return Err(PermError::BadCycleString(rest.to_string()));
            };
            let Some(end) = stripped.find(')') else {
                return Err(PermError::BadCycleString(rest.to_string()));
            };
            let body = &stripped[..end];
            let mut cycle = Vec::new();
            for tok in body.split(',') {
                let pt: usize = tok
                    .trim()
                    .parse()
                    .map_err(|_| PermError::BadCycleString(tok.to_string()))?;
                if pt == 0 {
                    return Err(PermError::BadCycleString(tok.to_string()));
                }
                cycle.push(pt - 1);
            }
            cycles.push(cycle);
            rest = stripped[end + 1..].trim_start();
        }
        Self::from_cycles(degree, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &img)| i == img)
    }

    /// `self` followed by `other` (left-to-right product).
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Permutation {
            images: self.images.iter().map(|&i| other.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &img) in self.images.iter().enumerate() {
            images[img] = i;
        }
        Permutation { images }
    }

    /// Conjugate `s^-1 · self · s` under left-to-right composition.
    pub fn conjugated_by(&self, s: &Permutation) -> Permutation {
        s.inverse().then(self).then(s)
    }

    pub fn commutator(a: &Permutation, b: &Permutation) -> Permutation {
        a.then(b).then(&a.inverse()).then(&b.inverse())
    }

    pub fn first_moved_point(&self) -> Option<usize> {
        self.images.iter().enumerate().find(|(i, &img)| *i != img).map(|(i, _)| i)
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                seen[start] = true;
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut cur = self.images[start];
            while cur != start {
                seen[cur] = true;
                cycle.push(cur);
                cur = self.images[cur];
            }
            cycles.push(cycle);
        }
        cycles
    }

    /// Element order: lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .map(|c| c.len() as u64)
            .fold(1u64, num_integer::lcm)
    }

    /// Sign of the permutation: +1 for even, -1 for odd.
    pub fn sign(&self) -> i8 {
        let transpositions: usize = self.cycles().iter().map(|c| c.len() - 1).sum();
        if transpositions % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn pow(&self, e: i64) -> Permutation {
        let base = if e >= 0 { self.clone() } else { self.inverse() };
        let mut acc = Permutation::identity(self.degree());
        for _ in 0..e.unsigned_abs() {
            acc = acc.then(&base);
        }
        acc
    }

    /// Canonical 1-based cycle string: cycles ordered by least point, each
    /// cycle rotated to start at its least point. The identity is `()`.
    pub fn cycle_string(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".to_string();
        }
        cycles
            .iter()
            .map(|c| {
                let body = c
                    .iter()
                    .map(|p| (p + 1).to_string())
                    .collect::<Vec<_>>()
                    .join(",");
                format!("({body})")
            })
            .collect()
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({})", self.cycle_string())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.cycle_string())
    }
}

impl GroupElement for Permutation {
    fn identity_like(&self) -> Self {
        Permutation::identity(self.degree())
    }

    fn group_mul(&self, other: &Self) -> Self {
        self.then(other)
    }

    fn group_inv(&self) -> Self {
        self.inverse()
    }

    fn is_group_identity(&self) -> bool {
        self.is_identity()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_parse_and_print_round_trip() {
        let p = Permutation::parse_cycles("(1,4,7)(2,5)", 8).unwrap();
        assert_eq!(p.apply(0), 3);
        assert_eq!(p.apply(3), 6);
        assert_eq!(p.apply(6), 0);
        assert_eq!(p.cycle_string(), "(1,4,7)(2,5)");
        let q = Permutation::parse_cycles(&p.cycle_string(), 8).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn order_is_lcm_of_cycle_lengths() {
        assert_eq!(Permutation::identity(4).order(), 1);
        let p = Permutation::from_cycles(5, &[vec![0, 1], vec![2, 3, 4]]).unwrap();
        assert_eq!(p.order(), 6);
    }

    #[test]
    fn composition_is_left_to_right() {
        let a = Permutation::from_cycles(3, &[vec![0, 1]]).unwrap();
        let b = Permutation::from_cycles(3, &[vec![1, 2]]).unwrap();
        // apply a first: 0 -> 1, then b: 1 -> 2.
        assert_eq!(a.then(&b).apply(0), 2);
        assert!(a.then(&a).is_identity());
    }

    #[test]
    fn inverse_and_sign() {
        let p = Permutation::parse_cycles("(1,2,3)", 3).unwrap();
        assert!(p.then(&p.inverse()).is_identity());
        assert_eq!(p.sign(), 1);
        let t = Permutation::parse_cycles("(1,2)", 3).unwrap();
        assert_eq!(t.sign(), -1);
    }

    #[test]
    fn bad_inputs_are_rejected() {
        assert!(Permutation::from_images(vec![0, 0, 2]).is_err());
        assert!(Permutation::parse_cycles("(1,2", 4).is_err());
        assert!(Permutation::parse_cycles("(0,1)", 4).is_err());
        assert!(Permutation::from_cycles(3, &[vec![0, 1], vec![1, 2]]).is_err());
    }
}
