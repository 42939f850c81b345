use thiserror::Error;

use crate::perm::{PermGroup, Permutation};

use super::presentation::Presentation;
use super::word::Word;

/// Minimal group-element interface needed to evaluate words: multiplication,
/// inversion, and an identity of the right "shape" (degree, modulus, ...).
pub trait GroupElement: Clone + Eq {
    fn identity_like(&self) -> Self;
    fn group_mul(&self, other: &Self) -> Self;
    fn group_inv(&self) -> Self;

    fn is_group_identity(&self) -> bool {
        *self == self.identity_like()
    }

    fn group_pow(&self, e: i64) -> Self {
        let base = if e >= 0 { self.clone() } else { self.group_inv() };
        let mut acc = self.identity_like();
        for _ in 0..e.unsigned_abs() {
            acc = acc.group_mul(&base);
        }
        acc
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EvalError {
    #[error("word uses generator {index} but only {num_images} images were given")]
    GeneratorOutOfRange { index: usize, num_images: usize },
    #[error("cannot evaluate with an empty image list")]
    NoImages,
}

/// Evaluates a word at the given generator images, multiplying in
/// left-to-right word order.
pub fn evaluate<T: GroupElement>(w: &Word, images: &[T]) -> Result<T, EvalError> {
    let Some(first) = images.first() else {
        return if w.is_identity() {
            Err(EvalError::NoImages)
        } else {
            Err(EvalError::GeneratorOutOfRange {
                index: w.max_gen().expect("nonempty word"),
                num_images: 0,
            })
        };
    };
    if let Some(g) = w.max_gen() {
        if g >= images.len() {
            return Err(EvalError::GeneratorOutOfRange {
                index: g,
                num_images: images.len(),
            });
        }
    }
    let mut acc = first.identity_like();
    for l in w.letters() {
        acc = acc.group_mul(&images[l.gen].group_pow(l.exp));
    }
    Ok(acc)
}

/// Outcome of a homomorphism well-definedness check: which relators failed to
/// evaluate to the identity. Failures are data, not errors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomCheck {
    pub ok: bool,
    pub failing_relators: Vec<usize>,
}

/// Checks that mapping the generators of `p` to `images` kills every relator.
pub fn check_hom<T: GroupElement>(p: &Presentation, images: &[T]) -> Result<HomCheck, EvalError> {
    assert_eq!(
        images.len(),
        p.num_generators(),
        "need one image per generator"
    );
    let mut failing = Vec::new();
    for (i, rel) in p.relators().iter().enumerate() {
        if p.num_generators() == 0 {
            break;
        }
        if !evaluate(rel, images)?.is_group_identity() {
            failing.push(i);
        }
    }
    Ok(HomCheck {
        ok: failing.is_empty(),
        failing_relators: failing,
    })
}

#[derive(Debug, Error)]
pub enum HomError {
    #[error("image {index} has degree {got}, target group has degree {want}")]
    DegreeMismatch { index: usize, got: usize, want: usize },
    #[error("image {index} is not an element of the target group")]
    NotInTarget { index: usize },
    #[error("relators {0:?} do not map to the identity")]
    RelatorsFail(Vec<usize>),
    #[error(transparent)]
    Eval(#[from] EvalError),
}

/// A verified homomorphism from a finitely presented group to a permutation
/// group: well-definedness is checked at construction, never assumed.
#[derive(Clone, Debug)]
pub struct FpHom {
    source: Presentation,
    images: Vec<Permutation>,
}

impl FpHom {
    pub fn new(
        source: Presentation,
        images: Vec<Permutation>,
        target: &PermGroup,
    ) -> Result<Self, HomError> {
        for (index, g) in images.iter().enumerate() {
            if g.degree() != target.degree() {
                return Err(HomError::DegreeMismatch {
                    index,
                    got: g.degree(),
                    want: target.degree(),
                });
            }
            if !target.contains(g) {
                return Err(HomError::NotInTarget { index });
            }
        }
        let check = check_hom(&source, &images)?;
        if !check.ok {
            return Err(HomError::RelatorsFail(check.failing_relators));
        }
        Ok(FpHom { source, images })
    }

    pub fn source(&self) -> &Presentation {
        &self.source
    }

    pub fn images(&self) -> &[Permutation] {
        &self.images
    }

    pub fn apply(&self, w: &Word) -> Result<Permutation, EvalError> {
        evaluate(w, &self.images)
    }

    /// Image of a marked element, e.g. the meridian.
    pub fn apply_marked(&self, name: &str) -> Option<Permutation> {
        let w = self.source.marked(name)?;
        self.apply(w).ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fp::word::Word;

    #[test]
    fn empty_word_evaluates_to_identity() {
        let id3 = Permutation::identity(3);
        let images = vec![id3.clone()];
        assert_eq!(evaluate(&Word::identity(), &images).unwrap(), id3);
    }

    #[test]
    fn commutator_of_commuting_elements_is_identity() {
        // Disjoint transpositions commute.
        let a = Permutation::from_cycles(4, &[vec![0, 1]]).unwrap();
        let b = Permutation::from_cycles(4, &[vec![2, 3]]).unwrap();
        let c = Word::commutator(&Word::gen(0), &Word::gen(1));
        let img = evaluate(&c, &[a, b]).unwrap();
        assert!(img.is_identity());
    }

    #[test]
    fn commutator_of_adjacent_transpositions_is_a_three_cycle() {
        // Frozen by direct multiplication: with a = (1 2), b = (2 3) in S3,
        // [a,b] = a b a^-1 b^-1 maps 1->2->3->1 (0-based images [1, 2, 0]).
        let a = Permutation::from_cycles(3, &[vec![0, 1]]).unwrap();
        let b = Permutation::from_cycles(3, &[vec![1, 2]]).unwrap();
        let c = Word::commutator(&Word::gen(0), &Word::gen(1));
        let img = evaluate(&c, &[a, b]).unwrap();
        assert_eq!(img, Permutation::from_images(vec![1, 2, 0]).unwrap());
        assert_eq!(img.order(), 3);
    }

    #[test]
    fn out_of_range_generator_is_an_error() {
        let a = Permutation::identity(2);
        let w = Word::gen(1);
        assert_eq!(
            evaluate(&w, &[a]),
            Err(EvalError::GeneratorOutOfRange {
                index: 1,
                num_images: 1
            })
        );
    }

    #[test]
    fn trivial_images_always_define_a_hom() {
        let mut p = Presentation::with_names(vec!["x", "y"]).unwrap();
        p.add_relator(Word::from_syllables(vec![
            (0, 1),
            (1, 1),
            (0, 1),
            (1, -1),
            (0, -1),
            (1, -1),
        ]))
        .unwrap();
        let id = Permutation::identity(5);
        let check = check_hom(&p, &[id.clone(), id]).unwrap();
        assert!(check.ok);
    }
}
