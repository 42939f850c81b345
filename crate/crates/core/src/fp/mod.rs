//! Finitely presented groups: words in generators, presentations with marked
//! elements, homomorphism checking, abelianization, and Todd–Coxeter coset
//! enumeration.

mod hom;
mod presentation;
mod todd_coxeter;
mod word;

pub use hom::{check_hom, evaluate, EvalError, FpHom, GroupElement, HomCheck, HomError};
pub use presentation::{
    AbelianizedMark, Presentation, PresentationError, PresentationParseError,
};
pub use todd_coxeter::{todd_coxeter, CosetTable, Enumeration, Overflow};
pub use word::{Letter, Word};
