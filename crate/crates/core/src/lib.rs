//! Computational group theory engine for verifying that a surface of
//! self-intersection `n` embeds in a simply connected 4-manifold with
//! prescribed non-trivial complement fundamental group.
//!
//! The library reduces the topological statement to finite group theory and
//! checks every hypothesis mechanically:
//!
//! * [`fp`] — finitely presented groups: words, relator evaluation,
//!   abelianization, Todd–Coxeter coset enumeration;
//! * [`perm`] — permutation groups: Schreier–Sims base/strong-generating-set
//!   machinery, normal closures, simplicity, Heisenberg subgroup search;
//! * [`linalg`] — exact sparse integer matrices and Smith normal form;
//! * [`homology`] — `H_k(G; Z)` for `k <= 3` by periodic resolution, the
//!   normalized bar complex, or Swan/Weyl fixed points, plus cited tables for
//!   sporadic groups;
//! * [`constructions`] — circle-bundle fundamental groups, the Heisenberg
//!   tower, `PSL_2(p)`, Mathieu groups from data files, twist-spin knot
//!   quotients;
//! * [`certificate`] — the verification pipeline assembling all hypotheses
//!   into replayable JSON certificates;
//! * [`cli`] — the `surface-cert` command-line surface.
//!
//! The long-form guide lives in `book/`; its code snippets are compiled and
//! run as part of `cargo test` (see `src/book.rs`).

pub mod certificate;
pub mod cli;
pub mod constructions;
pub mod fp;
pub mod homology;
pub mod linalg;
pub mod perm;

#[cfg(doctest)]
mod book;

/// Default RNG seed used everywhere randomness appears, so that runs are
/// reproducible unless the caller overrides it.
pub const DEFAULT_SEED: u64 = 0xC0FFEE;
