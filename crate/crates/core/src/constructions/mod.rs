//! Constructions of every group, homomorphism, and presentation the pipeline
//! verifies: circle-bundle fundamental groups and their cyclic quotients, the
//! integer Heisenberg group and its mod-p reductions, `PSL_2(p)` on the
//! projective line, Mathieu groups from shipped generator files, and
//! twist-spin knot quotients.

mod circle_bundle;
mod heisenberg;
mod knots;
mod mathieu;
mod psl2;

pub use circle_bundle::{circle_bundle_pi1, cyclic_quotient, CircleBundleSpec, CircleBundleError, ZnElement};
pub use heisenberg::{he3_mod_p, heisenberg_surjection, He3Element, He3ModP, HeisenbergError};
pub use knots::{torus_knot_group, twist_spin_quotient, KnotError, KnotSpec};
pub use mathieu::{load_mathieu, mathieu_file_name, MathieuError, MathieuGroup, MATHIEU_NAMES};
pub use psl2::{psl2, Psl2, Psl2Error};
