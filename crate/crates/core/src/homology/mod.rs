//! Integral group homology `H_k(G; Z)` for `k <= 3`, by three methods:
//!
//! * the 2-periodic resolution for cyclic groups (closed form);
//! * the normalized bar complex for groups small enough to enumerate;
//! * Swan's fixed-point theorem for the p-part of `PSL_2(p)` cohomology;
//!
//! plus cited table data for sporadic groups whose homology is known in the
//! literature but far out of reach of direct computation here.

mod bar;
mod cyclic;
mod evidence;
mod swan;
mod table;

pub use bar::{bar_homology, BarError};
pub use cyclic::homology_cyclic;
pub use evidence::{h3_has_no_p_torsion, EvidenceError, H3Evidence, Provenance};
pub use swan::{
    is_prime, psl2_p_torsion_degrees, quadratic_residue_generator, weyl_fixed_points, WeylAction,
};
pub use table::{H2Entry, H3Entry, SporadicRecord, SporadicTable, TableError};

use crate::linalg::AbelianGroupStructure;

/// Annihilation bound for the third homology of the mod-p Heisenberg group:
/// multiplication by `p^3 = |He_3(p)|` kills `H_3(He_3(p); Z)`, by the
/// standard transfer argument bounding reduced homology by the group order.
/// The verification pipeline only ever uses this bound, never the exact
/// group.
pub fn he3_annihilation_bound(p: u64) -> u64 {
    p.pow(3)
}

/// How a homology value was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Periodic,
    Bar,
    SwanWeyl,
    ExternalTable,
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Method::Periodic => "periodic",
            Method::Bar => "bar",
            Method::SwanWeyl => "swan-weyl",
            Method::ExternalTable => "external-table",
        };
        write!(f, "{s}")
    }
}

/// A computed (or cited) homology group with its provenance. Table-sourced
/// values are never certified and always carry a citation.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct HomologyResult {
    pub group_id: String,
    pub degree: usize,
    pub structure: AbelianGroupStructure,
    pub method: Method,
    pub certified: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub citation: Option<String>,
}

impl HomologyResult {
    pub fn computed(
        group_id: impl Into<String>,
        degree: usize,
        structure: AbelianGroupStructure,
        method: Method,
    ) -> Self {
        assert!(
            method != Method::ExternalTable,
            "table values must come through `cited`"
        );
        HomologyResult {
            group_id: group_id.into(),
            degree,
            structure,
            method,
            certified: true,
            citation: None,
        }
    }

    pub fn cited(
        group_id: impl Into<String>,
        degree: usize,
        structure: AbelianGroupStructure,
        citation: impl Into<String>,
    ) -> Self {
        HomologyResult {
            group_id: group_id.into(),
            degree,
            structure,
            method: Method::ExternalTable,
            certified: false,
            citation: Some(citation.into()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn annihilation_bound_is_p_cubed() {
        assert_eq!(he3_annihilation_bound(2), 8);
        assert_eq!(he3_annihilation_bound(3), 27);
        assert_eq!(he3_annihilation_bound(5), 125);
    }

    #[test]
    fn table_results_are_uncertified_with_citation() {
        let r = HomologyResult::cited("M22", 3, AbelianGroupStructure::trivial(), "homology table");
        assert!(!r.certified);
        assert!(r.citation.is_some());
    }

    #[test]
    #[should_panic(expected = "table values")]
    fn computed_constructor_rejects_table_method() {
        let _ = HomologyResult::computed(
            "X",
            3,
            AbelianGroupStructure::trivial(),
            Method::ExternalTable,
        );
    }
}
