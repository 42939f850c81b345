use thiserror::Error;

use super::swan::{is_prime, psl2_p_torsion_degrees};
use super::table::{H3Entry, SporadicRecord};
use super::HomologyResult;

/// Evidence that `H_3(P; Z)` has no p-torsion.
#[derive(Debug)]
pub enum H3Evidence<'a> {
    /// A homology group computed by this crate (periodic or bar).
    Computed(&'a HomologyResult),
    /// The divisibility formula for the p-torsion degrees of
    /// `H^*(PSL_2(p); Z)`; applies to `P = PSL_2(p)` with `p >= 5`.
    Psl2Formula { p: u64 },
    /// A cited external table record.
    ExternalTable(&'a SporadicRecord),
}

/// Where a vanishing conclusion came from, and whether this artifact could
/// certify it or merely cites it.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Provenance {
    pub kind: &'static str,
    pub detail: String,
    pub certified: bool,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EvidenceError {
    #[error("computed evidence is for degree {0}, need degree 3")]
    WrongDegree(usize),
    #[error("the PSL2 torsion formula needs a prime p >= 5, got {0}")]
    FormulaInapplicable(u64),
    #[error("table entry for {group}: H3 is {reason}, unusable as vanishing evidence")]
    TableUnusable { group: String, reason: String },
}

/// Decides whether `H_3(P; Z)` has no `p`-torsion, from the given evidence,
/// and reports the provenance of the answer.
///
/// For the formula route, p-torsion in homological degree 3 corresponds to
/// p-torsion in cohomological degree 4 (for a finite group,
/// `H^(k+1)(G; Z) = H_k(G; Z)` by the universal coefficient theorem), so the
/// check is `4 ∉ psl2_p_torsion_degrees(p, 4)`.
pub fn h3_has_no_p_torsion(
    group_id: &str,
    p: u64,
    evidence: &H3Evidence<'_>,
) -> Result<(bool, Provenance), EvidenceError> {
    match evidence {
        H3Evidence::Computed(result) => {
            if result.degree != 3 {
                return Err(EvidenceError::WrongDegree(result.degree));
            }
            let ok = !result.structure.has_p_torsion(p);
            Ok((
                ok,
                Provenance {
                    kind: "computed",
                    detail: format!(
                        "H3({}) = {} computed by {} method",
                        result.group_id, result.structure, result.method
                    ),
                    certified: result.certified,
                },
            ))
        }
        H3Evidence::Psl2Formula { p: fp } => {
            if !is_prime(*fp) || *fp < 5 {
                return Err(EvidenceError::FormulaInapplicable(*fp));
            }
            debug_assert_eq!(*fp, p, "formula prime should match the torsion prime");
            let degrees = psl2_p_torsion_degrees(*fp, 4);
            let ok = !degrees.contains(&4);
            Ok((
                ok,
                Provenance {
                    kind: "psl2-formula",
                    detail: format!(
                        "{group_id}: p-torsion degrees of H^*(PSL2({fp})) below 5: {degrees:?}; \
                         cohomological degree 4 = homological degree 3"
                    ),
                    certified: true,
                },
            ))
        }
        H3Evidence::ExternalTable(record) => match &record.h3 {
            H3Entry::Known(h3) => {
                let ok = !h3.has_p_torsion(p);
                Ok((
                    ok,
                    Provenance {
                        kind: "external-table",
                        detail: format!(
                            "H3({}) = {} per {}",
                            record.name,
                            h3.table_notation(),
                            record.citation
                        ),
                        certified: false,
                    },
                ))
            }
            H3Entry::Unknown => Err(EvidenceError::TableUnusable {
                group: record.name.clone(),
                reason: "unknown".to_string(),
            }),
            H3Entry::Constraint(c) => Err(EvidenceError::TableUnusable {
                group: record.name.clone(),
                reason: format!("only constrained ({c})"),
            }),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::table::SporadicTable;
    use crate::homology::{homology_cyclic, HomologyResult, Method};

    fn table() -> SporadicTable {
        SporadicTable::parse(
            "version 1\n\
             M22 | 12 | 0 | 2 | cite\n\
             J3 | 3 | 15 | 2 | cite\n\
             M | 0 | constraint:bounded | 5,7 | cite\n",
        )
        .unwrap()
    }

    #[test]
    fn psl2_formula_accepts_seven_rejects_five() {
        let (ok, prov) =
            h3_has_no_p_torsion("PSL2(7)", 7, &H3Evidence::Psl2Formula { p: 7 }).unwrap();
        assert!(ok);
        assert!(prov.certified);
        let (ok, _) =
            h3_has_no_p_torsion("PSL2(5)", 5, &H3Evidence::Psl2Formula { p: 5 }).unwrap();
        assert!(!ok, "degree 4 carries 5-torsion for p = 5");
    }

    #[test]
    fn table_evidence_is_uncertified() {
        let t = table();
        let m22 = t.get("M22").unwrap();
        let (ok, prov) =
            h3_has_no_p_torsion("M22", 2, &H3Evidence::ExternalTable(m22)).unwrap();
        assert!(ok);
        assert!(!prov.certified);

        // J3 has H3 = Z/15: fine for p = 2, fails for p = 3 and p = 5.
        let j3 = t.get("J3").unwrap();
        assert!(h3_has_no_p_torsion("J3", 2, &H3Evidence::ExternalTable(j3)).unwrap().0);
        assert!(!h3_has_no_p_torsion("J3", 3, &H3Evidence::ExternalTable(j3)).unwrap().0);
        assert!(!h3_has_no_p_torsion("J3", 5, &H3Evidence::ExternalTable(j3)).unwrap().0);
    }

    #[test]
    fn monster_constraint_is_unusable() {
        let t = table();
        let m = t.get("M").unwrap();
        assert!(matches!(
            h3_has_no_p_torsion("M", 5, &H3Evidence::ExternalTable(m)),
            Err(EvidenceError::TableUnusable { .. })
        ));
    }

    #[test]
    fn computed_evidence_must_be_degree_three() {
        let h2 = HomologyResult::computed("Z/5", 2, homology_cyclic(5, 2), Method::Periodic);
        assert_eq!(
            h3_has_no_p_torsion("Z/5", 5, &H3Evidence::Computed(&h2)),
            Err(EvidenceError::WrongDegree(2))
        );
        let h3 = HomologyResult::computed("Z/5", 3, homology_cyclic(5, 3), Method::Periodic);
        let (ok, _) = h3_has_no_p_torsion("Z/5", 5, &H3Evidence::Computed(&h3)).unwrap();
        assert!(!ok, "H3(Z/5) = Z/5 definitely has 5-torsion");
    }
}
