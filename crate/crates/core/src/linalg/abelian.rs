use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

/// A finitely generated abelian group in canonical form:
/// `Z^free_rank ⊕ Z/d_1 ⊕ ... ⊕ Z/d_k` with `d_1 | d_2 | ... | d_k`, all
/// `d_i >= 2`. This is the value shape of every homology and abelianization
/// computation in the crate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianGroupStructure {
    free_rank: usize,
    invariant_factors: Vec<BigInt>,
}

impl AbelianGroupStructure {
    /// Builds the structure, dropping factors equal to 1 and checking the
    /// divisibility chain. Panics if the chain is violated: callers are
    /// expected to feed SNF output, which already satisfies it.
    pub fn new<I>(free_rank: usize, factors: I) -> Self
    where
        I: IntoIterator<Item = BigInt>,
    {
        let invariant_factors: Vec<BigInt> =
            factors.into_iter().filter(|d| !d.is_one()).collect();
        for d in &invariant_factors {
            assert!(*d >= BigInt::from(2), "invariant factor {d} < 2");
        }
        for w in invariant_factors.windows(2) {
            assert!(
                (&w[1] % &w[0]).is_zero(),
                "invariant factors violate divisibility: {} ∤ {}",
                w[0],
                w[1]
            );
        }
        AbelianGroupStructure {
            free_rank,
            invariant_factors,
        }
    }

    pub fn trivial() -> Self {
        Self::new(0, Vec::new())
    }

    pub fn free(rank: usize) -> Self {
        Self::new(rank, Vec::new())
    }

    pub fn cyclic(n: u64) -> Self {
        assert!(n >= 2);
        Self::new(0, vec![BigInt::from(n)])
    }

    /// Convenience constructor from small factors, mostly for tests.
    pub fn from_parts(free_rank: usize, factors: &[u64]) -> Self {
        Self::new(free_rank, factors.iter().map(|&d| BigInt::from(d)))
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.invariant_factors
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.invariant_factors.is_empty()
    }

    /// Order of the group, `None` when infinite.
    pub fn order(&self) -> Option<BigInt> {
        if self.free_rank > 0 {
            return None;
        }
        let mut o = BigInt::one();
        for d in &self.invariant_factors {
            o *= d;
        }
        Some(o)
    }

    /// True when some element has order divisible by `p`, i.e. some invariant
    /// factor is divisible by `p` (torsion only; the free part is torsion-free).
    pub fn has_p_torsion(&self, p: u64) -> bool {
        let p = BigInt::from(p);
        self.invariant_factors.iter().any(|d| (d % &p).is_zero())
    }

    /// True when every invariant factor divides `bound` (so multiplication by
    /// `bound` annihilates the torsion subgroup).
    pub fn all_factors_divide(&self, bound: &BigInt) -> bool {
        self.invariant_factors.iter().all(|d| (bound % d).is_zero())
    }

    /// Compact notation matching homology tables in the literature:
    /// `"0"` for the trivial group, `"12"` for `Z/12`, `"2+2"` for
    /// `Z/2 ⊕ Z/2`, with any free part shown as `Z^r`.
    pub fn table_notation(&self) -> String {
        let mut parts: Vec<String> = Vec::new();
        if self.free_rank == 1 {
            parts.push("Z".to_string());
        } else if self.free_rank > 1 {
            parts.push(format!("Z^{}", self.free_rank));
        }
        for d in &self.invariant_factors {
            parts.push(d.to_string());
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join("+")
        }
    }
}

impl fmt::Display for AbelianGroupStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts: Vec<String> = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for d in &self.invariant_factors {
            parts.push(format!("Z/{d}"));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

impl Serialize for AbelianGroupStructure {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        // Invariant factors as decimal strings: they are arbitrary-precision
        // and must survive any JSON reader exactly.
        let mut s = serializer.serialize_struct("AbelianGroupStructure", 2)?;
        s.serialize_field("free_rank", &self.free_rank)?;
        let factors: Vec<String> = self.invariant_factors.iter().map(|d| d.to_string()).collect();
        s.serialize_field("invariant_factors", &factors)?;
        s.end()
    }
}
