//! Integer weights for gl_n.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exponent::{ExponentVector, Var};

/// An integer weight (λ_1, ..., λ_n). Entries may be negative; dominant
/// means non-increasing, regular means all entries distinct.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn from_vec(entries: Vec<i64>) -> Self {
        Self(entries)
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn is_dominant(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    /// For dominant weights this is "strictly decreasing"; stated as
    /// "all entries distinct" so it is meaningful for any weight.
    pub fn is_regular(&self) -> bool {
        let set: BTreeSet<i64> = self.0.iter().copied().collect();
        set.len() == self.0.len()
    }

    pub fn require_dominant(&self) -> Result<()> {
        if self.is_dominant() {
            Ok(())
        } else {
            Err(Error::NonDominant(self.0.clone()))
        }
    }

    /// The orbit under coordinate permutations, sorted and deduplicated.
    pub fn orbit(&self) -> Vec<Weight> {
        use itertools::Itertools;
        self.0
            .iter()
            .copied()
            .permutations(self.0.len())
            .map(Weight::from_vec)
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect()
    }

    /// Number of lattice points of the pattern polytope, by the Weyl
    /// dimension formula: prod_{i<j} (λ_i - λ_j + j - i) / (j - i).
    /// Exact; the division is checked to be integral.
    pub fn weyl_dimension(&self) -> Result<BigInt> {
        self.require_dominant()?;
        let n = self.n();
        let mut num = BigInt::from(1);
        let mut den = BigInt::from(1);
        for i in 0..n {
            for j in (i + 1)..n {
                num *= BigInt::from(self.0[i] - self.0[j] + (j as i64 - i as i64));
                den *= BigInt::from(j as i64 - i as i64);
            }
        }
        let (q, r) = num_integer::Integer::div_rem(&num, &den);
        if r != BigInt::from(0) {
            return Err(Error::Internal(
                "Weyl dimension product did not divide evenly".into(),
            ));
        }
        Ok(q)
    }

    /// Monomial x_1^{λ_1} ... x_n^{λ_n}.
    pub fn exponent(&self) -> ExponentVector {
        ExponentVector::from_pairs(
            self.0
                .iter()
                .enumerate()
                .map(|(i, &e)| (Var::X(i as u32 + 1), e)),
        )
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({})",
            self.0
                .iter()
                .map(|e| e.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(entries: &[i64]) -> Weight {
        Weight::from_vec(entries.to_vec())
    }

    #[test]
    fn dominance_and_regularity() {
        assert!(w(&[5, 4, 2, 0]).is_dominant());
        assert!(w(&[5, 4, 2, 0]).is_regular());
        assert!(w(&[2, 2, 0]).is_dominant());
        assert!(!w(&[2, 2, 0]).is_regular());
        assert!(!w(&[0, 1]).is_dominant());
        assert!(w(&[3, 0, -2]).is_dominant());
    }

    #[test]
    fn weyl_dimension_values() {
        assert_eq!(w(&[1, 0]).weyl_dimension().unwrap(), BigInt::from(2));
        assert_eq!(w(&[2, 1, 0]).weyl_dimension().unwrap(), BigInt::from(8));
        assert_eq!(w(&[3, 2, 1, 0]).weyl_dimension().unwrap(), BigInt::from(64));
        assert_eq!(
            w(&[5, 4, 2, 0]).weyl_dimension().unwrap(),
            BigInt::from(360)
        );
        assert_eq!(w(&[1, 1]).weyl_dimension().unwrap(), BigInt::from(1));
        assert_eq!(w(&[2, 2, 0]).weyl_dimension().unwrap(), BigInt::from(6));
        // Shift invariance: adding a constant to all entries changes nothing.
        assert_eq!(
            w(&[4, 3, 1, -1]).weyl_dimension().unwrap(),
            BigInt::from(360)
        );
    }

    #[test]
    fn orbit_of_singular_weight_dedupes() {
        let orb = w(&[2, 2, 0]).orbit();
        assert_eq!(orb.len(), 3);
        assert!(orb.contains(&w(&[0, 2, 2])));
    }
}
