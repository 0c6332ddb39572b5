//! Permutations of {1, ..., n} acting on weights.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::weight::Weight;

/// A permutation w stored as its image array: `images[i]` is w(i+1) - 1,
/// i.e. everything is 0-based internally and 1-based in serialized form.
///
/// The action on weights is by position: `(w·λ)_{w(i)} = λ_i`, equivalently
/// `(w·λ)_i = λ_{w⁻¹(i)}`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self {
            images: (0..n).collect(),
        }
    }

    /// Builds from 0-based images, validating bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &im in &images {
            if im >= n || seen[im] {
                return Err(Error::Internal(format!(
                    "not a permutation image array: {images:?}"
                )));
            }
            seen[im] = true;
        }
        Ok(Self { images })
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// w(i), 0-based.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    /// 1-based image array, the serialized form.
    pub fn one_based(&self) -> Vec<usize> {
        self.images.iter().map(|i| i + 1).collect()
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.images.len()];
        for (i, &im) in self.images.iter().enumerate() {
            inv[im] = i;
        }
        Self { images: inv }
    }

    /// Composition acting left-to-right on points: `(self.then(g))(i) = g(self(i))`.
    pub fn then(&self, g: &Self) -> Self {
        Self {
            images: self.images.iter().map(|&i| g.images[i]).collect(),
        }
    }

    /// `(w·λ)_{w(i)} = λ_i`.
    pub fn apply_to_weight(&self, lambda: &Weight) -> Weight {
        let mut out = vec![0i64; lambda.n()];
        for (i, &v) in lambda.entries().iter().enumerate() {
            out[self.images[i]] = v;
        }
        Weight::from_vec(out)
    }

    /// All permutations of {1,...,n} in lexicographic order of image arrays.
    pub fn all(n: usize) -> Vec<Self> {
        use itertools::Itertools;
        (0..n)
            .permutations(n)
            .map(|images| Self { images })
            .collect()
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = String;
    fn try_from(one_based: Vec<usize>) -> std::result::Result<Self, String> {
        let images: Vec<usize> = one_based
            .iter()
            .map(|&i| i.checked_sub(1).ok_or("images must be 1-based"))
            .collect::<std::result::Result<_, _>>()?;
        Self::from_images(images).map_err(|e| e.to_string())
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Vec<usize> {
        p.one_based()
    }
}
