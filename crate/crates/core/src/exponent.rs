//! Variables and Laurent exponent vectors.

use std::collections::BTreeMap;
use std::fmt;

/// A formal variable.
///
/// `X(i)` is the character variable `x_i` (1-based). `T(i, j)` is the
/// pattern-coordinate variable `t_{i,j}` for triangle row `i` (row 0 on top)
/// and position `j` (1-based within the row).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Var {
    X(u32),
    T(u32, u32),
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::X(i) => write!(f, "x{i}"),
            Var::T(i, j) => write!(f, "t[{i},{j}]"),
        }
    }
}

/// Exponent vector of a Laurent monomial: finitely many variables, each with
/// a nonzero integer exponent. Zero exponents are never stored.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct ExponentVector(BTreeMap<Var, i64>);

impl ExponentVector {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn of(var: Var, exp: i64) -> Self {
        let mut m = BTreeMap::new();
        if exp != 0 {
            m.insert(var, exp);
        }
        Self(m)
    }

    /// Builds from `(variable, exponent)` pairs, summing repeats and dropping
    /// anything that cancels to zero.
    pub fn from_pairs<I: IntoIterator<Item = (Var, i64)>>(pairs: I) -> Self {
        let mut m: BTreeMap<Var, i64> = BTreeMap::new();
        for (v, e) in pairs {
            let slot = m.entry(v).or_insert(0);
            *slot += e;
            if *slot == 0 {
                m.remove(&v);
            }
        }
        Self(m)
    }

    pub fn get(&self, var: Var) -> i64 {
        self.0.get(&var).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Var, i64)> + '_ {
        self.0.iter().map(|(v, e)| (*v, *e))
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::from_pairs(self.iter().chain(other.iter()))
    }

    pub fn neg(&self) -> Self {
        Self::from_pairs(self.iter().map(|(v, e)| (v, -e)))
    }

    pub fn scale(&self, k: i64) -> Self {
        Self::from_pairs(self.iter().map(|(v, e)| (v, k * e)))
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(v, e)| {
                if *e == 1 {
                    v.to_string()
                } else {
                    format!("{v}^{e}")
                }
            })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}
