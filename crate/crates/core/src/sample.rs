//! Seeded sampling of generic evaluation data.
//!
//! Rational-function identities are certified by exact evaluation at
//! generic points. Genericity is never assumed: every draw is validated
//! against the denominator data actually in play and retried from the same
//! deterministic stream until it passes, so a run is reproducible from its
//! seed alone. User-supplied points go through the same validators and are
//! rejected, not perturbed, when degenerate.

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::rational::{rat, Rational};
use crate::sigma::monomial_value;
use crate::weight::Weight;

const MAX_RESAMPLE: u32 = 64;

/// Deterministic source of evaluation points and perturbation vectors.
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// A weight-space point with distinct positive integer coordinates at
    /// which no listed exponent vector evaluates to 1.
    pub fn x_point(&mut self, n: usize, f_rays: &[Vec<i64>]) -> Result<Vec<Rational>> {
        for attempt in 0..MAX_RESAMPLE {
            let hi = 100 * (i64::from(attempt) + 1);
            let x: Vec<Rational> = (0..n).map(|_| rat(self.rng.gen_range(2..=hi))).collect();
            if validate_x_point(&x, f_rays).is_ok() {
                return Ok(x);
            }
        }
        Err(Error::SamplingExhausted(MAX_RESAMPLE))
    }

    /// A pattern-space point with positive integer coordinates at which no
    /// listed denominator ray evaluates to 1.
    pub fn t_point(&mut self, dim: usize, rays: &[Vec<i64>]) -> Result<Vec<Rational>> {
        for attempt in 0..MAX_RESAMPLE {
            let hi = 100 * (i64::from(attempt) + 1);
            let t: Vec<Rational> = (0..dim).map(|_| rat(self.rng.gen_range(2..=hi))).collect();
            if validate_t_point(&t, rays).is_ok() {
                return Ok(t);
            }
        }
        Err(Error::SamplingExhausted(MAX_RESAMPLE))
    }

    /// An integer vector not orthogonal to any of the given rays. The
    /// entry range grows slowly on retry (small entries keep the degrees
    /// of the specialized denominators down); coordinates where every ray
    /// vanishes stay zero.
    pub fn perturbation(&mut self, dim: usize, rays: &[Vec<i64>]) -> Result<Vec<i64>> {
        let support: Vec<bool> = (0..dim).map(|k| rays.iter().any(|r| r[k] != 0)).collect();
        for attempt in 0..MAX_RESAMPLE {
            let h = 4 * (i64::from(attempt) / 32 + 1);
            let c: Vec<i64> = support
                .iter()
                .map(|&live| {
                    if live {
                        // Zero entries annihilate single-coordinate rays,
                        // so draw magnitude and sign separately.
                        let m = self.rng.gen_range(1..=h);
                        if self.rng.gen::<bool>() {
                            m
                        } else {
                            -m
                        }
                    } else {
                        0
                    }
                })
                .collect();
            if validate_perturbation(&c, rays).is_ok() {
                return Ok(c);
            }
        }
        Err(Error::SamplingExhausted(MAX_RESAMPLE))
    }

    /// A random regular dominant weight: strictly decreasing entries drawn
    /// from [0, bound].
    pub fn regular_lambda(&mut self, n: usize, bound: i64) -> Weight {
        loop {
            let mut entries: Vec<i64> = (0..n).map(|_| self.rng.gen_range(0..=bound)).collect();
            entries.sort_unstable_by(|a, b| b.cmp(a));
            if entries.windows(2).all(|w| w[0] > w[1]) {
                return Weight::from_vec(entries);
            }
        }
    }
}

/// All coordinates nonzero and pairwise distinct, and no listed exponent
/// vector evaluating to 1 (vectors that are identically zero are skipped;
/// their factors are handled by the perturbation variable instead).
pub fn validate_x_point(x: &[Rational], f_rays: &[Vec<i64>]) -> Result<()> {
    for (i, xi) in x.iter().enumerate() {
        if xi.is_zero() {
            return Err(Error::DegeneratePoint(format!("x{} = 0", i + 1)));
        }
        for (j, xj) in x.iter().enumerate().skip(i + 1) {
            if xi == xj {
                return Err(Error::DegeneratePoint(format!(
                    "x{} = x{}: a Weyl denominator factor vanishes",
                    i + 1,
                    j + 1
                )));
            }
        }
    }
    for e in f_rays {
        if e.iter().all(|&v| v == 0) {
            continue;
        }
        if monomial_value(x, e)?.is_one() {
            return Err(Error::DegeneratePoint(format!(
                "x^{e:?} = 1: a specialized denominator factor vanishes"
            )));
        }
    }
    Ok(())
}

/// All coordinates nonzero and no denominator ray evaluating to 1.
pub fn validate_t_point(t: &[Rational], rays: &[Vec<i64>]) -> Result<()> {
    for (k, tk) in t.iter().enumerate() {
        if tk.is_zero() {
            return Err(Error::DegeneratePoint(format!("t coordinate {k} is 0")));
        }
    }
    for r in rays {
        if monomial_value(t, r)?.is_one() {
            return Err(Error::DegeneratePoint(format!(
                "t^{r:?} = 1: a denominator factor vanishes"
            )));
        }
    }
    Ok(())
}

/// ⟨c, r⟩ ≠ 0 for every ray r.
pub fn validate_perturbation(c: &[i64], rays: &[Vec<i64>]) -> Result<()> {
    for r in rays {
        if c.len() != r.len() {
            return Err(Error::LengthMismatch(c.len(), r.len()));
        }
        if c.iter().zip(r).map(|(a, b)| a * b).sum::<i64>() == 0 {
            return Err(Error::DegeneratePoint(format!(
                "perturbation orthogonal to ray {r:?}"
            )));
        }
    }
    Ok(())
}
