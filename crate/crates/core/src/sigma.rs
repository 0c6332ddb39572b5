//! Integer-point transforms of pointed rational cones.
//!
//! σ of a cone is the formal sum of t^z over its lattice points, a rational
//! function once the cone is pointed. It is computed here in three steps:
//! triangulate the ray set (regular triangulation from a deterministic
//! weight lift, rays sorted lexicographically first), make the simplicial
//! pieces half-open with respect to a fixed generic interior point so every
//! lattice point is covered exactly once, and read off each piece's
//! fundamental-parallelepiped points by bounding-box enumeration with an
//! exact membership solve. The result is a list of terms
//! `(Σ_p t^p) / Π_r (1 − t^r)` that can be evaluated exactly at rational
//! points or expanded term by term.

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linalg::{row_rank, Matrix};
use crate::rational::{pow_rational, rat, Rational};

const WEIGHT_SEED: u64 = 0x5e17_ab1e;
const INTERIOR_SEED: u64 = 0xca8_1e55;
const MAX_RESAMPLE: u32 = 64;

/// One simplicial piece of a half-open decomposition: the cone spanned by
/// `rays` minus the facets opposite the flagged rays.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfOpenCone {
    pub rays: Vec<Vec<i64>>,
    pub excluded: Vec<bool>,
}

/// σ contribution of one half-open piece: `(Σ_p t^p) / Π_r (1 − t^r)`,
/// numerator points stored in absolute coordinates (apex already added).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaTerm {
    numerators: Vec<Vec<i64>>,
    rays: Vec<Vec<i64>>,
}

impl SigmaTerm {
    pub fn numerators(&self) -> &[Vec<i64>] {
        &self.numerators
    }

    pub fn rays(&self) -> &[Vec<i64>] {
        &self.rays
    }

    /// Exact value at a rational point with nonzero coordinates.
    pub fn eval(&self, t: &[Rational]) -> Result<Rational> {
        let mut num = Rational::zero();
        for p in &self.numerators {
            num += monomial_value(t, p)?;
        }
        let mut den = Rational::one();
        for r in &self.rays {
            let factor = Rational::one() - monomial_value(t, r)?;
            if factor.is_zero() {
                return Err(Error::DenominatorVanishes);
            }
            den *= factor;
        }
        Ok(num / den)
    }

    /// How many times the lattice point `z` (absolute coordinates) is
    /// counted by this term when expanded as a geometric series. Either 0
    /// or 1 for terms produced by `sigma_terms`.
    pub fn covers(&self, z: &[i64]) -> Result<usize> {
        let columns = transpose_to_matrix(&self.rays, z.len())?;
        let mut count = 0;
        for p in &self.numerators {
            let rhs: Vec<Rational> = z.iter().zip(p).map(|(&a, &b)| rat(a - b)).collect();
            if self.rays.is_empty() {
                if rhs.iter().all(Rational::is_zero) {
                    count += 1;
                }
                continue;
            }
            if let Some(c) = columns.solve_unique(&rhs)? {
                if c.iter().all(|ci| ci.is_integer() && !ci.is_negative()) {
                    count += 1;
                }
            }
        }
        Ok(count)
    }
}

/// Value of t^v at a rational point.
pub fn monomial_value(t: &[Rational], v: &[i64]) -> Result<Rational> {
    if t.len() != v.len() {
        return Err(Error::LengthMismatch(t.len(), v.len()));
    }
    let mut out = Rational::one();
    for (tv, &e) in t.iter().zip(v) {
        if e != 0 {
            out *= pow_rational(tv, e)?;
        }
    }
    Ok(out)
}

/// Sum of all term values: σ of the cone at the point.
pub fn eval_sigma(terms: &[SigmaTerm], t: &[Rational]) -> Result<Rational> {
    let mut out = Rational::zero();
    for term in terms {
        out += term.eval(t)?;
    }
    Ok(out)
}

/// Multiplicity of `z` across all terms; exactly 1 on the cone's lattice
/// points and 0 elsewhere when the terms come from `sigma_terms`.
pub fn series_multiplicity(terms: &[SigmaTerm], z: &[i64]) -> Result<usize> {
    let mut count = 0;
    for term in terms {
        count += term.covers(z)?;
    }
    Ok(count)
}

/// Decomposes the cone spanned by `rays` into half-open simplicial pieces
/// covering its lattice points exactly once.
pub fn half_open_triangulate(rays: &[Vec<i64>]) -> Result<Vec<HalfOpenCone>> {
    let mut rays: Vec<Vec<i64>> = rays.to_vec();
    rays.sort();
    rays.dedup();
    for a in &rays {
        if a.iter().all(|&x| x == 0) {
            return Err(Error::Internal("zero vector passed as a ray".into()));
        }
        let neg: Vec<i64> = a.iter().map(|&x| -x).collect();
        if rays.binary_search(&neg).is_ok() {
            return Err(Error::Internal(
                "opposite rays: cone contains a line".into(),
            ));
        }
    }
    if rays.is_empty() {
        return Ok(vec![HalfOpenCone {
            rays: Vec::new(),
            excluded: Vec::new(),
        }]);
    }
    let dim = row_rank(&rays);
    let cells = if rays.len() == dim {
        vec![(0..rays.len()).collect::<Vec<usize>>()]
    } else {
        triangulate_cells(&rays, dim)?
    };
    if cells.len() == 1 {
        let cell = &cells[0];
        return Ok(vec![HalfOpenCone {
            rays: cell.iter().map(|&i| rays[i].clone()).collect(),
            excluded: vec![false; cell.len()],
        }]);
    }
    open_cells(&rays, &cells, dim)
}

/// Cells of a regular triangulation: `dim`-subsets whose weight lift spans
/// a lower facet. Weights are drawn near 1 from a fixed seed so that every
/// extreme ray appears in some cell; degenerate draws are retried.
fn triangulate_cells(rays: &[Vec<i64>], dim: usize) -> Result<Vec<Vec<usize>>> {
    'attempt: for attempt in 0..MAX_RESAMPLE {
        let mut rng = ChaCha8Rng::seed_from_u64(WEIGHT_SEED + u64::from(attempt));
        let weights: Vec<Rational> = rays
            .iter()
            .map(|_| rat(1) + ratio_small(rng.gen_range(1..=1_000_000)))
            .collect();
        let mut cells = Vec::new();
        for subset in combinations(rays.len(), dim) {
            let chosen: Vec<Vec<i64>> = subset.iter().map(|&i| rays[i].clone()).collect();
            if row_rank(&chosen) != dim {
                continue;
            }
            let Some(alpha) = support_functional(&chosen, &subset, &weights)? else {
                continue;
            };
            let mut is_cell = true;
            for (j, ray) in rays.iter().enumerate() {
                if subset.contains(&j) {
                    continue;
                }
                let lifted = dot(&alpha, ray);
                if lifted == weights[j] {
                    continue 'attempt;
                }
                if lifted > weights[j] {
                    is_cell = false;
                    break;
                }
            }
            if is_cell {
                cells.push(subset);
            }
        }
        return Ok(cells);
    }
    Err(Error::SamplingExhausted(MAX_RESAMPLE))
}

/// The vector α in the span of the chosen rays with α·r_i = ω_i; `None`
/// never occurs for a full-rank subset but keeps the solver honest.
fn support_functional(
    chosen: &[Vec<i64>],
    subset: &[usize],
    weights: &[Rational],
) -> Result<Option<Vec<Rational>>> {
    let gram: Vec<Vec<Rational>> = chosen
        .iter()
        .map(|a| chosen.iter().map(|b| rat(dot_i64(a, b))).collect())
        .collect();
    let rhs: Vec<Rational> = subset.iter().map(|&i| weights[i].clone()).collect();
    let Some(c) = Matrix::from_rows(gram)?.solve_unique(&rhs)? else {
        return Ok(None);
    };
    let m = chosen[0].len();
    let mut alpha = vec![Rational::zero(); m];
    for (ci, ray) in c.iter().zip(chosen) {
        for (ak, &rk) in alpha.iter_mut().zip(ray) {
            *ak += ci * rat(rk);
        }
    }
    Ok(Some(alpha))
}

/// Assigns exclusion flags from a generic interior point: in each cell the
/// facet opposite ray i is dropped iff the point's i-th coordinate in that
/// cell's basis is negative.
fn open_cells(rays: &[Vec<i64>], cells: &[Vec<usize>], dim: usize) -> Result<Vec<HalfOpenCone>> {
    let m = rays[0].len();
    'attempt: for attempt in 0..MAX_RESAMPLE {
        let mut rng = ChaCha8Rng::seed_from_u64(INTERIOR_SEED + u64::from(attempt));
        let mut interior = vec![0i64; m];
        for ray in rays {
            let u = rng.gen_range(1..=1_000_000i64);
            for (gk, &rk) in interior.iter_mut().zip(ray) {
                *gk += u * rk;
            }
        }
        let rhs: Vec<Rational> = interior.iter().map(|&x| rat(x)).collect();
        let mut out = Vec::new();
        for cell in cells {
            let chosen: Vec<Vec<i64>> = cell.iter().map(|&i| rays[i].clone()).collect();
            let columns = transpose_to_matrix(&chosen, m)?;
            let c = columns.solve_unique(&rhs)?.ok_or_else(|| {
                Error::Internal("interior point escaped the span of the rays".into())
            })?;
            if c.iter().any(Rational::is_zero) {
                continue 'attempt;
            }
            debug_assert_eq!(c.len(), dim);
            out.push(HalfOpenCone {
                rays: chosen,
                excluded: c.iter().map(Rational::is_negative).collect(),
            });
        }
        return Ok(out);
    }
    Err(Error::SamplingExhausted(MAX_RESAMPLE))
}

/// σ of the pointed cone `apex + cone(rays)` as an exact term list.
pub fn sigma_terms(apex: &[i64], rays: &[Vec<i64>]) -> Result<Vec<SigmaTerm>> {
    for r in rays {
        if r.len() != apex.len() {
            return Err(Error::LengthMismatch(r.len(), apex.len()));
        }
    }
    let pieces = half_open_triangulate(rays)?;
    pieces
        .into_iter()
        .map(|piece| {
            let numerators = parallelepiped_points(&piece, apex.len())?
                .into_iter()
                .map(|p| p.iter().zip(apex).map(|(a, b)| a + b).collect())
                .collect();
            Ok(SigmaTerm {
                numerators,
                rays: piece.rays,
            })
        })
        .collect()
}

/// Lattice points of the half-open fundamental parallelepiped
/// `{Σ c_i r_i}` with c_i in [0,1) or (0,1] per exclusion flag, found by
/// scanning the integer bounding box and solving for the coefficients.
fn parallelepiped_points(piece: &HalfOpenCone, m: usize) -> Result<Vec<Vec<i64>>> {
    if piece.rays.is_empty() {
        return Ok(vec![vec![0; m]]);
    }
    let lo: Vec<i64> = (0..m)
        .map(|k| piece.rays.iter().map(|r| r[k].min(0)).sum())
        .collect();
    let hi: Vec<i64> = (0..m)
        .map(|k| piece.rays.iter().map(|r| r[k].max(0)).sum())
        .collect();
    let columns = transpose_to_matrix(&piece.rays, m)?;
    let zero = Rational::zero();
    let one = Rational::one();
    let mut out = Vec::new();
    let mut z = lo.clone();
    'scan: loop {
        let rhs: Vec<Rational> = z.iter().map(|&x| rat(x)).collect();
        if let Some(c) = columns.solve_unique(&rhs)? {
            let inside = c.iter().zip(&piece.excluded).all(|(ci, &excl)| {
                if excl {
                    *ci > zero && *ci <= one
                } else {
                    *ci >= zero && *ci < one
                }
            });
            if inside {
                out.push(z.clone());
            }
        }
        for k in 0..m {
            if z[k] < hi[k] {
                z[k] += 1;
                for (back, &l) in z[..k].iter_mut().zip(&lo[..k]) {
                    *back = l;
                }
                continue 'scan;
            }
        }
        break;
    }
    // fixed point first for readability of dumps
    out.sort();
    Ok(out)
}

fn transpose_to_matrix(rows: &[Vec<i64>], m: usize) -> Result<Matrix> {
    let data: Vec<Vec<Rational>> = (0..m)
        .map(|k| rows.iter().map(|r| rat(r[k])).collect())
        .collect();
    Matrix::from_rows(data)
}

fn dot(alpha: &[Rational], ray: &[i64]) -> Rational {
    alpha
        .iter()
        .zip(ray)
        .fold(Rational::zero(), |acc, (a, &r)| acc + a * rat(r))
}

fn dot_i64(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn ratio_small(numer: i64) -> Rational {
    Rational::new(numer.into(), 1_000_000_000i64.into())
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for i in start..n {
            current.push(i);
            rec(i + 1, n, k, current, out);
            current.pop();
        }
    }
    rec(0, n, k, &mut current, &mut out);
    out
}
