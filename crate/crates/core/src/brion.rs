//! Character evaluation through tangent cones, and the Weyl-formula side.
//!
//! Specializing σ(C_v) cannot be done factor by factor: some denominator
//! rays map to the monomial 1. Each σ term is therefore turned into a
//! univariate rational function of a scalar s by substituting
//! `t^u -> x^{F(u)}·s^{⟨c,u⟩}` for a perturbation vector c that is not
//! orthogonal to any denominator ray. The terms are summed exactly with
//! gcd reduction and the value at s = 1 is the specialized contribution;
//! a surviving pole at s = 1 would mean the machinery is inconsistent and
//! is reported as an error, never patched over.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Zero};

use crate::cone::{ComponentCone, TangentCone};
use crate::error::{Error, Result};
use crate::graph::ambient_dim;
use crate::perm::Permutation;
use crate::rational::Rational;
use crate::sample::{validate_x_point, Sampler};
use crate::sigma::{eval_sigma, monomial_value, sigma_terms, SigmaTerm};
use crate::specialize::f_image_coords;
use crate::unipoly::{UniPoly, UniRational};
use crate::vertex::{enumerate_vertices, project_vertex, PolytopeVertex};
use crate::weight::Weight;

/// A polynomial in s times an integer power of s.
struct ShiftedPoly {
    poly: UniPoly,
    shift: i64,
}

/// One σ term as a univariate rational function of the perturbation scalar.
fn term_unirational(term: &SigmaTerm, n: usize, x: &[Rational], c: &[i64]) -> Result<UniRational> {
    let weight_value = |u: &[i64]| monomial_value(x, &f_image_coords(n, u));
    let s_exponent = |u: &[i64]| -> i64 { c.iter().zip(u).map(|(a, b)| a * b).sum() };

    let exps: Vec<i64> = term.numerators().iter().map(|p| s_exponent(p)).collect();
    let min_exp = *exps.iter().min().expect("nonempty numerator");
    let mut num = ShiftedPoly {
        poly: UniPoly::zero(),
        shift: min_exp,
    };
    for (p, &e) in term.numerators().iter().zip(&exps) {
        num.poly = num
            .poly
            .add(&UniPoly::monomial(weight_value(p)?, (e - min_exp) as usize));
    }

    let mut den = ShiftedPoly {
        poly: UniPoly::one(),
        shift: 0,
    };
    for r in term.rays() {
        let value = weight_value(r)?;
        let k = s_exponent(r);
        let factor = match k {
            0 => {
                return Err(Error::DegeneratePoint(format!(
                    "perturbation orthogonal to denominator ray {r:?}"
                )))
            }
            // 1 − X·s^k
            k if k > 0 => {
                UniPoly::constant(Rational::one()).sub(&UniPoly::monomial(value, k as usize))
            }
            // 1 − X·s^k = s^k (s^{−k} − X)
            k => {
                den.shift += k;
                UniPoly::monomial(Rational::one(), (-k) as usize).sub(&UniPoly::constant(value))
            }
        };
        den.poly = den.poly.mul(&factor);
    }

    let net = num.shift - den.shift;
    if net >= 0 {
        num.poly = num.poly.shift(net as usize);
    } else {
        den.poly = den.poly.shift((-net) as usize);
    }
    UniRational::new(num.poly, den.poly)
}

/// Specialized value of σ for a cone given by apex and rays.
fn cone_value(
    apex: &[i64],
    rays: &[Vec<i64>],
    n: usize,
    x: &[Rational],
    c: &[i64],
) -> Result<Rational> {
    let terms = sigma_terms(apex, rays)?;
    let mut sum = UniRational::zero();
    for term in &terms {
        sum = sum.add(&term_unirational(term, n, x, c)?);
    }
    sum.eval_at_one()
}

/// F(σ(C_v)) at the point x, computed over the whole tangent cone.
pub fn vertex_contribution(cone: &TangentCone, x: &[Rational], c: &[i64]) -> Result<Rational> {
    if x.len() != cone.n() {
        return Err(Error::LengthMismatch(x.len(), cone.n()));
    }
    cone_value(cone.apex(), cone.rays(), cone.n(), x, c)
}

/// F(σ(C_Δ)) at the point x for a single component cone (apex at the
/// origin). Exactly zero when the component has a cycle and a single
/// top-row node.
pub fn component_contribution(comp: &ComponentCone, x: &[Rational], c: &[i64]) -> Result<Rational> {
    let apex = vec![0i64; ambient_dim(comp.n())];
    cone_value(&apex, comp.rays(), comp.n(), x, c)
}

/// The product route: F(t^v)·Π_Δ F(σ(C_Δ)), which must agree with
/// `vertex_contribution` because the component cones span independent
/// coordinates.
pub fn vertex_contribution_from_components(
    cone: &TangentCone,
    x: &[Rational],
    c: &[i64],
) -> Result<Rational> {
    let mut value = monomial_value(x, &f_image_coords(cone.n(), cone.apex()))?;
    for comp in cone.components() {
        value *= component_contribution(comp, x, c)?;
    }
    Ok(value)
}

/// One summand of Weyl's formula: x^{wλ} / Π_{i<j} (1 − x_{w(j)}/x_{w(i)}).
pub fn weyl_summand(w: &Permutation, lambda: &Weight, x: &[Rational]) -> Result<Rational> {
    let n = lambda.n();
    if w.n() != n || x.len() != n {
        return Err(Error::LengthMismatch(x.len(), n));
    }
    // x^{wλ} = Π x_{w(i)}^{λ_i}
    let permuted: Vec<Rational> = (0..n).map(|i| x[w.apply(i)].clone()).collect();
    let mut value = monomial_value(&permuted, lambda.entries())?;
    for i in 0..n {
        for j in (i + 1)..n {
            let factor = Rational::one() - &permuted[j] / &permuted[i];
            if factor.is_zero() {
                return Err(Error::DegeneratePoint(format!(
                    "x_{} = x_{} makes a Weyl factor vanish",
                    w.apply(j) + 1,
                    w.apply(i) + 1
                )));
            }
            value /= factor;
        }
    }
    Ok(value)
}

/// Σ over all permutations of the Weyl summand.
pub fn weyl_character(lambda: &Weight, x: &[Rational]) -> Result<Rational> {
    let mut sum = Rational::zero();
    for w in Permutation::all(lambda.n()) {
        sum += weyl_summand(&w, lambda, x)?;
    }
    Ok(sum)
}

/// Σ of Weyl summands over {w : w(λ) = μ}; for regular λ a single summand.
pub fn grouped_contribution(mu: &Weight, lambda: &Weight, x: &[Rational]) -> Result<Rational> {
    let mut sum = Rational::zero();
    let mut found = false;
    for w in Permutation::all(lambda.n()) {
        if w.apply_to_weight(lambda) == *mu {
            sum += weyl_summand(&w, lambda, x)?;
            found = true;
        }
    }
    if !found {
        return Err(Error::NotInOrbit {
            mu: mu.entries().to_vec(),
            lambda: lambda.entries().to_vec(),
        });
    }
    Ok(sum)
}

/// Vertices of the polytope paired with their tangent cones.
pub fn vertex_cones(lambda: &Weight) -> Result<Vec<(PolytopeVertex, TangentCone)>> {
    enumerate_vertices(lambda)?
        .into_iter()
        .map(|v| {
            let cone = TangentCone::at_vertex(&v.pattern)?;
            Ok((v, cone))
        })
        .collect()
}

/// Deduplicated specialized denominator exponents of all cones, for
/// genericity validation of x-points.
pub fn f_ray_images(n: usize, cones: &[(PolytopeVertex, TangentCone)]) -> Vec<Vec<i64>> {
    let set: BTreeSet<Vec<i64>> = cones
        .iter()
        .flat_map(|(_, c)| c.rays().iter().map(|r| f_image_coords(n, r)))
        .collect();
    set.into_iter().collect()
}

/// All denominator rays of all cones, deduplicated.
pub fn all_rays(cones: &[(PolytopeVertex, TangentCone)]) -> Vec<Vec<i64>> {
    let set: BTreeSet<Vec<i64>> = cones
        .iter()
        .flat_map(|(_, c)| c.rays().iter().cloned())
        .collect();
    set.into_iter().collect()
}

/// The character by summing specialized tangent-cone transforms over all
/// vertices. The x-point is validated against the denominators in play;
/// the perturbation vector is drawn from the seed.
pub fn brion_character(lambda: &Weight, x: &[Rational], seed: u64) -> Result<Rational> {
    let cones = vertex_cones(lambda)?;
    let n = lambda.n();
    validate_x_point(x, &f_ray_images(n, &cones))?;
    let rays = all_rays(&cones);
    let c = Sampler::new(seed).perturbation(ambient_dim(n), &rays)?;
    let mut sum = Rational::zero();
    for (_, cone) in &cones {
        sum += vertex_contribution(cone, x, &c)?;
    }
    Ok(sum)
}

/// Checks, at the given t-point, that σ of each tangent cone of the
/// (possibly singular) polytope equals the sum of σ over the fibre of the
/// projection from a regular companion, weighted by t^{v−v′}.
pub fn verify_degbri(lambda: &Weight, lambda_prime: &Weight, t: &[Rational]) -> Result<bool> {
    lambda.require_dominant()?;
    if !lambda_prime.is_regular() {
        return Err(Error::NotRegular(lambda_prime.entries().to_vec()));
    }
    if lambda.n() != lambda_prime.n() {
        return Err(Error::LengthMismatch(lambda.n(), lambda_prime.n()));
    }
    let mut fibres: BTreeMap<Vec<i64>, Vec<Rational>> = BTreeMap::new();
    for source in enumerate_vertices(lambda_prime)? {
        let image = project_vertex(&source.pattern, lambda)?;
        let cone = TangentCone::at_vertex(&source.pattern)?;
        let value = eval_sigma(&sigma_terms(cone.apex(), cone.rays())?, t)?;
        let offset: Vec<i64> = image
            .coords()
            .iter()
            .zip(cone.apex())
            .map(|(a, b)| a - b)
            .collect();
        fibres
            .entry(image.coords())
            .or_default()
            .push(monomial_value(t, &offset)? * value);
    }
    for (vertex, cone) in vertex_cones(lambda)? {
        let lhs = eval_sigma(&sigma_terms(cone.apex(), cone.rays())?, t)?;
        let rhs = match fibres.get(&vertex.pattern.coords()) {
            Some(values) => values.iter().sum::<Rational>(),
            None => return Ok(false),
        };
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}
