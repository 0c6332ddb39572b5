//! The monomial specialization from pattern variables to weight variables.
//!
//! Sends `t[0,j] -> x1` and `t[i,j] -> x_i^{-1} x_{i+1}` for i >= 1. On the
//! exponential of a pattern this produces exactly the weight monomial: the
//! x_k exponent of the image is the k−1st row sum minus the k-th row sum.

use crate::exponent::{ExponentVector, Var};
use crate::graph::triangle_nodes;

/// Image of a t-monomial exponent under the specialization.
pub fn apply_f(m: &ExponentVector) -> ExponentVector {
    let mut pairs: Vec<(Var, i64)> = Vec::new();
    for (var, e) in m.iter() {
        match var {
            Var::T(0, _) => pairs.push((Var::X(1), e)),
            Var::T(i, _) => {
                pairs.push((Var::X(i), -e));
                pairs.push((Var::X(i + 1), e));
            }
            Var::X(_) => pairs.push((var, e)),
        }
    }
    ExponentVector::from_pairs(pairs)
}

/// Image of a pattern-space coordinate vector, as x-exponents indexed by
/// 1..=n: the x_k exponent is (sum over row k−1) − (sum over row k).
pub fn f_image_coords(n: usize, coords: &[i64]) -> Vec<i64> {
    let mut row_sums = vec![0i64; n];
    for (node, &v) in triangle_nodes(n).iter().zip(coords) {
        row_sums[node.0] += v;
    }
    (1..=n)
        .map(|k| row_sums[k - 1] - if k < n { row_sums[k] } else { 0 })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::{enumerate_patterns, GTPattern};
    use crate::weight::Weight;

    #[test]
    fn single_variables() {
        let t11 = ExponentVector::of(Var::T(1, 1), 1);
        assert_eq!(
            apply_f(&t11),
            ExponentVector::from_pairs(vec![(Var::X(1), -1), (Var::X(2), 1)])
        );
        let t03 = ExponentVector::of(Var::T(0, 3), 1);
        assert_eq!(apply_f(&t03), ExponentVector::of(Var::X(1), 1));
        assert_eq!(apply_f(&ExponentVector::new()), ExponentVector::new());
    }

    #[test]
    fn recorded_pattern_maps_to_its_weight_monomial() {
        let p = GTPattern::new(vec![vec![5, 4, 2, 0], vec![5, 4, 0], vec![4, 0], vec![4]]).unwrap();
        let image = apply_f(&p.exponent());
        assert_eq!(image, p.weight_of().exponent());
        assert_eq!(f_image_coords(4, &p.coords()), vec![2, 5, 0, 4]);
    }

    #[test]
    fn every_pattern_exponential_specializes_to_its_weight() {
        for lambda in [
            Weight::from_vec(vec![2, 1, 0]),
            Weight::from_vec(vec![2, 2, 0]),
            Weight::from_vec(vec![1, -1]),
        ] {
            for p in enumerate_patterns(&lambda, 10_000).unwrap() {
                assert_eq!(apply_f(&p.exponent()), p.weight_of().exponent());
                assert_eq!(
                    f_image_coords(lambda.n(), &p.coords()),
                    p.weight_of().entries()
                );
            }
        }
    }

    #[test]
    fn chain_suffix_rays_specialize_to_root_directions() {
        // a ray supported with sign s on one node in each of rows a..=b maps
        // to s·(e_{b+1} − e_a)
        use crate::cone::simplicial_vertex_rays;
        let p = GTPattern::new(vec![vec![5, 4, 2, 0], vec![5, 4, 0], vec![4, 0], vec![4]]).unwrap();
        for ray in simplicial_vertex_rays(&p).unwrap() {
            let image = f_image_coords(4, &ray.coords);
            let mut expected = vec![0i64; 4];
            expected[ray.a - 1] = -ray.sign;
            expected[ray.b] = ray.sign;
            assert_eq!(image, expected);
        }
    }
}
