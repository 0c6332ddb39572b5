//! Shared fixtures for the criterion benches: a ladder of highest weights
//! and a seeded generic evaluation point per weight.

use gtbrion::{f_ray_images, vertex_cones, Rational, Sampler, Weight};

/// Weights ordered by cost, mixing regular and singular shapes.
pub fn ladder() -> Vec<Weight> {
    [
        vec![2, 1, 0],
        vec![2, 2, 0],
        vec![3, 2, 1, 0],
        vec![5, 4, 2, 0],
    ]
    .into_iter()
    .map(Weight::from_vec)
    .collect()
}

/// A generic x-point for `lambda`, drawn from a fixed seed so repeated
/// bench runs evaluate identical inputs.
pub fn generic_point(lambda: &Weight) -> Vec<Rational> {
    let cones = vertex_cones(lambda).expect("fixture weight is dominant");
    let f_rays = f_ray_images(lambda.n(), &cones);
    Sampler::new(97)
        .x_point(lambda.n(), &f_rays)
        .expect("a generic point exists")
}
