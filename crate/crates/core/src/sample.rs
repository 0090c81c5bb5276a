//! Seeded deterministic sampling of rational test data.
//!
//! All randomized suites draw through [`Sampler`], a ChaCha-backed
//! generator with rational outputs of denominator at most 64, so any
//! counterexample reproduces from its seed.

use num_bigint::BigInt;
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::affine::{affine_from_vertex_values, AffineFunc, VertexValues};
use crate::polytope::Polytope;
use crate::rational::Rational;

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// A positive rational in [1/64, 64] with numerator and denominator
    /// at most 64.
    pub fn positive_rational(&mut self) -> Rational {
        let numer = self.rng.random_range(1..=64i64);
        let denom = self.rng.random_range(1..=64i64);
        Rational::new(BigInt::from(numer), BigInt::from(denom))
    }

    /// A signed rational with |value| ≤ 64 and denominator ≤ 64.
    pub fn signed_rational(&mut self) -> Rational {
        let numer = self.rng.random_range(-64..=64i64);
        let denom = self.rng.random_range(1..=64i64);
        Rational::new(BigInt::from(numer), BigInt::from(denom))
    }

    /// Strictly positive vertex values.
    pub fn positive_values(&mut self, n: usize) -> VertexValues {
        VertexValues((0..n).map(|_| self.positive_rational()).collect())
    }

    /// A random element of A_c(K). On a simplex: random positive vertex
    /// values extended affinely. Otherwise: a random linear part shifted
    /// to be strictly positive at every vertex.
    pub fn positive_affine(&mut self, k: &Polytope) -> AffineFunc {
        if k.is_simplex() {
            let vals = self.positive_values(k.n_vertices());
            return affine_from_vertex_values(k, &vals).expect("simplex extension");
        }
        let linear: Vec<Rational> = (0..k.dim()).map(|_| self.signed_rational()).collect();
        let probe = AffineFunc::new(linear.clone(), Rational::zero());
        let min = k
            .vertices()
            .iter()
            .map(|v| probe.evaluate(v))
            .min()
            .expect("non-empty vertex list");
        AffineFunc::new(linear, self.positive_rational() - min)
    }

    /// Convex weights with denominator 64, strictly positive at every
    /// vertex before normalization (an interior point when K is a simplex).
    pub fn interior_point(&mut self, k: &Polytope) -> Vec<Rational> {
        self.convex_point(k, 1)
    }

    /// A random point of K (weights may vanish).
    pub fn point_in(&mut self, k: &Polytope) -> Vec<Rational> {
        self.convex_point(k, 0)
    }

    fn convex_point(&mut self, k: &Polytope, min_weight: i64) -> Vec<Rational> {
        let n = k.n_vertices();
        let mut weights: Vec<Rational> = (0..n)
            .map(|_| {
                let w = self.rng.random_range(min_weight..=64i64);
                Rational::new(BigInt::from(w), BigInt::from(64))
            })
            .collect();
        let mut total: Rational = weights.iter().cloned().sum();
        if total.is_zero() {
            weights[0] = Rational::new(BigInt::from(1), BigInt::from(1));
            total = Rational::new(BigInt::from(1), BigInt::from(1));
        }
        (0..k.dim())
            .map(|coord| {
                k.vertices()
                    .iter()
                    .zip(&weights)
                    .map(|(v, w)| v[coord].clone() * w.clone() / total.clone())
                    .sum()
            })
            .collect()
    }

    /// A uniform random permutation of 0..n.
    pub fn permutation(&mut self, n: usize) -> Vec<usize> {
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut self.rng);
        perm
    }

    /// A full-dimensional simplex in ℝ^dim with random rational vertices
    /// (retries until the sampled points are affinely independent).
    pub fn simplex(&mut self, name: &str, dim: usize) -> Polytope {
        loop {
            let points: Vec<Vec<Rational>> = (0..dim + 1)
                .map(|_| (0..dim).map(|_| self.signed_rational()).collect())
                .collect();
            if let Ok(p) = Polytope::new(name, points) {
                if p.is_simplex() {
                    return p;
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn deterministic_under_seed() {
        let mut a = Sampler::new(7);
        let mut b = Sampler::new(7);
        for _ in 0..32 {
            assert_eq!(a.positive_rational(), b.positive_rational());
        }
        assert_ne!(
            Sampler::new(1).positive_rational(),
            Sampler::new(2).positive_rational()
        );
    }

    #[test]
    fn positive_rationals_in_range() {
        let mut s = Sampler::new(0);
        for _ in 0..200 {
            let r = s.positive_rational();
            assert!(r >= rat(1, 64) && r <= rat(64, 1));
        }
    }

    #[test]
    fn sampled_points_lie_in_k() {
        let k = Polytope::new(
            "square",
            vec![
                vec![rat(0, 1), rat(0, 1)],
                vec![rat(1, 1), rat(0, 1)],
                vec![rat(0, 1), rat(1, 1)],
                vec![rat(1, 1), rat(1, 1)],
            ],
        )
        .unwrap();
        let mut s = Sampler::new(3);
        for _ in 0..50 {
            let x = s.point_in(&k);
            assert!(k.contains(&x).unwrap().is_some());
        }
    }

    #[test]
    fn sampled_affine_is_positive() {
        let k = Polytope::new(
            "square",
            vec![
                vec![rat(0, 1), rat(0, 1)],
                vec![rat(1, 1), rat(0, 1)],
                vec![rat(0, 1), rat(1, 1)],
                vec![rat(1, 1), rat(1, 1)],
            ],
        )
        .unwrap();
        let mut s = Sampler::new(5);
        for _ in 0..50 {
            let f = s.positive_affine(&k);
            assert!(crate::gauges::is_in_ac(&k, &f));
        }
    }

    #[test]
    fn random_simplices_are_simplices() {
        let mut s = Sampler::new(11);
        for dim in 1..=5 {
            let k = s.simplex("s", dim);
            assert!(k.is_simplex());
            assert_eq!(k.n_vertices(), dim + 1);
        }
    }
}
