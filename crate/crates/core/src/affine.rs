//! Real affine functions on a polytope and their vertex data.
//!
//! An [`AffineFunc`] is `x ↦ linear·x + constant` on the ambient space. On
//! a simplex any vertex-value list extends affinely; on a general polytope
//! extension can fail, and [`affine_extend`] then returns an exact
//! affine-dependence witness instead.

use num_traits::{One, Zero};
use thiserror::Error;

use crate::linalg::{self, LinSolve};
use crate::polytope::Polytope;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineFunc {
    linear: Vec<Rational>,
    constant: Rational,
}

/// Values of a function at the vertices of a polytope, in vertex order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexValues(pub Vec<Rational>);

impl VertexValues {
    pub fn values(&self) -> &[Rational] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExtendError {
    #[error("polytope `{0}` is not a simplex")]
    NotSimplex(String),
    #[error("{got} values for {expected} vertices")]
    LengthMismatch { got: usize, expected: usize },
}

/// Outcome of extending vertex values over a general polytope.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExtendOutcome {
    Affine(AffineFunc),
    /// `combo` are signed vertex multipliers with `Σ μ_i v_i = 0` and
    /// `Σ μ_i = 0` but `Σ μ_i vals_i ≠ 0`.
    NotAffine { combo: Vec<Rational> },
}

impl AffineFunc {
    pub fn new(linear: Vec<Rational>, constant: Rational) -> Self {
        Self { linear, constant }
    }

    /// The order unit: constantly one.
    pub fn one(dim: usize) -> Self {
        Self::new(vec![Rational::zero(); dim], Rational::one())
    }

    pub fn constant_value(value: Rational, dim: usize) -> Self {
        Self::new(vec![Rational::zero(); dim], value)
    }

    pub fn dim(&self) -> usize {
        self.linear.len()
    }

    pub fn linear(&self) -> &[Rational] {
        &self.linear
    }

    pub fn constant(&self) -> &Rational {
        &self.constant
    }

    pub fn evaluate(&self, x: &[Rational]) -> Rational {
        assert_eq!(x.len(), self.dim(), "dimension mismatch");
        self.linear
            .iter()
            .zip(x)
            .map(|(a, xi)| a.clone() * xi.clone())
            .sum::<Rational>()
            + self.constant.clone()
    }

    pub fn vertex_values(&self, k: &Polytope) -> VertexValues {
        VertexValues(k.vertices().iter().map(|v| self.evaluate(v)).collect())
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        Self::new(
            self.linear.iter().map(|a| a.clone() * factor.clone()).collect(),
            self.constant.clone() * factor.clone(),
        )
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim(), other.dim(), "dimension mismatch");
        Self::new(
            self.linear
                .iter()
                .zip(&other.linear)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
            self.constant.clone() + other.constant.clone(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rational::one()))
    }
}

fn check_len(k: &Polytope, vals: &VertexValues) -> Result<(), ExtendError> {
    if vals.len() != k.n_vertices() {
        return Err(ExtendError::LengthMismatch {
            got: vals.len(),
            expected: k.n_vertices(),
        });
    }
    Ok(())
}

/// The affine function agreeing with `vals` at every vertex of a simplex.
/// When the simplex does not span the ambient space the returned
/// coefficients are the deterministic particular solution; the restriction
/// to the simplex is unique either way.
pub fn affine_from_vertex_values(
    k: &Polytope,
    vals: &VertexValues,
) -> Result<AffineFunc, ExtendError> {
    check_len(k, vals)?;
    if !k.is_simplex() {
        return Err(ExtendError::NotSimplex(k.name().to_string()));
    }
    match extend(k, vals) {
        ExtendOutcome::Affine(f) => Ok(f),
        ExtendOutcome::NotAffine { .. } => {
            unreachable!("affinely independent vertices always extend")
        }
    }
}

/// Try to extend vertex values affinely over any polytope.
pub fn affine_extend(k: &Polytope, vals: &VertexValues) -> Result<ExtendOutcome, ExtendError> {
    check_len(k, vals)?;
    Ok(extend(k, vals))
}

fn extend(k: &Polytope, vals: &VertexValues) -> ExtendOutcome {
    // One equation per vertex: linear·v + constant = value.
    let a = k.homogeneous_columns();
    match linalg::solve(&a, vals.values()) {
        LinSolve::Solution { x, .. } => {
            let (constant, linear) = x.split_last().expect("d+1 unknowns");
            ExtendOutcome::Affine(AffineFunc::new(linear.to_vec(), constant.clone()))
        }
        LinSolve::Inconsistent { combo } => ExtendOutcome::NotAffine { combo },
    }
}

/// Exact check of a [`ExtendOutcome::NotAffine`] witness.
pub fn check_dependence_witness(k: &Polytope, vals: &VertexValues, combo: &[Rational]) -> bool {
    if combo.len() != k.n_vertices() || vals.len() != k.n_vertices() {
        return false;
    }
    let vertex_sum_zero = (0..k.dim()).all(|coord| {
        k.vertices()
            .iter()
            .zip(combo)
            .map(|(v, c)| v[coord].clone() * c.clone())
            .sum::<Rational>()
            .is_zero()
    });
    let weight_sum_zero = combo.iter().cloned().sum::<Rational>().is_zero();
    let value_sum: Rational = vals
        .values()
        .iter()
        .zip(combo)
        .map(|(v, c)| v.clone() * c.clone())
        .sum();
    vertex_sum_zero && weight_sum_zero && !value_sum.is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn triangle() -> Polytope {
        Polytope::new(
            "triangle",
            vec![
                vec![rat(0, 1), rat(0, 1)],
                vec![rat(1, 1), rat(0, 1)],
                vec![rat(0, 1), rat(1, 1)],
            ],
        )
        .unwrap()
    }

    fn square() -> Polytope {
        Polytope::new(
            "square",
            vec![
                vec![rat(0, 1), rat(0, 1)],
                vec![rat(1, 1), rat(0, 1)],
                vec![rat(0, 1), rat(1, 1)],
                vec![rat(1, 1), rat(1, 1)],
            ],
        )
        .unwrap()
    }

    fn vv(vals: &[(i64, i64)]) -> VertexValues {
        VertexValues(vals.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    #[test]
    fn triangle_interpolation() {
        // Values (2,1,4) at (0,0),(1,0),(0,1): solving the 3×3 system gives
        // f(x,y) = 2 - x + 2y, cross-checked at the two non-anchor vertices.
        let f = affine_from_vertex_values(&triangle(), &vv(&[(2, 1), (1, 1), (4, 1)])).unwrap();
        assert_eq!(f.linear(), &[rat(-1, 1), rat(2, 1)]);
        assert_eq!(f.constant(), &rat(2, 1));
        assert_eq!(f.evaluate(&[rat(1, 1), rat(0, 1)]), rat(1, 1));
        assert_eq!(f.evaluate(&[rat(0, 1), rat(1, 1)]), rat(4, 1));
        assert_eq!(f.evaluate(&[rat(1, 3), rat(1, 3)]), rat(7, 3));
        assert_eq!(f.evaluate(&[rat(0, 1), rat(0, 1)]), rat(2, 1));
    }

    #[test]
    fn constant_values_give_order_unit() {
        let f = affine_from_vertex_values(&triangle(), &vv(&[(1, 1), (1, 1), (1, 1)])).unwrap();
        assert_eq!(f, AffineFunc::one(2));
        assert_eq!(f.evaluate(&[rat(1, 3), rat(2, 5)]), rat(1, 1));
    }

    #[test]
    fn segment_two_point_interpolation() {
        // Values (3,1) at -1 and 1: f(x) = 2 - x.
        let k = Polytope::new("segment", vec![vec![rat(-1, 1)], vec![rat(1, 1)]]).unwrap();
        let f = affine_from_vertex_values(&k, &vv(&[(3, 1), (1, 1)])).unwrap();
        assert_eq!(f.linear(), &[rat(-1, 1)]);
        assert_eq!(f.constant(), &rat(2, 1));
    }

    #[test]
    fn square_extension_succeeds_when_consistent() {
        // 3 = 2 + 2 - 1, so (1,2,2,3) extends to f(x,y) = 1 + x + y.
        let out = affine_extend(&square(), &vv(&[(1, 1), (2, 1), (2, 1), (3, 1)])).unwrap();
        match out {
            ExtendOutcome::Affine(f) => {
                assert_eq!(f.linear(), &[rat(1, 1), rat(1, 1)]);
                assert_eq!(f.constant(), &rat(1, 1));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn square_extension_fails_with_exact_witness() {
        // (1,1)-(1,0)-(0,1)+(0,0) = 0 but 4-2-2+1 = 1 ≠ 0.
        let vals = vv(&[(1, 1), (2, 1), (2, 1), (4, 1)]);
        let out = affine_extend(&square(), &vals).unwrap();
        match out {
            ExtendOutcome::NotAffine { combo } => {
                assert!(check_dependence_witness(&square(), &vals, &combo));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn simplex_vals_always_extend() {
        let out = affine_extend(&triangle(), &vv(&[(7, 2), (1, 5), (64, 1)])).unwrap();
        assert!(matches!(out, ExtendOutcome::Affine(_)));
    }

    #[test]
    fn round_trip_vertex_values() {
        let k = triangle();
        let vals = vv(&[(5, 3), (1, 7), (9, 2)]);
        let f = affine_from_vertex_values(&k, &vals).unwrap();
        assert_eq!(f.vertex_values(&k), vals);
    }

    #[test]
    fn length_mismatch_is_reported() {
        assert!(matches!(
            affine_extend(&triangle(), &vv(&[(1, 1), (2, 1)])),
            Err(ExtendError::LengthMismatch { got: 2, expected: 3 })
        ));
    }
}
