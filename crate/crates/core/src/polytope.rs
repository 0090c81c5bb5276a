//! Compact convex sets as certified rational vertex lists.
//!
//! A [`Polytope`] is the convex hull of its stored vertices, with the list
//! itself certified to be the extreme-point set: construction runs one
//! feasibility LP per point to prove it is not a convex combination of the
//! others. Downstream code may therefore quantify over `vertices()` as the
//! extreme boundary without rechecking.

use num_traits::{One, Zero};
use thiserror::Error;

use crate::linalg::{self, LinSolve};
use crate::lp::{check_feasible, Feasibility, LinearProgram, Relation};
use crate::rational::{format_point, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polytope {
    name: String,
    dim: usize,
    vertices: Vec<Vec<Rational>>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolytopeError {
    #[error("a polytope needs at least one vertex")]
    Empty,
    #[error("vertex {index} has dimension {got}, expected {expected}")]
    DimensionMismatch {
        index: usize,
        got: usize,
        expected: usize,
    },
    #[error("point {index} is not extreme: convex combination with weights {weights:?}")]
    NotExtreme {
        index: usize,
        weights: Vec<Rational>,
    },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BarycentricError {
    #[error("polytope `{0}` is not a simplex")]
    NotSimplex(String),
    #[error("point {0} lies outside the affine hull of the vertices")]
    PointOutsideAffineHull(String),
    #[error("point has dimension {got}, expected {expected}")]
    DimensionMismatch { got: usize, expected: usize },
}

impl Polytope {
    /// Build a polytope from its intended extreme points, certifying via
    /// LP that no listed point lies in the convex hull of the others.
    pub fn new(name: impl Into<String>, points: Vec<Vec<Rational>>) -> Result<Self, PolytopeError> {
        if points.is_empty() {
            return Err(PolytopeError::Empty);
        }
        let dim = points[0].len();
        for (index, p) in points.iter().enumerate() {
            if p.len() != dim {
                return Err(PolytopeError::DimensionMismatch {
                    index,
                    got: p.len(),
                    expected: dim,
                });
            }
        }
        for index in 0..points.len() {
            let others: Vec<&Vec<Rational>> = points
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != index)
                .map(|(_, p)| p)
                .collect();
            if let Feasibility::Feasible(weights) = convex_combination(&others, &points[index]) {
                return Err(PolytopeError::NotExtreme { index, weights });
            }
        }
        Ok(Self {
            name: name.into(),
            dim,
            vertices: points,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[Vec<Rational>] {
        &self.vertices
    }

    pub fn n_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex(&self, index: usize) -> &[Rational] {
        &self.vertices[index]
    }

    /// True iff the vertices are affinely independent.
    pub fn is_simplex(&self) -> bool {
        linalg::rank(&self.homogeneous_columns()) == self.n_vertices()
    }

    /// Convex-hull membership via LP; returns the convex weights when x ∈ K.
    pub fn contains(&self, x: &[Rational]) -> Result<Option<Vec<Rational>>, BarycentricError> {
        self.check_dim(x)?;
        let refs: Vec<&Vec<Rational>> = self.vertices.iter().collect();
        Ok(match convex_combination(&refs, x) {
            Feasibility::Feasible(weights) => Some(weights),
            Feasibility::Infeasible(_) => None,
        })
    }

    /// Barycentric coordinates on a simplex: the unique affine weights for
    /// x in the affine hull; nonnegative exactly when x ∈ K.
    pub fn barycentric(&self, x: &[Rational]) -> Result<Vec<Rational>, BarycentricError> {
        self.check_dim(x)?;
        if !self.is_simplex() {
            return Err(BarycentricError::NotSimplex(self.name.clone()));
        }
        let a = self.homogeneous_rows();
        let mut b: Vec<Rational> = x.to_vec();
        b.push(Rational::one());
        match linalg::solve(&a, &b) {
            LinSolve::Solution { x: weights, .. } => Ok(weights),
            LinSolve::Inconsistent { .. } => {
                Err(BarycentricError::PointOutsideAffineHull(format_point(x)))
            }
        }
    }

    fn check_dim(&self, x: &[Rational]) -> Result<(), BarycentricError> {
        if x.len() != self.dim {
            return Err(BarycentricError::DimensionMismatch {
                got: x.len(),
                expected: self.dim,
            });
        }
        Ok(())
    }

    /// Rows: one per ambient coordinate plus the all-ones row; columns are
    /// vertices. This is the system `Σ λ_i v_i = x, Σ λ_i = 1`.
    pub(crate) fn homogeneous_rows(&self) -> Vec<Vec<Rational>> {
        let mut rows: Vec<Vec<Rational>> = (0..self.dim)
            .map(|coord| self.vertices.iter().map(|v| v[coord].clone()).collect())
            .collect();
        rows.push(vec![Rational::one(); self.n_vertices()]);
        rows
    }

    /// One row per vertex, each vertex extended by a trailing 1.
    pub(crate) fn homogeneous_columns(&self) -> Vec<Vec<Rational>> {
        self.vertices
            .iter()
            .map(|v| {
                let mut row = v.clone();
                row.push(Rational::one());
                row
            })
            .collect()
    }
}

/// Feasibility of `x = Σ λ_j p_j` with `λ ≥ 0, Σ λ = 1` over the given
/// points.
fn convex_combination(points: &[&Vec<Rational>], x: &[Rational]) -> Feasibility {
    let n = points.len();
    let dim = x.len();
    let mut lp = LinearProgram::feasibility(n);
    for coord in 0..dim {
        let coeffs: Vec<Rational> = points.iter().map(|p| p[coord].clone()).collect();
        lp.constrain(coeffs, Relation::Eq, x[coord].clone());
    }
    lp.constrain(vec![Rational::one(); n], Relation::Eq, Rational::one());
    for j in 0..n {
        let mut e = vec![Rational::zero(); n];
        e[j] = Rational::one();
        lp.constrain(e, Relation::Geq, Rational::zero());
    }
    check_feasible(&lp).expect("well-formed membership program")
}
