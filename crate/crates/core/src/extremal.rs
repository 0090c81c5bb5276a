//! Extremal vectors p_ψ and co-extremal indicators I_ψ^∞.
//!
//! The extremal vector at a vertex ψ is the infimum of nonnegative affine
//! functions taking the value 1 at ψ. Here that infimum is realized
//! pointwise as an exact LP value: minimize h(x) over affine h with
//! h ≥ 0 at every vertex and h(ψ) = 1. On a simplex the infimum is itself
//! affine — the ψ-th barycentric coordinate — and [`p_affine`] materializes
//! it; on general polytopes only the pointwise values exist, and
//! [`affinity_probe`] hunts for exact midpoint-affinity violations (the
//! unit square already provides one).
//!
//! The co-extremal indicator takes the value 1 at ψ and ∞ elsewhere; its
//! gauge interactions reduce to evaluation at ψ.

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::affine::{affine_from_vertex_values, AffineFunc, VertexValues};
use crate::gauges::{ExtendedValue, GaugeError};
use crate::lp::{solve_lp, LinearProgram, LpOutcome, Relation};
use crate::polytope::Polytope;
use crate::rational::{format_point, Rational};
use crate::sample::Sampler;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExtremalError {
    #[error("vertex index {index} out of range (polytope has {n} vertices)")]
    BadIndex { index: usize, n: usize },
    #[error("point {0} lies outside the polytope")]
    PointOutsideK(String),
    #[error("polytope `{0}` is not a simplex")]
    NotSimplex(String),
    #[error(transparent)]
    Gauge(#[from] GaugeError),
    #[error("point has dimension {got}, expected {expected}")]
    DimensionMismatch { got: usize, expected: usize },
}

/// Pointwise evaluator for p_ψ; `closed_form` is present exactly when the
/// polytope is a simplex, where it equals the ψ-th barycentric coordinate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremalEvaluator {
    pub psi: usize,
    pub closed_form: Option<AffineFunc>,
}

/// The indicator with value 1 at the ψ-th vertex and ∞ elsewhere.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoExtremalIndicator {
    pub psi: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AffinityVerdict {
    Affine,
    Counterexample {
        a: Vec<Rational>,
        b: Vec<Rational>,
        midpoint: Vec<Rational>,
        /// (p(a), p(b), p(midpoint)); the violation is
        /// p(midpoint) ≠ (p(a) + p(b))/2.
        values: (Rational, Rational, Rational),
    },
}

fn check_index(k: &Polytope, psi: usize) -> Result<(), ExtremalError> {
    if psi >= k.n_vertices() {
        return Err(ExtremalError::BadIndex {
            index: psi,
            n: k.n_vertices(),
        });
    }
    Ok(())
}

fn check_membership(k: &Polytope, x: &[Rational]) -> Result<(), ExtremalError> {
    if x.len() != k.dim() {
        return Err(ExtremalError::DimensionMismatch {
            got: x.len(),
            expected: k.dim(),
        });
    }
    match k.contains(x) {
        Ok(Some(_)) => Ok(()),
        _ => Err(ExtremalError::PointOutsideK(format_point(x))),
    }
}

/// The LP defining p_ψ(x): variables are the affine coefficients (a, c) of
/// h(y) = a·y + c; minimize h(x) subject to h(v) ≥ 0 at every vertex and
/// h(ψ) = 1.
fn p_value_program(k: &Polytope, psi: usize, x: &[Rational]) -> LinearProgram {
    let d = k.dim();
    let mut objective: Vec<Rational> = x.to_vec();
    objective.push(Rational::one());
    let mut lp = LinearProgram::minimize(d + 1, objective);
    for v in k.vertices() {
        let mut row: Vec<Rational> = v.clone();
        row.push(Rational::one());
        lp.constrain(row, Relation::Geq, Rational::zero());
    }
    let mut anchor: Vec<Rational> = k.vertex(psi).to_vec();
    anchor.push(Rational::one());
    lp.constrain(anchor, Relation::Eq, Rational::one());
    lp
}

/// p_ψ(x) as an exact LP optimum; always in [0, 1] for x ∈ K.
pub fn p_value(k: &Polytope, psi: usize, x: &[Rational]) -> Result<Rational, ExtremalError> {
    check_index(k, psi)?;
    check_membership(k, x)?;
    let lp = p_value_program(k, psi, x);
    match solve_lp(&lp).expect("well-formed program") {
        LpOutcome::Optimal { optimum, .. } => Ok(optimum),
        // h = 1 is feasible and h(x) ≥ 0 on K bounds the objective below.
        other => unreachable!("p-value program is feasible and bounded: {other:?}"),
    }
}

/// Evaluator for p_ψ; on a simplex the closed form is constructed from the
/// δ_ψ vertex values and its normalization M(p_ψ, 1) = 1 is checked.
pub fn p_affine(k: &Polytope, psi: usize) -> Result<ExtremalEvaluator, ExtremalError> {
    check_index(k, psi)?;
    let closed_form = if k.is_simplex() {
        let vals = VertexValues(
            (0..k.n_vertices())
                .map(|i| {
                    if i == psi {
                        Rational::one()
                    } else {
                        Rational::zero()
                    }
                })
                .collect(),
        );
        let f = affine_from_vertex_values(k, &vals).expect("simplex extension");
        let sup = f
            .vertex_values(k)
            .values()
            .iter()
            .cloned()
            .max()
            .expect("non-empty vertex list");
        debug_assert_eq!(sup, Rational::one(), "normalization M(p, 1) = 1");
        Some(f)
    } else {
        None
    };
    Ok(ExtremalEvaluator { psi, closed_form })
}

impl ExtremalEvaluator {
    /// p_ψ(x): the closed form when available, the LP value otherwise.
    pub fn value_at(&self, k: &Polytope, x: &[Rational]) -> Result<Rational, ExtremalError> {
        match &self.closed_form {
            Some(f) => {
                check_membership(k, x)?;
                Ok(f.evaluate(x))
            }
            None => p_value(k, self.psi, x),
        }
    }
}

/// Search for an exact midpoint-affinity violation of x ↦ p_ψ(x).
///
/// All vertex pairs are swept first in index order — on the unit square
/// with ψ at the origin this yields the canonical violation at the
/// midpoint of the two neighbors — followed by `trials` seeded random
/// pairs in K.
pub fn affinity_probe(
    k: &Polytope,
    psi: usize,
    trials: usize,
    seed: u64,
) -> Result<AffinityVerdict, ExtremalError> {
    check_index(k, psi)?;
    let mut candidates: Vec<(Vec<Rational>, Vec<Rational>)> = Vec::new();
    for i in 0..k.n_vertices() {
        for j in i + 1..k.n_vertices() {
            candidates.push((k.vertex(i).to_vec(), k.vertex(j).to_vec()));
        }
    }
    let mut sampler = Sampler::new(seed);
    for _ in 0..trials {
        candidates.push((sampler.point_in(k), sampler.point_in(k)));
    }

    let half = Rational::new(1.into(), 2.into());
    for (a, b) in candidates {
        let midpoint: Vec<Rational> = a
            .iter()
            .zip(&b)
            .map(|(ai, bi)| (ai.clone() + bi.clone()) * half.clone())
            .collect();
        let pa = p_value(k, psi, &a)?;
        let pb = p_value(k, psi, &b)?;
        let pm = p_value(k, psi, &midpoint)?;
        if pm != (pa.clone() + pb.clone()) * half.clone() {
            return Ok(AffinityVerdict::Counterexample {
                a,
                b,
                midpoint,
                values: (pa, pb, pm),
            });
        }
    }
    Ok(AffinityVerdict::Affine)
}

/// I_ψ^∞(ρ): 1 exactly at the ψ-th vertex, ∞ anywhere else in K.
pub fn indicator_value(
    k: &Polytope,
    indicator: &CoExtremalIndicator,
    rho: &[Rational],
) -> Result<ExtendedValue, ExtremalError> {
    check_index(k, indicator.psi)?;
    check_membership(k, rho)?;
    if rho == k.vertex(indicator.psi) {
        Ok(ExtendedValue::finite(Rational::one()))
    } else {
        Ok(ExtendedValue::Infinity)
    }
}

/// m(g, p_ψ) = g(ψ) on a simplex, cross-checked against the vertexwise
/// sup{λ : λ·p_ψ ≤ g} computed in extended arithmetic.
pub fn m_against_extremal(
    k: &Polytope,
    g: &AffineFunc,
    psi: usize,
) -> Result<Rational, ExtremalError> {
    check_index(k, psi)?;
    if !k.is_simplex() {
        return Err(ExtremalError::NotSimplex(k.name().to_string()));
    }
    let gv = positive_vertex_values(k, g)?;
    let p = p_affine(k, psi)?.closed_form.expect("simplex closed form");
    let pv = p.vertex_values(k);
    // sup over λ with λ·p(v) ≤ g(v) at every vertex: vacuous where p(v)=0,
    // so the binding ratio is g(ψ)/1.
    let sup = k
        .vertices()
        .iter()
        .enumerate()
        .filter(|(i, _)| !pv.values()[*i].is_zero())
        .map(|(i, _)| gv[i].clone() / pv.values()[i].clone())
        .min()
        .expect("p_psi is 1 at psi");
    debug_assert_eq!(sup, gv[psi]);
    Ok(gv[psi].clone())
}

/// The two sides of the atomicity/co-atomicity order equivalence:
/// left, whether m(g, p_ψ) ≤ m(g', p_ψ) (equivalently
/// M(g, I_ψ^∞) ≤ M(g', I_ψ^∞)) for every vertex ψ; right, whether g ≤ g'
/// on K. Strong atomicity says the two booleans always agree.
pub fn atomic_dominance_equiv(
    k: &Polytope,
    g: &AffineFunc,
    g2: &AffineFunc,
) -> Result<(bool, bool), ExtremalError> {
    if !k.is_simplex() {
        return Err(ExtremalError::NotSimplex(k.name().to_string()));
    }
    let mut gauge_side = true;
    for psi in 0..k.n_vertices() {
        let lhs = m_against_extremal(k, g, psi)?;
        let rhs = m_against_extremal(k, g2, psi)?;
        if lhs > rhs {
            gauge_side = false;
        }
    }
    let order_side = crate::gauges::dominates(k, g, g2);
    Ok((gauge_side, order_side))
}

fn positive_vertex_values(k: &Polytope, g: &AffineFunc) -> Result<Vec<Rational>, ExtremalError> {
    let vals: Vec<Rational> = k.vertices().iter().map(|v| g.evaluate(v)).collect();
    if let Some(vertex) = vals.iter().position(|v| !v.is_positive()) {
        return Err(GaugeError::NotPositive {
            which: "g".to_string(),
            vertex,
        }
        .into());
    }
    Ok(vals)
}
