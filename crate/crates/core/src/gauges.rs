//! Gauges m and M, the Thompson metric, and extended [0,∞] arithmetic.
//!
//! For strictly positive affine f, g on a polytope the gauges reduce to
//! vertex data: `M(f,g) = inf{μ : f ≤ μg}` is the maximum of the vertex
//! ratios `f(v)/g(v)` and `m(f,g) = sup{λ : λg ≤ f}` the minimum, with
//! `m(f,g) = 1/M(g,f)` holding exactly. The Thompson distance is kept in
//! its multiplicative form `T(f,g) = max(M(f,g), M(g,f))` so the whole
//! metric theory stays inside exact rationals; take logs only for display.

use std::cmp::Ordering;
use std::ops::{Add, Mul};

use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::affine::AffineFunc;
use crate::polytope::Polytope;
use crate::rational::{format_rational, Rational};

/// An element of [0,∞] under the convention 0·∞ = 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExtendedValue {
    Finite(Rational),
    Infinity,
}

impl ExtendedValue {
    pub fn finite(r: Rational) -> Self {
        assert!(!r.is_negative(), "extended values live in [0,∞]");
        ExtendedValue::Finite(r)
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ExtendedValue::Infinity)
    }

    pub fn to_string_canonical(&self) -> String {
        match self {
            ExtendedValue::Finite(r) => format_rational(r),
            ExtendedValue::Infinity => "inf".to_string(),
        }
    }
}

impl Add for ExtendedValue {
    type Output = ExtendedValue;
    fn add(self, rhs: ExtendedValue) -> ExtendedValue {
        match (self, rhs) {
            (ExtendedValue::Finite(a), ExtendedValue::Finite(b)) => ExtendedValue::finite(a + b),
            _ => ExtendedValue::Infinity,
        }
    }
}

impl Mul for ExtendedValue {
    type Output = ExtendedValue;
    fn mul(self, rhs: ExtendedValue) -> ExtendedValue {
        match (self, rhs) {
            (ExtendedValue::Finite(a), ExtendedValue::Finite(b)) => ExtendedValue::finite(a * b),
            (ExtendedValue::Finite(a), ExtendedValue::Infinity)
            | (ExtendedValue::Infinity, ExtendedValue::Finite(a)) => {
                if a.is_zero() {
                    ExtendedValue::finite(Rational::zero())
                } else {
                    ExtendedValue::Infinity
                }
            }
            (ExtendedValue::Infinity, ExtendedValue::Infinity) => ExtendedValue::Infinity,
        }
    }
}

impl PartialOrd for ExtendedValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtendedValue {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ExtendedValue::Finite(a), ExtendedValue::Finite(b)) => a.cmp(b),
            (ExtendedValue::Finite(_), ExtendedValue::Infinity) => Ordering::Less,
            (ExtendedValue::Infinity, ExtendedValue::Finite(_)) => Ordering::Greater,
            (ExtendedValue::Infinity, ExtendedValue::Infinity) => Ordering::Equal,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GaugeError {
    #[error("function `{which}` is not strictly positive at vertex {vertex}")]
    NotPositive { which: String, vertex: usize },
    #[error("vertex index {index} out of range (polytope has {n} vertices)")]
    BadIndex { index: usize, n: usize },
}

/// A gauge value together with the vertex attaining it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaugeValue {
    pub value: Rational,
    pub attained_at: usize,
}

/// Both directed M-gauges for a positive pair; the m-gauges follow by
/// reciprocity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaugePair {
    pub m_upper_fg: GaugeValue,
    pub m_upper_gf: GaugeValue,
}

impl GaugePair {
    /// m(f,g) = 1/M(g,f).
    pub fn m_lower_fg(&self) -> Rational {
        self.m_upper_gf.value.clone().recip()
    }

    /// m(g,f) = 1/M(f,g).
    pub fn m_lower_gf(&self) -> Rational {
        self.m_upper_fg.value.clone().recip()
    }

    /// Multiplicative Thompson distance T = max(M(f,g), M(g,f)) ≥ 1.
    pub fn thompson(&self) -> Rational {
        self.m_upper_fg.value.clone().max(self.m_upper_gf.value.clone())
    }
}

/// Membership in A_c(K): strictly positive at every vertex, equivalently
/// strictly positive on all of K.
pub fn is_in_ac(k: &Polytope, f: &AffineFunc) -> bool {
    k.vertices().iter().all(|v| f.evaluate(v).is_positive())
}

fn require_positive(k: &Polytope, f: &AffineFunc, which: &str) -> Result<Vec<Rational>, GaugeError> {
    let vals: Vec<Rational> = k.vertices().iter().map(|v| f.evaluate(v)).collect();
    if let Some(vertex) = vals.iter().position(|v| !v.is_positive()) {
        return Err(GaugeError::NotPositive {
            which: which.to_string(),
            vertex,
        });
    }
    Ok(vals)
}

fn max_ratio(fv: &[Rational], gv: &[Rational]) -> GaugeValue {
    let mut best: Option<(Rational, usize)> = None;
    for (i, (f, g)) in fv.iter().zip(gv).enumerate() {
        let ratio = f.clone() / g.clone();
        match &best {
            Some((b, _)) if *b >= ratio => {}
            _ => best = Some((ratio, i)),
        }
    }
    let (value, attained_at) = best.expect("non-empty vertex list");
    GaugeValue { value, attained_at }
}

/// M(f,g) = inf{μ > 0 : f ≤ μg} = max over vertices of f(v)/g(v).
pub fn gauge_upper(k: &Polytope, f: &AffineFunc, g: &AffineFunc) -> Result<GaugeValue, GaugeError> {
    let fv = require_positive(k, f, "f")?;
    let gv = require_positive(k, g, "g")?;
    Ok(max_ratio(&fv, &gv))
}

/// m(f,g) = sup{λ > 0 : λg ≤ f} = min over vertices of f(v)/g(v).
pub fn gauge_lower(k: &Polytope, f: &AffineFunc, g: &AffineFunc) -> Result<GaugeValue, GaugeError> {
    let upper = gauge_upper(k, g, f)?;
    Ok(GaugeValue {
        value: upper.value.recip(),
        attained_at: upper.attained_at,
    })
}

pub fn gauge_pair(k: &Polytope, f: &AffineFunc, g: &AffineFunc) -> Result<GaugePair, GaugeError> {
    Ok(GaugePair {
        m_upper_fg: gauge_upper(k, f, g)?,
        m_upper_gf: gauge_upper(k, g, f)?,
    })
}

/// Multiplicative Thompson distance; 1 exactly when f = g on K.
pub fn thompson_factor(
    k: &Polytope,
    f: &AffineFunc,
    g: &AffineFunc,
) -> Result<Rational, GaugeError> {
    Ok(gauge_pair(k, f, g)?.thompson())
}

/// f ≤ g on all of K, decided at the vertices.
pub fn dominates(k: &Polytope, f: &AffineFunc, g: &AffineFunc) -> bool {
    k.vertices().iter().all(|v| f.evaluate(v) <= g.evaluate(v))
}

/// Extended gauge of positive g against the co-extremal indicator at ψ:
/// `M(g, I_ψ^∞) = g(ψ)`. The indicator is ∞ off ψ, so the only binding
/// constraint in `inf{μ : g ≤ μ·I}` sits at ψ itself.
pub fn ext_gauge_indicator_upper(
    k: &Polytope,
    g: &AffineFunc,
    psi: usize,
) -> Result<Rational, GaugeError> {
    if psi >= k.n_vertices() {
        return Err(GaugeError::BadIndex {
            index: psi,
            n: k.n_vertices(),
        });
    }
    let gv = require_positive(k, g, "g")?;
    Ok(gv[psi].clone())
}
