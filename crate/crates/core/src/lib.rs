//! Exact gauge geometry of positive affine functions on compact convex
//! polytopes: gauges and the Thompson metric, extremal and co-extremal
//! vectors, and gauge-preserving/-reversing bijections induced by vertex
//! bijections, plus a floating-point spin-factor probe over the Euclidean
//! ball.

pub mod affine;
pub mod extremal;
pub mod gauges;
pub mod linalg;
pub mod lp;
pub mod polytope;
pub mod rational;
pub mod sample;

pub use rational::{format_rational, parse_rational, rat, Rational};
