//! Exact arithmetic over Q, Q(√5) and Q(i,√2), plus validated
//! arbitrary-precision floating evaluation with tracked error bounds.
//!
//! All values are immutable after construction and safe to share across
//! threads.

mod bounded;
mod gauss2;
mod quad5;
mod rational;

pub use bounded::BoundedFloat;
pub use gauss2::GaussSqrt2;
pub use quad5::QuadExt5;
pub use rational::Rational;
