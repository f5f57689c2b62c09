//! Dimensions of spaces of generalized theta functions via the Verlinde
//! formula (types A_n and G2), exact closed forms in Q(√5), and the
//! split-octonion algebra with its trilinear form.

pub mod error;
pub mod linalg;
pub mod numfield;
pub mod octonion;
pub mod rootsystem;
pub mod trilinear;
pub mod verlinde;

pub use error::{Error, Result};
