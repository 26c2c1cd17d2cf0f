//! Exact computations with Yetter-Drinfeld Hopf algebras over finite abelian
//! groups, with coefficients in `K = Q(ξ₈)`.

// structure-constant loops index several tensors at once
#![allow(clippy::needless_range_loop)]

pub mod abelian;
pub mod cli;
pub mod cyclofield;
pub mod error;
pub mod examples;
pub mod grouplike;
pub mod linalg;
pub mod rmat;
pub mod ydcore;

pub use cyclofield::{Scalar, ZetaKind};
pub use error::{Error, Result};
