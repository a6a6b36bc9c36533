//! Exact Clifford-algebra tools for root systems: reflection closure, pinor
//! groups and spinor induction, the `E8` construction from `H3`, and Coxeter
//! versor factorisation with plane projections.

pub mod catalog;
pub mod cli;
pub mod clifford;
pub mod coxeter;
pub mod error;
pub mod induction;
pub mod roots;
pub mod scalars;
pub mod svg;

pub use clifford::{exp_bivector, Blade, Multivector, Parity, Versor};
pub use error::{Error, Result};
pub use roots::{Metric, RootSystem, Vector};
pub use scalars::{FloatScalar, QuadScalar, Scalar};
