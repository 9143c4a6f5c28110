//! Three close factorizations `N = AB = (A + a1)(B − b1) = (A + a2)(B − b2)`,
//! equivalently three lattice points on `xy = N` near `(√N, √N)`.
//!
//! - [`arith`]: integer roots, exact `a·√n` comparisons, Pell solutions
//! - [`lattice`]: divisors, lattice points, close triples, min-max statistics
//! - [`bounds`]: exact evaluators for the cubic and `N^{1/4}` bounds
//! - [`families`]: explicit constructions attaining or approaching the bounds
//! - [`verify`]: parallel range sweeps and report output
//! - [`cli`]: the `hyperfact` command

pub mod arith;
pub mod bounds;
pub mod cli;
pub mod error;
pub mod families;
pub mod lattice;
pub mod oracle;
pub mod verify;

pub use error::{Error, Result};
