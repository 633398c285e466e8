//! Exact computation of `p_ξ(ν)`, the determinant of the generalized Kostant
//! P-matrix, for genuine principal series of split simple Lie group covers
//! admitting a small K type.
//!
//! The crate is organised bottom-up:
//!
//! * [`root_system`]: Bourbaki root data, Weyl group action, chamber tests.
//! * [`rep_theory`]: Weyl dimensions, Freudenthal multiplicities, Klimyk
//!   tensor products, Gelfand–Tsetlin branching and Pin restrictions.
//! * [`small_k`]: the table of genuine small K types with their torus data.
//! * [`rank_one`]: the rank-one projection polynomials and p-factors.
//! * [`pxi`]: assembly of `p_ξ` as a factored polynomial over positive roots.
//! * [`analysis`]: cyclicity, unitary irreducibility, Langlands data and
//!   intertwining determinants.
//! * [`oracle`]: brute-force checks at rank one with the explicit order-8
//!   group inside SU(2).
//! * [`cli`]: the command-line front end used by the `pxi` binary.
//!
//! All structural arithmetic is exact (`Ratio<i64>` for weights and roots,
//! arbitrary precision where products grow). Floating point only appears in
//! [`analysis::numeric_gamma_eval`].

pub mod analysis;
pub mod cli;
pub mod error;
pub mod gamma;
pub mod linalg;
pub mod oracle;
pub mod poly;
pub mod pxi;
pub mod rank_one;
pub mod rational;
pub mod rep_theory;
pub mod root_system;
pub mod small_k;

pub use error::{Error, Result};
pub use rational::{BigQ, Q};
