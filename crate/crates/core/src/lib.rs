//! Exact quadratic-residue weight enumerators for projective and classical
//! Reed-Solomon codes over odd finite fields.
//!
//! Two independent routes are provided for everything that matters: closed
//! forms built from class numbers and Hecke traces, and brute-force
//! enumeration (codewords, binary quartics, Weierstrass models, eta
//! products). The crate is organized bottom-up:
//!
//! - [`finite_field`]: arithmetic in `F_{p^v}` and the quadratic character.
//! - [`quadratic_forms`]: Kronecker symbols and (Hurwitz) class numbers.
//! - [`isogeny_counts`]: weighted isogeny-class sizes `N_A(t)`, `N_{A,2x2}(t)`.
//! - [`curve_census`]: brute-force quartic and Weierstrass censuses.
//! - [`hecke_traces`]: Eichler-Selberg traces and moment formulas.
//! - [`eta_oracle`]: eta-product q-expansions and Hecke recursions.
//! - [`enumerators`]: weight-enumerator algebra and MacWilliams transforms.
//! - [`rs_codes`]: Reed-Solomon codes and brute-force enumerators.
//! - [`qr_pipeline`]: the closed-form enumerator of `C_{1,4}` and its dual.
//! - [`verify`]: check suites shared by the command-line tool.

pub mod curve_census;
pub mod enumerators;
mod error;
pub mod eta_oracle;
pub mod finite_field;
pub mod hecke_traces;
pub mod isogeny_counts;
pub mod qr_pipeline;
pub mod quadratic_forms;
pub mod rs_codes;
pub mod util;
pub mod verify;

pub use error::{Error, Result};
pub use finite_field::{Elem, FieldCtx};
pub use quadratic_forms::Rat;
