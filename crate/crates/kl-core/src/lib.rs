//! Exact Kazhdan-Lusztig combinatorics for extended affine Weyl groups of
//! type A.
//!
//! The crate provides:
//!
//! * [`weyl`]: the group `W = W0 x X` in affine-permutation window
//!   notation, with length, descents, Bruhat order and word input;
//! * [`laurent`]: exact integer Laurent polynomials in `v = q^{1/2}`;
//! * [`hecke`]: sparse Hecke algebra arithmetic in the T-basis;
//! * [`kl`]: the Kazhdan-Lusztig engines (generic, cell-restricted, and an
//!   independent R-polynomial oracle) with a shared concurrent memo table;
//! * [`cells`]: the lowest two-sided cell, its factorization, distinguished
//!   involutions, and the mu decomposition through tensor multiplicities;
//! * [`tensor`]: exact `SL_{n+1}` tensor and weight multiplicities;
//! * [`cache`]: JSON-lines persistence for the memo table.

pub mod cache;
pub mod cells;
pub mod error;
pub mod hecke;
pub mod kl;
pub mod laurent;
pub mod tensor;
pub mod weyl;

pub use cells::{gamma0_contains, C0Factorization, CellQuery};
pub use error::{KlError, Result};
pub use hecke::{t_mul, HeckeElem};
pub use kl::{KlEngine, Limits, TableStats};
pub use laurent::{LaurentPoly, QPoly};
pub use tensor::{char_oracle, tensor_mult, weight_multiplicity, weyl_dim, DominantWeight};
pub use weyl::{length_im, ExtAffElem, RootDatum, Side, Weight, WordExpr};
