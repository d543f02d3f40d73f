//! Exact symbolic kernel for multiple zeta values (MZVs).
//!
//! The crate works entirely over the rationals and is `no_std` (it needs
//! `alloc`). It provides
//!
//! - [`words`]: the free algebra on `{x, y}` with the harmonic (stuffle) and
//!   shuffle products,
//! - [`regularize`]: harmonic and shuffle regularization of words ending in
//!   `y`, regularized values as polynomials in `T`, and the correction map
//!   between the two flavors,
//! - [`symbols`]: the free vector space on admissible MZV symbols of a fixed
//!   weight, with product, depth and relation subspaces and exact membership
//!   certificates,
//! - [`groupring`]: integer group rings of unimodular matrices together with a
//!   catalog of identities,
//! - [`genfun`]: homogeneous polynomials, the right action of the group ring
//!   and generating functions of regularized values,
//! - [`numeric`]: a floating-point oracle that evaluates truncated nested sums.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod coeff;
pub mod genfun;
pub mod groupring;
mod linalg;
pub mod numeric;
pub mod regularize;
pub mod symbols;
pub mod words;

pub use coeff::{Coefficient, Q};
pub use regularize::{Flavor, MzvSymbol, ProductCombo, Regularizer, SymCombo, TPoly};
pub use symbols::{Modulus, Spaces, SubspaceBasis, SubspaceLabel, Verdict};
pub use words::{Composition, Letter, ProductMemo, Word, WordSum};
pub use genfun::{GenFun, HomogPoly};
pub use groupring::{GroupRingElem, IntMatrix};
pub use numeric::{NumericEvaluator, NumericValue};
