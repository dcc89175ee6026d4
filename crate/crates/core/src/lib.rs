//! Exact algebra for quantum tori and `O_q(SL_2)` at odd-order roots of unity.
//!
//! Everything here is `no_std` + `alloc` and works over the cyclotomic field
//! `Q(zeta)` with `zeta` a primitive `N`-th root of unity, `N` odd, and
//! `q = zeta^2`. No floating point is used anywhere.
//!
//! * [`scalars`]: `Q(zeta)`, Chebyshev polynomials, Laurent polynomials and
//!   fractions over `Q(zeta)`.
//! * [`qtorus`]: quantum tori over an antisymmetric integer form, the
//!   Frobenius embedding, and the two trace projections with their oracles.
//! * [`surface`]: combinatorial invariants of punctured bordered surfaces.
//! * [`oqsl2`]: PBW normal forms for `O_q(SL_2)`, its localized torus
//!   picture, and specializations at points of `SL_2`.
//! * [`trace_engine`]: finite-dimensional algebras, normalized traces, Gram
//!   matrices and tensor products.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod error;
pub mod oqsl2;
pub mod qtorus;
pub mod scalars;
pub mod surface;
pub mod trace_engine;

pub use error::{Error, Result};
