//! Quantum tori `x_a x_b = q^{P(a,b)} x_b x_a` over `Q(zeta)[alpha_p]`, with
//! the Frobenius embedding and the trace projections onto the `N`-th power
//! subalgebra and onto a central lattice span.

mod division;
mod element;
mod form;
mod lattice;
mod trace;

pub use division::{division_witness, InverseWitness};
pub use element::{Torus, TorusElement};
pub use form::SkewForm;
pub use lattice::{central_lattice, diagonalize, Lattice};
pub use trace::{
    brute_force_trace, frobenius_lift, gram_certificate, residue_decompose, trace_over_center,
    trace_over_frobenius, BasisMonomial, GramCertificate, ModuleBasis, ResidueKey, Subring,
};

/// An exponent vector `k` for the ordered monomial `x_1^{k_1} ... x_n^{k_n}`.
pub type Exponent = alloc::vec::Vec<i64>;
