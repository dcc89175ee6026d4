//! `O_q(SL_2)` through PBW normal forms: the Frobenius powers, the
//! embedding into the `(d, b, c)` quantum torus once `d` is inverted, and
//! specializations at points of `SL_2`.

mod element;
mod frobenius;
mod localize;
mod specialize;

pub use element::{normal_form, Gen, OqElement, Pbw};
pub use frobenius::{
    center_generator, center_generator_check, frobenius_generators, verify_frobenius_hom,
    CenterGeneratorCheck, FrobeniusGenerators, FrobeniusHomCheck,
};
pub use localize::{
    dbc_center_lattice, dbc_torus, eliminate_a, eliminate_a_in, trace_over_center_fraction,
    trace_over_frobenius_fraction,
};
pub use specialize::{
    specialize, specialize_generic, specialize_with, tensor_specializations, SlPoint,
    Specialization, SpecializationBasis,
};
