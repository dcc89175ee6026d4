//! Exact coefficient arithmetic.

mod chebpoly;
mod chebyshev;
mod cyclo;
mod field;
mod fraction;
mod laurent;
mod root;

pub use chebpoly::ChebPoly;
pub use chebyshev::{
    chebyshev_collapse, chebyshev_expand, chebyshev_product, chebyshev_t, chebyshev_trace_filter,
    UniPoly,
};
pub use cyclo::Cyclo;
pub use field::Field;
pub use fraction::CommutativeFraction;
pub use laurent::LaurentPoly;
pub use root::RootData;

use num_bigint::BigInt;
use num_rational::BigRational;

pub(crate) fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}
