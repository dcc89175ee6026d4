use core::fmt::Debug;

use super::{rat, CommutativeFraction, Cyclo, LaurentPoly};

/// The exact fields the linear-algebra layer runs over.
pub trait Field: Clone + PartialEq + Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Option<Self>;
    fn from_int_like(&self, n: i64) -> Self;

    fn div(&self, other: &Self) -> Option<Self> {
        Some(self.mul(&other.inv()?))
    }

    /// Whether two values live in the same field.
    fn same_field(&self, _other: &Self) -> bool {
        true
    }
}

impl Field for Cyclo {
    fn zero_like(&self) -> Self {
        Cyclo::zero(self.root())
    }
    fn one_like(&self) -> Self {
        Cyclo::one(self.root())
    }
    fn is_zero(&self) -> bool {
        Cyclo::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        Cyclo::inv(self)
    }
    fn from_int_like(&self, n: i64) -> Self {
        Cyclo::from_rational(self.root(), rat(n))
    }
    fn same_field(&self, other: &Self) -> bool {
        self.root().order() == other.root().order()
    }
}

impl Field for CommutativeFraction {
    fn zero_like(&self) -> Self {
        CommutativeFraction::zero_like(self)
    }
    fn one_like(&self) -> Self {
        CommutativeFraction::one_like(self)
    }
    fn is_zero(&self) -> bool {
        CommutativeFraction::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        CommutativeFraction::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        CommutativeFraction::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        CommutativeFraction::mul(self, other)
    }
    fn neg(&self) -> Self {
        CommutativeFraction::neg(self)
    }
    fn inv(&self) -> Option<Self> {
        CommutativeFraction::inv(self)
    }
    fn from_int_like(&self, n: i64) -> Self {
        let r = self.numerator().root();
        CommutativeFraction::from_poly(LaurentPoly::constant(
            Cyclo::from_int(r, n),
            self.numerator().nvars(),
        ))
    }
}
