use alloc::vec::Vec;
use core::fmt;

use super::{Cyclo, LaurentPoly};
use crate::{Error, Result};

/// A quotient of Laurent polynomials over `Q(zeta)`.
///
/// No GCD reduction is performed. After every operation the pair is scaled
/// by a monomial so that the denominator has componentwise minimal exponent
/// zero and leading coefficient one; equality is decided by
/// cross-multiplication.
#[derive(Clone)]
pub struct CommutativeFraction {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl CommutativeFraction {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        let mut f = CommutativeFraction { num, den };
        f.normalize();
        Ok(f)
    }

    pub fn from_poly(num: LaurentPoly) -> Self {
        let den = LaurentPoly::constant(Cyclo::one(num.root()), num.nvars());
        CommutativeFraction { num, den }
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn zero_like(&self) -> Self {
        Self::from_poly(LaurentPoly::zero(self.num.root(), self.num.nvars()))
    }

    pub fn one_like(&self) -> Self {
        Self::from_poly(LaurentPoly::constant(
            Cyclo::one(self.num.root()),
            self.num.nvars(),
        ))
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.den == o.den {
            return self.rebuilt(self.num.add(&o.num), self.den.clone());
        }
        let num = self.num.mul(&o.den).add(&o.num.mul(&self.den));
        self.rebuilt(num, self.den.mul(&o.den))
    }

    pub fn neg(&self) -> Self {
        CommutativeFraction {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        self.rebuilt(self.num.mul(&o.num), self.den.mul(&o.den))
    }

    pub fn inv(&self) -> Option<Self> {
        if self.num.is_zero() {
            return None;
        }
        Some(self.rebuilt(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, o: &Self) -> Option<Self> {
        Some(self.mul(&o.inv()?))
    }

    fn rebuilt(&self, num: LaurentPoly, den: LaurentPoly) -> Self {
        let mut f = CommutativeFraction { num, den };
        f.normalize();
        f
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.den = LaurentPoly::constant(Cyclo::one(self.num.root()), self.num.nvars());
            return;
        }
        let shift: Vec<i64> = self
            .den
            .min_exponent()
            .expect("nonzero denominator")
            .iter()
            .map(|e| -e)
            .collect();
        if shift.iter().any(|&s| s != 0) {
            self.num = self.num.shift(&shift);
            self.den = self.den.shift(&shift);
        }
        let (_, lead) = self.den.leading().expect("nonzero denominator");
        if !lead.is_one() {
            let inv = lead.inv().expect("nonzero leading coefficient");
            self.num = self.num.scale(&inv);
            self.den = self.den.scale(&inv);
        }
    }
}

impl PartialEq for CommutativeFraction {
    fn eq(&self, other: &Self) -> bool {
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }
}

impl fmt::Debug for CommutativeFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}) / ({:?})", self.num, self.den)
    }
}
