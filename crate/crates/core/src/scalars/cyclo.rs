use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{rat, RootData};

/// An element of `Q(zeta)`, stored by its coefficients in the power basis
/// `1, zeta, ..., zeta^(phi(N)-1)`. The representation is canonical, so
/// equality is structural.
#[derive(Clone)]
pub struct Cyclo {
    root: Arc<RootData>,
    coeffs: Vec<BigRational>,
}

impl PartialEq for Cyclo {
    fn eq(&self, other: &Self) -> bool {
        self.root.order() == other.root.order() && self.coeffs == other.coeffs
    }
}

impl Eq for Cyclo {}

impl Cyclo {
    pub fn zero(root: &Arc<RootData>) -> Self {
        Cyclo {
            root: root.clone(),
            coeffs: vec![BigRational::zero(); root.degree()],
        }
    }

    pub fn one(root: &Arc<RootData>) -> Self {
        Self::from_rational(root, BigRational::one())
    }

    pub fn from_int(root: &Arc<RootData>, n: i64) -> Self {
        Self::from_rational(root, rat(n))
    }

    pub fn from_rational(root: &Arc<RootData>, r: BigRational) -> Self {
        let mut z = Self::zero(root);
        z.coeffs[0] = r;
        z
    }

    /// Builds `sum_i coeffs[i] zeta^i` for an arbitrary-length coefficient list.
    pub fn from_coeffs(root: &Arc<RootData>, coeffs: &[BigRational]) -> Self {
        let mut acc = Self::zero(root);
        for (i, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc += &Self::zeta_power(root, i as i64).scale(c);
            }
        }
        acc
    }

    /// `zeta^m`; half-integer powers of `q` are `q^{m/2} = zeta^m`.
    pub fn zeta_power(root: &Arc<RootData>, m: i64) -> Self {
        Cyclo {
            root: root.clone(),
            coeffs: root.zeta_coeffs(m).to_vec(),
        }
    }

    pub fn root(&self) -> &Arc<RootData> {
        &self.root
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The rational value if the element lies in `Q`.
    pub fn as_rational(&self) -> Option<&BigRational> {
        self.coeffs[1..]
            .iter()
            .all(Zero::is_zero)
            .then(|| &self.coeffs[0])
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        Cyclo {
            root: self.root.clone(),
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    pub fn mul_zeta(&self, m: i64) -> Self {
        if m.rem_euclid(self.root.order() as i64) == 0 {
            return self.clone();
        }
        self * &Self::zeta_power(&self.root, m)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(&self.root);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Multiplicative inverse, by solving the multiplication-by-`self` system
    /// over `Q`.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let d = self.root.degree();
        // column j of M is self * zeta^j
        let mut m: Vec<Vec<BigRational>> = vec![vec![BigRational::zero(); d + 1]; d];
        for j in 0..d {
            let col = self.mul_zeta(j as i64);
            for (i, c) in col.coeffs.iter().enumerate() {
                m[i][j] = c.clone();
            }
        }
        m[0][d] = BigRational::one();
        let x = solve_rational(m)?;
        Some(Cyclo {
            root: self.root.clone(),
            coeffs: x,
        })
    }

    fn check(&self, other: &Self) {
        assert_eq!(
            self.root.order(),
            other.root.order(),
            "scalars from different cyclotomic fields"
        );
    }
}

/// Gauss-Jordan on an augmented square system over `Q`.
fn solve_rational(mut m: Vec<Vec<BigRational>>) -> Option<Vec<BigRational>> {
    let n = m.len();
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, piv);
        let p = m[col][col].clone();
        for v in m[col].iter_mut() {
            *v /= &p;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                let pivot_row = m[col].clone();
                for (v, pv) in m[r].iter_mut().zip(pivot_row.iter()) {
                    *v -= &f * pv;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[n].clone()).collect())
}

impl fmt::Debug for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            let a = c.abs();
            match i {
                0 => write!(f, "{}", a)?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{}*", a)?;
                    }
                    if i == 1 {
                        f.write_str("z")?;
                    } else {
                        write!(f, "z^{}", i)?;
                    }
                }
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl<'a> Add<&'a Cyclo> for &'a Cyclo {
    type Output = Cyclo;
    fn add(self, rhs: &'a Cyclo) -> Cyclo {
        self.check(rhs);
        Cyclo {
            root: self.root.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(rhs.coeffs.iter())
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl<'a> Sub<&'a Cyclo> for &'a Cyclo {
    type Output = Cyclo;
    fn sub(self, rhs: &'a Cyclo) -> Cyclo {
        self.check(rhs);
        Cyclo {
            root: self.root.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(rhs.coeffs.iter())
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl<'a> Mul<&'a Cyclo> for &'a Cyclo {
    type Output = Cyclo;
    fn mul(self, rhs: &'a Cyclo) -> Cyclo {
        self.check(rhs);
        let d = self.coeffs.len();
        let mut prod = vec![BigRational::zero(); 2 * d - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        self.root.reduce(&mut prod);
        Cyclo {
            root: self.root.clone(),
            coeffs: prod,
        }
    }
}

impl Neg for &Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        Cyclo {
            root: self.root.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Cyclo> for Cyclo {
            type Output = Cyclo;
            fn $m(self, rhs: Cyclo) -> Cyclo {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Cyclo> for Cyclo {
            type Output = Cyclo;
            fn $m(self, rhs: &'a Cyclo) -> Cyclo {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&Cyclo> for Cyclo {
    fn add_assign(&mut self, rhs: &Cyclo) {
        self.check(rhs);
        for (a, b) in self.coeffs.iter_mut().zip(rhs.coeffs.iter()) {
            *a += b;
        }
    }
}

impl SubAssign<&Cyclo> for Cyclo {
    fn sub_assign(&mut self, rhs: &Cyclo) {
        self.check(rhs);
        for (a, b) in self.coeffs.iter_mut().zip(rhs.coeffs.iter()) {
            *a -= b;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn root(n: u32) -> Arc<RootData> {
        RootData::new(n).unwrap()
    }

    #[test]
    fn zeta_power_examples() {
        let r = root(3);
        assert!(Cyclo::zeta_power(&r, 0).is_one());
        assert!(Cyclo::zeta_power(&r, 3).is_one());
        assert_eq!(Cyclo::zeta_power(&r, 1), Cyclo::zeta_power(&r, 4));
        // 1 + z + z^2 = 0
        let s = &(&Cyclo::one(&r) + &Cyclo::zeta_power(&r, 1)) + &Cyclo::zeta_power(&r, 2);
        assert!(s.is_zero());
    }

    #[test]
    fn q_is_zeta_squared_and_has_order_n() {
        for n in [3u32, 5, 7, 9] {
            let r = root(n);
            let q = Cyclo::zeta_power(&r, 2);
            assert_eq!(&Cyclo::zeta_power(&r, 1) * &Cyclo::zeta_power(&r, 1), q);
            assert!(q.pow(n).is_one());
            for k in 1..n {
                assert!(!q.pow(k).is_one());
            }
        }
    }

    #[test]
    fn inverse_of_one_plus_zeta() {
        let r = root(5);
        let x = &Cyclo::one(&r) + &Cyclo::zeta_power(&r, 1);
        let y = x.inv().unwrap();
        assert!((&x * &y).is_one());
        assert!(Cyclo::zero(&r).inv().is_none());
    }

    proptest! {
        #[test]
        fn zeta_power_periodic_and_invertible(m in -40i64..40, n in prop::sample::select(vec![3u32, 5, 7])) {
            let r = root(n);
            let a = Cyclo::zeta_power(&r, m);
            prop_assert!((&a * &Cyclo::zeta_power(&r, -m)).is_one());
            prop_assert_eq!(Cyclo::zeta_power(&r, m + n as i64), a);
        }

        #[test]
        fn field_axioms(a in prop::collection::vec(-5i64..5, 4), b in prop::collection::vec(-5i64..5, 4),
                        c in prop::collection::vec(-5i64..5, 4)) {
            let r = root(5);
            let mk = |v: &Vec<i64>| Cyclo::from_coeffs(&r, &v.iter().map(|&x| rat(x)).collect::<Vec<_>>());
            let (a, b, c) = (mk(&a), mk(&b), mk(&c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            if !a.is_zero() {
                prop_assert!((&a * &a.inv().unwrap()).is_one());
            }
        }
    }
}
