use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::{Error, Result};

/// The odd order `N` of `zeta = q^{1/2}` together with the `N`-th cyclotomic
/// polynomial, which is the minimal polynomial of `zeta` over `Q`.
#[derive(Debug)]
pub struct RootData {
    order: u32,
    /// Monic, lowest degree first.
    cyclotomic: Vec<BigInt>,
    /// `zeta^r` reduced, for `0 <= r < N`.
    powers: Vec<Vec<BigRational>>,
}

impl PartialEq for RootData {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order
    }
}

impl Eq for RootData {}

impl RootData {
    pub fn new(order: u32) -> Result<Arc<Self>> {
        if order < 3 || order % 2 == 0 {
            return Err(Error::InvalidOrder(order));
        }
        let cyclotomic = cyclotomic_polynomial(order as usize);
        let degree = cyclotomic.len() - 1;
        let mut powers = Vec::with_capacity(order as usize);
        for r in 0..order as usize {
            let mut v = vec![BigRational::zero(); r.max(degree - 1) + 1];
            v[r] = BigRational::one();
            reduce_in_place(&mut v, &cyclotomic);
            v.truncate(degree);
            v.resize(degree, BigRational::zero());
            powers.push(v);
        }
        Ok(Arc::new(RootData {
            order,
            cyclotomic,
            powers,
        }))
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// `phi(N)`, the degree of `Q(zeta)` over `Q`.
    pub fn degree(&self) -> usize {
        self.cyclotomic.len() - 1
    }

    pub fn minimal_polynomial(&self) -> &[BigInt] {
        &self.cyclotomic
    }

    pub(crate) fn zeta_coeffs(&self, m: i64) -> &[BigRational] {
        let r = m.rem_euclid(self.order as i64) as usize;
        &self.powers[r]
    }

    pub(crate) fn reduce(&self, v: &mut Vec<BigRational>) {
        reduce_in_place(v, &self.cyclotomic);
        let d = self.degree();
        v.truncate(d);
        v.resize(d, BigRational::zero());
    }
}

/// Reduces `v` modulo the monic polynomial `m` (both lowest degree first).
fn reduce_in_place(v: &mut [BigRational], m: &[BigInt]) {
    let d = m.len() - 1;
    for top in (d..v.len()).rev() {
        if v[top].is_zero() {
            continue;
        }
        let c = core::mem::take(&mut v[top]);
        for (i, mi) in m.iter().enumerate().take(d) {
            if mi.is_one() {
                v[top - d + i] -= &c;
            } else if (-mi).is_one() {
                v[top - d + i] += &c;
            } else if !mi.is_zero() {
                v[top - d + i] -= &c * BigRational::from_integer(mi.clone());
            }
        }
    }
}

/// `Phi_n` as `(x^n - 1) / prod_{d | n, d < n} Phi_d`.
pub(crate) fn cyclotomic_polynomial(n: usize) -> Vec<BigInt> {
    let mut num = vec![BigInt::zero(); n + 1];
    num[0] = BigInt::from(-1);
    num[n] = BigInt::one();
    for d in 1..n {
        if n % d == 0 {
            num = exact_div(&num, &cyclotomic_polynomial(d));
        }
    }
    num
}

fn exact_div(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem: Vec<BigInt> = num.to_vec();
    let dd = den.len() - 1;
    let nd = num.len() - 1;
    let mut quot = vec![BigInt::zero(); nd - dd + 1];
    for i in (0..=nd - dd).rev() {
        // den is monic
        let c = rem[i + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (j, dj) in den.iter().enumerate() {
            rem[i + j] -= &c * dj;
        }
        quot[i] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    quot
}
