//! Univariate Chebyshev machinery with `T_0 = 2`, `T_1 = x` and
//! `T_n = x T_{n-1} - T_{n-2}`, so that `T_n(l + 1/l) = l^n + l^{-n}`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::rat;

/// Dense univariate polynomial over `Q`, lowest degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct UniPoly {
    coeffs: Vec<BigRational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    pub fn x() -> Self {
        Self::from_ints(&[0, 1])
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::constant(BigRational::one());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// `self(g(x))` by Horner's rule.
    pub fn compose(&self, g: &UniPoly) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * g) + &Self::constant(c.clone());
        }
        acc
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }
}

/// All of `T_0, ..., T_n` in the power basis.
fn chebyshev_table(n: usize) -> Vec<UniPoly> {
    let mut table = vec![UniPoly::from_ints(&[2])];
    if n >= 1 {
        table.push(UniPoly::x());
    }
    for k in 2..=n {
        let next = &(&UniPoly::x() * &table[k - 1]) - &table[k - 2];
        table.push(next);
    }
    table
}

/// `T_n` in the power basis. Coefficients are integers.
pub fn chebyshev_t(n: usize) -> UniPoly {
    chebyshev_table(n).pop().unwrap()
}

/// Writes `f = sum_k c_k T_k`. Unique because `T_k` is monic of degree `k`
/// for `k >= 1` and `T_0 = 2`.
pub fn chebyshev_expand(f: &UniPoly) -> BTreeMap<usize, BigRational> {
    let mut out = BTreeMap::new();
    let Some(deg) = f.degree() else {
        return out;
    };
    let table = chebyshev_table(deg);
    let mut rest = f.clone();
    while let Some(d) = rest.degree() {
        let lead = rest.coeff(d);
        let c = if d == 0 { lead / rat(2) } else { lead };
        rest = &rest - &table[d].scale(&c);
        out.insert(d, c);
    }
    out
}

/// `sum_k c_k T_k` in the power basis.
pub fn chebyshev_collapse(expansion: &BTreeMap<usize, BigRational>) -> UniPoly {
    let Some(&top) = expansion.keys().next_back() else {
        return UniPoly::zero();
    };
    let table = chebyshev_table(top);
    expansion
        .iter()
        .fold(UniPoly::zero(), |acc, (&k, c)| &acc + &table[k].scale(c))
}

/// Product in the Chebyshev basis via `T_a T_b = T_{a+b} + T_{|a-b|}`
/// (valid for all `a, b >= 0` because `T_0 = 2`).
pub fn chebyshev_product(
    f: &BTreeMap<usize, BigRational>,
    g: &BTreeMap<usize, BigRational>,
) -> BTreeMap<usize, BigRational> {
    let mut out: BTreeMap<usize, BigRational> = BTreeMap::new();
    for (&a, ca) in f {
        for (&b, cb) in g {
            let c = ca * cb;
            *out.entry(a + b).or_insert_with(BigRational::zero) += &c;
            *out.entry(a.abs_diff(b)).or_insert_with(BigRational::zero) += &c;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// The module trace `Tr_{Q[T_N(x)]}(f)`, which keeps exactly the `T_k` with `N | k`.
pub fn chebyshev_trace_filter(f: &UniPoly, n: usize) -> UniPoly {
    let mut exp = chebyshev_expand(f);
    exp.retain(|k, _| k % n == 0);
    chebyshev_collapse(&exp)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn low_degree_polynomials() {
        assert_eq!(chebyshev_t(0), UniPoly::from_ints(&[2]));
        assert_eq!(chebyshev_t(1), UniPoly::from_ints(&[0, 1]));
        assert_eq!(chebyshev_t(2), UniPoly::from_ints(&[-2, 0, 1]));
        assert_eq!(chebyshev_t(3), UniPoly::from_ints(&[0, -3, 0, 1]));
    }

    #[test]
    fn t6_is_a_composite() {
        let t6 = chebyshev_t(6);
        assert_eq!(t6, chebyshev_t(2).compose(&chebyshev_t(3)));
        assert_eq!(t6, chebyshev_t(3).compose(&chebyshev_t(2)));
        assert_eq!(t6, UniPoly::from_ints(&[-2, 0, 9, 0, -6, 0, 1]));
    }

    #[test]
    fn composition_is_multiplicative_in_index() {
        for m in 0..=6 {
            for n in 0..=6 {
                let lhs = chebyshev_t(m).compose(&chebyshev_t(n));
                // T_0(anything) = 2 = T_0
                assert_eq!(lhs, chebyshev_t(m * n), "m={m} n={n}");
            }
        }
    }

    #[test]
    fn expansion_examples() {
        let x = chebyshev_expand(&UniPoly::x());
        assert_eq!(x.into_iter().collect::<Vec<_>>(), vec![(1, rat(1))]);
        let one = chebyshev_expand(&UniPoly::from_ints(&[1]));
        assert_eq!(
            one.into_iter().collect::<Vec<_>>(),
            vec![(0, BigRational::new(1.into(), 2.into()))]
        );
        let x2 = chebyshev_expand(&UniPoly::from_ints(&[0, 0, 1]));
        assert_eq!(x2.into_iter().collect::<Vec<_>>(), vec![(0, rat(1)), (2, rat(1))]);
    }

    #[test]
    fn trace_filter_examples() {
        assert_eq!(chebyshev_trace_filter(&chebyshev_t(3), 3), chebyshev_t(3));
        assert!(chebyshev_trace_filter(&chebyshev_t(2), 3).is_zero());
        // x^3 = T_3 + 3 T_1
        let x3 = UniPoly::from_ints(&[0, 0, 0, 1]);
        assert_eq!(chebyshev_trace_filter(&x3, 3), chebyshev_t(3));
    }

    /// `T_N(l + 1/l) = l^N + l^{-N}`, checked after multiplying through by `l^N`:
    /// `l^N T_N((l^2 + 1)/l)` has coefficients only at `l^0` and `l^{2N}`.
    #[test]
    fn laurent_identity() {
        for n in 0..=9usize {
            let t = chebyshev_t(n);
            let num = UniPoly::from_ints(&[1, 0, 1]); // l^2 + 1
            let mut acc = UniPoly::zero();
            for (k, c) in t.coeffs().iter().enumerate() {
                // c * (l^2+1)^k * l^(n-k)
                let mut term = num.pow(k).scale(c);
                let mut shifted = vec![BigRational::zero(); n - k];
                shifted.extend_from_slice(term.coeffs());
                term = UniPoly::new(shifted);
                acc = &acc + &term;
            }
            let mut expect = vec![BigRational::zero(); 2 * n + 1];
            expect[0] += rat(1);
            expect[2 * n] += rat(1);
            assert_eq!(acc, UniPoly::new(expect), "n={n}");
        }
    }

    fn arb_poly() -> impl Strategy<Value = UniPoly> {
        prop::collection::vec(-6i64..6, 0..8).prop_map(|v| UniPoly::from_ints(&v))
    }

    proptest! {
        #[test]
        fn expand_roundtrip(f in arb_poly()) {
            prop_assert_eq!(chebyshev_collapse(&chebyshev_expand(&f)), f);
        }

        #[test]
        fn expansion_is_multiplicative(f in arb_poly(), g in arb_poly()) {
            let lhs = chebyshev_expand(&(&f * &g));
            let rhs = chebyshev_product(&chebyshev_expand(&f), &chebyshev_expand(&g));
            prop_assert_eq!(lhs, rhs);
        }
    }
}
