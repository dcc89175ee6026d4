use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use super::{Exponent, SkewForm};
use crate::scalars::{ChebPoly, Cyclo, RootData};

#[derive(Debug)]
struct TorusData {
    form: SkewForm,
    root: Arc<RootData>,
    punctures: usize,
}

/// A quantum torus: generators `x_1^{±1}, ..., x_n^{±1}` with
/// `x_a x_b = q^{P(a,b)} x_b x_a`, over the central coefficient ring
/// `Q(zeta)[alpha_1, ..., alpha_P]`.
///
/// Cheap to clone; elements hold a handle to their torus.
#[derive(Clone, Debug)]
pub struct Torus(Arc<TorusData>);

impl PartialEq for Torus {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.form == other.0.form
                && self.0.root.order() == other.0.root.order()
                && self.0.punctures == other.0.punctures)
    }
}

impl Torus {
    pub fn new(form: SkewForm, root: Arc<RootData>, punctures: usize) -> Self {
        Torus(Arc::new(TorusData {
            form,
            root,
            punctures,
        }))
    }

    /// The commutative (`q = 1`) torus of the given rank, used as the source
    /// of [`frobenius_lift`](super::frobenius_lift).
    pub fn classical(rank: usize, root: Arc<RootData>, punctures: usize) -> Self {
        Self::new(SkewForm::zero(rank), root, punctures)
    }

    pub fn form(&self) -> &SkewForm {
        &self.0.form
    }

    pub fn root(&self) -> &Arc<RootData> {
        &self.0.root
    }

    pub fn order(&self) -> u32 {
        self.0.root.order()
    }

    pub fn rank(&self) -> usize {
        self.0.form.rank()
    }

    pub fn punctures(&self) -> usize {
        self.0.punctures
    }

    pub fn zero(&self) -> TorusElement {
        TorusElement {
            torus: self.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(&self) -> TorusElement {
        self.monomial(vec![0; self.rank()])
    }

    pub fn scalar(&self, c: Cyclo) -> TorusElement {
        self.term(vec![0; self.rank()], ChebPoly::constant(self.punctures(), c))
    }

    /// The ordered monomial `x^k`.
    pub fn monomial(&self, k: Exponent) -> TorusElement {
        self.term(k, ChebPoly::one(self.root(), self.punctures()))
    }

    /// `coef * x^k` with a central coefficient.
    pub fn term(&self, k: Exponent, coef: ChebPoly) -> TorusElement {
        assert_eq!(k.len(), self.rank(), "exponent length");
        assert_eq!(coef.nvars(), self.punctures(), "puncture count");
        let mut terms = BTreeMap::new();
        if !coef.is_zero() {
            terms.insert(k, coef);
        }
        TorusElement {
            torus: self.clone(),
            terms,
        }
    }

    /// `x_i^e`.
    pub fn generator(&self, i: usize, e: i64) -> TorusElement {
        let mut k = vec![0; self.rank()];
        k[i] = e;
        self.monomial(k)
    }

    /// `T_m(alpha_p)`.
    pub fn cheb(&self, p: usize, m: u32) -> TorusElement {
        self.term(
            vec![0; self.rank()],
            ChebPoly::t(self.root(), self.punctures(), p, m),
        )
    }

    /// `alpha^a x^k = prod_p T_{a(p)}(alpha_p) x^k`.
    pub fn cheb_monomial(&self, a: Vec<u32>, k: Exponent) -> TorusElement {
        self.term(k, ChebPoly::term(a, Cyclo::one(self.root())))
    }

    /// Weyl-normalized monomial `[x^k] = zeta^{-sum_{j<l} P(j,l) k_j k_l} x^k`.
    pub fn weyl_monomial(&self, k: Exponent) -> TorusElement {
        let e = self.form().weyl_exponent(&k);
        self.monomial(k).scale(&Cyclo::zeta_power(self.root(), e))
    }

    /// `x^u x^v = zeta^phase x^{u+v}`.
    pub fn mul_monomial(&self, u: &[i64], v: &[i64]) -> (i64, Exponent) {
        let phase = self.form().product_phase(u, v);
        (phase, u.iter().zip(v).map(|(a, b)| a + b).collect())
    }
}

/// Finite sum of `c_k(alpha) x^k` in the ordered-monomial basis.
#[derive(Clone)]
pub struct TorusElement {
    torus: Torus,
    terms: BTreeMap<Exponent, ChebPoly>,
}

impl PartialEq for TorusElement {
    fn eq(&self, other: &Self) -> bool {
        self.torus == other.torus && self.terms == other.terms
    }
}

impl TorusElement {
    pub fn torus(&self) -> &Torus {
        &self.torus
    }

    pub fn terms(&self) -> &BTreeMap<Exponent, ChebPoly> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of `(alpha index, exponent)` pairs with a nonzero coefficient.
    pub fn support_size(&self) -> usize {
        self.terms.values().map(|c| c.terms().len()).sum()
    }

    pub fn add_term(&mut self, k: Exponent, coef: &ChebPoly) {
        if coef.is_zero() {
            return;
        }
        match self.terms.get_mut(&k) {
            Some(c) => {
                c.add_assign(coef);
                if c.is_zero() {
                    self.terms.remove(&k);
                }
            }
            None => {
                self.terms.insert(k, coef.clone());
            }
        }
    }

    pub fn scale(&self, c: &Cyclo) -> TorusElement {
        let mut out = self.torus.zero();
        for (k, v) in &self.terms {
            out.add_term(k.clone(), &v.scale(c));
        }
        out
    }

    /// Keeps the terms for which `keep(exponent, alpha index)` holds.
    pub fn filter(&self, mut keep: impl FnMut(&[i64], &[u32]) -> bool) -> TorusElement {
        let mut out = self.torus.zero();
        for (k, c) in &self.terms {
            out.add_term(k.clone(), &c.filter(|a| keep(k, a)));
        }
        out
    }

    pub fn pow(&self, e: u32) -> TorusElement {
        let mut acc = self.torus.one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// The single `(exponent, coefficient)` pair if this is a monomial.
    pub fn as_monomial(&self) -> Option<(&Exponent, &ChebPoly)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    fn check(&self, other: &TorusElement) {
        assert!(self.torus == other.torus, "elements of different tori");
    }
}

impl<'a> Add<&'a TorusElement> for &'a TorusElement {
    type Output = TorusElement;
    fn add(self, rhs: &'a TorusElement) -> TorusElement {
        self.check(rhs);
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(k.clone(), c);
        }
        out
    }
}

impl Neg for &TorusElement {
    type Output = TorusElement;
    fn neg(self) -> TorusElement {
        TorusElement {
            torus: self.torus.clone(),
            terms: self.terms.iter().map(|(k, c)| (k.clone(), c.neg())).collect(),
        }
    }
}

impl<'a> Sub<&'a TorusElement> for &'a TorusElement {
    type Output = TorusElement;
    fn sub(self, rhs: &'a TorusElement) -> TorusElement {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a TorusElement> for &'a TorusElement {
    type Output = TorusElement;
    fn mul(self, rhs: &'a TorusElement) -> TorusElement {
        self.check(rhs);
        let torus = &self.torus;
        let mut out = torus.zero();
        for (u, cu) in &self.terms {
            for (v, cv) in &rhs.terms {
                let (phase, k) = torus.mul_monomial(u, v);
                let c = cu.mul(cv).scale(&Cyclo::zeta_power(torus.root(), phase));
                out.add_term(k, &c);
            }
        }
        out
    }
}

impl fmt::Debug for TorusElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for TorusElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "[{}]*x^{:?}", c, k)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn form2(p: i64) -> SkewForm {
        SkewForm::unnamed(vec![vec![0, p], vec![-p, 0]]).unwrap()
    }

    fn random_form(rng: &mut ChaCha8Rng, n: usize) -> SkewForm {
        let mut e = vec![vec![0i64; n]; n];
        for i in 0..n {
            for j in i + 1..n {
                let v = rng.gen_range(-3..=3);
                e[i][j] = v;
                e[j][i] = -v;
            }
        }
        SkewForm::unnamed(e).unwrap()
    }

    fn random_exponent(rng: &mut ChaCha8Rng, n: usize) -> Exponent {
        (0..n).map(|_| rng.gen_range(-4..=4)).collect()
    }

    #[test]
    fn generator_relations() {
        let root = RootData::new(5).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for n in 1..=4 {
            let t = Torus::new(random_form(&mut rng, n), root.clone(), 0);
            for a in 0..n {
                for b in 0..n {
                    let lhs = &t.generator(a, 1) * &t.generator(b, 1);
                    let rhs = (&t.generator(b, 1) * &t.generator(a, 1))
                        .scale(&Cyclo::zeta_power(&root, 2 * t.form().get(a, b)));
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn ordered_product_matches_word_rewriting() {
        // x1 x2 x1 x2 with x2 x1 = q^{P(2,1)} x1 x2, P(1,2) = 1
        let root = RootData::new(3).unwrap();
        let t = Torus::new(form2(1), root.clone(), 0);
        let word = [0usize, 1, 0, 1];
        let mut acc = t.one();
        for &g in &word {
            acc = &acc * &t.generator(g, 1);
        }
        let expected = t.monomial(vec![2, 2]).scale(&Cyclo::zeta_power(&root, -2));
        assert_eq!(acc, expected);
        assert_eq!(t.mul_monomial(&[1, 1], &[1, 1]), (-2, vec![2, 2]));
        assert_eq!(t.mul_monomial(&[0, 1], &[1, 0]), (-2, vec![1, 1]));
    }

    #[test]
    fn associativity_and_unit() {
        let root = RootData::new(3).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for case in 0..120 {
            let n = 1 + case % 4;
            let t = Torus::new(random_form(&mut rng, n), root.clone(), 1);
            let mut el = || {
                let mut e = t.zero();
                for _ in 0..rng.gen_range(1..4) {
                    let k = random_exponent(&mut rng, n);
                    let m = rng.gen_range(0..5);
                    e = &e + &(&t.cheb(0, m) * &t.monomial(k));
                }
                e
            };
            let (a, b, c) = (el(), el(), el());
            assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            assert_eq!(&a * &t.one(), a);
            assert_eq!(&t.one() * &a, a);
        }
    }

    #[test]
    fn q_commutation_of_monomials() {
        let root = RootData::new(7).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..100 {
            let n = rng.gen_range(1..=4);
            let t = Torus::new(random_form(&mut rng, n), root.clone(), 0);
            let u = random_exponent(&mut rng, n);
            let v = random_exponent(&mut rng, n);
            let lhs = &t.monomial(u.clone()) * &t.monomial(v.clone());
            let rhs = (&t.monomial(v.clone()) * &t.monomial(u.clone()))
                .scale(&Cyclo::zeta_power(&root, 2 * t.form().pairing(&u, &v)));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn weyl_examples() {
        let root = RootData::new(3).unwrap();
        let t = Torus::new(form2(2), root.clone(), 0);
        assert_eq!(
            t.weyl_monomial(vec![1, 1]),
            t.monomial(vec![1, 1]).scale(&Cyclo::zeta_power(&root, -2))
        );
        assert_eq!(t.weyl_monomial(vec![1, 0]), t.generator(0, 1));
        // [x^e1][x^e2] = zeta^{P(1,2)} [x^{(1,1)}]
        let lhs = &t.weyl_monomial(vec![1, 0]) * &t.weyl_monomial(vec![0, 1]);
        let rhs = t.weyl_monomial(vec![1, 1]).scale(&Cyclo::zeta_power(&root, 2));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn weyl_product_rule() {
        let root = RootData::new(5).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..100 {
            let n = rng.gen_range(1..=4);
            let t = Torus::new(random_form(&mut rng, n), root.clone(), 0);
            let u = random_exponent(&mut rng, n);
            let v = random_exponent(&mut rng, n);
            let w: Exponent = u.iter().zip(&v).map(|(a, b)| a + b).collect();
            let lhs = &t.weyl_monomial(u.clone()) * &t.weyl_monomial(v.clone());
            let rhs = t
                .weyl_monomial(w)
                .scale(&Cyclo::zeta_power(&root, t.form().pairing(&u, &v)));
            assert_eq!(lhs, rhs);
        }
    }

    /// `[y_1 ... y_k] = q^{-1/2 sum_{j<l} C(y_j, y_l)} y_1 ... y_k` does not
    /// depend on the order of the factors.
    #[test]
    fn weyl_order_independence() {
        let root = RootData::new(5).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..60 {
            let n = rng.gen_range(2..=4);
            let t = Torus::new(random_form(&mut rng, n), root.clone(), 0);
            let mut letters: Vec<usize> = (0..rng.gen_range(2..7)).map(|_| rng.gen_range(0..n)).collect();
            let evaluate = |word: &[usize]| {
                let mut prod = t.one();
                let mut c = 0i64;
                for (j, &a) in word.iter().enumerate() {
                    prod = &prod * &t.generator(a, 1);
                    for &b in &word[j + 1..] {
                        c += t.form().get(a, b);
                    }
                }
                prod.scale(&Cyclo::zeta_power(&root, -c))
            };
            let base = evaluate(&letters);
            let mut k = vec![0i64; n];
            for &a in &letters {
                k[a] += 1;
            }
            assert_eq!(base, t.weyl_monomial(k));
            for _ in 0..5 {
                let i = rng.gen_range(0..letters.len());
                let j = rng.gen_range(0..letters.len());
                letters.swap(i, j);
                assert_eq!(evaluate(&letters), base);
            }
        }
    }
}
