use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::scalars::{Cyclo, RootData};

/// The four generators of `O_q(SL_2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Gen {
    A,
    B,
    C,
    D,
}

impl Gen {
    pub const ALL: [Gen; 4] = [Gen::A, Gen::B, Gen::C, Gen::D];

    pub fn letter(self) -> char {
        match self {
            Gen::A => 'a',
            Gen::B => 'b',
            Gen::C => 'c',
            Gen::D => 'd',
        }
    }

    pub fn from_letter(ch: char) -> Option<Gen> {
        match ch {
            'a' => Some(Gen::A),
            'b' => Some(Gen::B),
            'c' => Some(Gen::C),
            'd' => Some(Gen::D),
            _ => None,
        }
    }
}

/// A PBW monomial: `a^a b^b c^c` (when `d = 0`) or `b^b c^c d^d` (when `a = 0`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pbw {
    pub a: u32,
    pub b: u32,
    pub c: u32,
    pub d: u32,
}

impl Pbw {
    pub const ONE: Pbw = Pbw {
        a: 0,
        b: 0,
        c: 0,
        d: 0,
    };

    /// `None` if both `a` and `d` occur.
    pub fn new(a: u32, b: u32, c: u32, d: u32) -> Option<Pbw> {
        (a == 0 || d == 0).then_some(Pbw { a, b, c, d })
    }

    /// The word `a^a b^b c^c d^d` spelled out letter by letter.
    pub fn word(&self) -> Vec<Gen> {
        let mut w = Vec::new();
        for (g, e) in [(Gen::A, self.a), (Gen::B, self.b), (Gen::C, self.c), (Gen::D, self.d)] {
            w.extend(core::iter::repeat(g).take(e as usize));
        }
        w
    }
}

impl fmt::Display for Pbw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (g, e) in [(Gen::A, self.a), (Gen::B, self.b), (Gen::C, self.c), (Gen::D, self.d)] {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{}", g.letter())?;
            } else {
                write!(f, "{}^{}", g.letter(), e)?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// An element of `O_q(SL_2)` in PBW normal form.
#[derive(Clone)]
pub struct OqElement {
    root: Arc<RootData>,
    terms: BTreeMap<Pbw, Cyclo>,
}

impl PartialEq for OqElement {
    fn eq(&self, other: &Self) -> bool {
        self.root.order() == other.root.order() && self.terms == other.terms
    }
}

fn add_into(terms: &mut BTreeMap<Pbw, Cyclo>, m: Pbw, c: Cyclo) {
    if c.is_zero() {
        return;
    }
    match terms.get_mut(&m) {
        Some(v) => {
            *v += &c;
            if v.is_zero() {
                terms.remove(&m);
            }
        }
        None => {
            terms.insert(m, c);
        }
    }
}

/// `m * g` in normal form, accumulated into `out` with weight `coef`.
///
/// Phases are ζ-exponents (`q = zeta^2`): moving `d` left past `b` or `c`
/// costs `q^{-2}`, moving `a` left past `b` or `c` gains `q^2`, and the
/// adjacent pairs `ad`, `da` are resolved by `ad = 1 + q^{-2} bc`,
/// `da = 1 + q^2 bc`.
fn push_mul_gen(out: &mut BTreeMap<Pbw, Cyclo>, m: Pbw, coef: &Cyclo, g: Gen) {
    let z = |e: i64| coef.mul_zeta(e);
    let Pbw { a, b, c, d } = m;
    match g {
        Gen::B if d == 0 => add_into(out, Pbw { b: b + 1, ..m }, coef.clone()),
        Gen::B => add_into(out, Pbw { b: b + 1, ..m }, z(4 * d as i64)),
        Gen::C if d == 0 => add_into(out, Pbw { c: c + 1, ..m }, coef.clone()),
        Gen::C => add_into(out, Pbw { c: c + 1, ..m }, z(4 * d as i64)),
        Gen::D if a == 0 => add_into(out, Pbw { d: d + 1, ..m }, coef.clone()),
        Gen::D => {
            let base = -4 * (b + c) as i64;
            add_into(out, Pbw { a: a - 1, ..m }, z(base));
            add_into(
                out,
                Pbw {
                    a: a - 1,
                    b: b + 1,
                    c: c + 1,
                    d: 0,
                },
                z(base - 4),
            );
        }
        Gen::A if d == 0 => add_into(out, Pbw { a: a + 1, ..m }, z(4 * (b + c) as i64)),
        Gen::A => {
            add_into(out, Pbw { d: d - 1, ..m }, coef.clone());
            let e = 4 + 8 * (d as i64 - 1);
            add_into(
                out,
                Pbw {
                    a: 0,
                    b: b + 1,
                    c: c + 1,
                    d: d - 1,
                },
                z(e),
            );
        }
    }
}

impl OqElement {
    pub fn zero(root: &Arc<RootData>) -> Self {
        OqElement {
            root: root.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(root: &Arc<RootData>) -> Self {
        Self::monomial(root, Pbw::ONE)
    }

    pub fn scalar(c: Cyclo) -> Self {
        let mut out = Self::zero(c.root());
        add_into(&mut out.terms, Pbw::ONE, c);
        out
    }

    pub fn monomial(root: &Arc<RootData>, m: Pbw) -> Self {
        let mut out = Self::zero(root);
        out.terms.insert(m, Cyclo::one(root));
        out
    }

    pub fn generator(root: &Arc<RootData>, g: Gen) -> Self {
        Self::one(root).mul_gen(g)
    }

    pub fn root(&self) -> &Arc<RootData> {
        &self.root
    }

    pub fn terms(&self) -> &BTreeMap<Pbw, Cyclo> {
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

    pub fn add_term(&mut self, m: Pbw, c: Cyclo) {
        add_into(&mut self.terms, m, c);
    }

    pub fn scale(&self, c: &Cyclo) -> Self {
        let mut out = Self::zero(&self.root);
        for (m, v) in &self.terms {
            add_into(&mut out.terms, *m, v * c);
        }
        out
    }

    /// Right multiplication by one generator.
    pub fn mul_gen(&self, g: Gen) -> Self {
        let mut out = BTreeMap::new();
        for (m, c) in &self.terms {
            push_mul_gen(&mut out, *m, c, g);
        }
        OqElement {
            root: self.root.clone(),
            terms: out,
        }
    }

    /// Right multiplication by a word of generators.
    pub fn mul_word(&self, word: &[Gen]) -> Self {
        let mut acc = self.clone();
        for &g in word {
            acc = acc.mul_gen(g);
        }
        acc
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(&self.root);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// `self * other - other * self`.
    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }
}

/// Normal form of a word `g_1^{e_1} g_2^{e_2} ...`.
pub fn normal_form(root: &Arc<RootData>, word: &[(Gen, u32)]) -> OqElement {
    let mut acc = OqElement::one(root);
    for &(g, e) in word {
        for _ in 0..e {
            acc = acc.mul_gen(g);
        }
    }
    acc
}

impl<'a> Add<&'a OqElement> for &'a OqElement {
    type Output = OqElement;
    fn add(self, rhs: &'a OqElement) -> OqElement {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            add_into(&mut out.terms, *m, c.clone());
        }
        out
    }
}

impl Neg for &OqElement {
    type Output = OqElement;
    fn neg(self) -> OqElement {
        OqElement {
            root: self.root.clone(),
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl<'a> Sub<&'a OqElement> for &'a OqElement {
    type Output = OqElement;
    fn sub(self, rhs: &'a OqElement) -> OqElement {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a OqElement> for &'a OqElement {
    type Output = OqElement;
    fn mul(self, rhs: &'a OqElement) -> OqElement {
        assert_eq!(self.root.order(), rhs.root.order(), "field mismatch");
        let mut out = OqElement::zero(&self.root);
        for (m, c) in &rhs.terms {
            let part = self.mul_word(&m.word()).scale(c);
            for (k, v) in part.terms {
                add_into(&mut out.terms, k, v);
            }
        }
        out
    }
}

impl fmt::Debug for OqElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for OqElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({})*{}", c, m)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn w(root: &Arc<RootData>, s: &str) -> OqElement {
        let word: Vec<(Gen, u32)> = s.chars().map(|c| (Gen::from_letter(c).unwrap(), 1)).collect();
        normal_form(root, &word)
    }

    fn bc(root: &Arc<RootData>) -> OqElement {
        OqElement::monomial(root, Pbw::new(0, 1, 1, 0).unwrap())
    }

    #[test]
    fn defining_relations() {
        let root = RootData::new(5).unwrap();
        let one = OqElement::one(&root);
        let q = |e: i64| Cyclo::zeta_power(&root, 2 * e);
        assert_eq!(w(&root, "ad"), &one + &bc(&root).scale(&q(-2)));
        assert_eq!(w(&root, "da"), &one + &bc(&root).scale(&q(2)));
        assert_eq!(w(&root, "ba"), w(&root, "ab").scale(&q(2)));
        assert_eq!(w(&root, "ca"), w(&root, "ac").scale(&q(2)));
        assert_eq!(w(&root, "db"), w(&root, "bd").scale(&q(2)));
        assert_eq!(w(&root, "dc"), w(&root, "cd").scale(&q(2)));
        assert_eq!(w(&root, "bc"), w(&root, "cb"));
        assert_eq!(
            w(&root, "ba"),
            OqElement::monomial(&root, Pbw::new(1, 1, 0, 0).unwrap()).scale(&q(2))
        );
    }

    fn random_word(rng: &mut ChaCha8Rng, len: usize) -> Vec<Gen> {
        (0..len).map(|_| Gen::ALL[rng.gen_range(0..4)]).collect()
    }

    fn eval(root: &Arc<RootData>, word: &[Gen]) -> OqElement {
        OqElement::one(root).mul_word(word)
    }

    #[test]
    fn associativity() {
        let root = RootData::new(3).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(61);
        for _ in 0..100 {
            let x = eval(&root, &random_word(&mut rng, 3));
            let y = eval(&root, &random_word(&mut rng, 3));
            let z = eval(&root, &random_word(&mut rng, 3));
            assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        }
    }

    /// Rewrites one adjacent pair of `word` using a defining relation, in
    /// either direction, producing a linear combination of words.
    fn rewrite(root: &Arc<RootData>, word: &[Gen], pos: usize) -> Option<Vec<(Vec<Gen>, Cyclo)>> {
        use Gen::*;
        let q = |e: i64| Cyclo::zeta_power(root, 2 * e);
        let (x, y) = (word[pos], word[pos + 1]);
        let splice = |mid: Vec<Gen>| {
            let mut v = word[..pos].to_vec();
            v.extend(mid);
            v.extend_from_slice(&word[pos + 2..]);
            v
        };
        let swapped = splice(vec![y, x]);
        let out = match (x, y) {
            (B, A) | (C, A) | (D, B) | (D, C) => vec![(swapped, q(2))],
            (A, B) | (A, C) | (B, D) | (C, D) => vec![(swapped, q(-2))],
            (B, C) | (C, B) => vec![(swapped, Cyclo::one(root))],
            (A, D) => vec![(splice(vec![]), Cyclo::one(root)), (splice(vec![B, C]), q(-2))],
            (D, A) => vec![(splice(vec![]), Cyclo::one(root)), (splice(vec![B, C]), q(2))],
            _ => return None,
        };
        Some(out)
    }

    #[test]
    fn confluence_under_random_rewrites() {
        let root = RootData::new(3).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(62);
        let mut checked = 0;
        while checked < 200 {
            let len = rng.gen_range(2..=8);
            let word = random_word(&mut rng, len);
            let pos = rng.gen_range(0..len - 1);
            let Some(parts) = rewrite(&root, &word, pos) else { continue };
            let mut total = OqElement::zero(&root);
            for (v, c) in parts {
                total = &total + &eval(&root, &v).scale(&c);
            }
            assert_eq!(total, eval(&root, &word), "{:?} at {}", word, pos);
            checked += 1;
        }
    }

    #[test]
    fn display() {
        let root = RootData::new(3).unwrap();
        assert_eq!(alloc::format!("{}", Pbw::new(2, 1, 0, 0).unwrap()), "a^2*b");
        assert_eq!(alloc::format!("{}", Pbw::ONE), "1");
        assert!(Pbw::new(1, 0, 0, 1).is_none());
        assert_eq!(OqElement::generator(&root, Gen::D).terms().len(), 1);
    }
}
