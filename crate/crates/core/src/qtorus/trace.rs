use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;

use super::{Exponent, Lattice, Torus, TorusElement};
use crate::scalars::{ChebPoly, Cyclo};
use crate::{Error, Result};

/// The commutative subalgebra a trace lands in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Subring {
    /// The image of the Frobenius lift: `T_N(alpha_p)` and `x^{N k}`.
    FrobeniusImage,
    /// The span of `alpha^a x^k` for `k` in a central lattice.
    Center(Lattice),
}

impl Subring {
    /// Whether `alpha^a x^k` lies in the subring.
    pub fn contains(&self, n: u32, alpha: &[u32], k: &[i64]) -> bool {
        match self {
            Subring::FrobeniusImage => {
                alpha.iter().all(|a| a % n == 0) && k.iter().all(|x| x.mod_floor(&(n as i64)) == 0)
            }
            Subring::Center(l) => l.contains(k),
        }
    }
}

/// `alpha^a x^k` with `alpha^a = prod_p T_{a(p)}(alpha_p)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BasisMonomial {
    pub alpha: Vec<u32>,
    pub exponent: Exponent,
}

/// Residue class `(a mod N, k mod N)` labelling one free generator over the
/// Frobenius image.
pub type ResidueKey = BasisMonomial;

impl BasisMonomial {
    pub fn element(&self, torus: &Torus) -> TorusElement {
        torus.cheb_monomial(self.alpha.clone(), self.exponent.clone())
    }
}

/// Splits `T_m` as `sum c_{s,r} T_{N s} T_r` with `0 <= r < N`.
fn split_chebyshev(m: u32, n: u32) -> Vec<(u32, u32, BigRational)> {
    let half = BigRational::new(BigInt::from(1), BigInt::from(2));
    let mut pending: BTreeMap<u32, BigRational> = BTreeMap::new();
    pending.insert(m, BigRational::from_integer(BigInt::from(1)));
    let mut out = Vec::new();
    while let Some((top, c)) = pending.pop_last() {
        if c == BigRational::from_integer(BigInt::from(0)) {
            continue;
        }
        let (s, r) = (top / n, top % n);
        if s == 0 || r == 0 {
            out.push((s, r, &c * &half));
        } else {
            // T_{Ns} T_r = T_{Ns + r} + T_{Ns - r}
            out.push((s, r, c.clone()));
            let low = pending.entry(n * s - r).or_insert_with(|| BigRational::from_integer(BigInt::from(0)));
            *low -= c;
        }
    }
    out
}

/// Writes `t = sum coef(key) * alpha^{key.alpha} x^{key.exponent}` with
/// residues in `[0, N)` and every coefficient in the Frobenius image.
pub fn residue_decompose(t: &TorusElement) -> BTreeMap<ResidueKey, TorusElement> {
    let torus = t.torus();
    let n = torus.order();
    let nn = n as i64;
    let root = torus.root();
    let mut out: BTreeMap<ResidueKey, TorusElement> = BTreeMap::new();
    for (k, coef) in t.terms() {
        let r: Exponent = k.iter().map(|x| x.mod_floor(&nn)).collect();
        let lifted: Exponent = k.iter().zip(&r).map(|(a, b)| a - b).collect();
        let phase = torus.form().product_phase(&lifted, &r);
        let twist = Cyclo::zeta_power(root, -phase);
        for (a, c) in coef.terms() {
            // Per-variable splits, then their cartesian product.
            let mut combos: Vec<(Vec<u32>, Vec<u32>, BigRational)> =
                vec![(vec![], vec![], BigRational::from_integer(BigInt::from(1)))];
            for &m in a {
                let parts = split_chebyshev(m, n);
                let mut next = Vec::with_capacity(combos.len() * parts.len());
                for (hs, rs, cc) in &combos {
                    for (s, rr, pc) in &parts {
                        let mut hs = hs.clone();
                        hs.push(n * s);
                        let mut rs = rs.clone();
                        rs.push(*rr);
                        next.push((hs, rs, cc * pc));
                    }
                }
                combos = next;
            }
            for (high, low, cc) in combos {
                let scalar = c.scale(&cc) * &twist;
                let piece = torus.term(lifted.clone(), ChebPoly::term(high, scalar));
                let key = BasisMonomial {
                    alpha: low,
                    exponent: r.clone(),
                };
                let slot = out.entry(key).or_insert_with(|| torus.zero());
                *slot = &*slot + &piece;
            }
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// The Frobenius lift of a classical (commuting) element into `target`:
/// `x^k -> x^{N k}`, `T_a(alpha_p) -> T_{N a}(alpha_p)`.
pub fn frobenius_lift(cl: &TorusElement, target: &Torus) -> Result<TorusElement> {
    let src = cl.torus();
    if !src.form().is_zero() {
        return Err(Error::InvalidForm(format!(
            "Frobenius lift needs a commutative source torus"
        )));
    }
    if src.rank() != target.rank() {
        return Err(Error::IndexMismatch {
            expected: target.rank(),
            got: src.rank(),
        });
    }
    if src.punctures() != target.punctures() {
        return Err(Error::IndexMismatch {
            expected: target.punctures(),
            got: src.punctures(),
        });
    }
    if src.order() != target.order() {
        return Err(Error::FieldMismatch);
    }
    let n = target.order();
    let mut out = target.zero();
    for (k, c) in cl.terms() {
        let k2: Exponent = k.iter().map(|x| x * n as i64).collect();
        let c2 = c.map_indices(|a| a.iter().map(|x| x * n).collect());
        out.add_term(k2, &c2);
    }
    Ok(out)
}

/// The trace over the Frobenius image: keeps the terms `T_a(alpha) x^k`
/// with every `a(p)` and every `k_i` divisible by `N`.
pub fn trace_over_frobenius(t: &TorusElement) -> TorusElement {
    let n = t.torus().order();
    t.filter(|k, a| Subring::FrobeniusImage.contains(n, a, k))
}

/// The trace over the span of a central lattice: keeps the terms whose
/// exponent lies in `lattice`.
pub fn trace_over_center(t: &TorusElement, lattice: &Lattice) -> Result<TorusElement> {
    check_center(t.torus(), lattice)?;
    Ok(t.filter(|k, _| lattice.contains(k)))
}

fn check_center(torus: &Torus, lattice: &Lattice) -> Result<()> {
    if lattice.rank() != torus.rank() {
        return Err(Error::IndexMismatch {
            expected: torus.rank(),
            got: lattice.rank(),
        });
    }
    if !Lattice::scaled_standard(torus.rank(), torus.order()).is_sublattice_of(lattice) {
        return Err(Error::LatticeTooSmall);
    }
    if let Some(row) = lattice.non_central_row(torus.form(), torus.order()) {
        return Err(Error::LatticeNotCentral {
            generator: row.clone(),
        });
    }
    Ok(())
}

/// A free-module basis of the torus over a commutative subring.
#[derive(Clone, Debug)]
pub struct ModuleBasis {
    torus: Torus,
    subring: Subring,
    elements: Vec<BasisMonomial>,
    index: BTreeMap<BasisMonomial, usize>,
    /// Over a center span: canonical coset representative to basis index.
    classes: BTreeMap<Exponent, usize>,
}

impl ModuleBasis {
    /// `{alpha^a x^b : a in [0,N)^P, b in [0,N)^n}` over the Frobenius image.
    pub fn frobenius_residues(torus: &Torus) -> Self {
        let n = torus.order();
        let mut alphas: Vec<Vec<u32>> = vec![vec![]];
        for _ in 0..torus.punctures() {
            alphas = alphas
                .into_iter()
                .flat_map(|p| {
                    (0..n).map(move |r| {
                        let mut v = p.clone();
                        v.push(r);
                        v
                    })
                })
                .collect();
        }
        let exps = Lattice::scaled_standard(torus.rank(), n).transversal();
        let mut elements = Vec::with_capacity(alphas.len() * exps.len());
        for a in &alphas {
            for e in &exps {
                elements.push(BasisMonomial {
                    alpha: a.clone(),
                    exponent: e.clone(),
                });
            }
        }
        Self::build(torus.clone(), Subring::FrobeniusImage, elements)
    }

    /// `{x^r : r a coset representative of L}` over the span of `L`.
    pub fn center_transversal(torus: &Torus, lattice: &Lattice) -> Result<Self> {
        check_center(torus, lattice)?;
        let elements = lattice
            .transversal()
            .into_iter()
            .map(|e| BasisMonomial {
                alpha: vec![0; torus.punctures()],
                exponent: e,
            })
            .collect();
        Ok(Self::build(torus.clone(), Subring::Center(lattice.clone()), elements))
    }

    /// A caller-chosen list of monomials; decompositions fail with
    /// `BasisNotClosed` if they leave this list.
    pub fn with_elements(torus: &Torus, subring: Subring, elements: Vec<BasisMonomial>) -> Result<Self> {
        if let Subring::Center(l) = &subring {
            check_center(torus, l)?;
            if elements.iter().any(|e| e.alpha.iter().any(|&a| a != 0)) {
                return Err(Error::InvalidForm(format!(
                    "basis over a center span must be free of alpha factors"
                )));
            }
        }
        for e in &elements {
            if e.alpha.len() != torus.punctures() || e.exponent.len() != torus.rank() {
                return Err(Error::IndexMismatch {
                    expected: torus.rank(),
                    got: e.exponent.len(),
                });
            }
        }
        Ok(Self::build(torus.clone(), subring, elements))
    }

    fn build(torus: Torus, subring: Subring, elements: Vec<BasisMonomial>) -> Self {
        let index = elements.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
        let classes = match &subring {
            Subring::Center(l) => elements
                .iter()
                .enumerate()
                .map(|(i, e)| (l.reduce(&e.exponent), i))
                .collect(),
            Subring::FrobeniusImage => BTreeMap::new(),
        };
        ModuleBasis {
            torus,
            subring,
            elements,
            index,
            classes,
        }
    }

    pub fn torus(&self) -> &Torus {
        &self.torus
    }

    pub fn subring(&self) -> &Subring {
        &self.subring
    }

    pub fn elements(&self) -> &[BasisMonomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn element(&self, i: usize) -> TorusElement {
        self.elements[i].element(&self.torus)
    }

    /// The trace projection onto the subring.
    pub fn trace(&self, t: &TorusElement) -> TorusElement {
        match &self.subring {
            Subring::FrobeniusImage => trace_over_frobenius(t),
            Subring::Center(l) => t.filter(|k, _| l.contains(k)),
        }
    }

    /// Coefficients `c_i` in the subring with `t = sum_i c_i e_i`.
    pub fn decompose(&self, t: &TorusElement) -> Result<Vec<TorusElement>> {
        let mut out = vec![self.torus.zero(); self.len()];
        self.for_each_piece(t, |i, piece| {
            out[i] = &out[i] + &piece;
        })?;
        Ok(out)
    }

    /// The single coefficient `c_i` of [`ModuleBasis::decompose`].
    pub fn coefficient(&self, t: &TorusElement, i: usize) -> Result<TorusElement> {
        let mut out = self.torus.zero();
        self.for_each_piece(t, |j, piece| {
            if j == i {
                out = &out + &piece;
            }
        })?;
        Ok(out)
    }

    fn for_each_piece(&self, t: &TorusElement, mut f: impl FnMut(usize, TorusElement)) -> Result<()> {
        let torus = &self.torus;
        match &self.subring {
            Subring::FrobeniusImage => {
                for (key, coef) in residue_decompose(t) {
                    let i = *self.index.get(&key).ok_or_else(|| Error::BasisNotClosed {
                        exponent: key.exponent.clone(),
                    })?;
                    f(i, coef);
                }
            }
            Subring::Center(l) => {
                // The basis element carries alpha^0 = 2^P.
                let unit = BigRational::new(BigInt::from(1), BigInt::from(1) << torus.punctures());
                for (k, c) in t.terms() {
                    let i = *self.classes.get(&l.reduce(k)).ok_or_else(|| Error::BasisNotClosed {
                        exponent: k.clone(),
                    })?;
                    let e = &self.elements[i].exponent;
                    let lifted: Exponent = k.iter().zip(e).map(|(a, b)| a - b).collect();
                    let phase = torus.form().product_phase(&lifted, e);
                    let scale = Cyclo::zeta_power(torus.root(), -phase).scale(&unit);
                    f(i, torus.term(lifted, c.scale(&scale)));
                }
            }
        }
        Ok(())
    }

    /// `sum_i c_i e_i`.
    pub fn reassemble(&self, coefs: &[TorusElement]) -> TorusElement {
        let mut acc = self.torus.zero();
        for (i, c) in coefs.iter().enumerate() {
            if !c.is_zero() {
                acc = &acc + &(c * &self.element(i));
            }
        }
        acc
    }
}

/// The defining trace: average of the diagonal of left multiplication by
/// `t` in `basis`.
pub fn brute_force_trace(t: &TorusElement, basis: &ModuleBasis) -> Result<TorusElement> {
    let torus = basis.torus();
    let mut acc = torus.zero();
    for i in 0..basis.len() {
        acc = &acc + &basis.coefficient(&(t * &basis.element(i)), i)?;
    }
    let k = BigRational::new(BigInt::from(1), BigInt::from(basis.len()));
    Ok(acc.scale(&Cyclo::from_rational(torus.root(), k)))
}

/// Gram matrix `G_ij = Tr(e_i e_j)` of a monomial basis together with a
/// nonvanishing witness for its determinant.
#[derive(Clone, Debug)]
pub struct GramCertificate {
    pub matrix: Vec<Vec<TorusElement>>,
    pub symmetric: bool,
    /// `matching[i]` is the unique column with `G_{i, matching[i]} != 0`.
    pub matching: Vec<usize>,
    pub sign: i32,
    /// `sign * prod_i G_{i, matching[i]}`, a single nonzero monomial.
    pub determinant: TorusElement,
}

/// Builds the Gram matrix of `basis` under its trace and certifies that it
/// is a generalized permutation matrix with monomial entries.
pub fn gram_certificate(basis: &ModuleBasis) -> Result<GramCertificate> {
    let d = basis.len();
    let elems: Vec<TorusElement> = (0..d).map(|i| basis.element(i)).collect();
    let matrix: Vec<Vec<TorusElement>> = elems
        .iter()
        .map(|a| elems.iter().map(|b| basis.trace(&(a * b))).collect())
        .collect();
    let symmetric = (0..d).all(|i| (i + 1..d).all(|j| matrix[i][j] == matrix[j][i]));
    let mut matching = Vec::with_capacity(d);
    for (i, row) in matrix.iter().enumerate() {
        let nz: Vec<usize> = (0..d).filter(|&j| !row[j].is_zero()).collect();
        match nz.as_slice() {
            [] => return Err(Error::DegeneratePairing),
            [j] if row[*j].support_size() == 1 => matching.push(*j),
            _ => return Err(Error::NotMonomialPairing { row: i }),
        }
    }
    let mut seen = vec![false; d];
    for &j in &matching {
        if core::mem::replace(&mut seen[j], true) {
            return Err(Error::DegeneratePairing);
        }
    }
    let sign = permutation_sign(&matching);
    let torus = basis.torus();
    let mut det = torus.scalar(Cyclo::from_int(torus.root(), sign as i64));
    for (i, &j) in matching.iter().enumerate() {
        det = &det * &matrix[i][j];
    }
    if det.is_zero() {
        return Err(Error::DegeneratePairing);
    }
    Ok(GramCertificate {
        matrix,
        symmetric,
        matching,
        sign,
        determinant: det,
    })
}

fn permutation_sign(p: &[usize]) -> i32 {
    let mut seen = vec![false; p.len()];
    let mut sign = 1;
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = p[i];
            len += 1;
        }
        if len % 2 == 0 {
            sign = -sign;
        }
    }
    sign
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qtorus::{central_lattice, SkewForm};
    use crate::scalars::{chebyshev_expand, chebyshev_t, RootData};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn torus(entries: Vec<Vec<i64>>, n: u32, punctures: usize) -> Torus {
        Torus::new(SkewForm::unnamed(entries).unwrap(), RootData::new(n).unwrap(), punctures)
    }

    fn bigon(n: u32) -> Torus {
        torus(vec![vec![0, 2, 2], vec![-2, 0, 0], vec![-2, 0, 0]], n, 0)
    }

    fn random_form(rng: &mut ChaCha8Rng, n: usize) -> Vec<Vec<i64>> {
        let mut e = vec![vec![0i64; n]; n];
        for i in 0..n {
            for j in i + 1..n {
                let v = rng.gen_range(-3..=3);
                e[i][j] = v;
                e[j][i] = -v;
            }
        }
        e
    }

    fn random_element(rng: &mut ChaCha8Rng, t: &Torus, terms: usize, span: i64, cheb: u32) -> TorusElement {
        let mut e = t.zero();
        for _ in 0..terms {
            let k: Exponent = (0..t.rank()).map(|_| rng.gen_range(-span..=span)).collect();
            let a: Vec<u32> = (0..t.punctures()).map(|_| rng.gen_range(0..=cheb)).collect();
            let c = Cyclo::zeta_power(t.root(), rng.gen_range(0..7)).scale(&crate::scalars::rat(rng.gen_range(-3..=3)));
            e = &e + &t.cheb_monomial(a, k).scale(&c);
        }
        e
    }

    #[test]
    fn split_reassembles() {
        for n in [3u32, 5] {
            for m in 0..4 * n {
                let mut acc: BTreeMap<usize, BigRational> = BTreeMap::new();
                for (s, r, c) in split_chebyshev(m, n) {
                    // T_{Ns} T_r = T_{Ns+r} + T_{|Ns-r|}
                    let (hi, lo) = ((n * s + r) as usize, (n * s).abs_diff(r) as usize);
                    *acc.entry(hi).or_default() += c.clone();
                    *acc.entry(lo).or_default() += c;
                }
                acc.retain(|_, v| *v != BigRational::from_integer(0.into()));
                let want: BTreeMap<usize, BigRational> =
                    [(m as usize, BigRational::from_integer(1.into()))].into_iter().collect();
                assert_eq!(acc, want, "m={m}");
                let _ = chebyshev_expand(&chebyshev_t(m as usize));
            }
        }
    }

    #[test]
    fn residue_examples() {
        let t = torus(vec![vec![0, 1], vec![-1, 0]], 3, 1);
        let d = residue_decompose(&t.generator(0, 4));
        assert_eq!(d.len(), 1);
        let (key, coef) = d.iter().next().unwrap();
        assert_eq!(key.exponent, vec![1, 0]);
        assert_eq!(key.alpha, vec![0]);
        // basis element alpha^0 x^{e1} carries a factor T_0 = 2
        assert_eq!(&coef.scale(&Cyclo::from_int(t.root(), 2)), &t.generator(0, 3));

        let d1 = residue_decompose(&t.one());
        assert_eq!(d1.len(), 1);
        assert!(d1.contains_key(&BasisMonomial { alpha: vec![0], exponent: vec![0, 0] }));

        // T_5 x^{e1} = (T_3 T_2 - T_1) x^{e1}
        let e = &t.cheb(0, 5) * &t.generator(0, 1);
        let d = residue_decompose(&e);
        let keys: Vec<Vec<u32>> = d.keys().map(|k| k.alpha.clone()).collect();
        assert_eq!(keys, vec![vec![1], vec![2]]);
    }

    #[test]
    fn residue_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for _ in 0..60 {
            let n = rng.gen_range(1..=3);
            let p = rng.gen_range(0..=2);
            let t = Torus::new(SkewForm::unnamed(random_form(&mut rng, n)).unwrap(), RootData::new(3).unwrap(), p);
            let basis = ModuleBasis::frobenius_residues(&t);
            let e = random_element(&mut rng, &t, 4, 5, 7);
            let coefs = basis.decompose(&e).unwrap();
            for c in &coefs {
                for (k, a) in c.terms() {
                    assert!(k.iter().all(|x| x % 3 == 0));
                    assert!(a.terms().keys().all(|idx| idx.iter().all(|x| x % 3 == 0)));
                }
            }
            assert_eq!(basis.reassemble(&coefs), e);
        }
    }

    #[test]
    fn frobenius_lift_is_homomorphism_into_center() {
        let mut rng = ChaCha8Rng::seed_from_u64(22);
        for _ in 0..50 {
            let n = rng.gen_range(1..=3);
            let root = RootData::new([3, 5][rng.gen_range(0..2)]).unwrap();
            let q = Torus::new(SkewForm::unnamed(random_form(&mut rng, n)).unwrap(), root.clone(), 1);
            let cl = Torus::classical(n, root, 1);
            let u = random_element(&mut rng, &cl, 3, 2, 3);
            let v = random_element(&mut rng, &cl, 3, 2, 3);
            let fu = frobenius_lift(&u, &q).unwrap();
            let fv = frobenius_lift(&v, &q).unwrap();
            assert_eq!(frobenius_lift(&(&u * &v), &q).unwrap(), &fu * &fv);
            assert_eq!(fu.len(), u.len());
            let w = random_element(&mut rng, &q, 3, 3, 4);
            assert_eq!(&fu * &w, &w * &fu);
        }
        let q = torus(vec![vec![0, 1], vec![-1, 0]], 3, 1);
        let cl = Torus::classical(2, q.root().clone(), 1);
        assert_eq!(frobenius_lift(&cl.generator(0, 1), &q).unwrap(), q.generator(0, 3));
        assert_eq!(frobenius_lift(&cl.cheb(0, 1), &q).unwrap(), q.cheb(0, 3));
    }

    #[test]
    fn frobenius_trace_examples() {
        let t = torus(vec![vec![0, 1], vec![-1, 0]], 3, 1);
        let e = &t.cheb(0, 3) * &t.generator(0, 3);
        assert_eq!(trace_over_frobenius(&e), e);
        assert!(trace_over_frobenius(&t.monomial(vec![1, 2])).is_zero());
        let s = &t.monomial(vec![3, 3]) + &t.monomial(vec![1, 0]).scale(&Cyclo::from_int(t.root(), 5));
        assert_eq!(trace_over_frobenius(&s), t.monomial(vec![3, 3]));
        let basis = ModuleBasis::frobenius_residues(&t);
        assert_eq!(brute_force_trace(&s, &basis).unwrap(), t.monomial(vec![3, 3]));
        assert_eq!(trace_over_frobenius(&t.one()), t.one());
    }

    #[test]
    fn cyclic_shift_brute_force() {
        let t = torus(vec![vec![0]], 3, 0);
        let basis = ModuleBasis::frobenius_residues(&t);
        assert_eq!(basis.len(), 3);
        assert!(brute_force_trace(&t.generator(0, 1), &basis).unwrap().is_zero());
        assert_eq!(brute_force_trace(&t.one(), &basis).unwrap(), t.one());
    }

    #[test]
    fn frobenius_trace_agrees_with_brute_force() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for case in 0..100 {
            let n = 1 + case % 3;
            let p = if n == 3 { 0 } else { rng.gen_range(0..=1) };
            let t = Torus::new(SkewForm::unnamed(random_form(&mut rng, n)).unwrap(), RootData::new(3).unwrap(), p);
            let basis = ModuleBasis::frobenius_residues(&t);
            let e = random_element(&mut rng, &t, 3, 4, 7);
            assert_eq!(brute_force_trace(&e, &basis).unwrap(), trace_over_frobenius(&e));
        }
    }

    #[test]
    fn frobenius_trace_linear_and_symmetric() {
        let mut rng = ChaCha8Rng::seed_from_u64(24);
        for _ in 0..60 {
            let n = rng.gen_range(1..=3);
            let root = RootData::new(5).unwrap();
            let t = Torus::new(SkewForm::unnamed(random_form(&mut rng, n)).unwrap(), root.clone(), 1);
            let cl = Torus::classical(n, root, 1);
            let u = random_element(&mut rng, &cl, 2, 2, 2);
            let fu = frobenius_lift(&u, &t).unwrap();
            let a = random_element(&mut rng, &t, 3, 6, 6);
            let b = random_element(&mut rng, &t, 3, 6, 6);
            assert_eq!(trace_over_frobenius(&(&fu * &a)), &fu * &trace_over_frobenius(&a));
            assert_eq!(trace_over_frobenius(&(&a * &b)), trace_over_frobenius(&(&b * &a)));
        }
    }

    #[test]
    fn center_trace_examples() {
        let t = bigon(3);
        let l = central_lattice(t.form(), 3);
        assert_eq!(trace_over_center(&t.monomial(vec![0, 1, 2]), &l).unwrap(), t.monomial(vec![0, 1, 2]));
        assert!(trace_over_center(&t.monomial(vec![1, 0, 0]), &l).unwrap().is_zero());
        assert_eq!(trace_over_center(&t.one(), &l).unwrap(), t.one());
        let basis = ModuleBasis::center_transversal(&t, &l).unwrap();
        assert_eq!(basis.len(), 9);
        for k in [vec![0, 1, 2], vec![1, 0, 0], vec![2, 5, -1], vec![3, 2, 2]] {
            let m = t.monomial(k);
            assert_eq!(brute_force_trace(&m, &basis).unwrap(), trace_over_center(&m, &l).unwrap());
        }
    }

    #[test]
    fn center_trace_rejects_non_central_lattice() {
        let t = bigon(3);
        let bad = Lattice::from_generators(3, 3, &[vec![1, 0, 0]]);
        assert!(matches!(trace_over_center(&t.one(), &bad), Err(Error::LatticeNotCentral { .. })));
    }

    #[test]
    fn center_trace_symmetric_and_brute_force() {
        let mut rng = ChaCha8Rng::seed_from_u64(25);
        for case in 0..60 {
            let n = 1 + case % 3;
            let form = random_form(&mut rng, n);
            let p = rng.gen_range(0..=1);
            let t = Torus::new(SkewForm::unnamed(form).unwrap(), RootData::new(3).unwrap(), p);
            let l = central_lattice(t.form(), 3);
            let basis = ModuleBasis::center_transversal(&t, &l).unwrap();
            let a = random_element(&mut rng, &t, 3, 4, 4);
            let b = random_element(&mut rng, &t, 3, 4, 4);
            let ta = trace_over_center(&a, &l).unwrap();
            assert_eq!(brute_force_trace(&a, &basis).unwrap(), ta);
            assert_eq!(trace_over_center(&(&a * &b), &l).unwrap(), trace_over_center(&(&b * &a), &l).unwrap());
            let coefs = basis.decompose(&a).unwrap();
            assert_eq!(basis.reassemble(&coefs), a);
        }
    }

    #[test]
    fn gram_rank_one() {
        let t = torus(vec![vec![0]], 3, 0);
        let g = gram_certificate(&ModuleBasis::frobenius_residues(&t)).unwrap();
        assert!(g.symmetric);
        assert_eq!(g.matching, vec![0, 2, 1]);
        assert_eq!(g.determinant, t.monomial(vec![6]).scale(&Cyclo::from_int(t.root(), -1)));
    }

    #[test]
    fn gram_nondegenerate_small() {
        let mut rng = ChaCha8Rng::seed_from_u64(26);
        for &n in &[3u32, 5] {
            for rank in 1..=3usize {
                if n == 5 && rank == 3 {
                    continue;
                }
                let t = Torus::new(SkewForm::unnamed(random_form(&mut rng, rank)).unwrap(), RootData::new(n).unwrap(), 0);
                let g = gram_certificate(&ModuleBasis::frobenius_residues(&t)).unwrap();
                assert!(g.symmetric);
                let l = central_lattice(t.form(), n);
                let g = gram_certificate(&ModuleBasis::center_transversal(&t, &l).unwrap()).unwrap();
                assert!(g.symmetric);
            }
        }
        let g = gram_certificate(&ModuleBasis::frobenius_residues(&bigon(3))).unwrap();
        assert_eq!(g.matrix.len(), 27);
        assert!(!g.determinant.is_zero());
    }

    #[test]
    fn gram_with_alpha_is_not_monomial() {
        let t = torus(vec![vec![0]], 3, 1);
        assert!(matches!(
            gram_certificate(&ModuleBasis::frobenius_residues(&t)),
            Err(Error::NotMonomialPairing { .. })
        ));
    }
}
