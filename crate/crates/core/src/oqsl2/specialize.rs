use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use super::{OqElement, Pbw};
use crate::scalars::{Cyclo, Field, RootData};
use crate::trace_engine::{row_echelon, Sparse, TableAlgebra, TensorChain};
use crate::{Error, Result};

/// A point `[[k11, k12], [k21, k22]]` of `SL_2` over `Q(zeta)`.
#[derive(Clone, Debug, PartialEq)]
pub struct SlPoint {
    m: [[Cyclo; 2]; 2],
}

impl SlPoint {
    pub fn new(m: [[Cyclo; 2]; 2]) -> Result<Self> {
        let det = &(&m[0][0] * &m[1][1]) - &(&m[0][1] * &m[1][0]);
        if !det.is_one() {
            return Err(Error::NotSpecialLinear);
        }
        Ok(SlPoint { m })
    }

    pub fn identity(root: &Arc<RootData>) -> Self {
        let (o, z) = (Cyclo::one(root), Cyclo::zero(root));
        SlPoint {
            m: [[o.clone(), z.clone()], [z, o]],
        }
    }

    pub fn entries(&self) -> &[[Cyclo; 2]; 2] {
        &self.m
    }

    pub fn root(&self) -> &Arc<RootData> {
        self.m[0][0].root()
    }

    /// Both diagonal entries vanish, so neither PBW-type basis applies.
    pub fn in_w(&self) -> bool {
        self.m[0][0].is_zero() && self.m[1][1].is_zero()
    }
}

/// Which monomials span the specialization.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpecializationBasis {
    /// `a^i b^j c^k`, `0 <= i, j, k < N` (needs `k11 != 0`).
    A,
    /// `b^j c^k d^l`, `0 <= j, k, l < N` (needs `k22 != 0`).
    D,
}

/// The quotient of `O_q(SL_2)` by `a^N - k11, b^N - k12, c^N - k21, d^N - k22`.
#[derive(Clone, Debug)]
pub struct Specialization {
    pub basis: SpecializationBasis,
    pub monomials: Vec<Pbw>,
    pub algebra: TableAlgebra<Cyclo>,
}

fn cyclo_pow(c: &Cyclo, e: u32) -> Cyclo {
    c.pow(e)
}

struct Reducer {
    n: u32,
    rho: [Cyclo; 4],
    kind: SpecializationBasis,
    /// Powers `0..N` of the substitute for the letter outside the basis.
    subst: Vec<OqElement>,
}

impl Reducer {
    fn new(point: &SlPoint, kind: SpecializationBasis) -> Result<Self> {
        let root = point.root();
        let n = root.order();
        let e = point.entries();
        let rho = [e[0][0].clone(), e[0][1].clone(), e[1][0].clone(), e[1][1].clone()];
        let one = OqElement::one(root);
        let bc = OqElement::monomial(root, Pbw::new(0, 1, 1, 0).expect("pbw")).scale(&Cyclo::zeta_power(root, -4));
        let unit_plus_bc = &one + &bc;
        let sub = match kind {
            // d = k11^{-1} a^{N-1} (1 + q^{-2} bc)
            SpecializationBasis::A => {
                let inv = rho[0].inv().ok_or(Error::InsideW)?;
                &OqElement::monomial(root, Pbw::new(n - 1, 0, 0, 0).expect("pbw")).scale(&inv) * &unit_plus_bc
            }
            // a = k22^{-1} (1 + q^{-2} bc) d^{N-1}
            SpecializationBasis::D => {
                let inv = rho[3].inv().ok_or(Error::InsideW)?;
                &unit_plus_bc.scale(&inv) * &OqElement::monomial(root, Pbw::new(0, 0, 0, n - 1).expect("pbw"))
            }
        };
        let mut subst = vec![one];
        for i in 1..n as usize {
            let next = &subst[i - 1] * &sub;
            subst.push(next);
        }
        Ok(Reducer { n, rho, kind, subst })
    }

    fn index(&self, m: &Pbw) -> usize {
        let n = self.n as usize;
        match self.kind {
            SpecializationBasis::A => (m.a as usize * n + m.b as usize) * n + m.c as usize,
            SpecializationBasis::D => (m.b as usize * n + m.c as usize) * n + m.d as usize,
        }
    }

    /// Pulls central powers out of a monomial already of the basis type.
    fn reduce_exponents(&self, m: &Pbw, c: &Cyclo) -> (usize, Cyclo) {
        let n = self.n;
        let mut coef = c.clone();
        for (e, r) in [(m.a, &self.rho[0]), (m.b, &self.rho[1]), (m.c, &self.rho[2]), (m.d, &self.rho[3])] {
            if e >= n {
                coef = &coef * &cyclo_pow(r, e / n);
            }
        }
        let r = Pbw {
            a: m.a % n,
            b: m.b % n,
            c: m.c % n,
            d: m.d % n,
        };
        (self.index(&r), coef)
    }

    fn reduce(&self, x: &OqElement) -> Vec<Cyclo> {
        let root = x.root();
        let n = self.n;
        let mut out = vec![Cyclo::zero(root); (n * n * n) as usize];
        for (m, c) in x.terms() {
            let foreign = match self.kind {
                SpecializationBasis::A => m.d,
                SpecializationBasis::D => m.a,
            };
            if foreign == 0 {
                let (i, v) = self.reduce_exponents(m, c);
                out[i] += &v;
                continue;
            }
            let (q, r) = (foreign / n, foreign % n);
            let scale = c * &cyclo_pow(&self.rho[if self.kind == SpecializationBasis::A { 3 } else { 0 }], q);
            let rest = match self.kind {
                SpecializationBasis::A => {
                    &OqElement::monomial(root, Pbw { d: 0, ..*m }) * &self.subst[r as usize]
                }
                SpecializationBasis::D => {
                    &self.subst[r as usize] * &OqElement::monomial(root, Pbw { a: 0, ..*m })
                }
            };
            for (mm, cc) in rest.terms() {
                let (i, v) = self.reduce_exponents(mm, &(cc * &scale));
                out[i] += &v;
            }
        }
        out
    }
}

fn sparse(v: Vec<Cyclo>) -> Sparse<Cyclo> {
    v.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect()
}

/// Structure constants of the specialization at `point` on the `N^3`
/// monomial basis, using the `a`-type basis when `k11 != 0` and the `d`-type
/// basis otherwise.
pub fn specialize(point: &SlPoint) -> Result<Specialization> {
    let kind = if !point.entries()[0][0].is_zero() {
        SpecializationBasis::A
    } else if !point.entries()[1][1].is_zero() {
        SpecializationBasis::D
    } else {
        return Err(Error::InsideW);
    };
    specialize_with(point, kind)
}

pub fn specialize_with(point: &SlPoint, kind: SpecializationBasis) -> Result<Specialization> {
    let root = point.root();
    let n = root.order();
    let reducer = Reducer::new(point, kind)?;
    let mut monomials = Vec::with_capacity((n * n * n) as usize);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                monomials.push(match kind {
                    SpecializationBasis::A => Pbw { a: i, b: j, c: k, d: 0 },
                    SpecializationBasis::D => Pbw { a: 0, b: i, c: j, d: k },
                });
            }
        }
    }
    let elems: Vec<OqElement> = monomials.iter().map(|m| OqElement::monomial(root, *m)).collect();
    let mut table = Vec::with_capacity(elems.len() * elems.len());
    for x in &elems {
        for y in &elems {
            table.push(sparse(reducer.reduce(&(x * y))));
        }
    }
    let labels: Vec<String> = monomials.iter().map(|m| format!("{m}")).collect();
    let algebra = TableAlgebra::new(labels, table, vec![(0, Cyclo::one(root))], Cyclo::one(root))?;
    Ok(Specialization {
        basis: kind,
        monomials,
        algebra,
    })
}

/// The specialization computed without choosing a PBW-type basis: the span
/// `R` of all monomials with exponents below `N`, modulo the images of
/// `(z - rho(z)) r` for `z` in `a^N, b^N, c^N, d^N` and `r` in `R`.
///
/// The quotient always surjects onto the true specialization, so a result
/// of dimension `N^3` is exact. Any other dimension is reported as
/// `UnexpectedDimension`. Works at every point, including those in `W`.
pub fn specialize_generic(point: &SlPoint) -> Result<TableAlgebra<Cyclo>> {
    let root = point.root();
    let n = root.order();
    let e = point.entries();
    let rho = [e[0][0].clone(), e[0][1].clone(), e[1][0].clone(), e[1][1].clone()];
    let mut span: Vec<Pbw> = Vec::new();
    for x in 0..n {
        for b in 0..n {
            for c in 0..n {
                span.push(Pbw { a: 0, b, c, d: x });
                if x > 0 {
                    span.push(Pbw { a: x, b, c, d: 0 });
                }
            }
        }
    }
    span.sort();
    let pos = |m: &Pbw| span.binary_search(m).expect("reduced monomial");
    let zero = Cyclo::zero(root);
    let reduce = |x: &OqElement| -> Vec<Cyclo> {
        let mut out = vec![zero.clone(); span.len()];
        for (m, c) in x.terms() {
            let mut coef = c.clone();
            for (ex, r) in [(m.a, &rho[0]), (m.b, &rho[1]), (m.c, &rho[2]), (m.d, &rho[3])] {
                coef = &coef * &r.pow(ex / n);
            }
            let red = Pbw {
                a: m.a % n,
                b: m.b % n,
                c: m.c % n,
                d: m.d % n,
            };
            out[pos(&red)] += &coef;
        }
        out
    };
    let powers = super::frobenius_generators(root);
    let mut relations = Vec::new();
    for m in &span {
        let r = OqElement::monomial(root, *m);
        for (z, value) in powers.all().iter().zip(&rho) {
            let rel = &(*z * &r) - &r.scale(value);
            relations.push(reduce(&rel));
        }
    }
    let (rref, pivots) = row_echelon(&relations);
    let dim = span.len() - pivots.len();
    let expected = (n * n * n) as usize;
    if dim != expected {
        return Err(Error::UnexpectedDimension { expected, got: dim });
    }
    let free: Vec<usize> = (0..span.len()).filter(|c| !pivots.contains(c)).collect();
    let project = |mut v: Vec<Cyclo>| -> Sparse<Cyclo> {
        for (row, &p) in rref.iter().zip(&pivots) {
            if !v[p].is_zero() {
                let f = v[p].clone();
                for (x, y) in v.iter_mut().zip(row) {
                    *x = x.sub(&f.mul(y));
                }
            }
        }
        free.iter()
            .enumerate()
            .filter(|(_, &c)| !v[c].is_zero())
            .map(|(i, &c)| (i, v[c].clone()))
            .collect()
    };
    let elems: Vec<OqElement> = free.iter().map(|&c| OqElement::monomial(root, span[c])).collect();
    let mut table = Vec::with_capacity(expected * expected);
    for x in &elems {
        for y in &elems {
            table.push(project(reduce(&(x * y))));
        }
    }
    let unit = project(reduce(&OqElement::one(root)));
    let labels = free.iter().map(|&c| format!("{}", span[c])).collect();
    TableAlgebra::new(labels, table, unit, Cyclo::one(root))
}

/// The tensor product of the specializations at each point.
pub fn tensor_specializations(points: &[SlPoint]) -> Result<TensorChain<TableAlgebra<Cyclo>>> {
    let factors = points
        .iter()
        .map(|p| specialize(p).map(|s| s.algebra))
        .collect::<Result<Vec<_>>>()?;
    TensorChain::new(factors)
}
