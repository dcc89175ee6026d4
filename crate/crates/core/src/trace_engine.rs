//! Finite-dimensional algebras over an exact field: left multiplication,
//! the normalized trace, Gram matrices and nondegeneracy certificates,
//! tensor products.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::scalars::Field;
use crate::{Error, Result};

/// Sparse vector in basis coordinates.
pub type Sparse<F> = Vec<(usize, F)>;

/// An associative unital algebra with a chosen basis `e_0, ..., e_{k-1}`.
pub trait Algebra {
    type Scalar: Field;

    fn dim(&self) -> usize;

    /// `e_i e_j` in basis coordinates.
    fn mul_basis(&self, i: usize, j: usize) -> Sparse<Self::Scalar>;

    /// Coordinates of the unit.
    fn unit(&self) -> Sparse<Self::Scalar>;

    fn label(&self, i: usize) -> String;

    /// Some scalar of the field, used to build zeros and ones.
    fn sample_scalar(&self) -> Self::Scalar;

    /// `Trace(e_m)` for every basis element: the diagonal of `L_{e_m}`
    /// averaged over the dimension.
    fn basis_traces(&self) -> Vec<Self::Scalar> {
        let k = self.dim();
        let s = self.sample_scalar();
        let inv_k = s.from_int_like(k as i64).inv().expect("nonzero dimension");
        (0..k)
            .map(|m| {
                let mut acc = s.zero_like();
                for i in 0..k {
                    for (r, c) in self.mul_basis(m, i) {
                        if r == i {
                            acc = acc.add(&c);
                        }
                    }
                }
                acc.mul(&inv_k)
            })
            .collect()
    }

    /// Dense product of two coordinate vectors.
    fn mul(&self, x: &[Self::Scalar], y: &[Self::Scalar]) -> Vec<Self::Scalar> {
        let s = self.sample_scalar();
        let mut out = vec![s.zero_like(); self.dim()];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = xi.mul(yj);
                for (r, v) in self.mul_basis(i, j) {
                    out[r] = out[r].add(&c.mul(&v));
                }
            }
        }
        out
    }

    fn unit_dense(&self) -> Vec<Self::Scalar> {
        densify(self.dim(), &self.sample_scalar(), &self.unit())
    }
}

pub fn densify<F: Field>(dim: usize, sample: &F, v: &Sparse<F>) -> Vec<F> {
    let mut out = vec![sample.zero_like(); dim];
    for (i, c) in v {
        out[*i] = out[*i].add(c);
    }
    out
}

/// `Trace(x) = sum_m x_m Trace(e_m)`, given precomputed basis traces.
pub fn trace_with<F: Field>(traces: &[F], x: &[F]) -> F {
    let mut acc = traces[0].zero_like();
    for (t, c) in traces.iter().zip(x) {
        if !c.is_zero() {
            acc = acc.add(&t.mul(c));
        }
    }
    acc
}

/// The normalized trace of `x`.
pub fn trace_f<A: Algebra>(alg: &A, x: &[A::Scalar]) -> A::Scalar {
    trace_with(&alg.basis_traces(), x)
}

/// `G_ij = Trace(e_i e_j)`.
pub fn gram_matrix<A: Algebra>(alg: &A) -> Vec<Vec<A::Scalar>> {
    let t = alg.basis_traces();
    let zero = alg.sample_scalar().zero_like();
    (0..alg.dim())
        .map(|i| {
            (0..alg.dim())
                .map(|j| {
                    let mut acc = zero.clone();
                    for (m, c) in alg.mul_basis(i, j) {
                        acc = acc.add(&c.mul(&t[m]));
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

/// The Gram matrix of the trace pairing and its determinant.
#[derive(Clone, Debug)]
pub struct FrobeniusCertificate<F> {
    pub gram: Vec<Vec<F>>,
    pub symmetric: bool,
    pub determinant: F,
}

impl<F: Field> FrobeniusCertificate<F> {
    /// Nondegenerate symmetric pairing.
    pub fn is_frobenius(&self) -> bool {
        self.symmetric && !self.determinant.is_zero()
    }
}

pub fn frobenius_certificate<A: Algebra>(alg: &A) -> FrobeniusCertificate<A::Scalar> {
    let gram = gram_matrix(alg);
    let k = gram.len();
    let symmetric = (0..k).all(|i| (i + 1..k).all(|j| gram[i][j] == gram[j][i]));
    let determinant = determinant(&gram, &alg.sample_scalar());
    FrobeniusCertificate {
        gram,
        symmetric,
        determinant,
    }
}

/// Checks `(e_i e_j) e_l = e_i (e_j e_l)` on the given index triples.
pub fn check_associativity_on<A: Algebra>(
    alg: &A,
    triples: impl IntoIterator<Item = (usize, usize, usize)>,
) -> Result<()> {
    let s = alg.sample_scalar();
    let k = alg.dim();
    let basis = |i: usize| {
        let mut v = vec![s.zero_like(); k];
        v[i] = s.one_like();
        v
    };
    for (i, j, l) in triples {
        let (a, b, c) = (basis(i), basis(j), basis(l));
        if alg.mul(&alg.mul(&a, &b), &c) != alg.mul(&a, &alg.mul(&b, &c)) {
            return Err(Error::AxiomViolated(format!(
                "associativity fails on ({}, {}, {})",
                alg.label(i),
                alg.label(j),
                alg.label(l)
            )));
        }
    }
    Ok(())
}

/// Exhaustive associativity check.
pub fn check_associativity<A: Algebra>(alg: &A) -> Result<()> {
    let k = alg.dim();
    check_associativity_on(
        alg,
        (0..k).flat_map(move |i| (0..k).flat_map(move |j| (0..k).map(move |l| (i, j, l)))),
    )
}

/// Checks `1 e_i = e_i 1 = e_i` for every basis element.
pub fn check_unit<A: Algebra>(alg: &A) -> Result<()> {
    let s = alg.sample_scalar();
    let one = alg.unit_dense();
    for i in 0..alg.dim() {
        let mut e = vec![s.zero_like(); alg.dim()];
        e[i] = s.one_like();
        if alg.mul(&one, &e) != e || alg.mul(&e, &one) != e {
            return Err(Error::AxiomViolated(format!(
                "unit law fails on {}",
                alg.label(i)
            )));
        }
    }
    Ok(())
}

/// Structure constants stored as a full `k x k` table.
#[derive(Clone, Debug)]
pub struct TableAlgebra<F> {
    labels: Vec<String>,
    table: Vec<Sparse<F>>,
    unit: Sparse<F>,
    sample: F,
}

impl<F: Field> TableAlgebra<F> {
    /// `table[i * k + j]` holds `e_i e_j`.
    pub fn new(labels: Vec<String>, table: Vec<Sparse<F>>, unit: Sparse<F>, sample: F) -> Result<Self> {
        let k = labels.len();
        if k == 0 {
            return Err(Error::UnexpectedDimension { expected: 1, got: 0 });
        }
        if table.len() != k * k {
            return Err(Error::UnexpectedDimension {
                expected: k * k,
                got: table.len(),
            });
        }
        for v in table.iter().chain(core::iter::once(&unit)) {
            for (i, c) in v {
                if *i >= k {
                    return Err(Error::IndexMismatch { expected: k, got: *i });
                }
                if !c.same_field(&sample) {
                    return Err(Error::FieldMismatch);
                }
            }
        }
        Ok(TableAlgebra {
            labels,
            table,
            unit,
            sample,
        })
    }

    /// Materializes the structure constants of any algebra.
    pub fn from_algebra<A: Algebra<Scalar = F>>(alg: &A) -> Self {
        let k = alg.dim();
        let mut table = Vec::with_capacity(k * k);
        for i in 0..k {
            for j in 0..k {
                table.push(alg.mul_basis(i, j));
            }
        }
        TableAlgebra {
            labels: (0..k).map(|i| alg.label(i)).collect(),
            table,
            unit: alg.unit(),
            sample: alg.sample_scalar(),
        }
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn table(&self) -> &[Sparse<F>] {
        &self.table
    }
}

impl<F: Field> Algebra for TableAlgebra<F> {
    type Scalar = F;

    fn dim(&self) -> usize {
        self.labels.len()
    }

    fn mul_basis(&self, i: usize, j: usize) -> Sparse<F> {
        self.table[i * self.dim() + j].clone()
    }

    fn unit(&self) -> Sparse<F> {
        self.unit.clone()
    }

    fn label(&self, i: usize) -> String {
        self.labels[i].clone()
    }

    fn sample_scalar(&self) -> F {
        self.sample.clone()
    }
}

/// `A (x) B` with basis `e_i (x) f_j` at index `i * dim(B) + j`; products are
/// computed on demand.
#[derive(Clone, Debug)]
pub struct TensorAlgebra<A, B> {
    left: A,
    right: B,
}

pub fn tensor_product<F: Field, A, B>(left: A, right: B) -> Result<TensorAlgebra<A, B>>
where
    A: Algebra<Scalar = F>,
    B: Algebra<Scalar = F>,
{
    if !left.sample_scalar().same_field(&right.sample_scalar()) {
        return Err(Error::FieldMismatch);
    }
    Ok(TensorAlgebra { left, right })
}

impl<A, B> TensorAlgebra<A, B> {
    pub fn left(&self) -> &A {
        &self.left
    }

    pub fn right(&self) -> &B {
        &self.right
    }
}

fn kron<F: Field>(a: &Sparse<F>, b: &Sparse<F>, db: usize) -> Sparse<F> {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for (i, x) in a {
        for (j, y) in b {
            out.push((i * db + j, x.mul(y)));
        }
    }
    out
}

impl<F: Field, A, B> Algebra for TensorAlgebra<A, B>
where
    A: Algebra<Scalar = F>,
    B: Algebra<Scalar = F>,
{
    type Scalar = F;

    fn dim(&self) -> usize {
        self.left.dim() * self.right.dim()
    }

    fn mul_basis(&self, i: usize, j: usize) -> Sparse<F> {
        let db = self.right.dim();
        kron(
            &self.left.mul_basis(i / db, j / db),
            &self.right.mul_basis(i % db, j % db),
            db,
        )
    }

    fn unit(&self) -> Sparse<F> {
        kron(&self.left.unit(), &self.right.unit(), self.right.dim())
    }

    fn label(&self, i: usize) -> String {
        let db = self.right.dim();
        format!("{}|{}", self.left.label(i / db), self.right.label(i % db))
    }

    fn sample_scalar(&self) -> F {
        self.left.sample_scalar()
    }

    fn basis_traces(&self) -> Vec<F> {
        let l = self.left.basis_traces();
        let r = self.right.basis_traces();
        l.iter().flat_map(|a| r.iter().map(move |b| a.mul(b))).collect()
    }
}

/// `A_1 (x) ... (x) A_r` with mixed-radix indexing (last factor fastest);
/// products are computed on demand.
#[derive(Clone, Debug)]
pub struct TensorChain<A> {
    factors: Vec<A>,
}

impl<A: Algebra> TensorChain<A> {
    pub fn new(factors: Vec<A>) -> Result<Self> {
        let first = factors.first().ok_or(Error::UnexpectedDimension { expected: 1, got: 0 })?;
        let s = first.sample_scalar();
        if factors.iter().any(|f| !f.sample_scalar().same_field(&s)) {
            return Err(Error::FieldMismatch);
        }
        Ok(TensorChain { factors })
    }

    pub fn factors(&self) -> &[A] {
        &self.factors
    }

    fn split(&self, mut i: usize) -> Vec<usize> {
        let mut out = vec![0; self.factors.len()];
        for (slot, f) in out.iter_mut().zip(&self.factors).rev() {
            *slot = i % f.dim();
            i /= f.dim();
        }
        out
    }

    fn fold(&self, parts: impl Fn(&A, usize) -> Sparse<A::Scalar>) -> Sparse<A::Scalar> {
        let mut acc: Sparse<A::Scalar> = vec![(0, self.factors[0].sample_scalar().one_like())];
        for (k, f) in self.factors.iter().enumerate() {
            acc = kron(&acc, &parts(f, k), f.dim());
        }
        acc
    }
}

impl<A: Algebra> Algebra for TensorChain<A> {
    type Scalar = A::Scalar;

    fn dim(&self) -> usize {
        self.factors.iter().map(|f| f.dim()).product()
    }

    fn mul_basis(&self, i: usize, j: usize) -> Sparse<A::Scalar> {
        let (si, sj) = (self.split(i), self.split(j));
        self.fold(|f, k| f.mul_basis(si[k], sj[k]))
    }

    fn unit(&self) -> Sparse<A::Scalar> {
        self.fold(|f, _| f.unit())
    }

    fn label(&self, i: usize) -> String {
        let parts: Vec<String> = self
            .split(i)
            .iter()
            .zip(&self.factors)
            .map(|(&k, f)| f.label(k))
            .collect();
        parts.join("|")
    }

    fn sample_scalar(&self) -> A::Scalar {
        self.factors[0].sample_scalar()
    }

    fn basis_traces(&self) -> Vec<A::Scalar> {
        let mut acc = vec![self.sample_scalar().one_like()];
        for f in &self.factors {
            let t = f.basis_traces();
            acc = acc.iter().flat_map(|a| t.iter().map(move |b| a.mul(b))).collect();
        }
        acc
    }
}

/// Determinant by fraction-free (Bareiss) elimination; `sample` supplies
/// the field for the empty matrix.
pub fn determinant<F: Field>(m: &[Vec<F>], sample: &F) -> F {
    let n = m.len();
    let mut a: Vec<Vec<F>> = m.to_vec();
    let mut prev = sample.one_like();
    let mut sign = false;
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else {
            return sample.zero_like();
        };
        if p != k {
            a.swap(k, p);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = a[k][k].mul(&a[i][j]).sub(&a[i][k].mul(&a[k][j]));
                a[i][j] = v.div(&prev).expect("nonzero pivot");
            }
            a[i][k] = sample.zero_like();
        }
        prev = a[k][k].clone();
    }
    let det = if n == 0 { sample.one_like() } else { prev };
    if sign {
        det.neg()
    } else {
        det
    }
}

/// Reduced row echelon form; returns the nonzero rows and their pivot columns.
pub fn row_echelon<F: Field>(m: &[Vec<F>]) -> (Vec<Vec<F>>, Vec<usize>) {
    let mut a: Vec<Vec<F>> = m.to_vec();
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].inv().expect("nonzero pivot");
        let pivot_row: Vec<F> = a[r].iter().map(|x| x.mul(&inv)).collect();
        for (i, row) in a.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x = x.sub(&f.mul(y));
                }
            }
        }
        a[r] = pivot_row;
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    (a, pivots)
}

pub fn rank<F: Field>(m: &[Vec<F>]) -> usize {
    row_echelon(m).1.len()
}

/// Solves the square system `m x = b`, or `None` if `m` is singular.
pub fn solve<F: Field>(m: &[Vec<F>], b: &[F]) -> Option<Vec<F>> {
    let n = m.len();
    let mut a: Vec<Vec<F>> = m
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !a[i][c].is_zero())?;
        a.swap(c, p);
        let inv = a[c][c].inv()?;
        let pivot_row: Vec<F> = a[c].iter().map(|x| x.mul(&inv)).collect();
        for (i, row) in a.iter_mut().enumerate() {
            if i != c && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x = x.sub(&f.mul(y));
                }
            }
        }
        a[c] = pivot_row;
    }
    Some(a.into_iter().map(|mut r| r.pop().expect("augmented column")).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{rat, Cyclo, RootData};
    use alloc::string::ToString;
    use alloc::sync::Arc;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    /// `Q(zeta)[x] / (x^m - c)` with basis `1, x, ..., x^{m-1}`.
    fn cyclic(root: &Arc<RootData>, m: usize, c: Cyclo) -> TableAlgebra<Cyclo> {
        let mut table = Vec::new();
        for i in 0..m {
            for j in 0..m {
                let s = i + j;
                table.push(if s < m {
                    vec![(s, Cyclo::one(root))]
                } else {
                    vec![(s - m, c.clone())]
                });
            }
        }
        TableAlgebra::new(
            (0..m).map(|i| format!("x^{i}")).collect(),
            table,
            vec![(0, Cyclo::one(root))],
            Cyclo::one(root),
        )
        .unwrap()
    }

    /// 2x2 matrices with matrix units `E_ij` at index `2i + j`.
    fn matrices(root: &Arc<RootData>) -> TableAlgebra<Cyclo> {
        let mut table = Vec::new();
        for a in 0..4 {
            for b in 0..4 {
                let (i, j, k, l) = (a / 2, a % 2, b / 2, b % 2);
                table.push(if j == k { vec![(2 * i + l, Cyclo::one(root))] } else { vec![] });
            }
        }
        let one = Cyclo::one(root);
        TableAlgebra::new(
            ["E11", "E12", "E21", "E22"].iter().map(|s| s.to_string()).collect(),
            table,
            vec![(0, one.clone()), (3, one.clone())],
            one,
        )
        .unwrap()
    }

    fn random_vec(rng: &mut ChaCha8Rng, root: &Arc<RootData>, k: usize) -> Vec<Cyclo> {
        (0..k)
            .map(|_| Cyclo::zeta_power(root, rng.gen_range(0..3)).scale(&rat(rng.gen_range(-2..=2))))
            .collect()
    }

    #[test]
    fn trace_basics() {
        let root = RootData::new(3).unwrap();
        let alg = cyclic(&root, 3, Cyclo::from_int(&root, 2));
        check_associativity(&alg).unwrap();
        check_unit(&alg).unwrap();
        let t = alg.basis_traces();
        assert!(t[0].is_one());
        assert!(t[1].is_zero() && t[2].is_zero());
        assert!(trace_f(&alg, &alg.unit_dense()).is_one());
        let mut rng = ChaCha8Rng::seed_from_u64(51);
        for _ in 0..50 {
            let x = random_vec(&mut rng, &root, 3);
            let y = random_vec(&mut rng, &root, 3);
            assert_eq!(trace_with(&t, &alg.mul(&x, &y)), trace_with(&t, &alg.mul(&y, &x)));
        }
    }

    #[test]
    fn matrix_algebra_is_frobenius() {
        let root = RootData::new(5).unwrap();
        let alg = matrices(&root);
        check_associativity(&alg).unwrap();
        check_unit(&alg).unwrap();
        let cert = frobenius_certificate(&alg);
        assert!(cert.symmetric);
        // G = (1/2) * (swap E12, E21) block structure: det = -1/16
        assert_eq!(cert.determinant, Cyclo::from_rational(&root, num_rational::BigRational::new((-1).into(), 16.into())));
        let mut rng = ChaCha8Rng::seed_from_u64(52);
        let t = alg.basis_traces();
        for _ in 0..50 {
            let x = random_vec(&mut rng, &root, 4);
            let y = random_vec(&mut rng, &root, 4);
            assert_eq!(trace_with(&t, &alg.mul(&x, &y)), trace_with(&t, &alg.mul(&y, &x)));
        }
    }

    #[test]
    fn degenerate_algebra_detected() {
        // Q[x]/(x^2): trace pairing has G = [[1,0],[0,0]]
        let root = RootData::new(3).unwrap();
        let alg = cyclic(&root, 2, Cyclo::zero(&root));
        let cert = frobenius_certificate(&alg);
        assert!(cert.determinant.is_zero());
        assert!(!cert.is_frobenius());
    }

    #[test]
    fn tensor_traces_multiply() {
        let root = RootData::new(3).unwrap();
        let a = cyclic(&root, 3, Cyclo::zeta_power(&root, 1));
        let b = matrices(&root);
        let t = tensor_product(a.clone(), b.clone()).unwrap();
        assert_eq!(t.dim(), 12);
        check_unit(&t).unwrap();
        check_associativity(&t).unwrap();
        let generic = TableAlgebra::from_algebra(&t);
        assert_eq!(Algebra::basis_traces(&generic), t.basis_traces());
        let ta = a.basis_traces();
        let tb = b.basis_traces();
        let mut rng = ChaCha8Rng::seed_from_u64(53);
        for _ in 0..20 {
            let u = random_vec(&mut rng, &root, 3);
            let v = random_vec(&mut rng, &root, 4);
            let uv: Vec<Cyclo> = u.iter().flat_map(|x| v.iter().map(move |y| x * y)).collect();
            assert_eq!(trace_f(&t, &uv), &trace_with(&ta, &u) * &trace_with(&tb, &v));
        }
        assert!(frobenius_certificate(&t).is_frobenius());
    }

    #[test]
    fn tensor_field_mismatch() {
        let r3 = RootData::new(3).unwrap();
        let r5 = RootData::new(5).unwrap();
        assert!(matches!(
            tensor_product(matrices(&r3), matrices(&r5)),
            Err(Error::FieldMismatch)
        ));
    }

    #[test]
    fn tensor_associative_up_to_reindexing() {
        let root = RootData::new(3).unwrap();
        let a = cyclic(&root, 2, Cyclo::from_int(&root, 3));
        let b = cyclic(&root, 3, Cyclo::zeta_power(&root, 2));
        let c = matrices(&root);
        let left = tensor_product(tensor_product(a.clone(), b.clone()).unwrap(), c.clone()).unwrap();
        let right = tensor_product(a, tensor_product(b, c).unwrap()).unwrap();
        for i in 0..left.dim() {
            for j in 0..left.dim() {
                assert_eq!(left.mul_basis(i, j), right.mul_basis(i, j));
            }
        }
    }

    #[test]
    fn tensor_chain_matches_nested() {
        let root = RootData::new(3).unwrap();
        let a = cyclic(&root, 2, Cyclo::from_int(&root, 3));
        let b = cyclic(&root, 3, Cyclo::zeta_power(&root, 2));
        let c = matrices(&root);
        let chain = TensorChain::new(vec![a.clone(), b.clone(), c.clone()]).unwrap();
        let nested = tensor_product(tensor_product(a, b).unwrap(), c).unwrap();
        assert_eq!(chain.dim(), 24);
        assert_eq!(chain.unit(), nested.unit());
        assert_eq!(chain.basis_traces(), nested.basis_traces());
        for i in 0..24 {
            for j in 0..24 {
                assert_eq!(chain.mul_basis(i, j), nested.mul_basis(i, j));
            }
        }
        assert_eq!(chain.label(5), nested.label(5));
    }

    #[test]
    fn linear_algebra_helpers() {
        let root = RootData::new(5).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(54);
        for _ in 0..20 {
            let n = rng.gen_range(1..=5);
            let m: Vec<Vec<Cyclo>> = (0..n).map(|_| random_vec(&mut rng, &root, n)).collect();
            let b = random_vec(&mut rng, &root, n);
            let det = determinant(&m, &Cyclo::one(&root));
            match solve(&m, &b) {
                Some(x) => {
                    assert!(!det.is_zero());
                    assert_eq!(rank(&m), n);
                    for (row, bi) in m.iter().zip(&b) {
                        let s = row.iter().zip(&x).fold(Cyclo::zero(&root), |acc, (p, q)| &acc + &(p * q));
                        assert_eq!(&s, bi);
                    }
                }
                None => {
                    assert!(det.is_zero());
                    assert!(rank(&m) < n);
                }
            }
        }
        // 3x3 with a repeated row
        let r = vec![Cyclo::one(&root), Cyclo::zeta_power(&root, 1), Cyclo::from_int(&root, 4)];
        let m = vec![r.clone(), r, random_vec(&mut rng, &root, 3)];
        assert!(determinant(&m, &Cyclo::one(&root)).is_zero());
    }
}
