use alloc::vec;
use alloc::vec::Vec;

use super::{Exponent, Lattice, ModuleBasis, Subring, TorusElement};
use crate::scalars::{chebyshev_t, ChebPoly, Cyclo, LaurentPoly};
use crate::{Error, Result};

/// An inverse of `t` with its central denominator cleared:
/// `t * numerator = numerator * t = denominator`, with `denominator` a
/// nonzero element of the commutative subring.
#[derive(Clone, Debug)]
pub struct InverseWitness {
    pub numerator: TorusElement,
    pub denominator: TorusElement,
}

impl InverseWitness {
    pub fn verify(&self, t: &TorusElement) -> bool {
        !self.denominator.is_zero()
            && &(t * &self.numerator) == &self.denominator
            && &(&self.numerator * t) == &self.denominator
    }
}

/// Identifies the subring of `basis` with a commutative Laurent ring:
/// Weyl monomials `[x^l]`, `l` in the lattice, become `y^{coords(l)}`, and the
/// central variables become `z_p` (`T_N(alpha_p)` over the Frobenius image,
/// `alpha_p` itself over a center span).
struct Coordinates<'a> {
    basis: &'a ModuleBasis,
    lattice: Lattice,
    frobenius: bool,
}

impl<'a> Coordinates<'a> {
    fn new(basis: &'a ModuleBasis) -> Self {
        let torus = basis.torus();
        let (lattice, frobenius) = match basis.subring() {
            Subring::FrobeniusImage => (Lattice::scaled_standard(torus.rank(), torus.order()), true),
            Subring::Center(l) => (l.clone(), false),
        };
        Coordinates {
            basis,
            lattice,
            frobenius,
        }
    }

    fn nvars(&self) -> usize {
        self.basis.torus().rank() + self.basis.torus().punctures()
    }

    fn to_laurent(&self, c: &TorusElement) -> Result<LaurentPoly> {
        let torus = self.basis.torus();
        let root = torus.root();
        let n = torus.order();
        let mut out = LaurentPoly::zero(root, self.nvars());
        for (k, cheb) in c.terms() {
            let coords = self
                .lattice
                .coordinates(k)
                .ok_or_else(|| Error::BasisNotClosed { exponent: k.clone() })?;
            let weyl = Cyclo::zeta_power(root, -torus.form().weyl_exponent(k));
            for (a, coef) in cheb.terms() {
                let mut poly = LaurentPoly::monomial(
                    coords.iter().copied().chain(a.iter().map(|_| 0)).collect(),
                    coef * &weyl,
                );
                for (p, &m) in a.iter().enumerate() {
                    let deg = if self.frobenius {
                        if m % n != 0 {
                            return Err(Error::BasisNotClosed { exponent: k.clone() });
                        }
                        m / n
                    } else {
                        m
                    };
                    let mut factor = LaurentPoly::zero(root, self.nvars());
                    for (j, cj) in chebyshev_t(deg as usize).coeffs().iter().enumerate() {
                        let mut e = vec![0; self.nvars()];
                        e[torus.rank() + p] = j as i64;
                        factor.add_term(e, &Cyclo::from_rational(root, cj.clone()));
                    }
                    poly = poly.mul(&factor);
                }
                out = out.add(&poly);
            }
        }
        Ok(out)
    }

    fn from_laurent(&self, f: &LaurentPoly) -> TorusElement {
        let torus = self.basis.torus();
        let root = torus.root();
        let rank = torus.rank();
        let np = torus.punctures();
        let mut out = torus.zero();
        for (e, c) in f.terms() {
            let k: Exponent = self.lattice.combine(&e[..rank]);
            let weyl = Cyclo::zeta_power(root, torus.form().weyl_exponent(&k));
            let mut alpha = ChebPoly::one(root, np);
            for p in 0..np {
                let j = e[rank + p];
                assert!(j >= 0, "negative central exponent");
                let factor = if self.frobenius {
                    let tn = ChebPoly::t(root, np, p, torus.order());
                    let mut acc = ChebPoly::one(root, np);
                    for _ in 0..j {
                        acc = acc.mul(&tn);
                    }
                    acc
                } else {
                    ChebPoly::power(root, np, p, j as u32)
                };
                alpha = alpha.mul(&factor);
            }
            out.add_term(k, &alpha.scale(&(c * &weyl)));
        }
        out
    }
}

/// Solves `t * s = 1` over the fraction field of the subring of `basis`
/// and returns `s` with its denominator cleared.
///
/// The left-multiplication matrix of `t` is reduced by fraction-free
/// elimination, so every intermediate value stays a Laurent polynomial.
pub fn division_witness(t: &TorusElement, basis: &ModuleBasis) -> Result<InverseWitness> {
    if t.is_zero() {
        return Err(Error::NotInvertible);
    }
    let coords = Coordinates::new(basis);
    let d = basis.len();
    let mut a: Vec<Vec<LaurentPoly>> = vec![Vec::with_capacity(d + 1); d];
    for i in 0..d {
        let col = basis.decompose(&(t * &basis.element(i)))?;
        for (row, c) in a.iter_mut().zip(&col) {
            row.push(coords.to_laurent(c)?);
        }
    }
    let rhs = basis.decompose(&basis.torus().one())?;
    for (row, c) in a.iter_mut().zip(&rhs) {
        row.push(coords.to_laurent(c)?);
    }
    let (x, det) = bareiss_solve(a).ok_or(Error::NotInvertible)?;

    // Clear negative central exponents by a common monomial factor.
    let rank = basis.torus().rank();
    let mut shift = vec![0i64; coords.nvars()];
    for p in x.iter().chain(core::iter::once(&det)) {
        if let Some(m) = p.min_exponent() {
            for j in rank..coords.nvars() {
                shift[j] = shift[j].max(-m[j]);
            }
        }
    }
    let mut numerator = basis.torus().zero();
    for (i, xi) in x.iter().enumerate() {
        if !xi.is_zero() {
            let c = coords.from_laurent(&xi.shift(&shift));
            numerator = &numerator + &(&c * &basis.element(i));
        }
    }
    Ok(InverseWitness {
        numerator,
        denominator: coords.from_laurent(&det.shift(&shift)),
    })
}

/// Fraction-free Gaussian elimination on an augmented `d x (d+1)` system.
/// Returns `(X, D)` with `M X = D b` and `D` a nonzero multiple of `det M`.
fn bareiss_solve(mut a: Vec<Vec<LaurentPoly>>) -> Option<(Vec<LaurentPoly>, LaurentPoly)> {
    let d = a.len();
    let root = a[0][0].root().clone();
    let nv = a[0][0].nvars();
    let mut prev = LaurentPoly::constant(Cyclo::one(&root), nv);
    for k in 0..d {
        // The sparsest pivot keeps the intermediate minors small.
        let p = (k..d)
            .filter(|&r| !a[r][k].is_zero())
            .min_by_key(|&r| a[r][k].terms().len())?;
        a.swap(k, p);
        for i in k + 1..d {
            for j in k + 1..=d {
                let v = a[k][k].mul(&a[i][j]).sub(&a[i][k].mul(&a[k][j]));
                a[i][j] = v.exact_div(&prev).expect("fraction-free step divides exactly");
            }
            a[i][k] = LaurentPoly::zero(&root, nv);
        }
        prev = a[k][k].clone();
    }
    let det = prev;
    let mut x = vec![LaurentPoly::zero(&root, nv); d];
    for i in (0..d).rev() {
        let mut acc = det.mul(&a[i][d]);
        for j in i + 1..d {
            acc = acc.sub(&a[i][j].mul(&x[j]));
        }
        x[i] = acc.exact_div(&a[i][i]).expect("back substitution divides exactly");
    }
    Some((x, det))
}
