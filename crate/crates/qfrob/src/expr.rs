//! Element expressions for the `trace` command.
//!
//! ```text
//! expr   := ['+' | '-'] term (('+' | '-') term)*
//! term   := factor (['*'] factor)*
//! factor := rational | 'q' ['^' int] | 'zeta' ['^' int]
//!         | ('a' | 'b' | 'c' | 'd') ['^' nat]
//!         | 'x[' nat ']' ['^' int] | 'alpha[' nat ']' ['^' nat]
//! int    := ['-'] digits | '(' ['-'] digits ')'
//! ```
//!
//! Letters `a, b, c, d` build an `O_q(SL_2)` element; `x[i]` and `alpha[p]`
//! build a quantum torus element. The two kinds cannot be mixed.

use std::sync::Arc;

use num_rational::BigRational;
use qfrob_core::oqsl2::{Gen, OqElement};
use qfrob_core::qtorus::{Torus, TorusElement};
use qfrob_core::scalars::{ChebPoly, Cyclo, RootData};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExprError {
    #[error("unexpected {found} at offset {at}")]
    Unexpected { at: usize, found: String },
    #[error("negative exponent on {0}")]
    NegativeExponent(char),
    #[error("expression mixes O_q(SL_2) letters with torus generators")]
    Mixed,
    #[error("generator x[{index}] out of range for a rank {rank} torus")]
    OutOfRange { index: usize, rank: usize },
}

#[derive(Clone, Debug, PartialEq)]
pub enum Factor {
    Scalar(BigRational),
    /// `zeta^m`; `q^k` is stored as `zeta^{2k}`.
    Zeta(i64),
    Gen(Gen, u32),
    X(usize, i64),
    Alpha(usize, u32),
}

#[derive(Clone, Debug, PartialEq)]
pub struct Term {
    pub negative: bool,
    pub factors: Vec<Factor>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Expr {
    pub terms: Vec<Term>,
}

/// An evaluated expression.
#[derive(Clone, Debug)]
pub enum Element {
    Bigon(OqElement),
    Torus(TorusElement),
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, s: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(s) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    fn error<T>(&mut self) -> Result<T, ExprError> {
        self.skip_ws();
        let found = match self.src[self.pos..].chars().next() {
            Some(c) => format!("'{c}'"),
            None => "end of input".into(),
        };
        Err(ExprError::Unexpected { at: self.pos, found })
    }

    fn digits(&mut self) -> Result<&'a str, ExprError> {
        self.skip_ws();
        let start = self.pos;
        while self.src[self.pos..].starts_with(|c: char| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.error();
        }
        Ok(&self.src[start..self.pos])
    }

    fn nat(&mut self) -> Result<u64, ExprError> {
        let at = self.pos;
        self.digits()?.parse().map_err(|_| ExprError::Unexpected {
            at,
            found: "oversized integer".into(),
        })
    }

    fn int(&mut self) -> Result<i64, ExprError> {
        let paren = self.eat("(");
        let neg = self.eat("-");
        let v = self.nat()? as i64;
        if paren && !self.eat(")") {
            return self.error();
        }
        Ok(if neg { -v } else { v })
    }

    fn exponent(&mut self) -> Result<i64, ExprError> {
        if self.eat("^") {
            self.int()
        } else {
            Ok(1)
        }
    }

    fn index(&mut self) -> Result<usize, ExprError> {
        if !self.eat("[") {
            return self.error();
        }
        let i = self.nat()? as usize;
        if !self.eat("]") {
            return self.error();
        }
        Ok(i)
    }

    fn factor(&mut self) -> Result<Factor, ExprError> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let p: num_bigint::BigInt = self.digits()?.parse().expect("digits");
                let q: num_bigint::BigInt = if self.eat("/") {
                    self.digits()?.parse().expect("digits")
                } else {
                    1.into()
                };
                if q == 0.into() {
                    return self.error();
                }
                Ok(Factor::Scalar(BigRational::new(p, q)))
            }
            _ if self.eat("alpha") => {
                let p = self.index()?;
                let m = self.exponent()?;
                u32::try_from(m)
                    .map(|m| Factor::Alpha(p, m))
                    .map_err(|_| ExprError::NegativeExponent('α'))
            }
            _ if self.eat("zeta") => Ok(Factor::Zeta(self.exponent()?)),
            _ if self.eat("x") => {
                let i = self.index()?;
                Ok(Factor::X(i, self.exponent()?))
            }
            _ if self.eat("q") => Ok(Factor::Zeta(2 * self.exponent()?)),
            Some(c) => match Gen::from_letter(c) {
                Some(g) => {
                    self.pos += 1;
                    let e = self.exponent()?;
                    u32::try_from(e)
                        .map(|e| Factor::Gen(g, e))
                        .map_err(|_| ExprError::NegativeExponent(c))
                }
                None => self.error(),
            },
            None => self.error(),
        }
    }

    fn term(&mut self, negative: bool) -> Result<Term, ExprError> {
        let mut factors = vec![self.factor()?];
        loop {
            match self.peek() {
                None | Some('+') | Some('-') => break,
                _ => {
                    self.eat("*");
                    factors.push(self.factor()?);
                }
            }
        }
        Ok(Term { negative, factors })
    }
}

pub fn parse(src: &str) -> Result<Expr, ExprError> {
    let mut p = Parser { src, pos: 0 };
    let mut negative = p.eat("-");
    if !negative {
        p.eat("+");
    }
    let mut terms = Vec::new();
    loop {
        terms.push(p.term(negative)?);
        if p.eat("+") {
            negative = false;
        } else if p.eat("-") {
            negative = true;
        } else if p.peek().is_none() {
            return Ok(Expr { terms });
        } else {
            return p.error();
        }
    }
}

impl Expr {
    fn factors(&self) -> impl Iterator<Item = &Factor> {
        self.terms.iter().flat_map(|t| t.factors.iter())
    }

    pub fn is_bigon(&self) -> bool {
        self.factors().any(|f| matches!(f, Factor::Gen(..)))
    }

    pub fn is_torus(&self) -> bool {
        self.factors().any(|f| matches!(f, Factor::X(..) | Factor::Alpha(..)))
    }

    /// Number of punctures needed to interpret the `alpha[p]` factors.
    pub fn punctures(&self) -> usize {
        self.factors()
            .filter_map(|f| match f {
                Factor::Alpha(p, _) => Some(p + 1),
                _ => None,
            })
            .max()
            .unwrap_or(0)
    }

    fn scalar(t: &Term, root: &Arc<RootData>) -> Cyclo {
        let mut c = Cyclo::one(root);
        if t.negative {
            c = -&c;
        }
        for f in &t.factors {
            match f {
                Factor::Scalar(r) => c = c.scale(r),
                Factor::Zeta(m) => c = c.mul_zeta(*m),
                _ => {}
            }
        }
        c
    }

    pub fn to_bigon(&self, root: &Arc<RootData>) -> Result<OqElement, ExprError> {
        if self.is_torus() {
            return Err(ExprError::Mixed);
        }
        let mut acc = OqElement::zero(root);
        for t in &self.terms {
            let mut word = Vec::new();
            for f in &t.factors {
                if let Factor::Gen(g, e) = f {
                    word.extend(std::iter::repeat(*g).take(*e as usize));
                }
            }
            let mono = OqElement::one(root).mul_word(&word);
            acc = &acc + &mono.scale(&Self::scalar(t, root));
        }
        Ok(acc)
    }

    pub fn to_torus(&self, torus: &Torus) -> Result<TorusElement, ExprError> {
        if self.is_bigon() {
            return Err(ExprError::Mixed);
        }
        let root = torus.root();
        let mut acc = torus.zero();
        for t in &self.terms {
            let mut prod = torus.one();
            for f in &t.factors {
                let next = match f {
                    Factor::X(i, k) => {
                        if *i >= torus.rank() {
                            return Err(ExprError::OutOfRange {
                                index: *i,
                                rank: torus.rank(),
                            });
                        }
                        torus.generator(*i, *k)
                    }
                    Factor::Alpha(p, m) => torus.term(
                        vec![0; torus.rank()],
                        ChebPoly::power(root, torus.punctures(), *p, *m),
                    ),
                    _ => continue,
                };
                prod = &prod * &next;
            }
            acc = &acc + &prod.scale(&Self::scalar(t, root));
        }
        Ok(acc)
    }

    /// Evaluates as a bigon element when `a, b, c, d` occur, else in `torus`.
    pub fn evaluate(&self, root: &Arc<RootData>, torus: impl FnOnce() -> Torus) -> Result<Element, ExprError> {
        if self.is_bigon() {
            self.to_bigon(root).map(Element::Bigon)
        } else {
            self.to_torus(&torus()).map(Element::Torus)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use qfrob_core::oqsl2::{normal_form, Pbw};
    use qfrob_core::qtorus::SkewForm;

    #[test]
    fn parses_bigon_words() {
        let root = RootData::new(3).unwrap();
        let e = parse("a*d*b^2 c^2").unwrap();
        assert!(e.is_bigon());
        let x = e.to_bigon(&root).unwrap();
        let want = normal_form(&root, &[(Gen::A, 1), (Gen::D, 1), (Gen::B, 2), (Gen::C, 2)]);
        assert_eq!(x, want);
        // ad - q^-2 bc = 1
        let one = parse("a d - q^(-2) b c").unwrap().to_bigon(&root).unwrap();
        assert_eq!(one, OqElement::one(&root));
        let two = parse("-1/2 + 3/2").unwrap().to_bigon(&root).unwrap();
        assert_eq!(two, OqElement::one(&root));
        let ba = parse("b a").unwrap().to_bigon(&root).unwrap();
        assert_eq!(
            ba,
            OqElement::monomial(&root, Pbw::new(1, 1, 0, 0).unwrap()).scale(&Cyclo::zeta_power(&root, 4))
        );
    }

    #[test]
    fn parses_torus_terms() {
        let root = RootData::new(3).unwrap();
        let e = parse("2 x[0]^-1 x[1]^2 alpha[0]^2 + zeta").unwrap();
        assert!(e.is_torus());
        assert_eq!(e.punctures(), 1);
        let t = Torus::new(SkewForm::unnamed(vec![vec![0, 1], vec![-1, 0]]).unwrap(), root.clone(), 1);
        let x = e.to_torus(&t).unwrap();
        let alpha2 = t.term(vec![0, 0], ChebPoly::power(&root, 1, 0, 2));
        let want = &(&(&t.generator(0, -1) * &t.generator(1, 2)) * &alpha2).scale(&Cyclo::from_int(&root, 2))
            + &t.scalar(Cyclo::zeta_power(&root, 1));
        assert_eq!(x, want);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(parse("a^-1"), Err(ExprError::NegativeExponent('a'))));
        assert!(matches!(parse("a +"), Err(ExprError::Unexpected { .. })));
        assert!(matches!(parse("y"), Err(ExprError::Unexpected { .. })));
        assert!(matches!(parse("x[0"), Err(ExprError::Unexpected { .. })));
        assert!(matches!(parse("1/0"), Err(ExprError::Unexpected { .. })));
        let root = RootData::new(3).unwrap();
        assert!(matches!(parse("a x[0]").unwrap().to_bigon(&root), Err(ExprError::Mixed)));
        let t = Torus::classical(1, root, 0);
        assert!(matches!(
            parse("x[3]").unwrap().to_torus(&t),
            Err(ExprError::OutOfRange { index: 3, rank: 1 })
        ));
    }
}
