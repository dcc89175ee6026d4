use alloc::collections::BTreeSet;
use alloc::sync::Arc;
use alloc::vec::Vec;

use super::{eliminate_a, Gen, OqElement, Pbw};
use crate::qtorus::residue_decompose;
use crate::scalars::RootData;

/// `A = a^N`, `B = b^N`, `C = c^N`, `D = d^N`.
#[derive(Clone, Debug, PartialEq)]
pub struct FrobeniusGenerators {
    pub a: OqElement,
    pub b: OqElement,
    pub c: OqElement,
    pub d: OqElement,
}

impl FrobeniusGenerators {
    pub fn all(&self) -> [&OqElement; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }
}

pub fn frobenius_generators(root: &Arc<RootData>) -> FrobeniusGenerators {
    let n = root.order();
    let m = |a, b, c, d| OqElement::monomial(root, Pbw::new(a, b, c, d).expect("pbw"));
    FrobeniusGenerators {
        a: m(n, 0, 0, 0),
        b: m(0, n, 0, 0),
        c: m(0, 0, n, 0),
        d: m(0, 0, 0, n),
    }
}

/// Outcome of the checks that the `N`-th powers satisfy the classical
/// `SL_2` relations and lie in the center.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusHomCheck {
    pub pairwise_commute: bool,
    pub central: bool,
    pub determinant_one: bool,
}

impl FrobeniusHomCheck {
    pub fn passed(&self) -> bool {
        self.pairwise_commute && self.central && self.determinant_one
    }
}

pub fn verify_frobenius_hom(root: &Arc<RootData>) -> FrobeniusHomCheck {
    let f = frobenius_generators(root);
    let all = f.all();
    let pairwise_commute = (0..4).all(|i| (i + 1..4).all(|j| all[i].commutator(all[j]).is_zero()));
    let central = all.iter().all(|z| {
        Gen::ALL
            .iter()
            .all(|&g| z.commutator(&OqElement::generator(root, g)).is_zero())
    });
    let det = &(&f.a * &f.d) - &(&f.b * &f.c);
    FrobeniusHomCheck {
        pairwise_commute,
        central,
        determinant_one: det == OqElement::one(root),
    }
}

/// Outcome of the checks on `x_i = b^i c^{N-i}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CenterGeneratorCheck {
    /// `central[i]` for `x_i`, `0 <= i < N`.
    pub central: Vec<bool>,
    /// The `x_i` occupy distinct residue classes over the Frobenius image.
    pub independent: bool,
}

impl CenterGeneratorCheck {
    pub fn passed(&self) -> bool {
        self.independent && self.central.iter().all(|&c| c)
    }
}

/// `x_0 = 1` and `x_i = b^i c^{N-i}` for `1 <= i < N`.
pub fn center_generator(root: &Arc<RootData>, i: u32) -> OqElement {
    let n = root.order();
    if i == 0 {
        return OqElement::one(root);
    }
    OqElement::monomial(root, Pbw::new(0, i, n - i, 0).expect("pbw"))
}

pub fn center_generator_check(root: &Arc<RootData>) -> CenterGeneratorCheck {
    let n = root.order();
    let mut central = Vec::new();
    let mut classes = BTreeSet::new();
    let mut independent = true;
    for i in 0..n {
        let x = center_generator(root, i);
        central.push(
            Gen::ALL
                .iter()
                .all(|&g| x.commutator(&OqElement::generator(root, g)).is_zero()),
        );
        let res = residue_decompose(&eliminate_a(&x));
        independent &= res.len() == 1 && classes.insert(res.keys().next().cloned());
    }
    CenterGeneratorCheck {
        central,
        independent,
    }
}
