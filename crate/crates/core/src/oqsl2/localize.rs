use alloc::string::ToString;
use alloc::sync::Arc;
use alloc::vec;

use super::OqElement;
use crate::qtorus::{central_lattice, trace_over_center, trace_over_frobenius, Lattice, SkewForm, Torus, TorusElement};
use crate::scalars::{Cyclo, RootData};

/// The rank-3 torus on `(d, b, c)` with `db = q^2 bd`, `dc = q^2 cd`,
/// `bc = cb`, where `O_q(SL_2)` embeds once `d` is inverted.
pub fn dbc_torus(root: &Arc<RootData>) -> Torus {
    let form = SkewForm::new(
        ["d", "b", "c"].iter().map(|s| s.to_string()).collect(),
        vec![vec![0, 2, 2], vec![-2, 0, 0], vec![-2, 0, 0]],
    )
    .expect("valid form");
    Torus::new(form, root.clone(), 0)
}

/// `{(i, j, k) : i = 0, j + k = 0 mod N}`, the central exponents of the
/// `(d, b, c)` torus.
pub fn dbc_center_lattice(root: &Arc<RootData>) -> Lattice {
    central_lattice(dbc_torus(root).form(), root.order())
}

/// The image of `x` after substituting `a = (1 + q^{-2} bc) d^{-1}`.
pub fn eliminate_a(x: &OqElement) -> TorusElement {
    let torus = dbc_torus(x.root());
    eliminate_a_in(x, &torus)
}

/// As [`eliminate_a`], into a caller-provided copy of the `(d, b, c)` torus.
pub fn eliminate_a_in(x: &OqElement, torus: &Torus) -> TorusElement {
    let root = torus.root();
    let a_img = &(&torus.one() + &torus.monomial(vec![0, 1, 1]).scale(&Cyclo::zeta_power(root, -4)))
        * &torus.generator(0, -1);
    let mut out = torus.zero();
    for (m, c) in x.terms() {
        let part = &(&(&a_img.pow(m.a) * &torus.generator(1, m.b as i64)) * &torus.generator(2, m.c as i64))
            * &torus.generator(0, m.d as i64);
        out = &out + &part.scale(c);
    }
    out
}

/// The trace over the Frobenius image, computed in the localized torus.
pub fn trace_over_frobenius_fraction(x: &OqElement) -> TorusElement {
    trace_over_frobenius(&eliminate_a(x))
}

/// The trace over the center, computed in the localized torus.
pub fn trace_over_center_fraction(x: &OqElement) -> TorusElement {
    let l = dbc_center_lattice(x.root());
    trace_over_center(&eliminate_a(x), &l).expect("central lattice is central")
}
