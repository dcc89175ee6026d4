//! Exact JSON encodings of scalars and algebra elements for reports.
//!
//! A scalar in `Q(zeta)` is the array of its power-basis coefficients as
//! `"p/q"` strings. Torus elements are lists of
//! `{ "alpha": {p: m}, "k": [..], "coef": scalar }`, where `alpha` lists the
//! nonzero Chebyshev indices `T_m(alpha_p)` of the coefficient term.

use qfrob_core::oqsl2::OqElement;
use qfrob_core::qtorus::TorusElement;
use qfrob_core::scalars::Cyclo;
use serde_json::{json, Map, Value};

pub fn cyclo(c: &Cyclo) -> Value {
    Value::Array(c.coeffs().iter().map(|r| Value::String(r.to_string())).collect())
}

pub fn torus(t: &TorusElement) -> Value {
    let mut out = Vec::new();
    for (k, poly) in t.terms() {
        for (a, c) in poly.terms() {
            let alpha: Map<String, Value> = a
                .iter()
                .enumerate()
                .filter(|(_, &m)| m != 0)
                .map(|(p, &m)| (p.to_string(), json!(m)))
                .collect();
            out.push(json!({ "alpha": alpha, "k": k, "coef": cyclo(c) }));
        }
    }
    Value::Array(out)
}

pub fn oq(x: &OqElement) -> Value {
    Value::Array(
        x.terms()
            .iter()
            .map(|(m, c)| json!({ "monomial": m.to_string(), "coef": cyclo(c) }))
            .collect(),
    )
}
