//! `O_q(SL_2)`: the Frobenius map, the localized traces and the center
//! generators.

use std::sync::Arc;

use qfrob_core::oqsl2::{
    center_generator_check, dbc_center_lattice, dbc_torus, eliminate_a_in, normal_form,
    trace_over_center_fraction, trace_over_frobenius_fraction, verify_frobenius_hom, Gen, OqElement, Pbw,
};
use qfrob_core::qtorus::{brute_force_trace, BasisMonomial, ModuleBasis, Subring};
use qfrob_core::scalars::{Cyclo, RootData};
use rand::Rng;
use serde_json::json;

use super::{check_rng, root, Check, Outcome, RunConfig};
use crate::fixture::FixtureError;
use crate::json;

pub fn checks(cfg: &RunConfig) -> Result<Vec<Check>, FixtureError> {
    let hom_orders = cfg.orders(&[3, 5, 7]);
    for &n in &hom_orders {
        root(n)?;
    }
    let n = cfg.order(3);
    let r = root(n)?;
    let seed = cfg.seed;
    let mut out = vec![Check::hard(
        "bigon.frobenius_hom",
        "a^N, b^N, c^N, d^N pairwise commute, are central, and satisfy AD - BC = 1",
        move || frobenius_hom(&hom_orders),
    )
    .criterion(2)];
    let r1 = r.clone();
    out.push(
        Check::hard(
            "bigon.trace_frobenius",
            "Tr(d^k1 b^k2 c^k3) over the Frobenius image keeps exactly the monomials with N | k_i, \
             and Tr(a d b^(N-1) c^(N-1)) = q^-2 b^N c^N",
            move || Outcome::all(vec![("formula", trace_frobenius_formula(&r1)), ("remark", trace_remark(&r1))]),
        )
        .criterion(3),
    );
    let r2 = r.clone();
    out.push(
        Check::hard(
            "bigon.trace_center",
            "Tr(d^k1 b^k2) over the center keeps exactly the monomials with N | k_i, \
             and agrees with the defining trace over the basis {d^k1 b^k2}",
            move || {
                let mut rng = check_rng(seed, "bigon.trace_center");
                Outcome::all(vec![
                    ("formula", trace_center_formula(&r2)),
                    ("oracle", trace_center_oracle(&r2, 50, &mut rng)),
                ])
            },
        )
        .criterion(4),
    );
    out.push(Check::hard(
        "bigon.center_generators",
        "x_i = b^i c^(N-i) are central and independent over the Frobenius image",
        move || center_generators(&r),
    ));
    Ok(out)
}

pub fn frobenius_hom(orders: &[u32]) -> Outcome {
    let mut ok = true;
    let mut witness = Vec::new();
    for &n in orders {
        let r = match RootData::new(n) {
            Ok(r) => r,
            Err(e) => return e.into(),
        };
        let c = verify_frobenius_hom(&r);
        ok &= c.passed();
        witness.push(json!({
            "n": n,
            "pairwise_commute": c.pairwise_commute,
            "central": c.central,
            "determinant_one": c.determinant_one,
        }));
    }
    Outcome::new(ok, json!(witness))
}

fn dbc_word(root: &Arc<RootData>, k: [u32; 3]) -> OqElement {
    normal_form(root, &[(Gen::D, k[0]), (Gen::B, k[1]), (Gen::C, k[2])])
}

pub fn trace_frobenius_formula(root: &Arc<RootData>) -> Outcome {
    let n = root.order();
    let t = dbc_torus(root);
    let mut cases = 0;
    for k1 in 0..=2 * n {
        for k2 in 0..=2 * n {
            for k3 in 0..=2 * n {
                let k = [k1, k2, k3];
                let got = trace_over_frobenius_fraction(&dbc_word(root, k));
                let exp: Vec<i64> = k.iter().map(|&e| e as i64).collect();
                let want = if k.iter().all(|e| e % n == 0) {
                    t.monomial(exp.clone())
                } else {
                    t.zero()
                };
                cases += 1;
                if got != want {
                    return Outcome::new(
                        false,
                        json!({ "k": exp, "got": json::torus(&got), "expected": json::torus(&want) }),
                    );
                }
            }
        }
    }
    Outcome::new(true, json!({ "n": n, "cases": cases }))
}

pub fn trace_remark(root: &Arc<RootData>) -> Outcome {
    let n = root.order();
    let x = normal_form(root, &[(Gen::A, 1), (Gen::D, 1), (Gen::B, n - 1), (Gen::C, n - 1)]);
    let got = trace_over_frobenius_fraction(&x);
    let t = dbc_torus(root);
    let want = t
        .monomial(vec![0, n as i64, n as i64])
        .scale(&Cyclo::zeta_power(root, -4));
    Outcome::new(
        got == want,
        json!({
            "element": format!("a*d*b^{}*c^{}", n - 1, n - 1),
            "trace": json::torus(&got),
            "display": format!("q^-2*b^{n}*c^{n}"),
            "expected": json::torus(&want),
        }),
    )
}

pub fn trace_center_formula(root: &Arc<RootData>) -> Outcome {
    let n = root.order();
    let t = dbc_torus(root);
    let mut cases = 0;
    for k1 in 0..=2 * n {
        for k2 in 0..=2 * n {
            let got = trace_over_center_fraction(&dbc_word(root, [k1, k2, 0]));
            let exp = vec![k1 as i64, k2 as i64, 0];
            let want = if k1 % n == 0 && k2 % n == 0 {
                t.monomial(exp.clone())
            } else {
                t.zero()
            };
            cases += 1;
            if got != want {
                return Outcome::new(
                    false,
                    json!({ "k": exp, "got": json::torus(&got), "expected": json::torus(&want) }),
                );
            }
        }
    }
    Outcome::new(true, json!({ "n": n, "cases": cases }))
}

/// A random combination of up to three PBW monomials with exponents below 4.
pub fn random_bigon_element(rng: &mut impl Rng, root: &Arc<RootData>) -> OqElement {
    let mut x = OqElement::zero(root);
    for _ in 0..rng.gen_range(1..=3) {
        let (b, c, e) = (rng.gen_range(0..4), rng.gen_range(0..4), rng.gen_range(0..4));
        let m = if rng.gen_bool(0.5) {
            Pbw::new(e, b, c, 0)
        } else {
            Pbw::new(0, b, c, e)
        }
        .expect("one of a, d is absent");
        let coef = Cyclo::zeta_power(root, rng.gen_range(0..root.order() as i64)).scale(
            &num_rational::BigRational::from_integer(rng.gen_range(1..=3).into()),
        );
        x = &x + &OqElement::monomial(root, m).scale(&coef);
    }
    x
}

pub fn trace_center_oracle(root: &Arc<RootData>, samples: usize, rng: &mut impl Rng) -> Outcome {
    let n = root.order() as i64;
    let t = dbc_torus(root);
    let elements: Vec<BasisMonomial> = (0..n)
        .flat_map(|k1| {
            (0..n).map(move |k2| BasisMonomial {
                alpha: vec![],
                exponent: vec![k1, k2, 0],
            })
        })
        .collect();
    let basis = match ModuleBasis::with_elements(&t, Subring::Center(dbc_center_lattice(root)), elements) {
        Ok(b) => b,
        Err(e) => return e.into(),
    };
    for i in 0..samples {
        let x = random_bigon_element(rng, root);
        let projected = trace_over_center_fraction(&x);
        let oracle = match brute_force_trace(&eliminate_a_in(&x, &t), &basis) {
            Ok(v) => v,
            Err(e) => return e.into(),
        };
        if projected != oracle {
            return Outcome::new(
                false,
                json!({
                    "sample": i,
                    "element": json::oq(&x),
                    "projection": json::torus(&projected),
                    "oracle": json::torus(&oracle),
                }),
            );
        }
    }
    Outcome::new(true, json!({ "n": n, "samples": samples, "basis_size": basis.len() }))
}

pub fn center_generators(root: &Arc<RootData>) -> Outcome {
    let c = center_generator_check(root);
    Outcome::new(
        c.passed(),
        json!({ "n": root.order(), "central": c.central, "independent": c.independent }),
    )
}
