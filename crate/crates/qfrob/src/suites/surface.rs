//! Surface invariants, the alternating-pattern subgroup and the trace over a
//! central span.

use std::sync::Arc;

use qfrob_core::qtorus::{brute_force_trace, central_lattice, trace_over_center, BasisMonomial, ModuleBasis, Subring, Torus};
use qfrob_core::scalars::RootData;
use qfrob_core::surface::BSpec;
use rand::Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use super::torus::random_monomial;
use super::{check_rng, root, Check, Outcome, RunConfig};
use crate::fixture::{load_surface, FixtureError, SurfaceFixture};
use crate::json;

pub fn checks(cfg: &RunConfig) -> Result<Vec<Check>, FixtureError> {
    let n = cfg.order(3);
    let r = root(n)?;
    let seed = cfg.seed;
    let fixture = load_surface(cfg.surface.as_deref().unwrap_or("square"))?;
    // Rejects forms for which the subgroup is not central before anything runs.
    let (_, spec, _) = fixture.central_b_spec(n)?;
    let mut out = vec![Check::hard(
        "surface.formula_table",
        "r = -chi + #boundary arcs, |generators| = 3r - P, expected dimensions N^3r and N^(3r - |Lambda| - P)",
        move || formula_table(n),
    )
    .criterion(10)];
    let f1 = fixture.clone();
    out.push(
        Check::hard(
            "surface.subgroup_trace",
            "membership in the alternating-pattern subgroup agrees with its lattice generators, and the trace over \
             its span keeps exactly its monomials, matching the defining trace over its transversal",
            move || {
                let mut rng = check_rng(seed, "surface.subgroup_trace");
                Outcome::all(vec![
                    ("membership", b_membership(&spec, &mut rng)),
                    ("oracle", center_trace_oracle(&r, &f1, 50, &mut rng)),
                ])
            },
        )
        .criterion(6),
    );
    if cfg.exploratory {
        out.push(Check::exploratory(
            "surface.b_vs_central_lattice",
            "comparison of the alternating-pattern subgroup with the full central lattice of the fixture form",
            move || b_vs_central(&fixture, n),
        ));
    }
    Ok(out)
}

/// `(name, genus, boundary, interior, chi, r, |generators|, |Lambda|)`.
pub const TABLE: [(&str, u32, &[u32], u32, i64, i64, usize, usize); 4] = [
    ("triangle", 0, &[3], 0, 1, 2, 6, 0),
    ("square", 0, &[4], 0, 1, 3, 9, 1),
    ("annulus", 0, &[1, 1], 0, 0, 2, 6, 0),
    ("punctured_monogon", 0, &[1], 1, 0, 1, 2, 0),
];

/// Invariants of a surface fixture, as printed by `surface info`.
pub fn info(fixture: &SurfaceFixture, n: u32) -> Value {
    let s = &fixture.surface;
    let dims = s.expected_dims(n);
    json!({
        "name": fixture.name,
        "genus": s.genus(),
        "boundary": s.boundary(),
        "interior": s.interior(),
        "euler_characteristic": s.euler_char(),
        "r": s.r_invariant(),
        "generators": s.tau_bar_size().ok(),
        "lambda": s.lambda_set().len(),
        "n": n,
        "dim_over_frobenius": dims.over_frobenius.to_string(),
        "dim_over_center": dims.over_center.to_string(),
    })
}

pub fn formula_table(n: u32) -> Outcome {
    let mut ok = true;
    let mut rows = Vec::new();
    for (name, genus, boundary, interior, chi, r, size, lambda) in TABLE {
        let fixture = match load_surface(name) {
            Ok(f) => f,
            Err(e) => return Outcome::new(false, json!({ "error": e.to_string() })),
        };
        let s = &fixture.surface;
        let dims = s.expected_dims(n);
        let big = |e: i64| num_bigint::BigUint::from(n).pow(e as u32);
        let want_frob = big(3 * r);
        let want_center = big(3 * r - lambda as i64 - interior as i64);
        let row_ok = s.genus() == genus
            && s.boundary() == boundary
            && s.interior() == interior
            && s.euler_char() == chi
            && s.r_invariant() == r
            && s.tau_bar_size().ok() == Some(size)
            && s.lambda_set().len() == lambda
            && dims.over_frobenius == want_frob
            && dims.over_center == want_center;
        ok &= row_ok;
        let mut row = info(&fixture, n);
        row["matches"] = json!(row_ok);
        rows.push(row);
    }
    Outcome::new(ok, Value::Array(rows))
}

/// Every residue pattern on the doubled boundary arcs, once with zeros and
/// once with random multiples of `N` elsewhere.
pub fn b_membership(spec: &BSpec, rng: &mut impl Rng) -> Outcome {
    let n = spec.modulus() as i64;
    let size = spec.layout().size();
    let arcs: Vec<usize> = spec.layout().circles().iter().flat_map(|c| c.indices.clone()).collect();
    let lattice = spec.generators();
    let total = (n as usize).pow(arcs.len() as u32);
    let mut members = 0;
    for code in 0..total {
        let mut v = vec![0i64; size];
        let mut c = code;
        for &i in &arcs {
            v[i] = (c % n as usize) as i64;
            c /= n as usize;
        }
        let mut shifted = v.clone();
        for (i, x) in shifted.iter_mut().enumerate() {
            *x += if arcs.contains(&i) { n * rng.gen_range(-2..=2) } else { rng.gen_range(-2 * n..=2 * n) };
        }
        for k in [&v, &shifted] {
            let direct = match spec.contains(k) {
                Ok(b) => b,
                Err(e) => return e.into(),
            };
            if direct != lattice.contains(k) {
                return Outcome::new(
                    false,
                    json!({ "exponent": k, "membership": direct, "lattice": !direct }),
                );
            }
        }
        members += usize::from(spec.contains(&v).unwrap_or(false));
    }
    Outcome::new(
        true,
        json!({ "n": n, "arcs": arcs, "patterns": total, "members": members, "index": lattice.index() }),
    )
}

pub fn center_trace_oracle(root: &Arc<RootData>, fixture: &SurfaceFixture, samples: usize, rng: &mut impl Rng) -> Outcome {
    let n = root.order();
    let (form, spec, lattice) = match fixture.central_b_spec(n) {
        Ok(v) => v,
        Err(e) => return Outcome::new(false, json!({ "error": e.to_string() })),
    };
    let torus = Torus::new(form, root.clone(), fixture.surface.interior() as usize);
    let elements = spec
        .transversal()
        .into_iter()
        .map(|exponent| BasisMonomial {
            alpha: vec![0; torus.punctures()],
            exponent,
        })
        .collect();
    let basis = match ModuleBasis::with_elements(&torus, Subring::Center(lattice.clone()), elements) {
        Ok(b) => b,
        Err(e) => return e.into(),
    };
    // Half the samples are moved into the subgroup so both branches are exercised.
    let draws: Vec<_> = (0..samples)
        .map(|i| {
            let t = random_monomial(rng, &torus);
            if i % 2 == 1 {
                return t;
            }
            let (_, c) = t.as_monomial().expect("monomial");
            let coefs: Vec<i64> = (0..lattice.rows().len()).map(|_| rng.gen_range(-2..=2)).collect();
            torus.term(lattice.combine(&coefs), c.clone())
        })
        .collect();
    let results: Vec<Result<Option<Value>, qfrob_core::Error>> = draws
        .par_iter()
        .map(|t| {
            let projected = trace_over_center(t, &lattice)?;
            let oracle = brute_force_trace(t, &basis)?;
            Ok((projected != oracle).then(|| {
                json!({
                    "element": json::torus(t),
                    "projection": json::torus(&projected),
                    "oracle": json::torus(&oracle),
                })
            }))
        })
        .collect();
    let mut nonzero = 0;
    for (t, r) in draws.iter().zip(results) {
        match r {
            Err(e) => return e.into(),
            Ok(Some(w)) => return Outcome::new(false, w),
            Ok(None) => nonzero += usize::from(!trace_over_center(t, &lattice).map(|x| x.is_zero()).unwrap_or(true)),
        }
    }
    Outcome::new(
        true,
        json!({
            "n": n,
            "basis_size": basis.len(),
            "samples": samples,
            "nonzero_traces": nonzero,
        }),
    )
}

pub fn b_vs_central(fixture: &SurfaceFixture, n: u32) -> Outcome {
    let (form, _, b) = match fixture.central_b_spec(n) {
        Ok(v) => v,
        Err(e) => return Outcome::info(json!({ "error": e.to_string() })),
    };
    let center = central_lattice(&form, n);
    Outcome::info(json!({
        "n": n,
        "subgroup_index": b.index(),
        "central_index": center.index(),
        "subgroup_in_center": b.is_sublattice_of(&center),
        "equal": b.is_sublattice_of(&center) && center.is_sublattice_of(&b),
    }))
}
