//! Specializations of `O_q(SL_2)` at points of `SL_2`: dimension, closure,
//! the normalized trace and its Gram matrix, and tensor products.

use std::sync::Arc;

use qfrob_core::oqsl2::{specialize, specialize_generic, tensor_specializations, SlPoint};
use qfrob_core::scalars::{Cyclo, RootData};
use qfrob_core::trace_engine::{
    check_associativity, check_unit, frobenius_certificate, trace_f, Algebra, TableAlgebra,
};
use rand::Rng;
use serde_json::{json, Value};

use super::{check_rng, root, Check, Outcome, RunConfig};
use crate::fixture::{load_point, FixtureError};
use crate::json;

pub const DEFAULT_POINTS: [&str; 3] = ["rho_identity", "rho_diag", "rho_lower"];

/// Everything measured about one specialization.
#[derive(Clone, Debug)]
pub struct PointSummary {
    pub label: String,
    pub dim: usize,
    pub unit: bool,
    pub associative: bool,
    pub symmetric: bool,
    pub trace_one: bool,
    pub determinant: Cyclo,
    /// A basis element that is central and nilpotent, if any.
    pub radical_witness: Option<String>,
}

impl PointSummary {
    pub fn structure_ok(&self, n: u32) -> bool {
        self.dim == (n * n * n) as usize && self.unit && self.associative && self.symmetric && self.trace_one
    }

    pub fn nonsingular(&self) -> bool {
        !self.determinant.is_zero()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "point": self.label,
            "dim": self.dim,
            "unit": self.unit,
            "associative": self.associative,
            "symmetric": self.symmetric,
            "trace_one": self.trace_one,
            "gram_determinant": json::cyclo(&self.determinant),
            "central_nilpotent": self.radical_witness,
        })
    }
}

fn basis_vector(dim: usize, i: usize, root: &Arc<RootData>) -> Vec<Cyclo> {
    let mut v = vec![Cyclo::zero(root); dim];
    v[i] = Cyclo::one(root);
    v
}

/// First basis element `e` with `e x = x e` for all basis `x` and `e^dim = 0`.
pub fn central_nilpotent(alg: &TableAlgebra<Cyclo>, root: &Arc<RootData>) -> Option<String> {
    let dim = alg.dim();
    let basis: Vec<Vec<Cyclo>> = (0..dim).map(|i| basis_vector(dim, i, root)).collect();
    (1..dim).find_map(|i| {
        let e = &basis[i];
        let central = basis.iter().all(|x| alg.mul(e, x) == alg.mul(x, e));
        if !central {
            return None;
        }
        let mut p = e.clone();
        for _ in 1..dim {
            if p.iter().all(Cyclo::is_zero) {
                break;
            }
            p = alg.mul(&p, e);
        }
        p.iter().all(Cyclo::is_zero).then(|| alg.label(i).to_string())
    })
}

pub fn summarize(label: &str, alg: &TableAlgebra<Cyclo>, root: &Arc<RootData>) -> PointSummary {
    let cert = frobenius_certificate(alg);
    let radical_witness = if cert.determinant.is_zero() {
        central_nilpotent(alg, root)
    } else {
        None
    };
    PointSummary {
        label: label.to_string(),
        dim: alg.dim(),
        unit: check_unit(alg).is_ok(),
        associative: check_associativity(alg).is_ok(),
        symmetric: cert.symmetric,
        trace_one: trace_f(alg, &alg.unit_dense()).is_one(),
        determinant: cert.determinant,
        radical_witness,
    }
}

pub fn summarize_point(label: &str, point: &SlPoint) -> qfrob_core::Result<PointSummary> {
    let s = specialize(point)?;
    Ok(summarize(label, &s.algebra, point.root()))
}

pub fn structure(n: u32, summaries: &[PointSummary]) -> Outcome {
    let ok = summaries.iter().all(|s| s.structure_ok(n));
    Outcome::new(ok, Value::Array(summaries.iter().map(PointSummary::to_json).collect()))
}

pub fn gram(summaries: &[PointSummary]) -> Outcome {
    let ok = summaries.iter().all(PointSummary::nonsingular);
    Outcome::new(ok, Value::Array(summaries.iter().map(PointSummary::to_json).collect()))
}

pub fn tensor(points: &[SlPoint], rng: &mut impl Rng) -> Outcome {
    let t = match tensor_specializations(points) {
        Ok(t) => t,
        Err(e) => return e.into(),
    };
    let root = points[0].root();
    let n = root.order() as usize;
    let want_dim = (n * n * n).pow(points.len() as u32);
    let unit_ok = t.unit() == vec![(0, Cyclo::one(root))];
    let traces = t.basis_traces();
    let factor_traces: Vec<Vec<Cyclo>> = t.factors().iter().map(|f| f.basis_traces()).collect();
    let mut multiplicative = true;
    for _ in 0..64 {
        let idx: Vec<usize> = factor_traces.iter().map(|f| rng.gen_range(0..f.len())).collect();
        let mut flat = 0;
        let mut prod = Cyclo::one(root);
        for (f, &i) in factor_traces.iter().zip(&idx) {
            flat = flat * f.len() + i;
            prod = &prod * &f[i];
        }
        multiplicative &= traces[flat] == prod;
    }
    let dim = t.dim();
    Outcome::new(
        dim == want_dim && unit_ok && multiplicative,
        json!({ "dim": dim, "expected": want_dim, "unit": unit_ok, "trace_multiplicative": multiplicative }),
    )
}

/// The quotient at a point in `W`, reported without an expected value.
pub fn w_point(label: &str, point: &SlPoint) -> Outcome {
    match specialize_generic(point) {
        Ok(alg) => Outcome::info(summarize(label, &alg, point.root()).to_json()),
        Err(e) => Outcome::info(json!({ "point": label, "error": e.to_string() })),
    }
}

/// Structure and Gram checks for `points`, plus the tensor check on the
/// first two when there are at least two.
pub fn point_check(n: u32, seed: u64, points: Vec<(String, SlPoint)>) -> Check {
    Check::hard(
        "specialize.points",
        "each specialization is a closed N^3-dimensional Frobenius algebra with symmetric trace and Trace(1) = 1, \
         and the tensor product of two has dimension N^6 with multiplicative trace",
        move || {
            let summaries: Result<Vec<_>, _> = points
                .iter()
                .map(|(l, p)| summarize_point(l, p).map_err(|e| format!("{l}: {e}")))
                .collect();
            let summaries = match summaries {
                Ok(s) => s,
                Err(e) => return Outcome::new(false, json!({ "error": e })),
            };
            let mut parts = vec![("structure", structure(n, &summaries)), ("gram", gram(&summaries))];
            if points.len() >= 2 {
                let pair: Vec<SlPoint> = points.iter().take(2).map(|(_, p)| p.clone()).collect();
                parts.push(("tensor", tensor(&pair, &mut check_rng(seed, "specialize.tensor"))));
            }
            Outcome::all(parts)
        },
    )
    .criterion(7)
}

fn stem(path: &str) -> String {
    std::path::Path::new(path)
        .file_stem()
        .and_then(|s| s.to_str())
        .unwrap_or(path)
        .to_string()
}

pub fn load_points(paths: &[String], root: &Arc<RootData>) -> Result<Vec<(String, SlPoint)>, FixtureError> {
    paths.iter().map(|p| Ok((stem(p), load_point(p, root)?))).collect()
}

pub fn checks(cfg: &RunConfig) -> Result<Vec<Check>, FixtureError> {
    let n = cfg.order(3);
    let r = root(n)?;
    let paths: Vec<String> = if cfg.points.is_empty() {
        DEFAULT_POINTS.iter().map(|s| s.to_string()).collect()
    } else {
        cfg.points.clone()
    };
    let points = load_points(&paths, &r)?;
    if let Some((l, _)) = points.iter().find(|(_, p)| p.in_w()) {
        return Err(FixtureError::Invalid {
            path: l.clone(),
            reason: "point lies in W (a and d both vanish); use the exploratory W-point check".into(),
        });
    }
    let mut out = vec![point_check(n, cfg.seed, points)];
    if cfg.exploratory {
        let generic = load_point("rho_generic", &r)?;
        out.push(Check::exploratory(
            "specialize.generic_point",
            "Gram determinant at a point with all four entries nonzero",
            move || Outcome::info(match summarize_point("rho_generic", &generic) {
                Ok(s) => s.to_json(),
                Err(e) => json!({ "error": e.to_string() }),
            }),
        ));
        let w = load_point("rho_w", &r)?;
        out.push(Check::exploratory(
            "specialize.w_point",
            "the quotient at a point where a and d both vanish",
            move || w_point("rho_w", &w),
        ));
    }
    Ok(out)
}
