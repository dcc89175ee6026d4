//! Quantum tori: the Chebyshev filter, the trace over the Frobenius image
//! against its defining oracle, division witnesses and Gram certificates.

use std::sync::Arc;

use num_rational::BigRational;
use qfrob_core::qtorus::{
    brute_force_trace, central_lattice, BasisMonomial, Subring, division_witness, gram_certificate, trace_over_frobenius,
    Exponent, ModuleBasis, SkewForm, Torus, TorusElement,
};
use qfrob_core::scalars::{chebyshev_t, chebyshev_trace_filter, ChebPoly, Cyclo, RootData, UniPoly};
use rand::Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use super::{check_rng, root, Check, Outcome, RunConfig};
use crate::fixture::{load_form, FixtureError};
use crate::json;

pub fn checks(cfg: &RunConfig) -> Result<Vec<Check>, FixtureError> {
    let forms = cfg.forms.iter().map(|p| load_form(p)).collect::<Result<Vec<_>, _>>()?;
    let cheb_orders = cfg.orders(&[3, 5]);
    let gram_orders = cfg.orders(&[3, 5]);
    for &n in cheb_orders.iter().chain(&gram_orders) {
        root(n)?;
    }
    let n = cfg.order(3);
    let r = root(n)?;
    let seed = cfg.seed;
    let mut out = vec![Check::hard(
        "torus.chebyshev_trace",
        "Tr over C[T_N(x)] keeps T_k exactly when N | k, matching the defining trace on {T_0..T_(N-1)}",
        move || chebyshev_trace(&cheb_orders),
    )
    .criterion(1)];
    let (r1, main_forms) = (r.clone(), forms.clone());
    out.push(Check::hard(
        "torus.frobenius_trace_oracle",
        "trace over the Frobenius image keeps alpha^a x^b with N | a and N | b, matching the defining trace",
        move || {
            let mut rng = check_rng(seed, "torus.frobenius_trace_oracle");
            let forms = if main_forms.is_empty() {
                [2usize, 3]
                    .iter()
                    .flat_map(|&rank| (0..5).map(move |_| rank))
                    .map(|rank| random_form(&mut rng, rank, 3))
                    .collect()
            } else {
                main_forms.clone()
            };
            frobenius_trace_oracle(&r1, &forms, 1, 100, 20, &mut rng)
        },
    )
    .criterion(5));
    let r2 = r.clone();
    out.push(Check::hard(
        "torus.division",
        "every nonzero element of a rank-1 torus has a two-sided inverse over the fraction field of the Frobenius image",
        move || division(&r2, 50, &mut check_rng(seed, "torus.division")),
    )
    .criterion(8));
    let mut gram_forms = vec![
        SkewForm::zero(1),
        load_form("rank2").expect("bundled"),
        load_form("rank3").expect("bundled"),
        SkewForm::unnamed(vec![vec![0, 3, 0], vec![-3, 0, 0], vec![0, 0, 0]]).expect("antisymmetric"),
    ];
    gram_forms.extend(forms.into_iter().filter(|f| f.rank() <= 3));
    out.push(Check::hard(
        "torus.gram",
        "the trace pairing on the monomial residue basis is a generalized permutation matrix with monomial determinant",
        move || gram(&gram_orders, &gram_forms),
    )
    .criterion(9));
    Ok(out)
}

pub fn random_form(rng: &mut impl Rng, rank: usize, bound: i64) -> SkewForm {
    let mut e = vec![vec![0i64; rank]; rank];
    for i in 0..rank {
        for j in i + 1..rank {
            let v = rng.gen_range(-bound..=bound);
            e[i][j] = v;
            e[j][i] = -v;
        }
    }
    SkewForm::unnamed(e).expect("antisymmetric by construction")
}

fn random_scalar(rng: &mut impl Rng, root: &Arc<RootData>) -> Cyclo {
    let r = BigRational::new(rng.gen_range(1..=5).into(), rng.gen_range(1..=3).into());
    let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
    Cyclo::zeta_power(root, rng.gen_range(0..root.order() as i64)).scale(&(r * BigRational::from_integer(sign.into())))
}

/// `c * T_{m_1}(alpha_1) ... x^k` with `m_p <= 2N` and `|k_i| <= 2N`.
pub fn random_monomial(rng: &mut impl Rng, torus: &Torus) -> TorusElement {
    let n = torus.order();
    let a: Vec<u32> = (0..torus.punctures()).map(|_| rng.gen_range(0..=2 * n)).collect();
    let k: Exponent = (0..torus.rank())
        .map(|_| rng.gen_range(-2 * n as i64..=2 * n as i64))
        .collect();
    torus.cheb_monomial(a, k).scale(&random_scalar(rng, torus.root()))
}

pub fn random_sparse(rng: &mut impl Rng, torus: &Torus, terms: usize) -> TorusElement {
    let mut acc = torus.zero();
    for _ in 0..terms {
        acc = &acc + &random_monomial(rng, torus);
    }
    acc
}

pub fn chebyshev_trace(orders: &[u32]) -> Outcome {
    let mut witness = Vec::new();
    for &n in orders {
        let root = match RootData::new(n) {
            Ok(r) => r,
            Err(e) => return e.into(),
        };
        // The x-direction of this rank-1 torus is unused; the basis is T_0..T_(N-1) in alpha.
        let torus = Torus::classical(1, root.clone(), 1);
        let elements = (0..n)
            .map(|j| BasisMonomial {
                alpha: vec![j],
                exponent: vec![0],
            })
            .collect();
        let basis = match ModuleBasis::with_elements(&torus, Subring::FrobeniusImage, elements) {
            Ok(b) => b,
            Err(e) => return e.into(),
        };
        for k in 0..=4 * n as usize {
            let tk = chebyshev_t(k);
            let filtered = chebyshev_trace_filter(&tk, n as usize);
            let expected = if k % n as usize == 0 { tk } else { UniPoly::zero() };
            let oracle = match brute_force_trace(&torus.cheb(0, k as u32), &basis) {
                Ok(v) => v,
                Err(e) => return e.into(),
            };
            let as_elem = torus.term(vec![0], ChebPoly::from_univariate(&root, 1, 0, &filtered));
            if filtered != expected || oracle != as_elem {
                return Outcome::new(
                    false,
                    json!({ "n": n, "k": k, "filter": format!("{filtered:?}"), "oracle": json::torus(&oracle) }),
                );
            }
        }
        witness.push(json!({ "n": n, "k_max": 4 * n, "basis_size": basis.len() }));
    }
    Outcome::new(true, json!(witness))
}

fn compare(t: &TorusElement, basis: &ModuleBasis) -> Result<Option<Value>, qfrob_core::Error> {
    let projected = trace_over_frobenius(t);
    let oracle = brute_force_trace(t, basis)?;
    Ok((projected != oracle).then(|| {
        json!({
            "element": json::torus(t),
            "projection": json::torus(&projected),
            "oracle": json::torus(&oracle),
        })
    }))
}

pub fn frobenius_trace_oracle(
    root: &Arc<RootData>,
    forms: &[SkewForm],
    punctures: usize,
    monomials: usize,
    sparse: usize,
    rng: &mut impl Rng,
) -> Outcome {
    // Samples are drawn up front so the outcome does not depend on scheduling.
    let jobs: Vec<(usize, Vec<TorusElement>)> = forms
        .iter()
        .enumerate()
        .map(|(i, f)| {
            let torus = Torus::new(f.clone(), root.clone(), punctures);
            let mut samples: Vec<TorusElement> = (0..monomials).map(|_| random_monomial(rng, &torus)).collect();
            for _ in 0..sparse {
                let terms = rng.gen_range(2..=4);
                samples.push(random_sparse(rng, &torus, terms));
            }
            (i, samples)
        })
        .collect();
    let results: Vec<Result<Option<Value>, qfrob_core::Error>> = jobs
        .par_iter()
        .map(|(i, samples)| {
            let basis = ModuleBasis::frobenius_residues(samples[0].torus());
            for s in samples {
                if let Some(w) = compare(s, &basis)? {
                    return Ok(Some(json!({ "form": forms[*i].entries(), "mismatch": w })));
                }
            }
            Ok(None)
        })
        .collect();
    for r in results {
        match r {
            Err(e) => return e.into(),
            Ok(Some(w)) => return Outcome::new(false, w),
            Ok(None) => {}
        }
    }
    Outcome::new(
        true,
        json!({
            "n": root.order(),
            "forms": forms.iter().map(|f| f.entries()).collect::<Vec<_>>(),
            "punctures": punctures,
            "monomials_per_form": monomials,
            "sparse_per_form": sparse,
        }),
    )
}

pub fn division(root: &Arc<RootData>, samples: usize, rng: &mut impl Rng) -> Outcome {
    let mut done = 0;
    let mut largest = 0;
    while done < samples {
        let punctures = usize::from(rng.gen_bool(0.5));
        let torus = Torus::classical(1, root.clone(), punctures);
        let terms = rng.gen_range(1..=4);
        let el = random_sparse(rng, &torus, terms);
        if el.is_zero() {
            continue;
        }
        let basis = ModuleBasis::frobenius_residues(&torus);
        let start = std::time::Instant::now();
        let w = match division_witness(&el, &basis) {
            Ok(w) => w,
            Err(e) => return Outcome::new(false, json!({ "element": json::torus(&el), "error": e.to_string() })),
        };
        let solved = start.elapsed();
        let in_subring = trace_over_frobenius(&w.denominator) == w.denominator;
        if !w.verify(&el) || !in_subring {
            return Outcome::new(
                false,
                json!({
                    "element": json::torus(&el),
                    "numerator": json::torus(&w.numerator),
                    "denominator": json::torus(&w.denominator),
                    "denominator_in_subring": in_subring,
                }),
            );
        }
        log::debug!(
            "division sample {done}: {} terms, {} punctures, solved in {:?}, verified in {:?}, numerator {} terms",
            el.len(),
            punctures,
            solved,
            start.elapsed() - solved,
            w.numerator.support_size()
        );
        largest = largest.max(w.numerator.support_size());
        done += 1;
    }
    Outcome::new(
        true,
        json!({ "n": root.order(), "samples": samples, "largest_numerator_terms": largest }),
    )
}

pub fn gram(orders: &[u32], forms: &[SkewForm]) -> Outcome {
    let mut cases = Vec::new();
    for &n in orders {
        let root = match RootData::new(n) {
            Ok(r) => r,
            Err(e) => return e.into(),
        };
        for f in forms {
            let torus = Torus::new(f.clone(), root.clone(), 0);
            cases.push((n, "frobenius", ModuleBasis::frobenius_residues(&torus)));
            match ModuleBasis::center_transversal(&torus, &central_lattice(f, n)) {
                Ok(b) => cases.push((n, "center", b)),
                Err(e) => return e.into(),
            }
        }
    }
    let results: Vec<(bool, Value)> = cases
        .par_iter()
        .map(|(n, pairing, basis)| {
            let form = basis.torus().form().entries().to_vec();
            match gram_certificate(basis) {
                Ok(cert) => {
                    let ok = cert.symmetric && cert.determinant.support_size() == 1;
                    (
                        ok,
                        json!({
                            "n": n,
                            "form": form,
                            "pairing": pairing,
                            "size": basis.len(),
                            "symmetric": cert.symmetric,
                            "sign": cert.sign,
                            "determinant": json::torus(&cert.determinant),
                        }),
                    )
                }
                Err(e) => (
                    false,
                    json!({ "n": n, "form": form, "pairing": pairing, "error": e.to_string() }),
                ),
            }
        })
        .collect();
    let ok = results.iter().all(|(ok, _)| *ok);
    Outcome::new(ok, Value::Array(results.into_iter().map(|(_, w)| w).collect()))
}
