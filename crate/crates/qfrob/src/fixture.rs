//! JSON fixtures: skew forms, surfaces and points of `SL_2`.
//!
//! Every loader validates what it reads. A path that does not exist but
//! whose file name matches a bundled fixture (`square.json`, `rank2`, ...)
//! resolves to the bundled copy.

use std::path::Path;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use qfrob_core::oqsl2::SlPoint;
use qfrob_core::qtorus::{central_lattice, Lattice, SkewForm};
use qfrob_core::scalars::{Cyclo, RootData};
use qfrob_core::surface::{BSpec, PbSurface, TauBarLayout};
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum FixtureError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("cannot parse {path}: {source}")]
    Json {
        path: String,
        source: serde_json::Error,
    },
    #[error("invalid fixture {path}: {reason}")]
    Invalid { path: String, reason: String },
}

impl FixtureError {
    fn invalid(path: &str, reason: impl ToString) -> Self {
        FixtureError::Invalid {
            path: path.to_string(),
            reason: reason.to_string(),
        }
    }
}

const BUILTIN: &[(&str, &str)] = &[
    ("annulus", include_str!("../fixtures/annulus.json")),
    ("punctured_monogon", include_str!("../fixtures/punctured_monogon.json")),
    ("rank2", include_str!("../fixtures/rank2.json")),
    ("rank3", include_str!("../fixtures/rank3.json")),
    ("rho_diag", include_str!("../fixtures/rho_diag.json")),
    ("rho_generic", include_str!("../fixtures/rho_generic.json")),
    ("rho_identity", include_str!("../fixtures/rho_identity.json")),
    ("rho_lower", include_str!("../fixtures/rho_lower.json")),
    ("rho_w", include_str!("../fixtures/rho_w.json")),
    ("square", include_str!("../fixtures/square.json")),
    ("triangle", include_str!("../fixtures/triangle.json")),
];

/// The text of a bundled fixture by stem (`"square"`) or file name.
pub fn builtin(name: &str) -> Option<&'static str> {
    let stem = Path::new(name).file_stem()?.to_str()?;
    BUILTIN.iter().find(|(n, _)| *n == stem).map(|(_, t)| *t)
}

fn read(path: &str) -> Result<String, FixtureError> {
    match std::fs::read_to_string(path) {
        Ok(s) => Ok(s),
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => match builtin(path) {
            Some(t) => Ok(t.to_string()),
            None => Err(FixtureError::Io {
                path: path.to_string(),
                source: e,
            }),
        },
        Err(e) => Err(FixtureError::Io {
            path: path.to_string(),
            source: e,
        }),
    }
}

fn parse<T: for<'de> Deserialize<'de>>(path: &str) -> Result<T, FixtureError> {
    serde_json::from_str(&read(path)?).map_err(|source| FixtureError::Json {
        path: path.to_string(),
        source,
    })
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FormFile {
    pub n: usize,
    #[serde(default)]
    pub names: Vec<String>,
    #[serde(rename = "P")]
    pub p: Vec<Vec<i64>>,
}

impl FormFile {
    fn to_form(&self, path: &str) -> Result<SkewForm, FixtureError> {
        if self.p.len() != self.n {
            return Err(FixtureError::invalid(
                path,
                format!("n = {} but P has {} rows", self.n, self.p.len()),
            ));
        }
        let names = if self.names.is_empty() {
            (1..=self.n).map(|i| format!("x{i}")).collect()
        } else {
            self.names.clone()
        };
        SkewForm::new(names, self.p.clone()).map_err(|e| FixtureError::invalid(path, e))
    }
}

pub fn load_form(path: &str) -> Result<SkewForm, FixtureError> {
    parse::<FormFile>(path)?.to_form(path)
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SurfaceFile {
    #[serde(default)]
    pub genus: u32,
    pub boundary: Vec<u32>,
    #[serde(default)]
    pub interior: u32,
    /// Optional index lists of the doubled boundary arcs on each even circle.
    #[serde(default, rename = "lambdaLayout", alias = "lambda")]
    pub lambda: Option<Vec<Vec<usize>>>,
    #[serde(default)]
    pub form: Option<FormFile>,
}

#[derive(Clone, Debug)]
pub struct SurfaceFixture {
    pub name: String,
    pub surface: PbSurface,
    pub lambda: Option<Vec<Vec<usize>>>,
    pub form: Option<SkewForm>,
}

impl SurfaceFixture {
    pub fn layout(&self) -> qfrob_core::Result<TauBarLayout> {
        match &self.lambda {
            Some(lists) => self.surface.layout_with(lists.clone()),
            None => self.surface.layout(),
        }
    }

    /// The subgroup of alternating patterns at modulus `n`, checked to consist
    /// of central exponents of the fixture form.
    pub fn central_b_spec(&self, n: u32) -> Result<(SkewForm, BSpec, Lattice), FixtureError> {
        let form = self
            .form
            .clone()
            .ok_or_else(|| FixtureError::invalid(&self.name, "no skew form on this surface"))?;
        let layout = self.layout().map_err(|e| FixtureError::invalid(&self.name, e))?;
        if layout.size() != form.rank() {
            return Err(FixtureError::invalid(
                &self.name,
                format!("form has rank {} but the generator set has {}", form.rank(), layout.size()),
            ));
        }
        let spec = layout.b_spec(n);
        let lattice = spec.generators();
        if !lattice.is_sublattice_of(&central_lattice(&form, n)) {
            return Err(FixtureError::invalid(
                &self.name,
                "the alternating-pattern subgroup is not central for this form",
            ));
        }
        Ok((form, spec, lattice))
    }
}

pub fn load_surface(path: &str) -> Result<SurfaceFixture, FixtureError> {
    let file: SurfaceFile = parse(path)?;
    let surface = PbSurface::new(file.genus, file.boundary.clone(), file.interior)
        .map_err(|e| FixtureError::invalid(path, e))?;
    let form = file.form.as_ref().map(|f| f.to_form(path)).transpose()?;
    let name = Path::new(path)
        .file_stem()
        .and_then(|s| s.to_str())
        .unwrap_or(path)
        .to_string();
    let fixture = SurfaceFixture {
        name,
        surface,
        lambda: file.lambda,
        form,
    };
    if fixture.lambda.is_some() {
        fixture.layout().map_err(|e| FixtureError::invalid(path, e))?;
    }
    Ok(fixture)
}

/// A scalar literal: a rational `"p/q"`, or the coefficient list of a
/// polynomial in `zeta`.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScalarLiteral {
    Rational(String),
    Zeta(Vec<String>),
}

pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let q: BigInt = q.trim().parse().ok()?;
            if q == BigInt::from(0) {
                return None;
            }
            Some(BigRational::new(p.trim().parse().ok()?, q))
        }
        None => Some(BigRational::from_integer(s.parse().ok()?)),
    }
}

impl ScalarLiteral {
    pub fn to_cyclo(&self, root: &Arc<RootData>) -> Option<Cyclo> {
        match self {
            ScalarLiteral::Rational(s) => Some(Cyclo::from_rational(root, parse_rational(s)?)),
            ScalarLiteral::Zeta(v) => {
                let coeffs = v.iter().map(|s| parse_rational(s)).collect::<Option<Vec<_>>>()?;
                Some(Cyclo::from_coeffs(root, &coeffs))
            }
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PointFile {
    pub m: [[ScalarLiteral; 2]; 2],
}

pub fn load_point(path: &str, root: &Arc<RootData>) -> Result<SlPoint, FixtureError> {
    let file: PointFile = parse(path)?;
    let entry = |i: usize, j: usize| {
        file.m[i][j]
            .to_cyclo(root)
            .ok_or_else(|| FixtureError::invalid(path, format!("entry ({i}, {j}) is not an exact scalar")))
    };
    SlPoint::new([[entry(0, 0)?, entry(0, 1)?], [entry(1, 0)?, entry(1, 1)?]])
        .map_err(|e| FixtureError::invalid(path, e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_fixtures_load() {
        let root = RootData::new(3).unwrap();
        for name in ["triangle", "square", "annulus", "punctured_monogon"] {
            load_surface(name).unwrap();
        }
        load_form("rank2.json").unwrap();
        load_form("rank3").unwrap();
        for name in ["rho_identity", "rho_diag", "rho_lower", "rho_generic", "rho_w"] {
            load_point(name, &root).unwrap();
        }
    }

    #[test]
    fn square_subgroup_is_central() {
        let sq = load_surface("square").unwrap();
        let (form, spec, lattice) = sq.central_b_spec(3).unwrap();
        assert_eq!(form.rank(), 9);
        assert_eq!(spec.layout().circles().len(), 1);
        assert_eq!(lattice.index(), 3u64.pow(8));
    }

    #[test]
    fn invalid_inputs_are_rejected() {
        let root = RootData::new(3).unwrap();
        assert!(matches!(load_form("no/such/file.json"), Err(FixtureError::Io { .. })));
        let dir = std::env::temp_dir().join(format!("qfrob-fixture-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let bad_form = dir.join("bad_form.json");
        std::fs::write(&bad_form, r#"{"n":2,"P":[[0,1],[1,0]]}"#).unwrap();
        assert!(matches!(
            load_form(bad_form.to_str().unwrap()),
            Err(FixtureError::Invalid { .. })
        ));
        let bad_point = dir.join("bad_point.json");
        std::fs::write(&bad_point, r#"{"m":[["1","1"],["1","1"]]}"#).unwrap();
        assert!(matches!(
            load_point(bad_point.to_str().unwrap(), &root),
            Err(FixtureError::Invalid { .. })
        ));
        let zeta_point = dir.join("zeta_point.json");
        // zeta * zeta^2 = 1
        std::fs::write(&zeta_point, r#"{"m":[[["0","1"],"0"],["5",["0","0","1"]]]}"#).unwrap();
        load_point(zeta_point.to_str().unwrap(), &root).unwrap();
        let garbled = dir.join("garbled.json");
        std::fs::write(&garbled, "{").unwrap();
        assert!(matches!(load_form(garbled.to_str().unwrap()), Err(FixtureError::Json { .. })));
        std::fs::remove_dir_all(&dir).unwrap();
    }

    #[test]
    fn explicit_lambda_layout() {
        let dir = std::env::temp_dir().join(format!("qfrob-layout-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let good = dir.join("good.json");
        std::fs::write(&good, r#"{"boundary":[4],"lambdaLayout":[[3,2,1,0]]}"#).unwrap();
        let f = load_surface(good.to_str().unwrap()).unwrap();
        assert_eq!(f.layout().unwrap().circles()[0].indices, vec![3, 2, 1, 0]);
        let short = dir.join("short.json");
        std::fs::write(&short, r#"{"boundary":[4],"lambdaLayout":[[0,1]]}"#).unwrap();
        assert!(matches!(load_surface(short.to_str().unwrap()), Err(FixtureError::Invalid { .. })));
        std::fs::remove_dir_all(&dir).unwrap();
    }

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("-3/6"), Some(BigRational::new((-1).into(), 2.into())));
        assert_eq!(parse_rational("4"), Some(BigRational::from_integer(4.into())));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("x"), None);
    }
}
