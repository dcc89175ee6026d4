//! Combinatorics of punctured bordered surfaces: Euler characteristic,
//! `r`, the size and layout of the generator set, the circles with an even
//! number of punctures, and the alternating-pattern lattice.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_integer::Integer;

use crate::qtorus::{Exponent, Lattice};
use crate::{Error, Result};

/// A connected punctured bordered surface given by its genus, the number of
/// punctures on each boundary circle of the compactification, and the
/// number of interior punctures.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PbSurface {
    genus: u32,
    boundary: Vec<u32>,
    interior: u32,
}

/// A boundary circle with an even number of punctures.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LambdaCircle {
    /// Position in the boundary list.
    pub circle: usize,
    /// Number of boundary arcs on the circle.
    pub arcs: u32,
}

/// Predicted dimensions over the Frobenius image and over the center.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpectedDims {
    pub over_frobenius: BigUint,
    pub over_center: BigUint,
}

impl PbSurface {
    pub fn new(genus: u32, boundary: Vec<u32>, interior: u32) -> Result<Self> {
        if boundary.is_empty() {
            return Err(Error::InvalidSurface("at least one boundary circle is required".into()));
        }
        if boundary.iter().any(|&b| b == 0) {
            return Err(Error::InvalidSurface(
                "every boundary circle needs a puncture".into(),
            ));
        }
        Ok(PbSurface {
            genus,
            boundary,
            interior,
        })
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn boundary(&self) -> &[u32] {
        &self.boundary
    }

    pub fn interior(&self) -> u32 {
        self.interior
    }

    /// `2 - 2g - b - P`; boundary punctures do not change the homotopy type.
    pub fn euler_char(&self) -> i64 {
        2 - 2 * self.genus as i64 - self.boundary.len() as i64 - self.interior as i64
    }

    /// Number of boundary arcs of the punctured surface.
    pub fn boundary_arcs(&self) -> i64 {
        self.boundary.iter().map(|&b| b as i64).sum()
    }

    /// `r = -chi + #boundary arcs`.
    pub fn r_invariant(&self) -> i64 {
        -self.euler_char() + self.boundary_arcs()
    }

    pub fn is_bigon(&self) -> bool {
        self.genus == 0 && self.boundary == [2] && self.interior == 0
    }

    pub fn is_monogon(&self) -> bool {
        self.genus == 0 && self.boundary == [1] && self.interior == 0
    }

    /// `3r - P`, the rank of the quantum torus.
    pub fn tau_bar_size(&self) -> Result<usize> {
        if self.is_bigon() {
            return Err(Error::UnsupportedSurface("bigon".into()));
        }
        if self.is_monogon() {
            return Err(Error::UnsupportedSurface("monogon".into()));
        }
        let size = 3 * self.r_invariant() - self.interior as i64;
        usize::try_from(size)
            .map_err(|_| Error::InvalidSurface(format!("negative generator count {size}")))
    }

    pub fn lambda_set(&self) -> Vec<LambdaCircle> {
        self.boundary
            .iter()
            .enumerate()
            .filter(|(_, &b)| b % 2 == 0)
            .map(|(circle, &arcs)| LambdaCircle { circle, arcs })
            .collect()
    }

    /// The default layout: barred boundary arcs first, circle by circle in
    /// input order, each in cyclic order from its chosen first arc.
    pub fn layout(&self) -> Result<TauBarLayout> {
        let size = self.tau_bar_size()?;
        let mut start = 0usize;
        let mut circles = Vec::new();
        for (c, &b) in self.boundary.iter().enumerate() {
            if b % 2 == 0 {
                circles.push(LambdaArcs {
                    circle: c,
                    indices: (start..start + b as usize).collect(),
                });
            }
            start += b as usize;
        }
        TauBarLayout::new(size, circles)
    }

    /// A layout with caller-chosen index lists for the circles in `lambda_set`.
    pub fn layout_with(&self, lists: Vec<Vec<usize>>) -> Result<TauBarLayout> {
        let size = self.tau_bar_size()?;
        let lambda = self.lambda_set();
        if lists.len() != lambda.len() {
            return Err(Error::IndexMismatch {
                expected: lambda.len(),
                got: lists.len(),
            });
        }
        let mut circles = Vec::new();
        for (c, indices) in lambda.iter().zip(lists) {
            if indices.len() != c.arcs as usize {
                return Err(Error::IndexMismatch {
                    expected: c.arcs as usize,
                    got: indices.len(),
                });
            }
            circles.push(LambdaArcs {
                circle: c.circle,
                indices,
            });
        }
        TauBarLayout::new(size, circles)
    }

    /// `N^{3r}` over the Frobenius image and `N^{3r - |Lambda| - P}` over the center.
    pub fn expected_dims(&self, n: u32) -> ExpectedDims {
        let r = self.r_invariant();
        let full = 3 * r;
        let center = full - self.lambda_set().len() as i64 - self.interior as i64;
        let pow = |e: i64| BigUint::from(n).pow(u32::try_from(e.max(0)).unwrap_or(0));
        ExpectedDims {
            over_frobenius: pow(full),
            over_center: pow(center),
        }
    }
}

/// Positions of one even circle's doubled boundary arcs `e_1, ..., e_t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaArcs {
    pub circle: usize,
    pub indices: Vec<usize>,
}

/// Indexing of the generator set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TauBarLayout {
    size: usize,
    circles: Vec<LambdaArcs>,
}

impl TauBarLayout {
    pub fn new(size: usize, circles: Vec<LambdaArcs>) -> Result<Self> {
        let mut used = vec![false; size];
        for c in &circles {
            if c.indices.len() % 2 != 0 {
                return Err(Error::InvalidSurface(format!(
                    "circle {} has an odd arc count",
                    c.circle
                )));
            }
            for &i in &c.indices {
                if i >= size {
                    return Err(Error::IndexMismatch {
                        expected: size,
                        got: i,
                    });
                }
                if core::mem::replace(&mut used[i], true) {
                    return Err(Error::InvalidSurface(format!("index {i} used twice")));
                }
            }
        }
        Ok(TauBarLayout { size, circles })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn circles(&self) -> &[LambdaArcs] {
        &self.circles
    }

    /// The alternating-pattern subgroup at modulus `n`.
    pub fn b_spec(&self, n: u32) -> BSpec {
        BSpec {
            layout: self.clone(),
            modulus: n,
        }
    }
}

/// Exponents `a = b + c` with `b` alternating `(k, -k, ..., k, -k)` along each
/// even circle (zero elsewhere) and `c` divisible by `N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BSpec {
    layout: TauBarLayout,
    modulus: u32,
}

impl BSpec {
    pub fn layout(&self) -> &TauBarLayout {
        &self.layout
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn contains(&self, k: &[i64]) -> Result<bool> {
        if k.len() != self.layout.size {
            return Err(Error::IndexMismatch {
                expected: self.layout.size,
                got: k.len(),
            });
        }
        let n = self.modulus as i64;
        let mut on_circle = vec![false; k.len()];
        for c in &self.layout.circles {
            let kc = k[c.indices[0]];
            for (pos, &i) in c.indices.iter().enumerate() {
                on_circle[i] = true;
                let want = if pos % 2 == 0 { kc } else { -kc };
                if (k[i] - want).mod_floor(&n) != 0 {
                    return Ok(false);
                }
            }
        }
        Ok(k
            .iter()
            .zip(&on_circle)
            .all(|(x, &on)| on || x.mod_floor(&n) == 0))
    }

    /// `N e_i` for every index plus one alternating vector per even circle.
    pub fn generators(&self) -> Lattice {
        let gens: Vec<Vec<i64>> = self
            .layout
            .circles
            .iter()
            .map(|c| {
                let mut v = vec![0i64; self.layout.size];
                for (pos, &i) in c.indices.iter().enumerate() {
                    v[i] = if pos % 2 == 0 { 1 } else { -1 };
                }
                v
            })
            .collect();
        Lattice::from_generators(self.layout.size, self.modulus, &gens)
    }

    /// `{k in [0,N)^n : k(e_1) = 0 on every even circle}`, a transversal of
    /// the subgroup.
    pub fn transversal(&self) -> Vec<Exponent> {
        let firsts: Vec<usize> = self.layout.circles.iter().map(|c| c.indices[0]).collect();
        let n = self.modulus as i64;
        let mut out: Vec<Exponent> = vec![vec![]];
        for i in 0..self.layout.size {
            let top = if firsts.contains(&i) { 1 } else { n };
            out = out
                .into_iter()
                .flat_map(|p| {
                    (0..top).map(move |r| {
                        let mut v = p.clone();
                        v.push(r);
                        v
                    })
                })
                .collect();
        }
        out
    }

    /// `k, N-k, k, N-k, ...` along circle `circle` (an index into
    /// `layout().circles()`), zero elsewhere; all zero when `k = 0`.
    pub fn xck_pattern(&self, circle: usize, k: u32) -> Result<Exponent> {
        let c = self.layout.circles.get(circle).ok_or(Error::IndexMismatch {
            expected: self.layout.circles.len(),
            got: circle,
        })?;
        if k >= self.modulus {
            return Err(Error::IndexMismatch {
                expected: self.modulus as usize,
                got: k as usize,
            });
        }
        let mut v = vec![0i64; self.layout.size];
        if k == 0 {
            return Ok(v);
        }
        for (pos, &i) in c.indices.iter().enumerate() {
            v[i] = if pos % 2 == 0 { k as i64 } else { (self.modulus - k) as i64 };
        }
        Ok(v)
    }
}
