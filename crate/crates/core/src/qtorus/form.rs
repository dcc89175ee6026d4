use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::{Error, Result};

/// Antisymmetric integer form `P` with generator labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewForm {
    names: Vec<String>,
    entries: Vec<Vec<i64>>,
}

impl SkewForm {
    pub fn new(names: Vec<String>, entries: Vec<Vec<i64>>) -> Result<Self> {
        let n = entries.len();
        if n == 0 {
            return Err(Error::InvalidForm("rank must be positive".into()));
        }
        if names.len() != n {
            return Err(Error::InvalidForm(format!(
                "{} names for rank {}",
                names.len(),
                n
            )));
        }
        for (i, row) in entries.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidForm(format!("row {} has length {}", i, row.len())));
            }
            for j in 0..n {
                if row[j] != -entries[j][i] {
                    return Err(Error::InvalidForm(format!(
                        "P({},{}) = {} but P({},{}) = {}",
                        i, j, row[j], j, i, entries[j][i]
                    )));
                }
            }
        }
        Ok(SkewForm { names, entries })
    }

    /// Generators named `x1, ..., xn`.
    pub fn unnamed(entries: Vec<Vec<i64>>) -> Result<Self> {
        let names = (1..=entries.len()).map(|i| format!("x{}", i)).collect();
        Self::new(names, entries)
    }

    /// The commutative form of rank `n`.
    pub fn zero(n: usize) -> Self {
        Self::unnamed(alloc::vec![alloc::vec![0; n]; n]).expect("zero form is antisymmetric")
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|r| r.iter().all(|&v| v == 0))
    }

    /// `zeta`-exponent of the reordering `x^u x^v = zeta^phase x^{u+v}`:
    /// `2 * sum_{i>j} P(i,j) u_i v_j`.
    ///
    /// This is the single place where `q`-power bookkeeping for ordered
    /// monomials happens; the PBW rewriting for `O_q(SL_2)` uses it too.
    pub fn product_phase(&self, u: &[i64], v: &[i64]) -> i64 {
        let mut acc = 0i64;
        for i in 0..u.len() {
            if u[i] == 0 {
                continue;
            }
            for j in 0..i {
                acc += self.entries[i][j] * u[i] * v[j];
            }
        }
        2 * acc
    }

    /// `u^T P v`, the `q`-commutator exponent: `x^u x^v = q^{u^T P v} x^v x^u`.
    pub fn pairing(&self, u: &[i64], v: &[i64]) -> i64 {
        let mut acc = 0i64;
        for i in 0..u.len() {
            for j in 0..v.len() {
                acc += u[i] * self.entries[i][j] * v[j];
            }
        }
        acc
    }

    /// `zeta`-exponent `-sum_{j<l} P(j,l) k_j k_l` turning `x^k` into its Weyl
    /// normalization `[x^k]`.
    pub fn weyl_exponent(&self, k: &[i64]) -> i64 {
        let mut acc = 0i64;
        for j in 0..k.len() {
            for l in j + 1..k.len() {
                acc += self.entries[j][l] * k[j] * k[l];
            }
        }
        -acc
    }

    /// `P k`.
    pub fn apply(&self, k: &[i64]) -> Vec<i64> {
        self.entries
            .iter()
            .map(|row| row.iter().zip(k).map(|(a, b)| a * b).sum())
            .collect()
    }
}
