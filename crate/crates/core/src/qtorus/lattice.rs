use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer;

use super::{Exponent, SkewForm};

/// A full-rank sublattice of `Z^n` containing `N Z^n`, kept in Hermite
/// normal form: upper-triangular rows with positive diagonal `h_ii | N` and
/// entries above the diagonal reduced into `[0, h_jj)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice {
    modulus: i64,
    rows: Vec<Vec<i64>>,
}

impl Lattice {
    /// The lattice generated by `gens` together with `modulus * e_i`.
    pub fn from_generators(n: usize, modulus: u32, gens: &[Vec<i64>]) -> Self {
        let m = modulus as i64;
        assert!(m > 0, "modulus must be positive");
        let mut pool: Vec<Vec<i64>> = gens
            .iter()
            .map(|g| {
                assert_eq!(g.len(), n, "generator length");
                g.iter().map(|x| x.mod_floor(&m)).collect()
            })
            .collect();
        let mut rows = Vec::with_capacity(n);
        for col in 0..n {
            // Combine every vector's entry in `col` with `m` (from `m e_col`).
            let mut pivot = vec![0i64; n];
            pivot[col] = m;
            let mut rest = Vec::with_capacity(pool.len() + 1);
            for v in pool.drain(..) {
                let a = pivot[col];
                let b = v[col];
                if b == 0 {
                    rest.push(v);
                    continue;
                }
                let e = a.extended_gcd(&b);
                let (g, x, y) = (e.gcd, e.x, e.y);
                let new_pivot: Vec<i64> = (0..n)
                    .map(|j| (x * pivot[j] + y * v[j]).mod_floor(&m))
                    .collect();
                let other: Vec<i64> = (0..n)
                    .map(|j| ((b / g) * pivot[j] - (a / g) * v[j]).mod_floor(&m))
                    .collect();
                pivot = new_pivot;
                pivot[col] = g;
                rest.push(other);
            }
            let h = pivot[col];
            // (m / h) * pivot minus m e_col stays in the lattice.
            let mut wrap: Vec<i64> = pivot.iter().map(|x| (x * (m / h)).mod_floor(&m)).collect();
            wrap[col] = 0;
            rest.push(wrap);
            pool = rest
                .into_iter()
                .filter(|v| v[col + 1..].iter().any(|&x| x != 0))
                .collect();
            for v in pool.iter_mut() {
                v[col] = 0;
            }
            rows.push(pivot);
        }
        let mut lat = Lattice { modulus: m, rows };
        lat.reduce_above();
        lat
    }

    /// `modulus * Z^n`.
    pub fn scaled_standard(n: usize, modulus: u32) -> Self {
        Self::from_generators(n, modulus, &[])
    }

    fn reduce_above(&mut self) {
        let n = self.rows.len();
        for j in 0..n {
            let h = self.rows[j][j];
            for i in 0..j {
                let q = Integer::div_floor(&self.rows[i][j], &h);
                if q != 0 {
                    let rj = self.rows[j].clone();
                    for (x, y) in self.rows[i].iter_mut().zip(&rj) {
                        *x -= q * y;
                    }
                }
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn modulus(&self) -> u32 {
        self.modulus as u32
    }

    /// The Hermite normal form rows.
    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn diagonal(&self) -> Vec<i64> {
        (0..self.rank()).map(|i| self.rows[i][i]).collect()
    }

    /// `[Z^n : L]`.
    pub fn index(&self) -> u64 {
        self.diagonal().iter().map(|&h| h as u64).product()
    }

    /// The canonical coset representative: `0 <= r_i < h_ii`.
    pub fn reduce(&self, k: &[i64]) -> Exponent {
        assert_eq!(k.len(), self.rank(), "exponent length");
        let mut r = k.to_vec();
        for (i, row) in self.rows.iter().enumerate() {
            let q = Integer::div_floor(&r[i], &row[i]);
            if q != 0 {
                for (x, y) in r.iter_mut().zip(row) {
                    *x -= q * y;
                }
            }
        }
        r
    }

    pub fn contains(&self, k: &[i64]) -> bool {
        self.reduce(k).iter().all(|&x| x == 0)
    }

    /// Integer coordinates of `k` in the rows, or `None` if `k` is not in `L`.
    pub fn coordinates(&self, k: &[i64]) -> Option<Vec<i64>> {
        let mut r = k.to_vec();
        let mut c = vec![0; self.rank()];
        for (i, row) in self.rows.iter().enumerate() {
            if r[i] % row[i] != 0 {
                return None;
            }
            c[i] = r[i] / row[i];
            for (x, y) in r.iter_mut().zip(row) {
                *x -= c[i] * y;
            }
        }
        Some(c)
    }

    /// `sum_i c_i * row_i`.
    pub fn combine(&self, c: &[i64]) -> Exponent {
        let mut k = vec![0; self.rank()];
        for (ci, row) in c.iter().zip(&self.rows) {
            for (x, y) in k.iter_mut().zip(row) {
                *x += ci * y;
            }
        }
        k
    }

    /// All canonical coset representatives, in lexicographic order.
    pub fn transversal(&self) -> Vec<Exponent> {
        let diag = self.diagonal();
        let mut out = vec![vec![]];
        for &h in &diag {
            let mut next = Vec::with_capacity(out.len() * h as usize);
            for prefix in &out {
                for r in 0..h {
                    let mut v = prefix.clone();
                    v.push(r);
                    next.push(v);
                }
            }
            out = next;
        }
        out
    }

    /// The first row `r` (if any) for which `x^r` fails to be central.
    pub fn non_central_row(&self, form: &SkewForm, order: u32) -> Option<&Vec<i64>> {
        let n = order as i64;
        self.rows
            .iter()
            .find(|r| form.apply(r).iter().any(|x| x.mod_floor(&n) != 0))
    }

    pub fn is_sublattice_of(&self, other: &Lattice) -> bool {
        self.rows.iter().all(|r| other.contains(r))
    }
}

/// Diagonalizes an integer matrix: returns `(d, v)` with `U A V = diag(d)`
/// for some unimodular `U` and the unimodular `V` returned.
pub fn diagonalize(a: &[Vec<i64>]) -> (Vec<i64>, Vec<Vec<i64>>) {
    let n = a.len();
    let mut m: Vec<Vec<i64>> = a.to_vec();
    let mut v: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect();
    for t in 0..n {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..n {
                for j in t..n {
                    if m[i][j] != 0 && best.map_or(true, |(bi, bj)| m[i][j].abs() < m[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else { break };
            m.swap(t, bi);
            for row in m.iter_mut() {
                row.swap(t, bj);
            }
            for row in v.iter_mut() {
                row.swap(t, bj);
            }
            let p = m[t][t];
            let mut clean = true;
            for i in t + 1..n {
                let q = Integer::div_floor(&m[i][t], &p);
                if q != 0 {
                    let rt = m[t].clone();
                    for (x, y) in m[i].iter_mut().zip(&rt) {
                        *x -= q * y;
                    }
                }
                clean &= m[i][t] == 0;
            }
            for j in t + 1..n {
                let q = Integer::div_floor(&m[t][j], &p);
                if q != 0 {
                    for row in m.iter_mut() {
                        row[j] -= q * row[t];
                    }
                    for row in v.iter_mut() {
                        row[j] -= q * row[t];
                    }
                }
                clean &= m[t][j] == 0;
            }
            if clean {
                break;
            }
        }
    }
    ((0..n).map(|i| m[i][i]).collect(), v)
}

/// `{k : P k = 0 mod N}`, the exponents of central monomials.
pub fn central_lattice(form: &SkewForm, modulus: u32) -> Lattice {
    let n = form.rank();
    let nn = modulus as i64;
    let (d, v) = diagonalize(form.entries());
    let gens: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let s = nn / d[i].gcd(&nn);
            (0..n).map(|r| s * v[r][i]).collect()
        })
        .collect();
    Lattice::from_generators(n, modulus, &gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_form(rng: &mut ChaCha8Rng, n: usize, bound: i64) -> SkewForm {
        let mut e = vec![vec![0i64; n]; n];
        for i in 0..n {
            for j in i + 1..n {
                let v = rng.gen_range(-bound..=bound);
                e[i][j] = v;
                e[j][i] = -v;
            }
        }
        SkewForm::unnamed(e).unwrap()
    }

    fn all_residues(n: usize, m: i64) -> Vec<Vec<i64>> {
        let mut out = vec![vec![]];
        for _ in 0..n {
            out = out
                .into_iter()
                .flat_map(|p: Vec<i64>| {
                    (0..m).map(move |r| {
                        let mut v = p.clone();
                        v.push(r);
                        v
                    })
                })
                .collect();
        }
        out
    }

    #[test]
    fn invertible_form_gives_scaled_lattice() {
        let f = SkewForm::unnamed(vec![vec![0, 1], vec![-1, 0]]).unwrap();
        assert_eq!(central_lattice(&f, 3), Lattice::scaled_standard(2, 3));
    }

    #[test]
    fn bigon_pattern_lattice() {
        let f = SkewForm::unnamed(vec![vec![0, 2, 2], vec![-2, 0, 0], vec![-2, 0, 0]]).unwrap();
        let l = central_lattice(&f, 3);
        assert_eq!(l.index(), 9);
        for k in all_residues(3, 3) {
            for lift in [0i64, 3, -6] {
                let kk: Vec<i64> = k.iter().map(|x| x + lift).collect();
                let expected = kk[0] % 3 == 0 && (kk[1] + kk[2]) % 3 == 0;
                assert_eq!(l.contains(&kk), expected, "{:?}", kk);
            }
        }
    }

    #[test]
    fn central_lattice_matches_exhaustive_scan() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for &m in &[3u32, 5, 9, 15] {
            for _ in 0..20 {
                let n = rng.gen_range(1..=3);
                let f = random_form(&mut rng, n, 6);
                let l = central_lattice(&f, m);
                let mut count = 0u64;
                for k in all_residues(n, m as i64) {
                    let central = (0..n).all(|j| f.pairing(&k, &{
                        let mut e = vec![0; n];
                        e[j] = 1;
                        e
                    }) % m as i64 == 0);
                    assert_eq!(l.contains(&k), central, "{:?} {:?}", f, k);
                    count += u64::from(central);
                }
                assert_eq!(l.index() * count, (m as u64).pow(n as u32));
                assert!(l.non_central_row(&f, m).is_none());
            }
        }
    }

    #[test]
    fn diagonalize_is_equivalence() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for _ in 0..50 {
            let n = rng.gen_range(1..=5);
            let f = random_form(&mut rng, n, 9);
            let (d, v) = diagonalize(f.entries());
            // A V has columns d_i * (U^{-1} e_i); check rank structure via
            // |det V| = 1 and that A V col_i vanishes when d_i = 0.
            let det = int_det(&v);
            assert_eq!(det.abs(), 1);
            for i in 0..n {
                let col: Vec<i64> = (0..n).map(|r| v[r][i]).collect();
                if d[i] == 0 {
                    assert!(f.apply(&col).iter().all(|&x| x == 0));
                }
            }
        }
    }

    fn int_det(m: &[Vec<i64>]) -> i64 {
        let n = m.len();
        if n == 0 {
            return 1;
        }
        let mut total = 0;
        for j in 0..n {
            let minor: Vec<Vec<i64>> = m[1..]
                .iter()
                .map(|r| r.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, x)| *x).collect())
                .collect();
            let s = if j % 2 == 0 { 1 } else { -1 };
            total += s * m[0][j] * int_det(&minor);
        }
        total
    }

    #[test]
    fn hnf_reduce_and_transversal() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..40 {
            let n = rng.gen_range(1..=4);
            let m = [3u32, 5, 6][rng.gen_range(0..3)];
            let gens: Vec<Vec<i64>> = (0..rng.gen_range(0..3))
                .map(|_| (0..n).map(|_| rng.gen_range(-7..=7)).collect())
                .collect();
            let l = Lattice::from_generators(n, m, &gens);
            for g in &gens {
                assert!(l.contains(g));
            }
            for i in 0..n {
                let mut e = vec![0; n];
                e[i] = m as i64;
                assert!(l.contains(&e));
            }
            let t = l.transversal();
            assert_eq!(t.len() as u64, l.index());
            for r in &t {
                assert_eq!(&l.reduce(r), r);
            }
            let k: Vec<i64> = (0..n).map(|_| rng.gen_range(-20..=20)).collect();
            let r = l.reduce(&k);
            let diff: Vec<i64> = k.iter().zip(&r).map(|(a, b)| a - b).collect();
            let c = l.coordinates(&diff).unwrap();
            assert_eq!(l.combine(&c), diff);
            // lattice generated by the rows is the same lattice
            assert_eq!(Lattice::from_generators(n, m, l.rows()), l);
        }
    }
}
