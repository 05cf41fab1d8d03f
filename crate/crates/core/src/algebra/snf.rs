//! Smith normal form by unimodular row/column elimination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::mat::IntMat2;

/// `u · m · v = diag(d1, d2)` with `d1 | d2`, both non-negative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    pub d1: BigInt,
    pub d2: BigInt,
    pub u: IntMat2,
    pub v: IntMat2,
}

impl SnfResult {
    /// Invariant factors other than 1 (zeros stand for free ℤ summands).
    pub fn nontrivial_invariants(&self) -> Vec<BigInt> {
        [&self.d1, &self.d2]
            .into_iter()
            .filter(|d| !d.is_one())
            .cloned()
            .collect()
    }
}

/// Full decomposition of a rectangular integer matrix: `u · m · v = diag`.
#[derive(Clone, Debug)]
pub struct SnfGeneral {
    /// Diagonal entries `d_1 | d_2 | …`, length `min(rows, cols)`, trailing zeros kept.
    pub diagonal: Vec<BigInt>,
    pub u: Vec<Vec<BigInt>>,
    pub v: Vec<Vec<BigInt>>,
    pub rows: usize,
    pub cols: usize,
}

impl SnfGeneral {
    pub fn rank(&self) -> usize {
        self.diagonal.iter().filter(|d| !d.is_zero()).count()
    }

    /// Torsion of the cokernel `ℤ^rows / m ℤ^cols` (invariant factors > 1).
    pub fn torsion(&self) -> Vec<BigInt> {
        self.diagonal
            .iter()
            .filter(|d| !d.is_zero() && !d.is_one())
            .cloned()
            .collect()
    }

    /// Free rank of the cokernel.
    pub fn cokernel_rank(&self) -> usize {
        self.rows - self.rank()
    }
}

fn identity(n: usize) -> Vec<Vec<BigInt>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigInt::one()
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        })
        .collect()
}

struct Work {
    a: Vec<Vec<BigInt>>,
    u: Vec<Vec<BigInt>>,
    v: Vec<Vec<BigInt>>,
}

impl Work {
    fn swap_rows(&mut self, i: usize, k: usize) {
        self.a.swap(i, k);
        self.u.swap(i, k);
    }
    fn swap_cols(&mut self, j: usize, k: usize) {
        for row in self.a.iter_mut().chain(self.v.iter_mut()) {
            row.swap(j, k);
        }
    }
    /// row_i -= q · row_k
    fn row_axpy(&mut self, i: usize, k: usize, q: &BigInt) {
        for mat in [&mut self.a, &mut self.u] {
            let src = mat[k].clone();
            for (x, s) in mat[i].iter_mut().zip(src) {
                *x -= q * s;
            }
        }
    }
    /// col_j -= q · col_k
    fn col_axpy(&mut self, j: usize, k: usize, q: &BigInt) {
        for mat in [&mut self.a, &mut self.v] {
            for row in mat.iter_mut() {
                let s = row[k].clone();
                row[j] -= q * s;
            }
        }
    }
    fn negate_row(&mut self, i: usize) {
        for mat in [&mut self.a, &mut self.u] {
            for x in mat[i].iter_mut() {
                *x = -x.clone();
            }
        }
    }
}

/// Smith normal form of an arbitrary `rows × cols` integer matrix.
pub fn smith_general(m: &[Vec<BigInt>], cols: usize) -> SnfGeneral {
    let rows = m.len();
    let mut w = Work {
        a: m.to_vec(),
        u: identity(rows),
        v: identity(cols),
    };
    let r = rows.min(cols);
    for t in 0..r {
        // smallest non-zero entry of the trailing block becomes the pivot
        let pivot = (t..rows)
            .flat_map(|i| (t..cols).map(move |j| (i, j)))
            .filter(|&(i, j)| !w.a[i][j].is_zero())
            .min_by_key(|&(i, j)| w.a[i][j].abs());
        let Some((pi, pj)) = pivot else { break };
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);
        loop {
            let mut clean = true;
            for i in t + 1..rows {
                if !w.a[i][t].is_zero() {
                    let q = w.a[i][t].div_floor(&w.a[t][t]);
                    w.row_axpy(i, t, &q);
                    if !w.a[i][t].is_zero() {
                        clean = false;
                    }
                }
            }
            for j in t + 1..cols {
                if !w.a[t][j].is_zero() {
                    let q = w.a[t][j].div_floor(&w.a[t][t]);
                    w.col_axpy(j, t, &q);
                    if !w.a[t][j].is_zero() {
                        clean = false;
                    }
                }
            }
            if !clean {
                // a smaller remainder appeared in row/column t: promote it
                let best_r = (t + 1..rows)
                    .filter(|&i| !w.a[i][t].is_zero())
                    .min_by_key(|&i| w.a[i][t].abs());
                let best_c = (t + 1..cols)
                    .filter(|&j| !w.a[t][j].is_zero())
                    .min_by_key(|&j| w.a[t][j].abs());
                let rv = best_r.map(|i| w.a[i][t].abs());
                let cv = best_c.map(|j| w.a[t][j].abs());
                match (best_r, best_c) {
                    (Some(i), _) if cv.is_none() || rv <= cv => w.swap_rows(t, i),
                    (_, Some(j)) => w.swap_cols(t, j),
                    _ => unreachable!(),
                }
                continue;
            }
            // divisibility: fold an offending row into the pivot row and repeat
            let bad = (t + 1..rows)
                .find(|&i| (t + 1..cols).any(|j| !(&w.a[i][j] % &w.a[t][t]).is_zero()));
            match bad {
                Some(i) => {
                    let minus_one = -BigInt::one();
                    w.row_axpy(t, i, &minus_one);
                }
                None => break,
            }
        }
        if w.a[t][t].is_negative() {
            w.negate_row(t);
        }
    }
    let diagonal = (0..r).map(|i| w.a[i][i].clone()).collect();
    SnfGeneral {
        diagonal,
        u: w.u,
        v: w.v,
        rows,
        cols,
    }
}

pub fn smith_normal_form(m: &IntMat2) -> SnfResult {
    let rows = vec![m.m[0].to_vec(), m.m[1].to_vec()];
    let g = smith_general(&rows, 2);
    let to2 = |x: &Vec<Vec<BigInt>>| {
        IntMat2::new(
            x[0][0].clone(),
            x[0][1].clone(),
            x[1][0].clone(),
            x[1][1].clone(),
        )
    };
    SnfResult {
        d1: g.diagonal[0].clone(),
        d2: g.diagonal[1].clone(),
        u: to2(&g.u),
        v: to2(&g.v),
    }
}
