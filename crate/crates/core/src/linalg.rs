//! Exact linear algebra: fraction-free (Bareiss) elimination over the
//! integers, with rational back-substitution for kernels.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Integer echelon form produced by fraction-free elimination.
pub struct Echelon {
    pub rows: Vec<Vec<BigInt>>,
    pub pivots: Vec<usize>,
    pub ncols: usize,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// Bareiss elimination with leftmost-column pivoting. Every division is
/// exact because each intermediate entry is a minor of the input.
pub fn fraction_free_echelon(mut a: Vec<Vec<BigInt>>, ncols: usize) -> Echelon {
    let m = a.len();
    let mut prev = BigInt::one();
    let mut r = 0;
    let mut pivots = Vec::new();
    for c in 0..ncols {
        if r == m {
            break;
        }
        let Some(p) = (r..m).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(p, r);
        let (top, bottom) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        for row in bottom.iter_mut() {
            let lead = std::mem::take(&mut row[c]);
            for j in c + 1..ncols {
                let t = &pivot_row[c] * &row[j] - &lead * &pivot_row[j];
                let (q, rem) = t.div_rem(&prev);
                debug_assert!(rem.is_zero(), "inexact Bareiss division");
                row[j] = q;
            }
        }
        prev = a[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    Echelon { rows: a, pivots, ncols }
}

fn clear_denominators(row: &[BigRational]) -> Vec<BigInt> {
    let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect()
}

pub fn rank(rows: &[Vec<BigRational>], ncols: usize) -> usize {
    let ints = rows.iter().map(|r| clear_denominators(r)).collect();
    fraction_free_echelon(ints, ncols).rank()
}

pub fn rank_int(rows: Vec<Vec<BigInt>>, ncols: usize) -> usize {
    fraction_free_echelon(rows, ncols).rank()
}

/// Reduced row-echelon form over the rationals, with its pivot columns.
pub fn rref(rows: &[Vec<BigRational>], ncols: usize) -> (Vec<Vec<BigRational>>, Vec<usize>) {
    let ints = rows.iter().map(|r| clear_denominators(r)).collect();
    let ech = fraction_free_echelon(ints, ncols);
    let mut out: Vec<Vec<BigRational>> = ech
        .rows
        .iter()
        .zip(&ech.pivots)
        .map(|(row, &c)| {
            let lead = BigRational::from_integer(row[c].clone());
            row.iter().map(|x| BigRational::from_integer(x.clone()) / &lead).collect()
        })
        .collect();
    for k in (0..out.len()).rev() {
        let c = ech.pivots[k];
        for i in 0..k {
            let factor = out[i][c].clone();
            if factor.is_zero() {
                continue;
            }
            for j in c..ncols {
                let t = &factor * &out[k][j];
                out[i][j] -= t;
            }
        }
    }
    (out, ech.pivots)
}

/// Basis of `{x : A x = 0}`, one vector per free column in increasing
/// column order, with the free coordinate set to 1.
pub fn kernel(rows: &[Vec<BigRational>], ncols: usize) -> Vec<Vec<BigRational>> {
    let (r, pivots) = rref(rows, ncols);
    let mut basis = Vec::new();
    for f in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut x = vec![BigRational::zero(); ncols];
        x[f] = BigRational::one();
        for (k, &pc) in pivots.iter().enumerate() {
            x[pc] = -r[k][f].clone();
        }
        basis.push(x);
    }
    basis
}
