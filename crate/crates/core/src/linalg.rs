//! Exact rank of sparse integer matrices.
//!
//! Both routines use column reduction keyed on the lowest nonzero row: each
//! column is reduced against earlier columns sharing its lowest row until it
//! vanishes or claims a new row. Surviving columns have distinct lowest rows,
//! so their count is the rank.
//!
//! Over a prime field the arithmetic is modular. Over the rationals it is
//! fraction-free: a column is replaced by `a*col - b*pivot` with integer
//! `a != 0`, which preserves the column space over Q, and each result is
//! divided by its content. Entries are kept in `i64` with checked arithmetic;
//! on overflow the reduction restarts on arbitrary-precision integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedMul, CheckedSub, Signed};

/// Column-major sparse matrix with integer entries.
///
/// Each column lists `(row, value)` pairs with strictly increasing rows and
/// nonzero values.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SparseMatrix {
    pub nrows: usize,
    pub cols: Vec<Vec<(usize, i64)>>,
}

impl SparseMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        SparseMatrix { nrows, cols: vec![Vec::new(); ncols] }
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Vec::is_empty)
    }

    /// Dense row-major copy, for small matrices in tests and output.
    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut out = vec![vec![0; self.ncols()]; self.nrows];
        for (c, col) in self.cols.iter().enumerate() {
            for &(r, v) in col {
                out[r][c] = v;
            }
        }
        out
    }

    /// `self * rhs`; panics on a dimension mismatch.
    pub fn mul(&self, rhs: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.ncols(), rhs.nrows, "dimension mismatch in sparse product");
        let mut acc = vec![0i64; self.nrows];
        let cols = rhs
            .cols
            .iter()
            .map(|rcol| {
                for &(k, b) in rcol {
                    for &(r, a) in &self.cols[k] {
                        acc[r] += a * b;
                    }
                }
                let mut out = Vec::new();
                for (r, v) in acc.iter_mut().enumerate() {
                    if *v != 0 {
                        out.push((r, *v));
                        *v = 0;
                    }
                }
                out
            })
            .collect();
        SparseMatrix { nrows: self.nrows, cols }
    }
}

/// Rank over GF(p). `p` must be a prime below 2^32.
pub fn rank_mod_p(m: &SparseMatrix, p: u64) -> usize {
    assert!(p >= 2 && p <= u32::MAX as u64, "modulus out of range");
    let mut pivot_of_row: Vec<Option<usize>> = vec![None; m.nrows];
    let mut reduced: Vec<Vec<(usize, u64)>> = Vec::new();
    for col in &m.cols {
        let mut cur: Vec<(usize, u64)> = col
            .iter()
            .map(|&(r, v)| (r, v.rem_euclid(p as i64) as u64))
            .filter(|&(_, v)| v != 0)
            .collect();
        while let Some(&(low, c)) = cur.last() {
            match pivot_of_row[low] {
                Some(k) => cur = sub_scaled_mod(&cur, c, &reduced[k], p),
                None => {
                    let inv = pow_mod(c, p - 2, p);
                    for e in cur.iter_mut() {
                        e.1 = e.1 * inv % p;
                    }
                    pivot_of_row[low] = Some(reduced.len());
                    reduced.push(cur);
                    break;
                }
            }
        }
    }
    reduced.len()
}

/// `x - c*y` mod p.
fn sub_scaled_mod(x: &[(usize, u64)], c: u64, y: &[(usize, u64)], p: u64) -> Vec<(usize, u64)> {
    let neg = p - c;
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let (r, v) = match (x.get(i), y.get(j)) {
            (Some(&(rx, vx)), Some(&(ry, _))) if rx < ry => {
                i += 1;
                (rx, vx)
            }
            (Some(&(rx, _)), Some(&(ry, vy))) if ry < rx => {
                j += 1;
                (ry, neg * vy % p)
            }
            (Some(&(rx, vx)), Some(&(_, vy))) => {
                i += 1;
                j += 1;
                (rx, (vx + neg * vy) % p)
            }
            (Some(&(rx, vx)), None) => {
                i += 1;
                (rx, vx)
            }
            (None, Some(&(ry, vy))) => {
                j += 1;
                (ry, neg * vy % p)
            }
            (None, None) => unreachable!(),
        };
        if v != 0 {
            out.push((r, v));
        }
    }
    out
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Rank over Q by fraction-free elimination.
pub fn rank_rational(m: &SparseMatrix) -> usize {
    match rank_integer::<i64>(m) {
        Some(r) => r,
        None => rank_integer::<BigInt>(m).expect("big integer arithmetic cannot overflow"),
    }
}

/// Fraction-free column reduction; `None` if an intermediate overflowed `T`.
pub(crate) fn rank_integer<T: ExactInt>(m: &SparseMatrix) -> Option<usize> {
    let mut pivot_of_row: Vec<Option<usize>> = vec![None; m.nrows];
    let mut reduced: Vec<Vec<(usize, T)>> = Vec::new();
    for col in &m.cols {
        let mut cur: Vec<(usize, T)> = col.iter().map(|&(r, v)| (r, T::from(v))).collect();
        while let Some((low, c)) = cur.last().cloned() {
            match pivot_of_row[low] {
                Some(k) => {
                    let piv = &reduced[k];
                    let pv = &piv.last().expect("pivot columns are nonzero").1;
                    cur = if pv.is_one() {
                        combine(&T::one(), &cur, &c, piv)?
                    } else if (-pv.clone()).is_one() {
                        combine(&T::one(), &cur, &(-c), piv)?
                    } else {
                        let g = pv.gcd(&c);
                        combine(&(pv.clone() / g.clone()), &cur, &(c / g), piv)?
                    };
                    remove_content(&mut cur);
                }
                None => {
                    pivot_of_row[low] = Some(reduced.len());
                    reduced.push(cur);
                    break;
                }
            }
        }
    }
    Some(reduced.len())
}

/// Integer types usable by the fraction-free reduction.
pub(crate) trait ExactInt:
    Clone + Integer + Signed + CheckedMul + CheckedSub + From<i64> + std::fmt::Debug
{
}

impl<T> ExactInt for T where
    T: Clone + Integer + Signed + CheckedMul + CheckedSub + From<i64> + std::fmt::Debug
{
}

/// `a*x - b*y`, dropping zeros.
fn combine<T: ExactInt>(a: &T, x: &[(usize, T)], b: &T, y: &[(usize, T)]) -> Option<Vec<(usize, T)>> {
    let scale = |s: &T, v: &T| -> Option<T> {
        if s.is_one() {
            Some(v.clone())
        } else {
            s.checked_mul(v)
        }
    };
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let rx = x.get(i).map(|e| e.0).unwrap_or(usize::MAX);
        let ry = y.get(j).map(|e| e.0).unwrap_or(usize::MAX);
        let (r, v) = if rx < ry {
            i += 1;
            (rx, scale(a, &x[i - 1].1)?)
        } else if ry < rx {
            j += 1;
            (ry, T::zero().checked_sub(&scale(b, &y[j - 1].1)?)?)
        } else {
            i += 1;
            j += 1;
            (rx, scale(a, &x[i - 1].1)?.checked_sub(&scale(b, &y[j - 1].1)?)?)
        };
        if !v.is_zero() {
            out.push((r, v));
        }
    }
    Some(out)
}

fn remove_content<T: ExactInt>(col: &mut [(usize, T)]) {
    let mut g = T::zero();
    for (_, v) in col.iter() {
        g = g.gcd(v);
        if g.is_one() {
            return;
        }
    }
    if !g.is_zero() {
        for (_, v) in col.iter_mut() {
            *v = v.clone() / g.clone();
        }
    }
}
