//! Exact dense linear algebra over Q and over a prime field.

use crate::polyring::{addmod, mulmod, powmod};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Q = BigRational;

pub fn q(n: impl Into<BigInt>) -> Q {
    Q::from_integer(n.into())
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(m: &mut [Vec<Q>]) -> Vec<usize> {
    let cols = m.first().map(|r| r.len()).unwrap_or(0);
    rref_limited(m, cols)
}

/// Row reduction pivoting only in the first `cols` columns; the remaining
/// columns are carried along.
pub fn rref_limited(m: &mut [Vec<Q>], cols: usize) -> Vec<usize> {
    let rows = m.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                let (top, bottom) = if i < r {
                    let (a, b) = m.split_at_mut(r);
                    (&mut a[i], &b[0])
                } else {
                    let (a, b) = m.split_at_mut(i);
                    (&mut b[0], &a[r])
                };
                for (x, y) in top.iter_mut().zip(bottom.iter()) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &[Vec<Q>]) -> usize {
    let mut a = m.to_vec();
    rref(&mut a).len()
}

/// Indices of a maximal set of linearly independent rows, chosen greedily
/// in order.
pub fn independent_rows(m: &[Vec<Q>]) -> Vec<usize> {
    let cols = m.first().map(|r| r.len()).unwrap_or(0);
    let mut basis: Vec<(usize, Vec<Q>)> = Vec::new();
    let mut chosen = Vec::new();
    for (idx, row) in m.iter().enumerate() {
        let mut v = row.clone();
        for (pc, b) in &basis {
            if !v[*pc].is_zero() {
                let f = v[*pc].clone();
                for (x, y) in v.iter_mut().zip(b.iter()) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
        }
        if let Some(pc) = (0..cols).find(|&c| !v[c].is_zero()) {
            let inv = v[pc].recip();
            for x in v.iter_mut() {
                *x = &*x * &inv;
            }
            basis.push((pc, v));
            chosen.push(idx);
            if chosen.len() == cols {
                break;
            }
        }
    }
    chosen
}

/// Inverse of a square matrix, or `None` if singular.
pub fn invert(m: &[Vec<Q>]) -> Option<Vec<Vec<Q>>> {
    let n = m.len();
    let mut a: Vec<Vec<Q>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
            r
        })
        .collect();
    let piv = rref(&mut a);
    if piv.len() < n || piv[n - 1] >= n {
        return None;
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn mat_vec(m: &[Vec<Q>], v: &[Q]) -> Vec<Q> {
    m.iter()
        .map(|row| {
            let mut s = Q::zero();
            for (a, b) in row.iter().zip(v) {
                if !a.is_zero() && !b.is_zero() {
                    s += a * b;
                }
            }
            s
        })
        .collect()
}

/// Integer value of a rational, if it is one.
pub fn to_integer(x: &Q) -> Option<BigInt> {
    if x.is_integer() {
        Some(x.to_integer())
    } else {
        None
    }
}

/// Incremental Gaussian elimination modulo a prime for a square system
/// `A x = b` whose rows arrive one at a time.
pub struct ModSolver {
    p: u64,
    n: usize,
    rows: Vec<Vec<u64>>,
    pivot_of_row: Vec<usize>,
    row_of_pivot: Vec<Option<usize>>,
    inconsistent: bool,
}

impl ModSolver {
    pub fn new(n: usize, p: u64) -> ModSolver {
        ModSolver {
            p,
            n,
            rows: Vec::new(),
            pivot_of_row: Vec::new(),
            row_of_pivot: vec![None; n],
            inconsistent: false,
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.n
    }

    pub fn is_inconsistent(&self) -> bool {
        self.inconsistent
    }

    /// Add the equation `row · x = rhs`; returns true if it raised the rank.
    pub fn add_row(&mut self, mut row: Vec<u64>, rhs: u64) -> bool {
        let p = self.p;
        row.push(rhs % p);
        for (r, &pc) in self.rows.iter().zip(&self.pivot_of_row) {
            let f = row[pc];
            if f != 0 {
                let nf = p - f;
                for (x, &y) in row.iter_mut().zip(r.iter()) {
                    if y != 0 {
                        *x = addmod(*x, mulmod(nf, y, p), p);
                    }
                }
            }
        }
        let Some(pc) = (0..self.n).find(|&c| row[c] != 0) else {
            if row[self.n] != 0 {
                self.inconsistent = true;
            }
            return false;
        };
        let inv = powmod(row[pc], p - 2, p);
        for x in row.iter_mut() {
            *x = mulmod(*x, inv, p);
        }
        for r in self.rows.iter_mut() {
            let f = r[pc];
            if f != 0 {
                let nf = p - f;
                for (x, &y) in r.iter_mut().zip(row.iter()) {
                    if y != 0 {
                        *x = addmod(*x, mulmod(nf, y, p), p);
                    }
                }
            }
        }
        self.row_of_pivot[pc] = Some(self.rows.len());
        self.pivot_of_row.push(pc);
        self.rows.push(row);
        true
    }

    /// Solution vector once the system has full rank.
    pub fn solution(&self) -> Option<Vec<u64>> {
        if !self.is_full() || self.inconsistent {
            return None;
        }
        Some(
            (0..self.n)
                .map(|c| self.rows[self.row_of_pivot[c].expect("full rank")][self.n])
                .collect(),
        )
    }
}

/// Symmetric lift of a residue to `(-p/2, p/2]`.
pub fn lift_symmetric(r: u64, p: u64) -> BigInt {
    if r > p / 2 {
        BigInt::from(r) - BigInt::from(p)
    } else {
        BigInt::from(r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_and_rank() {
        let m = vec![vec![q(2), q(1)], vec![q(1), q(1)]];
        let inv = invert(&m).unwrap();
        assert_eq!(inv, vec![vec![q(1), q(-1)], vec![q(-1), q(2)]]);
        assert_eq!(rank(&[vec![q(1), q(2)], vec![q(2), q(4)]]), 1);
        assert!(invert(&[vec![q(1), q(2)], vec![q(2), q(4)]]).is_none());
    }

    #[test]
    fn modular_solver() {
        let p = (1u64 << 61) - 1;
        let mut s = ModSolver::new(2, p);
        assert!(s.add_row(vec![1, 1], 3));
        assert!(!s.add_row(vec![2, 2], 6));
        assert!(s.add_row(vec![1, p - 1], p - 1));
        let x = s.solution().unwrap();
        assert_eq!(lift_symmetric(x[0], p), BigInt::from(1));
        assert_eq!(lift_symmetric(x[1], p), BigInt::from(2));
    }
}
