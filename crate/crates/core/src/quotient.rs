//! Normal forms in a graded quotient `R_d / I_d`, one degree at a time, by
//! exact linear algebra over `Q`.

use crate::error::{Error, Result};
use crate::linalg::{self, Q};
use crate::polyring::{Monomial, Poly};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::HashMap;

/// One graded piece: the monomials spanning `R_d`, chosen representatives of
/// a basis of the quotient, and a spanning set of `I_d`.
pub struct QuotientPiece<L> {
    pub labels: Vec<L>,
    pub basis: Vec<Poly>,
    index: HashMap<Monomial, usize>,
    /// Row operations bringing `[basis | ideal]` to reduced echelon form.
    transform: Vec<Vec<Q>>,
    /// Echelon row holding the pivot of each basis column.
    basis_rows: Vec<usize>,
    rank: usize,
    pub ideal_rank: usize,
}

impl<L: Clone> QuotientPiece<L> {
    /// Fails with `BasisFailure` unless the basis images are independent
    /// modulo the ideal and together with it span every monomial in `space`.
    pub fn new(space: &[Monomial], basis: Vec<(L, Poly)>, ideal: &[Poly]) -> Result<QuotientPiece<L>> {
        let index: HashMap<Monomial, usize> = space.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let rows = space.len();
        let column = |p: &Poly| -> Result<Vec<Q>> {
            let mut col = vec![Q::zero(); rows];
            for (m, c) in p.terms() {
                let &i = index
                    .get(m)
                    .ok_or_else(|| Error::BasisFailure(format!("monomial {m} outside the graded piece")))?;
                col[i] = Q::from_integer(c.clone());
            }
            Ok(col)
        };
        let mut cols: Vec<Vec<Q>> = Vec::with_capacity(basis.len() + ideal.len());
        for (_, b) in &basis {
            cols.push(column(b)?);
        }
        for g in ideal {
            cols.push(column(g)?);
        }
        let ideal_rank = linalg::rank(&transpose(&cols[basis.len()..], rows));
        let ncols = cols.len();
        let mut m: Vec<Vec<Q>> = (0..rows)
            .map(|r| {
                let mut row: Vec<Q> = cols.iter().map(|c| c[r].clone()).collect();
                row.extend((0..rows).map(|j| if j == r { Q::one() } else { Q::zero() }));
                row
            })
            .collect();
        let pivots = linalg::rref_limited(&mut m, ncols);
        let rank = pivots.len();
        let nb = basis.len();
        if pivots.iter().take_while(|&&c| c < nb).count() < nb {
            return Err(Error::BasisFailure("basis images are dependent modulo the ideal".into()));
        }
        if rank != nb + ideal_rank {
            return Err(Error::BasisFailure("basis images meet the ideal".into()));
        }
        if rank != rows {
            return Err(Error::BasisFailure(format!("basis and ideal span rank {rank} of {rows}")));
        }
        let transform = m.into_iter().map(|r| r[ncols..].to_vec()).collect();
        let (labels, basis): (Vec<L>, Vec<Poly>) = basis.into_iter().unzip();
        Ok(QuotientPiece { labels, basis, index, transform, basis_rows: (0..nb).collect(), rank, ideal_rank })
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// Integer coordinates of `f` over the basis.
    pub fn coordinates(&self, f: &Poly) -> Result<Vec<BigInt>> {
        let mut v = vec![Q::zero(); self.index.len()];
        for (m, c) in f.terms() {
            let &i = self
                .index
                .get(m)
                .ok_or_else(|| Error::InvalidInput(format!("monomial {m} has the wrong degree")))?;
            v[i] = Q::from_integer(c.clone());
        }
        let e = linalg::mat_vec(&self.transform, &v);
        debug_assert!(e[self.rank..].iter().all(|x| x.is_zero()));
        self.basis_rows
            .iter()
            .map(|&r| {
                linalg::to_integer(&e[r])
                    .ok_or_else(|| Error::NonIntegralCoefficient(format!("normal-form coordinate {}", e[r])))
            })
            .collect()
    }

    /// `Σ coordinate · basis`.
    pub fn normal_form(&self, f: &Poly) -> Result<Poly> {
        let coords = self.coordinates(f)?;
        let mut out = Poly::zero();
        for (c, b) in coords.iter().zip(&self.basis) {
            if !c.is_zero() {
                out.add_assign_ref(&b.scale(c));
            }
        }
        Ok(out)
    }
}

fn transpose(cols: &[Vec<Q>], rows: usize) -> Vec<Vec<Q>> {
    (0..rows).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect()
}

/// All monomials of graded degree `d` in the given variables.
pub fn monomials_of_degree(vars: &[crate::polyring::VarId], d: u32) -> Vec<Monomial> {
    fn rec(
        vars: &[crate::polyring::VarId],
        k: usize,
        left: u32,
        cur: &mut Vec<(crate::polyring::VarId, u32)>,
        out: &mut Vec<Monomial>,
    ) {
        if left == 0 {
            out.push(Monomial::from_pairs(cur.iter().copied()));
            return;
        }
        if k == vars.len() {
            return;
        }
        let dv = vars[k].degree();
        let mut e = 0;
        loop {
            if e > 0 {
                cur.push((vars[k], e));
            }
            rec(vars, k + 1, left - e * dv, cur, out);
            if e > 0 {
                cur.pop();
            }
            e += 1;
            if e * dv > left {
                break;
            }
        }
    }
    let mut out = Vec::new();
    rec(vars, 0, d, &mut Vec::new(), &mut out);
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::VarId;

    #[test]
    fn monomial_enumeration() {
        let vars = [VarId::c(1), VarId::c(2), VarId::z()];
        let ms = monomials_of_degree(&vars, 2);
        // c1^2, c1 z, z^2, c2
        assert_eq!(ms.len(), 4);
        assert_eq!(monomials_of_degree(&vars, 0), vec![Monomial::one()]);
    }

    #[test]
    fn simple_quotient() {
        // Z[a,b]_1 / (a - b) with basis {a}
        let a = Poly::x(1);
        let b = Poly::x(2);
        let space = vec![Monomial::var(VarId::x(1)), Monomial::var(VarId::x(2))];
        let piece = QuotientPiece::new(&space, vec![("a", a.clone())], &[a.sub(&b)]).unwrap();
        assert_eq!(piece.normal_form(&b.scale(&BigInt::from(3))).unwrap(), a.scale(&BigInt::from(3)));
        assert!(QuotientPiece::new(&space, vec![("a", a.clone())], &[]).is_err());
    }
}
