//! Symmetric functions in the complete homogeneous generators `c_k = h_k`.

use crate::error::{Error, Result};
use crate::linalg::{self, Q};
use crate::permutations::Partition;
use crate::polyring::{Family, Monomial, Poly, VarId};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

/// `h_λ = c_{λ_1} c_{λ_2} ⋯` in the given family.
pub fn h_monomial(family: Family, lambda: &Partition) -> Monomial {
    Monomial::from_pairs(lambda.parts().iter().map(|&p| (VarId { family, index: p as i64 }, 1)))
}

/// Partition recording the `family` factors of a monomial.
pub fn partition_of(m: &Monomial, family: Family) -> Partition {
    let mut parts = Vec::new();
    for &(v, e) in m.vars() {
        if v.family == family {
            for _ in 0..e {
                parts.push(v.index as usize);
            }
        }
    }
    Partition::new(parts)
}

/// Component `k` of a graded family as a polynomial: 1 at 0, 0 below.
pub fn family_component(family: Family, k: i64) -> Poly {
    match k {
        0 => Poly::one(),
        k if k < 0 => Poly::zero(),
        k => Poly::var(VarId { family, index: k }),
    }
}

/// Determinant of a square matrix of polynomials.
pub fn poly_det(m: &[Vec<Poly>]) -> Poly {
    let n = m.len();
    if n == 0 {
        return Poly::one();
    }
    // expansion along rows, memoized on the set of remaining columns
    let mut memo: HashMap<u64, Poly> = HashMap::new();
    fn rec(m: &[Vec<Poly>], row: usize, cols: u64, memo: &mut HashMap<u64, Poly>) -> Poly {
        let n = m.len();
        if row == n {
            return Poly::one();
        }
        if let Some(p) = memo.get(&cols) {
            return p.clone();
        }
        let mut acc = Poly::zero();
        let mut sign_neg = false;
        for c in 0..n {
            if cols & (1 << c) == 0 {
                continue;
            }
            if !m[row][c].is_zero() {
                let minor = rec(m, row + 1, cols & !(1 << c), memo);
                if !minor.is_zero() {
                    let t = m[row][c].mul(&minor);
                    if sign_neg {
                        acc.sub_assign_ref(&t);
                    } else {
                        acc.add_assign_ref(&t);
                    }
                }
            }
            sign_neg = !sign_neg;
        }
        memo.insert(cols, acc.clone());
        acc
    }
    rec(m, 0, (1u64 << n) - 1, &mut memo)
}

/// Jacobi–Trudi determinant `det(c_{λ_i − i + j})` in the given family.
pub fn schur_in(family: Family, lambda: &Partition) -> Poly {
    let s = lambda.len();
    let m: Vec<Vec<Poly>> = (1..=s)
        .map(|i| {
            (1..=s)
                .map(|j| family_component(family, lambda.part(i) as i64 - i as i64 + j as i64))
                .collect()
        })
        .collect();
    poly_det(&m)
}

pub fn schur(lambda: &Partition) -> Poly {
    schur_in(Family::C, lambda)
}

/// `e_i = S_{1^i}(c)`.
pub fn elementary(i: usize) -> Poly {
    schur(&Partition::new(vec![1; i]))
}

/// `Δ(c_k) = Σ_{i+j=k} c_i c'_j`.
pub fn coproduct_c(k: usize) -> Poly {
    let mut p = Poly::zero();
    for i in 0..=k as i64 {
        p.add_assign_ref(&family_component(Family::C, i).mul(&family_component(Family::CPrime, k as i64 - i)));
    }
    p
}

/// Number of nonnegative integer matrices with row sums `rows` and column
/// sums `cols`; this is the coefficient of `m_cols` in `h_rows`.
fn count_matrices(rows: &[usize], cols: &[usize]) -> BigInt {
    fn rec(rows: &[usize], cols: Vec<usize>, memo: &mut HashMap<(usize, Vec<usize>), BigInt>) -> BigInt {
        if rows.is_empty() {
            return if cols.iter().all(|&c| c == 0) { BigInt::one() } else { BigInt::zero() };
        }
        let key = (rows.len(), cols.clone());
        if let Some(v) = memo.get(&key) {
            return v.clone();
        }
        let mut total = BigInt::zero();
        let mut cur = cols.clone();
        distribute(rows[0], 0, &mut cur, &mut |rest| {
            total += rec(&rows[1..], rest.to_vec(), memo);
        });
        memo.insert(key, total.clone());
        total
    }
    fn distribute(left: usize, idx: usize, cols: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if idx == cols.len() {
            if left == 0 {
                f(cols);
            }
            return;
        }
        let cap = cols[idx].min(left);
        for t in 0..=cap {
            cols[idx] -= t;
            distribute(left - t, idx + 1, cols, f);
            cols[idx] += t;
        }
    }
    rec(rows, cols.to_vec(), &mut HashMap::new())
}

/// Transition data in one degree: partitions and the `m → h` matrix.
struct MonomialTable {
    parts: Vec<Partition>,
    index: HashMap<Partition, usize>,
    /// Row `λ` holds the coefficients of `m_λ` on `h_μ`.
    m_to_h: Vec<Vec<BigInt>>,
}

fn monomial_table(n: usize) -> Arc<MonomialTable> {
    static CACHE: OnceLock<RwLock<HashMap<usize, Arc<MonomialTable>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(t) = cache.read().expect("monomial table lock").get(&n) {
        return t.clone();
    }
    let parts = Partition::all_of_size(n);
    let h_to_m: Vec<Vec<Q>> = parts
        .iter()
        .map(|mu| parts.iter().map(|lam| Q::from_integer(count_matrices(mu.parts(), lam.parts()))).collect())
        .collect();
    let inv = linalg::invert(&h_to_m).expect("h to m transition is invertible");
    let m_to_h: Vec<Vec<BigInt>> = inv
        .iter()
        .map(|row| row.iter().map(|x| linalg::to_integer(x).expect("integral transition matrix")).collect())
        .collect();
    let index = parts.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let t = Arc::new(MonomialTable { parts, index, m_to_h });
    cache.write().expect("monomial table lock").insert(n, t.clone());
    t
}

/// Coefficient of `m_λ` in `h_μ`.
pub fn h_to_m_coefficient(mu: &Partition, lambda: &Partition) -> BigInt {
    if mu.size() != lambda.size() {
        return BigInt::zero();
    }
    count_matrices(mu.parts(), lambda.parts())
}

/// The monomial symmetric function `m_λ` written in the c basis.
pub fn monomial_to_h(lambda: &Partition) -> Poly {
    let t = monomial_table(lambda.size());
    let row = &t.m_to_h[t.index[lambda]];
    Poly::from_terms(
        t.parts
            .iter()
            .zip(row)
            .filter(|(_, c)| !c.is_zero())
            .map(|(mu, c)| (h_monomial(Family::C, mu), c.clone())),
    )
}

/// Expansion of `m_λ(ξ|a)` in the monomial basis; `a(i)` gives `a_i` for `i ≥ 1`.
pub fn double_monomial_m(lambda: &Partition, a: &dyn Fn(usize) -> Poly) -> Result<BTreeMap<Partition, Poly>> {
    let r = lambda.len();
    let lam = lambda.parts();
    let n_lambda = orbit_size(lam);
    let r_fact: BigInt = (1..=r).map(BigInt::from).product();
    // e_j(a_1..a_{k-1}) for the needed k and j
    let mut elem: HashMap<(usize, usize), Poly> = HashMap::new();
    for &k in lam {
        for j in 0..k {
            elem.entry((k, j)).or_insert_with(|| elementary_in(&(1..k).map(a).collect::<Vec<_>>(), j));
        }
    }
    let mut acc: BTreeMap<Partition, Poly> = BTreeMap::new();
    let mut alpha = vec![1usize; r];
    loop {
        let mut coeff = Poly::one();
        for i in 0..r {
            coeff = coeff.mul(&elem[&(lam[i], lam[i] - alpha[i])]);
            if coeff.is_zero() {
                break;
            }
        }
        if !coeff.is_zero() {
            // (n_λ / n_α) · r! = n_λ · ∏ m_i(α)!
            let mut mult: HashMap<usize, usize> = HashMap::new();
            for &x in &alpha {
                *mult.entry(x).or_insert(0) += 1;
            }
            let w: BigInt = mult.values().map(|&m| (1..=m).map(BigInt::from).product::<BigInt>()).product();
            let key = Partition::new(alpha.clone());
            acc.entry(key).or_default().add_assign_ref(&coeff.scale(&(&n_lambda * w)));
        }
        // next sequence with 1 ≤ α_i ≤ λ_i
        let mut i = 0;
        while i < r {
            if alpha[i] < lam[i] {
                alpha[i] += 1;
                break;
            }
            alpha[i] = 1;
            i += 1;
        }
        if i == r {
            break;
        }
    }
    let mut out = BTreeMap::new();
    for (k, v) in acc {
        let q = v.div_scalar(&r_fact).ok_or_else(|| {
            Error::NonIntegralCoefficient(format!("coefficient of m_{k} in m_{lambda}(ξ|a)"))
        })?;
        if !q.is_zero() {
            out.insert(k, q);
        }
    }
    Ok(out)
}

/// `m_λ(ξ|a)` in the c basis.
pub fn double_monomial(lambda: &Partition, a: &dyn Fn(usize) -> Poly) -> Result<Poly> {
    let mut p = Poly::zero();
    for (alpha, coeff) in double_monomial_m(lambda, a)? {
        p.add_assign_ref(&coeff.mul(&monomial_to_h(&alpha)));
    }
    Ok(p)
}

/// `n_α = r! / ∏ m_i(α)!`.
fn orbit_size(alpha: &[usize]) -> BigInt {
    let mut mult: HashMap<usize, usize> = HashMap::new();
    for &x in alpha {
        *mult.entry(x).or_insert(0) += 1;
    }
    let r: BigInt = (1..=alpha.len()).map(BigInt::from).product();
    let d: BigInt = mult.values().map(|&m| (1..=m).map(BigInt::from).product::<BigInt>()).product();
    r / d
}

/// Elementary symmetric polynomial `e_j` of a list of polynomials.
pub fn elementary_in(vals: &[Poly], j: usize) -> Poly {
    let mut e = vec![Poly::zero(); j + 1];
    e[0] = Poly::one();
    for v in vals {
        for k in (1..=j).rev() {
            let t = e[k - 1].mul(v);
            e[k].add_assign_ref(&t);
        }
    }
    e.swap_remove(j)
}

/// Expansion `f = Σ_λ a_λ S_λ(c)` where the coefficients `a_λ` collect all
/// non-`family` variables.
pub fn schur_expand_in(f: &Poly, family: Family) -> BTreeMap<Partition, Poly> {
    let mut rest = f.clone();
    let mut out: BTreeMap<Partition, Poly> = BTreeMap::new();
    let mut cache: HashMap<Partition, Poly> = HashMap::new();
    while !rest.is_zero() {
        let groups = rest.group_by(|v| v.family == family);
        let top = groups.keys().map(|m| m.degree()).max().expect("nonzero");
        let (mu, coeff) = groups
            .iter()
            .filter(|(m, _)| m.degree() == top)
            .map(|(m, c)| (partition_of(m, family), c))
            .min_by(|a, b| a.0.cmp(&b.0))
            .expect("nonzero");
        let s = cache.entry(mu.clone()).or_insert_with(|| schur_in(family, &mu)).clone();
        rest.sub_assign_ref(&s.mul(coeff));
        out.entry(mu).or_default().add_assign_ref(coeff);
    }
    out.retain(|_, v| !v.is_zero());
    out
}

pub fn schur_expand(f: &Poly) -> BTreeMap<Partition, Poly> {
    schur_expand_in(f, Family::C)
}

/// Littlewood–Richardson coefficient `c^λ_{μν}` by counting tableaux of
/// shape `λ/μ` and content `ν` with lattice reading word.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if !lambda.contains(mu) || lambda.size() != mu.size() + nu.size() {
        return 0;
    }
    let rows = lambda.len();
    // cells in reading order: rows top to bottom, right to left
    let mut cells = Vec::new();
    for r in 0..rows {
        let start = mu.part(r + 1);
        for c in (start..lambda.part(r + 1)).rev() {
            cells.push((r, c));
        }
    }
    let width = lambda.part(1);
    let mut grid = vec![vec![0usize; width]; rows];
    let mut counts = vec![0usize; nu.len() + 1];
    fn rec(
        idx: usize,
        cells: &[(usize, usize)],
        grid: &mut Vec<Vec<usize>>,
        counts: &mut Vec<usize>,
        lambda: &Partition,
        mu: &Partition,
        nu: &Partition,
    ) -> u64 {
        if idx == cells.len() {
            return 1;
        }
        let (r, c) = cells[idx];
        let mut total = 0;
        for v in 1..=nu.len() {
            if counts[v] >= nu.part(v) {
                continue;
            }
            if v > 1 && counts[v] >= counts[v - 1] {
                continue;
            }
            // row weakly increasing left to right: right neighbour already filled
            if c + 1 < lambda.part(r + 1) && grid[r][c + 1] < v {
                continue;
            }
            // columns strictly increasing downwards
            if r > 0 && c >= mu.part(r) && grid[r - 1][c] >= v {
                continue;
            }
            grid[r][c] = v;
            counts[v] += 1;
            total += rec(idx + 1, cells, grid, counts, lambda, mu, nu);
            counts[v] -= 1;
            grid[r][c] = 0;
        }
        total
    }
    rec(0, &cells, &mut grid, &mut counts, lambda, mu, nu)
}
