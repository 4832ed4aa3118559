//! Enriched Schubert polynomials `∑_w(c;x;y)` and their identities.

use crate::error::{Error, Result};
use crate::linalg::{self, ModSolver, Q};
use crate::permutations::{bruhat_leq, permutations_in_window, Partition, Permutation, Triple};
use crate::polyring::{addmod, mulmod, range_product, Family, Monomial, Poly, Series, VarId};
use crate::symfunc::{coproduct_c, elementary, family_component, h_monomial, poly_det};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

/// The polynomial of a Schubert class together with its index data.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EnrichedSchubert {
    #[serde(serialize_with = "ser_perm")]
    pub w: Permutation,
    #[serde(serialize_with = "ser_poly")]
    pub poly: Poly,
    pub degree: usize,
    /// Range of x/y indices the polynomial may involve.
    pub window: Option<(i64, i64)>,
}

fn ser_perm<S: serde::Serializer>(w: &Permutation, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&w.to_string())
}

fn ser_poly<S: serde::Serializer>(p: &Poly, s: S) -> std::result::Result<S::Ok, S::Error> {
    p.to_json_value().serialize(s)
}

impl EnrichedSchubert {
    fn new(w: &Permutation, poly: Poly) -> EnrichedSchubert {
        EnrichedSchubert { w: w.clone(), degree: w.length(), window: support_window(w), poly }
    }
}

/// Indices of the x and y variables `∑_w` may involve: the window of `w`
/// stretched to reach `0` and `1`.
pub fn support_window(w: &Permutation) -> Option<(i64, i64)> {
    w.window().map(|(a, b)| (a.min(1), b.max(0)))
}

fn divided_difference(f: &Poly, i: i64) -> Poly {
    let swapped = f.substitute(|v| match v.family {
        Family::X if v.index == i => Some(Poly::x(i + 1)),
        Family::X if v.index == i + 1 => Some(Poly::x(i)),
        _ => None,
    });
    let num = f.sub(&swapped);
    num.div_exact(&Poly::x(i).sub(&Poly::x(i + 1)))
        .expect("antisymmetric numerator is divisible")
}

/// `𝔖_w(x;−y)` on the window `[a, b]` by divided differences from the top
/// class `∏_{i+j ≤ n} (x_i + y_j)`.
pub fn double_schubert_finite(w: &Permutation, a: i64, b: i64) -> Result<Poly> {
    if let Some((lo, hi)) = w.window() {
        if lo < a || hi > b {
            return Err(Error::WindowTooSmall(format!("{w} is not supported in [{a},{b}]")));
        }
    }
    let n = (b - a + 1).max(0);
    let mut top = Poly::one();
    for i in 1..=n {
        for j in 1..=n - i {
            top = top.mul(&Poly::x(a + i - 1).add(&Poly::y(a + j - 1)));
        }
    }
    let w0 = Permutation::from_window(a, (a..=b).rev().collect())?;
    let mut u = w.clone();
    let mut path = Vec::new();
    while u != w0 {
        let i = (a..b).find(|&i| u.has_right_ascent(i)).expect("non-top element has an ascent");
        u = u.mul_simple_right(i);
        path.push(i);
    }
    let mut p = top;
    for &i in path.iter().rev() {
        p = divided_difference(&p, i);
    }
    Ok(p)
}

/// `𝔖_w(x;−y)` on the window `[a, b]` as a sum over reduced pipe dreams.
pub fn double_schubert_pipe(w: &Permutation, a: i64, b: i64) -> Result<Poly> {
    if let Some((lo, hi)) = w.window() {
        if lo < a || hi > b {
            return Err(Error::WindowTooSmall(format!("{w} is not supported in [{a},{b}]")));
        }
    }
    let n = (b - a + 1).max(0) as usize;
    let local: Vec<usize> = (a..=b).map(|i| (w.apply(i) - a + 1) as usize).collect();
    Ok(pipe_dream_sum(&local, &|i, j| {
        Poly::x(a + i as i64 - 1).add(&Poly::y(a + j as i64 - 1))
    }, n))
}

/// Sum over reduced pipe dreams of `u ∈ S_n` (one-line values `1..n`) of the
/// product of `weight(i, j)` over crosses.
fn pipe_dream_sum(u: &[usize], weight: &dyn Fn(usize, usize) -> Poly, n: usize) -> Poly {
    // cells in reading order: rows top to bottom, right to left
    let mut cells = Vec::new();
    for i in 1..n {
        for j in (1..=n - i).rev() {
            cells.push((i, j));
        }
    }
    let weights: Vec<Poly> = cells.iter().map(|&(i, j)| weight(i, j)).collect();
    // pos[v] = position of value v in the remaining factor q = p⁻¹u
    let mut pos = vec![0usize; n + 2];
    for (k, &v) in u.iter().enumerate() {
        pos[v] = k;
    }
    let len = {
        let mut l = 0;
        for i in 0..u.len() {
            for j in i + 1..u.len() {
                if u[i] > u[j] {
                    l += 1;
                }
            }
        }
        l
    };
    let mut total = Poly::zero();
    #[allow(clippy::too_many_arguments)]
    fn rec(
        idx: usize,
        remaining: usize,
        cells: &[(usize, usize)],
        weights: &[Poly],
        pos: &mut Vec<usize>,
        acc: &Poly,
        total: &mut Poly,
    ) {
        if remaining == 0 {
            total.add_assign_ref(acc);
            return;
        }
        if cells.len() - idx < remaining {
            return;
        }
        let (i, j) = cells[idx];
        let a = i + j - 1;
        if pos[a + 1] < pos[a] {
            pos.swap(a, a + 1);
            let next = acc.mul(&weights[idx]);
            rec(idx + 1, remaining - 1, cells, weights, pos, &next, total);
            pos.swap(a, a + 1);
        }
        rec(idx + 1, remaining, cells, weights, pos, acc, total);
    }
    rec(0, len, &cells, &weights, &mut pos, &Poly::one(), &mut total);
    total
}

/// Smallest `m` with `(m+1)² > d`: the supersymmetric `h_λ` in `m|m`
/// variables are then independent for `|λ| ≤ d`.
fn specialization_depth(d: usize) -> usize {
    let mut m = 1;
    while (m + 1) * (m + 1) <= d {
        m += 1;
    }
    m
}

struct SpecializationTable {
    parts: Vec<Partition>,
    images: Vec<Poly>,
    rows: Vec<Monomial>,
    /// `inv[λ][r]`: left inverse of the coefficient matrix restricted to `rows`.
    inv: Vec<Vec<Q>>,
}

type TableCache = RwLock<HashMap<(usize, usize), Arc<SpecializationTable>>>;

fn specialization_table(m: usize, d: usize) -> Result<Arc<SpecializationTable>> {
    static CACHE: OnceLock<TableCache> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(t) = cache.read().expect("specialization lock").get(&(m, d)) {
        return Ok(t.clone());
    }
    let mi = m as i64;
    let ys: Vec<VarId> = (-mi + 1..=0).map(VarId::y).collect();
    let xs: Vec<VarId> = (-mi + 1..=0).map(VarId::x).collect();
    let series = range_product(&ys, &xs, d);
    let parts: Vec<Partition> = (0..=d).flat_map(Partition::all_of_size).collect();
    let images: Vec<Poly> = parts
        .iter()
        .map(|lam| lam.parts().iter().fold(Poly::one(), |acc, &k| acc.mul(series.component(k))))
        .collect();
    let mut row_index: BTreeMap<Monomial, usize> = BTreeMap::new();
    for img in &images {
        for (mono, _) in img.terms() {
            let len = row_index.len();
            row_index.entry(mono.clone()).or_insert(len);
        }
    }
    let mut rows: Vec<Monomial> = vec![Monomial::one(); row_index.len()];
    for (mono, &i) in &row_index {
        rows[i] = mono.clone();
    }
    let matrix: Vec<Vec<Q>> = rows
        .iter()
        .map(|mono| images.iter().map(|img| Q::from_integer(img.coeff(mono))).collect())
        .collect();
    let chosen = linalg::independent_rows(&matrix);
    if chosen.len() < parts.len() {
        return Err(Error::SystemUnderdetermined(format!(
            "specialization at depth {m} has rank {} < {} in degree {d}",
            chosen.len(),
            parts.len()
        )));
    }
    let square: Vec<Vec<Q>> = chosen.iter().map(|&r| matrix[r].clone()).collect();
    let inv = linalg::invert(&square).expect("independent rows give an invertible block");
    let rows = chosen.iter().map(|&r| rows[r].clone()).collect();
    let t = Arc::new(SpecializationTable { parts, images, rows, inv });
    cache.write().expect("specialization lock").insert((m, d), t.clone());
    Ok(t)
}

fn schubert_cache() -> &'static RwLock<HashMap<Permutation, Poly>> {
    static CACHE: OnceLock<RwLock<HashMap<Permutation, Poly>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// `∑_w(c;x;y)` recovered from its finite specializations.
pub fn back_stabilize(w: &Permutation) -> Result<EnrichedSchubert> {
    if let Some(p) = schubert_cache().read().expect("schubert cache lock").get(w) {
        return Ok(EnrichedSchubert::new(w, p.clone()));
    }
    let p = back_stabilize_uncached(w)?;
    schubert_cache().write().expect("schubert cache lock").insert(w.clone(), p.clone());
    Ok(EnrichedSchubert::new(w, p))
}

fn back_stabilize_uncached(w: &Permutation) -> Result<Poly> {
    let Some((lo, hi)) = w.window() else { return Ok(Poly::one()) };
    let d = w.length();
    let shift = (1 - lo).max(0);
    let ws = w.gamma(shift);
    let top = hi + shift;
    let m = specialization_depth(d);
    let mi = m as i64;
    // 1^m × w' on positions −m+1..top, in local coordinates 1..n
    let n = (mi + top) as usize;
    let local: Vec<usize> = (-mi + 1..=top).map(|i| (ws.apply(i) + mi) as usize).collect();
    let target = pipe_dream_sum(&local, &|i, j| {
        Poly::x(i as i64 - mi).add(&Poly::y(j as i64 - mi))
    }, n);
    let fresh = |v: VarId| matches!(v.family, Family::X | Family::Y) && v.index <= 0;
    let groups = target.group_by(fresh);
    let table = specialization_table(m, d)?;
    let mut solution: Vec<Poly> = Vec::with_capacity(table.parts.len());
    for (li, lam) in table.parts.iter().enumerate() {
        let row = &table.inv[li];
        let den = row.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
        let mut acc = Poly::zero();
        for (r, mono) in table.rows.iter().enumerate() {
            if row[r].is_zero() {
                continue;
            }
            if let Some(g) = groups.get(mono) {
                let f = (&row[r] * Q::from_integer(den.clone())).to_integer();
                acc.add_assign_ref(&g.scale(&f));
            }
        }
        let p = acc.div_scalar(&den).ok_or_else(|| {
            Error::NonIntegralCoefficient(format!("coefficient of c_{lam} in back-stabilization of {w}"))
        })?;
        solution.push(p);
    }
    let mut check = Poly::zero();
    let mut result = Poly::zero();
    for ((lam, img), p) in table.parts.iter().zip(&table.images).zip(&solution) {
        if p.is_zero() {
            continue;
        }
        check.add_assign_ref(&img.mul(p));
        result.add_assign_ref(&p.mul_monomial(&h_monomial(Family::C, lam), &BigInt::one()));
    }
    if check != target {
        return Err(Error::SystemInconsistent(format!("back-stabilization of {w} does not reproduce its specialization")));
    }
    Ok(gamma_translate(&result, -shift))
}

/// `∑_w` for every `w` in the list, computed in parallel.
pub fn back_stabilize_all(ws: &[Permutation]) -> Result<Vec<EnrichedSchubert>> {
    use rayon::prelude::*;
    ws.par_iter().map(back_stabilize).collect()
}

/// `c^{(m)} = ∏_{i=-m+1}^0 (1+y_i)/(1-x_i)` truncated at `cap`.
pub fn finite_c_series(m: usize, cap: usize) -> Series {
    let mi = m as i64;
    let ys: Vec<VarId> = (-mi + 1..=0).map(VarId::y).collect();
    let xs: Vec<VarId> = (-mi + 1..=0).map(VarId::x).collect();
    range_product(&ys, &xs, cap)
}

/// Substitute `c ↦ c^{(m)}`.
pub fn specialize_finite(p: &Poly, m: usize) -> Result<Poly> {
    let cap = max_index(p, Family::C);
    p.substitute_series(Family::C, &finite_c_series(m, cap))
}

/// Largest index of a `family` variable in `p`.
pub fn max_index(p: &Poly, family: Family) -> usize {
    p.variables().iter().filter(|v| v.family == family).map(|v| v.index as usize).max().unwrap_or(0)
}

/// The ring automorphism `γ^m`.
pub fn gamma_translate(p: &Poly, m: i64) -> Poly {
    if m == 0 {
        return p.clone();
    }
    let cap = max_index(p, Family::C);
    let factor = if m > 0 {
        let num: Vec<Poly> = (1..=m).map(Poly::y).collect();
        let den: Vec<Poly> = (1..=m).map(|i| Poly::x(i).neg()).collect();
        Series::ratio(&num, &den, cap)
    } else {
        let num: Vec<Poly> = (m + 1..=0).map(|i| Poly::x(i).neg()).collect();
        let den: Vec<Poly> = (m + 1..=0).map(Poly::y).collect();
        Series::ratio(&num, &den, cap)
    };
    let c = Series::of_family(Family::C, cap).mul(&factor);
    p.substitute(|v| match v.family {
        Family::C => Some(c.component(v.index as usize).clone()),
        Family::X => Some(Poly::x(v.index + m)),
        Family::Y => Some(Poly::y(v.index + m)),
        _ => None,
    })
}

/// The duality involution `ω`.
pub fn omega_dual(p: &Poly) -> Poly {
    let cap = max_index(p, Family::C);
    let alt = Series::from_components(
        (0..=cap)
            .map(|k| {
                let c = family_component(Family::C, k as i64);
                if k % 2 == 1 {
                    c.neg()
                } else {
                    c
                }
            })
            .collect(),
    );
    let inv = alt.invert().expect("alternating c series is a unit");
    p.substitute(|v| match v.family {
        Family::C => Some(inv.component(v.index as usize).clone()),
        Family::X => Some(Poly::x(1 - v.index).neg()),
        Family::Y => Some(Poly::y(1 - v.index).neg()),
        _ => None,
    })
}

/// `c ↦ 1`.
pub fn specialize_c_to_one(p: &Poly) -> Poly {
    p.substitute(|v| (v.family == Family::C).then(Poly::zero))
}

/// `c^v = ∏ (1+y_{v(j)}) / (1+y_{v(i)})` over `i ≤ 0 < v(i)` and `v(j) ≤ 0 < j`.
pub fn c_series_at(v: &Permutation, cap: usize) -> Series {
    let (num, den) = sign_changes(v);
    let num: Vec<Poly> = num.into_iter().map(Poly::y).collect();
    let den: Vec<Poly> = den.into_iter().map(Poly::y).collect();
    Series::ratio(&num, &den, cap)
}

/// Values `v(j)` for `j > 0, v(j) ≤ 0` and `v(i)` for `i ≤ 0, v(i) > 0`.
fn sign_changes(v: &Permutation) -> (Vec<i64>, Vec<i64>) {
    let Some((a, b)) = v.window() else { return (Vec::new(), Vec::new()) };
    let num = (1.max(a)..=b).map(|j| v.apply(j)).filter(|&x| x <= 0).collect();
    let den = (a..=0.min(b)).map(|i| v.apply(i)).filter(|&x| x > 0).collect();
    (num, den)
}

/// `P(c^v; −y^v; y)`.
pub fn interpolation_eval(p: &Poly, v: &Permutation) -> Poly {
    let cap = max_index(p, Family::C);
    let c = c_series_at(v, cap);
    p.substitute(|var| match var.family {
        Family::C => Some(c.component(var.index as usize).clone()),
        Family::X => Some(Poly::y(v.apply(var.index)).neg()),
        _ => None,
    })
}

/// `∏_{i<j, w(i)>w(j)} (y_{w(j)} − y_{w(i)})`, the value of `∑_w` at `w`.
pub fn inversion_product(w: &Permutation) -> Poly {
    let Some((a, b)) = w.window() else { return Poly::one() };
    let mut p = Poly::one();
    for i in a..=b {
        for j in i + 1..=b {
            if w.apply(i) > w.apply(j) {
                p = p.mul(&Poly::y(w.apply(j)).sub(&Poly::y(w.apply(i))));
            }
        }
    }
    p
}

/// Interpolation samples: permutations of the support window widened by
/// `widen` on each side, of length at most `ℓ(w) + 1`, that are `w` itself
/// or not above `w`.
pub fn default_samples(w: &Permutation, widen: i64) -> Vec<Permutation> {
    let Some((a, b)) = support_window(w) else { return vec![Permutation::identity()] };
    permutations_in_window(a - widen, b + widen, w.length() + 1)
        .into_iter()
        .filter(|v| v == w || !bruhat_leq(w, v))
        .collect()
}

/// Candidate monomials of degree `d`: `c_μ` times monomials in the given
/// variables.
fn candidates(d: usize, vars: &[VarId]) -> Vec<Monomial> {
    fn monos(vars: &[VarId], deg: usize, start: usize, cur: &mut Vec<VarId>, out: &mut Vec<Monomial>) {
        if deg == 0 {
            out.push(Monomial::from_pairs(cur.iter().map(|&v| (v, 1))));
            return;
        }
        for k in start..vars.len() {
            cur.push(vars[k]);
            monos(vars, deg - 1, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    for cdeg in 0..=d {
        for mu in Partition::all_of_size(cdeg) {
            let hm = h_monomial(Family::C, &mu);
            let mut rest = Vec::new();
            monos(vars, d - cdeg, 0, &mut Vec::new(), &mut rest);
            out.extend(rest.into_iter().map(|m| m.mul(&hm)));
        }
    }
    out
}

const PRIME: u64 = (1 << 61) - 1;

/// Value mod p of the degree components of `∏(1 + a t) / ∏(1 + b t)`.
fn numeric_series(num: &[u64], den: &[u64], cap: usize) -> Vec<u64> {
    let mut s = vec![0u64; cap + 1];
    s[0] = 1;
    for &a in num {
        for k in (1..=cap).rev() {
            s[k] = addmod(s[k], mulmod(s[k - 1], a, PRIME), PRIME);
        }
    }
    for &b in den {
        let nb = (PRIME - b % PRIME) % PRIME;
        for k in 1..=cap {
            s[k] = addmod(s[k], mulmod(s[k - 1], nb, PRIME), PRIME);
        }
    }
    s
}

/// The unique polynomial with the interpolation values of `∑_w` on the
/// samples, found by modular elimination at random points and checked
/// exactly. Without explicit samples, the sample window is widened one step
/// at a time until the values determine the polynomial.
pub fn interpolation_solve(w: &Permutation, samples: Option<&[Permutation]>) -> Result<EnrichedSchubert> {
    if let Some(s) = samples {
        return solve_on(w, s);
    }
    let mut widen = 1;
    loop {
        match solve_on(w, &default_samples(w, widen)) {
            Err(Error::SystemUnderdetermined(_)) if widen < 3 => widen += 1,
            r => return r,
        }
    }
}

fn solve_on(w: &Permutation, samples: &[Permutation]) -> Result<EnrichedSchubert> {
    let Some((a, b)) = support_window(w) else {
        return Ok(EnrichedSchubert::new(w, Poly::one()));
    };
    let d = w.length();
    let mut vars: Vec<VarId> = (a..=b).map(VarId::y).collect();
    if !w.is_grassmannian() {
        vars.extend((a..=b).map(VarId::x));
    }
    vars.sort();
    let cands = candidates(d, &vars);
    let n = cands.len();
    let targets: Vec<Poly> = samples
        .iter()
        .map(|v| if v == w { inversion_product(w) } else { Poly::zero() })
        .collect();
    let (ya, yb) = samples.iter().filter_map(|v| v.window()).fold((a, b), |(x, y), (p, q)| (x.min(p), y.max(q)));
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
    let mut solver = ModSolver::new(n, PRIME);
    let max_rounds = 4 + 2 * n / samples.len().max(1);
    'rounds: for _ in 0..max_rounds {
        for (v, t) in samples.iter().zip(&targets) {
            let point: HashMap<i64, u64> = (ya..=yb).map(|i| (i, rng.gen_range(1..PRIME))).collect();
            let yv = |i: i64| *point.get(&i).unwrap_or(&0);
            let (num, den) = sign_changes(v);
            let num: Vec<u64> = num.into_iter().map(yv).collect();
            let den: Vec<u64> = den.into_iter().map(yv).collect();
            let cvals = numeric_series(&num, &den, d);
            let val = |var: VarId| -> u64 {
                match var.family {
                    Family::C => cvals[var.index as usize],
                    Family::X => (PRIME - yv(v.apply(var.index))) % PRIME,
                    Family::Y => yv(var.index),
                    _ => 0,
                }
            };
            let row: Vec<u64> = cands.iter().map(|m| Poly::term(1, m.clone()).eval_mod(PRIME, &val)).collect();
            let rhs = t.eval_mod(PRIME, &val);
            solver.add_row(row, rhs);
            if solver.is_inconsistent() {
                return Err(Error::SystemInconsistent(format!("interpolation conditions for {w} conflict")));
            }
            if solver.is_full() {
                break 'rounds;
            }
        }
    }
    let Some(sol) = solver.solution() else {
        return Err(Error::SystemUnderdetermined(format!(
            "interpolation for {w}: rank {} of {n}",
            solver.rank()
        )));
    };
    let poly = Poly::from_terms(cands.into_iter().zip(sol).map(|(m, r)| (m, linalg::lift_symmetric(r, PRIME))));
    for (v, t) in samples.iter().zip(&targets) {
        if &interpolation_eval(&poly, v) != t {
            return Err(Error::SystemInconsistent(format!("interpolant for {w} fails exactly at {v}")));
        }
    }
    Ok(EnrichedSchubert::new(w, poly))
}

/// `F_w(c;y) = ∑_w(c;−y;y)`.
pub fn stanley(w: &Permutation) -> Result<Poly> {
    Ok(stanley_of(&back_stabilize(w)?.poly))
}

pub fn stanley_of(p: &Poly) -> Poly {
    p.substitute(|v| (v.family == Family::X).then(|| Poly::y(v.index).neg()))
}

/// Components of `c · ∏(1+y_j)` over `(0, r]`, or divided by the factors over
/// `(r, 0]` when `r < 0`.
fn shifted_c(r: i64, cap: usize) -> Series {
    let factor = if r >= 0 {
        Series::ratio(&(1..=r).map(Poly::y).collect::<Vec<_>>(), &[], cap)
    } else {
        Series::ratio(&[], &(r + 1..=0).map(Poly::y).collect::<Vec<_>>(), cap)
    };
    Series::of_family(Family::C, cap).mul(&factor)
}

fn component(s: &Series, k: i64) -> Poly {
    if k < 0 || k as usize > s.cap() {
        Poly::zero()
    } else {
        s.component(k as usize).clone()
    }
}

/// Determinantal formula for Grassmannian classes.
pub fn kempf_laksov(lambda: &Partition) -> EnrichedSchubert {
    let s = lambda.len();
    let w = Permutation::from_partition(lambda);
    let cap = lambda.part(1) + s;
    let rows: Vec<Vec<Poly>> = (1..=s)
        .map(|i| {
            let r = lambda.part(i) as i64 - i as i64;
            let ser = shifted_c(r, cap);
            (1..=s).map(|j| component(&ser, lambda.part(i) as i64 - i as i64 + j as i64)).collect()
        })
        .collect();
    EnrichedSchubert::new(&w, poly_det(&rows))
}

/// `c · a(p, q)` with `a(p,q) = ∏_{i≤0}(1−x_i)∏_{i>0}(1+y_i) / ∏_{i≤p}(1−x_i)∏_{i>q}(1+y_i)`.
fn vexillary_series(p: i64, q: i64, cap: usize) -> Series {
    let mut num = Vec::new();
    let mut den = Vec::new();
    if p >= 0 {
        den.extend((1..=p).map(|i| Poly::x(i).neg()));
    } else {
        num.extend((p + 1..=0).map(|i| Poly::x(i).neg()));
    }
    if q >= 0 {
        num.extend((1..=q).map(Poly::y));
    } else {
        den.extend((q + 1..=0).map(Poly::y));
    }
    Series::of_family(Family::C, cap).mul(&Series::ratio(&num, &den, cap))
}

/// Determinantal formula for the vexillary class of a triple.
pub fn vexillary_det(t: &Triple) -> Result<EnrichedSchubert> {
    let lambda = t.lambda()?;
    let w = t.to_permutation()?;
    let ks = t.k.last().copied().unwrap_or(0);
    let cap = lambda.part(1) + ks;
    let series: Vec<Series> = (1..=ks)
        .map(|k| {
            let i = t.k.iter().position(|&ki| ki >= k).expect("k_s bounds k");
            vexillary_series(t.p[i], t.q[i], cap)
        })
        .collect();
    let rows: Vec<Vec<Poly>> = (1..=ks)
        .map(|k| {
            (1..=ks)
                .map(|l| component(&series[k - 1], lambda.part(k) as i64 + l as i64 - k as i64))
                .collect()
        })
        .collect();
    Ok(EnrichedSchubert::new(&w, poly_det(&rows)))
}

/// Both sides of `∑_w(c;x;y) = ∑_{w⁻¹}(ω(c);y;x)`.
pub fn inverse_sides(w: &Permutation) -> Result<(Poly, Poly)> {
    let lhs = back_stabilize(w)?.poly;
    let inv = back_stabilize(&w.inverse())?.poly;
    let cap = max_index(&inv, Family::C);
    let e: Vec<Poly> = (0..=cap).map(elementary).collect();
    let rhs = inv.substitute(|v| match v.family {
        Family::C => Some(e[v.index as usize].clone()),
        Family::X => Some(Poly::y(v.index)),
        Family::Y => Some(Poly::x(v.index)),
        _ => None,
    });
    Ok((lhs, rhs))
}

pub fn inverse_identity_check(w: &Permutation) -> Result<bool> {
    let (l, r) = inverse_sides(w)?;
    Ok(l == r)
}

/// Both sides of the Cauchy formula
/// `∑_w(c·c';x;y) = Σ_{w = v·u} ∑_u(c;x;t) ∑_v(c';−t;y)`, with `t` in the
/// `y'` family.
pub fn cauchy_sides(w: &Permutation) -> Result<(Poly, Poly)> {
    let p = back_stabilize(w)?.poly;
    let cap = max_index(&p, Family::C);
    let delta: Vec<Poly> = (0..=cap).map(coproduct_c).collect();
    let lhs = p.substitute(|v| (v.family == Family::C).then(|| delta[v.index as usize].clone()));
    let mut rhs = Poly::zero();
    for (left, right) in w.length_additive_factorizations() {
        let su = back_stabilize(&right)?.poly.substitute(|v| {
            (v.family == Family::Y).then(|| Poly::var(VarId::yp(v.index)))
        });
        let sv = back_stabilize(&left)?.poly.substitute(|v| match v.family {
            Family::C => Some(Poly::var(VarId::cp(v.index))),
            Family::X => Some(Poly::var(VarId::yp(v.index)).neg()),
            _ => None,
        });
        rhs.add_assign_ref(&su.mul(&sv));
    }
    Ok((lhs, rhs))
}

pub fn cauchy_check(w: &Permutation) -> Result<bool> {
    let (l, r) = cauchy_sides(w)?;
    Ok(l == r)
}

/// The value of `∑_w(1;x;y)` predicted from finite double Schubert
/// polynomials: zero off the sign-preserving subgroup, and
/// `ω(𝔖_{ω(w₋)}) · 𝔖_{w₊}` on it.
pub fn projection_prediction(w: &Permutation) -> Result<Poly> {
    if !w.preserves_sign() {
        return Ok(Poly::zero());
    }
    let Some((a, b)) = w.window() else { return Ok(Poly::one()) };
    let minus = Permutation::from_window(a.min(0), (a.min(0)..=0).map(|i| w.apply(i)).collect())?;
    let plus = Permutation::from_window(1, (1..=b.max(1)).map(|i| w.apply(i)).collect())?;
    let mut p = double_schubert_finite(&plus, 1, b.max(1))?;
    let om = minus.omega();
    if let Some((_, hi)) = om.window() {
        let q = double_schubert_finite(&om, 1, hi)?;
        let flipped = q.substitute(|v| match v.family {
            Family::X => Some(Poly::x(1 - v.index).neg()),
            Family::Y => Some(Poly::y(1 - v.index).neg()),
            _ => None,
        });
        p = p.mul(&flipped);
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Poly {
        Poly::parse(s).unwrap()
    }
    fn sig(w: &Permutation) -> Poly {
        back_stabilize(w).unwrap().poly
    }
    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec())
    }

    #[test]
    fn finite_examples() {
        let s1 = Permutation::simple(1);
        assert_eq!(double_schubert_finite(&s1, 1, 2).unwrap(), p("x1 + y1"));
        assert_eq!(double_schubert_finite(&Permutation::identity(), 1, 3).unwrap(), p("1"));
        let w = Permutation::parse("[2,3,1]").unwrap();
        assert_eq!(double_schubert_finite(&w, 1, 3).unwrap(), p("x1 + y1").mul(&p("x2 + y1")));
        assert!(double_schubert_finite(&w, 1, 2).is_err());
    }

    #[test]
    fn pipe_dreams_match_divided_differences() {
        for w in permutations_in_window(1, 4, 6) {
            assert_eq!(
                double_schubert_pipe(&w, 1, 4).unwrap(),
                double_schubert_finite(&w, 1, 4).unwrap(),
                "{w}"
            );
        }
    }

    #[test]
    fn back_stabilize_examples() {
        assert_eq!(sig(&Permutation::simple(0)), p("c1"));
        assert_eq!(sig(&Permutation::identity()), p("1"));
        for k in 1..4 {
            let mut expect = p("c1");
            for i in 1..=k {
                expect = expect.add(&Poly::x(i)).add(&Poly::y(i));
            }
            assert_eq!(sig(&Permutation::simple(k)), expect);
        }
    }

    #[test]
    fn defining_specialization() {
        for w in permutations_in_window(-1, 2, 3) {
            let (lo, hi) = match w.window() {
                Some(x) => x,
                None => continue,
            };
            let shift = (1 - lo).max(0);
            let sh = gamma_translate(&sig(&w), shift);
            let m = w.length();
            let spec = specialize_finite(&sh, m).unwrap();
            let big = Permutation::from_window(
                -(m as i64) + 1,
                (-(m as i64) + 1..=hi + shift).map(|i| w.gamma(shift).apply(i)).collect(),
            )
            .unwrap();
            let expect = double_schubert_pipe(&big, -(m as i64) + 1, hi + shift).unwrap();
            assert_eq!(spec, expect, "{w}");
        }
    }

    #[test]
    fn interpolation_examples() {
        let s0 = Permutation::simple(0);
        assert_eq!(interpolation_eval(&p("c1"), &s0), p("y0 - y1"));
        assert_eq!(interpolation_eval(&p("1"), &s0), p("1"));
        assert_eq!(interpolation_eval(&sig(&s0), &Permutation::identity()), p("0"));
        assert_eq!(interpolation_solve(&s0, None).unwrap().poly, p("c1"));
        assert_eq!(interpolation_solve(&Permutation::simple(1), None).unwrap().poly, p("c1 + x1 + y1"));
        assert_eq!(interpolation_solve(&Permutation::identity(), None).unwrap().poly, p("1"));
    }

    #[test]
    fn gamma_omega_examples() {
        assert_eq!(gamma_translate(&p("c1"), 1), p("c1 + x1 + y1"));
        let f = p("c2*x0 + c1^2*y(-1) + 3*c3");
        assert_eq!(gamma_translate(&gamma_translate(&f, 1), -1), f);
        assert_eq!(gamma_translate(&gamma_translate(&f, -2), 2), f);
        assert_eq!(gamma_translate(&sig(&Permutation::simple(0)), 1), sig(&Permutation::simple(1)));
        assert_eq!(omega_dual(&p("c1")), p("c1"));
        assert_eq!(omega_dual(&p("c2")), p("c1^2 - c2"));
        assert_eq!(omega_dual(&omega_dual(&f)), f);
        assert_eq!(omega_dual(&sig(&Permutation::simple(0))), sig(&Permutation::simple(0)));
    }

    #[test]
    fn projection_examples() {
        assert_eq!(specialize_c_to_one(&sig(&Permutation::simple(0))), p("0"));
        assert_eq!(specialize_c_to_one(&sig(&Permutation::simple(1))), p("x1 + y1"));
        assert_eq!(specialize_c_to_one(&sig(&Permutation::identity())), p("1"));
    }

    #[test]
    fn stanley_examples() {
        for k in 0..3 {
            assert_eq!(stanley(&Permutation::simple(k)).unwrap(), p("c1"));
        }
        assert_eq!(stanley(&Permutation::identity()).unwrap(), p("1"));
    }

    #[test]
    fn kempf_laksov_examples() {
        assert_eq!(kempf_laksov(&part(&[1])).poly, p("c1"));
        assert_eq!(kempf_laksov(&part(&[2])).poly, p("c2 + y1*c1"));
        let w31 = Permutation::from_partition(&part(&[3, 1]));
        assert_eq!(kempf_laksov(&part(&[3, 1])).poly, sig(&w31));
    }

    #[test]
    fn vexillary_examples() {
        let t = Triple::new(vec![1], vec![0], vec![1]).unwrap();
        assert_eq!(vexillary_det(&t).unwrap().poly, p("c2 + y1*c1"));
        let t = Triple::new(vec![1], vec![1], vec![0]).unwrap();
        assert_eq!(vexillary_det(&t).unwrap().poly, p("1"));
        let t = Triple::grassmannian(&part(&[2, 2, 1]));
        assert_eq!(vexillary_det(&t).unwrap().poly, kempf_laksov(&part(&[2, 2, 1])).poly);
    }

    #[test]
    fn inverse_and_cauchy_examples() {
        for w in [Permutation::simple(0), Permutation::identity(), Permutation::parse("[2,3,1]").unwrap()] {
            assert!(inverse_identity_check(&w).unwrap(), "{w}");
            assert!(cauchy_check(&w).unwrap(), "{w}");
        }
        let (l, r) = cauchy_sides(&Permutation::simple(0)).unwrap();
        assert_eq!(l, p("c1 + c'1"));
        assert_eq!(r, l);
    }
}
