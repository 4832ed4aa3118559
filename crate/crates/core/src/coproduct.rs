//! The direct-sum coproduct `c ↦ c·c'` and the coefficients of its
//! expansion in products of Schubert classes.

use crate::error::{Error, Result};
use crate::permutations::{Partition, Permutation};
use crate::polyring::{Family, Poly, VarId};
use crate::schubert::{back_stabilize, interpolation_eval, inversion_product, kempf_laksov, max_index, stanley};
use crate::symfunc::{coproduct_c, schur_expand_in};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use std::collections::{BTreeMap, HashMap, HashSet};

/// One coefficient `ĉ^w_{μ,v}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoeffEntry {
    pub mu: Partition,
    #[serde(serialize_with = "ser_perm")]
    pub v: Permutation,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nu: Option<Partition>,
    #[serde(serialize_with = "ser_poly")]
    pub coeff: Poly,
}

fn ser_perm<S: serde::Serializer>(w: &Permutation, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&w.to_string())
}

fn ser_poly<S: serde::Serializer>(p: &Poly, s: S) -> std::result::Result<S::Ok, S::Error> {
    p.to_json_value().serialize(s)
}

/// Nonzero coefficients ordered by `(ℓ(v), v, μ)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoeffTable {
    #[serde(serialize_with = "ser_perm")]
    pub w: Permutation,
    pub entries: Vec<CoeffEntry>,
}

impl CoeffTable {
    fn from_map(w: &Permutation, map: BTreeMap<(usize, Permutation, Partition), Poly>, grassmannian: bool) -> CoeffTable {
        let entries = map
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|((_, v, mu), coeff)| CoeffEntry {
                nu: if grassmannian { v.to_partition().ok() } else { None },
                mu,
                v,
                coeff,
            })
            .collect();
        CoeffTable { w: w.clone(), entries }
    }

    pub fn get(&self, mu: &Partition, v: &Permutation) -> Poly {
        self.entries
            .iter()
            .find(|e| &e.mu == mu && &e.v == v)
            .map(|e| e.coeff.clone())
            .unwrap_or_default()
    }

    /// Coefficient indexed by two partitions.
    pub fn get_lr(&self, mu: &Partition, nu: &Partition) -> Poly {
        self.get(mu, &Permutation::from_partition(nu))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("table serializes")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for e in &self.entries {
            let right = match &e.nu {
                Some(nu) => nu.to_string(),
                None => e.v.to_string(),
            };
            s.push_str(&format!("{} {} : {}\n", e.mu, right, e.coeff));
        }
        s
    }
}

/// Expansion `f = Σ a_μ B_μ` for a basis `B_μ = S_μ(family) + (lower
/// `family`-degree)`, with coefficients free of `family`.
pub fn double_schur_expand(
    f: &Poly,
    family: Family,
    basis: &dyn Fn(&Partition) -> Poly,
) -> BTreeMap<Partition, Poly> {
    let mut rest = f.clone();
    let mut out: BTreeMap<Partition, Poly> = BTreeMap::new();
    let mut cache: HashMap<Partition, Poly> = HashMap::new();
    while !rest.is_zero() {
        let groups = rest.group_by(|v| v.family == family);
        let top = groups.keys().map(|m| m.degree()).max().expect("nonzero");
        let top_part: Poly = groups
            .iter()
            .filter(|(m, _)| m.degree() == top)
            .fold(Poly::zero(), |acc, (m, c)| acc.add(&c.mul_monomial(m, &BigInt::one())));
        for (mu, coeff) in schur_expand_in(&top_part, family) {
            let b = cache.entry(mu.clone()).or_insert_with(|| basis(&mu)).clone();
            rest.sub_assign_ref(&b.mul(&coeff));
            out.entry(mu).or_default().add_assign_ref(&coeff);
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

fn kl(mu: &Partition) -> Poly {
    kempf_laksov(mu).poly
}

fn to_primed_c(p: &Poly) -> Poly {
    p.rename(|v| match v.family {
        Family::C => (VarId::cp(v.index), false),
        _ => (v, false),
    })
}

fn from_primed_c(p: &Poly) -> Poly {
    p.rename(|v| match v.family {
        Family::CPrime => (VarId::c(v.index), false),
        _ => (v, false),
    })
}

fn to_primed_y(p: &Poly) -> Poly {
    p.rename(|v| match v.family {
        Family::Y => (VarId::yp(v.index), false),
        _ => (v, false),
    })
}

/// `Δ` applied to a polynomial in `c`.
pub fn apply_coproduct(p: &Poly) -> Poly {
    let cap = max_index(p, Family::C);
    let delta: Vec<Poly> = (0..=cap).map(coproduct_c).collect();
    p.substitute(|v| (v.family == Family::C).then(|| delta[v.index as usize].clone()))
}

/// All `ĉ^w_{μ,v}(y)` with `Δ∑_w = Σ ĉ^w_{μ,v} ∑_{w_μ}(c) ∑_v(c';x;y)`.
///
/// After splitting off the `c` side by a double-Schur expansion, each
/// coefficient is expanded in the `∑_v(c')` by localization at the right
/// factors `v` of `w`, then checked exactly.
pub fn expand_comodule(w: &Permutation) -> Result<CoeffTable> {
    let lhs = apply_coproduct(&back_stabilize(w)?.poly);
    let by_mu = double_schur_expand(&lhs, Family::C, &kl);
    let mut rights: Vec<Permutation> = w.length_additive_factorizations().into_iter().map(|(_, v)| v).collect();
    rights.sort_by(|a, b| (a.length(), a).cmp(&(b.length(), b)));
    rights.dedup();
    let classes: Vec<Poly> = rights.iter().map(|v| back_stabilize(v).map(|s| s.poly)).collect::<Result<_>>()?;
    let mut map = BTreeMap::new();
    for (mu, g) in by_mu {
        let g = from_primed_c(&g);
        let mut coeffs: Vec<Poly> = Vec::with_capacity(rights.len());
        for (k, v) in rights.iter().enumerate() {
            let mut val = interpolation_eval(&g, v);
            for (j, cj) in coeffs.iter().enumerate() {
                if !cj.is_zero() {
                    val.sub_assign_ref(&cj.mul(&interpolation_eval(&classes[j], v)));
                }
            }
            let c = val.div_exact(&inversion_product(v)).ok_or_else(|| {
                Error::SystemInconsistent(format!("localization of Δ∑_{w} at {v} is not divisible"))
            })?;
            debug_assert!(k == coeffs.len());
            coeffs.push(c);
        }
        let mut residual = g.clone();
        for (c, cls) in coeffs.iter().zip(&classes) {
            if !c.is_zero() {
                residual.sub_assign_ref(&c.mul(cls));
            }
        }
        if !residual.is_zero() {
            return Err(Error::SystemInconsistent(format!(
                "coefficient of ∑_{mu} in Δ∑_{w} is not spanned by right factors"
            )));
        }
        for (v, c) in rights.iter().zip(coeffs) {
            if !c.is_zero() {
                map.insert((v.length(), v.clone(), mu.clone()), c);
            }
        }
    }
    Ok(CoeffTable::from_map(w, map, false))
}

/// The same coefficients from the double-Schur expansions of the Stanley
/// functions `F_{wv⁻¹}`.
pub fn comodule_via_stanley(w: &Permutation) -> Result<CoeffTable> {
    let mut map = BTreeMap::new();
    for (u, v) in w.length_additive_factorizations() {
        for (mu, c) in stanley_expand(&u)? {
            map.insert((v.length(), v.clone(), mu), c);
        }
    }
    Ok(CoeffTable::from_map(w, map, false))
}

/// Expansion of `F_u(c;y)` in the double Schur basis `∑_{w_μ}(c;y)`.
pub fn stanley_expand(u: &Permutation) -> Result<BTreeMap<Partition, Poly>> {
    Ok(double_schur_expand(&stanley(u)?, Family::C, &kl))
}

/// Dual Littlewood–Richardson polynomials `ĉ^λ_{μ,ν}(y)`.
pub fn dual_lr(lambda: &Partition) -> CoeffTable {
    let w = Permutation::from_partition(lambda);
    let lhs = apply_coproduct(&kl(lambda));
    let primed = |nu: &Partition| to_primed_c(&kl(nu));
    let mut map = BTreeMap::new();
    for (mu, g) in double_schur_expand(&lhs, Family::C, &kl) {
        for (nu, c) in double_schur_expand(&g, Family::CPrime, &primed) {
            let v = Permutation::from_partition(&nu);
            map.insert((v.length(), v, mu.clone()), c);
        }
    }
    CoeffTable::from_map(&w, map, true)
}

/// Two-torus coefficients `ĉ^λ_{μ,ν}(y,y')`, defined by
/// `∑_{w_λ}(c·c';y') = Σ ĉ^λ_{μ,ν}(y,y') ∑_{w_μ}(c;y) ∑_{w_ν}(c';y')`.
pub fn two_torus_dual_lr(lambda: &Partition) -> CoeffTable {
    let w = Permutation::from_partition(lambda);
    let lhs = to_primed_y(&apply_coproduct(&kl(lambda)));
    let primed = |nu: &Partition| to_primed_y(&to_primed_c(&kl(nu)));
    let mut map = BTreeMap::new();
    for (mu, g) in double_schur_expand(&lhs, Family::C, &kl) {
        for (nu, c) in double_schur_expand(&g, Family::CPrime, &primed) {
            let v = Permutation::from_partition(&nu);
            map.insert((v.length(), v, mu.clone()), c);
        }
    }
    CoeffTable::from_map(&w, map, true)
}

/// `y'_i ↦ y_i`.
pub fn identify_tori(p: &Poly) -> Poly {
    p.rename(|v| match v.family {
        Family::YPrime => (VarId::y(v.index), false),
        _ => (v, false),
    })
}

/// A total order on torus characters, smallest first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrahamOrder {
    pub vars: Vec<VarId>,
}

impl GrahamOrder {
    /// `1 ≺ 2 ≺ ⋯ ≺ b ≺ a ≺ ⋯ ≺ -1 ≺ 0` on the indices `[a, b]`.
    pub fn one_torus(a: i64, b: i64) -> GrahamOrder {
        let vars = (1..=b).chain(a..=0.min(b)).filter(|&i| i >= a).map(VarId::y).collect();
        GrahamOrder { vars }
    }

    /// `y_+ ≺ y'_+ ≺ y'_- ≺ y_-`, each block in the one-torus order: a root
    /// `y_r − y_s` is positive when `r` precedes `s` in the basis order
    /// `y_-, y'_-, y'_+, y_+` of the doubled space.
    pub fn two_torus(a: i64, b: i64) -> GrahamOrder {
        let pos: Vec<i64> = (1.max(a)..=b).collect();
        let neg: Vec<i64> = (a..=0.min(b)).collect();
        let mut vars = Vec::new();
        vars.extend(pos.iter().map(|&i| VarId::y(i)));
        vars.extend(pos.iter().map(|&i| VarId::yp(i)));
        vars.extend(neg.iter().map(|&i| VarId::yp(i)));
        vars.extend(neg.iter().map(|&i| VarId::y(i)));
        GrahamOrder { vars }
    }

    /// The smallest one-torus order covering the `y` indices of `p`.
    pub fn for_poly(p: &Poly) -> GrahamOrder {
        let (a, b) = index_range(p);
        GrahamOrder::one_torus(a, b)
    }

    pub fn two_torus_for_poly(p: &Poly) -> GrahamOrder {
        let (a, b) = index_range(p);
        GrahamOrder::two_torus(a, b)
    }

    fn position(&self, v: VarId) -> Option<usize> {
        self.vars.iter().position(|&u| u == v)
    }

    /// Is `y_i − y_j` a positive root, i.e. `i ≻ j`?
    pub fn is_positive(&self, i: VarId, j: VarId) -> bool {
        matches!((self.position(i), self.position(j)), (Some(a), Some(b)) if a > b)
    }
}

fn index_range(p: &Poly) -> (i64, i64) {
    let idx: Vec<i64> = p
        .variables()
        .iter()
        .filter(|v| matches!(v.family, Family::Y | Family::YPrime))
        .map(|v| v.index)
        .collect();
    (idx.iter().copied().min().unwrap_or(0).min(0), idx.iter().copied().max().unwrap_or(1).max(1))
}

/// Result of rewriting a polynomial in the consecutive differences of an order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrahamCertificate {
    pub passed: bool,
    /// `p` with `y_{σ(k)} = t + d_1 + ⋯ + d_{k−1}`, `t` written `z` and `d_j` written `ξ_j`.
    pub expansion: Poly,
}

/// Rewrite `p` in the differences `d_j = y_{σ(j+1)} − y_{σ(j)}`; passes when
/// the result is free of `t` with nonnegative coefficients.
pub fn graham_certificate(p: &Poly, order: &GrahamOrder) -> Result<GrahamCertificate> {
    if !p.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let images: HashMap<VarId, Poly> = order
        .vars
        .iter()
        .enumerate()
        .map(|(k, &v)| {
            let mut img = Poly::z();
            for j in 1..=k {
                img.add_assign_ref(&Poly::var(VarId::xi(j as i64)));
            }
            (v, img)
        })
        .collect();
    let mut outside = false;
    for v in p.variables() {
        if matches!(v.family, Family::Y | Family::YPrime) && !images.contains_key(&v) {
            outside = true;
        }
    }
    let expansion = p.substitute(|v| images.get(&v).cloned());
    let passed = !outside && !expansion.has_family(Family::Z) && expansion.terms().all(|(_, c)| !c.is_negative());
    Ok(GrahamCertificate { passed, expansion })
}

/// Outcome of the search for a squarefree root decomposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SquarefreeSearch {
    /// Products of roots (as `(larger, smaller)` pairs) with multiplicities.
    Found(Vec<(Vec<(VarId, VarId)>, u64)>),
    NotFound,
    BudgetExhausted,
}

/// Search for `p = Σ n_I ∏_{(i,j)∈I} (y_i − y_j)` with `n_I ≥ 0`, roots positive
/// for the order, each same-sign root used at most once and each mixed-sign
/// root at most twice per product.
pub fn squarefree_decomposition(p: &Poly, order: &GrahamOrder, budget: usize) -> Result<SquarefreeSearch> {
    let deg = p.degree().unwrap_or(0) as usize;
    if !p.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    if p.is_zero() {
        return Ok(SquarefreeSearch::Found(Vec::new()));
    }
    let cert = graham_certificate(p, order)?;
    if !cert.passed {
        return Ok(SquarefreeSearch::NotFound);
    }
    let mut roots: Vec<(VarId, VarId, u32)> = Vec::new();
    for (a, &hi) in order.vars.iter().enumerate() {
        for &lo in &order.vars[..a] {
            let mixed = (hi.index <= 0) != (lo.index <= 0);
            roots.push((hi, lo, if mixed { 2 } else { 1 }));
        }
    }
    let to_d = |q: &Poly| graham_certificate(q, order).map(|c| c.expansion);
    let root_d: Vec<Poly> = roots
        .iter()
        .map(|&(i, j, _)| to_d(&Poly::var(i).sub(&Poly::var(j))))
        .collect::<Result<_>>()?;
    let mut products: Vec<(Vec<usize>, Poly)> = Vec::new();
    fn build(
        start: usize,
        left: usize,
        roots: &[(VarId, VarId, u32)],
        root_d: &[Poly],
        cur: &mut Vec<usize>,
        acc: &Poly,
        out: &mut Vec<(Vec<usize>, Poly)>,
    ) {
        if left == 0 {
            out.push((cur.clone(), acc.clone()));
            return;
        }
        for r in start..roots.len() {
            let used = cur.iter().filter(|&&x| x == r).count() as u32;
            if used >= roots[r].2 {
                continue;
            }
            cur.push(r);
            build(r, left - 1, roots, root_d, cur, &acc.mul(&root_d[r]), out);
            cur.pop();
        }
    }
    build(0, deg, &roots, &root_d, &mut Vec::new(), &Poly::one(), &mut products);
    let mut nodes = 0usize;
    let mut dead: HashSet<Poly> = HashSet::new();
    let mut chosen: Vec<usize> = Vec::new();
    fn search(
        rest: &Poly,
        products: &[(Vec<usize>, Poly)],
        chosen: &mut Vec<usize>,
        dead: &mut HashSet<Poly>,
        nodes: &mut usize,
        budget: usize,
    ) -> Option<bool> {
        if rest.is_zero() {
            return Some(true);
        }
        if dead.contains(rest) {
            return Some(false);
        }
        *nodes += 1;
        if *nodes > budget {
            return None;
        }
        let (lead, _) = rest.leading().expect("nonzero");
        for (k, (_, prod)) in products.iter().enumerate() {
            if prod.coeff(lead).is_zero() {
                continue;
            }
            let next = rest.sub(prod);
            if next.terms().any(|(_, c)| c.is_negative()) {
                continue;
            }
            chosen.push(k);
            match search(&next, products, chosen, dead, nodes, budget) {
                Some(true) => return Some(true),
                None => return None,
                Some(false) => {}
            }
            chosen.pop();
        }
        dead.insert(rest.clone());
        Some(false)
    }
    match search(&cert.expansion, &products, &mut chosen, &mut dead, &mut nodes, budget) {
        None => Ok(SquarefreeSearch::BudgetExhausted),
        Some(false) => Ok(SquarefreeSearch::NotFound),
        Some(true) => {
            let mut counts: BTreeMap<usize, u64> = BTreeMap::new();
            for k in chosen {
                *counts.entry(k).or_default() += 1;
            }
            Ok(SquarefreeSearch::Found(
                counts
                    .into_iter()
                    .map(|(k, n)| (products[k].0.iter().map(|&r| (roots[r].0, roots[r].1)).collect(), n))
                    .collect(),
            ))
        }
    }
}

/// Factorial Schur polynomial `s_λ(x_1..x_n | a)`, the ratio of
/// `det((x_j | a)^{λ_i + n − i})` by the Vandermonde determinant, where
/// `(x | a)^k = (x + a_1)⋯(x + a_k)`.
pub fn factorial_schur(lambda: &Partition, n: usize, a: &[Poly]) -> Result<Poly> {
    if lambda.len() > n {
        return Err(Error::InvalidInput(format!("{lambda} has more than {n} parts")));
    }
    let need = lambda.part(1) + n - 1;
    if a.len() < need {
        return Err(Error::InvalidInput(format!("need {need} parameters, got {}", a.len())));
    }
    let rising = |x: &Poly, k: usize| (0..k).fold(Poly::one(), |acc, r| acc.mul(&x.add(&a[r])));
    let m: Vec<Vec<Poly>> = (1..=n)
        .map(|i| {
            let k = lambda.part(i) + n - i;
            (1..=n).map(|j| rising(&Poly::x(j as i64), k)).collect()
        })
        .collect();
    let num = crate::symfunc::poly_det(&m);
    let mut vdm = Poly::one();
    for i in 1..=n as i64 {
        for j in i + 1..=n as i64 {
            vdm = vdm.mul(&Poly::x(i).sub(&Poly::x(j)));
        }
    }
    num.div_exact(&vdm)
        .ok_or_else(|| Error::SystemInconsistent("alternant is not divisible by the Vandermonde".into()))
}

/// `y ↦ 0` (and `y' ↦ 0`).
pub fn at_zero(p: &Poly) -> Poly {
    p.substitute(|v| matches!(v.family, Family::Y | Family::YPrime).then(Poly::zero))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::lr_coefficient;
    use crate::polyring::Monomial;

    fn p(s: &str) -> Poly {
        Poly::parse(s).unwrap()
    }
    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec())
    }

    #[test]
    fn comodule_examples() {
        let t = expand_comodule(&Permutation::simple(0)).unwrap();
        assert_eq!(t.entries.len(), 2);
        assert_eq!(t.get(&part(&[1]), &Permutation::identity()), p("1"));
        assert_eq!(t.get(&part(&[]), &Permutation::simple(0)), p("1"));
        let t = expand_comodule(&Permutation::identity()).unwrap();
        assert_eq!(t.entries.len(), 1);
        assert_eq!(t.get(&part(&[]), &Permutation::identity()), p("1"));
    }

    #[test]
    fn comodule_routes_agree() {
        for w in crate::permutations::permutations_in_window(-1, 2, 3) {
            assert_eq!(expand_comodule(&w).unwrap().entries, comodule_via_stanley(&w).unwrap().entries, "{w}");
        }
    }

    #[test]
    fn dual_lr_small() {
        let t = dual_lr(&part(&[1]));
        assert_eq!(t.entries.len(), 2);
        assert_eq!(t.get_lr(&part(&[]), &part(&[1])), p("1"));
        assert_eq!(t.get_lr(&part(&[1]), &part(&[])), p("1"));
    }

    #[test]
    fn dual_lr_at_zero_is_classical() {
        for n in 1..=4 {
            for lam in Partition::all_of_size(n) {
                let t = dual_lr(&lam);
                for e in &t.entries {
                    let nu = e.nu.clone().unwrap();
                    if e.mu.size() + nu.size() == lam.size() {
                        assert_eq!(e.coeff, Poly::constant(lr_coefficient(&lam, &e.mu, &nu)));
                    }
                }
            }
        }
    }

    #[test]
    fn stanley_expand_examples() {
        let one: BTreeMap<Partition, Poly> = [(part(&[1]), p("1"))].into_iter().collect();
        assert_eq!(stanley_expand(&Permutation::simple(0)).unwrap(), one);
        assert_eq!(stanley_expand(&Permutation::simple(1)).unwrap(), one);
        let id: BTreeMap<Partition, Poly> = [(part(&[]), p("1"))].into_iter().collect();
        assert_eq!(stanley_expand(&Permutation::identity()).unwrap(), id);
    }

    #[test]
    fn graham_examples() {
        let ord = GrahamOrder::one_torus(-2, 3);
        assert!(graham_certificate(&p("y0 - y1"), &ord).unwrap().passed);
        assert!(graham_certificate(&p("y0^2 - 2*y0*y1 + y1^2"), &ord).unwrap().passed);
        assert!(!graham_certificate(&p("y1 - y0"), &ord).unwrap().passed);
        assert!(!graham_certificate(&p("y0 + y1"), &ord).unwrap().passed);
        assert!(graham_certificate(&p("y0 + y1^2"), &ord).is_err());
    }

    fn recombine(d: &[(Vec<(VarId, VarId)>, u64)]) -> Poly {
        let mut out = Poly::zero();
        for (roots, n) in d {
            let prod = roots.iter().fold(Poly::one(), |acc, &(i, j)| acc.mul(&Poly::var(i).sub(&Poly::var(j))));
            out.add_assign_ref(&prod.scale(&BigInt::from(*n)));
        }
        out
    }

    #[test]
    fn squarefree_examples() {
        let ord = GrahamOrder::one_torus(-1, 2);
        match squarefree_decomposition(&p("y0 - y1"), &ord, 1000).unwrap() {
            SquarefreeSearch::Found(d) => assert_eq!(recombine(&d), p("y0 - y1")),
            other => panic!("{other:?}"),
        }
        assert_eq!(squarefree_decomposition(&p("y1 - y0"), &ord, 1000).unwrap(), SquarefreeSearch::NotFound);
        let sq = p("y0^2 - 2*y0*y1 + y1^2");
        match squarefree_decomposition(&sq, &ord, 10000).unwrap() {
            SquarefreeSearch::Found(d) => assert_eq!(recombine(&d), sq),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn two_torus_small() {
        let t = two_torus_dual_lr(&part(&[1]));
        assert_eq!(t.entries.len(), 2);
        assert_eq!(t.get_lr(&part(&[]), &part(&[1])), p("1"));
        assert_eq!(t.get_lr(&part(&[1]), &part(&[])), p("1"));
    }

    #[test]
    fn factorial_schur_examples() {
        let a: Vec<Poly> = (1..=6).map(|i| Poly::var(VarId::xi(i))).collect();
        assert_eq!(factorial_schur(&part(&[]), 2, &a).unwrap(), p("1"));
        assert_eq!(factorial_schur(&part(&[1]), 1, &a).unwrap(), Poly::x(1).add(&a[0]));
        let zeros = vec![Poly::zero(); 6];
        let lam = part(&[2, 1]);
        let s = factorial_schur(&lam, 3, &zeros).unwrap();
        // m_21 + 2 m_111 in three variables
        assert_eq!(s.terms().count(), 7);
        assert_eq!(s.coeff(&Monomial::from_pairs([(VarId::x(1), 1), (VarId::x(2), 1), (VarId::x(3), 1)])), BigInt::from(2));
        assert_eq!(s.coeff(&Monomial::from_pairs([(VarId::x(1), 2), (VarId::x(2), 1)])), BigInt::from(1));
    }

    #[test]
    fn factorial_schur_vanishing() {
        let n = 2;
        let a: Vec<Poly> = (1..=6).map(|i| Poly::var(VarId::xi(i))).collect();
        let parts: Vec<Partition> = (0..=3).flat_map(Partition::all_of_size).filter(|l| l.len() <= n).collect();
        for lam in &parts {
            let s = factorial_schur(lam, n, &a).unwrap();
            for mu in &parts {
                let pt = |j: usize| a[mu.part(j) + n - j].neg();
                let val = s.substitute(|v| (v.family == Family::X).then(|| pt(v.index as usize)));
                if !mu.contains(lam) {
                    assert!(val.is_zero(), "{lam} at {mu}");
                }
                if mu == lam {
                    assert!(!val.is_zero(), "{lam} at itself");
                }
            }
        }
    }
}
