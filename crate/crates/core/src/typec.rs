//! The type C coefficient ring `Γ = Λ[z]/(C_pp)` and its maps.

use crate::error::{Error, Result};
use crate::permutations::Partition;
use crate::polyring::{binomial, Family, Monomial, Poly, Series, VarId};
use crate::quotient::{monomials_of_degree, QuotientPiece};
use crate::schubert::max_index;
use crate::symfunc::{elementary, family_component, h_monomial};
use num_bigint::BigInt;
use num_traits::Zero;
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

/// `C_pp = Σ_{0≤i≤j≤p} (−1)^j (C(j,i) + C(j−1,i)) z^i c_{p−i+j} c_{p−j}`.
pub fn cpp_relation(p: usize) -> Poly {
    let p = p as i64;
    let mut out = Poly::zero();
    for j in 0..=p {
        for i in 0..=j {
            let mut coeff = binomial(j, i) + binomial(j - 1, i);
            if j % 2 == 1 {
                coeff = -coeff;
            }
            if coeff.is_zero() {
                continue;
            }
            let t = Poly::z()
                .pow(i as u32)
                .mul(&family_component(Family::C, p - i + j))
                .mul(&family_component(Family::C, p - j));
            out.add_assign_ref(&t.scale(&coeff));
        }
    }
    out
}

/// `c̄_p = Σ_i C(p−1,i−1) (−z)^{p−i} (−1)^i c_i`, the series with `c·c̄ = 1` in `Γ`.
pub fn c_bar(cap: usize) -> Series {
    let mut comps = vec![Poly::one()];
    for p in 1..=cap as i64 {
        let mut s = Poly::zero();
        for i in 1..=p {
            let mut coeff = binomial(p - 1, i - 1);
            if p % 2 == 1 {
                coeff = -coeff;
            }
            s.add_assign_ref(&Poly::z().pow((p - i) as u32).mul(&Poly::c(i)).scale(&coeff));
        }
        comps.push(s);
    }
    Series::from_components(comps)
}

/// The twisted involution `𝛚(c_k) = Σ_{i=1}^k C(k−1,i−1) (−z)^{k−i} e_i(c)`.
pub fn omega_c(f: &Poly) -> Poly {
    let cap = max_index(f, Family::C);
    let images: Vec<Poly> = (0..=cap as i64)
        .map(|k| {
            if k == 0 {
                return Poly::one();
            }
            let mut s = Poly::zero();
            for i in 1..=k {
                let mut coeff = binomial(k - 1, i - 1);
                if (k - i) % 2 == 1 {
                    coeff = -coeff;
                }
                s.add_assign_ref(&Poly::z().pow((k - i) as u32).mul(&elementary(i as usize)).scale(&coeff));
            }
            s
        })
        .collect();
    f.substitute(|v| (v.family == Family::C).then(|| images[v.index as usize].clone()))
}

/// Label of a basis element `z^a c_λ`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GammaLabel {
    pub z: u32,
    pub lambda: Partition,
}

fn gamma_piece(d: u32, with_z: bool) -> Result<Arc<QuotientPiece<GammaLabel>>> {
    type Cache = RwLock<HashMap<(u32, bool), Arc<QuotientPiece<GammaLabel>>>>;
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(p) = cache.read().expect("gamma cache lock").get(&(d, with_z)) {
        return Ok(p.clone());
    }
    let mut vars: Vec<VarId> = (1..=d as i64).map(VarId::c).collect();
    if with_z {
        vars.push(VarId::z());
    }
    let space = monomials_of_degree(&vars, d);
    let zmax = if with_z { d } else { 0 };
    let mut basis = Vec::new();
    for a in 0..=zmax {
        for lam in Partition::strict_of_size((d - a) as usize) {
            let m = h_monomial(Family::C, &lam).mul(&Monomial::from_pairs([(VarId::z(), a)]));
            basis.push((GammaLabel { z: a, lambda: lam }, Poly::term(1, m)));
        }
    }
    let mut ideal = Vec::new();
    for p in 1..=(d / 2) {
        let mut g = cpp_relation(p as usize);
        if !with_z {
            g = g.substitute(|v| (v.family == Family::Z).then(Poly::zero));
        }
        for m in monomials_of_degree(&vars, d - 2 * p) {
            ideal.push(g.mul_monomial(&m, &BigInt::from(1)));
        }
    }
    let piece = Arc::new(QuotientPiece::new(&space, basis, &ideal)?);
    cache.write().expect("gamma cache lock").insert((d, with_z), piece.clone());
    Ok(piece)
}

/// Coordinates over `{z^a c_λ : λ strict}` of an element of `Λ[z]` of degree
/// at most `cap`.
pub fn gamma_normal_form(f: &Poly, cap: u32) -> Result<BTreeMap<GammaLabel, BigInt>> {
    check_cz(f)?;
    let mut out = BTreeMap::new();
    for d in 0..=f.degree().unwrap_or(0) {
        let part = f.homogeneous_component(d);
        if part.is_zero() {
            continue;
        }
        if d > cap {
            return Err(Error::CapExceeded { needed: d as usize, cap: cap as usize });
        }
        let piece = gamma_piece(d, true)?;
        for (label, c) in piece.labels.iter().zip(piece.coordinates(&part)?) {
            if !c.is_zero() {
                out.insert(label.clone(), c);
            }
        }
    }
    Ok(out)
}

/// The normal form as a polynomial in `z` and strict `c_λ`.
pub fn gamma_reduce(f: &Poly) -> Result<Poly> {
    gamma_reduce_with(f, true)
}

/// Normal form in the classical ring `Λ/(C_pp|_{z=0})`.
pub fn gamma_reduce_classical(f: &Poly) -> Result<Poly> {
    gamma_reduce_with(f, false)
}

fn gamma_reduce_with(f: &Poly, with_z: bool) -> Result<Poly> {
    let mut out = Poly::zero();
    for (coeff_mono, g) in f.group_by(|v| !matches!(v.family, Family::C | Family::Z)) {
        if !with_z && g.has_family(Family::Z) {
            return Err(Error::InvalidInput("z present in a classical reduction".into()));
        }
        for d in 0..=g.degree().unwrap_or(0) {
            let part = g.homogeneous_component(d);
            if part.is_zero() {
                continue;
            }
            let nf = gamma_piece(d, with_z)?.normal_form(&part)?;
            out.add_assign_ref(&nf.mul_monomial(&coeff_mono, &BigInt::from(1)));
        }
    }
    Ok(out)
}

/// Rank of the strict-partition basis in degree `d`, checked against the
/// dimension of the quotient.
pub fn strict_basis_dimension(d: u32, with_z: bool) -> Result<usize> {
    Ok(gamma_piece(d, with_z)?.dimension())
}

fn check_cz(f: &Poly) -> Result<()> {
    if f.variables().iter().any(|v| !matches!(v.family, Family::C | Family::Z)) {
        return Err(Error::InvalidInput("expected a polynomial in c and z".into()));
    }
    Ok(())
}

/// The surjection `Λ[z][x,y] → Γ[x_+,y_+]`: `x_i ↦ z − x_{−i}` for `i < 0`,
/// likewise for `y`, followed by reduction in `Γ`.
pub fn type_a_to_c(p: &Poly) -> Result<Poly> {
    if p.variables().iter().any(|v| matches!(v.family, Family::X | Family::Y) && v.index == 0) {
        return Err(Error::IndexZeroPresent);
    }
    let img = p.substitute(|v| match v.family {
        Family::X if v.index < 0 => Some(Poly::z().sub(&Poly::x(-v.index))),
        Family::Y if v.index < 0 => Some(Poly::z().sub(&Poly::y(-v.index))),
        _ => None,
    });
    gamma_reduce(&img)
}

/// Image of `C_pp` under
/// `c ↦ ∏_{i≤ny} (1+y_i)/(1−y_i+z) · ∏_{i≤nx} (1+x_i+z)/(1−x_i)`; returns
/// the first nonzero term of the image on failure.
pub fn gamma_embed_check(p: usize, nx: usize, ny: usize) -> std::result::Result<(), Poly> {
    let cap = 2 * p;
    let mut num = Vec::new();
    let mut den = Vec::new();
    for i in 1..=ny as i64 {
        num.push(Poly::y(i));
        den.push(Poly::z().sub(&Poly::y(i)));
    }
    for i in 1..=nx as i64 {
        num.push(Poly::x(i).add(&Poly::z()));
        den.push(Poly::x(i).neg());
    }
    let series = Series::ratio(&num, &den, cap);
    let img = cpp_relation(p)
        .substitute_series(Family::C, &series)
        .expect("cap covers the relation degree");
    let witness = img.terms().next_back().map(|(m, c)| Poly::term(c.clone(), m.clone()));
    match witness {
        None => Ok(()),
        Some(w) => Err(w),
    }
}
