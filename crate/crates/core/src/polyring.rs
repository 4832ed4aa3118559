//! Sparse multivariate polynomials with arbitrary-precision integer
//! coefficients, indexed variable families and truncated power series.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

/// Variable families, listed in their canonical order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    C,
    CPrime,
    X,
    Y,
    YPrime,
    Z,
    Xi,
}

impl Family {
    pub fn code(self) -> &'static str {
        match self {
            Family::C => "c",
            Family::CPrime => "c'",
            Family::X => "x",
            Family::Y => "y",
            Family::YPrime => "y'",
            Family::Z => "z",
            Family::Xi => "xi",
        }
    }

    pub fn from_code(s: &str) -> Option<Family> {
        Some(match s {
            "c" => Family::C,
            "c'" => Family::CPrime,
            "x" => Family::X,
            "y" => Family::Y,
            "y'" => Family::YPrime,
            "z" => Family::Z,
            "xi" => Family::Xi,
            _ => return None,
        })
    }

    fn positive_index(self) -> bool {
        matches!(self, Family::C | Family::CPrime | Family::Xi)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VarId {
    pub family: Family,
    pub index: i64,
}

impl VarId {
    pub fn new(family: Family, index: i64) -> Result<VarId> {
        if family.positive_index() && index < 1 {
            return Err(Error::InvalidVariable(format!(
                "{}{} needs a positive index",
                family.code(),
                index
            )));
        }
        if family == Family::Z && index != 0 {
            return Err(Error::InvalidVariable("z carries no index".into()));
        }
        Ok(VarId { family, index })
    }

    pub fn c(k: i64) -> VarId {
        assert!(k >= 1);
        VarId { family: Family::C, index: k }
    }
    pub fn cp(k: i64) -> VarId {
        assert!(k >= 1);
        VarId { family: Family::CPrime, index: k }
    }
    pub fn x(i: i64) -> VarId {
        VarId { family: Family::X, index: i }
    }
    pub fn y(i: i64) -> VarId {
        VarId { family: Family::Y, index: i }
    }
    pub fn yp(i: i64) -> VarId {
        VarId { family: Family::YPrime, index: i }
    }
    pub fn z() -> VarId {
        VarId { family: Family::Z, index: 0 }
    }
    pub fn xi(i: i64) -> VarId {
        assert!(i >= 1);
        VarId { family: Family::Xi, index: i }
    }

    /// Graded degree: c_k and c'_k have degree k, everything else degree 1.
    pub fn degree(self) -> u32 {
        match self.family {
            Family::C | Family::CPrime => self.index as u32,
            _ => 1,
        }
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::Z => write!(f, "z"),
            fam if self.index < 0 => write!(f, "{}({})", fam.code(), self.index),
            fam => write!(f, "{}{}", fam.code(), self.index),
        }
    }
}

/// A monomial: sorted `(variable, exponent)` pairs with positive exponents.
///
/// Ordered by graded degree, then lexicographically with smaller variables
/// more significant. This is a monomial order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    deg: u32,
    vars: Vec<(VarId, u32)>,
}

impl Monomial {
    pub fn one() -> Monomial {
        Monomial::default()
    }

    pub fn var(v: VarId) -> Monomial {
        Monomial { deg: v.degree(), vars: vec![(v, 1)] }
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (VarId, u32)>) -> Monomial {
        let mut acc: BTreeMap<VarId, u32> = BTreeMap::new();
        for (v, e) in pairs {
            if e > 0 {
                *acc.entry(v).or_insert(0) += e;
            }
        }
        let vars: Vec<(VarId, u32)> = acc.into_iter().collect();
        let deg = vars.iter().map(|(v, e)| v.degree() * e).sum();
        Monomial { deg, vars }
    }

    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn total_exponent(&self) -> u32 {
        self.vars.iter().map(|(_, e)| e).sum()
    }

    pub fn vars(&self) -> &[(VarId, u32)] {
        &self.vars
    }

    pub fn is_one(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn exponent(&self, v: VarId) -> u32 {
        match self.vars.binary_search_by(|(w, _)| w.cmp(&v)) {
            Ok(i) => self.vars[i].1,
            Err(_) => 0,
        }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut vars = Vec::with_capacity(self.vars.len() + other.vars.len());
        let (mut i, mut j) = (0, 0);
        while i < self.vars.len() && j < other.vars.len() {
            let (a, ea) = self.vars[i];
            let (b, eb) = other.vars[j];
            match a.cmp(&b) {
                Ordering::Less => {
                    vars.push((a, ea));
                    i += 1;
                }
                Ordering::Greater => {
                    vars.push((b, eb));
                    j += 1;
                }
                Ordering::Equal => {
                    vars.push((a, ea + eb));
                    i += 1;
                    j += 1;
                }
            }
        }
        vars.extend_from_slice(&self.vars[i..]);
        vars.extend_from_slice(&other.vars[j..]);
        Monomial { deg: self.deg + other.deg, vars }
    }

    /// Quotient `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut vars = Vec::with_capacity(self.vars.len());
        let mut j = 0;
        for &(a, ea) in &self.vars {
            if j < other.vars.len() && other.vars[j].0 == a {
                let eb = other.vars[j].1;
                if eb > ea {
                    return None;
                }
                if ea > eb {
                    vars.push((a, ea - eb));
                }
                j += 1;
            } else if j < other.vars.len() && other.vars[j].0 < a {
                return None;
            } else {
                vars.push((a, ea));
            }
        }
        if j < other.vars.len() {
            return None;
        }
        Some(Monomial { deg: self.deg - other.deg, vars })
    }

    /// Split into the part whose variables satisfy `pred` and the rest.
    pub fn split(&self, pred: impl Fn(VarId) -> bool) -> (Monomial, Monomial) {
        let (a, b): (Vec<_>, Vec<_>) = self.vars.iter().partition(|(v, _)| pred(*v));
        (Monomial::from_sorted(a), Monomial::from_sorted(b))
    }

    fn from_sorted(vars: Vec<(VarId, u32)>) -> Monomial {
        let deg = vars.iter().map(|(v, e)| v.degree() * e).sum();
        Monomial { deg, vars }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.deg.cmp(&other.deg) {
            Ordering::Equal => {}
            o => return o,
        }
        let (a, b) = (&self.vars, &other.vars);
        let (mut i, mut j) = (0, 0);
        loop {
            match (a.get(i), b.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some((va, ea)), Some((vb, eb))) => {
                    if va == vb {
                        if ea != eb {
                            return ea.cmp(eb);
                        }
                        i += 1;
                        j += 1;
                    } else if va < vb {
                        return Ordering::Greater;
                    } else {
                        return Ordering::Less;
                    }
                }
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.vars.is_empty() {
            return write!(f, "1");
        }
        for (k, (v, e)) in self.vars.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Exact sparse polynomial. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Default, Hash)]
pub struct Poly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly::default()
    }

    pub fn one() -> Poly {
        Poly::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Poly {
        Poly::term(c, Monomial::one())
    }

    pub fn term(c: impl Into<BigInt>, m: Monomial) -> Poly {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    pub fn var(v: VarId) -> Poly {
        Poly::term(1, Monomial::var(v))
    }

    pub fn c(k: i64) -> Poly {
        if k == 0 {
            Poly::one()
        } else if k < 0 {
            Poly::zero()
        } else {
            Poly::var(VarId::c(k))
        }
    }

    pub fn x(i: i64) -> Poly {
        Poly::var(VarId::x(i))
    }

    pub fn y(i: i64) -> Poly {
        Poly::var(VarId::y(i))
    }

    pub fn z() -> Poly {
        Poly::var(VarId::z())
    }

    pub fn from_terms(it: impl IntoIterator<Item = (Monomial, BigInt)>) -> Poly {
        let mut p = Poly::zero();
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms.iter().next().map(|(m, c)| m.is_one() && c.is_one()).unwrap_or(false)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending canonical order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> BTreeMap<Monomial, BigInt> {
        self.terms
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(&Monomial::one())
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Largest term in the canonical order.
    pub fn leading(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    /// Maximal graded degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.keys().map(|m| m.degree());
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    pub fn homogeneous_component(&self, d: u32) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn truncate(&self, cap: u32) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() <= cap)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn variables(&self) -> Vec<VarId> {
        let mut vs: Vec<VarId> = self
            .terms
            .keys()
            .flat_map(|m| m.vars.iter().map(|(v, _)| *v))
            .collect();
        vs.sort();
        vs.dedup();
        vs
    }

    pub fn has_family(&self, fam: Family) -> bool {
        self.terms.keys().any(|m| m.vars.iter().any(|(v, _)| v.family == fam))
    }

    pub fn scale(&self, c: &BigInt) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &BigInt) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(n, k)| (n.mul(m), k * c)).collect() }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        out.add_assign_ref(other);
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        out.sub_assign_ref(other);
        out
    }

    pub fn neg(&self) -> Poly {
        Poly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }

    pub fn add_assign_ref(&mut self, other: &Poly) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    pub fn sub_assign_ref(&mut self, other: &Poly) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), -c);
        }
    }

    /// `self += c * m * other`
    pub fn add_scaled(&mut self, other: &Poly, c: &BigInt, m: &Monomial) {
        if c.is_zero() {
            return;
        }
        for (n, k) in &other.terms {
            self.add_term(n.mul(m), k * c);
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut acc: HashMap<Monomial, BigInt> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let m = m1.mul(m2);
                let c = c1 * c2;
                match acc.get_mut(&m) {
                    Some(v) => *v += c,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        Poly { terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    /// Product truncated to graded degree at most `cap`.
    pub fn mul_trunc(&self, other: &Poly, cap: u32) -> Poly {
        let mut acc: HashMap<Monomial, BigInt> = HashMap::new();
        for (m1, c1) in &self.terms {
            if m1.degree() > cap {
                continue;
            }
            for (m2, c2) in &other.terms {
                if m1.degree() + m2.degree() > cap {
                    continue;
                }
                *acc.entry(m1.mul(m2)).or_insert_with(BigInt::zero) += c1 * c2;
            }
        }
        Poly { terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut out = Poly::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Exact quotient by `d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        let (lm, lc) = d.leading()?;
        let (lm, lc) = (lm.clone(), lc.clone());
        let mut r = self.clone();
        let mut q = Poly::zero();
        while let Some((m, c)) = r.leading() {
            let qm = m.div(&lm)?;
            let (qc, rem) = c.div_rem(&lc);
            if !rem.is_zero() {
                return None;
            }
            r.add_scaled(d, &-&qc, &qm);
            q.add_term(qm, qc);
        }
        Some(q)
    }

    /// Divide every coefficient by `c`, failing if any is not divisible.
    pub fn div_scalar(&self, c: &BigInt) -> Option<Poly> {
        let mut terms = BTreeMap::new();
        for (m, k) in &self.terms {
            let (q, r) = k.div_rem(c);
            if !r.is_zero() {
                return None;
            }
            terms.insert(m.clone(), q);
        }
        Some(Poly { terms })
    }

    /// Replace variables by polynomials. `f` returns `None` to keep a variable.
    pub fn substitute(&self, f: impl Fn(VarId) -> Option<Poly>) -> Poly {
        let mut images: HashMap<VarId, Option<Poly>> = HashMap::new();
        let mut powers: HashMap<(VarId, u32), Poly> = HashMap::new();
        let mut out: HashMap<Monomial, BigInt> = HashMap::new();
        for (m, c) in &self.terms {
            let mut kept: Vec<(VarId, u32)> = Vec::new();
            let mut factor = Poly::constant(c.clone());
            for &(v, e) in &m.vars {
                let img = images.entry(v).or_insert_with(|| f(v));
                match img {
                    None => kept.push((v, e)),
                    Some(p) => {
                        let pw = powers.entry((v, e)).or_insert_with(|| p.pow(e)).clone();
                        factor = factor.mul(&pw);
                    }
                }
                if factor.is_zero() {
                    break;
                }
            }
            if factor.is_zero() {
                continue;
            }
            let km = Monomial::from_sorted(kept);
            for (n, k) in factor.terms {
                *out.entry(n.mul(&km)).or_insert_with(BigInt::zero) += k;
            }
        }
        Poly { terms: out.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    /// Rename variables, optionally negating them: `f(v) = (w, neg)` sends
    /// `v` to `w` or `-w`.
    pub fn rename(&self, f: impl Fn(VarId) -> (VarId, bool)) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut neg = false;
            let pairs: Vec<(VarId, u32)> = m
                .vars
                .iter()
                .map(|&(v, e)| {
                    let (w, n) = f(v);
                    if n && e % 2 == 1 {
                        neg = !neg;
                    }
                    (w, e)
                })
                .collect();
            let c = if neg { -c } else { c.clone() };
            out.add_term(Monomial::from_pairs(pairs), c);
        }
        out
    }

    /// Replace each variable `family_k` (k ≥ 1) with component `k` of `s`.
    pub fn substitute_series(&self, family: Family, s: &Series) -> Result<Poly> {
        for m in self.terms.keys() {
            for (v, _) in &m.vars {
                if v.family == family && v.index as usize > s.cap() {
                    return Err(Error::CapExceeded { needed: v.index as usize, cap: s.cap() });
                }
            }
        }
        Ok(self.substitute(|v| {
            if v.family == family {
                Some(s.component(v.index as usize).clone())
            } else {
                None
            }
        }))
    }

    /// Group terms by the part of the monomial built from variables
    /// satisfying `pred`; the values hold the remaining factors.
    pub fn group_by(&self, pred: impl Fn(VarId) -> bool) -> BTreeMap<Monomial, Poly> {
        let mut out: BTreeMap<Monomial, Poly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let (a, b) = m.split(&pred);
            out.entry(a).or_default().add_term(b, c.clone());
        }
        out
    }

    /// Evaluate all coefficients modulo `p` at a numeric point.
    pub fn eval_mod(&self, p: u64, val: &impl Fn(VarId) -> u64) -> u64 {
        let mut acc: u64 = 0;
        for (m, c) in &self.terms {
            let mut t = bigint_mod(c, p);
            for &(v, e) in &m.vars {
                t = mulmod(t, powmod(val(v), e as u64, p), p);
            }
            acc = addmod(acc, t, p);
        }
        acc
    }

    /// Canonical text form, highest terms first.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            if m.is_one() {
                s.push_str(&a.to_string());
            } else if a.is_one() {
                s.push_str(&m.to_string());
            } else {
                s.push_str(&format!("{a}*{m}"));
            }
        }
        s
    }

    pub fn to_json_value(&self) -> PolyJson {
        PolyJson {
            terms: self
                .terms
                .iter()
                .rev()
                .map(|(m, c)| TermJson {
                    coeff: c.to_string(),
                    vars: m
                        .vars
                        .iter()
                        .map(|(v, e)| (v.family.code().to_string(), v.index, *e))
                        .collect(),
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_value()).expect("polynomial serializes")
    }

    pub fn from_json_value(j: &PolyJson) -> Result<Poly> {
        let mut p = Poly::zero();
        for t in &j.terms {
            let c: BigInt =
                t.coeff.parse().map_err(|_| Error::Parse(format!("bad coefficient {}", t.coeff)))?;
            let mut pairs = Vec::new();
            for (fam, idx, e) in &t.vars {
                let family = Family::from_code(fam)
                    .ok_or_else(|| Error::Parse(format!("unknown family {fam}")))?;
                pairs.push((VarId::new(family, *idx)?, *e));
            }
            p.add_term(Monomial::from_pairs(pairs), c);
        }
        Ok(p)
    }

    pub fn from_json(s: &str) -> Result<Poly> {
        let j: PolyJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        Poly::from_json_value(&j)
    }

    /// Parse the text form, e.g. `2*c2*x3^2 - y(-1) + 5`.
    pub fn parse(s: &str) -> Result<Poly> {
        TextParser { s: s.as_bytes(), pos: 0 }.parse()
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl std::ops::Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        Poly::add(self, rhs)
    }
}

impl std::ops::Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        Poly::sub(self, rhs)
    }
}

impl std::ops::Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        Poly::mul(self, rhs)
    }
}

impl std::ops::Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::neg(self)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct TermJson {
    pub coeff: String,
    pub vars: Vec<(String, i64, u32)>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct PolyJson {
    pub terms: Vec<TermJson>,
}

struct TextParser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl TextParser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at byte {}", self.pos))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && (self.s[self.pos] as char).is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn parse(mut self) -> Result<Poly> {
        let mut p = Poly::zero();
        self.skip_ws();
        let mut first = true;
        loop {
            self.skip_ws();
            if self.peek().is_none() {
                if first {
                    return Err(self.err("empty input"));
                }
                break;
            }
            let mut sign = BigInt::one();
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                }
                Some(b'-') => {
                    sign = -sign;
                    self.pos += 1;
                }
                _ if !first => return Err(self.err("expected + or -")),
                _ => {}
            }
            self.skip_ws();
            let (c, m) = self.term()?;
            p.add_term(m, sign * c);
            first = false;
        }
        Ok(p)
    }

    fn number(&mut self) -> Option<BigInt> {
        let start = self.pos;
        while self.peek().map(|b| b.is_ascii_digit()).unwrap_or(false) {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        std::str::from_utf8(&self.s[start..self.pos]).ok()?.parse().ok()
    }

    fn term(&mut self) -> Result<(BigInt, Monomial)> {
        let mut coeff = BigInt::one();
        let mut pairs = Vec::new();
        loop {
            self.skip_ws();
            if let Some(n) = self.number() {
                coeff *= n;
            } else {
                pairs.push(self.factor()?);
            }
            self.skip_ws();
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok((coeff, Monomial::from_pairs(pairs)))
    }

    fn factor(&mut self) -> Result<(VarId, u32)> {
        let rest = &self.s[self.pos..];
        let (family, len) = if rest.starts_with(b"xi") {
            (Family::Xi, 2)
        } else if rest.starts_with(b"c'") {
            (Family::CPrime, 2)
        } else if rest.starts_with(b"y'") {
            (Family::YPrime, 2)
        } else if rest.starts_with(b"c") {
            (Family::C, 1)
        } else if rest.starts_with(b"x") {
            (Family::X, 1)
        } else if rest.starts_with(b"y") {
            (Family::Y, 1)
        } else if rest.starts_with(b"z") {
            (Family::Z, 1)
        } else {
            return Err(self.err("expected a variable"));
        };
        self.pos += len;
        let index = if family == Family::Z {
            0
        } else if self.peek() == Some(b'(') {
            self.pos += 1;
            let neg = if self.peek() == Some(b'-') {
                self.pos += 1;
                true
            } else {
                false
            };
            let n = self.number().ok_or_else(|| self.err("expected index"))?;
            if self.peek() != Some(b')') {
                return Err(self.err("expected )"));
            }
            self.pos += 1;
            let n: i64 = n.try_into().map_err(|_| self.err("index too large"))?;
            if neg {
                -n
            } else {
                n
            }
        } else {
            let n = self.number().ok_or_else(|| self.err("expected index"))?;
            n.try_into().map_err(|_| self.err("index too large"))?
        };
        let mut e = 1u32;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let n = self.number().ok_or_else(|| self.err("expected exponent"))?;
            e = n.try_into().map_err(|_| self.err("exponent too large"))?;
        }
        Ok((VarId::new(family, index)?, e))
    }
}

/// Truncated power series `s_0 + s_1 + ... + s_cap` with `s_k` homogeneous
/// of graded degree `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series {
    comps: Vec<Poly>,
}

impl Series {
    pub fn one(cap: usize) -> Series {
        let mut comps = vec![Poly::zero(); cap + 1];
        comps[0] = Poly::one();
        Series { comps }
    }

    /// Collect the homogeneous components of `p` up to `cap`.
    pub fn from_poly(p: &Poly, cap: usize) -> Series {
        let mut comps = vec![Poly::zero(); cap + 1];
        for (m, c) in p.terms() {
            let d = m.degree() as usize;
            if d <= cap {
                comps[d].add_term(m.clone(), c.clone());
            }
        }
        Series { comps }
    }

    pub fn from_components(comps: Vec<Poly>) -> Series {
        assert!(!comps.is_empty());
        Series { comps }
    }

    /// The generating series `1 + f_1 + f_2 + ...` of a graded family such as c.
    pub fn of_family(family: Family, cap: usize) -> Series {
        let comps = (0..=cap)
            .map(|k| if k == 0 { Poly::one() } else { Poly::var(VarId { family, index: k as i64 }) })
            .collect();
        Series { comps }
    }

    pub fn cap(&self) -> usize {
        self.comps.len() - 1
    }

    pub fn component(&self, k: usize) -> &Poly {
        &self.comps[k]
    }

    pub fn components(&self) -> &[Poly] {
        &self.comps
    }

    pub fn to_poly(&self) -> Poly {
        let mut p = Poly::zero();
        for c in &self.comps {
            p.add_assign_ref(c);
        }
        p
    }

    pub fn is_one(&self) -> bool {
        self.comps[0].is_one() && self.comps[1..].iter().all(|c| c.is_zero())
    }

    pub fn mul(&self, other: &Series) -> Series {
        let cap = self.cap().min(other.cap());
        let mut comps = vec![Poly::zero(); cap + 1];
        for (i, a) in self.comps.iter().enumerate().take(cap + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.comps.iter().enumerate().take(cap + 1 - i) {
                if b.is_zero() {
                    continue;
                }
                comps[i + j].add_assign_ref(&a.mul(b));
            }
        }
        Series { comps }
    }

    pub fn invert(&self) -> Result<Series> {
        if !self.comps[0].is_one() {
            return Err(Error::NonUnitSeries);
        }
        let cap = self.cap();
        let mut t: Vec<Poly> = vec![Poly::one()];
        for k in 1..=cap {
            let mut acc = Poly::zero();
            for i in 1..=k {
                if !self.comps[i].is_zero() && !t[k - i].is_zero() {
                    acc.sub_assign_ref(&self.comps[i].mul(&t[k - i]));
                }
            }
            t.push(acc);
        }
        Ok(Series { comps: t })
    }

    /// `1 + ell` for a homogeneous linear form `ell`.
    pub fn linear(ell: &Poly, cap: usize) -> Series {
        let mut s = Series::one(cap);
        if cap >= 1 {
            s.comps[1] = ell.clone();
        }
        s
    }

    /// `1 / (1 + ell)` expanded to `cap`.
    pub fn inv_linear(ell: &Poly, cap: usize) -> Series {
        let mut comps = vec![Poly::one()];
        let neg = ell.neg();
        for k in 1..=cap {
            let next = comps[k - 1].mul(&neg);
            comps.push(next);
        }
        Series { comps }
    }

    /// `∏(1 + n) / ∏(1 + d)` over linear forms.
    pub fn ratio(num: &[Poly], den: &[Poly], cap: usize) -> Series {
        let mut s = Series::one(cap);
        for n in num {
            s = s.mul(&Series::linear(n, cap));
        }
        for d in den {
            s = s.mul(&Series::inv_linear(d, cap));
        }
        s
    }
}

/// `∏_{v ∈ num} (1 + v) / ∏_{v ∈ den} (1 − v)` truncated at `cap`.
///
/// With `num = y_{-m+1..0}` and `den = x_{-m+1..0}` this is the
/// finite specialization series of the c variables.
pub fn range_product(num: &[VarId], den: &[VarId], cap: usize) -> Series {
    let n: Vec<Poly> = num.iter().map(|v| Poly::var(*v)).collect();
    let d: Vec<Poly> = den.iter().map(|v| Poly::var(*v).neg()).collect();
    Series::ratio(&n, &d, cap)
}

pub fn series_invert(s: &Series) -> Result<Series> {
    s.invert()
}

/// Binomial coefficient with C(n, k) = 0 whenever k < 0, k > n or n < 0.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut r = BigInt::one();
    for i in 0..k {
        r = r * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    r
}

pub(crate) fn bigint_mod(c: &BigInt, p: u64) -> u64 {
    let r = c.mod_floor(&BigInt::from(p));
    r.try_into().expect("residue fits in u64")
}

pub(crate) fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn addmod(a: u64, b: u64, p: u64) -> u64 {
    let s = a as u128 + b as u128;
    (s % p as u128) as u64
}

pub(crate) fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    r
}
