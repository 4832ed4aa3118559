//! Permutations of Z with finite support, partitions, triples, and affine
//! permutations.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeSet, HashSet};
use std::fmt;

/// A bijection of Z fixing all but finitely many integers.
///
/// Stored on its minimal window `[lo, lo + vals.len() - 1]`; the identity
/// has an empty window starting at 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    lo: i64,
    vals: Vec<i64>,
}

#[derive(Serialize, Deserialize)]
struct PermJson {
    window: (i64, i64),
    values: Vec<i64>,
}

impl Permutation {
    pub fn identity() -> Permutation {
        Permutation { lo: 1, vals: Vec::new() }
    }

    /// Build from one-line values on the window starting at `lo`.
    pub fn from_window(lo: i64, vals: Vec<i64>) -> Result<Permutation> {
        let hi = lo + vals.len() as i64 - 1;
        let mut seen = vec![false; vals.len()];
        for &v in &vals {
            if v < lo || v > hi {
                return Err(Error::InvalidPermutation(format!(
                    "value {v} outside window [{lo},{hi}]"
                )));
            }
            let k = (v - lo) as usize;
            if seen[k] {
                return Err(Error::InvalidPermutation(format!("value {v} repeated")));
            }
            seen[k] = true;
        }
        Ok(Permutation::trimmed(lo, vals))
    }

    fn trimmed(mut lo: i64, mut vals: Vec<i64>) -> Permutation {
        let mut start = 0;
        while start < vals.len() && vals[start] == lo + start as i64 {
            start += 1;
        }
        if start == vals.len() {
            return Permutation::identity();
        }
        let mut end = vals.len();
        while vals[end - 1] == lo + end as i64 - 1 {
            end -= 1;
        }
        vals.truncate(end);
        vals.drain(..start);
        lo += start as i64;
        Permutation { lo, vals }
    }

    /// The simple transposition exchanging `i` and `i + 1`.
    pub fn simple(i: i64) -> Permutation {
        Permutation { lo: i, vals: vec![i + 1, i] }
    }

    /// Product `s_{i_1} s_{i_2} ⋯` of simple transpositions.
    pub fn from_word(word: &[i64]) -> Permutation {
        word.iter().fold(Permutation::identity(), |w, &i| w.mul_simple_right(i))
    }

    pub fn is_identity(&self) -> bool {
        self.vals.is_empty()
    }

    /// Minimal window `(lo, hi)`; `None` for the identity.
    pub fn window(&self) -> Option<(i64, i64)> {
        if self.is_identity() {
            None
        } else {
            Some((self.lo, self.lo + self.vals.len() as i64 - 1))
        }
    }

    pub fn apply(&self, i: i64) -> i64 {
        let k = i - self.lo;
        if k >= 0 && (k as usize) < self.vals.len() {
            self.vals[k as usize]
        } else {
            i
        }
    }

    /// One-line values on an arbitrary window `[a, b]`.
    pub fn values_on(&self, a: i64, b: i64) -> Vec<i64> {
        (a..=b).map(|i| self.apply(i)).collect()
    }

    pub fn length(&self) -> usize {
        let v = &self.vals;
        let mut n = 0;
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                if v[i] > v[j] {
                    n += 1;
                }
            }
        }
        n
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.vals.len()];
        for (k, &v) in self.vals.iter().enumerate() {
            inv[(v - self.lo) as usize] = self.lo + k as i64;
        }
        Permutation { lo: self.lo, vals: inv }
    }

    /// Composition `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        let (a, b) = merged_window(self, other);
        if a > b {
            return Permutation::identity();
        }
        Permutation::trimmed(a, (a..=b).map(|i| self.apply(other.apply(i))).collect())
    }

    /// `self · s_i`: swap the values at positions `i` and `i + 1`.
    pub fn mul_simple_right(&self, i: i64) -> Permutation {
        let (a, b) = self.window().map(|(a, b)| (a.min(i), b.max(i + 1))).unwrap_or((i, i + 1));
        let mut vals = self.values_on(a, b);
        vals.swap((i - a) as usize, (i + 1 - a) as usize);
        Permutation::trimmed(a, vals)
    }

    /// `s_i · self`: swap the values `i` and `i + 1`.
    pub fn mul_simple_left(&self, i: i64) -> Permutation {
        let (a, b) = self.window().map(|(a, b)| (a.min(i), b.max(i + 1))).unwrap_or((i, i + 1));
        let vals = self
            .values_on(a, b)
            .into_iter()
            .map(|v| if v == i { i + 1 } else if v == i + 1 { i } else { v })
            .collect();
        Permutation::trimmed(a, vals)
    }

    /// `k_w(p, q) = #{a ≤ p : w(a) > q}`.
    pub fn rank_k(&self, p: i64, q: i64) -> usize {
        let mut n = 0usize;
        // fixed points outside the window: a in (q, p] minus [lo, hi]
        let hi = self.lo + self.vals.len() as i64 - 1;
        let count = |from: i64, to: i64| if to > from { (to - from) as usize } else { 0 };
        n += count(q, p.min(self.lo - 1));
        n += count(q.max(hi), p);
        for (k, &v) in self.vals.iter().enumerate() {
            let a = self.lo + k as i64;
            if a <= p && v > q {
                n += 1;
            }
        }
        n
    }

    pub fn descents(&self) -> Vec<i64> {
        match self.window() {
            None => Vec::new(),
            Some((a, b)) => (a..b).filter(|&i| self.apply(i) > self.apply(i + 1)).collect(),
        }
    }

    /// Is the product with `s_i` on the right longer than `self`?
    pub fn has_right_ascent(&self, i: i64) -> bool {
        self.apply(i) < self.apply(i + 1)
    }

    pub fn is_grassmannian(&self) -> bool {
        self.descents().iter().all(|&d| d == 0)
    }

    /// Membership in the subgroup preserving positive and nonpositive integers.
    pub fn preserves_sign(&self) -> bool {
        self.vals
            .iter()
            .enumerate()
            .all(|(k, &v)| (self.lo + k as i64 > 0) == (v > 0))
    }

    /// `ω(w)(i) = 1 − w(1 − i)`.
    pub fn omega(&self) -> Permutation {
        match self.window() {
            None => Permutation::identity(),
            Some((a, b)) => {
                let (na, nb) = (1 - b, 1 - a);
                Permutation::trimmed(na, (na..=nb).map(|i| 1 - self.apply(1 - i)).collect())
            }
        }
    }

    /// `γ^m(w)(i) = m + w(i − m)`.
    pub fn gamma(&self, m: i64) -> Permutation {
        if self.is_identity() {
            return Permutation::identity();
        }
        Permutation { lo: self.lo + m, vals: self.vals.iter().map(|v| v + m).collect() }
    }

    /// Boxes `(p, q)` of the diagram: `w(p) > q` and `w⁻¹(q) > p`.
    pub fn diagram(&self) -> Vec<(i64, i64)> {
        let Some((a, b)) = self.window() else { return Vec::new() };
        let inv = self.inverse();
        let mut out = Vec::new();
        for p in a..=b {
            for q in a..=b {
                if self.apply(p) > q && inv.apply(q) > p {
                    out.push((p, q));
                }
            }
        }
        out
    }

    /// Essential triples `(k, p, q)` at the southeast corners of the diagram.
    pub fn essential_set(&self) -> Vec<(usize, i64, i64)> {
        let d: HashSet<(i64, i64)> = self.diagram().into_iter().collect();
        let mut out: Vec<(usize, i64, i64)> = d
            .iter()
            .filter(|&&(p, q)| !d.contains(&(p + 1, q)) && !d.contains(&(p, q + 1)))
            .map(|&(p, q)| (self.rank_k(p, q), p, q))
            .collect();
        out.sort_by_key(|&(_, p, q)| (p, q));
        out
    }

    pub fn to_partition(&self) -> Result<Partition> {
        if !self.is_grassmannian() {
            return Err(Error::NotGrassmannian);
        }
        let mut parts = Vec::new();
        let mut k = 1i64;
        loop {
            let part = self.apply(1 - k) - 1 + k;
            if part <= 0 {
                break;
            }
            parts.push(part as usize);
            k += 1;
        }
        Ok(Partition::new(parts))
    }

    pub fn from_partition(lambda: &Partition) -> Permutation {
        let s = lambda.len() as i64;
        if s == 0 {
            return Permutation::identity();
        }
        let lo = 1 - s;
        let hi = lambda.parts()[0] as i64;
        let mut vals = Vec::new();
        let mut used = BTreeSet::new();
        for pos in lo..=0 {
            let k = 1 - pos;
            let v = lambda.part(k as usize) as i64 + 1 - k;
            vals.push(v);
            used.insert(v);
        }
        let mut next = lo;
        for _ in 1..=hi {
            while used.contains(&next) {
                next += 1;
            }
            vals.push(next);
            next += 1;
        }
        Permutation::trimmed(lo, vals)
    }

    /// Factorizations `w = u·v` with `ℓ(u) + ℓ(v) = ℓ(w)`, as pairs `(u, v)`.
    pub fn length_additive_factorizations(&self) -> Vec<(Permutation, Permutation)> {
        let l = self.length();
        let Some((a, b)) = self.window() else {
            return vec![(Permutation::identity(), Permutation::identity())];
        };
        // right factors v, grown one simple reflection at a time
        let mut seen: HashSet<Permutation> = HashSet::new();
        let mut frontier = vec![Permutation::identity()];
        seen.insert(Permutation::identity());
        let mut out = Vec::new();
        while let Some(v) = frontier.pop() {
            let u = self.compose(&v.inverse());
            out.push((u, v.clone()));
            for i in a..b {
                let nv = v.mul_simple_left(i);
                if nv.length() != v.length() + 1 || seen.contains(&nv) {
                    continue;
                }
                let nu = self.compose(&nv.inverse());
                if nu.length() + nv.length() == l {
                    seen.insert(nv.clone());
                    frontier.push(nv);
                }
            }
        }
        out.sort_by(|x, y| (x.1.length(), &x.1).cmp(&(y.1.length(), &y.1)));
        out
    }

    pub fn to_json(&self) -> String {
        let (a, b) = self.window().unwrap_or((1, 0));
        serde_json::to_string(&PermJson { window: (a, b), values: self.vals.clone() })
            .expect("permutation serializes")
    }

    pub fn from_json(s: &str) -> Result<Permutation> {
        let j: PermJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        if j.window.1 - j.window.0 + 1 != j.values.len() as i64 {
            return Err(Error::InvalidPermutation("window length mismatch".into()));
        }
        Permutation::from_window(j.window.0, j.values)
    }

    /// Parse `[2,-2,3,1,0,-3,4,-1]@-3`; without `@lo` the window starts at 1.
    pub fn parse(s: &str) -> Result<Permutation> {
        let s = s.trim();
        if s == "id" {
            return Ok(Permutation::identity());
        }
        let (body, lo) = match s.rsplit_once('@') {
            Some((b, l)) => (
                b.trim(),
                l.trim().parse::<i64>().map_err(|_| Error::Parse(format!("bad offset in {s}")))?,
            ),
            None => (s, 1),
        };
        let inner = body
            .strip_prefix('[')
            .and_then(|b| b.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("expected [..] in {s}")))?;
        let vals: Vec<i64> = if inner.trim().is_empty() {
            Vec::new()
        } else {
            inner
                .split(',')
                .map(|t| t.trim().parse::<i64>().map_err(|_| Error::Parse(format!("bad value {t}"))))
                .collect::<Result<_>>()?
        };
        Permutation::from_window(lo, vals)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vals: Vec<String> = self.vals.iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]@{}", vals.join(","), self.lo)
    }
}

fn merged_window(v: &Permutation, w: &Permutation) -> (i64, i64) {
    match (v.window(), w.window()) {
        (None, None) => (1, 0),
        (Some(x), None) | (None, Some(x)) => x,
        (Some((a, b)), Some((c, d))) => (a.min(c), b.max(d)),
    }
}

/// Bruhat order by rank dominance on the merged window rectangle.
pub fn bruhat_leq(v: &Permutation, w: &Permutation) -> bool {
    let (a, b) = merged_window(v, w);
    if a > b {
        return true;
    }
    for p in a - 1..=b {
        for q in a - 1..=b {
            if v.rank_k(p, q) > w.rank_k(p, q) {
                return false;
            }
        }
    }
    true
}

/// All permutations supported in `[a, b]` of length at most `max_len`,
/// ordered by length then one-line values.
pub fn permutations_in_window(a: i64, b: i64, max_len: usize) -> Vec<Permutation> {
    let mut levels: Vec<Vec<Permutation>> = vec![vec![Permutation::identity()]];
    let mut seen: HashSet<Permutation> = HashSet::new();
    seen.insert(Permutation::identity());
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in levels.last().expect("nonempty") {
            for i in a..b {
                if w.has_right_ascent(i) {
                    let u = w.mul_simple_right(i);
                    if seen.insert(u.clone()) {
                        next.push(u);
                    }
                }
            }
        }
        if next.is_empty() {
            break;
        }
        next.sort_by_key(|x| x.values_on(a, b));
        levels.push(next);
    }
    levels.into_iter().flatten().collect()
}

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Sorts the parts and drops zeros.
    pub fn new(mut parts: Vec<usize>) -> Partition {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Partition {
        Partition(Vec::new())
    }

    pub fn validate(parts: &[usize]) -> Result<Partition> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidInput(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition::new(parts.to_vec()))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// `λ_k` with 1-based index, zero past the end.
    pub fn part(&self, k: usize) -> usize {
        if k == 0 {
            return usize::MAX;
        }
        self.0.get(k - 1).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let n = self.0.first().copied().unwrap_or(0);
        Partition((1..=n).map(|j| self.0.iter().filter(|&&p| p >= j).count()).collect())
    }

    pub fn contains(&self, mu: &Partition) -> bool {
        mu.len() <= self.len() && mu.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// Partitions of `n` in decreasing lexicographic order.
    pub fn all_of_size(n: usize) -> Vec<Partition> {
        fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=n.min(max)).rev() {
                cur.push(p);
                rec(n - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Strict partitions of `n`.
    pub fn strict_of_size(n: usize) -> Vec<Partition> {
        Partition::all_of_size(n)
            .into_iter()
            .filter(|p| p.0.windows(2).all(|w| w[0] > w[1]))
            .collect()
    }

    /// Partitions contained in `self`.
    pub fn subpartitions(&self) -> Vec<Partition> {
        fn rec(lam: &[usize], i: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if i == lam.len() {
                out.push(Partition::new(cur.clone()));
                return;
            }
            for p in 0..=lam[i].min(max) {
                cur.push(p);
                rec(lam, i + 1, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(&self.0, 0, usize::MAX, &mut Vec::new(), &mut out);
        out.sort_by(|a, b| (a.size(), a).cmp(&(b.size(), b)));
        out
    }

    /// Multiplicities `m_1, m_2, ...` of each part.
    pub fn multiplicities(&self) -> Vec<usize> {
        let n = self.0.first().copied().unwrap_or(0);
        let mut m = vec![0; n + 1];
        for &p in &self.0 {
            m[p] += 1;
        }
        m
    }

    pub fn parse(s: &str) -> Result<Partition> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts: Vec<usize> = s
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad part {t}"))))
            .collect::<Result<_>>()?;
        Partition::validate(&parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A signed permutation, `w(−i) = −w(i)`, given by `w(1..n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SignedPermutation {
    pub values: Vec<i64>,
}

impl SignedPermutation {
    pub fn new(values: Vec<i64>) -> Result<SignedPermutation> {
        let n = values.len() as i64;
        let mut abs: Vec<i64> = values.iter().map(|v| v.abs()).collect();
        abs.sort_unstable();
        if abs != (1..=n).collect::<Vec<_>>() {
            return Err(Error::InvalidPermutation(format!("{values:?} is not a signed permutation")));
        }
        Ok(SignedPermutation { values })
    }

    pub fn apply(&self, i: i64) -> i64 {
        let n = self.values.len() as i64;
        match i {
            0 => 0,
            _ if i.abs() > n => i,
            _ if i > 0 => self.values[(i - 1) as usize],
            _ => -self.values[(-i - 1) as usize],
        }
    }
}

/// A bijection of Z with `w(i + n) = w(i) + n`, given by `w(1..n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AffinePermutation {
    pub n: usize,
    pub values: Vec<i64>,
}

impl AffinePermutation {
    pub fn identity(n: usize) -> AffinePermutation {
        AffinePermutation { n, values: (1..=n as i64).collect() }
    }

    pub fn new(n: usize, values: Vec<i64>) -> Result<AffinePermutation> {
        let w = AffinePermutation { n, values };
        if !w.is_valid() {
            return Err(Error::InvalidPermutation(format!(
                "{:?} is not a normalized affine permutation",
                w.values
            )));
        }
        Ok(w)
    }

    /// Residues form a complete system and `Σ w(i) = Σ i`.
    pub fn is_valid(&self) -> bool {
        let n = self.n as i64;
        if n == 0 || self.values.len() != self.n {
            return false;
        }
        let mut res: Vec<i64> = self.values.iter().map(|v| v.rem_euclid(n)).collect();
        res.sort_unstable();
        res.dedup();
        res.len() == self.n && self.values.iter().sum::<i64>() == n * (n + 1) / 2
    }

    pub fn apply(&self, i: i64) -> i64 {
        let n = self.n as i64;
        let r = (i - 1).rem_euclid(n);
        let q = (i - 1 - r) / n;
        self.values[r as usize] + q * n
    }

    pub fn window_values(&self, a: i64, b: i64) -> Vec<i64> {
        (a..=b).map(|i| self.apply(i)).collect()
    }

    fn spread(&self) -> i64 {
        self.values
            .iter()
            .enumerate()
            .map(|(k, &v)| (v - (k as i64 + 1)).abs())
            .max()
            .unwrap_or(0)
    }

    /// `#{1 ≤ i ≤ n, j > i : w(i) > w(j)}`.
    pub fn length(&self) -> usize {
        let n = self.n as i64;
        let reach = 2 * self.spread() + n + 1;
        let mut l = 0;
        for i in 1..=n {
            let wi = self.apply(i);
            for j in i + 1..=i + reach {
                if wi > self.apply(j) {
                    l += 1;
                }
            }
        }
        l
    }

    /// Right multiplication by the affine simple reflection `s_k`, `0 ≤ k < n`.
    pub fn mul_simple(&self, k: usize) -> AffinePermutation {
        let mut values = self.values.clone();
        let n = self.n as i64;
        if self.n == 1 {
            return self.clone();
        }
        if k == 0 {
            let first = values[0];
            let last = values[self.n - 1];
            values[0] = last - n;
            values[self.n - 1] = first + n;
        } else {
            values.swap(k - 1, k);
        }
        AffinePermutation { n: self.n, values }
    }

    pub fn rank_k(&self, p: i64, q: i64) -> usize {
        let lo = q - self.spread() - 1;
        (lo..=p).filter(|&a| self.apply(a) > q).count()
    }

    /// Positions `i ≤ 0` with `w(i) > 0` and `j > 0` with `w(j) ≤ 0`.
    pub fn sign_changes(&self) -> (Vec<i64>, Vec<i64>) {
        let s = self.spread() + 1;
        let up = (-s..=0).filter(|&i| self.apply(i) > 0).collect();
        let down = (1..=s).filter(|&j| self.apply(j) <= 0).collect();
        (up, down)
    }

    /// All affine permutations of length at most `max_len`.
    pub fn up_to_length(n: usize, max_len: usize) -> Vec<AffinePermutation> {
        let mut seen: HashSet<AffinePermutation> = HashSet::new();
        let id = AffinePermutation::identity(n);
        seen.insert(id.clone());
        let mut level = vec![id];
        let mut out = level.clone();
        for l in 1..=max_len {
            let mut next = Vec::new();
            for w in &level {
                for k in 0..n {
                    let u = w.mul_simple(k);
                    if u.length() == l && seen.insert(u.clone()) {
                        next.push(u);
                    }
                }
            }
            next.sort();
            out.extend(next.iter().cloned());
            level = next;
        }
        out
    }
}

/// Vexillary data `(k, p, q)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Triple {
    pub k: Vec<usize>,
    pub p: Vec<i64>,
    pub q: Vec<i64>,
}

impl Triple {
    pub fn new(k: Vec<usize>, p: Vec<i64>, q: Vec<i64>) -> Result<Triple> {
        let t = Triple { k, p, q };
        t.validate()?;
        Ok(t)
    }

    pub fn l(&self) -> Vec<i64> {
        (0..self.k.len()).map(|i| self.q[i] - self.p[i] + self.k[i] as i64).collect()
    }

    pub fn validate(&self) -> Result<()> {
        let s = self.k.len();
        if self.p.len() != s || self.q.len() != s {
            return Err(Error::InvalidTriple("k, p, q lengths differ".into()));
        }
        if self.k.first().map(|&k| k == 0).unwrap_or(false) || self.k.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidTriple("k must be strictly increasing and positive".into()));
        }
        if self.p.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidTriple("p must be weakly increasing".into()));
        }
        if self.q.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidTriple("q must be weakly decreasing".into()));
        }
        let l = self.l();
        if l.windows(2).any(|w| w[0] < w[1]) || l.last().map(|&x| x < 0).unwrap_or(false) {
            return Err(Error::InvalidTriple(format!("l = {l:?} must be weakly decreasing and nonnegative")));
        }
        Ok(())
    }

    /// `λ_j = l_i` for `k_{i−1} < j ≤ k_i`.
    pub fn lambda(&self) -> Result<Partition> {
        self.validate()?;
        let l = self.l();
        let mut parts = Vec::new();
        let mut prev = 0;
        for (i, &ki) in self.k.iter().enumerate() {
            for _ in prev..ki {
                parts.push(l[i] as usize);
            }
            prev = ki;
        }
        Ok(Partition::new(parts))
    }

    /// Minimal-length permutation satisfying `k_w(p_i, q_i) ≥ k_i`.
    pub fn to_permutation(&self) -> Result<Permutation> {
        self.validate()?;
        if self.k.is_empty() {
            return Ok(Permutation::identity());
        }
        let l = self.l();
        let maxl = *l.iter().max().expect("nonempty");
        let maxk = *self.k.iter().max().expect("nonempty") as i64;
        let a = self.p.iter().min().expect("nonempty") - maxl;
        let b = self.q.iter().max().expect("nonempty") + maxk;
        let ok = |w: &Permutation| (0..self.k.len()).all(|i| w.rank_k(self.p[i], self.q[i]) >= self.k[i]);
        let mut level = vec![Permutation::identity()];
        let mut seen: HashSet<Permutation> = level.iter().cloned().collect();
        loop {
            let hits: Vec<&Permutation> = level.iter().filter(|w| ok(w)).collect();
            match hits.len() {
                0 => {}
                1 => return Ok(hits[0].clone()),
                _ => {
                    return Err(Error::Ambiguous(format!(
                        "{} minimal permutations for {:?}",
                        hits.len(),
                        self
                    )))
                }
            }
            let mut next = Vec::new();
            for w in &level {
                for i in a..b {
                    if w.has_right_ascent(i) {
                        let u = w.mul_simple_right(i);
                        if seen.insert(u.clone()) {
                            next.push(u);
                        }
                    }
                }
            }
            if next.is_empty() {
                return Err(Error::InvalidTriple(format!("no permutation in [{a},{b}] satisfies {:?}", self)));
            }
            level = next;
        }
    }

    /// The triple whose conditions define the Grassmannian permutation of `λ`.
    pub fn grassmannian(lambda: &Partition) -> Triple {
        let mut k = Vec::new();
        let mut q = Vec::new();
        for j in 1..=lambda.len() {
            if lambda.part(j) > lambda.part(j + 1) {
                k.push(j);
                q.push(lambda.part(j) as i64 - j as i64);
            }
        }
        let p = vec![0; k.len()];
        Triple { k, p, q }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fig1() -> Permutation {
        Permutation::parse("[2,-2,3,1,0,-3,4,-1]@-3").unwrap()
    }

    #[test]
    fn figure_rank() {
        assert_eq!(fig1().rank_k(3, -1), 5);
        assert_eq!(Permutation::identity().rank_k(0, 0), 0);
        assert_eq!(Permutation::simple(0).rank_k(0, 0), 1);
        assert_eq!(Permutation::identity().rank_k(0, -3), 3);
    }

    #[test]
    fn length_counts_inversions() {
        let w = fig1();
        let v = w.values_on(-3, 4);
        let mut n = 0;
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                if v[i] > v[j] {
                    n += 1;
                }
            }
        }
        assert_eq!(w.length(), n);
        assert_eq!(Permutation::simple(0).length(), 1);
        assert_eq!(Permutation::identity().length(), 0);
    }

    #[test]
    fn bruhat_examples() {
        let s0 = Permutation::simple(0);
        let s1 = Permutation::simple(1);
        assert!(bruhat_leq(&Permutation::identity(), &s1));
        assert!(!bruhat_leq(&s0, &s1));
        assert!(bruhat_leq(&s1, &s1));
        assert!(bruhat_leq(&s1, &Permutation::from_word(&[1, 2])));
    }

    #[test]
    fn essential_examples() {
        assert_eq!(Permutation::simple(1).essential_set(), vec![(1, 1, 1)]);
        assert_eq!(Permutation::simple(0).essential_set(), vec![(1, 0, 0)]);
        assert!(Permutation::identity().essential_set().is_empty());
    }

    #[test]
    fn grassmannian_examples() {
        assert_eq!(Permutation::from_partition(&Partition::new(vec![1])), Permutation::simple(0));
        assert_eq!(Permutation::from_partition(&Partition::empty()), Permutation::identity());
        let w = Permutation::from_partition(&Partition::new(vec![3, 1]));
        assert_eq!(w.values_on(-2, 3), vec![-2, 0, 3, -1, 1, 2]);
        assert_eq!(w.to_partition().unwrap(), Partition::new(vec![3, 1]));
        assert_eq!(w.length(), 4);
        assert_eq!(Permutation::simple(1).to_partition(), Err(Error::NotGrassmannian));
    }

    #[test]
    fn omega_gamma_examples() {
        for k in 1..4 {
            assert_eq!(Permutation::simple(k).omega(), Permutation::simple(-k));
        }
        assert_eq!(Permutation::simple(0).omega(), Permutation::simple(0));
        assert_eq!(Permutation::simple(0).gamma(1), Permutation::simple(1));
        let w = fig1();
        assert_eq!(w.omega().omega(), w);
        assert_eq!(w.gamma(1).gamma(-1), w);
        assert_eq!(w.gamma(0), w);
    }

    #[test]
    fn factorization_examples() {
        let s0 = Permutation::simple(0);
        assert_eq!(s0.length_additive_factorizations().len(), 2);
        let w = Permutation::from_word(&[0, 1]);
        let fs = w.length_additive_factorizations();
        let mut brute = 0;
        let all = permutations_in_window(0, 2, 3);
        for u in &all {
            for v in &all {
                if u.compose(v) == w && u.length() + v.length() == w.length() {
                    brute += 1;
                }
            }
        }
        assert_eq!(fs.len(), brute);
        let signed: Vec<_> = s0
            .length_additive_factorizations()
            .into_iter()
            .filter(|(_, v)| v.preserves_sign())
            .collect();
        assert_eq!(signed, vec![(s0.clone(), Permutation::identity())]);
    }

    #[test]
    fn triple_examples() {
        let t = Triple::new(vec![1], vec![0], vec![2]).unwrap();
        assert_eq!(t.lambda().unwrap(), Partition::new(vec![3]));
        assert_eq!(t.to_permutation().unwrap(), Permutation::from_partition(&Partition::new(vec![3])));
        assert!(Triple::new(vec![1, 3], vec![0, 0], vec![2, 1]).is_err());
        let t0 = Triple::new(vec![1], vec![0], vec![0]).unwrap();
        assert_eq!(t0.to_permutation().unwrap(), Permutation::simple(0));
        let e = Triple::new(vec![], vec![], vec![]).unwrap();
        assert_eq!(e.to_permutation().unwrap(), Permutation::identity());
        assert_eq!(Triple::new(vec![1], vec![1], vec![0]).unwrap().lambda().unwrap(), Partition::empty());
    }

    #[test]
    fn affine_examples() {
        assert!(AffinePermutation::identity(3).is_valid());
        assert!(AffinePermutation::new(2, vec![2, 1]).is_ok());
        assert!(AffinePermutation::new(2, vec![1, 1]).is_err());
        let w = AffinePermutation::new(2, vec![2, 1]).unwrap();
        assert_eq!(w.window_values(-1, 4), vec![0, -1, 2, 1, 4, 3]);
        assert_eq!(w.length(), 1);
        assert_eq!(AffinePermutation::up_to_length(2, 3).len(), 7);
    }

    #[test]
    fn text_and_json() {
        let w = fig1();
        assert_eq!(Permutation::parse(&w.to_string()).unwrap(), w);
        assert_eq!(Permutation::from_json(&w.to_json()).unwrap(), w);
        assert_eq!(Permutation::parse("[1,0]@0").unwrap(), Permutation::simple(0));
    }
}
