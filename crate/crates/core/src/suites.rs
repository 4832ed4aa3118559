//! Verification suites shared by the CLI and the test harness.

use crate::affine;
use crate::coproduct::{self, GrahamOrder};
use crate::error::Result;
use crate::permutations::{bruhat_leq, permutations_in_window, Partition, Permutation, Triple};
use crate::schubert;
use crate::symfunc;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub cases: usize,
    pub passed: usize,
    /// Witnesses of failed cases, in case order.
    pub failures: Vec<String>,
}

impl SuiteReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty() && self.passed == self.cases
    }

    fn collect(suite: &str, outcomes: Vec<Option<String>>) -> SuiteReport {
        let cases = outcomes.len();
        let failures: Vec<String> = outcomes.into_iter().flatten().collect();
        SuiteReport { suite: suite.to_string(), cases, passed: cases - failures.len(), failures }
    }

    pub fn to_text(&self) -> String {
        let mut s = format!(
            "{}: {}/{} passed{}\n",
            self.suite,
            self.passed,
            self.cases,
            if self.ok() { "" } else { " FAILED" }
        );
        for f in &self.failures {
            s.push_str(&format!("  {f}\n"));
        }
        s
    }
}

fn check<T: Sync>(suite: &str, items: &[T], f: impl Fn(&T) -> Result<Option<String>> + Sync) -> SuiteReport {
    let outcomes = items
        .par_iter()
        .map(|t| match f(t) {
            Ok(w) => w,
            Err(e) => Some(format!("error: {e}")),
        })
        .collect();
    SuiteReport::collect(suite, outcomes)
}

/// Permutations on `[a, b]` of length at most `max_length`.
pub fn exhaustive(a: i64, b: i64, max_length: usize) -> Vec<Permutation> {
    permutations_in_window(a, b, max_length)
}

/// `count` distinct permutations of length exactly `length` on `[a, b]`,
/// drawn with a fixed seed.
pub fn random_sample(a: i64, b: i64, length: usize, count: usize, seed: u64) -> Vec<Permutation> {
    let mut pool: Vec<Permutation> =
        permutations_in_window(a, b, length).into_iter().filter(|w| w.length() == length).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    pool.shuffle(&mut rng);
    pool.truncate(count);
    pool
}

pub fn cauchy(ws: &[Permutation]) -> SuiteReport {
    check("cauchy", ws, |w| Ok((!schubert::cauchy_check(w)?).then(|| w.to_string())))
}

pub fn inverse(ws: &[Permutation]) -> SuiteReport {
    check("inverse", ws, |w| Ok((!schubert::inverse_identity_check(w)?).then(|| w.to_string())))
}

/// `ω(∑_w) = ∑_{ω(w)}`.
pub fn duality(ws: &[Permutation]) -> SuiteReport {
    check("duality", ws, |w| {
        let lhs = schubert::omega_dual(&schubert::back_stabilize(w)?.poly);
        let rhs = schubert::back_stabilize(&w.omega())?.poly;
        Ok((lhs != rhs).then(|| w.to_string()))
    })
}

/// `γ^m(∑_w) = ∑_{γ^m(w)}` for `|m| ≤ 2`.
pub fn shift(ws: &[Permutation]) -> SuiteReport {
    check("shift", ws, |w| {
        let p = schubert::back_stabilize(w)?.poly;
        for m in [-2, -1, 1, 2] {
            if schubert::gamma_translate(&p, m) != schubert::back_stabilize(&w.gamma(m))?.poly {
                return Ok(Some(format!("{w} m={m}")));
            }
        }
        Ok(None)
    })
}

/// `∑_w|_{c=1}` against the product of finite double Schubert polynomials.
pub fn projection(ws: &[Permutation]) -> SuiteReport {
    check("projection", ws, |w| {
        let got = schubert::specialize_c_to_one(&schubert::back_stabilize(w)?.poly);
        Ok((got != schubert::projection_prediction(w)?).then(|| w.to_string()))
    })
}

/// `∑_w` vanishes at every `v ≱ w` with `ℓ(v) ≤ ℓ(w) + 2` on `[a, b]`, and
/// equals the inversion product at `w`.
pub fn vanishing(ws: &[Permutation], a: i64, b: i64) -> SuiteReport {
    let max_len = ws.iter().map(|w| w.length()).max().unwrap_or(0) + 2;
    let points = permutations_in_window(a, b, max_len);
    check("vanishing", ws, |w| {
        let p = schubert::back_stabilize(w)?.poly;
        if schubert::interpolation_eval(&p, w) != schubert::inversion_product(w) {
            return Ok(Some(format!("{w} at itself")));
        }
        for v in &points {
            if v.length() <= w.length() + 2 && !bruhat_leq(w, v) && !schubert::interpolation_eval(&p, v).is_zero() {
                return Ok(Some(format!("{w} at {v}")));
            }
        }
        Ok(None)
    })
}

/// back_stabilize, interpolation_solve and kempf_laksov agree on `w_λ`.
pub fn oracle(max_size: usize) -> SuiteReport {
    let parts: Vec<Partition> = (0..=max_size).flat_map(Partition::all_of_size).collect();
    check("oracle", &parts, |lam| {
        let w = Permutation::from_partition(lam);
        let bs = schubert::back_stabilize(&w)?.poly;
        let kl = schubert::kempf_laksov(lam).poly;
        let interp = schubert::interpolation_solve(&w, None)?.poly;
        Ok((bs != kl || bs != interp).then(|| format!("{lam}")))
    })
}

/// back_stabilize against the vexillary determinant.
pub fn vexillary(triples: &[Triple]) -> SuiteReport {
    check("vexillary", triples, |t| {
        let w = t.to_permutation()?;
        let got = schubert::vexillary_det(t)?.poly;
        Ok((got != schubert::back_stabilize(&w)?.poly).then(|| format!("{t:?}")))
    })
}

/// Graham certificates for every entry of `dual_lr(λ)`, `|λ| ≤ max_size`.
pub fn graham(max_size: usize) -> SuiteReport {
    let parts: Vec<Partition> = (0..=max_size).flat_map(Partition::all_of_size).collect();
    check("graham", &parts, |lam| {
        let t = coproduct::dual_lr(lam);
        graham_table(&t, false).map(|bad| bad.map(|b| format!("{lam} {b}")))
    })
}

/// Graham certificates for every entry of `expand_comodule(w)`.
pub fn graham_comodule(ws: &[Permutation]) -> SuiteReport {
    check("graham-comodule", ws, |w| {
        let t = coproduct::expand_comodule(w)?;
        graham_table(&t, false).map(|bad| bad.map(|b| format!("{w} {b}")))
    })
}

/// Primed-order certificates for `two_torus_dual_lr(λ)` plus agreement with
/// `dual_lr(λ)` after `y′ ↦ y`.
pub fn graham_two_torus(max_size: usize) -> SuiteReport {
    let parts: Vec<Partition> = (0..=max_size).flat_map(Partition::all_of_size).collect();
    check("graham-two-torus", &parts, |lam| {
        let t = coproduct::two_torus_dual_lr(lam);
        if let Some(b) = graham_table(&t, true)? {
            return Ok(Some(format!("{lam} {b}")));
        }
        let one = coproduct::dual_lr(lam);
        for e in &t.entries {
            if coproduct::identify_tori(&e.coeff) != one.get(&e.mu, &e.v) {
                return Ok(Some(format!("{lam} specialization at {} {}", e.mu, e.v)));
            }
        }
        for e in &one.entries {
            if t.get(&e.mu, &e.v).is_zero() {
                return Ok(Some(format!("{lam} missing {} {}", e.mu, e.v)));
            }
        }
        Ok(None)
    })
}

fn graham_table(t: &coproduct::CoeffTable, two_torus: bool) -> Result<Option<String>> {
    for e in &t.entries {
        let order =
            if two_torus { GrahamOrder::two_torus_for_poly(&e.coeff) } else { GrahamOrder::for_poly(&e.coeff) };
        if !coproduct::graham_certificate(&e.coeff, &order)?.passed {
            return Ok(Some(format!("{} {} : {}", e.mu, e.v, e.coeff)));
        }
    }
    Ok(None)
}

/// `dual_lr(λ)` at `y = 0` against tableau-counted LR coefficients.
pub fn classical_lr(max_size: usize) -> SuiteReport {
    let parts: Vec<Partition> = (0..=max_size).flat_map(Partition::all_of_size).collect();
    check("classical-lr", &parts, |lam| {
        let t = coproduct::dual_lr(lam);
        for mu in lam.subpartitions() {
            for nu in Partition::all_of_size(lam.size() - mu.size()) {
                let got = coproduct::at_zero(&t.get_lr(&mu, &nu));
                let want = crate::polyring::Poly::constant(symfunc::lr_coefficient(lam, &mu, &nu));
                if got != want {
                    return Ok(Some(format!("{lam} {mu} {nu}")));
                }
            }
        }
        Ok(None)
    })
}

/// Bott relations vanish at every affine fixed point up to the bounds.
pub fn localization(n: usize, max_length: usize, max_degree: usize) -> Result<SuiteReport> {
    let r = affine::verify_relations_by_localization(n, max_length, max_degree)?;
    let failures: Vec<String> = r
        .failures
        .iter()
        .map(|f| format!("{} at {:?}: {}", f.relation, f.fixed_point, f.residual))
        .collect();
    Ok(SuiteReport {
        suite: "localization".into(),
        cases: r.checked,
        passed: r.checked - failures.len(),
        failures,
    })
}
