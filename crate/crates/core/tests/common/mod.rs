//! Independent reference implementations and fixtures shared by the
//! integration tests.
#![allow(dead_code)]

use num_bigint::BigInt;
use quiverdt::qalg::{LaurentPoly, Rat, RatFunc};
use quiverdt::quiver::Quiver;
use quiverdt::series::{adams, mobius, GradedSeries};

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Laurent polynomial from `(exponent of q^(1/2), coefficient)` pairs.
pub fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
    LaurentPoly::from_int_terms(terms)
}

/// Polynomial in `q` from `(exponent of q, coefficient)` pairs.
pub fn qp(terms: &[(i64, i64)]) -> LaurentPoly {
    let doubled: Vec<(i64, i64)> = terms.iter().map(|&(e, c)| (2 * e, c)).collect();
    LaurentPoly::from_int_terms(&doubled)
}

pub fn rf(p: LaurentPoly) -> RatFunc {
    RatFunc::from(p)
}

/// One vertex with `g` loops, for `g = 0..=3`.
pub fn loop_corpus() -> Vec<Quiver> {
    (0..=3).map(Quiver::loops).collect()
}

/// Quivers with a loop at every vertex: one vertex with 1..=3 loops and two
/// vertices with one loop each and 0..=2 arrows each way.
pub fn enough_loops_corpus() -> Vec<Quiver> {
    let mut out: Vec<Quiver> = (1..=3).map(Quiver::loops).collect();
    out.extend((0..=2).map(|k| Quiver::two_vertex(1, k)));
    out
}

pub fn two_vertex_corpus() -> Vec<Quiver> {
    (0..=2).map(|k| Quiver::two_vertex(1, k)).collect()
}

/// Every quiver used in cross-checks.
pub fn full_corpus() -> Vec<Quiver> {
    let mut out = loop_corpus();
    out.extend(two_vertex_corpus());
    out
}

/// `exp(u) = sum_k u^k / k!`, truncated by the grading.
pub fn taylor_exp(u: &GradedSeries) -> GradedSeries {
    let grading = u.grading().clone();
    let mut out = GradedSeries::one(grading.clone());
    let mut power = GradedSeries::one(grading.clone());
    for k in 1..=grading.bound() as i64 {
        power = power.mul(u).unwrap().scale_rat(&rat(1, k));
        out = out.add(&power).unwrap();
    }
    out
}

/// `log(1 + u) = sum_k (-1)^(k+1) u^k / k`.
pub fn taylor_log(f: &GradedSeries) -> GradedSeries {
    let grading = f.grading().clone();
    let u = f.positive_part();
    let mut out = GradedSeries::zero(grading.clone());
    let mut power = GradedSeries::one(grading.clone());
    for k in 1..=grading.bound() as i64 {
        power = power.mul(&u).unwrap();
        let sign = if k % 2 == 1 { 1 } else { -1 };
        out = out.add(&power.scale_rat(&rat(sign, k))).unwrap();
    }
    out
}

pub fn taylor_plethystic_exp(f: &GradedSeries) -> GradedSeries {
    let mut sum = GradedSeries::zero(f.grading().clone());
    for n in 1..=f.grading().bound() {
        sum = sum.add(&adams(f, n).unwrap().scale_rat(&rat(1, n as i64))).unwrap();
    }
    taylor_exp(&sum)
}

pub fn taylor_plethystic_log(f: &GradedSeries) -> GradedSeries {
    let l = taylor_log(f);
    let mut sum = GradedSeries::zero(f.grading().clone());
    for n in 1..=f.grading().bound() {
        let m = mobius(n as u64).unwrap();
        if m != 0 {
            sum = sum.add(&adams(&l, n).unwrap().scale_rat(&rat(m, n as i64))).unwrap();
        }
    }
    sum
}
