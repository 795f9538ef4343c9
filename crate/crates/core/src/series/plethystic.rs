//! Adams operations and the plethystic exponential/logarithm.
//!
//! `exp` and `log` of a series are computed with the weighted Euler operator
//! `D x^a = w(a) x^a`, which satisfies `D exp(u) = D(u) exp(u)` and
//! `D f = f D(log f)`. Both give coefficient recurrences that only look at
//! strictly lower weights, so each weight level is filled independently.

use num_bigint::BigInt;

use super::{DimVector, GradedSeries};
use crate::error::{Error, Result};
use crate::par;
use crate::qalg::{Rat, RatFunc};

fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Classical Moebius function, by trial division.
pub fn mobius(n: u64) -> Result<i64> {
    if n == 0 {
        return Err(Error::ZeroIndex);
    }
    let mut n = n;
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return Ok(0);
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    Ok(sign)
}

/// `psi_n f(v, x) = f(v^n, x^n)`; monomials pushed above the bound drop.
pub fn adams(f: &GradedSeries, n: u32) -> Result<GradedSeries> {
    if n == 0 {
        return Err(Error::ZeroIndex);
    }
    if n == 1 {
        return Ok(f.clone());
    }
    let mut out = GradedSeries::zero(f.grading().clone());
    for (a, c) in f.iter() {
        let na = a.scale(n);
        if f.grading().admits(&na) {
            out.set(na, c.adams(n));
        }
    }
    out.twist = f.twist.clone();
    Ok(out)
}

/// Ordinary exponential of a series with zero constant term.
pub fn exp_series(u: &GradedSeries) -> Result<GradedSeries> {
    if !u.constant_term().is_zero() {
        return Err(Error::ExpConstantTerm);
    }
    let grading = u.grading();
    let support: Vec<_> = u.iter().map(|(b, c)| (b, grading.weight(b), c)).collect();
    let mut e = GradedSeries::one(grading.clone());
    // E_a = (1/w(a)) sum_{b} w(b) u_b E_{a-b}
    for (w, level) in grading.monomials_by_weight().iter().enumerate().skip(1) {
        let vals = par::map(level, |alpha| {
            RatFunc::sum(support.iter().filter_map(|(b, wb, ub)| {
                let rest = alpha.checked_sub(b)?;
                let er = e.get(&rest)?;
                Some((*ub * er).scale(&rat(*wb as i64, 1)))
            }))
            .scale(&rat(1, w as i64))
        });
        for (a, c) in level.iter().zip(vals) {
            e.set(a.clone(), c);
        }
    }
    e.twist = u.twist.clone();
    Ok(e)
}

/// Ordinary logarithm of a series with constant term 1.
pub fn log_series(f: &GradedSeries) -> Result<GradedSeries> {
    if !f.constant_term().is_one() {
        return Err(Error::LogConstantTerm);
    }
    let grading = f.grading();
    let support: Vec<_> = f.positive_part().coeffs.into_iter().collect();
    let mut l = GradedSeries::zero(grading.clone());
    // L_a = f_a - (1/w(a)) sum_{0 < b < a} w(a-b) f_b L_{a-b}
    for (w, level) in grading.monomials_by_weight().iter().enumerate().skip(1) {
        let vals = par::map(level, |alpha| {
            let corr = RatFunc::sum(support.iter().filter_map(|(b, fb)| {
                if b == alpha {
                    return None;
                }
                let rest = alpha.checked_sub(b)?;
                let lr = l.get(&rest)?;
                Some((fb * lr).scale(&rat(grading.weight(&rest) as i64, 1)))
            }));
            &f.coeff(alpha) - &corr.scale(&rat(1, w as i64))
        });
        for (a, c) in level.iter().zip(vals) {
            l.set(a.clone(), c);
        }
    }
    l.twist = f.twist.clone();
    Ok(l)
}

/// `Exp(f) = exp(sum_{n >= 1} psi_n(f) / n)` for `f` with zero constant term.
pub fn plethystic_exp(f: &GradedSeries) -> Result<GradedSeries> {
    if !f.constant_term().is_zero() {
        return Err(Error::ExpConstantTerm);
    }
    exp_series(&adams_sum(f, |n| Ok(rat(1, n as i64)))?)
}

/// `Log(f) = sum_{n >= 1} mu(n)/n psi_n(log f)` for `f` with constant term 1.
pub fn plethystic_log(f: &GradedSeries) -> Result<GradedSeries> {
    let l = log_series(f)?;
    adams_sum(&l, |n| Ok(rat(mobius(n as u64)?, n as i64)))
}

/// `sum_{n=1}^{bound} c(n) psi_n(f)`. Terms with `n > bound` vanish because
/// `psi_n` multiplies the weight of every nonconstant monomial by `n`.
fn adams_sum<C>(f: &GradedSeries, coeff: C) -> Result<GradedSeries>
where
    C: Fn(u32) -> Result<Rat> + Sync + Send,
{
    let ns: Vec<u32> = (1..=f.grading().bound()).collect();
    let parts = par::try_map(&ns, |&n| {
        let c = coeff(n)?;
        if num_traits::Zero::is_zero(&c) {
            return Ok(Vec::new());
        }
        Ok(adams(f, n)?
            .iter()
            .map(|(a, x)| (a.clone(), x.scale(&c)))
            .collect::<Vec<(DimVector, RatFunc)>>())
    })?;
    let mut out = super::collect_sums(f.grading().clone(), parts.into_iter().flatten());
    out.twist = f.twist.clone();
    Ok(out)
}
