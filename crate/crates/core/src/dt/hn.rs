//! Harder-Narasimhan strata of the `A`-series.
//!
//! Every representation has a unique filtration whose subquotients are
//! semistable with strictly decreasing slopes, so in the quantum torus
//! `A = A_{mu_1} o A_{mu_2} o ...` over slopes `mu_1 > mu_2 > ...`.
//! Inverting this gives the semistable coefficients
//!
//! `A^th_a = A_a - sum (-v)^(sum_{i<j} <b_i,b_j>) prod_j A^th_{b_j}`
//!
//! over ordered decompositions `a = b_1 + ... + b_s`, `s >= 2`, with
//! strictly decreasing slopes.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use super::build_a;
use crate::error::{Error, Result};
use crate::par;
use crate::qalg::{LaurentPoly, RatFunc};
use crate::quiver::{slope, Quiver, Slope, Stability};
use crate::series::{plethystic_log, scale_by_q_minus_1, DimVector, GradedSeries, QScaling};

/// The part of `A^theta` of one slope.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SlopeStratum {
    pub slope: Slope,
    /// `1 + sum_{mu(a) = slope} A^theta_a x^a`, with the quiver's twist.
    pub series: GradedSeries,
    /// `Omega^theta_a`, filled by [`dt_theta`].
    pub omega: BTreeMap<DimVector, RatFunc>,
}

impl SlopeStratum {
    /// `Omega^theta_a(-v)` when it is a Laurent polynomial.
    pub fn omega_neg(&self, alpha: &DimVector) -> Option<LaurentPoly> {
        match self.omega.get(alpha) {
            None => Some(LaurentPoly::zero()),
            Some(f) => f.as_laurent().map(|p| p.neg_v()),
        }
    }

    /// Every `Omega^theta_a(-v)` lies in `N[v]`.
    pub fn all_positive(&self) -> bool {
        self.omega
            .keys()
            .all(|a| self.omega_neg(a).is_some_and(|p| p.is_in_n_of_v()))
    }
}

/// Slope-ordered strata of `A^theta` up to total degree `bound`, highest
/// slope first. Slopes without semistable classes are omitted.
pub fn hn_factorization(quiver: &Quiver, theta: &Stability, bound: u32) -> Result<Vec<SlopeStratum>> {
    let a = build_a(quiver, bound)?;
    let grading = a.grading().clone();
    let twist = quiver.antisym_matrix();
    let levels = grading.monomials_by_weight();
    let mut slopes: HashMap<DimVector, Slope> = HashMap::new();
    for alpha in levels.iter().skip(1).flatten() {
        slopes.insert(alpha.clone(), slope(theta, alpha)?);
    }
    let slope_set: Vec<Slope> = slopes.values().cloned().collect::<BTreeSet<_>>().into_iter().collect();

    let zero = DimVector::zeros(quiver.vertices());
    let mut semistable: BTreeMap<DimVector, RatFunc> = BTreeMap::new();
    // tail[(g, mu)]: sum over decompositions of g with strictly decreasing
    // slopes, all below mu, of the twisted products of semistable parts
    let mut tail: HashMap<(DimVector, Slope), RatFunc> = HashMap::new();
    let tail_of = |tail: &HashMap<(DimVector, Slope), RatFunc>, g: &DimVector, mu: &Slope| -> Option<RatFunc> {
        if g.is_zero() {
            Some(RatFunc::one())
        } else {
            tail.get(&(g.clone(), mu.clone())).cloned()
        }
    };

    for level in levels.iter().skip(1) {
        let vals = par::map(level, |alpha| {
            let corr = RatFunc::sum(semistable.iter().filter_map(|(b, ab)| {
                if b == alpha {
                    return None;
                }
                let rest = alpha.checked_sub(b)?;
                let t = tail_of(&tail, &rest, &slopes[b])?;
                let k = DimVector::bilinear(&twist, b, &rest);
                Some((ab * &t).mul_monomial(&crate::series::sign_of(k), k))
            }));
            &a.coeff(alpha) - &corr
        });
        for (alpha, c) in level.iter().zip(vals) {
            if !c.is_zero() {
                semistable.insert(alpha.clone(), c);
            }
        }
        let keys: Vec<(DimVector, Slope)> = level
            .iter()
            .flat_map(|g| slope_set.iter().map(move |mu| (g.clone(), mu.clone())))
            .collect();
        let vals = par::map(&keys, |(g, mu)| {
            RatFunc::sum(semistable.iter().filter_map(|(b, ab)| {
                if &slopes[b] >= mu {
                    return None;
                }
                let rest = g.checked_sub(b)?;
                let t = tail_of(&tail, &rest, &slopes[b])?;
                let k = DimVector::bilinear(&twist, b, &rest);
                Some((ab * &t).mul_monomial(&crate::series::sign_of(k), k))
            }))
        });
        for (key, c) in keys.into_iter().zip(vals) {
            if !c.is_zero() {
                tail.insert(key, c);
            }
        }
    }

    let mut by_slope: BTreeMap<Slope, Vec<(DimVector, RatFunc)>> = BTreeMap::new();
    for (alpha, c) in semistable {
        by_slope.entry(slopes[&alpha].clone()).or_default().push((alpha, c));
    }
    by_slope
        .into_iter()
        .rev()
        .map(|(mu, terms)| {
            let mut series = GradedSeries::one(grading.clone());
            for (alpha, c) in terms {
                series.set(alpha, c);
            }
            debug_assert!(series.get(&zero).is_some());
            Ok(SlopeStratum {
                slope: mu,
                series: series.with_twist(twist.clone())?,
                omega: BTreeMap::new(),
            })
        })
        .collect()
}

/// Twisted product of the strata in the given (slope-descending) order.
pub fn reconstruct_a(strata: &[SlopeStratum]) -> Result<GradedSeries> {
    let mut iter = strata.iter();
    let first = iter
        .next()
        .ok_or_else(|| Error::Invalid("no strata to multiply".into()))?;
    iter.try_fold(first.series.clone(), |acc, s| acc.twisted_mul(&s.series))
}

/// Strata with `Omega^theta_mu = (q - 1) Log(A^theta_mu)` filled in.
///
/// Each stratum must have a vanishing antisymmetric form on its support,
/// otherwise its twisted product is not commutative and the definition
/// does not apply.
pub fn dt_theta(quiver: &Quiver, theta: &Stability, bound: u32) -> Result<Vec<SlopeStratum>> {
    let mut strata = hn_factorization(quiver, theta, bound)?;
    for stratum in &mut strata {
        let support: Vec<&DimVector> = stratum.series.iter().map(|(a, _)| a).filter(|a| !a.is_zero()).collect();
        for (i, a) in support.iter().enumerate() {
            for b in &support[i + 1..] {
                let value = quiver.antisym_form(a, b)?;
                if value != 0 {
                    return Err(Error::StratumNotCommutative {
                        slope: stratum.slope.to_string(),
                        alpha: a.to_string(),
                        beta: b.to_string(),
                        value,
                    });
                }
            }
        }
        let plain = stratum.series.clone().without_twist();
        let omega = scale_by_q_minus_1(&plethystic_log(&plain)?, QScaling::Multiply);
        stratum.omega = omega.iter().map(|(a, c)| (a.clone(), c.clone())).collect();
    }
    Ok(strata)
}
