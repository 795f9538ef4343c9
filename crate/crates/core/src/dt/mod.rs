//! Donaldson-Thomas invariants of symmetric quivers.
//!
//! The generating series of all representations weighted by `1/#Aut` is
//! `A = sum_a (-v)^(-T(a)) / (q^-1)_a x^a`, and the DT invariants are the
//! coefficients of `Omega` in `A = Exp(Omega / (q - 1))`.

mod hn;
mod stable;
mod transfer;

use std::collections::BTreeMap;

pub use hn::{dt_theta, hn_factorization, reconstruct_a, SlopeStratum};
pub use stable::{stable_count_at, stable_counts};
pub use transfer::{exp_transfer, plethystic_transfer, TransferResult};

use crate::error::{Error, Result};
use crate::par;
use crate::qalg::{q_pochhammer, LaurentPoly, Rat, RatFunc};
use crate::quiver::Quiver;
use crate::series::{
    plethystic_log, scale_by_q_minus_1, DimVector, GradedSeries, Grading, QScaling,
};

/// The coefficient `(-v)^(-T(a)) / prod_i (q^-1)_{a_i}` of `x^a` in `A`.
pub fn a_coefficient(quiver: &Quiver, alpha: &DimVector) -> Result<RatFunc> {
    let t = quiver.tits_form(alpha)?;
    let den = alpha
        .entries()
        .iter()
        .fold(LaurentPoly::one(), |acc, &n| &acc * &q_pochhammer(n, true));
    RatFunc::new(LaurentPoly::neg_v_pow(-t), den)
}

/// The series `A` up to total degree `bound`, carrying the quiver's
/// antisymmetric form as its twist.
pub fn build_a(quiver: &Quiver, bound: u32) -> Result<GradedSeries> {
    let grading = Grading::uniform(quiver.vertices(), bound)?;
    let monomials = grading.monomials();
    let coeffs = par::try_map(&monomials, |a| a_coefficient(quiver, a))?;
    GradedSeries::from_terms(grading, monomials.into_iter().zip(coeffs))
        .with_twist(quiver.antisym_matrix())
}

/// `Omega_a` together with its positivity verdicts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DtEntry {
    /// `Omega_a(v)`
    pub omega: LaurentPoly,
    /// `Omega_a(-v)`
    pub omega_neg: LaurentPoly,
    /// all coefficients of `Omega_a(-v)` are nonnegative integers
    pub positive: bool,
    /// all coefficients are integers
    pub integral: bool,
    /// `Omega_a(-v)` has no negative powers of `v`
    pub no_negative_powers: bool,
}

impl DtEntry {
    pub fn new(omega: LaurentPoly) -> Self {
        let omega_neg = omega.neg_v();
        Self {
            positive: omega_neg.has_nonneg_integer_coeffs(),
            integral: omega.has_integer_coeffs(),
            no_negative_powers: omega_neg.min_exp().is_none_or(|e| e >= 0),
            omega,
            omega_neg,
        }
    }
}

/// DT invariants `Omega_a` for `0 < |a| <= bound`; zero invariants are omitted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DtResult {
    pub quiver: Quiver,
    pub bound: u32,
    pub entries: BTreeMap<DimVector, DtEntry>,
}

impl DtResult {
    /// `Omega_a(v)`, zero when absent.
    pub fn omega(&self, alpha: &DimVector) -> LaurentPoly {
        self.entries.get(alpha).map(|e| e.omega.clone()).unwrap_or_default()
    }

    pub fn omega_neg(&self, alpha: &DimVector) -> LaurentPoly {
        self.entries.get(alpha).map(|e| e.omega_neg.clone()).unwrap_or_default()
    }

    pub fn all_positive(&self) -> bool {
        self.entries.values().all(|e| e.positive)
    }

    pub fn all_integral(&self) -> bool {
        self.entries.values().all(|e| e.integral)
    }

    pub fn no_negative_powers(&self) -> bool {
        self.entries.values().all(|e| e.no_negative_powers)
    }

    /// `sum_a Omega_a x^a` as a series.
    pub fn omega_series(&self) -> Result<GradedSeries> {
        let grading = Grading::uniform(self.quiver.vertices(), self.bound)?;
        Ok(GradedSeries::from_terms(
            grading,
            self.entries.iter().map(|(a, e)| (a.clone(), RatFunc::from(e.omega.clone()))),
        ))
    }
}

/// Checks that every coefficient is a Laurent polynomial and returns them.
pub(crate) fn laurent_coefficients(s: &GradedSeries) -> Result<BTreeMap<DimVector, LaurentPoly>> {
    s.iter()
        .map(|(a, c)| match c.as_laurent() {
            Some(p) => Ok((a.clone(), p.clone())),
            None => Err(Error::NotLaurent {
                at: a.to_string(),
                value: c.to_string(),
            }),
        })
        .collect()
}

/// `Omega = (q - 1) Log(A)` for a symmetric quiver and trivial stability.
pub fn dt_invariants(quiver: &Quiver, bound: u32) -> Result<DtResult> {
    if !quiver.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let a = build_a(quiver, bound)?.without_twist();
    let omega = scale_by_q_minus_1(&plethystic_log(&a)?, QScaling::Multiply);
    let entries = laurent_coefficients(&omega)?
        .into_iter()
        .map(|(a, p)| (a, DtEntry::new(p)))
        .collect();
    Ok(DtResult {
        quiver: quiver.clone(),
        bound,
        entries,
    })
}

/// `Omega_a(-v)` evaluated at `q = 1`.
pub fn classical_dt(result: &DtResult) -> Result<BTreeMap<DimVector, Rat>> {
    result
        .entries
        .iter()
        .map(|(a, e)| Ok((a.clone(), e.omega_neg.eval(&Rat::from_integer(1.into()))?)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{plethystic_exp, QScaling};

    fn n(k: u32) -> DimVector {
        DimVector(vec![k])
    }

    fn one_minus_q_inv() -> LaurentPoly {
        LaurentPoly::from_int_terms(&[(0, 1), (-2, -1)])
    }

    #[test]
    fn a_series_coefficients() {
        let a = build_a(&Quiver::loops(1), 3).unwrap();
        assert!(a.constant_term().is_one());
        assert_eq!(a.coeff(&n(1)), RatFunc::new(LaurentPoly::one(), one_minus_q_inv()).unwrap());
        let a = build_a(&Quiver::loops(2), 3).unwrap();
        assert_eq!(
            a.coeff(&n(1)),
            RatFunc::new(LaurentPoly::from_int_terms(&[(1, -1)]), one_minus_q_inv()).unwrap()
        );
    }

    #[test]
    fn non_symmetric_is_rejected() {
        let q = Quiver::new(vec![vec![0, 1], vec![0, 0]]).unwrap();
        assert_eq!(dt_invariants(&q, 2), Err(Error::NotSymmetric));
    }

    #[test]
    fn zero_loops() {
        let r = dt_invariants(&Quiver::loops(0), 4).unwrap();
        assert_eq!(r.omega_neg(&n(1)), LaurentPoly::v_pow(1));
        for k in 2..=4 {
            assert!(r.omega(&n(k)).is_zero());
        }
    }

    #[test]
    fn two_loops_low_order() {
        let r = dt_invariants(&Quiver::loops(2), 3).unwrap();
        assert_eq!(r.omega_neg(&n(1)), LaurentPoly::v_pow(3));
        assert_eq!(r.omega_neg(&n(2)), LaurentPoly::v_pow(6));
        assert_eq!(r.omega_neg(&n(3)), LaurentPoly::v_pow(11));
        assert!(r.all_positive() && r.all_integral() && r.no_negative_powers());
    }

    #[test]
    fn round_trip_reproduces_a() {
        for q in [Quiver::loops(2), Quiver::two_vertex(1, 1)] {
            let r = dt_invariants(&q, 3).unwrap();
            let omega = r.omega_series().unwrap();
            let back = plethystic_exp(&scale_by_q_minus_1(&omega, QScaling::Divide)).unwrap();
            assert_eq!(back, build_a(&q, 3).unwrap().without_twist());
        }
    }

    #[test]
    fn classical_values() {
        let r = dt_invariants(&Quiver::loops(0), 2).unwrap();
        assert_eq!(classical_dt(&r).unwrap()[&n(1)], Rat::from_integer(1.into()));
    }
}
