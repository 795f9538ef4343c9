use std::collections::BTreeMap;

use super::hn_factorization;
use crate::error::{Error, Result};
use crate::qalg::LaurentPoly;
use crate::quiver::{Quiver, Slope, Stability};
use crate::series::{
    plethystic_log, scale_by_q_minus_1, DiagonalBase, DiagonalOperator, DimVector, QScaling,
};

/// Counts `S_a` of absolutely `theta`-stable representations of slope `mu`,
/// solved from `A^theta_mu o T Exp(S / (1 - q)) = 1` where `T` multiplies
/// `x^a` by `(-v)^T(a)`. Each `S_a` must be a polynomial in `q` with
/// integer coefficients.
pub fn stable_counts(
    quiver: &Quiver,
    theta: &Stability,
    mu: &Slope,
    bound: u32,
) -> Result<BTreeMap<DimVector, LaurentPoly>> {
    let strata = hn_factorization(quiver, theta, bound)?;
    let Some(stratum) = strata.iter().find(|s| &s.slope == mu) else {
        return Ok(BTreeMap::new());
    };
    let b = stratum.series.twisted_inverse()?.without_twist();
    let t = DiagonalOperator::new(quiver.euler_matrix(), DiagonalBase::NegV)?;
    let log = plethystic_log(&t.inverse().apply(&b)?)?;
    // (1 - q) = -(q - 1)
    let s = scale_by_q_minus_1(&log, QScaling::Multiply).neg();
    s.iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(a, c)| match c.as_laurent() {
            Some(p) if p.is_polynomial_in_q() && p.has_integer_coeffs() => Ok((a.clone(), p.clone())),
            _ => Err(Error::NotPolynomialInQ {
                at: a.to_string(),
                value: c.to_string(),
            }),
        })
        .collect()
}

/// `S_a` at the slope of `a` itself, i.e. the stable count for one class.
pub fn stable_count_at(quiver: &Quiver, theta: &Stability, alpha: &DimVector) -> Result<LaurentPoly> {
    let mu = crate::quiver::slope(theta, alpha)?;
    let bound = alpha.total() as u32;
    Ok(stable_counts(quiver, theta, &mu, bound)?
        .remove(alpha)
        .unwrap_or_default())
}
