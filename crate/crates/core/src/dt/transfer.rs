//! Positivity transfer through diagonal operators `x^a -> q^(a^T C a) x^a`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::qalg::{LaurentPoly, Rat, RatFunc};
use crate::series::{
    exp_series, log_series, plethystic_exp, plethystic_log, scale_by_q_minus_1, DiagonalBase,
    DiagonalOperator, DimVector, GradedSeries, Grading, QScaling,
};

/// The output `b` of a transfer with per-coefficient verdicts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransferResult {
    pub b: BTreeMap<DimVector, RatFunc>,
    /// `b_a` is in `N[q]`
    pub in_n_of_q: BTreeMap<DimVector, bool>,
    /// `b_a` is in `Z[q^(+-1/2)]`
    pub integral: BTreeMap<DimVector, bool>,
}

impl TransferResult {
    fn new(b: &GradedSeries) -> Self {
        let b: BTreeMap<_, _> = b.iter().map(|(a, c)| (a.clone(), c.clone())).collect();
        let check = |f: fn(&LaurentPoly) -> bool| {
            b.iter()
                .map(|(a, c)| (a.clone(), c.as_laurent().is_some_and(f)))
                .collect()
        };
        Self {
            in_n_of_q: check(LaurentPoly::is_in_n_of_q),
            integral: check(LaurentPoly::has_integer_coeffs),
            b,
        }
    }

    pub fn all_in_n_of_q(&self) -> bool {
        self.in_n_of_q.values().all(|&x| x)
    }

    pub fn all_integral(&self) -> bool {
        self.integral.values().all(|&x| x)
    }
}

fn operator(c: &[Vec<i64>]) -> Result<DiagonalOperator> {
    for (i, row) in c.iter().enumerate() {
        if let Some(j) = row.iter().position(|&x| x < 0) {
            return Err(Error::NegativeEntry(i, j));
        }
    }
    DiagonalOperator::new(c.to_vec(), DiagonalBase::Q)
}

fn input_series(r: usize, a: &BTreeMap<DimVector, LaurentPoly>, bound: u32) -> Result<GradedSeries> {
    let grading = Grading::uniform(r, bound)?;
    for alpha in a.keys() {
        if alpha.len() != r {
            return Err(Error::DimensionMismatch {
                expected: r,
                got: alpha.len(),
            });
        }
    }
    Ok(GradedSeries::from_terms(
        grading.clone(),
        a.iter()
            .filter(|(alpha, _)| !alpha.is_zero() && grading.admits(alpha))
            .map(|(alpha, p)| (alpha.clone(), RatFunc::from(p.clone()))),
    ))
}

/// `b = (q - 1) Log(T Exp(a / (q - 1)))`.
pub fn plethystic_transfer(
    c: &[Vec<i64>],
    a: &BTreeMap<DimVector, LaurentPoly>,
    bound: u32,
) -> Result<TransferResult> {
    let t = operator(c)?;
    let a = input_series(t.dim(), a, bound)?;
    let lifted = plethystic_exp(&scale_by_q_minus_1(&a, QScaling::Divide))?;
    let b = scale_by_q_minus_1(&plethystic_log(&t.apply(&lifted)?)?, QScaling::Multiply);
    Ok(TransferResult::new(&b))
}

fn factorial(alpha: &DimVector) -> Rat {
    alpha
        .entries()
        .iter()
        .flat_map(|&n| 1..=n)
        .fold(Rat::from_integer(1.into()), |acc, k| acc * Rat::from_integer(k.into()))
}

/// The same transfer with ordinary `exp`/`log` and `x^a / a!` normalization.
pub fn exp_transfer(
    c: &[Vec<i64>],
    a: &BTreeMap<DimVector, LaurentPoly>,
    bound: u32,
) -> Result<TransferResult> {
    let t = operator(c)?;
    let a = input_series(t.dim(), a, bound)?;
    let u = scale_by_q_minus_1(&a, QScaling::Divide).map_coeffs(|alpha, c| c.scale(&factorial(alpha).recip()));
    let w = log_series(&t.apply(&exp_series(&u)?)?)?;
    let b = scale_by_q_minus_1(&w, QScaling::Multiply).map_coeffs(|alpha, c| c.scale(&factorial(alpha)));
    Ok(TransferResult::new(&b))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one_var(terms: &[(u32, LaurentPoly)]) -> BTreeMap<DimVector, LaurentPoly> {
        terms.iter().map(|(k, p)| (DimVector(vec![*k]), p.clone())).collect()
    }

    #[test]
    fn zero_matrix_is_identity() {
        let a = one_var(&[(1, LaurentPoly::q_pow(1)), (2, LaurentPoly::from_int_terms(&[(0, 2), (2, 1)]))]);
        for f in [plethystic_transfer, exp_transfer] {
            let r = f(&[vec![0]], &a, 3).unwrap();
            let expect: BTreeMap<_, _> = a.iter().map(|(k, p)| (k.clone(), RatFunc::from(p.clone()))).collect();
            assert_eq!(r.b, expect);
        }
    }

    #[test]
    fn zero_input() {
        let r = exp_transfer(&[vec![1]], &BTreeMap::new(), 4).unwrap();
        assert!(r.b.is_empty());
    }

    #[test]
    fn negative_entry() {
        let a = one_var(&[(1, LaurentPoly::one())]);
        assert_eq!(plethystic_transfer(&[vec![-1]], &a, 2), Err(Error::NegativeEntry(0, 0)));
    }

    #[test]
    fn single_loop_operator_is_positive() {
        let a = one_var(&[(1, LaurentPoly::one())]);
        let r = plethystic_transfer(&[vec![1]], &a, 5).unwrap();
        assert!(r.all_in_n_of_q() && r.all_integral());
        assert_eq!(r.b[&DimVector(vec![1])], RatFunc::from(LaurentPoly::q_pow(1)));
    }
}
