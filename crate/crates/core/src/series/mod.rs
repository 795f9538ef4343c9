//! Truncated multivariate power series over [`RatFunc`] coefficients.
//!
//! A [`GradedSeries`] stores only monomials within its [`Grading`] bound.
//! Besides the commutative ring structure it carries the quantum-torus
//! product `x^a o x^b = (-v)^<a,b> x^(a+b)`, Adams operations, the
//! plethystic `Exp`/`Log` pair and diagonal operators
//! `x^a -> base^(a^T C a) x^a`.

mod diagonal;
mod dimvec;
mod grading;
mod plethystic;

use std::collections::BTreeMap;
use std::fmt;

pub use diagonal::{scale_by_q_minus_1, specialize_levels, DiagonalBase, DiagonalOperator, QScaling};
pub use dimvec::DimVector;
pub use grading::Grading;
pub use plethystic::{adams, exp_series, log_series, mobius, plethystic_exp, plethystic_log};

use crate::error::{Error, Result};
use crate::par;
use crate::qalg::{Rat, RatFunc};

/// Truncated power series; no stored coefficient is zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedSeries {
    grading: Grading,
    coeffs: BTreeMap<DimVector, RatFunc>,
    twist: Option<Vec<Vec<i64>>>,
}

impl GradedSeries {
    pub fn zero(grading: Grading) -> Self {
        Self {
            grading,
            coeffs: BTreeMap::new(),
            twist: None,
        }
    }

    pub fn one(grading: Grading) -> Self {
        let mut s = Self::zero(grading);
        let n = s.grading.nvars();
        s.set(DimVector::zeros(n), RatFunc::one());
        s
    }

    /// `c * x^alpha`, or zero when `alpha` is above the bound.
    pub fn monomial(grading: Grading, alpha: DimVector, c: RatFunc) -> Self {
        let mut s = Self::zero(grading);
        s.set(alpha, c);
        s
    }

    pub fn from_terms<I>(grading: Grading, terms: I) -> Self
    where
        I: IntoIterator<Item = (DimVector, RatFunc)>,
    {
        let mut s = Self::zero(grading);
        for (a, c) in terms {
            s.add_term(a, c);
        }
        s
    }

    /// Attaches an antisymmetric form for [`GradedSeries::twisted_mul`].
    pub fn with_twist(mut self, twist: Vec<Vec<i64>>) -> Result<Self> {
        let n = self.grading.nvars();
        if twist.len() != n || twist.iter().any(|row| row.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: twist.len(),
            });
        }
        if (0..n).any(|i| (0..n).any(|j| twist[i][j] != -twist[j][i])) {
            return Err(Error::Invalid("twist matrix must be antisymmetric".into()));
        }
        self.twist = Some(twist);
        Ok(self)
    }

    pub fn without_twist(mut self) -> Self {
        self.twist = None;
        self
    }

    pub fn twist(&self) -> Option<&Vec<Vec<i64>>> {
        self.twist.as_ref()
    }

    pub fn grading(&self) -> &Grading {
        &self.grading
    }

    pub fn nvars(&self) -> usize {
        self.grading.nvars()
    }

    /// Overwrites the coefficient of `alpha`; dropped when zero or above the bound.
    pub fn set(&mut self, alpha: DimVector, c: RatFunc) {
        assert_eq!(alpha.len(), self.nvars(), "monomial arity");
        if c.is_zero() || !self.grading.admits(&alpha) {
            self.coeffs.remove(&alpha);
        } else {
            self.coeffs.insert(alpha, c);
        }
    }

    pub fn add_term(&mut self, alpha: DimVector, c: RatFunc) {
        if c.is_zero() || !self.grading.admits(&alpha) {
            return;
        }
        let sum = match self.coeffs.get(&alpha) {
            Some(old) => old + &c,
            None => c,
        };
        self.set(alpha, sum);
    }

    pub fn get(&self, alpha: &DimVector) -> Option<&RatFunc> {
        self.coeffs.get(alpha)
    }

    pub fn coeff(&self, alpha: &DimVector) -> RatFunc {
        self.coeffs.get(alpha).cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> RatFunc {
        self.coeff(&DimVector::zeros(self.nvars()))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lexicographic key order.
    pub fn iter(&self) -> impl Iterator<Item = (&DimVector, &RatFunc)> {
        self.coeffs.iter()
    }

    /// Terms ordered by weight, then lexicographically.
    pub fn terms(&self) -> Vec<(&DimVector, &RatFunc)> {
        let mut v: Vec<_> = self.coeffs.iter().collect();
        v.sort_by_key(|(a, _)| (self.grading.weight(a), (*a).clone()));
        v
    }

    /// Terms with zero constant term removed.
    pub fn positive_part(&self) -> Self {
        let mut s = self.clone();
        s.coeffs.remove(&DimVector::zeros(self.nvars()));
        s
    }

    pub fn map_coeffs<F>(&self, f: F) -> Self
    where
        F: Fn(&DimVector, &RatFunc) -> RatFunc + Sync + Send,
    {
        let keys: Vec<_> = self.coeffs.iter().collect();
        let vals = par::map(&keys, |(a, c)| f(a, c));
        let mut out = Self {
            grading: self.grading.clone(),
            coeffs: BTreeMap::new(),
            twist: self.twist.clone(),
        };
        for ((a, _), c) in keys.into_iter().zip(vals) {
            out.set(a.clone(), c);
        }
        out
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        self.map_coeffs(|_, x| x * c)
    }

    pub fn scale_rat(&self, c: &Rat) -> Self {
        self.map_coeffs(|_, x| x.scale(c))
    }

    fn check_grading(&self, other: &Self) -> Result<()> {
        if self.grading != other.grading {
            return Err(Error::GradingMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_grading(other)?;
        let mut out = self.clone();
        for (a, c) in &other.coeffs {
            out.add_term(a.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|_, c| -c)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    /// Commutative Cauchy product, truncated to the bound.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_grading(other)?;
        Ok(self.product(other, |_, _| None))
    }

    /// Quantum-torus product `x^a o x^b = (-v)^<a,b> x^(a+b)`.
    pub fn twisted_mul(&self, other: &Self) -> Result<Self> {
        self.check_grading(other)?;
        let twist = match (&self.twist, &other.twist) {
            (Some(a), Some(b)) if a == b => a.clone(),
            _ => return Err(Error::TwistMismatch),
        };
        let mut out = self.product(other, |a, b| Some(DimVector::bilinear(&twist, a, b)));
        out.twist = Some(twist);
        Ok(out)
    }

    fn product<F>(&self, other: &Self, twist: F) -> Self
    where
        F: Fn(&DimVector, &DimVector) -> Option<i64> + Sync + Send,
    {
        let grading = &self.grading;
        let bound = grading.bound() as u64;
        let left: Vec<_> = self.coeffs.iter().map(|(a, c)| (a, grading.weight(a), c)).collect();
        let right: Vec<_> = other.coeffs.iter().map(|(a, c)| (a, grading.weight(a), c)).collect();
        let partials = par::map(&left, |(a, wa, ca)| {
            right
                .iter()
                .filter(|(_, wb, _)| wa + wb <= bound)
                .map(|(b, _, cb)| {
                    let mut c = *ca * *cb;
                    if let Some(k) = twist(a, b) {
                        if k != 0 {
                            c = c.mul_monomial(&sign_of(k), k);
                        }
                    }
                    (a.add(b), c)
                })
                .collect::<Vec<_>>()
        });
        collect_sums(grading.clone(), partials.into_iter().flatten())
    }

    /// Inverse for the twisted product; the constant term must be 1.
    pub fn twisted_inverse(&self) -> Result<Self> {
        if !self.constant_term().is_one() {
            return Err(Error::Invalid("twisted inverse requires constant term 1".into()));
        }
        let twist = self.twist.clone().ok_or(Error::TwistMismatch)?;
        let support: Vec<_> = self.positive_part().coeffs.into_iter().collect();
        let mut inv = GradedSeries::one(self.grading.clone());
        inv.twist = Some(twist.clone());
        // B_a = -sum_{b != 0} (-v)^<b, a-b> A_b B_{a-b}
        for level in self.grading.monomials_by_weight().iter().skip(1) {
            let vals = par::map(level, |alpha| {
                RatFunc::sum(support.iter().filter_map(|(b, ab)| {
                    let rest = alpha.checked_sub(b)?;
                    let br = inv.get(&rest)?;
                    let k = DimVector::bilinear(&twist, b, &rest);
                    Some((ab * br).mul_monomial(&-sign_of(k), k))
                }))
            });
            for (a, c) in level.iter().zip(vals) {
                inv.set(a.clone(), c);
            }
        }
        Ok(inv)
    }

    /// Restriction to monomials satisfying `keep` (the constant term is kept).
    pub fn restrict<F: Fn(&DimVector) -> bool>(&self, keep: F) -> Self {
        let mut out = self.clone();
        out.coeffs.retain(|a, _| a.is_zero() || keep(a));
        out
    }
}

/// `(-1)^k` as a rational.
pub fn sign_of(k: i64) -> Rat {
    Rat::from_integer(if k.rem_euclid(2) == 0 { 1 } else { -1 }.into())
}

/// Groups `(monomial, value)` pairs and sums each group.
pub(crate) fn collect_sums<I>(grading: Grading, pairs: I) -> GradedSeries
where
    I: IntoIterator<Item = (DimVector, RatFunc)>,
{
    let mut groups: BTreeMap<DimVector, Vec<RatFunc>> = BTreeMap::new();
    for (a, c) in pairs {
        groups.entry(a).or_default().push(c);
    }
    let groups: Vec<_> = groups.into_iter().collect();
    let sums = par::map(&groups, |(_, cs)| RatFunc::sum(cs.iter().cloned()));
    let mut out = GradedSeries::zero(grading);
    for ((a, _), c) in groups.into_iter().zip(sums) {
        out.set(a, c);
    }
    out
}

impl fmt::Display for GradedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (a, c)) in self.terms().into_iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if a.is_zero() {
                write!(f, "[{}]", c)?;
            } else {
                write!(f, "[{}] x^{}", c, a)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qalg::LaurentPoly;

    fn g1(bound: u32) -> Grading {
        Grading::uniform(1, bound).unwrap()
    }

    fn x(n: u32) -> DimVector {
        DimVector(vec![n])
    }

    fn int(n: i64) -> RatFunc {
        RatFunc::from_int(n)
    }

    #[test]
    fn unit_is_neutral() {
        let f = GradedSeries::from_terms(g1(4), vec![(x(0), int(2)), (x(3), int(-1))]);
        assert_eq!(f.mul(&GradedSeries::one(g1(4))).unwrap(), f);
    }

    #[test]
    fn product_truncates() {
        let x1 = GradedSeries::monomial(g1(2), x(1), int(1));
        assert_eq!(x1.mul(&x1).unwrap(), GradedSeries::monomial(g1(2), x(2), int(1)));
        let x1 = GradedSeries::monomial(g1(1), x(1), int(1));
        assert!(x1.mul(&x1).unwrap().is_zero());
    }

    #[test]
    fn difference_of_squares() {
        let a = GradedSeries::from_terms(g1(3), vec![(x(0), int(1)), (x(1), int(1))]);
        let b = GradedSeries::from_terms(g1(3), vec![(x(0), int(1)), (x(1), int(-1))]);
        let expect = GradedSeries::from_terms(g1(3), vec![(x(0), int(1)), (x(2), int(-1))]);
        assert_eq!(a.mul(&b).unwrap(), expect);
    }

    #[test]
    fn grading_mismatch_is_an_error() {
        let a = GradedSeries::one(g1(3));
        let b = GradedSeries::one(g1(4));
        assert_eq!(a.mul(&b), Err(Error::GradingMismatch));
        assert_eq!(a.add(&b), Err(Error::GradingMismatch));
    }

    #[test]
    fn twisted_product_definition() {
        let g = Grading::uniform(2, 3).unwrap();
        let tw = vec![vec![0, 1], vec![-1, 0]];
        let e1 = GradedSeries::monomial(g.clone(), DimVector(vec![1, 0]), int(1))
            .with_twist(tw.clone())
            .unwrap();
        let e2 = GradedSeries::monomial(g.clone(), DimVector(vec![0, 1]), int(1))
            .with_twist(tw.clone())
            .unwrap();
        let ab = e1.twisted_mul(&e2).unwrap();
        let ba = e2.twisted_mul(&e1).unwrap();
        let key = DimVector(vec![1, 1]);
        assert_eq!(ab.coeff(&key), RatFunc::from(LaurentPoly::neg_v_pow(1)));
        let ratio = ab.coeff(&key).div(&ba.coeff(&key)).unwrap();
        assert_eq!(ratio, RatFunc::from(LaurentPoly::neg_v_pow(2)));
        assert!(e1.mul(&e2).unwrap().coeff(&key).is_one());
        assert_eq!(e1.clone().without_twist().twisted_mul(&e2), Err(Error::TwistMismatch));
    }

    #[test]
    fn twisted_inverse_inverts() {
        let g = Grading::uniform(2, 3).unwrap();
        let tw = vec![vec![0, -2], vec![2, 0]];
        let f = GradedSeries::from_terms(
            g.clone(),
            vec![
                (DimVector(vec![0, 0]), int(1)),
                (DimVector(vec![1, 0]), int(3)),
                (DimVector(vec![0, 1]), RatFunc::from(LaurentPoly::v_pow(1))),
                (DimVector(vec![1, 1]), int(-1)),
            ],
        )
        .with_twist(tw)
        .unwrap();
        let inv = f.twisted_inverse().unwrap();
        let one = GradedSeries::one(g).with_twist(f.twist().unwrap().clone()).unwrap();
        assert_eq!(f.twisted_mul(&inv).unwrap(), one);
        assert_eq!(inv.twisted_mul(&f).unwrap(), one);
    }
}
