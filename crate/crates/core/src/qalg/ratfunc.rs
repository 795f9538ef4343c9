use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::intpoly::{Decomposed, IntPoly};
use super::{LaurentPoly, Rat};
use crate::error::{Error, Result};

/// Rational function in `v = q^(1/2)` in normal form.
///
/// The denominator is an ordinary polynomial in `v` with constant term 1 and
/// shares no factor with the numerator, so structural equality is equality
/// of functions.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl Default for RatFunc {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<LaurentPoly> for RatFunc {
    fn from(num: LaurentPoly) -> Self {
        Self {
            num,
            den: LaurentPoly::one(),
        }
    }
}

impl From<Rat> for RatFunc {
    fn from(c: Rat) -> Self {
        LaurentPoly::constant(c).into()
    }
}

/// Exact quotient of `p` by a primitive integer factor of its polynomial part.
fn divide_out(p: &LaurentPoly, g: &IntPoly) -> LaurentPoly {
    if g.is_one() || p.is_zero() {
        return p.clone();
    }
    let mut d = Decomposed::of(p).expect("nonzero");
    d.prim = IntPoly::exact_div(&d.prim, g);
    d.to_laurent()
}

fn prim_part(p: &LaurentPoly) -> IntPoly {
    Decomposed::of(p).expect("nonzero").prim
}

fn is_monomial(p: &LaurentPoly) -> bool {
    p.len() == 1
}

impl RatFunc {
    pub fn zero() -> Self {
        LaurentPoly::zero().into()
    }

    pub fn one() -> Self {
        LaurentPoly::one().into()
    }

    pub fn from_int(n: i64) -> Self {
        Rat::from_integer(n.into()).into()
    }

    /// Builds the normal form of `num / den`.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        if is_monomial(&den) || is_monomial(&num) {
            return Ok(Self::from_coprime(num, den));
        }
        let g = IntPoly::gcd(&prim_part(&num), &prim_part(&den));
        Ok(Self::from_coprime(divide_out(&num, &g), divide_out(&den, &g)))
    }

    /// Rescales a coprime pair so the denominator has constant term 1.
    fn from_coprime(num: LaurentPoly, den: LaurentPoly) -> Self {
        let s = den.min_exp().expect("nonzero denominator");
        let c = den.coeff(s);
        if s == 0 && c.is_one() {
            return Self { num, den };
        }
        let inv = c.recip();
        Self {
            num: num.shift(-s).scale(&inv),
            den: den.shift(-s).scale(&inv),
        }
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The Laurent polynomial this function equals, if any.
    pub fn as_laurent(&self) -> Option<&LaurentPoly> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    /// Multiply by `c * v^k`; stays in normal form.
    pub fn mul_monomial(&self, c: &Rat, k: i64) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            num: self.num.scale(c).shift(k),
            den: self.den.clone(),
        }
    }

    /// Substitute `v -> v^n` for `n >= 1`; coprimality is preserved.
    pub fn adams(&self, n: u32) -> Self {
        assert!(n >= 1);
        if n == 1 {
            return self.clone();
        }
        Self {
            num: self.num.substitute_power(n as i64),
            den: self.den.substitute_power(n as i64),
        }
    }

    /// Substitute `v -> -v`.
    pub fn substitute_neg_v(&self) -> Self {
        Self {
            num: self.num.neg_v(),
            den: self.den.neg_v(),
        }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::from_coprime(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, rhs: &RatFunc) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, n: u32) -> Self {
        // (a/b)^n is already coprime
        Self {
            num: self.num.pow(n),
            den: self.den.pow(n),
        }
    }

    /// Exact value at `v = value`.
    pub fn eval_at(&self, value: &Rat) -> Result<Rat> {
        let d = self.den.eval(value)?;
        if d.is_zero() {
            return Err(Error::Pole);
        }
        Ok(self.num.eval(value)? / d)
    }

    /// Exact value at `q = value`; the function must be even in `v`.
    pub fn eval_at_q(&self, value: &Rat) -> Result<Rat> {
        let d = self.den.eval_at_q(value)?;
        if d.is_zero() {
            return Err(Error::Pole);
        }
        Ok(self.num.eval_at_q(value)? / d)
    }

    /// Sum with one gcd per distinct denominator.
    pub fn sum<I>(terms: I) -> RatFunc
    where
        I: IntoIterator<Item = RatFunc>,
    {
        let mut groups: HashMap<LaurentPoly, LaurentPoly> = HashMap::new();
        let mut order = Vec::new();
        for t in terms {
            if t.is_zero() {
                continue;
            }
            match groups.get_mut(&t.den) {
                Some(acc) => *acc += &t.num,
                None => {
                    order.push(t.den.clone());
                    groups.insert(t.den, t.num);
                }
            }
        }
        let mut acc = RatFunc::zero();
        for den in order {
            let num = groups.remove(&den).unwrap();
            if num.is_zero() {
                continue;
            }
            let part = if den.is_one() {
                RatFunc::from(num)
            } else {
                RatFunc::new(num, den).expect("nonzero denominator")
            };
            acc = &acc + &part;
        }
        acc
    }
}

impl Add<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let (a, b, c, d) = (&self.num, &self.den, &rhs.num, &rhs.den);
        if b == d {
            return RatFunc::new(a + c, b.clone()).expect("nonzero denominator");
        }
        // a + c/d with gcd(c, d) = 1 stays coprime
        if b.is_one() {
            return RatFunc {
                num: &(a * d) + c,
                den: d.clone(),
            };
        }
        if d.is_one() {
            return RatFunc {
                num: &(c * b) + a,
                den: b.clone(),
            };
        }
        let g = IntPoly::gcd(&prim_part(b), &prim_part(d));
        if g.is_one() {
            return RatFunc::from_coprime(&(a * d) + &(c * b), b * d);
        }
        // any common factor of the new numerator and denominator divides g
        let b1 = divide_out(b, &g);
        let d1 = divide_out(d, &g);
        let num = &(a * &d1) + &(c * &b1);
        if num.is_zero() {
            return RatFunc::zero();
        }
        let den = &b1 * d;
        let h = IntPoly::gcd(&prim_part(&num), &g);
        RatFunc::from_coprime(divide_out(&num, &h), divide_out(&den, &h))
    }
}

impl Add for RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: RatFunc) -> RatFunc {
        &self + &rhs
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

impl Sub<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Sub for RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: RatFunc) -> RatFunc {
        &self - &rhs
    }
}

/// Cross-cancels `num` against `den`, returning both reduced.
fn cancel(num: &LaurentPoly, den: &LaurentPoly) -> (LaurentPoly, LaurentPoly) {
    if den.is_one() || is_monomial(num) {
        return (num.clone(), den.clone());
    }
    let g = IntPoly::gcd(&prim_part(num), &prim_part(den));
    (divide_out(num, &g), divide_out(den, &g))
}

impl Mul<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc::from(&self.num * &rhs.num);
        }
        let (a, d) = cancel(&self.num, &rhs.den);
        let (c, b) = cancel(&rhs.num, &self.den);
        RatFunc::from_coprime(&a * &c, &b * &d)
    }
}

impl Mul for RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: RatFunc) -> RatFunc {
        &self * &rhs
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(t: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_int_terms(t)
    }

    fn rf(n: &[(i64, i64)], d: &[(i64, i64)]) -> RatFunc {
        RatFunc::new(lp(n), lp(d)).unwrap()
    }

    #[test]
    fn normalize_identity_case() {
        assert!(rf(&[(2, 1)], &[(2, 1)]).is_one());
    }

    #[test]
    fn normalize_cancels_common_factor() {
        // (1 - v^2) / (-v + v^3) = -v^-1
        let f = rf(&[(0, 1), (2, -1)], &[(1, -1), (3, 1)]);
        assert_eq!(f.num(), &lp(&[(-1, -1)]));
        assert!(f.den().is_one());
    }

    #[test]
    fn normalize_exact_division() {
        // (1 - q)(1 - q^2) / (1 - q) = 1 - q^2
        let num = &lp(&[(0, 1), (2, -1)]) * &lp(&[(0, 1), (4, -1)]);
        let f = RatFunc::new(num, lp(&[(0, 1), (2, -1)])).unwrap();
        assert_eq!(f, RatFunc::from(lp(&[(0, 1), (4, -1)])));
    }

    #[test]
    fn zero_denominator_is_rejected() {
        assert_eq!(RatFunc::new(LaurentPoly::one(), LaurentPoly::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn denominator_has_unit_constant_term() {
        let f = rf(&[(0, 3)], &[(1, 2), (3, -4)]);
        assert!(f.den().coeff(0).is_one());
        assert_eq!(f.den().min_exp(), Some(0));
    }

    #[test]
    fn neg_v_cases() {
        assert_eq!(rf(&[(3, 1)], &[(0, 1)]).substitute_neg_v(), rf(&[(3, -1)], &[(0, 1)]));
        assert_eq!(rf(&[(2, 1)], &[(0, 1)]).substitute_neg_v(), rf(&[(2, 1)], &[(0, 1)]));
        let f = rf(&[(0, 1)], &[(0, 1), (2, -1)]);
        assert_eq!(f.substitute_neg_v(), f);
    }

    #[test]
    fn evaluation_and_poles() {
        assert_eq!(rf(&[(3, 1)], &[(0, 1)]).eval_at(&Rat::one()).unwrap(), Rat::one());
        assert_eq!(
            rf(&[(-2, 1)], &[(0, 1)]).eval_at(&Rat::from_integer(2.into())).unwrap(),
            Rat::new(1.into(), 4.into())
        );
        assert_eq!(rf(&[(0, 1)], &[(0, 1), (2, -1)]).eval_at(&Rat::one()), Err(Error::Pole));
    }

    #[test]
    fn laurent_detection() {
        let f = rf(&[(0, 1), (4, -1)], &[(0, 1), (2, -1)]);
        assert_eq!(f.as_laurent(), Some(&lp(&[(0, 1), (2, 1)])));
        assert!(rf(&[(0, 1)], &[(0, 1), (2, -1)]).as_laurent().is_none());
        assert_eq!(rf(&[(3, 1)], &[(0, 1)]).as_laurent(), Some(&lp(&[(3, 1)])));
    }

    #[test]
    fn addition_with_shared_factors() {
        // 1/(1-q) - 1/(1-q)^2 = -q/(1-q)^2
        let a = rf(&[(0, 1)], &[(0, 1), (2, -1)]);
        let b = rf(&[(0, 1)], &[(0, 1), (2, -2), (4, 1)]);
        let expect = rf(&[(2, -1)], &[(0, 1), (2, -2), (4, 1)]);
        assert_eq!(&a - &b, expect);
        // 1/(1-q) + 1/(1+q) = 2/(1-q^2)
        let c = rf(&[(0, 1)], &[(0, 1), (2, 1)]);
        assert_eq!(&a + &c, rf(&[(0, 2)], &[(0, 1), (4, -1)]));
        // cancellation down to a polynomial: q/(1-q) + 1 = 1/(1-q)
        let d = rf(&[(2, 1)], &[(0, 1), (2, -1)]);
        assert_eq!(&d + &RatFunc::one(), a);
    }

    #[test]
    fn sum_matches_pairwise_addition() {
        let terms = vec![
            rf(&[(0, 1)], &[(0, 1), (2, -1)]),
            rf(&[(2, 3)], &[(0, 1), (2, -1)]),
            rf(&[(1, 1)], &[(0, 1), (4, -1)]),
            rf(&[(0, -4)], &[(0, 1), (2, -1)]),
        ];
        let pairwise = terms.iter().fold(RatFunc::zero(), |acc, t| &acc + t);
        assert_eq!(RatFunc::sum(terms), pairwise);
    }

    #[test]
    fn multiplication_cancels_crosswise() {
        let a = rf(&[(0, 1), (2, -1)], &[(0, 1), (4, -1)]); // 1/(1+q)
        let b = rf(&[(0, 1), (2, 1)], &[(0, 1)]);
        assert!((&a * &b).is_one());
        assert!((&a * &a.inv().unwrap()).is_one());
    }
}
