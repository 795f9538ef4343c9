use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::Rat;
use crate::error::{Error, Result};

/// Sparse Laurent polynomial in `v = q^(1/2)` with rational coefficients.
///
/// No stored coefficient is zero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, Rat>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * v^exp`
    pub fn monomial(c: Rat, exp: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Self { terms }
    }

    /// `v^exp`
    pub fn v_pow(exp: i64) -> Self {
        Self::monomial(Rat::one(), exp)
    }

    /// `q^exp = v^(2 exp)`
    pub fn q_pow(exp: i64) -> Self {
        Self::v_pow(2 * exp)
    }

    /// `(-v)^exp`
    pub fn neg_v_pow(exp: i64) -> Self {
        let sign = if exp.rem_euclid(2) == 0 { 1 } else { -1 };
        Self::monomial(Rat::from_integer(BigInt::from(sign)), exp)
    }

    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, Rat)>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    /// Integer coefficients, exponents in `v`.
    pub fn from_int_terms(terms: &[(i64, i64)]) -> Self {
        Self::from_terms(terms.iter().map(|&(e, c)| (e, Rat::from_integer(BigInt::from(c)))))
    }

    pub fn add_term(&mut self, exp: i64, c: Rat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exp) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// Terms in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &Rat)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, exp: i64) -> Rat {
        self.terms.get(&exp).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// A single term `c v^k` with `c != 0`.
    pub fn as_monomial(&self) -> Option<(i64, &Rat)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(e, c)| (*e, c))
        } else {
            None
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    /// Multiply by `v^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// Substitute `v -> v^n`; `n = -1` gives the bar involution.
    pub fn substitute_power(&self, n: i64) -> Self {
        assert!(n != 0, "substitution v -> v^0 is not invertible");
        Self {
            terms: self.terms.iter().map(|(e, c)| (e * n, c.clone())).collect(),
        }
    }

    /// Substitute `v -> -v`.
    pub fn neg_v(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (*e, if e.rem_euclid(2) == 0 { c.clone() } else { -c }))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval(&self, v: &Rat) -> Result<Rat> {
        let mut acc = Rat::zero();
        for (e, c) in &self.terms {
            if *e < 0 && v.is_zero() {
                return Err(Error::Pole);
            }
            acc += c * pow_rat(v, *e);
        }
        Ok(acc)
    }

    pub fn has_integer_coeffs(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    pub fn has_nonneg_integer_coeffs(&self) -> bool {
        self.terms.values().all(|c| c.is_integer() && !c.is_negative())
    }

    /// Only even powers of `v`, i.e. a Laurent polynomial in `q`.
    pub fn is_in_q(&self) -> bool {
        self.terms.keys().all(|e| e.rem_euclid(2) == 0)
    }

    /// An ordinary polynomial in `q` (even, nonnegative exponents).
    pub fn is_polynomial_in_q(&self) -> bool {
        self.terms.keys().all(|e| *e >= 0 && e.rem_euclid(2) == 0)
    }

    /// In `N[q]`: polynomial in `q` with nonnegative integer coefficients.
    pub fn is_in_n_of_q(&self) -> bool {
        self.is_polynomial_in_q() && self.has_nonneg_integer_coeffs()
    }

    /// In `N[v]`: no negative powers, nonnegative integer coefficients.
    pub fn is_in_n_of_v(&self) -> bool {
        self.min_exp().is_none_or(|e| e >= 0) && self.has_nonneg_integer_coeffs()
    }

    /// Evaluate at `q = value`; fails on odd powers of `v`.
    pub fn eval_at_q(&self, q: &Rat) -> Result<Rat> {
        if !self.is_in_q() {
            return Err(Error::OddPower(self.to_string()));
        }
        let mut acc = Rat::zero();
        for (e, c) in &self.terms {
            if *e < 0 && q.is_zero() {
                return Err(Error::Pole);
            }
            acc += c * pow_rat(q, e / 2);
        }
        Ok(acc)
    }

    /// Sum of coefficients (value at `v = 1`).
    pub fn coeff_sum(&self) -> Rat {
        self.terms.values().fold(Rat::zero(), |acc, c| acc + c)
    }
}

pub(crate) fn pow_rat(x: &Rat, e: i64) -> Rat {
    let mut acc = Rat::one();
    for _ in 0..e.unsigned_abs() {
        acc *= x;
    }
    if e < 0 {
        acc.recip()
    } else {
        acc
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c);
        }
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self -= &rhs;
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if let Some((e, c)) = rhs.as_monomial() {
            return self.scale(c).shift(e);
        }
        if let Some((e, c)) = self.as_monomial() {
            return rhs.scale(c).shift(e);
        }
        let mut out = LaurentPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

/// Formats an exponent of `v` as a power of `q`.
pub(crate) fn q_power_label(e: i64) -> String {
    if e == 2 {
        "q".to_string()
    } else if e.rem_euclid(2) == 0 {
        format!("q^{}", e / 2)
    } else {
        format!("q^({}/2)", e)
    }
}

impl fmt::Display for LaurentPoly {
    /// Ascending powers of `q`, half-integer powers written `q^(k/2)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            match (*e == 0, abs.is_one()) {
                (true, _) => write!(f, "{}", abs)?,
                (false, true) => write!(f, "{}", q_power_label(*e))?,
                (false, false) if abs.is_integer() => write!(f, "{}{}", abs, q_power_label(*e))?,
                (false, false) => write!(f, "({}){}", abs, q_power_label(*e))?,
            }
        }
        Ok(())
    }
}
