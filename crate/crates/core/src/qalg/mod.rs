//! Exact coefficient arithmetic: rationals, Laurent polynomials in
//! `v = q^(1/2)` and normalized rational functions in `v`.

mod intpoly;
mod laurent;
mod ratfunc;

pub use laurent::LaurentPoly;
pub use ratfunc::RatFunc;

/// Arbitrary-precision rational number.
pub type Rat = num_rational::BigRational;

/// `prod_{k=1}^n (1 - q^k)`, or `prod_{k=1}^n (1 - q^-k)` when `inverse` is set.
pub fn q_pochhammer(n: u32, inverse: bool) -> LaurentPoly {
    let sign = if inverse { -1 } else { 1 };
    (1..=n as i64).fold(LaurentPoly::one(), |acc, k| {
        &acc * &LaurentPoly::from_int_terms(&[(0, 1), (sign * 2 * k, -1)])
    })
}

/// `q - 1 = v^2 - 1`
pub fn q_minus_one() -> LaurentPoly {
    LaurentPoly::from_int_terms(&[(2, 1), (0, -1)])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pochhammer_examples() {
        assert!(q_pochhammer(0, false).is_one());
        assert!(q_pochhammer(0, true).is_one());
        assert_eq!(
            q_pochhammer(2, false),
            LaurentPoly::from_int_terms(&[(0, 1), (2, -1), (4, -1), (6, 1)])
        );
        assert_eq!(q_pochhammer(1, true), LaurentPoly::from_int_terms(&[(0, 1), (-2, -1)]));
    }

    #[test]
    fn inverse_pochhammer_is_bar_of_plain() {
        for n in 0..6 {
            assert_eq!(q_pochhammer(n, true), q_pochhammer(n, false).substitute_power(-1));
        }
    }
}
