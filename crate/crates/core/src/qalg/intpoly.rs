//! Dense primitive integer polynomials, used only to compute gcds and exact
//! quotients while normalizing rational functions.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{LaurentPoly, Rat};

/// Coefficients from the constant term upward; no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct IntPoly(pub(crate) Vec<BigInt>);

/// `content * v^shift * prim(v)` with `prim` primitive, `prim(0) != 0` and a
/// positive leading coefficient.
#[derive(Clone, Debug)]
pub(crate) struct Decomposed {
    pub content: Rat,
    pub shift: i64,
    pub prim: IntPoly,
}

impl IntPoly {
    pub fn one() -> Self {
        IntPoly(vec![BigInt::one()])
    }

    pub fn is_one(&self) -> bool {
        self.0.len() == 1 && self.0[0].is_one()
    }

    fn lc(&self) -> &BigInt {
        self.0.last().expect("nonzero polynomial")
    }

    fn trim(mut v: Vec<BigInt>) -> Vec<BigInt> {
        while v.last().is_some_and(|c| c.is_zero()) {
            v.pop();
        }
        v
    }

    fn content(v: &[BigInt]) -> BigInt {
        let mut g = BigInt::zero();
        for c in v {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Primitive part with positive leading coefficient.
    fn primitive(v: Vec<BigInt>) -> Vec<BigInt> {
        let v = Self::trim(v);
        if v.is_empty() {
            return v;
        }
        let mut g = Self::content(&v);
        if v.last().unwrap().is_negative() {
            g = -g;
        }
        if g.is_one() {
            v
        } else {
            v.into_iter().map(|c| c / &g).collect()
        }
    }

    fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        let mut r = a.to_vec();
        let db = b.len() - 1;
        let lb = &b[db];
        while r.len() > db && !r.is_empty() {
            let dr = r.len() - 1;
            let lr = r[dr].clone();
            for c in r.iter_mut() {
                *c *= lb;
            }
            let off = dr - db;
            for (i, bc) in b.iter().enumerate() {
                r[off + i] -= &lr * bc;
            }
            r = Self::trim(r);
            // keep the remainder small
            if r.len() > 4 {
                r = Self::primitive(r);
            }
        }
        r
    }

    /// Primitive gcd (positive leading coefficient).
    pub fn gcd(a: &IntPoly, b: &IntPoly) -> IntPoly {
        if a.is_one() || b.is_one() {
            return IntPoly::one();
        }
        let (mut x, mut y) = if a.0.len() >= b.0.len() {
            (a.0.clone(), b.0.clone())
        } else {
            (b.0.clone(), a.0.clone())
        };
        while !y.is_empty() {
            if y.len() == 1 {
                return IntPoly::one();
            }
            let r = Self::primitive(Self::pseudo_rem(&x, &y));
            x = y;
            y = r;
        }
        IntPoly(Self::primitive(x))
    }

    /// Exact quotient `a / b`; both primitive, `b | a` over the rationals.
    pub fn exact_div(a: &IntPoly, b: &IntPoly) -> IntPoly {
        if b.is_one() {
            return a.clone();
        }
        let mut r = a.0.clone();
        let db = b.0.len() - 1;
        let lb = b.lc();
        let mut q = vec![BigInt::zero(); r.len() - db];
        for k in (0..q.len()).rev() {
            let c = &r[k + db];
            if c.is_zero() {
                continue;
            }
            let (quot, rem) = c.div_rem(lb);
            debug_assert!(rem.is_zero(), "inexact polynomial division");
            for (i, bc) in b.0.iter().enumerate() {
                r[k + i] -= &quot * bc;
            }
            q[k] = quot;
        }
        debug_assert!(r.iter().all(|c| c.is_zero()), "inexact polynomial division");
        IntPoly(Self::trim(q))
    }

    #[cfg(test)]
    pub fn mul(a: &IntPoly, b: &IntPoly) -> IntPoly {
        let mut out = vec![BigInt::zero(); a.0.len() + b.0.len() - 1];
        for (i, x) in a.0.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.0.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        IntPoly(out)
    }
}

impl Decomposed {
    pub fn of(p: &LaurentPoly) -> Option<Decomposed> {
        let shift = p.min_exp()?;
        let top = p.max_exp().unwrap();
        let mut lcm = BigInt::one();
        for (_, c) in p.terms() {
            lcm = lcm.lcm(c.denom());
        }
        let mut ints = vec![BigInt::zero(); (top - shift + 1) as usize];
        for (e, c) in p.terms() {
            ints[(e - shift) as usize] = c.numer() * (&lcm / c.denom());
        }
        let mut g = IntPoly::content(&ints);
        if ints.last().unwrap().is_negative() {
            g = -g;
        }
        let prim = ints.into_iter().map(|c| c / &g).collect();
        Some(Decomposed {
            content: Rat::new(g, lcm),
            shift,
            prim: IntPoly(prim),
        })
    }

    pub fn to_laurent(&self) -> LaurentPoly {
        LaurentPoly::from_terms(
            self.prim
                .0
                .iter()
                .enumerate()
                .map(|(i, c)| (self.shift + i as i64, Rat::from_integer(c.clone()) * &self.content)),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(v: &[i64]) -> IntPoly {
        IntPoly(v.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn gcd_of_cyclotomic_products() {
        let a = IntPoly::mul(&ip(&[1, 0, -1]), &ip(&[1, 0, 0, 0, -1]));
        let b = IntPoly::mul(&ip(&[1, 0, -1]), &ip(&[1, 0, -1]));
        let g = IntPoly::gcd(&a, &b);
        // gcd = (1 - v^2)^2 since 1 - v^4 = (1 - v^2)(1 + v^2); primitive with positive lc
        assert_eq!(g, ip(&[1, 0, -2, 0, 1]));
        let q = IntPoly::exact_div(&a, &g);
        assert_eq!(q, ip(&[1, 0, 1]));
    }

    #[test]
    fn coprime_gives_one() {
        assert!(IntPoly::gcd(&ip(&[1, 1]), &ip(&[1, -1])).is_one());
        assert!(IntPoly::gcd(&ip(&[2, 4]), &ip(&[3])).is_one());
    }

    #[test]
    fn decomposition_round_trip() {
        let p = LaurentPoly::from_terms(vec![
            (-3, Rat::new(BigInt::from(-2), BigInt::from(3))),
            (1, Rat::new(BigInt::from(4), BigInt::from(9))),
        ]);
        let d = Decomposed::of(&p).unwrap();
        assert_eq!(d.shift, -3);
        assert!(d.prim.lc().is_positive());
        assert_eq!(d.to_laurent(), p);
    }
}
