//! Kac polynomials from Hua's formula and the refined Hua series.
//!
//! Hua's series is
//! `r = sum_lambda prod_k q^(-T(lambda_k)) / (q^-1)_{lambda_k - lambda_{k+1}} x^{lambda_k}`
//! over tuples of partitions, and `r = Exp(sum_a a_a(q) x^a / (q - 1))`.
//! Splitting `lambda` into its level differences `gamma_k = lambda_k - lambda_{k+1}`
//! gives the refined series `s` in variables `x_{ki}`, which recovers `r`
//! under `x_{ki} = x_i^k`.

mod partitions;

use std::collections::BTreeMap;
use std::fmt::Write as _;

pub use partitions::{multipartitions, partitions};

use crate::error::{Error, Result};
use crate::par;
use crate::qalg::{q_pochhammer, LaurentPoly, RatFunc};
use crate::quiver::Quiver;
use crate::series::{
    collect_sums, plethystic_log, scale_by_q_minus_1, DimVector, GradedSeries, Grading, QScaling,
};

/// `q^(-sum_k T(lambda_k)) / prod (q^-1)_{diffs}`.
fn level_term(quiver: &Quiver, lambdas: &[DimVector], diffs: &[&[u32]]) -> Result<RatFunc> {
    let mut t = 0;
    for l in lambdas {
        t += quiver.tits_form(l)?;
    }
    let den = diffs
        .iter()
        .flat_map(|d| d.iter())
        .filter(|&&n| n > 0)
        .fold(LaurentPoly::one(), |acc, &n| &acc * &q_pochhammer(n, true));
    RatFunc::new(LaurentPoly::q_pow(-t), den)
}

/// Hua's series up to total degree `bound`.
pub fn hua_series(quiver: &Quiver, bound: u32) -> Result<GradedSeries> {
    let r = quiver.vertices();
    let grading = Grading::uniform(r, bound)?;
    let mps = multipartitions(r, bound);
    let terms = par::try_map(&mps, |mp| {
        let len = mp.iter().map(Vec::len).max().unwrap_or(0);
        let part = |i: usize, k: usize| mp[i].get(k).copied().unwrap_or(0);
        let lambdas: Vec<DimVector> = (0..len)
            .map(|k| DimVector((0..r).map(|i| part(i, k)).collect()))
            .collect();
        let diffs: Vec<Vec<u32>> = (0..len)
            .map(|k| (0..r).map(|i| part(i, k) - part(i, k + 1)).collect())
            .collect();
        let diff_refs: Vec<&[u32]> = diffs.iter().map(Vec::as_slice).collect();
        let alpha = DimVector(mp.iter().map(|p| p.iter().sum()).collect());
        Ok((alpha, level_term(quiver, &lambdas, &diff_refs)?))
    })?;
    Ok(collect_sums(grading, terms))
}

/// One Kac polynomial with its positivity flag.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KacEntry {
    pub a_alpha: LaurentPoly,
    /// `a_alpha` lies in `N[q]`
    pub in_n_of_q: bool,
}

impl KacEntry {
    pub fn new(a_alpha: LaurentPoly) -> Self {
        Self {
            in_n_of_q: a_alpha.is_in_n_of_q(),
            a_alpha,
        }
    }
}

/// Kac polynomials `a_a` for `0 < |a| <= bound`, zero ones omitted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KacResult {
    pub bound: u32,
    pub entries: BTreeMap<DimVector, KacEntry>,
}

impl KacResult {
    fn from_values<I>(bound: u32, values: I) -> Result<Self>
    where
        I: IntoIterator<Item = (DimVector, RatFunc)>,
    {
        let mut entries = BTreeMap::new();
        for (alpha, c) in values {
            let p = match c.as_laurent() {
                Some(p) if p.is_polynomial_in_q() && p.has_integer_coeffs() => p.clone(),
                _ => {
                    return Err(Error::NotPolynomialInQ {
                        at: alpha.to_string(),
                        value: c.to_string(),
                    })
                }
            };
            if !p.is_zero() {
                entries.insert(alpha, KacEntry::new(p));
            }
        }
        Ok(Self { bound, entries })
    }

    /// `a_a`, zero when absent.
    pub fn a(&self, alpha: &DimVector) -> LaurentPoly {
        self.entries.get(alpha).map(|e| e.a_alpha.clone()).unwrap_or_default()
    }

    pub fn all_in_n_of_q(&self) -> bool {
        self.entries.values().all(|e| e.in_n_of_q)
    }
}

/// `a = (q - 1) Log(r)`; every `a_a` must be an integer polynomial in `q`.
pub fn kac_polynomials(quiver: &Quiver, bound: u32) -> Result<KacResult> {
    let r = hua_series(quiver, bound)?;
    let a = scale_by_q_minus_1(&plethystic_log(&r)?, QScaling::Multiply);
    KacResult::from_values(bound, a.iter().map(|(k, c)| (k.clone(), c.clone())))
}

/// The refined series in variables `x_{ki}`, `1 <= k <= levels`, up to
/// weighted degree `bound` with `weight(x_{ki}) = k`.
pub fn refined_series(quiver: &Quiver, levels: usize, bound: u32) -> Result<GradedSeries> {
    if levels == 0 {
        return Err(Error::Invalid("at least one level is required".into()));
    }
    let r = quiver.vertices();
    let grading = Grading::levels(r, levels, bound)?;
    let monomials = grading.monomials();
    let terms = par::try_map(&monomials, |gamma| {
        let e = gamma.entries();
        let diffs: Vec<&[u32]> = e.chunks(r).collect();
        let mut acc = DimVector::zeros(r);
        let mut lambdas = Vec::with_capacity(levels);
        for d in diffs.iter().rev() {
            acc = acc.add(&DimVector(d.to_vec()));
            lambdas.push(acc.clone());
        }
        level_term(quiver, &lambdas, &diffs)
    })?;
    Ok(GradedSeries::from_terms(grading, monomials.into_iter().zip(terms)))
}

/// One coefficient `b_gamma` of `(q - 1) Log(s)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RefinedEntry {
    pub b_gamma: RatFunc,
    /// a Laurent polynomial in `q` (integral powers of `q` only)
    pub laurent_in_q: bool,
    /// in `N[q]`
    pub positive: bool,
}

impl RefinedEntry {
    pub fn new(b_gamma: RatFunc) -> Self {
        let p = b_gamma.as_laurent();
        Self {
            laurent_in_q: p.is_some_and(LaurentPoly::is_in_q),
            positive: p.is_some_and(LaurentPoly::is_in_n_of_q),
            b_gamma,
        }
    }
}

/// The refined invariants `b_gamma`, keyed by the flattened `gamma`
/// (level `k` occupies positions `(k - 1) r .. k r`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RefinedResult {
    pub vertices: usize,
    pub levels: usize,
    pub bound: u32,
    /// the quiver has at least one loop at every vertex
    pub theorem_applies: bool,
    pub entries: BTreeMap<DimVector, RefinedEntry>,
}

impl RefinedResult {
    /// `gamma` values whose `b_gamma` is not in `N[q]`.
    pub fn violations(&self) -> Vec<&DimVector> {
        self.entries
            .iter()
            .filter(|(_, e)| !e.positive)
            .map(|(g, _)| g)
            .collect()
    }

    pub fn all_positive(&self) -> bool {
        self.entries.values().all(|e| e.positive)
    }

    /// `b_gamma`, zero when absent.
    pub fn b(&self, gamma: &DimVector) -> RatFunc {
        self.entries.get(gamma).map(|e| e.b_gamma.clone()).unwrap_or_default()
    }

    /// The monomial `x^gamma` written as `x11^2 x21`, or `x1_1^2` style
    /// once an index exceeds one digit.
    pub fn gamma_label(&self, gamma: &DimVector) -> String {
        gamma_label(self.vertices, gamma)
    }
}

pub fn gamma_label(r: usize, gamma: &DimVector) -> String {
    let wide = r > 9 || gamma.len() / r.max(1) > 9;
    let mut out = String::new();
    for (idx, &g) in gamma.entries().iter().enumerate() {
        if g == 0 {
            continue;
        }
        if !out.is_empty() {
            out.push(' ');
        }
        let (k, i) = (idx / r + 1, idx % r + 1);
        if wide {
            let _ = write!(out, "x{k}_{i}");
        } else {
            let _ = write!(out, "x{k}{i}");
        }
        if g > 1 {
            let _ = write!(out, "^{g}");
        }
    }
    if out.is_empty() {
        out.push('1');
    }
    out
}

/// `b = (q - 1) Log(s)` with positivity flags.
pub fn refined_invariants(quiver: &Quiver, levels: usize, bound: u32) -> Result<RefinedResult> {
    let s = refined_series(quiver, levels, bound)?;
    let b = scale_by_q_minus_1(&plethystic_log(&s)?, QScaling::Multiply);
    Ok(RefinedResult {
        vertices: quiver.vertices(),
        levels,
        bound,
        theorem_applies: quiver.has_enough_loops(),
        entries: b
            .iter()
            .map(|(g, c)| (g.clone(), RefinedEntry::new(c.clone())))
            .collect(),
    })
}

/// `a_a = sum b_gamma` over `gamma` with `sum_k k gamma_k = a`.
pub fn refined_to_kac(refined: &RefinedResult, bound: u32) -> Result<KacResult> {
    if refined.levels < bound as usize || refined.bound < bound {
        return Err(Error::LevelShortfall {
            levels: refined.levels.min(refined.bound as usize),
            bound,
        });
    }
    let r = refined.vertices;
    let mut groups: BTreeMap<DimVector, Vec<RatFunc>> = BTreeMap::new();
    for (gamma, e) in &refined.entries {
        let mut alpha = vec![0u32; r];
        for (idx, &g) in gamma.entries().iter().enumerate() {
            alpha[idx % r] += (idx / r + 1) as u32 * g;
        }
        let alpha = DimVector(alpha);
        if alpha.total() <= bound as u64 {
            groups.entry(alpha).or_default().push(e.b_gamma.clone());
        }
    }
    KacResult::from_values(
        bound,
        groups.into_iter().map(|(a, cs)| (a, RatFunc::sum(cs))),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(k: u32) -> DimVector {
        DimVector(vec![k])
    }

    fn one_minus_q_inv() -> LaurentPoly {
        LaurentPoly::from_int_terms(&[(0, 1), (-2, -1)])
    }

    #[test]
    fn hua_low_terms() {
        for g in 0..3 {
            let r = hua_series(&Quiver::loops(g), 3).unwrap();
            assert!(r.constant_term().is_one());
            let expect = RatFunc::new(LaurentPoly::q_pow(g as i64 - 1), one_minus_q_inv()).unwrap();
            assert_eq!(r.coeff(&n(1)), expect);
        }
    }

    #[test]
    fn no_loops_kac() {
        let k = kac_polynomials(&Quiver::loops(0), 4).unwrap();
        assert_eq!(k.entries.len(), 1);
        assert_eq!(k.a(&n(1)), LaurentPoly::one());
    }

    #[test]
    fn jordan_kac() {
        let k = kac_polynomials(&Quiver::loops(1), 4).unwrap();
        for m in 1..=4 {
            assert_eq!(k.a(&n(m)), LaurentPoly::q_pow(1));
        }
    }

    #[test]
    fn loops_in_dimension_one() {
        for g in 0..4 {
            let k = kac_polynomials(&Quiver::loops(g), 1).unwrap();
            assert_eq!(k.a(&n(1)), LaurentPoly::q_pow(g as i64));
        }
    }

    #[test]
    fn a2_quiver_has_three_indecomposables() {
        let q = Quiver::new(vec![vec![0, 1], vec![0, 0]]).unwrap();
        let k = kac_polynomials(&q, 3).unwrap();
        assert_eq!(k.entries.len(), 3);
        for a in [[1, 0], [0, 1], [1, 1]] {
            assert_eq!(k.a(&DimVector(a.to_vec())), LaurentPoly::one());
        }
    }

    #[test]
    fn refined_first_term() {
        let s = refined_series(&Quiver::loops(0), 2, 3).unwrap();
        let expect = RatFunc::new(LaurentPoly::q_pow(-1), one_minus_q_inv()).unwrap();
        assert_eq!(s.coeff(&DimVector(vec![1, 0])), expect);
        assert!(s.constant_term().is_one());
    }

    #[test]
    fn refined_has_no_constant_term() {
        let r = refined_invariants(&Quiver::loops(1), 3, 3).unwrap();
        assert!(r.entries.keys().all(|g| !g.is_zero()));
        assert!(r.all_positive() && r.theorem_applies);
    }

    #[test]
    fn labels() {
        assert_eq!(gamma_label(1, &DimVector(vec![2, 1])), "x11^2 x21");
        assert_eq!(gamma_label(2, &DimVector(vec![0, 1, 0, 0])), "x12");
        assert_eq!(gamma_label(2, &DimVector(vec![0, 0])), "1");
    }

    #[test]
    fn level_shortfall() {
        let r = refined_invariants(&Quiver::loops(1), 2, 3).unwrap();
        assert!(matches!(refined_to_kac(&r, 3), Err(Error::LevelShortfall { .. })));
    }

    #[test]
    fn jordan_collapse() {
        let r = refined_invariants(&Quiver::loops(1), 3, 3).unwrap();
        let k = refined_to_kac(&r, 3).unwrap();
        assert_eq!(k.a(&n(1)), LaurentPoly::q_pow(1));
        assert_eq!(k, kac_polynomials(&Quiver::loops(1), 3).unwrap());
    }
}
