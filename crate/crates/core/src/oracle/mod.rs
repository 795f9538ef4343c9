//! Brute-force representation counts over prime fields.
//!
//! Representations of dimension `a` over `F_p` are points of
//! `prod_{i -> j} Hom(F_p^{a_i}, F_p^{a_j})`, encoded as integers in base
//! `p`. Orbits of `GL_a(F_p)` are found by breadth-first search along a
//! generating set (transvections and one primitive-root scaling per
//! vertex). Each class is then classified through its endomorphism ring,
//! which is small enough to enumerate outright.

mod linalg;

use std::collections::VecDeque;

pub use linalg::{nullspace, rref, subspaces, Matrix, Subspace};

use crate::dt::a_coefficient;
use crate::error::{Error, Result};
use crate::par;
use crate::qalg::Rat;
use crate::quiver::Quiver;
use crate::series::{sign_of, DimVector};

/// Default cap on points and on endomorphism ring sizes.
pub const DEFAULT_CAP: u128 = 1 << 20;

/// Largest total dimension accepted.
pub const MAX_TOTAL_DIM: u64 = 4;

/// A representation: one matrix of shape `a_j x a_i` per arrow `i -> j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rep {
    pub alpha: DimVector,
    pub p: u64,
    /// arrows as `(tail, head)`, parallel arrows repeated
    pub arrows: Vec<(usize, usize)>,
    pub matrices: Vec<Matrix>,
}

/// An isomorphism class with its endomorphism data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepClass {
    pub representative: Rep,
    pub orbit_size: u128,
    pub aut_size: u128,
    /// dimension of `End` over `F_p`
    pub end_dim: usize,
    pub indecomposable: bool,
    pub absolutely_indecomposable: bool,
    pub simple: bool,
    pub absolutely_simple: bool,
}

/// Both sides of the orbit-counting identity for one dimension vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BurnsideReport {
    /// `sum_[M] 1 / #Aut(M)`
    pub class_sum: Rat,
    /// `#points / #GL_a`
    pub point_ratio: Rat,
    /// `q^(-T(a)) / (q^-1)_a` at `q = p`
    pub formula: Rat,
}

impl BurnsideReport {
    pub fn holds(&self) -> bool {
        self.class_sum == self.point_ratio && self.point_ratio == self.formula
    }
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

fn primitive_root(p: u64) -> u64 {
    let n = p - 1;
    let factors: Vec<u64> = (2..=n).filter(|d| n.is_multiple_of(*d) && is_prime(*d)).collect();
    (2..p)
        .find(|&g| factors.iter().all(|f| linalg::pow_mod(g, n / f, p) != 1))
        .unwrap_or(1)
}

pub fn gl_order(n: u32, p: u64) -> u128 {
    let pn = (p as u128).pow(n);
    (0..n).map(|k| pn - (p as u128).pow(k)).product()
}

/// `#GL_a(F_p) = prod_i #GL_{a_i}(F_p)`
pub fn gl_alpha_order(alpha: &DimVector, p: u64) -> u128 {
    alpha.entries().iter().map(|&n| gl_order(n, p)).product()
}

/// Enumerator with a configurable cap.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Oracle {
    pub cap: u128,
}

impl Default for Oracle {
    fn default() -> Self {
        Self { cap: DEFAULT_CAP }
    }
}

struct Layout {
    alpha: Vec<usize>,
    arrows: Vec<(usize, usize)>,
    entries: usize,
}

impl Layout {
    fn new(quiver: &Quiver, alpha: &DimVector) -> Self {
        let r = quiver.vertices();
        let mut arrows = Vec::new();
        for i in 0..r {
            for j in 0..r {
                for _ in 0..quiver.arrow_count(i, j) {
                    arrows.push((i, j));
                }
            }
        }
        let alpha: Vec<usize> = alpha.entries().iter().map(|&a| a as usize).collect();
        let entries = arrows.iter().map(|&(i, j)| alpha[i] * alpha[j]).sum();
        Self {
            alpha,
            arrows,
            entries,
        }
    }

    fn decode(&self, mut x: u64, p: u64) -> Vec<Matrix> {
        self.arrows
            .iter()
            .map(|&(i, j)| {
                let mut m = Matrix::zeros(self.alpha[j], self.alpha[i]);
                for e in &mut m.data {
                    *e = x % p;
                    x /= p;
                }
                m
            })
            .collect()
    }

    fn encode(&self, mats: &[Matrix], p: u64) -> u64 {
        let mut x = 0;
        for m in mats.iter().rev() {
            for &e in m.data.iter().rev() {
                x = x * p + e;
            }
        }
        x
    }
}

impl Oracle {
    pub fn new(cap: u128) -> Self {
        Self { cap }
    }

    fn check_input(&self, quiver: &Quiver, alpha: &DimVector, p: u64) -> Result<()> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p >= 1 << 16 {
            return Err(Error::Invalid(format!("prime {p} is too large for the oracle")));
        }
        if alpha.len() != quiver.vertices() {
            return Err(Error::DimensionMismatch {
                expected: quiver.vertices(),
                got: alpha.len(),
            });
        }
        if alpha.is_zero() || alpha.total() > MAX_TOTAL_DIM {
            return Err(Error::Invalid(format!(
                "oracle needs 0 < |alpha| <= {MAX_TOTAL_DIM}, got {alpha}"
            )));
        }
        Ok(())
    }

    fn within_cap(&self, base: u64, exp: usize) -> Result<u128> {
        let required = (base as u128).checked_pow(exp as u32).unwrap_or(u128::MAX);
        if required > self.cap {
            return Err(Error::CapExceeded {
                required,
                cap: self.cap,
            });
        }
        Ok(required)
    }

    /// Number of points `p^(sum m_ij a_i a_j)`, failing past the cap.
    pub fn point_count(&self, quiver: &Quiver, alpha: &DimVector, p: u64) -> Result<u128> {
        self.check_input(quiver, alpha, p)?;
        self.within_cap(p, Layout::new(quiver, alpha).entries)
    }

    /// All isomorphism classes of `a`-dimensional representations, ordered
    /// by the encoding of their first point, each classified.
    pub fn enumerate_classes(&self, quiver: &Quiver, alpha: &DimVector, p: u64) -> Result<Vec<RepClass>> {
        let total = self.point_count(quiver, alpha, p)? as u64;
        let layout = Layout::new(quiver, alpha);
        let gens = generators(&layout.alpha, p);
        let mut visited = vec![false; total as usize];
        let mut seeds = Vec::new();
        let mut queue = VecDeque::new();
        for seed in 0..total {
            if visited[seed as usize] {
                continue;
            }
            visited[seed as usize] = true;
            queue.push_back(seed);
            let mut size: u128 = 0;
            while let Some(x) = queue.pop_front() {
                size += 1;
                let mats = layout.decode(x, p);
                for (k, g, g_inv) in &gens {
                    let moved: Vec<Matrix> = layout
                        .arrows
                        .iter()
                        .zip(&mats)
                        .map(|(&(i, j), m)| {
                            let m = if j == *k { g.mul(m, p) } else { m.clone() };
                            if i == *k {
                                m.mul(g_inv, p)
                            } else {
                                m
                            }
                        })
                        .collect();
                    let y = layout.encode(&moved, p);
                    if !visited[y as usize] {
                        visited[y as usize] = true;
                        queue.push_back(y);
                    }
                }
            }
            seeds.push((seed, size));
        }
        par::try_map(&seeds, |&(seed, orbit_size)| {
            let rep = Rep {
                alpha: alpha.clone(),
                p,
                arrows: layout.arrows.clone(),
                matrices: layout.decode(seed, p),
            };
            let mut cls = self.classify(rep)?;
            cls.orbit_size = orbit_size;
            Ok(cls)
        })
    }

    /// Computes `End`, automorphism count and the four flags for a
    /// representative. `orbit_size` is set to `#GL_a / #Aut`.
    pub fn classify(&self, rep: Rep) -> Result<RepClass> {
        let p = rep.p;
        let alpha: Vec<usize> = rep.alpha.entries().iter().map(|&a| a as usize).collect();
        let end = endomorphism_basis(&rep);
        let end_dim = end.len();
        let size = self.within_cap(p, end_dim)?;
        let vars = end.first().map_or(0, Vec::len);
        let mut aut: u128 = 0;
        let mut idempotents = 0u32;
        let mut elem = vec![0u64; vars];
        for mut code in 0..size {
            elem.iter_mut().for_each(|e| *e = 0);
            for b in &end {
                let c = (code % p as u128) as u64;
                code /= p as u128;
                if c != 0 {
                    for (e, &x) in elem.iter_mut().zip(b) {
                        *e = (*e + c * x) % p;
                    }
                }
            }
            let blocks = split_blocks(&elem, &alpha);
            if blocks.iter().all(|m| m.is_invertible(p)) {
                aut += 1;
            }
            if blocks.iter().all(|m| &m.mul(m, p) == m) {
                idempotents += 1;
            }
        }
        let indecomposable = idempotents == 2;
        // End is local, so its non-units form the radical J
        let absolutely_indecomposable = indecomposable && size == (p as u128) * (size - aut);
        let simple = is_simple(&rep);
        let gl = gl_alpha_order(&rep.alpha, p);
        Ok(RepClass {
            orbit_size: gl / aut,
            representative: rep,
            aut_size: aut,
            end_dim,
            indecomposable,
            absolutely_indecomposable,
            simple,
            absolutely_simple: simple && end_dim == 1,
        })
    }

    pub fn burnside_check(&self, quiver: &Quiver, alpha: &DimVector, p: u64) -> Result<BurnsideReport> {
        let classes = self.enumerate_classes(quiver, alpha, p)?;
        self.burnside_report(quiver, alpha, p, &classes)
    }

    /// The orbit-counting identity for already enumerated classes.
    pub fn burnside_report(
        &self,
        quiver: &Quiver,
        alpha: &DimVector,
        p: u64,
        classes: &[RepClass],
    ) -> Result<BurnsideReport> {
        let one = Rat::from_integer(1.into());
        let class_sum = classes
            .iter()
            .fold(Rat::from_integer(0.into()), |acc, c| acc + &one / Rat::from_integer(c.aut_size.into()));
        let points = self.point_count(quiver, alpha, p)?;
        let point_ratio = Rat::new(points.into(), gl_alpha_order(alpha, p).into());
        let t = quiver.tits_form(alpha)?;
        let formula = a_coefficient(quiver, alpha)?
            .mul_monomial(&sign_of(t), -t)
            .eval_at_q(&Rat::from_integer(p.into()))?;
        Ok(BurnsideReport {
            class_sum,
            point_ratio,
            formula,
        })
    }

    /// Number of absolutely indecomposable classes.
    pub fn count_kac(&self, quiver: &Quiver, alpha: &DimVector, p: u64) -> Result<u128> {
        let classes = self.enumerate_classes(quiver, alpha, p)?;
        Ok(classes.iter().filter(|c| c.absolutely_indecomposable).count() as u128)
    }

    /// Number of absolutely simple classes.
    pub fn count_simple(&self, quiver: &Quiver, alpha: &DimVector, p: u64) -> Result<u128> {
        let classes = self.enumerate_classes(quiver, alpha, p)?;
        Ok(classes.iter().filter(|c| c.absolutely_simple).count() as u128)
    }
}

/// `(vertex, g, g^-1)` generating `GL_a(F_p)`.
fn generators(alpha: &[usize], p: u64) -> Vec<(usize, Matrix, Matrix)> {
    let mut out = Vec::new();
    let w = primitive_root(p);
    for (k, &n) in alpha.iter().enumerate() {
        if n == 0 {
            continue;
        }
        for a in 0..n {
            for b in 0..n {
                if a != b {
                    let mut g = Matrix::identity(n);
                    g.set(a, b, 1);
                    let mut g_inv = Matrix::identity(n);
                    g_inv.set(a, b, p - 1);
                    out.push((k, g, g_inv));
                }
            }
        }
        if p > 2 {
            let mut g = Matrix::identity(n);
            g.set(0, 0, w);
            let mut g_inv = Matrix::identity(n);
            g_inv.set(0, 0, linalg::inv_mod(w, p));
            out.push((k, g, g_inv));
        }
    }
    out
}

fn split_blocks(x: &[u64], alpha: &[usize]) -> Vec<Matrix> {
    let mut off = 0;
    alpha
        .iter()
        .map(|&n| {
            let m = Matrix {
                rows: n,
                cols: n,
                data: x[off..off + n * n].to_vec(),
            };
            off += n * n;
            m
        })
        .collect()
}

/// Basis of `{(phi_i) : phi_j M_a = M_a phi_i for every arrow a: i -> j}`.
fn endomorphism_basis(rep: &Rep) -> Vec<Vec<u64>> {
    let p = rep.p;
    let alpha: Vec<usize> = rep.alpha.entries().iter().map(|&a| a as usize).collect();
    let mut offsets = Vec::with_capacity(alpha.len());
    let mut vars = 0;
    for &n in &alpha {
        offsets.push(vars);
        vars += n * n;
    }
    let var = |v: usize, r: usize, c: usize| offsets[v] + r * alpha[v] + c;
    let mut rows: Vec<Vec<u64>> = Vec::new();
    for (&(i, j), m) in rep.arrows.iter().zip(&rep.matrices) {
        for r in 0..alpha[j] {
            for c in 0..alpha[i] {
                let mut eq = vec![0u64; vars];
                for t in 0..alpha[j] {
                    let x = &mut eq[var(j, r, t)];
                    *x = (*x + m.get(t, c)) % p;
                }
                for t in 0..alpha[i] {
                    let x = &mut eq[var(i, t, c)];
                    *x = (*x + p - m.get(r, t)) % p;
                }
                rows.push(eq);
            }
        }
    }
    let system = Matrix {
        rows: rows.len(),
        cols: vars,
        data: rows.concat(),
    };
    nullspace(&system, p)
}

/// No graded subspace other than `0` and everything is closed under the arrows.
fn is_simple(rep: &Rep) -> bool {
    let p = rep.p;
    let alpha: Vec<usize> = rep.alpha.entries().iter().map(|&a| a as usize).collect();
    let spaces: Vec<Vec<Subspace>> = alpha.iter().map(|&n| subspaces(n, p)).collect();
    let mut choice = vec![0usize; alpha.len()];
    loop {
        let dims: Vec<usize> = choice.iter().zip(&spaces).map(|(&c, s)| s[c].dim).collect();
        let proper = dims.iter().any(|&d| d > 0) && dims.iter().zip(&alpha).any(|(&d, &n)| d < n);
        if proper {
            let closed = rep.arrows.iter().zip(&rep.matrices).all(|(&(i, j), m)| {
                let target = &spaces[j][choice[j]];
                spaces[i][choice[i]].vectors().all(|u| target.contains(&m.apply(u, p), p))
            });
            if closed {
                return false;
            }
        }
        let mut k = 0;
        loop {
            if k == choice.len() {
                return true;
            }
            choice[k] += 1;
            if choice[k] < spaces[k].len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}

pub fn enumerate_classes(quiver: &Quiver, alpha: &DimVector, p: u64) -> Result<Vec<RepClass>> {
    Oracle::default().enumerate_classes(quiver, alpha, p)
}

pub fn classify(rep: Rep) -> Result<RepClass> {
    Oracle::default().classify(rep)
}

pub fn burnside_check(quiver: &Quiver, alpha: &DimVector, p: u64) -> Result<BurnsideReport> {
    Oracle::default().burnside_check(quiver, alpha, p)
}

pub fn count_kac(quiver: &Quiver, alpha: &DimVector, p: u64) -> Result<u128> {
    Oracle::default().count_kac(quiver, alpha, p)
}

pub fn count_simple(quiver: &Quiver, alpha: &DimVector, p: u64) -> Result<u128> {
    Oracle::default().count_simple(quiver, alpha, p)
}
