//! Quivers as arrow-multiplicity matrices, their bilinear forms, and
//! slope stability.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qalg::Rat;
use crate::series::DimVector;

/// A quiver with `r` vertices; `arrows[i][j]` counts arrows `i -> j`
/// (`arrows[i][i]` counts loops at `i`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quiver {
    arrows: Vec<Vec<u32>>,
}

impl Quiver {
    pub fn new(arrows: Vec<Vec<u32>>) -> Result<Self> {
        let r = arrows.len();
        if r == 0 {
            return Err(Error::Invalid("a quiver needs at least one vertex".into()));
        }
        if let Some(row) = arrows.iter().find(|row| row.len() != r) {
            return Err(Error::DimensionMismatch {
                expected: r,
                got: row.len(),
            });
        }
        Ok(Self { arrows })
    }

    /// One vertex with `g` loops.
    pub fn loops(g: u32) -> Self {
        Self { arrows: vec![vec![g]] }
    }

    /// Two vertices with `loops` loops each and `k` arrows in each direction.
    pub fn two_vertex(loops: u32, k: u32) -> Self {
        Self {
            arrows: vec![vec![loops, k], vec![k, loops]],
        }
    }

    pub fn vertices(&self) -> usize {
        self.arrows.len()
    }

    pub fn arrows(&self) -> &[Vec<u32>] {
        &self.arrows
    }

    pub fn arrow_count(&self, i: usize, j: usize) -> u32 {
        self.arrows[i][j]
    }

    /// Matrix of the Euler form: `delta_ij - m_ij`.
    pub fn euler_matrix(&self) -> Vec<Vec<i64>> {
        let r = self.vertices();
        (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| (i == j) as i64 - self.arrows[i][j] as i64)
                    .collect()
            })
            .collect()
    }

    /// Matrix of `<a,b> = chi(a,b) - chi(b,a)`.
    pub fn antisym_matrix(&self) -> Vec<Vec<i64>> {
        let r = self.vertices();
        (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| self.arrows[j][i] as i64 - self.arrows[i][j] as i64)
                    .collect()
            })
            .collect()
    }

    fn check(&self, alpha: &DimVector) -> Result<()> {
        if alpha.len() != self.vertices() {
            return Err(Error::DimensionMismatch {
                expected: self.vertices(),
                got: alpha.len(),
            });
        }
        Ok(())
    }

    /// Euler-Ringel form `chi(a,b) = sum_i a_i b_i - sum_{i,j} m_ij a_i b_j`.
    pub fn euler_form(&self, alpha: &DimVector, beta: &DimVector) -> Result<i64> {
        self.check(alpha)?;
        self.check(beta)?;
        Ok(DimVector::bilinear(&self.euler_matrix(), alpha, beta))
    }

    /// Tits form `T(a) = chi(a,a)`.
    pub fn tits_form(&self, alpha: &DimVector) -> Result<i64> {
        self.euler_form(alpha, alpha)
    }

    pub fn antisym_form(&self, alpha: &DimVector, beta: &DimVector) -> Result<i64> {
        self.check(alpha)?;
        self.check(beta)?;
        Ok(DimVector::bilinear(&self.antisym_matrix(), alpha, beta))
    }

    pub fn is_symmetric(&self) -> bool {
        let r = self.vertices();
        (0..r).all(|i| (0..r).all(|j| self.arrows[i][j] == self.arrows[j][i]))
    }

    /// At least one loop at every vertex.
    pub fn has_enough_loops(&self) -> bool {
        (0..self.vertices()).all(|i| self.arrows[i][i] >= 1)
    }

    /// `sum m_ij a_i a_j`: the dimension of the representation space.
    pub fn rep_space_dim(&self, alpha: &DimVector) -> u64 {
        let mut d = 0;
        for (i, row) in self.arrows.iter().enumerate() {
            for (j, &m) in row.iter().enumerate() {
                d += m as u64 * alpha.0[i] as u64 * alpha.0[j] as u64;
            }
        }
        d
    }
}

impl fmt::Display for Quiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.arrows)
    }
}

/// Exact slope `theta . a / sum a_i`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Slope(pub Rat);

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Rational stability parameter.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Stability(pub Vec<Rat>);

impl Stability {
    pub fn zero(r: usize) -> Self {
        Self(vec![Rat::zero(); r])
    }

    pub fn from_ints(theta: &[i64]) -> Self {
        Self(theta.iter().map(|&t| Rat::from_integer(BigInt::from(t))).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.0.iter().all(|t| t.is_zero())
    }
}

/// Parses `"p/q"` or `"n"`.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let bad = || Error::Invalid(format!("not a rational number: {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rat::new(n, d))
        }
        None => Ok(Rat::from_integer(BigInt::from_str(s).map_err(|_| bad())?)),
    }
}

impl FromStr for Stability {
    type Err = Error;

    /// Comma-separated rationals, e.g. `"1,0"` or `"1/2,-1"`.
    fn from_str(s: &str) -> Result<Self> {
        s.split(',').map(parse_rat).collect::<Result<Vec<_>>>().map(Stability)
    }
}

/// `mu_theta(a) = theta . a / sum a_i`.
pub fn slope(theta: &Stability, alpha: &DimVector) -> Result<Slope> {
    if theta.len() != alpha.len() {
        return Err(Error::DimensionMismatch {
            expected: alpha.len(),
            got: theta.len(),
        });
    }
    let total = alpha.total();
    if total == 0 {
        return Err(Error::Invalid("slope of the zero dimension vector".into()));
    }
    let dot = theta
        .0
        .iter()
        .zip(alpha.entries())
        .fold(Rat::zero(), |acc, (t, &a)| acc + t * Rat::from_integer(BigInt::from(a)));
    Ok(Slope(dot / Rat::from_integer(BigInt::from(total))))
}

/// On-disk quiver description.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct QuiverFile {
    pub vertices: usize,
    pub arrow_matrix: Vec<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub theta: Option<Vec<ThetaEntry>>,
}

/// A stability entry: a string `"p/q"` or a plain integer.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(untagged)]
pub enum ThetaEntry {
    Text(String),
    Int(i64),
}

impl QuiverFile {
    pub fn parse(json: &str) -> Result<(Quiver, Option<Stability>)> {
        let file: QuiverFile =
            serde_json::from_str(json).map_err(|e| Error::Invalid(format!("quiver file: {e}")))?;
        file.into_parts()
    }

    pub fn into_parts(self) -> Result<(Quiver, Option<Stability>)> {
        if self.arrow_matrix.len() != self.vertices {
            return Err(Error::Invalid(format!(
                "arrow_matrix has {} rows but vertices = {}",
                self.arrow_matrix.len(),
                self.vertices
            )));
        }
        let quiver = Quiver::new(self.arrow_matrix)?;
        let theta = match self.theta {
            None => None,
            Some(entries) => {
                let vals = entries
                    .iter()
                    .map(|e| match e {
                        ThetaEntry::Text(s) => parse_rat(s),
                        ThetaEntry::Int(n) => Ok(Rat::from_integer(BigInt::from(*n))),
                    })
                    .collect::<Result<Vec<_>>>()?;
                if vals.len() != quiver.vertices() {
                    return Err(Error::Invalid(format!(
                        "theta has {} entries but the quiver has {} vertices",
                        vals.len(),
                        quiver.vertices()
                    )));
                }
                Some(Stability(vals))
            }
        };
        Ok((quiver, theta))
    }
}
