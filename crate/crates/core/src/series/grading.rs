use super::DimVector;
use crate::error::{Error, Result};

/// Positive variable weights and a bound on the weighted total degree.
///
/// Only monomials with `weight(alpha) <= bound` are ever stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Grading {
    weights: Vec<u32>,
    bound: u32,
}

impl Grading {
    pub fn new(weights: Vec<u32>, bound: u32) -> Result<Self> {
        if weights.contains(&0) {
            return Err(Error::Invalid("variable weights must be positive".into()));
        }
        if bound == 0 {
            return Err(Error::Invalid("truncation bound must be positive".into()));
        }
        Ok(Self { weights, bound })
    }

    /// `r` variables of weight 1.
    pub fn uniform(r: usize, bound: u32) -> Result<Self> {
        Self::new(vec![1; r], bound)
    }

    /// Level variables `x_{ki}`, `1 <= k <= levels`, `1 <= i <= r`, ordered
    /// `(k, i)` lexicographically, with `weight(x_{ki}) = k`.
    pub fn levels(r: usize, levels: usize, bound: u32) -> Result<Self> {
        let weights = (1..=levels as u32)
            .flat_map(|k| std::iter::repeat_n(k, r))
            .collect();
        Self::new(weights, bound)
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    pub fn nvars(&self) -> usize {
        self.weights.len()
    }

    pub fn weight(&self, alpha: &DimVector) -> u64 {
        alpha.weight(&self.weights)
    }

    pub fn admits(&self, alpha: &DimVector) -> bool {
        self.weight(alpha) <= self.bound as u64
    }

    /// All monomials grouped by weight: `result[w]` lists those of weight `w`
    /// in lexicographic order.
    pub fn monomials_by_weight(&self) -> Vec<Vec<DimVector>> {
        let mut out = vec![Vec::new(); self.bound as usize + 1];
        let mut cur = vec![0u32; self.nvars()];
        self.fill(0, 0, &mut cur, &mut out);
        for level in &mut out {
            level.sort();
        }
        out
    }

    /// All admissible monomials, ordered by weight then lexicographically.
    pub fn monomials(&self) -> Vec<DimVector> {
        self.monomials_by_weight().into_iter().flatten().collect()
    }

    fn fill(&self, i: usize, used: u64, cur: &mut Vec<u32>, out: &mut [Vec<DimVector>]) {
        if i == self.nvars() {
            out[used as usize].push(DimVector(cur.clone()));
            return;
        }
        let w = self.weights[i] as u64;
        let mut a = 0;
        while used + a as u64 * w <= self.bound as u64 {
            cur[i] = a;
            self.fill(i + 1, used + a as u64 * w, cur, out);
            a += 1;
        }
        cur[i] = 0;
    }
}
