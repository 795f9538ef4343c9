use super::{collect_sums, sign_of, DimVector, GradedSeries, Grading};
use crate::error::{Error, Result};
use crate::qalg::{q_minus_one, LaurentPoly, Rat, RatFunc};

/// Which power is attached to the quadratic form `Q(a) = a^T C a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DiagonalBase {
    /// `q^Q(a)`
    Q,
    /// `(-v)^Q(a) = (-q^(1/2))^Q(a)`
    NegV,
}

/// The operator `x^a -> base^(a^T C a) x^a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagonalOperator {
    pub matrix: Vec<Vec<i64>>,
    pub base: DiagonalBase,
}

impl DiagonalOperator {
    pub fn new(matrix: Vec<Vec<i64>>, base: DiagonalBase) -> Result<Self> {
        let n = matrix.len();
        if let Some(row) = matrix.iter().find(|row| row.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: row.len(),
            });
        }
        Ok(Self { matrix, base })
    }

    pub fn dim(&self) -> usize {
        self.matrix.len()
    }

    pub fn quadratic(&self, alpha: &DimVector) -> i64 {
        DimVector::bilinear(&self.matrix, alpha, alpha)
    }

    /// The operator with negated matrix.
    pub fn inverse(&self) -> Self {
        Self {
            matrix: self
                .matrix
                .iter()
                .map(|row| row.iter().map(|c| -c).collect())
                .collect(),
            base: self.base,
        }
    }

    /// `base^Q(a)` as a monomial `(coefficient, v-exponent)`.
    pub fn factor(&self, alpha: &DimVector) -> (Rat, i64) {
        let k = self.quadratic(alpha);
        match self.base {
            DiagonalBase::Q => (Rat::from_integer(1.into()), 2 * k),
            DiagonalBase::NegV => (sign_of(k), k),
        }
    }

    pub fn apply(&self, f: &GradedSeries) -> Result<GradedSeries> {
        if self.dim() != f.nvars() {
            return Err(Error::DimensionMismatch {
                expected: f.nvars(),
                got: self.dim(),
            });
        }
        Ok(f.map_coeffs(|a, c| {
            let (s, k) = self.factor(a);
            c.mul_monomial(&s, k)
        }))
    }
}

/// Multiply or divide every coefficient by `q - 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QScaling {
    Multiply,
    Divide,
}

pub fn scale_by_q_minus_1(f: &GradedSeries, direction: QScaling) -> GradedSeries {
    let qm1 = q_minus_one();
    let factor = match direction {
        QScaling::Multiply => RatFunc::from(qm1),
        QScaling::Divide => RatFunc::new(LaurentPoly::one(), qm1).expect("q - 1 is nonzero"),
    };
    f.scale(&factor)
}

/// Substitutes `x_{ki} = x_i^k` in a series over level variables.
///
/// The level variable `x_{ki}` sits at index `(k - 1) r + i` and must carry
/// weight `k`, so weights are preserved and the bound carries over exactly.
pub fn specialize_levels(f: &GradedSeries, r: usize) -> Result<GradedSeries> {
    let n = f.nvars();
    if r == 0 || !n.is_multiple_of(r) {
        return Err(Error::WeightMismatch(format!(
            "{n} level variables do not split into levels of {r}"
        )));
    }
    let levels = n / r;
    let expected = Grading::levels(r, levels, f.grading().bound())?;
    if f.grading() != &expected {
        return Err(Error::WeightMismatch(format!(
            "expected weights {:?}, found {:?}",
            expected.weights(),
            f.grading().weights()
        )));
    }
    let target = Grading::uniform(r, f.grading().bound())?;
    let pairs = f.iter().map(|(gamma, c)| {
        let mut alpha = vec![0u32; r];
        for (idx, &g) in gamma.entries().iter().enumerate() {
            alpha[idx % r] += (idx / r + 1) as u32 * g;
        }
        (DimVector(alpha), c.clone())
    });
    Ok(collect_sums(target, pairs))
}
