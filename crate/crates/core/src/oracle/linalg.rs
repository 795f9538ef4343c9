//! Dense matrices over a prime field `F_p`.

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    /// row-major entries in `0..p`
    pub data: Vec<u64>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, x: u64) {
        self.data[r * self.cols + c] = x;
    }

    pub fn mul(&self, other: &Matrix, p: u64) -> Matrix {
        debug_assert_eq!(self.cols, other.rows);
        let mut out = Matrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for t in 0..self.cols {
                let a = self.get(r, t);
                if a == 0 {
                    continue;
                }
                for c in 0..other.cols {
                    let i = r * other.cols + c;
                    out.data[i] = (out.data[i] + a * other.get(t, c)) % p;
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[u64], p: u64) -> Vec<u64> {
        (0..self.rows)
            .map(|r| (0..self.cols).fold(0, |acc, c| (acc + self.get(r, c) * v[c]) % p))
            .collect()
    }

    pub fn rank(&self, p: u64) -> usize {
        let mut m = self.clone();
        rref(&mut m, p).len()
    }

    pub fn is_invertible(&self, p: u64) -> bool {
        self.rows == self.cols && self.rank(p) == self.rows
    }
}

pub fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

pub fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut out = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            out = out * a % p;
        }
        a = a * a % p;
        e >>= 1;
    }
    out
}

/// Reduces `m` to reduced row echelon form in place and returns the pivot
/// columns; rows past the rank are zero.
pub fn rref(m: &mut Matrix, p: u64) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..m.cols {
        if row == m.rows {
            break;
        }
        let Some(src) = (row..m.rows).find(|&r| m.get(r, col) != 0) else {
            continue;
        };
        for c in 0..m.cols {
            m.data.swap(src * m.cols + c, row * m.cols + c);
        }
        let inv = inv_mod(m.get(row, col), p);
        for c in 0..m.cols {
            let x = m.get(row, c) * inv % p;
            m.set(row, c, x);
        }
        for r in 0..m.rows {
            let f = m.get(r, col);
            if r == row || f == 0 {
                continue;
            }
            for c in 0..m.cols {
                let x = (m.get(r, c) + (p - f) * m.get(row, c)) % p;
                m.set(r, c, x);
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

/// A basis of `{x : m x = 0}`.
pub fn nullspace(m: &Matrix, p: u64) -> Vec<Vec<u64>> {
    let mut r = m.clone();
    let pivots = rref(&mut r, p);
    let free: Vec<usize> = (0..m.cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![0; m.cols];
            x[f] = 1;
            for (row, &pc) in pivots.iter().enumerate() {
                x[pc] = (p - r.get(row, f)) % p;
            }
            x
        })
        .collect()
}

/// A subspace of `F_p^n` stored as an RREF basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    pub dim: usize,
    pub basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn ambient(&self) -> usize {
        self.basis.cols
    }

    pub fn contains(&self, v: &[u64], p: u64) -> bool {
        let mut w = v.to_vec();
        for (row, &pc) in self.pivots.iter().enumerate() {
            let f = w[pc];
            if f != 0 {
                for (c, x) in w.iter_mut().enumerate() {
                    *x = (*x + (p - f) * self.basis.get(row, c)) % p;
                }
            }
        }
        w.iter().all(|&x| x == 0)
    }

    pub fn vectors(&self) -> impl Iterator<Item = &[u64]> {
        self.basis.data.chunks(self.basis.cols.max(1)).take(self.dim)
    }
}

/// Every subspace of `F_p^n`, enumerated through RREF bases.
pub fn subspaces(n: usize, p: u64) -> Vec<Subspace> {
    let mut out = Vec::new();
    for k in 0..=n {
        let mut pivots = Vec::with_capacity(k);
        choose(n, k, 0, &mut pivots, &mut |pivots| {
            // free entries: row t, column c > pivots[t] that is not a pivot
            let slots: Vec<(usize, usize)> = (0..k)
                .flat_map(|t| {
                    (pivots[t] + 1..n)
                        .filter(|c| !pivots.contains(c))
                        .map(move |c| (t, c))
                })
                .collect();
            let total = (p as usize).pow(slots.len() as u32);
            for mut code in 0..total {
                let mut basis = Matrix::zeros(k, n);
                for (t, &pc) in pivots.iter().enumerate() {
                    basis.set(t, pc, 1);
                }
                for &(t, c) in &slots {
                    basis.set(t, c, (code % p as usize) as u64);
                    code /= p as usize;
                }
                out.push(Subspace {
                    dim: k,
                    basis,
                    pivots: pivots.to_vec(),
                });
            }
        });
    }
    out
}

fn choose(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    if cur.len() == k {
        f(cur);
        return;
    }
    for c in start..n {
        cur.push(c);
        choose(n, k, c + 1, cur, f);
        cur.pop();
    }
}
