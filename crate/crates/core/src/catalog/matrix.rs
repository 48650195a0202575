//! Small square matrices over a prime field, acting on row vectors.

use crate::error::{GroupError, Result};
use crate::group::is_prime;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matrix {
    p: u64,
    k: usize,
    /// Row-major entries in `0..p`.
    entries: Vec<u64>,
}

impl Matrix {
    pub fn new(p: u64, rows: &[Vec<u64>]) -> Result<Matrix> {
        if !is_prime(p) {
            return Err(GroupError::InvalidParameter(format!("{p} is not prime")));
        }
        let k = rows.len();
        if k == 0 || rows.iter().any(|r| r.len() != k) {
            return Err(GroupError::InvalidParameter(
                "matrix must be square and nonempty".into(),
            ));
        }
        if let Some(e) = rows.iter().flatten().find(|&&e| e >= p) {
            return Err(GroupError::InvalidParameter(format!(
                "matrix entry {e} is not in 0..{p}"
            )));
        }
        let m = Matrix {
            p,
            k,
            entries: rows.iter().flatten().copied().collect(),
        };
        if m.determinant() == 0 {
            return Err(GroupError::NotInvertible(p));
        }
        Ok(m)
    }

    pub(crate) fn from_entries(p: u64, k: usize, entries: Vec<u64>) -> Matrix {
        Matrix { p, k, entries }
    }

    pub fn identity(p: u64, k: usize) -> Matrix {
        let mut entries = vec![0; k * k];
        for i in 0..k {
            entries[i * k + i] = 1;
        }
        Matrix { p, k, entries }
    }

    pub fn dim(&self) -> usize {
        self.k
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.entries[r * self.k + c]
    }

    pub fn rows(&self) -> Vec<Vec<u64>> {
        self.entries.chunks(self.k).map(|r| r.to_vec()).collect()
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        let k = self.k;
        let mut entries = vec![0; k * k];
        for i in 0..k {
            for j in 0..k {
                let mut s = 0;
                for l in 0..k {
                    s += self.get(i, l) * other.get(l, j);
                }
                entries[i * k + j] = s % self.p;
            }
        }
        Matrix { p: self.p, k, entries }
    }

    pub fn determinant(&self) -> u64 {
        // Gaussian elimination over F_p
        let p = self.p;
        let k = self.k;
        let mut a = self.entries.clone();
        let mut det = 1u64;
        for col in 0..k {
            let Some(piv) = (col..k).find(|&r| a[r * k + col] != 0) else {
                return 0;
            };
            if piv != col {
                for c in 0..k {
                    a.swap(piv * k + c, col * k + c);
                }
                det = (p - det) % p;
            }
            let pv = a[col * k + col];
            det = det * pv % p;
            let inv = mod_pow(pv, p - 2, p);
            for r in col + 1..k {
                let f = a[r * k + col] * inv % p;
                for c in col..k {
                    a[r * k + c] = (a[r * k + c] + p * p - f * a[col * k + c] % p) % p;
                }
            }
        }
        det
    }

    pub fn is_identity(&self) -> bool {
        *self == Matrix::identity(self.p, self.k)
    }

    pub fn order(&self) -> u64 {
        let mut x = self.clone();
        let mut n = 1;
        while !x.is_identity() {
            x = x.mul(self);
            n += 1;
        }
        n
    }

    pub fn inverse(&self) -> Matrix {
        let mut x = Matrix::identity(self.p, self.k);
        for _ in 1..self.order() {
            x = x.mul(self);
        }
        x
    }

    /// `v·M` for a row vector `v`.
    pub fn apply(&self, v: &[u64]) -> Vec<u64> {
        (0..self.k)
            .map(|j| (0..self.k).map(|i| v[i] * self.get(i, j)).sum::<u64>() % self.p)
            .collect()
    }

    /// All matrices of `GL(k, p)` in lexicographic order of their entries.
    pub fn general_linear(p: u64, k: usize) -> Vec<Matrix> {
        let total = (p as usize).pow((k * k) as u32);
        (0..total)
            .map(|code| Matrix::from_entries(p, k, digits(code as u64, p, k * k)))
            .filter(|m| m.determinant() != 0)
            .collect()
    }
}

pub fn mod_pow(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

/// Base-`p` digits of `code`, most significant first, `len` of them.
pub fn digits(mut code: u64, p: u64, len: usize) -> Vec<u64> {
    let mut out = vec![0; len];
    for slot in out.iter_mut().rev() {
        *slot = code % p;
        code /= p;
    }
    out
}

/// Vector `v ∈ F_p^k` as a point index `Σ vᵢ pⁱ`.
pub fn vector_index(v: &[u64], p: u64) -> usize {
    v.iter().rev().fold(0u64, |acc, &x| acc * p + x) as usize
}

pub fn vector_of_index(i: usize, p: u64, k: usize) -> Vec<u64> {
    let mut v = vec![0; k];
    let mut x = i as u64;
    for slot in v.iter_mut() {
        *slot = x % p;
        x /= p;
    }
    v
}
