//! Dense matrices over the two-element field, rows packed into `u64` words.

use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct F2Matrix {
    rows: usize,
    cols: usize,
    words: usize,
    data: Vec<u64>,
}

impl F2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let words = cols.div_ceil(64).max(1);
        F2Matrix {
            rows,
            cols,
            words,
            data: vec![0; rows * words],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.data[r * self.words + c / 64] >> (c % 64) & 1 == 1
    }

    pub fn set(&mut self, r: usize, c: usize, v: bool) {
        let w = &mut self.data[r * self.words + c / 64];
        if v {
            *w |= 1 << (c % 64);
        } else {
            *w &= !(1 << (c % 64));
        }
    }

    pub fn flip(&mut self, r: usize, c: usize) {
        self.data[r * self.words + c / 64] ^= 1 << (c % 64);
    }

    pub fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.words..(r + 1) * self.words]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    pub fn push_row(&mut self, row: &[u64]) {
        assert_eq!(row.len(), self.words, "row width mismatch");
        self.data.extend_from_slice(row);
        self.rows += 1;
    }

    /// `self · other`.
    pub fn mul(&self, other: &F2Matrix) -> F2Matrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        let mut out = F2Matrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                if self.get(r, k) {
                    let src = other.row(k);
                    let dst = &mut out.data[r * out.words..(r + 1) * out.words];
                    for (d, s) in dst.iter_mut().zip(src) {
                        *d ^= s;
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &F2Matrix) -> F2Matrix {
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "shape mismatch in sum"
        );
        let mut out = self.clone();
        for (d, s) in out.data.iter_mut().zip(&other.data) {
            *d ^= s;
        }
        out
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    pub fn row_reduce(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&k| self.get(k, c)) else {
                continue;
            };
            self.swap_rows(r, p);
            for k in 0..self.rows {
                if k != r && self.get(k, c) {
                    self.xor_row_into(r, k);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().row_reduce().len()
    }

    /// A basis of `{x : self · x = 0}`, one basis vector per row of the result.
    pub fn nullspace(&self) -> F2Matrix {
        let mut m = self.clone();
        let pivots = m.row_reduce();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut out = F2Matrix::zeros(0, self.cols);
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = F2Matrix::zeros(1, self.cols);
            v.set(0, free, true);
            for (r, &p) in pivots.iter().enumerate() {
                if m.get(r, free) {
                    v.set(0, p, true);
                }
            }
            out.push_row(v.row(0));
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for w in 0..self.words {
                self.data.swap(a * self.words + w, b * self.words + w);
            }
        }
    }

    fn xor_row_into(&mut self, src: usize, dst: usize) {
        for w in 0..self.words {
            let s = self.data[src * self.words + w];
            self.data[dst * self.words + w] ^= s;
        }
    }
}

impl fmt::Debug for F2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "F2Matrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            let line: String = (0..self.cols)
                .map(|c| if self.get(r, c) { '1' } else { '0' })
                .collect();
            writeln!(f, "  {line}")?;
        }
        Ok(())
    }
}

/// Incrementally built echelon basis of a subspace of `F_2^width`.
#[derive(Debug, Clone)]
pub struct EchelonBasis {
    rows: Vec<(usize, Vec<u64>)>,
}

impl EchelonBasis {
    pub fn new() -> Self {
        EchelonBasis { rows: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Adds `v` if it is independent of the current span; returns whether it was added.
    pub fn insert(&mut self, v: &[u64]) -> bool {
        let mut v = v.to_vec();
        for (pivot, row) in &self.rows {
            if v[pivot / 64] >> (pivot % 64) & 1 == 1 {
                for (a, b) in v.iter_mut().zip(row) {
                    *a ^= b;
                }
            }
        }
        match leading_bit(&v) {
            Some(pivot) => {
                self.rows.push((pivot, v));
                true
            }
            None => false,
        }
    }
}

impl Default for EchelonBasis {
    fn default() -> Self {
        Self::new()
    }
}

fn leading_bit(v: &[u64]) -> Option<usize> {
    v.iter()
        .enumerate()
        .find(|(_, &w)| w != 0)
        .map(|(k, w)| k * 64 + w.trailing_zeros() as usize)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn from_rows(rows: &[&str]) -> F2Matrix {
        let cols = rows[0].len();
        let mut m = F2Matrix::zeros(rows.len(), cols);
        for (r, line) in rows.iter().enumerate() {
            for (c, ch) in line.chars().enumerate() {
                m.set(r, c, ch == '1');
            }
        }
        m
    }

    #[test]
    fn rank_and_nullspace() {
        let m = from_rows(&["110", "011", "101"]);
        assert_eq!(m.rank(), 2);
        let ns = m.nullspace();
        assert_eq!(ns.rows(), 1);
        let v = from_rows(&["111"]);
        assert_eq!(ns, v);
        let col = F2Matrix {
            rows: 3,
            cols: 1,
            words: 1,
            data: vec![1, 1, 1],
        };
        assert!(m.mul(&col).is_zero());
    }

    #[test]
    fn wide_matrices() {
        let mut m = F2Matrix::zeros(2, 130);
        m.set(0, 129, true);
        m.set(1, 0, true);
        m.set(1, 129, true);
        assert_eq!(m.rank(), 2);
        assert_eq!(m.nullspace().rows(), 128);
    }

    #[test]
    fn products() {
        let a = from_rows(&["10", "11"]);
        assert_eq!(a.mul(&a), F2Matrix::identity(2));
        assert_eq!(a.add(&a), F2Matrix::zeros(2, 2));
    }

    #[test]
    fn echelon_basis() {
        let mut b = EchelonBasis::new();
        assert!(b.insert(&[0b011]));
        assert!(b.insert(&[0b110]));
        assert!(!b.insert(&[0b101]));
        assert!(!b.insert(&[0]));
        assert_eq!(b.dim(), 2);
    }
}
