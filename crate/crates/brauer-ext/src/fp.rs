//! Dense exact linear algebra over a prime field F_p.
//!
//! Everything downstream (radicals, syzygy kernels, Hom spaces) reduces to
//! rank / nullspace / solve over F_p, so this module keeps the interface
//! small and fully deterministic: pivots are always chosen as the first
//! usable row in column order, which fixes every basis the oracle emits.

use std::fmt;

/// Row-major dense matrix over F_p. Entries are kept reduced mod p.
#[derive(Clone, PartialEq, Eq)]
pub struct Mat {
    p: u32,
    rows: usize,
    cols: usize,
    a: Vec<u32>,
}

fn inv_mod(x: u32, p: u32) -> u32 {
    // p is prime and x != 0 mod p, so x^(p-2) is the inverse.
    debug_assert!(x % p != 0);
    let mut base = u64::from(x % p);
    let mut exp = p - 2;
    let m = u64::from(p);
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc as u32
}

impl Mat {
    pub fn zeros(p: u32, rows: usize, cols: usize) -> Self {
        assert!(p >= 2, "field characteristic must be at least 2");
        Mat { p, rows, cols, a: vec![0; rows * cols] }
    }

    pub fn identity(p: u32, n: usize) -> Self {
        let mut m = Mat::zeros(p, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(p: u32, rows: &[Vec<u32>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut m = Mat::zeros(p, r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    /// Single column from entries.
    pub fn col_vec(p: u32, entries: &[u32]) -> Self {
        let mut m = Mat::zeros(p, entries.len(), 1);
        for (i, &v) in entries.iter().enumerate() {
            m.set(i, 0, v);
        }
        m
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        assert!(i < self.rows && j < self.cols, "index out of range");
        self.a[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        assert!(i < self.rows && j < self.cols, "index out of range");
        self.a[i * self.cols + j] = v % self.p;
    }

    pub fn is_zero(&self) -> bool {
        self.a.iter().all(|&x| x == 0)
    }

    pub fn mul(&self, rhs: &Mat) -> Mat {
        assert_eq!(self.p, rhs.p);
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in mul");
        let p = u64::from(self.p);
        let mut out = Mat::zeros(self.p, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let s = u64::from(self.a[i * self.cols + k]);
                if s == 0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    let t = u64::from(rhs.a[k * rhs.cols + j]);
                    if t == 0 {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.a[idx] = ((u64::from(out.a[idx]) + s * t) % p) as u32;
                }
            }
        }
        out
    }

    /// self + c * other, entrywise.
    pub fn add_scaled(&self, c: u32, other: &Mat) -> Mat {
        assert_eq!(self.p, other.p);
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let p = u64::from(self.p);
        let c = u64::from(c % self.p);
        let mut out = self.clone();
        for (x, &y) in out.a.iter_mut().zip(other.a.iter()) {
            *x = ((u64::from(*x) + c * u64::from(y)) % p) as u32;
        }
        out
    }

    pub fn transpose(&self) -> Mat {
        let mut out = Mat::zeros(self.p, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.a[j * out.cols + i] = self.a[i * self.cols + j];
            }
        }
        out
    }

    /// Horizontal concatenation. All parts must share p and row count.
    pub fn hstack(parts: &[&Mat]) -> Mat {
        assert!(!parts.is_empty());
        let p = parts[0].p;
        let rows = parts[0].rows;
        let cols: usize = parts.iter().map(|m| m.cols).sum();
        let mut out = Mat::zeros(p, rows, cols);
        let mut off = 0;
        for part in parts {
            assert_eq!(part.p, p);
            assert_eq!(part.rows, rows, "row mismatch in hstack");
            for i in 0..rows {
                for j in 0..part.cols {
                    out.a[i * cols + off + j] = part.a[i * part.cols + j];
                }
            }
            off += part.cols;
        }
        out
    }

    /// Columns `lo..hi` as a new matrix.
    pub fn col_slice(&self, lo: usize, hi: usize) -> Mat {
        assert!(lo <= hi && hi <= self.cols);
        let mut out = Mat::zeros(self.p, self.rows, hi - lo);
        for i in 0..self.rows {
            for j in lo..hi {
                out.a[i * out.cols + (j - lo)] = self.a[i * self.cols + j];
            }
        }
        out
    }

    /// In-place reduced row echelon form. Returns the pivot columns in order.
    /// Pivot choice is the first row with a nonzero entry, scanning columns
    /// left to right, so the result is deterministic.
    pub fn rref(&mut self) -> Vec<usize> {
        let p64 = u64::from(self.p);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            let Some(piv) = (r..self.rows).find(|&i| self.a[i * self.cols + c] != 0) else {
                continue;
            };
            self.a.swap_range(piv, r, self.cols);
            // normalize pivot row
            let inv = inv_mod(self.a[r * self.cols + c], self.p);
            for j in c..self.cols {
                let idx = r * self.cols + j;
                self.a[idx] = (u64::from(self.a[idx]) * u64::from(inv) % p64) as u32;
            }
            // eliminate the column everywhere else
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let f = self.a[i * self.cols + c];
                if f == 0 {
                    continue;
                }
                let neg = self.p - f;
                for j in c..self.cols {
                    let v = u64::from(self.a[r * self.cols + j]);
                    let idx = i * self.cols + j;
                    self.a[idx] = ((u64::from(self.a[idx]) + u64::from(neg) * v) % p64) as u32;
                }
            }
            pivots.push(c);
            r += 1;
            if r == self.rows {
                break;
            }
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Basis of the right nullspace, returned as the columns of a matrix.
    /// One basis vector per free column, in ascending column order; the free
    /// coordinate of each vector is 1 and pivot coordinates are back-filled.
    pub fn nullspace(&self) -> Mat {
        let mut m = self.clone();
        let pivots = m.rref();
        let is_pivot = {
            let mut v = vec![false; self.cols];
            for &c in &pivots {
                v[c] = true;
            }
            v
        };
        let free: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        let mut out = Mat::zeros(self.p, self.cols, free.len());
        for (k, &f) in free.iter().enumerate() {
            out.set(f, k, 1);
            for (r, &c) in pivots.iter().enumerate() {
                let v = m.get(r, f);
                if v != 0 {
                    out.set(c, k, self.p - v);
                }
            }
        }
        out
    }

    /// Solve self * X = rhs. Returns None if inconsistent. Free variables are
    /// set to zero, so the solution is deterministic.
    pub fn solve(&self, rhs: &Mat) -> Option<Mat> {
        assert_eq!(self.p, rhs.p);
        assert_eq!(self.rows, rhs.rows, "row mismatch in solve");
        let mut aug = Mat::hstack(&[self, rhs]);
        let pivots = aug.rref();
        let n = self.cols;
        // pivots landing in the rhs block signal inconsistency
        if pivots.iter().any(|&c| c >= n) {
            return None;
        }
        let mut x = Mat::zeros(self.p, n, rhs.cols);
        for (r, &c) in pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                x.set(c, j, aug.get(r, n + j));
            }
        }
        Some(x)
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }
}

trait SwapRange {
    fn swap_range(&mut self, r1: usize, r2: usize, width: usize);
}

impl SwapRange for Vec<u32> {
    fn swap_range(&mut self, r1: usize, r2: usize, width: usize) {
        if r1 == r2 {
            return;
        }
        for j in 0..width {
            self.swap(r1 * width + j, r2 * width + j);
        }
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} over F_{}", self.rows, self.cols, self.p)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_and_rank() {
        let mut m = Mat::from_rows(5, &[vec![1, 2, 0], vec![0, 1, 4], vec![2, 0, 1]]);
        let pivots = m.rref();
        assert_eq!(pivots, vec![0, 1, 2]);
        assert_eq!(m, Mat::identity(5, 3));

        // singular over F_5: rows 0 and 1 are proportional after reduction
        let mut m = Mat::from_rows(5, &[vec![2, 4, 1], vec![1, 2, 3], vec![3, 1, 0]]);
        assert_eq!(m.rref(), vec![0, 2]);

        let m = Mat::from_rows(2, &[vec![1, 1, 0], vec![1, 1, 0], vec![0, 0, 1]]);
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn nullspace_is_killed_and_has_right_dim() {
        let m = Mat::from_rows(3, &[vec![1, 2, 0, 1], vec![0, 0, 1, 2]]);
        let ns = m.nullspace();
        assert_eq!(ns.cols(), 2);
        assert!(m.mul(&ns).is_zero());
        // basis vectors have a unit free coordinate each: columns 1 and 3
        assert_eq!(ns.get(1, 0), 1);
        assert_eq!(ns.get(3, 1), 1);
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let a = Mat::from_rows(7, &[vec![1, 2], vec![3, 4]]);
        let b = Mat::col_vec(7, &[5, 6]);
        let x = a.solve(&b).unwrap();
        assert_eq!(a.mul(&x), b);

        let sing = Mat::from_rows(7, &[vec![1, 1], vec![1, 1]]);
        let bad = Mat::col_vec(7, &[0, 1]);
        assert!(sing.solve(&bad).is_none());
    }

    #[test]
    fn solve_underdetermined_picks_deterministic_solution() {
        let a = Mat::from_rows(5, &[vec![1, 1, 1]]);
        let b = Mat::col_vec(5, &[3]);
        let x = a.solve(&b).unwrap();
        // free variables are zeroed
        assert_eq!((x.get(0, 0), x.get(1, 0), x.get(2, 0)), (3, 0, 0));
    }

    #[test]
    fn inverse_exponent_arithmetic() {
        for p in [2u32, 3, 5, 7, 13] {
            for x in 1..p {
                assert_eq!(u64::from(x) * u64::from(inv_mod(x, p)) % u64::from(p), 1);
            }
        }
    }
}
