use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Small dense integer matrix, used for the unimodular transforms that
/// accompany a Smith normal form and for abelianization coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DenseIntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>, // row-major
}

impl DenseIntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        DenseIntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    pub fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let idx = r * self.cols + j;
            let v = std::mem::take(&mut self.data[idx]);
            self.data[idx] = -v;
        }
    }

    pub fn negate_col(&mut self, c: usize) {
        for i in 0..self.rows {
            let idx = i * self.cols + c;
            let v = std::mem::take(&mut self.data[idx]);
            self.data[idx] = -v;
        }
    }

    /// row[target] += k * row[source]
    pub fn add_row_multiple(&mut self, target: usize, source: usize, k: &BigInt) {
        assert_ne!(target, source);
        for j in 0..self.cols {
            let add = self.get(source, j) * k;
            if !add.is_zero() {
                let idx = target * self.cols + j;
                let v = std::mem::take(&mut self.data[idx]);
                self.data[idx] = v + add;
            }
        }
    }

    /// col[target] += k * col[source]
    pub fn add_col_multiple(&mut self, target: usize, source: usize, k: &BigInt) {
        assert_ne!(target, source);
        for i in 0..self.rows {
            let add = self.get(i, source) * k;
            if !add.is_zero() {
                let idx = i * self.cols + target;
                let v = std::mem::take(&mut self.data[idx]);
                self.data[idx] = v + add;
            }
        }
    }

    pub fn mul(&self, other: &DenseIntMatrix) -> DenseIntMatrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in dense product");
        let mut out = DenseIntMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let v = self.get(i, k);
                if v.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let w = other.get(k, j);
                    if w.is_zero() {
                        continue;
                    }
                    let idx = i * other.cols + j;
                    let cur = std::mem::take(&mut out.data[idx]);
                    out.data[idx] = cur + v * w;
                }
            }
        }
        out
    }

    /// Matrix-vector product `self * v`.
    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = BigInt::zero();
                for j in 0..self.cols {
                    let a = self.get(i, j);
                    if !a.is_zero() {
                        acc += a * &v[j];
                    }
                }
                acc
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn row_and_col_ops() {
        let mut m = DenseIntMatrix::identity(2);
        m.add_row_multiple(1, 0, &BigInt::from(3));
        assert_eq!(*m.get(1, 0), BigInt::from(3));
        m.add_col_multiple(0, 1, &BigInt::from(-3));
        // E21(3) then C1 += -3*C2 brings us back off-diagonal zero at (1,0)? No:
        // [[1,0],[3,1]] with col op -> [[1,0],[3-3,1]] = identity.
        assert_eq!(m, DenseIntMatrix::identity(2));
    }

    #[test]
    fn product_and_vector() {
        let mut a = DenseIntMatrix::zero(2, 2);
        a.set(0, 0, BigInt::from(2));
        a.set(0, 1, BigInt::from(1));
        a.set(1, 1, BigInt::from(-1));
        let v = vec![BigInt::from(3), BigInt::from(4)];
        assert_eq!(a.mul_vec(&v), vec![BigInt::from(10), BigInt::from(-4)]);
        let p = a.mul(&DenseIntMatrix::identity(2));
        assert_eq!(p, a);
    }
}
