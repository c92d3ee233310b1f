//! Minimal dense linear algebra for the small (n ≤ 4, occasionally larger)
//! symmetric matrices this crate deals in.

/// Dense square matrix in row-major order.
#[derive(Debug, Clone, PartialEq)]
pub struct SquareMat {
    n: usize,
    a: Vec<f64>,
}

impl SquareMat {
    pub fn zeros(n: usize) -> Self {
        SquareMat {
            n,
            a: vec![0.0; n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m[(i, i)] = 1.0;
        }
        m
    }

    pub fn from_diagonal(d: &[f64]) -> Self {
        let mut m = Self::zeros(d.len());
        for (i, &v) in d.iter().enumerate() {
            m[(i, i)] = v;
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// LU decomposition with partial pivoting; returns (lu, perm, sign) or
    /// None if a pivot degenerates.
    fn lu(&self) -> Option<(Vec<f64>, Vec<usize>, f64)> {
        let n = self.n;
        let mut lu = self.a.clone();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut sign = 1.0;
        for col in 0..n {
            let mut pivot = col;
            let mut best = lu[col * n + col].abs();
            for row in col + 1..n {
                let v = lu[row * n + col].abs();
                if v > best {
                    best = v;
                    pivot = row;
                }
            }
            if best == 0.0 {
                return None;
            }
            if pivot != col {
                for k in 0..n {
                    lu.swap(col * n + k, pivot * n + k);
                }
                perm.swap(col, pivot);
                sign = -sign;
            }
            let diag = lu[col * n + col];
            for row in col + 1..n {
                let factor = lu[row * n + col] / diag;
                lu[row * n + col] = factor;
                for k in col + 1..n {
                    lu[row * n + k] -= factor * lu[col * n + k];
                }
            }
        }
        Some((lu, perm, sign))
    }

    pub fn determinant(&self) -> f64 {
        match self.lu() {
            Some((lu, _, sign)) => {
                let mut det = sign;
                for i in 0..self.n {
                    det *= lu[i * self.n + i];
                }
                det
            }
            None => 0.0,
        }
    }

    pub fn inverse(&self) -> Option<SquareMat> {
        let n = self.n;
        let (lu, perm, _) = self.lu()?;
        let mut inv = SquareMat::zeros(n);
        let mut col = vec![0.0; n];
        for j in 0..n {
            // Solve A x = e_j using the permuted LU factors.
            for i in 0..n {
                col[i] = if perm[i] == j { 1.0 } else { 0.0 };
            }
            for i in 1..n {
                for k in 0..i {
                    col[i] -= lu[i * n + k] * col[k];
                }
            }
            for i in (0..n).rev() {
                for k in i + 1..n {
                    col[i] -= lu[i * n + k] * col[k];
                }
                col[i] /= lu[i * n + i];
            }
            for i in 0..n {
                inv[(i, j)] = col[i];
            }
        }
        Some(inv)
    }

    pub fn matvec(&self, v: &[f64]) -> Vec<f64> {
        let n = self.n;
        let mut out = vec![0.0; n];
        for i in 0..n {
            let mut s = 0.0;
            for j in 0..n {
                s += self.a[i * n + j] * v[j];
            }
            out[i] = s;
        }
        out
    }

    /// v^T M w.
    pub fn bilinear(&self, v: &[f64], w: &[f64]) -> f64 {
        let n = self.n;
        let mut s = 0.0;
        for i in 0..n {
            let mut row = 0.0;
            for j in 0..n {
                row += self.a[i * n + j] * w[j];
            }
            s += v[i] * row;
        }
        s
    }

    pub fn max_abs(&self) -> f64 {
        self.a.iter().fold(0.0, |m, v| m.max(v.abs()))
    }
}

impl std::ops::Index<(usize, usize)> for SquareMat {
    type Output = f64;
    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.a[i * self.n + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for SquareMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        &mut self.a[i * self.n + j]
    }
}

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn scale(a: &[f64], c: f64) -> Vec<f64> {
    a.iter().map(|x| c * x).collect()
}

pub fn add(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// a + c·b
pub fn axpy(a: &[f64], c: f64, b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x + c * y).collect()
}

pub fn norm_inf(a: &[f64]) -> f64 {
    a.iter().fold(0.0, |m, v| m.max(v.abs()))
}

pub fn norm_2(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_of_diagonal() {
        let m = SquareMat::from_diagonal(&[2.0, -4.0, 0.5]);
        let inv = m.inverse().unwrap();
        assert!((inv[(0, 0)] - 0.5).abs() < 1e-15);
        assert!((inv[(1, 1)] + 0.25).abs() < 1e-15);
        assert!((inv[(2, 2)] - 2.0).abs() < 1e-15);
        assert!((m.determinant() + 4.0).abs() < 1e-14);
    }

    #[test]
    fn inverse_roundtrip_general() {
        let mut m = SquareMat::zeros(4);
        // Symmetric, well-conditioned, needs pivoting off the diagonal order.
        let rows = [
            [0.1, 1.0, 0.2, 0.0],
            [1.0, 0.3, 0.0, 0.4],
            [0.2, 0.0, 2.0, 0.1],
            [0.0, 0.4, 0.1, -1.5],
        ];
        for i in 0..4 {
            for j in 0..4 {
                m[(i, j)] = rows[i][j];
            }
        }
        let inv = m.inverse().unwrap();
        for i in 0..4 {
            for j in 0..4 {
                let mut s = 0.0;
                for k in 0..4 {
                    s += m[(i, k)] * inv[(k, j)];
                }
                let expect = if i == j { 1.0 } else { 0.0 };
                assert!((s - expect).abs() < 1e-12, "({i},{j}) -> {s}");
            }
        }
    }

    #[test]
    fn singular_matrix_has_no_inverse() {
        let m = SquareMat::from_diagonal(&[1.0, 0.0]);
        assert!(m.inverse().is_none());
        assert_eq!(m.determinant(), 0.0);
    }
}
