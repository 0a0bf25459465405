//! Exact dense linear algebra over ℚ(i), just enough for hom-space
//! computations: Gaussian elimination, solving, nullspace bases.

use crate::scalar::Scalar;

pub type Vector = Vec<Scalar>;

pub fn zero_vec(n: usize) -> Vector {
    vec![Scalar::zero(); n]
}

pub fn unit_vec(n: usize, k: usize) -> Vector {
    let mut v = zero_vec(n);
    v[k] = Scalar::one();
    v
}

pub fn vec_add(a: &Vector, b: &Vector) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &Vector, b: &Vector) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_scale(c: &Scalar, a: &Vector) -> Vector {
    a.iter().map(|x| c * x).collect()
}

pub fn vec_is_zero(a: &Vector) -> bool {
    a.iter().all(|x| x.is_zero())
}

/// Row-major matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Vector>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![zero_vec(cols); rows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for k in 0..n {
            m.data[k][k] = Scalar::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vector>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |v| v.len());
        debug_assert!(rows.iter().all(|v| v.len() == c));
        Matrix { rows: r, cols: c, data: rows }
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        debug_assert_eq!(v.len(), self.cols);
        self.data
            .iter()
            .map(|row| {
                let mut acc = Scalar::zero();
                for (a, x) in row.iter().zip(v) {
                    if !a.is_zero() && !x.is_zero() {
                        acc += &(a * x);
                    }
                }
                acc
            })
            .collect()
    }

    /// Reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&k| !self.data[k][c].is_zero()) else {
                continue;
            };
            self.data.swap(r, p);
            let inv = self.data[r][c].inv().expect("pivot nonzero");
            self.data[r] = vec_scale(&inv, &self.data[r]);
            for k in 0..self.rows {
                if k != r && !self.data[k][c].is_zero() {
                    let f = self.data[k][c].clone();
                    self.data[k] = vec_sub(&self.data[k], &vec_scale(&f, &self.data[r]));
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Basis of the right nullspace { x : M x = 0 }.
    pub fn nullspace(&self) -> Vec<Vector> {
        let mut m = self.clone();
        let pivots = m.rref();
        let mut basis = Vec::new();
        let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
        for free in 0..self.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = zero_vec(self.cols);
            v[free] = Scalar::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -&m.data[row][free];
            }
            basis.push(v);
        }
        basis
    }

    /// One solution of M x = b, if any.
    pub fn solve(&self, b: &Vector) -> Option<Vector> {
        debug_assert_eq!(b.len(), self.rows);
        let mut aug = Matrix::zero(self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.data[r][c] = self.data[r][c].clone();
            }
            aug.data[r][self.cols] = b[r].clone();
        }
        let pivots = aug.rref();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = zero_vec(self.cols);
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = aug.data[row][self.cols].clone();
        }
        Some(x)
    }

    /// Does `target` lie in the column span of `self`?  Returns coordinates.
    pub fn express(&self, target: &Vector) -> Option<Vector> {
        self.solve(target)
    }
}

/// Matrix whose columns are the given vectors.
pub fn columns(cols: &[Vector], dim: usize) -> Matrix {
    let mut m = Matrix::zero(dim, cols.len());
    for (j, v) in cols.iter().enumerate() {
        debug_assert_eq!(v.len(), dim);
        for i in 0..dim {
            m.data[i][j] = v[i].clone();
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    #[test]
    fn solve_and_nullspace() {
        // x + i y = 1, 2x + 2i y = 2 : rank 1, nullspace dim 1.
        let m = Matrix::from_rows(vec![vec![s(1), Scalar::i()], vec![s(2), &s(2) * &Scalar::i()]]);
        assert_eq!(m.rank(), 1);
        let sol = m.solve(&vec![s(1), s(2)]).unwrap();
        assert_eq!(vec_add(&vec![sol[0].clone(), Scalar::zero()], &vec_scale(&Scalar::i(), &vec![Scalar::zero(), sol[1].clone()]))[0], sol[0]);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 1);
        assert!(vec_is_zero(&m.apply(&ns[0])));
        assert!(m.solve(&vec![s(1), s(3)]).is_none());
    }

    #[test]
    fn rref_identity() {
        let mut m = Matrix::identity(3);
        let p = m.rref();
        assert_eq!(p, vec![0, 1, 2]);
        assert_eq!(m, Matrix::identity(3));
    }
}
