//! Dense exact linear algebra over the scalar field, just enough for rank
//! computations, nullspaces and span comparisons.

use crate::scalar::Scalar;

#[derive(Clone, Debug)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c);
            data.extend(row);
        }
        Matrix { rows: r, cols: c, data }
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    /// Reduce in place to row echelon form; returns the pivot columns.
    pub fn row_reduce(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            self.swap_rows(row, p);
            let inv = self.get(row, col).inv();
            for c in col..self.cols {
                let v = self.get(row, c) * &inv;
                self.set(row, c, v);
            }
            for r in 0..self.rows {
                if r != row && !self.get(r, col).is_zero() {
                    let f = self.get(r, col).clone();
                    for c in col..self.cols {
                        let v = self.get(r, c) - &(self.get(row, c) * &f);
                        self.set(r, c, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data
                .swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.row_reduce().len()
    }

    /// Basis of the right nullspace.
    pub fn nullspace(&self) -> Vec<Vec<Scalar>> {
        let mut m = self.clone();
        let pivots = m.row_reduce();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::new();
        for &f in &free {
            let mut v = vec![Scalar::zero(); self.cols];
            v[f] = Scalar::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -m.get(r, f);
            }
            basis.push(v);
        }
        basis
    }
}

/// rank [A; B] == rank A == rank B, i.e. the two row spans coincide.
pub fn same_row_span(a: &Matrix, b: &Matrix) -> bool {
    assert_eq!(a.cols, b.cols);
    let ra = a.rank();
    let rb = b.rank();
    if ra != rb {
        return false;
    }
    let mut stacked = Matrix::zero(a.rows + b.rows, a.cols);
    for r in 0..a.rows {
        for c in 0..a.cols {
            stacked.set(r, c, a.get(r, c).clone());
        }
    }
    for r in 0..b.rows {
        for c in 0..b.cols {
            stacked.set(a.rows + r, c, b.get(r, c).clone());
        }
    }
    stacked.rank() == ra
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    #[test]
    fn rank_and_nullspace() {
        let m = Matrix::from_rows(vec![
            vec![s(1), s(2), s(3)],
            vec![s(2), s(4), s(6)],
            vec![s(0), s(1), s(1)],
        ]);
        assert_eq!(m.rank(), 2);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 1);
        for row in 0..m.rows {
            let mut acc = Scalar::zero();
            for c in 0..m.cols {
                acc += &(m.get(row, c) * &ns[0][c]);
            }
            assert!(acc.is_zero());
        }
    }

    #[test]
    fn span_comparison() {
        let a = Matrix::from_rows(vec![vec![s(1), s(0)], vec![s(0), s(1)]]);
        let b = Matrix::from_rows(vec![vec![s(1), s(1)], vec![s(1), s(-1)]]);
        assert!(same_row_span(&a, &b));
        let c = Matrix::from_rows(vec![vec![s(1), s(1)]]);
        assert!(!same_row_span(&a, &c));
    }
}
