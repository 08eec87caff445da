use alloc::vec;
use alloc::vec::Vec;

use crate::ring::{Field, Ring};

/// A dense row-major matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: Clone> Matrix<E> {
    pub fn new(rows: usize, cols: usize, data: Vec<E>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data length");
        Matrix { rows, cols, data }
    }

    pub fn filled(rows: usize, cols: usize, value: E) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![value; rows * cols],
        }
    }

    pub fn zeros<R: Ring<Elem = E>>(ring: &R, rows: usize, cols: usize) -> Self {
        Self::filled(rows, cols, ring.zero())
    }

    pub fn identity<R: Ring<Elem = E>>(ring: &R, n: usize) -> Self {
        let mut m = Self::zeros(ring, n, n);
        for i in 0..n {
            m.set(i, i, ring.one());
        }
        m
    }

    /// Stacks row vectors; every row must have length `cols`.
    pub fn from_rows(rows: &[Vec<E>], cols: usize) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "row length");
            data.extend_from_slice(r);
        }
        Matrix {
            rows: rows.len(),
            cols,
            data,
        }
    }

    /// Places vectors side by side as columns.
    pub fn from_cols(cols: &[Vec<E>], rows: usize) -> Self {
        Self::from_rows(cols, rows).transpose()
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: E) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[E] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<E> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vec<E>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn col_vecs(&self) -> Vec<Vec<E>> {
        (0..self.cols).map(|j| self.col(j)).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        Matrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn map<T: Clone>(&self, f: impl Fn(&E) -> T) -> Matrix<T> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }
}

pub fn mat_mul<R: Ring>(ring: &R, a: &Matrix<R::Elem>, b: &Matrix<R::Elem>) -> Matrix<R::Elem> {
    assert_eq!(a.cols, b.rows, "inner dimensions");
    let mut out = Matrix::zeros(ring, a.rows, b.cols);
    for i in 0..a.rows {
        for k in 0..a.cols {
            let x = a.get(i, k);
            if ring.is_zero(x) {
                continue;
            }
            for j in 0..b.cols {
                let y = b.get(k, j);
                if ring.is_zero(y) {
                    continue;
                }
                let v = ring.add(out.get(i, j), &ring.mul(x, y));
                out.set(i, j, v);
            }
        }
    }
    out
}

/// `a * v` for a column vector `v`.
pub fn mat_vec<R: Ring>(ring: &R, a: &Matrix<R::Elem>, v: &[R::Elem]) -> Vec<R::Elem> {
    assert_eq!(a.cols, v.len(), "vector length");
    (0..a.rows)
        .map(|i| {
            a.row(i)
                .iter()
                .zip(v)
                .filter(|(x, y)| !ring.is_zero(x) && !ring.is_zero(y))
                .fold(ring.zero(), |acc, (x, y)| ring.add(&acc, &ring.mul(x, y)))
        })
        .collect()
}

/// Reduced row-echelon form with its rank and pivot columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref<E> {
    /// Same shape as the input; zero rows at the bottom.
    pub reduced: Matrix<E>,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

pub fn rref<F: Field>(field: &F, m: &Matrix<F::Elem>) -> Rref<F::Elem> {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..a.cols {
        if r == a.rows {
            break;
        }
        let Some(p) = (r..a.rows).find(|&i| !field.is_zero(a.get(i, c))) else {
            continue;
        };
        if p != r {
            for j in 0..a.cols {
                a.data.swap(p * a.cols + j, r * a.cols + j);
            }
        }
        let inv = field.inv(a.get(r, c)).unwrap();
        for j in c..a.cols {
            let v = field.mul(a.get(r, j), &inv);
            a.set(r, j, v);
        }
        for i in 0..a.rows {
            if i == r || field.is_zero(a.get(i, c)) {
                continue;
            }
            let factor = a.get(i, c).clone();
            for j in c..a.cols {
                let v = field.sub(a.get(i, j), &field.mul(&factor, a.get(r, j)));
                a.set(i, j, v);
            }
        }
        pivots.push(c);
        r += 1;
    }
    Rref {
        reduced: a,
        rank: r,
        pivots,
    }
}

pub fn rank<F: Field>(field: &F, m: &Matrix<F::Elem>) -> usize {
    rref(field, m).rank
}

/// A basis of `{ v : m v = 0 }`, one vector per free column.
pub fn kernel<F: Field>(field: &F, m: &Matrix<F::Elem>) -> Vec<Vec<F::Elem>> {
    let Rref {
        reduced, pivots, ..
    } = rref(field, m);
    let free: Vec<usize> = (0..m.cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![field.zero(); m.cols];
            v[f] = field.one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = field.neg(reduced.get(row, f));
            }
            v
        })
        .collect()
}

/// Some `x` with `m x = b`, or `None` if the system is inconsistent.
pub fn solve<F: Field>(field: &F, m: &Matrix<F::Elem>, b: &[F::Elem]) -> Option<Vec<F::Elem>> {
    assert_eq!(m.rows, b.len(), "right-hand side length");
    let mut aug = Vec::with_capacity(m.rows);
    for i in 0..m.rows {
        let mut row = m.row(i).to_vec();
        row.push(b[i].clone());
        aug.push(row);
    }
    let Rref {
        reduced, pivots, ..
    } = rref(field, &Matrix::from_rows(&aug, m.cols + 1));
    if pivots.last() == Some(&m.cols) {
        return None;
    }
    let mut x = vec![field.zero(); m.cols];
    for (row, &p) in pivots.iter().enumerate() {
        x[p] = reduced.get(row, m.cols).clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{PrimeField, Rationals};

    fn q_matrix(rows: &[&[i64]]) -> Matrix<num_rational::BigRational> {
        let cols = rows.first().map_or(0, |r| r.len());
        let data: Vec<Vec<_>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| Rationals.from_i64(x)).collect())
            .collect();
        Matrix::from_rows(&data, cols)
    }

    #[test]
    fn ranks() {
        let q = Rationals;
        assert_eq!(rank(&q, &Matrix::identity(&q, 3)), 3);
        assert_eq!(rank(&q, &Matrix::zeros(&q, 2, 5)), 0);
        assert_eq!(rank(&q, &q_matrix(&[&[1, 2], &[2, 4]])), 1);
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let f = PrimeField::new(5).unwrap();
        let m = Matrix::new(2, 4, vec![1, 2, 3, 4, 0, 1, 1, 1]);
        let ker = kernel(&f, &m);
        assert_eq!(ker.len(), 2);
        for v in &ker {
            assert!(mat_vec(&f, &m, v).iter().all(|x| *x == 0));
        }
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let q = Rationals;
        let m = q_matrix(&[&[1, 1], &[1, -1]]);
        let x = solve(&q, &m, &[q.from_i64(3), q.from_i64(1)]).unwrap();
        assert_eq!(x, vec![q.from_i64(2), q.from_i64(1)]);
        let singular = q_matrix(&[&[1, 1], &[2, 2]]);
        assert!(solve(&q, &singular, &[q.one(), q.one()]).is_none());
    }
}
