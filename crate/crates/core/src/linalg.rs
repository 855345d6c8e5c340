//! Dense matrices over 𝔽_q.

use crate::field::{FieldCtx, Fq};

/// Row-major square or rectangular matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Fq>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Fq::ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Fq::ONE);
        }
        m
    }

    /// Matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(columns: &[Vec<Fq>]) -> Self {
        let cols = columns.len();
        let rows = columns.first().map_or(0, Vec::len);
        let mut m = Self::zeros(rows, cols);
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, &v) in col.iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> Fq {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Fq) {
        self.data[r * self.cols + c] = v;
    }

    pub fn mul_vec(&self, field: &FieldCtx, v: &[Fq]) -> Vec<Fq> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let row = &self.data[i * self.cols..(i + 1) * self.cols];
                row.iter()
                    .zip(v)
                    .fold(Fq::ZERO, |acc, (&a, &b)| field.add(acc, field.mul(a, b)))
            })
            .collect()
    }

    pub fn mul(&self, field: &FieldCtx, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = field.add(out.get(i, j), field.mul(a, other.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn rank(&self, field: &FieldCtx) -> usize {
        let mut m = self.clone();
        m.row_reduce(field, None)
    }

    /// Gauss-Jordan inverse; `None` for singular matrices.
    pub fn inverse(&self, field: &FieldCtx) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols);
        let mut m = self.clone();
        let mut inv = Matrix::identity(self.rows);
        (m.row_reduce(field, Some(&mut inv)) == self.rows).then_some(inv)
    }

    /// Reduced row echelon form in place, mirroring row operations on `aux`.
    /// Returns the rank.
    fn row_reduce(&mut self, field: &FieldCtx, mut aux: Option<&mut Matrix>) -> usize {
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(pivot) = (rank..self.rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            self.swap_rows(rank, pivot);
            if let Some(a) = aux.as_deref_mut() {
                a.swap_rows(rank, pivot);
            }
            let inv = field.inv(self.get(rank, col)).expect("pivot is nonzero");
            self.scale_row(field, rank, inv);
            if let Some(a) = aux.as_deref_mut() {
                a.scale_row(field, rank, inv);
            }
            for r in 0..self.rows {
                if r == rank {
                    continue;
                }
                let factor = self.get(r, col);
                if factor.is_zero() {
                    continue;
                }
                self.sub_row_multiple(field, r, rank, factor);
                if let Some(a) = aux.as_deref_mut() {
                    a.sub_row_multiple(field, r, rank, factor);
                }
            }
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        rank
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn scale_row(&mut self, field: &FieldCtx, r: usize, s: Fq) {
        for c in 0..self.cols {
            let v = field.mul(self.get(r, c), s);
            self.set(r, c, v);
        }
    }

    /// row[target] -= factor * row[source]
    fn sub_row_multiple(&mut self, field: &FieldCtx, target: usize, source: usize, factor: Fq) {
        for c in 0..self.cols {
            let v = field.sub(self.get(target, c), field.mul(factor, self.get(source, c)));
            self.set(target, c, v);
        }
    }
}

/// Incrementally tests vectors for linear dependence on the ones accepted so
/// far, and reports the combination when a dependence appears.
pub struct DependencyFinder<'a> {
    field: &'a FieldCtx,
    /// (reduced vector, pivot column, combination of the inserted vectors)
    rows: Vec<(Vec<Fq>, usize, Vec<Fq>)>,
    inserted: usize,
}

impl<'a> DependencyFinder<'a> {
    pub fn new(field: &'a FieldCtx) -> Self {
        DependencyFinder {
            field,
            rows: Vec::new(),
            inserted: 0,
        }
    }

    /// Inserts `v`. If `v` lies in the span of the previous vectors `v_0..v_{m-1}`
    /// returns `c` with `v = Σ c_i v_i` (length m) and leaves the finder unchanged.
    pub fn push(&mut self, v: &[Fq]) -> Option<Vec<Fq>> {
        let f = self.field;
        let m = self.inserted;
        let mut vec = v.to_vec();
        // combination expressing `vec` as (v_m) - Σ ... ; tracked in terms of v_0..v_m
        let mut comb = vec![Fq::ZERO; m + 1];
        comb[m] = Fq::ONE;
        for (row, pivot, row_comb) in &self.rows {
            let factor = vec[*pivot];
            if factor.is_zero() {
                continue;
            }
            for (x, &y) in vec.iter_mut().zip(row) {
                *x = f.sub(*x, f.mul(factor, y));
            }
            for (x, &y) in comb.iter_mut().zip(row_comb) {
                *x = f.sub(*x, f.mul(factor, y));
            }
        }
        match vec.iter().position(|c| !c.is_zero()) {
            None => {
                // 0 = v_m + Σ comb_i v_i  =>  v_m = Σ (-comb_i) v_i
                Some(comb[..m].iter().map(|&c| f.neg(c)).collect())
            }
            Some(pivot) => {
                let inv = f.inv(vec[pivot]).expect("nonzero pivot");
                for x in vec.iter_mut() {
                    *x = f.mul(*x, inv);
                }
                for x in comb.iter_mut() {
                    *x = f.mul(*x, inv);
                }
                // keep earlier rows free of the new pivot column
                for (row, _, row_comb) in self.rows.iter_mut() {
                    let factor = row[pivot];
                    if factor.is_zero() {
                        continue;
                    }
                    for (x, &y) in row.iter_mut().zip(&vec) {
                        *x = f.sub(*x, f.mul(factor, y));
                    }
                    row_comb.resize(m + 1, Fq::ZERO);
                    for (x, &y) in row_comb.iter_mut().zip(&comb) {
                        *x = f.sub(*x, f.mul(factor, y));
                    }
                }
                self.rows.push((vec, pivot, comb));
                self.inserted += 1;
                None
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_and_rank() {
        let f = FieldCtx::prime(5).unwrap();
        let e = |v: &[i64]| v.iter().map(|&x| f.from_int(x)).collect::<Vec<_>>();
        let m = Matrix::from_columns(&[e(&[1, 2, 0]), e(&[0, 1, 4]), e(&[2, 0, 1])]);
        let inv = m.inverse(&f).unwrap();
        assert_eq!(m.mul(&f, &inv), Matrix::identity(3));
        assert_eq!(m.rank(&f), 3);
        let singular = Matrix::from_columns(&[e(&[1, 2, 3]), e(&[2, 4, 6]), e(&[0, 0, 1])]);
        assert_eq!(singular.rank(&f), 2);
        assert!(singular.inverse(&f).is_none());
    }

    #[test]
    fn dependency_combination() {
        let f = FieldCtx::prime(7).unwrap();
        let e = |v: &[i64]| v.iter().map(|&x| f.from_int(x)).collect::<Vec<_>>();
        let mut d = DependencyFinder::new(&f);
        assert!(d.push(&e(&[1, 0, 2])).is_none());
        assert!(d.push(&e(&[0, 1, 1])).is_none());
        // 3 v0 + 5 v1
        let c = d.push(&e(&[3, 5, 11])).unwrap();
        assert_eq!(c, e(&[3, 5]));
        assert!(d.push(&e(&[0, 0, 1])).is_none());
        let mut z = DependencyFinder::new(&f);
        assert_eq!(z.push(&e(&[0, 0])), Some(vec![]));
    }
}
