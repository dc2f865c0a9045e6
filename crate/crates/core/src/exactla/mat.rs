use std::fmt;

use super::vector;
use super::{Field, LaError, Scalar};

/// Dense row-major matrix over a single field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Mat {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Mat {
        Mat {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Mat {
        let mut m = Mat::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    /// Builds a matrix from rows; every entry must live in `field`.
    pub fn from_rows(field: Field, cols: usize, rows: Vec<Vec<Scalar>>) -> Result<Mat, LaError> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let nrows = rows.len();
        for row in rows {
            if row.len() != cols {
                return Err(LaError::DimMismatch {
                    expected: cols,
                    got: row.len(),
                });
            }
            for s in row {
                if s.field() != field {
                    return Err(LaError::FieldMismatch(field, s.field()));
                }
                data.push(s);
            }
        }
        Ok(Mat {
            field,
            rows: nrows,
            cols,
            data,
        })
    }

    pub fn from_ints(field: Field, rows: &[&[i64]]) -> Mat {
        let cols = rows.first().map_or(0, |r| r.len());
        let data = rows
            .iter()
            .flat_map(|r| {
                assert_eq!(r.len(), cols, "ragged integer matrix");
                r.iter().map(|&x| field.int(x))
            })
            .collect();
        Mat {
            field,
            rows: rows.len(),
            cols,
            data,
        }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_cols(field: Field, rows: usize, cols: &[Vec<Scalar>]) -> Mat {
        let mut m = Mat::zeros(field, rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows, "column length mismatch");
            for (i, x) in c.iter().enumerate() {
                m.data[i * cols.len() + j] = x.clone();
            }
        }
        m
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Scalar) {
        self.data[i * self.cols + j] = x;
    }

    pub fn entry_mut(&mut self, i: usize, j: usize) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn col(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = Mat::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                let orow = other.row(k);
                let base = i * other.cols;
                for (j, b) in orow.iter().enumerate() {
                    if !b.is_zero() {
                        out.data[base + j].add_mul_assign(a, b);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        (0..self.rows).map(|i| vector::dot(self.field, self.row(i), v)).collect()
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: vector::add(&self.data, &other.data),
        }
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: vector::sub(&self.data, &other.data),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Mat {
        Mat {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: vector::scale(c, &self.data),
        }
    }

    /// `self += c * other`
    pub fn axpy(&mut self, c: &Scalar, other: &Mat) {
        vector::axpy(&mut self.data, c, &other.data);
    }

    pub fn trace(&self) -> Scalar {
        let mut t = self.field.zero();
        for i in 0..self.rows.min(self.cols) {
            t = &t + self.get(i, i);
        }
        t
    }

    pub fn pow(&self, mut e: u64) -> Mat {
        let mut base = self.clone();
        let mut acc = Mat::identity(self.field, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Block-diagonal sum.
    pub fn block_diag(&self, other: &Mat) -> Mat {
        let mut m = Mat::zeros(self.field, self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(i, j, self.get(i, j).clone());
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                m.set(self.rows + i, self.cols + j, other.get(i, j).clone());
            }
        }
        m
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Mat {
            field: self.field,
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Flattened entries, used when matrices are treated as vectors.
    pub fn flatten(&self) -> Vec<Scalar> {
        self.data.clone()
    }

    pub fn unflatten(field: Field, rows: usize, cols: usize, data: Vec<Scalar>) -> Mat {
        assert_eq!(data.len(), rows * cols);
        Mat {
            field,
            rows,
            cols,
            data,
        }
    }

    /// Unique reduced row echelon form, pivot columns and rank.
    pub fn rref(&self) -> (Mat, Vec<usize>, usize) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).inv().expect("nonzero pivot");
            for j in c..m.cols {
                let x = m.get(r, j) * &inv;
                m.set(r, j, x);
            }
            let pivot_row: Vec<Scalar> = m.row(r).to_vec();
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let f = m.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                let nf = -&f;
                let base = i * m.cols;
                for (j, pv) in pivot_row.iter().enumerate().skip(c) {
                    if !pv.is_zero() {
                        m.data[base + j].add_mul_assign(&nf, pv);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        let rank = r;
        m.data.truncate(rank * m.cols);
        m.rows = rank;
        (m, pivots, rank)
    }

    pub fn rank(&self) -> usize {
        self.rref().2
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Basis of the right null space `{x : self·x = 0}`, one vector per free column.
    pub fn kernel(&self) -> Vec<Vec<Scalar>> {
        let (r, pivots, _) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&j| !is_pivot[j]) {
            let mut v = vector::zeros(self.field, self.cols);
            v[free] = self.field.one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(i, free);
            }
            basis.push(v);
        }
        basis
    }

    /// One solution of `self·x = b`, free variables set to zero.
    pub fn solve(&self, b: &Mat) -> Result<Mat, LaError> {
        if b.rows != self.rows {
            return Err(LaError::DimMismatch {
                expected: self.rows,
                got: b.rows,
            });
        }
        let n = self.cols;
        let mut aug = Mat::zeros(self.field, self.rows, n + b.cols);
        for i in 0..self.rows {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            for j in 0..b.cols {
                aug.set(i, n + j, b.get(i, j).clone());
            }
        }
        let (r, pivots, _) = aug.rref();
        if pivots.iter().any(|&p| p >= n) {
            return Err(LaError::NoSolution);
        }
        let mut x = Mat::zeros(self.field, n, b.cols);
        for (i, &p) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.set(p, j, r.get(i, n + j).clone());
            }
        }
        Ok(x)
    }

    pub fn solve_vec(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        let bm = Mat::from_cols(self.field, self.rows, &[b.to_vec()]);
        self.solve(&bm).ok().map(|x| x.col(0))
    }

    pub fn inverse(&self) -> Option<Mat> {
        if !self.is_square() {
            return None;
        }
        if self.rank() < self.rows {
            return None;
        }
        self.solve(&Mat::identity(self.field, self.rows)).ok()
    }
}

impl fmt::Display for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(Scalar::to_text).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

fn check_field(m: &Mat) -> Result<(), LaError> {
    match m.data.iter().find(|s| s.field() != m.field) {
        Some(s) => Err(LaError::FieldMismatch(m.field, s.field())),
        None => Ok(()),
    }
}

/// Row reduction with an explicit field-consistency check.
pub fn rref(m: &Mat) -> Result<(Mat, Vec<usize>, usize), LaError> {
    check_field(m)?;
    Ok(m.rref())
}

/// Solves `a·x = b`; free variables are zeroed.
pub fn solve_linear(a: &Mat, b: &Mat) -> Result<Mat, LaError> {
    check_field(a)?;
    check_field(b)?;
    if a.field != b.field {
        return Err(LaError::FieldMismatch(a.field, b.field));
    }
    a.solve(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_of_identity() {
        let id = Mat::identity(Field::Rational, 3);
        let (r, piv, rank) = rref(&id).unwrap();
        assert_eq!(r, id);
        assert_eq!(piv, vec![0, 1, 2]);
        assert_eq!(rank, 3);
    }

    #[test]
    fn rref_of_zero() {
        let z = Mat::zeros(Field::Rational, 2, 4);
        let (r, piv, rank) = rref(&z).unwrap();
        assert_eq!(r.rows(), 0);
        assert!(piv.is_empty());
        assert_eq!(rank, 0);
    }

    #[test]
    fn rref_rank_one() {
        let q = Field::Rational;
        let m = Mat::from_ints(q, &[&[2, 4], &[1, 2]]);
        let (r, piv, rank) = rref(&m).unwrap();
        assert_eq!(r, Mat::from_ints(q, &[&[1, 2]]));
        assert_eq!(piv, vec![0]);
        assert_eq!(rank, 1);
    }

    #[test]
    fn mixed_fields_rejected() {
        let q = Field::Rational;
        let f = Field::Prime(5);
        assert!(Mat::from_rows(q, 2, vec![vec![q.one(), f.one()]]).is_err());
        let a = Mat::identity(q, 1);
        let b = Mat::identity(f, 1);
        assert_eq!(solve_linear(&a, &b), Err(LaError::FieldMismatch(q, f)));
    }

    #[test]
    fn solve_zeroes_free_variables() {
        let q = Field::Rational;
        let a = Mat::from_ints(q, &[&[1, 1]]);
        let b = Mat::from_ints(q, &[&[2]]);
        let x = solve_linear(&a, &b).unwrap();
        assert_eq!(x, Mat::from_ints(q, &[&[2], &[0]]));
        assert_eq!(a.mul(&x), b);
    }

    #[test]
    fn solve_identity_and_inconsistent() {
        let q = Field::Rational;
        let b = Mat::from_ints(q, &[&[3, -1], &[7, 2]]);
        assert_eq!(solve_linear(&Mat::identity(q, 2), &b).unwrap(), b);
        let z = Mat::zeros(q, 2, 2);
        assert_eq!(solve_linear(&z, &b), Err(LaError::NoSolution));
    }

    #[test]
    fn kernel_and_inverse() {
        let f = Field::Prime(3);
        let m = Mat::from_ints(f, &[&[1, 2, 0], &[0, 0, 1]]);
        let k = m.kernel();
        assert_eq!(k.len(), 1);
        assert!(vector::is_zero(&m.mul_vec(&k[0])));
        let a = Mat::from_ints(f, &[&[1, 1], &[0, 1]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Mat::identity(f, 2));
        assert!(Mat::from_ints(f, &[&[1, 2], &[2, 1]]).inverse().is_none());
    }
}
