use super::vector;
use super::{Field, Scalar, Subspace};

/// Incrementally built, fully reduced echelon basis.
///
/// Every stored row has a leading 1 in its pivot column and zeros in the pivot
/// columns of all other rows, so reduction is order independent.
#[derive(Clone, Debug)]
pub struct Echelon {
    field: Field,
    n: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
    row_of_col: Vec<Option<usize>>,
}

impl Echelon {
    pub fn new(field: Field, n: usize) -> Echelon {
        Echelon {
            field,
            n,
            rows: Vec::new(),
            pivots: Vec::new(),
            row_of_col: vec![None; n],
        }
    }

    pub fn from_subspace(s: &Subspace) -> Echelon {
        let mut e = Echelon::new(s.field(), s.ambient());
        for v in s.basis_vectors() {
            e.insert(v);
        }
        e
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// Residue of `v` modulo the current span; zero in every pivot column.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut w = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !w[p].is_zero() {
                let c = -&w[p];
                vector::axpy(&mut w, &c, row);
            }
        }
        w
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        vector::is_zero(&self.reduce(v))
    }

    /// Adds `v` to the span; returns the new normalized row if it was independent.
    pub fn insert(&mut self, v: Vec<Scalar>) -> Option<Vec<Scalar>> {
        let mut w = self.reduce(&v);
        let p = vector::leading(&w)?;
        let inv = w[p].inv().expect("nonzero leading entry");
        w = vector::scale(&inv, &w);
        for row in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let c = -&row[p];
                vector::axpy(row, &c, &w);
            }
        }
        self.row_of_col[p] = Some(self.rows.len());
        self.rows.push(w.clone());
        self.pivots.push(p);
        Some(w)
    }

    /// Coordinates of `v` with respect to the stored rows (insertion order), if `v` is in the span.
    pub fn coords(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    pub fn rows(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    pub fn to_subspace(&self) -> Subspace {
        Subspace::from_reduced(self.field, self.n, self.rows.clone(), self.pivots.clone())
    }
}
