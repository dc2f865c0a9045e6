use super::vector;
use super::{Echelon, Field, LaError, Mat, Scalar};

/// A subspace of `K^n`, stored as its unique RREF basis, so `==` is set equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: Field,
    ambient: usize,
    basis: Mat,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: Field, n: usize) -> Subspace {
        Subspace {
            field,
            ambient: n,
            basis: Mat::zeros(field, 0, n),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: Field, n: usize) -> Subspace {
        Subspace {
            field,
            ambient: n,
            basis: Mat::identity(field, n),
            pivots: (0..n).collect(),
        }
    }

    pub fn span(field: Field, n: usize, vectors: &[Vec<Scalar>]) -> Subspace {
        let mut e = Echelon::new(field, n);
        for v in vectors {
            assert_eq!(v.len(), n, "vector length mismatch");
            e.insert(v.clone());
        }
        e.to_subspace()
    }

    /// Span of standard basis vectors.
    pub fn coordinate(field: Field, n: usize, idx: &[usize]) -> Subspace {
        let vs: Vec<_> = idx.iter().map(|&i| vector::unit(field, n, i)).collect();
        Subspace::span(field, n, &vs)
    }

    /// Row space of `m`.
    pub fn row_space(m: &Mat) -> Subspace {
        let (basis, pivots, _) = m.rref();
        Subspace {
            field: m.field(),
            ambient: m.cols(),
            basis,
            pivots,
        }
    }

    /// Column space of `m`.
    pub fn column_space(m: &Mat) -> Subspace {
        Subspace::row_space(&m.transpose())
    }

    pub fn kernel_of(m: &Mat) -> Subspace {
        Subspace::span(m.field(), m.cols(), &m.kernel())
    }

    pub(crate) fn from_reduced(field: Field, n: usize, rows: Vec<Vec<Scalar>>, pivots: Vec<usize>) -> Subspace {
        let mut order: Vec<usize> = (0..rows.len()).collect();
        order.sort_by_key(|&i| pivots[i]);
        let sorted: Vec<Vec<Scalar>> = order.iter().map(|&i| rows[i].clone()).collect();
        let piv: Vec<usize> = order.iter().map(|&i| pivots[i]).collect();
        Subspace {
            field,
            ambient: n,
            basis: Mat::from_rows(field, n, sorted).expect("consistent rows"),
            pivots: piv,
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    pub fn basis(&self) -> &Mat {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Scalar>> {
        self.basis.row_vecs()
    }

    fn check(&self, other: &Subspace) -> Result<(), LaError> {
        if self.ambient != other.ambient {
            return Err(LaError::DimMismatch {
                expected: self.ambient,
                got: other.ambient,
            });
        }
        if self.field != other.field {
            return Err(LaError::FieldMismatch(self.field, other.field));
        }
        Ok(())
    }

    /// Residue of `v` modulo this subspace (zero in pivot columns).
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut w = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            if !w[p].is_zero() {
                let c = -&w[p];
                vector::axpy(&mut w, &c, self.basis.row(i));
            }
        }
        w
    }

    pub fn contains_vec(&self, v: &[Scalar]) -> bool {
        vector::is_zero(&self.reduce(v))
    }

    /// Coordinates of `v` in the RREF basis, if `v` lies in the subspace.
    pub fn coords(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if self.contains_vec(v) {
            Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
        } else {
            None
        }
    }

    /// Vector with the given coordinates in the RREF basis.
    pub fn combine(&self, coords: &[Scalar]) -> Vec<Scalar> {
        let mut v = vector::zeros(self.field, self.ambient);
        for (i, c) in coords.iter().enumerate() {
            vector::axpy(&mut v, c, self.basis.row(i));
        }
        v
    }

    pub fn contains(&self, other: &Subspace) -> Result<bool, LaError> {
        self.check(other)?;
        Ok(other.basis_vectors().iter().all(|v| self.contains_vec(v)))
    }

    /// `self ⊇ other`; panics on shape mismatch.
    pub fn includes(&self, other: &Subspace) -> bool {
        self.contains(other).expect("compatible subspaces")
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LaError> {
        self.check(other)?;
        let mut e = Echelon::from_subspace(self);
        for v in other.basis_vectors() {
            e.insert(v);
        }
        Ok(e.to_subspace())
    }

    pub fn plus(&self, other: &Subspace) -> Subspace {
        self.sum(other).expect("compatible subspaces")
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, LaError> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.field, self.ambient));
        }
        // x = Σ λ_i a_i lies in `other` iff Σ λ_i (a_i mod other) = 0.
        let residues: Vec<Vec<Scalar>> = self.basis_vectors().iter().map(|a| other.reduce(a)).collect();
        let m = Mat::from_cols(self.field, self.ambient, &residues);
        let lambdas = m.kernel();
        let vs: Vec<Vec<Scalar>> = lambdas.iter().map(|l| self.combine(l)).collect();
        Ok(Subspace::span(self.field, self.ambient, &vs))
    }

    pub fn meet(&self, other: &Subspace) -> Subspace {
        self.intersect(other).expect("compatible subspaces")
    }

    /// Standard basis vectors completing this subspace to the ambient space.
    pub fn quotient_basis(&self) -> Vec<Vec<Scalar>> {
        self.nonpivots()
            .into_iter()
            .map(|j| vector::unit(self.field, self.ambient, j))
            .collect()
    }

    pub fn nonpivots(&self) -> Vec<usize> {
        let mut is_p = vec![false; self.ambient];
        for &p in &self.pivots {
            is_p[p] = true;
        }
        (0..self.ambient).filter(|&j| !is_p[j]).collect()
    }

    /// `{v : f·v ∈ self}` for a square map `f` on the ambient space.
    pub fn preimage(&self, f: &Mat) -> Result<Subspace, LaError> {
        if f.rows() != self.ambient {
            return Err(LaError::DimMismatch {
                expected: self.ambient,
                got: f.rows(),
            });
        }
        let residues: Vec<Vec<Scalar>> = (0..f.cols()).map(|j| self.reduce(&f.col(j))).collect();
        let m = Mat::from_cols(self.field, self.ambient, &residues);
        Ok(Subspace::span(self.field, f.cols(), &m.kernel()))
    }

    /// `f(self)`.
    pub fn image(&self, f: &Mat) -> Subspace {
        let vs: Vec<_> = self.basis_vectors().iter().map(|v| f.mul_vec(v)).collect();
        Subspace::span(self.field, f.rows(), &vs)
    }

    /// Rendered basis rows, for witnesses.
    pub fn render(&self) -> Vec<Vec<String>> {
        self.basis_vectors().iter().map(|v| vector::render(v)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(f: Field, xs: &[i64]) -> Vec<Scalar> {
        vector::from_ints(f, xs)
    }

    #[test]
    fn intersect_coordinate_lines() {
        let q = Field::Rational;
        let a = Subspace::span(q, 2, &[v(q, &[1, 0])]);
        let b = Subspace::span(q, 2, &[v(q, &[0, 1])]);
        assert!(a.intersect(&b).unwrap().is_zero());
    }

    #[test]
    fn sum_fills_plane() {
        let q = Field::Rational;
        let a = Subspace::span(q, 2, &[v(q, &[1, 0])]);
        let b = Subspace::span(q, 2, &[v(q, &[1, 1])]);
        assert_eq!(a.sum(&b).unwrap(), Subspace::full(q, 2));
    }

    #[test]
    fn preimage_of_line_under_nilpotent() {
        let q = Field::Rational;
        let f = Mat::from_ints(q, &[&[0, 1], &[0, 0]]);
        let line = Subspace::span(q, 2, &[v(q, &[1, 0])]);
        assert_eq!(line.preimage(&f).unwrap(), Subspace::full(q, 2));
    }

    #[test]
    fn dimension_mismatch_reported() {
        let q = Field::Rational;
        let a = Subspace::zero(q, 2);
        let b = Subspace::zero(q, 3);
        assert!(matches!(a.sum(&b), Err(LaError::DimMismatch { .. })));
    }

    #[test]
    fn quotient_basis_completes() {
        let q = Field::Rational;
        let a = Subspace::span(q, 3, &[v(q, &[1, 1, 0])]);
        let comp = a.quotient_basis();
        assert_eq!(comp.len(), 2);
        let whole = a.plus(&Subspace::span(q, 3, &comp));
        assert!(whole.is_full());
    }
}
