use crate::exactla::{vector, Echelon, Mat, Scalar, Subspace};

use super::{DgAlgebra, DgError};

/// Homology algebra `H = ker d / im d` with its comparison maps.
#[derive(Clone, Debug)]
pub struct Homology {
    /// H as an algebra with zero differential; basis = classes of `reps`.
    pub algebra: DgAlgebra,
    pub cycles: Subspace,
    pub boundaries: Subspace,
    /// Homogeneous cycle representatives of the basis classes, in ambient coordinates.
    pub reps: Vec<Vec<Scalar>>,
    solver: Mat,
}

impl Homology {
    /// `π(x)` for a cycle `x`; `None` if `x` is not a cycle.
    pub fn project(&self, x: &[Scalar]) -> Option<Vec<Scalar>> {
        if !self.cycles.contains_vec(x) {
            return None;
        }
        let y = self.solver.solve_vec(x).expect("cycles are spanned by reps and boundaries");
        Some(y[..self.reps.len()].to_vec())
    }

    /// The section: representative cycle of a homology class.
    pub fn lift(&self, h: &[Scalar]) -> Vec<Scalar> {
        let n = self.cycles.ambient();
        let mut v = vector::zeros(self.cycles.field(), n);
        for (c, r) in h.iter().zip(&self.reps) {
            vector::axpy(&mut v, c, r);
        }
        v
    }

    pub fn dim(&self) -> usize {
        self.reps.len()
    }
}

/// Cycles and boundaries of the subcomplex `(V, d|V)` for a d-stable subspace `V`.
pub fn subcomplex(alg: &DgAlgebra, v: &Subspace) -> Result<(Subspace, Subspace), DgError> {
    let d = alg.diff_matrix();
    let basis = v.basis_vectors();
    let images: Vec<Vec<Scalar>> = basis.iter().map(|b| d.mul_vec(b)).collect();
    for img in &images {
        if !v.contains_vec(img) {
            return Err(DgError::NotClosed(alg.render(img)));
        }
    }
    let boundaries = Subspace::span(alg.field(), alg.dim(), &images);
    let cycles = v.meet(&Subspace::kernel_of(d));
    Ok((cycles, boundaries))
}

/// Chooses cycle representatives for a basis of `cycles / boundaries`,
/// scanning the RREF basis of `cycles` in order.
pub fn complement_reps(cycles: &Subspace, boundaries: &Subspace) -> Vec<Vec<Scalar>> {
    let mut ech = Echelon::from_subspace(boundaries);
    let mut reps = Vec::new();
    for z in cycles.basis_vectors() {
        if ech.insert(z.clone()).is_some() {
            reps.push(z);
        }
    }
    reps
}

/// Homology algebra of a dg-algebra.
pub fn homology(alg: &DgAlgebra) -> Homology {
    let f = alg.field();
    let n = alg.dim();
    let d = alg.diff_matrix();
    let cycles = Subspace::kernel_of(d);
    let boundaries = Subspace::column_space(d);
    let reps = complement_reps(&cycles, &boundaries);
    let m = reps.len();
    let mut cols = reps.clone();
    cols.extend(boundaries.basis_vectors());
    let solver = Mat::from_cols(f, n, &cols);
    let partial = Homology {
        algebra: DgAlgebra::from_fn(f, vec![], vec![], vec![], Mat::zeros(f, 0, 0), |_, _| vec![]),
        cycles,
        boundaries,
        reps,
        solver,
    };
    let names = partial.reps.iter().map(|r| format!("[{}]", alg.render(r))).collect();
    let degrees = partial
        .reps
        .iter()
        .map(|r| alg.homogeneous_degree(r).expect("RREF cycle basis is homogeneous"))
        .collect();
    let unit = partial.project(alg.unit()).expect("the unit is a cycle");
    let products: Vec<Vec<Vec<Scalar>>> = (0..m)
        .map(|a| {
            (0..m)
                .map(|b| {
                    let xy = alg.mul(&partial.reps[a], &partial.reps[b]);
                    partial.project(&xy).expect("cycles form a subalgebra")
                })
                .collect()
        })
        .collect();
    let algebra = DgAlgebra::from_fn(f, names, degrees, unit, Mat::zeros(f, m, m), |a, b| products[a][b].clone());
    Homology { algebra, ..partial }
}

/// The cycle algebra `ker d` with zero differential, plus the kernel as a subspace of `A`.
pub fn cycle_subalgebra(alg: &DgAlgebra) -> (DgAlgebra, Subspace) {
    let cycles = Subspace::kernel_of(alg.diff_matrix());
    let sub = alg
        .subalgebra(&cycles, false)
        .expect("cycles of a dg-algebra form a graded subalgebra");
    (sub, cycles)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::exactla::Field;

    #[test]
    fn mat2_is_acyclic() {
        let a = catalog::mat2_dg(Field::Rational);
        let h = homology(&a);
        assert_eq!(h.cycles.dim(), 2);
        assert_eq!(h.cycles, h.boundaries);
        assert_eq!(h.dim(), 0);
    }

    #[test]
    fn dual_numbers_with_d_acyclic() {
        let a = catalog::dual_numbers_dg(Field::Rational);
        let h = homology(&a);
        assert_eq!(h.cycles.dim(), 1);
        assert_eq!(h.dim(), 0);
    }

    #[test]
    fn zero_differential_gives_identity() {
        let a = catalog::dual_numbers_plain(Field::Prime(3));
        let h = homology(&a);
        assert_eq!(h.dim(), a.dim());
        for i in 0..a.dim() {
            assert_eq!(h.project(&a.basis(i)).unwrap(), a.basis(i));
        }
    }

    #[test]
    fn mat2_cycle_algebra_is_dual_numbers_in_degree_one() {
        let a = catalog::mat2_dg(Field::Rational);
        let (z, _) = cycle_subalgebra(&a);
        assert_eq!(z.dim(), 2);
        assert!(z.validate().is_valid());
        let mut degs = z.degrees().to_vec();
        degs.sort();
        assert_eq!(degs, vec![0, 1]);
        let eps = z.basis(z.degrees().iter().position(|&d| d == 1).unwrap());
        assert!(vector::is_zero(&z.mul(&eps, &eps)));
    }

    #[test]
    fn dual_numbers_dg_cycle_algebra_is_field() {
        let a = catalog::dual_numbers_dg(Field::Rational);
        let (z, _) = cycle_subalgebra(&a);
        assert_eq!(z.dim(), 1);
    }
}
