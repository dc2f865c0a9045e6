//! Finite-dimensional ℤ-graded dg-algebras given by structure constants.

mod algebra;
mod homology;

pub use algebra::{sign, AxiomCheck, DgAlgebra, ValidationReport};
pub(crate) use algebra::degree_projectors;
pub use homology::{complement_reps, cycle_subalgebra, homology, subcomplex, Homology};

use thiserror::Error;

use crate::exactla::LaError;
use crate::expr::ExprError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DgError {
    #[error("malformed algebra: {0}")]
    Structure(String),
    #[error("axiom `{axiom}` fails at {witness:?}")]
    AxiomFailed { axiom: String, witness: Vec<String> },
    #[error("element is not invertible")]
    NotInvertible,
    #[error("subspace is not closed: {0} escapes")]
    NotClosed(String),
    #[error("unknown basis element `{0}`")]
    UnknownName(String),
    #[error(transparent)]
    Parse(#[from] ExprError),
    #[error(transparent)]
    La(#[from] LaError),
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::exactla::{vector, Field};

    #[test]
    fn named_fixtures_validate() {
        for f in [Field::Rational, Field::Prime(2), Field::Prime(5)] {
            assert!(catalog::mat2_dg(f).validate().is_valid());
            assert!(catalog::dual_numbers_dg(f).validate().is_valid());
        }
    }

    #[test]
    fn broken_mat2_witness_matches_brute_force() {
        let a = catalog::mat2_broken(Field::Rational);
        let report = a.validate();
        assert!(!report.is_valid());
        // Oracle: expand both sides of Leibniz for every basis pair in row-major order.
        let n = a.dim();
        let mut first = None;
        let mut count = 0;
        for i in 0..n {
            for j in 0..n {
                let (x, y) = (a.basis(i), a.basis(j));
                let lhs = a.d(&a.mul(&x, &y));
                let mut rhs = a.mul(&a.d(&x), &y);
                let s = sign(a.field(), a.degree(i));
                vector::axpy(&mut rhs, &s, &a.mul(&x, &a.d(&y)));
                if lhs != rhs {
                    count += 1;
                    first.get_or_insert((a.names()[i].clone(), a.names()[j].clone()));
                }
            }
        }
        let leib = report.get("leibniz").unwrap();
        let (wi, wj) = first.unwrap();
        assert_eq!(leib.witness, Some(vec![wi, wj]));
        assert_eq!(leib.failures, count);
        assert!(!report.get("d-squared").unwrap().passed);
    }

    #[test]
    fn matrix_unit_products() {
        let a = catalog::mat2_dg(Field::Rational);
        let p = a.mul(&a.named(&[(1, "e21")]), &a.named(&[(1, "e12")]));
        assert_eq!(p, a.named(&[(1, "e22")]));
        assert_eq!(a.d(&p), a.named(&[(1, "e12")]));
        assert!(vector::is_zero(&a.d(a.unit())));
    }

    #[test]
    fn dual_numbers_products() {
        let a = catalog::dual_numbers_dg(Field::Rational);
        let x = a.named(&[(1, "X")]);
        assert!(vector::is_zero(&a.mul(&x, &x)));
        assert_eq!(a.d(&x), a.unit().to_vec());
        assert_eq!(a.invert(&x), Err(DgError::NotInvertible));
    }

    #[test]
    fn inversion() {
        let a = catalog::mat2_dg(Field::Rational);
        assert_eq!(a.invert(a.unit()).unwrap(), a.unit().to_vec());
        let s = a.named(&[(1, "e12"), (1, "e21")]);
        assert_eq!(a.invert(&s).unwrap(), s);
        let t = a.named(&[(2, "e11"), (3, "e22")]);
        let ti = a.invert(&t).unwrap();
        assert_eq!(a.mul(&t, &ti), a.unit().to_vec());
        assert_eq!(a.invert(&a.named(&[(1, "e11")])), Err(DgError::NotInvertible));
    }

    #[test]
    fn structural_errors() {
        let q = Field::Rational;
        let e = DgAlgebra::new(q, vec!["a".into()], vec![0, 1], vec![], vec![q.one()], vec![]);
        assert!(matches!(e, Err(DgError::Structure(_))));
        let e = DgAlgebra::new(q, vec!["a".into()], vec![0], vec![(0, 0, 3, q.one())], vec![q.one()], vec![]);
        assert!(matches!(e, Err(DgError::Structure(_))));
    }

    #[test]
    fn tensor_and_product_validate() {
        let f = Field::Prime(3);
        let a = catalog::mat2_dg(f);
        let b = catalog::dual_numbers_dg(f);
        assert!(a.tensor(&b).validate().is_valid());
        assert!(a.product(&b).validate().is_valid());
        let q = Field::Rational;
        let ext = catalog::exterior(q, &[1, 1]);
        assert!(ext.validate().is_valid());
        assert!(ext.tensor(&catalog::mat2_dg(q)).validate().is_valid());
    }

    #[test]
    fn quotient_by_ideal() {
        let q = Field::Rational;
        let a = catalog::kxk(q);
        let ideal = crate::exactla::Subspace::span(q, 2, &[a.named(&[(1, "e2")])]);
        let (quo, proj) = a.quotient(&ideal).unwrap();
        assert_eq!(quo.dim(), 1);
        assert!(quo.validate().is_valid());
        assert_eq!(proj.mul_vec(a.unit()), quo.unit().to_vec());
    }
}
