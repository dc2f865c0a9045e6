//! Commutative graded (Laurent) polynomial dg-rings.

mod poly;
mod ring;
mod window;

use thiserror::Error;

use crate::exactla::LaError;
use crate::expr::ExprError;

pub use poly::{Monomial, Poly};
pub use ring::{Generator, PolyRing};
pub use window::Window;

#[derive(Debug, Error)]
pub enum PolyError {
    #[error("negative exponent on `{0}`, which is not inverted")]
    NotLocalised(String),
    #[error("not homogeneous: {0}")]
    Inhomogeneous(String),
    #[error("unknown generator `{0}`")]
    UnknownName(String),
    #[error("degree {0} component is infinite or not enumerable for this ring")]
    InfiniteComponent(i64),
    #[error("invalid ring: {0}")]
    Invalid(String),
    #[error(transparent)]
    Parse(#[from] ExprError),
    #[error(transparent)]
    La(#[from] LaError),
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::Field;

    const Q: Field = Field::Rational;

    fn laurent() -> PolyRing {
        PolyRing::kx(Q).with_laurent(&[0])
    }

    #[test]
    fn closed_form_on_powers() {
        let r = PolyRing::kx(Q);
        assert_eq!(r.d(&r.var_power(0, 3)), r.var_power(0, 2));
        assert!(r.d(&r.var_power(0, 4)).is_zero());
        for n in 0..40 {
            assert!(r.d(&r.var_power(0, 2 * n)).is_zero());
            assert_eq!(r.d(&r.var_power(0, 2 * n + 1)), r.var_power(0, 2 * n));
        }
        let l = laurent();
        assert_eq!(l.d(&l.var_power(0, -1)), l.var_power(0, -2));
        // d(X·X⁻¹) = d(X)X⁻¹ + (-1)^{|X|} X d(X⁻¹) = 0
        let x = l.var_power(0, 1);
        let xi = l.var_power(0, -1);
        let lhs = l.d(&x).mul(&xi);
        let rhs = x.mul(&l.d(&xi)).neg();
        assert!(lhs.add(&rhs).is_zero());
    }

    #[test]
    fn rejects_unlocalised_inverse() {
        let r = PolyRing::kx(Q);
        assert!(matches!(r.parse("X^-1"), Err(PolyError::NotLocalised(_))));
        assert!(laurent().parse("X^-1").is_ok());
        assert!(matches!(r.parse("Y"), Err(PolyError::UnknownName(_))));
    }

    #[test]
    fn components_and_regularity() {
        let r = PolyRing::kx(Q);
        let p = r.parse("X + X^3").unwrap();
        let c = r.homogeneous_components(&p);
        assert_eq!(c.keys().copied().collect::<Vec<_>>(), vec![-3, -1]);
        assert_eq!(c[&-1], r.var_power(0, 1));
        assert_eq!(r.homogeneous_components(&r.one()).keys().copied().collect::<Vec<_>>(), vec![0]);
        assert!(r.homogeneous_components(&r.zero()).is_empty());
        assert!(r.is_regular_homogeneous(&r.parse("X^2").unwrap()));
        assert!(!r.is_regular_homogeneous(&r.zero()));
        assert!(!r.is_regular_homogeneous(&r.parse("X + 1").unwrap()));
    }

    #[test]
    fn validation_catches_bad_rings() {
        assert!(PolyRing::kx(Q).is_valid());
        let gens = vec![
            Generator { name: "x".into(), degree: 1, laurent: false },
            Generator { name: "y".into(), degree: 2, laurent: false },
        ];
        // d(y) = x³ is incompatible with xy = yx for odd |x|.
        let bad = PolyRing::from_exprs(Q, gens.clone(), &["0", "x^3"]).unwrap();
        let checks = bad.validate();
        assert!(checks[0].1);
        assert!(!checks[1].1);
        assert!(PolyRing::from_exprs(Q, gens, &["0", "x^2"]).is_err());
    }

    #[test]
    fn window_homology_of_kx_vanishes() {
        let r = PolyRing::kx(Q);
        let h = r.homology_dims(Window::symmetric(20)).unwrap();
        assert!(h.values().all(|&d| d == 0));
        let l = laurent();
        assert!(l.homology_dims(Window::symmetric(20)).unwrap().values().all(|&d| d == 0));
    }
}
