use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::LaError;

/// Ground field of every computation: the rationals or a prime field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Field {
    #[serde(rename = "Q")]
    Rational,
    #[serde(rename = "Fp")]
    Prime(u64),
}

impl Field {
    /// The prime field of order `p`; rejects composite or tiny moduli.
    pub fn prime(p: u64) -> Result<Field, LaError> {
        if is_prime(p) && p < (1 << 31) {
            Ok(Field::Prime(p))
        } else {
            Err(LaError::NotPrime(p))
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => *p,
        }
    }

    /// Number of elements, `None` for the rationals.
    pub fn order(&self) -> Option<u64> {
        match self {
            Field::Rational => None,
            Field::Prime(p) => Some(*p),
        }
    }

    pub fn zero(&self) -> Scalar {
        self.int(0)
    }

    pub fn one(&self) -> Scalar {
        self.int(1)
    }

    pub fn int(&self, n: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Q(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => Scalar::Fp {
                residue: n.rem_euclid(*p as i64) as u64,
                modulus: *p,
            },
        }
    }

    pub fn ratio(&self, num: i64, den: i64) -> Result<Scalar, LaError> {
        if den == 0 {
            return Err(LaError::DivisionByZero);
        }
        let d = self.int(den).inv().ok_or(LaError::DivisionByZero)?;
        Ok(&self.int(num) * &d)
    }

    pub fn from_bigint(&self, n: &BigInt) -> Scalar {
        match self {
            Field::Rational => Scalar::Q(BigRational::from_integer(n.clone())),
            Field::Prime(p) => {
                let r = n.mod_floor(&BigInt::from(*p));
                Scalar::Fp {
                    residue: r.to_u64().unwrap_or(0),
                    modulus: *p,
                }
            }
        }
    }

    /// Parses `"3"`, `"-2/5"` into a field element.
    pub fn parse(&self, text: &str) -> Result<Scalar, LaError> {
        let text = text.trim();
        let bad = || LaError::Parse(text.to_string());
        match text.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                let dn = self.from_bigint(&d).inv().ok_or(LaError::DivisionByZero)?;
                Ok(&self.from_bigint(&n) * &dn)
            }
            None => {
                let n: BigInt = text.parse().map_err(|_| bad())?;
                Ok(self.from_bigint(&n))
            }
        }
    }

    /// Every element of a prime field, in residue order.
    pub fn elements(&self) -> Option<Vec<Scalar>> {
        match self {
            Field::Rational => None,
            Field::Prime(p) => Some((0..*p).map(|r| Scalar::Fp { residue: r, modulus: *p }).collect()),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F{p}"),
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact field element. Rationals are kept in lowest terms by `BigRational`,
/// prime-field residues in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(BigRational),
    Fp { residue: u64, modulus: u64 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Q(_) => Field::Rational,
            Scalar::Fp { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_zero(),
            Scalar::Fp { residue, .. } => *residue == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_one(),
            Scalar::Fp { residue, .. } => *residue == 1,
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        match self {
            Scalar::Q(q) if q.is_zero() => None,
            Scalar::Q(q) => Some(Scalar::Q(q.recip())),
            Scalar::Fp { residue: 0, .. } => None,
            Scalar::Fp { residue, modulus } => Some(Scalar::Fp {
                residue: pow_mod(*residue, modulus - 2, *modulus),
                modulus: *modulus,
            }),
        }
    }

    pub fn pow(&self, mut e: u64) -> Scalar {
        let mut base = self.clone();
        let mut acc = self.field().one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Residue in `[0, p)` for prime-field elements.
    pub fn residue(&self) -> Option<u64> {
        match self {
            Scalar::Fp { residue, .. } => Some(*residue),
            Scalar::Q(_) => None,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Q(q) => Some(q),
            Scalar::Fp { .. } => None,
        }
    }

    /// `self += a * b` without an intermediate clone of `self`.
    pub fn add_mul_assign(&mut self, a: &Scalar, b: &Scalar) {
        match (self, a, b) {
            (
                Scalar::Fp { residue, modulus },
                Scalar::Fp { residue: x, .. },
                Scalar::Fp { residue: y, .. },
            ) => {
                let m = *modulus as u128;
                *residue = ((*residue as u128 + (*x as u128) * (*y as u128) % m) % m) as u64;
            }
            (s, a, b) => {
                let t = &*s + &(a * b);
                *s = t;
            }
        }
    }

    /// Canonical text form: `3`, `-2/5`, or the residue for prime fields.
    pub fn to_text(&self) -> String {
        self.to_string()
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_negative(),
            Scalar::Fp { .. } => false,
        }
    }
}

fn pow_mod(b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc: u128 = 1;
    let mut base = (b % m) as u128;
    let m128 = m as u128;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % m128;
        }
        base = base * base % m128;
        e >>= 1;
    }
    acc as u64
}

fn mismatch(a: &Scalar, b: &Scalar) -> ! {
    panic!("field mismatch: {} vs {}", a.field(), b.field())
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a + b),
            (Scalar::Fp { residue: a, modulus: p }, Scalar::Fp { residue: b, modulus: q }) if p == q => {
                Scalar::Fp {
                    residue: ((*a as u128 + *b as u128) % *p as u128) as u64,
                    modulus: *p,
                }
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a - b),
            (Scalar::Fp { residue: a, modulus: p }, Scalar::Fp { residue: b, modulus: q }) if p == q => {
                Scalar::Fp {
                    residue: ((*a as u128 + *p as u128 - *b as u128) % *p as u128) as u64,
                    modulus: *p,
                }
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a * b),
            (Scalar::Fp { residue: a, modulus: p }, Scalar::Fp { residue: b, modulus: q }) if p == q => {
                Scalar::Fp {
                    residue: ((*a as u128 * *b as u128) % *p as u128) as u64,
                    modulus: *p,
                }
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(-a),
            Scalar::Fp { residue, modulus } => Scalar::Fp {
                residue: (modulus - residue) % modulus,
                modulus: *modulus,
            },
        }
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(q) if q.denom().is_one() => write!(f, "{}", q.numer()),
            Scalar::Q(q) => write!(f, "{}/{}", q.numer(), q.denom()),
            Scalar::Fp { residue, .. } => write!(f, "{residue}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_are_reduced() {
        let q = Field::Rational;
        let a = q.ratio(4, -6).unwrap();
        assert_eq!(a.to_string(), "-2/3");
        assert_eq!(q.parse("10/4").unwrap(), q.ratio(5, 2).unwrap());
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = Field::prime(7).unwrap();
        let a = f.int(-1);
        assert_eq!(a.residue(), Some(6));
        let inv = f.int(3).inv().unwrap();
        assert!((&inv * &f.int(3)).is_one());
        assert_eq!(f.parse("1/2").unwrap(), f.int(4));
        assert!(f.int(0).inv().is_none());
    }

    #[test]
    fn composite_modulus_rejected() {
        assert!(Field::prime(9).is_err());
        assert!(Field::prime(1).is_err());
        assert!(Field::prime(2).is_ok());
    }

    #[test]
    fn add_mul_assign_matches_plain_ops() {
        for field in [Field::Rational, Field::Prime(5)] {
            let mut s = field.int(3);
            s.add_mul_assign(&field.int(4), &field.int(-2));
            assert_eq!(s, field.int(-5));
        }
    }
}
