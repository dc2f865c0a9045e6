//! Dense univariate polynomials over a ground field, enough for minimal
//! polynomials and root finding.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{vector, Echelon, Field, Mat, Scalar};

/// Coefficients from the constant term upward, with no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UPoly {
    field: Field,
    coeffs: Vec<Scalar>,
}

impl UPoly {
    pub fn new(field: Field, mut coeffs: Vec<Scalar>) -> UPoly {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        UPoly { field, coeffs }
    }

    pub fn zero(field: Field) -> UPoly {
        UPoly::new(field, vec![])
    }

    pub fn constant(c: Scalar) -> UPoly {
        UPoly::new(c.field(), vec![c])
    }

    /// `x - a`
    pub fn linear(a: &Scalar) -> UPoly {
        let f = a.field();
        UPoly::new(f, vec![-a, f.one()])
    }

    pub fn x(field: Field) -> UPoly {
        UPoly::new(field, vec![field.zero(), field.one()])
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Scalar {
        self.coeffs.last().cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn monic(&self) -> UPoly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.lead().inv().expect("nonzero lead");
        UPoly::new(self.field, vector::scale(&inv, &self.coeffs))
    }

    pub fn add(&self, o: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let z = self.field.zero();
        let c = (0..n)
            .map(|i| self.coeffs.get(i).unwrap_or(&z) + o.coeffs.get(i).unwrap_or(&z))
            .collect();
        UPoly::new(self.field, c)
    }

    pub fn sub(&self, o: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let z = self.field.zero();
        let c = (0..n)
            .map(|i| self.coeffs.get(i).unwrap_or(&z) - o.coeffs.get(i).unwrap_or(&z))
            .collect();
        UPoly::new(self.field, c)
    }

    pub fn mul(&self, o: &UPoly) -> UPoly {
        if self.is_zero() || o.is_zero() {
            return UPoly::zero(self.field);
        }
        let mut c = vec![self.field.zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                c[i + j].add_mul_assign(a, b);
            }
        }
        UPoly::new(self.field, c)
    }

    pub fn divrem(&self, d: &UPoly) -> (UPoly, UPoly) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let dd = d.coeffs.len() - 1;
        let inv = d.lead().inv().expect("nonzero lead");
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (UPoly::zero(self.field), self.clone());
        }
        let mut q = vec![self.field.zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = &r[k + dd] * &inv;
            if c.is_zero() {
                continue;
            }
            let nc = -&c;
            for (j, dj) in d.coeffs.iter().enumerate() {
                r[k + j].add_mul_assign(&nc, dj);
            }
            q[k] = c;
        }
        (UPoly::new(self.field, q), UPoly::new(self.field, r))
    }

    pub fn rem(&self, d: &UPoly) -> UPoly {
        self.divrem(d).1
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, o: &UPoly) -> UPoly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> UPoly {
        let c = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, a)| &self.field.int(i as i64) * a)
            .collect();
        UPoly::new(self.field, c)
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = self.field.zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// Evaluates at a square matrix by Horner's rule.
    pub fn eval_mat(&self, m: &Mat) -> Mat {
        let n = m.rows();
        let mut acc = Mat::zeros(self.field, n, n);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(m).add(&Mat::identity(self.field, n).scale(c));
        }
        acc
    }

    /// `self^e mod m`.
    pub fn powmod(&self, mut e: BigInt, m: &UPoly) -> UPoly {
        let mut base = self.rem(m);
        let mut acc = UPoly::constant(self.field.one()).rem(m);
        let two = BigInt::from(2);
        while e.is_positive() {
            if e.is_odd() {
                acc = acc.mul(&base).rem(m);
            }
            e = e.div_floor(&two);
            if e.is_positive() {
                base = base.mul(&base).rem(m);
            }
        }
        acc
    }

    /// Distinct roots lying in the ground field, sorted by text form for determinism.
    pub fn roots(&self) -> Vec<Scalar> {
        if self.degree().unwrap_or(0) == 0 {
            return vec![];
        }
        let mut out = match self.field {
            Field::Prime(p) => self.roots_fp(p),
            Field::Rational => self.roots_q(),
        };
        out.sort_by_key(|s| s.to_text());
        out.dedup();
        out
    }

    fn roots_fp(&self, p: u64) -> Vec<Scalar> {
        if p <= 1024 {
            return self
                .field
                .elements()
                .unwrap()
                .into_iter()
                .filter(|a| self.eval(a).is_zero())
                .collect();
        }
        // Split off the product of linear factors, then Cantor–Zassenhaus.
        let x = UPoly::x(self.field);
        let xp = x.powmod(BigInt::from(p), self);
        let g = self.gcd(&xp.sub(&x));
        let mut rng = ChaCha8Rng::seed_from_u64(p);
        let mut out = Vec::new();
        split_linear(&g, p, &mut rng, &mut out);
        out
    }

    fn roots_q(&self) -> Vec<Scalar> {
        // Clear denominators, then apply the rational root test.
        let rats: Vec<_> = self.coeffs.iter().map(|c| c.as_rational().unwrap().clone()).collect();
        let mut l = BigInt::one();
        for r in &rats {
            l = l.lcm(r.denom());
        }
        let ints: Vec<BigInt> = rats.iter().map(|r| (r * &l).to_integer()).collect();
        let mut out = Vec::new();
        let low = ints.iter().position(|c| !c.is_zero()).unwrap_or(0);
        if low > 0 {
            out.push(self.field.zero());
        }
        let a0 = ints[low].abs();
        let an = ints.last().unwrap().abs();
        let (Some(dp), Some(dq)) = (divisors(&a0), divisors(&an)) else {
            return out;
        };
        for pnum in &dp {
            for q in &dq {
                for sgn in [1i64, -1] {
                    let cand = self
                        .field
                        .from_bigint(&(pnum * sgn))
                        .clone();
                    let cand = &cand * &self.field.from_bigint(q).inv().unwrap();
                    if self.eval(&cand).is_zero() {
                        out.push(cand);
                    }
                }
            }
        }
        out
    }
}

fn split_linear(g: &UPoly, p: u64, rng: &mut ChaCha8Rng, out: &mut Vec<Scalar>) {
    let f = g.field();
    match g.degree() {
        None | Some(0) => {}
        Some(1) => {
            let m = g.monic();
            out.push(-&m.coeffs()[0]);
        }
        Some(_) => loop {
            let a = f.int(rng.gen_range(0..p as i64));
            let h = UPoly::linear(&-&a).powmod(BigInt::from((p - 1) / 2), g);
            let d = g.gcd(&h.sub(&UPoly::constant(f.one())));
            let dd = d.degree().unwrap_or(0);
            if dd > 0 && Some(dd) < g.degree() {
                let (q, _) = g.divrem(&d);
                split_linear(&d, p, rng, out);
                split_linear(&q, p, rng, out);
                return;
            }
        },
    }
}

/// Positive divisors of `n` by trial division; `None` if `n` is too large to factor cheaply.
fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.to_u64()?;
    if n == 0 || n > 1_000_000_000_000 {
        return None;
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            small.push(BigInt::from(d));
            if d * d != n {
                large.push(BigInt::from(n / d));
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Some(small)
}

/// Minimal polynomial of a square matrix, from the first linear dependency among its powers.
pub fn minimal_polynomial(m: &Mat) -> UPoly {
    let f = m.field();
    let n = m.rows();
    let mut ech = Echelon::new(f, n * n);
    let mut powers: Vec<Vec<Scalar>> = Vec::new();
    let mut p = Mat::identity(f, n);
    loop {
        let flat = p.flatten();
        if ech.contains(&flat) {
            // Solve flat = Σ c_i powers[i].
            let a = Mat::from_cols(f, n * n, &powers);
            let c = a.solve_vec(&flat).expect("dependency exists");
            let mut coeffs: Vec<Scalar> = c.iter().map(|x| -x).collect();
            coeffs.push(f.one());
            return UPoly::new(f, coeffs);
        }
        ech.insert(flat.clone());
        powers.push(flat);
        p = p.mul(m);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_roots_found() {
        let q = Field::Rational;
        // (2x - 1)(x + 3) = 2x^2 + 5x - 3
        let f = UPoly::new(q, vec![q.int(-3), q.int(5), q.int(2)]);
        let r = f.roots();
        assert_eq!(r.len(), 2);
        assert!(r.contains(&q.ratio(1, 2).unwrap()));
        assert!(r.contains(&q.int(-3)));
        // x^2 + 1 has none.
        assert!(UPoly::new(q, vec![q.one(), q.zero(), q.one()]).roots().is_empty());
    }

    #[test]
    fn large_prime_roots_match_brute_force_on_small_prime() {
        let p = 1_000_003u64;
        let f = Field::prime(p).unwrap();
        let g = UPoly::linear(&f.int(5))
            .mul(&UPoly::linear(&f.int(77)))
            .mul(&UPoly::new(f, vec![f.int(2), f.zero(), f.one()]));
        let r = g.roots();
        assert!(r.contains(&f.int(5)) && r.contains(&f.int(77)));
        for x in &r {
            assert!(g.eval(x).is_zero());
        }
    }

    #[test]
    fn minimal_polynomial_of_projection() {
        let q = Field::Rational;
        let m = Mat::from_ints(q, &[&[1, 0, 0], &[0, 0, 0], &[0, 0, 1]]);
        let mp = minimal_polynomial(&m);
        assert_eq!(mp.degree(), Some(2));
        assert!(mp.eval_mat(&m).is_zero());
    }
}
