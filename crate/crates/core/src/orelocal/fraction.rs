use std::fmt::Debug;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::dgcore::sign;
use crate::exactla::{Field, Scalar};

/// The pair `(num, den)`, read as `den⁻¹ · num`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fraction<E> {
    pub num: E,
    pub den: E,
}

impl<E> Fraction<E> {
    pub fn new(num: E, den: E) -> Fraction<E> {
        Fraction { num, den }
    }
}

/// Arithmetic of a localisation `R_S` presented through fractions.
///
/// Numerators live in a ring `N` (the ring itself, or its quotient by
/// `ass(S)`); `λ: R → R_S` sends a base element `r` to `(λ(r), 1)`.
pub trait FractionRing {
    type Elem: Clone + Debug;
    type Base: Clone + Debug;

    fn field(&self) -> Field;
    fn one(&self) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Differential of the numerator ring.
    fn d(&self, a: &Self::Elem) -> Self::Elem;
    fn degree(&self, a: &Self::Elem) -> Option<i64>;

    fn frac_mul(&self, p: &Fraction<Self::Elem>, q: &Fraction<Self::Elem>) -> Fraction<Self::Elem>;
    fn frac_add(&self, p: &Fraction<Self::Elem>, q: &Fraction<Self::Elem>) -> Fraction<Self::Elem>;
    fn frac_scale(&self, c: &Scalar, p: &Fraction<Self::Elem>) -> Fraction<Self::Elem>;
    fn frac_eq(&self, p: &Fraction<Self::Elem>, q: &Fraction<Self::Elem>) -> bool;
    fn frac_is_zero(&self, p: &Fraction<Self::Elem>) -> bool;
    /// Differential of the value `s⁻¹b`, computed without the fraction formula.
    fn direct_d(&self, p: &Fraction<Self::Elem>) -> Fraction<Self::Elem>;
    fn render(&self, p: &Fraction<Self::Elem>) -> String;

    fn lambda(&self, r: &Self::Base) -> Fraction<Self::Elem>;
    fn base_d(&self, r: &Self::Base) -> Self::Base;
    /// Whether `λ(r) = 0` is what theory predicts for `r`: `r = 0` for regular
    /// sets, `r ∈ ass(S)` otherwise.
    fn lambda_kernel_expected(&self, r: &Self::Base) -> bool;
    fn render_base(&self, r: &Self::Base) -> String;
    /// `S` consists of regular elements, so `λ` should be injective.
    fn regular(&self) -> bool;

    fn sample_numerator(&self, rng: &mut ChaCha8Rng) -> Self::Elem;
    fn sample_denominator(&self, rng: &mut ChaCha8Rng) -> Self::Elem;
    fn sample_base(&self, rng: &mut ChaCha8Rng) -> Self::Base;

    /// Test hook: flips the sign of the first term of `d_S`.
    fn corrupted(&self) -> bool {
        false
    }

    fn frac_degree(&self, p: &Fraction<Self::Elem>) -> Option<i64> {
        Some(self.degree(&p.num)? - self.degree(&p.den)?)
    }
}

/// `d_S(b, s) = (-1)^{|s|+1} (d(s), s)·(b, s) + (-1)^{|s|} (d(b), s)`.
///
/// The formula is linear in `b`, so `b` need not be homogeneous; `s` must be.
pub fn d_s<R: FractionRing + ?Sized>(ring: &R, q: &Fraction<R::Elem>) -> Fraction<R::Elem> {
    let f = ring.field();
    let ds = ring.degree(&q.den).expect("denominators are homogeneous");
    let mut first = sign(f, ds + 1);
    if ring.corrupted() {
        first = -first;
    }
    let ds_s = Fraction::new(ring.d(&q.den), q.den.clone());
    let a = ring.frac_scale(&first, &ring.frac_mul(&ds_s, q));
    let b = ring.frac_scale(&sign(f, ds), &Fraction::new(ring.d(&q.num), q.den.clone()));
    ring.frac_add(&a, &b)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyCheck {
    pub name: String,
    pub passed: bool,
    pub samples: usize,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
    pub seed: u64,
    pub samples: usize,
    pub checks: Vec<PropertyCheck>,
}

impl PropertyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&PropertyCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

type CheckFn<'a, R> = Box<dyn Fn(&R, &mut ChaCha8Rng) -> Result<(), String> + 'a>;

/// Randomised exact checks of the localisation; each stops at its first failure.
///
/// Checks: representative independence, Leibniz, `d_S² = 0`, `d_S∘λ = λ∘d`,
/// the kernel of `λ`, agreement with the directly computed differential, and
/// the quotient-ring axioms `λ(s)` invertible and `λ(s)·q ∈ im λ`.
pub fn verify_localisation<R: FractionRing>(ring: &R, samples: usize, seed: u64) -> PropertyReport {
    let mut checks: Vec<(&str, CheckFn<R>)> = vec![
        (
            "representative-independence",
            Box::new(|r: &R, rng: &mut ChaCha8Rng| {
                let a = r.sample_numerator(rng);
                let s = r.sample_denominator(rng);
                let t = r.sample_denominator(rng);
                let p = Fraction::new(a.clone(), s.clone());
                let q = Fraction::new(r.mul(&t, &a), r.mul(&t, &s));
                if !r.frac_eq(&p, &q) {
                    return Err(format!("{} != {}", r.render(&p), r.render(&q)));
                }
                let (dp, dq) = (d_s(r, &p), d_s(r, &q));
                if r.frac_eq(&dp, &dq) {
                    Ok(())
                } else {
                    Err(format!("d{} = {} but d{} = {}", r.render(&p), r.render(&dp), r.render(&q), r.render(&dq)))
                }
            }),
        ),
        (
            "leibniz",
            Box::new(|r: &R, rng: &mut ChaCha8Rng| {
                let p = Fraction::new(r.sample_numerator(rng), r.sample_denominator(rng));
                let q = Fraction::new(r.sample_numerator(rng), r.sample_denominator(rng));
                let deg = r.frac_degree(&p).expect("samples are homogeneous");
                let lhs = d_s(r, &r.frac_mul(&p, &q));
                let rhs = r.frac_add(
                    &r.frac_mul(&d_s(r, &p), &q),
                    &r.frac_scale(&sign(r.field(), deg), &r.frac_mul(&p, &d_s(r, &q))),
                );
                if r.frac_eq(&lhs, &rhs) {
                    Ok(())
                } else {
                    Err(format!(
                        "p = {}, q = {}: d(pq) = {}, d(p)q ± p d(q) = {}",
                        r.render(&p),
                        r.render(&q),
                        r.render(&lhs),
                        r.render(&rhs)
                    ))
                }
            }),
        ),
        (
            "d-squared",
            Box::new(|r: &R, rng: &mut ChaCha8Rng| {
                let p = Fraction::new(r.sample_numerator(rng), r.sample_denominator(rng));
                let dd = d_s(r, &d_s(r, &p));
                if r.frac_is_zero(&dd) {
                    Ok(())
                } else {
                    Err(format!("d(d({})) = {}", r.render(&p), r.render(&dd)))
                }
            }),
        ),
        (
            "lambda-commutes-with-d",
            Box::new(|r: &R, rng: &mut ChaCha8Rng| {
                let x = r.sample_base(rng);
                let lhs = d_s(r, &r.lambda(&x));
                let rhs = r.lambda(&r.base_d(&x));
                if r.frac_eq(&lhs, &rhs) {
                    Ok(())
                } else {
                    Err(format!("r = {}: {} vs {}", r.render_base(&x), r.render(&lhs), r.render(&rhs)))
                }
            }),
        ),
        (
            if ring.regular() { "lambda-injective" } else { "lambda-kernel-is-ass" },
            Box::new(|r: &R, rng: &mut ChaCha8Rng| {
                let x = r.sample_base(rng);
                let zero = r.frac_is_zero(&r.lambda(&x));
                if zero == r.lambda_kernel_expected(&x) {
                    Ok(())
                } else {
                    Err(format!("r = {}: λ(r) = 0 is {zero}", r.render_base(&x)))
                }
            }),
        ),
        (
            "direct-differential",
            Box::new(|r: &R, rng: &mut ChaCha8Rng| {
                let p = Fraction::new(r.sample_numerator(rng), r.sample_denominator(rng));
                let (a, b) = (d_s(r, &p), r.direct_d(&p));
                if r.frac_eq(&a, &b) {
                    Ok(())
                } else {
                    Err(format!("{}: formula {} vs direct {}", r.render(&p), r.render(&a), r.render(&b)))
                }
            }),
        ),
        (
            "quotient-ring-axioms",
            Box::new(|r: &R, rng: &mut ChaCha8Rng| {
                let a = r.sample_numerator(rng);
                let s = r.sample_denominator(rng);
                let one = r.one();
                let ls = Fraction::new(s.clone(), one.clone());
                let inv = Fraction::new(one.clone(), s.clone());
                let unit = Fraction::new(one.clone(), one.clone());
                if !r.frac_eq(&r.frac_mul(&ls, &inv), &unit) || !r.frac_eq(&r.frac_mul(&inv, &ls), &unit) {
                    return Err(format!("λ({}) is not inverted", r.render(&ls)));
                }
                let q = Fraction::new(a.clone(), s);
                if r.frac_eq(&r.frac_mul(&ls, &q), &Fraction::new(a, one)) {
                    Ok(())
                } else {
                    Err(format!("λ(s)·q ≠ numerator for q = {}", r.render(&q)))
                }
            }),
        ),
    ];
    let mut out = Vec::new();
    for (k, (name, check)) in checks.drain(..).enumerate() {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_mul(0x9e37_79b9_7f4a_7c15).wrapping_add(k as u64));
        let mut entry = PropertyCheck {
            name: name.to_string(),
            passed: true,
            samples: 0,
            witness: None,
        };
        for i in 0..samples {
            entry.samples = i + 1;
            if let Err(w) = check(ring, &mut rng) {
                entry.passed = false;
                entry.witness = Some(format!("sample {i}: {w}"));
                break;
            }
        }
        out.push(entry);
    }
    PropertyReport {
        seed,
        samples,
        checks: out,
    }
}
