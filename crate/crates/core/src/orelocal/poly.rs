use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::dgpoly::{Monomial, Poly, PolyRing};
use crate::exactla::{Field, Scalar};

use super::fraction::{Fraction, FractionRing};
use super::{Backend, LocError, Mode, MultSet};

/// Localisation of a commutative polynomial dg-ring at the monoid generated
/// by monomials; the result is the ring with the occurring variables inverted.
///
/// Fractions are compared by cross-multiplication, which is valid because the
/// ring is a commutative domain.
#[derive(Clone, Debug)]
pub struct PolyLocal {
    base: PolyRing,
    laurent: PolyRing,
    gens: Vec<Poly>,
    pub set: MultSet,
    corrupt: bool,
}

pub fn localise_poly(ring: &PolyRing, gens: &[Poly], mode: Mode) -> Result<PolyLocal, LocError> {
    let mut inverted = Vec::new();
    let mut degrees = Vec::new();
    for g in gens {
        ring.check(g)?;
        let Some((m, _)) = g.as_term() else {
            if g.is_zero() {
                return Err(LocError::NotRegular(ring.render(g), String::new()));
            }
            return Err(LocError::Unsupported(format!(
                "denominator `{}` is not a monomial; only monomial sets are localised",
                ring.render(g)
            )));
        };
        if mode == Mode::Kernel && !ring.d(g).is_zero() {
            return Err(LocError::NotACycle(ring.render(g)));
        }
        degrees.push(ring.monomial_degree(m));
        for (i, &e) in m.0.iter().enumerate() {
            if e > 0 && !inverted.contains(&i) {
                inverted.push(i);
            }
        }
    }
    let in_kernel = gens.iter().all(|g| ring.d(g).is_zero());
    inverted.sort();
    Ok(PolyLocal {
        set: MultSet {
            backend: Backend::Poly,
            generators: gens.iter().map(|g| ring.render(g)).collect(),
            degrees,
            mode,
            in_kernel,
            regular: true,
            certificate: "nonzero monomials in a commutative domain are regular; Ore condition holds by commutativity; ass(S) = 0"
                .into(),
        },
        base: ring.clone(),
        laurent: ring.with_laurent(&inverted),
        gens: gens.to_vec(),
        corrupt: false,
    })
}

impl PolyLocal {
    pub fn base(&self) -> &PolyRing {
        &self.base
    }

    /// The ring `R_S`, with the variables occurring in `S` inverted.
    pub fn target(&self) -> &PolyRing {
        &self.laurent
    }

    pub fn generators(&self) -> &[Poly] {
        &self.gens
    }

    /// Negative control: the same localisation with the first sign of `d_S` flipped.
    #[doc(hidden)]
    pub fn with_corrupted_sign(&self) -> PolyLocal {
        PolyLocal {
            corrupt: true,
            ..self.clone()
        }
    }

    /// The element `s⁻¹b` of `R_S`.
    pub fn value(&self, p: &Fraction<Poly>) -> Poly {
        let inv = self.laurent.inverse(&p.den).expect("denominators are monomials");
        inv.mul(&p.num)
    }

    fn random_monomial(&self, rng: &mut ChaCha8Rng) -> Monomial {
        Monomial(
            self.base
                .generators()
                .iter()
                .map(|g| if g.laurent { rng.gen_range(-5..=5) } else { rng.gen_range(0..=5) })
                .collect(),
        )
    }

    fn random_coeff(&self, rng: &mut ChaCha8Rng) -> Scalar {
        let f = self.base.field();
        loop {
            let c = f.int(rng.gen_range(-3..=3));
            if !c.is_zero() {
                return c;
            }
        }
    }
}

impl FractionRing for PolyLocal {
    type Elem = Poly;
    type Base = Poly;

    fn field(&self) -> Field {
        self.base.field()
    }

    fn one(&self) -> Poly {
        self.base.one()
    }

    fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        a.mul(b)
    }

    fn d(&self, a: &Poly) -> Poly {
        self.laurent.d(a)
    }

    fn degree(&self, a: &Poly) -> Option<i64> {
        if a.is_zero() {
            return Some(0);
        }
        self.base.homogeneous_degree(a)
    }

    fn frac_mul(&self, p: &Fraction<Poly>, q: &Fraction<Poly>) -> Fraction<Poly> {
        Fraction::new(p.num.mul(&q.num), p.den.mul(&q.den))
    }

    fn frac_add(&self, p: &Fraction<Poly>, q: &Fraction<Poly>) -> Fraction<Poly> {
        Fraction::new(p.num.mul(&q.den).add(&q.num.mul(&p.den)), p.den.mul(&q.den))
    }

    fn frac_scale(&self, c: &Scalar, p: &Fraction<Poly>) -> Fraction<Poly> {
        Fraction::new(p.num.scale(c), p.den.clone())
    }

    fn frac_eq(&self, p: &Fraction<Poly>, q: &Fraction<Poly>) -> bool {
        p.num.mul(&q.den) == q.num.mul(&p.den)
    }

    fn frac_is_zero(&self, p: &Fraction<Poly>) -> bool {
        p.num.is_zero()
    }

    fn direct_d(&self, p: &Fraction<Poly>) -> Fraction<Poly> {
        Fraction::new(self.laurent.d(&self.value(p)), self.one())
    }

    fn render(&self, p: &Fraction<Poly>) -> String {
        format!("({}, {})", self.base.render(&p.num), self.base.render(&p.den))
    }

    fn lambda(&self, r: &Poly) -> Fraction<Poly> {
        Fraction::new(r.clone(), self.one())
    }

    fn base_d(&self, r: &Poly) -> Poly {
        self.base.d(r)
    }

    fn lambda_kernel_expected(&self, r: &Poly) -> bool {
        r.is_zero()
    }

    fn render_base(&self, r: &Poly) -> String {
        self.base.render(r)
    }

    fn regular(&self) -> bool {
        true
    }

    fn sample_numerator(&self, rng: &mut ChaCha8Rng) -> Poly {
        let m = self.random_monomial(rng);
        let k = self.base.monomial_degree(&m);
        let mut p = Poly::term(self.field(), m, self.random_coeff(rng));
        if let Ok(basis) = self.base.degree_basis(k) {
            if !basis.is_empty() {
                for _ in 0..rng.gen_range(0..=2) {
                    let extra = basis[rng.gen_range(0..basis.len())].clone();
                    p = p.add(&Poly::term(self.field(), extra, self.random_coeff(rng)));
                }
            }
        }
        p
    }

    fn sample_denominator(&self, rng: &mut ChaCha8Rng) -> Poly {
        let mut s = self.one();
        if self.gens.is_empty() {
            return s;
        }
        for _ in 0..rng.gen_range(0..=3) {
            s = s.mul(&self.gens[rng.gen_range(0..self.gens.len())]);
        }
        s
    }

    fn sample_base(&self, rng: &mut ChaCha8Rng) -> Poly {
        let mut p = self.base.zero();
        for _ in 0..rng.gen_range(0..=4) {
            let m = self.random_monomial(rng);
            p = p.add(&Poly::term(self.field(), m, self.random_coeff(rng)));
        }
        p
    }

    fn corrupted(&self) -> bool {
        self.corrupt
    }
}
