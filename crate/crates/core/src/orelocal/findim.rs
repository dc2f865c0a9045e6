use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::dgcore::DgAlgebra;
use crate::dgideal::{ass_ideal, IdealError};
use crate::exactla::{vector, Field, Mat, Scalar, Subspace};

use super::fraction::{Fraction, FractionRing};
use super::{Backend, LocError, Mode, MultSet};

/// Localisation of a finite-dimensional dg-algebra.
///
/// Homogeneous regular elements of a finite-dimensional algebra are units, so
/// `R_S` is the numerator ring itself: `R` for regular sets, `R/ass(S)` for
/// sets of cycles. Fractions are still handled formally so that `d_S` can be
/// compared with the differential of the value.
#[derive(Clone, Debug)]
pub struct FindimLocal {
    base: DgAlgebra,
    target: DgAlgebra,
    lambda: Mat,
    ass: Subspace,
    gens: Vec<Vec<Scalar>>,
    pub set: MultSet,
    corrupt: bool,
}

pub fn localise_findim(alg: &DgAlgebra, gens: &[Vec<Scalar>], mode: Mode) -> Result<FindimLocal, LocError> {
    let f = alg.field();
    let n = alg.dim();
    let mut degrees = Vec::new();
    for g in gens {
        match alg.homogeneous_degree(g) {
            Some(k) => degrees.push(k),
            None => return Err(LocError::InhomogeneousDenominator(alg.render(g))),
        }
    }
    let in_kernel = gens.iter().all(|g| vector::is_zero(&alg.d(g)));
    let regular = gens.iter().all(|g| alg.is_regular(g));
    let (target, lambda, ass, certificate) = match mode {
        Mode::Regular => {
            if let Some(g) = gens.iter().find(|g| !alg.is_regular(g)) {
                return Err(LocError::NotRegular(alg.render(g), String::new()));
            }
            (
                alg.clone(),
                Mat::identity(f, n),
                Subspace::zero(f, n),
                "homogeneous regular elements of a finite-dimensional algebra are units; Ore condition holds".to_string(),
            )
        }
        Mode::Kernel => {
            let ass = ass_ideal(alg, gens).map_err(|e| match e {
                IdealError::NotACycle(s) => LocError::NotACycle(s),
                IdealError::NotHomogeneous(s) => LocError::InhomogeneousDenominator(s),
                other => LocError::Ideal(other),
            })?;
            if !ass.is_certified() {
                return Err(LocError::NotOre("ass(S) is not certified as a two-sided dg-ideal".into()));
            }
            let (q, proj) = alg.quotient(&ass.space)?;
            for g in gens {
                if !q.is_regular(&proj.mul_vec(g)) {
                    return Err(LocError::NotRegular(alg.render(g), " modulo ass(S)".into()));
                }
            }
            let cert = format!(
                "cycles; ass(S) of dimension {} is a two-sided dg-ideal; images in the quotient are units",
                ass.space.dim()
            );
            (q, proj, ass.space, cert)
        }
    };
    let images = gens.iter().map(|g| lambda.mul_vec(g)).collect();
    Ok(FindimLocal {
        set: MultSet {
            backend: Backend::Findim,
            generators: gens.iter().map(|g| alg.render(g)).collect(),
            degrees,
            mode,
            in_kernel,
            regular,
            certificate,
        },
        base: alg.clone(),
        target,
        lambda,
        ass,
        gens: images,
        corrupt: false,
    })
}

impl FindimLocal {
    pub fn base(&self) -> &DgAlgebra {
        &self.base
    }

    /// The algebra `R_S`.
    pub fn target(&self) -> &DgAlgebra {
        &self.target
    }

    pub fn lambda_matrix(&self) -> &Mat {
        &self.lambda
    }

    pub fn ass(&self) -> &Subspace {
        &self.ass
    }

    /// Images of the generators of `S` in `R_S`.
    pub fn generators(&self) -> &[Vec<Scalar>] {
        &self.gens
    }

    /// Negative control: the same localisation with the first sign of `d_S` flipped.
    #[doc(hidden)]
    pub fn with_corrupted_sign(&self) -> FindimLocal {
        FindimLocal {
            corrupt: true,
            ..self.clone()
        }
    }

    fn inv(&self, s: &[Scalar]) -> Vec<Scalar> {
        self.target.invert(s).expect("elements of S are units in R_S")
    }

    /// The element `s⁻¹b` of `R_S`.
    pub fn value(&self, p: &Fraction<Vec<Scalar>>) -> Vec<Scalar> {
        self.target.mul(&self.inv(&p.den), &p.num)
    }

    fn random_coeff(&self, rng: &mut ChaCha8Rng) -> Scalar {
        self.target.field().int(rng.gen_range(-3..=3))
    }
}

fn random_vector(field: Field, n: usize, support: &[usize], rng: &mut ChaCha8Rng) -> Vec<Scalar> {
    let mut v = vector::zeros(field, n);
    for &i in support {
        v[i] = field.int(rng.gen_range(-3..=3));
    }
    v
}

impl FractionRing for FindimLocal {
    type Elem = Vec<Scalar>;
    type Base = Vec<Scalar>;

    fn field(&self) -> Field {
        self.target.field()
    }

    fn one(&self) -> Vec<Scalar> {
        self.target.unit().to_vec()
    }

    fn mul(&self, a: &Vec<Scalar>, b: &Vec<Scalar>) -> Vec<Scalar> {
        self.target.mul(a, b)
    }

    fn d(&self, a: &Vec<Scalar>) -> Vec<Scalar> {
        self.target.d(a)
    }

    fn degree(&self, a: &Vec<Scalar>) -> Option<i64> {
        if vector::is_zero(a) {
            return Some(0);
        }
        self.target.homogeneous_degree(a)
    }

    /// `s⁻¹a · t⁻¹b = s⁻¹(a t⁻¹ b)`.
    fn frac_mul(&self, p: &Fraction<Vec<Scalar>>, q: &Fraction<Vec<Scalar>>) -> Fraction<Vec<Scalar>> {
        let a = &self.target;
        Fraction::new(a.mul(&a.mul(&p.num, &self.inv(&q.den)), &q.num), p.den.clone())
    }

    /// `s⁻¹a + t⁻¹b = s⁻¹(a + s t⁻¹ b)`.
    fn frac_add(&self, p: &Fraction<Vec<Scalar>>, q: &Fraction<Vec<Scalar>>) -> Fraction<Vec<Scalar>> {
        let a = &self.target;
        let shifted = a.mul(&a.mul(&p.den, &self.inv(&q.den)), &q.num);
        Fraction::new(a.add(&p.num, &shifted), p.den.clone())
    }

    fn frac_scale(&self, c: &Scalar, p: &Fraction<Vec<Scalar>>) -> Fraction<Vec<Scalar>> {
        Fraction::new(self.target.scale(c, &p.num), p.den.clone())
    }

    fn frac_eq(&self, p: &Fraction<Vec<Scalar>>, q: &Fraction<Vec<Scalar>>) -> bool {
        self.value(p) == self.value(q)
    }

    fn frac_is_zero(&self, p: &Fraction<Vec<Scalar>>) -> bool {
        vector::is_zero(&p.num)
    }

    fn direct_d(&self, p: &Fraction<Vec<Scalar>>) -> Fraction<Vec<Scalar>> {
        Fraction::new(self.target.d(&self.value(p)), self.one())
    }

    fn render(&self, p: &Fraction<Vec<Scalar>>) -> String {
        format!("({}, {})", self.target.render(&p.num), self.target.render(&p.den))
    }

    fn lambda(&self, r: &Vec<Scalar>) -> Fraction<Vec<Scalar>> {
        Fraction::new(self.lambda.mul_vec(r), self.one())
    }

    fn base_d(&self, r: &Vec<Scalar>) -> Vec<Scalar> {
        self.base.d(r)
    }

    fn lambda_kernel_expected(&self, r: &Vec<Scalar>) -> bool {
        self.ass.contains_vec(r)
    }

    fn render_base(&self, r: &Vec<Scalar>) -> String {
        self.base.render(r)
    }

    fn regular(&self) -> bool {
        self.set.regular
    }

    fn sample_numerator(&self, rng: &mut ChaCha8Rng) -> Vec<Scalar> {
        let degs = self.target.degree_set();
        if degs.is_empty() {
            return self.one();
        }
        let k = degs[rng.gen_range(0..degs.len())];
        random_vector(self.field(), self.target.dim(), &self.target.degree_support(k), rng)
    }

    fn sample_denominator(&self, rng: &mut ChaCha8Rng) -> Vec<Scalar> {
        let mut s = self.one();
        if self.gens.is_empty() {
            return s;
        }
        for _ in 0..rng.gen_range(0..=3) {
            let g = &self.gens[rng.gen_range(0..self.gens.len())];
            s = self.target.mul(&s, g);
        }
        s
    }

    fn sample_base(&self, rng: &mut ChaCha8Rng) -> Vec<Scalar> {
        let n = self.base.dim();
        if !self.ass.is_zero() && rng.gen_range(0..4) == 0 {
            let coords: Vec<Scalar> = (0..self.ass.dim()).map(|_| self.random_coeff(rng)).collect();
            return self.ass.combine(&coords);
        }
        let all: Vec<usize> = (0..n).collect();
        random_vector(self.base.field(), n, &all, rng)
    }

    fn corrupted(&self) -> bool {
        self.corrupt
    }
}
