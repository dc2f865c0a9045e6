use std::collections::BTreeMap;

use serde::Serialize;

use crate::dgcore::sign;
use crate::exactla::{Field, Scalar};
use crate::expr;

use super::poly::{Monomial, Poly};
use super::PolyError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Generator {
    pub name: String,
    pub degree: i64,
    /// The generator is invertible (Laurent).
    pub laurent: bool,
}

/// Commutative graded dg-ring `K[x_1, …, x_n]`, with some generators possibly
/// inverted, and a differential given on generators.
///
/// Multiplication is plain commutative (no Koszul sign); d acts on a monomial,
/// read as the ordered product `x_1^{e_1} ⋯ x_n^{e_n}`, by the signed Leibniz rule.
#[derive(Clone, Debug)]
pub struct PolyRing {
    field: Field,
    gens: Vec<Generator>,
    diff: Vec<Poly>,
}

impl PolyRing {
    /// Checks shapes: one differential value per generator, negative exponents
    /// only on Laurent generators, and d of degree +1.
    pub fn new(field: Field, gens: Vec<Generator>, diff: Vec<Poly>) -> Result<PolyRing, PolyError> {
        if diff.len() != gens.len() {
            return Err(PolyError::Invalid(format!("{} generators but {} differentials", gens.len(), diff.len())));
        }
        let ring = PolyRing { field, gens, diff };
        for (i, dx) in ring.diff.iter().enumerate() {
            ring.check(dx)?;
            if let Some(k) = ring.homogeneous_degree(dx) {
                if k != ring.gens[i].degree + 1 {
                    return Err(PolyError::Invalid(format!(
                        "d({}) has degree {k}, expected {}",
                        ring.gens[i].name,
                        ring.gens[i].degree + 1
                    )));
                }
            } else if !dx.is_zero() {
                return Err(PolyError::Inhomogeneous(ring.render(dx)));
            }
        }
        Ok(ring)
    }

    /// Builds a ring from generator data and differential expressions in the generator names.
    pub fn from_exprs(field: Field, gens: Vec<Generator>, diffs: &[&str]) -> Result<PolyRing, PolyError> {
        let shell = PolyRing {
            field,
            diff: vec![Poly::zero(field, gens.len()); gens.len()],
            gens,
        };
        let diff = diffs.iter().map(|s| shell.parse(s)).collect::<Result<Vec<_>, _>>()?;
        PolyRing::new(field, shell.gens, diff)
    }

    /// `K[X]` with `|X| = -1` and `d(X) = 1`.
    pub fn kx(field: Field) -> PolyRing {
        PolyRing::from_exprs(
            field,
            vec![Generator {
                name: "X".into(),
                degree: -1,
                laurent: false,
            }],
            &["1"],
        )
        .expect("well formed")
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn generators(&self) -> &[Generator] {
        &self.gens
    }

    pub fn nvars(&self) -> usize {
        self.gens.len()
    }

    pub fn names(&self) -> Vec<String> {
        self.gens.iter().map(|g| g.name.clone()).collect()
    }

    pub fn diff_on_generators(&self) -> &[Poly] {
        &self.diff
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.gens.iter().position(|g| g.name == name)
    }

    /// The same ring with the listed generators made invertible.
    pub fn with_laurent(&self, idx: &[usize]) -> PolyRing {
        let mut r = self.clone();
        for &i in idx {
            r.gens[i].laurent = true;
        }
        r
    }

    pub fn zero(&self) -> Poly {
        Poly::zero(self.field, self.nvars())
    }

    pub fn one(&self) -> Poly {
        self.constant(self.field.one())
    }

    pub fn constant(&self, c: Scalar) -> Poly {
        Poly::constant(self.field, self.nvars(), c)
    }

    /// `c · x_i^e`.
    pub fn var_power(&self, i: usize, e: i64) -> Poly {
        Poly::term(self.field, Monomial::var(self.nvars(), i, e), self.field.one())
    }

    pub fn monomial(&self, exps: &[i64]) -> Poly {
        Poly::term(self.field, Monomial(exps.to_vec()), self.field.one())
    }

    /// Rejects negative exponents on non-Laurent generators.
    pub fn check(&self, p: &Poly) -> Result<(), PolyError> {
        for (m, _) in p.terms() {
            for (i, &e) in m.0.iter().enumerate() {
                if e < 0 && !self.gens[i].laurent {
                    return Err(PolyError::NotLocalised(self.gens[i].name.clone()));
                }
            }
        }
        Ok(())
    }

    pub fn monomial_degree(&self, m: &Monomial) -> i64 {
        m.0.iter().zip(&self.gens).map(|(e, g)| e * g.degree).sum()
    }

    pub fn homogeneous_components(&self, p: &Poly) -> BTreeMap<i64, Poly> {
        let mut out: BTreeMap<i64, Poly> = BTreeMap::new();
        for (m, c) in p.terms() {
            out.entry(self.monomial_degree(m))
                .or_insert_with(|| self.zero())
                .add_term(m.clone(), c);
        }
        out
    }

    /// Degree of a nonzero homogeneous polynomial.
    pub fn homogeneous_degree(&self, p: &Poly) -> Option<i64> {
        let comps = self.homogeneous_components(p);
        if comps.len() == 1 {
            comps.keys().next().copied()
        } else {
            None
        }
    }

    pub fn is_homogeneous(&self, p: &Poly) -> bool {
        self.homogeneous_components(p).len() <= 1
    }

    /// Nonzero homogeneous elements are regular: the ring is a domain.
    pub fn is_regular_homogeneous(&self, p: &Poly) -> bool {
        !p.is_zero() && self.homogeneous_degree(p).is_some()
    }

    /// Units are nonzero multiples of monomials in Laurent generators.
    pub fn is_unit(&self, p: &Poly) -> bool {
        match p.as_term() {
            Some((m, _)) => m.0.iter().zip(&self.gens).all(|(&e, g)| e == 0 || g.laurent),
            None => false,
        }
    }

    pub fn inverse(&self, p: &Poly) -> Option<Poly> {
        if !self.is_unit(p) {
            return None;
        }
        let (m, c) = p.as_term()?;
        let inv = Monomial(m.0.iter().map(|e| -e).collect());
        Some(Poly::term(self.field, inv, c.inv()?))
    }

    pub fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        a.mul(b)
    }

    /// `x^e` for a polynomial, `e ≥ 0`.
    pub fn pow(&self, a: &Poly, e: u32) -> Poly {
        (0..e).fold(self.one(), |acc, _| acc.mul(a))
    }

    /// `d(x^e)` for a single generator: `c(e) · x^{e-1} · d(x)` where
    /// `c(e) = Σ_{k<e} (-1)^{k|x|}` for `e > 0`, and for `e < 0` the same sum over
    /// `|e|` terms times `(-1)^{|x|+1}` (from `d(x⁻¹) = (-1)^{|x|+1} x⁻² d(x)`).
    fn d_power(&self, i: usize, e: i64) -> Poly {
        let f = self.field;
        if e == 0 {
            return self.zero();
        }
        let deg = self.gens[i].degree;
        let mut c = f.zero();
        for k in 0..e.unsigned_abs() as i64 {
            c = &c + &sign(f, k * deg);
        }
        if e < 0 {
            c = &c * &sign(f, deg + 1);
        }
        self.var_power(i, e - 1).mul(&self.diff[i]).scale(&c)
    }

    pub fn d(&self, p: &Poly) -> Poly {
        let mut out = self.zero();
        for (m, c) in p.terms() {
            out = out.add(&self.d_monomial(m).scale(c));
        }
        out
    }

    fn d_monomial(&self, m: &Monomial) -> Poly {
        let f = self.field;
        let n = self.nvars();
        let mut out = self.zero();
        let mut left_degree = 0i64;
        for i in 0..n {
            let e = m.0[i];
            if e != 0 {
                let mut rest = m.clone();
                rest.0[i] = 0;
                let term = self.d_power(i, e).mul(&Poly::term(f, rest, f.one()));
                out = out.add(&term.scale(&sign(f, left_degree)));
            }
            left_degree += e * self.gens[i].degree;
        }
        out
    }

    /// Axiom checks: d² = 0 on generators, and the compatibility of d with
    /// commutativity, `d(x)·y·(1 - (-1)^{|y|}) = x·d(y)·(1 - (-1)^{|x|})`.
    pub fn validate(&self) -> Vec<(String, bool, Option<String>)> {
        let f = self.field;
        let mut out = Vec::new();
        let mut d2 = (true, None);
        for (i, g) in self.gens.iter().enumerate() {
            let v = self.d(&self.diff[i]);
            if !v.is_zero() && d2.0 {
                d2 = (false, Some(format!("d(d({})) = {}", g.name, self.render(&v))));
            }
        }
        out.push(("d-squared".to_string(), d2.0, d2.1));
        let mut comm = (true, None);
        let one = f.one();
        for i in 0..self.nvars() {
            for j in i + 1..self.nvars() {
                let (x, y) = (self.var_power(i, 1), self.var_power(j, 1));
                let lhs = self.diff[i].mul(&y).scale(&(&one - &sign(f, self.gens[j].degree)));
                let rhs = x.mul(&self.diff[j]).scale(&(&one - &sign(f, self.gens[i].degree)));
                if lhs != rhs && comm.0 {
                    comm = (false, Some(format!("({}, {})", self.gens[i].name, self.gens[j].name)));
                }
            }
        }
        out.push(("commutativity".to_string(), comm.0, comm.1));
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().iter().all(|c| c.1)
    }

    pub fn render(&self, p: &Poly) -> String {
        p.render(&self.names())
    }

    /// Parses an expression in the generator names.
    pub fn parse(&self, text: &str) -> Result<Poly, PolyError> {
        let e = expr::parse(text)?;
        let mut out = self.zero();
        for t in &e.terms {
            let mut c = if t.negative { self.field.int(-1) } else { self.field.one() };
            for num in &t.coefficients {
                c = &c * &self.field.parse(num)?;
            }
            let mut m = Monomial::one(self.nvars());
            for (name, exp) in &t.factors {
                let i = self.index_of(name).ok_or_else(|| PolyError::UnknownName(name.clone()))?;
                m.0[i] += exp;
            }
            out.add_term(m, &c);
        }
        self.check(&out)?;
        Ok(out)
    }
}
