use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::exactla::{Field, Scalar};

/// Exponent vector; negative entries only for Laurent generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<i64>);

impl Monomial {
    pub fn one(n: usize) -> Monomial {
        Monomial(vec![0; n])
    }

    pub fn var(n: usize, i: usize, e: i64) -> Monomial {
        let mut v = vec![0; n];
        v[i] = e;
        Monomial(v)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }
}

/// Graded-lex: total exponent first, then lexicographic.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total().cmp(&other.total()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    pub(crate) field: Field,
    pub(crate) nvars: usize,
    pub(crate) terms: BTreeMap<Monomial, Scalar>,
}

impl Poly {
    pub fn zero(field: Field, nvars: usize) -> Poly {
        Poly {
            field,
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(field: Field, nvars: usize, c: Scalar) -> Poly {
        Poly::term(field, Monomial::one(nvars), c)
    }

    pub fn term(field: Field, m: Monomial, c: Scalar) -> Poly {
        let nvars = m.0.len();
        let mut p = Poly::zero(field, nvars);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(|| self.field.zero())
    }

    /// The single term of a monomial polynomial.
    pub fn as_term(&self) -> Option<(&Monomial, &Scalar)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Poly {
        self.scale(&self.field.int(-1))
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        let mut out = Poly::zero(self.field, self.nvars);
        if c.is_zero() {
            return out;
        }
        for (m, x) in &self.terms {
            out.terms.insert(m.clone(), x * c);
        }
        out
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero(self.field, self.nvars);
        for (m, a) in &self.terms {
            for (n, b) in &other.terms {
                out.add_term(m.mul(n), &(a * b));
            }
        }
        out
    }

    pub fn render(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (m, c) in self.terms.iter().rev() {
            let mut factors = Vec::new();
            for (i, &e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(names[i].clone()),
                    _ => factors.push(format!("{}^{}", names[i], e)),
                }
            }
            let body = factors.join("*");
            let text = if body.is_empty() {
                c.to_string()
            } else if c.is_one() {
                body
            } else {
                format!("{c}*{body}")
            };
            parts.push(text);
        }
        parts.join(" + ")
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}
