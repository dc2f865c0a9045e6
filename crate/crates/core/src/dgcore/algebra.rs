use std::collections::BTreeMap;

use serde::Serialize;

use crate::exactla::{vector, Field, Mat, Scalar, Subspace};

use super::DgError;

/// A finite-dimensional ℤ-graded algebra with structure constants and a degree +1 differential.
///
/// `e_i · e_j = Σ_k c[i][j][k] e_k`, and column `i` of `diff` is `d(e_i)`.
#[derive(Clone, Debug)]
pub struct DgAlgebra {
    field: Field,
    names: Vec<String>,
    degrees: Vec<i64>,
    table: Vec<Vec<Vec<(usize, Scalar)>>>,
    unit: Vec<Scalar>,
    diff: Mat,
    left: Vec<Mat>,
    right: Vec<Mat>,
}

/// One checked axiom: pass/fail, the first failing basis tuple and the failure count.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomCheck {
    pub axiom: String,
    pub passed: bool,
    pub witness: Option<Vec<String>>,
    pub failures: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub checks: Vec<AxiomCheck>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn get(&self, axiom: &str) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.axiom == axiom)
    }

    pub fn first_failure(&self) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| !c.passed)
    }
}

struct Tally {
    axiom: &'static str,
    witness: Option<Vec<String>>,
    failures: usize,
}

impl Tally {
    fn new(axiom: &'static str) -> Tally {
        Tally {
            axiom,
            witness: None,
            failures: 0,
        }
    }

    fn fail(&mut self, w: impl FnOnce() -> Vec<String>) {
        if self.witness.is_none() {
            self.witness = Some(w());
        }
        self.failures += 1;
    }

    fn finish(self) -> AxiomCheck {
        AxiomCheck {
            axiom: self.axiom.to_string(),
            passed: self.failures == 0,
            witness: self.witness,
            failures: self.failures,
        }
    }
}

/// `(-1)^k` as a field element.
pub fn sign(field: Field, k: i64) -> Scalar {
    if k.rem_euclid(2) == 0 {
        field.one()
    } else {
        -&field.one()
    }
}

impl DgAlgebra {
    /// Builds an algebra from structure-constant quadruples `(i, j, k, c)` and
    /// differential triples `(target k, source i, c)`. Only shapes and field
    /// tags are checked here; axioms are checked by [`DgAlgebra::validate`].
    pub fn new(
        field: Field,
        names: Vec<String>,
        degrees: Vec<i64>,
        mul: Vec<(usize, usize, usize, Scalar)>,
        unit: Vec<Scalar>,
        diff: Vec<(usize, usize, Scalar)>,
    ) -> Result<DgAlgebra, DgError> {
        let n = names.len();
        if degrees.len() != n {
            return Err(DgError::Structure(format!("{} degrees for {} basis elements", degrees.len(), n)));
        }
        if unit.len() != n {
            return Err(DgError::Structure(format!("unit has {} coordinates, expected {}", unit.len(), n)));
        }
        let mut seen = std::collections::BTreeSet::new();
        for name in &names {
            if !seen.insert(name.as_str()) {
                return Err(DgError::Structure(format!("duplicate basis name `{name}`")));
            }
        }
        let check_scalar = |s: &Scalar| {
            if s.field() != field {
                Err(DgError::Structure(format!("scalar {} is over {}, expected {}", s, s.field(), field)))
            } else {
                Ok(())
            }
        };
        for s in &unit {
            check_scalar(s)?;
        }
        let mut dense: Vec<Vec<Vec<Scalar>>> = vec![vec![vector::zeros(field, n); n]; n];
        for (i, j, k, c) in mul {
            if i >= n || j >= n || k >= n {
                return Err(DgError::Structure(format!("product index ({i}, {j}, {k}) out of range")));
            }
            check_scalar(&c)?;
            dense[i][j][k] = &dense[i][j][k] + &c;
        }
        let mut d = Mat::zeros(field, n, n);
        for (k, i, c) in diff {
            if i >= n || k >= n {
                return Err(DgError::Structure(format!("differential index ({k}, {i}) out of range")));
            }
            check_scalar(&c)?;
            let v = d.get(k, i) + &c;
            d.set(k, i, v);
        }
        let table = dense
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|v| v.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect())
                    .collect()
            })
            .collect();
        Ok(DgAlgebra::assemble(field, names, degrees, table, unit, d))
    }

    fn assemble(
        field: Field,
        names: Vec<String>,
        degrees: Vec<i64>,
        table: Vec<Vec<Vec<(usize, Scalar)>>>,
        unit: Vec<Scalar>,
        diff: Mat,
    ) -> DgAlgebra {
        let n = names.len();
        let mut left = vec![Mat::zeros(field, n, n); n];
        let mut right = vec![Mat::zeros(field, n, n); n];
        for (i, row) in table.iter().enumerate() {
            for (j, terms) in row.iter().enumerate() {
                for (k, c) in terms {
                    // e_i · e_j: column j of L_i and column i of R_j.
                    left[i].set(*k, j, c.clone());
                    right[j].set(*k, i, c.clone());
                }
            }
        }
        DgAlgebra {
            field,
            names,
            degrees,
            table,
            unit,
            diff,
            left,
            right,
        }
    }

    /// Builds an algebra from a dense product rule on basis elements.
    pub fn from_fn(
        field: Field,
        names: Vec<String>,
        degrees: Vec<i64>,
        unit: Vec<Scalar>,
        diff: Mat,
        product: impl Fn(usize, usize) -> Vec<Scalar>,
    ) -> DgAlgebra {
        let n = names.len();
        let table = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        product(i, j)
                            .into_iter()
                            .enumerate()
                            .filter(|(_, c)| !c.is_zero())
                            .collect()
                    })
                    .collect()
            })
            .collect();
        DgAlgebra::assemble(field, names, degrees, table, unit, diff)
    }

    /// Same algebra with its differential replaced.
    pub fn with_diff(&self, diff: Mat) -> DgAlgebra {
        let mut a = self.clone();
        a.diff = diff;
        a
    }

    /// Same algebra with zero differential.
    pub fn forget_diff(&self) -> DgAlgebra {
        self.with_diff(Mat::zeros(self.field, self.dim(), self.dim()))
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn degree(&self, i: usize) -> i64 {
        self.degrees[i]
    }

    pub fn diff_matrix(&self) -> &Mat {
        &self.diff
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn basis(&self, i: usize) -> Vec<Scalar> {
        vector::unit(self.field, self.dim(), i)
    }

    pub fn zero(&self) -> Vec<Scalar> {
        vector::zeros(self.field, self.dim())
    }

    /// Element from integer coordinates.
    pub fn elem(&self, coords: &[i64]) -> Vec<Scalar> {
        assert_eq!(coords.len(), self.dim());
        vector::from_ints(self.field, coords)
    }

    /// Element `Σ c·e_name` from named integer terms.
    pub fn named(&self, terms: &[(i64, &str)]) -> Vec<Scalar> {
        let mut v = self.zero();
        for (c, name) in terms {
            let i = self.index_of(name).unwrap_or_else(|| panic!("no basis element `{name}`"));
            v[i] = &v[i] + &self.field.int(*c);
        }
        v
    }

    pub fn is_zero_diff(&self) -> bool {
        self.diff.is_zero()
    }

    pub fn left_matrices(&self) -> &[Mat] {
        &self.left
    }

    pub fn right_matrices(&self) -> &[Mat] {
        &self.right
    }

    /// Sparse product terms of two basis elements.
    pub fn basis_product(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.table[i][j]
    }

    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let mut out = self.zero();
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let xy = x * y;
                for (k, c) in &self.table[i][j] {
                    out[*k].add_mul_assign(&xy, c);
                }
            }
        }
        out
    }

    pub fn d(&self, a: &[Scalar]) -> Vec<Scalar> {
        self.diff.mul_vec(a)
    }

    pub fn add(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        vector::add(a, b)
    }

    pub fn scale(&self, c: &Scalar, a: &[Scalar]) -> Vec<Scalar> {
        vector::scale(c, a)
    }

    pub fn pow(&self, a: &[Scalar], e: u32) -> Vec<Scalar> {
        let mut acc = self.unit.clone();
        for _ in 0..e {
            acc = self.mul(&acc, a);
        }
        acc
    }

    /// Matrix of `x ↦ a·x`.
    pub fn left_mult(&self, a: &[Scalar]) -> Mat {
        let mut m = Mat::zeros(self.field, self.dim(), self.dim());
        for (i, c) in a.iter().enumerate() {
            if !c.is_zero() {
                m.axpy(c, &self.left[i]);
            }
        }
        m
    }

    /// Matrix of `x ↦ x·a`.
    pub fn right_mult(&self, a: &[Scalar]) -> Mat {
        let mut m = Mat::zeros(self.field, self.dim(), self.dim());
        for (i, c) in a.iter().enumerate() {
            if !c.is_zero() {
                m.axpy(c, &self.right[i]);
            }
        }
        m
    }

    /// Homogeneous components keyed by degree; zero components are dropped.
    pub fn components(&self, a: &[Scalar]) -> BTreeMap<i64, Vec<Scalar>> {
        let mut out: BTreeMap<i64, Vec<Scalar>> = BTreeMap::new();
        for (i, c) in a.iter().enumerate() {
            if !c.is_zero() {
                out.entry(self.degrees[i]).or_insert_with(|| self.zero())[i] = c.clone();
            }
        }
        out
    }

    /// Degree of a nonzero homogeneous element; `None` for zero or inhomogeneous input.
    pub fn homogeneous_degree(&self, a: &[Scalar]) -> Option<i64> {
        let comps = self.components(a);
        if comps.len() == 1 {
            comps.keys().next().copied()
        } else {
            None
        }
    }

    /// Zero counts as homogeneous of every degree.
    pub fn is_homogeneous(&self, a: &[Scalar]) -> bool {
        self.components(a).len() <= 1
    }

    /// Basis indices of a given degree.
    pub fn degree_support(&self, k: i64) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.degrees[i] == k).collect()
    }

    /// Distinct degrees occurring in the basis, ascending.
    pub fn degree_set(&self) -> Vec<i64> {
        let mut ds = self.degrees.clone();
        ds.sort_unstable();
        ds.dedup();
        ds
    }

    /// Projection matrices onto each degree component, ascending by degree.
    pub fn degree_projectors(&self) -> Vec<Mat> {
        degree_projectors(self.field, &self.degrees)
    }

    /// Two-sided inverse, if it exists.
    pub fn invert(&self, a: &[Scalar]) -> Result<Vec<Scalar>, DgError> {
        let l = self.left_mult(a);
        let x = l.solve_vec(&self.unit).ok_or(DgError::NotInvertible)?;
        if self.mul(&x, a) != self.unit || self.mul(a, &x) != self.unit {
            return Err(DgError::NotInvertible);
        }
        Ok(x)
    }

    pub fn is_invertible(&self, a: &[Scalar]) -> bool {
        self.left_mult(a).rank() == self.dim()
    }

    /// `a` is neither a left nor a right zero divisor.
    pub fn is_regular(&self, a: &[Scalar]) -> bool {
        self.left_mult(a).rank() == self.dim() && self.right_mult(a).rank() == self.dim()
    }

    /// Parses a sum of products of basis names such as `e11 + 2*e22` or `e12*e21`;
    /// a negative exponent inverts its factor.
    pub fn parse(&self, text: &str) -> Result<Vec<Scalar>, DgError> {
        let e = crate::expr::parse(text)?;
        let mut out = self.zero();
        for t in &e.terms {
            let mut c = if t.negative { self.field.int(-1) } else { self.field.one() };
            for num in &t.coefficients {
                c = &c * &self.field.parse(num)?;
            }
            let mut v = self.unit.clone();
            for (name, exp) in &t.factors {
                let i = self.index_of(name).ok_or_else(|| DgError::UnknownName(name.clone()))?;
                let mut b = self.basis(i);
                if *exp < 0 {
                    b = self.invert(&b)?;
                }
                v = self.mul(&v, &self.pow(&b, exp.unsigned_abs() as u32));
            }
            vector::axpy(&mut out, &c, &v);
        }
        Ok(out)
    }

    /// Render an element as `2*e11 + -1/2*e22`.
    pub fn render(&self, a: &[Scalar]) -> String {
        let terms: Vec<String> = a
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                if c.is_one() {
                    self.names[i].clone()
                } else {
                    format!("{}*{}", c, self.names[i])
                }
            })
            .collect();
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ")
        }
    }

    pub fn render_subspace(&self, s: &Subspace) -> Vec<String> {
        s.basis_vectors().iter().map(|v| self.render(v)).collect()
    }

    /// Checks every defining axiom on basis tuples.
    pub fn validate(&self) -> ValidationReport {
        let n = self.dim();
        let f = self.field;
        let name = |i: usize| self.names[i].clone();

        let mut assoc = Tally::new("associativity");
        for i in 0..n {
            for j in 0..n {
                let ij = self.mul(&self.basis(i), &self.basis(j));
                for k in 0..n {
                    let l = self.mul(&ij, &self.basis(k));
                    let r = self.mul(&self.basis(i), &self.mul(&self.basis(j), &self.basis(k)));
                    if l != r {
                        assoc.fail(|| vec![name(i), name(j), name(k)]);
                    }
                }
            }
        }

        let mut unit = Tally::new("unit");
        for i in 0..n {
            let e = self.basis(i);
            if self.mul(&self.unit, &e) != e || self.mul(&e, &self.unit) != e {
                unit.fail(|| vec![name(i)]);
            }
        }
        for (i, c) in self.unit.iter().enumerate() {
            if !c.is_zero() && self.degrees[i] != 0 {
                unit.fail(|| vec!["unit".to_string(), name(i)]);
            }
        }

        let mut grading = Tally::new("grading");
        for i in 0..n {
            for j in 0..n {
                for (k, _) in &self.table[i][j] {
                    if self.degrees[*k] != self.degrees[i] + self.degrees[j] {
                        grading.fail(|| vec![name(i), name(j), name(*k)]);
                    }
                }
            }
        }

        let mut ddeg = Tally::new("differential-degree");
        for i in 0..n {
            for k in 0..n {
                if !self.diff.get(k, i).is_zero() && self.degrees[k] != self.degrees[i] + 1 {
                    ddeg.fail(|| vec![name(i), name(k)]);
                }
            }
        }

        let mut dsq = Tally::new("d-squared");
        for i in 0..n {
            if !vector::is_zero(&self.d(&self.d(&self.basis(i)))) {
                dsq.fail(|| vec![name(i)]);
            }
        }

        let mut leib = Tally::new("leibniz");
        for i in 0..n {
            for j in 0..n {
                let (a, b) = (self.basis(i), self.basis(j));
                let lhs = self.d(&self.mul(&a, &b));
                let t1 = self.mul(&self.d(&a), &b);
                let t2 = self.mul(&a, &self.d(&b));
                let rhs = vector::add(&t1, &vector::scale(&sign(f, self.degrees[i]), &t2));
                if lhs != rhs {
                    leib.fail(|| vec![name(i), name(j)]);
                }
            }
        }

        ValidationReport {
            checks: vec![
                assoc.finish(),
                unit.finish(),
                grading.finish(),
                ddeg.finish(),
                dsq.finish(),
                leib.finish(),
            ],
        }
    }

    /// Validates and returns the algebra, or the first failed axiom.
    pub fn checked(self) -> Result<DgAlgebra, DgError> {
        let report = self.validate();
        match report.first_failure() {
            None => Ok(self),
            Some(c) => Err(DgError::AxiomFailed {
                axiom: c.axiom.clone(),
                witness: c.witness.clone().unwrap_or_default(),
            }),
        }
    }

    /// Subalgebra on a subspace closed under multiplication (and under d when
    /// `keep_diff`); the new basis is the RREF basis of `s`.
    pub fn subalgebra(&self, s: &Subspace, keep_diff: bool) -> Result<DgAlgebra, DgError> {
        let rows = s.basis_vectors();
        let m = rows.len();
        let coords = |v: &[Scalar]| -> Result<Vec<Scalar>, DgError> {
            s.coords(v).ok_or_else(|| DgError::NotClosed(self.render(v)))
        };
        let mut names = Vec::with_capacity(m);
        let mut degrees = Vec::with_capacity(m);
        for r in &rows {
            names.push(self.render(r));
            degrees.push(
                self.homogeneous_degree(r)
                    .ok_or_else(|| DgError::Structure("subalgebra basis is not homogeneous".into()))?,
            );
        }
        let mut table = vec![vec![Vec::new(); m]; m];
        for a in 0..m {
            for b in 0..m {
                let c = coords(&self.mul(&rows[a], &rows[b]))?;
                table[a][b] = c.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect();
            }
        }
        let unit = coords(&self.unit)?;
        let mut diff = Mat::zeros(self.field, m, m);
        if keep_diff {
            for (a, r) in rows.iter().enumerate() {
                let c = coords(&self.d(r))?;
                for (k, x) in c.into_iter().enumerate() {
                    diff.set(k, a, x);
                }
            }
        }
        Ok(DgAlgebra::assemble(self.field, names, degrees, table, unit, diff))
    }

    /// Quotient by a two-sided dg-ideal, with the projection matrix.
    ///
    /// Coset representatives are the basis elements outside the pivot columns of `ideal`.
    pub fn quotient(&self, ideal: &Subspace) -> Result<(DgAlgebra, Mat), DgError> {
        let keep = ideal.nonpivots();
        let m = keep.len();
        let n = self.dim();
        let project = |v: &[Scalar]| -> Vec<Scalar> {
            let r = ideal.reduce(v);
            keep.iter().map(|&j| r[j].clone()).collect()
        };
        let mut proj = Mat::zeros(self.field, m, n);
        for c in 0..n {
            for (a, x) in project(&self.basis(c)).into_iter().enumerate() {
                proj.set(a, c, x);
            }
        }
        let names = keep.iter().map(|&j| self.names[j].clone()).collect();
        let degrees = keep.iter().map(|&j| self.degrees[j]).collect();
        let mut table = vec![vec![Vec::new(); m]; m];
        for (a, &i) in keep.iter().enumerate() {
            for (b, &j) in keep.iter().enumerate() {
                let p = project(&self.mul(&self.basis(i), &self.basis(j)));
                table[a][b] = p.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect();
            }
        }
        let unit = project(&self.unit);
        let mut diff = Mat::zeros(self.field, m, m);
        for (a, &i) in keep.iter().enumerate() {
            for (k, x) in project(&self.d(&self.basis(i))).into_iter().enumerate() {
                diff.set(k, a, x);
            }
        }
        let q = DgAlgebra::assemble(self.field, names, degrees, table, unit, diff);
        // The ideal must be two-sided and d-stable for the quotient to be well defined.
        for v in ideal.basis_vectors() {
            for c in self.components(&v).values() {
                if !ideal.contains_vec(c) {
                    return Err(DgError::NotClosed(self.render(c)));
                }
            }
            let dv = self.d(&v);
            if !ideal.contains_vec(&dv) {
                return Err(DgError::NotClosed(self.render(&dv)));
            }
            for i in 0..n {
                let e = self.basis(i);
                for w in [self.mul(&e, &v), self.mul(&v, &e)] {
                    if !ideal.contains_vec(&w) {
                        return Err(DgError::NotClosed(self.render(&w)));
                    }
                }
            }
        }
        Ok((q, proj))
    }

    /// Direct product `A × B`.
    pub fn product(&self, other: &DgAlgebra) -> DgAlgebra {
        assert_eq!(self.field, other.field);
        let (n, m) = (self.dim(), other.dim());
        let f = self.field;
        let names = self
            .names
            .iter()
            .map(|s| format!("{s}.0"))
            .chain(other.names.iter().map(|s| format!("{s}.1")))
            .collect();
        let degrees = self.degrees.iter().chain(&other.degrees).copied().collect();
        let mut unit = self.unit.clone();
        unit.extend(other.unit.iter().cloned());
        let diff = self.diff.block_diag(&other.diff);
        DgAlgebra::from_fn(f, names, degrees, unit, diff, |i, j| {
            let mut v = vector::zeros(f, n + m);
            if i < n && j < n {
                for (k, c) in &self.table[i][j] {
                    v[*k] = c.clone();
                }
            } else if i >= n && j >= n {
                for (k, c) in &other.table[i - n][j - n] {
                    v[n + *k] = c.clone();
                }
            }
            v
        })
    }

    /// Graded tensor product with the Koszul sign
    /// `(a⊗b)(a'⊗b') = (-1)^{|b||a'|} aa'⊗bb'` and `d(a⊗b) = da⊗b + (-1)^{|a|} a⊗db`.
    pub fn tensor(&self, other: &DgAlgebra) -> DgAlgebra {
        assert_eq!(self.field, other.field);
        let (n, m) = (self.dim(), other.dim());
        let f = self.field;
        let idx = |i: usize, j: usize| i * m + j;
        let mut names = Vec::with_capacity(n * m);
        let mut degrees = Vec::with_capacity(n * m);
        for i in 0..n {
            for j in 0..m {
                names.push(format!("{}@{}", self.names[i], other.names[j]));
                degrees.push(self.degrees[i] + other.degrees[j]);
            }
        }
        let mut unit = vector::zeros(f, n * m);
        for (i, a) in self.unit.iter().enumerate() {
            for (j, b) in other.unit.iter().enumerate() {
                unit[idx(i, j)] = a * b;
            }
        }
        let mut diff = Mat::zeros(f, n * m, n * m);
        for i in 0..n {
            for j in 0..m {
                let src = idx(i, j);
                for k in 0..n {
                    let c = self.diff.get(k, i);
                    if !c.is_zero() {
                        let t = diff.get(idx(k, j), src) + c;
                        diff.set(idx(k, j), src, t);
                    }
                }
                let s = sign(f, self.degrees[i]);
                for l in 0..m {
                    let c = other.diff.get(l, j);
                    if !c.is_zero() {
                        let t = diff.get(idx(i, l), src) + &(&s * c);
                        diff.set(idx(i, l), src, t);
                    }
                }
            }
        }
        DgAlgebra::from_fn(f, names, degrees, unit, diff, |p, q| {
            let (i, j) = (p / m, p % m);
            let (k, l) = (q / m, q % m);
            let s = sign(f, other.degrees[j] * self.degrees[k]);
            let mut v = vector::zeros(f, n * m);
            for (a, ca) in &self.table[i][k] {
                for (b, cb) in &other.table[j][l] {
                    let t = &(&s * ca) * cb;
                    v[idx(*a, *b)] = &v[idx(*a, *b)] + &t;
                }
            }
            v
        })
    }

    /// Structure-constant quadruples, for serialization.
    pub fn mul_entries(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let mut out = Vec::new();
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                for (k, c) in &self.table[i][j] {
                    out.push((i, j, *k, c.clone()));
                }
            }
        }
        out
    }

    /// Differential triples `(target, source, c)`, for serialization.
    pub fn diff_entries(&self) -> Vec<(usize, usize, Scalar)> {
        let mut out = Vec::new();
        for i in 0..self.dim() {
            for k in 0..self.dim() {
                let c = self.diff.get(k, i);
                if !c.is_zero() {
                    out.push((k, i, c.clone()));
                }
            }
        }
        out
    }
}

pub(crate) fn degree_projectors(field: Field, degrees: &[i64]) -> Vec<Mat> {
    let mut ds = degrees.to_vec();
    ds.sort_unstable();
    ds.dedup();
    let n = degrees.len();
    ds.into_iter()
        .map(|k| {
            let mut p = Mat::zeros(field, n, n);
            for (i, &d) in degrees.iter().enumerate() {
                if d == k {
                    p.set(i, i, field.one());
                }
            }
            p
        })
        .collect()
}
