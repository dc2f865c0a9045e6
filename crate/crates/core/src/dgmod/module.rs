use serde::Serialize;

use crate::dgcore::{degree_projectors, sign, DgAlgebra};
use crate::exactla::{vector, Echelon, Field, Mat, Scalar, Subspace};

use super::radical;
use super::DgModError;

/// Which structure a submodule must respect.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum View {
    /// graded, action-stable and δ-stable
    Dg,
    /// graded and action-stable
    Graded,
    /// action-stable only
    Ungraded,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
    Bi,
}

/// A finite-dimensional graded module with a degree +1 differential δ, acted on
/// by a dg-algebra from the left, the right, or both.
///
/// Submodules for a given [`View`] are exactly the subspaces invariant under
/// [`DgModule::ops`], i.e. the modules over the algebra those operators generate.
#[derive(Clone, Debug)]
pub struct DgModule {
    field: Field,
    names: Vec<String>,
    degrees: Vec<i64>,
    left: Vec<Mat>,
    right: Vec<Mat>,
    delta: Mat,
    view: View,
}

impl DgModule {
    pub fn regular_right(alg: &DgAlgebra) -> DgModule {
        DgModule {
            field: alg.field(),
            names: alg.names().to_vec(),
            degrees: alg.degrees().to_vec(),
            left: vec![],
            right: alg.right_matrices().to_vec(),
            delta: alg.diff_matrix().clone(),
            view: View::Dg,
        }
    }

    pub fn regular_left(alg: &DgAlgebra) -> DgModule {
        DgModule {
            left: alg.left_matrices().to_vec(),
            right: vec![],
            ..DgModule::regular_right(alg)
        }
    }

    pub fn regular_bi(alg: &DgAlgebra) -> DgModule {
        DgModule {
            left: alg.left_matrices().to_vec(),
            ..DgModule::regular_right(alg)
        }
    }

    pub fn regular(alg: &DgAlgebra, side: Side) -> DgModule {
        match side {
            Side::Left => DgModule::regular_left(alg),
            Side::Right => DgModule::regular_right(alg),
            Side::Bi => DgModule::regular_bi(alg),
        }
    }

    /// A module from explicit action matrices (one per algebra basis element) and δ.
    pub fn explicit(
        field: Field,
        names: Vec<String>,
        degrees: Vec<i64>,
        left: Vec<Mat>,
        right: Vec<Mat>,
        delta: Mat,
    ) -> Result<DgModule, DgModError> {
        let n = names.len();
        if degrees.len() != n || delta.rows() != n || delta.cols() != n {
            return Err(DgModError::Shape(format!("module of dimension {n} has inconsistent degrees or δ")));
        }
        for m in left.iter().chain(&right) {
            if m.rows() != n || m.cols() != n || m.field() != field {
                return Err(DgModError::Shape("action matrix has the wrong shape or field".into()));
            }
        }
        Ok(DgModule {
            field,
            names,
            degrees,
            left,
            right,
            delta,
            view: View::Dg,
        })
    }

    pub fn with_view(&self, view: View) -> DgModule {
        DgModule { view, ..self.clone() }
    }

    pub fn view(&self) -> View {
        self.view
    }

    pub fn side(&self) -> Side {
        match (self.left.is_empty(), self.right.is_empty()) {
            (false, true) => Side::Left,
            (true, false) => Side::Right,
            _ => Side::Bi,
        }
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

    pub fn delta(&self) -> &Mat {
        &self.delta
    }

    pub fn left_actions(&self) -> &[Mat] {
        &self.left
    }

    pub fn right_actions(&self) -> &[Mat] {
        &self.right
    }

    /// Generators of the operator algebra whose invariant subspaces are the submodules.
    pub fn ops(&self) -> Vec<Mat> {
        let mut ops: Vec<Mat> = self.left.iter().chain(&self.right).cloned().collect();
        if self.view == View::Dg && !self.delta.is_zero() {
            ops.push(self.delta.clone());
        }
        if self.view != View::Ungraded {
            let projs = degree_projectors(self.field, &self.degrees);
            if projs.len() > 1 {
                ops.extend(projs);
            }
        }
        ops
    }

    pub fn full(&self) -> Subspace {
        Subspace::full(self.field, self.dim())
    }

    pub fn zero(&self) -> Subspace {
        Subspace::zero(self.field, self.dim())
    }

    /// Checks module axioms against the acting algebra: associativity and unit of
    /// each action, δ² = 0, δ of degree +1, and the signed Leibniz rule.
    pub fn validate(&self, alg: &DgAlgebra) -> Vec<(String, bool)> {
        let n = self.dim();
        let f = self.field;
        let combo = |ms: &[Mat], a: &[Scalar]| {
            let mut m = Mat::zeros(f, n, n);
            for (c, x) in a.iter().zip(ms) {
                if !c.is_zero() {
                    m.axpy(c, x);
                }
            }
            m
        };
        let mut out = Vec::new();
        let ident = Mat::identity(f, n);
        let mut right_ok = true;
        let mut left_ok = true;
        if !self.right.is_empty() {
            right_ok &= combo(&self.right, alg.unit()) == ident;
            for i in 0..alg.dim() {
                for j in 0..alg.dim() {
                    let ij = alg.mul(&alg.basis(i), &alg.basis(j));
                    // m·(e_i e_j) = (m·e_i)·e_j
                    right_ok &= combo(&self.right, &ij) == self.right[j].mul(&self.right[i]);
                }
            }
        }
        if !self.left.is_empty() {
            left_ok &= combo(&self.left, alg.unit()) == ident;
            for i in 0..alg.dim() {
                for j in 0..alg.dim() {
                    let ij = alg.mul(&alg.basis(i), &alg.basis(j));
                    left_ok &= combo(&self.left, &ij) == self.left[i].mul(&self.left[j]);
                }
            }
            for l in &self.left {
                for r in &self.right {
                    left_ok &= l.mul(r) == r.mul(l);
                }
            }
        }
        out.push(("action".to_string(), right_ok && left_ok));
        out.push(("delta-squared".to_string(), self.delta.mul(&self.delta).is_zero()));
        let mut ddeg = true;
        for i in 0..n {
            for k in 0..n {
                if !self.delta.get(k, i).is_zero() && self.degrees[k] != self.degrees[i] + 1 {
                    ddeg = false;
                }
            }
        }
        out.push(("delta-degree".to_string(), ddeg));
        let mut leib = true;
        for j in 0..n {
            let m = vector::unit(f, n, j);
            let s = sign(f, self.degrees[j]);
            for i in 0..alg.dim() {
                let a = alg.basis(i);
                let da = alg.d(&a);
                if !self.right.is_empty() {
                    // δ(m·a) = δ(m)·a + (-1)^{|m|} m·d(a)
                    let lhs = self.delta.mul_vec(&self.right[i].mul_vec(&m));
                    let mut rhs = self.right[i].mul_vec(&self.delta.mul_vec(&m));
                    vector::axpy(&mut rhs, &s, &combo(&self.right, &da).mul_vec(&m));
                    leib &= lhs == rhs;
                }
                if !self.left.is_empty() {
                    // δ(a·m) = d(a)·m + (-1)^{|a|} a·δ(m)
                    let lhs = self.delta.mul_vec(&self.left[i].mul_vec(&m));
                    let mut rhs = combo(&self.left, &da).mul_vec(&m);
                    let sa = sign(f, alg.degree(i));
                    vector::axpy(&mut rhs, &sa, &self.left[i].mul_vec(&self.delta.mul_vec(&m)));
                    leib &= lhs == rhs;
                }
            }
        }
        out.push(("leibniz".to_string(), leib));
        out
    }

    /// Smallest submodule containing the given vectors.
    pub fn closure(&self, vectors: &[Vec<Scalar>]) -> Subspace {
        let ops = self.ops();
        let mut ech = Echelon::new(self.field, self.dim());
        let mut queue: Vec<Vec<Scalar>> = Vec::new();
        for v in vectors {
            if let Some(w) = ech.insert(v.clone()) {
                queue.push(w);
            }
        }
        while let Some(w) = queue.pop() {
            for g in &ops {
                let gw = g.mul_vec(&w);
                if let Some(x) = ech.insert(gw) {
                    queue.push(x);
                }
            }
        }
        ech.to_subspace()
    }

    /// Submodule generated by a subspace.
    pub fn closure_of(&self, s: &Subspace) -> Subspace {
        self.closure(&s.basis_vectors())
    }

    pub fn is_submodule(&self, s: &Subspace) -> bool {
        let ops = self.ops();
        s.basis_vectors()
            .iter()
            .all(|v| ops.iter().all(|g| s.contains_vec(&g.mul_vec(v))))
    }

    /// Largest submodule contained in `w`.
    pub fn largest_inside(&self, w: &Subspace) -> Subspace {
        let ops = self.ops();
        let mut v = w.clone();
        loop {
            let mut next = v.clone();
            for g in &ops {
                if next.is_zero() {
                    break;
                }
                next = next.meet(&v.preimage(g).expect("square operator"));
            }
            if next == v {
                return v;
            }
            v = next;
        }
    }

    /// Module structure on an invariant subspace, in its RREF basis.
    pub fn restrict(&self, s: &Subspace) -> DgModule {
        let rows = s.basis_vectors();
        let m = rows.len();
        let induce = |g: &Mat| -> Option<Mat> {
            let mut out = Mat::zeros(self.field, m, m);
            for (a, r) in rows.iter().enumerate() {
                let c = s.coords(&g.mul_vec(r))?;
                for (k, x) in c.into_iter().enumerate() {
                    out.set(k, a, x);
                }
            }
            Some(out)
        };
        let names = rows.iter().map(|r| render_combo(&self.names, r)).collect();
        let degrees = rows
            .iter()
            .map(|r| {
                let mut ds = r
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(i, _)| self.degrees[i]);
                ds.next().unwrap_or(0)
            })
            .collect();
        let left = self.left.iter().map(|g| induce(g).expect("invariant subspace")).collect();
        let right = self.right.iter().map(|g| induce(g).expect("invariant subspace")).collect();
        let delta = induce(&self.delta).unwrap_or_else(|| Mat::zeros(self.field, m, m));
        DgModule {
            field: self.field,
            names,
            degrees,
            left,
            right,
            delta,
            view: self.view,
        }
    }

    /// Quotient by an invariant subspace; coset representatives are the non-pivot basis vectors.
    pub fn quotient(&self, s: &Subspace) -> DgModule {
        let keep = s.nonpivots();
        let m = keep.len();
        let induce = |g: &Mat| -> Mat {
            let mut out = Mat::zeros(self.field, m, m);
            for (a, &j) in keep.iter().enumerate() {
                let r = s.reduce(&g.col(j));
                for (k, &i) in keep.iter().enumerate() {
                    out.set(k, a, r[i].clone());
                }
            }
            out
        };
        DgModule {
            field: self.field,
            names: keep.iter().map(|&j| self.names[j].clone()).collect(),
            degrees: keep.iter().map(|&j| self.degrees[j]).collect(),
            left: self.left.iter().map(&induce).collect(),
            right: self.right.iter().map(&induce).collect(),
            delta: induce(&self.delta),
            view: self.view,
        }
    }

    /// Direct sum; both modules must be acted on by the same algebra.
    pub fn direct_sum(&self, other: &DgModule) -> DgModule {
        assert_eq!(self.left.len(), other.left.len());
        assert_eq!(self.right.len(), other.right.len());
        let names = self
            .names
            .iter()
            .map(|s| format!("{s}.0"))
            .chain(other.names.iter().map(|s| format!("{s}.1")))
            .collect();
        DgModule {
            field: self.field,
            names,
            degrees: self.degrees.iter().chain(&other.degrees).copied().collect(),
            left: self.left.iter().zip(&other.left).map(|(a, b)| a.block_diag(b)).collect(),
            right: self.right.iter().zip(&other.right).map(|(a, b)| a.block_diag(b)).collect(),
            delta: self.delta.block_diag(&other.delta),
            view: self.view,
        }
    }

    /// Basis of the algebra of operators generated by [`DgModule::ops`] and the identity.
    pub fn envelope(&self) -> Vec<Mat> {
        let n = self.dim();
        let f = self.field;
        let ops = self.ops();
        let mut ech = Echelon::new(f, n * n);
        let mut basis = Vec::new();
        let mut queue = Vec::new();
        if let Some(w) = ech.insert(Mat::identity(f, n).flatten()) {
            queue.push(Mat::unflatten(f, n, n, w));
        }
        while let Some(b) = queue.pop() {
            for g in &ops {
                let gb = g.mul(&b);
                if let Some(w) = ech.insert(gb.flatten()) {
                    queue.push(Mat::unflatten(f, n, n, w));
                }
            }
            basis.push(b);
        }
        basis
    }

    /// Socle: the vectors killed by the radical of the envelope.
    pub fn socle(&self) -> Subspace {
        let n = self.dim();
        if n == 0 {
            return self.zero();
        }
        let env = self.envelope();
        let rad = radical::radical(self.field, &env);
        if rad.is_empty() {
            return self.full();
        }
        let stacked = rad.iter().skip(1).fold(rad[0].clone(), |acc, m| acc.vstack(m));
        Subspace::kernel_of(&stacked)
    }

    /// Endomorphisms commuting with every operator, as matrices.
    pub fn commutant(&self) -> Vec<Mat> {
        let n = self.dim();
        let f = self.field;
        let mut current: Vec<Mat> = (0..n * n)
            .map(|i| Mat::unflatten(f, n, n, vector::unit(f, n * n, i)))
            .collect();
        for g in self.ops() {
            if current.is_empty() {
                break;
            }
            let cols: Vec<Vec<Scalar>> = current.iter().map(|c| c.mul(&g).sub(&g.mul(c)).flatten()).collect();
            let k = Mat::from_cols(f, n * n, &cols).kernel();
            current = k.iter().map(|l| radical::combine(f, &current, l)).collect();
        }
        current
    }

    /// Render a vector in module basis names.
    pub fn render(&self, v: &[Scalar]) -> String {
        render_combo(&self.names, v)
    }
}

pub(crate) fn render_combo(names: &[String], v: &[Scalar]) -> String {
    let terms: Vec<String> = v
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| if c.is_one() { names[i].clone() } else { format!("{}*{}", c, names[i]) })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}
