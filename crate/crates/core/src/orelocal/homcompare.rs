//! Comparison of `H(R_S)` with the localisation of `H(R)` at the image of `S`.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::dgcore::{homology, DgAlgebra};
use crate::dgpoly::{Monomial, Poly, PolyError, PolyRing, Window};
use crate::exactla::{vector, Mat, Scalar, Subspace};

use super::findim::localise_findim;
use super::poly::localise_poly;
use super::{LocError, Mode};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsoCheck {
    pub name: String,
    pub passed: bool,
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct IsoReport {
    /// Dimensions of `H(R_S)` by degree.
    pub localised_homology: BTreeMap<i64, usize>,
    /// Dimensions of `H(R)` localised at the image of `S`, by degree.
    pub homology_localised: BTreeMap<i64, usize>,
    /// Matrix of the comparison map `H(R)_S̄ → H(R_S)` (finite-dimensional backend).
    pub map: Option<Vec<Vec<String>>>,
    pub window: Option<Window>,
    /// Length of the multiplication chains used to compute colimits (polynomial backend).
    pub depth: Option<usize>,
    pub checks: Vec<IsoCheck>,
}

impl IsoReport {
    pub fn certified(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

fn check(name: &str, passed: bool, detail: Option<String>) -> IsoCheck {
    IsoCheck {
        name: name.into(),
        passed,
        detail,
    }
}

fn dims_by_degree(alg: &DgAlgebra) -> BTreeMap<i64, usize> {
    let mut out = BTreeMap::new();
    for &k in alg.degrees() {
        *out.entry(k).or_insert(0) += 1;
    }
    out
}

/// Finite-dimensional comparison for a set of homogeneous cycles.
///
/// Builds the map `H(R) → H(R_S)` induced by `λ`, checks that it kills
/// `ass(S̄)` and that the induced map `H(R)_S̄ → H(R_S)` is a bijective,
/// unital, degree-preserving algebra map.
pub fn homology_comparison_findim(alg: &DgAlgebra, gens: &[Vec<Scalar>]) -> Result<IsoReport, LocError> {
    let loc = localise_findim(alg, gens, Mode::Kernel)?;
    let h = homology(alg);
    let hl = homology(loc.target());
    let bar: Vec<Vec<Scalar>> = gens
        .iter()
        .map(|g| h.project(g).expect("generators are cycles"))
        .collect();
    let hloc = localise_findim(&h.algebra, &bar, Mode::Kernel)?;
    let hs = hloc.target();
    let f = alg.field();

    // Φ: H(R) → H(R_S), class by class.
    let phi_cols: Vec<Vec<Scalar>> = h
        .reps
        .iter()
        .map(|z| {
            let img = loc.lambda_matrix().mul_vec(z);
            hl.project(&img).expect("λ maps cycles to cycles")
        })
        .collect();
    let phi = Mat::from_cols(f, hl.dim(), &phi_cols);

    let mut checks = Vec::new();
    let ass = hloc.ass();
    let kills = ass.basis_vectors().iter().all(|v| vector::is_zero(&phi.mul_vec(v)));
    checks.push(check("kills-ass", kills, None));

    // Section of the quotient map H → H_S̄, then Ψ = Φ ∘ section.
    let proj = hloc.lambda_matrix();
    let section: Vec<Vec<Scalar>> = (0..hs.dim())
        .map(|j| {
            proj.solve_vec(&vector::unit(f, hs.dim(), j))
                .expect("quotient maps are onto")
        })
        .collect();
    let psi_cols: Vec<Vec<Scalar>> = section.iter().map(|x| phi.mul_vec(x)).collect();
    let psi = Mat::from_cols(f, hl.dim(), &psi_cols);
    let bijective = psi.is_square() && psi.rank() == hs.dim();
    checks.push(check(
        "bijective",
        bijective,
        (!bijective).then(|| format!("{} × {} of rank {}", psi.rows(), psi.cols(), psi.rank())),
    ));
    let degrees_ok = (0..hs.dim()).all(|j| {
        let img = &psi_cols[j];
        vector::is_zero(img) || hl.algebra.homogeneous_degree(img) == Some(hs.degree(j))
    });
    checks.push(check("degree-preserving", degrees_ok, None));
    let unital = psi.mul_vec(hs.unit()) == hl.algebra.unit();
    checks.push(check("unital", unital, None));
    let mut mult = None;
    'outer: for a in 0..hs.dim() {
        for b in 0..hs.dim() {
            let lhs = psi.mul_vec(&hs.mul(&hs.basis(a), &hs.basis(b)));
            let rhs = hl.algebra.mul(&psi_cols[a], &psi_cols[b]);
            if lhs != rhs {
                mult = Some(format!("({}, {})", hs.names()[a], hs.names()[b]));
                break 'outer;
            }
        }
    }
    checks.push(check("multiplicative", mult.is_none(), mult));

    let localised_homology = dims_by_degree(&hl.algebra);
    let homology_localised = dims_by_degree(hs);
    let equal = localised_homology == homology_localised;
    checks.push(check("dimensions-by-degree", equal, None));
    Ok(IsoReport {
        localised_homology,
        homology_localised,
        map: Some(psi.row_vecs().iter().map(|r| vector::render(r)).collect()),
        window: None,
        depth: None,
        checks,
    })
}

struct Level {
    basis: Vec<Monomial>,
    cycles: Subspace,
    boundaries: Subspace,
}

struct Levels<'a> {
    ring: &'a PolyRing,
    cache: HashMap<i64, Level>,
}

impl<'a> Levels<'a> {
    fn get(&mut self, k: i64) -> Result<&Level, PolyError> {
        if !self.cache.contains_key(&k) {
            let basis = self.ring.degree_basis(k)?;
            let (cycles, boundaries) = self.ring.cycles_and_boundaries(k)?;
            self.cache.insert(k, Level { basis, cycles, boundaries });
        }
        Ok(&self.cache[&k])
    }

    /// Rank of multiplication by `s` from `H_k` to `H_{k+|s|}`.
    fn rank(&mut self, k: i64, s: &Poly, target: i64) -> Result<usize, PolyError> {
        let ring = self.ring;
        let f = ring.field();
        let images: Vec<Poly> = {
            let src = self.get(k)?;
            src.cycles
                .basis_vectors()
                .iter()
                .map(|v| {
                    let mut p = ring.zero();
                    for (m, c) in src.basis.iter().zip(v) {
                        p = p.add(&Poly::term(f, m.clone(), c.clone()));
                    }
                    p.mul(s)
                })
                .collect()
        };
        let dst = self.get(target)?;
        let mut coords = Vec::new();
        for p in &images {
            coords.push(ring.coordinates(p, target)?);
        }
        let n = dst.basis.len();
        let span = Subspace::span(f, n, &coords).plus(&dst.boundaries);
        Ok(span.dim() - dst.boundaries.dim())
    }
}

/// Polynomial comparison over a degree window for a monomial set of cycles.
///
/// `H(R)_S̄` in degree `k` is the colimit of `H_k → H_{k+δ} → ⋯` under
/// multiplication by the product `s` of the generators (`δ = |s|`); it is
/// read off as the stable rank of `H_{k+nδ} → H_{k+mδ}` for `depth/2 ≤ n < m ≤ depth`,
/// and the report fails with `WindowTooSmall` if the ranks have not settled.
pub fn homology_comparison_poly(ring: &PolyRing, gens: &[Poly], window: Window) -> Result<IsoReport, LocError> {
    let loc = localise_poly(ring, gens, Mode::Kernel)?;
    let too_small = |e: PolyError| match e {
        PolyError::InfiniteComponent(k) => {
            LocError::WindowTooSmall(format!("degree {k} has no finite monomial basis in this ring"))
        }
        other => LocError::Poly(other),
    };
    let localised_homology = loc.target().homology_dims(window).map_err(too_small)?;
    let s = gens.iter().fold(ring.one(), |acc, g| acc.mul(g));
    let delta = ring.homogeneous_degree(&s).unwrap_or(0);
    let depth = ((window.hi - window.lo).max(2) as usize) & !1;
    let half = depth / 2;
    let mut levels = Levels {
        ring,
        cache: HashMap::new(),
    };
    let mut powers = vec![ring.one()];
    for i in 1..=depth {
        powers.push(powers[i - 1].mul(&s));
    }
    let mut homology_localised = BTreeMap::new();
    for k in window.degrees() {
        let at = |n: usize| k + n as i64 * delta;
        let stable = levels.rank(at(half), &powers[depth - half], at(depth)).map_err(too_small)?;
        for n in half..depth {
            let r = levels.rank(at(n), &powers[depth - n], at(depth)).map_err(too_small)?;
            if r != stable {
                return Err(LocError::WindowTooSmall(format!("degree {k}: colimit ranks not settled at depth {depth}")));
            }
        }
        for m in half + 1..=depth {
            let r = levels.rank(at(half), &powers[m - half], at(m)).map_err(too_small)?;
            if r != stable {
                return Err(LocError::WindowTooSmall(format!("degree {k}: colimit ranks not settled at depth {depth}")));
            }
        }
        homology_localised.insert(k, stable);
    }
    let equal = localised_homology == homology_localised;
    let detail = (!equal).then(|| {
        localised_homology
            .iter()
            .find(|(k, v)| homology_localised.get(k) != Some(v))
            .map(|(k, _)| format!("first mismatch in degree {k}"))
            .unwrap_or_default()
    });
    Ok(IsoReport {
        localised_homology,
        homology_localised,
        map: None,
        window: Some(window),
        depth: Some(depth),
        checks: vec![check("dimensions-by-degree", equal, detail)],
    })
}
