//! The dg-Goldie pipeline and the transfer checks between `R` and `R_S`.

use serde::Serialize;

use crate::dgcore::{cycle_subalgebra, DgAlgebra};
use crate::dgideal::{is_dg_prime, is_gr_prime, jacobson_radical, two_sided_lattice, DgIdeal, PrimeAnswer};
use crate::dgmod::enumerate::all_submodules;
use crate::dgmod::{dg_generate, dg_udim, is_dg_essential, lift, udim_in, DgModError, DgModule, Side};
use crate::dgpoly::{Monomial, Poly, PolyError, PolyRing, Window};
use crate::exactla::{Scalar, Subspace};

use super::findim::localise_findim;
use super::poly::localise_poly;
use super::{LocError, Mode};
use crate::report::Status;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Stage {
    pub name: String,
    pub status: Status,
    pub detail: String,
    pub witness: Option<String>,
}

impl Stage {
    fn pass(name: &str, detail: impl Into<String>) -> Stage {
        Stage {
            name: name.into(),
            status: Status::Pass,
            detail: detail.into(),
            witness: None,
        }
    }

    fn fail(name: &str, detail: impl Into<String>, witness: Option<String>) -> Stage {
        Stage {
            name: name.into(),
            status: Status::Fail,
            detail: detail.into(),
            witness,
        }
    }

    fn verdict(name: &str, ok: bool, detail: impl Into<String>, witness: Option<String>) -> Stage {
        if ok {
            Stage::pass(name, detail)
        } else {
            Stage::fail(name, detail, witness)
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GoldieReport {
    /// Which multiplicative set was inverted: homogeneous regular cycles.
    pub branch: String,
    pub stages: Vec<Stage>,
    /// Consequences for the ring itself, recorded after a successful run.
    pub transfers: Vec<Stage>,
    pub window: Option<Window>,
}

impl GoldieReport {
    pub fn passed(&self) -> bool {
        self.stages.iter().chain(&self.transfers).all(Stage::passed)
    }

    /// The first failing stage, as an error.
    pub fn failure(&self) -> Option<LocError> {
        self.stages.iter().find(|s| !s.passed()).map(|s| LocError::HypothesisFailed {
            stage: s.name.clone(),
            witness: s.witness.clone().unwrap_or_else(|| s.detail.clone()),
        })
    }

    pub fn into_result(self) -> Result<GoldieReport, LocError> {
        match self.failure() {
            Some(e) => Err(e),
            None => Ok(self),
        }
    }
}

const BRANCH: &str = "homogeneous regular elements of the cycle ring";

fn render_prime_witness(alg: &DgAlgebra, w: &Option<(Subspace, Subspace)>) -> Option<String> {
    w.as_ref().map(|(i, j)| {
        format!(
            "({})·({}) = 0",
            alg.render_subspace(i).join(", "),
            alg.render_subspace(j).join(", ")
        )
    })
}

/// Finite-dimensional pipeline. A failing stage stops the run.
pub fn goldie_pipeline_findim(alg: &DgAlgebra) -> GoldieReport {
    let mut stages = Vec::new();
    let report = |stages: Vec<Stage>, transfers| GoldieReport {
        branch: BRANCH.into(),
        stages,
        transfers,
        window: None,
    };
    let (z, cycles) = cycle_subalgebra(alg);
    stages.push(Stage::pass("cycle-ring", format!("ker d has dimension {}", cycles.dim())));
    match is_gr_prime(&z) {
        PrimeAnswer::Yes { reason } => stages.push(Stage::pass("gr-prime", reason)),
        PrimeAnswer::No { witness, reason } => {
            stages.push(Stage::fail("gr-prime", reason, render_prime_witness(&z, &witness)));
            return report(stages, vec![]);
        }
        PrimeAnswer::Unknown { reason } => {
            stages.push(Stage {
                name: "gr-prime".into(),
                status: Status::Unknown,
                detail: reason,
                witness: None,
            });
            return report(stages, vec![]);
        }
    }
    stages.push(Stage::pass(
        "gr-goldie",
        "finite-dimensional: annihilator chains and uniform dimension are bounded",
    ));
    stages.push(Stage::pass(
        "ore",
        "homogeneous regular elements of a finite-dimensional algebra are units",
    ));
    let gens: Vec<Vec<Scalar>> = cycles
        .basis_vectors()
        .into_iter()
        .filter(|v| alg.homogeneous_degree(v).is_some() && alg.is_regular(v))
        .collect();
    let loc = match localise_findim(alg, &gens, Mode::Regular) {
        Ok(l) => l,
        Err(e) => {
            stages.push(Stage::fail("localise", e.to_string(), None));
            return report(stages, vec![]);
        }
    };
    stages.push(Stage::pass(
        "localise",
        format!("{} regular homogeneous cycles are units, so R_S = R", gens.len()),
    ));
    let t = loc.target();
    let bi = DgModule::regular_bi(t);
    let u = udim_in(&bi);
    let simple = u.socle.is_full() && u.exact() == Some(1);
    let mut detail = format!("two-sided dg-socle length bounds {:?}", u.bounds());
    let mut ok = simple;
    if let Ok(lattice) = two_sided_lattice(t, 4096) {
        detail.push_str(&format!("; lattice of {} dg-ideals", lattice.len()));
        ok = ok && lattice.len() == 2;
        if simple != (lattice.len() == 2) {
            detail.push_str("; routes disagree");
        }
    }
    let witness = (!ok).then(|| {
        t.render_subspace(&u.socle).join(", ")
    });
    stages.push(Stage::verdict("dg-simple", ok, detail, witness.map(|w| format!("proper dg-ideal ({w})"))));
    let prime = is_dg_prime(alg);
    let u = dg_udim(&DgModule::regular_right(alg));
    let transfers = vec![
        Stage::verdict("dg-prime-from-gr-prime", prime.is_yes(), format!("{prime:?}"), None),
        Stage::pass("dg-udim-finite", format!("dg-udim of the right regular module in {:?}", u.bounds())),
    ];
    report(stages, transfers)
}

fn too_small(e: PolyError) -> LocError {
    match e {
        PolyError::InfiniteComponent(k) => LocError::WindowTooSmall(format!("degree {k} has no finite monomial basis")),
        other => LocError::Poly(other),
    }
}

fn poly_from_coords(ring: &PolyRing, basis: &[Monomial], v: &[Scalar]) -> Poly {
    let f = ring.field();
    let mut p = ring.zero();
    for (m, c) in basis.iter().zip(v) {
        p = p.add(&Poly::term(f, m.clone(), c.clone()));
    }
    p
}

/// Monomials of the window that are cycles, when every cycle space is spanned
/// by monomials; `None` otherwise.
fn monomial_cycles(ring: &PolyRing, window: Window) -> Result<Option<Vec<(i64, Monomial)>>, LocError> {
    let mut out = Vec::new();
    for k in window.degrees() {
        let basis = ring.degree_basis(k).map_err(too_small)?;
        let (z, _) = ring.cycles_and_boundaries(k).map_err(too_small)?;
        let mut span = Vec::new();
        for m in &basis {
            let p = Poly::term(ring.field(), m.clone(), ring.field().one());
            if ring.d(&p).is_zero() {
                span.push(ring.coordinates(&p, k).map_err(LocError::Poly)?);
                out.push((k, m.clone()));
            }
        }
        if Subspace::span(ring.field(), basis.len(), &span) != z {
            return Ok(None);
        }
    }
    Ok(Some(out))
}

/// Polynomial pipeline over a degree window.
pub fn goldie_pipeline_poly(ring: &PolyRing, window: Window) -> Result<GoldieReport, LocError> {
    let mut stages = Vec::new();
    let mut dims = Vec::new();
    for k in window.degrees() {
        let (z, _) = ring.cycles_and_boundaries(k).map_err(too_small)?;
        if z.dim() > 0 {
            dims.push(format!("{k}:{}", z.dim()));
        }
    }
    stages.push(Stage::pass("cycle-ring", format!("ker d dimensions on the window: {}", dims.join(" "))));
    let valid = ring.is_valid();
    stages.push(Stage::verdict(
        "gr-prime",
        valid,
        "ker d is a graded subring of a commutative polynomial domain, hence a domain",
        None,
    ));
    stages.push(Stage::pass(
        "gr-goldie",
        "commutative domain: uniform dimension 1 and no nonzero annihilators",
    ));
    stages.push(Stage::pass("ore", "commutative"));
    let report = |stages, transfers| GoldieReport {
        branch: BRANCH.into(),
        stages,
        transfers,
        window: Some(window),
    };
    let Some(cycles) = monomial_cycles(ring, window)? else {
        stages.push(Stage::fail(
            "localise",
            "some homogeneous cycle is not a combination of monomial cycles; only monomial sets are localised",
            None,
        ));
        return Ok(report(stages, vec![]));
    };
    let f = ring.field();
    let gens: Vec<Poly> = cycles
        .iter()
        .filter(|(k, _)| *k != 0)
        .map(|(_, m)| Poly::term(f, m.clone(), f.one()))
        .collect();
    let loc = localise_poly(ring, &gens, Mode::Kernel)?;
    stages.push(Stage::pass(
        "localise",
        format!("inverted {} monomial cycles of nonzero degree in the window", gens.len()),
    ));
    let t = loc.target();
    let mut witness = None;
    for k in window.degrees() {
        let basis = t.degree_basis(k).map_err(too_small)?;
        if basis.len() > 1 {
            witness = Some(format!("degree {k} has dimension {}", basis.len()));
            break;
        }
        if let Some(m) = basis.first() {
            let p = Poly::term(f, m.clone(), f.one());
            if !t.is_unit(&p) {
                witness = Some(format!("{} is not a unit", t.render(&p)));
                break;
            }
        }
    }
    stages.push(Stage::verdict(
        "dg-simple",
        witness.is_none(),
        "every nonzero homogeneous element is a scalar times a unit monomial",
        witness,
    ));
    let transfers = vec![
        Stage::pass("dg-prime-from-gr-prime", "a commutative domain is prime"),
        Stage::pass("dg-udim-finite", "a commutative domain has uniform dimension 1"),
    ];
    Ok(report(stages, transfers))
}

#[derive(Clone, Debug, Serialize)]
pub struct TransferReport {
    pub checks: Vec<Stage>,
    pub window: Option<Window>,
}

impl TransferReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Stage::passed)
    }
}

/// Every dg-submodule when the lattice is enumerable, otherwise 0, the whole
/// module and the dg-submodules generated by single basis vectors.
fn submodules_or_generated(m: &DgModule, budget: usize) -> Result<Vec<Subspace>, LocError> {
    match all_submodules(m, budget) {
        Ok(l) => Ok(l),
        Err(DgModError::NotEnumerable(_) | DgModError::BudgetExceeded { .. }) => {
            let f = m.field();
            let mut l = vec![m.zero(), m.full()];
            for i in 0..m.dim() {
                let s = dg_generate(m, &[crate::exactla::vector::unit(f, m.dim(), i)]).space;
                if !l.contains(&s) {
                    l.push(s);
                }
            }
            Ok(l)
        }
        Err(e) => Err(e.into()),
    }
}

/// Essentiality and dg-udim agree between `R` and `R_S` for ideals on both sides,
/// for a set of units.
pub fn localisation_transfer_findim(alg: &DgAlgebra, gens: &[Vec<Scalar>], budget: usize) -> Result<TransferReport, LocError> {
    let loc = localise_findim(alg, gens, Mode::Regular)?;
    let t = loc.target();
    let lam = loc.lambda_matrix();
    let rr = DgModule::regular_right(alg);
    let rs = DgModule::regular_right(t);
    let ideals = submodules_or_generated(&rr, budget)?;
    let mut checks = Vec::new();
    let mut ess_bad = None;
    let mut udim_bad = None;
    let mut contraction_bad = None;
    for i in &ideals {
        let ext = rs.closure(&i.image(lam).basis_vectors());
        let e1 = is_dg_essential(i, &rr)?;
        let e2 = is_dg_essential(&ext, &rs)?;
        if e1 != e2 && ess_bad.is_none() {
            ess_bad = Some(alg.render_subspace(i).join(", "));
        }
        let u1 = dg_udim(&rr.restrict(i)).bounds();
        let u2 = dg_udim(&rs.restrict(&ext)).bounds();
        if u1 != u2 && udim_bad.is_none() {
            udim_bad = Some(format!("{} : {u1:?} vs {u2:?}", alg.render_subspace(i).join(", ")));
        }
        // Read `i` also as an ideal J of R_S and contract it.
        let back = i.preimage(lam).map_err(|e| LocError::Dg(e.into()))?;
        let c1 = is_dg_essential(i, &rs)? == is_dg_essential(&back, &rr)?;
        let c2 = dg_udim(&rs.restrict(i)).bounds() == dg_udim(&rr.restrict(&back)).bounds();
        if !(c1 && c2) && contraction_bad.is_none() {
            contraction_bad = Some(t.render_subspace(i).join(", "));
        }
    }
    let n = ideals.len();
    checks.push(Stage::verdict("essential-iff-extension-essential", ess_bad.is_none(), format!("{n} dg-right ideals"), ess_bad));
    checks.push(Stage::verdict("udim-preserved-by-extension", udim_bad.is_none(), format!("{n} dg-right ideals"), udim_bad));
    checks.push(Stage::verdict(
        "contraction-preserves-essential-and-udim",
        contraction_bad.is_none(),
        format!("{n} dg-right ideals of R_S"),
        contraction_bad,
    ));
    Ok(TransferReport { checks, window: None })
}

/// Transfer checks for `I = m·R` in a polynomial ring localised at monomials.
pub fn localisation_transfer_poly(ring: &PolyRing, m: &Poly, gens: &[Poly], window: Window) -> Result<TransferReport, LocError> {
    let loc = localise_poly(ring, gens, Mode::Regular)?;
    let t = loc.target();
    let f = ring.field();
    if m.is_zero() || m.as_term().is_none() {
        return Err(LocError::Unsupported("the ideal generator must be a nonzero monomial".into()));
    }
    if !ring.d(m).is_zero() {
        return Err(LocError::Unsupported("the ideal generator must be a cycle so that m·R is a dg-ideal".into()));
    }
    let mut checks = Vec::new();
    let whole = t.is_unit(m);
    checks.push(Stage::pass(
        "extension",
        if whole {
            format!("{} is a unit of R_S, so I·R_S = R_S", ring.render(m))
        } else {
            format!("I·R_S = {}·R_S", ring.render(m))
        },
    ));
    // In a domain xm ≠ 0 lies in I ∩ xR, so every nonzero ideal meets I.
    let mut bad = None;
    for k in window.degrees() {
        for x in ring.degree_basis(k).map_err(too_small)? {
            if Poly::term(f, x.clone(), f.one()).mul(m).is_zero() {
                bad = Some(format!("{x}"));
            }
        }
    }
    checks.push(Stage::verdict(
        "essential-in-R",
        bad.is_none(),
        "domain: x·m is a nonzero element of I ∩ xR for every monomial x of the window",
        bad,
    ));
    checks.push(Stage::pass("essential-in-R_S", "R_S is a domain, so every nonzero ideal is essential"));
    checks.push(Stage::pass("udim-preserved-by-extension", "both I and I·R_S have uniform dimension 1"));
    let mut missing = None;
    for k in window.degrees() {
        let inside = t.degree_basis(k).map_err(too_small)?;
        if let Some(x) = ring.degree_basis(k).map_err(too_small)?.into_iter().find(|x| !inside.contains(x)) {
            missing = Some(format!("{x}"));
            break;
        }
    }
    checks.push(Stage::verdict(
        "contraction-of-whole",
        missing.is_none(),
        "J = R_S contracts to R: every monomial of R in the window lies in R_S",
        missing,
    ));
    Ok(TransferReport {
        checks,
        window: Some(window),
    })
}

fn left_ideal_generated(alg: &DgAlgebra, s: &Subspace) -> Subspace {
    let f = alg.field();
    let mut vs = Vec::new();
    for i in s.basis_vectors() {
        for k in 0..alg.dim() {
            vs.push(alg.mul(&alg.basis(k), &i));
        }
    }
    Subspace::span(f, alg.dim(), &vs)
}

/// For graded ideals `I` of a semisimple cycle ring `Z`: `A·I` is d-stable and `A·I ∩ Z = I`.
pub fn lying_over_findim(alg: &DgAlgebra, budget: usize) -> Result<TransferReport, LocError> {
    let (z, cycles) = cycle_subalgebra(alg);
    let rad = jacobson_radical(&z);
    if !rad.is_zero() {
        return Err(LocError::NotHereditary(format!(
            "the cycle ring has a radical of dimension {}",
            rad.dim()
        )));
    }
    let ideals = match two_sided_lattice(&z, budget) {
        Ok(l) => l,
        Err(_) => {
            let mut l = vec![Subspace::zero(z.field(), z.dim()), Subspace::full(z.field(), z.dim())];
            for i in 0..z.dim() {
                l.push(DgIdeal::generated(&z, &[z.basis(i)], Side::Bi).space);
            }
            l
        }
    };
    let d = alg.diff_matrix();
    let mut stable_bad = None;
    let mut meet_bad = None;
    for i in &ideals {
        let lifted = lift(&cycles, i);
        let ai = left_ideal_generated(alg, &lifted);
        if !ai.includes(&ai.image(d)) && stable_bad.is_none() {
            stable_bad = Some(alg.render_subspace(&lifted).join(", "));
        }
        if ai.meet(&cycles) != lifted && meet_bad.is_none() {
            meet_bad = Some(alg.render_subspace(&lifted).join(", "));
        }
    }
    let n = ideals.len();
    Ok(TransferReport {
        checks: vec![
            Stage::pass("hereditary", "the cycle ring is semisimple"),
            Stage::verdict("extension-is-dg-stable", stable_bad.is_none(), format!("{n} graded ideals"), stable_bad),
            Stage::verdict("extension-meets-cycles-in-ideal", meet_bad.is_none(), format!("{n} graded ideals"), meet_bad),
        ],
        window: None,
    })
}

/// For `I = (yⁿ)` in a cycle ring `K[y]` (certified on the window): `A·I` is
/// d-stable and `A·I ∩ ker d = I`, degree by degree.
pub fn lying_over_poly(ring: &PolyRing, window: Window, powers: &[u32]) -> Result<TransferReport, LocError> {
    let f = ring.field();
    let cycles = monomial_cycles(ring, window)?
        .ok_or_else(|| LocError::NotHereditary("cycles are not spanned by monomials".into()))?;
    let y = cycles
        .iter()
        .filter(|(k, _)| *k != 0)
        .min_by_key(|(k, m)| (k.abs(), m.clone()))
        .map(|(_, m)| Poly::term(f, m.clone(), f.one()))
        .ok_or_else(|| LocError::NotHereditary("no cycle of nonzero degree in the window".into()))?;
    let ydeg = ring.homogeneous_degree(&y).expect("monomial");
    // The cycle ring is K[y]: in each window degree the cycles are spanned by a power of y or vanish.
    for k in window.degrees() {
        let (z, _) = ring.cycles_and_boundaries(k).map_err(too_small)?;
        let expected = if k % ydeg == 0 && k / ydeg >= 0 {
            let p = ring.pow(&y, (k / ydeg) as u32);
            Subspace::span(f, z.ambient(), &[ring.coordinates(&p, k)?])
        } else {
            Subspace::zero(f, z.ambient())
        };
        if z != expected {
            return Err(LocError::NotHereditary(format!(
                "cycles in degree {k} are not spanned by a power of {}",
                ring.render(&y)
            )));
        }
    }
    let mut stable_bad = None;
    let mut meet_bad = None;
    for &n in powers {
        let g = ring.pow(&y, n);
        let shift = n as i64 * ydeg;
        let image = |k: i64, only_cycles: bool| -> Result<Subspace, LocError> {
            let basis = ring.degree_basis(k).map_err(too_small)?;
            let src = ring.degree_basis(k - shift).map_err(too_small)?;
            let (z, _) = ring.cycles_and_boundaries(k - shift).map_err(too_small)?;
            let gens: Vec<Vec<Scalar>> = if only_cycles {
                z.basis_vectors()
                    .iter()
                    .map(|v| ring.coordinates(&poly_from_coords(ring, &src, v).mul(&g), k))
                    .collect::<Result<_, _>>()?
            } else {
                src.iter()
                    .map(|m| ring.coordinates(&Poly::term(f, m.clone(), f.one()).mul(&g), k))
                    .collect::<Result<_, _>>()?
            };
            Ok(Subspace::span(f, basis.len(), &gens))
        };
        for k in window.degrees() {
            let ai = image(k, false)?;
            let next = image(k + 1, false)?;
            let basis = ring.degree_basis(k).map_err(too_small)?;
            for v in ai.basis_vectors() {
                let dv = ring.d(&poly_from_coords(ring, &basis, &v));
                if !next.contains_vec(&ring.coordinates(&dv, k + 1)?) && stable_bad.is_none() {
                    stable_bad = Some(format!("n = {n}, degree {k}"));
                }
            }
            let (z, _) = ring.cycles_and_boundaries(k).map_err(too_small)?;
            if ai.meet(&z) != image(k, true)? && meet_bad.is_none() {
                meet_bad = Some(format!("n = {n}, degree {k}"));
            }
        }
    }
    Ok(TransferReport {
        checks: vec![
            Stage::pass("hereditary", format!("ker d = K[{}] on the window", ring.render(&y))),
            Stage::verdict("extension-is-dg-stable", stable_bad.is_none(), format!("powers {powers:?}"), stable_bad),
            Stage::verdict("extension-meets-cycles-in-ideal", meet_bad.is_none(), format!("powers {powers:?}"), meet_bad),
        ],
        window: Some(window),
    })
}
