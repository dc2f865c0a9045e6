//! Command implementations. Each command turns a parsed spec into an [`AnalysisReport`].

use std::collections::BTreeMap;

use anyhow::{anyhow, bail, Result};

use dgforge::dgcore::DgAlgebra;
use dgforge::dgideal::{
    dgnil, is_dg_prime, is_dg_semiprime, is_gr_prime, is_nilpotent, product_space, radical_report, singular_ideals,
    PrimeAnswer,
};
use dgforge::dgmod::enumerate::all_submodules;
use dgforge::dgmod::{complement_in, essential_in, is_complement, udim_in, DgModError, DgModule, Side, UniformDim, View};
use dgforge::dgpoly::{Poly, PolyRing, Window};
use dgforge::exactla::{Field, Scalar, Subspace};
use dgforge::orelocal::{
    goldie_pipeline_findim, goldie_pipeline_poly, homology_comparison_findim, homology_comparison_poly,
    localisation_transfer_findim, localisation_transfer_poly, localise_findim, localise_poly, lying_over_findim,
    lying_over_poly, verify_localisation, IsoReport, LocError, Mode, PropertyReport, Stage, TransferReport,
};
use dgforge::report::{AnalysisReport, CheckEntry, Status};

use crate::spec::{Budgets, Input, LocalisationSpec, SpecFile};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Command {
    Validate,
    Radicals,
    Singular,
    Essential,
    Localise,
    Goldie,
    Homcompare,
    All,
}

impl Command {
    pub const EACH: [Command; 7] = [
        Command::Validate,
        Command::Radicals,
        Command::Singular,
        Command::Essential,
        Command::Localise,
        Command::Goldie,
        Command::Homcompare,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Command::Validate => "validate",
            Command::Radicals => "radicals",
            Command::Singular => "singular",
            Command::Essential => "essential",
            Command::Localise => "localise",
            Command::Goldie => "goldie",
            Command::Homcompare => "homcompare",
            Command::All => "all",
        }
    }

    pub fn parse(s: &str) -> Option<Command> {
        Command::EACH.into_iter().chain([Command::All]).find(|c| c.name() == s)
    }
}

/// Command-line overrides of the input file settings.
#[derive(Clone, Debug, Default)]
pub struct Overrides {
    pub field: Option<Field>,
    pub seed: Option<u64>,
    pub samples: Option<usize>,
    pub window: Option<i64>,
    pub budget: Option<usize>,
}

/// A built input with its effective budgets.
pub struct Session {
    pub spec: SpecFile,
    pub input: Input,
    pub budgets: Budgets,
}

impl Session {
    pub fn new(spec: SpecFile, o: &Overrides) -> Result<Session> {
        let field = match o.field {
            Some(f) => f,
            None => spec.field.field()?,
        };
        let input = spec.build(field)?;
        let mut budgets = spec.budgets.clone();
        budgets.seed = o.seed.unwrap_or(budgets.seed);
        budgets.samples = o.samples.unwrap_or(budgets.samples);
        budgets.window = o.window.unwrap_or(budgets.window);
        budgets.enumeration = o.budget.unwrap_or(budgets.enumeration);
        if budgets.window < 0 {
            bail!("key `budgets.window`: must be non-negative");
        }
        Ok(Session { spec, input, budgets })
    }

    fn window(&self) -> Window {
        Window::symmetric(self.budgets.window)
    }

    pub fn run(&self, cmd: Command) -> Result<AnalysisReport> {
        let mut report = AnalysisReport::new();
        if cmd == Command::All {
            for c in Command::EACH {
                if self.spec.analyses.is_empty() || self.spec.analyses.iter().any(|a| a == c.name()) {
                    report.extend_prefixed(c.name(), self.run_one(c)?);
                }
            }
        } else {
            report.extend_prefixed(cmd.name(), self.run_one(cmd)?);
        }
        report.normalize();
        Ok(report)
    }

    fn run_one(&self, cmd: Command) -> Result<AnalysisReport> {
        match (&self.input, cmd) {
            (Input::Findim(a), Command::Validate) => Ok(validate_findim(a)),
            (Input::Poly(r), Command::Validate) => Ok(validate_poly(r)),
            (Input::Findim(a), Command::Radicals) => Ok(radicals(a, self.budgets.enumeration)),
            (Input::Findim(a), Command::Singular) => Ok(singular(a)),
            (Input::Findim(a), Command::Essential) => self.essential(a),
            (Input::Findim(a), Command::Localise) => self.localise_findim(a),
            (Input::Poly(r), Command::Localise) => self.localise_poly(r),
            (Input::Findim(a), Command::Goldie) => self.goldie_findim(a),
            (Input::Poly(r), Command::Goldie) => self.goldie_poly(r),
            (Input::Findim(a), Command::Homcompare) => self.homcompare_findim(a),
            (Input::Poly(r), Command::Homcompare) => self.homcompare_poly(r),
            (Input::Poly(_), _) => {
                let mut r = AnalysisReport::new();
                r.push(
                    CheckEntry::new("backend", Status::Skipped, "computed")
                        .with_witness(Some("needs a finite-dimensional algebra".into())),
                );
                Ok(r)
            }
            (_, Command::All) => unreachable!("expanded by run"),
        }
    }

    fn elements(&self, a: &DgAlgebra, exprs: &[String], key: &str) -> Result<Vec<Vec<Scalar>>> {
        exprs
            .iter()
            .map(|e| a.parse(e).map_err(|err| anyhow!("key `{key}`: `{e}`: {err}")))
            .collect()
    }

    fn polys(&self, r: &PolyRing, exprs: &[String], key: &str) -> Result<Vec<Poly>> {
        exprs
            .iter()
            .map(|e| r.parse(e).map_err(|err| anyhow!("key `{key}`: `{e}`: {err}")))
            .collect()
    }

    fn essential(&self, a: &DgAlgebra) -> Result<AnalysisReport> {
        let mut out = AnalysisReport::new();
        for (i, m) in self.spec.modules.iter().enumerate() {
            let vs = self.elements(a, &m.generators, &format!("modules[{i}].generators"))?;
            out.extend_prefixed(
                &m.name,
                module_checks(a, m.side.side(), m.view.view(), &vs, self.budgets.enumeration),
            );
        }
        Ok(out)
    }

    fn localise_findim(&self, a: &DgAlgebra) -> Result<AnalysisReport> {
        let mut out = AnalysisReport::new();
        for (i, l) in self.spec.localisations.iter().enumerate() {
            let gens = self.elements(a, &l.localise_at, &format!("localisations[{i}].localise_at"))?;
            let mut r = AnalysisReport::new();
            match localise_findim(a, &gens, l.mode.mode()) {
                Ok(loc) => {
                    r.push(CheckEntry::law("construct", true));
                    r.push(CheckEntry::computed("target-dim", loc.target().dim().to_string()));
                    r.push(CheckEntry::computed("ass", span(a, loc.ass())));
                    property_checks(&mut r, &verify_localisation(&loc, self.budgets.samples, self.budgets.seed));
                }
                Err(e) => r.push(error_entry("construct", &e)),
            }
            out.extend_prefixed(&l.name, r);
        }
        Ok(out)
    }

    fn localise_poly(&self, ring: &PolyRing) -> Result<AnalysisReport> {
        let mut out = AnalysisReport::new();
        for (i, l) in self.spec.localisations.iter().enumerate() {
            let gens = self.polys(ring, &l.localise_at, &format!("localisations[{i}].localise_at"))?;
            let mut r = AnalysisReport::new();
            match localise_poly(ring, &gens, l.mode.mode()) {
                Ok(loc) => {
                    r.push(CheckEntry::law("construct", true));
                    let inverted: Vec<String> = loc
                        .target()
                        .generators()
                        .iter()
                        .filter(|g| g.laurent)
                        .map(|g| g.name.clone())
                        .collect();
                    r.push(CheckEntry::computed("inverted", inverted.join(", ")));
                    property_checks(&mut r, &verify_localisation(&loc, self.budgets.samples, self.budgets.seed));
                }
                Err(e) => r.push(error_entry("construct", &e)),
            }
            out.extend_prefixed(&l.name, r);
        }
        Ok(out)
    }

    fn goldie_findim(&self, a: &DgAlgebra) -> Result<AnalysisReport> {
        let mut out = AnalysisReport::new();
        let rep = goldie_pipeline_findim(a);
        out.push(CheckEntry::computed("branch", rep.branch.clone()));
        stages(&mut out, "", &rep.stages);
        stages(&mut out, "transfer/", &rep.transfers);
        for (i, l) in self.regular_localisations() {
            let gens = self.elements(a, &l.localise_at, &format!("localisations[{i}].localise_at"))?;
            let mut r = AnalysisReport::new();
            match localisation_transfer_findim(a, &gens, self.budgets.enumeration) {
                Ok(t) => transfer(&mut r, &t),
                Err(e) => r.push(error_entry("transfer", &e)),
            }
            out.extend_prefixed(&l.name, r);
        }
        let mut r = AnalysisReport::new();
        match lying_over_findim(a, self.budgets.enumeration) {
            Ok(t) => transfer(&mut r, &t),
            Err(e) => r.push(error_entry("applicable", &e)),
        }
        out.extend_prefixed("lying-over", r);
        Ok(out)
    }

    fn goldie_poly(&self, ring: &PolyRing) -> Result<AnalysisReport> {
        let mut out = AnalysisReport::new();
        let w = self.window();
        match goldie_pipeline_poly(ring, w) {
            Ok(rep) => {
                out.push(CheckEntry::computed("branch", rep.branch.clone()));
                stages(&mut out, "", &rep.stages);
                stages(&mut out, "transfer/", &rep.transfers);
            }
            Err(e) => out.push(error_entry("pipeline", &e)),
        }
        for (i, l) in self.spec.localisations.iter().enumerate() {
            let Some(m) = &l.ideal else { continue };
            let gens = self.polys(ring, &l.localise_at, &format!("localisations[{i}].localise_at"))?;
            let m = ring
                .parse(m)
                .map_err(|e| anyhow!("key `localisations[{i}].ideal`: {e}"))?;
            let mut r = AnalysisReport::new();
            match localisation_transfer_poly(ring, &m, &gens, w) {
                Ok(t) => transfer(&mut r, &t),
                Err(e) => r.push(error_entry("transfer", &e)),
            }
            out.extend_prefixed(&l.name, r);
        }
        let mut r = AnalysisReport::new();
        match lying_over_poly(ring, w, &[0, 1, 2, 3]) {
            Ok(t) => transfer(&mut r, &t),
            Err(e) => r.push(error_entry("applicable", &e)),
        }
        out.extend_prefixed("lying-over", r);
        Ok(out)
    }

    fn regular_localisations(&self) -> impl Iterator<Item = (usize, &LocalisationSpec)> {
        self.spec
            .localisations
            .iter()
            .enumerate()
            .filter(|(_, l)| l.mode.mode() == Mode::Regular)
    }

    fn kernel_localisations(&self) -> impl Iterator<Item = (usize, &LocalisationSpec)> {
        self.spec
            .localisations
            .iter()
            .enumerate()
            .filter(|(_, l)| l.mode.mode() == Mode::Kernel)
    }

    fn homcompare_findim(&self, a: &DgAlgebra) -> Result<AnalysisReport> {
        let mut out = AnalysisReport::new();
        for (i, l) in self.kernel_localisations() {
            let gens = self.elements(a, &l.localise_at, &format!("localisations[{i}].localise_at"))?;
            let mut r = AnalysisReport::new();
            match homology_comparison_findim(a, &gens) {
                Ok(rep) => iso(&mut r, &rep),
                Err(e) => r.push(error_entry("construct", &e)),
            }
            out.extend_prefixed(&l.name, r);
        }
        Ok(out)
    }

    fn homcompare_poly(&self, ring: &PolyRing) -> Result<AnalysisReport> {
        let mut out = AnalysisReport::new();
        for (i, l) in self.kernel_localisations() {
            let gens = self.polys(ring, &l.localise_at, &format!("localisations[{i}].localise_at"))?;
            let mut r = AnalysisReport::new();
            match homology_comparison_poly(ring, &gens, self.window()) {
                Ok(rep) => iso(&mut r, &rep),
                Err(e) => r.push(error_entry("construct", &e)),
            }
            out.extend_prefixed(&l.name, r);
        }
        Ok(out)
    }
}

/// `span{a, b}` or `0`.
pub fn span(a: &DgAlgebra, s: &Subspace) -> String {
    if s.is_zero() {
        "0".into()
    } else {
        format!("span{{{}}}", a.render_subspace(s).join(", "))
    }
}

fn udim_value(u: &UniformDim) -> (String, bool) {
    match u.exact() {
        Some(n) => (n.to_string(), true),
        None => {
            let (lo, hi) = u.bounds();
            (format!("[{lo}, {hi}]"), false)
        }
    }
}

/// Nonzero dimensions by degree, as `{k: n, ...}`; `0` when all vanish.
pub fn dims(m: &BTreeMap<i64, usize>) -> String {
    let parts: Vec<String> = m.iter().filter(|(_, &n)| n > 0).map(|(k, n)| format!("{k}: {n}")).collect();
    if parts.is_empty() {
        "0".into()
    } else {
        format!("{{{}}}", parts.join(", "))
    }
}

/// Errors that mean "out of reach" become `skipped`; the rest are failures.
fn error_entry(name: &str, e: &LocError) -> CheckEntry {
    let status = match e {
        LocError::WindowTooSmall(_)
        | LocError::NotHereditary(_)
        | LocError::Module(DgModError::BudgetExceeded { .. })
        | LocError::Module(DgModError::NotEnumerable(_)) => Status::Skipped,
        _ => Status::Fail,
    };
    CheckEntry::new(name, status, "computed").with_witness(Some(e.to_string()))
}

fn property_checks(r: &mut AnalysisReport, p: &PropertyReport) {
    r.push(CheckEntry::computed("seed", p.seed.to_string()));
    for c in &p.checks {
        r.push(
            CheckEntry::law(&c.name, c.passed)
                .with_value(format!("{} samples", c.samples))
                .with_witness(c.witness.clone()),
        );
    }
}

fn stages(r: &mut AnalysisReport, prefix: &str, list: &[Stage]) {
    for s in list {
        let mut e = CheckEntry::new(format!("{prefix}{}", s.name), s.status, "law").with_witness(s.witness.clone());
        if !s.detail.is_empty() {
            e = e.with_value(s.detail.clone());
        }
        r.push(e);
    }
}

fn transfer(r: &mut AnalysisReport, t: &TransferReport) {
    stages(r, "", &t.checks);
    if let Some(w) = t.window {
        r.push(CheckEntry::computed("window", format!("[{}, {}]", w.lo, w.hi)));
    }
}

fn iso(r: &mut AnalysisReport, rep: &IsoReport) {
    r.push(CheckEntry::computed("localised-homology", dims(&rep.localised_homology)));
    r.push(CheckEntry::computed("homology-localised", dims(&rep.homology_localised)));
    if let Some(w) = rep.window {
        r.push(CheckEntry::computed("window", format!("[{}, {}]", w.lo, w.hi)));
    }
    for c in &rep.checks {
        r.push(CheckEntry::law(&c.name, c.passed).with_witness(c.detail.clone()));
    }
}

fn prime_entry(name: &str, p: &PrimeAnswer) -> CheckEntry {
    match p {
        PrimeAnswer::Yes { reason } => CheckEntry::computed(name, "yes").with_witness(Some(reason.clone())),
        PrimeAnswer::No { reason, .. } => CheckEntry::computed(name, "no").with_witness(Some(reason.clone())),
        PrimeAnswer::Unknown { reason } => {
            CheckEntry::new(name, Status::Unknown, "computed").with_witness(Some(reason.clone()))
        }
    }
}

pub fn validate_findim(a: &DgAlgebra) -> AnalysisReport {
    let mut r = AnalysisReport::new();
    for c in a.validate().checks {
        let w = c
            .witness
            .as_ref()
            .map(|w| format!("({}); failures: {}", w.join(", "), c.failures));
        r.push(CheckEntry::law(&c.axiom, c.passed).with_witness(w));
    }
    r
}

pub fn validate_poly(ring: &PolyRing) -> AnalysisReport {
    let mut r = AnalysisReport::new();
    for (name, ok, w) in ring.validate() {
        r.push(CheckEntry::law(name, ok).with_witness(w));
    }
    r
}

pub fn radicals(a: &DgAlgebra, budget: usize) -> AnalysisReport {
    let mut r = AnalysisReport::new();
    let rep = radical_report(a, budget);
    r.push(CheckEntry::computed("classical", span(a, &rep.classical)));
    r.push(CheckEntry::computed("dgnil", span(a, &rep.dgnil.space)));
    r.push(CheckEntry::computed("dgnil-exponent", rep.dgnil_exponent.to_string()));
    r.push(CheckEntry::computed("prad", span(a, &rep.prad.space)));
    r.push(CheckEntry::law("dgnil-in-prad", rep.prad.space.includes(&rep.dgnil.space)));
    r.push(CheckEntry::law("prad-via-primes", rep.prad_independent).provenance("oracle"));
    match &rep.lattice {
        Some(l) => {
            let ok = l.dgnil == rep.dgnil.space && l.prad == rep.prad.space && l.dgrad2 == rep.dgnil.space;
            r.push(
                CheckEntry::law("lattice-agrees", ok)
                    .provenance("oracle")
                    .with_value(format!("{} ideals", l.ideals)),
            );
        }
        None => r.push(
            CheckEntry::new("lattice-agrees", Status::Skipped, "oracle")
                .with_witness(Some("ideal lattice not enumerated (field or budget)".into())),
        ),
    }
    let strict = rep.classical.includes(&rep.prad.space) && rep.classical.dim() > rep.prad.dim();
    r.push(CheckEntry::computed("classical-strictly-larger", strict.to_string()));
    match a.quotient(&rep.dgnil.space) {
        Ok((q, _)) => {
            r.push(CheckEntry::law("dgnil-of-quotient-vanishes", dgnil(&q).0.space.is_zero()));
            r.push(CheckEntry::law("quotient-semiprime", is_dg_semiprime(&q)));
        }
        Err(e) => r.push(CheckEntry::law("dgnil-of-quotient-vanishes", false).with_witness(Some(e.to_string()))),
    }
    r.push(CheckEntry::computed("semiprime", is_dg_semiprime(a).to_string()));
    r.push(prime_entry("dg-prime", &is_dg_prime(a)));
    r.push(prime_entry("gr-prime", &is_gr_prime(a)));
    r
}

pub fn singular(a: &DgAlgebra) -> AnalysisReport {
    let mut r = AnalysisReport::new();
    let s = singular_ideals(a);
    r.push(CheckEntry::computed("zeta", span(a, &s.zeta)));
    r.push(CheckEntry::computed("zeta-dg", span(a, &s.zeta_dg)));
    r.push(CheckEntry::computed("zeta-ker", span(a, &s.zeta_ker)));
    r.push(CheckEntry::computed("socle", span(a, &s.socle)));
    r.push(CheckEntry::computed("dg-socle", span(a, &s.dg_socle)));
    r.push(CheckEntry::computed("zeta-dg-left-ideal", s.zeta_dg_certificate.is_certified().to_string()));
    let bi = DgModule::regular_bi(a).with_view(View::Dg);
    r.push(CheckEntry::computed("zeta-dg-two-sided", bi.is_submodule(&s.zeta_dg).to_string()));
    let idem = !s.zeta_dg.is_zero() && product_space(a, &s.zeta_dg, &s.zeta_dg) == s.zeta_dg;
    r.push(CheckEntry::computed("zeta-dg-idempotent", idem.to_string()));
    r.push(CheckEntry::computed("zeta-dg-nilpotent", is_nilpotent(a, &s.zeta_dg).0.to_string()));
    r.push(CheckEntry::computed("zeta-equals-socle", (s.zeta == s.socle).to_string()));
    r.push(CheckEntry::computed("zeta-dg-homology", s.zeta_dg_homology.to_string()));
    let facts = |f: &dgforge::dgideal::LinearMapFacts| {
        if f.is_zero {
            "zero".to_string()
        } else {
            format!("rank {} ({} → {})", f.rank, f.source_dim, f.target_dim)
        }
    };
    r.push(CheckEntry::computed("map-from-zeta-ker", facts(&s.from_zeta_ker)));
    r.push(CheckEntry::computed("map-from-zeta-cycles", facts(&s.from_zeta_cycles)));
    for (name, ok) in &s.checks {
        r.push(CheckEntry::law(name, *ok));
    }
    r
}

/// Socle, uniform dimension, and for a declared submodule: essentiality (with an
/// enumeration cross-check when the lattice is small), a complement and udim bounds.
pub fn module_checks(a: &DgAlgebra, side: Side, view: View, gens: &[Vec<Scalar>], budget: usize) -> AnalysisReport {
    let mut r = AnalysisReport::new();
    let m = DgModule::regular(a, side).with_view(view);
    let um = udim_in(&m);
    r.push(CheckEntry::computed("socle", span(a, &um.socle)));
    let (v, exact) = udim_value(&um);
    let e = CheckEntry::computed("udim", v);
    r.push(if exact { e } else { e.uncertified() });
    if gens.is_empty() {
        return r;
    }
    let n = m.closure(gens);
    r.push(CheckEntry::computed("submodule", span(a, &n)));
    let ess = match essential_in(&m, &n) {
        Ok(e) => e,
        Err(e) => {
            r.push(CheckEntry::law("essential", false).with_witness(Some(e.to_string())));
            return r;
        }
    };
    r.push(
        CheckEntry::computed("essential", ess.essential.to_string())
            .with_witness(ess.witness.as_ref().map(|w| format!("{} meets the submodule in 0", span(a, w)))),
    );
    match all_submodules(&m, budget) {
        Ok(lattice) => {
            let literal = lattice.iter().all(|s| s.is_zero() || !s.meet(&n).is_zero());
            r.push(
                CheckEntry::law("essential-by-enumeration", literal == ess.essential)
                    .provenance("oracle")
                    .with_value(format!("{} submodules", lattice.len())),
            );
        }
        Err(e) => r.push(CheckEntry::new("essential-by-enumeration", Status::Skipped, "oracle").with_witness(Some(e.to_string()))),
    }
    match complement_in(&m, &n) {
        Ok(c) => {
            r.push(CheckEntry::computed("complement", span(a, &c.space)));
            r.push(CheckEntry::law("complement-valid", is_complement(&m, &n, &c.space)));
        }
        Err(e) => r.push(CheckEntry::law("complement-valid", false).with_witness(Some(e.to_string()))),
    }
    let un = udim_in(&m.restrict(&n));
    let (v, exact_n) = udim_value(&un);
    let e = CheckEntry::computed("submodule-udim", v);
    r.push(if exact_n { e } else { e.uncertified() });
    let (lo_n, _) = un.bounds();
    let (_, hi_m) = um.bounds();
    r.push(CheckEntry::law("udim-monotone", lo_n <= hi_m));
    if let (Some(x), Some(y)) = (un.exact(), um.exact()) {
        r.push(CheckEntry::law("udim-equal-iff-essential", (x == y) == ess.essential));
    }
    r
}
