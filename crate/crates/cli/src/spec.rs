//! Input files: schema, key checking and construction of the algebra or ring.

use std::collections::BTreeMap;

use anyhow::{anyhow, bail, Context, Result};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use dgforge::dgcore::DgAlgebra;
use dgforge::dgmod::{Side, View};
use dgforge::dgpoly::{Generator, PolyRing};
use dgforge::exactla::{Field, Scalar};
use dgforge::orelocal::Mode;

pub const VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpecFile {
    pub version: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub about: Option<String>,
    pub field: FieldSpec,
    #[serde(default = "default_backend")]
    pub backend: BackendTag,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub algebra: Option<AlgebraSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ring: Option<RingSpec>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub modules: Vec<ModuleSpec>,
    /// Commands run by `all`; empty means every command.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub analyses: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub localisations: Vec<LocalisationSpec>,
    #[serde(default)]
    pub budgets: Budgets,
    /// Expected results by check name: a status label or a rendered value.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub expect: BTreeMap<String, String>,
}

fn default_backend() -> BackendTag {
    BackendTag::Findim
}

/// `"Q"` or `{"Fp": p}`. The strings `"F5"` and `"GF(5)"` are also accepted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FieldSpec {
    Name(String),
    Prime {
        #[serde(rename = "Fp")]
        fp: u64,
    },
}

impl FieldSpec {
    pub fn field(&self) -> Result<Field> {
        match self {
            FieldSpec::Name(s) => parse_field(s),
            FieldSpec::Prime { fp } => Field::prime(*fp).map_err(|e| anyhow!("key `field`: {e}")),
        }
    }
}

/// An integer or a decimal fraction such as `"-1/2"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Num {
    Int(i64),
    Text(String),
}

impl Num {
    fn scalar(&self, field: Field, key: &str) -> Result<Scalar> {
        match self {
            Num::Int(n) => Ok(field.int(*n)),
            Num::Text(t) => field.parse(t).map_err(|e| anyhow!("key `{key}`: {e}")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BackendTag {
    Findim,
    Poly,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AlgebraSpec {
    pub basis: Vec<String>,
    pub degrees: Vec<i64>,
    /// Coordinates of the unit.
    pub unit: Vec<Num>,
    /// `[i, j, k, c]`: `e_i e_j` has coefficient `c` on `e_k`. Omitted entries are zero.
    #[serde(default)]
    pub mul: Vec<(usize, usize, usize, Num)>,
    /// `[k, i, c]`: `d(e_i)` has coefficient `c` on `e_k`.
    #[serde(default)]
    pub diff: Vec<(usize, usize, Num)>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RingSpec {
    pub generators: Vec<GeneratorSpec>,
    /// Generator name to the expression of its differential; omitted means zero.
    #[serde(default)]
    pub differential: BTreeMap<String, String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GeneratorSpec {
    pub name: String,
    pub degree: i64,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub laurent: bool,
}

/// A regular module of the algebra, with an optional dg-submodule given by generators.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ModuleSpec {
    pub name: String,
    #[serde(default = "default_side")]
    pub side: SideTag,
    #[serde(default = "default_view")]
    pub view: ViewTag,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub generators: Vec<String>,
}

fn default_side() -> SideTag {
    SideTag::Right
}

fn default_view() -> ViewTag {
    ViewTag::Dg
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SideTag {
    Left,
    Right,
    Bi,
}

impl SideTag {
    pub fn side(self) -> Side {
        match self {
            SideTag::Left => Side::Left,
            SideTag::Right => Side::Right,
            SideTag::Bi => Side::Bi,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ViewTag {
    Dg,
    Graded,
    Ungraded,
}

impl ViewTag {
    pub fn view(self) -> View {
        match self {
            ViewTag::Dg => View::Dg,
            ViewTag::Graded => View::Graded,
            ViewTag::Ungraded => View::Ungraded,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LocalisationSpec {
    pub name: String,
    /// Generators of the multiplicative set, as element expressions.
    pub localise_at: Vec<String>,
    pub mode: ModeTag,
    /// Polynomial backend only: `m` for the ideal `mR` used by the transfer checks.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ideal: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ModeTag {
    Regular,
    Kernel,
}

impl ModeTag {
    pub fn mode(self) -> Mode {
        match self {
            ModeTag::Regular => Mode::Regular,
            ModeTag::Kernel => Mode::Kernel,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budgets {
    /// Largest submodule lattice enumerated exhaustively.
    #[serde(default = "default_enumeration")]
    pub enumeration: usize,
    #[serde(default = "default_samples")]
    pub samples: usize,
    #[serde(default)]
    pub seed: u64,
    /// Half-width `N` of the degree window `[-N, N]`.
    #[serde(default = "default_window")]
    pub window: i64,
}

fn default_enumeration() -> usize {
    4096
}

fn default_samples() -> usize {
    1000
}

fn default_window() -> i64 {
    20
}

impl Default for Budgets {
    fn default() -> Budgets {
        Budgets {
            enumeration: default_enumeration(),
            samples: default_samples(),
            seed: 0,
            window: default_window(),
        }
    }
}

const TOP_KEYS: &[&str] = &[
    "version",
    "name",
    "about",
    "field",
    "backend",
    "algebra",
    "ring",
    "modules",
    "analyses",
    "localisations",
    "budgets",
    "expect",
];
const ALGEBRA_KEYS: &[&str] = &["basis", "degrees", "unit", "mul", "diff"];
const RING_KEYS: &[&str] = &["generators", "differential"];
const GENERATOR_KEYS: &[&str] = &["name", "degree", "laurent"];
const MODULE_KEYS: &[&str] = &["name", "side", "view", "generators"];
const LOCALISATION_KEYS: &[&str] = &["name", "localise_at", "mode", "ideal"];
const BUDGET_KEYS: &[&str] = &["enumeration", "samples", "seed", "window"];

fn unknown_keys(v: &Value, path: &str, allowed: &[&str], out: &mut Vec<String>) {
    if let Some(obj) = v.as_object() {
        for k in obj.keys() {
            if !allowed.contains(&k.as_str()) {
                out.push(if path.is_empty() { k.clone() } else { format!("{path}.{k}") });
            }
        }
    }
}

fn each<'a>(v: &'a Value, key: &str) -> impl Iterator<Item = (usize, &'a Value)> {
    v.get(key).and_then(Value::as_array).into_iter().flatten().enumerate()
}

/// Keys outside the schema, as dotted paths.
pub fn unknown_keys_of(v: &Value) -> Vec<String> {
    let mut out = Vec::new();
    unknown_keys(v, "", TOP_KEYS, &mut out);
    if let Some(a) = v.get("algebra") {
        unknown_keys(a, "algebra", ALGEBRA_KEYS, &mut out);
    }
    if let Some(r) = v.get("ring") {
        unknown_keys(r, "ring", RING_KEYS, &mut out);
        for (i, g) in each(r, "generators") {
            unknown_keys(g, &format!("ring.generators[{i}]"), GENERATOR_KEYS, &mut out);
        }
    }
    for (i, m) in each(v, "modules") {
        unknown_keys(m, &format!("modules[{i}]"), MODULE_KEYS, &mut out);
    }
    for (i, l) in each(v, "localisations") {
        unknown_keys(l, &format!("localisations[{i}]"), LOCALISATION_KEYS, &mut out);
    }
    if let Some(b) = v.get("budgets") {
        unknown_keys(b, "budgets", BUDGET_KEYS, &mut out);
    }
    out
}

/// Parses a spec. Unknown keys are errors when `strict`, otherwise they come back as warnings.
pub fn parse_spec(text: &str, strict: bool) -> Result<(SpecFile, Vec<String>)> {
    let value: Value =
        serde_json::from_str(text).map_err(|e| anyhow!("line {}, column {}: {e}", e.line(), e.column()))?;
    let unknown = unknown_keys_of(&value);
    if strict && !unknown.is_empty() {
        bail!("unknown keys: {}", unknown.join(", "));
    }
    if let Some(v) = value.get("version") {
        if v.as_u64() != Some(VERSION as u64) {
            bail!("key `version`: unsupported version {v} (expected {VERSION})");
        }
    }
    // Re-read from text so that type errors carry positions.
    let spec: SpecFile = serde_json::from_str(text)
        .map_err(|e| anyhow!("line {}, column {}: {e}", e.line(), e.column()))?;
    let warnings = unknown.into_iter().map(|k| format!("ignoring unknown key `{k}`")).collect();
    Ok((spec, warnings))
}

/// Canonical serialization; `parse_spec` reads it back to an equal value.
pub fn emit_spec(spec: &SpecFile) -> String {
    serde_json::to_string_pretty(spec).expect("spec serializes")
}

/// `Q`, `F5`, `GF(5)` or `GF5`.
pub fn parse_field(text: &str) -> Result<Field> {
    let t = text.trim();
    if matches!(t, "Q" | "QQ") {
        return Ok(Field::Rational);
    }
    let digits = t
        .strip_prefix("GF(")
        .and_then(|r| r.strip_suffix(')'))
        .or_else(|| t.strip_prefix("GF"))
        .or_else(|| t.strip_prefix("Fp"))
        .or_else(|| t.strip_prefix('F'))
        .ok_or_else(|| anyhow!("key `field`: cannot read `{text}`"))?;
    let p: u64 = digits.parse().with_context(|| format!("key `field`: cannot read `{text}`"))?;
    Field::prime(p).map_err(|e| anyhow!("key `field`: {e}"))
}

pub enum Input {
    Findim(DgAlgebra),
    Poly(PolyRing),
}

impl SpecFile {
    pub fn build(&self, field: Field) -> Result<Input> {
        match self.backend {
            BackendTag::Findim => {
                let a = self
                    .algebra
                    .as_ref()
                    .ok_or_else(|| anyhow!("key `algebra` is required for the findim backend"))?;
                Ok(Input::Findim(build_algebra(field, a)?))
            }
            BackendTag::Poly => {
                let r = self.ring.as_ref().ok_or_else(|| anyhow!("key `ring` is required for the poly backend"))?;
                Ok(Input::Poly(build_ring(field, r)?))
            }
        }
    }
}

fn build_algebra(field: Field, a: &AlgebraSpec) -> Result<DgAlgebra> {
    let mut mul = Vec::new();
    for (n, (i, j, k, c)) in a.mul.iter().enumerate() {
        mul.push((*i, *j, *k, c.scalar(field, &format!("algebra.mul[{n}]"))?));
    }
    let mut diff = Vec::new();
    for (n, (k, i, c)) in a.diff.iter().enumerate() {
        diff.push((*k, *i, c.scalar(field, &format!("algebra.diff[{n}]"))?));
    }
    let unit = a
        .unit
        .iter()
        .enumerate()
        .map(|(n, c)| c.scalar(field, &format!("algebra.unit[{n}]")))
        .collect::<Result<Vec<_>>>()?;
    DgAlgebra::new(field, a.basis.clone(), a.degrees.clone(), mul, unit, diff)
        .map_err(|e| anyhow!("key `algebra`: {e}"))
}

fn build_ring(field: Field, r: &RingSpec) -> Result<PolyRing> {
    let gens: Vec<Generator> = r
        .generators
        .iter()
        .map(|g| Generator {
            name: g.name.clone(),
            degree: g.degree,
            laurent: g.laurent,
        })
        .collect();
    if let Some(k) = r.differential.keys().find(|k| !gens.iter().any(|g| &g.name == *k)) {
        bail!("key `ring.differential.{k}`: unknown generator");
    }
    let diffs: Vec<&str> = gens
        .iter()
        .map(|g| r.differential.get(&g.name).map(String::as_str).unwrap_or("0"))
        .collect();
    PolyRing::from_exprs(field, gens, &diffs).map_err(|e| anyhow!("key `ring`: {e}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    // K[x]/(x^2) with d = 0 over F3.
    const MINIMAL: &str = r#"{"version":1,"field":{"Fp":3},
        "algebra":{"basis":["1","x"],"degrees":[0,0],"unit":[1,0],
        "mul":[[0,0,0,1],[0,1,1,1],[1,0,1,1]]}}"#;

    #[test]
    fn parses_and_round_trips() {
        let (s, w) = parse_spec(MINIMAL, true).unwrap();
        assert!(w.is_empty());
        assert_eq!(parse_spec(&emit_spec(&s), true).unwrap().0, s);
        let Input::Findim(a) = s.build(s.field.field().unwrap()).unwrap() else {
            panic!("expected an algebra")
        };
        assert!(a.validate().is_valid());
    }

    #[test]
    fn unknown_keys_strict_and_lenient() {
        let text = MINIMAL.replace("\"version\":1", "\"version\":1,\"colour\":2");
        assert!(parse_spec(&text, true).unwrap_err().to_string().contains("colour"));
        let (_, w) = parse_spec(&text, false).unwrap();
        assert_eq!(w.len(), 1);
        let nested = MINIMAL.replace("\"unit\"", "\"colour\":0,\"unit\"");
        assert!(parse_spec(&nested, true).unwrap_err().to_string().contains("algebra.colour"));
    }

    #[test]
    fn diagnostics_name_lines_and_keys() {
        let err = parse_spec("{\"version\": 1,\n \"field\": }", true).unwrap_err().to_string();
        assert!(err.contains("line 2"), "{err}");
        let err = parse_spec(&MINIMAL.replace("\"version\":1", "\"version\":2"), true)
            .unwrap_err()
            .to_string();
        assert!(err.contains("version"), "{err}");
        let (s, _) = parse_spec(&MINIMAL.replace("[1,0,1,1]", "[1,0,1,\"1/0\"]"), true).unwrap();
        let err = s.build(Field::Prime(3)).err().unwrap().to_string();
        assert!(err.contains("algebra.mul[2]"), "{err}");
    }

    #[test]
    fn fields() {
        assert_eq!(parse_field("Q").unwrap(), Field::Rational);
        assert_eq!(parse_field("GF(7)").unwrap(), Field::Prime(7));
        assert_eq!(parse_field("F2").unwrap(), Field::Prime(2));
        assert!(parse_field("F4").is_err());
        let f: FieldSpec = serde_json::from_str("{\"Fp\": 5}").unwrap();
        assert_eq!(f.field().unwrap(), Field::Prime(5));
    }
}
