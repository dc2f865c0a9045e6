use serde::Serialize;

use crate::dgcore::DgAlgebra;
use crate::dgmod::{essential_in, is_complement, DgModule, Side, View};
use crate::exactla::Subspace;

use super::radicals::dgnil;
use super::{lann, rann, DgIdeal, IdealError};

/// Annihilator facts for a two-sided dg-ideal of a dg-semiprime algebra.
#[derive(Clone, Debug, Serialize)]
pub struct SemiprimeReport {
    #[serde(skip)]
    pub ideal: Subspace,
    /// `lann(I)`, which should equal `rann(I)`.
    #[serde(skip)]
    pub annihilator: Subspace,
    pub ideal_is_essential: bool,
    /// A nonzero dg-ideal meeting `I ⊕ ann(I)` trivially, if the sum is not essential.
    #[serde(skip)]
    pub witness: Option<Subspace>,
    pub checks: Vec<(String, bool)>,
}

impl SemiprimeReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|(_, ok)| *ok)
    }
}

/// Essentiality of two-sided dg-ideals is read in the regular bimodule.
pub fn semiprime_ideal_properties(alg: &DgAlgebra, i: &Subspace) -> Result<SemiprimeReport, IdealError> {
    let (nil, _) = dgnil(alg);
    if !nil.is_zero() {
        return Err(IdealError::NotSemiprime(nil.dim()));
    }
    DgIdeal::new(alg, i.clone(), Side::Bi)?;
    if i.is_full() {
        return Err(IdealError::WholeAlgebra);
    }
    let gens = i.basis_vectors();
    let left = lann(alg, &gens);
    let right = rann(alg, &gens);
    let bi = DgModule::regular_bi(alg).with_view(View::Dg);
    let ann_is_ideal = DgIdeal::new(alg, left.clone(), Side::Bi).is_ok();
    let sum = i.plus(&left);
    let sum_ess = if ann_is_ideal {
        Some(essential_in(&bi, &sum)?)
    } else {
        None
    };
    let ideal_is_essential = essential_in(&bi, i)?.essential;
    let checks = vec![
        ("left-equals-right-annihilator".to_string(), left == right),
        ("annihilator-is-two-sided-dg-ideal".to_string(), ann_is_ideal),
        ("ideal-meets-annihilator-trivially".to_string(), i.meet(&left).is_zero()),
        (
            "sum-with-annihilator-is-dg-essential".to_string(),
            sum_ess.as_ref().is_some_and(|e| e.essential),
        ),
        ("essential-iff-annihilator-zero".to_string(), ideal_is_essential == left.is_zero()),
        ("annihilator-is-dg-complement".to_string(), ann_is_ideal && is_complement(&bi, i, &left)),
    ];
    Ok(SemiprimeReport {
        ideal: i.clone(),
        annihilator: left,
        ideal_is_essential,
        witness: sum_ess.and_then(|e| e.witness),
        checks,
    })
}
