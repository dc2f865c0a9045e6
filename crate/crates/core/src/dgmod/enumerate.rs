//! Exhaustive submodule enumeration over small prime fields.

use std::collections::HashSet;

use crate::exactla::{Field, Scalar, Subspace};

use super::module::DgModule;
use super::DgModError;

/// Every submodule of `m` (for its view), sorted by dimension then basis.
///
/// Cyclic submodules are generated from every vector up to scalars, then closed
/// under sums. `budget` caps both the number of generating vectors and the
/// lattice size.
pub fn all_submodules(m: &DgModule, budget: usize) -> Result<Vec<Subspace>, DgModError> {
    let Field::Prime(p) = m.field() else {
        return Err(DgModError::NotEnumerable("enumeration needs a prime field".into()));
    };
    let n = m.dim();
    let total = (p as f64).powi(n as i32);
    if total > budget as f64 * (p as f64 - 1.0).max(1.0) + 1.0 {
        return Err(DgModError::BudgetExceeded {
            needed: total as u64,
            budget: budget as u64,
        });
    }
    let f = m.field();
    let elems = f.elements().unwrap();
    let mut cyclic: HashSet<Subspace> = HashSet::new();
    let mut digits = vec![0usize; n];
    // Vectors whose leading nonzero entry is 1, one per line.
    loop {
        let mut i = 0;
        loop {
            if i == n {
                break;
            }
            digits[i] += 1;
            if digits[i] < p as usize {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
        if i == n {
            break;
        }
        let lead = digits.iter().rposition(|&d| d != 0);
        if lead.map(|j| digits[j]) != Some(1) {
            continue;
        }
        let v: Vec<Scalar> = digits.iter().map(|&d| elems[d].clone()).collect();
        cyclic.insert(m.closure(&[v]));
    }
    let mut cyclic: Vec<Subspace> = cyclic.into_iter().collect();
    sort_lattice(&mut cyclic);
    let mut seen: HashSet<Subspace> = cyclic.iter().cloned().collect();
    seen.insert(m.zero());
    let mut frontier: Vec<Subspace> = cyclic.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for a in &frontier {
            for c in &cyclic {
                if a.includes(c) {
                    continue;
                }
                let s = a.plus(c);
                if seen.insert(s.clone()) {
                    next.push(s);
                    if seen.len() > budget {
                        return Err(DgModError::BudgetExceeded {
                            needed: seen.len() as u64,
                            budget: budget as u64,
                        });
                    }
                }
            }
        }
        frontier = next;
    }
    let mut out: Vec<Subspace> = seen.into_iter().collect();
    sort_lattice(&mut out);
    Ok(out)
}

pub(crate) fn sort_lattice(xs: &mut [Subspace]) {
    xs.sort_by(|a, b| {
        a.dim()
            .cmp(&b.dim())
            .then_with(|| a.pivots().cmp(b.pivots()))
            .then_with(|| key(a).cmp(&key(b)))
    });
}

fn key(s: &Subspace) -> Vec<String> {
    s.basis().entries().iter().map(Scalar::to_text).collect()
}

/// Minimal nonzero members of a lattice.
pub fn minimal_nonzero(lattice: &[Subspace]) -> Vec<Subspace> {
    lattice
        .iter()
        .filter(|s| !s.is_zero())
        .filter(|s| !lattice.iter().any(|t| !t.is_zero() && *t != **s && s.includes(t)))
        .cloned()
        .collect()
}

/// Maximal proper members of a lattice.
pub fn maximal_proper(lattice: &[Subspace]) -> Vec<Subspace> {
    lattice
        .iter()
        .filter(|s| !s.is_full())
        .filter(|s| !lattice.iter().any(|t| !t.is_full() && *t != **s && t.includes(s)))
        .cloned()
        .collect()
}
