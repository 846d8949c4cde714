//! Occurrences of the linear characters `det` and `χ` in the simple modules
//! `L_Q`, coinvariant-type checks, and the `ε_χ` lower bounds.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::params::{gordon_params, hook_k, hook_params, rect_params, Params};
use crate::shapes::{is_vertical_strip, Bipartition, Partition};
use crate::tableaux::{FillingFilter, LowestWeight, QFilling};

/// The four linear characters of the hyperoctahedral group, given by their
/// values on a transposition `(12)` and on the sign change `ζ₁`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LinearChar {
    Triv,
    Det,
    Chi,
    ChiPrime,
}

impl LinearChar {
    pub const ALL: [LinearChar; 4] = [LinearChar::Triv, LinearChar::Det, LinearChar::Chi, LinearChar::ChiPrime];

    /// `(value on (12), value on ζ₁)`.
    pub fn generator_values(self) -> (i8, i8) {
        match self {
            LinearChar::Triv => (1, 1),
            LinearChar::Det => (-1, -1),
            LinearChar::Chi => (-1, 1),
            LinearChar::ChiPrime => (1, -1),
        }
    }

    /// Value on a signed permutation with permutation sign `perm_sign` and
    /// product of signs `sign_product`.
    pub fn value(self, perm_sign: i8, sign_product: i8) -> i8 {
        let (t, z) = self.generator_values();
        let a = if perm_sign < 0 { t } else { 1 };
        let b = if sign_product < 0 { z } else { 1 };
        a * b
    }

    pub fn name(self) -> &'static str {
        match self {
            LinearChar::Triv => "triv",
            LinearChar::Det => "det",
            LinearChar::Chi => "chi",
            LinearChar::ChiPrime => "chi_prime",
        }
    }

    /// Which diagram must be a vertical strip for an occurrence, and the
    /// required parity of `Q(b) - β(b)`.
    fn occurrence_data(self) -> Result<(u8, u32)> {
        match self {
            LinearChar::Det => Ok((1, 1)),
            LinearChar::Chi => Ok((0, 0)),
            other => Err(Error::UnsupportedCharacter(other.name().into())),
        }
    }
}

impl fmt::Display for LinearChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LinearChar {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        LinearChar::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::UnsupportedCharacter(s.into()))
    }
}

/// The parity condition for `σ` to occur in `L_Q`: `Q(b) ≡ β(b) + 1` for
/// det and `Q(b) ≡ β(b)` for χ, modulo 2, on every box.
pub fn parity_pattern(lambda: &Bipartition, sigma: LinearChar) -> Result<impl Fn(&QFilling) -> bool> {
    let (_, offset) = sigma.occurrence_data()?;
    let betas: Vec<u32> = lambda.boxes().iter().map(|b| b.beta as u32).collect();
    Ok(move |q: &QFilling| {
        q.values().len() == betas.len()
            && q.values().iter().zip(&betas).all(|(&v, &beta)| (v + beta) % 2 == offset)
    })
}

/// Whether `σ` occurs (necessarily once) in `L_Q`.
///
/// Requires the parity pattern and row-strictness. For generic `Q` that is
/// enough; otherwise the relevant diagram must be a vertical strip.
pub fn occurs_linear(lw: &LowestWeight, q: &QFilling, sigma: LinearChar) -> Result<bool> {
    let (sheet, _) = sigma.occurrence_data()?;
    if !parity_pattern(lw.lambda(), sigma)?(q) || !q.is_row_strict(lw.lambda()) {
        return Ok(false);
    }
    if lw.is_generic(q) {
        return Ok(true);
    }
    Ok(is_vertical_strip(&lw.diagram_of_q(q)?, sheet))
}

/// Fillings carrying a linear character, split by genericity.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LinearMultiplicity {
    pub generic: Vec<QFilling>,
    /// Non-generic fillings that pass the diagram test.
    pub nongeneric: Vec<QFilling>,
    /// Non-generic candidates (parity pattern, row-strict) that fail it.
    pub rejected: Vec<QFilling>,
}

impl LinearMultiplicity {
    pub fn generic_count(&self) -> usize {
        self.generic.len()
    }

    pub fn total_count(&self) -> usize {
        self.generic.len() + self.nongeneric.len()
    }

    /// All occurring fillings in lexicographic order.
    pub fn fillings(&self) -> Vec<QFilling> {
        let mut all: Vec<_> = self.generic.iter().chain(&self.nongeneric).cloned().collect();
        all.sort();
        all
    }
}

/// Counts `Q ∈ Tab` with [`occurs_linear`], enumerating only fillings with
/// the parity pattern that are row-strict.
pub fn multiplicity_linear(lw: &LowestWeight, sigma: LinearChar) -> Result<LinearMultiplicity> {
    let (sheet, offset) = sigma.occurrence_data()?;
    let candidates = lw.enumerate_filtered(FillingFilter {
        parity_offset: Some(offset),
        row_strict: true,
    })?;
    let verdicts: Vec<(bool, bool)> = candidates
        .par_iter()
        .map(|q| {
            if lw.is_generic(q) {
                Ok((true, true))
            } else {
                Ok((false, is_vertical_strip(&lw.diagram_of_q(q)?, sheet)))
            }
        })
        .collect::<Result<_>>()?;
    let mut out = LinearMultiplicity::default();
    for (q, (generic, occurs)) in candidates.into_iter().zip(verdicts) {
        match (generic, occurs) {
            (true, _) => out.generic.push(q),
            (false, true) => out.nongeneric.push(q),
            (false, false) => out.rejected.push(q),
        }
    }
    Ok(out)
}

/// det occurs exactly once in `L_{c,d}(λ)`.
pub fn is_coinvariant_type(lw: &LowestWeight) -> Result<bool> {
    Ok(multiplicity_linear(lw, LinearChar::Det)?.total_count() == 1)
}

/// Occurrences of `σ` indexed by Euler degree after the det-twist: each
/// occurrence at `Q` sits in degree `ΣQ - ΣQ_det`, where `Q_det` is the
/// unique det-filling.
pub fn euler_profile(lw: &LowestWeight, sigma: LinearChar) -> Result<BTreeMap<i64, u64>> {
    let det = multiplicity_linear(lw, LinearChar::Det)?;
    if det.total_count() != 1 {
        return Err(Error::NotCoinvariantType(det.total_count()));
    }
    let base = det.fillings()[0].degree() as i64;
    let mut profile = BTreeMap::new();
    for q in multiplicity_linear(lw, sigma)?.fillings() {
        *profile.entry(q.degree() as i64 - base).or_insert(0) += 1;
    }
    Ok(profile)
}

/// A lowest weight with parameters used for a bound.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Scenario {
    /// `((n), ∅)` at `c = d = (2n+1)/2n`.
    Gordon,
    /// `(shape, ∅)` with `c = t` generic.
    Rectangle { shape: Partition, target: u32 },
    /// `((k, 1^{n-k}), ∅)` at `c = k/n`.
    Hook { k: usize },
}

impl Scenario {
    /// The scenario used for rank `n`.
    pub fn for_rank(n: usize) -> Scenario {
        match n {
            0..=2 => Scenario::Gordon,
            4 => Scenario::Rectangle {
                shape: Partition::new(vec![2, 2]).expect("partition"),
                target: 5,
            },
            6 => Scenario::Rectangle {
                shape: Partition::new(vec![3, 3]).expect("partition"),
                target: 7,
            },
            _ => Scenario::Hook { k: hook_k(n) },
        }
    }

    pub fn lowest_weight(&self, n: usize) -> Result<LowestWeight> {
        let (shape, params): (Partition, Params) = match self {
            Scenario::Gordon => (Partition::new(vec![n as u32])?, gordon_params(n)?),
            Scenario::Rectangle { shape, target } => (shape.clone(), rect_params(shape, *target, n)?),
            Scenario::Hook { k } => {
                let params = hook_params(n, *k)?;
                (Partition::hook(*k as u32, (n - k) as u32), params)
            }
        };
        LowestWeight::new(Bipartition::first(shape), params)
    }
}

impl fmt::Display for Scenario {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scenario::Gordon => write!(f, "gordon"),
            Scenario::Rectangle { shape, target } => write!(f, "rectangle({shape};t={target})"),
            Scenario::Hook { k } => write!(f, "hook(k={k})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub n: usize,
    pub scenario: Scenario,
    pub det_mult: usize,
    pub chi_generic: usize,
    pub chi_total: usize,
    pub coinvariant_type: bool,
    /// `chi_total - (n+1)`, or `chi_generic - (n+1)` for a conservative run.
    pub eps_chi_lower: i64,
    pub theorem_bound: i64,
}

/// Runs a scenario and reports its multiplicities; `eps_chi_lower` is left
/// unset for non-coinvariant-type modules.
pub fn scenario_report(n: usize, scenario: Scenario, conservative: bool) -> Result<BoundReport> {
    let lw = scenario.lowest_weight(n)?;
    let det = multiplicity_linear(&lw, LinearChar::Det)?;
    let chi = multiplicity_linear(&lw, LinearChar::Chi)?;
    let counted = if conservative { chi.generic_count() } else { chi.total_count() };
    Ok(BoundReport {
        n,
        scenario,
        det_mult: det.total_count(),
        chi_generic: chi.generic_count(),
        chi_total: chi.total_count(),
        coinvariant_type: det.total_count() == 1,
        eps_chi_lower: counted as i64 - (n as i64 + 1),
        theorem_bound: theorem_bound(n),
    })
}

/// The `ε_χ` lower bound for rank `n` from the scenario table
/// ([`Scenario::for_rank`]). Fails unless the module is of coinvariant type.
pub fn eps_chi_bound(n: usize, conservative: bool) -> Result<BoundReport> {
    if n == 0 {
        return Err(Error::InvalidParams("rank must be positive".into()));
    }
    let report = scenario_report(n, Scenario::for_rank(n), conservative)?;
    if !report.coinvariant_type {
        return Err(Error::NotCoinvariantType(report.det_mult));
    }
    Ok(report)
}

/// The piecewise lower bound on `ε_χ`: `n(n-4)/4`, `n(n-6)/4` or
/// `(n-1)(n-3)/4` by the residue of `n` mod 4.
pub fn theorem_formula(n: usize) -> i64 {
    let n = n as i64;
    match n % 4 {
        0 => n * (n - 4) / 4,
        2 => n * (n - 6) / 4,
        _ => (n - 1) * (n - 3) / 4,
    }
}

/// The stated lower bound on `ε_χ`: [`theorem_formula`], raised to 1 and 3
/// at `n = 4, 6` and to 0 below rank 4.
pub fn theorem_bound(n: usize) -> i64 {
    match n {
        0..=3 => 0,
        4 => 1,
        6 => 3,
        _ => theorem_formula(n),
    }
}
