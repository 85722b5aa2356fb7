//! Roots of the reduced Bernstein polynomial certified by `(Γ, Λ)`.
//!
//! For `Γ = <v0, v1>` every `λ ∈ Λ \ Γ` gives the root `-λ/(v0 v1)`, and
//! every spectral number `σ < λ1/(v0 v1)` gives `-(σ + 1)`. The remaining
//! spectral numbers, `δ/(v0 v1)` for `δ ∈ G`, contribute one of `-σ` or
//! `-(σ + 1)` and are reported as undetermined pairs. When `G` is empty the
//! root set is complete; those cases are classified and tabulated here.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_integer::Integer;

use crate::differentials::LambdaSet;
use crate::error::{Error, Result};
use crate::semigroup::NumSemigroup;
use crate::spectrum::{partition, spectrum, Spectrum};
use crate::Rat;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Provenance {
    /// `-λ/(v0 v1)` for `λ ∈ Λ \ Γ`.
    FromLambda,
    /// `-(σ + 1)` for `σ ∈ S_{-1}`.
    FromSMinus1,
    /// Read from the classification table.
    FromTable1,
}

impl Provenance {
    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::FromLambda => "FROM_LAMBDA",
            Provenance::FromSMinus1 => "FROM_SMINUS1",
            Provenance::FromTable1 => "FROM_TABLE1",
        }
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Either `-σ` or `-(σ + 1)` is a root; which one depends on more than `Λ`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct UndeterminedPair {
    pub sigma: Rat,
    /// `-σ`
    pub opposite: Rat,
    /// `-(σ + 1)`
    pub shifted: Rat,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootPrediction {
    /// Distinct root values with every source that produced them.
    pub roots: BTreeMap<Rat, BTreeSet<Provenance>>,
    pub complete: bool,
    pub undetermined: Vec<UndeterminedPair>,
}

impl RootPrediction {
    fn new(complete: bool) -> Self {
        Self { roots: BTreeMap::new(), complete, undetermined: Vec::new() }
    }

    fn add(&mut self, root: Rat, from: Provenance) {
        self.roots.entry(root).or_default().insert(from);
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn root_set(&self) -> BTreeSet<Rat> {
        self.roots.keys().cloned().collect()
    }

    pub fn with_provenance(&self, p: Provenance) -> BTreeSet<Rat> {
        self.roots.iter().filter(|(_, src)| src.contains(&p)).map(|(r, _)| r.clone()).collect()
    }

    /// Values produced by more than one source.
    pub fn collisions(&self) -> Vec<Rat> {
        self.roots.iter().filter(|(_, src)| src.len() > 1).map(|(r, _)| r.clone()).collect()
    }
}

fn ratio(num: i64, den: u64) -> Rat {
    Rat::new(num.into(), (den as i64).into())
}

fn one() -> Rat {
    ratio(1, 1)
}

/// Roots certified by `Λ` for a two-generator semigroup.
pub fn predicted_roots(sp: &Spectrum, l: &LambdaSet) -> Result<RootPrediction> {
    if l.semigroup().genus() != 1 {
        return Err(Error::UnsupportedSemigroup(format!(
            "{} has more than two generators",
            l.semigroup()
        )));
    }
    let part = partition(sp, l)?;
    let mut pred = RootPrediction::new(part.s_tilde.is_empty());
    for sigma in &part.s0 {
        pred.add(-sigma.clone(), Provenance::FromLambda);
    }
    for sigma in &part.s_minus1 {
        pred.add(-(sigma.clone() + one()), Provenance::FromSMinus1);
    }
    pred.undetermined = part
        .s_tilde
        .iter()
        .map(|s| UndeterminedPair {
            sigma: s.clone(),
            opposite: -s.clone(),
            shifted: -(s.clone() + one()),
        })
        .collect();
    Ok(pred)
}

/// Whether every spectral number `σ >= λc/(v0 v1)` already lies in `S_0`,
/// i.e. whether the conductor corollary adds nothing beyond `Λ \ Γ`.
pub fn conductor_roots_subsumed(sp: &Spectrum, l: &LambdaSet) -> Result<bool> {
    let part = partition(sp, l)?;
    let threshold = sp.scaled(l.lambda_c() as i64);
    let s0: BTreeSet<&Rat> = part.s0.iter().collect();
    Ok(sp.values().iter().filter(|s| **s >= threshold).all(|s| s0.contains(s)))
}

/// Root prediction for any semigroup this crate can handle: the two-generator
/// case through `Λ`, and `<4, 6, v2>` through the classification table.
pub fn predict(l: &LambdaSet) -> Result<RootPrediction> {
    let gamma = l.semigroup();
    match gamma.genus() {
        1 => {
            let sp = spectrum(gamma.v(0), gamma.v(1))?;
            predicted_roots(&sp, l)
        }
        _ => match classify_g_empty(gamma, l.lambda1()) {
            GEmptyCase::FourSix { v2 } => {
                let row = table1_row(Table1Case::FourSix { v2 })?;
                let mut pred = RootPrediction::new(true);
                for r in row.roots {
                    pred.add(r, Provenance::FromTable1);
                }
                Ok(pred)
            }
            _ => Err(Error::UnsupportedSemigroup(format!(
                "roots are only certified for two generators or <4,6,v2>, got {gamma}"
            ))),
        },
    }
}

/// The situations in which `G` is empty.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GEmptyCase {
    /// `<v0, v1>` with `λ1 = ∞`.
    Quasihomogeneous,
    /// `<v0, v1>` with `λ1 = (v0 - 1) v1 - s v0`, `1 <= s <= [v1/v0] + 1`.
    TailFamily { s: u64 },
    /// `<4, 6, v2>`.
    FourSix { v2: u64 },
    None,
}

pub fn classify_g_empty(gamma: &NumSemigroup, lambda1: Option<u64>) -> GEmptyCase {
    let gens = gamma.generators();
    match (gens, lambda1) {
        ([_, _], None) => GEmptyCase::Quasihomogeneous,
        (&[v0, v1], Some(l1)) => {
            let top = (v0 - 1) * v1;
            if l1 >= top || (top - l1) % v0 != 0 {
                return GEmptyCase::None;
            }
            let s = (top - l1) / v0;
            if (1..=v1 / v0 + 1).contains(&s) {
                GEmptyCase::TailFamily { s }
            } else {
                GEmptyCase::None
            }
        }
        (&[4, 6, v2], _) => GEmptyCase::FourSix { v2 },
        _ => GEmptyCase::None,
    }
}

/// Parameters of a classification-table row.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Table1Case {
    Quasihomogeneous { v0: u64, v1: u64 },
    TailFamily { v0: u64, v1: u64, s: u64 },
    FourSix { v2: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Table1Row {
    pub semigroup: Vec<u64>,
    pub milnor: u64,
    pub lambda1: Option<u64>,
    pub lambda_minus_gamma: BTreeSet<u64>,
    pub tau: u64,
    pub roots: BTreeSet<Rat>,
}

fn two_generator(v0: u64, v1: u64) -> Result<NumSemigroup> {
    if v0 < 2 || v1 <= v0 {
        return Err(Error::BadCase(format!("need 2 <= v0 < v1, got ({v0}, {v1})")));
    }
    if v0.gcd(&v1) != 1 {
        return Err(Error::NotCoprime { v0, v1 });
    }
    NumSemigroup::from_generators(&[v0, v1])
}

pub fn table1_row(case: Table1Case) -> Result<Table1Row> {
    match case {
        Table1Case::Quasihomogeneous { v0, v1 } => {
            let gamma = two_generator(v0, v1)?;
            let n = v0 * v1;
            let mut roots = BTreeSet::new();
            for d in gamma.gaps() {
                let sigma = ratio(d as i64, n);
                roots.insert(-(sigma.clone() + one()));
                roots.insert(-(-sigma + one()));
            }
            Ok(Table1Row {
                semigroup: vec![v0, v1],
                milnor: gamma.milnor(),
                lambda1: None,
                lambda_minus_gamma: BTreeSet::new(),
                tau: gamma.milnor(),
                roots,
            })
        }
        Table1Case::TailFamily { v0, v1, s } => {
            let gamma = two_generator(v0, v1)?;
            if !(1..=v1 / v0 + 1).contains(&s) {
                return Err(Error::BadCase(format!(
                    "s = {s} outside [1, {}] for <{v0},{v1}>",
                    v1 / v0 + 1
                )));
            }
            let lambda1 = match ((v0 - 1) * v1).checked_sub(s * v0) {
                Some(l1) if l1 > v0 + v1 => l1,
                _ => {
                    return Err(Error::BadCase(format!(
                        "s = {s} gives lambda1 = {}v1 - {s}v0 <= v0 + v1, which no branch attains",
                        v0 - 1
                    )));
                }
            };
            let n = v0 * v1;
            let mut roots = BTreeSet::new();
            for d in gamma.gaps() {
                roots.insert(ratio(d as i64 - n as i64, n));
                if d < lambda1 {
                    roots.insert(-(ratio(d as i64, n) + one()));
                }
            }
            for j in 1..=s {
                roots.insert(-ratio(((v0 - 1) * v1 - j * v0) as i64, n));
            }
            Ok(Table1Row {
                semigroup: vec![v0, v1],
                milnor: gamma.milnor(),
                lambda1: Some(lambda1),
                lambda_minus_gamma: (0..s).map(|j| lambda1 + j * v0).collect(),
                tau: gamma.milnor() - s,
                roots,
            })
        }
        Table1Case::FourSix { v2 } => {
            if v2 % 2 == 0 || v2 <= 12 {
                return Err(Error::BadCase(format!("<4,6,v2> needs v2 odd and > 12, got {v2}")));
            }
            let gamma = NumSemigroup::from_generators(&[4, 6, v2])?;
            let mut roots: BTreeSet<Rat> = [5, 7, 11, 13].iter().map(|&i| -ratio(i, 12)).collect();
            for j in (0..v2).filter(|&j| j != 1) {
                roots.insert(-ratio(v2 as i64 + 2 * (j as i64 - 1), 2 * v2));
            }
            Ok(Table1Row {
                semigroup: vec![4, 6, v2],
                milnor: gamma.milnor(),
                lambda1: Some(v2 - 2),
                lambda_minus_gamma: [v2 - 2, v2 + 2].into_iter().collect(),
                tau: v2 + 1,
                roots,
            })
        }
    }
}

/// Bounds on `Σσ - Σε` (the number of roots opposite to spectral numbers).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DesigReport {
    pub lambda_minus_gamma: usize,
    pub g: usize,
    /// Exact `Σσ - Σε` with `ε = -(ρ + 1)`, when the roots are complete.
    pub value: Option<Rat>,
    /// `#(Λ \ Γ) <= value <= #(Λ \ Γ) + #G` (vacuously true without a value).
    pub holds: bool,
}

pub fn desig_check(sp: &Spectrum, l: &LambdaSet, pred: &RootPrediction) -> DesigReport {
    let lo = l.lambda_minus_gamma().len();
    let g = l.g_set_or_empty().len();
    let value = pred.complete.then(|| {
        let sum_eps = pred.roots.keys().fold(ratio(0, 1), |acc, r| acc - r.clone() - one());
        sp.sum() - sum_eps
    });
    let holds = value.as_ref().is_none_or(|v| {
        *v >= ratio(lo as i64, 1) && *v <= ratio((lo + g) as i64, 1)
    });
    DesigReport { lambda_minus_gamma: lo, g, value, holds }
}
