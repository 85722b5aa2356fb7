//! Serializable reports. Rationals are canonical `p/q` strings and sets are
//! sorted arrays, so a report survives a JSON round trip exactly.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::bernstein::{
    classify_g_empty, conductor_roots_subsumed, desig_check, predict, table1_row, GEmptyCase,
    Provenance, RootPrediction, Table1Case, Table1Row,
};
use crate::branch::{f1_of, puiseux, BranchEquation, Parameterization};
use crate::differentials::{dim_lower_bound, LambdaSet};
use crate::error::Error;
use crate::semigroup::NumSemigroup;
use crate::spectrum::{partition, spectrum};
use crate::{Rat, Series};

pub fn rat(r: &Rat) -> String {
    r.to_string()
}

fn rats<'a>(xs: impl IntoIterator<Item = &'a Rat>) -> Vec<String> {
    xs.into_iter().map(rat).collect()
}

/// `x2` as a re-parseable sum without the `O(T^N)` tail.
pub fn series_terms(s: &Series) -> String {
    let mut out = String::new();
    for (k, c) in s.support() {
        let neg = *c < Rat::from_integer(0.into());
        let mag = if neg { -c.clone() } else { c.clone() };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let one = mag == Rat::from_integer(1.into());
        match (k, one) {
            (0, _) => write!(out, "{mag}").unwrap(),
            (_, true) => write!(out, "T^{k}").unwrap(),
            (_, false) => write!(out, "{mag}*T^{k}").unwrap(),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub input: InputBlock,
    pub semigroup: SemigroupBlock,
    pub lambda: LambdaBlock,
    pub spectrum: Option<SpectrumBlock>,
    pub bernstein: BernsteinBlock,
    pub meta: MetaBlock,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputBlock {
    /// `parameterization` or `equation`.
    pub kind: String,
    pub v0: Option<u64>,
    pub x2: Option<String>,
    pub poly: Option<String>,
    pub equation: Option<EquationBlock>,
    pub parameterization: ParamBlock,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquationBlock {
    pub normalized: String,
    /// `[u, w]`: the normalized equation is proportional to `f(u X1, w X2)`.
    pub scaling: Vec<String>,
    pub f1: String,
    /// Value of `f1` on the branch; `None` when `f1 = 0`.
    pub nu_f1: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamBlock {
    pub x1: String,
    pub x2: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemigroupBlock {
    pub generators: Vec<u64>,
    pub char_exponents: Vec<u64>,
    pub gcd_chain: Vec<u64>,
    pub n: Vec<u64>,
    pub genus: usize,
    pub conductor: u64,
    pub milnor: u64,
    pub gaps: Vec<u64>,
}

impl SemigroupBlock {
    pub fn new(s: &NumSemigroup) -> Self {
        Self {
            generators: s.generators().to_vec(),
            char_exponents: s.char_exponents(),
            gcd_chain: s.e().to_vec(),
            n: s.n().to_vec(),
            genus: s.genus(),
            conductor: s.conductor(),
            milnor: s.milnor(),
            gaps: s.gaps(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LambdaBlock {
    /// `Λ ∩ [1, c - 1]`.
    pub below_conductor: Vec<u64>,
    pub lambda_minus_gamma: Vec<u64>,
    pub lambda1: Option<u64>,
    pub lambda0: Option<u64>,
    pub lambda_c: u64,
    pub g: Vec<u64>,
    pub tau: u64,
}

impl LambdaBlock {
    pub fn new(l: &LambdaSet) -> Self {
        Self {
            below_conductor: l.small().iter().copied().collect(),
            lambda_minus_gamma: l.lambda_minus_gamma().iter().copied().collect(),
            lambda1: l.lambda1(),
            lambda0: l.lambda0(),
            lambda_c: l.lambda_c(),
            g: l.g_set_or_empty().into_iter().collect(),
            tau: l.tjurina(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumBlock {
    pub values: Vec<String>,
    pub s_minus1: Vec<String>,
    pub s_tilde: Vec<String>,
    pub s0: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootEntry {
    pub value: String,
    pub provenance: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairEntry {
    pub sigma: String,
    pub opposite: String,
    pub shifted: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DesigBlock {
    pub lower: usize,
    pub upper: usize,
    pub value: Option<String>,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BernsteinBlock {
    /// `OK` or an error code such as `UNSUPPORTED_SEMIGROUP`.
    pub status: String,
    pub message: Option<String>,
    pub roots: Vec<RootEntry>,
    pub undetermined: Vec<PairEntry>,
    pub complete: Option<bool>,
    pub collisions: Vec<String>,
    /// Which empty-`G` family the branch falls into, if any.
    pub g_empty_case: Option<String>,
    pub desig: Option<DesigBlock>,
    pub dim_lower_bound: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MetaBlock {
    pub precision: usize,
    pub required_precision: usize,
    pub default_precision: usize,
    pub warnings: Vec<String>,
    /// Internal consistency checks that failed; non-empty means a bug.
    pub failed_checks: Vec<String>,
    pub version: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table1Report {
    pub case: String,
    pub semigroup: Vec<u64>,
    pub milnor: u64,
    pub lambda1: Option<u64>,
    pub lambda_minus_gamma: Vec<u64>,
    pub tau: u64,
    pub roots: Vec<String>,
}

impl Table1Report {
    pub fn new(case: Table1Case, row: &Table1Row) -> Self {
        let case = match case {
            Table1Case::Quasihomogeneous { v0, v1 } => format!("1 (v0={v0}, v1={v1})"),
            Table1Case::TailFamily { v0, v1, s } => format!("2 (v0={v0}, v1={v1}, s={s})"),
            Table1Case::FourSix { v2 } => format!("3 (v2={v2})"),
        };
        Self {
            case,
            semigroup: row.semigroup.clone(),
            milnor: row.milnor,
            lambda1: row.lambda1,
            lambda_minus_gamma: row.lambda_minus_gamma.iter().copied().collect(),
            tau: row.tau,
            roots: rats(&row.roots),
        }
    }
}

fn g_empty_label(case: GEmptyCase) -> Option<String> {
    match case {
        GEmptyCase::Quasihomogeneous => Some("QUASIHOMOGENEOUS".into()),
        GEmptyCase::TailFamily { s } => Some(format!("TAIL_FAMILY s={s}")),
        GEmptyCase::FourSix { v2 } => Some(format!("FOUR_SIX v2={v2}")),
        GEmptyCase::None => None,
    }
}

fn table1_case_for(gamma: &NumSemigroup, case: GEmptyCase) -> Option<Table1Case> {
    let gens = gamma.generators();
    match case {
        GEmptyCase::Quasihomogeneous => Some(Table1Case::Quasihomogeneous { v0: gens[0], v1: gens[1] }),
        GEmptyCase::TailFamily { s } => Some(Table1Case::TailFamily { v0: gens[0], v1: gens[1], s }),
        GEmptyCase::FourSix { v2 } => Some(Table1Case::FourSix { v2 }),
        GEmptyCase::None => None,
    }
}

fn roots_block(pred: &RootPrediction) -> Vec<RootEntry> {
    pred.roots
        .iter()
        .map(|(r, src)| RootEntry {
            value: rat(r),
            provenance: src.iter().map(|p| p.as_str().to_string()).collect(),
        })
        .collect()
}

/// How the branch was supplied.
pub struct Source<'a> {
    pub v0: Option<u64>,
    pub x2: Option<&'a str>,
    pub poly: Option<&'a str>,
    pub equation: Option<&'a BranchEquation>,
}

/// Assembles every block and runs the internal consistency checks.
pub fn build_report(
    src: Source<'_>,
    p: &Parameterization,
    l: &LambdaSet,
    warnings: Vec<String>,
) -> AnalysisReport {
    let gamma = p.semigroup();
    let mut failed: Vec<String> = l.violations();
    if l.tjurina() + l.lambda_minus_gamma().len() as u64 != gamma.milnor() {
        failed.push("tau + #(Lambda \\ Gamma) != mu".into());
    }

    let equation = src.equation.map(|eq| {
        let f1 = f1_of(eq);
        let mu = gamma.milnor();
        // nu(f1) = mu - 1 + lambda1 can lie past the working precision
        let nu_f1 = l.lambda1().filter(|_| !f1.is_zero()).and_then(|l1| {
            let expected = mu - 1 + l1;
            let deep = puiseux(eq, (mu + l1) as usize).ok()?;
            let nu = deep.value(&f1).ok()?.finite().map(|o| o as u64);
            if nu != Some(expected) {
                failed.push(format!("nu(f1) = {nu:?} but mu - 1 + lambda1 = {expected}"));
            }
            nu
        });
        if !eq.poly().eval(p.x1(), p.x2()).is_ok_and(|r| r.is_zero()) {
            failed.push("lifted parameterization does not annihilate the equation".into());
        }
        EquationBlock {
            normalized: eq.poly().to_string(),
            scaling: vec![rat(&eq.scaling().0), rat(&eq.scaling().1)],
            f1: f1.to_string(),
            nu_f1,
        }
    });

    let spectrum_block = (gamma.genus() == 1).then(|| {
        let sp = spectrum(gamma.v(0), gamma.v(1)).expect("two coprime generators");
        let part = partition(&sp, l).expect("same semigroup");
        let sizes = part.s_minus1.len() + part.s_tilde.len() + part.s0.len();
        if sizes != sp.len() {
            failed.push(format!("partition sizes add to {sizes}, spectrum has {}", sp.len()));
        }
        if let Some(l1) = l.lambda1() {
            let expected = sp.len() / 2 + gamma.gaps().iter().filter(|&&d| d < l1).count();
            if part.s_minus1.len() != expected {
                failed.push(format!("#S_-1 = {} but expected {expected}", part.s_minus1.len()));
            }
        }
        if !conductor_roots_subsumed(&sp, l).unwrap_or(false) {
            failed.push("spectral numbers above lambda_c/(v0 v1) are not all in S_0".into());
        }
        SpectrumBlock {
            values: rats(sp.values()),
            s_minus1: rats(&part.s_minus1),
            s_tilde: rats(&part.s_tilde),
            s0: rats(&part.s0),
        }
    });

    let case = classify_g_empty(gamma, l.lambda1());
    let bound = dim_lower_bound(gamma);
    let bernstein = match predict(l) {
        Ok(pred) => {
            let desig = (gamma.genus() == 1).then(|| {
                let sp = spectrum(gamma.v(0), gamma.v(1)).expect("two coprime generators");
                let d = desig_check(&sp, l, &pred);
                if !d.holds {
                    failed.push("sum of spectral numbers minus sum of shifted roots out of bounds".into());
                }
                DesigBlock { lower: d.lambda_minus_gamma, upper: d.lambda_minus_gamma + d.g, value: d.value.as_ref().map(rat), holds: d.holds }
            });
            if pred.complete {
                if let Some(row) = table1_case_for(gamma, case).and_then(|c| table1_row(c).ok()) {
                    if row.roots != pred.root_set() {
                        failed.push("predicted roots disagree with the classification table".into());
                    }
                    if row.tau != l.tjurina() {
                        failed.push("tau disagrees with the classification table".into());
                    }
                }
            }
            BernsteinBlock {
                status: "OK".into(),
                message: None,
                roots: roots_block(&pred),
                undetermined: pred
                    .undetermined
                    .iter()
                    .map(|u| PairEntry { sigma: rat(&u.sigma), opposite: rat(&u.opposite), shifted: rat(&u.shifted) })
                    .collect(),
                complete: Some(pred.complete),
                collisions: rats(&pred.collisions()),
                g_empty_case: g_empty_label(case),
                desig,
                dim_lower_bound: rat(&bound),
            }
        }
        Err(e) => BernsteinBlock {
            status: e.code().into(),
            message: Some(e.to_string()),
            roots: vec![],
            undetermined: vec![],
            complete: None,
            collisions: vec![],
            g_empty_case: g_empty_label(case),
            desig: None,
            dim_lower_bound: rat(&bound),
        },
    };

    AnalysisReport {
        input: InputBlock {
            kind: if src.poly.is_some() { "equation" } else { "parameterization" }.into(),
            v0: src.v0,
            x2: src.x2.map(str::to_string),
            poly: src.poly.map(str::to_string),
            equation,
            parameterization: ParamBlock { x1: format!("T^{}", p.v0()), x2: series_terms(p.x2()) },
        },
        semigroup: SemigroupBlock::new(gamma),
        lambda: LambdaBlock::new(l),
        spectrum: spectrum_block,
        bernstein,
        meta: MetaBlock {
            precision: p.precision(),
            required_precision: p.required_precision(),
            default_precision: p.default_precision(),
            warnings,
            failed_checks: failed,
            version: env!("CARGO_PKG_VERSION").into(),
        },
    }
}

/// JSON with keys sorted at every level.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("report serializes");
    let mut s = serde_json::to_string_pretty(&v).expect("value serializes");
    s.push('\n');
    s
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

fn opt<T: ToString>(x: &Option<T>) -> String {
    x.as_ref().map_or_else(|| "inf".to_string(), ToString::to_string)
}

pub fn to_text(r: &AnalysisReport) -> String {
    let mut o = String::new();
    let s = &r.semigroup;
    let l = &r.lambda;
    let b = &r.bernstein;
    if let Some(eq) = &r.input.equation {
        writeln!(o, "equation        {}", eq.normalized).unwrap();
        writeln!(o, "scaling         X1 -> {} X1, X2 -> {} X2", eq.scaling[0], eq.scaling[1]).unwrap();
    }
    writeln!(o, "branch          ({}, {})", r.input.parameterization.x1, r.input.parameterization.x2).unwrap();
    writeln!(o, "semigroup       <{}>", join(&s.generators)).unwrap();
    writeln!(o, "char exponents  ({})", join(&s.char_exponents)).unwrap();
    writeln!(o, "conductor       {}", s.conductor).unwrap();
    writeln!(o, "milnor          {}", s.milnor).unwrap();
    writeln!(o, "Lambda \\ Gamma  {{{}}}", join(&l.lambda_minus_gamma)).unwrap();
    writeln!(o, "lambda1         {}", opt(&l.lambda1)).unwrap();
    writeln!(o, "lambda_c        {}", l.lambda_c).unwrap();
    writeln!(o, "G               {{{}}}", join(&l.g)).unwrap();
    writeln!(o, "tau             {}", l.tau).unwrap();
    if let Some(sp) = &r.spectrum {
        writeln!(o, "spectrum        {} values, S_-1 {}, S~ {}, S_0 {}", sp.values.len(), sp.s_minus1.len(), sp.s_tilde.len(), sp.s0.len()).unwrap();
    }
    writeln!(o, "mu - tau bound  {}", b.dim_lower_bound).unwrap();
    if b.status == "OK" {
        writeln!(o, "roots           {} ({})", b.roots.len(), if b.complete == Some(true) { "complete" } else { "partial" }).unwrap();
        for root in &b.roots {
            writeln!(o, "  {:>10}  {}", root.value, root.provenance.join(",")).unwrap();
        }
        for u in &b.undetermined {
            writeln!(o, "  {:>10}  or {}  (sigma = {})", u.opposite, u.shifted, u.sigma).unwrap();
        }
    } else {
        writeln!(o, "roots           {}: {}", b.status, b.message.as_deref().unwrap_or("")).unwrap();
    }
    if let Some(case) = &b.g_empty_case {
        writeln!(o, "G empty case    {case}").unwrap();
    }
    writeln!(o, "precision       {}", r.meta.precision).unwrap();
    for w in &r.meta.warnings {
        writeln!(o, "warning         {w}").unwrap();
    }
    for f in &r.meta.failed_checks {
        writeln!(o, "FAILED CHECK    {f}").unwrap();
    }
    o
}

pub fn table1_text(r: &Table1Report) -> String {
    let mut o = String::new();
    writeln!(o, "case            {}", r.case).unwrap();
    writeln!(o, "semigroup       <{}>", join(&r.semigroup)).unwrap();
    writeln!(o, "milnor          {}", r.milnor).unwrap();
    writeln!(o, "lambda1         {}", opt(&r.lambda1)).unwrap();
    writeln!(o, "Lambda \\ Gamma  {{{}}}", join(&r.lambda_minus_gamma)).unwrap();
    writeln!(o, "tau             {}", r.tau).unwrap();
    writeln!(o, "roots           {}", r.roots.len()).unwrap();
    writeln!(o, "  {}", r.roots.join(" ")).unwrap();
    o
}

/// One strata sweep row.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrataRow {
    pub a: Vec<String>,
    pub lambda_minus_gamma: Vec<u64>,
    pub tau: u64,
    pub from_lambda: Vec<String>,
    pub g: Vec<u64>,
}

impl StrataRow {
    pub fn new(a: &[Rat], l: &LambdaSet) -> Result<Self, Error> {
        let pred = predict(l)?;
        Ok(Self {
            a: rats(a),
            lambda_minus_gamma: l.lambda_minus_gamma().iter().copied().collect(),
            tau: l.tjurina(),
            from_lambda: rats(&pred.with_provenance(Provenance::FromLambda)),
            g: l.g_set_or_empty().into_iter().collect(),
        })
    }
}

fn space_list<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

pub fn strata_csv(n_coeffs: usize, rows: &[StrataRow]) -> String {
    let mut o = String::new();
    let heads: Vec<String> = (1..=n_coeffs).map(|i| format!("a{i}")).collect();
    writeln!(o, "{},lambda_minus_gamma,tau,from_lambda,g", heads.join(",")).unwrap();
    for r in rows {
        writeln!(
            o,
            "{},{},{},{},{}",
            r.a.join(","),
            space_list(&r.lambda_minus_gamma),
            r.tau,
            space_list(&r.from_lambda),
            space_list(&r.g)
        )
        .unwrap();
    }
    o
}

/// Distinct values, sorted; used by tests comparing root sets.
pub fn parse_rats(xs: &[String]) -> BTreeSet<Rat> {
    xs.iter().map(|s| s.parse().expect("canonical rational")).collect()
}
